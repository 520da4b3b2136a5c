//! Greedy construction of the four parsings.
//!
//! All four variants reduce to the same scan: at the current position `i`,
//! find the longest prefix of the remaining text that occurs earlier under
//! the variant's position constraint, then cut a phrase. The occurrence test
//! and the leftmost source both come from the suffix automaton's earliest
//! occurrence ends, so the whole parse is linear after the O(n) build.

use crate::index::{OccurrenceIndex, ROOT};
use crate::parsing::{Parsing, Phrase};
use crate::text::Text;
use crate::variant::{Overlap, Shape, Variant};

/// Greedy parsing of `text` under `variant`. Copy phrases record the
/// leftmost admissible source position.
pub fn parse_greedy(text: &Text, variant: Variant) -> Parsing {
    let index = OccurrenceIndex::build(text.symbols());
    parse_with_index(text, variant, &index)
}

/// All four greedy parsings, sharing one index build. Order follows
/// [`Variant::ALL`].
pub fn parse_all_greedy(text: &Text) -> [Parsing; 4] {
    let index = OccurrenceIndex::build(text.symbols());
    Variant::ALL.map(|v| parse_with_index(text, v, &index))
}

fn parse_with_index(text: &Text, variant: Variant, index: &OccurrenceIndex) -> Parsing {
    let syms = text.symbols();
    let n = syms.len();
    let mut phrases = Vec::new();
    let mut i = 1usize; // 1-based position of the next phrase
    while i <= n {
        // Longest prefix of syms[i-1..] whose occurrence satisfies the
        // variant's constraint, with the state that spells it.
        let mut matched = 0usize;
        let mut state = ROOT;
        while i + matched <= n {
            let next = index
                .step(state, syms[i + matched - 1])
                .expect("every factor of the text is in its automaton");
            let len = matched + 1;
            let min_end = index.min_end(next);
            let admissible = match variant.overlap {
                // Leftmost occurrence must start before i (may overlap).
                Overlap::Allowed => min_end < i + len - 1,
                // Leftmost occurrence must end before i.
                Overlap::Forbidden => min_end < i,
            };
            if !admissible {
                break;
            }
            state = next;
            matched = len;
        }
        let source = |len: usize| index.min_end(state) + 1 - len;
        let phrase = match variant.shape {
            Shape::Pairs => {
                if matched == 0 {
                    Phrase::literal(i, syms[i - 1])
                } else {
                    Phrase::copy(i, matched, source(matched))
                }
            }
            Shape::Triples => {
                let remaining = n - i + 1;
                if matched == remaining {
                    // Text ended while the extension condition still held:
                    // the whole tail is the reference, no trailing letter.
                    Phrase::copy(i, matched, source(matched))
                } else {
                    Phrase {
                        start: i,
                        len: matched + 1,
                        source: (matched > 0).then(|| source(matched)),
                        trailing_literal: Some(syms[i + matched - 1]),
                    }
                }
            }
        };
        i += phrase.len;
        phrases.push(phrase);
    }
    Parsing::new(variant, phrases, n)
}
