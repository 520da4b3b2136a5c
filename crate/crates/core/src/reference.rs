//! Deliberately naive parser used as the correctness oracle for
//! [`parse_greedy`](crate::greedy::parse_greedy). It scans every earlier
//! position at every phrase boundary and must agree with the fast parser
//! bit for bit, including the leftmost-source choice. Quadratic and proud.

use crate::error::{Error, Result};
use crate::parsing::{Parsing, Phrase};
use crate::text::Text;
use crate::variant::{Overlap, Shape, Variant};

/// Largest input `parse_reference` accepts.
pub const REFERENCE_GUARD: usize = 100_000;

pub fn parse_reference(text: &Text, variant: Variant) -> Result<Parsing> {
    parse_reference_with_guard(text, variant, REFERENCE_GUARD)
}

pub fn parse_reference_with_guard(
    text: &Text,
    variant: Variant,
    guard: usize,
) -> Result<Parsing> {
    let syms = text.symbols();
    let n = syms.len();
    if n > guard {
        return Err(Error::SizeLimit { n, limit: guard });
    }

    let mut phrases = Vec::new();
    let mut i = 1usize;
    while i <= n {
        // For each candidate source j < i, the usable match length: plain
        // common extension when overlaps are allowed, additionally capped at
        // i - j when the occurrence must end before i.
        let mut longest = 0usize;
        let mut leftmost = 0usize;
        for j in 1..i {
            let mut l = 0usize;
            while i + l <= n && syms[j - 1 + l] == syms[i - 1 + l] {
                l += 1;
            }
            let usable = match variant.overlap {
                Overlap::Allowed => l,
                Overlap::Forbidden => l.min(i - j),
            };
            if usable > longest {
                longest = usable;
                leftmost = j;
            }
        }

        let phrase = match variant.shape {
            Shape::Pairs => {
                if longest == 0 {
                    Phrase::literal(i, syms[i - 1])
                } else {
                    Phrase::copy(i, longest, leftmost)
                }
            }
            Shape::Triples => {
                let remaining = n - i + 1;
                if longest == remaining {
                    Phrase::copy(i, longest, leftmost)
                } else {
                    Phrase {
                        start: i,
                        len: longest + 1,
                        source: (longest > 0).then_some(leftmost),
                        trailing_literal: Some(syms[i + longest - 1]),
                    }
                }
            }
        };
        i += phrase.len;
        phrases.push(phrase);
    }
    Ok(Parsing::new(variant, phrases, n))
}
