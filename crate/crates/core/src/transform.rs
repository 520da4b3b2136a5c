//! Constructive parsing transforms.
//!
//! [`overlap_to_nonoverlap_parsing`] rewrites the greedy LZ parsing into a
//! valid novLZ-type parsing by splitting every phrase whose only earlier
//! occurrences overlap it. Such a phrase is periodic (an overlapping
//! occurrence at distance `p` forces period `p`), so it can be cut into
//! doubling pieces, each of which has a non-overlapping copy immediately to
//! its left.
//!
//! [`triples_to_pairs_parsing`] splits each phrase of a triple parsing into
//! its referenced part plus an explicit letter, yielding a pair-type parsing
//! of size at most `2 * z3 - 1`.

use crate::error::{Error, Result};
use crate::greedy::parse_greedy;
use crate::index::OccurrenceIndex;
use crate::parsing::{Parsing, Phrase};
use crate::text::Text;
use crate::variant::{Overlap, Shape, Variant};

/// Threshold coefficient for the near/far split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformConfig {
    pub alpha: f64,
}

impl TransformConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidParams(format!(
                "alpha must be in (0,1), got {alpha}"
            )));
        }
        Ok(TransformConfig { alpha })
    }
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig { alpha: 0.5 }
    }
}

/// `max(1, floor(alpha * log_sigma(z)))`; 1 for degenerate `z` or `sigma`.
fn threshold(alpha: f64, sigma: u32, z: usize) -> usize {
    if sigma < 2 || z <= 1 {
        return 1;
    }
    let k = (alpha * (z as f64).ln() / (sigma as f64).ln()).floor() as usize;
    k.max(1)
}

pub fn overlap_to_nonoverlap_parsing(text: &Text, cfg: &TransformConfig) -> Parsing {
    let syms = text.symbols();
    let lz = parse_greedy(text, Variant::LZ);
    let k = threshold(cfg.alpha, text.sigma(), lz.size());
    let index = OccurrenceIndex::build(syms);

    let mut phrases: Vec<Phrase> = Vec::with_capacity(lz.size());
    for f in &lz.phrases {
        let (b, len) = (f.start, f.len);
        let Some(j) = f.source else {
            phrases.push(*f); // fresh letter
            continue;
        };
        if j + len - 1 < b {
            // The leftmost occurrence already ends before the phrase; if it
            // overlapped, no non-overlapping occurrence could exist at all.
            phrases.push(*f);
            continue;
        }
        let p = b - j; // period of the phrase
        if j + k < b {
            // Far branch: pieces of length p, 2p, 4p, ... each occur one
            // piece-length to the left, inside the periodic region.
            push_doubling_pieces(&mut phrases, b, len, p);
        } else {
            let c = k / p; // >= 1 because p <= k here
            let head = c * p;
            if head >= len {
                push_letters(&mut phrases, syms, b, len);
            } else {
                // Head piece of length c*p keeps the parsing aligned to a
                // multiple of the period; it may or may not have its own
                // earlier non-overlapping occurrence.
                match index.min_end_of(&syms[b - 1..b - 1 + head]) {
                    Some(end) if end < b => {
                        phrases.push(Phrase::copy(b, head, end + 1 - head));
                    }
                    _ => push_letters(&mut phrases, syms, b, head),
                }
                push_doubling_pieces(&mut phrases, b + head, len - head, head);
            }
        }
    }
    Parsing::new(Variant::NOV_LZ, phrases, syms.len())
}

fn push_doubling_pieces(phrases: &mut Vec<Phrase>, start: usize, len: usize, first: usize) {
    let mut pos = start;
    let mut remaining = len;
    let mut slot = first;
    while remaining > 0 {
        let piece = remaining.min(slot);
        phrases.push(Phrase::copy(pos, piece, pos - slot));
        pos += piece;
        remaining -= piece;
        slot *= 2;
    }
}

fn push_letters(phrases: &mut Vec<Phrase>, syms: &[u32], start: usize, len: usize) {
    for t in 0..len {
        phrases.push(Phrase::literal(start + t, syms[start - 1 + t]));
    }
}

/// Splits the greedy triple parsing (LZ3 when `overlap` is `Allowed`,
/// novLZ3 otherwise) into a pair-type parsing: referenced part, then the
/// trailing letter as its own phrase.
pub fn triples_to_pairs_parsing(text: &Text, overlap: Overlap) -> Parsing {
    let base = parse_greedy(
        text,
        Variant {
            shape: Shape::Triples,
            overlap,
        },
    );
    let mut phrases = Vec::with_capacity(2 * base.size());
    for f in &base.phrases {
        match (f.source, f.trailing_literal) {
            (None, lit) => {
                let c = lit.expect("greedy literal phrases carry their symbol");
                phrases.push(Phrase::literal(f.start, c));
            }
            (Some(j), Some(c)) => {
                phrases.push(Phrase::copy(f.start, f.len - 1, j));
                phrases.push(Phrase::literal(f.start + f.len - 1, c));
            }
            (Some(j), None) => phrases.push(Phrase::copy(f.start, f.len, j)),
        }
    }
    Parsing::new(
        Variant {
            shape: Shape::Pairs,
            overlap,
        },
        phrases,
        text.len(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_thue_morse;
    use crate::parsing::dot_notation_of;
    use crate::reconstruct::reconstruct;
    use crate::validate::validate_parsing;

    fn assert_sound_novlz(text: &Text, parsing: &Parsing) {
        assert_eq!(validate_parsing(text, parsing, Variant::NOV_LZ), Ok(true));
        assert_eq!(&reconstruct(parsing, text.sigma()).unwrap(), text);
    }

    #[test]
    fn worked_example_far_branch() {
        let text = Text::from_letters("abababc");
        let cfg = TransformConfig::new(0.5).unwrap();
        let out = overlap_to_nonoverlap_parsing(&text, &cfg);
        assert_eq!(dot_notation_of(&out, &text), "a.b.ab.ab.c");
        assert_eq!(out.size(), 5);
        assert_sound_novlz(&text, &out);
    }

    #[test]
    fn overlap_free_text_is_left_untouched() {
        let text = gen_thue_morse(64);
        let out = overlap_to_nonoverlap_parsing(&text, &TransformConfig::default());
        let lz = parse_greedy(&text, Variant::LZ);
        assert_eq!(out.phrases, lz.phrases);
        assert_sound_novlz(&text, &out);
    }

    #[test]
    fn unary_text_near_branch() {
        let text = Text::from_letters("aaaa");
        let out = overlap_to_nonoverlap_parsing(&text, &TransformConfig::default());
        assert_sound_novlz(&text, &out);
        let greedy_nov = parse_greedy(&text, Variant::NOV_LZ);
        assert_eq!(greedy_nov.size(), 3); // a.a.aa
        assert!(out.size() >= greedy_nov.size());
    }

    #[test]
    fn transform_never_beats_greedy() {
        for input in ["aabaabb", "ababbbb", "aabaaaaabb", "abcabcabcabc", "aaaaaaaaaaaaaaaa"] {
            let text = Text::from_letters(input);
            let out = overlap_to_nonoverlap_parsing(&text, &TransformConfig::default());
            assert_sound_novlz(&text, &out);
            assert!(out.size() >= parse_greedy(&text, Variant::NOV_LZ).size());
        }
    }

    #[test]
    fn empty_text_transforms_to_empty() {
        let text = Text::from_letters("");
        let out = overlap_to_nonoverlap_parsing(&text, &TransformConfig::default());
        assert_eq!(out.size(), 0);
    }

    #[test]
    fn triples_split_worked_example() {
        let text = Text::from_letters("abababc");
        let out = triples_to_pairs_parsing(&text, Overlap::Allowed);
        assert_eq!(dot_notation_of(&out, &text), "a.b.abab.c");
        assert_eq!(out.size(), 4);
        assert_eq!(validate_parsing(&text, &out, Variant::LZ), Ok(true));
    }

    #[test]
    fn triples_split_single_letter() {
        let text = Text::from_letters("a");
        let out = triples_to_pairs_parsing(&text, Overlap::Allowed);
        assert_eq!(out.size(), 1);
    }

    #[test]
    fn triples_split_nov_variant_bound() {
        let text = Text::from_letters("aabaaaaabb");
        let base = parse_greedy(&text, Variant::NOV_LZ3);
        assert_eq!(base.size(), 4); // a.ab.aaa.aabb
        let out = triples_to_pairs_parsing(&text, Overlap::Forbidden);
        assert!(out.size() < 2 * base.size());
        assert_eq!(validate_parsing(&text, &out, Variant::NOV_LZ), Ok(true));
        assert_eq!(&reconstruct(&out, text.sigma()).unwrap(), &text);
    }

    #[test]
    fn rejects_bad_alpha() {
        assert!(TransformConfig::new(0.0).is_err());
        assert!(TransformConfig::new(1.0).is_err());
        assert!(TransformConfig::new(0.9).is_ok());
    }
}
