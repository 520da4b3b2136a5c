//! Checks a phrase sequence against the four parsing-type definitions.
//!
//! Validation is existence-based: a phrase is judged by whether the text
//! contains an occurrence satisfying the type's position constraint, not by
//! the source position the phrase happens to record. This is what makes
//! cross-type questions meaningful ("is this LZ parsing also novLZ-type?").

use crate::error::{Error, Result};
use crate::index::OccurrenceIndex;
use crate::parsing::Parsing;
use crate::text::Text;
use crate::variant::{Overlap, Shape, Variant};

/// `Ok(true)` iff every phrase satisfies `ty`'s definition. A parsing that
/// does not tile the text is a structural error, not a `false`.
pub fn validate_parsing(text: &Text, parsing: &Parsing, ty: Variant) -> Result<bool> {
    if parsing.text_len != text.len() {
        return Err(Error::BrokenTiling(format!(
            "parsing covers {} symbols, text has {}",
            parsing.text_len,
            text.len()
        )));
    }
    if !parsing.is_tiling() {
        return Err(Error::BrokenTiling(
            "phrases do not cover the text contiguously".into(),
        ));
    }

    let syms = text.symbols();
    let index = OccurrenceIndex::build(syms);
    for p in &parsing.phrases {
        if p.len == 1 {
            // A single letter is valid under all four definitions (for
            // triples, the referenced prefix is empty).
            continue;
        }
        let (needle, latest_end) = match ty.shape {
            // The phrase itself must occur no later than the allowed bound.
            Shape::Pairs => {
                let needle = &syms[p.start - 1..p.end()];
                let bound = match ty.overlap {
                    Overlap::Allowed => p.end() - 1,
                    Overlap::Forbidden => p.start - 1,
                };
                (needle, bound)
            }
            // Only the phrase minus its last letter needs an occurrence.
            Shape::Triples => {
                let needle = &syms[p.start - 1..p.end() - 1];
                let bound = match ty.overlap {
                    Overlap::Allowed => p.end() - 2,
                    Overlap::Forbidden => p.start - 1,
                };
                (needle, bound)
            }
        };
        let earliest = index
            .min_end_of(needle)
            .expect("phrase content is a factor of the text");
        if earliest > latest_end {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::parse_greedy;
    use crate::parsing::Phrase;

    fn naive_validate(text: &Text, parsing: &Parsing, ty: Variant) -> bool {
        let syms = text.symbols();
        parsing.phrases.iter().all(|p| {
            if p.len == 1 {
                return true;
            }
            let (needle, bound) = match ty.shape {
                Shape::Pairs => (
                    &syms[p.start - 1..p.end()],
                    match ty.overlap {
                        Overlap::Allowed => p.end() - 1,
                        Overlap::Forbidden => p.start - 1,
                    },
                ),
                Shape::Triples => (
                    &syms[p.start - 1..p.end() - 1],
                    match ty.overlap {
                        Overlap::Allowed => p.end() - 2,
                        Overlap::Forbidden => p.start - 1,
                    },
                ),
            };
            (0..syms.len()).any(|b| {
                b + needle.len() <= bound && syms[b..b + needle.len()] == *needle
            })
        })
    }

    #[test]
    fn worked_example_cross_type() {
        let text = Text::from_letters("abababc");
        let lz = parse_greedy(&text, Variant::LZ);
        assert_eq!(validate_parsing(&text, &lz, Variant::LZ), Ok(true));
        // "abab" only occurs earlier overlapping itself.
        assert_eq!(validate_parsing(&text, &lz, Variant::NOV_LZ), Ok(false));
    }

    #[test]
    fn single_letters_valid_under_all_types() {
        let text = Text::from_letters("ab");
        let p = Parsing::new(
            Variant::LZ,
            vec![Phrase::literal(1, 0), Phrase::literal(2, 1)],
            2,
        );
        for ty in Variant::ALL {
            assert_eq!(validate_parsing(&text, &p, ty), Ok(true));
        }
    }

    #[test]
    fn tiling_violation_is_an_error() {
        let text = Text::from_letters("ab");
        let p = Parsing::new(Variant::LZ, vec![Phrase::literal(1, 0)], 2);
        assert!(matches!(
            validate_parsing(&text, &p, Variant::LZ),
            Err(Error::BrokenTiling(_))
        ));
    }

    #[test]
    fn greedy_parsings_validate_as_their_own_type() {
        for input in ["abababc", "aabaabb", "aaaa", "abcabcabge", "a"] {
            let text = Text::from_letters(input);
            for v in Variant::ALL {
                let p = parse_greedy(&text, v);
                assert_eq!(validate_parsing(&text, &p, v), Ok(true), "{input} {v}");
            }
        }
    }

    #[test]
    fn agrees_with_naive_validator() {
        for input in ["abababc", "aabaaaaabb", "ababbbb", "aaaaaa"] {
            let text = Text::from_letters(input);
            for produced in Variant::ALL {
                let p = parse_greedy(&text, produced);
                for ty in Variant::ALL {
                    assert_eq!(
                        validate_parsing(&text, &p, ty).unwrap(),
                        naive_validate(&text, &p, ty),
                        "{input}: {produced} parsing under {ty}"
                    );
                }
            }
        }
    }
}
