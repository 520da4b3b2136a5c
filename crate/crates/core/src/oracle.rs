//! Exhaustive minimum-parsing oracle.
//!
//! Dynamic program over prefix lengths: a phrase `text[b..e]` is admissible
//! depending only on `(b, e)` for all four types, so `D[e] = 1 + min D[b-1]`
//! over admissible cuts is exact. Admissibility comes from a naive
//! first-occurrence table built by letter comparisons only, keeping the
//! oracle independent of the suffix-automaton machinery it is used to check.

use crate::error::{Error, Result};
use crate::greedy::parse_all_greedy;
use crate::parsing::{Parsing, Phrase};
use crate::text::Text;
use crate::variant::{Overlap, Shape, Variant};

/// Largest input the quadratic DP accepts.
pub const ORACLE_GUARD: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub variant: Variant,
    pub min_size: usize,
    pub witness: Parsing,
}

/// `first_occ[b][l]` = 1-based start of the leftmost occurrence of
/// `text[b..b+l-1]` anywhere in the text (0 when `l` exceeds the tail).
struct FirstOccurrence {
    table: Vec<Vec<u32>>,
}

impl FirstOccurrence {
    fn build(syms: &[u32]) -> Self {
        let n = syms.len();
        // lce[x][y]: longest common extension of the suffixes at x and y.
        let mut lce = vec![vec![0u32; n + 1]; n + 1];
        for x in (0..n).rev() {
            for y in (0..n).rev() {
                if syms[x] == syms[y] {
                    lce[x][y] = lce[x + 1][y + 1] + 1;
                }
            }
        }
        let mut table = vec![vec![0u32; n + 1]; n + 1];
        for b in 0..n {
            let mut covered = 0usize;
            for (x, row) in lce.iter().enumerate().take(n) {
                let reach = row[b] as usize;
                for slot in &mut table[b + 1][covered + 1..=reach.max(covered)] {
                    *slot = (x + 1) as u32;
                }
                covered = covered.max(reach);
            }
        }
        FirstOccurrence { table }
    }

    /// Leftmost start of `text[b..b+l-1]`, 1-based; `l == 0` occurs
    /// everywhere by convention.
    fn leftmost(&self, b: usize, l: usize) -> usize {
        if l == 0 {
            return b;
        }
        self.table[b][l] as usize
    }
}

fn admissible(first: &FirstOccurrence, ty: Variant, b: usize, e: usize) -> bool {
    let len = e - b + 1;
    if len == 1 {
        return true;
    }
    match ty.shape {
        Shape::Pairs => {
            let j = first.leftmost(b, len);
            match ty.overlap {
                Overlap::Allowed => j < b,
                Overlap::Forbidden => j + len - 1 < b,
            }
        }
        Shape::Triples => {
            let j = first.leftmost(b, len - 1);
            match ty.overlap {
                Overlap::Allowed => j < b,
                Overlap::Forbidden => j + len - 2 < b,
            }
        }
    }
}

/// Minimum number of phrases over all parsings of the given type, with one
/// minimal witness (ties broken toward the longest last phrase).
pub fn min_parsing_size(text: &Text, ty: Variant) -> Result<OracleResult> {
    min_parsing_size_with_guard(text, ty, ORACLE_GUARD)
}

pub fn min_parsing_size_with_guard(
    text: &Text,
    ty: Variant,
    guard: usize,
) -> Result<OracleResult> {
    let syms = text.symbols();
    let n = syms.len();
    if n > guard {
        return Err(Error::SizeLimit { n, limit: guard });
    }
    let first = FirstOccurrence::build(syms);

    const UNSET: usize = usize::MAX;
    let mut best = vec![UNSET; n + 1];
    let mut cut = vec![0usize; n + 1]; // phrase start chosen for prefix e
    best[0] = 0;
    for e in 1..=n {
        for b in 1..=e {
            if best[b - 1] == UNSET || !admissible(&first, ty, b, e) {
                continue;
            }
            // Strict improvement keeps the smallest b, i.e. the longest
            // final phrase, for reproducible witnesses.
            if best[b - 1] + 1 < best[e] {
                best[e] = best[b - 1] + 1;
                cut[e] = b;
            }
        }
    }

    let mut phrases = Vec::with_capacity(best[n]);
    let mut e = n;
    while e > 0 {
        let b = cut[e];
        let len = e - b + 1;
        let phrase = match ty.shape {
            Shape::Pairs => {
                if len == 1 {
                    Phrase::literal(b, syms[b - 1])
                } else {
                    Phrase::copy(b, len, first.leftmost(b, len))
                }
            }
            Shape::Triples => Phrase {
                start: b,
                len,
                source: (len > 1).then(|| first.leftmost(b, len - 1)),
                trailing_literal: Some(syms[e - 1]),
            },
        };
        phrases.push(phrase);
        e = b - 1;
    }
    phrases.reverse();

    Ok(OracleResult {
        variant: ty,
        min_size: best[n],
        witness: Parsing::new(ty, phrases, n),
    })
}

/// True iff for all four variants the greedy size equals the DP minimum.
pub fn assert_greedy_optimal(text: &Text) -> Result<bool> {
    let greedy = parse_all_greedy(text);
    for (i, v) in Variant::ALL.into_iter().enumerate() {
        let oracle = min_parsing_size(text, v)?;
        if greedy[i].size() != oracle.min_size {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate_parsing;

    #[test]
    fn worked_example_minimums() {
        let text = Text::from_letters("abababc");
        assert_eq!(
            min_parsing_size(&text, Variant::LZ).unwrap().min_size,
            4
        );
        assert_eq!(
            min_parsing_size(&text, Variant::NOV_LZ3).unwrap().min_size,
            4
        );
    }

    #[test]
    fn single_letter_any_type() {
        let text = Text::from_letters("a");
        for ty in Variant::ALL {
            assert_eq!(min_parsing_size(&text, ty).unwrap().min_size, 1);
        }
    }

    #[test]
    fn witness_is_valid_and_minimal() {
        for input in ["abababc", "aabaabb", "aaaaaaa", "abcba"] {
            let text = Text::from_letters(input);
            for ty in Variant::ALL {
                let r = min_parsing_size(&text, ty).unwrap();
                assert_eq!(r.witness.size(), r.min_size);
                assert_eq!(
                    validate_parsing(&text, &r.witness, ty),
                    Ok(true),
                    "{input} {ty}"
                );
            }
        }
    }

    #[test]
    fn greedy_is_optimal_on_worked_example() {
        let text = Text::from_letters("abababc");
        assert_eq!(assert_greedy_optimal(&text), Ok(true));
    }

    #[test]
    fn greedy_is_optimal_exhaustively_binary_len_8() {
        for n in 0..=8usize {
            for mask in 0..(1u32 << n) {
                let syms: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
                let text = Text::new(syms, 2).unwrap();
                assert_eq!(assert_greedy_optimal(&text), Ok(true), "mask {mask:#b}");
            }
        }
    }

    #[test]
    fn min_size_monotone_under_fresh_letter() {
        for input in ["", "a", "abab", "aabaabb"] {
            let text = Text::from_letters(input);
            let mut extended = text.symbols().to_vec();
            extended.push(text.sigma()); // a never-seen letter
            let bigger = Text::new(extended, text.sigma() + 1).unwrap();
            for ty in Variant::ALL {
                assert!(
                    min_parsing_size(&bigger, ty).unwrap().min_size
                        >= min_parsing_size(&text, ty).unwrap().min_size
                );
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        let text = Text::new(vec![0; 5], 1).unwrap();
        assert!(min_parsing_size_with_guard(&text, Variant::LZ, 4).is_err());
    }

    #[test]
    fn empty_text_minimum_is_zero() {
        let text = Text::from_letters("");
        for ty in Variant::ALL {
            let r = min_parsing_size(&text, ty).unwrap();
            assert_eq!(r.min_size, 0);
            assert_eq!(r.witness.size(), 0);
        }
    }
}
