//! Resolves a parsing back into its text. Copies are expanded symbol by
//! symbol, so self-referential phrases (offset smaller than length) work.

use crate::error::{Error, Result};
use crate::parsing::Parsing;
use crate::text::Text;

pub fn reconstruct(parsing: &Parsing, sigma: u32) -> Result<Text> {
    if !parsing.is_tiling() {
        return Err(Error::CorruptParsing(
            "phrases do not tile the claimed length".into(),
        ));
    }
    let mut out: Vec<u32> = Vec::with_capacity(parsing.text_len);
    for p in &parsing.phrases {
        match (p.source, p.trailing_literal) {
            (None, Some(c)) => {
                if p.len != 1 {
                    return Err(Error::CorruptParsing(format!(
                        "phrase at {} has no source but length {}",
                        p.start, p.len
                    )));
                }
                out.push(c);
            }
            (None, None) => {
                return Err(Error::CorruptParsing(format!(
                    "literal phrase at {} carries no symbol",
                    p.start
                )));
            }
            (Some(j), trailing) => {
                let copied = p.len - usize::from(trailing.is_some());
                if copied == 0 {
                    return Err(Error::CorruptParsing(format!(
                        "copy phrase at {} references nothing",
                        p.start
                    )));
                }
                // Under the symbol-by-symbol rule the source must start in
                // already-produced material; it may run into the phrase.
                if j == 0 || j > out.len() {
                    return Err(Error::CorruptParsing(format!(
                        "phrase at {} has dangling source {}",
                        p.start, j
                    )));
                }
                for t in 0..copied {
                    let sym = out[j - 1 + t];
                    out.push(sym);
                }
                if let Some(c) = trailing {
                    out.push(c);
                }
            }
        }
    }
    Text::new(out, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::parse_greedy;
    use crate::parsing::Phrase;
    use crate::variant::Variant;

    #[test]
    fn roundtrips_the_worked_example() {
        let text = Text::from_letters("abababc");
        for v in Variant::ALL {
            let p = parse_greedy(&text, v);
            assert_eq!(reconstruct(&p, text.sigma()).unwrap(), text);
        }
    }

    #[test]
    fn self_referential_copy_expands() {
        let p = Parsing::new(
            Variant::LZ,
            vec![Phrase::literal(1, 0), Phrase::copy(2, 3, 1)],
            4,
        );
        let text = reconstruct(&p, 1).unwrap();
        assert_eq!(text.symbols(), &[0, 0, 0, 0]);
    }

    #[test]
    fn empty_parsing_gives_empty_text() {
        let p = Parsing::new(Variant::LZ, vec![], 0);
        assert!(reconstruct(&p, 0).unwrap().is_empty());
    }

    #[test]
    fn dangling_source_is_corrupt() {
        let p = Parsing::new(
            Variant::LZ,
            vec![Phrase::literal(1, 0), Phrase::copy(2, 2, 5)],
            3,
        );
        assert!(matches!(
            reconstruct(&p, 1),
            Err(Error::CorruptParsing(_))
        ));
    }

    #[test]
    fn symbolless_literal_is_corrupt() {
        let p = Parsing::new(
            Variant::LZ,
            vec![Phrase {
                start: 1,
                len: 1,
                source: None,
                trailing_literal: None,
            }],
            1,
        );
        assert!(matches!(
            reconstruct(&p, 1),
            Err(Error::CorruptParsing(_))
        ));
    }
}
