use serde::{Deserialize, Serialize};

use crate::text::Text;
use crate::variant::Variant;

/// One factor of a parsing. Positions are 1-based, matching the serialized
/// record format.
///
/// `trailing_literal` holds an explicitly stored letter, so a parsing can be
/// resolved back into its text:
///
/// * literal: `source == None`, `trailing_literal == Some(letter)`, `len == 1`
///   (also the minimal triple phrase, whose referenced prefix is empty);
/// * pair copy: `source == Some(j)`, no trailing letter;
/// * triple phrase: `source` points at an occurrence of the first `len - 1`
///   symbols and `trailing_literal` holds the explicit last letter;
/// * truncated triple phrase (text ended mid-extension): `source == Some(j)`
///   refers to all `len` symbols and `trailing_literal == None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phrase {
    pub start: usize,
    pub len: usize,
    pub source: Option<usize>,
    pub trailing_literal: Option<u32>,
}

impl Phrase {
    pub fn literal(start: usize, symbol: u32) -> Self {
        Phrase {
            start,
            len: 1,
            source: None,
            trailing_literal: Some(symbol),
        }
    }

    pub fn copy(start: usize, len: usize, source: usize) -> Self {
        Phrase {
            start,
            len,
            source: Some(source),
            trailing_literal: None,
        }
    }

    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    /// Length of the referenced part: `len` minus the trailing letter if any.
    pub fn ref_len(&self) -> usize {
        match (self.source, self.trailing_literal) {
            (None, _) => 0,
            (Some(_), Some(_)) => self.len - 1,
            (Some(_), None) => self.len,
        }
    }
}

/// An ordered phrase sequence tiling `1..=text_len`, tagged with the variant
/// it conforms to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsing {
    pub variant: Variant,
    pub phrases: Vec<Phrase>,
    pub text_len: usize,
}

impl Parsing {
    pub fn new(variant: Variant, phrases: Vec<Phrase>, text_len: usize) -> Self {
        Parsing {
            variant,
            phrases,
            text_len,
        }
    }

    /// Number of phrases (the parsing size z).
    pub fn size(&self) -> usize {
        self.phrases.len()
    }

    /// Checks that the phrases tile `1..=text_len` contiguously.
    pub fn is_tiling(&self) -> bool {
        let mut next = 1usize;
        for p in &self.phrases {
            if p.len == 0 || p.start != next {
                return false;
            }
            next += p.len;
        }
        next == self.text_len + 1
    }

    /// Dot notation over the given rendering of the text,
    /// e.g. `a.b.abab.c`. `letters` must have length `text_len`.
    pub fn dot_notation(&self, letters: &str) -> String {
        assert_eq!(letters.len(), self.text_len, "rendering length mismatch");
        self.phrases
            .iter()
            .map(|p| &letters[p.start - 1..p.start - 1 + p.len])
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn records(&self) -> Vec<PhraseRecord> {
        self.phrases.iter().map(PhraseRecord::from).collect()
    }
}

/// Serialized phrase record: `{kind: LIT|COPY, start, len, source?, trailing?}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PhraseRecord {
    pub kind: PhraseKind,
    pub start: usize,
    pub len: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trailing: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhraseKind {
    #[serde(rename = "LIT")]
    Lit,
    #[serde(rename = "COPY")]
    Copy,
}

impl From<&Phrase> for PhraseRecord {
    fn from(p: &Phrase) -> Self {
        PhraseRecord {
            kind: if p.source.is_some() {
                PhraseKind::Copy
            } else {
                PhraseKind::Lit
            },
            start: p.start,
            len: p.len,
            source: p.source,
            trailing: p.trailing_literal,
        }
    }
}

impl From<&PhraseRecord> for Phrase {
    fn from(r: &PhraseRecord) -> Self {
        Phrase {
            start: r.start,
            len: r.len,
            source: r.source,
            trailing_literal: r.trailing,
        }
    }
}

/// Convenience for tests and the CLI: dot notation of a parsing over the
/// letter rendering of `text` (falls back to ids joined by `.` separators
/// inside `<>` for large alphabets).
pub fn dot_notation_of(parsing: &Parsing, text: &Text) -> String {
    match text.render_letters() {
        Some(letters) => parsing.dot_notation(&letters),
        None => parsing
            .phrases
            .iter()
            .map(|p| {
                let syms = &text.symbols()[p.start - 1..p.start - 1 + p.len];
                let inner = syms
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!("<{inner}>")
            })
            .collect::<Vec<_>>()
            .join("."),
    }
}
