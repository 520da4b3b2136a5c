use crate::error::{Error, Result};

/// A text over an integer alphabet: symbol ids in `0..sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<u32>,
    sigma: u32,
}

impl Text {
    /// Builds a text, checking every symbol id against `sigma`.
    pub fn new(symbols: Vec<u32>, sigma: u32) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s >= sigma) {
            return Err(Error::SymbolOutOfRange { symbol: s, sigma });
        }
        Ok(Self { symbols, sigma })
    }

    /// Maps bytes to symbol ids in first-occurrence order; `sigma` is the
    /// number of distinct bytes. Use for analysis, where only the equality
    /// structure of the input matters.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        let mut ids = [u32::MAX; 256];
        let mut sigma = 0u32;
        let symbols = bytes
            .iter()
            .map(|&b| {
                if ids[b as usize] == u32::MAX {
                    ids[b as usize] = sigma;
                    sigma += 1;
                }
                ids[b as usize]
            })
            .collect();
        Self { symbols, sigma }
    }

    /// Keeps byte values as symbol ids (`sigma` = 256). Use for codec file
    /// round-trips, where the decoded ids must reproduce the input bytes.
    pub fn from_bytes_identity(bytes: &[u8]) -> Self {
        Self {
            symbols: bytes.iter().map(|&b| b as u32).collect(),
            sigma: 256,
        }
    }

    /// Shorthand for tests and the CLI: ASCII text via `from_bytes`.
    pub fn from_letters(s: &str) -> Self {
        Self::from_bytes(s.as_bytes())
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Renders the text as lowercase letters, assigning `a`, `b`, ... to
    /// symbol ids in first-occurrence order. `None` if more than 26 distinct
    /// ids occur.
    pub fn render_letters(&self) -> Option<String> {
        let mut letter: std::collections::HashMap<u32, u8> = std::collections::HashMap::new();
        let mut out = String::with_capacity(self.len());
        for &s in &self.symbols {
            let next = b'a' + letter.len() as u8;
            let &mut l = letter.entry(s).or_insert(next);
            if l >= b'a' + 26 {
                return None;
            }
            out.push(l as char);
        }
        Some(out)
    }

    /// Symbol ids as bytes; `None` if any id exceeds 255.
    pub fn to_bytes(&self) -> Option<Vec<u8>> {
        self.symbols
            .iter()
            .map(|&s| u8::try_from(s).ok())
            .collect()
    }
}
