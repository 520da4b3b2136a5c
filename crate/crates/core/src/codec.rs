//! Token-stream encoding of parsings and the byte container around it.
//!
//! One token per phrase; copy offsets are `start - source`. The container is
//! little-endian: magic `LZCMP1`, a variant byte, sigma as u32, n as u64,
//! then tokens as a tag byte followed by LEB128 base-128 integers.

use crate::error::{Error, Result};
use crate::parsing::Parsing;
use crate::text::Text;
use crate::variant::{Shape, Variant};

pub const MAGIC: &[u8; 6] = b"LZCMP1";

const TAG_LITERAL: u8 = 0;
const TAG_PAIR: u8 = 1;
const TAG_TRIPLE: u8 = 2;
const TAG_TRIPLE_TRUNCATED: u8 = 3;

/// One encoded phrase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Literal {
        symbol: u32,
    },
    PairCopy {
        len: usize,
        offset: usize,
    },
    /// `trailing == None` only for a final phrase cut short by the text end;
    /// the copied part then has length `len` instead of `len - 1`.
    TripleCopy {
        len: usize,
        offset: usize,
        trailing: Option<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenStream {
    pub variant: Variant,
    pub sigma: u32,
    pub n: u64,
    pub tokens: Vec<Token>,
}

/// Encodes a parsing of `text`, one token per phrase. The text supplies the
/// header alphabet size and the letters of literal phrases.
pub fn encode(parsing: &Parsing, text: &Text) -> Result<TokenStream> {
    if parsing.text_len != text.len() || !parsing.is_tiling() {
        return Err(Error::BrokenTiling(
            "parsing does not tile the given text".into(),
        ));
    }
    let syms = text.symbols();
    let mut tokens = Vec::with_capacity(parsing.size());
    for p in &parsing.phrases {
        let token = match p.source {
            None => Token::Literal {
                symbol: syms[p.start - 1],
            },
            // A truncated reference of one symbol is indistinguishable from
            // a literal after decoding; emit the smaller token.
            Some(_) if p.len == 1 => Token::Literal {
                symbol: syms[p.start - 1],
            },
            Some(j) => {
                let offset = p.start - j;
                match (parsing.variant.shape, p.trailing_literal) {
                    (Shape::Pairs, None) => Token::PairCopy { len: p.len, offset },
                    (Shape::Pairs, Some(_)) => {
                        return Err(Error::CorruptParsing(format!(
                            "pair phrase at {} carries a trailing letter",
                            p.start
                        )))
                    }
                    (Shape::Triples, trailing) => Token::TripleCopy {
                        len: p.len,
                        offset,
                        trailing,
                    },
                }
            }
        };
        tokens.push(token);
    }
    Ok(TokenStream {
        variant: parsing.variant,
        sigma: text.sigma(),
        n: parsing.text_len as u64,
        tokens,
    })
}

/// Expands a token stream back into its text. Self-referential copies
/// (offset smaller than the copied length) are resolved symbol by symbol.
pub fn decode(stream: &TokenStream) -> Result<Text> {
    let mut out: Vec<u32> = Vec::with_capacity(stream.n as usize);
    for &token in &stream.tokens {
        match token {
            Token::Literal { symbol } => {
                if symbol >= stream.sigma {
                    return Err(Error::SymbolOutOfRange {
                        symbol,
                        sigma: stream.sigma,
                    });
                }
                out.push(symbol);
            }
            Token::PairCopy { len, offset } => {
                copy_back(&mut out, len, offset)?;
            }
            Token::TripleCopy {
                len,
                offset,
                trailing,
            } => {
                let copied = len - usize::from(trailing.is_some());
                copy_back(&mut out, copied, offset)?;
                if let Some(symbol) = trailing {
                    if symbol >= stream.sigma {
                        return Err(Error::SymbolOutOfRange {
                            symbol,
                            sigma: stream.sigma,
                        });
                    }
                    out.push(symbol);
                }
            }
        }
    }
    if out.len() != stream.n as usize {
        return Err(Error::LengthMismatch {
            got: out.len(),
            want: stream.n as usize,
        });
    }
    Text::new(out, stream.sigma)
}

fn copy_back(out: &mut Vec<u32>, len: usize, offset: usize) -> Result<()> {
    if offset == 0 || offset > out.len() {
        return Err(Error::OffsetOutOfRange {
            pos: out.len() + 1,
            offset,
        });
    }
    let from = out.len() - offset;
    for t in 0..len {
        let sym = out[from + t];
        out.push(sym);
    }
    Ok(())
}

impl TokenStream {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        buf.extend_from_slice(MAGIC);
        buf.push(variant_byte(self.variant));
        buf.extend_from_slice(&self.sigma.to_le_bytes());
        buf.extend_from_slice(&self.n.to_le_bytes());
        for &token in &self.tokens {
            match token {
                Token::Literal { symbol } => {
                    buf.push(TAG_LITERAL);
                    write_varint(&mut buf, symbol as u64);
                }
                Token::PairCopy { len, offset } => {
                    buf.push(TAG_PAIR);
                    write_varint(&mut buf, len as u64);
                    write_varint(&mut buf, offset as u64);
                }
                Token::TripleCopy {
                    len,
                    offset,
                    trailing,
                } => {
                    buf.push(if trailing.is_some() {
                        TAG_TRIPLE
                    } else {
                        TAG_TRIPLE_TRUNCATED
                    });
                    write_varint(&mut buf, len as u64);
                    write_varint(&mut buf, offset as u64);
                    if let Some(c) = trailing {
                        write_varint(&mut buf, c as u64);
                    }
                }
            }
        }
        buf
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<TokenStream> {
        let mut r = Reader { bytes, pos: 0 };
        if r.take(6)? != MAGIC {
            return Err(Error::BadMagic);
        }
        let vb = r.byte()?;
        let variant = *Variant::ALL.get(vb as usize).ok_or(Error::BadTag(vb))?;
        let sigma = u32::from_le_bytes(r.take(4)?.try_into().unwrap());
        let n = u64::from_le_bytes(r.take(8)?.try_into().unwrap());
        let mut tokens = Vec::new();
        while !r.done() {
            let tag = r.byte()?;
            let token = match tag {
                TAG_LITERAL => Token::Literal {
                    symbol: r.varint()? as u32,
                },
                TAG_PAIR => Token::PairCopy {
                    len: r.varint()? as usize,
                    offset: r.varint()? as usize,
                },
                TAG_TRIPLE => Token::TripleCopy {
                    len: r.varint()? as usize,
                    offset: r.varint()? as usize,
                    trailing: Some(r.varint()? as u32),
                },
                TAG_TRIPLE_TRUNCATED => Token::TripleCopy {
                    len: r.varint()? as usize,
                    offset: r.varint()? as usize,
                    trailing: None,
                },
                other => return Err(Error::BadTag(other)),
            };
            tokens.push(token);
        }
        Ok(TokenStream {
            variant,
            sigma,
            n,
            tokens,
        })
    }
}

fn variant_byte(v: Variant) -> u8 {
    Variant::ALL
        .iter()
        .position(|&x| x == v)
        .expect("variant is one of the four") as u8
}

fn write_varint(buf: &mut Vec<u8>, mut value: u64) {
    loop {
        let mut byte = (value & 0x7f) as u8;
        value >>= 7;
        if value != 0 {
            byte |= 0x80;
        }
        buf.push(byte);
        if value == 0 {
            break;
        }
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, count: usize) -> Result<&'a [u8]> {
        if self.pos + count > self.bytes.len() {
            return Err(Error::TruncatedStream);
        }
        let out = &self.bytes[self.pos..self.pos + count];
        self.pos += count;
        Ok(out)
    }

    fn byte(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn done(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn varint(&mut self) -> Result<u64> {
        let mut value = 0u64;
        let mut shift = 0u32;
        loop {
            let byte = self.byte()?;
            value |= u64::from(byte & 0x7f) << shift;
            if byte & 0x80 == 0 {
                return Ok(value);
            }
            shift += 7;
            if shift >= 64 {
                return Err(Error::TruncatedStream);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::parse_greedy;

    fn roundtrip(input: &str, variant: Variant) -> TokenStream {
        let text = Text::from_letters(input);
        let parsing = parse_greedy(&text, variant);
        let stream = encode(&parsing, &text).unwrap();
        assert_eq!(stream.tokens.len(), parsing.size());
        assert_eq!(decode(&stream).unwrap(), text);
        let bytes = stream.to_bytes();
        assert_eq!(TokenStream::from_bytes(&bytes).unwrap(), stream);
        stream
    }

    #[test]
    fn worked_example_pair_tokens() {
        let stream = roundtrip("abababc", Variant::LZ);
        assert_eq!(
            stream.tokens,
            vec![
                Token::Literal { symbol: 0 },
                Token::Literal { symbol: 1 },
                Token::PairCopy { len: 4, offset: 2 },
                Token::Literal { symbol: 2 },
            ]
        );
    }

    #[test]
    fn worked_example_triple_tokens() {
        let stream = roundtrip("abababc", Variant::LZ3);
        assert_eq!(
            stream.tokens,
            vec![
                Token::Literal { symbol: 0 },
                Token::Literal { symbol: 1 },
                Token::TripleCopy {
                    len: 5,
                    offset: 2,
                    trailing: Some(2)
                },
            ]
        );
    }

    #[test]
    fn empty_parsing_empty_stream() {
        let stream = roundtrip("", Variant::NOV_LZ);
        assert!(stream.tokens.is_empty());
        assert_eq!(stream.n, 0);
    }

    #[test]
    fn self_referential_copy_decodes() {
        let stream = TokenStream {
            variant: Variant::LZ,
            sigma: 1,
            n: 4,
            tokens: vec![
                Token::Literal { symbol: 0 },
                Token::PairCopy { len: 3, offset: 1 },
            ],
        };
        let text = decode(&stream).unwrap();
        assert_eq!(text.symbols(), &[0, 0, 0, 0]);
    }

    #[test]
    fn offset_before_start_is_an_error() {
        let stream = TokenStream {
            variant: Variant::LZ,
            sigma: 2,
            n: 3,
            tokens: vec![
                Token::Literal { symbol: 0 },
                Token::PairCopy { len: 2, offset: 2 },
            ],
        };
        assert_eq!(
            decode(&stream).unwrap_err(),
            Error::OffsetOutOfRange { pos: 2, offset: 2 }
        );
    }

    #[test]
    fn header_and_truncation_errors() {
        let stream = roundtrip("abab", Variant::LZ);
        let mut bytes = stream.to_bytes();
        assert_eq!(
            TokenStream::from_bytes(&bytes[..bytes.len() - 1]).unwrap_err(),
            Error::TruncatedStream
        );
        bytes[0] = b'X';
        assert_eq!(TokenStream::from_bytes(&bytes).unwrap_err(), Error::BadMagic);
        assert_eq!(
            TokenStream::from_bytes(b"LZ").unwrap_err(),
            Error::TruncatedStream
        );
        let mut bad_variant = stream.to_bytes();
        bad_variant[6] = 9;
        assert_eq!(
            TokenStream::from_bytes(&bad_variant).unwrap_err(),
            Error::BadTag(9)
        );
    }

    #[test]
    fn length_mismatch_detected() {
        let stream = TokenStream {
            variant: Variant::LZ,
            sigma: 2,
            n: 5,
            tokens: vec![Token::Literal { symbol: 0 }],
        };
        assert_eq!(
            decode(&stream).unwrap_err(),
            Error::LengthMismatch { got: 1, want: 5 }
        );
    }

    #[test]
    fn forbidden_streams_have_no_overlapping_offsets() {
        for input in ["aabaabb", "aaaaaaaa", "abababab", "aabaaaaabb"] {
            let text = Text::from_letters(input);
            for v in [Variant::NOV_LZ, Variant::NOV_LZ3] {
                let stream = encode(&parse_greedy(&text, v), &text).unwrap();
                for t in &stream.tokens {
                    match *t {
                        Token::PairCopy { len, offset } => assert!(offset >= len),
                        Token::TripleCopy { len, offset, .. } => {
                            assert!(offset >= len - 1)
                        }
                        Token::Literal { .. } => {}
                    }
                }
            }
        }
    }
}
