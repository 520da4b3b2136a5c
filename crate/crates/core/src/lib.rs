//! Laboratory library for the four greedy LZ77-type parsings: overlapping
//! and non-overlapping references, with pair or triple phrase encodings.
//!
//! The crate provides:
//!
//! * greedy parsers for all four variants ([`parse_greedy`]), plus a naive
//!   reference scanner ([`parse_reference`]) they must match bit for bit;
//! * parsing validation against the four type definitions
//!   ([`validate_parsing`]) and reconstruction ([`reconstruct`]);
//! * the constructive transforms between parsing kinds
//!   ([`overlap_to_nonoverlap_parsing`], [`triples_to_pairs_parsing`]);
//! * an exhaustive dynamic-programming minimality oracle
//!   ([`min_parsing_size`]) certifying that the greedy parsings are minimal;
//! * generators for the extremal string families with known parsing sizes
//!   ([`generators`]);
//! * a token-stream codec with a fixed byte container ([`codec`]);
//! * a measurement/verification harness emitting CSV or JSON reports
//!   ([`harness`]).

pub mod codec;
pub mod error;
pub mod generators;
pub mod greedy;
pub mod harness;
mod index;
pub mod oracle;
pub mod parsing;
mod reconstruct;
pub mod reference;
pub mod text;
pub mod transform;
pub mod validate;
pub mod variant;

pub use error::{Error, Result};
pub use greedy::{parse_all_greedy, parse_greedy};
pub use oracle::{assert_greedy_optimal, min_parsing_size, OracleResult, ORACLE_GUARD};
pub use parsing::{dot_notation_of, Parsing, Phrase, PhraseKind, PhraseRecord};
pub use reconstruct::reconstruct;
pub use reference::{parse_reference, REFERENCE_GUARD};
pub use text::Text;
pub use transform::{
    overlap_to_nonoverlap_parsing, triples_to_pairs_parsing, TransformConfig,
};
pub use validate::validate_parsing;
pub use variant::{Overlap, Shape, Variant};
