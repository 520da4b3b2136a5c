use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Input longer than the guard an operation is willing to handle.
    #[error("input of length {n} exceeds the size limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    /// Generator or transform parameters violate their invariants.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A parsing does not tile its text (gap, overlap, or length mismatch).
    #[error("parsing is not a tiling of the text: {0}")]
    BrokenTiling(String),

    /// A parsing's recorded fields cannot be resolved into a text.
    #[error("corrupt parsing: {0}")]
    CorruptParsing(String),

    /// Encoded stream does not start with the container magic.
    #[error("bad container magic")]
    BadMagic,

    /// Container variant or token tag byte is unknown.
    #[error("unknown tag byte {0:#x}")]
    BadTag(u8),

    /// A copy token reaches before the start of the text.
    #[error("token at output position {pos} has offset {offset} reaching before position 1")]
    OffsetOutOfRange { pos: usize, offset: usize },

    /// Stream ended in the middle of a header or token.
    #[error("truncated stream")]
    TruncatedStream,

    /// Decoded length disagrees with the header.
    #[error("decoded {got} symbols but header declares {want}")]
    LengthMismatch { got: usize, want: usize },

    /// A symbol id is not below the declared alphabet size.
    #[error("symbol {symbol} out of range for alphabet size {sigma}")]
    SymbolOutOfRange { symbol: u32, sigma: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
