use thiserror::Error;

/// Errors raised when constructing or parsing leading-term data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    /// Level and color vectors have different lengths.
    #[error("level vector has length {levels} but color vector has length {colors}")]
    LengthMismatch { levels: usize, colors: usize },
    /// `J(0)` is not an ideal of the maximal ideal.
    #[error("J(0) is not a valid component")]
    InvalidComponent,
    /// The text form could not be parsed.
    #[error("cannot parse datum `{0}`; expected e.g. (K(1),J(1),K(0))")]
    Parse(String),
}
