use thiserror::Error;

/// Errors raised while building or reducing cusp-module elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    /// Elements over different primes or truncation orders were mixed.
    #[error("elements disagree on prime or truncation ({0})")]
    MismatchedContext(String),
    /// A term lies outside the maximal ideal `mF` (T-degree 0 or 1).
    #[error("monomial T^{t_deg}*u{basis} is not in mF")]
    NotInMaximalIdeal { t_deg: u32, basis: u32 },
    /// A basis index is zero or exceeds the rank.
    #[error("basis index u{basis} is outside 1..={rank}")]
    BasisOutOfRange { basis: u32, rank: u32 },
    /// The prime is not a (small) prime.
    #[error("{0} is not a supported prime")]
    BadPrime(u64),
    /// A prebasis element is zero.
    #[error("prebasis element {0} is zero")]
    ZeroElement(usize),
    /// A prebasis element does not have leading coefficient 1.
    #[error("prebasis element {0} is not monic")]
    NotMonic(usize),
    /// Two leading monomials of a prebasis divide one another.
    #[error("leading monomials of elements {0} and {1} are not mutually indivisible")]
    DivisibleLeadingTerms(usize, usize),
    /// A non-leading term is divisible by some leading monomial.
    #[error("element {element} has a non-leading term divisible by a leading monomial")]
    NonReducedTerm { element: usize },
    /// No generators were supplied, or all of them were zero.
    #[error("the submodule is zero; it has infinite codimension")]
    ZeroSubmodule,
    /// Some basis direction carries no leading monomial.
    #[error("no leading monomial on u{0}; the submodule has infinite codimension")]
    InfiniteCodimension(u32),
    /// The truncation order is too small to certify the result.
    #[error("codimension {codim} is too large for truncation T^{trunc} (need 2*codim + 4 <= trunc)")]
    CodimExceedsTruncation { codim: usize, trunc: u32 },
}
