use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid generator set: {0}")]
    InvalidJ(String),
    #[error("permutation is not a member of the parabolic quotient")]
    NotQuotientMember,
    #[error("permutation contains a (J,231)-pattern")]
    NotAvoiding,
    #[error("partition is not J-noncrossing")]
    NotNoncrossing,
    #[error("partition is not J-nonnesting")]
    NotNonnesting,
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("set is not down-closed")]
    NotDownClosed,
    #[error("relation has a cycle")]
    Cycle,
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("no unique bound for {0} and {1}")]
    NoUniqueBound(usize, usize),
    #[error("congruence condition fails: {0}")]
    Congruence(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("operation needs a finite Coxeter group")]
    Infinite,
    #[error("roots are linearly dependent")]
    Dependent,
    #[error("element is not below the base element")]
    NotBelow,
    #[error("element is not aligned")]
    NotAligned,
    #[error("not a facet of the subword complex")]
    NotFacet,
    #[error("root poset unavailable: {0}")]
    NoRootPoset(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
