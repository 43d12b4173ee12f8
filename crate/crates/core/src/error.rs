use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {0} out of range for a quiver on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loops are not allowed (vertex {0})")]
    LoopArrow(usize),
    #[error("2-cycles are not allowed (between {0} and {1})")]
    TwoCycle(usize, usize),
    #[error("matrix is not skew-symmetric at ({0},{1})")]
    NotSkewSymmetric(usize, usize),
    #[error("quiver on {0} vertices exceeds the canonical-form bound of {1}")]
    CanonicalBound(usize, usize),
    #[error("rank {0} exceeds the supported bound {1}")]
    RankTooLarge(usize, usize),
    #[error("arrow multiplicity exceeds the supported bound")]
    MultiplicityTooLarge,
    #[error("mutation class enumeration exceeded the cap of {0}")]
    ClassCapExceeded(usize),
    #[error("quiver is not mutation equivalent to a simply-laced Dynkin diagram")]
    NotDynkin,
    #[error("quiver does not fit any cluster-tilted type D family")]
    UnrecognizedTypeD,
    #[error("subquiver rooted at {0} is not a branch (rooted quiver of type A)")]
    InvalidBranch(usize),
    #[error("central cycle length must be at least 3, got {0}")]
    SkeletonTooSmall(usize),
    #[error("spike positions must be distinct values in 1..={0}")]
    BadSpikes(usize),
    #[error("explicit relations are only defined for types A and D")]
    ExplicitRelationsUnavailable,
    #[error("structural invariant is not defined for type E without the Cartan matrix")]
    StructuralInvariantUnavailable,
    #[error("path-ideal closure did not stabilise by length {0}")]
    ClosureDiverged(usize),
    #[error("bound quiver algebras require arrow multiplicities at most 1")]
    NotSimplyLaced,
    #[error("Cartan matrix is singular")]
    SingularCartan,
    #[error("asymmetry matrix is not integral")]
    NonIntegralAsymmetry,
    #[error("matrix dimensions do not match: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("malformed quiver input: {0}")]
    Parse(String),
    #[error("too many undirected edges to enumerate orientations ({0} > {1})")]
    TooManyOrientations(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
