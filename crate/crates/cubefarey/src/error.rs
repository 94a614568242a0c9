use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Arithmetic is exact throughout, so most of these signal either invalid
/// input or an internal consistency failure that would falsify one of the
/// structural identities the algorithm relies on.
#[derive(Debug, Error)]
pub enum Error {
    /// The defining polynomial has a rational root.
    #[error("polynomial is reducible over Q")]
    Reducible,
    /// The supplied interval does not isolate exactly one real root.
    #[error("interval isolates {0} real roots, expected exactly one")]
    NotIsolating(usize),
    /// Inversion of the zero element.
    #[error("division by zero field element")]
    DivisionByZero,
    /// Interval refinement hit the bisection cap; nonzero elements always
    /// terminate, so this signals a bug rather than a hard input.
    #[error("sign refinement exceeded {0} bisections")]
    RefinementCap(u32),
    /// A weight comparison came out exactly equal, which the admissibility
    /// condition on the exponent rules out.
    #[error("weight comparison produced an exact tie")]
    TieImpossible,
    /// A digit orientation test evaluated to zero on a domain boundary.
    #[error("orientation test landed exactly on a domain boundary")]
    BoundaryImpossible,
    /// The point is outside the domain triangle of the requested digit.
    #[error("point lies outside the domain triangle of digit ({0},{1})")]
    WrongTriangle(u8, u8),
    /// Two consecutive digits formed a pair that provably cannot occur.
    #[error("forbidden digit pair produced at step {0}")]
    ForbiddenWordDetected(usize),
    /// A convergent column has zero leading entry, so its vertex is at
    /// infinity.
    #[error("convergent column has zero leading entry")]
    DegenerateDenominator,
    /// The period matrix failed to fix the direction vector projectively.
    #[error("period matrix does not fix the direction vector")]
    EigenRelationViolated,
    /// Primitivity is only defined for nonnegative matrices.
    #[error("matrix has a negative entry")]
    NegativeEntry,
    /// A dual substitution mapped two distinct faces onto the same face.
    #[error("dual substitution produced a duplicate face")]
    FaceCollision,
    /// A grown patch contains a face outside its stepped surface.
    #[error("patch face lies outside the stepped surface")]
    SurfaceMembershipViolated,
    /// Continued-fraction evaluation divided by a vanishing convergent.
    #[error("continued fraction evaluation hit a zero denominator")]
    ZeroDenominator,
    /// Malformed user input (CLI arguments, serialized documents, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
