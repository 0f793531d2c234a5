use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("unsupported root datum: {0}")]
    Unsupported(String),

    #[error("Weyl group closure exceeded the bound of {bound} elements")]
    WeylBoundExceeded { bound: usize },

    #[error("representation is not Weyl-invariant")]
    NotWeylInvariant,

    #[error("representation is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("negative multiplicity for highest weight {weight:?}: input is a virtual character")]
    VirtualCharacter { weight: Vec<i64> },

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("chambers belong to different faces")]
    ChamberMismatch,

    #[error("Weyl sum left a nonzero remainder after dividing by {divisor}")]
    DivisionRemainder { divisor: String },

    #[error("induction depends on the chamber: {0}")]
    ChamberDependence(String),

    #[error("polynomial is not in the required isotypic component: {0}")]
    NotIsotypic(String),

    #[error("series windows are incompatible: {0}")]
    WindowMismatch(String),

    #[error("plethystic exponential needs a vanishing degree-zero component")]
    NonZeroConstant,

    #[error("plethystic logarithm needs a degree-zero component equal to 1")]
    NonUnitConstant,

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A computed object failed one of its structural checks (palindromy,
    /// integrality, invariance, ...). These are reported, never silently passed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures of a computed result, as opposed to bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::DivisionRemainder { .. } | Error::ChamberDependence(_))
    }
}
