use thiserror::Error;

/// Everything that can go wrong in the enumeration and numeric pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor has a constant term that is not a unit")]
    DivisionByNonUnit,
    #[error("{op}: bad constant term")]
    BadConstantTerm { op: &'static str },
    #[error("composition with an inner series whose constant term is nonzero")]
    NonNilpotentComposition,
    #[error("shifting by x^{shift} would drop the nonzero coefficient of x^{index}")]
    NotDivisible { shift: usize, index: usize },
    #[error("P(s0, 0) is nonzero: s0 is not a root")]
    NoRoot,
    #[error("dP/dS(s0, 0) is not invertible")]
    SingularJacobian,
    #[error("fixed-point iteration stopped gaining coefficients at order {order}")]
    NoContraction { order: usize },
    #[error("coefficient {n} does not give an integer count")]
    NonIntegerCount { n: usize },
    #[error("coefficient {n} gives a negative count")]
    NegativeCount { n: usize },
    #[error("marker polynomial still has negative powers of 1+y")]
    NotAPolynomial,

    #[error("{what} did not converge")]
    NoConvergence { what: String },
    #[error("no sign change of {what} in the search bracket")]
    NoRootInBracket { what: String },
    #[error("{count} sign changes of {what} in the search bracket")]
    AmbiguousRoot { what: String, count: usize },
    #[error("{what} is negative, expected a real square root")]
    NegativeRadicand { what: String },

    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph already contains a K33 minor")]
    NotMinorFree,
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
