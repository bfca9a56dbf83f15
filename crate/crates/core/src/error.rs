use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring specification `{0}`")]
    RingSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {modulus} is reducible over Z_{p}")]
    ReducibleModulus { modulus: String, p: u32 },
    #[error("no built-in modulus for GF({p}^{m}); supply one explicitly")]
    NoDefaultModulus { p: u32, m: u32 },
    #[error("invalid polynomial `{0}`")]
    Polynomial(String),
    #[error("ring {0} is not a field")]
    NotAField(String),
    #[error("operands live over different rings ({0} vs {1})")]
    RingMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element code {code} out of range for ring of order {order}")]
    ElementOutOfRange { code: u32, order: u32 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid Gram matrix: {0}")]
    Gram(String),
    #[error("malformed quandle table: {0}")]
    MalformedTable(String),
    #[error("{what} exceeds cap ({size} > {cap})")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("Gauss code syntax error at position {pos}: {msg}")]
    GaussSyntax { pos: usize, msg: String },
    #[error("crossing {label}: {msg}")]
    Crossing { label: u32, msg: String },
    #[error("element set is not a subquandle")]
    NotSubquandle,
    #[error("target quandle carries no module structure")]
    MissingModuleContext,
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by a configured size limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
