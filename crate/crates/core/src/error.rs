use thiserror::Error;

/// Everything the library can reject.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("register sizes n={n}, m={m} invalid: need n >= 1, m >= 1 and n + m <= {max}")]
    InvalidShape { n: u32, m: u32, max: u32 },

    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("value {value} at input {input} is outside Z_{modulus}")]
    ValueOutOfRange {
        input: usize,
        value: usize,
        modulus: usize,
    },

    #[error("function table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },

    #[error("shape mismatch: state is (n={state_n}, m={state_m}), function is (n={f_n}, m={f_m})")]
    ShapeMismatch {
        state_n: u32,
        state_m: u32,
        f_n: u32,
        f_m: u32,
    },

    #[error("vector of length {found} does not match register dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("K={k} does not divide {name}={value}")]
    Divisibility {
        k: usize,
        name: &'static str,
        value: usize,
    },

    #[error("K={k} invalid: need K >= {min}")]
    InvalidK { k: usize, min: usize },

    #[error("shift t={t} must satisfy t < mu={mu}")]
    ShiftTooLarge { t: usize, mu: usize },

    #[error("partition invalid: {0}")]
    InvalidPartition(String),

    #[error("xi={xi} invalid: need 0 < xi < M={modulus}")]
    InvalidXi { xi: usize, modulus: usize },

    #[error("{what} has squared norm {norm_sqr}, expected 1")]
    NotNormalized { what: &'static str, norm_sqr: f64 },

    #[error("non-finite amplitude in {0}")]
    NonFinite(&'static str),

    #[error("auxiliary state must be a product state: the two-call sandwich assumes the auxiliary qubits are separable")]
    NonProductAux,

    #[error("product auxiliary state has {found} qubit pairs, register has m={expected}")]
    AuxQubitCount { expected: u32, found: usize },

    #[error("algorithm requires a Boolean function (m=1), got m={m}")]
    NotBoolean { m: u32 },

    #[error("{name}={value} is not a power of two")]
    NotPowerOfTwo { name: &'static str, value: usize },

    #[error("{what}: need at least 1, got {found}")]
    EmptyCount { what: &'static str, found: usize },

    #[error("query order is not a permutation of 0..{size}")]
    InvalidOrder { size: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
