//! State-vector simulation of generalized Deutsch-Jozsa algorithms.
//!
//! A function `f: Z_N → Z_M` (`N = 2^n`, `M = 2^m`) is promised to be either
//! constant or *evenly distributed*: it takes `K` equally spaced values
//! `jμ + t` (`μ = M/K`), each on exactly `N/K` inputs. The quantum procedures
//! here decide which with one or two oracle calls:
//!
//! - [`run_gdj1`]: phase kickback from an auxiliary register prepared in
//!   `F|−ξ⟩`, one call to `U_f: |x⟩|z⟩ ↦ |x⟩|z + f(x)⟩`.
//! - [`run_dj_uninit`]: Boolean case with an arbitrary, uninitialized
//!   auxiliary qubit, two calls.
//! - [`run_gdj2`]: parity variant with an uninitialized product-state
//!   auxiliary register and the bitwise oracle `U_f^⊕`, two calls.
//! - [`find_mu`]: recovers the range spacing `μ`.
//!
//! Closed-form amplitudes ([`analytic_sy`], [`analytic_sy_prime`]) and
//! classical deciders ([`classical`]) serve as independent baselines.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix double precision.

pub mod algorithms;
pub mod classical;
pub mod error;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod state;
pub mod transform;

pub use algorithms::{
    analytic_sy, analytic_sy_prime, check_kickback_condition, check_kickback_condition_bitwise, find_mu,
    run_dj_uninit, run_gdj1, run_gdj2, Algorithm, AuxSpec, Decision, Transform,
};
pub use classical::{classical_decide_known_k, classical_decide_unknown_k, worst_case_certifier, QueryLog};
pub use error::{Error, Result};
pub use oracle::{
    classify_function, make_constant, make_evenly_distributed, parity_of, shift_parity_check, EvenSpec,
    FunctionTable, PromiseClass,
};
pub use report::{PeriodReport, RunReport};
pub use scalar::{Amp, Real};
pub use state::{FactoredState, PhaseMode, Register, RegisterShape, StateVector};
pub use transform::Direction;

/// Double-precision amplitude.
pub type C64 = Amp<f64>;
/// Single-precision amplitude.
pub type C32 = Amp<f32>;
pub type StateVectorF64 = StateVector<f64>;
pub type StateVectorF32 = StateVector<f32>;
pub type FactoredStateF64 = FactoredState<f64>;
pub type AuxSpecF64 = AuxSpec<f64>;
