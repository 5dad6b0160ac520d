use crate::error::{Error, Result};
use crate::oracle::FunctionTable;
use crate::scalar::{l2_distance, Amp, Real};
use crate::state::{FactoredState, PhaseMode, StateVector};

use super::auxiliary::{check_pair, AuxSpec};

/// Whether a single oracle call already produces the phase-kicked state.
#[derive(Debug, Clone, PartialEq)]
pub struct KickbackCheck<T> {
    /// Both sides agree within the cross-path tolerance.
    pub holds: bool,
    /// L2 distance between the two sides.
    pub residual: T,
    /// Auxiliary bit positions on which `f` is constant. On these the
    /// condition is not informative.
    pub degenerate_bits: Vec<u32>,
}

impl<T> KickbackCheck<T> {
    pub fn is_degenerate(&self) -> bool {
        !self.degenerate_bits.is_empty()
    }
}

fn compare<T: Real>(f: &FunctionTable, aux: Vec<Amp<T>>, bitwise: bool) -> Result<KickbackCheck<T>> {
    let shape = f.shape();
    let mut control = vec![Amp::new(T::zero(), T::zero()); shape.control_dim()];
    control[0] = Amp::new(T::one(), T::zero());

    let mut lhs = StateVector::product(shape, &control, &aux)?;
    lhs.apply_walsh_control();
    if bitwise {
        lhs.apply_oracle_xor(f)?;
    } else {
        lhs.apply_oracle_add(f)?;
    }

    let mut rhs = FactoredState::new(shape, control, aux)?;
    rhs.apply_walsh_control();
    let mode = if bitwise { PhaseMode::Parity } else { PhaseMode::Exact };
    rhs.apply_phase_transform(f, 1, mode)?;

    let residual = l2_distance(lhs.amplitudes(), rhs.expand().amplitudes());
    Ok(KickbackCheck {
        holds: residual < T::cross_tolerance(),
        residual,
        degenerate_bits: f.constant_bits(),
    })
}

/// Does `U_f (W_n ⊗ I)(|0^n⟩ ⊗ (a|0⟩ + b|1⟩))` equal
/// `N^{-1/2} Σ_x (−1)^{f(x)} |x⟩ ⊗ (a|0⟩ + b|1⟩)`?
///
/// For nonconstant Boolean `f` this holds exactly when `a = −b`.
pub fn check_kickback_condition<T: Real>(a: Amp<T>, b: Amp<T>, f: &FunctionTable) -> Result<KickbackCheck<T>> {
    if f.m() != 1 {
        return Err(Error::NotBoolean { m: f.m() });
    }
    check_pair(a, b)?;
    compare(f, vec![a, b], false)
}

/// Bitwise analogue: does one `U_f^⊕` call on a product auxiliary state
/// produce `N^{-1/2} Σ_x (−1)^{p(f(x))} |x⟩ ⊗ |Ψ⟩`?
///
/// Holds when `a_j = −b_j` on every qubit. The converse needs every bit of
/// `f` to vary on its own: when two bits of `f(x)` always flip together,
/// `|+⟩|+⟩` on those qubits passes as well.
pub fn check_kickback_condition_bitwise<T: Real>(aux: &AuxSpec<T>, f: &FunctionTable) -> Result<KickbackCheck<T>> {
    if !matches!(aux, AuxSpec::ProductState(_)) {
        return Err(Error::NonProductAux);
    }
    let vector = aux.vector(f.shape())?;
    compare(f, vector, true)
}
