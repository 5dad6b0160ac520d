//! End-to-end procedures: the single-call phase-kickback algorithm, the two
//! uninitialized-auxiliary variants, their closed-form amplitudes, and `μ`
//! recovery.

mod auxiliary;
mod gdj;
mod kickback;
mod period;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::FunctionTable;
use crate::state::StateVector;

pub use auxiliary::AuxSpec;
pub use gdj::{
    analytic_sy, analytic_sy_prime, analytic_sy_prime_with, analytic_sy_with, kickback_fast_path,
    run_dj_uninit, run_gdj1, run_gdj2, simulate_dj_uninit, simulate_gdj1, simulate_gdj2, Simulation,
};
pub use kickback::{check_kickback_condition, check_kickback_condition_bitwise, KickbackCheck};
pub use period::{find_mu, period_state, postselected_aux_distribution, DEFAULT_PERIOD_SAMPLES};

/// Which end-to-end procedure produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Gdj1,
    DjUninit,
    Gdj2,
}

/// Control-register transform used before and after the oracle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Transform {
    #[default]
    Walsh,
    /// `F` before the oracle, `F⁻¹` after.
    Fourier,
    /// `F` on both sides.
    FourierForward,
}

/// Measurement-based verdict under the promise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    /// Outcome `0^n` observed: `f` is not evenly distributed (constant under the promise).
    NotEvenlyDistributed,
    /// Any other outcome: `f` is nonconstant.
    Nonconstant,
}

impl Decision {
    /// `P(0^n) > 1/2` decides "not evenly distributed"; under the promise the
    /// exact value is 1 or 0.
    pub fn from_p_zero(p_zero: f64) -> Self {
        if p_zero > 0.5 {
            Decision::NotEvenlyDistributed
        } else {
            Decision::Nonconstant
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::NotEvenlyDistributed => "not-evenly-distributed",
            Decision::Nonconstant => "nonconstant",
        })
    }
}

/// Note attached to reports for inputs outside the promise.
pub const OFF_PROMISE_NOTE: &str = "promise-violated: outcome heuristic";

/// Applies `U_f` or `U_f^⊕` and counts every application.
#[derive(Debug)]
pub(crate) struct CountingOracle<'a> {
    f: &'a FunctionTable,
    calls: usize,
}

impl<'a> CountingOracle<'a> {
    pub(crate) fn new(f: &'a FunctionTable) -> Self {
        Self { f, calls: 0 }
    }

    pub(crate) fn add<T: crate::scalar::Real>(&mut self, state: &mut StateVector<T>) -> Result<()> {
        state.apply_oracle_add(self.f)?;
        self.calls += 1;
        Ok(())
    }

    pub(crate) fn xor<T: crate::scalar::Real>(&mut self, state: &mut StateVector<T>) -> Result<()> {
        state.apply_oracle_xor(self.f)?;
        self.calls += 1;
        Ok(())
    }

    pub(crate) fn calls(&self) -> usize {
        self.calls
    }
}
