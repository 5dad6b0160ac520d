//! Recovery of the range spacing `μ` of an evenly distributed function.
//!
//! Fourier-transforming the value register only sees the period of the
//! range when that register holds the coherent range state
//! `K^{-1/2} Σ_j |jμ + t⟩`. Each preparation therefore runs
//! `W_n ⊗ I`, `U_f`, `W_n ⊗ F` on `|0^n⟩|0⟩` and measures both registers;
//! a control outcome of `0` projects the value register onto the range
//! state, so the accepted auxiliary outcome is a uniformly random multiple
//! of `K` with the shift `t` reduced to an unobservable phase.
//! Preparations with a nonzero control outcome are discarded.

use num_integer::gcd;
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::{classify_function, FunctionTable, PromiseClass};
use crate::report::PeriodReport;
use crate::scalar::Real;
use crate::state::{Register, StateVector};
use crate::transform::Direction;

use super::CountingOracle;

pub const DEFAULT_PERIOD_SAMPLES: usize = 8;

/// Preparations allowed per requested sample, in units of `min(N, M)`.
/// The acceptance probability is `Σ_v (|f⁻¹(v)|/N)² ≥ 1/min(N, M)`.
const ATTEMPT_BUDGET: usize = 64;

/// Pre-measurement state of one preparation.
pub fn period_state<T: Real>(f: &FunctionTable) -> Result<StateVector<T>> {
    let mut state = StateVector::init_basis(f.shape(), 0, 0)?;
    let mut oracle = CountingOracle::new(f);
    state.apply_walsh_control();
    oracle.add(&mut state)?;
    state.apply_walsh_control();
    state.apply_qft_fast(Register::Auxiliary, Direction::Forward);
    debug_assert_eq!(oracle.calls(), 1);
    Ok(state)
}

/// Exact distribution of the auxiliary outcome given control outcome `0`.
pub fn postselected_aux_distribution<T: Real>(f: &FunctionTable) -> Result<Vec<T>> {
    let state = period_state::<T>(f)?;
    let m = f.modulus();
    let row: Vec<T> = state.amplitudes()[..m].iter().map(|a| a.norm_sqr()).collect();
    let total = row.iter().fold(T::zero(), |acc, &p| acc + p);
    Ok(row.into_iter().map(|p| p / total).collect())
}

/// Estimate `μ` from `samples` accepted outcomes: `K̂ = gcd(outcomes, M)`,
/// `μ̂ = M / K̂`.
///
/// Every preparation is one oracle call. The pre-measurement state does not
/// depend on the preparation, so it is simulated once and each preparation
/// draws a fresh joint outcome from it.
pub fn find_mu<T: Real>(f: &FunctionTable, samples: usize, seed: u64) -> Result<PeriodReport> {
    if samples < 1 {
        return Err(Error::EmptyCount {
            what: "period samples",
            found: samples,
        });
    }
    let m = f.modulus();
    let state = period_state::<T>(f)?;
    let weights: Vec<f64> = state
        .amplitudes()
        .iter()
        .map(|a| a.norm_sqr().to_f64_lossy())
        .collect();
    let joint = WeightedIndex::new(&weights).expect("normalized state");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let budget = ATTEMPT_BUDGET * samples * f.domain_size().min(m);
    let mut accepted = Vec::with_capacity(samples);
    let mut attempts = 0;
    while accepted.len() < samples && attempts < budget {
        attempts += 1;
        let index = joint.sample(&mut rng);
        if index / m == 0 {
            accepted.push(index % m);
        }
    }

    let k_hat = accepted.iter().fold(m, |g, &w| gcd(g, w));
    let mu_hat = m / k_hat;
    let expected_mu = match classify_function(f) {
        c if c.class == PromiseClass::Neither => None,
        c => c.params.map(|p| p.mu),
    };
    let complete = accepted.len() == samples;
    Ok(PeriodReport {
        n: f.n(),
        m: f.m(),
        samples: accepted,
        attempts,
        oracle_calls: attempts,
        k_hat,
        mu_hat,
        inconclusive: k_hat == 1 || !complete,
        expected_mu,
        success: complete && expected_mu == Some(mu_hat),
        seed,
    })
}
