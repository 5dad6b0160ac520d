//! Run and period reports, serialized as JSON with floats rounded to 15
//! significant digits and amplitudes as `[re, im]` pairs.

use serde::{Serialize, Serializer};

use crate::algorithms::{Algorithm, AuxSpec, Decision, Transform};
use crate::oracle::PromiseClass;
use crate::scalar::{Amp, Real};

/// Round to 15 significant digits; `-0.0` becomes `0.0`.
pub fn round_sig15(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return if v == 0.0 { 0.0 } else { v };
    }
    let r: f64 = format!("{v:.14e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn ser_f64<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig15(*v))
}

fn ser_vec_f64<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| round_sig15(*x)))
}

fn ser_pairs<S: Serializer>(v: &[[f64; 2]], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|[re, im]| [round_sig15(*re), round_sig15(*im)]))
}

pub(crate) fn amp_pair<T: Real>(a: &Amp<T>) -> [f64; 2] {
    [a.re.to_f64_lossy(), a.im.to_f64_lossy()]
}

pub(crate) fn amp_pairs<T: Real>(amps: &[Amp<T>]) -> Vec<[f64; 2]> {
    amps.iter().map(amp_pair).collect()
}

/// Serializable description of the auxiliary register's initial state.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AuxReport {
    FourierOfMinusXi {
        xi: usize,
    },
    Product {
        #[serde(serialize_with = "ser_pair_pairs")]
        pairs: Vec<[[f64; 2]; 2]>,
    },
    Arbitrary {
        #[serde(serialize_with = "ser_pairs")]
        amplitudes: Vec<[f64; 2]>,
    },
}

fn ser_pair_pairs<S: Serializer>(v: &[[[f64; 2]; 2]], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|pair| {
        pair.map(|[re, im]| [round_sig15(re), round_sig15(im)])
    }))
}

impl<T: Real> From<&AuxSpec<T>> for AuxReport {
    fn from(spec: &AuxSpec<T>) -> Self {
        match spec {
            AuxSpec::FourierOfMinusXi(xi) => AuxReport::FourierOfMinusXi { xi: *xi },
            AuxSpec::ProductState(pairs) => AuxReport::Product {
                pairs: pairs.iter().map(|(a, b)| [amp_pair(a), amp_pair(b)]).collect(),
            },
            AuxSpec::Arbitrary(amps) => AuxReport::Arbitrary {
                amplitudes: amp_pairs(amps),
            },
        }
    }
}

/// Outcome of one end-to-end run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub n: u32,
    pub m: u32,
    pub transform: Transform,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<usize>,
    pub aux: AuxReport,
    /// Exact control-register distribution, auxiliary traced out.
    #[serde(serialize_with = "ser_vec_f64")]
    pub control_distribution: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<Vec<u64>>,
    #[serde(serialize_with = "ser_f64")]
    pub p_zero: f64,
    /// Simulated control amplitudes with the initial auxiliary state projected out.
    #[serde(serialize_with = "ser_pairs")]
    pub control_amplitudes: Vec<[f64; 2]>,
    /// Closed-form `S_y` (or `S'_y`) for every `y`.
    #[serde(serialize_with = "ser_pairs")]
    pub analytic_amplitudes: Vec<[f64; 2]>,
    pub decision: Decision,
    /// Where the input actually sits relative to the promise.
    pub promise: PromiseClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision_note: Option<String>,
    /// `|⟨Ψ_initial|Ψ_final⟩|²` on the auxiliary register.
    #[serde(serialize_with = "ser_f64")]
    pub aux_fidelity: f64,
    pub oracle_calls: usize,
    pub shots: u64,
    pub seed: u64,
}

/// Outcome of the `μ` recovery routine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub n: u32,
    pub m: u32,
    /// Accepted auxiliary outcomes.
    pub samples: Vec<usize>,
    /// Preparations run, accepted or not.
    pub attempts: usize,
    pub oracle_calls: usize,
    pub k_hat: usize,
    pub mu_hat: usize,
    /// No nontrivial period observed (`K̂ = 1`) or too few samples accepted.
    pub inconclusive: bool,
    /// `μ` from the brute-force classifier, when `f` is on the promise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_mu: Option<usize>,
    pub success: bool,
    pub seed: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::approx_constant, clippy::excessive_precision)]
    fn rounding_keeps_fifteen_digits() {
        assert_eq!(round_sig15(0.1 + 0.2), 0.3);
        assert_eq!(round_sig15(std::f64::consts::FRAC_1_SQRT_2), 0.707106781186548);
        assert_eq!(round_sig15(-0.0), 0.0);
        assert_eq!(round_sig15(1e-300), 1e-300);
        assert_eq!(round_sig15(-1.23456789012345678e-17), -1.23456789012346e-17);
    }
}
