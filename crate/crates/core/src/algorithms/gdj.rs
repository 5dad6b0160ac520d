use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::oracle::{classify_function, parity_of, FunctionTable, PromiseClass};
use crate::report::{amp_pairs, AuxReport, RunReport};
use crate::scalar::{Amp, Real};
use crate::state::{FactoredState, PhaseMode, Register, StateVector};
use crate::transform::{bit_dot, Direction};

use super::auxiliary::{check_pair, AuxSpec};
use super::{Algorithm, CountingOracle, Decision, Transform, OFF_PROMISE_NOTE};

/// Final dense state of a run together with what is needed to read it out.
#[derive(Debug, Clone)]
pub struct Simulation<T> {
    pub state: StateVector<T>,
    /// Auxiliary vector the run started from.
    pub aux_initial: Vec<Amp<T>>,
    pub oracle_calls: usize,
}

impl<T: Real> Simulation<T> {
    /// Control amplitudes with the initial auxiliary state projected out.
    pub fn control_amplitudes(&self) -> Vec<Amp<T>> {
        self.state
            .project_aux(&self.aux_initial)
            .expect("aux vector built for this shape")
    }

    pub fn aux_fidelity(&self) -> T {
        self.state
            .aux_fidelity(&self.aux_initial)
            .expect("aux vector built for this shape")
    }

    pub fn control_distribution(&self) -> Vec<T> {
        self.state.marginal(Register::Control)
    }
}

fn control_transform<T: Real>(state: &mut StateVector<T>, transform: Transform, last: bool) {
    match (transform, last) {
        (Transform::Walsh, _) => state.apply_walsh_control(),
        (Transform::Fourier, true) => state.apply_qft(Register::Control, Direction::Inverse),
        (Transform::Fourier | Transform::FourierForward, _) => {
            state.apply_qft(Register::Control, Direction::Forward)
        }
    }
}

fn check_xi(f: &FunctionTable, xi: usize) -> Result<()> {
    if xi == 0 || xi >= f.modulus() {
        return Err(Error::InvalidXi {
            xi,
            modulus: f.modulus(),
        });
    }
    Ok(())
}

/// Transform, `U_f`, transform on `|0^n⟩ ⊗ F|−ξ⟩`.
///
/// `ξ` must be nonzero; it cancels every evenly distributed `f` only when
/// `K ∤ ξ`, which `ξ = 1` guarantees for all `K ≥ 2`.
pub fn simulate_gdj1<T: Real>(f: &FunctionTable, xi: usize, transform: Transform) -> Result<Simulation<T>> {
    check_xi(f, xi)?;
    let shape = f.shape();
    let m = shape.aux_dim();
    let mut state = StateVector::<T>::init_basis(shape, 0, (m - xi) % m)?;
    state.apply_qft(Register::Auxiliary, Direction::Forward);
    let aux_initial = state.amplitudes()[..m].to_vec();

    let mut oracle = CountingOracle::new(f);
    control_transform(&mut state, transform, false);
    oracle.add(&mut state)?;
    control_transform(&mut state, transform, true);
    Ok(Simulation {
        state,
        aux_initial,
        oracle_calls: oracle.calls(),
    })
}

/// The two-call sandwich on a single-qubit auxiliary register in the
/// arbitrary state `a|0⟩ + b|1⟩`: W, U_f, σ_z, U_f, σ_z, W.
pub fn simulate_dj_uninit<T: Real>(f: &FunctionTable, a: Amp<T>, b: Amp<T>) -> Result<Simulation<T>> {
    if f.m() != 1 {
        return Err(Error::NotBoolean { m: f.m() });
    }
    check_pair(a, b)?;
    let shape = f.shape();
    let aux_initial = vec![a, b];
    let mut state = StateVector::product(shape, &basis_zero(shape.control_dim()), &aux_initial)?;

    let mut oracle = CountingOracle::new(f);
    state.apply_walsh_control();
    oracle.add(&mut state)?;
    state.apply_pauli_z_aux();
    oracle.add(&mut state)?;
    state.apply_pauli_z_aux();
    state.apply_walsh_control();
    Ok(Simulation {
        state,
        aux_initial,
        oracle_calls: oracle.calls(),
    })
}

/// The bitwise two-call sandwich: transform, `U_f^⊕`, `σ_z^{⊗m}`, `U_f^⊕`,
/// `σ_z^{⊗m}`, transform. Only product auxiliary states are accepted.
pub fn simulate_gdj2<T: Real>(f: &FunctionTable, aux: &AuxSpec<T>, transform: Transform) -> Result<Simulation<T>> {
    if !matches!(aux, AuxSpec::ProductState(_)) {
        return Err(Error::NonProductAux);
    }
    let shape = f.shape();
    let aux_initial = aux.vector(shape)?;
    let mut state = StateVector::product(shape, &basis_zero(shape.control_dim()), &aux_initial)?;

    let mut oracle = CountingOracle::new(f);
    control_transform(&mut state, transform, false);
    oracle.xor(&mut state)?;
    state.apply_pauli_z_aux();
    oracle.xor(&mut state)?;
    state.apply_pauli_z_aux();
    control_transform(&mut state, transform, true);
    Ok(Simulation {
        state,
        aux_initial,
        oracle_calls: oracle.calls(),
    })
}

/// The same circuit as [`simulate_gdj1`] evaluated without the auxiliary
/// register: transform, `R_{ξ,f}`, transform on the control factor.
pub fn kickback_fast_path<T: Real>(f: &FunctionTable, xi: usize, transform: Transform) -> Result<FactoredState<T>> {
    check_xi(f, xi)?;
    let shape = f.shape();
    let aux = AuxSpec::<T>::FourierOfMinusXi(xi).vector(shape)?;
    let mut fs = FactoredState::new(shape, basis_zero(shape.control_dim()), aux)?;
    let step = |fs: &mut FactoredState<T>, last: bool| match (transform, last) {
        (Transform::Walsh, _) => fs.apply_walsh_control(),
        (Transform::Fourier, true) => fs.apply_qft_control(Direction::Inverse),
        _ => fs.apply_qft_control(Direction::Forward),
    };
    step(&mut fs, false);
    fs.apply_phase_transform(f, xi, PhaseMode::Exact)?;
    step(&mut fs, true);
    Ok(fs)
}

fn basis_zero<T: Real>(dim: usize) -> Vec<Amp<T>> {
    let mut v = vec![Amp::new(T::zero(), T::zero()); dim];
    v[0] = Amp::new(T::one(), T::zero());
    v
}

/// `(1/N) Σ_x kernel(x, y) e^{iθ(x)}` with `θ(x)` given in turns.
fn kernel_sum<T: Real>(size: usize, y: usize, transform: Transform, turns: impl Fn(usize) -> f64) -> Amp<T> {
    let sum = (0..size).fold(Amp::new(T::zero(), T::zero()), |acc, x| {
        let xy = (x * y % size) as f64 / size as f64;
        let (sign, extra) = match transform {
            Transform::Walsh => (if bit_dot(x, y) == 1 { -1.0 } else { 1.0 }, 0.0),
            Transform::Fourier => (1.0, -xy),
            Transform::FourierForward => (1.0, xy),
        };
        let angle = TAU * (turns(x) + extra);
        acc + Amp::new(
            T::from_f64_lossy(sign * angle.cos()),
            T::from_f64_lossy(sign * angle.sin()),
        )
    });
    sum.unscale(T::from_usize_lossy(size))
}

/// `S_y = (1/N) Σ_x (−1)^{x·y} ω_M^{ξ f(x)}`, by direct summation.
pub fn analytic_sy<T: Real>(f: &FunctionTable, xi: usize, y: usize) -> Amp<T> {
    analytic_sy_with(f, xi, y, Transform::Walsh)
}

/// `S_y` for any control transform; the Fourier variants use `ω_N^{∓xy}`.
pub fn analytic_sy_with<T: Real>(f: &FunctionTable, xi: usize, y: usize, transform: Transform) -> Amp<T> {
    let modulus = f.modulus();
    kernel_sum(f.domain_size(), y, transform, |x| {
        (xi * f.eval(x) % modulus) as f64 / modulus as f64
    })
}

/// `S'_y = (1/N) Σ_x (−1)^{x·y} (−1)^{p(f(x))}`, by direct summation.
pub fn analytic_sy_prime<T: Real>(f: &FunctionTable, y: usize) -> T {
    let sum: i64 = (0..f.domain_size())
        .map(|x| {
            if (bit_dot(x, y) as u8 + parity_of(f.eval(x))).is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .sum();
    T::from_f64_lossy(sum as f64 / f.domain_size() as f64)
}

/// `S'_y` for any control transform.
pub fn analytic_sy_prime_with<T: Real>(f: &FunctionTable, y: usize, transform: Transform) -> Amp<T> {
    kernel_sum(f.domain_size(), y, transform, |x| 0.5 * parity_of(f.eval(x)) as f64)
}

struct ReportParts {
    algorithm: Algorithm,
    transform: Transform,
    xi: Option<usize>,
    aux: AuxReport,
    analytic: Vec<[f64; 2]>,
    shots: u64,
    seed: u64,
}

fn build_report<T: Real>(f: &FunctionTable, sim: &Simulation<T>, parts: ReportParts) -> RunReport {
    let measurement = sim.state.measure(Register::Control, parts.shots, parts.seed);
    let control_distribution: Vec<f64> = measurement.probabilities.iter().map(|p| p.to_f64_lossy()).collect();
    let p_zero = control_distribution[0];
    let promise = classify_function(f).class;
    RunReport {
        algorithm: parts.algorithm,
        n: f.n(),
        m: f.m(),
        transform: parts.transform,
        xi: parts.xi,
        aux: parts.aux,
        control_distribution,
        histogram: measurement.histogram,
        p_zero,
        control_amplitudes: amp_pairs(&sim.control_amplitudes()),
        analytic_amplitudes: parts.analytic,
        decision: Decision::from_p_zero(p_zero),
        promise,
        decision_note: (promise == PromiseClass::Neither).then(|| OFF_PROMISE_NOTE.to_string()),
        aux_fidelity: sim.aux_fidelity().to_f64_lossy(),
        oracle_calls: sim.oracle_calls,
        shots: parts.shots,
        seed: parts.seed,
    }
}

/// Single-evaluation generalized algorithm with auxiliary `F|−ξ⟩`.
pub fn run_gdj1<T: Real>(f: &FunctionTable, xi: usize, transform: Transform, shots: u64, seed: u64) -> Result<RunReport> {
    let sim = simulate_gdj1::<T>(f, xi, transform)?;
    let analytic: Vec<Amp<T>> = (0..f.domain_size())
        .map(|y| analytic_sy_with(f, xi, y, transform))
        .collect();
    Ok(build_report(
        f,
        &sim,
        ReportParts {
            algorithm: Algorithm::Gdj1,
            transform,
            xi: Some(xi),
            aux: AuxReport::from(&AuxSpec::<T>::FourierOfMinusXi(xi)),
            analytic: amp_pairs(&analytic),
            shots,
            seed,
        },
    ))
}

/// Boolean Deutsch-Jozsa with an uninitialized single-qubit auxiliary register.
pub fn run_dj_uninit<T: Real>(f: &FunctionTable, a: Amp<T>, b: Amp<T>, shots: u64, seed: u64) -> Result<RunReport> {
    let sim = simulate_dj_uninit(f, a, b)?;
    let analytic: Vec<Amp<T>> = (0..f.domain_size()).map(|y| analytic_sy(f, 1, y)).collect();
    Ok(build_report(
        f,
        &sim,
        ReportParts {
            algorithm: Algorithm::DjUninit,
            transform: Transform::Walsh,
            xi: None,
            aux: AuxReport::from(&AuxSpec::ProductState(vec![(a, b)])),
            analytic: amp_pairs(&analytic),
            shots,
            seed,
        },
    ))
}

/// Parity variant with an uninitialized product-state auxiliary register.
pub fn run_gdj2<T: Real>(
    f: &FunctionTable,
    aux: &AuxSpec<T>,
    transform: Transform,
    shots: u64,
    seed: u64,
) -> Result<RunReport> {
    let sim = simulate_gdj2(f, aux, transform)?;
    let analytic: Vec<Amp<T>> = (0..f.domain_size())
        .map(|y| analytic_sy_prime_with(f, y, transform))
        .collect();
    Ok(build_report(
        f,
        &sim,
        ReportParts {
            algorithm: Algorithm::Gdj2,
            transform,
            xi: None,
            aux: AuxReport::from(aux),
            analytic: amp_pairs(&analytic),
            shots,
            seed,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::make_constant;
    use crate::scalar::max_abs_diff;

    type C = Amp<f64>;
    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn f0202() -> FunctionTable {
        FunctionTable::new(2, 2, vec![0, 2, 0, 2]).unwrap()
    }

    #[test]
    fn gdj1_constant_concentrates_on_zero() {
        for c in 0..4 {
            let f = make_constant(2, 2, c).unwrap();
            for transform in [Transform::Walsh, Transform::Fourier, Transform::FourierForward] {
                let r = run_gdj1::<f64>(&f, 1, transform, 0, 0).unwrap();
                assert!((r.p_zero - 1.0).abs() < 1e-12);
                assert!((r.aux_fidelity - 1.0).abs() < 1e-12);
                assert_eq!(r.decision, Decision::NotEvenlyDistributed);
                assert_eq!(r.oracle_calls, 1);
            }
        }
    }

    #[test]
    fn gdj1_on_0202_lands_on_one() {
        let r = run_gdj1::<f64>(&f0202(), 1, Transform::Walsh, 0, 0).unwrap();
        assert!(r.p_zero < 1e-12);
        assert!((r.control_distribution[1] - 1.0).abs() < 1e-12);
        assert_eq!(r.decision, Decision::Nonconstant);
        assert_eq!(r.promise, PromiseClass::EvenlyDistributed);
        assert!(r.decision_note.is_none());
    }

    #[test]
    fn gdj1_rejects_zero_xi() {
        assert!(matches!(
            run_gdj1::<f64>(&f0202(), 0, Transform::Walsh, 0, 0),
            Err(Error::InvalidXi { xi: 0, .. })
        ));
        assert!(matches!(
            run_gdj1::<f64>(&f0202(), 4, Transform::Walsh, 0, 0),
            Err(Error::InvalidXi { xi: 4, .. })
        ));
    }

    #[test]
    fn analytic_sy_examples() {
        // Frozen from direct 4-term sums: S = [0, 1, 0, 0].
        let s: Vec<C> = (0..4).map(|y| analytic_sy(&f0202(), 1, y)).collect();
        assert!(max_abs_diff(&s, &[C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0)]) < 1e-15);

        let g = make_constant(2, 3, 3).unwrap();
        let s0: C = analytic_sy(&g, 1, 0);
        assert!((s0 - C::from_polar(1.0, TAU * 3.0 / 8.0)).norm() < 1e-15);

        let s: Vec<f64> = (0..4).map(|y| analytic_sy_prime(&f0202(), y)).collect();
        assert_eq!(s, vec![0.0, 1.0, 0.0, 0.0]);
        let z = make_constant(2, 2, 0).unwrap();
        assert_eq!(analytic_sy_prime::<f64>(&z, 0), 1.0);
        assert_eq!(analytic_sy_prime::<f64>(&z, 3), 0.0);
    }

    #[test]
    fn dj_uninit_restores_auxiliary() {
        let f = FunctionTable::new(1, 1, vec![0, 1]).unwrap();
        let r = run_dj_uninit::<f64>(&f, C::new(1.0, 0.0), C::new(0.0, 0.0), 0, 0).unwrap();
        assert!(r.p_zero < 1e-12);
        assert!((r.aux_fidelity - 1.0).abs() < 1e-12);
        assert_eq!(r.oracle_calls, 2);

        let g = FunctionTable::new(1, 2, vec![0, 1]).unwrap();
        assert!(matches!(
            run_dj_uninit::<f64>(&g, C::new(1.0, 0.0), C::new(0.0, 0.0), 0, 0),
            Err(Error::NotBoolean { m: 2 })
        ));
    }

    #[test]
    fn steps_three_to_five_are_identity_for_minus_state() {
        let f = FunctionTable::new(2, 1, vec![0, 1, 1, 1]).unwrap();
        let (a, b) = (C::new(H, 0.0), C::new(-H, 0.0));
        let shape = f.shape();
        let mut after_two = StateVector::product(shape, &basis_zero(4), &[a, b]).unwrap();
        after_two.apply_walsh_control();
        after_two.apply_oracle_add(&f).unwrap();
        let mut after_five = after_two.clone();
        after_five.apply_pauli_z_aux();
        after_five.apply_oracle_add(&f).unwrap();
        after_five.apply_pauli_z_aux();
        assert!(max_abs_diff(after_two.amplitudes(), after_five.amplitudes()) < 1e-15);
    }

    #[test]
    fn gdj2_examples() {
        let aux = AuxSpec::<f64>::uniform_product(2, C::new(0.6, 0.0), C::new(0.0, 0.8));
        let r = run_gdj2(&f0202(), &aux, Transform::Walsh, 0, 0).unwrap();
        assert!((r.control_distribution[1] - 1.0).abs() < 1e-12);
        assert!((r.aux_fidelity - 1.0).abs() < 1e-12);
        assert_eq!(r.oracle_calls, 2);

        let c = make_constant(2, 2, 1).unwrap();
        let r = run_gdj2(&c, &aux, Transform::Walsh, 0, 0).unwrap();
        assert!((r.p_zero - 1.0).abs() < 1e-12);
        // S'_0 = (-1)^{p(1)} = -1
        assert!((r.control_amplitudes[0][0] + 1.0).abs() < 1e-12);

        let entangled = AuxSpec::Arbitrary(vec![C::new(H, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(H, 0.0)]);
        assert!(matches!(
            run_gdj2(&f0202(), &entangled, Transform::Walsh, 0, 0),
            Err(Error::NonProductAux)
        ));
    }

    #[test]
    fn fast_path_matches_dense() {
        let f = FunctionTable::new(3, 2, vec![0, 1, 3, 2, 2, 1, 0, 3]).unwrap();
        for xi in 1..4 {
            for transform in [Transform::Walsh, Transform::Fourier, Transform::FourierForward] {
                let dense = simulate_gdj1::<f64>(&f, xi, transform).unwrap();
                let fast = kickback_fast_path::<f64>(&f, xi, transform).unwrap().expand();
                assert!(max_abs_diff(dense.state.amplitudes(), fast.amplitudes()) < 1e-10);
            }
        }
    }

    #[test]
    fn off_promise_runs_are_labelled() {
        let f = FunctionTable::new(2, 1, vec![0, 0, 0, 1]).unwrap();
        let r = run_gdj1::<f64>(&f, 1, Transform::Walsh, 0, 0).unwrap();
        assert_eq!(r.promise, PromiseClass::Neither);
        assert_eq!(r.decision_note.as_deref(), Some(OFF_PROMISE_NOTE));
        assert!((r.p_zero - 0.25).abs() < 1e-12);
    }
}
