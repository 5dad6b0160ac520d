//! Dense two-register state vectors and the unitaries the algorithms are
//! built from.
//!
//! The joint basis state `|x⟩ ⊗ |z⟩` lives at flat index `x·M + z`, with
//! `x ∈ Z_N` on the control register and `z ∈ Z_M` on the auxiliary register.
//! Bits within each register are little-endian.

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{parity_of, FunctionTable};
use crate::scalar::{amp_is_finite, inner, norm_sqr, Amp, Real};
use crate::transform::{dft_direct, dft_fast, walsh_strided, Direction, RootTable};

/// Largest supported `n + m`.
pub const MAX_QUBITS: u32 = 26;

/// Qubit counts of the control (`n`) and auxiliary (`m`) registers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegisterShape {
    n: u32,
    m: u32,
}

impl RegisterShape {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 || n + m > MAX_QUBITS {
            return Err(Error::InvalidShape { n, m, max: MAX_QUBITS });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `N = 2^n`.
    pub fn control_dim(&self) -> usize {
        1 << self.n
    }

    /// `M = 2^m`.
    pub fn aux_dim(&self) -> usize {
        1 << self.m
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        1 << (self.n + self.m)
    }

    pub fn dim(&self, register: Register) -> usize {
        match register {
            Register::Control => self.control_dim(),
            Register::Auxiliary => self.aux_dim(),
        }
    }

    fn check_table(&self, f: &FunctionTable) -> Result<()> {
        if f.n() != self.n || f.m() != self.m {
            return Err(Error::ShapeMismatch {
                state_n: self.n,
                state_m: self.m,
                f_n: f.n(),
                f_m: f.m(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Register {
    Control,
    Auxiliary,
}

/// How [`StateVector::apply_phase_transform`] turns `f(x)` into a phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhaseMode {
    /// `ω_M^{ξ f(x)}`.
    Exact,
    /// `(−1)^{p(f(x))}` with `p` the bit parity; `ξ` is ignored.
    Parity,
}

/// Phase factors `x ↦ ω_M^{ξ f(x)}` or `(−1)^{p(f(x))}` for every control index.
pub fn phase_factors<T: Real>(f: &FunctionTable, xi: usize, mode: PhaseMode) -> Result<Vec<Amp<T>>> {
    let modulus = f.modulus();
    if xi >= modulus {
        return Err(Error::InvalidXi { xi, modulus });
    }
    let one = Amp::new(T::one(), T::zero());
    Ok(match mode {
        PhaseMode::Exact => {
            let roots = RootTable::<T>::new(modulus);
            f.values().iter().map(|&v| roots.pow(xi * v % modulus)).collect()
        }
        PhaseMode::Parity => f
            .values()
            .iter()
            .map(|&v| if parity_of(v) == 0 { one } else { -one })
            .collect(),
    })
}

/// Exact marginal distribution plus an optional sampled histogram.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement<T> {
    pub probabilities: Vec<T>,
    pub histogram: Option<Vec<u64>>,
}

/// Draw `shots` outcomes from `probabilities` into a histogram.
pub(crate) fn sample_histogram<T: Real>(probabilities: &[T], shots: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let weights: Vec<f64> = probabilities.iter().map(|p| p.to_f64_lossy().max(0.0)).collect();
    let dist = WeightedIndex::new(&weights).expect("probabilities sum to one");
    let mut counts = vec![0u64; probabilities.len()];
    for _ in 0..shots {
        counts[dist.sample(rng)] += 1;
    }
    counts
}

/// Complex amplitudes over the joint control ⊗ auxiliary basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    shape: RegisterShape,
    amps: Vec<Amp<T>>,
}

impl<T: Real> StateVector<T> {
    /// `|x⟩ ⊗ |z⟩`.
    pub fn init_basis(shape: RegisterShape, x: usize, z: usize) -> Result<Self> {
        if x >= shape.control_dim() {
            return Err(Error::IndexOutOfRange {
                what: "control",
                index: x,
                bound: shape.control_dim(),
            });
        }
        if z >= shape.aux_dim() {
            return Err(Error::IndexOutOfRange {
                what: "auxiliary",
                index: z,
                bound: shape.aux_dim(),
            });
        }
        let mut amps = vec![Amp::new(T::zero(), T::zero()); shape.len()];
        amps[x * shape.aux_dim() + z] = Amp::new(T::one(), T::zero());
        Ok(Self { shape, amps })
    }

    /// Wrap raw amplitudes; they must be finite and unit-norm.
    pub fn from_amplitudes(shape: RegisterShape, amps: Vec<Amp<T>>) -> Result<Self> {
        if amps.len() != shape.len() {
            return Err(Error::LengthMismatch {
                expected: shape.len(),
                found: amps.len(),
            });
        }
        check_unit("state vector", &amps)?;
        Ok(Self { shape, amps })
    }

    /// `|control⟩ ⊗ |aux⟩`.
    pub fn product(shape: RegisterShape, control: &[Amp<T>], aux: &[Amp<T>]) -> Result<Self> {
        if control.len() != shape.control_dim() {
            return Err(Error::LengthMismatch {
                expected: shape.control_dim(),
                found: control.len(),
            });
        }
        if aux.len() != shape.aux_dim() {
            return Err(Error::LengthMismatch {
                expected: shape.aux_dim(),
                found: aux.len(),
            });
        }
        check_unit("control factor", control)?;
        check_unit("auxiliary factor", aux)?;
        let amps = control
            .iter()
            .flat_map(|c| aux.iter().map(move |a| c * a))
            .collect();
        Ok(Self { shape, amps })
    }

    pub fn shape(&self) -> RegisterShape {
        self.shape
    }

    pub fn amplitudes(&self) -> &[Amp<T>] {
        &self.amps
    }

    pub fn amp(&self, x: usize, z: usize) -> Amp<T> {
        self.amps[x * self.shape.aux_dim() + z]
    }

    pub fn norm_sqr(&self) -> T {
        norm_sqr(&self.amps)
    }

    pub fn is_finite(&self) -> bool {
        self.amps.iter().all(amp_is_finite)
    }

    /// `W_n ⊗ I`.
    pub fn apply_walsh_control(&mut self) {
        let (n, m) = (self.shape.control_dim(), self.shape.aux_dim());
        walsh_strided(&mut self.amps, n, m);
    }

    /// Fourier transform of one register by the direct `O(D²)` sum.
    pub fn apply_qft(&mut self, target: Register, dir: Direction) {
        self.map_register(target, |column, roots| dft_direct(column, roots, dir));
    }

    /// Same transform as [`apply_qft`](Self::apply_qft) through the radix-2 butterfly.
    pub fn apply_qft_fast(&mut self, target: Register, dir: Direction) {
        self.map_register(target, |column, roots| {
            let mut buf = column.to_vec();
            dft_fast(&mut buf, roots, dir);
            buf
        });
    }

    fn map_register<F>(&mut self, target: Register, mut op: F)
    where
        F: FnMut(&[Amp<T>], &RootTable<T>) -> Vec<Amp<T>>,
    {
        let (n, m) = (self.shape.control_dim(), self.shape.aux_dim());
        match target {
            Register::Auxiliary => {
                let roots = RootTable::new(m);
                for block in self.amps.chunks_exact_mut(m) {
                    let out = op(block, &roots);
                    block.copy_from_slice(&out);
                }
            }
            Register::Control => {
                let roots = RootTable::new(n);
                let mut column = vec![Amp::new(T::zero(), T::zero()); n];
                for z in 0..m {
                    for (x, slot) in column.iter_mut().enumerate() {
                        *slot = self.amps[x * m + z];
                    }
                    let out = op(&column, &roots);
                    for (x, a) in out.into_iter().enumerate() {
                        self.amps[x * m + z] = a;
                    }
                }
            }
        }
    }

    /// `U_f: |x⟩|z⟩ ↦ |x⟩|z + f(x) mod M⟩`.
    pub fn apply_oracle_add(&mut self, f: &FunctionTable) -> Result<()> {
        self.shape.check_table(f)?;
        let m = self.shape.aux_dim();
        for (block, &shift) in self.amps.chunks_exact_mut(m).zip(f.values()) {
            block.rotate_right(shift);
        }
        Ok(())
    }

    /// `U_f^⊕: |x⟩|z⟩ ↦ |x⟩|z ⊕ f(x)⟩`.
    pub fn apply_oracle_xor(&mut self, f: &FunctionTable) -> Result<()> {
        self.shape.check_table(f)?;
        let m = self.shape.aux_dim();
        for (block, &mask) in self.amps.chunks_exact_mut(m).zip(f.values()) {
            if mask == 0 {
                continue;
            }
            for z in 0..m {
                let partner = z ^ mask;
                if z < partner {
                    block.swap(z, partner);
                }
            }
        }
        Ok(())
    }

    /// `I ⊗ σ_z^{⊗m}`: sign `(−1)^{popcount(z)}`.
    pub fn apply_pauli_z_aux(&mut self) {
        let m = self.shape.aux_dim();
        for block in self.amps.chunks_exact_mut(m) {
            for (z, a) in block.iter_mut().enumerate() {
                if parity_of(z) == 1 {
                    *a = -*a;
                }
            }
        }
    }

    /// `R_{ξ,f} ⊗ I` applied directly to the control register.
    pub fn apply_phase_transform(&mut self, f: &FunctionTable, xi: usize, mode: PhaseMode) -> Result<()> {
        self.shape.check_table(f)?;
        let phases = phase_factors::<T>(f, xi, mode)?;
        let m = self.shape.aux_dim();
        for (block, phase) in self.amps.chunks_exact_mut(m).zip(&phases) {
            for a in block {
                *a *= phase;
            }
        }
        Ok(())
    }

    /// Marginal probabilities of `target`, tracing out the other register.
    pub fn marginal(&self, target: Register) -> Vec<T> {
        let (n, m) = (self.shape.control_dim(), self.shape.aux_dim());
        match target {
            Register::Control => self
                .amps
                .chunks_exact(m)
                .map(|block| norm_sqr(block))
                .collect(),
            Register::Auxiliary => {
                let mut probs = vec![T::zero(); m];
                for x in 0..n {
                    for (z, p) in probs.iter_mut().enumerate() {
                        *p += self.amps[x * m + z].norm_sqr();
                    }
                }
                probs
            }
        }
    }

    /// Exact marginal of `target`; with `shots > 0` also a histogram sampled
    /// from a ChaCha8 stream seeded by `seed`.
    pub fn measure(&self, target: Register, shots: u64, seed: u64) -> Measurement<T> {
        let probabilities = self.marginal(target);
        let histogram = (shots > 0).then(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sample_histogram(&probabilities, shots, &mut rng)
        });
        Measurement { probabilities, histogram }
    }

    /// Control amplitudes `Σ_z conj(aux(z)) ψ(x, z)`: the control factor when
    /// the state is `|c⟩ ⊗ |aux⟩`.
    pub fn project_aux(&self, aux: &[Amp<T>]) -> Result<Vec<Amp<T>>> {
        if aux.len() != self.shape.aux_dim() {
            return Err(Error::LengthMismatch {
                expected: self.shape.aux_dim(),
                found: aux.len(),
            });
        }
        Ok(self
            .amps
            .chunks_exact(aux.len())
            .map(|block| inner(aux, block))
            .collect())
    }

    /// `⟨aux| ρ_aux |aux⟩`, the fidelity of the reduced auxiliary state with
    /// the pure state `aux`.
    pub fn aux_fidelity(&self, aux: &[Amp<T>]) -> Result<T> {
        Ok(norm_sqr(&self.project_aux(aux)?))
    }
}

fn check_unit<T: Real>(what: &'static str, amps: &[Amp<T>]) -> Result<()> {
    if !amps.iter().all(amp_is_finite) {
        return Err(Error::NonFinite(what));
    }
    let ns = norm_sqr(amps);
    if (ns - T::one()).abs() > T::unit_tolerance() {
        return Err(Error::NotNormalized {
            what,
            norm_sqr: ns.to_f64_lossy(),
        });
    }
    Ok(())
}

/// A state known to be `|control⟩ ⊗ |aux⟩`.
///
/// Kept factored, the phase-kickback circuit reduces to `W_n R_{ξ,f} W_n`
/// on the control factor alone with the auxiliary factor untouched.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredState<T> {
    shape: RegisterShape,
    control: Vec<Amp<T>>,
    aux: Vec<Amp<T>>,
}

impl<T: Real> FactoredState<T> {
    pub fn new(shape: RegisterShape, control: Vec<Amp<T>>, aux: Vec<Amp<T>>) -> Result<Self> {
        if control.len() != shape.control_dim() {
            return Err(Error::LengthMismatch {
                expected: shape.control_dim(),
                found: control.len(),
            });
        }
        if aux.len() != shape.aux_dim() {
            return Err(Error::LengthMismatch {
                expected: shape.aux_dim(),
                found: aux.len(),
            });
        }
        check_unit("control factor", &control)?;
        check_unit("auxiliary factor", &aux)?;
        Ok(Self { shape, control, aux })
    }

    pub fn shape(&self) -> RegisterShape {
        self.shape
    }

    pub fn control(&self) -> &[Amp<T>] {
        &self.control
    }

    pub fn aux(&self) -> &[Amp<T>] {
        &self.aux
    }

    pub fn apply_walsh_control(&mut self) {
        let n = self.shape.control_dim();
        walsh_strided(&mut self.control, n, 1);
    }

    pub fn apply_qft_control(&mut self, dir: Direction) {
        let roots = RootTable::new(self.shape.control_dim());
        self.control = dft_direct(&self.control, &roots, dir);
    }

    pub fn apply_phase_transform(&mut self, f: &FunctionTable, xi: usize, mode: PhaseMode) -> Result<()> {
        self.shape.check_table(f)?;
        let phases = phase_factors::<T>(f, xi, mode)?;
        for (a, phase) in self.control.iter_mut().zip(&phases) {
            *a *= phase;
        }
        Ok(())
    }

    /// Outer product as a dense state.
    pub fn expand(&self) -> StateVector<T> {
        StateVector::product(self.shape, &self.control, &self.aux).expect("factors validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::max_abs_diff;

    type C = Amp<f64>;
    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn shape(n: u32, m: u32) -> RegisterShape {
        RegisterShape::new(n, m).unwrap()
    }

    #[test]
    fn basis_states() {
        let s = StateVector::<f64>::init_basis(shape(1, 1), 0, 0).unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let s = StateVector::<f64>::init_basis(shape(2, 1), 3, 1).unwrap();
        assert_eq!(s.amplitudes()[7], c(1.0, 0.0));
        assert_eq!(s.norm_sqr(), 1.0);
        assert!(matches!(
            StateVector::<f64>::init_basis(shape(1, 2), 2, 0),
            Err(Error::IndexOutOfRange { what: "control", index: 2, bound: 2 })
        ));
        assert!(RegisterShape::new(0, 1).is_err());
        assert!(RegisterShape::new(20, 7).is_err());
    }

    #[test]
    fn walsh_examples() {
        let mut s = StateVector::<f64>::init_basis(shape(2, 1), 0, 1).unwrap();
        s.apply_walsh_control();
        for x in 0..4 {
            assert!((s.amp(x, 1) - c(0.5, 0.0)).norm() < 1e-15);
            assert_eq!(s.amp(x, 0), c(0.0, 0.0));
        }
        let mut s = StateVector::<f64>::init_basis(shape(1, 1), 1, 0).unwrap();
        s.apply_walsh_control();
        assert!(max_abs_diff(s.amplitudes(), &[c(H, 0.0), c(0.0, 0.0), c(-H, 0.0), c(0.0, 0.0)]) < 1e-15);
        let before = s.clone();
        s.apply_walsh_control();
        s.apply_walsh_control();
        assert!(max_abs_diff(s.amplitudes(), before.amplitudes()) < 1e-12);
    }

    #[test]
    fn qft_prepares_fourier_of_minus_xi() {
        // F|-1 mod 2> = F|1> = (|0> - |1>)/sqrt2
        let mut s = StateVector::<f64>::init_basis(shape(1, 1), 0, 1).unwrap();
        s.apply_qft(Register::Auxiliary, Direction::Forward);
        assert!(max_abs_diff(&s.amplitudes()[..2], &[c(H, 0.0), c(-H, 0.0)]) < 1e-15);

        let mut s = StateVector::<f64>::init_basis(shape(1, 2), 0, 1).unwrap();
        s.apply_qft(Register::Auxiliary, Direction::Forward);
        let expected = [c(0.5, 0.0), c(0.0, 0.5), c(-0.5, 0.0), c(0.0, -0.5)];
        assert!(max_abs_diff(&s.amplitudes()[..4], &expected) < 1e-15);
    }

    #[test]
    fn qft_fast_matches_direct_on_both_registers() {
        let f = FunctionTable::new(3, 2, vec![0, 1, 3, 2, 2, 1, 0, 3]).unwrap();
        let mut base = StateVector::<f64>::init_basis(shape(3, 2), 0, 0).unwrap();
        base.apply_walsh_control();
        base.apply_oracle_add(&f).unwrap();
        base.apply_qft(Register::Auxiliary, Direction::Forward);
        for reg in [Register::Control, Register::Auxiliary] {
            for dir in [Direction::Forward, Direction::Inverse] {
                let mut a = base.clone();
                let mut b = base.clone();
                a.apply_qft(reg, dir);
                b.apply_qft_fast(reg, dir);
                assert!(max_abs_diff(a.amplitudes(), b.amplitudes()) < 1e-12);
                a.apply_qft(reg, dir.reversed());
                assert!(max_abs_diff(a.amplitudes(), base.amplitudes()) < 1e-12);
            }
        }
    }

    #[test]
    fn oracle_add_permutes_mod_m() {
        let f = FunctionTable::new(1, 2, vec![1, 3]).unwrap();
        let shape = shape(1, 2);
        let mut amps = vec![c(0.0, 0.0); 8];
        amps[2] = c(H, 0.0);
        amps[4 + 2] = c(H, 0.0);
        let mut s = StateVector::from_amplitudes(shape, amps).unwrap();
        s.apply_oracle_add(&f).unwrap();
        assert_eq!(s.amp(0, 3), c(H, 0.0));
        assert_eq!(s.amp(1, 1), c(H, 0.0));
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);

        let zero = crate::oracle::make_constant(1, 2, 0).unwrap();
        let before = s.clone();
        s.apply_oracle_add(&zero).unwrap();
        assert_eq!(s, before);

        let three = crate::oracle::make_constant(1, 2, 3).unwrap();
        for _ in 0..4 {
            s.apply_oracle_add(&three).unwrap();
        }
        assert_eq!(s, before);
    }

    #[test]
    fn oracle_xor_examples() {
        let f = crate::oracle::make_constant(1, 2, 3).unwrap();
        let mut s = StateVector::<f64>::init_basis(shape(1, 2), 1, 1).unwrap();
        s.apply_oracle_xor(&f).unwrap();
        assert_eq!(s.amp(1, 2), c(1.0, 0.0));
        s.apply_oracle_xor(&f).unwrap();
        assert_eq!(s.amp(1, 1), c(1.0, 0.0));
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let f = FunctionTable::new(2, 1, vec![0, 1, 0, 1]).unwrap();
        let mut s = StateVector::<f64>::init_basis(shape(1, 1), 0, 0).unwrap();
        assert!(matches!(s.apply_oracle_add(&f), Err(Error::ShapeMismatch { .. })));
        assert!(matches!(s.apply_oracle_xor(&f), Err(Error::ShapeMismatch { .. })));
        assert!(matches!(
            s.apply_phase_transform(&f, 1, PhaseMode::Exact),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn pauli_z_signs() {
        let mut s = StateVector::<f64>::init_basis(shape(1, 1), 0, 1).unwrap();
        s.apply_pauli_z_aux();
        assert_eq!(s.amp(0, 1), c(-1.0, 0.0));
        let mut s = StateVector::<f64>::init_basis(shape(1, 2), 0, 3).unwrap();
        s.apply_pauli_z_aux();
        assert_eq!(s.amp(0, 3), c(1.0, 0.0));
        let mut s = StateVector::<f64>::init_basis(shape(1, 2), 0, 2).unwrap();
        s.apply_pauli_z_aux();
        assert_eq!(s.amp(0, 2), c(-1.0, 0.0));
    }

    #[test]
    fn phase_transform_examples() {
        let f = FunctionTable::new(2, 2, vec![0, 2, 0, 2]).unwrap();
        let phases = phase_factors::<f64>(&f, 1, PhaseMode::Exact).unwrap();
        assert_eq!(phases, vec![c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        let id = phase_factors::<f64>(&f, 0, PhaseMode::Exact).unwrap();
        assert!(id.iter().all(|&p| p == c(1.0, 0.0)));

        let g = FunctionTable::new(2, 1, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(
            phase_factors::<f64>(&g, 1, PhaseMode::Exact).unwrap(),
            phase_factors::<f64>(&g, 1, PhaseMode::Parity).unwrap()
        );
        assert!(matches!(
            phase_factors::<f64>(&g, 2, PhaseMode::Exact),
            Err(Error::InvalidXi { xi: 2, modulus: 2 })
        ));
    }

    #[test]
    fn measurement_marginals() {
        let mut s = StateVector::<f64>::init_basis(shape(2, 1), 0, 0).unwrap();
        s.apply_qft(Register::Auxiliary, Direction::Forward);
        let m = s.measure(Register::Control, 0, 0);
        assert!((m.probabilities[0] - 1.0).abs() < 1e-15);
        assert!(m.histogram.is_none());

        s.apply_walsh_control();
        let m = s.measure(Register::Control, 1000, 11);
        assert!(m.probabilities.iter().all(|p| (p - 0.25).abs() < 1e-15));
        let h = m.histogram.unwrap();
        assert_eq!(h.iter().sum::<u64>(), 1000);
        assert_eq!(s.measure(Register::Control, 1000, 11).histogram.unwrap(), h);
    }

    #[test]
    fn factored_expansion_and_fidelity() {
        let shape = shape(1, 1);
        let fs = FactoredState::new(shape, vec![c(H, 0.0), c(0.0, H)], vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let dense = fs.expand();
        assert_eq!(dense.amp(1, 0), c(0.0, H));
        assert!((dense.aux_fidelity(fs.aux()).unwrap() - 1.0).abs() < 1e-15);
        assert!(dense.aux_fidelity(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap() < 1e-15);
        assert!(FactoredState::new(shape, vec![c(1.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let mut s = StateVector::<f32>::init_basis(shape(3, 2), 5, 1).unwrap();
        s.apply_walsh_control();
        s.apply_qft(Register::Auxiliary, Direction::Forward);
        assert!((s.norm_sqr() - 1.0).abs() < f32::unit_tolerance());
    }
}
