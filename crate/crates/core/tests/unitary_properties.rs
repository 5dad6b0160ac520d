use gdj_core::scalar::max_abs_diff;
use gdj_core::{Direction, FunctionTable, PhaseMode, Register, RegisterShape, StateVector, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_state(rng: &mut ChaCha8Rng, shape: RegisterShape) -> StateVector<f64> {
    let mut amps: Vec<C64> = (0..shape.len())
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    StateVector::from_amplitudes(shape, amps).unwrap()
}

fn random_table(rng: &mut ChaCha8Rng, shape: RegisterShape) -> FunctionTable {
    let values = (0..shape.control_dim()).map(|_| rng.gen_range(0..shape.aux_dim())).collect();
    FunctionTable::new(shape.n(), shape.m(), values).unwrap()
}

fn shapes_up_to(total: u32) -> Vec<RegisterShape> {
    (1..total)
        .flat_map(|n| (1..=total - n).map(move |m| RegisterShape::new(n, m).unwrap()))
        .collect()
}

#[test]
fn every_operation_preserves_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let shapes = shapes_up_to(12);
    for i in 0..1000 {
        let shape = shapes[i % shapes.len()];
        let f = random_table(&mut rng, shape);
        let xi = rng.gen_range(0..shape.aux_dim());
        let mut s = random_state(&mut rng, shape);
        let ops: [&dyn Fn(&mut StateVector<f64>); 8] = [
            &|s| s.apply_walsh_control(),
            &|s| s.apply_qft_fast(Register::Control, Direction::Forward),
            &|s| s.apply_qft_fast(Register::Auxiliary, Direction::Inverse),
            &|s| s.apply_oracle_add(&f).unwrap(),
            &|s| s.apply_oracle_xor(&f).unwrap(),
            &|s| s.apply_pauli_z_aux(),
            &|s| s.apply_phase_transform(&f, xi, PhaseMode::Exact).unwrap(),
            &|s| s.apply_phase_transform(&f, xi, PhaseMode::Parity).unwrap(),
        ];
        for op in ops {
            op(&mut s);
            assert!((s.norm_sqr() - 1.0).abs() < 1e-12, "shape {shape:?}");
            assert!(s.is_finite());
        }
    }
}

#[test]
fn direct_qft_preserves_norm_on_small_shapes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for shape in shapes_up_to(8) {
        let mut s = random_state(&mut rng, shape);
        s.apply_qft(Register::Control, Direction::Forward);
        s.apply_qft(Register::Auxiliary, Direction::Forward);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn involutions_and_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for shape in shapes_up_to(10) {
        let f = random_table(&mut rng, shape);
        let base = random_state(&mut rng, shape);

        let mut s = base.clone();
        s.apply_oracle_xor(&f).unwrap();
        s.apply_oracle_xor(&f).unwrap();
        assert_eq!(s, base);

        let mut s = base.clone();
        s.apply_pauli_z_aux();
        s.apply_pauli_z_aux();
        assert_eq!(s, base);

        let mut s = base.clone();
        s.apply_walsh_control();
        s.apply_walsh_control();
        assert!(max_abs_diff(s.amplitudes(), base.amplitudes()) < 1e-12);

        for reg in [Register::Control, Register::Auxiliary] {
            let mut s = base.clone();
            s.apply_qft(reg, Direction::Forward);
            s.apply_qft(reg, Direction::Inverse);
            assert!(max_abs_diff(s.amplitudes(), base.amplitudes()) < 1e-12);
        }

        let mut s = base.clone();
        s.apply_oracle_add(&f).unwrap();
        s.apply_oracle_add(&f.negated()).unwrap();
        assert_eq!(s, base);
    }
}

#[test]
fn distributions_sum_to_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for shape in shapes_up_to(10) {
        let s = random_state(&mut rng, shape);
        for reg in [Register::Control, Register::Auxiliary] {
            let total: f64 = s.marginal(reg).iter().sum();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qft_fast_agrees_with_direct(n in 1u32..6, m in 1u32..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = RegisterShape::new(n, m).unwrap();
        let base = random_state(&mut rng, shape);
        for reg in [Register::Control, Register::Auxiliary] {
            let mut a = base.clone();
            let mut b = base.clone();
            a.apply_qft(reg, Direction::Forward);
            b.apply_qft_fast(reg, Direction::Forward);
            prop_assert!(max_abs_diff(a.amplitudes(), b.amplitudes()) < 1e-12);
        }
    }

    #[test]
    fn oracle_add_is_exact_permutation(n in 1u32..5, m in 1u32..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = RegisterShape::new(n, m).unwrap();
        let f = random_table(&mut rng, shape);
        let base = random_state(&mut rng, shape);
        let mut s = base.clone();
        s.apply_oracle_add(&f).unwrap();
        for x in 0..shape.control_dim() {
            for z in 0..shape.aux_dim() {
                let src = (z + shape.aux_dim() - f.eval(x)) % shape.aux_dim();
                prop_assert_eq!(s.amp(x, z), base.amp(x, src));
            }
        }
    }
}
