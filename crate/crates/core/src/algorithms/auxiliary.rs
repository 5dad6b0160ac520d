use crate::error::{Error, Result};
use crate::scalar::{norm_sqr, Amp, Real};
use crate::state::RegisterShape;
use crate::transform::{dft_direct, Direction, RootTable};

/// Initial state of the auxiliary register.
#[derive(Debug, Clone, PartialEq)]
pub enum AuxSpec<T> {
    /// `F|−ξ⟩ = M^{-1/2} Σ_z ω_M^{−ξz} |z⟩`, `ξ ≠ 0`.
    FourierOfMinusXi(usize),
    /// `⊗_j (a_j|0⟩ + b_j|1⟩)`; pair `j` acts on bit `j` of `z`.
    ProductState(Vec<(Amp<T>, Amp<T>)>),
    /// Any unit vector of length `M`.
    Arbitrary(Vec<Amp<T>>),
}

impl<T: Real> AuxSpec<T> {
    /// The same single-qubit state on every auxiliary qubit.
    pub fn uniform_product(m: u32, a: Amp<T>, b: Amp<T>) -> Self {
        AuxSpec::ProductState(vec![(a, b); m as usize])
    }

    /// `(|0⟩ − |1⟩)/√2` on every qubit, the eigenstate the kickback needs.
    pub fn minus_product(m: u32) -> Self {
        let h = T::FRAC_1_SQRT_2();
        Self::uniform_product(m, Amp::new(h, T::zero()), Amp::new(-h, T::zero()))
    }

    pub fn validate(&self, shape: RegisterShape) -> Result<()> {
        match self {
            AuxSpec::FourierOfMinusXi(xi) => {
                if *xi == 0 || *xi >= shape.aux_dim() {
                    return Err(Error::InvalidXi {
                        xi: *xi,
                        modulus: shape.aux_dim(),
                    });
                }
            }
            AuxSpec::ProductState(pairs) => {
                if pairs.len() != shape.m() as usize {
                    return Err(Error::AuxQubitCount {
                        expected: shape.m(),
                        found: pairs.len(),
                    });
                }
                for (a, b) in pairs {
                    check_pair(*a, *b)?;
                }
            }
            AuxSpec::Arbitrary(amps) => {
                if amps.len() != shape.aux_dim() {
                    return Err(Error::LengthMismatch {
                        expected: shape.aux_dim(),
                        found: amps.len(),
                    });
                }
                let ns = norm_sqr(amps);
                if !ns.is_finite() || (ns - T::one()).abs() > T::unit_tolerance() {
                    return Err(Error::NotNormalized {
                        what: "auxiliary vector",
                        norm_sqr: ns.to_f64_lossy(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Amplitudes over `Z_M`.
    pub fn vector(&self, shape: RegisterShape) -> Result<Vec<Amp<T>>> {
        self.validate(shape)?;
        let dim = shape.aux_dim();
        Ok(match self {
            AuxSpec::FourierOfMinusXi(xi) => {
                let mut basis = vec![Amp::new(T::zero(), T::zero()); dim];
                basis[(dim - xi) % dim] = Amp::new(T::one(), T::zero());
                dft_direct(&basis, &RootTable::new(dim), Direction::Forward)
            }
            AuxSpec::ProductState(pairs) => (0..dim)
                .map(|z| {
                    pairs
                        .iter()
                        .enumerate()
                        .fold(Amp::new(T::one(), T::zero()), |acc, (j, (a, b))| {
                            acc * if (z >> j) & 1 == 1 { *b } else { *a }
                        })
                })
                .collect(),
            AuxSpec::Arbitrary(amps) => amps.clone(),
        })
    }
}

pub(crate) fn check_pair<T: Real>(a: Amp<T>, b: Amp<T>) -> Result<()> {
    let ns = a.norm_sqr() + b.norm_sqr();
    if !ns.is_finite() || (ns - T::one()).abs() > T::unit_tolerance() {
        return Err(Error::NotNormalized {
            what: "single-qubit auxiliary pair",
            norm_sqr: ns.to_f64_lossy(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::max_abs_diff;

    type C = Amp<f64>;

    #[test]
    fn fourier_of_minus_xi_matches_closed_form() {
        let shape = RegisterShape::new(1, 3).unwrap();
        for xi in 1..8 {
            let v = AuxSpec::<f64>::FourierOfMinusXi(xi).vector(shape).unwrap();
            let expected: Vec<C> = (0..8)
                .map(|z| C::from_polar(1.0 / 8f64.sqrt(), -std::f64::consts::TAU * (xi * z) as f64 / 8.0))
                .collect();
            assert!(max_abs_diff(&v, &expected) < 1e-14);
        }
        assert!(matches!(
            AuxSpec::<f64>::FourierOfMinusXi(0).vector(shape),
            Err(Error::InvalidXi { xi: 0, .. })
        ));
    }

    #[test]
    fn product_state_bit_order() {
        let shape = RegisterShape::new(1, 2).unwrap();
        let one = C::new(1.0, 0.0);
        let zero = C::new(0.0, 0.0);
        // qubit 0 in |1>, qubit 1 in |0> -> z = 1
        let v = AuxSpec::ProductState(vec![(zero, one), (one, zero)]).vector(shape).unwrap();
        assert_eq!(v, vec![zero, one, zero, zero]);
        let bad = AuxSpec::ProductState(vec![(one, one), (one, zero)]);
        assert!(matches!(bad.validate(shape), Err(Error::NotNormalized { .. })));
        let short = AuxSpec::ProductState(vec![(one, zero)]);
        assert!(matches!(short.validate(shape), Err(Error::AuxQubitCount { .. })));
    }
}
