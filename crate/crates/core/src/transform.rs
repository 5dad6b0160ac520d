//! Register-local transforms: Walsh-Hadamard and the discrete Fourier
//! transform over `Z_D`, applied to strided slices of a flat amplitude array.
//!
//! Bits are little-endian: `x = Σ x_j 2^j`, and the Walsh kernel uses
//! `x·y = popcount(x & y) mod 2`.

use serde::{Deserialize, Serialize};

use crate::scalar::{Amp, Real};

/// Sign of the Fourier exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Kernel `ω_D^{+xy}`.
    Forward,
    /// Kernel `ω_D^{-xy}`.
    Inverse,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

/// `x·y mod 2` on little-endian bit strings.
#[inline]
pub fn bit_dot(x: usize, y: usize) -> u32 {
    (x & y).count_ones() & 1
}

/// Precomputed `ω_D^k = e^{2πik/D}` for `k ∈ Z_D`.
///
/// Powers are looked up by index mod `D` so `ω^{a+D} = ω^a` holds exactly.
#[derive(Debug, Clone)]
pub struct RootTable<T> {
    roots: Vec<Amp<T>>,
}

impl<T: Real> RootTable<T> {
    pub fn new(dim: usize) -> Self {
        assert!(dim > 0, "root table of dimension zero");
        let roots = (0..dim)
            .map(|k| {
                // Quarter turns are snapped so that ±1 and ±i are exact.
                if (4 * k) % dim == 0 {
                    return match 4 * k / dim {
                        0 => Amp::new(T::one(), T::zero()),
                        1 => Amp::new(T::zero(), T::one()),
                        2 => Amp::new(-T::one(), T::zero()),
                        _ => Amp::new(T::zero(), -T::one()),
                    };
                }
                let angle = std::f64::consts::TAU * k as f64 / dim as f64;
                Amp::new(T::from_f64_lossy(angle.cos()), T::from_f64_lossy(angle.sin()))
            })
            .collect();
        Self { roots }
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    /// `ω_D^k` for any non-negative exponent.
    #[inline]
    pub fn pow(&self, k: usize) -> Amp<T> {
        self.roots[k % self.roots.len()]
    }

    /// `ω_D^{±k}` according to `dir`.
    #[inline]
    pub fn pow_dir(&self, k: usize, dir: Direction) -> Amp<T> {
        let d = self.roots.len();
        match dir {
            Direction::Forward => self.roots[k % d],
            Direction::Inverse => self.roots[(d - k % d) % d],
        }
    }
}

/// In-place normalized Walsh-Hadamard transform over `len` elements spaced
/// `stride` apart, for every offset in `0..stride`.
///
/// `len` must be a power of two and `data.len() == len * stride`.
pub fn walsh_strided<T: Real>(data: &mut [Amp<T>], len: usize, stride: usize) {
    debug_assert!(len.is_power_of_two());
    debug_assert_eq!(data.len(), len * stride);
    let mut half = 1;
    while half < len {
        for block in (0..len).step_by(2 * half) {
            for j in block..block + half {
                let lo = j * stride;
                let hi = (j + half) * stride;
                for off in 0..stride {
                    let a = data[lo + off];
                    let b = data[hi + off];
                    data[lo + off] = a + b;
                    data[hi + off] = a - b;
                }
            }
        }
        half *= 2;
    }
    let scale = T::one() / T::from_usize_lossy(len).sqrt();
    for a in data.iter_mut() {
        *a = a.scale(scale);
    }
}

/// Direct `O(D²)` normalized DFT of one register: `out[y] = D^{-1/2} Σ_x ω^{±xy} in[x]`.
pub fn dft_direct<T: Real>(input: &[Amp<T>], roots: &RootTable<T>, dir: Direction) -> Vec<Amp<T>> {
    let d = input.len();
    debug_assert_eq!(d, roots.dim());
    let scale = T::one() / T::from_usize_lossy(d).sqrt();
    (0..d)
        .map(|y| {
            let sum = input
                .iter()
                .enumerate()
                .fold(Amp::new(T::zero(), T::zero()), |acc, (x, a)| {
                    acc + roots.pow_dir(x * y % d, dir) * a
                });
            sum.scale(scale)
        })
        .collect()
}

/// Radix-2 butterfly DFT, in place. Same convention and scaling as
/// [`dft_direct`]; `buf.len()` must be a power of two.
pub fn dft_fast<T: Real>(buf: &mut [Amp<T>], roots: &RootTable<T>, dir: Direction) {
    let d = buf.len();
    debug_assert!(d.is_power_of_two());
    debug_assert_eq!(d, roots.dim());
    let bits = d.trailing_zeros();
    if bits > 0 {
        for i in 0..d {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if i < j {
                buf.swap(i, j);
            }
        }
    }
    let mut len = 2;
    while len <= d {
        let step = d / len;
        for start in (0..d).step_by(len) {
            for j in 0..len / 2 {
                let w = roots.pow_dir(j * step, dir);
                let a = buf[start + j];
                let b = buf[start + j + len / 2] * w;
                buf[start + j] = a + b;
                buf[start + j + len / 2] = a - b;
            }
        }
        len *= 2;
    }
    let scale = T::one() / T::from_usize_lossy(d).sqrt();
    for a in buf.iter_mut() {
        *a = a.scale(scale);
    }
}
