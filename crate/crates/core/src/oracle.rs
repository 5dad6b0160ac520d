//! Promise functions `f: Z_N → Z_M`: tables, generators and the
//! brute-force promise classifier.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::RegisterShape;

/// Explicit lookup table for `f: Z_N → Z_M` with `N = 2^n`, `M = 2^m`.
///
/// Serializes as `{"n": .., "m": .., "values": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTable")]
pub struct FunctionTable {
    n: u32,
    m: u32,
    values: Vec<usize>,
}

#[derive(Deserialize)]
struct RawTable {
    n: u32,
    m: u32,
    values: Vec<usize>,
}

impl TryFrom<RawTable> for FunctionTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        FunctionTable::new(raw.n, raw.m, raw.values)
    }
}

impl FunctionTable {
    pub fn new(n: u32, m: u32, values: Vec<usize>) -> Result<Self> {
        let shape = RegisterShape::new(n, m)?;
        if values.len() != shape.control_dim() {
            return Err(Error::TableLength {
                expected: shape.control_dim(),
                found: values.len(),
            });
        }
        let modulus = shape.aux_dim();
        if let Some((input, &value)) = values.iter().enumerate().find(|(_, &v)| v >= modulus) {
            return Err(Error::ValueOutOfRange { input, value, modulus });
        }
        Ok(Self { n, m, values })
    }

    /// Uniformly random table, reproducible from `seed`.
    pub fn random(n: u32, m: u32, seed: u64) -> Result<Self> {
        let shape = RegisterShape::new(n, m)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..shape.control_dim())
            .map(|_| rng.gen_range(0..shape.aux_dim()))
            .collect();
        Self::new(n, m, values)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn shape(&self) -> RegisterShape {
        RegisterShape::new(self.n, self.m).expect("validated at construction")
    }

    /// `N`.
    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    /// `M`.
    pub fn modulus(&self) -> usize {
        1 << self.m
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn eval(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `x ↦ (M − f(x)) mod M`, the additive inverse oracle.
    pub fn negated(&self) -> Self {
        let modulus = self.modulus();
        Self {
            n: self.n,
            m: self.m,
            values: self.values.iter().map(|&v| (modulus - v) % modulus).collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// Bit positions `j < m` on which `f` never varies.
    pub fn constant_bits(&self) -> Vec<u32> {
        (0..self.m)
            .filter(|&j| {
                let first = (self.values[0] >> j) & 1;
                self.values.iter().all(|&v| (v >> j) & 1 == first)
            })
            .collect()
    }
}

impl fmt::Display for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f: Z_{} -> Z_{} {:?}", self.domain_size(), self.modulus(), self.values)
    }
}

/// `f(x) = c` for every `x`.
pub fn make_constant(n: u32, m: u32, c: usize) -> Result<FunctionTable> {
    let shape = RegisterShape::new(n, m)?;
    if c >= shape.aux_dim() {
        return Err(Error::ValueOutOfRange {
            input: 0,
            value: c,
            modulus: shape.aux_dim(),
        });
    }
    FunctionTable::new(n, m, vec![c; shape.control_dim()])
}

/// Parameters of an evenly distributed function: `K` values `jμ + t`,
/// each attained by exactly `ν = N/K` inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSpec {
    n: u32,
    m: u32,
    k: usize,
    t: usize,
    /// Block `j` lists the inputs mapped to `jμ + t`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partition: Option<Vec<Vec<usize>>>,
}

impl EvenSpec {
    pub fn new(n: u32, m: u32, k: usize, t: usize) -> Result<Self> {
        let shape = RegisterShape::new(n, m)?;
        if k < 1 {
            return Err(Error::InvalidK { k, min: 1 });
        }
        if shape.aux_dim() % k != 0 {
            return Err(Error::Divisibility {
                k,
                name: "M",
                value: shape.aux_dim(),
            });
        }
        if shape.control_dim() % k != 0 {
            return Err(Error::Divisibility {
                k,
                name: "N",
                value: shape.control_dim(),
            });
        }
        let mu = shape.aux_dim() / k;
        if t >= mu {
            return Err(Error::ShiftTooLarge { t, mu });
        }
        Ok(Self {
            n,
            m,
            k,
            t,
            partition: None,
        })
    }

    /// Fix the blocks `A_j` explicitly instead of drawing them from a seed.
    pub fn with_partition(mut self, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let size = 1usize << self.n;
        if blocks.len() != self.k {
            return Err(Error::InvalidPartition(format!(
                "{} blocks given, K={}",
                blocks.len(),
                self.k
            )));
        }
        let mut seen = vec![false; size];
        for (j, block) in blocks.iter().enumerate() {
            if block.len() != self.nu() {
                return Err(Error::InvalidPartition(format!(
                    "block {j} has {} inputs, expected nu={}",
                    block.len(),
                    self.nu()
                )));
            }
            for &x in block {
                if x >= size || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPartition(format!(
                        "input {x} is out of range or repeated"
                    )));
                }
            }
        }
        self.partition = Some(blocks);
        Ok(self)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn mu(&self) -> usize {
        (1usize << self.m) / self.k
    }

    pub fn nu(&self) -> usize {
        (1usize << self.n) / self.k
    }

    pub fn partition(&self) -> Option<&[Vec<usize>]> {
        self.partition.as_deref()
    }
}

/// Build the evenly distributed function described by `spec`. Without an
/// explicit partition, blocks come from a seeded shuffle of `Z_N`.
pub fn make_evenly_distributed(spec: &EvenSpec, seed: u64) -> Result<FunctionTable> {
    // Re-validate in case the spec was deserialized.
    let checked = EvenSpec::new(spec.n, spec.m, spec.k, spec.t)?;
    let blocks = match &spec.partition {
        Some(p) => checked.with_partition(p.clone())?.partition.unwrap(),
        None => {
            let mut inputs: Vec<usize> = (0..1usize << spec.n).collect();
            inputs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            inputs.chunks(spec.nu()).map(<[usize]>::to_vec).collect()
        }
    };
    let mut values = vec![0; 1 << spec.n];
    for (j, block) in blocks.iter().enumerate() {
        for &x in block {
            values[x] = j * spec.mu() + spec.t;
        }
    }
    FunctionTable::new(spec.n, spec.m, values)
}

/// Which side of the promise a function falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PromiseClass {
    Constant,
    EvenlyDistributed,
    Neither,
}

impl fmt::Display for PromiseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PromiseClass::Constant => "constant",
            PromiseClass::EvenlyDistributed => "evenly-distributed",
            PromiseClass::Neither => "neither",
        })
    }
}

/// Recovered `(K, μ, ν, t)`. A constant function reports `K = 1`, `t = f(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenParams {
    pub k: usize,
    pub mu: usize,
    pub nu: usize,
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: PromiseClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<EvenParams>,
}

/// Classify `f` against the promise in `O(N + M)`.
///
/// `K` is taken to be the number of distinct values; the sorted range must
/// then be `t, t + μ, …, t + (K−1)μ` with every value hit `ν` times.
pub fn classify_function(f: &FunctionTable) -> Classification {
    let modulus = f.modulus();
    let size = f.domain_size();
    let mut counts = vec![0usize; modulus];
    for &v in f.values() {
        counts[v] += 1;
    }
    let range: Vec<usize> = (0..modulus).filter(|&v| counts[v] > 0).collect();
    let k = range.len();
    let neither = Classification {
        class: PromiseClass::Neither,
        params: None,
    };
    if k == 1 {
        return Classification {
            class: PromiseClass::Constant,
            params: Some(EvenParams {
                k: 1,
                mu: modulus,
                nu: size,
                t: range[0],
            }),
        };
    }
    if !modulus.is_multiple_of(k) || !size.is_multiple_of(k) {
        return neither;
    }
    let (mu, nu, t) = (modulus / k, size / k, range[0]);
    let spaced = range.iter().enumerate().all(|(j, &v)| v == j * mu + t);
    let flat = range.iter().all(|&v| counts[v] == nu);
    if spaced && flat {
        Classification {
            class: PromiseClass::EvenlyDistributed,
            params: Some(EvenParams { k, mu, nu, t }),
        }
    } else {
        neither
    }
}

/// Parity of the bit string of `v`.
#[inline]
pub fn parity_of(v: usize) -> u8 {
    (v.count_ones() & 1) as u8
}

/// Outcome of [`shift_parity_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShiftParityReport {
    /// `p(jμ) = p(j)` for every `j ∈ Z_K`.
    pub shift_preserves_parity: bool,
    /// `Σ_j (−1)^{p(jμ)}`.
    pub shifted_sum: i64,
    /// `Σ_j (−1)^{p(j)}`.
    pub plain_sum: i64,
}

/// Multiplying by `μ = 2^{m−k}` is a left shift, so it cannot change parity,
/// and the signed parity sum over `Z_K` vanishes for `K ≥ 2`.
pub fn shift_parity_check(k: usize, mu: usize, modulus: usize) -> Result<ShiftParityReport> {
    for (name, value) in [("K", k), ("mu", mu), ("M", modulus)] {
        if !value.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { name, value });
        }
    }
    if k * mu != modulus {
        return Err(Error::Divisibility {
            k,
            name: "M",
            value: modulus,
        });
    }
    let sign = |v: usize| if parity_of(v) == 0 { 1i64 } else { -1 };
    Ok(ShiftParityReport {
        shift_preserves_parity: (0..k).all(|j| parity_of(j * mu) == parity_of(j)),
        shifted_sum: (0..k).map(|j| sign(j * mu)).sum(),
        plain_sum: (0..k).map(sign).sum(),
    })
}
