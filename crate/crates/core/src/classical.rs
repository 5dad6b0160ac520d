//! Deterministic classical deciders for the promise problem, with exact
//! query accounting and an exhaustive worst-case certifier.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::FunctionTable;

/// Black-box access to `f: Z_N → Z_M`.
pub trait QueryAccess {
    /// `N`.
    fn domain_size(&self) -> usize;
    /// `M`.
    fn modulus(&self) -> usize;
    fn query(&self, x: usize) -> usize;
}

impl QueryAccess for FunctionTable {
    fn domain_size(&self) -> usize {
        FunctionTable::domain_size(self)
    }

    fn modulus(&self) -> usize {
        FunctionTable::modulus(self)
    }

    fn query(&self, x: usize) -> usize {
        self.eval(x)
    }
}

/// Every evaluation a decider performed, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct QueryLog {
    inputs: Vec<usize>,
    values: Vec<usize>,
    count: usize,
}

impl QueryLog {
    fn record(&mut self, x: usize, v: usize) {
        self.inputs.push(x);
        self.values.push(v);
        self.count += 1;
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Constant,
    EvenlyDistributed,
    /// The observed values fit neither side of the promise.
    PromiseViolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalDecision {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_k: Option<usize>,
    /// Worst-case query bound for this decider.
    pub bound: usize,
    pub log: QueryLog,
}

/// Incremental decision rule shared by both deciders and the certifier.
///
/// Stops at the first value that differs from the first one seen, or once
/// `threshold` equal values have been seen.
#[derive(Debug, Clone)]
struct Decider {
    first: Option<usize>,
    repeats: usize,
    threshold: usize,
    /// Any two range values of a promise function differ by a multiple of this.
    spacing: usize,
}

impl Decider {
    fn known_k(size: usize, modulus: usize, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK { k, min: 2 });
        }
        for (name, value) in [("N", size), ("M", modulus)] {
            if value % k != 0 {
                return Err(Error::Divisibility { k, name, value });
            }
        }
        Ok(Self {
            first: None,
            repeats: 0,
            threshold: size / k + 1,
            spacing: modulus / k,
        })
    }

    fn unknown_k(size: usize, modulus: usize) -> Self {
        // Largest admissible K is min(N, M), giving the finest spacing.
        Self {
            first: None,
            repeats: 0,
            threshold: size / 2 + 1,
            spacing: modulus / size.min(modulus),
        }
    }

    fn observe(&mut self, v: usize) -> Option<Verdict> {
        match self.first {
            None => {
                self.first = Some(v);
                self.repeats = 1;
            }
            Some(first) if first == v => self.repeats += 1,
            Some(first) => {
                return Some(if first.abs_diff(v) % self.spacing == 0 {
                    Verdict::EvenlyDistributed
                } else {
                    Verdict::PromiseViolated
                });
            }
        }
        (self.repeats >= self.threshold).then_some(Verdict::Constant)
    }
}

fn check_sizes(size: usize, modulus: usize) -> Result<()> {
    for (name, value) in [("N", size), ("M", modulus)] {
        if value < 2 || !value.is_power_of_two() {
            return Err(Error::NotPowerOfTwo { name, value });
        }
    }
    Ok(())
}

fn resolve_order(size: usize, order: Option<&[usize]>) -> Result<Vec<usize>> {
    match order {
        None => Ok((0..size).collect()),
        Some(order) => {
            let mut seen = vec![false; size];
            let ok = order.len() == size
                && order
                    .iter()
                    .all(|&x| x < size && !std::mem::replace(&mut seen[x], true));
            if ok {
                Ok(order.to_vec())
            } else {
                Err(Error::InvalidOrder { size })
            }
        }
    }
}

fn run<Q: QueryAccess + ?Sized>(f: &Q, mut decider: Decider, order: &[usize], known_k: Option<usize>) -> ClassicalDecision {
    let bound = decider.threshold;
    let mut log = QueryLog::default();
    for &x in order {
        let v = f.query(x);
        log.record(x, v);
        if let Some(verdict) = decider.observe(v) {
            return ClassicalDecision {
                verdict,
                known_k,
                bound,
                log,
            };
        }
    }
    unreachable!("threshold never exceeds N")
}

/// Decide with `K` known: at most `ν + 1` queries.
///
/// `order` defaults to ascending inputs.
pub fn classical_decide_known_k<Q: QueryAccess + ?Sized>(
    f: &Q,
    k: usize,
    order: Option<&[usize]>,
) -> Result<ClassicalDecision> {
    check_sizes(f.domain_size(), f.modulus())?;
    let decider = Decider::known_k(f.domain_size(), f.modulus(), k)?;
    let order = resolve_order(f.domain_size(), order)?;
    Ok(run(f, decider, &order, Some(k)))
}

/// Decide with `K` unknown: at most `N/2 + 1` queries.
pub fn classical_decide_unknown_k<Q: QueryAccess + ?Sized>(f: &Q, order: Option<&[usize]>) -> Result<ClassicalDecision> {
    check_sizes(f.domain_size(), f.modulus())?;
    let decider = Decider::unknown_k(f.domain_size(), f.modulus());
    let order = resolve_order(f.domain_size(), order)?;
    Ok(run(f, decider, &order, None))
}

/// Maximum number of queries the decider makes over every promise-satisfying
/// function and every query order.
///
/// The decider only sees the sequence of returned values, so the adversary
/// is modelled as choosing each next value from the remaining value
/// multiplicities of some promise function; every branch is explored.
pub fn worst_case_certifier(size: usize, modulus: usize, k: Option<usize>) -> Result<usize> {
    check_sizes(size, modulus)?;
    let decider = match k {
        Some(k) => Decider::known_k(size, modulus, k)?,
        None => Decider::unknown_k(size, modulus),
    };
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..)
            .map(|b| 1usize << b)
            .take_while(|&kk| kk <= size.min(modulus))
            .collect(),
    };

    let mut multisets: Vec<Vec<usize>> = (0..modulus)
        .map(|c| {
            let mut counts = vec![0; modulus];
            counts[c] = size;
            counts
        })
        .collect();
    for &kk in &ks {
        let (mu, nu) = (modulus / kk, size / kk);
        for t in 0..mu {
            let mut counts = vec![0; modulus];
            for j in 0..kk {
                counts[j * mu + t] = nu;
            }
            multisets.push(counts);
        }
    }

    fn explore(decider: &Decider, counts: &mut [usize], depth: usize) -> usize {
        let mut worst = 0;
        for v in 0..counts.len() {
            if counts[v] == 0 {
                continue;
            }
            let mut next = decider.clone();
            let queries = if next.observe(v).is_some() {
                depth + 1
            } else {
                counts[v] -= 1;
                let q = explore(&next, counts, depth + 1);
                counts[v] += 1;
                q
            };
            worst = worst.max(queries);
        }
        worst
    }

    Ok(multisets
        .iter_mut()
        .map(|counts| explore(&decider, counts, 0))
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::make_constant;

    #[test]
    fn known_k_constant_takes_nu_plus_one() {
        let f = make_constant(3, 1, 0).unwrap();
        let d = classical_decide_known_k(&f, 2, None).unwrap();
        assert_eq!(d.verdict, Verdict::Constant);
        assert_eq!(d.log.count(), 5);
        assert_eq!(d.bound, 5);
    }

    #[test]
    fn known_k_adversarial_order() {
        let f = FunctionTable::new(2, 2, vec![0, 2, 0, 2]).unwrap();
        let d = classical_decide_known_k(&f, 2, Some(&[0, 2, 1, 3])).unwrap();
        assert_eq!(d.verdict, Verdict::EvenlyDistributed);
        assert_eq!(d.log.inputs(), &[0, 2, 1]);
        assert_eq!(d.log.values(), &[0, 0, 2]);
    }

    #[test]
    fn one_to_one_decides_on_second_query() {
        let f = FunctionTable::new(2, 2, vec![3, 1, 0, 2]).unwrap();
        let d = classical_decide_known_k(&f, 4, None).unwrap();
        assert_eq!(d.log.count(), 2);
        assert_eq!(d.bound, 2);
    }

    #[test]
    fn unknown_k_examples() {
        let f = make_constant(3, 2, 1).unwrap();
        let d = classical_decide_unknown_k(&f, None).unwrap();
        assert_eq!((d.verdict, d.log.count()), (Verdict::Constant, 5));

        let g = FunctionTable::new(3, 1, vec![1, 0, 1, 0, 0, 1, 1, 0]).unwrap();
        let d = classical_decide_unknown_k(&g, Some(&[1, 3, 4, 7, 0, 2, 5, 6])).unwrap();
        assert_eq!((d.verdict, d.log.count()), (Verdict::EvenlyDistributed, 5));

        let h = FunctionTable::new(1, 1, vec![0, 1]).unwrap();
        assert_eq!(classical_decide_unknown_k(&h, None).unwrap().log.count(), 2);
    }

    #[test]
    fn violation_is_reported() {
        // Values 0 and 1 with K=2, M=4 must differ by a multiple of mu=2.
        let f = FunctionTable::new(2, 2, vec![0, 1, 2, 3]).unwrap();
        let d = classical_decide_known_k(&f, 2, None).unwrap();
        assert_eq!(d.verdict, Verdict::PromiseViolated);
        assert!(d.log.count() <= d.bound);
    }

    #[test]
    fn bad_inputs() {
        let f = make_constant(2, 2, 0).unwrap();
        assert!(matches!(classical_decide_known_k(&f, 1, None), Err(Error::InvalidK { .. })));
        assert!(matches!(classical_decide_known_k(&f, 8, None), Err(Error::Divisibility { .. })));
        assert!(matches!(
            classical_decide_known_k(&f, 2, Some(&[0, 0, 1, 2])),
            Err(Error::InvalidOrder { size: 4 })
        ));
    }

    #[test]
    fn certifier_examples() {
        assert_eq!(worst_case_certifier(8, 2, Some(2)).unwrap(), 5);
        assert_eq!(worst_case_certifier(8, 8, None).unwrap(), 5);
        assert_eq!(worst_case_certifier(4, 4, Some(4)).unwrap(), 2);
    }
}
