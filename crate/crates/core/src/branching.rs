//! Branching for `K = USp(2n−2) × USp(2)` down to `K₁ = USp(2) × USp(2n−4) × USp(2)`
//! and then to `M`, in the ε-basis `ε_1..ε_n`.
//!
//! K-weights are `b = (b_1 ≥ … ≥ b_{n−1} ≥ 0; b_n ≥ 0)`, K₁-weights are
//! `c = (c_1 ≥ 0; c_2 ≥ … ≥ c_{n−1} ≥ 0; c_n ≥ 0)`. M-weights
//! `c_1(ε_1+ε_n) + Σ c_k ε_k` have half-integral `c_1` and are stored with
//! every coordinate doubled.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};

pub type WeightVec = Vec<i64>;

/// Number of ways to write `z` as an ℕ-combination of `Ξ = {ε_i ± ε_1 : 2 ≤ i ≤ n−1}`.
///
/// `z` has the n−1 coordinates `ε_1..ε_{n−1}`. Each `ε_i` coordinate (i ≥ 2) fixes how many
/// roots `ε_i ± ε_1` are used; only the split between `+` and `−` is free.
pub fn partition_p_xi(n: usize, z: &[i64]) -> u64 {
    assert_eq!(z.len(), n - 1, "p_Ξ takes n−1 coordinates");
    let rest = &z[1..];
    if rest.iter().any(|&v| v < 0) {
        return 0;
    }
    fn go(rest: &[i64], target: i64) -> u64 {
        match rest.split_first() {
            None => u64::from(target == 0),
            Some((&zi, tail)) => (0..=zi).map(|plus| go(tail, target - (2 * plus - zi))).sum(),
        }
    }
    go(rest, z[0])
}

/// Same count by memoised recursion over the roots one at a time.
pub fn partition_p_xi_recursive(n: usize, z: &[i64]) -> u64 {
    assert_eq!(z.len(), n - 1);
    let roots: Vec<WeightVec> = (1..n - 1)
        .flat_map(|i| {
            [1i64, -1].map(|sgn| {
                let mut v = vec![0; n - 1];
                v[i] = 1;
                v[0] = sgn;
                v
            })
        })
        .collect();
    fn go(roots: &[WeightVec], idx: usize, z: WeightVec, memo: &mut HashMap<(usize, WeightVec), u64>) -> u64 {
        if idx == roots.len() {
            return u64::from(z.iter().all(|&v| v == 0));
        }
        if let Some(&v) = memo.get(&(idx, z.clone())) {
            return v;
        }
        let root = &roots[idx];
        let mut total = 0;
        let mut cur = z.clone();
        while cur[1..].iter().all(|&v| v >= 0) {
            total += go(roots, idx + 1, cur.clone(), memo);
            for (c, r) in cur.iter_mut().zip(root) {
                *c -= r;
            }
        }
        memo.insert((idx, z), total);
        total
    }
    go(&roots, 0, z.to_vec(), &mut HashMap::new())
}

/// `ε_1 + … + ε_i` for `i < n`, and `ε_n` for `i = n`.
pub fn fundamental(n: usize, i: usize) -> WeightVec {
    assert!((1..=n).contains(&i));
    let mut v = vec![0; n];
    if i == n {
        v[n - 1] = 1;
    } else {
        v[..i].iter_mut().for_each(|c| *c = 1);
    }
    v
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

pub fn check_k_dominant(n: usize, b: &[i64]) -> Result<()> {
    if n < 3 || b.len() != n {
        return Err(precondition(format!("need n ≥ 3 and {n} coordinates, got {}", b.len())));
    }
    let ok = b[..n - 1].windows(2).all(|w| w[0] >= w[1]) && b[n - 2] >= 0 && b[n - 1] >= 0;
    if ok {
        Ok(())
    } else {
        Err(precondition(format!("{b:?} is not K-dominant")))
    }
}

pub fn check_k1_dominant(n: usize, c: &[i64]) -> Result<()> {
    if c.len() != n {
        return Err(precondition(format!("expected {n} coordinates, got {}", c.len())));
    }
    let ok = c[0] >= 0 && c[1..n - 1].windows(2).all(|w| w[0] >= w[1]) && c[n - 2] >= 0 && c[n - 1] >= 0;
    if ok {
        Ok(())
    } else {
        Err(precondition(format!("{c:?} is not K1-dominant")))
    }
}

/// Jump positions `(i, j)` of `μ = xω_i + yω_j`, missing jumps padded with `n`.
pub fn jumps(n: usize, b: &[i64]) -> Result<(usize, usize)> {
    check_k_dominant(n, b)?;
    let mut js: Vec<usize> = (1..n).filter(|&k| b[k - 1] > if k < n - 1 { b[k] } else { 0 }).collect();
    if b[n - 1] > 0 {
        js.push(n);
    }
    if js.len() > 2 {
        return Err(precondition(format!("{b:?} has {} jumps; at most two allowed", js.len())));
    }
    while js.len() < 2 {
        js.push(n);
    }
    Ok((js[0], js[1]))
}

/// `C_1..C_n` (index 0 unused).
pub fn c_values(n: usize, b: &[i64], c: &[i64]) -> Vec<i64> {
    let mut cc = vec![0; n + 1];
    cc[1] = b[0] - b[1].max(c[1]);
    for k in 2..n - 1 {
        cc[k] = b[k - 1].min(c[k - 1]) - b[k].max(c[k]);
    }
    cc[n - 1] = b[n - 2].min(c[n - 2]);
    cc[n] = 0;
    cc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSpec {
    pub n: usize,
    pub mu: WeightVec,
    pub nu: WeightVec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    /// Partition-function value.
    pub value: i64,
    /// The four-condition characterization of multiplicity one.
    pub predicate: bool,
}

impl Multiplicity {
    pub fn consistent(&self) -> bool {
        self.value >= 0 && self.predicate == (self.value == 1)
    }
}

pub fn mult_k_k1(spec: &BranchSpec) -> Result<Multiplicity> {
    let BranchSpec { n, mu: b, nu: c } = spec;
    let n = *n;
    let (i, j) = jumps(n, b)?;
    check_k1_dominant(n, c)?;
    let cc = c_values(n, b, c);
    let c1 = c[0];
    let cond1 = c[n - 1] == b[n - 1];
    let cond4 = (1..n - 1).all(|k| cc[k] >= 0);
    let sum = cc[i] + cc[j];
    let predicate = cond1 && cond4 && (sum - c1) % 2 == 0 && sum >= c1 && c1 >= (cc[i] - cc[j]).abs();
    let value = if cond1 && cond4 {
        let mut z1: WeightVec = cc[1..n].to_vec();
        let mut z2 = z1.clone();
        z1[0] = cc[1] - c1;
        z2[0] = cc[1] + c1 + 2;
        partition_p_xi(n, &z1) as i64 - partition_p_xi(n, &z2) as i64
    } else {
        0
    };
    Ok(Multiplicity { value, predicate })
}

/// M-types in the restriction of a K₁-type, doubled coordinates.
pub fn branch_k1_m(nu: &[i64]) -> Vec<WeightVec> {
    let n = nu.len();
    let (a, b) = (nu[0], nu[n - 1]);
    ((a - b).abs()..=a + b)
        .step_by(2)
        .map(|t| {
            let mut v: WeightVec = nu.iter().map(|c| 2 * c).collect();
            v[0] = t;
            v[n - 1] = t;
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTypeCount {
    pub k1_types: Vec<(WeightVec, i64)>,
    pub m_types: BTreeSet<WeightVec>,
}

/// Nonincreasing sequences of length `len` with entries in `[0, top]`.
fn chains(len: usize, top: i64) -> Vec<WeightVec> {
    if len == 0 {
        return vec![vec![]];
    }
    (0..=top)
        .flat_map(|first| {
            chains(len - 1, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// K₁-types of `μ` with their multiplicities, scanned over `c_n = b_n` and
/// `c_1, …, c_{n−1} ∈ [0, b_1 + margin]`.
pub fn k1_types(n: usize, mu: &[i64], margin: i64) -> Result<Vec<(WeightVec, i64)>> {
    check_k_dominant(n, mu)?;
    let top = mu[0] + margin;
    let mut out = Vec::new();
    for c1 in 0..=top {
        for mid in chains(n - 2, top) {
            let mut nu = vec![c1];
            nu.extend(mid);
            nu.push(mu[n - 1]);
            let m = mult_k_k1(&BranchSpec { n, mu: mu.to_vec(), nu: nu.clone() })?;
            if m.value >= 1 {
                out.push((nu, m.value));
            }
        }
    }
    Ok(out)
}

pub fn count_m_types(n: usize, mu: &[i64]) -> Result<MTypeCount> {
    let k1 = k1_types(n, mu, 0)?;
    let m_types = k1.iter().flat_map(|(nu, _)| branch_k1_m(nu)).collect();
    Ok(MTypeCount { k1_types: k1, m_types })
}

/// All `xω_i + yω_j` (`i < j`) with `x, y ≤ bound`, without repeats, sorted.
pub fn two_jump_weights(n: usize, bound: i64) -> Vec<WeightVec> {
    let mut set = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (wi, wj) = (fundamental(n, i), fundamental(n, j));
            for x in 0..=bound {
                for y in 0..=bound {
                    set.insert(wi.iter().zip(&wj).map(|(a, b)| x * a + y * b).collect::<WeightVec>());
                }
            }
        }
    }
    set.into_iter().collect()
}

/// The two-jump `μ` whose M-restriction has exactly two types.
pub fn classify_2x2(n: usize, bound: i64) -> Vec<WeightVec> {
    two_jump_weights(n, bound)
        .into_iter()
        .filter(|mu| count_m_types(n, mu).map(|c| c.m_types.len() == 2).unwrap_or(false))
        .collect()
}
