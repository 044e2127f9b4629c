//! Partitions, r-partitions, compositions over the interleaved index set, the
//! dominance and total orders, and the integer statistics built on them.
//!
//! Index convention: the index set of an r-partition padded to `m` rows is the
//! set of pairs `(k, i)` with `1 ≤ k ≤ r`, `1 ≤ i ≤ m`, ordered
//! `(1,1) < (2,1) < … < (r,1) < (1,2) < …`.  Internally positions are
//! zero-based: `(k, i)` lives at `(i - 1) * r + (k - 1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::TPoly;

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.  Rejects non-monotone input.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `n(λ) = Σ (i−1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Multiplicity of the value `v ≥ 1` among the parts.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance `self ≤ other` for partitions of the same size.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// An r-tuple of partitions.  Component `k` (one-based in the mathematics) is
/// stored at index `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPartition {
    comps: Vec<Partition>,
}

impl RPartition {
    /// Builds an r-partition from its components; `r = comps.len() ≥ 1`.
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidPartition("an r-partition needs r ≥ 1".into()));
        }
        Ok(RPartition { comps })
    }

    /// Convenience constructor from raw part lists; panics on invalid input.
    pub fn from_parts(parts: &[&[usize]]) -> Self {
        let comps = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()).expect("valid partition"))
            .collect();
        RPartition::new(comps).expect("r ≥ 1")
    }

    /// The empty r-partition.
    pub fn empty(r: usize) -> Self {
        RPartition {
            comps: vec![Partition::empty(); r],
        }
    }

    /// Number of components.
    pub fn r(&self) -> usize {
        self.comps.len()
    }

    /// Total size.
    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    /// Component `k` (zero-based).
    pub fn comp(&self, k: usize) -> &Partition {
        &self.comps[k]
    }

    /// All components.
    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    /// Largest component length; the minimal admissible padding.
    pub fn max_len(&self) -> usize {
        self.comps.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// `n(λ) = Σ_k n(λ^(k))`.
    pub fn n_stat(&self) -> usize {
        self.comps.iter().map(Partition::n_stat).sum()
    }

    /// Whether the first `a` components are empty.
    pub fn leading_empty(&self, a: usize) -> bool {
        self.comps[..a.min(self.r())]
            .iter()
            .all(Partition::is_empty)
    }

    /// Adds `theta` row-wise to every component (all components padded to `theta.len()`).
    pub fn shift(&self, theta: &[usize]) -> RPartition {
        let comps = self
            .comps
            .iter()
            .map(|c| {
                let parts: Vec<usize> = (0..theta.len().max(c.len()))
                    .map(|i| c.part(i) + theta.get(i).copied().unwrap_or(0))
                    .collect();
                Partition::from_unsorted(parts)
            })
            .collect();
        RPartition { comps }
    }
}

impl fmt::Display for RPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for RPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("r-partition must be parenthesised: {s:?}")))?;
        let mut comps = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let close = rest
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {s:?}")))?;
            comps.push(rest[..=close].parse::<Partition>()?);
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected ',' in {s:?}")));
            }
        }
        RPartition::new(comps)
    }
}

/// Zero-based linear position of the one-based pair `(k, i)`.
pub fn pos(r: usize, k: usize, i: usize) -> usize {
    (i - 1) * r + (k - 1)
}

/// One-based component `b(ν)` of the zero-based position `p`.
pub fn comp_of(r: usize, p: usize) -> usize {
    p % r + 1
}

/// One-based row of the zero-based position `p`.
pub fn row_of(r: usize, p: usize) -> usize {
    p / r + 1
}

/// Reduces a (possibly out-of-range) one-based component index into `1..=r`.
pub fn cyc(r: usize, k: isize) -> usize {
    (k - 1).rem_euclid(r as isize) as usize + 1
}

/// An integer vector over the interleaved index set.
pub type Composition = Vec<i64>;

/// The interleaved vector `c(λ)` of length `r·m`.
pub fn c_map(lambda: &RPartition, m: usize) -> Result<Composition> {
    if lambda.max_len() > m {
        return Err(Error::PaddingTooSmall {
            needed: lambda.max_len(),
            given: m,
        });
    }
    let r = lambda.r();
    let mut c = vec![0i64; r * m];
    for k in 1..=r {
        for (i, &p) in lambda.comp(k - 1).parts().iter().enumerate() {
            c[pos(r, k, i + 1)] = p as i64;
        }
    }
    Ok(c)
}

/// Inverse of [`c_map`] for nonnegative compositions that are partitions in
/// each component; within-group entries are sorted descending.
pub fn sorted_rpartition(r: usize, xi: &[i64]) -> Option<RPartition> {
    if xi.iter().any(|&v| v < 0) {
        return None;
    }
    let m = xi.len() / r;
    let comps = (1..=r)
        .map(|k| Partition::from_unsorted((1..=m).map(|i| xi[pos(r, k, i)] as usize).collect()))
        .collect();
    Some(RPartition { comps })
}

/// `δ = (M−1, …, 1, 0)`.
pub fn delta(len: usize) -> Composition {
    (0..len).rev().map(|v| v as i64).collect()
}

/// `n(ξ) = Σ (i−1) ξ_i` over linear positions.
pub fn n_stat(xi: &[i64]) -> i64 {
    xi.iter().enumerate().map(|(i, &v)| i as i64 * v).sum()
}

/// `a(λ) = r·n(λ) + Σ_k (k−1)|λ^(k)|`.
pub fn a_stat(lambda: &RPartition) -> usize {
    let r = lambda.r();
    r * lambda.n_stat()
        + lambda
            .comps()
            .iter()
            .enumerate()
            .map(|(k, c)| k * c.size())
            .sum::<usize>()
}

fn check_same_shape(a: &RPartition, b: &RPartition) -> Result<()> {
    if a.r() != b.r() || a.size() != b.size() {
        return Err(Error::ShapeMismatch(format!("{a} vs {b}")));
    }
    Ok(())
}

/// Dominance order: every prefix sum of `c(λ)` is at most that of `c(μ)`.
pub fn dominance_leq(lambda: &RPartition, mu: &RPartition) -> Result<bool> {
    check_same_shape(lambda, mu)?;
    let m = lambda.max_len().max(mu.max_len());
    let (a, b) = (c_map(lambda, m)?, c_map(mu, m)?);
    let (mut sa, mut sb) = (0, 0);
    for (x, y) in a.iter().zip(&b) {
        sa += x;
        sb += y;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Total order refining dominance: lexicographic comparison of c-vectors.
pub fn total_order_cmp(lambda: &RPartition, mu: &RPartition) -> Result<Ordering> {
    check_same_shape(lambda, mu)?;
    let m = lambda.max_len().max(mu.max_len());
    Ok(c_map(lambda, m)?.cmp(&c_map(mu, m)?))
}

/// Every r-partition of `n`, sorted descending in the total order.
pub fn gen_rpartitions(n: usize, r: usize) -> Vec<RPartition> {
    assert!(r >= 1, "r must be positive");
    fn rec(k: usize, r: usize, rem: usize, cur: &mut Vec<Partition>, out: &mut Vec<RPartition>) {
        if k + 1 == r {
            for p in Partition::all(rem) {
                cur.push(p);
                out.push(RPartition { comps: cur.clone() });
                cur.pop();
            }
            return;
        }
        for s in 0..=rem {
            for p in Partition::all(s) {
                cur.push(p);
                rec(k + 1, r, rem - s, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, r, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| total_order_cmp(b, a).expect("same shape"));
    out
}

/// `v_k(t) = ∏_{i=1}^{k} (1 − t^i)/(1 − t)` in variable `var` of an `nvars` universe.
pub fn v_poly(k: usize, var: usize, nvars: usize) -> TPoly {
    let mut acc = TPoly::one(nvars);
    for i in 1..=k {
        // 1 + t + … + t^{i-1}
        let mut s = TPoly::zero(nvars);
        for e in 0..i {
            s = &s + &TPoly::var_pow(nvars, var, e as u32);
        }
        acc = &acc * &s;
    }
    acc
}

/// Zero-based position of `ν₀`, the largest position carrying a nonzero entry.
pub fn nu0(lambda: &RPartition, m: usize) -> Result<usize> {
    let c = c_map(lambda, m)?;
    c.iter()
        .rposition(|&v| v != 0)
        .ok_or(Error::EmptyRPartition)
}

/// `v′_λ(t) = ∏_k v_{λ′_k}(t_k)` with `λ′_k = #{i ≤ m : (k,i) > ν₀}`.
pub fn v_prime(lambda: &RPartition, m: usize) -> Result<TPoly> {
    let r = lambda.r();
    let n0 = nu0(lambda, m)?;
    let mut acc = TPoly::one(r);
    for k in 1..=r {
        let count = (1..=m).filter(|&i| pos(r, k, i) > n0).count();
        acc = &acc * &v_poly(count, k - 1, r);
    }
    Ok(acc)
}

/// The exponent `j₀ = max(ℓ(λ^(r)) − p, 0)`, `p` the largest row index with
/// `λ^(k)_p ≠ 0` for every `k < r`.
pub fn j0_exponent(lambda: &RPartition) -> usize {
    let r = lambda.r();
    let p = if r == 1 {
        0
    } else {
        lambda.comps()[..r - 1]
            .iter()
            .map(Partition::len)
            .min()
            .unwrap_or(0)
    };
    lambda.comp(r - 1).len().saturating_sub(p)
}

/// The sets `Δ₀` and `Δ₁` as sorted zero-based positions.
pub fn delta_sets(lambda: &RPartition, m: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let c = c_map(lambda, m)?;
    let r = lambda.r();
    let (mut d0, mut d1) = (Vec::new(), Vec::new());
    for (p, &v) in c.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let (k, i) = (comp_of(r, p), row_of(r, p));
        let row_empty_before = (1..r).all(|kk| lambda.comp(kk - 1).part(i - 1) == 0);
        if k == r && row_empty_before {
            d0.push(p);
        } else {
            d1.push(p);
        }
    }
    Ok((d0, d1))
}

/// Classical Kostka number: semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    // Strip horizontal strips: the entries equal to the last letter form a
    // horizontal strip of size mu_last.
    fn rec(shape: &[usize], content: &[usize]) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.iter().all(|&p| p == 0));
        };
        let mut total = 0;
        let mut inner = shape.to_vec();
        strips(shape, 0, last, &mut inner, &mut |inner| {
            total += rec(inner, rest)
        });
        total
    }
    // Enumerate inner shapes `nu ⊆ shape` with shape/nu a horizontal strip of `k` cells.
    fn strips(
        shape: &[usize],
        row: usize,
        k: usize,
        inner: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if row == shape.len() {
            if k == 0 {
                f(inner);
            }
            return;
        }
        let lower = shape.get(row + 1).copied().unwrap_or(0);
        let max_remove = (shape[row] - lower).min(k);
        for take in 0..=max_remove {
            inner[row] = shape[row] - take;
            strips(shape, row + 1, k - take, inner, f);
        }
        inner[row] = shape[row];
    }
    let content: Vec<usize> = mu.parts().to_vec();
    rec(lambda.parts(), &content)
}

/// `K_{λ,μ} = ∏_k K_{λ^(k), μ^(k)}` for r-partitions.
pub fn kostka_number_r(lambda: &RPartition, mu: &RPartition) -> u64 {
    lambda
        .comps()
        .iter()
        .zip(mu.comps())
        .map(|(a, b)| kostka_number(a, b))
        .product()
}

/// Iterates over all permutations of `0..m` in lexicographic order, with signs.
pub fn permutations_with_sign(m: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push((cur.clone(), perm_sign(&cur)));
        // next permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Sign of a permutation given in one-line notation.
pub fn perm_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(gen_rpartitions(0, 2), vec![rp("([],[])")]);
        assert_eq!(gen_rpartitions(1, 2), vec![rp("([1],[])"), rp("([],[1])")]);
        assert_eq!(gen_rpartitions(2, 2).len(), 5);
    }

    #[test]
    fn enumeration_counts_match_generating_function() {
        // Coefficients of (∏ 1/(1-q^i))^r computed by repeated convolution.
        let nmax = 6;
        let p: Vec<u64> = (0..=nmax).map(|n| Partition::all(n).len() as u64).collect();
        for r in 1..=3 {
            let mut coef = vec![0u64; nmax + 1];
            coef[0] = 1;
            for _ in 0..r {
                let mut next = vec![0u64; nmax + 1];
                for a in 0..=nmax {
                    for b in 0..=nmax - a {
                        next[a + b] += coef[a] * p[b];
                    }
                }
                coef = next;
            }
            for n in 0..=nmax {
                assert_eq!(gen_rpartitions(n, r).len() as u64, coef[n], "n={n} r={r}");
            }
        }
    }

    #[test]
    fn c_map_examples() {
        assert_eq!(c_map(&rp("([2],[1])"), 2).unwrap(), vec![2, 1, 0, 0]);
        assert_eq!(c_map(&rp("([],[])"), 1).unwrap(), vec![0, 0]);
        assert_eq!(c_map(&rp("([1,1],[1])"), 2).unwrap(), vec![1, 1, 1, 0]);
        assert!(c_map(&rp("([1,1],[1])"), 1).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&rp("([1,1],[1])"), &rp("([2],[1])")).unwrap());
        assert!(dominance_leq(&rp("([],[2])"), &rp("([2],[])")).unwrap());
        assert!(!dominance_leq(&rp("([2],[])"), &rp("([],[2])")).unwrap());
        assert!(dominance_leq(&rp("([1],[])"), &rp("([],[1],[])")).is_err());
    }

    #[test]
    fn total_order_refines_dominance() {
        for n in 0..=4 {
            for r in 1..=3 {
                let all = gen_rpartitions(n, r);
                for a in &all {
                    assert_eq!(total_order_cmp(a, a).unwrap(), Ordering::Equal);
                    for b in &all {
                        if a != b && dominance_leq(a, b).unwrap() {
                            assert_eq!(total_order_cmp(a, b).unwrap(), Ordering::Less);
                        }
                    }
                }
                assert!(all
                    .windows(2)
                    .all(|w| total_order_cmp(&w[0], &w[1]).unwrap() == Ordering::Greater));
            }
        }
        assert_eq!(
            total_order_cmp(&rp("([2],[])"), &rp("([1,1],[])")).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn statistics() {
        assert_eq!(n_stat(&[2, 1, 0, 0]), 1);
        assert_eq!(n_stat(&[0, 0, 0]), 0);
        assert_eq!(n_stat(&[0, 0, 1, 2]), 8);
        assert_eq!(a_stat(&rp("([2],[1])")), 1);
        assert_eq!(a_stat(&rp("([],[1,1])")), 4);
        for n in 0..=4 {
            for r in 1..=3 {
                for l in gen_rpartitions(n, r) {
                    let c = c_map(&l, n.max(1)).unwrap();
                    assert_eq!(n_stat(&c), a_stat(&l) as i64);
                }
            }
        }
    }

    #[test]
    fn delta_pairing_identity() {
        // <c(λ)+δ, δ> − <c(μ)+δ, δ> = a(μ) − a(λ)
        for n in 1..=3 {
            for r in 1..=3 {
                let all = gen_rpartitions(n, r);
                let d = delta(r * n);
                let ip = |v: &[i64]| v.iter().zip(&d).map(|(a, b)| (a + b) * b).sum::<i64>();
                for l in &all {
                    for m in &all {
                        let lhs = ip(&c_map(l, n).unwrap()) - ip(&c_map(m, n).unwrap());
                        assert_eq!(lhs, a_stat(m) as i64 - a_stat(l) as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn v_poly_examples() {
        assert_eq!(v_poly(0, 0, 1), TPoly::one(1));
        assert_eq!(v_poly(2, 0, 1).to_string(), "1 + t1");
        assert_eq!(v_poly(3, 0, 1).to_string(), "1 + 2*t1 + 2*t1^2 + t1^3");
        for k in 0..=5u32 {
            let v = v_poly(k as usize, 0, 1);
            assert_eq!(v.total_degree(), Some(k * k.saturating_sub(1) / 2));
            let fact: u64 = (1..=k as u64).product();
            assert_eq!(v.eval_int(&[1.into()]), fact.into());
        }
    }

    #[test]
    fn v_prime_examples() {
        assert_eq!(v_prime(&rp("([1],[])"), 1).unwrap(), TPoly::one(2));
        assert_eq!(v_prime(&rp("([1],[])"), 2).unwrap().to_string(), "1 + t2");
        assert_eq!(v_prime(&rp("([],[1])"), 1).unwrap(), TPoly::one(2));
        assert!(v_prime(&rp("([],[])"), 1).is_err());
    }

    #[test]
    fn j0_examples() {
        assert_eq!(j0_exponent(&rp("([],[2])")), 1);
        assert_eq!(j0_exponent(&rp("([1],[1])")), 0);
        assert_eq!(j0_exponent(&rp("([1],[1,1,1])")), 2);
    }

    #[test]
    fn delta_set_examples() {
        assert_eq!(delta_sets(&rp("([],[2])"), 1).unwrap(), (vec![1], vec![]));
        assert_eq!(
            delta_sets(&rp("([1],[1])"), 1).unwrap(),
            (vec![], vec![0, 1])
        );
        assert_eq!(
            delta_sets(&rp("([1],[1,1])"), 2).unwrap(),
            (vec![3], vec![0, 1])
        );
    }

    #[test]
    fn kostka_numbers() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(kostka_number(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(kostka_number(&p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(kostka_number(&p(&[1, 1]), &p(&[2])), 0);
        assert_eq!(kostka_number(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka_number(&p(&[3, 2, 1]), &p(&[1; 6])), 16);
    }

    #[test]
    fn text_round_trip() {
        for s in ["([3,1],[],[2])", "([])", "([1,1],[2])"] {
            assert_eq!(rp(s).to_string(), s);
        }
        assert!("([2,3])".parse::<RPartition>().is_err());
        assert!("[2".parse::<Partition>().is_err());
    }

    #[test]
    fn permutations() {
        let p = permutations_with_sign(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i32>(), 0);
    }
}
