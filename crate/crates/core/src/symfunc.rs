//! The symmetric-function engine.
//!
//! Symmetric functions in `r` groups of variables `x^(1), …, x^(r)` are handled
//! degree-homogeneously as coordinate vectors ([`SymElem`]) indexed by the
//! r-partitions of `n`.  Coordinates are produced either by expanding explicit
//! x-polynomials ([`expand_to_m`]) or, for products of q-functions, by a
//! factorised route that expands each variable group separately
//! ([`SymEngine`]).  The x-variable `x^(k)_i` has index `(i−1)·r + (k−1)`,
//! matching the interleaved order of positions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{
    self, cyc, gen_rpartitions, kostka_number_r, permutations_with_sign, pos, Partition, RPartition,
};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::poly::Scalar;
use crate::{TPoly, XPoly};

/// The two families of functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// Both signs, `+` first.
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// Lower-case name used in files and flags.
    pub fn name(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }

    /// Parses `plus`/`minus` (or `+`/`-`).
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("unknown sign {s:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The values substituted for the parameters `t₁, …, t_r` during a
/// computation.  The generic choice uses the variables themselves; other
/// choices compute specialized functions from scratch.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    t: Vec<TPoly>,
}

impl Params {
    /// `t_k ↦ t_k` in an `r`-variable universe.
    pub fn generic(r: usize) -> Self {
        Params {
            t: (0..r).map(|k| TPoly::var(r, k)).collect(),
        }
    }

    /// `t_k ↦ t` for every `k`, in a one-variable universe.
    pub fn uniform(r: usize) -> Self {
        Params {
            t: vec![TPoly::var(1, 0); r],
        }
    }

    /// Arbitrary images of `t₁, …, t_r`.
    pub fn from_values(t: Vec<TPoly>) -> Self {
        assert!(!t.is_empty(), "at least one parameter");
        Params { t }
    }

    /// Number of components `r`.
    pub fn r(&self) -> usize {
        self.t.len()
    }

    /// Size of the variable universe the values live in.
    pub fn nvars(&self) -> usize {
        self.t.iter().map(TPoly::nvars).max().unwrap_or(0)
    }

    /// `t_k` for a one-based index read cyclically.
    pub fn t(&self, k: isize) -> &TPoly {
        &self.t[cyc(self.r(), k) - 1]
    }

    /// `t₀ = t₁⋯t_r`.
    pub fn t0(&self) -> TPoly {
        self.t.iter().fold(TPoly::one(self.nvars()), |a, b| &a * b)
    }

    /// All values.
    pub fn values(&self) -> &[TPoly] {
        &self.t
    }

    /// The constant one in the parameter universe.
    pub fn one(&self) -> TPoly {
        TPoly::one(self.nvars())
    }
}

/// Basis tags for coordinate vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    Monomial,
    Complete,
    QFun(Sign),
    P(Sign),
    Q(Sign),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Schur => write!(f, "s"),
            Basis::Monomial => write!(f, "m"),
            Basis::Complete => write!(f, "h"),
            Basis::QFun(s) => write!(f, "q{}", if *s == Sign::Plus { "+" } else { "-" }),
            Basis::P(s) => write!(f, "P{}", if *s == Sign::Plus { "+" } else { "-" }),
            Basis::Q(s) => write!(f, "Q{}", if *s == Sign::Plus { "+" } else { "-" }),
        }
    }
}

/// A finite coordinate vector over a named basis, indexed by r-partitions of `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymElem<C> {
    n: usize,
    r: usize,
    basis: Basis,
    coords: BTreeMap<RPartition, C>,
}

impl<C: Scalar> SymElem<C> {
    /// The zero element.
    pub fn zero(n: usize, r: usize, basis: Basis) -> Self {
        SymElem {
            n,
            r,
            basis,
            coords: BTreeMap::new(),
        }
    }

    /// The basis vector at `lambda`.
    pub fn unit(lambda: &RPartition, basis: Basis) -> Self {
        let mut e = Self::zero(lambda.size(), lambda.r(), basis);
        e.coords.insert(lambda.clone(), C::one());
        e
    }

    /// Degree.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of variable groups.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Basis tag.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Re-tags the basis (for relabelling results whose meaning is known).
    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    /// Coordinate at `lambda`.
    pub fn get(&self, lambda: &RPartition) -> C {
        self.coords.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero coordinates.
    pub fn coords(&self) -> &BTreeMap<RPartition, C> {
        &self.coords
    }

    /// Whether every coordinate vanishes.
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Adds `c` to the coordinate at `lambda`.
    pub fn add_at(&mut self, lambda: &RPartition, c: C) {
        if c.is_zero() {
            return;
        }
        let v = self.get(lambda) + c;
        if v.is_zero() {
            self.coords.remove(lambda);
        } else {
            self.coords.insert(lambda.clone(), v);
        }
    }

    /// `self += c · other` (bases must agree).
    pub fn add_scaled(&mut self, other: &SymElem<C>, c: &C) {
        assert_eq!(
            self.basis, other.basis,
            "explicit conversion required between bases"
        );
        for (k, v) in &other.coords {
            self.add_at(k, v.clone() * c.clone());
        }
    }

    /// Applies `f` to each coordinate.
    pub fn map<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> SymElem<D> {
        let coords = self
            .coords
            .iter()
            .filter_map(|(k, v)| {
                let d = f(v);
                (!d.is_zero()).then(|| (k.clone(), d))
            })
            .collect();
        SymElem {
            n: self.n,
            r: self.r,
            basis: self.basis,
            coords,
        }
    }

    /// Fallible coordinate map.
    pub fn try_map<D: Scalar>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<SymElem<D>> {
        let mut coords = BTreeMap::new();
        for (k, v) in &self.coords {
            let d = f(v)?;
            if !d.is_zero() {
                coords.insert(k.clone(), d);
            }
        }
        Ok(SymElem {
            n: self.n,
            r: self.r,
            basis: self.basis,
            coords,
        })
    }

    /// Coordinates as a dense vector along `index`.
    pub fn to_vec(&self, index: &[RPartition]) -> Vec<C> {
        index.iter().map(|l| self.get(l)).collect()
    }

    /// Builds an element from a dense vector along `index`.
    pub fn from_vec(n: usize, r: usize, basis: Basis, index: &[RPartition], v: Vec<C>) -> Self {
        let mut e = Self::zero(n, r, basis);
        for (l, c) in index.iter().zip(v) {
            e.add_at(l, c);
        }
        e
    }
}

// ---------------------------------------------------------------------------
// x-polynomial helpers
// ---------------------------------------------------------------------------

/// Index of the x-variable `x^(k)_i` (one-based `k`, `i`).
pub fn xvar(r: usize, k: usize, i: usize) -> usize {
    pos(r, k, i)
}

fn x_monomial(nx: usize, exps: Vec<u32>, c: TPoly) -> XPoly {
    XPoly::monomial(nx, exps, c)
}

/// The complete symmetric polynomial `h_a(x^(k)_1, …, x^(k)_m)`.
pub fn h_x(r: usize, m: usize, k: usize, a: usize, one: &TPoly) -> XPoly {
    let nx = r * m;
    let mut out = XPoly::zero(nx);
    for_each_composition(a, m, &mut |comp| {
        let mut e = vec![0u32; nx];
        for (i, &v) in comp.iter().enumerate() {
            e[xvar(r, k, i + 1)] = v as u32;
        }
        out += &x_monomial(nx, e, one.clone());
    });
    out
}

/// The elementary symmetric polynomial `e_b(x^(k)_1, …, x^(k)_m)`.
pub fn e_x(r: usize, m: usize, k: usize, b: usize, one: &TPoly) -> XPoly {
    let nx = r * m;
    let mut out = XPoly::zero(nx);
    if b > m {
        return out;
    }
    for_each_subset(m, b, &mut |sub| {
        let mut e = vec![0u32; nx];
        for &i in sub {
            e[xvar(r, k, i + 1)] = 1;
        }
        out += &x_monomial(nx, e, one.clone());
    });
    out
}

fn for_each_composition(total: usize, parts: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(rem: usize, idx: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if idx + 1 == cur.len() {
            cur[idx] = rem;
            f(cur);
            return;
        }
        for v in 0..=rem {
            cur[idx] = v;
            rec(rem - v, idx + 1, cur, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    rec(total, 0, &mut vec![0; parts], f);
}

fn for_each_subset(m: usize, b: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, m: usize, b: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == b {
            f(cur);
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, b, cur, f);
            cur.pop();
        }
    }
    rec(0, m, b, &mut Vec::new(), f);
}

/// The row function `q^(k)_{s,±}(x; t_{k−c})` as an x-polynomial:
/// `Σ_{a+b=s} h_a(x^(k)) (−t)^b e_b(x^(k∓1))` with `c = 1` for `+`.
pub fn q_func_x(k: usize, s: usize, sign: Sign, params: &Params, m: usize) -> XPoly {
    let r = params.r();
    let (other, t) = match sign {
        Sign::Plus => (cyc(r, k as isize - 1), params.t(k as isize - 1).clone()),
        Sign::Minus => (cyc(r, k as isize + 1), params.t(k as isize).clone()),
    };
    row_func_x(r, m, k, other, &t, s, params)
}

/// `Σ_{a+b=s} h_a(x^(hg)) (−w)^b e_b(x^(eg))`.
fn row_func_x(
    r: usize,
    m: usize,
    hg: usize,
    eg: usize,
    w: &TPoly,
    s: usize,
    params: &Params,
) -> XPoly {
    let one = params.one();
    let mut out = XPoly::zero(r * m);
    let minus_w = -w;
    for b in 0..=s {
        let coef = minus_w.pow(b as u32);
        let term = &h_x(r, m, hg, s - b, &one) * &e_x(r, m, eg, b, &one);
        out += &term.scale(&coef);
    }
    out
}

/// The classical row function `q_s(x^(r); t₀)` as an x-polynomial.
pub fn q_classical_x(s: usize, params: &Params, m: usize) -> XPoly {
    let r = params.r();
    row_func_x(r, m, r, r, &params.t0(), s, params)
}

/// The monomial symmetric polynomial `m_λ(x_𝓜)` in `m` variables per group.
pub fn monomial_x(lambda: &RPartition, m: usize, one: &TPoly) -> Result<XPoly> {
    let r = lambda.r();
    if lambda.max_len() > m {
        return Ok(XPoly::zero(r * m));
    }
    let mut out = XPoly::one(r * m).scale(one);
    for k in 1..=r {
        let comp = lambda.comp(k - 1);
        let mut padded: Vec<usize> = (0..m).map(|i| comp.part(i)).collect();
        let mut group = XPoly::zero(r * m);
        // distinct rearrangements of the padded vector
        padded.sort_unstable();
        loop {
            let mut e = vec![0u32; r * m];
            for (i, &v) in padded.iter().enumerate() {
                e[xvar(r, k, i + 1)] = v as u32;
            }
            group += &x_monomial(r * m, e, one.clone());
            let Some(i) = (1..padded.len()).rev().find(|&i| padded[i - 1] < padded[i]) else {
                break;
            };
            let j = (i..padded.len())
                .rev()
                .find(|&j| padded[j] > padded[i - 1])
                .expect("pivot");
            padded.swap(i - 1, j);
            padded[i..].reverse();
        }
        out = &out * &group;
    }
    let _ = combinat::c_map(lambda, m)?;
    Ok(out)
}

/// Schur polynomial `s_λ(x_𝓜)` via the Kostka-number expansion into monomials.
pub fn schur_x(lambda: &RPartition, m: usize, one: &TPoly) -> Result<XPoly> {
    let r = lambda.r();
    let mut out = XPoly::zero(r * m);
    for mu in gen_rpartitions(lambda.size(), r) {
        let k = kostka_number_r(lambda, &mu);
        if k != 0 && mu.max_len() <= m {
            out += &monomial_x(&mu, m, one)?.scale(&TPoly::constant(one.nvars(), k.into()));
        }
    }
    Ok(out)
}

/// Schur polynomial via alternants `a_{λ+δ}/a_δ`, group by group (oracle route).
pub fn schur_x_alternant(lambda: &RPartition, m: usize, one: &TPoly) -> Result<XPoly> {
    let r = lambda.r();
    let nx = r * m;
    let mut out = XPoly::one(nx).scale(one);
    for k in 1..=r {
        let comp = lambda.comp(k - 1);
        if comp.len() > m {
            return Ok(XPoly::zero(nx));
        }
        let mut num = XPoly::zero(nx);
        let mut den = XPoly::zero(nx);
        for (perm, sign) in permutations_with_sign(m) {
            let c = TPoly::constant(one.nvars(), sign.into());
            let mut e_num = vec![0u32; nx];
            let mut e_den = vec![0u32; nx];
            for i in 0..m {
                let target = xvar(r, k, perm[i] + 1);
                e_num[target] = (comp.part(i) + m - 1 - i) as u32;
                e_den[target] = (m - 1 - i) as u32;
            }
            num += &x_monomial(nx, e_num, c.clone());
            den += &x_monomial(nx, e_den, c);
        }
        let q = num
            .exact_div(&den)
            .ok_or_else(|| Error::InexactDivision("alternant quotient".into()))?;
        out = &out * &q;
    }
    Ok(out)
}

/// Reads the symmetrization `Σ_w w(N / Δ)` of an x-polynomial `N` in the
/// Schur basis, where `Δ = ∏_k ∏_{i<j}(x^(k)_i − x^(k)_j)` and `w` runs over
/// `S_m^r`.  Each monomial `x^β` contributes `a_β / a_δ`, which is zero when a
/// group has a repeated exponent and otherwise `±s_μ`.
pub fn alternant_reading(poly: &XPoly, r: usize, m: usize, n: usize) -> Result<SymElem<TPoly>> {
    let mut out = SymElem::zero(n, r, Basis::Schur);
    let shift_total = r * m * (m.saturating_sub(1)) / 2;
    for (mono, c) in poly.terms() {
        let e = mono.padded(r * m);
        if e.len() > r * m {
            return Err(Error::ShapeMismatch(
                "monomial outside the x-variable universe".into(),
            ));
        }
        let mut sign = 1i64;
        let mut comps = Vec::with_capacity(r);
        let mut ok = true;
        for k in 1..=r {
            let mut g: Vec<u32> = (1..=m).map(|i| e[xvar(r, k, i)]).collect();
            // sort descending, tracking the permutation sign (insertion sort)
            for i in 1..g.len() {
                let mut j = i;
                while j > 0 && g[j - 1] < g[j] {
                    g.swap(j - 1, j);
                    sign = -sign;
                    j -= 1;
                }
            }
            if g.windows(2).any(|w| w[0] == w[1]) {
                ok = false;
                break;
            }
            let parts: Vec<usize> = g
                .iter()
                .enumerate()
                .map(|(i, &v)| v as usize - (m - 1 - i))
                .collect();
            comps.push(
                Partition::new(parts).expect("strictly decreasing minus staircase is a partition"),
            );
        }
        if !ok {
            continue;
        }
        let mu = RPartition::new(comps)?;
        if mu.size() + shift_total != mono.degree() as usize || mu.size() != n {
            return Err(Error::NotHomogeneous(n));
        }
        let coef = if sign == 1 { c.clone() } else { -c.clone() };
        out.add_at(&mu, coef);
    }
    Ok(out)
}

/// Expands an x-polynomial, homogeneous of degree `n` and symmetric in each
/// group, into monomial coordinates.
pub fn expand_to_m(poly: &XPoly, n: usize, r: usize, m: usize) -> Result<SymElem<TPoly>> {
    if !poly.is_homogeneous(n as u32) {
        return Err(Error::NotHomogeneous(n));
    }
    // symmetry under every adjacent transposition within every group
    for k in 1..=r {
        for i in 1..m {
            let mut perm: Vec<usize> = (0..r * m).collect();
            perm.swap(xvar(r, k, i), xvar(r, k, i + 1));
            if &poly.permute_vars(&perm) != poly {
                return Err(Error::NotSymmetric(format!(
                    "group {k}, rows {i} and {}",
                    i + 1
                )));
            }
        }
    }
    let mut out = SymElem::zero(n, r, Basis::Monomial);
    for mu in gen_rpartitions(n, r) {
        if mu.max_len() > m {
            continue;
        }
        let e: Vec<u32> = combinat::c_map(&mu, m)?.iter().map(|&v| v as u32).collect();
        out.add_at(&mu, poly.coeff(&e));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Kostka matrix and basis changes
// ---------------------------------------------------------------------------

/// The matrix `M(s, m)` of products of classical Kostka numbers for one `(n, r)`.
#[derive(Debug)]
pub struct KostkaMatrix {
    n: usize,
    r: usize,
    index: Vec<RPartition>,
    rows: HashMap<RPartition, Vec<(RPartition, i64)>>,
}

impl KostkaMatrix {
    /// Builds the matrix for r-partitions of `n`.
    pub fn new(n: usize, r: usize) -> Self {
        let index = gen_rpartitions(n, r);
        let mut rows = HashMap::new();
        for l in &index {
            let row: Vec<(RPartition, i64)> = index
                .iter()
                .filter_map(|mu| {
                    let k = kostka_number_r(l, mu);
                    (k != 0).then(|| (mu.clone(), k as i64))
                })
                .collect();
            rows.insert(l.clone(), row);
        }
        KostkaMatrix { n, r, index, rows }
    }

    /// The index list (descending total order).
    pub fn index(&self) -> &[RPartition] {
        &self.index
    }

    /// `K_{λ,μ}`.
    pub fn entry(&self, l: &RPartition, mu: &RPartition) -> i64 {
        self.rows[l]
            .iter()
            .find(|(m, _)| m == mu)
            .map_or(0, |(_, k)| *k)
    }

    /// Monomial coordinates of a Schur-coordinate vector.
    pub fn schur_to_m<C: Scalar>(&self, f: &SymElem<C>) -> SymElem<C> {
        assert_eq!(f.basis, Basis::Schur);
        let mut out = SymElem::zero(self.n, self.r, Basis::Monomial);
        for (l, c) in &f.coords {
            for (mu, k) in &self.rows[l] {
                out.add_at(mu, c.clone() * C::from_int(*k));
            }
        }
        out
    }

    /// Schur coordinates of a monomial-coordinate vector (unitriangular solve).
    pub fn m_to_schur<C: Scalar>(&self, f: &SymElem<C>) -> SymElem<C> {
        assert_eq!(f.basis, Basis::Monomial);
        let mut rest = f.coords.clone();
        let mut out = SymElem::zero(self.n, self.r, Basis::Schur);
        for l in &self.index {
            let Some(d) = rest.remove(l) else { continue };
            for (mu, k) in &self.rows[l] {
                if mu == l {
                    continue;
                }
                let v = rest.remove(mu).unwrap_or_else(C::zero) - d.clone() * C::from_int(*k);
                if !v.is_zero() {
                    rest.insert(mu.clone(), v);
                }
            }
            out.add_at(l, d);
        }
        out
    }
}

/// Shared Kostka matrix for `(n, r)`.
pub fn kostka_matrix(n: usize, r: usize) -> Arc<KostkaMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<KostkaMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.lock().expect("cache lock").get(&(n, r)) {
        return k.clone();
    }
    let k = Arc::new(KostkaMatrix::new(n, r));
    cache
        .lock()
        .expect("cache lock")
        .entry((n, r))
        .or_insert(k)
        .clone()
}

/// Schur coordinates of a monomial-coordinate vector.
pub fn to_schur<C: Scalar>(f: &SymElem<C>) -> SymElem<C> {
    match f.basis {
        Basis::Schur => f.clone(),
        Basis::Monomial => kostka_matrix(f.n, f.r).m_to_schur(f),
        other => panic!("no direct conversion from basis {other} to s"),
    }
}

/// Monomial coordinates of a Schur-coordinate vector.
pub fn to_monomial<C: Scalar>(f: &SymElem<C>) -> SymElem<C> {
    match f.basis {
        Basis::Monomial => f.clone(),
        Basis::Schur => kostka_matrix(f.n, f.r).schur_to_m(f),
        other => panic!("no direct conversion from basis {other} to m"),
    }
}

/// An x-polynomial from Schur coordinates.
pub fn schur_elem_to_x(f: &SymElem<TPoly>, m: usize, one: &TPoly) -> Result<XPoly> {
    let mut out = XPoly::zero(f.r * m);
    for (l, c) in &f.coords {
        out += &schur_x(l, m, one)?.scale(c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Factorised expansion of q-products
// ---------------------------------------------------------------------------

/// The coefficient of `x^ν` in `∏ h_{α_i} ∏ e_{β_j}` in `d = Σα + Σβ`
/// variables, listed for every partition `ν` of `d`.
fn he_expansion(alpha: &[usize], beta: &[usize]) -> Arc<Vec<(Partition, BigInt)>> {
    type Cache = Mutex<HashMap<(Vec<usize>, Vec<usize>), Arc<Vec<(Partition, BigInt)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let key = (alpha.to_vec(), beta.to_vec());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let d: usize = alpha.iter().sum::<usize>() + beta.iter().sum::<usize>();
    let one = TPoly::one(0);
    let mut prod = XPoly::one(d.max(1)).scale(&one);
    for &a in alpha {
        prod = &prod * &h_x(1, d, 1, a, &one);
    }
    for &b in beta {
        prod = &prod * &e_x(1, d, 1, b, &one);
    }
    let list: Vec<(Partition, BigInt)> = Partition::all(d)
        .into_iter()
        .filter_map(|nu| {
            let e: Vec<u32> = (0..d).map(|i| nu.part(i) as u32).collect();
            let c = prod.coeff(&e).constant_term();
            (!c.is_zero()).then_some((nu, c))
        })
        .collect();
    let v = Arc::new(list);
    cache
        .lock()
        .expect("cache lock")
        .entry(key)
        .or_insert(v)
        .clone()
}

/// A family of row functions `Σ_b h_{s−b}(x^(h)) (−w)^b e_b(x^(e))`.
#[derive(Clone, Debug)]
struct RowKind {
    h_group: usize,
    e_group: usize,
    weight: TPoly,
}

/// Which row function a part of a q-product uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    /// `q^(k)_{s,+}(x; t_{k−1})`.
    Plus(usize),
    /// `q^(k)_{s,−}(x; t_k)`.
    Minus(usize),
    /// The classical `q_s(x^(r); t₀)`.
    Classical,
}

/// Evaluation engine for products of row functions, with caches.  One engine
/// serves one parameter choice and one `r`; it is safe to share across threads.
pub struct SymEngine {
    params: Params,
    qcache: Mutex<HashMap<Vec<(Row, usize)>, Arc<SymElem<TPoly>>>>,
}

impl SymEngine {
    /// Engine for the given parameters.
    pub fn new(params: Params) -> Self {
        SymEngine {
            params,
            qcache: Mutex::new(HashMap::new()),
        }
    }

    /// The parameters.
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Number of variable groups.
    pub fn r(&self) -> usize {
        self.params.r()
    }

    fn kind(&self, row: Row) -> RowKind {
        let r = self.r();
        match row {
            Row::Plus(k) => RowKind {
                h_group: k,
                e_group: cyc(r, k as isize - 1),
                weight: self.params.t(k as isize - 1).clone(),
            },
            Row::Minus(k) => RowKind {
                h_group: k,
                e_group: cyc(r, k as isize + 1),
                weight: self.params.t(k as isize).clone(),
            },
            Row::Classical => RowKind {
                h_group: r,
                e_group: r,
                weight: self.params.t0(),
            },
        }
    }

    /// Monomial coordinates of `∏ row(s)` over the given rows (parts `s = 0`
    /// are ignored; the product is commutative so the key is sorted).
    pub fn product_m(&self, rows: &[(Row, usize)]) -> Arc<SymElem<TPoly>> {
        let mut key: Vec<(Row, usize)> = rows.iter().copied().filter(|&(_, s)| s > 0).collect();
        key.sort_unstable();
        if let Some(v) = self.qcache.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.expand_product(&key));
        self.qcache
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(v)
            .clone()
    }

    fn expand_product(&self, key: &[(Row, usize)]) -> SymElem<TPoly> {
        let r = self.r();
        let n: usize = key.iter().map(|&(_, s)| s).sum();
        let kinds: Vec<RowKind> = key.iter().map(|&(row, _)| self.kind(row)).collect();
        let mut out = SymElem::zero(n, r, Basis::Monomial);
        let mut bs = vec![0usize; key.len()];
        loop {
            // coefficient and per-group h/e degree lists for this choice of b's
            let mut coef = self.params.one();
            let mut alpha = vec![Vec::new(); r];
            let mut beta = vec![Vec::new(); r];
            for (j, (&(_, s), kind)) in key.iter().zip(&kinds).enumerate() {
                let b = bs[j];
                if b > 0 {
                    coef = &coef * &(-&kind.weight).pow(b as u32);
                    beta[kind.e_group - 1].push(b);
                }
                if s > b {
                    alpha[kind.h_group - 1].push(s - b);
                }
            }
            if !coef.is_zero() {
                let groups: Vec<Arc<Vec<(Partition, BigInt)>>> = (0..r)
                    .map(|g| {
                        alpha[g].sort_unstable();
                        beta[g].sort_unstable();
                        he_expansion(&alpha[g], &beta[g])
                    })
                    .collect();
                let mut choice = vec![0usize; r];
                'outer: loop {
                    let mut c = coef.clone();
                    let mut comps = Vec::with_capacity(r);
                    for g in 0..r {
                        let (nu, k) = &groups[g][choice[g]];
                        c = c.scale(k);
                        comps.push(nu.clone());
                    }
                    out.add_at(&RPartition::new(comps).expect("r ≥ 1"), c);
                    for g in (0..r).rev() {
                        choice[g] += 1;
                        if choice[g] < groups[g].len() {
                            continue 'outer;
                        }
                        choice[g] = 0;
                    }
                    break;
                }
            }
            // next choice of b's
            let mut j = 0;
            loop {
                if j == key.len() {
                    return out;
                }
                bs[j] += 1;
                if bs[j] <= key[j].1 {
                    break;
                }
                bs[j] = 0;
                j += 1;
            }
        }
    }

    /// Schur coordinates of a product of row functions.
    pub fn product_s(&self, rows: &[(Row, usize)]) -> SymElem<TPoly> {
        to_schur(&self.product_m(rows))
    }

    /// `q±_β` in monomial coordinates for a composition `β` of length `r·m`
    /// (zero when an entry is negative).
    pub fn q_basis_elem(&self, beta: &[i64], sign: Sign) -> SymElem<TPoly> {
        let r = self.r();
        let n: i64 = beta.iter().sum();
        if beta.iter().any(|&v| v < 0) {
            return SymElem::zero(n.max(0) as usize, r, Basis::Monomial);
        }
        let rows: Vec<(Row, usize)> = beta
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                let k = combinat::comp_of(r, p);
                (
                    if sign == Sign::Plus {
                        Row::Plus(k)
                    } else {
                        Row::Minus(k)
                    },
                    v as usize,
                )
            })
            .collect();
        (*self.product_m(&rows)).clone()
    }

    /// `M(q±, m)` rows for every r-partition of `n`, in index order.
    pub fn q_matrix_m(&self, n: usize, sign: Sign) -> Vec<SymElem<TPoly>> {
        gen_rpartitions(n, self.r())
            .iter()
            .map(|l| self.q_basis_elem(&combinat::c_map(l, l.max_len()).expect("fits"), sign))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Bilinear form
// ---------------------------------------------------------------------------

/// Solves `A X = B` over the fraction field by Gauss–Jordan elimination,
/// preferring pivots with a nonzero constant term.
pub fn solve_frac(mut a: Vec<Vec<Frac>>, mut b: Vec<Vec<Frac>>) -> Result<Vec<Vec<Frac>>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| {
                let e = &a[i][col];
                (
                    e.num().constant_term().is_zero() as u8,
                    e.num().len() + e.den().len(),
                )
            })
            .ok_or_else(|| Error::Invariant("singular transition matrix".into()))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inv()?;
        let row_a: Vec<Frac> = a[col].iter().map(|x| x * &inv).collect();
        let row_b: Vec<Frac> = b[col].iter().map(|x| x * &inv).collect();
        a[col] = row_a;
        b[col] = row_b;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[i][j] = &a[i][j] - &(&f * &a[col][j]);
                }
            }
            for j in 0..b[i].len() {
                if !b[col][j].is_zero() {
                    b[i][j] = &b[i][j] - &(&f * &b[col][j]);
                }
            }
        }
    }
    Ok(b)
}

/// The bilinear form on degree-`n` functions, defined by `⟨q⁺_λ, m_μ⟩ = δ_{λμ}`.
pub struct FormContext {
    n: usize,
    r: usize,
    index: Vec<RPartition>,
    /// `⟨m_λ, m_μ⟩` along the index.
    gram_m: Vec<Vec<Frac>>,
}

impl FormContext {
    /// Builds the form from the q⁺ transition matrix.
    pub fn new(engine: &SymEngine, n: usize) -> Result<Self> {
        let r = engine.r();
        let index = gen_rpartitions(n, r);
        let rows = engine.q_matrix_m(n, Sign::Plus);
        let a: Vec<Vec<Frac>> = rows
            .iter()
            .map(|e| e.to_vec(&index).into_iter().map(Frac::from_poly).collect())
            .collect();
        let id: Vec<Vec<Frac>> = (0..index.len())
            .map(|i| {
                (0..index.len())
                    .map(|j| if i == j { Frac::one() } else { Frac::zero() })
                    .collect()
            })
            .collect();
        // m_λ = Σ_ν (A⁻¹)_{λν} q⁺_ν, so ⟨m_λ, m_μ⟩ = (A⁻¹)_{λμ}.
        let gram_m = solve_frac(a, id)?;
        Ok(FormContext {
            n,
            r,
            index,
            gram_m,
        })
    }

    /// The index list.
    pub fn index(&self) -> &[RPartition] {
        &self.index
    }

    /// `⟨m_λ, m_μ⟩` by index positions.
    pub fn gram_m(&self) -> &[Vec<Frac>] {
        &self.gram_m
    }

    fn m_vec(&self, f: &SymElem<Frac>) -> Vec<Frac> {
        assert_eq!((f.n, f.r), (self.n, self.r), "degree/component mismatch");
        to_monomial(f).to_vec(&self.index)
    }

    /// `⟨f, g⟩` for elements given in s- or m-coordinates.
    pub fn pair(&self, f: &SymElem<Frac>, g: &SymElem<Frac>) -> Frac {
        let (u, v) = (self.m_vec(f), self.m_vec(g));
        let mut acc = Frac::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.gram_m[i][j].is_zero() {
                    acc = &acc + &(&(ui * &self.gram_m[i][j]) * vj);
                }
            }
        }
        acc
    }

    /// `⟨s_λ, s_μ⟩` for all pairs along the index.
    pub fn gram_s(&self) -> Vec<Vec<Frac>> {
        let km = kostka_matrix(self.n, self.r);
        let len = self.index.len();
        let k: Vec<Vec<i64>> = self
            .index
            .iter()
            .map(|l| self.index.iter().map(|mu| km.entry(l, mu)).collect())
            .collect();
        // (K G)_{λβ}
        let kg: Vec<Vec<Frac>> = (0..len)
            .map(|i| {
                (0..len)
                    .map(|j| {
                        (0..len)
                            .filter(|&a| k[i][a] != 0 && !self.gram_m[a][j].is_zero())
                            .fold(Frac::zero(), |acc, a| {
                                &acc + &(&Frac::from_int(k[i][a]) * &self.gram_m[a][j])
                            })
                    })
                    .collect()
            })
            .collect();
        (0..len)
            .map(|i| {
                (0..len)
                    .map(|j| {
                        (0..len)
                            .filter(|&b| k[j][b] != 0 && !kg[i][b].is_zero())
                            .fold(Frac::zero(), |acc, b| {
                                &acc + &(&kg[i][b] * &Frac::from_int(k[j][b]))
                            })
                    })
                    .collect()
            })
            .collect()
    }
}

/// Embeds a polynomial element into the fraction field.
pub fn to_frac(f: &SymElem<TPoly>) -> SymElem<Frac> {
    f.map(|c| Frac::from_poly(c.clone()))
}

// ---------------------------------------------------------------------------
// Cauchy identities
// ---------------------------------------------------------------------------

/// Which expansion of the Cauchy kernel to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CauchyForm {
    /// `Ω = Σ q⁺_λ(x) m_λ(y)`.
    Plus,
    /// `Ω = Σ m_λ(x) q⁻_λ(y)`.
    Minus,
    /// `Ω = Σ P⁺_λ(x) Q⁻_λ(y)`, with the two families supplied by the caller.
    PQ,
}

/// Degree-`n` part (in x) of `Ω(x, y) = ∏_k ∏_{i,j} (1 − t_k x^(k)_i y^(k+1)_j)/(1 − x^(k)_i y^(k)_j)`
/// over `2·r·m` variables: x-variables first, then y-variables.
pub fn cauchy_kernel(n: usize, params: &Params, m: usize) -> XPoly {
    let r = params.r();
    let nx = r * m;
    let nv = 2 * nx;
    let one = params.one();
    let truncate = |p: &XPoly| -> XPoly {
        XPoly::from_terms(
            nv,
            p.terms()
                .filter(|(mono, _)| (0..nx).map(|i| mono.exp(i)).sum::<u32>() as usize <= n)
                .map(|(mo, c)| (mo.padded(nv), c.clone())),
        )
    };
    let mut acc = XPoly::one(nv).scale(&one);
    for k in 1..=r {
        for i in 1..=m {
            for j in 1..=m {
                let xi = xvar(r, k, i);
                // 1/(1 − x^k_i y^k_j) truncated
                let yj = nx + xvar(r, k, j);
                let mut geo = XPoly::zero(nv);
                for a in 0..=n as u32 {
                    let mut e = vec![0u32; nv];
                    e[xi] = a;
                    e[yj] = a;
                    geo += &XPoly::monomial(nv, e, one.clone());
                }
                acc = truncate(&(&acc * &geo));
                // (1 − t_k x^k_i y^{k+1}_j)
                let yj1 = nx + xvar(r, cyc(r, k as isize + 1), j);
                let mut e = vec![0u32; nv];
                e[xi] = 1;
                e[yj1] = 1;
                let lin = &XPoly::one(nv).scale(&one)
                    - &XPoly::monomial(nv, e, params.t(k as isize).clone());
                acc = truncate(&(&acc * &lin));
            }
        }
    }
    XPoly::from_terms(
        nv,
        acc.terms()
            .filter(|(mono, _)| (0..nx).map(|i| mono.exp(i)).sum::<u32>() as usize == n)
            .map(|(mo, c)| (mo.padded(nv), c.clone())),
    )
}

/// Moves an x-polynomial in `r·m` variables to the y-block of a `2·r·m` universe.
pub fn to_y_block(p: &XPoly, nx: usize) -> XPoly {
    let perm: Vec<usize> = (0..nx).map(|i| i + nx).collect();
    p.permute_vars(&perm).with_nvars(2 * nx)
}

/// Monomial-coordinate element to x-polynomial.
pub fn m_elem_to_x(f: &SymElem<TPoly>, m: usize, one: &TPoly) -> Result<XPoly> {
    let mut out = XPoly::zero(f.r * m);
    for (l, c) in &f.coords {
        out += &monomial_x(l, m, one)?.scale(c);
    }
    Ok(out)
}

/// Checks one expansion of the Cauchy kernel in degree `n` with `m = n`
/// variables per group.  For [`CauchyForm::PQ`] the caller passes the pairs
/// `(P⁺_λ, Q⁻_λ)` in Schur coordinates.  Returns a witness monomial on failure.
pub fn cauchy_check(
    n: usize,
    engine: &SymEngine,
    form: CauchyForm,
    pq: Option<&[(SymElem<TPoly>, SymElem<TPoly>)]>,
) -> Result<std::result::Result<(), String>> {
    let params = engine.params();
    let r = params.r();
    let m = n.max(1);
    let nx = r * m;
    let one = params.one();
    let lhs = cauchy_kernel(n, params, m);
    let mut rhs = XPoly::zero(2 * nx);
    match form {
        CauchyForm::Plus | CauchyForm::Minus => {
            for l in gen_rpartitions(n, r) {
                let mono = monomial_x(&l, m, &one)?;
                let sign = if form == CauchyForm::Plus {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                let q = q_product_x(&combinat::c_map(&l, m)?, sign, params, m);
                let term = if form == CauchyForm::Plus {
                    &q.with_nvars(2 * nx) * &to_y_block(&mono, nx)
                } else {
                    &mono.with_nvars(2 * nx) * &to_y_block(&q, nx)
                };
                rhs += &term;
            }
        }
        CauchyForm::PQ => {
            let pairs =
                pq.ok_or_else(|| Error::Invariant("PQ form needs the function families".into()))?;
            for (p, q) in pairs {
                let px = schur_elem_to_x(p, m, &one)?;
                let qy = to_y_block(&schur_elem_to_x(q, m, &one)?, nx);
                rhs += &(&px.with_nvars(2 * nx) * &qy);
            }
        }
    }
    let diff = &lhs - &rhs;
    Ok(match diff.leading() {
        None => Ok(()),
        Some((mono, c)) => Err(format!(
            "monomial {:?} differs by {}",
            mono.padded(2 * nx),
            c
        )),
    })
}

/// `q±_β` as an explicit x-polynomial (the slow route, used as an oracle).
pub fn q_product_x(beta: &[i64], sign: Sign, params: &Params, m: usize) -> XPoly {
    let r = params.r();
    let mut out = XPoly::one(r * m).scale(&params.one());
    for (p, &v) in beta.iter().enumerate() {
        if v < 0 {
            return XPoly::zero(r * m);
        }
        if v > 0 {
            out = &out * &q_func_x(combinat::comp_of(r, p), v as usize, sign, params, m);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Classical one-parameter theory
// ---------------------------------------------------------------------------

/// The classical Hall–Littlewood polynomial `P_λ(y₁, …, y_m; t)` by direct
/// symmetrization, as an x-polynomial and in Schur coordinates (`r = 1`).
pub fn classical_hl(lambda: &Partition, m: usize) -> Result<(XPoly, SymElem<TPoly>)> {
    if lambda.len() > m {
        return Err(Error::PaddingTooSmall {
            needed: lambda.len(),
            given: m,
        });
    }
    let t = TPoly::var(1, 0);
    let one = TPoly::one(1);
    // y^λ ∏_{i<j} (y_i − t y_j)
    let mut num = XPoly::monomial(
        m,
        (0..m).map(|i| lambda.part(i) as u32).collect(),
        one.clone(),
    );
    for i in 0..m {
        for j in i + 1..m {
            let lin = &XPoly::var(m, i).scale(&one) - &XPoly::var(m, j).scale(&t);
            num = &num * &lin;
        }
    }
    // v_λ(t) = ∏_{i≥0} v_{m_i}(t), including the zero parts
    let mut v = combinat::v_poly(m - lambda.len(), 0, 1);
    let mut distinct: Vec<usize> = lambda.parts().to_vec();
    distinct.dedup();
    for p in distinct {
        v = &v * &combinat::v_poly(lambda.multiplicity(p), 0, 1);
    }
    let schur = alternant_reading(&num, 1, m, lambda.size())?;
    let schur = schur.try_map(|c| c.try_div(&v))?;
    // the x-polynomial: antisymmetrize, divide by the Vandermonde and by v_λ
    let mut anti = XPoly::zero(m);
    let mut vdm = XPoly::zero(m);
    for (perm, sign) in permutations_with_sign(m) {
        let c = TPoly::constant(1, sign.into());
        anti += &num.permute_vars(&perm).scale(&c);
        vdm += &XPoly::monomial(m, (0..m).map(|i| (m - 1 - i) as u32).collect(), one.clone())
            .permute_vars(&perm)
            .scale(&c);
    }
    let x = anti
        .exact_div(&vdm)
        .ok_or_else(|| Error::InexactDivision("Vandermonde".into()))?;
    let v_x = XPoly::constant(m, v);
    let x = x
        .exact_div(&v_x)
        .ok_or_else(|| Error::InexactDivision("v_λ(t)".into()))?;
    Ok((x, schur))
}

/// Classical Kostka–Foulkes polynomial `K_{λ,μ}(t)` from the classical
/// Hall–Littlewood functions (`s_λ = Σ_μ K_{λμ}(t) P_μ`).
pub fn classical_kostka_table(n: usize) -> Result<HashMap<(Partition, Partition), TPoly>> {
    let index = Partition::all(n);
    let rows: Vec<SymElem<TPoly>> = index
        .iter()
        .map(|l| classical_hl(l, n.max(1)).map(|x| x.1))
        .collect::<Result<_>>()?;
    let ridx: Vec<RPartition> = index
        .iter()
        .map(|p| RPartition::new(vec![p.clone()]).expect("r = 1"))
        .collect();
    let u: Vec<Vec<TPoly>> = rows.iter().map(|e| e.to_vec(&ridx)).collect();
    let k = invert_unitriangular(&u)?;
    let mut out = HashMap::new();
    for (i, l) in index.iter().enumerate() {
        for (j, mu) in index.iter().enumerate() {
            out.insert((l.clone(), mu.clone()), k[i][j].clone());
        }
    }
    Ok(out)
}

/// Classical Kostka–Foulkes polynomial for one pair.
pub fn classical_kostka(lambda: &Partition, mu: &Partition) -> Result<TPoly> {
    if lambda.size() != mu.size() {
        return Ok(TPoly::zero(1));
    }
    Ok(classical_kostka_table(lambda.size())?
        .remove(&(lambda.clone(), mu.clone()))
        .unwrap_or_else(|| TPoly::zero(1)))
}

/// Inverts a unitriangular polynomial matrix by back-substitution.  Rows and
/// columns follow the descending index order, so an expansion `u_λ = e_λ +
/// Σ_{μ below λ} c e_μ` has its off-diagonal entries right of the diagonal.
pub fn invert_unitriangular(u: &[Vec<TPoly>]) -> Result<Vec<Vec<TPoly>>> {
    let n = u.len();
    let nv = u.iter().flatten().map(TPoly::nvars).max().unwrap_or(0);
    for i in 0..n {
        if !u[i][i].is_one() {
            return Err(Error::Invariant(format!(
                "diagonal entry {i} is {} rather than 1",
                u[i][i]
            )));
        }
        for j in 0..i {
            if !u[i][j].is_zero() {
                return Err(Error::Invariant(format!(
                    "entry ({i},{j}) violates triangularity"
                )));
            }
        }
    }
    // X with U X = I; row i: X_i = e_i − Σ_{j>i} U_{ij} X_j
    let mut x: Vec<Vec<TPoly>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let mut row: Vec<TPoly> = (0..n)
            .map(|j| {
                if i == j {
                    TPoly::one(nv)
                } else {
                    TPoly::zero(nv)
                }
            })
            .collect();
        for j in i + 1..n {
            if u[i][j].is_zero() {
                continue;
            }
            for c in j..n {
                if !x[j][c].is_zero() {
                    row[c] -= &(&u[i][j] * &x[j][c]);
                }
            }
        }
        x[i] = row;
    }
    Ok(x)
}

impl<C: Scalar> SymElem<C> {
    /// The r-partitions carrying a nonzero coordinate.
    pub fn support(&self) -> Vec<RPartition> {
        self.coords.keys().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    fn pr(s: &str, r: usize) -> TPoly {
        TPoly::parse(s, r).unwrap()
    }

    #[test]
    fn expand_examples() {
        let p = Params::generic(2);
        let one = p.one();
        // x¹₁ x²₁
        let f = XPoly::monomial(2, vec![1, 1], one.clone());
        let e = expand_to_m(&f, 2, 2, 1).unwrap();
        assert_eq!(e.get(&rp("([1],[1])")), one);
        // h₂ in one group at m = 2
        let h2 = h_x(1, 2, 1, 2, &TPoly::one(1));
        let e = expand_to_m(&h2, 2, 1, 2).unwrap();
        assert_eq!(e.get(&rp("([2])")), TPoly::one(1));
        assert_eq!(e.get(&rp("([1,1])")), TPoly::one(1));
        // asymmetric input is rejected
        let f = XPoly::monomial(4, vec![2, 0, 0, 0], one.clone());
        assert!(matches!(
            expand_to_m(&f, 2, 2, 2),
            Err(Error::NotSymmetric(_))
        ));
        assert!(matches!(
            expand_to_m(&(&f + &XPoly::monomial(4, vec![1], one)), 2, 2, 2),
            Err(Error::NotHomogeneous(2))
        ));
    }

    #[test]
    fn schur_routes_agree() {
        for n in 1..=4 {
            for r in 1..=2 {
                let m = n;
                let one = TPoly::one(r);
                for l in gen_rpartitions(n, r) {
                    let a = schur_x(&l, m, &one).unwrap();
                    let b = schur_x_alternant(&l, m, &one).unwrap();
                    assert_eq!(a, b, "{l}");
                }
            }
        }
        let s = schur_x_alternant(&rp("([2],[])"), 2, &TPoly::one(2)).unwrap();
        let e = to_schur(&expand_to_m(&s, 2, 2, 2).unwrap());
        assert_eq!(e, SymElem::unit(&rp("([2],[])"), Basis::Schur));
    }

    #[test]
    fn q_func_examples() {
        let p = Params::generic(2);
        let q = q_func_x(1, 1, Sign::Minus, &p, 1);
        let expected =
            &XPoly::monomial(2, vec![1, 0], p.one()) - &XPoly::monomial(2, vec![0, 1], pr("t1", 2));
        assert_eq!(q, expected);
        assert_eq!(
            q_func_x(2, 0, Sign::Plus, &p, 2),
            XPoly::one(4).scale(&p.one())
        );
        // symmetric in the two groups involved
        for sign in Sign::BOTH {
            for k in 1..=2 {
                let q = q_func_x(k, 2, sign, &p, 2);
                assert!(expand_to_m(&q, 2, 2, 2).is_ok());
            }
        }
    }

    #[test]
    fn factorised_and_explicit_q_products_agree() {
        for r in 1..=3 {
            let params = Params::generic(r);
            let engine = SymEngine::new(params.clone());
            for n in 1..=3 {
                for l in gen_rpartitions(n, r) {
                    for sign in Sign::BOTH {
                        let beta = combinat::c_map(&l, n).unwrap();
                        let fast = engine.q_basis_elem(&beta, sign);
                        let slow =
                            expand_to_m(&q_product_x(&beta, sign, &params, n), n, r, n).unwrap();
                        assert_eq!(fast, slow, "{l} {sign}");
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_is_stable_in_m() {
        let params = Params::generic(2);
        for n in 1..=3 {
            for l in gen_rpartitions(n, 2) {
                let beta = combinat::c_map(&l, n).unwrap();
                let a = expand_to_m(&q_product_x(&beta, Sign::Minus, &params, n), n, 2, n).unwrap();
                let beta1 = combinat::c_map(&l, n + 1).unwrap();
                let b = expand_to_m(
                    &q_product_x(&beta1, Sign::Minus, &params, n + 1),
                    n,
                    2,
                    n + 1,
                )
                .unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn negative_entry_gives_zero() {
        let engine = SymEngine::new(Params::generic(2));
        assert!(engine.q_basis_elem(&[2, -1, 0, 1], Sign::Plus).is_zero());
    }

    #[test]
    fn q_minus_of_single_box_in_last_group() {
        let engine = SymEngine::new(Params::generic(2));
        let e = engine.q_basis_elem(&[0, 1], Sign::Minus);
        assert_eq!(e.get(&rp("([],[1])")), TPoly::one(2));
        assert_eq!(e.get(&rp("([1],[])")), -pr("t2", 2));
    }

    #[test]
    fn bilinear_form_dualities() {
        let engine = SymEngine::new(Params::generic(2));
        for n in 1..=2 {
            let form = FormContext::new(&engine, n).unwrap();
            let idx = form.index().to_vec();
            let qp = engine.q_matrix_m(n, Sign::Plus);
            let qm = engine.q_matrix_m(n, Sign::Minus);
            for (i, l) in idx.iter().enumerate() {
                for (j, mu) in idx.iter().enumerate() {
                    let delta = if i == j { Frac::one() } else { Frac::zero() };
                    let m_mu = SymElem::<Frac>::unit(mu, Basis::Monomial);
                    let m_l = SymElem::<Frac>::unit(l, Basis::Monomial);
                    assert_eq!(form.pair(&to_frac(&qp[i]), &m_mu), delta);
                    assert_eq!(form.pair(&m_l, &to_frac(&qm[j])), delta, "{l} {mu}");
                }
            }
            let gs = form.gram_s();
            for i in 0..idx.len() {
                for j in 0..idx.len() {
                    let v = gs[i][j].at_zero().unwrap();
                    assert_eq!(v, num_rational::BigRational::from_integer((i == j).into()));
                }
            }
        }
    }

    #[test]
    fn cauchy_small() {
        let engine = SymEngine::new(Params::generic(2));
        assert_eq!(
            cauchy_check(1, &engine, CauchyForm::Plus, None).unwrap(),
            Ok(())
        );
        assert_eq!(
            cauchy_check(2, &engine, CauchyForm::Minus, None).unwrap(),
            Ok(())
        );
    }

    #[test]
    fn classical_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let (_, e) = classical_hl(&p(&[1, 1]), 2).unwrap();
        let m = to_monomial(&e.clone().with_basis(Basis::Schur));
        assert_eq!(m.get(&rp("([1,1])")), TPoly::one(1));
        assert!(m.get(&rp("([2])")).is_zero());
        let (x, e) = classical_hl(&p(&[2]), 2).unwrap();
        let m = to_monomial(&e.with_basis(Basis::Schur));
        assert_eq!(m.get(&rp("([2])")), TPoly::one(1));
        assert_eq!(m.get(&rp("([1,1])")), pr("1 - t1", 1));
        assert_eq!(expand_to_m(&x, 2, 1, 2).unwrap(), m);
        assert_eq!(
            classical_kostka(&p(&[2]), &p(&[1, 1])).unwrap(),
            pr("t1", 1)
        );
        assert_eq!(
            classical_kostka(&p(&[3]), &p(&[1, 1, 1])).unwrap(),
            pr("t1^3", 1)
        );
        assert!(classical_kostka(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
        assert!(classical_kostka(&p(&[2, 1]), &p(&[2, 1])).unwrap().is_one());
    }
}
