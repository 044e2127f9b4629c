//! Sparse multivariate polynomials, generic over the coefficient ring.
//!
//! A [`Poly`] maps exponent vectors to nonzero coefficients.  Exponent vectors
//! are stored with trailing zeros trimmed, so the declared variable count is
//! only a lower bound on the universe; binary operations take the larger one.
//! Terms are kept in a graded order (total degree first, then descending
//! lexicographic within a degree), which is also the serialization order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient rings usable inside [`Poly`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// `self / other` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    /// The image of an integer.
    fn from_int(n: i64) -> Self;
}

impl Scalar for BigInt {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Scalar for BigRational {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

impl Scalar for i64 {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (*other != 0 && self % other == 0).then(|| self / other)
    }
    fn from_int(n: i64) -> Self {
        n
    }
}

/// An exponent vector with trailing zeros trimmed, ordered by total degree and
/// then descending lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    deg: u32,
    exps: Vec<u32>,
}

impl Mono {
    /// Builds a monomial from an exponent vector of any length.
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Mono {
            deg: exps.iter().sum(),
            exps,
        }
    }

    /// The constant monomial.
    pub fn one() -> Self {
        Mono::default()
    }

    /// Exponent of variable `i`.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    /// Exponents (trimmed).
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent vector padded to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.exps.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Product of monomials.
    pub fn mul(&self, other: &Mono) -> Mono {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Mono {
            deg: self.deg + other.deg,
            exps,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        if other.exps.len() > self.exps.len() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = e.checked_sub(*o)?;
        }
        Some(Mono::new(exps))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial in `nvars` variables with coefficients in `C`.
#[derive(Clone, Debug)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Mono, C>,
}

impl<C: Scalar> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Scalar + Eq> Eq for Poly<C> {}

impl<C: Scalar> Poly<C> {
    /// The zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant one.
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// A constant.
    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    /// The power `x_i^e`.
    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = e;
        Self::monomial(nvars.max(i + 1), exps, C::one())
    }

    /// A single term `c·x^exps`.
    pub fn monomial(nvars: usize, exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(nvars.max(exps.len()));
        if !c.is_zero() {
            p.terms.insert(Mono::new(exps), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.nvars = p.nvars.max(e.len());
            p.add_term(Mono::new(e), c);
        }
        p
    }

    /// Declared number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Copy with at least `n` declared variables.
    pub fn with_nvars(mut self, n: usize) -> Self {
        self.nvars = self.nvars.max(n);
        self
    }

    /// Whether all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector.
    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms
            .get(&Mono::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.terms
            .get(&Mono::one())
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Whether the polynomial is a constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.deg == 0)
    }

    /// Leading term in the canonical monomial order.
    pub fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.deg)
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    /// Whether every term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.deg == d)
    }

    fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, a)| {
                let p = a.clone() * c.clone();
                (!p.is_zero()).then(|| (m.clone(), p))
            })
            .collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Multiplies by `c·x^m`.
    pub fn mul_term(&self, m: &Mono, c: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, a)| {
                let p = a.clone() * c.clone();
                (!p.is_zero()).then(|| (k.mul(m), p))
            })
            .collect();
        Poly {
            nvars: self.nvars.max(m.exps.len()),
            terms,
        }
    }

    /// Applies `f` to each coefficient, dropping zeros.
    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> D) -> Poly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (m.clone(), d))
            })
            .collect();
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    /// `self^e`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient by a coefficient.
    pub fn exact_div_scalar(&self, c: &C) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            terms.insert(m.clone(), a.exact_div(c)?);
        }
        Some(Poly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        if d.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, a) in &self.terms {
                terms.insert(m.div(&dm)?, a.exact_div(&dc)?);
            }
            return Some(Poly {
                nvars: self.nvars.max(d.nvars),
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars.max(d.nvars));
        while let Some((lm, lc)) = rem.leading() {
            let qm = lm.div(&dm)?;
            let qc = lc.exact_div(&dc)?;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c.clone() * qc.clone()));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Like [`Poly::exact_div`] but reports failure as an error.
    pub fn try_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.exact_div(d).ok_or_else(|| {
            Error::InexactDivision(format!("{} terms by {} terms", self.len(), d.len()))
        })
    }

    /// Substitutes `x_i ↦ assignment[i]`; variables beyond the assignment are kept.
    pub fn substitute(&self, assignment: &[Poly<C>]) -> Poly<C> {
        let nv = assignment
            .iter()
            .map(|p| p.nvars)
            .max()
            .unwrap_or(0)
            .max(self.nvars);
        let mut cache: HashMap<(usize, u32), Poly<C>> = HashMap::new();
        let mut out = Poly::zero(nv);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(nv, c.clone());
            let mut keep = Vec::new();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if let Some(img) = assignment.get(i) {
                    let p = cache.entry((i, e)).or_insert_with(|| img.pow(e));
                    term = &term * &*p;
                } else {
                    keep.resize(i + 1, 0);
                    keep[i] = e;
                }
            }
            if !keep.is_empty() {
                term = term.mul_term(&Mono::new(keep), &C::one());
            }
            out += &term;
        }
        out
    }

    /// Permutes variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly<C> {
        let n = perm
            .iter()
            .copied()
            .max()
            .map_or(0, |v| v + 1)
            .max(self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.exps.iter().enumerate() {
                    e[perm.get(i).copied().unwrap_or(i)] += x;
                }
                (Mono::new(e), c.clone())
            })
            .collect();
        Poly { nvars: n, terms }
    }

    /// Evaluates at a point in the coefficient ring.
    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Coefficients with respect to variable `v`: `self = Σ_d c_d · x_v^d`.
    pub fn coeffs_in(&self, v: usize) -> BTreeMap<u32, Poly<C>> {
        let mut out: BTreeMap<u32, Poly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.exp(v);
            let mut e = m.exps.clone();
            if v < e.len() {
                e[v] = 0;
            }
            out.entry(d)
                .or_insert_with(|| Poly::zero(self.nvars))
                .terms
                .insert(Mono::new(e), c.clone());
        }
        out
    }

    /// Largest variable index that actually occurs.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|m| m.exps.len().checked_sub(1))
            .max()
    }
}

impl<C: Scalar> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for Poly<C> {
    fn one() -> Self {
        Poly::one(0)
    }
}

impl<C: Scalar> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        self.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Scalar> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let nvars = self.nvars.max(rhs.nvars);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(nvars);
        }
        if self.len() == 1 {
            let (m, c) = self.leading().expect("nonempty");
            return rhs.mul_term(m, c).with_nvars(nvars);
        }
        if rhs.len() == 1 {
            let (m, c) = rhs.leading().expect("nonempty");
            return self.mul_term(m, c).with_nvars(nvars);
        }
        let mut acc: HashMap<Mono, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca.clone() * cb.clone();
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = o.get().clone() + prod;
                        *o.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Poly { nvars, terms }
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Scalar> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Scalar> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Scalar> Scalar for Poly<C> {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        Poly::exact_div(self, other)
    }
    fn from_int(n: i64) -> Self {
        Poly::constant(0, C::from_int(n))
    }
}

impl Poly<BigInt> {
    /// Evaluates at an integer point.
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        self.eval(point)
    }

    /// Evaluates at a rational point.
    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
            .eval(point)
    }

    /// Whether every coefficient is nonnegative.
    pub fn nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Whether the coefficient of the leading monomial is one.
    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    /// Canonical JSON form: `[{"e": [...], "c": "..."}]` in canonical term order,
    /// exponent vectors padded to the declared variable count.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(m, c)| JsonTerm {
                e: m.padded(self.nvars),
                c: c.to_string(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    /// Inverse of [`Poly::to_json`].
    pub fn from_json(v: &serde_json::Value, nvars: usize) -> Result<Self> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Poly::zero(nvars);
        for t in terms {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            out += &Poly::monomial(nvars, t.e, c);
        }
        Ok(out)
    }

    /// Parses text such as `1 - t1*t2^2 + 3*t2` over `nvars` variables named
    /// `t1..t{nvars}` (also accepts bare `t` for `t1`).
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let mut out = Poly::zero(nvars);
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let mut coef = BigInt::from(sign);
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {s:?}")));
                }
                if let Some(var) = factor.strip_prefix('t') {
                    let (idx, e) = match var.split_once('^') {
                        Some((a, b)) => (
                            a,
                            b.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (var, 1),
                    };
                    let idx: usize = if idx.is_empty() {
                        1
                    } else {
                        idx.parse()
                            .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?
                    };
                    if idx == 0 || idx > nvars {
                        return Err(Error::Parse(format!(
                            "variable t{idx} outside t1..t{nvars}"
                        )));
                    }
                    exps[idx - 1] += e;
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                    coef *= c;
                }
            }
            out += &Poly::monomial(nvars, exps, coef);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: Vec<u32>,
    c: String,
}

impl fmt::Display for Poly<BigInt> {
    /// Renders with variables named `t1, t2, …`, terms in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.deg == 0 {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("t{}", i + 1)),
                    _ => factors.push(format!("t{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {

    use crate::TPoly;

    fn p(s: &str) -> TPoly {
        TPoly::parse(s, 3).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("1 + t1") * &p("1 - t1"), p("1 - t1^2"));
        assert_eq!(&p("2*t1*t2 - 3") + &TPoly::zero(3), p("2*t1*t2 - 3"));
        assert_eq!(p("1 + t1").pow(3), p("1 + 3*t1 + 3*t1^2 + t1^3"));
        assert_eq!(-&p("t1 - t2"), p("t2 - t1"));
    }

    #[test]
    fn v3_from_product_formula() {
        // ∏_{i≤3}(1 − t^i) / (1 − t)^3 = 1 + 2t + 2t² + t³
        let t = TPoly::var(1, 0);
        let one = TPoly::one(1);
        let num = (1..=3).fold(TPoly::one(1), |acc, i| &acc * &(&one - &t.pow(i)));
        let den = (&one - &t).pow(3);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            crate::combinat::v_poly(3, 0, 1)
        );
    }

    #[test]
    fn exact_division() {
        let t0 = p("t1*t2");
        let one = TPoly::one(3);
        assert_eq!(
            (&one - &t0.pow(2)).exact_div(&(&one - &t0)).unwrap(),
            &one + &t0
        );
        assert_eq!(p("3 + t2").exact_div(&one).unwrap(), p("3 + t2"));
        assert!(p("1 + t1").exact_div(&p("1 + t2")).is_none());
        assert!(p("2*t1").exact_div(&p("4")).is_none());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let q = p("1 - t1*t2^2 + 3*t2 - t3");
        assert_eq!(TPoly::parse(&q.to_string(), 3).unwrap(), q);
        assert_eq!(TPoly::zero(2).to_string(), "0");
        assert!(TPoly::parse("t4", 3).is_err());
        assert!(TPoly::parse("", 3).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = p("1 - t1*t2^2 + 3*t2 - 12345678901234567890*t3^5");
        let j = q.to_json();
        assert_eq!(TPoly::from_json(&j, 3).unwrap(), q);
        assert_eq!(j[0]["e"], serde_json::json!([0, 0, 0]));
    }

    #[test]
    fn substitution() {
        let t = TPoly::var(1, 0);
        assert_eq!(
            p("t1*t2").substitute(&[t.clone(), t.clone(), t.clone()]),
            t.pow(2)
        );
        let id: Vec<TPoly> = (0..3).map(|i| TPoly::var(3, i)).collect();
        let q = p("1 + t1*t3 - 2*t2^3");
        assert_eq!(q.substitute(&id), q);
    }

    #[test]
    fn coefficient_split_recombines() {
        let q = p("1 + t1*t3 - 2*t2^3*t3^2 + t3");
        let parts = q.coeffs_in(2);
        let mut back = TPoly::zero(3);
        for (d, c) in parts {
            back += &(&c * &TPoly::var_pow(3, 2, d));
        }
        assert_eq!(back, q);
    }
}
