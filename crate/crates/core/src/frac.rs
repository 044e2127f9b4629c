//! Rational functions in the parameters: quotients of integer polynomials.
//!
//! Equality is cross-multiplication equality.  Arithmetic results are reduced
//! by a recursive primitive-remainder-sequence gcd (content and primitive part
//! taken one variable at a time), which keeps the Gram–Schmidt oracle from
//! blowing up.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Scalar};
use crate::TPoly;

/// Integer content of a polynomial (gcd of its coefficients), nonnegative.
fn int_content(p: &TPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

/// Content with respect to variable `v`: gcd of the coefficients of `x_v^d`.
fn content_in(p: &TPoly, v: usize) -> TPoly {
    let mut g = TPoly::zero(p.nvars());
    for (_, c) in p.coeffs_in(v) {
        g = gcd(&g, &c);
        if g.is_constant() && g.constant_term().is_one() {
            break;
        }
    }
    g
}

/// Pseudo-remainder of `f` by `g` with respect to variable `v`.
fn prem(f: &TPoly, g: &TPoly, v: usize) -> TPoly {
    let dg = g.degree_in(v);
    let lc_g = g.coeffs_in(v).remove(&dg).expect("leading coefficient");
    let mut r = f.clone();
    let mut steps = (f.degree_in(v) + 1).saturating_sub(dg);
    while !r.is_zero() && r.degree_in(v) >= dg {
        let dr = r.degree_in(v);
        let lc_r = r.coeffs_in(v).remove(&dr).expect("leading coefficient");
        let shift = TPoly::var_pow(f.nvars(), v, dr - dg);
        r = &(&lc_g * &r) - &(&(&lc_r * &shift) * g);
        steps = steps.saturating_sub(1);
    }
    &lc_g.pow(steps) * &r
}

/// Makes the leading coefficient positive.
fn normalize_sign(p: TPoly) -> TPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

/// Greatest common divisor of two integer polynomials, with positive leading
/// coefficient.  `gcd(0, 0) = 0`.
pub fn gcd(a: &TPoly, b: &TPoly) -> TPoly {
    let nv = a.nvars().max(b.nvars());
    if a.is_zero() {
        return normalize_sign(b.clone()).with_nvars(nv);
    }
    if b.is_zero() {
        return normalize_sign(a.clone()).with_nvars(nv);
    }
    let v = match (a.max_var(), b.max_var()) {
        (None, None) => return TPoly::constant(nv, int_content(a).gcd(&int_content(b))),
        (x, y) => x.max(y).expect("some variable"),
    };
    // Split each operand into content (free of x_v) and primitive part.
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cont = gcd(&ca, &cb);
    let mut f = a.exact_div(&ca).expect("content divides");
    let mut g = b.exact_div(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    let prim = loop {
        if g.degree_in(v) == 0 {
            // g is primitive and free of x_v, hence a unit up to sign.
            break TPoly::one(nv);
        }
        let r = prem(&f, &g, v);
        if r.is_zero() {
            break g;
        }
        if r.degree_in(v) == 0 {
            break TPoly::one(nv);
        }
        let cr = content_in(&r, v);
        f = g;
        g = r.exact_div(&cr).expect("content divides");
    };
    normalize_sign(&cont * &prim).with_nvars(nv)
}

/// A quotient `num / den` of integer polynomials with `den ≠ 0`.
#[derive(Clone, Debug)]
pub struct Frac {
    num: TPoly,
    den: TPoly,
}

impl Frac {
    /// Builds and reduces `num / den`.
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Embeds a polynomial.
    pub fn from_poly(p: TPoly) -> Self {
        let nv = p.nvars();
        Frac {
            num: p,
            den: TPoly::one(nv),
        }
    }

    fn reduced(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return Frac {
                num,
                den: TPoly::one(den.nvars()),
            };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = (
            num.exact_div(&g).expect("gcd divides"),
            den.exact_div(&g).expect("gcd divides"),
        );
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Frac { num, den }
    }

    /// Numerator.
    pub fn num(&self) -> &TPoly {
        &self.num
    }

    /// Denominator.
    pub fn den(&self) -> &TPoly {
        &self.den
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// `self / other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// The polynomial this fraction equals, if any.
    pub fn to_poly(&self) -> Option<TPoly> {
        self.num.exact_div(&self.den)
    }

    /// Substitutes every parameter by zero; defined when the denominator does
    /// not vanish there.
    pub fn at_zero(&self) -> Result<num_rational::BigRational> {
        let d = self.den.constant_term();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(num_rational::BigRational::new(self.num.constant_term(), d))
    }

    /// Applies a substitution to numerator and denominator.
    pub fn substitute(&self, assignment: &[TPoly]) -> Result<Self> {
        Frac::new(
            self.num.substitute(assignment),
            self.den.substitute(assignment),
        )
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Zero for Frac {
    fn zero() -> Self {
        Frac::from_poly(TPoly::zero(0))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Frac {
    fn one() -> Self {
        Frac::from_poly(TPoly::one(0))
    }
}

impl Add<&Frac> for &Frac {
    type Output = Frac;
    fn add(self, rhs: &Frac) -> Frac {
        if self.den == rhs.den {
            return Frac::reduced(&self.num + &rhs.num, self.den.clone());
        }
        Frac::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&Frac> for &Frac {
    type Output = Frac;
    fn sub(self, rhs: &Frac) -> Frac {
        self + &(-rhs)
    }
}

impl Mul<&Frac> for &Frac {
    type Output = Frac;
    fn mul(self, rhs: &Frac) -> Frac {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Frac::zero();
        }
        // Cross-reduce before multiplying to keep sizes small.
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = rhs.den.exact_div(&g1).expect("gcd divides");
        let c = rhs.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        let (mut num, mut den) = (&a * &c, &b * &d);
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Frac { num, den }
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Frac> for Frac {
            type Output = Frac;
            fn $m(self, rhs: Frac) -> Frac {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        -&self
    }
}

impl Scalar for Frac {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div(other).ok()
    }
    fn from_int(n: i64) -> Self {
        Frac::from_poly(TPoly::constant(0, n.into()))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<TPoly> for Frac {
    fn from(p: TPoly) -> Self {
        Frac::from_poly(p)
    }
}

/// Convenience: a polynomial with coefficients in the fraction field.
pub type FracPoly = Poly<Frac>;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TPoly {
        TPoly::parse(s, 3).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("1 - t1^2"), &p("1 - t1")), p("t1 - 1"));
        assert_eq!(gcd(&p("6*t1"), &p("4*t1*t2")), p("2*t1"));
        let a = p("1 + t1*t2 - t3");
        let b = p("t1 + t2^2");
        let c = p("2 - t2*t3");
        let g = gcd(&(&a * &b), &(&a * &c));
        assert!(g == a || g == -&a);
        assert_eq!(gcd(&b, &c), TPoly::one(3));
        assert_eq!(gcd(&TPoly::zero(3), &p("-2*t1")), p("2*t1"));
    }

    #[test]
    fn fraction_field_examples() {
        let a = Frac::new(p("1 - t1*t2"), p("1 + t3")).unwrap();
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, Frac::one());
        assert_eq!(&a + &Frac::zero(), a);
        assert!(Frac::zero().inv().is_err());
        assert!(Frac::new(p("1"), TPoly::zero(3)).is_err());
        let half = Frac::new(p("t1 - t1^2"), p("1 - t1")).unwrap();
        assert_eq!(half.to_poly().unwrap(), p("t1"));
    }

    #[test]
    fn at_zero() {
        let a = Frac::new(p("1 + t1"), p("2 - t2")).unwrap();
        assert_eq!(
            a.at_zero().unwrap(),
            num_rational::BigRational::new(1.into(), 2.into())
        );
        assert!(Frac::new(p("1"), p("t1")).unwrap().at_zero().is_err());
    }
}
