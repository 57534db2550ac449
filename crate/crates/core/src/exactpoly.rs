//! Exact bivariate polynomials over arbitrary-precision rationals.
//!
//! [`Poly2`] is the workhorse behind every symbolic question in this crate:
//! curvature numerators, the Weingarten condition and the second Gaussian
//! curvature numerator all reduce to "is this polynomial identically zero".
//! The representation is a sparse map from exponent pairs to nonzero
//! coefficients, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parameter-plane coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    U,
    V,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::U => Var::V,
            Var::V => Var::U,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::V => "v",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The operations needed to evaluate a fixed polynomial formula over some
/// commutative ring: exact polynomials, power sums, or plain floats.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, k: i64) -> Self;

    fn power(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, k: i64) -> Self {
        self * k as f64
    }
    fn power(&self, n: u32) -> Self {
        self.powi(n as i32)
    }
}

/// Exponent pair `(i, j)` of the monomial `u^i v^j`.
pub type Exponents = (u32, u32);

/// Sparse bivariate polynomial in `u` and `v` with exact rational coefficients.
///
/// No stored coefficient is ever zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::monomial(c, 0, 0)
    }

    pub fn u() -> Self {
        Poly2::monomial(Rational::one(), 1, 0)
    }

    pub fn v() -> Self {
        Poly2::monomial(Rational::one(), 0, 1)
    }

    pub fn var(var: Var) -> Self {
        match var {
            Var::U => Poly2::u(),
            Var::V => Poly2::v(),
        }
    }

    /// `c * u^i * v^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Poly2 { terms }
    }

    /// Builds a polynomial from `(coefficient, i, j)` triples, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u32, u32)>,
    {
        let mut p = Poly2::zero();
        for (c, i, j) in terms {
            p.add_term((i, j), c);
        }
        p
    }

    /// Univariate polynomial `sum coeffs[k] * var^k`.
    pub fn univariate(var: Var, coeffs: &[Rational]) -> Self {
        Poly2::from_terms(coeffs.iter().enumerate().map(|(k, c)| match var {
            Var::U => (c.clone(), k as u32, 0),
            Var::V => (c.clone(), 0, k as u32),
        }))
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff every coefficient vanishes, i.e. the polynomial is zero as a
    /// function on the plane.
    pub fn is_identically_zero(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// The constant value if the polynomial has no `u` or `v` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coefficient(0, 0))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates `((i, j), coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn depends_on(&self, var: Var) -> bool {
        self.terms.keys().any(|&(i, j)| match var {
            Var::U => i > 0,
            Var::V => j > 0,
        })
    }

    /// Degree in `var`; `None` for the zero polynomial.
    pub fn degree(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| match var {
                Var::U => i,
                Var::V => j,
            })
            .max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Highest term in graded order (total degree, then `u`-degree).
    pub fn leading_term(&self) -> Option<(Exponents, &Rational)> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, k: &Rational) -> Poly2 {
        if k.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Multiplies by `u^i v^j`.
    pub fn shift(&self, i: u32, j: u32) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly2 {
        Ring::power(self, n)
    }

    /// Formal partial derivative.
    pub fn diff(&self, var: Var) -> Poly2 {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            match var {
                Var::U if i > 0 => {
                    terms.insert((i - 1, j), c * BigInt::from(i));
                }
                Var::V if j > 0 => {
                    terms.insert((i, j - 1), c * BigInt::from(j));
                }
                _ => {}
            }
        }
        Poly2 { terms }
    }

    /// Antiderivative in `var` with zero constant of integration.
    pub fn integrate(&self, var: Var) -> Poly2 {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| match var {
                Var::U => ((i + 1, j), c / BigInt::from(i + 1)),
                Var::V => ((i, j + 1), c / BigInt::from(j + 1)),
            })
            .collect();
        Poly2 { terms }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        let (du, dv) = self.max_exponents();
        let upow = powers(u, du);
        let vpow = powers(v, dv);
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * &upow[i as usize] * &vpow[j as usize];
        }
        acc
    }

    /// Floating-point value at a point.
    pub fn eval_f64(&self, u: f64, v: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c.to_f64().unwrap_or(f64::NAN) * u.powi(i as i32) * v.powi(j as i32)
            })
            .sum()
    }

    fn max_exponents(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }

    /// Returns `c` with `self == c * other`, or `None` if the two are not
    /// proportional. `other` must be nonzero.
    pub fn proportionality_constant(&self, other: &Poly2) -> Option<Rational> {
        let (e, c_other) = other.leading_term()?;
        let c = self.coefficient(e.0, e.1) / c_other;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Splits the coefficients into an integer polynomial and a common
    /// positive denominator.
    fn integer_lift(&self) -> (Vec<(Exponents, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lifted = self
            .terms
            .iter()
            .map(|(&e, c)| (e, c.numer() * (&den / c.denom())))
            .collect();
        (lifted, den)
    }

    fn mul_impl(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let (a, da) = self.integer_lift();
        let (b, db) = other.integer_lift();
        let (au, av) = self.max_exponents();
        let (bu, bv) = other.max_exponents();
        let width = (av + bv + 1) as usize;
        let height = (au + bu + 1) as usize;
        // Dense accumulation; the products arising here are nearly full
        // rectangles in exponent space.
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); width * height];
        for ((ai, aj), ac) in &a {
            for ((bi, bj), bc) in &b {
                let idx = (ai + bi) as usize * width + (aj + bj) as usize;
                acc[idx] += ac * bc;
            }
        }
        let den = da * db;
        let mut terms = BTreeMap::new();
        for (idx, c) in acc.into_iter().enumerate() {
            if !c.is_zero() {
                let e = ((idx / width) as u32, (idx % width) as u32);
                terms.insert(e, Rational::new(c, den.clone()));
            }
        }
        Poly2 { terms }
    }
}

fn powers(x: &Rational, n: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(Rational::one());
    for k in 0..n as usize {
        let next = &out[k] * x;
        out.push(next);
    }
    out
}

impl Ring for Poly2 {
    fn zero() -> Self {
        Poly2::zero()
    }
    fn one() -> Self {
        Poly2::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale(&int(k))
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: &Poly2) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        self.mul_impl(rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly2> for Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: Poly2) -> Poly2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly2> for Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: &Poly2) -> Poly2 {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly2> for &Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: Poly2) -> Poly2 {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

impl From<Rational> for Poly2 {
    fn from(c: Rational) -> Self {
        Poly2::constant(c)
    }
}

impl From<i64> for Poly2 {
    fn from(c: i64) -> Self {
        Poly2::constant(int(c))
    }
}

/// Writes a rational the way the expression parser reads it back.
pub(crate) fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        for (k, (&(i, j), c)) in ordered.into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if i > 0 {
                factors.push(if i == 1 {
                    "u".to_string()
                } else {
                    format!("u^{i}")
                });
            }
            if j > 0 {
                factors.push(if j == 1 {
                    "v".to_string()
                } else {
                    format!("v^{j}")
                });
            }
            if factors.is_empty() || !mag.is_one() {
                fmt_rational(&mag, f)?;
                if !factors.is_empty() {
                    f.write_str("*")?;
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
