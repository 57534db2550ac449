//! Finite sums `sum p_k * Delta^(k/2)` over a fixed ambient `Delta`.
//!
//! Mean curvature, Gaussian curvature and their partial derivatives of a
//! translation surface all live in this algebra: coefficients are exact
//! polynomials and the only irrationality is the single radical `Delta^(1/2)`.
//! Exponents are kept on the half-integer lattice as doubled integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{Poly2, Rational, Var};

/// Half-integer `doubled / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// Largest integer not above the value.
    pub const fn floor(self) -> i64 {
        self.doubled.div_euclid(2)
    }

    pub fn as_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// `x = (even + odd * Delta^(1/2)) * Delta^k_min` with `k_min` an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedNumerator {
    pub even: Poly2,
    pub odd: Poly2,
    pub k_min: HalfInt,
}

impl ClearedNumerator {
    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

/// Element of the radical algebra over a fixed `Delta`.
#[derive(Clone, Debug)]
pub struct RadExpr {
    delta: Arc<Poly2>,
    terms: BTreeMap<HalfInt, Poly2>,
}

impl RadExpr {
    pub fn zero(delta: Arc<Poly2>) -> Self {
        RadExpr {
            delta,
            terms: BTreeMap::new(),
        }
    }

    /// `p * Delta^exponent`.
    pub fn term(delta: Arc<Poly2>, p: Poly2, exponent: HalfInt) -> Self {
        let mut x = RadExpr::zero(delta);
        x.add_term(exponent, p);
        x
    }

    pub fn from_poly(delta: Arc<Poly2>, p: Poly2) -> Self {
        RadExpr::term(delta, p, HalfInt::ZERO)
    }

    pub fn delta(&self) -> &Poly2 {
        &self.delta
    }

    pub fn delta_handle(&self) -> Arc<Poly2> {
        Arc::clone(&self.delta)
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (HalfInt, &Poly2)> + '_ {
        self.terms.iter().map(|(&k, p)| (k, p))
    }

    pub fn coefficient(&self, exponent: HalfInt) -> Option<&Poly2> {
        self.terms.get(&exponent)
    }

    fn add_term(&mut self, k: HalfInt, p: Poly2) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += &p;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    fn check_compatible(&self, other: &RadExpr) -> Result<()> {
        if Arc::ptr_eq(&self.delta, &other.delta) || *self.delta == *other.delta {
            Ok(())
        } else {
            Err(Error::IncompatibleDelta)
        }
    }

    pub fn add(&self, other: &RadExpr) -> Result<RadExpr> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&k, p) in &other.terms {
            out.add_term(k, p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RadExpr) -> Result<RadExpr> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RadExpr {
        RadExpr {
            delta: self.delta_handle(),
            terms: self.terms.iter().map(|(&k, p)| (k, -p)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RadExpr {
        let mut out = RadExpr::zero(self.delta_handle());
        for (&k, p) in &self.terms {
            out.add_term(k, p.scale(c));
        }
        out
    }

    /// Product; exponents add on the half-integer lattice.
    pub fn mul(&self, other: &RadExpr) -> Result<RadExpr> {
        self.check_compatible(other)?;
        let mut out = RadExpr::zero(self.delta_handle());
        for (&k1, p1) in &self.terms {
            for (&k2, p2) in &other.terms {
                out.add_term(k1 + k2, p1 * p2);
            }
        }
        Ok(out)
    }

    /// Partial derivative, using `d(Delta^s) = s * Delta^(s-1) * dDelta`.
    pub fn diff(&self, var: Var) -> RadExpr {
        let d_delta = self.delta.diff(var);
        let mut out = RadExpr::zero(self.delta_handle());
        for (&k, p) in &self.terms {
            out.add_term(k, p.diff(var));
            if k != HalfInt::ZERO && !d_delta.is_zero() {
                let s = Rational::new(BigInt::from(k.doubled()), BigInt::from(2));
                out.add_term(k - HalfInt::from_int(1), (p * &d_delta).scale(&s));
            }
        }
        out
    }

    /// Clears the radical: every term is rewritten against the common integer
    /// exponent `floor(min k)` and split by parity of the remaining power.
    pub fn as_cleared_numerator(&self) -> ClearedNumerator {
        let Some(&k_lo) = self.terms.keys().next() else {
            return ClearedNumerator {
                even: Poly2::zero(),
                odd: Poly2::zero(),
                k_min: HalfInt::ZERO,
            };
        };
        let base = k_lo.floor();
        let mut even = Poly2::zero();
        let mut odd = Poly2::zero();
        for (&k, p) in &self.terms {
            let offset = k.doubled() - 2 * base;
            let lifted = p * &self.delta.pow((offset / 2) as u32);
            if offset % 2 == 0 {
                even += &lifted;
            } else {
                odd += &lifted;
            }
        }
        ClearedNumerator {
            even,
            odd,
            k_min: HalfInt::from_int(base),
        }
    }

    /// Zero test treating `Delta^(1/2)` as a formal, non-polynomial radical.
    pub fn is_zero(&self) -> bool {
        self.as_cleared_numerator().is_zero()
    }

    /// True iff the expression is a constant rational with no radical part.
    pub fn as_constant(&self) -> Option<Rational> {
        let cleared = self.as_cleared_numerator();
        if !cleared.odd.is_zero() {
            return None;
        }
        if cleared.even.is_zero() {
            return Some(Rational::zero());
        }
        // even * Delta^k is constant only for k = 0 (Delta is non-constant
        // whenever it matters) or when Delta itself is constant.
        if let Some(d) = self.delta.as_constant() {
            let c = cleared.even.as_constant()?;
            return Some(c * rational_pow(&d, cleared.k_min.floor()));
        }
        let k = cleared.k_min.floor();
        if k == 0 {
            cleared.even.as_constant()
        } else if k < 0 {
            cleared
                .even
                .proportionality_constant(&self.delta.pow((-k) as u32))
        } else {
            None
        }
    }

    pub fn eval_f64(&self, u: f64, v: f64) -> f64 {
        let d = self.delta.eval_f64(u, v);
        self.terms
            .iter()
            .map(|(k, p)| p.eval_f64(u, v) * d.powf(k.as_f64()))
            .sum()
    }

    /// Evaluates polynomial parts exactly and only rounds the radical powers.
    pub fn eval_at_rational(&self, u: &Rational, v: &Rational) -> f64 {
        let d = self.delta.eval(u, v).to_f64().unwrap_or(f64::NAN);
        self.terms
            .iter()
            .map(|(k, p)| p.eval(u, v).to_f64().unwrap_or(f64::NAN) * d.powf(k.as_f64()))
            .sum()
    }

    /// Exact value when every power of `Delta` is rational at the point: the
    /// exponents are all integers, or `Delta(u, v)` is a perfect square.
    pub fn eval_exact(&self, u: &Rational, v: &Rational) -> Option<Rational> {
        let d = self.delta.eval(u, v);
        if d.is_zero() {
            return None;
        }
        let root = if self.terms.keys().all(|k| k.is_integer()) {
            None
        } else {
            Some(rational_sqrt(&d)?)
        };
        let mut acc = Rational::zero();
        for (k, p) in &self.terms {
            let pv = p.eval(u, v);
            let mut factor = rational_pow(&d, k.floor());
            if !k.is_integer() {
                factor *= root.as_ref()?;
            }
            acc += pv * factor;
        }
        Some(acc)
    }
}

/// `x^n` for any integer `n`; `x` must be nonzero when `n < 0`.
pub fn rational_pow(x: &Rational, n: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n.unsigned_abs() {
        acc *= x;
    }
    if n < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Exact nonnegative square root of a rational, if it is a perfect square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &n * &n == *x.numer() && &d * &d == *x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for RadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, p)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if *k == HalfInt::ZERO {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*Delta^({k})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};
    use proptest::prelude::*;

    fn paraboloid_delta() -> Arc<Poly2> {
        // alpha = 2u, beta = 2v
        let alpha = Poly2::u().scale(&int(2));
        let beta = Poly2::v().scale(&int(2));
        Arc::new(Poly2::one() + alpha.pow(2) + beta.pow(2))
    }

    #[test]
    fn exponents_add() {
        let d = paraboloid_delta();
        let p = Poly2::u();
        let q = Poly2::v();
        let x = RadExpr::term(d.clone(), p.clone(), HalfInt::from_doubled(-1));
        let y = RadExpr::term(d.clone(), q.clone(), HalfInt::from_doubled(-3));
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.coefficient(HalfInt::from_int(-2)), Some(&(&p * &q)));
        assert_eq!(xy.terms().count(), 1);

        let one = RadExpr::from_poly(d, Poly2::one());
        assert!(x.mul(&one).unwrap().sub(&x).unwrap().is_zero());
    }

    #[test]
    fn mismatched_delta_is_rejected() {
        let x = RadExpr::from_poly(paraboloid_delta(), Poly2::u());
        let other = Arc::new(Poly2::one() + Poly2::u().pow(2));
        let y = RadExpr::from_poly(other, Poly2::v());
        assert_eq!(x.mul(&y).unwrap_err(), Error::IncompatibleDelta);
        assert!(x.add(&y).is_err());
    }

    #[test]
    fn square_of_paraboloid_mean_curvature() {
        let d = paraboloid_delta();
        let numer = Poly2::from_terms([(int(2), 0, 0), (int(4), 2, 0), (int(4), 0, 2)]);
        let h = RadExpr::term(d.clone(), numer, HalfInt::from_doubled(-3));
        let expected_numer = Poly2::from_terms([(int(4), 0, 0), (int(8), 2, 0), (int(8), 0, 2)]);
        let expected = RadExpr::term(
            d,
            expected_numer.pow(2).scale(&rat(1, 4)),
            HalfInt::from_int(-3),
        );
        assert!(h.mul(&h).unwrap().sub(&expected).unwrap().is_zero());
    }

    #[test]
    fn chain_rule_on_sqrt_delta() {
        let alpha = Poly2::u().scale(&int(2));
        let d = paraboloid_delta();
        let root = RadExpr::term(d.clone(), Poly2::one(), HalfInt::from_doubled(1));
        let expected = RadExpr::term(
            d.clone(),
            &alpha * &alpha.diff(Var::U),
            HalfInt::from_doubled(-1),
        );
        assert!(root.diff(Var::U).sub(&expected).unwrap().is_zero());
        assert!(RadExpr::from_poly(d, Poly2::constant(int(5)))
            .diff(Var::U)
            .is_zero());
    }

    #[test]
    fn derivative_of_paraboloid_gauss_curvature_vanishes_at_origin() {
        let d = paraboloid_delta();
        let k = RadExpr::term(d, Poly2::constant(int(4)), HalfInt::from_int(-2));
        let dk = k.diff(Var::V);
        assert_eq!(dk.eval_exact(&int(0), &int(0)), Some(int(0)));
        assert!(!dk.is_zero());
    }

    #[test]
    fn cleared_numerator_shapes() {
        let d = paraboloid_delta();
        let z = RadExpr::zero(d.clone()).as_cleared_numerator();
        assert!(z.is_zero());

        let p = Poly2::u() + Poly2::one();
        let x = RadExpr::term(d.clone(), p.clone(), HalfInt::from_doubled(-3));
        let c = x.as_cleared_numerator();
        assert!(c.even.is_zero());
        assert_eq!(c.odd, p);
        assert_eq!(c.k_min, HalfInt::from_int(-2));

        let mixed = RadExpr::term(d.clone(), Poly2::u(), HalfInt::from_int(-1))
            .add(&RadExpr::term(d.clone(), Poly2::v(), HalfInt::ZERO))
            .unwrap();
        let c = mixed.as_cleared_numerator();
        assert_eq!(c.k_min, HalfInt::from_int(-1));
        assert_eq!(c.even, Poly2::u() + &Poly2::v() * d.as_ref());
    }

    #[test]
    fn halfint_floor() {
        assert_eq!(HalfInt::from_doubled(-3).floor(), -2);
        assert_eq!(HalfInt::from_doubled(3).floor(), 1);
        assert_eq!(HalfInt::from_int(-2).floor(), -2);
        assert_eq!(HalfInt::from_doubled(-5).to_string(), "-5/2");
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(rational_sqrt(&rat(4, 81)), Some(rat(2, 9)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    fn arb_small_poly() -> impl Strategy<Value = Poly2> {
        prop::collection::vec((-3i64..=3, 0u32..=2, 0u32..=2), 0..4)
            .prop_map(|ts| Poly2::from_terms(ts.into_iter().map(|(c, i, j)| (int(c), i, j))))
    }

    fn arb_rad(d: Arc<Poly2>) -> impl Strategy<Value = RadExpr> {
        prop::collection::vec((arb_small_poly(), -5i64..=2), 0..3).prop_map(move |ts| {
            ts.into_iter()
                .fold(RadExpr::zero(d.clone()), |acc, (p, k)| {
                    acc.add(&RadExpr::term(d.clone(), p, HalfInt::from_doubled(k)))
                        .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn leibniz(x in arb_rad(paraboloid_delta()), y in arb_rad(paraboloid_delta())) {
            for var in [Var::U, Var::V] {
                let lhs = x.mul(&y).unwrap().diff(var);
                let rhs = x.diff(var).mul(&y).unwrap().add(&x.mul(&y.diff(var)).unwrap()).unwrap();
                prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
            }
        }

        #[test]
        fn cleared_form_evaluates_consistently(
            x in arb_rad(paraboloid_delta()),
            un in -40i64..=40, vn in -40i64..=40,
        ) {
            let (u, v) = (rat(un, 16), rat(vn, 16));
            let direct = x.eval_at_rational(&u, &v);
            let c = x.as_cleared_numerator();
            let d = x.delta().eval(&u, &v).to_f64().unwrap();
            let cleared = (c.even.eval(&u, &v).to_f64().unwrap()
                + c.odd.eval(&u, &v).to_f64().unwrap() * d.sqrt())
                * d.powi(c.k_min.floor() as i32);
            let scale = direct.abs().max(cleared.abs()).max(1e-300);
            prop_assert!((direct - cleared).abs() / scale < 1e-12 || (direct - cleared).abs() < 1e-14);
        }

        #[test]
        fn delta_is_at_least_one(un in -100i64..=100, vn in -100i64..=100) {
            let d = paraboloid_delta().eval(&rat(un, 7), &rat(vn, 7));
            prop_assert!(d >= int(1));
        }
    }
}
