//! Decision procedures for polynomial translation surfaces: Weingarten
//! classification, the paraboloid curvature relation, the homogeneous
//! linear Weingarten test and vanishing second Gaussian curvature.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::curvature::{
    gauss_curvature_expr, jacobian_direct, kii_numerator, mean_curvature_expr, PolyGenerators,
};
use crate::error::{Error, Result};
use crate::exactpoly::{int, Exponents, Poly2, Rational};
use crate::radalg::rational_sqrt;

/// Vertex data of `z = a ((u - u0)^2 + (v - v0)^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParaboloidParams {
    /// Opening; positive after orientation normalization.
    pub a: Rational,
    pub u0: Rational,
    pub v0: Rational,
    /// True when the input opened downward and was reflected to `a > 0`.
    pub orientation_flipped: bool,
}

impl ParaboloidParams {
    pub fn new(a: Rational, u0: Rational, v0: Rational) -> Self {
        ParaboloidParams {
            a,
            u0,
            v0,
            orientation_flipped: false,
        }
    }

    /// Generators `alpha = 2a(u - u0)`, `beta = 2a(v - v0)`.
    pub fn generators(&self) -> PolyGenerators {
        let two_a = int(2) * &self.a;
        let alpha = Poly2::from_terms([(two_a.clone(), 1, 0), (-(&two_a * &self.u0), 0, 0)]);
        let beta = Poly2::from_terms([(two_a.clone(), 0, 1), (-(&two_a * &self.v0), 0, 0)]);
        PolyGenerators::new(alpha, beta).expect("univariate by construction")
    }

    /// Exact `(H^2, K)` at a rational point; both involve only integer powers
    /// of `Delta`.
    pub fn curvatures_squared_at(&self, u: &Rational, v: &Rational) -> (Rational, Rational) {
        let gen = self.generators();
        let h = mean_curvature_expr(&gen);
        let h2 = h.mul(&h).expect("shared delta").eval_exact(u, v);
        let k = gauss_curvature_expr(&gen).eval_exact(u, v);
        (h2.expect("integer powers"), k.expect("integer powers"))
    }
}

/// A nonzero monomial of a condition polynomial, plus a rational point where
/// the whole polynomial is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub coefficient: Rational,
    pub exponents: Exponents,
    pub point: (Rational, Rational),
    pub value: Rational,
}

impl Witness {
    fn of(p: &Poly2) -> Option<Witness> {
        let (exponents, coefficient) = p.leading_term()?;
        let point = nonzero_point(p)?;
        let value = p.eval(&point.0, &point.1);
        Some(Witness {
            coefficient: coefficient.clone(),
            exponents,
            point,
            value,
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (value {} at u={}, v={})",
            Poly2::monomial(self.coefficient.clone(), self.exponents.0, self.exponents.1),
            self.value,
            self.point.0,
            self.point.1
        )
    }
}

/// A nonzero polynomial of degree `d` in each variable cannot vanish on the
/// whole `(d+1) x (d+1)` integer grid, so a search there always succeeds.
fn nonzero_point(p: &Poly2) -> Option<(Rational, Rational)> {
    let du = p.degree(crate::Var::U)? as i64;
    let dv = p.degree(crate::Var::V)? as i64;
    for i in 0..=du {
        for j in 0..=dv {
            let (u, v) = (int(i + 1), int(j + 1));
            if !p.eval(&u, &v).is_zero() {
                return Some((u, v));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// A generator is constant, so `K = 0`.
    CylinderOrPlane,
    ParaboloidOfRevolution(ParaboloidParams),
    NotWeingarten(Witness),
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::CylinderOrPlane => "CylinderOrPlane",
            Classification::ParaboloidOfRevolution(_) => "ParaboloidOfRevolution",
            Classification::NotWeingarten(_) => "NotWeingarten",
        }
    }

    pub fn is_weingarten(&self) -> bool {
        !matches!(self, Classification::NotWeingarten(_))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::CylinderOrPlane => f.write_str("CylinderOrPlane"),
            Classification::ParaboloidOfRevolution(p) => write!(
                f,
                "ParaboloidOfRevolution(a={}, u0={}, v0={}{})",
                p.a,
                p.u0,
                p.v0,
                if p.orientation_flipped {
                    ", reflected"
                } else {
                    ""
                }
            ),
            Classification::NotWeingarten(w) => write!(f, "NotWeingarten(witness {w})"),
        }
    }
}

/// Classification together with the Jacobian polynomial it was decided from.
#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub classification: Classification,
    pub jacobian: Poly2,
    pub degrees: (u32, u32),
}

/// Classifies a polynomial translation surface given by its generators.
pub fn classify_pt(f_prime: &Poly2, g_prime: &Poly2) -> Result<Classification> {
    let gen = PolyGenerators::new(f_prime.clone(), g_prime.clone())?;
    Ok(classify_generators(&gen)?.classification)
}

pub fn classify_generators(gen: &PolyGenerators) -> Result<ClassifyReport> {
    let jacobian = jacobian_direct(gen);
    let (m, n) = (gen.m(), gen.n());
    let classification = if gen.is_degenerate() {
        if !jacobian.is_zero() {
            return Err(Error::CaseTableViolation { m, n });
        }
        Classification::CylinderOrPlane
    } else if jacobian.is_zero() {
        if (m, n) != (1, 1) {
            return Err(Error::CaseTableViolation { m, n });
        }
        Classification::ParaboloidOfRevolution(paraboloid_params(gen))
    } else {
        Classification::NotWeingarten(Witness::of(&jacobian).expect("nonzero polynomial"))
    };
    Ok(ClassifyReport {
        classification,
        jacobian,
        degrees: (m, n),
    })
}

/// `alpha = A u + B`, `beta = A v + b` is `z = (A/2)((u + B/A)^2 + (v + b/A)^2)`
/// up to a vertical translation.
fn paraboloid_params(gen: &PolyGenerators) -> ParaboloidParams {
    let slope = gen.leading_alpha();
    let u0 = -(gen.alpha().coefficient(0, 0) / &slope);
    let v0 = -(gen.beta().coefficient(0, 0) / &slope);
    let a = &slope / int(2);
    ParaboloidParams {
        orientation_flipped: a.is_negative(),
        a: a.abs(),
        u0,
        v0,
    }
}

/// `8 a H^2 - sqrt(K) (2a + sqrt(K))^2` at a rational point, computed exactly
/// from the symbolic curvatures of the paraboloid.
pub fn relation1_residual(
    params: &ParaboloidParams,
    u: &Rational,
    v: &Rational,
) -> Result<Rational> {
    if !params.a.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "paraboloid opening must be positive, got {}",
            params.a
        )));
    }
    let (h2, k) = params.curvatures_squared_at(u, v);
    let root_k = rational_sqrt(&k).ok_or_else(|| Error::NotRationalSquare(k.to_string()))?;
    let two_a = int(2) * &params.a;
    let lhs = int(8) * &params.a * h2;
    let rhs = &root_k * (&two_a + &root_k) * (&two_a + &root_k);
    Ok(lhs - rhs)
}

/// Outcome of the homogeneous linear Weingarten test `2aH + bK = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LwResult {
    /// `K = 0`: satisfied with `a = 0` and any `b`.
    FlatFamily,
    /// `H = 0`: satisfied with `b = 0` and any `a`.
    MinimalFamily,
    /// `N_H^2 Delta = ratio * N_K^2` for a positive constant `ratio = (b/a)^2`.
    /// Never produced by non-degenerate polynomial generators.
    Proportional(Rational),
    NoRelation,
}

/// Decides whether constants `a, b`, not both zero, give `2aH + bK = 0`.
///
/// Squaring `a N_H Delta^(1/2) = -b N_K` turns the question into exact
/// proportionality of `N_H^2 Delta` and `N_K^2`.
pub fn lw0_symbolic(gen: &PolyGenerators) -> LwResult {
    if gen.is_degenerate() {
        return LwResult::FlatFamily;
    }
    let nh = gen.mean_numerator();
    if nh.is_zero() {
        return LwResult::MinimalFamily;
    }
    let nk = gen.gauss_numerator();
    let lhs = &nh.pow(2) * gen.delta();
    match lhs.proportionality_constant(&nk.pow(2)) {
        Some(r) if r.is_positive() => LwResult::Proportional(r),
        _ => LwResult::NoRelation,
    }
}

/// Vanishing test for the second Gaussian curvature numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KiiClass {
    VanishesIdentically,
    NonVanishing(Box<Witness>),
}

pub fn classify_kii(gen: &PolyGenerators) -> KiiClass {
    let num = kii_numerator(gen);
    match Witness::of(&num) {
        None => KiiClass::VanishesIdentically,
        Some(w) => KiiClass::NonVanishing(Box::new(w)),
    }
}

/// True iff `K` is a constant function (no `u, v` dependence).
pub fn has_constant_gauss_curvature(gen: &PolyGenerators) -> bool {
    gauss_curvature_expr(gen).as_constant().is_some()
}

/// The expected outcome for degrees `(m, n)` with leading coefficients of
/// the generators: `min(m, n) = 0` flat, equal slopes at `m = n = 1` a
/// paraboloid, else not Weingarten.
pub fn expected_kind(gen: &PolyGenerators) -> &'static str {
    let (m, n) = (gen.m(), gen.n());
    if m.min(n) == 0 {
        "CylinderOrPlane"
    } else if m == 1 && n == 1 && gen.leading_alpha() == gen.leading_beta() {
        "ParaboloidOfRevolution"
    } else {
        "NotWeingarten"
    }
}
