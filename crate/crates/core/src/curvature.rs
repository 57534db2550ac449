//! Symbolic curvature of polynomial translation surfaces.
//!
//! For `z = f(u) + g(v)` write `alpha = f'`, `beta = g'` and
//! `Delta = 1 + alpha^2 + beta^2`. Mean and Gaussian curvature are built as
//! [`RadExpr`]s; the Weingarten (Jacobian) condition is available both as the
//! expanded closed-form polynomial and as an independent derivation through
//! the radical algebra, so each can check the other.

use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly2, Rational, Ring, Var};
use crate::radalg::{ClearedNumerator, HalfInt, RadExpr};

/// One monomial `coeff * alpha^a beta^b alpha'^c beta'^d alpha''^e beta''^f`
/// of a formula in the generator jets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaTerm {
    pub coeff: i64,
    /// Powers of `(alpha, beta, alpha', beta', alpha'', beta'')`.
    pub powers: [u32; 6],
}

const fn t(coeff: i64, powers: [u32; 6]) -> FormulaTerm {
    FormulaTerm { coeff, powers }
}

/// Expanded Jacobian condition `H_u K_v - H_v K_u = 0` with all `Delta`
/// powers cleared: `(H_u K_v - H_v K_u) = Delta^(-9/2) / 2 * (this)`.
pub const JACOBIAN_TERMS: [FormulaTerm; 22] = [
    t(8, [1, 1, 3, 2, 0, 0]),
    t(-8, [1, 1, 2, 3, 0, 0]),
    t(-3, [0, 1, 1, 2, 1, 0]),
    t(3, [1, 0, 2, 1, 0, 1]),
    t(-2, [2, 1, 1, 2, 1, 0]),
    t(2, [1, 2, 2, 1, 0, 1]),
    t(-3, [0, 3, 1, 2, 1, 0]),
    t(3, [3, 0, 2, 1, 0, 1]),
    t(-3, [1, 0, 3, 0, 0, 1]),
    t(3, [0, 1, 0, 3, 1, 0]),
    t(3, [2, 1, 0, 3, 1, 0]),
    t(-3, [1, 2, 3, 0, 0, 1]),
    t(1, [0, 0, 1, 0, 1, 1]),
    t(-1, [0, 0, 0, 1, 1, 1]),
    t(1, [2, 0, 1, 0, 1, 1]),
    t(-1, [0, 2, 0, 1, 1, 1]),
    t(2, [0, 2, 1, 0, 1, 1]),
    t(-2, [2, 0, 0, 1, 1, 1]),
    t(1, [2, 2, 1, 0, 1, 1]),
    t(-1, [2, 2, 0, 1, 1, 1]),
    t(-1, [4, 0, 0, 1, 1, 1]),
    t(1, [0, 4, 1, 0, 1, 1]),
];

/// Numerator of the second Gaussian curvature in the normalization
/// `K_II = num / (4 Delta^(3/2))`.
pub const KII_TERMS: [FormulaTerm; 12] = [
    t(-2, [2, 0, 2, 1, 0, 0]),
    t(-2, [0, 2, 1, 2, 0, 0]),
    t(2, [2, 0, 1, 2, 0, 0]),
    t(2, [0, 2, 2, 1, 0, 0]),
    t(2, [0, 0, 1, 2, 0, 0]),
    t(2, [0, 0, 2, 1, 0, 0]),
    t(1, [0, 1, 1, 0, 0, 1]),
    t(1, [1, 0, 0, 1, 1, 0]),
    t(1, [2, 1, 1, 0, 0, 1]),
    t(1, [1, 2, 0, 1, 1, 0]),
    t(1, [0, 3, 1, 0, 0, 1]),
    t(1, [3, 0, 0, 1, 1, 0]),
];

/// Evaluates a jet formula over any ring. `jets` is
/// `[alpha, beta, alpha', beta', alpha'', beta'']`.
pub fn evaluate_formula<R: Ring>(terms: &[FormulaTerm], jets: &[R; 6]) -> R {
    let max_pow = terms.iter().flat_map(|t| t.powers).max().unwrap_or(0) as usize;
    // powers[s][k] = jets[s]^k
    let powers: Vec<Vec<R>> = jets
        .iter()
        .map(|x| {
            let mut row = vec![R::one()];
            for k in 0..max_pow {
                let next = row[k].times(x);
                row.push(next);
            }
            row
        })
        .collect();
    let mut acc = R::zero();
    for term in terms {
        let mut m = R::one();
        for (s, &p) in term.powers.iter().enumerate() {
            if p > 0 {
                m = m.times(&powers[s][p as usize]);
            }
        }
        acc = acc.plus(&m.scaled(term.coeff));
    }
    acc
}

/// Polynomial generators `alpha = f'` (in `u` only) and `beta = g'` (in `v` only).
#[derive(Clone, Debug, PartialEq)]
pub struct PolyGenerators {
    alpha: Poly2,
    beta: Poly2,
    alpha1: Poly2,
    alpha2: Poly2,
    beta1: Poly2,
    beta2: Poly2,
    delta: Arc<Poly2>,
}

impl PolyGenerators {
    pub fn new(alpha: Poly2, beta: Poly2) -> Result<Self> {
        if alpha.depends_on(Var::V) {
            return Err(Error::WrongVariable {
                name: "alpha",
                expected: Var::U,
                found: Var::V,
            });
        }
        if beta.depends_on(Var::U) {
            return Err(Error::WrongVariable {
                name: "beta",
                expected: Var::V,
                found: Var::U,
            });
        }
        let alpha1 = alpha.diff(Var::U);
        let alpha2 = alpha1.diff(Var::U);
        let beta1 = beta.diff(Var::V);
        let beta2 = beta1.diff(Var::V);
        let delta = Arc::new(Poly2::one() + alpha.pow(2) + beta.pow(2));
        Ok(PolyGenerators {
            alpha,
            beta,
            alpha1,
            alpha2,
            beta1,
            beta2,
            delta,
        })
    }

    /// Generators of `z = f(u) + g(v)`.
    pub fn from_primitives(f: &Poly2, g: &Poly2) -> Result<Self> {
        if f.depends_on(Var::V) {
            return Err(Error::WrongVariable {
                name: "f",
                expected: Var::U,
                found: Var::V,
            });
        }
        if g.depends_on(Var::U) {
            return Err(Error::WrongVariable {
                name: "g",
                expected: Var::V,
                found: Var::U,
            });
        }
        PolyGenerators::new(f.diff(Var::U), g.diff(Var::V))
    }

    pub fn alpha(&self) -> &Poly2 {
        &self.alpha
    }

    pub fn beta(&self) -> &Poly2 {
        &self.beta
    }

    pub fn alpha_prime(&self) -> &Poly2 {
        &self.alpha1
    }

    pub fn beta_prime(&self) -> &Poly2 {
        &self.beta1
    }

    pub fn delta(&self) -> &Poly2 {
        &self.delta
    }

    /// Degree of `alpha`; the zero polynomial counts as degree 0.
    pub fn m(&self) -> u32 {
        self.alpha.degree(Var::U).unwrap_or(0)
    }

    /// Degree of `beta`; the zero polynomial counts as degree 0.
    pub fn n(&self) -> u32 {
        self.beta.degree(Var::V).unwrap_or(0)
    }

    /// Leading coefficient `a_m` of `alpha` (zero for `alpha = 0`).
    pub fn leading_alpha(&self) -> Rational {
        self.alpha.coefficient(self.m(), 0)
    }

    /// Leading coefficient `b_n` of `beta` (zero for `beta = 0`).
    pub fn leading_beta(&self) -> Rational {
        self.beta.coefficient(0, self.n())
    }

    pub fn jets(&self) -> [Poly2; 6] {
        [
            self.alpha.clone(),
            self.beta.clone(),
            self.alpha1.clone(),
            self.beta1.clone(),
            self.alpha2.clone(),
            self.beta2.clone(),
        ]
    }

    /// True iff `alpha' = 0` or `beta' = 0` identically (a cylinder or plane).
    pub fn is_degenerate(&self) -> bool {
        self.alpha1.is_zero() || self.beta1.is_zero()
    }

    /// Numerator of the mean curvature: `(1 + beta^2) alpha' + (1 + alpha^2) beta'`.
    pub fn mean_numerator(&self) -> Poly2 {
        (Poly2::one() + self.beta.pow(2)) * &self.alpha1
            + (Poly2::one() + self.alpha.pow(2)) * &self.beta1
    }

    /// Numerator of the Gaussian curvature: `alpha' beta'`.
    pub fn gauss_numerator(&self) -> Poly2 {
        &self.alpha1 * &self.beta1
    }

    /// Floating-point `(H, K, Delta)` from the symbolic expressions at a
    /// rational point.
    pub fn curvatures_at(&self, u: &Rational, v: &Rational) -> (f64, f64, f64) {
        let h = mean_curvature_expr(self).eval_at_rational(u, v);
        let k = gauss_curvature_expr(self).eval_at_rational(u, v);
        let d = self.delta.eval(u, v).to_f64().unwrap_or(f64::NAN);
        (h, k, d)
    }
}

/// `H = [(1 + beta^2) alpha' + (1 + alpha^2) beta'] / 2 * Delta^(-3/2)`.
pub fn mean_curvature_expr(gen: &PolyGenerators) -> RadExpr {
    RadExpr::term(
        Arc::clone(&gen.delta),
        gen.mean_numerator()
            .scale(&Rational::new(1.into(), 2.into())),
        HalfInt::from_doubled(-3),
    )
}

/// `K = alpha' beta' * Delta^(-2)`.
pub fn gauss_curvature_expr(gen: &PolyGenerators) -> RadExpr {
    RadExpr::term(
        Arc::clone(&gen.delta),
        gen.gauss_numerator(),
        HalfInt::from_int(-2),
    )
}

/// Expanded Jacobian polynomial obtained by substituting the generator jets
/// into [`JACOBIAN_TERMS`].
pub fn jacobian_direct(gen: &PolyGenerators) -> Poly2 {
    evaluate_formula(&JACOBIAN_TERMS, &gen.jets())
}

/// `H_u K_v - H_v K_u` computed in the radical algebra, then cleared.
pub fn jacobian_derived_expr(gen: &PolyGenerators) -> RadExpr {
    let h = mean_curvature_expr(gen);
    let k = gauss_curvature_expr(gen);
    let lhs = h.diff(Var::U).mul(&k.diff(Var::V)).expect("shared delta");
    let rhs = h.diff(Var::V).mul(&k.diff(Var::U)).expect("shared delta");
    lhs.sub(&rhs).expect("shared delta")
}

/// Cleared numerator of the derived Jacobian. The surface is Weingarten iff
/// both parity components vanish.
pub fn jacobian_derived(gen: &PolyGenerators) -> ClearedNumerator {
    jacobian_derived_expr(gen).as_cleared_numerator()
}

/// Second Gaussian curvature numerator from [`KII_TERMS`].
pub fn kii_numerator(gen: &PolyGenerators) -> Poly2 {
    evaluate_formula(&KII_TERMS, &gen.jets())
}

/// Jacobian condition specialised to `beta = slope * v + intercept`:
/// seven terms in `alpha, beta, alpha', alpha''`, each weighted by a power of
/// the slope.
pub fn jacobian_linear_beta(alpha: &Poly2, slope: &Rational, intercept: &Rational) -> Poly2 {
    // (coefficient, power of slope, powers of (alpha, beta, alpha', alpha''))
    const TERMS: [(i64, u32, [u32; 4]); 7] = [
        (8, 2, [1, 1, 3, 0]),
        (-8, 3, [1, 1, 2, 0]),
        (-3, 2, [0, 1, 1, 1]),
        (-2, 2, [2, 1, 1, 1]),
        (-3, 2, [0, 3, 1, 1]),
        (3, 3, [0, 1, 0, 1]),
        (3, 3, [2, 1, 0, 1]),
    ];
    let beta = Poly2::univariate(Var::V, &[intercept.clone(), slope.clone()]);
    let a1 = alpha.diff(Var::U);
    let a2 = a1.diff(Var::U);
    let jets = [alpha, &beta, &a1, &a2];
    TERMS.iter().fold(Poly2::zero(), |acc, (c, sp, pw)| {
        let mut m = Poly2::constant(int(*c) * crate::radalg::rational_pow(slope, *sp as i64));
        for (x, &p) in jets.iter().zip(pw) {
            m = m * x.pow(p);
        }
        acc + m
    })
}

/// Jacobian condition for two linear generators:
/// `8 alpha beta alpha'^3 beta'^2 - 8 alpha beta alpha'^2 beta'^3`.
pub fn jacobian_linear_pair(gen: &PolyGenerators) -> Poly2 {
    let ab = &gen.alpha * &gen.beta;
    let first = &ab * &gen.alpha1.pow(3) * gen.beta1.pow(2);
    let second = &ab * &gen.alpha1.pow(2) * gen.beta1.pow(3);
    (first - second).scale(&int(8))
}

/// Finds `(q, s)` with `lhs = q * delta^s * rhs`, trying `|s| <= max_shift`.
/// Both sides zero gives `Some((0, 0))`.
pub fn match_up_to_delta_power(
    lhs: &Poly2,
    rhs: &Poly2,
    delta: &Poly2,
    max_shift: u32,
) -> Option<(Rational, i32)> {
    if lhs.is_zero() && rhs.is_zero() {
        return Some((Rational::zero(), 0));
    }
    if lhs.is_zero() || rhs.is_zero() {
        return None;
    }
    let (dl, dr) = (lhs.total_degree()?, rhs.total_degree()?);
    let dd = delta.total_degree().unwrap_or(0);
    for s in 0..=max_shift {
        let power = delta.pow(s);
        // Degrees must balance before attempting the product.
        if dd == 0 || dr + s * dd == dl {
            if let Some(q) = lhs.proportionality_constant(&(rhs * &power)) {
                return Some((q, s as i32));
            }
        }
        if s > 0 && (dd == 0 || dl + s * dd == dr) {
            if let Some(q) = (lhs * &power).proportionality_constant(rhs) {
                return Some((q, -(s as i32)));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn gens(alpha: &[i64], beta: &[i64]) -> PolyGenerators {
        let a: Vec<_> = alpha.iter().map(|&c| int(c)).collect();
        let b: Vec<_> = beta.iter().map(|&c| int(c)).collect();
        PolyGenerators::new(Poly2::univariate(Var::U, &a), Poly2::univariate(Var::V, &b)).unwrap()
    }

    fn paraboloid() -> PolyGenerators {
        gens(&[0, 2], &[0, 2])
    }

    #[test]
    fn mean_curvature_of_paraboloid() {
        let h = mean_curvature_expr(&paraboloid());
        let numer = Poly2::from_terms([(int(2), 0, 0), (int(4), 2, 0), (int(4), 0, 2)]);
        assert_eq!(h.coefficient(HalfInt::from_doubled(-3)), Some(&numer));
        assert_eq!(h.eval_exact(&int(0), &int(0)), Some(int(2)));
        assert_eq!(h.eval_exact(&int(1), &int(1)), Some(rat(10, 27)));
    }

    #[test]
    fn constant_generators_are_flat_and_minimal() {
        let g = gens(&[3], &[-1]);
        assert!(mean_curvature_expr(&g).is_zero());
        assert!(gauss_curvature_expr(&g).is_zero());
    }

    #[test]
    fn gauss_curvature_values() {
        let k = gauss_curvature_expr(&paraboloid());
        assert_eq!(k.eval_exact(&int(1), &int(1)), Some(rat(4, 81)));
        assert_eq!(k.eval_exact(&int(0), &int(0)), Some(int(4)));
        assert!(gauss_curvature_expr(&gens(&[0, 0, 5], &[7])).is_zero());
    }

    #[test]
    fn generators_must_respect_variables() {
        let err = PolyGenerators::new(Poly2::v(), Poly2::v()).unwrap_err();
        assert!(matches!(err, Error::WrongVariable { name: "alpha", .. }));
        assert!(PolyGenerators::new(Poly2::u(), Poly2::u()).is_err());
    }

    #[test]
    fn jacobian_direct_examples() {
        assert!(jacobian_direct(&gens(&[0, 1], &[0, 1])).is_zero());
        assert_eq!(
            jacobian_direct(&gens(&[0, 2], &[0, 1])),
            Poly2::monomial(int(64), 1, 1)
        );
        // alpha = u^2, beta = v, worked out by hand term by term.
        let expected = Poly2::from_terms([
            (int(56), 5, 1),
            (int(-26), 4, 1),
            (int(-12), 1, 3),
            (int(-12), 1, 1),
            (int(6), 0, 1),
        ]);
        assert_eq!(jacobian_direct(&gens(&[0, 0, 1], &[0, 1])), expected);
    }

    #[test]
    fn derived_jacobian_examples() {
        assert!(jacobian_derived(&gens(&[0, 1], &[0, 1])).is_zero());
        assert!(jacobian_derived(&gens(&[4], &[1, 2, 3])).is_zero());

        let g = gens(&[0, 2], &[0, 1]);
        let c = jacobian_derived(&g);
        assert!(c.even.is_zero());
        let direct = jacobian_direct(&g);
        let (q, s) = match_up_to_delta_power(&c.odd, &direct, g.delta(), 3).unwrap();
        assert_eq!((q, s), (rat(1, 2), 0));
        assert_eq!(c.k_min, HalfInt::from_int(-5));
    }

    #[test]
    fn both_jacobians_agree_up_to_one_half() {
        for (a, b) in [
            (vec![1, 1], vec![0, -1, 3]),
            (vec![0, 0, 0, 2], vec![1, 1]),
            (vec![2, -1, 1], vec![0, 3, 0, 1]),
        ] {
            let g = gens(&a, &b);
            let c = jacobian_derived(&g);
            assert!(c.even.is_zero());
            let expected = jacobian_direct(&g).scale(&rat(1, 2));
            assert_eq!(c.odd, expected);
        }
    }

    #[test]
    fn linear_beta_specialisation() {
        let alpha = Poly2::univariate(Var::U, &[int(1), int(-2), int(0), int(3)]);
        for (slope, intercept) in [(int(1), int(0)), (rat(5, 2), int(-1)), (int(-3), rat(1, 3))] {
            let beta = Poly2::univariate(Var::V, &[intercept.clone(), slope.clone()]);
            let g = PolyGenerators::new(alpha.clone(), beta).unwrap();
            assert_eq!(
                jacobian_direct(&g),
                jacobian_linear_beta(&alpha, &slope, &intercept)
            );
        }
    }

    #[test]
    fn linear_coefficient_variant_only_holds_for_unit_slope() {
        // With coefficient -2a instead of -2a^2 on alpha^2 beta alpha' alpha''
        // the seven-term form only matches the expansion at unit slope.
        let alpha = Poly2::univariate(Var::U, &[int(0), int(0), int(1)]);
        let variant = |slope: &Rational, intercept: &Rational| {
            let beta = Poly2::univariate(Var::V, &[intercept.clone(), slope.clone()]);
            let a1 = alpha.diff(Var::U);
            let a2 = a1.diff(Var::U);
            let correction = (&alpha.pow(2) * &beta * &a1 * &a2)
                .scale(&(int(2) * slope * slope - int(2) * slope));
            jacobian_linear_beta(&alpha, slope, intercept) + correction
        };
        let g1 = PolyGenerators::new(alpha.clone(), Poly2::v()).unwrap();
        assert_eq!(variant(&int(1), &int(0)), jacobian_direct(&g1));
        let g2 = PolyGenerators::new(alpha.clone(), Poly2::v().scale(&int(2))).unwrap();
        assert_ne!(variant(&int(2), &int(0)), jacobian_direct(&g2));
    }

    #[test]
    fn linear_pair_two_term_form() {
        for (a, b) in [
            (vec![3, 2], vec![-1, 2]),
            (vec![0, 1], vec![5, -4]),
            (vec![1, 1], vec![1, 1]),
        ] {
            let g = gens(&a, &b);
            assert_eq!(jacobian_direct(&g), jacobian_linear_pair(&g));
        }
    }

    #[test]
    fn kii_numerator_examples() {
        assert!(kii_numerator(&gens(&[0, 0, 1], &[4])).is_zero());
        assert_eq!(kii_numerator(&paraboloid()), Poly2::constant(int(32)));
        assert_eq!(
            kii_numerator(&gens(&[0, 1], &[0, 1])).eval(&int(0), &int(0)),
            int(4)
        );
    }

    #[test]
    fn principal_curvatures_are_real() {
        let g = gens(&[1, -2, 1], &[0, 3, 0, -1]);
        let h = mean_curvature_expr(&g);
        let k = gauss_curvature_expr(&g);
        let disc = h.mul(&h).unwrap().sub(&k).unwrap();
        for i in -6..=6 {
            for j in -6..=6 {
                let val = disc.eval_exact(&rat(i, 3), &rat(j, 3)).unwrap();
                assert!(val >= Rational::zero());
            }
        }
    }
}
