//! Floating-point curvature of a Monge patch `z = f(u) + g(v)`.

use crate::curvature::{evaluate_formula, JACOBIAN_TERMS, KII_TERMS};
use crate::error::{Error, Result};
use crate::exactpoly::Var;

use super::expr::Expr;

/// Generators with their symbolic derivatives up to third order.
#[derive(Clone, Debug, PartialEq)]
pub struct TranslationSurface {
    f: Expr,
    g: Expr,
    df: [Expr; 3],
    dg: [Expr; 3],
}

/// Values of the generator jets at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jets {
    pub alpha: f64,
    pub beta: f64,
    pub alpha1: f64,
    pub beta1: f64,
    pub alpha2: f64,
    pub beta2: f64,
}

impl Jets {
    pub fn as_array(&self) -> [f64; 6] {
        [
            self.alpha,
            self.beta,
            self.alpha1,
            self.beta1,
            self.alpha2,
            self.beta2,
        ]
    }

    pub fn delta(&self) -> f64 {
        1.0 + self.alpha * self.alpha + self.beta * self.beta
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMethod {
    MongeFormula,
    SymbolicEval,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureSample {
    pub point: (f64, f64),
    pub h: f64,
    pub k: f64,
    /// `None` where the second fundamental form degenerates (`f'' g'' = 0`).
    pub k_ii: Option<f64>,
    pub delta: f64,
    pub method: SampleMethod,
}

fn derivatives(e: &Expr, var: Var) -> [Expr; 3] {
    let d1 = e.diff(var);
    let d2 = d1.diff(var);
    let d3 = d2.diff(var);
    [d1, d2, d3]
}

impl TranslationSurface {
    pub fn new(f: Expr, g: Expr) -> Result<Self> {
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
        let df = derivatives(&f, Var::U);
        let dg = derivatives(&g, Var::V);
        Ok(TranslationSurface { f, g, df, dg })
    }

    pub fn parse(f: &str, g: &str) -> Result<Self> {
        Self::new(super::parse_expr(f)?, super::parse_expr(g)?)
    }

    pub fn f(&self) -> &Expr {
        &self.f
    }

    pub fn g(&self) -> &Expr {
        &self.g
    }

    /// `f^(k)` for `k` in `1..=3`.
    pub fn df(&self, k: usize) -> &Expr {
        &self.df[k - 1]
    }

    pub fn dg(&self, k: usize) -> &Expr {
        &self.dg[k - 1]
    }

    pub fn height(&self, u: f64, v: f64) -> Result<f64> {
        Ok(self.f.eval(u, v)? + self.g.eval(u, v)?)
    }

    /// First and second order jets, the only ones `H` and `K` need.
    fn low_jets(&self, u: f64, v: f64) -> Result<(f64, f64, f64, f64)> {
        Ok((
            self.df[0].eval(u, v)?,
            self.dg[0].eval(u, v)?,
            self.df[1].eval(u, v)?,
            self.dg[1].eval(u, v)?,
        ))
    }

    pub fn jets(&self, u: f64, v: f64) -> Result<Jets> {
        let (alpha, beta, alpha1, beta1) = self.low_jets(u, v)?;
        Ok(Jets {
            alpha,
            beta,
            alpha1,
            beta1,
            alpha2: self.df[2].eval(u, v)?,
            beta2: self.dg[2].eval(u, v)?,
        })
    }

    /// `(H, K)` with the upward normal.
    pub fn mean_and_gauss(&self, u: f64, v: f64) -> Result<(f64, f64)> {
        let (a, b, a1, b1) = self.low_jets(u, v)?;
        Ok(monge_hk(a, b, a1, b1))
    }

    pub fn eval_curvatures(&self, u: f64, v: f64) -> Result<CurvatureSample> {
        let jets = self.jets(u, v)?;
        let (h, k) = monge_hk(jets.alpha, jets.beta, jets.alpha1, jets.beta1);
        let delta = jets.delta();
        let k_ii = if jets.alpha1 * jets.beta1 == 0.0 {
            None
        } else {
            Some(evaluate_formula(&KII_TERMS, &jets.as_array()) / (4.0 * delta.powf(1.5)))
        };
        Ok(CurvatureSample {
            point: (u, v),
            h,
            k,
            k_ii,
            delta,
            method: SampleMethod::MongeFormula,
        })
    }

    /// Expanded Jacobian polynomial in the jets evaluated at a point.
    pub fn jacobian_formula_at(&self, u: f64, v: f64) -> Result<f64> {
        Ok(evaluate_formula(
            &JACOBIAN_TERMS,
            &self.jets(u, v)?.as_array(),
        ))
    }

    /// Second Gaussian curvature numerator evaluated at a point.
    pub fn kii_numerator_at(&self, u: f64, v: f64) -> Result<f64> {
        Ok(evaluate_formula(&KII_TERMS, &self.jets(u, v)?.as_array()))
    }
}

/// Mean and Gaussian curvature of a Monge patch with `z_uv = 0`.
pub fn monge_hk(alpha: f64, beta: f64, alpha1: f64, beta1: f64) -> (f64, f64) {
    let delta = 1.0 + alpha * alpha + beta * beta;
    let h =
        ((1.0 + beta * beta) * alpha1 + (1.0 + alpha * alpha) * beta1) / (2.0 * delta.powf(1.5));
    let k = alpha1 * beta1 / (delta * delta);
    (h, k)
}

/// Sample computed from exact polynomial generators through the symbolic
/// curvature expressions.
pub fn sample_from_generators(
    gen: &crate::curvature::PolyGenerators,
    u: &crate::exactpoly::Rational,
    v: &crate::exactpoly::Rational,
) -> CurvatureSample {
    use num_traits::ToPrimitive;
    let (h, k, delta) = gen.curvatures_at(u, v);
    let jets = gen
        .jets()
        .map(|p| p.eval(u, v).to_f64().unwrap_or(f64::NAN));
    let k_ii = if jets[2] * jets[3] == 0.0 {
        None
    } else {
        let num = crate::curvature::kii_numerator(gen)
            .eval(u, v)
            .to_f64()
            .unwrap_or(f64::NAN);
        Some(num / (4.0 * delta.powf(1.5)))
    };
    CurvatureSample {
        point: (
            u.to_f64().unwrap_or(f64::NAN),
            v.to_f64().unwrap_or(f64::NAN),
        ),
        h,
        k,
        k_ii,
        delta,
        method: SampleMethod::SymbolicEval,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::curvature::PolyGenerators;
    use crate::exactpoly::{rat, Poly2};
    use proptest::prelude::*;

    fn surface(f: &str, g: &str) -> TranslationSurface {
        TranslationSurface::parse(f, g).unwrap()
    }

    #[test]
    fn scherk_is_minimal() {
        let s = surface("log(abs(cos(u)))", "-log(abs(cos(v)))");
        let c = s.eval_curvatures(0.3, -0.7).unwrap();
        assert!(c.h.abs() < 1e-12, "{}", c.h);
        assert!(c.k < 0.0);
    }

    #[test]
    fn paraboloid_values() {
        let s = surface("u^2", "v^2");
        let c = s.eval_curvatures(1.0, 1.0).unwrap();
        assert!((c.h - 10.0 / 27.0).abs() < 1e-15);
        assert!((c.k - 4.0 / 81.0).abs() < 1e-15);
        assert_eq!(c.delta, 9.0);
        assert!((c.k_ii.unwrap() - 32.0 / (4.0 * 27.0)).abs() < 1e-15);
    }

    #[test]
    fn cylinder_is_flat() {
        let s = surface("u^3", "2*v");
        for (u, v) in [(0.0, 0.0), (1.5, -2.0), (-0.3, 7.0)] {
            let c = s.eval_curvatures(u, v).unwrap();
            assert_eq!(c.k, 0.0);
            assert!(c.k_ii.is_none());
        }
    }

    #[test]
    fn singular_points_are_domain_errors() {
        let s = surface("u^(4/3)", "-v^(4/3)");
        assert!(matches!(
            s.eval_curvatures(0.0, 1.0),
            Err(Error::Domain { .. })
        ));
        let s = surface("sqrt(2)*sqrt(1 - u^2)", "v");
        match s.eval_curvatures(1.5, 0.0) {
            Err(Error::Domain { expr, .. }) => assert_eq!(expr, "sqrt(1 - u^2)"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn generators_must_separate() {
        assert!(TranslationSurface::parse("u*v", "v").is_err());
        assert!(TranslationSurface::parse("u", "u").is_err());
    }

    #[test]
    fn jacobian_formula_matches_polynomial() {
        let gen = PolyGenerators::new(Poly2::u().pow(2), Poly2::v()).unwrap();
        let s = surface("u^3/3", "v^2/2");
        let direct = crate::curvature::jacobian_direct(&gen);
        let got = s.jacobian_formula_at(0.75, -1.25).unwrap();
        assert!((got - direct.eval_f64(0.75, -1.25)).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn matches_symbolic_evaluation(seed in 0u64..500) {
            let mut rng = corpus::rng(seed);
            let gen = corpus::generators(&mut rng, 1 + (seed % 3) as u32, 1 + (seed % 4) as u32);
            let f = Expr::from_poly(&gen.alpha().integrate(Var::U));
            let g = Expr::from_poly(&gen.beta().integrate(Var::V));
            let s = TranslationSurface::new(f, g).unwrap();
            let (u, v) = (corpus::dyadic(&mut rng, 2, 3), corpus::dyadic(&mut rng, 2, 3));
            let exact = sample_from_generators(&gen, &u, &v);
            let numeric = s.eval_curvatures(exact.point.0, exact.point.1).unwrap();
            let close = |a: f64, b: f64| (a - b).abs() <= 1e-10 * a.abs().max(b.abs()).max(1e-300);
            prop_assert!(close(exact.h, numeric.h), "{} {}", exact.h, numeric.h);
            prop_assert!(close(exact.k, numeric.k), "{} {}", exact.k, numeric.k);
            prop_assert!(numeric.delta >= 1.0);
            prop_assert!(numeric.h * numeric.h - numeric.k >= -1e-9);
            match (exact.k_ii, numeric.k_ii) {
                (Some(a), Some(b)) => prop_assert!(close(a, b) || (a - b).abs() < 1e-12, "{} {}", a, b),
                (None, None) => {}
                other => prop_assert!(false, "{:?}", other),
            }
        }
    }

    #[test]
    fn rational_point_sample_is_exact_for_paraboloid() {
        let gen = PolyGenerators::new(Poly2::u().scale(&rat(2, 1)), Poly2::v().scale(&rat(2, 1)))
            .unwrap();
        let c = sample_from_generators(&gen, &rat(1, 1), &rat(1, 1));
        assert!((c.h - 10.0 / 27.0).abs() < 1e-15);
        assert_eq!(c.method, SampleMethod::SymbolicEval);
    }
}
