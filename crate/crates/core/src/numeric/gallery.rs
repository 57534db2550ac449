//! Named translation surfaces with the property each one should satisfy.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Rational, Var};

use super::expr::{parse_expr, Expr, Func};
use super::surface::TranslationSurface;
use super::Rect;

#[derive(Clone, Debug, PartialEq)]
pub enum GallerySurface {
    /// `z = (1/a) log|cos(a u) / cos(a v)|`.
    Scherk { a: Rational },
    /// Constant mean curvature `h0` cylinder tilted by slope `a`.
    Cmc { h0: Rational, a: Rational },
    /// `z = c (u^(4/3) - v^(4/3))`.
    Blair { c: Rational },
    /// `z = a (u - u0)^2 + a (v - v0)^2`.
    Paraboloid {
        a: Rational,
        u0: Rational,
        v0: Rational,
    },
    /// `z = profile(u)`.
    Cylinder { profile: Expr },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExpectedProperty {
    Minimal,
    ConstantMeanCurvature(Rational),
    VanishingKii,
    /// `8a H^2 = sqrt(K) (2a + sqrt(K))^2`, see
    /// [`crate::classify::relation1_residual`].
    ParaboloidRelation(Rational),
    Flat,
}

impl fmt::Display for ExpectedProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpectedProperty::Minimal => f.write_str("H = 0"),
            ExpectedProperty::ConstantMeanCurvature(h) => write!(f, "|H| = {h}"),
            ExpectedProperty::VanishingKii => f.write_str("K_II = 0"),
            ExpectedProperty::ParaboloidRelation(a) => {
                write!(f, "paraboloid relation with a = {a}")
            }
            ExpectedProperty::Flat => f.write_str("K = 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub f: Expr,
    pub g: Expr,
    pub expected: ExpectedProperty,
    pub domain: Rect,
}

impl GalleryEntry {
    pub fn surface(&self) -> Result<TranslationSurface> {
        TranslationSurface::new(self.f.clone(), self.g.clone())
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn log_abs_cos(a: &Rational, var: Var) -> Expr {
    let arg = Expr::product(Expr::Const(a.clone()), Expr::var(var));
    Expr::func(Func::Log, Expr::func(Func::Abs, Expr::func(Func::Cos, arg)))
}

pub fn gallery(surface: &GallerySurface) -> Result<GalleryEntry> {
    match surface {
        GallerySurface::Scherk { a } => {
            if a.is_zero() {
                return Err(Error::InvalidParameter("scherk needs a != 0".into()));
            }
            let inv = a.recip();
            let half = 0.9 * std::f64::consts::FRAC_PI_2 / to_f64(a).abs();
            Ok(GalleryEntry {
                name: "scherk",
                f: Expr::product(Expr::Const(inv.clone()), log_abs_cos(a, Var::U)),
                g: Expr::product(Expr::Const(-inv), log_abs_cos(a, Var::V)),
                expected: ExpectedProperty::Minimal,
                domain: Rect::square(half),
            })
        }
        GallerySurface::Cmc { h0, a } => {
            if h0.is_zero() {
                return Err(Error::InvalidParameter("cmc needs H0 != 0".into()));
            }
            // f = sqrt(1 + a^2) / (2 H0) * sqrt(1 - 4 H0^2 u^2)
            let scale = Expr::quotient(
                Expr::func(Func::Sqrt, Expr::Const(Rational::one() + a * a)),
                Expr::Const(int(2) * h0),
            );
            let radicand = Expr::difference(
                Expr::int(1),
                Expr::product(Expr::Const(int(4) * h0 * h0), Expr::pow(Expr::u(), int(2))),
            );
            let half = 0.9 / (2.0 * to_f64(h0).abs());
            Ok(GalleryEntry {
                name: "cmc",
                f: Expr::product(scale, Expr::func(Func::Sqrt, radicand)),
                g: Expr::product(Expr::Const(a.clone()), Expr::v()),
                expected: ExpectedProperty::ConstantMeanCurvature(h0.abs()),
                domain: Rect::new(-half, half, -1.0, 1.0),
            })
        }
        GallerySurface::Blair { c } => {
            if c.is_zero() {
                return Err(Error::InvalidParameter("blair needs c != 0".into()));
            }
            let power = |var| Expr::pow(Expr::var(var), Rational::new(4.into(), 3.into()));
            Ok(GalleryEntry {
                name: "blair",
                f: Expr::product(Expr::Const(c.clone()), power(Var::U)),
                g: Expr::product(Expr::Const(-c.clone()), power(Var::V)),
                expected: ExpectedProperty::VanishingKii,
                domain: Rect::new(0.5, 2.0, 0.5, 2.0),
            })
        }
        GallerySurface::Paraboloid { a, u0, v0 } => {
            if !a.is_positive() {
                return Err(Error::InvalidParameter("paraboloid needs a > 0".into()));
            }
            let square = |var, c: &Rational| {
                Expr::product(
                    Expr::Const(a.clone()),
                    Expr::pow(
                        Expr::difference(Expr::var(var), Expr::Const(c.clone())),
                        int(2),
                    ),
                )
            };
            let (cu, cv) = (to_f64(u0), to_f64(v0));
            Ok(GalleryEntry {
                name: "paraboloid",
                f: square(Var::U, u0),
                g: square(Var::V, v0),
                expected: ExpectedProperty::ParaboloidRelation(a.clone()),
                domain: Rect::new(cu - 1.0, cu + 1.0, cv - 1.0, cv + 1.0),
            })
        }
        GallerySurface::Cylinder { profile } => {
            if profile.depends_on(Var::V) {
                return Err(Error::InvalidParameter(
                    "cylinder profile must depend on u only".into(),
                ));
            }
            Ok(GalleryEntry {
                name: "cylinder",
                f: profile.clone(),
                g: Expr::int(0),
                expected: ExpectedProperty::Flat,
                domain: Rect::square(1.0),
            })
        }
    }
}

pub const GALLERY_NAMES: [&str; 5] = ["scherk", "cmc", "blair", "paraboloid", "cylinder"];

/// Builds a gallery surface from a name and positional parameters; missing
/// parameters take the defaults `scherk(1)`, `cmc(1/2, 1)`, `blair(1)`,
/// `paraboloid(1, 0, 0)`, `cylinder(u^3)`.
pub fn from_name(
    name: &str,
    params: &[Rational],
    profile: Option<&Expr>,
) -> Result<GallerySurface> {
    let get = |k: usize, default: i64| params.get(k).cloned().unwrap_or_else(|| int(default));
    let max = match name {
        "scherk" | "blair" => 1,
        "cmc" => 2,
        "paraboloid" => 3,
        "cylinder" => 0,
        other => return Err(Error::UnknownSurface(other.to_string())),
    };
    if params.len() > max {
        return Err(Error::InvalidParameter(format!(
            "{name} takes at most {max} parameters"
        )));
    }
    Ok(match name {
        "scherk" => GallerySurface::Scherk { a: get(0, 1) },
        "blair" => GallerySurface::Blair { c: get(0, 1) },
        "cmc" => GallerySurface::Cmc {
            h0: params
                .first()
                .cloned()
                .unwrap_or_else(|| Rational::new(1.into(), 2.into())),
            a: get(1, 1),
        },
        "paraboloid" => GallerySurface::Paraboloid {
            a: get(0, 1),
            u0: get(1, 0),
            v0: get(2, 0),
        },
        _ => GallerySurface::Cylinder {
            profile: match profile {
                Some(p) => p.clone(),
                None => parse_expr("u^3").expect("literal"),
            },
        },
    })
}

/// Primitive of `c x^p` for `x > 0`: `c x^(p+1) / (p+1)`, or `c log(x)` at
/// `p = -1`.
pub fn power_primitive(c: &Rational, p: &Rational, var: Var) -> Expr {
    let x = Expr::var(var);
    if *p == -Rational::one() {
        return Expr::product(Expr::Const(c.clone()), Expr::func(Func::Log, x));
    }
    let e = p + Rational::one();
    Expr::product(Expr::Const(c / &e), Expr::pow(x, e))
}

/// `z = f(u) + g(v)` with `f' = a u^p`, `g' = b v^q` on `u, v > 0`.
pub fn power_law_surface(
    a: &Rational,
    p: &Rational,
    b: &Rational,
    q: &Rational,
) -> Result<TranslationSurface> {
    TranslationSurface::new(power_primitive(a, p, Var::U), power_primitive(b, q, Var::V))
}
