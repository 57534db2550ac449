//! Intrinsic curvature of a quadratic form `E du^2 + 2F du dv + G dv^2` by
//! the Brioschi determinant formula, with partial derivatives from
//! fourth-order central differences. Applied to the second fundamental form
//! it gives an oracle for the second Gaussian curvature that shares no
//! algebra with the closed-form numerator.

use crate::error::Result;

use super::surface::TranslationSurface;

pub const DEFAULT_ORACLE_STEP: f64 = 1e-3;

/// A quadratic form field `(u, v) -> (E, F, G)`.
pub trait FormField {
    fn components(&self, u: f64, v: f64) -> Result<[f64; 3]>;
}

impl<T: Fn(f64, f64) -> Result<[f64; 3]>> FormField for T {
    fn components(&self, u: f64, v: f64) -> Result<[f64; 3]> {
        self(u, v)
    }
}

/// First fundamental form `(1 + alpha^2, alpha beta, 1 + beta^2)`.
pub struct FirstForm<'a>(pub &'a TranslationSurface);

/// Second fundamental form `(f'' / sqrt(Delta), 0, g'' / sqrt(Delta))`.
pub struct SecondForm<'a>(pub &'a TranslationSurface);

impl FormField for FirstForm<'_> {
    fn components(&self, u: f64, v: f64) -> Result<[f64; 3]> {
        let a = self.0.df(1).eval(u, v)?;
        let b = self.0.dg(1).eval(u, v)?;
        Ok([1.0 + a * a, a * b, 1.0 + b * b])
    }
}

impl FormField for SecondForm<'_> {
    fn components(&self, u: f64, v: f64) -> Result<[f64; 3]> {
        let a = self.0.df(1).eval(u, v)?;
        let b = self.0.dg(1).eval(u, v)?;
        let root = (1.0 + a * a + b * b).sqrt();
        Ok([
            self.0.df(2).eval(u, v)? / root,
            0.0,
            self.0.dg(2).eval(u, v)? / root,
        ])
    }
}

const D1: [(i32, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];
const D2: [(i32, f64); 5] = [(-2, -1.0), (-1, 16.0), (0, -30.0), (1, 16.0), (2, -1.0)];

#[derive(Clone, Copy, Debug, Default)]
struct Partials {
    value: f64,
    u: f64,
    v: f64,
    uu: f64,
    vv: f64,
    uv: f64,
}

fn relative_det(c: &[f64; 3]) -> f64 {
    let scale = c[0].abs().max(c[1].abs()).max(c[2].abs());
    if scale == 0.0 {
        0.0
    } else {
        (c[0] * c[2] - c[1] * c[1]).abs() / (scale * scale)
    }
}

/// Brioschi curvature of `form` at `(u, v)`, or `None` when the form is
/// degenerate somewhere on the stencil.
pub fn brioschi_curvature<F: FormField + ?Sized>(
    form: &F,
    u: f64,
    v: f64,
    h: f64,
) -> Result<Option<f64>> {
    let mut grid = [[[0.0; 3]; 5]; 5];
    for (i, row) in grid.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let c = form.components(u + (i as f64 - 2.0) * h, v + (j as f64 - 2.0) * h)?;
            if relative_det(&c) < 1e-10 {
                return Ok(None);
            }
            *cell = c;
        }
    }
    let at = |di: i32, dj: i32, k: usize| grid[(di + 2) as usize][(dj + 2) as usize][k];
    let partials = |k: usize| {
        let mut p = Partials {
            value: at(0, 0, k),
            ..Partials::default()
        };
        for &(o, w) in &D1 {
            p.u += w * at(o, 0, k);
            p.v += w * at(0, o, k);
            for &(o2, w2) in &D1 {
                p.uv += w * w2 * at(o, o2, k);
            }
        }
        for &(o, w) in &D2 {
            p.uu += w * at(o, 0, k);
            p.vv += w * at(0, o, k);
        }
        p.u /= 12.0 * h;
        p.v /= 12.0 * h;
        p.uv /= 144.0 * h * h;
        p.uu /= 12.0 * h * h;
        p.vv /= 12.0 * h * h;
        p
    };
    let (e, f, g) = (partials(0), partials(1), partials(2));
    Ok(Some(brioschi(&e, &f, &g)))
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn brioschi(e: &Partials, f: &Partials, g: &Partials) -> f64 {
    let first = det3([
        [-0.5 * e.vv + f.uv - 0.5 * g.uu, 0.5 * e.u, f.u - 0.5 * e.v],
        [f.v - 0.5 * g.u, e.value, f.value],
        [0.5 * g.v, f.value, g.value],
    ]);
    let second = det3([
        [0.0, 0.5 * e.v, 0.5 * g.u],
        [0.5 * e.v, e.value, f.value],
        [0.5 * g.u, f.value, g.value],
    ]);
    let w = e.value * g.value - f.value * f.value;
    (first - second) / (w * w)
}

/// Second Gaussian curvature by the Brioschi formula on the second
/// fundamental form.
pub fn kii_oracle(surface: &TranslationSurface, u: f64, v: f64, h: f64) -> Result<Option<f64>> {
    brioschi_curvature(&SecondForm(surface), u, v, h)
}

/// Curvature of a conformal metric `lambda (du^2 + dv^2)`:
/// `-(1 / 2 lambda) * Laplacian(ln lambda)`.
pub fn conformal_curvature<F: Fn(f64, f64) -> f64>(lambda: F, u: f64, v: f64, h: f64) -> f64 {
    let ln = |x: f64, y: f64| lambda(x, y).ln();
    let mut lap = 0.0;
    for &(o, w) in &D2 {
        let o = o as f64 * h;
        lap += w * (ln(u + o, v) + ln(u, v + o));
    }
    lap /= 12.0 * h * h;
    -lap / (2.0 * lambda(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::gallery::{gallery, GallerySurface};
    use crate::numeric::Rect;

    fn surface(f: &str, g: &str) -> TranslationSurface {
        TranslationSurface::parse(f, g).unwrap()
    }

    #[test]
    fn first_form_recovers_gauss_curvature() {
        for (f, g) in [
            ("u^2", "v^2"),
            ("u^3/3", "v^2/2"),
            ("log(abs(cos(u)))", "-log(abs(cos(v)))"),
        ] {
            let s = surface(f, g);
            for (u, v) in [(0.2, 0.3), (-0.5, 0.8)] {
                let k = s.eval_curvatures(u, v).unwrap().k;
                let b = brioschi_curvature(&FirstForm(&s), u, v, DEFAULT_ORACLE_STEP)
                    .unwrap()
                    .unwrap();
                assert!((k - b).abs() < 1e-7, "{f}: {k} vs {b}");
            }
        }
    }

    #[test]
    fn cylinder_is_degenerate() {
        let s = surface("u^3", "2*v");
        assert_eq!(kii_oracle(&s, 0.5, 0.5, DEFAULT_ORACLE_STEP).unwrap(), None);
    }

    #[test]
    fn paraboloid_oracle_values() {
        let s = surface("u^2", "v^2");
        let at0 = kii_oracle(&s, 0.0, 0.0, DEFAULT_ORACLE_STEP)
            .unwrap()
            .unwrap();
        assert!((at0 - 2.0).abs() < 1e-6, "{at0}");
        let at1 = kii_oracle(&s, 1.0, 1.0, DEFAULT_ORACLE_STEP)
            .unwrap()
            .unwrap();
        assert!((at1 - 2.0 / 27.0).abs() < 1e-6, "{at1}");
    }

    #[test]
    fn conformal_shortcut_agrees() {
        let s = surface("u^2", "v^2");
        let lambda = |u: f64, v: f64| 2.0 / (1.0 + 4.0 * u * u + 4.0 * v * v).sqrt();
        for (u, v) in [(0.0, 0.0), (1.0, 1.0), (-0.4, 0.7)] {
            let c = conformal_curvature(lambda, u, v, DEFAULT_ORACLE_STEP);
            let d = 1.0 + 4.0 * u * u + 4.0 * v * v;
            assert!((c - 2.0 / d.powf(1.5)).abs() < 1e-7);
            let o = kii_oracle(&s, u, v, DEFAULT_ORACLE_STEP).unwrap().unwrap();
            assert!((c - o).abs() < 1e-7);
        }
    }

    #[test]
    fn closed_form_over_oracle_is_curvature_product() {
        // the closed-form value carries an extra factor f'' g''
        for (f, g) in [
            ("u^2", "v^2"),
            ("u^4 + u^2", "v^2"),
            ("exp(u)", "-exp(v)"),
            ("u^3/3", "-v^3/3"),
        ] {
            let s = surface(f, g);
            for (u, v) in [(0.3, 0.45), (0.8, 0.6), (1.2, 1.5)] {
                let closed = s.eval_curvatures(u, v).unwrap().k_ii.unwrap();
                let oracle = kii_oracle(&s, u, v, DEFAULT_ORACLE_STEP).unwrap().unwrap();
                let product = s.df(2).eval(u, v).unwrap() * s.dg(2).eval(u, v).unwrap();
                assert!(
                    (closed - product * oracle).abs() < 1e-6 * (1.0 + closed.abs()),
                    "{f},{g}: {closed} {oracle} {product}"
                );
            }
        }
    }

    #[test]
    fn paraboloid_ratio_is_constant() {
        let s = surface("u^2", "v^2");
        let ratios: Vec<f64> = Rect::square(1.0)
            .grid(5)
            .into_iter()
            .map(|(u, v)| {
                s.eval_curvatures(u, v).unwrap().k_ii.unwrap()
                    / kii_oracle(&s, u, v, DEFAULT_ORACLE_STEP).unwrap().unwrap()
            })
            .collect();
        for r in &ratios {
            assert!((r / ratios[0] - 1.0).abs() < 1e-4);
        }
        assert!((ratios[0] - 4.0).abs() < 1e-4);
    }

    #[test]
    fn blair_zero_sets_agree() {
        let entry = gallery(&GallerySurface::Blair { c: crate::int(1) }).unwrap();
        let s = entry.surface().unwrap();
        for (u, v) in Rect::new(0.5, 2.0, 0.5, 2.0).grid(7) {
            let closed = s.eval_curvatures(u, v).unwrap().k_ii.unwrap();
            let oracle = kii_oracle(&s, u, v, DEFAULT_ORACLE_STEP).unwrap().unwrap();
            assert!(
                closed.abs() < 1e-6 && oracle.abs() < 1e-6,
                "{closed} {oracle}"
            );
        }
    }
}
