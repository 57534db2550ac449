//! Least-squares fit of a linear Weingarten relation `2aH + bK = c`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

use super::surface::CurvatureSample;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LwFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub residual_rms: f64,
    /// `a^2 + b c`.
    pub discriminant: f64,
}

/// Unit null-vector estimate of the `N x 3` matrix with rows `(2H, K, -1)`,
/// taken as the right singular vector of the smallest singular value. The
/// sign is fixed so the largest component is positive.
pub fn lw_fit(samples: &[CurvatureSample]) -> Result<LwFit> {
    if samples.len() < 3 {
        return Err(Error::TooFewSamples(samples.len()));
    }
    let m = DMatrix::from_fn(samples.len(), 3, |i, j| match j {
        0 => 2.0 * samples[i].h,
        1 => samples[i].k,
        _ => -1.0,
    });
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().expect("right singular vectors requested");
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("three singular values");
    let mut x = [v_t[(idx, 0)], v_t[(idx, 1)], v_t[(idx, 2)]];
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    x.iter_mut().for_each(|t| *t /= norm);
    let largest = x
        .iter()
        .copied()
        .max_by(|p, q| p.abs().total_cmp(&q.abs()))
        .unwrap_or(1.0);
    if largest < 0.0 {
        x.iter_mut().for_each(|t| *t = -*t);
    }
    let residual = &m * nalgebra::Vector3::new(x[0], x[1], x[2]);
    let residual_rms = residual.norm() / (samples.len() as f64).sqrt();
    let [a, b, c] = x;
    Ok(LwFit {
        a,
        b,
        c,
        residual_rms,
        discriminant: a * a + b * c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Rect, TranslationSurface};

    fn samples(f: &str, g: &str, rect: Rect, n: usize) -> Vec<CurvatureSample> {
        let s = TranslationSurface::parse(f, g).unwrap();
        rect.grid(n)
            .into_iter()
            .map(|(u, v)| s.eval_curvatures(u, v).unwrap())
            .collect()
    }

    #[test]
    fn scherk_fits_minimal() {
        let fit = lw_fit(&samples(
            "log(abs(cos(u)))",
            "-log(abs(cos(v)))",
            Rect::square(1.4),
            9,
        ))
        .unwrap();
        assert!((fit.a.abs() - 1.0).abs() < 1e-9, "{fit:?}");
        assert!(fit.b.abs() < 1e-9 && fit.c.abs() < 1e-9);
        assert!(fit.residual_rms < 1e-9);
    }

    #[test]
    fn cylinder_fits_flat() {
        let fit = lw_fit(&samples("u^3", "2*v", Rect::square(1.0), 9)).unwrap();
        assert!((fit.b.abs() - 1.0).abs() < 1e-9, "{fit:?}");
        assert!(fit.a.abs() < 1e-9 && fit.c.abs() < 1e-9);
    }

    #[test]
    fn paraboloid_has_no_linear_relation() {
        let fit = lw_fit(&samples("u^2", "v^2", Rect::square(2.0), 5)).unwrap();
        assert!(fit.residual_rms > 1e-3, "{fit:?}");
    }

    #[test]
    fn cmc_recovers_mean_curvature() {
        let fit = lw_fit(&samples(
            "sqrt(2)*sqrt(1 - u^2)",
            "v",
            Rect::new(-0.9, 0.9, -1.0, 1.0),
            7,
        ))
        .unwrap();
        // K = 0 as well, so b is free and only 2aH = c with |H| = 1/2 is pinned
        assert!(fit.residual_rms < 1e-9);
        assert!((fit.c.abs() - fit.a.abs()).abs() < 1e-9, "{fit:?}");
    }

    #[test]
    fn too_few_samples() {
        let s = samples("u^2", "v^2", Rect::square(1.0), 2);
        assert_eq!(lw_fit(&s[..2]), Err(Error::TooFewSamples(2)));
    }

    #[test]
    fn coefficients_are_normalized() {
        let fit = lw_fit(&samples("u^3/3", "v^2/2", Rect::square(1.0), 6)).unwrap();
        let n = fit.a * fit.a + fit.b * fit.b + fit.c * fit.c;
        assert!((n - 1.0).abs() < 1e-12);
        assert!(fit.residual_rms >= 0.0);
    }
}
