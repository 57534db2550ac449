//! Numeric Weingarten test: the Jacobian `H_u K_v - H_v K_u` of the curvature
//! fields by central differences.

use super::surface::TranslationSurface;

pub const DEFAULT_STEP: f64 = 1e-5;

#[derive(Clone, Debug, PartialEq)]
pub struct JacobianSample {
    pub point: (f64, f64),
    pub jacobian: f64,
    pub grad_h: f64,
    pub grad_k: f64,
    /// `|J| / max(|grad H| |grad K|, 1)`.
    pub score: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkippedPoint {
    pub point: (f64, f64),
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    PassesJacobian,
    Fails { max_abs: f64, argmax: (f64, f64) },
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeingartenReport {
    pub verdict: Verdict,
    pub samples: Vec<JacobianSample>,
    pub skipped: Vec<SkippedPoint>,
    pub max_abs_jacobian: f64,
    pub max_score: f64,
    pub argmax: Option<(f64, f64)>,
}

impl WeingartenReport {
    pub fn passes(&self) -> bool {
        self.verdict == Verdict::PassesJacobian
    }
}

/// Jacobian of `(H, K)` at one point, with both fields differentiated by
/// second-order central differences of step `h`.
pub fn jacobian_at(
    surface: &TranslationSurface,
    u: f64,
    v: f64,
    h: f64,
) -> crate::Result<JacobianSample> {
    let (hup, kup) = surface.mean_and_gauss(u + h, v)?;
    let (hum, kum) = surface.mean_and_gauss(u - h, v)?;
    let (hvp, kvp) = surface.mean_and_gauss(u, v + h)?;
    let (hvm, kvm) = surface.mean_and_gauss(u, v - h)?;
    let (h_u, h_v) = ((hup - hum) / (2.0 * h), (hvp - hvm) / (2.0 * h));
    let (k_u, k_v) = ((kup - kum) / (2.0 * h), (kvp - kvm) / (2.0 * h));
    let jacobian = h_u * k_v - h_v * k_u;
    let grad_h = h_u.hypot(h_v);
    let grad_k = k_u.hypot(k_v);
    Ok(JacobianSample {
        point: (u, v),
        jacobian,
        grad_h,
        grad_k,
        score: jacobian.abs() / (grad_h * grad_k).max(1.0),
    })
}

/// Passes iff every evaluable grid point has score below `tol`. Points where
/// the stencil meets a singularity are skipped and reported.
pub fn numeric_weingarten_test(
    surface: &TranslationSurface,
    grid: &[(f64, f64)],
    tol: f64,
    step: f64,
) -> WeingartenReport {
    let mut samples = Vec::with_capacity(grid.len());
    let mut skipped = Vec::new();
    for &(u, v) in grid {
        match jacobian_at(surface, u, v, step) {
            Ok(s) if s.jacobian.is_finite() => samples.push(s),
            Ok(_) => skipped.push(SkippedPoint {
                point: (u, v),
                reason: "non-finite Jacobian".into(),
            }),
            Err(e) => skipped.push(SkippedPoint {
                point: (u, v),
                reason: e.to_string(),
            }),
        }
    }
    let mut max_abs = 0.0f64;
    let mut max_score = 0.0f64;
    let mut argmax = None;
    for s in &samples {
        max_abs = max_abs.max(s.jacobian.abs());
        if argmax.is_none() || s.score > max_score {
            max_score = s.score;
            argmax = Some(s.point);
        }
    }
    let verdict = if max_score < tol {
        Verdict::PassesJacobian
    } else {
        Verdict::Fails {
            max_abs,
            argmax: argmax.unwrap_or((f64::NAN, f64::NAN)),
        }
    };
    WeingartenReport {
        verdict,
        samples,
        skipped,
        max_abs_jacobian: max_abs,
        max_score,
        argmax,
    }
}
