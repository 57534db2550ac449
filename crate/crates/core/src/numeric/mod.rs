//! Floating-point side: expressions for arbitrary generators, curvature on
//! Monge patches, the numeric Weingarten test, linear Weingarten fits, a
//! Brioschi oracle for the second Gaussian curvature, named surfaces and
//! mesh export.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub mod brioschi;
pub mod expr;
pub mod gallery;
pub mod lwfit;
pub mod mesh;
pub mod surface;
pub mod weingarten;

pub use brioschi::{brioschi_curvature, conformal_curvature, kii_oracle, DEFAULT_ORACLE_STEP};
pub use expr::{parse_expr, Expr, Func};
pub use gallery::{gallery, ExpectedProperty, GalleryEntry, GallerySurface};
pub use lwfit::{lw_fit, LwFit};
pub use mesh::{build_mesh, Mesh};
pub use surface::{CurvatureSample, Jets, SampleMethod, TranslationSurface};
pub use weingarten::{
    numeric_weingarten_test, JacobianSample, Verdict, WeingartenReport, DEFAULT_STEP,
};

/// Closed parameter rectangle `[umin, umax] x [vmin, vmax]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub umin: f64,
    pub umax: f64,
    pub vmin: f64,
    pub vmax: f64,
}

impl Rect {
    pub fn new(umin: f64, umax: f64, vmin: f64, vmax: f64) -> Self {
        Rect {
            umin,
            umax,
            vmin,
            vmax,
        }
    }

    /// `[-r, r]^2`.
    pub fn square(r: f64) -> Self {
        Rect::new(-r, r, -r, r)
    }

    /// `n x n` equispaced points including the corners, `u` varying fastest.
    /// For `n = 1` the single point is the center.
    pub fn grid(&self, n: usize) -> Vec<(f64, f64)> {
        let coord = |lo: f64, hi: f64, k: usize| {
            if n == 1 {
                0.5 * (lo + hi)
            } else {
                lo + (hi - lo) * k as f64 / (n - 1) as f64
            }
        };
        (0..n)
            .flat_map(|j| {
                (0..n).map(move |i| {
                    (
                        coord(self.umin, self.umax, i),
                        coord(self.vmin, self.vmax, j),
                    )
                })
            })
            .collect()
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.umin, self.umax, self.vmin, self.vmax)
    }
}

impl FromStr for Rect {
    type Err = Error;

    /// Parses `umin,umax,vmin,vmax`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| Error::InvalidParameter(format!("rectangle `{s}`: {e}")))?;
        match parts[..] {
            [umin, umax, vmin, vmax]
                if umin < umax && vmin < vmax && parts.iter().all(|x| x.is_finite()) =>
            {
                Ok(Rect::new(umin, umax, vmin, vmax))
            }
            _ => Err(Error::InvalidParameter(format!(
                "rectangle `{s}` must be umin,umax,vmin,vmax with umin < umax and vmin < vmax"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_layout() {
        let g = Rect::new(0.0, 1.0, 2.0, 4.0).grid(3);
        assert_eq!(g.len(), 9);
        assert_eq!(g[0], (0.0, 2.0));
        assert_eq!(g[1], (0.5, 2.0));
        assert_eq!(g[3], (0.0, 3.0));
        assert_eq!(g[8], (1.0, 4.0));
        assert_eq!(Rect::square(1.0).grid(1), vec![(0.0, 0.0)]);
    }

    #[test]
    fn rect_parsing() {
        let r: Rect = "-1.4, 1.4, -1, 1".parse().unwrap();
        assert_eq!(r, Rect::new(-1.4, 1.4, -1.0, 1.0));
        assert_eq!(r.to_string().parse::<Rect>().unwrap(), r);
        assert!("1,0,0,1".parse::<Rect>().is_err());
        assert!("1,2,3".parse::<Rect>().is_err());
        assert!("a,b,c,d".parse::<Rect>().is_err());
    }
}
