//! Triangle meshes of `z = f(u) + g(v)` over a rectangle.

use std::io::{self, Write};

use crate::error::{Error, Result};

use super::surface::TranslationSurface;
use super::Rect;

#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    /// 0-based, counter-clockwise seen from above.
    pub triangles: Vec<[usize; 3]>,
    /// Grid vertices dropped because the height was undefined there.
    pub omitted: usize,
}

/// Samples an `n x n` grid; every cell becomes two triangles unless one of
/// its corners is singular.
pub fn build_mesh(surface: &TranslationSurface, rect: &Rect, n: usize) -> Result<Mesh> {
    if n < 2 {
        return Err(Error::InvalidParameter("a mesh needs n >= 2".into()));
    }
    let mut index = vec![None; n * n];
    let mut vertices = Vec::with_capacity(n * n);
    for (k, (u, v)) in rect.grid(n).into_iter().enumerate() {
        if let Ok(z) = surface.height(u, v) {
            index[k] = Some(vertices.len());
            vertices.push([u, v, z]);
        }
    }
    let omitted = n * n - vertices.len();
    let mut triangles = Vec::with_capacity(2 * (n - 1) * (n - 1));
    for j in 0..n - 1 {
        for i in 0..n - 1 {
            let corner = |di: usize, dj: usize| index[(j + dj) * n + i + di];
            if let (Some(a), Some(b), Some(c), Some(d)) =
                (corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1))
            {
                triangles.push([a, b, c]);
                triangles.push([a, c, d]);
            }
        }
    }
    if triangles.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "surface is undefined on the whole region {rect}"
        )));
    }
    Ok(Mesh {
        vertices,
        triangles,
        omitted,
    })
}

impl Mesh {
    pub fn write_obj<W: Write>(&self, mut out: W) -> io::Result<()> {
        for [x, y, z] in &self.vertices {
            writeln!(out, "v {x} {y} {z}")?;
        }
        for [a, b, c] in &self.triangles {
            writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1)?;
        }
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "u,v,z")?;
        for [x, y, z] in &self.vertices {
            writeln!(out, "{x},{y},{z}")?;
        }
        Ok(())
    }

    /// Unnormalized face normal.
    pub fn normal(&self, t: usize) -> [f64; 3] {
        let [a, b, c] = self.triangles[t].map(|k| self.vertices[k]);
        let e1 = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let e2 = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        [
            e1[1] * e2[2] - e1[2] * e2[1],
            e1[2] * e2[0] - e1[0] * e2[2],
            e1[0] * e2[1] - e1[1] * e2[0],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scherk_mesh_counts_and_orientation() {
        let s = TranslationSurface::parse("log(abs(cos(u)))", "-log(abs(cos(v)))").unwrap();
        let m = build_mesh(&s, &Rect::square(1.4), 11).unwrap();
        assert_eq!(m.vertices.len(), 121);
        assert_eq!(m.triangles.len(), 2 * 10 * 10);
        assert_eq!(m.omitted, 0);
        assert!((0..m.triangles.len()).all(|t| m.normal(t)[2] > 0.0));
        let mut buf = Vec::new();
        m.write_obj(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 121);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 200);
    }

    #[test]
    fn singular_vertices_are_omitted() {
        let s = TranslationSurface::parse("log(u)", "v").unwrap();
        let m = build_mesh(&s, &Rect::new(0.0, 1.0, 0.0, 1.0), 3).unwrap();
        assert_eq!(m.omitted, 3);
        assert_eq!(m.triangles.len(), 4);
        assert!(m.triangles.iter().flatten().all(|&k| k < m.vertices.len()));
    }

    #[test]
    fn empty_region_is_an_error() {
        let s = TranslationSurface::parse("log(u)", "v").unwrap();
        assert!(build_mesh(&s, &Rect::new(-2.0, -1.0, 0.0, 1.0), 4).is_err());
    }
}
