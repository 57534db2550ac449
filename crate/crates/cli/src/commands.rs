use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use twsurf_core::classify::{
    classify_generators, lw0_symbolic, relation1_residual, Classification,
};
use twsurf_core::numeric::gallery::{from_name, gallery, ExpectedProperty};
use twsurf_core::numeric::{
    build_mesh, kii_oracle, lw_fit, numeric_weingarten_test, parse_expr, Expr, Rect,
    TranslationSurface, Verdict, DEFAULT_ORACLE_STEP,
};
use twsurf_core::powerlaw::{rational_grid, scan_exponents, Condition};
use twsurf_core::verify::{run_all, run_target, Target, TargetReport};
use twsurf_core::{int, PolyGenerators, Rational};

use crate::{GridArgs, MeshFormat, ScanCondition, SurfaceArgs};

pub struct Outcome {
    pub text: String,
    pub report: Value,
    pub success: bool,
}

impl Outcome {
    fn ok(text: String, report: Value) -> Self {
        Outcome {
            text,
            report,
            success: true,
        }
    }
}

const JACOBIAN_TERMS_SHOWN: usize = 8;

/// Rational from a literal such as `3`, `-1/2` or `0.25`.
fn parse_rational(text: &str) -> Result<Rational> {
    match parse_expr(text)? {
        Expr::Const(c) => Ok(c),
        _ => bail!("`{text}` is not a rational number"),
    }
}

fn parse_point(text: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = text.split(',').collect();
    let [u, v] = parts[..] else {
        bail!("point `{text}` must be u,v");
    };
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .with_context(|| format!("point `{text}`"))
    };
    Ok((num(u)?, num(v)?))
}

struct ResolvedSurface {
    surface: TranslationSurface,
    domain: Rect,
    expected: Option<ExpectedProperty>,
    inputs: Value,
}

fn resolve(args: &SurfaceArgs) -> Result<ResolvedSurface> {
    if let Some(name) = &args.surface {
        let params = match &args.params {
            Some(list) => list
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        let profile = args.f.as_deref().map(parse_expr).transpose()?;
        if profile.is_some() && name != "cylinder" {
            bail!("--f only sets the profile of --surface cylinder");
        }
        let entry = gallery(&from_name(name, &params, profile.as_ref())?)?;
        let inputs = json!({
            "surface": name,
            "params": params.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "f": entry.f.to_string(),
            "g": entry.g.to_string(),
        });
        return Ok(ResolvedSurface {
            surface: entry.surface()?,
            domain: entry.domain,
            expected: Some(entry.expected),
            inputs,
        });
    }
    let (Some(f), Some(g)) = (&args.f, &args.g) else {
        bail!("give both --f and --g, or --surface NAME");
    };
    let surface = TranslationSurface::parse(f, g)?;
    Ok(ResolvedSurface {
        inputs: json!({ "f": surface.f().to_string(), "g": surface.g().to_string() }),
        surface,
        domain: Rect::square(1.0),
        expected: None,
    })
}

fn grid_rect(grid: &GridArgs, resolved: &ResolvedSurface) -> Rect {
    grid.rect.unwrap_or(resolved.domain)
}

fn truncated_terms(p: &twsurf_core::Poly2) -> (String, usize) {
    let text = p.to_string();
    let count = p.len();
    if count <= JACOBIAN_TERMS_SHOWN {
        return (text, count);
    }
    // cut after the first JACOBIAN_TERMS_SHOWN top-level terms
    let mut seen = 0;
    let mut cut = text.len();
    for (i, _) in text.match_indices([' ']) {
        let next = &text[i + 1..];
        if next.starts_with("+ ") || next.starts_with("- ") {
            seen += 1;
            if seen == JACOBIAN_TERMS_SHOWN {
                cut = i;
                break;
            }
        }
    }
    (
        format!(
            "{} ... ({} more terms)",
            &text[..cut],
            count - JACOBIAN_TERMS_SHOWN
        ),
        count,
    )
}

pub fn classify(f: &str, g: &str) -> Result<Outcome> {
    let poly = |name: &str, text: &str| -> Result<twsurf_core::Poly2> {
        parse_expr(text)?.to_poly().ok_or_else(|| {
            anyhow!(
                "{name} = `{text}` is not a polynomial with rational coefficients; exact classification \
                 needs polynomial generators. Use `twsurf weingarten` for a numeric test on other surfaces."
            )
        })
    };
    let gen = PolyGenerators::from_primitives(&poly("f", f)?, &poly("g", g)?)?;
    let report = classify_generators(&gen)?;
    let (shown, terms) = truncated_terms(&report.jacobian);
    let mut text = String::new();
    writeln!(text, "f' = {}", gen.alpha())?;
    writeln!(text, "g' = {}", gen.beta())?;
    writeln!(
        text,
        "degrees: ({}, {})",
        report.degrees.0, report.degrees.1
    )?;
    writeln!(text, "classification: {}", report.classification.kind())?;
    writeln!(text, "jacobian ({terms} terms): {shown}")?;
    let mut result = json!({
        "classification": report.classification.kind(),
        "weingarten": report.classification.is_weingarten(),
        "degrees": [report.degrees.0, report.degrees.1],
        "jacobian": { "terms": terms, "display": shown },
        "linear_weingarten_homogeneous": format!("{:?}", lw0_symbolic(&gen)),
    });
    match &report.classification {
        Classification::ParaboloidOfRevolution(p) => {
            let points = [(0, 0), (1, 1), (2, -1), (-3, 5)]
                .map(|(du, dv)| (&p.u0 + int(du), &p.v0 + int(dv)));
            let residuals = points
                .iter()
                .map(|(u, v)| relation1_residual(p, u, v).map(|r| r.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let all_zero = residuals.iter().all(|r| r == "0");
            writeln!(
                text,
                "paraboloid: a = {}, u0 = {}, v0 = {}",
                p.a, p.u0, p.v0
            )?;
            if p.orientation_flipped {
                writeln!(text, "orientation: reflected to open upward")?;
            }
            writeln!(
                text,
                "relation 8aH^2 = sqrt(K)(2a + sqrt(K))^2: exact residuals {} at {} points",
                if all_zero { "0" } else { "NONZERO" },
                points.len()
            )?;
            result["paraboloid"] = json!({
                "a": p.a.to_string(),
                "u0": p.u0.to_string(),
                "v0": p.v0.to_string(),
                "orientation_flipped": p.orientation_flipped,
                "relation_residuals": residuals,
            });
        }
        Classification::NotWeingarten(w) => {
            writeln!(text, "witness: {w}")?;
            result["witness"] = json!({
                "leading_term": twsurf_core::Poly2::monomial(w.coefficient.clone(), w.exponents.0, w.exponents.1).to_string(),
                "point": [w.point.0.to_string(), w.point.1.to_string()],
                "value": w.value.to_string(),
            });
        }
        Classification::CylinderOrPlane => {}
    }
    Ok(Outcome::ok(
        text,
        json!({ "command": "classify", "inputs": { "f": f, "g": g }, "result": result }),
    ))
}

pub fn weingarten(
    args: &SurfaceArgs,
    grid: &GridArgs,
    tol: f64,
    step: f64,
    out: Option<&Path>,
) -> Result<Outcome> {
    let resolved = resolve(args)?;
    let rect = grid_rect(grid, &resolved);
    let points = rect.grid(grid.n);
    let report = numeric_weingarten_test(&resolved.surface, &points, tol, step);
    if let Some(path) = out {
        let mut w = BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        );
        writeln!(w, "u,v,jacobian,score,status")?;
        for s in &report.samples {
            writeln!(
                w,
                "{},{},{:e},{:e},ok",
                s.point.0, s.point.1, s.jacobian, s.score
            )?;
        }
        for s in &report.skipped {
            writeln!(w, "{},{},,,skipped", s.point.0, s.point.1)?;
        }
        w.flush()?;
    }
    let verdict = match report.verdict {
        Verdict::PassesJacobian => "PassesJacobian",
        Verdict::Fails { .. } => "Fails",
    };
    let mut text = String::new();
    writeln!(text, "f = {}", resolved.surface.f())?;
    writeln!(text, "g = {}", resolved.surface.g())?;
    writeln!(text, "grid: {n}x{n} on {rect}", n = grid.n)?;
    writeln!(text, "verdict: {verdict}")?;
    writeln!(text, "max |J|: {:.6e}", report.max_abs_jacobian)?;
    writeln!(text, "max score: {:.6e} (tol {tol:e})", report.max_score)?;
    if let Some((u, v)) = report.argmax {
        writeln!(text, "argmax: ({u}, {v})")?;
    }
    writeln!(text, "skipped points: {}", report.skipped.len())?;
    for s in report.skipped.iter().take(5) {
        writeln!(
            text,
            "  warning: skipped ({}, {}): {}",
            s.point.0, s.point.1, s.reason
        )?;
    }
    let result = json!({
        "verdict": verdict,
        "max_abs_jacobian": report.max_abs_jacobian,
        "max_score": report.max_score,
        "argmax": report.argmax.map(|(u, v)| [u, v]),
        "evaluated": report.samples.len(),
        "skipped": report.skipped.iter().map(|s| json!({ "u": s.point.0, "v": s.point.1, "reason": s.reason })).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(
        text,
        json!({
            "command": "weingarten",
            "inputs": { "surface": resolved.inputs, "rect": rect.to_string(), "n": grid.n, "tol": tol, "step": step },
            "result": result,
        }),
    ))
}

fn optional(x: Option<f64>) -> Value {
    x.map_or(Value::Null, Value::from)
}

pub fn curvature(args: &SurfaceArgs, at: &str) -> Result<Outcome> {
    let resolved = resolve(args)?;
    let (u, v) = parse_point(at)?;
    let s = resolved.surface.eval_curvatures(u, v)?;
    let oracle = kii_oracle(&resolved.surface, u, v, DEFAULT_ORACLE_STEP).unwrap_or(None);
    let show = |x: Option<f64>| {
        x.map_or(
            "undefined (degenerate second fundamental form)".to_string(),
            |k| format!("{k:.12e}"),
        )
    };
    let mut text = String::new();
    writeln!(text, "point: ({u}, {v})")?;
    writeln!(text, "H = {:.12e}", s.h)?;
    writeln!(text, "K = {:.12e}", s.k)?;
    writeln!(text, "Delta = {:.12e}", s.delta)?;
    writeln!(text, "K_II (closed form) = {}", show(s.k_ii))?;
    writeln!(text, "K_II (Brioschi oracle) = {}", show(oracle))?;
    if let Some(e) = &resolved.expected {
        writeln!(text, "expected property: {e}")?;
    }
    Ok(Outcome::ok(
        text,
        json!({
            "command": "curvature",
            "inputs": { "surface": resolved.inputs, "point": [u, v] },
            "result": {
                "h": s.h,
                "k": s.k,
                "delta": s.delta,
                "k_ii": optional(s.k_ii),
                "k_ii_oracle": optional(oracle),
                "method": format!("{:?}", s.method),
                "expected": resolved.expected.as_ref().map(ToString::to_string),
            },
        }),
    ))
}

fn target_json(r: &TargetReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

pub fn verify(target: &str, seed: u64) -> Result<Outcome> {
    let reports = if target.eq_ignore_ascii_case("all") {
        run_all(seed)
    } else {
        vec![run_target(target.parse::<Target>()?, seed)]
    };
    let mut text = String::new();
    writeln!(text, "seed: {seed}")?;
    for r in &reports {
        for c in &r.checks {
            writeln!(text, "{:<6} {c}", r.target.name())?;
        }
    }
    let success = reports.iter().all(|r| r.passed);
    writeln!(text, "overall: {}", if success { "PASS" } else { "FAIL" })?;
    Ok(Outcome {
        text,
        report: json!({
            "command": "verify",
            "inputs": { "target": target, "seed": seed },
            "result": { "passed": success, "targets": reports.iter().map(target_json).collect::<Vec<_>>() },
        }),
        success,
    })
}

pub fn mesh(
    args: &SurfaceArgs,
    grid: &GridArgs,
    format: MeshFormat,
    out: &Path,
) -> Result<Outcome> {
    let resolved = resolve(args)?;
    let rect = grid_rect(grid, &resolved);
    let mesh = build_mesh(&resolved.surface, &rect, grid.n)?;
    let mut w =
        BufWriter::new(File::create(out).with_context(|| format!("creating {}", out.display()))?);
    match format {
        MeshFormat::Obj => mesh.write_obj(&mut w)?,
        MeshFormat::Csv => mesh.write_csv(&mut w)?,
    }
    w.flush()?;
    let format_name = match format {
        MeshFormat::Obj => "obj",
        MeshFormat::Csv => "csv",
    };
    let mut text = String::new();
    writeln!(text, "wrote {} ({format_name})", out.display())?;
    writeln!(text, "vertices: {}", mesh.vertices.len())?;
    writeln!(text, "triangles: {}", mesh.triangles.len())?;
    writeln!(text, "omitted singular vertices: {}", mesh.omitted)?;
    Ok(Outcome::ok(
        text,
        json!({
            "command": "mesh",
            "inputs": { "surface": resolved.inputs, "rect": rect.to_string(), "n": grid.n, "format": format_name },
            "result": {
                "vertices": mesh.vertices.len(),
                "triangles": mesh.triangles.len(),
                "omitted_vertices": mesh.omitted,
            },
        }),
    ))
}

pub fn lwfit(args: &SurfaceArgs, grid: &GridArgs) -> Result<Outcome> {
    let resolved = resolve(args)?;
    let rect = grid_rect(grid, &resolved);
    let mut samples = Vec::new();
    let mut skipped = 0usize;
    for (u, v) in rect.grid(grid.n) {
        match resolved.surface.eval_curvatures(u, v) {
            Ok(s) => samples.push(s),
            Err(_) => skipped += 1,
        }
    }
    let fit = lw_fit(&samples)?;
    let kind = if fit.discriminant.abs() < 1e-9 {
        "parabolic"
    } else if fit.discriminant > 0.0 {
        "elliptic"
    } else {
        "hyperbolic"
    };
    let mut text = String::new();
    writeln!(
        text,
        "fit 2aH + bK = c over {} samples ({skipped} skipped)",
        samples.len()
    )?;
    writeln!(text, "a = {:.9e}", fit.a)?;
    writeln!(text, "b = {:.9e}", fit.b)?;
    writeln!(text, "c = {:.9e}", fit.c)?;
    writeln!(text, "residual rms = {:.3e}", fit.residual_rms)?;
    writeln!(
        text,
        "discriminant a^2 + bc = {:.6e} ({kind})",
        fit.discriminant
    )?;
    Ok(Outcome::ok(
        text,
        json!({
            "command": "lwfit",
            "inputs": { "surface": resolved.inputs, "rect": rect.to_string(), "n": grid.n },
            "result": {
                "a": fit.a, "b": fit.b, "c": fit.c,
                "residual_rms": fit.residual_rms,
                "discriminant": fit.discriminant,
                "type": kind,
                "samples": samples.len(),
                "skipped": skipped,
            },
        }),
    ))
}

pub fn scan(condition: ScanCondition, den: i64, lo: i64, hi: i64) -> Result<Outcome> {
    if den <= 0 || lo > hi {
        bail!("scan needs den > 0 and lo <= hi");
    }
    let (cond, name) = match condition {
        ScanCondition::Jacobian => (Condition::Jacobian, "jacobian"),
        ScanCondition::SecondGaussian => (Condition::SecondGaussian, "second-gaussian"),
    };
    let grid = rational_grid(den, lo, hi);
    let hits = scan_exponents(cond, &grid, &grid);
    let mut text = String::new();
    writeln!(
        text,
        "condition: {name}; p, q in {{k/{den} : k = {lo}..{hi}}}"
    )?;
    writeln!(
        text,
        "{} of {} exponent pairs admit nonzero a, b:",
        hits.len(),
        grid.len() * grid.len()
    )?;
    for h in &hits {
        writeln!(text, "  p = {}, q = {}: {}", h.p, h.q, h.result)?;
    }
    Ok(Outcome::ok(
        text,
        json!({
            "command": "scan",
            "inputs": { "condition": name, "den": den, "lo": lo, "hi": hi },
            "result": {
                "hits": hits.iter().map(|h| json!({ "p": h.p.to_string(), "q": h.q.to_string(), "solution": h.result.to_string() })).collect::<Vec<_>>(),
            },
        }),
    ))
}
