//! Reproducible verification runs. Each target bundles one or more numbered
//! checks; every check records the values it measured so reports can be
//! compared across runs. All randomness is driven by the caller's seed.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::classify::{
    classify_generators, classify_kii, expected_kind, lw0_symbolic, relation1_residual,
};
use crate::classify::{KiiClass, LwResult, ParaboloidParams};
use crate::corpus;
use crate::curvature::{jacobian_derived, jacobian_direct, kii_numerator, match_up_to_delta_power};
use crate::error::{Error, Result};
use crate::exactpoly::{int, rat, Poly2, Rational, Var};
use crate::numeric::gallery::{gallery, GallerySurface};
use crate::numeric::surface::sample_from_generators;
use crate::numeric::{
    kii_oracle, lw_fit, numeric_weingarten_test, parse_expr, CurvatureSample, Expr, Rect,
    TranslationSurface, DEFAULT_ORACLE_STEP, DEFAULT_STEP,
};
use crate::powerlaw::{collect_terms, rational_grid, rederive_by_substitution, scan_exponents};
use crate::powerlaw::{Condition, ConstraintResult, ScanHit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Thm1,
    Thm2,
    Thm3,
    #[serde(rename = "thmA")]
    ThmA,
    #[serde(rename = "thmC")]
    ThmC,
    Blair,
    Eq1,
    Eq6,
    Eq15,
    Eq17,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::Eq6,
        Target::Thm1,
        Target::Eq1,
        Target::ThmA,
        Target::ThmC,
        Target::Thm2,
        Target::Thm3,
        Target::Eq15,
        Target::Blair,
        Target::Eq17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Thm1 => "thm1",
            Target::Thm2 => "thm2",
            Target::Thm3 => "thm3",
            Target::ThmA => "thmA",
            Target::ThmC => "thmC",
            Target::Blair => "blair",
            Target::Eq1 => "eq1",
            Target::Eq6 => "eq6",
            Target::Eq15 => "eq15",
            Target::Eq17 => "eq17",
        }
    }

    /// Checks run for this target, as `(criterion, check)` pairs.
    fn checks(self) -> &'static [(u32, CheckFn)] {
        match self {
            Target::Eq6 => &[(1, jacobian_equivalence)],
            Target::Thm1 => &[(2, case_table), (12, cross_evaluation)],
            Target::Eq1 => &[(3, paraboloid_relation)],
            Target::ThmA => &[(4, scherk_minimal)],
            Target::ThmC => &[(5, cmc_constant)],
            Target::Thm2 => &[(6, lw_numeric), (7, lw_symbolic)],
            Target::Thm3 => &[(8, kii_vanishing), (11, kii_normalization)],
            Target::Eq15 => &[(9, kii_scan)],
            Target::Blair => &[(9, blair_numeric)],
            Target::Eq17 => &[(10, jacobian_scan)],
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown verify target `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Float(x) => write!(f, "{x:.3e}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Measurement {
    pub name: &'static str,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub criterion: u32,
    pub name: &'static str,
    pub passed: bool,
    pub measured: Vec<Measurement>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            criterion: 0,
            name,
            passed: true,
            measured: Vec::new(),
        }
    }

    fn record(&mut self, name: &'static str, value: impl Into<Value>) {
        self.measured.push(Measurement {
            name,
            value: value.into(),
        });
    }

    fn require(&mut self, ok: bool) {
        self.passed &= ok;
    }

    fn fail_with(&mut self, err: &Error) {
        self.passed = false;
        self.record("error", err.to_string());
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}:",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.name
        )?;
        for m in &self.measured {
            write!(f, " {}={}", m.name, m.value)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TargetReport {
    pub target: Target,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

type CheckFn = fn(u64) -> Check;

pub fn run_target(target: Target, seed: u64) -> TargetReport {
    let checks: Vec<Check> = target
        .checks()
        .iter()
        .map(|&(criterion, check)| Check {
            criterion,
            ..check(seed)
        })
        .collect();
    TargetReport {
        target,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

pub fn run_all(seed: u64) -> Vec<TargetReport> {
    Target::ALL
        .into_iter()
        .map(|t| run_target(t, seed))
        .collect()
}

/// All checks that belong to one numbered criterion.
pub fn run_criterion(criterion: u32, seed: u64) -> Vec<Check> {
    Target::ALL
        .into_iter()
        .flat_map(|t| t.checks().iter().copied())
        .filter(|&(c, _)| c == criterion)
        .map(|(c, check)| Check {
            criterion: c,
            ..check(seed)
        })
        .collect()
}

/// Separate random stream per check so adding a check never shifts another.
fn stream(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn jacobian_equivalence(seed: u64) -> Check {
    let mut c = Check::new("derived Jacobian is a fixed multiple of the expanded form");
    let pairs = corpus::random_pairs(stream(seed, 1), 60, 4);
    let mut global: Option<(Rational, i32, i32)> = None;
    let (mut nonzero, mut mismatches) = (0usize, 0usize);
    for gen in &pairs {
        let derived = jacobian_derived(gen);
        let direct = jacobian_direct(gen);
        if derived.is_zero() && direct.is_zero() {
            continue;
        }
        nonzero += 1;
        let found = if derived.even.is_zero() {
            match_up_to_delta_power(&derived.odd, &direct, gen.delta(), 3)
        } else {
            None
        };
        match found {
            // total Delta exponent in units of 1/2
            Some((q, s)) => {
                let doubled = 2 * (s + derived.k_min.floor() as i32) + 1;
                match &global {
                    None => global = Some((q, s, doubled)),
                    Some(g) if *g == (q.clone(), s, doubled) => {}
                    Some(_) => mismatches += 1,
                }
            }
            None => mismatches += 1,
        }
    }
    c.record("pairs", pairs.len());
    c.record("nonzero_pairs", nonzero);
    c.record("mismatches", mismatches);
    if let Some((q, s, doubled)) = &global {
        c.record("q", q.to_string());
        c.record("s", *s as i64);
        c.record("delta_exponent", format!("{doubled}/2"));
    }
    c.require(mismatches == 0 && global.is_some() && pairs.len() >= 50);
    c
}

fn case_table(seed: u64) -> Check {
    let mut c = Check::new("polynomial classification matches the case table");
    let corpus = corpus::classification_corpus(stream(seed, 2), 20);
    let mut counts = std::collections::BTreeMap::<&str, usize>::new();
    let mut mismatches = 0usize;
    for gen in &corpus {
        match classify_generators(gen) {
            Ok(report) => {
                let kind = report.classification.kind();
                *counts.entry(kind).or_default() += 1;
                if kind != expected_kind(gen) {
                    mismatches += 1;
                }
            }
            Err(e) => {
                c.fail_with(&e);
                mismatches += 1;
            }
        }
    }
    c.record("surfaces", corpus.len());
    for (kind, n) in counts {
        let name = match kind {
            "CylinderOrPlane" => "cylinder_or_plane",
            "ParaboloidOfRevolution" => "paraboloid",
            _ => "not_weingarten",
        };
        c.record(name, n);
    }
    c.record("mismatches", mismatches);
    c.require(mismatches == 0 && corpus.len() == 500);
    c
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn cross_evaluation(seed: u64) -> Check {
    let mut c = Check::new("exact and floating-point curvature agree");
    let mut rng = corpus::rng(stream(seed, 12));
    let pairs = corpus::nondegenerate_pairs(stream(seed, 1212), 10, 4);
    let mut worst = 0.0f64;
    let mut points = 0usize;
    for gen in &pairs {
        let f = Expr::from_poly(&gen.alpha().integrate(Var::U));
        let g = Expr::from_poly(&gen.beta().integrate(Var::V));
        let surface = match TranslationSurface::new(f, g) {
            Ok(s) => s,
            Err(e) => {
                c.fail_with(&e);
                continue;
            }
        };
        for _ in 0..10 {
            let (u, v) = (
                corpus::dyadic(&mut rng, 2, 4),
                corpus::dyadic(&mut rng, 2, 4),
            );
            let exact = sample_from_generators(gen, &u, &v);
            match surface.eval_curvatures(exact.point.0, exact.point.1) {
                Ok(num) => {
                    worst = worst
                        .max(relative_gap(exact.h, num.h))
                        .max(relative_gap(exact.k, num.k));
                    points += 1;
                }
                Err(e) => c.fail_with(&e),
            }
        }
    }
    c.record("points", points);
    c.record("max_relative_gap", worst);
    c.require(points == 100 && worst <= 1e-10);
    c
}

fn paraboloid_relation(seed: u64) -> Check {
    let mut c = Check::new("paraboloid relation holds exactly");
    let mut rng = corpus::rng(stream(seed, 3));
    let (mut evaluated, mut nonzero) = (0usize, 0usize);
    for _ in 0..10 {
        let a = corpus::nonzero_coefficient(&mut rng).abs();
        let params = ParaboloidParams::new(
            a,
            corpus::coefficient(&mut rng),
            corpus::coefficient(&mut rng),
        );
        for _ in 0..100 {
            let (u, v) = (corpus::coefficient(&mut rng), corpus::coefficient(&mut rng));
            match relation1_residual(&params, &u, &v) {
                Ok(r) => {
                    evaluated += 1;
                    if !r.is_zero() {
                        nonzero += 1;
                    }
                }
                Err(e) => {
                    c.fail_with(&e);
                    break;
                }
            }
        }
    }
    let unit = ParaboloidParams::new(int(1), int(0), int(0));
    let (h2, _) = unit.curvatures_squared_at(&int(1), &int(1));
    let lhs = int(8) * h2;
    let residual = relation1_residual(&unit, &int(1), &int(1)).unwrap_or_else(|_| int(1));
    c.record("points", evaluated);
    c.record("nonzero_residuals", nonzero);
    c.record("unit_lhs_at_1_1", lhs.to_string());
    c.require(evaluated == 1000 && nonzero == 0 && lhs == rat(800, 729) && residual.is_zero());
    c
}

fn entry_surface(c: &mut Check, s: GallerySurface) -> Option<(TranslationSurface, Rect)> {
    match gallery(&s).and_then(|e| Ok((e.surface()?, e.domain))) {
        Ok(x) => Some(x),
        Err(e) => {
            c.fail_with(&e);
            None
        }
    }
}

fn samples_on(
    c: &mut Check,
    surface: &TranslationSurface,
    grid: &[(f64, f64)],
) -> Vec<CurvatureSample> {
    let mut out = Vec::with_capacity(grid.len());
    for &(u, v) in grid {
        match surface.eval_curvatures(u, v) {
            Ok(s) => out.push(s),
            Err(e) => c.fail_with(&e),
        }
    }
    out
}

fn scherk_minimal(_seed: u64) -> Check {
    let mut c = Check::new("Scherk surface is minimal and passes the Jacobian test");
    let Some((s, _)) = entry_surface(&mut c, GallerySurface::Scherk { a: int(1) }) else {
        return c;
    };
    let grid = Rect::square(1.4).grid(21);
    let max_h = samples_on(&mut c, &s, &grid)
        .iter()
        .map(|x| x.h.abs())
        .fold(0.0, f64::max);
    let report = numeric_weingarten_test(&s, &grid, 1e-6, DEFAULT_STEP);
    c.record("max_abs_h", max_h);
    c.record("max_jacobian_score", report.max_score);
    c.record("skipped", report.skipped.len());
    c.require(max_h < 1e-9 && report.passes() && report.skipped.is_empty());
    c
}

fn cmc_constant(_seed: u64) -> Check {
    let mut c = Check::new("CMC surface has constant |H| = 1/2");
    let Some((s, _)) = entry_surface(
        &mut c,
        GallerySurface::Cmc {
            h0: rat(1, 2),
            a: int(1),
        },
    ) else {
        return c;
    };
    let samples = samples_on(&mut c, &s, &Rect::new(-0.9, 0.9, -1.0, 1.0).grid(21));
    let n = samples.len() as f64;
    let mean = samples.iter().map(|x| x.h.abs()).sum::<f64>() / n;
    let var = samples
        .iter()
        .map(|x| (x.h.abs() - mean).powi(2))
        .sum::<f64>()
        / n;
    c.record("samples", samples.len());
    c.record("mean_abs_h", mean);
    c.record("std_abs_h", var.sqrt());
    c.require(samples.len() == 441 && (mean - 0.5).abs() < 1e-6 && var.sqrt() < 1e-7);
    c
}

fn lw_numeric(_seed: u64) -> Check {
    let mut c = Check::new("linear Weingarten fits");
    let cases: [(&str, GallerySurface, Rect); 3] = [
        (
            "scherk",
            GallerySurface::Scherk { a: int(1) },
            Rect::square(1.4),
        ),
        (
            "cylinder",
            GallerySurface::Cylinder {
                profile: parse_expr("u^3").expect("literal"),
            },
            Rect::square(1.0),
        ),
        (
            "paraboloid",
            GallerySurface::Paraboloid {
                a: int(1),
                u0: int(0),
                v0: int(0),
            },
            Rect::square(2.0),
        ),
    ];
    for (name, surface, rect) in cases {
        let Some((s, _)) = entry_surface(&mut c, surface) else {
            continue;
        };
        let samples = samples_on(&mut c, &s, &rect.grid(21));
        let fit = match lw_fit(&samples) {
            Ok(f) => f,
            Err(e) => {
                c.fail_with(&e);
                continue;
            }
        };
        match name {
            "scherk" => {
                c.record(
                    "scherk_abc",
                    format!("({:.3e}, {:.3e}, {:.3e})", fit.a, fit.b, fit.c),
                );
                c.require(
                    fit.b.abs() < 1e-6 && fit.c.abs() < 1e-6 && (fit.a.abs() - 1.0).abs() < 1e-6,
                );
            }
            "cylinder" => {
                c.record(
                    "cylinder_abc",
                    format!("({:.3e}, {:.3e}, {:.3e})", fit.a, fit.b, fit.c),
                );
                c.require(
                    fit.a.abs() < 1e-6 && fit.c.abs() < 1e-6 && (fit.b.abs() - 1.0).abs() < 1e-6,
                );
            }
            _ => {
                c.record("paraboloid_residual_rms", fit.residual_rms);
                c.require(fit.residual_rms > 1e-3);
            }
        }
    }
    c
}

fn lw_symbolic(seed: u64) -> Check {
    let mut c = Check::new("homogeneous linear Weingarten relation, exact");
    let mut wrong = 0usize;
    let corpus = corpus::random_pairs(stream(seed, 7), 100, 4);
    for gen in &corpus {
        let flat = lw0_symbolic(gen) == LwResult::FlatFamily;
        if flat != gen.is_degenerate() {
            wrong += 1;
        }
    }
    let mut related = 0usize;
    let pairs = corpus::nondegenerate_pairs(stream(seed, 77), 50, 4);
    for gen in &pairs {
        if lw0_symbolic(gen) != LwResult::NoRelation {
            related += 1;
        }
    }
    c.record("mixed_pairs", corpus.len());
    c.record("flat_family_mismatches", wrong);
    c.record("nondegenerate_pairs", pairs.len());
    c.record("nondegenerate_with_relation", related);
    c.require(wrong == 0 && related == 0);
    c
}

fn kii_vanishing(seed: u64) -> Check {
    let mut c = Check::new("second Gaussian curvature vanishes exactly on cylinders");
    let corpus = corpus::classification_corpus(stream(seed, 2), 20);
    let mut wrong = 0usize;
    let mut vanishing = 0usize;
    for gen in &corpus {
        let vanishes = classify_kii(gen) == KiiClass::VanishesIdentically;
        vanishing += vanishes as usize;
        if vanishes != gen.is_degenerate() {
            wrong += 1;
        }
    }
    let unit = kii_numerator(&ParaboloidParams::new(int(1), int(0), int(0)).generators());
    c.record("surfaces", corpus.len());
    c.record("vanishing", vanishing);
    c.record("mismatches", wrong);
    c.record("unit_paraboloid_numerator", unit.to_string());
    c.require(wrong == 0 && unit == Poly2::constant(int(32)));
    c
}

fn kii_normalization(seed: u64) -> Check {
    let mut c = Check::new("closed-form over oracle is constant on paraboloids");
    let mut rng = corpus::rng(stream(seed, 11));
    let mut family = vec![ParaboloidParams::new(int(1), int(0), int(0))];
    for _ in 0..2 {
        family.push(ParaboloidParams::new(
            corpus::nonzero_coefficient(&mut rng).abs(),
            corpus::coefficient(&mut rng),
            corpus::coefficient(&mut rng),
        ));
    }
    let mut worst = 0.0f64;
    let mut constants = Vec::new();
    let mut points = 0usize;
    for p in &family {
        let f = Expr::from_poly(&p.generators().alpha().integrate(Var::U));
        let g = Expr::from_poly(&p.generators().beta().integrate(Var::V));
        let s = TranslationSurface::new(f, g).expect("separated generators");
        let (cu, cv) = (p.u0.to_f64().unwrap_or(0.0), p.v0.to_f64().unwrap_or(0.0));
        let mut ratios = Vec::new();
        for (u, v) in Rect::new(cu - 1.0, cu + 1.0, cv - 1.0, cv + 1.0).grid(5) {
            let closed = s.eval_curvatures(u, v).ok().and_then(|x| x.k_ii);
            let oracle = kii_oracle(&s, u, v, DEFAULT_ORACLE_STEP).ok().flatten();
            match (closed, oracle) {
                (Some(a), Some(b)) if b != 0.0 => ratios.push(a / b),
                _ => c.require(false),
            }
        }
        points += ratios.len();
        let first = ratios.first().copied().unwrap_or(f64::NAN);
        worst = ratios
            .iter()
            .map(|r| relative_gap(*r, first))
            .fold(worst, f64::max);
        constants.push(format!("a={}: {first:.6}", p.a));
    }
    c.record("points_per_surface", points / family.len());
    c.record("max_relative_spread", worst);
    c.record("ratios", constants.join(", "));
    c.require(points / family.len() >= 20 && worst < 1e-4);
    c
}

fn describe_hits(hits: &[ScanHit]) -> String {
    hits.iter()
        .filter(|h| !(h.p.is_zero() || h.q.is_zero()))
        .map(|h| format!("({}, {}): {}", h.p, h.q, h.result))
        .collect::<Vec<_>>()
        .join("; ")
}

fn scan_check(c: &mut Check, condition: Condition, extra: (Rational, Rational, ConstraintResult)) {
    let grid = rational_grid(3, -3, 6);
    let hits = scan_exponents(condition, &grid, &grid);
    let mut expected: Vec<ScanHit> = grid
        .iter()
        .flat_map(|p| grid.iter().map(move |q| (p, q)))
        .filter(|(p, q)| p.is_zero() || q.is_zero())
        .map(|(p, q)| ScanHit {
            p: p.clone(),
            q: q.clone(),
            result: ConstraintResult::AnyAB,
        })
        .collect();
    expected.push(ScanHit {
        p: extra.0,
        q: extra.1,
        result: extra.2,
    });
    expected.sort_by(|x, y| (&x.p, &x.q).cmp(&(&y.p, &y.q)));
    let disagreements = grid
        .iter()
        .flat_map(|p| grid.iter().map(move |q| (p, q)))
        .filter(|(p, q)| {
            collect_terms(condition, p, q).canonical()
                != rederive_by_substitution(condition, p, q).canonical()
        })
        .count();
    c.record("grid_points", grid.len() * grid.len());
    c.record("hits", hits.len());
    c.record("off_axis", describe_hits(&hits));
    c.record("closed_form_vs_substitution_disagreements", disagreements);
    c.require(hits == expected && disagreements == 0);
}

fn kii_scan(_seed: u64) -> Check {
    let mut c = Check::new("second Gaussian curvature exponent scan");
    scan_check(
        &mut c,
        Condition::SecondGaussian,
        (rat(1, 3), rat(1, 3), ConstraintResult::RequiresOpposite),
    );
    c
}

fn jacobian_scan(_seed: u64) -> Check {
    let mut c = Check::new("Jacobian exponent scan");
    scan_check(
        &mut c,
        Condition::Jacobian,
        (int(1), int(1), ConstraintResult::RequiresEqual),
    );
    c
}

fn blair_numeric(_seed: u64) -> Check {
    let mut c = Check::new("Blair surface has vanishing second Gaussian curvature");
    let Some((s, rect)) = entry_surface(&mut c, GallerySurface::Blair { c: int(1) }) else {
        return c;
    };
    let (mut max_closed, mut max_oracle) = (0.0f64, 0.0f64);
    let mut points = 0usize;
    for (u, v) in rect.grid(21) {
        let closed = s.eval_curvatures(u, v).ok().and_then(|x| x.k_ii);
        let oracle = kii_oracle(&s, u, v, DEFAULT_ORACLE_STEP).ok().flatten();
        match (closed, oracle) {
            (Some(a), Some(b)) => {
                max_closed = max_closed.max(a.abs());
                max_oracle = max_oracle.max(b.abs());
                points += 1;
            }
            _ => c.require(false),
        }
    }
    c.record("points", points);
    c.record("max_abs_closed_form", max_closed);
    c.record("max_abs_oracle", max_oracle);
    c.require(points == 441 && max_closed < 1e-6 && max_oracle < 1e-6);
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert_eq!("THMA".parse::<Target>().unwrap(), Target::ThmA);
        assert!("thm9".parse::<Target>().is_err());
    }

    #[test]
    fn every_criterion_has_a_check() {
        for n in 1..=12 {
            assert!(
                Target::ALL
                    .iter()
                    .any(|t| t.checks().iter().any(|&(c, _)| c == n)),
                "criterion {n}"
            );
        }
    }

    #[test]
    fn fast_targets_pass() {
        for t in [Target::Eq1, Target::ThmA, Target::ThmC, Target::Blair] {
            let r = run_target(t, 0);
            assert!(r.passed, "{:#?}", r);
        }
    }
}
