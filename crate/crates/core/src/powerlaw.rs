//! Exponent-lattice analysis for power-law generators `alpha = a u^p`,
//! `beta = b v^q` with rational `p`, `q`, on the open quadrant `u, v > 0`.
//!
//! Substituting such generators into the Jacobian condition or the second
//! Gaussian curvature numerator yields a finite sum of terms
//! `c(a, b) * u^e_u * v^e_v`. Which exponent pairs collide decides which
//! `(p, q)` admit a solution, and the summed coefficients decide the
//! constraint on `(a, b)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::curvature::{evaluate_formula, JACOBIAN_TERMS, KII_TERMS};
use crate::exactpoly::{int, Poly2, Rational, Ring, Var};

/// Which vanishing condition to analyse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The Weingarten (Jacobian) condition.
    Jacobian,
    /// Vanishing second Gaussian curvature.
    SecondGaussian,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Jacobian => "jacobian",
            Condition::SecondGaussian => "second_gaussian",
        })
    }
}

/// Exponent pair `(e_u, e_v)` of `u^e_u v^e_v`.
pub type RationalExponents = (Rational, Rational);

/// Sum of terms `c(a, b) * u^e_u v^e_v`; the coefficient is a [`Poly2`]
/// whose first variable plays the role of `a` and second of `b`.
///
/// Tables built by [`collect_terms`] keep one entry per exponent pair that
/// occurs in the formula, even when the colliding contributions cancel.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TermTable {
    entries: BTreeMap<RationalExponents, Poly2>,
}

impl TermTable {
    pub fn new() -> Self {
        TermTable::default()
    }

    /// `c * u^e_u v^e_v`.
    pub fn monomial(coefficient: Poly2, e_u: Rational, e_v: Rational) -> Self {
        let mut t = TermTable::new();
        t.accumulate((e_u, e_v), &coefficient);
        t
    }

    fn accumulate(&mut self, key: RationalExponents, c: &Poly2) {
        *self.entries.entry(key).or_default() += c;
    }

    /// Number of distinct exponent pairs, including cancelled ones.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&RationalExponents, &Poly2)> {
        self.entries.iter()
    }

    pub fn coefficient(&self, e_u: &Rational, e_v: &Rational) -> Option<&Poly2> {
        self.entries.get(&(e_u.clone(), e_v.clone()))
    }

    /// Drops cancelled entries.
    pub fn canonical(&self) -> TermTable {
        TermTable {
            entries: self
                .entries
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// True iff every summed coefficient vanishes for all `a, b`.
    pub fn vanishes_identically(&self) -> bool {
        self.entries.values().all(Poly2::is_zero)
    }

    /// Multiplies every term by `u^du v^dv`.
    pub fn shift(&self, du: &Rational, dv: &Rational) -> TermTable {
        TermTable {
            entries: self
                .entries
                .iter()
                .map(|((eu, ev), c)| ((eu + du, ev + dv), c.clone()))
                .collect(),
        }
    }

    /// Value of the condition at a point of the open quadrant for given `a, b`.
    pub fn eval_f64(&self, a: f64, b: f64, u: f64, v: f64) -> f64 {
        self.entries
            .iter()
            .map(|((eu, ev), c)| {
                c.eval_f64(a, b) * u.powf(rational_f64(eu)) * v.powf(rational_f64(ev))
            })
            .sum()
    }
}

fn rational_f64(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

impl Ring for TermTable {
    fn zero() -> Self {
        TermTable::new()
    }

    fn one() -> Self {
        TermTable::monomial(Poly2::one(), Rational::zero(), Rational::zero())
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.accumulate(k.clone(), c);
        }
        out.canonical()
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = TermTable::new();
        for ((eu1, ev1), c1) in &self.entries {
            for ((eu2, ev2), c2) in &other.entries {
                out.accumulate((eu1 + eu2, ev1 + ev2), &(c1 * c2));
            }
        }
        out.canonical()
    }

    fn scaled(&self, k: i64) -> Self {
        TermTable {
            entries: self
                .entries
                .iter()
                .map(|(e, c)| (e.clone(), c.scale(&int(k))))
                .collect(),
        }
        .canonical()
    }
}

/// Coefficient `scalar * a^i * b^j` as a polynomial in `(a, b)`.
fn ab(scalar: Rational, i: u32, j: u32) -> Poly2 {
    Poly2::monomial(scalar, i, j)
}

/// Places each closed-form term of the chosen condition at its exact
/// exponent pair, summing collisions.
///
/// The second Gaussian curvature table is scaled by `p q a b` relative to its
/// reduced closed form, so that degenerate generators (`p = 0` or `q = 0`)
/// give a vanishing table as they do for the unreduced numerator; the omitted
/// factor `u^(p-2) v^(q-2)` never vanishes on the open quadrant.
pub fn collect_terms(condition: Condition, p: &Rational, q: &Rational) -> TermTable {
    let one = Rational::one;
    let n = |k: i64| int(k);
    let mut table = TermTable::new();
    let mut put = |c: Poly2, eu: Rational, ev: Rational| table.accumulate((eu, ev), &c);
    match condition {
        Condition::Jacobian => {
            let pq = p * q;
            let (p2, q2) = (p * p, q * q);
            let c = |s: Rational| &pq * s;
            put(ab(c(-q + &q2 + &pq - &pq * q), 1, 2), p + one(), n(2) * q);
            put(
                ab(c(n(-2) * q - &pq + n(2) * &q2 + &pq * q), 3, 2),
                n(3) * p + one(),
                n(2) * q,
            );
            put(
                ab(c(-q - n(2) * &pq + &q2 + n(2) * &pq * q), 5, 2),
                n(5) * p + one(),
                n(2) * q,
            );
            put(
                ab(c(-q + &pq - n(2) * &q2 + n(2) * &pq * q), 1, 4),
                p + one(),
                n(4) * q,
            );
            put(
                ab(c(-q - &pq - n(2) * &q2 - n(4) * &pq * q), 3, 4),
                n(3) * p + one(),
                n(4) * q,
            );
            put(ab(c(p - &p2 - &pq + &p2 * q), 2, 1), n(2) * p, q + one());
            put(
                ab(c(n(2) * p - n(2) * &p2 + &pq - &p2 * q), 2, 3),
                n(2) * p,
                n(3) * q + one(),
            );
            put(
                ab(c(p - &p2 + n(2) * &pq - n(2) * &p2 * q), 2, 5),
                n(2) * p,
                n(5) * q + one(),
            );
            put(
                ab(c(p + n(2) * &p2 - &pq - n(2) * &p2 * q), 4, 1),
                n(4) * p,
                q + one(),
            );
            put(
                ab(c(p + n(2) * &p2 + &pq + n(4) * &p2 * q), 4, 3),
                n(4) * p,
                n(3) * q + one(),
            );
        }
        Condition::SecondGaussian => {
            let pq = p * q;
            // Each reduced term carries one extra factor of a and b.
            let c = |s: Rational, i: u32, j: u32| ab(&pq * s, i + 1, j + 1);
            put(c(n(3) * p - one(), 1, 0), p.clone(), one());
            put(c(n(3) * q - one(), 2, 1), n(2) * p + one(), q.clone());
            put(c(-p - one(), 3, 0), n(3) * p, one());
            put(c(n(3) * q - one(), 0, 1), one(), q.clone());
            put(c(n(3) * p - one(), 1, 2), p.clone(), n(2) * q + one());
            put(c(-q - one(), 0, 3), one(), n(3) * q);
        }
    }
    table
}

/// Independent route to the same table: substitute `a u^p`, `b v^q` and their
/// formal power-rule derivatives into the jet formulas and collect.
///
/// The Jacobian expansion is multiplied by `u^3 v^3` and the second Gaussian
/// numerator by `u^(2-p) v^(2-q)` to line up with [`collect_terms`].
pub fn rederive_by_substitution(condition: Condition, p: &Rational, q: &Rational) -> TermTable {
    let power = |coeff: Poly2, e: Rational, var: Var| match var {
        Var::U => TermTable::monomial(coeff, e, Rational::zero()),
        Var::V => TermTable::monomial(coeff, Rational::zero(), e),
    };
    let jet = |exp: &Rational, var: Var| {
        let coeff = match var {
            Var::U => Poly2::u(),
            Var::V => Poly2::v(),
        };
        let d1 = coeff.scale(exp);
        let d2 = d1.scale(&(exp - Rational::one()));
        [
            power(coeff, exp.clone(), var),
            power(d1, exp - int(1), var),
            power(d2, exp - int(2), var),
        ]
    };
    let [alpha, alpha1, alpha2] = jet(p, Var::U);
    let [beta, beta1, beta2] = jet(q, Var::V);
    let jets = [alpha, beta, alpha1, beta1, alpha2, beta2];
    match condition {
        Condition::Jacobian => evaluate_formula(&JACOBIAN_TERMS, &jets).shift(&int(3), &int(3)),
        Condition::SecondGaussian => {
            evaluate_formula(&KII_TERMS, &jets).shift(&(int(2) - p), &(int(2) - q))
        }
    }
}

/// Real solutions `(a, b)` with `a, b != 0` of all coefficient equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintResult {
    /// Every coefficient vanishes identically.
    AnyAB,
    /// Satisfied exactly when `a = b`.
    RequiresEqual,
    /// Satisfied exactly when `a = -b`.
    RequiresOpposite,
    /// No nonzero `a, b` works.
    OnlyTrivial,
    /// Coefficient equations outside the monomial/binomial shapes handled here.
    Unsolved(Vec<Poly2>),
}

impl fmt::Display for ConstraintResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintResult::AnyAB => f.write_str("any a, b"),
            ConstraintResult::RequiresEqual => f.write_str("a = b"),
            ConstraintResult::RequiresOpposite => f.write_str("a = -b"),
            ConstraintResult::OnlyTrivial => f.write_str("no nonzero a, b"),
            ConstraintResult::Unsolved(rs) => {
                write!(f, "unsolved:")?;
                for r in rs {
                    write!(f, " [{}]", display_ab(r))?;
                }
                Ok(())
            }
        }
    }
}

/// Writes a coefficient polynomial in terms of `a` and `b`.
pub fn display_ab(c: &Poly2) -> String {
    c.to_string().replace('u', "a").replace('v', "b")
}

/// Divides out the largest monomial `a^i b^j` (nonzero by assumption).
fn strip_monomial(c: &Poly2) -> Poly2 {
    let (imin, jmin) = c.terms().fold((u32::MAX, u32::MAX), |(a, b), ((i, j), _)| {
        (a.min(i), b.min(j))
    });
    Poly2::from_terms(c.terms().map(|((i, j), k)| (k.clone(), i - imin, j - jmin)))
}

fn is_homogeneous(c: &Poly2) -> bool {
    let mut degs = c.terms().map(|((i, j), _)| i + j);
    match degs.next() {
        Some(d) => degs.all(|e| e == d),
        None => true,
    }
}

/// Value of a homogeneous coefficient at `a = t b`, `b = 1`.
fn at_ratio(c: &Poly2, t: i64) -> Rational {
    c.eval(&int(t), &int(1))
}

/// Real ratios `t = a/b` solving the reduced binomial `c1 a^k + c0 b^k = 0`:
/// `Some(set)` when the solution set lies in `{1, -1}`, `None` if some real
/// root has another value.
fn binomial_ratios(c: &Poly2) -> Option<BTreeSet<i64>> {
    let mut it = c.terms();
    let ((i1, _), c1) = it.next()?;
    let ((i2, _), c2) = it.next()?;
    // Reduced, so exactly one term is a pure power of a and the other of b.
    let (ka, ca, cb) = if i1 == 0 { (i2, c2, c1) } else { (i1, c1, c2) };
    let k = ka;
    let r = -(cb / ca);
    let odd = k % 2 == 1;
    if r.is_negative() && !odd {
        return Some(BTreeSet::new());
    }
    if r.abs() != Rational::one() {
        return None;
    }
    let mut roots = BTreeSet::new();
    if r.is_positive() {
        roots.insert(1);
        if !odd {
            roots.insert(-1);
        }
    } else {
        roots.insert(-1);
    }
    Some(roots)
}

/// Decides the `(a, b)` constraint imposed by a table. Handles monomial and
/// homogeneous binomial group coefficients exactly; anything else is
/// reported as [`ConstraintResult::Unsolved`].
pub fn solve_coefficient_constraints(table: &TermTable) -> ConstraintResult {
    let mut candidates: Option<BTreeSet<i64>> = None;
    let mut residuals = Vec::new();
    for (_, c) in table.entries() {
        if c.is_zero() {
            continue;
        }
        let reduced = strip_monomial(c);
        if reduced.len() == 1 {
            return ConstraintResult::OnlyTrivial;
        }
        let ratios = if reduced.len() == 2 && is_homogeneous(&reduced) {
            binomial_ratios(&reduced)
        } else {
            None
        };
        match ratios {
            Some(set) => {
                candidates = Some(match candidates {
                    None => set,
                    Some(prev) => prev.intersection(&set).copied().collect(),
                });
            }
            None => residuals.push(reduced),
        }
    }
    let Some(mut set) = candidates else {
        return if residuals.is_empty() {
            ConstraintResult::AnyAB
        } else {
            ConstraintResult::Unsolved(residuals)
        };
    };
    let mut open = Vec::new();
    for r in residuals {
        if is_homogeneous(&r) {
            set.retain(|&t| at_ratio(&r, t).is_zero());
        } else {
            open.push(r);
        }
    }
    if set.is_empty() {
        return ConstraintResult::OnlyTrivial;
    }
    if !open.is_empty() {
        return ConstraintResult::Unsolved(open);
    }
    match set.into_iter().collect::<Vec<_>>().as_slice() {
        [1] => ConstraintResult::RequiresEqual,
        [-1] => ConstraintResult::RequiresOpposite,
        _ => ConstraintResult::Unsolved(vec![Poly2::from_terms([(int(1), 2, 0), (int(-1), 0, 2)])]),
    }
}

/// One grid point whose constraint admits nonzero `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanHit {
    pub p: Rational,
    pub q: Rational,
    pub result: ConstraintResult,
}

/// All `(p, q)` in the product of the ranges whose constraint is not
/// [`ConstraintResult::OnlyTrivial`], sorted by `(p, q)`.
pub fn scan_exponents(
    condition: Condition,
    p_range: &[Rational],
    q_range: &[Rational],
) -> Vec<ScanHit> {
    let mut hits: Vec<ScanHit> = p_range
        .iter()
        .flat_map(|p| q_range.iter().map(move |q| (p, q)))
        .filter_map(|(p, q)| {
            let result = solve_coefficient_constraints(&collect_terms(condition, p, q));
            (result != ConstraintResult::OnlyTrivial).then(|| ScanHit {
                p: p.clone(),
                q: q.clone(),
                result,
            })
        })
        .collect();
    hits.sort_by(|x, y| (&x.p, &x.q).cmp(&(&y.p, &y.q)));
    hits.dedup();
    hits
}

/// `{k / den : k in lo..=hi}`.
pub fn rational_grid(den: i64, lo: i64, hi: i64) -> Vec<Rational> {
    (lo..=hi)
        .map(|k| Rational::new(k.into(), den.into()))
        .collect()
}
