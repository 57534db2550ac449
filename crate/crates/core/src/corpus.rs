//! Seeded random polynomial generators for corpus sweeps.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curvature::PolyGenerators;
use crate::exactpoly::{rat, Poly2, Rational, Var};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in `[-3, 3]` with denominator at most 4.
pub fn coefficient<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.random_range(1..=4i64);
    let num = rng.random_range(-3 * den..=3 * den);
    rat(num, den)
}

pub fn nonzero_coefficient<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let c = coefficient(rng);
        if c != rat(0, 1) {
            return c;
        }
    }
}

/// Random univariate polynomial of exact degree `degree` (a degree-0 draw
/// may be the zero constant).
pub fn univariate<R: Rng>(rng: &mut R, var: Var, degree: u32) -> Poly2 {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| coefficient(rng)).collect();
    coeffs.push(if degree == 0 {
        coefficient(rng)
    } else {
        nonzero_coefficient(rng)
    });
    Poly2::univariate(var, &coeffs)
}

/// Generators with `deg alpha = m`, `deg beta = n`.
pub fn generators<R: Rng>(rng: &mut R, m: u32, n: u32) -> PolyGenerators {
    PolyGenerators::new(univariate(rng, Var::U, m), univariate(rng, Var::V, n))
        .expect("univariate by construction")
}

/// Linear generators sharing the leading slope, i.e. a paraboloid.
pub fn equal_slope_pair<R: Rng>(rng: &mut R) -> PolyGenerators {
    let slope = nonzero_coefficient(rng);
    let alpha = Poly2::univariate(Var::U, &[coefficient(rng), slope.clone()]);
    let beta = Poly2::univariate(Var::V, &[coefficient(rng), slope]);
    PolyGenerators::new(alpha, beta).expect("univariate by construction")
}

/// The classification corpus: every degree pair in `{0..=4}^2` with `draws`
/// random generators each. Half of the `(1, 1)` draws force equal slopes so
/// the paraboloid branch is exercised.
pub fn classification_corpus(seed: u64, draws: usize) -> Vec<PolyGenerators> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(25 * draws);
    for m in 0..=4 {
        for n in 0..=4 {
            for k in 0..draws {
                let g = if (m, n) == (1, 1) && k % 2 == 0 {
                    equal_slope_pair(&mut rng)
                } else {
                    generators(&mut rng, m, n)
                };
                out.push(g);
            }
        }
    }
    out
}

/// `count` generator pairs with independent random degrees in `0..=max_degree`.
pub fn random_pairs(seed: u64, count: usize, max_degree: u32) -> Vec<PolyGenerators> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(0..=max_degree);
            let n = rng.random_range(0..=max_degree);
            generators(&mut rng, m, n)
        })
        .collect()
}

/// `count` pairs with both degrees in `1..=max_degree`.
pub fn nondegenerate_pairs(seed: u64, count: usize, max_degree: u32) -> Vec<PolyGenerators> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(1..=max_degree);
            let n = rng.random_range(1..=max_degree);
            generators(&mut rng, m, n)
        })
        .collect()
}

/// Dyadic rational in `[-range, range]` with denominator `2^bits`; dyadic
/// points are exact in both rational and floating-point arithmetic.
pub fn dyadic<R: Rng>(rng: &mut R, range: i64, bits: u32) -> Rational {
    let den = 1i64 << bits;
    rat(rng.random_range(-range * den..=range * den), den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_are_exact() {
        let mut r = rng(7);
        for m in 1..=4 {
            let p = univariate(&mut r, Var::U, m);
            assert_eq!(p.degree(Var::U), Some(m));
            assert!(!p.depends_on(Var::V));
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(classification_corpus(3, 2), classification_corpus(3, 2));
        assert_eq!(classification_corpus(3, 2).len(), 50);
    }
}
