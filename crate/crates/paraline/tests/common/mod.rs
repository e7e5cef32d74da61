//! Shared generators for the integration suites: seeded random curves,
//! bundles, and grid vectors.

#![allow(dead_code)]

use paraline::exact::Rational;
use paraline::parabolic::{MarkedCurve, MarkedPoint, ParaLine, SplitBundle};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A curve with 1..=3 points, multiplicities up to 4, divisibilities up
/// to 6.
pub fn random_curve(rng: &mut ChaCha8Rng) -> MarkedCurve {
    let count = rng.gen_range(1..=3);
    let points = (0..count)
        .map(|i| {
            MarkedPoint::new(
                format!("q{i}"),
                rng.gen_range(1..=4),
                rng.gen_range(1..=6),
            )
        })
        .collect();
    MarkedCurve::new(points).unwrap()
}

/// A normalized random weight for divisibility `r`.
pub fn random_weight(rng: &mut ChaCha8Rng, r: u64) -> Rational {
    let s = rng.gen_range(0..r) as i64;
    Rational::from_big(s.into(), (r as i64).into()).unwrap()
}

/// A bundle with 1..=3 pieces on the given curve, degrees in [-5, 5].
pub fn random_bundle_on(rng: &mut ChaCha8Rng, curve: &MarkedCurve) -> SplitBundle {
    let rank = rng.gen_range(1..=3);
    let pieces = (0..rank)
        .map(|_| {
            let weights = curve
                .points
                .iter()
                .map(|p| random_weight(rng, p.divisibility))
                .collect();
            ParaLine::new(rng.gen_range(-5..=5), weights)
        })
        .collect();
    SplitBundle::new(curve.clone(), pieces).unwrap()
}

pub fn random_bundle(rng: &mut ChaCha8Rng) -> SplitBundle {
    let curve = random_curve(rng);
    random_bundle_on(rng, &curve)
}

/// A grid weight vector with entries `t / r_i`, `t` in `[-2 r_i, 2 r_i]`.
pub fn random_grid_vector(rng: &mut ChaCha8Rng, curve: &MarkedCurve) -> Vec<Rational> {
    curve
        .points
        .iter()
        .map(|p| {
            let r = p.divisibility as i64;
            let t = rng.gen_range(-2 * r..=2 * r);
            Rational::from_big(t.into(), r.into()).unwrap()
        })
        .collect()
}

/// A grid weight vector with entries in `[0, 1)`.
pub fn random_box_vector(rng: &mut ChaCha8Rng, curve: &MarkedCurve) -> Vec<Rational> {
    curve
        .points
        .iter()
        .map(|p| random_weight(rng, p.divisibility))
        .collect()
}
