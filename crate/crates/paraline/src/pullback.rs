//! Pullback of parabolic bundles: along power maps of the line, along
//! root-stack reduction, and their delooping composite.
//!
//! [`plain_pullback`] carries a bundle marked at `0`, `1`, `inf` through
//! `z -> z^m`: degrees scale by `m`, the points `0` and `inf` keep their
//! divisibility with multiplicity scaled by `m`, and `1` splits into the
//! `m` preimage points `zeta(m,1)..zeta(m,m)` (formal labels; no
//! root-of-unity arithmetic happens).
//!
//! [`root_pullback`] is the parabolic shadow of pulling back along the
//! reduction of root-stack parameters: per piece and point, division
//! `n*s = a*r + e` moves `a` into the degree and leaves weight `e/r` on the
//! reduced curve. [`root_pullback_oracle`] recomputes its evaluations from
//! the subsheaf description instead (sum of pieces capped by the weight
//! filtration), for use as an independent test reference.
//!
//! [`deloop`] composes the two to remove ramification of order `m` at 0.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact::{gcd, Rational};
use crate::orbifold::reduce_pair;
use crate::parabolic::{weight_numerator, MarkedCurve, MarkedPoint, ParaLine, SplitBundle};
use crate::{Error, Result};

/// Pullback along `z -> z^m` for a bundle whose points are labeled among
/// `0`, `1`, `inf`. The preimages of `1` are labeled `zeta(m,k)`, including
/// for `m = 1`, so the output labeling is uniform in `m`.
pub fn plain_pullback(bundle: &SplitBundle, m: u64) -> Result<SplitBundle> {
    if m == 0 {
        return Err(Error::InvalidInput("power map needs m >= 1".into()));
    }
    // Per original point, the list of points it becomes, in place.
    let mut new_points: Vec<MarkedPoint> = Vec::new();
    let mut copies: Vec<usize> = Vec::with_capacity(bundle.curve.len());
    for point in &bundle.curve.points {
        match point.label.as_str() {
            "0" | "inf" => {
                let scaled = point.multiplicity.checked_mul(m).ok_or_else(|| {
                    Error::InvalidInput("multiplicity out of u64 range".into())
                })?;
                new_points.push(MarkedPoint::new(
                    point.label.clone(),
                    scaled,
                    point.divisibility,
                ));
                copies.push(1);
            }
            "1" => {
                for k in 1..=m {
                    new_points.push(MarkedPoint::new(
                        format!("zeta({m},{k})"),
                        point.multiplicity,
                        point.divisibility,
                    ));
                }
                copies.push(m as usize);
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "point '{other}' is not labeled 0, 1, or inf"
                )));
            }
        }
    }
    let curve = MarkedCurve::new(new_points)?;

    let mut pieces = Vec::with_capacity(bundle.pieces.len());
    for piece in &bundle.pieces {
        let degree = (piece.degree as i128).checked_mul(m as i128)
            .and_then(|d| i64::try_from(d).ok())
            .ok_or_else(|| Error::InvalidInput("degree out of i64 range".into()))?;
        let mut weights = Vec::with_capacity(curve.len());
        for (w, n) in piece.weights.iter().zip(&copies) {
            for _ in 0..*n {
                weights.push(w.clone());
            }
        }
        pieces.push(ParaLine::new(degree, weights));
    }
    SplitBundle::new(curve, pieces)
}

/// Pullback along the root-stack reduction map. Per piece and point with
/// weight `s/r`, write `n*s = a*r + e` (`0 <= e < r`): the degree gains
/// `a` and the weight becomes `e/r` on the reduced curve (divisibility
/// `r/gcd(n,r)`, multiplicity 1). Points whose divisibility reduces to 1
/// are deleted; their residual weight is necessarily 0.
pub fn root_pullback(bundle: &SplitBundle) -> Result<SplitBundle> {
    let reduced = reduce_pair(&bundle.curve);
    let kept: Vec<usize> = (0..reduced.points.len())
        .filter(|&i| reduced.points[i].divisibility > 1)
        .collect();
    let kept_curve =
        MarkedCurve::new(kept.iter().map(|&i| reduced.points[i].clone()).collect())?;

    let mut pieces = Vec::with_capacity(bundle.pieces.len());
    for piece in &bundle.pieces {
        let mut degree = BigInt::from(piece.degree);
        let mut residuals: Vec<Rational> = Vec::with_capacity(bundle.curve.len());
        for (w, point) in piece.weights.iter().zip(&bundle.curve.points) {
            let s = weight_numerator(w, point.divisibility)?;
            let n = point.multiplicity as u128;
            let r = point.divisibility as u128;
            let ns = n * s as u128;
            degree += BigInt::from(ns / r);
            residuals.push(Rational::from_big(
                BigInt::from(ns % r),
                BigInt::from(point.divisibility),
            )?);
        }
        for (i, residual) in residuals.iter().enumerate() {
            if !kept.contains(&i) && !residual.is_zero() {
                return Err(Error::Internal(format!(
                    "nonzero weight {residual} at deleted point '{}'",
                    bundle.curve.points[i].label
                )));
            }
        }
        let weights = kept.iter().map(|&i| residuals[i].clone()).collect();
        let degree = degree
            .to_i64()
            .ok_or_else(|| Error::InvalidInput("degree out of i64 range".into()))?;
        pieces.push(ParaLine::new(degree, weights));
    }
    SplitBundle::new(kept_curve, pieces)
}

/// Independent recomputation of `eval(root_pullback(B), x)` from the
/// subsheaf description, for tests.
///
/// `x` has one entry per point of `B`'s (unreduced) curve, each in
/// `[0, 1)` on the reduced grid (denominator dividing `r_i / gcd(n_i,
/// r_i)`). The recipe reduces the general point to the zero vector: at each
/// point solve `n*l = d*k (mod r)` for the shift step `l/r` matching
/// `x = k*d/r`, with the leftover carry `M = (n*l - d*k)/r` added to every
/// value. At the zero vector the subsheaf is the sum over pieces of the
/// piece capped along the weight filtration: the cap at a point is the
/// minimum over filtration steps of `max(a_step, n*[piece weight >
/// step weight])`, since a sum of subsheaves of a line bundle takes the
/// divisorwise maximum and an intersection the minimum.
pub fn root_pullback_oracle(bundle: &SplitBundle, x: &[Rational]) -> Result<Vec<i64>> {
    if x.len() != bundle.curve.len() {
        return Err(Error::InvalidInput(format!(
            "grid point has {} entries, curve has {} points",
            x.len(),
            bundle.curve.len()
        )));
    }
    let mut shift_vec = Vec::with_capacity(x.len());
    let mut carry_total: u128 = 0;
    for (xi, point) in x.iter().zip(&bundle.curve.points) {
        let n = point.multiplicity;
        let r = point.divisibility;
        let d = gcd(n, r);
        let rd = r / d;
        if xi < &Rational::zero() || xi >= &Rational::from_int(1) {
            return Err(Error::InvalidInput(format!("grid entry {xi} out of [0,1)")));
        }
        let scaled = xi * &Rational::from_int(rd as i64);
        if !scaled.is_integer() {
            return Err(Error::Divisibility(format!(
                "grid entry {xi} at '{}' is not {rd}-divisible",
                point.label
            )));
        }
        let k = scaled.numer().to_u64().expect("k in [0, rd)");
        let l = (0..rd)
            .find(|l| (n as u128 * *l as u128) % r as u128 == (d as u128 * k as u128) % r as u128)
            .ok_or_else(|| {
                Error::Internal(format!("no shift step for k = {k} at '{}'", point.label))
            })?;
        carry_total += (n as u128 * l as u128 - d as u128 * k as u128) / r as u128;
        shift_vec.push(Rational::from_big(BigInt::from(l), BigInt::from(r))?);
    }

    let shifted = bundle.shift(&shift_vec)?;
    let filtrations: Vec<_> = (0..shifted.curve.len())
        .map(|i| shifted.ms_filtration(i))
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(shifted.pieces.len());
    for piece in &shifted.pieces {
        let mut value = BigInt::from(piece.degree) + BigInt::from(carry_total);
        for (i, point) in shifted.curve.points.iter().enumerate() {
            let w = &piece.weights[i];
            let cap = filtrations[i]
                .iter()
                .map(|step| {
                    let above = u64::from(w > &step.weight);
                    step.a.max(point.multiplicity * above)
                })
                .min()
                .expect("filtration has at least this piece's weight");
            value += BigInt::from(cap);
        }
        out.push(
            value
                .to_i64()
                .ok_or_else(|| Error::InvalidInput("degree out of i64 range".into()))?,
        );
    }
    out.sort_unstable();
    Ok(out)
}

/// Removes ramification of order `m` at 0 by pulling back along `z -> z^m`
/// and then along the root-stack reduction. Requires the divisibility at
/// the point labeled `0` to equal `m` (a curve without `0` counts as
/// divisibility 1); the point `0` always reduces away.
pub fn deloop(bundle: &SplitBundle, m: u64) -> Result<SplitBundle> {
    let r0 = bundle
        .curve
        .position("0")
        .map_or(1, |i| bundle.curve.points[i].divisibility);
    if r0 != m {
        return Err(Error::Divisibility(format!(
            "divisibility {r0} at point '0' does not match m = {m}"
        )));
    }
    root_pullback(&plain_pullback(bundle, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    fn curve(points: &[(&str, u64, u64)]) -> MarkedCurve {
        MarkedCurve::new(
            points
                .iter()
                .map(|(l, n, r)| MarkedPoint::new(*l, *n, *r))
                .collect(),
        )
        .unwrap()
    }

    fn bundle(curve: MarkedCurve, pieces: Vec<(i64, Vec<Rational>)>) -> SplitBundle {
        SplitBundle::new(
            curve,
            pieces
                .into_iter()
                .map(|(d, w)| ParaLine::new(d, w))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn power_map_splits_the_point_one() {
        let b = bundle(
            curve(&[("0", 1, 2), ("1", 1, 2), ("inf", 1, 2)]),
            vec![(0, vec![rat(1, 2), rat(1, 2), rat(1, 2)])],
        );
        let pulled = plain_pullback(&b, 2).unwrap();
        let labels: Vec<&str> = pulled
            .curve
            .points
            .iter()
            .map(|p| p.label.as_str())
            .collect();
        assert_eq!(labels, vec!["0", "zeta(2,1)", "zeta(2,2)", "inf"]);
        assert_eq!(pulled.curve.points[0].multiplicity, 2);
        assert_eq!(pulled.curve.points[1].multiplicity, 1);
        assert_eq!(pulled.curve.points[3].multiplicity, 2);
        assert_eq!(pulled.pieces[0].degree, 0);
        assert_eq!(pulled.pieces[0].weights, vec![rat(1, 2); 4]);
    }

    #[test]
    fn power_map_scales_degrees() {
        let b = bundle(
            curve(&[("0", 1, 1), ("inf", 2, 1)]),
            vec![(-3, vec![Rational::zero(), Rational::zero()])],
        );
        let pulled = plain_pullback(&b, 5).unwrap();
        assert_eq!(pulled.pieces[0].degree, -15);
        assert_eq!(pulled.curve.points[1].multiplicity, 10);
    }

    #[test]
    fn power_map_is_relabeling_for_m_one() {
        let b = bundle(
            curve(&[("1", 2, 3), ("inf", 1, 3)]),
            vec![(1, vec![rat(2, 3), rat(1, 3)])],
        );
        let pulled = plain_pullback(&b, 1).unwrap();
        assert_eq!(pulled.curve.points[0].label, "zeta(1,1)");
        assert_eq!(pulled.pieces, b.pieces);
    }

    #[test]
    fn power_map_rejects_other_labels() {
        let b = SplitBundle::unit(curve(&[("p", 1, 1)]));
        assert!(plain_pullback(&b, 2).is_err());
        let b = SplitBundle::unit(curve(&[("0", 1, 1)]));
        assert!(plain_pullback(&b, 0).is_err());
    }

    #[test]
    fn root_pullback_divides_weights() {
        // 2*1 = 1*2 + 0: degree 1, the point reduces away.
        let b = bundle(curve(&[("p", 2, 2)]), vec![(0, vec![rat(1, 2)])]);
        let pulled = root_pullback(&b).unwrap();
        assert!(pulled.curve.is_empty());
        assert_eq!(pulled.pieces, vec![ParaLine::new(1, vec![])]);

        // 2*2 = 0*5 + 4.
        let b = bundle(curve(&[("p", 2, 5)]), vec![(0, vec![rat(2, 5)])]);
        let pulled = root_pullback(&b).unwrap();
        assert_eq!(
            pulled,
            bundle(curve(&[("p", 1, 5)]), vec![(0, vec![rat(4, 5)])])
        );

        // Multiplicity 1 everywhere is the identity.
        let c = curve(&[("p1", 1, 4), ("p2", 1, 3)]);
        let b = bundle(c, vec![(-2, vec![rat(3, 4), rat(1, 3)])]);
        assert_eq!(root_pullback(&b).unwrap(), b);
    }

    #[test]
    fn oracle_matches_direct_evaluation() {
        // Two pieces at one point; the x = 1/2 value needs the filtration
        // cap, not just the degree formula.
        let b = bundle(
            curve(&[("p", 2, 4)]),
            vec![(0, vec![Rational::zero()]), (0, vec![rat(1, 4)])],
        );
        assert_eq!(
            root_pullback_oracle(&b, &[Rational::zero()]).unwrap(),
            vec![0, 0]
        );
        assert_eq!(root_pullback_oracle(&b, &[rat(1, 2)]).unwrap(), vec![-1, 0]);

        let pulled = root_pullback(&b).unwrap();
        assert_eq!(pulled.eval(&[Rational::zero()]).unwrap(), vec![0, 0]);
        assert_eq!(pulled.eval(&[rat(1, 2)]).unwrap(), vec![-1, 0]);
    }

    #[test]
    fn oracle_sweeps_a_full_grid() {
        let b = bundle(curve(&[("p", 2, 5)]), vec![(0, vec![rat(2, 5)])]);
        let pulled = root_pullback(&b).unwrap();
        for k in 0..5i64 {
            let x = [Rational::new(k, 5).unwrap().frac()];
            assert_eq!(
                root_pullback_oracle(&b, &x).unwrap(),
                pulled.eval(&x).unwrap(),
                "x = {k}/5"
            );
        }
    }

    #[test]
    fn oracle_on_weightless_bundles_is_plain_eval() {
        let c = curve(&[("p1", 3, 1), ("p2", 1, 2)]);
        let b = bundle(
            c,
            vec![
                (2, vec![Rational::zero(), Rational::zero()]),
                (-1, vec![Rational::zero(), Rational::zero()]),
            ],
        );
        let zero = [Rational::zero(), Rational::zero()];
        assert_eq!(
            root_pullback_oracle(&b, &zero).unwrap(),
            b.eval(&zero).unwrap()
        );
    }

    #[test]
    fn deloop_removes_the_zero_point() {
        let b = bundle(
            curve(&[("0", 1, 2), ("1", 1, 2), ("inf", 1, 2)]),
            vec![(0, vec![rat(1, 2), rat(1, 2), rat(1, 2)])],
        );
        let delooped = deloop(&b, 2).unwrap();
        assert_eq!(
            delooped,
            bundle(
                curve(&[("zeta(2,1)", 1, 2), ("zeta(2,2)", 1, 2)]),
                vec![(2, vec![rat(1, 2), rat(1, 2)])]
            )
        );
    }

    #[test]
    fn deloop_checks_the_ramification_order() {
        let b = SplitBundle::unit(curve(&[("0", 1, 2), ("inf", 1, 1)]));
        assert!(matches!(deloop(&b, 3), Err(Error::Divisibility(_))));

        // m = 1 with divisibility 1 at 0: identity up to relabeling of "1".
        let b = bundle(
            curve(&[("0", 1, 1), ("1", 1, 3), ("inf", 1, 3)]),
            vec![(0, vec![Rational::zero(), rat(1, 3), rat(2, 3)])],
        );
        let delooped = deloop(&b, 1).unwrap();
        assert_eq!(
            delooped,
            bundle(
                curve(&[("zeta(1,1)", 1, 3), ("inf", 1, 3)]),
                vec![(0, vec![rat(1, 3), rat(2, 3)])]
            )
        );
    }

    #[test]
    fn deloop_is_tensor_compatible() {
        let c = curve(&[("0", 1, 2), ("1", 1, 4), ("inf", 1, 4)]);
        let b1 = bundle(c.clone(), vec![(0, vec![rat(1, 2), rat(3, 4), rat(1, 4)])]);
        let b2 = bundle(c, vec![(-1, vec![rat(1, 2), rat(1, 2), rat(3, 4)])]);
        let lhs = deloop(&b1.tensor(&b2).unwrap(), 2).unwrap();
        let rhs = deloop(&b1, 2).unwrap().tensor(&deloop(&b2, 2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
