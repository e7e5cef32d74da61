//! Split parabolic bundles on a marked curve.
//!
//! A [`MarkedCurve`] is an ordered list of labeled points, each carrying a
//! multiplicity `n` (the coefficient of the point in the parabolic divisor)
//! and a divisibility `r` (the denominator bound for weights there). A
//! [`SplitBundle`] is a multiset of rank-one pieces ([`ParaLine`]): each
//! piece has a base degree and one weight in `[0, 1)` per point.
//!
//! The bundle is really a functor on weight vectors: [`SplitBundle::eval`]
//! returns, for each piece, the degree `d + sum_i n_i * floor(w_i - a_i)`
//! of the line bundle the piece contributes at the vector `a`. Everything
//! else (shift, tensor, dual, hom) is closed-form arithmetic on the pieces,
//! with [`tensor_oracle_degree`] as an independent brute-force reference for
//! the tensor degree, kept free of the closed form so tests can compare the
//! two paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::{Error, Result};

/// One marked point: an opaque label plus multiplicity and divisibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedPoint {
    pub label: String,
    pub multiplicity: u64,
    pub divisibility: u64,
}

impl MarkedPoint {
    pub fn new(label: impl Into<String>, multiplicity: u64, divisibility: u64) -> Self {
        MarkedPoint {
            label: label.into(),
            multiplicity,
            divisibility,
        }
    }
}

/// An ordered list of marked points with pairwise distinct labels.
///
/// Bundles are composable (tensor, hom) only when their curves are equal as
/// ordered lists; there is no implicit reordering or matching by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedCurve {
    pub points: Vec<MarkedPoint>,
}

impl MarkedCurve {
    pub fn new(points: Vec<MarkedPoint>) -> Result<Self> {
        let curve = MarkedCurve { points };
        let problems = curve.validate();
        if let Some(p) = problems.first() {
            return Err(Error::InvalidInput(p.clone()));
        }
        Ok(curve)
    }

    /// Structural diagnostics; empty means valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if p.multiplicity == 0 {
                out.push(format!("point '{}' has zero multiplicity", p.label));
            }
            if p.divisibility == 0 {
                out.push(format!("point '{}' has zero divisibility", p.label));
            }
            if self.points[..i].iter().any(|q| q.label == p.label) {
                out.push(format!("duplicate point label '{}'", p.label));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }

    /// Sum of the multiplicities: the total degree of the parabolic divisor.
    pub fn total_multiplicity(&self) -> u64 {
        self.points.iter().map(|p| p.multiplicity).sum()
    }
}

/// A rank-one parabolic piece: base degree plus one weight per point.
///
/// Weights are normalized representatives: each lies in `[0, 1)` and its
/// denominator divides the divisibility of its point (integer shifts are
/// absorbed into the degree). The derived ordering (degree, then weights
/// lexicographically) is the canonical piece order used for serialization
/// and multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParaLine {
    pub degree: i64,
    pub weights: Vec<Rational>,
}

impl ParaLine {
    pub fn new(degree: i64, weights: Vec<Rational>) -> Self {
        ParaLine { degree, weights }
    }
}

/// A finite multiset of rank-one pieces on a common curve.
///
/// Constructors sort the pieces canonically, so structural equality of two
/// constructed bundles is multiset equality. `eval` and `shift` take weight
/// vectors whose entries must be `r_i`-divisible (any sign or magnitude).
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
pub struct SplitBundle {
    pub curve: MarkedCurve,
    pub pieces: Vec<ParaLine>,
}

impl PartialEq for SplitBundle {
    fn eq(&self, other: &Self) -> bool {
        if self.curve != other.curve {
            return false;
        }
        let mut a = self.pieces.clone();
        let mut b = other.pieces.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Returns the numerator of `w` over denominator `r`, checking that `w` is
/// a normalized weight for divisibility `r`: in `[0, 1)` with `w * r`
/// integral. The result lies in `[0, r)`.
pub(crate) fn weight_numerator(w: &Rational, r: u64) -> Result<u64> {
    if w < &Rational::zero() || w >= &Rational::from_int(1) {
        return Err(Error::InvalidInput(format!("weight {w} out of [0,1)")));
    }
    let scaled = w * &Rational::from_big(BigInt::from(r), BigInt::from(1))?;
    if !scaled.is_integer() {
        return Err(Error::Divisibility(format!(
            "weight {w} is not {r}-divisible"
        )));
    }
    // In [0, r) by the range check above.
    Ok(scaled.numer().to_u64().expect("numerator fits u64"))
}

fn check_weight_vector(curve: &MarkedCurve, alpha: &[Rational]) -> Result<()> {
    if alpha.len() != curve.len() {
        return Err(Error::InvalidInput(format!(
            "weight vector has {} entries, curve has {} points",
            alpha.len(),
            curve.len()
        )));
    }
    for (a, p) in alpha.iter().zip(&curve.points) {
        let scaled = a * &Rational::from_int(p.divisibility as i64);
        if !scaled.is_integer() {
            return Err(Error::Divisibility(format!(
                "entry {a} at point '{}' is not {}-divisible",
                p.label, p.divisibility
            )));
        }
    }
    Ok(())
}

fn to_degree(value: BigInt) -> Result<i64> {
    value
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("degree out of i64 range".into()))
}

/// One step of the weight filtration at a point: a distinct weight `s/r`,
/// how many pieces carry it, and the division data `n*s = a*r + e` with
/// `0 <= e < r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsStep {
    pub weight: Rational,
    pub multiplicity: u64,
    pub a: u64,
    pub e: u64,
}

impl SplitBundle {
    /// Builds a bundle, validating every piece and sorting canonically.
    pub fn new(curve: MarkedCurve, pieces: Vec<ParaLine>) -> Result<Self> {
        let bundle = SplitBundle { curve, pieces };
        let problems = bundle.validate();
        if let Some(p) = problems.first() {
            return Err(Error::InvalidInput(p.clone()));
        }
        Ok(bundle.canonicalized())
    }

    /// Revalidates and canonicalizes a bundle assembled field-by-field
    /// (for example straight from JSON).
    pub fn into_checked(self) -> Result<Self> {
        SplitBundle::new(self.curve, self.pieces)
    }

    /// The unit for the tensor product: one piece of degree 0, all weights 0.
    pub fn unit(curve: MarkedCurve) -> Self {
        let piece = ParaLine::new(0, vec![Rational::zero(); curve.len()]);
        SplitBundle { curve, pieces: vec![piece] }
    }

    pub fn rank(&self) -> usize {
        self.pieces.len()
    }

    /// Diagnostics for every invariant violation; empty means valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = self.curve.validate();
        for (pi, piece) in self.pieces.iter().enumerate() {
            if piece.weights.len() != self.curve.len() {
                out.push(format!(
                    "piece {pi} has {} weights, curve has {} points",
                    piece.weights.len(),
                    self.curve.len()
                ));
                continue;
            }
            for (w, point) in piece.weights.iter().zip(&self.curve.points) {
                if w < &Rational::zero() || w >= &Rational::from_int(1) {
                    out.push(format!("piece {pi}: weight out of [0,1): {w} at '{}'", point.label));
                } else if point.divisibility != 0 {
                    let scaled = w * &Rational::from_int(point.divisibility as i64);
                    if !scaled.is_integer() {
                        out.push(format!(
                            "piece {pi}: divisibility violation: weight {w} at '{}' (r = {})",
                            point.label, point.divisibility
                        ));
                    }
                }
            }
        }
        out
    }

    fn canonicalized(mut self) -> Self {
        self.pieces.sort();
        self
    }

    /// The degrees of the line bundles the pieces contribute at the weight
    /// vector `alpha`, as an ascending multiset.
    ///
    /// Entries of `alpha` may have any sign and magnitude but must be
    /// `r_i`-divisible. Per piece the value is
    /// `d + sum_i n_i * floor(w_i - alpha_i)`.
    pub fn eval(&self, alpha: &[Rational]) -> Result<Vec<i64>> {
        check_weight_vector(&self.curve, alpha)?;
        let mut out = Vec::with_capacity(self.pieces.len());
        for piece in &self.pieces {
            let mut value = BigInt::from(piece.degree);
            for ((w, a), point) in piece.weights.iter().zip(alpha).zip(&self.curve.points) {
                value += BigInt::from(point.multiplicity) * (w - a).floor();
            }
            out.push(to_degree(value)?);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The shifted bundle: piece degrees absorb the integer parts of
    /// `w - alpha` and the weights renormalize to `frac(w - alpha)`, so that
    /// `shift(B, alpha).eval(beta) == B.eval(alpha + beta)`.
    pub fn shift(&self, alpha: &[Rational]) -> Result<SplitBundle> {
        check_weight_vector(&self.curve, alpha)?;
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for piece in &self.pieces {
            let mut degree = BigInt::from(piece.degree);
            let mut weights = Vec::with_capacity(piece.weights.len());
            for ((w, a), point) in piece.weights.iter().zip(alpha).zip(&self.curve.points) {
                let diff = w - a;
                degree += BigInt::from(point.multiplicity) * diff.floor();
                weights.push(diff.frac());
            }
            pieces.push(ParaLine::new(to_degree(degree)?, weights));
        }
        Ok(SplitBundle { curve: self.curve.clone(), pieces }.canonicalized())
    }

    /// Parabolic tensor product, piecewise over all pairs: degrees add plus
    /// one unit of `n_i` for every point where the weights wrap past 1, and
    /// weights add modulo 1.
    pub fn tensor(&self, other: &SplitBundle) -> Result<SplitBundle> {
        if self.curve != other.curve {
            return Err(Error::CurveMismatch(
                "tensor operands live on different curves".into(),
            ));
        }
        let one = Rational::from_int(1);
        let mut pieces = Vec::with_capacity(self.pieces.len() * other.pieces.len());
        for a in &self.pieces {
            for b in &other.pieces {
                let mut degree = BigInt::from(a.degree) + BigInt::from(b.degree);
                let mut weights = Vec::with_capacity(a.weights.len());
                for ((wa, wb), point) in a.weights.iter().zip(&b.weights).zip(&self.curve.points) {
                    let sum = wa + wb;
                    if sum >= one {
                        degree += BigInt::from(point.multiplicity);
                        weights.push(&sum - &one);
                    } else {
                        weights.push(sum);
                    }
                }
                pieces.push(ParaLine::new(to_degree(degree)?, weights));
            }
        }
        Ok(SplitBundle { curve: self.curve.clone(), pieces }.canonicalized())
    }

    /// Iterated tensor product; the zeroth power is the unit bundle.
    pub fn tensor_power(&self, j: u64) -> Result<SplitBundle> {
        let mut acc = SplitBundle::unit(self.curve.clone());
        for _ in 0..j {
            acc = acc.tensor(self)?;
        }
        Ok(acc)
    }

    /// Dual bundle: per piece, degree `-d - sum_i n_i * [w_i > 0]` and
    /// weights `frac(-w_i)`, so that `L.tensor(L.dual())` is the unit for
    /// every rank-one `L`.
    pub fn dual(&self) -> SplitBundle {
        let one = Rational::from_int(1);
        let pieces = self
            .pieces
            .iter()
            .map(|piece| {
                let mut degree = -BigInt::from(piece.degree);
                let mut weights = Vec::with_capacity(piece.weights.len());
                for (w, point) in piece.weights.iter().zip(&self.curve.points) {
                    if w > &Rational::zero() {
                        degree -= BigInt::from(point.multiplicity);
                        weights.push(&one - w);
                    } else {
                        weights.push(Rational::zero());
                    }
                }
                // Degree stays in range: it only shrinks from -d by at most
                // the total multiplicity.
                ParaLine::new(
                    to_degree(degree).expect("dual degree in range"),
                    weights,
                )
            })
            .collect();
        SplitBundle { curve: self.curve.clone(), pieces }.canonicalized()
    }

    /// Internal hom `Hom(self, other) = dual(self) tensor other`.
    pub fn hom(&self, other: &SplitBundle) -> Result<SplitBundle> {
        self.dual().tensor(other)
    }

    /// The weight filtration at point `i`: distinct weights ascending, each
    /// with its piece count and the division data `n*s = a*r + e`.
    pub fn ms_filtration(&self, i: usize) -> Result<Vec<MsStep>> {
        let point = self.curve.points.get(i).ok_or_else(|| {
            Error::InvalidInput(format!("point index {i} out of range"))
        })?;
        let mut weights: Vec<&Rational> = self.pieces.iter().map(|p| &p.weights[i]).collect();
        weights.sort();
        let mut out: Vec<MsStep> = Vec::new();
        for w in weights {
            if let Some(last) = out.last_mut() {
                if &last.weight == w {
                    last.multiplicity += 1;
                    continue;
                }
            }
            let s = weight_numerator(w, point.divisibility)?;
            let ns = point.multiplicity as u128 * s as u128;
            let r = point.divisibility as u128;
            out.push(MsStep {
                weight: w.clone(),
                multiplicity: 1,
                a: (ns / r) as u64,
                e: (ns % r) as u64,
            });
        }
        Ok(out)
    }
}

/// Brute-force reference for the tensor degree at `alpha`, independent of
/// the closed-form tensor rule.
///
/// The tensor of two pieces is generated at level `alpha` by products of
/// sections at levels `beta` and `alpha - beta`; by periodicity it suffices
/// to let `beta_i` run through one full period `alpha_i - t/r_i`,
/// `t = 0..r_i`, maximizing `floor(w_i - beta_i) + floor(v_i - (alpha_i -
/// beta_i))` pointwise. Intended for tests.
pub fn tensor_oracle_degree(
    l1: &ParaLine,
    l2: &ParaLine,
    curve: &MarkedCurve,
    alpha: &[Rational],
) -> Result<i64> {
    if l1.weights.len() != curve.len() || l2.weights.len() != curve.len() {
        return Err(Error::InvalidInput(
            "piece weight count does not match curve".into(),
        ));
    }
    if alpha.len() != curve.len() {
        return Err(Error::InvalidInput(
            "weight vector length does not match curve".into(),
        ));
    }
    // All quantities at point i are multiples of 1/r_i, so the floors are
    // computed on numerators over the common denominator r_i: with
    // beta = alpha_i - t/r_i, floor(w - beta) = floor((w*r - a*r + t)/r)
    // and floor(v - (alpha_i - beta)) = floor((v*r - t)/r).
    let scaled = |q: &Rational, r: u64| -> Result<BigInt> {
        let product = q * &Rational::from_int(r as i64);
        if !product.is_integer() {
            return Err(Error::Divisibility(format!(
                "{q} is not {r}-divisible"
            )));
        }
        Ok(product.floor())
    };
    let mut total = BigInt::from(l1.degree) + BigInt::from(l2.degree);
    for (i, point) in curve.points.iter().enumerate() {
        let r = point.divisibility;
        let big_r = BigInt::from(r);
        let w1 = scaled(&l1.weights[i], r)?;
        let w2 = scaled(&l2.weights[i], r)?;
        let a = scaled(&alpha[i], r)?;
        let mut best: Option<BigInt> = None;
        for t in 0..=r {
            let value = (&w1 - &a + BigInt::from(t)).div_floor(&big_r)
                + (&w2 - BigInt::from(t)).div_floor(&big_r);
            if best.as_ref().map_or(true, |b| &value > b) {
                best = Some(value);
            }
        }
        total += BigInt::from(point.multiplicity) * best.expect("at least one candidate");
    }
    total
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("degree out of i64 range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    fn one_point_curve(n: u64, r: u64) -> MarkedCurve {
        MarkedCurve::new(vec![MarkedPoint::new("p", n, r)]).unwrap()
    }

    fn two_point_curve(r1: u64, r2: u64) -> MarkedCurve {
        MarkedCurve::new(vec![
            MarkedPoint::new("p1", 1, r1),
            MarkedPoint::new("inf", 1, r2),
        ])
        .unwrap()
    }

    fn bundle(curve: MarkedCurve, pieces: Vec<(i64, Vec<Rational>)>) -> SplitBundle {
        let pieces = pieces
            .into_iter()
            .map(|(d, w)| ParaLine::new(d, w))
            .collect();
        SplitBundle::new(curve, pieces).unwrap()
    }

    #[test]
    fn curve_rejects_duplicate_labels() {
        let err = MarkedCurve::new(vec![
            MarkedPoint::new("p", 1, 2),
            MarkedPoint::new("p", 1, 3),
        ])
        .unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn eval_is_the_floor_formula() {
        // Single piece d=0, w=2/5 at a point with n=2: value 2*floor(2/5 - 3/5).
        let b = bundle(one_point_curve(2, 5), vec![(0, vec![rat(2, 5)])]);
        assert_eq!(b.eval(&[rat(3, 5)]).unwrap(), vec![-2]);

        // Unit bundle at alpha = 0 and at alpha = 1.
        let u = SplitBundle::unit(one_point_curve(3, 2));
        assert_eq!(u.eval(&[Rational::zero()]).unwrap(), vec![0]);
        assert_eq!(u.eval(&[rat(1, 1)]).unwrap(), vec![-3]);

        // The (1,3) cyclic piece evaluated off the jump locus.
        let b = bundle(
            two_point_curve(3, 3),
            vec![(-1, vec![rat(1, 3), rat(2, 3)])],
        );
        assert_eq!(b.eval(&[rat(2, 3), Rational::zero()]).unwrap(), vec![-2]);
    }

    #[test]
    fn eval_rejects_off_grid_vectors() {
        let b = SplitBundle::unit(one_point_curve(1, 2));
        let err = b.eval(&[rat(1, 3)]).unwrap_err();
        assert!(matches!(err, Error::Divisibility(_)), "{err}");
    }

    #[test]
    fn shift_absorbs_integer_parts() {
        let curve = one_point_curve(1, 3);
        let b = bundle(curve.clone(), vec![(0, vec![rat(1, 3)])]);

        let s = b.shift(&[rat(1, 3)]).unwrap();
        assert_eq!(s, bundle(curve.clone(), vec![(0, vec![Rational::zero()])]));

        let s = b.shift(&[rat(2, 3)]).unwrap();
        assert_eq!(s, bundle(curve.clone(), vec![(-1, vec![rat(2, 3)])]));

        // Shifting by the all-ones vector drops the degree by the total
        // multiplicity and keeps the weights.
        let curve = two_point_curve(4, 2);
        let b = bundle(curve.clone(), vec![(3, vec![rat(1, 4), rat(1, 2)])]);
        let s = b.shift(&[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(s, bundle(curve, vec![(1, vec![rat(1, 4), rat(1, 2)])]));
    }

    #[test]
    fn shift_composes_with_eval() {
        let curve = two_point_curve(4, 3);
        let b = bundle(
            curve,
            vec![(2, vec![rat(3, 4), rat(1, 3)]), (0, vec![rat(1, 2), Rational::zero()])],
        );
        let alpha = [rat(5, 4), rat(-2, 3)];
        let beta = [rat(-1, 2), rat(4, 3)];
        let sum = [&alpha[0] + &beta[0], &alpha[1] + &beta[1]];
        assert_eq!(
            b.shift(&alpha).unwrap().eval(&beta).unwrap(),
            b.eval(&sum).unwrap()
        );
    }

    #[test]
    fn tensor_matches_worked_products() {
        // Self-product of the (1,3) cyclic piece: finite weights add without
        // carry, the infinity weights carry once.
        let curve = two_point_curve(3, 3);
        let b = bundle(curve.clone(), vec![(-1, vec![rat(1, 3), rat(2, 3)])]);
        let sq = b.tensor(&b).unwrap();
        assert_eq!(sq, bundle(curve, vec![(-1, vec![rat(2, 3), rat(1, 3)])]));

        // Complementary quarter weights at a reduced point force the +1.
        let curve = one_point_curve(1, 4);
        let a = bundle(curve.clone(), vec![(0, vec![rat(1, 4)])]);
        let c = bundle(curve.clone(), vec![(0, vec![rat(3, 4)])]);
        assert_eq!(
            a.tensor(&c).unwrap(),
            bundle(curve, vec![(1, vec![Rational::zero()])])
        );
    }

    #[test]
    fn tensor_requires_equal_curves() {
        let a = SplitBundle::unit(one_point_curve(1, 2));
        let b = SplitBundle::unit(one_point_curve(1, 3));
        assert!(matches!(a.tensor(&b), Err(Error::CurveMismatch(_))));
    }

    #[test]
    fn unit_is_neutral_and_powers_iterate() {
        let curve = two_point_curve(4, 2);
        let b = bundle(
            curve.clone(),
            vec![(2, vec![rat(3, 4), rat(1, 2)]), (-1, vec![rat(1, 4), Rational::zero()])],
        );
        let u = SplitBundle::unit(curve);
        assert_eq!(b.tensor(&u).unwrap(), b);
        assert_eq!(b.tensor_power(0).unwrap(), u);
        assert_eq!(b.tensor_power(1).unwrap(), b);
        assert_eq!(b.tensor_power(2).unwrap(), b.tensor(&b).unwrap());
    }

    #[test]
    fn dual_matches_worked_examples() {
        let curve = one_point_curve(1, 3);
        let b = bundle(curve.clone(), vec![(-1, vec![rat(1, 3)])]);
        assert_eq!(b.dual(), bundle(curve.clone(), vec![(0, vec![rat(2, 3)])]));

        let plain = bundle(curve.clone(), vec![(5, vec![Rational::zero()])]);
        assert_eq!(plain.dual(), bundle(curve.clone(), vec![(-5, vec![Rational::zero()])]));

        // Involution and the unit law L (x) L^dual = unit.
        let b = bundle(curve.clone(), vec![(-2, vec![rat(2, 3)])]);
        assert_eq!(b.dual().dual(), b);
        assert_eq!(b.tensor(&b.dual()).unwrap(), SplitBundle::unit(curve));
    }

    #[test]
    fn hom_composes_dual_and_tensor() {
        let curve = one_point_curve(1, 4);
        let a = bundle(curve.clone(), vec![(0, vec![rat(1, 4)])]);
        let c = bundle(curve.clone(), vec![(0, vec![rat(3, 4)])]);
        assert_eq!(
            a.hom(&c).unwrap(),
            bundle(curve.clone(), vec![(0, vec![rat(1, 2)])])
        );

        let u = SplitBundle::unit(curve);
        assert_eq!(u.hom(&c).unwrap(), c);
        // hom(B, B) contains one unit piece per piece of B.
        let h = c.hom(&c).unwrap();
        assert_eq!(h, u);
    }

    #[test]
    fn filtration_groups_and_divides() {
        let curve = one_point_curve(1, 4);
        let b = bundle(
            curve,
            vec![
                (0, vec![rat(1, 4)]),
                (2, vec![rat(1, 4)]),
                (0, vec![rat(3, 4)]),
            ],
        );
        let steps = b.ms_filtration(0).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(
            (steps[0].weight.clone(), steps[0].multiplicity, steps[0].a, steps[0].e),
            (rat(1, 4), 2, 0, 1)
        );
        assert_eq!(
            (steps[1].weight.clone(), steps[1].multiplicity, steps[1].a, steps[1].e),
            (rat(3, 4), 1, 0, 3)
        );

        let b = bundle(one_point_curve(2, 2), vec![(0, vec![rat(1, 2)])]);
        let steps = b.ms_filtration(0).unwrap();
        assert_eq!((steps[0].a, steps[0].e), (1, 0));

        let b = bundle(one_point_curve(2, 5), vec![(0, vec![rat(2, 5)])]);
        let steps = b.ms_filtration(0).unwrap();
        assert_eq!((steps[0].a, steps[0].e), (0, 4));
    }

    #[test]
    fn validate_reports_bad_weights() {
        let curve = one_point_curve(1, 2);
        let bad = SplitBundle {
            curve: curve.clone(),
            pieces: vec![ParaLine::new(0, vec![rat(5, 4)])],
        };
        let problems = bad.validate();
        assert!(problems.iter().any(|p| p.contains("weight out of [0,1)")), "{problems:?}");

        let bad = SplitBundle {
            curve,
            pieces: vec![ParaLine::new(0, vec![rat(1, 3)])],
        };
        let problems = bad.validate();
        assert!(problems.iter().any(|p| p.contains("divisibility violation")), "{problems:?}");

        assert!(SplitBundle::unit(one_point_curve(1, 2)).validate().is_empty());
    }

    #[test]
    fn equality_ignores_piece_order() {
        let curve = one_point_curve(1, 2);
        let a = SplitBundle {
            curve: curve.clone(),
            pieces: vec![
                ParaLine::new(1, vec![Rational::zero()]),
                ParaLine::new(0, vec![rat(1, 2)]),
            ],
        };
        let b = SplitBundle {
            curve,
            pieces: vec![
                ParaLine::new(0, vec![rat(1, 2)]),
                ParaLine::new(1, vec![Rational::zero()]),
            ],
        };
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_degree_matches_hand_maximization() {
        let curve = one_point_curve(1, 4);
        let a = ParaLine::new(0, vec![rat(1, 4)]);
        let b = ParaLine::new(0, vec![rat(3, 4)]);
        assert_eq!(
            tensor_oracle_degree(&a, &b, &curve, &[Rational::zero()]).unwrap(),
            1
        );

        let curve = one_point_curve(2, 3);
        let a = ParaLine::new(0, vec![rat(1, 3)]);
        let b = ParaLine::new(0, vec![rat(1, 3)]);
        assert_eq!(
            tensor_oracle_degree(&a, &b, &curve, &[Rational::zero()]).unwrap(),
            0
        );

        // Weightless pieces reduce to plain degree addition.
        let curve = one_point_curve(3, 5);
        let a = ParaLine::new(2, vec![Rational::zero()]);
        let b = ParaLine::new(-7, vec![Rational::zero()]);
        assert_eq!(
            tensor_oracle_degree(&a, &b, &curve, &[Rational::zero()]).unwrap(),
            -5
        );
    }

    #[test]
    fn bundle_json_round_trips() {
        let curve = two_point_curve(4, 2);
        let b = bundle(
            curve,
            vec![(-1, vec![rat(3, 4), rat(1, 2)]), (0, vec![Rational::zero(), Rational::zero()])],
        );
        let text = serde_json::to_string(&b).unwrap();
        let back: SplitBundle = serde_json::from_str(&text).unwrap();
        let back = back.into_checked().unwrap();
        assert_eq!(back, b);
        assert!(text.contains("\"multiplicity\":1"));
        assert!(text.contains("\"num\":3"));
    }
}
