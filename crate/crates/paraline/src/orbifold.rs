//! Orbifold line-bundle data and its dictionary with parabolic bundles.
//!
//! On the root stack over a marked curve, a line bundle is determined by a
//! global twist degree `e` (a line bundle pulled back from the base) and one
//! exponent `w_i` of the canonical root line bundle at each point, with
//! `0 <= w_i < r_i` because that root line bundle has order `r_i` in the
//! local Picard group. [`OrbBundle::to_parabolic`] and
//! [`OrbBundle::from_parabolic`] translate to and from split parabolic
//! bundles (degree `e`, weights `w_i/r_i`); the two are mutually inverse on
//! normalized data.
//!
//! [`reduce_pair`] computes the reduced root-stack parameters
//! (`r_i / gcd(n_i, r_i)` with all multiplicities 1), and
//! [`OrbBundle::root_pullback`] carries a bundle along the reduction map,
//! deleting points whose divisibility collapses to 1.

use serde::{Deserialize, Serialize};

use crate::exact::{gcd, Rational};
use crate::parabolic::{weight_numerator, MarkedCurve, MarkedPoint, ParaLine, SplitBundle};
use crate::{Error, Result};

/// A rank-one orbifold piece: a twist degree plus one root-line-bundle
/// exponent per point, each in `[0, r_i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbLine {
    pub twist: i64,
    pub exponents: Vec<u64>,
}

impl OrbLine {
    pub fn new(twist: i64, exponents: Vec<u64>) -> Self {
        OrbLine { twist, exponents }
    }
}

/// A finite multiset of orbifold pieces on a common curve, stored in
/// canonical order (twist, then exponents lexicographically).
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
pub struct OrbBundle {
    pub curve: MarkedCurve,
    pub pieces: Vec<OrbLine>,
}

impl PartialEq for OrbBundle {
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

impl OrbBundle {
    pub fn new(curve: MarkedCurve, pieces: Vec<OrbLine>) -> Result<Self> {
        let bundle = OrbBundle { curve, pieces };
        let problems = bundle.validate();
        if let Some(p) = problems.first() {
            return Err(Error::InvalidInput(p.clone()));
        }
        Ok(bundle.canonicalized())
    }

    pub fn into_checked(self) -> Result<Self> {
        OrbBundle::new(self.curve, self.pieces)
    }

    /// The trivial orbifold bundle: one piece, zero twist, zero exponents.
    pub fn trivial(curve: MarkedCurve) -> Self {
        let piece = OrbLine::new(0, vec![0; curve.len()]);
        OrbBundle { curve, pieces: vec![piece] }
    }

    /// Diagnostics for every invariant violation; empty means valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = self.curve.validate();
        for (pi, piece) in self.pieces.iter().enumerate() {
            if piece.exponents.len() != self.curve.len() {
                out.push(format!(
                    "piece {pi} has {} exponents, curve has {} points",
                    piece.exponents.len(),
                    self.curve.len()
                ));
                continue;
            }
            for (w, point) in piece.exponents.iter().zip(&self.curve.points) {
                if *w >= point.divisibility {
                    out.push(format!(
                        "piece {pi}: exponent out of range: {w} at '{}' (r = {})",
                        point.label, point.divisibility
                    ));
                }
            }
        }
        out
    }

    fn canonicalized(mut self) -> Self {
        self.pieces.sort();
        self
    }

    /// The parabolic bundle with degree `e` and weights `w_i / r_i` per
    /// piece.
    pub fn to_parabolic(&self) -> Result<SplitBundle> {
        let pieces = self
            .pieces
            .iter()
            .map(|piece| {
                let weights = piece
                    .exponents
                    .iter()
                    .zip(&self.curve.points)
                    .map(|(w, point)| {
                        Rational::from_big((*w).into(), point.divisibility.into())
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ParaLine::new(piece.twist, weights))
            })
            .collect::<Result<Vec<_>>>()?;
        SplitBundle::new(self.curve.clone(), pieces)
    }

    /// The inverse dictionary: degree becomes the twist, each weight
    /// `w_i = s_i / r_i` becomes the exponent `s_i`.
    pub fn from_parabolic(bundle: &SplitBundle) -> Result<OrbBundle> {
        let pieces = bundle
            .pieces
            .iter()
            .map(|piece| {
                let exponents = piece
                    .weights
                    .iter()
                    .zip(&bundle.curve.points)
                    .map(|(w, point)| weight_numerator(w, point.divisibility))
                    .collect::<Result<Vec<_>>>()?;
                Ok(OrbLine::new(piece.degree, exponents))
            })
            .collect::<Result<Vec<_>>>()?;
        OrbBundle::new(bundle.curve.clone(), pieces)
    }

    /// Tensor product: twists add, exponents add with a carry — when a sum
    /// reaches `r_i` it wraps by `r_i` and the twist gains `n_i`, because
    /// the `r_i`-th power of the root line bundle is the pullback of
    /// `O(n_i p_i)`.
    pub fn tensor(&self, other: &OrbBundle) -> Result<OrbBundle> {
        if self.curve != other.curve {
            return Err(Error::CurveMismatch(
                "tensor operands live on different curves".into(),
            ));
        }
        let mut pieces = Vec::with_capacity(self.pieces.len() * other.pieces.len());
        for a in &self.pieces {
            for b in &other.pieces {
                let mut twist = (a.twist as i128) + (b.twist as i128);
                let mut exponents = Vec::with_capacity(a.exponents.len());
                for ((wa, wb), point) in a.exponents.iter().zip(&b.exponents).zip(&self.curve.points)
                {
                    let sum = wa + wb;
                    if sum >= point.divisibility {
                        twist += point.multiplicity as i128;
                        exponents.push(sum - point.divisibility);
                    } else {
                        exponents.push(sum);
                    }
                }
                let twist = i64::try_from(twist)
                    .map_err(|_| Error::InvalidInput("twist out of i64 range".into()))?;
                pieces.push(OrbLine::new(twist, exponents));
            }
        }
        Ok(OrbBundle { curve: self.curve.clone(), pieces }.canonicalized())
    }

    /// Pullback along the root-stack reduction map: per piece and point,
    /// write `n_i * w_i = a_i * r_i + e_i` (`0 <= e_i < r_i`); the exponent
    /// becomes `e_i / d_i` on divisibility `r_i / d_i` and the twist gains
    /// `sum_i a_i`. Points whose divisibility reduces to 1 are deleted;
    /// their residual exponent is necessarily 0.
    pub fn root_pullback(&self) -> Result<OrbBundle> {
        let reduced = reduce_pair(&self.curve);
        let kept: Vec<usize> = (0..reduced.points.len())
            .filter(|&i| reduced.points[i].divisibility > 1)
            .collect();
        let kept_curve = MarkedCurve::new(
            kept.iter().map(|&i| reduced.points[i].clone()).collect(),
        )?;

        let mut pieces = Vec::with_capacity(self.pieces.len());
        for piece in &self.pieces {
            let mut twist = piece.twist as i128;
            let mut residuals = Vec::with_capacity(piece.exponents.len());
            for (w, point) in piece.exponents.iter().zip(&self.curve.points) {
                let n = point.multiplicity as u128;
                let r = point.divisibility as u128;
                let d = gcd(point.multiplicity, point.divisibility) as u128;
                let nw = n * (*w as u128);
                twist += (nw / r) as i128;
                residuals.push(((nw % r) / d) as u64);
            }
            for (i, residual) in residuals.iter().enumerate() {
                if !kept.contains(&i) && *residual != 0 {
                    return Err(Error::Internal(format!(
                        "nonzero exponent {residual} at deleted point '{}'",
                        self.curve.points[i].label
                    )));
                }
            }
            let exponents = kept.iter().map(|&i| residuals[i]).collect();
            let twist = i64::try_from(twist)
                .map_err(|_| Error::InvalidInput("twist out of i64 range".into()))?;
            pieces.push(OrbLine::new(twist, exponents));
        }
        OrbBundle::new(kept_curve, pieces)
    }
}

/// The reduced root-stack parameters: every multiplicity becomes 1 and each
/// divisibility drops to `r_i / gcd(n_i, r_i)`. Points whose divisibility
/// reduces to 1 are removable (they carry no orbifold structure); callers
/// that delete them filter on `divisibility == 1`.
pub fn reduce_pair(curve: &MarkedCurve) -> MarkedCurve {
    let points = curve
        .points
        .iter()
        .map(|p| {
            MarkedPoint::new(
                p.label.clone(),
                1,
                p.divisibility / gcd(p.multiplicity, p.divisibility),
            )
        })
        .collect();
    // Labels stay distinct, so this cannot fail.
    MarkedCurve::new(points).expect("reduced curve is valid")
}
