//! Exact scalar arithmetic: canonical rationals and cyclotomic integers.
//!
//! Two number types power everything else in the crate:
//!
//! - [`Rational`]: an arbitrary-precision rational kept in canonical reduced
//!   form (positive denominator, coprime parts). Floor and fractional part
//!   follow the true mathematical convention, so `floor(-5/4) = -2` and
//!   `frac` always lands in `[0, 1)`.
//! - [`CycElem`]: an element of `Z[x]/(x^r - 1)` with `x` standing for a
//!   primitive `r`-th root of unity. Working modulo `x^r - 1` instead of the
//!   cyclotomic polynomial keeps multiplication a plain cyclic convolution;
//!   the price is that one field element has many representatives.
//!   [`CycElem::as_integer`] decides whether a representative evaluates to a
//!   rational integer by reducing against the vanishing sums of roots of
//!   unity (the rotated prime-subgroup sums), which span every relation and
//!   require no cyclotomic-polynomial factorization.
//!
//! [`weight_multiplicities`] inverts character data: given the traces of the
//! powers of a finite-order operator, it recovers how often each eigenvalue
//! `zeta_r^j` occurs, exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

type BigRational = Ratio<BigInt>;

/// An exact rational number in canonical reduced form.
///
/// Canonical means the denominator is positive and coprime to the numerator;
/// the wrapped [`Ratio`] maintains that on every operation. Serialization
/// uses the `{"num": .., "den": ..}` object form, and deserialization
/// rejects anything non-canonical rather than normalizing it, so a value
/// round-trips byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing to canonical form. Errors on `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// Builds `num/den` but insists the pair is already canonical
    /// (`den >= 1`, `gcd(|num|, den) == 1`). This is the strict form used at
    /// every input boundary.
    pub fn new_canonical(num: i64, den: i64) -> Result<Self> {
        if den < 1 {
            return Err(Error::InvalidInput(format!(
                "non-canonical rational {num}/{den}: denominator must be positive"
            )));
        }
        if BigInt::from(num).abs().gcd(&BigInt::from(den)) != BigInt::one() {
            return Err(Error::InvalidInput(format!(
                "non-canonical rational {num}/{den}: not in lowest terms"
            )));
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// The integer `n` as a rational.
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The fraction `num/den` from big integers. Errors on `den == 0`.
    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True floor: the greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Floor narrowed to `i64`, erroring if it does not fit.
    pub fn floor_i64(&self) -> Result<i64> {
        self.floor()
            .to_i64()
            .ok_or_else(|| Error::InvalidInput("floor out of i64 range".into()))
    }

    /// Fractional part `self - floor(self)`, always in `[0, 1)`.
    pub fn frac(&self) -> Rational {
        Rational(&self.0 - BigRational::from_integer(self.0.floor().to_integer()))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The numerator and denominator as `i64`, if both fit.
    pub fn to_i64_pair(&self) -> Result<(i64, i64)> {
        let num = self
            .numer()
            .to_i64()
            .ok_or_else(|| Error::InvalidInput("rational numerator out of i64 range".into()))?;
        let den = self
            .denom()
            .to_i64()
            .ok_or_else(|| Error::InvalidInput("rational denominator out of i64 range".into()))?;
        Ok((num, den))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl std::ops::$trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"a"` or `"a/b"`, requiring canonical form (positive
    /// denominator, lowest terms), matching the JSON input policy.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |s: &str| Error::InvalidInput(format!("malformed rational '{s}'"));
        match s.split_once('/') {
            None => {
                let num: i64 = s.trim().parse().map_err(|_| bad(s))?;
                Ok(Rational::from_int(num))
            }
            Some((a, b)) => {
                let num: i64 = a.trim().parse().map_err(|_| bad(s))?;
                let den: i64 = b.trim().parse().map_err(|_| bad(s))?;
                Rational::new_canonical(num, den)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i64,
    den: i64,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (num, den) = self
            .to_i64_pair()
            .map_err(|e| S::Error::custom(e.to_string()))?;
        RationalRepr { num, den }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        Rational::new_canonical(repr.num, repr.den).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A cyclotomic integer: an element of `Z[x]/(x^order - 1)`.
///
/// `coeffs[k]` is the coefficient of `x^k`, where `x` denotes a primitive
/// `order`-th root of unity. Structural equality compares representatives;
/// use [`CycElem::eq_in_field`] for equality of the values they denote.
/// Elements constructed from integers keep every coefficient above index 0
/// at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl CycElem {
    /// The integer `n` at the given cyclotomic order.
    pub fn from_int(order: u64, n: impl Into<BigInt>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
        }
        let mut coeffs = vec![BigInt::zero(); order as usize];
        coeffs[0] = n.into();
        Ok(CycElem { order, coeffs })
    }

    /// The root of unity `x^k` (exponent taken mod the order).
    pub fn zeta_pow(order: u64, k: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
        }
        let mut coeffs = vec![BigInt::zero(); order as usize];
        coeffs[(k % order) as usize] = BigInt::one();
        Ok(CycElem { order, coeffs })
    }

    /// Builds an element from a full coefficient vector of length `order`.
    pub fn from_coeffs(order: u64, coeffs: Vec<BigInt>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
        }
        if coeffs.len() != order as usize {
            return Err(Error::InvalidInput(format!(
                "coefficient vector has length {}, expected {}",
                coeffs.len(),
                order
            )));
        }
        Ok(CycElem { order, coeffs })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn assert_same_order(&self, other: &CycElem) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic arithmetic requires matching orders"
        );
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycElem { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &CycElem) -> CycElem {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycElem { order: self.order, coeffs }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Cyclic convolution: multiplication modulo `x^order - 1`.
    pub fn mul(&self, other: &CycElem) -> CycElem {
        self.assert_same_order(other);
        let r = self.order as usize;
        let mut coeffs = vec![BigInt::zero(); r];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[(i + j) % r] += a * b;
            }
        }
        CycElem { order: self.order, coeffs }
    }

    /// Multiplication by the monomial `x^k`: a cyclic rotation.
    pub fn mul_monomial(&self, k: u64) -> CycElem {
        let r = self.order as usize;
        let k = (k % self.order) as usize;
        let mut coeffs = vec![BigInt::zero(); r];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[(i + k) % r] = a.clone();
        }
        CycElem { order: self.order, coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> CycElem {
        CycElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
        }
    }

    /// Reinterprets the element at a larger order (the old order must divide
    /// the new one): `x_old = x_new^(new/old)`.
    pub fn embed(&self, new_order: u64) -> Result<CycElem> {
        if new_order == 0 || new_order % self.order != 0 {
            return Err(Error::InvalidInput(format!(
                "cannot embed order {} into order {}",
                self.order, new_order
            )));
        }
        let stride = (new_order / self.order) as usize;
        let mut coeffs = vec![BigInt::zero(); new_order as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i * stride] = a.clone();
        }
        Ok(CycElem { order: new_order, coeffs })
    }

    /// Decides whether this representative evaluates to a rational integer,
    /// returning the integer if so.
    ///
    /// The kernel of evaluation `Z[x]/(x^r - 1) -> Z[zeta_r]` is spanned by
    /// the rotated prime-subgroup sums `x^a * (1 + x^(r/p) + x^(2r/p) + ..)`
    /// over primes `p | r`; an integer vector evaluates to `q` exactly when
    /// it is `q*e_0` plus a rational combination of those. For prime `r`
    /// this degenerates to "all coefficients above index 0 equal".
    pub fn as_integer(&self) -> Option<BigInt> {
        VanishingSums::new(self.order).as_integer(&self.coeffs)
    }

    /// Equality of the denoted field elements (not of representatives).
    pub fn eq_in_field(&self, other: &CycElem) -> bool {
        self.sub(other).as_integer() == Some(BigInt::zero())
    }
}

/// Reduction context against the vanishing sums of `order`-th roots of
/// unity: a row-reduced basis of the evaluation kernel plus the reduced
/// image of `e_0`, reusable across many queries at the same order.
pub(crate) struct VanishingSums {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
    e0_reduced: Vec<BigRational>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl VanishingSums {
    pub(crate) fn new(order: u64) -> Self {
        let r = order as usize;
        let mut raw: Vec<Vec<BigRational>> = Vec::new();
        for p in prime_factors(order) {
            let stride = (order / p) as usize;
            for a in 0..stride {
                let mut row = vec![BigRational::zero(); r];
                for u in 0..p as usize {
                    row[a + stride * u] = BigRational::one();
                }
                raw.push(row);
            }
        }

        // Row-reduce the spanning set to echelon form with unit pivots.
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for mut row in raw {
            for (prow, &pcol) in rows.iter().zip(&pivots) {
                if !row[pcol].is_zero() {
                    let f = row[pcol].clone();
                    for (x, y) in row.iter_mut().zip(prow) {
                        *x -= &f * y;
                    }
                }
            }
            if let Some(pcol) = row.iter().position(|x| !x.is_zero()) {
                let inv = row[pcol].clone();
                for x in row.iter_mut() {
                    *x /= &inv;
                }
                rows.push(row);
                pivots.push(pcol);
            }
        }

        let mut e0 = vec![BigRational::zero(); r];
        e0[0] = BigRational::one();
        let e0_reduced = Self::reduce_with(&rows, &pivots, e0);
        VanishingSums { rows, pivots, e0_reduced }
    }

    fn reduce_with(
        rows: &[Vec<BigRational>],
        pivots: &[usize],
        mut v: Vec<BigRational>,
    ) -> Vec<BigRational> {
        for (row, &pcol) in rows.iter().zip(pivots) {
            if !v[pcol].is_zero() {
                let f = v[pcol].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub(crate) fn as_integer(&self, coeffs: &[BigInt]) -> Option<BigInt> {
        let v: Vec<BigRational> = coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let reduced = Self::reduce_with(&self.rows, &self.pivots, v);

        // e_0 never lies in the kernel span, so its reduction is nonzero and
        // the candidate quotient is unique.
        let anchor = self.e0_reduced.iter().position(|x| !x.is_zero())?;
        let q = &reduced[anchor] / &self.e0_reduced[anchor];
        for (x, y) in reduced.iter().zip(&self.e0_reduced) {
            if x != &(&q * y) {
                return None;
            }
        }
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }
}

/// Recovers eigenvalue multiplicities from trace data.
///
/// `traces[t]` must be the trace of the `t`-th power of an operator whose
/// order divides `r`. The result `m[j]` counts the eigenvalue `zeta_r^j`,
/// obtained from the exact inverse character sum
/// `m_j = (1/r) * sum_t traces[t] * zeta_r^(-j t)`.
///
/// All traces must share one cyclotomic order; the sum is evaluated at
/// `lcm(that order, r)`. Errors if any `m_j` fails to be a nonnegative
/// integer, if `r` does not divide the character sum, or if the
/// multiplicities do not add up to `traces[0]` (the dimension).
pub fn weight_multiplicities(r: u64, traces: &[CycElem]) -> Result<Vec<BigInt>> {
    if r == 0 {
        return Err(Error::InvalidInput("order must be positive".into()));
    }
    if traces.len() != r as usize {
        return Err(Error::InvalidInput(format!(
            "expected {} traces, got {}",
            r,
            traces.len()
        )));
    }
    let base = traces[0].order();
    if traces.iter().any(|t| t.order() != base) {
        return Err(Error::InvalidInput(
            "traces must share one cyclotomic order".into(),
        ));
    }

    let l = lcm(base, r);
    let embedded: Vec<CycElem> = traces
        .iter()
        .map(|t| t.embed(l))
        .collect::<Result<_>>()?;
    let stride = l / r;
    let sums = VanishingSums::new(l);
    let big_r = BigInt::from(r);

    let dim = sums
        .as_integer(traces[0].embed(l)?.coeffs())
        .ok_or_else(|| Error::InvalidInput("traces[0] is not a rational integer".into()))?;

    let mut out = Vec::with_capacity(r as usize);
    let mut total = BigInt::zero();
    for j in 0..r {
        let mut sum = CycElem::from_int(l, 0)?;
        for (t, trace) in embedded.iter().enumerate() {
            // zeta_r^(-j t) = x^(stride * ((-j t) mod r)) at order l.
            let e = r - ((j as u128 * t as u128) % r as u128) as u64;
            sum = sum.add(&trace.mul_monomial(stride * (e % r)));
        }
        let value = sums
            .as_integer(sum.coeffs())
            .ok_or_else(|| Error::InvalidInput(format!("non-integer multiplicity at weight {j}")))?;
        let (quot, rem) = value.div_rem(&big_r);
        if !rem.is_zero() {
            return Err(Error::InvalidInput(format!(
                "character sum at weight {j} is not divisible by {r}"
            )));
        }
        if quot.is_negative() {
            return Err(Error::InvalidInput(format!(
                "negative multiplicity at weight {j}"
            )));
        }
        total += &quot;
        out.push(quot);
    }
    if total != dim {
        return Err(Error::InvalidInput(format!(
            "multiplicities sum to {total}, expected dimension {dim}"
        )));
    }
    Ok(out)
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den).unwrap()
    }

    #[test]
    fn floor_is_mathematical() {
        assert_eq!(rat(-5, 4).floor(), BigInt::from(-2));
        assert_eq!(rat(5, 4).floor(), BigInt::from(1));
        assert_eq!(rat(-8, 4).floor(), BigInt::from(-2));
        assert_eq!(Rational::zero().floor(), BigInt::zero());
    }

    #[test]
    fn frac_lands_in_unit_interval() {
        assert_eq!(rat(-1, 4).frac(), rat(3, 4));
        assert_eq!(rat(9, 4).frac(), rat(1, 4));
        assert_eq!(rat(-2, 1).frac(), Rational::zero());
    }

    #[test]
    fn canonical_constructor_rejects_unreduced() {
        assert!(Rational::new_canonical(2, 4).is_err());
        assert!(Rational::new_canonical(1, -2).is_err());
        assert!(Rational::new_canonical(0, 2).is_err());
        assert!(Rational::new_canonical(0, 1).is_ok());
        assert!(Rational::new_canonical(-3, 4).is_ok());
    }

    #[test]
    fn rational_json_round_trip_and_rejection() {
        let q: Rational = serde_json::from_str(r#"{"num":-3,"den":4}"#).unwrap();
        assert_eq!(q, rat(-3, 4));
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"num":-3,"den":4}"#);
        let bad: std::result::Result<Rational, _> = serde_json::from_str(r#"{"num":2,"den":4}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn rational_parse_from_str() {
        assert_eq!("2/3".parse::<Rational>().unwrap(), rat(2, 3));
        assert_eq!("-3/4".parse::<Rational>().unwrap(), rat(-3, 4));
        assert_eq!("7".parse::<Rational>().unwrap(), rat(7, 1));
        assert!("4/6".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn zeta_multiplication_matches_hand_expansion() {
        let z4 = CycElem::zeta_pow(4, 1).unwrap();
        assert_eq!(z4.mul(&z4), CycElem::zeta_pow(4, 2).unwrap());

        // (1 + z3)(1 + z3^2) = 2 + z3 + z3^2, expanded by hand.
        let a = CycElem::from_int(3, 1)
            .unwrap()
            .add(&CycElem::zeta_pow(3, 1).unwrap());
        let b = CycElem::from_int(3, 1)
            .unwrap()
            .add(&CycElem::zeta_pow(3, 2).unwrap());
        let expected = CycElem::from_coeffs(
            3,
            vec![BigInt::from(2), BigInt::from(1), BigInt::from(1)],
        )
        .unwrap();
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn integrality_decision_handles_composite_order() {
        // 1 + x^2 vanishes at order 4 even though its coefficients above
        // index 0 are not all equal.
        let one_plus_x2 = CycElem::from_int(4, 1)
            .unwrap()
            .add(&CycElem::zeta_pow(4, 2).unwrap());
        assert_eq!(one_plus_x2.as_integer(), Some(BigInt::zero()));

        assert_eq!(
            CycElem::zeta_pow(4, 2).unwrap().as_integer(),
            Some(BigInt::from(-1))
        );
        assert_eq!(CycElem::zeta_pow(4, 1).unwrap().as_integer(), None);
        assert_eq!(CycElem::zeta_pow(3, 1).unwrap().as_integer(), None);

        // Full subgroup sum at prime order.
        let mut all_ones = CycElem::from_int(5, 0).unwrap();
        for k in 0..5 {
            all_ones = all_ones.add(&CycElem::zeta_pow(5, k).unwrap());
        }
        assert_eq!(all_ones.as_integer(), Some(BigInt::zero()));
    }

    #[test]
    fn field_equality_ignores_representatives() {
        // x + x^3 and 0 denote the same element at order 4.
        let a = CycElem::zeta_pow(4, 1)
            .unwrap()
            .add(&CycElem::zeta_pow(4, 3).unwrap());
        assert!(a.eq_in_field(&CycElem::from_int(4, 0).unwrap()));
        assert!(!a.eq_in_field(&CycElem::from_int(4, 1).unwrap()));
    }

    #[test]
    fn embedding_preserves_value() {
        // zeta_2 = -1 embeds to zeta_6^3 at order 6.
        let z2 = CycElem::zeta_pow(2, 1).unwrap();
        let embedded = z2.embed(6).unwrap();
        assert_eq!(embedded, CycElem::zeta_pow(6, 3).unwrap());
        assert_eq!(embedded.as_integer(), Some(BigInt::from(-1)));
        assert!(z2.embed(5).is_err());
    }

    fn int_traces(order: u64, values: &[i64]) -> Vec<CycElem> {
        values
            .iter()
            .map(|&v| CycElem::from_int(order, v).unwrap())
            .collect()
    }

    #[test]
    fn multiplicities_from_integer_traces() {
        let m = weight_multiplicities(4, &int_traces(4, &[2, 0, -2, 0])).unwrap();
        assert_eq!(m, vec![0, 1, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());

        let m = weight_multiplicities(3, &int_traces(3, &[1, 1, 1])).unwrap();
        assert_eq!(m, vec![1, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>());

        let m = weight_multiplicities(2, &int_traces(2, &[2, -2])).unwrap();
        assert_eq!(m, vec![0, 2].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn multiplicities_reject_non_character_data() {
        let err = weight_multiplicities(2, &int_traces(2, &[1, 0])).unwrap_err();
        assert!(err.to_string().contains("not divisible"), "{err}");

        let err = weight_multiplicities(2, &int_traces(2, &[0, 2])).unwrap_err();
        assert!(err.to_string().contains("negative multiplicity"), "{err}");

        assert!(weight_multiplicities(3, &int_traces(3, &[1, 1])).is_err());
    }

    #[test]
    fn multiplicities_from_symbolic_traces() {
        // Eigenvalues {zeta_4, zeta_4^3}: traces given as symbolic sums.
        let tr = |t: u64| {
            CycElem::zeta_pow(4, t % 4)
                .unwrap()
                .add(&CycElem::zeta_pow(4, (3 * t) % 4).unwrap())
        };
        let traces: Vec<CycElem> = (0..4).map(tr).collect();
        let m = weight_multiplicities(4, &traces).unwrap();
        assert_eq!(m, vec![0, 1, 0, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }
}
