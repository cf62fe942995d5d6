use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::dense::{self, DensePoly};
use super::text::{self, ParseError};
use super::{forward_owned_ops, Ring, RingError};

/// Integer Laurent polynomial in `t`: a sparse map exponent → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_terms([(exp, c.into())])
    }

    /// Builds from (exponent, coefficient) pairs, summing repeated exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    /// Convenience constructor from small coefficients.
    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Constant polynomial with no `t`, i.e. an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    /// Substitutes `t ↦ t^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact value at `t = v`.
    pub fn evaluate(&self, v: &BigRational) -> Result<BigRational, RingError> {
        if v.is_zero() {
            return match self.min_exponent() {
                Some(e) if e < 0 => Err(RingError::ZeroEvaluationPoint),
                _ => Ok(BigRational::from_integer(self.coeff(0))),
            };
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let power = if *e >= 0 {
                num_traits::pow(v.clone(), *e as usize)
            } else {
                num_traits::pow(v.recip(), e.unsigned_abs() as usize)
            };
            acc += power * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Integer value at an integer point; fails only at 0 with negative exponents.
    pub fn evaluate_integer(&self, v: i64) -> Result<BigRational, RingError> {
        self.evaluate(&BigRational::from_integer(v.into()))
    }

    /// Canonical associate under the units ±t^k: no negative exponents,
    /// nonzero constant term, positive leading coefficient.
    pub fn normalize(&self) -> Self {
        let Some(low) = self.min_exponent() else {
            return Self::zero();
        };
        let shifted = self.shift(-low);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            -&shifted
        } else {
            shifted
        }
    }

    /// `true` iff `self = ±t^k · other` for some k.
    pub fn unit_equal(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// Writes `self = t^k · P(t)` with `P(0) ≠ 0` and returns `(k, P)`.
    pub(crate) fn to_dense(&self) -> (i64, DensePoly<BigInt>) {
        let Some(low) = self.min_exponent() else {
            return (0, <DensePoly<_> as dense::GcdDomain>::zero());
        };
        let high = self.max_exponent().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, DensePoly::new(coeffs))
    }

    pub(crate) fn from_dense(shift: i64, p: &DensePoly<BigInt>) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// Generator of the ideal `(self, other)` of Z[t^±1], in normalized form.
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, p) = self.to_dense();
        let (_, q) = other.to_dense();
        Self::from_dense(0, &dense::GcdDomain::gcd(&p, &q)).normalize()
    }

    /// `Some(q)` with `q · divisor = self` in Z[t^±1].
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return self.is_zero().then(Self::zero);
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, p) = self.to_dense();
        let (b, q) = divisor.to_dense();
        let quotient = dense::GcdDomain::div_exact(&p, &q)?;
        Some(Self::from_dense(a - b, &quotient))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *terms.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

forward_owned_ops!(LaurentPoly);

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(e, c)| {
            let mono = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            (c, mono)
        });
        text::write_sum(f, terms)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let terms = text::parse_sum(s, &['t'])?;
        Ok(Self::from_terms(
            terms.into_iter().map(|(c, exps)| (exps[0], c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unit_cancellation_and_difference_of_squares() {
        assert_eq!(
            &LaurentPoly::t() * &LaurentPoly::monomial(1, -1),
            LaurentPoly::one()
        );
        assert_eq!(lp("1 - t") * lp("1 + t"), lp("1 - t^2"));
    }

    #[test]
    fn addition_matches_printed_sum() {
        let p = lp("t^-2 - 1") + -LaurentPoly::t();
        assert_eq!(p, LaurentPoly::from_i64_terms(&[(-2, 1), (0, -1), (1, -1)]));
        assert_eq!(p.to_string(), "-t - 1 + t^-2");
    }

    #[test]
    fn display_orders_by_decreasing_exponent() {
        assert_eq!(lp("t^-2 - 1 - t").to_string(), "-t - 1 + t^-2");
        assert_eq!(lp("t^3 + t^2 - 1").to_string(), "t^3 + t^2 - 1");
        assert_eq!(lp("-t^-2 + t^-1").to_string(), "t^-1 - t^-2");
        assert_eq!(lp("3t^2 - 4*t").to_string(), "3*t^2 - 4*t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_at_minus_one() {
        let at = |s: &str, v: i64| lp(s).evaluate_integer(v).unwrap().to_integer();
        assert_eq!(at("1 - t + t^2", -1), BigInt::from(3));
        assert_eq!(at("t^2 - 3t + 1", -1), BigInt::from(5));
        assert_eq!(at("0", 7), BigInt::from(0));
        assert_eq!(
            lp("t^-1 + 2").evaluate_integer(2).unwrap(),
            BigRational::new(5.into(), 2.into())
        );
    }

    #[test]
    fn evaluation_at_zero() {
        assert_eq!(
            lp("t^-1 + 1").evaluate_integer(0),
            Err(RingError::ZeroEvaluationPoint)
        );
        assert_eq!(
            lp("t + 4").evaluate_integer(0).unwrap(),
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(lp("t^2 - t").gcd(&lp("t - 1")), lp("t - 1"));
        assert_eq!(lp("3t").gcd(&lp("-3")), lp("3"));
        let p = lp("-2t^-1 + 4");
        assert_eq!(p.gcd(&LaurentPoly::zero()), p.normalize());
        assert_eq!(
            LaurentPoly::zero().gcd(&LaurentPoly::zero()),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(lp("t^-2 - 1 - t").normalize(), lp("t^3 + t^2 - 1"));
        assert_eq!(LaurentPoly::zero().normalize(), LaurentPoly::zero());
        assert_eq!(lp("-t + 1").normalize(), lp("t - 1"));
    }

    #[test]
    fn unit_equality() {
        assert!(lp("1 - t").unit_equal(&lp("t - 1")));
        assert!(lp("1 - t").unit_equal(&lp("-t^5 + t^4")));
        assert!(!lp("1 - t").unit_equal(&lp("1 + t")));
    }

    #[test]
    fn exact_division() {
        assert_eq!(lp("t^-1 - t").div_exact(&lp("1 + t")), Some(lp("t^-1 - 1")));
        assert_eq!(lp("1 + t^2").div_exact(&lp("1 + t")), None);
        assert_eq!(lp("6").div_exact(&lp("4")), None);
    }
}
