use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use super::dense::{self, DensePoly};
use super::text::{self, ParseError};
use super::{forward_owned_ops, LaurentPoly, Ring};

/// Monomial exponents `(s, t)`.
type Exp = (i64, i64);

/// Integer Laurent polynomial in `s` and `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiLaurentPoly {
    terms: BTreeMap<Exp, BigInt>,
}

/// Display and "leading term" order: by t-exponent, then s-exponent.
fn display_key(&(s, t): &Exp) -> (i64, i64) {
    (t, s)
}

impl BiLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn s() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * s^s_exp * t^t_exp`.
    pub fn monomial(c: impl Into<BigInt>, s_exp: i64, t_exp: i64) -> Self {
        Self::from_terms([((s_exp, t_exp), c.into())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, BigInt)>) -> Self {
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        BiLaurentPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Embeds a univariate polynomial in `t`.
    pub fn from_t(p: &LaurentPoly) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    /// `p(s·t)`: every `t^k` becomes `s^k t^k`.
    pub fn substitute_st(p: &LaurentPoly) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, e), c.clone())))
    }

    /// Sets `s = 1`.
    pub fn specialize_s1(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&(_, t), c)| (t, c.clone())))
    }

    pub fn shift(&self, ds: i64, dt: i64) -> Self {
        BiLaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(s, t), c)| ((s + ds, t + dt), c.clone()))
                .collect(),
        }
    }

    fn min_exponents(&self) -> Option<Exp> {
        let s = self.terms.keys().map(|e| e.0).min()?;
        let t = self.terms.keys().map(|e| e.1).min()?;
        Some((s, t))
    }

    fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| display_key(e))
            .map(|(_, c)| c)
    }

    /// Canonical associate under the units ±s^j t^k: no negative exponents,
    /// both minimum exponents zero, positive coefficient on the term that
    /// prints first.
    pub fn normalize(&self) -> Self {
        let Some((ms, mt)) = self.min_exponents() else {
            return Self::zero();
        };
        let shifted = self.shift(-ms, -mt);
        if shifted
            .leading_coeff()
            .is_some_and(|c| c.sign() == Sign::Minus)
        {
            -&shifted
        } else {
            shifted
        }
    }

    pub fn unit_equal(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// `self = s^a t^b · P` with P a polynomial in Z[s][t] (outer variable t).
    fn to_dense(&self) -> (Exp, DensePoly<DensePoly<BigInt>>) {
        let Some((ms, mt)) = self.min_exponents() else {
            return ((0, 0), <DensePoly<_> as dense::GcdDomain>::zero());
        };
        let t_len = (self.terms.keys().map(|e| e.1).max().unwrap() - mt + 1) as usize;
        let s_len = (self.terms.keys().map(|e| e.0).max().unwrap() - ms + 1) as usize;
        let mut rows = vec![vec![BigInt::zero(); s_len]; t_len];
        for (&(s, t), c) in &self.terms {
            rows[(t - mt) as usize][(s - ms) as usize] = c.clone();
        }
        let outer = rows.into_iter().map(DensePoly::new).collect();
        ((ms, mt), DensePoly::new(outer))
    }

    fn from_dense((ms, mt): Exp, p: &DensePoly<DensePoly<BigInt>>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().flat_map(|(ti, inner)| {
            inner
                .coeffs()
                .iter()
                .enumerate()
                .map(move |(si, c)| ((ms + si as i64, mt + ti as i64), c.clone()))
        }))
    }

    /// A gcd in the UFD Z[s^±1, t^±1], normalized.
    pub fn gcd(&self, other: &Self) -> Self {
        let (_, p) = self.to_dense();
        let (_, q) = other.to_dense();
        Self::from_dense((0, 0), &dense::GcdDomain::gcd(&p, &q)).normalize()
    }

    /// `Some(q)` with `q · divisor = self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return self.is_zero().then(Self::zero);
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let ((as_, at), p) = self.to_dense();
        let ((bs, bt), q) = divisor.to_dense();
        let quotient = dense::GcdDomain::div_exact(&p, &q)?;
        Some(Self::from_dense((as_ - bs, at - bt), &quotient))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }
}

impl<'a> Add<&'a BiLaurentPoly> for &'a BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: &'a BiLaurentPoly) -> BiLaurentPoly {
        BiLaurentPoly::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl<'a> Sub<&'a BiLaurentPoly> for &'a BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: &'a BiLaurentPoly) -> BiLaurentPoly {
        BiLaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c.clone()))
                .chain(rhs.terms.iter().map(|(e, c)| (*e, -c))),
        )
    }
}

impl<'a> Mul<&'a BiLaurentPoly> for &'a BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: &'a BiLaurentPoly) -> BiLaurentPoly {
        BiLaurentPoly::from_terms(self.terms.iter().flat_map(|(&(s1, t1), c1)| {
            rhs.terms
                .iter()
                .map(move |(&(s2, t2), c2)| ((s1 + s2, t1 + t2), c1 * c2))
        }))
    }
}

impl Neg for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn neg(self) -> BiLaurentPoly {
        BiLaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

forward_owned_ops!(BiLaurentPoly);

impl Ring for BiLaurentPoly {
    fn zero() -> Self {
        BiLaurentPoly::zero()
    }
    fn one() -> Self {
        BiLaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn power(var: char, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        e => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| std::cmp::Reverse(display_key(e)));
        let terms = ordered.into_iter().map(|(&(s, t), c)| {
            let mono: Vec<String> = [power('s', s), power('t', t)]
                .into_iter()
                .flatten()
                .collect();
            (c, mono.join("*"))
        });
        text::write_sum(f, terms)
    }
}

impl fmt::Debug for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiLaurentPoly({self})")
    }
}

impl FromStr for BiLaurentPoly {
    type Err = ParseError;
    fn from_str(src: &str) -> Result<Self, ParseError> {
        let terms = text::parse_sum(src, &['s', 't'])?;
        Ok(Self::from_terms(
            terms.into_iter().map(|(c, e)| ((e[0], e[1]), c)),
        ))
    }
}
