//! Dense polynomials over a gcd domain, with exact division and a primitive
//! pseudo-remainder gcd. Nesting `DensePoly<DensePoly<BigInt>>` gives Z[s][t].

use std::fmt::Debug;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Commutative domain with exact division and a gcd, as needed by the
/// primitive remainder sequence.
pub trait GcdDomain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `q * divisor == self`, or `None` when the division is not exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
    /// A gcd with non-negative leading sign.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading coefficient (recursively), used to pick canonical associates.
    fn leading_sign(&self) -> Sign;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl GcdDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return Zero::is_zero(self).then(<BigInt as Zero>::zero);
        }
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn leading_sign(&self) -> Sign {
        self.sign()
    }
}

/// Polynomial in one variable with coefficients in `R`, stored ascending and
/// trimmed so that the last coefficient is nonzero. The zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensePoly<R> {
    coeffs: Vec<R>,
}

impl<R: GcdDomain> DensePoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let zero = R::zero();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    fn shifted(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    /// Divides every coefficient by `c`; `None` if any division is inexact.
    pub fn div_exact_scalar(&self, c: &R) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    /// `lc(b)^k * self` reduced modulo `b`, for some k ≥ 0.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = GcdDomain::sub(&r.scale(&lb), &b.shifted(dr - db).scale(&lr));
        }
        r
    }

    /// Gcd of the coefficients, with the sign of the leading coefficient.
    pub fn content(&self) -> R {
        let g = self.coeffs.iter().fold(
            R::zero(),
            |acc, c| if acc.is_one() { acc } else { acc.gcd(c) },
        );
        match self.leading().map(GcdDomain::leading_sign) {
            Some(Sign::Minus) => g.neg(),
            _ => g,
        }
    }

    /// `self / content(self)`: leading sign positive, coefficients coprime.
    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        self.div_exact_scalar(&c)
            .expect("content divides every coefficient")
    }

    fn unit_normal(self) -> Self {
        match self.leading_sign() {
            Sign::Minus => GcdDomain::neg(&self),
            _ => self,
        }
    }
}

impl<R: GcdDomain> GcdDomain for DensePoly<R> {
    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.zip_with(other, R::add)
    }
    fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, R::sub)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return GcdDomain::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.leading().unwrap().div_exact(lb)?;
            r = GcdDomain::sub(&r, &divisor.shifted(dr - db).scale(&c));
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }
    fn gcd(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() {
            return other.clone().unit_normal();
        }
        if other.coeffs.is_empty() {
            return self.clone().unit_normal();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.coeffs.is_empty() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content).unit_normal()
    }
    fn leading_sign(&self) -> Sign {
        self.leading().map_or(Sign::NoSign, GcdDomain::leading_sign)
    }
}
