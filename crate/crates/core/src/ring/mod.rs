//! Exact coefficient rings: univariate and bivariate Laurent polynomials over
//! the integers, plus the dense polynomial machinery used for their gcds.

mod bilaurent;
mod dense;
mod laurent;
mod text;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use bilaurent::BiLaurentPoly;
pub use dense::{DensePoly, GcdDomain};
pub use laurent::LaurentPoly;
pub use text::ParseError;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("cannot evaluate a polynomial with negative exponents at zero")]
    ZeroEvaluationPoint,
}

/// Arithmetic on borrowed operands, the shape every ring here implements.
pub trait RingOps<R>:
    Sized + Add<Self, Output = R> + Sub<Self, Output = R> + Mul<Self, Output = R> + Neg<Output = R>
{
}

impl<'a, R> RingOps<R> for &'a R where
    &'a R:
        Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>
{
}

/// A (not necessarily commutative) ring with canonical element representation,
/// so that `==` is ring equality.
pub trait Ring: Clone + PartialEq + Eq + Debug + Display
where
    for<'a> &'a Self: RingOps<Self>,
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Forwards the owned-operand arithmetic traits to the borrowed implementations.
macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl std::ops::AddAssign<&$t> for $t {
            fn add_assign(&mut self, rhs: &$t) {
                *self = &*self + rhs;
            }
        }
        impl std::ops::SubAssign<&$t> for $t {
            fn sub_assign(&mut self, rhs: &$t) {
                *self = &*self - rhs;
            }
        }
    };
}
pub(crate) use forward_owned_ops;
