use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::FreeWord;
use crate::ring::{forward_owned_ops, Ring};

/// Element of the integral group ring Z F_n: a finite integer combination of
/// reduced words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::empty())
    }

    pub fn from_word(w: FreeWord) -> Self {
        Self::from_terms([(w, BigInt::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FreeWord, BigInt)>) -> Self {
        let mut map: BTreeMap<FreeWord, BigInt> = BTreeMap::new();
        for (w, c) in terms {
            *map.entry(w).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        GroupRingElement { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f` to every word, extended linearly.
    pub fn map_words(&self, f: impl Fn(&FreeWord) -> FreeWord) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }
}

impl<'a> Add<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        GroupRingElement::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }
}

impl<'a> Sub<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        GroupRingElement::from_terms(
            self.terms
                .iter()
                .flat_map(|(u, a)| rhs.terms.iter().map(move |(v, b)| (u.concat(v), a * b))),
        )
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

forward_owned_ops!(GroupRingElement);

impl Ring for GroupRingElement {
    fn zero() -> Self {
        GroupRingElement::zero()
    }
    fn one() -> Self {
        GroupRingElement::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<FreeWord> for GroupRingElement {
    fn from(w: FreeWord) -> Self {
        Self::from_word(w)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let sign = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{sign}{w}")?;
            } else if w.is_empty() {
                write!(f, "{sign}{abs}")?;
            } else {
                write!(f, "{sign}{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}
