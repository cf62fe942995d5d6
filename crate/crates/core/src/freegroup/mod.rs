//! Free groups, their endomorphisms, the integral group ring, and Fox
//! free differential calculus.
//!
//! Conventions used throughout the crate:
//!
//! * `compose(φ, ψ)` is the endomorphism `x ↦ ψ(φ(x))`, so a braid word is
//!   read left to right;
//! * the Jacobian has one row per image `φ(x_j)` and one column per
//!   derivative `∂_i`, i.e. `J[j][i] = ∂_i φ(x_j)`.
//!
//! With these two choices the chain rule reads `J_{compose(φ,ψ)} = J_φ^ψ · J_ψ`
//! with the entries of `J_φ^ψ` on the left of each product.

mod group_ring;
mod word;

pub use group_ring::GroupRingElement;
pub use word::FreeWord;

use num_bigint::BigInt;
use thiserror::Error;

use crate::matrix::RingMatrix;
use crate::ring::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("generator x{index} exceeds the rank {rank}")]
    IndexOutOfRank { index: u32, rank: usize },
    #[error("ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
}

/// Endomorphism of F_n given by the images of the generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endomorphism {
    images: Vec<FreeWord>,
}

impl Endomorphism {
    pub fn new(images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        if let Some(index) = images
            .iter()
            .map(FreeWord::max_index)
            .find(|&m| m as usize > rank)
        {
            return Err(FreeGroupError::IndexOutOfRank { index, rank });
        }
        Ok(Endomorphism { images })
    }

    pub fn identity(rank: usize) -> Self {
        Endomorphism {
            images: (1..=rank as i32).map(FreeWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Images of x_1, …, x_n.
    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    fn check(&self, w: &FreeWord) -> Result<(), FreeGroupError> {
        match w.max_index() {
            m if m as usize > self.rank() => Err(FreeGroupError::IndexOutOfRank {
                index: m,
                rank: self.rank(),
            }),
            _ => Ok(()),
        }
    }

    fn apply_unchecked(&self, w: &FreeWord) -> FreeWord {
        let mut letters: Vec<i32> = Vec::new();
        for &l in w.letters() {
            let image = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                letters.extend_from_slice(image.letters());
            } else {
                letters.extend(image.letters().iter().rev().map(|x| -x));
            }
        }
        FreeWord::reduce(letters)
    }

    /// Reduced image of a word.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        self.check(w)?;
        Ok(self.apply_unchecked(w))
    }

    /// Linear extension to the group ring.
    pub fn apply_element(&self, e: &GroupRingElement) -> Result<GroupRingElement, FreeGroupError> {
        for (w, _) in e.terms() {
            self.check(w)?;
        }
        Ok(e.map_words(|w| self.apply_unchecked(w)))
    }

    /// `x ↦ ψ(φ(x))` where `self` is φ.
    pub fn compose(&self, psi: &Endomorphism) -> Result<Endomorphism, FreeGroupError> {
        if self.rank() != psi.rank() {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank(),
                right: psi.rank(),
            });
        }
        Ok(Endomorphism {
            images: self.images.iter().map(|w| psi.apply_unchecked(w)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }
}

/// Fox derivative ∂_i of a single word: the sum of the prefixes before each
/// occurrence of x_i, minus the prefixes through each occurrence of x_i^-1.
pub fn fox_derivative_word(i: u32, w: &FreeWord) -> GroupRingElement {
    assert!(i >= 1, "generator indices start at 1");
    let i = i as i32;
    let mut terms = Vec::new();
    let letters = w.letters();
    for (pos, &l) in letters.iter().enumerate() {
        if l == i {
            terms.push((
                FreeWord::reduce(letters[..pos].iter().copied()),
                BigInt::from(1),
            ));
        } else if l == -i {
            terms.push((
                FreeWord::reduce(letters[..=pos].iter().copied()),
                BigInt::from(-1),
            ));
        }
    }
    GroupRingElement::from_terms(terms)
}

/// Fox derivative ∂_i, extended linearly to Z F_n.
pub fn fox_derivative(i: u32, e: &GroupRingElement) -> GroupRingElement {
    GroupRingElement::from_terms(e.terms().flat_map(|(w, c)| {
        fox_derivative_word(i, w)
            .terms()
            .map(|(u, d)| (u.clone(), c * d))
            .collect::<Vec<_>>()
    }))
}

/// Jacobian with `J[j][i] = ∂_i φ(x_j)`.
pub fn jacobian(phi: &Endomorphism) -> RingMatrix<GroupRingElement> {
    let n = phi.rank();
    let mut m = RingMatrix::zero(n);
    for (j, image) in phi.images().iter().enumerate() {
        for i in 0..n {
            m.set(j, i, fox_derivative_word(i as u32 + 1, image));
        }
    }
    m
}

/// Applies an endomorphism to every entry of a group-ring matrix.
pub fn apply_entrywise(
    psi: &Endomorphism,
    m: &RingMatrix<GroupRingElement>,
) -> Result<RingMatrix<GroupRingElement>, FreeGroupError> {
    let n = m.dim();
    let mut out = RingMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, psi.apply_element(m.get(i, j))?);
        }
    }
    Ok(out)
}

/// Ring homomorphism Z F_n → Z[t^±1] sending each x_i to `t^{e_i}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Abelianization {
    exponents: Vec<i64>,
}

impl Abelianization {
    pub fn new(exponents: Vec<i64>) -> Self {
        Abelianization { exponents }
    }

    /// Every generator to `t`.
    pub fn burau(rank: usize) -> Self {
        Self::new(vec![1; rank])
    }

    /// Odd-indexed generators to `t`, even-indexed to `t^-1`.
    pub fn wada(rank: usize) -> Self {
        Self::new(
            (1..=rank)
                .map(|i| if i % 2 == 1 { 1 } else { -1 })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `t` in the image of `x_i` (1-based).
    pub fn exponent(&self, i: u32) -> i64 {
        self.exponents[i as usize - 1]
    }

    pub fn word_exponent(&self, w: &FreeWord) -> i64 {
        w.letters()
            .iter()
            .map(|&l| l.signum() as i64 * self.exponent(l.unsigned_abs()))
            .sum()
    }

    pub fn apply(&self, e: &GroupRingElement) -> LaurentPoly {
        LaurentPoly::from_terms(e.terms().map(|(w, c)| (self.word_exponent(w), c.clone())))
    }

    pub fn apply_matrix(&self, m: &RingMatrix<GroupRingElement>) -> RingMatrix<LaurentPoly> {
        m.map(|e| self.apply(e))
    }
}

/// `α(J_φ)` computed straight from the image words: walks each image once,
/// tracking only `α` of the current prefix instead of the prefix itself.
pub fn abelianized_jacobian(phi: &Endomorphism, alpha: &Abelianization) -> RingMatrix<LaurentPoly> {
    let n = phi.rank();
    let mut m = RingMatrix::zero(n);
    for (j, image) in phi.images().iter().enumerate() {
        let mut row: Vec<Vec<(i64, BigInt)>> = vec![Vec::new(); n];
        let mut prefix = 0i64;
        for &l in image.letters() {
            let idx = l.unsigned_abs();
            let e = alpha.exponent(idx);
            if l > 0 {
                row[idx as usize - 1].push((prefix, BigInt::from(1)));
                prefix += e;
            } else {
                prefix -= e;
                row[idx as usize - 1].push((prefix, BigInt::from(-1)));
            }
        }
        for (i, terms) in row.into_iter().enumerate() {
            m.set(j, i, LaurentPoly::from_terms(terms));
        }
    }
    m
}

/// `α(ψ(J_φ)) == α(J_φ)`: the condition under which `φ ↦ α(J_φ)` is multiplicative.
pub fn check_representation_condition(
    phi: &Endomorphism,
    psi: &Endomorphism,
    alpha: &Abelianization,
) -> Result<bool, FreeGroupError> {
    if phi.rank() != psi.rank() {
        return Err(FreeGroupError::RankMismatch {
            left: phi.rank(),
            right: psi.rank(),
        });
    }
    let j = jacobian(phi);
    let moved = apply_entrywise(psi, &j)?;
    Ok(alpha.apply_matrix(&moved) == alpha.apply_matrix(&j))
}

/// Abelianized Alexander matrix of the presentation
/// `⟨x_1..x_n | x_i^-1 φ(x_i)⟩`, from Fox derivatives of the relators.
/// Row `i` is the relator, column `j` the derivative ∂_j.
pub fn alexander_matrix_of_endomorphism(
    phi: &Endomorphism,
    alpha: &Abelianization,
) -> RingMatrix<LaurentPoly> {
    let n = phi.rank();
    let mut m = RingMatrix::zero(n);
    for (i, image) in phi.images().iter().enumerate() {
        let relator = FreeWord::generator(-(i as i32 + 1)).concat(image);
        for j in 0..n {
            m.set(
                i,
                j,
                alpha.apply(&fox_derivative_word(j as u32 + 1, &relator)),
            );
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> FreeWord {
        FreeWord::reduce(letters.iter().copied())
    }

    fn artin_sigma1() -> Endomorphism {
        Endomorphism::new(vec![w(&[1, 2, -1]), w(&[1])]).unwrap()
    }

    #[test]
    fn apply_artin_generator() {
        let phi = artin_sigma1();
        assert_eq!(phi.apply(&w(&[1])).unwrap(), w(&[1, 2, -1]));
        assert_eq!(phi.apply(&w(&[2])).unwrap(), w(&[1]));
        let id = Endomorphism::identity(3);
        assert_eq!(id.apply(&w(&[3, -1, 2])).unwrap(), w(&[3, -1, 2]));
        assert_eq!(
            phi.apply(&w(&[3])),
            Err(FreeGroupError::IndexOutOfRank { index: 3, rank: 2 })
        );
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let phi = artin_sigma1();
        let inv = Endomorphism::new(vec![w(&[2]), w(&[-2, 1, 2])]).unwrap();
        assert!(phi.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&phi).unwrap().is_identity());
        assert_eq!(phi.compose(&Endomorphism::identity(2)).unwrap(), phi);
        assert!(phi.compose(&Endomorphism::identity(3)).is_err());
    }

    #[test]
    fn fox_worked_example() {
        let u = w(&[1, 2, -1, 2]);
        let d = fox_derivative_word(1, &u);
        let expected = GroupRingElement::from_terms([
            (w(&[1, 2, -1]), BigInt::from(-1)),
            (FreeWord::empty(), BigInt::from(1)),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn fox_on_generators_and_inverses() {
        for i in 1..=3u32 {
            for j in 1..=3i32 {
                let d = fox_derivative_word(i, &FreeWord::generator(j));
                let expected = if i as i32 == j {
                    GroupRingElement::one()
                } else {
                    GroupRingElement::zero()
                };
                assert_eq!(d, expected);
            }
        }
        let d = fox_derivative_word(1, &w(&[-1]));
        assert_eq!(
            d,
            GroupRingElement::from_terms([(w(&[-1]), BigInt::from(-1))])
        );
        assert!(fox_derivative_word(1, &FreeWord::empty()).is_zero());
    }

    #[test]
    fn artin_jacobian_cell() {
        let j = jacobian(&artin_sigma1());
        let one = GroupRingElement::one();
        assert_eq!(
            *j.get(0, 0),
            &one - &GroupRingElement::from_word(w(&[1, 2, -1]))
        );
        assert_eq!(*j.get(0, 1), GroupRingElement::from_word(w(&[1])));
        assert_eq!(*j.get(1, 0), one);
        assert!(j.get(1, 1).is_zero());
        assert_eq!(
            jacobian(&Endomorphism::identity(3)),
            RingMatrix::identity(3)
        );
    }

    #[test]
    fn abelianization_examples() {
        let e = &GroupRingElement::one() - &GroupRingElement::from_word(w(&[1, 2, -1]));
        let a = Abelianization::burau(2).apply(&e);
        assert_eq!(a, "1 - t".parse().unwrap());
        assert!(Abelianization::burau(2)
            .apply(&GroupRingElement::zero())
            .is_zero());
    }

    #[test]
    fn streaming_jacobian_matches_group_ring_route() {
        let phi =
            Endomorphism::new(vec![w(&[1, 1, 2, -3]), w(&[-2, -1, 2]), w(&[3, -1, 2, 1])]).unwrap();
        for alpha in [Abelianization::burau(3), Abelianization::wada(3)] {
            assert_eq!(
                abelianized_jacobian(&phi, &alpha),
                alpha.apply_matrix(&jacobian(&phi))
            );
        }
    }

    #[test]
    fn identity_alexander_matrix_is_zero() {
        let m =
            alexander_matrix_of_endomorphism(&Endomorphism::identity(3), &Abelianization::burau(3));
        assert!(m.is_zero());
    }

    #[test]
    fn representation_condition_trivial_psi() {
        let phi = Endomorphism::new(vec![w(&[2, 2, -1]), w(&[1, 2])]).unwrap();
        let id = Endomorphism::identity(2);
        assert!(
            check_representation_condition(&phi, &id, &Abelianization::new(vec![3, -5])).unwrap()
        );
    }
}
