//! Burau, Wada and two-variable matrices of braid words, computed both from
//! generator cells and, for Burau and Wada, from abelianized Fox Jacobians.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::braid::{artin_automorphism, wada_automorphism, BraidWord};
use crate::freegroup::{abelianized_jacobian, Abelianization};
use crate::matrix::RingMatrix;
use crate::ring::{BiLaurentPoly, LaurentPoly, Ring};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RepresentationKind {
    Burau,
    Wada,
    TwoVariable,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 3] = [Self::Burau, Self::Wada, Self::TwoVariable];

    pub fn name(self) -> &'static str {
        match self {
            Self::Burau => "burau",
            Self::Wada => "wada",
            Self::TwoVariable => "twovar",
        }
    }
}

impl fmt::Display for RepresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepresentationKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown representation '{s}' (expected burau, wada or twovar)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: u32, strands: usize },
    #[error("the {0} representation has bivariate entries")]
    Bivariate(RepresentationKind),
}

/// A representation matrix over Z[t^±1] or Z[s^±1, t^±1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepMatrix {
    Univariate(RingMatrix<LaurentPoly>),
    Bivariate(RingMatrix<BiLaurentPoly>),
}

impl RepMatrix {
    pub fn dim(&self) -> usize {
        match self {
            RepMatrix::Univariate(m) => m.dim(),
            RepMatrix::Bivariate(m) => m.dim(),
        }
    }

    pub fn sub_identity(&self) -> Self {
        match self {
            RepMatrix::Univariate(m) => RepMatrix::Univariate(m.sub_identity()),
            RepMatrix::Bivariate(m) => RepMatrix::Bivariate(m.sub_identity()),
        }
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        match self {
            RepMatrix::Univariate(m) => m.to_string_rows(),
            RepMatrix::Bivariate(m) => m.to_string_rows(),
        }
    }

    pub fn as_univariate(&self) -> Option<&RingMatrix<LaurentPoly>> {
        match self {
            RepMatrix::Univariate(m) => Some(m),
            RepMatrix::Bivariate(_) => None,
        }
    }

    pub fn as_bivariate(&self) -> Option<&RingMatrix<BiLaurentPoly>> {
        match self {
            RepMatrix::Bivariate(m) => Some(m),
            RepMatrix::Univariate(_) => None,
        }
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepMatrix::Univariate(m) => m.fmt(f),
            RepMatrix::Bivariate(m) => m.fmt(f),
        }
    }
}

type Cell<R> = [[R; 2]; 2];

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_i64_terms(terms)
}

fn burau_cell(positive: bool) -> Cell<LaurentPoly> {
    if positive {
        [
            [lp(&[(0, 1), (1, -1)]), lp(&[(1, 1)])],
            [lp(&[(0, 1)]), lp(&[])],
        ]
    } else {
        [
            [lp(&[]), lp(&[(0, 1)])],
            [lp(&[(-1, 1)]), lp(&[(0, 1), (-1, -1)])],
        ]
    }
}

fn wada_cell(i: u32, positive: bool) -> Cell<LaurentPoly> {
    let cell = if positive {
        [
            [lp(&[(0, 1), (1, 1)]), lp(&[(2, 1)])],
            [lp(&[(0, -1)]), lp(&[(0, 1), (1, -1)])],
        ]
    } else {
        [
            [lp(&[(0, 1), (1, -1)]), lp(&[(2, -1)])],
            [lp(&[(0, 1)]), lp(&[(0, 1), (1, 1)])],
        ]
    };
    if i % 2 == 1 {
        cell
    } else {
        cell.map(|row| row.map(|e| e.invert_variable()))
    }
}

fn twovar_cell(positive: bool) -> Cell<BiLaurentPoly> {
    let m = BiLaurentPoly::monomial;
    if positive {
        [
            [&m(1, 0, 0) - &m(1, 1, 1), m(1, 0, 1)],
            [m(1, 1, 0), m(0, 0, 0)],
        ]
    } else {
        [
            [m(0, 0, 0), m(1, -1, 0)],
            [m(1, 0, -1), &m(1, 0, 0) - &m(1, -1, -1)],
        ]
    }
}

fn check_index(strands: usize, i: u32) -> Result<(), RepresentationError> {
    if i == 0 || i as usize >= strands {
        return Err(RepresentationError::IndexOutOfRange { index: i, strands });
    }
    Ok(())
}

/// Right-multiplies `m` by the identity with `cell` placed at rows and columns i, i+1.
fn mul_cell_right<R: Ring>(m: &mut RingMatrix<R>, i: u32, cell: &Cell<R>)
where
    for<'a> &'a R: crate::ring::RingOps<R>,
{
    let (a, b) = (i as usize - 1, i as usize);
    for r in 0..m.dim() {
        let (x, y) = (m.get(r, a).clone(), m.get(r, b).clone());
        m.set(r, a, &(&x * &cell[0][0]) + &(&y * &cell[1][0]));
        m.set(r, b, &(&x * &cell[0][1]) + &(&y * &cell[1][1]));
    }
}

fn embed<R: Ring>(strands: usize, i: u32, cell: &Cell<R>) -> RingMatrix<R>
where
    for<'a> &'a R: crate::ring::RingOps<R>,
{
    let mut m = RingMatrix::identity(strands);
    mul_cell_right(&mut m, i, cell);
    m
}

fn univariate_cell(kind: RepresentationKind, i: u32, positive: bool) -> Cell<LaurentPoly> {
    match kind {
        RepresentationKind::Burau => burau_cell(positive),
        RepresentationKind::Wada => wada_cell(i, positive),
        RepresentationKind::TwoVariable => unreachable!("bivariate kind"),
    }
}

/// The n×n matrix of σ_i^±1.
pub fn generator_matrix(
    kind: RepresentationKind,
    i: u32,
    positive: bool,
    strands: usize,
) -> Result<RepMatrix, RepresentationError> {
    check_index(strands, i)?;
    Ok(match kind {
        RepresentationKind::TwoVariable => {
            RepMatrix::Bivariate(embed(strands, i, &twovar_cell(positive)))
        }
        _ => RepMatrix::Univariate(embed(strands, i, &univariate_cell(kind, i, positive))),
    })
}

/// Product of generator matrices read left to right along the word; the
/// empty braid gives the identity.
pub fn braid_matrix(kind: RepresentationKind, beta: &BraidWord) -> RepMatrix {
    match kind {
        RepresentationKind::TwoVariable => RepMatrix::Bivariate(twovar_braid_matrix(beta)),
        _ => RepMatrix::Univariate(product(beta, |i, pos| univariate_cell(kind, i, pos))),
    }
}

/// Burau or Wada matrix of the braid.
pub fn univariate_braid_matrix(
    kind: RepresentationKind,
    beta: &BraidWord,
) -> Result<RingMatrix<LaurentPoly>, RepresentationError> {
    match kind {
        RepresentationKind::TwoVariable => Err(RepresentationError::Bivariate(kind)),
        _ => Ok(product(beta, |i, pos| univariate_cell(kind, i, pos))),
    }
}

pub fn twovar_braid_matrix(beta: &BraidWord) -> RingMatrix<BiLaurentPoly> {
    product(beta, |_, pos| twovar_cell(pos))
}

fn product<R: Ring>(beta: &BraidWord, cell: impl Fn(u32, bool) -> Cell<R>) -> RingMatrix<R>
where
    for<'a> &'a R: crate::ring::RingOps<R>,
{
    let mut m = RingMatrix::identity(beta.strands());
    for &l in beta.letters() {
        let i = l.unsigned_abs();
        mul_cell_right(&mut m, i, &cell(i, l > 0));
    }
    m
}

/// Abelianized Fox Jacobian of the braid's automorphism: Artin with every
/// x_i ↦ t for Burau, Wada with x_i ↦ t^±1 alternating for Wada.
pub fn jacobian_matrix_oracle(
    kind: RepresentationKind,
    beta: &BraidWord,
) -> Result<RingMatrix<LaurentPoly>, RepresentationError> {
    let n = beta.strands();
    match kind {
        RepresentationKind::Burau => Ok(abelianized_jacobian(
            &artin_automorphism(beta),
            &Abelianization::burau(n),
        )),
        RepresentationKind::Wada => Ok(abelianized_jacobian(
            &wada_automorphism(beta),
            &Abelianization::wada(n),
        )),
        RepresentationKind::TwoVariable => Err(RepresentationError::Bivariate(kind)),
    }
}

/// Substitutes s = 1 entrywise.
pub fn specialize_s1(m: &RingMatrix<BiLaurentPoly>) -> RingMatrix<LaurentPoly> {
    m.map(|e| e.specialize_s1())
}
