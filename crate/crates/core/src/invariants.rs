//! Knot and link invariants read off representation matrices: elementary
//! ideal chains, Wada and Alexander polynomials, the bivariate invariant and
//! two empirical checks relating them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::braid::BraidWord;
use crate::matrix::{ideal_chain, ideal_generators_bivariate, IdealChain};
use crate::representations::{
    twovar_braid_matrix, univariate_braid_matrix, RepresentationError, RepresentationKind,
};
use crate::ring::{BiLaurentPoly, LaurentPoly};

/// Chain of J_β − I for the Burau or Wada matrix.
pub fn invariant_chain(
    kind: RepresentationKind,
    beta: &BraidWord,
) -> Result<IdealChain, RepresentationError> {
    Ok(ideal_chain(
        &univariate_braid_matrix(kind, beta)?.sub_identity(),
    ))
}

/// Normalized generator of the first nonzero ideal of the chain.
pub fn leading_invariant(chain: &IdealChain) -> LaurentPoly {
    chain.first_nonzero().1.normalize()
}

pub fn wada_polynomial(beta: &BraidWord) -> LaurentPoly {
    leading_invariant(&invariant_chain(RepresentationKind::Wada, beta).expect("univariate kind"))
}

/// Alexander polynomial of the closure, normalized like Wada polynomials:
/// no negative powers, nonzero constant term, positive leading coefficient.
pub fn alexander_polynomial(beta: &BraidWord) -> LaurentPoly {
    leading_invariant(&invariant_chain(RepresentationKind::Burau, beta).expect("univariate kind"))
}

/// First nonzero elementary ideal of M_β − I for the two-variable representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVarInvariant {
    /// Size of the minors that generate the ideal; 0 when M_β = I.
    pub minor_size: usize,
    /// Normalized gcd of the generators, 1 when M_β = I.
    pub gcd: BiLaurentPoly,
    pub generators: Vec<BiLaurentPoly>,
    /// Whether the gcd itself occurs among the generators up to a unit. This
    /// is sufficient for the ideal to be principal, not necessary.
    pub principal_hint: bool,
}

pub fn twovar_invariant(beta: &BraidWord) -> TwoVarInvariant {
    let ideal = ideal_generators_bivariate(&twovar_braid_matrix(beta).sub_identity());
    if ideal.generators.is_empty() {
        return TwoVarInvariant {
            minor_size: 0,
            gcd: BiLaurentPoly::one(),
            generators: Vec::new(),
            principal_hint: true,
        };
    }
    let gcd = ideal.gcd.normalize();
    let principal_hint = ideal.generators.iter().all(|g| gcd.divides(g))
        && ideal.generators.iter().any(|g| g.unit_equal(&gcd));
    TwoVarInvariant {
        minor_size: ideal.minor_size,
        gcd,
        generators: ideal.generators,
        principal_hint,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureStatus {
    Consistent,
    Inconsistent,
    /// The Wada polynomial is not a constant, so there is no rule to compare with.
    ManualReview,
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureStatus::Consistent => "consistent",
            ConjectureStatus::Inconsistent => "INCONSISTENT",
            ConjectureStatus::ManualReview => "manual review",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub alexander: LaurentPoly,
    pub alexander_at_minus_1: BigInt,
    pub wada: LaurentPoly,
    pub status: ConjectureStatus,
}

impl ConjectureReport {
    /// `None` when the case needs manual review.
    pub fn consistent(&self) -> Option<bool> {
        match self.status {
            ConjectureStatus::Consistent => Some(true),
            ConjectureStatus::Inconsistent => Some(false),
            ConjectureStatus::ManualReview => None,
        }
    }
}

/// Compares |Δ(−1)| with the Wada polynomial when the latter is constant.
pub fn check_wada_conjecture(beta: &BraidWord) -> ConjectureReport {
    let alexander = alexander_polynomial(beta);
    let wada = wada_polynomial(beta);
    let at_minus_1 = alexander
        .evaluate_integer(-1)
        .expect("-1 is a unit")
        .to_integer();
    let status = match wada.as_integer() {
        Some(w) if w.abs() == at_minus_1.abs() => ConjectureStatus::Consistent,
        Some(_) => ConjectureStatus::Inconsistent,
        None => ConjectureStatus::ManualReview,
    };
    ConjectureReport {
        alexander,
        alexander_at_minus_1: at_minus_1,
        wada,
        status,
    }
}

/// Whether the bivariate gcd is Δ(st) up to units ±s^j t^k.
pub fn check_alst_observation(beta: &BraidWord) -> bool {
    let expected = BiLaurentPoly::substitute_st(&alexander_polynomial(beta));
    twovar_invariant(beta).gcd.unit_equal(&expected)
}
