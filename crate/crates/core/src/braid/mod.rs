//! Braid words, Markov moves, the Artin and Wada actions on free groups, and
//! tools for exploring Markov-move graphs.

mod orbit;
mod search;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::freegroup::{Endomorphism, FreeWord};

pub use orbit::{random_markov_orbit, MarkovOrbit};
pub use search::{search_markov_path, SearchError, SearchLimits, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error at byte {position} in token '{token}': {message}")]
    Syntax {
        position: usize,
        token: String,
        message: String,
    },
    #[error("generator {index} needs at least {} strands, but the braid has {strands}", index + 1)]
    StrandBound { index: u32, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("braid is not of the form γ·σ_{n}^±1 with γ on {n} strands", n = .strands - 1)]
    NotDestabilizable { strands: usize },
}

/// A word in the standard generators σ_1, …, σ_{n-1} of B_n; letter `i` is
/// σ_i and `-i` is σ_i^-1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            let index = l.unsigned_abs();
            if l == 0 || index as usize >= strands {
                return Err(BraidError::StrandBound { index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Parses the whitespace-separated token grammar: `k` is σ_|k|^sign(k),
    /// `k^m` is (σ_k)^m. Without an explicit strand count the braid gets one
    /// more strand than its largest generator index (one strand if empty).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for (position, token) in tokens(text) {
            let syntax = |message: &str| BraidError::Syntax {
                position,
                token: token.to_string(),
                message: message.to_string(),
            };
            let (base, power) = match token.split_once('^') {
                Some((b, p)) => (b, Some(p)),
                None => (token, None),
            };
            let k: i32 = base
                .parse()
                .map_err(|_| syntax("expected a signed generator index"))?;
            if k == 0 {
                return Err(syntax("generator index 0 does not exist"));
            }
            let m: i32 = match power {
                Some(p) => p
                    .parse()
                    .map_err(|_| syntax("expected an integer exponent"))?,
                None => 1,
            };
            let letter = if m < 0 { -k } else { k };
            letters.extend(std::iter::repeat_n(letter, m.unsigned_abs() as usize));
        }
        let inferred = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
            + 1;
        Self::new(strands.unwrap_or(inferred), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Word concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        self.same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    fn same_strands(&self, other: &Self) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Cancels adjacent `σ_i σ_i^-1` pairs; the result is the same braid.
    pub fn freely_reduced(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: FreeWord::reduce(self.letters.iter().copied())
                .letters()
                .to_vec(),
        }
    }

    /// Markov move 1: the literal word γ^-1·β·γ.
    pub fn conjugate(&self, gamma: &Self) -> Result<Self, BraidError> {
        gamma.inverse().concat(self)?.concat(gamma)
    }

    /// Markov move 2: append σ_n^±1, adding a strand.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    pub fn is_destabilizable(&self) -> bool {
        let top = self.strands as i32 - 1;
        match self.letters.split_last() {
            Some((&last, rest)) => {
                last.abs() == top && top >= 1 && rest.iter().all(|l| l.abs() != top)
            }
            None => false,
        }
    }

    /// Markov move 3: drop a trailing σ_{n-1}^±1 that is the only use of σ_{n-1}.
    pub fn destabilize(&self) -> Result<Self, BraidError> {
        if !self.is_destabilizable() {
            return Err(BraidError::NotDestabilizable {
                strands: self.strands,
            });
        }
        Ok(BraidWord {
            strands: self.strands - 1,
            letters: self.letters[..self.letters.len() - 1].to_vec(),
        })
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

impl fmt::Display for BraidWord {
    /// Run-length form in the input grammar, e.g. `1^3 2^-3`; empty braids print as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in self.letters.chunk_by(|a, b| a == b) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let l = run[0];
            match (run.len(), l > 0) {
                (1, _) => write!(f, "{l}")?,
                (c, true) => write!(f, "{l}^{c}")?,
                (c, false) => write!(f, "{}^-{c}", -l)?,
            }
        }
        Ok(())
    }
}

/// Artin's automorphism for σ_i (or its inverse) on F_n:
/// x_i ↦ x_i x_{i+1} x_i^-1, x_{i+1} ↦ x_i.
pub fn artin_generator(strands: usize, i: u32, inverse: bool) -> Endomorphism {
    let (a, b) = (i as i32, i as i32 + 1);
    let (img_a, img_b) = if inverse {
        (vec![b], vec![-b, a, b])
    } else {
        (vec![a, b, -a], vec![a])
    };
    with_cell(strands, i, img_a, img_b)
}

/// Wada's automorphism for σ_i (or its inverse) on F_n:
/// x_i ↦ x_i^2 x_{i+1}, x_{i+1} ↦ x_{i+1}^-1 x_i^-1 x_{i+1}.
/// The inverse is x_i ↦ x_i x_{i+1}^-1 x_i^-1, x_{i+1} ↦ x_i x_{i+1}^2.
pub fn wada_generator(strands: usize, i: u32, inverse: bool) -> Endomorphism {
    let (a, b) = (i as i32, i as i32 + 1);
    let (img_a, img_b) = if inverse {
        (vec![a, -b, -a], vec![a, b, b])
    } else {
        (vec![a, a, b], vec![-b, -a, b])
    };
    with_cell(strands, i, img_a, img_b)
}

fn with_cell(strands: usize, i: u32, img_a: Vec<i32>, img_b: Vec<i32>) -> Endomorphism {
    assert!(
        i >= 1 && (i as usize) < strands,
        "σ_{i} is not a generator of B_{strands}"
    );
    let mut images: Vec<FreeWord> = Endomorphism::identity(strands).images().to_vec();
    images[i as usize - 1] = FreeWord::reduce(img_a);
    images[i as usize] = FreeWord::reduce(img_b);
    Endomorphism::new(images).expect("generator images stay within rank")
}

fn automorphism_of(
    beta: &BraidWord,
    generator: impl Fn(usize, u32, bool) -> Endomorphism,
) -> Endomorphism {
    beta.letters
        .iter()
        .fold(Endomorphism::identity(beta.strands), |acc, &l| {
            acc.compose(&generator(beta.strands, l.unsigned_abs(), l < 0))
                .expect("same rank")
        })
}

/// Image of the braid under Artin's representation, read left to right.
pub fn artin_automorphism(beta: &BraidWord) -> Endomorphism {
    automorphism_of(beta, artin_generator)
}

/// Image of the braid under Wada's representation, read left to right.
pub fn wada_automorphism(beta: &BraidWord) -> Endomorphism {
    automorphism_of(beta, wada_generator)
}

/// Word problem in B_n: Artin's action is faithful, so two words are the
/// same braid iff their actions agree on every generator.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    a.same_strands(b)?;
    Ok(artin_automorphism(a) == artin_automorphism(b))
}

/// One Markov move.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MarkovMove {
    /// Conjugate by the single letter σ_|k|^sign(k), then cancel adjacent inverse pairs.
    Conjugate(i32),
    Stabilize {
        positive: bool,
    },
    Destabilize,
}

impl MarkovMove {
    pub fn apply(&self, beta: &BraidWord) -> Result<BraidWord, BraidError> {
        match *self {
            MarkovMove::Conjugate(k) => {
                let gamma = BraidWord::new(beta.strands, vec![k])?;
                Ok(beta.conjugate(&gamma)?.freely_reduced())
            }
            MarkovMove::Stabilize { positive } => Ok(beta.stabilize(positive)),
            MarkovMove::Destabilize => beta.destabilize(),
        }
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkovMove::Conjugate(k) => write!(f, "conjugate {k}"),
            MarkovMove::Stabilize { positive: true } => write!(f, "stabilize +"),
            MarkovMove::Stabilize { positive: false } => write!(f, "stabilize -"),
            MarkovMove::Destabilize => write!(f, "destabilize"),
        }
    }
}

impl FromStr for MarkovMove {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split_whitespace();
        let mv = match (parts.next(), parts.next()) {
            (Some("conjugate"), Some(k)) => match k.parse::<i32>() {
                Ok(k) if k != 0 => MarkovMove::Conjugate(k),
                _ => return Err(format!("bad conjugator '{k}'")),
            },
            (Some("stabilize"), Some("+")) => MarkovMove::Stabilize { positive: true },
            (Some("stabilize"), Some("-")) => MarkovMove::Stabilize { positive: false },
            (Some("destabilize"), None) => MarkovMove::Destabilize,
            _ => return Err(format!("unrecognized move '{s}'")),
        };
        match parts.next() {
            None => Ok(mv),
            Some(extra) => Err(format!("trailing '{extra}' in move '{s}'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(text: &str) -> BraidWord {
        BraidWord::parse(text, None).unwrap()
    }

    #[test]
    fn parse_examples() {
        let trefoil = b("1^3");
        assert_eq!((trefoil.strands(), trefoil.letters()), (2, &[1, 1, 1][..]));
        let eight = b("1 -2 1 -2");
        assert_eq!((eight.strands(), eight.letters()), (3, &[1, -2, 1, -2][..]));
        let unknot = BraidWord::parse("", Some(1)).unwrap();
        assert_eq!((unknot.strands(), unknot.len()), (1, 0));
        assert_eq!(b("1^3 2^-3").letters(), &[1, 1, 1, -2, -2, -2]);
        assert_eq!(b("-1^2").letters(), &[-1, -1]);
        assert_eq!(b("-1^-2").letters(), &[1, 1]);
        assert_eq!(b("").strands(), 1);
    }

    #[test]
    fn parse_errors() {
        match BraidWord::parse("1 x 2", None) {
            Err(BraidError::Syntax {
                position, token, ..
            }) => assert_eq!((position, token.as_str()), (2, "x")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            BraidWord::parse("0", None),
            Err(BraidError::Syntax { .. })
        ));
        assert!(matches!(
            BraidWord::parse("1^", None),
            Err(BraidError::Syntax { .. })
        ));
        assert_eq!(
            BraidWord::parse("1 3", Some(3)),
            Err(BraidError::StrandBound {
                index: 3,
                strands: 3
            })
        );
        assert_eq!(BraidWord::parse("", Some(0)), Err(BraidError::NoStrands));
    }

    #[test]
    fn display_round_trips() {
        for text in ["1^3 2^-3", "1 -2 1 -2", "-1^2 3", ""] {
            let beta = b(text);
            assert_eq!(
                BraidWord::parse(&beta.to_string(), Some(beta.strands())).unwrap(),
                beta
            );
        }
        assert_eq!(b("1 1 1 -2 -2 -2").to_string(), "1^3 2^-3");
    }

    #[test]
    fn conjugation_examples() {
        let beta = b("1^3");
        assert_eq!(
            beta.conjugate(&BraidWord::identity(2).unwrap()).unwrap(),
            beta
        );
        let conj = beta.conjugate(&b("1")).unwrap();
        assert_eq!(conj.letters(), &[-1, 1, 1, 1, 1]);
        assert!(braid_equal(&conj, &beta).unwrap());
        let s1 = BraidWord::parse("1", Some(3)).unwrap();
        let c = s1.conjugate(&b("2")).unwrap();
        assert_eq!(c.letters(), &[-2, 1, 2]);
        assert!(!braid_equal(&c, &s1).unwrap());
        assert!(s1.conjugate(&b("1")).is_err());
    }

    #[test]
    fn stabilization_round_trip() {
        let empty = BraidWord::identity(1).unwrap();
        assert_eq!(
            empty.stabilize(true),
            BraidWord::parse("1", Some(2)).unwrap()
        );
        let trefoil = b("1^3");
        let s = trefoil.stabilize(true);
        assert_eq!(s, b("1^3 2"));
        assert_eq!(s.destabilize().unwrap(), trefoil);
        assert_eq!(trefoil.stabilize(false).letters().last(), Some(&-2));
        assert!(b("1 2 1").destabilize().is_err());
        assert!(b("2 1 2").destabilize().is_err());
        assert_eq!(
            b("2").destabilize().unwrap(),
            BraidWord::parse("", Some(2)).unwrap()
        );
        assert!(BraidWord::identity(1).unwrap().destabilize().is_err());
    }

    #[test]
    fn artin_images() {
        let phi = artin_automorphism(&b("1"));
        assert_eq!(phi.images()[0], FreeWord::reduce([1, 2, -1]));
        assert_eq!(phi.images()[1], FreeWord::reduce([1]));
        assert!(artin_automorphism(&BraidWord::identity(3).unwrap()).is_identity());
        assert!(artin_automorphism(&b("1 -1")).is_identity());
    }

    #[test]
    fn wada_images_and_inverse() {
        let phi = wada_automorphism(&b("1"));
        assert_eq!(phi.images()[0], FreeWord::reduce([1, 1, 2]));
        assert_eq!(phi.images()[1], FreeWord::reduce([-2, -1, 2]));
        assert!(wada_automorphism(&b("1 -1")).is_identity());
        assert!(wada_automorphism(&b("-1 1")).is_identity());
        assert!(wada_automorphism(&BraidWord::identity(2).unwrap()).is_identity());
    }

    #[test]
    fn braid_relation_holds() {
        assert!(braid_equal(&b("1 2 1"), &b("2 1 2")).unwrap());
        assert!(!braid_equal(&b("1"), &b("-1")).unwrap());
        assert!(braid_equal(&b("1 3"), &b("3 1")).unwrap());
        assert!(braid_equal(&b("1"), &b("1 2")).is_err());
    }

    #[test]
    fn moves_parse_and_print() {
        for mv in [
            MarkovMove::Conjugate(-2),
            MarkovMove::Stabilize { positive: true },
            MarkovMove::Stabilize { positive: false },
            MarkovMove::Destabilize,
        ] {
            assert_eq!(mv.to_string().parse::<MarkovMove>().unwrap(), mv);
        }
        assert!("conjugate 0".parse::<MarkovMove>().is_err());
        assert!("twist".parse::<MarkovMove>().is_err());
    }
}
