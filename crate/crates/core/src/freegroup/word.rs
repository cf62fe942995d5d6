use std::fmt;

/// Freely reduced word in the free group F_n. A letter `i > 0` is the
/// generator x_i and `-i` its inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The generator x_i (or its inverse for negative `i`).
    pub fn generator(i: i32) -> Self {
        assert!(i != 0, "generator indices start at 1");
        FreeWord { letters: vec![i] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "generator indices start at 1");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
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

    /// Largest generator index occurring in the word.
    pub fn max_index(&self) -> u32 {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut a = self.letters.as_slice();
        let mut b = other.letters.as_slice();
        while let (Some(&x), Some(&y)) = (a.last(), b.first()) {
            if x != -y {
                break;
            }
            a = &a[..a.len() - 1];
            b = &b[1..];
        }
        let mut letters = Vec::with_capacity(a.len() + b.len());
        letters.extend_from_slice(a);
        letters.extend_from_slice(b);
        FreeWord { letters }
    }

    /// Net exponent of each generator, indexed from 0.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0i64; rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }
}

impl fmt::Display for FreeWord {
    /// `x1 x2^-1 x1`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}
