//! Square matrices over a coefficient ring, their minors, and the chain of
//! elementary ideals E_0 ⊆ E_1 ⊆ … ⊆ E_n.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::ring::{BiLaurentPoly, LaurentPoly, Ring, RingOps};

/// Largest matrix whose minors are enumerated (subsets are bitmasks, and the
/// memo table grows like C(2n, n)).
pub const MAX_MINOR_DIMENSION: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("minor size {size} out of range 1..={dimension}")]
    SizeOutOfRange { size: usize, dimension: usize },
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R>
where
    for<'a> &'a R: RingOps<R>,
{
    pub fn zero(dim: usize) -> Self {
        RingMatrix {
            dim,
            entries: vec![R::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::NotSquare {
                    row,
                    len: r.len(),
                    expected: dim,
                });
            }
            entries.extend(r);
        }
        Ok(RingMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }

    /// Applies `f` to every entry.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S>
    where
        for<'a> &'a S: RingOps<S>,
    {
        RingMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Product with entries multiplied in `self`-then-`other` order.
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::SizeMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] = &out.entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::SizeMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(RingMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `self - I`.
    pub fn sub_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] = &m.entries[i * self.dim + i] - &R::one();
        }
        m
    }

    /// Border with a zero row and column meeting in a 1 at the bottom-right corner.
    pub fn augment(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zero(n + 1);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m.set(n, n, R::one());
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.dim {
            self.entries.swap(i * self.dim + a, i * self.dim + b);
        }
    }

    /// Row `i` ← `c · row i`.
    pub fn scale_row(&mut self, i: usize, c: &R) {
        for j in 0..self.dim {
            let v = c * self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Column `j` ← `column j · c`.
    pub fn scale_col(&mut self, j: usize, c: &R) {
        for i in 0..self.dim {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// Row `dst` ← row `dst` + `c · row src`.
    pub fn add_row_multiple(&mut self, src: usize, dst: usize, c: &R) {
        for j in 0..self.dim {
            let v = self.get(dst, j) + &(c * self.get(src, j));
            self.set(dst, j, v);
        }
    }

    /// Column `dst` ← column `dst` + `column src · c`.
    pub fn add_col_multiple(&mut self, src: usize, dst: usize, c: &R) {
        for i in 0..self.dim {
            let v = self.get(i, dst) + &(self.get(i, src) * c);
            self.set(i, dst, v);
        }
    }

    /// Determinant by memoized cofactor expansion. Commutative rings only.
    pub fn determinant(&self) -> R {
        MinorTable::new(self).minor(full_mask(self.dim), full_mask(self.dim))
    }

    /// All `size × size` minors, row subsets outer and column subsets inner,
    /// both in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<R>, MatrixError> {
        if size == 0 || size > self.dim {
            return Err(MatrixError::SizeOutOfRange {
                size,
                dimension: self.dim,
            });
        }
        let mut table = MinorTable::new(self);
        let subsets = subsets_lex(self.dim, size);
        let mut out = Vec::with_capacity(subsets.len() * subsets.len());
        for &rows in &subsets {
            for &cols in &subsets {
                out.push(table.minor(rows, cols));
            }
        }
        Ok(out)
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// Bitmasks of all `k`-subsets of `0..n` in lexicographic order.
fn subsets_lex(n: usize, k: usize) -> Vec<u32> {
    fn go(start: usize, n: usize, k: usize, mask: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..=n - k {
            go(i + 1, n, k - 1, mask | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    go(0, n, k, 0, &mut out);
    out
}

/// Memo of minors keyed by (row subset, column subset); shared across sizes so
/// that enumerating every minor of every size reuses the smaller cofactors.
struct MinorTable<'m, R> {
    matrix: &'m RingMatrix<R>,
    memo: HashMap<(u32, u32), R>,
}

impl<'m, R: Ring> MinorTable<'m, R>
where
    for<'a> &'a R: RingOps<R>,
{
    fn new(matrix: &'m RingMatrix<R>) -> Self {
        assert!(
            matrix.dim <= MAX_MINOR_DIMENSION,
            "minor enumeration supports matrices up to {MAX_MINOR_DIMENSION}x{MAX_MINOR_DIMENSION}"
        );
        MinorTable {
            matrix,
            memo: HashMap::new(),
        }
    }

    fn minor(&mut self, rows: u32, cols: u32) -> R {
        debug_assert_eq!(rows.count_ones(), cols.count_ones());
        match rows.count_ones() {
            0 => return R::one(),
            1 => {
                let (i, j) = (rows.trailing_zeros(), cols.trailing_zeros());
                return self.matrix.get(i as usize, j as usize).clone();
            }
            _ => {}
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let top = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << top);
        let mut acc = R::zero();
        let mut remaining = cols;
        let mut position = 0;
        while remaining != 0 {
            let j = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            let entry = self.matrix.get(top, j);
            if !entry.is_zero() {
                let term = entry * &self.minor(rest, cols & !(1 << j));
                acc = if position % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            position += 1;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

impl<R: fmt::Display> fmt::Display for RingMatrix<R> {
    /// Bracketed, one row per line, entries separated by `, `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in self.entries.chunks(self.dim.max(1)).take(self.dim) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<R: fmt::Display> RingMatrix<R> {
    /// Entries as text, row by row; the JSON form is this array of arrays.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl RingMatrix<LaurentPoly> {
    /// Substitutes `t ↦ t^-1` entrywise.
    pub fn invert_variable(&self) -> Self {
        self.map(LaurentPoly::invert_variable)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|e| c * e)
    }
}

/// Generators g_0, …, g_n of the elementary ideals of an n×n matrix over
/// Z[t^±1]; g_k is the normalized gcd of the (n−k)×(n−k) minors and g_n = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealChain {
    generators: Vec<LaurentPoly>,
}

impl IdealChain {
    pub fn from_generators(generators: Vec<LaurentPoly>) -> Self {
        IdealChain { generators }
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.generators
    }

    /// Matrix dimension the chain came from.
    pub fn dim(&self) -> usize {
        self.generators.len() - 1
    }

    /// Generator of E_k; the whole ring for k ≥ n.
    pub fn get(&self, k: usize) -> LaurentPoly {
        self.generators
            .get(k)
            .cloned()
            .unwrap_or_else(LaurentPoly::one)
    }

    /// Smallest k with E_k ≠ 0, and its generator.
    pub fn first_nonzero(&self) -> (usize, &LaurentPoly) {
        self.generators
            .iter()
            .enumerate()
            .find(|(_, g)| !g.is_zero())
            .expect("E_n is the whole ring")
    }

    /// Same ideals for every k, padding the shorter chain with the whole
    /// ring. Chains of M and of M ⊕ 1 agree in this sense.
    pub fn same_ideals(&self, other: &IdealChain) -> bool {
        let top = self.generators.len().max(other.generators.len());
        (0..top).all(|k| self.get(k) == other.get(k))
    }

    /// E_k ⊆ E_{k+1} for every consecutive pair of nonzero generators.
    pub fn is_ascending(&self) -> bool {
        self.generators
            .windows(2)
            .all(|w| w[0].is_zero() || w[1].is_zero() || w[1].divides(&w[0]))
    }
}

impl fmt::Display for IdealChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "E_{k}: {g}")?;
        }
        Ok(())
    }
}

/// Elementary-ideal chain of a matrix over Z[t^±1].
pub fn ideal_chain(m: &RingMatrix<LaurentPoly>) -> IdealChain {
    let n = m.dim();
    let mut table = MinorTable::new(m);
    let mut generators = vec![LaurentPoly::zero(); n + 1];
    generators[n] = LaurentPoly::one();
    // Smallest minors first so the memo is filled bottom-up.
    for k in (0..n).rev() {
        let size = n - k;
        let subsets = subsets_lex(n, size);
        let mut g = LaurentPoly::zero();
        'scan: for &rows in &subsets {
            for &cols in &subsets {
                let minor = table.minor(rows, cols);
                if !minor.is_zero() {
                    g = g.gcd(&minor);
                    if g.is_one() {
                        break 'scan;
                    }
                }
            }
        }
        generators[k] = g;
    }
    IdealChain { generators }
}

/// Nonzero minors of the largest size that has any, with their gcd in the
/// UFD Z[s^±1, t^±1]. Whether the ideal is principal is left to the caller.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateIdeal {
    /// Minor size the generators come from; 0 for the zero matrix.
    pub minor_size: usize,
    pub gcd: BiLaurentPoly,
    pub generators: Vec<BiLaurentPoly>,
}

pub fn ideal_generators_bivariate(m: &RingMatrix<BiLaurentPoly>) -> BivariateIdeal {
    let n = m.dim();
    let mut table = MinorTable::new(m);
    for size in (1..=n).rev() {
        let subsets = subsets_lex(n, size);
        let mut generators = Vec::new();
        for &rows in &subsets {
            for &cols in &subsets {
                let minor = table.minor(rows, cols);
                if !minor.is_zero() {
                    generators.push(minor);
                }
            }
        }
        if !generators.is_empty() {
            let gcd = generators
                .iter()
                .fold(BiLaurentPoly::zero(), |acc, g| acc.gcd(g));
            return BivariateIdeal {
                minor_size: size,
                gcd,
                generators,
            };
        }
    }
    BivariateIdeal {
        minor_size: 0,
        gcd: BiLaurentPoly::zero(),
        generators: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> RingMatrix<LaurentPoly> {
        RingMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| lp(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Leibniz formula over all permutations.
    fn leibniz(m: &RingMatrix<LaurentPoly>) -> LaurentPoly {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.dim();
        let mut acc = LaurentPoly::zero();
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let term = (0..n).fold(LaurentPoly::one(), |a, i| &a * m.get(i, p[i]));
            acc = if inversions % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    #[test]
    fn burau_trefoil_determinant_vanishes() {
        let m = mat(&[
            &["-t^3 + t^2 - t", "t^3 - t^2 + t"],
            &["t^2 - t + 1", "-t^2 + t - 1"],
        ]);
        assert!(m.determinant().is_zero());
        assert!(mat(&[&["t", "t^2"], &["-1", "-t"]]).determinant().is_zero());
        assert_eq!(
            RingMatrix::<LaurentPoly>::identity(4).determinant(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn determinant_agrees_with_leibniz() {
        let m = mat(&[
            &["t", "1 - t", "2", "t^-1"],
            &["0", "3t^2", "-1", "1"],
            &["t^-2", "1", "t + 1", "0"],
            &["5", "-t", "1", "t^3"],
        ]);
        assert_eq!(m.determinant(), leibniz(&m));
    }

    #[test]
    fn minors_of_wada_trefoil() {
        let m = mat(&[&["3t", "3t^2"], &["-3", "-3t"]]);
        let ones = m.minors(1).unwrap();
        assert_eq!(ones, vec![lp("3t"), lp("3t^2"), lp("-3"), lp("-3t")]);
        assert_eq!(m.minors(2).unwrap(), vec![m.determinant()]);
        assert!(m.minors(0).is_err());
        assert!(m.minors(3).is_err());
        let chain = ideal_chain(&m);
        assert_eq!(chain.generators(), &[lp("0"), lp("3"), lp("1")]);
    }

    #[test]
    fn zero_matrix_chain() {
        let chain = ideal_chain(&RingMatrix::zero(3));
        assert_eq!(chain.generators(), &[lp("0"), lp("0"), lp("0"), lp("1")]);
        assert_eq!(chain.first_nonzero().0, 3);
    }

    #[test]
    fn hopf_burau_chain() {
        let m = mat(&[&["t^2 - t", "t - t^2"], &["1 - t", "t - 1"]]);
        let chain = ideal_chain(&m);
        assert!(chain.get(0).is_zero());
        assert!(chain.get(1).unit_equal(&lp("1 - t")));
    }

    #[test]
    fn augment_and_identity() {
        let i3: RingMatrix<LaurentPoly> = RingMatrix::identity(3);
        assert_eq!(i3.augment(), RingMatrix::identity(4));
        let m = mat(&[&["t", "2"], &["1", "t^-1"]]);
        assert_eq!(m.mul(&RingMatrix::identity(2)).unwrap(), m);
        assert!(m.mul(&i3).is_err());
    }

    #[test]
    fn display_form() {
        let m = mat(&[&["t", "-1"], &["0", "t^-1 + 2"]]);
        assert_eq!(m.to_string(), "[\n  t, -1\n  0, 2 + t^-1\n]");
    }
}
