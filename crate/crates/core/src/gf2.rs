//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are stored as packed `u64` words. Elimination always pivots on the
//! first nonzero entry scanning columns left to right, so every result
//! (solutions, kernel bases) is reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector with ones exactly at `indices` (repeated indices cancel).
    pub fn from_support(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + t)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn dot(&self, other: &BitVector) -> bool {
        let parity: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        parity & 1 == 1
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A dense `rows × cols` matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &v) in row.iter().enumerate() {
                if v & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from column supports: column `c` has ones at `columns[c]`.
    pub fn from_column_supports(rows: usize, columns: &[Vec<usize>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, support) in columns.iter().enumerate() {
            for &r in support {
                m.data[r].flip(c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows, "row {r} out of range");
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows, "row {r} out of range");
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVector {
        assert!(c < self.cols, "column {c} out of range");
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.data[r].get(c)) else {
                continue;
            };
            self.data.swap(next, p);
            let pivot_row = self.data[next].clone();
            for r in 0..self.rows {
                if r != next && self.data[r].get(c) {
                    self.data[r].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(row.get(c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    m.clone().reduce().len()
}

/// Solves `a·x = b`. Free variables are set to zero, so the returned
/// solution is the one read directly off the reduced echelon form.
pub fn solve(a: &BitMatrix, b: &BitVector) -> Result<Option<BitVector>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut aug = BitMatrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in a.row(r).ones() {
            aug.set(r, c, true);
        }
        if b.get(r) {
            aug.set(r, n, true);
        }
    }
    let pivots = aug.reduce();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = BitVector::zeros(n);
    for (r, &c) in pivots.iter().enumerate() {
        if aug.get(r, n) {
            x.set(c, true);
        }
    }
    Ok(Some(x))
}

/// Indices of the columns that are not combinations of earlier columns,
/// ascending. These are the pivot columns of the reduced echelon form.
pub fn pivot_columns(a: &BitMatrix) -> Vec<usize> {
    a.clone().reduce()
}

/// Basis of the null space, one vector per free column in ascending order.
pub fn kernel_basis(a: &BitMatrix) -> Vec<BitVector> {
    let mut red = a.clone();
    let pivots = red.reduce();
    let mut is_pivot = vec![false; a.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..a.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVector::zeros(a.cols());
            v.set(f, true);
            for (r, &c) in pivots.iter().enumerate() {
                if red.get(r, f) {
                    v.set(c, true);
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&BitMatrix::identity(3)), 3);
        assert_eq!(rank(&BitMatrix::zeros(4, 7)), 0);
        assert_eq!(rank(&BitMatrix::from_rows(&[vec![1, 1], vec![0, 1], vec![1, 0]])), 2);
    }

    #[test]
    fn solve_examples() {
        let b = BitVector::from_bits(&[true, false]);
        let x = solve(&BitMatrix::identity(2), &b).unwrap().unwrap();
        assert_eq!(x, b);

        let a = BitMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(x, BitVector::from_bits(&[true, false]));

        assert_eq!(solve(&BitMatrix::zeros(2, 2), &b).unwrap(), None);
    }

    #[test]
    fn solve_rejects_mismatched_rhs() {
        let err = solve(&BitMatrix::identity(2), &BitVector::zeros(3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&BitMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&BitMatrix::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&BitMatrix::from_rows(&[vec![1, 1, 0]]));
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], BitVector::from_bits(&[true, true, false]));
        assert_eq!(k[1], BitVector::from_bits(&[false, false, true]));
    }

    #[test]
    fn pivot_columns_pick_independent_prefix() {
        let m = BitMatrix::from_rows(&[vec![1, 1, 0, 1], vec![0, 0, 1, 1]]);
        assert_eq!(pivot_columns(&m), vec![0, 2]);
    }

    #[test]
    fn rank_does_not_mutate_input() {
        let m = BitMatrix::from_rows(&[vec![1, 1, 0], vec![1, 1, 0], vec![0, 1, 1]]);
        let before = m.clone();
        assert_eq!(rank(&m), 2);
        assert_eq!(m, before);
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let n = 150;
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
            if i + 1 < n {
                m.set(i, i + 1, true);
            }
        }
        assert_eq!(rank(&m), n);
        let b = BitVector::from_support(n, [n - 1]);
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    fn arb_matrix() -> impl Strategy<Value = BitMatrix> {
        (0usize..12, 0usize..12).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r).prop_map(
                move |rows| {
                    let mut m = BitMatrix::zeros(r, c);
                    for (i, row) in rows.iter().enumerate() {
                        for (j, &v) in row.iter().enumerate() {
                            m.set(i, j, v == 1);
                        }
                    }
                    m
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
        }

        #[test]
        fn solutions_check_out(m in arb_matrix(), seed in any::<u64>()) {
            let x0 = BitVector::from_support(
                m.cols(),
                (0..m.cols()).filter(|i| seed >> (i % 64) & 1 == 1),
            );
            let b = m.mul_vec(&x0).unwrap();
            let x = solve(&m, &b).unwrap().expect("constructed system is solvable");
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        }

        #[test]
        fn rank_ignores_row_order(m in arb_matrix(), shift in 0usize..12) {
            let rows = m.rows();
            let mut shuffled = BitMatrix::zeros(rows, m.cols());
            for r in 0..rows {
                let src = (r + shift) % rows.max(1);
                for c in m.row(src).ones() {
                    shuffled.set(r, c, true);
                }
            }
            prop_assert_eq!(rank(&m), rank(&shuffled));
        }
    }
}
