//! Parity-check and generator matrices over GF(2).
//!
//! Row `i` of the interleaved parity-check matrix is check group `i`, so
//! column `p` spells `p` in binary with row 0 as the least significant bit,
//! and `H * r^T` read as a number is the checking number of `r`. The
//! systematic form `[A | I_k]` is the same matrix with the check columns
//! `1, 2, 4, ...` moved to the end.

use std::collections::HashMap;
use std::fmt;

use crate::codec::encode;
use crate::error::{Error, Result};
use crate::params::{BitBlock, CodeParams};

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![false; rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitBlock]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitBlock::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            entries.extend(row.iter());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col] = value;
    }

    pub fn toggle(&mut self, row: usize, col: usize) {
        let v = self.get(row, col);
        self.set(row, col, !v);
    }

    pub fn row(&self, row: usize) -> BitBlock {
        self.entries[row * self.cols..(row + 1) * self.cols]
            .iter()
            .copied()
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<bool> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let v = (0..self.cols).fold(false, |acc, i| acc ^ (self.get(r, i) & rhs.get(i, c)));
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    /// `M * v^T`, one output bit per row.
    pub fn mul_vec(&self, v: &BitBlock) -> Result<Vec<bool>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.entries[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .zip(v.iter())
                    .fold(false, |acc, (&a, b)| acc ^ (a & b))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&b| !b)
    }

    /// Rank over GF(2) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<bool>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col]) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[col] {
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Columns reordered so that output column `j` is input column `perm[j]`.
    pub fn permute_columns(&self, perm: &ColumnPermutation) -> Result<BinaryMatrix> {
        if perm.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: perm.len(),
            });
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (j, &src) in perm.mapping().iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, src - 1));
            }
        }
        Ok(out)
    }

    /// Rows of `0`/`1` characters separated by newlines.
    pub fn to_grid(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            s.push_str(&self.row(r).to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_grid())
    }
}

/// A bijection on column numbers `1..=cols`; entry `j` (0-based) names the
/// source column that lands in slot `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnPermutation {
    mapping: Vec<usize>,
}

impl ColumnPermutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &c in &mapping {
            if c == 0 || c > n || seen[c - 1] {
                return Err(Error::InvalidParameter(format!(
                    "{mapping:?} is not a permutation of 1..={n}"
                )));
            }
            seen[c - 1] = true;
        }
        Ok(Self { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (1..=n).collect(),
        }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }
}

impl fmt::Display for ColumnPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mapping.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `k x n` matrix whose row `i` marks check group `i`.
pub fn parity_check_interleaved(params: &CodeParams) -> BinaryMatrix {
    let mut h = BinaryMatrix::zeros(params.k(), params.n());
    for p in 1..=params.n() {
        for i in 0..params.k() {
            h.set(i, p - 1, (p >> i) & 1 == 1);
        }
    }
    h
}

/// `m x n` matrix whose row `j` is the codeword of the j-th unit data block.
pub fn generator_matrix(params: &CodeParams) -> BinaryMatrix {
    let rows: Vec<BitBlock> = (0..params.m())
        .map(|j| {
            let mut unit = BitBlock::zeros(params.m());
            unit.flip(j + 1).expect("unit index in range");
            encode(&unit, params).expect("unit block has length m")
        })
        .collect();
    BinaryMatrix::from_rows(&rows).expect("codewords share length n")
}

/// The permutation carrying interleaved column order to systematic order:
/// data positions first, then `1, 2, 4, ..., 2^(k-1)`.
pub fn systematic_permutation(params: &CodeParams) -> ColumnPermutation {
    ColumnPermutation {
        mapping: params
            .data_positions()
            .chain(params.check_positions())
            .collect(),
    }
}

/// `[A | I_k]`: the interleaved matrix with the check columns moved to the end.
pub fn parity_check_systematic(params: &CodeParams) -> BinaryMatrix {
    parity_check_interleaved(params)
        .permute_columns(&systematic_permutation(params))
        .expect("permutation sized to n")
}

/// Finds `pi` with `h1.permute_columns(pi) == h2`, if there is one.
pub fn find_column_permutation(
    h1: &BinaryMatrix,
    h2: &BinaryMatrix,
) -> Result<Option<ColumnPermutation>> {
    if h1.rows != h2.rows || h1.cols != h2.cols {
        return Err(Error::DimensionMismatch(h1.rows, h1.cols, h2.rows, h2.cols));
    }
    // equal columns are interchangeable, so taking the first unused match
    // succeeds whenever any matching exists
    let mut pool: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
    for c in (0..h1.cols).rev() {
        pool.entry(h1.column(c)).or_default().push(c + 1);
    }
    let mut mapping = Vec::with_capacity(h2.cols);
    for c in 0..h2.cols {
        match pool.get_mut(&h2.column(c)).and_then(Vec::pop) {
            Some(src) => mapping.push(src),
            None => return Ok(None),
        }
    }
    Ok(Some(ColumnPermutation { mapping }))
}
