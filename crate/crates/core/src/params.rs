//! Code parameters, bit blocks and the position layout of an interleaved
//! Hamming code.
//!
//! Positions are numbered from 1. Check bits live at the powers of two
//! `1, 2, 4, ..., 2^(k-1)`; data bits fill every other position in
//! increasing order. Check group `i` is the set of positions whose binary
//! representation has bit `i` set, truncated at the block length `n`.

use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest number of check bits accepted, so that every position and
/// checking number fits in a `usize`.
pub const MAX_CHECK_BITS: usize = (usize::BITS - 1) as usize;

/// The triple `(m, k, n)`: information bits, check bits and block length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    m: usize,
    k: usize,
    n: usize,
}

impl CodeParams {
    /// Builds parameters from an explicit `(m, k)` pair.
    ///
    /// Besides `2^k - 1 >= m + k`, every check position `2^i` for `i < k`
    /// has to exist inside the block, so `2^(k-1) <= n` as well.
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        if k < 2 {
            return Err(Error::InvalidParameter("k must be at least 2".into()));
        }
        if k > MAX_CHECK_BITS {
            return Err(Error::InvalidParameter(format!(
                "k = {k} exceeds the supported maximum of {MAX_CHECK_BITS}"
            )));
        }
        let n = m
            .checked_add(k)
            .ok_or_else(|| Error::InvalidParameter("m + k overflows".into()))?;
        let capacity = (1usize << k) - 1;
        if capacity < n {
            return Err(Error::InvalidParameter(format!(
                "2^{k} - 1 = {capacity} < n = {n}: {k} check bits cannot address every position"
            )));
        }
        if 1usize << (k - 1) > n {
            return Err(Error::InvalidParameter(format!(
                "check position 2^{} = {} lies beyond n = {n}",
                k - 1,
                1usize << (k - 1)
            )));
        }
        Ok(Self { m, k, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True when every nonzero checking number names a position (`n = 2^k - 1`).
    pub fn is_perfect(&self) -> bool {
        self.n == (1usize << self.k) - 1
    }

    /// Rate as the exact fraction `(m, n)`.
    pub fn rate(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rate_f64(&self) -> f64 {
        self.m as f64 / self.n as f64
    }

    pub fn classify(&self, position: usize) -> Result<PositionClass> {
        classify_position(position, self)
    }

    /// Positions of check group `i`, ascending.
    pub fn check_mask(&self, group: usize) -> Result<Vec<usize>> {
        if group >= self.k {
            return Err(Error::InvalidParameter(format!(
                "check group {group} does not exist for k = {}",
                self.k
            )));
        }
        Ok(check_mask(group, self.n))
    }

    /// Check positions `1, 2, 4, ..., 2^(k-1)`.
    pub fn check_positions(&self) -> impl Iterator<Item = usize> {
        (0..self.k).map(|i| 1usize << i)
    }

    /// Data positions in increasing order; the j-th item carries data bit j.
    pub fn data_positions(&self) -> impl Iterator<Item = usize> {
        (1..=self.n).filter(|p| !p.is_power_of_two())
    }

    pub(crate) fn expect_len(&self, block: &BitBlock, expected: usize) -> Result<()> {
        if block.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: block.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

/// Smallest `k` with `2^k - 1 >= m + k`, packaged as [`CodeParams`].
#[allow(clippy::int_plus_one)]
pub fn derive_params(m: usize) -> Result<CodeParams> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut k = 2;
    while k <= MAX_CHECK_BITS {
        if let Some(n) = m.checked_add(k) {
            if (1usize << k) - 1 >= n {
                return CodeParams::new(m, k);
            }
        }
        k += 1;
    }
    Err(Error::InvalidParameter(format!("m = {m} is too large")))
}

/// Role of a position inside a codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionClass {
    /// Check bit of group `i`, found at position `2^i`.
    Check(usize),
    /// Data bit `j` (1-based), counted in increasing position order.
    Data(usize),
}

pub fn classify_position(position: usize, params: &CodeParams) -> Result<PositionClass> {
    if position == 0 || position > params.n {
        return Err(Error::PositionRange {
            position,
            n: params.n,
        });
    }
    if position.is_power_of_two() {
        return Ok(PositionClass::Check(position.trailing_zeros() as usize));
    }
    // powers of two at or below p
    let powers = (usize::BITS - position.leading_zeros()) as usize;
    Ok(PositionClass::Data(position - powers))
}

/// Positions `p` in `1..=n` with bit `group` of `p` set.
pub fn check_mask(group: usize, n: usize) -> Vec<usize> {
    mask_positions(group, n).collect()
}

pub(crate) fn mask_positions(group: usize, n: usize) -> impl Iterator<Item = usize> {
    let start = if group < usize::BITS as usize {
        1usize << group
    } else {
        usize::MAX
    };
    (start..=n).filter(move |p| (p >> group) & 1 == 1)
}

/// Popcount of the block mod 2.
pub fn overall_parity(block: &BitBlock) -> bool {
    block.weight() % 2 == 1
}

/// A fixed-length bit sequence addressed by 1-based positions.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitBlock {
    bits: Vec<bool>,
}

impl BitBlock {
    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    /// Low `len` bits of `value`, most significant first, so that
    /// `from_uint(0b1011, 4)` reads `1011`.
    pub fn from_uint(value: u64, len: usize) -> Self {
        (0..len)
            .rev()
            .map(|i| i < 64 && (value >> i) & 1 == 1)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at 1-based `position`.
    ///
    /// Panics if the position is out of range.
    pub fn bit(&self, position: usize) -> bool {
        assert!(
            position >= 1 && position <= self.bits.len(),
            "position {position} outside 1..={}",
            self.bits.len()
        );
        self.bits[position - 1]
    }

    pub fn get(&self, position: usize) -> Option<bool> {
        position
            .checked_sub(1)
            .and_then(|idx| self.bits.get(idx).copied())
    }

    pub fn set(&mut self, position: usize, value: bool) -> Result<()> {
        let n = self.bits.len();
        match position.checked_sub(1).and_then(|i| self.bits.get_mut(i)) {
            Some(bit) => {
                *bit = value;
                Ok(())
            }
            None => Err(Error::PositionRange { position, n }),
        }
    }

    pub fn flip(&mut self, position: usize) -> Result<()> {
        let n = self.bits.len();
        match position.checked_sub(1).and_then(|i| self.bits.get_mut(i)) {
            Some(bit) => {
                *bit = !*bit;
                Ok(())
            }
            None => Err(Error::PositionRange { position, n }),
        }
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Number of positions where the two blocks differ.
    pub fn distance(&self, other: &BitBlock) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }
}

impl From<Vec<bool>> for BitBlock {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl FromIterator<bool> for BitBlock {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

impl FromStr for BitBlock {
    type Err = Error;

    /// Parses a string of `0` and `1` characters, first character = position 1.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::ParseBits(s.to_string())),
            })
            .collect()
    }
}

impl BitXor for &BitBlock {
    type Output = BitBlock;

    /// Bitwise sum over GF(2). Panics on differing lengths.
    fn bitxor(self, rhs: &BitBlock) -> BitBlock {
        assert_eq!(
            self.len(),
            rhs.len(),
            "xor of blocks with different lengths"
        );
        self.bits
            .iter()
            .zip(&rhs.bits)
            .map(|(a, b)| a ^ b)
            .collect()
    }
}

impl fmt::Display for BitBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitBlock({self})")
    }
}
