//! Encoding through partial parity check equations and decoding through the
//! checking number.
//!
//! Check bit `x_(2^i)` is chosen so the mod-2 sum over check group `i` is 0.
//! On the receiving side each group sum is recomputed; a sum of 1 sets bit `i`
//! of the checking number. Under a single error the checking number is the
//! error position, and flipping that bit repairs the word.
//!
//! A checking number above `n` cannot come from a single error. It only
//! happens with shortened codes (`n < 2^k - 1`) under multi-bit corruption,
//! and is reported as [`DecodeStatus::Uncorrectable`] rather than guessed at.
//! Two or more errors can equally produce a checking number inside `1..=n`;
//! those words are miscorrected, since they are outside what a distance-3
//! code can repair.

use std::fmt;

use crate::error::Result;
use crate::params::{mask_positions, BitBlock, CodeParams};

/// The k group sums read as a binary number, group 0 as the least
/// significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CheckingNumber {
    value: usize,
    k: usize,
}

impl CheckingNumber {
    pub fn value(&self) -> usize {
        self.value
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// `s_1..s_k`: index 0 holds the sum of group 0.
    pub fn sums(&self) -> Vec<bool> {
        (0..self.k).map(|i| (self.value >> i) & 1 == 1).collect()
    }

    /// k binary digits, most significant first.
    pub fn to_binary_string(&self) -> String {
        format!("{:0width$b}", self.value, width = self.k)
    }
}

impl fmt::Display for CheckingNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    Clean,
    Corrected,
    Uncorrectable,
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecodeStatus::Clean => "clean",
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::Uncorrectable => "uncorrectable",
        })
    }
}

/// The decoder's verdict on one received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    /// Recovered data. For uncorrectable words this is the data read
    /// straight out of the received word.
    pub data: BitBlock,
    pub corrected_position: Option<usize>,
    pub status: DecodeStatus,
    pub checking_number: CheckingNumber,
}

pub fn encode(data: &BitBlock, params: &CodeParams) -> Result<BitBlock> {
    Code::new(*params).encode(data)
}

pub fn compute_checking_number(received: &BitBlock, params: &CodeParams) -> Result<CheckingNumber> {
    Code::new(*params).checking_number(received)
}

pub fn decode(received: &BitBlock, params: &CodeParams) -> Result<DecodeOutcome> {
    Code::new(*params).decode(received)
}

/// Data bits of a codeword, in increasing position order.
pub fn extract_data(codeword: &BitBlock, params: &CodeParams) -> Result<BitBlock> {
    Code::new(*params).extract_data(codeword)
}

/// A code with its position layout resolved once: the data positions and
/// the member list of every check group. Reuse one `Code` when processing
/// many blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    params: CodeParams,
    data_positions: Vec<usize>,
    groups: Vec<Vec<usize>>,
}

impl Code {
    pub fn new(params: CodeParams) -> Self {
        Self {
            params,
            data_positions: params.data_positions().collect(),
            groups: (0..params.k())
                .map(|i| mask_positions(i, params.n()).collect())
                .collect(),
        }
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn encode(&self, data: &BitBlock) -> Result<BitBlock> {
        self.params.expect_len(data, self.params.m())?;
        let mut word = vec![false; self.params.n()];
        self.encode_into(data.as_slice(), &mut word);
        Ok(word.into())
    }

    pub fn checking_number(&self, received: &BitBlock) -> Result<CheckingNumber> {
        self.params.expect_len(received, self.params.n())?;
        Ok(self.checking_number_of(received.as_slice()))
    }

    pub fn decode(&self, received: &BitBlock) -> Result<DecodeOutcome> {
        self.params.expect_len(received, self.params.n())?;
        let mut word = received.as_slice().to_vec();
        let mut data = vec![false; self.params.m()];
        let (checking_number, status) = self.decode_in_place(&mut word, &mut data);
        Ok(DecodeOutcome {
            data: data.into(),
            corrected_position: (status == DecodeStatus::Corrected)
                .then_some(checking_number.value),
            status,
            checking_number,
        })
    }

    pub fn extract_data(&self, codeword: &BitBlock) -> Result<BitBlock> {
        self.params.expect_len(codeword, self.params.n())?;
        let mut data = vec![false; self.params.m()];
        self.extract_into(codeword.as_slice(), &mut data);
        Ok(data.into())
    }

    // Slice kernels below; callers guarantee data.len() == m, word.len() == n.

    pub(crate) fn encode_into(&self, data: &[bool], word: &mut [bool]) {
        debug_assert_eq!(data.len(), self.params.m());
        debug_assert_eq!(word.len(), self.params.n());
        for (&pos, &bit) in self.data_positions.iter().zip(data) {
            word[pos - 1] = bit;
        }
        for group in &self.groups {
            // group[0] is the group's check position and the only one in it
            let (&check, rest) = group.split_first().expect("groups are nonempty");
            word[check - 1] = rest.iter().fold(false, |acc, &p| acc ^ word[p - 1]);
        }
    }

    pub(crate) fn checking_number_of(&self, word: &[bool]) -> CheckingNumber {
        debug_assert_eq!(word.len(), self.params.n());
        let mut value = 0usize;
        // right to left: group 0 decides the least significant bit
        for (i, group) in self.groups.iter().enumerate() {
            if group.iter().fold(false, |acc, &p| acc ^ word[p - 1]) {
                value |= 1 << i;
            }
        }
        CheckingNumber {
            value,
            k: self.params.k(),
        }
    }

    pub(crate) fn extract_into(&self, word: &[bool], data: &mut [bool]) {
        for (slot, &pos) in data.iter_mut().zip(&self.data_positions) {
            *slot = word[pos - 1];
        }
    }

    pub(crate) fn decode_in_place(
        &self,
        word: &mut [bool],
        data: &mut [bool],
    ) -> (CheckingNumber, DecodeStatus) {
        let checking_number = self.checking_number_of(word);
        let status = match checking_number.value {
            0 => DecodeStatus::Clean,
            c if c <= self.params.n() => {
                word[c - 1] = !word[c - 1];
                DecodeStatus::Corrected
            }
            _ => DecodeStatus::Uncorrectable,
        };
        self.extract_into(word, data);
        (checking_number, status)
    }
}
