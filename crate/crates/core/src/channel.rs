//! Error injection and brute-force verification of a code's guarantees.
//!
//! Minimum distance is taken as the smallest nonzero codeword weight, which
//! is valid because the code is linear over GF(2). The enumerations are
//! bounded by [`MIN_DISTANCE_MAX_M`] and [`CORRECTION_MAX_M`] unless the
//! caller passes [`Guard::Forced`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::codec::{Code, DecodeStatus};
use crate::error::{Error, Result};
use crate::matrix::{
    find_column_permutation, parity_check_interleaved, parity_check_systematic, BinaryMatrix,
    ColumnPermutation,
};
use crate::params::{BitBlock, CodeParams};
use crate::rng::NoiseRng;

/// Largest `m` enumerated by [`weight_distribution`] and
/// [`min_distance_bruteforce`] without forcing.
pub const MIN_DISTANCE_MAX_M: usize = 20;

/// Largest `m` enumerated by [`exhaustive_correction_check`] without forcing.
pub const CORRECTION_MAX_M: usize = 16;

/// Absolute ceiling for any enumeration, forced or not.
const HARD_MAX_M: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guard {
    #[default]
    Enforced,
    /// Skip the desk-scale limits.
    Forced,
}

impl Guard {
    fn check(self, m: usize, limit: usize) -> Result<()> {
        let limit = match self {
            Guard::Enforced => limit,
            Guard::Forced => HARD_MAX_M,
        };
        if m > limit {
            return Err(Error::ResourceLimit { m, limit });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelMode {
    /// Flip the bit at this 1-based position.
    FlipPosition(usize),
    /// Binary symmetric channel with the given crossover probability.
    Bsc(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelConfig {
    pub mode: ChannelMode,
    pub seed: u64,
}

impl ChannelConfig {
    pub fn flip(position: usize) -> Self {
        Self {
            mode: ChannelMode::FlipPosition(position),
            seed: 0,
        }
    }

    pub fn bsc(crossover: f64, seed: u64) -> Result<Self> {
        validate_probability(crossover)?;
        Ok(Self {
            mode: ChannelMode::Bsc(crossover),
            seed,
        })
    }

    /// A generator positioned at the start of this config's stream.
    pub fn rng(&self) -> NoiseRng {
        NoiseRng::new(self.seed)
    }
}

fn validate_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "crossover probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Applies the channel to `codeword`, returning the corrupted block and the
/// positions that were actually flipped.
pub fn inject(
    codeword: &BitBlock,
    config: &ChannelConfig,
    rng: &mut NoiseRng,
) -> Result<(BitBlock, BTreeSet<usize>)> {
    let mut out = codeword.clone();
    let mut flipped = BTreeSet::new();
    match config.mode {
        ChannelMode::FlipPosition(p) => {
            out.flip(p)?;
            flipped.insert(p);
        }
        ChannelMode::Bsc(p_e) => {
            validate_probability(p_e)?;
            for pos in 1..=out.len() {
                if rng.bernoulli(p_e) {
                    out.flip(pos)?;
                    flipped.insert(pos);
                }
            }
        }
    }
    Ok((out, flipped))
}

/// Number of codewords of each Hamming weight, enumerating all `2^m` data
/// blocks through the encoder.
pub fn weight_distribution(params: &CodeParams, guard: Guard) -> Result<BTreeMap<usize, u64>> {
    guard.check(params.m(), MIN_DISTANCE_MAX_M)?;
    let code = Code::new(*params);
    let mut dist = BTreeMap::new();
    let mut data = vec![false; params.m()];
    let mut word = vec![false; params.n()];
    for value in 0..1u64 << params.m() {
        fill_from_uint(&mut data, value);
        code.encode_into(&data, &mut word);
        let weight = word.iter().filter(|&&b| b).count();
        *dist.entry(weight).or_insert(0) += 1;
    }
    Ok(dist)
}

/// Smallest weight over all nonzero codewords.
pub fn min_distance_bruteforce(params: &CodeParams, guard: Guard) -> Result<usize> {
    let dist = weight_distribution(params, guard)?;
    Ok(dist
        .keys()
        .copied()
        .find(|&w| w > 0)
        .expect("m >= 1 gives a nonzero codeword"))
}

/// Tally of (data block, flip position) pairs checked against the decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub corrected: u64,
    pub total: u64,
}

impl Coverage {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.corrected as f64 / self.total as f64
    }

    pub fn is_complete(&self) -> bool {
        self.total > 0 && self.corrected == self.total
    }
}

/// Flips every position of every codeword once and counts the cases the
/// decoder repairs with the right position and the original data.
pub fn exhaustive_correction_check(params: &CodeParams, guard: Guard) -> Result<Coverage> {
    guard.check(params.m(), CORRECTION_MAX_M)?;
    let code = Code::new(*params);
    let mut data = vec![false; params.m()];
    let mut codeword = vec![false; params.n()];
    let mut received = vec![false; params.n()];
    let mut recovered = vec![false; params.m()];
    let mut corrected = 0u64;
    let mut total = 0u64;
    for value in 0..1u64 << params.m() {
        fill_from_uint(&mut data, value);
        code.encode_into(&data, &mut codeword);
        for pos in 1..=params.n() {
            received.copy_from_slice(&codeword);
            received[pos - 1] = !received[pos - 1];
            let (checking, status) = code.decode_in_place(&mut received, &mut recovered);
            total += 1;
            if status == DecodeStatus::Corrected && checking.value() == pos && recovered == data {
                corrected += 1;
            }
        }
    }
    Ok(Coverage { corrected, total })
}

/// Monte-Carlo estimate of the probability that a block sent over BSC(p_e)
/// decodes to the wrong data. Data blocks are drawn from the same seeded
/// stream as the noise.
pub fn block_error_rate_sim(params: &CodeParams, p_e: f64, trials: u64, seed: u64) -> Result<f64> {
    validate_probability(p_e)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let code = Code::new(*params);
    let mut rng = NoiseRng::new(seed);
    let mut data = vec![false; params.m()];
    let mut word = vec![false; params.n()];
    let mut recovered = vec![false; params.m()];
    let mut failures = 0u64;
    for _ in 0..trials {
        for chunk in data.chunks_mut(64) {
            let bits = rng.next_u64();
            for (i, slot) in chunk.iter_mut().enumerate() {
                *slot = (bits >> i) & 1 == 1;
            }
        }
        code.encode_into(&data, &mut word);
        for bit in word.iter_mut() {
            if rng.bernoulli(p_e) {
                *bit = !*bit;
            }
        }
        code.decode_in_place(&mut word, &mut recovered);
        if recovered != data {
            failures += 1;
        }
    }
    Ok(failures as f64 / trials as f64)
}

fn fill_from_uint(bits: &mut [bool], value: u64) {
    let len = bits.len();
    for (i, slot) in bits.iter_mut().enumerate() {
        *slot = (value >> (len - 1 - i)) & 1 == 1;
    }
}

/// Everything `analyze` reports about one code.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub params: CodeParams,
    pub min_distance: usize,
    pub weight_distribution: BTreeMap<usize, u64>,
    pub coverage: Coverage,
    pub parity_check_interleaved: BinaryMatrix,
    pub parity_check_systematic: BinaryMatrix,
    pub permutation: ColumnPermutation,
}

impl AnalysisReport {
    pub fn rate(&self) -> (usize, usize) {
        self.params.rate()
    }

    pub fn correction_coverage(&self) -> f64 {
        self.coverage.fraction()
    }

    /// Flat `key=value` lines followed by both parity-check matrices as grids.
    pub fn to_kv_text(&self) -> String {
        let p = &self.params;
        let (num, den) = p.rate();
        let weights: Vec<String> = self
            .weight_distribution
            .iter()
            .map(|(w, c)| format!("{w}:{c}"))
            .collect();
        let perm: Vec<String> = self
            .permutation
            .mapping()
            .iter()
            .map(usize::to_string)
            .collect();
        let mut s = String::new();
        writeln!(s, "n={}", p.n()).unwrap();
        writeln!(s, "m={}", p.m()).unwrap();
        writeln!(s, "k={}", p.k()).unwrap();
        writeln!(s, "perfect={}", p.is_perfect()).unwrap();
        writeln!(s, "rate={num}/{den}").unwrap();
        writeln!(s, "rate_decimal={:.6}", p.rate_f64()).unwrap();
        writeln!(s, "min_distance={}", self.min_distance).unwrap();
        writeln!(s, "weight_distribution={}", weights.join(",")).unwrap();
        writeln!(s, "correction_cases={}", self.coverage.total).unwrap();
        writeln!(s, "correction_corrected={}", self.coverage.corrected).unwrap();
        writeln!(s, "correction_coverage={:.6}", self.coverage.fraction()).unwrap();
        writeln!(s, "column_permutation={}", perm.join(",")).unwrap();
        s.push_str("\n[parity_check_interleaved]\n");
        s.push_str(&self.parity_check_interleaved.to_grid());
        s.push_str("\n[parity_check_systematic]\n");
        s.push_str(&self.parity_check_systematic.to_grid());
        s
    }
}

pub fn analyze(params: &CodeParams, guard: Guard) -> Result<AnalysisReport> {
    let weight_distribution = weight_distribution(params, guard)?;
    let min_distance = weight_distribution
        .keys()
        .copied()
        .find(|&w| w > 0)
        .expect("m >= 1 gives a nonzero codeword");
    let coverage = exhaustive_correction_check(params, guard)?;
    let interleaved = parity_check_interleaved(params);
    let systematic = parity_check_systematic(params);
    let permutation = find_column_permutation(&interleaved, &systematic)?
        .expect("systematic form is a column permutation of the interleaved form");
    Ok(AnalysisReport {
        params: *params,
        min_distance,
        weight_distribution,
        coverage,
        parity_check_interleaved: interleaved,
        parity_check_systematic: systematic,
        permutation,
    })
}
