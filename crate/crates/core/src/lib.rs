//! Hamming's interleaved single-error-correcting codes for any valid `(n, m)`.
//!
//! Check bits sit at positions `1, 2, 4, ..., 2^(k-1)`, data bits everywhere
//! else. Each check bit zeroes the mod-2 sum of its group, the positions
//! whose binary form has the matching bit set. When a single bit is flipped
//! in transit, the failing group sums spell its position in binary.
//!
//! ```
//! use hamming::{decode, derive_params, encode, BitBlock, DecodeStatus};
//!
//! let params = derive_params(4).unwrap(); // the (7, 4) code
//! let data: BitBlock = "1011".parse().unwrap();
//! let mut word = encode(&data, &params).unwrap();
//! assert_eq!(word.to_string(), "0110011");
//!
//! word.flip(5).unwrap();
//! let out = decode(&word, &params).unwrap();
//! assert_eq!(out.status, DecodeStatus::Corrected);
//! assert_eq!(out.corrected_position, Some(5));
//! assert_eq!(out.data, data);
//! ```

pub mod channel;
pub mod codec;
mod error;
pub mod matrix;
pub mod params;
pub mod rng;
pub mod stream;
pub mod trace;

pub use channel::{
    analyze, block_error_rate_sim, exhaustive_correction_check, inject, min_distance_bruteforce,
    weight_distribution, AnalysisReport, ChannelConfig, ChannelMode, Coverage, Guard,
};
pub use codec::{
    compute_checking_number, decode, encode, extract_data, CheckingNumber, Code, DecodeOutcome,
    DecodeStatus,
};
pub use error::{Error, Result};
pub use matrix::{
    find_column_permutation, generator_matrix, parity_check_interleaved, parity_check_systematic,
    BinaryMatrix, ColumnPermutation,
};
pub use params::{
    check_mask, classify_position, derive_params, overall_parity, BitBlock, CodeParams,
    PositionClass,
};
pub use rng::NoiseRng;
pub use stream::{decode_stream, encode_stream, FrameHeader, StreamReport};
pub use trace::render_trace;
