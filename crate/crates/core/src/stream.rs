//! Framing of byte payloads into Hamming blocks.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! offset  size  field
//! 0       4     magic "HMNG"
//! 4       1     version (1)
//! 5       2     m
//! 7       1     k
//! 8       8     payload_bit_length
//! 16      ...   packed codewords
//! ```
//!
//! Payload bits are read MSB-first from each byte and cut into blocks of `m`
//! bits; the last block is zero-padded. Each block's `n`-bit codeword is
//! appended MSB-first (position 1 first) with no gaps between blocks, and
//! the final byte is zero-padded. The body must be exactly
//! `ceil(blocks * n / 8)` bytes long.

use std::collections::BTreeSet;

use crate::channel::{inject, ChannelConfig};
use crate::codec::{Code, DecodeStatus};
use crate::error::{Error, Result};
use crate::params::{BitBlock, CodeParams};

pub const MAGIC: [u8; 4] = *b"HMNG";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameHeader {
    pub params: CodeParams,
    pub payload_bit_length: u64,
}

impl FrameHeader {
    pub fn new(params: CodeParams, payload_bit_length: u64) -> Result<Self> {
        if u16::try_from(params.m()).is_err() || u8::try_from(params.k()).is_err() {
            return Err(Error::InvalidParameter(format!(
                "{params} does not fit the header (m <= 65535, k <= 255)"
            )));
        }
        if !payload_bit_length.is_multiple_of(8) {
            return Err(Error::InvalidParameter(
                "payload bit length must be a whole number of bytes".into(),
            ));
        }
        Ok(Self {
            params,
            payload_bit_length,
        })
    }

    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..4].copy_from_slice(&MAGIC);
        out[4] = VERSION;
        out[5..7].copy_from_slice(&(self.params.m() as u16).to_le_bytes());
        out[7] = self.params.k() as u8;
        out[8..16].copy_from_slice(&self.payload_bit_length.to_le_bytes());
        out
    }

    pub fn parse(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::Format(format!(
                "{} bytes is shorter than the {HEADER_LEN}-byte header",
                bytes.len()
            )));
        }
        if bytes[..4] != MAGIC {
            return Err(Error::Format(format!("bad magic {:02x?}", &bytes[..4])));
        }
        if bytes[4] != VERSION {
            return Err(Error::Format(format!(
                "unsupported version {} (expected {VERSION})",
                bytes[4]
            )));
        }
        let m = u16::from_le_bytes([bytes[5], bytes[6]]) as usize;
        let k = bytes[7] as usize;
        let params = CodeParams::new(m, k)
            .map_err(|e| Error::Format(format!("header parameters (m={m}, k={k}): {e}")))?;
        let payload_bit_length = u64::from_le_bytes(bytes[8..16].try_into().expect("8 bytes"));
        if !payload_bit_length.is_multiple_of(8) {
            return Err(Error::Format(format!(
                "payload bit length {payload_bit_length} is not a multiple of 8"
            )));
        }
        Ok(Self {
            params,
            payload_bit_length,
        })
    }

    pub fn block_count(&self) -> u64 {
        self.payload_bit_length.div_ceil(self.params.m() as u64)
    }

    /// Size in bytes of the packed codeword body, `None` on overflow.
    pub fn body_len(&self) -> Option<usize> {
        let bits = self.block_count().checked_mul(self.params.n() as u64)?;
        usize::try_from(bits.div_ceil(8)).ok()
    }

    pub fn stream_len(&self) -> Option<usize> {
        self.body_len()?.checked_add(HEADER_LEN)
    }
}

/// Per-block decoder result inside a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockOutcome {
    pub status: DecodeStatus,
    pub corrected_position: Option<usize>,
    pub checking_number: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StreamReport {
    pub blocks: Vec<BlockOutcome>,
}

impl StreamReport {
    pub fn corrected(&self) -> usize {
        self.count(DecodeStatus::Corrected)
    }

    pub fn uncorrectable(&self) -> usize {
        self.count(DecodeStatus::Uncorrectable)
    }

    /// True when any block could not be repaired.
    pub fn is_degraded(&self) -> bool {
        self.uncorrectable() > 0
    }

    fn count(&self, status: DecodeStatus) -> usize {
        self.blocks.iter().filter(|b| b.status == status).count()
    }
}

pub fn encode_stream(payload: &[u8], params: &CodeParams) -> Result<Vec<u8>> {
    let bit_len = (payload.len() as u64)
        .checked_mul(8)
        .ok_or_else(|| Error::InvalidParameter("payload too large".into()))?;
    let header = FrameHeader::new(*params, bit_len)?;
    let body_len = header
        .body_len()
        .ok_or_else(|| Error::InvalidParameter("payload too large".into()))?;

    let (m, n) = (params.m(), params.n());
    let mut out = vec![0u8; HEADER_LEN + body_len];
    out[..HEADER_LEN].copy_from_slice(&header.to_bytes());

    let code = Code::new(*params);
    let body = &mut out[HEADER_LEN..];
    let payload_bits = payload.len() * 8;
    let blocks = header.block_count() as usize;
    let mut data = vec![false; m];
    let mut word = vec![false; n];
    for b in 0..blocks {
        for (i, slot) in data.iter_mut().enumerate() {
            let idx = b * m + i;
            *slot = idx < payload_bits && get_bit(payload, idx);
        }
        code.encode_into(&data, &mut word);
        write_bits(body, b * n, &word);
    }
    Ok(out)
}

/// Validates the header and the body length; returns the header.
pub fn parse_stream(coded: &[u8]) -> Result<FrameHeader> {
    let header = FrameHeader::parse(coded)?;
    let expected = header
        .stream_len()
        .ok_or_else(|| Error::Format("declared payload length overflows".into()))?;
    if coded.len() < expected {
        return Err(Error::Format(format!(
            "truncated stream: {} bytes, header requires {expected}",
            coded.len()
        )));
    }
    if coded.len() > expected {
        return Err(Error::Format(format!(
            "{} trailing bytes after the last block",
            coded.len() - expected
        )));
    }
    Ok(header)
}

pub fn decode_stream(coded: &[u8]) -> Result<(Vec<u8>, StreamReport)> {
    let header = parse_stream(coded)?;
    let params = header.params;
    let (m, n) = (params.m(), params.n());
    let blocks = header.block_count() as usize;
    let payload_bits = header.payload_bit_length as usize;

    let body = &coded[HEADER_LEN..];
    let mut payload = vec![0u8; payload_bits / 8];
    let mut report = StreamReport {
        blocks: Vec::with_capacity(blocks),
    };
    let code = Code::new(params);
    let mut word = vec![false; n];
    let mut data = vec![false; m];
    for b in 0..blocks {
        read_bits(body, b * n, &mut word);
        let (checking, status) = code.decode_in_place(&mut word, &mut data);
        report.blocks.push(BlockOutcome {
            status,
            corrected_position: (status == DecodeStatus::Corrected).then_some(checking.value()),
            checking_number: checking.value(),
        });
        // padding past payload_bit_length is dropped
        let start = b * m;
        let take = m.min(payload_bits - start);
        write_bits(&mut payload, start, &data[..take]);
    }
    Ok((payload, report))
}

/// Flips 1-based `position` of block `block` (0-based) in a coded stream.
pub fn flip_stream_bit(coded: &mut [u8], block: usize, position: usize) -> Result<()> {
    let header = parse_stream(coded)?;
    let n = header.params.n();
    if block as u64 >= header.block_count() {
        return Err(Error::InvalidParameter(format!(
            "block {block} does not exist (stream has {})",
            header.block_count()
        )));
    }
    if position == 0 || position > n {
        return Err(Error::PositionRange { position, n });
    }
    coded[HEADER_LEN + (block * n + position - 1) / 8] ^= 0x80 >> ((block * n + position - 1) % 8);
    Ok(())
}

/// Reads block `block` of a coded stream as a received word.
pub fn stream_block(coded: &[u8], block: usize) -> Result<BitBlock> {
    let header = parse_stream(coded)?;
    if block as u64 >= header.block_count() {
        return Err(Error::InvalidParameter(format!(
            "block {block} does not exist (stream has {})",
            header.block_count()
        )));
    }
    let n = header.params.n();
    let mut word = vec![false; n];
    read_bits(&coded[HEADER_LEN..], block * n, &mut word);
    Ok(word.into())
}

/// Runs every codeword of the stream through `config`, one generator shared
/// across blocks in order. Header and padding bits are never touched.
/// Returns the flipped `(block, position)` pairs.
pub fn corrupt_stream(
    coded: &mut [u8],
    config: &ChannelConfig,
) -> Result<BTreeSet<(usize, usize)>> {
    let header = parse_stream(coded)?;
    let n = header.params.n();
    let blocks = header.block_count() as usize;
    let body = &mut coded[HEADER_LEN..];
    let mut rng = config.rng();
    let mut flipped = BTreeSet::new();
    let mut word = vec![false; n];
    for b in 0..blocks {
        read_bits(body, b * n, &mut word);
        let (noisy, positions) = inject(&BitBlock::from(word.clone()), config, &mut rng)?;
        write_bits(body, b * n, noisy.as_slice());
        flipped.extend(positions.into_iter().map(|p| (b, p)));
    }
    Ok(flipped)
}

// MSB-first bit addressing: bit 0 is the top bit of byte 0.

fn get_bit(bytes: &[u8], idx: usize) -> bool {
    bytes[idx / 8] & (0x80 >> (idx % 8)) != 0
}

fn read_bits(bytes: &[u8], start: usize, out: &mut [bool]) {
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = get_bit(bytes, start + i);
    }
}

fn write_bits(bytes: &mut [u8], start: usize, bits: &[bool]) {
    for (i, &bit) in bits.iter().enumerate() {
        let idx = start + i;
        let mask = 0x80 >> (idx % 8);
        if bit {
            bytes[idx / 8] |= mask;
        } else {
            bytes[idx / 8] &= !mask;
        }
    }
}
