//! Step-by-step rendering of how a received word is checked.
//!
//! For each check group the trace lists the member positions, their binary
//! form and the received bits, then the group sum. The sums are assembled
//! into the checking number from right to left and the last line states
//! what the decoder does with it. Columns are right-aligned to a fixed width
//! so the output is stable across runs.

use std::fmt::Write as _;

use crate::codec::Code;
use crate::error::Result;
use crate::params::{mask_positions, BitBlock, CodeParams};

pub fn render_trace(received: &BitBlock, params: &CodeParams) -> Result<String> {
    params.expect_len(received, params.n())?;
    let (n, k) = (params.n(), params.k());
    let width = k.max(n.to_string().len()) + 1;
    let mut s = String::new();

    writeln!(s, "received {received}  n={n} m={} k={k}", params.m()).unwrap();
    for i in 0..k {
        let members: Vec<usize> = mask_positions(i, n).collect();
        let sum = members.iter().fold(false, |acc, &p| acc ^ received.bit(p));
        writeln!(s, "s{} group {i}, check position {}", i + 1, 1usize << i).unwrap();
        s.push_str("  position");
        for &p in &members {
            write!(s, "{p:>width$}").unwrap();
        }
        s.push_str("\n  binary  ");
        for &p in &members {
            write!(s, "{:>width$}", format!("{p:0k$b}")).unwrap();
        }
        s.push_str("\n  bit     ");
        for &p in &members {
            write!(s, "{:>width$}", received.bit(p) as u8).unwrap();
        }
        let terms: Vec<String> = members.iter().map(|p| format!("x{p}")).collect();
        writeln!(s, "\n  {} = {}", terms.join("+"), sum as u8).unwrap();
    }

    let checking = Code::new(*params).checking_number_of(received.as_slice());
    let sums: Vec<String> = (1..=k)
        .rev()
        .map(|i| format!("s{i}={}", (checking.value() >> (i - 1)) & 1))
        .collect();
    writeln!(s, "right to left: {}", sums.join(" ")).unwrap();
    let c = checking.value();
    if c == 0 {
        writeln!(s, "checking number 0; no error").unwrap();
    } else if c <= n {
        writeln!(
            s,
            "checking number {}₂ = {c}; flip position {c}",
            checking.to_binary_string()
        )
        .unwrap();
    } else {
        writeln!(
            s,
            "checking number {}₂ = {c}; exceeds n = {n}, uncorrectable",
            checking.to_binary_string()
        )
        .unwrap();
    }
    Ok(s)
}
