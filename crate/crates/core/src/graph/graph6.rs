//! The graph6 interchange encoding.
//!
//! Bits of the upper triangle are taken column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six to a byte and offset by
//! 63. The order prefix is one byte for `n <= 62`, `~` plus three bytes for
//! `n <= 258047`, and `~~` plus six bytes beyond that.

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed order prefix")]
    BadLength,
    #[error("expected {expected} data bytes for n = {n}, found {found}")]
    WrongDataLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits after the last edge bit are not zero")]
    NonzeroPadding,
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::BadByte { offset, byte });
    }
    Ok((byte - 63) as usize)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let wide = |start: usize, count: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < start + count {
            return Err(Graph6Error::BadLength);
        }
        (start..start + count).try_fold(0usize, |acc, i| Ok((acc << 6) | sextet(bytes, i)?))
    };
    match bytes.first() {
        None => Err(Graph6Error::Empty),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let n = wide(2, 6)?;
            if n <= MEDIUM_MAX {
                return Err(Graph6Error::BadLength);
            }
            Ok((n, 8))
        }
        Some(&126) => {
            let n = wide(1, 3)?;
            if n <= SMALL_MAX {
                return Err(Graph6Error::BadLength);
            }
            Ok((n, 4))
        }
        Some(_) => Ok((sextet(bytes, 0)?, 1)),
    }
}

/// Parses one graph6 record. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, start) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(Graph6Error::WrongDataLength {
            n,
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sextet(bytes, start + k / 6)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(bytes, start + expected - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("decoded edges are in range"))
}
