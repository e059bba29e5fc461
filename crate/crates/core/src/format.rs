//! Text formats: graph6 and a plain edge list.
//!
//! Edge-list files look like
//!
//! ```text
//! # P_4
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! A header line `n m`, then `m` lines `u v` with 0-based vertices. Anything
//! after `#` on a line is ignored.

use crate::{Error, Graph, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";
const SMALL_N_MAX: usize = 62;
const MEDIUM_N_MAX: usize = 258_047;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Encodes `g` as a graph6 line (without header or newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= SMALL_N_MAX {
        out.push(n as u8 + 63);
    } else {
        let (width, prefix): (u32, &[u8]) = if n <= MEDIUM_N_MAX { (3, b"~") } else { (6, b"~~") };
        out.extend_from_slice(prefix);
        for k in (0..width).rev() {
            out.push(((n as u64 >> (6 * k)) & 0x3f) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(format!("graph6 byte {:#04x} at position {pos} is outside 63..=126", bytes[pos])));
    }
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => (read_size(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (read_size(rest, 3)?, &rest[3..]),
        [first, rest @ ..] => ((first - 63) as usize, rest),
        [] => unreachable!(),
    };
    if n == 0 {
        return Err(parse_err("graph6 graph with zero vertices"));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!("graph6 body for n = {n} needs {expected} bytes, got {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(parse_err("graph6 padding bits are not zero"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn read_size(bytes: &[u8], width: usize) -> Result<usize> {
    if bytes.len() < width {
        return Err(parse_err("truncated graph6 size field"));
    }
    Ok(bytes[..width].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());
    let pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [a, b] => {
                let a = a.parse().map_err(|_| parse_err(format!("line {lineno}: bad integer {a:?}")))?;
                let b = b.parse().map_err(|_| parse_err(format!("line {lineno}: bad integer {b:?}")))?;
                Ok((a, b))
            }
            _ => Err(parse_err(format!("line {lineno}: expected two integers, got {line:?}"))),
        }
    };
    let (lineno, header) = rows.next().ok_or_else(|| parse_err("edge list is empty"))?;
    let (n, m) = pair(lineno, header)?;
    let edges = rows.map(|(i, line)| pair(i, line)).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(parse_err(format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}
