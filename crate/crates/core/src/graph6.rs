//! graph6 encoding and decoding.
//!
//! Layout: `N(n)` followed by `R(x)`, where `x` is the upper triangle of the
//! adjacency matrix read column by column (`(0,1),(0,2),(1,2),(0,3),...`),
//! packed six bits per byte, big-endian, zero padded, each byte offset by 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
const MAX_N: usize = 68_719_476_735;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
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

/// Canonical graph6 text for `g` (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    let b = *bytes
        .get(at)
        .ok_or_else(|| parse_err(at, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(parse_err(at, format!("byte {b:#04x} outside 63..=126")));
    }
    Ok((b - 63) as u64)
}

/// Decodes one graph6 string. An optional `>>graph6<<` header is accepted.
/// Offsets in errors count from the start of `text`.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text[base..];
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n <= 62 {
            return Err(parse_err(base, "four-byte size header used for n <= 62"));
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n <= 258_047 {
            return Err(parse_err(base, "eight-byte size header used for n <= 258047"));
        }
        (n as usize, 8)
    };
    if n == 0 {
        return Err(parse_err(base, "graph6 encodes a graph with no vertices"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        let at = base + pos + need.min(bytes.len() - pos);
        return Err(parse_err(
            at,
            format!(
                "expected {need} adjacency bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut cur = 0u64;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                cur = sextet(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if cur >> left & 1 == 1 {
                g.set(i, j);
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, bits);
    if left > 0 && cur & ((1 << left) - 1) != 0 {
        return Err(parse_err(base + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse {
            offset: offset + by,
            reason,
        },
        other => other,
    }
}

/// Reads one graph per line; blank lines are skipped. Parse failures carry
/// the 1-based line number.
pub fn read_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end_matches(['\r', '\n']).trim();
        if trimmed.is_empty() {
            continue;
        }
        let g = from_graph6(trimmed.as_bytes()).map_err(|e| Error::Stream {
            line: idx + 1,
            source: Box::new(e),
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_encodings() {
        // n = 2: one bit (0,1) = 1 -> 100000b = 32, 32 + 63 = '_'
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        // n = 5: ten zero bits -> two bytes of '?'
        assert_eq!(to_graph6(&Graph::empty(5)), "D??");
        assert_eq!(from_graph6(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(from_graph6(b"D??").unwrap(), Graph::empty(5));
        assert_eq!(from_graph6(b">>graph6<<A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn reference_string() {
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6(b"DQc").unwrap(), g);
    }

    #[test]
    fn path_round_trip() {
        let p3 = Graph::path(3);
        assert_eq!(from_graph6(to_graph6(&p3).as_bytes()).unwrap(), p3);
    }

    #[test]
    fn extended_length() {
        let g = Graph::cycle(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        match from_graph6(b"A") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match from_graph6(b"A_?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        // 'A' followed by 'a' = 97 - 63 = 34 = 100010b: padding bit set
        match from_graph6(b"Aa") {
            Err(Error::Parse { offset, reason }) => {
                assert_eq!(offset, 1);
                assert!(reason.contains("padding"));
            }
            other => panic!("{other:?}"),
        }
        assert!(from_graph6(b"A\x20").is_err());
        assert!(from_graph6(b"").is_err());
        assert!(from_graph6(b"?").is_err());
    }

    #[test]
    fn stream_reports_line_numbers() {
        let text = "A_\n\n@\nBad!\n";
        match read_stream(text.as_bytes()) {
            Err(Error::Stream { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        let ok = read_stream("A_\r\n\n@\n".as_bytes()).unwrap();
        assert_eq!(ok.len(), 2);
    }
}
