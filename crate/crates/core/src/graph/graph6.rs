//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use super::{Graph, MAX_VERTICES};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (text.as_bytes(), 0),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte {b:#04x} outside 63..126")));
        }
    }
    let (n, header_len) = decode_size(bytes).map_err(|(off, msg)| Error::parse(base + off, msg))?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < need {
        return Err(Error::parse(
            base + bytes.len(),
            format!("payload has {} bytes, {} needed for {} vertices", payload.len(), need, n),
        ));
    }
    if payload.len() > need {
        return Err(Error::parse(base + header_len + need, "trailing bytes after payload"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, &'static str)> {
    let value =
        |range: std::ops::Range<usize>| bytes[range].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    match bytes {
        [] => Err((0, "empty record")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                Err((bytes.len(), "truncated 36-bit size header"))
            } else {
                Ok((value(2..8), 8))
            }
        }
        [126, ..] => {
            if bytes.len() < 4 {
                Err((bytes.len(), "truncated 18-bit size header"))
            } else {
                Ok((value(1..4), 4))
            }
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

pub(super) fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parse a graph6 stream: one record per line, blank lines skipped, an
/// optional `>>graph6<<` header tolerated on any line. Errors carry the line number.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == HEADER {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Parse { offset, message } => Error::parse(offset, format!("line {}: {message}", lineno + 1)),
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straightforward bit-string decoder used as an oracle.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bitstring = String::new();
        for &c in &b[1..] {
            bitstring.push_str(&format!("{:06b}", c - 63));
        }
        let bits: Vec<bool> = bitstring.chars().map(|c| c == '1').collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn decodes_small_records() {
        let g = parse_graph6("D?{").unwrap();
        let (n, edges) = reference_decode("D?{");
        assert_eq!(g.n(), n);
        assert_eq!(g.edges(), edges);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);

        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, Graph::complete(2));

        let e3 = parse_graph6("B?").unwrap();
        assert_eq!(e3.n(), 3);
        assert_eq!(e3.edge_count(), 0);
    }

    #[test]
    fn header_and_stream() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g, Graph::complete(2));
        let gs = parse_graph6_stream(">>graph6<<\nA_\n\nB?\n").unwrap();
        assert_eq!(gs.len(), 2);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("D? {"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("A_?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
        let err = parse_graph6_stream("A_\nD?\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn long_header_roundtrip() {
        let g = Graph::path(64);
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn encode_matches_known_records() {
        assert_eq!(Graph::complete(2).to_graph6(), "A_");
        assert_eq!(Graph::empty(3).unwrap().to_graph6(), "B?");
        assert_eq!(parse_graph6("D?{").unwrap().to_graph6(), "D?{");
    }
}
