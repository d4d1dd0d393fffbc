//! Graph interchange formats: graph6 and a plain edge list.
//!
//! graph6 layout: a size header (one byte `63+n` for `n <= 62`, `'~'` plus
//! three bytes for `n <= 258047`, `"~~"` plus six bytes beyond that) followed
//! by the upper triangle of the adjacency matrix in column order
//! `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian six bits per byte with
//! `63` added to keep every byte printable. Zero padding completes the final
//! byte; padding bits must be zero.

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

/// Encodes a graph as a graph6 string (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(OFFSET + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12u32, 6, 0] {
            bytes.push(OFFSET + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            bytes.push(OFFSET + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                bytes.push(OFFSET + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(OFFSET + (acc << (6 - nbits)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Parses a graph6 string. Errors carry the byte offset of the offending
/// character.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse("byte", 0, "empty graph6 input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::parse(
                "byte",
                i,
                format!("byte {b:#04x} outside printable graph6 range 63..=126"),
            ));
        }
    }
    let (n, pos) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::parse("byte", bytes.len(), "truncated 8-byte size header"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Error::parse("byte", bytes.len(), "truncated 4-byte size header"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        (n, 4)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(Error::parse(
            "byte",
            bytes.len().min(pos + nbytes),
            format!(
                "graph6 body for n={n} needs {nbytes} bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut b = GraphBuilder::new(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6];
            if (byte - OFFSET) >> (5 - bit % 6) & 1 == 1 {
                b.add_edge(i, j);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // Padding bits of the final byte must be zero.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(
                "byte",
                bytes.len() - 1,
                "nonzero padding bits in final graph6 byte",
            ));
        }
    }
    Ok(b.build())
}

/// Parses a plain edge list: first line `n m`, then `m` lines `u v` with
/// 0-indexed endpoints. Blank lines are ignored; errors carry line numbers
/// (1-based).
pub fn parse_edge_list(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line", 1, "missing 'n m' header"))?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, what: &str, lineno: usize| -> Result<usize> {
        tok.ok_or_else(|| Error::parse("line", lineno, format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::parse("line", lineno, format!("invalid {what}")))
    };
    let n = parse_num(it.next(), "vertex count", lineno)?;
    let m = parse_num(it.next(), "edge count", lineno)?;
    if it.next().is_some() {
        return Err(Error::parse("line", lineno, "trailing tokens after 'n m'"));
    }
    let mut b = GraphBuilder::new(n);
    let mut count = 0usize;
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), "endpoint", lineno)?;
        let v = parse_num(it.next(), "endpoint", lineno)?;
        if it.next().is_some() {
            return Err(Error::parse("line", lineno, "trailing tokens after edge"));
        }
        if u >= n || v >= n {
            return Err(Error::parse(
                "line",
                lineno,
                format!("edge ({u},{v}) out of range for n={n}"),
            ));
        }
        if u == v {
            return Err(Error::parse("line", lineno, format!("loop at vertex {u}")));
        }
        if b.has_edge(u, v) {
            return Err(Error::parse("line", lineno, format!("duplicate edge ({u},{v})")));
        }
        b.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::parse(
            "line",
            1,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(b.build())
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    // Expected strings below are derived by hand from the format arithmetic:
    // e.g. K4 has n=4 -> header 'C' (63+4) and upper-triangle bits 111111 ->
    // 63+63 = '~'.
    #[test]
    fn emit_known_small_graphs() {
        assert_eq!(emit_graph6(&complete(4)), "C~");
        assert_eq!(emit_graph6(&complete(3)), "Bw"); // 111000 -> 63+56='w'
        assert_eq!(emit_graph6(&path(3)), "Bg"); // bits 1,0,1 -> 101000 -> 'g'
        assert_eq!(emit_graph6(&cycle(4)), "Cl"); // 101101 -> 63+45='l'
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn parse_known_small_graphs() {
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(parse_graph6("Cl\n").unwrap(), cycle(4));
        let e = parse_graph6("@").unwrap();
        assert_eq!((e.n(), e.m()), (1, 0));
    }

    #[test]
    fn round_trip_multibyte_header() {
        // n=100 needs the '~' + 3 byte header.
        let g = path(100);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn round_trip_is_identity_on_emitted_strings() {
        for g in [path(7), cycle(9), complete(6), Graph::empty(5), star(12)] {
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(emit_graph6(&back), s);
        }
    }

    use crate::graph::star;

    #[test]
    fn parse_errors_carry_offsets() {
        // Byte 1 below the printable range.
        let err = parse_graph6("C\x20aa").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 1, .. }), "{err}");
        // Wrong body length.
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C").is_err());
        // Nonzero padding: n=3 uses 3 bits + 3 padding bits; 'w' = 111111.
        let err = parse_graph6("Bw~").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err2 = parse_graph6("B\x7f").unwrap_err(); // 0x7f > 126
        assert!(matches!(err2, Error::Parse { offset: 1, .. }));
    }

    #[test]
    fn padding_must_be_zero() {
        // n=3, single edge (0,1): bits 100 + 3 padding zeros -> 0b100000 ->
        // 63+32 = '_'. Setting a padding bit (0b100001 -> '`') must fail.
        assert_eq!(emit_graph6(&Graph::from_edges(3, &[(0, 1)]).unwrap()), "B_");
        assert!(parse_graph6("B_").is_ok());
        assert!(parse_graph6("B`").is_err(), "padding bit set");
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5);
        let s = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&s).unwrap(), g);
        assert!(s.starts_with("5 5\n"));
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { unit: "line", offset: 2, .. }), "{err}");
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { unit: "line", .. }));
        let err = parse_edge_list("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 3, .. }));
        let err = parse_edge_list("x y\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 1, .. }));
    }
}
