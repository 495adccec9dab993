//! graph6 encoding: `N(n)` length prefix followed by the upper triangle of the
//! adjacency matrix in column order, six bits per byte, offset by 63.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count read or written.
pub const GRAPH6_CAP: usize = 100_000;

const HEADER: &[u8] = b">>graph6<<";

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(malformed(offset, format!("byte {b:#04x} outside 63..=126"))),
        None => Err(malformed(offset, "truncated length field")),
    }
}

fn read_size(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let first = sextet(bytes, start)?;
    if first < 63 {
        return Ok((first as usize, start + 1));
    }
    let (width, from) = if sextet(bytes, start + 1)? == 63 {
        (6, start + 2)
    } else {
        (3, start + 1)
    };
    let mut n = 0u64;
    for i in 0..width {
        n = (n << 6) | sextet(bytes, from + i)?;
    }
    let small_limit = if width == 3 { 63 } else { 258_048 };
    if n < small_limit {
        return Err(malformed(start, format!("non-canonical length encoding for n = {n}")));
    }
    if n > GRAPH6_CAP as u64 {
        return Err(Error::TooLarge {
            v: n as usize,
            cap: GRAPH6_CAP,
        });
    }
    Ok((n as usize, from + width))
}

/// Decodes one graph6 code word. An optional `>>graph6<<` header and a single
/// trailing newline are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    let start = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let (n, body) = read_size(bytes, start)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    if bytes.len() < body + body_len {
        return Err(malformed(
            bytes.len(),
            format!("expected {body_len} adjacency bytes, found {}", bytes.len() - body),
        ));
    }
    if bytes.len() > body + body_len {
        return Err(malformed(body + body_len, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = body + bit / 6;
            let value = sextet(bytes, offset)?;
            if value >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        let offset = body + body_len - 1;
        let pad = bits % 6;
        if sextet(bytes, offset)? & ((1 << (6 - pad)) - 1) != 0 {
            return Err(malformed(offset, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Canonical graph6 bytes for `g`, without header or newline.
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.vertex_count();
    if n > GRAPH6_CAP {
        return Err(Error::TooLarge { v: n, cap: GRAPH6_CAP });
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
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
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, petersen};
    use proptest::prelude::*;

    #[test]
    fn known_code_words() {
        let k5 = parse_graph6(b"D~{").unwrap();
        assert_eq!(k5, complete(5));
        let single = parse_graph6(b"@").unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        assert_eq!(write_graph6(&Graph::empty(2)).unwrap(), b"A?");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), b"?");
        // Petersen in the numbering used by the tests module
        let p = petersen();
        assert_eq!(parse_graph6(&write_graph6(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(b">>graph6<<D~{\n").unwrap(), complete(5));
        assert_eq!(parse_graph6(b"D~{\r\n").unwrap(), complete(5));
    }

    #[test]
    fn large_sizes_use_long_prefix() {
        let g = cycle(100);
        let bytes = write_graph6(&g).unwrap();
        assert_eq!(&bytes[..4], &[126, 63, 64, 99][..]);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn malformed_words_report_offsets() {
        let cases: &[(&[u8], usize)] = &[
            (b"", 0),
            (b"D~", 2),
            (b"D~{{", 3),
            (b"D~ ", 2),
            (b"D~|", 2),
            (b" ", 0),
            (b"~??", 3),
            (b"~~", 2),
        ];
        for (word, offset) in cases {
            match parse_graph6(word) {
                Err(Error::Graph6 { offset: o, .. }) => {
                    assert_eq!(o, *offset, "{:?}", String::from_utf8_lossy(word))
                }
                other => panic!("{:?} -> {other:?}", String::from_utf8_lossy(word)),
            }
        }
        assert!(matches!(
            parse_graph6(b"~?@?"),
            Err(Error::Graph6 { .. })
        ));
        assert!(matches!(
            parse_graph6(b"~~??A??@"),
            Err(Error::TooLarge { .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..40, seed in proptest::collection::vec(any::<bool>(), 780)) {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if seed[idx] {
                        g.add_edge(i, j).unwrap();
                    }
                    idx += 1;
                }
            }
            let bytes = write_graph6(&g).unwrap();
            prop_assert!(bytes.iter().all(|b| (63..=126).contains(b)));
            let back = parse_graph6(&bytes).unwrap();
            prop_assert_eq!(write_graph6(&back).unwrap(), bytes);
            prop_assert_eq!(back, g);
        }
    }
}
