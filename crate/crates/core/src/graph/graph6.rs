//! graph6 encoding.
//!
//! Format reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! Orders up to 62 use a single header byte `n + 63`; the upper triangle is
//! written column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) in 6-bit
//! big-endian groups, each offset by 63. Only orders up to 32 are accepted.

use std::io::{BufRead, Write};

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub fn write_graph6(g: &Graph) -> String {
    String::from_utf8(graph6_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        let row = g.rows()[v];
        for u in 0..v {
            acc = acc << 1 | (row >> u & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::parse(0, "empty input"));
    };
    if !(63..=126).contains(&head) {
        return Err(Error::parse(0, format!("invalid header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(Error::parse(
            0,
            format!("multi-byte order header; orders above {MAX_ORDER} are not supported"),
        ));
    }
    let n = (head - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::parse(
            0,
            format!("order {n} exceeds the supported maximum {MAX_ORDER}"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let body_len = nbits.div_ceil(6);
    if bytes.len() < 1 + body_len {
        return Err(Error::parse(
            bytes.len(),
            format!("truncated body: expected {body_len} bytes after the header"),
        ));
    }
    if bytes.len() > 1 + body_len {
        return Err(Error::parse(1 + body_len, "trailing bytes after graph"));
    }
    let mut rows = vec![0u32; n];
    let mut k = 0;
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1 + i, format!("invalid body byte {b:#04x}")));
        }
        let val = b - 63;
        for shift in (0..6).rev() {
            let bit = val >> shift & 1 == 1;
            if k >= nbits {
                if bit {
                    return Err(Error::parse(1 + i, "non-zero padding bits"));
                }
            } else {
                if bit {
                    let (u, v) = pair_of(k);
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
                k += 1;
            }
        }
    }
    Graph::from_rows(&rows)
}

/// Maps a bit index to the pair `(u, v)`, `u < v`, in column order.
fn pair_of(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= k {
        start += v;
        v += 1;
    }
    (k - start, v)
}

/// Reads one graph6 string per line. Empty lines are rejected.
pub fn read_census<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

pub fn write_census<W: Write>(graphs: &[Graph], mut w: W) -> Result<()> {
    for g in graphs {
        w.write_all(&graph6_bytes(g))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{census_upto, tests::arb_graph, Family};
    use crate::Limits;
    use proptest::prelude::*;

    /// Independent encoder: builds the bit string as text, then chunks it.
    fn oracle_encode(g: &Graph) -> String {
        let n = g.order();
        let mut bits = String::new();
        for v in 1..n {
            for u in 0..v {
                bits.push(if g.has_edge(u, v) { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let val = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((val + 63) as char);
        }
        s
    }

    #[test]
    fn decodes_five_vertex_star() {
        // D?{ : bits 0000001111 -> every vertex < 4 adjacent to 4
        let g = parse_graph6("D?{").unwrap();
        let star = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, star);
        assert_eq!(oracle_encode(&star), "D?{");
    }

    #[test]
    fn single_vertex_and_null() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::edgeless(1).unwrap());
        assert_eq!(parse_graph6("?").unwrap(), Graph::null());
        assert_eq!(write_graph6(&Graph::null()), "?");
    }

    #[test]
    fn reports_error_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("~??"), Err(Error::Parse { offset: 0, .. })));
        // order 33
        let s = format!("{}", (33u8 + 63) as char);
        assert!(matches!(parse_graph6(&s), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("D?{x"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("D? "), Err(Error::Parse { offset: 2, .. })));
        // C_3 needs 3 bits; the low three padding bits of 'A'+... must be zero
        assert!(matches!(parse_graph6("Bx"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn census_file_round_trip() {
        let graphs = census_upto(5, &Limits::default()).unwrap();
        let mut buf = Vec::new();
        write_census(&graphs, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        for line in text.lines() {
            assert_eq!(write_graph6(&parse_graph6(line).unwrap()), line);
        }
        assert_eq!(read_census(&buf[..]).unwrap(), graphs);
        assert!(read_census(&b"@\n\n"[..]).is_err());
    }

    #[test]
    fn named_graphs_encode_like_oracle() {
        for (fam, p) in [
            (Family::Complete, vec![7]),
            (Family::Cycle, vec![12]),
            (Family::Path, vec![32]),
            (Family::CycleUnion, vec![4, 5]),
        ] {
            let g = crate::graph::make_named(fam, &p).unwrap();
            assert_eq!(write_graph6(&g), oracle_encode(&g));
        }
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(32)) {
            let s = write_graph6(&g);
            prop_assert_eq!(&s, &oracle_encode(&g));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
