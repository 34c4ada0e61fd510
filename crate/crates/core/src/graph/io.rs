//! graph6 and edge-list text formats.
//!
//! graph6 follows McKay's definition: an order prefix (one byte for
//! `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes beyond)
//! followed by the upper triangle of the adjacency matrix in column order,
//! six bits per printable byte.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6 byte offset {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

fn g6_err(offset: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 record. A leading `>>graph6<<` header and one trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let body = text
        .strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text);
    let (bytes, base) = match body.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => {
            if body.starts_with(">>") {
                return Err(g6_err(0, "malformed header"));
            }
            (body.as_bytes(), 0)
        }
    };
    let sixes = |range: std::ops::Range<usize>| -> Result<u64, ParseError> {
        let mut value = 0u64;
        for i in range {
            let b = *bytes
                .get(i)
                .ok_or_else(|| g6_err(base + i, "truncated order"))?;
            if !(63..=126).contains(&b) {
                return Err(g6_err(base + i, format!("byte {b} outside 63..=126")));
            }
            value = (value << 6) | u64::from(b - 63);
        }
        Ok(value)
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(g6_err(base, "empty input")),
        Some(126) if bytes.get(1) == Some(&126) => (sixes(2..8)?, 8),
        Some(126) => (sixes(1..4)?, 4),
        Some(_) => (sixes(0..1)?, 1),
    };
    let n = usize::try_from(n).map_err(|_| g6_err(base, "order too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() < pos + need {
        return Err(g6_err(base + bytes.len(), "truncated adjacency data"));
    }
    if bytes.len() > pos + need {
        return Err(g6_err(base + pos + need, "trailing bytes"));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut taken = 0;
    while taken < bits {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + pos, format!("byte {b} outside 63..=126")));
        }
        let chunk = b - 63;
        for shift in (0..6).rev() {
            if taken == bits {
                if chunk & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(g6_err(base + pos, "nonzero padding bits"));
                }
                break;
            }
            if chunk >> shift & 1 == 1 {
                edges.push((i, j));
            }
            taken += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Graph::from_edges(n, edges).map_err(|e| g6_err(base, e.to_string()))
}

/// Canonical graph6 encoding, no header, no trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn el_err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        reason: reason.into(),
    }
}

/// Parses the `n m` header plus `m` lines of `u v`. Blank lines are skipped;
/// line numbers in errors are 1-based.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line: usize, s: &str| -> Result<(usize, usize), ParseError> {
        let mut it = s.split_whitespace();
        let mut next = || {
            it.next()
                .ok_or_else(|| el_err(line, "expected two integers"))?
                .parse::<usize>()
                .map_err(|e| el_err(line, e.to_string()))
        };
        let pair = (next()?, next()?);
        if it.next().is_some() {
            return Err(el_err(line, "expected two integers"));
        }
        Ok(pair)
    };
    let (hline, header) = lines.next().ok_or_else(|| el_err(1, "missing header"))?;
    let (n, m) = pair(hline, header)?;
    let mut g_edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last = hline;
    for (line, s) in lines {
        last = line;
        let (u, v) = pair(line, s)?;
        if u >= n || v >= n {
            return Err(el_err(line, format!("vertex id {} >= n = {n}", u.max(v))));
        }
        if u == v {
            return Err(el_err(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(el_err(line, format!("duplicate edge {u} {v}")));
        }
        g_edges.push((u, v));
    }
    if g_edges.len() != m {
        return Err(el_err(
            last,
            format!("header declares {m} edges, found {}", g_edges.len()),
        ));
    }
    Graph::from_edges(n, g_edges).map_err(|e: GraphError| el_err(last, e.to_string()))
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_cases() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        let e = parse_graph6("A_").unwrap();
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert_eq!(
            parse_graph6("C~~"),
            Err(ParseError::Graph6 {
                offset: 2,
                reason: "trailing bytes".into()
            })
        );
        assert!(matches!(
            parse_graph6("C\u{7f}"),
            Err(ParseError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(">>graph7<<C~"),
            Err(ParseError::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(parse_graph6("C"), Err(ParseError::Graph6 { .. })));
        // "A_" with a padding bit set.
        assert!(matches!(
            parse_graph6("A`"),
            Err(ParseError::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn graph6_extended_order() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edgelist_parse_and_errors() {
        let t = parse_edgelist("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(t.size(), 3);
        assert!(t.is_regular(2));
        assert!(matches!(
            parse_edgelist("2 1\n0 0"),
            Err(ParseError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edgelist("3 2\n0 1\n1 0"),
            Err(ParseError::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            parse_edgelist("2 1\n0 2"),
            Err(ParseError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edgelist("3 2\n0 1"),
            Err(ParseError::EdgeList { .. })
        ));
        assert_eq!(emit_edgelist(&t), "3 3\n0 1\n0 2\n1 2\n");
    }
}
