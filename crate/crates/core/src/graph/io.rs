//! Edge-list text and graph6.
//!
//! Edge list: `#` comment lines, an optional `p <n> <m>` header (vertices
//! `0..n` are implied, so isolated vertices survive), then one `u v` edge per
//! line. Graphs whose identifiers are not exactly `0..n` are written without
//! a header, declaring isolated vertices with `v <id>` lines.

use std::fmt::Write as _;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    if g.is_dense() {
        writeln!(s, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    } else {
        for v in g.vertices().filter(|&v| g.degree(v) == 0) {
            writeln!(s, "v {v}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = 0usize;
    let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| err(line_no, &format!("not a non-negative integer: {t:?}")));
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, "duplicate header"));
                }
                if edges > 0 {
                    return Err(err(line_no, "header after edges"));
                }
                if toks.len() != 3 {
                    return Err(err(line_no, "header must be `p <n> <m>`"));
                }
                let (n, m) = (num(toks[1])?, num(toks[2])?);
                for v in 0..n {
                    b.add_vertex(v);
                }
                header = Some((n, m, line_no));
            }
            "v" => {
                if toks.len() != 2 {
                    return Err(err(line_no, "vertex line must be `v <id>`"));
                }
                b.add_vertex(num(toks[1])?);
            }
            _ => {
                if toks.len() != 2 {
                    return Err(err(line_no, "edge line must be `u v`"));
                }
                let (u, v) = (num(toks[0])?, num(toks[1])?);
                if u == v {
                    return Err(err(line_no, "self-loop"));
                }
                if let Some((n, _, _)) = header {
                    if u >= n || v >= n {
                        return Err(err(line_no, &format!("vertex out of range for n = {n}")));
                    }
                }
                b.add_edge(u, v);
                edges += 1;
            }
        }
    }
    let g = b.build();
    if let Some((_, m, line)) = header {
        if g.edge_count() != m || edges != m {
            return Err(err(line, &format!("header declares {m} edges, found {edges} lines / {} distinct", g.edge_count())));
        }
    }
    Ok(g)
}

fn encode_n(n: usize, out: &mut Vec<u8>) -> Result<()> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else if n <= 68_719_476_735 {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::Graph6(format!("n = {n} too large")));
    }
    Ok(())
}

/// graph6 encoding; vertices are taken in ascending identifier order.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let (h, _) = g.canonical_relabel();
    let n = h.vertex_count();
    let mut out = Vec::new();
    encode_n(n, &mut out)?;
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(h.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                x |= 1;
            }
        }
        out.push(x + 63);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::Graph6(format!("invalid byte {c}")));
    }
    let get = |i: usize| bytes.get(i).map(|&c| (c - 63) as usize).ok_or_else(|| Error::Graph6("truncated".into()));
    let (n, mut pos) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | get(i)?;
            }
            (n, 8)
        } else {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | get(i)?;
            }
            (n, 4)
        }
    } else {
        (get(0)?, 1)
    };
    let total = n * n.saturating_sub(1) / 2;
    let need = total.div_ceil(6);
    if bytes.len() != pos + need {
        return Err(Error::Graph6(format!("expected {} bytes, found {}", pos + need, bytes.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut cur = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = get(pos)?;
                pos += 1;
            }
            if (cur >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == total {
                break 'outer;
            }
        }
    }
    let pad_bits = need * 6 - total;
    if pad_bits > 0 && cur & ((1 << pad_bits) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding".into()));
    }
    Ok(Graph::from_edges(n, &edges))
}
