//! Text formats: digraph6 and edge lists.
//!
//! digraph6 here is `&`, one character `p + 63`, then the full `p x p`
//! adjacency matrix (diagonal included) row-major, cut into 6-bit groups
//! most significant bit first, zero-padded, each group written as
//! `group + 63`. Only orders up to 62 are supported.
//!
//! An edge list starts with `p <order>` followed by one `u v` arc per line.
//! Blank lines and anything after `#` are ignored.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const DIGRAPH6_MAX_ORDER: usize = 62;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn encode_digraph6(g: &Digraph) -> Result<String> {
    let p = g.order();
    if p > DIGRAPH6_MAX_ORDER {
        return Err(Error::AboveBound {
            what: "digraph6 encoding",
            order: p,
            limit: DIGRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(2 + (p * p).div_ceil(6));
    out.push('&');
    out.push((p as u8 + 63) as char);
    let bits = p * p;
    for chunk in 0..bits.div_ceil(6) {
        let mut group = 0u8;
        for b in 0..6 {
            let t = chunk * 6 + b;
            let set = t < bits && g.has_arc(t / p, t % p);
            group = group << 1 | set as u8;
        }
        out.push((group + 63) as char);
    }
    Ok(out)
}

pub fn decode_digraph6(text: &str) -> Result<Digraph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(parse_err("digraph6 text must start with '&'"));
    }
    let Some(&head) = bytes.get(1) else {
        return Err(parse_err("digraph6 text has no order character"));
    };
    if !(64..=63 + DIGRAPH6_MAX_ORDER as u8).contains(&head) {
        return Err(parse_err(format!(
            "digraph6 order character {:?} is outside orders 1..={DIGRAPH6_MAX_ORDER}",
            head as char
        )));
    }
    let p = (head - 63) as usize;
    let bits = p * p;
    let body = &bytes[2..];
    if body.len() != bits.div_ceil(6) {
        return Err(parse_err(format!(
            "digraph6 body for order {p} needs {} characters, got {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut arcs = Vec::new();
    for (chunk, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(format!(
                "invalid digraph6 character {:?}",
                c as char
            )));
        }
        let group = c - 63;
        for b in 0..6 {
            if group >> (5 - b) & 1 == 0 {
                continue;
            }
            let t = chunk * 6 + b;
            if t >= bits {
                return Err(parse_err("digraph6 padding bits must be zero"));
            }
            let (u, v) = (t / p, t % p);
            if u == v {
                return Err(parse_err(format!("digraph6 text has a loop at vertex {u}")));
            }
            arcs.push((u, v));
        }
    }
    Digraph::new(p, arcs)
}

pub fn encode_edge_list(g: &Digraph) -> String {
    let mut arcs: Vec<_> = g.arcs().collect();
    arcs.sort_unstable();
    let mut out = format!("p {}\n", g.order());
    for (u, v) in arcs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_number(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(format!("line {line}: expected a number, got {tok:?}")))
}

pub fn decode_edge_list(text: &str) -> Result<Digraph> {
    let mut order = None;
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (order, toks.as_slice()) {
            (None, ["p", n]) => order = Some(parse_number(n, line)?),
            (None, _) => {
                return Err(parse_err(format!(
                    "line {line}: expected header \"p <order>\""
                )))
            }
            (Some(_), [u, v]) => arcs.push((parse_number(u, line)?, parse_number(v, line)?)),
            (Some(_), _) => {
                return Err(parse_err(format!("line {line}: expected \"u v\"")));
            }
        }
    }
    let order = order.ok_or_else(|| parse_err("edge list has no \"p <order>\" header"))?;
    Digraph::new(order, arcs)
}

/// Decodes either format: digraph6 when the text starts with `&`.
pub fn read_digraph(text: &str) -> Result<Digraph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('&') {
        decode_digraph6(trimmed.lines().next().unwrap_or(""))
    } else {
        decode_edge_list(text)
    }
}
