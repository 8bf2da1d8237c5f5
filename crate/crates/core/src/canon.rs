//! Canonical forms and isomorphism for small digraphs.
//!
//! Vertices are first coloured by `(out-degree, in-degree)` and the colouring
//! is refined until equitable. The search then individualizes each vertex of
//! the first non-singleton cell in turn, refines again, and recurses until the
//! partition is discrete. Every discrete partition is a vertex ordering; the
//! canonical form is the least adjacency bit string over those orderings.
//! Because every step depends only on the isomorphism class, two digraphs
//! get equal forms exactly when they are isomorphic.

use std::fmt;
use std::str::FromStr;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order accepted by the canonical-form search.
pub const CANON_MAX_ORDER: usize = 10;

/// Adjacency rows with the diagonal removed, under the canonical ordering.
///
/// Bit `t` of the string (0-based, row-major) is stored at position
/// `len - 1 - t` of `bits`, so numeric order is lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Length of the bit string, `p(p-1)`.
    pub fn bit_len(&self) -> usize {
        Digraph::arc_slots(self.order())
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The bit string as `'0'`/`'1'` characters.
    pub fn to_bit_string(&self) -> String {
        let len = self.bit_len();
        (0..len)
            .map(|t| {
                if self.bits >> (len - 1 - t) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// Lowercase hex of the bit string, zero-padded on the right to a whole
    /// number of nibbles. Order 1 has an empty string.
    pub fn to_hex(&self) -> String {
        let len = self.bit_len();
        let nibbles = len.div_ceil(4);
        let padded = self.bits << (nibbles * 4 - len);
        (0..nibbles)
            .rev()
            .map(|i| {
                let nib = (padded >> (i * 4)) as u32 & 0xf;
                char::from_digit(nib, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(order: usize, hex: &str) -> Result<Self> {
        if order == 0 || order > CANON_MAX_ORDER {
            return Err(Error::AboveBound {
                what: "canonical forms",
                order,
                limit: CANON_MAX_ORDER,
            });
        }
        let len = Digraph::arc_slots(order);
        let nibbles = len.div_ceil(4);
        if hex.len() != nibbles {
            return Err(Error::Parse(format!(
                "canonical form of order {order} needs {nibbles} hex digits, got {}",
                hex.len()
            )));
        }
        let mut padded = 0u128;
        for c in hex.chars() {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("bad hex digit {c:?}")))?;
            padded = padded << 4 | d as u128;
        }
        let pad = nibbles * 4 - len;
        if padded & ((1u128 << pad) - 1) != 0 {
            return Err(Error::Parse("nonzero padding bits".into()));
        }
        Ok(CanonicalForm {
            order: order as u8,
            bits: padded >> pad,
        })
    }

    /// The digraph whose identity ordering produces this bit string.
    pub fn to_digraph(&self) -> Digraph {
        let p = self.order();
        let len = self.bit_len();
        let mut arcs = Vec::new();
        let mut t = 0;
        for u in 0..p {
            for v in 0..p {
                if u == v {
                    continue;
                }
                if self.bits >> (len - 1 - t) & 1 == 1 {
                    arcs.push((u, v));
                }
                t += 1;
            }
        }
        Digraph::new(p, arcs).expect("canonical form decodes to a valid digraph")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.order, self.to_hex())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (order, hex) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected <order>:<hex>, got {s:?}")))?;
        let order = order
            .parse()
            .map_err(|_| Error::Parse(format!("bad order in {s:?}")))?;
        CanonicalForm::from_hex(order, hex)
    }
}

fn encode(g: &Digraph, perm: &[usize]) -> u128 {
    let mut bits = 0u128;
    for (i, &u) in perm.iter().enumerate() {
        let row = g.out_set(u);
        for (j, &v) in perm.iter().enumerate() {
            if i != j {
                bits = bits << 1 | row.contains(v) as u128;
            }
        }
    }
    bits
}

fn cell_count(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Refines an ordered colouring until equitable. Colours are re-ranked to
/// `0..cells`, ordered first by the previous colour.
fn refine(g: &Digraph, colors: &mut [u32]) {
    let p = colors.len();
    let mut cells = cell_count(colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..p)
            .map(|v| {
                let mut outs: Vec<u32> = g.out_set(v).iter().map(|w| colors[w]).collect();
                let mut ins: Vec<u32> = g.in_set(v).iter().map(|w| colors[w]).collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (colors[v], outs, ins)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..p {
            colors[v] = distinct.binary_search(&&sigs[v]).unwrap() as u32;
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

struct Best {
    bits: u128,
    perm: Vec<usize>,
}

#[derive(Default)]
struct State {
    best: Option<Best>,
    /// Automorphisms found by comparing equal leaves, as vertex maps.
    automorphisms: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Orbit representatives under the known automorphisms fixing `fixed`.
fn orbits(state: &State, fixed: &[usize], p: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..p).collect();
    for aut in &state.automorphisms {
        if fixed.iter().any(|&v| aut[v] != v) {
            continue;
        }
        for (v, &image) in aut.iter().enumerate().take(p) {
            let (a, b) = (find(&mut parent, v), find(&mut parent, image));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..p).map(|v| find(&mut parent, v)).collect()
}

fn search(g: &Digraph, colors: &[u32], path: &mut Vec<usize>, state: &mut State) {
    let p = colors.len();
    let mut sizes = vec![0usize; p];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let target = match (0..p).find(|&c| sizes[c] > 1) {
        None => {
            let mut perm = vec![0; p];
            for (v, &c) in colors.iter().enumerate() {
                perm[c as usize] = v;
            }
            let bits = encode(g, &perm);
            match &state.best {
                Some(b) if bits == b.bits => {
                    let mut aut = vec![0; p];
                    for (i, &v) in b.perm.iter().enumerate() {
                        aut[v] = perm[i];
                    }
                    state.automorphisms.push(aut);
                }
                Some(b) if bits > b.bits => {}
                _ => state.best = Some(Best { bits, perm }),
            }
            return;
        }
        Some(c) => c as u32,
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in 0..p {
        if colors[v] != target {
            continue;
        }
        let orbit = orbits(state, path, p);
        if tried.iter().any(|&t| orbit[t] == orbit[v]) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if w == v { 2 * c } else { 2 * c + 1 })
            .collect();
        refine(g, &mut next);
        path.push(v);
        search(g, &next, path, state);
        path.pop();
    }
}

/// Canonical form plus the ordering that realizes it: `perm[pos]` is the
/// vertex placed at canonical position `pos`.
pub fn canonical_labeling(g: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let p = g.order();
    if p > CANON_MAX_ORDER {
        return Err(Error::AboveBound {
            what: "canonical forms",
            order: p,
            limit: CANON_MAX_ORDER,
        });
    }
    let mut keys: Vec<(usize, usize)> = (0..p).map(|v| (g.out_degree(v), g.in_degree(v))).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let mut colors: Vec<u32> = keys
        .drain(..)
        .map(|k| sorted.binary_search(&k).unwrap() as u32)
        .collect();
    refine(g, &mut colors);
    let mut state = State::default();
    search(g, &colors, &mut Vec::new(), &mut state);
    let best = state.best.expect("search visits at least one leaf");
    Ok((
        CanonicalForm {
            order: p as u8,
            bits: best.bits,
        },
        best.perm,
    ))
}

pub fn canonical_form(g: &Digraph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// An isomorphism `g -> h` as a map `map[v_g] = v_h`, if one exists.
pub fn isomorphism(g: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() || g.arc_count() != h.arc_count() {
        return Ok(None);
    }
    let (fg, pg) = canonical_labeling(g)?;
    let (fh, ph) = canonical_labeling(h)?;
    if fg != fh {
        return Ok(None);
    }
    let mut map = vec![0; g.order()];
    for (i, &v) in pg.iter().enumerate() {
        map[v] = ph[i];
    }
    Ok(Some(map))
}
