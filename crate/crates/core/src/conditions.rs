//! Degree conditions, reported both as booleans and as margins.
//!
//! Condition `(M_k)` asks `d(x) + d(y) >= 2p - 2 + k` for every pair of
//! distinct non-adjacent vertices. [`meyniel_deficiency`] returns the least
//! value of `d(x) + d(y) - (2p - 2)` over such pairs, so `(M_k)` holds exactly
//! when the deficiency is at least `k`. None of the predicates here test
//! strong connectivity; callers combine that separately.

use std::fmt;

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Margin of the Meyniel-type condition. `AllAdjacent` compares above every
/// integer margin: a digraph with no non-adjacent pair satisfies every `(M_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Deficiency {
    Margin(i64),
    AllAdjacent,
}

impl Deficiency {
    /// Condition `(M_k)` holds.
    pub fn satisfies(self, k: i64) -> bool {
        self >= Deficiency::Margin(k)
    }
}

impl fmt::Display for Deficiency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deficiency::Margin(m) => write!(f, "{m}"),
            Deficiency::AllAdjacent => f.write_str("all-adjacent"),
        }
    }
}

fn require_order(g: &Digraph, min: usize) -> Result<()> {
    if g.order() < min {
        Err(Error::InvalidParameter(format!(
            "degree conditions need order >= {min}, got {}",
            g.order()
        )))
    } else {
        Ok(())
    }
}

/// Vertices other than `v` that are not adjacent to `v`.
#[inline]
fn non_neighbours(g: &Digraph, v: usize) -> VertexSet {
    g.vertices().difference(g.neighbours(v)).without(v)
}

/// Unordered non-adjacent pairs `(x, y)` with `x < y`.
fn non_adjacent_pairs(g: &Digraph) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.order()).flat_map(move |x| {
        non_neighbours(g, x)
            .iter()
            .filter(move |&y| y > x)
            .map(move |y| (x, y))
    })
}

pub fn meyniel_deficiency(g: &Digraph) -> Result<Deficiency> {
    require_order(g, 2)?;
    let p = g.order() as i64;
    Ok(non_adjacent_pairs(g)
        .map(|(x, y)| (g.total_degree(x) + g.total_degree(y)) as i64 - (2 * p - 2))
        .min()
        .map_or(Deficiency::AllAdjacent, Deficiency::Margin))
}

/// Condition `(M_k)`. Orders below 2 satisfy it vacuously.
pub fn satisfies_meyniel(g: &Digraph, k: i64) -> bool {
    let p = g.order() as i64;
    let need = 2 * p - 2 + k;
    (0..g.order()).all(|x| {
        let dx = g.total_degree(x) as i64;
        non_neighbours(g, x)
            .iter()
            .filter(|&y| y > x)
            .all(|y| dx + g.total_degree(y) as i64 >= need)
    })
}

pub fn min_out_degree(g: &Digraph) -> usize {
    (0..g.order()).map(|v| g.out_degree(v)).min().unwrap_or(0)
}

pub fn min_in_degree(g: &Digraph) -> usize {
    (0..g.order()).map(|v| g.in_degree(v)).min().unwrap_or(0)
}

pub fn min_degree(g: &Digraph) -> usize {
    (0..g.order()).map(|v| g.total_degree(v)).min().unwrap_or(0)
}

/// Every vertex has `od(x) >= p/2` and `id(x) >= p/2`.
pub fn nash_williams(g: &Digraph) -> bool {
    let p = g.order();
    (0..p).all(|v| 2 * g.out_degree(v) >= p && 2 * g.in_degree(v) >= p)
}

/// Every vertex has `d(x) >= p`.
pub fn ghouila_houri(g: &Digraph) -> bool {
    min_degree(g) >= g.order()
}

/// `od(x) + id(y) >= p` whenever `x != y` and there is no arc `x -> y`.
pub fn woodall(g: &Digraph) -> bool {
    let p = g.order();
    (0..p).all(|x| {
        let missing = g.vertices().difference(g.out_set(x)).without(x);
        missing
            .iter()
            .all(|y| g.out_degree(x) + g.in_degree(y) >= p)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicConditions {
    pub nash_williams: bool,
    pub ghouila_houri: bool,
    pub woodall: bool,
}

pub fn classic_conditions(g: &Digraph) -> Result<ClassicConditions> {
    require_order(g, 2)?;
    Ok(ClassicConditions {
        nash_williams: nash_williams(g),
        ghouila_houri: ghouila_houri(g),
        woodall: woodall(g),
    })
}

fn common_in(g: &Digraph, x: usize, y: usize) -> bool {
    !g.in_set(x).intersection(g.in_set(y)).is_empty()
}

fn common_out(g: &Digraph, x: usize, y: usize) -> bool {
    !g.out_set(x).intersection(g.out_set(y)).is_empty()
}

fn cross_sum_min(g: &Digraph, x: usize, y: usize) -> usize {
    (g.out_degree(x) + g.in_degree(y)).min(g.in_degree(x) + g.out_degree(y))
}

/// For non-adjacent `x, y` with a common in-neighbour:
/// `min{d(x), d(y)} >= n - 1` and `d(x) + d(y) >= 2n - 1`.
pub fn bjgl_51(g: &Digraph) -> bool {
    let n = g.order();
    non_adjacent_pairs(g)
        .filter(|&(x, y)| common_in(g, x, y))
        .all(|(x, y)| {
            let (dx, dy) = (g.total_degree(x), g.total_degree(y));
            dx.min(dy) + 1 >= n && dx + dy + 1 >= 2 * n
        })
}

/// For non-adjacent `x, y` with a common out- or in-neighbour:
/// `min{od(x) + id(y), id(x) + od(y)} >= n`.
pub fn bjgl_52(g: &Digraph) -> bool {
    let n = g.order();
    non_adjacent_pairs(g)
        .filter(|&(x, y)| common_in(g, x, y) || common_out(g, x, y))
        .all(|(x, y)| cross_sum_min(g, x, y) >= n)
}

/// For non-adjacent `x, y` with a common out- or in-neighbour:
/// `d(x) + d(y) >= 2n - 1` and `min{od(x) + id(y), id(x) + od(y)} >= n - 1`.
pub fn bgy_53(g: &Digraph) -> bool {
    let n = g.order();
    non_adjacent_pairs(g)
        .filter(|&(x, y)| common_in(g, x, y) || common_out(g, x, y))
        .all(|(x, y)| {
            g.total_degree(x) + g.total_degree(y) + 1 >= 2 * n && cross_sum_min(g, x, y) + 1 >= n
        })
}

/// For every triple of distinct `x, y, z` with `x, y` non-adjacent:
/// no arc `x -> z` forces `d(x) + d(y) + od(x) + id(z) >= 3n - 2`, and
/// no arc `z -> x` forces `d(x) + d(y) + id(x) + od(z) >= 3n - 2`.
/// Orders below 4 report `false`.
pub fn manoussakis_54(g: &Digraph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    let need = 3 * n - 2;
    non_adjacent_pairs(g)
        .flat_map(|(x, y)| [(x, y), (y, x)])
        .all(|(x, y)| {
            let base = g.total_degree(x) + g.total_degree(y);
            g.vertices().without(x).without(y).iter().all(|z| {
                (g.has_arc(x, z) || base + g.out_degree(x) + g.in_degree(z) >= need)
                    && (g.has_arc(z, x) || base + g.in_degree(x) + g.out_degree(z) >= need)
            })
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedConditions {
    pub bjgl_51: bool,
    pub bjgl_52: bool,
    pub bgy_53: bool,
    pub manoussakis_54: bool,
    pub notes: Vec<String>,
}

const NOTE_52: &str =
    "bjgl_52: min{od(x)+id(y), id(x)+od(y)} >= n applied to every non-adjacent pair with a common out- or in-neighbour";

pub fn extended_conditions(g: &Digraph) -> Result<ExtendedConditions> {
    require_order(g, 2)?;
    let mut notes = vec![NOTE_52.to_string()];
    if g.order() < 4 {
        notes.push(format!(
            "manoussakis_54: requires order >= 4, got {}",
            g.order()
        ));
    }
    Ok(ExtendedConditions {
        bjgl_51: bjgl_51(g),
        bjgl_52: bjgl_52(g),
        bgy_53: bgy_53(g),
        manoussakis_54: manoussakis_54(g),
        notes,
    })
}

/// All degree conditions of a digraph in one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub meyniel_deficiency: Deficiency,
    pub nash_williams: bool,
    pub ghouila_houri: bool,
    pub woodall: bool,
    pub bjgl_51: bool,
    pub bjgl_52: bool,
    pub bgy_53: bool,
    pub manoussakis_54: bool,
    pub notes: Vec<String>,
}

pub fn condition_report(g: &Digraph) -> Result<ConditionReport> {
    let classic = classic_conditions(g)?;
    let ext = extended_conditions(g)?;
    Ok(ConditionReport {
        meyniel_deficiency: meyniel_deficiency(g)?,
        nash_williams: classic.nash_williams,
        ghouila_houri: classic.ghouila_houri,
        woodall: classic.woodall,
        bjgl_51: ext.bjgl_51,
        bjgl_52: ext.bjgl_52,
        bgy_53: ext.bgy_53,
        manoussakis_54: ext.manoussakis_54,
        notes: ext.notes,
    })
}
