//! Exact witness search and the constructive insertion operations.
//!
//! All searches branch on the least vertex first, so the first witness found
//! is the lexicographically least one and repeated calls agree.

use std::fmt;

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by exhaustive cycle enumeration.
pub const SPECTRUM_MAX_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    HamCycle,
    HamPath,
    /// Hamiltonian path whose first vertex dominates its last.
    HamBypass,
    /// `D(p,n)`: two internally disjoint paths with `n - 1` and `p - n + 1` arcs.
    Dpn(usize),
    CycleOfLength(usize),
}

/// A certified structure, given as explicit vertex sequences.
///
/// Cycles list each vertex once (the closing arc is implied). For `Dpn`,
/// `path` is the short path and `second` the long one; both run from the
/// same first vertex to the same last vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub path: Vec<usize>,
    pub second: Option<Vec<usize>>,
}

impl Witness {
    fn new(kind: WitnessKind, path: Vec<usize>) -> Self {
        Witness {
            kind,
            path,
            second: None,
        }
    }
}

fn join(seq: &[usize]) -> String {
    seq.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WitnessKind::HamCycle => write!(f, "hamcycle {}", join(&self.path)),
            WitnessKind::HamPath => write!(f, "hampath {}", join(&self.path)),
            WitnessKind::HamBypass => write!(f, "bypass {}", join(&self.path)),
            WitnessKind::CycleOfLength(k) => write!(f, "cycle{k} {}", join(&self.path)),
            WitnessKind::Dpn(n) => write!(
                f,
                "dpn{n} {} ; {}",
                join(&self.path),
                join(self.second.as_deref().unwrap_or(&[]))
            ),
        }
    }
}

/// Set of cycle lengths present in a digraph, as a bit mask over lengths.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CycleSpectrum(u64);

impl CycleSpectrum {
    pub fn contains(self, len: usize) -> bool {
        len < 64 && self.0 >> len & 1 == 1
    }

    pub fn lengths(self) -> Vec<usize> {
        VertexSet::from_bits(self.0).iter().collect()
    }

    pub fn longest(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Cycles of every length `3..=p`.
    pub fn is_pancyclic(self, order: usize) -> bool {
        (3..=order).all(|len| self.contains(len))
    }
}

impl fmt::Debug for CycleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.lengths()).finish()
    }
}

impl fmt::Display for CycleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        f.write_str(
            &self
                .lengths()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )?;
        f.write_str("}")
    }
}

/// Least path starting at `start` that visits every vertex of `within`
/// exactly once and ends in `ends`.
fn spanning_path(
    g: &Digraph,
    start: usize,
    within: VertexSet,
    ends: VertexSet,
) -> Option<Vec<usize>> {
    fn go(g: &Digraph, path: &mut Vec<usize>, left: VertexSet, ends: VertexSet) -> bool {
        let cur = *path.last().unwrap();
        if left.is_empty() {
            return ends.contains(cur);
        }
        if left.intersection(ends).is_empty() {
            return false;
        }
        for next in g.out_set(cur).intersection(left) {
            path.push(next);
            if go(g, path, left.without(next), ends) {
                return true;
            }
            path.pop();
        }
        false
    }
    if !within.contains(start) {
        return None;
    }
    let mut path = Vec::with_capacity(within.len());
    path.push(start);
    go(g, &mut path, within.without(start), ends).then_some(path)
}

fn require_order(g: &Digraph, min: usize, what: &str) -> Result<()> {
    if g.order() < min {
        Err(Error::InvalidParameter(format!(
            "{what} needs order >= {min}, got {}",
            g.order()
        )))
    } else {
        Ok(())
    }
}

pub fn find_hamiltonian_cycle(g: &Digraph) -> Result<Option<Witness>> {
    require_order(g, 2, "Hamiltonian cycle search")?;
    Ok(spanning_path(g, 0, g.vertices(), g.in_set(0))
        .map(|p| Witness::new(WitnessKind::HamCycle, p)))
}

pub fn is_hamiltonian(g: &Digraph) -> bool {
    g.order() >= 2 && spanning_path(g, 0, g.vertices(), g.in_set(0)).is_some()
}

/// Calls `visit` with every Hamiltonian cycle as a sequence starting at 0,
/// in lexicographic order, until `visit` returns `false`.
pub fn for_each_hamiltonian_cycle<F>(g: &Digraph, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    fn go<F: FnMut(&[usize]) -> bool>(
        g: &Digraph,
        path: &mut Vec<usize>,
        left: VertexSet,
        visit: &mut F,
    ) -> bool {
        let cur = *path.last().unwrap();
        if left.is_empty() {
            return !g.has_arc(cur, path[0]) || visit(path);
        }
        for next in g.out_set(cur).intersection(left) {
            path.push(next);
            let more = go(g, path, left.without(next), visit);
            path.pop();
            if !more {
                return false;
            }
        }
        true
    }
    if g.order() < 2 {
        return;
    }
    let mut path = vec![0];
    go(g, &mut path, g.vertices().without(0), &mut visit);
}

pub fn find_hamiltonian_path(g: &Digraph) -> Option<Witness> {
    let all = g.vertices();
    (0..g.order())
        .find_map(|s| spanning_path(g, s, all, all))
        .map(|p| Witness::new(WitnessKind::HamPath, p))
}

/// Least Hamiltonian path `v_1 ... v_p` with an arc `v_1 -> v_p`.
pub fn find_hamiltonian_bypass(g: &Digraph) -> Result<Option<Witness>> {
    require_order(g, 3, "Hamiltonian bypass search")?;
    Ok(bypass_path(g).map(|p| Witness::new(WitnessKind::HamBypass, p)))
}

pub fn has_hamiltonian_bypass(g: &Digraph) -> bool {
    g.order() >= 3 && bypass_path(g).is_some()
}

fn bypass_path(g: &Digraph) -> Option<Vec<usize>> {
    let all = g.vertices();
    (0..g.order()).find_map(|s| {
        let ends = g.out_set(s);
        if ends.is_empty() {
            None
        } else {
            spanning_path(g, s, all, ends)
        }
    })
}

/// `D(p,n)` for `2 <= n <= p - 1`; `n = p - 1` mirrors `n = 3`.
pub fn find_dpn(g: &Digraph, n: usize) -> Result<Option<Witness>> {
    let p = g.order();
    if n < 2 || p < 3 || n >= p {
        return Err(Error::InvalidParameter(format!(
            "D(p,n) search needs 2 <= n <= p-1, got p = {p}, n = {n}"
        )));
    }
    if n == 2 {
        return Ok(bypass_path(g).map(|path| Witness {
            kind: WitnessKind::Dpn(2),
            path: vec![path[0], path[p - 1]],
            second: Some(path),
        }));
    }
    fn short_paths(
        g: &Digraph,
        path: &mut Vec<usize>,
        used: VertexSet,
        n: usize,
        found: &mut Option<(Vec<usize>, Vec<usize>)>,
    ) {
        let cur = *path.last().unwrap();
        if path.len() == n {
            let x = path[0];
            let within = g.vertices().difference(used).with(x).with(cur);
            if let Some(long) = spanning_path(g, x, within, VertexSet::singleton(cur)) {
                *found = Some((path.clone(), long));
            }
            return;
        }
        for next in g.out_set(cur).difference(used) {
            path.push(next);
            short_paths(g, path, used.with(next), n, found);
            path.pop();
            if found.is_some() {
                return;
            }
        }
    }
    for x in 0..p {
        let mut found = None;
        short_paths(g, &mut vec![x], VertexSet::singleton(x), n, &mut found);
        if let Some((short, long)) = found {
            return Ok(Some(Witness {
                kind: WitnessKind::Dpn(n),
                path: short,
                second: Some(long),
            }));
        }
    }
    Ok(None)
}

/// Exact set of cycle lengths in `[2, p]`.
///
/// Subset dynamic programming: each cycle is counted from its smallest
/// vertex `s`, extending paths through vertices larger than `s`.
pub fn cycle_spectrum(g: &Digraph) -> Result<CycleSpectrum> {
    let p = g.order();
    if p > SPECTRUM_MAX_ORDER {
        return Err(Error::AboveBound {
            what: "cycle spectrum",
            order: p,
            limit: SPECTRUM_MAX_ORDER,
        });
    }
    let mut ends = vec![0u16; 1 << p];
    for s in 0..p {
        ends[1 << s] = 1 << s;
    }
    let mut spectrum = 0u64;
    for mask in 1usize..1 << p {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        let len = mask.count_ones();
        let above = !((2u64 << s) - 1) & g.vertices().bits();
        for v in VertexSet::from_bits(e as u64) {
            let out = g.out_set(v).bits();
            if len >= 2 && out >> s & 1 == 1 {
                spectrum |= 1 << len;
            }
            for w in VertexSet::from_bits(out & above & !(mask as u64)) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(CycleSpectrum(spectrum))
}

/// Least cycle of exactly `len` vertices using only vertices of `within`
/// and passing through `through` (when given).
fn cycle_in(
    g: &Digraph,
    len: usize,
    within: VertexSet,
    through: Option<usize>,
) -> Option<Vec<usize>> {
    fn go(
        g: &Digraph,
        path: &mut Vec<usize>,
        allowed: VertexSet,
        len: usize,
        through: Option<usize>,
    ) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == len {
            return g.has_arc(cur, path[0]) && through.is_none_or(|t| path.contains(&t));
        }
        for next in g.out_set(cur).intersection(allowed) {
            path.push(next);
            if go(g, path, allowed.without(next), len, through) {
                return true;
            }
            path.pop();
        }
        false
    }
    if len < 2 || len > within.len() {
        return None;
    }
    let starts = match through {
        Some(t) => VertexSet::singleton(t),
        None => within,
    };
    for s in starts {
        // without a required vertex, s is the smallest vertex of the cycle
        let allowed = match through {
            Some(_) => within.without(s),
            None => VertexSet::from_bits(within.bits() & !((2u64 << s) - 1)),
        };
        let mut path = vec![s];
        if go(g, &mut path, allowed, len, None) {
            return Some(path);
        }
    }
    None
}

/// Least cycle with exactly `len` vertices.
pub fn find_cycle_of_length(g: &Digraph, len: usize) -> Option<Witness> {
    cycle_in(g, len, g.vertices(), None).map(|c| Witness::new(WitnessKind::CycleOfLength(len), c))
}

/// A longest cycle, if the digraph has any cycle.
pub fn find_longest_cycle(g: &Digraph) -> Result<Option<Witness>> {
    let spectrum = cycle_spectrum(g)?;
    Ok(spectrum
        .longest()
        .and_then(|len| find_cycle_of_length(g, len)))
}

fn check_path(g: &Digraph, path: &[usize]) -> Result<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    for &v in path {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        if seen.contains(v) {
            return Err(Error::Precondition(format!(
                "vertex {v} repeats on the path"
            )));
        }
        seen.insert(v);
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_arc(w[0], w[1])) {
        return Err(Error::Precondition(format!(
            "{} -> {} is not an arc",
            w[0], w[1]
        )));
    }
    Ok(seen)
}

fn check_cycle(g: &Digraph, cycle: &[usize]) -> Result<VertexSet> {
    if cycle.len() < 2 {
        return Err(Error::Precondition(
            "a cycle needs at least 2 vertices".into(),
        ));
    }
    let set = check_path(g, cycle)?;
    let (first, last) = (cycle[0], cycle[cycle.len() - 1]);
    if !g.has_arc(last, first) {
        return Err(Error::Precondition(format!(
            "closing arc {last} -> {first} is missing"
        )));
    }
    Ok(set)
}

fn check_outside(g: &Digraph, on: VertexSet, x: usize) -> Result<()> {
    if x >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    if on.contains(x) {
        return Err(Error::Precondition(format!(
            "vertex {x} already lies on it"
        )));
    }
    Ok(())
}

fn insertion_slot(g: &Digraph, path: &[usize], x: usize) -> Option<usize> {
    path.windows(2)
        .position(|w| g.has_arc(w[0], x) && g.has_arc(x, w[1]))
}

/// Splices `x` between consecutive path vertices `x_i -> x -> x_{i+1}`,
/// using the least such `i`.
pub fn insert_into_path(g: &Digraph, path: &[usize], x: usize) -> Result<Option<Vec<usize>>> {
    let on = check_path(g, path)?;
    check_outside(g, on, x)?;
    Ok(insertion_slot(g, path, x).map(|i| {
        let mut out = path.to_vec();
        out.insert(i + 1, x);
        out
    }))
}

/// A `k`-cycle `x, c_j, c_{j+1}, ..., c_{j+k-2}` through `x` and a run of
/// consecutive cycle vertices, for the least `j`.
fn segment_cycle(g: &Digraph, cycle: &[usize], x: usize, k: usize) -> Option<Vec<usize>> {
    let m = cycle.len();
    (0..m).find_map(|j| {
        let last = cycle[(j + k - 2) % m];
        (g.has_arc(x, cycle[j]) && g.has_arc(last, x)).then(|| {
            let mut out = Vec::with_capacity(k);
            out.push(x);
            out.extend((0..k - 1).map(|t| cycle[(j + t) % m]));
            out
        })
    })
}

/// A cycle with `k` vertices through `x` that uses only `V(C)` and `x`.
///
/// Tries cycles made of `x` and consecutive vertices of `C` first, then
/// falls back to exhaustive search, so `None` means no such cycle exists.
pub fn insert_into_cycle(
    g: &Digraph,
    cycle: &[usize],
    x: usize,
    k: usize,
) -> Result<Option<Vec<usize>>> {
    let on = check_cycle(g, cycle)?;
    check_outside(g, on, x)?;
    let m = cycle.len();
    if k < 2 || k > m + 1 {
        return Err(Error::InvalidParameter(format!(
            "target length must lie in 2..={} , got {k}",
            m + 1
        )));
    }
    if let Some(c) = segment_cycle(g, cycle, x, k) {
        return Ok(Some(c));
    }
    Ok(cycle_in(g, k, on.with(x), Some(x)))
}

/// Inserts members of `set` one at a time, least vertex first, until none
/// fits. Returns the extended path (same endpoints) and the leftovers.
pub fn extend_path_maximally(
    g: &Digraph,
    path: &[usize],
    set: VertexSet,
) -> Result<(Vec<usize>, VertexSet)> {
    let on = check_path(g, path)?;
    if path.len() < 2 {
        return Err(Error::Precondition("path needs at least 2 vertices".into()));
    }
    if !set.is_subset(g.vertices()) || !set.intersection(on).is_empty() {
        return Err(Error::Precondition(
            "vertex set must lie in the digraph and avoid the path".into(),
        ));
    }
    let mut current = path.to_vec();
    let mut left = set;
    'grow: loop {
        for y in left {
            if let Some(i) = insertion_slot(g, &current, y) {
                current.insert(i + 1, y);
                left.remove(y);
                continue 'grow;
            }
        }
        return Ok((current, left));
    }
}

/// A cycle on exactly `V(C) ∪ set`, or `None` if there is none.
pub fn extend_cycle_with_set(
    g: &Digraph,
    cycle: &[usize],
    set: VertexSet,
) -> Result<Option<Vec<usize>>> {
    let on = check_cycle(g, cycle)?;
    if !set.is_subset(g.vertices()) || !set.intersection(on).is_empty() {
        return Err(Error::Precondition(
            "vertex set must lie in the digraph and avoid the cycle".into(),
        ));
    }
    let mut current = cycle.to_vec();
    let mut left = set;
    'grow: while !left.is_empty() {
        for y in left {
            if let Some(c) = segment_cycle(g, &current, y, current.len() + 1) {
                current = c;
                left.remove(y);
                continue 'grow;
            }
        }
        break;
    }
    if left.is_empty() {
        return Ok(Some(current));
    }
    let within = on.union(set);
    let s = within.min().unwrap();
    Ok(spanning_path(g, s, within, g.in_set(s)))
}

/// Evaluation of the three statements about a vertex `y` off a
/// `(p-1)`-cycle `x_1 ... x_{p-1}` in a digraph with no Hamiltonian bypass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffCycleReport {
    /// `od(y, {x_i, x_{i+1}}) <= 1` and `id(y, {x_i, x_{i+1}}) <= 1` for all `i`.
    pub consecutive_pairs: bool,
    /// `od(y) <= (p-1)/2`, `id(y) <= (p-1)/2` and `d(y) <= p-1`.
    pub degree_bounds: bool,
    /// For every cycle position `k` (0-based) with `x_k -> y -> x_{k+1}`:
    /// whether no reversed cycle arc `x_{i+1} -> x_i` exists for `i != k`.
    pub reversed_arcs: Vec<(usize, bool)>,
}

impl OffCycleReport {
    pub fn holds(&self) -> bool {
        self.consecutive_pairs && self.degree_bounds && self.reversed_arcs.iter().all(|&(_, ok)| ok)
    }
}

pub fn check_off_cycle_vertex(g: &Digraph, cycle: &[usize], y: usize) -> Result<OffCycleReport> {
    let on = check_cycle(g, cycle)?;
    check_outside(g, on, y)?;
    let p = g.order();
    if cycle.len() + 1 != p {
        return Err(Error::Precondition(format!(
            "cycle has {} vertices, expected p - 1 = {}",
            cycle.len(),
            p - 1
        )));
    }
    if has_hamiltonian_bypass(g) {
        return Err(Error::Precondition(
            "the digraph contains a Hamiltonian bypass".into(),
        ));
    }
    let m = cycle.len();
    let x = |i: usize| cycle[i % m];
    let consecutive_pairs = (0..m).all(|i| {
        let pair = VertexSet::singleton(x(i)).with(x(i + 1));
        g.out_set(y).intersection(pair).len() <= 1 && g.in_set(y).intersection(pair).len() <= 1
    });
    let degree_bounds = 2 * g.out_degree(y) < p && 2 * g.in_degree(y) < p && g.total_degree(y) < p;
    let reversed_arcs = (0..m)
        .filter(|&k| g.has_arc(x(k), y) && g.has_arc(y, x(k + 1)))
        .map(|k| {
            let ok = (0..m)
                .filter(|&i| i != k)
                .all(|i| !g.has_arc(x(i + 1), x(i)));
            (k, ok)
        })
        .collect();
    Ok(OffCycleReport {
        consecutive_pairs,
        degree_bounds,
        reversed_arcs,
    })
}
