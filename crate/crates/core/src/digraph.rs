//! Bit-matrix digraphs without loops or multiple arcs.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; one `u64` word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// A set of vertices in `[0, 64)` stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..order`.
    pub const fn full(order: usize) -> Self {
        if order >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Out-, in- and total degree of a vertex, possibly restricted to a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degree {
    pub out: usize,
    pub inn: usize,
    pub total: usize,
}

/// A loop-free digraph on the vertices `0..order`.
///
/// Rows `0..order` of `rows` are out-neighbourhoods, rows `order..2*order`
/// are in-neighbourhoods; the two halves are kept in sync on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    rows: Vec<u64>,
}

impl Digraph {
    /// The digraph on `order` vertices with no arcs.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                order,
                max: MAX_ORDER,
            });
        }
        Ok(Digraph {
            order,
            rows: vec![0; 2 * order],
        })
    }

    /// Builds a digraph from an arc list. Repeated arcs are accepted once.
    pub fn new<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(order)?;
        for (u, v) in arcs {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopArc(u));
            }
            g.set_arc(u, v);
        }
        Ok(g)
    }

    /// The complete symmetric digraph `K*_p`.
    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Digraph::empty(order)?;
        let all = VertexSet::full(order).bits();
        for v in 0..order {
            g.rows[v] = all & !(1 << v);
            g.rows[order + v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The directed cycle `0 -> 1 -> ... -> p-1 -> 0`.
    pub fn cycle(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidParameter(format!(
                "a directed cycle needs at least 2 vertices, got {order}"
            )));
        }
        Digraph::new(order, (0..order).map(|v| (v, (v + 1) % order)))
    }

    /// Number of off-diagonal arc slots, `p(p-1)`.
    pub const fn arc_slots(order: usize) -> usize {
        order * order.saturating_sub(1)
    }

    /// Decodes an enumeration index: bit `j` of `index` is the `j`-th
    /// off-diagonal slot `(u, v)` in row-major order.
    pub fn from_arc_index(order: usize, index: u128) -> Result<Self> {
        let slots = Self::arc_slots(order);
        if slots > 128 {
            return Err(Error::AboveBound {
                what: "arc-index encoding",
                order,
                limit: 11,
            });
        }
        if slots < 128 && index >> slots != 0 {
            return Err(Error::InvalidParameter(format!(
                "arc index {index:#x} has bits beyond the {slots} slots of order {order}"
            )));
        }
        let mut g = Digraph::empty(order)?;
        let mut bits = index;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let u = j / (order - 1);
            let r = j % (order - 1);
            let v = if r >= u { r + 1 } else { r };
            g.set_arc(u, v);
        }
        Ok(g)
    }

    /// Inverse of [`Digraph::from_arc_index`]; `None` when `p(p-1) > 128`.
    pub fn arc_index(&self) -> Option<u128> {
        if Self::arc_slots(self.order) > 128 {
            return None;
        }
        let mut index = 0u128;
        let mut j = 0;
        for u in 0..self.order {
            for v in 0..self.order {
                if u == v {
                    continue;
                }
                if self.has_arc(u, v) {
                    index |= 1 << j;
                }
                j += 1;
            }
        }
        Some(index)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[self.order + v] |= 1 << u;
    }

    fn clear_arc(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[self.order + v] &= !(1 << u);
    }

    /// Returns a copy with the arc `u -> v` added.
    pub fn with_arc(mut self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        self.set_arc(u, v);
        Ok(self)
    }

    /// Returns a copy with the arc `u -> v` removed (if present).
    pub fn without_arc(mut self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.clear_arc(u, v);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn arc_count(&self) -> usize {
        self.rows[..self.order]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] >> v & 1 == 1
    }

    /// `u` and `v` are distinct and joined by an arc in at least one direction.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && (self.has_arc(u, v) || self.has_arc(v, u))
    }

    #[inline]
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[self.order + v])
    }

    /// Vertices adjacent to `v` in either direction.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v] | self.rows[self.order + v])
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.rows[self.order + v].count_ones() as usize
    }

    /// `d(v) = od(v) + id(v)`.
    #[inline]
    pub fn total_degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Degrees of `v` restricted to `within`: `od(v,A)`, `id(v,A)`, `d(v,A)`.
    pub fn degree(&self, v: usize, within: VertexSet) -> Result<Degree> {
        self.check_vertex(v)?;
        if !within.is_subset(self.vertices()) {
            return Err(Error::InvalidParameter(format!(
                "vertex set {within:?} is not a subset of 0..{}",
                self.order
            )));
        }
        let out = self.out_set(v).intersection(within).len();
        let inn = self.in_set(v).intersection(within).len();
        Ok(Degree {
            out,
            inn,
            total: out + inn,
        })
    }

    /// Arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.out_set(u).iter().map(move |v| (u, v)))
    }

    /// The converse digraph: every arc reversed.
    pub fn converse(&self) -> Digraph {
        let (out, inn) = self.rows.split_at(self.order);
        let mut rows = Vec::with_capacity(2 * self.order);
        rows.extend_from_slice(inn);
        rows.extend_from_slice(out);
        Digraph {
            order: self.order,
            rows,
        }
    }

    /// The subdigraph induced by `set`, relabelled `0..|set|` in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Digraph> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !set.is_subset(self.vertices()) {
            return Err(Error::InvalidParameter(format!(
                "vertex set {set:?} is not a subset of 0..{}",
                self.order
            )));
        }
        let members: Vec<usize> = set.iter().collect();
        let mut g = Digraph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.has_arc(u, v) {
                    g.set_arc(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `map[v]`; `map` must be a permutation of `0..p`.
    pub fn relabel(&self, map: &[usize]) -> Result<Digraph> {
        if map.len() != self.order {
            return Err(Error::InvalidParameter(format!(
                "relabelling has {} entries for order {}",
                map.len(),
                self.order
            )));
        }
        let image: VertexSet = map.iter().copied().filter(|&v| v < 64).collect();
        if image != self.vertices() || map.iter().any(|&v| v >= self.order) {
            return Err(Error::InvalidParameter(
                "relabelling is not a permutation".into(),
            ));
        }
        let mut g = Digraph::empty(self.order)?;
        for (u, v) in self.arcs() {
            g.set_arc(map[u], map[v]);
        }
        Ok(g)
    }

    /// The digraph contains both `u -> v` and `v -> u` for every adjacent pair.
    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|v| self.out_set(v) == self.in_set(v))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(p={}; ", self.order)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}>{v}")?;
        }
        f.write_str(")")
    }
}
