//! Strong components and k-strong connectivity.

use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Strong components `D_1, ..., D_s` ordered so that no arc goes from `D_i`
/// to `D_j` when `i > j`. Among components that could come next, the one
/// with the smallest vertex is taken first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    components: Vec<VertexSet>,
    /// Arcs of the condensation as `(i, j)` component indices, always `i < j`.
    condensation: Vec<(usize, usize)>,
}

impl ComponentDecomposition {
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn condensation(&self) -> &[(usize, usize)] {
        &self.condensation
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components.iter().position(|c| c.contains(v))
    }
}

/// Vertices reachable from `start` using only vertices of `within`.
pub fn reachable_within(g: &Digraph, start: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.out_set(v));
        }
        frontier = next.intersection(within).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

fn co_reachable_within(g: &Digraph, start: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.in_set(v));
        }
        frontier = next.intersection(within).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// The subdigraph induced by `within` is strongly connected. Empty and
/// single-vertex sets count as strong.
pub fn is_strong_within(g: &Digraph, within: VertexSet) -> bool {
    let Some(s) = within.min() else {
        return true;
    };
    reachable_within(g, s, within) == within && co_reachable_within(g, s, within) == within
}

pub fn is_strong(g: &Digraph) -> bool {
    is_strong_within(g, g.vertices())
}

pub fn strong_components_ordered(g: &Digraph) -> ComponentDecomposition {
    let all = g.vertices();
    let mut comps: Vec<VertexSet> = Vec::new();
    let mut left = all;
    while let Some(v) = left.min() {
        let c = reachable_within(g, v, all).intersection(co_reachable_within(g, v, all));
        comps.push(c);
        left = left.difference(c);
    }
    // comps is sorted by minimum vertex; order topologically, smallest first.
    let n = comps.len();
    let mut succ = vec![VertexSet::EMPTY; n];
    let mut indeg = vec![0usize; n];
    for i in 0..n {
        let mut out = VertexSet::EMPTY;
        for v in comps[i] {
            out = out.union(g.out_set(v));
        }
        for j in 0..n {
            if i != j && !out.intersection(comps[j]).is_empty() {
                succ[i].insert(j);
                indeg[j] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: VertexSet = (0..n).filter(|&i| indeg[i] == 0).collect();
    while let Some(i) = ready.min() {
        ready.remove(i);
        order.push(i);
        for j in succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.insert(j);
            }
        }
    }
    let mut position = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        position[i] = pos;
    }
    let components = order.iter().map(|&i| comps[i]).collect();
    let mut condensation: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| succ[i].iter().map(move |j| (i, j)))
        .map(|(i, j)| (position[i], position[j]))
        .collect();
    condensation.sort_unstable();
    ComponentDecomposition {
        components,
        condensation,
    }
}

/// `|V| >= k + 1` and deleting any set of at most `k - 1` vertices leaves a
/// strong digraph.
pub fn is_k_strong(g: &Digraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("k-strong needs k >= 1".into()));
    }
    let p = g.order();
    if p < k + 1 {
        return Ok(false);
    }
    let all = g.vertices();
    for size in 0..k {
        if !subsets_of_size(p, size).all(|removed| is_strong_within(g, all.difference(removed))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All subsets of `0..n` with exactly `size` members, in increasing bit order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if size == 0 {
        Some(0u64)
    } else if size <= n {
        Some(if size == 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        })
    } else {
        None
    };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        (next <= limit).then_some(next)
    })
    .map(VertexSet::from_bits)
}
