//! Seeded generators of hypothesis-satisfying instances for the insertion
//! lemmas, each paired with a conclusion check. A suite returns the number
//! of instances and a description of every failure.

use hambypass::search::{
    check_off_cycle_vertex, cycle_spectrum, extend_cycle_with_set, extend_path_maximally,
    has_hamiltonian_bypass, insert_into_cycle, insert_into_path,
};
use hambypass::{Digraph, VertexSet};
use rand::rngs::StdRng;
use rand::Rng;

use super::{
    is_cycle, is_path, raise_degree, random_digraph, rewire, rng, shuffled, with_cycle, with_path,
};

pub struct Outcome {
    pub instances: usize,
    pub failures: Vec<String>,
}

fn layout(r: &mut StdRng, min_p: usize) -> (usize, usize, Digraph, Vec<usize>) {
    let p = r.random_range(min_p..=9);
    let m = r.random_range(2..=p - 1);
    let density = r.random_range(0.05..0.6);
    let g = random_digraph(r, p, density);
    (p, m, g, shuffled(r, p))
}

fn d_on(g: &Digraph, x: usize, set: &[usize]) -> usize {
    set.iter()
        .map(|&v| g.has_arc(x, v) as usize + g.has_arc(v, x) as usize)
        .sum()
}

/// A vertex with `d(x, V(C)) >= m + 1` lies on cycles of every length `2..=m+1`
/// inside `V(C) + x`.
pub fn cycle_insertion(seed: u64, n: usize) -> Outcome {
    let mut r = rng(seed);
    let mut failures = Vec::new();
    for case in 0..n {
        let (_, m, g, order) = layout(&mut r, 3);
        let cycle = &order[..m];
        let x = order[m];
        let g = with_cycle(&g, cycle);
        let count = r.random_range(m + 1..=2 * m);
        let g = rewire(&mut r, &g, x, cycle, count, &[]).expect("enough slots");
        assert!(d_on(&g, x, cycle) > m);
        for k in 2..=m + 1 {
            match insert_into_cycle(&g, cycle, x, k) {
                Ok(Some(c))
                    if c.len() == k
                        && is_cycle(&g, &c)
                        && c.contains(&x)
                        && c.iter().all(|v| *v == x || cycle.contains(v)) => {}
                other => failures.push(format!("case {case}: k = {k}: {other:?} in {g:?}")),
            }
        }
    }
    Outcome {
        instances: n,
        failures,
    }
}

/// Which degree hypothesis of the path insertion lemma an instance meets.
#[derive(Clone, Copy, Debug)]
pub enum PathVariant {
    /// `d(x, V(P)) >= m + 2`.
    Plenty,
    /// `d(x, V(P)) >= m + 1` with one end arc missing.
    OneEndMissing,
    /// `d(x, V(P)) >= m` with both end arcs missing.
    BothEndsMissing,
}

pub fn path_insertion(seed: u64, n: usize, variant: PathVariant) -> Outcome {
    let mut r = rng(seed);
    let mut failures = Vec::new();
    for case in 0..n {
        let (_, m, g, order) = layout(&mut r, 3);
        let path = &order[..m];
        let x = order[m];
        let g = with_path(&g, path);
        let (first, last) = (path[0], path[m - 1]);
        let (low, high, forbidden) = match variant {
            PathVariant::Plenty => (m + 2, 2 * m, vec![]),
            PathVariant::OneEndMissing => {
                let arc = if r.random_bool(0.5) {
                    (x, first)
                } else {
                    (last, x)
                };
                (m + 1, 2 * m - 1, vec![arc])
            }
            PathVariant::BothEndsMissing => (m, 2 * m - 2, vec![(x, first), (last, x)]),
        };
        let count = r.random_range(low..=high);
        let g = rewire(&mut r, &g, x, path, count, &forbidden).expect("enough slots");
        assert!(forbidden.iter().all(|&(u, v)| !g.has_arc(u, v)));
        match insert_into_path(&g, path, x) {
            Ok(Some(p))
                if p.len() == m + 1
                    && is_path(&g, &p)
                    && p[0] == first
                    && p[m] == last
                    && p.iter().filter(|&&v| v != x).eq(path.iter()) => {}
            other => failures.push(format!("case {case}: {variant:?}: {other:?} in {g:?}")),
        }
    }
    Outcome {
        instances: n,
        failures,
    }
}

fn random_subset(r: &mut StdRng, from: &[usize]) -> VertexSet {
    from.iter()
        .copied()
        .filter(|_| r.random_bool(0.6))
        .collect()
}

/// Off-cycle vertices of degree at least `2p - m - 1` can all be absorbed.
pub fn cycle_extension(seed: u64, n: usize) -> Outcome {
    let mut r = rng(seed);
    let mut failures = Vec::new();
    for case in 0..n {
        let (p, m, g, order) = layout(&mut r, 3);
        let cycle = &order[..m];
        let mut g = with_cycle(&g, cycle);
        for &y in &order[m..] {
            g = raise_degree(&mut r, &g, y, 2 * p - m - 1);
        }
        assert!(order[m..]
            .iter()
            .all(|&y| g.total_degree(y) + m + 1 >= 2 * p));
        let a = random_subset(&mut r, &order[m..]);
        let want: VertexSet = cycle.iter().copied().collect::<VertexSet>().union(a);
        match extend_cycle_with_set(&g, cycle, a) {
            Ok(Some(c))
                if is_cycle(&g, &c)
                    && c.iter().copied().collect::<VertexSet>() == want
                    && c.len() == want.len() => {}
            other => failures.push(format!("case {case}: {other:?} in {g:?}")),
        }
    }
    Outcome {
        instances: n,
        failures,
    }
}

/// Off-path vertices of degree at least `2p - m` can all be absorbed.
pub fn path_extension(seed: u64, n: usize) -> Outcome {
    let mut r = rng(seed);
    let mut failures = Vec::new();
    for case in 0..n {
        let (p, m, g, order) = layout(&mut r, 3);
        let path = &order[..m];
        let mut g = with_path(&g, path);
        for &y in &order[m..] {
            g = raise_degree(&mut r, &g, y, 2 * p - m);
        }
        let a = random_subset(&mut r, &order[m..]);
        let want: VertexSet = path.iter().copied().collect::<VertexSet>().union(a);
        match extend_path_maximally(&g, path, a) {
            Ok((q, left))
                if left.is_empty()
                    && is_path(&g, &q)
                    && q[0] == path[0]
                    && q[q.len() - 1] == path[m - 1]
                    && q.len() == want.len()
                    && q.iter().copied().collect::<VertexSet>() == want => {}
            other => failures.push(format!("case {case}: {other:?} in {g:?}")),
        }
    }
    Outcome {
        instances: n,
        failures,
    }
}

fn cycles_of_length(g: &Digraph, len: usize) -> Vec<Vec<usize>> {
    fn go(g: &Digraph, path: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if path.len() == len {
            if g.has_arc(cur, path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for next in path[0] + 1..g.order() {
            if g.has_arc(cur, next) && !path.contains(&next) {
                path.push(next);
                go(g, path, len, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        go(g, &mut vec![s], len, &mut out);
    }
    out
}

/// Every bypass-free digraph of order `p` with a `(p-1)`-cycle, every such
/// cycle: the off-cycle statements must hold.
pub fn off_cycle_exhaustive(p: usize) -> Outcome {
    let mut instances = 0;
    let mut failures = Vec::new();
    for index in 0..1u128 << (p * (p - 1)) {
        let g = Digraph::from_arc_index(p, index).unwrap();
        if !cycle_spectrum(&g).unwrap().contains(p - 1) || has_hamiltonian_bypass(&g) {
            continue;
        }
        for c in cycles_of_length(&g, p - 1) {
            let y = (0..p).find(|v| !c.contains(v)).unwrap();
            instances += 1;
            match check_off_cycle_vertex(&g, &c, y) {
                Ok(report) if report.holds() => {}
                other => failures.push(format!("index {index:#x} cycle {c:?}: {other:?}")),
            }
        }
    }
    Outcome {
        instances,
        failures,
    }
}
