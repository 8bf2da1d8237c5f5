//! Brute-force oracles and instance generators shared by the integration tests.
//!
//! Everything here works on a plain boolean matrix read through `has_arc`,
//! so it shares no logic with the library routines it is compared against.

#![allow(dead_code)]

use hambypass::Digraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub struct Matrix {
    pub p: usize,
    pub a: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Digraph) -> Matrix {
        let p = g.order();
        let a = (0..p)
            .map(|u| (0..p).map(|v| g.has_arc(u, v)).collect())
            .collect();
        Matrix { p, a }
    }

    pub fn od(&self, v: usize) -> usize {
        self.a[v].iter().filter(|&&b| b).count()
    }

    pub fn id(&self, v: usize) -> usize {
        (0..self.p).filter(|&u| self.a[u][v]).count()
    }

    pub fn d(&self, v: usize) -> usize {
        self.od(v) + self.id(v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.a[u][v] || self.a[v][u]
    }
}

/// Heap's algorithm over `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

pub fn brute_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let (mg, mh) = (Matrix::of(g), Matrix::of(h));
    let p = mg.p;
    permutations(p)
        .iter()
        .any(|s| (0..p).all(|u| (0..p).all(|v| mg.a[u][v] == mh.a[s[u]][s[v]])))
}

/// Held-Karp style reachability over subsets: `dp[mask]` holds the possible
/// last vertices of a path visiting exactly `mask`.
pub fn held_karp_ham_path(g: &Digraph) -> bool {
    let m = Matrix::of(g);
    let p = m.p;
    let full = (1usize << p) - 1;
    let mut dp = vec![0u32; 1 << p];
    for v in 0..p {
        dp[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        for v in 0..p {
            if dp[mask] >> v & 1 == 0 {
                continue;
            }
            for w in 0..p {
                if mask >> w & 1 == 0 && m.a[v][w] {
                    dp[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    dp[full] != 0
}

pub fn brute_bypass(g: &Digraph) -> bool {
    let m = Matrix::of(g);
    let p = m.p;
    p >= 3
        && permutations(p)
            .iter()
            .any(|s| (1..p).all(|i| m.a[s[i - 1]][s[i]]) && m.a[s[0]][s[p - 1]])
}

pub fn brute_ham_cycle(g: &Digraph) -> bool {
    let m = Matrix::of(g);
    let p = m.p;
    p >= 2
        && permutations(p)
            .iter()
            .any(|s| (1..p).all(|i| m.a[s[i - 1]][s[i]]) && m.a[s[p - 1]][s[0]])
}

/// Cycle lengths by depth-first enumeration of every simple cycle.
pub fn brute_spectrum(g: &Digraph) -> Vec<usize> {
    let m = Matrix::of(g);
    let p = m.p;
    let mut found = vec![false; p + 1];
    fn dfs(
        m: &Matrix,
        start: usize,
        cur: usize,
        len: usize,
        used: &mut Vec<bool>,
        found: &mut Vec<bool>,
    ) {
        for next in 0..m.p {
            if !m.a[cur][next] {
                continue;
            }
            if next == start && len >= 2 {
                found[len] = true;
            } else if next > start && !used[next] {
                used[next] = true;
                dfs(m, start, next, len + 1, used, found);
                used[next] = false;
            }
        }
    }
    for s in 0..p {
        let mut used = vec![false; p];
        used[s] = true;
        dfs(&m, s, s, 1, &mut used, &mut found);
    }
    (2..=p).filter(|&l| found[l]).collect()
}

pub fn brute_strong(g: &Digraph) -> bool {
    let m = Matrix::of(g);
    let p = m.p;
    let mut r = m.a.clone();
    for (v, row) in r.iter_mut().enumerate() {
        row[v] = true;
    }
    for k in 0..p {
        for i in 0..p {
            for j in 0..p {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&b| b))
}

/// `(M_k)` by direct pair scan.
pub fn brute_meyniel(g: &Digraph, k: i64) -> bool {
    let m = Matrix::of(g);
    let p = m.p as i64;
    (0..m.p).all(|x| {
        (0..m.p).all(|y| x == y || m.adjacent(x, y) || (m.d(x) + m.d(y)) as i64 >= 2 * p - 2 + k)
    })
}

/// Minimum of `d(x) + d(y) - (2p - 2)` over non-adjacent pairs.
pub fn brute_deficiency(g: &Digraph) -> Option<i64> {
    let m = Matrix::of(g);
    let p = m.p as i64;
    let mut best = None;
    for x in 0..m.p {
        for y in x + 1..m.p {
            if !m.adjacent(x, y) {
                let v = (m.d(x) + m.d(y)) as i64 - (2 * p - 2);
                best = Some(best.map_or(v, |b: i64| b.min(v)));
            }
        }
    }
    best
}

pub fn symmetric(p: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::new(p, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)])).unwrap()
}

/// The five-vertex tournament with `z1..z4 = 0..3` and `y = 4`.
pub fn t5_literal() -> Digraph {
    let (z1, z2, z3, z4, y) = (0, 1, 2, 3, 4);
    Digraph::new(
        5,
        [
            (z1, z2),
            (z2, z3),
            (z3, z4),
            (z4, z1),
            (z1, y),
            (z3, y),
            (y, z2),
            (y, z4),
            (z1, z3),
            (z2, z4),
        ],
    )
    .unwrap()
}

/// `K*_{p-k}` on the last `p-k` vertices and `K*_{k+1}` on the first `k+1`,
/// sharing vertex `k`.
pub fn dpk_literal(p: usize, k: usize) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    for u in k..p {
        for v in u + 1..p {
            edges.push((u, v));
        }
    }
    symmetric(p, &edges)
}

/// `A` = even vertices, `B` = odd vertices, `B` empty or complete.
pub fn d0_literal(p: usize, b_complete: bool) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..p {
        for v in 0..p {
            if u == v {
                continue;
            }
            let (ua, va) = (u % 2 == 0, v % 2 == 0);
            if ua != va || (!ua && !va && b_complete) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(p, arcs).unwrap()
}

pub fn kbip_literal(a: usize, b: usize) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    symmetric(a + b, &edges)
}

/// Direct reading of the `Phi^m_p` definition over every labelling.
pub fn brute_phi(g: &Digraph, m_len: usize) -> bool {
    let m = Matrix::of(g);
    let p = m.p;
    if !brute_meyniel(g, 1) {
        return false;
    }
    permutations(p).iter().any(|x| {
        // x[i] is x_{i+1}
        let b = m.a[x[0]][x[p - 1]] && (0..p - 1).all(|i| m.a[x[i + 1]][x[i]]);
        let back = (0..p).all(|i| (i + 2..p).all(|j| !m.a[x[j]][x[i]]));
        let gap = (0..p)
            .filter(|&i| i + m_len - 1 < p)
            .all(|i| !m.adjacent(x[i], x[i + m_len - 1]));
        b && back && gap
    })
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_digraph(rng: &mut StdRng, p: usize, density: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..p {
        for v in 0..p {
            if u != v && rng.random_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(p, arcs).unwrap()
}

/// A shuffled vertex order.
pub fn shuffled(rng: &mut StdRng, p: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..p).collect();
    v.shuffle(rng);
    v
}

pub fn arcs_of(g: &Digraph) -> Vec<(usize, usize)> {
    g.arcs().collect()
}

/// Replaces every arc between `x` and `targets` with a random choice that
/// has exactly `count` arcs among the `2 |targets|` possible ones and
/// avoids the listed forbidden arcs.
pub fn rewire(
    rng: &mut StdRng,
    g: &Digraph,
    x: usize,
    targets: &[usize],
    count: usize,
    forbidden: &[(usize, usize)],
) -> Option<Digraph> {
    let mut slots: Vec<(usize, usize)> = targets
        .iter()
        .flat_map(|&t| [(x, t), (t, x)])
        .filter(|a| !forbidden.contains(a))
        .collect();
    if slots.len() < count {
        return None;
    }
    slots.shuffle(rng);
    let keep: Vec<(usize, usize)> = arcs_of(g)
        .into_iter()
        .filter(|&(u, v)| !((u == x && targets.contains(&v)) || (v == x && targets.contains(&u))))
        .chain(slots.into_iter().take(count))
        .collect();
    Some(Digraph::new(g.order(), keep).unwrap())
}

pub fn with_cycle(g: &Digraph, cycle: &[usize]) -> Digraph {
    let m = cycle.len();
    Digraph::new(
        g.order(),
        arcs_of(g)
            .into_iter()
            .chain((0..m).map(|i| (cycle[i], cycle[(i + 1) % m]))),
    )
    .unwrap()
}

pub fn with_path(g: &Digraph, path: &[usize]) -> Digraph {
    Digraph::new(
        g.order(),
        arcs_of(g)
            .into_iter()
            .chain(path.windows(2).map(|w| (w[0], w[1]))),
    )
    .unwrap()
}

/// Arcs added at random until `y` reaches degree `need`.
pub fn raise_degree(rng: &mut StdRng, g: &Digraph, y: usize, need: usize) -> Digraph {
    let p = g.order();
    let mut missing: Vec<(usize, usize)> = (0..p)
        .filter(|&v| v != y)
        .flat_map(|v| [(y, v), (v, y)])
        .filter(|&(u, v)| !g.has_arc(u, v))
        .collect();
    missing.shuffle(rng);
    let have = g.total_degree(y);
    let add = need.saturating_sub(have);
    Digraph::new(
        p,
        arcs_of(g).into_iter().chain(missing.into_iter().take(add)),
    )
    .unwrap()
}

/// Checks `seq` is a cycle of `g` through distinct vertices.
pub fn is_cycle(g: &Digraph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    for &v in seq {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    seq.len() >= 2 && (0..seq.len()).all(|i| g.has_arc(seq[i], seq[(i + 1) % seq.len()]))
}

pub fn is_path(g: &Digraph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    for &v in seq {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    seq.windows(2).all(|w| g.has_arc(w[0], w[1]))
}
pub mod lemmas;
