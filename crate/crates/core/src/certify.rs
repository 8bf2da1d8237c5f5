//! Witness validation written against the adjacency relation alone.
//!
//! Nothing here calls into the search code, so a witness that passes has
//! been checked twice by unrelated routines.

use crate::digraph::Digraph;
use crate::search::{Witness, WitnessKind};

fn distinct_in_range(p: usize, seq: &[usize], seen: &mut [bool]) -> Result<(), String> {
    for &v in seq {
        if v >= p {
            return Err(format!("vertex {v} is not below the order {p}"));
        }
        if seen[v] {
            return Err(format!("vertex {v} is used twice"));
        }
        seen[v] = true;
    }
    Ok(())
}

fn arcs_along(g: &Digraph, seq: &[usize]) -> Result<(), String> {
    for i in 1..seq.len() {
        if !g.has_arc(seq[i - 1], seq[i]) {
            return Err(format!("missing arc {} -> {}", seq[i - 1], seq[i]));
        }
    }
    Ok(())
}

fn closing_arc(g: &Digraph, seq: &[usize]) -> Result<(), String> {
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    if g.has_arc(last, first) {
        Ok(())
    } else {
        Err(format!("missing closing arc {last} -> {first}"))
    }
}

fn expect_len(seq: &[usize], len: usize, what: &str) -> Result<(), String> {
    if seq.len() == len {
        Ok(())
    } else {
        Err(format!("{what} has {} vertices, expected {len}", seq.len()))
    }
}

/// Checks that `w` is what its kind claims inside `g`.
pub fn validate_witness(g: &Digraph, w: &Witness) -> Result<(), String> {
    let p = g.order();
    let mut seen = vec![false; p];
    if w.second.is_some() != matches!(w.kind, WitnessKind::Dpn(_)) {
        return Err("second path present exactly for D(p,n) witnesses".into());
    }
    match w.kind {
        WitnessKind::HamCycle => {
            expect_len(&w.path, p, "cycle")?;
            distinct_in_range(p, &w.path, &mut seen)?;
            arcs_along(g, &w.path)?;
            closing_arc(g, &w.path)
        }
        WitnessKind::HamPath => {
            expect_len(&w.path, p, "path")?;
            distinct_in_range(p, &w.path, &mut seen)?;
            arcs_along(g, &w.path)
        }
        WitnessKind::HamBypass => {
            expect_len(&w.path, p, "path")?;
            distinct_in_range(p, &w.path, &mut seen)?;
            arcs_along(g, &w.path)?;
            if p < 3 {
                return Err("a bypass needs at least 3 vertices".into());
            }
            let (first, last) = (w.path[0], w.path[p - 1]);
            if g.has_arc(first, last) {
                Ok(())
            } else {
                Err(format!("missing bypass arc {first} -> {last}"))
            }
        }
        WitnessKind::CycleOfLength(k) => {
            if k < 2 {
                return Err("cycles have at least 2 vertices".into());
            }
            expect_len(&w.path, k, "cycle")?;
            distinct_in_range(p, &w.path, &mut seen)?;
            arcs_along(g, &w.path)?;
            closing_arc(g, &w.path)
        }
        WitnessKind::Dpn(n) => {
            let long = w.second.as_deref().unwrap_or(&[]);
            if n < 2 || n >= p {
                return Err(format!("n = {n} out of range for order {p}"));
            }
            expect_len(&w.path, n, "short path")?;
            expect_len(long, p - n + 2, "long path")?;
            let (x, y) = (w.path[0], w.path[n - 1]);
            if long[0] != x || long[long.len() - 1] != y {
                return Err("the two paths do not share both ends".into());
            }
            if x == y {
                return Err("the paths start and end at the same vertex".into());
            }
            distinct_in_range(p, &w.path, &mut seen)?;
            distinct_in_range(p, &long[1..long.len() - 1], &mut seen)?;
            if seen.iter().any(|&s| !s) {
                return Err("the paths do not cover every vertex".into());
            }
            arcs_along(g, &w.path)?;
            arcs_along(g, long)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn witness(kind: WitnessKind, path: &[usize]) -> Witness {
        Witness {
            kind,
            path: path.to_vec(),
            second: None,
        }
    }

    #[test]
    fn accepts_valid_witnesses() {
        let k4 = Digraph::complete(4).unwrap();
        assert!(validate_witness(&k4, &witness(WitnessKind::HamCycle, &[0, 2, 1, 3])).is_ok());
        assert!(validate_witness(&k4, &witness(WitnessKind::HamBypass, &[3, 2, 1, 0])).is_ok());
        assert!(validate_witness(&k4, &witness(WitnessKind::CycleOfLength(2), &[1, 3])).is_ok());
        let dpn = Witness {
            kind: WitnessKind::Dpn(3),
            path: vec![0, 1, 3],
            second: Some(vec![0, 2, 3]),
        };
        assert!(validate_witness(&k4, &dpn).is_ok());
    }

    #[test]
    fn rejects_broken_witnesses() {
        let c4 = Digraph::cycle(4).unwrap();
        assert!(validate_witness(&c4, &witness(WitnessKind::HamCycle, &[0, 1, 2])).is_err());
        assert!(validate_witness(&c4, &witness(WitnessKind::HamCycle, &[0, 2, 1, 3])).is_err());
        assert!(validate_witness(&c4, &witness(WitnessKind::HamBypass, &[0, 1, 2, 3])).is_err());
        assert!(validate_witness(&c4, &witness(WitnessKind::HamPath, &[0, 1, 2, 2])).is_err());
        assert!(validate_witness(&c4, &witness(WitnessKind::HamPath, &[0, 1, 2, 7])).is_err());
        let k4 = Digraph::complete(4).unwrap();
        let overlapping = Witness {
            kind: WitnessKind::Dpn(3),
            path: vec![0, 1, 3],
            second: Some(vec![0, 1, 3]),
        };
        assert!(validate_witness(&k4, &overlapping).is_err());
    }
}
