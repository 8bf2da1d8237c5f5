//! Named digraph families: generators, recognizers and the `D(p,n)` pattern.
//!
//! Text syntax (used by the CLI):
//!
//! | spec            | digraph                                                   |
//! |-----------------|-----------------------------------------------------------|
//! | `dpk:p,k`       | `K*_{p-k}` and `K*_{k+1}` sharing one vertex              |
//! | `d0:p[:B]`      | independent `A` of size `(p+1)/2`, all arcs to/from `B`   |
//! | `t5`            | the 5-vertex tournament without a Hamiltonian bypass      |
//! | `c3`            | directed triangle                                         |
//! | `kstar:p`       | complete digraph                                          |
//! | `kbip:a,b`      | complete bipartite symmetric digraph                      |
//! | `kbipm:a`       | `K*_{a,a}` with the arc `a -> 0` removed                  |
//! | `bypass:p,n`    | the pattern `D(p,n)`                                      |
//! | `cycle:p`       | directed cycle                                            |
//!
//! For `d0`, `B` is base64 (standard alphabet, padded) of the `q(q-1)`
//! off-diagonal adjacency bits of the subdigraph on `B`, row-major, packed
//! most significant bit first; `q = (p-1)/2`. Omitting it means no arcs.

use std::fmt;
use std::str::FromStr;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;

use crate::canon::{isomorphism, CANON_MAX_ORDER};
use crate::conditions::satisfies_meyniel;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::search::{cycle_spectrum, for_each_hamiltonian_cycle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `D_{p-k,k}` as `(p, k)`.
    Dpk(usize, usize),
    /// A member of the `D_0` family of odd order with the given subdigraph on `B`.
    D0 {
        order: usize,
        b: Digraph,
    },
    T5,
    C3,
    CompleteK(usize),
    CompleteBipartite(usize, usize),
    CompleteBipartiteMinusArc(usize),
    /// `D(p,n)` as `(p, n)`.
    BypassPattern(usize, usize),
    CycleC(usize),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Dpk(p, k) => {
                if p < 3 {
                    return Err(invalid(format!("dpk needs p >= 3, got p = {p}")));
                }
                if k < 1 || k > p - 2 {
                    return Err(invalid(format!(
                        "dpk needs 1 <= k <= p-2 = {}, got k = {k}",
                        p - 2
                    )));
                }
            }
            FamilySpec::D0 { order, ref b } => {
                if order < 3 || order % 2 == 0 {
                    return Err(invalid(format!("d0 needs odd p >= 3, got p = {order}")));
                }
                if b.order() != (order - 1) / 2 {
                    return Err(invalid(format!(
                        "d0 of order {order} needs a B-subdigraph of order {}, got {}",
                        (order - 1) / 2,
                        b.order()
                    )));
                }
            }
            FamilySpec::T5 | FamilySpec::C3 => {}
            FamilySpec::CompleteK(p) => {
                if p < 1 {
                    return Err(invalid("kstar needs p >= 1"));
                }
            }
            FamilySpec::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(invalid(format!("kbip needs a, b >= 1, got {a},{b}")));
                }
            }
            FamilySpec::CompleteBipartiteMinusArc(a) => {
                if a < 1 {
                    return Err(invalid("kbipm needs a >= 1"));
                }
            }
            FamilySpec::BypassPattern(p, n) => {
                if n < 2 {
                    return Err(invalid(format!("bypass needs n >= 2, got n = {n}")));
                }
                if p < 3 {
                    return Err(invalid(format!("bypass needs p >= 3, got p = {p}")));
                }
                if n > 2 && n + 2 > p {
                    return Err(invalid(format!(
                        "bypass needs n <= p-2 = {}, got n = {n}",
                        p - 2
                    )));
                }
            }
            FamilySpec::CycleC(p) => {
                if p < 2 {
                    return Err(invalid(format!("cycle needs p >= 2, got p = {p}")));
                }
            }
        }
        Ok(())
    }

    /// Short human-readable name, e.g. `Dpk(6,2)`.
    pub fn name(&self) -> String {
        match self {
            FamilySpec::Dpk(p, k) => format!("Dpk({p},{k})"),
            FamilySpec::D0 { order, .. } => format!("D0({order})"),
            FamilySpec::T5 => "T5".into(),
            FamilySpec::C3 => "C3".into(),
            FamilySpec::CompleteK(p) => format!("Kstar({p})"),
            FamilySpec::CompleteBipartite(a, b) => format!("Kbip({a},{b})"),
            FamilySpec::CompleteBipartiteMinusArc(a) => format!("KbipMinusArc({a})"),
            FamilySpec::BypassPattern(p, n) => format!("D({p},{n})"),
            FamilySpec::CycleC(p) => format!("C{p}"),
        }
    }
}

fn encode_b(b: &Digraph) -> String {
    let q = b.order();
    let mut bytes = Vec::new();
    let mut bit = 0;
    for u in 0..q {
        for v in 0..q {
            if u == v {
                continue;
            }
            if bit % 8 == 0 {
                bytes.push(0u8);
            }
            if b.has_arc(u, v) {
                *bytes.last_mut().unwrap() |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    STANDARD.encode(bytes)
}

fn decode_b(q: usize, text: &str) -> Result<Digraph> {
    let bytes = STANDARD
        .decode(text)
        .map_err(|e| Error::Parse(format!("bad base64 for d0 B-subdigraph: {e}")))?;
    let slots = Digraph::arc_slots(q);
    if bytes.len() != slots.div_ceil(8) {
        return Err(Error::Parse(format!(
            "d0 B-subdigraph of order {q} needs {} bytes, got {}",
            slots.div_ceil(8),
            bytes.len()
        )));
    }
    let mut arcs = Vec::new();
    let mut bit = 0;
    for u in 0..q {
        for v in 0..q {
            if u == v {
                continue;
            }
            if bytes[bit / 8] & (0x80 >> (bit % 8)) != 0 {
                arcs.push((u, v));
            }
            bit += 1;
        }
    }
    if !slots.is_multiple_of(8) && bytes[slots / 8] & (0xffu8 >> (slots % 8)) != 0 {
        return Err(Error::Parse(
            "nonzero padding bits in d0 B-subdigraph".into(),
        ));
    }
    Digraph::new(q, arcs)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Dpk(p, k) => write!(f, "dpk:{p},{k}"),
            FamilySpec::D0 { order, b } => write!(f, "d0:{order}:{}", encode_b(b)),
            FamilySpec::T5 => f.write_str("t5"),
            FamilySpec::C3 => f.write_str("c3"),
            FamilySpec::CompleteK(p) => write!(f, "kstar:{p}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            FamilySpec::CompleteBipartiteMinusArc(a) => write!(f, "kbipm:{a}"),
            FamilySpec::BypassPattern(p, n) => write!(f, "bypass:{p},{n}"),
            FamilySpec::CycleC(p) => write!(f, "cycle:{p}"),
        }
    }
}

fn parse_num(s: &str, spec: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?} in family spec {spec:?}")))
}

fn parse_pair(s: &str, spec: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected two comma-separated numbers in {spec:?}")))?;
    Ok((parse_num(a, spec)?, parse_num(b, spec)?))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (tag, rest) = text.split_once(':').unwrap_or((text, ""));
        let spec = match tag {
            "t5" if rest.is_empty() => FamilySpec::T5,
            "c3" if rest.is_empty() => FamilySpec::C3,
            "dpk" => {
                let (p, k) = parse_pair(rest, text)?;
                FamilySpec::Dpk(p, k)
            }
            "d0" => {
                let (p, b) = rest.split_once(':').unwrap_or((rest, ""));
                let p = parse_num(p, text)?;
                if p < 3 || p % 2 == 0 || p > 64 {
                    return Err(invalid(format!("d0 needs odd p in 3..=63, got p = {p}")));
                }
                let q = (p - 1) / 2;
                let b = if b.is_empty() {
                    Digraph::empty(q)?
                } else {
                    decode_b(q, b)?
                };
                FamilySpec::D0 { order: p, b }
            }
            "kstar" => FamilySpec::CompleteK(parse_num(rest, text)?),
            "kbip" => {
                let (a, b) = parse_pair(rest, text)?;
                FamilySpec::CompleteBipartite(a, b)
            }
            "kbipm" => FamilySpec::CompleteBipartiteMinusArc(parse_num(rest, text)?),
            "bypass" => {
                let (p, n) = parse_pair(rest, text)?;
                FamilySpec::BypassPattern(p, n)
            }
            "cycle" => FamilySpec::CycleC(parse_num(rest, text)?),
            _ => return Err(Error::Parse(format!("unknown family spec {text:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn symmetric_block(arcs: &mut Vec<(usize, usize)>, vertices: impl Iterator<Item = usize> + Clone) {
    for u in vertices.clone() {
        for v in vertices.clone() {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
}

/// Canonically labelled member of the family.
pub fn generate(spec: &FamilySpec) -> Result<Digraph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Dpk(p, k) => {
            let mut arcs = Vec::new();
            symmetric_block(&mut arcs, 0..p - k);
            symmetric_block(&mut arcs, p - k - 1..p);
            Digraph::new(p, arcs)
        }
        FamilySpec::D0 { order, ref b } => {
            let a = order.div_ceil(2);
            let mut arcs: Vec<(usize, usize)> = b.arcs().map(|(u, v)| (a + u, a + v)).collect();
            for x in 0..a {
                for y in a..order {
                    arcs.push((x, y));
                    arcs.push((y, x));
                }
            }
            Digraph::new(order, arcs)
        }
        FamilySpec::T5 => {
            // z1..z4 = 0..3, y = 4
            Digraph::new(
                5,
                [
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (0, 4),
                    (2, 4),
                    (4, 1),
                    (4, 3),
                    (0, 2),
                    (1, 3),
                ],
            )
        }
        FamilySpec::C3 => Digraph::cycle(3),
        FamilySpec::CompleteK(p) => Digraph::complete(p),
        FamilySpec::CompleteBipartite(a, b) => {
            let mut arcs = Vec::new();
            for x in 0..a {
                for y in a..a + b {
                    arcs.push((x, y));
                    arcs.push((y, x));
                }
            }
            Digraph::new(a + b, arcs)
        }
        FamilySpec::CompleteBipartiteMinusArc(a) => {
            generate(&FamilySpec::CompleteBipartite(a, a))?.without_arc(a, 0)
        }
        FamilySpec::BypassPattern(p, n) => {
            // x_1 = 0, y_j = j, x_i = p - n + i - 1 for i >= 2
            let x = |i: usize| if i == 1 { 0 } else { p - n + i - 1 };
            let mut arcs: Vec<(usize, usize)> = (1..n).map(|i| (x(i), x(i + 1))).collect();
            arcs.push((0, 1));
            arcs.extend((1..p - n).map(|j| (j, j + 1)));
            arcs.push((p - n, p - 1));
            Digraph::new(p, arcs)
        }
        FamilySpec::CycleC(p) => Digraph::cycle(p),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelKind {
    /// Isomorphic to `generate(spec)`.
    Member(FamilySpec),
    /// Member of `Phi^m_p`; the map sends `x_i` to `i - 1`.
    Phi { order: usize, m: usize },
}

/// A recognized family membership with the isomorphism that proves it:
/// `map[v]` is the family vertex corresponding to input vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyLabel {
    pub kind: LabelKind,
    pub map: Vec<usize>,
}

impl FamilyLabel {
    pub fn name(&self) -> String {
        match &self.kind {
            LabelKind::Member(spec) => spec.name(),
            LabelKind::Phi { order, m } => format!("Phi({order},{m})"),
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn degree_profile(g: &Digraph) -> Vec<(usize, usize)> {
    let mut prof: Vec<_> = (0..g.order())
        .map(|v| (g.out_degree(v), g.in_degree(v)))
        .collect();
    prof.sort_unstable();
    prof
}

/// Matches `g` against one family member up to isomorphism.
pub fn match_member(g: &Digraph, spec: &FamilySpec) -> Result<Option<FamilyLabel>> {
    let h = generate(spec)?;
    if h.order() != g.order()
        || h.arc_count() != g.arc_count()
        || degree_profile(&h) != degree_profile(g)
    {
        return Ok(None);
    }
    Ok(isomorphism(g, &h)?.map(|map| FamilyLabel {
        kind: LabelKind::Member(spec.clone()),
        map,
    }))
}

fn bound_check(g: &Digraph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        Err(Error::AboveBound {
            what: "family recognition",
            order: g.order(),
            limit: CANON_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// `D_{p-k,k}` with the parameter normalized to `k <= p - k - 1`.
pub fn recognize_dpk(g: &Digraph) -> Result<Option<FamilyLabel>> {
    bound_check(g)?;
    let p = g.order();
    if p < 3 {
        return Ok(None);
    }
    for k in 1..=(p - 1) / 2 {
        if let Some(label) = match_member(g, &FamilySpec::Dpk(p, k))? {
            return Ok(Some(label));
        }
    }
    Ok(None)
}

/// Any member of the `D_0` family: some `B` with `|B| = (p-1)/2` such that
/// every vertex outside `B` has out- and in-neighbourhood exactly `B`.
pub fn recognize_d0(g: &Digraph) -> Result<Option<FamilyLabel>> {
    bound_check(g)?;
    let p = g.order();
    if p < 3 || p.is_multiple_of(2) {
        return Ok(None);
    }
    let q = (p - 1) / 2;
    for v in 0..p {
        let b = g.out_set(v);
        if b.len() != q || g.in_set(v) != b {
            continue;
        }
        let a = g.vertices().difference(b);
        if !a.iter().all(|x| g.out_set(x) == b && g.in_set(x) == b) {
            continue;
        }
        let mut map = vec![0; p];
        for (i, x) in a.iter().chain(b.iter()).enumerate() {
            map[x] = i;
        }
        return Ok(Some(FamilyLabel {
            kind: LabelKind::Member(FamilySpec::D0 {
                order: p,
                b: g.induced(b)?,
            }),
            map,
        }));
    }
    Ok(None)
}

/// The exceptions to bypass existence under `(M_0)`: `C3`, `T5`,
/// `D_{p-k,k}` or `D_0`, checked in that order.
pub fn recognize_exception(g: &Digraph) -> Result<Option<FamilyLabel>> {
    bound_check(g)?;
    match g.order() {
        3 => {
            if let Some(l) = match_member(g, &FamilySpec::C3)? {
                return Ok(Some(l));
            }
        }
        5 => {
            if let Some(l) = match_member(g, &FamilySpec::T5)? {
                return Ok(Some(l));
            }
        }
        _ => {}
    }
    if let Some(l) = recognize_dpk(g)? {
        return Ok(Some(l));
    }
    recognize_d0(g)
}

fn phi_params(g: &Digraph, m: usize) -> Result<()> {
    let p = g.order();
    if p < 4 {
        return Err(invalid(format!("Phi membership needs p >= 4, got {p}")));
    }
    bound_check(g)?;
    if 2 * m <= p + 1 || m > p - 1 {
        return Err(invalid(format!(
            "Phi membership needs (p+1)/2 < m <= p-1 for p = {p}, got m = {m}"
        )));
    }
    Ok(())
}

/// Labelling `x_1..x_p` (as `labeling[i-1]`) witnessing `g` in `Phi^m_p`.
///
/// Condition (c) is read against the fixed labelling: no arc `x_j -> x_i`
/// for `j >= i + 2`, and no arc in either direction between `x_i` and
/// `x_{i+m-1}` for `1 <= i <= p - m + 1`. The required arc `x_1 -> x_p` is a
/// forward arc and is unaffected.
pub fn is_phi_member(g: &Digraph, m: usize) -> Result<Option<Vec<usize>>> {
    phi_params(g, m)?;
    if !satisfies_meyniel(g, 1) {
        return Ok(None);
    }
    let p = g.order();
    let mut found = None;
    for_each_hamiltonian_cycle(g, |cycle| {
        for r in 0..p {
            // x_{p-t} = cycle[r + t]
            let labeling: Vec<usize> = (0..p).map(|i| cycle[(r + p - 1 - i) % p]).collect();
            if phi_condition_c(g, &labeling, m) {
                found = Some(labeling);
                return false;
            }
        }
        true
    });
    Ok(found)
}

fn phi_condition_c(g: &Digraph, x: &[usize], m: usize) -> bool {
    let p = x.len();
    for i in 0..p {
        for j in i + 2..p {
            if g.has_arc(x[j], x[i]) {
                return false;
            }
        }
    }
    (0..=p - m).all(|i| !g.adjacent(x[i], x[i + m - 1]))
}

/// Whether the cycle spectrum of a `Phi^m_p` member is exactly `[2,p] \ {m}`.
pub fn phi_spectrum_check(g: &Digraph, m: usize) -> Result<bool> {
    if is_phi_member(g, m)?.is_none() {
        return Err(Error::Precondition(format!(
            "digraph is not a member of Phi^{m}_{}",
            g.order()
        )));
    }
    let p = g.order();
    let spectrum = cycle_spectrum(g)?;
    Ok((2..=p).all(|len| spectrum.contains(len) == (len != m)))
}

/// `Phi^m_p` membership for every admissible `m`, as labels.
pub fn recognize_phi(g: &Digraph) -> Result<Vec<FamilyLabel>> {
    let p = g.order();
    let mut out = Vec::new();
    if p < 4 {
        return Ok(out);
    }
    for m in (p + 2) / 2..p {
        if 2 * m <= p + 1 {
            continue;
        }
        if let Some(labeling) = is_phi_member(g, m)? {
            let mut map = vec![0; p];
            for (i, &v) in labeling.iter().enumerate() {
                map[v] = i;
            }
            out.push(FamilyLabel {
                kind: LabelKind::Phi { order: p, m },
                map,
            });
        }
    }
    Ok(out)
}

/// Every family this module knows that `g` belongs to.
pub fn recognize_all(g: &Digraph) -> Result<Vec<FamilyLabel>> {
    bound_check(g)?;
    let p = g.order();
    let mut specs = vec![FamilySpec::CompleteK(p)];
    if p >= 2 {
        specs.push(FamilySpec::CycleC(p));
    }
    for a in 1..=p / 2 {
        specs.push(FamilySpec::CompleteBipartite(a, p - a));
    }
    if p.is_multiple_of(2) && p >= 2 {
        specs.push(FamilySpec::CompleteBipartiteMinusArc(p / 2));
    }
    let mut out = Vec::new();
    if let Some(l) = recognize_exception(g)? {
        out.push(l);
    }
    for spec in &specs {
        if let Some(l) = match_member(g, spec)? {
            if !out.iter().any(|o: &FamilyLabel| o.name() == l.name()) {
                out.push(l);
            }
        }
    }
    out.extend(recognize_phi(g)?);
    Ok(out)
}
