//! Claim checking on single digraphs, enumeration sweeps and explore mode.
//!
//! # Record format
//!
//! [`SweepReport::to_record`] emits one `key=value` pair per line in this
//! fixed order:
//!
//! ```text
//! claim=<tag>
//! p=<order>
//! mode=exhaustive | mode=sampled
//! seed=<u64>                      (sampled only)
//! count=<u64>                     (sampled only)
//! rng=<algorithm id>              (sampled only)
//! total=<n>
//! hypothesis_not_met=<n>
//! holds=<n>
//! exception=<n>
//! counterexample=<n>
//! exception_class=<name> count=<n> forms=<form>,<form>,...   (sorted by name)
//! counterexample_form=<form> count=<n> first_index=<hex> detail=<text>   (sorted by form)
//! ```
//!
//! Forms are `p:hex` canonical forms. Wall time is not part of the record.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::conditions::{
    bgy_53, bjgl_51, bjgl_52, manoussakis_54, min_degree, min_in_degree, min_out_degree,
    satisfies_meyniel, woodall,
};
use crate::connectivity::{is_k_strong, is_strong, strong_components_ordered};
use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::families::{
    match_member, recognize_d0, recognize_exception, recognize_phi, FamilyLabel, FamilySpec,
};
use crate::search::{
    cycle_spectrum, find_dpn, find_hamiltonian_bypass, find_hamiltonian_cycle, find_longest_cycle,
    is_hamiltonian, CycleSpectrum, Witness,
};

/// Largest order accepted by [`check_claim`].
pub const CHECK_MAX_ORDER: usize = 10;
/// Largest order for exhaustive enumeration.
pub const EXHAUSTIVE_MAX_ORDER: usize = 6;

/// Identifier of the stream used by sampled modes.
pub const RNG_ID: &str =
    "chacha8/rand_chacha-0.9/seed_from_u64;sample_i=words[4i..4i+4]:lo_u64|hi_u64<<64,masked";

const BLOCK: u128 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// Strong and `(M_1)` implies Hamiltonian.
    HamiltonianM1,
    /// Structure of a strong non-Hamiltonian `(M_0)` digraph around a longest cycle.
    LongestCycleStructure,
    /// Strong and `(M_2)` implies pancyclic, except `K*_{p/2,p/2}`.
    PancyclicM2,
    /// Strong and `(M_1)` implies pancyclic, except the bipartite and `Phi` families.
    PancyclicM1,
    /// 2-strong with minimum degree `p - 1` has a bypass, except `D_0`.
    BypassTwoStrong,
    /// Strong and `(M_0)` has a bypass, except `D_0`, `D_{p-k,k}`, `T5`, `C3`.
    BypassM0,
    /// Strong and `(M_1)` with `p >= 4` contains `D(p,3)`.
    Dp3M1,
    /// Woodall's condition implies a bypass.
    BypassWoodall,
    /// Minimum degree `p` implies a bypass.
    BypassMinDegree,
    /// `(M_1)` implies a bypass, except `C3` and `T5`.
    BypassM1,
    /// The common in-neighbour condition with `od >= 2`, `id >= 3` implies a bypass.
    BypassInNeighbour,
    /// The triple condition implies a bypass, except `T5`.
    BypassTriple,
    /// 2-strong with all but one degree at least `p` implies a bypass.
    BypassAlmostAll,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::HamiltonianM1,
        ClaimId::LongestCycleStructure,
        ClaimId::PancyclicM2,
        ClaimId::PancyclicM1,
        ClaimId::BypassTwoStrong,
        ClaimId::BypassM0,
        ClaimId::Dp3M1,
        ClaimId::BypassWoodall,
        ClaimId::BypassMinDegree,
        ClaimId::BypassM1,
        ClaimId::BypassInNeighbour,
        ClaimId::BypassTriple,
        ClaimId::BypassAlmostAll,
    ];

    /// The tag used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            ClaimId::HamiltonianM1 => "Meyniel_1_5",
            ClaimId::LongestCycleStructure => "Thm_1_9_I_III_IV",
            ClaimId::PancyclicM2 => "Thm_1_10",
            ClaimId::PancyclicM1 => "Thm_1_12",
            ClaimId::BypassTwoStrong => "Thm_1_16",
            ClaimId::BypassM0 => "Thm_1_18",
            ClaimId::Dp3M1 => "Thm_1_19",
            ClaimId::BypassWoodall => "Cor_1",
            ClaimId::BypassMinDegree => "Cor_2",
            ClaimId::BypassM1 => "Cor_3",
            ClaimId::BypassInNeighbour => "Thm_5_5",
            ClaimId::BypassTriple => "Thm_5_6",
            ClaimId::BypassAlmostAll => "Thm_5_7",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let known: Vec<_> = ClaimId::ALL.iter().map(|c| c.tag()).collect();
                Error::Parse(format!(
                    "unknown claim {s:?}; expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

/// What a successful check found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    Witness(Witness),
    Spectrum(CycleSpectrum),
    /// The longest cycle the structural statements were evaluated against.
    LongestCycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    HypothesisNotMet,
    Holds(Evidence),
    Exception(FamilyLabel),
    Counterexample { graph: Digraph, detail: String },
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }
}

fn two_strong(g: &Digraph) -> bool {
    is_k_strong(g, 2).unwrap_or(false)
}

/// Some `x0` has every other vertex of degree at least `p`, and either the
/// digraph is Hamiltonian or `d(x0) >= 2(p-1)/5`.
fn almost_all_degree(g: &Digraph) -> bool {
    let p = g.order();
    let low: Vec<usize> = (0..p).filter(|&v| g.total_degree(v) < p).collect();
    let candidates: Vec<usize> = match low.len() {
        0 => (0..p).collect(),
        1 => low,
        _ => return false,
    };
    candidates
        .iter()
        .any(|&x0| 5 * g.total_degree(x0) >= 2 * (p - 1))
        || is_hamiltonian(g)
}

/// Full hypothesis of a claim, strongness tested last.
pub fn hypothesis(g: &Digraph, claim: ClaimId) -> bool {
    let p = g.order();
    match claim {
        ClaimId::HamiltonianM1 => p >= 2 && satisfies_meyniel(g, 1) && is_strong(g),
        ClaimId::LongestCycleStructure => {
            p >= 3 && satisfies_meyniel(g, 0) && is_strong(g) && !is_hamiltonian(g)
        }
        ClaimId::PancyclicM2 => p >= 3 && satisfies_meyniel(g, 2) && is_strong(g),
        ClaimId::PancyclicM1 => p >= 3 && satisfies_meyniel(g, 1) && is_strong(g),
        ClaimId::BypassTwoStrong => p >= 3 && min_degree(g) + 1 >= p && two_strong(g),
        ClaimId::BypassM0 => p >= 3 && satisfies_meyniel(g, 0) && is_strong(g),
        ClaimId::Dp3M1 => p >= 4 && satisfies_meyniel(g, 1) && is_strong(g),
        ClaimId::BypassWoodall => p >= 3 && woodall(g),
        ClaimId::BypassMinDegree => p >= 3 && min_degree(g) >= p,
        ClaimId::BypassM1 => p >= 3 && satisfies_meyniel(g, 1),
        ClaimId::BypassInNeighbour => {
            p >= 4 && min_out_degree(g) >= 2 && min_in_degree(g) >= 3 && bjgl_51(g) && is_strong(g)
        }
        ClaimId::BypassTriple => p >= 4 && manoussakis_54(g) && is_strong(g),
        ClaimId::BypassAlmostAll => p >= 3 && two_strong(g) && almost_all_degree(g),
    }
}

fn bypass_or(
    g: &Digraph,
    exception: impl FnOnce(&Digraph) -> Result<Option<FamilyLabel>>,
) -> Result<Verdict> {
    if let Some(w) = find_hamiltonian_bypass(g)? {
        return Ok(Verdict::Holds(Evidence::Witness(w)));
    }
    Ok(match exception(g)? {
        Some(label) => Verdict::Exception(label),
        None => counterexample(g, "no Hamiltonian bypass"),
    })
}

fn counterexample(g: &Digraph, detail: impl Into<String>) -> Verdict {
    Verdict::Counterexample {
        graph: g.clone(),
        detail: detail.into(),
    }
}

fn no_exception(_: &Digraph) -> Result<Option<FamilyLabel>> {
    Ok(None)
}

fn first_member(g: &Digraph, specs: &[FamilySpec]) -> Result<Option<FamilyLabel>> {
    for spec in specs {
        if let Some(l) = match_member(g, spec)? {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

fn balanced_bipartite(g: &Digraph) -> Result<Option<FamilyLabel>> {
    let p = g.order();
    if p % 2 == 1 {
        return Ok(None);
    }
    match_member(g, &FamilySpec::CompleteBipartite(p / 2, p / 2))
}

fn pancyclic_exception(g: &Digraph) -> Result<Option<FamilyLabel>> {
    let p = g.order();
    if p.is_multiple_of(2) {
        let a = p / 2;
        if let Some(l) = first_member(
            g,
            &[
                FamilySpec::CompleteBipartite(a, a),
                FamilySpec::CompleteBipartiteMinusArc(a),
            ],
        )? {
            return Ok(Some(l));
        }
    }
    Ok(recognize_phi(g)?.into_iter().next())
}

fn pancyclic_or(
    g: &Digraph,
    exception: fn(&Digraph) -> Result<Option<FamilyLabel>>,
) -> Result<Verdict> {
    let spectrum = cycle_spectrum(g)?;
    if spectrum.is_pancyclic(g.order()) {
        return Ok(Verdict::Holds(Evidence::Spectrum(spectrum)));
    }
    Ok(match exception(g)? {
        Some(label) => Verdict::Exception(label),
        None => counterexample(g, format!("not pancyclic, cycle lengths {spectrum}")),
    })
}

/// Outcome of the structural statements for a longest cycle `C`, `A = V \ V(C)`.
struct Structure {
    cycle: Vec<usize>,
    failures: Vec<String>,
    only_short_cycles_missing: bool,
}

fn longest_cycle_structure(g: &Digraph) -> Result<Structure> {
    let p = g.order();
    let cycle = find_longest_cycle(g)?
        .map(|w| w.path)
        .ok_or_else(|| Error::Precondition("digraph has no cycle".into()))?;
    let on: VertexSet = cycle.iter().copied().collect();
    let a = g.vertices().difference(on);
    let mut failures = Vec::new();

    let members: Vec<usize> = a.iter().collect();
    if members
        .iter()
        .enumerate()
        .any(|(i, &x)| members[i + 1..].iter().any(|&y| !g.adjacent(x, y)))
    {
        failures.push("two vertices off the longest cycle are non-adjacent".to_string());
    }
    if let Some(&v) = members.iter().find(|&&v| g.total_degree(v) + 1 > p) {
        failures.push(format!("off-cycle vertex {v} has degree above p-1"));
    }
    if !a.is_empty() {
        let sub = g.induced(a)?;
        let complete = strong_components_ordered(&sub)
            .components()
            .iter()
            .all(|c| {
                c.iter()
                    .all(|u| c.iter().all(|v| u == v || sub.has_arc(u, v)))
            });
        if !complete {
            failures.push("a strong component off the longest cycle is not complete".to_string());
        }
        if two_strong(g) {
            let transitive = (0..sub.order()).all(|u| {
                (0..sub.order()).all(|v| {
                    u == v
                        || (sub.has_arc(u, v) != sub.has_arc(v, u)
                            && (0..sub.order()).all(|w| {
                                !(sub.has_arc(u, v) && sub.has_arc(v, w))
                                    || w == u
                                    || sub.has_arc(u, w)
                            }))
                })
            });
            if !transitive {
                failures.push("off-cycle vertices do not form a transitive tournament".to_string());
            }
        }
    }
    let structural = failures.len();
    let spectrum = cycle_spectrum(g)?;
    let m = cycle.len();
    if let Some(r) = (2..=m).find(|&r| !spectrum.contains(r)) {
        failures.push(format!(
            "no cycle of length {r} (longest cycle has {m} vertices)"
        ));
    }
    Ok(Structure {
        cycle,
        only_short_cycles_missing: structural == 0 && failures.len() == 1,
        failures,
    })
}

fn structure_verdict(g: &Digraph) -> Result<Verdict> {
    let s = longest_cycle_structure(g)?;
    if s.failures.is_empty() {
        return Ok(Verdict::Holds(Evidence::LongestCycle(s.cycle)));
    }
    let p = g.order();
    if s.only_short_cycles_missing && p % 2 == 1 {
        if let Some(l) = match_member(g, &FamilySpec::CompleteBipartite(p / 2, p / 2 + 1))? {
            return Ok(Verdict::Exception(l));
        }
    }
    Ok(counterexample(g, s.failures.join("; ")))
}

fn c3_or_t5(g: &Digraph) -> Result<Option<FamilyLabel>> {
    match g.order() {
        3 => match_member(g, &FamilySpec::C3),
        5 => match_member(g, &FamilySpec::T5),
        _ => Ok(None),
    }
}

fn t5_only(g: &Digraph) -> Result<Option<FamilyLabel>> {
    if g.order() == 5 {
        match_member(g, &FamilySpec::T5)
    } else {
        Ok(None)
    }
}

/// Hypothesis, then conclusion, then the claim's exception recognizer.
pub fn check_claim(g: &Digraph, claim: ClaimId) -> Result<Verdict> {
    if g.order() > CHECK_MAX_ORDER {
        return Err(Error::AboveBound {
            what: "claim check",
            order: g.order(),
            limit: CHECK_MAX_ORDER,
        });
    }
    if !hypothesis(g, claim) {
        return Ok(Verdict::HypothesisNotMet);
    }
    conclusion(g, claim)
}

fn conclusion(g: &Digraph, claim: ClaimId) -> Result<Verdict> {
    match claim {
        ClaimId::HamiltonianM1 => Ok(match find_hamiltonian_cycle(g)? {
            Some(w) => Verdict::Holds(Evidence::Witness(w)),
            None => counterexample(g, "no Hamiltonian cycle"),
        }),
        ClaimId::LongestCycleStructure => structure_verdict(g),
        ClaimId::PancyclicM2 => pancyclic_or(g, balanced_bipartite),
        ClaimId::PancyclicM1 => pancyclic_or(g, pancyclic_exception),
        ClaimId::BypassTwoStrong => bypass_or(g, recognize_d0),
        ClaimId::BypassM0 => bypass_or(g, recognize_exception),
        ClaimId::Dp3M1 => Ok(match find_dpn(g, 3)? {
            Some(w) => Verdict::Holds(Evidence::Witness(w)),
            None => counterexample(g, "no D(p,3)"),
        }),
        ClaimId::BypassWoodall
        | ClaimId::BypassMinDegree
        | ClaimId::BypassInNeighbour
        | ClaimId::BypassAlmostAll => bypass_or(g, no_exception),
        ClaimId::BypassM1 => bypass_or(g, c3_or_t5),
        ClaimId::BypassTriple => bypass_or(g, t5_only),
    }
}

/// Adjacency rows decoded straight from an enumeration index.
struct Rows {
    p: usize,
    out: [u64; CHECK_MAX_ORDER],
    inn: [u64; CHECK_MAX_ORDER],
}

impl Rows {
    fn from_index(p: usize, index: u128) -> Rows {
        let mut out = [0u64; CHECK_MAX_ORDER];
        let mut inn = [0u64; CHECK_MAX_ORDER];
        let w = p - 1;
        let row_mask = (1u64 << w) - 1;
        for (u, row) in out.iter_mut().enumerate().take(p) {
            let r = (index >> (u * w)) as u64 & row_mask;
            let low = r & ((1 << u) - 1);
            *row = low | (r >> u) << (u + 1);
        }
        for (u, &row) in out.iter().enumerate().take(p) {
            let mut bits = row;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                inn[v] |= 1 << u;
            }
        }
        Rows { p, out, inn }
    }

    fn od(&self, v: usize) -> u32 {
        self.out[v].count_ones()
    }

    fn id(&self, v: usize) -> u32 {
        self.inn[v].count_ones()
    }

    fn deg(&self, v: usize) -> u32 {
        self.od(v) + self.id(v)
    }

    fn no_sources_or_sinks(&self) -> bool {
        (0..self.p).all(|v| self.out[v] != 0 && self.inn[v] != 0)
    }

    fn min_out_in(&self, o: u32, i: u32) -> bool {
        (0..self.p).all(|v| self.od(v) >= o && self.id(v) >= i)
    }

    fn meyniel(&self, k: i64) -> bool {
        let need = 2 * self.p as i64 - 2 + k;
        (0..self.p).all(|x| {
            let nb = self.out[x] | self.inn[x];
            let dx = self.deg(x) as i64;
            (x + 1..self.p).all(|y| nb >> y & 1 == 1 || dx + self.deg(y) as i64 >= need)
        })
    }

    fn min_deg(&self, d: u32) -> bool {
        (0..self.p).all(|v| self.deg(v) >= d)
    }

    fn woodall(&self) -> bool {
        let p = self.p as u32;
        (0..self.p).all(|x| {
            (0..self.p).all(|y| x == y || self.out[x] >> y & 1 == 1 || self.od(x) + self.id(y) >= p)
        })
    }
}

/// Cheap necessary condition for the hypothesis; `false` means it fails.
fn prefilter(rows: &Rows, claim: ClaimId) -> bool {
    let p = rows.p as u32;
    match claim {
        ClaimId::HamiltonianM1 | ClaimId::PancyclicM1 | ClaimId::Dp3M1 => {
            rows.meyniel(1) && rows.no_sources_or_sinks()
        }
        ClaimId::LongestCycleStructure | ClaimId::BypassM0 => {
            rows.meyniel(0) && rows.no_sources_or_sinks()
        }
        ClaimId::PancyclicM2 => rows.meyniel(2) && rows.no_sources_or_sinks(),
        ClaimId::BypassTwoStrong => rows.min_deg(p.saturating_sub(1)) && rows.min_out_in(2, 2),
        ClaimId::BypassWoodall => rows.woodall(),
        ClaimId::BypassMinDegree => rows.min_deg(p),
        ClaimId::BypassM1 => rows.meyniel(1),
        ClaimId::BypassInNeighbour => rows.min_out_in(2, 3),
        ClaimId::BypassTriple => rows.no_sources_or_sinks(),
        ClaimId::BypassAlmostAll => {
            rows.min_out_in(2, 2) && (0..rows.p).filter(|&v| rows.deg(v) < p).count() <= 1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepMode {
    /// Every labeled digraph, in arc-index order.
    Exhaustive,
    /// `count` uniform samples from the seeded stream described by [`RNG_ID`].
    Sampled { seed: u64, count: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExceptionClass {
    pub count: u64,
    pub forms: BTreeSet<CanonicalForm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleEntry {
    pub count: u64,
    /// Arc index of the first labeled copy met in enumeration order.
    pub first_index: u128,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub claim: ClaimId,
    pub order: usize,
    pub mode: SweepMode,
    pub total: u64,
    pub hypothesis_not_met: u64,
    pub holds: u64,
    pub exception: u64,
    pub counterexample: u64,
    pub exception_classes: BTreeMap<String, ExceptionClass>,
    pub counterexamples: BTreeMap<CanonicalForm, CounterexampleEntry>,
    pub wall_time: Duration,
}

impl SweepReport {
    fn empty(claim: ClaimId, order: usize, mode: SweepMode) -> Self {
        SweepReport {
            claim,
            order,
            mode,
            total: 0,
            hypothesis_not_met: 0,
            holds: 0,
            exception: 0,
            counterexample: 0,
            exception_classes: BTreeMap::new(),
            counterexamples: BTreeMap::new(),
            wall_time: Duration::ZERO,
        }
    }

    fn record(&mut self, index: u128, verdict: Verdict) -> Result<()> {
        match verdict {
            Verdict::HypothesisNotMet => self.hypothesis_not_met += 1,
            Verdict::Holds(_) => self.holds += 1,
            Verdict::Exception(label) => {
                self.exception += 1;
                let form = canonical_form(&Digraph::from_arc_index(self.order, index)?)?;
                let class = self.exception_classes.entry(label.name()).or_default();
                class.count += 1;
                class.forms.insert(form);
            }
            Verdict::Counterexample { graph, detail } => {
                self.counterexample += 1;
                let entry = self
                    .counterexamples
                    .entry(canonical_form(&graph)?)
                    .or_insert(CounterexampleEntry {
                        count: 0,
                        first_index: index,
                        detail,
                    });
                entry.count += 1;
            }
        }
        self.total += 1;
        Ok(())
    }

    /// Appends a report for a later block.
    fn merge(&mut self, later: SweepReport) {
        self.total += later.total;
        self.hypothesis_not_met += later.hypothesis_not_met;
        self.holds += later.holds;
        self.exception += later.exception;
        self.counterexample += later.counterexample;
        for (name, class) in later.exception_classes {
            let mine = self.exception_classes.entry(name).or_default();
            mine.count += class.count;
            mine.forms.extend(class.forms);
        }
        for (form, entry) in later.counterexamples {
            self.counterexamples
                .entry(form)
                .and_modify(|e| e.count += entry.count)
                .or_insert(entry);
        }
    }

    /// Deterministic text record; see the module documentation.
    pub fn to_record(&self) -> String {
        let mut lines = vec![format!("claim={}", self.claim), format!("p={}", self.order)];
        match self.mode {
            SweepMode::Exhaustive => lines.push("mode=exhaustive".into()),
            SweepMode::Sampled { seed, count } => {
                lines.push("mode=sampled".into());
                lines.push(format!("seed={seed}"));
                lines.push(format!("count={count}"));
                lines.push(format!("rng={RNG_ID}"));
            }
        }
        lines.push(format!("total={}", self.total));
        lines.push(format!("hypothesis_not_met={}", self.hypothesis_not_met));
        lines.push(format!("holds={}", self.holds));
        lines.push(format!("exception={}", self.exception));
        lines.push(format!("counterexample={}", self.counterexample));
        for (name, class) in &self.exception_classes {
            let forms: Vec<String> = class.forms.iter().map(|f| f.to_string()).collect();
            lines.push(format!(
                "exception_class={name} count={} forms={}",
                class.count,
                forms.join(",")
            ));
        }
        for (form, e) in &self.counterexamples {
            lines.push(format!(
                "counterexample_form={form} count={} first_index={:x} detail={}",
                e.count, e.first_index, e.detail
            ));
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))
}

fn slot_mask(p: usize) -> u128 {
    let slots = Digraph::arc_slots(p);
    if slots >= 128 {
        u128::MAX
    } else {
        (1u128 << slots) - 1
    }
}

/// Stream of sample indices `start..start + len` of the seeded sampler.
fn sample_indices(p: usize, seed: u64, start: u64, len: u64) -> impl Iterator<Item = u128> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(4 * start as u128);
    let mask = slot_mask(p);
    (0..len).map(move |_| {
        let lo = rng.next_u64() as u128;
        let hi = rng.next_u64() as u128;
        (lo | hi << 64) & mask
    })
}

fn check_bounds(p: usize, mode: SweepMode) -> Result<()> {
    let limit = match mode {
        SweepMode::Exhaustive => EXHAUSTIVE_MAX_ORDER,
        SweepMode::Sampled { .. } => CHECK_MAX_ORDER,
    };
    if p == 0 || p > limit {
        return Err(Error::AboveBound {
            what: match mode {
                SweepMode::Exhaustive => "exhaustive sweep",
                SweepMode::Sampled { .. } => "sampled sweep",
            },
            order: p,
            limit,
        });
    }
    Ok(())
}

/// Contiguous blocks `(start, len)` covering `0..total`.
fn blocks(total: u128) -> Vec<(u128, u128)> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < total {
        let len = BLOCK.min(total - start);
        out.push((start, len));
        start += len;
    }
    out
}

fn check_index(report: &mut SweepReport, p: usize, claim: ClaimId, index: u128) -> Result<()> {
    let verdict = if p >= 2 && !prefilter(&Rows::from_index(p, index), claim) {
        Verdict::HypothesisNotMet
    } else {
        check_claim(&Digraph::from_arc_index(p, index)?, claim)?
    };
    report.record(index, verdict)
}

/// Applies a claim to every digraph of the chosen enumeration.
///
/// Blocks of indices are processed on `workers` threads and merged in block
/// order, so the report does not depend on scheduling.
pub fn sweep(p: usize, claim: ClaimId, mode: SweepMode, workers: usize) -> Result<SweepReport> {
    check_bounds(p, mode)?;
    let started = Instant::now();
    let total = match mode {
        SweepMode::Exhaustive => 1u128 << Digraph::arc_slots(p),
        SweepMode::Sampled { count, .. } => count as u128,
    };
    let partials: Vec<Result<SweepReport>> = pool(workers)?.install(|| {
        blocks(total)
            .into_par_iter()
            .map(|(start, len)| {
                let mut part = SweepReport::empty(claim, p, mode);
                match mode {
                    SweepMode::Exhaustive => {
                        for index in start..start + len {
                            check_index(&mut part, p, claim, index)?;
                        }
                    }
                    SweepMode::Sampled { seed, .. } => {
                        for index in sample_indices(p, seed, start as u64, len as u64) {
                            check_index(&mut part, p, claim, index)?;
                        }
                    }
                }
                Ok(part)
            })
            .collect()
    });
    let mut report = SweepReport::empty(claim, p, mode);
    for part in partials {
        report.merge(part?);
    }
    report.wall_time = started.elapsed();
    Ok(report)
}

/// Every labeled digraph of order `p <= 6` in arc-index order, optionally filtered.
pub fn enumerate_digraphs<F>(p: usize, filter: Option<F>) -> Result<impl Iterator<Item = Digraph>>
where
    F: Fn(&Digraph) -> bool,
{
    check_bounds(p, SweepMode::Exhaustive)?;
    let total = 1u128 << Digraph::arc_slots(p);
    Ok((0..total).filter_map(move |i| {
        let g = Digraph::from_arc_index(p, i).expect("index within slot range");
        match &filter {
            Some(f) if !f(&g) => None,
            _ => Some(g),
        }
    }))
}

/// Hypotheses offered by explore mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExploreCondition {
    Bjgl51,
    Bjgl52,
    Bgy53,
    Manoussakis54,
    /// The common in-neighbour condition plus `od >= 2` and `id >= 3`.
    InNeighbourMinDegrees,
}

impl ExploreCondition {
    pub const ALL: [ExploreCondition; 5] = [
        ExploreCondition::Bjgl51,
        ExploreCondition::Bjgl52,
        ExploreCondition::Bgy53,
        ExploreCondition::Manoussakis54,
        ExploreCondition::InNeighbourMinDegrees,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ExploreCondition::Bjgl51 => "bjgl_51",
            ExploreCondition::Bjgl52 => "bjgl_52",
            ExploreCondition::Bgy53 => "bgy_53",
            ExploreCondition::Manoussakis54 => "manoussakis_54",
            ExploreCondition::InNeighbourMinDegrees => "thm_55",
        }
    }

    /// The condition together with strongness.
    pub fn holds(self, g: &Digraph) -> bool {
        let cond = match self {
            ExploreCondition::Bjgl51 => bjgl_51(g),
            ExploreCondition::Bjgl52 => bjgl_52(g),
            ExploreCondition::Bgy53 => bgy_53(g),
            ExploreCondition::Manoussakis54 => manoussakis_54(g),
            ExploreCondition::InNeighbourMinDegrees => {
                g.order() >= 4 && min_out_degree(g) >= 2 && min_in_degree(g) >= 3 && bjgl_51(g)
            }
        };
        cond && is_strong(g)
    }
}

impl fmt::Display for ExploreCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ExploreCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExploreCondition::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let known: Vec<_> = ExploreCondition::ALL.iter().map(|c| c.tag()).collect();
                Error::Parse(format!(
                    "unknown condition {s:?}; expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

/// Bypass-free digraphs satisfying a condition, up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreReport {
    pub condition: ExploreCondition,
    pub order: usize,
    pub mode: SweepMode,
    pub examined: u64,
    pub satisfying: u64,
    pub hits: u64,
    pub forms: BTreeSet<CanonicalForm>,
}

impl ExploreReport {
    pub fn to_record(&self) -> String {
        let mut lines = vec![
            format!("condition={}", self.condition),
            format!("p={}", self.order),
        ];
        match self.mode {
            SweepMode::Exhaustive => lines.push("mode=exhaustive".into()),
            SweepMode::Sampled { seed, count } => {
                lines.push("mode=sampled".into());
                lines.push(format!("seed={seed}"));
                lines.push(format!("budget={count}"));
                lines.push(format!("rng={RNG_ID}"));
            }
        }
        lines.push(format!("examined={}", self.examined));
        lines.push(format!("satisfying={}", self.satisfying));
        lines.push(format!("bypass_free={}", self.hits));
        lines.push(format!("classes={}", self.forms.len()));
        lines.extend(self.forms.iter().map(|f| format!("form={f}")));
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// Searches for strong digraphs satisfying `condition` that have no
/// Hamiltonian bypass: every labeled digraph when `p <= 5`, otherwise
/// `budget` seeded samples.
pub fn explore_open_problem(
    condition: ExploreCondition,
    p: usize,
    budget: u64,
    seed: u64,
    workers: usize,
) -> Result<ExploreReport> {
    if !(3..=CHECK_MAX_ORDER).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "explore needs 3 <= p <= {CHECK_MAX_ORDER}, got {p}"
        )));
    }
    let mode = if p <= 5 {
        SweepMode::Exhaustive
    } else {
        SweepMode::Sampled {
            seed,
            count: budget,
        }
    };
    let total = match mode {
        SweepMode::Exhaustive => 1u128 << Digraph::arc_slots(p),
        SweepMode::Sampled { count, .. } => count as u128,
    };
    type Part = (u64, u64, BTreeSet<CanonicalForm>);
    let visit = |index: u128, part: &mut Part| -> Result<()> {
        if !Rows::from_index(p, index).no_sources_or_sinks() {
            return Ok(());
        }
        let g = Digraph::from_arc_index(p, index)?;
        if condition.holds(&g) {
            part.0 += 1;
            if find_hamiltonian_bypass(&g)?.is_none() {
                part.1 += 1;
                part.2.insert(canonical_form(&g)?);
            }
        }
        Ok(())
    };
    let parts: Vec<Result<Part>> = pool(workers)?.install(|| {
        blocks(total)
            .into_par_iter()
            .map(|(start, len)| {
                let mut part: Part = (0, 0, BTreeSet::new());
                match mode {
                    SweepMode::Exhaustive => {
                        for index in start..start + len {
                            visit(index, &mut part)?;
                        }
                    }
                    SweepMode::Sampled { seed, .. } => {
                        for index in sample_indices(p, seed, start as u64, len as u64) {
                            visit(index, &mut part)?;
                        }
                    }
                }
                Ok(part)
            })
            .collect()
    });
    let mut report = ExploreReport {
        condition,
        order: p,
        mode,
        examined: total as u64,
        satisfying: 0,
        hits: 0,
        forms: BTreeSet::new(),
    };
    for part in parts {
        let (sat, hits, forms) = part?;
        report.satisfying += sat;
        report.hits += hits;
        report.forms.extend(forms);
    }
    Ok(report)
}
