mod common;

use common::{brute_bypass, brute_ham_cycle, brute_meyniel, brute_phi, brute_strong, t5_literal};
use hambypass::certify::validate_witness;
use hambypass::families::generate;
use hambypass::verify::{
    check_claim, enumerate_digraphs, explore_open_problem, hypothesis, sweep, Evidence,
    ExploreCondition,
};
use hambypass::{canonical_form, ClaimId, Digraph, LabelKind, SweepMode, Verdict};

const CLAIMS: [ClaimId; 13] = [
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

fn all(p: usize) -> impl Iterator<Item = Digraph> {
    enumerate_digraphs(p, None::<fn(&Digraph) -> bool>).unwrap()
}

/// Every verdict over orders 3 and 4 carries evidence that checks out on its own.
#[test]
fn verdicts_are_self_certifying() {
    for p in 3..=4 {
        for g in all(p) {
            for claim in CLAIMS {
                match check_claim(&g, claim).unwrap() {
                    Verdict::HypothesisNotMet => assert!(!hypothesis(&g, claim)),
                    Verdict::Holds(Evidence::Witness(w)) => validate_witness(&g, &w).unwrap(),
                    Verdict::Holds(_) => {}
                    Verdict::Exception(label) => match &label.kind {
                        LabelKind::Member(spec) => {
                            assert_eq!(
                                g.relabel(&label.map).unwrap(),
                                generate(spec).unwrap(),
                                "{claim}"
                            );
                        }
                        LabelKind::Phi { m, .. } => {
                            assert!(brute_phi(&g, *m));
                            let inverse: Vec<usize> = {
                                let mut inv = vec![0; p];
                                for (v, &x) in label.map.iter().enumerate() {
                                    inv[x] = v;
                                }
                                inv
                            };
                            assert!(g.has_arc(inverse[0], inverse[p - 1]));
                        }
                    },
                    Verdict::Counterexample { detail, .. } => {
                        panic!("{claim} at p = {p}: {detail} in {g:?}")
                    }
                }
            }
        }
    }
}

#[test]
fn bypass_verdicts_match_brute_force_at_order_four() {
    let bypass_claims = [
        ClaimId::BypassM0,
        ClaimId::BypassWoodall,
        ClaimId::BypassMinDegree,
        ClaimId::BypassM1,
        ClaimId::BypassTwoStrong,
        ClaimId::BypassTriple,
        ClaimId::BypassInNeighbour,
        ClaimId::BypassAlmostAll,
    ];
    for g in all(4) {
        let has = brute_bypass(&g);
        for claim in bypass_claims {
            match check_claim(&g, claim).unwrap() {
                Verdict::Holds(_) => assert!(has),
                Verdict::Exception(_) => assert!(!has),
                _ => {}
            }
        }
    }
}

#[test]
fn meyniel_sweep_counts_match_oracle() {
    for p in 3..=4 {
        let want = all(p)
            .filter(|g| brute_meyniel(g, 1) && brute_strong(g))
            .count() as u64;
        let hamiltonian = all(p)
            .filter(|g| brute_meyniel(g, 1) && brute_strong(g) && brute_ham_cycle(g))
            .count() as u64;
        let r = sweep(p, ClaimId::HamiltonianM1, SweepMode::Exhaustive, 2).unwrap();
        assert_eq!(r.total, 1 << (p * (p - 1)));
        assert_eq!(r.holds, want);
        assert_eq!(hamiltonian, want);
        assert_eq!(r.counterexample, 0);
    }
}

#[test]
fn strong_enumeration_count_matches_oracle() {
    let lib = enumerate_digraphs(4, Some(hambypass::connectivity::is_strong))
        .unwrap()
        .count();
    let brute = all(4).filter(brute_strong).count();
    assert_eq!(lib, brute);
    assert_eq!(all(4).count(), 4096);
}

#[test]
fn classic_corollaries_are_special_cases_of_meyniel() {
    for p in 3..=5 {
        for g in all(p) {
            if hypothesis(&g, ClaimId::BypassWoodall) || hypothesis(&g, ClaimId::BypassMinDegree) {
                assert!(hypothesis(&g, ClaimId::BypassM1), "{g:?}");
            }
        }
        for claim in [ClaimId::BypassWoodall, ClaimId::BypassMinDegree] {
            let r = sweep(p, claim, SweepMode::Exhaustive, 2).unwrap();
            assert_eq!(
                (r.exception, r.counterexample),
                (0, 0),
                "{claim} at p = {p}"
            );
        }
    }
}

#[test]
fn reports_are_reproducible_and_worker_independent() {
    for mode in [
        SweepMode::Exhaustive,
        SweepMode::Sampled {
            seed: 5,
            count: 3000,
        },
    ] {
        let a = sweep(4, ClaimId::BypassM0, mode, 1).unwrap().to_record();
        let b = sweep(4, ClaimId::BypassM0, mode, 3).unwrap().to_record();
        let c = sweep(4, ClaimId::BypassM0, mode, 1).unwrap().to_record();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn explore_finds_t5_under_triple_condition() {
    let t5 = canonical_form(&t5_literal()).unwrap();
    let r = explore_open_problem(ExploreCondition::Manoussakis54, 5, 0, 0, 2).unwrap();
    assert!(r.forms.contains(&t5));
    for f in &r.forms {
        let g = f.to_digraph();
        assert!(brute_strong(&g) && !brute_bypass(&g));
    }
}
