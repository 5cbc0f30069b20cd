//! Module invariants checked against the independent oracles: fiber
//! enumeration against plain grid search, generating sets against fiber
//! connectivity, gluings against the splitting they induce, and the
//! complete bipartite family.

mod common;

use common::*;
use num_bigint::BigInt;
use toricsplit::curve::semigroup_profile;
use toricsplit::gluing::{search_gluing, splitting_from_gluing};
use toricsplit::graph::{config_from_graph, four_cycle_system, SimpleGraph};
use toricsplit::markov::{count_minimal_systems, markov_basis, minimal_system};
use toricsplit::splitting::{decide_splittable, enumerate_splittings};
use toricsplit::Configuration;

/// The configurations every oracle suite runs over: the worked scalar
/// semigroups plus the small graph families.
fn scalar_corpus() -> Vec<(Vec<u64>, Configuration)> {
    [
        vec![4u64, 6, 11, 13],
        vec![20, 24, 25, 31],
        vec![85, 102, 77, 88, 99],
        vec![6, 10, 15],
        vec![3, 5, 7],
        vec![5, 6, 7, 8],
        vec![1, 2],
    ]
    .into_iter()
    .map(|gens| {
        let gi: Vec<i64> = gens.iter().map(|&g| g as i64).collect();
        let cfg = Configuration::from_generators(&gi).unwrap();
        (gens, cfg)
    })
    .collect()
}

fn graph_corpus() -> Vec<Configuration> {
    vec![
        config_from_graph(&SimpleGraph::complete_bipartite(2, 2)).unwrap(),
        config_from_graph(&SimpleGraph::complete_bipartite(2, 3)).unwrap(),
        config_from_graph(&SimpleGraph::complete_bipartite(3, 3)).unwrap(),
        config_from_graph(&SimpleGraph::complete(4)).unwrap(),
    ]
}

#[test]
fn fiber_matches_box_enumeration_up_to_weight_40() {
    for (_, cfg) in scalar_corpus() {
        // Scalar degrees with grading value at most 40 (the box oracle is
        // deliberately unpruned, so keep the raw degrees desk-sized too).
        for b in 0..=60u64 {
            let degree = vi(&[b as i64]);
            let w = cfg.weight_of_degree(&degree).unwrap();
            if w > BigInt::from(40) {
                continue;
            }
            let fast = cfg.fiber(&degree).unwrap();
            let slow = box_fiber(&cfg, &degree);
            assert_eq!(fast.elements(), &slow[..], "fiber mismatch at degree {b}");
        }
    }
    // A couple of graph degrees as well.
    let cfg = config_from_graph(&SimpleGraph::complete_bipartite(2, 2)).unwrap();
    let degree = vi(&[1, 1, 1, 1]);
    let fast = cfg.fiber(&degree).unwrap();
    assert_eq!(fast.elements(), &box_fiber(&cfg, &degree)[..]);
    assert_eq!(fast.len(), 2);
}

#[test]
fn markov_and_minimal_systems_connect_all_fibers() {
    for (gens, cfg) in scalar_corpus() {
        let sys = minimal_system(&cfg).unwrap();
        let max_betti: u64 = sys
            .betti()
            .keys()
            .map(|b| u64::try_from(&b[0]).unwrap())
            .max()
            .unwrap_or(0);
        let fibers = scalar_fibers(&gens, 2 * max_betti);
        for moves in [
            markov_basis(&cfg).unwrap(),
            sys.moves().iter().cloned().collect(),
        ] {
            let moves: Vec<Vec<i64>> = moves.iter().map(|m| to_i64_vec(m.as_slice())).collect();
            assert!(
                moves_connect_all_fibers(&fibers, &moves),
                "moves fail connectivity for {gens:?}"
            );
        }
    }
    for cfg in graph_corpus() {
        let sys = minimal_system(&cfg).unwrap();
        let max_betti: u64 = sys
            .betti()
            .keys()
            .map(|b| u64::try_from(&cfg.weight_of_degree(b).unwrap()).unwrap())
            .max()
            .unwrap_or(0);
        let fibers = bounded_fibers(&cfg, 2 * max_betti);
        let moves: Vec<Vec<i64>> = sys
            .moves()
            .iter()
            .map(|m| to_i64_vec(m.as_slice()))
            .collect();
        assert!(moves_connect_all_fibers(&fibers, &moves));
    }
}

#[test]
fn decide_agrees_with_enumeration() {
    for (_, cfg) in scalar_corpus() {
        let decided = decide_splittable(&cfg).unwrap().is_some();
        let enumerated = enumerate_splittings(&cfg).unwrap();
        assert_eq!(decided, !enumerated.is_empty());
        for s in &enumerated {
            assert!(s.report.verdict());
            let dim = cfg.kernel().dim();
            assert!(s.span1.dim() < dim && s.span2.dim() < dim);
        }
    }
}

/// Two-row configurations against the degree-bounded oracle: the Betti
/// degrees and per-degree generator counts of `minimal_system` must match a
/// recount from scratch, and the system must connect every fiber in the
/// window. Complements the scalar random corpus of the acceptance suite.
#[test]
fn random_two_row_configurations_match_oracle() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x2800);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 8 && attempts < 4000 {
        attempts += 1;
        let top: Vec<i64> = (0..4).map(|_| rng.gen_range(1..=6)).collect();
        let bottom: Vec<i64> = (0..4).map(|_| rng.gen_range(-2..=4)).collect();
        let cfg = Configuration::from_i64_rows(&[&top, &bottom]).unwrap();
        if !cfg.is_pointed() || cfg.kernel().dim() == 0 {
            continue;
        }
        let sys = minimal_system(&cfg).unwrap();
        let max_betti: u64 = sys
            .betti()
            .keys()
            .map(|b| u64::try_from(&cfg.weight_of_degree(b).unwrap()).unwrap())
            .max()
            .unwrap_or(0);
        let budget = 2 * max_betti;
        // Skip when the exhaustive window would be too large to enumerate.
        let mut estimate: u128 = 1;
        for d in cfg.variable_degrees() {
            let d = u64::try_from(d).unwrap().max(1);
            estimate = estimate.saturating_mul((budget / d + 1) as u128);
        }
        if estimate > 300_000 {
            continue;
        }
        let fibers = bounded_fibers(&cfg, budget);
        let mut oracle_betti = 0usize;
        for fiber in &fibers {
            let groups = support_components(fiber);
            if groups.len() < 2 {
                continue;
            }
            oracle_betti += 1;
            let exps: Vec<BigInt> = fiber[0].iter().map(|&x| BigInt::from(x)).collect();
            let degree = cfg.degree_of(&exps).unwrap();
            let comps = sys
                .betti()
                .get(&degree)
                .unwrap_or_else(|| panic!("missing Betti degree {degree:?}"));
            assert_eq!(comps.count(), groups.len(), "component count at {degree:?}");
            let moves_at: usize = sys
                .moves()
                .iter()
                .filter(|m| cfg.degree_of(&m.positive_part()).unwrap() == degree)
                .count();
            assert_eq!(moves_at, groups.len() - 1);
        }
        assert_eq!(
            oracle_betti,
            sys.betti().len(),
            "extra Betti degrees claimed"
        );
        let moves: Vec<Vec<i64>> = sys
            .moves()
            .iter()
            .map(|m| to_i64_vec(m.as_slice()))
            .collect();
        assert!(moves_connect_all_fibers(&fibers, &moves));
        tested += 1;
    }
    assert!(
        tested >= 8,
        "only {tested} usable random two-row configurations"
    );
}

#[test]
fn every_found_gluing_induces_a_verified_splitting() {
    let candidates = [
        vec![85i64, 102, 77, 88, 99],
        vec![6, 10, 15],
        vec![10, 14, 15, 21],
        vec![4, 6, 11, 13],
        vec![20, 24, 25, 31],
        vec![5, 6, 7, 8],
        vec![8, 9, 10, 12],
    ];
    let mut found = 0;
    for gens in candidates {
        let cfg = Configuration::from_generators(&gens).unwrap();
        if let Some(cert) = search_gluing(&cfg).unwrap() {
            let splitting = splitting_from_gluing(&cfg, &cert).unwrap();
            assert!(splitting.report.verdict(), "gluing of {gens:?} must split");
            found += 1;
        }
    }
    assert!(found >= 3, "expected several gluings in the candidate list");
}

#[test]
fn complete_bipartite_family_up_to_4() {
    for m in 2..=4usize {
        for n in 2..=4usize {
            let cfg = config_from_graph(&SimpleGraph::complete_bipartite(m, n)).unwrap();
            assert_eq!(cfg.kernel().dim(), (m - 1) * (n - 1), "height of K{m},{n}");
            assert_eq!(
                count_minimal_systems(&cfg).unwrap(),
                BigInt::from(1),
                "uniqueness for K{m},{n}"
            );
            let sys = minimal_system(&cfg).unwrap();
            let direct = four_cycle_system(m, n).unwrap();
            assert_eq!(sys.moves(), direct.moves(), "fast path for K{m},{n}");
            assert_eq!(sys.len(), m * (m - 1) * n * (n - 1) / 4);
            // Every generator of a complete bipartite ideal is forced.
            assert_eq!(sys.indispensable().len(), sys.len());
        }
    }
}

#[test]
fn gap_count_characterizes_symmetry() {
    let families: Vec<Vec<u64>> = vec![
        vec![2, 3],
        vec![3, 4],
        vec![3, 5, 7],
        vec![4, 5, 6],
        vec![4, 6, 9],
        vec![5, 6, 7, 8],
        vec![6, 7, 8, 9, 10],
        vec![10, 14, 15, 21],
        vec![20, 24, 25, 31],
        vec![7, 11, 13],
    ];
    for gens in families {
        let ns = semigroup_profile(&gens).unwrap();
        let symmetric = ns.is_symmetric();
        let by_count = 2 * ns.gaps().len() as i64 == ns.frobenius() + 1;
        assert_eq!(
            symmetric, by_count,
            "two symmetry tests disagree for {gens:?}"
        );
        let f = ns.frobenius();
        let by_scan = (0..=f).all(|z| ns.contains(z as u64) != ns.contains((f - z) as u64));
        assert_eq!(symmetric, by_scan, "pairing scan disagrees for {gens:?}");
    }
}
