//! Cross-module invariants that don't belong to any single unit.

use qmetric::classify::{classify, ClassKind, SplitMix64};
use qmetric::diagram::{gram_rank, DiagramFamily};
use qmetric::perm::{self, orbit_count_on_tuples, PermutationGroup};
use qmetric::space::{ColorId, ColoredSpace, Graph, Rational64};
use std::collections::BTreeSet;

#[test]
fn simplex_product_always_two_colors_merging_to_complete() {
    let one = Rational64::from_integer(1);
    for m in 2..=3usize {
        for s in 2..=3usize {
            for a in [Rational64::new(3, 2), Rational64::new(1, 2), Rational64::from_integer(2)] {
                if a == one || one * 2 < a {
                    continue;
                }
                let space = ColoredSpace::build_simplex_product(m, s, one, a).unwrap();
                assert_eq!(space.num_colors(), 2);
                let all: BTreeSet<ColorId> = [0, 1].into_iter().collect();
                let merged = space.merge_colors(&all).unwrap();
                assert_eq!(merged, Graph::complete(m * s));
            }
        }
    }
}

#[test]
fn merge_colors_agrees_with_decoloration_components() {
    let s = qmetric::corpus::six_point_three_color_space();
    let subset: BTreeSet<ColorId> = [0, 2].into_iter().collect();
    let merged = s.merge_colors(&subset).unwrap();
    // Decoloring {0,2} vs {1} yields a 2-color space; one of its components
    // is the merged graph.
    let decolored = s.decolor(&[subset.clone(), BTreeSet::from([1])]);
    let components: Vec<Graph> = decolored
        .color_decomposition()
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    assert!(components.contains(&merged));
}

#[test]
fn tl_rank_matches_classical_orbits_at_every_small_base() {
    // The commutative bases: one and two points. The Gram rank over the
    // degenerate fields Q(1) and Q(√2) must reproduce the classical orbit
    // counts of the trivial group and S_2.
    for k in 0..=5u32 {
        assert_eq!(gram_rank(DiagramFamily::Tl { n: 1 }, k).unwrap(), 1, "one point, k = {k}");
    }
    let s2 = PermutationGroup::symmetric(2);
    for k in 0..=5u32 {
        let rank = gram_rank(DiagramFamily::Tl { n: 2 }, k).unwrap() as u64;
        assert_eq!(rank, orbit_count_on_tuples(&s2, k).unwrap(), "two points, k = {k}");
    }
}

#[test]
fn commutative_survey_results_carry_transitive_groups() {
    // Among magic-passing sizes (n >= 4), a commutative classification must
    // come with a group acting transitively, so its order is at least n.
    for n in 4..=5usize {
        let report = qmetric::survey(n, qmetric::SurveyMode::Exhaustive).unwrap();
        for class in &report.classes {
            if let ClassKind::Commutative { group } = &class.classification.kind {
                let g = group.as_ref().expect("small spaces always carry groups");
                assert!(g.order >= n, "order {} < n = {n} for {}", g.order, class.key);
            }
        }
    }
}

#[test]
fn graph_canonical_keys_agree_with_brute_force() {
    let mut rng = SplitMix64::new(31);
    let random_graph = |n: usize, rng: &mut SplitMix64| {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.next_u64() % 2 == 0 {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    };
    for n in 2..=6 {
        for _ in 0..30 {
            let a = random_graph(n, &mut rng);
            let b = random_graph(n, &mut rng);
            let keys_equal = a.canonical_key().unwrap() == b.canonical_key().unwrap();
            let mut iso = false;
            perm::for_each_permutation(n, |p| {
                if !iso && a.relabel(p) == b {
                    iso = true;
                }
            });
            assert_eq!(keys_equal, iso);
        }
    }
}

#[test]
fn classify_handles_parsed_input_end_to_end() {
    let text = "5\n0 1 1 1 1\n1 0 1 1 1\n1 1 0 1 1\n1 1 1 0 1\n1 1 1 1 0\n";
    let space = ColoredSpace::parse(text).unwrap();
    assert_eq!(classify(&space).kind, ClassKind::TemperleyLieb { n: 5 });

    // A 7-point letter matrix with a bicyclic color.
    let g = Graph::disjoint_cycles(&[3, 4]);
    let mut rows = String::from("7\n");
    for i in 0..7 {
        let row: Vec<&str> = (0..7)
            .map(|j| {
                if i == j {
                    "0"
                } else if g.edge(i, j) {
                    "a"
                } else {
                    "b"
                }
            })
            .collect();
        rows.push_str(&row.join(" "));
        rows.push('\n');
    }
    let space = ColoredSpace::parse(&rows).unwrap();
    assert!(matches!(classify(&space).kind, ClassKind::NonTransitive { .. }));
}

#[test]
fn detectors_are_isomorphism_invariant_exhaustively_at_n4() {
    use qmetric::rules;
    // Every class on 4 points, every relabeling, every detector outcome.
    let report = qmetric::survey(4, qmetric::SurveyMode::Exhaustive).unwrap();
    for class in &report.classes {
        let rep = space_from_key(&class.key);
        let magic = rules::magic_rule_check(&rep).is_none();
        let bicycle = rules::find_unbalanced_bicycle(&rep).is_some();
        let duplex = rules::find_duplex(&rep).map(|(m, s, _)| (m, s));
        let star = rules::find_star(&rep).unwrap().is_some();
        let vt = rules::components_vt_check(&rep).unwrap().is_none();
        perm::for_each_permutation(4, |p| {
            let t = rep.relabel(p);
            assert_eq!(rules::magic_rule_check(&t).is_none(), magic);
            assert_eq!(rules::find_unbalanced_bicycle(&t).is_some(), bicycle);
            assert_eq!(rules::find_duplex(&t).map(|(m, s, _)| (m, s)), duplex);
            assert_eq!(rules::find_star(&t).unwrap().is_some(), star);
            assert_eq!(rules::components_vt_check(&t).unwrap().is_none(), vt);
        });
    }
}

#[test]
fn detectors_are_isomorphism_invariant_on_sampled_n5_classes() {
    use qmetric::rules;
    let report = qmetric::survey(5, qmetric::SurveyMode::Exhaustive).unwrap();
    let mut rng = SplitMix64::new(17);
    for _ in 0..50 {
        let class = &report.classes[(rng.next_u64() % report.classes.len() as u64) as usize];
        let rep = space_from_key(&class.key);
        let magic = rules::magic_rule_check(&rep).is_none();
        let bicycle = rules::find_unbalanced_bicycle(&rep).is_some();
        let duplex = rules::find_duplex(&rep).map(|(m, s, _)| (m, s));
        let cycle = rules::find_hamiltonian_merge(&rep).unwrap().is_some();
        let vt = rules::components_vt_check(&rep).unwrap().is_none();
        perm::for_each_permutation(5, |p| {
            let t = rep.relabel(p);
            assert_eq!(rules::magic_rule_check(&t).is_none(), magic);
            assert_eq!(rules::find_unbalanced_bicycle(&t).is_some(), bicycle);
            assert_eq!(rules::find_duplex(&t).map(|(m, s, _)| (m, s)), duplex);
            assert_eq!(rules::find_hamiltonian_merge(&t).unwrap().is_some(), cycle);
            assert_eq!(rules::components_vt_check(&t).unwrap().is_none(), vt);
        });
    }
}

fn space_from_key(key: &str) -> ColoredSpace {
    let (n, word) = key.split_once(':').expect("key format");
    let n: usize = n.parse().unwrap();
    let word: Vec<ColorId> = word
        .chars()
        .map(|c| c.to_digit(36).expect("base-36 digit") as ColorId)
        .collect();
    ColoredSpace::from_color_word(n, &word)
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ColoredSpace>();
    assert_send_sync::<Graph>();
    assert_send_sync::<PermutationGroup>();
    assert_send_sync::<qmetric::Classification>();
    assert_send_sync::<qmetric::diagram::QuadScalar>();
    assert_send_sync::<qmetric::diagram::PairingDiagram>();
}

// The eighth level of the census has 14 classes; takes a few seconds in
// release mode, so it is opt-in: `cargo test --release -- --ignored`.
#[test]
#[ignore]
fn enumerate_vt_level_eight_has_fourteen_classes() {
    let levels = qmetric::enumerate_vertex_transitive(8).unwrap();
    assert_eq!(levels[7].len(), 14);
}

#[test]
fn enumerate_vt_level_seven_closed_under_complement() {
    let levels = qmetric::enumerate_vertex_transitive(7).unwrap();
    let keys: BTreeSet<_> = levels[6]
        .iter()
        .map(|g| g.canonical_key().unwrap())
        .collect();
    for g in &levels[6] {
        assert!(keys.contains(&g.complement().canonical_key().unwrap()));
        assert!(perm::is_vertex_transitive(g).unwrap());
    }
}
