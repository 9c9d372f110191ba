//! The classification cascade and the exhaustive small-case surveys.
//!
//! [`classify`] decides which of the four classes a colored space falls into:
//! non-transitive, commutative, Temperley-Lieb (simplex) or Fuss-Catalan
//! (product of simplices), with an explicit `Undetermined` fallback for
//! inputs beyond the proven range. The decision is complete for spaces with
//! at most 7 points.

use crate::perm::{self, PermutationGroup};
use crate::rules::{self, RuleWitness};
use crate::space::{pair_count, CanonicalKey, ColorId, ColoredSpace, Graph};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("vertex-transitive enumeration supports max_n <= 8, got {0}")]
    EnumerationBound(usize),
    #[error("exhaustive survey supports n <= 5, got {0}")]
    ExhaustiveBound(usize),
    #[error("sampled survey supports n <= 7, got {0}")]
    SampleBound(usize),
}

/// Group data reported with commutative classifications.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupSummary {
    pub fn from_group(g: &PermutationGroup) -> Self {
        GroupSummary {
            order: g.order(),
            generators: g.generators().iter().map(|p| p.cycle_notation()).collect(),
        }
    }
}

/// The four classification outcomes, plus the explicit fallback.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum ClassKind {
    NonTransitive {
        witness: RuleWitness,
    },
    Commutative {
        /// Present whenever the group is small enough to enumerate (n <= 9).
        group: Option<GroupSummary>,
    },
    /// Simplex: diagram parameter delta^2 = n.
    TemperleyLieb { n: usize },
    /// Product of simplices: delta_Y^2 = m blocks, delta_Z^2 = s block size.
    FussCatalan { m: usize, s: usize },
    Undetermined {
        reason: String,
    },
}

impl ClassKind {
    pub fn name(&self) -> &'static str {
        match self {
            ClassKind::NonTransitive { .. } => "non_transitive",
            ClassKind::Commutative { .. } => "commutative",
            ClassKind::TemperleyLieb { .. } => "temperley_lieb",
            ClassKind::FussCatalan { .. } => "fuss_catalan",
            ClassKind::Undetermined { .. } => "undetermined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceRule {
    Triangle,
    Simplex,
    Magic,
    Bicycle,
    ComponentTransitivity,
    Duplex,
    Cycle,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceOutcome {
    Matched,
    NotMatched,
    Pass,
    Fail,
    Skipped,
}

/// One consulted rule, in cascade order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub rule: TraceRule,
    pub outcome: TraceOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RuleWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    #[serde(flatten)]
    pub kind: ClassKind,
    pub trace: Vec<TraceEntry>,
}

fn group_summary(s: &ColoredSpace) -> Option<GroupSummary> {
    perm::automorphism_group(s)
        .ok()
        .map(|g| GroupSummary::from_group(&g))
}

/// Runs the rule cascade. Pure in the isomorphism class of the input;
/// `Undetermined` is a value, never an error.
pub fn classify(s: &ColoredSpace) -> Classification {
    let n = s.size();
    let mut trace = Vec::new();
    let step = |trace: &mut Vec<TraceEntry>, rule, outcome, witness| {
        trace.push(TraceEntry { rule, outcome, witness });
    };

    // Spaces on up to 3 points are always commutative, homogeneous or not.
    if n <= 3 {
        step(&mut trace, TraceRule::Triangle, TraceOutcome::Matched, None);
        return Classification {
            kind: ClassKind::Commutative { group: group_summary(s) },
            trace,
        };
    }
    step(&mut trace, TraceRule::Triangle, TraceOutcome::NotMatched, None);

    if s.is_simplex() {
        step(&mut trace, TraceRule::Simplex, TraceOutcome::Matched, None);
        return Classification { kind: ClassKind::TemperleyLieb { n }, trace };
    }
    step(&mut trace, TraceRule::Simplex, TraceOutcome::NotMatched, None);

    if let Some(witness) = rules::magic_rule_check(s) {
        step(&mut trace, TraceRule::Magic, TraceOutcome::Fail, Some(witness.clone()));
        return Classification { kind: ClassKind::NonTransitive { witness }, trace };
    }
    step(&mut trace, TraceRule::Magic, TraceOutcome::Pass, None);

    if let Some(witness) = rules::find_unbalanced_bicycle(s) {
        step(&mut trace, TraceRule::Bicycle, TraceOutcome::Matched, Some(witness.clone()));
        return Classification { kind: ClassKind::NonTransitive { witness }, trace };
    }
    step(&mut trace, TraceRule::Bicycle, TraceOutcome::NotMatched, None);

    if n <= 7 {
        match rules::components_vt_check(s).expect("n <= 7 checked") {
            Some(witness) => {
                step(
                    &mut trace,
                    TraceRule::ComponentTransitivity,
                    TraceOutcome::Fail,
                    Some(witness.clone()),
                );
                return Classification { kind: ClassKind::NonTransitive { witness }, trace };
            }
            None => step(&mut trace, TraceRule::ComponentTransitivity, TraceOutcome::Pass, None),
        }
    } else {
        step(&mut trace, TraceRule::ComponentTransitivity, TraceOutcome::Skipped, None);
    }

    if let Some((m, s_, witness)) = rules::find_duplex(s) {
        step(&mut trace, TraceRule::Duplex, TraceOutcome::Matched, Some(witness));
        return Classification { kind: ClassKind::FussCatalan { m, s: s_ }, trace };
    }
    step(&mut trace, TraceRule::Duplex, TraceOutcome::NotMatched, None);

    if n >= 5 {
        match rules::find_hamiltonian_merge(s).expect("n >= 5 checked") {
            Some(witness) => {
                step(&mut trace, TraceRule::Cycle, TraceOutcome::Matched, Some(witness));
                return Classification {
                    kind: ClassKind::Commutative { group: group_summary(s) },
                    trace,
                };
            }
            None => step(&mut trace, TraceRule::Cycle, TraceOutcome::NotMatched, None),
        }
    } else {
        step(&mut trace, TraceRule::Cycle, TraceOutcome::Skipped, None);
    }

    if n % 2 == 0 {
        match rules::find_star(s).expect("even n checked") {
            Some(witness) => {
                step(&mut trace, TraceRule::Star, TraceOutcome::Matched, Some(witness));
                return Classification {
                    kind: ClassKind::Commutative { group: group_summary(s) },
                    trace,
                };
            }
            None => step(&mut trace, TraceRule::Star, TraceOutcome::NotMatched, None),
        }
    } else {
        step(&mut trace, TraceRule::Star, TraceOutcome::Skipped, None);
    }

    Classification {
        kind: ClassKind::Undetermined {
            reason: format!("no rule applies; the classification is complete only for n <= 7 (n = {n})"),
        },
        trace,
    }
}

/// Re-runs the cascade and checks that kind and trace are reproduced.
pub fn replay_check(s: &ColoredSpace, claimed: &Classification) -> bool {
    classify(s) == *claimed
}

// ---------------------------------------------------------------------------
// Vertex-transitive census
// ---------------------------------------------------------------------------

/// All vertex-transitive graphs with up to `max_n` vertices, up to
/// isomorphism, as canonical representatives.
///
/// Iterates every labeled graph (regularity filter first), keeps the
/// vertex-transitive ones, dedupes by canonical key. `out[k]` holds the
/// graphs on `k+1` vertices, sorted by edge count then key.
pub fn enumerate_vertex_transitive(max_n: usize) -> Result<Vec<Vec<Graph>>, ClassifyError> {
    if max_n == 0 || max_n > 8 {
        return Err(ClassifyError::EnumerationBound(max_n));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        let m = pair_count(n);
        let mut incident = vec![0u32; n];
        let mut slot = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                incident[i] |= 1 << slot;
                incident[j] |= 1 << slot;
                slot += 1;
            }
        }
        let mut keys: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
        for mask in 0u32..(1u32 << m) {
            let deg0 = (mask & incident[0]).count_ones();
            if incident[1..].iter().any(|&inc| (mask & inc).count_ones() != deg0) {
                continue;
            }
            let mut g = Graph::empty(n);
            let mut slot = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if mask & (1 << slot) != 0 {
                        g.set_edge(i, j, true);
                    }
                    slot += 1;
                }
            }
            if !perm::is_vertex_transitive(&g).expect("n <= 8") {
                continue;
            }
            let key = g.canonical_key().expect("n <= 8");
            keys.entry(key.clone()).or_insert_with(|| graph_from_key(&key));
        }
        let mut graphs: Vec<Graph> = keys.into_values().collect();
        graphs.sort_by_key(|g| (g.edge_count(), g.canonical_key().expect("n <= 8")));
        out.push(graphs);
    }
    Ok(out)
}

fn graph_from_key(key: &CanonicalKey) -> Graph {
    let bytes = key.bytes();
    let n = bytes[0] as usize;
    let mut g = Graph::empty(n);
    let mut slot = 1;
    for i in 0..n {
        for j in (i + 1)..n {
            if bytes[slot] != 0 {
                g.set_edge(i, j, true);
            }
            slot += 1;
        }
    }
    g
}

// ---------------------------------------------------------------------------
// Survey of all colored spaces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurveyMode {
    /// Every partition of the edge slots into colors (restricted-growth
    /// strings); bounded at n <= 5 where Bell(10) = 115975.
    Exhaustive,
    /// Uniform restricted-growth strings from a seeded deterministic
    /// generator. Uniform over labeled colorings, not isomorphism classes.
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyClass {
    /// Canonical key of the isomorphism class, in display form.
    pub key: String,
    /// How many examined colorings landed in this class.
    pub count: u64,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub n: usize,
    pub mode: String,
    /// Colorings examined (labeled, not up to isomorphism).
    pub examined: u64,
    pub note: String,
    /// Distinct classes per classification kind.
    pub tallies: BTreeMap<String, u64>,
    pub classes: Vec<SurveyClass>,
}

impl SurveyReport {
    pub fn undetermined_classes(&self) -> u64 {
        self.tallies.get("undetermined").copied().unwrap_or(0)
    }
}

/// Classifies colored spaces on `n` points, either exhaustively over all
/// colorings or over a random sample, deduping by canonical form.
pub fn survey(n: usize, mode: SurveyMode) -> Result<SurveyReport, ClassifyError> {
    match mode {
        SurveyMode::Exhaustive if n > 5 => return Err(ClassifyError::ExhaustiveBound(n)),
        SurveyMode::Sample { .. } if n > 7 => return Err(ClassifyError::SampleBound(n)),
        _ => {}
    }
    let m = pair_count(n);
    let mut seen: BTreeMap<CanonicalKey, (Classification, u64)> = BTreeMap::new();
    let mut examined = 0u64;
    let visit = |word: &[ColorId], seen: &mut BTreeMap<CanonicalKey, (Classification, u64)>| {
        let space = ColoredSpace::from_color_word(n, word);
        let key = space.canonical_form().expect("survey sizes are small");
        match seen.get_mut(&key) {
            Some((_, count)) => *count += 1,
            None => {
                // Classify the canonical representative so the report is a
                // pure function of the isomorphism class.
                let canonical_word: Vec<ColorId> =
                    key.bytes()[1..].iter().map(|&b| ColorId::from(b)).collect();
                let rep = ColoredSpace::from_color_word(n, &canonical_word);
                let classification = classify(&rep);
                seen.insert(key, (classification, 1));
            }
        }
    };
    match mode {
        SurveyMode::Exhaustive => {
            let mut word = vec![0 as ColorId; m];
            fn rec(
                word: &mut Vec<ColorId>,
                pos: usize,
                max_used: ColorId,
                examined: &mut u64,
                visit: &mut impl FnMut(&[ColorId]),
            ) {
                if pos == word.len() {
                    *examined += 1;
                    visit(word);
                    return;
                }
                for v in 0..=max_used {
                    word[pos] = v;
                    rec(word, pos + 1, max_used.max(v + 1), examined, visit);
                }
            }
            if m == 0 {
                examined = 1;
                visit(&[], &mut seen);
            } else {
                rec(&mut word, 0, 0, &mut examined, &mut |w| visit(w, &mut seen));
            }
        }
        SurveyMode::Sample { count, seed } => {
            let table = rgs_count_table(m);
            let mut rng = SplitMix64::new(seed);
            let mut word = vec![0 as ColorId; m];
            for _ in 0..count {
                sample_rgs(&table, &mut rng, &mut word);
                examined += 1;
                visit(&word, &mut seen);
            }
        }
    }
    let mut tallies: BTreeMap<String, u64> = BTreeMap::new();
    for (classification, _) in seen.values() {
        *tallies.entry(classification.kind.name().to_owned()).or_insert(0) += 1;
    }
    let classes: Vec<SurveyClass> = seen
        .into_iter()
        .map(|(key, (classification, count))| SurveyClass {
            key: key.to_string(),
            count,
            classification,
        })
        .collect();
    let (mode_name, note) = match mode {
        SurveyMode::Exhaustive => (
            "exhaustive".to_owned(),
            "every partition of the pair set into colors, deduplicated up to isomorphism".to_owned(),
        ),
        SurveyMode::Sample { count, seed } => (
            format!("sample({count}, seed={seed})"),
            "samples are uniform over labeled colorings (restricted-growth strings), not over isomorphism classes"
                .to_owned(),
        ),
    };
    Ok(SurveyReport { n, mode: mode_name, examined, note, tallies, classes })
}

/// `table[i][b]`: completions of a restricted-growth string from position `i`
/// with `b` values already in use.
fn rgs_count_table(m: usize) -> Vec<Vec<u128>> {
    let mut table = vec![vec![0u128; m + 2]; m + 1];
    for b in 0..=(m + 1) {
        table[m][b] = 1;
    }
    for i in (0..m).rev() {
        for b in 0..=(m.min(i + 1)) {
            table[i][b] = (b as u128) * table[i + 1][b] + table[i + 1][b + 1];
        }
    }
    table
}

fn sample_rgs(table: &[Vec<u128>], rng: &mut SplitMix64, word: &mut [ColorId]) {
    let m = word.len();
    let mut b = 0usize;
    for i in 0..m {
        let total = table[i][b];
        debug_assert!(total > 0 && total <= u128::from(u64::MAX));
        let r = u128::from(rng.below(total as u64));
        let cont = table[i + 1][b];
        if r < (b as u128) * cont {
            word[i] = (r / cont) as ColorId;
        } else {
            word[i] = b as ColorId;
            b += 1;
        }
    }
}

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so sampled
/// surveys are byte-stable across platforms and releases.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, bound)`, rejection-sampled to avoid modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let limit = u64::MAX - (u64::MAX % bound);
        loop {
            let r = self.next_u64();
            if r < limit {
                return r % bound;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Graph;

    #[test]
    fn classify_spot_checks() {
        // Square -> Fuss-Catalan(2,2).
        let sq = classify(&ColoredSpace::square());
        assert_eq!(sq.kind, ClassKind::FussCatalan { m: 2, s: 2 });

        // Rectangle -> commutative with the Klein four-group.
        let rect = classify(&ColoredSpace::rectangle());
        match &rect.kind {
            ClassKind::Commutative { group: Some(g) } => assert_eq!(g.order, 4),
            other => panic!("rectangle misclassified: {other:?}"),
        }

        // Simplexes of size >= 4 are Temperley-Lieb.
        for n in 4..=7 {
            assert_eq!(
                classify(&ColoredSpace::simplex(n)).kind,
                ClassKind::TemperleyLieb { n }
            );
        }

        // A C3 ⊔ C4 color certifies non-transitivity.
        let bike = classify(&ColoredSpace::from_graph(&Graph::disjoint_cycles(&[3, 4])));
        assert!(matches!(bike.kind, ClassKind::NonTransitive { .. }));

        // Up to 3 points: always commutative.
        for n in 1..=3 {
            assert!(matches!(
                classify(&ColoredSpace::simplex(n)).kind,
                ClassKind::Commutative { .. }
            ));
        }
        // Even an inhomogeneous 3-point space.
        let isoceles = ColoredSpace::from_color_word(3, &[0, 0, 1]);
        assert!(matches!(classify(&isoceles).kind, ClassKind::Commutative { .. }));
    }

    #[test]
    fn classify_trace_replays() {
        for s in [
            ColoredSpace::square(),
            ColoredSpace::rectangle(),
            ColoredSpace::simplex(5),
            ColoredSpace::from_graph(&Graph::disjoint_cycles(&[3, 4])),
        ] {
            let c = classify(&s);
            assert!(replay_check(&s, &c));
            // Every witness in the trace revalidates against the space.
            for entry in &c.trace {
                if let Some(w) = &entry.witness {
                    assert!(w.revalidate(&s), "stale witness for {:?}", entry.rule);
                }
            }
        }
    }

    #[test]
    fn classify_is_isomorphism_invariant_on_samples() {
        let spaces = [
            ColoredSpace::square(),
            ColoredSpace::rectangle(),
            crate::corpus::six_point_three_color_space(),
        ];
        for s in &spaces {
            let kind = classify(s).kind;
            let n = s.size();
            crate::perm::for_each_permutation(n.min(4), |base| {
                let perm: Vec<usize> = (0..n).map(|i| if i < base.len() { base[i] } else { i }).collect();
                let relabeled = s.relabel(&perm);
                assert_eq!(classify(&relabeled).kind.name(), kind.name());
            });
        }
    }

    #[test]
    fn undetermined_only_beyond_seven_points() {
        // The cube space (4-regular color on 8 points; here 2 squares as one
        // color) is beyond the proven range and must come out Undetermined,
        // not misclassified.
        let two_squares = ColoredSpace::from_graph(&Graph::disjoint_cycles(&[4, 4]));
        let c = classify(&two_squares);
        assert!(matches!(c.kind, ClassKind::Undetermined { .. }));
        assert!(c.trace.iter().any(|e| e.outcome == TraceOutcome::Skipped));
    }

    #[test]
    fn census_counts_match_up_to_six() {
        let levels = enumerate_vertex_transitive(6).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 2, 4, 3, 8]);
    }

    #[test]
    fn census_n5_is_empty_complete_and_cycle() {
        let levels = enumerate_vertex_transitive(5).unwrap();
        let expected: Vec<CanonicalKey> = [Graph::empty(5), Graph::complete(5), Graph::cycle(5)]
            .iter()
            .map(|g| g.canonical_key().unwrap())
            .collect();
        let got: Vec<CanonicalKey> = levels[4].iter().map(|g| g.canonical_key().unwrap()).collect();
        for key in &expected {
            assert!(got.contains(key));
        }
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn census_closed_under_complement() {
        for level in enumerate_vertex_transitive(6).unwrap() {
            let keys: Vec<CanonicalKey> = level.iter().map(|g| g.canonical_key().unwrap()).collect();
            for g in &level {
                let comp_key = g.complement().canonical_key().unwrap();
                assert!(keys.contains(&comp_key));
            }
        }
    }

    #[test]
    fn census_outputs_are_vertex_transitive() {
        for level in enumerate_vertex_transitive(6).unwrap() {
            for g in &level {
                assert!(perm::is_vertex_transitive(g).unwrap());
            }
        }
    }

    #[test]
    fn survey_n4_exhaustive() {
        let report = survey(4, SurveyMode::Exhaustive).unwrap();
        assert_eq!(report.examined, 203, "Bell(6) labeled colorings");
        assert_eq!(report.undetermined_classes(), 0);
        assert_eq!(report.tallies.get("temperley_lieb"), Some(&1), "only K4");
        assert_eq!(report.tallies.get("fuss_catalan"), Some(&1), "only the square");
    }

    #[test]
    fn survey_n5_exhaustive() {
        let report = survey(5, SurveyMode::Exhaustive).unwrap();
        assert_eq!(report.examined, 115_975, "Bell(10) labeled colorings");
        assert_eq!(report.undetermined_classes(), 0);
        assert_eq!(report.tallies.get("fuss_catalan"), None, "5 is not a product of blocks");
        assert_eq!(report.tallies.get("temperley_lieb"), Some(&1));
    }

    #[test]
    fn survey_sampling_is_deterministic_and_total() {
        let a = survey(6, SurveyMode::Sample { count: 500, seed: 1 }).unwrap();
        let b = survey(6, SurveyMode::Sample { count: 500, seed: 1 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.undetermined_classes(), 0);
        let c = survey(6, SurveyMode::Sample { count: 500, seed: 2 }).unwrap();
        assert_ne!(a.classes, c.classes, "different seeds draw different colorings");
    }

    #[test]
    fn survey_bounds() {
        assert!(matches!(
            survey(6, SurveyMode::Exhaustive),
            Err(ClassifyError::ExhaustiveBound(6))
        ));
        assert!(matches!(
            survey(8, SurveyMode::Sample { count: 1, seed: 0 }),
            Err(ClassifyError::SampleBound(8))
        ));
    }

    #[test]
    fn rgs_table_counts_bell_numbers() {
        // Bell numbers via the count table: total strings = table[0][0].
        let bells = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (m, &bell) in bells.iter().enumerate() {
            let t = rgs_count_table(m);
            assert_eq!(t[0][0], bell, "Bell({m})");
        }
    }

    #[test]
    fn rgs_sampler_hits_every_string_for_tiny_m() {
        // m = 3 has Bell(3) = 5 strings; a modest sample should see them all.
        let table = rgs_count_table(3);
        let mut rng = SplitMix64::new(7);
        let mut seen = std::collections::BTreeSet::new();
        let mut word = vec![0 as ColorId; 3];
        for _ in 0..200 {
            sample_rgs(&table, &mut rng, &mut word);
            seen.insert(word.clone());
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn classification_json_shape_is_stable() {
        // The serialized form is an external interface: kind and params under
        // fixed snake_case names, trace entries with rule/outcome/witness.
        let c = classify(&ColoredSpace::square());
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["kind"], "fuss_catalan");
        assert_eq!(json["params"]["m"], 2);
        assert_eq!(json["params"]["s"], 2);
        assert_eq!(json["trace"][0]["rule"], "triangle");
        assert_eq!(json["trace"][0]["outcome"], "not_matched");

        let c = classify(&ColoredSpace::simplex(5));
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["kind"], "temperley_lieb");
        assert_eq!(json["params"]["n"], 5);

        let c = classify(&ColoredSpace::rectangle());
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["kind"], "commutative");
        assert_eq!(json["params"]["group"]["order"], 4);
    }

    #[test]
    fn decoloration_propagation_spot_check() {
        use std::collections::BTreeSet;
        // Rectangle: decolorations are the square (3 ways) and the simplex.
        let rect = ColoredSpace::rectangle();
        let square_like = rect.decolor(&[BTreeSet::from([0, 2]), BTreeSet::from([1])]);
        assert_eq!(classify(&square_like).kind, ClassKind::FussCatalan { m: 2, s: 2 });
        let simplex = rect.decolor(&[BTreeSet::from([0, 1, 2])]);
        assert_eq!(classify(&simplex).kind, ClassKind::TemperleyLieb { n: 4 });
    }
}
