//! Named verification suites behind the CLI `verify` command.

use super::{
    action_magic_matrix, circulant_eigencheck, eigenspace_invariance_check,
    verify_duplex_identity, verify_magic_biunitary, verify_metric_commutation, GroupAction,
};
use crate::corpus;
use crate::perm::{automorphism_group, Permutation, PermutationGroup};
use crate::space::ColoredSpace;
use num_rational::Rational64;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<CheckLine>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport { suite: suite.to_owned(), passed, checks }
    }
}

pub fn suite_names() -> &'static [&'static str] {
    &["magic", "commutation", "duplex", "circulant", "eigenspace"]
}

/// Runs one suite by name.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    match name {
        "magic" => Some(suite_magic()),
        "commutation" => Some(suite_commutation()),
        "duplex" => Some(suite_duplex()),
        "circulant" => Some(suite_circulant()),
        "eigenspace" => Some(suite_eigenspace()),
        _ => None,
    }
}

fn action_corpus() -> Vec<(String, GroupAction)> {
    let mut out: Vec<(String, GroupAction)> = Vec::new();
    for (name, space) in corpus::homogeneous_spaces(6) {
        let group = automorphism_group(&space).expect("corpus spaces are small");
        out.push((format!("Aut[{name}]"), GroupAction::natural(group)));
    }
    // A few non-automorphism-group actions.
    let z2 = PermutationGroup::generated_by(2, &[Permutation::from_images(vec![1, 0])]);
    out.push(("Z2 swapping 2 points".into(), GroupAction::natural(z2.clone())));
    out.push(("trivial Z2 action on 4 points".into(), GroupAction::trivial(z2, 4)));
    let rot = PermutationGroup::generated_by(4, &[Permutation::from_images(vec![2, 3, 1, 0])]);
    out.push(("square rotations".into(), GroupAction::natural(rot)));
    out
}

/// Every group-action magic matrix in the corpus is a magic biunitary.
pub fn suite_magic() -> SuiteReport {
    let checks = action_corpus()
        .into_iter()
        .map(|(name, action)| {
            let m = action_magic_matrix(&action);
            match verify_magic_biunitary(&m) {
                Ok(()) => CheckLine {
                    name,
                    passed: true,
                    detail: format!("order {} on {} points", action.group().order(), action.degree()),
                },
                Err(f) => CheckLine {
                    name,
                    passed: false,
                    detail: format!("{} {}: {}", f.line_kind, f.index, f.detail),
                },
            }
        })
        .collect();
    SuiteReport::new("magic", checks)
}

/// Commutation holds exactly when every element of the acting group is an
/// isometry; checked in both directions against the automorphism group.
pub fn suite_commutation() -> SuiteReport {
    let mut checks = Vec::new();
    let mut spaces: Vec<(String, ColoredSpace)> = corpus::homogeneous_spaces(6);
    spaces.push(("rectangle".into(), ColoredSpace::rectangle()));
    spaces.push(("three-color hexagon".into(), corpus::six_point_three_color_space()));
    for (name, s) in &spaces {
        let n = s.size();
        let aut = automorphism_group(s).expect("corpus spaces are small");
        let candidates: Vec<(String, PermutationGroup)> = vec![
            (format!("Aut[{name}]"), aut.clone()),
            (
                format!("S_{n} on {name}"),
                PermutationGroup::symmetric(n),
            ),
            (
                format!("cyclic shift on {name}"),
                PermutationGroup::generated_by(
                    n,
                    &[Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())],
                ),
            ),
        ];
        for (gname, group) in candidates {
            let all_isometries = group.elements().iter().all(|p| aut.contains(p));
            let m = action_magic_matrix(&GroupAction::natural(group));
            let outcome = verify_metric_commutation(&m, s).expect("sizes match");
            let passed = outcome.is_ok() == all_isometries;
            let detail = match (&outcome, all_isometries) {
                (Ok(()), true) => "commutes, and every element is an isometry".to_owned(),
                (Err(f), false) => {
                    format!("fails at element {} ({}, {}), which is not an isometry", f.element, f.i, f.j)
                }
                (Ok(()), false) => "commutes but contains a non-isometry".to_owned(),
                (Err(f), true) => format!("isometry group fails commutation at {}", f.element),
            };
            checks.push(CheckLine { name: gname, passed, detail });
        }
    }
    SuiteReport::new("commutation", checks)
}

/// The product-of-simplices identity over the full small parameter grid plus
/// a seeded random sweep of valid (A, a) pairs.
pub fn suite_duplex() -> SuiteReport {
    let mut checks = Vec::new();
    let mut params = vec![
        (Rational64::from_integer(1), Rational64::new(3, 2)),
        (Rational64::from_integer(1), Rational64::from_integer(2)),
        (Rational64::from_integer(2), Rational64::from_integer(1)),
        (Rational64::new(3, 2), Rational64::new(1, 2)),
        (Rational64::new(5, 2), Rational64::from_integer(4)),
        (Rational64::from_integer(3), Rational64::new(7, 3)),
    ];
    let mut rng = crate::classify::SplitMix64::new(0xD0_B1E5);
    while params.len() < 16 {
        let big_a = Rational64::new(1 + (rng.next_u64() % 12) as i64, 1 + (rng.next_u64() % 6) as i64);
        let a = Rational64::new(1 + (rng.next_u64() % 12) as i64, 1 + (rng.next_u64() % 6) as i64);
        if big_a != a && big_a * 2 >= a {
            params.push((big_a, a));
        }
    }
    for m in 2..=3usize {
        for s in 2..=3usize {
            for &(big_a, a) in &params {
                if big_a == a || big_a * 2 < a {
                    continue;
                }
                let name = format!("m={m} s={s} A={big_a} a={a}");
                let line = match verify_duplex_identity(m, s, big_a, a) {
                    Ok(Ok(())) => CheckLine {
                        name,
                        passed: true,
                        detail: "d = A·I + (a-A)·s·e - a·1, e² = e, e* = e".into(),
                    },
                    Ok(Err(f)) => CheckLine {
                        name,
                        passed: false,
                        detail: format!("{} fails at entry {:?}", f.check, f.entry),
                    },
                    Err(e) => CheckLine { name, passed: false, detail: e.to_string() },
                };
                checks.push(line);
            }
        }
    }
    SuiteReport::new("duplex", checks)
}

/// Circulant eigenvector identities for 3 <= n <= 12.
pub fn suite_circulant() -> SuiteReport {
    let checks = (3..=12)
        .map(|n| {
            let report = circulant_eigencheck(n);
            CheckLine {
                name: format!("C{n}"),
                passed: report.passed(),
                detail: format!(
                    "max residual {:.2e}, orthogonality defect {:.2e}",
                    report.max_residual, report.max_orthogonality_defect
                ),
            }
        })
        .collect();
    SuiteReport::new("circulant", checks)
}

/// Eigenspace projections commute with every automorphism on the full
/// n <= 6 homogeneous-space corpus.
pub fn suite_eigenspace() -> SuiteReport {
    let checks = corpus::homogeneous_spaces(6)
        .into_iter()
        .map(|(name, s)| match eigenspace_invariance_check(&s) {
            Ok(report) => CheckLine {
                name,
                passed: report.passed(),
                detail: format!(
                    "max residual {:.2e} over {} automorphisms",
                    report.max_residual(),
                    report.group_order
                ),
            },
            Err(e) => CheckLine { name, passed: false, detail: e.to_string() },
        })
        .collect();
    SuiteReport::new("eigenspace", checks)
}
