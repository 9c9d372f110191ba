//! Geometric rule detectors over color components.
//!
//! Each detector is a pure predicate on a [`ColoredSpace`] and returns a
//! [`RuleWitness`] that can be re-validated independently of the search that
//! produced it: the witness stores the colors and point labeling exhibiting
//! the pattern, and [`RuleWitness::revalidate`] replays the pattern check.

use crate::perm::{self, PermError};
use crate::space::{ColorId, ColoredSpace};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("rule needs at least {min} points, space has {n}")]
    TooSmall { n: usize, min: usize },
    #[error("rule needs an even point count, space has {n}")]
    OddSize { n: usize },
    #[error("rule is only proven for at most {max} points, space has {n}")]
    TooLarge { n: usize, max: usize },
}

/// Which pattern a witness certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleKind {
    /// A color with two vertices of different degree (magic rule failure).
    IrregularColor,
    /// A color that is two cycles of different lengths.
    UnbalancedBicycle,
    /// A color subset whose merge is a single spanning cycle.
    HamiltonianMerge,
    /// Two matching colors alternating around a spanning cycle.
    Star,
    /// A two-color space whose first color is m disjoint complete blocks.
    Duplex,
    /// A color component that is not vertex-transitive.
    NonTransitiveColor,
}

/// Audit record for a rule firing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleWitness {
    pub rule: RuleKind,
    /// Colors involved, ascending.
    pub colors: Vec<ColorId>,
    /// Point labeling exhibiting the pattern, when one exists.
    pub labeling: Option<Vec<usize>>,
    pub detail: String,
}

impl RuleWitness {
    /// Re-checks the claimed pattern against the space.
    pub fn revalidate(&self, s: &ColoredSpace) -> bool {
        if self.colors.iter().any(|&c| c >= s.num_colors()) {
            return false;
        }
        let component = |c: ColorId| s.component(c).expect("color id checked above");
        match self.rule {
            RuleKind::IrregularColor => {
                let Some(lab) = &self.labeling else { return false };
                if lab.len() != 2 || self.colors.len() != 1 {
                    return false;
                }
                let g = component(self.colors[0]);
                g.degree(lab[0]) != g.degree(lab[1])
            }
            RuleKind::UnbalancedBicycle => {
                if self.colors.len() != 1 {
                    return false;
                }
                let g = component(self.colors[0]);
                if !g.degrees().iter().all(|&d| d == 2) {
                    return false;
                }
                let comps = g.components();
                comps.len() == 2 && comps[0].len() != comps[1].len()
            }
            RuleKind::HamiltonianMerge => {
                let Some(cycle) = &self.labeling else { return false };
                if cycle.len() != s.size() || !is_permutation(cycle, s.size()) {
                    return false;
                }
                let subset: BTreeSet<ColorId> = self.colors.iter().copied().collect();
                let Ok(merged) = s.merge_colors(&subset) else { return false };
                if !merged.degrees().iter().all(|&d| d == 2) {
                    return false;
                }
                (0..cycle.len()).all(|t| merged.edge(cycle[t], cycle[(t + 1) % cycle.len()]))
            }
            RuleKind::Star => {
                let Some(cycle) = &self.labeling else { return false };
                let n = s.size();
                if self.colors.len() != 2 || cycle.len() != n || n % 2 != 0 || !is_permutation(cycle, n) {
                    return false;
                }
                let (a, b) = (self.colors[0], self.colors[1]);
                let ga = component(a);
                let gb = component(b);
                if ga.degrees().iter().any(|&d| d != 1) || gb.degrees().iter().any(|&d| d != 1) {
                    return false;
                }
                (0..n).all(|t| {
                    let (u, v) = (cycle[t], cycle[(t + 1) % n]);
                    let want = if t % 2 == 0 { a } else { b };
                    s.color(u, v) == want
                })
            }
            RuleKind::Duplex => {
                let Some(order) = &self.labeling else { return false };
                let n = s.size();
                if s.num_colors() != 2 || self.colors.len() != 1 || !is_permutation(order, n) {
                    return false;
                }
                let within = self.colors[0];
                let g = component(within);
                let blocks = g.components();
                if blocks.len() < 2 {
                    return false;
                }
                let s_ = blocks[0].len();
                if s_ < 2 || blocks.iter().any(|b| b.len() != s_) {
                    return false;
                }
                // Within-color pairs are exactly the same-block pairs of the
                // stated block order.
                let block_of: Vec<usize> = {
                    let mut b = vec![0; n];
                    for (i, &v) in order.iter().enumerate() {
                        b[v] = i / s_;
                    }
                    b
                };
                (0..n).all(|i| {
                    ((i + 1)..n).all(|j| (s.color(i, j) == within) == (block_of[i] == block_of[j]))
                })
            }
            RuleKind::NonTransitiveColor => {
                if self.colors.len() != 1 {
                    return false;
                }
                let g = component(self.colors[0]);
                matches!(perm::is_vertex_transitive(&g), Ok(false))
            }
        }
    }
}

fn is_permutation(lab: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    lab.len() == n
        && lab.iter().all(|&v| {
            if v >= n || seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        })
}

/// Magic rule: every color component must be regular (same number of edges at
/// every vertex). Returns `None` on pass, a witness naming an irregular color
/// and two vertices of different degree on failure.
pub fn magic_rule_check(s: &ColoredSpace) -> Option<RuleWitness> {
    for (c, g) in s.color_decomposition() {
        let degs = g.degrees();
        if let Some(v) = (1..degs.len()).find(|&v| degs[v] != degs[0]) {
            return Some(RuleWitness {
                rule: RuleKind::IrregularColor,
                colors: vec![c],
                labeling: Some(vec![0, v]),
                detail: format!(
                    "color {c} has degree {} at point 0 but {} at point {v}",
                    degs[0], degs[v]
                ),
            });
        }
    }
    None
}

/// Bicycle rule: a color that is a disjoint union of two cycles of different
/// lengths certifies non-transitivity.
pub fn find_unbalanced_bicycle(s: &ColoredSpace) -> Option<RuleWitness> {
    for (c, g) in s.color_decomposition() {
        if !g.degrees().iter().all(|&d| d == 2) {
            continue;
        }
        let comps = g.components();
        if comps.len() == 2 && comps[0].len() != comps[1].len() {
            let mut labeling = cycle_order_of(&g, &comps[0]);
            labeling.extend(cycle_order_of(&g, &comps[1]));
            return Some(RuleWitness {
                rule: RuleKind::UnbalancedBicycle,
                colors: vec![c],
                labeling: Some(labeling),
                detail: format!("color {c} is C{} ⊔ C{}", comps[0].len(), comps[1].len()),
            });
        }
    }
    None
}

/// Walks a 2-regular component into cycle order starting at its least vertex.
fn cycle_order_of(g: &crate::space::Graph, comp: &[usize]) -> Vec<usize> {
    let start = comp[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (0..g.size()).find(|&u| g.edge(start, u)).expect("2-regular");
    while cur != start {
        order.push(cur);
        let next = (0..g.size())
            .find(|&u| u != prev && g.edge(cur, u))
            .expect("2-regular");
        prev = cur;
        cur = next;
    }
    order
}

/// Cycle rule through decoloration: searches all nonempty color subsets, in
/// lexicographic order, for one whose merged component is a single spanning
/// cycle. A cyclic color is the singleton case.
pub fn find_hamiltonian_merge(s: &ColoredSpace) -> Result<Option<RuleWitness>, RuleError> {
    let n = s.size();
    if n < 5 {
        return Err(RuleError::TooSmall { n, min: 5 });
    }
    let colors = s.num_colors();
    let mut degrees = vec![0usize; n];
    let decomposition: Vec<(ColorId, Vec<(usize, usize)>)> = s
        .color_decomposition()
        .into_iter()
        .map(|(c, g)| (c, g.edges()))
        .collect();

    // Depth-first over subsets in lexicographic order (each subset visited
    // before its lexicographic successors); a vertex of degree > 2 prunes the
    // whole superset branch.
    fn dfs(
        s: &ColoredSpace,
        decomposition: &[(ColorId, Vec<(usize, usize)>)],
        colors: u16,
        from: u16,
        chosen: &mut Vec<ColorId>,
        degrees: &mut Vec<usize>,
    ) -> Option<RuleWitness> {
        if !chosen.is_empty() && degrees.iter().all(|&d| d == 2) {
            let subset: BTreeSet<ColorId> = chosen.iter().copied().collect();
            let merged = s.merge_colors(&subset).expect("chosen colors are valid");
            if let Some(cycle) = merged.hamiltonian_cycle_order() {
                return Some(RuleWitness {
                    rule: RuleKind::HamiltonianMerge,
                    colors: chosen.clone(),
                    labeling: Some(cycle),
                    detail: format!("colors {chosen:?} merge to a spanning {}-cycle", s.size()),
                });
            }
        }
        for c in from..colors {
            let edges = &decomposition[c as usize].1;
            for &(i, j) in edges {
                degrees[i] += 1;
                degrees[j] += 1;
            }
            let overfull = degrees.iter().any(|&d| d > 2);
            if !overfull {
                chosen.push(c);
                if let Some(w) = dfs(s, decomposition, colors, c + 1, chosen, degrees) {
                    return Some(w);
                }
                chosen.pop();
            }
            for &(i, j) in edges {
                degrees[i] -= 1;
                degrees[j] -= 1;
            }
        }
        None
    }
    Ok(dfs(s, &decomposition, colors, 0, &mut Vec::new(), &mut degrees))
}

/// Star rule: two matching colors whose union is one spanning cycle that
/// alternates between them. The witness labeling lists the cycle so that
/// even steps carry the first color.
pub fn find_star(s: &ColoredSpace) -> Result<Option<RuleWitness>, RuleError> {
    let n = s.size();
    if n % 2 != 0 {
        return Err(RuleError::OddSize { n });
    }
    if n < 4 {
        return Err(RuleError::TooSmall { n, min: 4 });
    }
    let decomposition = s.color_decomposition();
    let matchings: Vec<&(ColorId, crate::space::Graph)> = decomposition
        .iter()
        .filter(|(_, g)| g.degrees().iter().all(|&d| d == 1))
        .collect();
    for ai in 0..matchings.len() {
        for bi in (ai + 1)..matchings.len() {
            let (a, ga) = (matchings[ai].0, &matchings[ai].1);
            let (b, gb) = (matchings[bi].0, &matchings[bi].1);
            let mut union = ga.clone();
            for (i, j) in gb.edges() {
                union.set_edge(i, j, true);
            }
            if let Some(cycle) = union.hamiltonian_cycle_order() {
                // Rotate so the first step uses color a (disjoint perfect
                // matchings force alternation around the cycle).
                let cycle = if s.color(cycle[0], cycle[1]) == a {
                    cycle
                } else {
                    let mut c = cycle;
                    c.rotate_left(1);
                    c
                };
                return Ok(Some(RuleWitness {
                    rule: RuleKind::Star,
                    colors: vec![a, b],
                    labeling: Some(cycle),
                    detail: format!("matching colors {a} and {b} alternate around a {n}-cycle"),
                }));
            }
        }
    }
    Ok(None)
}

/// Duplex rule: the space has exactly two colors and one of them is a
/// disjoint union of `m >= 2` complete blocks of equal size `s >= 2`; the
/// other color is then the complete multipartite complement.
pub fn find_duplex(s: &ColoredSpace) -> Option<(usize, usize, RuleWitness)> {
    if s.num_colors() != 2 {
        return None;
    }
    for (c, g) in s.color_decomposition() {
        let blocks = g.components();
        if blocks.len() < 2 {
            continue;
        }
        let size = blocks[0].len();
        if size < 2 || blocks.iter().any(|b| b.len() != size) {
            continue;
        }
        let all_complete = blocks.iter().all(|b| {
            b.iter()
                .enumerate()
                .all(|(x, &i)| b[x + 1..].iter().all(|&j| g.edge(i, j)))
        });
        if !all_complete {
            continue;
        }
        let order: Vec<usize> = blocks.iter().flatten().copied().collect();
        let m = blocks.len();
        return Some((
            m,
            size,
            RuleWitness {
                rule: RuleKind::Duplex,
                colors: vec![c],
                labeling: Some(order),
                detail: format!("color {c} is {m} complete blocks of size {size}"),
            },
        ));
    }
    None
}

/// Census check: on at most 7 points, every color component of a homogeneous
/// space must be vertex-transitive. Returns `None` on pass.
pub fn components_vt_check(s: &ColoredSpace) -> Result<Option<RuleWitness>, RuleError> {
    let n = s.size();
    if n > 7 {
        return Err(RuleError::TooLarge { n, max: 7 });
    }
    for (c, g) in s.color_decomposition() {
        let vt = perm::is_vertex_transitive(&g).map_err(|e| match e {
            PermError::TooLarge { n, .. } => RuleError::TooLarge { n, max: 7 },
            PermError::ResourceBound(_) => unreachable!("no tuple bound in play"),
        })?;
        if !vt {
            return Ok(Some(RuleWitness {
                rule: RuleKind::NonTransitiveColor,
                colors: vec![c],
                labeling: None,
                detail: format!("color {c} is not vertex-transitive"),
            }));
        }
    }
    Ok(None)
}
