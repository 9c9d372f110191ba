//! Exact verification of the matrix identities behind the classifier.
//!
//! The commutative case of a quantum symmetry is an ordinary group action,
//! and there every axiom is decidable by finite set arithmetic: the
//! coefficients of the coaction are subsets of the group (the projections of
//! the function algebra), the magic biunitary condition is a partition
//! condition on those subsets, and metric preservation is an entrywise
//! identity. This module implements those checks exactly, plus the
//! block-projection identity for products of simplices. The two spectral
//! checks in [`spectral`] are the only floating-point surface of the crate.

mod spectral;
mod suites;

pub use spectral::{circulant_eigencheck, eigenspace_invariance_check, CirculantReport, EigenspaceReport};
pub use suites::{run_suite, suite_names, CheckLine, SuiteReport};

use crate::perm::{Permutation, PermutationGroup};
use crate::space::ColoredSpace;
use num_rational::Rational64;
use num_traits::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("action images must map group elements to permutations of the same set")]
    DegreeMismatch,
    #[error("action is not a homomorphism: images of {g} ∘ {h} disagree")]
    NotHomomorphism { g: String, h: String },
    #[error("matrix is over {matrix} points but the space has {space}")]
    SizeMismatch { matrix: usize, space: usize },
    #[error("space has {0} points, spectral checks support at most 9")]
    TooLarge(usize),
    #[error(transparent)]
    Space(#[from] crate::space::SpaceError),
    #[error(transparent)]
    Perm(#[from] crate::perm::PermError),
}

/// A finite group together with an action on a (possibly different) point
/// set: element `e` of the group acts as `images[e]`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: PermutationGroup,
    images: Vec<Permutation>,
    degree: usize,
}

impl GroupAction {
    /// A permutation group acting on its own points.
    pub fn natural(group: PermutationGroup) -> Self {
        let images = group.elements().to_vec();
        let degree = group.degree();
        GroupAction { group, images, degree }
    }

    /// Checks on the full composition table that `images` is a homomorphism
    /// (parallel to `group.elements()`), then wraps it.
    pub fn new(group: PermutationGroup, images: Vec<Permutation>) -> Result<Self, VerifyError> {
        if images.len() != group.order() {
            return Err(VerifyError::DegreeMismatch);
        }
        let degree = images.first().map_or(0, Permutation::degree);
        if images.iter().any(|p| p.degree() != degree) {
            return Err(VerifyError::DegreeMismatch);
        }
        let elements = group.elements();
        let index_of = |p: &Permutation| elements.binary_search(p).expect("group is closed");
        for (gi, g) in elements.iter().enumerate() {
            for (hi, h) in elements.iter().enumerate() {
                let prod = index_of(&g.compose(h));
                if images[prod] != images[gi].compose(&images[hi]) {
                    return Err(VerifyError::NotHomomorphism {
                        g: g.cycle_notation(),
                        h: h.cycle_notation(),
                    });
                }
            }
        }
        Ok(GroupAction { group, images, degree })
    }

    /// Everything acts as the identity on `degree` points.
    pub fn trivial(group: PermutationGroup, degree: usize) -> Self {
        let images = vec![Permutation::identity(degree); group.order()];
        GroupAction { group, images, degree }
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, element: usize) -> &Permutation {
        &self.images[element]
    }
}

/// The coaction coefficient matrix of a group action, with entries realized
/// as subsets of the group: entry `(j,i)` is `{g : g·i = j}`.
#[derive(Debug, Clone)]
pub struct SubsetMatrix {
    action: GroupAction,
    entries: Vec<BTreeSet<usize>>,
}

impl SubsetMatrix {
    pub fn degree(&self) -> usize {
        self.action.degree
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn entry(&self, j: usize, i: usize) -> &BTreeSet<usize> {
        &self.entries[j * self.action.degree + i]
    }
}

/// Builds the subset-valued magic matrix of an action.
pub fn action_magic_matrix(action: &GroupAction) -> SubsetMatrix {
    let n = action.degree;
    let mut entries = vec![BTreeSet::new(); n * n];
    for (e, img) in action.images.iter().enumerate() {
        for i in 0..n {
            let j = img.apply(i);
            entries[j * n + i].insert(e);
        }
    }
    SubsetMatrix { action: action.clone(), entries }
}

/// A failed partition-of-unity condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicFailure {
    /// "row" or "column".
    pub line_kind: &'static str,
    pub index: usize,
    pub detail: String,
}

/// Checks that every row and every column of the matrix is a partition of the
/// group: entries pairwise disjoint with union everything.
pub fn verify_magic_biunitary(m: &SubsetMatrix) -> Result<(), MagicFailure> {
    let n = m.degree();
    let order = m.action.group.order();
    let check_line = |cells: Vec<&BTreeSet<usize>>, kind: &'static str, index: usize| {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut total = 0;
        for (c, cell) in cells.iter().enumerate() {
            total += cell.len();
            if !cell.is_disjoint(&seen) {
                return Err(MagicFailure {
                    line_kind: kind,
                    index,
                    detail: format!("cell {c} overlaps an earlier cell"),
                });
            }
            seen.extend(cell.iter().copied());
        }
        if total != order {
            return Err(MagicFailure {
                line_kind: kind,
                index,
                detail: format!("cells cover {total} of {order} elements"),
            });
        }
        Ok(())
    };
    for j in 0..n {
        check_line((0..n).map(|i| m.entry(j, i)).collect(), "row", j)?;
    }
    for i in 0..n {
        check_line((0..n).map(|j| m.entry(j, i)).collect(), "column", i)?;
    }
    Ok(())
}

/// A group element that fails to preserve the color pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationFailure {
    pub element: String,
    pub i: usize,
    pub j: usize,
}

/// The commutative-case reading of metric preservation: for every group
/// element g and all points i, j, `d(i, g·j) = d(g⁻¹·i, j)`. Works on the
/// color pattern, so numeric values are not required.
pub fn verify_metric_commutation(
    m: &SubsetMatrix,
    s: &ColoredSpace,
) -> Result<Result<(), CommutationFailure>, VerifyError> {
    let n = s.size();
    if m.degree() != n {
        return Err(VerifyError::SizeMismatch { matrix: m.degree(), space: n });
    }
    for img in &m.action.images {
        let inv = img.inverse();
        for i in 0..n {
            for j in 0..n {
                let left = if i == img.apply(j) { None } else { Some(s.color(i, img.apply(j))) };
                let right = if inv.apply(i) == j { None } else { Some(s.color(inv.apply(i), j)) };
                if left != right {
                    return Ok(Err(CommutationFailure {
                        element: img.cycle_notation(),
                        i,
                        j,
                    }));
                }
            }
        }
    }
    Ok(Ok(()))
}

// ---------------------------------------------------------------------------
// Rational matrices and the duplex identity
// ---------------------------------------------------------------------------

/// A dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational64>,
}

impl RationalMatrix {
    pub fn zero(n: usize) -> Self {
        RationalMatrix { n, entries: vec![Rational64::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = Rational64::from_integer(1);
        }
        m
    }

    /// The matrix with 1 everywhere.
    pub fn all_ones(n: usize) -> Self {
        RationalMatrix { n, entries: vec![Rational64::from_integer(1); n * n] }
    }

    /// The block-averaging projection: entries `1/s` within consecutive
    /// blocks of size `s`, zero elsewhere.
    pub fn block_average(m: usize, s: usize) -> Self {
        let n = m * s;
        let mut out = Self::zero(n);
        let w = Rational64::new(1, s as i64);
        for i in 0..n {
            for j in 0..n {
                if i / s == j / s {
                    out[(i, j)] = w;
                }
            }
        }
        out
    }

    pub fn from_space(s: &ColoredSpace) -> Result<Self, VerifyError> {
        if s.values().is_none() {
            return Err(VerifyError::Space(crate::space::SpaceError::NoValues));
        }
        let n = s.size();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = s.distance(i, j).expect("values checked");
            }
        }
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn scale(&self, c: Rational64) -> Self {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        RationalMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> Rational64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational64;
    fn index(&self, (i, j): (usize, usize)) -> &Rational64 {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational64 {
        &mut self.entries[i * self.n + j]
    }
}

/// Where the duplex identity broke, if it did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplexFailure {
    pub check: &'static str,
    pub entry: (usize, usize),
}

/// Entrywise check of the product-of-simplices identity
/// `d = A·I + (a−A)·s·e − a·1`, together with `e² = e` and `e* = e`.
pub fn verify_duplex_identity(
    m: usize,
    s: usize,
    big_a: Rational64,
    a: Rational64,
) -> Result<Result<(), DuplexFailure>, VerifyError> {
    let space = ColoredSpace::build_simplex_product(m, s, big_a, a)?;
    let d = RationalMatrix::from_space(&space)?;
    let n = m * s;
    let ones = RationalMatrix::all_ones(n);
    let e = RationalMatrix::block_average(m, s);
    let identity = RationalMatrix::identity(n);
    let rhs = ones
        .scale(big_a)
        .add(&e.scale((a - big_a) * Rational64::from_integer(s as i64)))
        .add(&identity.scale(-a));
    for i in 0..n {
        for j in 0..n {
            if d[(i, j)] != rhs[(i, j)] {
                return Ok(Err(DuplexFailure { check: "identity", entry: (i, j) }));
            }
        }
    }
    let ee = e.mul(&e);
    for i in 0..n {
        for j in 0..n {
            if ee[(i, j)] != e[(i, j)] {
                return Ok(Err(DuplexFailure { check: "idempotent", entry: (i, j) }));
            }
        }
    }
    if !e.is_symmetric() {
        return Ok(Err(DuplexFailure { check: "self-adjoint", entry: (0, 0) }));
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::automorphism_group;
    use crate::space::Graph;

    #[test]
    fn z2_swap_magic_matrix() {
        let z2 = PermutationGroup::generated_by(2, &[Permutation::from_images(vec![1, 0])]);
        let action = GroupAction::natural(z2);
        let m = action_magic_matrix(&action);
        // Diagonal entries hold the identity, off-diagonal the swap.
        let id_index = 0; // elements are sorted, identity first
        assert!(m.entry(0, 0).contains(&id_index));
        assert_eq!(m.entry(0, 0).len(), 1);
        assert_eq!(m.entry(1, 0).len(), 1);
        assert!(!m.entry(1, 0).contains(&id_index));
        assert!(verify_magic_biunitary(&m).is_ok());
    }

    #[test]
    fn trivial_action_magic_matrix() {
        let s3 = PermutationGroup::symmetric(3);
        let order = s3.order();
        let action = GroupAction::trivial(s3, 4);
        let m = action_magic_matrix(&action);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(j, i).len(), if i == j { order } else { 0 });
            }
        }
        assert!(verify_magic_biunitary(&m).is_ok());
    }

    #[test]
    fn d4_action_magic_matrix_rows_partition() {
        let square = ColoredSpace::square();
        let d4 = automorphism_group(&square).unwrap();
        assert_eq!(d4.order(), 8);
        let m = action_magic_matrix(&GroupAction::natural(d4));
        assert!(verify_magic_biunitary(&m).is_ok());
    }

    #[test]
    fn magic_biunitarity_failure_is_reported() {
        // A non-matrix coaction: duplicate a cell by hand.
        let z2 = PermutationGroup::generated_by(2, &[Permutation::from_images(vec![1, 0])]);
        let action = GroupAction::natural(z2);
        let mut m = action_magic_matrix(&action);
        let cell = m.entry(0, 0).clone();
        m.entries[1] = cell; // row 0 now repeats a subset
        let err = verify_magic_biunitary(&m).unwrap_err();
        assert_eq!(err.line_kind, "row");
        assert_eq!(err.index, 0);
    }

    #[test]
    fn action_homomorphism_is_checked() {
        let z2 = PermutationGroup::generated_by(2, &[Permutation::from_images(vec![1, 0])]);
        // Sending both elements to a transposition is not a homomorphism on 3
        // points (swap ∘ swap must be the identity).
        let bad = vec![
            Permutation::from_images(vec![1, 0, 2]),
            Permutation::from_images(vec![0, 2, 1]),
        ];
        assert!(matches!(
            GroupAction::new(z2.clone(), bad),
            Err(VerifyError::NotHomomorphism { .. })
        ));
        // The sign action of Z2 on 3 points is fine.
        let good = vec![
            Permutation::identity(3),
            Permutation::from_images(vec![1, 0, 2]),
        ];
        assert!(GroupAction::new(z2, good).is_ok());
    }

    #[test]
    fn commutation_examples() {
        let square = ColoredSpace::square();
        // Rotations of the square are isometries.
        let r = Permutation::from_images(vec![1, 0, 3, 2]);
        let rot = PermutationGroup::generated_by(4, &[r]);
        let m = action_magic_matrix(&GroupAction::natural(rot));
        assert!(verify_metric_commutation(&m, &square).unwrap().is_ok());

        // Swapping two adjacent rectangle corners breaks the side colors.
        let rect = ColoredSpace::rectangle();
        let t = Permutation::from_images(vec![1, 0, 2, 3]);
        let bad = PermutationGroup::generated_by(4, &[t]);
        let m = action_magic_matrix(&GroupAction::natural(bad));
        let failure = verify_metric_commutation(&m, &rect).unwrap().unwrap_err();
        assert_eq!(failure.element, "(0 1)");

        // Anything preserves the simplex.
        let simplex = ColoredSpace::simplex(4);
        let s4 = PermutationGroup::symmetric(4);
        let m = action_magic_matrix(&GroupAction::natural(s4));
        assert!(verify_metric_commutation(&m, &simplex).unwrap().is_ok());
    }

    #[test]
    fn commutation_iff_every_element_is_an_automorphism() {
        let spaces = [
            ColoredSpace::rectangle(),
            ColoredSpace::square(),
            ColoredSpace::from_graph(&Graph::cycle(5)),
        ];
        for s in &spaces {
            let n = s.size();
            let aut = automorphism_group(s).unwrap();
            for gens in [
                vec![Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())],
                vec![Permutation::from_images(vec![1, 0, 2, 3].into_iter().chain(4..n).collect())],
                aut.generators().to_vec(),
            ] {
                let g = PermutationGroup::generated_by(n, &gens);
                let all_isometries = g.elements().iter().all(|p| aut.contains(p));
                let m = action_magic_matrix(&GroupAction::natural(g));
                let passes = verify_metric_commutation(&m, s).unwrap().is_ok();
                assert_eq!(passes, all_isometries);
            }
        }
    }

    #[test]
    fn duplex_identity_examples() {
        let one = Rational64::from_integer(1);
        let three_halves = Rational64::new(3, 2);
        assert!(verify_duplex_identity(2, 2, one, three_halves).unwrap().is_ok());
        assert!(verify_duplex_identity(3, 2, one, three_halves).unwrap().is_ok());
        // e for (2,3) has trace 2 = number of blocks.
        let e = RationalMatrix::block_average(2, 3);
        assert_eq!(e.trace(), Rational64::from_integer(2));
        // Invalid parameters propagate as errors.
        assert!(verify_duplex_identity(2, 2, one, one).is_err());
    }

    #[test]
    fn powered_matrices_recover_color_components() {
        // The entrywise k-th powers d^(k) = Σ aᵏ·d_a determine the components
        // through Vandermonde inversion; check against color_decomposition.
        let s = ColoredSpace::rectangle();
        let values = s.values().unwrap().to_vec();
        let c = values.len();
        let n = s.size();
        // Solve V·x = y for each pair, where V[k][t] = values[t]^(k+1).
        let mut v = vec![vec![Rational64::zero(); c]; c];
        for (k, row) in v.iter_mut().enumerate() {
            for (t, val) in values.iter().enumerate() {
                let mut p = Rational64::from_integer(1);
                for _ in 0..=k {
                    p *= val;
                }
                row[t] = p;
            }
        }
        let decomposition = s.color_decomposition();
        for i in 0..n {
            for j in (i + 1)..n {
                let d = s.distance(i, j).unwrap();
                let y: Vec<Rational64> = (1..=c)
                    .map(|k| {
                        let mut p = Rational64::from_integer(1);
                        for _ in 0..k {
                            p *= d;
                        }
                        p
                    })
                    .collect();
                let x = solve_rational(&v, &y);
                for (t, coeff) in x.iter().enumerate() {
                    let expected = if decomposition[t].1.edge(i, j) { 1 } else { 0 };
                    assert_eq!(*coeff, Rational64::from_integer(expected));
                }
            }
        }
    }

    /// Tiny exact linear solve for the Vandermonde test.
    fn solve_rational(a: &[Vec<Rational64>], b: &[Rational64]) -> Vec<Rational64> {
        let n = b.len();
        let mut m: Vec<Vec<Rational64>> = a
            .iter()
            .zip(b)
            .map(|(row, &rhs)| {
                let mut r = row.clone();
                r.push(rhs);
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible");
            m.swap(col, pivot);
            let p = m[col][col];
            for c in col..=n {
                m[col][c] /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in col..=n {
                        let sub = f * m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        (0..n).map(|r| m[r][n]).collect()
    }
}
