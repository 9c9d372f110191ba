//! Hom-space dimensions of the diagram categories as exact Gram ranks.
//!
//! The pairing of two 0→k diagrams is the loop scalar of `involute(D)∘D'`,
//! an element of the field generated by the loop weights. The rank of the
//! Gram matrix over that field is the dimension of the diagram span in the
//! semisimple completion; at degenerate parameters this is strictly below
//! the diagram count, which is exactly what the cross-checks against
//! classical orbit counts exercise.

use super::{compose, enumerate_fc, enumerate_tl, involute, LoopWeights, PairingDiagram, QuadScalar};
use super::{DiagramError, WeightedDiagram};
use serde::Serialize;

/// Which diagram category a dimension count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DiagramFamily {
    /// Temperley-Lieb at δ² = n.
    Tl { n: u64 },
    /// Fuss-Catalan at δ_Y² = m, δ_Z² = s.
    Fc { m: u64, s: u64 },
}

impl DiagramFamily {
    fn check_bounds(&self, k: u32) -> Result<(), DiagramError> {
        match *self {
            DiagramFamily::Tl { n } => {
                if n < 1 {
                    return Err(DiagramError::Bound("TL parameter must be at least 1".into()));
                }
                if k > 5 {
                    return Err(DiagramError::Bound(format!("TL tensor power {k} exceeds 5")));
                }
            }
            DiagramFamily::Fc { m, s } => {
                if m < 1 || s < 1 {
                    return Err(DiagramError::Bound("FC parameters must be at least 1".into()));
                }
                if k > 4 {
                    return Err(DiagramError::Bound(format!("FC tensor power {k} exceeds 4")));
                }
            }
        }
        Ok(())
    }

    /// The 0→k diagram basis.
    pub fn basis(&self, k: u32) -> Vec<PairingDiagram> {
        match self {
            DiagramFamily::Tl { .. } => enumerate_tl(0, k as usize),
            DiagramFamily::Fc { .. } => enumerate_fc(0, k as usize),
        }
    }

    fn weights(&self) -> LoopWeights {
        match *self {
            DiagramFamily::Tl { n } => LoopWeights::temperley_lieb(n),
            DiagramFamily::Fc { m, s } => LoopWeights::fuss_catalan(m, s),
        }
    }
}

/// Gram matrix of the 0→k basis: entry (i,j) is the loop scalar of
/// `involute(D_i)∘D_j`.
pub fn gram_matrix(family: DiagramFamily, k: u32) -> Result<Vec<Vec<QuadScalar>>, DiagramError> {
    family.check_bounds(k)?;
    let basis = family.basis(k);
    let weights = family.weights();
    let weighted: Vec<WeightedDiagram> = basis.into_iter().map(WeightedDiagram::plain).collect();
    let flipped: Vec<WeightedDiagram> = weighted.iter().map(involute).collect();
    let mut g = vec![vec![QuadScalar::zero(); weighted.len()]; weighted.len()];
    for (i, di) in flipped.iter().enumerate() {
        for (j, dj) in weighted.iter().enumerate() {
            let closed = compose(di, dj, &weights)?;
            debug_assert_eq!(closed.diagram.bottom_points() + closed.diagram.top_points(), 0);
            g[i][j] = closed.scalar;
        }
    }
    Ok(g)
}

/// Rank of the Gram matrix by Gaussian elimination with exact division in
/// the scalar field.
pub fn gram_rank(family: DiagramFamily, k: u32) -> Result<usize, DiagramError> {
    let mut g = gram_matrix(family, k)?;
    let n = g.len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        let Some(pivot) = (row..n).find(|&r| !g[r][col].is_zero()) else {
            continue;
        };
        g.swap(row, pivot);
        let inv = g[row][col].inverse().expect("pivot is nonzero");
        for c in col..n {
            g[row][c] = &g[row][c] * &inv;
        }
        for r in 0..n {
            if r != row && !g[r][col].is_zero() {
                let factor = g[r][col].clone();
                for c in col..n {
                    let sub = &factor * &g[row][c];
                    g[r][c] = &g[r][c] - &sub;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    Ok(rank)
}

/// One row of the quantum-vs-classical dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimsRow {
    pub k: u32,
    /// Number of 0→k diagrams.
    pub diagrams: usize,
    /// Gram rank: the quantum fixed-space dimension.
    pub rank: usize,
    /// Classical orbit count, when supplied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical: Option<u64>,
    /// classical − rank.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<u64>,
}

/// Dimension table for k = 0..=max_k, checked against classical orbit counts
/// when they are given: the quantum fixed space can never exceed the
/// classical one.
pub fn quantum_vs_classical(
    family: DiagramFamily,
    max_k: u32,
    classical: Option<&[u64]>,
) -> Result<Vec<DimsRow>, DiagramError> {
    if let Some(counts) = classical {
        if counts.len() != (max_k + 1) as usize {
            return Err(DiagramError::LengthMismatch {
                expected: (max_k + 1) as usize,
                got: counts.len(),
            });
        }
    }
    let mut rows = Vec::new();
    for k in 0..=max_k {
        let rank = gram_rank(family, k)?;
        let diagrams = family.basis(k).len();
        let classical_k = classical.map(|c| c[k as usize]);
        if let Some(c) = classical_k {
            if (rank as u64) > c {
                return Err(DiagramError::QuantumExceedsClassical { k, rank, classical: c });
            }
        }
        rows.push(DimsRow {
            k,
            diagrams,
            rank,
            classical: classical_k,
            gap: classical_k.map(|c| c - rank as u64),
        });
    }
    Ok(rows)
}
