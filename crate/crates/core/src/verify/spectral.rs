//! Floating-point spectral checks: circulant eigenvectors and eigenspace
//! invariance under classical automorphisms.
//!
//! These are the only approximate computations in the crate. The circulant
//! check is analytically exact and is held to 1e-12; the general symmetric
//! eigendecomposition (cyclic Jacobi) is held to 1e-9.

use super::VerifyError;
use crate::perm;
use crate::space::ColoredSpace;

pub const CIRCULANT_TOLERANCE: f64 = 1e-12;
pub const EIGENSPACE_TOLERANCE: f64 = 1e-9;
/// Absolute gap below which two numerical eigenvalues are treated as one.
pub const CLUSTER_GAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct CirculantReport {
    pub n: usize,
    /// Largest `‖M·fᵏ − λₖ·fᵏ‖_∞` over all powers of the primitive root.
    pub max_residual: f64,
    /// Largest normalized inner product between distinct eigenvectors.
    pub max_orthogonality_defect: f64,
}

impl CirculantReport {
    pub fn passed(&self) -> bool {
        self.max_residual <= CIRCULANT_TOLERANCE
            && self.max_orthogonality_defect <= CIRCULANT_TOLERANCE
    }
}

/// For every n-th root of unity `w`, checks that `(1, w, …, w^{n-1})` is an
/// eigenvector of the n-cycle adjacency matrix with eigenvalue `w + w^{n-1}`,
/// and that the powers of the primitive root form an orthogonal eigenbasis.
pub fn circulant_eigencheck(n: usize) -> CirculantReport {
    assert!(n >= 3, "cycles need at least 3 points");
    let tau = std::f64::consts::TAU;
    let mut max_residual: f64 = 0.0;
    // Adjacency of the cycle: neighbors j-1 and j+1 (mod n).
    for k in 0..n {
        // f[j] = w^{kj}, eigenvalue 2·cos(2πk/n).
        let lambda = 2.0 * (tau * k as f64 / n as f64).cos();
        for j in 0..n {
            let angle = |t: usize| tau * (k * t % n) as f64 / n as f64;
            let prev = (j + n - 1) % n;
            let next = (j + 1) % n;
            let re = angle(prev).cos() + angle(next).cos() - lambda * angle(j).cos();
            let im = angle(prev).sin() + angle(next).sin() - lambda * angle(j).sin();
            max_residual = max_residual.max(re.hypot(im));
        }
    }
    // Orthogonality of 1, f, f², …, f^{n-1}: ⟨f^a, f^b⟩ = Σ w^{(a-b)t}.
    let mut max_defect: f64 = 0.0;
    for a in 0..n {
        for b in 0..a {
            let d = a - b;
            let re: f64 = (0..n).map(|t| (tau * (d * t % n) as f64 / n as f64).cos()).sum();
            let im: f64 = (0..n).map(|t| (tau * (d * t % n) as f64 / n as f64).sin()).sum();
            max_defect = max_defect.max(re.hypot(im) / n as f64);
        }
    }
    CirculantReport { n, max_residual, max_orthogonality_defect: max_defect }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenspaceReport {
    /// Per color: number of eigenvalue clusters and the worst commutator
    /// entry over all automorphisms.
    pub per_color: Vec<(usize, f64)>,
    /// Deviation of the summed projections from the identity.
    pub completeness_residual: f64,
    /// Order of the automorphism group used.
    pub group_order: usize,
}

impl EigenspaceReport {
    pub fn max_residual(&self) -> f64 {
        self.per_color
            .iter()
            .map(|&(_, r)| r)
            .fold(self.completeness_residual, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.max_residual() <= EIGENSPACE_TOLERANCE
    }
}

/// For each color component, computes the spectral projections numerically
/// and checks they commute with the permutation matrix of every classical
/// automorphism: the classical shadow of eigenspace invariance.
pub fn eigenspace_invariance_check(s: &ColoredSpace) -> Result<EigenspaceReport, VerifyError> {
    let n = s.size();
    if n > crate::space::MAX_EXHAUSTIVE_POINTS {
        return Err(VerifyError::TooLarge(n));
    }
    let group = perm::automorphism_group(s)?;
    let mut per_color = Vec::new();
    let mut completeness_residual: f64 = 0.0;
    for (_, g) in s.color_decomposition() {
        let mut a = vec![vec![0.0f64; n]; n];
        for (i, j) in g.edges() {
            a[i][j] = 1.0;
            a[j][i] = 1.0;
        }
        let (values, vectors) = jacobi_eigen(a);
        // Cluster sorted eigenvalues by the absolute gap.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| values[x].total_cmp(&values[y]));
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        for &idx in &order {
            match clusters.last_mut() {
                Some(cluster)
                    if (values[idx] - values[*cluster.last().unwrap()]).abs() <= CLUSTER_GAP =>
                {
                    cluster.push(idx)
                }
                _ => clusters.push(vec![idx]),
            }
        }
        // Projections P = Σ v·vᵀ per cluster.
        let mut sum = vec![vec![0.0f64; n]; n];
        let mut worst: f64 = 0.0;
        for cluster in &clusters {
            let mut p = vec![vec![0.0f64; n]; n];
            for &idx in cluster {
                for i in 0..n {
                    for j in 0..n {
                        p[i][j] += vectors[i][idx] * vectors[j][idx];
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    sum[i][j] += p[i][j];
                }
            }
            // ‖P·P_σ − P_σ·P‖_max: with a permutation matrix both products
            // are just index shuffles of P.
            for sigma in group.elements() {
                let inv = sigma.inverse();
                for i in 0..n {
                    for j in 0..n {
                        let left = p[i][sigma.apply(j)];
                        let right = p[inv.apply(i)][j];
                        worst = worst.max((left - right).abs());
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                completeness_residual = completeness_residual.max((sum[i][j] - target).abs());
            }
        }
        per_color.push((clusters.len(), worst));
    }
    if s.num_colors() == 0 {
        // One-point space: nothing to check beyond completeness of nothing.
        completeness_residual = 0.0;
    }
    Ok(EigenspaceReport { per_color, completeness_residual, group_order: group.order() })
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
/// eigenvalues and the orthogonal matrix of eigenvectors as columns.
fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0f64; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i][i]).collect();
    (values, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Graph;

    #[test]
    fn circulant_examples() {
        for n in 3..=12 {
            let report = circulant_eigencheck(n);
            assert!(report.passed(), "n = {n}: residual {}", report.max_residual);
        }
        // w = 1 gives eigenvalue 2; w = -1 on an even cycle gives -2; the
        // primitive root on C5 gives 2cos(2π/5).
        let golden = 2.0 * (std::f64::consts::TAU / 5.0).cos();
        assert!((golden - 0.618_034_0).abs() < 1e-6);
    }

    #[test]
    fn jacobi_recovers_known_spectrum() {
        // C4 adjacency has eigenvalues -2, 0, 0, 2.
        let g = Graph::cycle(4);
        let mut a = vec![vec![0.0; 4]; 4];
        for (i, j) in g.edges() {
            a[i][j] = 1.0;
            a[j][i] = 1.0;
        }
        let (mut values, vectors) = jacobi_eigen(a.clone());
        values.sort_by(f64::total_cmp);
        let expected = [-2.0, 0.0, 0.0, 2.0];
        for (got, want) in values.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
        // Residual check A·v = λ·v for one column.
        for col in 0..4 {
            let lambda: f64 = {
                // Recompute the eigenvalue from the Rayleigh quotient.
                let av: Vec<f64> = (0..4)
                    .map(|i| (0..4).map(|k| a[i][k] * vectors[k][col]).sum())
                    .collect();
                av.iter()
                    .zip((0..4).map(|i| vectors[i][col]))
                    .map(|(x, y)| x * y)
                    .sum()
            };
            for i in 0..4 {
                let av_i: f64 = (0..4).map(|k| a[i][k] * vectors[k][col]).sum();
                assert!((av_i - lambda * vectors[i][col]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn eigenspace_invariance_examples() {
        for s in [
            ColoredSpace::rectangle(),
            ColoredSpace::from_graph(&Graph::cycle(6)),
            ColoredSpace::simplex(5),
        ] {
            let report = eigenspace_invariance_check(&s).unwrap();
            assert!(report.passed(), "residual {}", report.max_residual());
        }
    }

    #[test]
    fn rectangle_eigenspaces_are_one_dimensional_plus_constants() {
        // The rectangle colors are matchings: eigenvalues ±1, and together
        // with the constants the eigenvectors are the four sign vectors.
        let report = eigenspace_invariance_check(&ColoredSpace::rectangle()).unwrap();
        assert_eq!(report.group_order, 4);
        for &(clusters, _) in &report.per_color {
            assert_eq!(clusters, 2, "a perfect matching has eigenvalues -1 and 1");
        }
    }

    #[test]
    fn projection_sum_is_identity() {
        let report = eigenspace_invariance_check(&ColoredSpace::square()).unwrap();
        assert!(report.completeness_residual <= EIGENSPACE_TOLERANCE);
    }
}
