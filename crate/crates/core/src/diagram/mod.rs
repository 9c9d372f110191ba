//! Noncrossing pairing diagrams with exact loop-scalar arithmetic.
//!
//! A diagram is a planar perfect matching between a row of bottom boundary
//! points and a row of top boundary points. Composition stacks diagrams,
//! traces the strands, and converts every closed loop into a scalar factor;
//! in the colored (Fuss-Catalan) case the boundary carries the repeating
//! pattern y,z,z,y and strings join like colors, so loops are monochromatic
//! and weigh δ_Y or δ_Z.

mod gram;
mod scalar;

pub use gram::{gram_rank, quantum_vs_classical, DiagramFamily, DimsRow};
pub use scalar::QuadScalar;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("shape mismatch: gluing {b_top} points of B.top onto {a_bottom} points of A.bottom")]
    ShapeMismatch { a_bottom: usize, b_top: usize },
    #[error("boundary color words do not match")]
    ColorMismatch,
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("resource bound: {0}")]
    Bound(String),
    #[error("classical counts: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("k = {k}: Gram rank {rank} exceeds the classical orbit count {classical}")]
    QuantumExceedsClassical { k: u32, rank: usize, classical: u64 },
}

/// Strand colors of the Fuss-Catalan calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrandColor {
    Y,
    Z,
}

/// Loop weights used during composition.
#[derive(Debug, Clone)]
pub struct LoopWeights {
    pub plain: QuadScalar,
    pub y: QuadScalar,
    pub z: QuadScalar,
}

impl LoopWeights {
    /// Uncolored loops weigh √n.
    pub fn temperley_lieb(n: u64) -> Self {
        let w = QuadScalar::sqrt(n);
        LoopWeights { plain: w.clone(), y: w.clone(), z: w }
    }

    /// y-loops weigh √m, z-loops √s.
    pub fn fuss_catalan(m: u64, s: u64) -> Self {
        LoopWeights {
            plain: QuadScalar::sqrt(m * s),
            y: QuadScalar::sqrt(m),
            z: QuadScalar::sqrt(s),
        }
    }
}

/// A perfect matching of `bottom + top` boundary points, noncrossing in the
/// cyclic order (bottom left to right, then top right to left).
///
/// Points are numbered `0..bottom` along the bottom row and
/// `bottom..bottom+top` along the top row, both left to right. Pairs are
/// stored sorted, so equality and ordering are structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingDiagram {
    bottom: usize,
    top: usize,
    pairs: Vec<(usize, usize)>,
    colors: Option<Vec<StrandColor>>,
}

/// The repeating y,z,z,y color word on `points` boundary points.
pub fn fc_color_word(points: usize) -> Vec<StrandColor> {
    (0..points)
        .map(|i| match i % 4 {
            0 | 3 => StrandColor::Y,
            _ => StrandColor::Z,
        })
        .collect()
}

impl PairingDiagram {
    pub fn new(
        bottom: usize,
        top: usize,
        mut pairs: Vec<(usize, usize)>,
        colors: Option<Vec<StrandColor>>,
    ) -> Result<Self, DiagramError> {
        let points = bottom + top;
        if points % 2 != 0 {
            return Err(DiagramError::Invalid(format!("odd boundary size {points}")));
        }
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        let mut seen = vec![false; points];
        for &(a, b) in &pairs {
            if a == b || b >= points || seen[a] || seen[b] {
                return Err(DiagramError::Invalid(format!("({a},{b}) is not part of a matching")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        if pairs.len() * 2 != points {
            return Err(DiagramError::Invalid("matching does not cover the boundary".into()));
        }
        if let Some(word) = &colors {
            if word.len() != points {
                return Err(DiagramError::Invalid("color word length mismatch".into()));
            }
            for &(a, b) in &pairs {
                if word[a] != word[b] {
                    return Err(DiagramError::Invalid(format!("({a},{b}) joins different colors")));
                }
            }
        }
        let d = PairingDiagram { bottom, top, pairs, colors };
        if let Some((p, q)) = d.find_crossing() {
            return Err(DiagramError::Invalid(format!("pairs {p:?} and {q:?} cross")));
        }
        Ok(d)
    }

    /// The identity on `strands` points per row (uncolored), or on the given
    /// color word.
    pub fn identity(strands: usize, colors: Option<Vec<StrandColor>>) -> Self {
        let full = colors.map(|w| {
            let mut v = w.clone();
            v.extend(w);
            v
        });
        Self::new(strands, strands, (0..strands).map(|i| (i, strands + i)).collect(), full)
            .expect("identity is always valid")
    }

    pub fn bottom_points(&self) -> usize {
        self.bottom
    }

    pub fn top_points(&self) -> usize {
        self.top
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn colors(&self) -> Option<&[StrandColor]> {
        self.colors.as_deref()
    }

    fn bottom_word(&self) -> Option<&[StrandColor]> {
        self.colors.as_deref().map(|w| &w[..self.bottom])
    }

    fn top_word(&self) -> Option<&[StrandColor]> {
        self.colors.as_deref().map(|w| &w[self.bottom..])
    }

    /// Position along the boundary circle: bottom left→right, top right→left.
    fn cyclic(&self, p: usize) -> usize {
        if p < self.bottom {
            p
        } else {
            self.bottom + (self.top - 1 - (p - self.bottom))
        }
    }

    fn find_crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        let cyc: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.cyclic(a), self.cyclic(b));
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        for i in 0..cyc.len() {
            for j in (i + 1)..cyc.len() {
                let (a, b) = cyc[i];
                let (c, d) = cyc[j];
                let c_in = a < c && c < b;
                let d_in = a < d && d < b;
                if c_in != d_in {
                    return Some((self.pairs[i], self.pairs[j]));
                }
            }
        }
        None
    }
}

/// A diagram with an exact scalar prefactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDiagram {
    pub scalar: QuadScalar,
    pub diagram: PairingDiagram,
}

impl WeightedDiagram {
    pub fn plain(diagram: PairingDiagram) -> Self {
        WeightedDiagram { scalar: QuadScalar::one(), diagram }
    }

    pub fn scaled(scalar: QuadScalar, diagram: PairingDiagram) -> Self {
        debug_assert!(!scalar.is_zero());
        WeightedDiagram { scalar, diagram }
    }
}

/// All noncrossing perfect matchings of `2k` bottom and `2l` top points,
/// sorted structurally. The count is the Catalan number C_{k+l}.
pub fn enumerate_tl(k: usize, l: usize) -> Vec<PairingDiagram> {
    enumerate_noncrossing(2 * k, 2 * l, None)
}

/// All noncrossing color-respecting matchings of `4k` bottom and `4l` top
/// points colored y,z,z,y per group.
pub fn enumerate_fc(k: usize, l: usize) -> Vec<PairingDiagram> {
    let bottom = 4 * k;
    let top = 4 * l;
    let mut word = fc_color_word(bottom);
    word.extend(fc_color_word(top));
    enumerate_noncrossing(bottom, top, Some(word))
}

fn enumerate_noncrossing(
    bottom: usize,
    top: usize,
    colors: Option<Vec<StrandColor>>,
) -> Vec<PairingDiagram> {
    let points = bottom + top;
    if points == 0 {
        return vec![PairingDiagram::new(bottom, top, Vec::new(), colors).unwrap()];
    }
    if points % 2 != 0 {
        return Vec::new();
    }
    // Enumerate noncrossing matchings in cyclic coordinates, then map back to
    // point labels. Cutting the circle between the last and first position
    // turns cyclic noncrossing into linear noncrossing.
    let mut cyc_to_point = vec![0usize; points];
    for p in 0..points {
        let cyc = if p < bottom { p } else { bottom + (top - 1 - (p - bottom)) };
        cyc_to_point[cyc] = p;
    }
    let mut out = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();
    // The first free position pairs with a partner at odd offset; the pair
    // separates the line into an inside and an outside block that cannot
    // interact without crossing.
    fn matchings(positions: &[usize], current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(&first) = positions.first() else {
            out.push(current.clone());
            return;
        };
        for idx in (1..positions.len()).step_by(2) {
            let partner = positions[idx];
            let inside: Vec<usize> = positions[1..idx].to_vec();
            let outside: Vec<usize> = positions[idx + 1..].to_vec();
            current.push((first, partner));
            // Enumerate the inside block completely, then for each completion
            // continue with the outside block.
            let mut inner_results = Vec::new();
            matchings(&inside, &mut Vec::new(), &mut inner_results);
            for inner in inner_results {
                let before = current.len();
                current.extend(inner);
                matchings(&outside, current, out);
                current.truncate(before);
            }
            current.pop();
        }
    }
    let positions: Vec<usize> = (0..points).collect();
    let mut raw = Vec::new();
    matchings(&positions, &mut current, &mut raw);
    for cyc_pairs in raw {
        let pairs: Vec<(usize, usize)> = cyc_pairs
            .into_iter()
            .map(|(a, b)| (cyc_to_point[a], cyc_to_point[b]))
            .collect();
        if let Some(word) = &colors {
            if pairs.iter().any(|&(a, b)| word[a] != word[b]) {
                continue;
            }
        }
        let d = PairingDiagram::new(bottom, top, pairs, colors.clone())
            .expect("enumeration produces valid diagrams");
        out.push(d);
    }
    out.sort_unstable();
    out
}

/// Stacks `A` over `B` (gluing B's top to A's bottom), traces strands, and
/// multiplies the scalar by the weight of every closed loop.
pub fn compose(
    a: &WeightedDiagram,
    b: &WeightedDiagram,
    weights: &LoopWeights,
) -> Result<WeightedDiagram, DiagramError> {
    let (da, db) = (&a.diagram, &b.diagram);
    if da.bottom != db.top {
        return Err(DiagramError::ShapeMismatch { a_bottom: da.bottom, b_top: db.top });
    }
    if da.colors.is_some() != db.colors.is_some() {
        return Err(DiagramError::ColorMismatch);
    }
    if let (Some(aw), Some(bw)) = (da.bottom_word(), db.top_word()) {
        if aw != bw {
            return Err(DiagramError::ColorMismatch);
        }
    }

    // Union-find over result-bottom, glue, and result-top nodes.
    let n_bottom = db.bottom;
    let n_glue = db.top;
    let n_top = da.top;
    let total = n_bottom + n_glue + n_top;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (find(parent, x), find(parent, y));
        if rx != ry {
            parent[rx] = ry;
        }
    };
    // B's points: bottom i -> i, top j -> n_bottom + j.
    for &(p, q) in &db.pairs {
        let map = |p: usize| if p < db.bottom { p } else { n_bottom + (p - db.bottom) };
        union(&mut parent, map(p), map(q));
    }
    // A's points: bottom i -> glue n_bottom + i, top j -> n_bottom + n_glue + j.
    for &(p, q) in &da.pairs {
        let map = |p: usize| {
            if p < da.bottom {
                n_bottom + p
            } else {
                n_bottom + n_glue + (p - da.bottom)
            }
        };
        union(&mut parent, map(p), map(q));
    }

    // Group boundary nodes by root; roots with no boundary node are loops.
    let mut boundary_of_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..total {
        let r = find(&mut parent, x);
        boundary_of_root.entry(r).or_default();
    }
    for x in (0..n_bottom).chain(n_bottom + n_glue..total) {
        let r = find(&mut parent, x);
        boundary_of_root.get_mut(&r).unwrap().push(x);
    }
    let mut scalar = &a.scalar * &b.scalar;
    let mut pairs = Vec::new();
    for (root, boundary) in &boundary_of_root {
        match boundary.len() {
            0 => {
                // Closed loop: find its color from any glue node it passes
                // through (every loop alternates between A and B arcs).
                let glue = (n_bottom..n_bottom + n_glue)
                    .find(|&g| find(&mut parent, g) == *root)
                    .expect("a closed loop contains a glue node");
                let weight = match db.top_word() {
                    None => &weights.plain,
                    Some(word) => match word[glue - n_bottom] {
                        StrandColor::Y => &weights.y,
                        StrandColor::Z => &weights.z,
                    },
                };
                scalar = &scalar * weight;
            }
            2 => {
                let to_result = |x: usize| {
                    if x < n_bottom {
                        x
                    } else {
                        n_bottom + (x - n_bottom - n_glue)
                    }
                };
                pairs.push((to_result(boundary[0]), to_result(boundary[1])));
            }
            k => {
                return Err(DiagramError::Invalid(format!(
                    "strand component touches {k} boundary points"
                )))
            }
        }
    }
    let colors = match (db.bottom_word(), da.top_word()) {
        (Some(bw), Some(tw)) => {
            let mut w = bw.to_vec();
            w.extend_from_slice(tw);
            Some(w)
        }
        _ => None,
    };
    let diagram = PairingDiagram::new(n_bottom, n_top, pairs, colors)?;
    Ok(WeightedDiagram { scalar, diagram })
}

/// Horizontal concatenation; B's points go to the right of A's.
pub fn tensor(a: &WeightedDiagram, b: &WeightedDiagram) -> Result<WeightedDiagram, DiagramError> {
    let (da, db) = (&a.diagram, &b.diagram);
    let bottom = da.bottom + db.bottom;
    let top = da.top + db.top;
    let map_a = |p: usize| if p < da.bottom { p } else { bottom + (p - da.bottom) };
    let map_b = |p: usize| {
        if p < db.bottom {
            da.bottom + p
        } else {
            bottom + da.top + (p - db.bottom)
        }
    };
    let mut pairs: Vec<(usize, usize)> = da.pairs.iter().map(|&(p, q)| (map_a(p), map_a(q))).collect();
    pairs.extend(db.pairs.iter().map(|&(p, q)| (map_b(p), map_b(q))));
    let colors = match (&da.colors, &db.colors) {
        (None, None) => None,
        (Some(_), Some(_)) => {
            let mut w: Vec<StrandColor> = da.bottom_word().unwrap().to_vec();
            w.extend_from_slice(db.bottom_word().unwrap());
            w.extend_from_slice(da.top_word().unwrap());
            w.extend_from_slice(db.top_word().unwrap());
            Some(w)
        }
        (Some(_), None) if db.bottom + db.top == 0 => da.colors.clone(),
        (None, Some(_)) if da.bottom + da.top == 0 => db.colors.clone(),
        _ => return Err(DiagramError::ColorMismatch),
    };
    let diagram = PairingDiagram::new(bottom, top, pairs, colors)?;
    Ok(WeightedDiagram { scalar: &a.scalar * &b.scalar, diagram })
}

/// Upside-down turning: swaps the boundary rows (left-right order kept) and
/// conjugates the scalar, which is the identity on these real coefficients.
pub fn involute(a: &WeightedDiagram) -> WeightedDiagram {
    let d = &a.diagram;
    let map = |p: usize| if p < d.bottom { d.top + p } else { p - d.bottom };
    let pairs: Vec<(usize, usize)> = d.pairs.iter().map(|&(p, q)| (map(p), map(q))).collect();
    let colors = match (&d.colors, d.bottom_word(), d.top_word()) {
        (Some(_), Some(bw), Some(tw)) => {
            let mut w = tw.to_vec();
            w.extend_from_slice(bw);
            Some(w)
        }
        _ => None,
    };
    let diagram = PairingDiagram::new(d.top, d.bottom, pairs, colors)
        .expect("reflection preserves planarity");
    WeightedDiagram { scalar: a.scalar.clone(), diagram }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Catalan numbers by the recurrence C_{m+1} = Σ C_i·C_{m-i}; the
    /// independent oracle for enumeration counts.
    fn catalan_oracle(upto: usize) -> Vec<u64> {
        let mut c = vec![1u64];
        for m in 0..upto {
            let next: u64 = (0..=m).map(|i| c[i] * c[m - i]).sum();
            c.push(next);
        }
        c
    }

    #[test]
    fn tl_counts_are_catalan() {
        let c = catalan_oracle(7);
        assert_eq!(enumerate_tl(0, 0).len(), 1);
        assert_eq!(enumerate_tl(1, 1).len(), 2);
        assert_eq!(enumerate_tl(0, 4).len() as u64, c[4]);
        for k in 0..=6 {
            for l in 0..=(6 - k) {
                assert_eq!(
                    enumerate_tl(k, l).len() as u64,
                    c[k + l],
                    "TL({k},{l}) count"
                );
            }
        }
    }

    #[test]
    fn fc_counts_from_exhaustive_filter() {
        assert_eq!(enumerate_fc(0, 1).len(), 1);
        assert_eq!(enumerate_fc(0, 2).len(), 3, "dim(P_2) = 3");
        // The 1→1 boundary word equals the 0→2 word in cyclic order (each
        // row's pattern is a palindrome), so the counts agree.
        assert_eq!(enumerate_fc(1, 1).len(), 3);
        assert_eq!(enumerate_fc(0, 3).len(), 12);
    }

    #[test]
    fn fc_zero_one_diagram_shape() {
        let d = &enumerate_fc(0, 1)[0];
        // Only {(0,3),(1,2)} matches colors y,z,z,y.
        assert_eq!(d.pairs(), &[(0, 3), (1, 2)]);
    }

    // Generators at a perfect-square parameter so the half-integer powers of
    // delta stay inside the scalar field: TL(4) has delta = 2.
    fn gen_u(delta_sq: u64) -> WeightedDiagram {
        // 0 -> 1 strand pair: the cap, prefactor delta^{-1/2}.
        let d = PairingDiagram::new(0, 2, vec![(0, 1)], None).unwrap();
        let root = integer_sqrt(delta_sq);
        WeightedDiagram::scaled(inverse_sqrt(root), d)
    }

    fn gen_m(delta_sq: u64) -> WeightedDiagram {
        // 2 -> 1 strand pairs: |∪|, prefactor delta^{1/2}.
        let d = PairingDiagram::new(4, 2, vec![(0, 4), (1, 2), (3, 5)], None).unwrap();
        let root = integer_sqrt(delta_sq);
        WeightedDiagram::scaled(QuadScalar::sqrt(root), d)
    }

    fn integer_sqrt(n: u64) -> u64 {
        let r = (n as f64).sqrt().round() as u64;
        assert_eq!(r * r, n, "test generators need a perfect-square delta^2");
        r
    }

    fn inverse_sqrt(r: u64) -> QuadScalar {
        QuadScalar::sqrt(r).inverse().unwrap()
    }

    #[test]
    fn isometry_law_u_star_u() {
        let w = LoopWeights::temperley_lieb(4);
        let u = gen_u(4);
        let got = compose(&involute(&u), &u, &w).unwrap();
        assert_eq!(got.diagram.bottom_points(), 0);
        assert_eq!(got.diagram.top_points(), 0);
        assert_eq!(got.scalar, QuadScalar::one(), "one loop: δ·δ⁻¹ = 1");
    }

    #[test]
    fn unit_law_m_after_u_tensor_id() {
        for delta_sq in [4u64, 9] {
            let w = LoopWeights::temperley_lieb(delta_sq);
            let m = gen_m(delta_sq);
            let u = gen_u(delta_sq);
            let id = WeightedDiagram::plain(PairingDiagram::identity(2, None));
            let u_tensor_id = tensor(&u, &id).unwrap();
            let got = compose(&m, &u_tensor_id, &w).unwrap();
            assert_eq!(got.diagram, PairingDiagram::identity(2, None));
            assert_eq!(got.scalar, QuadScalar::one());
        }
    }

    #[test]
    fn fc_projection_is_idempotent() {
        // E = δ_Z^{-1}·|∪∩|: one z-loop in E∘E cancels one prefactor copy.
        for (m, s) in [(2u64, 2u64), (2, 3), (3, 2)] {
            let w = LoopWeights::fuss_catalan(m, s);
            let mut word = fc_color_word(4);
            word.extend(fc_color_word(4));
            let d = PairingDiagram::new(4, 4, vec![(0, 4), (1, 2), (5, 6), (3, 7)], Some(word)).unwrap();
            let e = WeightedDiagram::scaled(QuadScalar::sqrt(s).inverse().unwrap(), d);
            let ee = compose(&e, &e, &w).unwrap();
            assert_eq!(ee, e, "E∘E = E at (m,s) = ({m},{s})");
        }
    }

    #[test]
    fn tensor_examples() {
        let id1 = WeightedDiagram::plain(PairingDiagram::identity(1, None));
        let id2 = tensor(&id1, &id1).unwrap();
        assert_eq!(id2.diagram, PairingDiagram::identity(2, None));

        // U⊗U: two side-by-side caps, scalar δ⁻¹.
        let u = gen_u(4);
        let uu = tensor(&u, &u).unwrap();
        assert_eq!(uu.diagram.pairs(), &[(0, 1), (2, 3)]);
        assert_eq!(uu.scalar, QuadScalar::rational(1, 2));

        // Tensor with the empty diagram is the identity of tensor.
        let empty = WeightedDiagram::plain(PairingDiagram::new(0, 0, vec![], None).unwrap());
        let back = tensor(&u, &empty).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn involution_examples() {
        let u = gen_u(4);
        let cup = involute(&u);
        assert_eq!(cup.diagram.bottom_points(), 2);
        assert_eq!(cup.diagram.top_points(), 0);
        assert_eq!(involute(&involute(&u)), u);

        let m = gen_m(4);
        let m_star = involute(&m);
        assert_eq!(m_star.diagram.bottom_points(), 2);
        assert_eq!(m_star.diagram.top_points(), 4);
    }

    #[test]
    fn composition_is_associative_on_random_triples() {
        // Deterministic random triples of compatible diagrams: a ∘ b ∘ c with
        // interface sizes (2y, 2z) chosen freely.
        let w = LoopWeights::temperley_lieb(3);
        let mut rng = crate::classify::SplitMix64::new(42);
        for _ in 0..200 {
            let x = (rng.next_u64() % 3) as usize;
            let y = (rng.next_u64() % 3) as usize;
            let z = (rng.next_u64() % 3) as usize;
            let v = (rng.next_u64() % 3) as usize;
            let pool_a = enumerate_tl(y, x);
            let pool_b = enumerate_tl(z, y);
            let pool_c = enumerate_tl(v, z);
            let mut pick = |pool: &[PairingDiagram]| {
                WeightedDiagram::plain(pool[(rng.next_u64() % pool.len() as u64) as usize].clone())
            };
            let a = pick(&pool_a);
            let b = pick(&pool_b);
            let c = pick(&pool_c);
            let bc = compose(&b, &c, &w).unwrap();
            let left = compose(&a, &bc, &w).unwrap();
            let ab = compose(&a, &b, &w).unwrap();
            let right = compose(&ab, &c, &w).unwrap();
            assert_eq!(left, right, "associativity");
            let inv_ab = involute(&ab);
            let expected = compose(&involute(&b), &involute(&a), &w).unwrap();
            assert_eq!(inv_ab, expected, "involution anti-homomorphism");
        }
    }

    #[test]
    fn compose_shape_and_color_errors() {
        let w = LoopWeights::temperley_lieb(2);
        let u = gen_u(4);
        assert!(matches!(
            compose(&u, &u, &w),
            Err(DiagramError::ShapeMismatch { .. })
        ));
        let fc = WeightedDiagram::plain(enumerate_fc(0, 1)[0].clone());
        let tl = WeightedDiagram::plain(enumerate_tl(0, 2)[0].clone());
        assert!(matches!(
            compose(&involute(&fc), &tl, &w),
            Err(DiagramError::ColorMismatch)
        ));
    }

    #[test]
    fn noncrossing_validation_rejects_crossings() {
        assert!(matches!(
            PairingDiagram::new(4, 0, vec![(0, 2), (1, 3)], None),
            Err(DiagramError::Invalid(_))
        ));
        // The same pairs nested are fine.
        assert!(PairingDiagram::new(4, 0, vec![(0, 3), (1, 2)], None).is_ok());
        // Through-strands crossing: (0,t1),(1,t0).
        assert!(matches!(
            PairingDiagram::new(2, 2, vec![(0, 3), (1, 2)], None),
            Err(DiagramError::Invalid(_))
        ));
    }
}
