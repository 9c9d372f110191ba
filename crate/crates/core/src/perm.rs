//! Automorphism groups of colored spaces and graphs, orbit counting.
//!
//! Groups are stored as the full element list: every space here has at most
//! nine points, so orders stay below 9! and Burnside averaging needs all
//! elements anyway.

use crate::space::{ColoredSpace, Graph, MAX_EXHAUSTIVE_POINTS};
use std::collections::HashSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("{n} points exceed the supported bound {max}")]
    TooLarge { n: usize, max: usize },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

/// A bijection of `0..n`, stored as the image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!(v < images.len() && !seen[v], "images must form a bijection");
            seen[v] = true;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &v)| i == v).count()
    }

    /// One-line cycle notation, e.g. `(0 1 2)(3 4)`; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut v = start;
            let mut first = true;
            while !seen[v] {
                seen[v] = true;
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
                first = false;
                v = self.images[v];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// A permutation group on `0..n`, closed under composition and inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    n: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    /// Wraps a complete element list (must contain the identity and be closed;
    /// checked in debug builds). Elements are sorted by image word.
    fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.iter().any(Permutation::is_identity));
        let generators = extract_generators(&elements);
        PermutationGroup { n, elements, generators }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_elements(n, vec![Permutation::identity(n)])
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        let mut elements = Vec::new();
        for_each_permutation(n, |p| elements.push(Permutation::from_images(p.to_vec())));
        Self::from_elements(n, elements)
    }

    /// Closure of a generating set.
    pub fn generated_by(n: usize, gens: &[Permutation]) -> Self {
        Self::from_elements(n, closure(n, gens))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Orbits of the point action, each sorted, ordered by least element.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut orbits = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = self
                .elements
                .iter()
                .map(|p| p.apply(start))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            orbit.sort_unstable();
            for &v in &orbit {
                seen[v] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().len() == 1 || self.n == 0
    }
}

/// All products of the generators, identity included.
fn closure(n: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let identity = Permutation::identity(n);
    seen.insert(identity.images().to_vec());
    let mut frontier = vec![identity];
    let mut all = frontier.clone();
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.images().to_vec()) {
                all.push(q.clone());
                frontier.push(q);
            }
        }
    }
    all
}

/// Greedy generator extraction: repeatedly add the first element outside the
/// closure of the current set.
fn extract_generators(elements: &[Permutation]) -> Vec<Permutation> {
    if elements.len() <= 1 {
        return Vec::new();
    }
    let n = elements[0].degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closed: HashSet<Vec<usize>> = HashSet::new();
    closed.insert(Permutation::identity(n).images().to_vec());
    loop {
        let missing = elements.iter().find(|p| !closed.contains(p.images()));
        let Some(m) = missing else {
            return gens;
        };
        gens.push(m.clone());
        closed = closure(n, &gens)
            .into_iter()
            .map(|p| p.images().to_vec())
            .collect();
    }
}

/// Calls `f` with every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // Standard next-permutation step.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// All color-preserving permutations of the space, found by backtracking with
/// partial-assignment pruning. Elements come out in lexicographic image order.
pub fn automorphism_group(s: &ColoredSpace) -> Result<PermutationGroup, PermError> {
    let n = s.size();
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(PermError::TooLarge { n, max: MAX_EXHAUSTIVE_POINTS });
    }
    let mut elements = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        s: &ColoredSpace,
        pos: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = s.size();
        if pos == n {
            out.push(Permutation::from_images(images.clone()));
            return;
        }
        for candidate in 0..n {
            if used[candidate] {
                continue;
            }
            let consistent = (0..pos).all(|j| s.color(pos, j) == s.color(candidate, images[j]));
            if consistent {
                images[pos] = candidate;
                used[candidate] = true;
                extend(s, pos + 1, images, used, out);
                used[candidate] = false;
                images[pos] = usize::MAX;
            }
        }
    }
    if n == 1 {
        elements.push(Permutation::identity(1));
    } else {
        extend(s, 0, &mut images, &mut used, &mut elements);
    }
    Ok(PermutationGroup::from_elements(n, elements))
}

/// Graph automorphisms, same search over the 2-color pattern.
pub fn graph_automorphism_group(g: &Graph) -> Result<PermutationGroup, PermError> {
    automorphism_group(&ColoredSpace::from_graph(g))
}

/// Whether every vertex is the image of vertex 0 under some automorphism.
///
/// Runs one backtracking search per target vertex instead of building the
/// whole group; irregular graphs are rejected immediately.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool, PermError> {
    let n = g.size();
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(PermError::TooLarge { n, max: MAX_EXHAUSTIVE_POINTS });
    }
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_regular() {
        return Ok(false);
    }
    fn exists_extension(g: &Graph, pos: usize, images: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = g.size();
        if pos == n {
            return true;
        }
        if images[pos] != usize::MAX {
            // Pre-seeded target (only position 0).
            return exists_extension_fixed(g, pos, images, used);
        }
        for candidate in 0..n {
            if used[candidate] {
                continue;
            }
            if (0..pos).all(|j| g.edge(pos, j) == g.edge(candidate, images[j])) {
                images[pos] = candidate;
                used[candidate] = true;
                if exists_extension(g, pos + 1, images, used) {
                    images[pos] = usize::MAX;
                    used[candidate] = false;
                    return true;
                }
                images[pos] = usize::MAX;
                used[candidate] = false;
            }
        }
        false
    }
    fn exists_extension_fixed(g: &Graph, pos: usize, images: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let candidate = images[pos];
        if (0..pos).all(|j| g.edge(pos, j) == g.edge(candidate, images[j])) {
            exists_extension(g, pos + 1, images, used)
        } else {
            false
        }
    }
    for target in 1..n {
        let mut images = vec![usize::MAX; n];
        let mut used = vec![false; n];
        images[0] = target;
        used[target] = true;
        if !exists_extension_fixed(g, 0, &mut images, &mut used) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of orbits of the diagonal action of `group` on k-tuples of points,
/// by the Burnside average `(1/|G|) Σ_g fix(g)^k`.
///
/// When the tuple space is small the count is cross-checked against a direct
/// union-find enumeration.
pub fn orbit_count_on_tuples(group: &PermutationGroup, k: u32) -> Result<u64, PermError> {
    let n = group.degree() as u64;
    let mut total: u128 = 0;
    for p in group.elements() {
        let fix = p.fixed_points() as u128;
        total += fix.checked_pow(k).ok_or_else(|| {
            PermError::ResourceBound(format!("fix^{k} overflows for degree {n}"))
        })?;
    }
    let order = group.order() as u128;
    debug_assert_eq!(total % order, 0, "Burnside sum must be divisible by the order");
    let count = (total / order) as u64;
    if n.checked_pow(k).is_some_and(|t| t <= 100_000) {
        let direct = orbit_count_direct(group, k)?;
        assert_eq!(count, direct, "Burnside and direct orbit counts must agree");
    }
    Ok(count)
}

/// Direct orbit count on k-tuples via union-find over all n^k tuples.
pub fn orbit_count_direct(group: &PermutationGroup, k: u32) -> Result<u64, PermError> {
    let n = group.degree();
    if n == 0 {
        return Ok(0);
    }
    let total = (n as u64)
        .checked_pow(k)
        .filter(|&t| t <= 10_000_000)
        .ok_or_else(|| PermError::ResourceBound(format!("{n}^{k} tuples exceed the direct bound")))?
        as usize;
    let mut parent: Vec<u32> = (0..total as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let gens: Vec<&Permutation> = if group.generators().is_empty() {
        Vec::new()
    } else {
        group.generators().iter().collect()
    };
    let mut digits = vec![0usize; k as usize];
    for t in 0..total {
        let mut rest = t;
        for d in digits.iter_mut() {
            *d = rest % n;
            rest /= n;
        }
        for g in &gens {
            let mut image = 0usize;
            for d in digits.iter().rev() {
                image = image * n + g.apply(*d);
            }
            let a = find(&mut parent, t as u32);
            let b = find(&mut parent, image as u32);
            if a != b {
                parent[a as usize] = b;
            }
        }
    }
    let mut count = 0u64;
    for t in 0..total as u32 {
        if find(&mut parent, t) == t {
            count += 1;
        }
    }
    Ok(count)
}
