//! Finite metric spaces as edge-colored complete graphs.
//!
//! A metric on a finite point set is used here only through its equality
//! pattern: two pairs of points get the same *color* exactly when their
//! distances agree. [`ColoredSpace`] stores that pattern (plus the numeric
//! distances when they are known), and [`Graph`] holds a single color
//! component.

pub use num_rational::Rational64;

use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Identifier of one color class (one distance value).
pub type ColorId = u16;

/// Largest point count for which exhaustive relabeling (canonical forms,
/// automorphism groups) is supported.
pub const MAX_EXHAUSTIVE_POINTS: usize = 9;

/// Largest point count accepted by the parser. Everything downstream of the
/// classifier is bounded far lower; this only caps memory for pathological
/// inputs.
pub const MAX_PARSE_POINTS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("space has {n} points; operation supports at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("unknown color id {0}")]
    UnknownColor(ColorId),
    #[error("empty color subset")]
    EmptySubset,
    #[error("numeric distance values are not available for this space")]
    NoValues,
    #[error("macrospace has {macro_points} points but {micro_count} microspaces were given")]
    BlockCountMismatch {
        macro_points: usize,
        micro_count: usize,
    },
    #[error("2·D({i},{j}) = {lhs} is smaller than d_{i}({p},{q}) = {rhs}")]
    MacroMicroCondition {
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        lhs: Rational64,
        rhs: Rational64,
    },
    #[error("invalid simplex product parameters: {0}")]
    BadProductParams(String),
}

/// Index of the unordered pair {i,j} (i != j) in row-major upper-triangle
/// order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Number of unordered pairs on `n` points.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// A finite set of points together with a color on every unordered pair.
///
/// Colors are numbered `0..num_colors` in order of first occurrence along the
/// row-major upper triangle. When the space was built from numeric distances,
/// `values[c]` is the distance of color `c`; distinct colors always carry
/// distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredSpace {
    n: usize,
    colors: Vec<ColorId>,
    num_colors: u16,
    values: Option<Vec<Rational64>>,
}

/// A simple undirected graph: one color component of a space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

/// Deterministic encoding of a space up to relabeling points and renaming
/// colors. Equal keys if and only if the spaces are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    bytes: Vec<u8>,
}

/// One violated triangle inequality, reported by [`ColoredSpace::validate_metric`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleWarning {
    /// The three points, ordered so that d(a,c) > d(a,b) + d(b,c).
    pub points: (usize, usize, usize),
    pub long_side: Rational64,
    pub short_sides: (Rational64, Rational64),
}

impl fmt::Display for TriangleWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.points;
        write!(
            f,
            "triangle inequality fails on ({a},{b},{c}): d({a},{c}) = {} > {} + {}",
            self.long_side, self.short_sides.0, self.short_sides.1
        )
    }
}

impl CanonicalKey {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl fmt::Display for CanonicalKey {
    /// Point count, a colon, then one base-36 digit per upper-triangle slot.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.bytes[0])?;
        for &b in &self.bytes[1..] {
            write!(f, "{}", char::from_digit(u32::from(b), 36).unwrap_or('?'))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entry {
    Dash,
    Number(Rational64),
    Letter(char),
}

fn parse_rational(tok: &str) -> Option<Rational64> {
    if let Some((num, den)) = tok.split_once('/') {
        let num: i64 = num.parse().ok()?;
        let den: i64 = den.parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Rational64::new(num, den));
    }
    if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().ok()?
        };
        let frac_num: i64 = frac.parse().ok()?;
        let den = 10i64.checked_pow(u32::try_from(frac.len()).ok()?)?;
        let num = int.checked_mul(den)?;
        let signed_frac = if negative { -frac_num } else { frac_num };
        return Some(Rational64::new(num.checked_add(signed_frac)?, den));
    }
    let num: i64 = tok.parse().ok()?;
    Some(Rational64::from_integer(num))
}

fn parse_entry(tok: &str) -> Option<Entry> {
    if tok == "-" {
        return Some(Entry::Dash);
    }
    if tok.len() == 1 {
        let c = tok.chars().next().unwrap();
        if c.is_ascii_alphabetic() {
            return Some(Entry::Letter(c));
        }
    }
    parse_rational(tok).map(Entry::Number)
}

impl ColoredSpace {
    /// Parses the shared input format: a size line followed by an `n`×`n`
    /// matrix of decimal rationals or single letters, with `0`/`-` on the
    /// diagonal and `#` comment lines.
    pub fn parse(text: &str) -> Result<Self, SpaceError> {
        let err = |line: usize, msg: String| SpaceError::Parse { line, msg };
        let mut rows: Vec<(usize, Vec<Entry>, Vec<String>)> = Vec::new();
        let mut size: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if size.is_none() {
                let n: usize = line
                    .parse()
                    .map_err(|_| err(line_no, format!("expected point count, found {line:?}")))?;
                if n == 0 {
                    return Err(err(line_no, "point count must be at least 1".into()));
                }
                if n > MAX_PARSE_POINTS {
                    return Err(err(
                        line_no,
                        format!("point count {n} exceeds the supported maximum {MAX_PARSE_POINTS}"),
                    ));
                }
                size = Some(n);
                continue;
            }
            let toks: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
            let mut entries = Vec::with_capacity(toks.len());
            for (col, tok) in toks.iter().enumerate() {
                let e = parse_entry(tok).ok_or_else(|| {
                    err(line_no, format!("entry {} ({tok:?}) is not a rational or a letter", col + 1))
                })?;
                entries.push(e);
            }
            rows.push((line_no, entries, toks));
        }
        let n = size.ok_or_else(|| err(1, "missing point count line".into()))?;
        if rows.len() != n {
            let line = rows.last().map_or(1, |r| r.0);
            return Err(err(
                line,
                format!("matrix is not square: expected {n} rows, found {}", rows.len()),
            ));
        }
        for (line_no, entries, _) in &rows {
            if entries.len() != n {
                return Err(err(
                    *line_no,
                    format!("matrix is not square: expected {n} entries, found {}", entries.len()),
                ));
            }
        }

        // Diagonal must be zero or dash; off-diagonal entries all letters or
        // all positive numbers; the matrix must be exactly symmetric.
        let mut letters = false;
        let mut numbers = false;
        for (r, (line_no, entries, toks)) in rows.iter().enumerate() {
            for (c, e) in entries.iter().enumerate() {
                if r == c {
                    match e {
                        Entry::Dash => {}
                        Entry::Number(v) if v.is_zero() => {}
                        _ => {
                            return Err(err(
                                *line_no,
                                format!("diagonal entry {} must be 0 or '-', found {:?}", c + 1, toks[c]),
                            ))
                        }
                    }
                    continue;
                }
                match e {
                    Entry::Dash => {
                        return Err(err(*line_no, format!("'-' is only allowed on the diagonal (entry {})", c + 1)))
                    }
                    Entry::Letter(_) => letters = true,
                    Entry::Number(v) => {
                        numbers = true;
                        if *v <= Rational64::zero() {
                            return Err(err(
                                *line_no,
                                format!("off-diagonal distance {} must be positive", toks[c]),
                            ));
                        }
                    }
                }
            }
        }
        if letters && numbers {
            return Err(err(rows[0].0, "matrix mixes letter and numeric entries".into()));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i].1[j] != rows[j].1[i] {
                    return Err(err(
                        rows[j].0,
                        format!(
                            "matrix is not symmetric: entry ({},{}) = {:?} but ({},{}) = {:?}",
                            i + 1, j + 1, rows[i].2[j], j + 1, i + 1, rows[j].2[i]
                        ),
                    ));
                }
            }
        }

        // Assign colors by first occurrence along the upper triangle.
        let mut colors = Vec::with_capacity(pair_count(n));
        let mut palette_num: Vec<Rational64> = Vec::new();
        let mut palette_letter: Vec<char> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let id = match &rows[i].1[j] {
                    Entry::Number(v) => match palette_num.iter().position(|p| p == v) {
                        Some(k) => k,
                        None => {
                            palette_num.push(*v);
                            palette_num.len() - 1
                        }
                    },
                    Entry::Letter(ch) => match palette_letter.iter().position(|p| p == ch) {
                        Some(k) => k,
                        None => {
                            palette_letter.push(*ch);
                            palette_letter.len() - 1
                        }
                    },
                    Entry::Dash => unreachable!(),
                };
                colors.push(id as ColorId);
            }
        }
        let num_colors = palette_num.len().max(palette_letter.len()) as u16;
        let values = if letters { None } else { Some(palette_num) };
        Ok(ColoredSpace { n, colors, num_colors, values })
    }

    /// Builds a space from an explicit symmetric distance matrix. Shared by
    /// the disjoint-union and simplex-product constructions.
    pub fn from_distance_matrix(d: &[Vec<Rational64>]) -> Result<Self, SpaceError> {
        let n = d.len();
        assert!(n >= 1 && d.iter().all(|row| row.len() == n), "matrix must be square");
        let mut colors = Vec::with_capacity(pair_count(n));
        let mut palette: Vec<Rational64> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                assert_eq!(d[i][j], d[j][i], "matrix must be symmetric");
                assert!(d[i][j] > Rational64::zero(), "distances must be positive");
                let id = match palette.iter().position(|p| *p == d[i][j]) {
                    Some(k) => k,
                    None => {
                        palette.push(d[i][j]);
                        palette.len() - 1
                    }
                };
                colors.push(id as ColorId);
            }
        }
        Ok(ColoredSpace {
            n,
            num_colors: palette.len() as u16,
            colors,
            values: Some(palette),
        })
    }

    /// Builds a space from a bare color word over the upper triangle. Color
    /// ids are renumbered to first-occurrence order; no numeric values.
    pub fn from_color_word(n: usize, word: &[ColorId]) -> Self {
        assert_eq!(word.len(), pair_count(n));
        let palette = word.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut map: Vec<Option<ColorId>> = vec![None; palette];
        let mut next: ColorId = 0;
        let mut colors = Vec::with_capacity(word.len());
        for &c in word {
            let slot = &mut map[c as usize];
            let id = match slot {
                Some(id) => *id,
                None => {
                    let id = next;
                    *slot = Some(id);
                    next += 1;
                    id
                }
            };
            colors.push(id);
        }
        ColoredSpace { n, colors, num_colors: next, values: None }
    }

    /// The space whose single color class is the edge set of `g` (non-edges
    /// form the other class). Empty and complete graphs yield the simplex.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.size();
        let word: Vec<ColorId> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| if g.edge(i, j) { 0 } else { 1 })
            .collect();
        Self::from_color_word(n, &word)
    }

    /// The `n`-point space with all pairwise distances equal.
    pub fn simplex(n: usize) -> Self {
        Self::from_color_word(n, &vec![0; pair_count(n)])
    }

    /// The 4-point rectangle: two side matchings and the diagonal matching,
    /// three colors in total. Vertices are numbered clockwise.
    pub fn rectangle() -> Self {
        let mut d = vec![vec![Rational64::zero(); 4]; 4];
        let set = |d: &mut Vec<Vec<Rational64>>, i: usize, j: usize, v: Rational64| {
            d[i][j] = v;
            d[j][i] = v;
        };
        let a = Rational64::from_integer(1);
        let b = Rational64::new(5, 2);
        let c = Rational64::from_integer(2);
        set(&mut d, 0, 1, a);
        set(&mut d, 2, 3, a);
        set(&mut d, 0, 2, b);
        set(&mut d, 1, 3, b);
        set(&mut d, 0, 3, c);
        set(&mut d, 1, 2, c);
        Self::from_distance_matrix(&d).expect("rectangle matrix is valid")
    }

    /// The 4-point square: side color plus diagonal color.
    pub fn square() -> Self {
        Self::build_simplex_product(2, 2, Rational64::from_integer(1), Rational64::new(3, 2))
            .expect("square parameters are valid")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> u16 {
        self.num_colors
    }

    pub fn color(&self, i: usize, j: usize) -> ColorId {
        self.colors[pair_index(self.n, i, j)]
    }

    pub fn color_word(&self) -> &[ColorId] {
        &self.colors
    }

    /// Numeric distance values indexed by color, when known.
    pub fn values(&self) -> Option<&[Rational64]> {
        self.values.as_deref()
    }

    pub fn distance(&self, i: usize, j: usize) -> Option<Rational64> {
        if i == j {
            return Some(Rational64::zero());
        }
        self.values.as_ref().map(|v| v[self.color(i, j) as usize])
    }

    /// One graph per color, in color order. Edge sets partition the pairs.
    pub fn color_decomposition(&self) -> Vec<(ColorId, Graph)> {
        let mut graphs: Vec<Graph> = (0..self.num_colors).map(|_| Graph::empty(self.n)).collect();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                graphs[self.color(i, j) as usize].set_edge(i, j, true);
            }
        }
        graphs
            .into_iter()
            .enumerate()
            .map(|(c, g)| (c as ColorId, g))
            .collect()
    }

    /// The color component of one color.
    pub fn component(&self, c: ColorId) -> Result<Graph, SpaceError> {
        self.merge_colors(&BTreeSet::from([c]))
    }

    /// Union graph of the selected color components: the component of the
    /// decolored space in which the selected colors are identified.
    pub fn merge_colors(&self, subset: &BTreeSet<ColorId>) -> Result<Graph, SpaceError> {
        if subset.is_empty() {
            return Err(SpaceError::EmptySubset);
        }
        if let Some(&c) = subset.iter().find(|&&c| c >= self.num_colors) {
            return Err(SpaceError::UnknownColor(c));
        }
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if subset.contains(&self.color(i, j)) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// The decolored space obtained by identifying colors according to the
    /// given partition of the color set.
    pub fn decolor(&self, partition: &[BTreeSet<ColorId>]) -> ColoredSpace {
        let mut class = vec![ColorId::MAX; self.num_colors as usize];
        for (k, block) in partition.iter().enumerate() {
            for &c in block {
                class[c as usize] = k as ColorId;
            }
        }
        assert!(class.iter().all(|&c| c != ColorId::MAX), "partition must cover all colors");
        let word: Vec<ColorId> = self.colors.iter().map(|&c| class[c as usize]).collect();
        Self::from_color_word(self.n, &word)
    }

    /// True iff the space has at most one color. One-point spaces count.
    pub fn is_simplex(&self) -> bool {
        self.num_colors <= 1
    }

    /// Applies a point relabeling: pair {i,j} of the result gets the color of
    /// {perm[i], perm[j]}, with colors renumbered to first-occurrence order.
    pub fn relabel(&self, perm: &[usize]) -> ColoredSpace {
        assert_eq!(perm.len(), self.n);
        let word: Vec<ColorId> = (0..self.n)
            .flat_map(|i| ((i + 1)..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.color(perm[i], perm[j]))
            .collect();
        Self::from_color_word(self.n, &word)
    }

    /// Lexicographic minimum over all point relabelings of the color word,
    /// colors renamed in first-occurrence order after each relabeling.
    pub fn canonical_form(&self) -> Result<CanonicalKey, SpaceError> {
        if self.n > MAX_EXHAUSTIVE_POINTS {
            return Err(SpaceError::TooLarge { n: self.n, max: MAX_EXHAUSTIVE_POINTS });
        }
        let n = self.n;
        let m = pair_count(n);
        let mut best: Option<Vec<u8>> = None;
        let mut word = vec![0u8; m];
        let mut rename = vec![u8::MAX; self.num_colors as usize + 1];
        crate::perm::for_each_permutation(n, |perm| {
            rename.iter_mut().for_each(|r| *r = u8::MAX);
            let mut next = 0u8;
            let mut better = best.is_none();
            let mut worse = false;
            let mut w = 0;
            'outer: for i in 0..n {
                for j in (i + 1)..n {
                    let c = self.color(perm[i], perm[j]) as usize;
                    if rename[c] == u8::MAX {
                        rename[c] = next;
                        next += 1;
                    }
                    word[w] = rename[c];
                    if !better {
                        let b = best.as_ref().unwrap()[w];
                        if word[w] > b {
                            worse = true;
                            break 'outer;
                        }
                        if word[w] < b {
                            better = true;
                        }
                    }
                    w += 1;
                }
            }
            if better && !worse {
                // Complete the word if the comparison short-circuited early.
                if w < m {
                    let mut idx = 0;
                    for i in 0..n {
                        for j in (i + 1)..n {
                            if idx >= w {
                                let c = self.color(perm[i], perm[j]) as usize;
                                if rename[c] == u8::MAX {
                                    rename[c] = next;
                                    next += 1;
                                }
                                word[idx] = rename[c];
                            }
                            idx += 1;
                        }
                    }
                }
                best = Some(word.clone());
            }
        });
        let mut bytes = vec![n as u8];
        bytes.extend_from_slice(&best.unwrap_or_default());
        Ok(CanonicalKey { bytes })
    }

    /// Checks every triple against the triangle inequality. The classification
    /// itself never depends on this; it is a diagnostic for numeric inputs.
    pub fn validate_metric(&self) -> Result<Vec<TriangleWarning>, SpaceError> {
        let values = self.values.as_ref().ok_or(SpaceError::NoValues)?;
        let d = |i: usize, j: usize| values[self.color(i, j) as usize];
        let mut warnings = Vec::new();
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    // For each triple, test each side against the sum of the
                    // other two; report the triple once via its longest side.
                    let checks = [
                        ((a, b, c), d(a, c), (d(a, b), d(b, c))),
                        ((b, a, c), d(b, c), (d(a, b), d(a, c))),
                        ((a, c, b), d(a, b), (d(a, c), d(b, c))),
                    ];
                    for (points, long, shorts) in checks {
                        if long > shorts.0 + shorts.1 {
                            warnings.push(TriangleWarning { points, long_side: long, short_sides: shorts });
                        }
                    }
                }
            }
        }
        Ok(warnings)
    }

    /// Metric disjoint union: distance `d_i` inside block `i` and `D(i,j)`
    /// between blocks. Requires `2·D(i,j) >= d_i(p,q)` throughout.
    pub fn build_disjoint_union(
        macrospace: &ColoredSpace,
        micros: &[ColoredSpace],
    ) -> Result<ColoredSpace, SpaceError> {
        if macrospace.size() != micros.len() {
            return Err(SpaceError::BlockCountMismatch {
                macro_points: macrospace.size(),
                micro_count: micros.len(),
            });
        }
        // Zero-color spaces (single points) have no distances to carry.
        let carries_values = |s: &ColoredSpace| s.values().is_some() || s.num_colors() == 0;
        if !carries_values(macrospace) || !micros.iter().all(carries_values) {
            return Err(SpaceError::NoValues);
        }
        let k = micros.len();
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let big = macrospace.distance(i, j).unwrap();
                for p in 0..micros[i].size() {
                    for q in (p + 1)..micros[i].size() {
                        let small = micros[i].distance(p, q).unwrap();
                        if big * 2 < small {
                            return Err(SpaceError::MacroMicroCondition {
                                i, j, p, q,
                                lhs: big * 2,
                                rhs: small,
                            });
                        }
                    }
                }
            }
        }
        let offsets: Vec<usize> = micros
            .iter()
            .scan(0, |acc, m| {
                let o = *acc;
                *acc += m.size();
                Some(o)
            })
            .collect();
        let total: usize = micros.iter().map(ColoredSpace::size).sum();
        let mut d = vec![vec![Rational64::zero(); total]; total];
        for i in 0..k {
            for p in 0..micros[i].size() {
                for q in 0..micros[i].size() {
                    if p != q {
                        d[offsets[i] + p][offsets[i] + q] = micros[i].distance(p, q).unwrap();
                    }
                }
            }
            for j in (i + 1)..k {
                let big = macrospace.distance(i, j).unwrap();
                for p in 0..micros[i].size() {
                    for q in 0..micros[j].size() {
                        d[offsets[i] + p][offsets[j] + q] = big;
                        d[offsets[j] + q][offsets[i] + p] = big;
                    }
                }
            }
        }
        Self::from_distance_matrix(&d)
    }

    /// Product of simplices: `m` blocks of `s` points, distance `a` inside a
    /// block and `big_a` between blocks. Exactly two colors.
    pub fn build_simplex_product(
        m: usize,
        s: usize,
        big_a: Rational64,
        a: Rational64,
    ) -> Result<ColoredSpace, SpaceError> {
        if m < 2 || s < 2 {
            return Err(SpaceError::BadProductParams(format!(
                "need at least 2 blocks of at least 2 points, got {m} blocks of {s}"
            )));
        }
        if big_a <= Rational64::zero() || a <= Rational64::zero() {
            return Err(SpaceError::BadProductParams("distances must be positive".into()));
        }
        if big_a == a {
            return Err(SpaceError::BadProductParams("block and cross distances must differ".into()));
        }
        if big_a * 2 < a {
            return Err(SpaceError::BadProductParams(format!("2A = {} < a = {a}", big_a * 2)));
        }
        let n = m * s;
        let mut d = vec![vec![Rational64::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    d[i][j] = if i / s == j / s { a } else { big_a };
                }
            }
        }
        Self::from_distance_matrix(&d)
    }
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.set_edge(i, j, true);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.set_edge(i, (i + 1) % n, true);
        }
        g
    }

    /// A perfect matching on `n` points (`n` even): edges (0,1), (2,3), ...
    pub fn perfect_matching(n: usize) -> Self {
        assert!(n % 2 == 0, "perfect matchings need an even vertex count");
        let mut g = Graph::empty(n);
        for i in (0..n).step_by(2) {
            g.set_edge(i, i + 1, true);
        }
        g
    }

    /// `m` disjoint complete blocks of `s` vertices each.
    pub fn disjoint_cliques(m: usize, s: usize) -> Self {
        let mut g = Graph::empty(m * s);
        for b in 0..m {
            for i in 0..s {
                for j in (i + 1)..s {
                    g.set_edge(b * s + i, b * s + j, true);
                }
            }
        }
        g
    }

    /// Disjoint cycles of the given lengths (each at least 3).
    pub fn disjoint_cycles(lengths: &[usize]) -> Self {
        let n: usize = lengths.iter().sum();
        let mut g = Graph::empty(n);
        let mut base = 0;
        for &len in lengths {
            assert!(len >= 3);
            for i in 0..len {
                g.set_edge(base + i, base + (i + 1) % len, true);
            }
            base += len;
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.set_edge(i, j, true);
        }
        g
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn set_edge(&mut self, i: usize, j: usize, present: bool) {
        assert!(i != j, "no loops");
        self.adj[i * self.n + j] = present;
        self.adj[j * self.n + i] = present;
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.edge(v, u)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_regular(&self) -> bool {
        let degs = self.degrees();
        degs.windows(2).all(|w| w[0] == w[1])
    }

    /// Complement within the complete graph on the same vertices.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                g.set_edge(i, j, !self.edge(i, j));
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in 0..self.n {
                    if self.edge(v, u) && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// If the graph is a single spanning cycle, returns the vertices in cycle
    /// order starting from 0 toward its smaller neighbor.
    pub fn hamiltonian_cycle_order(&self) -> Option<Vec<usize>> {
        if self.n < 3 || !self.degrees().iter().all(|&d| d == 2) || !self.is_connected() {
            return None;
        }
        let mut order = vec![0usize];
        let nbrs: Vec<usize> = (1..self.n).filter(|&u| self.edge(0, u)).collect();
        let mut prev = 0;
        let mut cur = nbrs[0];
        while cur != 0 {
            order.push(cur);
            let next = (0..self.n)
                .find(|&u| u != prev && self.edge(cur, u))
                .expect("2-regular vertex has a second neighbor");
            prev = cur;
            cur = next;
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.edge(perm[i], perm[j]) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Canonical key for graphs: lexicographic minimum of the adjacency word
    /// over relabelings. No color renaming, so a graph and its complement get
    /// distinct keys.
    pub fn canonical_key(&self) -> Result<CanonicalKey, SpaceError> {
        if self.n > MAX_EXHAUSTIVE_POINTS {
            return Err(SpaceError::TooLarge { n: self.n, max: MAX_EXHAUSTIVE_POINTS });
        }
        let n = self.n;
        let m = pair_count(n);
        let mut best: Option<Vec<u8>> = None;
        let mut word = vec![0u8; m];
        crate::perm::for_each_permutation(n, |perm| {
            let mut better = best.is_none();
            let mut w = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    word[w] = u8::from(self.edge(perm[i], perm[j]));
                    if !better {
                        let b = best.as_ref().unwrap()[w];
                        if word[w] > b {
                            return;
                        }
                        if word[w] < b {
                            better = true;
                        }
                    }
                    w += 1;
                }
            }
            if better {
                best = Some(word.clone());
            }
        });
        let mut bytes = vec![n as u8];
        bytes.extend_from_slice(&best.unwrap_or_default());
        Ok(CanonicalKey { bytes })
    }
}
