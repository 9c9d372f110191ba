//! Named reference spaces and graphs used by the verification suites and the
//! test harness.

use crate::space::{ColorId, ColoredSpace, Graph};

/// The vertex-transitive graphs on `n <= 7` vertices, by construction rather
/// than enumeration: the empty and complete graphs, the n-cycles, the
/// matchings and clique unions, and their complements.
pub fn vertex_transitive_graphs(n: usize) -> Vec<(&'static str, Graph)> {
    match n {
        1 => vec![("point", Graph::empty(1))],
        2 => vec![("2 points", Graph::empty(2)), ("segment", Graph::complete(2))],
        3 => vec![("3 points", Graph::empty(3)), ("triangle", Graph::complete(3))],
        4 => vec![
            ("4 points", Graph::empty(4)),
            ("2 segments", Graph::disjoint_cliques(2, 2)),
            ("square", Graph::cycle(4)),
            ("tetrahedron", Graph::complete(4)),
        ],
        5 => vec![
            ("5 points", Graph::empty(5)),
            ("5-cycle", Graph::cycle(5)),
            ("5-simplex", Graph::complete(5)),
        ],
        6 => vec![
            ("6 points", Graph::empty(6)),
            ("3 segments", Graph::disjoint_cliques(3, 2)),
            ("6-cycle", Graph::cycle(6)),
            ("2 triangles", Graph::disjoint_cliques(2, 3)),
            ("prism (6-cycle complement)", Graph::cycle(6).complement()),
            ("K_{3,3} (2 triangles complement)", Graph::disjoint_cliques(2, 3).complement()),
            ("octahedron (3 segments complement)", Graph::disjoint_cliques(3, 2).complement()),
            ("6-simplex", Graph::complete(6)),
        ],
        7 => vec![
            ("7 points", Graph::empty(7)),
            ("7-cycle", Graph::cycle(7)),
            ("7-cycle complement", Graph::cycle(7).complement()),
            ("7-simplex", Graph::complete(7)),
        ],
        _ => panic!("census is only known for n <= 7"),
    }
}

/// The census graphs for all sizes up to `max_n`, as 2-color spaces.
pub fn homogeneous_spaces(max_n: usize) -> Vec<(String, ColoredSpace)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (name, g) in vertex_transitive_graphs(n) {
            out.push((format!("{name} (n={n})"), ColoredSpace::from_graph(&g)));
        }
    }
    out
}

/// 6 points, colors {C6, 2 triangles, 3 long diagonals}: a hexagon, the two
/// inscribed triangles, and the perfect matching of opposite vertices.
pub fn six_point_three_color_space() -> ColoredSpace {
    let n = 6;
    let hexagon = Graph::cycle(6);
    let triangles = Graph::from_edges(6, &[(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)]);
    let mut word = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            word.push(if hexagon.edge(i, j) {
                0
            } else if triangles.edge(i, j) {
                1
            } else {
                2
            });
        }
    }
    ColoredSpace::from_color_word(n, &word)
}

/// K6 split into the five round-robin perfect matchings (a 1-factorization).
pub fn one_factorization_space() -> ColoredSpace {
    let n = 6;
    let mut color_of = vec![vec![0 as ColorId; n]; n];
    for r in 0..5usize {
        // Circle method: player 5 fixed, the rest rotate.
        let pos = |k: usize| (r + k) % 5;
        for (i, j) in [(pos(0), 5), (pos(1), pos(4)), (pos(2), pos(3))] {
            color_of[i][j] = r as ColorId;
            color_of[j][i] = r as ColorId;
        }
    }
    let mut word = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            word.push(color_of[i][j]);
        }
    }
    ColoredSpace::from_color_word(n, &word)
}

/// 7 points with a C3 ⊔ C4 color (plus the complement color).
pub fn bicycle_space() -> ColoredSpace {
    ColoredSpace::from_graph(&Graph::disjoint_cycles(&[3, 4]))
}
