//! Named graphs and clutters used as fixtures and examples.

use super::{Clutter, Graph};

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// The cycle `0-1-...-(n-1)-0`, for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

/// The path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Graph::new(a + b, &edges).unwrap()
}

/// Star with centre `0` and `k` leaves.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Triangles `{0,1,2}` and `{3,4,5}` joined by the edge `2-3`.
pub fn two_triangles_bridged() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
}

/// Triangles `{0,1,2}` and `{3,4,5}` joined by the path `2-6-3`.
pub fn two_triangles_with_path() -> Graph {
    Graph::new(
        7,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 6), (6, 3)],
    )
    .unwrap()
}

/// Uniform clutter on eight vertices with edges `{3,4,6,8}`, `{2,5,6,7}`,
/// `{1,4,5,8}`, `{1,2,3,8}` (labels are 1-based). Its edge vectors form a
/// Hilbert basis while neither rounding direction holds.
pub fn four_edge_clutter_on_eight_vertices() -> Clutter {
    let edges = [[3, 4, 6, 8], [2, 5, 6, 7], [1, 4, 5, 8], [1, 2, 3, 8]];
    Clutter::new(
        8,
        edges
            .iter()
            .map(|e| e.iter().map(|&v| v - 1).collect())
            .collect(),
    )
    .unwrap()
}
