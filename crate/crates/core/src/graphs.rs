//! Definitional ground truth: wheel graphs as adjacency lists, BFS distances,
//! eccentricities, and the eccentricity matrix computed straight from its
//! definition.
//!
//! Vertex index `i` is the wheel vertex `v_{i+1}`; the hub is index 0 and the
//! rim vertices `1..n` are joined into a cycle in index order.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratq::{int, MatrixQ, Rational, VectorQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WheelSpec {
    pub n: usize,
    pub residue: u8,
    pub parity: u8,
}

impl WheelSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::OutOfRange {
                n,
                requirement: "a wheel needs n >= 4 vertices",
            });
        }
        Ok(Self {
            n,
            residue: (n % 3) as u8,
            parity: (n % 2) as u8,
        })
    }

    pub fn is_invertible_class(&self) -> bool {
        self.residue != 1
    }
}

/// Undirected simple graph stored as sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidDimension(0));
        }
        let mut adjacency = alloc::vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count || a == b {
                return Err(Error::IndexOutOfRange {
                    index: a.max(b),
                    requirement: "edge endpoints must be distinct vertices of the graph",
                });
            }
            if !adjacency[a].contains(&b) {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    /// One `"i j"` line per edge, 1-indexed.
    pub fn edge_list(&self) -> String {
        let mut s = String::new();
        for (a, b) in self.edges() {
            let _ = writeln!(s, "{} {}", a + 1, b + 1);
        }
        s
    }

    fn without_edge(&self, a: usize, b: usize) -> Self {
        let mut adjacency = self.adjacency.clone();
        adjacency[a].retain(|&x| x != b);
        adjacency[b].retain(|&x| x != a);
        Self { adjacency }
    }
}

pub fn build_wheel(n: usize) -> Result<Graph> {
    WheelSpec::new(n)?;
    let mut edges = Vec::with_capacity(2 * (n - 1));
    for v in 1..n {
        edges.push((0, v));
        let next = if v + 1 < n { v + 1 } else { 1 };
        edges.push((v, next));
    }
    Graph::from_edges(n, &edges)
}

/// Removes the rim edge `v_2 v_n` (indices 1 and n-1) from a wheel with n >= 5.
pub fn delete_cycle_edge(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    if n < 4 || *g != build_wheel(n)? {
        return Err(Error::NotWheel);
    }
    if n < 5 {
        return Err(Error::OutOfRange {
            n,
            requirement: "deleting a rim edge needs n >= 5",
        });
    }
    Ok(g.without_edge(1, n - 1))
}

/// All-pairs shortest path lengths by one BFS per source vertex.
pub fn bfs_distances(g: &Graph) -> Result<MatrixQ> {
    let n = g.vertex_count();
    let mut dist = alloc::vec![usize::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == usize::MAX {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.contains(&usize::MAX) {
            return Err(Error::Disconnected);
        }
    }
    MatrixQ::from_fn(n, n, |i, j| int(dist[i * n + j] as i64))
}

/// Row maxima of a distance matrix.
pub fn eccentricities(d: &MatrixQ) -> Result<VectorQ> {
    if !d.is_square() {
        return Err(Error::NotSquare {
            rows: d.rows(),
            cols: d.cols(),
        });
    }
    VectorQ::new(
        (0..d.rows())
            .map(|i| d.row(i).iter().max().cloned().unwrap_or_else(Rational::zero))
            .collect(),
    )
}

/// Keeps `d(i, j)` exactly where it equals `min(e(i), e(j))`.
pub fn eccentricity_matrix_definitional(d: &MatrixQ) -> Result<MatrixQ> {
    let ecc = eccentricities(d)?;
    let n = d.rows();
    MatrixQ::from_fn(n, n, |i, j| {
        let dij = d.get(i, j);
        let bound = core::cmp::min(ecc.get(i), ecc.get(j));
        if dij == bound {
            dij.clone()
        } else {
            Rational::zero()
        }
    })
}

/// `E(W_n)` computed from BFS distances.
pub fn wheel_ecc_definitional(n: usize) -> Result<MatrixQ> {
    eccentricity_matrix_definitional(&bfs_distances(&build_wheel(n)?)?)
}

/// `E(W_n - e)` computed from BFS distances.
pub fn wheel_minus_edge_ecc_definitional(n: usize) -> Result<MatrixQ> {
    eccentricity_matrix_definitional(&bfs_distances(&delete_cycle_edge(&build_wheel(n)?)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn wheel_four_is_complete() {
        let g = build_wheel(4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g.has_edge(a, b), a != b);
            }
        }
        let d = bfs_distances(&g).unwrap();
        let expected = MatrixQ::ones(4, 4).unwrap().sub(&MatrixQ::identity(4).unwrap()).unwrap();
        assert_eq!(d, expected);
        assert_eq!(eccentricities(&d).unwrap(), VectorQ::ones(4).unwrap());
        assert_eq!(eccentricity_matrix_definitional(&d).unwrap(), d);
    }

    #[test]
    fn wheel_seven_degrees() {
        assert_eq!(build_wheel(7).unwrap().degrees(), vec![6, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn wheel_five_edges() {
        let g = build_wheel(5).unwrap();
        let expected = vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)];
        assert_eq!(g.edges(), expected);
        assert_eq!(
            g.edge_list(),
            "1 2\n1 3\n1 4\n1 5\n2 3\n2 5\n3 4\n4 5\n"
        );
    }

    #[test]
    fn small_orders_rejected() {
        assert!(matches!(build_wheel(3), Err(Error::OutOfRange { n: 3, .. })));
        let w4 = build_wheel(4).unwrap();
        assert!(matches!(delete_cycle_edge(&w4), Err(Error::OutOfRange { n: 4, .. })));
        let path = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(delete_cycle_edge(&path), Err(Error::NotWheel));
    }

    #[test]
    fn delete_edge_on_w5() {
        let g = delete_cycle_edge(&build_wheel(5).unwrap()).unwrap();
        assert_eq!(g.degrees(), vec![4, 2, 3, 3, 2]);
        assert!(!g.has_edge(1, 4));
    }

    #[test]
    fn minus_edge_distance_and_eccentricities() {
        for n in 5..=15 {
            let w = build_wheel(n).unwrap();
            let we = delete_cycle_edge(&w).unwrap();
            let d = bfs_distances(&we).unwrap();
            assert_eq!(d.get(1, n - 1), &int(2));
            assert_eq!(
                eccentricities(&d).unwrap(),
                eccentricities(&bfs_distances(&w).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn wheel_distance_block_form() {
        // D = [[0, e'], [e, cir(d')]] with d = (0, 1, 2, ..., 2, 1).
        for n in 5..=12 {
            let d = bfs_distances(&build_wheel(n).unwrap()).unwrap();
            let m = n - 1;
            for j in 1..n {
                assert_eq!(d.get(0, j), &int(1));
            }
            for i in 0..m {
                for j in 0..m {
                    let k = (j + m - i) % m;
                    let expected = match k {
                        0 => 0,
                        1 => 1,
                        k if k == m - 1 => 1,
                        _ => 2,
                    };
                    assert_eq!(d.get(i + 1, j + 1), &int(expected), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn wheel_eccentricities() {
        for n in 5..=12 {
            let d = bfs_distances(&build_wheel(n).unwrap()).unwrap();
            let e = eccentricities(&d).unwrap();
            assert_eq!(e.get(0), &int(1));
            assert!(e.iter().skip(1).all(|x| *x == int(2)));
        }
    }

    #[test]
    fn eccentricity_matrix_w5_by_hand() {
        let e = wheel_ecc_definitional(5).unwrap();
        let expected = MatrixQ::from_i64_rows(&[
            &[0, 1, 1, 1, 1],
            &[1, 0, 0, 2, 0],
            &[1, 0, 0, 0, 2],
            &[1, 2, 0, 0, 0],
            &[1, 0, 2, 0, 0],
        ])
        .unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn eccentricity_row_sums() {
        for n in 5..=20 {
            let sums = wheel_ecc_definitional(n).unwrap().row_sums();
            assert_eq!(sums.get(0), &int(n as i64 - 1));
            for i in 1..n {
                assert_eq!(sums.get(i), &int(2 * (n as i64 - 4) + 1));
            }
        }
    }

    #[test]
    fn minus_edge_is_leading_principal_submatrix() {
        for n in 5..=20 {
            let small = wheel_minus_edge_ecc_definitional(n).unwrap();
            let big = wheel_minus_edge_ecc_definitional(n + 1).unwrap();
            assert_eq!(big.sub_block(0, 0, n, n).unwrap(), small);
        }
    }

    #[test]
    fn distances_are_a_metric() {
        for n in 4..=10 {
            for g in [build_wheel(n).unwrap()]
                .into_iter()
                .chain((n >= 5).then(|| delete_cycle_edge(&build_wheel(n).unwrap()).unwrap()))
            {
                let d = bfs_distances(&g).unwrap();
                assert!(d.is_symmetric());
                for i in 0..n {
                    assert!(d.get(i, i).is_zero());
                    for j in 0..n {
                        for k in 0..n {
                            assert!(d.get(i, j) <= &(d.get(i, k) + d.get(k, j)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn relabeling_permutes_eccentricities() {
        // Reverse the labels of W_8 and check the eccentricity vector follows.
        let n = 8;
        let w = build_wheel(n).unwrap();
        let relabel = |v: usize| n - 1 - v;
        let edges: Vec<_> = w.edges().into_iter().map(|(a, b)| (relabel(a), relabel(b))).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        let ew = eccentricities(&bfs_distances(&w).unwrap()).unwrap();
        let eh = eccentricities(&bfs_distances(&h).unwrap()).unwrap();
        for v in 0..n {
            assert_eq!(ew.get(v), eh.get(relabel(v)));
        }
    }

    #[test]
    fn disconnected_graph_reported() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_distances(&g), Err(Error::Disconnected));
    }

    #[test]
    fn wheel_spec_classes() {
        let s = WheelSpec::new(10).unwrap();
        assert_eq!((s.residue, s.parity), (1, 0));
        assert!(!s.is_invertible_class());
        assert!(WheelSpec::new(3).is_err());
    }
}
