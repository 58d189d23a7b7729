use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::{RatMatrix, RatVector};

/// A clutter on vertices `0..n`: non-empty, pairwise distinct edges, none
/// contained in another, covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clutter {
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
}

impl Clutter {
    /// Clutter on `n` vertices labelled `1..=n`.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_labels((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for e in edges {
            let set: BTreeSet<usize> = e.iter().copied().collect();
            if set.is_empty() {
                return Err(Error::ClutterAxiom("empty edge".into()));
            }
            if set.len() != e.len() {
                return Err(Error::MalformedInput(format!("edge {e:?} repeats a vertex")));
            }
            if let Some(&v) = set.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedInput(format!(
                    "edge references vertex {v} outside 0..{n}"
                )));
            }
            normalized.push(set.into_iter().collect());
        }
        for (i, a) in normalized.iter().enumerate() {
            for b in &normalized[i + 1..] {
                if a == b {
                    return Err(Error::ClutterAxiom(format!("repeated edge {a:?}")));
                }
                if is_subset(a, b) || is_subset(b, a) {
                    return Err(Error::ClutterAxiom(format!(
                        "edge {a:?} and edge {b:?} are nested"
                    )));
                }
            }
        }
        let mut covered = vec![false; n];
        for e in &normalized {
            for &v in e {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::ClutterAxiom(format!(
                "vertex {} lies in no edge",
                labels[v]
            )));
        }
        Ok(Clutter {
            labels,
            edges: normalized,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Characteristic vectors `v_1..v_q` of the edges, in input order.
    pub fn columns(&self) -> Vec<Vec<i64>> {
        self.edges
            .iter()
            .map(|e| {
                let mut v = vec![0; self.n()];
                for &i in e {
                    v[i] = 1;
                }
                v
            })
            .collect()
    }

    /// The `n x q` incidence matrix whose columns are the edge vectors.
    pub fn incidence_matrix(&self) -> RatMatrix {
        let cols: Vec<RatVector> = self
            .columns()
            .iter()
            .map(|c| RatVector::from_ints(c))
            .collect();
        RatMatrix::from_columns(&cols).expect("columns share the vertex count")
    }

    /// The common edge size, when every edge has the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let d = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == d).then_some(d)
    }

    /// All `alpha` in `N^n` with `alpha <= v_i` for some edge vector `v_i`,
    /// deduplicated and sorted lexicographically.
    pub fn closure_generators(&self) -> Vec<Vec<i64>> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            for sub in 0u64..1 << e.len() {
                let mut a = vec![0; self.n()];
                for (k, &v) in e.iter().enumerate() {
                    if sub >> k & 1 == 1 {
                        a[v] = 1;
                    }
                }
                out.insert(a);
            }
        }
        out.into_iter().collect()
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::families;
    use crate::exact::Rational;

    #[test]
    fn axioms_are_enforced() {
        assert!(matches!(
            Clutter::new(2, vec![vec![0], vec![0, 1]]),
            Err(Error::ClutterAxiom(_))
        ));
        assert!(matches!(
            Clutter::new(3, vec![vec![0, 1]]),
            Err(Error::ClutterAxiom(_))
        ));
        assert!(matches!(
            Clutter::new(2, vec![vec![0, 1], vec![1, 0]]),
            Err(Error::ClutterAxiom(_))
        ));
        assert!(Clutter::new(2, vec![vec![]]).is_err());
        assert!(Clutter::new(2, vec![vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn incidence_columns() {
        let c = families::four_edge_clutter_on_eight_vertices();
        assert_eq!(
            c.columns(),
            vec![
                vec![0, 0, 1, 1, 0, 1, 0, 1],
                vec![0, 1, 0, 0, 1, 1, 1, 0],
                vec![1, 0, 0, 1, 1, 0, 0, 1],
                vec![1, 1, 1, 0, 0, 0, 0, 1],
            ]
        );
        let k2 = families::complete(2).to_clutter().unwrap();
        assert_eq!(k2.incidence_matrix().column(0), RatVector::from_ints(&[1, 1]));
        let p3 = families::path(3).to_clutter().unwrap().incidence_matrix();
        assert_eq!((p3.rows(), p3.cols()), (3, 2));
        assert_eq!(p3[(1, 0)], Rational::one());
        assert_eq!(p3.column(1), RatVector::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn closure_of_small_clutters() {
        let k2 = families::complete(2).to_clutter().unwrap();
        assert_eq!(
            k2.closure_generators(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let p3 = families::path(3).to_clutter().unwrap();
        assert_eq!(
            p3.closure_generators(),
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![1, 0, 0],
                vec![1, 1, 0]
            ]
        );
    }

    #[test]
    fn closure_of_eight_vertex_clutter() {
        let c = families::four_edge_clutter_on_eight_vertices();
        // Oracle: scan all of {0,1}^8 for vectors lying under some column.
        let cols = c.columns();
        let mut expected = Vec::new();
        for m in 0u32..256 {
            let a: Vec<i64> = (0..8).map(|i| i64::from(m >> (7 - i) & 1)).collect();
            if cols.iter().any(|v| a.iter().zip(v).all(|(x, y)| x <= y)) {
                expected.push(a);
            }
        }
        let got = c.closure_generators();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 50);
        for v in &cols {
            assert!(got.contains(v));
        }
    }
}
