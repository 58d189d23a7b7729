use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exact::integer;
use crate::exact::{RatMatrix, RatVector, Rational};

/// Vertices of `P = {x : x >= 0, xA <= 1}`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexSet {
    pub vertices: Vec<RatVector>,
    pub contains_origin: bool,
}

impl VertexSet {
    pub fn nonzero(&self) -> impl Iterator<Item = &RatVector> {
        self.vertices.iter().filter(|v| !v.is_zero())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// The constraints `<col_j, x> <= rhs_j` with integer data.
struct Scaled {
    n: usize,
    cols: Vec<Vec<i64>>,
    rhs: Vec<i64>,
}

fn scale_columns(a: &RatMatrix) -> Result<Scaled> {
    let n = a.rows();
    for i in 0..n {
        if (0..a.cols()).all(|j| a[(i, j)].is_zero()) {
            return Err(Error::Unbounded(format!(
                "row {i} of the matrix is zero, so coordinate {i} is unconstrained"
            )));
        }
    }
    let mut cols = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..a.cols() {
        let col = a.column(j);
        if col.iter().any(Rational::is_negative) {
            return Err(Error::MalformedInput(format!("column {j} has a negative entry")));
        }
        if col.is_zero() {
            continue;
        }
        let l = col
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(&x.denom()));
        let to_i64 = |x: num_bigint::BigInt| x.to_i64().ok_or(Error::Overflow("scaling constraint columns"));
        let scaled = col
            .iter()
            .map(|x| to_i64(x.numer() * (&l / x.denom())))
            .collect::<Result<Vec<_>>>()?;
        cols.push(scaled);
        rhs.push(to_i64(l)?);
    }
    // With x >= 0 a column dominated by another is redundant.
    let keep: Vec<bool> = (0..cols.len())
        .map(|i| {
            !(0..cols.len()).any(|k| {
                k != i
                    && dominates(&cols[k], rhs[k], &cols[i], rhs[i])
                    && (!dominates(&cols[i], rhs[i], &cols[k], rhs[k]) || k < i)
            })
        })
        .collect();
    let mut it = keep.iter();
    cols.retain(|_| *it.next().unwrap());
    let mut it = keep.iter();
    rhs.retain(|_| *it.next().unwrap());
    Ok(Scaled { n, cols, rhs })
}

/// `a / ra >= b / rb` componentwise.
fn dominates(a: &[i64], ra: i64, b: &[i64], rb: i64) -> bool {
    a.iter()
        .zip(b)
        .all(|(&x, &y)| x as i128 * rb as i128 >= y as i128 * ra as i128)
}

/// Calls `f` on each `k`-subset of `0..m` in lexicographic order.
pub(crate) fn for_each_combination<F>(m: usize, k: usize, mut f: F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if k > m {
        return Ok(());
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        f(&c)?;
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + m - k) else {
            return Ok(());
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// All vertices of `P = {x : x >= 0, xA <= 1}`, the origin included.
///
/// A vertex with support `S` is the unique solution of `|S|` tight column
/// constraints restricted to `S`; the search runs over supports and, for
/// each, over subsets of the distinct restricted columns, keeping solutions
/// that are positive on `S` and feasible.
pub fn polytope_vertices(a: &RatMatrix, budget: &Budget) -> Result<VertexSet> {
    let sc = scale_columns(a)?;
    let n = sc.n;
    if n >= 63 {
        return Err(Error::MalformedInput("too many coordinates for vertex enumeration".into()));
    }
    let mut meter = budget.meter("enumerating polytope bases");
    let mut found: BTreeSet<RatVector> = BTreeSet::new();
    found.insert(RatVector::zeros(n));
    for mask in 1u64..1 << n {
        let support: Vec<usize> = crate::combinatorics::bits(mask).collect();
        let k = support.len();
        // distinct nonzero restrictions, normalised by the gcd with the rhs
        let mut seen = BTreeSet::new();
        let mut cand: Vec<(Vec<i64>, i64)> = Vec::new();
        for (col, &r) in sc.cols.iter().zip(&sc.rhs) {
            let mut row: Vec<i64> = support.iter().map(|&s| col[s]).collect();
            if row.iter().all(|&x| x == 0) {
                continue;
            }
            row.push(r);
            integer::primitive(&mut row);
            if seen.insert(row.clone()) {
                let r = row.pop().unwrap();
                cand.push((row, r));
            }
        }
        // a strictly dominated restriction is slack at every point with this support
        let cand: Vec<(Vec<i64>, i64)> = cand
            .iter()
            .filter(|(a, ra)| !cand.iter().any(|(b, rb)| (b, rb) != (a, ra) && dominates(b, *rb, a, *ra)))
            .cloned()
            .collect();
        for_each_combination(cand.len(), k, |t| {
            meter.tick()?;
            let rows: Vec<&[i64]> = t.iter().map(|&i| cand[i].0.as_slice()).collect();
            let rhs: Vec<i64> = t.iter().map(|&i| cand[i].1).collect();
            let Some((mut num, mut d)) = integer::solve(&rows, &rhs)? else {
                return Ok(());
            };
            if d < 0 {
                d = -d;
                for x in &mut num {
                    *x = -*x;
                }
            }
            if num.iter().any(|&x| x <= 0) {
                return Ok(());
            }
            let feasible = sc.cols.iter().zip(&sc.rhs).all(|(col, &r)| {
                let lhs: i128 = support
                    .iter()
                    .zip(&num)
                    .map(|(&s, &x)| col[s] as i128 * x)
                    .sum();
                lhs <= r as i128 * d
            });
            if feasible {
                let mut v = RatVector::zeros(n);
                for (&s, &x) in support.iter().zip(&num) {
                    v[s] = Rational::from_i128(x, d);
                }
                found.insert(v);
            }
            Ok(())
        })?;
    }
    Ok(VertexSet {
        vertices: found.into_iter().collect(),
        contains_origin: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::families;
    use crate::exact::{solve_linear, LinearSolution};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Oracle: every n-subset of the n + q bounding hyperplanes, solved with
    /// rational elimination.
    fn brute_force(a: &RatMatrix) -> Vec<RatVector> {
        let n = a.rows();
        let mut planes: Vec<(RatVector, Rational)> = (0..n)
            .map(|i| (RatVector::unit(n, i), Rational::zero()))
            .collect();
        for j in 0..a.cols() {
            planes.push((a.column(j), Rational::one()));
        }
        let mut out = BTreeSet::new();
        for_each_combination(planes.len(), n, |t| {
            let rows: Vec<RatVector> = t.iter().map(|&i| planes[i].0.clone()).collect();
            let rhs = RatVector::new(t.iter().map(|&i| planes[i].1.clone()).collect());
            let m = RatMatrix::from_rows(&rows).unwrap();
            if let LinearSolution::Unique(x) = solve_linear(&m, &rhs).unwrap() {
                let ok = x.is_nonnegative()
                    && (0..a.cols()).all(|j| a.column(j).dot(&x) <= Rational::one());
                if ok {
                    out.insert(x);
                }
            }
            Ok(())
        })
        .unwrap();
        out.into_iter().collect()
    }

    fn verts(g: &crate::combinatorics::Graph) -> Vec<RatVector> {
        let a = g.to_clutter().unwrap().incidence_matrix();
        polytope_vertices(&a, &Budget::default()).unwrap().vertices
    }

    #[test]
    fn small_graphs() {
        let int = |v: &[i64]| RatVector::from_ints(v);
        assert_eq!(
            verts(&families::complete(2)),
            vec![int(&[0, 0]), int(&[0, 1]), int(&[1, 0])]
        );
        let k3 = verts(&families::complete(3));
        assert_eq!(k3.len(), 5);
        assert!(k3.contains(&RatVector::new(vec![q(1, 2); 3])));
        assert_eq!(
            verts(&families::path(3)),
            vec![
                int(&[0, 0, 0]),
                int(&[0, 0, 1]),
                int(&[0, 1, 0]),
                int(&[1, 0, 0]),
                int(&[1, 0, 1])
            ]
        );
    }

    #[test]
    fn brute_force_matches_on_fixtures() {
        for g in [
            families::complete(3),
            families::path(3),
            families::cycle(5),
            families::complete(4),
            families::two_triangles_bridged(),
        ] {
            let a = g.to_clutter().unwrap().incidence_matrix();
            assert_eq!(verts(&g), brute_force(&a));
        }
    }

    #[test]
    fn zero_row_is_unbounded() {
        let a = RatMatrix::from_int_rows(&[vec![1], vec![0]]).unwrap();
        assert!(matches!(
            polytope_vertices(&a, &Budget::default()),
            Err(Error::Unbounded(_))
        ));
    }

    #[test]
    fn rational_entries_are_scaled() {
        let a = RatMatrix::from_rows(&[RatVector::new(vec![q(1, 2)]), RatVector::new(vec![q(1, 3)])])
            .unwrap();
        let v = polytope_vertices(&a, &Budget::default()).unwrap().vertices;
        assert_eq!(v, brute_force(&a));
        assert!(v.contains(&RatVector::from_ints(&[2, 0])));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_brute_force(bits in proptest::collection::vec(proptest::bool::ANY, 16), n in 1usize..=4, qn in 1usize..=4) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..qn).map(|j| i64::from(bits[i * 4 + j])).collect()).collect();
            prop_assume!(rows.iter().all(|r| r.iter().any(|&x| x != 0)));
            let a = RatMatrix::from_int_rows(&rows).unwrap();
            let fast = polytope_vertices(&a, &Budget::default()).unwrap().vertices;
            prop_assert_eq!(fast, brute_force(&a));
        }
    }
}
