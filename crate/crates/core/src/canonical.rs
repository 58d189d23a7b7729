//! Canonical modules of normal subrings given by their interior lattice
//! points, a-invariants, the Gorenstein test and antiblocking duality.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::budget::Budget;
use crate::combinatorics::{Clutter, Graph};
use crate::error::{Error, Result};
use crate::exact::{lp_solve, LinearProgram, LpOutcome, RatMatrix, RatVector, Rational, Relation};
use crate::polyhedra::{polytope_vertices, BoxSearch, Cone, ConeGens, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Threshold {
    /// `<(a,b), u> > 0` for every normal `u`.
    Strict,
    /// `<(a,b), u> >= 1` for every normal `u`.
    AtLeastOne,
}

/// The system `a_j > 0` and `b > <a, l_i>` (or `>= 1`) describing the
/// interior lattice points `(a,b)` of the cone over a polytope with facet
/// data `l_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalPresentation {
    pub n: usize,
    pub vertices: Vec<RatVector>,
    pub threshold: Threshold,
    #[serde(skip)]
    rows: Vec<(Vec<i64>, i64, i64)>,
}

impl CanonicalPresentation {
    pub fn new(n: usize, vertices: Vec<RatVector>, threshold: Threshold) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Degenerate("no nonzero vertices".into()));
        }
        // (L l_i, L, rhs) meaning L b - <L l_i, a> >= rhs
        let mut rows = Vec::with_capacity(vertices.len());
        for l in &vertices {
            crate::error::check_dim(n, l.dim())?;
            if l.is_zero() || !l.is_nonnegative() {
                return Err(Error::MalformedInput(format!("{l} is not a nonzero nonnegative vertex")));
            }
            let den = l
                .iter()
                .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(&x.denom()));
            let to_i64 = |x: num_bigint::BigInt| x.to_i64().ok_or(Error::Overflow("scaling vertex"));
            let row = l
                .iter()
                .map(|x| to_i64(x.numer() * (&den / x.denom())))
                .collect::<Result<Vec<_>>>()?;
            let den = to_i64(den)?;
            let rhs = match threshold {
                Threshold::Strict => 1,
                Threshold::AtLeastOne => den,
            };
            rows.push((row, den, rhs));
        }
        Ok(CanonicalPresentation {
            n,
            vertices,
            threshold,
            rows,
        })
    }

    /// The normals `(-l_1,1), .., (-l_m,1), (e_1,0), .., (e_n,0)`.
    pub fn normals(&self) -> Vec<RatVector> {
        let mut out = Vec::with_capacity(self.vertices.len() + self.n);
        for l in &self.vertices {
            let mut v: Vec<Rational> = l.iter().map(|x| -x).collect();
            v.push(Rational::one());
            out.push(RatVector::new(v));
        }
        for j in 0..self.n {
            out.push(RatVector::unit(self.n + 1, j));
        }
        out
    }

    pub fn is_interior(&self, a: &[i64], b: i64) -> bool {
        a.len() == self.n
            && a.iter().all(|&x| x >= 1)
            && self.rows.iter().all(|(l, den, rhs)| {
                let s: i128 = l.iter().zip(a).map(|(&x, &y)| x as i128 * y as i128).sum();
                *den as i128 * b as i128 - s >= *rhs as i128
            })
    }

    /// Visits the interior points at level `b` in lexicographic order of `a`.
    fn scan_level<F>(&self, b: i64, budget: &Budget, mut visit: F) -> Result<()>
    where
        F: FnMut(&[i64]) -> Result<bool>,
    {
        let mut hi = Vec::with_capacity(self.n);
        for j in 0..self.n {
            // a_j * l_ij < b for every i
            let best = self
                .vertices
                .iter()
                .map(|l| l[j].clone())
                .max()
                .unwrap_or_else(Rational::zero);
            if !best.is_positive() {
                return Err(Error::Unbounded(format!("no vertex bounds coordinate {j}")));
            }
            let h = (&Rational::from(b) / &best).ceil().to_i64().ok_or(Error::Overflow("box bound"))? - 1;
            hi.push(h);
        }
        let mut search = BoxSearch::new(vec![1; self.n], hi);
        for (l, den, rhs) in &self.rows {
            search.at_least(l.iter().map(|&x| -x).collect(), rhs - den * b);
        }
        let mut meter = budget.meter("scanning interior lattice points");
        search.run(&mut meter, &mut visit)
    }
}

/// The presentation built from the nonzero vertices of `P`.
pub fn canonical_presentation(vertices: &VertexSet) -> Result<CanonicalPresentation> {
    let n = vertices
        .vertices
        .first()
        .map(RatVector::dim)
        .ok_or_else(|| Error::Degenerate("empty vertex set".into()))?;
    CanonicalPresentation::new(n, vertices.nonzero().cloned().collect(), Threshold::Strict)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IdealGenerator {
    pub a: Vec<i64>,
    pub b: i64,
}

/// Minimal generators of the canonical module up to degree `complete_up_to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealGens {
    pub generators: Vec<IdealGenerator>,
    pub complete_up_to: i64,
    /// Some generator was found and every interior point at level
    /// `complete_up_to + 1` is reducible.
    pub complete: bool,
}

/// `(n + 1) + max floor|l_i|`.
pub fn default_b_max(pres: &CanonicalPresentation) -> i64 {
    pres.n as i64 + 1 + max_floor_norm(&pres.vertices)
}

fn max_floor_norm(vertices: &[RatVector]) -> i64 {
    vertices
        .iter()
        .map(|l| l.total().floor().to_i64().unwrap_or(i64::MAX / 2))
        .max()
        .unwrap_or(0)
}

/// Interior points `(a,b)` with `b <= b_max` from which no generator of
/// `cone` can be subtracted without leaving the interior.
pub fn canonical_generators(
    pres: &CanonicalPresentation,
    cone: &ConeGens,
    b_max: i64,
    budget: &Budget,
) -> Result<IdealGens> {
    crate::error::check_dim(pres.n + 1, cone.dim())?;
    let gens: Vec<(Vec<i64>, i64)> = cone
        .generators()
        .iter()
        .map(|g| (g[..pres.n].to_vec(), g[pres.n]))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut generators = Vec::new();
    let mut complete = true;
    let mut diff = vec![0i64; pres.n];
    for b in 1..=b_max + 1 {
        pres.scan_level(b, budget, |a| {
            let reducible = gens.iter().any(|(ga, gb)| {
                for ((d, &x), &y) in diff.iter_mut().zip(a).zip(ga) {
                    *d = x - y;
                }
                pres.is_interior(&diff, b - gb)
            });
            if reducible {
                return Ok(true);
            }
            if b <= b_max {
                generators.push(IdealGenerator { a: a.to_vec(), b });
                Ok(true)
            } else {
                complete = false;
                Ok(false)
            }
        })?;
    }
    Ok(IdealGens {
        complete: complete && !generators.is_empty(),
        generators,
        complete_up_to: b_max,
    })
}

/// `-(max_i floor|l_i| + 1)` over the nonzero vertices.
pub fn a_invariant_formula(vertices: &VertexSet) -> Result<i64> {
    let nz: Vec<RatVector> = vertices.nonzero().cloned().collect();
    if nz.is_empty() {
        return Err(Error::Degenerate("no nonzero vertices".into()));
    }
    Ok(-(max_floor_norm(&nz) + 1))
}

/// Minus the lowest level holding an interior lattice point of a cone with
/// height-one generators, found by scanning levels upward, using the facets
/// of the cone itself.
pub fn a_invariant_direct(cone: &Cone, budget: &Budget) -> Result<i64> {
    // The sum of the generators of a full simplex is interior, so the scan
    // stops by level rank.
    for b in 1..=cone.rank() as i64 {
        let mut found = false;
        cone.scan_level(b, true, budget, |_| {
            found = true;
            Ok(false)
        })?;
        if found {
            return Ok(-b);
        }
    }
    Err(Error::Degenerate("no interior lattice point found".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gorenstein {
    pub gorenstein: bool,
    /// False when the generator scan was not shown complete.
    pub qualified: bool,
}

pub fn is_gorenstein(gens: &IdealGens) -> Gorenstein {
    Gorenstein {
        gorenstein: gens.generators.len() == 1,
        qualified: gens.complete,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectPresentation {
    pub pres: CanonicalPresentation,
    pub a_invariant: i64,
}

/// For a perfect graph, the presentation over the maximal independent set
/// vectors with thresholds `>= 1`.
pub fn perfect_presentation(g: &Graph, budget: &Budget) -> Result<PerfectPresentation> {
    if !g.is_perfect(budget)? {
        return Err(Error::NotPerfect);
    }
    let n = g.n();
    let sets = g.maximal_independent_sets();
    let vertices: Vec<RatVector> = sets
        .iter()
        .map(|s| {
            let mut v = vec![0i64; n];
            for &i in s {
                v[i] = 1;
            }
            RatVector::from_ints(&v)
        })
        .collect();
    let alpha = sets.iter().map(Vec::len).max().unwrap_or(0) as i64;
    Ok(PerfectPresentation {
        pres: CanonicalPresentation::new(n, vertices, Threshold::AtLeastOne)?,
        a_invariant: -(alpha + 1),
    })
}

/// Checks that `conv(w_1..w_r)` over the closure generators equals
/// `{x >= 0 : <x, l_i> <= 1}` for the nonzero vertices `l_i`.
pub fn antiblocker_check(c: &Clutter, vertices: &VertexSet, budget: &Budget) -> Result<bool> {
    let w = c.closure_generators();
    let ls: Vec<RatVector> = vertices.nonzero().cloned().collect();
    if ls.is_empty() {
        return Err(Error::Degenerate("no nonzero vertices".into()));
    }
    for wj in &w {
        for l in &ls {
            if l.dot_ints(wj) > Rational::one() {
                return Ok(false);
            }
        }
    }
    let q = RatMatrix::from_columns(&ls)?;
    let right = polytope_vertices(&q, budget)?;
    let mut meter = budget.meter("antiblocker membership programs");
    for x in &right.vertices {
        meter.tick()?;
        if !in_convex_hull(&w, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_convex_hull(points: &[Vec<i64>], x: &RatVector) -> Result<bool> {
    let r = points.len();
    let mut lp = LinearProgram::minimize(RatVector::zeros(r));
    for k in 0..x.dim() {
        let row: Vec<i64> = points.iter().map(|p| p[k]).collect();
        lp.push(RatVector::from_ints(&row), Relation::Eq, x[k].clone());
    }
    lp.push(RatVector::from_ints(&vec![1; r]), Relation::Eq, Rational::one());
    Ok(matches!(lp_solve(&lp)?, LpOutcome::Optimal { .. }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::families;
    use crate::rounding::closure_cone;

    fn b() -> Budget {
        Budget::default()
    }

    fn setup(g: &Graph) -> (Clutter, VertexSet, CanonicalPresentation, ConeGens) {
        let c = g.to_clutter().unwrap();
        let v = polytope_vertices(&c.incidence_matrix(), &b()).unwrap();
        let p = canonical_presentation(&v).unwrap();
        let cone = closure_cone(&c).unwrap();
        (c, v, p, cone)
    }

    /// Oracle: all interior points up to level `top` by a plain box scan,
    /// then minimal elements by pairwise subtraction of generators.
    fn brute_generators(p: &CanonicalPresentation, cone: &ConeGens, top: i64) -> Vec<IdealGenerator> {
        let n = p.n;
        let mut interior = Vec::new();
        for b in 1..=top {
            let mut a = vec![1i64; n];
            loop {
                if p.is_interior(&a, b) {
                    interior.push((a.clone(), b));
                }
                let mut k = n;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    a[k] += 1;
                    if a[k] <= top {
                        break;
                    }
                    a[k] = 1;
                }
                if a.iter().all(|&x| x == 1) {
                    break;
                }
            }
        }
        interior
            .iter()
            .filter(|(a, b)| {
                !cone.generators().iter().any(|g| {
                    let d: Vec<i64> = a.iter().zip(g).map(|(x, y)| x - y).collect();
                    p.is_interior(&d, b - g[n])
                })
            })
            .map(|(a, b)| IdealGenerator { a: a.clone(), b: *b })
            .collect()
    }

    #[test]
    fn presentation_normals() {
        let (_, _, p, _) = setup(&families::complete(2));
        assert_eq!(
            p.normals(),
            vec![
                RatVector::from_ints(&[0, -1, 1]),
                RatVector::from_ints(&[-1, 0, 1]),
                RatVector::from_ints(&[1, 0, 0]),
                RatVector::from_ints(&[0, 1, 0]),
            ]
        );
        let (_, _, p, _) = setup(&families::complete(3));
        let half = RatVector::new(vec![
            Rational::new(-1, 2),
            Rational::new(-1, 2),
            Rational::new(-1, 2),
            Rational::one(),
        ]);
        assert!(p.normals().contains(&half));
        assert!(p.is_interior(&[1, 1, 1], 2));
        assert!(!p.is_interior(&[2, 1, 1], 2));
        let (_, _, p, _) = setup(&families::path(3));
        assert!(p.vertices.contains(&RatVector::from_ints(&[1, 0, 1])));
        assert!(!p.is_interior(&[1, 1, 1], 2));
    }

    #[test]
    fn k2_generator_and_invariants() {
        let (c, v, p, cone) = setup(&families::complete(2));
        let gens = canonical_generators(&p, &cone, 4, &b()).unwrap();
        assert_eq!(gens.generators, vec![IdealGenerator { a: vec![1, 1], b: 2 }]);
        assert!(gens.complete);
        assert_eq!(is_gorenstein(&gens), Gorenstein { gorenstein: true, qualified: true });
        assert_eq!(a_invariant_formula(&v).unwrap(), -2);
        let cone = Cone::new(&cone, &b()).unwrap();
        assert_eq!(a_invariant_direct(&cone, &b()).unwrap(), -2);
        assert!(antiblocker_check(&c, &v, &b()).unwrap());
    }

    #[test]
    fn k3_and_p3_and_c4() {
        let (c, v, _, cone) = setup(&families::complete(3));
        assert_eq!(a_invariant_formula(&v).unwrap(), -2);
        assert_eq!(a_invariant_direct(&Cone::new(&cone, &b()).unwrap(), &b()).unwrap(), -2);
        assert!(antiblocker_check(&c, &v, &b()).unwrap());

        let (_, v, p, cone) = setup(&families::path(3));
        assert_eq!(a_invariant_formula(&v).unwrap(), -3);
        let gens = canonical_generators(&p, &cone, default_b_max(&p), &b()).unwrap();
        assert!(gens.generators.len() >= 2);
        assert!(gens.generators.contains(&IdealGenerator { a: vec![1, 1, 1], b: 3 }));
        assert!(gens.generators.contains(&IdealGenerator { a: vec![1, 2, 1], b: 3 }));
        assert!(!is_gorenstein(&gens).gorenstein);

        let (_, v, p, cone) = setup(&families::cycle(4));
        let gens = canonical_generators(&p, &cone, default_b_max(&p), &b()).unwrap();
        assert_eq!(gens.generators, vec![IdealGenerator { a: vec![1; 4], b: 3 }]);
        assert!(gens.complete);
        assert_eq!(a_invariant_formula(&v).unwrap(), -3);
        assert_eq!(a_invariant_direct(&Cone::new(&cone, &b()).unwrap(), &b()).unwrap(), -3);
    }

    #[test]
    fn scan_matches_brute_force() {
        for g in [families::path(3), families::cycle(4), families::complete(3), families::star(3)] {
            let (_, _, p, cone) = setup(&g);
            let gens = canonical_generators(&p, &cone, 5, &b()).unwrap();
            assert_eq!(gens.generators, brute_generators(&p, &cone, 5), "{:?}", g.edges());
        }
    }

    #[test]
    fn truncated_scan_is_flagged() {
        let (_, _, p, cone) = setup(&families::path(3));
        let gens = canonical_generators(&p, &cone, 1, &b()).unwrap();
        assert!(gens.generators.is_empty());
        assert!(!gens.complete);
        assert!(!is_gorenstein(&gens).qualified);
    }

    #[test]
    fn perfect_specialisation() {
        assert_eq!(perfect_presentation(&families::complete(3), &b()).unwrap().a_invariant, -2);
        assert_eq!(perfect_presentation(&families::path(3), &b()).unwrap().a_invariant, -3);
        let c4 = perfect_presentation(&families::cycle(4), &b()).unwrap();
        assert_eq!(c4.a_invariant, -3);
        assert_eq!(c4.pres.threshold, Threshold::AtLeastOne);
        assert!(matches!(
            perfect_presentation(&families::cycle(5), &b()),
            Err(Error::NotPerfect)
        ));
        // same generators as the strict form over P's vertices
        let (_, _, p, cone) = setup(&families::cycle(4));
        assert_eq!(
            canonical_generators(&c4.pres, &cone, 5, &b()).unwrap(),
            canonical_generators(&p, &cone, 5, &b()).unwrap()
        );
    }

    #[test]
    fn antiblocker_on_cliques() {
        let g = families::cycle(4);
        let c = g.clique_clutter();
        let v = polytope_vertices(&c.incidence_matrix(), &b()).unwrap();
        assert!(antiblocker_check(&c, &v, &b()).unwrap());
        // a wrong vertex list breaks the duality
        let bogus = VertexSet {
            vertices: vec![RatVector::from_ints(&[1, 1, 1, 1])],
            contains_origin: false,
        };
        assert!(!antiblocker_check(&c, &bogus, &b()).unwrap());
    }
}
