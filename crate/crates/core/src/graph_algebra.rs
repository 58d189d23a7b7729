//! Cones attached to a graph and the six equivalent conditions on them.

use serde::Serialize;

use crate::budget::Budget;
use crate::combinatorics::{Graph, OddCycleCondition};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::polyhedra::{Cone, ConeGens, Normality};
use crate::rounding::{self, Direction, IrpVerdict};

fn edge_columns(g: &Graph) -> Result<Vec<Vec<i64>>> {
    if g.edges().is_empty() {
        return Err(Error::MalformedInput("graph has no edges".into()));
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut c = vec![0; g.n()];
            c[u] = 1;
            c[v] = 1;
            c
        })
        .collect())
}

/// `(0,1)`, then `(e_i,1)` for each vertex, then `(v_j,1)` for each edge.
pub fn extended_rees_generators(g: &Graph) -> Result<ConeGens> {
    let n = g.n();
    let mut gens = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        gens.push(e);
    }
    gens.extend(edge_columns(g)?);
    ConeGens::lifted(&gens, 1)
}

/// `(v_j,1)` for each edge.
pub fn edge_cone_generators(g: &Graph) -> Result<ConeGens> {
    ConeGens::lifted(&edge_columns(g)?, 1)
}

/// `(e_i,0)` for each vertex, then `(v_j,1)` for each edge.
pub fn rees_cone_generators(g: &Graph) -> Result<ConeGens> {
    rounding::rees_cone(&edge_columns(g)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub irp_leq: IrpVerdict,
    pub irp_geq: IrpVerdict,
    pub rees_normal: Normality,
    pub edge_normal: Normality,
    pub extended_rees_normal: Normality,
    pub odd_cycles: OddCycleCondition,
    pub consistent: bool,
}

impl EquivalenceReport {
    /// The six verdicts in order (a) to (f).
    pub fn verdicts(&self) -> [bool; 6] {
        [
            self.irp_leq.holds,
            self.irp_geq.holds,
            self.rees_normal.normal,
            self.edge_normal.normal,
            self.extended_rees_normal.normal,
            self.odd_cycles.holds,
        ]
    }
}

/// Runs the six checks on a connected graph. Conditions on the same cone
/// are decided by different routes: Hilbert bases for (a), (b) and (d), and
/// parallelepiped points for (c) and (e).
pub fn equivalence_suite(g: &Graph, budget: &Budget) -> Result<EquivalenceReport> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let clutter = g.to_clutter()?;
    let irp_leq = rounding::irp_leq(&clutter, budget)?;
    let irp_geq = rounding::irp_geq(&clutter, budget)?;
    let rees_normal = Cone::new(&rees_cone_generators(g)?, budget)?.normality_by_parallelepipeds(budget)?;
    let edge_normal = Cone::new(&edge_cone_generators(g)?, budget)?.normality(budget)?;
    let extended_rees_normal =
        Cone::new(&extended_rees_generators(g)?, budget)?.normality_by_parallelepipeds(budget)?;
    let odd_cycles = g.disjoint_odd_cycle_condition(budget)?;
    let mut report = EquivalenceReport {
        irp_leq,
        irp_geq,
        rees_normal,
        edge_normal,
        extended_rees_normal,
        odd_cycles,
        consistent: false,
    };
    let v = report.verdicts();
    report.consistent = v.iter().all(|&x| x == v[0]);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdiCheck {
    pub holds: bool,
    pub alpha: Vec<i64>,
    pub lp_value: Rational,
    pub ilp_value: i64,
    pub ilp_point: Vec<i64>,
}

/// For a perfect graph and the clique matrix `A`, compares the LP and
/// integer optima of `min <y,1> : Ay >= alpha, y >= 0`.
pub fn tdi_check(g: &Graph, alpha: &[i64], budget: &Budget) -> Result<TdiCheck> {
    crate::error::check_dim(g.n(), alpha.len())?;
    if !g.is_perfect(budget)? {
        return Err(Error::NotPerfect);
    }
    let a = g.clique_clutter().incidence_matrix();
    let pair = rounding::optimum_pair(&a, Direction::Leq, alpha, budget)?
        .ok_or_else(|| Error::MalformedInput("the covering program has no finite optimum".into()))?;
    Ok(TdiCheck {
        holds: pair.lp_value == Rational::from(pair.ilp_value),
        alpha: alpha.to_vec(),
        lp_value: pair.lp_value,
        ilp_value: pair.ilp_value,
        ilp_point: pair.ilp_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::families;
    use crate::rounding::closure_cone;
    use std::collections::BTreeSet;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn generator_sets() {
        let k2 = families::complete(2);
        assert_eq!(
            extended_rees_generators(&k2).unwrap().generators(),
            &[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]
        );
        assert_eq!(extended_rees_generators(&families::path(3)).unwrap().len(), 6);
        assert_eq!(extended_rees_generators(&families::cycle(4)).unwrap().len(), 9);
        assert_eq!(edge_cone_generators(&k2).unwrap().generators(), &[vec![1, 1, 1]]);
        assert_eq!(edge_cone_generators(&families::complete(3)).unwrap().len(), 3);
        assert_eq!(
            rees_cone_generators(&k2).unwrap().generators(),
            &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]
        );
    }

    #[test]
    fn extended_rees_is_the_closure_cone() {
        for g in [families::cycle(5), families::complete(4), families::two_triangles_with_path()] {
            let a: BTreeSet<Vec<i64>> = extended_rees_generators(&g).unwrap().generators().iter().cloned().collect();
            let c = closure_cone(&g.to_clutter().unwrap()).unwrap();
            let b: BTreeSet<Vec<i64>> = c.generators().iter().cloned().collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn suite_fixtures() {
        for g in [families::cycle(5), families::path(3), families::cycle(4), families::two_triangles_bridged()] {
            let r = equivalence_suite(&g, &b()).unwrap();
            assert!(r.consistent);
            assert_eq!(r.verdicts(), [true; 6], "{:?}", g.edges());
        }
        let r = equivalence_suite(&families::two_triangles_with_path(), &b()).unwrap();
        assert!(r.consistent);
        assert_eq!(r.verdicts(), [false; 6]);
        assert!(r.extended_rees_normal.witness.is_some());
        assert!(r.odd_cycles.witness.is_some());
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(equivalence_suite(&disconnected, &b()), Err(Error::NotConnected)));
    }

    #[test]
    fn tdi_fixtures() {
        let c4 = families::cycle(4);
        let t = tdi_check(&c4, &[1, 1, 1, 1], &b()).unwrap();
        assert!(t.holds);
        assert_eq!(t.ilp_value, 2);
        assert!(tdi_check(&c4, &[0; 4], &b()).unwrap().holds);
        let t = tdi_check(&families::complete(3), &[1, 1, 1], &b()).unwrap();
        assert!(t.holds);
        assert_eq!(t.ilp_value, 1);
        assert!(matches!(tdi_check(&families::cycle(5), &[1; 5], &b()), Err(Error::NotPerfect)));
    }
}
