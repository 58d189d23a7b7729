mod common;

use irp::canonical::{canonical_generators, canonical_presentation};
use irp::exact::Rational;
use irp::polyhedra::{hilbert_basis, polytope_vertices, semigroup_member, ConeGens};
use irp::rounding::{closure_cone, ehrhart_equality, irp_leq, optimum_pair, Direction};
use irp::Budget;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hilbert_basis_is_irreducible_and_generates(seed in any::<u64>()) {
        let b = Budget::default();
        let c = common::random_clutter(&mut common::rng(seed), 5, 4);
        let cone = closure_cone(&c).unwrap();
        let hb = hilbert_basis(&cone, &b).unwrap().elements;
        let all = ConeGens::new(cone.dim(), hb.clone()).unwrap();
        for g in cone.generators() {
            prop_assert!(semigroup_member(&all, g, &b).unwrap().is_some());
        }
        for (i, h) in hb.iter().enumerate() {
            let mut rest = hb.clone();
            rest.remove(i);
            let rest = ConeGens::new(cone.dim(), rest).unwrap();
            prop_assert!(semigroup_member(&rest, h, &b).unwrap().is_none(), "{:?} is reducible", h);
        }
    }

    #[test]
    fn covering_optima_round_when_the_property_holds(seed in any::<u64>(), alpha in prop::collection::vec(0i64..4, 6)) {
        let b = Budget::default();
        let c = common::random_clutter(&mut common::rng(seed), 6, 5);
        let alpha = &alpha[..c.n()];
        let a = c.incidence_matrix();
        let pair = optimum_pair(&a, Direction::Leq, alpha, &b).unwrap().unwrap();
        prop_assert!(pair.lp_value <= Rational::from(pair.ilp_value));
        let mut cover = vec![0i64; c.n()];
        for (col, &y) in c.columns().iter().zip(&pair.ilp_point) {
            for (k, &x) in col.iter().enumerate() {
                cover[k] += x * y;
            }
        }
        prop_assert!(cover.iter().zip(alpha).all(|(s, t)| s >= t));
        if irp_leq(&c, &b).unwrap().holds {
            prop_assert_eq!(Rational::from(pair.ilp_value), pair.lp_value.ceil());
        }
    }

    #[test]
    fn rounding_forces_ehrhart_equality(seed in any::<u64>()) {
        let b = Budget::default();
        let c = common::random_uniform_clutter(&mut common::rng(seed), 6, 3, 5);
        if irp_leq(&c, &b).unwrap().holds {
            prop_assert!(ehrhart_equality(&c, c.n() as i64 + 1, &b).unwrap().equal_up_to_b);
        }
    }

    #[test]
    fn canonical_generators_are_interior_and_minimal(seed in any::<u64>()) {
        let b = Budget::default();
        let g = common::random_connected_graph(&mut common::rng(seed), 5);
        let c = g.to_clutter().unwrap();
        let cone = closure_cone(&c).unwrap();
        let pres = canonical_presentation(&polytope_vertices(&c.incidence_matrix(), &b).unwrap()).unwrap();
        // On five vertices every connected graph has a normal closure cone.
        let gens = canonical_generators(&pres, &cone, g.n() as i64 + 1, &b).unwrap();
        prop_assert!(gens.complete);
        for x in &gens.generators {
            prop_assert!(pres.is_interior(&x.a, x.b));
            for y in &gens.generators {
                if x == y {
                    continue;
                }
                let mut d = x.a.iter().zip(&y.a).map(|(p, q)| p - q).collect::<Vec<_>>();
                d.push(x.b - y.b);
                if d.iter().all(|&t| t >= 0) {
                    prop_assert!(semigroup_member(&cone, &d, &b).unwrap().is_none());
                }
            }
        }
    }
}
