use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use super::cone::{degree, Cone, ConeGens};
use crate::budget::{Budget, Meter};
use crate::error::{check_dim, Result};

/// Minimal generating set of the lattice points of a pointed cone, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    pub elements: Vec<Vec<i64>>,
}

/// Result of a normality test. `witness` is a lattice point of the cone
/// outside the semigroup spanned by the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normality {
    pub normal: bool,
    pub witness: Option<Vec<i64>>,
}

impl Cone {
    /// Hilbert basis from the candidates supplied by the fundamental
    /// parallelepipeds of the triangulation and the generators themselves.
    pub fn hilbert_basis(&self, budget: &Budget) -> Result<HilbertBasis> {
        let mut meter = budget.meter("enumerating parallelepiped points");
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut cands: Vec<Vec<i64>> = Vec::new();
        for y in self.coords() {
            if seen.insert(y.clone()) {
                cands.push(y.clone());
            }
        }
        for s in self.simplices() {
            for y in self.parallelepiped(s, &mut meter)? {
                if y.iter().any(|&x| x != 0) && seen.insert(y.clone()) {
                    cands.push(y);
                }
            }
        }
        let mut amb: Vec<(i64, Vec<i64>, Vec<i64>)> = cands
            .into_iter()
            .map(|y| {
                let p = self.to_ambient(&y)?;
                Ok((degree(&p), p, y))
            })
            .collect::<Result<_>>()?;
        amb.sort();

        let mut reduce = budget.meter("reducing Hilbert basis candidates");
        let mut elements = Vec::new();
        let mut diff = vec![0i64; self.rank()];
        for (i, (dc, pc, yc)) in amb.iter().enumerate() {
            let mut reducible = false;
            for (dh, _, yh) in &amb[..i] {
                if dh >= dc {
                    break;
                }
                reduce.tick()?;
                for ((d, &a), &b) in diff.iter_mut().zip(yc).zip(yh) {
                    *d = a - b;
                }
                if self.contains_coords(&diff) {
                    reducible = true;
                    break;
                }
            }
            if !reducible {
                elements.push(pc.clone());
            }
        }
        elements.sort();
        Ok(HilbertBasis { elements })
    }

    /// Normality through the Hilbert basis: the semigroup is normal exactly
    /// when every basis element decomposes over the generators.
    pub fn normality(&self, budget: &Budget) -> Result<Normality> {
        let hb = self.hilbert_basis(budget)?;
        let mut search = SemigroupSearch::new(self.generators(), budget);
        for h in hb.elements {
            if search.decompose(&h)?.is_none() {
                return Ok(Normality {
                    normal: false,
                    witness: Some(h),
                });
            }
        }
        Ok(Normality {
            normal: true,
            witness: None,
        })
    }

    /// Normality by checking that every fundamental parallelepiped point of
    /// every simplex lies in the semigroup. Does not build a Hilbert basis.
    pub fn normality_by_parallelepipeds(&self, budget: &Budget) -> Result<Normality> {
        let mut meter = budget.meter("enumerating parallelepiped points");
        let mut search = SemigroupSearch::new(self.generators(), budget);
        let mut failures: BTreeSet<(i64, Vec<i64>)> = BTreeSet::new();
        for s in self.simplices() {
            for y in self.parallelepiped(s, &mut meter)? {
                if y.iter().all(|&x| x == 0) {
                    continue;
                }
                let p = self.to_ambient(&y)?;
                if search.decompose(&p)?.is_none() {
                    failures.insert((degree(&p), p));
                }
            }
        }
        // Report a smallest failure so the witness does not depend on the
        // simplex order.
        Ok(match failures.into_iter().next() {
            None => Normality {
                normal: true,
                witness: None,
            },
            Some((_, p)) => Normality {
                normal: false,
                witness: Some(p),
            },
        })
    }
}

pub fn hilbert_basis(cone: &ConeGens, budget: &Budget) -> Result<HilbertBasis> {
    Cone::new(cone, budget)?.hilbert_basis(budget)
}

pub fn is_normal_semigroup(cone: &ConeGens, budget: &Budget) -> Result<Normality> {
    Cone::new(cone, budget)?.normality(budget)
}

/// A multiset of generators summing to `z`, in nondecreasing generator
/// order, or `None` when `z` is not in the semigroup.
pub fn semigroup_member(cone: &ConeGens, z: &[i64], budget: &Budget) -> Result<Option<Vec<Vec<i64>>>> {
    check_dim(cone.dim(), z.len())?;
    SemigroupSearch::new(cone, budget).decompose(z)
}

/// Memoised depth-first subtraction over the generators. Failures are cached
/// across queries.
pub(crate) struct SemigroupSearch<'a> {
    gens: Vec<&'a Vec<i64>>,
    failed: HashSet<(Vec<i64>, usize)>,
    lookup: HashMap<&'a [i64], usize>,
    meter: Meter,
}

impl<'a> SemigroupSearch<'a> {
    pub(crate) fn new(cone: &'a ConeGens, budget: &Budget) -> Self {
        let mut gens: Vec<&Vec<i64>> = Vec::new();
        for g in cone.generators() {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        let lookup = gens.iter().enumerate().map(|(i, g)| (g.as_slice(), i)).collect();
        SemigroupSearch {
            gens,
            failed: HashSet::new(),
            lookup,
            meter: budget.meter("searching semigroup decompositions"),
        }
    }

    pub(crate) fn decompose(&mut self, z: &[i64]) -> Result<Option<Vec<Vec<i64>>>> {
        if z.iter().any(|&x| x < 0) {
            return Ok(None);
        }
        let mut picked = Vec::new();
        let mut z = z.to_vec();
        if self.search(&mut z, 0, &mut picked)? {
            Ok(Some(picked.into_iter().map(|i| self.gens[i].clone()).collect()))
        } else {
            Ok(None)
        }
    }

    fn search(&mut self, z: &mut [i64], start: usize, picked: &mut Vec<usize>) -> Result<bool> {
        if z.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        if let Some(&i) = self.lookup.get(&*z) {
            if i >= start {
                picked.push(i);
                return Ok(true);
            }
        }
        if self.failed.contains(&(z.to_vec(), start)) {
            return Ok(false);
        }
        self.meter.tick()?;
        for i in start..self.gens.len() {
            let g = self.gens[i];
            if g.iter().zip(z.iter()).any(|(&a, &b)| a > b) {
                continue;
            }
            for (x, &a) in z.iter_mut().zip(g) {
                *x -= a;
            }
            picked.push(i);
            let ok = self.search(z, i, picked)?;
            for (x, &a) in z.iter_mut().zip(g) {
                *x += a;
            }
            if ok {
                return Ok(true);
            }
            picked.pop();
        }
        self.failed.insert((z.to_vec(), start));
        Ok(false)
    }
}
