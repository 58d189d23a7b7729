use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::error::{check_dim, Error, Result};
use crate::exact::integer::{self, LatticeCoordinates};
use crate::exact::{lp_solve, LinearProgram, LpOutcome, RatVector, Rational, Relation};

/// Integer generators of a pointed cone inside the non-negative orthant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeGens {
    dim: usize,
    generators: Vec<Vec<i64>>,
}

impl ConeGens {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Degenerate("a cone needs at least one generator".into()));
        }
        for g in &generators {
            check_dim(dim, g.len())?;
            if g.iter().any(|&x| x < 0) {
                return Err(Error::NotPointed(format!(
                    "generator {g:?} leaves the non-negative orthant"
                )));
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::Degenerate("zero generator".into()));
            }
        }
        Ok(ConeGens { dim, generators })
    }

    /// Appends the coordinate `last` to every vector.
    pub fn lifted(vectors: &[Vec<i64>], last: i64) -> Result<Self> {
        let dim = vectors.first().map_or(1, |v| v.len() + 1);
        Self::new(
            dim,
            vectors
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w.push(last);
                    w
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Exact membership in the real cone, decided by LP feasibility of
/// `z = sum lambda_i g_i`, `lambda >= 0`.
pub fn cone_member(cone: &ConeGens, z: &[i64]) -> Result<bool> {
    check_dim(cone.dim(), z.len())?;
    let k = cone.len();
    let mut lp = LinearProgram::minimize(RatVector::zeros(k));
    for r in 0..cone.dim() {
        let row: Vec<i64> = cone.generators().iter().map(|g| g[r]).collect();
        lp.push(RatVector::from_ints(&row), Relation::Eq, Rational::from(z[r]));
    }
    Ok(matches!(lp_solve(&lp)?, LpOutcome::Optimal { .. }))
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub(crate) fn degree(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// A cone prepared for lattice computations: coordinates in the saturated
/// lattice of its span, a placing triangulation of its generators and its
/// facet normals.
#[derive(Clone, Debug)]
pub struct Cone {
    gens: ConeGens,
    lattice: LatticeCoordinates,
    coords: Vec<Vec<i64>>,
    simplices: Vec<Vec<usize>>,
    facets: Vec<Vec<i64>>,
}

struct BoundaryFacet {
    verts: Vec<usize>,
    normal: Vec<i64>,
}

impl Cone {
    pub fn new(gens: &ConeGens, budget: &Budget) -> Result<Self> {
        let basis = integer::saturated_basis(gens.generators(), gens.dim())?;
        let lattice = LatticeCoordinates::new(basis, gens.dim())?;
        let coords = gens
            .generators()
            .iter()
            .map(|g| {
                lattice
                    .coords(g)?
                    .ok_or_else(|| Error::Degenerate("generator outside its own span".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut cone = Cone {
            gens: gens.clone(),
            lattice,
            coords,
            simplices: Vec::new(),
            facets: Vec::new(),
        };
        cone.triangulate(&mut budget.meter("triangulating cone"))?;
        Ok(cone)
    }

    pub fn generators(&self) -> &ConeGens {
        &self.gens
    }

    /// Dimension of the cone (rank of its lattice).
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn lattice(&self) -> &LatticeCoordinates {
        &self.lattice
    }

    /// Generator coordinates in the lattice basis.
    pub fn coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    /// Maximal simplices of the placing triangulation, as generator indices.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    /// Primitive inner facet normals `h` in lattice coordinates: the cone is
    /// `{y : h.y >= 0}`.
    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    /// Lattice coordinates of an ambient integer point, if it lies in the
    /// span of the cone.
    pub fn to_coords(&self, p: &[i64]) -> Result<Option<Vec<i64>>> {
        check_dim(self.gens.dim(), p.len())?;
        self.lattice.coords(p)
    }

    pub fn to_ambient(&self, y: &[i64]) -> Result<Vec<i64>> {
        self.lattice.point(y)
    }

    /// Restriction of the ambient linear form `f` to lattice coordinates.
    pub fn pull_back(&self, f: &[i64]) -> Vec<i64> {
        self.lattice.basis().iter().map(|b| dot(b, f) as i64).collect()
    }

    pub fn contains_coords(&self, y: &[i64]) -> bool {
        self.facets.iter().all(|h| dot(h, y) >= 0)
    }

    pub fn interior_contains_coords(&self, y: &[i64]) -> bool {
        self.facets.iter().all(|h| dot(h, y) > 0)
    }

    /// Membership of an ambient integer point in the cone.
    pub fn contains(&self, p: &[i64]) -> Result<bool> {
        Ok(self.to_coords(p)?.is_some_and(|y| self.contains_coords(&y)))
    }

    /// Membership in the relative interior.
    pub fn interior_contains(&self, p: &[i64]) -> Result<bool> {
        Ok(self
            .to_coords(p)?
            .is_some_and(|y| self.interior_contains_coords(&y)))
    }

    fn oriented_normal(&self, verts: &[usize], toward: usize) -> Result<Vec<i64>> {
        let d = self.rank();
        let rows: Vec<Vec<i64>> = verts.iter().map(|&v| self.coords[v].clone()).collect();
        let mut kernel = integer::integer_kernel(&rows, d)?;
        if kernel.len() != 1 {
            return Err(Error::Degenerate("facet vectors are dependent".into()));
        }
        let mut h = kernel.pop().unwrap();
        let s = dot(&h, &self.coords[toward]);
        if s == 0 {
            return Err(Error::Degenerate("simplex is flat".into()));
        }
        if s < 0 {
            for x in &mut h {
                *x = -*x;
            }
        }
        Ok(h)
    }

    fn triangulate(&mut self, meter: &mut Meter) -> Result<()> {
        let d = self.rank();
        // Initial simplex: greedily independent generators in order.
        let mut initial: Vec<usize> = Vec::with_capacity(d);
        for i in 0..self.coords.len() {
            let mut rows: Vec<Vec<i64>> = initial.iter().map(|&j| self.coords[j].clone()).collect();
            rows.push(self.coords[i].clone());
            if integer::rank(&rows)? == rows.len() {
                initial.push(i);
                if initial.len() == d {
                    break;
                }
            }
        }
        if initial.len() != d {
            return Err(Error::Degenerate("generators do not span their lattice".into()));
        }
        let mut boundary: Vec<BoundaryFacet> = Vec::new();
        for (k, &opp) in initial.iter().enumerate() {
            let verts: Vec<usize> = initial
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &v)| v)
                .collect();
            let normal = self.oriented_normal(&verts, opp)?;
            boundary.push(BoundaryFacet { verts, normal });
        }
        let mut simplices = vec![initial.clone()];
        let in_initial: HashSet<usize> = initial.iter().copied().collect();

        for g in 0..self.coords.len() {
            if in_initial.contains(&g) {
                continue;
            }
            meter.add(boundary.len() as u64)?;
            let y = &self.coords[g];
            let (visible, kept): (Vec<BoundaryFacet>, Vec<BoundaryFacet>) = boundary
                .into_iter()
                .partition(|f| dot(&f.normal, y) < 0);
            boundary = kept;
            if visible.is_empty() {
                continue;
            }
            // ridge -> (multiplicity, vertex of the visible facet opposite it)
            let mut ridges: HashMap<Vec<usize>, (u32, usize)> = HashMap::new();
            for f in &visible {
                let mut s = f.verts.clone();
                s.push(g);
                s.sort_unstable();
                simplices.push(s);
                for k in 0..f.verts.len() {
                    let mut r = f.verts.clone();
                    let opp = r.remove(k);
                    let e = ridges.entry(r).or_insert((0, opp));
                    e.0 += 1;
                }
            }
            let mut horizon: Vec<(Vec<usize>, usize)> = ridges
                .into_iter()
                .filter(|(_, (m, _))| *m == 1)
                .map(|(r, (_, opp))| (r, opp))
                .collect();
            horizon.sort_unstable();
            for (mut r, opp) in horizon {
                r.push(g);
                r.sort_unstable();
                let normal = self.oriented_normal(&r, opp)?;
                boundary.push(BoundaryFacet { verts: r, normal });
            }
        }
        let mut facets: Vec<Vec<i64>> = boundary.into_iter().map(|f| f.normal).collect();
        facets.sort_unstable();
        facets.dedup();
        self.facets = facets;
        for s in &mut simplices {
            s.sort_unstable();
        }
        self.simplices = simplices;
        Ok(())
    }

    /// Lattice points of the half-open parallelepiped `{sum c_i g_i : 0 <=
    /// c_i < 1}` of a simplex, in lattice coordinates. The origin is
    /// included.
    pub fn parallelepiped(&self, simplex: &[usize], meter: &mut Meter) -> Result<Vec<Vec<i64>>> {
        let d = self.rank();
        let g: Vec<&Vec<i64>> = simplex.iter().map(|&i| &self.coords[i]).collect();
        let mut hnf: Vec<Vec<i64>> = g.iter().map(|v| (*v).clone()).collect();
        integer::hermite_rows(&mut hnf)?;
        let diag: Vec<i64> = (0..d).map(|i| hnf[i][i]).collect();
        // square[r][c] = g_c[r]; inverse scaled by D gives lambda * D.
        let square: Vec<Vec<i64>> = (0..d).map(|r| g.iter().map(|v| v[r]).collect()).collect();
        let (det, adj) = integer::scaled_inverse(&square)?
            .ok_or_else(|| Error::Degenerate("singular simplex".into()))?;
        let big_d = det.abs();
        let sign = det.signum();
        let volume: i128 = diag.iter().map(|&x| x as i128).product();
        debug_assert_eq!(volume, big_d);
        meter.add(volume as u64)?;

        let mut out = Vec::with_capacity(volume as usize);
        let mut rep = vec![0i64; d];
        loop {
            let mut p = vec![0i128; d];
            for (i, row) in adj.iter().enumerate() {
                let t: i128 = row.iter().zip(&rep).map(|(&a, &x)| a * x as i128).sum::<i128>() * sign;
                let t = t.rem_euclid(big_d);
                if t != 0 {
                    for (pk, &gk) in p.iter_mut().zip(g[i].iter()) {
                        *pk += t * gk as i128;
                    }
                }
            }
            out.push(
                p.into_iter()
                    .map(|x| {
                        debug_assert_eq!(x % big_d, 0);
                        (x / big_d) as i64
                    })
                    .collect(),
            );
            // next coset representative in the box prod [0, diag_i)
            let mut k = 0;
            loop {
                if k == d {
                    return Ok(out);
                }
                rep[k] += 1;
                if rep[k] < diag[k] {
                    break;
                }
                rep[k] = 0;
                k += 1;
            }
        }
    }
}
