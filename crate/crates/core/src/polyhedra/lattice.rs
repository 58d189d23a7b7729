use super::cone::{Cone, ConeGens};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};

/// Integer points `y` of a box satisfying linear rows `a.y >= rhs` or
/// `a.y == rhs`, visited in lexicographic order by a depth-first search that
/// derives a feasible interval for each coordinate from the rows it has not
/// yet fixed.
#[derive(Clone, Debug)]
pub struct BoxSearch {
    lo: Vec<i64>,
    hi: Vec<i64>,
    rows: Vec<(Vec<i64>, bool, i64)>,
}

impl BoxSearch {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        debug_assert_eq!(lo.len(), hi.len());
        BoxSearch {
            lo,
            hi,
            rows: Vec::new(),
        }
    }

    pub fn at_least(&mut self, a: Vec<i64>, rhs: i64) {
        self.rows.push((a, false, rhs));
    }

    pub fn equal(&mut self, a: Vec<i64>, rhs: i64) {
        self.rows.push((a, true, rhs));
    }

    /// Calls `visit` on every point until it returns `false`.
    pub fn run<F>(&self, meter: &mut Meter, mut visit: F) -> Result<()>
    where
        F: FnMut(&[i64]) -> Result<bool>,
    {
        let d = self.lo.len();
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return Ok(());
        }
        // suffix extremes of each row over the box, from coordinate j on
        let mut smax = vec![vec![0i128; d + 1]; self.rows.len()];
        let mut smin = vec![vec![0i128; d + 1]; self.rows.len()];
        for (r, (a, _, _)) in self.rows.iter().enumerate() {
            for j in (0..d).rev() {
                let (x, y) = (a[j] as i128 * self.lo[j] as i128, a[j] as i128 * self.hi[j] as i128);
                smax[r][j] = smax[r][j + 1] + x.max(y);
                smin[r][j] = smin[r][j + 1] + x.min(y);
            }
        }
        let mut y = self.lo.clone();
        let mut partial = vec![0i128; self.rows.len()];
        let mut stop = false;
        self.descend(0, &mut y, &mut partial, &smax, &smin, meter, &mut visit, &mut stop)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend<F>(
        &self,
        j: usize,
        y: &mut Vec<i64>,
        partial: &mut Vec<i128>,
        smax: &[Vec<i128>],
        smin: &[Vec<i128>],
        meter: &mut Meter,
        visit: &mut F,
        stop: &mut bool,
    ) -> Result<()>
    where
        F: FnMut(&[i64]) -> Result<bool>,
    {
        let d = self.lo.len();
        if j == d {
            meter.tick()?;
            if !visit(y)? {
                *stop = true;
            }
            return Ok(());
        }
        let (mut lo, mut hi) = (self.lo[j] as i128, self.hi[j] as i128);
        for (r, (a, eq, rhs)) in self.rows.iter().enumerate() {
            let c = a[j] as i128;
            let rest_max = smax[r][j + 1];
            let rest_min = smin[r][j + 1];
            let need = *rhs as i128 - partial[r];
            // c*y_j + rest >= need with rest <= rest_max
            if c > 0 {
                lo = lo.max(div_ceil(need - rest_max, c));
            } else if c < 0 {
                hi = hi.min(div_floor(need - rest_max, c));
            } else if need - rest_max > 0 {
                return Ok(());
            }
            if *eq {
                // c*y_j + rest <= need with rest >= rest_min
                if c > 0 {
                    hi = hi.min(div_floor(need - rest_min, c));
                } else if c < 0 {
                    lo = lo.max(div_ceil(need - rest_min, c));
                } else if need - rest_min < 0 {
                    return Ok(());
                }
            }
            if lo > hi {
                return Ok(());
            }
        }
        let mut v = lo;
        while v <= hi {
            y[j] = v as i64;
            for (r, (a, _, _)) in self.rows.iter().enumerate() {
                partial[r] += a[j] as i128 * v;
            }
            self.descend(j + 1, y, partial, smax, smin, meter, visit, stop)?;
            for (r, (a, _, _)) in self.rows.iter().enumerate() {
                partial[r] -= a[j] as i128 * v;
            }
            if *stop {
                return Ok(());
            }
            v += 1;
        }
        Ok(())
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

impl Cone {
    /// Lattice points at height `level` of a cone whose generators all have
    /// last coordinate 1. With `interior`, only relative-interior points are
    /// returned. Points are in ambient coordinates, sorted.
    pub fn level_points(&self, level: i64, interior: bool, budget: &Budget) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.scan_level(level, interior, budget, |p| {
            out.push(p.to_vec());
            Ok(true)
        })?;
        out.sort();
        Ok(out)
    }

    /// Visits the lattice points at height `level` (see [`Cone::level_points`])
    /// until `visit` returns `false`.
    pub fn scan_level<F>(&self, level: i64, interior: bool, budget: &Budget, mut visit: F) -> Result<()>
    where
        F: FnMut(&[i64]) -> Result<bool>,
    {
        let dim = self.generators().dim();
        if self.generators().generators().iter().any(|g| g[dim - 1] != 1) {
            return Err(Error::Degenerate("generators are not at height one".into()));
        }
        let d = self.rank();
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for y in self.coords() {
            for k in 0..d {
                lo[k] = lo[k].min(y[k]);
                hi[k] = hi[k].max(y[k]);
            }
        }
        let lo = lo.iter().map(|&x| x * level).collect();
        let hi = hi.iter().map(|&x| x * level).collect();
        let mut search = BoxSearch::new(lo, hi);
        let mut height = vec![0; dim];
        height[dim - 1] = 1;
        search.equal(self.pull_back(&height), level);
        for h in self.facets() {
            search.at_least(h.clone(), i64::from(interior));
        }
        let mut meter = budget.meter("scanning lattice points");
        search.run(&mut meter, |y| visit(&self.to_ambient(y)?))
    }
}

/// Lattice points of `b * conv(vertices)`, sorted lexicographically.
pub fn dilation_lattice_points(vertices: &[Vec<i64>], b: i64, budget: &Budget) -> Result<Vec<Vec<i64>>> {
    if b < 0 {
        return Err(Error::MalformedInput("dilation factor must be non-negative".into()));
    }
    if vertices.is_empty() {
        return Ok(Vec::new());
    }
    if b == 0 {
        return Ok(vec![vec![0; vertices[0].len()]]);
    }
    let cone = Cone::new(&ConeGens::lifted(vertices, 1)?, budget)?;
    let mut pts = cone.level_points(b, false, budget)?;
    for p in &mut pts {
        p.pop();
    }
    Ok(pts)
}
