//! Exact two-phase simplex and branch-and-bound.
//!
//! Both solvers are deterministic: the simplex uses Bland's smallest-index
//! rule for entering and leaving variables, and branch-and-bound always
//! branches on the lowest-index fractional variable, exploring the floor
//! branch first.

use serde::{Deserialize, Serialize};

use super::{RatVector, Rational};
use crate::budget::Budget;
use crate::error::{check_dim, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: RatVector,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A linear program over rational data. Variables default to `x >= 0`;
/// a lower bound of `None` makes a variable free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: RatVector,
    pub constraints: Vec<Constraint>,
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: RatVector) -> Self {
        let n = objective.dim();
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
            lower: vec![Some(Rational::zero()); n],
            upper: vec![None; n],
        }
    }

    pub fn minimize(objective: RatVector) -> Self {
        Self::new(Sense::Minimize, objective)
    }

    pub fn maximize(objective: RatVector) -> Self {
        Self::new(Sense::Maximize, objective)
    }

    pub fn num_vars(&self) -> usize {
        self.objective.dim()
    }

    pub fn constraint(mut self, coeffs: RatVector, relation: Relation, rhs: Rational) -> Self {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn push(&mut self, coeffs: RatVector, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn free(mut self, var: usize) -> Self {
        self.lower[var] = None;
        self
    }

    /// Box every variable into `[0, bound]`.
    pub fn boxed(mut self, bound: Rational) -> Self {
        for (l, u) in self.lower.iter_mut().zip(self.upper.iter_mut()) {
            *l = Some(Rational::zero());
            *u = Some(bound.clone());
        }
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        check_dim(n, self.lower.len())?;
        check_dim(n, self.upper.len())?;
        for c in &self.constraints {
            check_dim(n, c.coeffs.dim())?;
        }
        Ok(())
    }

    /// True when `x` satisfies every constraint and bound exactly.
    pub fn is_feasible(&self, x: &RatVector) -> bool {
        if x.dim() != self.num_vars() {
            return false;
        }
        let bounds_ok = x.iter().enumerate().all(|(j, v)| {
            self.lower[j].as_ref().is_none_or(|l| v >= l)
                && self.upper[j].as_ref().is_none_or(|u| v <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = c.coeffs.dot(x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: RatVector },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&RatVector> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            LpOutcome::Optimal { .. } => "optimal",
            LpOutcome::Infeasible => "infeasible",
            LpOutcome::Unbounded => "unbounded",
        }
    }
}

// How an original variable maps onto the non-negative standard-form columns.
enum VarMap {
    Shifted { col: usize, shift: Rational },
    Split { pos: usize, neg: usize },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cost: Vec<Rational>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        let nz: Vec<usize> = (0..=self.width)
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for &j in &nz {
                let t = &f * &pivot_row[j];
                row[j] -= &t;
            }
        }
        if !self.cost[e].is_zero() {
            let f = self.cost[e].clone();
            for &j in &nz {
                let t = &f * &pivot_row[j];
                self.cost[j] -= &t;
            }
        }
        self.basis[r] = e;
    }

    /// Minimises the current cost row over columns `< allowed`. Returns
    /// false when unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(e) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => {
                        ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, e);
        }
    }

    fn set_cost(&mut self, c: &[Rational]) {
        let mut cost: Vec<Rational> = c.to_vec();
        cost.resize(self.width + 1, Rational::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            let f = cost[b].clone();
            for (j, v) in self.rows[r].iter().enumerate() {
                if !v.is_zero() {
                    let t = &f * v;
                    cost[j] -= &t;
                }
            }
        }
        self.cost = cost;
    }
}

/// Solves a linear program exactly.
pub fn lp_solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let n = lp.num_vars();

    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0;
    for j in 0..n {
        match &lp.lower[j] {
            Some(l) => {
                maps.push(VarMap::Shifted {
                    col: ncols,
                    shift: l.clone(),
                });
                ncols += 1;
            }
            None => {
                maps.push(VarMap::Split {
                    pos: ncols,
                    neg: ncols + 1,
                });
                ncols += 2;
            }
        }
    }

    // Standard-form rows over the structural columns.
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    let expand = |coeffs: &RatVector, rhs: &Rational| {
        let mut row = vec![Rational::zero(); ncols];
        let mut rhs = rhs.clone();
        for (j, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &maps[j] {
                VarMap::Shifted { col, shift } => {
                    row[*col] = a.clone();
                    if !shift.is_zero() {
                        rhs -= &(a * shift);
                    }
                }
                VarMap::Split { pos, neg } => {
                    row[*pos] = a.clone();
                    row[*neg] = -a;
                }
            }
        }
        (row, rhs)
    };
    for c in &lp.constraints {
        let (row, rhs) = expand(&c.coeffs, &c.rhs);
        rows.push((row, c.relation, rhs));
    }
    for j in 0..n {
        if let Some(u) = &lp.upper[j] {
            let (row, rhs) = expand(&RatVector::unit(n, j), u);
            rows.push((row, Relation::Le, rhs));
        }
    }
    for (row, rel, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            *rhs = -&*rhs;
            *rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let m = rows.len();
    let nslack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let nart = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let art_start = ncols + nslack;
    let width = art_start + nart;

    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        cost: Vec::new(),
        width,
    };
    let (mut s, mut a) = (ncols, art_start);
    for (row, rel, rhs) in rows {
        let mut full = row;
        full.resize(width + 1, Rational::zero());
        full[width] = rhs;
        match rel {
            Relation::Le => {
                full[s] = Rational::one();
                tab.basis.push(s);
                s += 1;
            }
            Relation::Ge => {
                full[s] = -Rational::one();
                s += 1;
                full[a] = Rational::one();
                tab.basis.push(a);
                a += 1;
            }
            Relation::Eq => {
                full[a] = Rational::one();
                tab.basis.push(a);
                a += 1;
            }
        }
        tab.rows.push(full);
    }

    if nart > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(art_start) {
            *c = Rational::one();
        }
        tab.set_cost(&phase1);
        tab.run(width);
        if !tab.cost[width].is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= art_start {
                if let Some(e) = (0..art_start).find(|&j| !tab.rows[r][j].is_zero()) {
                    tab.pivot(r, e);
                } else {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
            r += 1;
        }
    }

    let mut cost = vec![Rational::zero(); width];
    for (j, c) in lp.objective.iter().enumerate() {
        let c = match lp.sense {
            Sense::Minimize => c.clone(),
            Sense::Maximize => -c,
        };
        match &maps[j] {
            VarMap::Shifted { col, .. } => cost[*col] = c,
            VarMap::Split { pos, neg } => {
                cost[*neg] = -&c;
                cost[*pos] = c;
            }
        }
    }
    tab.set_cost(&cost);
    if !tab.run(art_start) {
        return Ok(LpOutcome::Unbounded);
    }

    let mut std_x = vec![Rational::zero(); ncols];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < ncols {
            std_x[b] = tab.rhs(r).clone();
        }
    }
    let point = RatVector::new(
        maps.iter()
            .map(|m| match m {
                VarMap::Shifted { col, shift } => &std_x[*col] + shift,
                VarMap::Split { pos, neg } => &std_x[*pos] - &std_x[*neg],
            })
            .collect(),
    );
    let value = lp.objective.dot(&point);
    debug_assert!(lp.is_feasible(&point));
    Ok(LpOutcome::Optimal { value, point })
}

/// Integer optimum over all-integer variables by branch-and-bound on
/// [`lp_solve`] relaxations. Every variable needs a finite range derivable
/// from the constraints or an explicit box; otherwise the search may not
/// terminate before the budget runs out.
pub fn ilp_solve(lp: &LinearProgram, budget: &Budget) -> Result<LpOutcome> {
    lp.validate()?;
    let minimize = lp.sense == Sense::Minimize;
    let integral_objective = lp.objective.is_integral();
    let mut incumbent: Option<(Rational, RatVector)> = None;
    let mut meter = budget.meter("branch-and-bound nodes");
    let mut stack = vec![lp.clone()];

    while let Some(node) = stack.pop() {
        meter.tick()?;
        let (value, point) = match lp_solve(&node)? {
            LpOutcome::Optimal { value, point } => (value, point),
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded => return Ok(LpOutcome::Unbounded),
        };
        // Oriented so that smaller is better.
        let key = if minimize { value.clone() } else { -&value };
        if let Some((best, _)) = &incumbent {
            let bound = if integral_objective { key.ceil() } else { key.clone() };
            if bound >= *best {
                continue;
            }
        }
        match point.iter().position(|v| !v.is_integer()) {
            None => {
                incumbent = Some((key, point));
            }
            Some(j) => {
                let v = &point[j];
                let mut up = node.clone();
                let lo = v.ceil();
                up.lower[j] = Some(match &up.lower[j] {
                    Some(l) if *l > lo => l.clone(),
                    _ => lo,
                });
                let mut down = node;
                let hi = v.floor();
                down.upper[j] = Some(match &down.upper[j] {
                    Some(u) if *u < hi => u.clone(),
                    _ => hi,
                });
                // Floor branch is popped first.
                stack.push(up);
                stack.push(down);
            }
        }
    }
    Ok(match incumbent {
        Some((key, point)) => LpOutcome::Optimal {
            value: if minimize { key } else { -key },
            point,
        },
        None => LpOutcome::Infeasible,
    })
}
