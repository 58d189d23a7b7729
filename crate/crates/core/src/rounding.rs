//! Deciders for the integer rounding property in both directions, the
//! definitional witness search, and the Ehrhart ring equality check.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::Budget;
use crate::combinatorics::Clutter;
use crate::error::{Error, Result};
use crate::exact::{ilp_solve, lp_solve, LinearProgram, LpOutcome, RatMatrix, RatVector, Rational, Relation};
use crate::polyhedra::{Cone, ConeGens, Normality, SemigroupSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// `min <y,1>` subject to `Ay >= alpha`.
    #[serde(rename = "<=")]
    Leq,
    /// `max <y,1>` subject to `Ay <= w`.
    #[serde(rename = ">=")]
    Geq,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Leq => "<=",
            Direction::Geq => ">=",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "<=" | "leq" | "le" => Ok(Direction::Leq),
            ">=" | "geq" | "ge" => Ok(Direction::Geq),
            _ => Err(Error::MalformedInput(format!("unknown direction {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IrpMethod {
    Normality,
    Witness,
}

/// An integral right-hand side where rounding the LP optimum misses the
/// integer optimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundingWitness {
    pub direction: Direction,
    pub alpha: Vec<i64>,
    pub lp_value: Rational,
    /// `ceil` of the LP value for `<=`, `floor` for `>=`.
    pub rounded: i64,
    pub ilp_value: i64,
    pub ilp_point: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IrpCertificate {
    /// A lattice point of the cone outside the semigroup.
    Normality { witness: Vec<i64> },
    Witness(RoundingWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrpVerdict {
    pub holds: bool,
    pub method: IrpMethod,
    pub certificate: Option<IrpCertificate>,
}

impl IrpVerdict {
    fn from_normality(n: Normality) -> Self {
        IrpVerdict {
            holds: n.normal,
            method: IrpMethod::Normality,
            certificate: n.witness.map(|witness| IrpCertificate::Normality { witness }),
        }
    }
}

/// The cone over `{(w,1)}` for the closure generators `w` of `c`.
pub fn closure_cone(c: &Clutter) -> Result<ConeGens> {
    ConeGens::lifted(&c.closure_generators(), 1)
}

/// The cone over `{(e_i,0)} u {(v_j,1)}`.
pub fn rees_cone(columns: &[Vec<i64>]) -> Result<ConeGens> {
    let n = columns
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::MalformedInput("no columns".into()))?;
    let mut gens = Vec::with_capacity(n + columns.len());
    for i in 0..n {
        let mut e = vec![0; n + 1];
        e[i] = 1;
        gens.push(e);
    }
    for v in columns {
        let mut g = v.clone();
        g.push(1);
        gens.push(g);
    }
    ConeGens::new(n + 1, gens)
}

/// `<=` rounding decided by normality of the closure cone.
pub fn irp_leq(c: &Clutter, budget: &Budget) -> Result<IrpVerdict> {
    let cone = Cone::new(&closure_cone(c)?, budget)?;
    Ok(IrpVerdict::from_normality(cone.normality(budget)?))
}

/// `>=` rounding decided by normality of the Rees cone.
pub fn irp_geq(c: &Clutter, budget: &Budget) -> Result<IrpVerdict> {
    let cone = Cone::new(&rees_cone(&c.columns())?, budget)?;
    Ok(IrpVerdict::from_normality(cone.normality(budget)?))
}

/// Twice the largest column sum of `a`, rounded up.
pub fn default_window(a: &RatMatrix) -> i64 {
    let max = (0..a.cols())
        .map(|j| a.column(j).total())
        .max()
        .unwrap_or_else(Rational::zero);
    2 * max.ceil().to_i64().unwrap_or(i64::MAX / 2)
}

/// Optimal values of the LP relaxation and the integer program for one
/// right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimumPair {
    pub lp_value: Rational,
    pub lp_point: RatVector,
    pub ilp_value: i64,
    pub ilp_point: Vec<i64>,
}

/// Solves `min <y,1> : Ay >= rhs` (for `Leq`) or `max <y,1> : Ay <= rhs`
/// (for `Geq`) over `y >= 0`, rationally and in integers. `None` when the
/// LP optimum is not finite.
pub fn optimum_pair(
    a: &RatMatrix,
    direction: Direction,
    rhs: &[i64],
    budget: &Budget,
) -> Result<Option<OptimumPair>> {
    crate::error::check_dim(a.rows(), rhs.len())?;
    let (n, q) = (a.rows(), a.cols());
    let ones = RatVector::from_ints(&vec![1; q]);
    let (mut lp, rel) = match direction {
        Direction::Leq => (LinearProgram::minimize(ones), Relation::Ge),
        Direction::Geq => (LinearProgram::maximize(ones), Relation::Le),
    };
    for i in 0..n {
        lp.push(a.row(i), rel, Rational::from(rhs[i]));
    }
    let (lp_value, lp_point) = match lp_solve(&lp)? {
        LpOutcome::Optimal { value, point } => (value, point),
        LpOutcome::Infeasible | LpOutcome::Unbounded => return Ok(None),
    };
    let ilp_point = match lp_point.to_i64s() {
        Some(p) => p,
        None => {
            // Any optimal integer point lies in this box, so it keeps
            // branch-and-bound finite.
            for (j, b) in integer_bounds(a, direction, rhs).into_iter().enumerate() {
                lp.upper[j] = Some(Rational::from(b));
            }
            match ilp_solve(&lp, budget)? {
                LpOutcome::Optimal { point, .. } => point
                    .to_i64s()
                    .ok_or(Error::Overflow("integer optimum"))?,
                _ => return Err(Error::Lp("integer program lost feasibility inside its box")),
            }
        }
    };
    Ok(Some(OptimumPair {
        lp_value,
        lp_point,
        ilp_value: ilp_point.iter().sum(),
        ilp_point,
    }))
}

/// Checks the rounding identity at one right-hand side. Returns the witness
/// when it fails, `None` when it holds or the LP optimum is not finite.
pub fn rounding_gap(
    a: &RatMatrix,
    direction: Direction,
    alpha: &[i64],
    budget: &Budget,
) -> Result<Option<RoundingWitness>> {
    let Some(pair) = optimum_pair(a, direction, alpha, budget)? else {
        return Ok(None);
    };
    let rounded = match direction {
        Direction::Leq => pair.lp_value.ceil(),
        Direction::Geq => pair.lp_value.floor(),
    };
    let rounded = rounded.to_i64().ok_or(Error::Overflow("rounded LP value"))?;
    Ok((pair.ilp_value != rounded).then(|| RoundingWitness {
        direction,
        alpha: alpha.to_vec(),
        lp_value: pair.lp_value,
        rounded,
        ilp_value: pair.ilp_value,
        ilp_point: pair.ilp_point,
    }))
}

fn integer_bounds(a: &RatMatrix, direction: Direction, alpha: &[i64]) -> Vec<i64> {
    let (n, q) = (a.rows(), a.cols());
    match direction {
        Direction::Leq => {
            // Covering each row with its heaviest column bounds the optimum.
            let total: i64 = (0..n)
                .filter(|&i| alpha[i] > 0)
                .map(|i| {
                    let m = (0..q).map(|j| a[(i, j)].clone()).max().unwrap_or_else(Rational::zero);
                    (&Rational::from(alpha[i]) / &m).ceil().to_i64().unwrap_or(i64::MAX / 4)
                })
                .sum();
            vec![total; q]
        }
        Direction::Geq => (0..q)
            .map(|j| {
                (0..n)
                    .filter(|&i| a[(i, j)].is_positive())
                    .map(|i| (&Rational::from(alpha[i]) / &a[(i, j)]).floor().to_i64().unwrap_or(0))
                    .min()
                    .unwrap_or(0)
            })
            .collect(),
    }
}

/// First `alpha` in `{0..window}^n`, in lexicographic order, violating the
/// rounding identity in the given direction.
pub fn irp_witness_search(
    a: &RatMatrix,
    direction: Direction,
    window: i64,
    budget: &Budget,
) -> Result<Option<RoundingWitness>> {
    if window < 1 {
        return Err(Error::MalformedInput("window must be at least 1".into()));
    }
    if a.rows() == 0 {
        return Ok(None);
    }
    let mut meter = budget.meter("witness search right-hand sides");
    let mut alpha = vec![0i64; a.rows()];
    loop {
        meter.tick()?;
        if let Some(w) = rounding_gap(a, direction, &alpha, budget)? {
            return Ok(Some(w));
        }
        let mut k = alpha.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            alpha[k] += 1;
            if alpha[k] <= window {
                break;
            }
            alpha[k] = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartFailure {
    pub b: i64,
    pub point: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartCheck {
    pub equal_up_to_b: bool,
    pub b_max: i64,
    pub failing_point: Option<EhrhartFailure>,
}

/// Checks, for `1 <= b <= b_max`, that every lattice point of
/// `b * conv(v_1..v_q)` is a sum of `b` edge vectors.
pub fn ehrhart_equality(c: &Clutter, b_max: i64, budget: &Budget) -> Result<EhrhartCheck> {
    if c.uniform_size().is_none() {
        return Err(Error::NotUniform);
    }
    let gens = ConeGens::lifted(&c.columns(), 1)?;
    let cone = Cone::new(&gens, budget)?;
    let mut search = SemigroupSearch::new(&gens, budget);
    for b in 1..=b_max {
        let mut failure = None;
        cone.scan_level(b, false, budget, |p| {
            if search.decompose(p)?.is_none() {
                failure = Some(p.to_vec());
                return Ok(false);
            }
            Ok(true)
        })?;
        if let Some(mut point) = failure {
            point.pop();
            return Ok(EhrhartCheck {
                equal_up_to_b: false,
                b_max,
                failing_point: Some(EhrhartFailure { b, point }),
            });
        }
    }
    Ok(EhrhartCheck {
        equal_up_to_b: true,
        b_max,
        failing_point: None,
    })
}
