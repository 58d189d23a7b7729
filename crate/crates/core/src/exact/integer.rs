//! Fraction-free integer linear algebra.
//!
//! Everything here works on small integer matrices (lattice generators,
//! hyperplane systems) with `i128` intermediates and checked arithmetic.
//! Overflow surfaces as [`Error::Overflow`] rather than a wrong answer.

use crate::error::{Error, Result};

fn ovf() -> Error {
    Error::Overflow("integer elimination")
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(ovf)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or_else(ovf)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(ovf)
}

pub fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended Euclid: `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Fraction-free Gauss–Jordan elimination on the leading `n` columns of an
/// `n x m` matrix. On success every diagonal entry equals the same value `D`
/// (the determinant up to sign) and the remaining columns hold `D` times the
/// solution of the corresponding system. Returns `None` when singular.
pub fn gauss_jordan(a: &mut [Vec<i128>]) -> Result<Option<i128>> {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| a[r][k] != 0) else {
            return Ok(None);
        };
        a.swap(k, p);
        let pivot = a[k][k];
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[i][k];
            for j in 0..m {
                if j == k {
                    continue;
                }
                let v = sub(mul(pivot, a[i][j])?, mul(f, a[k][j])?)?;
                debug_assert_eq!(v % prev, 0);
                a[i][j] = v / prev;
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }
    Ok(Some(prev))
}

/// Solves the square system `rows * x = rhs`; returns `(numerators, D)` with
/// `x = numerators / D`, or `None` when singular.
pub fn solve(rows: &[&[i64]], rhs: &[i64]) -> Result<Option<(Vec<i128>, i128)>> {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            debug_assert_eq!(r.len(), n);
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.push(b as i128);
            row
        })
        .collect();
    let Some(d) = gauss_jordan(&mut a)? else {
        return Ok(None);
    };
    Ok(Some((a.iter().map(|r| r[n]).collect(), d)))
}

/// `(D, D * M^{-1})` for a square integer matrix given by rows.
pub fn scaled_inverse(rows: &[Vec<i64>]) -> Result<Option<(i128, Vec<Vec<i128>>)>> {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.extend((0..n).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    let Some(d) = gauss_jordan(&mut a)? else {
        return Ok(None);
    };
    Ok(Some((d, a.into_iter().map(|r| r[n..].to_vec()).collect())))
}

/// Determinant by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| a[r][k] != 0) else {
            return Ok(0);
        };
        if p != k {
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = sub(mul(a[k][k], a[i][j])?, mul(a[i][k], a[k][j])?)? / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                let g = gcd(x, y);
                let (fx, fy) = (x / g, y / g);
                for j in c..cols {
                    a[i][j] = sub(mul(fx, a[i][j])?, mul(fy, a[r][j])?)?;
                }
                let rg = a[i][c + 1..].iter().fold(0, |acc, &v| gcd(acc, v));
                if rg > 1 {
                    for v in &mut a[i][c + 1..] {
                        *v /= rg;
                    }
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    Ok(r)
}

/// Divides out the content of a vector (gcd of its entries).
pub fn primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x as i128));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g as i64;
        }
    }
}

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| ovf())
}

/// A lattice basis of `{x in Z^d : rows * x = 0}`.
pub fn integer_kernel(rows: &[Vec<i64>], d: usize) -> Result<Vec<Vec<i64>>> {
    // Column operations applied simultaneously to `a` and to `u` (d x d,
    // stored by columns) keep `a = rows * u` with `u` unimodular.
    let mut a: Vec<Vec<i128>> = (0..d)
        .map(|j| rows.iter().map(|r| r[j] as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..d)
        .map(|j| (0..d).map(|i| i128::from(i == j)).collect())
        .collect();
    let mut p = 0;
    for i in 0..rows.len() {
        if p == d {
            break;
        }
        for j in p + 1..d {
            let b = a[j][i];
            if b == 0 {
                continue;
            }
            let x = a[p][i];
            let (g, s, t) = ext_gcd(x, b);
            let (xg, bg) = (x / g, b / g);
            let combine = |cols: &mut Vec<Vec<i128>>| -> Result<()> {
                for r in 0..cols[p].len() {
                    let cp = cols[p][r];
                    let cj = cols[j][r];
                    cols[p][r] = add(mul(s, cp)?, mul(t, cj)?)?;
                    cols[j][r] = sub(mul(xg, cj)?, mul(bg, cp)?)?;
                }
                Ok(())
            };
            combine(&mut a)?;
            combine(&mut u)?;
        }
        if a[p][i] != 0 {
            p += 1;
        }
    }
    let mut kernel = u[p..]
        .iter()
        .map(|c| c.iter().map(|&x| to_i64(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    hermite_rows(&mut kernel)?;
    Ok(kernel)
}

/// Brings a lattice basis (given as rows) into row Hermite normal form:
/// echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. The lattice spanned is unchanged. Zero rows are dropped.
pub fn hermite_rows(basis: &mut Vec<Vec<i64>>) -> Result<()> {
    let Some(cols) = basis.first().map(Vec::len) else {
        return Ok(());
    };
    let mut a: Vec<Vec<i128>> = basis
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        for i in r + 1..a.len() {
            let b = a[i][c];
            if b == 0 {
                continue;
            }
            let x = a[r][c];
            let (g, s, t) = ext_gcd(x, b);
            let (xg, bg) = (x / g, b / g);
            for k in 0..cols {
                let vr = a[r][k];
                let vi = a[i][k];
                a[r][k] = add(mul(s, vr)?, mul(t, vi)?)?;
                a[i][k] = sub(mul(xg, vi)?, mul(bg, vr)?)?;
            }
        }
        if a[r][c] == 0 {
            if let Some(p) = (r + 1..a.len()).find(|&i| a[i][c] != 0) {
                a.swap(r, p);
            } else {
                continue;
            }
        }
        if a[r][c] < 0 {
            for v in &mut a[r] {
                *v = -*v;
            }
        }
        let piv = a[r][c];
        for i in 0..r {
            let f = a[i][c].div_euclid(piv);
            if f != 0 {
                for k in 0..cols {
                    a[i][k] = sub(a[i][k], mul(f, a[r][k])?)?;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    *basis = a
        .into_iter()
        .map(|row| row.into_iter().map(to_i64).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(())
}

/// Basis of the saturated lattice `span(vectors) ∩ Z^d`, in row Hermite form.
pub fn saturated_basis(vectors: &[Vec<i64>], d: usize) -> Result<Vec<Vec<i64>>> {
    let orth = integer_kernel(vectors, d)?;
    if orth.is_empty() {
        return Ok((0..d)
            .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
            .collect());
    }
    integer_kernel(&orth, d)
}

/// Coordinates with respect to a lattice basis.
#[derive(Clone, Debug)]
pub struct LatticeCoordinates {
    basis: Vec<Vec<i64>>,
    ambient: usize,
    // k coordinate positions where the basis restricted to them is invertible
    pivots: Vec<usize>,
    det: i128,
    inv: Vec<Vec<i128>>,
    identity: bool,
}

impl LatticeCoordinates {
    pub fn new(basis: Vec<Vec<i64>>, ambient: usize) -> Result<Self> {
        let k = basis.len();
        let identity = k == ambient
            && basis
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)));
        if identity {
            return Ok(LatticeCoordinates {
                basis,
                ambient,
                pivots: (0..ambient).collect(),
                det: 1,
                inv: Vec::new(),
                identity,
            });
        }
        // Greedily pick coordinate positions that keep the k x k minor of
        // full rank.
        let mut pivots = Vec::with_capacity(k);
        for c in 0..ambient {
            let mut trial = pivots.clone();
            trial.push(c);
            let minor: Vec<Vec<i64>> = basis
                .iter()
                .map(|r| trial.iter().map(|&t| r[t]).collect())
                .collect();
            if rank(&minor)? == trial.len() {
                pivots = trial;
                if pivots.len() == k {
                    break;
                }
            }
        }
        if pivots.len() != k {
            return Err(Error::Degenerate("lattice basis is not independent".into()));
        }
        // Square system: sum_i y_i * basis[i][pivot] = p[pivot]; rows indexed
        // by pivot, columns by basis vector.
        let square: Vec<Vec<i64>> = pivots
            .iter()
            .map(|&c| basis.iter().map(|r| r[c]).collect())
            .collect();
        let (det, inv) = scaled_inverse(&square)?
            .ok_or_else(|| Error::Degenerate("singular lattice minor".into()))?;
        Ok(LatticeCoordinates {
            basis,
            ambient,
            pivots,
            det,
            inv,
            identity,
        })
    }

    /// Lattice rank `k`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Coordinates of `p`, or `None` when `p` is not in the lattice.
    pub fn coords(&self, p: &[i64]) -> Result<Option<Vec<i64>>> {
        if self.identity {
            return Ok(Some(p.to_vec()));
        }
        let mut y = Vec::with_capacity(self.rank());
        for row in &self.inv {
            let mut s = 0i128;
            for (&m, &c) in row.iter().zip(&self.pivots) {
                s = add(s, mul(m, p[c] as i128)?)?;
            }
            if s % self.det != 0 {
                return Ok(None);
            }
            y.push(to_i64(s / self.det)?);
        }
        if self.point(&y)? != p {
            return Ok(None);
        }
        Ok(Some(y))
    }

    /// Ambient point with coordinates `y`.
    pub fn point(&self, y: &[i64]) -> Result<Vec<i64>> {
        if self.identity {
            return Ok(y.to_vec());
        }
        let mut p = vec![0i128; self.ambient];
        for (b, &c) in self.basis.iter().zip(y) {
            if c == 0 {
                continue;
            }
            for (pj, &bj) in p.iter_mut().zip(b) {
                *pj = add(*pj, mul(c as i128, bj as i128)?)?;
            }
        }
        p.into_iter().map(to_i64).collect()
    }
}
