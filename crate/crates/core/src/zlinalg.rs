//! Exact integer matrices, Smith normal form, and finitely generated abelian
//! group invariants.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense row-major matrix of arbitrary precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(cols, rows).expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Returns a copy with `extra` appended as a final row.
    pub fn with_row(&self, extra: &[BigInt]) -> Result<Self, LinalgError> {
        if extra.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: extra.len(),
            });
        }
        let mut out = self.clone();
        out.data.extend(extra.iter().cloned());
        out.rows += 1;
        Ok(out)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Determinant by fraction-free Gaussian elimination. `None` if not square.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Some(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * &a[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `u * m * v == d`, with `u` and `v` unimodular and `d` diagonal with a
/// nonnegative divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&d, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let line = (t..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = smallest_entry(&d, line).expect("pivot row or column nonzero");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Every remaining entry must be a multiple of the pivot.
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d, u, v }
}

fn smallest_entry(
    d: &IntMatrix,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in positions {
        let x = d[(i, j)].abs();
        if x.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| &x < b) {
            best = Some(((i, j), x));
        }
    }
    best.map(|(p, _)| p)
}

/// `Z^free_rank + Z/t_1 + ... + Z/t_k` with `t_i >= 2` and `t_i | t_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Option<Self> {
        let chain_ok = torsion.iter().all(|t| t >= &BigInt::from(2))
            && torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        chain_ok.then_some(AbelianInvariants { free_rank, torsion })
    }

    pub fn from_i64(free_rank: usize, torsion: &[i64]) -> Option<Self> {
        AbelianInvariants::new(free_rank, torsion.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Dimension of `Hom(A, Z/2)`.
    pub fn mod2_rank(&self) -> usize {
        self.free_rank + self.torsion.iter().filter(|t| t.is_even()).count()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Invariants of `Z^cols / rowspace(m)`.
pub fn cokernel_invariants(m: &IntMatrix) -> AbelianInvariants {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    AbelianInvariants {
        free_rank: m.cols - rank,
        torsion: diag.into_iter().filter(|x| x > &BigInt::one()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl ElementOrder {
    pub fn is(&self, k: &BigInt) -> bool {
        matches!(self, ElementOrder::Finite(n) if n == k)
    }
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// Order of `v + rowspace(m)` in `Z^cols / rowspace(m)`.
pub fn element_order_in_cokernel(v: &[BigInt], m: &IntMatrix) -> Result<ElementOrder, LinalgError> {
    if v.len() != m.cols {
        return Err(LinalgError::DimensionMismatch {
            expected: m.cols,
            got: v.len(),
        });
    }
    let snf = smith_normal_form(m);
    // x -> x V carries rowspace(m) onto rowspace(D).
    let coords: Vec<BigInt> = (0..m.cols)
        .map(|j| (0..m.cols).map(|k| &v[k] * &snf.v[(k, j)]).sum())
        .collect();
    let diag = snf.diagonal();
    let mut order = BigInt::one();
    for (j, y) in coords.iter().enumerate() {
        let dj = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        if dj.is_zero() {
            if !y.is_zero() {
                return Ok(ElementOrder::Infinite);
            }
            continue;
        }
        let local = &dj / dj.gcd(y);
        order = order.lcm(&local);
    }
    Ok(ElementOrder::Finite(order))
}

/// Integer coefficients `x` with `x m = v`, when `v` lies in the row space.
pub fn solve_row_combination(m: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if v.len() != m.cols {
        return Err(LinalgError::DimensionMismatch {
            expected: m.cols,
            got: v.len(),
        });
    }
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let rank = snf.rank();
    let mut y = vec![BigInt::zero(); m.rows];
    for j in 0..m.cols {
        let w: BigInt = (0..m.cols).map(|k| &v[k] * &snf.v[(k, j)]).sum();
        if j < rank {
            let (q, r) = w.div_mod_floor(&diag[j]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[j] = q;
        } else if !w.is_zero() {
            return Ok(None);
        }
    }
    let x = (0..m.rows)
        .map(|i| (0..m.rows).map(|k| &y[k] * &snf.u[(k, i)]).sum())
        .collect();
    Ok(Some(x))
}

/// A nonzero integer vector `w` with `m w = 0`, if one exists. Normalized to
/// be primitive with its first nonzero entry positive.
pub fn integer_kernel_vector(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    if rank >= m.cols {
        return None;
    }
    let mut w: Vec<BigInt> = (0..m.cols).map(|i| snf.v[(i, rank)].clone()).collect();
    let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in &mut w {
        *x = &*x / &g;
    }
    if w.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut w {
            *x = -&*x;
        }
    }
    Some(w)
}
