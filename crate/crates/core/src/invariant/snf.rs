//! Exact integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().map(|&v| v.into())).collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Diagonal entries `D[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += factor * row[source]`
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = factor * self.get(source, j);
            self.entries[target * self.cols + j] += v;
        }
    }

    /// `col[target] += factor * col[source]`
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = factor * self.get(i, source);
            self.entries[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next, all nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    /// Recomputes `u·m·v`, both determinants, and the divisibility chain.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        let product = self.u.mul(m).and_then(|um| um.mul(&self.v));
        let unimodular = |x: &IntegerMatrix| x.determinant().is_ok_and(|d| d.abs().is_one());
        let diag = self.d.diagonal();
        let chain = diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        });
        product.is_ok_and(|p| p == self.d)
            && unimodular(&self.u)
            && unimodular(&self.v)
            && self.d.is_diagonal()
            && chain
            && diag.iter().all(|x| !x.is_negative())
    }
}

/// Smith normal form over exact integers.
///
/// The pivot is the nonzero entry of least absolute value in the remaining
/// block, first in row-major order on ties.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let e = d.get(i, j);
                    if !e.is_zero() && pivot.is_none_or(|(pi, pj)| e.abs() < d.get(pi, pj).abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = d.get(i, t) / &p;
                if !q.is_zero() {
                    d.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = d.get(t, j) / &p;
                if !q.is_zero() {
                    d.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn diag(m: &IntegerMatrix) -> Vec<i64> {
        m.diagonal().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        let m = mat(&[vec![1, -1], vec![-1, 1]]);
        let s = smith_normal_form(&m);
        assert_eq!(diag(&s.d), [1, 0]);
        assert!(s.verify(&m));

        let z = IntegerMatrix::zeros(2, 3);
        let s = smith_normal_form(&z);
        assert!(s.d.is_zero());
        assert!(s.verify(&z));

        let m = mat(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(diag(&s.d), [1, 6]);
        assert!(s.verify(&m));
    }

    #[test]
    fn snf_rectangular_and_negative() {
        let m = mat(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form(&m);
        assert_eq!(diag(&s.d), [2, 6, 12]);
        assert!(s.verify(&m));
        let m = mat(&[vec![4, 6], vec![6, 9], vec![2, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(diag(&s.d), [1, 0]);
        assert!(s.verify(&m));
        let m = mat(&[vec![-3]]);
        assert_eq!(diag(&smith_normal_form(&m).d), [3]);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(mat(&[vec![2, 1], vec![7, 4]]).determinant().unwrap(), BigInt::from(1));
        assert_eq!(mat(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).determinant().unwrap(), BigInt::from(-2));
        assert_eq!(mat(&[vec![1, 2], vec![2, 4]]).determinant().unwrap(), BigInt::from(0));
        assert_eq!(IntegerMatrix::zeros(0, 0).determinant().unwrap(), BigInt::from(1));
    }

    #[test]
    fn verify_rejects_wrong_forms() {
        let m = mat(&[vec![2, 0], vec![0, 3]]);
        let bad = SmithForm { u: IntegerMatrix::identity(2), d: m.clone(), v: IntegerMatrix::identity(2) };
        assert!(!bad.verify(&m), "2 does not divide 3");
    }
}
