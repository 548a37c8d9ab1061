use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::CoreError;
use crate::field::Field;
use crate::rational::Rational;

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// A matrix with the given vectors as columns, all of length `len`.
    pub fn from_cols(len: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..len {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s).collect() }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, CoreError> {
        if self.cols != o.rows {
            return Err(CoreError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    m.data[idx] = m.data[idx].clone() + a.clone() * o.get(k, j);
                }
            }
        }
        Ok(m)
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j).clone() * &v[j];
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..o.cols {
                m.set(i, self.cols + j, o.get(i, j).clone());
            }
        }
        m
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut m = Self::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.set(i, k, self.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and pivot columns. Uses the field's
    /// specialised routine when it provides one.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        if let Some(r) = F::rref_hook(self) {
            return r;
        }
        rref_generic(self)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as the columns of a `cols × k` matrix.
    pub fn kernel(&self) -> Self {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !piv.contains(j)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (t, &f) in free.iter().enumerate() {
            k.set(f, t, F::one());
            for (row, &p) in piv.iter().enumerate() {
                k.set(p, t, -r.get(row, f).clone());
            }
        }
        k
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn image(&self) -> Self {
        let (_, piv) = self.rref();
        self.select_cols(&piv)
    }

    /// A surjection `P: F^rows → F^{rows − rank}` with `P·self = 0`.
    pub fn cokernel(&self) -> Self {
        self.transpose().kernel().transpose()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let (r, piv) = self.hstack(&Self::identity(n)).rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, 2 * n))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return F::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det = det * &piv;
            let pinv = piv.inv().unwrap();
            for i in c + 1..n {
                let f = a.get(i, c).clone() * &pinv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(i, j).clone() - f.clone() * a.get(c, j);
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    /// Some `X` with `self · X = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let (r, piv) = self.hstack(b).rref();
        if piv.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (row, &p) in piv.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Row-major nested JSON array of scalars.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::Value::Array(self.row(i).iter().map(F::to_json).collect()))
                .collect(),
        )
    }

    /// Parse a nested array; `cols` disambiguates the shape of an empty
    /// matrix.
    pub fn from_json(v: &serde_json::Value, cols: usize) -> Result<Self, CoreError> {
        let rows = v.as_array().ok_or_else(|| CoreError::Parse("matrix: expected array".into()))?;
        let mut out = Vec::new();
        for r in rows {
            let r = r.as_array().ok_or_else(|| CoreError::Parse("matrix row: expected array".into()))?;
            out.push(r.iter().map(F::from_json).collect::<Result<Vec<_>, _>>()?);
        }
        if out.is_empty() {
            return Ok(Self::zeros(0, cols));
        }
        if out.iter().any(|r| r.len() != out[0].len()) {
            return Err(CoreError::Parse("matrix: ragged rows".into()));
        }
        Ok(Self::from_rows(out))
    }
}

fn rref_generic<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).inv().unwrap();
        for j in c..a.cols {
            let v = a.get(r, j).clone() * &inv;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let v = a.get(i, j).clone() - f.clone() * a.get(r, j);
                a.set(i, j, v);
            }
        }
        piv.push(c);
        r += 1;
    }
    (a, piv)
}

fn primitive_part(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Reduced row echelon form over Q by fraction-free (Bareiss) forward
/// elimination on integer rows, followed by integer back-elimination with
/// content removal. Exactly one rational division per entry at the end.
pub fn rref_fraction_free(m: &Matrix<Rational>) -> (Matrix<Rational>, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = &m.data[i * cols..(i + 1) * cols];
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut piv = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                for x in row[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &prow[c] / &prev;
                    }
                }
                continue;
            }
            for j in c + 1..cols {
                row[j] = (&prow[c] * &row[j] - &row[c] * &prow[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = prow[c].clone();
        piv.push(c);
        r += 1;
    }
    a.truncate(r);
    for row in a.iter_mut() {
        primitive_part(row);
    }
    for k in (0..r).rev() {
        let c = piv[k];
        let (above, rest) = a.split_at_mut(k);
        let prow = &rest[0];
        for row in above.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = prow[c].gcd(&row[c]);
            let fp = &prow[c] / &g;
            let fr = &row[c] / &g;
            for j in 0..cols {
                row[j] = &fp * &row[j] - &fr * &prow[j];
            }
            primitive_part(row);
        }
    }
    let mut out = Matrix::zeros(rows, cols);
    for (k, row) in a.iter().enumerate() {
        let p = &row[piv[k]];
        let sign_p = if p.is_negative() { -p.clone() } else { p.clone() };
        let neg = p.is_negative();
        for j in 0..cols {
            if row[j].is_zero() {
                continue;
            }
            let n = if neg { -row[j].clone() } else { row[j].clone() };
            out.set(k, j, Rational::from_bigints(n, sign_p.clone()));
        }
    }
    (out, piv)
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", r.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a, F: Field> Mul<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, o: &'a Matrix<F>) -> Matrix<F> {
        self.try_mul(o).expect("matrix dimension mismatch")
    }
}

impl<'a, F: Field> Add<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, o: &'a Matrix<F>) -> Matrix<F> {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }
}

impl<'a, F: Field> Sub<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, o: &'a Matrix<F>) -> Matrix<F> {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect())
    }

    #[test]
    fn fraction_free_matches_generic() {
        let a = m(&[&[2, 4, 1, 3], &[1, 2, 0, 1], &[3, 6, 1, 4], &[0, 0, 5, 7]]);
        let (r1, p1) = rref_fraction_free(&a);
        let (r2, p2) = rref_generic(&a);
        assert_eq!(p1, p2);
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_and_cokernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
        let c = a.cokernel();
        assert_eq!(c.rows(), 1);
        assert!((&c * &a).is_zero());
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det(), Rational::one());
        let ai = a.inverse().unwrap();
        assert_eq!(&a * &ai, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), -Rational::one());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&m(&[&[3], &[1]])).unwrap();
        assert_eq!(x, m(&[&[2], &[1]]));
        assert!(m(&[&[1, 1], &[2, 2]]).solve(&m(&[&[1], &[3]])).is_none());
    }
}
