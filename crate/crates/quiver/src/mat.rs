//! Small matrix utilities shared by the quiver and bow code.

use rand::Rng;
use serde_json::Value;

use cyclodaha_core::{Field, Matrix, Rational};

use crate::error::QuiverError;

pub type Mat = Matrix<Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn one_plus(m: &Mat) -> Mat {
    &Mat::identity(m.rows()) + m
}

pub fn scalar(n: usize, c: &Rational) -> Mat {
    Mat::scalar(n, c.clone())
}

/// `m − c·1`.
pub fn minus_scalar(m: &Mat, c: &Rational) -> Mat {
    m - &scalar(m.rows(), c)
}

pub fn inverse(m: &Mat, what: &str) -> Result<Mat, QuiverError> {
    m.inverse().ok_or_else(|| QuiverError::SingularFactor(what.to_string()))
}

/// Integer entries drawn uniformly from `−range..=range`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, range: i64) -> Mat {
    Mat::new(rows, cols, (0..rows * cols).map(|_| q(rng.gen_range(-range..=range))).collect())
}

/// A random matrix with nonzero determinant.
pub fn random_invertible(rng: &mut impl Rng, n: usize, range: i64) -> Mat {
    loop {
        let m = random_matrix(rng, n, n, range);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A basis (as columns) of the column space of `m`; `n × 0` when `m = 0`.
pub fn col_basis(m: &Mat) -> Mat {
    if m.cols() == 0 {
        return Mat::zeros(m.rows(), 0);
    }
    m.image()
}

/// Null space basis; handles matrices with no rows.
pub fn null_space(m: &Mat) -> Mat {
    if m.rows() == 0 {
        return Mat::identity(m.cols());
    }
    m.kernel()
}

/// Rows annihilating the column span of `basis` (a complement description).
pub fn annihilator(basis: &Mat) -> Mat {
    null_space(&basis.transpose()).transpose()
}

/// Smallest subspace containing the columns of `start` and stable under
/// every matrix in `gens`.
pub fn closure(start: &Mat, gens: &[&Mat]) -> Mat {
    let mut basis = col_basis(start);
    loop {
        let mut m = basis.clone();
        for g in gens {
            m = m.hstack(&(*g * &basis));
        }
        let next = col_basis(&m);
        if next.cols() == basis.cols() {
            return basis;
        }
        basis = next;
    }
}

/// Largest subspace of the span of `basis` mapped into itself by `b`,
/// by iterated intersection `S ↦ S ∩ b⁻¹(S)`.
pub fn largest_stable(basis: &Mat, b: &Mat) -> Mat {
    let mut s = col_basis(basis);
    loop {
        if s.cols() == 0 {
            return s;
        }
        let w = annihilator(&s);
        let c = null_space(&(&(&w * b) * &s));
        let next = col_basis(&(&s * &c));
        if next.cols() == s.cols() {
            return s;
        }
        s = next;
    }
}

pub fn mats_to_json(ms: &[Mat]) -> Value {
    Value::Array(ms.iter().map(Mat::to_json).collect())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, QuiverError> {
    v.get(key).ok_or_else(|| QuiverError::Parse(format!("missing field \"{key}\"")))
}

pub fn usize_field(v: &Value, key: &str) -> Result<usize, QuiverError> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| QuiverError::Parse(format!("\"{key}\" must be a nonnegative integer")))
}

pub fn scalar_field(v: &Value, key: &str) -> Result<Rational, QuiverError> {
    Ok(Rational::from_json(field(v, key)?)?)
}

pub fn scalars_field(v: &Value, key: &str) -> Result<Vec<Rational>, QuiverError> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| QuiverError::Parse(format!("\"{key}\" must be an array")))?
        .iter()
        .map(|x| Ok(Rational::from_json(x)?))
        .collect()
}

/// A matrix of the given shape.
pub fn matrix_value(v: &Value, rows: usize, cols: usize, what: &str) -> Result<Mat, QuiverError> {
    let m = if rows == 0 { Mat::zeros(0, cols) } else { Mat::from_json(v, cols)? };
    if m.rows() != rows || m.cols() != cols {
        return Err(QuiverError::Dimension(format!(
            "{what}: expected {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

pub fn matrix_list(v: &Value, key: &str, count: usize, n: usize) -> Result<Vec<Mat>, QuiverError> {
    let arr = field(v, key)?
        .as_array()
        .ok_or_else(|| QuiverError::Parse(format!("\"{key}\" must be an array of matrices")))?;
    if arr.len() != count {
        return Err(QuiverError::Dimension(format!("\"{key}\": expected {count} matrices, got {}", arr.len())));
    }
    arr.iter().enumerate().map(|(i, m)| matrix_value(m, n, n, &format!("{key}[{i}]"))).collect()
}
