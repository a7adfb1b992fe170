//! Rectangular matrices over an exact field, with rank by Gaussian
//! elimination under a fixed deterministic pivot rule.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::Result;

/// Row-major dense matrix. All entries must live in a single field; this is
/// validated once at construction so arithmetic inside never mixes fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    field: FieldDesc,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>, field: FieldDesc) -> Result<ExactMatrix> {
        if data.len() != rows * cols {
            return Err(Error::Validation(alloc::format!(
                "matrix data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        for e in &data {
            if e.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(ExactMatrix { rows, cols, data, field })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, field: FieldDesc) -> Result<ExactMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::Validation("ragged rows".into()));
            }
        }
        ExactMatrix::new(r, c, rows.into_iter().flatten().collect(), field)
    }

    pub fn zero(rows: usize, cols: usize, field: FieldDesc) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
            field,
        }
    }

    pub fn identity(n: usize, field: FieldDesc) -> ExactMatrix {
        let mut m = ExactMatrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    /// Matrix product self (r x k) * rhs (k x c).
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::Validation(alloc::format!(
                "dimension mismatch: {}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zero(self.rows, rhs.cols, self.field);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(rhs.at(k, c))?)?;
                }
                *out.at_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    /// Rank by exact Gaussian elimination. Pivot rule: scan columns left to
    /// right; within a column, take the first nonzero entry among the rows
    /// not yet used as pivots, scanning top-down. No randomization, so output
    /// is bit-stable across runs.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let get = |m: &Vec<Scalar>, r: usize, c: usize| m[r * cols + c].clone();
        let mut pivot_row = 0usize;
        let mut rank = 0usize;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let mut sel = None;
            for r in pivot_row..rows {
                if !get(&m, r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != pivot_row {
                for c in 0..cols {
                    m.swap(sel * cols + c, pivot_row * cols + c);
                }
            }
            let inv = get(&m, pivot_row, col).inv().expect("pivot nonzero");
            for r in pivot_row + 1..rows {
                let factor = get(&m, r, col).mul(&inv).expect("same field");
                if factor.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let t = get(&m, pivot_row, c).mul(&factor).expect("same field");
                    let v = get(&m, r, c).sub(&t).expect("same field");
                    m[r * cols + c] = v;
                }
            }
            pivot_row += 1;
            rank += 1;
        }
        rank
    }

    /// Determinant of a square matrix by elimination.
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Validation("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let mut sel = None;
            for r in col..n {
                if !m[r * n + col].is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else {
                return Ok(self.field.zero());
            };
            if sel != col {
                for c in 0..n {
                    m.swap(sel * n + c, col * n + c);
                }
                det = det.neg();
            }
            let pivot = m[col * n + col].clone();
            det = det.mul(&pivot)?;
            let inv = pivot.inv()?;
            for r in col + 1..n {
                let factor = m[r * n + col].mul(&inv)?;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let t = m[col * n + c].mul(&factor)?;
                    m[r * n + c] = m[r * n + c].sub(&t)?;
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        let m = ExactMatrix::identity(3, FieldDesc::Q);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn proportional_rows_rank_one() {
        let f = FieldDesc::Q;
        let row1 = [1i64, 2, -3];
        let m = ExactMatrix::from_rows(
            alloc::vec![
                row1.iter().map(|&c| f.from_i64(c)).collect(),
                row1.iter().map(|&c| f.from_i64(5 * c)).collect(),
            ],
            f,
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn mixed_field_rejected() {
        let bad = ExactMatrix::new(
            1,
            2,
            alloc::vec![FieldDesc::Q.one(), Scalar::fp(1, 29)],
            FieldDesc::Q,
        );
        assert_eq!(bad.unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn det_matches_sign_swaps() {
        let f = FieldDesc::Q;
        let m = ExactMatrix::from_rows(
            alloc::vec![
                alloc::vec![f.from_i64(0), f.from_i64(1)],
                alloc::vec![f.from_i64(1), f.from_i64(0)],
            ],
            f,
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), f.from_i64(-1));
    }

    #[test]
    fn rank_equals_transpose_rank_smoke() {
        let f = FieldDesc::prime_field(101).unwrap();
        let m = ExactMatrix::from_rows(
            alloc::vec![
                alloc::vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)],
                alloc::vec![f.from_i64(2), f.from_i64(4), f.from_i64(6)],
                alloc::vec![f.from_i64(0), f.from_i64(1), f.from_i64(100)],
            ],
            f,
        )
        .unwrap();
        assert_eq!(m.rank(), m.transpose().rank());
        assert_eq!(m.rank(), 2);
    }
}
