//! Trivariate polynomials in X, Y, Z, used for plane curve models.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::curve::bipoly::BiPoly;
use crate::error::Error;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::Result;

/// Sparse trivariate polynomial keyed by exponent triples (i, j, k) for
/// X^i Y^j Z^k. The map never stores zero coefficients, and BTreeMap keys
/// give a canonical term order for serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32, u32), Scalar>,
    field: FieldDesc,
}

impl TriPoly {
    pub fn zero(field: FieldDesc) -> TriPoly {
        TriPoly { terms: BTreeMap::new(), field }
    }

    pub fn from_terms(terms: &[((u32, u32, u32), Scalar)], field: FieldDesc) -> Result<TriPoly> {
        let mut out = TriPoly::zero(field);
        for (exp, c) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            out.add_term(*exp, c.clone())?;
        }
        Ok(out)
    }

    /// Convenience for tests: terms with small integer coefficients.
    pub fn from_i64_terms(terms: &[(u32, u32, u32, i64)], field: FieldDesc) -> TriPoly {
        let mut out = TriPoly::zero(field);
        for &(i, j, k, c) in terms {
            out.add_term((i, j, k), field.from_i64(c)).expect("same field");
        }
        out
    }

    fn add_term(&mut self, exp: (u32, u32, u32), c: Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, c);
            }
            Some(old) => {
                let s = old.add(&c)?;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Scalar)> {
        self.terms.iter()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j, k)| i + j + k).max()
    }

    /// True iff nonzero and every term has total degree `m`.
    pub fn is_homogeneous_of_degree(&self, m: u32) -> bool {
        !self.terms.is_empty() && self.terms.keys().all(|(i, j, k)| i + j + k == m)
    }

    /// Partial derivative along variable 0 (X), 1 (Y) or 2 (Z).
    pub fn derivative(&self, var: usize) -> TriPoly {
        let mut out = TriPoly::zero(self.field);
        for (&(i, j, k), c) in &self.terms {
            let (e, exp) = match var {
                0 => (i, (i.saturating_sub(1), j, k)),
                1 => (j, (i, j.saturating_sub(1), k)),
                _ => (k, (i, j, k.saturating_sub(1))),
            };
            if e == 0 {
                continue;
            }
            let coeff = c.mul(&self.field.from_i64(e as i64)).expect("same field");
            out.add_term(exp, coeff).expect("same field");
        }
        out
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar, z: &Scalar) -> Result<Scalar> {
        let mut acc = self.field.zero();
        for (&(i, j, k), c) in &self.terms {
            let t = c
                .mul(&x.pow(i as u64))?
                .mul(&y.pow(j as u64))?
                .mul(&z.pow(k as u64))?;
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Dehomogenize by setting one variable to 1. The surviving variables
    /// keep their order: chart 0 sets X=1 giving (u,v) = (Y,Z); chart 1 sets
    /// Y=1 giving (X,Z); chart 2 sets Z=1 giving (X,Y).
    pub fn dehomogenize(&self, chart: usize) -> BiPoly {
        let mut out = BiPoly::zero(self.field);
        for (&(i, j, k), c) in &self.terms {
            let (u, v) = match chart {
                0 => (j, k),
                1 => (i, k),
                _ => (i, j),
            };
            out.add_term((u, v), c.clone()).expect("same field");
        }
        out
    }

    /// Substitute each variable by a linear form in new variables; row r of
    /// `m` gives the image of the r-th variable.
    pub fn linear_substitute(&self, m: &[[Scalar; 3]; 3]) -> Result<TriPoly> {
        let lin = |row: &[Scalar; 3]| -> Result<TriPoly> {
            TriPoly::from_terms(
                &[
                    ((1, 0, 0), row[0].clone()),
                    ((0, 1, 0), row[1].clone()),
                    ((0, 0, 1), row[2].clone()),
                ],
                self.field,
            )
        };
        let images = [lin(&m[0])?, lin(&m[1])?, lin(&m[2])?];
        let mut acc = TriPoly::zero(self.field);
        for (&(i, j, k), c) in &self.terms {
            let mut t = TriPoly::from_terms(&[((0, 0, 0), c.clone())], self.field)?;
            for (var, e) in [(0usize, i), (1, j), (2, k)] {
                for _ in 0..e {
                    t = t.mul(&images[var])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    pub fn add(&self, rhs: &TriPoly) -> Result<TriPoly> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(*exp, c.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &TriPoly) -> Result<TriPoly> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = TriPoly::zero(self.field);
        for (&(a, b, c), ca) in &self.terms {
            for (&(d, e, f), cb) in &rhs.terms {
                out.add_term((a + d, b + e, c + f), ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j, k), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*X^{i}*Y^{j}*Z^{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_quartic_basics() {
        let f = TriPoly::from_i64_terms(&[(4, 0, 0, 1), (0, 4, 0, 1), (0, 0, 4, 1)], FieldDesc::Q);
        assert!(f.is_homogeneous_of_degree(4));
        assert_eq!(f.total_degree(), Some(4));
        let fx = f.derivative(0);
        assert_eq!(fx, TriPoly::from_i64_terms(&[(3, 0, 0, 4)], FieldDesc::Q));
        let one = FieldDesc::Q.one();
        assert_eq!(f.eval(&one, &one, &one).unwrap(), FieldDesc::Q.from_i64(3));
    }

    #[test]
    fn linear_substitution_swaps_variables() {
        let field = FieldDesc::Q;
        let f = TriPoly::from_i64_terms(&[(3, 1, 0, 1), (0, 3, 1, 1), (1, 0, 3, 1)], field);
        let zero = field.zero();
        let one = field.one();
        // swap X and Z
        let m = [
            [zero.clone(), zero.clone(), one.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [one.clone(), zero.clone(), zero.clone()],
        ];
        let g = f.linear_substitute(&m).unwrap();
        let expect = TriPoly::from_i64_terms(&[(0, 1, 3, 1), (1, 3, 0, 1), (3, 0, 1, 1)], field);
        assert_eq!(g, expect);
    }

    #[test]
    fn euler_relation() {
        // m * F = X F_X + Y F_Y + Z F_Z for homogeneous F of degree m
        let field = FieldDesc::Q;
        let f = TriPoly::from_i64_terms(&[(3, 1, 0, 2), (0, 3, 1, -1), (1, 0, 3, 5)], field);
        let x = TriPoly::from_i64_terms(&[(1, 0, 0, 1)], field);
        let y = TriPoly::from_i64_terms(&[(0, 1, 0, 1)], field);
        let z = TriPoly::from_i64_terms(&[(0, 0, 1, 1)], field);
        let sum = x
            .mul(&f.derivative(0))
            .unwrap()
            .add(&y.mul(&f.derivative(1)).unwrap())
            .unwrap()
            .add(&z.mul(&f.derivative(2)).unwrap())
            .unwrap();
        let four_f = f.mul(&TriPoly::from_i64_terms(&[(0, 0, 0, 4)], field)).unwrap();
        assert_eq!(sum, four_f);
    }
}
