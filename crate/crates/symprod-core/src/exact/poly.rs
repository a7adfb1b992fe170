//! Univariate polynomials over an exact field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::Result;

/// Dense univariate polynomial; no trailing zero coefficients are stored,
/// so the zero polynomial has an empty coefficient list (degree "-infinity",
/// reported as `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
    field: FieldDesc,
}

impl Poly {
    /// Build from low-to-high coefficients, trimming trailing zeros.
    /// All coefficients must belong to `field`.
    pub fn new(mut coeffs: Vec<Scalar>, field: FieldDesc) -> Result<Poly> {
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Ok(Poly { coeffs, field })
    }

    pub fn zero(field: FieldDesc) -> Poly {
        Poly { coeffs: Vec::new(), field }
    }

    pub fn constant(c: Scalar) -> Poly {
        let field = c.field();
        Poly::new(vec![c], field).expect("single coefficient")
    }

    /// The monomial x.
    pub fn x(field: FieldDesc) -> Poly {
        Poly { coeffs: vec![field.zero(), field.one()], field }
    }

    /// Convenience: polynomial with small integer coefficients, low to high.
    pub fn from_i64(coeffs: &[i64], field: FieldDesc) -> Poly {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Poly::new(cs, field).expect("coefficients built in the field")
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Poly) -> Result<Poly> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i))?);
        }
        Poly::new(out, self.field)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
            field: self.field,
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Result<Poly> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Result<Poly> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || rhs.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b)?)?;
            }
        }
        Poly::new(out, self.field)
    }

    pub fn scale(&self, s: &Scalar) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(s))
            .collect::<Result<Vec<_>>>()?;
        Poly::new(coeffs, self.field)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let k = self.field.from_i64(i as i64);
            out.push(c.mul(&k).expect("same field"));
        }
        Poly::new(out, self.field).expect("same field")
    }

    /// Euclidean division by a nonzero divisor: returns (quotient, remainder).
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = divisor.leading_coeff().expect("nonzero").inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().expect("nonempty").mul(&lead_inv)?;
            if !factor.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = factor.mul(dc)?;
                    rem[k + i] = rem[k + i].sub(&t)?;
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().expect("nonempty").is_zero());
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) && rem.len() > dd {
                rem.pop();
            }
        }
        Ok((Poly::new(quot, self.field)?, Poly::new(rem, self.field)?))
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Poly) -> Result<Poly> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if let Some(lc) = a.leading_coeff() {
            let inv = lc.inv()?;
            a = a.scale(&inv)?;
        }
        Ok(a)
    }

    /// True iff gcd(f, f') is constant. Valid over Q and over F_p (perfect
    /// fields), for any degree.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.is_constant())
    }

    /// Substitute x -> x + a, i.e. return f(a + x) as a polynomial in x.
    pub fn shift(&self, a: &Scalar) -> Result<Poly> {
        if a.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        // Horner on f with linear argument (a + x)
        let arg = Poly::new(vec![a.clone(), self.field.one()], self.field)?;
        let mut acc = Poly::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg)?.add(&Poly::constant(c.clone()))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d).unwrap()
    }

    #[test]
    fn degree_and_trim() {
        let f = Poly::new(vec![q(1, 1), q(0, 1), q(0, 1)], FieldDesc::Q).unwrap();
        assert_eq!(f.degree(), Some(0));
        assert_eq!(Poly::zero(FieldDesc::Q).degree(), None);
    }

    #[test]
    fn divrem_reconstructs() {
        let f = Poly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 1], FieldDesc::Q); // x^7 - 1
        let g = Poly::from_i64(&[-1, 1], FieldDesc::Q); // x - 1
        let (quo, rem) = f.divrem(&g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quo.mul(&g).unwrap(), f);
    }

    #[test]
    fn squarefree_examples() {
        // x^7 - 1 over Q: distinct roots of unity
        let f = Poly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 1], FieldDesc::Q);
        assert!(f.is_squarefree().unwrap());

        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let g = Poly::from_i64(&[2, -3, 0, 1], FieldDesc::Q);
        assert!(!g.is_squarefree().unwrap());

        // x^5 + x + 1 over F_13: gcd(f, f') computed by hand is 1
        // f' = 5x^4 + 1; the Euclidean chain never hits zero remainder early.
        let field = FieldDesc::prime_field(13).unwrap();
        let h = Poly::from_i64(&[1, 1, 0, 0, 0, 1], field);
        let hd = h.derivative();
        let g1 = h.gcd(&hd).unwrap();
        assert!(g1.is_constant() && !g1.is_zero());
        assert!(h.is_squarefree().unwrap());
        // and a contrived non-squarefree one over F_13: (x+1)^2
        let s = Poly::from_i64(&[1, 2, 1], field);
        assert!(!s.is_squarefree().unwrap());
    }

    #[test]
    fn shift_matches_eval() {
        let f = Poly::from_i64(&[3, 0, -2, 1], FieldDesc::Q);
        let a = q(5, 2);
        let g = f.shift(&a).unwrap();
        for t in [-2i64, 0, 1, 7] {
            let tv = FieldDesc::Q.from_i64(t);
            let lhs = g.eval(&tv).unwrap();
            let rhs = f.eval(&a.add(&tv).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gcd_is_monic() {
        let f = Poly::from_i64(&[2, 4], FieldDesc::Q); // 2(x+... ) -> 4x + 2
        let g = Poly::from_i64(&[1, 2], FieldDesc::Q);
        let d = f.gcd(&g).unwrap();
        assert_eq!(d, Poly::new(vec![q(1, 2), q(1, 1)], FieldDesc::Q).unwrap());
    }
}
