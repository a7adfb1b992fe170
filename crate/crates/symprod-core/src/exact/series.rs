//! Truncated power series and Newton iteration for series roots.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::poly::Poly;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::Result;

/// Power series truncated at order `n`: coefficients c_0 .. c_{n-1}, the
/// omitted tail is O(t^n). Arithmetic results carry the minimum of the
/// operand precisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Scalar>,
    field: FieldDesc,
}

impl TruncatedSeries {
    /// Precision = coeffs.len(), must be at least 1.
    pub fn new(coeffs: Vec<Scalar>, field: FieldDesc) -> Result<TruncatedSeries> {
        if coeffs.is_empty() {
            return Err(Error::Validation("series precision must be >= 1".into()));
        }
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(TruncatedSeries { coeffs, field })
    }

    pub fn constant(c: Scalar, precision: usize) -> Result<TruncatedSeries> {
        let field = c.field();
        let mut coeffs = vec![field.zero(); precision.max(1)];
        coeffs[0] = c;
        TruncatedSeries::new(coeffs, field)
    }

    /// The series t (the uniformizer itself) at the given precision.
    pub fn t(field: FieldDesc, precision: usize) -> Result<TruncatedSeries> {
        let mut coeffs = vec![field.zero(); precision.max(1)];
        if precision >= 2 {
            coeffs[1] = field.one();
        }
        TruncatedSeries::new(coeffs, field)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Drop coefficients beyond `precision`.
    pub fn truncate(&self, precision: usize) -> Result<TruncatedSeries> {
        let n = precision.max(1).min(self.coeffs.len());
        TruncatedSeries::new(self.coeffs[..n].to_vec(), self.field)
    }

    fn check(&self, rhs: &TruncatedSeries) -> Result<usize> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.precision().min(rhs.precision()))
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        let n = self.check(rhs)?;
        let coeffs = (0..n)
            .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::new(coeffs, self.field)
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
            field: self.field,
        }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        let n = self.check(rhs)?;
        let mut coeffs = vec![self.field.zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                let t = self.coeffs[i].mul(&rhs.coeffs[j])?;
                coeffs[i + j] = coeffs[i + j].add(&t)?;
            }
        }
        TruncatedSeries::new(coeffs, self.field)
    }

    pub fn scale(&self, s: &Scalar) -> Result<TruncatedSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(s))
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::new(coeffs, self.field)
    }

    /// Multiplicative inverse; requires the constant term to be a unit.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.precision();
        let c0_inv = c0.inv()?;
        let mut out = vec![self.field.zero(); n];
        out[0] = c0_inv.clone();
        for k in 1..n {
            // c_0 b_k = -(sum_{i=1..k} c_i b_{k-i})
            let mut acc = self.field.zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&out[k - i])?)?;
            }
            out[k] = acc.neg().mul(&c0_inv)?;
        }
        TruncatedSeries::new(out, self.field)
    }

    pub fn div(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.mul(&rhs.invert()?)
    }

    /// Termwise derivative; precision drops by one.
    pub fn derivative(&self) -> Result<TruncatedSeries> {
        if self.precision() == 1 {
            return TruncatedSeries::new(vec![self.field.zero()], self.field);
        }
        let mut out = Vec::with_capacity(self.precision() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&self.field.from_i64(i as i64))?);
        }
        TruncatedSeries::new(out, self.field)
    }

    /// Divide by t: shift coefficients down. Errors unless c_0 = 0.
    pub fn shift_down(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Validation("series has nonzero constant term, not divisible by t".into()));
        }
        if self.precision() == 1 {
            return TruncatedSeries::new(vec![self.field.zero()], self.field);
        }
        TruncatedSeries::new(self.coeffs[1..].to_vec(), self.field)
    }

    /// Evaluate a polynomial whose variable is replaced by this series, with
    /// scalar coefficients lifted to constant series.
    pub fn substitute_into(&self, f: &Poly) -> Result<TruncatedSeries> {
        let n = self.precision();
        let mut acc = TruncatedSeries::constant(self.field.zero(), n)?;
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&TruncatedSeries::constant(c.clone(), n)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{i}")?;
        }
        write!(f, " + O(t^{})", self.precision())
    }
}

/// A polynomial equation in one unknown whose coefficients are truncated
/// series: E(Y) = sum_i A_i(t) Y^i. Used to solve for branches Y(t).
#[derive(Debug, Clone)]
pub struct SeriesPoly {
    /// Coefficient of Y^i at index i.
    coeffs: Vec<TruncatedSeries>,
    field: FieldDesc,
}

impl SeriesPoly {
    pub fn new(coeffs: Vec<TruncatedSeries>, field: FieldDesc) -> Result<SeriesPoly> {
        if coeffs.is_empty() {
            return Err(Error::Validation("series polynomial needs at least one coefficient".into()));
        }
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(SeriesPoly { coeffs, field })
    }

    /// Lift an ordinary polynomial to constant-series coefficients.
    pub fn from_poly(f: &Poly, precision: usize) -> Result<SeriesPoly> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| TruncatedSeries::constant(c.clone(), precision))
            .collect::<Result<Vec<_>>>()?;
        let coeffs = if coeffs.is_empty() {
            vec![TruncatedSeries::constant(f.field().zero(), precision)?]
        } else {
            coeffs
        };
        SeriesPoly::new(coeffs, f.field())
    }

    pub fn eval(&self, y: &TruncatedSeries) -> Result<TruncatedSeries> {
        let n = y.precision();
        let mut acc = TruncatedSeries::constant(self.field.zero(), n)?;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(y)?.add(&c.truncate(n)?)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Result<SeriesPoly> {
        if self.coeffs.len() == 1 {
            let p = self.coeffs[0].precision();
            return SeriesPoly::new(vec![TruncatedSeries::constant(self.field.zero(), p)?], self.field);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.scale(&self.field.from_i64(i as i64))?);
        }
        SeriesPoly::new(out, self.field)
    }
}

/// Solve E(s(t)) = 0 to the requested precision by Newton iteration,
/// starting from the simple root `initial` of the constant-term
/// specialization E(Y)(t=0).
///
/// Precondition: E'(initial) has unit constant term; otherwise the branch is
/// singular and the iteration cannot separate it.
pub fn series_newton_root(
    equation: &SeriesPoly,
    initial: &Scalar,
    precision: usize,
) -> Result<TruncatedSeries> {
    if initial.field() != equation.field {
        return Err(Error::FieldMismatch);
    }
    let precision = precision.max(1);
    let deriv = equation.derivative()?;

    // E'(initial) at t = 0 must be a unit
    let d0 = deriv.eval(&TruncatedSeries::constant(initial.clone(), 1)?)?;
    if d0.coeff(0).is_zero() {
        return Err(Error::SingularBranch);
    }
    // E(initial) at t = 0 must vanish: initial is a root of the specialization
    let e0 = equation.eval(&TruncatedSeries::constant(initial.clone(), 1)?)?;
    if !e0.coeff(0).is_zero() {
        return Err(Error::Validation("initial value is not a root of the specialized equation".into()));
    }

    let mut s = TruncatedSeries::constant(initial.clone(), 1)?;
    let mut prec = 1usize;
    while prec < precision {
        prec = (prec * 2).min(precision);
        // widen the current approximation to the new precision
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(prec, equation.field.zero());
        s = TruncatedSeries::new(coeffs, equation.field)?;
        let num = equation.eval(&s)?;
        let den = deriv.eval(&s)?;
        s = s.sub(&num.div(&den)?)?;
    }
    // quadratic convergence can overshoot; one final check at exact precision
    debug_assert!(equation.eval(&s).map(|r| r.is_zero()).unwrap_or(false));
    Ok(s)
}
