//! Bivariate polynomials and an exact emptiness test for affine systems.
//!
//! The smoothness check needs to decide, over the algebraic closure, whether
//! a handful of bivariate polynomials have a common zero. Resultant
//! elimination alone cannot certify this once the candidate coordinates are
//! irrational, so we decide ideal triviality instead: the system has no
//! common zero over the closure iff 1 lies in the generated ideal, which a
//! small deterministic Buchberger loop settles exactly.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::Result;

/// Sparse bivariate polynomial keyed by exponent pairs (i, j) for u^i v^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
    field: FieldDesc,
}

/// Graded lexicographic order: higher total degree first, ties broken by the
/// first exponent. Any admissible order works for ideal triviality; this one
/// is simple and keeps the loop deterministic.
fn grlex_cmp(a: (u32, u32), b: (u32, u32)) -> core::cmp::Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

impl BiPoly {
    pub fn zero(field: FieldDesc) -> BiPoly {
        BiPoly { terms: BTreeMap::new(), field }
    }

    pub fn add_term(&mut self, exp: (u32, u32), c: Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch);
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

    pub fn from_i64_terms(terms: &[(u32, u32, i64)], field: FieldDesc) -> BiPoly {
        let mut out = BiPoly::zero(field);
        for &(i, j, c) in terms {
            out.add_term((i, j), field.from_i64(c)).expect("same field");
        }
        out
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    /// Partial derivative along variable 0 (u) or 1 (v).
    pub fn derivative(&self, var: usize) -> BiPoly {
        let mut out = BiPoly::zero(self.field);
        for (&(i, j), c) in &self.terms {
            let (e, exp) = match var {
                0 => (i, (i.saturating_sub(1), j)),
                _ => (j, (i, j.saturating_sub(1))),
            };
            if e == 0 {
                continue;
            }
            let coeff = c.mul(&self.field.from_i64(e as i64)).expect("same field");
            out.add_term(exp, coeff).expect("same field");
        }
        out
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&(0, 0))
    }

    pub fn eval(&self, u: &Scalar, v: &Scalar) -> Result<Scalar> {
        let mut acc = self.field.zero();
        for (&(i, j), c) in &self.terms {
            acc = acc.add(&c.mul(&u.pow(i as u64))?.mul(&v.pow(j as u64))?)?;
        }
        Ok(acc)
    }

    /// Leading term under grlex.
    fn leading(&self) -> Option<((u32, u32), &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex_cmp(*a.0, *b.0))
            .map(|(e, c)| (*e, c))
    }

    fn sub_scaled_shifted(&self, rhs: &BiPoly, factor: &Scalar, shift: (u32, u32)) -> Result<BiPoly> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            let t = c.mul(factor)?.neg();
            out.add_term((i + shift.0, j + shift.1), t)?;
        }
        Ok(out)
    }

    /// Multivariate division: fully reduce against the given basis.
    fn reduce(&self, basis: &[BiPoly]) -> Result<BiPoly> {
        let mut rem = self.clone();
        'outer: loop {
            let Some((lexp, lc)) = rem.leading().map(|(e, c)| (e, c.clone())) else {
                return Ok(rem);
            };
            for b in basis {
                let Some((bexp, bc)) = b.leading() else { continue };
                if bexp.0 <= lexp.0 && bexp.1 <= lexp.1 {
                    let shift = (lexp.0 - bexp.0, lexp.1 - bexp.1);
                    let factor = lc.div(bc)?;
                    rem = rem.sub_scaled_shifted(b, &factor, shift)?;
                    continue 'outer;
                }
            }
            // leading term irreducible: strip it and keep reducing the tail
            let mut stripped = rem.clone();
            stripped.terms.remove(&lexp);
            let tail = stripped.reduce(basis)?;
            let mut out = tail;
            out.add_term(lexp, lc)?;
            return Ok(out);
        }
    }

    fn monic(&self) -> Result<BiPoly> {
        let Some((_, lc)) = self.leading() else {
            return Ok(self.clone());
        };
        let inv = lc.inv()?;
        let mut out = BiPoly::zero(self.field);
        for (&e, c) in &self.terms {
            out.add_term(e, c.mul(&inv)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*u^{i}*v^{j}")?;
        }
        Ok(())
    }
}

/// Decide whether the affine system {g_1 = ... = g_k = 0} has a solution
/// over the algebraic closure of the coefficient field.
///
/// Buchberger's algorithm on the ideal (g_1, ..., g_k): the variety is empty
/// iff the reduced basis contains a nonzero constant. The pair queue is a
/// BTreeSet, so the run is deterministic; the coprime-leading-term criterion
/// prunes useless S-pairs.
pub fn system_has_common_zero(polys: &[BiPoly]) -> Result<bool> {
    let mut basis: Vec<BiPoly> = Vec::new();
    for p in polys {
        if p.is_nonzero_constant() {
            return Ok(false);
        }
        if !p.is_zero() {
            basis.push(p.monic()?);
        }
    }
    if basis.is_empty() {
        // every polynomial vanished identically: the whole plane
        return Ok(true);
    }

    let mut pairs: alloc::collections::BTreeSet<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();

    while let Some(&(i, j)) = pairs.iter().next() {
        pairs.remove(&(i, j));
        let (le_i, _) = basis[i].leading().expect("basis is nonzero");
        let (le_j, _) = basis[j].leading().expect("basis is nonzero");
        // Buchberger's first criterion: coprime leading monomials
        if le_i.0.min(le_j.0) == 0 && le_i.1.min(le_j.1) == 0 {
            continue;
        }
        let lcm = (le_i.0.max(le_j.0), le_i.1.max(le_j.1));
        let zero = BiPoly::zero(basis[i].field);
        let s_i = zero.sub_scaled_shifted(&basis[i], &basis[i].field.from_i64(-1), (lcm.0 - le_i.0, lcm.1 - le_i.1))?;
        let s_j = zero.sub_scaled_shifted(&basis[j], &basis[j].field.from_i64(-1), (lcm.0 - le_j.0, lcm.1 - le_j.1))?;
        let mut s = s_i;
        for (&e, c) in &s_j.terms {
            s.add_term(e, c.neg())?;
        }
        let rem = s.reduce(&basis)?;
        if rem.is_zero() {
            continue;
        }
        if rem.is_nonzero_constant() {
            return Ok(false);
        }
        let rem = rem.monic()?;
        let new_idx = basis.len();
        basis.push(rem);
        for k in 0..new_idx {
            pairs.insert((k, new_idx));
        }
    }
    // basis is a Groebner basis without constants: 1 is not in the ideal, so
    // the variety over the algebraic closure is nonempty (Nullstellensatz)
    Ok(true)
}
