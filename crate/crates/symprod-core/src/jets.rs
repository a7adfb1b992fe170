//! Canonical differential bases and their jet expansions at curve points.
//!
//! A jet of order n of a differential omega at a point P is the truncation
//! c_0 .. c_{n-1} of omega/dt in a local uniformizer t at P. Rows of the
//! evaluation matrix built from jets are well-defined up to the single chart
//! choice per point; changing the chart multiplies a point's jet block by an
//! invertible lower-triangular matrix, so every rank a consumer computes is
//! chart-invariant.

use alloc::vec::Vec;

use crate::curve::bipoly::BiPoly;
use crate::curve::{CurveModel, CurvePoint};
use crate::error::Error;
use crate::exact::poly::Poly;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::exact::series::{series_newton_root, SeriesPoly, TruncatedSeries};
use crate::Result;

/// One element of the canonical basis of regular differentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Differential {
    /// x^power dx / y on a hyperelliptic model, power in 0..g.
    HypMonomial { power: u32 },
    /// A dx / (dF/dY), A = X^i Y^j Z^k of degree m-3 on a plane model.
    Adjoint { i: u32, j: u32, k: u32 },
}

/// The canonical basis of H^0(K) for a model, in a fixed order: monomials
/// x^0 .. x^{g-1} for hyperelliptic models, adjoint monomials of degree m-3
/// in descending lexicographic order (X before Y before Z) for plane models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    elements: Vec<Differential>,
    genus: u32,
}

impl CanonicalBasis {
    pub fn elements(&self) -> &[Differential] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }
}

/// The canonical basis of a model; always exactly genus-many differentials.
pub fn canonical_basis(c: &CurveModel) -> CanonicalBasis {
    let genus = c.genus();
    let elements = match c {
        CurveModel::Hyperelliptic { .. } => {
            (0..genus).map(|power| Differential::HypMonomial { power }).collect()
        }
        CurveModel::SmoothPlane { degree: m, .. } => {
            let d = m - 3;
            let mut out = Vec::new();
            for i in (0..=d).rev() {
                for j in (0..=d - i).rev() {
                    out.push(Differential::Adjoint { i, j, k: d - i - j });
                }
            }
            out
        }
    };
    debug_assert_eq!(elements.len(), genus as usize);
    CanonicalBasis { elements, genus }
}

/// Which uniformizer a local chart uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartKind {
    /// t = x - x0. Hyperelliptic: needs y0 != 0; plane: needs dF/dY(P) != 0.
    XMinusX0,
    /// t = y - y0 (t = y at a Weierstrass point). Hyperelliptic: needs
    /// f'(x0) != 0; plane: needs dF/dX(P) != 0.
    YMinusY0,
}

/// A validated local chart: the point, the uniformizer choice, and the
/// precision jets will be reported at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalChart {
    pub point: CurvePoint,
    pub kind: ChartKind,
    pub precision: usize,
}

/// The default chart at a point: hyperelliptic non-Weierstrass points use
/// t = x - x0 and Weierstrass points t = y; plane points use t = x - x0
/// where dF/dY does not vanish and t = y - y0 otherwise.
pub fn local_chart(c: &CurveModel, p: &CurvePoint, precision: usize) -> Result<LocalChart> {
    let (x0, y0) = p.chart_xy()?;
    if !c.contains(p)? {
        return Err(Error::Validation("point is not on the curve".into()));
    }
    let kind = match c {
        CurveModel::Hyperelliptic { .. } => {
            if y0.is_zero() {
                ChartKind::YMinusY0
            } else {
                ChartKind::XMinusX0
            }
        }
        CurveModel::SmoothPlane { f, .. } => {
            let fy = f.derivative(1).eval(&x0, &y0, &x0.field().one())?;
            if fy.is_zero() {
                ChartKind::YMinusY0
            } else {
                ChartKind::XMinusX0
            }
        }
    };
    Ok(LocalChart { point: p.clone(), kind, precision })
}

/// Validate that `kind` really is a degree-one uniformizer at the point.
pub fn chart_is_valid(c: &CurveModel, p: &CurvePoint, kind: ChartKind) -> Result<bool> {
    let (x0, y0) = p.chart_xy()?;
    if !c.contains(p)? {
        return Err(Error::Validation("point is not on the curve".into()));
    }
    Ok(match (c, kind) {
        (CurveModel::Hyperelliptic { .. }, ChartKind::XMinusX0) => !y0.is_zero(),
        (CurveModel::Hyperelliptic { f, .. }, ChartKind::YMinusY0) => {
            !f.derivative().eval(&x0)?.is_zero()
        }
        (CurveModel::SmoothPlane { f, .. }, ChartKind::XMinusX0) => {
            !f.derivative(1).eval(&x0, &y0, &x0.field().one())?.is_zero()
        }
        (CurveModel::SmoothPlane { f, .. }, ChartKind::YMinusY0) => {
            !f.derivative(0).eval(&x0, &y0, &x0.field().one())?.is_zero()
        }
    })
}

/// Jet of omega/dt at P to order n in the default chart: the coefficients
/// c_0 .. c_{n-1} of the local expansion.
pub fn jet(c: &CurveModel, omega: &Differential, p: &CurvePoint, n: usize) -> Result<Vec<Scalar>> {
    let chart = local_chart(c, p, n)?;
    jet_in_chart(c, omega, &chart)
}

/// Jet in an explicitly chosen chart. Errors if the uniformizer is not a
/// local parameter at the point.
pub fn jet_in_chart(c: &CurveModel, omega: &Differential, chart: &LocalChart) -> Result<Vec<Scalar>> {
    if chart.precision == 0 {
        return Err(Error::Validation("jet order must be >= 1".into()));
    }
    if !chart_is_valid(c, &chart.point, chart.kind)? {
        return Err(Error::Validation("uniformizer is not a local parameter at this point".into()));
    }
    let series = match c {
        CurveModel::Hyperelliptic { f, .. } => {
            hyperelliptic_jet_series(f, omega, &chart.point, chart.kind, chart.precision)?
        }
        CurveModel::SmoothPlane { f, degree, .. } => plane_jet_series(
            &f.dehomogenize(2),
            *degree,
            omega,
            &chart.point,
            chart.kind,
            chart.precision,
        )?,
    };
    Ok((0..chart.precision).map(|i| series.coeff(i)).collect())
}

/// Expansion of omega/dt on y^2 = f(x).
///
/// Chart t = x - x0: x(t) = x0 + t, y(t) = Newton root of Y^2 = f(x0 + t)
/// with y(0) = y0; omega/dt = x(t)^power / y(t).
///
/// Chart t = y - y0: y(t) = y0 + t, x(t) = Newton root of f(X) = (y0 + t)^2
/// with x(0) = x0; omega/dt = x(t)^power x'(t) / (y0 + t). At a Weierstrass
/// point the denominator is t itself and x'(t) has valuation exactly 1, so
/// the quotient is regular; iterations run at precision n + 2 to absorb the
/// valuation shift.
fn hyperelliptic_jet_series(
    f: &Poly,
    omega: &Differential,
    p: &CurvePoint,
    kind: ChartKind,
    n: usize,
) -> Result<TruncatedSeries> {
    let Differential::HypMonomial { power } = omega else {
        return Err(Error::Validation("differential kind does not match the model".into()));
    };
    let field = f.field();
    let (x0, y0) = p.chart_xy()?;
    let nn = n + 2;
    match kind {
        ChartKind::XMinusX0 => {
            let x_series = affine_line_series(&x0, field, nn)?; // x0 + t
            let shifted = f.shift(&x0)?; // f(x0 + t) as a polynomial in t
            let rhs = poly_to_series(&shifted, nn)?;
            let eq = SeriesPoly::new(
                alloc::vec![
                    rhs.neg(),
                    TruncatedSeries::constant(field.zero(), nn)?,
                    TruncatedSeries::constant(field.one(), nn)?,
                ],
                field,
            )?;
            let y_series = series_newton_root(&eq, &y0, nn)?;
            let num = series_pow(&x_series, *power)?;
            num.div(&y_series)?.truncate(n)
        }
        ChartKind::YMinusY0 => {
            // f(X) - (y0 + t)^2 = 0
            let mut eq_coeffs = Vec::with_capacity(f.coeffs().len());
            for c in f.coeffs() {
                eq_coeffs.push(TruncatedSeries::constant(c.clone(), nn)?);
            }
            let y_line = affine_line_series(&y0, field, nn)?;
            let y_sq = y_line.mul(&y_line)?;
            eq_coeffs[0] = eq_coeffs[0].sub(&y_sq)?;
            let eq = SeriesPoly::new(eq_coeffs, field)?;
            let x_series = series_newton_root(&eq, &x0, nn)?;
            let x_prime = x_series.derivative()?;
            let num = series_pow(&x_series, *power)?.mul(&x_prime)?;
            if y0.is_zero() {
                // omega/dt = x^power x'(t) / t
                num.shift_down()?.truncate(n)
            } else {
                num.div(&y_line)?.truncate(n)
            }
        }
    }
}

/// Expansion of omega/dt on a plane model in the chart z = 1, where
/// omega = A dx / f_v. Chart t = x - x0 solves f(x0 + t, Y) = 0 for y(t) and
/// gives A(x, y) / f_v(x, y); chart t = y - y0 uses dx / f_v = -dy / f_u and
/// gives -A(x, y) / f_u(x, y) with x(t) solved from f(X, y0 + t) = 0.
fn plane_jet_series(
    f_chart: &BiPoly,
    degree: u32,
    omega: &Differential,
    p: &CurvePoint,
    kind: ChartKind,
    n: usize,
) -> Result<TruncatedSeries> {
    let Differential::Adjoint { i, j, k } = omega else {
        return Err(Error::Validation("differential kind does not match the model".into()));
    };
    if i + j + k != degree - 3 {
        return Err(Error::Validation("adjoint monomial has the wrong degree".into()));
    }
    let field = f_chart.field();
    let (x0, y0) = p.chart_xy()?;
    let nn = n + 2;
    // A(x, y, 1) = x^i y^j in the chart
    let mut adjoint = BiPoly::zero(field);
    adjoint.add_term((*i, *j), field.one())?;

    let (x_series, y_series) = match kind {
        ChartKind::XMinusX0 => {
            let x_series = affine_line_series(&x0, field, nn)?;
            let eq = bipoly_series_in_v(f_chart, &x_series)?;
            let y_series = series_newton_root(&eq, &y0, nn)?;
            (x_series, y_series)
        }
        ChartKind::YMinusY0 => {
            let y_series = affine_line_series(&y0, field, nn)?;
            let eq = bipoly_series_in_u(f_chart, &y_series)?;
            let x_series = series_newton_root(&eq, &x0, nn)?;
            (x_series, y_series)
        }
    };
    let num = bipoly_at_series(&adjoint, &x_series, &y_series)?;
    let series = match kind {
        ChartKind::XMinusX0 => {
            let den = bipoly_at_series(&f_chart.derivative(1), &x_series, &y_series)?;
            num.div(&den)?
        }
        ChartKind::YMinusY0 => {
            let den = bipoly_at_series(&f_chart.derivative(0), &x_series, &y_series)?;
            num.div(&den)?.neg()
        }
    };
    series.truncate(n)
}

/// The series c + t.
fn affine_line_series(c: &Scalar, field: FieldDesc, precision: usize) -> Result<TruncatedSeries> {
    let mut coeffs = alloc::vec![field.zero(); precision.max(1)];
    coeffs[0] = c.clone();
    if precision >= 2 {
        coeffs[1] = field.one();
    }
    TruncatedSeries::new(coeffs, field)
}

fn poly_to_series(f: &Poly, precision: usize) -> Result<TruncatedSeries> {
    let mut coeffs = f.coeffs().to_vec();
    coeffs.resize(precision.max(1), f.field().zero());
    coeffs.truncate(precision.max(1));
    TruncatedSeries::new(coeffs, f.field())
}

fn series_pow(s: &TruncatedSeries, e: u32) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::constant(s.field().one(), s.precision())?;
    for _ in 0..e {
        acc = acc.mul(s)?;
    }
    Ok(acc)
}

/// Evaluate a bivariate polynomial at a pair of series.
fn bipoly_at_series(
    f: &BiPoly,
    u: &TruncatedSeries,
    v: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    let field = f.field();
    let prec = u.precision().min(v.precision());
    let mut acc = TruncatedSeries::constant(field.zero(), prec)?;
    for (&(i, j), c) in f.terms() {
        let t = series_pow(u, i)?.mul(&series_pow(v, j)?)?.scale(c)?;
        acc = acc.add(&t.truncate(prec)?)?;
    }
    Ok(acc)
}

/// View f(u, v) as a polynomial in v whose coefficients are series in t,
/// after substituting u = u(t).
fn bipoly_series_in_v(f: &BiPoly, u_of_t: &TruncatedSeries) -> Result<SeriesPoly> {
    let field = f.field();
    let prec = u_of_t.precision();
    let deg_v = f.terms().map(|(&(_, j), _)| j).max().unwrap_or(0) as usize;
    let mut coeffs = alloc::vec![TruncatedSeries::constant(field.zero(), prec)?; deg_v + 1];
    for (&(i, j), c) in f.terms() {
        let t = series_pow(u_of_t, i)?.scale(c)?;
        coeffs[j as usize] = coeffs[j as usize].add(&t)?;
    }
    SeriesPoly::new(coeffs, field)
}

/// Same with the roles of u and v swapped: coefficients of powers of u.
fn bipoly_series_in_u(f: &BiPoly, v_of_t: &TruncatedSeries) -> Result<SeriesPoly> {
    let field = f.field();
    let prec = v_of_t.precision();
    let deg_u = f.terms().map(|(&(i, _), _)| i).max().unwrap_or(0) as usize;
    let mut coeffs = alloc::vec![TruncatedSeries::constant(field.zero(), prec)?; deg_u + 1];
    for (&(i, j), c) in f.terms() {
        let t = series_pow(v_of_t, j)?.scale(c)?;
        coeffs[i as usize] = coeffs[i as usize].add(&t)?;
    }
    SeriesPoly::new(coeffs, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tripoly::TriPoly;
    use alloc::vec;

    fn g3_hyp(field: FieldDesc) -> CurveModel {
        let f = Poly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 1], field);
        CurveModel::hyperelliptic(f, field).unwrap()
    }

    fn fermat_quartic(field: FieldDesc) -> CurveModel {
        let f = TriPoly::from_i64_terms(&[(4, 0, 0, 1), (0, 4, 0, 1), (0, 0, 4, 1)], field);
        CurveModel::smooth_plane(f, field).unwrap()
    }

    #[test]
    fn basis_sizes_and_order() {
        let c = g3_hyp(FieldDesc::Q);
        let b = canonical_basis(&c);
        assert_eq!(
            b.elements(),
            &[
                Differential::HypMonomial { power: 0 },
                Differential::HypMonomial { power: 1 },
                Differential::HypMonomial { power: 2 },
            ]
        );
        let q = fermat_quartic(FieldDesc::Q);
        let bq = canonical_basis(&q);
        assert_eq!(
            bq.elements(),
            &[
                Differential::Adjoint { i: 1, j: 0, k: 0 },
                Differential::Adjoint { i: 0, j: 1, k: 0 },
                Differential::Adjoint { i: 0, j: 0, k: 1 },
            ]
        );
        // g = 2 model has 2 elements
        let f6 = Poly::from_i64(&[1, 1, 0, 0, 0, 0, 1], FieldDesc::Q);
        let c2 = CurveModel::hyperelliptic(f6, FieldDesc::Q).unwrap();
        assert_eq!(canonical_basis(&c2).len(), 2);
    }

    #[test]
    fn order_one_jets_are_evaluations() {
        // at a non-Weierstrass (a, b): omega_i/dt = a^{i-1} / b at order 1
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let pts = c.enumerate_rational_points().unwrap().affine;
        let basis = canonical_basis(&c);
        for p in pts.iter() {
            let (a, b) = p.chart_xy().unwrap();
            if b.is_zero() {
                continue;
            }
            for (idx, omega) in basis.elements().iter().enumerate() {
                let jv = jet(&c, omega, p, 1).unwrap();
                let expect = a.pow(idx as u64).div(&b).unwrap();
                assert_eq!(jv, vec![expect]);
            }
        }
    }

    /// Weierstrass point (a, 0) with t = y: matching coefficients in
    /// f(x(t)) = t^2 gives x(t) = a + t^2/f'(a) + O(t^4), so the order-2 jet
    /// of dx/y is [2/f'(a), 0].
    #[test]
    fn weierstrass_jet_formula() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let CurveModel::Hyperelliptic { f, .. } = &c else { unreachable!() };
        // x = 1 is a root of x^7 - 1
        let a = field.from_i64(1);
        let p = CurvePoint::affine(a.clone(), field.zero());
        assert!(c.contains(&p).unwrap());
        let fp_a = f.derivative().eval(&a).unwrap();
        let two_over = field.from_i64(2).div(&fp_a).unwrap();
        let jv = jet(&c, &Differential::HypMonomial { power: 0 }, &p, 2).unwrap();
        assert_eq!(jv, vec![two_over, field.zero()]);
    }

    #[test]
    fn jets_have_prefix_property() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let pts = c.enumerate_rational_points().unwrap().affine;
        let basis = canonical_basis(&c);
        for p in pts.iter().take(8) {
            for omega in basis.elements() {
                let j4 = jet(&c, omega, p, 4).unwrap();
                for n in 1..4 {
                    let jn = jet(&c, omega, p, n).unwrap();
                    assert_eq!(jn[..], j4[..n]);
                }
            }
        }
    }

    #[test]
    fn canonical_system_is_base_point_free() {
        // at every rational point some basis differential has nonzero value
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let basis = canonical_basis(&c);
        for p in c.enumerate_rational_points().unwrap().affine {
            let any_nonzero = basis
                .elements()
                .iter()
                .any(|w| !jet(&c, w, &p, 1).unwrap()[0].is_zero());
            assert!(any_nonzero, "all differentials vanish at {p:?}");
        }
        let field11 = FieldDesc::prime_field(11).unwrap();
        let q = fermat_quartic(field11);
        let qbasis = canonical_basis(&q);
        for p in q.enumerate_rational_points().unwrap().affine {
            let any_nonzero = qbasis
                .elements()
                .iter()
                .any(|w| !jet(&q, w, &p, 1).unwrap()[0].is_zero());
            assert!(any_nonzero, "all adjoints vanish at {p:?}");
        }
    }

    #[test]
    fn plane_chart_swap_scales_jets_consistently() {
        let field = FieldDesc::prime_field(11).unwrap();
        let q = fermat_quartic(field);
        let basis = canonical_basis(&q);
        let mut checked = 0;
        for p in q.enumerate_rational_points().unwrap().affine {
            if !(chart_is_valid(&q, &p, ChartKind::XMinusX0).unwrap()
                && chart_is_valid(&q, &p, ChartKind::YMinusY0).unwrap())
            {
                continue;
            }
            // order-1 jets from the two charts differ by one common nonzero
            // factor dt_x/dt_y(0) across the whole basis
            let cx = LocalChart { point: p.clone(), kind: ChartKind::XMinusX0, precision: 1 };
            let cy = LocalChart { point: p.clone(), kind: ChartKind::YMinusY0, precision: 1 };
            let jx: Vec<Scalar> = basis
                .elements()
                .iter()
                .map(|w| jet_in_chart(&q, w, &cx).unwrap()[0].clone())
                .collect();
            let jy: Vec<Scalar> = basis
                .elements()
                .iter()
                .map(|w| jet_in_chart(&q, w, &cy).unwrap()[0].clone())
                .collect();
            let (i0, base) = jx
                .iter()
                .enumerate()
                .find(|(_, v)| !v.is_zero())
                .expect("base point free");
            let lambda = jy[i0].div(base).unwrap();
            assert!(!lambda.is_zero());
            for (a, b) in jx.iter().zip(jy.iter()) {
                assert_eq!(a.mul(&lambda).unwrap(), *b);
            }
            checked += 1;
        }
        assert!(checked > 0, "no point admitted both charts");
    }

    #[test]
    fn infinity_support_rejected() {
        let field = FieldDesc::prime_field(17).unwrap();
        let q = fermat_quartic(field);
        let inf = q.enumerate_rational_points().unwrap().at_infinity;
        assert!(!inf.is_empty());
        let w = Differential::Adjoint { i: 1, j: 0, k: 0 };
        assert_eq!(jet(&q, &w, &inf[0], 1), Err(Error::UnsupportedSupport));
    }
}
