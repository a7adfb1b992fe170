//! Effective divisors, jet-evaluation matrices, Riemann-Roch dimension
//! reports, base-point tests, the degree-2 pencil on hyperelliptic curves,
//! and an independent combinatorial h0 oracle.
//!
//! A degree-d effective divisor z on the curve determines the restriction
//! map from global canonical sections to sections along z. Its d x g matrix
//! in the canonical basis is assembled from jets; its rank controls every
//! dimension this module reports:
//!
//!   h0(K - z) = g - rank,  h0(z) = 1 + d - rank,
//!
//! and z is a base point of the canonical system of the d-th symmetric
//! product exactly when the rank falls short of d.

use alloc::vec::Vec;

use crate::curve::{CurveModel, CurvePoint};
use crate::error::Error;
use crate::exact::matrix::ExactMatrix;
use crate::exact::scalar::Scalar;
use crate::jets::{canonical_basis, jet, jet_in_chart, ChartKind, LocalChart};
use crate::Result;

/// An effective divisor: finitely many distinct affine points with positive
/// multiplicities. This is a point of the d-th symmetric product (equally, a
/// length-d subscheme), so the constructor normalizes away input order by
/// sorting on the canonical point order and merging duplicates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EffectiveDivisor {
    support: Vec<(CurvePoint, usize)>,
}

impl EffectiveDivisor {
    /// Validates: nonempty, all points affine, all on the given curve.
    pub fn new(curve: &CurveModel, points: &[(CurvePoint, usize)]) -> Result<EffectiveDivisor> {
        if points.is_empty() || points.iter().all(|(_, m)| *m == 0) {
            return Err(Error::Validation("divisor must have positive degree".into()));
        }
        let mut support: Vec<(CurvePoint, usize)> = Vec::new();
        for (p, mult) in points {
            if *mult == 0 {
                continue;
            }
            if !p.is_finite() {
                return Err(Error::UnsupportedSupport);
            }
            if !curve.contains(p)? {
                return Err(Error::Validation("divisor point is not on the curve".into()));
            }
            match support.iter_mut().find(|(q, _)| q == p) {
                Some((_, m)) => *m += mult,
                None => support.push((p.clone(), *mult)),
            }
        }
        support.sort();
        Ok(EffectiveDivisor { support })
    }

    pub fn degree(&self) -> usize {
        self.support.iter().map(|(_, m)| m).sum()
    }

    pub fn support(&self) -> &[(CurvePoint, usize)] {
        &self.support
    }

    pub fn multiplicity_of(&self, p: &CurvePoint) -> usize {
        self.support.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m)
    }
}

/// The jet-evaluation matrix of a divisor: deg-z rows (jet coefficients
/// grouped in point blocks, divisor order) by genus columns (canonical basis
/// order), together with the divisor and curve it came from.
#[derive(Debug, Clone)]
pub struct JetMatrix {
    pub matrix: ExactMatrix,
    pub divisor: EffectiveDivisor,
    pub curve: CurveModel,
}

/// Dimensions attached to a divisor z through the jet matrix.
///
/// `is_base_point` refers to the canonical system of the deg(z)-th symmetric
/// product; the characterization is proved for deg z <= g - 1, while the h0
/// fields are meaningful up to deg z = g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystemReport {
    pub rank_gamma: usize,
    pub h0_k_minus_z: usize,
    pub h0_z: usize,
    pub albanese_fiber_dim: usize,
    pub is_base_point: bool,
}

/// A d-dimensional subspace of the canonical sections, spanned by the rows
/// of a d x g coefficient matrix in the canonical basis.
#[derive(Debug, Clone)]
pub struct SubspaceSpec {
    rows: ExactMatrix,
}

impl SubspaceSpec {
    /// Validates full row rank d and d <= g.
    pub fn new(rows: ExactMatrix) -> Result<SubspaceSpec> {
        if rows.rows() > rows.cols() {
            return Err(Error::Validation("subspace dimension exceeds genus".into()));
        }
        if rows.rank() != rows.rows() {
            return Err(Error::Validation("subspace basis rows are dependent".into()));
        }
        Ok(SubspaceSpec { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn rows(&self) -> &ExactMatrix {
        &self.rows
    }
}

/// Assemble the jet-evaluation matrix of z: the block of rows for a point of
/// multiplicity k holds the order-k jet coefficients c_0 .. c_{k-1} of every
/// basis differential at that point.
pub fn gamma_matrix(curve: &CurveModel, z: &EffectiveDivisor) -> Result<JetMatrix> {
    gamma_matrix_with_charts(curve, z, None)
}

/// Same as [`gamma_matrix`], optionally forcing the chart used at every
/// point (where valid) so chart invariance is directly testable.
pub fn gamma_matrix_with_charts(
    curve: &CurveModel,
    z: &EffectiveDivisor,
    forced_chart: Option<ChartKind>,
) -> Result<JetMatrix> {
    let basis = canonical_basis(curve);
    let g = basis.len();
    let d = z.degree();
    let field = curve.field();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(d);
    for (p, mult) in z.support() {
        let mut jets_per_omega: Vec<Vec<Scalar>> = Vec::with_capacity(g);
        for omega in basis.elements() {
            let jv = match forced_chart {
                None => jet(curve, omega, p, *mult)?,
                Some(kind) => {
                    let chart = LocalChart { point: p.clone(), kind, precision: *mult };
                    jet_in_chart(curve, omega, &chart)?
                }
            };
            jets_per_omega.push(jv);
        }
        for r in 0..*mult {
            rows.push((0..g).map(|cidx| jets_per_omega[cidx][r].clone()).collect());
        }
    }
    let matrix = ExactMatrix::from_rows(rows, field)?;
    Ok(JetMatrix { matrix, divisor: z.clone(), curve: curve.clone() })
}

/// Dimension report for z with deg z <= g. Enforces the degree bound; the
/// base-point flag is the statement rank < d, equivalently h0(z) > 1.
pub fn linear_system_report(curve: &CurveModel, z: &EffectiveDivisor) -> Result<LinearSystemReport> {
    let g = curve.genus() as usize;
    let d = z.degree();
    if d > g {
        return Err(Error::OutOfRange { what: "deg z", value: d as i64, min: 1, max: g as i64 });
    }
    let jm = gamma_matrix(curve, z)?;
    let rank_gamma = jm.matrix.rank();
    let h0_k_minus_z = g - rank_gamma;
    let h0_z = 1 + d - rank_gamma;
    // the two exact sequences force h0(z) - h0(K - z) = d - g + 1
    debug_assert_eq!(h0_z as i64 - h0_k_minus_z as i64, d as i64 - g as i64 + 1);
    Ok(LinearSystemReport {
        rank_gamma,
        h0_k_minus_z,
        h0_z,
        albanese_fiber_dim: h0_z - 1,
        is_base_point: rank_gamma < d,
    })
}

/// The evaluation-map test: true iff the d-fold wedge of the restriction map
/// is nonzero, i.e. the jet matrix has full row rank d. Valid for
/// deg z <= g - 1 and always the negation of the base-point flag.
pub fn evaluation_rank_test(curve: &CurveModel, z: &EffectiveDivisor) -> Result<bool> {
    let g = curve.genus() as usize;
    let d = z.degree();
    if d + 1 > g {
        return Err(Error::OutOfRange { what: "deg z", value: d as i64, min: 1, max: g as i64 - 1 });
    }
    let jm = gamma_matrix(curve, z)?;
    Ok(jm.matrix.rank() == d)
}

/// Membership of y in the divisor D_S cut out by a d-dimensional subspace S:
/// true iff some nonzero element of S vanishes along y, i.e. the d x d
/// matrix (jet rows of y applied to the S basis) is singular.
pub fn ds_contains(curve: &CurveModel, s: &SubspaceSpec, y: &EffectiveDivisor) -> Result<bool> {
    let d = y.degree();
    if d != s.dim() {
        return Err(Error::Validation("deg y must equal dim S".into()));
    }
    if s.rows().cols() != canonical_basis(curve).len() {
        return Err(Error::Validation("subspace coordinates do not match the genus".into()));
    }
    let jm = gamma_matrix(curve, y)?;
    // restriction of the evaluation to S in bases: J (d x g) times S^T (g x d)
    let m = jm.matrix.mul(&s.rows().transpose())?;
    Ok(m.rank() < d)
}

/// Fiber of the degree-2 x-map over b on an odd-degree hyperelliptic model:
/// (b, s) + (b, -s) with s^2 = f(b), or twice the Weierstrass point when
/// f(b) = 0. Errors when f(b) is a non-square (the fiber lives over a
/// quadratic extension) or the model has even degree.
pub fn pencil_fiber(curve: &CurveModel, b: &Scalar) -> Result<EffectiveDivisor> {
    let CurveModel::Hyperelliptic { f, field } = curve else {
        return Err(Error::NotApplicable("pencil fibers require a hyperelliptic model".into()));
    };
    if b.field() != *field {
        return Err(Error::FieldMismatch);
    }
    let deg = f.degree().expect("validated nonzero");
    if deg % 2 == 0 {
        return Err(Error::NotApplicable(
            "pencil fibers are implemented for odd-degree models only".into(),
        ));
    }
    let val = f.eval(b)?;
    if val.is_zero() {
        let w = CurvePoint::affine(b.clone(), field.zero());
        return EffectiveDivisor::new(curve, &[(w, 2)]);
    }
    let Some(s) = val.sqrt() else {
        return Err(Error::IrrationalFiber);
    };
    let p1 = CurvePoint::affine(b.clone(), s.clone());
    let p2 = CurvePoint::affine(b.clone(), s.neg());
    EffectiveDivisor::new(curve, &[(p1, 1), (p2, 1)])
}

/// Independent h0 oracle for hyperelliptic divisors of degree <= g, with no
/// linear algebra: h0 = 1 + r where r counts the full x-fibers inside z
/// (min of the multiplicities of a conjugate pair, plus floor(k/2) at a
/// Weierstrass point of multiplicity k).
pub fn hyperelliptic_h0_oracle(curve: &CurveModel, z: &EffectiveDivisor) -> Result<usize> {
    let CurveModel::Hyperelliptic { .. } = curve else {
        return Err(Error::NotApplicable("the h0 oracle requires a hyperelliptic model".into()));
    };
    let g = curve.genus() as usize;
    let d = z.degree();
    if d > g {
        return Err(Error::OutOfRange { what: "deg z", value: d as i64, min: 1, max: g as i64 });
    }
    let mut r = 0usize;
    for (p, mult) in z.support() {
        let (_, y) = p.chart_xy()?;
        if y.is_zero() {
            r += mult / 2;
        } else {
            let conj = curve.involution(p)?;
            // count each conjugate pair once, from the smaller point
            if *p < conj {
                r += (*mult).min(z.multiplicity_of(&conj));
            }
        }
    }
    Ok(1 + r)
}

/// Number of degree-d multisets over n points: C(n + d - 1, d), saturating.
pub fn divisor_space_size(n_points: usize, d: usize) -> u64 {
    // C(n + d - 1, d) with overflow saturation
    let n = n_points as u128;
    let d = d as u128;
    if n == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..d {
        acc = acc.saturating_mul(n + i);
        acc /= i + 1;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All degree-d effective divisors supported on the given points, in
/// lexicographic order of index multisets. Refuses (rather than truncates)
/// when the count exceeds `budget`.
pub fn enumerate_divisors(
    curve: &CurveModel,
    points: &[CurvePoint],
    d: usize,
    budget: u64,
) -> Result<Vec<EffectiveDivisor>> {
    if d == 0 {
        return Err(Error::Validation("divisor degree must be >= 1".into()));
    }
    let total = divisor_space_size(points.len(), d);
    if total > budget {
        return Err(Error::BudgetExceeded { required: total, budget });
    }
    let mut out = Vec::with_capacity(total as usize);
    if points.is_empty() {
        return Ok(out);
    }
    // odometer over non-decreasing index tuples
    let mut idx = alloc::vec![0usize; d];
    loop {
        let mut spec: Vec<(CurvePoint, usize)> = Vec::new();
        for &i in &idx {
            match spec.iter_mut().find(|(q, _)| *q == points[i]) {
                Some((_, m)) => *m += 1,
                None => spec.push((points[i].clone(), 1)),
            }
        }
        out.push(EffectiveDivisor::new(curve, &spec)?);
        // advance
        let mut pos = d;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if idx[pos] + 1 < points.len() {
                let v = idx[pos] + 1;
                for slot in idx.iter_mut().skip(pos) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;
    use crate::exact::scalar::FieldDesc;

    fn g3_hyp(field: FieldDesc) -> CurveModel {
        let f = Poly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 1], field);
        CurveModel::hyperelliptic(f, field).unwrap()
    }

    fn pt(x: i64, y: i64, p: u64) -> CurvePoint {
        CurvePoint::affine(Scalar::fp(x.rem_euclid(p as i64) as u64, p), Scalar::fp(y.rem_euclid(p as i64) as u64, p))
    }

    fn first_non_weierstrass(c: &CurveModel) -> CurvePoint {
        c.enumerate_rational_points()
            .unwrap()
            .affine
            .into_iter()
            .find(|p| !p.chart_xy().unwrap().1.is_zero())
            .expect("curve has a non-Weierstrass rational point")
    }

    #[test]
    fn divisor_normalization_and_degree() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let p = first_non_weierstrass(&c);
        let q = c.involution(&p).unwrap();
        let z1 = EffectiveDivisor::new(&c, &[(p.clone(), 1), (q.clone(), 1)]).unwrap();
        let z2 = EffectiveDivisor::new(&c, &[(q, 1), (p.clone(), 1)]).unwrap();
        assert_eq!(z1, z2);
        assert_eq!(z1.degree(), 2);
        // duplicate mentions merge
        let z3 = EffectiveDivisor::new(&c, &[(p.clone(), 1), (p.clone(), 2)]).unwrap();
        assert_eq!(z3.degree(), 3);
        assert_eq!(z3.support().len(), 1);
    }

    #[test]
    fn single_point_gamma_row() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let p = first_non_weierstrass(&c);
        let (a, b) = p.chart_xy().unwrap();
        let z = EffectiveDivisor::new(&c, &[(p, 1)]).unwrap();
        let jm = gamma_matrix(&c, &z).unwrap();
        assert_eq!((jm.matrix.rows(), jm.matrix.cols()), (1, 3));
        let binv = b.inv().unwrap();
        assert_eq!(jm.matrix.row(0)[0], binv);
        assert_eq!(jm.matrix.row(0)[1], a.mul(&binv).unwrap());
        assert_eq!(jm.matrix.row(0)[2], a.mul(&a).unwrap().mul(&binv).unwrap());
    }

    #[test]
    fn conjugate_pair_rows_are_proportional() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let p = first_non_weierstrass(&c);
        let q = c.involution(&p).unwrap();
        let z = EffectiveDivisor::new(&c, &[(p, 1), (q, 1)]).unwrap();
        let jm = gamma_matrix(&c, &z).unwrap();
        assert_eq!((jm.matrix.rows(), jm.matrix.cols()), (2, 3));
        for col in 0..3 {
            assert_eq!(jm.matrix.at(0, col).neg(), *jm.matrix.at(1, col));
        }
        assert_eq!(jm.matrix.rank(), 1);
        let rep = linear_system_report(&c, &z).unwrap();
        assert_eq!(rep.h0_z, 2);
        assert_eq!(rep.albanese_fiber_dim, 1);
        assert!(rep.is_base_point);
    }

    #[test]
    fn doubled_weierstrass_point_block() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let w = pt(1, 0, 29);
        let z = EffectiveDivisor::new(&c, &[(w, 2)]).unwrap();
        let jm = gamma_matrix(&c, &z).unwrap();
        assert_eq!((jm.matrix.rows(), jm.matrix.cols()), (2, 3));
        // second row of the block vanishes: rank 1
        assert!(jm.matrix.row(1).iter().all(Scalar::is_zero));
        assert_eq!(jm.matrix.rank(), 1);
        let rep = linear_system_report(&c, &z).unwrap();
        assert_eq!(rep.h0_z, 2);
        assert!(rep.is_base_point);
    }

    #[test]
    fn single_point_is_never_a_base_point() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        for p in c.enumerate_rational_points().unwrap().affine {
            let z = EffectiveDivisor::new(&c, &[(p, 1)]).unwrap();
            let rep = linear_system_report(&c, &z).unwrap();
            assert_eq!(rep.h0_z, 1);
            assert!(!rep.is_base_point);
            assert!(evaluation_rank_test(&c, &z).unwrap());
        }
    }

    #[test]
    fn report_rejects_degree_beyond_genus() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let p = first_non_weierstrass(&c);
        let z = EffectiveDivisor::new(&c, &[(p, 4)]).unwrap();
        assert!(matches!(linear_system_report(&c, &z), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn evaluation_test_agrees_with_report() {
        let field = FieldDesc::prime_field(13).unwrap();
        let c = g3_hyp(field);
        let pts = c.enumerate_rational_points().unwrap().affine;
        let divs = enumerate_divisors(&c, &pts, 2, 1_000_000).unwrap();
        for z in divs {
            let rep = linear_system_report(&c, &z).unwrap();
            assert_eq!(evaluation_rank_test(&c, &z).unwrap(), !rep.is_base_point);
        }
    }

    #[test]
    fn oracle_matches_jet_rank_exhaustively() {
        let field = FieldDesc::prime_field(13).unwrap();
        let c = g3_hyp(field);
        let pts = c.enumerate_rational_points().unwrap().affine;
        for d in 1..=3usize {
            for z in enumerate_divisors(&c, &pts, d, 1_000_000).unwrap() {
                let rep = linear_system_report(&c, &z).unwrap();
                let oracle = hyperelliptic_h0_oracle(&c, &z).unwrap();
                assert_eq!(rep.h0_z, oracle, "mismatch at {z:?}");
                // Riemann-Roch identity
                assert_eq!(
                    rep.h0_z as i64 - rep.h0_k_minus_z as i64,
                    d as i64 - 3 + 1
                );
            }
        }
    }

    #[test]
    fn oracle_worked_example() {
        // z = 2 (a, 0) + (c, e) on a g = 3 curve: one half-fiber at the
        // Weierstrass point, so h0 = 2; must match the jet-rank route.
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let w = pt(1, 0, 29);
        let other = first_non_weierstrass(&c);
        let z = EffectiveDivisor::new(&c, &[(w, 2), (other, 1)]).unwrap();
        assert_eq!(hyperelliptic_h0_oracle(&c, &z).unwrap(), 2);
        assert_eq!(linear_system_report(&c, &z).unwrap().h0_z, 2);
    }

    #[test]
    fn pencil_fiber_cases() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let mut rational = 0;
        for bv in 0..29u64 {
            let b = Scalar::fp(bv, 29);
            match pencil_fiber(&c, &b) {
                Ok(z) => {
                    rational += 1;
                    assert_eq!(z.degree(), 2);
                    // sigma-conjugate support
                    let sup = z.support();
                    if sup.len() == 2 {
                        assert_eq!(c.involution(&sup[0].0).unwrap(), sup[1].0);
                    } else {
                        let (_, y) = sup[0].0.chart_xy().unwrap();
                        assert!(y.is_zero());
                        assert_eq!(sup[0].1, 2);
                    }
                    // every rational fiber is a base point of the canonical
                    // system of the second symmetric product
                    assert!(linear_system_report(&c, &z).unwrap().is_base_point);
                }
                Err(Error::IrrationalFiber) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        assert!(rational > 0);
        // even-degree models are refused
        let f8 = Poly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 0, 1], field);
        let c8 = CurveModel::hyperelliptic(f8, field).unwrap();
        assert!(matches!(
            pencil_fiber(&c8, &Scalar::fp(2, 29)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn ds_membership_tracks_base_points() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let p = first_non_weierstrass(&c);
        let q = c.involution(&p).unwrap();
        let base_point = EffectiveDivisor::new(&c, &[(p.clone(), 1), (q, 1)]).unwrap();
        // coordinate subspaces of dimension 2 inside the 3-dim canonical space
        let coords = |rows: &[[i64; 3]]| {
            let data = rows
                .iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>();
            SubspaceSpec::new(ExactMatrix::from_rows(data, field).unwrap()).unwrap()
        };
        let subspaces = [
            coords(&[[1, 0, 0], [0, 1, 0]]),
            coords(&[[1, 0, 0], [0, 0, 1]]),
            coords(&[[0, 1, 0], [0, 0, 1]]),
        ];
        // a base point lies on D_S for every S
        for s in &subspaces {
            assert!(ds_contains(&c, s, &base_point).unwrap());
        }
        // a non-base divisor misses D_S for at least one coordinate subspace
        let pts = c.enumerate_rational_points().unwrap().affine;
        let z = enumerate_divisors(&c, &pts, 2, 10_000)
            .unwrap()
            .into_iter()
            .find(|z| !linear_system_report(&c, z).unwrap().is_base_point)
            .expect("non-base divisor exists");
        assert!(subspaces.iter().any(|s| !ds_contains(&c, s, &z).unwrap()));
    }

    #[test]
    fn full_space_ds_is_rank_defect() {
        // d = g, S the whole canonical space: membership iff rank < g
        let field = FieldDesc::prime_field(13).unwrap();
        let c = g3_hyp(field);
        let s = SubspaceSpec::new(ExactMatrix::identity(3, field)).unwrap();
        let pts = c.enumerate_rational_points().unwrap().affine;
        for z in enumerate_divisors(&c, &pts, 3, 100_000).unwrap().into_iter().take(60) {
            let jm = gamma_matrix(&c, &z).unwrap();
            assert_eq!(
                ds_contains(&c, &s, &z).unwrap(),
                jm.matrix.rank() < 3
            );
        }
    }

    #[test]
    fn budget_is_refused_not_truncated() {
        let field = FieldDesc::prime_field(29).unwrap();
        let c = g3_hyp(field);
        let pts = c.enumerate_rational_points().unwrap().affine;
        let n = pts.len();
        let err = enumerate_divisors(&c, &pts, 2, 3).unwrap_err();
        match err {
            Error::BudgetExceeded { required, budget } => {
                assert_eq!(budget, 3);
                assert_eq!(required, divisor_space_size(n, 2));
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn divisor_space_sizes() {
        assert_eq!(divisor_space_size(4, 2), 10);
        assert_eq!(divisor_space_size(1, 5), 1);
        assert_eq!(divisor_space_size(0, 2), 0);
        let field = FieldDesc::prime_field(13).unwrap();
        let c = g3_hyp(field);
        let pts = c.enumerate_rational_points().unwrap().affine;
        let divs = enumerate_divisors(&c, &pts, 2, 1_000_000).unwrap();
        assert_eq!(divs.len() as u64, divisor_space_size(pts.len(), 2));
        // enumeration produces each divisor exactly once
        let mut dedup = divs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), divs.len());
    }
}
