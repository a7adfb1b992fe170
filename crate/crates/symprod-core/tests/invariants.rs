//! Cross-module invariants exercised exhaustively over small prime fields.

use symprod_core::curve::tripoly::TriPoly;
use symprod_core::curve::CurveModel;
use symprod_core::exact::scalar::FieldDesc;
use symprod_core::jets::ChartKind;
use symprod_core::linsys::{
    enumerate_divisors, evaluation_rank_test, gamma_matrix_with_charts, hyperelliptic_h0_oracle,
    linear_system_report,
};
use symprod_core::Poly;

fn hyperelliptic(coeffs: &[i64], p: u64) -> CurveModel {
    let field = FieldDesc::prime_field(p).unwrap();
    CurveModel::hyperelliptic(Poly::from_i64(coeffs, field), field).unwrap()
}

/// Riemann-Roch and the combinatorial oracle, exhaustively for d <= g over
/// three hyperelliptic models (odd and even degree, genus 2 and 3).
#[test]
fn riemann_roch_and_oracle_exhaustive() {
    let curves = [
        hyperelliptic(&[-1, 0, 0, 0, 0, 0, 0, 1], 13), // g = 3, deg 7
        hyperelliptic(&[2, 1, 0, 0, 0, 1], 11),        // g = 2, deg 5
        hyperelliptic(&[3, 1, 0, 0, 0, 0, 0, 0, 1], 11), // g = 3, deg 8
    ];
    for c in &curves {
        let g = c.genus() as usize;
        let pts = c.enumerate_rational_points().unwrap().affine;
        for d in 1..=g {
            for z in enumerate_divisors(c, &pts, d, 2_000_000).unwrap() {
                let rep = linear_system_report(c, &z).unwrap();
                assert_eq!(
                    rep.h0_z as i64 - rep.h0_k_minus_z as i64,
                    d as i64 - g as i64 + 1,
                    "Riemann-Roch fails at {z:?}"
                );
                let oracle = hyperelliptic_h0_oracle(c, &z).unwrap();
                assert_eq!(rep.h0_z, oracle, "oracle mismatch at {z:?}");
            }
        }
    }
}

/// The three computations of the base-point bit agree: rank defect, h0 >= 2,
/// and the negated evaluation test.
#[test]
fn base_point_bit_is_consistent() {
    let c = hyperelliptic(&[-1, 0, 0, 0, 0, 0, 0, 1], 13);
    let pts = c.enumerate_rational_points().unwrap().affine;
    for z in enumerate_divisors(&c, &pts, 2, 2_000_000).unwrap() {
        let rep = linear_system_report(&c, &z).unwrap();
        assert_eq!(rep.is_base_point, rep.rank_gamma < z.degree());
        assert_eq!(rep.is_base_point, rep.h0_z >= 2);
        assert_eq!(rep.is_base_point, !evaluation_rank_test(&c, &z).unwrap());
    }
}

/// Plane-model chart invariance: the rank of the jet matrix is the same no
/// matter which valid chart is forced at the points.
#[test]
fn plane_jet_rank_is_chart_invariant() {
    let field = FieldDesc::prime_field(11).unwrap();
    let fermat = TriPoly::from_i64_terms(&[(4, 0, 0, 1), (0, 4, 0, 1), (0, 0, 4, 1)], field);
    let c = CurveModel::smooth_plane(fermat, field).unwrap();
    let pts = c.enumerate_rational_points().unwrap().affine;
    let mut compared = 0;
    for z in enumerate_divisors(&c, &pts, 2, 2_000_000).unwrap() {
        let jx = gamma_matrix_with_charts(&c, &z, Some(ChartKind::XMinusX0));
        let jy = gamma_matrix_with_charts(&c, &z, Some(ChartKind::YMinusY0));
        if let (Ok(jx), Ok(jy)) = (jx, jy) {
            assert_eq!(jx.matrix.rank(), jy.matrix.rank(), "rank differs at {z:?}");
            compared += 1;
        }
    }
    assert!(compared > 0, "no divisor admitted both charts at all points");
}

/// Below the gonality of a plane quartic nothing moves: every degree-2
/// divisor on rational points has full-rank jet matrix.
#[test]
fn quartic_degree_two_divisors_never_move() {
    let field = FieldDesc::prime_field(11).unwrap();
    let fermat = TriPoly::from_i64_terms(&[(4, 0, 0, 1), (0, 4, 0, 1), (0, 0, 4, 1)], field);
    let c = CurveModel::smooth_plane(fermat, field).unwrap();
    let pts = c.enumerate_rational_points().unwrap().affine;
    for z in enumerate_divisors(&c, &pts, 2, 2_000_000).unwrap() {
        let rep = linear_system_report(&c, &z).unwrap();
        assert!(!rep.is_base_point, "unexpected moving divisor {z:?}");
        assert_eq!(rep.h0_z, 1);
    }
}
