//! Property tests for the arithmetic layer.

use proptest::prelude::*;
use symprod_core::exact::scalar::{FieldDesc, Scalar};
use symprod_core::{ExactMatrix, TruncatedSeries};

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::rational(n, d).unwrap())
}

fn rational_matrix(max_dim: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(small_rational(), r * c)
            .prop_map(move |data| ExactMatrix::new(r, c, data, FieldDesc::Q).unwrap())
    })
}

fn series(precision: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(small_rational(), precision)
        .prop_map(|coeffs| TruncatedSeries::new(coeffs, FieldDesc::Q).unwrap())
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in rational_matrix(5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn series_multiplication_is_associative(
        a in series(5),
        b in series(5),
        c in series(5),
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rational_addition_matches_integer_cross_multiplication(
        (a, b) in (-1000i64..=1000, 1i64..=1000),
        (c, d) in (-1000i64..=1000, 1i64..=1000),
    ) {
        let lhs = Scalar::rational(a, b).unwrap().add(&Scalar::rational(c, d).unwrap()).unwrap();
        let rhs = Scalar::rational(a * d + c * b, b * d).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn newton_root_substitutes_back_to_zero(
        a in 1i64..=6,
        extra in proptest::collection::vec(-3i64..=3, 3),
    ) {
        // f(x) = x^3 + e2 x^2 + e1 x + e0 shifted so that f(a) is a nonzero
        // square: solve Y^2 = f(a + t) and substitute back.
        use symprod_core::exact::poly::Poly;
        use symprod_core::exact::series::{series_newton_root, SeriesPoly};
        let field = FieldDesc::Q;
        let f = Poly::from_i64(&[extra[0], extra[1], extra[2], 1], field);
        let fa = f.eval(&field.from_i64(a)).unwrap();
        // make the constant term land on a perfect square: f + (k^2 - f(a))
        let k = field.from_i64(a + 4);
        let target = k.mul(&k).unwrap();
        let adjust = target.sub(&fa).unwrap();
        let f = f.add(&Poly::constant(adjust)).unwrap();
        let n = 6usize;
        let shifted = f.shift(&field.from_i64(a)).unwrap();
        let mut cs = shifted.coeffs().to_vec();
        cs.resize(n, field.zero());
        let rhs = TruncatedSeries::new(cs, field).unwrap();
        let eq = SeriesPoly::new(
            vec![
                rhs.clone().neg(),
                TruncatedSeries::constant(field.zero(), n).unwrap(),
                TruncatedSeries::constant(field.one(), n).unwrap(),
            ],
            field,
        )
        .unwrap();
        let root = series_newton_root(&eq, &k, n).unwrap();
        let residual = root.mul(&root).unwrap().sub(&rhs).unwrap();
        prop_assert!(residual.is_zero());
    }

    #[test]
    fn prime_field_rank_is_transpose_invariant(
        data in proptest::collection::vec(0i64..29, 12),
    ) {
        let field = FieldDesc::prime_field(29).unwrap();
        let scalars: Vec<Scalar> = data.iter().map(|&v| field.from_i64(v)).collect();
        let m = ExactMatrix::new(3, 4, scalars, field).unwrap();
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}
