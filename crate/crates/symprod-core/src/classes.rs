//! Numerical divisor classes on the d-th symmetric product and on the
//! Cartesian square of a curve, with exact intersection numbers.
//!
//! On the symmetric product, classes live in the span of x (the image of the
//! (d-1)-st symmetric product under adding a base point) and theta (the
//! pullback of the theta divisor under the Albanese map). On the Cartesian
//! square, in the span of the two fibers f1, f2 and the diagonal.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A numerical class a x + b theta on the d-th symmetric product of a genus
/// g curve, with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSClassCd {
    pub g: u32,
    pub d: u32,
    pub a: BigRational,
    pub b: BigRational,
}

impl NSClassCd {
    pub fn new(g: u32, d: u32, a: BigRational, b: BigRational) -> Result<NSClassCd> {
        if g < 2 {
            return Err(Error::OutOfScope(String::from("genus must be >= 2")));
        }
        if d < 1 {
            return Err(Error::OutOfScope(String::from("symmetric power must be >= 1")));
        }
        Ok(NSClassCd { g, d, a, b })
    }

    pub fn from_integers(g: u32, d: u32, a: i64, b: i64) -> Result<NSClassCd> {
        NSClassCd::new(g, d, rat(a), rat(b))
    }
}

/// A numerical class a1 f1 + a2 f2 + c Delta on the Cartesian square, where
/// f1 = {pt} x C, f2 = C x {pt} and Delta is the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSClassC2Product {
    pub g: u32,
    pub a1: BigRational,
    pub a2: BigRational,
    pub c: BigRational,
}

impl NSClassC2Product {
    pub fn new(g: u32, a1: BigRational, a2: BigRational, c: BigRational) -> Result<NSClassC2Product> {
        if g < 2 {
            return Err(Error::OutOfScope(String::from("genus must be >= 2")));
        }
        Ok(NSClassC2Product { g, a1, a2, c })
    }
}

/// Canonical class of the d-th symmetric product: (g - d - 1) x + theta.
pub fn canonical_class(g: u32, d: u32) -> Result<NSClassCd> {
    NSClassCd::from_integers(g, d, g as i64 - d as i64 - 1, 1)
}

/// Half the branch class: Delta'/2 = (d + g - 1) x - theta.
pub fn delta_prime_half_class(g: u32, d: u32) -> Result<NSClassCd> {
    NSClassCd::from_integers(g, d, d as i64 + g as i64 - 1, -1)
}

/// Sufficient nefness rule. theta is nef (pullback of an ample class) and x
/// is ample, so a >= 0 and b >= 0 forces nefness; anything else is reported
/// unknown, never "not nef".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nefness {
    Nef,
    Unknown,
    NotApplicable,
}

pub fn is_nef_sufficient(class: &NSClassCd) -> Nefness {
    if !class.a.is_negative() && !class.b.is_negative() {
        Nefness::Nef
    } else {
        Nefness::Unknown
    }
}

/// Dimension of the space of global canonical sections of the d-th
/// symmetric product: the d-th exterior power of the g-dimensional space of
/// curve differentials, so binomial(g, d) (zero once d > g).
pub fn macdonald_h0_canonical(g: u32, d: u32) -> BigUint {
    let (g, d) = (g as u64, d as u64);
    if d > g {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..d.min(g - d) {
        acc = acc * BigUint::from(g - i) / BigUint::from(i + 1);
    }
    acc
}

/// Pull a d = 2 class back to the Cartesian square: x maps to f1 + f2 and
/// theta to (g + 1)(f1 + f2) - Delta.
pub fn c2_pullback(class: &NSClassCd) -> Result<NSClassC2Product> {
    if class.d != 2 {
        return Err(Error::NotApplicable(String::from("pullback to the square needs d = 2")));
    }
    let g = class.g;
    let gp1 = rat(g as i64 + 1);
    NSClassC2Product::new(
        g,
        &class.a + &class.b * &gp1,
        &class.a + &class.b * &gp1,
        -&class.b,
    )
}

/// Intersection form on the Cartesian square: f1^2 = f2^2 = 0, f1 f2 = 1,
/// Delta f1 = Delta f2 = 1, Delta^2 = 2 - 2g.
pub fn c2product_intersect(u: &NSClassC2Product, v: &NSClassC2Product) -> Result<BigRational> {
    if u.g != v.g {
        return Err(Error::Validation(String::from("classes live on squares of different genus")));
    }
    let delta_sq = rat(2 - 2 * u.g as i64);
    // bilinear expansion over the Gram matrix of (f1, f2, Delta)
    let mut acc = BigRational::zero();
    acc += &u.a1 * &v.a2 + &u.a2 * &v.a1; // f1.f2 = f2.f1 = 1
    acc += (&u.a1 + &u.a2) * &v.c + (&v.a1 + &v.a2) * &u.c; // Delta.fi = 1
    acc += &u.c * &v.c * delta_sq;
    Ok(acc)
}

/// Intersection number on the second symmetric product, computed by pulling
/// both classes back to the Cartesian square and dividing by the degree of
/// the quotient map.
pub fn c2_intersect(u: &NSClassCd, v: &NSClassCd) -> Result<BigRational> {
    if u.g != v.g {
        return Err(Error::Validation(String::from("classes live on products of different genus")));
    }
    if u.d != 2 || v.d != 2 {
        return Err(Error::NotApplicable(String::from("intersection numbers need d = 2")));
    }
    let pu = c2_pullback(u)?;
    let pv = c2_pullback(v)?;
    Ok(c2product_intersect(&pu, &pv)? / rat(2))
}

/// Self-intersection of the rational curve of conjugate pairs on the second
/// symmetric product of a hyperelliptic curve: the graph of the involution
/// has self-intersection 2 - 2g on the square (it is the diagonal moved by
/// an automorphism), and the degree-2 quotient halves it to 1 - g.
pub fn gamma_self_intersection(g: u32) -> Result<i64> {
    if g < 2 {
        return Err(Error::OutOfScope(String::from("genus must be >= 2")));
    }
    let graph_sq: i64 = 2 - 2 * g as i64;
    Ok(graph_sq / 2)
}

/// K^2 on the second symmetric product as a plain integer, for reports.
pub fn canonical_self_intersection_c2(g: u32) -> Result<BigRational> {
    let k = canonical_class(g, 2)?;
    c2_intersect(&k, &k)
}

/// Scaled sum of classes, for symbolic identities in tests and reports.
pub fn add_classes(u: &NSClassCd, v: &NSClassCd) -> Result<NSClassCd> {
    if u.g != v.g || u.d != v.d {
        return Err(Error::Validation(String::from("classes live on different products")));
    }
    NSClassCd::new(u.g, u.d, &u.a + &v.a, &u.b + &v.b)
}

/// All (g, d) pairs of a rectangular grid, a convenience for sweep tests.
pub fn grid(gs: core::ops::RangeInclusive<u32>, d_of_g: impl Fn(u32) -> u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for g in gs {
        for d in 1..=d_of_g(g) {
            out.push((g, d));
        }
    }
    out
}
