//! Field scalars: arbitrary-precision rationals and odd prime fields.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldDesc {
    /// The rational numbers.
    Q,
    /// The prime field F_p, p an odd prime.
    Fp(u64),
}

impl FieldDesc {
    /// Validated constructor for a prime field descriptor.
    ///
    /// Rejects p = 2 and composites; primality by trial division, which is
    /// fine for the modulus sizes this crate enumerates over.
    pub fn prime_field(p: u64) -> Result<FieldDesc> {
        if p < 3 || p % 2 == 0 || !is_prime_u64(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldDesc::Fp(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDesc::Q => Scalar::Q(BigRational::zero()),
            FieldDesc::Fp(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldDesc::Q => Scalar::Q(BigRational::one()),
            FieldDesc::Fp(p) => Scalar::Fp { v: 1, p: *p },
        }
    }

    /// Image of a signed integer in this field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldDesc::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldDesc::Fp(p) => {
                let p = *p;
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { v: r, p }
            }
        }
    }

    /// Field characteristic: 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDesc::Q => 0,
            FieldDesc::Fp(p) => *p,
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Q => write!(f, "Q"),
            FieldDesc::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while let Some(sq) = d.checked_mul(d) {
        if sq > n {
            return true;
        }
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept reduced with positive denominator (the `BigRational`
/// representation invariant); prime-field residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldDesc {
        match self {
            Scalar::Q(_) => FieldDesc::Q,
            Scalar::Fp { p, .. } => FieldDesc::Fp(*p),
        }
    }

    /// Rational from a numerator/denominator pair.
    pub fn rational(num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar::Q(BigRational::from_integer(n))
    }

    /// Residue constructor; reduces mod p. The caller is responsible for `p`
    /// being a validated odd prime (use [`FieldDesc::prime_field`]).
    pub fn fp(v: u64, p: u64) -> Scalar {
        Scalar::Fp { v: v % p, p }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn check_same_field(&self, rhs: &Scalar) -> Result<()> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { v: addmod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { v: mulmod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp { v: invmod(*v, *p), p: *p },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_same_field(rhs)?;
        self.mul(&rhs.inv()?)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Canonical decimal-string form: reduced `n` or `n/d` for rationals,
    /// the residue for prime fields. Inverse of [`Scalar::parse`].
    pub fn to_decimal_string(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    let mut s = r.numer().to_string();
                    s.push('/');
                    s.push_str(&r.denom().to_string());
                    s
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// Parse a decimal string (`-3`, `7/2`, ...) as an element of `field`.
    /// Prime-field values reduce mod p; rationals must have nonzero denominator.
    pub fn parse(s: &str, field: &FieldDesc) -> Result<Scalar> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| Error::Validation(alloc::format!("bad integer literal: {num_str:?}")))?;
        let den: BigInt = match den_str {
            Some(d) => d
                .parse()
                .map_err(|_| Error::Validation(alloc::format!("bad integer literal: {d:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field {
            FieldDesc::Q => Ok(Scalar::Q(BigRational::new(num, den))),
            FieldDesc::Fp(p) => {
                let n = bigint_mod_u64(&num, *p);
                let d = bigint_mod_u64(&den, *p);
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Fp { v: mulmod(n, invmod(d, *p), *p), p: *p })
            }
        }
    }

    /// Residue value for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            Scalar::Q(_) => None,
        }
    }

    /// The underlying rational for Q scalars.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }

    /// Square root within the field, if one exists: Tonelli-Shanks for F_p,
    /// exact integer square roots of numerator and denominator for Q.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Fp { v, p } => sqrt_mod_p(*v, *p).map(|s| Scalar::Fp { v: s, p: *p }),
            Scalar::Q(r) => {
                if r.is_negative() {
                    return None;
                }
                let num = exact_sqrt(r.numer().magnitude())?;
                let den = exact_sqrt(r.denom().magnitude())?;
                Some(Scalar::Q(BigRational::new(
                    BigInt::from_biguint(Sign::Plus, num),
                    BigInt::from_biguint(Sign::Plus, den),
                )))
            }
        }
    }
}

/// Total order used for canonical sorting of points and serialization.
/// Rationals order numerically; residues by value; across fields, by field tag.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp(b),
            (Scalar::Fp { v: a, p: pa }, Scalar::Fp { v: b, p: pb }) => {
                pa.cmp(pb).then(a.cmp(b))
            }
            (Scalar::Q(_), Scalar::Fp { .. }) => Ordering::Less,
            (Scalar::Fp { .. }, Scalar::Q(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    powmod(a, p - 2, p)
}

fn bigint_mod_u64(n: &BigInt, p: u64) -> u64 {
    let m = n.magnitude() % BigUint::from(p);
    let m = m.to_u64_digits().first().copied().unwrap_or(0);
    if n.sign() == Sign::Minus && m != 0 {
        p - m
    } else {
        m
    }
}

/// Tonelli-Shanks square root mod an odd prime; the smaller of the two roots.
fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let r = if p % 4 == 3 {
        powmod(a, (p + 1) / 4, p)
    } else {
        // write p-1 = q 2^s with q odd
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        // first quadratic non-residue, scanned deterministically
        let mut z = 2;
        while powmod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = powmod(z, q, p);
        let mut t = powmod(a, q, p);
        let mut r = powmod(a, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mulmod(t2, t2, p);
                i += 1;
            }
            let b = powmod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        r
    };
    Some(r.min(p - r))
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Scalar::rational(1, 3).unwrap();
        let b = Scalar::rational(1, 6).unwrap();
        assert_eq!(a.add(&b).unwrap(), Scalar::rational(1, 2).unwrap());
        assert_eq!(a.to_decimal_string(), "1/3");
        assert_eq!(a.sub(&a).unwrap(), FieldDesc::Q.zero());
    }

    #[test]
    fn prime_field_ops() {
        let f = FieldDesc::prime_field(29).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, Scalar::fp(26, 29));
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Scalar::rational(1, 2).unwrap();
        let b = Scalar::fp(3, 29);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn modulus_validation() {
        assert!(FieldDesc::prime_field(2).is_err());
        assert!(FieldDesc::prime_field(9).is_err());
        assert!(FieldDesc::prime_field(1).is_err());
        assert!(FieldDesc::prime_field(101).is_ok());
    }

    #[test]
    fn sqrt_in_both_fields() {
        for p in [29u64, 101, 13] {
            for v in 0..p {
                if let Some(s) = sqrt_mod_p(v, p) {
                    assert_eq!(mulmod(s, s, p), v);
                }
            }
            // every value is a square or not; count roots
            let squares = (0..p).filter(|v| sqrt_mod_p(*v, p).is_some()).count() as u64;
            assert_eq!(squares, (p - 1) / 2 + 1);
        }
        let q = Scalar::rational(9, 4).unwrap();
        assert_eq!(q.sqrt().unwrap(), Scalar::rational(3, 2).unwrap());
        assert!(Scalar::rational(2, 1).unwrap().sqrt().is_none());
        assert!(Scalar::rational(-1, 1).unwrap().sqrt().is_none());
    }

    #[test]
    fn parse_round_trip() {
        let f = FieldDesc::Q;
        for s in ["0", "-7", "3/2", "-22/7"] {
            let v = Scalar::parse(s, &f).unwrap();
            assert_eq!(v.to_decimal_string(), s);
        }
        let v = Scalar::parse("4/6", &f).unwrap();
        assert_eq!(v.to_decimal_string(), "2/3");
        let fp = FieldDesc::prime_field(29).unwrap();
        assert_eq!(Scalar::parse("-1", &fp).unwrap(), Scalar::fp(28, 29));
        assert_eq!(Scalar::parse("1/2", &fp).unwrap(), Scalar::fp(15, 29));
        assert!(Scalar::parse("1/0", &f).is_err());
    }
}
