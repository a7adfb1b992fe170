//! Explicit curve models: hyperelliptic y^2 = f(x) and smooth plane curves,
//! their genus, rational points, and the hyperelliptic involution.

pub mod bipoly;
pub mod tripoly;

use alloc::format;
use alloc::vec::Vec;

use crate::curve::bipoly::{system_has_common_zero, BiPoly};
use crate::curve::tripoly::TriPoly;
use crate::error::Error;
use crate::exact::poly::Poly;
use crate::exact::scalar::{FieldDesc, Scalar};
use crate::Result;

/// An explicit smooth projective curve over an exact field.
///
/// Hyperelliptic models y^2 = f(x) require f squarefree of degree 2g+1 or
/// 2g+2 with g >= 2; plane models require a smooth homogeneous F of degree
/// m >= 4. Construct through [`CurveModel::hyperelliptic`] or
/// [`CurveModel::smooth_plane`], which validate these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveModel {
    Hyperelliptic { f: Poly, field: FieldDesc },
    SmoothPlane { f: TriPoly, degree: u32, field: FieldDesc },
}

/// A point of a curve model.
///
/// `Affine` is a point (x, y) of the hyperelliptic chart; `Plane` is a
/// Z-normalized projective point of a plane model with Z != 0, or a flagged
/// point at infinity normalized on its last nonzero coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurvePoint {
    Affine { x: Scalar, y: Scalar },
    Plane { x: Scalar, y: Scalar, z: Scalar },
}

impl CurvePoint {
    pub fn affine(x: Scalar, y: Scalar) -> CurvePoint {
        CurvePoint::Affine { x, y }
    }

    /// Normalize projective coordinates: scale the last nonzero coordinate
    /// to 1 (so finite points end with z = 1).
    pub fn plane(x: Scalar, y: Scalar, z: Scalar) -> Result<CurvePoint> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(Error::Validation("projective coordinates all zero".into()));
        }
        let scale = if !z.is_zero() {
            z.inv()?
        } else if !y.is_zero() {
            y.inv()?
        } else {
            x.inv()?
        };
        Ok(CurvePoint::Plane {
            x: x.mul(&scale)?,
            y: y.mul(&scale)?,
            z: z.mul(&scale)?,
        })
    }

    /// Finite (affine-chart) points only: hyperelliptic points always are;
    /// plane points iff z != 0.
    pub fn is_finite(&self) -> bool {
        match self {
            CurvePoint::Affine { .. } => true,
            CurvePoint::Plane { z, .. } => !z.is_zero(),
        }
    }

    /// Chart coordinates (x, y) of a finite point.
    pub fn chart_xy(&self) -> Result<(Scalar, Scalar)> {
        match self {
            CurvePoint::Affine { x, y } => Ok((x.clone(), y.clone())),
            CurvePoint::Plane { x, y, z } => {
                if z.is_zero() {
                    Err(Error::UnsupportedSupport)
                } else {
                    Ok((x.clone(), y.clone()))
                }
            }
        }
    }
}

/// Rational points of a prime-field model, split into the affine chart and
/// the locus at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointEnumeration {
    pub affine: Vec<CurvePoint>,
    pub at_infinity: Vec<CurvePoint>,
}

impl CurveModel {
    /// Validated hyperelliptic model y^2 = f(x).
    ///
    /// Over F_p the modulus must additionally satisfy p > deg f, so that the
    /// reduction is good and characteristic-p artifacts cannot appear; a
    /// borderline prime is refused rather than risked.
    pub fn hyperelliptic(f: Poly, field: FieldDesc) -> Result<CurveModel> {
        if f.field() != field {
            return Err(Error::FieldMismatch);
        }
        let Some(deg) = f.degree() else {
            return Err(Error::Validation("f must be nonzero".into()));
        };
        if deg < 5 {
            return Err(Error::Validation(format!(
                "deg f = {deg} gives genus < 2; need deg f >= 5"
            )));
        }
        if let FieldDesc::Fp(p) = field {
            FieldDesc::prime_field(p)?;
            if p <= deg as u64 {
                return Err(Error::Validation(format!(
                    "modulus {p} too small for deg f = {deg}; need p > deg f"
                )));
            }
        }
        if !f.is_squarefree()? {
            return Err(Error::Validation("f must be squarefree".into()));
        }
        Ok(CurveModel::Hyperelliptic { f, field })
    }

    /// Validated smooth plane model V(F) in P^2, F homogeneous of degree
    /// m >= 4. Over F_p the modulus must satisfy p > m.
    pub fn smooth_plane(f: TriPoly, field: FieldDesc) -> Result<CurveModel> {
        if f.field() != field {
            return Err(Error::FieldMismatch);
        }
        let Some(m) = f.total_degree() else {
            return Err(Error::Validation("F must be nonzero".into()));
        };
        if m < 4 {
            return Err(Error::Validation(format!("degree {m} < 4 plane models are out of scope")));
        }
        if !f.is_homogeneous_of_degree(m) {
            return Err(Error::Validation("F must be homogeneous".into()));
        }
        if let FieldDesc::Fp(p) = field {
            FieldDesc::prime_field(p)?;
            if p <= m as u64 {
                return Err(Error::Validation(format!(
                    "modulus {p} too small for degree {m}; need p > m"
                )));
            }
        }
        if !check_smooth_plane(&f)? {
            return Err(Error::Validation("plane model is singular".into()));
        }
        Ok(CurveModel::SmoothPlane { f, degree: m, field })
    }

    pub fn field(&self) -> FieldDesc {
        match self {
            CurveModel::Hyperelliptic { field, .. } => *field,
            CurveModel::SmoothPlane { field, .. } => *field,
        }
    }

    /// Genus: ceil(deg f / 2) - 1 for hyperelliptic, (m-1)(m-2)/2 for plane.
    pub fn genus(&self) -> u32 {
        match self {
            CurveModel::Hyperelliptic { f, .. } => {
                let deg = f.degree().expect("validated nonzero") as u32;
                deg.div_ceil(2) - 1
            }
            CurveModel::SmoothPlane { degree: m, .. } => (m - 1) * (m - 2) / 2,
        }
    }

    pub fn is_hyperelliptic(&self) -> bool {
        matches!(self, CurveModel::Hyperelliptic { .. })
    }

    /// Degree of the plane model, if it is one.
    pub fn plane_degree(&self) -> Option<u32> {
        match self {
            CurveModel::SmoothPlane { degree, .. } => Some(*degree),
            CurveModel::Hyperelliptic { .. } => None,
        }
    }

    /// True iff the point satisfies the defining equation (and, for plane
    /// points, matches the model kind).
    pub fn contains(&self, p: &CurvePoint) -> Result<bool> {
        match (self, p) {
            (CurveModel::Hyperelliptic { f, .. }, CurvePoint::Affine { x, y }) => {
                Ok(y.mul(y)? == f.eval(x)?)
            }
            (CurveModel::SmoothPlane { f, .. }, CurvePoint::Plane { x, y, z }) => {
                Ok(f.eval(x, y, z)?.is_zero())
            }
            _ => Err(Error::Validation("point kind does not match model kind".into())),
        }
    }

    /// The hyperelliptic involution (x, y) -> (x, -y). Fixed points are
    /// exactly the Weierstrass points y = 0.
    pub fn involution(&self, p: &CurvePoint) -> Result<CurvePoint> {
        let CurveModel::Hyperelliptic { .. } = self else {
            return Err(Error::NotApplicable("involution requires a hyperelliptic model".into()));
        };
        if !self.contains(p)? {
            return Err(Error::Validation("point is not on the curve".into()));
        }
        let CurvePoint::Affine { x, y } = p else {
            return Err(Error::Validation("point kind does not match model kind".into()));
        };
        Ok(CurvePoint::Affine { x: x.clone(), y: y.neg() })
    }

    /// All rational points of a prime-field model, in lexicographic order.
    ///
    /// Hyperelliptic: all affine (x, y) with y^2 = f(x); the points over
    /// x = infinity are counted by [`CurveModel::rational_points_at_infinity`]
    /// but carry no chart coordinates. Plane: all Z-normalized points with
    /// Z != 0, plus the flagged Z = 0 points.
    pub fn enumerate_rational_points(&self) -> Result<PointEnumeration> {
        let FieldDesc::Fp(p) = self.field() else {
            return Err(Error::UnsupportedEnumeration);
        };
        match self {
            CurveModel::Hyperelliptic { f, .. } => {
                let mut affine = Vec::new();
                for xv in 0..p {
                    let x = Scalar::fp(xv, p);
                    let val = f.eval(&x)?;
                    for yv in 0..p {
                        let y = Scalar::fp(yv, p);
                        if y.mul(&y)? == val {
                            affine.push(CurvePoint::Affine { x: x.clone(), y });
                        }
                    }
                }
                Ok(PointEnumeration { affine, at_infinity: Vec::new() })
            }
            CurveModel::SmoothPlane { f, .. } => {
                let mut affine = Vec::new();
                for xv in 0..p {
                    for yv in 0..p {
                        let (x, y) = (Scalar::fp(xv, p), Scalar::fp(yv, p));
                        let one = Scalar::fp(1, p);
                        if f.eval(&x, &y, &one)?.is_zero() {
                            affine.push(CurvePoint::Plane { x, y, z: one });
                        }
                    }
                }
                let mut at_infinity = Vec::new();
                // (x : 1 : 0)
                for xv in 0..p {
                    let x = Scalar::fp(xv, p);
                    let (one, zero) = (Scalar::fp(1, p), Scalar::fp(0, p));
                    if f.eval(&x, &one, &zero)?.is_zero() {
                        at_infinity.push(CurvePoint::Plane { x, y: one, z: zero });
                    }
                }
                // (1 : 0 : 0)
                let (one, zero) = (Scalar::fp(1, p), Scalar::fp(0, p));
                if f.eval(&one, &zero, &zero)?.is_zero() {
                    at_infinity.push(CurvePoint::Plane { x: one, y: zero.clone(), z: zero });
                }
                Ok(PointEnumeration { affine, at_infinity })
            }
        }
    }

    /// Number of rational points over x = infinity (hyperelliptic over F_p):
    /// one ramified point for odd deg f; for even deg f, two if the leading
    /// coefficient is a square, none otherwise.
    pub fn rational_points_at_infinity(&self) -> Result<usize> {
        match self {
            CurveModel::Hyperelliptic { f, field } => {
                let FieldDesc::Fp(_) = field else {
                    return Err(Error::UnsupportedEnumeration);
                };
                let deg = f.degree().expect("validated nonzero");
                if deg % 2 == 1 {
                    Ok(1)
                } else {
                    let lc = f.leading_coeff().expect("nonzero");
                    Ok(if lc.sqrt().is_some() { 2 } else { 0 })
                }
            }
            CurveModel::SmoothPlane { .. } => {
                Ok(self.enumerate_rational_points()?.at_infinity.len())
            }
        }
    }

    /// Replace the plane model by an isomorphic one in which every point of
    /// the given finite list lands in the affine chart Z != 0. Returns the
    /// new model and the transported points.
    ///
    /// The substitution is a deterministic search for a line a*X + b*Y + c*Z
    /// missing all the points, completed to a coordinate change that makes
    /// that line the new line at infinity.
    pub fn move_points_into_chart(
        &self,
        points: &[CurvePoint],
    ) -> Result<(CurveModel, Vec<CurvePoint>)> {
        let CurveModel::SmoothPlane { f, field, .. } = self else {
            return Err(Error::NotApplicable("chart moves only apply to plane models".into()));
        };
        for p in points {
            if !self.contains(p)? {
                return Err(Error::Validation("point is not on the curve".into()));
            }
        }
        let coords = |p: &CurvePoint| -> (Scalar, Scalar, Scalar) {
            let CurvePoint::Plane { x, y, z } = p else { unreachable!() };
            (x.clone(), y.clone(), z.clone())
        };
        // candidate lines at infinity (a, b, c), scanned deterministically
        let candidates: Vec<(i64, i64, i64)> = {
            let mut v = Vec::new();
            v.push((0, 0, 1));
            v.push((0, 1, 0));
            v.push((1, 0, 0));
            for a in -4..=4i64 {
                for b in -4..=4i64 {
                    v.push((a, b, 1));
                }
            }
            v
        };
        'cand: for (a, b, c) in candidates {
            let (sa, sb, sc) = (field.from_i64(a), field.from_i64(b), field.from_i64(c));
            for p in points {
                let (x, y, z) = coords(p);
                let val = sa.mul(&x)?.add(&sb.mul(&y)?)?.add(&sc.mul(&z)?)?;
                if val.is_zero() {
                    continue 'cand;
                }
            }
            let rows = complete_to_basis(&[sa.clone(), sb.clone(), sc.clone()], field)?;
            // new coordinates are (X', Y', Z') = M (X, Y, Z); the model
            // transforms by the inverse substitution
            let minv = invert_3x3(&rows, field)?;
            let g = f.linear_substitute(&minv)?;
            let new_model = CurveModel::smooth_plane(g, *field)?;
            let mut moved = Vec::with_capacity(points.len());
            for p in points {
                let (x, y, z) = coords(p);
                let mut img = [field.zero(), field.zero(), field.zero()];
                for (r, row) in rows.iter().enumerate() {
                    img[r] = row[0].mul(&x)?.add(&row[1].mul(&y)?)?.add(&row[2].mul(&z)?)?;
                }
                let np = CurvePoint::plane(img[0].clone(), img[1].clone(), img[2].clone())?;
                debug_assert!(np.is_finite());
                moved.push(np);
            }
            return Ok((new_model, moved));
        }
        Err(Error::Validation("no avoiding line found in the search window".into()))
    }
}

/// Complete the row (a, b, c) to an invertible 3x3 matrix whose last row is
/// (a, b, c); the first two rows are standard basis vectors chosen so the
/// determinant is nonzero.
fn complete_to_basis(last: &[Scalar; 3], field: &FieldDesc) -> Result<[[Scalar; 3]; 3]> {
    let e = |i: usize| -> [Scalar; 3] {
        let mut r = [field.zero(), field.zero(), field.zero()];
        r[i] = field.one();
        r
    };
    let nz = if !last[2].is_zero() {
        2
    } else if !last[1].is_zero() {
        1
    } else {
        0
    };
    let (i, j) = match nz {
        2 => (0, 1),
        1 => (0, 2),
        _ => (1, 2),
    };
    Ok([e(i), e(j), last.clone()])
}

fn invert_3x3(m: &[[Scalar; 3]; 3], field: &FieldDesc) -> Result<[[Scalar; 3]; 3]> {
    use crate::exact::matrix::ExactMatrix;
    let flat: Vec<Scalar> = m.iter().flat_map(|r| r.iter().cloned()).collect();
    let mat = ExactMatrix::new(3, 3, flat, *field)?;
    let det = mat.det()?;
    if det.is_zero() {
        return Err(Error::Validation("singular coordinate change".into()));
    }
    let det_inv = det.inv()?;
    let minor = |r: usize, c: usize| -> Result<Scalar> {
        let mut vals = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != r && j != c {
                    vals.push(mat.at(i, j).clone());
                }
            }
        }
        let a = vals[0].mul(&vals[3])?;
        let b = vals[1].mul(&vals[2])?;
        a.sub(&b)
    };
    let mut out = [
        [field.zero(), field.zero(), field.zero()],
        [field.zero(), field.zero(), field.zero()],
        [field.zero(), field.zero(), field.zero()],
    ];
    for r in 0..3 {
        for c in 0..3 {
            let mut v = minor(c, r)?.mul(&det_inv)?;
            if (r + c) % 2 == 1 {
                v = v.neg();
            }
            out[r][c] = v;
        }
    }
    Ok(out)
}

/// Decide smoothness of V(F) in P^2 for homogeneous F of degree m >= 4:
/// true iff F, F_X, F_Y, F_Z have no common projective zero over the
/// algebraic closure, checked chart by chart.
pub fn check_smooth_plane(f: &TriPoly) -> Result<bool> {
    let Some(m) = f.total_degree() else {
        return Err(Error::Validation("F must be nonzero".into()));
    };
    if !f.is_homogeneous_of_degree(m) {
        return Err(Error::Validation("F must be homogeneous".into()));
    }
    let parts = [f.derivative(0), f.derivative(1), f.derivative(2)];
    for chart in 0..3 {
        let mut sys: Vec<BiPoly> = Vec::with_capacity(4);
        sys.push(f.dehomogenize(chart));
        for p in &parts {
            sys.push(p.dehomogenize(chart));
        }
        if system_has_common_zero(&sys)? {
            return Ok(false);
        }
    }
    Ok(true)
}
