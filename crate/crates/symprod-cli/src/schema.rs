//! JSON schemas for curves, divisors, reports, and verdicts, plus the
//! conversions to and from core types.
//!
//! Scalars always travel as decimal strings (reduced `n` or `n/d`), never as
//! binary floats, so values survive the wire exactly. Serialization is
//! canonical: monomials sorted, rationals reduced, struct fields in a fixed
//! order.

use serde::{Deserialize, Serialize};
use symprod_core::curve::tripoly::TriPoly;
use symprod_core::curve::{CurveModel, CurvePoint};
use symprod_core::exact::scalar::{FieldDesc, Scalar};
use symprod_core::linsys::{EffectiveDivisor, LinearSystemReport};
use symprod_core::verdict::{DivisorRecord, GonalityWitness, SODVerdict, SurveyReport};
use symprod_core::{Error, Poly};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind")]
pub enum FieldSchema {
    Q,
    Fp { p: u64 },
}

impl FieldSchema {
    pub fn to_core(&self) -> Result<FieldDesc, Error> {
        match self {
            FieldSchema::Q => Ok(FieldDesc::Q),
            FieldSchema::Fp { p } => FieldDesc::prime_field(*p),
        }
    }

    pub fn from_core(f: &FieldDesc) -> FieldSchema {
        match f {
            FieldDesc::Q => FieldSchema::Q,
            FieldDesc::Fp(p) => FieldSchema::Fp { p: *p },
        }
    }
}

/// Curve specification.
///
/// Hyperelliptic: `{"model":"hyperelliptic","field":{"kind":"Fp","p":29},
/// "f":["-1","0","0","0","0","0","0","1"]}` (coefficients low to high).
/// Plane: `{"model":"plane","field":{...},"degree":4,
/// "F":[[4,0,0,"1"],[0,4,0,"1"],[0,0,4,"1"]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum CurveSchema {
    Hyperelliptic {
        field: FieldSchema,
        f: Vec<String>,
    },
    Plane {
        field: FieldSchema,
        degree: u32,
        #[serde(rename = "F")]
        terms: Vec<(u32, u32, u32, String)>,
    },
}

impl CurveSchema {
    pub fn to_core(&self) -> Result<CurveModel, Error> {
        match self {
            CurveSchema::Hyperelliptic { field, f } => {
                let fd = field.to_core()?;
                let coeffs = f
                    .iter()
                    .map(|s| Scalar::parse(s, &fd))
                    .collect::<Result<Vec<_>, _>>()?;
                CurveModel::hyperelliptic(Poly::new(coeffs, fd)?, fd)
            }
            CurveSchema::Plane { field, degree, terms } => {
                let fd = field.to_core()?;
                let parsed = terms
                    .iter()
                    .map(|(i, j, k, c)| Ok(((*i, *j, *k), Scalar::parse(c, &fd)?)))
                    .collect::<Result<Vec<_>, Error>>()?;
                let f = TriPoly::from_terms(&parsed, fd)?;
                if f.total_degree() != Some(*degree) {
                    return Err(Error::Validation(format!(
                        "declared degree {degree} does not match the terms"
                    )));
                }
                CurveModel::smooth_plane(f, fd)
            }
        }
    }

    pub fn from_core(c: &CurveModel) -> CurveSchema {
        match c {
            CurveModel::Hyperelliptic { f, field } => CurveSchema::Hyperelliptic {
                field: FieldSchema::from_core(field),
                f: f.coeffs().iter().map(Scalar::to_decimal_string).collect(),
            },
            CurveModel::SmoothPlane { f, degree, field } => CurveSchema::Plane {
                field: FieldSchema::from_core(field),
                degree: *degree,
                terms: f
                    .terms()
                    .map(|(&(i, j, k), c)| (i, j, k, c.to_decimal_string()))
                    .collect(),
            },
        }
    }
}

/// One divisor point: chart coordinates and a positive multiplicity. Plane
/// points are implicitly in the chart Z = 1.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivisorPointSchema {
    pub x: String,
    pub y: String,
    pub mult: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivisorSchema {
    pub points: Vec<DivisorPointSchema>,
}

impl DivisorSchema {
    pub fn to_core(&self, curve: &CurveModel) -> Result<EffectiveDivisor, Error> {
        let fd = curve.field();
        let mut spec = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let x = Scalar::parse(&p.x, &fd)?;
            let y = Scalar::parse(&p.y, &fd)?;
            let point = match curve {
                CurveModel::Hyperelliptic { .. } => CurvePoint::affine(x, y),
                CurveModel::SmoothPlane { .. } => CurvePoint::plane(x, y, fd.one())?,
            };
            spec.push((point, p.mult));
        }
        EffectiveDivisor::new(curve, &spec)
    }

    pub fn from_core(z: &EffectiveDivisor) -> Result<DivisorSchema, Error> {
        let points = z
            .support()
            .iter()
            .map(|(p, mult)| {
                let (x, y) = p.chart_xy()?;
                Ok(DivisorPointSchema {
                    x: x.to_decimal_string(),
                    y: y.to_decimal_string(),
                    mult: *mult,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(DivisorSchema { points })
    }
}

/// Mirror of the linear-system report, field for field.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportSchema {
    pub rank_gamma: usize,
    #[serde(rename = "h0_K_minus_z")]
    pub h0_k_minus_z: usize,
    pub h0_z: usize,
    pub albanese_fiber_dim: usize,
    pub is_base_point: bool,
}

impl ReportSchema {
    pub fn from_core(r: &LinearSystemReport) -> ReportSchema {
        ReportSchema {
            rank_gamma: r.rank_gamma,
            h0_k_minus_z: r.h0_k_minus_z,
            h0_z: r.h0_z,
            albanese_fiber_dim: r.albanese_fiber_dim,
            is_base_point: r.is_base_point,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GenusOutput {
    pub model: &'static str,
    pub field: FieldSchema,
    pub genus: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesOutput {
    pub g: u32,
    pub d: u32,
    #[serde(rename = "K")]
    pub k: [String; 2],
    #[serde(rename = "K2", skip_serializing_if = "Option::is_none")]
    pub k2: Option<String>,
    #[serde(rename = "h0K")]
    pub h0k: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma2: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectOutput {
    pub g: u32,
    pub space: String,
    pub u: Vec<String>,
    pub v: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Gamma2Output {
    pub g: u32,
    pub gamma2: i64,
    pub matrix: Vec<Vec<i64>>,
    pub negative_definite: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictOutput {
    pub g: u32,
    pub d: u32,
    pub outcome: &'static str,
    pub rule: String,
    pub components: Vec<String>,
    pub notes: Vec<String>,
}

impl VerdictOutput {
    pub fn from_core(v: &SODVerdict) -> VerdictOutput {
        VerdictOutput {
            g: v.g,
            d: v.d,
            outcome: v.outcome.as_str(),
            rule: v.rule.clone(),
            components: v.components.clone(),
            notes: v.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GonalityOutput {
    pub lower: u32,
    pub upper: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<u32>,
    pub method: &'static str,
    pub generic_floor: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOutput>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessOutput {
    pub moving_divisor: DivisorSchema,
    pub moving_h0: usize,
    pub cleared_degrees: Vec<u32>,
}

impl WitnessOutput {
    pub fn from_core(w: &GonalityWitness) -> Result<WitnessOutput, Error> {
        Ok(WitnessOutput {
            moving_divisor: DivisorSchema::from_core(&w.moving_divisor)?,
            moving_h0: w.moving_h0,
            cleared_degrees: w.cleared_degrees.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyRecordOutput {
    pub points: Vec<DivisorPointSchema>,
    #[serde(flatten)]
    pub report: ReportSchema,
}

impl SurveyRecordOutput {
    pub fn from_core(r: &DivisorRecord) -> Result<SurveyRecordOutput, Error> {
        Ok(SurveyRecordOutput {
            points: DivisorSchema::from_core(&r.divisor)?.points,
            report: ReportSchema::from_core(&r.report),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyOutput {
    pub d: u32,
    pub mode: String,
    pub total_space: u64,
    pub examined: usize,
    pub base_count: usize,
    pub nonbase_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_locus_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<SurveyRecordOutput>>,
}

impl SurveyOutput {
    pub fn from_core(s: &SurveyReport, mode: String, summary_only: bool) -> Result<SurveyOutput, Error> {
        let records = if summary_only {
            None
        } else {
            Some(
                s.records
                    .iter()
                    .map(SurveyRecordOutput::from_core)
                    .collect::<Result<Vec<_>, Error>>()?,
            )
        };
        Ok(SurveyOutput {
            d: s.d,
            mode,
            total_space: s.total_space,
            examined: s.examined,
            base_count: s.base_count,
            nonbase_count: s.nonbase_count,
            gamma_locus_match: s.gamma_locus_match,
            records,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

/// Machine-readable error envelope printed to stderr on exit code 2.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: ErrorBody,
}

impl ErrorOutput {
    pub fn new(code: &str, message: String) -> ErrorOutput {
        ErrorOutput { error: ErrorBody { code: code.into(), message } }
    }

    pub fn from_core(e: &Error) -> ErrorOutput {
        ErrorOutput::new(e.code(), e.to_string())
    }
}
