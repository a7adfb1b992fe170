//! Subcommand implementations: parse inputs, call the core, emit JSON.

use std::fs;
use std::path::Path;

use num_rational::BigRational;
use serde::Serialize;

use symprod_core::classes::{
    c2_intersect, c2product_intersect, canonical_class, canonical_self_intersection_c2,
    gamma_self_intersection, macdonald_h0_canonical, NSClassC2Product, NSClassCd,
};
use symprod_core::curve::CurveModel;
use symprod_core::exact::scalar::{FieldDesc, Scalar};
use symprod_core::linsys::linear_system_report;
use symprod_core::verdict::{
    base_locus_survey, generic_gonality_floor, gonality_info, negative_definite_base_component,
    verdict, witness_plane_gonality, GonalityInfo, GonalityMethod, SurveyMode, SurveyReport,
};
use symprod_core::Error;

use crate::args::{
    ClassesArgs, Cli, Command, CurveArg, CurveDivisorArgs, GdArgs, GenusOnlyArgs, GonalityArgs,
    IntersectArgs, IntersectSpace, SurveyArgs, SurveyModeArg, VerdictArgs,
};
use crate::pretty;
use crate::schema::{
    ClassesOutput, CurveSchema, DivisorSchema, ErrorOutput, Gamma2Output, GenusOutput,
    GonalityOutput, IntersectOutput, ReportSchema, SurveyOutput, VerdictOutput, WitnessOutput,
};

/// Either a JSON document for stdout or a structured failure.
pub enum CmdError {
    Core(Error),
    Custom { code: &'static str, message: String },
}

impl From<Error> for CmdError {
    fn from(e: Error) -> CmdError {
        CmdError::Core(e)
    }
}

impl CmdError {
    pub fn to_output(&self) -> ErrorOutput {
        match self {
            CmdError::Core(e) => ErrorOutput::from_core(e),
            CmdError::Custom { code, message } => ErrorOutput::new(code, message.clone()),
        }
    }
}

type CmdResult = Result<String, CmdError>;

fn emit<T: Serialize>(value: &T) -> CmdResult {
    serde_json::to_string(value)
        .map_err(|e| CmdError::Custom { code: "serialize", message: e.to_string() })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CmdError> {
    let text = fs::read_to_string(path).map_err(|e| CmdError::Custom {
        code: "io-error",
        message: format!("{}: {e}", path.display()),
    })?;
    serde_json::from_str(&text).map_err(|e| CmdError::Custom {
        code: "malformed-json",
        message: format!("{}: {e}", path.display()),
    })
}

fn load_curve(path: &Path) -> Result<CurveModel, CmdError> {
    let schema: CurveSchema = read_json(path)?;
    Ok(schema.to_core()?)
}

/// Run the parsed CLI and return (stdout, exit code 0) or an error document.
pub fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Genus(args) => cmd_genus(args, cli.pretty),
        Command::H0(args) => cmd_report(args, cli.pretty, false),
        Command::BasePoint(args) => cmd_report(args, cli.pretty, true),
        Command::Survey(args) => cmd_survey(args, cli.pretty),
        Command::Classes(args) => cmd_classes(args, cli.pretty),
        Command::Intersect(args) => cmd_intersect(args, cli.pretty),
        Command::Gamma2(args) => cmd_gamma2(args, cli.pretty),
        Command::Gonality(args) => cmd_gonality(args, cli.pretty),
        Command::Verdict(args) => cmd_verdict(args, cli.pretty),
        Command::Macdonald(args) => cmd_macdonald(args, cli.pretty),
    }
}

fn cmd_genus(args: &CurveArg, pretty: bool) -> CmdResult {
    let curve = load_curve(&args.curve)?;
    let out = GenusOutput {
        model: if curve.is_hyperelliptic() { "hyperelliptic" } else { "plane" },
        field: crate::schema::FieldSchema::from_core(&curve.field()),
        genus: curve.genus(),
    };
    if pretty {
        return Ok(pretty::genus(&out));
    }
    emit(&out)
}

fn cmd_report(args: &CurveDivisorArgs, pretty: bool, base_point_view: bool) -> CmdResult {
    let curve = load_curve(&args.curve)?;
    let schema: DivisorSchema = read_json(&args.divisor)?;
    let z = schema.to_core(&curve)?;
    let report = linear_system_report(&curve, &z)?;
    let out = ReportSchema::from_core(&report);
    if pretty {
        return Ok(pretty::report(&out, base_point_view));
    }
    emit(&out)
}

fn cmd_survey(args: &SurveyArgs, pretty: bool) -> CmdResult {
    let curve = load_curve(&args.curve)?;
    let (mode, mode_desc) = match args.mode {
        SurveyModeArg::Exhaustive => (SurveyMode::Exhaustive, String::from("exhaustive")),
        SurveyModeArg::Sampled => {
            let (Some(count), Some(seed)) = (args.count, args.seed) else {
                return Err(CmdError::Custom {
                    code: "bad-usage",
                    message: "sampled mode requires --count and --seed".into(),
                });
            };
            (SurveyMode::Sampled { count, seed }, format!("sampled(count={count},seed={seed})"))
        }
    };
    let survey = run_survey(&curve, args.d, mode, args.max_divisors, args.jobs)?;
    let out = SurveyOutput::from_core(&survey, mode_desc, args.summary)?;
    if pretty {
        return Ok(pretty::survey(&out));
    }
    emit(&out)
}

/// Survey with optional worker threads. Reports are pure functions of the
/// divisor, so chunks merge back in order and the output stays deterministic
/// for any job count.
fn run_survey(
    curve: &CurveModel,
    d: u32,
    mode: SurveyMode,
    budget: u64,
    jobs: usize,
) -> Result<SurveyReport, CmdError> {
    if jobs <= 1 {
        return Ok(base_locus_survey(curve, d, mode, budget)?);
    }
    // Enumerate single-threaded (cheap), then recompute reports in parallel
    // and splice them back in enumeration order.
    let mut survey = base_locus_survey(curve, d, mode, budget)?;
    let divisors: Vec<_> = survey.records.iter().map(|r| r.divisor.clone()).collect();
    let chunk = divisors.len().div_ceil(jobs.max(1));
    if chunk == 0 {
        return Ok(survey);
    }
    let reports: Vec<Vec<_>> = std::thread::scope(|scope| {
        let handles: Vec<_> = divisors
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|z| linear_system_report(curve, z))
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("survey worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let flat: Vec<_> = reports.into_iter().flatten().collect();
    for (rec, rep) in survey.records.iter_mut().zip(flat) {
        debug_assert_eq!(rec.report, rep);
        rec.report = rep;
    }
    Ok(survey)
}

fn cmd_classes(args: &ClassesArgs, pretty: bool) -> CmdResult {
    let k = canonical_class(args.g, args.d)?;
    let k2 = if args.d == 2 {
        Some(canonical_self_intersection_c2(args.g)?.to_string())
    } else {
        None
    };
    let gamma2 = if args.hyperelliptic {
        Some(gamma_self_intersection(args.g)?)
    } else {
        None
    };
    let out = ClassesOutput {
        g: args.g,
        d: args.d,
        k: [k.a.to_string(), k.b.to_string()],
        k2,
        h0k: macdonald_h0_canonical(args.g, args.d).to_string(),
        gamma2,
    };
    if pretty {
        return Ok(pretty::classes(&out));
    }
    emit(&out)
}

fn parse_rationals(s: &str, expected: usize) -> Result<Vec<BigRational>, CmdError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != expected {
        return Err(CmdError::Custom {
            code: "bad-usage",
            message: format!("expected {expected} comma-separated coefficients, got {}", parts.len()),
        });
    }
    parts
        .iter()
        .map(|p| {
            let sc = Scalar::parse(p, &FieldDesc::Q)?;
            Ok(sc.as_rational().expect("parsed over Q").clone())
        })
        .collect()
}

fn cmd_intersect(args: &IntersectArgs, pretty: bool) -> CmdResult {
    let (value, u_strs, v_strs, space) = match args.space {
        IntersectSpace::C2 => {
            let u = parse_rationals(&args.u, 2)?;
            let v = parse_rationals(&args.v, 2)?;
            let cu = NSClassCd::new(args.g, 2, u[0].clone(), u[1].clone())?;
            let cv = NSClassCd::new(args.g, 2, v[0].clone(), v[1].clone())?;
            let value = c2_intersect(&cu, &cv)?;
            (
                value,
                vec![u[0].to_string(), u[1].to_string()],
                vec![v[0].to_string(), v[1].to_string()],
                "c2",
            )
        }
        IntersectSpace::Product => {
            let u = parse_rationals(&args.u, 3)?;
            let v = parse_rationals(&args.v, 3)?;
            let cu = NSClassC2Product::new(args.g, u[0].clone(), u[1].clone(), u[2].clone())?;
            let cv = NSClassC2Product::new(args.g, v[0].clone(), v[1].clone(), v[2].clone())?;
            let value = c2product_intersect(&cu, &cv)?;
            (
                value,
                u.iter().map(|r| r.to_string()).collect(),
                v.iter().map(|r| r.to_string()).collect(),
                "product",
            )
        }
    };
    let out = IntersectOutput {
        g: args.g,
        space: space.into(),
        u: u_strs,
        v: v_strs,
        value: value.to_string(),
    };
    if pretty {
        return Ok(pretty::intersect(&out));
    }
    emit(&out)
}

fn cmd_gamma2(args: &GenusOnlyArgs, pretty: bool) -> CmdResult {
    let gamma2 = gamma_self_intersection(args.g)?;
    let nd = negative_definite_base_component(args.g)?;
    let out = Gamma2Output {
        g: args.g,
        gamma2,
        matrix: vec![vec![nd.matrix_entry]],
        negative_definite: nd.negative_definite,
    };
    if pretty {
        return Ok(pretty::gamma2(&out));
    }
    emit(&out)
}

fn cmd_gonality(args: &GonalityArgs, pretty: bool) -> CmdResult {
    let curve = load_curve(&args.curve)?;
    let info = gonality_info(&curve);
    let witness = if args.witness {
        let w = witness_plane_gonality(&curve, args.max_divisors)?;
        Some(WitnessOutput::from_core(&w)?)
    } else {
        None
    };
    let out = GonalityOutput {
        lower: info.lower,
        upper: info.upper,
        exact: info.exact,
        method: info.method.as_str(),
        generic_floor: generic_gonality_floor(curve.genus()),
        witness,
    };
    if pretty {
        return Ok(pretty::gonality(&out));
    }
    emit(&out)
}

fn cmd_verdict(args: &VerdictArgs, pretty: bool) -> CmdResult {
    let (g, hyperelliptic, gon) = match &args.curve {
        Some(path) => {
            let curve = load_curve(path)?;
            let gon = if curve.is_hyperelliptic() {
                gonality_info(&curve)
            } else if args.witness {
                witness_plane_gonality(&curve, args.max_divisors)?.info
            } else {
                // unwitnessed plane formula degrades to its safe interval
                gonality_info(&curve).degraded_interval()
            };
            (curve.genus(), curve.is_hyperelliptic(), gon)
        }
        None => {
            let g = args.g.expect("clap enforces --g without --curve");
            let gon = match (args.gon_exact, args.gon_lower) {
                (Some(e), _) => GonalityInfo::exact(e, GonalityMethod::UserAsserted)?,
                (None, Some(lo)) => {
                    GonalityInfo::bounds(lo, lo.max(g + 1), GonalityMethod::UserAsserted)?
                }
                (None, None) if args.hyperelliptic => {
                    GonalityInfo::exact(2, GonalityMethod::HyperellipticModel)?
                }
                (None, None) => GonalityInfo::generic(g),
            };
            (g, args.hyperelliptic, gon)
        }
    };
    let v = verdict(g, args.d, &gon, hyperelliptic)?;
    let out = VerdictOutput::from_core(&v);
    if pretty {
        return Ok(pretty::verdict(&out));
    }
    emit(&out)
}

fn cmd_macdonald(args: &GdArgs, pretty: bool) -> CmdResult {
    if args.g < 2 {
        return Err(CmdError::Core(Error::OutOfScope(format!("genus {} < 2", args.g))));
    }
    #[derive(Serialize)]
    struct MacdonaldOutput {
        g: u32,
        d: u32,
        #[serde(rename = "h0K")]
        h0k: String,
    }
    let out = MacdonaldOutput {
        g: args.g,
        d: args.d,
        h0k: macdonald_h0_canonical(args.g, args.d).to_string(),
    };
    if pretty {
        return Ok(format!("h0(K) on C_{} for g = {}: {}\n", out.d, out.g, out.h0k));
    }
    emit(&out)
}
