//! Human-readable renderings behind --pretty. Deterministic, like the JSON.

use crate::schema::{
    ClassesOutput, Gamma2Output, GenusOutput, GonalityOutput, IntersectOutput, ReportSchema,
    SurveyOutput, VerdictOutput,
};

pub fn genus(out: &GenusOutput) -> String {
    format!("{} model over {:?}: genus {}\n", out.model, out.field, out.genus)
}

pub fn report(out: &ReportSchema, base_point_view: bool) -> String {
    let mut s = String::new();
    if base_point_view {
        s.push_str(&format!(
            "base point of |K|: {}\n",
            if out.is_base_point { "yes" } else { "no" }
        ));
    }
    s.push_str(&format!("rank(gamma)        = {}\n", out.rank_gamma));
    s.push_str(&format!("h0(K - z)          = {}\n", out.h0_k_minus_z));
    s.push_str(&format!("h0(z)              = {}\n", out.h0_z));
    s.push_str(&format!("albanese fiber dim = {}\n", out.albanese_fiber_dim));
    if !base_point_view {
        s.push_str(&format!("base point         = {}\n", out.is_base_point));
    }
    s
}

pub fn survey(out: &SurveyOutput) -> String {
    let mut s = format!(
        "degree-{} survey ({}): {} of {} divisors examined\n",
        out.d, out.mode, out.examined, out.total_space
    );
    s.push_str(&format!(
        "base points: {}   non-base: {}\n",
        out.base_count, out.nonbase_count
    ));
    if let Some(m) = out.gamma_locus_match {
        s.push_str(&format!(
            "base set equals conjugate-pair fibers: {}\n",
            if m { "yes" } else { "NO" }
        ));
    }
    if let Some(records) = &out.records {
        for r in records {
            let pts: Vec<String> = r
                .points
                .iter()
                .map(|p| format!("({},{})x{}", p.x, p.y, p.mult))
                .collect();
            s.push_str(&format!(
                "  {}  h0 = {}  {}\n",
                pts.join(" + "),
                r.report.h0_z,
                if r.report.is_base_point { "BASE" } else { "" }
            ));
        }
    }
    s
}

pub fn classes(out: &ClassesOutput) -> String {
    let mut s = format!(
        "g = {}, d = {}: K = ({})x + ({})theta, h0(K) = {}\n",
        out.g, out.d, out.k[0], out.k[1], out.h0k
    );
    if let Some(k2) = &out.k2 {
        s.push_str(&format!("K^2 = {k2}\n"));
    }
    if let Some(g2) = out.gamma2 {
        s.push_str(&format!("Gamma^2 = {g2}\n"));
    }
    s
}

pub fn intersect(out: &IntersectOutput) -> String {
    format!(
        "({}) . ({}) = {}  [g = {}, {}]\n",
        out.u.join(", "),
        out.v.join(", "),
        out.value,
        out.g,
        out.space
    )
}

pub fn gamma2(out: &Gamma2Output) -> String {
    format!(
        "Gamma^2 = {} for g = {}; intersection matrix [{}] negative definite: {}\n",
        out.gamma2,
        out.g,
        out.matrix[0][0],
        if out.negative_definite { "yes" } else { "no" }
    )
}

pub fn gonality(out: &GonalityOutput) -> String {
    let mut s = match out.exact {
        Some(e) => format!("gonality = {e} ({})\n", out.method),
        None => format!("gonality in [{}, {}] ({})\n", out.lower, out.upper, out.method),
    };
    s.push_str(&format!("generic-curve value for this genus: {}\n", out.generic_floor));
    if let Some(w) = &out.witness {
        s.push_str(&format!(
            "witness: degree-{} divisor with h0 = {}; degrees {:?} cleared exhaustively\n",
            w.moving_divisor.points.iter().map(|p| p.mult).sum::<usize>(),
            w.moving_h0,
            w.cleared_degrees
        ));
    }
    s
}

pub fn verdict(out: &VerdictOutput) -> String {
    let mut s = format!("(g, d) = ({}, {}): {}  [{}]\n", out.g, out.d, out.outcome, out.rule);
    if !out.components.is_empty() {
        s.push_str(&format!("components: {}\n", out.components.join(", ")));
    }
    for n in &out.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    s
}
