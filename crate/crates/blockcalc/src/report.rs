//! Rendering a [`ClassificationReport`] as JSON or as aligned text.

use std::fmt::Write as _;
use std::str::FromStr;

use blockcalc_core::classify::PatternVerdict;
use blockcalc_core::pipeline::ClassificationReport;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Human,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Self::Json),
            "human" | "text" => Ok(Self::Human),
            other => Err(format!("unknown report format {:?} (expected json or human)", other)),
        }
    }
}

#[derive(Serialize)]
struct AlgebraOut<'a> {
    a: &'a str,
    b: &'a str,
}

#[derive(Serialize)]
struct BetaOut<'a> {
    group_order: usize,
    extended: bool,
    adjusted: bool,
    values: &'a [String],
}

#[derive(Serialize)]
struct FieldOut<'a> {
    conductor: u64,
    fixing: &'a [u64],
    generators: &'a [String],
}

#[derive(Serialize)]
struct CentralizerOut {
    ambient_dim: usize,
    field_dim: usize,
    centralizer_dim: usize,
    holds: bool,
}

#[derive(Serialize)]
struct AlbertOut<'a> {
    albert_type: String,
    k_has_real_embedding: bool,
    accepted: bool,
    unconstrained: bool,
    rule: &'a str,
    reason: &'a str,
}

#[derive(Serialize)]
struct PatternOut {
    dim: u64,
    verdict: &'static str,
}

#[derive(Serialize)]
struct StageOut<'a> {
    stage: &'a str,
    claim: &'a str,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    group_order: usize,
    algebra: AlgebraOut<'a>,
    ramified: &'a [String],
    t: u64,
    m_cyc: u64,
    m: u64,
    d: &'a [String],
    beta: BetaOut<'a>,
    r: u64,
    e: u64,
    chi_order: u64,
    epsilon_order: u64,
    #[serde(rename = "E_beta_degree")]
    e_beta_degree: u64,
    #[serde(rename = "E_beta")]
    e_beta: FieldOut<'a>,
    splits: bool,
    descent: bool,
    double_centralizer: CentralizerOut,
    #[serde(rename = "n_E_beta")]
    n_e: u64,
    f: u64,
    #[serde(rename = "dim_B")]
    dim_b: u64,
    #[serde(rename = "dim_A")]
    dim_a: u64,
    n: u64,
    field_degree: u64,
    building_block: bool,
    gl2_type: bool,
    albert: AlbertOut<'a>,
    factor_patterns: Vec<PatternOut>,
    stages: Vec<StageOut<'a>>,
}

pub fn verdict_name(v: PatternVerdict) -> &'static str {
    match v {
        PatternVerdict::Admissible => "admissible",
        PatternVerdict::ExcludedCm => "excluded: CM",
        PatternVerdict::Inadmissible => "inadmissible",
    }
}

fn to_out(r: &ClassificationReport) -> ReportOut<'_> {
    ReportOut {
        group_order: r.group_order,
        algebra: AlgebraOut { a: &r.algebra.0, b: &r.algebra.1 },
        ramified: &r.ramified_places,
        t: r.t,
        m_cyc: r.m_cyc,
        m: r.m,
        d: &r.d,
        beta: BetaOut {
            group_order: r.beta_group_order,
            extended: r.beta_extended,
            adjusted: r.adjusted,
            values: &r.beta,
        },
        r: r.r,
        e: r.e,
        chi_order: r.chi_order,
        epsilon_order: r.epsilon_order,
        e_beta_degree: r.e_beta.degree,
        e_beta: FieldOut {
            conductor: r.e_beta.conductor,
            fixing: &r.e_beta.fixing,
            generators: &r.e_beta.generators,
        },
        splits: r.splits,
        descent: r.descent,
        double_centralizer: CentralizerOut {
            ambient_dim: r.double_centralizer.ambient_dim,
            field_dim: r.double_centralizer.field_dim,
            centralizer_dim: r.double_centralizer.centralizer_dim,
            holds: r.double_centralizer.holds,
        },
        n_e: r.n_e,
        f: r.f,
        dim_b: r.dim_b,
        dim_a: r.dim_a,
        n: r.n,
        field_degree: r.field_degree,
        building_block: r.building_block,
        gl2_type: r.gl2_type,
        albert: AlbertOut {
            albert_type: r.albert.albert_type.to_string(),
            k_has_real_embedding: r.albert.k_has_real_embedding,
            accepted: r.albert.accepted,
            unconstrained: r.albert.unconstrained,
            rule: &r.albert.rule,
            reason: &r.albert.reason,
        },
        factor_patterns: r
            .factor_patterns
            .iter()
            .map(|&(dim, v)| PatternOut { dim, verdict: verdict_name(v) })
            .collect(),
        stages: r.stages.iter().map(|s| StageOut { stage: s.stage, claim: &s.claim }).collect(),
    }
}

fn human(r: &ClassificationReport) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let rows: Vec<(&str, String)> = vec![
        ("algebra", format!("({}, {})", r.algebra.0, r.algebra.1)),
        ("ramified at", format!("{{{}}}", r.ramified_places.join(", "))),
        ("Schur index t", r.t.to_string()),
        ("m_cyc", r.m_cyc.to_string()),
        ("class order m", r.m.to_string()),
        ("d", r.d.join(", ")),
        ("beta group order", r.beta_group_order.to_string()),
        ("beta", r.beta.join(", ")),
        ("epsilon order", r.epsilon_order.to_string()),
        ("[E_beta : Q]", r.e_beta.degree.to_string()),
        ("E_beta generators", r.e_beta.generators.join(", ")),
        ("E_beta splits B", yes(r.splits).into()),
        ("descent check", yes(r.descent).into()),
        (
            "double centralizer",
            format!(
                "{} * {} = {} ({})",
                r.double_centralizer.centralizer_dim,
                r.double_centralizer.field_dim,
                r.double_centralizer.ambient_dim,
                if r.double_centralizer.holds { "holds" } else { "fails" }
            ),
        ),
        ("dim A", r.dim_a.to_string()),
        ("n (A ~ B^n)", r.n.to_string()),
        ("field degree", r.field_degree.to_string()),
        ("building block", yes(r.building_block).into()),
        ("GL2-type", yes(r.gl2_type).into()),
        (
            "Albert filter",
            format!(
                "type {}: {} [{}] {}",
                r.albert.albert_type,
                if r.albert.accepted { "accepted" } else { "rejected" },
                r.albert.rule,
                r.albert.reason
            ),
        ),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in &rows {
        let _ = writeln!(out, "{:<width$}  {}", k, v, width = width);
    }
    let _ = writeln!(out, "\nstages:");
    for (i, s) in r.stages.iter().enumerate() {
        let _ = writeln!(out, "  {}. {:<18} {}", i + 1, s.stage, s.claim);
    }
    out
}

/// JSON output is pretty-printed with a fixed key order, so identical reports give identical bytes.
pub fn emit_report(r: &ClassificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&to_out(r)).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Human => human(r),
    }
}
