//! The construction of a GL2-type variety from a building block, run as a sequence of
//! checked stages. Every stage re-verifies what the previous ones produced.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::classify::{
    albert_filter, building_block_check, dimension_bookkeeping, factor_pattern_filter, is_gl2_type, AlbertType,
    EndomorphismDatum, PatternVerdict,
};
use crate::cohom::{adjust_splitting_map, class_order, split_cocycle, splitting_field_of, Cocycle2};
use crate::csa::{format_places, min_cyclotomic_splitting, ramification_data, splits, AbelianFieldSpec, QuaternionAlgebraQ};
use crate::error::{Error, Result};
use crate::matalg::{centralizer, descent_cocycle_check, FieldEmbedding, SubalgebraSpec};

pub const DEFAULT_SEARCH_CAP: u64 = 1000;

/// Optional declarations accompanying a datum; anything left out is derived.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DatumFlags {
    /// Degree of the center; 1 when omitted.
    pub center_degree: Option<u64>,
    pub schur_index: Option<u64>,
    pub albert_type: Option<AlbertType>,
    pub dim_b: Option<u64>,
    pub k_has_real_embedding: bool,
}

/// A cocycle together with the endomorphism algebra it acts on, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyDatum {
    cocycle: Cocycle2,
    algebra: QuaternionAlgebraQ,
    endomorphisms: EndomorphismDatum,
    k_has_real_embedding: bool,
}

impl IsogenyDatum {
    pub fn new(cocycle: Cocycle2, algebra: QuaternionAlgebraQ, flags: DatumFlags) -> Result<Self> {
        let t = algebra.schur_index()?;
        if let Some(declared) = flags.schur_index {
            if declared != t {
                return Err(Error::InconsistentDatum(format!(
                    "declared Schur index {} but ({}, {}) has index {}",
                    declared,
                    algebra.a(),
                    algebra.b(),
                    t
                )));
            }
        }
        let inferred = match (t, algebra.is_definite()) {
            (1, _) => AlbertType::I,
            (_, false) => AlbertType::II,
            (_, true) => AlbertType::III,
        };
        let albert_type = flags.albert_type.unwrap_or(inferred);
        if albert_type != AlbertType::IV && albert_type != inferred {
            return Err(Error::InconsistentDatum(format!(
                "declared Albert type {} but the algebra is of type {}",
                albert_type, inferred
            )));
        }
        let f = flags.center_degree.unwrap_or(1);
        let dim_b = flags.dim_b.unwrap_or(t * f);
        // types I to III have totally real centers, type IV a CM center
        let endomorphisms = EndomorphismDatum::new(f, t, albert_type, albert_type != AlbertType::IV, dim_b)?;
        Ok(Self { cocycle, algebra, endomorphisms, k_has_real_embedding: flags.k_has_real_embedding })
    }

    pub fn cocycle(&self) -> &Cocycle2 {
        &self.cocycle
    }

    pub fn algebra(&self) -> &QuaternionAlgebraQ {
        &self.algebra
    }

    pub fn endomorphisms(&self) -> &EndomorphismDatum {
        &self.endomorphisms
    }

    pub fn k_has_real_embedding(&self) -> bool {
        self.k_has_real_embedding
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSummary {
    pub degree: u64,
    pub conductor: u64,
    /// Units mod the conductor fixing the field.
    pub fixing: Vec<u64>,
    /// Distinct values of the splitting map, minimized.
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerSummary {
    pub ambient_dim: usize,
    pub field_dim: usize,
    pub centralizer_dim: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbertSummary {
    pub albert_type: AlbertType,
    pub k_has_real_embedding: bool,
    pub accepted: bool,
    pub unconstrained: bool,
    pub rule: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: &'static str,
    pub claim: String,
}

/// Everything the pipeline established, in plain data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub group_order: usize,
    pub algebra: (String, String),
    pub ramified_places: Vec<String>,
    pub t: u64,
    pub m_cyc: u64,
    pub m: u64,
    pub d: Vec<String>,
    pub beta_group_order: usize,
    pub beta_extended: bool,
    pub beta: Vec<String>,
    pub adjusted: bool,
    pub r: u64,
    pub e: u64,
    pub chi_order: u64,
    pub epsilon_order: u64,
    pub e_beta: FieldSummary,
    pub splits: bool,
    pub descent: bool,
    pub double_centralizer: CentralizerSummary,
    pub n_e: u64,
    pub f: u64,
    pub dim_b: u64,
    pub dim_a: u64,
    pub n: u64,
    pub field_degree: u64,
    pub building_block: bool,
    pub gl2_type: bool,
    pub albert: AlbertSummary,
    pub factor_patterns: Vec<(u64, PatternVerdict)>,
    pub stages: Vec<StageRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub search_cap: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self { search_cap: DEFAULT_SEARCH_CAP }
    }
}

pub fn run_pipeline(d: &IsogenyDatum) -> Result<ClassificationReport> {
    run_pipeline_with(d, &PipelineOptions::default())
}

fn violation(stage: &'static str, detail: String) -> Error {
    Error::PipelineInvariantViolation { stage, detail }
}

pub fn run_pipeline_with(d: &IsogenyDatum, opts: &PipelineOptions) -> Result<ClassificationReport> {
    let c = &d.cocycle;
    let basis = c.basis();
    let alg = &d.algebra;
    let mut stages = Vec::new();

    let ram = ramification_data(alg).map_err(Error::at("ramification"))?;
    let m_cyc = min_cyclotomic_splitting(alg, opts.search_cap).map_err(Error::at("ramification"))?;
    if (m_cyc == 1) != (ram.schur_index == 1) {
        return Err(violation("ramification", format!("Q(zeta_{}) splits but t = {}", m_cyc, ram.schur_index)));
    }
    stages.push(StageRecord {
        stage: "ramification",
        claim: format!(
            "B ramifies at {{{}}}, t = {}, least splitting cyclotomic field Q(zeta_{})",
            format_places(&ram.places).join(", "),
            ram.schur_index,
            m_cyc
        ),
    });

    let co = class_order(c).map_err(Error::at("class-order"))?;
    stages.push(StageRecord {
        stage: "class-order",
        claim: format!("c^{} is the coboundary of d", co.order),
    });

    let beta = split_cocycle(c, None).map_err(Error::at("split"))?;
    stages.push(StageRecord {
        stage: "split",
        claim: format!("beta on a group of order {} has coboundary c", beta.group().order()),
    });

    let adj = adjust_splitting_map(&beta, m_cyc, co.order, &co.witness, basis).map_err(Error::at("adjust"))?;
    let beta = &adj.beta;
    if !beta.splits(c) {
        return Err(violation("adjust", "twisted map no longer splits c".into()));
    }
    stages.push(StageRecord {
        stage: "adjust",
        claim: format!(
            "twist by a character of order {} puts zeta_{} in E_beta; epsilon has order {}",
            adj.chi.order(),
            m_cyc,
            adj.epsilon.order()
        ),
    });

    let field = splitting_field_of(beta).map_err(Error::at("splitting-field"))?;
    if !field.contains_zeta(m_cyc) {
        return Err(violation("splitting-field", format!("zeta_{} not in E_beta", m_cyc)));
    }
    let mut generators: Vec<String> = beta.values().iter().map(|v| v.minimize().to_string()).collect();
    generators.sort();
    generators.dedup();
    stages.push(StageRecord {
        stage: "splitting-field",
        claim: format!("E_beta has degree {} inside Q(zeta_{})", field.degree, field.conductor),
    });

    let spec = AbelianFieldSpec::new(field.conductor, field.fixing.clone()).map_err(Error::at("splits"))?;
    if spec.degree() != field.degree {
        return Err(violation("splits", format!("field degree {} vs {}", spec.degree(), field.degree)));
    }
    let split_verdict = splits(alg, &spec).map_err(Error::at("splits"))?;
    if !split_verdict {
        return Err(violation("splits", "E_beta contains zeta_m_cyc but does not split B".into()));
    }
    stages.push(StageRecord {
        stage: "splits",
        claim: "every ramified place of B has even local degree in E_beta".into(),
    });

    let n_e = field.degree;
    let phi = FieldEmbedding::regular(beta.values(), None).map_err(Error::at("descent"))?;
    if phi.degree() as u64 != n_e {
        return Err(violation("descent", format!("embedding degree {} vs {}", phi.degree(), n_e)));
    }
    let descent = descent_cocycle_check(c, beta, &phi).map_err(Error::at("descent"))?;
    if !descent {
        return Err(violation("descent", "phi(beta) does not split c in the matrix algebra".into()));
    }
    stages.push(StageRecord {
        stage: "descent",
        claim: format!("phi(beta(s)) phi(beta(t)) phi(beta(st))^-1 = c(s, t) in M_{}(Q)", n_e),
    });

    let psi = FieldEmbedding::regular(beta.values(), Some(alg)).map_err(Error::at("double-centralizer"))?;
    let amb = psi.ambient().clone();
    let s = SubalgebraSpec::generated_by(&amb, alloc::vec![psi.generator_image().clone()])
        .map_err(Error::at("double-centralizer"))?;
    let cent = centralizer(&s);
    let holds = cent.dim() * s.dim() == amb.dim() && centralizer(&cent).same_as(&s);
    if !holds || s.dim() as u64 != n_e || cent.dim() as u64 != 4 * n_e {
        return Err(violation(
            "double-centralizer",
            format!("dim C = {}, dim E = {}, dim A = {}", cent.dim(), s.dim(), amb.dim()),
        ));
    }
    stages.push(StageRecord {
        stage: "double-centralizer",
        claim: format!(
            "in M_{}(B): dim C(E_beta) * dim E_beta = {} * {} = {} and C(C(E_beta)) = E_beta",
            n_e,
            cent.dim(),
            s.dim(),
            amb.dim()
        ),
    });

    let ed = &d.endomorphisms;
    let shape = dimension_bookkeeping(ed, n_e).map_err(Error::at("classify"))?;
    let building_block = building_block_check(ed);
    if building_block && shape.dim_a != shape.n * ed.dim_b {
        return Err(violation("classify", format!("dim A = {} but n dim B = {}", shape.dim_a, shape.n * ed.dim_b)));
    }
    let gl2_type = building_block && is_gl2_type(&shape);
    let av = albert_filter(ed, d.k_has_real_embedding);
    stages.push(StageRecord {
        stage: "classify",
        claim: format!(
            "A ~ B^{} has dimension {} and End^0(A) a field of degree {}",
            shape.n, shape.dim_a, shape.field_degree
        ),
    });

    Ok(ClassificationReport {
        group_order: c.group().order(),
        algebra: (alg.a().to_string(), alg.b().to_string()),
        ramified_places: format_places(&ram.places),
        t: ram.schur_index,
        m_cyc,
        m: co.order,
        d: co.witness.iter().map(|v| v.display(basis).to_string()).collect(),
        beta_group_order: beta.group().order(),
        beta_extended: beta.is_extended(),
        beta: beta.values().iter().map(|v| v.to_string()).collect(),
        adjusted: adj.changed(),
        r: adj.r,
        e: adj.e,
        chi_order: adj.chi.order(),
        epsilon_order: adj.epsilon.order(),
        e_beta: FieldSummary { degree: field.degree, conductor: field.conductor, fixing: field.fixing, generators },
        splits: split_verdict,
        descent,
        double_centralizer: CentralizerSummary {
            ambient_dim: amb.dim(),
            field_dim: s.dim(),
            centralizer_dim: cent.dim(),
            holds,
        },
        n_e,
        f: ed.center_degree,
        dim_b: ed.dim_b,
        dim_a: shape.dim_a,
        n: shape.n,
        field_degree: shape.field_degree,
        building_block,
        gl2_type,
        albert: AlbertSummary {
            albert_type: ed.albert_type,
            k_has_real_embedding: d.k_has_real_embedding,
            accepted: av.accepted,
            unconstrained: av.unconstrained,
            rule: av.rule.into(),
            reason: av.reason,
        },
        factor_patterns: factor_pattern_filter(shape.dim_a).into_iter().map(|p| (p.dim_factor, p.verdict)).collect(),
        stages,
    })
}
