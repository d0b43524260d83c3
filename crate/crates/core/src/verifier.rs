//! End-to-end comparison of `Λ` with `Γ = Λ / ⟨T⟩` for a removable arrow set `T`.
//!
//! Every section is deterministic given the configuration: random modules come from a
//! ChaCha stream seeded by `VerifyConfig::seed`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{opposite_algebra, DEFAULT_DEGREE_CAP, DEFAULT_ENV_CAP};
use crate::cleft::CleftContext;
use crate::error::Error;
use crate::field::Field;
use crate::hochschild::{env_functor_checks, env_removal_check, hh_dims_resolution, EnvContext, EnvFunctorReport, EnvRemovalReport};
use crate::ideal::{arrow_set_removable, Removal, RemovalCertificate, RemovalRefusal, TrivialExtensionReport};
use crate::module::{projective_module, random_module, simple_module, Alg, Representation};
use crate::resolution::{ext_dims_from, pd_up_to, regular_injective_dims, DimBound, Resolution, DEFAULT_PD_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub ext_max: usize,
    pub hh_max: usize,
    pub pd_cap: usize,
    pub samples: usize,
    pub random_pairs: usize,
    pub seed: u64,
    pub degree_bound: usize,
    pub env_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ext_max: 8,
            hh_max: 4,
            pd_cap: DEFAULT_PD_CAP,
            samples: 50,
            random_pairs: 5,
            seed: 0,
            degree_bound: DEFAULT_DEGREE_CAP,
            env_cap: DEFAULT_ENV_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub tool_version: String,
    pub input: String,
    pub presentation_sha256: String,
    pub field: String,
    pub seed: u64,
    pub config: VerifyConfig,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateSection {
    #[serde(flatten)]
    pub certificate: RemovalCertificate,
    pub trivial_extension: TrivialExtensionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtComparison {
    pub m: String,
    pub n: String,
    pub lambda: Vec<usize>,
    pub gamma: Vec<usize>,
    /// Equality in every degree `≥ 2`.
    pub equal_from_2: bool,
    pub differs_at_1: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EhiSection {
    pub degree_max: usize,
    pub simple_pairs: Vec<ExtComparison>,
    pub random_pairs: Vec<ExtComparison>,
    /// A pair whose Ext^1 differs, showing the bound 1 cannot be lowered.
    pub sharpness_witness: Option<(String, String)>,
    /// `dim Ext^m_Λ(l e C, A) = dim Ext^m_Γ(e C, e A)` on simple pairs.
    pub ext_adjunction: bool,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularInjective {
    pub right: DimBound,
    pub left: DimBound,
    pub gorenstein: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GorensteinSection {
    pub cap: usize,
    pub lambda: RegularInjective,
    pub gamma: RegularInjective,
    /// `agree`, `disagree` or `unknown`.
    pub comparison: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularitySection {
    pub samples: usize,
    /// `max_v pd_Γ e(e_v Λ)`, expected 0.
    pub p_a: DimBound,
    /// `max_v pd_Λ i(e_v Γ)`, expected at most 1.
    pub p_b: DimBound,
    /// `max pd_Λ G(M)` over sampled `M`, expected 0.
    pub n_g: DimBound,
    /// `max pd_Λ H(N)` over sampled `N`, expected 0.
    pub n_h: DimBound,
    pub note: String,
    pub conclusion: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct HochschildSection {
    pub degree_max: usize,
    pub hh_lambda: Option<Vec<usize>>,
    pub hh_gamma: Option<Vec<usize>>,
    /// `dim Ext^i(Λ/rad, Λ/rad)` and the same for `Γ`.
    pub ext_top_lambda: Vec<usize>,
    pub ext_top_gamma: Vec<usize>,
    pub env_removal: Option<EnvRemovalReport>,
    pub env_functors: Option<EnvFunctorReport>,
    pub note: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    pub ehi: Verdict,
    pub gorenstein: Verdict,
    pub singularity: Verdict,
    pub hochschild: Verdict,
    pub overall: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub meta: Meta,
    pub certificate: CertificateSection,
    pub ehi: EhiSection,
    pub gorenstein: GorensteinSection,
    pub singularity: SingularitySection,
    pub hochschild: HochschildSection,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug)]
pub enum VerifyOutcome {
    Report(alloc::boxed::Box<VerificationReport>),
    Refused(RemovalRefusal),
}

fn vertex_name<K: Field>(a: &Alg<K>, v: usize) -> String {
    a.vertices()[v].clone()
}

fn compare(m: String, n: String, lambda: Vec<usize>, gamma: Vec<usize>) -> ExtComparison {
    let equal_from_2 = lambda.iter().zip(&gamma).skip(2).all(|(x, y)| x == y);
    let differs_at_1 = lambda.get(1) != gamma.get(1);
    ExtComparison {
        m,
        n,
        lambda,
        gamma,
        equal_from_2,
        differs_at_1,
    }
}

/// Ext tables over `Λ` and `Γ` for all pairs of simple modules and for random pairs.
pub fn ehi_report<K: Field>(ctx: &CleftContext<K>, degree_max: usize, random_pairs: usize, rng: &mut ChaCha8Rng) -> Result<EhiSection, Error> {
    let lam = ctx.lambda();
    let n = lam.num_vertices();
    let simples: Vec<Representation<K>> = (0..n).map(|v| simple_module(lam, v)).collect::<Result<_, _>>()?;
    let restricted: Vec<Representation<K>> = simples.iter().map(|s| ctx.e(s)).collect::<Result<_, _>>()?;
    let mut simple_pairs = Vec::new();
    let mut ext_adjunction = true;
    let adj_max = degree_max.min(4);
    for (u, s) in simples.iter().enumerate() {
        let mut rl = Resolution::new(s);
        let mut rg = Resolution::new(&restricted[u]);
        let mut rle = Resolution::new(&ctx.l(&restricted[u])?.module);
        for (w, t) in simples.iter().enumerate() {
            let el = ext_dims_from(&mut rl, t, degree_max)?;
            let eg = ext_dims_from(&mut rg, &restricted[w], degree_max)?;
            ext_adjunction &= ext_dims_from(&mut rle, t, adj_max)?[..] == eg[..=adj_max];
            simple_pairs.push(compare(format!("S_{}", vertex_name(lam, u)), format!("S_{}", vertex_name(lam, w)), el, eg));
        }
    }
    let mut random = Vec::new();
    for i in 0..random_pairs {
        let m = random_module(lam, rng, 2);
        let nn = random_module(lam, rng, 2);
        let el = ext_dims_from(&mut Resolution::new(&m), &nn, degree_max)?;
        let eg = ext_dims_from(&mut Resolution::new(&ctx.e(&m)?), &ctx.e(&nn)?, degree_max)?;
        random.push(compare(format!("random_{i}_m"), format!("random_{i}_n"), el, eg));
    }
    let sharpness_witness = simple_pairs
        .iter()
        .chain(&random)
        .find(|c| c.differs_at_1)
        .map(|c| (c.m.clone(), c.n.clone()));
    let ok = simple_pairs.iter().chain(&random).all(|c| c.equal_from_2) && ext_adjunction;
    Ok(EhiSection {
        degree_max,
        simple_pairs,
        random_pairs: random,
        sharpness_witness,
        ext_adjunction,
        verdict: Verdict::from_bool(ok),
    })
}

fn regular_injective<K: Field>(a: &Alg<K>, cap: usize) -> Result<RegularInjective, Error> {
    let op = Arc::new(opposite_algebra(a));
    let (right, left) = regular_injective_dims(a, &op, cap)?;
    let gorenstein = match (right, left) {
        (DimBound::Finite(_), DimBound::Finite(_)) => Some(true),
        _ => None,
    };
    Ok(RegularInjective { right, left, gorenstein })
}

/// Injective dimensions of the regular modules of `Λ` and `Γ` on both sides.
///
/// A capped computation can certify Gorensteinness but never refute it, so the
/// comparison is `agree` when both are certified and `unknown` otherwise.
pub fn gorenstein_report<K: Field>(lambda: &Alg<K>, gamma: &Alg<K>, cap: usize) -> Result<GorensteinSection, Error> {
    let l = regular_injective(lambda, cap)?;
    let g = regular_injective(gamma, cap)?;
    let comparison = match (l.gorenstein, g.gorenstein) {
        (Some(x), Some(y)) if x == y => "agree",
        (Some(_), Some(_)) => "disagree",
        _ => "unknown",
    };
    let verdict = match comparison {
        "agree" => Verdict::Pass,
        "disagree" => Verdict::Fail,
        _ => Verdict::Unknown,
    };
    Ok(GorensteinSection {
        cap,
        lambda: l,
        gamma: g,
        comparison: comparison.to_string(),
        verdict,
    })
}

fn max_bound(a: DimBound, b: DimBound) -> DimBound {
    match (a, b) {
        (DimBound::Finite(x), DimBound::Finite(y)) => DimBound::Finite(x.max(y)),
        (DimBound::Exceeds(c), _) | (_, DimBound::Exceeds(c)) => DimBound::Exceeds(c),
    }
}

fn at_most(b: DimBound, n: usize) -> bool {
    matches!(b, DimBound::Finite(x) if x <= n)
}

/// The four projective-dimension conditions for `e` to induce a singular equivalence.
pub fn singularity_report<K: Field>(ctx: &CleftContext<K>, samples: usize, cap: usize, rng: &mut ChaCha8Rng) -> Result<SingularitySection, Error> {
    let (lam, gam) = (ctx.lambda(), ctx.gamma());
    let mut p_a = DimBound::Finite(0);
    for v in 0..lam.num_vertices() {
        p_a = max_bound(p_a, pd_up_to(&ctx.e(&projective_module(lam, v)?)?, cap));
    }
    let mut p_b = DimBound::Finite(0);
    for v in 0..gam.num_vertices() {
        p_b = max_bound(p_b, pd_up_to(&ctx.i(&projective_module(gam, v)?)?, cap));
    }
    let mut n_g = DimBound::Finite(0);
    let mut n_h = DimBound::Finite(0);
    for _ in 0..samples {
        let m = random_module(lam, rng, 3);
        n_g = max_bound(n_g, pd_up_to(&ctx.g(&m)?.module, cap));
        let nn = random_module(gam, rng, 3);
        n_h = max_bound(n_h, pd_up_to(&ctx.h(&nn)?.module, cap));
    }
    let ok = at_most(p_a, 0) && at_most(p_b, 1) && at_most(n_g, 0) && at_most(n_h, 0);
    Ok(SingularitySection {
        samples,
        p_a,
        p_b,
        n_g,
        n_h,
        note: "n_g and n_h are sampled; the image of G consists of projective modules".into(),
        conclusion: if ok {
            "singular equivalence certified: e restricts to an equivalence of singularity categories".into()
        } else {
            "conditions not met at the computed bounds".into()
        },
        verdict: Verdict::from_bool(ok),
    })
}

fn top_ext<K: Field>(a: &Alg<K>, max: usize) -> Result<Vec<usize>, Error> {
    let n = a.num_vertices();
    let top = (1..n).try_fold(simple_module(a, 0)?, |acc, v| acc.direct_sum(&simple_module(a, v)?))?;
    ext_dims_from(&mut Resolution::new(&top), &top, max)
}

/// Hochschild tables of both algebras and the enveloping comparisons. This is evidence
/// consistent with finite generation, never a decision of it.
pub fn hochschild_report<K: Field>(ctx: &CleftContext<K>, degree_max: usize, env_cap: usize) -> Result<HochschildSection, Error> {
    let capped = |r: Result<Vec<usize>, Error>| match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::DimensionCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    let hh_lambda = capped(hh_dims_resolution(ctx.lambda(), env_cap, degree_max).map(|t| t.dims))?;
    let hh_gamma = capped(hh_dims_resolution(ctx.gamma(), env_cap, degree_max).map(|t| t.dims))?;
    let ext_top_lambda = top_ext(ctx.lambda(), degree_max)?;
    let ext_top_gamma = top_ext(ctx.gamma(), degree_max)?;
    let (env_removal, env_functors) = match EnvContext::new(ctx, env_cap) {
        Ok(env) => (Some(env_removal_check(&env, degree_max)?), Some(env_functor_checks(ctx, &env)?)),
        Err(Error::DimensionCapExceeded { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let verdict = match (&env_removal, &env_functors) {
        (Some(r), Some(f)) => Verdict::from_bool(r.pass && f.pass()),
        _ => Verdict::Unknown,
    };
    Ok(HochschildSection {
        degree_max,
        hh_lambda,
        hh_gamma,
        ext_top_lambda,
        ext_top_gamma,
        env_removal,
        env_functors,
        note: "consistent with the transfer of finite generation at the computed degrees; not a decision of it".into(),
        verdict,
    })
}

/// Certifies `arrows` for removal and runs every section; a refused set yields no report.
pub fn verify<K: Field>(lambda: &Alg<K>, arrows: &[usize], cfg: &VerifyConfig, input: &str, fingerprint: &str, tool_version: &str) -> Result<VerifyOutcome, Error> {
    let cert = match arrow_set_removable(lambda, arrows, cfg.degree_bound)? {
        Removal::Certified(c) => c,
        Removal::Refused(r) => return Ok(VerifyOutcome::Refused(r)),
    };
    let ctx = CleftContext::new(lambda.clone(), cert.clone(), cfg.degree_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ehi = ehi_report(&ctx, cfg.ext_max, cfg.random_pairs, &mut rng)?;
    let gorenstein = gorenstein_report(ctx.lambda(), ctx.gamma(), cfg.pd_cap)?;
    let singularity = singularity_report(&ctx, cfg.samples, cfg.pd_cap, &mut rng)?;
    let hochschild = hochschild_report(&ctx, cfg.hh_max, cfg.env_cap)?;
    let all = [ehi.verdict, gorenstein.verdict, singularity.verdict, hochschild.verdict];
    let overall = if all.contains(&Verdict::Fail) {
        Verdict::Fail
    } else if all.contains(&Verdict::Unknown) {
        Verdict::Unknown
    } else {
        Verdict::Pass
    };
    let verdicts = Verdicts {
        ehi: ehi.verdict,
        gorenstein: gorenstein.verdict,
        singularity: singularity.verdict,
        hochschild: hochschild.verdict,
        overall,
    };
    Ok(VerifyOutcome::Report(alloc::boxed::Box::new(VerificationReport {
        meta: Meta {
            tool_version: tool_version.into(),
            input: input.into(),
            presentation_sha256: fingerprint.into(),
            field: format!("{}", lambda.field().spec()),
            seed: cfg.seed,
            config: cfg.clone(),
        },
        certificate: CertificateSection {
            certificate: cert,
            trivial_extension: ctx.report().clone(),
        },
        ehi,
        gorenstein,
        singularity,
        hochschild,
        verdicts,
    })))
}
