//! Job configuration, the end-to-end pipeline and its JSON report.
//!
//! A config names the field, the conductor and the pairs; the report echoes
//! every resolved input in canonical form together with all intermediate
//! quantities. Output is a pure function of the config and the seed.

use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::algebra::{factor, FieldCtx, Poly};
use crate::cyclotomic::{
    different_data, galois_structure, genus_k_assembly, genus_k_closed, Conductor, ConductorInput,
};
use crate::error::{Error, Result};
use crate::quasi::{
    a_pq_formal, a_pq_raw_term_count, genus_quasi, genus_quasi_assembly, parity_consistency,
    presentation_from_table, ramification_table, single_pair_indices, PairSet,
};
use crate::symbols::reciprocity_sides;

pub const CONFIG_SCHEMA_VERSION: u32 = 1;
pub const REPORT_SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_A_PQ_CAP: u128 = 1_000_000;

/// Brute-force Φ oracle runs only when `q^{deg M}` stays below this.
const PHI_ORACLE_LIMIT: u128 = 100_000;

/// A polynomial in either accepted syntax: ascending coefficient encodings
/// (canonical) or text such as `"2*T^2+T+1"`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum PolyText {
    Coeffs(Vec<u64>),
    Text(String),
}

impl PolyText {
    pub fn resolve(&self, ctx: &FieldCtx) -> Result<Poly> {
        match self {
            PolyText::Coeffs(c) => Poly::from_encs(ctx, c).map_err(|_| {
                Error::Config(format!(
                    "coefficient array {c:?} has entries outside [0, {})",
                    ctx.q()
                ))
            }),
            PolyText::Text(s) => Poly::parse(s, ctx),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ConductorSpec {
    /// `[[P_1, r_1], [P_2, r_2], …]`.
    Factored(Vec<(PolyText, u32)>),
    /// A single monic polynomial.
    Single(PolyText),
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct JobOptions {
    pub validate_primality: bool,
    pub emit_a_pq: bool,
    pub run_oracles: bool,
    /// Refuse to list `a_PQ` when the total raw term count exceeds this.
    pub a_pq_cap: u128,
    /// Ignore `a_pq_cap`.
    pub a_pq_override: bool,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            validate_primality: true,
            emit_a_pq: false,
            run_oracles: true,
            a_pq_cap: DEFAULT_A_PQ_CAP,
            a_pq_override: false,
        }
    }
}

fn default_extension() -> u32 {
    1
}

fn default_schema() -> u32 {
    CONFIG_SCHEMA_VERSION
}

/// Input to [`run_report`]. The schema is in `docs/config.schema.json`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub p: u64,
    #[serde(default = "default_extension")]
    pub e: u32,
    /// Ascending coefficients over F_p of the modulus; required iff `e > 1`.
    #[serde(default)]
    pub modulus: Option<PolyText>,
    #[serde(default)]
    pub rng_seed: Option<u64>,
    pub conductor: ConductorSpec,
    #[serde(default)]
    pub pairs: Vec<(PolyText, PolyText)>,
    #[serde(default)]
    pub options: JobOptions,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: JobConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if cfg.schema_version != CONFIG_SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema_version {} (expected {CONFIG_SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        JobConfig::from_json(&text)
    }

    pub fn field(&self) -> Result<FieldCtx> {
        let modulus = match &self.modulus {
            None => None,
            Some(m) => {
                let base = FieldCtx::new(self.p, 1, None)?;
                let poly = m.resolve(&base)?;
                let mut encs = poly.encs();
                if encs.is_empty() {
                    encs.push(0);
                }
                Some(encs)
            }
        };
        FieldCtx::new(self.p, self.e, modulus.as_deref())
    }
}

/// Flags that come from the command line rather than the config.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Accept an empty pair set and report only the cyclotomic layer.
    pub cyclotomic_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub element_encoding: &'static str,
    pub gamma: String,
    pub gamma_rule: &'static str,
    pub polynomial_order: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub w: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub gamma: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorInfo {
    pub prime: String,
    pub exp: u32,
    pub degree: usize,
    pub norm: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConductorInfo {
    pub modulus: String,
    pub degree: usize,
    pub phi: String,
    pub factors: Vec<FactorInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GStructureInfo {
    pub cyclic_parts: Vec<String>,
    pub p_part_order: String,
    pub total_order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalDifferentInfo {
    pub prime: String,
    pub degree: usize,
    pub exp: u32,
    pub s: String,
    pub phi_cofactor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentInfo {
    pub finite: Vec<LocalDifferentInfo>,
    pub infinite_count: String,
    pub infinite_coefficient: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusKInfo {
    pub closed_form: String,
    pub riemann_hurwitz: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamPrimeInfo {
    pub prime: String,
    pub degree: usize,
    pub paired: bool,
    pub vbar: u64,
    pub e: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairParityInfo {
    pub p: String,
    pub q: String,
    pub p_degree_even: bool,
    pub q_degree_even: bool,
    pub u: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationInfo {
    pub primes: Vec<RamPrimeInfo>,
    pub pairs: Vec<PairParityInfo>,
    pub infinite_primes: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ramification: Option<u64>,
    pub order: String,
    pub central: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationInfo {
    pub p: String,
    pub q: String,
    pub epsilon_exponent: i64,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationInfo {
    pub epsilon: GeneratorInfo,
    pub p_sylow_order: String,
    pub generators: Vec<GeneratorInfo>,
    pub relations: Vec<RelationInfo>,
    pub other_pairs_commute: bool,
    pub group_order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusQuasiInfo {
    pub hasse: String,
    pub riemann_hurwitz: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct APqTerm {
    pub coeff: i64,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct APqInfo {
    pub p: String,
    pub q: String,
    pub raw_terms: String,
    pub terms: Vec<APqTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub run: bool,
    pub all_passed: bool,
    pub checks: Vec<OracleCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub conventions: Conventions,
    pub field: FieldInfo,
    pub rng_seed: u64,
    pub conductor: ConductorInfo,
    pub galois_group_k: GStructureInfo,
    pub different: DifferentInfo,
    pub genus_k: GenusKInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ramification: Option<RamificationInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus_quasi: Option<GenusQuasiInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_pq: Option<Vec<APqInfo>>,
    pub oracles: OracleSummary,
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn field_info(ctx: &FieldCtx) -> FieldInfo {
    FieldInfo {
        p: ctx.p(),
        e: ctx.e(),
        q: ctx.q(),
        w: ctx.w(),
        modulus: ctx.modulus().map(|m| {
            let base = FieldCtx::new(ctx.p(), 1, None).expect("p already validated");
            Poly::from_encs(&base, m)
                .expect("digits below p")
                .to_string()
        }),
        gamma: ctx.gamma().enc(),
    }
}

fn conventions(ctx: &FieldCtx) -> Conventions {
    Conventions {
        element_encoding:
            "enc = sum digit_i * p^i over the basis 1, x, ..., x^(e-1) of F_p[x]/(modulus)",
        gamma: ctx.gamma().to_string(),
        gamma_rule: "least encoding in 2, 3, ..., q-1 of multiplicative order q-1",
        polynomial_order: "by degree, then coefficients from the top degree down by encoding",
    }
}

/// Counts units of `A/M` by walking all residues of degree `< deg M`.
fn brute_force_phi(ctx: &FieldCtx, m: &Poly) -> Result<BigUint> {
    let mut count = 0u64;
    for r in Poly::all_below(ctx, m.deg()) {
        if !r.is_zero() && r.gcd(m, ctx)?.is_one() {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

struct Oracles {
    run: bool,
    checks: Vec<OracleCheck>,
}

impl Oracles {
    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(OracleCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Runs the full pipeline: field → conductor → pairs → presentation → genera.
pub fn run_report(cfg: &JobConfig, opts: RunOptions) -> Result<Report> {
    let ctx = cfg.field()?;
    let seed = cfg.rng_seed.unwrap_or(0);

    let input = match &cfg.conductor {
        ConductorSpec::Single(m) => ConductorInput::Unfactored(m.resolve(&ctx)?),
        ConductorSpec::Factored(list) => ConductorInput::Factored(
            list.iter()
                .map(|(pt, r)| Ok((pt.resolve(&ctx)?, *r)))
                .collect::<Result<_>>()?,
        ),
    };
    let c = Conductor::new(&ctx, input, seed)?;
    if cfg.options.validate_primality {
        for pp in c.factors() {
            if !pp.prime.is_irreducible(&ctx)? {
                return Err(Error::ReducibleClaimedPrime(pp.prime.to_string()));
            }
        }
    }

    let raw_pairs = cfg
        .pairs
        .iter()
        .map(|(a, b)| Ok((a.resolve(&ctx)?, b.resolve(&ctx)?)))
        .collect::<Result<Vec<_>>>()?;
    let ps =
        match (raw_pairs.is_empty(), opts.cyclotomic_only) {
            (true, true) => None,
            (true, false) => return Err(Error::Config(
                "pair set is empty; pass --cyclotomic-only to report the cyclotomic layer alone"
                    .into(),
            )),
            (false, _) => Some(PairSet::new(&c, raw_pairs)?),
        };

    let mut oracles = Oracles {
        run: cfg.options.run_oracles,
        checks: Vec::new(),
    };

    let gs = galois_structure(&c);
    let dd = different_data(&ctx, &c);
    let g_k = genus_k_closed(&ctx, &c)?;
    let g_k_rh = genus_k_assembly(&ctx, &c)?;
    if g_k != g_k_rh {
        return Err(Error::Inconsistent(format!(
            "g_K closed form {g_k} != Riemann-Hurwitz {g_k_rh}"
        )));
    }
    oracles.record("genus_k_paths_agree", true, format!("g_K = {g_k}"));

    if oracles.run {
        let bound = (ctx.q() as u128).checked_pow(c.degree() as u32);
        if bound.is_some_and(|b| b <= PHI_ORACLE_LIMIT) {
            let brute = brute_force_phi(&ctx, c.modulus())?;
            oracles.record(
                "phi_brute_force",
                &brute == c.phi(),
                format!("counted {brute}, formula {}", c.phi()),
            );
        }
    }

    let mut report = Report {
        schema_version: REPORT_SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME"),
        tool_version: env!("CARGO_PKG_VERSION"),
        conventions: conventions(&ctx),
        field: field_info(&ctx),
        rng_seed: seed,
        conductor: ConductorInfo {
            modulus: c.modulus().to_string(),
            degree: c.degree(),
            phi: c.phi().to_string(),
            factors: c
                .factors()
                .iter()
                .map(|pp| FactorInfo {
                    prime: pp.prime.to_string(),
                    exp: pp.exp,
                    degree: pp.degree,
                    norm: pp.norm.to_string(),
                })
                .collect(),
        },
        galois_group_k: GStructureInfo {
            cyclic_parts: gs.cyclic_parts.iter().map(|x| x.to_string()).collect(),
            p_part_order: gs.p_part_order.to_string(),
            total_order: gs.total_order.to_string(),
        },
        different: DifferentInfo {
            finite: dd
                .local
                .iter()
                .map(|l| LocalDifferentInfo {
                    prime: l.prime.to_string(),
                    degree: l.degree,
                    exp: l.exp,
                    s: l.s.to_string(),
                    phi_cofactor: l.phi_co.to_string(),
                })
                .collect(),
            infinite_count: dd.infinite_count.to_string(),
            infinite_coefficient: dd.infinite_coeff,
        },
        genus_k: GenusKInfo {
            closed_form: g_k.to_string(),
            riemann_hurwitz: g_k_rh.to_string(),
        },
        pairs: None,
        ramification: None,
        presentation: None,
        genus_quasi: None,
        a_pq: None,
        oracles: OracleSummary {
            run: false,
            all_passed: true,
            checks: Vec::new(),
        },
    };

    if let Some(ps) = &ps {
        quasi_section(&ctx, &c, ps, &g_k, cfg, &mut oracles, &mut report)?;
    }

    let failures = oracles.failures();
    if !failures.is_empty() {
        return Err(Error::Inconsistent(format!(
            "oracle checks failed: {}",
            failures.join(", ")
        )));
    }
    report.oracles = OracleSummary {
        run: oracles.run,
        all_passed: true,
        checks: oracles.checks,
    };
    Ok(report)
}

fn quasi_section(
    ctx: &FieldCtx,
    c: &Conductor,
    ps: &PairSet,
    g_k: &BigUint,
    cfg: &JobConfig,
    oracles: &mut Oracles,
    report: &mut Report,
) -> Result<()> {
    let rt = ramification_table(ctx, c, ps)?;
    let pres = presentation_from_table(ctx, c, ps, &rt)?;
    let g_tilde = genus_quasi(ctx, c, ps, g_k, &rt)?;
    let g_tilde_rh = genus_quasi_assembly(ctx, c, g_k, &rt)?;
    if g_tilde != g_tilde_rh {
        return Err(Error::Inconsistent(format!(
            "g_K~ Hasse {g_tilde} != Riemann-Hurwitz {g_tilde_rh}"
        )));
    }
    oracles.record("genus_quasi_paths_agree", true, format!("g_K~ = {g_tilde}"));

    if oracles.run {
        for (p, q) in ps.pairs() {
            let sides = reciprocity_sides(ctx, p, q)?;
            oracles.record(
                format!("reciprocity({p}, {q})"),
                sides.holds(),
                format!("(Q/P) = {}, (-1)^(dP dQ) (P/Q) = {}", sides.lhs, sides.rhs),
            );
        }
        if let [(p, q)] = ps.pairs() {
            let (e_p, e_q) = single_pair_indices(ctx, p, q)?;
            let table = (rt.e(p).unwrap_or(0), rt.e(q).unwrap_or(0));
            oracles.record(
                "single_pair_indices",
                (e_p, e_q) == table,
                format!("direct ({e_p}, {e_q}), table ({}, {})", table.0, table.1),
            );
            let parity = parity_consistency(ps, &rt)?;
            oracles.record(
                "parity_consistency",
                parity.passed,
                if parity.applicable {
                    format!("d_P d_Q even, e_P = {}, e_Q = {}", parity.e_p, parity.e_q)
                } else {
                    "d_P d_Q odd, vacuous".to_string()
                },
            );
        }
        let orders_ok = pres
            .generators
            .iter()
            .all(|g| g.lift_order == &g.base_order * g.ramification);
        let group_ok = pres.group_order == c.phi() * ctx.w();
        oracles.record(
            "presentation_bookkeeping",
            orders_ok && group_ok,
            format!(
                "lift = e * base for every generator; |G~| = w * Phi(M) = {}",
                pres.group_order
            ),
        );
    }

    if cfg.options.emit_a_pq {
        let total: u128 = ps
            .pairs()
            .iter()
            .map(|(p, q)| a_pq_raw_term_count(ctx.q(), p.deg(), q.deg()))
            .sum();
        if total > cfg.options.a_pq_cap && !cfg.options.a_pq_override {
            return Err(Error::OutputTooLarge {
                count: total,
                cap: cfg.options.a_pq_cap,
            });
        }
        let mut listings = Vec::new();
        for (p, q) in ps.pairs() {
            let sum = a_pq_formal(ctx, p, q)?;
            listings.push(APqInfo {
                p: p.to_string(),
                q: q.to_string(),
                raw_terms: sum.raw_terms().to_string(),
                terms: sum
                    .terms()
                    .iter()
                    .map(|(class, &coeff)| APqTerm {
                        coeff,
                        num: class.num().to_string(),
                        den: class.den().to_string(),
                    })
                    .collect(),
            });
        }
        report.a_pq = Some(listings);
    }

    report.pairs = Some(
        ps.pairs()
            .iter()
            .map(|(p, q)| (p.to_string(), q.to_string()))
            .collect(),
    );
    report.ramification = Some(RamificationInfo {
        primes: rt
            .entries
            .iter()
            .map(|e| RamPrimeInfo {
                prime: e.prime.to_string(),
                degree: e.degree,
                paired: e.paired,
                vbar: e.vbar,
                e: e.e,
            })
            .collect(),
        pairs: rt
            .parity
            .iter()
            .map(|pp| PairParityInfo {
                p: pp.p.to_string(),
                q: pp.q.to_string(),
                p_degree_even: pp.p_degree_even,
                q_degree_even: pp.q_degree_even,
                u: pp.radical.label(),
            })
            .collect(),
        infinite_primes: "unramified",
    });
    report.presentation = Some(PresentationInfo {
        epsilon: GeneratorInfo {
            name: "epsilon".into(),
            prime: None,
            base_order: None,
            ramification: None,
            order: pres.epsilon_order.to_string(),
            central: true,
        },
        p_sylow_order: pres.p_part_order.to_string(),
        generators: pres
            .generators
            .iter()
            .map(|g| GeneratorInfo {
                name: g.name.clone(),
                prime: Some(g.prime.to_string()),
                base_order: Some(g.base_order.to_string()),
                ramification: Some(g.ramification),
                order: g.lift_order.to_string(),
                central: g.central,
            })
            .collect(),
        relations: pres
            .relations
            .iter()
            .map(|r| RelationInfo {
                p: r.p.to_string(),
                q: r.q.to_string(),
                epsilon_exponent: r.epsilon_exponent,
                text: r.to_string(),
            })
            .collect(),
        other_pairs_commute: true,
        group_order: pres.group_order.to_string(),
    });
    report.genus_quasi = Some(GenusQuasiInfo {
        hasse: g_tilde.to_string(),
        riemann_hurwitz: g_tilde_rh.to_string(),
    });
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub poly: String,
    pub leading: u64,
    pub factors: Vec<FactorInfo>,
}

impl FactorReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Factors a polynomial over F_q, building F_q with its default modulus.
pub fn factor_report(q: u64, poly: &str, seed: u64) -> Result<FactorReport> {
    let ctx = FieldCtx::with_order(q)?;
    let f = Poly::parse(poly, &ctx)?;
    let fz = factor(&f, &ctx, seed)?;
    Ok(FactorReport {
        q,
        modulus: field_info(&ctx).modulus,
        poly: f.to_string(),
        leading: fz.leading.enc(),
        factors: fz
            .factors
            .iter()
            .map(|pp| FactorInfo {
                prime: pp.prime.to_string(),
                exp: pp.exp,
                degree: pp.degree,
                norm: pp.norm.to_string(),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASIC: &str = r#"{
        "schema_version": 1,
        "p": 3,
        "conductor": [["T", 1], ["T+1", 1]],
        "pairs": [["T", "T+1"]]
    }"#;

    #[test]
    fn basic_report() {
        let cfg = JobConfig::from_json(BASIC).unwrap();
        let r = run_report(&cfg, RunOptions::default()).unwrap();
        assert_eq!(r.genus_k.closed_form, "0");
        assert_eq!(r.genus_quasi.as_ref().unwrap().hasse, "0");
        let pres = r.presentation.as_ref().unwrap();
        assert_eq!(pres.group_order, "8");
        let orders: Vec<&str> = pres.generators.iter().map(|g| g.order.as_str()).collect();
        assert_eq!(orders, ["4", "2"]);
        assert_eq!(pres.epsilon.order, "2");
        assert_eq!(pres.relations.len(), 1);
        assert!(r.oracles.all_passed && r.oracles.run);
    }

    #[test]
    fn coefficient_arrays_are_accepted() {
        let cfg = JobConfig::from_json(
            r#"{"p": 3, "conductor": [0, 1, 1], "pairs": [[[0, 1], [1, 1]]], "rng_seed": 5}"#,
        )
        .unwrap();
        let r = run_report(&cfg, RunOptions::default()).unwrap();
        assert_eq!(r.conductor.modulus, "T^2+T");
        assert_eq!(r.rng_seed, 5);
        assert_eq!(r.pairs.unwrap(), vec![("T".to_string(), "T+1".to_string())]);
    }

    #[test]
    fn wrong_orientation_is_a_config_error() {
        let cfg = JobConfig::from_json(
            r#"{"p": 3, "conductor": [["T", 1], ["T+1", 1]], "pairs": [["T+1", "T"]]}"#,
        )
        .unwrap();
        let err = run_report(&cfg, RunOptions::default()).unwrap_err();
        assert!(matches!(err, Error::WrongOrientation(..)));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn empty_pairs_need_cyclotomic_only() {
        let cfg = JobConfig::from_json(r#"{"p": 3, "conductor": [["T", 1]]}"#).unwrap();
        assert_eq!(
            run_report(&cfg, RunOptions::default())
                .unwrap_err()
                .exit_code(),
            2
        );
        let r = run_report(
            &cfg,
            RunOptions {
                cyclotomic_only: true,
            },
        )
        .unwrap();
        assert_eq!(r.genus_k.closed_form, "0");
        assert!(r.presentation.is_none() && r.genus_quasi.is_none());
    }

    #[test]
    fn reducible_prime_is_a_validation_error() {
        let cfg =
            JobConfig::from_json(r#"{"p": 3, "conductor": [["T^2+2", 1]], "pairs": []}"#).unwrap();
        let err = run_report(
            &cfg,
            RunOptions {
                cyclotomic_only: true,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::ReducibleClaimedPrime(_)));
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(JobConfig::from_json("{"), Err(Error::Config(_))));
        assert!(matches!(
            JobConfig::from_json(r#"{"p": 3, "conductor": "T", "bogus": 1}"#),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            JobConfig::from_json(r#"{"schema_version": 9, "p": 3, "conductor": "T"}"#),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn a_pq_listing_and_cap() {
        let mut cfg = JobConfig::from_json(BASIC).unwrap();
        cfg.options.emit_a_pq = true;
        let r = run_report(&cfg, RunOptions::default()).unwrap();
        let listing = &r.a_pq.unwrap()[0];
        assert_eq!(listing.raw_terms, "2");
        let terms: Vec<(i64, &str, &str)> = listing
            .terms
            .iter()
            .map(|t| (t.coeff, t.num.as_str(), t.den.as_str()))
            .collect();
        assert_eq!(terms, [(1, "1", "T+1"), (-1, "T+2", "T^2+T")]);

        cfg.options.a_pq_cap = 1;
        let err = run_report(&cfg, RunOptions::default()).unwrap_err();
        assert!(matches!(err, Error::OutputTooLarge { count: 2, cap: 1 }));
        cfg.options.a_pq_override = true;
        assert!(run_report(&cfg, RunOptions::default()).is_ok());
    }

    #[test]
    fn extension_field_config() {
        let cfg = JobConfig::from_json(
            r#"{"p": 3, "e": 2, "modulus": "T^2+1", "conductor": [["T", 1], ["T+1", 1]], "pairs": [["T", "T+1"]]}"#,
        )
        .unwrap();
        let r = run_report(&cfg, RunOptions::default()).unwrap();
        assert_eq!(r.field.q, 9);
        assert_eq!(r.field.gamma, 4);
        assert_eq!(r.field.modulus.as_deref(), Some("T^2+1"));
    }

    #[test]
    fn factor_report_default_modulus() {
        let r = factor_report(9, "T^2+1", 0).unwrap();
        assert_eq!(r.modulus.as_deref(), Some("T^2+1"));
        assert_eq!(r.factors.len(), 2);
        let r = factor_report(3, "T^3+2*T", 0).unwrap();
        let primes: Vec<&str> = r.factors.iter().map(|f| f.prime.as_str()).collect();
        assert_eq!(primes, ["T", "T+1", "T+2"]);
    }
}
