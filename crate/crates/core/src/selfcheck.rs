//! Exhaustive property suites, each comparing two independent computations.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{factor, monic_irreducibles, FieldCtx, Poly};
use crate::cyclotomic::{genus_k_assembly, genus_k_closed, Conductor, ConductorInput};
use crate::error::Result;
use crate::quasi::{
    a_pq_formal, a_pq_raw_term_count, genus_quasi, genus_quasi_assembly, parity_consistency,
    ramification_table, PairSet,
};
use crate::symbols::{reciprocity_sides, residue_symbol};

/// Failures kept verbatim per suite; the rest are only counted.
const MAX_LOGGED_FAILURES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Small,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: impl Into<String>) -> Self {
        SuiteResult {
            name: name.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LOGGED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} cases, {} failed",
            self.name, self.cases, self.failed
        )?;
        for line in &self.failures {
            write!(f, "\n    {line}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfcheckSummary {
    pub scope: Scope,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelfcheckSummary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn total_cases(&self) -> u64 {
        self.suites.iter().map(|s| s.cases).sum()
    }
}

fn primes_up_to(ctx: &FieldCtx, max_deg: usize) -> Vec<Poly> {
    (1..=max_deg)
        .flat_map(|d| monic_irreducibles(ctx, d))
        .collect()
}

fn monic_up_to(ctx: &FieldCtx, max_deg: usize) -> impl Iterator<Item = Poly> + '_ {
    (1..=max_deg).flat_map(move |d| Poly::monic_of_degree(ctx, d))
}

/// `(Q/P) = (−1)^{d_P d_Q} (P/Q)` for all distinct monic primes of degree ≤ `max_deg`.
pub fn reciprocity_suite(ctx: &FieldCtx, max_deg: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("reciprocity q={} deg<={max_deg}", ctx.q()));
    let primes = primes_up_to(ctx, max_deg);
    for (i, p) in primes.iter().enumerate() {
        for q in &primes[i + 1..] {
            let sides = reciprocity_sides(ctx, p, q)?;
            s.check(sides.holds(), || {
                format!("P={p} Q={q}: (Q/P)={} rhs={}", sides.lhs, sides.rhs)
            });
        }
    }
    Ok(s)
}

/// Φ(M) from the factorization against a count of units in `A/M`.
pub fn phi_suite(ctx: &FieldCtx, max_deg: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("phi brute force q={} deg<={max_deg}", ctx.q()));
    for m in monic_up_to(ctx, max_deg) {
        let c = Conductor::from_poly(ctx, &m)?;
        let mut units = 0u64;
        for r in Poly::all_below(ctx, m.deg()) {
            if !r.is_zero() && r.gcd(&m, ctx)?.is_one() {
                units += 1;
            }
        }
        let counted = BigUint::from(units);
        s.check(&counted == c.phi(), || {
            format!("M={m}: formula {} counted {counted}", c.phi())
        });
    }
    Ok(s)
}

/// `(A/R) = 1` exactly when `A` is a `(q−1)`-th power mod `R`.
pub fn character_suite(ctx: &FieldCtx, max_deg: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("symbol character q={} deg<={max_deg}", ctx.q()));
    for r in primes_up_to(ctx, max_deg) {
        let residues: Vec<Poly> = Poly::all_below(ctx, r.deg())
            .into_iter()
            .filter(|a| !a.is_zero())
            .collect();
        let powers: BTreeSet<Poly> = residues
            .iter()
            .map(|b| b.powmod_u64(ctx.w(), &r, ctx))
            .collect::<Result<_>>()?;
        for a in &residues {
            let trivial = residue_symbol(ctx, a, &r, true)?.value.is_one();
            let is_power = powers.contains(a);
            s.check(trivial == is_power, || {
                format!("A={a} R={r}: symbol trivial {trivial}, w-th power {is_power}")
            });
        }
    }
    Ok(s)
}

/// Both genus paths over every monic conductor of degree ≤ `max_deg`, and
/// both quasi-genus paths over every admissible single pair.
pub fn genus_suite(ctx: &FieldCtx, max_deg: usize, seed: u64) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("genus paths q={} deg<={max_deg}", ctx.q()));
    for m in monic_up_to(ctx, max_deg) {
        let c = Conductor::new(ctx, ConductorInput::Unfactored(m.clone()), seed)?;
        let g_k = genus_k_closed(ctx, &c)?;
        let g_k_rh = genus_k_assembly(ctx, &c)?;
        s.check(g_k == g_k_rh, || format!("M={m}: g_K {g_k} vs {g_k_rh}"));
        let primes: Vec<&Poly> = c.factors().iter().map(|pp| &pp.prime).collect();
        for (i, p) in primes.iter().enumerate() {
            for q in &primes[i + 1..] {
                let ps = PairSet::new(&c, vec![((*p).clone(), (*q).clone())])?;
                let rt = ramification_table(ctx, &c, &ps)?;
                let hasse = genus_quasi(ctx, &c, &ps, &g_k, &rt);
                let rh = genus_quasi_assembly(ctx, &c, &g_k, &rt);
                s.check(hasse.is_ok() && hasse == rh, || {
                    format!("M={m} pair ({p}, {q}): Hasse {hasse:?} vs RH {rh:?}")
                });
            }
        }
    }
    Ok(s)
}

/// `e_P = e_Q` for single pairs with `2 | d_P d_Q`, conductor `PQ`.
pub fn parity_suite(ctx: &FieldCtx, max_deg: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("parity q={} deg<={max_deg}", ctx.q()));
    let primes = primes_up_to(ctx, max_deg);
    for (i, p) in primes.iter().enumerate() {
        for q in &primes[i + 1..] {
            if (p.deg() * q.deg()) % 2 == 1 {
                continue;
            }
            let (a, b) = if p < q { (p, q) } else { (q, p) };
            let c = Conductor::new(
                ctx,
                ConductorInput::Factored(vec![(a.clone(), 1), (b.clone(), 1)]),
                0,
            )?;
            let ps = PairSet::new(&c, vec![(a.clone(), b.clone())])?;
            let report = parity_consistency(&ps, &ramification_table(ctx, &c, &ps)?)?;
            s.check(report.passed, || {
                format!("P={a} Q={b}: e_P={} e_Q={}", report.e_p, report.e_q)
            });
        }
    }
    Ok(s)
}

fn random_poly(ctx: &FieldCtx, rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut encs: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..ctx.q())).collect();
        encs[d] = rng.gen_range(1..ctx.q());
        let f = Poly::from_encs(ctx, &encs).expect("encodings below q");
        if !f.is_constant() {
            return f;
        }
    }
}

/// Factor random polynomials and certify: the product reassembles the input,
/// every factor is monic irreducible, and factors are distinct and sorted.
pub fn factor_suite(
    ctx: &FieldCtx,
    count: usize,
    max_deg: usize,
    seed: u64,
) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("factor round trip q={} deg<={max_deg}", ctx.q()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let f = random_poly(ctx, &mut rng, max_deg);
        let fz = factor(&f, ctx, rng.gen())?;
        let mut ok = fz.expand(ctx) == f;
        for pp in &fz.factors {
            ok &= pp.exp > 0 && pp.prime.is_monic() && pp.prime.is_irreducible(ctx)?;
        }
        ok &= fz.factors.windows(2).all(|w| w[0].prime < w[1].prime);
        s.check(ok, || format!("f={f}"));
    }
    Ok(s)
}

/// Raw bracket count of `a_PQ` against the closed formula on random pairs
/// with `d_P + d_Q ≤ max_total`.
pub fn a_pq_count_suite(
    ctx: &FieldCtx,
    count: usize,
    max_total: usize,
    seed: u64,
) -> Result<SuiteResult> {
    let mut s = SuiteResult::new(format!("a_PQ term count q={} dP+dQ<={max_total}", ctx.q()));
    let primes = primes_up_to(ctx, max_total.saturating_sub(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < count {
        let p = &primes[rng.gen_range(0..primes.len())];
        let q = &primes[rng.gen_range(0..primes.len())];
        if p >= q || p.deg() + q.deg() > max_total {
            continue;
        }
        done += 1;
        let sum = a_pq_formal(ctx, p, q)?;
        let expected = a_pq_raw_term_count(ctx.q(), p.deg(), q.deg());
        s.check(sum.raw_terms() == expected, || {
            format!("P={p} Q={q}: raw {} formula {expected}", sum.raw_terms())
        });
    }
    Ok(s)
}

/// Runs every suite at the given scope.
pub fn run_selfcheck(scope: Scope, seed: u64) -> Result<SelfcheckSummary> {
    let f3 = FieldCtx::with_order(3)?;
    let f5 = FieldCtx::with_order(5)?;
    let f9 = FieldCtx::with_order(9)?;
    let mut suites = vec![
        reciprocity_suite(&f3, 3)?,
        reciprocity_suite(&f5, 2)?,
        phi_suite(&f3, 3)?,
        character_suite(&f3, 2)?,
    ];
    match scope {
        Scope::Small => {
            suites.push(genus_suite(&f3, 3, seed)?);
            suites.push(parity_suite(&f3, 3)?);
            for ctx in [&f3, &f5, &f9] {
                suites.push(factor_suite(ctx, 100, 8, seed)?);
            }
            suites.push(a_pq_count_suite(&f3, 5, 4, seed)?);
        }
        Scope::Full => {
            suites.push(phi_suite(&f5, 3)?);
            suites.push(character_suite(&f5, 2)?);
            suites.push(genus_suite(&f3, 4, seed)?);
            suites.push(genus_suite(&f5, 3, seed)?);
            suites.push(parity_suite(&f3, 3)?);
            suites.push(parity_suite(&f5, 3)?);
            for ctx in [&f3, &f5, &f9] {
                suites.push(factor_suite(ctx, 1000, 8, seed)?);
            }
            suites.push(a_pq_count_suite(&f3, 20, 5, seed)?);
        }
    }
    Ok(SelfcheckSummary {
        scope,
        seed,
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let f3 = FieldCtx::with_order(3).unwrap();
        for s in [
            reciprocity_suite(&f3, 2).unwrap(),
            phi_suite(&f3, 2).unwrap(),
            character_suite(&f3, 1).unwrap(),
            genus_suite(&f3, 2, 0).unwrap(),
            parity_suite(&f3, 2).unwrap(),
            factor_suite(&f3, 20, 6, 1).unwrap(),
            a_pq_count_suite(&f3, 3, 3, 1).unwrap(),
        ] {
            assert!(s.passed(), "{s}");
            assert!(s.cases > 0, "{s}");
        }
    }

    #[test]
    fn case_counts() {
        let f3 = FieldCtx::with_order(3).unwrap();
        // 3 + 3 + 8 primes of degree ≤ 3 over F_3
        assert_eq!(reciprocity_suite(&f3, 3).unwrap().cases, 14 * 13 / 2);
        assert_eq!(phi_suite(&f3, 3).unwrap().cases, 3 + 9 + 27);
        // each prime R contributes |R| − 1 residues
        assert_eq!(character_suite(&f3, 2).unwrap().cases, 3 * 2 + 3 * 8);
    }

    #[test]
    fn failure_display() {
        let mut s = SuiteResult::new("demo");
        s.check(true, String::new);
        s.check(false, || "bad case".into());
        assert!(!s.passed());
        assert_eq!(s.to_string(), "FAIL demo: 2 cases, 1 failed\n    bad case");
    }
}
