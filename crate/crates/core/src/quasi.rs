//! The quasi-cyclotomic layer `K̃ = K(u^{1/w})`, `u = ∏ u_{P_i Q_i}`, `w = q − 1`.
//!
//! Everything here is determined by the pairing data and residue symbols:
//! the ramification index in `K̃/K` of a finite prime `L` is
//! `w / gcd(w, v̄(L))` with
//!
//! ```text
//! v̄(L) = log_γ (L / ∏ firsts(L)) − log_γ (L / ∏ seconds(L))  (mod w)
//! ```
//!
//! where `firsts(L)` are the `Q` with `(L, Q)` a pair and `seconds(L)` the `P`
//! with `(P, L)` a pair. Infinite primes of `K` are unramified in `K̃/K`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::algebra::{enumerate_monic_below, FieldCtx, Poly, PrimePower};
use crate::cyclotomic::{galois_structure, genus_from_rational, Conductor};
use crate::error::{Error, Result};
use crate::symbols::{jacobi_symbol, residue_symbol};

/// Ordered prime pairs `(P_i, Q_i)`, `P_i < Q_i`, defining `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSet {
    pairs: Vec<(Poly, Poly)>,
    firsts: BTreeMap<Poly, Vec<Poly>>,
    seconds: BTreeMap<Poly, Vec<Poly>>,
}

impl PairSet {
    /// Validates raw pairs against the conductor. Orientation is checked,
    /// never corrected: `(Q, P)` with `P < Q` is rejected.
    pub fn new(c: &Conductor, raw: Vec<(Poly, Poly)>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyPairSet);
        }
        let mut seen = BTreeSet::new();
        let mut firsts: BTreeMap<Poly, Vec<Poly>> = BTreeMap::new();
        let mut seconds: BTreeMap<Poly, Vec<Poly>> = BTreeMap::new();
        for (p, q) in &raw {
            for member in [p, q] {
                if c.index_of(member).is_none() {
                    return Err(Error::PrimeNotInConductor(member.to_string()));
                }
            }
            match p.cmp(q) {
                Ordering::Equal => return Err(Error::PairMembersEqual(p.to_string())),
                Ordering::Greater => {
                    return Err(Error::WrongOrientation(p.to_string(), q.to_string()))
                }
                Ordering::Less => {}
            }
            if !seen.insert((p.clone(), q.clone())) {
                return Err(Error::DuplicatePair(p.to_string(), q.to_string()));
            }
            firsts.entry(p.clone()).or_default().push(q.clone());
            seconds.entry(q.clone()).or_default().push(p.clone());
        }
        Ok(PairSet {
            pairs: raw,
            firsts,
            seconds,
        })
    }

    pub fn pairs(&self) -> &[(Poly, Poly)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `{Q : (L, Q) is a pair}`.
    pub fn firsts(&self, l: &Poly) -> &[Poly] {
        self.firsts.get(l).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `{P : (P, L) is a pair}`.
    pub fn seconds(&self, l: &Poly) -> &[Poly] {
        self.seconds.get(l).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_paired(&self, l: &Poly) -> bool {
        self.firsts.contains_key(l) || self.seconds.contains_key(l)
    }

    /// Distinct primes occurring in at least one pair, in canonical order.
    pub fn paired_primes(&self) -> BTreeSet<&Poly> {
        self.firsts.keys().chain(self.seconds.keys()).collect()
    }
}

/// A nonzero class of `k/A`, stored as the reduced proper fraction `num/den`
/// with `den` monic and nonconstant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracClass {
    num: Poly,
    den: Poly,
}

impl FracClass {
    /// Reduces `num/den` modulo `A`; `None` when the class is zero.
    pub fn reduce(ctx: &FieldCtx, num: &Poly, den: &Poly) -> Result<Option<FracClass>> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(None);
        }
        let g = num.gcd(den, ctx)?;
        let (lc, den) = den.div_exact(&g, ctx).monic_part(ctx);
        let num = num.div_exact(&g, ctx).scale(ctx.inv(lc)?, ctx);
        let num = num.rem(&den, ctx)?;
        if num.is_zero() {
            return Ok(None);
        }
        Ok(Some(FracClass { num, den }))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }
}

impl Ord for FracClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den
            .cmp(&other.den)
            .then_with(|| self.num.cmp(&other.num))
    }
}

impl PartialOrd for FracClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FracClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({})/({})]", self.num, self.den)
    }
}

/// An element of the free abelian group on the classes `[A]`, `A ∈ k/A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<FracClass, i64>,
    /// Number of bracket terms generated before reduction and merging.
    raw_terms: u128,
}

impl FormalSum {
    pub fn add_term(&mut self, class: FracClass, coeff: i64) {
        let entry = self.terms.entry(class);
        match entry {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if coeff != 0 {
                    v.insert(coeff);
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<FracClass, i64> {
        &self.terms
    }

    pub fn raw_terms(&self) -> u128 {
        self.raw_terms
    }

    pub fn coeff(&self, class: &FracClass) -> i64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: FormalSum) {
        self.raw_terms += other.raw_terms;
        for (class, c) in other.terms {
            self.add_term(class, c);
        }
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (class, c)) in self.terms.iter().enumerate() {
            match (i, *c < 0) {
                (0, false) => write!(f, "{c}{class}")?,
                (0, true) => write!(f, "-{}{class}", -c)?,
                (_, false) => write!(f, " + {c}{class}")?,
                (_, true) => write!(f, " - {}{class}", -c)?,
            }
        }
        Ok(())
    }
}

/// Raw bracket count of `a_PQ`: `2 (q−2) · #{A} · #{B}` with
/// `#{A} = (q^{d_Q} − 1)/(q − 1)` and `#{B} = (q^{d_P} − 1)/(q − 1)`.
pub fn a_pq_raw_term_count(q: u64, d_p: usize, d_q: usize) -> u128 {
    let monic_below = |d: usize| ((q as u128).pow(d as u32) - 1) / (q as u128 - 1);
    2 * (q as u128 - 2) * monic_below(d_q) * monic_below(d_p)
}

/// The formal sum
/// `a_PQ = Σ_{A, B monic, d_A < d_Q, d_B < d_P} Σ_{s=1}^{q−2} s ([(BQ + γ^{−s}A)/PQ] − [(AP + γ^{−s}B)/PQ])`.
pub fn a_pq_formal(ctx: &FieldCtx, p: &Poly, q: &Poly) -> Result<FormalSum> {
    if p >= q {
        return Err(Error::BadPair(format!("need P < Q, got ({p}, {q})")));
    }
    for r in [p, q] {
        if r.is_constant() || !r.is_monic() || !r.is_irreducible(ctx)? {
            return Err(Error::BadPair(format!("{r} is not a monic prime")));
        }
    }
    let pq = p.mul(q, ctx);
    let shifts: Vec<_> = (1..=ctx.q() as i64 - 2)
        .map(|s| (s, ctx.gamma_pow(-s)))
        .collect();
    let bs: Vec<Poly> = enumerate_monic_below(ctx, p.deg())?.collect();
    let mut sum = FormalSum::default();
    for a in enumerate_monic_below(ctx, q.deg())? {
        let ap = a.mul(p, ctx);
        for b in &bs {
            let bq = b.mul(q, ctx);
            for &(s, g) in &shifts {
                let first = bq.add(&a.scale(g, ctx), ctx);
                let second = ap.add(&b.scale(g, ctx), ctx);
                if let Some(class) = FracClass::reduce(ctx, &first, &pq)? {
                    sum.add_term(class, s);
                }
                if let Some(class) = FracClass::reduce(ctx, &second, &pq)? {
                    sum.add_term(class, -s);
                }
                sum.raw_terms += 2;
            }
        }
    }
    Ok(sum)
}

/// Which radical multiplies `sin a_PQ` in `u_PQ`, by degree parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radical {
    /// `2 | d_P`, `2 | d_Q`.
    One,
    /// `2 | d_P`, `2 ∤ d_Q`.
    SqrtP,
    /// `2 ∤ d_P`, `2 | d_Q`.
    SqrtQ,
    /// `2 ∤ d_P`, `2 ∤ d_Q`.
    SqrtPQ,
}

impl Radical {
    pub fn for_degrees(d_p: usize, d_q: usize) -> Radical {
        match (d_p.is_multiple_of(2), d_q.is_multiple_of(2)) {
            (true, true) => Radical::One,
            (true, false) => Radical::SqrtP,
            (false, true) => Radical::SqrtQ,
            (false, false) => Radical::SqrtPQ,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Radical::One => "sin a_PQ",
            Radical::SqrtP => "sqrt(P) sin a_PQ",
            Radical::SqrtQ => "sqrt(Q) sin a_PQ",
            Radical::SqrtPQ => "sqrt(PQ) sin a_PQ",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamEntry {
    pub prime: Poly,
    pub degree: usize,
    pub paired: bool,
    /// `v_L(u) mod w`.
    pub vbar: u64,
    /// Ramification index of `L` in `K̃/K`.
    pub e: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairParity {
    pub p: Poly,
    pub q: Poly,
    pub p_degree_even: bool,
    pub q_degree_even: bool,
    pub radical: Radical,
}

/// Ramification of the finite primes of the conductor in `K̃/K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamTable {
    pub entries: Vec<RamEntry>,
    pub parity: Vec<PairParity>,
}

impl RamTable {
    pub fn get(&self, prime: &Poly) -> Option<&RamEntry> {
        self.entries.iter().find(|e| &e.prime == prime)
    }

    pub fn e(&self, prime: &Poly) -> Option<u64> {
        self.get(prime).map(|e| e.e)
    }
}

/// `w / gcd(w, v)`, with `gcd(w, 0) = w`.
fn index_from_valuation(w: u64, v: u64) -> u64 {
    w / w.gcd(&v)
}

fn log_symbol_over_product(
    ctx: &FieldCtx,
    c: &Conductor,
    top: &Poly,
    lower: &[Poly],
) -> Result<u64> {
    let factors: Vec<PrimePower> = lower
        .iter()
        .map(|l| {
            c.prime_power(l)
                .map(|pp| PrimePower {
                    exp: 1,
                    ..pp.clone()
                })
                .ok_or_else(|| Error::PrimeNotInConductor(l.to_string()))
        })
        .collect::<Result<_>>()?;
    let product = factors
        .iter()
        .fold(Poly::one(), |acc, pp| acc.mul(&pp.prime, ctx));
    Ok(jacobi_symbol(ctx, top, &product, &factors)?.dlog)
}

pub fn ramification_table(ctx: &FieldCtx, c: &Conductor, ps: &PairSet) -> Result<RamTable> {
    let w = ctx.w();
    let entries = c
        .factors()
        .iter()
        .map(|pp| {
            let l = &pp.prime;
            let plus = log_symbol_over_product(ctx, c, l, ps.firsts(l))?;
            let minus = log_symbol_over_product(ctx, c, l, ps.seconds(l))?;
            let vbar = (plus + w - minus) % w;
            Ok(RamEntry {
                prime: l.clone(),
                degree: pp.degree,
                paired: ps.is_paired(l),
                vbar,
                e: index_from_valuation(w, vbar),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let parity = ps
        .pairs()
        .iter()
        .map(|(p, q)| PairParity {
            p: p.clone(),
            q: q.clone(),
            p_degree_even: p.deg() % 2 == 0,
            q_degree_even: q.deg() % 2 == 0,
            radical: Radical::for_degrees(p.deg(), q.deg()),
        })
        .collect();
    Ok(RamTable { entries, parity })
}

/// Single pair, straight from the residue symbols:
/// `e_P = w/(w, log_γ(P/Q))`, `e_Q = w/(w, log_γ(Q/P))`.
pub fn single_pair_indices(ctx: &FieldCtx, p: &Poly, q: &Poly) -> Result<(u64, u64)> {
    let w = ctx.w();
    let p_over_q = residue_symbol(ctx, p, q, true)?.dlog;
    let q_over_p = residue_symbol(ctx, q, p, true)?.dlog;
    Ok((w / w.gcd(&p_over_q), w / w.gcd(&q_over_p)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub p: Poly,
    pub q: Poly,
    pub d_p: usize,
    pub d_q: usize,
    pub e_p: u64,
    pub e_q: u64,
    /// `2 | d_P d_Q`.
    pub applicable: bool,
    pub passed: bool,
}

/// Checks `e_P = e_Q` whenever `d_P d_Q` is even; vacuous otherwise.
pub fn parity_consistency(ps: &PairSet, rt: &RamTable) -> Result<ParityReport> {
    let [(p, q)] = ps.pairs() else {
        return Err(Error::OnlySinglePairSupported);
    };
    let lookup = |l: &Poly| {
        rt.e(l)
            .ok_or_else(|| Error::Inconsistent(format!("{l} missing from ramification table")))
    };
    let (e_p, e_q) = (lookup(p)?, lookup(q)?);
    let applicable = (p.deg() * q.deg()) % 2 == 0;
    Ok(ParityReport {
        p: p.clone(),
        q: q.clone(),
        d_p: p.deg(),
        d_q: q.deg(),
        e_p,
        e_q,
        applicable,
        passed: !applicable || e_p == e_q,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub prime: Poly,
    /// `ord σ_L = |L| − 1`.
    pub base_order: BigUint,
    /// Ramification index of `L` in `K̃/K`.
    pub ramification: u64,
    /// `ord σ̃_L = e(L) · ord σ_L`.
    pub lift_order: BigUint,
    /// Commutes with every generator.
    pub central: bool,
}

/// `σ̃_P σ̃_Q = σ̃_Q σ̃_P ε^{epsilon_exponent}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub p: Poly,
    pub q: Poly,
    pub epsilon_exponent: i64,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma[{p}] sigma[{q}] = sigma[{q}] sigma[{p}] epsilon^{e}",
            p = self.p,
            q = self.q,
            e = self.epsilon_exponent
        )
    }
}

/// `Gal(K̃/k) = G̃^{(p)} × ⟨σ̃_{P_1}, …, σ̃_{P_n}, ε⟩` by generators and relations.
///
/// All generators commute except for one relation per pair; `ε` and the
/// p-Sylow part are central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub epsilon_order: u64,
    pub p_part_order: BigUint,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    /// `w · Φ(M)`.
    pub group_order: BigUint,
}

impl GroupPresentation {
    pub fn generator(&self, prime: &Poly) -> Option<&Generator> {
        self.generators.iter().find(|g| &g.prime == prime)
    }
}

pub fn presentation(ctx: &FieldCtx, c: &Conductor, ps: &PairSet) -> Result<GroupPresentation> {
    let rt = ramification_table(ctx, c, ps)?;
    presentation_from_table(ctx, c, ps, &rt)
}

pub fn presentation_from_table(
    ctx: &FieldCtx,
    c: &Conductor,
    ps: &PairSet,
    rt: &RamTable,
) -> Result<GroupPresentation> {
    let gs = galois_structure(c);
    let generators = c
        .factors()
        .iter()
        .zip(&gs.cyclic_parts)
        .map(|(pp, base)| {
            let entry = rt
                .get(&pp.prime)
                .ok_or_else(|| Error::Inconsistent(format!("{} missing", pp.prime)))?;
            let paired = ps.is_paired(&pp.prime);
            if !paired && entry.e != 1 {
                return Err(Error::Inconsistent(format!(
                    "unpaired prime {} ramifies",
                    pp.prime
                )));
            }
            Ok(Generator {
                name: format!("sigma[{}]", pp.prime),
                prime: pp.prime.clone(),
                base_order: base.clone(),
                ramification: entry.e,
                lift_order: base * entry.e,
                central: !paired,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let relations = ps
        .pairs()
        .iter()
        .map(|(p, q)| Relation {
            p: p.clone(),
            q: q.clone(),
            epsilon_exponent: -1,
        })
        .collect();
    Ok(GroupPresentation {
        epsilon_order: ctx.w(),
        p_part_order: gs.p_part_order,
        generators,
        relations,
        group_order: gs.total_order * ctx.w(),
    })
}

/// Hasse's formula for the Kummer step `K̃/K` of degree `w` with constant
/// field `F_q` and unramified infinite primes:
/// `g̃ = 1 + w [g_K − 1 + ½ Σ_L (1 − 1/e(L)) d_L Φ(M/L^{r_L})]`,
/// summed over the distinct primes occurring in some pair.
pub fn genus_quasi(
    ctx: &FieldCtx,
    c: &Conductor,
    ps: &PairSet,
    g_k: &BigUint,
    rt: &RamTable,
) -> Result<BigUint> {
    let w = BigInt::from(ctx.w());
    let mut bracket = BigRational::from_integer(BigInt::from(g_k.clone()) - 1);
    for l in ps.paired_primes() {
        let i = c
            .index_of(l)
            .ok_or_else(|| Error::PrimeNotInConductor(l.to_string()))?;
        let e = rt
            .e(l)
            .ok_or_else(|| Error::Inconsistent(format!("{l} missing from ramification table")))?;
        let weight = BigRational::new(BigInt::from(e - 1), BigInt::from(2 * e));
        bracket += weight * BigInt::from(l.deg() as u64 * c.phi_cofactor(i));
    }
    let g = BigRational::from_integer(BigInt::from(1)) + bracket * w;
    genus_from_rational(g, "g_K~")
}

/// Riemann–Hurwitz for the tame step `K̃/K`:
/// `2g̃ − 2 = w(2g_K − 2) + Σ_L (e(L) − 1)(w/e(L)) d_L f_L g_L`, `f_L g_L = Φ(M/L^{r_L})`.
pub fn genus_quasi_assembly(
    ctx: &FieldCtx,
    c: &Conductor,
    g_k: &BigUint,
    rt: &RamTable,
) -> Result<BigUint> {
    let w = ctx.w();
    let mut two_g_minus_two = BigInt::from(w) * (BigInt::from(g_k.clone()) * 2 - 2);
    for (i, entry) in rt.entries.iter().enumerate() {
        if entry.e == 1 {
            continue;
        }
        let pp = &c.factors()[i];
        debug_assert_eq!(pp.prime, entry.prime);
        if !w.is_multiple_of(entry.e) {
            return Err(Error::Inconsistent(format!(
                "e = {} does not divide w",
                entry.e
            )));
        }
        // each prime of K over L splits into w/e primes of K̃, each with different exponent e − 1
        let primes_above_degree = BigUint::from(pp.degree) * c.phi_cofactor(i);
        two_g_minus_two +=
            BigInt::from((entry.e - 1) * (w / entry.e)) * BigInt::from(primes_above_degree);
    }
    let two_g: BigInt = two_g_minus_two + 2;
    if two_g.is_odd() || two_g.is_negative() {
        return Err(Error::NonIntegerGenus(format!("2 g_K~ = {two_g}")));
    }
    Ok((two_g / 2u32).to_biguint().expect("nonnegative"))
}

/// `1 + w (g_K − 1)`, the genus of `K̃` if no finite prime ramified.
/// Negative when `g_K = 0`: a genus-zero `K` admits no such extension.
pub fn unramified_genus(w: u64, g_k: &BigUint) -> BigInt {
    BigInt::from(1) + BigInt::from(w) * (BigInt::from(g_k.clone()) - 1)
}
