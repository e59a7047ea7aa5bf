//! The cyclotomic layer `K = k(Λ_M)` of conductor `M`.
//!
//! `Gal(K/k) ≅ (A/M)*` splits as a p-part of order `∏ |P_i|^{r_i−1}` times
//! cyclic factors of order `|P_i| − 1`. The genus of `K` comes out of two
//! separate routes: the closed form in terms of Φ and the per-prime
//! different coefficients `s_i`, and a direct Riemann–Hurwitz assembly of
//! the different divisor of `K/k`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{factor, phi, FieldCtx, Poly, PrimePower};
use crate::error::{Error, Result};

/// How a conductor is supplied.
#[derive(Clone, Debug)]
pub enum ConductorInput {
    /// Claimed factorization `[(P_i, r_i)]`; every `P_i` is verified.
    Factored(Vec<(Poly, u32)>),
    /// A monic polynomial, factored internally.
    Unfactored(Poly),
}

/// A factored monic nonconstant conductor `M = ∏ P_i^{r_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conductor {
    factors: Vec<PrimePower>,
    modulus: Poly,
    phi: BigUint,
}

impl Conductor {
    /// Validates and normalizes a conductor. `seed` drives the randomized
    /// factorization step for unfactored input.
    pub fn new(ctx: &FieldCtx, input: ConductorInput, seed: u64) -> Result<Self> {
        let mut factors = match input {
            ConductorInput::Unfactored(m) => {
                if m.is_constant() {
                    return Err(Error::ConstantConductor);
                }
                if !m.is_monic() {
                    return Err(Error::NotMonic(m.to_string()));
                }
                factor(&m, ctx, seed)?.factors
            }
            ConductorInput::Factored(list) => {
                if list.is_empty() {
                    return Err(Error::ConstantConductor);
                }
                list.into_iter()
                    .map(|(prime, exp)| PrimePower::new(ctx, prime, exp))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        factors.sort_by(|a, b| a.prime.cmp(&b.prime));
        if let Some(w) = factors.windows(2).find(|w| w[0].prime == w[1].prime) {
            return Err(Error::DuplicatePrime(w[0].prime.to_string()));
        }
        Ok(Conductor::from_sorted(ctx, factors))
    }

    pub fn from_poly(ctx: &FieldCtx, m: &Poly) -> Result<Self> {
        Conductor::new(ctx, ConductorInput::Unfactored(m.clone()), 0)
    }

    fn from_sorted(ctx: &FieldCtx, factors: Vec<PrimePower>) -> Self {
        let modulus = factors
            .iter()
            .fold(Poly::one(), |acc, pp| acc.mul(&pp.expand(ctx), ctx));
        let phi = phi(&factors);
        Conductor {
            factors,
            modulus,
            phi,
        }
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// The monic product `M`.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn phi(&self) -> &BigUint {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn index_of(&self, prime: &Poly) -> Option<usize> {
        self.factors.binary_search_by(|pp| pp.prime.cmp(prime)).ok()
    }

    pub fn prime_power(&self, prime: &Poly) -> Option<&PrimePower> {
        self.index_of(prime).map(|i| &self.factors[i])
    }

    /// `Φ(M / P_i^{r_i})`, the order of the part of `(A/M)*` prime to `P_i`.
    pub fn phi_cofactor(&self, i: usize) -> BigUint {
        self.factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, pp)| pp.norm.pow(pp.exp - 1) * (&pp.norm - 1u32))
            .product()
    }
}

/// Orders of the pieces of `G = G^{(p)} × ⟨σ_{P_1}⟩ × ⋯ × ⟨σ_{P_n}⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStructure {
    /// `ord σ_{P_i} = |P_i| − 1`, in conductor order.
    pub cyclic_parts: Vec<BigUint>,
    /// `|G^{(p)}| = ∏ |P_i|^{r_i − 1}`.
    pub p_part_order: BigUint,
    /// `|G| = Φ(M)`.
    pub total_order: BigUint,
}

pub fn galois_structure(c: &Conductor) -> GStructure {
    let cyclic_parts: Vec<BigUint> = c.factors.iter().map(|pp| &pp.norm - 1u32).collect();
    let p_part_order: BigUint = c.factors.iter().map(|pp| pp.norm.pow(pp.exp - 1)).product();
    let total_order = c.phi.clone();
    assert_eq!(
        &p_part_order * cyclic_parts.iter().product::<BigUint>(),
        total_order,
        "|G| = |G^(p)| · ∏ (|P_i| − 1)"
    );
    GStructure {
        cyclic_parts,
        p_part_order,
        total_order,
    }
}

/// Data of the different divisor of `K/k` at one finite prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDifferent {
    pub prime: Poly,
    pub degree: usize,
    pub exp: u32,
    /// Coefficient of every prime of `K` above `P_i`: `r Φ(P^r) − q^{d(r−1)}`.
    pub s: BigUint,
    /// `Φ(M / P_i^{r_i})`, the number of primes above `P_i` times their residue degree.
    pub phi_co: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentData {
    pub local: Vec<LocalDifferent>,
    /// `Φ(M)/(q−1)` infinite primes of `K`, each of degree one.
    pub infinite_count: BigUint,
    /// Different coefficient `q − 2` at each infinite prime (tame, e = q − 1).
    pub infinite_coeff: u64,
}

pub fn different_data(ctx: &FieldCtx, c: &Conductor) -> DifferentData {
    let local = c
        .factors
        .iter()
        .enumerate()
        .map(|(i, pp)| {
            let unit_part = pp.norm.pow(pp.exp - 1);
            let phi_local = &unit_part * (&pp.norm - 1u32);
            LocalDifferent {
                prime: pp.prime.clone(),
                degree: pp.degree,
                exp: pp.exp,
                s: BigUint::from(pp.exp) * phi_local - unit_part,
                phi_co: c.phi_cofactor(i),
            }
        })
        .collect();
    let (infinite_count, rem) = c.phi.div_rem(&BigUint::from(ctx.w()));
    assert!(rem.is_zero(), "q − 1 divides Φ(M)");
    DifferentData {
        local,
        infinite_count,
        infinite_coeff: ctx.q() - 2,
    }
}

fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Converts an exact rational genus to a natural number, rejecting anything else.
pub(crate) fn genus_from_rational(g: BigRational, what: &str) -> Result<BigUint> {
    if !g.is_integer() || g.is_negative() {
        return Err(Error::NonIntegerGenus(format!("{what} = {g}")));
    }
    Ok(g.to_integer().to_biguint().expect("nonnegative"))
}

/// `g_K = [(q−2)/(2(q−1)) − 1] Φ(M) + ½ Σ s_i d_i Φ(M/P_i^{r_i}) + 1`.
pub fn genus_k_closed(ctx: &FieldCtx, c: &Conductor) -> Result<BigUint> {
    let q = ctx.q() as i64;
    let dd = different_data(ctx, c);
    let coeff = BigRational::new(BigInt::from(q - 2), BigInt::from(2 * (q - 1))) - rational(1);
    let phi = rational(BigInt::from(c.phi.clone()));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let local_sum: BigInt = dd
        .local
        .iter()
        .map(|l| BigInt::from(&l.s * l.degree * &l.phi_co))
        .sum();
    let g = coeff * phi + half * rational(local_sum) + rational(1);
    genus_from_rational(g, "g_K")
}

/// Riemann–Hurwitz for `K/k` with `g_k = 0`:
/// `2g_K − 2 = −2Φ(M) + Σ_i s_i d_i Φ(M/P_i^{r_i}) + (q−2)·Φ(M)/(q−1)`.
pub fn genus_k_assembly(ctx: &FieldCtx, c: &Conductor) -> Result<BigUint> {
    let dd = different_data(ctx, c);
    let degree_k_over_k = BigInt::from(c.phi.clone());
    let mut two_g_minus_two = -BigInt::from(2) * &degree_k_over_k;
    for l in &dd.local {
        // every prime of K above P_i has coefficient s_i; together they have degree d_i Φ(M/P_i^{r_i})
        two_g_minus_two += BigInt::from(&l.s * l.degree * &l.phi_co);
    }
    two_g_minus_two += BigInt::from(dd.infinite_coeff) * BigInt::from(dd.infinite_count);
    let two_g: BigInt = two_g_minus_two + 2;
    if two_g.is_odd() || two_g.is_negative() {
        return Err(Error::NonIntegerGenus(format!("2 g_K = {two_g}")));
    }
    Ok((two_g / 2u32).to_biguint().expect("nonnegative"))
}

/// Small-value convenience used in examples and tests.
pub fn genus_k_u64(ctx: &FieldCtx, c: &Conductor) -> Result<u64> {
    genus_k_closed(ctx, c)?
        .to_u64()
        .ok_or_else(|| Error::Inconsistent("genus exceeds u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FieldCtx {
        FieldCtx::with_order(q).unwrap()
    }

    fn p(ctx: &FieldCtx, s: &str) -> Poly {
        Poly::parse(s, ctx).unwrap()
    }

    fn cond(ctx: &FieldCtx, s: &str) -> Conductor {
        Conductor::from_poly(ctx, &p(ctx, s)).unwrap()
    }

    #[test]
    fn conductor_from_factors_and_poly() {
        let ctx = f(3);
        let c = Conductor::new(
            &ctx,
            ConductorInput::Factored(vec![(p(&ctx, "T+1"), 1), (p(&ctx, "T"), 1)]),
            0,
        )
        .unwrap();
        assert_eq!(c.phi(), &BigUint::from(4u32));
        assert_eq!(c.modulus().to_string(), "T^2+T");
        assert_eq!(c.factors()[0].prime.to_string(), "T");

        let c = cond(&ctx, "T^2+2*T+1");
        assert_eq!(c.factors().len(), 1);
        assert_eq!(
            (c.factors()[0].prime.to_string(), c.factors()[0].exp),
            ("T+1".into(), 2)
        );
        assert_eq!(c.phi(), &BigUint::from(6u32));
    }

    #[test]
    fn conductor_errors() {
        let ctx = f(3);
        let factored = |v: Vec<(&str, u32)>| {
            Conductor::new(
                &ctx,
                ConductorInput::Factored(v.into_iter().map(|(s, r)| (p(&ctx, s), r)).collect()),
                0,
            )
        };
        assert!(matches!(
            factored(vec![("T^2+2", 1)]),
            Err(Error::ReducibleClaimedPrime(_))
        ));
        assert!(matches!(
            factored(vec![("T", 1), ("T", 2)]),
            Err(Error::DuplicatePrime(_))
        ));
        assert!(matches!(factored(vec![]), Err(Error::ConstantConductor)));
        assert!(matches!(
            Conductor::from_poly(&ctx, &p(&ctx, "2*T+1")),
            Err(Error::NotMonic(_))
        ));
        assert!(matches!(
            Conductor::from_poly(&ctx, &p(&ctx, "1")),
            Err(Error::ConstantConductor)
        ));
    }

    #[test]
    fn galois_structure_examples() {
        let ctx = f(3);
        let g = galois_structure(&cond(&ctx, "T"));
        assert_eq!(g.cyclic_parts, vec![BigUint::from(2u32)]);
        assert_eq!((g.p_part_order, g.total_order), (1u32.into(), 2u32.into()));
        let g = galois_structure(&cond(&ctx, "T^2"));
        assert_eq!((g.p_part_order, g.total_order), (3u32.into(), 6u32.into()));
        // T (T^2 + 1)
        let g = galois_structure(&cond(&ctx, "T^3+T"));
        assert_eq!(
            g.cyclic_parts,
            vec![BigUint::from(2u32), BigUint::from(8u32)]
        );
        assert_eq!((g.p_part_order, g.total_order), (1u32.into(), 16u32.into()));
    }

    #[test]
    fn different_coefficients() {
        let ctx = f(3);
        let s = |m: &str| different_data(&ctx, &cond(&ctx, m)).local[0].s.clone();
        assert_eq!(s("T"), 1u32.into());
        assert_eq!(s("T^2"), 9u32.into());
        assert_eq!(s("T^2+1"), 7u32.into());
        let dd = different_data(&ctx, &cond(&ctx, "T^2+T"));
        assert_eq!(dd.infinite_count, 2u32.into());
        assert_eq!(dd.infinite_coeff, 1);
        assert_eq!(dd.local[0].phi_co, 2u32.into());
    }

    #[test]
    fn genus_examples_both_paths() {
        for (q, m, g) in [
            (3, "T", 0u32),
            (3, "T^2+T", 0),
            (3, "T^2+1", 2),
            (5, "T", 0),
        ] {
            let ctx = f(q);
            let c = cond(&ctx, m);
            assert_eq!(
                genus_k_closed(&ctx, &c).unwrap(),
                g.into(),
                "closed q={q} M={m}"
            );
            assert_eq!(
                genus_k_assembly(&ctx, &c).unwrap(),
                g.into(),
                "assembly q={q} M={m}"
            );
        }
    }

    #[test]
    fn genus_zero_for_linear_conductors() {
        for q in [3u64, 5, 7] {
            let ctx = f(q);
            for m in Poly::monic_of_degree(&ctx, 1) {
                let c = Conductor::from_poly(&ctx, &m).unwrap();
                assert!(genus_k_closed(&ctx, &c).unwrap().is_zero());
                assert!(genus_k_assembly(&ctx, &c).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn genus_paths_agree_over_f5_up_to_degree_3() {
        let ctx = f(5);
        for d in 1..=3 {
            for m in Poly::monic_of_degree(&ctx, d) {
                let c = Conductor::from_poly(&ctx, &m).unwrap();
                assert_eq!(
                    genus_k_closed(&ctx, &c).unwrap(),
                    genus_k_assembly(&ctx, &c).unwrap(),
                    "M = {m}"
                );
                assert_eq!(galois_structure(&c).total_order, *c.phi());
            }
        }
    }

    #[test]
    fn permutation_invariance() {
        let ctx = f(3);
        let parts = [("T", 2u32), ("T+1", 1), ("T^2+1", 1)];
        let a = Conductor::new(
            &ctx,
            ConductorInput::Factored(parts.iter().map(|&(s, r)| (p(&ctx, s), r)).collect()),
            0,
        )
        .unwrap();
        let b = Conductor::new(
            &ctx,
            ConductorInput::Factored(parts.iter().rev().map(|&(s, r)| (p(&ctx, s), r)).collect()),
            0,
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(genus_k_closed(&ctx, &a), genus_k_closed(&ctx, &b));
    }
}
