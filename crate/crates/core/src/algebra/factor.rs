//! Irreducibility testing and factorization in F_q[T].
//!
//! Factorization runs squarefree decomposition, then distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting driven by a
//! seeded ChaCha stream so results and timings are reproducible.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::{prime_factors, FieldCtx, FqElem};
use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// A monic irreducible polynomial with a positive exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: Poly,
    pub exp: u32,
    pub degree: usize,
    /// `|P| = q^deg P`.
    pub norm: BigUint,
}

impl PrimePower {
    /// Validating constructor: `prime` must be monic irreducible and `exp ≥ 1`.
    pub fn new(ctx: &FieldCtx, prime: Poly, exp: u32) -> Result<Self> {
        if exp == 0 {
            return Err(Error::ZeroExponent(prime.to_string()));
        }
        if prime.is_constant() {
            return Err(Error::ConstantInput);
        }
        if !prime.is_monic() {
            return Err(Error::NotMonic(prime.to_string()));
        }
        if !prime.is_irreducible(ctx)? {
            return Err(Error::ReducibleClaimedPrime(prime.to_string()));
        }
        Ok(PrimePower::certified(ctx, prime, exp))
    }

    /// For primes already certified by factorization.
    pub(crate) fn certified(ctx: &FieldCtx, prime: Poly, exp: u32) -> Self {
        let degree = prime.deg();
        let norm = prime.norm(ctx);
        PrimePower {
            prime,
            exp,
            degree,
            norm,
        }
    }

    /// `prime^exp`.
    pub fn expand(&self, ctx: &FieldCtx) -> Poly {
        self.prime.pow(self.exp, ctx)
    }
}

/// `f = leading · ∏ prime_i^{exp_i}`, primes sorted in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: FqElem,
    pub factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn expand(&self, ctx: &FieldCtx) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.leading), |acc, pp| {
                acc.mul(&pp.expand(ctx), ctx)
            })
    }
}

/// `T^{q^k} mod f`, iterated Frobenius on `T`.
fn frobenius_power(t_mod_f: &Poly, k: usize, f: &Poly, ctx: &FieldCtx) -> Result<Poly> {
    let mut h = t_mod_f.clone();
    for _ in 0..k {
        h = h.powmod_u64(ctx.q(), f, ctx)?;
    }
    Ok(h)
}

impl Poly {
    /// Rabin's test: `T^{q^n} ≡ T (mod f)` and `gcd(T^{q^{n/r}} - T, f) = 1`
    /// for every prime `r | n`.
    pub fn is_irreducible(&self, ctx: &FieldCtx) -> Result<bool> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let n = self.deg();
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic_part(ctx).1;
        let t = Poly::t().rem(&f, ctx)?;
        for r in prime_factors(n as u64) {
            let h = frobenius_power(&t, n / r as usize, &f, ctx)?;
            if !h.sub(&t, ctx).gcd(&f, ctx)?.is_one() {
                return Ok(false);
            }
        }
        Ok(frobenius_power(&t, n, &f, ctx)? == t)
    }
}

/// Replaces each coefficient `c_{pk}` by `c_{pk}^{1/p}` at index `k`.
/// The caller guarantees `f' = 0`.
fn pth_root_poly(f: &Poly, ctx: &FieldCtx) -> Poly {
    let p = ctx.p() as usize;
    Poly::from_coeffs(
        f.coeffs()
            .iter()
            .step_by(p)
            .map(|&c| ctx.pth_root(c))
            .collect(),
    )
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with the
/// `g` squarefree, pairwise coprime, and `f = ∏ g^i`.
pub fn squarefree_decomposition(f: &Poly, ctx: &FieldCtx) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative(ctx);
    let mut c = f.gcd(&df, ctx).expect("f nonzero");
    let mut w = f.div_exact(&c, ctx);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c, ctx).expect("w nonzero");
        let fac = w.div_exact(&y, ctx);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w, ctx);
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root_poly(&c, ctx);
        let p = ctx.p() as u32;
        out.extend(
            squarefree_decomposition(&root, ctx)
                .into_iter()
                .map(|(g, j)| (g, j * p)),
        );
    }
    out
}

/// Distinct-degree split of a monic squarefree polynomial: pairs `(g, d)`
/// where `g` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &Poly, ctx: &FieldCtx) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut d = 0usize;
    let t = Poly::t();
    let mut h = t.clone();
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod_u64(ctx.q(), &rest, ctx)?;
        let g = h.sub(&t, ctx).gcd(&rest, ctx)?;
        if !g.is_one() {
            rest = rest.div_exact(&g, ctx);
            h = h.rem(&rest, ctx)?;
            out.push((g, d));
        }
    }
    if !rest.is_one() {
        let deg = rest.deg();
        out.push((rest, deg));
    }
    Ok(out)
}

/// Cantor–Zassenhaus splitting of a monic squarefree product of degree-`d`
/// irreducibles. Requires odd `q`.
pub fn equal_degree<R: Rng>(f: &Poly, d: usize, ctx: &FieldCtx, rng: &mut R) -> Result<Vec<Poly>> {
    let n = f.deg();
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let exponent = (BigUint::from(ctx.q()).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = Poly::from_coeffs(
            (0..n)
                .map(|_| ctx.elem(rng.gen_range(0..ctx.q())).expect("in range"))
                .collect(),
        );
        if a.is_constant() {
            continue;
        }
        let mut g = a.gcd(f, ctx)?;
        if g.is_one() {
            let b = a.powmod(&exponent, f, ctx)?;
            g = b.sub(&Poly::one(), ctx).gcd(f, ctx)?;
        }
        if !g.is_one() && g.deg() < n {
            let other = f.div_exact(&g, ctx);
            let mut out = equal_degree(&g, d, ctx, rng)?;
            out.extend(equal_degree(&other, d, ctx, rng)?);
            return Ok(out);
        }
    }
}

/// Complete factorization with a seeded random source for the equal-degree step.
pub fn factor(f: &Poly, ctx: &FieldCtx, seed: u64) -> Result<Factorization> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (leading, monic) = f.monic_part(ctx);
    let mut factors = Vec::new();
    for (g, mult) in squarefree_decomposition(&monic, ctx) {
        for (h, d) in distinct_degree(&g, ctx)? {
            for prime in equal_degree(&h, d, ctx, &mut rng)? {
                factors.push(PrimePower::certified(ctx, prime, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.prime.cmp(&b.prime));
    Ok(Factorization { leading, factors })
}

/// `Φ(M) = |(A/M)*| = ∏ q^{d_i (r_i - 1)} (q^{d_i} - 1)`; the empty product is 1.
pub fn phi(factors: &[PrimePower]) -> BigUint {
    factors
        .iter()
        .map(|pp| pp.norm.pow(pp.exp - 1) * (&pp.norm - 1u32))
        .product()
}

/// Monic irreducibles of degree exactly `d`, in canonical order.
pub fn monic_irreducibles(ctx: &FieldCtx, d: usize) -> Vec<Poly> {
    Poly::monic_of_degree(ctx, d)
        .filter(|f| d >= 1 && f.is_irreducible(ctx).unwrap_or(false))
        .collect()
}
