//! The (q−1)-th power residue symbol `(A/R) ≡ A^{(|R|−1)/(q−1)} mod R`.

use num_bigint::BigUint;

use crate::algebra::{FieldCtx, FqElem, Poly, PrimePower};
use crate::error::{Error, Result};

/// A value of the residue symbol in F_q* with its discrete log.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolValue {
    pub value: FqElem,
    pub dlog: u64,
}

impl SymbolValue {
    pub fn new(ctx: &FieldCtx, value: FqElem) -> Result<Self> {
        Ok(SymbolValue {
            value,
            dlog: ctx.dlog(value)?,
        })
    }

    pub fn one() -> Self {
        SymbolValue {
            value: FqElem::ONE,
            dlog: 0,
        }
    }

    pub fn mul(self, other: SymbolValue, ctx: &FieldCtx) -> SymbolValue {
        SymbolValue {
            value: ctx.mul(self.value, other.value),
            dlog: (self.dlog + other.dlog) % ctx.w(),
        }
    }

    pub fn pow(self, n: u32, ctx: &FieldCtx) -> SymbolValue {
        SymbolValue {
            value: ctx.pow(self.value, n as u64),
            dlog: (self.dlog * n as u64) % ctx.w(),
        }
    }
}

/// `(a / r)` for a monic irreducible `r` not dividing `a`.
///
/// With `validate` set, `r` is checked for being monic irreducible first;
/// callers holding a certified factorization can skip it.
pub fn residue_symbol(ctx: &FieldCtx, a: &Poly, r: &Poly, validate: bool) -> Result<SymbolValue> {
    if validate && (r.is_constant() || !r.is_monic() || !r.is_irreducible(ctx)?) {
        return Err(Error::NotPrimeModulus(r.to_string()));
    }
    if r.is_constant() {
        return Err(Error::NotPrimeModulus(r.to_string()));
    }
    let reduced = a.rem(r, ctx)?;
    if reduced.is_zero() {
        return Err(Error::NotCoprime);
    }
    let exponent = (r.norm(ctx) - 1u32) / BigUint::from(ctx.w());
    let power = reduced.powmod(&exponent, r, ctx)?;
    if !power.is_constant() || power.is_zero() {
        // only possible when r is not actually prime
        return Err(Error::NotPrimeModulus(r.to_string()));
    }
    SymbolValue::new(ctx, power.coeff(0))
}

/// `(a / b)` for composite monic `b = ∏ L_i^{r_i}`, extended multiplicatively
/// with multiplicity. `(a / 1) = 1`.
pub fn jacobi_symbol(
    ctx: &FieldCtx,
    a: &Poly,
    b: &Poly,
    b_factors: &[PrimePower],
) -> Result<SymbolValue> {
    let expanded = b_factors
        .iter()
        .fold(Poly::one(), |acc, pp| acc.mul(&pp.expand(ctx), ctx));
    if &expanded != b {
        return Err(Error::BadFactorization);
    }
    if b.is_one() {
        return Ok(SymbolValue::one());
    }
    if !a.gcd(b, ctx)?.is_one() {
        return Err(Error::NotCoprime);
    }
    b_factors.iter().try_fold(SymbolValue::one(), |acc, pp| {
        let s = residue_symbol(ctx, a, &pp.prime, false)?;
        Ok(acc.mul(s.pow(pp.exp, ctx), ctx))
    })
}

/// Both sides of the reciprocity law `(Q/P) = (−1)^{d_P d_Q} (P/Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReciprocityCheck {
    /// `(Q/P)`.
    pub lhs: FqElem,
    /// `(−1)^{d_P d_Q} (P/Q)`.
    pub rhs: FqElem,
}

impl ReciprocityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn reciprocity_sides(ctx: &FieldCtx, p1: &Poly, p2: &Poly) -> Result<ReciprocityCheck> {
    if p1 == p2 {
        return Err(Error::EqualPrimes);
    }
    let lhs = residue_symbol(ctx, p2, p1, true)?.value;
    let forward = residue_symbol(ctx, p1, p2, true)?.value;
    let sign = if (p1.deg() * p2.deg()).is_multiple_of(2) {
        FqElem::ONE
    } else {
        ctx.from_int(-1)
    };
    Ok(ReciprocityCheck {
        lhs,
        rhs: ctx.mul(sign, forward),
    })
}

/// Evaluates both sides of the reciprocity law independently and compares.
pub fn check_reciprocity(ctx: &FieldCtx, p1: &Poly, p2: &Poly) -> Result<bool> {
    Ok(reciprocity_sides(ctx, p1, p2)?.holds())
}
