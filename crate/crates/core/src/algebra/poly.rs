//! Dense polynomials over F_q.
//!
//! `Poly` stores coefficients in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial and the last entry
//! is nonzero otherwise. Arithmetic takes the field context explicitly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::algebra::field::{FieldCtx, FqElem};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(FqElem::ONE)
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        Poly::monomial(FqElem::ONE, 1)
    }

    pub fn constant(c: FqElem) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: FqElem, k: usize) -> Self {
        let mut coeffs = vec![FqElem::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from ascending coefficient encodings.
    pub fn from_encs(ctx: &FieldCtx, encs: &[u64]) -> Result<Self> {
        let coeffs = encs
            .iter()
            .map(|&c| ctx.elem(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// `T - a`.
    pub fn linear(ctx: &FieldCtx, a: FqElem) -> Self {
        Poly::from_coeffs(vec![ctx.neg(a), FqElem::ONE])
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn encs(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.enc()).collect()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only meaningful for nonzero inputs.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn add(&self, rhs: &Poly, ctx: &FieldCtx) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| ctx.add(self.coeff(i), rhs.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, ctx: &FieldCtx) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| ctx.neg(c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly, ctx: &FieldCtx) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| ctx.sub(self.coeff(i), rhs.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: FqElem, ctx: &FieldCtx) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, rhs: &Poly, ctx: &FieldCtx) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, n: u32, ctx: &FieldCtx) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self, ctx))
    }

    /// Euclidean division: `self = quot · b + rem` with `deg rem < deg b`.
    pub fn divrem(&self, b: &Poly, ctx: &FieldCtx) -> Result<(Poly, Poly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = ctx.inv(b.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FqElem::ZERO; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let f = ctx.mul(c, lead_inv);
            quot[top - db] = f;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let k = top - db + j;
                rem[k] = ctx.sub(rem[k], ctx.mul(f, bj));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, b: &Poly, ctx: &FieldCtx) -> Result<Poly> {
        Ok(self.divrem(b, ctx)?.1)
    }

    /// Exact division; the caller guarantees `b | self`.
    pub(crate) fn div_exact(&self, b: &Poly, ctx: &FieldCtx) -> Poly {
        let (quot, rem) = self.divrem(b, ctx).expect("nonzero divisor");
        debug_assert!(rem.is_zero());
        quot
    }

    /// Splits off the leading coefficient: returns `(lc, self / lc)`.
    pub fn monic_part(&self, ctx: &FieldCtx) -> (FqElem, Poly) {
        if self.is_zero() {
            return (FqElem::ZERO, Poly::zero());
        }
        let lc = self.leading();
        let inv = ctx.inv(lc).expect("nonzero leading coefficient");
        (lc, self.scale(inv, ctx))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, b: &Poly, ctx: &FieldCtx) -> Result<Poly> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b, ctx)?;
            a = b;
            b = r;
        }
        Ok(a.monic_part(ctx).1)
    }

    /// `self^n mod m` by square-and-multiply.
    pub fn powmod(&self, n: &BigUint, m: &Poly, ctx: &FieldCtx) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if m.is_constant() {
            return Err(Error::ConstantInput);
        }
        let mut acc = Poly::one();
        let base = self.rem(m, ctx)?;
        for i in (0..n.bits()).rev() {
            acc = acc.mul(&acc, ctx).rem(m, ctx)?;
            if n.bit(i) {
                acc = acc.mul(&base, ctx).rem(m, ctx)?;
            }
        }
        Ok(acc)
    }

    pub fn powmod_u64(&self, n: u64, m: &Poly, ctx: &FieldCtx) -> Result<Poly> {
        self.powmod(&BigUint::from(n), m, ctx)
    }

    pub fn derivative(&self, ctx: &FieldCtx) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| ctx.mul(ctx.from_int(i as i64), c))
                .collect(),
        )
    }

    /// `|self| = q^deg`, the norm of a nonzero polynomial.
    pub fn norm(&self, ctx: &FieldCtx) -> BigUint {
        BigUint::from(ctx.q()).pow(self.deg() as u32)
    }

    /// All monic polynomials of degree exactly `k`, in canonical order.
    pub fn monic_of_degree(ctx: &FieldCtx, k: usize) -> MonicIter {
        MonicIter {
            q: ctx.q(),
            digits: vec![0; k],
            done: false,
        }
    }

    /// Every polynomial (including zero) of degree `< n`, in canonical order.
    pub fn all_below(ctx: &FieldCtx, n: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero()];
        for k in 0..n {
            for m in Poly::monic_of_degree(ctx, k) {
                out.extend(ctx.elements().skip(1).map(|c| m.scale(c, ctx)));
            }
        }
        out
    }

    /// Parses the text syntax `2*T^3+T+1`. Coefficients are field element
    /// encodings; terms are `c`, `T`, `T^k`, `c*T` or `c*T^k` joined by `+`.
    /// Whitespace is ignored; repeated degrees are summed.
    pub fn parse(input: &str, ctx: &FieldCtx) -> Result<Poly> {
        let err = |reason: &str| Error::PolyParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut acc = Poly::zero();
        for term in s.split('+') {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coeff, power) = match term.split_once('*') {
                Some((c, t)) => (Some(c), Some(t)),
                None if term.starts_with('T') => (None, Some(term)),
                None => (Some(term), None),
            };
            let c = match coeff {
                Some(c) => {
                    let v: u64 = c.parse().map_err(|_| err("bad coefficient"))?;
                    ctx.elem(v).map_err(|_| err("coefficient out of range"))?
                }
                None => FqElem::ONE,
            };
            let k = match power {
                None => 0,
                Some("T") => 1,
                Some(t) => {
                    let exp = t
                        .strip_prefix("T^")
                        .ok_or_else(|| err("expected T or T^k"))?;
                    exp.parse::<usize>().map_err(|_| err("bad exponent"))?
                }
            };
            acc = acc.add(&Poly::monomial(c, k), ctx);
        }
        Ok(acc)
    }
}

/// Odometer over the lower coefficients of monic polynomials of fixed degree.
#[derive(Clone, Debug)]
pub struct MonicIter {
    q: u64,
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for MonicIter {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.done {
            return None;
        }
        let mut coeffs: Vec<FqElem> = Vec::with_capacity(self.digits.len() + 1);
        coeffs.extend(self.digits.iter().map(|&d| FqElem::from_raw(d)));
        coeffs.push(FqElem::ONE);
        let out = Poly { coeffs };
        self.done = true;
        for d in self.digits.iter_mut() {
            *d += 1;
            if (*d as u64) < self.q {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

/// Every monic polynomial of degree `0, 1, …, d - 1`, each once, in canonical order.
pub fn enumerate_monic_below(ctx: &FieldCtx, d: usize) -> Result<impl Iterator<Item = Poly>> {
    if d == 0 {
        return Err(Error::NonpositiveBound);
    }
    let ctx = ctx.clone();
    Ok((0..d).flat_map(move |k| Poly::monic_of_degree(&ctx, k)))
}

/// Canonical total order: by degree first (zero lowest), then coefficients
/// from the highest degree downward compared by encoding.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text form: descending degree, zero terms omitted, unit
/// coefficients omitted on nonconstant terms, `0` for the zero polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "T")?,
                (1, false) => write!(f, "{c}*T")?,
                (_, true) => write!(f, "T^{k}")?,
                (_, false) => write!(f, "{c}*T^{k}")?,
            }
        }
        Ok(())
    }
}

/// Product of `factors[i]^exps[i]`.
pub fn product<'a>(ctx: &FieldCtx, factors: impl IntoIterator<Item = (&'a Poly, u32)>) -> Poly {
    factors
        .into_iter()
        .fold(Poly::one(), |acc, (f, r)| acc.mul(&f.pow(r, ctx), ctx))
}
