//! The finite field F_q, q = p^e with p odd.
//!
//! Elements are stored by their canonical encoding `enc = Σ digit_i · p^i`,
//! where the digits are the coordinates in the polynomial basis
//! `1, x, …, x^{e-1}` of F_p[x]/(modulus). Multiplication goes through
//! discrete-log tables built once from the canonical generator γ.

use std::fmt;

use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// Largest supported field order. Log tables are O(q).
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of F_q, identified by its canonical encoding in `[0, q)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem(u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn enc(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }

    /// Caller guarantees `enc < q`.
    pub(crate) const fn from_raw(enc: u32) -> Self {
        FqElem(enc)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic context for F_q together with the fixed generator γ of F_q*.
///
/// Immutable after construction and safe to share between threads.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u64,
    e: u32,
    q: u64,
    modulus: Option<Vec<u64>>,
    gamma: FqElem,
    /// `exp_table[i] = γ^i` for `i < w`.
    exp_table: Vec<u32>,
    /// `log_table[x] = log_γ x` for `x != 0`.
    log_table: Vec<u32>,
}

impl FieldCtx {
    /// Builds F_{p^e}. `modulus` lists the ascending coefficients over F_p of a
    /// monic irreducible polynomial of degree `e`; it is required iff `e > 1`.
    pub fn new(p: u64, e: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime_u64(p) {
            return Err(Error::NonPrimeP(p));
        }
        if e == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let q128 = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q128 > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q128));
        }
        let q = q128 as u64;

        let modulus = match (e, modulus) {
            (1, None) => None,
            (1, Some(_)) => {
                return Err(Error::InvalidModulus("prime fields take no modulus".into()))
            }
            (_, None) => return Err(Error::MissingModulus(e)),
            (_, Some(m)) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {e}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficients must lie in [0, {p})"
                    )));
                }
                let base = FieldCtx::new(p, 1, None)?;
                let f = Poly::from_encs(&base, m)?;
                if !f.is_irreducible(&base)? {
                    return Err(Error::ReducibleModulus);
                }
                Some(m.to_vec())
            }
        };

        let mut ctx = FieldCtx {
            p,
            e,
            q,
            modulus,
            gamma: FqElem::ONE,
            exp_table: Vec::new(),
            log_table: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    /// Builds F_q from its order alone. For `q = p^e` with `e > 1` the
    /// modulus is the least monic irreducible of degree `e` over F_p in the
    /// canonical polynomial order.
    pub fn with_order(q: u64) -> Result<Self> {
        if q < 3 {
            return Err(Error::NotAFieldOrder(q));
        }
        let p = smallest_prime_factor(q);
        let mut e = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::NotAFieldOrder(q));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if e == 1 {
            return FieldCtx::new(p, 1, None);
        }
        let base = FieldCtx::new(p, 1, None)?;
        for f in Poly::monic_of_degree(&base, e as usize) {
            if f.is_irreducible(&base)? {
                let m: Vec<u64> = f.coeffs().iter().map(|c| c.enc()).collect();
                return FieldCtx::new(p, e, Some(&m));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build_tables(&mut self) {
        let w = self.q - 1;
        let w_primes = prime_factors(w);
        let gamma = (2..self.q)
            .chain(std::iter::once(1))
            .find(|&g| {
                let g = g as u32;
                self.raw_pow(g, w) == 1 && w_primes.iter().all(|&r| self.raw_pow(g, w / r) != 1)
            })
            .expect("F_q* is cyclic") as u32;
        self.gamma = FqElem(gamma);
        let mut exp_table = Vec::with_capacity(w as usize);
        let mut log_table = vec![0u32; self.q as usize];
        let mut x = 1u32;
        for i in 0..w as u32 {
            exp_table.push(x);
            log_table[x as usize] = i;
            x = self.raw_mul(x, gamma);
        }
        debug_assert_eq!(x, 1);
        self.exp_table = exp_table;
        self.log_table = log_table;
    }

    fn digits(&self, x: u32) -> Vec<u64> {
        let mut x = x as u64;
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn encode_digits(&self, digits: &[u64]) -> u32 {
        digits.iter().rev().fold(0u64, |acc, &d| acc * self.p + d) as u32
    }

    /// Schoolbook multiplication in F_p[x]/(modulus), used only to build the tables.
    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let Some(m) = &self.modulus else {
            return ((a as u64 * b as u64) % p) as u32;
        };
        let e = self.e as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (e..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate().take(e) {
                let k = top - e + j;
                prod[k] = (prod[k] + (p - c) * mj) % p;
            }
            prod[top] = 0;
        }
        self.encode_digits(&prod[..e])
    }

    fn raw_pow(&self, mut base: u32, mut n: u64) -> u32 {
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `w = q - 1`, the order of F_q*.
    pub fn w(&self) -> u64 {
        self.q - 1
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn gamma(&self) -> FqElem {
        self.gamma
    }

    pub fn elem(&self, enc: u64) -> Result<FqElem> {
        if enc < self.q {
            Ok(FqElem(enc as u32))
        } else {
            Err(Error::ElementOutOfRange(enc))
        }
    }

    /// Image of an integer under Z -> F_p ⊂ F_q.
    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.p as i64) as u32)
    }

    /// Iterator over all elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q as u32).map(FqElem)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.e == 1 {
            return FqElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FqElem(out as u32)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.e == 1 {
            return FqElem(((self.p - a.0 as u64) % self.p) as u32);
        }
        let mut x = a.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FqElem(out as u32)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.is_zero() || b.is_zero() {
            return FqElem::ZERO;
        }
        let w = self.w();
        let i = (self.log_table[a.0 as usize] as u64 + self.log_table[b.0 as usize] as u64) % w;
        FqElem(self.exp_table[i as usize])
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        let w = self.w();
        let i = (w - self.log_table[a.0 as usize] as u64) % w;
        Ok(FqElem(self.exp_table[i as usize]))
    }

    pub fn pow(&self, a: FqElem, n: u64) -> FqElem {
        if n == 0 {
            return FqElem::ONE;
        }
        if a.is_zero() {
            return FqElem::ZERO;
        }
        let w = self.w() as u128;
        let i = (self.log_table[a.0 as usize] as u128 * (n as u128 % w)) % w;
        FqElem(self.exp_table[i as usize])
    }

    /// γ^i for any integer i.
    pub fn gamma_pow(&self, i: i64) -> FqElem {
        let i = i.rem_euclid(self.w() as i64);
        FqElem(self.exp_table[i as usize])
    }

    /// log_γ x, the unique `i` in `[0, w)` with γ^i = x.
    pub fn dlog(&self, x: FqElem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::LogOfZero);
        }
        Ok(self.log_table[x.0 as usize] as u64)
    }

    /// The unique p-th root, `x^{q/p}`.
    pub fn pth_root(&self, x: FqElem) -> FqElem {
        self.pow(x, self.q / self.p)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(ctx: &FieldCtx, x: FqElem) -> u64 {
        let mut y = x;
        let mut k = 1;
        while !y.is_one() {
            y = FqElem(ctx.raw_mul(y.0, x.0));
            k += 1;
        }
        k
    }

    #[test]
    fn prime_field_generators() {
        let f3 = FieldCtx::new(3, 1, None).unwrap();
        assert_eq!((f3.q(), f3.w(), f3.gamma().enc()), (3, 2, 2));
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f5.gamma().enc(), 2);
        assert_eq!(order(&f5, f5.gamma()), 4);
        let f7 = FieldCtx::new(7, 1, None).unwrap();
        // 2 has order 3 mod 7, 3 is the first generator
        assert_eq!(f7.gamma().enc(), 3);
    }

    #[test]
    fn f9_generator_is_x_plus_one() {
        let f9 = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!((f9.q(), f9.w()), (9, 8));
        // x + 1 encodes as 1 + 1·3
        assert_eq!(f9.gamma().enc(), 4);
        let g = f9.gamma();
        assert_eq!(f9.pow(g, 4).enc(), 2);
        assert_eq!(f9.pow(g, 8), FqElem::ONE);
    }

    #[test]
    fn dlog_small_cases() {
        let f3 = FieldCtx::new(3, 1, None).unwrap();
        assert_eq!(f3.dlog(FqElem::ONE).unwrap(), 0);
        assert_eq!(f3.dlog(f3.elem(2).unwrap()).unwrap(), 1);
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f5.dlog(f5.elem(4).unwrap()).unwrap(), 2);
        assert_eq!(f5.dlog(FqElem::ZERO), Err(Error::LogOfZero));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldCtx::new(2, 1, None).unwrap_err(),
            Error::EvenCharacteristic
        );
        assert_eq!(FieldCtx::new(9, 1, None).unwrap_err(), Error::NonPrimeP(9));
        assert_eq!(
            FieldCtx::new(3, 2, None).unwrap_err(),
            Error::MissingModulus(2)
        );
        // T^2 + 2 = (T + 1)(T + 2) over F_3
        assert_eq!(
            FieldCtx::new(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(matches!(
            FieldCtx::new(3, 2, Some(&[1, 1])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldCtx::new(3, 0, None),
            Err(Error::ZeroExtensionDegree)
        ));
    }

    #[test]
    fn with_order_picks_least_modulus() {
        let f9 = FieldCtx::with_order(9).unwrap();
        assert_eq!(f9.modulus(), Some(&[1u64, 0, 1][..]));
        let f25 = FieldCtx::with_order(25).unwrap();
        assert_eq!((f25.p(), f25.e()), (5, 2));
        assert!(matches!(
            FieldCtx::with_order(12),
            Err(Error::NotAFieldOrder(12))
        ));
        assert!(matches!(
            FieldCtx::with_order(8),
            Err(Error::EvenCharacteristic)
        ));
    }

    #[test]
    fn dlog_is_a_homomorphism_exhaustively() {
        for q in [3u64, 5, 7, 9, 11, 13, 25] {
            let ctx = FieldCtx::with_order(q).unwrap();
            let w = ctx.w();
            for x in ctx.elements().skip(1) {
                let lx = ctx.dlog(x).unwrap();
                assert!(lx < w);
                assert_eq!(ctx.gamma_pow(lx as i64), x);
                for y in ctx.elements().skip(1) {
                    let lxy = ctx.dlog(ctx.mul(x, y)).unwrap();
                    assert_eq!(lxy, (lx + ctx.dlog(y).unwrap()) % w);
                }
            }
        }
    }

    #[test]
    fn field_axioms_f27() {
        let ctx = FieldCtx::with_order(27).unwrap();
        for a in ctx.elements() {
            assert_eq!(ctx.add(a, ctx.neg(a)), FqElem::ZERO);
            assert_eq!(ctx.pow(ctx.pth_root(a), 3), a);
            if !a.is_zero() {
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FqElem::ONE);
            }
            for b in ctx.elements() {
                // mul via tables matches the schoolbook product
                assert_eq!(ctx.mul(a, b).0, ctx.raw_mul(a.0, b.0));
            }
        }
    }
}
