//! Exact arithmetic in GF(q) with q = r^2 = p^{2m}, r odd: canonical field
//! construction, quadratic character, square roots, and the r-power
//! Frobenius.
//!
//! Elements are stored packed: the element with ascending-degree residues
//! (c_0, ..., c_{2m-1}) is the integer sum c_i * p^i. The context owns the
//! modulus and, for q <= 2^22, log/antilog tables keyed to the canonical
//! primitive element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth;

/// Default cap on the field size q.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 31;
/// Log/antilog tables are built when q does not exceed this.
pub const DEFAULT_TABLE_LIMIT: u64 = 1 << 22;
/// Trial-division bound used when factoring q - 1.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

const MAX_DEG: usize = 64;

/// An element of GF(p^{2m}), packed as an integer in [0, q).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    /// Packed index in [0, q): the base-p digits are the ascending-degree
    /// residues.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Tunables for field construction.
#[derive(Debug, Clone)]
pub struct FieldOptions {
    pub size_cap: u64,
    pub table_limit: u64,
    pub trial_bound: u64,
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions {
            size_cap: DEFAULT_SIZE_CAP,
            table_limit: DEFAULT_TABLE_LIMIT,
            trial_bound: DEFAULT_TRIAL_BOUND,
        }
    }
}

/// Serialized form of a field context: `{p, m, modulus, theta}` with
/// polynomials as ascending-degree residue lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSummary {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u64>,
    pub theta: Vec<u64>,
}

/// A concrete realization of GF(q), q = p^{2m}.
///
/// Immutable after construction and safe to share across threads. The
/// modulus is the lexicographically smallest monic irreducible polynomial
/// of degree 2m over GF(p) (comparing coefficient tuples (c_{2m-1},...,c_0)),
/// and theta is the element of order q - 1 with the lexicographically
/// smallest ascending-degree coefficient tuple, so serialized data is
/// reproducible bit for bit.
pub struct FieldCtx {
    p: u64,
    m: u32,
    deg: u32,
    q: u64,
    r: u64,
    modulus: Vec<u64>,
    modneg: Vec<u64>,
    theta: FieldElem,
    q1_factors: Vec<(u64, u32)>,
    exp: Option<Vec<u32>>,
    log: Option<Vec<u32>>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("theta", &self.theta)
            .finish()
    }
}

impl FieldCtx {
    pub fn new(p: u64, m: u32) -> Result<FieldCtx> {
        FieldCtx::with_options(p, m, &FieldOptions::default())
    }

    pub fn with_options(p: u64, m: u32, opts: &FieldOptions) -> Result<FieldCtx> {
        if p == 2 || !numth::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let deg = 2 * m;
        if deg as usize > MAX_DEG {
            return Err(Error::SizeBound { q: u64::MAX, cap: opts.size_cap });
        }
        let mut q: u64 = 1;
        for _ in 0..deg {
            q = q.checked_mul(p).ok_or(Error::SizeBound { q: u64::MAX, cap: opts.size_cap })?;
            if q > opts.size_cap {
                return Err(Error::SizeBound { q, cap: opts.size_cap });
            }
        }
        let r = q_root(p, m);
        let q1_factors =
            numth::factor(q - 1, opts.trial_bound).ok_or(Error::FactorizationFailed(q - 1))?;

        let modulus = smallest_irreducible(p, deg as usize);
        let modneg = modulus[..deg as usize].iter().map(|&c| (p - c) % p).collect();

        let mut ctx = FieldCtx {
            p,
            m,
            deg,
            q,
            r,
            modulus,
            modneg,
            theta: FieldElem::ZERO,
            q1_factors,
            exp: None,
            log: None,
        };
        ctx.theta = ctx.find_theta();
        if q <= opts.table_limit {
            let (exp, log) = ctx.build_tables();
            ctx.exp = Some(exp);
            ctx.log = Some(log);
        }
        debug_assert_eq!((q - 1) % 4, 0);
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// q = p^{2m} = r^2.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// r = p^m.
    pub fn r(&self) -> u64 {
        self.r
    }

    /// Monic irreducible modulus, ascending degree, length 2m + 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn theta(&self) -> FieldElem {
        self.theta
    }

    /// Factorization of q - 1 as (prime, exponent) pairs.
    pub fn q1_factors(&self) -> &[(u64, u32)] {
        &self.q1_factors
    }

    pub fn has_tables(&self) -> bool {
        self.exp.is_some()
    }

    pub fn summary(&self) -> FieldSummary {
        FieldSummary {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
            theta: self.coeffs(self.theta),
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// Embed a base-field residue as a constant.
    pub fn scalar(&self, c: u64) -> FieldElem {
        FieldElem(c % self.p)
    }

    /// All q elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn elem_from_index(&self, idx: u64) -> Result<FieldElem> {
        if idx < self.q {
            Ok(FieldElem(idx))
        } else {
            Err(Error::BadCoefficients)
        }
    }

    /// Build an element from ascending-degree residues (at most 2m of them).
    pub fn elem_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.deg as usize {
            return Err(Error::BadCoefficients);
        }
        let mut out = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::BadCoefficients);
            }
            out = out * self.p + c;
        }
        Ok(FieldElem(out))
    }

    /// Ascending-degree residues, length exactly 2m.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        let mut out = vec![0u64; self.deg as usize];
        let mut x = a.0;
        for d in out.iter_mut() {
            *d = x % self.p;
            x /= self.p;
        }
        out
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.deg {
            let da = x % self.p;
            let db = y % self.p;
            x /= self.p;
            y /= self.p;
            let mut d = da + db;
            if d >= self.p {
                d -= self.p;
            }
            out += d * place;
            place *= self.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.deg {
            let d = x % self.p;
            x /= self.p;
            if d != 0 {
                out += (self.p - d) * place;
            }
            place *= self.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.deg {
            let da = x % self.p;
            let db = y % self.p;
            x /= self.p;
            y /= self.p;
            let d = if da >= db { da - db } else { da + self.p - db };
            out += d * place;
            place *= self.p;
        }
        FieldElem(out)
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        if let (Some(log), Some(exp)) = (&self.log, &self.exp) {
            let e = log[a.0 as usize] as usize + log[b.0 as usize] as usize;
            return FieldElem(exp[e] as u64);
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let d = self.deg as usize;
        let mut da = [0u64; MAX_DEG];
        let mut db = [0u64; MAX_DEG];
        let (mut x, mut y) = (a.0, b.0);
        for i in 0..d {
            da[i] = x % self.p;
            x /= self.p;
            db[i] = y % self.p;
            y /= self.p;
        }
        let mut prod = [0u64; 2 * MAX_DEG];
        for i in 0..d {
            if da[i] != 0 {
                for j in 0..d {
                    prod[i + j] += da[i] * db[j];
                }
            }
        }
        for i in (d..2 * d - 1).rev() {
            let c = prod[i] % self.p;
            if c != 0 {
                for j in 0..d {
                    if self.modneg[j] != 0 {
                        prod[i - d + j] += c * self.modneg[j];
                    }
                }
            }
        }
        let mut out = 0u64;
        let mut place = 1u64;
        for v in prod.iter().take(d) {
            out += (v % self.p) * place;
            place *= self.p;
        }
        FieldElem(out)
    }

    /// a^e with the convention 0^0 = 1.
    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if a.0 == 0 {
            return if e == 0 { self.one() } else { FieldElem::ZERO };
        }
        let q1 = self.q - 1;
        let e = e % q1;
        if let (Some(log), Some(exp)) = (&self.log, &self.exp) {
            let idx = (log[a.0 as usize] as u128 * e as u128 % q1 as u128) as usize;
            return FieldElem(exp[idx] as u64);
        }
        let mut acc = self.one();
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if let (Some(log), Some(exp)) = (&self.log, &self.exp) {
            let q1 = self.q - 1;
            let e = (q1 - log[a.0 as usize] as u64) % q1;
            return Ok(FieldElem(exp[e as usize] as u64));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// theta^e without constructing intermediate elements.
    pub fn theta_pow(&self, e: u64) -> FieldElem {
        if let Some(exp) = &self.exp {
            return FieldElem(exp[(e % (self.q - 1)) as usize] as u64);
        }
        self.pow(self.theta, e)
    }

    /// Discrete log base theta, when tables are available.
    pub fn log(&self, a: FieldElem) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        self.log.as_ref().map(|log| log[a.0 as usize] as u64)
    }

    /// Quadratic character of a nonzero element: +1 for squares, -1
    /// otherwise.
    pub fn eta(&self, a: FieldElem) -> Result<i8> {
        if a.0 == 0 {
            return Err(Error::ZeroCharacter);
        }
        if let Some(log) = &self.log {
            return Ok(if log[a.0 as usize] % 2 == 0 { 1 } else { -1 });
        }
        let h = self.pow(a, (self.q - 1) / 2);
        Ok(if h == self.one() { 1 } else { -1 })
    }

    /// A square root of `a`, deterministic: of the two roots +-b, the one
    /// with the lexicographically smaller ascending-degree residue tuple.
    pub fn sqrt(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Ok(FieldElem::ZERO);
        }
        if self.eta(a)? != 1 {
            return Err(Error::NonSquare);
        }
        let b = if let (Some(log), Some(exp)) = (&self.log, &self.exp) {
            FieldElem(exp[(log[a.0 as usize] / 2) as usize] as u64)
        } else {
            self.sqrt_tonelli_shanks(a)
        };
        Ok(self.lex_min(b, self.neg(b)))
    }

    fn sqrt_tonelli_shanks(&self, a: FieldElem) -> FieldElem {
        let q1 = self.q - 1;
        let s = q1.trailing_zeros();
        let qodd = q1 >> s;
        // Deterministic non-residue: first in ascending-lex element order.
        let z = (1..self.q)
            .map(|j| FieldElem(self.digit_reverse(j)))
            .find(|&z| self.eta(z) == Ok(-1))
            .expect("non-residues are half of the group");
        let mut m = s;
        let mut c = self.pow(z, qodd);
        let mut t = self.pow(a, qodd);
        let mut rr = self.pow(a, (qodd + 1) / 2);
        let one = self.one();
        while t != one {
            let mut i = 0u32;
            let mut tt = t;
            while tt != one {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            rr = self.mul(rr, b);
        }
        rr
    }

    /// The r-power Frobenius a -> a^r; involutive on GF(q), fixes GF(r).
    pub fn frob_r(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.r)
    }

    pub fn multiplicative_order(&self, a: FieldElem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.q - 1;
        for &(p, _) in &self.q1_factors {
            while ord % p == 0 && self.pow(a, ord / p) == self.one() {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// Render an element as its ascending-degree residue list.
    pub fn format_elem(&self, a: FieldElem) -> String {
        let cs: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
        format!("[{}]", cs.join(", "))
    }

    fn lex_min(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        for _ in 0..self.deg {
            let da = x % self.p;
            let db = y % self.p;
            if da != db {
                return if da < db { a } else { b };
            }
            x /= self.p;
            y /= self.p;
        }
        a
    }

    /// Packed index of the j-th element in ascending-lex order of the
    /// ascending-degree residue tuple.
    fn digit_reverse(&self, j: u64) -> u64 {
        let d = self.deg as usize;
        let mut digits = [0u64; MAX_DEG];
        let mut x = j;
        for dig in digits.iter_mut().take(d) {
            *dig = x % self.p;
            x /= self.p;
        }
        let mut out = 0u64;
        for i in 0..d {
            out = out * self.p + digits[i];
        }
        out
    }

    fn find_theta(&self) -> FieldElem {
        let q1 = self.q - 1;
        for j in 1..self.q {
            let cand = FieldElem(self.digit_reverse(j));
            if cand.0 == 0 {
                continue;
            }
            let primitive = self
                .q1_factors
                .iter()
                .all(|&(p, _)| self.pow(cand, q1 / p) != self.one());
            if primitive {
                return cand;
            }
        }
        unreachable!("every finite field has a primitive element");
    }

    fn build_tables(&self) -> (Vec<u32>, Vec<u32>) {
        let q1 = (self.q - 1) as usize;
        let mut exp = vec![0u32; 2 * q1];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = self.one();
        for e in 0..q1 {
            exp[e] = cur.0 as u32;
            log[cur.0 as usize] = e as u32;
            cur = self.mul_slow(cur, self.theta);
        }
        assert_eq!(cur, self.one(), "theta order mismatch");
        for e in 0..q1 {
            exp[q1 + e] = exp[e];
        }
        (exp, log)
    }
}

fn q_root(p: u64, m: u32) -> u64 {
    let mut r = 1u64;
    for _ in 0..m {
        r *= p;
    }
    r
}

// --- GF(p)[x] helpers used only for modulus selection ---

fn ppoly_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn ppoly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    // f monic
    let mut r = a.to_vec();
    let d = f.len() - 1;
    while r.len() > d {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if c != 0 {
            for j in 0..d {
                let sub = c * f[j] % p;
                r[shift + j] = (r[shift + j] + p - sub) % p;
            }
        }
        r.pop();
        ppoly_trim(&mut r);
        if r.len() <= d {
            break;
        }
    }
    r
}

fn ppoly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    ppoly_trim(&mut prod);
    ppoly_rem(&prod, f, p)
}

fn ppoly_powmod(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = ppoly_rem(a, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = ppoly_mulmod(&acc, &base, f, p);
        }
        base = ppoly_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn ppoly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ppoly_trim(&mut a);
    ppoly_trim(&mut b);
    while !b.is_empty() {
        // make b monic for the monic-divisor remainder
        let lead = *b.last().unwrap();
        let inv = mod_inverse(lead, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        let r = ppoly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn ppoly_sub_x(g: &[u64], p: u64) -> Vec<u64> {
    let mut h = g.to_vec();
    if h.len() < 2 {
        h.resize(2, 0);
    }
    h[1] = (h[1] + p - 1) % p;
    ppoly_trim(&mut h);
    h
}

/// Rabin irreducibility test for a monic polynomial over GF(p).
fn ppoly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    let prime_divs: Vec<usize> = {
        let mut ds = Vec::new();
        let mut n = d;
        let mut c = 2;
        while c * c <= n {
            if n % c == 0 {
                ds.push(c);
                while n % c == 0 {
                    n /= c;
                }
            }
            c += 1;
        }
        if n > 1 {
            ds.push(n);
        }
        ds
    };
    let x = vec![0u64, 1];
    let mut g = x.clone();
    for i in 1..=d {
        g = ppoly_powmod(&g, p, f, p);
        if prime_divs.iter().any(|&l| d / l == i) {
            let h = ppoly_sub_x(&g, p);
            let gg = ppoly_gcd(f, &h, p);
            if gg.len() != 1 {
                return false;
            }
        }
    }
    g == x
}

/// Lexicographically smallest monic irreducible of the given degree over
/// GF(p), comparing coefficient tuples (c_{d-1}, ..., c_0).
fn smallest_irreducible(p: u64, d: usize) -> Vec<u64> {
    let mut low = vec![0u64; d];
    loop {
        let mut f = low.clone();
        f.push(1);
        if ppoly_is_irreducible(&f, p) {
            return f;
        }
        // increment the packed low part
        for digit in low.iter_mut() {
            *digit += 1;
            if *digit < p {
                break;
            }
            *digit = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> FieldCtx {
        FieldCtx::new(p, m).unwrap()
    }

    #[test]
    fn gf9_canonical() {
        let f = gf(3, 1);
        assert_eq!(f.q(), 9);
        assert_eq!(f.r(), 3);
        // x^2 + 1
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // theta = x + 1, order 8
        assert_eq!(f.coeffs(f.theta()), vec![1, 1]);
        assert_eq!(f.multiplicative_order(f.theta()).unwrap(), 8);
        // exhaustive: theta is the ascending-lex-least element of order 8
        let mut best: Option<Vec<u64>> = None;
        for a in f.elements().skip(1) {
            if f.multiplicative_order(a).unwrap() == 8 {
                let c = f.coeffs(a);
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
        assert_eq!(best.unwrap(), f.coeffs(f.theta()));
    }

    #[test]
    fn gf25_canonical() {
        let f = gf(5, 1);
        // y^2 + 1 factors (2^2 = -1 mod 5); y^2 + 2 is irreducible
        assert_eq!(f.modulus(), &[2, 0, 1]);
        assert_eq!(f.coeffs(f.theta()), vec![1, 1]);
        assert_eq!(f.multiplicative_order(f.theta()).unwrap(), 24);
    }

    #[test]
    fn even_characteristic_rejected() {
        assert_eq!(FieldCtx::new(2, 1).unwrap_err(), Error::NotOddPrime(2));
        assert_eq!(FieldCtx::new(9, 1).unwrap_err(), Error::NotOddPrime(9));
        assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn size_cap() {
        match FieldCtx::new(46349, 1).unwrap_err() {
            Error::SizeBound { .. } => {}
            e => panic!("unexpected error {e:?}"),
        }
        match FieldCtx::new(3, 11).unwrap_err() {
            Error::SizeBound { .. } => {}
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn arithmetic_basics() {
        let f = gf(3, 1);
        let x = f.elem_from_coeffs(&[0, 1]).unwrap();
        let two = f.scalar(2);
        // x^2 = -1 = 2
        assert_eq!(f.mul(x, x), two);
        assert_eq!(f.add(x, f.neg(x)), f.zero());
        assert_eq!(f.sub(x, x), f.zero());
        assert_eq!(f.mul(f.inv(x).unwrap(), x), f.one());
        assert_eq!(f.pow(f.zero(), 0), f.one());
        assert_eq!(f.pow(f.zero(), 5), f.zero());
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn eta_examples() {
        let f = gf(3, 1);
        assert_eq!(f.eta(f.one()).unwrap(), 1);
        assert_eq!(f.eta(f.theta()).unwrap(), -1);
        assert_eq!(f.eta(f.neg(f.one())).unwrap(), 1);
        assert_eq!(f.eta(f.zero()).unwrap_err(), Error::ZeroCharacter);
    }

    #[test]
    fn eta_matches_log_parity() {
        let f = gf(5, 1);
        for a in f.elements().skip(1) {
            let parity = if f.log(a).unwrap() % 2 == 0 { 1 } else { -1 };
            assert_eq!(f.eta(a).unwrap(), parity);
        }
    }

    #[test]
    fn sqrt_examples() {
        let f = gf(3, 1);
        let two = f.scalar(2);
        let x = f.elem_from_coeffs(&[0, 1]).unwrap();
        // x^2 = 2 and 2x is the other root; x has the smaller tuple
        assert_eq!(f.sqrt(two).unwrap(), x);
        assert_eq!(f.sqrt(f.zero()).unwrap(), f.zero());
        assert_eq!(f.sqrt(f.theta()).unwrap_err(), Error::NonSquare);
    }

    #[test]
    fn frobenius_examples() {
        let f9 = gf(3, 1);
        assert_eq!(f9.frob_r(f9.zero()), f9.zero());
        assert_eq!(f9.frob_r(f9.one()), f9.one());
        let x = f9.elem_from_coeffs(&[0, 1]).unwrap();
        // x^3 = x * x^2 = 2x
        assert_eq!(f9.frob_r(x), f9.elem_from_coeffs(&[0, 2]).unwrap());

        let f25 = gf(5, 1);
        let a = f25.pow(f25.theta(), 6);
        assert_eq!(f25.multiplicative_order(a).unwrap(), 4);
        // order divides r - 1 = 4, so a lies in GF(5) and is fixed
        assert_eq!(f25.frob_r(a), a);
        for b in f25.elements() {
            assert_eq!(f25.frob_r(f25.frob_r(b)), b);
        }
    }

    #[test]
    fn general_path_without_tables() {
        // Large prime square: q > 2^22, so no tables; exercises the slow
        // multiplication, Tonelli-Shanks, and the primitive-element scan.
        let f = gf(46337, 1);
        assert!(!f.has_tables());
        assert_eq!(f.q(), 46337u64 * 46337);
        let t = f.theta();
        assert_eq!(f.pow(t, f.q() - 1), f.one());
        let a = f.pow(t, 2 * 12345);
        assert_eq!(f.eta(a).unwrap(), 1);
        let s = f.sqrt(a).unwrap();
        assert_eq!(f.mul(s, s), a);
        assert_eq!(f.eta(f.neg(f.one())).unwrap(), 1);
        let b = f.pow(t, 7);
        assert_eq!(f.mul(f.inv(b).unwrap(), b), f.one());
    }

    #[test]
    fn quartic_extension() {
        // m = 2: a degree-4 modulus over GF(5), q = 625.
        let f = gf(5, 2);
        assert_eq!(f.q(), 625);
        assert_eq!(f.r(), 25);
        assert_eq!(f.modulus().len(), 5);
        assert_eq!(f.multiplicative_order(f.theta()).unwrap(), 624);
        let a = f.elem_from_coeffs(&[1, 2, 3, 4]).unwrap();
        assert_eq!(f.mul(f.inv(a).unwrap(), a), f.one());
        // Frobenius fixes exactly GF(25): a^r == a iff order divides r - 1
        let sub = f.pow(f.theta(), 26); // order 24 = r - 1
        assert_eq!(f.frob_r(sub), sub);
        assert_ne!(f.frob_r(f.theta()), f.theta());
    }

    #[test]
    fn summary_roundtrip() {
        let f = gf(5, 1);
        let s = f.summary();
        assert_eq!(s.p, 5);
        assert_eq!(s.m, 1);
        assert_eq!(s.modulus, vec![2, 0, 1]);
        assert_eq!(s.theta, vec![1, 1]);
        let json = serde_json::to_string(&s).unwrap();
        let back: FieldSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
