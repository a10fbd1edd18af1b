//! Achievable-length enumeration and coverage statistics.
//!
//! Lengths are counted as even n with 2 <= n <= q + 1, and ratios are
//! reported against q/2. Besides the two coset-union families this module
//! enumerates two literature baselines as pure length formulas: REF18
//! (n = s(r-1) + t(r+1)) and REF20 (n = s(q-1)/a + t(q-1)/b, optionally
//! + 2), which the coverage report compares against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::construct::Family;
use crate::error::{Error, Result};
use crate::field::DEFAULT_TRIAL_BOUND;
use crate::numth;

/// Which construction family produced a length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Source {
    #[serde(rename = "T31v1")]
    T31V1,
    #[serde(rename = "T31v2")]
    T31V2,
    #[serde(rename = "T31v3")]
    T31V3,
    #[serde(rename = "T32v1")]
    T32V1,
    #[serde(rename = "T32v2")]
    T32V2,
    #[serde(rename = "T32v3")]
    T32V3,
    #[serde(rename = "REF18")]
    Ref18,
    #[serde(rename = "REF20")]
    Ref20,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::T31V1 => "T31v1",
            Source::T31V2 => "T31v2",
            Source::T31V3 => "T31v3",
            Source::T32V1 => "T32v1",
            Source::T32V2 => "T32v2",
            Source::T32V3 => "T32v3",
            Source::Ref18 => "REF18",
            Source::Ref20 => "REF20",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An achievable even length with the witness parameters producing it.
/// For the coset-union families the witness is (e1, f1, e2, f2, s, t);
/// the baselines reuse the same shape with their subgroup pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthRecord {
    pub n: u64,
    pub source: Source,
    pub e1: u64,
    pub f1: u64,
    pub e2: u64,
    pub f2: u64,
    pub s: u64,
    pub t: u64,
}

pub const CSV_HEADER: &str = "q,n,source,e1,f1,e2,f2,s,t,variant";

impl LengthRecord {
    pub fn csv_row(&self, q: u64) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            q,
            self.n,
            self.source.label(),
            self.e1,
            self.f1,
            self.e2,
            self.f2,
            self.s,
            self.t,
            self.variant_label(),
        )
    }

    pub fn variant_label(&self) -> &'static str {
        match self.source {
            Source::T31V2 | Source::T32V2 => "n+1",
            Source::T31V3 | Source::T32V3 => "n+2",
            Source::Ref20 => {
                // +2 rows are recognizable by n != s*f1 + t*f2
                if self.n == self.s * self.f1 + self.t * self.f2 {
                    "n"
                } else {
                    "n+2"
                }
            }
            _ => "n",
        }
    }

    fn witness_key(&self) -> (u64, u64, u64, u64, Source) {
        (self.e1, self.e2, self.s, self.t, self.source)
    }
}

/// q must be r^2 with r an odd prime power; returns (r, p, m).
pub fn odd_prime_power_root(q: u64) -> Result<(u64, u64, u32)> {
    let r = isqrt(q);
    if r * r != q || r < 3 {
        return Err(Error::NotOddSquare(q));
    }
    let factors = numth::factor(r, DEFAULT_TRIAL_BOUND).ok_or(Error::FactorizationFailed(r))?;
    if factors.len() != 1 || factors[0].0 == 2 {
        return Err(Error::NotOddSquare(q));
    }
    Ok((r, factors[0].0, factors[0].1))
}

fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn insert_record(best: &mut BTreeMap<u64, LengthRecord>, rec: LengthRecord) {
    match best.get_mut(&rec.n) {
        Some(cur) => {
            if rec.witness_key() < cur.witness_key() {
                *cur = rec;
            }
        }
        None => {
            best.insert(rec.n, rec);
        }
    }
}

/// All even lengths achievable by the given coset-union family over GF(q),
/// deduplicated with the lexicographically smallest witness, sorted by n.
pub fn lengths_theorem(q: u64, family: Family) -> Result<Vec<LengthRecord>> {
    let (r, _, _) = odd_prime_power_root(q)?;
    let q1 = q - 1;
    let factors = numth::factor(q1, DEFAULT_TRIAL_BOUND).ok_or(Error::FactorizationFailed(q1))?;
    let divs = numth::divisors(&factors);
    let mut best: BTreeMap<u64, LengthRecord> = BTreeMap::new();
    for &e1 in &divs {
        let l = numth::v2(e1);
        if l < 2 {
            continue;
        }
        let f1 = q1 / e1;
        for &e2 in &divs {
            if e2 % (1u64 << l) != 0 {
                continue;
            }
            let f2 = q1 / e2;
            let pair_ok = match family {
                Family::T31 => (e1 * (r - 1)) % (2 * e2) == 0 && (e2 * (r + 1)) % e1 == 0,
                Family::T32 => (e1 * (r + 1)) % (2 * e2) == 0 && (e2 * (r - 1)) % e1 == 0,
            };
            if !pair_ok {
                continue;
            }
            let g = numth::gcd(e1, e2);
            let (d1, d2) = (e1 / g, e2 / g);
            for s in 1..=d1 {
                if family == Family::T31 && ((s - 1) * (r + 1)) % 4 != 0 {
                    continue;
                }
                for t in 1..=d2 {
                    let n1 = s * f1 + t * f2;
                    let even = n1 % 2 == 0;
                    let rec = |n, source| LengthRecord { n, source, e1, f1, e2, f2, s, t };
                    match family {
                        Family::T31 => {
                            if even {
                                insert_record(&mut best, rec(n1, Source::T31V1));
                                insert_record(&mut best, rec(n1 + 2, Source::T31V3));
                            } else {
                                insert_record(&mut best, rec(n1 + 1, Source::T31V2));
                            }
                        }
                        Family::T32 => {
                            let y = t * (e1 * (r + 1) / (2 * e2));
                            let x = t * ((r + 1) / 2);
                            let single_ok = (y + (r + 1) / 2) % 2 == 0;
                            let pair_ok =
                                (x + y) % 2 == 0 && ((t - 1) * ((r + 1) / 2)) % 2 == 0;
                            if single_ok && even {
                                insert_record(&mut best, rec(n1, Source::T32V1));
                            }
                            if pair_ok && !even {
                                insert_record(&mut best, rec(n1 + 1, Source::T32V2));
                            }
                            if pair_ok && even {
                                insert_record(&mut best, rec(n1 + 2, Source::T32V3));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(best.into_values().collect())
}

/// Baseline lengths n = s(r-1) + t(r+1): s even for r = 1 mod 4, s odd for
/// r = 3 mod 4, with 1 <= s <= (r+1)/2 and 1 <= t <= (r-1)/2.
pub fn lengths_ref18(q: u64) -> Result<Vec<LengthRecord>> {
    let (r, _, _) = odd_prime_power_root(q)?;
    let mut best: BTreeMap<u64, LengthRecord> = BTreeMap::new();
    let want_parity = if r % 4 == 1 { 0 } else { 1 };
    for s in 1..=(r + 1) / 2 {
        if s % 2 != want_parity {
            continue;
        }
        for t in 1..=(r - 1) / 2 {
            let n = s * (r - 1) + t * (r + 1);
            if n % 2 != 0 {
                continue;
            }
            insert_record(
                &mut best,
                LengthRecord {
                    n,
                    source: Source::Ref18,
                    e1: r + 1,
                    f1: r - 1,
                    e2: r - 1,
                    f2: r + 1,
                    s,
                    t,
                },
            );
        }
    }
    Ok(best.into_values().collect())
}

/// Baseline lengths n = s(q-1)/a + t(q-1)/b and n + 2 over subgroup pairs
/// with 2a | b(r+1) and 2b | a(r-1), under the r mod 4 dependent parity
/// rules of that family.
pub fn lengths_ref20(q: u64) -> Result<Vec<LengthRecord>> {
    let (r, _, _) = odd_prime_power_root(q)?;
    let q1 = q - 1;
    let factors = numth::factor(q1, DEFAULT_TRIAL_BOUND).ok_or(Error::FactorizationFailed(q1))?;
    let divs = numth::divisors(&factors);
    let mut best: BTreeMap<u64, LengthRecord> = BTreeMap::new();
    let r1mod4 = r % 4 == 1;
    for &a in &divs {
        for &b in &divs {
            if (b * (r + 1)) % (2 * a) != 0 || (a * (r - 1)) % (2 * b) != 0 {
                continue;
            }
            let class_ok = if r1mod4 {
                a % 4 == 2 && b % 2 == 0
            } else {
                b % 4 == 2 && a % 2 == 0
            };
            if !class_ok {
                continue;
            }
            let g = numth::gcd(a, b);
            let (fa, fb) = (q1 / a, q1 / b);
            for s in 1..=(a / g) {
                for t in 1..=(b / g) {
                    let n0 = s * fa + t * fb;
                    if n0 % 2 != 0 {
                        continue;
                    }
                    // (r+1)b/(2a) * s^2 mod 2, with s^2 = s mod 2
                    let ys_odd = (b * (r + 1) / (2 * a)) % 2 == 1 && s % 2 == 1;
                    let plain = if r1mod4 { s % 2 == 0 } else { ys_odd };
                    let plus2 = if r1mod4 { s % 2 == 1 } else { !ys_odd };
                    let rec = |n| LengthRecord {
                        n,
                        source: Source::Ref20,
                        e1: a,
                        f1: fa,
                        e2: b,
                        f2: fb,
                        s,
                        t,
                    };
                    if plain {
                        insert_record(&mut best, rec(n0));
                    }
                    if plus2 {
                        insert_record(&mut best, rec(n0 + 2));
                    }
                }
            }
        }
    }
    Ok(best.into_values().collect())
}

/// Coverage statistics in the shape of the comparison table: per-source
/// counts, ratios against q/2, and the number of lengths the coset-union
/// families add on top of REF20.
#[derive(Debug, Clone, Serialize)]
pub struct CoverageReport {
    pub q: u64,
    pub r: u64,
    pub t31_count: usize,
    pub t32_count: usize,
    pub ours_count: usize,
    pub ref18_count: usize,
    pub ref20_count: usize,
    pub combined_count: usize,
    pub new_count: usize,
    pub ref18_pct: f64,
    pub ref20_pct: f64,
    pub ours_pct: f64,
    pub combined_pct: f64,
}

/// Round to two decimals (half away from zero).
pub fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

pub fn coverage(q: u64) -> Result<CoverageReport> {
    let (r, _, _) = odd_prime_power_root(q)?;
    let t31: BTreeSet<u64> = lengths_theorem(q, Family::T31)?.iter().map(|x| x.n).collect();
    let t32: BTreeSet<u64> = lengths_theorem(q, Family::T32)?.iter().map(|x| x.n).collect();
    let ref18: BTreeSet<u64> = lengths_ref18(q)?.iter().map(|x| x.n).collect();
    let ref20: BTreeSet<u64> = lengths_ref20(q)?.iter().map(|x| x.n).collect();
    let ours: BTreeSet<u64> = t31.union(&t32).copied().collect();
    let combined: BTreeSet<u64> = ours.union(&ref20).copied().collect();
    let new_count = ours.difference(&ref20).count();
    let pct = |c: usize| 200.0 * c as f64 / q as f64;
    Ok(CoverageReport {
        q,
        r,
        t31_count: t31.len(),
        t32_count: t32.len(),
        ours_count: ours.len(),
        ref18_count: ref18.len(),
        ref20_count: ref20.len(),
        combined_count: combined.len(),
        new_count,
        ref18_pct: pct(ref18.len()),
        ref20_pct: pct(ref20.len()),
        ours_pct: pct(ours.len()),
        combined_pct: pct(combined.len()),
    })
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q = {} (r = {})", self.q, self.r)?;
        writeln!(
            f,
            "  REF18                    {:>6} lengths  {:>6.2}% of q/2",
            self.ref18_count, self.ref18_pct
        )?;
        writeln!(
            f,
            "  REF20                    {:>6} lengths  {:>6.2}% of q/2",
            self.ref20_count, self.ref20_pct
        )?;
        writeln!(
            f,
            "  T31 u T32                {:>6} lengths  {:>6.2}% of q/2",
            self.ours_count, self.ours_pct
        )?;
        writeln!(
            f,
            "  T31 u T32 u REF20        {:>6} lengths  {:>6.2}% of q/2",
            self.combined_count, self.combined_pct
        )?;
        writeln!(f, "  new lengths vs REF20     {:>6}", self.new_count)?;
        write!(f, "  length universe: even n with 2 <= n <= q+1; denominator q/2")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_detection() {
        assert_eq!(odd_prime_power_root(25).unwrap(), (5, 5, 1));
        assert_eq!(odd_prime_power_root(28561).unwrap(), (169, 13, 2));
        assert_eq!(odd_prime_power_root(24).unwrap_err(), Error::NotOddSquare(24));
        assert_eq!(odd_prime_power_root(16).unwrap_err(), Error::NotOddSquare(16));
        // 15^2: 15 = 3 * 5 is not a prime power
        assert_eq!(odd_prime_power_root(225).unwrap_err(), Error::NotOddSquare(225));
    }

    #[test]
    fn small_field_lengths() {
        let recs = lengths_theorem(25, Family::T31).unwrap();
        let ns: BTreeSet<u64> = recs.iter().map(|x| x.n).collect();
        for n in [10, 12, 14] {
            assert!(ns.contains(&n), "missing {n} in {ns:?}");
        }
        for rec in &recs {
            assert_eq!(rec.n % 2, 0);
            assert!(rec.n >= 2 && rec.n <= 26);
        }
    }

    #[test]
    fn deterministic_enumeration() {
        let a = lengths_theorem(22201, Family::T31).unwrap();
        let b = lengths_theorem(22201, Family::T31).unwrap();
        assert_eq!(a, b);
        let a = lengths_ref20(22201).unwrap();
        let b = lengths_ref20(22201).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ref18_bounds_and_parity() {
        // r = 5: s odd? r % 4 = 1, so s even; s <= 3, t <= 2
        let recs = lengths_ref18(25).unwrap();
        for rec in &recs {
            assert_eq!(rec.s % 2, 0);
            assert!(rec.s <= 3 && rec.t <= 2);
            assert_eq!(rec.n, rec.s * 4 + rec.t * 6);
        }
        // r = 7 = 3 mod 4: s odd
        let recs = lengths_ref18(49).unwrap();
        assert!(recs.iter().all(|rec| rec.s % 2 == 1));
    }

    #[test]
    fn ref20_lengths_even_and_bounded() {
        let recs = lengths_ref20(22201).unwrap();
        assert!(!recs.is_empty());
        for rec in &recs {
            assert_eq!(rec.n % 2, 0);
            assert!(rec.n <= 22202);
        }
    }

    #[test]
    fn csv_rows() {
        let recs = lengths_theorem(25, Family::T31).unwrap();
        let row = recs[0].csv_row(25);
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
        assert!(row.starts_with("25,"));
    }

    #[test]
    fn coverage_small_field() {
        let cov = coverage(25).unwrap();
        assert_eq!(cov.q, 25);
        assert!(cov.ours_count >= 3);
        assert!(cov.combined_count >= cov.ref20_count);
        assert_eq!(
            cov.combined_count,
            cov.ref20_count + cov.new_count
        );
    }
}
