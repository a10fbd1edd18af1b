//! Univariate polynomial algebra over GF(q): vanishing polynomials f_S,
//! the derivative products L_S, and the closed coset-union forms.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// Dense polynomial, ascending-degree coefficients, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly { coeffs: vec![ctx.one()] }
    }

    /// The monomial c * x^deg.
    pub fn monomial(deg: usize, c: FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<FieldElem>) -> Poly {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&FieldElem::ZERO) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| ctx.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| ctx.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self, ctx: &FieldCtx) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| ctx.neg(c)).collect())
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElem) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = ctx.add(coeffs[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Formal derivative; coefficient multiplication is mod p, so terms
    /// whose exponent is divisible by the characteristic vanish.
    pub fn derivative(&self, ctx: &FieldCtx) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ctx.mul(ctx.scalar(i as u64 % ctx.p()), c))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Serialized form: ascending-degree list of residue lists.
    pub fn to_coeff_lists(&self, ctx: &FieldCtx) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|&c| ctx.coeffs(c)).collect()
    }
}

fn check_distinct(elems: &[FieldElem]) -> Result<()> {
    let mut seen = HashSet::with_capacity(elems.len());
    for &a in elems {
        if !seen.insert(a) {
            return Err(Error::DuplicateElements);
        }
    }
    Ok(())
}

/// f_S(x): the monic polynomial whose roots are exactly the set S.
pub fn vanishing_poly(ctx: &FieldCtx, elems: &[FieldElem]) -> Result<Poly> {
    check_distinct(elems)?;
    let mut coeffs = Vec::with_capacity(elems.len() + 1);
    coeffs.push(ctx.one());
    for &a in elems {
        // multiply by (x - a)
        coeffs.push(FieldElem::ZERO);
        let na = ctx.neg(a);
        for i in (0..coeffs.len()).rev() {
            let lower = ctx.mul(coeffs[i], na);
            let upper = if i > 0 { coeffs[i - 1] } else { FieldElem::ZERO };
            coeffs[i] = ctx.add(upper, lower);
        }
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// L_S(a) = prod over b in S, b != a, of (a - b). Computed by direct
/// product; equals f_S'(a).
pub fn l_value(ctx: &FieldCtx, elems: &[FieldElem], a: FieldElem) -> Result<FieldElem> {
    check_distinct(elems)?;
    if !elems.contains(&a) {
        return Err(Error::NotInSet);
    }
    let mut acc = ctx.one();
    for &b in elems {
        if b != a {
            acc = ctx.mul(acc, ctx.sub(a, b));
        }
    }
    Ok(acc)
}

/// L_S(a) for every a in S, by direct products: O(n^2) field operations.
pub fn l_values(ctx: &FieldCtx, elems: &[FieldElem]) -> Vec<FieldElem> {
    let n = elems.len();
    let mut out = vec![ctx.one(); n];
    for i in 0..n {
        let a = elems[i];
        let mut acc = ctx.one();
        for (j, &b) in elems.iter().enumerate() {
            if j != i {
                acc = ctx.mul(acc, ctx.sub(a, b));
            }
        }
        out[i] = acc;
    }
    out
}

/// L_{S1 u S2}(b) computed through the split form: L_{S1}(b) f_{S2}(b) when
/// b is in S1, and symmetrically when b is in S2.
pub fn split_l_value(
    ctx: &FieldCtx,
    s1: &[FieldElem],
    s2: &[FieldElem],
    b: FieldElem,
) -> Result<FieldElem> {
    check_distinct(s1)?;
    check_distinct(s2)?;
    if s1.iter().any(|a| s2.contains(a)) {
        return Err(Error::OverlappingSets);
    }
    let (own, other) = if s1.contains(&b) {
        (s1, s2)
    } else if s2.contains(&b) {
        (s2, s1)
    } else {
        return Err(Error::NotInSet);
    };
    let l = l_value(ctx, own, b)?;
    let f = vanishing_poly(ctx, other)?.eval(ctx, b);
    Ok(ctx.mul(l, f))
}

/// Vanishing polynomial of a union of distinct cosets of H = <theta^e>,
/// |H| = f, computed in closed form as g(x^f) with
/// g = prod (x - rep_i^f). Degree t*f for t representatives.
pub fn coset_union_poly(ctx: &FieldCtx, e: u64, f: u64, reps: &[FieldElem]) -> Result<Poly> {
    if e.checked_mul(f) != Some(ctx.q() - 1) {
        return Err(Error::SubgroupOrder { e, f, q1: ctx.q() - 1 });
    }
    let powers: Vec<FieldElem> = reps.iter().map(|&xi| ctx.pow(xi, f)).collect();
    for i in 0..powers.len() {
        for j in (i + 1)..powers.len() {
            // same coset of H exactly when the f-th powers agree
            if powers[i] == powers[j] {
                return Err(Error::RepeatedCoset(i, j));
            }
        }
    }
    let g = vanishing_poly(ctx, &powers)?;
    let mut coeffs = vec![FieldElem::ZERO; powers.len() * f as usize + 1];
    for (j, &c) in g.coeffs().iter().enumerate() {
        coeffs[j * f as usize] = c;
    }
    Ok(Poly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn gf9() -> FieldCtx {
        FieldCtx::new(3, 1).unwrap()
    }

    fn gf25() -> FieldCtx {
        FieldCtx::new(5, 1).unwrap()
    }

    #[test]
    fn vanishing_empty_set() {
        let f = gf9();
        let p = vanishing_poly(&f, &[]).unwrap();
        assert_eq!(p, Poly::one(&f));
    }

    #[test]
    fn vanishing_base_subfield() {
        let f = gf9();
        let s: Vec<_> = (0..3).map(|c| f.scalar(c)).collect();
        let p = vanishing_poly(&f, &s).unwrap();
        // x^3 + 2x over GF(3)
        let expected = Poly::from_coeffs(vec![
            f.zero(),
            f.scalar(2),
            f.zero(),
            f.one(),
        ]);
        assert_eq!(p, expected);
        for &a in &s {
            assert!(p.eval(&f, a).is_zero());
        }
    }

    #[test]
    fn vanishing_subgroup_is_binomial() {
        // <theta^4> in GF(25) has order 6 and vanishing polynomial x^6 - 1
        let f = gf25();
        let sub: Vec<_> = (0..6).map(|j| f.theta_pow(4 * j)).collect();
        let p = vanishing_poly(&f, &sub).unwrap();
        let mut coeffs = vec![FieldElem::ZERO; 7];
        coeffs[0] = f.neg(f.one());
        coeffs[6] = f.one();
        assert_eq!(p, Poly::from_coeffs(coeffs));
    }

    #[test]
    fn vanishing_rejects_duplicates() {
        let f = gf9();
        let err = vanishing_poly(&f, &[f.one(), f.one()]).unwrap_err();
        assert_eq!(err, Error::DuplicateElements);
    }

    #[test]
    fn l_value_pairs() {
        let f = gf9();
        let s = vec![f.zero(), f.one()];
        assert_eq!(l_value(&f, &s, f.zero()).unwrap(), f.scalar(2));
        assert_eq!(l_value(&f, &s, f.one()).unwrap(), f.one());
        let s3 = vec![f.zero(), f.one(), f.scalar(2)];
        assert_eq!(l_value(&f, &s3, f.zero()).unwrap(), f.scalar(2));
        assert_eq!(l_value(&f, &s3, f.theta()).unwrap_err(), Error::NotInSet);
    }

    #[test]
    fn l_value_on_subgroup() {
        // L_H(1) = f * 1^{f-1} = 6 = 1 over GF(25)
        let f = gf25();
        let sub: Vec<_> = (0..6).map(|j| f.theta_pow(4 * j)).collect();
        assert_eq!(l_value(&f, &sub, f.one()).unwrap(), f.one());
    }

    #[test]
    fn split_l_singletons() {
        let f = gf9();
        let v = split_l_value(&f, &[f.zero()], &[f.one()], f.zero()).unwrap();
        assert_eq!(v, f.scalar(2));
        let err = split_l_value(&f, &[f.zero()], &[f.zero()], f.zero()).unwrap_err();
        assert_eq!(err, Error::OverlappingSets);
        let err = split_l_value(&f, &[f.zero()], &[f.one()], f.theta()).unwrap_err();
        assert_eq!(err, Error::NotInSet);
    }

    #[test]
    fn split_l_matches_direct_product() {
        let f = gf25();
        let s1: Vec<_> = (0..6).map(|j| f.theta_pow(4 * j)).collect();
        let s2: Vec<_> = (0..3).map(|k| f.theta_pow(2 + 8 * k)).collect();
        let union: Vec<_> = s1.iter().chain(&s2).copied().collect();
        for &b in &union {
            let split = split_l_value(&f, &s1, &s2, b).unwrap();
            let direct = l_value(&f, &union, b).unwrap();
            assert_eq!(split, direct);
        }
    }

    #[test]
    fn coset_union_closed_form() {
        let f = gf25();
        // single coset: x^f - 1
        let p = coset_union_poly(&f, 4, 6, &[f.one()]).unwrap();
        let mut coeffs = vec![FieldElem::ZERO; 7];
        coeffs[0] = f.neg(f.one());
        coeffs[6] = f.one();
        assert_eq!(p, Poly::from_coeffs(coeffs));

        // two cosets {1, theta^2}: matches the elementwise vanishing poly
        let reps = [f.one(), f.theta_pow(2)];
        let p = coset_union_poly(&f, 4, 6, &reps).unwrap();
        let mut union = Vec::new();
        for &xi in &reps {
            for j in 0..6 {
                union.push(f.mul(xi, f.theta_pow(4 * j)));
            }
        }
        assert_eq!(p, vanishing_poly(&f, &union).unwrap());

        // theta^4 lies in <theta^4>, so {1, theta^4} repeats a coset
        let err = coset_union_poly(&f, 4, 6, &[f.one(), f.theta_pow(4)]).unwrap_err();
        assert_eq!(err, Error::RepeatedCoset(0, 1));

        let err = coset_union_poly(&f, 4, 5, &[f.one()]).unwrap_err();
        assert_eq!(err, Error::SubgroupOrder { e: 4, f: 5, q1: 24 });
    }

    #[test]
    fn derivative_characteristic_aware() {
        let f = gf9();
        // d/dx (x^3 + 2x) = 3x^2 + 2 = 2 in characteristic 3
        let p = Poly::from_coeffs(vec![f.zero(), f.scalar(2), f.zero(), f.one()]);
        assert_eq!(p.derivative(&f), Poly::from_coeffs(vec![f.scalar(2)]));
    }

    #[test]
    fn eval_root() {
        let f = gf25();
        let mut coeffs = vec![FieldElem::ZERO; 7];
        coeffs[0] = f.neg(f.one());
        coeffs[6] = f.one();
        let p = Poly::from_coeffs(coeffs);
        assert!(p.eval(&f, f.one()).is_zero());
    }

    #[test]
    fn derivative_equals_l_value() {
        let f = gf9();
        let s = vec![f.zero(), f.one(), f.theta(), f.theta_pow(3)];
        let fs = vanishing_poly(&f, &s).unwrap();
        let ds = fs.derivative(&f);
        for &a in &s {
            assert_eq!(ds.eval(&f, a), l_value(&f, &s, a).unwrap());
        }
        let bulk = l_values(&f, &s);
        for (i, &a) in s.iter().enumerate() {
            assert_eq!(bulk[i], l_value(&f, &s, a).unwrap());
        }
    }
}
