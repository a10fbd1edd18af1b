//! Coset-union evaluation sets and the code families built on them.
//!
//! An evaluation set is S = M u N with M a union of s cosets of
//! A = <theta^{e1}> and N a union of t cosets gamma^{2j+1} B of
//! B = <theta^{e2}>, gamma = theta^{e1/2}. Two parameter families are
//! supported, distinguished by which of r - 1 / r + 1 carries the
//! divisibility pair; each yields self-dual codes of length n1, n1 + 1, or
//! n1 + 2, plus self-orthogonal and almost self-dual variants.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::grs::{self, GrsCode, Provenance};
use crate::numth;
use crate::poly::{self, Poly};

/// The two parameter families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    T31,
    T32,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T31 => "T31",
            Family::T32 => "T32",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "T31" | "t31" => Ok(Family::T31),
            "T32" | "t32" => Ok(Family::T32),
            other => Err(Error::InvalidParams {
                issues: vec![format!("unknown family {other:?}; expected T31 or T32")],
            }),
        }
    }
}

/// Self-dual construction variants: plain length n1, the extension to
/// n1 + 1 for odd n1, and the two-coordinate extension to n1 + 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    N,
    NPlusOne,
    NPlusTwo,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::N, Variant::NPlusOne, Variant::NPlusTwo];

    pub fn label(self) -> &'static str {
        match self {
            Variant::N => "n",
            Variant::NPlusOne => "n+1",
            Variant::NPlusTwo => "n+2",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "n" => Ok(Variant::N),
            "n+1" => Ok(Variant::NPlusOne),
            "n+2" => Ok(Variant::NPlusTwo),
            other => Err(Error::InvalidParams {
                issues: vec![format!("unknown variant {other:?}; expected n, n+1, or n+2")],
            }),
        }
    }
}

/// Which self-orthogonal construction to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfOrthVariant {
    /// omega-witness directly on S; dimensions 1..=n1/2 - 1.
    Plain,
    /// omega-witness on S u {0}; dimensions 1..=floor(n1/2).
    ZeroAugmented,
}

/// A complete parameter tuple: field, family, the two decompositions
/// q - 1 = e1 f1 = e2 f2, coset counts s and t, and the coset index lists.
#[derive(Debug, Clone)]
pub struct TheoremParams {
    pub ctx: Arc<FieldCtx>,
    pub family: Family,
    pub e1: u64,
    pub f1: u64,
    pub e2: u64,
    pub f2: u64,
    pub s: u64,
    pub t: u64,
    pub i_indices: Vec<u64>,
    pub j_indices: Vec<u64>,
}

impl TheoremParams {
    /// Parameters with the canonical index choice i_mu = mu - 1,
    /// j_nu = nu - 1.
    pub fn new(
        ctx: Arc<FieldCtx>,
        family: Family,
        e1: u64,
        e2: u64,
        s: u64,
        t: u64,
    ) -> Result<TheoremParams> {
        let i = (0..s).collect();
        let j = (0..t).collect();
        TheoremParams::with_indices(ctx, family, e1, e2, s, t, i, j)
    }

    pub fn with_indices(
        ctx: Arc<FieldCtx>,
        family: Family,
        e1: u64,
        e2: u64,
        s: u64,
        t: u64,
        i_indices: Vec<u64>,
        j_indices: Vec<u64>,
    ) -> Result<TheoremParams> {
        let q1 = ctx.q() - 1;
        let mut issues = Vec::new();
        if e1 == 0 || q1 % e1 != 0 {
            issues.push(format!("e1 = {e1} does not divide q - 1 = {q1}"));
        }
        if e2 == 0 || q1 % e2 != 0 {
            issues.push(format!("e2 = {e2} does not divide q - 1 = {q1}"));
        }
        if i_indices.len() as u64 != s {
            issues.push(format!("expected {s} i-indices, got {}", i_indices.len()));
        }
        if j_indices.len() as u64 != t {
            issues.push(format!("expected {t} j-indices, got {}", j_indices.len()));
        }
        if !issues.is_empty() {
            return Err(Error::InvalidParams { issues });
        }
        Ok(TheoremParams {
            f1: q1 / e1,
            f2: q1 / e2,
            ctx,
            family,
            e1,
            e2,
            s,
            t,
            i_indices,
            j_indices,
        })
    }

    /// n1 = s f1 + t f2, the size of the evaluation set.
    pub fn n1(&self) -> u64 {
        self.s * self.f1 + self.t * self.f2
    }

    /// 2-adic valuation of e1.
    pub fn l(&self) -> u32 {
        numth::v2(self.e1)
    }

    pub fn d1(&self) -> u64 {
        self.e1 / numth::gcd(self.e1, self.e2)
    }

    pub fn d2(&self) -> u64 {
        self.e2 / numth::gcd(self.e1, self.e2)
    }

    fn provenance(&self, variant: &str) -> Provenance {
        Provenance {
            theorem: self.family.to_string(),
            e1: self.e1,
            f1: self.f1,
            e2: self.e2,
            f2: self.f2,
            s: self.s,
            t: self.t,
            i_indices: self.i_indices.clone(),
            j_indices: self.j_indices.clone(),
            variant: variant.into(),
        }
    }
}

/// Cosets beta^{i} A are pairwise distinct exactly when the indices are
/// pairwise distinct mod D1 (and likewise with D2 for the gamma cosets).
pub fn cosets_distinct(d: u64, indices: &[u64]) -> bool {
    let mut seen = HashSet::with_capacity(indices.len());
    indices.iter().all(|&i| seen.insert(i % d))
}

/// Which constructions a parameter tuple supports.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub family: Family,
    pub n1: u64,
    pub d1: u64,
    pub d2: u64,
    pub l: u32,
    pub variant_n: bool,
    pub variant_n_plus_one: bool,
    pub variant_n_plus_two: bool,
    pub self_orthogonal_plain: bool,
    pub almost_self_dual: bool,
    pub self_orthogonal_augmented: bool,
    pub notes: Vec<String>,
}

impl CaseReport {
    pub fn allows(&self, variant: Variant) -> bool {
        match variant {
            Variant::N => self.variant_n,
            Variant::NPlusOne => self.variant_n_plus_one,
            Variant::NPlusTwo => self.variant_n_plus_two,
        }
    }
}

fn sign_of(parity: u64) -> i8 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Structural validation plus per-variant applicability. Structural
/// violations (valuation, divisibility pair, index ranges, distinctness)
/// are errors; variant parity conditions are reported in the CaseReport.
pub fn validate(params: &TheoremParams) -> Result<CaseReport> {
    let r = params.ctx.r();
    let (e1, e2, s, t) = (params.e1, params.e2, params.s, params.t);
    let l = params.l();
    let d1 = params.d1();
    let d2 = params.d2();
    let mut issues = Vec::new();

    if l < 2 {
        issues.push(format!("v2(e1) = {l} but at least 2 is required"));
    } else if e2 % (1u64 << l) != 0 {
        issues.push(format!("v2(e1) = {l} but 2^{l} does not divide e2 = {e2}"));
    }
    match params.family {
        Family::T31 => {
            if (e1 * (r - 1)) % (2 * e2) != 0 {
                issues.push(format!("2*e2 = {} must divide e1*(r-1) = {}", 2 * e2, e1 * (r - 1)));
            }
            if (e2 * (r + 1)) % e1 != 0 {
                issues.push(format!("e1 = {e1} must divide e2*(r+1) = {}", e2 * (r + 1)));
            }
        }
        Family::T32 => {
            if (e1 * (r + 1)) % (2 * e2) != 0 {
                issues.push(format!("2*e2 = {} must divide e1*(r+1) = {}", 2 * e2, e1 * (r + 1)));
            }
            if (e2 * (r - 1)) % e1 != 0 {
                issues.push(format!("e1 = {e1} must divide e2*(r-1) = {}", e2 * (r - 1)));
            }
        }
    }
    if s == 0 || s > d1 {
        issues.push(format!("s = {s} is out of range 1..={d1}"));
    }
    if t == 0 || t > d2 {
        issues.push(format!("t = {t} is out of range 1..={d2}"));
    }
    if !cosets_distinct(d1, &params.i_indices) {
        issues.push(format!("i-indices are not pairwise distinct mod D1 = {d1}"));
    }
    if !cosets_distinct(d2, &params.j_indices) {
        issues.push(format!("j-indices are not pairwise distinct mod D2 = {d2}"));
    }
    if !issues.is_empty() {
        return Err(Error::InvalidParams { issues });
    }

    let n1 = params.n1();
    let even = n1 % 2 == 0;
    let mut notes = Vec::new();
    let mut report = CaseReport {
        family: params.family,
        n1,
        d1,
        d2,
        l,
        variant_n: false,
        variant_n_plus_one: false,
        variant_n_plus_two: false,
        self_orthogonal_plain: false,
        almost_self_dual: false,
        self_orthogonal_augmented: false,
        notes: Vec::new(),
    };
    match params.family {
        Family::T31 => {
            let m_ok = ((s - 1) * (r + 1)) % 4 == 0;
            if !m_ok {
                notes.push(format!("4 does not divide (s-1)(r+1) = {}", (s - 1) * (r + 1)));
            }
            report.variant_n = m_ok && even;
            report.variant_n_plus_one = m_ok && !even;
            report.variant_n_plus_two = m_ok && even;
            report.self_orthogonal_plain = m_ok && even && n1 >= 4;
            report.almost_self_dual = m_ok && even;
            report.self_orthogonal_augmented = m_ok;
        }
        Family::T32 => {
            // both integers: 2*e2 divides e1*(r+1) was checked above
            let y = t * (e1 * (r + 1) / (2 * e2));
            let x = t * ((r + 1) / 2);
            let single_ok = (y + (r + 1) / 2) % 2 == 0;
            let pair_ok = (x + y) % 2 == 0 && ((t - 1) * ((r + 1) / 2)) % 2 == 0;
            if !single_ok {
                notes.push("(r+1)/2 * (t*e1/e2 + 1) is odd".into());
            }
            if !pair_ok {
                notes.push(
                    "(r+1)/2 * (t*e1/e2 + t) or (t-1)(r+1)/2 is odd".into(),
                );
            }
            report.variant_n = single_ok && even;
            report.variant_n_plus_one = pair_ok && !even;
            report.variant_n_plus_two = pair_ok && even;
            report.self_orthogonal_plain = single_ok && even && n1 >= 4;
            report.almost_self_dual = y % 2 == 0 && ((r + 1) / 2) % 2 == 0 && even;
            report.self_orthogonal_augmented = pair_ok;
        }
    }
    if !even {
        notes.push(format!("n1 = {n1} is odd"));
    }
    report.notes = notes;
    Ok(report)
}

/// The evaluation set S = M u N in canonical order: the M cosets in index
/// order with exponents 1..=f1 of alpha, then the N cosets with exponents
/// 1..=f2 of beta.
#[derive(Debug, Clone)]
pub struct EvalSet {
    pub elements: Vec<FieldElem>,
    pub plan: TheoremParams,
}

impl EvalSet {
    pub fn m_part(&self) -> &[FieldElem] {
        &self.elements[..(self.plan.s * self.plan.f1) as usize]
    }

    pub fn n_part(&self) -> &[FieldElem] {
        &self.elements[(self.plan.s * self.plan.f1) as usize..]
    }
}

pub fn build_eval_set(params: &TheoremParams) -> Result<EvalSet> {
    validate(params)?;
    let ctx = &params.ctx;
    let q1 = ctx.q() - 1;
    let n1 = params.n1() as usize;
    let mut elements = Vec::with_capacity(n1);
    for &i in &params.i_indices {
        let base = params.e2 % q1 * (i % q1) % q1;
        for j in 1..=params.f1 {
            elements.push(ctx.theta_pow((base + params.e1 * j) % q1));
        }
    }
    let half = params.e1 / 2;
    for &jn in &params.j_indices {
        let base = half * ((2 * (jn % q1)) % q1 + 1) % q1;
        for k in 1..=params.f2 {
            elements.push(ctx.theta_pow((base + params.e2 * k) % q1));
        }
    }
    let mut seen = HashSet::with_capacity(n1);
    for &x in &elements {
        assert!(seen.insert(x), "coset-union evaluation set overlaps: validator bug");
    }
    assert_eq!(elements.len(), n1);
    Ok(EvalSet { elements, plan: params.clone() })
}

/// Characters of L_S over the two coset classes, computed by direct
/// products, next to the closed-form predictions.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterProfile {
    /// Character of L_S on the M class; None if not constant there.
    pub m_char: Option<i8>,
    /// Character of L_S on the N class; None if not constant there.
    pub n_char: Option<i8>,
    /// Whether eta(L_S(a)) is the same for every a in S.
    pub constant: bool,
    pub predicted_m: i8,
    pub predicted_n: i8,
}

impl CharacterProfile {
    pub fn agrees(&self) -> bool {
        self.m_char == Some(self.predicted_m) && self.n_char == Some(self.predicted_n)
    }
}

fn uniform(vals: &[i8]) -> Option<i8> {
    let first = *vals.first()?;
    vals.iter().all(|&v| v == first).then_some(first)
}

pub fn character_profile(set: &EvalSet) -> Result<CharacterProfile> {
    let params = &set.plan;
    let ctx = &params.ctx;
    let l = poly::l_values(ctx, &set.elements);
    let etas = l.iter().map(|&x| ctx.eta(x)).collect::<Result<Vec<_>>>()?;
    let m_len = set.m_part().len();
    let r = ctx.r();
    let (predicted_m, predicted_n) = match params.family {
        Family::T31 => (sign_of((params.s - 1) * ((r + 1) / 2)), 1),
        Family::T32 => {
            let y = params.t * (params.e1 * (r + 1) / (2 * params.e2));
            let x = params.t * ((r + 1) / 2);
            (sign_of(x + y), sign_of((params.t - 1) * ((r + 1) / 2)))
        }
    };
    Ok(CharacterProfile {
        m_char: uniform(&etas[..m_len]),
        n_char: uniform(&etas[m_len..]),
        constant: uniform(&etas).is_some(),
        predicted_m,
        predicted_n,
    })
}

fn not_applicable(report: &CaseReport, variant: &str) -> Error {
    let reason = if report.notes.is_empty() {
        "conditions not met".to_string()
    } else {
        report.notes.join("; ")
    };
    Error::VariantNotApplicable { variant: variant.into(), reason }
}

/// Self-dual code of length n1, n1 + 1, or n1 + 2 from the evaluation set.
pub fn construct_code(params: &TheoremParams, variant: Variant) -> Result<GrsCode> {
    let report = validate(params)?;
    if !report.allows(variant) {
        return Err(not_applicable(&report, variant.label()));
    }
    let set = build_eval_set(params)?;
    let ctx = &params.ctx;
    let mut code = match variant {
        Variant::N => grs::self_dual_from_criterion(ctx, &set.elements)?,
        Variant::NPlusOne => grs::extended_self_dual_from_criterion(ctx, &set.elements)?,
        Variant::NPlusTwo => grs::extend_by_two(ctx, &set.elements)?,
    };
    code.set_provenance(params.provenance(variant.label()));
    Ok(code)
}

/// Self-orthogonal code from the omega-witness the family prescribes:
/// on S itself (dimensions up to n1/2 - 1) or on S u {0} (dimensions up
/// to floor(n1/2)).
pub fn construct_self_orthogonal(
    params: &TheoremParams,
    k: usize,
    which: SelfOrthVariant,
) -> Result<GrsCode> {
    let report = validate(params)?;
    let ctx = &params.ctx;
    let set = build_eval_set(params)?;
    let n1 = params.n1();
    let r = ctx.r();
    match which {
        SelfOrthVariant::Plain => {
            if !report.self_orthogonal_plain {
                return Err(not_applicable(&report, "self-orthogonal"));
            }
            let max = (n1 / 2 - 1) as usize;
            if k == 0 || k > max {
                return Err(Error::DimensionRange { k, max });
            }
            let omega = match params.family {
                Family::T31 => Poly::monomial(1, ctx.one()),
                Family::T32 => {
                    if (r + 1) % 4 == 0 {
                        Poly::monomial(1, ctx.one())
                    } else {
                        Poly::from_coeffs(vec![ctx.theta_pow(params.t * ((r + 1) / 2) + 1)])
                    }
                }
            };
            let mut code =
                grs::self_orthogonal_from_witness(ctx, &set.elements, k, &omega, false)?;
            code.set_provenance(params.provenance("so-n"));
            Ok(code)
        }
        SelfOrthVariant::ZeroAugmented => {
            if !report.self_orthogonal_augmented {
                return Err(not_applicable(&report, "self-orthogonal on S u {0}"));
            }
            let max = (n1 / 2) as usize;
            if k == 0 || k > max {
                return Err(Error::DimensionRange { k, max });
            }
            let mut points = set.elements.clone();
            points.push(ctx.zero());
            let omega = Poly::from_coeffs(vec![ctx.theta_pow(params.e1 / 2)]);
            let mut code = grs::self_orthogonal_from_witness(ctx, &points, k, &omega, false)?;
            code.set_provenance(params.provenance("so-n+1"));
            Ok(code)
        }
    }
}

/// Almost self-dual code of length n1 + 1: the extended omega = -x witness
/// with dimension n1/2.
pub fn construct_almost_self_dual(params: &TheoremParams) -> Result<GrsCode> {
    let report = validate(params)?;
    if !report.almost_self_dual {
        return Err(not_applicable(&report, "almost-self-dual"));
    }
    let ctx = &params.ctx;
    let set = build_eval_set(params)?;
    let omega = Poly::monomial(1, ctx.neg(ctx.one()));
    let k = (params.n1() / 2) as usize;
    let mut code = grs::self_orthogonal_from_witness(ctx, &set.elements, k, &omega, true)?;
    code.set_provenance(params.provenance("asd"));
    Ok(code)
}

/// All structurally valid parameter tuples over the given field with the
/// canonical index choice, in deterministic order.
pub fn enumerate_valid_params(ctx: &Arc<FieldCtx>, family: Family) -> Vec<TheoremParams> {
    let q1 = ctx.q() - 1;
    let r = ctx.r();
    let divs = numth::divisors(ctx.q1_factors());
    let mut out = Vec::new();
    for &e1 in &divs {
        let l = numth::v2(e1);
        if l < 2 {
            continue;
        }
        for &e2 in &divs {
            if e2 % (1u64 << l) != 0 {
                continue;
            }
            let pair_ok = match family {
                Family::T31 => {
                    (e1 * (r - 1)) % (2 * e2) == 0 && (e2 * (r + 1)) % e1 == 0
                }
                Family::T32 => {
                    (e1 * (r + 1)) % (2 * e2) == 0 && (e2 * (r - 1)) % e1 == 0
                }
            };
            if !pair_ok {
                continue;
            }
            let g = numth::gcd(e1, e2);
            for s in 1..=(e1 / g) {
                for t in 1..=(e2 / g) {
                    let params = TheoremParams::new(ctx.clone(), family, e1, e2, s, t)
                        .expect("divisors are valid");
                    debug_assert!(validate(&params).is_ok());
                    out.push(params);
                }
            }
        }
        let _ = q1;
    }
    out
}

/// A structured construction request, as accepted by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructRequest {
    pub p: u64,
    pub m: u32,
    pub family: Family,
    pub e1: u64,
    pub e2: u64,
    pub s: u64,
    pub t: u64,
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i_indices: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_indices: Option<Vec<u64>>,
}

impl ConstructRequest {
    pub fn params(&self) -> Result<TheoremParams> {
        let ctx = Arc::new(FieldCtx::new(self.p, self.m)?);
        match (&self.i_indices, &self.j_indices) {
            (None, None) => {
                TheoremParams::new(ctx, self.family, self.e1, self.e2, self.s, self.t)
            }
            (i, j) => TheoremParams::with_indices(
                ctx,
                self.family,
                self.e1,
                self.e2,
                self.s,
                self.t,
                i.clone().unwrap_or_else(|| (0..self.s).collect()),
                j.clone().unwrap_or_else(|| (0..self.t).collect()),
            ),
        }
    }
}
