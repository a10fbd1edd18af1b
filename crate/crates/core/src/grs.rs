//! Generalized Reed-Solomon codes and their extended form: generator
//! matrices, dual multipliers, and the character criteria that make them
//! self-dual or self-orthogonal.
//!
//! A code is stored as (a, v, k, extended): evaluation points, column
//! multipliers, dimension, and whether the final coordinate carries the
//! top coefficient of the message polynomial. Generator matrices are
//! materialized only on demand.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, FieldSummary};
use crate::matrix::Matrix;
use crate::poly::{self, Poly};

/// Construction metadata carried along with a code built from a
/// coset-union evaluation set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub theorem: String,
    pub e1: u64,
    pub f1: u64,
    pub e2: u64,
    pub f2: u64,
    pub s: u64,
    pub t: u64,
    pub i_indices: Vec<u64>,
    pub j_indices: Vec<u64>,
    pub variant: String,
}

/// A GRS or extended GRS code over GF(q).
#[derive(Debug, Clone)]
pub struct GrsCode {
    ctx: Arc<FieldCtx>,
    a: Vec<FieldElem>,
    v: Vec<FieldElem>,
    k: usize,
    extended: bool,
    provenance: Option<Provenance>,
}

impl GrsCode {
    /// Validates and assembles a code; `a` holds the evaluation points
    /// (one fewer than the code length when `extended`).
    pub fn new(
        ctx: Arc<FieldCtx>,
        a: Vec<FieldElem>,
        v: Vec<FieldElem>,
        k: usize,
        extended: bool,
        provenance: Option<Provenance>,
    ) -> Result<GrsCode> {
        if a.len() != v.len() {
            return Err(Error::BadCode("points and multipliers differ in length"));
        }
        if v.iter().any(|x| x.is_zero()) {
            return Err(Error::BadCode("multipliers must be nonzero"));
        }
        let mut seen = HashSet::with_capacity(a.len());
        if !a.iter().all(|&x| seen.insert(x)) {
            return Err(Error::DuplicateElements);
        }
        if a.len() as u64 > ctx.q() {
            return Err(Error::BadCode("more evaluation points than field elements"));
        }
        let n = a.len() + usize::from(extended);
        if k > n {
            return Err(Error::BadCode("dimension exceeds length"));
        }
        Ok(GrsCode { ctx, a, v, k, extended, provenance })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Evaluation points (length n, or n - 1 for an extended code).
    pub fn points(&self) -> &[FieldElem] {
        &self.a
    }

    pub fn multipliers(&self) -> &[FieldElem] {
        &self.v
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Code length n.
    pub fn length(&self) -> usize {
        self.a.len() + usize::from(self.extended)
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn set_provenance(&mut self, p: Provenance) {
        self.provenance = Some(p);
    }

    pub fn export(&self) -> CodeExport {
        CodeExport {
            field: self.ctx.summary(),
            n: self.length(),
            k: self.k,
            extended: self.extended,
            a: self.a.iter().map(|&x| self.ctx.coeffs(x)).collect(),
            v: self.v.iter().map(|&x| self.ctx.coeffs(x)).collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Rebuild a code from its export, reconstructing the canonical field
    /// for (p, m) and insisting the stored field matches it.
    pub fn from_export(e: &CodeExport) -> Result<GrsCode> {
        let ctx = Arc::new(FieldCtx::new(e.field.p, e.field.m)?);
        if ctx.summary() != e.field {
            return Err(Error::FieldMismatch);
        }
        if e.n != e.a.len() + usize::from(e.extended) || e.a.len() != e.v.len() {
            return Err(Error::BadCode("length fields are inconsistent"));
        }
        let a = e
            .a
            .iter()
            .map(|c| ctx.elem_from_coeffs(c))
            .collect::<Result<Vec<_>>>()?;
        let v = e
            .v
            .iter()
            .map(|c| ctx.elem_from_coeffs(c))
            .collect::<Result<Vec<_>>>()?;
        GrsCode::new(ctx, a, v, e.k, e.extended, e.provenance.clone())
    }
}

/// Serialized code record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeExport {
    pub field: FieldSummary,
    pub n: usize,
    pub k: usize,
    pub extended: bool,
    pub a: Vec<Vec<u64>>,
    pub v: Vec<Vec<u64>>,
    pub provenance: Option<Provenance>,
}

/// Row j (0-indexed) evaluates v_i * a_i^j; an extended code appends one
/// coordinate that is 1 on the top row and 0 elsewhere.
pub fn generator_matrix(code: &GrsCode) -> Matrix {
    let ctx = code.ctx();
    let n = code.length();
    let k = code.dimension();
    let mut g = Matrix::zeros(k, n);
    for (i, (&ai, &vi)) in code.a.iter().zip(&code.v).enumerate() {
        let mut pw = ctx.one();
        for j in 0..k {
            g.set(j, i, ctx.mul(vi, pw));
            pw = ctx.mul(pw, ai);
        }
    }
    if code.extended && k >= 1 {
        g.set(k - 1, n - 1, ctx.one());
    }
    g
}

fn ensure_distinct(a: &[FieldElem]) -> Result<()> {
    let mut seen = HashSet::with_capacity(a.len());
    for &x in a {
        if !seen.insert(x) {
            return Err(Error::DuplicateElements);
        }
    }
    Ok(())
}

/// Self-dual GRS code on an even evaluation set whose L-values all have the
/// same quadratic character. Multipliers satisfy v_i^2 = lambda / L(a_i)
/// with lambda = 1 for the square class and lambda = theta otherwise.
pub fn self_dual_from_criterion(ctx: &Arc<FieldCtx>, a: &[FieldElem]) -> Result<GrsCode> {
    if a.is_empty() {
        return Err(Error::BadCode("empty evaluation set"));
    }
    if a.len() % 2 != 0 {
        return Err(Error::OddEvaluationSet(a.len()));
    }
    ensure_distinct(a)?;
    let l = poly::l_values(ctx, a);
    let chars = l.iter().map(|&x| ctx.eta(x)).collect::<Result<Vec<_>>>()?;
    if let Some(j) = chars.iter().position(|&c| c != chars[0]) {
        return Err(Error::MixedCharacter { i: 0, j });
    }
    let lambda = if chars[0] == 1 { ctx.one() } else { ctx.theta() };
    let v = l
        .iter()
        .map(|&li| ctx.sqrt(ctx.mul(lambda, ctx.inv(li)?)))
        .collect::<Result<Vec<_>>>()?;
    GrsCode::new(ctx.clone(), a.to_vec(), v, a.len() / 2, false, None)
}

/// Self-dual extended GRS code on an odd evaluation set with
/// eta(-L(a_i)) = 1 everywhere; v_i^2 = (-L(a_i))^{-1} and the code has
/// even length |a| + 1.
pub fn extended_self_dual_from_criterion(
    ctx: &Arc<FieldCtx>,
    a: &[FieldElem],
) -> Result<GrsCode> {
    if a.is_empty() {
        return Err(Error::BadCode("empty evaluation set"));
    }
    if a.len() % 2 != 1 {
        return Err(Error::EvenEvaluationSet(a.len()));
    }
    ensure_distinct(a)?;
    let l = poly::l_values(ctx, a);
    let mut v = Vec::with_capacity(a.len());
    for (i, &li) in l.iter().enumerate() {
        let neg = ctx.neg(li);
        if ctx.eta(neg)? != 1 {
            return Err(Error::CharacterViolation { index: i });
        }
        v.push(ctx.sqrt(ctx.inv(neg)?)?);
    }
    GrsCode::new(ctx.clone(), a.to_vec(), v, (a.len() + 1) / 2, true, None)
}

/// Self-orthogonal (extended) GRS code from an omega-witness with
/// eta(omega(a_i) L(a_i)) = 1 everywhere; v_i^2 = omega(a_i) / L(a_i).
///
/// Plain codes need a nonzero omega of degree at most n - 2k; extended
/// codes need degree exactly n - 2k + 1 with leading coefficient -1,
/// where n is the evaluation-set size.
pub fn self_orthogonal_from_witness(
    ctx: &Arc<FieldCtx>,
    a: &[FieldElem],
    k: usize,
    omega: &Poly,
    extended: bool,
) -> Result<GrsCode> {
    if a.is_empty() {
        return Err(Error::BadCode("empty evaluation set"));
    }
    ensure_distinct(a)?;
    let n = a.len();
    let max_k = if extended { (n + 1) / 2 } else { n / 2 };
    if k == 0 || k > max_k {
        return Err(Error::DimensionRange { k, max: max_k });
    }
    if extended {
        let want = n + 1 - 2 * k;
        if omega.degree() != Some(want) {
            return Err(Error::OmegaDegree { got: omega.degree(), bound: want });
        }
        if omega.leading() != Some(ctx.neg(ctx.one())) {
            return Err(Error::OmegaShape { expected: want });
        }
    } else {
        let bound = n - 2 * k;
        match omega.degree() {
            None => return Err(Error::OmegaDegree { got: None, bound }),
            Some(d) if d > bound => {
                return Err(Error::OmegaDegree { got: Some(d), bound })
            }
            _ => {}
        }
    }
    let l = poly::l_values(ctx, a);
    let mut v = Vec::with_capacity(n);
    for (i, (&ai, &li)) in a.iter().zip(&l).enumerate() {
        let wi = omega.eval(ctx, ai);
        if wi.is_zero() {
            return Err(Error::OmegaRoot { index: i });
        }
        if ctx.eta(ctx.mul(wi, li))? != 1 {
            return Err(Error::CharacterViolation { index: i });
        }
        v.push(ctx.sqrt(ctx.mul(wi, ctx.inv(li)?))?);
    }
    GrsCode::new(ctx.clone(), a.to_vec(), v, k, extended, None)
}

/// Length-(n+2) self-dual code from an even set S with 0 not in S:
/// the extended construction on S u {0}, using
/// L_{S u {0}}(a_i) = a_i L_S(a_i) and L_{S u {0}}(0) = prod S.
pub fn extend_by_two(ctx: &Arc<FieldCtx>, s: &[FieldElem]) -> Result<GrsCode> {
    if s.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroInSet);
    }
    if s.len() % 2 != 0 {
        return Err(Error::OddEvaluationSet(s.len()));
    }
    let mut tilde = s.to_vec();
    tilde.push(FieldElem::ZERO);
    extended_self_dual_from_criterion(ctx, &tilde)
}

/// Multipliers u with GRS_{n-k}(a, u) generating the dual code:
/// u_i = (v_i L(a_i))^{-1}. Plain codes only.
pub fn dual_multipliers(code: &GrsCode) -> Result<Vec<FieldElem>> {
    if code.is_extended() {
        return Err(Error::ExtendedUnsupported);
    }
    let ctx = code.ctx();
    let l = poly::l_values(ctx, code.points());
    code.multipliers()
        .iter()
        .zip(&l)
        .map(|(&vi, &li)| ctx.inv(ctx.mul(vi, li)))
        .collect()
}
