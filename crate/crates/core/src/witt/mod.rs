//! The Witt algebra `{e_i, e_j} = (i - j) e_{i+j}` on `span{e_i : i ∈ Z}`
//! together with mutations `x ·_q y = x q y` of the Laurent product
//! `e_i e_j = e_{i+j}`, over the rationals.
//!
//! Identities are checked on index windows: inputs are restricted to the
//! window, products are computed exactly wherever they land.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar};
use crate::identities::IdentityId;

const Q: FieldSpec = FieldSpec::Rationals;

/// A finitely supported combination `Σ c_k e_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZElement {
    terms: BTreeMap<i64, Scalar>,
}

impl ZElement {
    pub fn zero() -> Self {
        ZElement::default()
    }

    pub fn monomial(k: i64, c: Scalar) -> Self {
        let mut z = ZElement::zero();
        z.add_term(k, c);
        z
    }

    pub fn basis(k: i64) -> Self {
        ZElement::monomial(k, Q.one())
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut z = ZElement::zero();
        for &(k, c) in pairs {
            z.add_term(k, Q.from_i64(c));
        }
        z
    }

    /// Parses `k:coeff` pairs separated by commas, e.g. `0:1,1:2` for
    /// `e0 + 2e1`. Repeated indices are summed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut z = ZElement::zero();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, c) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected k:coeff, got {part:?}")))?;
            let k: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad index in {part:?}")))?;
            z.add_term(k, Q.parse_scalar(c)?);
        }
        Ok(z)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, k: i64) -> Scalar {
        self.terms.get(&k).cloned().unwrap_or_else(|| Q.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = &self.coefficient(k) + &c;
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn add(&self, other: &ZElement) -> ZElement {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> ZElement {
        let mut out = ZElement::zero();
        for (k, v) in self.terms() {
            out.add_term(k, v * c);
        }
        out
    }

    pub fn sub(&self, other: &ZElement) -> ZElement {
        self.add(&other.scale(&-Q.one()))
    }
}

impl fmt::Display for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "e{k}")?;
            } else {
                write!(f, "{mag}*e{k}")?;
            }
        }
        Ok(())
    }
}

fn shift(i: i64, j: i64) -> Result<i64> {
    i.checked_add(j).ok_or_else(|| Error::Overflow(format!("index {i} + {j}")))
}

/// The bracket on basis pairs.
#[derive(Clone, Copy, Debug)]
pub enum BracketRule {
    /// `{e_i, e_j} = (i - j) e_{i+j}`
    Witt,
    /// Any other rule on basis pairs, for experiments and tests.
    Custom(fn(i64, i64) -> Result<ZElement>),
}

impl BracketRule {
    fn on_basis(self, i: i64, j: i64) -> Result<ZElement> {
        match self {
            BracketRule::Witt => {
                let c = i.checked_sub(j).ok_or_else(|| Error::Overflow(format!("index {i} - {j}")))?;
                Ok(ZElement::monomial(shift(i, j)?, Q.from_i64(c)))
            }
            BracketRule::Custom(f) => f(i, j),
        }
    }
}

/// A Witt-type bracket with the Laurent product mutated by `q`.
#[derive(Clone, Debug)]
pub struct ZAlgebraSpec {
    pub q: ZElement,
    pub bracket: BracketRule,
}

impl ZAlgebraSpec {
    pub fn witt(q: ZElement) -> Self {
        ZAlgebraSpec { q, bracket: BracketRule::Witt }
    }

    pub fn bracket(&self, x: &ZElement, y: &ZElement) -> Result<ZElement> {
        let mut out = ZElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                out = out.add(&self.bracket.on_basis(i, j)?.scale(&(a * b)));
            }
        }
        Ok(out)
    }

    pub fn product(&self, x: &ZElement, y: &ZElement) -> Result<ZElement> {
        laurent(&laurent(x, &self.q)?, y)
    }
}

/// `{x, y}` for the Witt rule.
pub fn z_bracket(x: &ZElement, y: &ZElement) -> Result<ZElement> {
    ZAlgebraSpec::witt(ZElement::basis(0)).bracket(x, y)
}

/// `x ·_q y = x q y`.
pub fn z_product(spec: &ZAlgebraSpec, x: &ZElement, y: &ZElement) -> Result<ZElement> {
    spec.product(x, y)
}

/// Laurent product `e_i e_j = e_{i+j}`.
pub fn laurent(x: &ZElement, y: &ZElement) -> Result<ZElement> {
    let mut out = ZElement::zero();
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            out.add_term(shift(i, j)?, a * b);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowReport {
    pub identity: IdentityId,
    pub lo: i64,
    pub hi: i64,
    pub triples_checked: u64,
    pub counterexample: Option<[i64; 3]>,
    pub defect: Option<ZElement>,
}

impl WindowReport {
    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }
}

fn defect_at(spec: &ZAlgebraSpec, id: IdentityId, x: &ZElement, y: &ZElement, z: &ZElement) -> Result<ZElement> {
    let m = |a: &ZElement, b: &ZElement| spec.product(a, b);
    let b = |a: &ZElement, c: &ZElement| spec.bracket(a, c);
    match id {
        IdentityId::AssocCirc => Ok(m(&m(x, y)?, z)?.sub(&m(x, &m(y, z)?)?)),
        IdentityId::JacobiSuper => Ok(b(&b(x, y)?, z)?.add(&b(&b(y, z)?, x)?).add(&b(&b(z, x)?, y)?)),
        IdentityId::TpLeibnizSuper => {
            let lhs = m(x, &b(y, z)?)?.scale(&Q.from_i64(2));
            Ok(lhs.sub(&b(&m(x, y)?, z)?).sub(&b(y, &m(x, z)?)?))
        }
        other => Err(Error::Input(format!("{other} is not checked on windows"))),
    }
}

/// Checks an identity on every basis triple with indices in `[lo, hi]`.
pub fn window_check(spec: &ZAlgebraSpec, id: IdentityId, lo: i64, hi: i64) -> Result<WindowReport> {
    if lo > hi {
        return Err(Error::Input(format!("empty window {lo}..{hi}")));
    }
    if !matches!(id, IdentityId::AssocCirc | IdentityId::JacobiSuper | IdentityId::TpLeibnizSuper) {
        return Err(Error::Input(format!("{id} is not checked on windows")));
    }
    let mut report = WindowReport { identity: id, lo, hi, triples_checked: 0, counterexample: None, defect: None };
    for i in lo..=hi {
        for j in lo..=hi {
            for k in lo..=hi {
                report.triples_checked += 1;
                let d = defect_at(spec, id, &ZElement::basis(i), &ZElement::basis(j), &ZElement::basis(k))?;
                if !d.is_zero() {
                    report.counterexample = Some([i, j, k]);
                    report.defect = Some(d);
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// The Laurent inverse of `q`. Units of the Laurent polynomial ring are the
/// nonzero monomials, so this is `c⁻¹ e_{-k}` for `q = c e_k` and `None`
/// otherwise.
pub fn laurent_invertible(q: &ZElement) -> Result<Option<ZElement>> {
    if q.is_zero() {
        return Err(Error::Input("the zero element has no inverse".into()));
    }
    if q.support_len() != 1 {
        return Ok(None);
    }
    let (k, c) = q.terms().next().expect("one term");
    let neg = k.checked_neg().ok_or_else(|| Error::Overflow(format!("index -({k})")))?;
    Ok(Some(ZElement::monomial(neg, c.inv().expect("nonzero coefficient"))))
}

/// An element `u` supported in `[lo, hi]` with `u ·_q e_k = e_k` for every
/// `k` in the window, found by solving the linear system directly.
pub fn unit_in_window(spec: &ZAlgebraSpec, lo: i64, hi: i64) -> Result<Option<ZElement>> {
    if lo > hi {
        return Err(Error::Input(format!("empty window {lo}..{hi}")));
    }
    let unknowns: Vec<i64> = (lo..=hi).collect();
    let mut images: Vec<Vec<ZElement>> = Vec::new();
    let mut out_lo = i64::MAX;
    let mut out_hi = i64::MIN;
    for &k in &unknowns {
        let row: Vec<ZElement> = unknowns
            .iter()
            .map(|&m| spec.product(&ZElement::basis(m), &ZElement::basis(k)))
            .collect::<Result<_>>()?;
        for z in &row {
            out_lo = out_lo.min(z.min_index().unwrap_or(k));
            out_hi = out_hi.max(z.max_index().unwrap_or(k));
        }
        out_lo = out_lo.min(k);
        out_hi = out_hi.max(k);
        images.push(row);
    }
    let width = (out_hi - out_lo + 1) as usize;
    let cols = unknowns.len();
    let mut m = Matrix::zeros(Q, unknowns.len() * width, cols);
    let mut rhs = vec![Q.zero(); unknowns.len() * width];
    for (r, (&k, row)) in unknowns.iter().zip(&images).enumerate() {
        for (c, z) in row.iter().enumerate() {
            for (idx, v) in z.terms() {
                m[(r * width + (idx - out_lo) as usize, c)] = v.clone();
            }
        }
        rhs[r * width + (k - out_lo) as usize] = Q.one();
    }
    Ok(m.solve(&rhs).map(|u| {
        let mut z = ZElement::zero();
        for (&idx, c) in unknowns.iter().zip(u) {
            z.add_term(idx, c);
        }
        z
    }))
}

/// An element `plain + starredˢ` of the Kantor double `W ⊕ Wˢ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubleZElement {
    pub plain: ZElement,
    pub starred: ZElement,
}

/// Kantor double product of the mutated Witt algebra:
/// `x*y = x·_q y`, `xˢ*y = x*yˢ = (x·_q y)ˢ`, `xˢ*yˢ = {x,y}`.
pub fn double_product(spec: &ZAlgebraSpec, a: &DoubleZElement, b: &DoubleZElement) -> Result<DoubleZElement> {
    let plain = spec.product(&a.plain, &b.plain)?.add(&spec.bracket(&a.starred, &b.starred)?);
    let starred = spec.product(&a.starred, &b.plain)?.add(&spec.product(&a.plain, &b.starred)?);
    Ok(DoubleZElement { plain, starred })
}
