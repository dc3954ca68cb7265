//! Simplicity by exhaustive seed enumeration over GF(p) or by Norton's
//! irreducibility criterion on the multiplication algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{closure_operators, closure_under, IdealKind};
use crate::algebra::{Product, SuperAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Meataxe,
    Auto,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::Meataxe => "meataxe",
            Strategy::Auto => "auto",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplicityOptions {
    /// Largest `p^n - 1` the exhaustive strategy will enumerate.
    pub bound: u64,
    pub seed: u64,
    /// Number of random elements Norton's test draws before giving up.
    pub retries: usize,
}

impl Default for SimplicityOptions {
    fn default() -> Self {
        SimplicityOptions { bound: 1_000_000, seed: 0, retries: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Simple,
    /// `witness` is a proper nonzero ideal when one exists; it is `None` only
    /// when the algebra fails the nonzero-product or positive-dimension
    /// conventions without having a proper ideal.
    NotSimple { witness: Option<Subspace> },
    Indeterminate,
}

impl SimplicityVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            SimplicityVerdict::Simple => "SIMPLE",
            SimplicityVerdict::NotSimple { .. } => "NOT_SIMPLE",
            SimplicityVerdict::Indeterminate => "INDETERMINATE",
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, SimplicityVerdict::Simple)
    }

    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            SimplicityVerdict::NotSimple { witness } => witness.as_ref(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub verdict: SimplicityVerdict,
    /// The strategy actually run (`Auto` resolved).
    pub strategy: Strategy,
    /// Seeds enumerated, or random elements drawn for Norton's test.
    pub work: u64,
}

fn kind_for(which: Option<Product>) -> IdealKind {
    match which {
        None => IdealKind::Tp,
        Some(Product::Circ) => IdealKind::Circ,
        Some(Product::Bracket) => IdealKind::Bracket,
    }
}

/// Simplicity with respect to both products (`which = None`) or one of them.
/// Graded algebras are tested for graded ideals.
pub fn is_simple(
    a: &SuperAlgebra,
    which: Option<Product>,
    strategy: Strategy,
    opts: &SimplicityOptions,
) -> Result<SimplicityReport> {
    let kind = kind_for(which);
    let n = a.dim();
    let resolved = match strategy {
        Strategy::Auto => {
            if enumeration_size(a.field(), n).is_some_and(|s| s <= opts.bound) {
                Strategy::Exhaustive
            } else {
                Strategy::Meataxe
            }
        }
        s => s,
    };
    if resolved == Strategy::Exhaustive {
        check_enumerable(a.field(), n, opts.bound)?;
    }
    let nonzero_product = match which {
        None => a.has_product(Product::Circ) || a.has_product(Product::Bracket),
        Some(w) => a.has_product(w),
    };
    if n == 0 || !nonzero_product {
        let witness = (n >= 2).then(|| Subspace::coordinate(a.field(), n, &[0]));
        return Ok(SimplicityReport { verdict: SimplicityVerdict::NotSimple { witness }, strategy: resolved, work: 0 });
    }
    match resolved {
        Strategy::Exhaustive => {
            let (found, work) = search(a, kind)?;
            let verdict = match found {
                Some(w) => SimplicityVerdict::NotSimple { witness: Some(w) },
                None => SimplicityVerdict::Simple,
            };
            Ok(SimplicityReport { verdict, strategy: resolved, work })
        }
        _ => {
            let mut gens = closure_operators(a, kind);
            if a.is_graded() {
                gens.push(parity_projector(a));
            }
            let (verdict, work) = norton(a.field(), n, &gens, opts);
            Ok(SimplicityReport { verdict, strategy: resolved, work })
        }
    }
}

/// `p^n - 1`, or `None` over the rationals or on overflow.
fn enumeration_size(field: FieldSpec, n: usize) -> Option<u64> {
    let p = field.order()?;
    p.checked_pow(u32::try_from(n).ok()?).map(|t| t - 1)
}

fn check_enumerable(field: FieldSpec, n: usize, bound: u64) -> Result<()> {
    if !field.is_finite() {
        return Err(Error::Unsupported("exhaustive enumeration needs a finite field".into()));
    }
    match enumeration_size(field, n) {
        Some(s) if s <= bound => Ok(()),
        _ => Err(Error::Budget(format!("{field}^{n} has more than {bound} nonzero vectors"))),
    }
}

/// Searches every homogeneous seed (up to scalars) for a proper nonzero
/// closure under the operators of `kind`. Returns the first one found in
/// enumeration order.
pub fn find_proper_closure(a: &SuperAlgebra, kind: IdealKind, bound: u64) -> Result<Option<Subspace>> {
    check_enumerable(a.field(), a.dim(), bound)?;
    Ok(search(a, kind)?.0)
}

fn search(a: &SuperAlgebra, kind: IdealKind) -> Result<(Option<Subspace>, u64)> {
    let n = a.dim();
    let f = a.field();
    let ops = closure_operators(a, kind);
    let even: Vec<usize> = (0..n).filter(|&i| a.parity_of_basis(i) == 0).collect();
    let odd: Vec<usize> = (0..n).filter(|&i| a.parity_of_basis(i) == 1).collect();
    let mut work = 0u64;
    for support in [even, odd] {
        let basis: Vec<Vec<Scalar>> = support.iter().map(|&i| crate::exactmath::vector::unit(f, n, i)).collect();
        let mut found = None;
        for_each_projective_point(f, &basis, n, |v| {
            work += 1;
            let c = closure_under(f, n, &ops, std::slice::from_ref(v));
            if !c.is_full() {
                found = Some(c);
                return false;
            }
            true
        });
        if found.is_some() {
            return Ok((found, work));
        }
    }
    Ok((None, work))
}

/// Calls `visit` on one representative of every line in the span of `basis`
/// (first nonzero coefficient equal to 1), stopping when it returns false.
/// Only for prime fields.
fn for_each_projective_point(f: FieldSpec, basis: &[Vec<Scalar>], n: usize, mut visit: impl FnMut(&Vec<Scalar>) -> bool) {
    let p = f.order().expect("finite field") as u32;
    let k = basis.len();
    let elems = f.elements();
    for lead in 0..k {
        let tail = k - lead - 1;
        let mut digits = vec![0u32; tail];
        loop {
            let mut v = basis[lead].clone();
            for (t, &d) in digits.iter().enumerate() {
                if d != 0 {
                    crate::exactmath::vector::add_scaled(&mut v, &elems[d as usize], &basis[lead + 1 + t]);
                }
            }
            debug_assert_eq!(v.len(), n);
            if !visit(&v) {
                return;
            }
            let mut wrapped = true;
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < p {
                    wrapped = false;
                    break;
                }
                *d = 0;
            }
            if wrapped {
                break;
            }
        }
    }
}

fn parity_projector(a: &SuperAlgebra) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        if a.parity_of_basis(i) == 0 {
            m[(i, i)] = f.one();
        }
    }
    m
}

/// Whether Norton's test will enumerate the lines of a `k`-dimensional kernel.
fn enumerable(f: FieldSpec, k: usize) -> bool {
    match f.order() {
        None => k == 1,
        Some(p) => u32::try_from(k).ok().and_then(|k| p.checked_pow(k)).is_some_and(|t| t <= 4096),
    }
}

fn lines(f: FieldSpec, s: &Subspace) -> Vec<Vec<Scalar>> {
    if s.dim() == 1 || !f.is_finite() {
        return s.basis_vectors();
    }
    let mut out = Vec::new();
    for_each_projective_point(f, &s.basis_vectors(), s.ambient_dim(), |v| {
        out.push(v.clone());
        true
    });
    out
}

fn random_scalar(f: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match f.order() {
        Some(p) => f.from_i64(rng.random_range(0..p as i64)),
        None => f.from_i64(rng.random_range(-3..=3)),
    }
}

fn random_element(f: FieldSpec, n: usize, gens: &[Matrix], rng: &mut ChaCha8Rng) -> Matrix {
    let mut theta = Matrix::zeros(f, n, n);
    let terms = rng.random_range(2..=4);
    for _ in 0..terms {
        let len = rng.random_range(1..=3);
        let mut word = gens[rng.random_range(0..gens.len())].clone();
        for _ in 1..len {
            word = word.mul(&gens[rng.random_range(0..gens.len())]);
        }
        theta.add_scaled(&random_scalar(f, rng), &word);
    }
    theta
}

fn shifts(f: FieldSpec) -> Vec<Scalar> {
    match f {
        FieldSpec::Prime(_) => f.elements(),
        FieldSpec::Rationals => [0, 1, -1, 2, -2, 3, -3].iter().map(|&c| f.from_i64(c)).collect(),
    }
}

/// Norton's criterion. For a singular `θ` in the multiplication algebra,
/// the module is irreducible iff every nonzero vector of `ker θ` generates
/// the module and every nonzero vector of `ker θᵀ` generates the dual.
fn norton(f: FieldSpec, n: usize, gens: &[Matrix], opts: &SimplicityOptions) -> (SimplicityVerdict, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let dual: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let identity = Matrix::identity(f, n);
    for attempt in 0..opts.retries {
        let theta = random_element(f, n, gens, &mut rng);
        for lambda in shifts(f) {
            let shifted = theta.sub(&identity.scale(&lambda));
            let ker = shifted.kernel();
            if ker.is_zero() || !enumerable(f, ker.dim()) {
                continue;
            }
            for v in lines(f, &ker) {
                let sub = closure_under(f, n, gens, std::slice::from_ref(&v));
                if !sub.is_full() {
                    return (SimplicityVerdict::NotSimple { witness: Some(sub) }, attempt as u64 + 1);
                }
            }
            let ker_t = shifted.transpose().kernel();
            for w in lines(f, &ker_t) {
                let sub = closure_under(f, n, &dual, std::slice::from_ref(&w));
                if !sub.is_full() {
                    let witness = sub.basis().kernel();
                    return (SimplicityVerdict::NotSimple { witness: Some(witness) }, attempt as u64 + 1);
                }
            }
            return (SimplicityVerdict::Simple, attempt as u64 + 1);
        }
    }
    (SimplicityVerdict::Indeterminate, opts.retries as u64)
}
