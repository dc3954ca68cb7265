//! Finite-dimensional Z2-graded algebras with two products given by structure
//! constants: a supercommutative product `∘` and a super skew-symmetric
//! bracket `{·,·}`.
//!
//! One-product superalgebras (Kantor doubles, Lie doubles) use the same type
//! with one table left empty.

mod element;
mod file;

use std::collections::BTreeMap;
use std::fmt;

pub use element::Element;
pub use file::AlgebraFile;

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar};
use crate::kantor::DoubleLayout;

/// Which of the two products an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Product {
    Circ,
    Bracket,
}

impl Product {
    pub fn name(self) -> &'static str {
        match self {
            Product::Circ => "circ",
            Product::Bracket => "bracket",
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One nonzero structure constant: `e_i · e_j` has coefficient `coeff` on `e_k`.
pub type TableEntry = (usize, usize, usize, Scalar);

type Table = BTreeMap<(usize, usize, usize), Scalar>;

/// `(-1)^(a*b)` as a negation flag.
pub(crate) fn sign_flip(a: u8, b: u8) -> bool {
    a & b & 1 == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    field: FieldSpec,
    parity: Vec<u8>,
    circ: Table,
    bracket: Table,
    layout: Option<DoubleLayout>,
    // products of basis pairs, index i * dim + j
    circ_pairs: Vec<Vec<(usize, Scalar)>>,
    bracket_pairs: Vec<Vec<(usize, Scalar)>>,
}

impl SuperAlgebra {
    /// Builds an algebra from sparse tables.
    ///
    /// Out-of-range indices, repeated entries, parities outside {0,1} and
    /// foreign-field coefficients are rejected here. Zero coefficients are
    /// dropped. Symmetry and parity homogeneity are *not* enforced; run
    /// [`SuperAlgebra::validate`] for those.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        parity: Vec<u8>,
        circ: Vec<TableEntry>,
        bracket: Vec<TableEntry>,
    ) -> Result<Self> {
        let dim = parity.len();
        if let Some(p) = parity.iter().find(|&&p| p > 1) {
            return Err(Error::Input(format!("parity value {p} is not 0 or 1")));
        }
        let circ = build_table(Product::Circ, field, dim, circ)?;
        let bracket = build_table(Product::Bracket, field, dim, bracket)?;
        let circ_pairs = pair_cache(dim, &circ);
        let bracket_pairs = pair_cache(dim, &bracket);
        Ok(SuperAlgebra {
            name: name.into(),
            field,
            parity,
            circ,
            bracket,
            layout: None,
            circ_pairs,
            bracket_pairs,
        })
    }

    pub fn builder(name: impl Into<String>, field: FieldSpec, parity: Vec<u8>) -> AlgebraBuilder {
        AlgebraBuilder { name: name.into(), field, parity, circ: BTreeMap::new(), bracket: BTreeMap::new() }
    }

    pub fn with_layout(mut self, layout: DoubleLayout) -> Self {
        self.layout = Some(layout);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn parity_of_basis(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn is_graded(&self) -> bool {
        self.parity.contains(&1)
    }

    pub fn layout(&self) -> Option<&DoubleLayout> {
        self.layout.as_ref()
    }

    pub fn table(&self, which: Product) -> impl Iterator<Item = TableEntry> + '_ {
        let t = match which {
            Product::Circ => &self.circ,
            Product::Bracket => &self.bracket,
        };
        t.iter().map(|(&(i, j, k), c)| (i, j, k, c.clone()))
    }

    pub fn coefficient(&self, which: Product, i: usize, j: usize, k: usize) -> Scalar {
        let t = match which {
            Product::Circ => &self.circ,
            Product::Bracket => &self.bracket,
        };
        t.get(&(i, j, k)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn has_product(&self, which: Product) -> bool {
        match which {
            Product::Circ => !self.circ.is_empty(),
            Product::Bracket => !self.bracket.is_empty(),
        }
    }

    /// `e_i · e_j` as sparse `(k, coeff)` pairs.
    pub fn basis_product(&self, which: Product, i: usize, j: usize) -> &[(usize, Scalar)] {
        let n = self.dim();
        match which {
            Product::Circ => &self.circ_pairs[i * n + j],
            Product::Bracket => &self.bracket_pairs[i * n + j],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim(), i)
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.field, self.dim())
    }

    /// Parity of a homogeneous element; `None` when it mixes parities. The
    /// zero element counts as even.
    pub fn element_parity(&self, x: &Element) -> Option<u8> {
        let mut seen = None;
        for (i, c) in x.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(self.parity[i]),
                Some(p) if p != self.parity[i] => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(0))
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::Dimension(format!("element of length {} in algebra of dimension {}", x.dim(), self.dim())));
        }
        if x.field() != self.field {
            return Err(Error::FieldMismatch { expected: self.field, found: x.field() });
        }
        Ok(())
    }

    /// Bilinear extension of the selected table.
    pub fn multiply(&self, which: Product, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(which, x, y))
    }

    /// Unchecked product, for internal loops over well-formed elements.
    pub(crate) fn mul(&self, which: Product, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        let mut out = crate::exactmath::vector::zeros(self.field, n);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let pairs = self.basis_product(which, i, j);
                if pairs.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in pairs {
                    out[*k] = &out[*k] + &(&c * v);
                }
            }
        }
        Element::new(self.field, out)
    }

    pub(crate) fn mul_basis(&self, which: Product, i: usize, j: usize) -> Element {
        let mut out = crate::exactmath::vector::zeros(self.field, self.dim());
        for (k, v) in self.basis_product(which, i, j) {
            out[*k] = v.clone();
        }
        Element::new(self.field, out)
    }

    /// Matrix of `x ↦ e_i · x`.
    pub fn basis_left_operator(&self, which: Product, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            for (k, v) in self.basis_product(which, i, j) {
                m[(*k, j)] = v.clone();
            }
        }
        m
    }

    /// Matrix of `x ↦ x · e_j`.
    pub fn basis_right_operator(&self, which: Product, j: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for (k, v) in self.basis_product(which, i, j) {
                m[(*k, i)] = v.clone();
            }
        }
        m
    }

    /// Matrix of left multiplication by `a` (`P_a` for `∘`, `Q_a` for the
    /// bracket). On a graded algebra `a` must be homogeneous.
    pub fn left_mult_operator(&self, which: Product, a: &Element) -> Result<Matrix> {
        self.check_element(a)?;
        if self.element_parity(a).is_none() {
            return Err(Error::Parity("left multiplication by a non-homogeneous element".into()));
        }
        Ok(self.left_op(which, a))
    }

    pub(crate) fn left_op(&self, which: Product, a: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, v) in self.basis_product(which, i, j) {
                    m[(*k, j)] = &m[(*k, j)] + &(ai * v);
                }
            }
        }
        m
    }

    /// Checks parity homogeneity and the (super)symmetry of both tables.
    /// Reports the first violation, scanning `∘` before the bracket and each
    /// table in `(i, j, k)` order.
    pub fn validate(&self) -> ValidationReport {
        for (which, table) in [(Product::Circ, &self.circ), (Product::Bracket, &self.bracket)] {
            for (&(i, j, k), c) in table {
                if self.parity[k] != (self.parity[i] + self.parity[j]) % 2 {
                    return ValidationReport::violation(
                        ViolationKind::Parity,
                        which,
                        (i, j, k),
                        format!("e{i} and e{j} have parities {} and {} but e{k} has parity {}", self.parity[i], self.parity[j], self.parity[k]),
                    );
                }
                let flip = sign_flip(self.parity[i], self.parity[j]);
                // circ: c_ij = (-1)^{ij} c_ji ; bracket: c_ij = -(-1)^{ij} c_ji
                let negate = match which {
                    Product::Circ => flip,
                    Product::Bracket => !flip,
                };
                let partner = table.get(&(j, i, k)).cloned().unwrap_or_else(|| self.field.zero());
                if *c != partner.clone().signed(negate) {
                    return ValidationReport::violation(
                        ViolationKind::Symmetry,
                        which,
                        (i, j, k),
                        format!("coefficient {c} at ({i},{j},{k}) does not match {partner} at ({j},{i},{k})"),
                    );
                }
            }
        }
        ValidationReport { violation: None }
    }

    /// Block-diagonal direct sum; cross products vanish.
    pub fn direct_sum(&self, other: &SuperAlgebra) -> Result<SuperAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        let n = self.dim();
        let shift = |t: &Table, off: usize| -> Vec<TableEntry> {
            t.iter().map(|(&(i, j, k), c)| (i + off, j + off, k + off, c.clone())).collect()
        };
        let mut circ = shift(&self.circ, 0);
        circ.extend(shift(&other.circ, n));
        let mut bracket = shift(&self.bracket, 0);
        bracket.extend(shift(&other.bracket, n));
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        SuperAlgebra::new(format!("{}+{}", self.name, other.name), self.field, parity, circ, bracket)
    }

    /// Basis labels `e1..en`, or `e1..em, e1s..ems` for doubles.
    pub fn basis_labels(&self) -> Vec<String> {
        match &self.layout {
            Some(l) => {
                let m = l.source_dim;
                (0..self.dim())
                    .map(|i| if i < m { format!("e{}", i + 1) } else { format!("e{}s", i - m + 1) })
                    .collect()
            }
            None => (0..self.dim()).map(|i| format!("e{}", i + 1)).collect(),
        }
    }
}

fn build_table(which: Product, field: FieldSpec, dim: usize, entries: Vec<TableEntry>) -> Result<Table> {
    let mut t = Table::new();
    for (i, j, k, c) in entries {
        if i >= dim || j >= dim || k >= dim {
            return Err(Error::Input(format!("{which} entry ({i},{j},{k}) out of range for dimension {dim}")));
        }
        if c.field() != field {
            return Err(Error::FieldMismatch { expected: field, found: c.field() });
        }
        if t.contains_key(&(i, j, k)) {
            return Err(Error::Input(format!("{which} entry ({i},{j},{k}) listed twice")));
        }
        if !c.is_zero() {
            t.insert((i, j, k), c);
        }
    }
    Ok(t)
}

fn pair_cache(dim: usize, t: &Table) -> Vec<Vec<(usize, Scalar)>> {
    let mut pairs = vec![Vec::new(); dim * dim];
    for (&(i, j, k), c) in t {
        pairs[i * dim + j].push((k, c.clone()));
    }
    pairs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Parity,
    Symmetry,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub product: Product,
    pub entry: (usize, usize, usize),
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
}

impl ValidationReport {
    fn violation(kind: ViolationKind, product: Product, entry: (usize, usize, usize), message: String) -> Self {
        ValidationReport { violation: Some(Violation { kind, product, entry, message }) }
    }

    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Fluent construction from integer or scalar structure constants.
///
/// `circ_sym` and `bracket_skew` also write the mirrored `(j, i, k)` entry with
/// the sign the corresponding symmetry law requires.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    field: FieldSpec,
    parity: Vec<u8>,
    circ: Table,
    bracket: Table,
}

impl AlgebraBuilder {
    pub fn circ(mut self, i: usize, j: usize, k: usize, c: Scalar) -> Self {
        self.circ.insert((i, j, k), c);
        self
    }

    pub fn bracket(mut self, i: usize, j: usize, k: usize, c: Scalar) -> Self {
        self.bracket.insert((i, j, k), c);
        self
    }

    pub fn circ_sym(self, i: usize, j: usize, k: usize, c: i64) -> Self {
        let c = self.field.from_i64(c);
        self.circ_sym_scalar(i, j, k, c)
    }

    pub fn circ_sym_scalar(mut self, i: usize, j: usize, k: usize, c: Scalar) -> Self {
        if i != j {
            let flip = sign_flip(self.parity_at(i), self.parity_at(j));
            self.circ.insert((j, i, k), c.clone().signed(flip));
        }
        self.circ.insert((i, j, k), c);
        self
    }

    pub fn bracket_skew(self, i: usize, j: usize, k: usize, c: i64) -> Self {
        let c = self.field.from_i64(c);
        self.bracket_skew_scalar(i, j, k, c)
    }

    pub fn bracket_skew_scalar(mut self, i: usize, j: usize, k: usize, c: Scalar) -> Self {
        if i != j {
            let flip = sign_flip(self.parity_at(i), self.parity_at(j));
            self.bracket.insert((j, i, k), c.clone().signed(!flip));
        }
        self.bracket.insert((i, j, k), c);
        self
    }

    fn parity_at(&self, i: usize) -> u8 {
        self.parity.get(i).copied().unwrap_or(0)
    }

    pub fn build(self) -> Result<SuperAlgebra> {
        let flat = |t: Table| t.into_iter().map(|((i, j, k), c)| (i, j, k, c)).collect();
        SuperAlgebra::new(self.name, self.field, self.parity, flat(self.circ), flat(self.bracket))
    }
}
