use std::fmt::Write as _;

use crate::exactmath::{vector, FieldSpec, Scalar};

/// A coordinate vector in the standard basis of some algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(field: FieldSpec, coords: Vec<Scalar>) -> Self {
        debug_assert!(coords.iter().all(|c| c.field() == field));
        Element { field, coords }
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Element::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Element { field, coords: vector::zeros(field, dim) }
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        Element { field, coords: vector::unit(field, dim, i) }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coords)
    }

    pub fn add(&self, other: &Element) -> Element {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Element::new(self.field, coords)
    }

    pub fn sub(&self, other: &Element) -> Element {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Element::new(self.field, coords)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::new(self.field, self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Element {
        Element::new(self.field, self.coords.iter().map(|a| -a).collect())
    }

    pub fn signed(self, negate: bool) -> Element {
        if negate {
            self.neg()
        } else {
            self
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        vector::add_scaled(&mut self.coords, c, &other.coords);
    }

    /// Human-readable linear combination, e.g. `-3*e1s - 3*e2s`.
    pub fn render(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (c, label) in self.coords.iter().zip(labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(label);
            } else {
                let _ = write!(out, "{mag}*{label}");
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
