//! ℤ₂-graded vector spaces with a fixed ordered basis, and their vectors.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Parity, Scalar};

/// A finite-dimensional superspace `V = V₀ ⊕ V₁` given by an ordered basis
/// of homogeneous vectors.
#[derive(Clone, Debug)]
pub struct SuperSpace {
    name: String,
    labels: Vec<String>,
    parities: Vec<Parity>,
    index: HashMap<String, usize>,
}

impl PartialEq for SuperSpace {
    fn eq(&self, other: &SuperSpace) -> bool {
        self.name == other.name && self.labels == other.labels && self.parities == other.parities
    }
}

impl Eq for SuperSpace {}

impl SuperSpace {
    pub fn new<S: Into<String>>(name: S, basis: Vec<(String, Parity)>) -> Result<SuperSpace> {
        let mut index = HashMap::with_capacity(basis.len());
        let mut labels = Vec::with_capacity(basis.len());
        let mut parities = Vec::with_capacity(basis.len());
        for (i, (label, parity)) in basis.into_iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            labels.push(label);
            parities.push(parity);
        }
        Ok(SuperSpace {
            name: name.into(),
            labels,
            parities,
            index,
        })
    }

    /// Convenience constructor from `(&str, 0|1)` pairs. Panics on bad input.
    pub fn from_pairs(name: &str, basis: &[(&str, u8)]) -> Arc<SuperSpace> {
        let basis = basis
            .iter()
            .map(|(l, p)| (l.to_string(), Parity::new(*p).expect("parity must be 0 or 1")))
            .collect();
        Arc::new(SuperSpace::new(name, basis).expect("valid basis"))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `(d₀, d₁)`.
    pub fn graded_dims(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    /// Same basis under a different name.
    pub fn renamed(&self, name: &str) -> SuperSpace {
        SuperSpace {
            name: name.to_string(),
            ..self.clone()
        }
    }

    /// Structural equality ignoring the name.
    pub fn same_basis(&self, other: &SuperSpace) -> bool {
        self.labels == other.labels && self.parities == other.parities
    }
}

/// Spaces are compatible when their bases agree; names are ignored.
pub(crate) fn check_same_space(a: &SuperSpace, b: &SuperSpace, what: &str) -> Result<()> {
    if a.same_basis(b) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch(format!(
            "{what}: `{}` vs `{}`",
            a.name(),
            b.name()
        )))
    }
}

/// A vector in a [`SuperSpace`], stored densely in the declared basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    space: Arc<SuperSpace>,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(space: &Arc<SuperSpace>) -> Vector {
        Vector {
            space: Arc::clone(space),
            coords: vec![Scalar::zero(); space.dim()],
        }
    }

    pub fn basis(space: &Arc<SuperSpace>, i: usize) -> Vector {
        let mut v = Vector::zero(space);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn from_coords(space: &Arc<SuperSpace>, coords: Vec<Scalar>) -> Result<Vector> {
        if coords.len() != space.dim() {
            return Err(Error::Shape(format!(
                "{} coordinates given for a {}-dimensional space",
                coords.len(),
                space.dim()
            )));
        }
        Ok(Vector {
            space: Arc::clone(space),
            coords,
        })
    }

    /// Builds `Σ cᵢ·labelᵢ`; repeated labels accumulate.
    pub fn from_terms(space: &Arc<SuperSpace>, terms: &[(Scalar, &str)]) -> Result<Vector> {
        let mut v = Vector::zero(space);
        for (c, label) in terms {
            let i = space
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            v.coords[i] += c;
        }
        Ok(v)
    }

    pub fn space(&self) -> &Arc<SuperSpace> {
        &self.space
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// `Ok(None)` for the zero vector, `Ok(Some(p))` when every nonzero
    /// coordinate sits on a basis vector of parity `p`.
    pub fn parity(&self) -> Result<Option<Parity>> {
        homogeneous_parity(self.space.parities(), &self.coords)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_same_space(&self.space, &other.space, "vector addition")?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Vector {
            space: Arc::clone(&self.space),
            coords,
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            space: Arc::clone(&self.space),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(self.space.labels(), &self.coords))
    }
}

pub(crate) fn homogeneous_parity(parities: &[Parity], coords: &[Scalar]) -> Result<Option<Parity>> {
    let mut found = None;
    for (p, c) in parities.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        match found {
            None => found = Some(*p),
            Some(q) if q != *p => return Err(Error::NotHomogeneous),
            Some(_) => {}
        }
    }
    Ok(found)
}

/// Canonical text for a linear combination: `2*Y - 1/2*G`, `-F`, `0`.
pub fn format_combination(labels: &[String], coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            out.push('*');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
