//! Homogeneous linear maps between superspaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{sign_pow, Parity, Scalar};
use crate::space::{check_same_space, SuperSpace, Vector};

/// A linear map of fixed parity. `entries[j][i]` is the coefficient of
/// codomain basis vector `j` in the image of domain basis vector `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLinearMap {
    domain: Arc<SuperSpace>,
    codomain: Arc<SuperSpace>,
    parity: Parity,
    entries: Vec<Vec<Scalar>>,
}

impl HomLinearMap {
    pub fn new(
        domain: &Arc<SuperSpace>,
        codomain: &Arc<SuperSpace>,
        parity: Parity,
        entries: Vec<Vec<Scalar>>,
    ) -> Result<HomLinearMap> {
        if entries.len() != codomain.dim() || entries.iter().any(|r| r.len() != domain.dim()) {
            return Err(Error::Shape(format!(
                "matrix must be {}x{}",
                codomain.dim(),
                domain.dim()
            )));
        }
        for (j, row) in entries.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() && codomain.parity(j) != domain.parity(i) + parity {
                    return Err(Error::GradingViolation {
                        location: format!("{} -> {}", domain.label(i), codomain.label(j)),
                        detail: format!(
                            "a map of parity {parity} cannot send a parity-{} vector to a parity-{} one",
                            domain.parity(i),
                            codomain.parity(j)
                        ),
                    });
                }
            }
        }
        Ok(HomLinearMap {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            parity,
            entries,
        })
    }

    /// Builds a map from the image of each domain basis vector.
    pub fn from_images(
        domain: &Arc<SuperSpace>,
        codomain: &Arc<SuperSpace>,
        parity: Parity,
        images: Vec<Vec<Scalar>>,
    ) -> Result<HomLinearMap> {
        if images.len() != domain.dim() || images.iter().any(|r| r.len() != codomain.dim()) {
            return Err(Error::Shape("one image per domain basis vector required".into()));
        }
        let entries = (0..codomain.dim())
            .map(|j| images.iter().map(|img| img[j].clone()).collect())
            .collect();
        HomLinearMap::new(domain, codomain, parity, entries)
    }

    /// Endomorphism given by labelled images, e.g. `[("F", &[(1, "Em")])]`;
    /// unlisted basis vectors map to zero.
    pub fn from_rules(
        space: &Arc<SuperSpace>,
        parity: Parity,
        rules: &[(&str, &[(Scalar, &str)])],
    ) -> Result<HomLinearMap> {
        let d = space.dim();
        let mut images = vec![vec![Scalar::zero(); d]; d];
        for (src, terms) in rules {
            let i = space.index_of(src).ok_or_else(|| Error::UnknownLabel(src.to_string()))?;
            let v = Vector::from_terms(space, terms)?;
            for (j, c) in v.coords().iter().enumerate() {
                images[i][j] += c;
            }
        }
        HomLinearMap::from_images(space, space, parity, images)
    }

    pub fn zero(domain: &Arc<SuperSpace>, codomain: &Arc<SuperSpace>, parity: Parity) -> HomLinearMap {
        HomLinearMap {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            parity,
            entries: vec![vec![Scalar::zero(); domain.dim()]; codomain.dim()],
        }
    }

    pub fn identity(space: &Arc<SuperSpace>) -> HomLinearMap {
        let mut m = HomLinearMap::zero(space, space, Parity::EVEN);
        for i in 0..space.dim() {
            m.entries[i][i] = Scalar::one();
        }
        m
    }

    /// Matrix positions `(j, i)` allowed for a map of this parity, row-major.
    pub fn free_entries(domain: &SuperSpace, codomain: &SuperSpace, parity: Parity) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..codomain.dim() {
            for i in 0..domain.dim() {
                if codomain.parity(j) == domain.parity(i) + parity {
                    out.push((j, i));
                }
            }
        }
        out
    }

    pub fn domain(&self) -> &Arc<SuperSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SuperSpace> {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn entry(&self, j: usize, i: usize) -> &Scalar {
        &self.entries[j][i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Scalar::is_zero)
    }

    /// Image of domain basis vector `i` as dense coordinates.
    pub fn image_of_basis(&self, i: usize) -> Vec<Scalar> {
        self.entries.iter().map(|row| row[i].clone()).collect()
    }

    pub(crate) fn apply_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        check_same_space(&self.domain, v.space(), "map argument")?;
        Vector::from_coords(&self.codomain, self.apply_coords(v.coords()))
    }

    /// Same matrix reinterpreted on renamed spaces with identical bases.
    pub fn rebased(&self, domain: &Arc<SuperSpace>, codomain: &Arc<SuperSpace>) -> Result<HomLinearMap> {
        if !self.domain.same_basis(domain) || !self.codomain.same_basis(codomain) {
            return Err(Error::SpaceMismatch("rebasing onto a different basis".into()));
        }
        HomLinearMap::new(domain, codomain, self.parity, self.entries.clone())
    }

    pub fn with_entry(&self, j: usize, i: usize, value: Scalar) -> Result<HomLinearMap> {
        let mut entries = self.entries.clone();
        entries[j][i] = value;
        HomLinearMap::new(&self.domain, &self.codomain, self.parity, entries)
    }

    pub fn scale(&self, c: &Scalar) -> HomLinearMap {
        HomLinearMap {
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &HomLinearMap) -> Result<HomLinearMap> {
        check_same_space(&self.domain, &other.domain, "map sum domain")?;
        check_same_space(&self.codomain, &other.codomain, "map sum codomain")?;
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::ParityMismatch(
                "sum of maps of different parity is not homogeneous".into(),
            ));
        }
        let parity = if self.is_zero() { other.parity } else { self.parity };
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        HomLinearMap::new(&self.domain, &self.codomain, parity, entries)
    }

    pub fn sub(&self, other: &HomLinearMap) -> Result<HomLinearMap> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Graded commutator `f∘g − (−1)^{f̄ḡ} g∘f`.
    pub fn graded_commutator(&self, other: &HomLinearMap) -> Result<HomLinearMap> {
        let fg = compose_maps(self, other)?;
        let gf = compose_maps(other, self)?;
        fg.sub(&gf.scale(&sign_pow(self.parity, other.parity)))
    }
}

/// `f ∘ g`; parity adds.
pub fn compose_maps(f: &HomLinearMap, g: &HomLinearMap) -> Result<HomLinearMap> {
    check_same_space(&g.codomain, &f.domain, "composition")?;
    let n = f.codomain.dim();
    let m = g.domain.dim();
    let inner = f.domain.dim();
    let mut entries = vec![vec![Scalar::zero(); m]; n];
    for (j, row) in entries.iter_mut().enumerate() {
        for k in 0..inner {
            let a = &f.entries[j][k];
            if a.is_zero() {
                continue;
            }
            for (i, slot) in row.iter_mut().enumerate() {
                let b = &g.entries[k][i];
                if !b.is_zero() {
                    *slot += &(a * b);
                }
            }
        }
    }
    Ok(HomLinearMap {
        domain: Arc::clone(&g.domain),
        codomain: Arc::clone(&f.codomain),
        parity: f.parity + g.parity,
        entries,
    })
}

/// Inverse map, of the same parity.
pub fn invert_map(m: &HomLinearMap) -> Result<HomLinearMap> {
    let (a0, a1) = m.domain.graded_dims();
    let (b0, b1) = m.codomain.graded_dims();
    let feasible = if m.parity.is_odd() {
        a0 == b1 && a1 == b0
    } else {
        a0 == b0 && a1 == b1
    };
    if !feasible {
        return Err(Error::ParityObstruction {
            parity: m.parity,
            domain: (a0, a1),
            codomain: (b0, b1),
        });
    }
    let inv = linalg::inverse(&m.entries).ok_or(Error::SingularMap)?;
    HomLinearMap::new(&m.codomain, &m.domain, m.parity, inv)
}
