//! Homogeneous multilinear products given by structure constants.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Parity, Scalar};
use crate::space::{check_same_space, SuperSpace, Vector};

/// Sparse image of a basis tuple: `(output basis index, coefficient)`,
/// sorted by index, zeros dropped.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A binary or ternary product `g × … × g → g` of parity `parity`,
/// stored as structure constants `c[i₁,…,iₙ → k]`.
///
/// Every nonzero constant satisfies
/// `parity(k) = parity(i₁) + … + parity(iₙ) + parity`; the constructor
/// rejects anything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperProduct {
    space: Arc<SuperSpace>,
    arity: usize,
    parity: Parity,
    table: Vec<SparseVec>,
}

/// An argument of a product evaluation.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Operand<'a> {
    Basis(usize),
    Coords(&'a [Scalar]),
}

impl<'a> From<&'a [Scalar]> for Operand<'a> {
    fn from(c: &'a [Scalar]) -> Operand<'a> {
        Operand::Coords(c)
    }
}

impl<'a> From<&'a Vec<Scalar>> for Operand<'a> {
    fn from(c: &'a Vec<Scalar>) -> Operand<'a> {
        Operand::Coords(c)
    }
}

impl From<usize> for Operand<'_> {
    fn from(i: usize) -> Self {
        Operand::Basis(i)
    }
}

impl SuperProduct {
    /// Builds a product from `(input tuple, output index, coefficient)`
    /// triples. Repeated keys accumulate.
    pub fn new<I>(space: &Arc<SuperSpace>, arity: usize, parity: Parity, constants: I) -> Result<SuperProduct>
    where
        I: IntoIterator<Item = (Vec<usize>, usize, Scalar)>,
    {
        if arity != 2 && arity != 3 {
            return Err(Error::UnsupportedArity(arity));
        }
        let d = space.dim();
        let mut dense: Vec<Vec<Scalar>> = Vec::new();
        let size = d.pow(arity as u32);
        dense.resize_with(size, Vec::new);
        for (tuple, k, c) in constants {
            if tuple.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: tuple.len(),
                });
            }
            if tuple.iter().chain(std::iter::once(&k)).any(|&i| i >= d) {
                return Err(Error::Shape(format!("basis index out of range in {tuple:?} -> {k}")));
            }
            let slot = &mut dense[flat_index(d, &tuple)];
            if slot.is_empty() {
                *slot = vec![Scalar::zero(); d];
            }
            slot[k] += &c;
        }
        let table = dense.into_iter().map(|v| to_sparse(&v)).collect();
        let p = SuperProduct {
            space: Arc::clone(space),
            arity,
            parity,
            table,
        };
        p.check_grading()?;
        Ok(p)
    }

    pub fn zero(space: &Arc<SuperSpace>, arity: usize, parity: Parity) -> Result<SuperProduct> {
        SuperProduct::new(space, arity, parity, std::iter::empty())
    }

    /// Builds a product from labelled rules such as
    /// `(&["F", "G"], &[(2, "Y")])`.
    pub fn from_rules(
        space: &Arc<SuperSpace>,
        arity: usize,
        parity: Parity,
        rules: &[(&[&str], &[(Scalar, &str)])],
    ) -> Result<SuperProduct> {
        let mut constants = Vec::new();
        for (inputs, outputs) in rules {
            let tuple = inputs
                .iter()
                .map(|l| space.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
                .collect::<Result<Vec<_>>>()?;
            for (c, l) in outputs.iter() {
                let k = space.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
                constants.push((tuple.clone(), k, c.clone()));
            }
        }
        SuperProduct::new(space, arity, parity, constants)
    }

    /// Re-checks the grading invariant.
    pub fn check_grading(&self) -> Result<()> {
        let d = self.dim();
        for (flat, out) in self.table.iter().enumerate() {
            if out.is_empty() {
                continue;
            }
            let tuple = unflatten(d, self.arity, flat);
            let expected: Parity = tuple.iter().map(|&i| self.space.parity(i)).sum::<Parity>() + self.parity;
            for (k, _) in out {
                if self.space.parity(*k) != expected {
                    return Err(grading_error(&self.space, &tuple, *k, self.parity));
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> &Arc<SuperSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Basis-parity lookup.
    pub fn p(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    /// Sparse structure constants of one basis tuple.
    pub fn basis_product(&self, tuple: &[usize]) -> &[(usize, Scalar)] {
        &self.table[flat_index(self.dim(), tuple)]
    }

    /// All nonzero constants as `(tuple, sparse image)`, tuples in
    /// lexicographic order.
    pub fn constants(&self) -> impl Iterator<Item = (Vec<usize>, &[(usize, Scalar)])> + '_ {
        let d = self.dim();
        let arity = self.arity;
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(move |(flat, v)| (unflatten(d, arity, flat), v.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Same structure constants over a renamed space.
    pub fn renamed(&self, name: &str) -> SuperProduct {
        SuperProduct {
            space: Arc::new(self.space.renamed(name)),
            ..self.clone()
        }
    }

    /// Same structure constants with a different product parity.
    pub fn with_parity(&self, parity: Parity) -> Result<SuperProduct> {
        let p = SuperProduct {
            parity,
            ..self.clone()
        };
        p.check_grading()?;
        Ok(p)
    }

    /// Multilinear evaluation on arbitrary (possibly mixed) vectors.
    pub fn eval(&self, args: &[&Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            check_same_space(&self.space, a.space(), "product argument")?;
        }
        let ops: Vec<Operand> = args.iter().map(|a| Operand::Coords(a.coords())).collect();
        Vector::from_coords(&self.space, self.apply(&ops))
    }

    /// Dense multilinear expansion over the supports of the operands.
    pub(crate) fn apply(&self, args: &[Operand]) -> Vec<Scalar> {
        debug_assert_eq!(args.len(), self.arity);
        let d = self.dim();
        let supports: Vec<Vec<(usize, Scalar)>> = args
            .iter()
            .map(|a| match a {
                Operand::Basis(i) => vec![(*i, Scalar::one())],
                Operand::Coords(c) => c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (i, x.clone()))
                    .collect(),
            })
            .collect();
        let mut out = vec![Scalar::zero(); d];
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut pos = vec![0usize; self.arity];
        let mut tuple = vec![0usize; self.arity];
        loop {
            let mut coeff = Scalar::one();
            for (slot, &p) in pos.iter().enumerate() {
                let (i, c) = &supports[slot][p];
                tuple[slot] = *i;
                if !c.is_one() {
                    coeff *= c;
                }
            }
            for (k, c) in self.basis_product(&tuple) {
                out[*k] += &(&coeff * c);
            }
            // odometer
            let mut slot = self.arity;
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                pos[slot] += 1;
                if pos[slot] < supports[slot].len() {
                    break;
                }
                pos[slot] = 0;
            }
        }
    }

    /// Product of basis vectors as dense coordinates.
    pub(crate) fn basis_dense(&self, tuple: &[usize]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (k, c) in self.basis_product(tuple) {
            out[*k] = c.clone();
        }
        out
    }
}

/// `eval_product` under its conventional name.
pub fn eval_product(p: &SuperProduct, args: &[&Vector]) -> Result<Vector> {
    p.eval(args)
}

fn flat_index(d: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * d + i)
}

fn unflatten(d: usize, arity: usize, mut flat: usize) -> Vec<usize> {
    let mut tuple = vec![0; arity];
    for slot in (0..arity).rev() {
        tuple[slot] = flat % d;
        flat /= d;
    }
    tuple
}

pub(crate) fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn grading_error(space: &SuperSpace, tuple: &[usize], k: usize, parity: Parity) -> Error {
    let labels: Vec<&str> = tuple.iter().map(|&i| space.label(i)).collect();
    let mut detail = String::new();
    for &i in tuple {
        let _ = write!(detail, "{}+", space.parity(i));
    }
    let total: Parity = tuple.iter().map(|&i| space.parity(i)).sum::<Parity>() + parity;
    let _ = write!(
        detail,
        "{parity} = {total}, but `{}` has parity {}",
        space.label(k),
        space.parity(k)
    );
    Error::GradingViolation {
        location: format!("[{}] -> {}", labels.join(","), space.label(k)),
        detail,
    }
}
