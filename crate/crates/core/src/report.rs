//! Check reports with exhaustive counterexample lists.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::scalar::Scalar;
use crate::space::{SuperSpace, Vector};

/// One basis tuple at which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Sub-identity that failed, e.g. `super_skew` inside `super_lie`.
    pub clause: String,
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Outcome of checking one identity on every basis tuple.
///
/// `passed()` holds exactly when `counterexamples` is empty. Counterexamples
/// are grouped by clause, in clause order, and lexicographic by tuple
/// within a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(identity: &str, counterexamples: Vec<Counterexample>) -> CheckReport {
        CheckReport {
            identity: identity.to_string(),
            counterexamples,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Conjunction of several reports under a new name.
    pub fn conjunction(identity: &str, parts: Vec<CheckReport>) -> CheckReport {
        CheckReport {
            identity: identity.to_string(),
            counterexamples: parts.into_iter().flat_map(|r| r.counterexamples).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.identity,
            "passed": self.passed(),
            "counterexamples": self.counterexamples.iter().map(|c| json!({
                "clause": c.clause,
                "tuple": c.labels,
                "lhs": c.lhs.to_string(),
                "rhs": c.rhs.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{}: {}", self.identity, verdict)?;
        if !self.passed() {
            write!(f, " ({} counterexamples)", self.counterexamples.len())?;
        }
        for c in &self.counterexamples {
            write!(f, "\n  {} ({}): lhs = {}, rhs = {}", c.clause, c.labels.join(","), c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

/// Iterates basis tuples in lexicographic order and records every tuple
/// where the two sides differ.
pub(crate) struct Scan<'a> {
    pub clause: &'static str,
    pub slots: Vec<&'a Arc<SuperSpace>>,
    pub out: &'a Arc<SuperSpace>,
}

impl<'a> Scan<'a> {
    pub fn new(clause: &'static str, slots: Vec<&'a Arc<SuperSpace>>, out: &'a Arc<SuperSpace>) -> Scan<'a> {
        Scan { clause, slots, out }
    }

    /// Same space in every slot and as output.
    pub fn uniform(clause: &'static str, space: &'a Arc<SuperSpace>, arity: usize) -> Scan<'a> {
        Scan::new(clause, vec![space; arity], space)
    }

    pub fn run<F>(&self, first_only: bool, mut sides: F) -> Vec<Counterexample>
    where
        F: FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
    {
        let dims: Vec<usize> = self.slots.iter().map(|s| s.dim()).collect();
        let mut found = Vec::new();
        if dims.contains(&0) {
            return found;
        }
        let mut tuple = vec![0usize; dims.len()];
        loop {
            let (lhs, rhs) = sides(&tuple);
            if lhs != rhs {
                found.push(Counterexample {
                    clause: self.clause.to_string(),
                    tuple: tuple.clone(),
                    labels: tuple
                        .iter()
                        .zip(&self.slots)
                        .map(|(&i, s)| s.label(i).to_string())
                        .collect(),
                    lhs: Vector::from_coords(self.out, lhs).expect("output dimension"),
                    rhs: Vector::from_coords(self.out, rhs).expect("output dimension"),
                });
                if first_only {
                    return found;
                }
            }
            let mut slot = dims.len();
            loop {
                if slot == 0 {
                    return found;
                }
                slot -= 1;
                tuple[slot] += 1;
                if tuple[slot] < dims[slot] {
                    break;
                }
                tuple[slot] = 0;
            }
        }
    }
}

/// Dense-vector helpers shared by the identity code.
pub(crate) mod lin {
    use crate::scalar::Scalar;

    pub fn zero(d: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); d]
    }

    /// `acc += c·v`.
    pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a += &(c * x);
            }
        }
    }

    pub fn scaled(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(|x| c * x).collect()
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// `Σ cᵢ·vᵢ`.
    pub fn combo(d: usize, terms: &[(Scalar, &[Scalar])]) -> Vec<Scalar> {
        let mut acc = zero(d);
        for (c, v) in terms {
            axpy(&mut acc, c, v);
        }
        acc
    }
}
