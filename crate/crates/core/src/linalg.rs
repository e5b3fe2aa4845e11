//! Exact Gaussian elimination over the rationals.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns in ascending order.
pub fn rref(m: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// A basis of `{x : rows·x = 0}` in `unknowns` variables.
///
/// One vector per free column, free columns ascending; each has a `1` at
/// its free column and zeros at the other free columns.
pub fn nullspace(rows: &[Vec<Scalar>], unknowns: usize) -> Result<Vec<Vec<Scalar>>> {
    if let Some(bad) = rows.iter().find(|r| r.len() != unknowns) {
        return Err(Error::Shape(format!(
            "equation has {} coefficients, expected {unknowns}",
            bad.len()
        )));
    }
    let mut m: Vec<Vec<Scalar>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let pivots = rref(&mut m, unknowns);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; unknowns];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..unknowns).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); unknowns];
        v[free] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&m[r][free];
        }
        basis.push(v);
    }
    Ok(basis)
}

pub fn rank(rows: &[Vec<Scalar>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Whether `v` lies in the span of `basis` (all of length `v.len()`).
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let cols = v.len();
    let r = rank(basis, cols);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&with, cols) == r
}
