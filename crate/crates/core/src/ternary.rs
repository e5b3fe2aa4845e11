//! Ternary products: Leibniz and Filippov identities, 3-Super-Lie checks,
//! ternary Rota-Baxter operators and the reduction to a binary bracket.
//!
//! `q` denotes the parity of the ternary product.

use crate::error::{Error, Result};
use crate::identities::{check_super_lie, require_arity, require_endomorphism, Mode};
use crate::map::HomLinearMap;
use crate::product::{Operand, SuperProduct};
use crate::report::{lin, CheckReport, Counterexample, Scan};
use crate::scalar::{sign_pow, Scalar};
use crate::space::{check_same_space, homogeneous_parity, Vector};

use Operand::{Basis as B, Coords as C};

fn t3(g: &SuperProduct, a: Operand, b: Operand, c: Operand) -> Vec<Scalar> {
    g.apply(&[a, b, c])
}

/// Shared by the left ternary Leibniz and Filippov checks:
/// `[x₁,x₂,[y₁,y₂,y₃]] = [[x₁,x₂,y₁],y₂,y₃]
///   + (−1)^{(x̄₁+x̄₂+q)(ȳ₁+q)} [y₁,[x₁,x₂,y₂],y₃]
///   + (−1)^{(x̄₁+x̄₂+q)(ȳ₁+ȳ₂)} [y₁,y₂,[x₁,x₂,y₃]]`.
fn left_leibniz_clause(g: &SuperProduct, name: &'static str, first_only: bool) -> Vec<Counterexample> {
    let q = g.parity();
    Scan::uniform(name, g.space(), 5).run(first_only, |t| {
        let (x1, x2, y1, y2, y3) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = t3(g, B(x1), B(x2), C(&g.basis_dense(&[y1, y2, y3])));
        let shift = g.p(x1) + g.p(x2) + q;
        let a = t3(g, C(&g.basis_dense(&[x1, x2, y1])), B(y2), B(y3));
        let b = t3(g, B(y1), C(&g.basis_dense(&[x1, x2, y2])), B(y3));
        let c = t3(g, B(y1), B(y2), C(&g.basis_dense(&[x1, x2, y3])));
        let rhs = lin::combo(
            g.dim(),
            &[
                (Scalar::one(), &a),
                (sign_pow(shift, g.p(y1) + q), &b),
                (sign_pow(shift, g.p(y1) + g.p(y2)), &c),
            ],
        );
        (lhs, rhs)
    })
}

pub fn check_left_ternary_leibniz(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 3)?;
    Ok(CheckReport::new("left_ternary_leibniz", left_leibniz_clause(alg, "left_ternary_leibniz", false)))
}

/// `[[x₁,x₂,y₁],y₂,y₃] = [x₁,x₂,[y₁,y₂,y₃]]
///   + (−1)^{(ȳ₂+ȳ₃+q)(ȳ₁+q)} [x₁,[x₂,y₂,y₃],y₁]
///   + (−1)^{(x̄₂+ȳ₁)(ȳ₂+ȳ₃+q)} [[x₁,y₂,y₃],x₂,y₁]`.
pub fn check_right_ternary_leibniz(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 3)?;
    let g = alg;
    let q = g.parity();
    let found = Scan::uniform("right_ternary_leibniz", g.space(), 5).run(false, |t| {
        let (x1, x2, y1, y2, y3) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = t3(g, C(&g.basis_dense(&[x1, x2, y1])), B(y2), B(y3));
        let shift = g.p(y2) + g.p(y3) + q;
        let a = t3(g, B(x1), B(x2), C(&g.basis_dense(&[y1, y2, y3])));
        let b = t3(g, B(x1), C(&g.basis_dense(&[x2, y2, y3])), B(y1));
        let c = t3(g, C(&g.basis_dense(&[x1, y2, y3])), B(x2), B(y1));
        let rhs = lin::combo(
            g.dim(),
            &[
                (Scalar::one(), &a),
                (sign_pow(shift, g.p(y1) + q), &b),
                (sign_pow(g.p(x2) + g.p(y1), shift), &c),
            ],
        );
        (lhs, rhs)
    });
    Ok(CheckReport::new("right_ternary_leibniz", found))
}

fn skew_clauses(g: &SuperProduct, first_only: bool) -> Vec<Counterexample> {
    let q = g.parity();
    let mut found = Scan::uniform("ternary_skew_12", g.space(), 3).run(first_only, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s = -sign_pow(g.p(x) + q, g.p(y) + q);
        (g.basis_dense(&[x, y, z]), lin::scaled(&s, &g.basis_dense(&[y, x, z])))
    });
    if first_only && !found.is_empty() {
        return found;
    }
    found.extend(Scan::uniform("ternary_skew_23", g.space(), 3).run(first_only, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s = -sign_pow(g.p(y) + q, g.p(z) + q);
        (g.basis_dense(&[x, y, z]), lin::scaled(&s, &g.basis_dense(&[x, z, y])))
    }));
    found
}

/// Both adjacent transpositions:
/// `[x,y,z] = −(−1)^{(x̄+q)(ȳ+q)} [y,x,z]` and
/// `[x,y,z] = −(−1)^{(ȳ+q)(z̄+q)} [x,z,y]`.
pub fn check_ternary_skew(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 3)?;
    Ok(CheckReport::new("ternary_skew", skew_clauses(alg, false)))
}

/// The Filippov identity; same shape as the left ternary Leibniz identity.
pub fn check_filippov(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 3)?;
    Ok(CheckReport::new("filippov", left_leibniz_clause(alg, "filippov", false)))
}

/// Conjunction of ternary skew symmetry and the Filippov identity.
pub fn check_3_super_lie(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 3)?;
    let mut found = skew_clauses(alg, false);
    found.extend(left_leibniz_clause(alg, "filippov", false));
    Ok(CheckReport::new("3_super_lie", found))
}

/// `[Rx,Ry,z] + (−1)^{r̄(r̄+ȳ+q)} [Rx,y,Rz] + (−1)^{r̄(x̄+ȳ)} [x,Ry,Rz]`.
fn induced(g: &SuperProduct, r: &HomLinearMap, images: &[Vec<Scalar>], x: usize, y: usize, z: usize) -> Vec<Scalar> {
    let q = g.parity();
    let rp = r.parity();
    let (rx, ry, rz) = (&images[x], &images[y], &images[z]);
    lin::combo(
        g.dim(),
        &[
            (Scalar::one(), &t3(g, C(rx), C(ry), B(z))),
            (sign_pow(rp, rp + g.p(y) + q), &t3(g, C(rx), B(y), C(rz))),
            (sign_pow(rp, g.p(x) + g.p(y)), &t3(g, B(x), C(ry), C(rz))),
        ],
    )
}

pub(crate) fn ternary_rb_clause(g: &SuperProduct, r: &HomLinearMap, name: &'static str, first_only: bool) -> Vec<Counterexample> {
    let images: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| r.image_of_basis(i)).collect();
    Scan::uniform(name, g.space(), 3).run(first_only, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = t3(g, C(&images[x]), C(&images[y]), C(&images[z]));
        (lhs, r.apply_coords(&induced(g, r, &images, x, y, z)))
    })
}

fn strict_3_super_lie(alg: &SuperProduct, mode: Mode) -> Result<()> {
    if mode == Mode::Strict {
        let report = check_3_super_lie(alg)?;
        if !report.passed() {
            return Err(Error::PreconditionFailed(Box::new(report)));
        }
    }
    Ok(())
}

/// `[Rx,Ry,Rz] = R([Rx,Ry,z] + (−1)^{r̄(r̄+ȳ+q)} [Rx,y,Rz] + (−1)^{r̄(x̄+ȳ)} [x,Ry,Rz])`.
pub fn check_ternary_rb(alg: &SuperProduct, r: &HomLinearMap, mode: Mode) -> Result<CheckReport> {
    require_arity(alg, 3)?;
    require_endomorphism(alg, r)?;
    strict_3_super_lie(alg, mode)?;
    Ok(CheckReport::new("ternary_rota_baxter", ternary_rb_clause(alg, r, "ternary_rota_baxter", false)))
}

/// The induced bracket `[x,y,z]_R` together with the report that `R` is a
/// morphism onto the original bracket, `R[x,y,z]_R = [Rx,Ry,Rz]`.
pub fn ternary_rb_bracket(alg: &SuperProduct, r: &HomLinearMap, mode: Mode) -> Result<(SuperProduct, CheckReport)> {
    require_arity(alg, 3)?;
    require_endomorphism(alg, r)?;
    if mode == Mode::Strict {
        let pre = check_ternary_rb(alg, r, Mode::Strict)?;
        if !pre.passed() {
            return Err(Error::PreconditionFailed(Box::new(pre)));
        }
    }
    let images: Vec<Vec<Scalar>> = (0..alg.dim()).map(|i| r.image_of_basis(i)).collect();
    let d = alg.dim();
    let mut constants = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                for (k, c) in induced(alg, r, &images, x, y, z).into_iter().enumerate() {
                    if !c.is_zero() {
                        constants.push((vec![x, y, z], k, c));
                    }
                }
            }
        }
    }
    let product = SuperProduct::new(alg.space(), 3, alg.parity(), constants)?;
    let report = CheckReport::new("morphism", ternary_rb_clause(alg, r, "morphism", false));
    Ok((product, report))
}

/// `[x,y]_a = [a,x,y]`, an even binary bracket when `ā = q`.
///
/// The report is the conjunction of the super-Lie check on the result and
/// the `center` clause `[a,y]_a = 0` for every basis vector `y`.
pub fn reduce_to_lie(alg: &SuperProduct, a: &Vector, mode: Mode) -> Result<(SuperProduct, CheckReport)> {
    require_arity(alg, 3)?;
    check_same_space(alg.space(), a.space(), "reduction element")?;
    match homogeneous_parity(alg.space().parities(), a.coords())? {
        Some(p) if p != alg.parity() => {
            return Err(Error::ParityMismatch(format!(
                "the frozen element has parity {p} but the ternary product has parity {}",
                alg.parity()
            )))
        }
        _ => {}
    }
    strict_3_super_lie(alg, mode)?;
    let d = alg.dim();
    let mut constants = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for (k, c) in t3(alg, C(a.coords()), B(x), B(y)).into_iter().enumerate() {
                if !c.is_zero() {
                    constants.push((vec![x, y], k, c));
                }
            }
        }
    }
    let reduced = SuperProduct::new(alg.space(), 2, alg.parity() + alg.parity(), constants)?;
    let lie = check_super_lie(&reduced)?;
    let center = Scan::uniform("center", reduced.space(), 1).run(false, |t| {
        (reduced.apply(&[C(a.coords()), B(t[0])]), lin::zero(d))
    });
    let report = CheckReport::conjunction("reduce_to_lie", vec![lie, CheckReport::new("center", center)]);
    Ok((reduced, report))
}
