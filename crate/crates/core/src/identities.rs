//! Identity checkers for binary products, operators and representations.
//!
//! Every identity here is multilinear in its homogeneous arguments and its
//! signs depend only on parities, so it holds on all homogeneous elements
//! exactly when it holds on every tuple of basis vectors. Each check scans
//! all basis tuples and reports every failing one.
//!
//! `b` below always denotes the product parity, and signs are written in the
//! shifted form `(−1)^{(x̄+b)(ȳ+b)}`.

use std::fmt;
use std::str::FromStr;

use crate::constructions::Representation;
use crate::error::{Error, Result};
use crate::map::HomLinearMap;
use crate::product::{Operand, SuperProduct};
use crate::report::{lin, CheckReport, Counterexample, Scan};
use crate::scalar::{sign_pow, Parity, Scalar};
use crate::space::check_same_space;

/// Whether preconditions (e.g. "the algebra is Super-Lie") are verified
/// before evaluating an identity or running a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Raw,
}

/// Left or right flavour of derivations and Rota-Baxter operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn mirrored(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Side, String> {
        match s.to_ascii_lowercase().as_str() {
            "l" | "left" => Ok(Side::Left),
            "r" | "right" => Ok(Side::Right),
            _ => Err(format!("unknown side `{s}` (expected L or R)")),
        }
    }
}

/// Names of every implemented identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    SuperAssociative,
    Supercommutative,
    LeftSuperLeibniz,
    RightSuperLeibniz,
    SuperSkew,
    SuperJacobi,
    SuperLie,
    LeftSymmetric,
    RightSymmetric,
    Flexible,
    LeftRotaBaxter,
    RightRotaBaxter,
    WeightedRotaBaxter,
    Representation,
    LeftDerivation,
    RightDerivation,
    LeftTernaryLeibniz,
    RightTernaryLeibniz,
    TernarySkew,
    Filippov,
    ThreeSuperLie,
    TernaryRotaBaxter,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 22] = [
        IdentityKind::SuperAssociative,
        IdentityKind::Supercommutative,
        IdentityKind::LeftSuperLeibniz,
        IdentityKind::RightSuperLeibniz,
        IdentityKind::SuperSkew,
        IdentityKind::SuperJacobi,
        IdentityKind::SuperLie,
        IdentityKind::LeftSymmetric,
        IdentityKind::RightSymmetric,
        IdentityKind::Flexible,
        IdentityKind::LeftRotaBaxter,
        IdentityKind::RightRotaBaxter,
        IdentityKind::WeightedRotaBaxter,
        IdentityKind::Representation,
        IdentityKind::LeftDerivation,
        IdentityKind::RightDerivation,
        IdentityKind::LeftTernaryLeibniz,
        IdentityKind::RightTernaryLeibniz,
        IdentityKind::TernarySkew,
        IdentityKind::Filippov,
        IdentityKind::ThreeSuperLie,
        IdentityKind::TernaryRotaBaxter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::SuperAssociative => "super_associative",
            IdentityKind::Supercommutative => "supercommutative",
            IdentityKind::LeftSuperLeibniz => "left_super_leibniz",
            IdentityKind::RightSuperLeibniz => "right_super_leibniz",
            IdentityKind::SuperSkew => "super_skew",
            IdentityKind::SuperJacobi => "super_jacobi",
            IdentityKind::SuperLie => "super_lie",
            IdentityKind::LeftSymmetric => "left_symmetric",
            IdentityKind::RightSymmetric => "right_symmetric",
            IdentityKind::Flexible => "flexible",
            IdentityKind::LeftRotaBaxter => "left_rota_baxter",
            IdentityKind::RightRotaBaxter => "right_rota_baxter",
            IdentityKind::WeightedRotaBaxter => "weighted_rota_baxter",
            IdentityKind::Representation => "representation",
            IdentityKind::LeftDerivation => "left_derivation",
            IdentityKind::RightDerivation => "right_derivation",
            IdentityKind::LeftTernaryLeibniz => "left_ternary_leibniz",
            IdentityKind::RightTernaryLeibniz => "right_ternary_leibniz",
            IdentityKind::TernarySkew => "ternary_skew",
            IdentityKind::Filippov => "filippov",
            IdentityKind::ThreeSuperLie => "3_super_lie",
            IdentityKind::TernaryRotaBaxter => "ternary_rota_baxter",
        }
    }

    /// Number of product slots the identity expects.
    pub fn arity(self) -> usize {
        use IdentityKind::*;
        match self {
            LeftTernaryLeibniz | RightTernaryLeibniz | TernarySkew | Filippov | ThreeSuperLie | TernaryRotaBaxter => 3,
            _ => 2,
        }
    }

    /// Identities that need nothing but the product.
    pub fn is_product_only(self) -> bool {
        use IdentityKind::*;
        !matches!(
            self,
            LeftRotaBaxter
                | RightRotaBaxter
                | WeightedRotaBaxter
                | Representation
                | LeftDerivation
                | RightDerivation
                | TernaryRotaBaxter
        )
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts both `super_lie` and `super-lie` spellings, plus a few short
/// aliases used on the command line.
impl FromStr for IdentityKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<IdentityKind, String> {
        let norm = s.replace('-', "_").to_ascii_lowercase();
        let alias = match norm.as_str() {
            "associative" => "super_associative",
            "left_leibniz" => "left_super_leibniz",
            "right_leibniz" => "right_super_leibniz",
            "skew" => "super_skew",
            "jacobi" => "super_jacobi",
            "left_rb" => "left_rota_baxter",
            "right_rb" => "right_rota_baxter",
            "weighted_rb" => "weighted_rota_baxter",
            "ternary_rb" => "ternary_rota_baxter",
            "three_super_lie" => "3_super_lie",
            other => other,
        };
        IdentityKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == alias)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

pub(crate) fn require_arity(alg: &SuperProduct, arity: usize) -> Result<()> {
    if alg.arity() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: alg.arity(),
        });
    }
    Ok(())
}

pub(crate) fn require_endomorphism(alg: &SuperProduct, m: &HomLinearMap) -> Result<()> {
    check_same_space(alg.space(), m.domain(), "operator domain")?;
    check_same_space(alg.space(), m.codomain(), "operator codomain")
}

fn br(g: &SuperProduct, a: Operand, b: Operand) -> Vec<Scalar> {
    g.apply(&[a, b])
}

use Operand::{Basis as B, Coords as C};

// ---------------------------------------------------------------------------
// product-only identities

fn associator(g: &SuperProduct, x: usize, y: usize, z: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let xy = g.basis_dense(&[x, y]);
    let yz = g.basis_dense(&[y, z]);
    (br(g, C(&xy), B(z)), br(g, B(x), C(&yz)))
}

/// `ass(x,y,z) = μ(μ(x,y),z) − μ(x,μ(y,z))`.
fn ass(g: &SuperProduct, x: usize, y: usize, z: usize) -> Vec<Scalar> {
    let (l, r) = associator(g, x, y, z);
    lin::sub(&l, &r)
}

pub(crate) fn super_associative_clause(g: &SuperProduct, first_only: bool) -> Vec<Counterexample> {
    Scan::uniform("super_associative", g.space(), 3).run(first_only, |t| associator(g, t[0], t[1], t[2]))
}

/// `μ(μ(x,y),z) = μ(x,μ(y,z))`.
pub fn check_super_associative(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    Ok(CheckReport::new("super_associative", super_associative_clause(alg, false)))
}

/// `μ(x,y) = (−1)^{(x̄+b)(ȳ+b)} μ(y,x)`.
pub fn check_supercommutative(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    let b = alg.parity();
    let found = Scan::uniform("supercommutative", alg.space(), 2).run(false, |t| {
        let (x, y) = (t[0], t[1]);
        let s = sign_pow(alg.p(x) + b, alg.p(y) + b);
        (alg.basis_dense(&[x, y]), lin::scaled(&s, &alg.basis_dense(&[y, x])))
    });
    Ok(CheckReport::new("supercommutative", found))
}

/// `[x,[y,z]] = [[x,y],z] + (−1)^{(x̄+b)(ȳ+b)} [y,[x,z]]`.
pub fn check_left_super_leibniz(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    let g = alg;
    let b = g.parity();
    let found = Scan::uniform("left_super_leibniz", g.space(), 3).run(false, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = br(g, B(x), C(&g.basis_dense(&[y, z])));
        let s = sign_pow(g.p(x) + b, g.p(y) + b);
        let first = br(g, C(&g.basis_dense(&[x, y])), B(z));
        let second = br(g, B(y), C(&g.basis_dense(&[x, z])));
        (lhs, lin::combo(g.dim(), &[(Scalar::one(), &first), (s, &second)]))
    });
    Ok(CheckReport::new("left_super_leibniz", found))
}

/// `[[x,y],z] = [x,[y,z]] + (−1)^{(ȳ+b)(z̄+b)} [[x,z],y]`.
pub fn check_right_super_leibniz(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    let g = alg;
    let b = g.parity();
    let found = Scan::uniform("right_super_leibniz", g.space(), 3).run(false, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = br(g, C(&g.basis_dense(&[x, y])), B(z));
        let s = sign_pow(g.p(y) + b, g.p(z) + b);
        let first = br(g, B(x), C(&g.basis_dense(&[y, z])));
        let second = br(g, C(&g.basis_dense(&[x, z])), B(y));
        (lhs, lin::combo(g.dim(), &[(Scalar::one(), &first), (s, &second)]))
    });
    Ok(CheckReport::new("right_super_leibniz", found))
}

pub(crate) fn super_skew_clause(g: &SuperProduct, first_only: bool) -> Vec<Counterexample> {
    let b = g.parity();
    Scan::uniform("super_skew", g.space(), 2).run(first_only, |t| {
        let (x, y) = (t[0], t[1]);
        let s = -sign_pow(g.p(x) + b, g.p(y) + b);
        (g.basis_dense(&[x, y]), lin::scaled(&s, &g.basis_dense(&[y, x])))
    })
}

pub(crate) fn super_jacobi_clause(g: &SuperProduct, first_only: bool) -> Vec<Counterexample> {
    let b = g.parity();
    let zero = lin::zero(g.dim());
    Scan::uniform("super_jacobi", g.space(), 3).run(first_only, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let term = |u: usize, v: usize, w: usize| {
            let s = sign_pow(g.p(u) + b, g.p(w) + b);
            lin::scaled(&s, &br(g, B(u), C(&g.basis_dense(&[v, w]))))
        };
        let sum = lin::add(&lin::add(&term(x, y, z), &term(y, z, x)), &term(z, x, y));
        (sum, zero.clone())
    })
}

/// `[x,y] = −(−1)^{(x̄+b)(ȳ+b)} [y,x]`.
pub fn check_super_skew(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    Ok(CheckReport::new("super_skew", super_skew_clause(alg, false)))
}

/// `↻_{x,y,z} (−1)^{(x̄+b)(z̄+b)} [x,[y,z]] = 0`.
pub fn check_super_jacobi(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    Ok(CheckReport::new("super_jacobi", super_jacobi_clause(alg, false)))
}

/// Conjunction of [`check_super_skew`] and [`check_super_jacobi`].
pub fn check_super_lie(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    let mut found = super_skew_clause(alg, false);
    found.extend(super_jacobi_clause(alg, false));
    Ok(CheckReport::new("super_lie", found))
}

/// `ass(x,y,z) = (−1)^{(x̄+b)(ȳ+b)} ass(y,x,z)`.
pub fn check_left_symmetric(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    Ok(CheckReport::new("left_symmetric", left_symmetric_clause(alg, false)))
}

pub(crate) fn left_symmetric_clause(g: &SuperProduct, first_only: bool) -> Vec<Counterexample> {
    let b = g.parity();
    Scan::uniform("left_symmetric", g.space(), 3).run(first_only, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s = sign_pow(g.p(x) + b, g.p(y) + b);
        (ass(g, x, y, z), lin::scaled(&s, &ass(g, y, x, z)))
    })
}

/// `ass(x,y,z) = (−1)^{(ȳ+b)(z̄+b)} ass(x,z,y)`.
pub fn check_right_symmetric(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    Ok(CheckReport::new("right_symmetric", right_symmetric_clause(alg, false)))
}

pub(crate) fn right_symmetric_clause(g: &SuperProduct, first_only: bool) -> Vec<Counterexample> {
    let b = g.parity();
    Scan::uniform("right_symmetric", g.space(), 3).run(first_only, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s = sign_pow(g.p(y) + b, g.p(z) + b);
        (ass(g, x, y, z), lin::scaled(&s, &ass(g, x, z, y)))
    })
}

/// `ass(x,y,z) = (−1)^{(x̄+b)(ȳ+z̄) + (ȳ+b)(z̄+b)} ass(z,y,x)`.
pub fn check_flexible(alg: &SuperProduct) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    let g = alg;
    let b = g.parity();
    let found = Scan::uniform("flexible", g.space(), 3).run(false, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let exponent = (g.p(x) + b) * (g.p(y) + g.p(z)) + (g.p(y) + b) * (g.p(z) + b);
        (ass(g, x, y, z), lin::scaled(&exponent.sign(), &ass(g, z, y, x)))
    });
    Ok(CheckReport::new("flexible", found))
}

// ---------------------------------------------------------------------------
// operators

fn strict_super_lie(alg: &SuperProduct, mode: Mode) -> Result<()> {
    if mode == Mode::Strict {
        let report = check_super_lie(alg)?;
        if !report.passed() {
            return Err(Error::PreconditionFailed(Box::new(report)));
        }
    }
    Ok(())
}

pub(crate) fn rota_baxter_clause(g: &SuperProduct, r: &HomLinearMap, side: Side, first_only: bool) -> Vec<Counterexample> {
    let b = g.parity();
    let rp = r.parity();
    let images: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| r.image_of_basis(i)).collect();
    let name = match side {
        Side::Left => "left_rota_baxter",
        Side::Right => "right_rota_baxter",
    };
    Scan::uniform(name, g.space(), 2).run(first_only, |t| {
        let (x, y) = (t[0], t[1]);
        let (rx, ry) = (&images[x], &images[y]);
        let lhs = br(g, C(rx), C(ry));
        let rx_y = br(g, C(rx), B(y));
        let x_ry = br(g, B(x), C(ry));
        let inner = match side {
            Side::Left => {
                let s = sign_pow(rp, g.p(y) + rp + b);
                lin::combo(g.dim(), &[(Scalar::one(), &rx_y), (s, &x_ry)])
            }
            Side::Right => {
                let s = sign_pow(rp, g.p(x) + rp + b);
                lin::combo(g.dim(), &[(s, &rx_y), (Scalar::one(), &x_ry)])
            }
        };
        (lhs, r.apply_coords(&inner))
    })
}

/// `[Rx,Ry] = R([Rx,y] + (−1)^{r̄(ȳ+r̄+b)} [x,Ry])`.
pub fn check_left_rota_baxter(alg: &SuperProduct, r: &HomLinearMap, mode: Mode) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, r)?;
    strict_super_lie(alg, mode)?;
    Ok(CheckReport::new("left_rota_baxter", rota_baxter_clause(alg, r, Side::Left, false)))
}

/// `[Rx,Ry] = R((−1)^{r̄(x̄+r̄+b)} [Rx,y] + [x,Ry])`.
pub fn check_right_rota_baxter(alg: &SuperProduct, r: &HomLinearMap, mode: Mode) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, r)?;
    strict_super_lie(alg, mode)?;
    Ok(CheckReport::new("right_rota_baxter", rota_baxter_clause(alg, r, Side::Right, false)))
}

pub fn check_rota_baxter(alg: &SuperProduct, r: &HomLinearMap, side: Side, mode: Mode) -> Result<CheckReport> {
    match side {
        Side::Left => check_left_rota_baxter(alg, r, mode),
        Side::Right => check_right_rota_baxter(alg, r, mode),
    }
}

/// Weight-λ identity `[Rx,Ry] = R([Rx,y] + [x,Ry] + λ[x,y])`, defined only
/// for an even bracket and an even operator.
pub fn check_weighted_rota_baxter(alg: &SuperProduct, r: &HomLinearMap, weight: &Scalar, mode: Mode) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, r)?;
    if alg.parity().is_odd() || r.parity().is_odd() {
        return Err(Error::ParityMismatch(
            "the weighted Rota-Baxter identity needs an even bracket and an even operator".into(),
        ));
    }
    strict_super_lie(alg, mode)?;
    let g = alg;
    let images: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| r.image_of_basis(i)).collect();
    let found = Scan::uniform("weighted_rota_baxter", g.space(), 2).run(false, |t| {
        let (x, y) = (t[0], t[1]);
        let (rx, ry) = (&images[x], &images[y]);
        let lhs = br(g, C(rx), C(ry));
        let inner = lin::combo(
            g.dim(),
            &[
                (Scalar::one(), &br(g, C(rx), B(y))),
                (Scalar::one(), &br(g, B(x), C(ry))),
                (weight.clone(), &g.basis_dense(&[x, y])),
            ],
        );
        (lhs, r.apply_coords(&inner))
    });
    Ok(CheckReport::new("weighted_rota_baxter", found))
}

/// `ρ([x,y])v = ρ(x)ρ(y)v − (−1)^{(x̄+b)(ȳ+b)} ρ(y)ρ(x)v` over basis
/// triples `(x, y, v)`.
pub fn check_representation(alg: &SuperProduct, rep: &Representation) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    check_same_space(alg.space(), rep.algebra().space(), "representation algebra")?;
    Ok(CheckReport::new("representation", representation_clause(alg, rep, false)))
}

pub(crate) fn representation_clause(g: &SuperProduct, rep: &Representation, first_only: bool) -> Vec<Counterexample> {
    let b = g.parity();
    let module = rep.module();
    let scan = Scan::new("representation", vec![g.space(), g.space(), module], module);
    scan.run(first_only, |t| {
        let (x, y, v) = (t[0], t[1], t[2]);
        let unit = {
            let mut u = lin::zero(module.dim());
            u[v] = Scalar::one();
            u
        };
        let lhs = rep.act(&g.basis_dense(&[x, y]), &unit);
        let xy_v = rep.action(x).apply_coords(&rep.action(y).apply_coords(&unit));
        let yx_v = rep.action(y).apply_coords(&rep.action(x).apply_coords(&unit));
        let s = sign_pow(g.p(x) + b, g.p(y) + b);
        (lhs, lin::combo(module.dim(), &[(Scalar::one(), &xy_v), (-s, &yx_v)]))
    })
}

/// Both sides of the derivation identity at the basis pair `(x, y)`, given
/// the images `images[i] = D eᵢ`.
pub(crate) fn derivation_sides(
    g: &SuperProduct,
    images: &[Vec<Scalar>],
    dp: Parity,
    side: Side,
    x: usize,
    y: usize,
) -> (Vec<Scalar>, Vec<Scalar>) {
    let b = g.parity();
    let xy = g.basis_dense(&[x, y]);
    let mut lhs = lin::zero(g.dim());
    for (k, c) in xy.iter().enumerate() {
        lin::axpy(&mut lhs, c, &images[k]);
    }
    let dx_y = br(g, C(&images[x]), B(y));
    let x_dy = br(g, B(x), C(&images[y]));
    let rhs = match side {
        Side::Left => {
            let s = sign_pow(dp, g.p(x) + b);
            lin::combo(g.dim(), &[(Scalar::one(), &dx_y), (s, &x_dy)])
        }
        Side::Right => {
            let s = sign_pow(dp, g.p(y) + b);
            lin::combo(g.dim(), &[(Scalar::one(), &x_dy), (s, &dx_y)])
        }
    };
    (lhs, rhs)
}

pub(crate) fn derivation_clause(g: &SuperProduct, d: &HomLinearMap, side: Side, first_only: bool) -> Vec<Counterexample> {
    let images: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| d.image_of_basis(i)).collect();
    let name = match side {
        Side::Left => "left_derivation",
        Side::Right => "right_derivation",
    };
    Scan::uniform(name, g.space(), 2).run(first_only, |t| derivation_sides(g, &images, d.parity(), side, t[0], t[1]))
}

/// `D[x,y] = [Dx,y] + (−1)^{D̄(x̄+b)} [x,Dy]`.
pub fn check_left_derivation(alg: &SuperProduct, d: &HomLinearMap) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, d)?;
    Ok(CheckReport::new("left_derivation", derivation_clause(alg, d, Side::Left, false)))
}

/// `D[x,y] = [x,Dy] + (−1)^{D̄(ȳ+b)} [Dx,y]`.
pub fn check_right_derivation(alg: &SuperProduct, d: &HomLinearMap) -> Result<CheckReport> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, d)?;
    Ok(CheckReport::new("right_derivation", derivation_clause(alg, d, Side::Right, false)))
}

pub fn check_derivation(alg: &SuperProduct, d: &HomLinearMap, side: Side) -> Result<CheckReport> {
    match side {
        Side::Left => check_left_derivation(alg, d),
        Side::Right => check_right_derivation(alg, d),
    }
}

/// Runs a product-only identity by name.
pub fn check_product(kind: IdentityKind, alg: &SuperProduct) -> Result<CheckReport> {
    use crate::ternary;
    match kind {
        IdentityKind::SuperAssociative => check_super_associative(alg),
        IdentityKind::Supercommutative => check_supercommutative(alg),
        IdentityKind::LeftSuperLeibniz => check_left_super_leibniz(alg),
        IdentityKind::RightSuperLeibniz => check_right_super_leibniz(alg),
        IdentityKind::SuperSkew => check_super_skew(alg),
        IdentityKind::SuperJacobi => check_super_jacobi(alg),
        IdentityKind::SuperLie => check_super_lie(alg),
        IdentityKind::LeftSymmetric => check_left_symmetric(alg),
        IdentityKind::RightSymmetric => check_right_symmetric(alg),
        IdentityKind::Flexible => check_flexible(alg),
        IdentityKind::LeftTernaryLeibniz => ternary::check_left_ternary_leibniz(alg),
        IdentityKind::RightTernaryLeibniz => ternary::check_right_ternary_leibniz(alg),
        IdentityKind::TernarySkew => ternary::check_ternary_skew(alg),
        IdentityKind::Filippov => ternary::check_filippov(alg),
        IdentityKind::ThreeSuperLie => ternary::check_3_super_lie(alg),
        other => Err(Error::Shape(format!("`{other}` needs an operator or a representation"))),
    }
}
