//! Constructions: commutators, Rota-Baxter induced products, representations,
//! semidirect products and derivation algebra.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::identities::{
    self, check_derivation, check_left_symmetric, check_representation, check_rota_baxter, check_super_lie,
    require_arity, require_endomorphism, Mode, Side,
};
use crate::map::{invert_map, HomLinearMap};
use crate::product::{Operand, SuperProduct};
use crate::report::{lin, CheckReport};
use crate::scalar::{sign_pow, Parity, Scalar};
use crate::space::{check_same_space, SuperSpace};

/// A representation `ρ` of a binary algebra on a module `V`, one matrix per
/// algebra basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: SuperProduct,
    module: Arc<SuperSpace>,
    parity: Parity,
    action: Vec<HomLinearMap>,
}

impl Representation {
    /// Validates `ρ̄ = [·,·]‾` and that `ρ(eᵢ)` has parity `p(eᵢ) + ρ̄`.
    /// Zero matrices are accepted whatever parity they were declared with.
    pub fn new(
        algebra: &SuperProduct,
        module: &Arc<SuperSpace>,
        parity: Parity,
        action: Vec<HomLinearMap>,
    ) -> Result<Representation> {
        require_arity(algebra, 2)?;
        if parity != algebra.parity() {
            return Err(Error::ParityMismatch(format!(
                "representation parity {parity} differs from bracket parity {}",
                algebra.parity()
            )));
        }
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices given for a {}-dimensional algebra",
                action.len(),
                algebra.dim()
            )));
        }
        let mut checked = Vec::with_capacity(action.len());
        for (i, m) in action.into_iter().enumerate() {
            check_same_space(module, m.domain(), "action domain")?;
            check_same_space(module, m.codomain(), "action codomain")?;
            let want = algebra.p(i) + parity;
            if m.is_zero() {
                checked.push(HomLinearMap::zero(module, module, want));
            } else if m.parity() != want {
                return Err(Error::ParityMismatch(format!(
                    "rho({}) must have parity {want}, found {}",
                    algebra.space().label(i),
                    m.parity()
                )));
            } else {
                checked.push(m.rebased(module, module)?);
            }
        }
        Ok(Representation {
            algebra: algebra.clone(),
            module: Arc::clone(module),
            parity,
            action: checked,
        })
    }

    pub fn zero(algebra: &SuperProduct, module: &Arc<SuperSpace>) -> Result<Representation> {
        let b = algebra.parity();
        let action = (0..algebra.dim())
            .map(|i| HomLinearMap::zero(module, module, algebra.p(i) + b))
            .collect();
        Representation::new(algebra, module, b, action)
    }

    pub fn algebra(&self) -> &SuperProduct {
        &self.algebra
    }

    pub fn module(&self) -> &Arc<SuperSpace> {
        &self.module
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn action(&self, i: usize) -> &HomLinearMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[HomLinearMap] {
        &self.action
    }

    /// Replaces `ρ(eᵢ)`, e.g. to perturb a representation.
    pub fn with_action(&self, i: usize, m: HomLinearMap) -> Result<Representation> {
        let mut action = self.action.clone();
        if i >= action.len() {
            return Err(Error::Shape(format!("no algebra basis vector {i}")));
        }
        action[i] = m;
        Representation::new(&self.algebra, &self.module, self.parity, action)
    }

    /// `ρ(x)v` for `x` given by coordinates in the algebra basis.
    pub(crate) fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = lin::zero(self.module.dim());
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                lin::axpy(&mut out, c, &self.action[k].apply_coords(v));
            }
        }
        out
    }
}

fn precondition(report: CheckReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(Box::new(report)))
    }
}

fn product_from_fn<F>(space: &Arc<SuperSpace>, parity: Parity, mut f: F) -> Result<SuperProduct>
where
    F: FnMut(usize, usize) -> Vec<Scalar>,
{
    let d = space.dim();
    let mut constants = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for (k, c) in f(x, y).into_iter().enumerate() {
                if !c.is_zero() {
                    constants.push((vec![x, y], k, c));
                }
            }
        }
    }
    SuperProduct::new(space, 2, parity, constants)
}

/// `[x,y] = μ(x,y) − (−1)^{(x̄+μ̄)(ȳ+μ̄)} μ(y,x)`.
pub fn commutator_bracket(alg: &SuperProduct) -> Result<SuperProduct> {
    require_arity(alg, 2)?;
    let b = alg.parity();
    product_from_fn(alg.space(), b, |x, y| {
        let s = sign_pow(alg.p(x) + b, alg.p(y) + b);
        lin::combo(
            alg.dim(),
            &[(Scalar::one(), &alg.basis_dense(&[x, y])), (-s, &alg.basis_dense(&[y, x]))],
        )
    })
}

/// `x ◁ y = (−1)^{(x̄+b)(ȳ+b)} y ▷ x`.
pub fn left_sym_to_right_sym(alg: &SuperProduct, mode: Mode) -> Result<SuperProduct> {
    require_arity(alg, 2)?;
    if mode == Mode::Strict {
        precondition(check_left_symmetric(alg)?)?;
    }
    let b = alg.parity();
    product_from_fn(alg.space(), b, |x, y| {
        let s = sign_pow(alg.p(x) + b, alg.p(y) + b);
        lin::scaled(&s, &alg.basis_dense(&[y, x]))
    })
}

/// `x ▷ y = [Rx, y]` (left) or `x ◁ y = [x, Ry]` (right), of parity
/// `R̄ + [·,·]‾`.
pub fn product_from_rb(alg: &SuperProduct, r: &HomLinearMap, side: Side, mode: Mode) -> Result<SuperProduct> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, r)?;
    if mode == Mode::Strict {
        precondition(check_rota_baxter(alg, r, side, Mode::Strict)?)?;
    }
    let images: Vec<Vec<Scalar>> = (0..alg.dim()).map(|i| r.image_of_basis(i)).collect();
    product_from_fn(alg.space(), r.parity() + alg.parity(), |x, y| match side {
        Side::Left => alg.apply(&[Operand::Coords(&images[x]), Operand::Basis(y)]),
        Side::Right => alg.apply(&[Operand::Basis(x), Operand::Coords(&images[y])]),
    })
}

pub fn product_from_left_rb(alg: &SuperProduct, r: &HomLinearMap, mode: Mode) -> Result<SuperProduct> {
    product_from_rb(alg, r, Side::Left, mode)
}

pub fn product_from_right_rb(alg: &SuperProduct, r: &HomLinearMap, mode: Mode) -> Result<SuperProduct> {
    product_from_rb(alg, r, Side::Right, mode)
}

/// `ad_x(y) = [x,y]` on the algebra itself.
pub fn adjoint_rep(alg: &SuperProduct, mode: Mode) -> Result<Representation> {
    require_arity(alg, 2)?;
    if mode == Mode::Strict {
        precondition(check_super_lie(alg)?)?;
    }
    let space = alg.space();
    let b = alg.parity();
    let action = (0..alg.dim())
        .map(|x| {
            let images = (0..alg.dim()).map(|y| alg.basis_dense(&[x, y])).collect();
            HomLinearMap::from_images(space, space, alg.p(x) + b, images)
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg, space, b, action)
}

fn direct_sum_space(g: &SuperSpace, v: &SuperSpace) -> Result<SuperSpace> {
    let mut basis: Vec<(String, Parity)> = (0..g.dim()).map(|i| (g.label(i).to_string(), g.parity(i))).collect();
    for k in 0..v.dim() {
        let mut label = v.label(k).to_string();
        while basis.iter().any(|(l, _)| *l == label) {
            label.push_str("_v");
        }
        basis.push((label, v.parity(k)));
    }
    SuperSpace::new(format!("{}_{}", g.name(), v.name()), basis)
}

/// Bracket on `𝔤 ⊕ V`: the original bracket on `𝔤`, `[x,v] = ρ(x)v`,
/// `[v,x] = −(−1)^{(v̄+b)(x̄+b)} ρ(x)v` and `[V,V] = 0`.
///
/// The basis is that of `𝔤` followed by that of `V`; a `V` label clashing
/// with a `𝔤` label gets a `_v` suffix.
pub fn semidirect(alg: &SuperProduct, rep: &Representation) -> Result<SuperProduct> {
    require_arity(alg, 2)?;
    check_same_space(alg.space(), rep.algebra().space(), "representation algebra")?;
    if rep.parity() != alg.parity() {
        return Err(Error::ParityMismatch("representation parity differs from bracket parity".into()));
    }
    let n = alg.dim();
    let v = rep.module();
    let space = Arc::new(direct_sum_space(alg.space(), v)?);
    let b = alg.parity();
    let mut constants = Vec::new();
    for (tuple, out) in alg.constants() {
        for (k, c) in out {
            constants.push((tuple.clone(), *k, c.clone()));
        }
    }
    for x in 0..n {
        let m = rep.action(x);
        for k in 0..v.dim() {
            for l in 0..v.dim() {
                let c = m.entry(l, k);
                if c.is_zero() {
                    continue;
                }
                constants.push((vec![x, n + k], n + l, c.clone()));
                let s = sign_pow(v.parity(k) + b, alg.p(x) + b);
                constants.push((vec![n + k, x], n + l, -(&s * c)));
            }
        }
    }
    SuperProduct::new(&space, 2, b, constants)
}

/// `ρ*(x)(ξ) = −(−1)^{ξ̄(x̄+ρ̄)} ξ∘ρ(x)` on the dual basis `ξᵢ`, labelled
/// `{label}_dual` with the parities of `V`.
pub fn dual_rep(rep: &Representation, mode: Mode) -> Result<Representation> {
    let alg = rep.algebra();
    if mode == Mode::Strict {
        precondition(check_representation(alg, rep)?)?;
    }
    let v = rep.module();
    let basis = (0..v.dim())
        .map(|i| (format!("{}_dual", v.label(i)), v.parity(i)))
        .collect();
    let dual = Arc::new(SuperSpace::new(format!("{}_dual", v.name()), basis)?);
    let b = rep.parity();
    let action = (0..alg.dim())
        .map(|x| {
            let m = rep.action(x);
            let shift = alg.p(x) + b;
            let entries = (0..v.dim())
                .map(|j| {
                    (0..v.dim())
                        .map(|i| -(&sign_pow(v.parity(i), shift) * m.entry(i, j)))
                        .collect()
                })
                .collect();
            HomLinearMap::new(&dual, &dual, shift, entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg, &dual, b, action)
}

/// `[D₁,D₂] = D₁∘D₂ − (−1)^{D̄₁D̄₂} D₂∘D₁`.
pub fn derivation_commutator(
    alg: &SuperProduct,
    d1: &HomLinearMap,
    d2: &HomLinearMap,
    side: Side,
    mode: Mode,
) -> Result<HomLinearMap> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, d1)?;
    require_endomorphism(alg, d2)?;
    if mode == Mode::Strict {
        precondition(check_derivation(alg, d1, side)?)?;
        precondition(check_derivation(alg, d2, side)?)?;
    }
    d1.graded_commutator(d2)
}

/// Inverts a derivation and checks the mirrored Rota-Baxter identity on the
/// inverse: a left derivation inverts to a right operator and vice versa.
pub fn derivation_inverse_to_rb(
    alg: &SuperProduct,
    d: &HomLinearMap,
    side: Side,
    mode: Mode,
) -> Result<(HomLinearMap, CheckReport)> {
    require_arity(alg, 2)?;
    require_endomorphism(alg, d)?;
    if mode == Mode::Strict {
        precondition(check_derivation(alg, d, side)?)?;
    }
    let inv = invert_map(d)?;
    let report = identities::check_rota_baxter(alg, &inv, side.mirrored(), mode)?;
    Ok((inv, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras;
    use crate::identities::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn commutator_of_ex22() {
        let g = commutator_bracket(&algebras::ex22()).unwrap();
        assert_eq!(g, algebras::ex22_commutator().renamed(algebras::ex22().space().name()));
        assert!(check_super_lie(&g).unwrap().passed());
    }

    #[test]
    fn supercommutative_commutator_vanishes() {
        // μ(e1,e2) = e3, μ(e2,e1) = −e3 and the shifted sign is −1, so
        // [e1,e2] = e3 − (−1)(−e3) = 0
        assert!(commutator_bracket(&algebras::ex23()).unwrap().is_zero());
        let sp = algebras::ex23().space().clone();
        let z = SuperProduct::zero(&sp, 2, Parity::ODD).unwrap();
        assert!(commutator_bracket(&z).unwrap().is_zero());
    }

    #[test]
    fn left_to_right_symmetric() {
        let osp = algebras::osp12();
        let pre = product_from_left_rb(&osp, &algebras::osp_rl(), Mode::Strict).unwrap();
        let right = left_sym_to_right_sym(&pre, Mode::Strict).unwrap();
        assert!(check_right_symmetric(&right).unwrap().passed());
        assert_eq!(right.parity(), pre.parity());
    }

    #[test]
    fn adjoint_of_odd_lie() {
        let g = algebras::odd_lie_3dim();
        let ad = adjoint_rep(&g, Mode::Strict).unwrap();
        let i = |l: &str| g.space().index_of(l).unwrap();
        assert_eq!(ad.action(i("e2")).image_of_basis(i("e3"))[i("e2")], s(1));
        assert_eq!(ad.action(i("e3")).image_of_basis(i("e2"))[i("e2")], s(-1));
        assert!(check_representation(&g, &ad).unwrap().passed());
    }

    #[test]
    fn semidirect_with_adjoint() {
        let g = algebras::odd_lie_3dim();
        let ad = adjoint_rep(&g, Mode::Strict).unwrap();
        let sd = semidirect(&g, &ad).unwrap();
        assert_eq!(sd.dim(), 6);
        assert_eq!(sd.space().label(3), "e1_v");
        assert!(check_super_lie(&sd).unwrap().passed());
    }

    #[test]
    fn perturbed_adjoint_breaks_semidirect() {
        let osp = algebras::osp12();
        let ad = adjoint_rep(&osp, Mode::Strict).unwrap();
        let bad = ad.with_action(0, ad.action(0).with_entry(0, 0, s(1)).unwrap()).unwrap();
        assert!(!check_representation(&osp, &bad).unwrap().passed());
        assert!(!check_super_jacobi(&semidirect(&osp, &bad).unwrap()).unwrap().passed());
    }

    #[test]
    fn dual_of_adjoint() {
        for g in [algebras::osp12(), algebras::odd_lie_3dim(), algebras::ex22_commutator()] {
            let ad = adjoint_rep(&g, Mode::Strict).unwrap();
            let dual = dual_rep(&ad, Mode::Strict).unwrap();
            assert_eq!(dual.module().label(0), format!("{}_dual", g.space().label(0)));
            assert!(check_representation(&g, &dual).unwrap().passed());
        }
    }

    #[test]
    fn representation_parity_is_enforced() {
        let g = algebras::odd_lie_3dim();
        assert!(matches!(
            Representation::zero(&g, g.space()).map(|r| r.parity()),
            Ok(Parity::ODD)
        ));
        let wrong = (0..3)
            .map(|_| HomLinearMap::identity(g.space()))
            .collect::<Vec<_>>();
        assert!(matches!(
            Representation::new(&g, g.space(), Parity::ODD, wrong),
            Err(Error::ParityMismatch(_))
        ));
    }

    #[test]
    fn ad_commutator_is_derivation() {
        let g = algebras::odd_lie_3dim();
        let ad = adjoint_rep(&g, Mode::Strict).unwrap();
        let c = derivation_commutator(&g, ad.action(1), ad.action(2), Side::Left, Mode::Strict).unwrap();
        assert!(check_left_derivation(&g, &c).unwrap().passed());
        let dd = derivation_commutator(&g, ad.action(1), ad.action(1), Side::Left, Mode::Strict).unwrap();
        assert!(check_left_derivation(&g, &dd).unwrap().passed());
    }

    #[test]
    fn abelian_inverse_theorem() {
        let sp = SuperSpace::from_pairs("ab", &[("a", 0), ("b", 1)]);
        let z = SuperProduct::zero(&sp, 2, Parity::EVEN).unwrap();
        let d = HomLinearMap::new(&sp, &sp, Parity::EVEN, vec![vec![s(2), s(0)], vec![s(0), s(3)]]).unwrap();
        let (inv, report) = derivation_inverse_to_rb(&z, &d, Side::Left, Mode::Strict).unwrap();
        assert_eq!(inv.entry(0, 0), &Scalar::ratio(1, 2));
        assert!(report.passed());
    }

    #[test]
    fn non_derivation_is_rejected() {
        let osp = algebras::osp12();
        let id = HomLinearMap::identity(osp.space());
        assert!(matches!(
            derivation_inverse_to_rb(&osp, &id, Side::Left, Mode::Strict),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
