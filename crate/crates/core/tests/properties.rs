mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superlie::catalog::algebras;
use superlie::constructions::{
    adjoint_rep, commutator_bracket, derivation_commutator, dual_rep, product_from_rb, semidirect,
};
use superlie::identities::{
    check_derivation, check_product, check_representation, check_rota_baxter, check_weighted_rota_baxter,
};
use superlie::search::{derivation_space, rb_enumerate, SearchConfig};
use superlie::{
    Document, Error, HomLinearMap, IdentityKind, Mode, Parity, Scalar, Side, SuperProduct, SuperSpace, Vector,
};

/// The matrix superalgebra on an `(m|n)`-dimensional space: `E_ij E_kl = δ_jk E_il`.
fn matrix_superalgebra(m: usize, n: usize) -> SuperProduct {
    let d = m + n;
    let p = |i: usize| u8::from(i >= m);
    let labels: Vec<(String, u8)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (format!("E{i}{j}"), (p(i) + p(j)) % 2)))
        .collect();
    let refs: Vec<(&str, u8)> = labels.iter().map(|(l, p)| (l.as_str(), *p)).collect();
    let sp = SuperSpace::from_pairs("gl", &refs);
    let mut constants = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                constants.push((vec![i * d + j, j * d + l], i * d + l, q(1)));
            }
        }
    }
    SuperProduct::new(&sp, 2, Parity::EVEN, constants).unwrap()
}

fn random_associative(seed: u64) -> SuperProduct {
    let base = if seed.is_multiple_of(3) { matrix_superalgebra(2, 1) } else { matrix_superalgebra(1, 1) };
    random_copy(seed, &base)
}

fn random_lie(seed: u64) -> SuperProduct {
    match seed % 3 {
        0 => random_copy(seed, &algebras::osp12()),
        1 => random_copy(seed, &algebras::odd_lie_3dim()),
        _ => commutator_bracket(&random_associative(seed)).unwrap(),
    }
}

fn passes(kind: IdentityKind, g: &SuperProduct) -> bool {
    check_product(kind, g).unwrap().passed()
}

fn vector(g: &SuperProduct, e: &El) -> Vector {
    Vector::from_coords(g.space(), e.v.clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_are_multilinear(seed in any::<u64>(), b in 0u8..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_product(&mut rng, 2, 2, 2, b, 0.4);
        let d = Dense::of(&g);
        let px = rng.gen_range(0..2);
        let py = rng.gen_range(0..2);
        let x = d.random(&mut rng, px).unwrap();
        let y = d.random(&mut rng, py).unwrap();
        let lib = g.eval(&[&vector(&g, &x), &vector(&g, &y)]).unwrap();
        prop_assert_eq!(lib.coords(), &d.m(&x, &y).v[..]);
    }

    #[test]
    fn basis_checks_extend_to_homogeneous_elements(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_lie(seed);
        let d = Dense::of(&g);
        for (name, arity) in BINARY.iter().filter(|(_, a)| *a > 0) {
            if !passes(name.parse().unwrap(), &g) {
                continue;
            }
            let args: Vec<El> = (0..*arity)
                .map(|_| {
                    let p = rng.gen_range(0..2);
                    d.random(&mut rng, p).unwrap()
                })
                .collect();
            prop_assert!(zero(&residual(name, &d, &args)), "{}", name);
        }
    }

    #[test]
    fn associative_implies_symmetric_and_flexible(seed in any::<u64>()) {
        let g = random_associative(seed);
        prop_assert!(passes(IdentityKind::SuperAssociative, &g));
        prop_assert!(passes(IdentityKind::LeftSymmetric, &g));
        prop_assert!(passes(IdentityKind::RightSymmetric, &g));
        prop_assert!(passes(IdentityKind::Flexible, &g));
    }

    #[test]
    fn lie_implies_both_leibniz(seed in any::<u64>()) {
        let g = random_lie(seed);
        prop_assert!(passes(IdentityKind::SuperLie, &g));
        prop_assert!(passes(IdentityKind::LeftSuperLeibniz, &g));
        prop_assert!(passes(IdentityKind::RightSuperLeibniz, &g));
    }

    #[test]
    fn unweighted_even_operators_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = if seed % 2 == 0 { random_copy(seed, &algebras::osp12()) } else { commutator_bracket(&random_associative(seed)).unwrap() };
        let r = random_map(&mut rng, &g, 0);
        let w = check_weighted_rota_baxter(&g, &r, &q(0), Mode::Strict).unwrap().passed();
        let l = check_rota_baxter(&g, &r, Side::Left, Mode::Strict).unwrap().passed();
        let rt = check_rota_baxter(&g, &r, Side::Right, Mode::Strict).unwrap().passed();
        prop_assert_eq!(w, l);
        prop_assert_eq!(l, rt);
    }

    #[test]
    fn semidirect_is_lie_iff_representation(seed in any::<u64>(), bump in -2i64..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_lie(seed);
        let ad = adjoint_rep(&g, Mode::Strict).unwrap();
        let x = rng.gen_range(0..g.dim());
        let m = ad.action(x);
        let free = HomLinearMap::free_entries(m.domain(), m.codomain(), m.parity());
        let (j, i) = free[rng.gen_range(0..free.len())];
        let rep = ad.with_action(x, m.with_entry(j, i, m.entry(j, i) + &q(bump)).unwrap()).unwrap();
        let is_rep = check_representation(&g, &rep).unwrap().passed();
        prop_assert_eq!(is_rep, oracle_rep_holds(&Dense::of(&g), &DRep::of(&rep)));
        prop_assert_eq!(passes(IdentityKind::SuperLie, &semidirect(&g, &rep).unwrap()), is_rep);
    }

    #[test]
    fn dual_of_representation_is_representation(seed in any::<u64>()) {
        let g = random_lie(seed);
        let ad = adjoint_rep(&g, Mode::Strict).unwrap();
        let dual = dual_rep(&ad, Mode::Strict).unwrap();
        prop_assert!(check_representation(&g, &dual).unwrap().passed());
        prop_assert!(oracle_rep_holds(&Dense::of(&g), &DRep::of(&dual)));
    }

    #[test]
    fn derivations_close_under_commutator(seed in any::<u64>(), left in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_lie(seed);
        let side = if left { Side::Left } else { Side::Right };
        let p1 = Parity::new(rng.gen_range(0..2)).unwrap();
        let p2 = Parity::new(rng.gen_range(0..2)).unwrap();
        let mut pick = |parity: Parity| {
            let basis = derivation_space(&g, side, parity, Mode::Strict).unwrap();
            basis.iter().fold(HomLinearMap::zero(g.space(), g.space(), parity), |acc, d| {
                acc.add(&d.scale(&q(rng.gen_range(-2..=2)))).unwrap()
            })
        };
        let (d1, d2) = (pick(p1), pick(p2));
        let c = derivation_commutator(&g, &d1, &d2, side, Mode::Strict).unwrap();
        prop_assert!(check_derivation(&g, &c, side).unwrap().passed());
        prop_assert!(oracle_derivation_holds(&Dense::of(&g), &DMap::of(&c), left));
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>(), arity in 2usize..4, b in 0u8..2, num in -7i64..8, den in 1i64..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (even, odd, rp) = (rng.gen_range(1..3), rng.gen_range(1..3), rng.gen_range(0..2));
        let g = random_product(&mut rng, even, odd, arity, b, 0.3);
        let r = random_map(&mut rng, &g, rp).scale(&Scalar::ratio(num, den));
        let mut doc = Document::new();
        doc.add_algebra(g.renamed("A")).unwrap();
        doc.add_map("R", "A", &r).unwrap();
        let text = doc.serialize();
        let back = Document::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn checks_are_deterministic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_product(&mut rng, 2, 1, 2, (seed % 2) as u8, 0.5);
        for kind in IdentityKind::ALL.iter().filter(|k| k.is_product_only() && k.arity() == 2) {
            let a = check_product(*kind, &g).unwrap().to_json();
            let b = check_product(*kind, &g).unwrap().to_json();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn strict_mode_blocks_failed_preconditions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = algebras::osp12();
        let r = random_map(&mut rng, &g, 1);
        let holds = check_rota_baxter(&g, &r, Side::Left, Mode::Strict).unwrap().passed();
        let strict = product_from_rb(&g, &r, Side::Left, Mode::Strict);
        prop_assert_eq!(strict.is_ok(), holds);
        if !holds {
            prop_assert!(matches!(strict, Err(Error::PreconditionFailed(_))));
        }
        prop_assert!(product_from_rb(&g, &r, Side::Left, Mode::Raw).is_ok());
    }
}

#[test]
fn induced_products_are_left_and_right_symmetric() {
    let mut seen = 0;
    for g in [algebras::odd_lie_3dim(), algebras::ex22_commutator()] {
        for side in [Side::Left, Side::Right] {
            for parity in [Parity::EVEN, Parity::ODD] {
                let cfg = SearchConfig::new(&g, parity, side).grid(vec![q(-1), q(0), q(1)]);
                for r in rb_enumerate(&cfg).unwrap() {
                    let p = product_from_rb(&g, &r, side, Mode::Strict).unwrap();
                    let kind = match side {
                        Side::Left => IdentityKind::LeftSymmetric,
                        Side::Right => IdentityKind::RightSymmetric,
                    };
                    assert!(passes(kind, &p), "{side:?} {parity} {:?}", r.entries());
                    seen += 1;
                }
            }
        }
    }
    for (r, side, kind) in [
        (algebras::osp_rl(), Side::Left, IdentityKind::LeftSymmetric),
        (algebras::osp_rr(), Side::Right, IdentityKind::RightSymmetric),
    ] {
        let p = product_from_rb(&algebras::osp12(), &r, side, Mode::Strict).unwrap();
        assert!(passes(kind, &p));
    }
    assert!(seen > 2);
}

#[test]
fn enumeration_is_deterministic() {
    let g = algebras::odd_lie_3dim();
    let cfg = SearchConfig::new(&g, Parity::ODD, Side::Left).grid(vec![q(-1), q(0), q(1)]);
    assert_eq!(rb_enumerate(&cfg).unwrap(), rb_enumerate(&cfg).unwrap());
}
