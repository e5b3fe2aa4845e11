//! Built-in worked examples, each with the claims made about it and the
//! verdicts that exhaustive checking actually produces.

use serde_json::{json, Value};

use crate::constructions::{adjoint_rep, commutator_bracket, product_from_rb};
use crate::error::{Error, Result};
use crate::format::Document;
use crate::identities::{check_derivation, check_product, check_representation, check_rota_baxter, IdentityKind, Mode, Side};
use crate::product::SuperProduct;
use crate::report::{CheckReport, Counterexample, Scan};
use crate::space::Vector;
use crate::ternary::reduce_to_lie;

/// Constructors for the example objects.
pub mod algebras {
    use crate::map::HomLinearMap;
    use crate::product::SuperProduct;
    use crate::scalar::{Parity, Scalar};
    use crate::space::SuperSpace;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn half(n: i64) -> Scalar {
        Scalar::ratio(n, 2)
    }

    fn osp_space(name: &str) -> std::sync::Arc<SuperSpace> {
        SuperSpace::from_pairs(name, &[("Y", 0), ("F", 0), ("G", 0), ("Ep", 1), ("Em", 1)])
    }

    /// The orthosymplectic superalgebra osp(1|2), even bracket.
    pub fn osp12() -> SuperProduct {
        let sp = osp_space("osp12");
        // listed once per unordered pair; the transposes follow from skew symmetry
        let half_rules: [(&str, &str, &[(Scalar, &str)]); 9] = [
            ("Y", "F", &[(s(1), "F")]),
            ("Y", "G", &[(s(-1), "G")]),
            ("F", "G", &[(s(2), "Y")]),
            ("Y", "Ep", &[(half(1), "Ep")]),
            ("Y", "Em", &[(half(-1), "Em")]),
            ("F", "Em", &[(s(-1), "Ep")]),
            ("G", "Ep", &[(s(-1), "Em")]),
            ("Ep", "Ep", &[(s(1), "F")]),
            ("Em", "Em", &[(s(-1), "G")]),
        ];
        let mut constants = Vec::new();
        let idx = |l: &str| sp.index_of(l).expect("osp label");
        let mut push = |x: &str, y: &str, terms: &[(Scalar, &str)], sign: &Scalar| {
            for (c, l) in terms {
                constants.push((vec![idx(x), idx(y)], idx(l), sign * c));
            }
        };
        for (x, y, terms) in half_rules {
            push(x, y, terms, &s(1));
            if x != y {
                let odd_pair = sp.parity(idx(x)).is_odd() && sp.parity(idx(y)).is_odd();
                push(y, x, terms, &if odd_pair { s(1) } else { s(-1) });
            }
        }
        push("Ep", "Em", &[(s(1), "Y")], &s(1));
        push("Em", "Ep", &[(s(1), "Y")], &s(1));
        SuperProduct::new(&sp, 2, Parity::EVEN, constants).expect("osp(1|2) is graded")
    }

    /// Odd left Rota-Baxter operator `F ↦ Em`, `Ep ↦ −½G` on osp(1|2).
    pub fn osp_rl() -> HomLinearMap {
        HomLinearMap::from_rules(
            &osp_space("osp12"),
            Parity::ODD,
            &[("F", &[(s(1), "Em")]), ("Ep", &[(half(-1), "G")])],
        )
        .expect("graded")
    }

    /// Odd right Rota-Baxter operator `F ↦ Em`, `Ep ↦ ½G` on osp(1|2).
    pub fn osp_rr() -> HomLinearMap {
        HomLinearMap::from_rules(
            &osp_space("osp12"),
            Parity::ODD,
            &[("F", &[(s(1), "Em")]), ("Ep", &[(half(1), "G")])],
        )
        .expect("graded")
    }

    /// The seven products listed for `x ▷ y = [R_L x, y]`, as printed.
    pub fn osp_rl_table() -> SuperProduct {
        SuperProduct::from_rules(
            &osp_space("ospRL_table"),
            2,
            Parity::ODD,
            &[
                (&["F", "Y"], &[(half(1), "Em")]),
                (&["F", "F"], &[(s(1), "Ep")]),
                (&["F", "Ep"], &[(s(1), "Y")]),
                (&["F", "Em"], &[(s(-1), "G")]),
                (&["Ep", "Y"], &[(half(1), "G")]),
                (&["Ep", "F"], &[(s(-1), "Y")]),
                (&["Ep", "Ep"], &[(half(1), "Em")]),
            ],
        )
        .expect("graded")
    }

    /// The seven products listed for `x ◁ y = [x, R_R y]`.
    pub fn osp_rr_table() -> SuperProduct {
        SuperProduct::from_rules(
            &osp_space("ospRR_table"),
            2,
            Parity::ODD,
            &[
                (&["Y", "F"], &[(half(-1), "Em")]),
                (&["F", "F"], &[(s(-1), "Ep")]),
                (&["F", "Ep"], &[(s(1), "Y")]),
                (&["Em", "F"], &[(s(-1), "G")]),
                (&["Y", "Ep"], &[(half(-1), "G")]),
                (&["Ep", "F"], &[(s(1), "Y")]),
                (&["Ep", "Ep"], &[(half(1), "Em")]),
            ],
        )
        .expect("graded")
    }

    /// 1|1-dimensional odd product `μ(e1,e2) = −μ(e2,e1) = e1`, `μ(e2,e2) = e2`.
    pub fn ex22() -> SuperProduct {
        let sp = SuperSpace::from_pairs("ex22", &[("e1", 0), ("e2", 1)]);
        SuperProduct::from_rules(
            &sp,
            2,
            Parity::ODD,
            &[
                (&["e1", "e2"], &[(s(1), "e1")]),
                (&["e2", "e1"], &[(s(-1), "e1")]),
                (&["e2", "e2"], &[(s(1), "e2")]),
            ],
        )
        .expect("graded")
    }

    /// Its commutator `[e1,e2] = 2e1`, `[e2,e1] = −2e1`.
    pub fn ex22_commutator() -> SuperProduct {
        let sp = SuperSpace::from_pairs("ex22_commutator", &[("e1", 0), ("e2", 1)]);
        SuperProduct::from_rules(
            &sp,
            2,
            Parity::ODD,
            &[(&["e1", "e2"], &[(s(2), "e1")]), (&["e2", "e1"], &[(s(-2), "e1")])],
        )
        .expect("graded")
    }

    /// 2|1-dimensional odd product `μ(e1,e2) = −μ(e2,e1) = e3`.
    pub fn ex23() -> SuperProduct {
        let sp = SuperSpace::from_pairs("ex23", &[("e1", 0), ("e2", 0), ("e3", 1)]);
        SuperProduct::from_rules(
            &sp,
            2,
            Parity::ODD,
            &[(&["e1", "e2"], &[(s(1), "e3")]), (&["e2", "e1"], &[(s(-1), "e3")])],
        )
        .expect("graded")
    }

    /// Odd bracket `[e2,e3] = e2`, `[e3,e2] = −e2` with `e1` even and
    /// `e2`, `e3` odd.
    pub fn odd_lie_3dim() -> SuperProduct {
        let sp = SuperSpace::from_pairs("odd_lie_3dim", &[("e1", 0), ("e2", 1), ("e3", 1)]);
        SuperProduct::from_rules(
            &sp,
            2,
            Parity::ODD,
            &[(&["e2", "e3"], &[(s(1), "e2")]), (&["e3", "e2"], &[(s(-1), "e2")])],
        )
        .expect("graded")
    }

    /// Odd ternary bracket `[e1,e1,e1] = e0`.
    pub fn ex5_odd_3lie() -> SuperProduct {
        let sp = SuperSpace::from_pairs("ex5_odd_3lie", &[("e0", 0), ("e1", 1)]);
        SuperProduct::from_rules(&sp, 3, Parity::ODD, &[(&["e1", "e1", "e1"], &[(s(1), "e0")])]).expect("graded")
    }

    /// `[e1,e1] = e0`, the reduction of [`ex5_odd_3lie`] at `e1`.
    pub fn ex5_reduced_lie() -> SuperProduct {
        let sp = SuperSpace::from_pairs("ex5_reduced_lie", &[("e0", 0), ("e1", 1)]);
        SuperProduct::from_rules(&sp, 2, Parity::EVEN, &[(&["e1", "e1"], &[(s(1), "e0")])]).expect("graded")
    }

    pub fn zero_algebra() -> SuperProduct {
        let sp = SuperSpace::from_pairs("zero_algebra", &[("a", 0), ("b", 0), ("c", 1)]);
        SuperProduct::zero(&sp, 2, Parity::EVEN).expect("graded")
    }

    /// `ad_{e2}: e3 ↦ e2` on [`odd_lie_3dim`], an even map.
    pub fn odd_lie_ad_e2() -> HomLinearMap {
        let g = odd_lie_3dim();
        HomLinearMap::from_rules(g.space(), Parity::EVEN, &[("e3", &[(s(1), "e2")])]).expect("graded")
    }
}

/// What a claim executes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// A product-only identity on the named algebra.
    Identity { kind: IdentityKind, algebra: String },
    RotaBaxter { side: Side, algebra: String, map: String },
    Derivation { side: Side, algebra: String, map: String },
    Representation { algebra: String, rep: String },
    /// The operator-induced product equals the stored table.
    InducedTable { side: Side, algebra: String, map: String, table: String },
    /// The commutator of `source` equals `target`.
    Commutator { source: String, target: String },
    /// Freezing basis vector `element` of a ternary algebra gives `target`.
    Reduction { ternary: String, element: String, target: String },
    /// The frozen element is central in the reduced bracket.
    ReductionCenter { ternary: String, element: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub kind: ClaimKind,
    /// Verdict established by exhaustive checking.
    pub expected: bool,
    /// Context of the statement in the source example.
    pub source: &'static str,
    pub errata: Option<&'static str>,
}

impl Claim {
    pub fn label(&self) -> String {
        match &self.kind {
            ClaimKind::Identity { kind, algebra } => format!("{kind}({algebra})"),
            ClaimKind::RotaBaxter { side, algebra, map } => {
                let k = if *side == Side::Left { "left_rota_baxter" } else { "right_rota_baxter" };
                format!("{k}({algebra}, {map})")
            }
            ClaimKind::Derivation { side, algebra, map } => {
                let k = if *side == Side::Left { "left_derivation" } else { "right_derivation" };
                format!("{k}({algebra}, {map})")
            }
            ClaimKind::Representation { algebra, rep } => format!("representation({algebra}, {rep})"),
            ClaimKind::InducedTable { side, algebra, map, table } => {
                let k = if *side == Side::Left { "product_from_left_rb" } else { "product_from_right_rb" };
                format!("{k}({algebra}, {map}) == {table}")
            }
            ClaimKind::Commutator { source, target } => format!("commutator_bracket({source}) == {target}"),
            ClaimKind::Reduction { ternary, element, target } => format!("reduce_to_lie({ternary}, {element}) == {target}"),
            ClaimKind::ReductionCenter { ternary, element } => format!("center({ternary}, {element})"),
        }
    }
}

/// A recorded conflict between a stated result and the computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Errata {
    pub id: &'static str,
    pub text: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub document: Document,
    pub claims: Vec<Claim>,
    pub errata: Vec<Errata>,
}

#[derive(Clone, Debug)]
pub struct ClaimOutcome {
    pub entry: &'static str,
    pub claim: String,
    pub verdict: bool,
    pub expected: bool,
    pub errata: Option<&'static str>,
    pub report: CheckReport,
}

impl ClaimOutcome {
    pub fn matches_expected(&self) -> bool {
        self.verdict == self.expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "entry": self.entry,
            "claim": self.claim,
            "verdict": self.verdict,
            "expected": self.expected,
            "matches_expected": self.matches_expected(),
            "errata": self.errata,
            "check": self.report.to_json(),
        })
    }
}

const ENTRIES: [&str; 10] = [
    "ex22_odd_assoc",
    "ex23_supercomm_assoc",
    "odd_lie_3dim",
    "ex22_commutator",
    "osp12",
    "ospRL",
    "ospRR",
    "ex5_odd_3lie",
    "ex5_reduced_lie",
    "zero_algebra",
];

pub fn catalog_list() -> Vec<&'static str> {
    ENTRIES.to_vec()
}

fn identity(kind: IdentityKind, algebra: &str, expected: bool, source: &'static str) -> Claim {
    Claim {
        kind: ClaimKind::Identity {
            kind,
            algebra: algebra.to_string(),
        },
        expected,
        source,
        errata: None,
    }
}

fn rb(side: Side, algebra: &str, map: &str, expected: bool, source: &'static str) -> Claim {
    Claim {
        kind: ClaimKind::RotaBaxter {
            side,
            algebra: algebra.to_string(),
            map: map.to_string(),
        },
        expected,
        source,
        errata: None,
    }
}

fn errata(mut c: Claim, id: &'static str) -> Claim {
    c.errata = Some(id);
    c
}

fn doc_of(algebras: Vec<SuperProduct>) -> Document {
    let mut doc = Document::new();
    for a in algebras {
        doc.add_algebra(a).expect("catalog names are unique");
    }
    doc
}

const E1: Errata = Errata {
    id: "E1",
    text: "the odd ternary bracket [e1,e1,e1] = e0 is presented as a 3-Super-Lie superalgebra, but ternary \
           skew symmetry with odd arguments and odd bracket forces [e1,e1,e1] = 0; its reduction at e1 is a \
           Lie superalgebra, yet e1 is not central there ([e1,e1]_e1 = e0)",
};

const E2: Errata = Errata {
    id: "E2",
    text: "the 1|1-dimensional odd product is presented as super-associative, but \
           ass(e2,e2,e1) = mu(e2,e1) - mu(e2,-e1) = -2*e1; its commutator is still an odd Lie superalgebra",
};

const E3: Errata = Errata {
    id: "E3",
    text: "two of the seven listed products x |> y = [R_L x, y] carry the wrong sign: \
           [R_L Ep, Y] = [-1/2*G, Y] = -1/2*G (listed as 1/2*G) and [R_L Ep, F] = [-1/2*G, F] = Y \
           (listed as -Y); R_L itself is a left Rota-Baxter operator and the induced product is left-symmetric",
};

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    use IdentityKind::*;
    let entry = match name {
        "ex22_odd_assoc" => CatalogEntry {
            name: "ex22_odd_assoc",
            description: "odd product on a 1|1-dimensional space: mu(e1,e2) = -mu(e2,e1) = e1, mu(e2,e2) = e2",
            document: doc_of(vec![algebras::ex22()]),
            claims: vec![
                errata(identity(SuperAssociative, "ex22", false, "stated to be odd associative"), "E2"),
                identity(Supercommutative, "ex22", false, "stated to be super-noncommutative"),
                identity(SuperLie, "ex22", false, "the product itself is not a bracket"),
                identity(LeftSuperLeibniz, "ex22", false, "left Leibniz identity on the product"),
                identity(RightSuperLeibniz, "ex22", false, "right Leibniz identity on the product"),
                identity(LeftSymmetric, "ex22", true, "associative products would be left-symmetric"),
                identity(RightSymmetric, "ex22", false, "associative products would be right-symmetric"),
                identity(Flexible, "ex22", false, "associative products would be flexible"),
            ],
            errata: vec![E2],
        },
        "ex23_supercomm_assoc" => CatalogEntry {
            name: "ex23_supercomm_assoc",
            description: "odd product on a 2|1-dimensional space: mu(e1,e2) = -mu(e2,e1) = e3",
            document: doc_of(vec![algebras::ex23()]),
            claims: vec![
                identity(SuperAssociative, "ex23", true, "stated to be odd associative"),
                identity(Supercommutative, "ex23", true, "stated to be supercommutative"),
                identity(LeftSymmetric, "ex23", true, "associative products are left-symmetric"),
                identity(RightSymmetric, "ex23", true, "associative products are right-symmetric"),
                identity(Flexible, "ex23", true, "associative products are flexible"),
            ],
            errata: vec![],
        },
        "odd_lie_3dim" => {
            let g = algebras::odd_lie_3dim();
            let mut doc = doc_of(vec![g.clone()]);
            doc.add_map("ad_e2", "odd_lie_3dim", &algebras::odd_lie_ad_e2()).expect("fresh");
            let ad = adjoint_rep(&g, Mode::Strict).expect("odd_lie_3dim is super-Lie");
            doc.add_rep("ad", "odd_lie_3dim", "odd_lie_3dim", &ad).expect("fresh");
            CatalogEntry {
                name: "odd_lie_3dim",
                description: "odd Lie superalgebra [e2,e3] = e2 with e1 even and e2, e3 odd",
                document: doc,
                claims: vec![
                    identity(SuperSkew, "odd_lie_3dim", true, "stated to be an odd Lie superalgebra"),
                    identity(SuperJacobi, "odd_lie_3dim", true, "stated to be an odd Lie superalgebra"),
                    identity(SuperLie, "odd_lie_3dim", true, "stated to be an odd Lie superalgebra"),
                    Claim {
                        kind: ClaimKind::Derivation {
                            side: Side::Left,
                            algebra: "odd_lie_3dim".into(),
                            map: "ad_e2".into(),
                        },
                        expected: true,
                        source: "left multiplications are left derivations",
                        errata: None,
                    },
                    Claim {
                        kind: ClaimKind::Representation {
                            algebra: "odd_lie_3dim".into(),
                            rep: "ad".into(),
                        },
                        expected: true,
                        source: "the adjoint action is a representation",
                        errata: None,
                    },
                ],
                errata: vec![],
            }
        }
        "ex22_commutator" => CatalogEntry {
            name: "ex22_commutator",
            description: "commutator bracket of ex22: [e1,e2] = 2*e1",
            document: doc_of(vec![algebras::ex22(), algebras::ex22_commutator()]),
            claims: vec![
                Claim {
                    kind: ClaimKind::Commutator {
                        source: "ex22".into(),
                        target: "ex22_commutator".into(),
                    },
                    expected: true,
                    source: "the commutator defines an odd Lie superalgebra",
                    errata: None,
                },
                identity(SuperLie, "ex22_commutator", true, "the commutator defines an odd Lie superalgebra"),
            ],
            errata: vec![],
        },
        "osp12" => CatalogEntry {
            name: "osp12",
            description: "the orthosymplectic superalgebra osp(1|2) with basis Y, F, G (even) and Ep, Em (odd)",
            document: doc_of(vec![algebras::osp12()]),
            claims: vec![
                identity(SuperLie, "osp12", true, "stated to be an even Lie superalgebra"),
                identity(LeftSuperLeibniz, "osp12", true, "Lie superalgebras are left Leibniz"),
                identity(RightSuperLeibniz, "osp12", true, "Lie superalgebras are right Leibniz"),
            ],
            errata: vec![],
        },
        "ospRL" => {
            let mut doc = doc_of(vec![algebras::osp12()]);
            doc.add_map("RL", "osp12", &algebras::osp_rl()).expect("fresh");
            doc.add_algebra(algebras::osp_rl_table()).expect("fresh");
            CatalogEntry {
                name: "ospRL",
                description: "odd left Rota-Baxter operator R_L on osp(1|2) and its listed product table",
                document: doc,
                claims: vec![
                    rb(Side::Left, "osp12", "RL", true, "stated to be a left Rota-Baxter operator"),
                    rb(Side::Right, "osp12", "RL", false, "R_L checked against the right identity"),
                    errata(
                        Claim {
                            kind: ClaimKind::InducedTable {
                                side: Side::Left,
                                algebra: "osp12".into(),
                                map: "RL".into(),
                                table: "ospRL_table".into(),
                            },
                            expected: false,
                            source: "listed products of the induced left-symmetric structure",
                            errata: None,
                        },
                        "E3",
                    ),
                    errata(
                        identity(LeftSymmetric, "ospRL_table", false, "listed table stated to be left-symmetric"),
                        "E3",
                    ),
                ],
                errata: vec![E3],
            }
        }
        "ospRR" => {
            let mut doc = doc_of(vec![algebras::osp12()]);
            doc.add_map("RR", "osp12", &algebras::osp_rr()).expect("fresh");
            doc.add_algebra(algebras::osp_rr_table()).expect("fresh");
            CatalogEntry {
                name: "ospRR",
                description: "odd right Rota-Baxter operator R_R on osp(1|2) and its listed product table",
                document: doc,
                claims: vec![
                    rb(Side::Right, "osp12", "RR", true, "stated to be a right Rota-Baxter operator"),
                    rb(Side::Left, "osp12", "RR", false, "R_R checked against the left identity"),
                    Claim {
                        kind: ClaimKind::InducedTable {
                            side: Side::Right,
                            algebra: "osp12".into(),
                            map: "RR".into(),
                            table: "ospRR_table".into(),
                        },
                        expected: true,
                        source: "listed products of the induced right-symmetric structure",
                        errata: None,
                    },
                    identity(RightSymmetric, "ospRR_table", true, "listed table stated to be right-symmetric"),
                ],
                errata: vec![],
            }
        }
        "ex5_odd_3lie" => CatalogEntry {
            name: "ex5_odd_3lie",
            description: "odd ternary bracket [e1,e1,e1] = e0 with e0 even and e1 odd",
            document: doc_of(vec![algebras::ex5_odd_3lie()]),
            claims: vec![
                errata(identity(TernarySkew, "ex5_odd_3lie", false, "stated to be an odd 3-Lie superalgebra"), "E1"),
                identity(Filippov, "ex5_odd_3lie", true, "stated to be an odd 3-Lie superalgebra"),
                errata(identity(ThreeSuperLie, "ex5_odd_3lie", false, "stated to be an odd 3-Lie superalgebra"), "E1"),
                identity(LeftTernaryLeibniz, "ex5_odd_3lie", true, "the Filippov identity in Leibniz form"),
                identity(RightTernaryLeibniz, "ex5_odd_3lie", true, "right ternary Leibniz identity"),
            ],
            errata: vec![E1],
        },
        "ex5_reduced_lie" => CatalogEntry {
            name: "ex5_reduced_lie",
            description: "reduction of ex5_odd_3lie at e1: [e1,e1] = e0",
            document: doc_of(vec![algebras::ex5_odd_3lie(), algebras::ex5_reduced_lie()]),
            claims: vec![
                Claim {
                    kind: ClaimKind::Reduction {
                        ternary: "ex5_odd_3lie".into(),
                        element: "e1".into(),
                        target: "ex5_reduced_lie".into(),
                    },
                    expected: true,
                    source: "the reduced bracket is stated explicitly",
                    errata: None,
                },
                identity(SuperLie, "ex5_reduced_lie", true, "stated to be a Lie superalgebra"),
                errata(
                    Claim {
                        kind: ClaimKind::ReductionCenter {
                            ternary: "ex5_odd_3lie".into(),
                            element: "e1".into(),
                        },
                        expected: false,
                        source: "the frozen element is stated to be central",
                        errata: None,
                    },
                    "E1",
                ),
            ],
            errata: vec![E1],
        },
        "zero_algebra" => CatalogEntry {
            name: "zero_algebra",
            description: "zero product on a 2|1-dimensional space",
            document: doc_of(vec![algebras::zero_algebra()]),
            claims: IdentityKind::ALL
                .iter()
                .filter(|k| k.is_product_only() && k.arity() == 2)
                .map(|k| identity(*k, "zero_algebra", true, "every identity holds trivially"))
                .collect(),
            errata: vec![],
        },
        other => return Err(Error::UnknownEntry(other.to_string())),
    };
    Ok(entry)
}

/// Compares two products entry by entry; each differing basis tuple is a
/// counterexample with the constructed value on the left.
pub(crate) fn compare_tables(clause: &'static str, built: &SuperProduct, stored: &SuperProduct) -> Result<Vec<Counterexample>> {
    if !built.space().same_basis(stored.space()) || built.arity() != stored.arity() {
        return Err(Error::SpaceMismatch("tables live on different bases".into()));
    }
    let mut found =
        Scan::uniform(clause, built.space(), built.arity()).run(false, |t| (built.basis_dense(t), stored.basis_dense(t)));
    if built.parity() != stored.parity() {
        found.insert(
            0,
            Counterexample {
                clause: "parity".into(),
                tuple: vec![],
                labels: vec![],
                lhs: Vector::zero(built.space()),
                rhs: Vector::zero(built.space()),
            },
        );
    }
    Ok(found)
}

fn lookup<'a>(doc: &'a Document, name: &str) -> Result<&'a SuperProduct> {
    doc.algebra(name).ok_or_else(|| Error::UnknownReference(name.to_string()))
}

fn run_claim(doc: &Document, claim: &Claim) -> Result<CheckReport> {
    let label = claim.label();
    let map = |name: &str| doc.map(name).ok_or_else(|| Error::UnknownReference(name.to_string()));
    Ok(match &claim.kind {
        ClaimKind::Identity { kind, algebra } => check_product(*kind, lookup(doc, algebra)?)?,
        ClaimKind::RotaBaxter { side, algebra, map: m } => check_rota_baxter(lookup(doc, algebra)?, map(m)?, *side, Mode::Raw)?,
        ClaimKind::Derivation { side, algebra, map: m } => check_derivation(lookup(doc, algebra)?, map(m)?, *side)?,
        ClaimKind::Representation { algebra, rep } => {
            let r = doc.rep(rep).ok_or_else(|| Error::UnknownReference(rep.to_string()))?;
            check_representation(lookup(doc, algebra)?, r)?
        }
        ClaimKind::InducedTable { side, algebra, map: m, table } => {
            let built = product_from_rb(lookup(doc, algebra)?, map(m)?, *side, Mode::Raw)?;
            CheckReport::new(&label, compare_tables("table", &built, lookup(doc, table)?)?)
        }
        ClaimKind::Commutator { source, target } => {
            let built = commutator_bracket(lookup(doc, source)?)?;
            CheckReport::new(&label, compare_tables("table", &built, lookup(doc, target)?)?)
        }
        ClaimKind::Reduction { ternary, element, target } => {
            let t = lookup(doc, ternary)?;
            let i = t.space().index_of(element).ok_or_else(|| Error::UnknownLabel(element.clone()))?;
            let (built, _) = reduce_to_lie(t, &Vector::basis(t.space(), i), Mode::Raw)?;
            CheckReport::new(&label, compare_tables("table", &built, lookup(doc, target)?)?)
        }
        ClaimKind::ReductionCenter { ternary, element } => {
            let t = lookup(doc, ternary)?;
            let i = t.space().index_of(element).ok_or_else(|| Error::UnknownLabel(element.clone()))?;
            let (_, report) = reduce_to_lie(t, &Vector::basis(t.space(), i), Mode::Raw)?;
            CheckReport::new(
                "center",
                report.counterexamples.into_iter().filter(|c| c.clause == "center").collect(),
            )
        }
    })
}

/// Runs every claim of the named entry, or of all entries.
pub fn catalog_verify(name: Option<&str>) -> Result<Vec<ClaimOutcome>> {
    let names = match name {
        Some(n) => vec![catalog_get(n)?.name],
        None => catalog_list(),
    };
    let mut out = Vec::new();
    for n in names {
        let entry = catalog_get(n)?;
        for claim in &entry.claims {
            let report = run_claim(&entry.document, claim)?;
            out.push(ClaimOutcome {
                entry: entry.name,
                claim: claim.label(),
                verdict: report.passed(),
                expected: claim.expected,
                errata: claim.errata,
                report,
            });
        }
    }
    Ok(out)
}

/// Human-readable verification report; stable across runs.
pub fn render_verify(outcomes: &[ClaimOutcome]) -> String {
    let mut out = String::new();
    let mut current = "";
    for o in outcomes {
        if o.entry != current {
            current = o.entry;
            out.push_str(current);
            out.push('\n');
        }
        let v = |b: bool| if b { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "  {}: {} (expected {}){}{}\n",
            o.claim,
            v(o.verdict),
            v(o.expected),
            if o.matches_expected() { "" } else { " MISMATCH" },
            o.errata.map(|e| format!(" [errata {e}]")).unwrap_or_default()
        ));
        for c in &o.report.counterexamples {
            out.push_str(&format!("    {} ({}): {} vs {}\n", c.clause, c.labels.join(","), c.lhs, c.rhs));
        }
    }
    let ok = outcomes.iter().filter(|o| o.matches_expected()).count();
    out.push_str(&format!("{} claims, {} as expected\n", outcomes.len(), ok));
    out
}
