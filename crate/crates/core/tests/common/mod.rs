//! Independent dense evaluator for the identities, written straight from
//! their defining equations. Only the structure constants and matrix
//! entries are taken from the library.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superlie::catalog::{catalog_get, catalog_list};
use superlie::linalg::inverse;
use superlie::{Document, HomLinearMap, Representation, Scalar, SuperProduct, SuperSpace};

pub fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn sign(e: u32) -> Scalar {
    if e.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

/// A homogeneous element: coordinates plus parity.
#[derive(Clone, Debug)]
pub struct El {
    pub v: Vec<Scalar>,
    pub p: u32,
}

impl El {
    pub fn is_zero(&self) -> bool {
        self.v.iter().all(Scalar::is_zero)
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn sum(terms: &[(Scalar, &El)]) -> Vec<Scalar> {
    let d = terms[0].1.v.len();
    terms
        .iter()
        .fold(vec![q(0); d], |acc, (c, e)| add(&acc, &scale(c, &e.v)))
}

/// Dense copy of a product: `c[tuple][k]`.
#[derive(Clone, Debug)]
pub struct Dense {
    pub dim: usize,
    pub par: Vec<u32>,
    pub b: u32,
    pub arity: usize,
    c: std::collections::HashMap<Vec<usize>, Vec<Scalar>>,
}

impl Dense {
    pub fn of(p: &SuperProduct) -> Dense {
        let dim = p.dim();
        let mut c = std::collections::HashMap::new();
        for (t, terms) in p.constants() {
            let mut v = vec![q(0); dim];
            for (k, s) in terms {
                v[*k] = s.clone();
            }
            c.insert(t, v);
        }
        Dense {
            dim,
            par: (0..dim).map(|i| p.p(i).bit() as u32).collect(),
            b: p.parity().bit() as u32,
            arity: p.arity(),
            c,
        }
    }

    pub fn basis(&self, i: usize) -> El {
        let mut v = vec![q(0); self.dim];
        v[i] = q(1);
        El { v, p: self.par[i] }
    }

    pub fn mul(&self, args: &[&El]) -> El {
        assert_eq!(args.len(), self.arity);
        let mut out = vec![q(0); self.dim];
        for (t, val) in &self.c {
            let mut coeff = q(1);
            for (slot, &i) in t.iter().enumerate() {
                coeff = &coeff * &args[slot].v[i];
                if coeff.is_zero() {
                    break;
                }
            }
            if !coeff.is_zero() {
                out = add(&out, &scale(&coeff, val));
            }
        }
        El {
            v: out,
            p: (args.iter().map(|a| a.p).sum::<u32>() + self.b) % 2,
        }
    }

    pub fn m(&self, x: &El, y: &El) -> El {
        self.mul(&[x, y])
    }

    pub fn t(&self, x: &El, y: &El, z: &El) -> El {
        self.mul(&[x, y, z])
    }

    /// A random homogeneous element of parity `p`, or `None` if that part
    /// is empty.
    pub fn random<R: Rng>(&self, rng: &mut R, p: u32) -> Option<El> {
        let support: Vec<usize> = (0..self.dim).filter(|&i| self.par[i] == p).collect();
        if support.is_empty() {
            return None;
        }
        let mut v = vec![q(0); self.dim];
        for i in support {
            v[i] = Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        }
        Some(El { v, p })
    }
}

#[derive(Clone, Debug)]
pub struct DMap {
    pub m: Vec<Vec<Scalar>>,
    pub r: u32,
}

impl DMap {
    pub fn of(h: &HomLinearMap) -> DMap {
        DMap {
            m: h.entries().to_vec(),
            r: h.parity().bit() as u32,
        }
    }

    pub fn ap(&self, x: &El) -> El {
        let v = self
            .m
            .iter()
            .map(|row| row.iter().zip(&x.v).fold(q(0), |acc, (a, b)| &acc + &(a * b)))
            .collect();
        El { v, p: (x.p + self.r) % 2 }
    }
}

fn ass(g: &Dense, x: &El, y: &El, z: &El) -> El {
    let l = g.m(&g.m(x, y), z);
    let r = g.m(x, &g.m(y, z));
    El {
        v: sum(&[(q(1), &l), (q(-1), &r)]),
        p: l.p,
    }
}

/// Residual `lhs − rhs` of each binary product identity.
pub fn residual(name: &str, g: &Dense, a: &[El]) -> Vec<Scalar> {
    let b = g.b;
    let s2 = |x: &El, y: &El| sign((x.p + b) * (y.p + b));
    match name {
        "super_associative" => ass(g, &a[0], &a[1], &a[2]).v,
        "supercommutative" => {
            let (x, y) = (&a[0], &a[1]);
            sum(&[(q(1), &g.m(x, y)), (-s2(x, y), &g.m(y, x))])
        }
        "super_skew" => {
            let (x, y) = (&a[0], &a[1]);
            sum(&[(q(1), &g.m(x, y)), (s2(x, y), &g.m(y, x))])
        }
        "super_jacobi" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[
                (s2(x, z), &g.m(x, &g.m(y, z))),
                (s2(y, x), &g.m(y, &g.m(z, x))),
                (s2(z, y), &g.m(z, &g.m(x, y))),
            ])
        }
        "left_super_leibniz" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[
                (q(1), &g.m(x, &g.m(y, z))),
                (q(-1), &g.m(&g.m(x, y), z)),
                (-s2(x, y), &g.m(y, &g.m(x, z))),
            ])
        }
        "right_super_leibniz" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[
                (q(1), &g.m(&g.m(x, y), z)),
                (q(-1), &g.m(x, &g.m(y, z))),
                (-s2(y, z), &g.m(&g.m(x, z), y)),
            ])
        }
        "left_symmetric" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[(q(1), &ass(g, x, y, z)), (-s2(x, y), &ass(g, y, x, z))])
        }
        "right_symmetric" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[(q(1), &ass(g, x, y, z)), (-s2(y, z), &ass(g, x, z, y))])
        }
        "flexible" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            let e = (x.p + b) * (y.p + z.p) + (y.p + b) * (z.p + b);
            sum(&[(q(1), &ass(g, x, y, z)), (-sign(e), &ass(g, z, y, x))])
        }
        other => panic!("no oracle for {other}"),
    }
}

pub const BINARY: [(&str, usize); 10] = [
    ("super_associative", 3),
    ("supercommutative", 2),
    ("left_super_leibniz", 3),
    ("right_super_leibniz", 3),
    ("super_skew", 2),
    ("super_jacobi", 3),
    ("left_symmetric", 3),
    ("right_symmetric", 3),
    ("flexible", 3),
    ("super_lie", 0),
];

/// `[Rx,Ry] − R([Rx,y] + (−1)^{r(ȳ+r+b)}[x,Ry])` for the left side and
/// `[Rx,Ry] − R((−1)^{r(x̄+r+b)}[Rx,y] + [x,Ry])` for the right.
pub fn rb_residual(g: &Dense, r: &DMap, left: bool, x: &El, y: &El) -> Vec<Scalar> {
    let (rx, ry) = (r.ap(x), r.ap(y));
    let lhs = g.m(&rx, &ry);
    let t1 = g.m(&rx, y);
    let t2 = g.m(x, &ry);
    let inner = if left {
        sum(&[(q(1), &t1), (sign(r.r * (y.p + r.r + g.b)), &t2)])
    } else {
        sum(&[(sign(r.r * (x.p + r.r + g.b)), &t1), (q(1), &t2)])
    };
    let rhs = r.ap(&El { v: inner, p: t1.p });
    sum(&[(q(1), &lhs), (q(-1), &rhs)])
}

/// `[Rx,Ry] − R([Rx,y] + [x,Ry] + λ[x,y])`.
pub fn weighted_residual(g: &Dense, r: &DMap, lambda: &Scalar, x: &El, y: &El) -> Vec<Scalar> {
    let (rx, ry) = (r.ap(x), r.ap(y));
    let lhs = g.m(&rx, &ry);
    let xy = g.m(x, y);
    let inner = sum(&[(q(1), &g.m(&rx, y)), (q(1), &g.m(x, &ry)), (lambda.clone(), &xy)]);
    let rhs = r.ap(&El { v: inner, p: xy.p });
    sum(&[(q(1), &lhs), (q(-1), &rhs)])
}

/// `D[x,y] − [Dx,y] − (−1)^{d(x̄+b)}[x,Dy]` (left) and
/// `D[x,y] − [x,Dy] − (−1)^{d(ȳ+b)}[Dx,y]` (right).
pub fn derivation_residual(g: &Dense, d: &DMap, left: bool, x: &El, y: &El) -> Vec<Scalar> {
    let lhs = d.ap(&g.m(x, y));
    let a = g.m(&d.ap(x), y);
    let c = g.m(x, &d.ap(y));
    if left {
        sum(&[(q(1), &lhs), (q(-1), &a), (-sign(d.r * (x.p + g.b)), &c)])
    } else {
        sum(&[(q(1), &lhs), (q(-1), &c), (-sign(d.r * (y.p + g.b)), &a)])
    }
}

/// A representation as one dense matrix per basis vector of the algebra.
pub struct DRep {
    pub act: Vec<DMap>,
    pub mpar: Vec<u32>,
}

impl DRep {
    pub fn of(rep: &Representation) -> DRep {
        let m = rep.module();
        DRep {
            act: rep.actions().iter().map(DMap::of).collect(),
            mpar: (0..m.dim()).map(|i| m.parity(i).bit() as u32).collect(),
        }
    }

    /// `ρ(x)v` for a general element `x`.
    pub fn rho(&self, x: &El, v: &El, b: u32) -> El {
        let mut out = vec![q(0); v.v.len()];
        for (i, c) in x.v.iter().enumerate() {
            if !c.is_zero() {
                out = add(&out, &scale(c, &self.act[i].ap(v).v));
            }
        }
        El { v: out, p: (x.p + v.p + b) % 2 }
    }

    pub fn module_basis(&self, i: usize) -> El {
        let mut v = vec![q(0); self.mpar.len()];
        v[i] = q(1);
        El { v, p: self.mpar[i] }
    }
}

/// `ρ([x,y])v − ρ(x)ρ(y)v + (−1)^{(x̄+b)(ȳ+b)}ρ(y)ρ(x)v`.
pub fn rep_residual(g: &Dense, rep: &DRep, x: &El, y: &El, v: &El) -> Vec<Scalar> {
    let b = g.b;
    let l = rep.rho(&g.m(x, y), v, b);
    let xy = rep.rho(x, &rep.rho(y, v, b), b);
    let yx = rep.rho(y, &rep.rho(x, v, b), b);
    sum(&[(q(1), &l), (q(-1), &xy), (sign((x.p + b) * (y.p + b)), &yx)])
}

/// Ternary identities, `q` being the bracket parity.
pub fn ternary_residual(name: &str, g: &Dense, a: &[El]) -> Vec<Scalar> {
    let qq = g.b;
    match name {
        "ternary_skew_12" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[(q(1), &g.t(x, y, z)), (sign((x.p + qq) * (y.p + qq)), &g.t(y, x, z))])
        }
        "ternary_skew_23" => {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            sum(&[(q(1), &g.t(x, y, z)), (sign((y.p + qq) * (z.p + qq)), &g.t(x, z, y))])
        }
        "filippov" | "left_ternary_leibniz" => {
            let (x1, x2, y1, y2, y3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            let h = x1.p + x2.p + qq;
            sum(&[
                (q(1), &g.t(x1, x2, &g.t(y1, y2, y3))),
                (q(-1), &g.t(&g.t(x1, x2, y1), y2, y3)),
                (-sign(h * (y1.p + qq)), &g.t(y1, &g.t(x1, x2, y2), y3)),
                (-sign(h * (y1.p + y2.p)), &g.t(y1, y2, &g.t(x1, x2, y3))),
            ])
        }
        "right_ternary_leibniz" => {
            let (x1, x2, y1, y2, y3) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
            let h = y2.p + y3.p + qq;
            sum(&[
                (q(1), &g.t(&g.t(x1, x2, y1), y2, y3)),
                (q(-1), &g.t(x1, x2, &g.t(y1, y2, y3))),
                (-sign(h * (y1.p + qq)), &g.t(x1, &g.t(x2, y2, y3), y1)),
                (-sign((x2.p + y1.p) * h), &g.t(&g.t(x1, y2, y3), x2, y1)),
            ])
        }
        other => panic!("no ternary oracle for {other}"),
    }
}

/// `[x,y,z]_R` as printed.
pub fn induced_ternary(g: &Dense, r: &DMap, x: &El, y: &El, z: &El) -> El {
    let rr = r.r;
    let (rx, ry, rz) = (r.ap(x), r.ap(y), r.ap(z));
    let a = g.t(&rx, &ry, z);
    let v = sum(&[
        (q(1), &a),
        (sign(rr * (rr + y.p + g.b)), &g.t(&rx, y, &rz)),
        (sign(rr * (x.p + y.p)), &g.t(x, &ry, &rz)),
    ]);
    El { v, p: a.p }
}

/// `[Rx,Ry,Rz] − R([x,y,z]_R)`.
pub fn ternary_rb_residual(g: &Dense, r: &DMap, x: &El, y: &El, z: &El) -> Vec<Scalar> {
    let lhs = g.t(&r.ap(x), &r.ap(y), &r.ap(z));
    let rhs = r.ap(&induced_ternary(g, r, x, y, z));
    sum(&[(q(1), &lhs), (q(-1), &rhs)])
}

/// Every basis tuple of length `n`, lexicographic.
pub fn tuples(dim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Basis-tuple verdict of a binary product identity by the oracle.
pub fn oracle_holds(name: &str, g: &Dense) -> bool {
    if name == "super_lie" {
        return oracle_holds("super_skew", g) && oracle_holds("super_jacobi", g);
    }
    let n = BINARY.iter().find(|(k, _)| *k == name).unwrap().1;
    tuples(g.dim, n).iter().all(|t| {
        let a: Vec<El> = t.iter().map(|&i| g.basis(i)).collect();
        zero(&residual(name, g, &a))
    })
}

/// Failing basis tuples of a binary product identity by the oracle.
pub fn oracle_failures(name: &str, g: &Dense) -> Vec<Vec<usize>> {
    let n = BINARY.iter().find(|(k, _)| *k == name).unwrap().1;
    tuples(g.dim, n)
        .into_iter()
        .filter(|t| {
            let a: Vec<El> = t.iter().map(|&i| g.basis(i)).collect();
            !zero(&residual(name, g, &a))
        })
        .collect()
}

pub fn oracle_rb_holds(g: &Dense, r: &DMap, left: bool) -> bool {
    tuples(g.dim, 2)
        .iter()
        .all(|t| zero(&rb_residual(g, r, left, &g.basis(t[0]), &g.basis(t[1]))))
}

pub fn oracle_derivation_holds(g: &Dense, d: &DMap, left: bool) -> bool {
    tuples(g.dim, 2)
        .iter()
        .all(|t| zero(&derivation_residual(g, d, left, &g.basis(t[0]), &g.basis(t[1]))))
}

pub fn oracle_rep_holds(g: &Dense, rep: &DRep) -> bool {
    tuples(g.dim, 2).iter().all(|t| {
        (0..rep.mpar.len()).all(|k| zero(&rep_residual(g, rep, &g.basis(t[0]), &g.basis(t[1]), &rep.module_basis(k))))
    })
}

pub fn oracle_ternary_holds(name: &str, g: &Dense) -> bool {
    let n = if name.starts_with("ternary_skew") { 3 } else { 5 };
    tuples(g.dim, n).iter().all(|t| {
        let a: Vec<El> = t.iter().map(|&i| g.basis(i)).collect();
        zero(&ternary_residual(name, g, &a))
    })
}

/// All parity-respecting maps with entries drawn from `grid`.
pub fn grid_maps(g: &Dense, r: u32, grid: &[Scalar]) -> Vec<DMap> {
    let free: Vec<(usize, usize)> = (0..g.dim)
        .flat_map(|j| (0..g.dim).map(move |i| (j, i)))
        .filter(|&(j, i)| g.par[j] == (g.par[i] + r) % 2)
        .collect();
    let mut out = Vec::new();
    let total = grid.len().pow(free.len() as u32);
    for mut n in 0..total {
        let mut m = vec![vec![q(0); g.dim]; g.dim];
        for &(j, i) in free.iter().rev() {
            m[j][i] = grid[n % grid.len()].clone();
            n /= grid.len();
        }
        out.push(DMap { m, r });
    }
    out
}

/// A sparse random product of the given arity and parity on a space with
/// `even` even and `odd` odd basis vectors.
pub fn random_product<R: Rng>(rng: &mut R, even: usize, odd: usize, arity: usize, b: u8, density: f64) -> SuperProduct {
    let pairs: Vec<(String, u8)> = (0..even)
        .map(|i| (format!("a{i}"), 0))
        .chain((0..odd).map(|i| (format!("z{i}"), 1)))
        .collect();
    let refs: Vec<(&str, u8)> = pairs.iter().map(|(l, p)| (l.as_str(), *p)).collect();
    let sp = superlie::SuperSpace::from_pairs("rnd", &refs);
    let dim = even + odd;
    let mut constants = Vec::new();
    for t in tuples(dim, arity) {
        if !rng.gen_bool(density) {
            continue;
        }
        let p = (t.iter().map(|&i| pairs[i].1 as u32).sum::<u32>() + b as u32) % 2;
        let targets: Vec<usize> = (0..dim).filter(|&k| pairs[k].1 as u32 == p).collect();
        if targets.is_empty() {
            continue;
        }
        let k = targets[rng.gen_range(0..targets.len())];
        let c = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        constants.push((t, k, q(c)));
    }
    SuperProduct::new(&sp, arity, superlie::Parity::new(b).unwrap(), constants).unwrap()
}

/// A random map of parity `r` with entries in `{-1, 0, 1}`.
pub fn random_map<R: Rng>(rng: &mut R, p: &SuperProduct, r: u8) -> HomLinearMap {
    let sp = p.space();
    let d = sp.dim();
    let mut m = vec![vec![q(0); d]; d];
    for (j, row) in m.iter_mut().enumerate() {
        for (i, e) in row.iter_mut().enumerate() {
            if sp.parity(j).bit() == (sp.parity(i).bit() + r) % 2 {
                *e = q(rng.gen_range(-1..=1));
            }
        }
    }
    HomLinearMap::new(sp, sp, superlie::Parity::new(r).unwrap(), m).unwrap()
}

/// A random even change of basis with entries in `{-1, 0, 1}` on the diagonal
/// blocks, or `None` when singular.
pub fn random_even_basis_change<R: Rng>(rng: &mut R, sp: &SuperSpace) -> Option<Vec<Vec<Scalar>>> {
    let d = sp.dim();
    let mut m = vec![vec![q(0); d]; d];
    for (j, row) in m.iter_mut().enumerate() {
        for (i, e) in row.iter_mut().enumerate() {
            if sp.parity(i) == sp.parity(j) {
                *e = if i == j { q(1) } else { q(rng.gen_range(-1..=1)) };
            }
        }
    }
    inverse(&m).map(|_| m)
}

/// `μ'(x, y, ...) = P⁻¹ μ(Px, Py, ...)`, which is isomorphic to `μ`.
pub fn transport(p: &SuperProduct, pm: &[Vec<Scalar>]) -> SuperProduct {
    let d = Dense::of(p);
    let inv = inverse(pm).unwrap();
    let pinv = DMap { m: inv, r: 0 };
    let pmap = DMap { m: pm.to_vec(), r: 0 };
    let mut constants = Vec::new();
    for t in tuples(d.dim, p.arity()) {
        let args: Vec<El> = t.iter().map(|&i| pmap.ap(&d.basis(i))).collect();
        let refs: Vec<&El> = args.iter().collect();
        let out = pinv.ap(&d.mul(&refs));
        for (k, c) in out.v.into_iter().enumerate() {
            if !c.is_zero() {
                constants.push((t.clone(), k, c));
            }
        }
    }
    SuperProduct::new(p.space(), p.arity(), p.parity(), constants).unwrap()
}

pub fn random_copy(seed: u64, base: &SuperProduct) -> SuperProduct {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(pm) = random_even_basis_change(&mut rng, base.space()) {
            return transport(base, &pm);
        }
    }
}

// Parser mutation fuzzing.

const TOKENS: [&str; 24] = [
    "space", "algebra", "map", "rep", "basis", "arity", "parity", "skew_complete", "on", "[", "]", ",", "=", "->", "+",
    "-", "*", "/", ":", "0", "1", "3", "1/0", "#",
];

pub fn seeds() -> Vec<String> {
    let mut out: Vec<String> = catalog_list()
        .into_iter()
        .map(|n| catalog_get(n).unwrap().document.serialize())
        .collect();
    out.push(include_str!("../../data/osp12.alg").to_string());
    out
}

pub fn mutate(rng: &mut ChaCha8Rng, text: &str) -> String {
    let mut chars: Vec<char> = text.chars().collect();
    let rounds = rng.gen_range(1..4);
    for _ in 0..rounds {
        match rng.gen_range(0..6) {
            0 if !chars.is_empty() => {
                let i = rng.gen_range(0..chars.len());
                chars.remove(i);
            }
            1 => {
                let i = rng.gen_range(0..=chars.len());
                let c = *b" \n\t[],=:+-*/#01e\xc3".choose(rng).unwrap() as char;
                chars.insert(i, c);
            }
            2 => {
                let i = rng.gen_range(0..=chars.len());
                let t = TOKENS.choose(rng).unwrap();
                for (k, c) in format!(" {t} ").chars().enumerate() {
                    chars.insert(i + k, c);
                }
            }
            3 if !chars.is_empty() => {
                let i = rng.gen_range(0..chars.len());
                chars[i] = ['é', '\u{0}', 'x', '9', '(', ')', '_'][rng.gen_range(0..7)];
            }
            _ => {
                let s: String = chars.iter().collect();
                let mut lines: Vec<&str> = s.lines().collect();
                if lines.len() > 1 {
                    let a = rng.gen_range(0..lines.len());
                    let b = rng.gen_range(0..lines.len());
                    match rng.gen_range(0..3) {
                        0 => lines.swap(a, b),
                        1 => {
                            lines.remove(a);
                        }
                        _ => lines.insert(b, lines[a]),
                    }
                }
                chars = lines.join("\n").chars().collect();
            }
        }
    }
    chars.into_iter().collect()
}

/// Parses `n` mutated documents. Returns accepted and rejected counts, or a
/// description of the first panic, bad position or failed round trip.
pub fn fuzz_parser(n: usize, seed: u64) -> Result<(usize, usize), String> {
    let seeds = seeds();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut accepted, mut rejected) = (0, 0);
    for _ in 0..n {
        let base = seeds.choose(&mut rng).unwrap();
        let text = mutate(&mut rng, base);
        let result = std::panic::catch_unwind(|| Document::parse(&text))
            .map_err(|_| format!("parser panicked on:\n{text}"))?;
        match result {
            Ok(doc) => {
                accepted += 1;
                match Document::parse(&doc.serialize()) {
                    Ok(again) if again == doc => {}
                    _ => return Err(format!("round trip failed after accepting:\n{text}")),
                }
            }
            Err(e) => {
                rejected += 1;
                let lines: Vec<&str> = text.split('\n').collect();
                if e.line < 1 || e.line > lines.len() {
                    return Err(format!("line {} of {}: {e}\n{text}", e.line, lines.len()));
                }
                let width = lines[e.line - 1].chars().count();
                if e.column < 1 || e.column > width + 1 {
                    return Err(format!("column {} of {width}: {e}\n{text}", e.column));
                }
            }
        }
    }
    Ok((accepted, rejected))
}
