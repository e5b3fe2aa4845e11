//! The line-oriented text format for spaces, algebras, maps and
//! representations.
//!
//! ```text
//! # osp(1|2)
//! algebra osp12
//! parity 0
//! basis Y:0 F:0 G:0 Ep:1 Em:1
//! skew_complete
//! [Y,F] = F
//! [F,G] = 2*Y
//!
//! map RL parity 1 on osp12
//! F -> Em
//! Ep -> -1/2*G
//!
//! rep ad parity 0 algebra osp12 module osp12
//! rho(Y): F -> F
//! ```
//!
//! Unlisted structure constants and matrix entries are zero.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::constructions::Representation;
use crate::error::{Error, Result};
use crate::map::HomLinearMap;
use crate::product::{grading_error, SuperProduct};
use crate::scalar::{sign_pow, Parity, Scalar};
use crate::space::{format_combination, SuperSpace, Vector};

const KEYWORDS: [&str; 8] = ["space", "algebra", "map", "rep", "basis", "arity", "parity", "skew_complete"];

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected {expected}, found {found}")]
    Syntax { expected: String, found: String },
    #[error("grading violation at {location}: {detail}")]
    Grading { location: String, detail: String },
    #[error("`{0}` is defined twice")]
    DuplicateDefinition(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("unknown declaration `{0}`")]
    UnknownReference(String),
    #[error("skew completion of {0} conflicts with an explicit entry")]
    SkewConflict(String),
    #[error("{0}")]
    Invalid(String),
}

/// One top-level definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Declaration {
    Space(Arc<SuperSpace>),
    /// An algebra is named after its space.
    Algebra(SuperProduct),
    Map {
        name: String,
        on: String,
        map: HomLinearMap,
    },
    Rep {
        name: String,
        algebra: String,
        module: String,
        rep: Representation,
    },
}

impl Declaration {
    pub fn name(&self) -> &str {
        match self {
            Declaration::Space(s) => s.name(),
            Declaration::Algebra(p) => p.space().name(),
            Declaration::Map { name, .. } | Declaration::Rep { name, .. } => name,
        }
    }
}

/// An ordered list of uniquely named declarations whose references all
/// resolve to earlier declarations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    decls: Vec<Declaration>,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&s)
}

fn check_name(s: &str) -> Result<()> {
    if is_identifier(s) {
        Ok(())
    } else {
        Err(Error::InvalidName(s.to_string()))
    }
}

fn check_space_names(sp: &SuperSpace) -> Result<()> {
    check_name(sp.name())?;
    sp.labels().iter().try_for_each(|l| check_name(l))
}

impl Document {
    pub fn new() -> Document {
        Document::default()
    }

    pub fn declarations(&self) -> &[Declaration] {
        &self.decls
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Declaration> {
        self.decls.iter().find(|d| d.name() == name)
    }

    pub fn algebra(&self, name: &str) -> Option<&SuperProduct> {
        match self.get(name) {
            Some(Declaration::Algebra(p)) => Some(p),
            _ => None,
        }
    }

    pub fn map(&self, name: &str) -> Option<&HomLinearMap> {
        match self.get(name) {
            Some(Declaration::Map { map, .. }) => Some(map),
            _ => None,
        }
    }

    pub fn rep(&self, name: &str) -> Option<&Representation> {
        match self.get(name) {
            Some(Declaration::Rep { rep, .. }) => Some(rep),
            _ => None,
        }
    }

    pub fn algebras(&self) -> impl Iterator<Item = &SuperProduct> {
        self.decls.iter().filter_map(|d| match d {
            Declaration::Algebra(p) => Some(p),
            _ => None,
        })
    }

    pub fn maps(&self) -> impl Iterator<Item = (&str, &str, &HomLinearMap)> {
        self.decls.iter().filter_map(|d| match d {
            Declaration::Map { name, on, map } => Some((name.as_str(), on.as_str(), map)),
            _ => None,
        })
    }

    pub fn reps(&self) -> impl Iterator<Item = (&str, &Representation)> {
        self.decls.iter().filter_map(|d| match d {
            Declaration::Rep { name, rep, .. } => Some((name.as_str(), rep)),
            _ => None,
        })
    }

    /// The space declared under `name`, directly or as an algebra's space.
    pub fn space_of(&self, name: &str) -> Option<&Arc<SuperSpace>> {
        match self.get(name)? {
            Declaration::Space(s) => Some(s),
            Declaration::Algebra(p) => Some(p.space()),
            _ => None,
        }
    }

    fn fresh(&self, name: &str) -> Result<()> {
        check_name(name)?;
        if self.get(name).is_some() {
            return Err(Error::DuplicateDefinition(name.to_string()));
        }
        Ok(())
    }

    pub fn add_space(&mut self, space: Arc<SuperSpace>) -> Result<()> {
        check_space_names(&space)?;
        self.fresh(space.name())?;
        self.decls.push(Declaration::Space(space));
        Ok(())
    }

    pub fn add_algebra(&mut self, product: SuperProduct) -> Result<()> {
        check_space_names(product.space())?;
        self.fresh(product.space().name())?;
        self.decls.push(Declaration::Algebra(product));
        Ok(())
    }

    /// Adds an endomorphism of the space declared as `on`; the map is
    /// re-attached to that space.
    pub fn add_map(&mut self, name: &str, on: &str, map: &HomLinearMap) -> Result<()> {
        self.fresh(name)?;
        let space = self.space_of(on).ok_or_else(|| Error::UnknownReference(on.to_string()))?;
        let map = map.rebased(space, space)?;
        self.decls.push(Declaration::Map {
            name: name.to_string(),
            on: on.to_string(),
            map,
        });
        Ok(())
    }

    /// Adds a representation of algebra `algebra` on the space declared as
    /// `module`.
    pub fn add_rep(&mut self, name: &str, algebra: &str, module: &str, rep: &Representation) -> Result<()> {
        self.fresh(name)?;
        let alg = self.algebra(algebra).ok_or_else(|| Error::UnknownReference(algebra.to_string()))?;
        if !alg.space().same_basis(rep.algebra().space()) || alg.constants().ne(rep.algebra().constants()) {
            return Err(Error::SpaceMismatch(format!("representation is not one of `{algebra}`")));
        }
        let space = self.space_of(module).ok_or_else(|| Error::UnknownReference(module.to_string()))?;
        let rep = Representation::new(alg, space, rep.parity(), rep.actions().to_vec())?;
        self.decls.push(Declaration::Rep {
            name: name.to_string(),
            algebra: algebra.to_string(),
            module: module.to_string(),
            rep,
        });
        Ok(())
    }

    pub fn parse(text: &str) -> std::result::Result<Document, ParseError> {
        parse_document(text)
    }

    pub fn serialize(&self) -> String {
        serialize_document(self)
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_document(self))
    }
}

// ---------------------------------------------------------------------------
// serialization

fn write_basis(out: &mut String, sp: &SuperSpace) {
    out.push_str("basis");
    for i in 0..sp.dim() {
        let _ = write!(out, " {}:{}", sp.label(i), sp.parity(i));
    }
    out.push('\n');
}

/// Canonical text: declarations in order, separated by blank lines.
pub fn serialize_document(doc: &Document) -> String {
    let mut blocks = Vec::new();
    for d in &doc.decls {
        let mut out = String::new();
        match d {
            Declaration::Space(sp) => {
                let _ = writeln!(out, "space {}", sp.name());
                write_basis(&mut out, sp);
            }
            Declaration::Algebra(p) => {
                let sp = p.space();
                let _ = writeln!(out, "algebra {}", sp.name());
                if p.arity() != 2 {
                    let _ = writeln!(out, "arity {}", p.arity());
                }
                let _ = writeln!(out, "parity {}", p.parity());
                write_basis(&mut out, sp);
                for (tuple, terms) in p.constants() {
                    let labels: Vec<&str> = tuple.iter().map(|&i| sp.label(i)).collect();
                    let mut coords = vec![Scalar::zero(); sp.dim()];
                    for (k, c) in terms {
                        coords[*k] = c.clone();
                    }
                    let _ = writeln!(out, "[{}] = {}", labels.join(","), format_combination(sp.labels(), &coords));
                }
            }
            Declaration::Map { name, on, map } => {
                let _ = writeln!(out, "map {name} parity {} on {on}", map.parity());
                let dom = map.domain();
                for i in 0..dom.dim() {
                    let img = map.image_of_basis(i);
                    if img.iter().any(|c| !c.is_zero()) {
                        let _ = writeln!(out, "{} -> {}", dom.label(i), format_combination(map.codomain().labels(), &img));
                    }
                }
            }
            Declaration::Rep {
                name,
                algebra,
                module,
                rep,
            } => {
                let _ = writeln!(out, "rep {name} parity {} algebra {algebra} module {module}", rep.parity());
                let g = rep.algebra().space();
                let v = rep.module();
                for x in 0..g.dim() {
                    let m = rep.action(x);
                    for k in 0..v.dim() {
                        let img = m.image_of_basis(k);
                        if img.iter().any(|c| !c.is_zero()) {
                            let _ = writeln!(
                                out,
                                "rho({}): {} -> {}",
                                g.label(x),
                                v.label(k),
                                format_combination(v.labels(), &img)
                            );
                        }
                    }
                }
            }
        }
        blocks.push(out);
    }
    blocks.join("\n")
}

// ---------------------------------------------------------------------------
// parsing

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn err(self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }

    fn syntax(self, expected: &str, found: &str) -> ParseError {
        self.err(ParseErrorKind::Syntax {
            expected: expected.to_string(),
            found: found.to_string(),
        })
    }
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Cursor<'a> {
        Cursor { line, text, pos: 0 }
    }

    fn here(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.text[..self.pos].chars().count() + 1,
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    /// Text of the next token, for diagnostics.
    fn found(&mut self) -> String {
        self.skip_ws();
        match self.rest().split_whitespace().next() {
            None => "end of line".to_string(),
            Some(w) => {
                let w: String = w.chars().take(24).collect();
                format!("`{w}`")
            }
        }
    }

    fn fail<T>(&mut self, expected: &str) -> PResult<T> {
        self.skip_ws();
        let found = self.found();
        Err(self.here().syntax(expected, &found))
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("`{c}`"))
        }
    }

    fn expect_end(&mut self) -> PResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.fail("end of line")
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Pos)> {
        self.skip_ws();
        let start = self.here();
        let rest = self.rest();
        let len: usize = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_alphanumeric() || c == '_') || (i == 0 && c.is_numeric()))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if len == 0 {
            return self.fail(what);
        }
        let word = &rest[..len];
        if KEYWORDS.contains(&word) {
            return self.fail(what);
        }
        self.pos += len;
        Ok((word.to_string(), start))
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        self.skip_ws();
        let rest = self.rest();
        let matched = rest
            .strip_prefix(kw)
            .is_some_and(|after| after.chars().next().is_none_or(|c| !(c.is_alphanumeric() || c == '_')));
        if matched {
            self.pos += kw.len();
            Ok(())
        } else {
            self.fail(&format!("`{kw}`"))
        }
    }

    fn parity(&mut self) -> PResult<(Parity, Pos)> {
        self.skip_ws();
        let pos = self.here();
        let p = match self.peek() {
            Some('0') => Parity::EVEN,
            Some('1') => Parity::ODD,
            _ => return self.fail("parity `0` or `1`"),
        };
        let after = self.rest()[1..].chars().next();
        if after.is_some_and(|c| !c.is_whitespace()) {
            return self.fail("parity `0` or `1`");
        }
        self.pos += 1;
        Ok((p, pos))
    }

    /// An unsigned literal `p` or `p/q`.
    fn scalar(&mut self) -> PResult<Option<Scalar>> {
        self.skip_ws();
        let start = self.pos;
        let pos = self.here();
        let digits = |s: &str| s.chars().take_while(char::is_ascii_digit).count();
        let n = digits(self.rest());
        if n == 0 {
            return Ok(None);
        }
        self.pos += n;
        if self.peek() == Some('/') {
            let m = digits(&self.rest()[1..]);
            if m == 0 {
                self.pos += 1;
                return self.fail("denominator digits");
            }
            self.pos += 1 + m;
        }
        let lit = &self.text[start..self.pos];
        lit.parse::<Scalar>()
            .map(Some)
            .map_err(|_| pos.err(ParseErrorKind::Invalid(format!("`{lit}` has a zero denominator"))))
    }

    /// `expr := [sign] term (sign term)*`, `term := scalar ['*' label] | label`;
    /// a bare scalar must be zero.
    fn expr(&mut self) -> PResult<Vec<(Scalar, String, Pos)>> {
        let mut terms = Vec::new();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            self.skip_ws();
            let pos = self.here();
            let coeff = self.scalar()?;
            let (c, label) = match coeff {
                Some(c) if self.eat('*') => (c, Some(self.ident("basis label")?.0)),
                Some(c) => {
                    if !c.is_zero() {
                        return Err(pos.err(ParseErrorKind::Invalid(format!(
                            "`{c}` is a scalar, not a vector (write `{c}*label`)"
                        ))));
                    }
                    (c, None)
                }
                None => (Scalar::one(), Some(self.ident("coefficient or basis label")?.0)),
            };
            if let Some(label) = label {
                terms.push((if negative { -c } else { c }, label, pos));
            }
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(terms);
            }
        }
    }
}

fn resolve(sp: &SuperSpace, label: &str, pos: Pos) -> PResult<usize> {
    sp.index_of(label)
        .ok_or_else(|| pos.err(ParseErrorKind::UnknownLabel(label.to_string())))
}

fn dense(sp: &SuperSpace, terms: &[(Scalar, String, Pos)]) -> PResult<Vec<(usize, Scalar, Pos)>> {
    terms
        .iter()
        .map(|(c, l, p)| Ok((resolve(sp, l, *p)?, c.clone(), *p)))
        .collect()
}

/// Parses a single linear combination such as `e1 - 1/2*e2` over `space`.
/// Positions refer to line 1 of `text`.
pub fn parse_vector(space: &Arc<SuperSpace>, text: &str) -> PResult<Vector> {
    let mut cur = Cursor::new(1, text);
    cur.skip_ws();
    let terms = cur.expr()?;
    cur.expect_end()?;
    let mut coords = vec![Scalar::zero(); space.dim()];
    for (i, c, _) in dense(space, &terms)? {
        coords[i] = &coords[i] + &c;
    }
    Ok(Vector::from_coords(space, coords).expect("dimension matches"))
}

type Basis = Vec<(String, Parity)>;

struct AlgebraBlock {
    name: String,
    start: Pos,
    arity: Option<usize>,
    parity: Option<Parity>,
    basis: Option<Basis>,
    skew: Option<Pos>,
    space: Option<Arc<SuperSpace>>,
    entries: BTreeMap<Vec<usize>, (Vec<Scalar>, Pos)>,
}

struct MapBlock {
    name: String,
    start: Pos,
    on: String,
    space: Arc<SuperSpace>,
    parity: Parity,
    images: Vec<Option<Vec<Scalar>>>,
}

struct RepBlock {
    name: String,
    start: Pos,
    algebra: String,
    module: String,
    alg: SuperProduct,
    space: Arc<SuperSpace>,
    parity: Parity,
    images: BTreeMap<(usize, usize), Vec<Scalar>>,
}

enum Block {
    Space { name: String, start: Pos, basis: Option<Basis> },
    Algebra(Box<AlgebraBlock>),
    Map(MapBlock),
    Rep(Box<RepBlock>),
}

fn basis_line(cur: &mut Cursor) -> PResult<Basis> {
    let mut basis: Basis = Vec::new();
    let mut seen = HashSet::new();
    while !cur.at_end() {
        let (label, pos) = cur.ident("basis entry `label:parity`")?;
        if !cur.eat(':') {
            return cur.fail("`:` and a parity");
        }
        if cur.peek().is_some_and(char::is_whitespace) {
            return cur.fail("parity `0` or `1`");
        }
        let (p, _) = cur.parity()?;
        if !seen.insert(label.clone()) {
            return Err(pos.err(ParseErrorKind::DuplicateDefinition(label)));
        }
        basis.push((label, p));
    }
    Ok(basis)
}

struct Parser {
    doc: Document,
    block: Option<Block>,
}

fn to_parse_error(e: Error, pos: Pos) -> ParseError {
    match e {
        Error::GradingViolation { location, detail } => pos.err(ParseErrorKind::Grading { location, detail }),
        Error::Parse(p) => p,
        other => pos.err(ParseErrorKind::Invalid(other.to_string())),
    }
}

impl Parser {
    fn header(&mut self, cur: &mut Cursor, kw: &str) -> PResult<()> {
        self.finish()?;
        let (name, pos) = cur.ident("declaration name")?;
        if self.doc.get(&name).is_some() {
            return Err(pos.err(ParseErrorKind::DuplicateDefinition(name)));
        }
        let start = Pos { line: cur.line, column: 1 };
        let block = match kw {
            "space" => Block::Space {
                name,
                start,
                basis: None,
            },
            "algebra" => Block::Algebra(Box::new(AlgebraBlock {
                name,
                start,
                arity: None,
                parity: None,
                basis: None,
                skew: None,
                space: None,
                entries: BTreeMap::new(),
            })),
            "map" => {
                cur.keyword("parity")?;
                let (parity, _) = cur.parity()?;
                cur.keyword("on")?;
                let (on, on_pos) = cur.ident("algebra or space name")?;
                let space = self
                    .doc
                    .space_of(&on)
                    .ok_or_else(|| on_pos.err(ParseErrorKind::UnknownReference(on.clone())))?
                    .clone();
                Block::Map(MapBlock {
                    name,
                    start,
                    on,
                    images: vec![None; space.dim()],
                    space,
                    parity,
                })
            }
            _ => {
                cur.keyword("parity")?;
                let (parity, parity_pos) = cur.parity()?;
                cur.keyword("algebra")?;
                let (algebra, alg_pos) = cur.ident("algebra name")?;
                cur.keyword("module")?;
                let (module, mod_pos) = cur.ident("space or algebra name")?;
                let alg = self
                    .doc
                    .algebra(&algebra)
                    .ok_or_else(|| alg_pos.err(ParseErrorKind::UnknownReference(algebra.clone())))?
                    .clone();
                if alg.arity() != 2 {
                    return Err(alg_pos.err(ParseErrorKind::Invalid(format!(
                        "`{algebra}` is ternary; representations need a binary bracket"
                    ))));
                }
                if parity != alg.parity() {
                    return Err(parity_pos.err(ParseErrorKind::Invalid(format!(
                        "representation parity must equal the bracket parity {}",
                        alg.parity()
                    ))));
                }
                let space = self
                    .doc
                    .space_of(&module)
                    .ok_or_else(|| mod_pos.err(ParseErrorKind::UnknownReference(module.clone())))?
                    .clone();
                Block::Rep(Box::new(RepBlock {
                    name,
                    start,
                    algebra,
                    module,
                    alg,
                    space,
                    parity,
                    images: BTreeMap::new(),
                }))
            }
        };
        cur.expect_end()?;
        self.block = Some(block);
        Ok(())
    }

    fn line(&mut self, cur: &mut Cursor) -> PResult<()> {
        cur.skip_ws();
        for kw in ["space", "algebra", "map", "rep"] {
            if cur.keyword(kw).is_ok() {
                return self.header(cur, kw);
            }
        }
        match self.block.as_mut() {
            None => cur.fail("`space`, `algebra`, `map` or `rep`"),
            Some(Block::Space { basis, .. }) => {
                let pos = cur.here();
                if cur.keyword("basis").is_err() {
                    return cur.fail("`basis` or a new declaration");
                }
                if basis.is_some() {
                    return Err(pos.err(ParseErrorKind::DuplicateDefinition("basis".into())));
                }
                *basis = Some(basis_line(cur)?);
                Ok(())
            }
            Some(Block::Algebra(a)) => algebra_line(a, cur),
            Some(Block::Map(m)) => map_line(m, cur),
            Some(Block::Rep(r)) => rep_line(r, cur),
        }
    }

    fn finish(&mut self) -> PResult<()> {
        let Some(block) = self.block.take() else {
            return Ok(());
        };
        match block {
            Block::Space { name, start, basis } => {
                let basis = basis.ok_or_else(|| start.syntax("a `basis` line", "end of declaration"))?;
                let sp = SuperSpace::new(name, basis).map_err(|e| to_parse_error(e, start))?;
                self.doc.add_space(Arc::new(sp)).map_err(|e| to_parse_error(e, start))
            }
            Block::Algebra(a) => {
                let a = *a;
                let space = match a.space {
                    Some(s) => s,
                    None => {
                        let basis = a.basis.ok_or_else(|| a.start.syntax("a `basis` line", "end of declaration"))?;
                        Arc::new(SuperSpace::new(a.name.clone(), basis).map_err(|e| to_parse_error(e, a.start))?)
                    }
                };
                let arity = a.arity.unwrap_or(2);
                let parity = a.parity.unwrap_or(Parity::EVEN);
                let mut entries = a.entries;
                if a.skew.is_some() {
                    complete_skew(&space, parity, &mut entries)?;
                }
                let constants = entries.into_iter().flat_map(|(t, (v, _))| {
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(move |(k, c)| (t.clone(), k, c))
                        .collect::<Vec<_>>()
                });
                let p = SuperProduct::new(&space, arity, parity, constants).map_err(|e| to_parse_error(e, a.start))?;
                self.doc.add_algebra(p).map_err(|e| to_parse_error(e, a.start))
            }
            Block::Map(m) => {
                let d = m.space.dim();
                let images = m.images.into_iter().map(|i| i.unwrap_or_else(|| vec![Scalar::zero(); d])).collect();
                let pos = m.start;
                let map = HomLinearMap::from_images(&m.space, &m.space, m.parity, images).map_err(|e| to_parse_error(e, pos))?;
                self.doc.add_map(&m.name, &m.on, &map).map_err(|e| to_parse_error(e, pos))
            }
            Block::Rep(r) => {
                let r = *r;
                let n = r.space.dim();
                let action = (0..r.alg.dim())
                    .map(|x| {
                        let images = (0..n)
                            .map(|k| r.images.get(&(x, k)).cloned().unwrap_or_else(|| vec![Scalar::zero(); n]))
                            .collect();
                        HomLinearMap::from_images(&r.space, &r.space, r.alg.p(x) + r.parity, images)
                    })
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| to_parse_error(e, r.start))?;
                let rep = Representation::new(&r.alg, &r.space, r.parity, action).map_err(|e| to_parse_error(e, r.start))?;
                self.doc
                    .add_rep(&r.name, &r.algebra, &r.module, &rep)
                    .map_err(|e| to_parse_error(e, r.start))
            }
        }
    }
}

fn algebra_line(a: &mut AlgebraBlock, cur: &mut Cursor) -> PResult<()> {
    let pos = cur.here();
    let settings_open = a.space.is_none();
    if cur.peek() == Some('[') {
        return product_line(a, cur);
    }
    let dup = |what: &str| Err(pos.err(ParseErrorKind::DuplicateDefinition(what.to_string())));
    if !settings_open {
        return cur.fail("a product line `[a,b] = ...`");
    }
    if cur.keyword("arity").is_ok() {
        if a.arity.is_some() {
            return dup("arity");
        }
        cur.skip_ws();
        let n = match cur.rest().split_whitespace().next() {
            Some("2") => 2,
            Some("3") => 3,
            _ => return cur.fail("arity `2` or `3`"),
        };
        cur.pos += 1;
        a.arity = Some(n);
    } else if cur.keyword("parity").is_ok() {
        if a.parity.is_some() {
            return dup("parity");
        }
        a.parity = Some(cur.parity()?.0);
    } else if cur.keyword("basis").is_ok() {
        if a.basis.is_some() {
            return dup("basis");
        }
        a.basis = Some(basis_line(cur)?);
    } else if cur.keyword("skew_complete").is_ok() {
        if a.skew.is_some() {
            return dup("skew_complete");
        }
        a.skew = Some(pos);
    } else {
        return cur.fail("`arity`, `parity`, `basis`, `skew_complete` or a product line");
    }
    cur.expect_end()
}

fn product_line(a: &mut AlgebraBlock, cur: &mut Cursor) -> PResult<()> {
    let line_pos = cur.here();
    if a.space.is_none() {
        let basis = a
            .basis
            .take()
            .ok_or_else(|| line_pos.syntax("a `basis` line before products", "`[`"))?;
        let sp = SuperSpace::new(a.name.clone(), basis).map_err(|e| to_parse_error(e, line_pos))?;
        a.space = Some(Arc::new(sp));
        let arity = a.arity.unwrap_or(2);
        if let Some(p) = a.skew {
            if arity != 2 {
                return Err(p.err(ParseErrorKind::Invalid("`skew_complete` applies to binary products only".into())));
            }
        }
    }
    let space = Arc::clone(a.space.as_ref().expect("space set above"));
    let arity = a.arity.unwrap_or(2);
    let parity = a.parity.unwrap_or(Parity::EVEN);
    cur.expect('[')?;
    let mut tuple = Vec::new();
    let mut labels = Vec::new();
    loop {
        let (l, p) = cur.ident("basis label")?;
        tuple.push(resolve(&space, &l, p)?);
        labels.push(l);
        if cur.eat(']') {
            break;
        }
        if !cur.eat(',') {
            return cur.fail("`,` or `]`");
        }
    }
    if tuple.len() != arity {
        return Err(line_pos.err(ParseErrorKind::Invalid(format!(
            "product of {} arguments in an arity-{arity} algebra",
            tuple.len()
        ))));
    }
    cur.expect('=')?;
    let terms = dense(&space, &cur.expr()?)?;
    cur.expect_end()?;
    let key = format!("[{}]", labels.join(","));
    if a.entries.contains_key(&tuple) {
        return Err(line_pos.err(ParseErrorKind::DuplicateDefinition(key)));
    }
    let mut v = vec![Scalar::zero(); space.dim()];
    for (k, c, p) in terms {
        let want: Parity = tuple.iter().map(|&i| space.parity(i)).sum::<Parity>() + parity;
        if space.parity(k) != want && !c.is_zero() {
            return Err(to_parse_error(grading_error(&space, &tuple, k, parity), p));
        }
        v[k] += &c;
    }
    a.entries.insert(tuple, (v, line_pos));
    Ok(())
}

/// Fills `[y,x] = −(−1)^{(x̄+b)(ȳ+b)} [x,y]` for every explicit entry.
fn complete_skew(space: &SuperSpace, b: Parity, entries: &mut BTreeMap<Vec<usize>, (Vec<Scalar>, Pos)>) -> PResult<()> {
    let explicit: Vec<(Vec<usize>, Vec<Scalar>, Pos)> =
        entries.iter().map(|(t, (v, p))| (t.clone(), v.clone(), *p)).collect();
    for (t, v, pos) in explicit {
        let (x, y) = (t[0], t[1]);
        let s = -sign_pow(space.parity(x) + b, space.parity(y) + b);
        let mirrored: Vec<Scalar> = v.iter().map(|c| &s * c).collect();
        let key = vec![y, x];
        let label = format!("[{},{}]", space.label(y), space.label(x));
        match entries.get(&key) {
            Some((existing, other)) => {
                if *existing != mirrored {
                    let at = if (other.line, other.column) > (pos.line, pos.column) { *other } else { pos };
                    return Err(at.err(ParseErrorKind::SkewConflict(label)));
                }
            }
            None => {
                entries.insert(key, (mirrored, pos));
            }
        }
    }
    Ok(())
}

fn map_line(m: &mut MapBlock, cur: &mut Cursor) -> PResult<()> {
    let (src, src_pos) = cur.ident("basis label or a new declaration")?;
    let i = resolve(&m.space, &src, src_pos)?;
    if !cur.eat_str("->") {
        return cur.fail("`->`");
    }
    let terms = dense(&m.space, &cur.expr()?)?;
    cur.expect_end()?;
    if m.images[i].is_some() {
        return Err(src_pos.err(ParseErrorKind::DuplicateDefinition(src)));
    }
    let mut img = vec![Scalar::zero(); m.space.dim()];
    for (k, c, p) in terms {
        if !c.is_zero() && m.space.parity(k) != m.space.parity(i) + m.parity {
            return Err(p.err(ParseErrorKind::Grading {
                location: format!("{src} -> {}", m.space.label(k)),
                detail: format!(
                    "a map of parity {} sends a parity-{} vector to parity {}, not {}",
                    m.parity,
                    m.space.parity(i),
                    m.space.parity(i) + m.parity,
                    m.space.parity(k)
                ),
            }));
        }
        img[k] += &c;
    }
    m.images[i] = Some(img);
    Ok(())
}

fn rep_line(r: &mut RepBlock, cur: &mut Cursor) -> PResult<()> {
    let start = cur.here();
    if !cur.eat_str("rho") || !cur.eat('(') {
        return cur.fail("`rho(label): label -> ...` or a new declaration");
    }
    let (x, x_pos) = cur.ident("algebra basis label")?;
    let xi = resolve(r.alg.space(), &x, x_pos)?;
    cur.expect(')')?;
    cur.expect(':')?;
    let (v, v_pos) = cur.ident("module basis label")?;
    let vi = resolve(&r.space, &v, v_pos)?;
    if !cur.eat_str("->") {
        return cur.fail("`->`");
    }
    let terms = dense(&r.space, &cur.expr()?)?;
    cur.expect_end()?;
    if r.images.contains_key(&(xi, vi)) {
        return Err(start.err(ParseErrorKind::DuplicateDefinition(format!("rho({x}): {v}"))));
    }
    let want = r.alg.p(xi) + r.parity + r.space.parity(vi);
    let mut img = vec![Scalar::zero(); r.space.dim()];
    for (k, c, p) in terms {
        if !c.is_zero() && r.space.parity(k) != want {
            return Err(p.err(ParseErrorKind::Grading {
                location: format!("rho({x}): {v} -> {}", r.space.label(k)),
                detail: format!("expected a parity-{want} image, `{}` has parity {}", r.space.label(k), r.space.parity(k)),
            }));
        }
        img[k] += &c;
    }
    r.images.insert((xi, vi), img);
    Ok(())
}

/// Parses a whole document. `#` starts a comment that runs to the end of
/// the line.
pub fn parse_document(text: &str) -> PResult<Document> {
    let mut parser = Parser {
        doc: Document::new(),
        block: None,
    };
    for (n, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(n + 1, content);
        parser.line(&mut cur)?;
    }
    parser.finish()?;
    Ok(parser.doc)
}
