//! Command-line front end: `verify`, `construct`, `search` and `catalog`.
//!
//! Exit codes: 0 when every requested check passed (or the construction
//! succeeded), 1 when a check or precondition failed, 2 for usage, parse and
//! budget errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::catalog::{catalog_get, catalog_list, catalog_verify, render_verify};
use crate::constructions::{
    adjoint_rep, commutator_bracket, dual_rep, left_sym_to_right_sym, product_from_rb, semidirect, Representation,
};
use crate::error::Error;
use crate::format::{parse_vector, Document, ParseError};
use crate::identities::{
    check_derivation, check_product, check_representation, check_rota_baxter, check_weighted_rota_baxter, IdentityKind,
    Mode, Side,
};
use crate::map::HomLinearMap;
use crate::product::SuperProduct;
use crate::report::CheckReport;
use crate::scalar::{Parity, Scalar};
use crate::search::{derivation_space, rb_enumerate, SearchConfig};
use crate::ternary::{check_ternary_rb, reduce_to_lie, ternary_rb_bracket};

#[derive(Parser, Debug)]
#[command(name = "superlie", version, about = "Check and build superalgebras with parity-carrying products")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities on an algebra from a file.
    Verify(VerifyArgs),
    /// Build a new algebra or representation from a file.
    Construct(ConstructArgs),
    /// Solve for derivations or enumerate Rota-Baxter operators.
    Search(SearchArgs),
    /// Built-in worked examples.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    /// Identity to check; may be repeated.
    #[arg(long = "check", value_name = "NAME", required_unless_present = "all")]
    checks: Vec<String>,
    /// Every identity that applies to the algebra and its declared maps and
    /// representations.
    #[arg(long, conflicts_with = "checks")]
    all: bool,
    /// Skip precondition checks.
    #[arg(long)]
    raw: bool,
    /// Algebra to check (default: the first one in the file).
    #[arg(long)]
    algebra: Option<String>,
    /// Operator for Rota-Baxter and derivation checks; a catalog entry name
    /// is accepted too.
    #[arg(long)]
    map: Option<String>,
    #[arg(long)]
    rep: Option<String>,
    /// Weight for `weighted_rota_baxter`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ConstructKind {
    Commutator,
    /// `x ▷ y = [R x, y]` from a left Rota-Baxter operator.
    PreLie,
    /// `x ◁ y = [x, R y]` with `--rb`, otherwise the ◁ product of a
    /// left-symmetric algebra.
    RightSym,
    Adjoint,
    Semidirect,
    Dual,
    Reduce,
    TernaryRbBracket,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    file: PathBuf,
    #[arg(long)]
    algebra: Option<String>,
    /// Rota-Baxter operator: a map in the file or a catalog entry.
    #[arg(long)]
    rb: Option<String>,
    #[arg(long)]
    rep: Option<String>,
    /// Element frozen by `reduce`, e.g. `e1` or `e1 + 1/2*e3`.
    #[arg(long = "a", allow_hyphen_values = true)]
    element: Option<String>,
    /// Name of the constructed object.
    #[arg(long)]
    name: Option<String>,
    /// Write the result here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    raw: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SearchKind {
    Derivations,
    Rb,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(value_enum)]
    kind: SearchKind,
    file: PathBuf,
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    parity: u8,
    /// L or R; ignored for ternary Rota-Baxter searches.
    #[arg(long, default_value = "L")]
    side: String,
    /// Comma-separated coefficients, e.g. `-1,0,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    raw: bool,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
    Show { name: String },
    Verify { name: Option<String> },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Parse(PathBuf, ParseError),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

/// Report under construction.
struct Run {
    command: &'static str,
    /// Label for a precondition failure that aborts the command.
    subject: String,
    inputs: Map<String, Value>,
    checks: Vec<Value>,
    errata: Vec<Value>,
    extra: Map<String, Value>,
    text: String,
    failed: bool,
}

impl Run {
    fn new(command: &'static str) -> Run {
        Run {
            command,
            subject: command.to_string(),
            inputs: Map::new(),
            checks: Vec::new(),
            errata: Vec::new(),
            extra: Map::new(),
            text: String::new(),
            failed: false,
        }
    }

    fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    fn line(&mut self, s: &str) {
        self.text.push_str(s);
        self.text.push('\n');
    }

    fn check(&mut self, report: &CheckReport, operator: Option<&str>) {
        let mut v = report.to_json();
        if let Some(op) = operator {
            v["operator"] = json!(op);
        }
        self.checks.push(v);
        let shown = match operator {
            Some(op) => format!("{report}").replacen(&report.identity, &format!("{}({op})", report.identity), 1),
            None => report.to_string(),
        };
        self.line(&shown);
        self.failed |= !report.passed();
    }

    fn precondition_failed(&mut self, requested: &str, operator: Option<&str>, pre: &CheckReport) {
        let mut v = pre.to_json();
        v["name"] = json!(requested);
        v["precondition"] = json!(pre.identity);
        if let Some(op) = operator {
            v["operator"] = json!(op);
        }
        self.checks.push(v);
        let label = match operator {
            Some(op) => format!("{requested}({op})"),
            None => requested.to_string(),
        };
        self.line(&format!("{label}: FAIL (precondition {} does not hold)", pre.identity));
        for c in &pre.counterexamples {
            self.line(&format!("  {} ({}): lhs = {}, rhs = {}", c.clause, c.labels.join(","), c.lhs, c.rhs));
        }
        self.failed = true;
    }

    /// Records a check result, turning a failed precondition into a failed
    /// check.
    fn record(&mut self, requested: &str, operator: Option<&str>, result: crate::error::Result<CheckReport>) -> Outcome {
        match result {
            Ok(r) => {
                self.check(&r, operator);
                Ok(())
            }
            Err(Error::PreconditionFailed(pre)) => {
                self.precondition_failed(requested, operator, &pre);
                Ok(())
            }
            Err(e) => Err(e.into()),
        }
    }

    fn to_json(&self) -> Value {
        let mut v = Map::new();
        v.insert("command".into(), json!(self.command));
        v.insert("inputs".into(), Value::Object(self.inputs.clone()));
        v.insert("checks".into(), Value::Array(self.checks.clone()));
        v.insert("errata".into(), Value::Array(self.errata.clone()));
        for (k, x) in &self.extra {
            v.insert(k.clone(), x.clone());
        }
        Value::Object(v)
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn cli_main<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let mut run = Run::new(match &cli.command {
        Command::Verify(_) => "verify",
        Command::Construct(_) => "construct",
        Command::Search(_) => "search",
        Command::Catalog(_) => "catalog",
    });
    let result = match &cli.command {
        Command::Verify(a) => verify(a, &mut run),
        Command::Construct(a) => construct(a, &mut run),
        Command::Search(a) => search(a, &mut run),
        Command::Catalog(c) => catalog(c, &mut run),
    };
    let code = match result {
        Ok(()) => i32::from(run.failed),
        Err(Failure::Lib(Error::PreconditionFailed(pre))) => {
            let subject = run.subject.clone();
            run.precondition_failed(&subject, None, &pre);
            1
        }
        Err(f) => {
            let (message, position) = match f {
                Failure::Usage(m) => (m, None),
                Failure::Lib(Error::Parse(p)) => (p.to_string(), Some((p.line, p.column))),
                Failure::Lib(e) => (e.to_string(), None),
                Failure::Parse(path, p) => (format!("{}: {p}", path.display()), Some((p.line, p.column))),
            };
            let _ = writeln!(err, "error: {message}");
            if cli.json {
                let mut e = json!({ "message": message });
                if let Some((line, column)) = position {
                    e["line"] = json!(line);
                    e["column"] = json!(column);
                }
                run.extra.insert("error".into(), e);
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&run.to_json()).expect("json"));
            }
            return 2;
        }
    };
    if cli.json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&run.to_json()).expect("json"));
    } else {
        let _ = write!(out, "{}", run.text);
    }
    code
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| Failure::Parse(path.to_path_buf(), e))
}

fn mode(raw: bool) -> Mode {
    if raw {
        Mode::Raw
    } else {
        Mode::Strict
    }
}

fn select_algebra<'a>(doc: &'a Document, name: Option<&str>) -> Result<&'a SuperProduct, Failure> {
    match name {
        Some(n) => doc
            .algebra(n)
            .ok_or_else(|| Failure::Usage(format!("no algebra named `{n}` in the file"))),
        None => doc
            .algebras()
            .next()
            .ok_or_else(|| Failure::Usage("the file declares no algebra".into())),
    }
}

/// A map from the file, or the single map of a catalog entry re-attached to
/// `alg`. Without a name, the only map declared on `alg`.
fn resolve_map(doc: &Document, name: Option<&str>, alg: &SuperProduct) -> Result<(String, HomLinearMap), Failure> {
    let space = alg.space();
    match name {
        Some(n) => {
            if let Some(m) = doc.map(n) {
                return Ok((n.to_string(), m.clone()));
            }
            let entry = catalog_get(n).map_err(|_| Failure::Usage(format!("no map named `{n}` in the file or the catalog")))?;
            let maps: Vec<_> = entry.document.maps().collect();
            match maps.as_slice() {
                [(_, _, m)] => Ok((n.to_string(), m.rebased(space, space)?)),
                _ => Err(Failure::Usage(format!("catalog entry `{n}` does not hold exactly one map"))),
            }
        }
        None => {
            let maps: Vec<_> = doc.maps().filter(|(_, on, _)| *on == space.name()).collect();
            match maps.as_slice() {
                [(n, _, m)] => Ok((n.to_string(), (*m).clone())),
                [] => Err(Failure::Usage(format!("no map is declared on `{}`", space.name()))),
                _ => Err(Failure::Usage("several maps are declared; choose one with --map".into())),
            }
        }
    }
}

fn reps_of<'a>(doc: &'a Document, alg: &SuperProduct) -> Vec<(&'a str, &'a Representation)> {
    doc.reps().filter(|(_, r)| r.algebra().space().name() == alg.space().name()).collect()
}

fn resolve_rep<'a>(doc: &'a Document, name: Option<&str>, alg: &SuperProduct) -> Result<(String, &'a Representation), Failure> {
    match name {
        Some(n) => doc
            .rep(n)
            .map(|r| (n.to_string(), r))
            .ok_or_else(|| Failure::Usage(format!("no representation named `{n}` in the file"))),
        None => match reps_of(doc, alg).as_slice() {
            [(n, r)] => Ok((n.to_string(), *r)),
            [] => Err(Failure::Usage(format!("no representation of `{}` is declared", alg.space().name()))),
            _ => Err(Failure::Usage("several representations are declared; choose one with --rep".into())),
        },
    }
}

fn parse_scalar(s: &str, what: &str) -> Result<Scalar, Failure> {
    s.trim().parse().map_err(|_| Failure::Usage(format!("`{s}` is not a valid {what}")))
}

fn parse_parity(p: u8) -> Result<Parity, Failure> {
    Parity::new(p).ok_or_else(|| Failure::Usage(format!("parity must be 0 or 1, not {p}")))
}

fn parse_side(s: &str) -> Result<Side, Failure> {
    s.parse().map_err(Failure::Usage)
}

fn verify(a: &VerifyArgs, run: &mut Run) -> Outcome {
    run.input("file", a.file.display().to_string());
    let doc = load(&a.file)?;
    let m = mode(a.raw);
    run.input("mode", if a.raw { "raw" } else { "strict" });
    if a.all && a.algebra.is_none() && doc.algebras().next().is_none() {
        run.line("no algebras declared");
        return Ok(());
    }
    let alg = select_algebra(&doc, a.algebra.as_deref())?;
    run.input("algebra", alg.space().name());
    if a.all {
        for kind in IdentityKind::ALL.iter().filter(|k| k.is_product_only() && k.arity() == alg.arity()) {
            run.check(&check_product(*kind, alg)?, None);
        }
        for (name, on, map) in doc.maps() {
            if on != alg.space().name() {
                continue;
            }
            if alg.arity() == 3 {
                run.record(IdentityKind::TernaryRotaBaxter.name(), Some(name), check_ternary_rb(alg, map, m))?;
                continue;
            }
            for side in [Side::Left, Side::Right] {
                let kind = if side == Side::Left { IdentityKind::LeftRotaBaxter } else { IdentityKind::RightRotaBaxter };
                run.record(kind.name(), Some(name), check_rota_baxter(alg, map, side, m))?;
            }
            for side in [Side::Left, Side::Right] {
                run.check(&check_derivation(alg, map, side)?, Some(name));
            }
        }
        for (name, rep) in reps_of(&doc, alg) {
            run.check(&check_representation(alg, rep)?, Some(name));
        }
        return Ok(());
    }
    for name in &a.checks {
        let kind: IdentityKind = name.parse().map_err(Failure::Usage)?;
        use IdentityKind::*;
        match kind {
            LeftRotaBaxter | RightRotaBaxter => {
                let (n, r) = resolve_map(&doc, a.map.as_deref(), alg)?;
                let side = if kind == LeftRotaBaxter { Side::Left } else { Side::Right };
                run.record(kind.name(), Some(&n), check_rota_baxter(alg, &r, side, m))?;
            }
            WeightedRotaBaxter => {
                let (n, r) = resolve_map(&doc, a.map.as_deref(), alg)?;
                let lambda = a
                    .lambda
                    .as_deref()
                    .ok_or_else(|| Failure::Usage("weighted_rota_baxter needs --lambda".into()))?;
                let lambda = parse_scalar(lambda, "weight")?;
                run.input("lambda", lambda.to_string());
                run.record(kind.name(), Some(&n), check_weighted_rota_baxter(alg, &r, &lambda, m))?;
            }
            TernaryRotaBaxter => {
                let (n, r) = resolve_map(&doc, a.map.as_deref(), alg)?;
                run.record(kind.name(), Some(&n), check_ternary_rb(alg, &r, m))?;
            }
            LeftDerivation | RightDerivation => {
                let (n, d) = resolve_map(&doc, a.map.as_deref(), alg)?;
                let side = if kind == LeftDerivation { Side::Left } else { Side::Right };
                run.check(&check_derivation(alg, &d, side)?, Some(&n));
            }
            Representation => {
                let (n, rep) = resolve_rep(&doc, a.rep.as_deref(), alg)?;
                run.check(&check_representation(alg, rep)?, Some(&n));
            }
            _ => run.check(&check_product(kind, alg)?, None),
        }
    }
    Ok(())
}

fn construct(a: &ConstructArgs, run: &mut Run) -> Outcome {
    run.input("file", a.file.display().to_string());
    let kind = a.kind.to_possible_value().expect("not skipped");
    run.subject = kind.get_name().to_string();
    run.input("construction", kind.get_name());
    let doc = load(&a.file)?;
    let m = mode(a.raw);
    run.input("mode", if a.raw { "raw" } else { "strict" });
    let alg = select_algebra(&doc, a.algebra.as_deref())?;
    let g = alg.space().name().to_string();
    run.input("algebra", g.as_str());
    let named = |p: SuperProduct, default: String| p.renamed(a.name.as_deref().unwrap_or(&default));
    let mut result = Document::new();
    match a.kind {
        ConstructKind::Commutator => {
            result.add_algebra(named(commutator_bracket(alg)?, format!("{g}_commutator")))?;
        }
        ConstructKind::PreLie => {
            let (n, r) = resolve_map(&doc, a.rb.as_deref(), alg)?;
            run.input("rb", n.as_str());
            result.add_algebra(named(product_from_rb(alg, &r, Side::Left, m)?, format!("{g}_pre_lie")))?;
        }
        ConstructKind::RightSym => {
            let p = match &a.rb {
                Some(rb) => {
                    let (n, r) = resolve_map(&doc, Some(rb), alg)?;
                    run.input("rb", n.as_str());
                    product_from_rb(alg, &r, Side::Right, m)?
                }
                None => left_sym_to_right_sym(alg, m)?,
            };
            result.add_algebra(named(p, format!("{g}_right_sym")))?;
        }
        ConstructKind::Adjoint => {
            let rep = adjoint_rep(alg, m)?;
            result.add_algebra(alg.clone())?;
            result.add_rep(a.name.as_deref().unwrap_or("ad"), &g, &g, &rep)?;
        }
        ConstructKind::Semidirect => {
            let (n, rep) = resolve_rep(&doc, a.rep.as_deref(), alg)?;
            run.input("rep", n.as_str());
            let p = semidirect(alg, rep)?;
            let default = p.space().name().to_string();
            result.add_algebra(named(p, default))?;
        }
        ConstructKind::Dual => {
            let (n, rep) = resolve_rep(&doc, a.rep.as_deref(), alg)?;
            run.input("rep", n.as_str());
            let dual = dual_rep(rep, m)?;
            result.add_algebra(alg.clone())?;
            result.add_space(dual.module().clone())?;
            let name = a.name.clone().unwrap_or_else(|| format!("{n}_dual"));
            result.add_rep(&name, &g, dual.module().name(), &dual)?;
        }
        ConstructKind::Reduce => {
            let text = a
                .element
                .as_deref()
                .ok_or_else(|| Failure::Usage("reduce needs --a".into()))?;
            run.input("a", text);
            let v = parse_vector(alg.space(), text).map_err(|e| Failure::Usage(format!("--a: {e}")))?;
            let (p, report) = reduce_to_lie(alg, &v, m)?;
            run.check(&report, None);
            result.add_algebra(named(p, format!("{g}_reduced")))?;
        }
        ConstructKind::TernaryRbBracket => {
            let (n, r) = resolve_map(&doc, a.rb.as_deref(), alg)?;
            run.input("rb", n.as_str());
            let (p, report) = ternary_rb_bracket(alg, &r, m)?;
            run.check(&report, Some(&n));
            result.add_algebra(named(p, format!("{g}_{n}")))?;
        }
    }
    emit(run, &result, a.out.as_deref())
}

/// Writes `doc` to `out`, or prints it after the check reports turned into
/// comments.
fn emit(run: &mut Run, doc: &Document, out: Option<&Path>) -> Outcome {
    let text = doc.serialize();
    run.extra.insert("document".into(), json!(text));
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            run.extra.insert("output".into(), json!(path.display().to_string()));
            run.line(&format!("wrote {}", path.display()));
        }
        None => {
            let comments: String = run.text.lines().map(|l| format!("# {l}\n")).collect();
            run.text = comments + &text;
        }
    }
    Ok(())
}

fn search(a: &SearchArgs, run: &mut Run) -> Outcome {
    run.input("file", a.file.display().to_string());
    let doc = load(&a.file)?;
    let m = mode(a.raw);
    let parity = parse_parity(a.parity)?;
    let side = parse_side(&a.side)?;
    let alg = select_algebra(&doc, a.algebra.as_deref())?;
    let g = alg.space().name().to_string();
    run.input("algebra", g.as_str());
    run.input("parity", a.parity);
    run.input("side", if side == Side::Left { "L" } else { "R" });
    run.input("mode", if a.raw { "raw" } else { "strict" });
    let mut result = Document::new();
    result.add_algebra(alg.clone())?;
    match a.kind {
        SearchKind::Derivations => {
            run.input("search", "derivations");
            run.subject = "derivations".into();
            let basis = derivation_space(alg, side, parity, m)?;
            run.extra.insert("dimension".into(), json!(basis.len()));
            run.line(&format!("{} basis derivations", basis.len()));
            for (k, d) in basis.iter().enumerate() {
                result.add_map(&format!("D{}", k + 1), &g, d)?;
            }
        }
        SearchKind::Rb => {
            run.input("search", "rb");
            run.subject = "rb".into();
            let mut cfg = SearchConfig::new(alg, parity, side).mode(m);
            if let Some(grid) = &a.grid {
                let coeffs = grid
                    .split(',')
                    .map(|c| parse_scalar(c, "coefficient"))
                    .collect::<Result<Vec<_>, _>>()?;
                cfg = cfg.grid(coeffs);
            }
            if let Some(b) = a.budget {
                cfg = cfg.budget(b);
            }
            run.input("grid", cfg.grid.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            run.input("budget", cfg.max_candidates);
            let found = rb_enumerate(&cfg)?;
            run.extra.insert("candidates".into(), json!(cfg.candidate_count().to_string()));
            run.extra.insert("count".into(), json!(found.len()));
            run.line(&format!("{} operators among {} candidates", found.len(), cfg.candidate_count()));
            for (k, r) in found.iter().enumerate() {
                result.add_map(&format!("R{}", k + 1), &g, r)?;
            }
        }
    }
    emit(run, &result, None)
}

fn catalog(c: &CatalogCommand, run: &mut Run) -> Outcome {
    match c {
        CatalogCommand::List => {
            run.input("action", "list");
            let mut entries = Vec::new();
            for n in catalog_list() {
                let e = catalog_get(n)?;
                run.line(&format!("{:<22} {}", e.name, e.description));
                entries.push(json!({ "name": e.name, "description": e.description }));
            }
            run.extra.insert("entries".into(), Value::Array(entries));
        }
        CatalogCommand::Show { name } => {
            run.input("action", "show");
            run.input("name", name.as_str());
            let e = catalog_get(name)?;
            run.line(&format!("# {}: {}", e.name, e.description));
            let mut claims = Vec::new();
            for claim in &e.claims {
                let v = if claim.expected { "PASS" } else { "FAIL" };
                let note = claim.errata.map(|id| format!(" [errata {id}]")).unwrap_or_default();
                run.line(&format!("# claim {}: {v} ({}){note}", claim.label(), claim.source));
                claims.push(json!({
                    "name": claim.label(),
                    "expected": claim.expected,
                    "source": claim.source,
                    "errata": claim.errata,
                }));
            }
            for er in &e.errata {
                run.line(&format!("# errata {}: {}", er.id, er.text));
                run.errata.push(json!({ "id": er.id, "entry": e.name, "text": er.text }));
            }
            let text = e.document.serialize();
            run.text.push_str(&text);
            run.extra.insert("claims".into(), Value::Array(claims));
            run.extra.insert("document".into(), json!(text));
        }
        CatalogCommand::Verify { name } => {
            run.input("action", "verify");
            if let Some(n) = name {
                run.input("name", n.as_str());
            }
            let outcomes = catalog_verify(name.as_deref())?;
            let mut seen = Vec::new();
            for o in &outcomes {
                let report = o.report.to_json();
                run.checks.push(json!({
                    "name": o.claim,
                    "entry": o.entry,
                    "passed": o.verdict,
                    "expected": o.expected,
                    "matches_expected": o.matches_expected(),
                    "errata": o.errata,
                    "counterexamples": report["counterexamples"],
                }));
                run.failed |= !o.matches_expected();
                if !seen.contains(&o.entry) {
                    seen.push(o.entry);
                    for er in catalog_get(o.entry)?.errata {
                        run.errata.push(json!({ "id": er.id, "entry": o.entry, "text": er.text }));
                    }
                }
            }
            run.text = render_verify(&outcomes);
        }
    }
    Ok(())
}
