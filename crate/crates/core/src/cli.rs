//! Command-line front end: input documents, JSON reports and exit codes.
//!
//! Exit code 0 means the property holds or the computation succeeded, 1
//! means the property fails (the report carries a certificate), 2 means an
//! input or budget error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::budget::{Budget, BUDGET_ENV};
use crate::canonical::{
    a_invariant_direct, a_invariant_formula, antiblocker_check, canonical_generators, canonical_presentation,
    default_b_max, is_gorenstein, perfect_presentation,
};
use crate::combinatorics::{Clutter, Graph};
use crate::error::{Error, Result};
use crate::graph_algebra::{equivalence_suite, tdi_check};
use crate::polyhedra::{hilbert_basis, polytope_vertices, Cone, ConeGens};
use crate::rounding::{
    closure_cone, default_window, ehrhart_equality, irp_geq, irp_leq, irp_witness_search, rees_cone, Direction,
    IrpVerdict,
};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "irp", version, about = "Integer rounding, normality and canonical modules of clutters and graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file: a JSON document or a "u v" edge list. "-" reads stdin.
    pub input: Option<String>,
    /// Read the JSON document from this path instead ("-" for stdin).
    #[arg(long, value_name = "SRC")]
    pub json: Option<String>,
    /// Write the report atomically to this path instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Cap on enumeration steps.
    #[arg(long, env = BUDGET_ENV)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConeKind {
    /// `(w,1)` over the closure generators.
    Closure,
    /// `(v_j,1)` over the edges.
    Edge,
    /// `(e_i,0)` and `(v_j,1)`.
    Rees,
    /// `(0,1)`, `(e_i,1)` and `(v_j,1)`.
    Extrees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AInvariantMethod {
    Formula,
    Direct,
    Perfect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    #[value(alias = "<=")]
    Leq,
    #[value(alias = ">=")]
    Geq,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Leq => Direction::Leq,
            DirectionArg::Geq => Direction::Geq,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the <= rounding property through the closure cone.
    IrpLeq(Common),
    /// Decide the >= rounding property through the Rees cone.
    IrpGeq(Common),
    /// Search a window of right-hand sides for a rounding violation.
    IrpWitness {
        #[arg(long, value_enum, default_value = "leq")]
        direction: DirectionArg,
        /// Search {0..window}^n; defaults to twice the largest edge size.
        #[arg(long)]
        window: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Check that dilations of the edge polytope are sums of edges.
    EhrhartEq {
        /// Defaults to n + 1.
        #[arg(long)]
        bmax: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Vertices of {x >= 0 : xA <= 1}.
    Vertices(Common),
    /// Hilbert basis of one of the attached cones.
    HilbertBasis {
        #[arg(long, value_enum, default_value = "closure")]
        cone: ConeKind,
        #[command(flatten)]
        common: Common,
    },
    /// Minimal generators of the canonical module.
    Canonical {
        #[arg(long)]
        bmax: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// The a-invariant of the closure subring.
    AInvariant {
        #[arg(long, value_enum, default_value = "formula")]
        method: AInvariantMethod,
        #[command(flatten)]
        common: Common,
    },
    /// Whether the canonical module is principal.
    Gorenstein {
        #[arg(long)]
        bmax: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Check the antiblocking duality for the closure polytope.
    Antiblocker(Common),
    /// Run the six equivalent conditions on a connected graph.
    Equivalence(Common),
    /// Compare LP and integer optima on the clique matrix of a perfect graph.
    Tdi {
        /// Comma-separated integer right-hand side.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha: Vec<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Connectivity, bipartiteness, unmixedness and perfection.
    Predicates(Common),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::IrpLeq(_) => "irp-leq",
            Command::IrpGeq(_) => "irp-geq",
            Command::IrpWitness { .. } => "irp-witness",
            Command::EhrhartEq { .. } => "ehrhart-eq",
            Command::Vertices(_) => "vertices",
            Command::HilbertBasis { .. } => "hilbert-basis",
            Command::Canonical { .. } => "canonical",
            Command::AInvariant { .. } => "a-invariant",
            Command::Gorenstein { .. } => "gorenstein",
            Command::Antiblocker(_) => "antiblocker",
            Command::Equivalence(_) => "equivalence",
            Command::Tdi { .. } => "tdi",
            Command::Predicates(_) => "predicates",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::IrpLeq(c)
            | Command::IrpGeq(c)
            | Command::Vertices(c)
            | Command::Antiblocker(c)
            | Command::Equivalence(c)
            | Command::Predicates(c) => c,
            Command::IrpWitness { common, .. }
            | Command::EhrhartEq { common, .. }
            | Command::HilbertBasis { common, .. }
            | Command::Canonical { common, .. }
            | Command::AInvariant { common, .. }
            | Command::Gorenstein { common, .. }
            | Command::Tdi { common, .. } => common,
        }
    }
}

/// A parsed input: graphs keep their structure, clutters their edges.
#[derive(Debug, Clone)]
pub enum Input {
    Graph(Graph),
    Clutter(Clutter),
}

impl Input {
    pub fn clutter(&self) -> Result<Clutter> {
        match self {
            Input::Graph(g) => g.to_clutter(),
            Input::Clutter(c) => Ok(c.clone()),
        }
    }

    pub fn graph(&self) -> Result<&Graph> {
        match self {
            Input::Graph(g) => Ok(g),
            Input::Clutter(_) => Err(Error::MalformedInput("this command needs a graph".into())),
        }
    }

    pub fn labels(&self) -> &[String] {
        match self {
            Input::Graph(g) => g.labels(),
            Input::Clutter(c) => c.labels(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Graph,
    Clutter,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDocument {
    kind: Kind,
    vertices: Vec<Value>,
    edges: Vec<Vec<Value>>,
}

fn label(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::MalformedInput(format!("label {other} is neither a string nor a number"))),
    }
}

/// Parses a JSON document, or a plain edge list with one `u v` pair per line
/// (blank lines and `#` comments ignored).
pub fn parse_input(text: &str) -> Result<Input> {
    if text.trim_start().starts_with('{') {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(format!("invalid JSON: {e}")))?;
        let labels = doc.vertices.iter().map(label).collect::<Result<Vec<_>>>()?;
        let index = |l: &Value| -> Result<usize> {
            let l = label(l)?;
            labels
                .iter()
                .position(|x| *x == l)
                .ok_or_else(|| Error::MalformedInput(format!("edge uses undeclared vertex {l:?}")))
        };
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::MalformedInput(format!("vertex label {l:?} is repeated")));
            }
        }
        let edges = doc
            .edges
            .iter()
            .map(|e| e.iter().map(index).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        match doc.kind {
            Kind::Clutter => Ok(Input::Clutter(Clutter::with_labels(labels, edges)?)),
            Kind::Graph => {
                let pairs = edges
                    .iter()
                    .map(|e| match e.as_slice() {
                        &[u, v] => Ok((u, v)),
                        _ => Err(Error::MalformedInput(format!("graph edge {e:?} is not a pair"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Input::Graph(Graph::with_labels(labels, &pairs)?))
            }
        }
    } else {
        let mut labels: Vec<String> = Vec::new();
        let mut pairs = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let &[u, v] = toks.as_slice() else {
                return Err(Error::MalformedInput(format!("line {}: expected two vertices", no + 1)));
            };
            let mut idx = |t: &str| match labels.iter().position(|l| l == t) {
                Some(i) => i,
                None => {
                    labels.push(t.to_string());
                    labels.len() - 1
                }
            };
            let (u, v) = (idx(u), idx(v));
            pairs.push((u, v));
        }
        Ok(Input::Graph(Graph::with_labels(labels, &pairs)?))
    }
}

/// The result of one command: a report and the process exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

struct Report {
    parameters: Map<String, Value>,
    verdicts: Map<String, Value>,
    certificates: Map<String, Value>,
    holds: bool,
}

impl Report {
    fn new() -> Self {
        Report {
            parameters: Map::new(),
            verdicts: Map::new(),
            certificates: Map::new(),
            holds: true,
        }
    }

    fn param(&mut self, k: &str, v: impl serde::Serialize) {
        self.parameters.insert(k.into(), json!(v));
    }

    fn verdict(&mut self, k: &str, v: impl serde::Serialize) {
        self.verdicts.insert(k.into(), json!(v));
    }

    fn cert(&mut self, k: &str, v: impl serde::Serialize) {
        self.certificates.insert(k.into(), json!(v));
    }

    fn irp(&mut self, key: &str, v: &IrpVerdict) {
        self.verdict(key, v.holds);
        self.verdict("method", v.method);
        if let Some(c) = &v.certificate {
            self.cert(key, c);
        }
        self.holds = v.holds;
    }
}

fn named(labels: &[String], vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| labels[v].clone()).collect()
}

fn digest(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    let hex: String = d.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// Runs `command` on the raw input text.
pub fn execute(command: &Command, text: &str) -> Result<Outcome> {
    let start = Instant::now();
    let common = command.common();
    let budget = common.budget.map(Budget::new).unwrap_or_default();
    let input = parse_input(text)?;
    let labels = input.labels().to_vec();
    let mut r = Report::new();
    r.param("budget", budget.limit());
    match command {
        Command::IrpLeq(_) => r.irp("irp_leq", &irp_leq(&input.clutter()?, &budget)?),
        Command::IrpGeq(_) => r.irp("irp_geq", &irp_geq(&input.clutter()?, &budget)?),
        Command::IrpWitness { direction, window, .. } => {
            let a = input.clutter()?.incidence_matrix();
            let window = window.unwrap_or_else(|| default_window(&a));
            let dir = Direction::from(*direction);
            r.param("direction", dir);
            r.param("window", window);
            let w = irp_witness_search(&a, dir, window, &budget)?;
            r.verdict("witness_found", w.is_some());
            if let Some(w) = w {
                r.cert("witness", w);
                r.holds = false;
            }
        }
        Command::EhrhartEq { bmax, .. } => {
            let c = input.clutter()?;
            let b_max = bmax.unwrap_or(c.n() as i64 + 1);
            r.param("b_max", b_max);
            let e = ehrhart_equality(&c, b_max, &budget)?;
            r.verdict("equal_up_to_b", e.equal_up_to_b);
            if let Some(f) = e.failing_point {
                r.cert("failing_point", f);
            }
            r.holds = e.equal_up_to_b;
        }
        Command::Vertices(_) => {
            let v = polytope_vertices(&input.clutter()?.incidence_matrix(), &budget)?;
            r.verdict("count", v.len());
            r.verdict("integral", v.vertices.iter().all(|x| x.is_integral()));
            r.cert("vertices", &v.vertices);
        }
        Command::HilbertBasis { cone, .. } => {
            let gens = cone_generators(&input, *cone)?;
            r.param("cone", format!("{cone:?}").to_lowercase());
            let hb = hilbert_basis(&gens, &budget)?;
            let mut sorted = gens.generators().to_vec();
            sorted.sort();
            sorted.dedup();
            r.verdict("size", hb.elements.len());
            r.verdict("equals_generators", hb.elements == sorted);
            r.cert("generators", gens.generators());
            r.cert("hilbert_basis", &hb.elements);
        }
        Command::Canonical { bmax, .. } => {
            let c = input.clutter()?;
            let Some(ctx) = normal_context(&c, &budget, &mut r)? else {
                return finish(command, text, r, start);
            };
            let b_max = bmax.unwrap_or_else(|| default_b_max(&ctx.0));
            r.param("b_max", b_max);
            let gens = canonical_generators(&ctx.0, &ctx.1, b_max, &budget)?;
            r.verdict("generators", gens.generators.len());
            r.verdict("complete", gens.complete);
            r.cert("normals", ctx.0.normals());
            r.cert("canonical_generators", &gens.generators);
        }
        Command::AInvariant { method, .. } => {
            r.param("method", format!("{method:?}").to_lowercase());
            let value = match method {
                AInvariantMethod::Formula => {
                    a_invariant_formula(&polytope_vertices(&input.clutter()?.incidence_matrix(), &budget)?)?
                }
                AInvariantMethod::Direct => {
                    let c = input.clutter()?;
                    if normal_context(&c, &budget, &mut r)?.is_none() {
                        return finish(command, text, r, start);
                    }
                    a_invariant_direct(&Cone::new(&closure_cone(&c)?, &budget)?, &budget)?
                }
                AInvariantMethod::Perfect => perfect_presentation(input.graph()?, &budget)?.a_invariant,
            };
            r.verdict("a_invariant", value);
        }
        Command::Gorenstein { bmax, .. } => {
            let c = input.clutter()?;
            let Some(ctx) = normal_context(&c, &budget, &mut r)? else {
                return finish(command, text, r, start);
            };
            let b_max = bmax.unwrap_or_else(|| default_b_max(&ctx.0));
            r.param("b_max", b_max);
            let gens = canonical_generators(&ctx.0, &ctx.1, b_max, &budget)?;
            let g = is_gorenstein(&gens);
            r.verdict("gorenstein", g.gorenstein);
            r.verdict("qualified", g.qualified);
            r.cert("canonical_generators", &gens.generators);
            r.holds = g.gorenstein;
        }
        Command::Antiblocker(_) => {
            let c = input.clutter()?;
            let v = polytope_vertices(&c.incidence_matrix(), &budget)?;
            let ok = antiblocker_check(&c, &v, &budget)?;
            r.verdict("duality", ok);
            r.holds = ok;
        }
        Command::Equivalence(_) => {
            let rep = equivalence_suite(input.graph()?, &budget)?;
            let v = rep.verdicts();
            for (k, x) in ["a_irp_leq", "b_irp_geq", "c_rees_normal", "d_edge_normal", "e_extended_rees_normal", "f_odd_cycles"]
                .iter()
                .zip(v)
            {
                r.verdict(k, x);
            }
            r.verdict("consistent", rep.consistent);
            r.verdict("odd_cycles_joined_by_edge", rep.odd_cycles.joined_by_edge);
            if let Some((c1, c2)) = &rep.odd_cycles.witness {
                r.cert("odd_cycle_pair", [named(&labels, c1), named(&labels, c2)]);
            }
            for (k, w) in [
                ("irp_leq", rep.irp_leq.certificate.as_ref().map(|c| json!(c))),
                ("irp_geq", rep.irp_geq.certificate.as_ref().map(|c| json!(c))),
                ("rees_normal", rep.rees_normal.witness.as_ref().map(|c| json!(c))),
                ("edge_normal", rep.edge_normal.witness.as_ref().map(|c| json!(c))),
                ("extended_rees_normal", rep.extended_rees_normal.witness.as_ref().map(|c| json!(c))),
            ] {
                if let Some(w) = w {
                    r.cert(k, w);
                }
            }
            r.holds = rep.consistent && v[0];
        }
        Command::Tdi { alpha, .. } => {
            r.param("alpha", alpha);
            let t = tdi_check(input.graph()?, alpha, &budget)?;
            r.verdict("tdi", t.holds);
            r.cert("lp_value", &t.lp_value);
            r.cert("ilp_value", t.ilp_value);
            r.cert("ilp_point", &t.ilp_point);
            r.holds = t.holds;
        }
        Command::Predicates(_) => match &input {
            Input::Graph(g) => {
                let p = g.predicates();
                r.verdict("connected", p.connected);
                r.verdict("bipartite", p.bipartite);
                r.verdict("unmixed", p.unmixed);
                r.verdict("perfect", g.is_perfect(&budget)?);
                r.verdict("independence_number", g.independence_number());
            }
            Input::Clutter(c) => {
                r.verdict("uniform", c.uniform_size().is_some());
                r.verdict("edges", c.q());
            }
        },
    }
    finish(command, text, r, start)
}

fn cone_generators(input: &Input, kind: ConeKind) -> Result<ConeGens> {
    let c = input.clutter()?;
    match kind {
        ConeKind::Closure => closure_cone(&c),
        ConeKind::Edge => ConeGens::lifted(&c.columns(), 1),
        ConeKind::Rees => rees_cone(&c.columns()),
        ConeKind::Extrees => {
            let n = c.n();
            let mut gens = vec![vec![0; n]];
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                gens.push(e);
            }
            gens.extend(c.columns());
            ConeGens::lifted(&gens, 1)
        }
    }
}

/// Presentation and closure cone, or `None` after recording the normality
/// witness when the closure cone is not normal.
fn normal_context(
    c: &Clutter,
    budget: &Budget,
    r: &mut Report,
) -> Result<Option<(crate::canonical::CanonicalPresentation, ConeGens)>> {
    let leq = irp_leq(c, budget)?;
    r.verdict("normal", leq.holds);
    if !leq.holds {
        if let Some(cert) = &leq.certificate {
            r.cert("normality", cert);
        }
        r.holds = false;
        return Ok(None);
    }
    let v = polytope_vertices(&c.incidence_matrix(), budget)?;
    Ok(Some((canonical_presentation(&v)?, closure_cone(c)?)))
}

fn finish(command: &Command, text: &str, r: Report, start: Instant) -> Result<Outcome> {
    let report = json!({
        "command": command.name(),
        "input_digest": digest(text.as_bytes()),
        "parameters": r.parameters,
        "verdicts": r.verdicts,
        "certificates": r.certificates,
        "timings": { "total_ms": start.elapsed().as_secs_f64() * 1000.0 },
        "version": env!("CARGO_PKG_VERSION"),
    });
    Ok(Outcome {
        report,
        exit_code: if r.holds { EXIT_HOLDS } else { EXIT_FAILS },
    })
}

fn read_source(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(src).map_err(|e| Error::Io(format!("{src}: {e}")))
    }
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| Error::Io(format!("{} has no file name", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let mut f = std::fs::File::create(&tmp).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}

fn error_report(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

/// Parses arguments, runs the command and prints the report. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let common = cli.command.common().clone();
    let result = (|| {
        let src = common
            .json
            .as_deref()
            .or(common.input.as_deref())
            .ok_or_else(|| Error::MalformedInput("no input given".into()))?;
        let text = read_source(src)?;
        let outcome = execute(&cli.command, &text)?;
        let rendered = serde_json::to_string_pretty(&outcome.report).expect("reports serialise") + "\n";
        match &common.out {
            Some(path) => write_atomic(path, &rendered)?,
            None => print!("{rendered}"),
        }
        Ok(outcome.exit_code)
    })();
    match result {
        Ok(code) => code,
        Err(e) => {
            let rendered = serde_json::to_string_pretty(&error_report(&e)).expect("reports serialise");
            println!("{rendered}");
            eprintln!("irp: {e}");
            EXIT_ERROR
        }
    }
}
