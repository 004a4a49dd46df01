//! Command-line front end. Every command prints one JSON report on standard
//! output and exits with 0 (all checks pass), 1 (a mathematical check failed)
//! or 2 (unreadable input or bad usage).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::AlgebraMap;
use crate::character::{ARingWithCharacter, Handedness};
use crate::coring::{coinvariants_report, coring_alpha_trace, CoringPresentation};
use crate::corpus;
use crate::error::{Error, Result};
use crate::fbn::{is_right_fbn, fbn_transfer_report};
use crate::field::{FieldSpec, Scalar};
use crate::frobext::{lift_frobenius, trace_s_matrix, trace_one_witness as frobext_witness};
use crate::hopf::{hopf_frobenius_system, smash, smash_frobenius, trace_one_witness as hopf_witness};
use crate::io::{self, Bundle, CoringBundle, FrobeniusBundle};
use crate::matrix::Matrix;
use crate::morita::TraceData;
use crate::report::{differing_coordinate, differing_entry, first_nonzero, Report};
use crate::subspace::{EnumCaps, Subspace};

#[derive(Parser, Debug)]
#[command(name = "froblab", version, about = "Exact verification of A-rings, Frobenius systems, smash products and corings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every law of the structure in a file of any kind.
    Verify { file: PathBuf },
    /// Invariant subring B, the space Q and optionally M^R for a module.
    Invariants {
        aring: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Search for q in Q with χ(q) = 1.
    Projective { aring: PathBuf },
    /// Decide quasi-projectivity of A over R by enumerating submodules.
    Quasiprojective { aring: PathBuf },
    /// Verify a Frobenius system and compute α, β and the trace.
    Frobenius { file: PathBuf },
    /// Evaluate the trace map on one element of A.
    Trace {
        file: PathBuf,
        /// Comma-separated coordinates of the element.
        #[arg(long)]
        element: String,
    },
    /// Build the smash product of an action and write it as an A-ring file.
    Smash {
        action: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Build the dual ring of a coring with grouplike element and write it as an A-ring file.
    CoringDual {
        coring: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Brute-force FBN decision for a finite algebra.
    Fbn { algebra: PathBuf },
    /// Evaluate every condition of the FBN transfer theorem for an A-ring.
    ReportTh45 {
        aring: PathBuf,
        #[arg(long)]
        frobenius: Option<PathBuf>,
    },
    /// Write the example corpus into a directory.
    WriteCorpus { dir: PathBuf },
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{}", render(&out.value)).is_err() {
                return 2;
            }
            if out.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            let subject = subject_of(&cli.command);
            let _ = writeln!(
                std::io::stdout().lock(),
                "{}",
                render(&json!({
                    "command": command_name(&cli.command),
                    "subject": subject,
                    "passed": false,
                    "error": e.to_string(),
                }))
            );
            eprintln!("froblab: {e}");
            code
        }
    }
}

/// 2 for input problems, 1 for inputs whose mathematics is broken.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Schema { .. }
        | Error::Scalar(_)
        | Error::Io { .. }
        | Error::Field(_)
        | Error::Dimension(_)
        | Error::FieldMismatch(..)
        | Error::AlgebraMismatch(_)
        | Error::CapExceeded { .. }
        | Error::InfiniteField(_) => 2,
        _ => 1,
    }
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Invariants { .. } => "invariants",
        Command::Projective { .. } => "projective",
        Command::Quasiprojective { .. } => "quasiprojective",
        Command::Frobenius { .. } => "frobenius",
        Command::Trace { .. } => "trace",
        Command::Smash { .. } => "smash",
        Command::CoringDual { .. } => "coring-dual",
        Command::Fbn { .. } => "fbn",
        Command::ReportTh45 { .. } => "report-th45",
        Command::WriteCorpus { .. } => "write-corpus",
    }
}

fn subject_of(c: &Command) -> String {
    let p = match c {
        Command::Verify { file } | Command::Frobenius { file } | Command::Trace { file, .. } => file,
        Command::Invariants { aring, .. }
        | Command::Projective { aring }
        | Command::Quasiprojective { aring }
        | Command::ReportTh45 { aring, .. } => aring,
        Command::Smash { action, .. } => action,
        Command::CoringDual { coring, .. } => coring,
        Command::Fbn { algebra } => algebra,
        Command::WriteCorpus { dir } => dir,
    };
    p.display().to_string()
}

struct Outcome {
    value: Value,
    passed: bool,
}

/// Collects checks and computed values for one command.
struct ReportBuilder {
    command: &'static str,
    subject: String,
    kind: Option<&'static str>,
    report: Report,
    computed: Map<String, Value>,
}

impl ReportBuilder {
    fn new(command: &Command) -> Self {
        ReportBuilder {
            command: command_name(command),
            subject: subject_of(command),
            kind: None,
            report: Report::new(),
            computed: Map::new(),
        }
    }

    fn merge(&mut self, prefix: &str, r: Report) {
        self.report.merge(prefix, r);
    }

    fn put(&mut self, key: &str, v: Value) {
        self.computed.insert(key.to_string(), v);
    }

    fn finish(self) -> Outcome {
        let passed = self.report.is_ok();
        let checks: Vec<Value> = self
            .report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "law": c.law,
                    "passed": c.passed(),
                    "failures": c.failures,
                })
            })
            .collect();
        let mut v = json!({
            "command": self.command,
            "subject": self.subject,
            "passed": passed,
            "checks": checks,
            "computed": Value::Object(self.computed),
        });
        if let Some(kind) = self.kind {
            v["kind"] = json!(kind);
        }
        Outcome { value: v, passed }
    }
}

fn vec_json(v: &[Scalar]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn csv(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.row_vectors().iter().map(|r| vec_json(r)).collect::<Vec<_>>())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis_vectors().iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
    })
}

fn witness_json(w: Option<&[Scalar]>) -> Value {
    match w {
        Some(v) => json!(csv(v)),
        None => json!("none"),
    }
}

fn parse_csv(f: FieldSpec, s: &str, len: usize) -> Result<Vec<Scalar>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != len {
        return Err(Error::schema("--element", format!("expected {len} coordinates, found {}", parts.len())));
    }
    parts
        .iter()
        .enumerate()
        .map(|(k, p)| f.parse(p).map_err(|e| Error::Scalar(format!("--element[{k}]: {e}"))))
        .collect()
}

fn load_aring(path: &Path) -> Result<ARingWithCharacter> {
    match io::load(path)? {
        Bundle::ARing(rc) => Ok(rc),
        other => Err(wrong_kind(path, "aring", other.kind())),
    }
}

fn wrong_kind(path: &Path, want: &str, got: &str) -> Error {
    Error::schema("kind", format!("{} has kind {got:?}, expected {want:?}", path.display()))
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let mut out = ReportBuilder::new(cmd);
    match cmd {
        Command::Verify { file } => {
            let bundle = io::load(file)?;
            out.kind = Some(bundle.kind());
            verify_bundle(&bundle, &mut out)?;
        }
        Command::Invariants { aring, module } => {
            let rc = load_aring(aring)?;
            out.merge("character", rc.verify());
            let m = match module {
                Some(p) => match io::load(p)? {
                    Bundle::Module(m) => Some(m),
                    other => return Err(wrong_kind(p, "module", other.kind())),
                },
                None => None,
            };
            if out.report.is_ok() {
                let inv = rc.invariants(m.as_ref())?;
                out.put("b", subspace_json(&inv.b));
                out.put("q", subspace_json(&inv.q));
                if let Some(mr) = &inv.m_r {
                    out.put("m_r", subspace_json(mr));
                }
                out.merge("invariants", inv.report);
                if let Some(m) = &m {
                    out.merge("hom", rc.hom_iso_phi(m)?.report);
                }
            }
        }
        Command::Projective { aring } => {
            let rc = load_aring(aring)?;
            out.merge("character", rc.verify());
            if out.report.is_ok() {
                out.put("witness", witness_json(rc.projectivity_witness().as_deref()));
            }
        }
        Command::Quasiprojective { aring } => {
            let rc = load_aring(aring)?;
            out.merge("character", rc.verify());
            if out.report.is_ok() {
                let qp = rc.quasi_projectivity(EnumCaps::MODULES.with_env_override())?;
                out.put("quasi_projective", json!(qp.answer));
                out.put("submodules_checked", json!(qp.submodules_checked));
                if let Some(ce) = &qp.counterexample {
                    out.put("counterexample", subspace_json(ce));
                    out.put("invariant_dim", json!(qp.invariant_dim));
                    out.put("expected_dim", json!(qp.expected_dim));
                }
            }
        }
        Command::Frobenius { file } => frobenius_command(file, &mut out)?,
        Command::Trace { file, element } => trace_command(file, element, &mut out)?,
        Command::Smash { action, output } => {
            let act = match io::load(action)? {
                Bundle::Action(a) => a,
                other => return Err(wrong_kind(action, "action", other.kind())),
            };
            out.merge("hopf", act.hopf().verify());
            out.merge("action", act.check());
            if out.report.is_ok() {
                let sp = smash(&act)?;
                out.merge("smash", sp.report());
                let sf = smash_frobenius(&sp)?;
                out.merge("frobenius", sf.verify());
                let td = sf.trace_data()?;
                out.merge("trace", td.report);
                out.put("smash_dim", json!(sp.algebra.dim()));
                out.put("invariants", subspace_json(&act.invariants()));
                let w = hopf_witness(&act, &sf.integrals);
                out.put(
                    "trace_one_witness",
                    match w {
                        Some((a, t)) => json!({ "a": csv(&a), "t": csv(&t) }),
                        None => json!("none"),
                    },
                );
                if out.report.is_ok() {
                    io::save(&Bundle::ARing(sp.character.clone()), output)?;
                    out.put("output", json!(output.display().to_string()));
                }
            }
        }
        Command::CoringDual { coring, output } => {
            let cb = match io::load(coring)? {
                Bundle::Coring(cb) => cb,
                other => return Err(wrong_kind(coring, "coring", other.kind())),
            };
            out.merge("coring", cb.coring.verify());
            let Some(x) = cb.grouplike.clone() else {
                return Err(Error::schema("grouplike", "coring-dual needs a grouplike element"));
            };
            grouplike_check(&cb.coring, &x, &mut out.report);
            if out.report.is_ok() {
                let dual = cb.coring.dual_ring(&x)?;
                out.merge("character", dual.character.verify());
                out.merge("coinvariants", coinvariants_report(&cb.coring, &dual));
                out.put("dual_dim", json!(dual.basis.len()));
                out.put("coinvariants", subspace_json(&cb.coring.coinvariants(&x)));
                if out.report.is_ok() {
                    io::save(&Bundle::ARing(dual.character), output)?;
                    out.put("output", json!(output.display().to_string()));
                }
            }
        }
        Command::Fbn { algebra } => {
            let alg = match io::load(algebra)? {
                Bundle::Algebra(a) => a,
                other => return Err(wrong_kind(algebra, "algebra", other.kind())),
            };
            out.merge("algebra", alg.check());
            if out.report.is_ok() {
                let r = is_right_fbn(&alg, EnumCaps::LATTICE.with_env_override())?;
                out.put("fbn", serde_json::to_value(&r).expect("serializable"));
            }
        }
        Command::ReportTh45 { aring, frobenius } => {
            let rc = load_aring(aring)?;
            out.merge("character", rc.verify());
            let sys = match frobenius {
                Some(p) => match io::load(p)? {
                    Bundle::Frobenius(FrobeniusBundle::System {
                        system,
                        character: Some(ch),
                    }) => Some((system, ch)),
                    Bundle::Frobenius(_) => {
                        return Err(Error::schema("system", "--frobenius needs a system file with a character"))
                    }
                    other => return Err(wrong_kind(p, "frobenius", other.kind())),
                },
                None => None,
            };
            if let Some((s, ch)) = &sys {
                out.merge("frobenius", s.verify());
                out.merge("frobenius_character", ch.verify());
            }
            if out.report.is_ok() {
                let r = fbn_transfer_report(
                    &rc,
                    sys.as_ref().map(|(s, ch)| (s, ch)),
                    EnumCaps::LATTICE.with_env_override(),
                )?;
                let c = out.report.check("fbn_transfer", "A, R and B are simultaneously FBN");
                let flags = [r.a_fbn, r.r_fbn, r.b_fbn];
                let odd = flags.iter().position(|&b| b != flags[0]).map(|k| vec![k]).unwrap_or_default();
                c.expect(r.conditions_agree, odd, || {
                    format!("A: {}, R: {}, B: {}", r.a_fbn, r.r_fbn, r.b_fbn)
                });
                out.put("theorem", serde_json::to_value(&r).expect("serializable"));
            }
        }
        Command::WriteCorpus { dir } => {
            let written = write_corpus(dir)?;
            out.put("files", json!(written));
        }
    }
    Ok(out.finish())
}

/// Writes every corpus bundle under `dir`, returning the relative paths.
pub fn write_corpus(dir: &Path) -> Result<Vec<String>> {
    let mut written = Vec::new();
    for (rel, bundle) in corpus::corpus_files() {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(|source| Error::Io {
                path: parent.display().to_string(),
                source,
            })?;
        }
        io::save(&bundle, &path)?;
        written.push(rel.to_string());
    }
    Ok(written)
}

fn verify_bundle(bundle: &Bundle, out: &mut ReportBuilder) -> Result<()> {
    match bundle {
        Bundle::Algebra(a) => out.merge("", a.check()),
        Bundle::ARing(rc) => out.merge("", rc.verify()),
        Bundle::Module(m) => {
            out.merge("algebra", m.algebra().check());
            out.merge("module", m.check());
        }
        Bundle::Frobenius(fb) => frobenius_checks(fb, out)?,
        Bundle::Hopf(h) => {
            out.merge("hopf", h.verify());
            if out.report.is_ok() {
                let hf = hopf_frobenius_system(h)?;
                out.put("integral", vec_json(&hf.integrals.t));
                out.put("cointegral", vec_json(&hf.integrals.phi));
                out.merge("frobenius", hf.report);
            }
        }
        Bundle::Action(act) => {
            out.merge("hopf", act.hopf().verify());
            out.merge("action", act.check());
            if out.report.is_ok() {
                let sp = smash(act)?;
                out.merge("smash", sp.report());
                let sf = smash_frobenius(&sp)?;
                out.merge("frobenius", sf.verify());
                out.merge("trace", sf.trace_data()?.report);
                out.put("invariants", subspace_json(&act.invariants()));
            }
        }
        Bundle::Coring(cb) => coring_checks(cb, out)?,
    }
    Ok(())
}

fn grouplike_check(c: &CoringPresentation, x: &[Scalar], report: &mut Report) {
    let ch = report.check("grouplike", "Δ(x) = x ⊗ x, ε(x) = 1");
    let delta = c.comul().mul_vec(x);
    let square = c.tensor().pure(x, x);
    ch.expect(delta == square, [vec![0], differing_coordinate(&delta, &square)].concat(), || "Δ(x) ≠ x ⊗ x".into());
    let eps = c.counit().mul_vec(x);
    let one = c.algebra().unit();
    ch.expect(eps == one, [vec![1], differing_coordinate(&eps, one)].concat(), || "ε(x) ≠ 1".into());
}

fn coring_checks(cb: &CoringBundle, out: &mut ReportBuilder) -> Result<()> {
    let c = &cb.coring;
    out.merge("coring", c.verify());
    if let Some(sys) = &cb.frobenius {
        out.merge("frobenius", sys.verify(c));
    }
    let Some(x) = &cb.grouplike else { return Ok(()) };
    grouplike_check(c, x, &mut out.report);
    if !out.report.is_ok() {
        return Ok(());
    }
    let dual = c.dual_ring(x)?;
    out.merge("dual_character", dual.character.verify());
    out.merge("coinvariants", coinvariants_report(c, &dual));
    out.put("coinvariants", subspace_json(&c.coinvariants(x)));
    if let Some(sys) = &cb.frobenius {
        let tr = coring_alpha_trace(c, sys, &dual)?;
        out.merge("trace", tr.report);
        out.put("trace", matrix_json(&tr.trace));
    }
    Ok(())
}

/// The A-ring whose `A` the trace of a Frobenius file lands in, with the
/// system and the trace data.
fn frobenius_trace(fb: &FrobeniusBundle, out: &mut ReportBuilder) -> Result<Option<(TraceData, ARingWithCharacter)>> {
    match fb {
        FrobeniusBundle::System { system, character } => {
            out.merge("system", system.verify());
            let Some(ch) = character else { return Ok(None) };
            out.merge("character", ch.verify());
            if ch.handedness == Handedness::Left {
                return Err(Error::schema("system.character.handedness", "the trace needs a right-handed character"));
            }
            if !out.report.is_ok() {
                return Ok(None);
            }
            let td = TraceData::compute(system, ch)?;
            Ok(Some((td, ch.clone())))
        }
        FrobeniusBundle::Algebra { data, extension } => {
            out.merge("frobenius_algebra", data.verify());
            if !out.report.is_ok() {
                return Ok(None);
            }
            let j = extension
                .clone()
                .unwrap_or_else(|| AlgebraMap::identity(data.s.clone()));
            let (sys, rc) = lift_frobenius(data, &j)?;
            out.merge("lifted_system", sys.verify());
            out.merge("lifted_character", rc.verify());
            if !out.report.is_ok() {
                return Ok(None);
            }
            let td = TraceData::compute(&sys, &rc)?;
            let direct = trace_s_matrix(data, &j)?;
            let c = out.report.check("trace_formula", "tr(a) = Σ j(e¹) a j(e²) agrees with the system trace");
            c.expect(direct == td.trace, differing_entry(&direct, &td.trace), || "closed-form trace differs from the system trace".into());
            let w = frobext_witness(data, &j)?;
            let c = out.report.check("trace_witness_agrees", "a trace-1 element exists for both descriptions or neither");
            let by_system = td.trace_one_witness(rc.a().unit());
            let found = w.as_ref().or(by_system.as_ref()).map(|v| first_nonzero(v)).unwrap_or_default();
            c.expect(w.is_some() == by_system.is_some(), found, || {
                "closed-form and system trace-1 searches disagree".into()
            });
            Ok(Some((td, rc)))
        }
    }
}

fn frobenius_checks(fb: &FrobeniusBundle, out: &mut ReportBuilder) -> Result<()> {
    if let Some((td, _)) = frobenius_trace(fb, out)? {
        out.merge("trace", td.report);
    }
    Ok(())
}

fn frobenius_command(file: &Path, out: &mut ReportBuilder) -> Result<()> {
    let fb = match io::load(file)? {
        Bundle::Frobenius(fb) => fb,
        other => return Err(wrong_kind(file, "frobenius", other.kind())),
    };
    if let Some((td, rc)) = frobenius_trace(&fb, out)? {
        out.put("alpha", matrix_json(&td.alpha));
        out.put("beta", matrix_json(&td.beta));
        out.put("trace", matrix_json(&td.trace));
        out.put("q", subspace_json(&td.q));
        out.put("b", subspace_json(&td.b));
        out.put("trace_one_witness", witness_json(td.trace_one_witness(rc.a().unit()).as_deref()));
        out.merge("trace", td.report);
    }
    Ok(())
}

fn trace_command(file: &Path, element: &str, out: &mut ReportBuilder) -> Result<()> {
    let fb = match io::load(file)? {
        Bundle::Frobenius(fb) => fb,
        other => return Err(wrong_kind(file, "frobenius", other.kind())),
    };
    let Some((td, rc)) = frobenius_trace(&fb, out)? else {
        if out.report.is_ok() {
            return Err(Error::schema("system.character", "the trace needs a system with a character"));
        }
        return Ok(());
    };
    let a: Arc<_> = rc.a().clone();
    let x = parse_csv(a.field(), element, a.dim())?;
    out.put("element", json!(csv(&x)));
    out.put("trace", json!(csv(&td.trace_of(&x))));
    out.merge("trace", td.report);
    Ok(())
}
