//! Batch front end: algebra and orbit listings, verification sweeps, and
//! JSON/TSV reports that carry their seeds.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use liecert::algebra::{chevalley_algebra, LieAlgebraTable, Subalgebra};
use liecert::appendix::{builtin_case, builtin_case_names, verify_rigid_case, CaseReport, RigidCaseSpec};
use liecert::bolsinov::check_criterion;
use liecert::classical::{classical_matrix_algebra, natural_size};
use liecert::index::{certify_index, IndexCertificate, DEFAULT_SAMPLES};
use liecert::orbits::{
    enumerate_nilpotent_partitions, is_rigid_partition, nilpotent_from_partition, parabolic, proper_subsets,
    richardson_representative, OrbitDescriptor, Partition,
};
use liecert::roots::{build_root_system, CartanType};

pub const REPORT_SCHEMA: &str = "liecert.report/1";
pub const ALGEBRA_SCHEMA: &str = "liecert.algebra/1";
pub const ORBITS_SCHEMA: &str = "liecert.orbits/1";

#[derive(Parser, Debug)]
#[command(name = "liecert", version, about = "Exact certificates for indices of centralizers")]
pub struct Cli {
    /// Seed for every sampled quantity.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Functionals sampled per index certificate.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub budget: usize,
    /// Emit JSON instead of TSV.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit nonzero on UNRESOLVED rows too.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Worker threads for row-level parallelism.
    #[arg(long, global = true, default_value_t = 1)]
    pub parallelism: usize,
    /// Include per-row wall-clock timings (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root-system data of a simple type.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Nilpotent orbits to be swept.
    Orbits {
        #[command(subcommand)]
        cmd: OrbitsCmd,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    Info(TypeArg),
}

#[derive(Subcommand, Debug)]
pub enum OrbitsCmd {
    List(TypeArg),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// `ind 𝔤ᵉ = rk 𝔤` over partition orbits or Richardson parabolics.
    Elashvili(SweepArgs),
    /// Shift-space dimension identity over the same sweep.
    Bolsinov(TypeArg),
    /// Rigid-orbit case files.
    Appendix(CaseArgs),
}

#[derive(Args, Debug)]
pub struct TypeArg {
    /// Cartan type such as `A3`, `B4`, `E8`.
    #[arg(long = "type")]
    pub cartan_type: CartanType,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long = "type")]
    pub cartan_type: CartanType,
    /// Extra rigid-orbit case files (path or built-in name).
    #[arg(long = "case")]
    pub cases: Vec<String>,
}

#[derive(Args, Debug)]
pub struct CaseArgs {
    /// Case files (path or built-in name); defaults to every built-in case.
    #[arg(long = "case")]
    pub cases: Vec<String>,
}

/// Errors that map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("case file `{0}` not found (built-in cases: {1})")]
    MissingCase(String, String),
    #[error("case `{name}` is for {case_type}, not {requested}")]
    CaseTypeMismatch {
        name: String,
        case_type: String,
        requested: String,
    },
    #[error("{0}")]
    BadCase(String),
    #[error("could not start thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Certified,
    Unresolved,
    Failed,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Certified => "CERTIFIED",
            Status::Unresolved => "UNRESOLVED",
            Status::Failed => "FAILED",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BolsinovSummary {
    pub holds: bool,
    pub dim_v: usize,
    pub expected_dim_v: usize,
    pub x_seed: u64,
    pub x_attempts: usize,
    pub properties_hold: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub id: String,
    pub kind: &'static str,
    pub status: Status,
    pub dim_ge: Option<usize>,
    pub dim_z: Option<usize>,
    pub rigid: Option<bool>,
    pub certificate: Option<IndexCertificate>,
    pub bolsinov: Option<BolsinovSummary>,
    pub case: Option<CaseReport>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Totals {
    pub rows: usize,
    pub certified: usize,
    pub unresolved: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub cartan_type: Option<String>,
    pub seed: u64,
    pub budget: usize,
    pub rows: Vec<Row>,
    pub totals: Totals,
}

impl Report {
    fn new(command: &str, ty: Option<CartanType>, cli: &Cli, rows: Vec<Row>) -> Self {
        let mut totals = Totals {
            rows: rows.len(),
            ..Totals::default()
        };
        for r in &rows {
            match r.status {
                Status::Certified => totals.certified += 1,
                Status::Unresolved => totals.unresolved += 1,
                Status::Failed => totals.failed += 1,
            }
        }
        Report {
            schema: REPORT_SCHEMA,
            command: command.into(),
            cartan_type: ty.map(|t| t.to_string()),
            seed: cli.seed,
            budget: cli.budget,
            rows,
            totals,
        }
    }

    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.totals.failed > 0 || (strict && self.totals.unresolved > 0) {
            1
        } else {
            0
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        let ty = self.cartan_type.as_deref().unwrap_or("-");
        writeln!(
            s,
            "# schema={} command={} type={ty} seed={} budget={}",
            self.schema, self.command, self.seed, self.budget
        )
        .unwrap();
        let timed = self.rows.iter().any(|r| r.timing_ms.is_some());
        s.push_str("id\tkind\tstatus\tdim_ge\tdim_z\trigid\tdetail");
        s.push_str(if timed { "\tms\n" } else { "\n" });
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        for r in &self.rows {
            let rigid = r.rigid.map_or("-", |b| if b { "yes" } else { "no" });
            write!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{rigid}\t{}",
                r.id,
                r.kind,
                r.status.as_str(),
                opt(r.dim_ge),
                opt(r.dim_z),
                r.detail
            )
            .unwrap();
            if let Some(t) = r.timing_ms {
                write!(s, "\t{t}").unwrap();
            }
            s.push('\n');
        }
        let t = &self.totals;
        writeln!(
            s,
            "# totals rows={} certified={} unresolved={} failed={}",
            t.rows, t.certified, t.unresolved, t.failed
        )
        .unwrap();
        s
    }
}

/// Output text and process exit code.
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

fn render<T: Serialize>(value: &T, json: bool, tsv: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    } else {
        tsv()
    }
}

/// The classical matrix model for A–D, the Chevalley table otherwise.
pub fn algebra_for(t: CartanType) -> LieAlgebraTable {
    match natural_size(t) {
        Some(n) => classical_matrix_algebra(t.family(), n).expect("natural size is valid"),
        None => chevalley_algebra(t),
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism.max(1))
        .build()
        .map_err(|e| UsageError::Pool(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Algebra {
            cmd: AlgebraCmd::Info(a),
        } => Ok(algebra_info(cli, a.cartan_type)),
        Command::Orbits {
            cmd: OrbitsCmd::List(a),
        } => Ok(orbits_list(cli, a.cartan_type)),
        Command::Verify { cmd } => {
            let report = match cmd {
                VerifyCmd::Elashvili(a) => verify_elashvili(cli, a)?,
                VerifyCmd::Bolsinov(a) => verify_bolsinov(cli, a.cartan_type),
                VerifyCmd::Appendix(a) => verify_appendix(cli, &a.cases)?,
            };
            Ok(Outcome {
                output: render(&report, cli.json, || report.to_tsv()),
                exit_code: report.exit_code(cli.strict),
            })
        }
    })
}

#[derive(Serialize)]
struct AlgebraInfo {
    schema: &'static str,
    cartan_type: String,
    dim: usize,
    rank: usize,
    num_positive_roots: usize,
    borel_dim: usize,
    degrees: Vec<usize>,
    cartan_matrix: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
}

fn algebra_info(cli: &Cli, t: CartanType) -> Outcome {
    let rs = build_root_system(t);
    let info = AlgebraInfo {
        schema: ALGEBRA_SCHEMA,
        cartan_type: t.to_string(),
        dim: t.algebra_dim(),
        rank: rs.rank,
        num_positive_roots: rs.num_positive,
        borel_dim: rs.borel_dim,
        degrees: rs.degrees.clone(),
        cartan_matrix: rs.cartan_matrix.clone(),
        highest_root: rs.highest_root().to_vec(),
    };
    let output = render(&info, cli.json, || {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut s = String::new();
        writeln!(s, "type\t{}", info.cartan_type).unwrap();
        writeln!(s, "dim\t{}", info.dim).unwrap();
        writeln!(s, "rank\t{}", info.rank).unwrap();
        writeln!(s, "positive_roots\t{}", info.num_positive_roots).unwrap();
        writeln!(s, "borel_dim\t{}", info.borel_dim).unwrap();
        let deg: Vec<i64> = info.degrees.iter().map(|d| *d as i64).collect();
        writeln!(s, "degrees\t{}", join(&deg)).unwrap();
        for row in &info.cartan_matrix {
            writeln!(s, "cartan\t{}", join(row)).unwrap();
        }
        writeln!(s, "highest_root\t{}", join(&info.highest_root)).unwrap();
        s
    });
    Outcome { output, exit_code: 0 }
}

#[derive(Serialize)]
struct OrbitEntry {
    id: String,
    kind: &'static str,
    dim_orbit: usize,
    dim_centralizer: usize,
    rigid: Option<bool>,
}

#[derive(Serialize)]
struct OrbitList {
    schema: &'static str,
    cartan_type: String,
    orbits: Vec<OrbitEntry>,
}

fn orbits_list(cli: &Cli, t: CartanType) -> Outcome {
    let dim = t.algebra_dim();
    let orbits: Vec<OrbitEntry> = match natural_size(t) {
        Some(n) => enumerate_nilpotent_partitions(t.family(), n)
            .into_iter()
            .map(|p| {
                let c = p.centralizer_dim(t.family());
                OrbitEntry {
                    id: p.to_string(),
                    kind: "partition",
                    dim_orbit: dim - c,
                    dim_centralizer: c,
                    rigid: Some(is_rigid_partition(t.family(), &p)),
                }
            })
            .collect(),
        None => {
            let l = chevalley_algebra(t);
            proper_subsets(t.rank())
                .into_iter()
                .map(|s| {
                    let pd = parabolic(&l, &s).expect("proper subset");
                    let c = pd.levi.dim();
                    OrbitEntry {
                        id: subset_label(&s),
                        kind: "richardson",
                        dim_orbit: dim - c,
                        dim_centralizer: c,
                        rigid: Some(false),
                    }
                })
                .collect()
        }
    };
    let list = OrbitList {
        schema: ORBITS_SCHEMA,
        cartan_type: t.to_string(),
        orbits,
    };
    let output = render(&list, cli.json, || {
        let mut s = String::from("id\tkind\tdim_orbit\tdim_centralizer\trigid\n");
        for o in &list.orbits {
            let rigid = o.rigid.map_or("-", |b| if b { "yes" } else { "no" });
            writeln!(s, "{}\t{}\t{}\t{}\t{rigid}", o.id, o.kind, o.dim_orbit, o.dim_centralizer).unwrap();
        }
        s
    });
    Outcome { output, exit_code: 0 }
}

fn subset_label(s: &[usize]) -> String {
    let v: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("P{{{}}}", v.join(","))
}

/// One unit of row-level work.
enum Job {
    Partition(Partition),
    Richardson(Vec<usize>),
    Case(String, Box<RigidCaseSpec>),
}

fn timed<T>(cli: &Cli, f: impl FnOnce() -> T) -> (T, Option<u128>) {
    let t = Instant::now();
    let out = f();
    (out, cli.timings.then(|| t.elapsed().as_millis()))
}

fn index_row(cli: &Cli, l: &LieAlgebraTable, id: String, kind: &'static str, rigid: Option<bool>, d: &OrbitDescriptor) -> Row {
    let rank = l.rank().expect("root data");
    let sub = Subalgebra::new(l, &d.centralizer).expect("centralizers are subalgebras");
    let cert = certify_index(&sub, Some(rank), cli.budget, cli.seed);
    let status = if cert.certified {
        Status::Certified
    } else if !cert.parity_ok || !cert.vinberg_ok {
        Status::Failed
    } else {
        Status::Unresolved
    };
    let detail = if cert.certified {
        format!(
            "ind={} certified (Kirillov rank {} at sample {})",
            cert.claimed_index, cert.witness_rank, cert.samples_tried
        )
    } else if status == Status::Failed {
        format!("Vinberg/parity guard broken: sample ranks {:?}", cert.sample_ranks)
    } else {
        format!("ind<={} after {} samples, floor {rank}", cert.claimed_index, cert.samples_tried)
    };
    Row {
        id,
        kind,
        status,
        dim_ge: Some(d.dim_centralizer),
        dim_z: Some(sub.center().dim()),
        rigid,
        certificate: Some(cert),
        bolsinov: None,
        case: None,
        detail,
        timing_ms: None,
    }
}

fn unresolved(id: String, kind: &'static str, detail: String) -> Row {
    Row {
        id,
        kind,
        status: Status::Unresolved,
        dim_ge: None,
        dim_z: None,
        rigid: None,
        certificate: None,
        bolsinov: None,
        case: None,
        detail,
        timing_ms: None,
    }
}

fn failed(id: String, kind: &'static str, detail: String) -> Row {
    Row {
        status: Status::Failed,
        ..unresolved(id, kind, detail)
    }
}

fn sweep_jobs(t: CartanType) -> Vec<Job> {
    match natural_size(t) {
        Some(n) => enumerate_nilpotent_partitions(t.family(), n).into_iter().map(Job::Partition).collect(),
        None => proper_subsets(t.rank()).into_iter().map(Job::Richardson).collect(),
    }
}

fn representative(cli: &Cli, l: &LieAlgebraTable, job: &Job) -> Result<(String, &'static str, Option<bool>, OrbitDescriptor), String> {
    match job {
        Job::Partition(p) => {
            let family = l.cartan_type().expect("root data").family();
            let d = nilpotent_from_partition(l, p).map_err(|e| e.to_string())?;
            Ok((p.to_string(), "partition", Some(is_rigid_partition(family, p)), d))
        }
        Job::Richardson(s) => {
            let pd = parabolic(l, s).map_err(|e| e.to_string())?;
            let d = richardson_representative(l, &pd, cli.seed).map_err(|e| e.to_string())?;
            Ok((subset_label(s), "richardson", Some(false), d))
        }
        Job::Case(..) => unreachable!("cases are handled separately"),
    }
}

fn job_id(job: &Job) -> (String, &'static str) {
    match job {
        Job::Partition(p) => (p.to_string(), "partition"),
        Job::Richardson(s) => (subset_label(s), "richardson"),
        Job::Case(name, _) => (name.clone(), "case"),
    }
}

fn load_case(arg: &str) -> Result<RigidCaseSpec, UsageError> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| UsageError::BadCase(format!("{arg}: {e}")))?
    } else {
        let name = arg.strip_suffix(".case").unwrap_or(arg);
        let name = Path::new(name).file_name().and_then(|s| s.to_str()).unwrap_or(name);
        match builtin_case(name) {
            Ok(spec) => return Ok(spec),
            Err(_) => return Err(UsageError::MissingCase(arg.into(), builtin_case_names().join(", "))),
        }
    };
    RigidCaseSpec::parse(&text).map_err(|e| UsageError::BadCase(format!("{arg}: {e}")))
}

fn case_row(cli: &Cli, spec: &RigidCaseSpec) -> Row {
    match verify_rigid_case(spec, cli.budget, cli.seed) {
        Ok(r) => {
            let fails: Vec<String> = r
                .failures()
                .iter()
                .map(|c| format!("{}: expected {} got {}", c.name, c.expected, c.actual))
                .collect();
            let (status, detail) = if fails.is_empty() {
                (
                    Status::Certified,
                    format!(
                        "condition {} holds, ind={} certified",
                        r.condition.map_or("?".into(), |c| c.to_string()),
                        r.elashvili.claimed_index
                    ),
                )
            } else {
                (Status::Failed, fails.join("; "))
            };
            Row {
                id: spec.name.clone(),
                kind: "case",
                status,
                dim_ge: Some(r.dim_ge),
                dim_z: Some(r.dim_z),
                rigid: None,
                certificate: Some(r.elashvili.clone()),
                bolsinov: None,
                case: Some(r),
                detail,
                timing_ms: None,
            }
        }
        Err(e) => failed(spec.name.clone(), "case", e.to_string()),
    }
}

fn run_rows(cli: &Cli, jobs: Vec<Job>, f: impl Fn(&Job) -> Row + Sync) -> Vec<Row> {
    jobs.par_iter()
        .map(|job| {
            let (mut row, ms) = timed(cli, || f(job));
            row.timing_ms = ms;
            row
        })
        .collect()
}

fn verify_elashvili(cli: &Cli, a: &SweepArgs) -> Result<Report, UsageError> {
    let t = a.cartan_type;
    let mut jobs = sweep_jobs(t);
    for c in &a.cases {
        let spec = load_case(c)?;
        if spec.cartan_type != t {
            return Err(UsageError::CaseTypeMismatch {
                name: spec.name.clone(),
                case_type: spec.cartan_type.to_string(),
                requested: t.to_string(),
            });
        }
        jobs.push(Job::Case(spec.name.clone(), Box::new(spec)));
    }
    let l = algebra_for(t);
    let rows = run_rows(cli, jobs, |job| match job {
        Job::Case(_, spec) => case_row(cli, spec),
        _ => match representative(cli, &l, job) {
            Ok((id, kind, rigid, d)) => index_row(cli, &l, id, kind, rigid, &d),
            Err(e) => {
                let (id, kind) = job_id(job);
                unresolved(id, kind, e)
            }
        },
    });
    Ok(Report::new("verify elashvili", Some(t), cli, rows))
}

fn verify_bolsinov(cli: &Cli, t: CartanType) -> Report {
    let l = algebra_for(t);
    let rows = run_rows(cli, sweep_jobs(t), |job| {
        let (id, kind, rigid, d) = match representative(cli, &l, job) {
            Ok(x) => x,
            Err(e) => {
                let (id, kind) = job_id(job);
                return unresolved(id, kind, e);
            }
        };
        match check_criterion(&l, &d, cli.seed) {
            Ok(c) => {
                let props = c.report.as_ref().map(|r| r.all_hold());
                let status = if props == Some(false) {
                    Status::Failed
                } else if c.holds {
                    Status::Certified
                } else {
                    Status::Unresolved
                };
                let detail = match status {
                    Status::Failed => format!("shift-space property broken: {:?}", c.report),
                    _ => format!("dim V={} expected {}", c.dim_v, c.expected_dim_v),
                };
                Row {
                    id,
                    kind,
                    status,
                    dim_ge: Some(d.dim_centralizer),
                    dim_z: None,
                    rigid,
                    certificate: None,
                    bolsinov: Some(BolsinovSummary {
                        holds: c.holds,
                        dim_v: c.dim_v,
                        expected_dim_v: c.expected_dim_v,
                        x_seed: c.seed,
                        x_attempts: c.x_attempts,
                        properties_hold: props,
                    }),
                    case: None,
                    detail,
                    timing_ms: None,
                }
            }
            Err(e) => unresolved(id, kind, e.to_string()),
        }
    });
    Report::new("verify bolsinov", Some(t), cli, rows)
}

fn verify_appendix(cli: &Cli, cases: &[String]) -> Result<Report, UsageError> {
    let specs: Vec<RigidCaseSpec> = if cases.is_empty() {
        builtin_case_names().iter().map(|n| builtin_case(n).expect("shipped case parses")).collect()
    } else {
        cases.iter().map(|c| load_case(c)).collect::<Result<_, _>>()?
    };
    let jobs: Vec<Job> = specs.into_iter().map(|s| Job::Case(s.name.clone(), Box::new(s))).collect();
    let rows = run_rows(cli, jobs, |job| match job {
        Job::Case(_, spec) => case_row(cli, spec),
        _ => unreachable!(),
    });
    Ok(Report::new("verify appendix", None, cli, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(strict: bool) -> Cli {
        Cli::parse_from(if strict {
            vec!["liecert", "--strict", "algebra", "info", "--type", "A1"]
        } else {
            vec!["liecert", "algebra", "info", "--type", "A1"]
        })
    }

    #[test]
    fn exit_codes_follow_statuses() {
        let c = cli(false);
        let rows = vec![
            unresolved("a".into(), "partition", String::new()),
            unresolved("b".into(), "partition", String::new()),
        ];
        let r = Report::new("verify elashvili", None, &c, rows.clone());
        assert_eq!(r.totals.unresolved, 2);
        assert_eq!(r.exit_code(false), 0);
        assert_eq!(r.exit_code(cli(true).strict), 1);
        let mut with_fail = rows;
        with_fail.push(failed("c".into(), "case", "x".into()));
        assert_eq!(Report::new("verify appendix", None, &c, with_fail).exit_code(false), 1);
    }

    #[test]
    fn tsv_marks_missing_values() {
        let c = cli(false);
        let r = Report::new("verify bolsinov", None, &c, vec![unresolved("[2]".into(), "partition", "n/a".into())]);
        let tsv = r.to_tsv();
        assert!(tsv.contains("[2]\tpartition\tUNRESOLVED\t-\t-\t-\tn/a\n"));
        assert!(tsv.starts_with("# schema=liecert.report/1 command=verify bolsinov type=- seed=0 budget=8"));
    }
}
