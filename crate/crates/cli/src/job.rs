//! Jobs: one library operation per subcommand, rendered deterministically.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use f1hall::families::cyclic::{class_counts, verify_cyclic_bracket, verify_psi_homomorphism};
use f1hall::families::jordan::verify_jordan_iso;
use f1hall::families::type_a::type_a_indecomposables;
use f1hall::families::Verdict;
use f1hall::hall::HallAlgebra;
use f1hall::kacmoody::{
    positive_roots, rho_defect_report, serre_check, CartanMatrix, CompositionAlgebra, RhoReport,
    RHO_REPORT_HEADER,
};
use f1hall::names::{class_name, parse_class};
use f1hall::structure::{enumerate_indecomposables, enumerate_reps, indecomposable_summands};
use f1hall::{canonical_key, CanonicalKey, DimVector, Quiver};
use rayon::prelude::*;

use crate::format::{read_quiver, read_rep, FormatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    Indecomposables,
    Decompose,
    HallMult,
    HallComult,
    Serre,
    Roots,
    RhoReport,
    FamilyVerify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Tsv,
}

/// A fully specified invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub quiver_path: PathBuf,
    pub dim: Option<DimVector>,
    pub max_dim: Option<usize>,
    pub nilpotent: bool,
    pub jobs: Option<usize>,
    pub format: OutputFormat,
    /// Class names or hex keys, in command order.
    pub classes: Vec<String>,
    pub rep_path: Option<PathBuf>,
    pub max_power: Option<usize>,
}

impl JobSpec {
    pub fn new(command: Command, quiver_path: impl Into<PathBuf>) -> Self {
        JobSpec {
            command,
            quiver_path: quiver_path.into(),
            dim: None,
            max_dim: None,
            nilpotent: true,
            jobs: None,
            format: OutputFormat::Text,
            classes: Vec::new(),
            rep_path: None,
            max_power: None,
        }
    }
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Why a job did not succeed.
#[derive(Debug)]
enum Failure {
    /// Bad input: missing flag, unreadable file, malformed class.
    Usage(String),
    /// The computation ran and a checked identity failed.
    Verdict(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// IO errors already name the file; parse errors only carry a line number.
fn file_error(path: &Path, e: FormatError) -> Failure {
    match e {
        FormatError::Io { .. } => usage(e),
        FormatError::Parse { .. } => usage(format!("{}: {e}", path.display())),
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Out<'a> = &'a mut dyn Write;

/// Run `job`, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    // The report is assembled in memory so the worker pool never touches `out`.
    let mut buffer = Vec::new();
    let mut result = match job.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(job, &mut buffer)),
            Err(e) => Err(usage(e)),
        },
        None => dispatch(job, &mut buffer),
    };
    if let Err(e) = out.write_all(&buffer) {
        result = Err(e.into());
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verdict(msg)) => {
            let _ = writeln!(err, "verdict failed: {msg}");
            EXIT_VERDICT
        }
    }
}

fn dispatch(job: &JobSpec, out: Out) -> Result<(), Failure> {
    let quiver =
        Arc::new(read_quiver(&job.quiver_path).map_err(|e| file_error(&job.quiver_path, e))?);
    match job.command {
        Command::Enumerate => enumerate(job, &quiver, out),
        Command::Indecomposables => indecomposables(job, &quiver, out),
        Command::Decompose => decompose(job, &quiver, out),
        Command::HallMult => hall_mult(job, &quiver, out),
        Command::HallComult => hall_comult(job, &quiver, out),
        Command::Serre => serre(&quiver, out),
        Command::Roots => roots(&quiver, out),
        Command::RhoReport => rho_report(job, &quiver, out),
        Command::FamilyVerify => family_verify(job, &quiver, out),
    }
}

fn require_dim(job: &JobSpec, q: &Quiver) -> Result<DimVector, Failure> {
    let d = job.dim.clone().ok_or_else(|| usage("--dim is required"))?;
    if d.len() != q.num_vertices() {
        return Err(usage(format!(
            "--dim has {} entries but the quiver has {} vertices",
            d.len(),
            q.num_vertices()
        )));
    }
    Ok(d)
}

fn require_max_dim(job: &JobSpec) -> Result<usize, Failure> {
    job.max_dim.ok_or_else(|| usage("--max-dim is required"))
}

fn class_list(
    job: &JobSpec,
    q: &Arc<Quiver>,
    keys: &[CanonicalKey],
    out: Out,
) -> Result<(), Failure> {
    match job.format {
        OutputFormat::Tsv => {
            writeln!(out, "key\tdim\tname")?;
            for k in keys {
                writeln!(out, "{k}\t{}\t{}", k.dimension_vector(), class_name(q, k))?;
            }
        }
        OutputFormat::Text => {
            for k in keys {
                writeln!(
                    out,
                    "{:<16} dim ({})  {k}",
                    class_name(q, k),
                    k.dimension_vector()
                )?;
            }
            writeln!(out, "{} classes", keys.len())?;
        }
    }
    Ok(())
}

fn enumerate(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let d = require_dim(job, q)?;
    class_list(job, q, &enumerate_reps(q, &d, job.nilpotent), out)
}

fn indecomposables(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let n = require_max_dim(job)?;
    class_list(job, q, &enumerate_indecomposables(q, n, job.nilpotent), out)
}

fn parse_classes(
    job: &JobSpec,
    q: &Arc<Quiver>,
    count: usize,
) -> Result<Vec<CanonicalKey>, Failure> {
    if job.classes.len() != count {
        return Err(usage(format!(
            "expected {count} --class arguments, got {}",
            job.classes.len()
        )));
    }
    job.classes
        .iter()
        .map(|c| parse_class(q, c).map_err(usage))
        .collect()
}

fn decompose(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let rep = match (&job.rep_path, job.classes.as_slice()) {
        (Some(path), []) => read_rep(q, path).map_err(|e| file_error(path, e))?,
        (None, [c]) => parse_class(q, c).and_then(|k| k.decode(q)).map_err(usage)?,
        _ => return Err(usage("decompose takes exactly one of --rep or --class")),
    };
    let d = indecomposable_summands(&rep);
    match job.format {
        OutputFormat::Tsv => {
            writeln!(out, "key\tmultiplicity\tname")?;
            for (k, m) in d.iter() {
                writeln!(out, "{k}\t{m}\t{}", class_name(q, k))?;
            }
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{} = {}",
                canonical_key(&rep),
                class_name(q, &canonical_key(&rep))
            )?;
            for (k, m) in d.iter() {
                writeln!(out, "{m} x {:<16} {k}", class_name(q, k))?;
            }
        }
    }
    Ok(())
}

fn hall_mult(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let keys = parse_classes(job, q, 2)?;
    let (m, n) = (&keys[0], &keys[1]);
    let hall = HallAlgebra::new(q.clone());
    let product = hall.basis_product(m, n).map_err(usage)?;
    match job.format {
        OutputFormat::Tsv => {
            writeln!(out, "M_key\tN_key\tR_key\tvalue")?;
            for (r, c) in &product {
                writeln!(out, "{m}\t{n}\t{r}\t{c}")?;
            }
        }
        OutputFormat::Text => {
            let x = hall
                .product(
                    &hall.basis(m).map_err(usage)?,
                    &hall.basis(n).map_err(usage)?,
                )
                .map_err(usage)?;
            writeln!(
                out,
                "[{}]·[{}] = {}",
                class_name(q, m),
                class_name(q, n),
                x.render(|k| class_name(q, k))
            )?;
        }
    }
    Ok(())
}

fn hall_comult(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let keys = parse_classes(job, q, 1)?;
    let hall = HallAlgebra::new(q.clone());
    let x = hall.basis(&keys[0]).map_err(usage)?;
    let delta = hall.coproduct(&x).map_err(usage)?;
    match job.format {
        OutputFormat::Tsv => {
            writeln!(out, "A_key\tB_key\tcoefficient")?;
            for ((a, b), c) in &delta.terms {
                writeln!(out, "{a}\t{b}\t{c}")?;
            }
        }
        OutputFormat::Text => {
            let terms: Vec<String> = delta
                .terms
                .iter()
                .map(|((a, b), c)| format!("{c}*[{}]⊗[{}]", class_name(q, a), class_name(q, b)))
                .collect();
            writeln!(
                out,
                "Δ[{}] = {}",
                class_name(q, &keys[0]),
                terms.join(" + ")
            )?;
        }
    }
    Ok(())
}

fn serre(q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    if let Some(v) = q.self_loop() {
        return Err(usage(format!(
            "vertex {v} carries a loop; Serre relations need a loop-free quiver"
        )));
    }
    let r = q.num_vertices();
    let hall = HallAlgebra::new(q.clone());
    let pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| (0..r).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let verdicts = pairs
        .par_iter()
        .map(|&(i, j)| serre_check(&hall, i, j))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let mut failed = None;
    for v in &verdicts {
        let status = if v.holds() { "holds" } else { "FAILS" };
        writeln!(out, "({}, {})\ta_ij={}\t{status}", v.i, v.j, v.a_ij)?;
        if !v.holds() && failed.is_none() {
            let witness = v
                .witness
                .as_ref()
                .map(|k| class_name(q, k))
                .unwrap_or_default();
            failed = Some(format!("pair ({}, {}), witness class {witness}", v.i, v.j));
        }
    }
    match failed {
        None => {
            writeln!(out, "all Serre relations hold")?;
            Ok(())
        }
        Some(msg) => {
            writeln!(out, "Serre relation fails")?;
            Err(Failure::Verdict(msg))
        }
    }
}

fn roots(q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let a = CartanMatrix::from_quiver(q).map_err(usage)?;
    writeln!(out, "Cartan matrix")?;
    writeln!(out, "{a}")?;
    let roots = positive_roots(&a).map_err(usage)?;
    writeln!(out, "{} positive roots", roots.positive_roots.len())?;
    for r in &roots.positive_roots {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

fn rho_report(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let degrees: Vec<DimVector> = match (&job.dim, job.max_dim) {
        (Some(_), None) => vec![require_dim(job, q)?],
        (None, Some(n)) => DimVector::box_below(q.num_vertices(), n)
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect(),
        _ => return Err(usage("rho-report takes exactly one of --dim or --max-dim")),
    };
    let hall = HallAlgebra::new(q.clone());
    let roots = positive_roots(&CartanMatrix::from_quiver(q).map_err(usage)?).map_err(usage)?;
    let comp = CompositionAlgebra::new(&hall).map_err(usage)?;
    // Warm the lower degrees in order so parallel rows share the memo.
    let rows: Vec<RhoReport> = degrees
        .par_iter()
        .map(|alpha| rho_defect_report(&comp, &roots, alpha))
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    writeln!(out, "{RHO_REPORT_HEADER}")?;
    for r in &rows {
        writeln!(out, "{}", r.tsv_row())?;
    }
    Ok(())
}

/// `Some(orientation)` when the quiver is a path `0 - 1 - ... - (r-1)`.
fn path_orientation(q: &Quiver) -> Option<Vec<bool>> {
    let r = q.num_vertices();
    if q.num_edges() + 1 != r {
        return None;
    }
    (0..r - 1)
        .map(|k| match q.edges()[k] {
            (a, b) if a == k && b == k + 1 => Some(true),
            (a, b) if a == k + 1 && b == k => Some(false),
            _ => None,
        })
        .collect()
}

fn report_verdict(out: Out, what: &str, v: &Verdict) -> Result<Option<String>, Failure> {
    match &v.counterexample {
        None => {
            writeln!(out, "{what}: {} checks passed", v.checks)?;
            Ok(None)
        }
        Some(c) => {
            writeln!(out, "{what}: FAILED after {} checks: {c}", v.checks)?;
            Ok(Some(format!("{what}: {c}")))
        }
    }
}

fn family_verify(job: &JobSpec, q: &Arc<Quiver>, out: Out) -> Result<(), Failure> {
    let max_dim = job.max_dim.unwrap_or(4);
    let hall = HallAlgebra::new(q.clone());
    let mut failures = Vec::new();
    if q.is_jordan() {
        writeln!(out, "family: Jordan quiver")?;
        let v = verify_jordan_iso(&hall, max_dim).map_err(usage)?;
        failures.extend(report_verdict(
            out,
            "Hall product = monomial product, primitive commuting generators",
            &v,
        )?);
    } else if let Some(n) = q.cyclic_length() {
        writeln!(out, "family: cyclic quiver, n = {n}")?;
        let b = verify_cyclic_bracket(&hall, max_dim).map_err(usage)?;
        failures.extend(report_verdict(
            out,
            "closed-form bracket = engine commutator",
            &b,
        )?);
        let p = verify_psi_homomorphism(&hall, job.max_power.unwrap_or(2)).map_err(usage)?;
        failures.extend(report_verdict(
            out,
            "psi is a homomorphism to the opposite bracket",
            &p,
        )?);
        let mut counts = Verdict::default();
        for (d, (engine, tuples)) in class_counts(n, max_dim)
            .map_err(usage)?
            .into_iter()
            .enumerate()
        {
            counts.checks += 1;
            if engine != tuples && counts.counterexample.is_none() {
                counts.counterexample =
                    Some(format!("total {d}: {engine} classes, {tuples} tuples"));
            }
        }
        failures.extend(report_verdict(
            out,
            "class counts = n-tuples of partitions",
            &counts,
        )?);
    } else if let Some(orientation) = path_orientation(q) {
        writeln!(out, "family: type A, {} vertices", q.num_vertices())?;
        let mut intervals: Vec<CanonicalKey> = type_a_indecomposables(&orientation)
            .map_err(usage)?
            .into_iter()
            .map(|(_, k)| k)
            .collect();
        intervals.sort();
        let found = enumerate_indecomposables(q, q.num_vertices() + 1, true);
        let iv = Verdict {
            checks: 1,
            counterexample: (found != intervals).then(|| {
                format!(
                    "{} indecomposables, {} intervals",
                    found.len(),
                    intervals.len()
                )
            }),
        };
        failures.extend(report_verdict(out, "indecomposables = intervals", &iv)?);
        let roots = positive_roots(&CartanMatrix::from_quiver(q).map_err(usage)?).map_err(usage)?;
        let comp = CompositionAlgebra::new(&hall).map_err(usage)?;
        let mut defect = Verdict::default();
        for alpha in DimVector::box_below(q.num_vertices(), 2) {
            let r = rho_defect_report(&comp, &roots, &alpha).map_err(usage)?;
            defect.checks += 1;
            if (r.kernel(), r.cokernel()) != (0, 0) && defect.counterexample.is_none() {
                defect.counterexample = Some(r.tsv_row());
            }
        }
        failures.extend(report_verdict(
            out,
            "kernel and cokernel vanish (entries <= 2)",
            &defect,
        )?);
    } else {
        return Err(usage(
            "no closed-form family for this quiver (expected Jordan, cyclic or a path)",
        ));
    }
    if failures.is_empty() {
        writeln!(out, "all family identities hold")?;
        Ok(())
    } else {
        Err(Failure::Verdict(failures.join("; ")))
    }
}
