//! Argument parsing and dispatch for the `pieri` binary.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pieri_core::betti::{bs_decompose_equivariant, bs_decompose_numeric_with, EquivariantBettiTable, Outcome, Pivot};
use pieri_core::classical::{dotted_bott, sheaf_pieri_terms, BottResult, Family, GroupType};
use pieri_core::minimize::minimize;
use pieri_core::olver::{increasing_order, OlverContext};
use pieri_core::resolution::{
    euler_matches_cokernel, pure_family, pure_resolution, resolve_terms, verify_euler, CokernelSpec, EquivariantComplex,
    Provenance,
};
use pieri_core::symfunc::{PieriKind, DEFAULT_EFFORT};
use pieri_core::{Error, Partition, DEFAULT_SIZE_CAP};

use crate::json::{
    AnyTable, BottJson, CheckJson, ClassicalTermsJson, ComplexJson, EquivariantDecompositionJson, EulerJson,
    MinimizedJson, NumericDecompositionJson, OlverJson, ResolveJson, TableJson, VerifyJson,
};
use crate::{golden, render};

#[derive(Parser, Debug)]
#[command(name = "pieri", version, about = "Equivariant Pieri resolutions, Betti tables and Boij-Söderberg decompositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Accepted for harness compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Draw Young diagrams, `lambda_i` boxes in column `i`.
    #[arg(long, global = true)]
    pub diagrams: bool,
    /// Search bound for positivity witnesses and minimization.
    #[arg(long, global = true, default_value_t = DEFAULT_EFFORT)]
    pub effort: u32,
    /// Degrees through which module characters are expanded.
    #[arg(long = "degree-bound", global = true, default_value_t = 8)]
    pub degree_bound: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PivotArg {
    Top,
    Bottom,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Resolve the cokernel of the relations `--betas` on `S_alpha V`.
    Resolve {
        #[arg(long, visible_alias = "rank")]
        n: usize,
        #[arg(long)]
        alpha: String,
        /// Relations separated by `;`.
        #[arg(long)]
        betas: String,
        /// Report cancellation candidates without computing exact multiplicities.
        #[arg(long)]
        no_minimize: bool,
    },
    /// A pure resolution, or the whole family for a jump sequence.
    Pure {
        #[arg(long, visible_alias = "rank")]
        n: usize,
        #[arg(long, requires = "beta", conflicts_with = "jumps")]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        /// Jump sequence `(e_0,...,e_n)` with `e_0 = 0`.
        #[arg(long)]
        jumps: Option<String>,
    },
    /// Boij-Söderberg decomposition of a JSON table.
    Decompose {
        #[arg(long)]
        table: PathBuf,
        /// Number of variables for Schur entries (overrides the file).
        #[arg(long, visible_alias = "rank")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "top")]
        pivot: PivotArg,
    },
    /// The explicit Pieri inclusion `S_beta V -> Sym^b V ⊗ S_alpha V`.
    Olver {
        #[arg(long, visible_alias = "rank")]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Removal order as 1-based columns; defaults to increasing columns.
        #[arg(long)]
        order: Option<String>,
        /// Use `∧^b V` instead of `Sym^b V`.
        #[arg(long)]
        exterior: bool,
    },
    /// Bott's theorem for a weight of a classical group.
    Bott {
        #[arg(long = "type")]
        family: String,
        #[arg(long, visible_alias = "n")]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Terms of the resolution over an orthogonal or symplectic group.
    ClassicalTerms {
        #[arg(long = "type")]
        family: String,
        #[arg(long, visible_alias = "n")]
        rank: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        betas: String,
    },
    /// Recompute every worked example and report pass/fail.
    Verify,
}

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Default)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn parse_partition(s: &str) -> Res<Partition> {
    s.parse::<Partition>().map_err(Failure::from)
}

fn parse_partitions(s: &str) -> Res<Vec<Partition>> {
    let v: Vec<Partition> = s
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_partition)
        .collect::<Res<_>>()?;
    if v.is_empty() {
        return Err(Failure::Usage(format!("no partitions in `{s}`")));
    }
    Ok(v)
}

fn parse_ints<T: std::str::FromStr>(s: &str) -> Res<Vec<T>> {
    let t = s.trim();
    let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
    inner
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Failure::Usage(format!("bad integer `{x}` in `{s}`"))))
        .collect()
}

fn size_cap() -> Res<u64> {
    match std::env::var("PIERI_SIZE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("PIERI_SIZE_CAP: bad value `{v}`"))),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Report { code, stdout: text, stderr: String::new() }
            } else {
                Report { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let out = cli.out.clone();
    let result = dispatch(&cli);
    let (code, body, err) = match result {
        Ok(body) => (0, body, String::new()),
        Err(Failure::Verification(body)) => (1, body, "verification failed\n".to_string()),
        Err(Failure::Usage(msg)) => (2, String::new(), format!("error: {msg}\n")),
    };
    if let Some(path) = out {
        if code != 2 {
            if let Err(e) = std::fs::write(&path, &body) {
                return Report { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) };
            }
            return Report { code, stdout: String::new(), stderr: err };
        }
    }
    Report { code, stdout: body, stderr: err }
}

fn dispatch(cli: &Cli) -> Res<String> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Resolve { n, alpha, betas, no_minimize } => {
            let spec = CokernelSpec::new(parse_partition(alpha)?, parse_partitions(betas)?, *n)?;
            resolve(cli, &spec, !no_minimize)
        }
        Command::Pure { n, alpha, beta, jumps } => {
            let complexes = match (alpha, beta, jumps) {
                (Some(a), Some(b), None) => vec![pure_resolution(&parse_partition(a)?, &parse_partition(b)?, *n)?],
                (None, None, Some(e)) => pure_family(&parse_ints::<u32>(e)?, *n)?,
                _ => return Err(Failure::Usage("pure needs either --alpha and --beta, or --jumps".into())),
            };
            if json {
                let v: Vec<ComplexJson> = complexes.iter().map(ComplexJson::from).collect();
                return Ok(if v.len() == 1 { to_json(&v[0]) } else { to_json(&v) });
            }
            Ok(complexes.iter().map(|c| render::complex(c, cli.diagrams)).collect::<Vec<_>>().join("\n"))
        }
        Command::Decompose { table, n, pivot } => {
            let text = std::fs::read_to_string(table)
                .map_err(|e| Failure::Usage(format!("{}: {e}", table.display())))?;
            let tj: TableJson =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", table.display())))?;
            let pivot = match pivot {
                PivotArg::Top => Pivot::Top,
                PivotArg::Bottom => Pivot::Bottom,
            };
            match tj.parse(*n)? {
                AnyTable::Numeric(t) => {
                    let d = bs_decompose_numeric_with(&t, pivot);
                    if json {
                        return Ok(to_json(&NumericDecompositionJson::from(&d)));
                    }
                    let mut s = String::new();
                    for st in &d.steps {
                        let _ = writeln!(s, "{} * pure{:?}", st.coefficient, st.degrees);
                        for line in st.pure.to_string().lines() {
                            let _ = writeln!(s, "    {line}");
                        }
                    }
                    if d.is_success() {
                        s.push_str("residual: 0\n");
                    } else {
                        let _ = write!(s, "residual:\n{}", d.residual);
                    }
                    Ok(s)
                }
                AnyTable::Equivariant(t) => {
                    let d = bs_decompose_equivariant(&t, &[], pivot, cli.effort)?;
                    if json {
                        return Ok(to_json(&EquivariantDecompositionJson::from(&d)));
                    }
                    let mut s = String::new();
                    for st in &d.steps {
                        let _ = writeln!(s, "{} * pure{:?}  (value {})", st.coefficient, st.degrees, st.coefficient.numeric());
                    }
                    let _ = writeln!(s, "outcome: {}", outcome_text(&d.outcome));
                    if !d.residual.is_zero() {
                        let _ = write!(s, "residual (times {}):\n{}", d.residual_den, render::equivariant_table(&d.residual));
                    }
                    Ok(s)
                }
            }
        }
        Command::Olver { n, alpha, beta, order, exterior } => {
            let (a, b) = (parse_partition(alpha)?, parse_partition(beta)?);
            let order = match order {
                Some(o) => parse_ints::<usize>(o)?,
                None => increasing_order(&b, &a),
            };
            let kind = if *exterior { PieriKind::Exterior } else { PieriKind::Symmetric };
            let mut ctx = OlverContext::new(size_cap()?);
            let m = ctx.pieri_inclusion(&b, &a, *n, &order, kind)?;
            let j = OlverJson::new(&m, *n, &a, &b, &order, *exterior);
            if json {
                return Ok(to_json(&j));
            }
            let mut s = String::new();
            let _ = writeln!(s, "{} -> {} ⊗ {}, order {:?}", b.text_padded(*n), if *exterior { "∧" } else { "Sym" }, a.text_padded(*n), order);
            let _ = writeln!(s, "rank {} of {} domain tableaux, {} codomain basis vectors", j.rank, j.domain.len(), j.codomain.len());
            for (r, c, v) in &j.entries {
                let cod = &j.codomain[*r];
                let _ = writeln!(s, "{:?} -> {v} * {:?} ⊗ {:?}", j.domain[*c], cod.word, cod.tableau);
            }
            Ok(s)
        }
        Command::Bott { family, rank, weight } => {
            let g = GroupType::new(family.parse::<Family>()?, *rank)?;
            let w = parse_ints::<i64>(weight)?;
            let b = dotted_bott(g, &w)?;
            if json {
                return Ok(to_json(&BottJson::from(&b)));
            }
            Ok(match b {
                BottResult::Zero => "zero\n".to_string(),
                BottResult::Nonzero { degree, weight, dualized } => {
                    format!("H^{degree} = V{weight:?}{}\n", if dualized { " (dual)" } else { "" })
                }
            })
        }
        Command::ClassicalTerms { family, rank, alpha, betas } => {
            let g = GroupType::new(family.parse::<Family>()?, *rank)?;
            let s = sheaf_pieri_terms(g, &parse_partition(alpha)?, &parse_partitions(betas)?)?;
            let j = ClassicalTermsJson::from(&s);
            if json {
                return Ok(to_json(&j));
            }
            let mut out = String::new();
            let _ = writeln!(out, "type {}{}, {}", j.family, j.rank, if j.minimal { "minimal" } else { "minimality not guaranteed" });
            for t in &j.terms {
                let _ = writeln!(out, "F{}: {:?}[{}]  grade {} from {:?}", t.hom, t.weight, t.degree, t.grade, t.source);
            }
            Ok(out)
        }
        Command::Verify => verify(json),
    }
}

fn outcome_text(o: &Outcome) -> String {
    match o {
        Outcome::Success => "success".into(),
        Outcome::NotPositive { hom, degree, weight } => {
            format!("entry ({hom},{degree}) is not a positive fraction; witness weight {weight}")
        }
        Outcome::Unknown { hom, degree } => format!("positivity of entry ({hom},{degree}) undecided"),
        Outcome::Stuck => "pivot sequence is not a degree sequence".into(),
    }
}

fn resolve(cli: &Cli, spec: &CokernelSpec, minimize_cone: bool) -> Res<String> {
    let c = resolve_terms(spec)?;
    let bound = cli.degree_bound;
    let report = verify_euler(&c, bound);
    let euler = EulerJson::new(&report, bound, euler_matches_cokernel(&c, spec, bound));
    let minimized = if minimize_cone && c.provenance == Provenance::PossiblyNonminimal {
        Some(minimize(&c, spec, cli.effort, size_cap()?)?)
    } else {
        None
    };
    let table = |c: &EquivariantComplex| EquivariantBettiTable::from_complex(c).to_numeric();
    if cli.format == Format::Json {
        return Ok(to_json(&ResolveJson {
            n: spec.n,
            alpha: spec.alpha.padded(spec.n),
            relations: spec.relations.iter().map(|b| b.padded(spec.n)).collect(),
            complex: ComplexJson::from(&c),
            minimized: minimized.as_ref().map(MinimizedJson::new),
            betti: TableJson::from_numeric(&table(&c)),
            euler,
        }));
    }
    let mut s = render::complex(&c, cli.diagrams);
    let _ = write!(s, "Betti table:\n{}", table(&c));
    if let Some(r) = &minimized {
        for x in &r.cancellations {
            let _ = writeln!(s, "cancel {}x {}[{}] between F{} and F{}", x.count, x.partition.text_padded(spec.n), x.degree, x.hom, x.hom + 1);
        }
        s.push_str(if r.complete { "minimal resolution:\n" } else { "partially minimized:\n" });
        s.push_str(&render::complex(&r.complex, cli.diagrams));
        let _ = write!(s, "Betti table:\n{}", table(&r.complex));
    }
    let _ = writeln!(
        s,
        "Euler characteristic through degree {bound}: {}, {}, {}",
        if euler.matches_cokernel { "matches the cokernel" } else { "DOES NOT match the cokernel" },
        if euler.positive { "Schur-positive" } else { "not Schur-positive" },
        if euler.finite_length { "finite length" } else { "infinite length" },
    );
    Ok(s)
}

fn verify(json: bool) -> Res<String> {
    let results = golden::run_all();
    let failed = results.iter().filter(|r| r.1.is_err()).count();
    let body = if json {
        to_json(&VerifyJson {
            passed: results.len() - failed,
            failed,
            checks: results
                .iter()
                .map(|(name, r)| CheckJson {
                    name: name.to_string(),
                    passed: r.is_ok(),
                    detail: r.as_ref().err().cloned().unwrap_or_default(),
                })
                .collect(),
        })
    } else {
        let mut s = String::new();
        for (name, r) in &results {
            match r {
                Ok(()) => {
                    let _ = writeln!(s, "PASS {name}");
                }
                Err(e) => {
                    let _ = writeln!(s, "FAIL {name}: {e}");
                }
            }
        }
        let _ = writeln!(s, "{} passed, {failed} failed", results.len() - failed);
        s
    };
    if failed > 0 {
        Err(Failure::Verification(body))
    } else {
        Ok(body)
    }
}
