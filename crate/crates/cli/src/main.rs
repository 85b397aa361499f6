mod report;
mod source;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use starlab_core::family::align_all;
use starlab_core::solver::{Status, VerdictStatus};
use starlab_core::{
    build_instance, chi_probe, classify_properties, closed_form_ratio, family_to_string,
    gen_random, largest_stars, max_product_pair, max_product_tuple, save_family, threshold_holds,
    verify_main_theorem, ClassParams, Corpus, CorpusEntry, Error, GenLimits, SearchLimits,
    SetFamily, Side, SolveResult,
};

use report::{emit, render_witness, render_witnesses, OutputFormat, Report};
use source::{ClassArgs, ClassName, FamilySource};

/// Default seed for randomized generation.
const DEFAULT_SEED: u64 = 20240901;

#[derive(Parser)]
#[command(
    name = "starlab",
    version,
    about = "Exact t-star and cross-t-intersection computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write the report to a file instead of stdout.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone, Debug)]
struct LimitArgs {
    #[arg(long, default_value_t = 1_000_000_000)]
    node_budget: u64,
    /// Seconds.
    #[arg(long, default_value_t = 600)]
    time_budget: u64,
    #[arg(long, default_value_t = 1)]
    parallelism: usize,
    #[arg(long, default_value_t = 1000)]
    witness_cap: usize,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            time_budget: Duration::from_secs(self.time_budget.max(1)),
            ..SearchLimits::default()
        }
        .with_node_budget(self.node_budget)
        .with_parallelism(self.parallelism)
        .with_witness_cap(self.witness_cap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenClass {
    Level,
    Powerset,
    Sequences,
    Permutations,
    Multisets,
    Compositions,
    Partitions,
    Example1,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    /// The two-family product bound and its equality case.
    Main,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family and write it in the family JSON format.
    Gen {
        #[arg(value_enum)]
        class: GenClass,
        #[arg(long)]
        n: Option<usize>,
        /// Member size of the class.
        #[arg(long, visible_alias = "p")]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "base-r")]
        base_r: Option<usize>,
        /// Intersection level for example1.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long = "ex-r", value_delimiter = ',')]
        ex_r: Vec<usize>,
        #[arg(long = "ex-q", value_delimiter = ',')]
        ex_q: Vec<usize>,
        /// Number of members drawn for random families.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Output file; example1 writes one file per family with an index suffix.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Largest t-stars of a family.
    Stars {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: Output,
    },
    /// The threshold c(r,s,t) against a family's star ratio.
    Bounds {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: usize,
        /// Which declared bound the family must respect.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[command(flatten)]
        out: Output,
    },
    /// Maximum product of cross-t-intersecting subfamilies.
    Solve {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Decide the four cross-t-star properties.
    Classify {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustively check a theorem on a pair of families.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        source: FamilySource,
        /// Declared bound on the first family (defaults to its largest member).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Empirical sweep of the product bound over a corpus.
    Probe {
        /// Corpus file: {"entries":[{"left":{"class":"level","n":4,"r":2}}, ...]}.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        class: ClassArgs,
        /// Sweep n over this range with the other class flags fixed.
        #[arg(long = "n-min")]
        n_min: Option<usize>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    File(PathBuf, Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn in_file(path: &Path, e: Error) -> Self {
        CliError::File(path.to_path_buf(), e)
    }

    fn core(&self) -> Option<&Error> {
        match self {
            CliError::Usage(_) => None,
            CliError::Core(e) | CliError::File(_, e) => Some(e),
        }
    }

    fn kind(&self) -> &'static str {
        match self.core() {
            None => "usage",
            Some(Error::Encoding(_)) => "encoding",
            Some(Error::Parameter(_)) => "parameter",
            Some(Error::Resource(_)) => "resource",
            Some(Error::GroundMismatch { .. }) => "ground-mismatch",
            Some(Error::Overflow(_)) => "overflow",
            Some(Error::Parse { .. }) => "parse",
            Some(Error::Io(_)) => "io",
        }
    }

    fn exit_code(&self) -> u8 {
        match self.core() {
            Some(Error::Resource(_) | Error::Overflow(_)) => 3,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        let mut body = json!({ "kind": self.kind() });
        let message = match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) | CliError::File(_, e) => e.to_string(),
        };
        body["message"] = Value::String(message);
        if let CliError::File(p, _) = self {
            body["file"] = Value::String(p.display().to_string());
        }
        if let Some(Error::Parse { location, .. }) = self.core() {
            body["location"] = Value::String(location.clone());
        }
        json!({ "error": body })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// How a successful run ended.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Ok,
    Violation,
    Exhausted,
}

impl Outcome {
    fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Violation => 1,
            Outcome::Exhausted => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::usage(e.render().to_string().trim().to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Gen {
            class,
            n,
            r,
            m,
            base_r,
            t,
            ex_r,
            ex_q,
            count,
            seed,
            output,
        } => cmd_gen(
            class,
            ClassArgs {
                class: None,
                n,
                p: r,
                m,
                base_r,
                ex_r,
                ex_q,
                ex_t: t,
            },
            count,
            seed,
            output,
        ),
        Command::Stars { source, t, out } => cmd_stars(&source, t, &out),
        Command::Bounds {
            source,
            r,
            s,
            t,
            side,
            out,
        } => cmd_bounds(&source, r, s, t, side, &out),
        Command::Solve {
            source,
            t,
            limits,
            out,
        } => cmd_solve(&source, t, &limits.limits(), &out),
        Command::Classify {
            source,
            t,
            limits,
            out,
        } => cmd_classify(&source, t, &limits.limits(), &out),
        Command::Verify {
            theorem: Theorem::Main,
            source,
            r,
            s,
            t,
            limits,
            out,
        } => cmd_verify(&source, r, s, t, &limits.limits(), &out),
        Command::Probe {
            corpus,
            class,
            n_min,
            n_max,
            r,
            s,
            t,
            limits,
            out,
        } => cmd_probe(
            corpus.as_deref(),
            &class,
            n_min,
            n_max,
            r,
            s,
            t,
            &limits.limits(),
            &out,
        ),
    }
}

fn cmd_gen(
    class: GenClass,
    args: ClassArgs,
    count: Option<usize>,
    seed: u64,
    output: Option<PathBuf>,
) -> Result<Outcome, CliError> {
    let fams = if class == GenClass::Random {
        let n = args.n.ok_or_else(|| CliError::usage("random needs --n"))?;
        let count = count.ok_or_else(|| CliError::usage("random needs --count"))?;
        let max_size = args.p.unwrap_or(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        vec![gen_random(n, count, max_size, &mut rng)?]
    } else {
        let name = match class {
            GenClass::Level => ClassName::Level,
            GenClass::Powerset => ClassName::Powerset,
            GenClass::Sequences => ClassName::Sequences,
            GenClass::Permutations => ClassName::Permutations,
            GenClass::Multisets => ClassName::Multisets,
            GenClass::Compositions => ClassName::Compositions,
            GenClass::Partitions => ClassName::Partitions,
            GenClass::Example1 => ClassName::Example1,
            GenClass::Random => unreachable!("handled above"),
        };
        args.params(name, None)?.generate(&GenLimits::default())?
    };
    match output {
        Some(path) if fams.len() == 1 => {
            save_family(&path, &fams[0]).map_err(|e| CliError::in_file(&path, e))?
        }
        Some(path) => {
            for (i, f) in fams.iter().enumerate() {
                let p = indexed_path(&path, i + 1);
                save_family(&p, f).map_err(|e| CliError::in_file(&p, e))?;
            }
        }
        None => {
            for f in &fams {
                print!("{}", family_to_string(f));
            }
        }
    }
    Ok(Outcome::Ok)
}

/// `dir/name.json` becomes `dir/name_<i>.json`.
fn indexed_path(path: &Path, i: usize) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let ext = path
        .extension()
        .map(|e| format!(".{}", e.to_string_lossy()))
        .unwrap_or_default();
    path.with_file_name(format!("{stem}_{i}{ext}"))
}

fn cmd_stars(source: &FamilySource, t: usize, out: &Output) -> Result<Outcome, CliError> {
    if t < 1 {
        return Err(CliError::usage("--t must be at least 1"));
    }
    let (f, _) = source.single(Some(t))?;
    let rep = largest_stars(&f, t);
    let witnesses: Vec<Value> = rep
        .witnesses
        .iter()
        .map(|w| Value::String(f.format_member(w)))
        .collect();
    let json = json!({
        "command": "stars",
        "t": t,
        "members": f.len(),
        "l_value": rep.l_value,
        "witness_count": rep.witnesses.len(),
        "witnesses": witnesses,
    });
    let row = vec![
        t.to_string(),
        f.len().to_string(),
        rep.l_value.to_string(),
        rep.witnesses.len().to_string(),
    ];
    emit(
        Report {
            json,
            csv_header: &["t", "members", "l_value", "witness_count"],
            csv_rows: vec![row],
        },
        out.format,
        out.output.as_deref(),
    )?;
    Ok(Outcome::Ok)
}

fn cmd_bounds(
    source: &FamilySource,
    r: Option<usize>,
    s: Option<usize>,
    t: usize,
    side: SideArg,
    out: &Output,
) -> Result<Outcome, CliError> {
    let (f, params) = source.single(Some(t))?;
    let r = r.unwrap_or(f.max_size());
    let s = s.unwrap_or(r);
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let v = threshold_holds(&f, r, s, t, side)?;
    let mut json = json!({
        "command": "bounds",
        "r": r,
        "s": s,
        "t": t,
        "c": v.c_value.to_string(),
        "l_t": v.l_t.to_string(),
        "l_t1": v.l_t1.to_string(),
        "ratio": v.ratio().to_string(),
        "holds": v.holds,
    });
    let mut closed = String::new();
    if let Some(p) = params.filter(|p| !matches!(p, ClassParams::Powerset { .. })) {
        if let Ok(cf) = closed_form_ratio(&p, t) {
            closed = cf.ratio.to_string();
            json["closed_form"] = serde_json::to_value(cf).expect("serializable");
        }
    }
    let row = vec![
        r.to_string(),
        s.to_string(),
        t.to_string(),
        v.c_value.to_string(),
        v.l_t.to_string(),
        v.l_t1.to_string(),
        v.ratio().to_string(),
        v.holds.to_string(),
        closed,
    ];
    emit(
        Report {
            json,
            csv_header: &[
                "r",
                "s",
                "t",
                "c",
                "l_t",
                "l_t1",
                "ratio",
                "holds",
                "closed_form",
            ],
            csv_rows: vec![row],
        },
        out.format,
        out.output.as_deref(),
    )?;
    Ok(Outcome::Ok)
}

fn solve_json(fams: &[SetFamily], res: &SolveResult) -> Value {
    json!({
        "best_product": res.best_product.to_string(),
        "witness_count": res.witness_count,
        "witnesses": render_witnesses(fams, &res.witnesses),
        "optimal": res.optimal,
        "status": if res.optimal { "optimal" } else { "budget-exhausted" },
        "stats": res.stats,
    })
}

fn sizes(fams: &[SetFamily]) -> String {
    fams.iter()
        .map(|f| f.len().to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_solve(
    source: &FamilySource,
    t: usize,
    limits: &SearchLimits,
    out: &Output,
) -> Result<Outcome, CliError> {
    let (fams, _) = source.families(Some(t))?;
    let (fams, res) = if fams.len() == 2 {
        let inst = build_instance(&fams[0], &fams[1], t)?;
        let res = max_product_pair(&inst, limits);
        (vec![inst.left, inst.right], res)
    } else {
        let res = max_product_tuple(&fams, t, limits)?;
        (align_all(&fams)?, res)
    };
    let mut json = solve_json(&fams, &res);
    json["command"] = json!("solve");
    json["t"] = json!(t);
    json["family_sizes"] = json!(fams.iter().map(SetFamily::len).collect::<Vec<_>>());
    let row = vec![
        t.to_string(),
        sizes(&fams),
        res.best_product.to_string(),
        res.witness_count.to_string(),
        res.optimal.to_string(),
    ];
    emit(
        Report {
            json,
            csv_header: &[
                "t",
                "family_sizes",
                "best_product",
                "witness_count",
                "optimal",
            ],
            csv_rows: vec![row],
        },
        out.format,
        out.output.as_deref(),
    )?;
    Ok(if res.optimal {
        Outcome::Ok
    } else {
        Outcome::Exhausted
    })
}

fn verdict_json(fams: &[SetFamily], v: &starlab_core::solver::Verdict) -> Value {
    json!({
        "status": v.status,
        "t_set": v.t_set,
        "counterexample": v.counterexample.as_ref().map(|w| render_witness(fams, w)),
        "degenerate": v.degenerate,
    })
}

fn cmd_classify(
    source: &FamilySource,
    t: usize,
    limits: &SearchLimits,
    out: &Output,
) -> Result<Outcome, CliError> {
    let (fams, _) = source.families(Some(t))?;
    let rep = classify_properties(&fams, t, limits)?;
    let fams = align_all(&fams)?;
    let names = ["cross_t_star", "strict", "strong", "extrastrong"];
    let verdicts = [
        &rep.cross_t_star,
        &rep.strict,
        &rep.strong,
        &rep.extrastrong,
    ];
    let mut props = serde_json::Map::new();
    for (n, v) in names.iter().zip(verdicts) {
        props.insert((*n).into(), verdict_json(&fams, v));
    }
    let json = json!({
        "command": "classify",
        "t": t,
        "family_sizes": fams.iter().map(SetFamily::len).collect::<Vec<_>>(),
        "star_sizes": rep.star_sizes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "star_product": rep.star_product.to_string(),
        "best_conjugate_product": rep.best_conjugate_product.to_string(),
        "solve": solve_json(&fams, &rep.solve),
        "properties": Value::Object(props),
    });
    let status = |v: &starlab_core::solver::Verdict| {
        serde_json::to_value(v.status)
            .expect("serializable")
            .as_str()
            .unwrap_or_default()
            .to_string()
    };
    let row = vec![
        t.to_string(),
        sizes(&fams),
        rep.solve.best_product.to_string(),
        rep.star_product.to_string(),
        status(&rep.cross_t_star),
        status(&rep.strict),
        status(&rep.strong),
        status(&rep.extrastrong),
    ];
    emit(
        Report {
            json,
            csv_header: &[
                "t",
                "family_sizes",
                "best_product",
                "star_product",
                "cross_t_star",
                "strict",
                "strong",
                "extrastrong",
            ],
            csv_rows: vec![row],
        },
        out.format,
        out.output.as_deref(),
    )?;
    let inconclusive = verdicts
        .iter()
        .any(|v| v.status == VerdictStatus::Inconclusive);
    Ok(if inconclusive {
        Outcome::Exhausted
    } else {
        Outcome::Ok
    })
}

fn cmd_verify(
    source: &FamilySource,
    r: Option<usize>,
    s: Option<usize>,
    t: usize,
    limits: &SearchLimits,
    out: &Output,
) -> Result<Outcome, CliError> {
    let (fams, _) = source.families(Some(t))?;
    if fams.len() != 2 {
        return Err(CliError::usage("verify main takes exactly two families"));
    }
    let r = r.unwrap_or(fams[0].max_size());
    let s = s.unwrap_or(fams[1].max_size());
    let rep = verify_main_theorem(&fams[0], &fams[1], r, s, t, limits)?;
    let pair = align_all(&fams)?;
    let mut json = serde_json::to_value(&rep).expect("serializable");
    json["solve"] = solve_json(&pair, &rep.solve);
    json["counterexample"] = rep
        .counterexample
        .as_ref()
        .map(|w| render_witness(&pair, w))
        .unwrap_or(Value::Null);
    json["command"] = json!("verify");
    json["theorem"] = json!("main");
    json["r"] = json!(r);
    json["s"] = json!(s);
    json["t"] = json!(t);
    let status = serde_json::to_value(rep.status).expect("serializable");
    let row = vec![
        r.to_string(),
        s.to_string(),
        t.to_string(),
        status.as_str().unwrap_or_default().to_string(),
        rep.premise_left.holds.to_string(),
        rep.premise_right.holds.to_string(),
        rep.bound_check.best_product.to_string(),
        rep.bound_check.star_product.to_string(),
        rep.uniqueness_check.holds.to_string(),
    ];
    emit(
        Report {
            json,
            csv_header: &[
                "r",
                "s",
                "t",
                "status",
                "premise_left",
                "premise_right",
                "best_product",
                "star_product",
                "uniqueness",
            ],
            csv_rows: vec![row],
        },
        out.format,
        out.output.as_deref(),
    )?;
    Ok(match rep.status {
        Status::Violation => Outcome::Violation,
        Status::Inconclusive => Outcome::Exhausted,
        Status::Verified | Status::PremiseUnmet => Outcome::Ok,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_probe(
    corpus: Option<&Path>,
    class: &ClassArgs,
    n_min: Option<usize>,
    n_max: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    t: usize,
    limits: &SearchLimits,
    out: &Output,
) -> Result<Outcome, CliError> {
    let corpus_def = match (corpus, class.class) {
        (Some(_), Some(_)) => {
            return Err(CliError::usage("give either --corpus or --class, not both"))
        }
        (None, None) => {
            return Err(CliError::usage(
                "no corpus: give --corpus or --class with --n-min/--n-max",
            ))
        }
        (Some(path), None) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::in_file(path, e.into()))?;
            serde_json::from_str::<Corpus>(&text).map_err(|e| {
                CliError::in_file(
                    path,
                    Error::Parse {
                        location: format!("line {} column {}", e.line(), e.column()),
                        message: e.to_string(),
                    },
                )
            })?
        }
        (None, Some(name)) => {
            let lo = n_min
                .or(class.n)
                .ok_or_else(|| CliError::usage("probe needs --n-min or --n"))?;
            let hi = n_max.unwrap_or(lo);
            let mut entries = Vec::new();
            for n in lo..=hi {
                let args = ClassArgs {
                    n: Some(n),
                    ..class.clone()
                };
                entries.push(CorpusEntry {
                    left: args.params(name, Some(t))?,
                    right: None,
                });
            }
            Corpus { entries }
        }
    };
    let r = r
        .or(class.p)
        .ok_or_else(|| CliError::usage("probe needs --r (or --p)"))?;
    let s = s.unwrap_or(r);
    let rep = chi_probe(r, s, t, &corpus_def, limits)?;
    let json = json!({
        "command": "probe",
        "report": rep,
    });
    let rows = rep
        .instances
        .iter()
        .map(|i| {
            vec![
                serde_json::to_string(&i.left).expect("serializable"),
                serde_json::to_string(&i.right).expect("serializable"),
                i.ratio_f.to_string(),
                i.ratio_g.to_string(),
                i.best_product.to_string(),
                i.star_product.to_string(),
                i.bound_holds.to_string(),
                i.premise_holds.to_string(),
            ]
        })
        .collect();
    emit(
        Report {
            json,
            csv_header: &[
                "left",
                "right",
                "ratio_f",
                "ratio_g",
                "best_product",
                "star_product",
                "bound_holds",
                "premise_holds",
            ],
            csv_rows: rows,
        },
        out.format,
        out.output.as_deref(),
    )?;
    if rep
        .instances
        .iter()
        .any(|i| i.premise_holds && !i.bound_holds && i.optimal)
    {
        Ok(Outcome::Violation)
    } else if rep.incomplete {
        Ok(Outcome::Exhausted)
    } else {
        Ok(Outcome::Ok)
    }
}
