//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input
//! (files or flag values), 3 precondition violation on a well-formed
//! graph.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use idcode::certify::SeparationFailure;
use idcode::construct::{self, ConstructionReport};
use idcode::families::{self, FamilySpec};
use idcode::indep::FractionProvider;
use idcode::vertex_set::VertexSet;
use idcode::{bounds, certify, exact, io, Error, Graph, Result};

#[derive(Parser)]
#[command(
    name = "idcode",
    version,
    about = "Constructs and certifies identifying codes in triangle-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug)]
enum VariantFlag {
    Main,
    Bipartite,
    Chromatic(usize),
    NoFalseTwins,
}

fn parse_variant_flag(s: &str) -> std::result::Result<VariantFlag, String> {
    match s {
        "main" => Ok(VariantFlag::Main),
        "bipartite" => Ok(VariantFlag::Bipartite),
        "nofalsetwins" => Ok(VariantFlag::NoFalseTwins),
        _ => match s.strip_prefix("chromatic:") {
            Some(k) => {
                let k: usize = k
                    .parse()
                    .map_err(|_| format!("`{s}`: expected chromatic:<count>"))?;
                if k < 2 {
                    return Err("chromatic needs at least 2 colours".into());
                }
                Ok(VariantFlag::Chromatic(k))
            }
            None => Err(format!(
                "`{s}` is not a variant (main, bipartite, chromatic:<k>, nofalsetwins)"
            )),
        },
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a certified identifying code for the graph in FILE.
    Construct {
        file: PathBuf,
        /// main | bipartite | chromatic:<k> | nofalsetwins
        #[arg(long, default_value = "main", value_parser = parse_variant_flag)]
        variant: VariantFlag,
        /// Emit the run record as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Report wall_time_ms as 0 so outputs are byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check whether a vertex set is an identifying code for FILE.
    Verify {
        file: PathBuf,
        /// Vertex ids, comma or space separated.
        #[arg(long)]
        code: String,
    },
    /// Exhaustively compute a minimum identifying code (small graphs).
    Exact {
        file: PathBuf,
        /// Largest vertex count the solver will accept.
        #[arg(long, default_value_t = exact::DEFAULT_VERTEX_LIMIT)]
        limit: usize,
    },
    /// Run the bound suites and print one record per instance.
    Bench {
        /// Deterministic family suite with per-family bound summaries.
        #[arg(long)]
        families: bool,
        /// Random triangle-free instances: N M COUNT SEED.
        #[arg(long, num_args = 4, value_names = ["N", "M", "COUNT", "SEED"])]
        random: Option<Vec<u64>>,
        /// Emit CSV instead of the aligned table.
        #[arg(long)]
        csv: bool,
        /// Report wall_time_ms as 0 so outputs are byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Generate a family instance in native edge-list format.
    Gen {
        /// One of: path:<n>, cycle:<n>, star:<n>, complete-bipartite:<a>,<b>,
        /// kary:<arity>,<height>, subdivided-complete:<n>,
        /// random-bipartite:<a>,<b>,<p>,<seed>, random-triangle-free:<n>,<m>,<seed>
        #[arg(value_parser = parse_family_flag)]
        spec: FamilySpec,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// One benchmark/report row. Serialized as-is to JSON; the CSV columns are
/// these fields in declaration order.
#[derive(Serialize)]
struct RunRecord {
    input: String,
    n: usize,
    delta: usize,
    variant: String,
    case_taken: String,
    code_size: usize,
    bound_value: f64,
    exact_size: Option<usize>,
    wall_time_ms: f64,
}

impl RunRecord {
    fn from_report(
        input: String,
        report: &ConstructionReport,
        exact_size: Option<usize>,
        wall_time_ms: f64,
    ) -> RunRecord {
        RunRecord {
            input,
            n: report.n,
            delta: report.delta,
            variant: report.variant.to_string(),
            case_taken: report.case_taken.to_string(),
            code_size: report.code.len(),
            bound_value: report.bound_value,
            exact_size,
            wall_time_ms,
        }
    }

    fn skipped(input: String, g: &Graph, err: &Error) -> RunRecord {
        RunRecord {
            input,
            n: g.n(),
            delta: g.max_degree(),
            variant: format!("error({})", err.to_string().replace(',', ";")),
            case_taken: "skipped".into(),
            code_size: 0,
            bound_value: 0.0,
            exact_size: None,
            wall_time_ms: 0.0,
        }
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6},{},{:.3}",
            self.input,
            self.n,
            self.delta,
            self.variant,
            self.case_taken,
            self.code_size,
            self.bound_value,
            self.exact_size.map_or(String::new(), |e| e.to_string()),
            self.wall_time_ms
        )
    }
}

const CSV_HEADER: &str =
    "input,n,delta,variant,case_taken,code_size,bound_value,exact_size,wall_time_ms";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 3 })
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Construct {
            file,
            variant,
            json,
            no_timing,
        } => cmd_construct(&file, variant, json, no_timing),
        Command::Verify { file, code } => cmd_verify(&file, &code),
        Command::Exact { file, limit } => cmd_exact(&file, limit),
        Command::Bench {
            families,
            random,
            csv,
            no_timing,
        } => cmd_bench(families, random, csv, no_timing),
        Command::Gen { spec, out } => cmd_gen(&spec, out.as_deref()),
    }
}

fn cmd_construct(
    file: &Path,
    variant: VariantFlag,
    json: bool,
    no_timing: bool,
) -> Result<ExitCode> {
    let g = io::read_graph(file)?;
    let start = Instant::now();
    let report = match variant {
        VariantFlag::Main => construct::build_identifying_code(&g)?,
        VariantFlag::Bipartite => {
            construct::build_with_fraction(&g, &FractionProvider::Chromatic(2))?
        }
        VariantFlag::Chromatic(k) => {
            construct::build_with_fraction(&g, &FractionProvider::Chromatic(k))?
        }
        VariantFlag::NoFalseTwins => construct::build_no_false_twins(&g)?,
    };
    let wall = wall_ms(start, no_timing);
    if json {
        let record = RunRecord::from_report(display_name(file), &report, None, wall);
        println!("{}", serde_json::to_string(&record).expect("record is serializable"));
    } else {
        println!("code: {}", join_ids(&report.code));
        println!("size: {}", report.code.len());
        println!("bound: {:.6}", report.bound_value);
        println!("case: {}", report.case_taken);
        println!("variant: {}", report.variant);
        if let Some(note) = &report.note {
            println!("note: {note}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(file: &Path, code: &str) -> Result<ExitCode> {
    let g = io::read_graph(file)?;
    let ids = io::parse_id_list(code)?;
    let mut set = VertexSet::new(g.n());
    for v in ids {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
        set.insert(v);
    }
    let failures = certify::identifying_failures(&g, &set);
    if failures.is_empty() {
        println!("OK: {} vertices identify the graph", set.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL: {} failure(s)", failures.len());
        for f in failures {
            match f {
                SeparationFailure::Undominated { vertex } => println!("undominated: {vertex}"),
                SeparationFailure::Unseparated { u, v } => println!("unseparated: {u} {v}"),
            }
        }
        Ok(ExitCode::from(1))
    }
}

fn cmd_exact(file: &Path, limit: usize) -> Result<ExitCode> {
    let g = io::read_graph(file)?;
    let result = exact::min_identifying_code(&g, limit)?;
    println!("minimum size: {}", result.size);
    println!("witness: {}", join_ids(&result.witness));
    println!("nodes explored: {}", result.explored);
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    families: bool,
    random: Option<Vec<u64>>,
    csv: bool,
    no_timing: bool,
) -> Result<ExitCode> {
    let mut rows: Vec<RunRecord> = Vec::new();
    let mut summaries: Vec<String> = Vec::new();

    if families {
        run_family_suite(&mut rows, &mut summaries, no_timing)?;
    }
    if let Some(args) = random {
        let [n, m, count, seed] = args[..] else {
            return Err(Error::Family("--random expects N M COUNT SEED".into()));
        };
        run_random_suite(&mut rows, n as usize, m as usize, count, seed, no_timing)?;
    }

    if csv {
        println!("{CSV_HEADER}");
        for row in &rows {
            println!("{}", row.csv_row());
        }
        for line in &summaries {
            println!("# {line}");
        }
    } else {
        print_table(&rows);
        for line in &summaries {
            println!("{line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The deterministic family instances, named so rows are recognisable.
fn family_suite() -> Vec<(&'static str, FamilySpec)> {
    vec![
        ("star_5", FamilySpec::Star(5)),
        ("star_8", FamilySpec::Star(8)),
        ("kdd_3", FamilySpec::CompleteBipartite(3, 3)),
        ("kdd_4", FamilySpec::CompleteBipartite(4, 4)),
        ("tree_2_2", FamilySpec::KaryTree { arity: 2, height: 2 }),
        ("tree_2_3", FamilySpec::KaryTree { arity: 2, height: 3 }),
        ("tree_3_2", FamilySpec::KaryTree { arity: 3, height: 2 }),
        ("subdivided_k4", FamilySpec::SubdividedComplete(4)),
        ("subdivided_k5", FamilySpec::SubdividedComplete(5)),
        (
            "bipartite_rand",
            // Seed chosen so the sampled graph is connected.
            FamilySpec::RandomBipartite { a: 15, b: 15, p: 0.2, seed: 2 },
        ),
    ]
}

fn run_family_suite(
    rows: &mut Vec<RunRecord>,
    summaries: &mut Vec<String>,
    no_timing: bool,
) -> Result<()> {
    let mut girth5: Vec<&str> = Vec::new();
    for (name, spec) in family_suite() {
        let g = families::generate(&spec)?;
        let start = Instant::now();
        match construct::build_identifying_code(&g) {
            Ok(report) => {
                let wall = wall_ms(start, no_timing);
                let exact_size = if g.n() <= exact::DEFAULT_VERTEX_LIMIT {
                    exact::min_identifying_code(&g, exact::DEFAULT_VERTEX_LIMIT)
                        .ok()
                        .map(|r| r.size)
                } else {
                    None
                };
                summaries.push(bound_summary(name, &g, &report));
                rows.push(RunRecord::from_report(name.into(), &report, exact_size, wall));
            }
            Err(e) => rows.push(RunRecord::skipped(name.into(), &g, &e)),
        }
        if g.girth().is_none_or(|c| c >= 5) {
            girth5.push(name);
        }
    }
    if !girth5.is_empty() {
        summaries.push(format!(
            "girth>=5 [external]: {} (sharper published bounds exist for this class; not computed here)",
            girth5.join(" ")
        ));
    }
    let violations = rows
        .iter()
        .filter(|r| {
            r.case_taken != "skipped"
                && !bounds::main_bound_holds(r.n, r.delta, r.code_size).holds()
        })
        .count();
    summaries.push(format!(
        "families: {} instance(s), {} bound violation(s)",
        rows.len(),
        violations
    ));
    Ok(())
}

/// Per-instance comparison of the achieved size against every bound that
/// applies to the instance's class.
fn bound_summary(name: &str, g: &Graph, report: &ConstructionReport) -> String {
    let (n, delta) = (g.n(), g.max_degree());
    let mut parts = vec![format!(
        "triangle_free={:.4}",
        bounds::main_bound_value(n, delta)
    )];
    if idcode::indep::chromatic_independent_set(g, 2).is_ok() {
        parts.push(format!(
            "bipartite={:.4}",
            bounds::rational_bound_value(n, delta, 1, 3)
        ));
    }
    if g.false_twin_classes().nontrivial.is_empty() {
        parts.push(format!(
            "no_false_twins={:.4}",
            bounds::no_false_twin_bound_value(n, delta)
        ));
    }
    format!("bounds {name}: size={} {}", report.code.len(), parts.join(" "))
}

fn run_random_suite(
    rows: &mut Vec<RunRecord>,
    n: usize,
    m: usize,
    count: u64,
    seed: u64,
    no_timing: bool,
) -> Result<()> {
    for i in 0..count {
        let instance_seed = seed.wrapping_add(i);
        let spec = FamilySpec::RandomTriangleFree { n, m, seed: instance_seed };
        let g = families::generate(&spec)?;
        let name = format!("random_{n}_{m}_s{instance_seed}");
        let start = Instant::now();
        match construct::build_identifying_code(&g) {
            Ok(report) => {
                let wall = wall_ms(start, no_timing);
                rows.push(RunRecord::from_report(name, &report, None, wall));
            }
            Err(e) => rows.push(RunRecord::skipped(name, &g, &e)),
        }
    }
    Ok(())
}

fn print_table(rows: &[RunRecord]) {
    println!(
        "{:<24} {:>5} {:>5} {:<18} {:<18} {:>9} {:>12} {:>10} {:>12}",
        "input", "n", "delta", "variant", "case", "code_size", "bound", "exact", "wall_ms"
    );
    for r in rows {
        println!(
            "{:<24} {:>5} {:>5} {:<18} {:<18} {:>9} {:>12.4} {:>10} {:>12.3}",
            r.input,
            r.n,
            r.delta,
            r.variant,
            r.case_taken,
            r.code_size,
            r.bound_value,
            r.exact_size.map_or(String::from("-"), |e| e.to_string()),
            r.wall_time_ms
        );
    }
}

fn cmd_gen(spec: &FamilySpec, out: Option<&Path>) -> Result<ExitCode> {
    let g = families::generate(spec)?;
    match out {
        Some(path) => io::write_graph(&g, path)?,
        None => print!("{}", io::graph_to_string(&g)),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_family_flag(s: &str) -> std::result::Result<FamilySpec, String> {
    let (name, args) = s.split_once(':').unwrap_or((s, ""));
    let nums: Vec<&str> = args.split(',').filter(|t| !t.is_empty()).collect();
    let usize_at = |i: usize| -> std::result::Result<usize, String> {
        nums.get(i)
            .ok_or_else(|| format!("`{s}`: missing argument {}", i + 1))?
            .parse::<usize>()
            .map_err(|_| format!("`{s}`: argument {} is not a count", i + 1))
    };
    let u64_at = |i: usize| -> std::result::Result<u64, String> {
        nums.get(i)
            .ok_or_else(|| format!("`{s}`: missing argument {}", i + 1))?
            .parse::<u64>()
            .map_err(|_| format!("`{s}`: argument {} is not a seed", i + 1))
    };
    let spec = match name {
        "path" => FamilySpec::Path(usize_at(0)?),
        "cycle" => FamilySpec::Cycle(usize_at(0)?),
        "star" => FamilySpec::Star(usize_at(0)?),
        "complete-bipartite" => FamilySpec::CompleteBipartite(usize_at(0)?, usize_at(1)?),
        "kary" => FamilySpec::KaryTree { arity: usize_at(0)?, height: usize_at(1)? },
        "subdivided-complete" => FamilySpec::SubdividedComplete(usize_at(0)?),
        "random-bipartite" => {
            let p: f64 = nums
                .get(2)
                .ok_or_else(|| format!("`{s}`: missing probability"))?
                .parse()
                .map_err(|_| format!("`{s}`: bad probability"))?;
            FamilySpec::RandomBipartite { a: usize_at(0)?, b: usize_at(1)?, p, seed: u64_at(3)? }
        }
        "random-triangle-free" => FamilySpec::RandomTriangleFree {
            n: usize_at(0)?,
            m: usize_at(1)?,
            seed: u64_at(2)?,
        },
        _ => return Err(format!("`{name}` is not a family")),
    };
    Ok(spec)
}

fn join_ids(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn wall_ms(start: Instant, no_timing: bool) -> f64 {
    if no_timing {
        0.0
    } else {
        (start.elapsed().as_secs_f64() * 1000.0 * 1000.0).round() / 1000.0
    }
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}
