use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use innate::actions::{
    isotropic_action, normalizer_over_plinth, ree3_line7_action, scaled_isotropic_action, scaled_projective_action,
    semilinear_projective_action, FormType, SymplecticActions,
};
use innate::algebra::FiniteField;
use innate::catalog::{build_construction, builtin_catalog, data_dir, ingest_generators, run_catalog};
use innate::classify::{
    classify_group, oracle_special_scan, table1_predicate, verify_pls, IncidenceStructure, Table1Instance,
};
use innate::perm::{coset_action, format_generators, GeneratedGroup, LabeledAction};

#[derive(Parser)]
#[command(name = "innate", version, about = "Innately transitive permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an action and print its generators.
    Construct(ConstructArgs),
    /// Classify the group in a generator file.
    Classify { file: PathBuf },
    /// Evaluate the arithmetic condition of a special-pair line.
    SpecialPair(SpecialPairArgs),
    /// Catalog verification.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Partial linear spaces.
    Pls {
        #[command(subcommand)]
        command: PlsCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Rebuild every entry and compare against the expected rows.
    Verify {
        #[arg(long)]
        include_slow: bool,
        /// Comma-separated entry ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Include per-entry wall times (the report is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// List entry ids and their expected rows.
    List,
}

#[derive(Subcommand)]
enum PlsCommand {
    /// Check a design file against a generator file.
    Verify { design: PathBuf, group: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Recipe {
    Projective,
    ScaledProjective,
    Isotropic,
    ScaledIsotropic,
    SymplecticForms,
    Line7,
    Entry,
}

#[derive(Clone, Copy, ValueEnum)]
enum Eps {
    Plus,
    Minus,
}

impl From<Eps> for FormType {
    fn from(e: Eps) -> Self {
        match e {
            Eps::Plus => FormType::Plus,
            Eps::Minus => FormType::Minus,
        }
    }
}

#[derive(Args)]
struct ConstructArgs {
    recipe: Recipe,
    /// Catalog entry id, for `entry`.
    id: Option<String>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    a: u32,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, value_enum, default_value_t = Eps::Plus)]
    eps: Eps,
    /// Keep only generators whose names start with one of these prefixes.
    #[arg(long, value_delimiter = ',')]
    names: Vec<String>,
    /// Print one label per point instead of the generators.
    #[arg(long)]
    dump_domain: bool,
    /// Print a generator file instead of JSON.
    #[arg(long)]
    perm: bool,
}

#[derive(Args)]
struct SpecialPairArgs {
    /// Line number, as `2` or `line2`.
    line: String,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    q0: Option<u64>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    r: u64,
    #[arg(long)]
    j: Option<u32>,
    #[arg(long, value_enum)]
    eps: Option<Eps>,
    #[arg(long)]
    full: Option<bool>,
    /// Also build the 2-transitive group (lines 2 and 4) and scan its subgroups.
    #[arg(long)]
    scan: bool,
}

/// Exit status: 1 for a failed check, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<bool, Failure>;

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn filtered(action: &LabeledAction, names: &[String]) -> LabeledAction {
    if names.is_empty() {
        return action.clone();
    }
    let prefixes: Vec<&str> = names.iter().map(String::as_str).collect();
    let (generator_names, generators) = action
        .generator_names
        .iter()
        .zip(&action.generators)
        .filter(|(n, _)| prefixes.iter().any(|p| n.starts_with(p)))
        .map(|(n, g)| (n.clone(), g.clone()))
        .unzip();
    LabeledAction {
        generator_names,
        generators,
        ..action.clone()
    }
}

fn entry_action(id: &str) -> Result<LabeledAction, Failure> {
    let entry = builtin_catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Failure::input(format!("unknown catalog entry {id}")))?;
    let c = build_construction(&entry.plinth, &entry.sigma, entry.r_sub, &data_dir()).map_err(Failure::input)?;
    let cosets = coset_action(&c.plinth, &c.r_sub).map_err(Failure::input)?;
    let nd = normalizer_over_plinth(&c.plinth, &cosets, &c.specs).map_err(Failure::input)?;
    let mut action = cosets.action.clone();
    action.name = format!("normalizer of {id}");
    for (k, g) in nd.centralizer.generators().iter().enumerate() {
        action.generator_names.push(format!("c{k}"));
        action.generators.push(g.clone());
    }
    for (name, lift) in nd.lifts {
        if let Some(g) = lift {
            action.generator_names.push(name);
            action.generators.push(g);
        }
    }
    Ok(action)
}

fn construct(args: &ConstructArgs) -> Outcome {
    let field = |p, a| FiniteField::new(p, a).map_err(Failure::input);
    let action = match args.recipe {
        Recipe::Projective => semilinear_projective_action(args.d, &field(args.p, args.a)?).map_err(Failure::input)?,
        Recipe::ScaledProjective => {
            scaled_projective_action(args.d, &field(args.p, args.a)?, args.r).map_err(Failure::input)?.action
        }
        Recipe::Isotropic => isotropic_action(&field(args.p, args.a)?).map_err(Failure::input)?,
        Recipe::ScaledIsotropic => {
            scaled_isotropic_action(&field(args.p, args.a)?, args.r).map_err(Failure::input)?.action
        }
        Recipe::SymplecticForms => SymplecticActions::new(args.d)
            .and_then(|s| s.form_action(args.eps.into()))
            .map_err(Failure::input)?,
        Recipe::Line7 => ree3_line7_action().map_err(Failure::input)?.omega.action,
        Recipe::Entry => {
            let id = args.id.as_deref().ok_or_else(|| Failure::input("`entry` needs an entry id"))?;
            entry_action(id)?
        }
    };
    let action = filtered(&action, &args.names);
    if args.dump_domain {
        emit(&action.dump_domain().iter().map(|l| format!("{l}\n")).collect::<String>());
        return Ok(true);
    }
    let group = action.group();
    if args.perm {
        emit(&format_generators(action.degree(), group.generators()));
        return Ok(true);
    }
    print(&json!({
        "name": action.name,
        "degree": action.degree(),
        "order": group.order().to_string(),
        "generators": action
            .generator_names
            .iter()
            .zip(&action.generators)
            .map(|(n, g)| json!({"name": n, "images": g.to_image_string()}))
            .collect::<Vec<_>>(),
    }));
    Ok(true)
}

fn read_group(path: &Path) -> Result<GeneratedGroup, Failure> {
    ingest_generators(path, None).map_err(Failure::input)
}

fn classify(file: &Path) -> Outcome {
    let g = read_group(file)?;
    if !g.is_transitive() {
        return Err(Failure::input("group is not transitive"));
    }
    let outcome = classify_group(&g).map_err(Failure::input)?;
    print(&serde_json::to_value(&outcome).expect("serializable"));
    Ok(true)
}

fn scan_group(t: &Table1Instance) -> Result<Option<GeneratedGroup>, Failure> {
    let (action, j) = match *t {
        Table1Instance::Line2 { d, q0, a, j, .. } => {
            let f = FiniteField::new(q0 as u32, a).map_err(Failure::input)?;
            (semilinear_projective_action(d as usize, &f).map_err(Failure::input)?, j)
        }
        Table1Instance::Line4 { q0, a, j, .. } => {
            let f = FiniteField::new(q0 as u32, 2 * a).map_err(Failure::input)?;
            (isotropic_action(&f).map_err(Failure::input)?, j)
        }
        _ => return Ok(None),
    };
    let mut gens = action.generators_named(&["sl", "su"]);
    gens.extend(action.generators_named(&["phi"]).iter().map(|g| g.pow(j as u64)));
    Ok(Some(GeneratedGroup::new(action.degree(), gens).map_err(Failure::input)?))
}

fn special_pair(args: &SpecialPairArgs) -> Outcome {
    let line: u8 = args
        .line
        .trim_start_matches("line")
        .parse()
        .map_err(|_| Failure::input(format!("bad line {:?}", args.line)))?;
    let t = Table1Instance::from_parts(
        line,
        args.d,
        args.q0,
        args.a,
        args.r,
        args.j,
        args.eps.map(Into::into),
        args.full,
    )
    .map_err(Failure::input)?;
    let special = table1_predicate(&t).map_err(Failure::input)?;
    let mut out = json!({"instance": t, "special": special});
    let mut agree = true;
    if args.scan {
        if let Some(x) = scan_group(&t)? {
            let scan = oracle_special_scan(&x).map_err(Failure::input)?;
            let found: Vec<Value> = scan
                .iter()
                .map(|e| json!({"index": e.r.to_string(), "order": e.r_sub.order().to_string(), "special": e.verdict.holds}))
                .collect();
            let scan_special = scan.iter().any(|e| e.verdict.holds && e.r == args.r as u128);
            agree = scan_special == special;
            out["scan"] = json!({"degree": x.degree(), "order": x.order().to_string(), "candidates": found, "agrees": agree});
        }
    }
    print(&out);
    Ok(agree)
}

fn catalog_verify(include_slow: bool, only: &[String], timings: bool) -> Outcome {
    let entries: Vec<_> = builtin_catalog()
        .into_iter()
        .filter(|e| only.is_empty() || only.contains(&e.id))
        .collect();
    if entries.is_empty() {
        return Err(Failure::input("no matching catalog entries"));
    }
    let mut report = run_catalog(&entries, &data_dir(), include_slow);
    if !timings {
        report = report.without_timings();
    }
    print(&serde_json::to_value(&report).expect("serializable"));
    Ok(report.all_passed())
}

fn catalog_list() -> Outcome {
    print(&serde_json::to_value(builtin_catalog()).expect("serializable"));
    Ok(true)
}

fn pls_verify(design: &Path, group: &Path) -> Outcome {
    let text = std::fs::read_to_string(design).map_err(|e| Failure::input(format!("{}: {e}", design.display())))?;
    let s = IncidenceStructure::parse(&text).map_err(Failure::input)?;
    let g = read_group(group)?;
    match verify_pls(&s, &g) {
        Ok(report) => {
            print(&serde_json::to_value(&report).expect("serializable"));
            Ok(report.preserved)
        }
        Err(innate::classify::ClassifyError::NotPartialLinearSpace(axiom)) => {
            print(&json!({"partial_linear_space": false, "failed_axiom": axiom, "reason": axiom.to_string()}));
            Ok(false)
        }
        Err(e) => Err(Failure::input(e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Construct(args) => construct(args),
        Command::Classify { file } => classify(file),
        Command::SpecialPair(args) => special_pair(args),
        Command::Catalog {
            command: CatalogCommand::Verify {
                include_slow,
                only,
                timings,
            },
        } => catalog_verify(*include_slow, only, *timings),
        Command::Catalog {
            command: CatalogCommand::List,
        } => catalog_list(),
        Command::Pls {
            command: PlsCommand::Verify { design, group },
        } => pls_verify(design, group),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
