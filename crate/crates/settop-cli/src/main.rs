//! `settop`: command-line front end for the finite-model laboratory.
//!
//! Every command builds a [`Report`] of named checks and prints it, as JSON
//! with `--json` and as text otherwise. The exit status is 0 when every
//! check passes, 1 when a check fails, and 2 for malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use settop::finite_topology::{
    enumerate_topologies, is_k_compact, is_topology, separation_profile, KBound, PointSet, PointTopology, SpaceFile,
};
use settop::hf_universe::innermodel::MAX_RANK;
use settop::hf_universe::{
    audit_axioms, build_w3, check_interpretation_conditions, parse_hf, search_hyperuniverses, HfObject,
    MembershipStructure, StructureFile, Zero,
};
use settop::hyperspace::exp_space;
use settop::positive_core::{
    brute_force_extension, check_distributivity, check_oracle_equivalence, compile_formula, eval_formula, eval_term,
    parse_formula, parse_formula_file, Formula, OracleConfig, Universe,
};
use settop::suite::{run_criterion, SuiteConfig, CRITERIA};
use settop::wellorder::{order_product, order_sum, wellorder_from_choice, ChoiceFile, ChoiceFunction, FiniteOrder};
use settop::Error;

/// Largest number of points accepted without `--unsafe-limits`.
const GUARD_POINTS: usize = 5;
/// Largest rank accepted without `--unsafe-limits`.
const GUARD_RANK: usize = 5;
/// Largest formula size accepted without `--unsafe-limits`.
const GUARD_AST: usize = 9;

#[derive(Parser, Debug)]
#[command(name = "settop", version, about = "Finite models for topological set theory")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "SETTOP_SEED", default_value_t = 0)]
    seed: u64,
    /// Lift the point, rank and formula-size guards.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite topologies and their exponential spaces.
    #[command(subcommand)]
    Topo(TopoCmd),
    /// Positive formulas and their compilation.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Hereditarily finite objects, zeros and ordinals.
    #[command(subcommand)]
    Hf(HfCmd),
    /// Pristine inner models and hyperuniverse search.
    #[command(subcommand)]
    Innermodel(InnerCmd),
    /// Well-orders from choice functions and order arithmetic.
    #[command(subcommand)]
    Wellorder(WellorderCmd),
    /// The acceptance suite.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Args, Debug)]
struct SpaceArg {
    /// Space file (JSON with `points` and `closed`).
    #[arg(long, conflicts_with = "closed")]
    space: Option<PathBuf>,
    /// Inline closed family, e.g. `[[0],[0,1]]`; needs `--points`.
    #[arg(long, requires = "points")]
    closed: Option<String>,
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Args, Debug)]
struct KArg {
    /// Cardinality bound for K-small families; unbounded when absent.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum TopoCmd {
    /// Enumerate every topology on a number of points.
    Enum {
        #[arg(long)]
        points: usize,
        /// Include the separation profile of each topology.
        #[arg(long)]
        check_separation: bool,
    },
    /// Validate a family and report its separation and compactness.
    Check {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        k: KArg,
    },
    /// Build the exponential space.
    Exp {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        k: KArg,
    },
}

#[derive(Args, Debug)]
struct FormulaSource {
    /// Formula as an s-expression.
    #[arg(long, conflicts_with = "file")]
    formula: Option<String>,
    /// File with one formula per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Set parameter, repeated for `x1`, `x2`, ... (HF text).
    #[arg(long = "set")]
    sets: Vec<String>,
    /// Class parameter given as an HF set of its members, repeated for
    /// `B1`, `B2`, ...
    #[arg(long = "class")]
    classes: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum FormulaCmd {
    /// Parse formulas and report size and kind.
    Parse {
        #[command(flatten)]
        source: FormulaSource,
    },
    /// Truth value under an assignment of the free variables.
    Eval {
        #[command(flatten)]
        source: FormulaSource,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compile to a combinator term; with parameters, also evaluate it
    /// and compare with brute force.
    Compile {
        #[command(flatten)]
        source: FormulaSource,
        /// Number of free variables; defaults to the largest index used.
        #[arg(long)]
        arity: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Exhaustive compiler-oracle equivalence.
    Check {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Universe level, `u1` to `u5`.
        #[arg(long, default_value = "u3")]
        universe: String,
        #[arg(long, default_value_t = 2)]
        max_class_size: usize,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Both sides of the distributivity law.
    Distributivity {
        /// A family `J_i` as an HF set of its members, repeated.
        #[arg(long = "family", required = true)]
        families: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct ZeroArg {
    /// The zero: `empty`, `two-atoms`, or HF text.
    #[arg(long, default_value = "empty")]
    zero: String,
}

#[derive(Subcommand, Debug)]
enum HfCmd {
    /// Canonical form, rank and pair reading of an object.
    Canon {
        #[arg(long, conflicts_with = "structure")]
        text: Option<String>,
        /// Structure file; prints the canonical object of each node.
        #[arg(long)]
        structure: Option<PathBuf>,
    },
    /// Whether an object is a zero.
    Zero {
        #[arg(long)]
        text: String,
    },
    /// The first ordinals over a zero.
    Ordinals {
        #[command(flatten)]
        zero: ZeroArg,
        #[arg(long, default_value_t = 6)]
        count: usize,
    },
    /// Transitive closure relative to a zero.
    Trcl {
        #[command(flatten)]
        zero: ZeroArg,
        #[arg(long)]
        text: String,
    },
    /// Pristineness relative to a zero and a set of atoms.
    Pristine {
        #[command(flatten)]
        zero: ZeroArg,
        /// The set `B`: `empty`, `zero` (the same as the zero), or HF text.
        #[arg(long, default_value = "zero")]
        atoms: String,
        #[arg(long)]
        text: String,
    },
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[command(flatten)]
    zero: ZeroArg,
    /// The set `B`: `empty`, `zero` (the same as the zero), or HF text.
    #[arg(long, default_value = "zero")]
    atoms: String,
    #[arg(long, default_value_t = 3)]
    rank: usize,
}

#[derive(Subcommand, Debug)]
enum InnerCmd {
    /// Build the inner model; with `--audit`, check its conditions.
    Build {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        k: KArg,
    },
    /// Audit the axioms on the membership structure of an inner model or
    /// of a structure file.
    Audit {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        structure: Option<PathBuf>,
        /// Largest formula size for the specification audit.
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Exhaustive search for finite hyperuniverses.
    HyperuniverseSearch {
        #[arg(long, default_value_t = 4)]
        points: usize,
        #[command(flatten)]
        k: KArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PresetChoice {
    Min,
    Max,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderOp {
    Sum,
    Product,
}

#[derive(Subcommand, Debug)]
enum WellorderCmd {
    /// The well-order induced by a choice function.
    FromChoice {
        /// Choice file (JSON with `carrier` and `choice`).
        #[arg(long, conflicts_with_all = ["carrier", "preset"])]
        file: Option<PathBuf>,
        #[arg(long, requires = "preset")]
        carrier: Option<usize>,
        #[arg(long, value_enum)]
        preset: Option<PresetChoice>,
    },
    /// Sum or product of two standard finite orders.
    Arith {
        #[arg(long, value_enum)]
        op: OrderOp,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SuiteCmd {
    /// Run the acceptance criteria.
    Acceptance {
        /// Run only these criteria.
        #[arg(long = "only")]
        only: Vec<usize>,
        /// Budget in seconds for the compiler-oracle criterion.
        #[arg(long, default_value_t = 300)]
        oracle_budget: u64,
    },
}

/// Verdict of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Verdict {
    Pass,
    Fail,
    Vacuous,
    OutOfBound,
}

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

/// Output of one command.
#[derive(Debug, Serialize)]
struct Report {
    command: Vec<String>,
    seed: u64,
    pass: bool,
    checks: Vec<Check>,
    data: Value,
}

/// Failure classes mapped to exit codes.
enum CliError {
    Input(String),
    Check(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => CliError::Check(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

struct Ctx {
    seed: u64,
    unsafe_limits: bool,
    checks: Vec<Check>,
    /// Leave the data payload out of the text report.
    terse: bool,
}

impl Ctx {
    fn check(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        let verdict = if pass { Verdict::Pass } else { Verdict::Fail };
        self.checks.push(Check { name: name.into(), verdict, witness });
    }

    fn verdict(&mut self, name: impl Into<String>, verdict: Verdict, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), verdict, witness });
    }

    fn guard(&self, what: &str, value: usize, limit: usize) -> CliResult<()> {
        if value > limit && !self.unsafe_limits {
            return Err(input(format!("{what} is {value}, above the limit {limit}; pass --unsafe-limits to override")));
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let mut ctx = Ctx { seed: cli.seed, unsafe_limits: cli.unsafe_limits, checks: Vec::new(), terse: false };
    match run(&cli.command, &mut ctx) {
        Ok(data) => {
            let pass = ctx.checks.iter().all(|c| c.verdict != Verdict::Fail);
            let report = Report { command, seed: cli.seed, pass, checks: std::mem::take(&mut ctx.checks), data };
            print_report(&report, cli.json, ctx.terse);
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn print_report(report: &Report, as_json: bool, terse: bool) {
    if as_json {
        let text = serde_json::to_string_pretty(report).expect("reports serialize");
        println!("{text}");
        return;
    }
    if !terse && !report.data.is_null() {
        println!("{}", serde_json::to_string_pretty(&report.data).expect("reports serialize"));
    }
    for c in &report.checks {
        let verdict = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "vacuous",
            Verdict::OutOfBound => "out-of-bound",
        };
        match &c.witness {
            Some(w) => println!("{verdict}: {} ({w})", c.name),
            None => println!("{verdict}: {}", c.name),
        }
    }
    println!("{}", if report.pass { "all checks pass" } else { "some checks FAIL" });
}

fn run(cmd: &Command, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        Command::Topo(c) => topo(c, ctx),
        Command::Formula(c) => formula(c, ctx),
        Command::Hf(c) => hf(c, ctx),
        Command::Innermodel(c) => innermodel(c, ctx),
        Command::Wellorder(c) => wellorder(c, ctx),
        Command::Suite(c) => suite(c, ctx),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read(path)?).map_err(|e| input(format!("malformed {}: {e}", path.display())))
}

fn to_json(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn k_bound(k: &KArg) -> CliResult<KBound> {
    Ok(match k.k {
        None => KBound::Unbounded,
        Some(k) => KBound::finite(k)?,
    })
}

/// The closed family as given, before any topology check.
fn load_family(arg: &SpaceArg, ctx: &Ctx) -> CliResult<(usize, Vec<PointSet>)> {
    let file: SpaceFile = match (&arg.space, &arg.closed) {
        (Some(path), _) => read_json(path)?,
        (None, Some(text)) => {
            let closed: Vec<Vec<usize>> =
                serde_json::from_str(text).map_err(|e| input(format!("malformed --closed: {e}")))?;
            SpaceFile { points: arg.points.unwrap_or(0), closed }
        }
        (None, None) => return Err(input("give --space or --closed with --points")),
    };
    ctx.guard("points", file.points, GUARD_POINTS)?;
    let family =
        file.closed.iter().map(|c| PointSet::from_indices(file.points, c)).collect::<settop::Result<Vec<_>>>()?;
    Ok((file.points, family))
}

fn topo(cmd: &TopoCmd, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        TopoCmd::Enum { points, check_separation } => {
            ctx.guard("points", *points, GUARD_POINTS)?;
            let all = enumerate_topologies(*points)?;
            let spaces: Vec<Value> = all
                .iter()
                .map(|t| {
                    let mut v = json!({ "closed": t.to_space_file().closed });
                    if *check_separation {
                        v["separation"] = to_json(&separation_profile(t));
                    }
                    v
                })
                .collect();
            Ok(json!({ "points": points, "count": all.len(), "topologies": spaces }))
        }
        TopoCmd::Check { space, k } => {
            let (n, family) = load_family(space, ctx)?;
            let valid = is_topology(n, &family)?;
            ctx.check("topology", valid, None);
            if !valid {
                return Ok(json!({ "points": n }));
            }
            let t = PointTopology::from_family(n, &family)?;
            let k = k_bound(k)?;
            let compact = is_k_compact(&t, k);
            ctx.check("K-compact", compact, None);
            Ok(json!({
                "space": t.to_space_file(),
                "separation": separation_profile(&t),
                "k_compact": compact,
            }))
        }
        TopoCmd::Exp { space, k } => {
            let (n, family) = load_family(space, ctx)?;
            let t = PointTopology::from_family(n, &family)?;
            let h = exp_space(&t, k_bound(k)?)?;
            let base = separation_profile(&t);
            let exp = separation_profile(&h.topology);
            ctx.check("t1(X) implies t1(Exp X)", !base.t1 || exp.t1, None);
            ctx.check("t3(X) iff t2(Exp X)", base.t3 == exp.t2, None);
            ctx.check("t4(X) iff t3(Exp X)", base.t4 == exp.t3, None);
            Ok(json!({ "hyperspace": h.to_file(), "base_separation": base, "exp_separation": exp }))
        }
    }
}

fn formulas(source: &FormulaSource, ctx: &Ctx) -> CliResult<Vec<Formula>> {
    let list = match (&source.formula, &source.file) {
        (Some(text), _) => vec![parse_formula(text)?],
        (None, Some(path)) => parse_formula_file(&read(path)?)?,
        (None, None) => return Err(input("give --formula or --file")),
    };
    for phi in &list {
        ctx.guard("formula size", phi.size(), GUARD_AST)?;
    }
    Ok(list)
}

fn hf_text(text: &str) -> CliResult<HfObject> {
    Ok(parse_hf(text)?)
}

fn universe(params: &ParamArgs, ctx: &Ctx) -> CliResult<Universe> {
    let sets = params.sets.iter().map(|s| hf_text(s)).collect::<CliResult<Vec<_>>>()?;
    for s in &sets {
        ctx.guard("rank", s.rank(), GUARD_RANK)?;
    }
    let classes = params
        .classes
        .iter()
        .map(|s| {
            let c = hf_text(s)?;
            if !c.is_set() {
                return Err(input(format!("class parameter {c} must be a set of members")));
            }
            Ok(c.elements().to_vec())
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Universe::new(sets, classes))
}

fn formula(cmd: &FormulaCmd, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        FormulaCmd::Parse { source } => {
            let list = formulas(source, ctx)?;
            let rows: Vec<Value> = list
                .iter()
                .map(|phi| {
                    json!({
                        "formula": phi.to_string(),
                        "size": phi.size(),
                        "bpf": phi.is_bpf(),
                        "free": phi.max_free(),
                        "classes": phi.max_class(),
                    })
                })
                .collect();
            Ok(Value::Array(rows))
        }
        FormulaCmd::Eval { source, params } => {
            let u = universe(params, ctx)?;
            let mut rows = Vec::new();
            for phi in formulas(source, ctx)? {
                let truth = eval_formula(&phi, &u.sets, &u)?;
                rows.push(json!({ "formula": phi.to_string(), "value": truth }));
            }
            Ok(Value::Array(rows))
        }
        FormulaCmd::Compile { source, arity, params } => {
            let u = universe(params, ctx)?;
            let mut rows = Vec::new();
            for phi in formulas(source, ctx)? {
                let m = arity.unwrap_or_else(|| phi.max_free().max(1));
                let compiled = compile_formula(&phi, m)?;
                let mut row = json!({ "formula": phi.to_string(), "arity": m });
                if u.sets.len() == m {
                    let term = compiled.instantiate(&u)?;
                    let got = eval_term(&term);
                    let want = brute_force_extension(&phi, &u)?;
                    ctx.check(format!("compiled term agrees with brute force on {phi}"), got == want, None);
                    row["term"] = json!(term.to_string());
                    row["term_size"] = json!(term.size());
                    row["extension"] = json!(got.to_string());
                } else if !u.sets.is_empty() {
                    return Err(input(format!("{} set parameters given for arity {m}", u.sets.len())));
                }
                rows.push(row);
            }
            Ok(Value::Array(rows))
        }
        FormulaCmd::Check { size, arity, universe, max_class_size, budget } => {
            ctx.guard("formula size", *size, GUARD_AST)?;
            let rank: usize = universe
                .strip_prefix('u')
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| input(format!("unknown universe {universe}; use u1 to u5")))?;
            ctx.guard("rank", rank, GUARD_RANK)?;
            let cfg = OracleConfig {
                max_size: *size,
                max_arity: *arity,
                universe_rank: rank,
                max_class_size: *max_class_size,
                budget: budget.map(Duration::from_secs),
            };
            let r = check_oracle_equivalence(&cfg)?;
            ctx.check("no mismatches", r.mismatches == 0, r.first_mismatch.clone());
            ctx.check("enumeration complete", r.complete, None);
            Ok(to_json(&r))
        }
        FormulaCmd::Distributivity { families } => {
            let fams = families
                .iter()
                .map(|f| {
                    let j = hf_text(f)?;
                    if !j.is_set() {
                        return Err(input(format!("family {j} must be a set")));
                    }
                    Ok(j.elements().to_vec())
                })
                .collect::<CliResult<Vec<_>>>()?;
            let r = check_distributivity(&fams)?;
            ctx.check("both sides equal", r.equal, None);
            Ok(to_json(&r))
        }
    }
}

fn parse_zero(z: &ZeroArg) -> CliResult<Zero> {
    Ok(match z.zero.as_str() {
        "empty" => Zero::empty(),
        "two-atoms" => Zero::two_atoms(),
        text => Zero::new(hf_text(text)?)?,
    })
}

fn parse_atoms(text: &str, zero: &Zero) -> CliResult<HfObject> {
    Ok(match text {
        "empty" => HfObject::empty(),
        "zero" => zero.value().clone(),
        text => hf_text(text)?,
    })
}

fn hf(cmd: &HfCmd, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        HfCmd::Canon { text, structure } => match (text, structure) {
            (Some(text), _) => {
                let x = hf_text(text)?;
                Ok(json!({
                    "canonical": x.to_string(),
                    "pairs": x.to_pair_string(),
                    "rank": x.rank(),
                    "atom": x.is_atom(),
                }))
            }
            (None, Some(path)) => {
                let file: StructureFile = read_json(path)?;
                let m = MembershipStructure::from_file(&file)?;
                let labels: Vec<String> = (0..m.len()).map(|i| m.label(i)).collect();
                Ok(json!({ "nodes": m.len(), "labels": labels }))
            }
            (None, None) => Err(input("give --text or --structure")),
        },
        HfCmd::Zero { text } => {
            let x = hf_text(text)?;
            let zero = Zero::new(x.clone()).is_ok();
            ctx.check(format!("{x} is a zero"), zero, None);
            Ok(json!({ "object": x.to_string(), "zero": zero }))
        }
        HfCmd::Ordinals { zero, count } => {
            let z = parse_zero(zero)?;
            let ords = z.ordinals(*count)?;
            for o in &ords {
                ctx.check(format!("{o} is an ordinal"), z.is_ordinal(o), None);
            }
            let list: Vec<String> = ords.iter().map(|o| o.to_string()).collect();
            Ok(json!({ "zero": z.value().to_string(), "ordinals": list }))
        }
        HfCmd::Trcl { zero, text } => {
            let z = parse_zero(zero)?;
            let x = hf_text(text)?;
            let t = z.trcl(&x);
            ctx.check("closure is transitive", z.is_transitive(&t), None);
            Ok(json!({ "object": x.to_string(), "trcl": t.to_string() }))
        }
        HfCmd::Pristine { zero, atoms, text } => {
            let z = parse_zero(zero)?;
            let b = parse_atoms(atoms, &z)?;
            let x = hf_text(text)?;
            let pristine = z.is_b_pristine(&b, &x);
            Ok(
                json!({ "object": x.to_string(), "zero": z.value().to_string(), "atoms": b.to_string(), "pristine": pristine }),
            )
        }
    }
}

fn innermodel(cmd: &InnerCmd, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        InnerCmd::Build { model, audit, k } => {
            let z = parse_zero(&model.zero)?;
            let b = parse_atoms(&model.atoms, &z)?;
            ctx.guard("rank", model.rank, GUARD_RANK.min(MAX_RANK))?;
            let m = build_w3(&z, &b, model.rank)?;
            let phi: Vec<Value> = m.phi.iter().map(|(x, y)| json!([x.to_string(), y.to_string()])).collect();
            let mut data = json!({
                "zero": z.value().to_string(),
                "atoms": b.to_string(),
                "rank": model.rank,
                "w_plus_size": m.w_plus().len(),
                "phi": phi,
            });
            if *audit {
                let r = check_interpretation_conditions(&m, k_bound(k)?)?;
                ctx.check("Φ injective", r.phi_injective, None);
                for c in &r.conditions {
                    let name = format!("condition {} ({})", c.condition, c.name);
                    if c.fail > 0 {
                        ctx.verdict(name, Verdict::Fail, c.witness.clone());
                    } else if c.pass > 0 {
                        ctx.verdict(name, Verdict::Pass, None);
                    } else if c.out_of_bound > 0 {
                        ctx.verdict(name, Verdict::OutOfBound, None);
                    } else {
                        ctx.verdict(name, Verdict::Vacuous, None);
                    }
                }
                data["conditions"] = to_json(&r);
            }
            Ok(data)
        }
        InnerCmd::Audit { model, structure, depth } => {
            let m = match structure {
                Some(path) => MembershipStructure::from_file(&read_json(path)?)?,
                None => {
                    let z = parse_zero(&model.zero)?;
                    let b = parse_atoms(&model.atoms, &z)?;
                    ctx.guard("rank", model.rank, GUARD_RANK.min(MAX_RANK))?;
                    MembershipStructure::from_context(&build_w3(&z, &b, model.rank)?)
                }
            };
            ctx.guard("formula size", *depth, GUARD_AST)?;
            let r = audit_axioms(&m, *depth)?;
            for a in &r.axioms {
                let verdict = match a.status() {
                    "fail" => Verdict::Fail,
                    "vacuous" => Verdict::Vacuous,
                    _ => Verdict::Pass,
                };
                ctx.verdict(a.axiom.to_string(), verdict, a.witness.clone());
            }
            Ok(to_json(&r))
        }
        InnerCmd::HyperuniverseSearch { points, k } => {
            let r = search_hyperuniverses(*points, k_bound(k)?)?;
            ctx.check("exactly one witness", r.witnesses.len() == 1, None);
            Ok(to_json(&r))
        }
    }
}

fn wellorder(cmd: &WellorderCmd, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        WellorderCmd::FromChoice { file, carrier, preset } => {
            let f = match (file, carrier, preset) {
                (Some(path), _, _) => ChoiceFunction::from_file(&read_json::<ChoiceFile>(path)?)?,
                (None, Some(n), Some(p)) => {
                    ctx.guard("carrier", *n, GUARD_POINTS)?;
                    match p {
                        PresetChoice::Min => ChoiceFunction::min(*n)?,
                        PresetChoice::Max => ChoiceFunction::max(*n)?,
                        PresetChoice::Random => ChoiceFunction::random(*n, &mut ChaCha8Rng::seed_from_u64(ctx.seed))?,
                    }
                }
                _ => return Err(input("give --file, or --carrier with --preset")),
            };
            let w = wellorder_from_choice(&f)?;
            ctx.check("pick map is a bijection onto the carrier", w.bijective, None);
            ctx.check("order invariants", w.order.check_invariants().is_ok(), None);
            let chain: Vec<Vec<usize>> = w.chain.sets.iter().map(PointSet::to_indices).collect();
            Ok(json!({ "choice": f.to_file(), "chain": chain, "order": w.order }))
        }
        WellorderCmd::Arith { op, a, b } => {
            let (x, y) = (FiniteOrder::standard(*a), FiniteOrder::standard(*b));
            let r = match op {
                OrderOp::Sum => order_sum(&x, &y),
                OrderOp::Product => order_product(&x, &y),
            };
            ctx.check("order invariants", r.check_invariants().is_ok(), None);
            Ok(json!({ "result": r, "len": r.len() }))
        }
    }
}

fn suite(cmd: &SuiteCmd, ctx: &mut Ctx) -> CliResult<Value> {
    match cmd {
        SuiteCmd::Acceptance { only, oracle_budget } => {
            if let Some(bad) = only.iter().find(|&&id| id == 0 || id > CRITERIA) {
                return Err(input(format!("there is no criterion {bad}")));
            }
            ctx.terse = true;
            let cfg = SuiteConfig { seed: ctx.seed, oracle_budget: Duration::from_secs(*oracle_budget) };
            let ids: Vec<usize> = if only.is_empty() { (1..=CRITERIA).collect() } else { only.clone() };
            let mut rows = Vec::new();
            for id in ids {
                let r = run_criterion(id, &cfg);
                ctx.check(format!("criterion {id}: {}", r.title), r.pass, Some(r.summary.clone()));
                rows.push(to_json(&r));
            }
            Ok(Value::Array(rows))
        }
    }
}
