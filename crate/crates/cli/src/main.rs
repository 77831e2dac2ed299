use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use diagcalc::catalog::ALL_FAMILIES;
use diagcalc::presentation::{factor_product, format_word, parse_word, FactorMode};
use diagcalc::render::render_svg;
use diagcalc::workbench::{self, RunConfig, Target, TARGET_NAMES};
use diagcalc::{Error, Exec, Family, Partition, Side, DEFAULT_BUDGET};

const VERIFIED: u8 = 0;
const REFUTED: u8 = 1;
const INCONCLUSIVE: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "diagcalc", version, about = "Partition monoid workbench")]
struct Cli {
    /// List verification targets and monoid names, then exit.
    #[arg(long)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a presentation or a structural law at degree n.
    Verify(VerifyArgs),
    /// Count (and optionally list) the elements of a monoid.
    Enumerate(EnumerateArgs),
    /// Factorise a partition as a generator word or a factor pair.
    Factorize(FactorizeArgs),
    /// Evaluate a word of generator symbols.
    Eval(EvalArgs),
    /// Draw a partition as SVG.
    Render(RenderArgs),
    /// Export a Cayley graph.
    Cayley(CayleyArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Node / element cap for closures and enumerations.
    #[arg(long, env = "DIAGCALC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run checkers on one thread.
    #[arg(long)]
    sequential: bool,
}

impl Common {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    target: String,
    /// Monoid for ehresmann/restriction, or pair selector for action-pair
    /// (en-tn, en-sing-tn, dn-on, pen-ptn).
    #[arg(long)]
    monoid: Option<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Right)]
    side: SideArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Succeed only if the check is refuted.
    #[arg(long)]
    expect_fail: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    monoid: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also list every element.
    #[arg(long)]
    elements: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// A word over the standard generators of the smallest listed family
    /// containing the input.
    Word,
    TnEn,
    OnDn,
}

#[derive(Args)]
struct FactorizeArgs {
    #[command(flatten)]
    common: Common,
    /// Partition text, e.g. "[[1,2,-1],[3,-3],[-2]]".
    partition: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Word)]
    mode: ModeArg,
    /// Check that this word evaluates to the input instead of factorising.
    #[arg(long)]
    check: Option<String>,
    /// Round-trip this many random elements of PP_n^fd instead.
    #[arg(long)]
    random: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    common: Common,
    /// Whitespace-separated symbols such as "h_1 g_2"; empty for the identity.
    word: String,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    common: Common,
    partition: String,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
}

#[derive(Args)]
struct CayleyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    monoid: String,
    #[arg(long, value_enum, default_value_t = SideArg::Right)]
    side: SideArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Why a command stopped early.
enum Failure {
    Usage(String),
    Refuted(String),
    Inconclusive(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Failure::Inconclusive(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn verify(args: &VerifyArgs) -> Outcome {
    let target: Target = args.target.parse()?;
    let common = &args.common;
    let cfg = RunConfig {
        n: common.n,
        target,
        monoid: args.monoid.clone(),
        budget: common.budget,
        seed: common.seed,
        side: args.side.into(),
        exec: common.exec(),
    };
    let report = workbench::verify(&cfg)?;
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut s = format!(
                "{}: {}",
                report.name,
                if report.holds { "holds" } else { "fails" }
            );
            for (k, v) in &report.counts {
                s.push_str(&format!("\n  {k} = {v}"));
            }
            if let Some(w) = &report.witness {
                s.push_str(&format!(
                    "\n  witness {}: {}",
                    w.label,
                    w.elements.join(" ")
                ));
            }
            s
        }
        _ => {
            return Err(Failure::Usage(
                "verify supports --format json or text".into(),
            ))
        }
    };
    emit(common, &with_newline(text))?;
    Ok(match (report.holds, args.expect_fail) {
        (true, false) | (false, true) => VERIFIED,
        _ => REFUTED,
    })
}

fn enumerate(args: &EnumerateArgs) -> Outcome {
    let family: Family = args.monoid.parse()?;
    let c = &args.common;
    let report = workbench::enumerate(family, c.n, c.budget, c.exec(), args.elements)?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Text => {
            let mut s = report.size.to_string();
            for e in report.elements.iter().flatten() {
                s.push('\n');
                s.push_str(e);
            }
            s
        }
        _ => {
            return Err(Failure::Usage(
                "enumerate supports --format json or text".into(),
            ))
        }
    };
    emit(c, &with_newline(text))?;
    Ok(VERIFIED)
}

/// A shortlex word over the standard generators of the first of these
/// families that contains `a`, re-evaluated before it is returned.
fn word_for(a: &Partition, budget: usize) -> Result<(Family, Vec<String>), Failure> {
    let n = a.degree();
    let family = [Family::PPnFd, Family::PnFd, Family::Pn]
        .into_iter()
        .find(|f| f.contains(a))
        .expect("every partition lies in P_n");
    let m = family.closure(n, budget)?;
    let word = m.word_for(a)?;
    let images: BTreeMap<String, Partition> = family
        .generators(n)
        .expect("standard generators")
        .into_iter()
        .collect();
    let value = word
        .iter()
        .fold(Partition::identity(n), |acc, g| acc.multiply(&images[g]));
    if value != *a {
        return Err(Failure::Refuted(format!(
            "word for {a} does not evaluate back"
        )));
    }
    Ok((family, word))
}

fn eval_symbols(text: &str, n: usize) -> Result<Partition, Failure> {
    let word = parse_word(text)?;
    let mut acc = Partition::identity(n);
    for s in &word {
        acc = acc.multiply(&s.image(n)?);
    }
    Ok(acc)
}

fn factor_json(a: &Partition, mode: ModeArg, budget: usize) -> Result<serde_json::Value, Failure> {
    Ok(match mode {
        ModeArg::Word => {
            let (family, word) = word_for(a, budget)?;
            let word = if word.is_empty() {
                "1".to_string()
            } else {
                word.join(" ")
            };
            serde_json::json!({ "input": a.to_string(), "monoid": family.name(), "word": word })
        }
        ModeArg::TnEn | ModeArg::OnDn => {
            let m = if mode == ModeArg::TnEn {
                FactorMode::TnEn
            } else {
                FactorMode::OnDn
            };
            let (left, right) = factor_product(a, m)?;
            if left.multiply(&right) != *a {
                return Err(Failure::Refuted(format!(
                    "factors of {a} do not multiply back"
                )));
            }
            serde_json::json!({
                "input": a.to_string(),
                "left": left.to_string(),
                "right": right.to_string(),
            })
        }
    })
}

fn factorize(args: &FactorizeArgs) -> Outcome {
    let c = &args.common;
    if let Some(k) = args.random {
        let pool = Family::PPnFd.concrete(c.n, c.exec());
        let mut rng = StdRng::seed_from_u64(c.seed);
        let mut samples = Vec::with_capacity(k);
        for _ in 0..k {
            let a = &pool[rng.gen_range(0..pool.len())];
            factor_json(a, ModeArg::OnDn, c.budget)?;
            samples.push(factor_json(a, args.mode, c.budget)?);
        }
        let out =
            serde_json::json!({ "n": c.n, "seed": c.seed, "round_trips": k, "samples": samples });
        emit(
            c,
            &with_newline(serde_json::to_string_pretty(&out).expect("json")),
        )?;
        return Ok(VERIFIED);
    }
    let text = args
        .partition
        .as_deref()
        .ok_or_else(|| Failure::Usage("factorize needs a partition or --random".into()))?;
    let a = Partition::parse(text)?;
    if let Some(word) = &args.check {
        let value = eval_symbols(word, a.degree())?;
        let ok = value == a;
        let out = serde_json::json!({
            "input": a.to_string(),
            "word": format_word(&parse_word(word)?),
            "value": value.to_string(),
            "equal": ok,
        });
        emit(
            c,
            &with_newline(serde_json::to_string_pretty(&out).expect("json")),
        )?;
        return Ok(if ok { VERIFIED } else { REFUTED });
    }
    let out = factor_json(&a, args.mode, c.budget)?;
    emit(
        c,
        &with_newline(serde_json::to_string_pretty(&out).expect("json")),
    )?;
    Ok(VERIFIED)
}

fn eval(args: &EvalArgs) -> Outcome {
    let value = eval_symbols(&args.word, args.common.n)?;
    emit(&args.common, &format!("{value}\n"))?;
    Ok(VERIFIED)
}

fn render(args: &RenderArgs) -> Outcome {
    if args.format != Format::Svg {
        return Err(Failure::Usage("render supports --format svg".into()));
    }
    let a = Partition::parse(&args.partition)?;
    emit(&args.common, &render_svg(&a))?;
    Ok(VERIFIED)
}

fn cayley(args: &CayleyArgs) -> Outcome {
    let family: Family = args.monoid.parse()?;
    let c = &args.common;
    let m = workbench::monoid_of(family, c.n, c.budget, c.exec())?;
    let graph = m.cayley_graph(args.side.into());
    let text = match args.format {
        Format::Json => graph.to_json(),
        Format::Dot => graph.to_dot(),
        _ => {
            return Err(Failure::Usage(
                "cayley supports --format json or dot".into(),
            ))
        }
    };
    emit(c, &with_newline(text))?;
    Ok(VERIFIED)
}

fn list() -> String {
    let mut s = String::from("targets:\n");
    for t in TARGET_NAMES {
        s.push_str(&format!("  {t}\n"));
    }
    s.push_str("monoids:\n");
    for f in ALL_FAMILIES {
        s.push_str(&format!("  {f}\n"));
    }
    s.push_str("action pairs:\n  en-tn\n  en-sing-tn\n  dn-on\n  pen-ptn\n");
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { VERIFIED };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.list {
        print!("{}", list());
        return ExitCode::from(VERIFIED);
    }
    let Some(command) = cli.command else {
        eprintln!("no command given; try --help");
        return ExitCode::from(USAGE);
    };
    let outcome = match &command {
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Factorize(a) => factorize(a),
        Command::Eval(a) => eval(a),
        Command::Render(a) => render(a),
        Command::Cayley(a) => cayley(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Refuted(msg)) => {
            eprintln!("refuted: {msg}");
            ExitCode::from(REFUTED)
        }
        Err(Failure::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(INCONCLUSIVE)
        }
    }
}
