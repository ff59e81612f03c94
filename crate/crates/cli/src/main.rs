//! `lie2`: dimension tables, character values and verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lie2_core::basis;
use lie2_core::charlib::{self, CharacterTable, ClassValue, FormulaForm};
use lie2_core::freealg;
use lie2_core::genfun::{compose_characters, dimensions, invert_plethystic};
use lie2_core::poset::{self, Com2Poset};
use lie2_core::verify::{self, Suite, VerifyOptions};
use lie2_core::{CycleType, Error, LaurentPoly, Operad, SymFunc};

/// Largest truncation accepted by the formula and inversion routes.
const MAX_FORMULA_N: usize = 12;

#[derive(Parser)]
#[command(name = "lie2", version, about = "Characters of the operads of two compatible brackets")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the arity components.
    Dims {
        #[arg(long, value_enum)]
        operad: OperadArg,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "formula")]
        route: DimsRoute,
    },
    /// Character values on conjugacy classes.
    Character {
        #[arg(long, value_enum)]
        operad: OperadArg,
        #[arg(long)]
        n: usize,
        /// Cycle multiplicities `c1,c2,...`; all classes when omitted.
        #[arg(long)]
        cycle_type: Option<String>,
        #[arg(long, value_enum, default_value = "formula")]
        route: CharRoute,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-verification suites; JSON report on stdout.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// The monomial basis of `Lie2(n)` and `P2(n)`.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        p2: bool,
        /// Check linear independence in the free-algebra quotient.
        #[arg(long)]
        verify: bool,
    },
    /// The partition posets of `Com2`.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "cm")]
        check: PosetCheck,
        #[arg(long, value_enum, default_value = "text")]
        format: PosetFormat,
        /// Maximum number of chains in an order complex.
        #[arg(long, default_value_t = poset::DEFAULT_CHAIN_BUDGET)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OperadArg {
    Lie2,
    P2,
    Com2,
}

impl From<OperadArg> for Operad {
    fn from(o: OperadArg) -> Operad {
        match o {
            OperadArg::Lie2 => Operad::Lie2,
            OperadArg::P2 => Operad::P2,
            OperadArg::Com2 => Operad::Com2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DimsRoute {
    Formula,
    Invert,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharRoute {
    Formula,
    Mt,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetCheck {
    Homology,
    Semimodular,
    Cm,
    Intervals,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Text,
    Json,
    Edges,
}

enum Failure {
    Usage(String),
    Verification,
    Budget(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse(_) | Error::ArityLimit { .. } => Failure::Usage(e.to_string()),
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Ctx {
    quiet: bool,
}

impl Ctx {
    fn progress(&self, msg: &str) {
        if !self.quiet {
            eprintln!("[lie2] {msg}");
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let ctx = Ctx { quiet: cli.quiet };
    let outcome = match cli.command {
        Command::Dims { operad, max_n, route } => dims(&ctx, operad.into(), max_n, route),
        Command::Character {
            operad,
            n,
            cycle_type,
            route,
            format,
        } => character(&ctx, operad.into(), n, cycle_type.as_deref(), route, format),
        Command::Verify { suite, max_n } => run_verify(&ctx, &suite, max_n),
        Command::Basis { n, list, p2, verify } => run_basis(&ctx, n, list, p2, verify),
        Command::Poset {
            n,
            check,
            format,
            budget,
        } => run_poset(&ctx, n, check, format, budget),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

/// The brute-force `Lie2` character series through arity `n`.
fn brute_lie2(ctx: &Ctx, n: usize) -> Result<SymFunc<LaurentPoly>, Failure> {
    if n > freealg::MAX_ARITY {
        return Err(usage(format!("the brute route stops at n = {}", freealg::MAX_ARITY)));
    }
    let mut total = SymFunc::zero(n);
    for k in 1..=n {
        ctx.progress(&format!("eliminating relations in arity {k}"));
        let model = freealg::load_or_build(k)?;
        total = &total + &freealg::full_character(&model)?.with_truncation(n);
    }
    Ok(total)
}

fn series_by_route(ctx: &Ctx, operad: Operad, n: usize, route: DimsRoute) -> Result<SymFunc<LaurentPoly>, Failure> {
    let com = || charlib::f_com_char(n).to_laurent();
    Ok(match (route, operad) {
        (DimsRoute::Formula, op) => charlib::series_for(op, n),
        (DimsRoute::Invert, Operad::Lie2) => invert_plethystic(&charlib::f_com2_char(n))?,
        (DimsRoute::Invert, Operad::Com2) => invert_plethystic(&charlib::f_lie2_char(n))?,
        (DimsRoute::Invert, Operad::P2) => compose_characters(&com(), &invert_plethystic(&charlib::f_com2_char(n))?)?,
        (DimsRoute::Brute, Operad::Lie2) => brute_lie2(ctx, n)?,
        (DimsRoute::Brute, Operad::Com2) => invert_plethystic(&brute_lie2(ctx, n)?)?,
        (DimsRoute::Brute, Operad::P2) => compose_characters(&com(), &brute_lie2(ctx, n)?)?,
    })
}

fn dims(ctx: &Ctx, operad: Operad, max_n: Option<usize>, route: DimsRoute) -> Outcome {
    let n = max_n.unwrap_or(match route {
        DimsRoute::Brute => 5,
        _ => 7,
    });
    if n == 0 || n > MAX_FORMULA_N {
        return Err(usage(format!("--max-n must be in 1..={MAX_FORMULA_N}")));
    }
    let series = series_by_route(ctx, operad, n, route)?;
    let values: Vec<String> = dimensions(&series).iter().map(ToString::to_string).collect();
    println!("{}", values.join(" "));
    Ok(())
}

#[derive(Serialize)]
struct MtTable {
    #[serde(flatten)]
    table: CharacterTable,
    /// Printed-form values on the classes where they differ.
    printed: Vec<ClassValue>,
}

fn character(
    ctx: &Ctx,
    operad: Operad,
    n: usize,
    cycle_type: Option<&str>,
    route: CharRoute,
    format: Format,
) -> Outcome {
    if n == 0 || n > MAX_FORMULA_N {
        return Err(usage(format!("--n must be in 1..={MAX_FORMULA_N}")));
    }
    let classes = match cycle_type {
        Some(s) => {
            let c = CycleType::parse(s)?;
            if c.n() != n {
                return Err(usage(format!("cycle type {c} has {} points, not {n}", c.n())));
            }
            vec![c]
        }
        None => CycleType::all(n),
    };
    let table = match route {
        CharRoute::Formula => CharacterTable::from_series(operad, n, &charlib::series_for(operad, n), Some(classes))?,
        CharRoute::Brute => {
            let dims_route = DimsRoute::Brute;
            let series = series_by_route(ctx, operad, n, dims_route)?;
            CharacterTable::from_series(operad, n, &series, Some(classes))?
        }
        CharRoute::Mt => {
            let eval = |c: &CycleType, form| match operad {
                Operad::Lie2 => charlib::mt_lie2_value(c, form),
                Operad::P2 => charlib::mt_p2_value(c, form),
                Operad::Com2 => Err(Error::InvalidArgument("the mt route covers lie2 and p2".into())),
            };
            let mut values = Vec::new();
            let mut printed = Vec::new();
            for c in &classes {
                let calibrated = eval(c, FormulaForm::Calibrated)?;
                match eval(c, FormulaForm::Printed) {
                    Ok(p) if p == calibrated => {}
                    Ok(p) => printed.push(ClassValue {
                        cycle_type: c.clone(),
                        value: p,
                    }),
                    Err(e) => ctx.progress(&format!("printed form not evaluable on {c}: {e}")),
                }
                values.push((c.clone(), calibrated));
            }
            let out = MtTable {
                table: CharacterTable::from_values(operad, n, values),
                printed,
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string(&out)?),
                Format::Text => {
                    print!("{}", out.table.render_text());
                    for p in &out.printed {
                        println!("printed form on {}: {}", p.cycle_type, p.value);
                    }
                }
            }
            return Ok(());
        }
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&table)?),
        Format::Text => print!("{}", table.render_text()),
    }
    Ok(())
}

fn run_verify(ctx: &Ctx, suite: &str, max_n: usize) -> Outcome {
    let suite: Suite = suite.parse()?;
    if max_n == 0 || max_n > suite.limit().min(MAX_FORMULA_N) {
        return Err(usage(format!(
            "--max-n for suite {} must be in 1..={}",
            suite.name(),
            suite.limit().min(MAX_FORMULA_N)
        )));
    }
    let opts = VerifyOptions::new(max_n);
    let mut progress = |m: &str| ctx.progress(m);
    let report = verify::run_suite(suite, &opts, &mut progress)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    eprint!("{}", report.summary());
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_basis(ctx: &Ctx, n: usize, list: bool, p2: bool, check: bool) -> Outcome {
    if n == 0 || n > 7 {
        return Err(usage("--n must be in 1..=7"));
    }
    let items: Vec<String> = if p2 {
        basis::enumerate_p2_basis(n)?.iter().map(ToString::to_string).collect()
    } else {
        basis::enumerate_b_n(n)?.iter().map(ToString::to_string).collect()
    };
    if list {
        for m in &items {
            println!("{m}");
        }
    } else {
        println!("{}", items.len());
    }
    if check {
        if n > 5 {
            return Err(usage("--verify needs n <= 5"));
        }
        ctx.progress(&format!("eliminating relations in arity {n}"));
        let r = basis::verify_independence(n)?;
        eprintln!(
            "independence: rank {} of {} elements, quotient dimension {}: {}",
            r.rank,
            r.size,
            r.dim,
            if r.independent { "basis" } else { "NOT a basis" }
        );
        if !r.independent {
            return Err(Failure::Verification);
        }
    }
    Ok(())
}

fn run_poset(ctx: &Ctx, n: usize, check: PosetCheck, format: PosetFormat, budget: usize) -> Outcome {
    ctx.progress(&format!("building Pi_{n}"));
    let p = Com2Poset::build(n)?;
    if let PosetFormat::Edges = format {
        print!("{}", p.edges());
        return Ok(());
    }
    let json = matches!(format, PosetFormat::Json);
    let pass = match check {
        PosetCheck::Homology => {
            let betti = poset::order_complex_homology(&p.poset, budget)?;
            if json {
                println!("{}", serde_json::to_string(&betti)?);
            } else {
                println!("Pi_{n}: {} elements, length {}", p.elements.len(), p.poset.max_chain_length());
                for (i, b) in betti.iter().enumerate() {
                    println!("betti_{i} = {b}");
                }
            }
            true
        }
        PosetCheck::Cm => {
            let r = poset::cm_report(&p, budget)?;
            if json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                println!(
                    "Pi_{n}: {}, L={}, betti {:?}",
                    if r.cohen_macaulay() { "CM" } else { "not CM" },
                    r.whole.length,
                    r.whole.betti
                );
                for (top, v) in &r.open_intervals {
                    println!("  (0, {top}): betti {:?}{}", v.betti, if v.cohen_macaulay { "" } else { " not CM" });
                }
            }
            r.cohen_macaulay()
        }
        PosetCheck::Intervals => {
            let r = poset::interval_cohen_macaulay(&p, budget)?;
            if json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                println!(
                    "Pi_{n}: {} open intervals, {} with homology outside the top degree",
                    r.intervals_checked,
                    r.failures.len()
                );
                for f in &r.failures {
                    println!("  ({}, {}): betti {:?}", f.bottom, f.top, f.betti);
                }
            }
            r.cohen_macaulay()
        }
        PosetCheck::Semimodular => {
            let r = poset::segment_semimodularity(&p);
            if json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                println!(
                    "Pi_{n}: {} segments, {} not upper semimodular; whole poset {}",
                    r.segments_checked,
                    r.failures.len(),
                    if r.whole_poset { "upper semimodular" } else { "not upper semimodular" }
                );
                for f in &r.failures {
                    println!("  [{}, {}]: {} covered by {} and {}, no common cover", f.bottom, f.top, f.c, f.a, f.b);
                }
            }
            r.totally_semimodular()
        }
        PosetCheck::Star => {
            let r = poset::check_condition_star(n);
            if json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                println!(
                    "condition (*) up to arity {n}: {} ({} cases)",
                    if r.injective { "injective" } else { "NOT injective" },
                    r.cases
                );
            }
            r.injective
        }
    };
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
