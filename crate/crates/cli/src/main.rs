mod family;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dtjones_core::bailey::{
    iterate_limit, iterated_pair_slater, iterated_pair_walsh, pairs_agree, slater_pair, verify_bailey_pair,
    walsh_pair,
};
use dtjones_core::cjp::{c_poly, dd_poly};
use dtjones_core::knots::TwoBridge;
use dtjones_core::kzseries::{check_duality_all_divisors, check_duality_at, check_relation, evaluate, SeriesKind};
use dtjones_core::qalgebra::text::render;
use dtjones_core::qalgebra::{qpochhammer, LaurentPoly, RationalFn};
use dtjones_core::takata::takata_colored_jones_with;
use dtjones_core::verify::{run_suite, Grid, Suite, VerifyOptions};
use dtjones_core::{Error, Exec};
use serde_json::json;

use family::{Family, FamilySpec};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact colored Jones polynomials of double twist knots.
#[derive(Parser)]
#[command(name = "dtj", version)]
struct Cli {
    /// Evaluate lattice sums on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one colored Jones polynomial.
    Jones(JonesArgs),
    /// Check that two families agree on every knot of a grid.
    Compare(CompareArgs),
    /// Evaluate a Kontsevich-Zagier type series at a root of unity.
    Kz(KzArgs),
    /// Check an iterated Bailey pair.
    Bailey(BaileyArgs),
    /// Run an invariant suite and print its JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct JonesArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(short, default_value_t = 1, allow_negative_numbers = true)]
    m: i64,
    #[arg(short, default_value_t = 1, allow_negative_numbers = true)]
    p: i64,
    /// The color (dimension of the representation).
    #[arg(short = 'N')]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// 2-bridge parameter l of b(l,t); takata only.
    #[arg(long, requires = "t")]
    l: Option<u64>,
    /// 2-bridge parameter t of b(l,t); takata only.
    #[arg(long, requires = "l")]
    t: Option<u64>,
}

#[derive(Args)]
struct CompareArgs {
    /// Family spec such as `thm1`, `takata-mp` or `thm3neg:invert`.
    left: String,
    right: String,
    /// Grid bounds "mMax,pMax,NMax".
    #[arg(long, env = "DTJ_GRID", default_value = "2,2,4")]
    grid: String,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["series", "check_duality"])))]
struct KzArgs {
    #[arg(long)]
    series: Option<String>,
    /// Check `F_{m,p}(zeta) = U_{m+1,p}(-1; 1/zeta)` (1) or its Ffrak/Ufrak analogue (2).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    check_duality: Option<u8>,
    /// With --series, also check the series against its colored Jones polynomial.
    #[arg(long, requires = "series")]
    check: bool,
    #[arg(short, default_value_t = 1)]
    m: i64,
    #[arg(short, default_value_t = 1)]
    p: i64,
    #[arg(short = 'N')]
    n: usize,
    /// Evaluate at a primitive d-th root of unity instead, d | N.
    #[arg(long)]
    divisor: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairName {
    Slater,
    Walsh,
}

#[derive(Args)]
struct BaileyArgs {
    #[arg(long, value_enum)]
    pair: PairName,
    /// Index p of the iterated pair (p - 1 chain steps).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    iterate: i64,
    /// Largest n checked.
    #[arg(long, default_value_t = 10)]
    check_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
    suite: String,
    /// Grid bounds "mMax,pMax,NMax" replacing every default grid.
    #[arg(long, env = "DTJ_GRID")]
    grid: Option<String>,
    /// Leave elapsed times out of the report.
    #[arg(long)]
    no_timing: bool,
}

/// Ends a command with a diagnostic and an exit code.
struct Exit {
    code: u8,
    msg: String,
}

impl Exit {
    fn usage(e: impl ToString) -> Self {
        Exit { code: EXIT_USAGE, msg: e.to_string() }
    }

    fn fail(msg: impl Into<String>) -> Self {
        Exit { code: EXIT_FAIL, msg: msg.into() }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::Parse(_) => Exit::usage(e),
            _ => Exit::fail(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<ExitCode, Exit>;

fn print_poly(v: &LaurentPoly, format: Format, meta: serde_json::Value) {
    match format {
        Format::Text => println!("{}", render(v)),
        Format::Json => {
            let mut obj = meta;
            obj["value"] = serde_json::to_value(v).expect("serializable");
            println!("{obj}");
        }
    }
}

fn cmd_jones(a: &JonesArgs, exec: Exec) -> CmdResult {
    let (value, label) = match (a.family, a.l, a.t) {
        (Family::Takata, Some(l), Some(t)) => {
            let tb = TwoBridge::new(l, t)?;
            (takata_colored_jones_with(&tb, a.n, exec)?, format!("b({l},{t})*"))
        }
        (f, None, None) => {
            let k = f.knot_at(a.m, a.p)?;
            let v = match f {
                // Each family reports its own hypotheses.
                Family::Thm1 => dtjones_core::cjp::jones_thm1_with(a.m, a.p, a.n, exec)?,
                Family::Thm2 => dtjones_core::cjp::jones_thm2_with(a.m, a.p, a.n, exec)?,
                Family::Thm3pos => dtjones_core::cjp::jones_thm3_pos_with(a.m, a.p, a.n, exec)?,
                Family::Thm3neg => dtjones_core::cjp::jones_thm3_neg_with(a.m, a.p, a.n, exec)?,
                Family::Torus => dtjones_core::cjp::jones_torus_with(a.p, a.n, exec)?,
                Family::Walsh => dtjones_core::cjp::walsh_colored_jones(a.m, a.p, a.n)?,
                Family::Takata | Family::TakataMm | Family::TakataMp => {
                    if a.m < 1 || a.p < 1 {
                        return Err(Exit::usage(format!(
                            "{f} requires m >= 1 and p >= 1 (got m={}, p={})",
                            a.m, a.p
                        )));
                    }
                    f.eval_knot(k, a.n, exec).expect("knot in range")?
                }
            };
            (v, k.to_string())
        }
        _ => return Err(Exit::usage("--l and --t apply to --family takata only")),
    };
    print_poly(
        &value,
        a.format,
        json!({"family": a.family.name(), "m": a.m, "p": a.p, "N": a.n, "knot": label}),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(a: &CompareArgs, exec: Exec) -> CmdResult {
    let left: FamilySpec = a.left.parse()?;
    let right: FamilySpec = a.right.parse()?;
    let grid: Grid = a.grid.parse()?;
    let mut points = 0;
    for m in left.family.m_range(grid.m_max) {
        for p in 1..=grid.p_max {
            let knot = left.knot_at(m, p)?;
            for n in 1..=grid.n_max {
                let lv = left.eval_knot(knot, n, exec).expect("left family covers its own grid")?;
                let Some(rv) = right.eval_knot(knot, n, exec) else {
                    return Err(Exit::fail(format!(
                        "mismatch at m={m},p={p},N={n}: {right} does not compute {knot} (the {left} knot)"
                    )));
                };
                let rv = rv.map_err(|e| Exit::fail(format!("{right} at {knot}, N={n}: {e}")))?;
                if lv != rv {
                    return Err(Exit::fail(format!(
                        "mismatch at m={m},p={p},N={n} ({knot}):\n  {left}: {}\n  {right}: {}",
                        render(&lv),
                        render(&rv)
                    )));
                }
                points += 1;
            }
        }
    }
    println!("{left} and {right} agree on {points} grid points ({grid})");
    Ok(ExitCode::SUCCESS)
}

fn cmd_kz(a: &KzArgs) -> CmdResult {
    let d = a.divisor.unwrap_or(a.n as u64);
    if let Some(which) = a.check_duality {
        let ok = match a.divisor {
            Some(d) => check_duality_at(which, a.m, a.p, a.n, d)?,
            None => check_duality_all_divisors(which, a.m, a.p, a.n)?,
        };
        let at = match a.divisor {
            Some(d) => format!("d={d}"),
            None => "every d | N".to_string(),
        };
        match a.format {
            Format::Text => println!(
                "duality {which} at m={},p={},N={} ({at}): {}",
                a.m,
                a.p,
                a.n,
                if ok { "holds" } else { "FAILS" }
            ),
            Format::Json => println!(
                "{}",
                json!({"duality": which, "m": a.m, "p": a.p, "N": a.n, "divisor": a.divisor, "holds": ok})
            ),
        }
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) });
    }
    let kind: SeriesKind = a.series.as_deref().expect("required by the arg group").parse()?;
    let value = evaluate(kind, a.m, a.p, a.n, d)?;
    let relation = if a.check { Some(check_relation(kind, a.m, a.p, a.n)?) } else { None };
    match a.format {
        Format::Text => {
            println!("{kind}_{{{},{}}}(zeta_{d}) = {}", a.m, a.p, value.value);
            if let Some(ok) = relation {
                println!("relation with J_N at every d | N: {}", if ok { "holds" } else { "FAILS" });
            }
        }
        Format::Json => {
            let mut obj = serde_json::to_value(&value).expect("serializable");
            if let Some(ok) = relation {
                obj["relation_holds"] = json!(ok);
            }
            println!("{obj}");
        }
    }
    Ok(if relation == Some(false) { ExitCode::from(EXIT_FAIL) } else { ExitCode::SUCCESS })
}

fn cmd_bailey(a: &BaileyArgs) -> CmdResult {
    let p = a.iterate;
    let (base, closed) = match a.pair {
        PairName::Slater => (slater_pair(), iterated_pair_slater(p)?),
        PairName::Walsh => (walsh_pair(), iterated_pair_walsh(p)?),
    };
    let iterated = iterate_limit(&base, (p - 1) as usize)?;
    let verifies = verify_bailey_pair(&iterated, a.check_n);
    let matches = pairs_agree(&iterated, &closed, a.check_n);
    let mut chain_ok = true;
    for n in 0..=a.check_n {
        let qn = RationalFn::from_poly(qpochhammer(1, n));
        let expect = match a.pair {
            PairName::Slater => RationalFn::from_poly(c_poly(p, n)?),
            PairName::Walsh => RationalFn::new(dd_poly(p, n)?, qpochhammer(1, n))?,
        };
        chain_ok &= &iterated.beta(n) * &qn == expect;
    }
    let passed = verifies && matches && chain_ok;
    let name = match a.pair {
        PairName::Slater => "slater",
        PairName::Walsh => "walsh",
    };
    match a.format {
        Format::Text => {
            let word = |b: bool| if b { "yes" } else { "NO" };
            println!("pair {name}, iterate {p}, n <= {}", a.check_n);
            println!("  Bailey relation holds: {}", word(verifies));
            println!("  chain steps match the closed form: {}", word(matches));
            println!("  (q)_n beta_n matches the chain sums: {}", word(chain_ok));
        }
        Format::Json => println!(
            "{}",
            json!({
                "pair": name,
                "iterate": p,
                "check_n": a.check_n,
                "verifies": verifies,
                "matches_closed_form": matches,
                "beta_matches_chain_sums": chain_ok,
                "passed": passed,
            })
        ),
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn cmd_verify(a: &VerifyArgs, exec: Exec) -> CmdResult {
    let suite: Suite = a.suite.parse()?;
    let grid = a.grid.as_deref().map(str::parse::<Grid>).transpose()?;
    let report = run_suite(suite, &VerifyOptions { grid, exec, timing: !a.no_timing });
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    for c in report.failures() {
        eprintln!("FAILED {} [{}]{}", c.name, c.params, c.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default());
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let result = match &cli.command {
        Command::Jones(a) => cmd_jones(a, exec),
        Command::Compare(a) => cmd_compare(a, exec),
        Command::Kz(a) => cmd_kz(a),
        Command::Bailey(a) => cmd_bailey(a),
        Command::Verify(a) => cmd_verify(a, exec),
    };
    match result {
        Ok(code) => code,
        Err(Exit { code, msg }) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
