//! Command line front end: evaluate single values, print whole tables,
//! run the cross-strategy verifier, benchmark the strategies, and show
//! how far the binary64 evaluation drifts from the exact one.
//!
//! Exit codes: 0 on success, 1 when computation or verification fails,
//! 2 for usage errors (clap's default).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use recurharm::{
    bench, error_report, eval, render_reports, render_table, render_value, run_suite,
    BenchReport, Error, EvalStrategy, RenderFormat,
};

#[derive(Parser)]
#[command(name = "recurharm", version, about = "Exact recursive harmonic numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum StrategyArg {
    Definition,
    Table,
    Binomial,
    /// Every strategy, cross-checked against the others.
    All,
}

impl StrategyArg {
    fn expand(self) -> Vec<EvalStrategy> {
        match self {
            StrategyArg::Definition => vec![EvalStrategy::Definition],
            StrategyArg::Table => vec![EvalStrategy::Table],
            StrategyArg::Binomial => vec![EvalStrategy::Binomial],
            StrategyArg::All => EvalStrategy::ALL.to_vec(),
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Json,
    Latex,
}

impl From<FormatArg> for RenderFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Plain => RenderFormat::Plain,
            FormatArg::Csv => RenderFormat::Csv,
            FormatArg::Json => RenderFormat::Json,
            FormatArg::Latex => RenderFormat::Latex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate H_n^(m) exactly.
    Eval {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = StrategyArg::Table)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Print the table of H_n^(m) for n <= n-max, m <= m-max.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Cross-check the strategies and the structural invariants.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long)]
        m_max: u32,
    },
    /// Time the strategies over a grid of powers of two.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t = StrategyArg::All)]
        strategy: StrategyArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 3)]
        repetitions: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Compare the binary64 alternating sum against the exact value.
    FloatError {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
}

struct RunOutput {
    text: String,
    ok: bool,
}

impl RunOutput {
    fn ok(text: String) -> Self {
        RunOutput { text, ok: true }
    }

    fn failed(text: String) -> Self {
        RunOutput { text, ok: false }
    }
}

fn cmd_eval(n: u32, m: u32, strategy: StrategyArg, format: RenderFormat) -> Result<RunOutput, Error> {
    let strategies = strategy.expand();
    let mut values = Vec::with_capacity(strategies.len());
    for s in &strategies {
        values.push((*s, eval(n, m, *s)?));
    }
    let (_, first) = &values[0];
    for (s, v) in &values[1..] {
        if v != first {
            return Ok(RunOutput::failed(format!(
                "strategies disagree at (n={n}, m={m}): {} gives {}, {} gives {}",
                values[0].0, first, s, v
            )));
        }
    }
    Ok(RunOutput::ok(render_value(first, format)))
}

fn cmd_table(n_max: u32, m_max: u32, format: RenderFormat) -> Result<RunOutput, Error> {
    let table = recurharm::build_table(n_max, m_max)?;
    Ok(RunOutput::ok(render_table(&table, format)))
}

fn cmd_verify(n_max: u32, m_max: u32) -> Result<RunOutput, Error> {
    let summary = run_suite(n_max, m_max)?;
    let text = summary.render_text();
    Ok(if summary.all_passed() {
        RunOutput::ok(text)
    } else {
        RunOutput::failed(text)
    })
}

fn bench_grid(n_max: u32) -> Vec<u32> {
    let mut ns = Vec::new();
    let mut n = 1u32;
    while n <= n_max {
        ns.push(n);
        match n.checked_mul(2) {
            Some(next) => n = next,
            None => break,
        }
    }
    ns
}

fn cmd_bench(
    n_max: u32,
    m_max: u32,
    strategy: StrategyArg,
    repetitions: u32,
    format: RenderFormat,
) -> Result<RunOutput, Error> {
    let mut reports: Vec<BenchReport> = Vec::new();
    for n in bench_grid(n_max) {
        for m in 0..=m_max {
            for s in strategy.expand() {
                reports.push(bench(n, m, s, repetitions)?);
            }
        }
    }
    Ok(RunOutput::ok(render_reports(&reports, format)?))
}

fn cmd_float_error(n: u32, m: u32, format: RenderFormat) -> Result<RunOutput, Error> {
    let report = error_report(n, m)?;
    let text = match format {
        RenderFormat::Plain => format!(
            "n: {}\nm: {}\nexact: {}\nfloat_value: {:.16e}\nabs_error: {:.16e}\nrel_error: {:.16e}\nlargest_term_magnitude: {:.16e}",
            report.n,
            report.m,
            report.exact.canonical(),
            report.float_value,
            report.abs_error,
            report.rel_error,
            report.largest_term_magnitude
        ),
        other => render_reports(&[report], other)?,
    };
    Ok(RunOutput::ok(text))
}

fn run(command: Command) -> Result<RunOutput, Error> {
    match command {
        Command::Eval { n, m, strategy, format } => cmd_eval(n, m, strategy, format.into()),
        Command::Table { n_max, m_max, format } => cmd_table(n_max, m_max, format.into()),
        Command::Verify { n_max, m_max } => cmd_verify(n_max, m_max),
        Command::Bench {
            n_max,
            m_max,
            strategy,
            repetitions,
            format,
        } => cmd_bench(n_max, m_max, strategy, repetitions, format.into()),
        Command::FloatError { n, m, format } => cmd_float_error(n, m, format.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(RunOutput { text, ok }) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
