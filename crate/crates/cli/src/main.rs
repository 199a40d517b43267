//! `cuspquot`: Hilbert and Quot series of the cusp, staircase motives, and
//! the verification suite.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cusp_cli::acceptance::{self, Level};
use cusp_cli::render::{self, RenderError, SeriesFormat};
use cusp_cli::Cache;

#[derive(Parser)]
#[command(name = "cuspquot", version, about = "Point counts of punctual Quot schemes of the cusp")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MotiveFormatArg {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Print H_D and Q_D (numerators NH_D, NQ_D over (t;q)_D).
    Series {
        /// Rank D.
        #[arg(long)]
        d: usize,
        /// Count over F_P instead of symbolically (required for D > 3).
        #[arg(long)]
        prime: Option<u64>,
        /// Also print the first K coefficients of each series.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Print the staircase motive [V_D] or a stratum class [V_(A,B)].
    Motive {
        /// Rank D.
        #[arg(long, required_unless_present = "table", conflicts_with = "table")]
        d: Option<usize>,
        /// Stratum with dim ker = A and rank = B.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        table: Option<Vec<u32>>,
        /// `csv` prints the table d,motive for d = 0..=D.
        #[arg(long, value_enum, default_value = "text")]
        format: MotiveFormatArg,
    },
    /// Run the acceptance suite and print a pass/fail table.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
        /// Do not read or write the result cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Solve the rank recursion up to D and compare with the closed form.
    Conjecture {
        #[arg(long)]
        max_d: usize,
    },
}

fn open_cache(disabled: bool) -> Cache {
    if disabled {
        return Cache::in_memory();
    }
    let Some(dir) = Cache::default_dir() else {
        eprintln!("warning: no cache directory (set CUSPQUOT_CACHE_DIR or HOME); using memory");
        return Cache::in_memory();
    };
    match Cache::open(&dir) {
        Ok(cache) => {
            for w in cache.warnings() {
                eprintln!("warning: {w}");
            }
            cache
        }
        Err(e) => {
            eprintln!("warning: cannot open cache in {}: {e}; using memory", dir.display());
            Cache::in_memory()
        }
    }
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn fail(e: RenderError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Series { d, prime, order, format } => {
            let format = match format {
                FormatArg::Json => SeriesFormat::Json,
                FormatArg::Csv => SeriesFormat::Csv,
            };
            match render::series(d, prime, order, format) {
                Ok(s) => emit(&s),
                Err(e) => fail(e),
            }
        }
        Command::Motive { d, table, format } => {
            let result = match (d, table.as_deref()) {
                (_, Some(&[a, b])) => render::motive_stratum(a, b),
                (Some(d), _) => render::motive(d, matches!(format, MotiveFormatArg::Csv)),
                _ => unreachable!("clap requires --d or --table A B"),
            };
            match result {
                Ok(s) => emit(&s),
                Err(e) => fail(e),
            }
        }
        Command::Verify { level, no_cache } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let cache = open_cache(no_cache);
            let outcomes = acceptance::run_all(level, &cache);
            let code = emit(&acceptance::render(&outcomes));
            if code != ExitCode::SUCCESS || !acceptance::all_passed(&outcomes) {
                return ExitCode::from(1);
            }
            code
        }
        Command::Conjecture { max_d } => match render::conjecture(max_d) {
            Ok((s, ok)) => {
                let code = emit(&s);
                if ok {
                    code
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => fail(e),
        },
    }
}
