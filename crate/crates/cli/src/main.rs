use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orelim_cli::{
    cmd_catalog, cmd_lu, cmd_ore_residual, cmd_verify, summary, CliError, ExitStatus, Format, Output, Suite,
};

#[derive(Parser)]
#[command(name = "orelim", version, about = "Exact LU factors, periodic elimination and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Matrix,
    Jacobi,
    Ore,
    Full,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Matrix => Suite::Matrix,
            SuiteArg::Jacobi => Suite::Jacobi,
            SuiteArg::Ore => Suite::Ore,
            SuiteArg::Full => Suite::Full,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-minor of a catalog matrix
    Catalog {
        /// Catalog name, e.g. M0_tilde or D_q
        #[arg(long)]
        name: String,
        /// Minor size
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Parameter of D_q
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Print the LU factors of the n-minor of a catalog matrix
    Lu {
        /// Catalog name, e.g. M0_tilde or D_q
        #[arg(long)]
        name: String,
        /// Minor size
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Parameter of D_q
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Run verification suites and write a JSON report
    Verify {
        #[arg(long, value_enum, default_value = "full")]
        suite: SuiteArg,
        /// Depth for every selected suite (defaults: matrix 8, jacobi 12, ore 3)
        #[arg(long, env = "ORELIM_DEPTH")]
        depth: Option<usize>,
        /// Comma-separated structure constants for the Ore suite
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Option<Vec<String>>,
        /// Report file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Residual of the n-th equation (or eq_n^k) on an Ore polynomial
    OreResidual {
        /// Coefficients separated by ';', lowest degree first, e.g. "1; 2 E^1 H^0 + -1/2 E^0 H^2"
        #[arg(long)]
        poly: String,
        /// Structure constant c in HE = E(H + c), a rational
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Equation index
        #[arg(long)]
        n: usize,
        /// Use eq_n^k instead of the n-th equation
        #[arg(long)]
        k: Option<usize>,
    },
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Catalog { name, n, format, q } => cmd_catalog(&name, n, format.into(), q.as_deref()),
        Command::Lu { name, n, format, q } => cmd_lu(&name, n, format.into(), q.as_deref()),
        Command::OreResidual { poly, c, n, k } => cmd_ore_residual(&poly, &c, n, k),
        Command::Verify { suite, depth, c, out } => {
            let (reports, output) = cmd_verify(suite.into(), depth, c.as_deref())?;
            eprintln!("{}", summary(&reports));
            match out {
                Some(path) => {
                    std::fs::write(path, &output.stdout)?;
                    Ok(Output { stdout: String::new(), status: output.status })
                }
                None => Ok(output),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let status = if e.use_stderr() { ExitStatus::Usage } else { ExitStatus::Success };
            return ExitCode::from(status.code() as u8);
        }
    };
    match run(cli.command) {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status().code() as u8)
        }
    }
}
