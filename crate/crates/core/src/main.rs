use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use skewcode::catalog::{
    code_report, component_divisors, enumerate_right_divisors, factor_xn_minus_beta,
    parameter_histogram, render_report, CodeDescription, ReportFormat, SearchJob,
};
use skewcode::codes::DEFAULT_ENUMERATION_LIMIT;
use skewcode::finite_field::first_irreducible;
use skewcode::{Automorphism, Error, FieldSpec, Result, RingElement};

#[derive(Parser)]
#[command(
    name = "skewcode",
    version,
    about = "Skew constacyclic codes over F_q + uF_q + vF_q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field utilities.
    Field {
        #[command(subcommand)]
        command: FieldCommand,
    },
    /// Factor x^n - beta into monic irreducibles over F_q.
    Factor {
        /// Field spec, e.g. "p=5 m=2 mod=1,1,1".
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        /// Element in canonical integer encoding.
        #[arg(long)]
        beta: String,
        /// Also list the monic divisors that are right divisors under theta_t.
        #[arg(long)]
        t: Option<u32>,
    },
    /// List right divisors of x^n - alpha over R.
    Divisors {
        #[arg(long)]
        field: String,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: usize,
        /// Unit of R as a|b|c.
        #[arg(long)]
        alpha: String,
    },
    /// Report the parameters of a code given in a description file.
    Code {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        report: Format,
        /// Fail with exit code 3 when a distance exceeds the limit.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: u64,
    },
    /// Build and catalog every code generated by a right divisor of x^n - alpha.
    Search {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: usize,
        /// Modulus coefficients c0,...,cm (default: first irreducible in base-p order).
        #[arg(long = "mod")]
        modulus: Option<String>,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FieldCommand {
    /// Validate a field spec and print its canonical form.
    Check { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Field {
            command: FieldCommand::Check { spec },
        } => {
            let spec: FieldSpec = spec.parse()?;
            println!("{spec} q={}", spec.q());
        }
        Command::Factor { field, n, beta, t } => {
            let spec: FieldSpec = field.parse()?;
            let beta = spec.parse_element(&beta)?;
            for f in factor_xn_minus_beta(n, beta)? {
                println!("{f}");
            }
            if let Some(t) = t {
                let aut = Automorphism::new(spec, t)?;
                println!("# right divisors under theta_{t}");
                for f in component_divisors(n, beta, aut)? {
                    println!("{f}");
                }
            }
        }
        Command::Divisors { field, t, n, alpha } => {
            let spec: FieldSpec = field.parse()?;
            let aut = Automorphism::new(spec, t)?;
            let alpha = RingElement::parse(spec, &alpha)?;
            let divisors = enumerate_right_divisors(n, alpha, aut)?;
            for f in &divisors {
                println!("{f}");
            }
            eprintln!("{} right divisors", divisors.len());
        }
        Command::Code {
            input,
            report,
            strict,
            limit,
        } => {
            let text = std::fs::read_to_string(&input)?;
            let code = CodeDescription::parse(&text)?.build()?;
            print!(
                "{}",
                code_report(&code, limit, strict)?.render(report.into())?
            );
        }
        Command::Search {
            p,
            m,
            modulus,
            t,
            n,
            alpha,
            limit,
            out,
            format,
        } => {
            let coeffs = match modulus {
                Some(s) => s
                    .split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient {c:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => first_irreducible(p, m)?,
            };
            let spec = FieldSpec::new(p, m, &coeffs)?;
            let aut = Automorphism::new(spec, t)?;
            let alpha = RingElement::parse(spec, &alpha)?;
            let entries = skewcode::catalog::run_search(&SearchJob {
                aut,
                n,
                alpha,
                limit,
            })?;
            let text = render_report(&entries, format.into())?;
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            for ((len, k, d), count) in parameter_histogram(&entries) {
                let d = d.map_or("-".to_string(), |d| d.to_string());
                eprintln!("[{len}, {k}, {d}] x{count}");
            }
        }
    }
    Ok(())
}
