//! `scalerep`: evaluate terms in scaled structures, run axiom suites, compose
//! scalings and run the lattice demo.
//!
//! Exit codes: 0 success, 1 a check reported failures, 2 usage or input error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scalerep::axioms::{run_suite, run_wyz_control, CheckReport, Suite, SuiteConfig};
use scalerep::gauge::{run_demo, FieldSpec, GaugeConfig, PotentialSpec};
use scalerep::structure::{compose_scaling, Corruption, ExternalView, InternalView, Interpretation};
use scalerep::term::{evaluate, parse_term, Environment};
use scalerep::{parse_structure, CRational, ExactStructure, Rational};

#[derive(Parser, Debug)]
#[command(name = "scalerep", version, about = "Scaled number structures with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a term in one view of a structure
    Eval(EvalArgs),
    /// Run a seeded axiom suite
    Check(CheckArgs),
    /// Compose two or more scalings of the same number type
    Compose(ComposeArgs),
    /// Run the lattice demo and print a JSON report
    Gauge(GaugeArgs),
    /// Run the {+, -, x/w, y/, 0, z} homogeneity control
    Wyz(WyzArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum View {
    Internal,
    External,
    Base,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Term to evaluate, e.g. "(2*x + 1)/y"
    #[arg(long)]
    expr: String,
    /// Variable binding NAME=VALUE (base value); repeatable
    #[arg(long = "bind", value_name = "NAME=VALUE")]
    binds: Vec<String>,
    /// Structure literal, e.g. rat:r=3/2 or cpx:c=2+1i
    #[arg(long = "struct", default_value = "cpx:c=1")]
    structure: String,
    #[arg(long, value_enum, default_value = "external")]
    view: View,
    /// Negative control applied to the external view
    #[arg(long, value_name = "NAME")]
    corrupt: Option<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// field, order, nat, conj or substructure
    #[arg(long)]
    suite: String,
    #[arg(long = "struct")]
    structure: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, env = "SCALEREP_SEED", default_value_t = 0)]
    seed: u64,
    /// Print the JSON report instead of a summary
    #[arg(long)]
    json: bool,
    /// Negative control: unscaled-div, unflipped-order or conj-scale
    #[arg(long, value_name = "NAME")]
    corrupt: Option<String>,
}

#[derive(Args, Debug)]
struct ComposeArgs {
    /// Structure literals, applied left to right
    #[arg(required = true)]
    scales: Vec<String>,
}

#[derive(Args, Debug)]
struct GaugeArgs {
    #[arg(long, default_value_t = 1)]
    dims: usize,
    #[arg(long, default_value_t = 64)]
    sites: usize,
    #[arg(long, default_value_t = 0.1)]
    dx: f64,
    /// const:<a> or sine:amp=<a>,period=<n>
    #[arg(long, default_value = "sine:amp=0.2,period=16")]
    potential: String,
    /// const, linear, exp or transport
    #[arg(long, default_value = "exp")]
    field: String,
    /// Direction of the derivatives
    #[arg(long, default_value_t = 0)]
    direction: usize,
}

#[derive(Args, Debug)]
struct WyzArgs {
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, env = "SCALEREP_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

/// A usage or input error, reported on stderr with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn structure(lit: &str) -> Result<ExactStructure, Usage> {
    Ok(parse_structure(lit)?)
}

fn corruption(name: Option<&str>) -> Result<Option<Corruption>, Usage> {
    name.map(|n| Corruption::from_name(n).ok_or_else(|| Usage(format!("unknown corruption `{n}`"))))
        .transpose()
}

fn cmd_eval(args: EvalArgs) -> Result<String, Usage> {
    let term = parse_term(&args.expr)?;
    let s = structure(&args.structure)?;
    let mut env = Environment::new();
    for b in &args.binds {
        let (name, value) = b
            .split_once('=')
            .ok_or_else(|| Usage(format!("binding `{b}` is not NAME=VALUE")))?;
        let v: CRational = value.trim().parse().map_err(|e| Usage(format!("binding `{b}`: {e}")))?;
        env.bind(name.trim(), v);
    }
    Ok(match args.view {
        View::Base => {
            let view = ExternalView::base(s.number_type());
            view.render(&evaluate(&term, &env, &view)?)
        }
        View::External => {
            let view = match corruption(args.corrupt.as_deref())? {
                Some(c) => ExternalView::corrupted(s, c),
                None => ExternalView::new(s),
            };
            view.render(&evaluate(&term, &env, &view)?)
        }
        View::Internal => {
            let view = InternalView::new(s);
            view.render(&evaluate(&term, &env, &view)?)
        }
    })
}

fn report_output(report: &CheckReport, json: bool) -> (String, ExitCode) {
    let text = if json {
        report.to_json()
    } else {
        report.summary().trim_end().to_string()
    };
    (
        text,
        if report.pass {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        },
    )
}

fn cmd_check(args: CheckArgs) -> Result<(String, ExitCode), Usage> {
    let suite = Suite::from_name(&args.suite).ok_or_else(|| Usage(format!("unknown suite `{}`", args.suite)))?;
    let s = structure(&args.structure)?;
    let mut cfg = SuiteConfig::new(args.samples, args.seed);
    cfg.corruption = corruption(args.corrupt.as_deref())?;
    Ok(report_output(&run_suite(suite, &s, cfg)?, args.json))
}

fn cmd_compose(args: ComposeArgs) -> Result<String, Usage> {
    if args.scales.len() < 2 {
        return Err(Usage("compose needs at least two structure literals".into()));
    }
    let mut handles = args.scales.iter().map(|l| structure(l));
    let mut acc = handles.next().expect("nonempty")?;
    for h in handles {
        let h = h?;
        if h.number_type() != acc.number_type() {
            return Err(Usage(format!("cannot compose {acc} with {h}: number types differ")));
        }
        acc = compose_scaling(&acc, h.scale())?;
    }
    Ok(acc.to_string())
}

fn cmd_gauge(args: GaugeArgs) -> Result<String, Usage> {
    let cfg = GaugeConfig {
        dims: args.dims,
        sites: args.sites,
        dx: args.dx,
        potential: args.potential.parse::<PotentialSpec>()?,
        field: args.field.parse::<FieldSpec>()?,
        direction: args.direction,
    };
    Ok(run_demo(&cfg)?.to_json())
}

fn cmd_wyz(args: WyzArgs) -> Result<(String, ExitCode), Usage> {
    let q = |s: &str| s.parse::<Rational>().map_err(|e| Usage(format!("`{s}`: {e}")));
    let report = run_wyz_control(&q(&args.w)?, &q(&args.y)?, &q(&args.z)?, args.samples, args.seed)?;
    Ok(report_output(&report, args.json))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a).map(|s| (s, ExitCode::SUCCESS)),
        Command::Check(a) => cmd_check(a),
        Command::Compose(a) => cmd_compose(a).map(|s| (s, ExitCode::SUCCESS)),
        Command::Gauge(a) => cmd_gauge(a).map(|s| (s, ExitCode::SUCCESS)),
        Command::Wyz(a) => cmd_wyz(a),
    };
    match result {
        Ok((out, code)) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout(), "{out}");
            code
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
