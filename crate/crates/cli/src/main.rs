//! `fordapprox`: continued fractions, Ford circles and the equivalence
//! checker from the command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fordapprox_core::{
    cf_of_real, render_chain, render_ford_field, render_statement_v, statement_v_witness, theorem_u_check_with,
    verify_sweep, Error, Rational, RealNumber, RenderSpec, Search, SweepParams, Window,
};

const REAL_HELP: &str = "<p>/<q> | golden | sqrt:<n> | cf:<b0>;<b1>,<b2>,…[,(<periodic block>)]";

#[derive(Parser, Debug)]
#[command(name = "fordapprox", version, about = "Continued fractions, Ford circles and best approximations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the continued fraction expansion
    Cf {
        #[arg(value_parser = parse_real, allow_hyphen_values = true, help = REAL_HELP)]
        real: RealNumber,
    },
    /// Print the convergents A_n/B_n, one per line
    Convergents {
        #[arg(value_parser = parse_real, allow_hyphen_values = true, help = REAL_HELP)]
        real: RealNumber,
        /// Number of convergents (default: all for rationals, 10 otherwise)
        #[arg(short = 'n')]
        count: Option<usize>,
    },
    /// Evaluate all five equivalent statements for x against α as JSON
    Check {
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(value_parser = parse_real, allow_hyphen_values = true, help = REAL_HELP)]
        alpha: RealNumber,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Sweep the equivalence check over a grid of rationals
    Verify {
        #[arg(long)]
        max_den_x: u64,
        #[arg(long)]
        max_den_alpha: u64,
        /// Half-open α window LO..HI; x ranges over (LO-1, HI+1)
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: (Rational, Rational),
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Write an SVG drawing
    Render {
        #[command(subcommand)]
        figure: Figure,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Test every numerator within REACH of α instead of the four nearest
    #[arg(long, value_name = "REACH")]
    exhaustive: Option<u32>,
}

impl SearchArgs {
    fn search(&self) -> Search {
        self.exhaustive.map_or(Search::Pruned, |reach| Search::Exhaustive { reach })
    }
}

#[derive(Subcommand, Debug)]
enum Figure {
    /// Ford circles over a window
    Field {
        #[command(flatten)]
        opts: RenderOpts,
    },
    /// The continued fraction chain of α over the Ford field
    Chain {
        #[arg(value_parser = parse_real, allow_hyphen_values = true, help = REAL_HELP)]
        alpha: RealNumber,
        #[arg(long, default_value_t = 5)]
        depth: usize,
        #[command(flatten)]
        opts: RenderOpts,
    },
    /// C_x, its tangent witness C_y and α
    Witness {
        #[arg(value_parser = parse_rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(value_parser = parse_real, allow_hyphen_values = true, help = REAL_HELP)]
        alpha: RealNumber,
        #[command(flatten)]
        opts: RenderOpts,
    },
}

#[derive(Args, Debug)]
struct RenderOpts {
    /// Window LO..HI
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(Rational, Rational)>,
    #[arg(long, default_value_t = 20)]
    max_den: u64,
    #[arg(long, default_value_t = 800)]
    width: u32,
    /// Output file (default: standard output)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl RenderOpts {
    fn spec(&self, default_window: (Rational, Rational)) -> RenderSpec {
        let (lo, hi) = self.window.clone().unwrap_or(default_window);
        RenderSpec {
            max_den: self.max_den,
            width_px: self.width,
            ..RenderSpec::window(lo, hi)
        }
    }

    fn emit(&self, svg: &str) -> Result<(), String> {
        match &self.output {
            Some(path) => fs::write(path, svg).map_err(|e| format!("{}: {e}", path.display())),
            None => {
                print!("{svg}");
                Ok(())
            }
        }
    }
}

fn parse_real(s: &str) -> Result<RealNumber, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_window(s: &str) -> Result<(Rational, Rational), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("malformed window {s:?}; expected LO..HI"))?;
    let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
    if lo >= hi {
        return Err(format!("empty window {s:?}"));
    }
    Ok((lo, hi))
}

fn unit_window_at(t: &Rational) -> (Rational, Rational) {
    let lo = Rational::from(t.floor());
    let hi = &lo + &Rational::one();
    (lo, hi)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let fail = |e: Error| e.to_string();
    match cli.command {
        Command::Cf { real } => println!("{}", cf_of_real(&real)),
        Command::Convergents { real, count } => {
            let cf = cf_of_real(&real);
            let count = count.or(cf.len()).unwrap_or(10);
            for c in cf.convergents(count).map_err(fail)? {
                println!("{c}");
            }
        }
        Command::Check { x, alpha, search } => {
            let report = theorem_u_check_with(&x, &alpha, search.search()).map_err(fail)?;
            println!("{}", to_json(&report));
            if !report.consistent {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Verify {
            max_den_x,
            max_den_alpha,
            window: (lo, hi),
            search,
        } => {
            let params = SweepParams {
                max_den_x,
                max_den_alpha,
                window: Window { lo, hi },
                search: search.search(),
            };
            let report = verify_sweep(&params).map_err(fail)?;
            println!("{}", to_json(&report));
            if !report.is_consistent() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Render { figure } => match figure {
            Figure::Field { opts } => {
                let svg = render_ford_field(&opts.spec((Rational::zero(), Rational::one()))).map_err(fail)?;
                opts.emit(&svg)?;
            }
            Figure::Chain { alpha, depth, opts } => {
                let b0 = cf_of_real(&alpha).b0().clone();
                let svg = render_chain(&alpha, depth, &opts.spec(unit_window_at(&Rational::from(b0)))).map_err(fail)?;
                opts.emit(&svg)?;
            }
            Figure::Witness { x, alpha, opts } => {
                let default_window = match statement_v_witness(&x, &alpha).map_err(fail)? {
                    Some(y) => {
                        let (left, right) = if x < y { (&x, &y) } else { (&y, &x) };
                        (Rational::from(left.floor()), Rational::from(-(-right).floor()))
                    }
                    None => unit_window_at(&x),
                };
                let svg = render_statement_v(&x, &alpha, &opts.spec(default_window)).map_err(fail)?;
                opts.emit(&svg)?;
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
