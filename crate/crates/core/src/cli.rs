//! Command-line interface of the `toric` binary.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse or validation error,
//! 3 duality violation found by `verify` or `random --trials`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cellular::cup_matrix;
use crate::chow::{express_dropped_divisors, intersection_matrix, intersection_number, presentation};
use crate::duality::{batch_verify, trial_fan, verify_duality};
use crate::fan::{Fan, Normalized};
use crate::io::{
    linear_form_string, matrix_json, matrix_latex, matrix_table, rational_latex, rational_string, read_input,
    FanDocument,
};
use crate::matrix::RationalMatrix;
use crate::random::random_complete_fan;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Exact intersection and cup product matrices of toric surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Read inputs as whitespace-separated ray coordinates instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the input describes a complete fan.
    Validate { file: String },
    /// Relabel and change basis so the pivot ray becomes ray n+1 = (1, 0).
    Normalize {
        file: String,
        /// Ray label (1-based) to move to position n+1; defaults to n+1.
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Intersection product matrix.
    Int {
        file: String,
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Cellular cup product matrix.
    Cup {
        file: String,
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Check that the two matrices are mutually inverse.
    Verify {
        file: String,
        /// Also compare against an independently computed inverse.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Quotient-ring presentation of the Chow ring.
    Present {
        file: String,
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Intersection number of two divisors, as a multiple of the point class.
    Reduce {
        file: String,
        /// Ray labels `I,J` (1-based).
        #[arg(long)]
        pair: Pair,
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Draw a random complete fan, or run a batch of duality checks.
    Random {
        /// Ray count `N`, or a range `MIN..MAX`.
        #[arg(long)]
        rays: RayCount,
        /// Coordinate bound for sampled rays.
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        seed: u64,
        /// Number of duality checks to run instead of printing one fan.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pair(usize, usize);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (i, j) = s.split_once(',').ok_or_else(|| format!("expected I,J, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        Ok(Pair(parse(i)?, parse(j)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RayCount(usize, usize);

impl FromStr for RayCount {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => Ok(RayCount(parse(lo)?, parse(hi)?)),
            None => {
                let n = parse(s)?;
                Ok(RayCount(n, n))
            }
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl std::fmt::Display) -> Self {
        CommandOutput { code, stdout: String::new(), stderr: format!("error: {stderr}\n") }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I, stdin: &mut dyn Read) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CommandOutput::ok(text)
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => out,
        Err(out) => out,
    }
}

type Outcome = Result<CommandOutput, CommandOutput>;

fn load_fan(cli: &Cli, file: &str, stdin: &mut dyn Read) -> Result<Fan, CommandOutput> {
    let doc = read_input(file, cli.plain, stdin).map_err(|e| CommandOutput::fail(EXIT_INPUT, e))?;
    doc.to_fan().map_err(|e| CommandOutput::fail(EXIT_INPUT, e))
}

fn normalized(cli: &Cli, file: &str, pivot: Option<usize>, stdin: &mut dyn Read) -> Result<Normalized, CommandOutput> {
    let fan = load_fan(cli, file, stdin)?;
    let pivot = pivot.unwrap_or(fan.len() - 1);
    fan.normalize(pivot).map_err(|e| CommandOutput::fail(EXIT_INPUT, e))
}

fn internal(e: crate::Error) -> CommandOutput {
    CommandOutput::fail(EXIT_INPUT, e)
}

fn render_matrix(format: Format, key: &str, m: &RationalMatrix) -> String {
    match format {
        Format::Json => format!("{}\n", json!({ key: matrix_json(m) })),
        Format::Table => matrix_table(m),
        Format::Latex => matrix_latex(m),
    }
}

fn rays_json(fan: &Fan) -> serde_json::Value {
    json!(fan.rays().iter().map(|&r| <[i64; 2]>::from(r)).collect::<Vec<_>>())
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Validate { file } => {
            let fan = load_fan(cli, file, stdin)?;
            let mults: Vec<String> = fan.multiplicities().iter().map(ToString::to_string).collect();
            let out = match format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "valid": true,
                        "rays": rays_json(&fan),
                        "multiplicities": mults,
                        "normalized": fan.is_normalized(),
                        "has_smooth_vertex": fan.has_smooth_vertex(),
                    })
                ),
                _ => format!(
                    "valid complete fan with {} rays\nrays: {fan}\nmultiplicities: {}\nnormalized: {}\nsmooth vertex: {}\n",
                    fan.len(),
                    mults.join(" "),
                    fan.is_normalized(),
                    fan.has_smooth_vertex()
                ),
            };
            Ok(CommandOutput::ok(out))
        }
        Command::Normalize { file, pivot } => {
            let n = normalized(cli, file, *pivot, stdin)?;
            let out = match format {
                Format::Json => {
                    format!("{}\n", json!({ "rays": rays_json(&n.fan), "map": n.map.rows(), "shift": n.shift }))
                }
                Format::Table => format!("rays: {}\nmap: {}\nshift: {}\n", n.fan, n.map, n.shift),
                Format::Latex => {
                    let m = RationalMatrix::from_integers(&[&n.map.rows()[0], &n.map.rows()[1]]).map_err(internal)?;
                    matrix_latex(&m)
                }
            };
            Ok(CommandOutput::ok(out))
        }
        Command::Int { file, pivot } => {
            let n = normalized(cli, file, *pivot, stdin)?;
            let m = intersection_matrix(&n.fan).map_err(internal)?;
            Ok(CommandOutput::ok(render_matrix(format, "m_int", &m)))
        }
        Command::Cup { file, pivot } => {
            let n = normalized(cli, file, *pivot, stdin)?;
            let m = cup_matrix(&n.fan).map_err(internal)?.matrix;
            Ok(CommandOutput::ok(render_matrix(format, "m_cup", &m)))
        }
        Command::Verify { file, oracle, pivot } => {
            let n = normalized(cli, file, *pivot, stdin)?;
            let report = verify_duality(&n.fan).map_err(internal)?;
            let out = match format {
                Format::Json => {
                    let mut value = json!({
                        "m_int": matrix_json(&report.m_int),
                        "m_cup": matrix_json(&report.m_cup),
                        "product": matrix_json(&report.product),
                        "identity": report.identity_holds,
                    });
                    if *oracle {
                        value["oracle_agrees"] = json!(report.oracle_agrees);
                    }
                    format!("{value}\n")
                }
                Format::Table | Format::Latex => {
                    let render = if format == Format::Table { matrix_table } else { matrix_latex };
                    let mut s = String::new();
                    let _ = write!(s, "M_int:\n{}", render(&report.m_int));
                    let _ = write!(s, "M_cup:\n{}", render(&report.m_cup));
                    let _ = write!(s, "M_int * M_cup:\n{}", render(&report.product));
                    let _ = writeln!(s, "identity: {}", report.identity_holds);
                    if *oracle {
                        let _ = writeln!(s, "oracle agrees: {}", report.oracle_agrees);
                    }
                    s
                }
            };
            let violated = !report.identity_holds || (*oracle && !report.oracle_agrees);
            if violated {
                let stderr = format!(
                    "error: duality violated for fan {} (this is a bug)\n",
                    FanDocument::from_fan(&report.fan).to_json_string()
                );
                return Err(CommandOutput { code: EXIT_VIOLATION, stdout: out, stderr });
            }
            Ok(CommandOutput::ok(out))
        }
        Command::Present { file, pivot } => {
            let n = normalized(cli, file, *pivot, stdin)?;
            let fan = &n.fan;
            let p = presentation(fan);
            let (first, second) = express_dropped_divisors(fan).map_err(internal)?;
            let len = fan.len();
            let basis = |f: &crate::chow::LinearForm| -> Vec<String> {
                f.coefficients()[..len - 2].iter().map(rational_string).collect()
            };
            let out = match format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "rays": rays_json(fan),
                        "linear_forms": p.linear_forms,
                        "nonadjacent_pairs": p.nonadjacent_pairs,
                        "dropped": {
                            format!("x{}", len - 1): basis(&first),
                            format!("x{}", len): basis(&second),
                        },
                    })
                ),
                _ => {
                    let form = |coeffs: &[i64]| linear_form_string(&crate::chow::LinearForm::from_integers(coeffs));
                    let monomials: Vec<String> = p.nonadjacent_pairs.iter().map(|(i, j)| format!("x{i}x{j}")).collect();
                    format!(
                        "rays: {fan}\nA = {}\nB = {}\nmonomials: {}\nx{} = {}\nx{} = {}\n",
                        form(&p.linear_forms[0]),
                        form(&p.linear_forms[1]),
                        if monomials.is_empty() { "(none)".to_string() } else { monomials.join(", ") },
                        len - 1,
                        linear_form_string(&first),
                        len,
                        linear_form_string(&second),
                    )
                }
            };
            Ok(CommandOutput::ok(out))
        }
        Command::Reduce { file, pair, pivot } => {
            let fan = match pivot {
                Some(_) => normalized(cli, file, *pivot, stdin)?.fan,
                None => load_fan(cli, file, stdin)?,
            };
            let value = intersection_number(&fan, pair.0, pair.1).map_err(|e| CommandOutput::fail(EXIT_INPUT, e))?;
            let out = match format {
                Format::Json => format!("{}\n", json!({ "pair": [pair.0, pair.1], "value": rational_string(&value) })),
                Format::Table => format!("x{}*x{} = {} [V]\n", pair.0, pair.1, rational_string(&value)),
                Format::Latex => format!("{}\n", rational_latex(&value)),
            };
            Ok(CommandOutput::ok(out))
        }
        Command::Random { rays, bound, seed, trials } => match trials {
            None => {
                let fan = if rays.0 == rays.1 {
                    random_complete_fan(rays.0, *bound, *seed)
                } else {
                    trial_fan(*seed, 0, (rays.0, rays.1), *bound).map(|(_, f)| f)
                }
                .map_err(|e| CommandOutput::fail(EXIT_USAGE, e))?;
                let out = match format {
                    Format::Json => format!("{}\n", FanDocument::from_fan(&fan).to_json_string()),
                    _ => format!("{fan}\n"),
                };
                Ok(CommandOutput::ok(out))
            }
            Some(t) => {
                let summary = batch_verify(*t, (rays.0, rays.1), *bound, *seed)
                    .map_err(|e| CommandOutput::fail(EXIT_USAGE, e))?;
                let out = match format {
                    Format::Json => format!(
                        "{}\n",
                        json!({
                            "trials": summary.trials,
                            "failures": summary.failures_json(),
                            "generation_failures": summary.generation_failures.len(),
                            "elapsed_ms": summary.elapsed.as_millis() as u64,
                        })
                    ),
                    _ => format!(
                        "trials: {}\nfailures: {}\ngeneration failures: {}\nelapsed: {:.3} s\n",
                        summary.trials,
                        summary.failures.len(),
                        summary.generation_failures.len(),
                        summary.elapsed.as_secs_f64()
                    ),
                };
                if summary.all_passed() {
                    Ok(CommandOutput::ok(out))
                } else {
                    let stderr = format!("error: duality violated:\n{}\n", summary.failures_json());
                    Err(CommandOutput { code: EXIT_VIOLATION, stdout: out, stderr })
                }
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], input: &str) -> CommandOutput {
        let argv = std::iter::once("toric").chain(args.iter().copied());
        run_command(argv, &mut input.as_bytes())
    }

    const EXAMPLE: &str = r#"{"rays": [[-2,1],[-2,-1],[1,-2],[1,0],[0,1]]}"#;

    #[test]
    fn int_table() {
        let out = run(&["int", "-"], EXAMPLE);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "-1/4    1/4      0\n 1/4  -3/20    1/5\n   0    1/5  -1/10\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(&["frobnicate"], "").code, EXIT_USAGE);
        assert_eq!(run(&["reduce", "-", "--pair", "1"], EXAMPLE).code, EXIT_USAGE);
        assert_eq!(run(&["int", "-", "--format", "csv"], EXAMPLE).code, EXIT_USAGE);
        assert_eq!(run(&["random", "--rays", "2", "--bound", "3", "--seed", "1"], "").code, EXIT_USAGE);
        assert_eq!(run(&["--help"], "").code, EXIT_OK);
    }

    #[test]
    fn reduce_and_pivot() {
        let out = run(&["reduce", "-", "--pair", "2,2", "--format", "json"], EXAMPLE);
        assert_eq!(out.stdout, "{\"pair\":[2,2],\"value\":\"-3/20\"}\n");
        let out = run(&["reduce", "-", "--pair", "2,7"], EXAMPLE);
        assert_eq!(out.code, EXIT_INPUT);
        let out = run(&["normalize", "-", "--pivot", "9"], EXAMPLE);
        assert_eq!(out.code, EXIT_INPUT);
    }

    #[test]
    fn ray_count_parsing() {
        assert_eq!("5".parse::<RayCount>().unwrap(), RayCount(5, 5));
        assert_eq!("3..22".parse::<RayCount>().unwrap(), RayCount(3, 22));
        assert!("3..".parse::<RayCount>().is_err());
        assert_eq!(" 1, 2".parse::<Pair>().unwrap(), Pair(1, 2));
    }
}
