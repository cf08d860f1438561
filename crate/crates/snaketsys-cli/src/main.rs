//! `snaketsys`: command-line front end for snake modules and extended T-systems.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error, 3 domain
//! precondition failure (e.g. a non-prime snake), 4 parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use snaketsys::io::{from_json, to_json, DatumJson, PointJson, ReinekeJson, RelationJson, SnakeJson, TableJson};
use snaketsys::lusztig::{rho, rho_chain};
use snaketsys::quiver::fmt_half;
use snaketsys::realize::{relation_monomials, Realization};
use snaketsys::reineke::{epsilon_any, epsilon_star};
use snaketsys::snakes::{is_prime_snake, is_snake, prime_split_points, qr_sequences, translate_twisted};
use snaketsys::tsystem::{check_theorem_a_hypotheses, extended_tsystem};
use snaketsys::verify::{self, Suite};
use snaketsys::{Error, Flavor, HeightFunction, Vertex};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "snaketsys", version, about = "Snake modules, Reineke's epsilon and extended T-systems in type A")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand.
#[derive(Args, Debug)]
struct Config {
    /// Rank n of A_n.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Flavour of the height function.
    #[arg(long, global = true, value_enum, default_value_t = FlavorArg::Untwisted)]
    flavor: FlavorArg,
    /// Height function as a comma-separated list of doubled values 2ξ_1,…,2ξ_n.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    xi: Option<Vec<i64>>,
    /// Middle node n₀ of a twisted height function (n = 2n₀ - 1).
    #[arg(long, global = true)]
    n0: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Untwisted,
    Twisted,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RealizationArg {
    QdatumA,
    QdatumB,
    Custom,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render the repetition quiver between two heights, with φ labels on the window Γ.
    Quiver {
        /// Lowest height k (integer); defaults to the bottom of Γ.
        #[arg(long, allow_hyphen_values = true)]
        k_lo: Option<i64>,
        /// Highest height k (integer); defaults to the top of Γ.
        #[arg(long, allow_hyphen_values = true)]
        k_hi: Option<i64>,
    },
    /// Check whether a snake JSON is a (prime) snake and report its prime factorization.
    SnakeCheck {
        /// Snake JSON file (standard input if omitted or `-`).
        input: Option<PathBuf>,
    },
    /// Q/R sequences of a prime snake.
    Qr {
        input: Option<PathBuf>,
    },
    /// Extended T-system relation of a prime snake.
    Tsystem {
        input: Option<PathBuf>,
        /// Also render the relation in dominant monomials.
        #[arg(long, value_enum)]
        realization: Option<RealizationArg>,
        /// Custom monomial table (JSON) for `--realization custom`.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Reineke's ε_j and ε*_j of a datum on a canonical window (carrier `delta:0|1`).
    Reineke {
        input: Option<PathBuf>,
        /// Node j; all nodes when omitted.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Transport a datum along the chain V<j> with ρ (carrier `gamma-THETA` or `vj:<j>`).
    Rho {
        input: Option<PathBuf>,
        /// Print every intermediate datum.
        #[arg(long)]
        chain: bool,
    },
    /// Translate a twisted snake in Γ^Θ to the untwisted snake P† for θ.
    Translate {
        input: Option<PathBuf>,
    },
    /// Run randomized property suites.
    Verify {
        /// moves, rho, reineke, qr or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random inputs per property family.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 4,
            Error::InvalidHeight(_) | Error::BadNode { .. } | Error::RankMismatch { .. } | Error::WrongFlavor(_) => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn config_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure { code: 4, message: format!("{}: {e}", p.display()) })?
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure { code: 4, message: format!("stdin: {e}") })?;
        }
    }
    Ok(text)
}

impl Config {
    fn flavor(&self) -> Flavor {
        match self.flavor {
            FlavorArg::Untwisted => Flavor::Untwisted,
            FlavorArg::Twisted => Flavor::Twisted,
        }
    }

    /// The height function selected by `--xi`, or the canonical one for the flavour.
    fn height_function(&self) -> Result<HeightFunction, Failure> {
        let flavor = self.flavor();
        let n0 = match flavor {
            Flavor::Twisted => Some(
                self.n0
                    .or_else(|| self.n.map(|n| n.div_ceil(2)))
                    .or_else(|| self.xi.as_ref().map(|x| x.len().div_ceil(2)))
                    .ok_or_else(|| config_error("twisted height functions need --n0, --n or --xi"))?,
            ),
            Flavor::Untwisted => None,
        };
        let xi = match &self.xi {
            Some(xi2) => HeightFunction::from_doubled(flavor, xi2.clone(), n0)?,
            None => match flavor {
                Flavor::Twisted => HeightFunction::big_theta(n0.expect("set above"))?,
                Flavor::Untwisted => {
                    let n = self.n.ok_or_else(|| config_error("untwisted height functions need --n or --xi"))?;
                    HeightFunction::canonical(n, 0)?
                }
            },
        };
        if let Some(n) = self.n {
            if n != xi.n() {
                return Err(config_error(format!("--n {n} does not match the height function (n = {})", xi.n())));
            }
        }
        Ok(xi)
    }
}

fn fmt_point(v: Vertex) -> String {
    format!("({},{})", v.i, fmt_half(v.k2))
}

fn fmt_points(p: &[Vertex]) -> String {
    format!("[{}]", p.iter().map(|&v| fmt_point(v)).collect::<Vec<_>>().join(", "))
}

fn read_snake(input: &Option<PathBuf>) -> Result<(HeightFunction, Vec<Vertex>), Failure> {
    let s: SnakeJson = from_json(&read_input(input)?)?;
    Ok((s.height_function()?, s.vertices()?))
}

fn require_prime(xi: &HeightFunction, p: &[Vertex]) -> Result<(), Failure> {
    if !is_snake(xi, p) {
        return Err(Error::NotSnake(fmt_points(p)).into());
    }
    if !is_prime_snake(xi, p) {
        return Err(Error::NotPrimeSnake { split_points: prime_split_points(xi, p) }.into());
    }
    Ok(())
}

fn cmd_quiver(cfg: &Config, k_lo: Option<i64>, k_hi: Option<i64>) -> Result<String, Failure> {
    let xi = cfg.height_function()?;
    let window = xi.gamma_window();
    let k2_lo = k_lo.map(|k| 2 * k).unwrap_or_else(|| window.iter().map(|v| v.k2).min().expect("window is nonempty"));
    let k2_hi = k_hi.map(|k| 2 * k).unwrap_or_else(|| window.iter().map(|v| v.k2).max().expect("window is nonempty"));
    if k2_lo > k2_hi {
        return Err(config_error("--k-lo must not exceed --k-hi"));
    }
    let phi = xi.phi_map()?;
    let vertices: Vec<Vertex> = (k2_lo..=k2_hi)
        .flat_map(|k2| (1..=xi.n()).map(move |i| Vertex::new(i, k2)))
        .filter(|&v| xi.is_vertex(v))
        .collect();
    Ok(match cfg.format {
        Format::Dot => xi.to_dot(k2_lo, k2_hi)?,
        Format::Json => to_json(&json!({
            "n": xi.n(),
            "flavor": xi.flavor(),
            "xi": xi.values2(),
            "vertices": vertices.iter().map(|v| json!({
                "i": v.i,
                "k2": v.k2,
                "phi": phi.get(v).map(|r| r.to_string()),
            })).collect::<Vec<_>>(),
            "arrows": vertices.iter().flat_map(|&v| xi.successors(v).into_iter()
                .filter(|w| w.k2 <= k2_hi)
                .map(move |w| json!([PointJson::from(v), PointJson::from(w)]))).collect::<Vec<_>>(),
        })),
        Format::Text | Format::Latex => {
            let mut out = String::new();
            for i in 1..=xi.n() {
                let cells: Vec<String> = vertices
                    .iter()
                    .filter(|v| v.i == i)
                    .map(|v| match phi.get(v) {
                        Some(r) => format!("{}[{}]", fmt_half(v.k2), r),
                        None => fmt_half(v.k2),
                    })
                    .collect();
                out.push_str(&format!("row {i}: {}\n", cells.join("  ")));
            }
            out.push_str(&format!("{} vertices, {} in the window\n", vertices.len(), vertices.iter().filter(|v| phi.contains_key(v)).count()));
            out
        }
    })
}

fn cmd_snake_check(cfg: &Config, input: &Option<PathBuf>) -> Result<String, Failure> {
    let (xi, p) = read_snake(input)?;
    if !is_snake(&xi, &p) {
        return Err(Error::NotSnake(fmt_points(&p)).into());
    }
    let prime = is_prime_snake(&xi, &p);
    let splits = prime_split_points(&xi, &p);
    Ok(match cfg.format {
        Format::Json => to_json(&json!({"snake": true, "prime": prime, "split_points": splits})),
        _ => format!(
            "snake: yes\nprime: {}\nsplit points: {:?}\n",
            if prime { "yes" } else { "no" },
            splits
        ),
    })
}

fn cmd_qr(cfg: &Config, input: &Option<PathBuf>) -> Result<String, Failure> {
    let (xi, p) = read_snake(input)?;
    require_prime(&xi, &p)?;
    let (q, r) = qr_sequences(&xi, &p)?;
    Ok(match cfg.format {
        Format::Json => to_json(&json!({
            "Q": q.iter().map(|&v| PointJson::from(v)).collect::<Vec<_>>(),
            "R": r.iter().map(|&v| PointJson::from(v)).collect::<Vec<_>>(),
        })),
        _ => format!("Q = {}\nR = {}\n", fmt_points(&q), fmt_points(&r)),
    })
}

fn cmd_tsystem(
    cfg: &Config,
    input: &Option<PathBuf>,
    realization: Option<RealizationArg>,
    table: &Option<PathBuf>,
) -> Result<String, Failure> {
    let (xi, p) = read_snake(input)?;
    require_prime(&xi, &p)?;
    let rel = extended_tsystem(&xi, &p)?;
    let report = check_theorem_a_hypotheses(&xi, &p)?;
    let real = match realization {
        None => None,
        Some(RealizationArg::QdatumA) => Some(Realization::QDatumA),
        Some(RealizationArg::QdatumB) => Some(Realization::QDatumB),
        Some(RealizationArg::Custom) => {
            let path = table.as_ref().ok_or_else(|| config_error("--realization custom needs --table"))?;
            let t = from_json::<TableJson>(&read_input(&Some(path.clone()))?)?.table();
            t.check_covers(&xi)?;
            Some(Realization::Custom(t))
        }
    };
    let monomials = real.as_ref().map(|r| relation_monomials(&rel, r, &xi)).transpose()?;
    Ok(match cfg.format {
        Format::Json => to_json(&RelationJson::new(&rel, report.all_one, monomials.as_ref())),
        Format::Latex => {
            let mut s = rel.to_latex() + "\n";
            if let Some(m) = &monomials {
                s += &(m.to_latex() + "\n");
            }
            s
        }
        Format::Text | Format::Dot => {
            let mut s = format!(
                "{rel}\nprime: {}, real: {}\nhypotheses: {}\n",
                rel.flags.prime,
                rel.flags.real,
                if report.all_one { "all tfd values equal 1" } else { "FAILED" }
            );
            if let Some(m) = &monomials {
                s += &format!("{m}\n");
            }
            s
        }
    })
}

fn cmd_reineke(cfg: &Config, input: &Option<PathBuf>, j: Option<usize>) -> Result<String, Failure> {
    let d = from_json::<DatumJson>(&read_input(input)?)?.to_datum(cfg.n)?;
    let n = d.carrier().n();
    let js: Vec<usize> = match j {
        Some(j) => vec![j],
        None => (1..=n).collect(),
    };
    let rows = js
        .into_iter()
        .map(|j| Ok(ReinekeJson { j, epsilon: epsilon_any(j, &d)?, epsilon_star: epsilon_star(j, &d)? }))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match cfg.format {
        Format::Json if rows.len() == 1 => to_json(&rows[0]),
        Format::Json => to_json(&rows),
        _ => rows
            .iter()
            .map(|r| format!("j = {}: epsilon = {}, epsilon* = {}\n", r.j, r.epsilon, r.epsilon_star))
            .collect(),
    })
}

fn cmd_rho(cfg: &Config, input: &Option<PathBuf>, chain: bool) -> Result<String, Failure> {
    let d = from_json::<DatumJson>(&read_input(input)?)?.to_datum(cfg.n)?;
    let steps = if chain { rho_chain(&d)? } else { vec![rho(&d)?] };
    Ok(match cfg.format {
        Format::Json if steps.len() == 1 => to_json(&DatumJson::new(&steps[0])),
        Format::Json => to_json(&steps.iter().map(DatumJson::new).collect::<Vec<_>>()),
        _ => steps
            .iter()
            .map(|s| {
                let entries: Vec<String> =
                    s.support().into_iter().map(|v| format!("{}:{}", fmt_point(v), s.get(v))).collect();
                format!("{}: {}\n", s.carrier(), if entries.is_empty() { "0".into() } else { entries.join(" ") })
            })
            .collect(),
    })
}

fn cmd_translate(cfg: &Config, input: &Option<PathBuf>) -> Result<String, Failure> {
    let (xi, p) = read_snake(input)?;
    let n0 = xi.n0().ok_or_else(|| Failure::from(Error::WrongFlavor("translate needs a twisted snake".into())))?;
    let dagger = translate_twisted(&xi, &p)?;
    let theta = HeightFunction::theta(n0)?;
    Ok(match cfg.format {
        Format::Json => to_json(&SnakeJson::new(&theta, &dagger)),
        _ => format!("{}\n", fmt_points(&dagger)),
    })
}

fn cmd_verify(cfg: &Config, suite: &str, trials: usize) -> Result<(String, bool), Failure> {
    let suite: Suite = suite.parse().map_err(|e: Error| config_error(e.to_string()))?;
    let reports = verify::run(suite, trials, cfg.seed)?;
    let ok = reports.iter().all(|r| r.ok());
    let out = match cfg.format {
        Format::Json => to_json(&reports),
        _ => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok((out, ok))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let cfg = &cli.config;
    let out = match &cli.command {
        Command::Quiver { k_lo, k_hi } => cmd_quiver(cfg, *k_lo, *k_hi)?,
        Command::SnakeCheck { input } => cmd_snake_check(cfg, input)?,
        Command::Qr { input } => cmd_qr(cfg, input)?,
        Command::Tsystem { input, realization, table } => cmd_tsystem(cfg, input, *realization, table)?,
        Command::Reineke { input, j } => cmd_reineke(cfg, input, *j)?,
        Command::Rho { input, chain } => cmd_rho(cfg, input, *chain)?,
        Command::Translate { input } => cmd_translate(cfg, input)?,
        Command::Verify { suite, trials } => return cmd_verify(cfg, suite, *trials),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
