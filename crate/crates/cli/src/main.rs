use anyhow::Result;
use charvar_cli::manifest::{
    Conserve, Equidistribute, Expectation, Figure, FigureKind, Membership, MembershipCase, Orbit,
    Patching, Probe, Reference, Start, Torus, TorusMatrix, Verify,
};
use charvar_cli::{run, Experiment, Format, Manifest};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "charvar", version, about = "Trace-coordinate experiments on SU(2) character varieties")]
struct Cli {
    /// Overrides the manifest seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides the manifest output directory.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Format of data files; the report is always JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Cat,
    Alpha,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment manifest.
    Run { manifest: PathBuf },
    /// Trace relation and induced-map identities on random representations.
    Verify {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Random walk over automorphism generators.
    Orbit {
        #[arg(long, default_value_t = 3)]
        rank: usize,
        /// Comma-separated generator or group names.
        #[arg(long, default_value = "nielsen", value_delimiter = ',')]
        generators: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        #[arg(long, default_value_t = 1000)]
        burn_in: usize,
        #[arg(long, default_value_t = 1)]
        walkers: usize,
        /// Recorded statistic; repeat for several.
        #[arg(long = "stat", default_values_t = ["tr(A)".to_string()])]
        stats: Vec<String>,
        /// Rank 2: start on this level of kappa.
        #[arg(long, allow_hyphen_values = true)]
        kappa_level: Option<f64>,
        /// Statistic checked for conservation to 1e-9; repeat for several.
        #[arg(long)]
        conserve: Vec<String>,
        /// Check this statistic against the semicircle law.
        #[arg(long)]
        semicircle: Option<String>,
    },
    /// Realizability of boundary-trace quadruples, given as a,b,c,d.
    Membership {
        /// Use `--` before a quadruple that starts with a minus sign.
        #[arg(required = true)]
        quadruples: Vec<String>,
        #[arg(long, value_enum)]
        expect: Option<ExpectArg>,
    },
    /// Point lists for the V_3 surface and ellipse slices.
    Figure {
        #[arg(value_enum)]
        kind: FigureKind,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<f64>,
        #[arg(long, allow_hyphen_values = true, num_args = 2)]
        interval: Option<Vec<f64>>,
        #[arg(long, default_value_t = 64)]
        resolution: usize,
    },
    /// Orbit of a unimodular matrix on the torus.
    Torus {
        #[arg(long, value_enum, default_value = "cat")]
        map: MapArg,
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
        /// Comma-separated start point in [0, 1)^n.
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<f64>>,
    },
    /// Join random pairs by a representation matching t_1 and t_n.
    Patching {
        #[arg(long, default_value_t = 4)]
        rank: usize,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
    },
    /// Connect random pairs of V_3(a0, d0) by flow segments.
    Probe {
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        a0: f64,
        #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
        d0: f64,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Realizable,
    Unrealizable,
}

fn parse_quadruple(s: &str) -> Result<[f64; 4]> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()?;
    v.try_into()
        .map_err(|_| anyhow::anyhow!("quadruple needs four comma-separated values: {s}"))
}

fn experiment(cmd: Command) -> Result<Experiment> {
    Ok(match cmd {
        Command::Run { .. } => unreachable!("handled by caller"),
        Command::Verify { samples } => Experiment::Verify(Verify {
            samples,
            ..Verify::default()
        }),
        Command::Orbit {
            rank,
            generators,
            steps,
            burn_in,
            walkers,
            stats,
            kappa_level,
            conserve,
            semicircle,
        } => Experiment::Orbit(Orbit {
            rank,
            generators,
            steps,
            burn_in,
            walkers,
            statistics: stats,
            start: Start::Haar,
            kappa_level,
            conserve: conserve
                .into_iter()
                .map(|statistic| Conserve {
                    statistic,
                    tolerance: Some(1e-9),
                    min_drift: None,
                })
                .collect(),
            equidistribute: semicircle.map(|statistic| Equidistribute {
                statistic,
                reference: Reference::Semicircle,
                max_ks: 0.02,
            }),
        }),
        Command::Membership { quadruples, expect } => Experiment::Membership(Membership {
            cases: quadruples
                .iter()
                .map(|q| {
                    Ok(MembershipCase {
                        quadruple: parse_quadruple(q)?,
                        expect: expect.map(|e| match e {
                            ExpectArg::Realizable => Expectation::Realizable,
                            ExpectArg::Unrealizable => Expectation::Unrealizable,
                        }),
                    })
                })
                .collect::<Result<_>>()?,
        }),
        Command::Figure {
            kind,
            y,
            interval,
            resolution,
        } => Experiment::Figure(Figure {
            figure: kind,
            y,
            interval: interval.map(|v| [v[0], v[1]]),
            resolution,
        }),
        Command::Torus { map, steps, start } => {
            let (map, dim, coords) = match map {
                MapArg::Cat => (TorusMatrix::Cat, 2, None),
                MapArg::Alpha => (TorusMatrix::Alpha, 3, Some(vec![0])),
            };
            let default_start = [0.1234567, 0.7654321, 0.1234567 + std::f64::consts::SQRT_2 - 1.0];
            Experiment::Torus(Torus {
                map,
                start: start.unwrap_or_else(|| default_start[..dim].to_vec()),
                steps,
                coordinates: coords,
                max_ks: 0.02,
            })
        }
        Command::Patching { rank, pairs } => Experiment::Patching(Patching { rank, pairs }),
        Command::Probe {
            a0,
            d0,
            pairs,
            epsilon,
        } => Experiment::Probe(Probe {
            a0,
            d0,
            pairs,
            epsilon,
            ..Probe::default()
        }),
    })
}

fn build(cli: Cli) -> Result<Manifest> {
    let mut m = match cli.command {
        Command::Run { manifest } => Manifest::load(&manifest)?,
        cmd => Manifest::new(0, experiment(cmd)?),
    };
    if let Some(s) = cli.seed {
        m.seed = s;
    }
    if let Some(d) = cli.out_dir {
        m.output.dir = d;
    }
    if let Some(f) = cli.format {
        m.output.format = f;
    }
    m.validate()?;
    Ok(m)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let manifest = match build(cli) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = match run(&manifest) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    for c in &report.checks {
        let tag = match (c.passed, c.advisory) {
            (true, _) => "PASS",
            (false, true) => "WARN",
            (false, false) => "FAIL",
        };
        let cmp = serde_json::to_value(c.comparison).ok();
        let cmp = cmp.as_ref().and_then(|v| v.as_str()).unwrap_or("?");
        println!("{tag} {}: {:e} {cmp} {:e}", c.name, c.measured, c.tolerance);
    }
    println!("report: {}", manifest.output.dir.join("report.json").display());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
