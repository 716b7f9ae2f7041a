//! Command-line front end for the rainbow-bounds library.
//!
//! Every subcommand prints one JSON document (default) or CSV rows
//! (`--format csv`) to stdout; progress and timing notes go to stderr so
//! stdout stays byte-identical for identical arguments and seeds.
//!
//! Exit codes: 0 success / feasible, 1 infeasible or violations found,
//! 2 usage or domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rainbow_bounds as rb;

use rainbow_bounds_cli::experiment::{run_experiment, ExperimentConfig};
use rainbow_bounds_cli::table::{emit_table1, table1_csv};

#[derive(Debug, Parser)]
#[command(
    name = "rainbow-bounds",
    version,
    about = "Happy-triple bounds, triangle-count lower bounds, and rainbow-triangle feasibility checks"
)]
struct Cli {
    /// Output format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the happy-triple DP table and emit k,l,bound rows at l = ceil(k/2).
    DpTable {
        #[arg(long, default_value_t = 103)]
        k_max: usize,
        /// Write the CSV to a file instead of printing rows to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the DP table against the closed-form bound C(l,2) + C(k-l+1,2).
    VerifyLemma {
        #[arg(long, default_value_t = 103)]
        k_max: usize,
    },
    /// Exhaustive happy-triple maximum for k edges and maximum degree <= l.
    BruteForce {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// Vertex cap for the enumeration; defaults to min(2k, 10).
        #[arg(long)]
        ncap: Option<usize>,
    },
    /// Extremal graph attaining the closed-form bound for k/2 <= l <= k.
    Construct {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
    },
    /// Triangle-count lower bounds for n vertices, m edges and optionally h
    /// one-edge triples.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        h: Option<u64>,
    },
    /// Check a parameter point against condition system 31 or 41.
    ///
    /// Pass fractional t rounded up (e.g. 0.333334 for 1/3) so the
    /// real-valued check stays conservative.
    Check {
        /// Condition system: 31 (surplus colors) or 41 (n colors).
        #[arg(long)]
        theorem: u32,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        eps: f64,
        /// Directed-triangle out-degree constant (system 41 only).
        #[arg(long)]
        ch: Option<f64>,
        /// Strictness margin; defaults to RAINBOW_BOUNDS_MARGIN or 1e-9.
        #[arg(long)]
        margin: Option<f64>,
    },
    /// Smallest certified delta for fixed t (system 31).
    MinimizeDelta {
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = rb::DEFAULT_EPS_GRID)]
        eps_grid: usize,
        #[arg(long, default_value_t = rb::DEFAULT_BISECT_TOL)]
        tol: f64,
        #[arg(long)]
        margin: Option<f64>,
    },
    /// Smallest certified t for a given directed-triangle constant (system 41).
    MinimizeT {
        #[arg(long)]
        ch: Option<f64>,
        #[arg(long, default_value_t = rb::DEFAULT_EPS_GRID_2D)]
        eps_grid: usize,
        #[arg(long, default_value_t = rb::DEFAULT_DELTA_GRID_2D)]
        delta_grid: usize,
        #[arg(long, default_value_t = rb::DEFAULT_BISECT_TOL)]
        tol: f64,
        #[arg(long)]
        margin: Option<f64>,
    },
    /// Roots of the auxiliary cover quadratics (r = 3, 4) and the r >= 5
    /// sweep with its overall k ceiling.
    AppendixA,
    /// Seeded random-instance rainbow-triangle experiment.
    Experiment {
        #[arg(long)]
        n: usize,
        /// Number of disjoint color classes.
        #[arg(long)]
        colors: usize,
        /// Edges per color class.
        #[arg(long)]
        class_size: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trials: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Resolves the strictness margin: explicit flag, then the
/// RAINBOW_BOUNDS_MARGIN environment variable, then the built-in default.
fn resolve_margin(flag: Option<f64>) -> rb::Result<f64> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var("RAINBOW_BOUNDS_MARGIN") {
        Ok(raw) => raw.parse().map_err(|e| {
            rb::Error::Domain(format!("RAINBOW_BOUNDS_MARGIN {raw:?} is not a number: {e}"))
        }),
        Err(_) => Ok(rb::DEFAULT_MARGIN),
    }
}

fn rational_json(x: num_rational::Rational64) -> serde_json::Value {
    json!({
        "num": *x.numer(),
        "den": *x.denom(),
        "value": *x.numer() as f64 / *x.denom() as f64,
    })
}

fn run(cli: Cli) -> rb::Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::DpTable { k_max, out } => {
            if let Some(path) = out {
                emit_table1(k_max, &path)?;
                eprintln!("wrote {} rows to {}", k_max - 2, path.display());
                return Ok(ExitCode::SUCCESS);
            }
            match format {
                Format::Csv => print!("{}", table1_csv(k_max)?),
                Format::Json => {
                    if k_max < 3 {
                        return Err(rb::Error::Domain("table emission needs k_max >= 3".into()));
                    }
                    let table = rb::build_dp_table(k_max)?;
                    let rows: Vec<_> = (3..=k_max)
                        .map(|k| {
                            let l = k.div_ceil(2);
                            json!({"k": k, "l": l, "bound": table.entry(k, l)})
                        })
                        .collect();
                    print_json(&json!({"k_max": k_max, "rows": rows}));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::VerifyLemma { k_max } => {
            let table = rb::build_dp_table(k_max)?;
            let violations = rb::verify_lemma(&table, k_max)?;
            match format {
                Format::Json => {
                    let rows: Vec<_> = violations
                        .iter()
                        .map(|&(k, l)| {
                            json!({
                                "k": k,
                                "l": l,
                                "entry": table.entry(k, l),
                                "bound": rb::f_bound(k as u64, l as u64).unwrap(),
                            })
                        })
                        .collect();
                    print_json(&json!({"k_max": k_max, "violations": rows}));
                }
                Format::Csv => {
                    println!("k,l,entry,bound");
                    for &(k, l) in &violations {
                        println!(
                            "{k},{l},{},{}",
                            table.entry(k, l),
                            rb::f_bound(k as u64, l as u64).unwrap()
                        );
                    }
                }
            }
            Ok(exit_flag(violations.is_empty()))
        }

        Command::BruteForce { k, l, ncap } => {
            let n_cap = ncap.unwrap_or_else(|| rb::default_oracle_cap(k));
            let r = rb::brute_force_max_happy(k, l, n_cap)?;
            match format {
                Format::Json => print_json(&json!({
                    "k": r.k,
                    "l": r.l,
                    "n_cap": r.n_cap,
                    "maximum": r.maximum,
                    "graphs_examined": r.graphs_examined,
                    "witness": r.witness.to_text(),
                })),
                Format::Csv => {
                    println!("k,l,n_cap,maximum,graphs_examined");
                    println!("{},{},{},{},{}", r.k, r.l, r.n_cap, r.maximum, r.graphs_examined);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Construct { k, l } => {
            let g = rb::extremal_construction(k, l)?;
            let bound = rb::f_bound(k as u64, l as u64)?;
            let happy = g.happy_triple_count();
            match format {
                Format::Json => print_json(&json!({
                    "k": k,
                    "l": l,
                    "f_bound": bound,
                    "happy_triples": happy,
                    "graph": g.to_text(),
                })),
                Format::Csv => {
                    println!("k,l,f_bound,happy_triples");
                    println!("{k},{l},{bound},{happy}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Bound { n, m, h } => {
            let goodman = rb::goodman_lower_bound(n, m)?;
            let refined = h
                .map(|h| rb::refined_lower_bound(rb::TriangleBoundInputs::new(n, m, h)?))
                .transpose()?;
            match format {
                Format::Json => print_json(&json!({
                    "n": n,
                    "m": m,
                    "h": h,
                    "goodman": rational_json(goodman),
                    "refined": refined.map(rational_json),
                })),
                Format::Csv => {
                    println!("n,m,h,goodman,refined");
                    println!(
                        "{n},{m},{},{goodman},{}",
                        h.map_or(String::new(), |h| h.to_string()),
                        refined.map_or(String::new(), |r| r.to_string())
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Check {
            theorem,
            t,
            delta,
            eps,
            ch,
            margin,
        } => {
            let margin = resolve_margin(margin)?;
            let report = match theorem {
                31 => rb::check_thm31(t, delta, eps, margin)?,
                41 => rb::check_thm41(
                    t,
                    delta,
                    eps,
                    ch.unwrap_or(rb::DEFAULT_CH_CONSTANT),
                    margin,
                )?,
                other => {
                    return Err(rb::Error::Domain(format!(
                        "theorem must be 31 or 41, got {other}"
                    )))
                }
            };
            print_report(&report, format);
            Ok(exit_flag(report.feasible))
        }

        Command::MinimizeDelta {
            t,
            eps_grid,
            tol,
            margin,
        } => {
            let margin = resolve_margin(margin)?;
            let result = rb::minimize_delta(t, eps_grid, tol, margin)?;
            print_search(result.as_ref(), &json!({"t": t}), format);
            Ok(exit_flag(result.is_some()))
        }

        Command::MinimizeT {
            ch,
            eps_grid,
            delta_grid,
            tol,
            margin,
        } => {
            let margin = resolve_margin(margin)?;
            let ch = ch.unwrap_or(rb::DEFAULT_CH_CONSTANT);
            let result = rb::minimize_t(ch, eps_grid, delta_grid, tol, margin)?;
            print_search(result.as_ref(), &json!({"ch_constant": ch}), format);
            Ok(exit_flag(result.is_some()))
        }

        Command::AppendixA => {
            let roots: Vec<_> = [3u32, 4]
                .iter()
                .map(|&r| json!({"r": r, "root": rb::appendix_a_bound(r).unwrap()}))
                .collect();
            let sweep = rb::r_ge5_k_bound();
            match format {
                Format::Json => print_json(&json!({"roots": roots, "sweep": sweep})),
                Format::Csv => {
                    println!("name,r,value");
                    for r in [3u32, 4] {
                        println!("root,{r},{}", rb::appendix_a_bound(r).unwrap());
                    }
                    for &(r, v) in &sweep.values {
                        println!("sweep,{r},{v}");
                    }
                    println!("k_limit,,{}", sweep.k_limit);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Experiment {
            n,
            colors,
            class_size,
            seed,
            trials,
        } => {
            let cfg = ExperimentConfig {
                n,
                num_colors: colors,
                class_size,
                seed,
                trials,
            };
            let report = run_experiment(&cfg)?;
            match format {
                Format::Json => print_json(&serde_json::to_value(&report).expect("serializable")),
                Format::Csv => {
                    println!("trial,found,u,v,w");
                    for t in &report.trials {
                        match t.witness {
                            Some((u, v, w)) => println!("{},{},{u},{v},{w}", t.trial, t.found),
                            None => println!("{},{},,,", t.trial, t.found),
                        }
                    }
                }
            }
            eprintln!(
                "{} of {} trials found a rainbow triangle in {:.3}s",
                report.found,
                cfg.trials,
                report.wall_time.as_secs_f64()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("valid JSON"));
}

fn print_report(report: &rb::FeasibilityReport, format: Format) {
    match format {
        Format::Json => {
            print_json(&serde_json::to_value(report).expect("serializable"));
        }
        Format::Csv => {
            println!("name,lhs,rhs,residual");
            for c in &report.conditions {
                println!("{},{},{},{}", c.name, c.lhs, c.rhs, c.residual);
            }
        }
    }
}

fn print_search(result: Option<&rb::SearchResult>, context: &serde_json::Value, format: Format) {
    match result {
        Some(r) => match format {
            Format::Json => {
                print_json(&serde_json::to_value(r).expect("serializable"));
            }
            Format::Csv => {
                println!("objective,t,delta,eps,iterations,tolerance");
                println!(
                    "{},{},{},{},{},{}",
                    r.objective, r.point.t, r.point.delta, r.point.eps, r.iterations, r.tolerance
                );
            }
        },
        None => match format {
            Format::Json => {
                let mut doc = json!({"feasible": false});
                if let (Some(obj), Some(ctx)) = (doc.as_object_mut(), context.as_object()) {
                    for (k, v) in ctx {
                        obj.insert(k.clone(), v.clone());
                    }
                }
                print_json(&doc);
            }
            Format::Csv => println!("feasible\nfalse"),
        },
    }
}

fn exit_flag(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
