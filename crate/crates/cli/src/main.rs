//! `hardhom`: solve, reduce, verify and benchmark homomorphism instances.
//!
//! Exit status is 0 for a satisfiable instance or a valid certificate, 1 for
//! an unsatisfiable instance or an invalid certificate, and 2 for any input
//! error.

mod bench;
mod reduce;
mod solve;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hardhom_core::format::{self, Instance, RecordFile};
use hardhom_core::gadgets::{build_a, build_d, build_t, build_t_clique};
use hardhom_core::solver::{violation, DEFAULT_BUDGET};
use hardhom_core::{verify, ListHomInstance, Mode};

#[derive(Parser)]
#[command(
    name = "hardhom",
    version,
    about = "Graph homomorphism solvers and hardness reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a certificate when it is satisfiable.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Listhom)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        /// Largest minimum vertex cover for which `auto` picks `vc`.
        #[arg(long, default_value_t = 12)]
        vc_threshold: usize,
    },
    /// Apply a reduction and write the output instance with its decode lines.
    Reduce {
        input: PathBuf,
        #[arg(long, value_enum)]
        lemma: Lemma,
        /// Bucket size.
        #[arg(short, default_value_t = 2)]
        r: usize,
        /// Bound on the chromatic number of the target (l5).
        #[arg(short)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate; with a record file, also decode it to the input.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
        /// Defaults to the record's mode, or listhom.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Write a gadget graph with its marked vertices.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetArg,
        /// Number of links of a chain, or pairs of a matching.
        #[arg(short, default_value_t = 1)]
        k: usize,
        /// Clique size parameter of `t-clique`.
        #[arg(short, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run strategies over seeded random LIST-HOM instances and write CSV.
    Bench {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_h: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Strategy::Brute, Strategy::Backtrack, Strategy::Vc])]
        strategy: Vec<Strategy>,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Budget {
    /// Candidate maps the brute-force strategy may enumerate.
    #[arg(long = "budget", env = "HARDHOM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    value: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Plain homomorphism; lists are ignored.
    Hom,
    Listhom,
    /// Locally injective list homomorphism.
    Local,
}

impl ModeArg {
    fn apply(self, inst: ListHomInstance) -> (ListHomInstance, Mode) {
        match self {
            ModeArg::Hom => (ListHomInstance::full(inst.g, inst.h), Mode::Plain),
            ModeArg::Listhom => (inst, Mode::Plain),
            ModeArg::Local => (inst, Mode::LocallyInjective),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Brute,
    Backtrack,
    Vc,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Lemma {
    L2,
    L3,
    L4,
    L5,
    Deg,
    Main,
    Chi,
    Vc,
    Local,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetArg {
    D,
    T,
    TClique,
    A,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_instance(path: &Path) -> Result<Instance> {
    Ok(format::parse_instance(&read(path)?).with_context(|| path.display().to_string())?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_verify(instance: &Path, certificate: &Path, mode: Option<ModeArg>) -> Result<bool> {
    let text = read(instance)?;
    let record: Option<RecordFile> =
        format::parse_record(&text).with_context(|| instance.display().to_string())?;
    let (inst, record_mode) = match &record {
        Some(rec) => (rec.instance.as_listhom(), rec.plan.mode),
        None => (read_instance(instance)?.as_listhom(), Mode::Plain),
    };
    let mode = mode.unwrap_or(match record_mode {
        Mode::Plain => ModeArg::Listhom,
        Mode::LocallyInjective => ModeArg::Local,
    });
    let (inst, mode) = mode.apply(inst);
    let w = format::parse_certificate(&read(certificate)?, inst.g.n(), inst.h.n())
        .with_context(|| certificate.display().to_string())?;
    if !verify(&inst, &w, mode)? {
        let why = violation(&inst, &w, mode)
            .map(|v| v.to_string())
            .unwrap_or_default();
        println!("c invalid: {why}");
        return Ok(false);
    }
    println!("c valid");
    if let Some(rec) = record {
        match rec.plan.decode(w.targets()) {
            Ok(hardhom_core::reductions::Decoded::Coloring(c)) => {
                println!("c decoded coloring {}", join(c.iter()));
            }
            Ok(hardhom_core::reductions::Decoded::Map(m)) => {
                println!("c decoded map {}", join(m.iter().map(|u| u + 1)));
            }
            Err(e) => {
                println!("c decoding failed: {e}");
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn join<T: ToString>(xs: impl Iterator<Item = T>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run_gadget(kind: GadgetArg, k: usize, t: usize, out: Option<&Path>) -> Result<bool> {
    let gadget = match kind {
        GadgetArg::D => build_d(),
        GadgetArg::T => build_t(k)?,
        GadgetArg::TClique => build_t_clique(k, t)?,
        GadgetArg::A => build_a(k)?,
    };
    emit(out, &format::write_gadget(&gadget))?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve {
            instance,
            mode,
            strategy,
            cert,
            budget,
            vc_threshold,
        } => {
            let (inst, mode) = mode.apply(read_instance(&instance)?.as_listhom());
            let report = solve::solve(&inst, mode, strategy, budget.value, vc_threshold)?;
            println!("c strategy {}", report.used);
            println!(
                "c verdict {}",
                if report.witness.is_some() {
                    "sat"
                } else {
                    "unsat"
                }
            );
            println!("c nodes_explored {}", report.stats.nodes_explored);
            println!("c assignments_tried {}", report.stats.assignments_tried);
            if let Some(w) = &report.witness {
                emit(cert.as_deref(), &format::write_certificate(w))?;
            }
            Ok(report.witness.is_some())
        }
        Command::Reduce {
            input,
            lemma,
            r,
            t,
            out,
        } => reduce::reduce(&read_instance(&input)?, lemma, r, t, out.as_deref()),
        Command::Verify {
            instance,
            certificate,
            mode,
        } => run_verify(&instance, &certificate, mode),
        Command::Gadget { kind, k, t, out } => run_gadget(kind, k, t, out.as_deref()),
        Command::Bench {
            count,
            max_n,
            max_h,
            seed,
            strategy,
            budget,
            out,
        } => bench::bench(
            &bench::Corpus {
                count,
                max_n,
                max_h,
                seed,
            },
            &strategy,
            budget.value,
            out.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
