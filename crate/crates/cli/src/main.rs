//! `monoseq` command-line front end.
//!
//! Usage:
//!   monoseq classify [FILE] [--order lex|deg] [--json] [--no-oracles]
//!   monoseq audit [--suite NAME]... [--seed S] [--count N]
//!   monoseq random --count N --n 3 --m 4 [--max-exp 2] [--squarefree]
//!   monoseq gb-dump [FILE] [--order lex|deg]
//!
//! Exit codes: 0 success, 1 input error, 2 resource limit, 3 consistency
//! failure.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monoseq::audit::{audit, AuditOptions, Suite};
use monoseq::corpus::{planted_hypothesis_corpus, random_corpus, CorpusSpec};
use monoseq::parse::{format_batch, format_json_batch, parse_batch};
use monoseq::poly::buchberger;
use monoseq::report::{classify_batch, render_text, ClassifyOptions};
use monoseq::s_sequence::build_relation_generators;
use monoseq::{Error, GroebnerLimits, MonomialOrder};

#[derive(Parser)]
#[command(name = "monoseq", version, about = "Classify monomial sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct GroebnerArgs {
    /// Monomial order on K[x, y].
    #[arg(long, default_value = "lex")]
    order: MonomialOrder,
    /// Cap on S-pair reductions per Buchberger run.
    #[arg(long, default_value_t = GroebnerLimits::default().max_pairs)]
    max_pairs: usize,
    /// Cap on the total degree of any S-polynomial.
    #[arg(long, default_value_t = GroebnerLimits::default().max_degree)]
    max_degree: u64,
}

impl GroebnerArgs {
    fn limits(&self) -> GroebnerLimits {
        GroebnerLimits {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify each sequence in FILE (or standard input).
    Classify {
        file: Option<String>,
        #[command(flatten)]
        gb: GroebnerArgs,
        /// One JSON report per line.
        #[arg(long)]
        json: bool,
        /// Divisibility criteria only; no oracles, no Gröbner bases.
        #[arg(long)]
        no_oracles: bool,
        /// Include wall-clock time in the reports.
        #[arg(long)]
        timing: bool,
    },
    /// Run the oracle and implication suites.
    Audit {
        /// Suites to run (default: all).
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Corpus size per suite.
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        gb: GroebnerArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print a seeded random corpus.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Sequence length.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of variables.
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        max_exp: u32,
        #[arg(long)]
        squarefree: bool,
        /// Keep only minimal sequences.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        dedup: bool,
        /// Generate sequences with [f_i, f_j] | f_k for all i < j < k.
        #[arg(long)]
        planted: bool,
        /// With --planted: all monomials of one degree.
        #[arg(long, requires = "planted")]
        equigenerated: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the reduced Gröbner basis of the relation ideal.
    GbDump {
        file: Option<String>,
        #[command(flatten)]
        gb: GroebnerArgs,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.exit_code() as u8,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure { code: 1, message }
}

fn read_input(file: Option<&str>) -> Result<String, Failure> {
    match file {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_failure(format!("reading standard input: {e}")))?;
            Ok(s)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| input_failure(format!("{path}: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify {
            file,
            gb,
            json,
            no_oracles,
            timing,
        } => run_classify(file.as_deref(), gb, json, no_oracles, timing),
        Command::Audit {
            suites,
            seed,
            count,
            gb,
            json,
        } => run_audit(&suites, seed, count, gb, json),
        Command::Random {
            seed,
            count,
            n,
            m,
            max_exp,
            squarefree,
            minimal,
            dedup,
            planted,
            equigenerated,
            json,
        } => {
            let spec = CorpusSpec::new(seed, count, n, m, max_exp)
                .squarefree(squarefree)
                .minimal_only(minimal)
                .dedup(dedup);
            run_random(&spec, planted, equigenerated, json)
        }
        Command::GbDump { file, gb } => run_gb_dump(file.as_deref(), gb),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("monoseq: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run_classify(
    file: Option<&str>,
    gb: GroebnerArgs,
    json: bool,
    no_oracles: bool,
    timing: bool,
) -> Result<(), Failure> {
    let seqs = parse_batch(&read_input(file)?)?;
    let options = ClassifyOptions {
        order: gb.order,
        limits: gb.limits(),
        oracles: !no_oracles,
        timing,
        ..ClassifyOptions::default()
    };
    let mut out = io::stdout().lock();
    let mut worst: Option<Failure> = None;
    for (k, result) in classify_batch(&seqs, &options).into_iter().enumerate() {
        match result {
            Ok(report) => {
                if json {
                    let line = serde_json::to_string(&report).expect("report serializes");
                    let _ = writeln!(out, "{line}");
                } else {
                    if k > 0 {
                        let _ = writeln!(out);
                    }
                    let _ = write!(out, "{}", render_text(&report));
                }
                if let Some(limit) = &report.resource_limit {
                    let f = Failure {
                        code: 2,
                        message: format!("sequence {}: {}", k + 1, limit.reason),
                    };
                    worst = Some(keep_worse(worst, f));
                }
            }
            Err(e) => {
                eprintln!("monoseq: sequence {}: {e}", k + 1);
                let f = Failure {
                    code: e.exit_code() as u8,
                    message: String::new(),
                };
                worst = Some(keep_worse(worst, f));
            }
        }
    }
    worst.map_or(Ok(()), Err)
}

/// Consistency failures outrank resource limits, which outrank input errors.
fn keep_worse(current: Option<Failure>, new: Failure) -> Failure {
    match current {
        Some(c) if c.code >= new.code => c,
        _ => new,
    }
}

fn run_audit(
    names: &[String],
    seed: u64,
    count: Option<usize>,
    gb: GroebnerArgs,
    json: bool,
) -> Result<(), Failure> {
    let suites = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|n| n.parse::<Suite>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let summary = audit(&AuditOptions {
        suites,
        seed,
        count,
        order: gb.order,
        limits: gb.limits(),
    });
    if json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
    } else {
        print!("{}", summary.render_text());
    }
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: "audit found violations".into(),
        })
    }
}

fn run_random(spec: &CorpusSpec, planted: bool, equigenerated: bool, json: bool) -> Result<(), Failure> {
    if spec.n.start() == &0 || spec.m.start() == &0 {
        return Err(input_failure("--n and --m must be positive".into()));
    }
    let seqs = if planted {
        planted_hypothesis_corpus(spec, equigenerated)
    } else {
        random_corpus(spec)
    };
    if seqs.len() < spec.count {
        eprintln!(
            "monoseq: only {} of {} sequences satisfy the filters",
            seqs.len(),
            spec.count
        );
    }
    if json {
        println!("{}", format_json_batch(&seqs));
    } else {
        print!("{}", format_batch(&seqs));
    }
    Ok(())
}

fn run_gb_dump(file: Option<&str>, gb: GroebnerArgs) -> Result<(), Failure> {
    let seqs = parse_batch(&read_input(file)?)?;
    for (k, seq) in seqs.iter().enumerate() {
        if k > 0 {
            println!("---");
        }
        let gens = build_relation_generators(seq, gb.order).polynomials();
        match buchberger(&gens, gb.order, gb.limits()) {
            Ok(basis) => print!("{}", basis.dump()),
            Err(Error::ResourceLimit(limit)) => {
                println!("# partial basis after {} pair reductions", limit.pairs_reduced);
                for p in &limit.partial_basis {
                    println!("{p}");
                }
                return Err(Failure {
                    code: 2,
                    message: limit.reason.clone(),
                });
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}
