use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use knotcover::covers::{cover_invariants, double_cover_invariants, h1_order_pfold, verify_double_form};
use knotcover::harness::{
    bundled_corpus, load_corpus, render, render_record, render_rows, run_verification, CheckKind, CorpusEntry, Format,
    Golden, VerifyConfig,
};
use knotcover::jones::{jones, jones_at_minus1, jones_v};
use knotcover::lescop::{lescop_terms, parse_lescop};
use knotcover::links::{twisted_double, BraidWord, Clasp};
use knotcover::seifert::{alexander_conway, double_seifert_matrix, seifert_matrix};

#[derive(Parser)]
#[command(name = "knotcover", version, about = "Exact link invariants and double branched cover checks")]
struct Cli {
    /// table, csv or json
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// golden values to compare against
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    /// worker threads
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaspArg {
    Positive,
    Negative,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant table of a corpus file (`bundled` for the built-in corpus)
    Invariants { corpus: String },
    /// Run verification suites over a corpus
    Verify {
        corpus: String,
        /// comma-separated subset of skein,h1,bordered,corollary1,affine,lescop-calibration
        #[arg(long, default_value = "all")]
        checks: String,
        /// write golden values from this run (only if every check passed)
        #[arg(long)]
        write_golden: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Jones polynomial of a braid closure, e.g. "2; 1 1 1"
    Jones { braid: String },
    /// Casson-Walker-Lescop invariant of the double branched cover
    Lambda2 { braid: String },
    /// Twisted double of a knot and its cover invariants
    Double {
        braid: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_enum, default_value = "positive")]
        clasp: ClaspArg,
    },
    /// Lescop invariant of a framed link surgery file
    Lescop { file: PathBuf },
    /// Order of H1 of the p-fold cyclic branched cover of a knot
    H1order {
        braid: String,
        #[arg(long)]
        p: usize,
    },
}

enum Failure {
    Input(String),
    Check,
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn corpus(arg: &str) -> Result<Vec<CorpusEntry>, Failure> {
    if arg == "bundled" {
        Ok(bundled_corpus())
    } else {
        load_corpus(arg).map_err(input)
    }
}

fn braid(s: &str) -> Result<BraidWord, Failure> {
    BraidWord::parse(s).map_err(input)
}

fn matrix_text(rows: &[Vec<num_bigint::BigInt>]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format: Format = cli.format.parse().map_err(input)?;
    let golden = cli.golden.as_ref().map(Golden::load).transpose().map_err(input)?;
    let out = match cli.command {
        Command::Invariants { corpus: c } => {
            let entries = corpus(&c)?;
            let config = VerifyConfig { checks: Vec::new(), jobs: cli.jobs, golden, ..Default::default() };
            let r = run_verification(&entries, &config).map_err(input)?;
            if r.suites.is_empty() {
                render_rows(&r.rows, format)
            } else {
                // only the golden comparison can run here
                let text = render(&r, format);
                if !r.all_passed() {
                    print!("{text}");
                    return Err(Failure::Check);
                }
                text
            }
        }
        Command::Verify { corpus: c, checks, write_golden, samples, seed } => {
            let entries = corpus(&c)?;
            let checks = CheckKind::parse_list(&checks).map_err(input)?;
            let config = VerifyConfig { checks, jobs: cli.jobs, bordered_samples: samples, seed, golden };
            let r = run_verification(&entries, &config).map_err(input)?;
            print!("{}", render(&r, format));
            if !r.all_passed() {
                return Err(Failure::Check);
            }
            if let Some(path) = write_golden {
                std::fs::write(&path, Golden::from_report(&r).to_text()).map_err(input)?;
            }
            return Ok(());
        }
        Command::Jones { braid: s } => {
            let b = braid(&s)?;
            let j = jones(&b).map_err(input)?;
            let (at, deriv) = jones_at_minus1(&j);
            render_record(
                &[
                    ("braid", b.to_string()),
                    ("components", b.components().to_string()),
                    ("V", jones_v(&b).map_err(input)?.to_string()),
                    ("J", j.poly.to_string()),
                    ("J(-1)", at.to_string()),
                    ("J'(-1)", deriv.to_string()),
                ],
                format,
            )
        }
        Command::Lambda2 { braid: s } => {
            let b = braid(&s)?.connected_representative();
            let c = cover_invariants(&b).map_err(input)?;
            render_record(
                &[
                    ("braid", b.to_string()),
                    ("sigma", c.sigma.to_string()),
                    ("nu", c.nu.to_string()),
                    ("alpha", c.alpha.to_string()),
                    ("gamma", c.gamma.to_string()),
                    ("J(-1)", c.j_at_minus1.to_string()),
                    ("lambda2", c.lambda2.to_string()),
                ],
                format,
            )
        }
        Command::Double { braid: s, m, clasp } => {
            let clasp = match clasp {
                ClaspArg::Positive => Clasp::Positive,
                ClaspArg::Negative => Clasp::Negative,
            };
            let d = twisted_double(&braid(&s)?, m, clasp).map_err(input)?;
            let e = double_seifert_matrix(&d);
            let delta = alexander_conway(&e).in_t().map_or_else(|| "-".to_string(), |p| p.to_string());
            let c = double_cover_invariants(&d).map_err(input)?;
            let check = verify_double_form(&d).map_err(input)?;
            let text = render_record(
                &[
                    ("companion", d.companion.to_string()),
                    ("m", m.to_string()),
                    ("crossings", d.diagram.crossing_count().to_string()),
                    ("seifert", matrix_text(e.entries())),
                    ("alexander", delta),
                    ("sigma", c.sigma.to_string()),
                    ("nu", c.nu.to_string()),
                    ("lambda2", c.lambda2.to_string()),
                    ("diagram check", if check.all_passed() { "pass" } else { "FAIL" }.to_string()),
                ],
                format,
            );
            if !check.all_passed() {
                print!("{text}");
                return Err(Failure::Check);
            }
            text
        }
        Command::Lescop { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Failure::Input(format!("{}: {}", file.display(), e)))?;
            let inp = parse_lescop(&text).map_err(input)?;
            let t = lescop_terms(&inp.link, &inp.zeta).map_err(input)?;
            render_record(
                &[
                    ("components", inp.link.components().to_string()),
                    ("det", inp.link.det().to_string()),
                    ("zeta term", t.d.to_string()),
                    ("h0", t.h0.to_string()),
                    ("h1", t.h1.to_string()),
                    ("h2", t.h2.to_string()),
                    ("lambda", t.lambda.to_string()),
                ],
                format,
            )
        }
        Command::H1order { braid: s, p } => {
            if p < 2 {
                return Err(Failure::Input("--p must be at least 2".into()));
            }
            let b = braid(&s)?;
            if b.components() != 1 {
                return Err(Failure::Input(format!("expected a knot, got {} components", b.components())));
            }
            let e = seifert_matrix(&b.connected_representative()).map_err(input)?;
            let delta = alexander_conway(&e).in_t().ok_or_else(|| Failure::Input("no Alexander polynomial in t".into()))?;
            render_record(
                &[("braid", b.to_string()), ("alexander", delta.to_string()), ("p", p.to_string()), ("order", h1_order_pfold(&delta, p).to_string())],
                format,
            )
        }
    };
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
