//! `lamina`: generate, transform and compare laminary languages.
//!
//! Exit status is 0 when every certification passed, 1 when one failed and
//! 2 for usage, input or horizon errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use lamina::action::ActionPlan;
use lamina::cancellation::{bbt_estimate, default_radius, DEFAULT_WINDOW};
use lamina::generate::{from_ends, from_substitution, rational, rational_approximant};
use lamina::workbench::{
    converge_check, rauzy_export, repro_fixedpoint, repro_limitset, repro_notdense, LanguageSource,
};
/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {
        writeln!(io::stdout(), $($t)*)?
    };
}

use lamina::{
    Alphabet, Automorphism, BiinfiniteWord, Endomorphism, Error, FactorLanguage, Letter, Word,
};

#[derive(Parser)]
#[command(name = "lamina", version, about = "Laminary languages of free groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an exact language.
    Make {
        #[command(subcommand)]
        source: MakeSource,
    },
    /// Apply an automorphism to a language.
    Apply {
        #[arg(long)]
        auto: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short = 'n', long = "horizon")]
        horizon: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance between two exact languages.
    Dist {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Chop every word by `k` letters on each side.
    Chop {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a property of a language.
    Check {
        #[command(subcommand)]
        property: CheckProperty,
    },
    /// Lower bound on the bounded cancellation constant.
    Bbt {
        #[arg(long)]
        auto: PathBuf,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Rational word whose lamination agrees with a language up to level `m`.
    Approx {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rauzy graph of the level-`k` words.
    Rauzy {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce one of the concrete propositions.
    Repro {
        #[command(subcommand)]
        which: Repro,
    },
    /// Least index from which a sequence agrees with a target at level `n`.
    Converge {
        #[arg(long)]
        target: PathBuf,
        #[arg(short = 'n', long = "horizon")]
        horizon: usize,
        #[arg(required = true)]
        sequence: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Output {
    #[arg(short = 'n', long = "horizon")]
    horizon: usize,
    /// Rank of the free group; defaults to the smallest one (at least 2)
    /// containing the input.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum MakeSource {
    /// Rational lamination `L(w)`.
    Rational {
        #[arg(short = 'w', long)]
        word: String,
        #[command(flatten)]
        output: Output,
    },
    /// Lamination of the leaf `^∞(left) · center · (right)^∞`.
    Ends {
        #[arg(long)]
        left: String,
        #[arg(long, default_value = "")]
        center: String,
        #[arg(long)]
        right: String,
        #[command(flatten)]
        output: Output,
    },
    /// Lamination of the fixed word of a positive substitution.
    Subst {
        #[arg(short = 'r', long)]
        rules: String,
        #[arg(long)]
        seed: char,
        #[arg(short = 'n', long = "horizon")]
        horizon: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CheckProperty {
    Laminary {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Bounded gap property for words of length `≤ m`.
    Gap {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short = 'm')]
        m: usize,
    },
    Positive {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Rational lamination of this word.
    #[arg(short = 'w', long, conflicts_with_all = ["rules", "left"])]
    word: Option<String>,
    /// Substitution rules such as `a:ab,b:a`.
    #[arg(short = 'r', long, requires = "start")]
    rules: Option<String>,
    /// Letter the substitution is iterated on.
    #[arg(long)]
    start: Option<char>,
    #[arg(long, requires = "right", conflicts_with = "rules")]
    left: Option<String>,
    #[arg(long, default_value = "")]
    center: String,
    #[arg(long)]
    right: Option<String>,
}

#[derive(Subcommand)]
enum Repro {
    /// No rational lamination is close to that of `^∞a · b^∞`.
    Notdense {
        #[arg(short = 'n', long = "horizon", default_value_t = 2)]
        horizon: usize,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rational approximants of a minimal lamination (Fibonacci by default).
    Limitset {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'm', long, default_value_t = 5)]
        m_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Random automorphisms fix the lamination of `[a,b]`.
    Fixedpoint {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        nielsen_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_language(path: &Path) -> anyhow::Result<FactorLanguage> {
    Ok(FactorLanguage::from_json(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))?)
}

fn load_automorphism(path: &Path) -> anyhow::Result<Automorphism> {
    Ok(Automorphism::from_json(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))?)
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display())),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn alphabet_for<'a>(
    words: impl IntoIterator<Item = &'a Word>,
    rank: Option<usize>,
) -> anyhow::Result<Alphabet> {
    let spanning = Alphabet::spanning(words, 2)?;
    match rank {
        Some(r) if r < spanning.rank() => bail!("rank {r} is too small for the input"),
        Some(r) => Ok(Alphabet::new(r)?),
        None => Ok(spanning),
    }
}

fn parse_letter(c: char) -> anyhow::Result<Letter> {
    Ok(Letter::from_char(c)?)
}

fn source_from(args: &SourceArgs) -> anyhow::Result<LanguageSource> {
    if let Some(word) = &args.word {
        let w = Word::parse(word)?;
        return Ok(LanguageSource::Rational(alphabet_for([&w], None)?, w));
    }
    if let Some(rules) = &args.rules {
        let start = args.start.context("--start is required with --rules")?;
        return Ok(LanguageSource::Substitution(
            Endomorphism::parse_rules(rules)?,
            parse_letter(start)?,
        ));
    }
    if let (Some(left), Some(right)) = (&args.left, &args.right) {
        let spec = BiinfiniteWord::parse(left, &args.center, right)?;
        let al = alphabet_for(
            [spec.left_period(), spec.center(), spec.right_period()],
            None,
        )?;
        return Ok(LanguageSource::Ends(al, spec));
    }
    Ok(LanguageSource::fibonacci())
}

fn verdict(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Make { source } => {
            let (lang, out) = match source {
                MakeSource::Rational { word, output } => {
                    let w = Word::parse(&word)?;
                    let al = alphabet_for([&w], output.rank)?;
                    (rational(al, &w, output.horizon)?, output.out)
                }
                MakeSource::Ends {
                    left,
                    center,
                    right,
                    output,
                } => {
                    let spec = BiinfiniteWord::parse(&left, &center, &right)?;
                    let al = alphabet_for(
                        [spec.left_period(), spec.center(), spec.right_period()],
                        output.rank,
                    )?;
                    (from_ends(al, &spec, output.horizon)?, output.out)
                }
                MakeSource::Subst {
                    rules,
                    seed,
                    horizon,
                    out,
                } => {
                    let phi = Endomorphism::parse_rules(&rules)?;
                    (from_substitution(&phi, parse_letter(seed)?, horizon)?, out)
                }
            };
            emit(&lang.to_json(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply {
            auto,
            input,
            horizon,
            out,
        } => {
            let alpha = load_automorphism(&auto)?;
            let lang = load_language(&input)?;
            let image = ActionPlan::new(&alpha).act(&lang, horizon)?;
            emit(&image.to_json(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist { left, right, json } => {
            let d = load_language(&left)?.distance(&load_language(&right)?)?;
            if json {
                let doc = serde_json::json!({
                    "exponent": d.exponent,
                    "capped": d.capped,
                    "value": d.value(),
                });
                out!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                out!("{d}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chop { input, k, out } => {
            emit(&load_language(&input)?.chop(k)?.to_json(), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { property } => {
            let passed = match property {
                CheckProperty::Laminary { input } => {
                    let holds = load_language(&input)?.is_laminary_at();
                    out!("laminary: {holds}");
                    holds
                }
                CheckProperty::Gap { input, m } => match load_language(&input)?.gap_bound(m)? {
                    Some(k) => {
                        out!("gap bound for length {m}: {k}");
                        true
                    }
                    None => {
                        out!("gap bound for length {m}: not witnessed");
                        false
                    }
                },
                CheckProperty::Positive { input } => {
                    let holds = load_language(&input)?.is_positive();
                    out!("positive: {holds}");
                    holds
                }
            };
            Ok(verdict(passed))
        }
        Command::Bbt { auto, kmax, window } => {
            let alpha = load_automorphism(&auto)?;
            let kmax = kmax.unwrap_or_else(|| default_radius(alpha.forward()));
            out!("{}", bbt_estimate(alpha.forward(), kmax, window).to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Approx { input, m, json } => {
            let approx = rational_approximant(&load_language(&input)?, m)?;
            if json {
                let doc = serde_json::json!({
                    "m": m,
                    "gap": approx.gap,
                    "anchor": approx.anchor.to_string(),
                    "source": approx.source.to_string(),
                    "word": approx.word.to_string(),
                });
                out!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                out!("{}", approx.word);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rauzy {
            input,
            k,
            dot,
            json,
        } => {
            let graph = rauzy_export(&load_language(&input)?, k)?;
            if json {
                let edges: Vec<[String; 2]> = graph
                    .edges
                    .iter()
                    .map(|(u, v)| [u.to_string(), v.to_string()])
                    .collect();
                let nodes: Vec<String> = graph.nodes.iter().map(|w| w.to_string()).collect();
                let doc = serde_json::json!({ "level": k, "nodes": nodes, "edges": edges });
                out!("{}", serde_json::to_string_pretty(&doc)?);
            } else if dot {
                write!(io::stdout(), "{}", graph.to_dot())?;
            } else {
                for (u, v) in &graph.edges {
                    out!("{u} -> {v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Repro { which } => {
            let (text, passed) = match which {
                Repro::Notdense {
                    horizon,
                    max_len,
                    json,
                } => {
                    let r = repro_notdense(horizon, max_len)?;
                    (if json { r.to_json() } else { r.to_string() }, r.passed())
                }
                Repro::Limitset {
                    source,
                    m_max,
                    json,
                } => {
                    let r = repro_limitset(&source_from(&source)?, m_max)?;
                    (if json { r.to_json() } else { r.to_string() }, r.passed())
                }
                Repro::Fixedpoint {
                    trials,
                    nielsen_len,
                    seed,
                    json,
                } => {
                    let r = repro_fixedpoint(trials, nielsen_len, seed)?;
                    (if json { r.to_json() } else { r.to_string() }, r.passed())
                }
            };
            out!("{}", text.trim_end());
            Ok(verdict(passed))
        }
        Command::Converge {
            target,
            horizon,
            sequence,
            json,
        } => {
            let target = load_language(&target)?;
            let seq = sequence
                .iter()
                .map(|p| load_language(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let k = converge_check(&seq, &target, horizon)?;
            if json {
                out!("{}", serde_json::json!({ "horizon": horizon, "index": k }));
            } else {
                match k {
                    Some(k) => out!("agrees from index {k}"),
                    None => out!("none"),
                }
            }
            Ok(verdict(k.is_some()))
        }
    }
}

/// Failures of a check the input was supposed to pass, as opposed to bad
/// input or a horizon that is too short.
fn is_certification_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::GapNotWitnessed { .. }
            | Error::AnchorNotFound(_)
            | Error::ApproximantRejected(_)
            | Error::NoStabilization(_)
            | Error::InconsistentRecomputation { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e)
            if e.chain()
                .filter_map(|c| c.downcast_ref::<io::Error>())
                .any(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let certification = e
                .chain()
                .filter_map(|c| c.downcast_ref::<Error>())
                .any(is_certification_failure);
            ExitCode::from(if certification { 1 } else { 2 })
        }
    }
}
