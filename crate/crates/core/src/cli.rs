//! Command-line front end: `score`, `evaluate` and `compare`.
//!
//! Exit codes: 0 success, 2 input/manifest/usage error, 3 lexicon failure.
//! Results go to stdout (or `--out`), diagnostics to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aggregation::{score_review, AggregationError, AggregationMetric, DEFAULT_LAST_WEIGHT};
use crate::baseline::DEFAULT_WINDOW;
use crate::conllu::{parse_conllu, ConlluError};
use crate::eval::{
    binary_subset, compare_report, evaluate, load_dataset, predict_baseline, predict_ucr,
    EvalError, EvalReport,
};
use crate::lexicon::{load_lexicons, LexiconError, LexiconSet};
use crate::scorer::BranchTrace;

pub const LEXICON_DIR_ENV: &str = "BRANCHPOL_LEXICON_DIR";
pub const SENTIMENT_FILE: &str = "sentiment_es.tsv";
pub const INTENSIFIER_FILE: &str = "intensifiers_es.tsv";
pub const NEGATOR_FILE: &str = "negators_es.txt";
/// Threshold settings the comparison accepts.
pub const COMPARE_TAUS: [f64; 3] = [0.7, 0.8, 1.0];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", .path.display())]
    Input {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Conllu(#[from] ConlluError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Aggregation(#[from] AggregationError),
    #[error("lexicon: {0}")]
    Lexicon(#[from] LexiconError),
    #[error("{}: {source}", .path.display())]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lexicon(_) => 3,
            CliError::Output { .. } => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "branchpol",
    version,
    about = "Dependency-tree sentiment scoring over CoNLL-U"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Directory holding the default lexicon files.
    #[arg(long, global = true, env = LEXICON_DIR_ENV)]
    pub lexicon_dir: Option<PathBuf>,
    /// Sentiment TSV (lemma, score); overrides the lexicon directory
    #[arg(long, global = true)]
    pub sentiment_lex: Option<PathBuf>,
    /// Intensifier TSV (lemma, boost)
    #[arg(long, global = true)]
    pub intensifier_lex: Option<PathBuf>,
    /// Negator list, one lemma per line
    #[arg(long, global = true)]
    pub negator_lex: Option<PathBuf>,
    /// mean, weighted-last or extreme.
    #[arg(long, global = true)]
    pub metric: Option<String>,
    /// Weight of the last sentence for `weighted-last`.
    #[arg(long, global = true)]
    pub last_weight: Option<f64>,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file with defaults; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score the sentences of a CoNLL-U file as one review.
    Score {
        input: PathBuf,
        /// Emit the per-branch trace as JSON for each sentence.
        #[arg(long)]
        explain: bool,
    },
    /// Evaluate the compositional scorer on a labeled manifest.
    Evaluate {
        manifest: PathBuf,
        /// Keep only reviews labeled 1 or 5.
        #[arg(long)]
        binary: bool,
    },
    /// Compare the compositional scorer against the proximity baseline.
    Compare {
        manifest: PathBuf,
        /// Keep only reviews labeled 1 or 5.
        #[arg(long)]
        binary: bool,
        /// Tokens the baseline looks back for modifiers [default: 3]
        #[arg(long)]
        baseline_window: Option<usize>,
        /// Comma-separated subset of 0.7, 0.8, 1.0 [default: all three]
        #[arg(long, value_delimiter = ',')]
        baseline_tau: Vec<f64>,
    },
}

/// Optional TOML defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub lexicon_dir: Option<PathBuf>,
    pub sentiment_lex: Option<PathBuf>,
    pub intensifier_lex: Option<PathBuf>,
    pub negator_lex: Option<PathBuf>,
    pub metric: Option<String>,
    pub last_weight: Option<f64>,
    pub baseline_window: Option<usize>,
    pub baseline_tau: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub sentiment_lex: PathBuf,
    pub intensifier_lex: PathBuf,
    pub negator_lex: PathBuf,
    pub metric: AggregationMetric,
    pub baseline_window: usize,
    pub baseline_taus: Vec<f64>,
    pub out: Option<PathBuf>,
    pub explain: bool,
    pub binary: bool,
}

impl RunConfig {
    pub fn resolve(common: &CommonArgs, command: &Command) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Input {
                    path: path.clone(),
                    source,
                })?;
                toml::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };

        let dir = common
            .lexicon_dir
            .clone()
            .or(file.lexicon_dir)
            .unwrap_or_else(|| PathBuf::from("samples"));
        let pick = |flag: &Option<PathBuf>, conf: Option<PathBuf>, name: &str| {
            flag.clone().or(conf).unwrap_or_else(|| dir.join(name))
        };

        let metric_name = common
            .metric
            .clone()
            .or(file.metric)
            .unwrap_or_else(|| "extreme".into());
        let mut metric: AggregationMetric = metric_name.parse()?;
        if let AggregationMetric::WeightedLast(_) = metric {
            let weight = common
                .last_weight
                .or(file.last_weight)
                .unwrap_or(DEFAULT_LAST_WEIGHT);
            metric = AggregationMetric::weighted_last(weight)?;
        }

        let (explain, binary, window, taus) = match command {
            Command::Score { explain, .. } => (*explain, false, None, Vec::new()),
            Command::Evaluate { binary, .. } => (false, *binary, None, Vec::new()),
            Command::Compare {
                binary,
                baseline_window,
                baseline_tau,
                ..
            } => (false, *binary, *baseline_window, baseline_tau.clone()),
        };
        let baseline_window = window.or(file.baseline_window).unwrap_or(DEFAULT_WINDOW);
        if baseline_window == 0 {
            return Err(CliError::Usage(
                "--baseline-window must be at least 1".into(),
            ));
        }
        let baseline_taus = if !taus.is_empty() {
            taus
        } else {
            file.baseline_tau.unwrap_or_else(|| COMPARE_TAUS.to_vec())
        };
        if let Command::Compare { .. } = command {
            if let Some(bad) = baseline_taus.iter().find(|t| !COMPARE_TAUS.contains(t)) {
                return Err(CliError::Usage(format!(
                    "--baseline-tau {bad} is not one of 0.7, 0.8, 1.0"
                )));
            }
        }

        Ok(RunConfig {
            sentiment_lex: pick(&common.sentiment_lex, file.sentiment_lex, SENTIMENT_FILE),
            intensifier_lex: pick(
                &common.intensifier_lex,
                file.intensifier_lex,
                INTENSIFIER_FILE,
            ),
            negator_lex: pick(&common.negator_lex, file.negator_lex, NEGATOR_FILE),
            metric,
            baseline_window,
            baseline_taus,
            out: common.out.clone(),
            explain,
            binary,
        })
    }

    pub fn load_lexicons(&self) -> Result<LexiconSet, CliError> {
        Ok(load_lexicons(
            &self.sentiment_lex,
            &self.intensifier_lex,
            &self.negator_lex,
        )?)
    }
}

#[derive(Serialize)]
struct ExplainLine<'a> {
    sentence: usize,
    traces: &'a [BranchTrace],
}

fn fmt_score(x: f64) -> String {
    format!("{x:?}")
}

pub fn cmd_score(config: &RunConfig, input: &Path) -> Result<String, CliError> {
    let lexicons = config.load_lexicons()?;
    let text = fs::read_to_string(input).map_err(|source| CliError::Input {
        path: input.to_path_buf(),
        source,
    })?;
    let sentences = parse_conllu(&text)?;
    let review = score_review(&sentences, &lexicons, config.metric);

    let mut out = String::new();
    for (i, scored) in review.sentences.iter().enumerate() {
        out.push_str(&format!(
            "sentence {}: {}\n",
            i + 1,
            fmt_score(scored.score)
        ));
        if config.explain {
            let line = ExplainLine {
                sentence: i + 1,
                traces: &scored.traces,
            };
            out.push_str(&serde_json::to_string(&line).expect("trace serializes"));
            out.push('\n');
        }
    }
    out.push_str(&format!(
        "review: {} ({})\n",
        fmt_score(review.score),
        config.metric
    ));
    out.push_str(&format!("class: {}\n", review.class));
    Ok(out)
}

fn load_records(
    config: &RunConfig,
    manifest: &Path,
) -> Result<Vec<crate::eval::ReviewRecord>, CliError> {
    let dataset = load_dataset(manifest)?;
    if !dataset.skipped.is_empty() {
        log::warn!("{} review(s) skipped", dataset.skipped.len());
    }
    let records = if config.binary {
        binary_subset(&dataset.records)
    } else {
        dataset.records
    };
    if records.is_empty() {
        return Err(EvalError::EmptyDataset.into());
    }
    Ok(records)
}

fn ucr_name(metric: AggregationMetric) -> String {
    format!("ucr-{metric}")
}

pub fn baseline_name(tau: f64) -> String {
    format!("baseline-tau{tau:.1}")
}

pub fn cmd_evaluate(config: &RunConfig, manifest: &Path) -> Result<(EvalReport, String), CliError> {
    let lexicons = config.load_lexicons()?;
    let records = load_records(config, manifest)?;
    let report = evaluate(&ucr_name(config.metric), &records, |r| {
        predict_ucr(r, &lexicons, config.metric)
    })?;
    let text = compare_report(std::slice::from_ref(&report));
    Ok((report, text))
}

pub fn cmd_compare(
    config: &RunConfig,
    manifest: &Path,
) -> Result<(Vec<EvalReport>, String), CliError> {
    let lexicons = config.load_lexicons()?;
    let records = load_records(config, manifest)?;
    let mut reports = vec![evaluate(&ucr_name(config.metric), &records, |r| {
        predict_ucr(r, &lexicons, config.metric)
    })?];
    for &tau in &config.baseline_taus {
        reports.push(evaluate(&baseline_name(tau), &records, |r| {
            predict_baseline(r, &lexicons, config.baseline_window, tau)
        })?);
    }
    let text = compare_report(&reports);
    Ok((reports, text))
}

fn execute(cli: &Cli) -> Result<(String, Option<PathBuf>), CliError> {
    let config = RunConfig::resolve(&cli.common, &cli.command)?;
    let text = match &cli.command {
        Command::Score { input, .. } => cmd_score(&config, input)?,
        Command::Evaluate { manifest, .. } => cmd_evaluate(&config, manifest)?.1,
        Command::Compare { manifest, .. } => cmd_compare(&config, manifest)?.1,
    };
    Ok((text, config.out))
}

/// Parses `args` and runs the selected subcommand, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = execute(&cli).and_then(|(text, out)| match out {
        Some(path) => fs::write(&path, text).map_err(|source| CliError::Output { path, source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Output {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
