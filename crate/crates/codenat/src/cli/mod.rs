//! Command-line interface: six file-to-file pipeline stages.
//!
//! The stages communicate only through files (JSONL/CSV/model binaries), so
//! any stage can be rerun in isolation:
//!
//! ```text
//! train-lm         corpus dir or token file  →  n-gram model file
//! transform        bugs JSONL                →  transformation records JSONL
//! score            records JSONL             →  naturalness scores JSONL
//! evaluate-metric  scores + labels JSONL     →  AUC table (stdout)
//! robustness       evaluations JSONL         →  report table / JSON
//! annotations      responses CSV             →  labels JSONL + stats
//! ```
//!
//! Global flags: `--config FILE` points at a key=value file (see
//! [`crate::config`]); individual flags always override config values.
//! `--jobs` and `--seed` are accepted for forward compatibility; current
//! commands are deterministic single-pass pipelines, so the seed affects
//! nothing today.
//!
//! Exit codes: 0 on success, 1 on a fatal error (missing files, bad model,
//! backend failures), 2 on usage errors (unknown flags or values). Per-item
//! problems — an unparseable bug, an unscorable record — are counted and
//! reported on stderr, and the run continues.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::annotate::{self, LabelCategory};
use crate::config::Config;
use crate::naturalness::{
    self, auc, BinaryLabel, Bridge, LmBackend, Normalization, ScoreError, ScoreField,
};
use crate::ngram::NgramModel;
use crate::robustness::{self, TransformFilter};
use crate::source::{BuggyRegion, SourceMethod};
use crate::transform::{
    self, DictionaryProvider, OperatorId, TransformOptions, TransformationStatus, Unary2AddStyle,
    Validation,
};

/// Top-level argument structure.
#[derive(Debug, Parser)]
#[command(
    name = "codenat",
    version,
    about = "Semantic-preserving Java transformations, n-gram naturalness scoring, and repair-robustness reports"
)]
pub struct Cli {
    /// Key=value config file; explicit flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Worker threads for per-item work (advisory; current commands are
    /// single-pass).
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    pub jobs: usize,
    /// Random seed, reserved for future stochastic steps; affects nothing
    /// today.
    #[arg(long, global = true, value_name = "SEED")]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

/// The six pipeline stages.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Train an n-gram model from a corpus.
    TrainLm {
        /// Directory of source files (each split into methods), or a single
        /// pre-tokenized file with one whitespace-separated sequence per line.
        corpus: PathBuf,
        /// Where to write the model file.
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
        /// Model order.
        #[arg(long, default_value_t = 4, value_name = "N")]
        order: usize,
        /// Training tokens rarer than this map to the unknown token at query
        /// time.
        #[arg(long, default_value_t = 1, value_name = "C")]
        min_count: u64,
    },
    /// Apply the enabled operators to every bug and write all records.
    Transform {
        /// Bugs as JSONL: {"bug_id", "source", "buggy_region": {"start_line", "end_line"}}.
        bugs: PathBuf,
        /// Where to write the records JSONL.
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
        /// Comma-separated operator names to enable (default: all 18).
        #[arg(long, value_name = "NAMES")]
        operators: Option<String>,
        /// Unary2Add output shape: `expanded` or `compound`.
        #[arg(long, value_name = "STYLE")]
        unary2add_style: Option<String>,
        /// RenameVariable2 dictionary file (`name=cand1,cand2` lines).
        #[arg(long, value_name = "FILE")]
        dict: Option<PathBuf>,
        /// Candidates taken per variable for RenameVariable2.
        #[arg(long, value_name = "K")]
        top_k: Option<usize>,
        /// Shell command template run on each valid record's transformed
        /// source; `{file}` expands to its path; exit 0 counts as pass.
        #[arg(long, value_name = "CMD")]
        validate_cmd: Option<String>,
    },
    /// Score valid records under a language model and normalize.
    Score {
        /// Transformation records JSONL (from `transform`).
        records: PathBuf,
        /// Where to write the scores JSONL.
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
        /// Saved n-gram model to score with.
        #[arg(long, value_name = "FILE", conflicts_with = "endpoint")]
        model: Option<PathBuf>,
        /// External bridge endpoint (`cmd:<shell command>` or `tcp:<host>:<port>`).
        #[arg(long, value_name = "ENDPOINT")]
        endpoint: Option<String>,
        /// Field normalization reads: `rnc` or `ce`.
        #[arg(long, value_name = "FIELD")]
        field: Option<String>,
        /// Fixed lower normalization bound (needs --fixed-max).
        #[arg(long, requires = "fixed_max", value_name = "MIN", allow_hyphen_values = true)]
        fixed_min: Option<f64>,
        /// Fixed upper normalization bound (needs --fixed-min).
        #[arg(long, requires = "fixed_min", value_name = "MAX", allow_hyphen_values = true)]
        fixed_max: Option<f64>,
    },
    /// Join scores with labels and print AUC for RNC and the CE baseline.
    EvaluateMetric {
        /// Scores JSONL (from `score`).
        scores: PathBuf,
        /// Labels JSONL (from `annotations`).
        labels: PathBuf,
    },
    /// Aggregate per-bug patch qualities into robustness reports.
    Robustness {
        /// Evaluations as JSONL: {"tool", "bug_id", "original_quality", "variants": […]}.
        evals: PathBuf,
        /// Labels JSONL joined onto variants by transformation_id.
        #[arg(long, value_name = "FILE")]
        labels: Option<PathBuf>,
        /// Which reports to emit: `all`, `natural-only`, or `both`.
        #[arg(long, value_name = "FILTER")]
        filter: Option<String>,
        /// Also write the reports as pretty-printed JSON.
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Trim, verdict, label, and summarize survey responses.
    Annotations {
        /// CSV with header rater_id,transformation_id,readability,convention,completion_seconds.
        responses: PathBuf,
        /// Where to write the labels JSONL (default: stdout).
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// How a command run failed; decides the process exit code.
#[derive(Debug)]
pub enum RunError {
    /// Bad flag or config values: exit 2.
    Usage(String),
    /// Operational failure: exit 1.
    Fatal(anyhow::Error),
}

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

fn fatal(err: impl Into<anyhow::Error>) -> RunError {
    RunError::Fatal(err.into())
}

/// Binary entry point: parse, dispatch, map errors to exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(RunError::Fatal(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

/// Dispatches one parsed invocation.
pub fn run(cli: Cli) -> Result<(), RunError> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(fatal)?,
        None => Config::default(),
    };
    match cli.command {
        Command::TrainLm {
            corpus,
            out,
            order,
            min_count,
        } => cmd_train_lm(&corpus, &out, order, min_count),
        Command::Transform {
            bugs,
            out,
            operators,
            unary2add_style,
            dict,
            top_k,
            validate_cmd,
        } => cmd_transform(
            &bugs,
            &out,
            operators,
            unary2add_style,
            dict,
            top_k,
            validate_cmd,
            &config,
        ),
        Command::Score {
            records,
            out,
            model,
            endpoint,
            field,
            fixed_min,
            fixed_max,
        } => cmd_score(
            &records,
            &out,
            model,
            endpoint,
            field,
            fixed_min.zip(fixed_max),
            &config,
        ),
        Command::EvaluateMetric { scores, labels } => cmd_evaluate_metric(&scores, &labels),
        Command::Robustness {
            evals,
            labels,
            filter,
            out,
        } => cmd_robustness(&evals, labels, filter, out, &config),
        Command::Annotations { responses, out } => cmd_annotations(&responses, out),
    }
}

// ---------------------------------------------------------------------------
// train-lm
// ---------------------------------------------------------------------------

fn cmd_train_lm(corpus: &Path, out: &Path, order: usize, min_count: u64) -> Result<(), RunError> {
    let sentences = if corpus.is_dir() {
        corpus_from_dir(corpus)?
    } else {
        corpus_from_tokenized_file(corpus)?
    };
    let model =
        NgramModel::train_with_min_count(&sentences, order, min_count).map_err(fatal)?;
    model.save_to_path(out).map_err(fatal)?;
    eprintln!(
        "trained {order}-gram model on {} methods ({} token types) -> {}",
        sentences.len(),
        model.vocab().len(),
        out.display()
    );
    Ok(())
}

/// Reads every file of a corpus directory in name order and splits each into
/// method token sequences. Unparseable files are skipped with a warning.
fn corpus_from_dir(dir: &Path) -> Result<Vec<Vec<String>>, RunError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(fatal)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut sentences = Vec::new();
    let mut skipped = 0usize;
    for path in paths {
        let text = fs::read_to_string(&path).map_err(fatal)?;
        match crate::source::corpus_sentences(&text) {
            Ok(methods) => sentences.extend(methods),
            Err(e) => {
                eprintln!("warning: skipping {}: {e}", path.display());
                skipped += 1;
            }
        }
    }
    if skipped > 0 {
        eprintln!("warning: {skipped} corpus files skipped");
    }
    Ok(sentences)
}

fn corpus_from_tokenized_file(path: &Path) -> Result<Vec<Vec<String>>, RunError> {
    let text = fs::read_to_string(path).map_err(fatal)?;
    Ok(text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect())
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

/// One input bug: a method body and the 1-based line range of its buggy
/// region.
#[derive(Debug, Serialize, Deserialize)]
struct BugInput {
    bug_id: String,
    source: String,
    buggy_region: RegionInput,
}

#[derive(Debug, Serialize, Deserialize)]
struct RegionInput {
    start_line: u32,
    end_line: u32,
}

#[allow(clippy::too_many_arguments)]
fn cmd_transform(
    bugs_path: &Path,
    out: &Path,
    operators: Option<String>,
    style: Option<String>,
    dict: Option<PathBuf>,
    top_k: Option<usize>,
    validate_cmd: Option<String>,
    cfg: &Config,
) -> Result<(), RunError> {
    let operators = resolve_operators(operators.as_deref().or(cfg.get("transform.operators")))?;
    let style = resolve_style(style.as_deref().or(cfg.get("unary2add.style")))?;
    let top_k = match top_k {
        Some(k) => Some(k),
        None => cfg
            .get("rename2.top_k")
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| usage(format!("rename2.top_k must be an integer, got `{s}`")))
            })
            .transpose()?,
    };
    let dict_path = dict.or_else(|| cfg.get("rename2.dict").map(PathBuf::from));
    let provider = match dict_path {
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(fatal)?;
            DictionaryProvider::parse(&text, top_k.unwrap_or(1))
        }
        None => {
            let builtin = DictionaryProvider::builtin();
            match top_k {
                Some(k) => builtin.with_top_k(k),
                None => builtin,
            }
        }
    };
    let hook = validate_cmd.or_else(|| cfg.get("validate.cmd").map(str::to_string));
    let opts = TransformOptions {
        unary2add_style: style,
    };

    let file = File::open(bugs_path).map_err(fatal)?;
    let mut records = Vec::new();
    let mut bugs = 0usize;
    let mut bad_inputs = 0usize;
    let mut valid_per_bug = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(fatal)?;
        if line.trim().is_empty() {
            continue;
        }
        let bug: BugInput = match serde_json::from_str(&line) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("warning: bugs line {}: {e}", i + 1);
                bad_inputs += 1;
                continue;
            }
        };
        let region = BuggyRegion::new(bug.buggy_region.start_line, bug.buggy_region.end_line);
        let method = match SourceMethod::parse(&bug.bug_id, &bug.source, region) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("warning: bug {}: {e}", bug.bug_id);
                bad_inputs += 1;
                continue;
            }
        };
        bugs += 1;
        let mut valid = 0usize;
        for &op in &operators {
            for site in transform::applicable_sites(op, &method, Some(&provider)) {
                let record = transform::apply(op, &method, &site, Some(&provider), &opts);
                if record.status == TransformationStatus::Valid {
                    valid += 1;
                }
                records.push(record);
            }
        }
        valid_per_bug.push(valid);
    }

    let mut hook_passed = 0usize;
    let mut hook_failed = 0usize;
    if let Some(hook) = &hook {
        for record in records.iter().filter(|r| r.status == TransformationStatus::Valid) {
            match transform::validate_external(record, Some(hook)).map_err(fatal)? {
                Validation::Pass => hook_passed += 1,
                Validation::Fail => {
                    eprintln!("warning: validation hook failed for {}", record.id);
                    hook_failed += 1;
                }
                Validation::Skipped => {}
            }
        }
    }

    let out_file = File::create(out).map_err(fatal)?;
    transform::write_records(BufWriter::new(out_file), &records).map_err(fatal)?;

    let total_valid: usize = valid_per_bug.iter().sum();
    let max_valid = valid_per_bug.iter().max().copied().unwrap_or(0);
    let avg_valid = if bugs > 0 {
        total_valid as f64 / bugs as f64
    } else {
        0.0
    };
    eprintln!(
        "{bugs} bugs -> {} records ({total_valid} valid, avg {avg_valid:.2} valid/bug, max {max_valid}); {bad_inputs} inputs skipped -> {}",
        records.len(),
        out.display()
    );
    if hook.is_some() {
        eprintln!("validation hook: {hook_passed} passed, {hook_failed} failed");
    }
    Ok(())
}

fn resolve_operators(spec: Option<&str>) -> Result<Vec<OperatorId>, RunError> {
    match spec {
        None => Ok(OperatorId::ALL.to_vec()),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| OperatorId::from_str(name).map_err(usage))
            .collect(),
    }
}

fn resolve_style(spec: Option<&str>) -> Result<Unary2AddStyle, RunError> {
    match spec {
        None => Ok(Unary2AddStyle::default()),
        Some("expanded") => Ok(Unary2AddStyle::Expanded),
        Some("compound") => Ok(Unary2AddStyle::Compound),
        Some(other) => Err(usage(format!(
            "unary2add.style must be `expanded` or `compound`, got `{other}`"
        ))),
    }
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

fn cmd_score(
    records_path: &Path,
    out: &Path,
    model: Option<PathBuf>,
    endpoint: Option<String>,
    field: Option<String>,
    fixed: Option<(f64, f64)>,
    cfg: &Config,
) -> Result<(), RunError> {
    let mut backend = resolve_backend(model, endpoint, cfg)?;
    let field = resolve_field(field.as_deref().or(cfg.get("score.field")))?;
    let records = transform::read_records(BufReader::new(
        File::open(records_path).map_err(fatal)?,
    ))
    .map_err(fatal)?;

    let mut scores = Vec::new();
    let mut non_valid = 0usize;
    let mut unscorable = 0usize;
    for record in &records {
        if record.status != TransformationStatus::Valid {
            non_valid += 1;
            continue;
        }
        match naturalness::score(&mut backend, record) {
            Ok(s) => scores.push(s),
            Err(e @ ScoreError::Backend(_)) => return Err(fatal(e)),
            Err(e) => {
                eprintln!("warning: cannot score {}: {e}", record.id);
                unscorable += 1;
            }
        }
    }

    if !scores.is_empty() {
        match naturalness::normalize_with(&mut scores, field, fixed).map_err(fatal)? {
            Normalization::Applied { min, max } => {
                eprintln!("normalized {} over [{min:.6}, {max:.6}]", field.name());
            }
            Normalization::DegenerateRange { value } => {
                eprintln!(
                    "warning: degenerate range (every {} = {value}); p_unnatural pinned to 0.5",
                    field.name()
                );
            }
        }
    }
    naturalness::write_scores(
        BufWriter::new(File::create(out).map_err(fatal)?),
        &scores,
    )
    .map_err(fatal)?;
    eprintln!(
        "scored {} records -> {} ({non_valid} non-valid and {unscorable} unscorable skipped)",
        scores.len(),
        out.display()
    );
    Ok(())
}

fn resolve_backend(
    model: Option<PathBuf>,
    endpoint: Option<String>,
    cfg: &Config,
) -> Result<LmBackend, RunError> {
    if let Some(path) = model {
        return Ok(LmBackend::Ngram(
            NgramModel::load_from_path(&path).map_err(fatal)?,
        ));
    }
    if let Some(ep) = endpoint {
        return Ok(LmBackend::External(Bridge::connect(&ep).map_err(fatal)?));
    }
    match cfg.get("lm.backend") {
        Some("ngram") => {
            let path = cfg
                .get("lm.model")
                .ok_or_else(|| usage("lm.backend = ngram needs lm.model"))?;
            Ok(LmBackend::Ngram(
                NgramModel::load_from_path(path).map_err(fatal)?,
            ))
        }
        Some("external") => {
            let ep = cfg
                .get("lm.endpoint")
                .ok_or_else(|| usage("lm.backend = external needs lm.endpoint"))?;
            Ok(LmBackend::External(Bridge::connect(ep).map_err(fatal)?))
        }
        Some(other) => Err(usage(format!(
            "lm.backend must be `ngram` or `external`, got `{other}`"
        ))),
        None => Err(usage(
            "no language model: pass --model or --endpoint, or set lm.backend in the config",
        )),
    }
}

fn resolve_field(spec: Option<&str>) -> Result<ScoreField, RunError> {
    match spec {
        None | Some("rnc") => Ok(ScoreField::Rnc),
        Some("ce") | Some("ce_transformed") => Ok(ScoreField::CeTransformed),
        Some(other) => Err(usage(format!(
            "score field must be `rnc` or `ce`, got `{other}`"
        ))),
    }
}

// ---------------------------------------------------------------------------
// evaluate-metric
// ---------------------------------------------------------------------------

fn cmd_evaluate_metric(scores_path: &Path, labels_path: &Path) -> Result<(), RunError> {
    let scores = naturalness::read_scores(BufReader::new(
        File::open(scores_path).map_err(fatal)?,
    ))
    .map_err(fatal)?;
    let labels = annotate::read_labels(BufReader::new(
        File::open(labels_path).map_err(fatal)?,
    ))
    .map_err(fatal)?;
    let by_id: HashMap<&str, BinaryLabel> = labels
        .iter()
        .map(|l| (l.transformation_id.as_str(), binary_label(l.label)))
        .collect();

    let mut rnc_pairs = Vec::new();
    let mut ce_pairs = Vec::new();
    let mut unlabeled = 0usize;
    for s in &scores {
        match by_id.get(s.transformation_id.as_str()) {
            Some(&label) => {
                rnc_pairs.push((s.rnc, label));
                ce_pairs.push((s.ce_transformed, label));
            }
            None => unlabeled += 1,
        }
    }
    let evals = [
        auc("rnc", &rnc_pairs).map_err(fatal)?,
        auc("ce_transformed", &ce_pairs).map_err(fatal)?,
    ];
    println!("{:<16} {:>7} {:>10} {:>8}", "metric", "auc", "unnatural", "natural");
    for e in &evals {
        println!(
            "{:<16} {:>7.4} {:>10} {:>8}",
            e.metric, e.auc, e.n_positive, e.n_negative
        );
    }
    if unlabeled > 0 {
        eprintln!("{unlabeled} scores had no label and were skipped");
    }
    Ok(())
}

/// Collapses the four-way label into the two evaluation classes.
fn binary_label(cat: LabelCategory) -> BinaryLabel {
    match cat {
        LabelCategory::Natural | LabelCategory::LikelyNatural => BinaryLabel::Natural,
        LabelCategory::Unnatural | LabelCategory::LikelyUnnatural => BinaryLabel::Unnatural,
    }
}

// ---------------------------------------------------------------------------
// robustness
// ---------------------------------------------------------------------------

fn cmd_robustness(
    evals_path: &Path,
    labels: Option<PathBuf>,
    filter: Option<String>,
    out: Option<PathBuf>,
    cfg: &Config,
) -> Result<(), RunError> {
    let mut evals = robustness::read_evals(BufReader::new(
        File::open(evals_path).map_err(fatal)?,
    ))
    .map_err(fatal)?;
    if let Some(labels_path) = labels {
        let labels = annotate::read_labels(BufReader::new(
            File::open(labels_path).map_err(fatal)?,
        ))
        .map_err(fatal)?;
        let by_id: HashMap<String, LabelCategory> = labels
            .into_iter()
            .map(|l| (l.transformation_id, l.label))
            .collect();
        for bug in &mut evals {
            for variant in &mut bug.variants {
                if let Some(&cat) = by_id.get(&variant.transformation_id) {
                    variant.label = Some(cat);
                }
            }
        }
    }
    let filters = resolve_filter(filter.as_deref().or(cfg.get("report.filter")))?;
    let mut reports = Vec::new();
    for f in filters {
        reports.extend(robustness::reports(&evals, f).map_err(fatal)?);
    }
    print!("{}", robustness::render_table(&reports));
    if let Some(out) = out {
        let json = serde_json::to_string_pretty(&reports).map_err(fatal)?;
        fs::write(&out, json + "\n").map_err(fatal)?;
        eprintln!("wrote {} reports -> {}", reports.len(), out.display());
    }
    Ok(())
}

fn resolve_filter(spec: Option<&str>) -> Result<Vec<TransformFilter>, RunError> {
    match spec {
        None | Some("both") => Ok(vec![
            TransformFilter::AllTransforms,
            TransformFilter::NaturalOnly,
        ]),
        Some("all") => Ok(vec![TransformFilter::AllTransforms]),
        Some("natural-only") => Ok(vec![TransformFilter::NaturalOnly]),
        Some(other) => Err(usage(format!(
            "filter must be `all`, `natural-only`, or `both`, got `{other}`"
        ))),
    }
}

// ---------------------------------------------------------------------------
// annotations
// ---------------------------------------------------------------------------

fn cmd_annotations(responses_path: &Path, out: Option<PathBuf>) -> Result<(), RunError> {
    let file = File::open(responses_path).map_err(fatal)?;
    let responses = annotate::read_responses_csv(BufReader::new(file)).map_err(fatal)?;

    let mut timed = Vec::new();
    let mut bad_times = 0usize;
    for r in responses {
        if r.completion_seconds > 0.0 && r.completion_seconds.is_finite() {
            timed.push(r);
        } else {
            bad_times += 1;
        }
    }
    if bad_times > 0 {
        eprintln!("warning: {bad_times} responses with non-positive completion times skipped");
    }
    let trimmed = annotate::trim_outlier_times(timed);
    if trimmed.dropped > 0 {
        eprintln!(
            "dropped {} responses above the 99th-percentile completion time ({:.1}s)",
            trimmed.dropped, trimmed.cutoff_seconds
        );
    }

    let run = annotate::label_all(&trimmed.kept);
    for (idx, err) in &run.bad_rows {
        eprintln!("warning: response row {}: {err}", idx + 1);
    }
    for (id, err) in &run.rejected {
        eprintln!("warning: transformation {id}: {err}");
    }

    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for l in &run.labels {
        let name = match l.label {
            LabelCategory::Natural => "Natural",
            LabelCategory::LikelyNatural => "LikelyNatural",
            LabelCategory::LikelyUnnatural => "LikelyUnnatural",
            LabelCategory::Unnatural => "Unnatural",
        };
        *counts.entry(name).or_default() += 1;
    }
    let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{k} {v}")).collect();
    eprintln!("{} labels ({})", run.labels.len(), summary.join(", "));
    match annotate::fleiss_kappa(&annotate::verdict_matrix(&run.labels)) {
        Ok(kappa) => eprintln!("fleiss kappa over labeled items: {kappa:.4}"),
        Err(e) => eprintln!("fleiss kappa: n/a ({e})"),
    }

    match out {
        Some(path) => {
            annotate::write_labels(
                BufWriter::new(File::create(&path).map_err(fatal)?),
                &run.labels,
            )
            .map_err(fatal)?;
            eprintln!("wrote {} labels -> {}", run.labels.len(), path.display());
        }
        None => annotate::write_labels(std::io::stdout().lock(), &run.labels).map_err(fatal)?,
    }
    Ok(())
}
