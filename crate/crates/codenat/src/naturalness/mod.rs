//! Naturalness scoring of transformations and evaluation of the scores as
//! classifiers.
//!
//! A transformation is scored by comparing the cross-entropy of the original
//! method with the cross-entropy of the transformed method under the same
//! language model. Two derived quantities are reported per record:
//!
//! * **RNC** (relative naturalness change): `(ce_transformed − ce_original)
//!   / ce_original`, dimensionless;
//! * **ANC** (absolute naturalness change): `ce_transformed − ce_original`,
//!   in bits per token.
//!
//! RNC is invariant under the logarithm base used for cross-entropy, because
//! a base change rescales numerator and denominator by the same constant.
//!
//! [`normalize`] min-max rescales one score field over an evaluation set
//! into a `[0, 1]` unnaturalness probability, and [`auc`], [`spearman`], and
//! [`mww_test`] quantify how well scores separate labeled natural from
//! unnatural transformations.
//!
//! # Backends
//!
//! [`LmBackend::Ngram`] scores with the built-in n-gram model. For external
//! models, [`LmBackend::External`] speaks a line-oriented JSON protocol over
//! a subprocess's stdio (`cmd:<shell command>`) or a TCP connection
//! (`tcp:<host>:<port>`): each request line is
//! `{"id":N,"tokens":["…", …]}` and the matching response line is
//! `{"id":N,"logprobs":[…]}` with exactly one natural-log probability per
//! token. Logs are base *e* on the wire and converted to bits internally.

use std::io::{self, BufRead, BufReader, Write};
use std::net::TcpStream;
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ngram::{CrossEntropy, NgramModel};
use crate::source::{lex, LexError, TokenKind};
use crate::transform::{TransformationRecord, TransformationStatus};

/// Lexes a method body into the token stream a language model consumes:
/// identifiers, keywords, literals, operators, and separators, in source
/// order, with comments (and, by construction, whitespace) dropped. String
/// literals stay verbatim as single tokens.
pub fn lm_tokens(source: &str) -> Result<Vec<String>, LexError> {
    Ok(lex(source)?
        .into_iter()
        .filter(|t| t.kind != TokenKind::Comment)
        .map(|t| t.text)
        .collect())
}

// ---------------------------------------------------------------------------
// External bridge
// ---------------------------------------------------------------------------

/// Failure while talking to an external model bridge.
#[derive(Debug, Error)]
pub enum BridgeError {
    /// The endpoint string is neither `cmd:…` nor `tcp:…`.
    #[error("unrecognized bridge endpoint `{0}` (expected `cmd:<shell command>` or `tcp:<host>:<port>`)")]
    Endpoint(String),
    /// The bridge subprocess could not be spawned.
    #[error("failed to spawn bridge command `{command}`: {source}")]
    Spawn {
        command: String,
        #[source]
        source: io::Error,
    },
    /// The TCP connection could not be established.
    #[error("failed to connect to bridge at `{address}`: {source}")]
    Connect {
        address: String,
        #[source]
        source: io::Error,
    },
    /// Reading from or writing to an established bridge failed.
    #[error("bridge i/o error: {0}")]
    Io(#[from] io::Error),
    /// The bridge answered, but not with a well-formed matching response.
    #[error("bridge protocol violation: {0}")]
    Protocol(String),
}

#[derive(Serialize)]
struct BridgeRequest<'a> {
    id: u64,
    tokens: &'a [String],
}

#[derive(Deserialize)]
struct BridgeResponse {
    id: u64,
    logprobs: Vec<f64>,
}

enum Transport {
    Child {
        child: Child,
        stdin: Option<ChildStdin>,
        stdout: BufReader<ChildStdout>,
    },
    Tcp {
        writer: TcpStream,
        reader: BufReader<TcpStream>,
    },
}

/// A connection to an external language model speaking the line protocol
/// described in the [module docs](self).
pub struct Bridge {
    endpoint: String,
    transport: Transport,
    next_id: u64,
}

impl Bridge {
    /// Connects to `endpoint`: `cmd:<shell command>` spawns the command via
    /// `sh -c` and talks over its stdio; `tcp:<host>:<port>` opens a TCP
    /// connection.
    pub fn connect(endpoint: &str) -> Result<Bridge, BridgeError> {
        let transport = if let Some(command) = endpoint.strip_prefix("cmd:") {
            let mut child = Command::new("sh")
                .arg("-c")
                .arg(command)
                .stdin(Stdio::piped())
                .stdout(Stdio::piped())
                .spawn()
                .map_err(|source| BridgeError::Spawn {
                    command: command.to_string(),
                    source,
                })?;
            let stdin = child.stdin.take().expect("stdin was piped");
            let stdout = BufReader::new(child.stdout.take().expect("stdout was piped"));
            Transport::Child {
                child,
                stdin: Some(stdin),
                stdout,
            }
        } else if let Some(address) = endpoint.strip_prefix("tcp:") {
            let connect_err = |source| BridgeError::Connect {
                address: address.to_string(),
                source,
            };
            let writer = TcpStream::connect(address).map_err(connect_err)?;
            let reader = BufReader::new(writer.try_clone().map_err(connect_err)?);
            Transport::Tcp { writer, reader }
        } else {
            return Err(BridgeError::Endpoint(endpoint.to_string()));
        };
        Ok(Bridge {
            endpoint: endpoint.to_string(),
            transport,
            next_id: 1,
        })
    }

    /// The endpoint string this bridge was opened with.
    pub fn endpoint(&self) -> &str {
        &self.endpoint
    }

    /// Sends one request and returns the per-token natural-log probabilities
    /// from the matching response.
    pub fn logprobs(&mut self, tokens: &[String]) -> Result<Vec<f64>, BridgeError> {
        let id = self.next_id;
        self.next_id += 1;
        let request = serde_json::to_string(&BridgeRequest { id, tokens })
            .map_err(|e| BridgeError::Protocol(format!("failed to encode request: {e}")))?;

        let mut line = String::new();
        let read = match &mut self.transport {
            Transport::Child { stdin, stdout, .. } => {
                let stdin = stdin
                    .as_mut()
                    .ok_or_else(|| BridgeError::Protocol("bridge stdin already closed".into()))?;
                writeln!(stdin, "{request}")?;
                stdin.flush()?;
                stdout.read_line(&mut line)?
            }
            Transport::Tcp { writer, reader } => {
                writeln!(writer, "{request}")?;
                writer.flush()?;
                reader.read_line(&mut line)?
            }
        };
        if read == 0 {
            return Err(BridgeError::Protocol(
                "bridge closed the connection without answering".into(),
            ));
        }

        let response: BridgeResponse = serde_json::from_str(line.trim_end())
            .map_err(|e| BridgeError::Protocol(format!("malformed response line: {e}")))?;
        if response.id != id {
            return Err(BridgeError::Protocol(format!(
                "response id {} does not match request id {id}",
                response.id
            )));
        }
        if response.logprobs.len() != tokens.len() {
            return Err(BridgeError::Protocol(format!(
                "response carries {} logprobs for {} tokens",
                response.logprobs.len(),
                tokens.len()
            )));
        }
        Ok(response.logprobs)
    }
}

impl Drop for Bridge {
    fn drop(&mut self) {
        if let Transport::Child { child, stdin, .. } = &mut self.transport {
            // Closing stdin signals EOF; well-behaved bridges exit on it.
            drop(stdin.take());
            let _ = child.wait();
        }
    }
}

// ---------------------------------------------------------------------------
// Backends and scoring
// ---------------------------------------------------------------------------

/// The language model a scoring run reads probabilities from. Exactly one
/// backend is configured per run.
pub enum LmBackend {
    /// The built-in n-gram model.
    Ngram(NgramModel),
    /// An external model behind a [`Bridge`].
    External(Bridge),
}

impl LmBackend {
    /// Cross-entropy of a token sequence in bits per token.
    ///
    /// The n-gram backend includes its end-of-sequence step (see
    /// [`NgramModel::cross_entropy`]); the external backend averages over
    /// exactly the returned per-token log probabilities.
    pub fn cross_entropy(&mut self, tokens: &[String]) -> Result<CrossEntropy, ScoreError> {
        if tokens.is_empty() {
            return Err(ScoreError::EmptyTokens);
        }
        match self {
            LmBackend::Ngram(model) => {
                model.cross_entropy(tokens).map_err(|_| ScoreError::EmptyTokens)
            }
            LmBackend::External(bridge) => {
                let logprobs = bridge.logprobs(tokens)?;
                let mean = logprobs.iter().sum::<f64>() / logprobs.len() as f64;
                Ok(CrossEntropy {
                    value: -mean / std::f64::consts::LN_2,
                    token_count: logprobs.len(),
                })
            }
        }
    }
}

/// Why a transformation record could not be scored.
#[derive(Debug, Error)]
pub enum ScoreError {
    /// Only `Valid` records are scored.
    #[error("record {id} has status {status}; only Valid records are scored")]
    NotValid {
        id: String,
        status: TransformationStatus,
    },
    /// A method source lexed to zero code tokens.
    #[error("method tokenizes to an empty stream")]
    EmptyTokens,
    /// A method source failed to lex at all.
    #[error("failed to tokenize the {which} source: {source}")]
    Lex {
        which: &'static str,
        #[source]
        source: LexError,
    },
    /// The external bridge failed.
    #[error(transparent)]
    Backend(#[from] BridgeError),
}

/// Per-transformation naturalness score, serialized one per line as JSON.
///
/// `p_unnatural` is `null` until [`normalize`] fills it from the chosen
/// field over a whole evaluation set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaturalnessScore {
    pub transformation_id: String,
    /// Cross-entropy of the original method, bits per token.
    pub ce_original: f64,
    /// Cross-entropy of the transformed method, bits per token.
    pub ce_transformed: f64,
    /// Relative naturalness change: `(ce_transformed − ce_original) / ce_original`.
    pub rnc: f64,
    /// Absolute naturalness change: `ce_transformed − ce_original`.
    pub anc: f64,
    #[serde(default)]
    pub p_unnatural: Option<f64>,
}

impl NaturalnessScore {
    /// Builds a score from the two cross-entropies, filling `rnc` and `anc`
    /// by their defining equations and leaving `p_unnatural` unset.
    pub fn from_cross_entropies(
        transformation_id: String,
        ce_original: f64,
        ce_transformed: f64,
    ) -> NaturalnessScore {
        NaturalnessScore {
            transformation_id,
            ce_original,
            ce_transformed,
            rnc: (ce_transformed - ce_original) / ce_original,
            anc: ce_transformed - ce_original,
            p_unnatural: None,
        }
    }
}

/// Scores one `Valid` transformation record: both method texts are lexed to
/// LM token streams and measured under the same backend.
pub fn score(
    backend: &mut LmBackend,
    record: &TransformationRecord,
) -> Result<NaturalnessScore, ScoreError> {
    if record.status != TransformationStatus::Valid {
        return Err(ScoreError::NotValid {
            id: record.id.clone(),
            status: record.status,
        });
    }
    let original = lm_tokens(&record.original).map_err(|source| ScoreError::Lex {
        which: "original",
        source,
    })?;
    let transformed = lm_tokens(&record.transformed).map_err(|source| ScoreError::Lex {
        which: "transformed",
        source,
    })?;
    let ce_original = backend.cross_entropy(&original)?;
    let ce_transformed = backend.cross_entropy(&transformed)?;
    Ok(NaturalnessScore::from_cross_entropies(
        record.id.clone(),
        ce_original.value,
        ce_transformed.value,
    ))
}

/// Writes scores as JSONL, one object per line.
pub fn write_scores<W: Write>(mut w: W, scores: &[NaturalnessScore]) -> io::Result<()> {
    for s in scores {
        let line = serde_json::to_string(s).map_err(io::Error::other)?;
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Reads scores from JSONL; blank lines are skipped and parse errors name
/// the 1-based line.
pub fn read_scores<R: BufRead>(r: R) -> io::Result<Vec<NaturalnessScore>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let score = serde_json::from_str(&line).map_err(|e| {
            io::Error::new(
                io::ErrorKind::InvalidData,
                format!("line {}: {e}", i + 1),
            )
        })?;
        out.push(score);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

/// Which score field normalization (or ranking) reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScoreField {
    Rnc,
    CeTransformed,
}

impl ScoreField {
    fn get(self, s: &NaturalnessScore) -> f64 {
        match self {
            ScoreField::Rnc => s.rnc,
            ScoreField::CeTransformed => s.ce_transformed,
        }
    }

    /// The JSONL field name this variant reads.
    pub fn name(self) -> &'static str {
        match self {
            ScoreField::Rnc => "rnc",
            ScoreField::CeTransformed => "ce_transformed",
        }
    }
}

/// What [`normalize`] did to the set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Normalization {
    /// Min-max applied; the bounds used are recorded.
    Applied { min: f64, max: f64 },
    /// Every score had the same field value, so no ordering information
    /// exists; every `p_unnatural` was pinned to 0.5. Callers should warn.
    DegenerateRange { value: f64 },
}

/// Why a score set could not be normalized.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormalizeError {
    /// An empty set has no defined bounds.
    #[error("cannot normalize an empty score set")]
    EmptyScoreSet,
    /// A NaN or infinite field value has no place on a probability scale;
    /// writing it through would poison every other probability in the set.
    /// External backends can produce these — surface the item instead.
    #[error("score for `{transformation_id}` has non-finite {field} ({value}); cannot normalize")]
    NonFinite {
        transformation_id: String,
        field: &'static str,
        value: f64,
    },
}

/// Min-max normalizes `field` over the whole set into `p_unnatural`:
/// the set minimum maps to 0 and the maximum to 1.
///
/// When every value is identical the range is degenerate: all probabilities
/// are pinned to 0.5 and [`Normalization::DegenerateRange`] reports it.
pub fn normalize(
    scores: &mut [NaturalnessScore],
    field: ScoreField,
) -> Result<Normalization, NormalizeError> {
    normalize_with(scores, field, None)
}

/// [`normalize`] with optional fixed bounds, for comparing runs on a common
/// scale. Values outside the fixed range clamp to `[0, 1]`.
pub fn normalize_with(
    scores: &mut [NaturalnessScore],
    field: ScoreField,
    fixed: Option<(f64, f64)>,
) -> Result<Normalization, NormalizeError> {
    if scores.is_empty() {
        return Err(NormalizeError::EmptyScoreSet);
    }
    if let Some(bad) = scores.iter().find(|s| !field.get(s).is_finite()) {
        return Err(NormalizeError::NonFinite {
            transformation_id: bad.transformation_id.clone(),
            field: field.name(),
            value: field.get(bad),
        });
    }
    let (min, max) = match fixed {
        Some(bounds) => bounds,
        None => scores.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            let v = field.get(s);
            (lo.min(v), hi.max(v))
        }),
    };
    if !(max > min) {
        for s in scores.iter_mut() {
            s.p_unnatural = Some(0.5);
        }
        return Ok(Normalization::DegenerateRange { value: min });
    }
    for s in scores.iter_mut() {
        let p = (field.get(s) - min) / (max - min);
        s.p_unnatural = Some(p.clamp(0.0, 1.0));
    }
    Ok(Normalization::Applied { min, max })
}

// ---------------------------------------------------------------------------
// Rank statistics
// ---------------------------------------------------------------------------

/// A transformation's ground-truth class for metric evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinaryLabel {
    Natural,
    Unnatural,
}

/// How well one score field separates unnatural from natural transformations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricEvaluation {
    /// Human-readable name of the scored metric (e.g. `"rnc"`).
    pub metric: String,
    /// Probability that a random unnatural item outscores a random natural
    /// one, ties counting one half.
    pub auc: f64,
    /// Number of unnatural (positive-class) items.
    pub n_positive: usize,
    /// Number of natural (negative-class) items.
    pub n_negative: usize,
}

/// Mann-Whitney-Wilcoxon test result from [`mww_test`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MwwResult {
    /// The U statistic for the first sample: pairs where it wins, ties one half.
    pub u: f64,
    /// Two-sided p-value from the tie-corrected normal approximation.
    pub p_value: f64,
    /// Rank-biserial correlation, `2·AUC − 1`; positive when the first
    /// sample is stochastically larger.
    pub effect_size: f64,
}

/// Failure computing a rank statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MetricError {
    /// AUC needs at least one item of each class.
    #[error("need both classes to compute AUC (got {n_positive} unnatural, {n_negative} natural)")]
    SingleClass {
        n_positive: usize,
        n_negative: usize,
    },
    /// Paired statistics need equal-length inputs.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// Rank correlation is meaningless below three pairs.
    #[error("need at least 3 paired observations, got {len}")]
    TooShort { len: usize },
    /// Both test samples must be non-empty.
    #[error("both samples must be non-empty")]
    EmptySample,
}

/// Average ranks (1-based) with ties sharing the mean of their positions.
/// `values` must not contain NaN.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).expect("NaN in rank input"));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let mean_rank = ((i + j) as f64) / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = mean_rank;
        }
        i = j + 1;
    }
    ranks
}

/// Mann-Whitney U for `a` against `b` via the rank-sum identity; equals the
/// pair count (wins plus half-ties) exactly.
fn mww_u(a: &[f64], b: &[f64]) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    let ranks = average_ranks(&pooled);
    let r_a: f64 = ranks[..a.len()].iter().sum();
    let na = a.len() as f64;
    r_a - na * (na + 1.0) / 2.0
}

/// Area under the ROC curve of `scored` = (score, label) pairs, treating
/// unnatural as the positive class: the probability that a randomly chosen
/// unnatural item scores strictly higher than a randomly chosen natural one,
/// with ties counting one half.
pub fn auc(metric: &str, scored: &[(f64, BinaryLabel)]) -> Result<MetricEvaluation, MetricError> {
    let positives: Vec<f64> = scored
        .iter()
        .filter(|(_, l)| *l == BinaryLabel::Unnatural)
        .map(|(s, _)| *s)
        .collect();
    let negatives: Vec<f64> = scored
        .iter()
        .filter(|(_, l)| *l == BinaryLabel::Natural)
        .map(|(s, _)| *s)
        .collect();
    if positives.is_empty() || negatives.is_empty() {
        return Err(MetricError::SingleClass {
            n_positive: positives.len(),
            n_negative: negatives.len(),
        });
    }
    let u = mww_u(&positives, &negatives);
    Ok(MetricEvaluation {
        metric: metric.to_string(),
        auc: u / (positives.len() as f64 * negatives.len() as f64),
        n_positive: positives.len(),
        n_negative: negatives.len(),
    })
}

/// Spearman rank correlation: Pearson correlation of average ranks, so ties
/// are handled without the shortcut d² formula. Undefined (NaN) when either
/// input is constant.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64, MetricError> {
    if x.len() != y.len() {
        return Err(MetricError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 3 {
        return Err(MetricError::TooShort { len: x.len() });
    }
    let rx = average_ranks(x);
    let ry = average_ranks(y);
    let n = x.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for i in 0..x.len() {
        cov += (rx[i] - mx) * (ry[i] - my);
        vx += (rx[i] - mx) * (rx[i] - mx);
        vy += (ry[i] - my) * (ry[i] - my);
    }
    Ok(cov / (vx * vy).sqrt())
}

/// Two-sided Mann-Whitney-Wilcoxon test of `a` against `b`.
///
/// The p-value uses the normal approximation with the tie correction and no
/// continuity correction; when every pooled value is identical the variance
/// vanishes and the p-value is 1. The effect size is the rank-biserial
/// correlation `2·AUC − 1`, signed positive when `a` tends larger.
pub fn mww_test(a: &[f64], b: &[f64]) -> Result<MwwResult, MetricError> {
    if a.is_empty() || b.is_empty() {
        return Err(MetricError::EmptySample);
    }
    let na = a.len() as f64;
    let nb = b.len() as f64;
    let n = na + nb;
    let u = mww_u(a, b);

    // Tie term: Σ (t³ − t) over tie groups of the pooled sample.
    let mut pooled: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    pooled.sort_by(|x, y| x.partial_cmp(y).expect("NaN in sample"));
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < pooled.len() {
        let mut j = i;
        while j + 1 < pooled.len() && pooled[j + 1] == pooled[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }

    let mean = na * nb / 2.0;
    let variance = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    let p_value = if variance > 0.0 {
        let z = (u - mean) / variance.sqrt();
        libm::erfc(z.abs() / std::f64::consts::SQRT_2)
    } else {
        1.0
    };
    Ok(MwwResult {
        u,
        p_value,
        effect_size: 2.0 * (u / (na * nb)) - 1.0,
    })
}
