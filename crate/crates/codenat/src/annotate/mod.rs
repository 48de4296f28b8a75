//! Survey analytics: raw Likert responses become per-rater verdicts, then
//! five-rater naturalness labels, plus the agreement statistics used to
//! sanity-check a labeling round.
//!
//! The pipeline is: [`trim_outlier_times`] (drop suspiciously slow
//! responses), [`rater_verdict`] per response, [`aggregate_label`] per
//! transformation (exactly five raters each), and [`fleiss_kappa`] /
//! [`cohen_kappa`] over the results. [`label_all`] strings the middle steps
//! together and reports rejected rows instead of failing the run.
//!
//! A response answers two four-point Likert questions about a code
//! transformation — does it reduce readability, and does it violate coding
//! conventions — where 1 = disagree, 2 = weakly disagree, 3 = weakly agree,
//! 4 = agree. A rater finds the transformation unnatural if they at least
//! weakly agree with either question.

use std::io::{self, BufRead, Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One rater's answers for one transformation.
///
/// CSV columns: `rater_id,transformation_id,readability,convention,completion_seconds`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LikertResponse {
    pub rater_id: String,
    pub transformation_id: String,
    /// "The transformation reduces readability": 1..=4.
    pub readability: u8,
    /// "The transformation violates coding conventions": 1..=4.
    pub convention: u8,
    /// Wall-clock seconds the rater spent; must be positive.
    pub completion_seconds: f64,
}

/// A single rater's overall judgment of one transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    NaturalVerdict,
    UnnaturalVerdict,
}

/// [`Verdict`] with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RaterVerdict {
    pub rater_id: String,
    pub transformation_id: String,
    pub verdict: Verdict,
}

/// The four-way label a transformation earns from five verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelCategory {
    /// At least 4 of 5 raters judged it natural.
    Natural,
    /// Exactly 3 of 5 judged it natural.
    LikelyNatural,
    /// Exactly 3 of 5 judged it unnatural.
    LikelyUnnatural,
    /// At least 4 of 5 judged it unnatural.
    Unnatural,
}

/// Aggregated label for one transformation, serialized one per line as JSON
/// and joinable with transformation records by `transformation_id`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaturalnessLabel {
    pub transformation_id: String,
    pub label: LabelCategory,
    pub n_natural: u32,
    pub n_unnatural: u32,
}

/// A Likert answer fell outside the 1..=4 scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{field} value {value} is outside the 1..4 Likert scale")]
pub struct RangeError {
    pub field: &'static str,
    pub value: u8,
}

/// Why five verdicts could not be aggregated into a label.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AggregateError {
    /// A label needs exactly five verdicts.
    #[error("need exactly 5 verdicts, got {0}")]
    Cardinality(usize),
    /// All five verdicts must concern the same transformation.
    #[error("verdicts span multiple transformations: `{0}` and `{1}`")]
    MixedTransformations(String, String),
    /// Each rater may judge a transformation once.
    #[error("rater `{0}` appears more than once")]
    DuplicateRater(String),
}

/// Why an agreement statistic could not be computed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgreementError {
    #[error("agreement over an empty input is undefined")]
    Empty,
    /// Every Fleiss matrix row must sum to the same rater count.
    #[error("row {row} sums to {got} raters, but row 0 sums to {expected}")]
    RaggedMatrix { row: usize, got: u32, expected: u32 },
    /// Fleiss agreement needs at least two raters per item.
    #[error("need at least 2 raters per item, got {0}")]
    TooFewRaters(u32),
    #[error("label sequences differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// Turns one response into the rater's verdict: unnatural iff the rater at
/// least weakly agrees (≥ 3) that readability suffers or that conventions
/// are violated.
pub fn rater_verdict(r: &LikertResponse) -> Result<RaterVerdict, RangeError> {
    for (field, value) in [("readability", r.readability), ("convention", r.convention)] {
        if !(1..=4).contains(&value) {
            return Err(RangeError { field, value });
        }
    }
    let verdict = if r.readability >= 3 || r.convention >= 3 {
        Verdict::UnnaturalVerdict
    } else {
        Verdict::NaturalVerdict
    };
    Ok(RaterVerdict {
        rater_id: r.rater_id.clone(),
        transformation_id: r.transformation_id.clone(),
        verdict,
    })
}

/// Aggregates exactly five distinct raters' verdicts on one transformation:
/// 4-of-5 agreement labels `Natural`/`Unnatural`, a 3-2 split labels
/// `LikelyNatural`/`LikelyUnnatural`.
pub fn aggregate_label(verdicts: &[RaterVerdict]) -> Result<NaturalnessLabel, AggregateError> {
    if verdicts.len() != 5 {
        return Err(AggregateError::Cardinality(verdicts.len()));
    }
    let transformation_id = verdicts[0].transformation_id.clone();
    for v in &verdicts[1..] {
        if v.transformation_id != transformation_id {
            return Err(AggregateError::MixedTransformations(
                transformation_id,
                v.transformation_id.clone(),
            ));
        }
    }
    for (i, v) in verdicts.iter().enumerate() {
        if verdicts[..i].iter().any(|w| w.rater_id == v.rater_id) {
            return Err(AggregateError::DuplicateRater(v.rater_id.clone()));
        }
    }
    let n_unnatural = verdicts
        .iter()
        .filter(|v| v.verdict == Verdict::UnnaturalVerdict)
        .count() as u32;
    let n_natural = 5 - n_unnatural;
    let label = if n_natural >= 4 {
        LabelCategory::Natural
    } else if n_unnatural >= 4 {
        LabelCategory::Unnatural
    } else if n_natural == 3 {
        LabelCategory::LikelyNatural
    } else {
        LabelCategory::LikelyUnnatural
    };
    Ok(NaturalnessLabel {
        transformation_id,
        label,
        n_natural,
        n_unnatural,
    })
}

/// Fleiss kappa over an items × category-counts matrix. Every row must sum
/// to the same rater count. Perfect chance agreement (`pe = 1`) is returned
/// as 1 to avoid a 0/0.
pub fn fleiss_kappa(matrix: &[Vec<u32>]) -> Result<f64, AgreementError> {
    if matrix.is_empty() || matrix[0].is_empty() {
        return Err(AgreementError::Empty);
    }
    let raters: u32 = matrix[0].iter().sum();
    if raters < 2 {
        return Err(AgreementError::TooFewRaters(raters));
    }
    for (row, counts) in matrix.iter().enumerate() {
        let got: u32 = counts.iter().sum();
        if got != raters {
            return Err(AgreementError::RaggedMatrix {
                row,
                got,
                expected: raters,
            });
        }
    }
    let n_items = matrix.len() as f64;
    let n = f64::from(raters);
    let n_cats = matrix[0].len();

    // Mean per-item agreement: fraction of rater pairs that agree.
    let p_bar = matrix
        .iter()
        .map(|row| {
            let sum_sq: f64 = row.iter().map(|&c| f64::from(c) * f64::from(c)).sum();
            (sum_sq - n) / (n * (n - 1.0))
        })
        .sum::<f64>()
        / n_items;

    // Chance agreement from the pooled category shares.
    let mut pe = 0.0;
    for j in 0..n_cats {
        let col: f64 = matrix.iter().map(|row| f64::from(row[j])).sum();
        let share = col / (n_items * n);
        pe += share * share;
    }
    if (1.0 - pe).abs() < 1e-15 {
        return Ok(1.0);
    }
    Ok((p_bar - pe) / (1.0 - pe))
}

/// Cohen kappa for two raters' label sequences over the same items. As with
/// [`fleiss_kappa`], `pe = 1` (both raters constant and equal) returns 1.
pub fn cohen_kappa<T: PartialEq>(a: &[T], b: &[T]) -> Result<f64, AgreementError> {
    if a.len() != b.len() {
        return Err(AgreementError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(AgreementError::Empty);
    }
    let mut distinct: Vec<&T> = Vec::new();
    for l in a.iter().chain(b.iter()) {
        if !distinct.iter().any(|d| *d == l) {
            distinct.push(l);
        }
    }
    let n = a.len() as f64;
    let po = a.iter().zip(b).filter(|(x, y)| x == y).count() as f64 / n;
    let mut pe = 0.0;
    for l in &distinct {
        let pa = a.iter().filter(|x| x == l).count() as f64 / n;
        let pb = b.iter().filter(|y| y == l).count() as f64 / n;
        pe += pa * pb;
    }
    if (1.0 - pe).abs() < 1e-15 {
        return Ok(1.0);
    }
    Ok((po - pe) / (1.0 - pe))
}

/// Result of [`trim_outlier_times`].
#[derive(Debug, Clone, PartialEq)]
pub struct TrimOutcome {
    /// Responses at or below the cutoff, in input order.
    pub kept: Vec<LikertResponse>,
    /// How many responses were dropped.
    pub dropped: usize,
    /// The 99th-percentile cutoff applied (infinite for an empty input).
    pub cutoff_seconds: f64,
}

/// Drops responses whose completion time lies strictly above the sample's
/// 99th percentile (type-7, linear interpolation between order statistics).
pub fn trim_outlier_times(responses: Vec<LikertResponse>) -> TrimOutcome {
    if responses.is_empty() {
        return TrimOutcome {
            kept: responses,
            dropped: 0,
            cutoff_seconds: f64::INFINITY,
        };
    }
    let times: Vec<f64> = responses.iter().map(|r| r.completion_seconds).collect();
    let cutoff = percentile_type7(&times, 0.99);
    let before = responses.len();
    let kept: Vec<LikertResponse> = responses
        .into_iter()
        .filter(|r| r.completion_seconds <= cutoff)
        .collect();
    TrimOutcome {
        dropped: before - kept.len(),
        kept,
        cutoff_seconds: cutoff,
    }
}

/// Type-7 quantile: linear interpolation between order statistics at
/// `h = (n − 1)·q`.
fn percentile_type7(values: &[f64], q: f64) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("NaN completion time"));
    let h = (sorted.len() as f64 - 1.0) * q;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 < sorted.len() {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    } else {
        sorted[lo]
    }
}

/// Outcome of [`label_all`]: labels for every complete transformation, plus
/// everything that was set aside instead of silently dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelRun {
    /// One label per transformation with exactly five valid verdicts, in
    /// first-appearance order.
    pub labels: Vec<NaturalnessLabel>,
    /// Responses rejected for out-of-range Likert values, by input index.
    pub bad_rows: Vec<(usize, RangeError)>,
    /// Transformations whose verdicts could not be aggregated.
    pub rejected: Vec<(String, AggregateError)>,
}

/// Runs verdicts and aggregation over a whole response set, reporting bad
/// rows and incomplete transformations instead of failing.
pub fn label_all(responses: &[LikertResponse]) -> LabelRun {
    let mut bad_rows = Vec::new();
    let mut order: Vec<String> = Vec::new();
    let mut groups: std::collections::HashMap<String, Vec<RaterVerdict>> =
        std::collections::HashMap::new();
    for (i, r) in responses.iter().enumerate() {
        match rater_verdict(r) {
            Ok(v) => {
                if !groups.contains_key(&v.transformation_id) {
                    order.push(v.transformation_id.clone());
                }
                groups.entry(v.transformation_id.clone()).or_default().push(v);
            }
            Err(e) => bad_rows.push((i, e)),
        }
    }
    let mut labels = Vec::new();
    let mut rejected = Vec::new();
    for id in order {
        let verdicts = &groups[&id];
        match aggregate_label(verdicts) {
            Ok(label) => labels.push(label),
            Err(e) => rejected.push((id, e)),
        }
    }
    LabelRun {
        labels,
        bad_rows,
        rejected,
    }
}

/// The Fleiss input matrix induced by a label set: one row per
/// transformation, columns `[n_natural, n_unnatural]`.
pub fn verdict_matrix(labels: &[NaturalnessLabel]) -> Vec<Vec<u32>> {
    labels
        .iter()
        .map(|l| vec![l.n_natural, l.n_unnatural])
        .collect()
}

/// Reads responses from CSV with the header
/// `rater_id,transformation_id,readability,convention,completion_seconds`.
pub fn read_responses_csv<R: Read>(r: R) -> csv::Result<Vec<LikertResponse>> {
    csv::Reader::from_reader(r).deserialize().collect()
}

/// Writes labels as JSONL, one object per line.
pub fn write_labels<W: Write>(mut w: W, labels: &[NaturalnessLabel]) -> io::Result<()> {
    for l in labels {
        let line = serde_json::to_string(l).map_err(io::Error::other)?;
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Reads labels from JSONL; blank lines are skipped and parse errors name
/// the 1-based line.
pub fn read_labels<R: BufRead>(r: R) -> io::Result<Vec<NaturalnessLabel>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let label = serde_json::from_str(&line).map_err(|e| {
            io::Error::new(io::ErrorKind::InvalidData, format!("line {}: {e}", i + 1))
        })?;
        out.push(label);
    }
    Ok(out)
}
