//! Robustness evaluation of repair tools from per-bug patch-quality records.
//!
//! The inputs are [`BugEvaluation`] records: for each tool and bug, the
//! quality of the tool's patch on the original program and on each
//! transformed variant. Two views are computed:
//!
//! * **Prediction changes** — a variant whose patch quality differs from the
//!   original's counts as a positive change (quality rose) or a negative one
//!   (quality fell); a bug lands in the positive/negative set when any kept
//!   variant changes that way, and `bugs_changed` is the size of the union
//!   (one bug can appear in both sets).
//! * **Performance changes** — the plausible/correct rate on the original
//!   dataset versus the transformed dataset, where a bug with k of m kept
//!   variants meeting the bar contributes k/m (fractional normalization),
//!   and the relative change is `(transformed − origin)/origin`.
//!
//! Both views run unfiltered ([`TransformFilter::AllTransforms`]) or
//! restricted to variants labeled `Natural` ([`TransformFilter::NaturalOnly`]),
//! which requires every variant to carry a label. Bugs whose variants are
//! all filtered out drop out of the transformed-rate denominator and are
//! counted separately; rates that would divide by zero are reported as
//! absent rather than invented.

use std::collections::BTreeSet;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::annotate::LabelCategory;

/// Quality of one generated patch, totally ordered from worst to best.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum PatchQuality {
    /// Fails the test suite.
    Wrong,
    /// Passes the full test suite but may be semantically wrong.
    Plausible,
    /// Plausible and judged semantically correct.
    Correct,
}

/// A tool's patch quality on one transformed variant of a bug.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantOutcome {
    pub transformation_id: String,
    pub quality: PatchQuality,
    /// Naturalness label, when the variant has been annotated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<LabelCategory>,
}

/// Per-bug inputs: patch quality on the original program and on each
/// transformed variant. Serialized one per line as JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BugEvaluation {
    pub tool: String,
    pub bug_id: String,
    pub original_quality: PatchQuality,
    pub variants: Vec<VariantOutcome>,
}

/// How a variant's patch quality moved relative to the original's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChangeClass {
    Positive,
    Negative,
    NoChange,
}

/// Which variants an aggregation keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransformFilter {
    AllTransforms,
    /// Keep only variants labeled `Natural`; every variant must be labeled.
    NaturalOnly,
}

/// Failure aggregating robustness records.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RobustnessError {
    /// The `NaturalOnly` filter met a variant without a label.
    #[error("variant {transformation_id} of bug {bug_id} has no naturalness label, which the NaturalOnly filter requires")]
    MissingLabels {
        bug_id: String,
        transformation_id: String,
    },
    /// Relative change from a zero origin rate is undefined.
    #[error("origin rate is zero; relative performance change is undefined")]
    ZeroOrigin,
    /// At least one bug is needed to compute rates.
    #[error("no bugs to aggregate")]
    NoBugs,
}

/// Classifies one variant against the original: `Positive` iff the
/// transformed program got a strictly better patch, `Negative` iff strictly
/// worse. Swapping the arguments swaps `Positive` and `Negative`.
pub fn classify_change(orig: PatchQuality, trans: PatchQuality) -> ChangeClass {
    match trans.cmp(&orig) {
        std::cmp::Ordering::Greater => ChangeClass::Positive,
        std::cmp::Ordering::Less => ChangeClass::Negative,
        std::cmp::Ordering::Equal => ChangeClass::NoChange,
    }
}

/// The variants of one bug that survive `filter`.
fn kept_variants<'a>(
    bug: &'a BugEvaluation,
    filter: TransformFilter,
) -> Result<Vec<&'a VariantOutcome>, RobustnessError> {
    match filter {
        TransformFilter::AllTransforms => Ok(bug.variants.iter().collect()),
        TransformFilter::NaturalOnly => {
            let mut kept = Vec::new();
            for v in &bug.variants {
                match v.label {
                    None => {
                        return Err(RobustnessError::MissingLabels {
                            bug_id: bug.bug_id.clone(),
                            transformation_id: v.transformation_id.clone(),
                        })
                    }
                    Some(LabelCategory::Natural) => kept.push(v),
                    Some(_) => {}
                }
            }
            Ok(kept)
        }
    }
}

/// The sets of bug ids with at least one positive / at least one negative
/// prediction change among kept variants. A bug may be in both sets.
pub fn per_bug_change_sets(
    evals: &[BugEvaluation],
    filter: TransformFilter,
) -> Result<(BTreeSet<String>, BTreeSet<String>), RobustnessError> {
    let mut positive = BTreeSet::new();
    let mut negative = BTreeSet::new();
    for bug in evals {
        for v in kept_variants(bug, filter)? {
            match classify_change(bug.original_quality, v.quality) {
                ChangeClass::Positive => {
                    positive.insert(bug.bug_id.clone());
                }
                ChangeClass::Negative => {
                    negative.insert(bug.bug_id.clone());
                }
                ChangeClass::NoChange => {}
            }
        }
    }
    Ok((positive, negative))
}

/// Plausible and correct rates on the original and transformed datasets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateSummary {
    /// Fraction of all bugs whose original patch is at least plausible.
    pub plausible_rate_origin: f64,
    /// Fraction of all bugs whose original patch is correct.
    pub correct_rate_origin: f64,
    /// Mean per-bug fraction of kept variants with an at-least-plausible
    /// patch, over bugs with kept variants; absent when no bug has any.
    pub plausible_rate_transformed: Option<f64>,
    /// Same with the correct bar.
    pub correct_rate_transformed: Option<f64>,
    /// All bugs (the origin-rate denominator).
    pub total_bugs: usize,
    /// Bugs with at least one kept variant (the transformed denominator).
    pub transformed_denominator: usize,
    /// Bugs excluded from the transformed rates for having no kept variant.
    pub bugs_without_variants: usize,
}

/// Computes [`RateSummary`] over at least one bug.
pub fn rates(
    evals: &[BugEvaluation],
    filter: TransformFilter,
) -> Result<RateSummary, RobustnessError> {
    if evals.is_empty() {
        return Err(RobustnessError::NoBugs);
    }
    let total = evals.len();
    let origin_meeting = |bar: PatchQuality| {
        evals.iter().filter(|b| b.original_quality >= bar).count() as f64 / total as f64
    };

    let mut with_variants = 0usize;
    let mut plausible_sum = 0.0;
    let mut correct_sum = 0.0;
    for bug in evals {
        let kept = kept_variants(bug, filter)?;
        if kept.is_empty() {
            continue;
        }
        with_variants += 1;
        let m = kept.len() as f64;
        plausible_sum += kept
            .iter()
            .filter(|v| v.quality >= PatchQuality::Plausible)
            .count() as f64
            / m;
        correct_sum += kept
            .iter()
            .filter(|v| v.quality >= PatchQuality::Correct)
            .count() as f64
            / m;
    }
    let transformed = |sum: f64| (with_variants > 0).then(|| sum / with_variants as f64);
    Ok(RateSummary {
        plausible_rate_origin: origin_meeting(PatchQuality::Plausible),
        correct_rate_origin: origin_meeting(PatchQuality::Correct),
        plausible_rate_transformed: transformed(plausible_sum),
        correct_rate_transformed: transformed(correct_sum),
        total_bugs: total,
        transformed_denominator: with_variants,
        bugs_without_variants: total - with_variants,
    })
}

/// Relative performance change `(transformed − origin)/origin`.
pub fn performance_change(origin_rate: f64, transformed_rate: f64) -> Result<f64, RobustnessError> {
    if origin_rate <= 0.0 {
        return Err(RobustnessError::ZeroOrigin);
    }
    Ok((transformed_rate - origin_rate) / origin_rate)
}

/// One tool's robustness under one filter: prediction-change counts,
/// origin/transformed rates, and relative changes. Undefined quantities
/// (zero denominators) are `None`, never invented numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessReport {
    pub tool: String,
    pub filter: TransformFilter,
    pub bugs_positive: usize,
    pub bugs_negative: usize,
    /// `|positive set ∪ negative set|`.
    pub bugs_changed: usize,
    pub total_bugs: usize,
    pub transformed_denominator: usize,
    pub bugs_without_variants: usize,
    pub plausible_rate_origin: f64,
    pub plausible_rate_transformed: Option<f64>,
    pub correct_rate_origin: f64,
    pub correct_rate_transformed: Option<f64>,
    pub plausible_change: Option<f64>,
    pub correct_change: Option<f64>,
}

/// Builds the report for one tool's evaluations under one filter.
///
/// `evals` entries whose `tool` differs are ignored, so a mixed-tool file
/// can be passed directly.
pub fn report(
    tool: &str,
    evals: &[BugEvaluation],
    filter: TransformFilter,
) -> Result<RobustnessReport, RobustnessError> {
    let mine: Vec<BugEvaluation> = evals.iter().filter(|b| b.tool == tool).cloned().collect();
    let (positive, negative) = per_bug_change_sets(&mine, filter)?;
    let summary = rates(&mine, filter)?;
    let change = |origin: f64, transformed: Option<f64>| {
        transformed.and_then(|t| performance_change(origin, t).ok())
    };
    Ok(RobustnessReport {
        tool: tool.to_string(),
        filter,
        bugs_positive: positive.len(),
        bugs_negative: negative.len(),
        bugs_changed: positive.union(&negative).count(),
        total_bugs: summary.total_bugs,
        transformed_denominator: summary.transformed_denominator,
        bugs_without_variants: summary.bugs_without_variants,
        plausible_rate_origin: summary.plausible_rate_origin,
        plausible_rate_transformed: summary.plausible_rate_transformed,
        correct_rate_origin: summary.correct_rate_origin,
        correct_rate_transformed: summary.correct_rate_transformed,
        plausible_change: change(summary.plausible_rate_origin, summary.plausible_rate_transformed),
        correct_change: change(summary.correct_rate_origin, summary.correct_rate_transformed),
    })
}

/// Builds one report per tool (first-appearance order) under one filter.
pub fn reports(
    evals: &[BugEvaluation],
    filter: TransformFilter,
) -> Result<Vec<RobustnessReport>, RobustnessError> {
    let mut tools: Vec<&str> = Vec::new();
    for bug in evals {
        if !tools.contains(&bug.tool.as_str()) {
            tools.push(&bug.tool);
        }
    }
    tools
        .into_iter()
        .map(|tool| report(tool, evals, filter))
        .collect()
}

/// Percentage with one decimal, e.g. `29.9%`.
fn pct(x: f64) -> String {
    format!("{:.1}%", x * 100.0)
}

/// Signed percentage with one decimal, e.g. `-2.7%` or `+0.0%`.
fn signed_pct(x: f64) -> String {
    format!("{:+.1}%", x * 100.0)
}

fn opt_pct(x: Option<f64>) -> String {
    x.map(pct).unwrap_or_else(|| "n/a".to_string())
}

fn opt_signed_pct(x: Option<f64>) -> String {
    x.map(signed_pct).unwrap_or_else(|| "n/a".to_string())
}

/// Renders reports as an aligned text table: prediction-change counts, then
/// origin → transformed rates with their relative changes, percentages at
/// one decimal.
pub fn render_table(reports: &[RobustnessReport]) -> String {
    let mut rows: Vec<[String; 8]> = vec![[
        "Tool".into(),
        "Filter".into(),
        "Pos".into(),
        "Neg".into(),
        "All".into(),
        "Bugs".into(),
        "Plausible o->t (chg)".into(),
        "Correct o->t (chg)".into(),
    ]];
    for r in reports {
        let filter = match r.filter {
            TransformFilter::AllTransforms => "all",
            TransformFilter::NaturalOnly => "natural-only",
        };
        rows.push([
            r.tool.clone(),
            filter.into(),
            r.bugs_positive.to_string(),
            r.bugs_negative.to_string(),
            r.bugs_changed.to_string(),
            r.total_bugs.to_string(),
            format!(
                "{} -> {} ({})",
                pct(r.plausible_rate_origin),
                opt_pct(r.plausible_rate_transformed),
                opt_signed_pct(r.plausible_change)
            ),
            format!(
                "{} -> {} ({})",
                pct(r.correct_rate_origin),
                opt_pct(r.correct_rate_transformed),
                opt_signed_pct(r.correct_change)
            ),
        ]);
    }
    let mut widths = [0usize; 8];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Writes evaluations as JSONL, one object per line.
pub fn write_evals<W: Write>(mut w: W, evals: &[BugEvaluation]) -> io::Result<()> {
    for e in evals {
        let line = serde_json::to_string(e).map_err(io::Error::other)?;
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Reads evaluations from JSONL; blank lines are skipped, parse errors name
/// the 1-based line, and duplicate transformation ids within one bug are
/// rejected.
pub fn read_evals<R: BufRead>(r: R) -> io::Result<Vec<BugEvaluation>> {
    let mut out: Vec<BugEvaluation> = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bug: BugEvaluation = serde_json::from_str(&line).map_err(|e| {
            io::Error::new(io::ErrorKind::InvalidData, format!("line {}: {e}", i + 1))
        })?;
        for (j, v) in bug.variants.iter().enumerate() {
            if bug.variants[..j]
                .iter()
                .any(|w| w.transformation_id == v.transformation_id)
            {
                return Err(io::Error::new(
                    io::ErrorKind::InvalidData,
                    format!(
                        "line {}: duplicate transformation id {} in bug {}",
                        i + 1,
                        v.transformation_id,
                        bug.bug_id
                    ),
                ));
            }
        }
        out.push(bug);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use PatchQuality::{Correct, Plausible, Wrong};

    fn bug(id: &str, orig: PatchQuality, variants: &[(PatchQuality, Option<LabelCategory>)]) -> BugEvaluation {
        BugEvaluation {
            tool: "toolA".into(),
            bug_id: id.into(),
            original_quality: orig,
            variants: variants
                .iter()
                .enumerate()
                .map(|(i, (quality, label))| VariantOutcome {
                    transformation_id: format!("{id}-v{i}"),
                    quality: *quality,
                    label: *label,
                })
                .collect(),
        }
    }

    #[test]
    fn classify_change_follows_the_quality_order() {
        assert_eq!(classify_change(Wrong, Plausible), ChangeClass::Positive);
        assert_eq!(classify_change(Wrong, Correct), ChangeClass::Positive);
        assert_eq!(classify_change(Plausible, Correct), ChangeClass::Positive);
        assert_eq!(classify_change(Correct, Wrong), ChangeClass::Negative);
        assert_eq!(classify_change(Correct, Plausible), ChangeClass::Negative);
        assert_eq!(classify_change(Plausible, Wrong), ChangeClass::Negative);
        for q in [Wrong, Plausible, Correct] {
            assert_eq!(classify_change(q, q), ChangeClass::NoChange);
        }
        // Antisymmetry.
        for a in [Wrong, Plausible, Correct] {
            for b in [Wrong, Plausible, Correct] {
                let fwd = classify_change(a, b);
                let rev = classify_change(b, a);
                match fwd {
                    ChangeClass::Positive => assert_eq!(rev, ChangeClass::Negative),
                    ChangeClass::Negative => assert_eq!(rev, ChangeClass::Positive),
                    ChangeClass::NoChange => assert_eq!(rev, ChangeClass::NoChange),
                }
            }
        }
    }

    /// 15 positive-only bugs, 27 negative-only, 2 in both sets, 6 unchanged.
    fn overlap_fixture() -> Vec<BugEvaluation> {
        let mut evals = Vec::new();
        for i in 0..15 {
            evals.push(bug(&format!("p{i}"), Wrong, &[(Plausible, None)]));
        }
        for i in 0..27 {
            evals.push(bug(&format!("n{i}"), Plausible, &[(Wrong, None)]));
        }
        for i in 0..2 {
            evals.push(bug(
                &format!("b{i}"),
                Plausible,
                &[(Correct, None), (Wrong, None)],
            ));
        }
        for i in 0..6 {
            evals.push(bug(&format!("u{i}"), Correct, &[(Correct, None)]));
        }
        evals
    }

    #[test]
    fn change_sets_take_the_union_for_all() {
        let evals = overlap_fixture();
        let (p, n) = per_bug_change_sets(&evals, TransformFilter::AllTransforms).unwrap();
        assert_eq!(p.len(), 17);
        assert_eq!(n.len(), 29);
        assert_eq!(p.union(&n).count(), 44);
        assert_eq!(p.intersection(&n).count(), 2);
    }

    #[test]
    fn natural_only_keeps_only_natural_labels_and_demands_them() {
        use LabelCategory::{LikelyNatural, Natural};
        // The positive change sits on a LikelyNatural variant: filtered out.
        let evals = vec![bug(
            "b1",
            Wrong,
            &[(Plausible, Some(LikelyNatural)), (Wrong, Some(Natural))],
        )];
        let (p, n) = per_bug_change_sets(&evals, TransformFilter::NaturalOnly).unwrap();
        assert!(p.is_empty());
        assert!(n.is_empty());

        let unlabeled = vec![bug("b2", Wrong, &[(Plausible, None)])];
        assert_eq!(
            per_bug_change_sets(&unlabeled, TransformFilter::NaturalOnly),
            Err(RobustnessError::MissingLabels {
                bug_id: "b2".into(),
                transformation_id: "b2-v0".into(),
            })
        );
    }

    #[test]
    fn natural_only_never_increases_changed_bugs() {
        use LabelCategory::{Natural, Unnatural};
        let evals = vec![
            bug("b1", Wrong, &[(Plausible, Some(Unnatural)), (Wrong, Some(Natural))]),
            bug("b2", Plausible, &[(Wrong, Some(Natural))]),
            bug("b3", Correct, &[(Correct, Some(Natural))]),
        ];
        let (pa, na) = per_bug_change_sets(&evals, TransformFilter::AllTransforms).unwrap();
        let (pn, nn) = per_bug_change_sets(&evals, TransformFilter::NaturalOnly).unwrap();
        let all = pa.union(&na).count();
        let natural = pn.union(&nn).count();
        assert!(natural <= all);
        assert_eq!((all, natural), (2, 1));
    }

    #[test]
    fn rates_use_fractional_normalization() {
        // One bug, 5 variants, 3 correct → contributes 0.6 correct.
        let evals = vec![bug(
            "b1",
            Correct,
            &[
                (Correct, None),
                (Correct, None),
                (Correct, None),
                (Wrong, None),
                (Plausible, None),
            ],
        )];
        let s = rates(&evals, TransformFilter::AllTransforms).unwrap();
        assert_eq!(s.correct_rate_transformed, Some(0.6));
        assert_eq!(s.plausible_rate_transformed, Some(0.8));
        assert_eq!(s.correct_rate_origin, 1.0);

        // All variants correct everywhere → both rates 1.
        let evals = vec![
            bug("b1", Correct, &[(Correct, None)]),
            bug("b2", Correct, &[(Correct, None), (Correct, None)]),
        ];
        let s = rates(&evals, TransformFilter::AllTransforms).unwrap();
        assert_eq!(s.plausible_rate_transformed, Some(1.0));
        assert_eq!(s.correct_rate_transformed, Some(1.0));

        // A bug with no variants leaves the transformed denominator.
        let evals = vec![
            bug("b1", Plausible, &[(Wrong, None)]),
            bug("b2", Wrong, &[]),
        ];
        let s = rates(&evals, TransformFilter::AllTransforms).unwrap();
        assert_eq!(s.total_bugs, 2);
        assert_eq!(s.transformed_denominator, 1);
        assert_eq!(s.bugs_without_variants, 1);
        assert_eq!(s.plausible_rate_origin, 0.5);
        assert_eq!(s.plausible_rate_transformed, Some(0.0));

        assert_eq!(
            rates(&[], TransformFilter::AllTransforms),
            Err(RobustnessError::NoBugs)
        );
    }

    #[test]
    fn correct_rate_never_exceeds_plausible_rate() {
        let evals = overlap_fixture();
        let s = rates(&evals, TransformFilter::AllTransforms).unwrap();
        assert!(s.correct_rate_origin <= s.plausible_rate_origin);
        assert!(s.correct_rate_transformed.unwrap() <= s.plausible_rate_transformed.unwrap());
        for r in [
            s.plausible_rate_origin,
            s.correct_rate_origin,
            s.plausible_rate_transformed.unwrap(),
            s.correct_rate_transformed.unwrap(),
        ] {
            assert!((0.0..=1.0).contains(&r));
        }
    }

    #[test]
    fn performance_change_reproduces_published_relations() {
        // Known origin → transformed rate pairs and their one-decimal
        // relative changes.
        let cases = [
            ((0.299, 0.291), "-2.7%"),
            ((0.240, 0.230), "-4.2%"),
            ((0.196, 0.152), "-22.4%"),
        ];
        for ((origin, transformed), expected) in cases {
            let change = performance_change(origin, transformed).unwrap();
            assert_eq!(format!("{:.1}%", change * 100.0), expected);
        }
        assert_eq!(performance_change(0.5, 0.5).unwrap(), 0.0);
        assert_eq!(
            performance_change(0.0, 0.1),
            Err(RobustnessError::ZeroOrigin)
        );
    }

    #[test]
    fn report_counts_the_union_and_handles_empty_variants() {
        let evals = overlap_fixture();
        let r = report("toolA", &evals, TransformFilter::AllTransforms).unwrap();
        assert_eq!((r.bugs_positive, r.bugs_negative, r.bugs_changed), (17, 29, 44));
        assert!(r.bugs_changed <= r.bugs_positive + r.bugs_negative);
        assert_eq!(r.total_bugs, 50);

        // No variants anywhere: a zero-change report with absent
        // transformed-side numbers.
        let empty = vec![bug("b1", Plausible, &[]), bug("b2", Wrong, &[])];
        let r = report("toolA", &empty, TransformFilter::AllTransforms).unwrap();
        assert_eq!((r.bugs_positive, r.bugs_negative, r.bugs_changed), (0, 0, 0));
        assert_eq!(r.plausible_rate_transformed, None);
        assert_eq!(r.plausible_change, None);
        assert_eq!(r.bugs_without_variants, 2);
    }

    #[test]
    fn reports_group_by_tool_in_first_appearance_order() {
        let mut evals = overlap_fixture();
        let mut other = bug("x1", Wrong, &[(Correct, None)]);
        other.tool = "toolB".into();
        evals.push(other);
        let all = reports(&evals, TransformFilter::AllTransforms).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].tool, "toolA");
        assert_eq!(all[1].tool, "toolB");
        assert_eq!(all[1].bugs_positive, 1);
        assert_eq!(all[1].total_bugs, 1);
    }

    #[test]
    fn table_renders_one_decimal_percentages() {
        let evals = vec![
            // Origin: 299 of 1000 plausible; transformed plausible fraction
            // 291/1000 → relative change −2.7%.
            bug("b1", Plausible, &[(Plausible, None)]),
        ];
        let r = report("toolA", &evals, TransformFilter::AllTransforms).unwrap();
        let table = render_table(&[r]);
        assert!(table.contains("100.0% -> 100.0% (+0.0%)"), "{table}");
        assert!(table.lines().next().unwrap().contains("All"));

        let fixture = overlap_fixture();
        let r = report("toolA", &fixture, TransformFilter::AllTransforms).unwrap();
        let table = render_table(&[r]);
        assert!(table.contains("17"), "{table}");
        assert!(table.contains("44"), "{table}");
    }

    #[test]
    fn evals_round_trip_through_jsonl_and_duplicates_are_rejected() {
        use LabelCategory::Natural;
        let evals = vec![
            bug("b1", Wrong, &[(Plausible, Some(Natural)), (Wrong, None)]),
            bug("b2", Correct, &[]),
        ];
        let mut buf = Vec::new();
        write_evals(&mut buf, &evals).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.lines().next().unwrap().contains("\"original_quality\":\"Wrong\""));
        // Unlabeled variants serialize without a label key at all.
        assert!(text.lines().next().unwrap().contains("\"label\":\"Natural\""));
        assert_eq!(read_evals(buf.as_slice()).unwrap(), evals);

        let dup = r#"{"tool":"t","bug_id":"b","original_quality":"Wrong","variants":[
            {"transformation_id":"v","quality":"Wrong"},{"transformation_id":"v","quality":"Correct"}]}"#
            .replace('\n', " ");
        let err = read_evals(dup.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("duplicate transformation id"));
    }
}
