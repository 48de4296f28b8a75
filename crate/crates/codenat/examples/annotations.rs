//! Processes a survey of human naturalness judgments: reads the raw Likert
//! responses, trims completion-time outliers, aggregates five verdicts per
//! transformation into a four-way label, and reports inter-rater agreement.
//!
//! ```text
//! cargo run --example annotations
//! ```

use std::collections::BTreeMap;
use std::fs::File;
use std::path::Path;

use codenat::annotate::{
    cohen_kappa, fleiss_kappa, label_all, read_responses_csv, rater_verdict, trim_outlier_times,
    verdict_matrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/responses.csv");
    let responses = read_responses_csv(File::open(path)?)?;
    println!("{} responses", responses.len());

    // Raters who raced through or walked away mid-item distort the set;
    // drop everything above the 99th-percentile completion time.
    let trimmed = trim_outlier_times(responses);
    println!(
        "dropped {} outlier(s) above {:.1}s\n",
        trimmed.dropped, trimmed.cutoff_seconds
    );

    // Five verdicts per transformation aggregate into one label; items left
    // with fewer than five verdicts are rejected, not silently labeled.
    let run = label_all(&trimmed.kept);
    for (id, err) in &run.rejected {
        println!("rejected {id}: {err}");
    }
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    for label in &run.labels {
        *histogram.entry(format!("{:?}", label.label)).or_default() += 1;
    }
    println!("\n{} transformations labeled:", run.labels.len());
    for (category, count) in &histogram {
        println!("  {category:<16} {count}");
    }

    // Agreement beyond chance across all five raters.
    let matrix = verdict_matrix(&run.labels);
    println!("\nFleiss kappa over all raters: {:.4}", fleiss_kappa(&matrix)?);

    // And pairwise between the first two raters, over items both judged.
    let verdicts: Vec<_> = trimmed
        .kept
        .iter()
        .filter_map(|r| rater_verdict(r).ok())
        .collect();
    let by_rater = |rater: &str| -> BTreeMap<&str, _> {
        verdicts
            .iter()
            .filter(|v| v.rater_id == rater)
            .map(|v| (v.transformation_id.as_str(), v.verdict))
            .collect()
    };
    let (r1, r2) = (by_rater("r01"), by_rater("r02"));
    let common: Vec<&str> = r1.keys().filter(|k| r2.contains_key(*k)).copied().collect();
    let a: Vec<_> = common.iter().map(|k| r1[k]).collect();
    let b: Vec<_> = common.iter().map(|k| r2[k]).collect();
    println!(
        "Cohen kappa between r01 and r02 ({} shared items): {:.4}",
        common.len(),
        cohen_kappa(&a, &b)?
    );
    Ok(())
}
