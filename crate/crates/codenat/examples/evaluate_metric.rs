//! Evaluates how well a naturalness metric separates human-labeled natural
//! from unnatural transformations: AUC for two candidate metrics, a
//! Mann-Whitney-Wilcoxon test between the label groups, and the rank
//! correlation between the metrics.
//!
//! ```text
//! cargo run --example evaluate_metric
//! ```

use rand::prelude::*;
use rand::rngs::StdRng;

use codenat::naturalness::{auc, mww_test, spearman, BinaryLabel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Synthetic evaluation set standing in for a scored, labeled batch:
    // unnatural transformations tend to have higher RNC, while the raw
    // cross-entropy of the transformed method barely separates the classes.
    let mut rng = StdRng::seed_from_u64(7);
    let mut items: Vec<(f64, f64, BinaryLabel)> = Vec::new();
    for i in 0..60 {
        let unnatural = i % 2 == 0;
        let rnc_base = if unnatural { 0.25 } else { 0.05 };
        let rnc = rng.gen_range(-0.10..0.20) + rnc_base;
        let ce_transformed = rng.gen_range(5.0..9.0) + if unnatural { 0.3 } else { 0.0 };
        let label = if unnatural { BinaryLabel::Unnatural } else { BinaryLabel::Natural };
        items.push((rnc, ce_transformed, label));
    }

    let rnc_scored: Vec<(f64, BinaryLabel)> = items.iter().map(|&(r, _, l)| (r, l)).collect();
    let ce_scored: Vec<(f64, BinaryLabel)> = items.iter().map(|&(_, c, l)| (c, l)).collect();

    println!("{:<16} {:>7} {:>10} {:>8}", "metric", "auc", "unnatural", "natural");
    for (name, scored) in [("rnc", &rnc_scored), ("ce_transformed", &ce_scored)] {
        let eval = auc(name, scored)?;
        println!(
            "{:<16} {:>7.4} {:>10} {:>8}",
            eval.metric, eval.auc, eval.n_positive, eval.n_negative
        );
    }

    // Does RNC differ between the two label groups?
    let unnatural: Vec<f64> = items
        .iter()
        .filter(|(_, _, l)| *l == BinaryLabel::Unnatural)
        .map(|&(r, _, _)| r)
        .collect();
    let natural: Vec<f64> = items
        .iter()
        .filter(|(_, _, l)| *l == BinaryLabel::Natural)
        .map(|&(r, _, _)| r)
        .collect();
    let test = mww_test(&unnatural, &natural)?;
    println!(
        "\nMWW over rnc: U = {:.1}, p = {:.2e}, rank-biserial effect = {:+.3}",
        test.u, test.p_value, test.effect_size
    );

    // How redundant are the two metrics?
    let rnc_vals: Vec<f64> = items.iter().map(|&(r, _, _)| r).collect();
    let ce_vals: Vec<f64> = items.iter().map(|&(_, c, _)| c).collect();
    println!(
        "Spearman rho between rnc and ce_transformed: {:.3}",
        spearman(&rnc_vals, &ce_vals)?
    );
    Ok(())
}
