//! Measures repair-tool robustness from per-bug patch-quality records: how
//! often semantic-preserving transformations flip a tool's outcome, and how
//! its plausible/correct rates move — over all transformations and again
//! restricted to the ones humans labeled natural.
//!
//! ```text
//! cargo run --example robustness
//! ```

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use codenat::robustness::{performance_change, read_evals, render_table, reports, TransformFilter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/evals.jsonl");
    let evals = read_evals(BufReader::new(File::open(path)?))?;
    println!(
        "{} bug evaluations across {} tools\n",
        evals.len(),
        evals.iter().map(|e| e.tool.as_str()).collect::<std::collections::HashSet<_>>().len()
    );

    // One report per tool, first over every transformation, then keeping
    // only the variants labeled Natural. A tool that is robust to natural
    // rewrites should lose little in the second table.
    let mut all = reports(&evals, TransformFilter::AllTransforms)?;
    all.extend(reports(&evals, TransformFilter::NaturalOnly)?);
    println!("{}", render_table(&all));

    // The headline number: the relative drop in the plausible rate.
    for rep in &all {
        if let Some(change) = rep.plausible_change {
            println!(
                "{} ({:?}): plausible rate moved {:+.1}% relative to the original programs",
                rep.tool,
                rep.filter,
                change * 100.0
            );
        }
    }

    // The same arithmetic on standalone rates, e.g. from a published table.
    let change = performance_change(0.299, 0.291)?;
    println!(
        "\na tool going from 29.9% to 29.1% plausible changed by {:.1}%",
        change * 100.0
    );
    Ok(())
}
