//! Applies the whole operator catalogue to one buggy method and prints what
//! each attempt produced — the valid rewrites and the discarded ones alike.
//!
//! ```text
//! cargo run --example transform
//! ```

use codenat::source::{BuggyRegion, SourceMethod};
use codenat::transform::{
    apply_all, applicable_sites, apply, DictionaryProvider, OperatorId, TransformOptions,
    TransformationStatus,
};

const BUGGY_METHOD: &str = "\
int clampTotal(int[] list, int limit) {
    int count;
    count = 0;
    for (int index = 0; index < list.length; index++) {
        count += list[index];
    }
    if (count > limit) {
        return limit;
    } else {
        return count;
    }
}
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The buggy region (here: the whole body) is where a fault was
    // localized; only edits that touch it are considered.
    let method = SourceMethod::parse("demo-001", BUGGY_METHOD, BuggyRegion::new(2, 11))?;
    let dictionary = DictionaryProvider::builtin();
    let opts = TransformOptions::default();

    let records = apply_all(&method, Some(&dictionary), &opts);
    let valid = records
        .iter()
        .filter(|r| r.status == TransformationStatus::Valid)
        .count();
    println!(
        "{} attempts, {} valid ({} operators in the catalogue)\n",
        records.len(),
        valid,
        OperatorId::ALL.len()
    );
    println!("{:<34} {:<22} lines", "id", "status");
    for rec in &records {
        println!(
            "{:<34} {:<22} {}..{}",
            rec.id,
            rec.status.to_string(),
            rec.site.start_line,
            rec.site.end_line
        );
    }

    // A closer look at one semantic-preserving rewrite.
    let site = &applicable_sites(OperatorId::ReverseIf, &method, None)[0];
    let rec = apply(OperatorId::ReverseIf, &method, site, None, &opts);
    println!("\n--- {} ---", rec.id);
    println!("before:\n{}", rec.original);
    println!("after:\n{}", rec.transformed);
    Ok(())
}
