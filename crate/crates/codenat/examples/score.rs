//! Scores transformation naturalness: trains the n-gram model on the
//! bundled corpus, transforms a buggy method, and ranks every valid rewrite
//! by its relative naturalness change (RNC).
//!
//! ```text
//! cargo run --example score
//! ```

use std::fs;
use std::path::Path;

use codenat::naturalness::{normalize, score, LmBackend, Normalization, ScoreField};
use codenat::ngram::NgramModel;
use codenat::source::{corpus_sentences, BuggyRegion, SourceMethod};
use codenat::transform::{apply_all, DictionaryProvider, TransformOptions, TransformationStatus};

const BUGGY_METHOD: &str = "\
int sumWindow(int[] data, int size) {
    int total;
    total = 0;
    for (int index = 0; index < size; index++) {
        total = total + data[index];
    }
    return total;
}
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 1. Train the reference model on the method corpus.
    let corpus_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus");
    let mut sentences = Vec::new();
    let mut paths: Vec<_> = fs::read_dir(&corpus_dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    paths.sort();
    for path in &paths {
        sentences.extend(corpus_sentences(&fs::read_to_string(path)?)?);
    }
    let mut backend = LmBackend::Ngram(NgramModel::train(&sentences, 4)?);

    // 2. Generate the transformation candidates.
    let method = SourceMethod::parse("demo-002", BUGGY_METHOD, BuggyRegion::new(2, 7))?;
    let records = apply_all(&method, Some(&DictionaryProvider::builtin()), &TransformOptions::default());

    // 3. Score every valid rewrite: cross-entropy of the original and
    //    transformed method under the same model, then RNC = relative change.
    let mut scores = Vec::new();
    for rec in records.iter().filter(|r| r.status == TransformationStatus::Valid) {
        scores.push(score(&mut backend, rec)?);
    }

    // 4. Min-max normalize RNC into p_unnatural over this evaluation set.
    match normalize(&mut scores, ScoreField::Rnc)? {
        Normalization::Applied { min, max } => {
            println!("normalized rnc over [{min:.4}, {max:.4}]\n");
        }
        Normalization::DegenerateRange { value } => {
            println!("all rnc values equal {value}; p pinned to 0.5\n");
        }
    }

    scores.sort_by(|a, b| b.rnc.partial_cmp(&a.rnc).unwrap());
    println!(
        "{:<34} {:>8} {:>8} {:>8} {:>8} {:>6}",
        "id", "ce_orig", "ce_trans", "rnc", "anc", "p"
    );
    for s in &scores {
        println!(
            "{:<34} {:>8.3} {:>8.3} {:>8.4} {:>8.4} {:>6.2}",
            s.transformation_id,
            s.ce_original,
            s.ce_transformed,
            s.rnc,
            s.anc,
            s.p_unnatural.unwrap()
        );
    }
    println!("\nhigh rnc = the rewrite made the code read less like the corpus;");
    println!("negative rnc = the rewrite is more idiomatic than the original.");
    Ok(())
}
