//! Trains the 4-gram language model on the bundled method corpus and pokes
//! at what it learned: vocabulary size, next-token predictions, and the
//! cross-entropy gap between code it has seen and scrambled code.
//!
//! ```text
//! cargo run --example train_lm
//! ```

use std::fs;
use std::path::Path;

use codenat::ngram::NgramModel;
use codenat::source::corpus_sentences;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus");

    // Each corpus file holds concatenated Java methods; each method becomes
    // one training sentence of code tokens.
    let mut sentences = Vec::new();
    let mut paths: Vec<_> = fs::read_dir(&corpus_dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    paths.sort();
    for path in &paths {
        sentences.extend(corpus_sentences(&fs::read_to_string(path)?)?);
    }
    println!(
        "corpus: {} methods from {} files",
        sentences.len(),
        paths.len()
    );

    let model = NgramModel::train(&sentences, 4)?;
    println!(
        "model:  order {}, vocabulary of {} token types",
        model.order(),
        model.vocab().len()
    );

    // What does the model expect after a common statement opening?
    let context = ["for", "(", "int"];
    let mut next: Vec<(&str, f64)> = model
        .vocab()
        .predictable()
        .map(|tok| (tok, model.prob(tok, &context)))
        .collect();
    next.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    println!("\nmost likely tokens after `{}`:", context.join(" "));
    for (tok, p) in next.iter().take(5) {
        println!("  {tok:<10} {p:.4}");
    }

    // Cross-entropy separates seen code from the same tokens shuffled.
    let sentence = &sentences[0];
    let ce = model.cross_entropy(sentence)?;
    let mut scrambled = sentence.clone();
    scrambled.reverse();
    let ce_scrambled = model.cross_entropy(&scrambled)?;
    println!(
        "\ncross-entropy of a training method:  {:.3} bits/token over {} tokens",
        ce.value, ce.token_count
    );
    println!(
        "same tokens reversed:                {:.3} bits/token",
        ce_scrambled.value
    );

    // Models persist to a compact binary format and load back identically.
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("model.bin");
    model.save_to_path(&path)?;
    let reloaded = NgramModel::load_from_path(&path)?;
    let p = model.prob("i", &["for", "(", "int"]);
    assert_eq!(p, reloaded.prob("i", &["for", "(", "int"]));
    println!(
        "\nsaved {} bytes to disk; reloaded model agrees (p = {p:.6})",
        fs::metadata(&path)?.len()
    );
    Ok(())
}
