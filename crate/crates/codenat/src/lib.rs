//! Code-naturalness toolkit for buggy Java methods.
//!
//! The crate does three things, each usable on its own:
//!
//! 1. **Transform** — apply semantic-preserving rewrites (18 operators over
//!    naming, expression, and statement levels) to a parsed Java method,
//!    scoped to edits that touch a designated buggy region
//!    ([`source`], [`transform`]).
//! 2. **Score** — train a 4-gram modified Kneser-Ney language model over a
//!    code corpus and score each transformation's naturalness by
//!    cross-entropy, relative naturalness change, and a normalized
//!    unnaturalness probability ([`ngram`], [`naturalness`]).
//! 3. **Evaluate** — turn human Likert annotations into naturalness labels
//!    with agreement statistics, and compute robustness reports (prediction
//!    changes, plausible/correct rate changes) for program-repair tools from
//!    per-bug patch-quality records ([`annotate`], [`robustness`]).
//!
//! The `codenat` binary wires the same library operations into a
//! file-to-file pipeline (`train-lm`, `transform`, `score`,
//! `evaluate-metric`, `robustness`, `annotations`); see [`cli`].
//! Runnable examples live in `examples/`, one per capability.

pub mod annotate;
pub mod cli;
pub mod config;
pub mod naturalness;
pub mod ngram;
pub mod robustness;
pub mod source;
pub mod transform;
