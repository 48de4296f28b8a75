//! N-gram language model with modified Kneser-Ney smoothing.
//!
//! The model trains on method-level code-token sequences (comments and
//! whitespace excluded; every identifier, keyword, literal, operator, and
//! separator is one token) and answers two questions: the probability of a
//! token in context ([`NgramModel::prob`]) and the cross-entropy of a whole
//! sequence in bits per token ([`NgramModel::cross_entropy`]).
//!
//! Smoothing conventions:
//!
//! * Each sequence is padded with n−1 `<s>` and one `</s>`; windows are
//!   aligned so nothing ever predicts `<s>`.
//! * The highest order keeps raw counts; lower orders use continuation
//!   (distinct-predecessor) counts, except grams starting with `<s>`, which
//!   keep raw counts — they can never be continued leftward.
//! * Three count-band discounts per order (D1 for count 1, D2 for count 2,
//!   D3+ above), estimated from that order's count-of-counts via the
//!   Y = n1/(n1+2·n2) family, with fixed fallbacks (0.5, 1.0, 1.5) when a
//!   denominator is empty or an estimate goes nonpositive.
//! * A context with zero total count backs off fully to the next lower
//!   order; the unigram level interpolates with the uniform distribution
//!   over the predictable vocabulary, so no probability is ever zero.
//! * Queried tokens outside the vocabulary (or below `min_count` training
//!   frequency) map to `<unk>`; contexts are truncated or `<s>`-padded to
//!   n−1 tokens.
//!
//! Training is deterministic: the same corpus always serializes to the same
//! bytes ([`NgramModel::save`], little-endian `NKNLM1` format). A trained
//! model is immutable and can be shared across scoring threads.

use std::collections::HashMap;
use std::io::{self, Read, Write};
use std::path::Path;

/// Beginning-of-sequence padding symbol.
pub const BOS: &str = "<s>";
/// End-of-sequence symbol; predicted after the last token.
pub const EOS: &str = "</s>";
/// Stand-in for tokens outside the trained vocabulary.
pub const UNK: &str = "<unk>";

const BOS_ID: u32 = 0;
const EOS_ID: u32 = 1;
const UNK_ID: u32 = 2;

const MAGIC: &[u8; 6] = b"NKNLM1";

/// Token inventory with dense ids. Ids 0/1/2 are reserved for `<s>`,
/// `</s>`, `<unk>`; training tokens follow in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    tokens: Vec<String>,
    index: HashMap<String, u32>,
}

impl Vocabulary {
    fn from_tokens(tokens: Vec<String>) -> Vocabulary {
        let index = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        Vocabulary { tokens, index }
    }

    /// Id of a token, if in the vocabulary.
    pub fn id(&self, token: &str) -> Option<u32> {
        self.index.get(token).copied()
    }

    /// Token text for an id.
    pub fn token(&self, id: u32) -> &str {
        &self.tokens[id as usize]
    }

    /// Total entries, reserved symbols included.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Tokens the model can predict: everything except `<s>`.
    pub fn predictable(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().skip(1).map(String::as_str)
    }
}

/// Cross-entropy of a token sequence under a model.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CrossEntropy {
    /// Mean negative log2 probability — bits per token.
    pub value: f64,
    /// Prediction events scored: the sequence's tokens plus `</s>`.
    pub token_count: usize,
}

/// Training failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrainError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("corpus sequence {index} is empty")]
    EmptySequence { index: usize },
    #[error("model order must be at least 1")]
    ZeroOrder,
}

/// Cross-entropy over an empty sequence has no defined value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("cross-entropy of an empty token sequence")]
pub struct EmptyInput;

/// Failure to load a serialized model.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("i/o error reading model: {0}")]
    Io(#[from] io::Error),
    #[error("not a valid model file: {0}")]
    Format(String),
}

/// Per-context totals over the adjusted counts: the denominator and the
/// count-band sizes the discount mass is built from.
#[derive(Debug, Clone, Copy, Default)]
struct ContextStats {
    total: u64,
    band1: u64,
    band2: u64,
    band3: u64,
}

/// N-gram model with modified Kneser-Ney smoothing. See the module docs for
/// the exact conventions.
#[derive(Debug, Clone)]
pub struct NgramModel {
    n: usize,
    min_count: u64,
    vocab: Vocabulary,
    /// Raw corpus frequency per token id (order-1 window counts).
    freq: Vec<u64>,
    /// counts[k-1]: adjusted count tables keyed by id sequences of length k.
    counts: Vec<HashMap<Vec<u32>, u64>>,
    /// ctx_stats[k-1]: per-context aggregates over counts[k-1], keyed by the
    /// context (length k-1).
    ctx_stats: Vec<HashMap<Vec<u32>, ContextStats>>,
    /// discounts[k-1] = [D1, D2, D3+] for order k.
    discounts: Vec<[f64; 3]>,
}

impl NgramModel {
    /// Trains an order-`n` model keeping every token (`min_count` = 1).
    pub fn train(corpus: &[Vec<String>], n: usize) -> Result<NgramModel, TrainError> {
        NgramModel::train_with_min_count(corpus, n, 1)
    }

    /// Trains an order-`n` model. Tokens whose corpus frequency is below
    /// `min_count` stay in the count tables but map to `<unk>` at query time.
    pub fn train_with_min_count(
        corpus: &[Vec<String>],
        n: usize,
        min_count: u64,
    ) -> Result<NgramModel, TrainError> {
        if n == 0 {
            return Err(TrainError::ZeroOrder);
        }
        if corpus.is_empty() {
            return Err(TrainError::EmptyCorpus);
        }
        if let Some(index) = corpus.iter().position(|seq| seq.is_empty()) {
            return Err(TrainError::EmptySequence { index });
        }

        let mut tokens: Vec<String> = corpus.iter().flatten().cloned().collect();
        tokens.sort();
        tokens.dedup();
        let mut all = Vec::with_capacity(tokens.len() + 3);
        all.push(BOS.to_string());
        all.push(EOS.to_string());
        all.push(UNK.to_string());
        // Reserved symbols appearing as corpus tokens would collide with the
        // padding convention; keep their ids reserved.
        all.extend(tokens.into_iter().filter(|t| t != BOS && t != EOS && t != UNK));
        let vocab = Vocabulary::from_tokens(all);

        // Raw window counts per order over padded sequences. Order-k windows
        // start at n-k ..= L-k so the last element is never <s>.
        let mut raw: Vec<HashMap<Vec<u32>, u64>> = vec![HashMap::new(); n];
        for seq in corpus {
            let mut padded: Vec<u32> = vec![BOS_ID; n - 1];
            padded.extend(seq.iter().map(|t| vocab.id(t).expect("token in vocab")));
            padded.push(EOS_ID);
            let len = padded.len();
            for k in 1..=n {
                for start in (n - k)..=(len - k) {
                    *raw[k - 1].entry(padded[start..start + k].to_vec()).or_insert(0) += 1;
                }
            }
        }

        let mut freq = vec![0u64; vocab.len()];
        for (gram, c) in &raw[0] {
            freq[gram[0] as usize] = *c;
        }

        // Adjusted counts: raw at the highest order and for <s>-prefixed
        // grams, continuation (distinct-predecessor) counts elsewhere.
        let mut counts: Vec<HashMap<Vec<u32>, u64>> = Vec::with_capacity(n);
        for k in 1..=n {
            if k == n {
                counts.push(raw[k - 1].clone());
                continue;
            }
            let mut table: HashMap<Vec<u32>, u64> = HashMap::new();
            for gram in raw[k - 1].keys() {
                if gram[0] == BOS_ID {
                    table.insert(gram.clone(), raw[k - 1][gram]);
                }
            }
            // Each distinct (k+1)-gram contributes one predecessor type to
            // its suffix.
            for longer in raw[k].keys() {
                if longer[1] != BOS_ID {
                    *table.entry(longer[1..].to_vec()).or_insert(0) += 1;
                }
            }
            counts.push(table);
        }

        let discounts = counts.iter().map(|table| estimate_discounts(table)).collect();
        let ctx_stats = counts.iter().map(|table| build_ctx_stats(table)).collect();

        Ok(NgramModel { n, min_count, vocab, freq, counts, ctx_stats, discounts })
    }

    /// Model order.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The trained vocabulary.
    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    /// Query-time token mapping: `</s>` stays itself, `<s>` is never a
    /// prediction target, and anything untrained or below `min_count` maps
    /// to `<unk>`.
    fn map_token(&self, token: &str) -> u32 {
        if token == EOS {
            return EOS_ID;
        }
        if token == BOS {
            return UNK_ID;
        }
        match self.vocab.id(token) {
            Some(id) if self.freq[id as usize] >= self.min_count => id,
            _ => UNK_ID,
        }
    }

    /// p(token | context). The context is truncated to its last n−1 tokens
    /// or left-padded with `<s>`; unknown tokens on either side map to
    /// `<unk>`. Never zero.
    pub fn prob(&self, token: &str, context: &[&str]) -> f64 {
        let keep = context.len().min(self.n - 1);
        let mut ctx: Vec<u32> = vec![BOS_ID; self.n - 1 - keep];
        for t in &context[context.len() - keep..] {
            ctx.push(if *t == BOS { BOS_ID } else { self.map_token(t) });
        }
        self.prob_order(self.n, self.map_token(token), &ctx)
    }

    fn prob_order(&self, k: usize, token: u32, ctx: &[u32]) -> f64 {
        let [d1, d2, d3] = self.discounts[k - 1];
        let stats = self.ctx_stats[k - 1].get(ctx).copied().unwrap_or_default();
        if k > 1 && stats.total == 0 {
            return self.prob_order(k - 1, token, &ctx[1..]);
        }
        let mut gram = ctx.to_vec();
        gram.push(token);
        let c = self.counts[k - 1].get(&gram).copied().unwrap_or(0);
        let d = match c {
            0 => 0.0,
            1 => d1,
            2 => d2,
            _ => d3,
        };
        let total = stats.total as f64;
        let gamma = (d1 * stats.band1 as f64
            + d2 * stats.band2 as f64
            + d3 * stats.band3 as f64)
            / total;
        let lower = if k == 1 {
            // Uniform over the predictable vocabulary (everything but <s>).
            1.0 / (self.vocab.len() - 1) as f64
        } else {
            self.prob_order(k - 1, token, &ctx[1..])
        };
        (c as f64 - d) / total + gamma * lower
    }

    /// Cross-entropy of a sequence in bits/token: the mean −log2 p over the
    /// sequence's tokens plus the final `</s>`, each conditioned on the
    /// preceding tokens.
    pub fn cross_entropy<S: AsRef<str>>(&self, tokens: &[S]) -> Result<CrossEntropy, EmptyInput> {
        if tokens.is_empty() {
            return Err(EmptyInput);
        }
        let mut sum = 0.0;
        let mut history: Vec<&str> = Vec::with_capacity(tokens.len());
        for t in tokens.iter().map(AsRef::as_ref).chain(std::iter::once(EOS)) {
            sum -= self.prob(t, &history).log2();
            history.push(t);
        }
        let token_count = tokens.len() + 1;
        Ok(CrossEntropy { value: sum / token_count as f64, token_count })
    }

    /// Serializes the model. The format is little-endian throughout and
    /// starts with the magic `NKNLM1`; entries are written in sorted order,
    /// so equal models produce identical bytes.
    pub fn save<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&(self.n as u32).to_le_bytes())?;
        w.write_all(&self.min_count.to_le_bytes())?;
        w.write_all(&(self.vocab.len() as u32).to_le_bytes())?;
        for token in &self.vocab.tokens {
            w.write_all(&(token.len() as u32).to_le_bytes())?;
            w.write_all(token.as_bytes())?;
        }
        for f in &self.freq {
            w.write_all(&f.to_le_bytes())?;
        }
        for d in &self.discounts {
            for v in d {
                w.write_all(&v.to_le_bytes())?;
            }
        }
        for table in &self.counts {
            let mut entries: Vec<(&Vec<u32>, &u64)> = table.iter().collect();
            entries.sort_by(|a, b| a.0.cmp(b.0));
            w.write_all(&(entries.len() as u64).to_le_bytes())?;
            for (gram, count) in entries {
                for id in gram {
                    w.write_all(&id.to_le_bytes())?;
                }
                w.write_all(&count.to_le_bytes())?;
            }
        }
        Ok(())
    }

    /// Saves to a file path.
    pub fn save_to_path(&self, path: impl AsRef<Path>) -> io::Result<()> {
        let file = std::fs::File::create(path)?;
        let mut buf = io::BufWriter::new(file);
        self.save(&mut buf)?;
        buf.flush()
    }

    /// Loads a model serialized by [`save`](NgramModel::save).
    pub fn load<R: Read>(mut r: R) -> Result<NgramModel, LoadError> {
        let mut magic = [0u8; 6];
        read_exact(&mut r, &mut magic)?;
        if &magic != MAGIC {
            return Err(LoadError::Format(format!(
                "bad magic {:?}; expected {:?}",
                String::from_utf8_lossy(&magic),
                String::from_utf8_lossy(MAGIC)
            )));
        }
        let n = read_u32(&mut r)? as usize;
        if n == 0 {
            return Err(LoadError::Format("model order is zero".into()));
        }
        let min_count = read_u64(&mut r)?;
        let vocab_len = read_u32(&mut r)? as usize;
        if vocab_len < 3 {
            return Err(LoadError::Format("vocabulary smaller than the reserved set".into()));
        }
        let mut tokens = Vec::with_capacity(vocab_len);
        for _ in 0..vocab_len {
            let len = read_u32(&mut r)? as usize;
            let mut buf = vec![0u8; len];
            read_exact(&mut r, &mut buf)?;
            let token = String::from_utf8(buf)
                .map_err(|_| LoadError::Format("vocabulary token is not UTF-8".into()))?;
            tokens.push(token);
        }
        if tokens[0] != BOS || tokens[1] != EOS || tokens[2] != UNK {
            return Err(LoadError::Format("reserved symbols missing or out of place".into()));
        }
        let mut freq = Vec::with_capacity(vocab_len);
        for _ in 0..vocab_len {
            freq.push(read_u64(&mut r)?);
        }
        let mut discounts = Vec::with_capacity(n);
        for _ in 0..n {
            let mut d = [0.0f64; 3];
            for v in &mut d {
                *v = read_f64(&mut r)?;
            }
            discounts.push(d);
        }
        let mut counts = Vec::with_capacity(n);
        for k in 1..=n {
            let entries = read_u64(&mut r)? as usize;
            let mut table = HashMap::with_capacity(entries);
            for _ in 0..entries {
                let mut gram = Vec::with_capacity(k);
                for _ in 0..k {
                    let id = read_u32(&mut r)?;
                    if id as usize >= vocab_len {
                        return Err(LoadError::Format("token id out of range".into()));
                    }
                    gram.push(id);
                }
                let count = read_u64(&mut r)?;
                table.insert(gram, count);
            }
            counts.push(table);
        }
        let ctx_stats = counts.iter().map(|table| build_ctx_stats(table)).collect();
        Ok(NgramModel {
            n,
            min_count,
            vocab: Vocabulary::from_tokens(tokens),
            freq,
            counts,
            ctx_stats,
            discounts,
        })
    }

    /// Loads from a file path.
    pub fn load_from_path(path: impl AsRef<Path>) -> Result<NgramModel, LoadError> {
        let file = std::fs::File::open(path)?;
        NgramModel::load(io::BufReader::new(file))
    }
}

/// D1/D2/D3+ from an order's count-of-counts, with the standard fallbacks
/// (0.5, 1.0, 1.5) when a band is empty or its estimate leaves the valid
/// range.
///
/// A discount of exactly zero would leave its band no backoff mass, making
/// unseen continuations of a context impossible — the estimates must stay
/// strictly positive for `prob` to honor its never-zero contract. The
/// closed-form estimates can go nonpositive on skewed count-of-count
/// distributions (e.g. a corpus of repeated identical sequences), so those
/// fall back rather than clamp.
fn estimate_discounts(table: &HashMap<Vec<u32>, u64>) -> [f64; 3] {
    let (mut n1, mut n2, mut n3, mut n4) = (0u64, 0u64, 0u64, 0u64);
    for c in table.values() {
        match c {
            1 => n1 += 1,
            2 => n2 += 1,
            3 => n3 += 1,
            4 => n4 += 1,
            _ => {}
        }
    }
    let y = if n1 + 2 * n2 == 0 { 0.5 } else { n1 as f64 / (n1 + 2 * n2) as f64 };
    let d1 = if n1 == 0 { 0.5 } else { 1.0 - 2.0 * y * n2 as f64 / n1 as f64 };
    let d2 = if n2 == 0 { 1.0 } else { 2.0 - 3.0 * y * n3 as f64 / n2 as f64 };
    let d3 = if n3 == 0 { 1.5 } else { 3.0 - 4.0 * y * n4 as f64 / n3 as f64 };
    [
        if d1 > 0.0 { d1 } else { 0.5 },
        if d2 > 0.0 { d2 } else { 1.0 },
        if d3 > 0.0 { d3 } else { 1.5 },
    ]
}

fn build_ctx_stats(table: &HashMap<Vec<u32>, u64>) -> HashMap<Vec<u32>, ContextStats> {
    let mut stats: HashMap<Vec<u32>, ContextStats> = HashMap::new();
    for (gram, &c) in table {
        let entry = stats.entry(gram[..gram.len() - 1].to_vec()).or_default();
        entry.total += c;
        match c {
            0 => {}
            1 => entry.band1 += 1,
            2 => entry.band2 += 1,
            _ => entry.band3 += 1,
        }
    }
    stats
}

fn read_exact<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<(), LoadError> {
    r.read_exact(buf).map_err(|e| {
        if e.kind() == io::ErrorKind::UnexpectedEof {
            LoadError::Format("file truncated".into())
        } else {
            LoadError::Io(e)
        }
    })
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32, LoadError> {
    let mut buf = [0u8; 4];
    read_exact(r, &mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64, LoadError> {
    let mut buf = [0u8; 8];
    read_exact(r, &mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64, LoadError> {
    let mut buf = [0u8; 8];
    read_exact(r, &mut buf)?;
    Ok(f64::from_le_bytes(buf))
}
