//! Independent reference oracles for the acceptance tests.
//!
//! Everything here is written straight from the defining math, using naive
//! linear scans and O(n^2) pair enumeration, and shares no code with the
//! crate. The crate's fast implementations must match these values; the
//! oracles themselves are anchored against hand-computed numbers in
//! `oracle_anchors.rs` and must not change to make an implementation pass.

#![allow(dead_code)]

pub mod kn {
    //! Brute-force modified Kneser-Ney n-gram oracle.
    //!
    //! Conventions (fixed before the model was written):
    //! - Sequences are padded with n-1 `<s>` and one `</s>`.
    //! - Order-k windows over a padded sequence start at positions
    //!   n-k ..= L-k, i.e. exactly the alignments whose last element is a
    //!   real token or `</s>`. No window predicts `<s>`.
    //! - Highest order uses raw window counts; lower orders use
    //!   distinct-predecessor (continuation) counts, except k-grams starting
    //!   with `<s>`, which keep raw window counts.
    //! - Discounts per order from that order's count-of-counts:
    //!   Y = n1/(n1+2*n2), D1 = 1-2Y*n2/n1, D2 = 2-3Y*n3/n2, D3 = 3-4Y*n4/n3;
    //!   fallbacks Y=0.5, D1=0.5, D2=1.0, D3=1.5 when a denominator is zero
    //!   or an estimate goes nonpositive (a zero discount would strand a
    //!   context with no backoff mass and break never-zero probabilities).
    //! - A context with zero total at order k backs off fully to order k-1.
    //! - The unigram level interpolates with the uniform distribution over
    //!   the predictable vocabulary (training tokens + `</s>` + `<unk>`).
    //! - Queried tokens outside the vocabulary, and `<s>` as a predicted
    //!   token, map to `<unk>`. Contexts are truncated/left-padded with `<s>`
    //!   to length n-1; unseen context tokens map to `<unk>`.

    pub const BOS: &str = "<s>";
    pub const EOS: &str = "</s>";
    pub const UNK: &str = "<unk>";

    pub struct KnOracle {
        n: usize,
        /// windows[k-1] = every order-k window over every padded sequence.
        windows: Vec<Vec<Vec<String>>>,
        /// Predictable vocabulary: distinct training tokens + EOS + UNK.
        vocab: Vec<String>,
        train_tokens: Vec<String>,
        /// discounts[k-1] = [D1, D2, D3+] for order k.
        discounts: Vec<[f64; 3]>,
    }

    impl KnOracle {
        pub fn train(corpus: &[Vec<&str>], n: usize) -> KnOracle {
            assert!(n >= 1 && !corpus.is_empty());
            let mut train_tokens: Vec<String> = Vec::new();
            for seq in corpus {
                assert!(!seq.is_empty());
                for t in seq {
                    if !train_tokens.iter().any(|x| x == t) {
                        train_tokens.push((*t).to_string());
                    }
                }
            }
            train_tokens.sort();
            let mut vocab = train_tokens.clone();
            vocab.push(EOS.to_string());
            vocab.push(UNK.to_string());

            let mut windows: Vec<Vec<Vec<String>>> = vec![Vec::new(); n];
            for seq in corpus {
                let mut padded: Vec<String> = vec![BOS.to_string(); n - 1];
                padded.extend(seq.iter().map(|t| t.to_string()));
                padded.push(EOS.to_string());
                let len = padded.len();
                for k in 1..=n {
                    for start in (n - k)..=(len - k) {
                        windows[k - 1].push(padded[start..start + k].to_vec());
                    }
                }
            }

            let mut oracle = KnOracle { n, windows, vocab, train_tokens, discounts: Vec::new() };
            for k in 1..=n {
                oracle.discounts.push(oracle.estimate_discounts(k));
            }
            oracle
        }

        /// Distinct order-k grams with nonzero table count.
        fn table_keys(&self, k: usize) -> Vec<Vec<String>> {
            let mut keys: Vec<Vec<String>> = Vec::new();
            for w in &self.windows[k - 1] {
                if !keys.iter().any(|x| x == w) {
                    keys.push(w.clone());
                }
            }
            keys
        }

        /// Table count of an order-k gram (raw or continuation per the rules).
        pub fn count(&self, k: usize, gram: &[String]) -> u64 {
            assert_eq!(gram.len(), k);
            if k == self.n || gram[0] == BOS {
                self.windows[k - 1].iter().filter(|w| w.as_slice() == gram).count() as u64
            } else {
                let mut predecessors: Vec<&String> = Vec::new();
                for w in &self.windows[k] {
                    if &w[1..] == gram && !predecessors.contains(&&w[0]) {
                        predecessors.push(&w[0]);
                    }
                }
                predecessors.len() as u64
            }
        }

        fn estimate_discounts(&self, k: usize) -> [f64; 3] {
            let mut n1 = 0u64;
            let mut n2 = 0u64;
            let mut n3 = 0u64;
            let mut n4 = 0u64;
            for key in self.table_keys(k) {
                match self.count(k, &key) {
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

        fn context_stats(&self, k: usize, ctx: &[String]) -> (u64, u64, u64, u64) {
            let (mut total, mut b1, mut b2, mut b3) = (0u64, 0u64, 0u64, 0u64);
            for w in &self.vocab {
                let mut gram = ctx.to_vec();
                gram.push(w.clone());
                let c = self.count(k, &gram);
                total += c;
                match c {
                    0 => {}
                    1 => b1 += 1,
                    2 => b2 += 1,
                    _ => b3 += 1,
                }
            }
            (total, b1, b2, b3)
        }

        fn prob_order(&self, k: usize, token: &str, ctx: &[String]) -> f64 {
            let [d1, d2, d3] = self.discounts[k - 1];
            if k == 1 {
                let (total, b1, b2, b3) = self.context_stats(1, &[]);
                assert!(total > 0, "non-empty corpus always has unigram mass");
                let c = self.count(1, &[token.to_string()]);
                let d = match c {
                    0 => 0.0,
                    1 => d1,
                    2 => d2,
                    _ => d3,
                };
                let gamma = (d1 * b1 as f64 + d2 * b2 as f64 + d3 * b3 as f64) / total as f64;
                let uniform = 1.0 / self.vocab.len() as f64;
                return (c as f64 - d) / total as f64 + gamma * uniform;
            }
            let (total, b1, b2, b3) = self.context_stats(k, ctx);
            if total == 0 {
                return self.prob_order(k - 1, token, &ctx[1..]);
            }
            let mut gram = ctx.to_vec();
            gram.push(token.to_string());
            let c = self.count(k, &gram);
            let d = match c {
                0 => 0.0,
                1 => d1,
                2 => d2,
                _ => d3,
            };
            let gamma = (d1 * b1 as f64 + d2 * b2 as f64 + d3 * b3 as f64) / total as f64;
            (c as f64 - d) / total as f64 + gamma * self.prob_order(k - 1, token, &ctx[1..])
        }

        fn map_token(&self, t: &str) -> String {
            if t != BOS && self.train_tokens.iter().any(|x| x == t) || t == EOS {
                t.to_string()
            } else {
                UNK.to_string()
            }
        }

        /// p(token | context), with context truncated/BOS-padded to n-1.
        pub fn prob(&self, token: &str, context: &[&str]) -> f64 {
            let mut ctx: Vec<String> = Vec::new();
            let keep = context.len().min(self.n - 1);
            for _ in 0..(self.n - 1 - keep) {
                ctx.push(BOS.to_string());
            }
            for t in &context[context.len() - keep..] {
                ctx.push(if *t == BOS { BOS.to_string() } else { self.map_token(t) });
            }
            self.prob_order(self.n, &self.map_token(token), &ctx)
        }

        /// Predictable vocabulary (for normalization checks).
        pub fn predictable_vocab(&self) -> &[String] {
            &self.vocab
        }

        /// Cross-entropy in bits/token over `tokens` plus the `</s>` event.
        pub fn cross_entropy(&self, tokens: &[&str]) -> f64 {
            assert!(!tokens.is_empty());
            let mut sum = 0.0;
            let mut history: Vec<&str> = Vec::new();
            for t in tokens.iter().chain(std::iter::once(&EOS)) {
                sum -= self.prob(t, &history).log2();
                history.push(t);
            }
            sum / (tokens.len() + 1) as f64
        }
    }
}

pub mod rank {
    //! Pair-enumeration oracles for AUC and the Mann-Whitney U statistic,
    //! plus a direct Spearman-on-ranks computation.

    /// AUC by brute force over all positive-negative pairs; ties count 1/2.
    pub fn auc_brute(positives: &[f64], negatives: &[f64]) -> f64 {
        assert!(!positives.is_empty() && !negatives.is_empty());
        let mut acc = 0.0;
        for p in positives {
            for q in negatives {
                if p > q {
                    acc += 1.0;
                } else if p == q {
                    acc += 0.5;
                }
            }
        }
        acc / (positives.len() as f64 * negatives.len() as f64)
    }

    /// Mann-Whitney U for sample `a` versus `b` by pair enumeration.
    pub fn mww_u_brute(a: &[f64], b: &[f64]) -> f64 {
        assert!(!a.is_empty() && !b.is_empty());
        let mut u = 0.0;
        for x in a {
            for y in b {
                if x > y {
                    u += 1.0;
                } else if x == y {
                    u += 0.5;
                }
            }
        }
        u
    }

    /// Average ranks (1-based) with ties sharing the mean rank.
    pub fn average_ranks(values: &[f64]) -> Vec<f64> {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
        let mut ranks = vec![0.0; n];
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && values[order[j + 1]] == values[order[i]] {
                j += 1;
            }
            let mean_rank = ((i + 1) as f64 + (j + 1) as f64) / 2.0;
            for &idx in &order[i..=j] {
                ranks[idx] = mean_rank;
            }
            i = j + 1;
        }
        ranks
    }

    /// Spearman correlation: Pearson over average ranks.
    pub fn spearman_brute(x: &[f64], y: &[f64]) -> f64 {
        assert_eq!(x.len(), y.len());
        let rx = average_ranks(x);
        let ry = average_ranks(y);
        let n = x.len() as f64;
        let mx = rx.iter().sum::<f64>() / n;
        let my = ry.iter().sum::<f64>() / n;
        let mut cov = 0.0;
        let mut vx = 0.0;
        let mut vy = 0.0;
        for i in 0..x.len() {
            cov += (rx[i] - mx) * (ry[i] - my);
            vx += (rx[i] - mx).powi(2);
            vy += (ry[i] - my).powi(2);
        }
        cov / (vx * vy).sqrt()
    }
}

pub mod quantile {
    /// Type-7 (linear interpolation) quantile of an unsorted sample.
    pub fn type7(values: &[f64], q: f64) -> f64 {
        assert!(!values.is_empty());
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let h = (sorted.len() as f64 - 1.0) * q;
        let lo = h.floor() as usize;
        let frac = h - lo as f64;
        if lo + 1 < sorted.len() {
            sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
        } else {
            sorted[sorted.len() - 1]
        }
    }
}

pub mod agreement {
    //! Direct Fleiss/Cohen kappa computations from the defining formulas.

    /// Fleiss kappa over an items x categories count matrix; every row must
    /// sum to the same rater count.
    pub fn fleiss_brute(matrix: &[Vec<u32>]) -> f64 {
        let n_items = matrix.len() as f64;
        let raters: u32 = matrix[0].iter().sum();
        let n = raters as f64;
        let n_cats = matrix[0].len();
        let mut p_bar = 0.0;
        for row in matrix {
            assert_eq!(row.iter().sum::<u32>(), raters);
            let sum_sq: f64 = row.iter().map(|&c| (c as f64).powi(2)).sum();
            p_bar += (sum_sq - n) / (n * (n - 1.0));
        }
        p_bar /= n_items;
        let mut pe = 0.0;
        for j in 0..n_cats {
            let col: f64 = matrix.iter().map(|row| row[j] as f64).sum();
            pe += (col / (n_items * n)).powi(2);
        }
        if (1.0 - pe).abs() < 1e-15 {
            return 1.0;
        }
        (p_bar - pe) / (1.0 - pe)
    }

    /// Cohen kappa for two label sequences.
    pub fn cohen_brute(a: &[&str], b: &[&str]) -> f64 {
        assert_eq!(a.len(), b.len());
        let mut labels: Vec<&str> = Vec::new();
        for l in a.iter().chain(b.iter()) {
            if !labels.contains(l) {
                labels.push(l);
            }
        }
        let n = a.len() as f64;
        let po = a.iter().zip(b).filter(|(x, y)| x == y).count() as f64 / n;
        let mut pe = 0.0;
        for l in &labels {
            let pa = a.iter().filter(|x| x == &l).count() as f64 / n;
            let pb = b.iter().filter(|x| x == &l).count() as f64 / n;
            pe += pa * pb;
        }
        if (1.0 - pe).abs() < 1e-15 {
            return 1.0;
        }
        (po - pe) / (1.0 - pe)
    }
}
