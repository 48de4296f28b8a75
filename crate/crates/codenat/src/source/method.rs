//! A parsed buggy method: source text, token stream, syntax tree, and the
//! buggy region the transformation engine must intersect with.

use serde::{Deserialize, Serialize};

use super::ast::{MethodAst, Span};
use super::lexer::{lex, LexError, Token, TokenKind};
use super::parser::{ParseError, Parser};

/// Inclusive 1-based line range marking the buggy statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuggyRegion {
    pub start_line: u32,
    pub end_line: u32,
}

impl BuggyRegion {
    pub fn new(start_line: u32, end_line: u32) -> BuggyRegion {
        BuggyRegion { start_line, end_line }
    }

    pub fn contains_line(&self, line: u32) -> bool {
        self.start_line <= line && line <= self.end_line
    }

    /// Whether `[lo, hi]` overlaps the region.
    pub fn intersects_lines(&self, lo: u32, hi: u32) -> bool {
        lo <= self.end_line && self.start_line <= hi
    }
}

/// Errors produced while building a [`SourceMethod`].
#[derive(Debug, thiserror::Error)]
pub enum SourceError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid buggy region {start_line}..={end_line}: {message}")]
    Region { start_line: u32, end_line: u32, message: String },
}

/// A buggy method ready for transformation.
#[derive(Debug, Clone)]
pub struct SourceMethod {
    /// Caller-chosen identifier (typically the bug id).
    pub id: String,
    /// Original source text, byte-for-byte.
    pub source: String,
    /// Full token stream, comments included.
    pub tokens: Vec<Token>,
    /// Parsed structure over the token stream.
    pub ast: MethodAst,
    /// The buggy lines transformations must touch.
    pub buggy_region: BuggyRegion,
}

impl SourceMethod {
    /// Lexes and parses `source`, validating that the buggy region is a sane
    /// line range that overlaps the method.
    pub fn parse(
        id: impl Into<String>,
        source: impl Into<String>,
        buggy_region: BuggyRegion,
    ) -> Result<SourceMethod, SourceError> {
        let source = source.into();
        let tokens = lex(&source)?;
        let ast = Parser::new(&tokens).parse_method()?;
        if buggy_region.start_line == 0 || buggy_region.end_line < buggy_region.start_line {
            return Err(SourceError::Region {
                start_line: buggy_region.start_line,
                end_line: buggy_region.end_line,
                message: "lines are 1-based and the range must be non-empty".into(),
            });
        }
        let first = tokens.first().map(|t| t.line).unwrap_or(1);
        let last = tokens.last().map(last_line).unwrap_or(1);
        if !buggy_region.intersects_lines(first, last) {
            return Err(SourceError::Region {
                start_line: buggy_region.start_line,
                end_line: buggy_region.end_line,
                message: format!("method occupies lines {first}..={last}"),
            });
        }
        Ok(SourceMethod { id: id.into(), source, tokens, ast, buggy_region })
    }

    /// The stored source, unchanged. Transformed variants are produced by
    /// [`splice`] on this text, so rendering is the identity.
    pub fn render(&self) -> &str {
        &self.source
    }

    /// Byte range covering a token span (start of first token to end of
    /// last). Empty spans yield an empty range at the start token's offset.
    pub fn byte_range_of(&self, span: Span) -> std::ops::Range<usize> {
        if span.start >= span.end {
            let at = self
                .tokens
                .get(span.start)
                .map(|t| t.offset)
                .unwrap_or(self.source.len());
            return at..at;
        }
        let start = self.tokens[span.start].offset;
        let end = self.tokens[span.end - 1].byte_range().end;
        start..end
    }

    /// Source text covered by a token span.
    pub fn span_text(&self, span: Span) -> &str {
        &self.source[self.byte_range_of(span)]
    }

    /// Inclusive 1-based line range covered by a token span.
    pub fn line_range(&self, span: Span) -> (u32, u32) {
        if span.start >= span.end {
            let l = self.tokens.get(span.start).map(|t| t.line).unwrap_or(1);
            return (l, l);
        }
        let first = self.tokens[span.start].line;
        let last = last_line(&self.tokens[span.end - 1]);
        (first, last)
    }

    /// Whether any line of `span` lies in the buggy region.
    pub fn span_in_buggy_region(&self, span: Span) -> bool {
        let (lo, hi) = self.line_range(span);
        self.buggy_region.intersects_lines(lo, hi)
    }

    /// Texts of non-comment tokens, in order — the stream fed to language
    /// models.
    pub fn code_token_texts(&self) -> Vec<String> {
        self.tokens
            .iter()
            .filter(|t| t.kind != TokenKind::Comment)
            .map(|t| t.text.clone())
            .collect()
    }
}

/// Last line a token touches (string literals cannot span lines, but block
/// comments can).
fn last_line(tok: &Token) -> u32 {
    tok.line + tok.text.bytes().filter(|&b| b == b'\n').count() as u32
}

/// One replacement of a byte range with new text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edit {
    pub range: std::ops::Range<usize>,
    pub replacement: String,
}

impl Edit {
    pub fn new(range: std::ops::Range<usize>, replacement: impl Into<String>) -> Edit {
        Edit { range, replacement: replacement.into() }
    }
}

/// Applies non-overlapping byte-range replacements to `source`.
///
/// Edits are sorted by start position and applied back-to-front so earlier
/// ranges stay valid. Overlapping edits are a caller bug and panic.
pub fn splice(source: &str, edits: &[Edit]) -> String {
    let mut sorted: Vec<&Edit> = edits.iter().collect();
    sorted.sort_by_key(|e| (e.range.start, e.range.end));
    for pair in sorted.windows(2) {
        assert!(
            pair[0].range.end <= pair[1].range.start,
            "overlapping edits: {:?} and {:?}",
            pair[0].range,
            pair[1].range
        );
    }
    let mut out = source.to_string();
    for edit in sorted.into_iter().rev() {
        out.replace_range(edit.range.clone(), &edit.replacement);
    }
    out
}

/// Whether two sources lex to the same token text sequence. Comments count;
/// whitespace does not.
pub fn token_equal(a: &str, b: &str) -> bool {
    match (lex(a), lex(b)) {
        (Ok(ta), Ok(tb)) => {
            ta.len() == tb.len() && ta.iter().zip(&tb).all(|(x, y)| x.text == y.text)
        }
        _ => false,
    }
}

/// A corpus file failed to split into methods.
#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("chunk {index} is not a method: {source}")]
    NotAMethod {
        /// 0-based position of the failing chunk in the file.
        index: usize,
        #[source]
        source: ParseError,
    },
    #[error("trailing tokens after the last method")]
    TrailingTokens,
    #[error("no methods found")]
    Empty,
}

/// Splits a corpus file of concatenated method declarations into one token
/// sentence per method: the non-comment token texts, in order — the stream
/// language models train on.
///
/// Chunks are delimited by brace depth: each method ends at the `}` closing
/// its body (or at `;` for an abstract declaration), and every chunk must
/// parse as a method.
pub fn corpus_sentences(source: &str) -> Result<Vec<Vec<String>>, CorpusError> {
    let tokens = lex(source)?;
    let mut methods = Vec::new();
    let mut start = 0usize;
    let mut depth = 0i64;
    for (i, t) in tokens.iter().enumerate() {
        if t.kind != TokenKind::Separator {
            continue;
        }
        let ends_method = match t.text.as_str() {
            "{" => {
                depth += 1;
                false
            }
            "}" => {
                depth -= 1;
                depth == 0
            }
            ";" => depth == 0,
            _ => false,
        };
        if ends_method {
            let chunk = &tokens[start..=i];
            Parser::new(chunk)
                .parse_method()
                .map_err(|source| CorpusError::NotAMethod { index: methods.len(), source })?;
            methods.push(
                chunk
                    .iter()
                    .filter(|t| t.kind != TokenKind::Comment)
                    .map(|t| t.text.clone())
                    .collect(),
            );
            start = i + 1;
        }
    }
    if tokens[start..].iter().any(|t| t.kind != TokenKind::Comment) {
        return Err(CorpusError::TrailingTokens);
    }
    if methods.is_empty() {
        return Err(CorpusError::Empty);
    }
    Ok(methods)
}
