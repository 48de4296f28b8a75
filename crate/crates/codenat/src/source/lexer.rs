//! Java lexer with exact source positions.
//!
//! Maximal-munch tokenization over the Java lexical grammar: identifiers,
//! keywords, all literal forms (integer bases, underscores, suffixes,
//! floats with exponents, char/string escapes), both comment forms, and the
//! full operator/separator set including `>>>=`. `true`/`false`/`null`
//! lex as literals per the language spec. Comments are kept as tokens;
//! whitespace is dropped. String and char literals are single tokens,
//! quotes included.
//!
//! Scope notes: identifiers accept any alphabetic start character plus
//! `_`/`$` (the common subset of Java's Unicode rules); text blocks and
//! trailing-dot float forms (`1.`) are not recognized.

use serde::{Deserialize, Serialize};

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Identifier,
    Keyword,
    Literal,
    Operator,
    Separator,
    Comment,
}

/// One lexical token with its exact location in the source.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
    /// 1-based line of the first character.
    pub line: u32,
    /// 1-based column of the first character.
    pub column: u32,
    /// Byte offset of the first character in the source string.
    pub offset: usize,
}

impl Token {
    /// Byte range this token occupies in the source.
    pub fn byte_range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.text.len()
    }
}

/// Lexing failure with a source position.
#[derive(Debug, Clone, thiserror::Error)]
#[error("lex error at line {line}, column {column}: {message}")]
pub struct LexError {
    pub line: u32,
    pub column: u32,
    pub message: String,
}

/// Reserved words that lex as [`TokenKind::Keyword`].
pub const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while",
];

/// Multi-character operators, longest first so maximal munch is a prefix scan.
const OPERATORS_MULTI: &[&str] = &[
    ">>>=", ">>>", "<<=", ">>=", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=",
    "/=", "&=", "|=", "^=", "%=", "<<", ">>", "->",
];

const OPERATORS_SINGLE: &str = "=><!~?:+-*/&|^%";

/// Multi-character separators.
const SEPARATORS_MULTI: &[&str] = &["...", "::"];

const SEPARATORS_SINGLE: &str = "(){}[];,.@";

/// True when `s` is a lexically valid Java identifier (and not reserved).
pub fn is_valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' || c == '$' => {}
        _ => return false,
    }
    if !chars.all(|c| c.is_alphanumeric() || c == '_' || c == '$') {
        return false;
    }
    !KEYWORDS.contains(&s) && !matches!(s, "true" | "false" | "null")
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: u32,
    column: u32,
}

/// Tokenize Java source. Whitespace is skipped; comments become tokens.
pub fn lex(source: &str) -> Result<Vec<Token>, LexError> {
    let mut lx = Lexer { src: source, bytes: source.as_bytes(), pos: 0, line: 1, column: 1 };
    let mut tokens = Vec::new();
    while let Some(tok) = lx.next_token()? {
        tokens.push(tok);
    }
    Ok(tokens)
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.src[self.pos..].chars();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> LexError {
        LexError { line: self.line, column: self.column, message: message.into() }
    }

    fn starts_with(&self, s: &str) -> bool {
        self.bytes[self.pos..].starts_with(s.as_bytes())
    }

    fn next_token(&mut self) -> Result<Option<Token>, LexError> {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
        let (line, column, start) = (self.line, self.column, self.pos);
        let Some(c) = self.peek() else { return Ok(None) };

        let kind = if self.starts_with("//") {
            while !matches!(self.peek(), None | Some('\n')) {
                self.bump();
            }
            TokenKind::Comment
        } else if self.starts_with("/*") {
            self.bump();
            self.bump();
            loop {
                if self.starts_with("*/") {
                    self.bump();
                    self.bump();
                    break;
                }
                if self.bump().is_none() {
                    return Err(self.error("unterminated block comment"));
                }
            }
            TokenKind::Comment
        } else if c.is_alphabetic() || c == '_' || c == '$' {
            while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '$') {
                self.bump();
            }
            match &self.src[start..self.pos] {
                "true" | "false" | "null" => TokenKind::Literal,
                word if KEYWORDS.contains(&word) => TokenKind::Keyword,
                _ => TokenKind::Identifier,
            }
        } else if c.is_ascii_digit() {
            self.lex_number()?
        } else if c == '"' {
            self.lex_quoted('"')?
        } else if c == '\'' {
            self.lex_quoted('\'')?
        } else if let Some(sep) = SEPARATORS_MULTI.iter().find(|s| self.starts_with(s)) {
            for _ in 0..sep.len() {
                self.bump();
            }
            TokenKind::Separator
        } else if let Some(op) = OPERATORS_MULTI.iter().find(|s| self.starts_with(s)) {
            for _ in 0..op.len() {
                self.bump();
            }
            TokenKind::Operator
        } else if SEPARATORS_SINGLE.contains(c) {
            self.bump();
            TokenKind::Separator
        } else if OPERATORS_SINGLE.contains(c) {
            self.bump();
            TokenKind::Operator
        } else {
            return Err(self.error(format!("unexpected character {c:?}")));
        };

        Ok(Some(Token {
            text: self.src[start..self.pos].to_string(),
            kind,
            line,
            column,
            offset: start,
        }))
    }

    fn lex_number(&mut self) -> Result<TokenKind, LexError> {
        if self.starts_with("0x") || self.starts_with("0X") {
            self.bump();
            self.bump();
            self.digits(|c| c.is_ascii_hexdigit());
        } else if self.starts_with("0b") || self.starts_with("0B") {
            self.bump();
            self.bump();
            self.digits(|c| c == '0' || c == '1');
        } else {
            self.digits(|c| c.is_ascii_digit());
            if self.peek() == Some('.') && matches!(self.peek2(), Some(c) if c.is_ascii_digit()) {
                self.bump();
                self.digits(|c| c.is_ascii_digit());
            }
            if matches!(self.peek(), Some('e' | 'E')) {
                self.bump();
                if matches!(self.peek(), Some('+' | '-')) {
                    self.bump();
                }
                self.digits(|c| c.is_ascii_digit());
            }
        }
        if matches!(self.peek(), Some('l' | 'L' | 'f' | 'F' | 'd' | 'D')) {
            self.bump();
        }
        if matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            return Err(self.error("invalid character in numeric literal"));
        }
        Ok(TokenKind::Literal)
    }

    fn digits(&mut self, valid: impl Fn(char) -> bool) {
        while matches!(self.peek(), Some(c) if valid(c) || c == '_') {
            self.bump();
        }
    }

    fn lex_quoted(&mut self, quote: char) -> Result<TokenKind, LexError> {
        self.bump();
        loop {
            match self.peek() {
                None | Some('\n') => return Err(self.error("unterminated literal")),
                Some('\\') => {
                    self.bump();
                    self.bump();
                }
                Some(c) if c == quote => {
                    self.bump();
                    return Ok(TokenKind::Literal);
                }
                Some(_) => {
                    self.bump();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<String> {
        lex(src).unwrap().into_iter().map(|t| t.text).collect()
    }

    #[test]
    fn simple_method_token_count() {
        // Hand-lexed: public int f ( ) { return 1 ; }
        let toks = lex("public int f(){return 1;}").unwrap();
        let non_comment: Vec<_> = toks.iter().filter(|t| t.kind != TokenKind::Comment).collect();
        assert_eq!(non_comment.len(), 10);
        assert_eq!(non_comment[0].kind, TokenKind::Keyword);
        assert_eq!(non_comment[2].kind, TokenKind::Identifier);
        assert_eq!(non_comment[7].kind, TokenKind::Literal);
    }

    #[test]
    fn maximal_munch_shift_operators() {
        assert_eq!(texts("a>>>=b"), ["a", ">>>=", "b"]);
        assert_eq!(texts("a>>>b"), ["a", ">>>", "b"]);
        assert_eq!(texts("a>>b"), ["a", ">>", "b"]);
        assert_eq!(texts("a> >b"), ["a", ">", ">", "b"]);
        assert_eq!(texts("x<<=2"), ["x", "<<=", "2"]);
    }

    #[test]
    fn comments_are_tokens_with_positions() {
        let toks = lex("int a; // tail\n/* block\n */ int b;").unwrap();
        let comments: Vec<_> = toks.iter().filter(|t| t.kind == TokenKind::Comment).collect();
        assert_eq!(comments.len(), 2);
        assert_eq!(comments[0].text, "// tail");
        assert_eq!(comments[0].line, 1);
        assert_eq!(comments[1].text, "/* block\n */");
        assert_eq!(toks.last().unwrap().line, 3);
    }

    #[test]
    fn literal_forms() {
        let toks = lex("0x1F_2L 0b1010 1_000_000 3.14f 2e10 'a' '\\n' \"s\\\"t\"").unwrap();
        assert_eq!(toks.len(), 8);
        assert!(toks.iter().all(|t| t.kind == TokenKind::Literal));
        assert_eq!(toks[7].text, "\"s\\\"t\"");
    }

    #[test]
    fn positions_track_lines_and_columns() {
        let toks = lex("int a;\n  a = 1;").unwrap();
        let a_assign = &toks[3];
        assert_eq!((a_assign.text.as_str(), a_assign.line, a_assign.column), ("a", 2, 3));
        assert_eq!(&"int a;\n  a = 1;"[a_assign.byte_range()], "a");
    }

    #[test]
    fn keyword_literals_and_identifier_validity() {
        let toks = lex("boolean x = true;").unwrap();
        assert_eq!(toks[3].kind, TokenKind::Literal);
        assert!(is_valid_identifier("arr"));
        assert!(is_valid_identifier("$tmp_1"));
        assert!(!is_valid_identifier("1abc"));
        assert!(!is_valid_identifier("while"));
        assert!(!is_valid_identifier("true"));
        assert!(!is_valid_identifier(""));
        assert!(!is_valid_identifier("a-b"));
    }

    #[test]
    fn lex_errors_carry_positions() {
        let err = lex("int a = \"unterminated").unwrap_err();
        assert_eq!(err.line, 1);
        let err = lex("int a = #;").unwrap_err();
        assert!(err.message.contains("unexpected"));
    }
}
