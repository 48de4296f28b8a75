//! Source model: lexer, syntax tree, parser, and the [`SourceMethod`]
//! wrapper the transformation engine operates on.
//!
//! The model is deliberately token-faithful: every tree node records the
//! token span it covers, transformed variants are produced by splicing byte
//! ranges of the original text, and [`token_equal`] checks equivalence at
//! the token level so formatting never matters.

pub mod ast;
pub mod lexer;
pub mod method;
pub mod parser;

pub use ast::{Block, Expr, ExprKind, MethodAst, Span, Stmt, StmtKind};
pub use lexer::{lex, LexError, Token, TokenKind};
pub use method::{
    corpus_sentences, splice, token_equal, BuggyRegion, CorpusError, Edit, SourceError,
    SourceMethod,
};
pub use parser::{ParseError, Parser};
