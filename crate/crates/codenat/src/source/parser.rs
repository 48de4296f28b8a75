//! Recursive-descent parser for a single Java method declaration.
//!
//! The parser consumes the lexer's token stream (skipping comment tokens,
//! whose indices still appear inside node spans) and produces the tree in
//! [`super::ast`]. It covers the statement and expression subset the
//! transformation operators inspect; any statement outside that subset falls
//! back to an opaque node that spans its tokens exactly, so parsing never
//! fails on valid Java merely because a construct is exotic. Errors are
//! reserved for input that is not a method declaration at all.
//!
//! Generic type arguments are skipped with depth arithmetic that treats a
//! `>>`/`>>>` token as closing two/three levels, so nested generics lex
//! maximal-munch and still parse.

use super::ast::*;
use super::lexer::{Token, TokenKind};

/// Parse failure at a source position.
#[derive(Debug, Clone, thiserror::Error)]
#[error("parse error at line {line}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub message: String,
}

const MODIFIERS: &[&str] = &[
    "public", "private", "protected", "static", "final", "abstract", "synchronized", "native",
    "strictfp", "default", "transient", "volatile",
];

const PRIMITIVES: &[&str] =
    &["boolean", "byte", "short", "int", "long", "char", "float", "double", "void"];

const ASSIGN_OPS: &[&str] =
    &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="];

/// Precedence level of a binary operator, lowest (`||`) to highest
/// (multiplicative); `None` for non-binary operators.
pub(crate) fn binary_level(op: &str) -> Option<u8> {
    Some(match op {
        "||" => 0,
        "&&" => 1,
        "|" => 2,
        "^" => 3,
        "&" => 4,
        "==" | "!=" => 5,
        "<" | ">" | "<=" | ">=" => 6,
        "<<" | ">>" | ">>>" => 7,
        "+" | "-" => 8,
        "*" | "/" | "%" => 9,
        _ => return None,
    })
}

pub struct Parser<'a> {
    toks: &'a [Token],
    /// Indices of non-comment tokens.
    sig: Vec<usize>,
    /// Position in `sig`.
    pos: usize,
    /// Token index of the most recently consumed token.
    last: usize,
}

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Token]) -> Parser<'a> {
        let sig = toks
            .iter()
            .enumerate()
            .filter(|(_, t)| t.kind != TokenKind::Comment)
            .map(|(i, _)| i)
            .collect();
        Parser { toks, sig, pos: 0, last: 0 }
    }

    fn cur(&self) -> Option<&Token> {
        self.sig.get(self.pos).map(|&i| &self.toks[i])
    }

    fn cur_idx(&self) -> usize {
        self.sig.get(self.pos).copied().unwrap_or(self.toks.len())
    }

    fn nth(&self, n: usize) -> Option<&Token> {
        self.sig.get(self.pos + n).map(|&i| &self.toks[i])
    }

    fn nth_text(&self, n: usize) -> &str {
        self.nth(n).map(|t| t.text.as_str()).unwrap_or("")
    }

    fn is(&self, text: &str) -> bool {
        self.cur().is_some_and(|t| t.text == text)
    }

    fn is_kind(&self, kind: TokenKind) -> bool {
        self.cur().is_some_and(|t| t.kind == kind)
    }

    fn bump(&mut self) -> usize {
        let idx = self.cur_idx();
        self.last = idx;
        self.pos += 1;
        idx
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.is(text) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let line = self
            .cur()
            .map(|t| t.line)
            .or_else(|| self.toks.last().map(|t| t.line))
            .unwrap_or(1);
        ParseError { line, message: message.into() }
    }

    fn expect(&mut self, text: &str) -> Result<usize, ParseError> {
        if self.is(text) {
            Ok(self.bump())
        } else {
            Err(self.error(format!(
                "expected `{text}`, found `{}`",
                self.cur().map(|t| t.text.as_str()).unwrap_or("end of input")
            )))
        }
    }

    fn expect_identifier(&mut self) -> Result<(String, usize), ParseError> {
        if self.is_kind(TokenKind::Identifier) {
            let name = self.cur().unwrap().text.clone();
            Ok((name, self.bump()))
        } else {
            Err(self.error(format!(
                "expected identifier, found `{}`",
                self.cur().map(|t| t.text.as_str()).unwrap_or("end of input")
            )))
        }
    }

    fn finish(&self, start: usize) -> Span {
        Span::new(start, self.last + 1)
    }

    // ── method declaration ──────────────────────────────────────────────

    pub fn parse_method(&mut self) -> Result<MethodAst, ParseError> {
        let start = self.cur_idx();
        self.skip_modifiers_and_annotations();
        if self.is("<") {
            self.skip_type_args()?;
        }
        // Constructor: identifier immediately followed by `(`.
        let name;
        if self.is_kind(TokenKind::Identifier) && self.nth_text(1) == "(" {
            let (n, _) = self.expect_identifier()?;
            name = n;
        } else {
            self.parse_type().map_err(|_| self.error("expected a method declaration"))?;
            let (n, _) = self.expect_identifier()?;
            name = n;
        }
        self.expect("(")?;
        let mut params = Vec::new();
        if !self.is(")") {
            loop {
                params.push(self.parse_param()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        if self.eat("throws") {
            loop {
                self.expect_identifier()?;
                while self.eat(".") {
                    self.expect_identifier()?;
                }
                if !self.eat(",") {
                    break;
                }
            }
        }
        let body = if self.is("{") {
            Some(self.parse_block()?)
        } else {
            self.expect(";")?;
            None
        };
        if let Some(t) = self.cur() {
            return Err(self.error(format!("unexpected tokens after method body: `{}`", t.text)));
        }
        Ok(MethodAst { name, params, body, span: self.finish(start) })
    }

    fn skip_modifiers_and_annotations(&mut self) {
        loop {
            if self.cur().is_some_and(|t| MODIFIERS.contains(&t.text.as_str())) {
                self.bump();
            } else if self.is("@") {
                self.bump();
                if self.is_kind(TokenKind::Identifier) || self.is_kind(TokenKind::Keyword) {
                    self.bump();
                    while self.is(".") && self.nth(1).is_some_and(|t| t.kind == TokenKind::Identifier)
                    {
                        self.bump();
                        self.bump();
                    }
                }
                if self.is("(") {
                    let _ = self.skip_balanced("(", ")");
                }
            } else {
                return;
            }
        }
    }

    fn parse_param(&mut self) -> Result<Param, ParseError> {
        self.skip_modifiers_and_annotations();
        let start = self.cur_idx();
        self.parse_type()?;
        self.eat("...");
        let type_span = self.finish(start);
        let (name, name_tok) = self.expect_identifier()?;
        let mut extra_dims = 0;
        while self.is("[") && self.nth_text(1) == "]" {
            self.bump();
            self.bump();
            extra_dims += 1;
        }
        Ok(Param { type_span, name, name_tok, extra_dims })
    }

    /// Type: primitive or qualified name, optional generics, array dims.
    fn parse_type(&mut self) -> Result<Span, ParseError> {
        let start = self.cur_idx();
        if self.cur().is_some_and(|t| PRIMITIVES.contains(&t.text.as_str())) {
            self.bump();
        } else if self.is_kind(TokenKind::Identifier) {
            self.bump();
            loop {
                if self.is(".") && self.nth(1).is_some_and(|t| t.kind == TokenKind::Identifier) {
                    self.bump();
                    self.bump();
                } else {
                    break;
                }
            }
            if self.is("<") {
                self.skip_type_args()?;
            }
        } else {
            return Err(self.error("expected a type"));
        }
        while self.is("[") && self.nth_text(1) == "]" {
            self.bump();
            self.bump();
        }
        Ok(self.finish(start))
    }

    /// Skips a balanced `<...>` type-argument list. `>>`/`>>>` close two and
    /// three levels respectively.
    fn skip_type_args(&mut self) -> Result<(), ParseError> {
        let mut depth: i32 = 0;
        loop {
            let Some(t) = self.cur() else {
                return Err(self.error("unbalanced type arguments"));
            };
            match t.text.as_str() {
                "<" => depth += 1,
                ">" => depth -= 1,
                ">>" => depth -= 2,
                ">>>" => depth -= 3,
                "," | "." | "?" | "extends" | "super" | "&" | "[" | "]" => {}
                _ if t.kind == TokenKind::Identifier
                    || PRIMITIVES.contains(&t.text.as_str()) => {}
                other => return Err(self.error(format!("`{other}` in type arguments"))),
            }
            self.bump();
            if depth == 0 {
                return Ok(());
            }
            if depth < 0 {
                return Err(self.error("unbalanced type arguments"));
            }
        }
    }

    /// Consumes from an opening delimiter to its balanced close (all three
    /// bracket kinds tracked).
    fn skip_balanced(&mut self, open: &str, close: &str) -> Result<Span, ParseError> {
        let start = self.expect(open)?;
        let mut depth = 1;
        while depth > 0 {
            let Some(t) = self.cur() else {
                return Err(self.error(format!("unbalanced `{open}`")));
            };
            match t.text.as_str() {
                "(" | "{" | "[" => depth += 1,
                ")" | "}" | "]" => depth -= 1,
                _ => {}
            }
            let text_ok = depth > 0 || t.text == close;
            self.bump();
            if depth == 0 && !text_ok {
                return Err(self.error(format!("mismatched `{open}`")));
            }
        }
        Ok(self.finish(start))
    }

    // ── statements ──────────────────────────────────────────────────────

    fn parse_block(&mut self) -> Result<Block, ParseError> {
        let start = self.expect("{")?;
        let mut statements = Vec::new();
        while !self.is("}") {
            if self.cur().is_none() {
                return Err(self.error("unterminated block"));
            }
            statements.push(self.parse_stmt_rec()?);
        }
        self.expect("}")?;
        Ok(Block { statements, span: self.finish(start) })
    }

    /// Parses a statement, falling back to an opaque span on failure.
    fn parse_stmt_rec(&mut self) -> Result<Stmt, ParseError> {
        let save = (self.pos, self.last);
        match self.parse_statement() {
            Ok(s) => Ok(s),
            Err(_) => {
                (self.pos, self.last) = save;
                self.opaque_statement()
            }
        }
    }

    /// Consumes one statement's worth of tokens without interpretation:
    /// up to a `;` at bracket depth zero, or a balanced `{...}` close.
    fn opaque_statement(&mut self) -> Result<Stmt, ParseError> {
        let start = self.cur_idx();
        let mut depth = 0i32;
        let mut consumed = false;
        loop {
            let Some(t) = self.cur() else {
                if depth > 0 {
                    return Err(self.error("unbalanced brackets"));
                }
                break;
            };
            match t.text.as_str() {
                "(" | "{" | "[" => {
                    depth += 1;
                    self.bump();
                    consumed = true;
                }
                "}" if depth == 0 => break,
                ")" | "}" | "]" => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(self.error("unbalanced brackets"));
                    }
                    let closed_block = t.text == "}" && depth == 0;
                    self.bump();
                    consumed = true;
                    if closed_block {
                        break;
                    }
                }
                ";" if depth == 0 => {
                    self.bump();
                    consumed = true;
                    break;
                }
                _ => {
                    self.bump();
                    consumed = true;
                }
            }
        }
        if !consumed {
            return Err(self.error("expected a statement"));
        }
        Ok(Stmt { kind: StmtKind::Opaque, span: self.finish(start) })
    }

    fn parse_statement(&mut self) -> Result<Stmt, ParseError> {
        let start = self.cur_idx();
        let Some(t) = self.cur() else {
            return Err(self.error("expected a statement"));
        };
        let kind = match t.text.as_str() {
            "{" => StmtKind::Block(self.parse_block()?),
            ";" => {
                self.bump();
                StmtKind::Empty
            }
            "if" => {
                self.bump();
                self.expect("(")?;
                let cond = self.parse_expression()?;
                self.expect(")")?;
                let then_branch = Box::new(self.parse_stmt_rec()?);
                let (else_tok, else_branch) = if self.is("else") {
                    let tok = self.bump();
                    (Some(tok), Some(Box::new(self.parse_stmt_rec()?)))
                } else {
                    (None, None)
                };
                StmtKind::If(IfStmt { cond, then_branch, else_tok, else_branch })
            }
            "while" => {
                self.bump();
                self.expect("(")?;
                let cond = self.parse_expression()?;
                self.expect(")")?;
                let body = Box::new(self.parse_stmt_rec()?);
                StmtKind::While(WhileStmt { cond, body })
            }
            "do" => {
                self.bump();
                let body = Box::new(self.parse_stmt_rec()?);
                self.expect("while")?;
                self.expect("(")?;
                let cond = self.parse_expression()?;
                self.expect(")")?;
                self.expect(";")?;
                StmtKind::DoWhile(DoWhileStmt { body, cond })
            }
            "for" => {
                self.bump();
                return self.parse_for(start);
            }
            "switch" => {
                self.bump();
                self.expect("(")?;
                let selector = self.parse_expression()?;
                self.expect(")")?;
                let lbrace = self.expect("{")?;
                let mut cases = Vec::new();
                while !self.is("}") {
                    cases.push(self.parse_switch_case()?);
                }
                let rbrace = self.expect("}")?;
                StmtKind::Switch(SwitchStmt { selector, cases, lbrace, rbrace })
            }
            "return" => {
                self.bump();
                let expr = if self.is(";") { None } else { Some(self.parse_expression()?) };
                self.expect(";")?;
                StmtKind::Return(expr)
            }
            "throw" => {
                self.bump();
                let expr = self.parse_expression()?;
                self.expect(";")?;
                StmtKind::Throw(expr)
            }
            "break" | "continue" => {
                let is_break = t.text == "break";
                self.bump();
                let label = if self.is_kind(TokenKind::Identifier) {
                    Some(self.expect_identifier()?.0)
                } else {
                    None
                };
                self.expect(";")?;
                if is_break {
                    StmtKind::Break(label)
                } else {
                    StmtKind::Continue(label)
                }
            }
            "try" => {
                self.bump();
                let resources =
                    if self.is("(") { Some(self.skip_balanced("(", ")")?) } else { None };
                let body = self.parse_block()?;
                let mut catches = Vec::new();
                while self.eat("catch") {
                    let param_span = self.skip_balanced("(", ")")?;
                    catches.push(CatchClause { param_span, body: self.parse_block()? });
                }
                let finally =
                    if self.eat("finally") { Some(self.parse_block()?) } else { None };
                if catches.is_empty() && finally.is_none() && resources.is_none() {
                    return Err(self.error("try without catch, finally, or resources"));
                }
                StmtKind::Try(TryStmt { resources, body, catches, finally })
            }
            "synchronized" => {
                self.bump();
                self.expect("(")?;
                let lock = self.parse_expression()?;
                self.expect(")")?;
                StmtKind::Sync(lock, self.parse_block()?)
            }
            "assert" => {
                self.bump();
                let cond = self.parse_expression()?;
                let msg = if self.eat(":") { Some(self.parse_expression()?) } else { None };
                self.expect(";")?;
                StmtKind::Assert(cond, msg)
            }
            _ if t.kind == TokenKind::Identifier
                && self.nth_text(1) == ":"
                && self.nth_text(2) != ":" =>
            {
                let (label, _) = self.expect_identifier()?;
                self.expect(":")?;
                StmtKind::Labeled(label, Box::new(self.parse_stmt_rec()?))
            }
            _ => {
                // Local variable declaration, then expression statement.
                let save = (self.pos, self.last);
                match self.parse_var_decl_no_semi() {
                    Ok(decl) if self.is(";") => {
                        self.bump();
                        StmtKind::VarDecl(decl)
                    }
                    _ => {
                        (self.pos, self.last) = save;
                        let expr = self.parse_expression()?;
                        self.expect(";")?;
                        StmtKind::Expr(expr)
                    }
                }
            }
        };
        Ok(Stmt { kind, span: self.finish(start) })
    }

    fn parse_for(&mut self, start: usize) -> Result<Stmt, ParseError> {
        let lparen = self.expect("(")?;
        // Enhanced for: no `;` at paren depth 1.
        let mut depth = 1;
        let mut has_semi = false;
        for n in 0.. {
            let Some(t) = self.nth(n) else { break };
            match t.text.as_str() {
                "(" => depth += 1,
                ")" => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                ";" if depth == 1 => {
                    has_semi = true;
                    break;
                }
                _ => {}
            }
        }
        if !has_semi {
            self.skip_modifiers_and_annotations();
            let var_start = self.cur_idx();
            self.parse_type()?;
            self.expect_identifier()?;
            let var_span = self.finish(var_start);
            self.expect(":")?;
            let iterable = self.parse_expression()?;
            self.expect(")")?;
            let body = Box::new(self.parse_stmt_rec()?);
            return Ok(Stmt {
                kind: StmtKind::ForEach(ForEachStmt { var_span, iterable, body }),
                span: self.finish(start),
            });
        }
        let init = if self.is(";") {
            None
        } else {
            let save = (self.pos, self.last);
            match self.parse_var_decl_no_semi() {
                Ok(decl) if self.is(";") => Some(ForInit::Decl(decl)),
                _ => {
                    (self.pos, self.last) = save;
                    let mut exprs = vec![self.parse_expression()?];
                    while self.eat(",") {
                        exprs.push(self.parse_expression()?);
                    }
                    Some(ForInit::Exprs(exprs))
                }
            }
        };
        let semi1 = self.expect(";")?;
        let cond = if self.is(";") { None } else { Some(self.parse_expression()?) };
        let semi2 = self.expect(";")?;
        let mut update = Vec::new();
        if !self.is(")") {
            update.push(self.parse_expression()?);
            while self.eat(",") {
                update.push(self.parse_expression()?);
            }
        }
        let rparen = self.expect(")")?;
        let body = Box::new(self.parse_stmt_rec()?);
        Ok(Stmt {
            kind: StmtKind::For(ForStmt { init, cond, update, body, lparen, semi1, semi2, rparen }),
            span: self.finish(start),
        })
    }

    fn parse_switch_case(&mut self) -> Result<SwitchCase, ParseError> {
        let start = self.cur_idx();
        let mut labels = Vec::new();
        loop {
            if self.eat("case") {
                labels.push(CaseLabel::Expr(self.parse_ternary()?));
                self.expect(":")?;
            } else if self.eat("default") {
                self.expect(":")?;
                labels.push(CaseLabel::Default);
            } else {
                break;
            }
        }
        if labels.is_empty() {
            return Err(self.error("expected `case` or `default`"));
        }
        let mut body = Vec::new();
        while !(self.is("case") || self.is("default") || self.is("}")) {
            if self.cur().is_none() {
                return Err(self.error("unterminated switch"));
            }
            body.push(self.parse_stmt_rec()?);
        }
        Ok(SwitchCase { labels, body, span: self.finish(start) })
    }

    fn parse_var_decl_no_semi(&mut self) -> Result<VarDecl, ParseError> {
        let start = self.cur_idx();
        while self.is("final") || self.is("@") {
            self.skip_modifiers_and_annotations();
        }
        self.parse_type()?;
        let prefix_span = self.finish(start);
        if !self.is_kind(TokenKind::Identifier) {
            return Err(self.error("not a declaration"));
        }
        let mut declarators = Vec::new();
        loop {
            let (name, name_tok) = self.expect_identifier()?;
            let mut extra_dims = 0;
            while self.is("[") && self.nth_text(1) == "]" {
                self.bump();
                self.bump();
                extra_dims += 1;
            }
            let init = if self.eat("=") { Some(self.parse_var_init()?) } else { None };
            declarators.push(Declarator { name, name_tok, extra_dims, init });
            if !self.eat(",") {
                break;
            }
        }
        Ok(VarDecl { prefix_span, declarators })
    }

    fn parse_var_init(&mut self) -> Result<Expr, ParseError> {
        if self.is("{") {
            self.parse_array_init()
        } else {
            self.parse_expression()
        }
    }

    fn parse_array_init(&mut self) -> Result<Expr, ParseError> {
        let start = self.expect("{")?;
        let mut elements = Vec::new();
        while !self.is("}") {
            elements.push(self.parse_var_init()?);
            if !self.eat(",") {
                break;
            }
        }
        self.expect("}")?;
        Ok(Expr { kind: ExprKind::ArrayInit { elements }, span: self.finish(start) })
    }

    // ── expressions ─────────────────────────────────────────────────────

    pub fn parse_expression(&mut self) -> Result<Expr, ParseError> {
        let start = self.cur_idx();
        let lhs = self.parse_ternary()?;
        if self.cur().is_some_and(|t| ASSIGN_OPS.contains(&t.text.as_str())) {
            let op = self.cur().unwrap().text.clone();
            let op_tok = self.bump();
            let rhs = self.parse_expression()?;
            return Ok(Expr {
                kind: ExprKind::Assign { op, op_tok, lhs: Box::new(lhs), rhs: Box::new(rhs) },
                span: self.finish(start),
            });
        }
        Ok(lhs)
    }

    fn parse_ternary(&mut self) -> Result<Expr, ParseError> {
        let start = self.cur_idx();
        let cond = self.parse_binary(0)?;
        if self.eat("?") {
            let then_expr = self.parse_expression()?;
            self.expect(":")?;
            let else_expr = self.parse_ternary()?;
            return Ok(Expr {
                kind: ExprKind::Ternary {
                    cond: Box::new(cond),
                    then_expr: Box::new(then_expr),
                    else_expr: Box::new(else_expr),
                },
                span: self.finish(start),
            });
        }
        Ok(cond)
    }

    fn parse_binary(&mut self, min_level: u8) -> Result<Expr, ParseError> {
        let start = self.cur_idx();
        let mut left = self.parse_unary()?;
        loop {
            if self.is("instanceof") {
                if 6 < min_level {
                    break;
                }
                self.bump();
                self.parse_type()?;
                left = Expr {
                    kind: ExprKind::InstanceOf { operand: Box::new(left) },
                    span: self.finish(start),
                };
                continue;
            }
            let Some(level) = self.cur().and_then(|t| binary_level(&t.text)) else { break };
            if level < min_level {
                break;
            }
            let op = self.cur().unwrap().text.clone();
            let op_tok = self.bump();
            let rhs = self.parse_binary(level + 1)?;
            left = Expr {
                kind: ExprKind::Binary { op, op_tok, lhs: Box::new(left), rhs: Box::new(rhs) },
                span: self.finish(start),
            };
        }
        Ok(left)
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        let start = self.cur_idx();
        if self.cur().is_some_and(|t| matches!(t.text.as_str(), "+" | "-" | "!" | "~" | "++" | "--"))
        {
            let op = self.cur().unwrap().text.clone();
            self.bump();
            let operand = self.parse_unary()?;
            return Ok(Expr {
                kind: ExprKind::Unary { op, operand: Box::new(operand), prefix: true },
                span: self.finish(start),
            });
        }
        // Cast attempt: `(` type `)` followed by something a cast can apply to.
        if self.is("(") {
            let save = (self.pos, self.last);
            self.bump();
            let primitive = self.cur().is_some_and(|t| {
                PRIMITIVES.contains(&t.text.as_str()) && t.text != "void"
            });
            let cast_ok = (|| -> Result<(), ParseError> {
                self.parse_type()?;
                while self.eat("&") {
                    self.parse_type()?;
                }
                self.expect(")")?;
                Ok(())
            })()
            .is_ok()
                && self.cur().is_some_and(|t| {
                    t.kind == TokenKind::Identifier
                        || t.kind == TokenKind::Literal
                        || matches!(t.text.as_str(), "(" | "!" | "~" | "this" | "super" | "new")
                        || (primitive && matches!(t.text.as_str(), "+" | "-" | "++" | "--"))
                });
            if cast_ok {
                let operand = self.parse_unary()?;
                return Ok(Expr {
                    kind: ExprKind::Cast { operand: Box::new(operand) },
                    span: self.finish(start),
                });
            }
            (self.pos, self.last) = save;
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> Result<Expr, ParseError> {
        let start = self.cur_idx();
        let mut expr = self.parse_primary()?;
        loop {
            if self.is(".") {
                let after = self.nth(1);
                let Some(after) = after else {
                    return Err(self.error("dangling `.`"));
                };
                if after.kind == TokenKind::Identifier {
                    self.bump();
                    let (name, name_tok) = self.expect_identifier()?;
                    if self.is("(") {
                        let args = self.parse_args()?;
                        expr = Expr {
                            kind: ExprKind::Call {
                                receiver: Some(Box::new(expr)),
                                name,
                                name_tok,
                                args,
                            },
                            span: self.finish(start),
                        };
                    } else {
                        expr = Expr {
                            kind: ExprKind::Field { object: Box::new(expr), name, name_tok },
                            span: self.finish(start),
                        };
                    }
                } else if matches!(after.text.as_str(), "this" | "class") {
                    self.bump();
                    let name = self.cur().unwrap().text.clone();
                    let name_tok = self.bump();
                    expr = Expr {
                        kind: ExprKind::Field { object: Box::new(expr), name, name_tok },
                        span: self.finish(start),
                    };
                } else {
                    return Err(self.error("unsupported selector"));
                }
            } else if self.is("[") {
                self.bump();
                let index = self.parse_expression()?;
                self.expect("]")?;
                expr = Expr {
                    kind: ExprKind::Index { array: Box::new(expr), index: Box::new(index) },
                    span: self.finish(start),
                };
            } else if self.is("++") || self.is("--") {
                let op = self.cur().unwrap().text.clone();
                self.bump();
                expr = Expr {
                    kind: ExprKind::Unary { op, operand: Box::new(expr), prefix: false },
                    span: self.finish(start),
                };
            } else if self.is("::") {
                self.bump();
                if !(self.is_kind(TokenKind::Identifier) || self.is("new")) {
                    return Err(self.error("expected method reference name"));
                }
                self.bump();
                expr = Expr { kind: ExprKind::MethodRef, span: self.finish(start) };
            } else {
                break;
            }
        }
        Ok(expr)
    }

    fn parse_args(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.expect("(")?;
        let mut args = Vec::new();
        if !self.is(")") {
            loop {
                args.push(self.parse_lambda_or_expr()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        Ok(args)
    }

    fn parse_lambda_or_expr(&mut self) -> Result<Expr, ParseError> {
        if let Some(lambda) = self.try_parse_lambda()? {
            return Ok(lambda);
        }
        self.parse_expression()
    }

    /// Lambda forms: `x -> ...` and `(params) -> ...`; body tokens are
    /// consumed without structure.
    fn try_parse_lambda(&mut self) -> Result<Option<Expr>, ParseError> {
        let start = self.cur_idx();
        let is_lambda = if self.is_kind(TokenKind::Identifier) && self.nth_text(1) == "->" {
            true
        } else if self.is("(") {
            let mut depth = 0;
            let mut n = 0;
            loop {
                let Some(t) = self.nth(n) else { break false };
                match t.text.as_str() {
                    "(" => depth += 1,
                    ")" => {
                        depth -= 1;
                        if depth == 0 {
                            break self.nth(n + 1).is_some_and(|t| t.text == "->");
                        }
                    }
                    _ => {}
                }
                n += 1;
            }
        } else {
            false
        };
        if !is_lambda {
            return Ok(None);
        }
        if self.is("(") {
            self.skip_balanced("(", ")")?;
        } else {
            self.bump();
        }
        self.expect("->")?;
        if self.is("{") {
            self.skip_balanced("{", "}")?;
        } else {
            self.parse_expression()?;
        }
        Ok(Some(Expr { kind: ExprKind::Lambda, span: self.finish(start) }))
    }

    fn parse_primary(&mut self) -> Result<Expr, ParseError> {
        let start = self.cur_idx();
        let Some(t) = self.cur().cloned() else {
            return Err(self.error("expected expression"));
        };
        if t.kind == TokenKind::Literal {
            let tok = self.bump();
            return Ok(Expr { kind: ExprKind::Literal { tok }, span: self.finish(start) });
        }
        if let Some(lambda) = self.try_parse_lambda()? {
            return Ok(lambda);
        }
        match t.text.as_str() {
            "(" => {
                self.bump();
                let inner = self.parse_expression()?;
                self.expect(")")?;
                Ok(Expr { kind: ExprKind::Paren(Box::new(inner)), span: self.finish(start) })
            }
            "new" => {
                self.bump();
                self.parse_type()?;
                if self.is("(") {
                    self.skip_balanced("(", ")")?;
                    if self.is("{") {
                        self.skip_balanced("{", "}")?;
                    }
                } else if self.is("[") {
                    while self.is("[") {
                        self.bump();
                        if !self.is("]") {
                            self.parse_expression()?;
                        }
                        self.expect("]")?;
                    }
                    if self.is("{") {
                        self.parse_array_init()?;
                    }
                } else {
                    return Err(self.error("expected `(` or `[` after `new`"));
                }
                Ok(Expr { kind: ExprKind::New, span: self.finish(start) })
            }
            "this" | "super" => {
                let name = t.text.clone();
                let tok = self.bump();
                if self.is("(") {
                    let args = self.parse_args()?;
                    return Ok(Expr {
                        kind: ExprKind::Call { receiver: None, name, name_tok: tok, args },
                        span: self.finish(start),
                    });
                }
                Ok(Expr { kind: ExprKind::Name { name, tok }, span: self.finish(start) })
            }
            "{" => self.parse_array_init(),
            _ if t.kind == TokenKind::Identifier => {
                let (name, tok) = self.expect_identifier()?;
                if self.is("(") {
                    let args = self.parse_args()?;
                    return Ok(Expr {
                        kind: ExprKind::Call { receiver: None, name, name_tok: tok, args },
                        span: self.finish(start),
                    });
                }
                Ok(Expr { kind: ExprKind::Name { name, tok }, span: self.finish(start) })
            }
            other => Err(self.error(format!("unexpected `{other}` in expression"))),
        }
    }
}
