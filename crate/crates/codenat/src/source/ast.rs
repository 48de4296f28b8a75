//! Syntax tree for a single Java method.
//!
//! Nodes carry token-index spans into the method's token stream (comments
//! included), which is what the transformation engine splices on. The tree
//! is deliberately shallow where operators never look: constructs outside
//! the structured subset become [`StmtKind::Opaque`] statements whose span
//! still covers their tokens exactly, so rendering and region bookkeeping
//! stay faithful while no operator matches inside them.

/// Token-index range, end exclusive. Indices refer to the full token stream
/// of the method, comments included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn contains(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

/// A parsed method (or constructor) declaration.
#[derive(Debug, Clone)]
pub struct MethodAst {
    pub name: String,
    pub params: Vec<Param>,
    /// None for abstract/native declarations ending in `;`.
    pub body: Option<Block>,
    pub span: Span,
}

/// Formal parameter: declared type tokens plus the name.
#[derive(Debug, Clone)]
pub struct Param {
    pub type_span: Span,
    pub name: String,
    pub name_tok: usize,
    /// C-style array dimensions after the name (`int a[]`).
    pub extra_dims: usize,
}

#[derive(Debug, Clone)]
pub struct Block {
    pub statements: Vec<Stmt>,
    /// Covers the braces.
    pub span: Span,
}

#[derive(Debug, Clone)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub enum StmtKind {
    VarDecl(VarDecl),
    Expr(Expr),
    If(IfStmt),
    While(WhileStmt),
    DoWhile(DoWhileStmt),
    For(ForStmt),
    ForEach(ForEachStmt),
    Switch(SwitchStmt),
    Return(Option<Expr>),
    Throw(Expr),
    Break(Option<String>),
    Continue(Option<String>),
    Block(Block),
    Try(TryStmt),
    Labeled(String, Box<Stmt>),
    Sync(Expr, Block),
    Assert(Expr, Option<Expr>),
    Empty,
    /// Anything outside the structured subset; span-only.
    Opaque,
}

/// Local variable declaration. `prefix_span` covers modifiers plus the
/// declared type, exactly as written.
#[derive(Debug, Clone)]
pub struct VarDecl {
    pub prefix_span: Span,
    pub declarators: Vec<Declarator>,
}

#[derive(Debug, Clone)]
pub struct Declarator {
    pub name: String,
    pub name_tok: usize,
    /// C-style array dimensions after the name (`int a[]`).
    pub extra_dims: usize,
    pub init: Option<Expr>,
}

#[derive(Debug, Clone)]
pub struct IfStmt {
    pub cond: Expr,
    pub then_branch: Box<Stmt>,
    /// Token index of the `else` keyword when present.
    pub else_tok: Option<usize>,
    pub else_branch: Option<Box<Stmt>>,
}

#[derive(Debug, Clone)]
pub struct WhileStmt {
    pub cond: Expr,
    pub body: Box<Stmt>,
}

#[derive(Debug, Clone)]
pub struct DoWhileStmt {
    pub body: Box<Stmt>,
    pub cond: Expr,
}

#[derive(Debug, Clone)]
pub struct ForStmt {
    pub init: Option<ForInit>,
    pub cond: Option<Expr>,
    pub update: Vec<Expr>,
    pub body: Box<Stmt>,
    /// Token indexes of `(`, the two `;`, and `)` in the header.
    pub lparen: usize,
    pub semi1: usize,
    pub semi2: usize,
    pub rparen: usize,
}

#[derive(Debug, Clone)]
pub enum ForInit {
    Decl(VarDecl),
    Exprs(Vec<Expr>),
}

#[derive(Debug, Clone)]
pub struct ForEachStmt {
    /// Covers `Type name` before the `:`.
    pub var_span: Span,
    pub iterable: Expr,
    pub body: Box<Stmt>,
}

#[derive(Debug, Clone)]
pub struct SwitchStmt {
    pub selector: Expr,
    pub cases: Vec<SwitchCase>,
    /// Token indexes of the braces.
    pub lbrace: usize,
    pub rbrace: usize,
}

#[derive(Debug, Clone)]
pub struct SwitchCase {
    pub labels: Vec<CaseLabel>,
    pub body: Vec<Stmt>,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub enum CaseLabel {
    Expr(Expr),
    Default,
}

#[derive(Debug, Clone)]
pub struct TryStmt {
    /// Resource clause span when present (`(...)` after `try`).
    pub resources: Option<Span>,
    pub body: Block,
    pub catches: Vec<CatchClause>,
    pub finally: Option<Block>,
}

#[derive(Debug, Clone)]
pub struct CatchClause {
    pub param_span: Span,
    pub body: Block,
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    /// Identifier reference (also `this`/`super` as bare primaries).
    Name { name: String, tok: usize },
    Literal { tok: usize },
    Binary { op: String, op_tok: usize, lhs: Box<Expr>, rhs: Box<Expr> },
    Unary { op: String, operand: Box<Expr>, prefix: bool },
    Assign { op: String, op_tok: usize, lhs: Box<Expr>, rhs: Box<Expr> },
    Ternary { cond: Box<Expr>, then_expr: Box<Expr>, else_expr: Box<Expr> },
    Call { receiver: Option<Box<Expr>>, name: String, name_tok: usize, args: Vec<Expr> },
    Field { object: Box<Expr>, name: String, name_tok: usize },
    Index { array: Box<Expr>, index: Box<Expr> },
    Paren(Box<Expr>),
    Cast { operand: Box<Expr> },
    InstanceOf { operand: Box<Expr> },
    New,
    Lambda,
    MethodRef,
    ArrayInit { elements: Vec<Expr> },
}

impl Expr {
    /// Strips redundant grouping.
    pub fn unwrap_parens(&self) -> &Expr {
        match &self.kind {
            ExprKind::Paren(inner) => inner.unwrap_parens(),
            _ => self,
        }
    }

    /// The identifier when this expression is a bare name.
    pub fn as_name(&self) -> Option<&str> {
        match &self.kind {
            ExprKind::Name { name, .. } => Some(name),
            _ => None,
        }
    }
}

/// Walks every statement in a block tree, depth first, calling `f` on each.
pub fn walk_statements<'a>(block: &'a Block, f: &mut impl FnMut(&'a Stmt)) {
    for stmt in &block.statements {
        walk_stmt(stmt, f);
    }
}

fn walk_stmt<'a>(stmt: &'a Stmt, f: &mut impl FnMut(&'a Stmt)) {
    f(stmt);
    match &stmt.kind {
        StmtKind::If(s) => {
            walk_stmt(&s.then_branch, f);
            if let Some(e) = &s.else_branch {
                walk_stmt(e, f);
            }
        }
        StmtKind::While(s) => walk_stmt(&s.body, f),
        StmtKind::DoWhile(s) => walk_stmt(&s.body, f),
        StmtKind::For(s) => walk_stmt(&s.body, f),
        StmtKind::ForEach(s) => walk_stmt(&s.body, f),
        StmtKind::Switch(s) => {
            for case in &s.cases {
                for st in &case.body {
                    walk_stmt(st, f);
                }
            }
        }
        StmtKind::Block(b) => walk_statements(b, f),
        StmtKind::Try(t) => {
            walk_statements(&t.body, f);
            for c in &t.catches {
                walk_statements(&c.body, f);
            }
            if let Some(fin) = &t.finally {
                walk_statements(fin, f);
            }
        }
        StmtKind::Labeled(_, inner) => walk_stmt(inner, f),
        StmtKind::Sync(_, b) => walk_statements(b, f),
        _ => {}
    }
}

/// Walks every block in the tree (the blocks themselves, for adjacency
/// analyses such as statement merging and swapping).
pub fn walk_blocks<'a>(block: &'a Block, f: &mut impl FnMut(&'a Block)) {
    f(block);
    for stmt in &block.statements {
        walk_blocks_stmt(stmt, f);
    }
}

fn walk_blocks_stmt<'a>(stmt: &'a Stmt, f: &mut impl FnMut(&'a Block)) {
    match &stmt.kind {
        StmtKind::If(s) => {
            walk_blocks_stmt(&s.then_branch, f);
            if let Some(e) = &s.else_branch {
                walk_blocks_stmt(e, f);
            }
        }
        StmtKind::While(s) => walk_blocks_stmt(&s.body, f),
        StmtKind::DoWhile(s) => walk_blocks_stmt(&s.body, f),
        StmtKind::For(s) => walk_blocks_stmt(&s.body, f),
        StmtKind::ForEach(s) => walk_blocks_stmt(&s.body, f),
        StmtKind::Switch(s) => {
            for case in &s.cases {
                for st in &case.body {
                    walk_blocks_stmt(st, f);
                }
            }
        }
        StmtKind::Block(b) => walk_blocks(b, f),
        StmtKind::Try(t) => {
            walk_blocks(&t.body, f);
            for c in &t.catches {
                walk_blocks(&c.body, f);
            }
            if let Some(fin) = &t.finally {
                walk_blocks(fin, f);
            }
        }
        StmtKind::Labeled(_, inner) => walk_blocks_stmt(inner, f),
        StmtKind::Sync(_, b) => walk_blocks(b, f),
        _ => {}
    }
}

/// The expressions a statement holds directly (conditions, initializers,
/// updates, selector, labels, operands) — without descending into nested
/// statements, which [`walk_statements`] already enumerates.
pub fn stmt_exprs<'a>(stmt: &'a Stmt) -> Vec<&'a Expr> {
    let mut out = Vec::new();
    match &stmt.kind {
        StmtKind::VarDecl(d) => {
            out.extend(d.declarators.iter().filter_map(|dd| dd.init.as_ref()));
        }
        StmtKind::Expr(e) | StmtKind::Throw(e) => out.push(e),
        StmtKind::Return(e) => out.extend(e.as_ref()),
        StmtKind::If(s) => out.push(&s.cond),
        StmtKind::While(s) => out.push(&s.cond),
        StmtKind::DoWhile(s) => out.push(&s.cond),
        StmtKind::For(s) => {
            match &s.init {
                Some(ForInit::Decl(d)) => {
                    out.extend(d.declarators.iter().filter_map(|dd| dd.init.as_ref()));
                }
                Some(ForInit::Exprs(es)) => out.extend(es.iter()),
                None => {}
            }
            out.extend(s.cond.as_ref());
            out.extend(s.update.iter());
        }
        StmtKind::ForEach(s) => out.push(&s.iterable),
        StmtKind::Switch(s) => {
            out.push(&s.selector);
            for case in &s.cases {
                for label in &case.labels {
                    if let CaseLabel::Expr(e) = label {
                        out.push(e);
                    }
                }
            }
        }
        StmtKind::Sync(e, _) => out.push(e),
        StmtKind::Assert(e, m) => {
            out.push(e);
            out.extend(m.as_ref());
        }
        _ => {}
    }
    out
}

/// Walks an expression tree, calling `f` on every node.
pub fn walk_expr<'a>(expr: &'a Expr, f: &mut impl FnMut(&'a Expr)) {
    f(expr);
    match &expr.kind {
        ExprKind::Binary { lhs, rhs, .. } | ExprKind::Assign { lhs, rhs, .. } => {
            walk_expr(lhs, f);
            walk_expr(rhs, f);
        }
        ExprKind::Unary { operand, .. } => walk_expr(operand, f),
        ExprKind::Ternary { cond, then_expr, else_expr } => {
            walk_expr(cond, f);
            walk_expr(then_expr, f);
            walk_expr(else_expr, f);
        }
        ExprKind::Call { receiver, args, .. } => {
            if let Some(r) = receiver {
                walk_expr(r, f);
            }
            for a in args {
                walk_expr(a, f);
            }
        }
        ExprKind::Field { object, .. } => walk_expr(object, f),
        ExprKind::Index { array, index } => {
            walk_expr(array, f);
            walk_expr(index, f);
        }
        ExprKind::Paren(inner) | ExprKind::Cast { operand: inner }
        | ExprKind::InstanceOf { operand: inner } => walk_expr(inner, f),
        ExprKind::ArrayInit { elements } => {
            for e in elements {
                walk_expr(e, f);
            }
        }
        _ => {}
    }
}
