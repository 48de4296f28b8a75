//! Statement-level operators: loop conversions, if/switch restructuring,
//! statement swapping, and conditional-expression conversions.

use crate::source::ast::{walk_blocks, walk_statements, CaseLabel, ForInit};
use crate::source::{Edit, Expr, ExprKind, Span, SourceMethod, Stmt, StmtKind};

use super::analysis::{is_pure_span, read_write, span_contains_token, stmt_decl_names};
use super::{find_pair, find_stmt, Planned};

fn stmt_sites(method: &SourceMethod, pred: impl Fn(&Stmt) -> bool) -> Vec<Span> {
    let mut out = Vec::new();
    if let Some(body) = &method.ast.body {
        walk_statements(body, &mut |stmt| {
            if pred(stmt) {
                out.push(stmt.span);
            }
        });
    }
    out.sort_by_key(|s| (s.start, s.end));
    out
}

fn single_token(method: &SourceMethod, span: Span) -> bool {
    super::analysis::span_tokens(method, span).count() == 1
}

/// Condition text for a synthesized `!…`: single tokens and already
/// parenthesized conditions negate bare, anything else gets wrapped.
fn negate(method: &SourceMethod, cond: &Expr) -> String {
    let text = method.span_text(cond.span);
    if single_token(method, cond.span) || matches!(cond.kind, ExprKind::Paren(_)) {
        format!("!{text}")
    } else {
        format!("!({text})")
    }
}

/// Renders a branch as a block: blocks pass through, single statements are
/// wrapped so dangling-else cannot rebind.
fn as_block(method: &SourceMethod, stmt: &Stmt) -> String {
    match &stmt.kind {
        StmtKind::Block(_) => method.span_text(stmt.span).to_string(),
        _ => format!("{{ {} }}", method.span_text(stmt.span)),
    }
}

/// Statement list text inside a block (between the braces), or the bare
/// statement when the body is unbraced.
fn inner_text<'m>(method: &'m SourceMethod, stmt: &Stmt) -> &'m str {
    match &stmt.kind {
        StmtKind::Block(b) => method.span_text(Span::new(b.span.start + 1, b.span.end - 1)),
        _ => method.span_text(stmt.span),
    }
    .trim()
}

/// Text of a statement without its trailing `;`.
fn no_semi<'m>(method: &'m SourceMethod, stmt: &Stmt) -> &'m str {
    method.span_text(Span::new(stmt.span.start, stmt.span.end - 1)).trim_end()
}

/// `for (init; cond; upd) body` → `init; while (cond) { body upd; }`.
pub(crate) mod for2while {
    use super::*;

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| matches!(s.kind, StmtKind::For(_)))
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let StmtKind::For(f) = &stmt.kind else { return Planned::Inapplicable };
        // `continue` would skip the update once it moves to the body's end.
        if span_contains_token(method, f.body.span, "continue") {
            return Planned::Inapplicable;
        }
        let mut init_stmts: Vec<String> = Vec::new();
        match &f.init {
            None => {}
            Some(ForInit::Decl(_)) => {
                let text = method.span_text(Span::new(f.lparen + 1, f.semi1));
                init_stmts.push(format!("{text};"));
            }
            Some(ForInit::Exprs(es)) => {
                for e in es {
                    init_stmts.push(format!("{};", method.span_text(e.span)));
                }
            }
        }
        let cond = match &f.cond {
            Some(c) => method.span_text(c.span).to_string(),
            None => "true".to_string(),
        };
        let updates: Vec<String> =
            f.update.iter().map(|u| format!("{};", method.span_text(u.span))).collect();
        let body_inner = inner_text(method, &f.body);
        let mut pieces = init_stmts;
        let mut body = String::new();
        if !body_inner.is_empty() {
            body.push_str(body_inner);
            body.push(' ');
        }
        body.push_str(&updates.join(" "));
        pieces.push(format!("while ({cond}) {{ {} }}", body.trim()));
        let text = pieces.join(" ");
        let edits = vec![Edit::new(method.byte_range_of(stmt.span), text)];

        // Hoisting a header declaration widens its scope; a later declaration
        // of the same name in the enclosing block would now collide.
        if let Some(ForInit::Decl(d)) = &f.init {
            let declared: Vec<&str> =
                d.declarators.iter().map(|dd| dd.name.as_str()).collect();
            if shadows_later_decl(method, stmt.span, &declared) {
                return Planned::Conflict(edits);
            }
        }
        Planned::Edits(edits)
    }

    fn shadows_later_decl(method: &SourceMethod, loop_span: Span, names: &[&str]) -> bool {
        let mut found = false;
        if let Some(body) = &method.ast.body {
            walk_blocks(body, &mut |block| {
                let Some(pos) =
                    block.statements.iter().position(|s| s.span == loop_span)
                else {
                    return;
                };
                for later in &block.statements[pos + 1..] {
                    if let StmtKind::VarDecl(d) = &later.kind {
                        if d.declarators.iter().any(|dd| names.contains(&dd.name.as_str()))
                        {
                            found = true;
                        }
                    }
                }
            });
        }
        found
    }
}

/// `i = 0; while (cond) { body i++; }` → `for (i = 0; cond; i++) { body }`.
pub(crate) mod while2for {
    use super::*;

    /// The loop variable written by a candidate update statement.
    fn update_target(stmt: &Stmt) -> Option<&str> {
        if let StmtKind::Expr(e) = &stmt.kind {
            match &e.kind {
                ExprKind::Unary { op, operand, .. } if op == "++" || op == "--" => {
                    if let ExprKind::Name { name, .. } = &operand.kind {
                        return Some(name);
                    }
                }
                ExprKind::Assign { lhs, .. } => {
                    if let ExprKind::Name { name, .. } = &lhs.kind {
                        return Some(name);
                    }
                }
                _ => {}
            }
        }
        None
    }

    /// `prev` must be `name = expr;` for the same name the body updates.
    fn init_assigns(prev: &Stmt, name: &str) -> bool {
        if let StmtKind::Expr(e) = &prev.kind {
            if let ExprKind::Assign { op, lhs, .. } = &e.kind {
                if op == "=" {
                    if let ExprKind::Name { name: n, .. } = &lhs.kind {
                        return n == name;
                    }
                }
            }
        }
        false
    }

    fn pair_matches(pair: &[Stmt]) -> bool {
        let StmtKind::While(w) = &pair[1].kind else { return false };
        let StmtKind::Block(b) = &w.body.kind else { return false };
        let Some(last) = b.statements.last() else { return false };
        let Some(var) = update_target(last) else { return false };
        init_assigns(&pair[0], var)
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        let mut out = Vec::new();
        if let Some(body) = &method.ast.body {
            walk_blocks(body, &mut |block| {
                for pair in block.statements.windows(2) {
                    if pair_matches(pair) {
                        out.push(Span::new(pair[0].span.start, pair[1].span.end));
                    }
                }
            });
        }
        out.sort_by_key(|s| (s.start, s.end));
        out
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some((block, i)) = find_pair(method, span) else {
            return Planned::Inapplicable;
        };
        let (init, while_stmt) = (&block.statements[i], &block.statements[i + 1]);
        let StmtKind::While(w) = &while_stmt.kind else { return Planned::Inapplicable };
        let StmtKind::Block(b) = &w.body.kind else { return Planned::Inapplicable };
        let Some(update) = b.statements.last() else { return Planned::Inapplicable };
        // In while-form a `continue` skips the update; in for-form it would
        // run it. Any continue in the body changes meaning.
        if span_contains_token(method, w.body.span, "continue") {
            return Planned::Inapplicable;
        }
        let rest = method
            .span_text(Span::new(b.span.start + 1, update.span.start))
            .trim();
        let text = format!(
            "for ({}; {}; {}) {{ {} }}",
            no_semi(method, init),
            method.span_text(w.cond.span),
            no_semi(method, update),
            rest
        );
        Planned::Edits(vec![Edit::new(method.byte_range_of(span), text)])
    }
}

/// `if (a) X else if (b) Y …` → `if (a) X else { if (b) Y … }`, applied to
/// every link of the chain.
pub(crate) mod else_if2if {
    use super::*;

    fn is_chain_head(stmt: &Stmt) -> bool {
        if let StmtKind::If(s) = &stmt.kind {
            matches!(
                s.else_branch.as_deref(),
                Some(Stmt { kind: StmtKind::If(_), .. })
            )
        } else {
            false
        }
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        // Heads only: ifs that are themselves an else-branch belong to an
        // enclosing chain and are rewritten with it.
        let mut else_spans = Vec::new();
        if let Some(body) = &method.ast.body {
            walk_statements(body, &mut |stmt| {
                if let StmtKind::If(s) = &stmt.kind {
                    if let Some(e) = &s.else_branch {
                        else_spans.push(e.span);
                    }
                }
            });
        }
        stmt_sites(method, |s| is_chain_head(s) && !else_spans.contains(&s.span))
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        if !is_chain_head(stmt) {
            return Planned::Inapplicable;
        }
        let mut edits = Vec::new();
        let mut cur = stmt;
        loop {
            let StmtKind::If(s) = &cur.kind else { break };
            let (Some(else_tok), Some(else_branch)) = (s.else_tok, &s.else_branch) else {
                break;
            };
            if !matches!(else_branch.kind, StmtKind::If(_)) {
                break;
            }
            // Open a block right after `else`; close it at the chain's end
            // (every link's else-branch extends to the same final token).
            let open = method.tokens[else_tok].byte_range().end;
            let close = method.byte_range_of(else_branch.span).end;
            edits.push(Edit::new(open..open, " {".to_string()));
            edits.push(Edit::new(close..close, " }".to_string()));
            cur = else_branch;
        }
        if edits.is_empty() {
            Planned::Inapplicable
        } else {
            Planned::Edits(edits)
        }
    }
}

/// `switch (a) { case 60: … default: … }` → an `if`/`else if`/`else` chain.
pub(crate) mod switch2if {
    use super::*;
    use crate::source::TokenKind;

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| matches!(s.kind, StmtKind::Switch(_)))
    }

    fn label_literal_text<'m>(method: &'m SourceMethod, label: &CaseLabel) -> Option<&'m str> {
        if let CaseLabel::Expr(e) = label {
            if let ExprKind::Literal { tok } = &e.kind {
                let text = method.tokens[*tok].text.as_str();
                if method.tokens[*tok].kind == TokenKind::Literal && !text.starts_with('"') {
                    return Some(text);
                }
            }
        }
        None
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let StmtKind::Switch(sw) = &stmt.kind else { return Planned::Inapplicable };
        if sw.cases.is_empty() || !is_pure_span(method, sw.selector.span) {
            return Planned::Inapplicable;
        }
        let sel_raw = method.span_text(sw.selector.span);
        let sel = if single_token(method, sw.selector.span)
            || matches!(sw.selector.kind, ExprKind::Paren(_))
        {
            sel_raw.to_string()
        } else {
            format!("({sel_raw})")
        };
        let n = sw.cases.len();
        let mut arms: Vec<(Option<String>, String)> = Vec::new();
        for (i, case) in sw.cases.iter().enumerate() {
            let is_last = i + 1 == n;
            let is_default = case.labels.iter().any(|l| matches!(l, CaseLabel::Default));
            if is_default {
                // An earlier default would shadow later cases in the chain.
                if !is_last || case.labels.len() > 1 {
                    return Planned::Inapplicable;
                }
            }
            // Termination: every non-final case must end in break/return/throw
            // (no fall-through); a trailing break is dropped in translation.
            let trailing_break =
                matches!(case.body.last(), Some(Stmt { kind: StmtKind::Break(None), .. }));
            let terminated = trailing_break
                || matches!(
                    case.body.last(),
                    Some(Stmt { kind: StmtKind::Return(_) | StmtKind::Throw(_), .. })
                );
            if !is_last && !terminated {
                return Planned::Inapplicable;
            }
            // A break anywhere but the trailing statement targets this switch
            // from nested control flow and cannot be translated.
            let body_span = match (case.body.first(), case.body.last()) {
                (Some(f), Some(l)) => Span::new(f.span.start, l.span.end),
                _ => return Planned::Inapplicable, // empty case body
            };
            let break_tokens = super::super::analysis::span_tokens(method, body_span)
                .filter(|(_, t)| t.text == "break")
                .count();
            if break_tokens > usize::from(trailing_break) {
                return Planned::Inapplicable;
            }
            let kept_end = if trailing_break {
                case.body[case.body.len() - 1].span.start
            } else {
                body_span.end
            };
            let body_text = if case.body.len() == 1 && trailing_break {
                String::new()
            } else {
                method.span_text(Span::new(body_span.start, kept_end)).trim().to_string()
            };
            let cond = if is_default {
                None
            } else {
                let mut parts = Vec::new();
                for label in &case.labels {
                    match label_literal_text(method, label) {
                        Some(text) => parts.push(format!("{sel} == {text}")),
                        None => return Planned::Inapplicable,
                    }
                }
                Some(parts.join(" || "))
            };
            arms.push((cond, body_text));
        }
        if arms.iter().all(|(c, _)| c.is_none()) {
            return Planned::Inapplicable; // default-only switch
        }
        let mut text = String::new();
        for (i, (cond, body)) in arms.iter().enumerate() {
            match cond {
                Some(c) if i == 0 => text.push_str(&format!("if ({c}) {{ {body} }}")),
                Some(c) => text.push_str(&format!(" else if ({c}) {{ {body} }}")),
                None => text.push_str(&format!(" else {{ {body} }}")),
            }
        }
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }
}

/// Swap two adjacent statements with no control or data dependency.
pub(crate) mod swap_statement {
    use super::*;

    fn swappable_kind(stmt: &Stmt) -> bool {
        matches!(stmt.kind, StmtKind::VarDecl(_) | StmtKind::Expr(_))
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        let mut out = Vec::new();
        if let Some(body) = &method.ast.body {
            walk_blocks(body, &mut |block| {
                for pair in block.statements.windows(2) {
                    if swappable_kind(&pair[0]) && swappable_kind(&pair[1]) {
                        out.push(Span::new(pair[0].span.start, pair[1].span.end));
                    }
                }
            });
        }
        out.sort_by_key(|s| (s.start, s.end));
        out
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some((block, i)) = find_pair(method, span) else {
            return Planned::Inapplicable;
        };
        let (a, b) = (&block.statements[i], &block.statements[i + 1]);
        let rw_a = read_write(method, a.span, &stmt_decl_names(a));
        let rw_b = read_write(method, b.span, &stmt_decl_names(b));
        for rw in [&rw_a, &rw_b] {
            if rw.has_call || rw.has_field_write || rw.has_array_store {
                return Planned::Inapplicable;
            }
        }
        if !rw_a.independent(&rw_b) {
            return Planned::Inapplicable;
        }
        let text_a = method.span_text(a.span).to_string();
        let text_b = method.span_text(b.span).to_string();
        Planned::Edits(vec![
            Edit::new(method.byte_range_of(a.span), text_b),
            Edit::new(method.byte_range_of(b.span), text_a),
        ])
    }
}

/// `if (c) A else B` → `if (!c) B else A`.
pub(crate) mod reverse_if {
    use super::*;

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| {
            matches!(&s.kind, StmtKind::If(i) if i.else_branch.is_some())
        })
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let StmtKind::If(s) = &stmt.kind else { return Planned::Inapplicable };
        let Some(else_branch) = &s.else_branch else { return Planned::Inapplicable };
        let text = format!(
            "if ({}) {} else {}",
            negate(method, &s.cond),
            as_block(method, else_branch),
            as_block(method, &s.then_branch)
        );
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }
}

/// `if (c) { return a; } else { return b; }` → `return c ? a : b;` (and the
/// same-target assignment form).
pub(crate) mod if2cond_exp {
    use super::*;

    /// The single statement of a branch (directly, or a one-statement block).
    fn single_stmt(stmt: &Stmt) -> Option<&Stmt> {
        match &stmt.kind {
            StmtKind::Block(b) if b.statements.len() == 1 => Some(&b.statements[0]),
            StmtKind::Block(_) => None,
            _ => Some(stmt),
        }
    }

    enum Form<'a> {
        Return(&'a Expr, &'a Expr),
        Assign { lhs: Span, op: &'a str, e1: &'a Expr, e2: &'a Expr },
    }

    fn form<'a>(method: &SourceMethod, s: &'a crate::source::ast::IfStmt) -> Option<Form<'a>> {
        let then_stmt = single_stmt(&s.then_branch)?;
        let else_stmt = single_stmt(s.else_branch.as_deref()?)?;
        match (&then_stmt.kind, &else_stmt.kind) {
            (StmtKind::Return(Some(e1)), StmtKind::Return(Some(e2))) => {
                Some(Form::Return(e1, e2))
            }
            (StmtKind::Expr(a), StmtKind::Expr(b)) => {
                let ExprKind::Assign { op: op1, lhs: l1, rhs: r1, .. } = &a.kind else {
                    return None;
                };
                let ExprKind::Assign { op: op2, lhs: l2, rhs: r2, .. } = &b.kind else {
                    return None;
                };
                // A bare assignment on the ternary's else side would not
                // parse; keep both sides assignment-free.
                if matches!(r1.kind, ExprKind::Assign { .. })
                    || matches!(r2.kind, ExprKind::Assign { .. })
                {
                    return None;
                }
                let t1: Vec<_> = super::super::analysis::span_tokens(method, l1.span)
                    .map(|(_, t)| t.text.as_str())
                    .collect();
                let t2: Vec<_> = super::super::analysis::span_tokens(method, l2.span)
                    .map(|(_, t)| t.text.as_str())
                    .collect();
                if op1 == op2 && t1 == t2 {
                    Some(Form::Assign { lhs: l1.span, op: op1, e1: r1, e2: r2 })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |stmt| {
            matches!(&stmt.kind, StmtKind::If(s) if form(method, s).is_some())
        })
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let StmtKind::If(s) = &stmt.kind else { return Planned::Inapplicable };
        let Some(f) = form(method, s) else { return Planned::Inapplicable };
        let cond_raw = method.span_text(s.cond.span);
        let cond = if single_token(method, s.cond.span)
            || matches!(s.cond.kind, ExprKind::Paren(_))
        {
            cond_raw.to_string()
        } else {
            format!("({cond_raw})")
        };
        let text = match f {
            Form::Return(e1, e2) => format!(
                "return {cond} ? {} : {};",
                method.span_text(e1.span),
                method.span_text(e2.span)
            ),
            Form::Assign { lhs, op, e1, e2 } => format!(
                "{} {op} {cond} ? {} : {};",
                method.span_text(lhs),
                method.span_text(e1.span),
                method.span_text(e2.span)
            ),
        };
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }
}

/// `return c ? a : b;` → `if (c) { return a; } else { return b; }` (and the
/// assignment form).
pub(crate) mod cond_exp2if {
    use super::*;

    enum Form<'a> {
        Return(&'a Expr),
        Assign { lhs: Span, op: &'a str, ternary: &'a Expr },
    }

    fn form<'a>(stmt: &'a Stmt) -> Option<Form<'a>> {
        match &stmt.kind {
            StmtKind::Return(Some(e)) if matches!(e.unwrap_parens().kind, ExprKind::Ternary { .. }) => {
                Some(Form::Return(e.unwrap_parens()))
            }
            StmtKind::Expr(e) => {
                if let ExprKind::Assign { op, lhs, rhs, .. } = &e.kind {
                    if op == "=" && matches!(rhs.unwrap_parens().kind, ExprKind::Ternary { .. })
                    {
                        if let ExprKind::Name { .. } = &lhs.kind {
                            return Some(Form::Assign {
                                lhs: lhs.span,
                                op,
                                ternary: rhs.unwrap_parens(),
                            });
                        }
                    }
                }
                None
            }
            _ => None,
        }
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| form(s).is_some())
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let Some(f) = form(stmt) else { return Planned::Inapplicable };
        let (ternary, render): (&Expr, Box<dyn Fn(&str, &str, &str) -> String>) = match f {
            Form::Return(t) => (
                t,
                Box::new(|c: &str, a: &str, b: &str| {
                    format!("if ({c}) {{ return {a}; }} else {{ return {b}; }}")
                }),
            ),
            Form::Assign { lhs, op, ternary } => {
                let lhs_text = method.span_text(lhs).to_string();
                let op = op.to_string();
                (
                    ternary,
                    Box::new(move |c: &str, a: &str, b: &str| {
                        format!(
                            "if ({c}) {{ {lhs_text} {op} {a}; }} else {{ {lhs_text} {op} {b}; }}"
                        )
                    }),
                )
            }
        };
        let ExprKind::Ternary { cond, then_expr, else_expr } = &ternary.kind else {
            return Planned::Inapplicable;
        };
        // The if-parens already group; drop one redundant paren layer.
        let cond_text = match &cond.kind {
            ExprKind::Paren(inner) => method.span_text(inner.span),
            _ => method.span_text(cond.span),
        };
        let text = render(
            cond_text,
            method.span_text(then_expr.span),
            method.span_text(else_expr.span),
        );
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }
}

/// `if (c1 && c2) { B }` → `if (c1) { if (c2) { B } }`.
pub(crate) mod dividing_composed_if {
    use super::*;

    fn composed(stmt: &Stmt) -> Option<(&str, &crate::source::ast::IfStmt)> {
        if let StmtKind::If(s) = &stmt.kind {
            if let ExprKind::Binary { op, .. } = &s.cond.unwrap_parens().kind {
                if op == "&&" || op == "||" {
                    return Some((op, s));
                }
            }
        }
        None
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        let _ = method;
        stmt_sites(method, |s| composed(s).is_some())
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let Some((op, s)) = composed(stmt) else { return Planned::Inapplicable };
        // Nesting preserves `&&` short-circuiting exactly; `||` and a
        // present else would both require duplicating code.
        if op == "||" || s.else_branch.is_some() {
            return Planned::Inapplicable;
        }
        let mut conds = Vec::new();
        flatten_and(method, s.cond.unwrap_parens(), &mut conds);
        let mut text = format!("{{ {} }}", inner_text(method, &s.then_branch));
        for cond in conds.iter().rev() {
            text = format!("{{ if ({cond}) {text} }}");
        }
        // The outermost wrapper braces are the if-statement itself.
        let text = text[1..text.len() - 1].trim().to_string();
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }

    fn flatten_and<'m>(method: &'m SourceMethod, e: &Expr, out: &mut Vec<&'m str>) {
        if let ExprKind::Binary { op, lhs, rhs, .. } = &e.kind {
            if op == "&&" {
                flatten_and(method, lhs.unwrap_parens(), out);
                out.push(method.span_text(rhs.unwrap_parens().span));
                return;
            }
        }
        out.push(method.span_text(e.span));
    }
}

#[cfg(test)]
mod tests {
    use super::super::{applicable_sites, apply, OperatorId, TransformationStatus};
    use crate::source::{token_equal, BuggyRegion, SourceMethod};

    fn method(src: &str) -> SourceMethod {
        SourceMethod::parse("t", src, BuggyRegion::new(1, 99)).unwrap()
    }

    fn apply_first(op: OperatorId, m: &SourceMethod) -> super::super::TransformationRecord {
        let sites = applicable_sites(op, m, None);
        assert!(!sites.is_empty(), "no sites for {op}");
        apply(op, m, &sites[0], None, &Default::default())
    }

    #[test]
    fn for2while_moves_init_and_update() {
        let m = method("void f(int sum) {\n    int i;\n    for (i = 0; i < 10; i++) {\n        sum += i;\n    }\n}\n");
        let rec = apply_first(OperatorId::For2While, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(int sum) {\n    int i;\n    i = 0; while (i < 10) { sum += i; i++; }\n}\n"
        ));
    }

    #[test]
    fn for2while_declared_init_hoists() {
        let m = method("int f(int n) {\n    int sum = 0;\n    for (int i = 0; i < n; i++) {\n        sum += i;\n    }\n    return sum;\n}\n");
        let rec = apply_first(OperatorId::For2While, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "int f(int n) {\n    int sum = 0;\n    int i = 0; while (i < n) { sum += i; i++; }\n    return sum;\n}\n"
        ));
    }

    #[test]
    fn for2while_continue_is_discarded() {
        let m = method("void f(int n) {\n    for (int i = 0; i < n; i++) {\n        if (i == 2) {\n            continue;\n        }\n        g(i);\n    }\n}\n");
        let rec = apply_first(OperatorId::For2While, &m);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }

    #[test]
    fn for2while_shadowing_hoist_conflicts() {
        let m = method("void f(int n) {\n    for (int i = 0; i < n; i++) {\n        g(i);\n    }\n    int i = 7;\n    g(i);\n}\n");
        let rec = apply_first(OperatorId::For2While, &m);
        assert_eq!(rec.status, TransformationStatus::DiscardedConflict);
    }

    #[test]
    fn while2for_builds_header_from_neighbors() {
        let m = method("void f(int sum) {\n    int i;\n    i = 0;\n    while (i < 10) {\n        sum += i;\n        i++;\n    }\n}\n");
        let rec = apply_first(OperatorId::While2For, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(int sum) {\n    int i;\n    for (i = 0; i < 10; i++) {\n        sum += i;\n    }\n}\n"
        ));
    }

    #[test]
    fn while2for_without_update_pattern_has_no_site() {
        let m = method("void f(int i) {\n    i = 0;\n    while (g(i)) {\n        h();\n    }\n}\n");
        assert!(applicable_sites(OperatorId::While2For, &m, None).is_empty());
    }

    #[test]
    fn while2for_continue_is_discarded() {
        let m = method("void f(int i, int n) {\n    i = 0;\n    while (i < n) {\n        if (h(i)) {\n            continue;\n        }\n        i++;\n    }\n}\n");
        let rec = apply_first(OperatorId::While2For, &m);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }

    #[test]
    fn else_if2if_wraps_the_whole_chain() {
        let m = method("void f(int a) {\n    if (a < 80) {\n        g();\n    } else if (a < 100) {\n        h();\n    } else {\n        k();\n    }\n}\n");
        let rec = apply_first(OperatorId::ElseIf2If, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(int a) {\n    if (a < 80) {\n        g();\n    } else { if (a < 100) {\n        h();\n    } else {\n        k();\n    } }\n}\n"
        ));
        // One site: the chain head, not the inner link.
        assert_eq!(applicable_sites(OperatorId::ElseIf2If, &m, None).len(), 1);
    }

    #[test]
    fn switch2if_translates_cases_and_default() {
        let m = method("void f(int a, int b) {\n    switch (a) {\n        case 60:\n            b = 1;\n            break;\n        default:\n            b = 2;\n    }\n}\n");
        let rec = apply_first(OperatorId::Switch2If, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(int a, int b) {\n    if (a == 60) { b = 1; } else { b = 2; }\n}\n"
        ));
    }

    #[test]
    fn switch2if_multi_label_and_return() {
        let m = method("int f(int a) {\n    switch (a) {\n        case 1:\n        case 2:\n            return 10;\n        case 3:\n            return 20;\n    }\n    return 0;\n}\n");
        let rec = apply_first(OperatorId::Switch2If, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "int f(int a) {\n    if (a == 1 || a == 2) { return 10; } else if (a == 3) { return 20; }\n    return 0;\n}\n"
        ));
    }

    #[test]
    fn switch2if_fall_through_is_discarded() {
        let m = method("void f(int a, int b) {\n    switch (a) {\n        case 1:\n            b = 1;\n        case 2:\n            b = 2;\n            break;\n    }\n}\n");
        let rec = apply_first(OperatorId::Switch2If, &m);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }

    #[test]
    fn switch2if_nested_break_is_discarded() {
        let m = method("void f(int a, int b) {\n    switch (a) {\n        case 1:\n            if (b > 0) {\n                break;\n            }\n            b = 1;\n            break;\n        default:\n            b = 2;\n    }\n}\n");
        let rec = apply_first(OperatorId::Switch2If, &m);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }

    #[test]
    fn switch2if_string_selector_is_discarded() {
        let m = method("void f(String a, int b) {\n    switch (a) {\n        case \"x\":\n            b = 1;\n            break;\n        default:\n            b = 2;\n    }\n}\n");
        let rec = apply_first(OperatorId::Switch2If, &m);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }

    #[test]
    fn swap_statement_swaps_independent_neighbors() {
        let m = method("void f(int a, int b, int c, int d) {\n    a = b + 10;\n    c = d + 1;\n}\n");
        let rec = apply_first(OperatorId::SwapStatement, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(int a, int b, int c, int d) {\n    c = d + 1;\n    a = b + 10;\n}\n"
        ));
    }

    #[test]
    fn swap_statement_guards() {
        // Data dependency: first writes what second reads.
        let dep = method("void f(int a, int b) {\n    a = 1;\n    b = a;\n}\n");
        let rec = apply_first(OperatorId::SwapStatement, &dep);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
        // Calls are never swapped.
        let call = method("void f(int a, int b) {\n    a = g();\n    b = 2;\n}\n");
        let rec = apply_first(OperatorId::SwapStatement, &call);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
        // Field writes and array stores are never swapped.
        let field = method("void f(A p, int b) {\n    p.x = 1;\n    b = 2;\n}\n");
        let rec = apply_first(OperatorId::SwapStatement, &field);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
        // Declaration order must hold: decl cannot move below a use.
        let decl = method("void f() {\n    int q = 1;\n    int r = q;\n}\n");
        let rec = apply_first(OperatorId::SwapStatement, &decl);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }

    #[test]
    fn reverse_if_negates_and_swaps() {
        let m = method("void f(boolean condition) {\n    if (condition) {\n        g();\n    } else {\n        h();\n    }\n}\n");
        let rec = apply_first(OperatorId::ReverseIf, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(boolean condition) {\n    if (!condition) {\n        h();\n    } else {\n        g();\n    }\n}\n"
        ));
    }

    #[test]
    fn reverse_if_wraps_compound_condition_and_chain() {
        let m = method("int f(int a, int b) {\n    if (a == 0 || b == 0) {\n        return 1;\n    } else if (a > b) {\n        return 2;\n    } else {\n        return 3;\n    }\n}\n");
        let rec = apply_first(OperatorId::ReverseIf, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "int f(int a, int b) {\n    if (!(a == 0 || b == 0)) { if (a > b) {\n        return 2;\n    } else {\n        return 3;\n    } } else {\n        return 1;\n    }\n}\n"
        ));
    }

    #[test]
    fn if2cond_exp_return_and_assign_forms() {
        let m = method("int f(boolean c, int a, int b) {\n    if (c) {\n        return a;\n    } else {\n        return b;\n    }\n}\n");
        let rec = apply_first(OperatorId::If2CondExp, &m);
        assert!(token_equal(
            &rec.transformed,
            "int f(boolean c, int a, int b) {\n    return c ? a : b;\n}\n"
        ));
        let assign = method("void f(boolean c, int x, int a, int b) {\n    if (c) {\n        x = a;\n    } else {\n        x = b;\n    }\n}\n");
        let rec = apply_first(OperatorId::If2CondExp, &assign);
        assert!(token_equal(
            &rec.transformed,
            "void f(boolean c, int x, int a, int b) {\n    x = c ? a : b;\n}\n"
        ));
        let multi = method("int f(int a, int b) {\n    if (a < b) {\n        return a;\n    } else {\n        return b;\n    }\n}\n");
        let rec = apply_first(OperatorId::If2CondExp, &multi);
        assert!(token_equal(
            &rec.transformed,
            "int f(int a, int b) {\n    return (a < b) ? a : b;\n}\n"
        ));
    }

    #[test]
    fn if2cond_exp_different_targets_have_no_site() {
        let m = method("void f(boolean c, int x, int y) {\n    if (c) {\n        x = 1;\n    } else {\n        y = 2;\n    }\n}\n");
        assert!(applicable_sites(OperatorId::If2CondExp, &m, None).is_empty());
    }

    #[test]
    fn cond_exp2if_return_and_assign_forms() {
        let m = method("int f(boolean c, int a, int b) {\n    return c ? a : b;\n}\n");
        let rec = apply_first(OperatorId::CondExp2If, &m);
        assert!(token_equal(
            &rec.transformed,
            "int f(boolean c, int a, int b) {\n    if (c) { return a; } else { return b; }\n}\n"
        ));
        let assign = method("void f(boolean c, int x, int a, int b) {\n    x = c ? a : b;\n}\n");
        let rec = apply_first(OperatorId::CondExp2If, &assign);
        assert!(token_equal(
            &rec.transformed,
            "void f(boolean c, int x, int a, int b) {\n    if (c) { x = a; } else { x = b; }\n}\n"
        ));
    }

    #[test]
    fn dividing_composed_if_nests_conjuncts() {
        let m = method("void f(boolean c1, boolean c2) {\n    if (c1 && c2) {\n        g();\n    }\n}\n");
        let rec = apply_first(OperatorId::DividingComposedIf, &m);
        assert_eq!(rec.status, TransformationStatus::Valid);
        assert!(token_equal(
            &rec.transformed,
            "void f(boolean c1, boolean c2) {\n    if (c1) { if (c2) { g(); } }\n}\n"
        ));
        let triple = method("void f(boolean a, boolean b, boolean c) {\n    if (a && b && c) {\n        g();\n    }\n}\n");
        let rec = apply_first(OperatorId::DividingComposedIf, &triple);
        assert!(token_equal(
            &rec.transformed,
            "void f(boolean a, boolean b, boolean c) {\n    if (a) { if (b) { if (c) { g(); } } }\n}\n"
        ));
    }

    #[test]
    fn dividing_composed_if_discards_or_and_else() {
        let or = method("void f(boolean a, boolean b) {\n    if (a || b) {\n        g();\n    }\n}\n");
        let rec = apply_first(OperatorId::DividingComposedIf, &or);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
        let with_else = method("void f(boolean a, boolean b) {\n    if (a && b) {\n        g();\n    } else {\n        h();\n    }\n}\n");
        let rec = apply_first(OperatorId::DividingComposedIf, &with_else);
        assert_eq!(rec.status, TransformationStatus::DiscardedInapplicable);
    }
}
