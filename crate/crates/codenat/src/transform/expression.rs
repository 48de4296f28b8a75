//! Expression-level operators: relational/equality swaps, unary expansion,
//! compound-assignment expansion, declaration merging, and infix dividing.

use crate::source::ast::{stmt_exprs, walk_expr, walk_statements};
use crate::source::{Edit, Expr, ExprKind, Span, SourceMethod, Stmt, StmtKind};

use super::analysis::{
    is_pure_span, literal_numeric_type, numeric_locals, span_tokens, ASSIGN_OPS,
};
use super::{find_expr, find_pair, find_stmt, Planned, TransformOptions};

/// Every expression in the method, in document order.
fn all_exprs(method: &SourceMethod) -> Vec<&Expr> {
    let mut out = Vec::new();
    if let Some(body) = &method.ast.body {
        walk_statements(body, &mut |stmt| {
            for root in stmt_exprs(stmt) {
                walk_expr(root, &mut |e| out.push(e));
            }
        });
    }
    out.sort_by_key(|e| (e.span.start, e.span.end));
    out
}

fn expr_sites(method: &SourceMethod, pred: impl Fn(&Expr) -> bool) -> Vec<Span> {
    let mut spans: Vec<Span> =
        all_exprs(method).into_iter().filter(|e| pred(e)).map(|e| e.span).collect();
    spans.dedup();
    spans
}

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
    span_tokens(method, span).count() == 1
}

/// `a < b` → `b > a`: swap relational operands, mirroring the operator.
pub(crate) mod switch_relation {
    use super::*;

    pub const OPS: &[&str] = &["<", ">", "<=", ">="];

    fn mirror(op: &str) -> &'static str {
        match op {
            "<" => ">",
            ">" => "<",
            "<=" => ">=",
            ">=" => "<=",
            _ => unreachable!("not a relational operator"),
        }
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        expr_sites(method, |e| {
            matches!(&e.kind, ExprKind::Binary { op, .. } if OPS.contains(&op.as_str()))
        })
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(expr) = find_expr(method, span, |e| {
            matches!(&e.kind, ExprKind::Binary { op, .. } if OPS.contains(&op.as_str()))
        }) else {
            return Planned::Inapplicable;
        };
        let ExprKind::Binary { op, lhs, rhs, .. } = &expr.kind else {
            return Planned::Inapplicable;
        };
        swap_operands(method, expr, lhs, rhs, mirror(op))
    }
}

/// `a == b` → `b == a`: swap equality operands.
pub(crate) mod switch_equal_exp {
    use super::*;

    pub const OPS: &[&str] = &["==", "!="];

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        expr_sites(method, |e| {
            matches!(&e.kind, ExprKind::Binary { op, .. } if OPS.contains(&op.as_str()))
        })
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(expr) = find_expr(method, span, |e| {
            matches!(&e.kind, ExprKind::Binary { op, .. } if OPS.contains(&op.as_str()))
        }) else {
            return Planned::Inapplicable;
        };
        let ExprKind::Binary { op, lhs, rhs, .. } = &expr.kind else {
            return Planned::Inapplicable;
        };
        swap_operands(method, expr, lhs, rhs, op)
    }
}

/// Shared operand swap with the purity guard: swapping reorders evaluation,
/// so both operands must be side-effect-free.
fn swap_operands(
    method: &SourceMethod,
    whole: &Expr,
    lhs: &Expr,
    rhs: &Expr,
    out_op: &str,
) -> Planned {
    if !is_pure_span(method, lhs.span) || !is_pure_span(method, rhs.span) {
        return Planned::Inapplicable;
    }
    let text = format!(
        "{} {} {}",
        method.span_text(rhs.span),
        out_op,
        method.span_text(lhs.span)
    );
    Planned::Edits(vec![Edit::new(method.byte_range_of(whole.span), text)])
}

/// `a.equals(b)` → `b.equals(a)`: swap receiver and argument, both required
/// to be simple identifiers.
pub(crate) mod switch_string_equal {
    use super::*;

    fn matches_shape(e: &Expr) -> bool {
        if let ExprKind::Call { receiver: Some(recv), name, args, .. } = &e.kind {
            name == "equals"
                && args.len() == 1
                && matches!(recv.kind, ExprKind::Name { .. })
                && matches!(args[0].kind, ExprKind::Name { .. })
        } else {
            false
        }
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        expr_sites(method, matches_shape)
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(expr) = find_expr(method, span, matches_shape) else {
            return Planned::Inapplicable;
        };
        let ExprKind::Call { receiver: Some(recv), args, .. } = &expr.kind else {
            return Planned::Inapplicable;
        };
        let text = format!(
            "{}.equals({})",
            method.span_text(args[0].span),
            method.span_text(recv.span)
        );
        Planned::Edits(vec![Edit::new(method.byte_range_of(expr.span), text)])
    }
}

/// `i++;` → `i = i + 1;` (or `i += 1;` in compound style). Statement
/// position only: in expression position the pre/post value is consumed and
/// cannot be preserved.
pub(crate) mod unary2add {
    use super::*;

    fn target(stmt: &Stmt) -> Option<(&str, &str)> {
        if let StmtKind::Expr(e) = &stmt.kind {
            if let ExprKind::Unary { op, operand, .. } = &e.kind {
                if let ExprKind::Name { name, .. } = &operand.kind {
                    if op == "++" || op == "--" {
                        return Some((name, if op == "++" { "+" } else { "-" }));
                    }
                }
            }
        }
        None
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| target(s).is_some())
    }

    pub fn plan(method: &SourceMethod, span: Span, opts: &TransformOptions) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let Some((name, op)) = target(stmt) else {
            return Planned::Inapplicable;
        };
        let text = match opts.unary2add_style {
            super::super::Unary2AddStyle::Expanded => format!("{name} = {name} {op} 1;"),
            super::super::Unary2AddStyle::Compound => format!("{name} {op}= 1;"),
        };
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }
}

/// `a += 9;` → `a = a + 9;`: expand a compound assignment statement.
pub(crate) mod add2equal {
    use super::*;

    fn target<'a>(
        method: &SourceMethod,
        stmt: &'a Stmt,
    ) -> Option<(&'a str, String, &'a Expr)> {
        if let StmtKind::Expr(e) = &stmt.kind {
            if let ExprKind::Assign { op, lhs, rhs, .. } = &e.kind {
                if op != "=" && ASSIGN_OPS.contains(&op.as_str()) {
                    if let ExprKind::Name { name, .. } = &lhs.kind {
                        // Expansion re-types the right side: `byte b; b += 1`
                        // compiles, `b = b + 1` does not. Only widened
                        // numeric locals are safe.
                        let known = numeric_locals(method)
                            .into_iter()
                            .any(|(n, _)| n == *name);
                        if known {
                            let base = op[..op.len() - 1].to_string();
                            return Some((name, base, rhs));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| target(method, s).is_some())
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let Some((name, base, rhs)) = target(method, stmt) else {
            return Planned::Inapplicable;
        };
        // `a *= b + c` means `a = a * (b + c)`; parenthesize any compound
        // right side to keep that grouping.
        let rhs_text = method.span_text(rhs.span);
        let wrapped = if single_token(method, rhs.span)
            || matches!(rhs.kind, ExprKind::Paren(_))
        {
            rhs_text.to_string()
        } else {
            format!("({rhs_text})")
        };
        let text = format!("{name} = {name} {base} {wrapped};");
        Planned::Edits(vec![Edit::new(method.byte_range_of(stmt.span), text)])
    }
}

/// `int a; int b;` → `int a, b;`: merge two adjacent declarations of the
/// same declared type.
pub(crate) mod merge_var_decl {
    use super::*;

    fn decl_prefix_texts<'a>(method: &'a SourceMethod, stmt: &Stmt) -> Option<Vec<&'a str>> {
        if let StmtKind::VarDecl(d) = &stmt.kind {
            Some(span_tokens(method, d.prefix_span).map(|(_, t)| t.text.as_str()).collect())
        } else {
            None
        }
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        let mut out = Vec::new();
        if let Some(body) = &method.ast.body {
            crate::source::ast::walk_blocks(body, &mut |block| {
                for pair in block.statements.windows(2) {
                    let (a, b) = (&pair[0], &pair[1]);
                    match (decl_prefix_texts(method, a), decl_prefix_texts(method, b)) {
                        (Some(ta), Some(tb)) if ta == tb => {
                            out.push(Span::new(a.span.start, b.span.end));
                        }
                        _ => {}
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
        let (StmtKind::VarDecl(da), StmtKind::VarDecl(db)) = (&a.kind, &b.kind) else {
            return Planned::Inapplicable;
        };
        // Text between the type prefix and the `;` holds the declarators.
        let decls_a = method.span_text(Span::new(da.prefix_span.end, a.span.end - 1));
        let decls_b = method.span_text(Span::new(db.prefix_span.end, b.span.end - 1));
        let text = format!(
            "{} {}, {};",
            method.span_text(da.prefix_span),
            decls_a.trim(),
            decls_b.trim()
        );
        Planned::Edits(vec![Edit::new(method.byte_range_of(span), text)])
    }
}

/// `x = a + b * c;` → `int temp = b * c; x = a + temp;`: hoist the
/// innermost highest-precedence binary subexpression into a fresh local.
pub(crate) mod infix_dividing {
    use super::*;
    use crate::source::parser::binary_level;

    fn binaries<'a>(rhs: &'a Expr) -> Vec<&'a Expr> {
        let mut out = Vec::new();
        walk_expr(rhs, &mut |e| {
            if matches!(e.kind, ExprKind::Binary { .. }) {
                out.push(e);
            }
        });
        out
    }

    fn is_division_site(stmt: &Stmt) -> Option<&Expr> {
        if let StmtKind::Expr(e) = &stmt.kind {
            if let ExprKind::Assign { rhs, .. } = &e.kind {
                if binaries(rhs.unwrap_parens()).len() >= 2 {
                    return Some(rhs.unwrap_parens());
                }
            }
        }
        None
    }

    pub fn sites(method: &SourceMethod) -> Vec<Span> {
        stmt_sites(method, |s| is_division_site(s).is_some())
    }

    /// Syntactically inferable operand type: a declared numeric local/param
    /// or a numeric literal.
    fn operand_type(method: &SourceMethod, e: &Expr) -> Option<String> {
        match &e.unwrap_parens().kind {
            ExprKind::Name { name, .. } => numeric_locals(method)
                .into_iter()
                .find(|(n, _)| n == name)
                .map(|(_, ty)| ty),
            ExprKind::Literal { tok } => {
                literal_numeric_type(&method.tokens[*tok].text).map(str::to_string)
            }
            _ => None,
        }
    }

    pub fn plan(method: &SourceMethod, span: Span) -> Planned {
        let Some(stmt) = find_stmt(method, span) else {
            return Planned::Inapplicable;
        };
        let Some(rhs) = is_division_site(stmt) else {
            return Planned::Inapplicable;
        };
        let all = binaries(rhs);
        // Innermost: no other binary nested inside either operand.
        let innermost: Vec<&&Expr> = all
            .iter()
            .filter(|b| {
                let ExprKind::Binary { lhs, rhs, .. } = &b.kind else { return false };
                !all.iter().any(|o| {
                    lhs.span.contains(o.span) || rhs.span.contains(o.span)
                })
            })
            .collect();
        let chosen = innermost
            .into_iter()
            .max_by_key(|b| {
                let ExprKind::Binary { op, .. } = &b.kind else { unreachable!() };
                (binary_level(op).unwrap_or(0), usize::MAX - b.span.start)
            })
            .copied();
        let Some(sub) = chosen else { return Planned::Inapplicable };
        let ExprKind::Binary { lhs, rhs: sub_rhs, .. } = &sub.kind else {
            return Planned::Inapplicable;
        };
        let (Some(t1), Some(t2)) =
            (operand_type(method, lhs), operand_type(method, sub_rhs))
        else {
            return Planned::Inapplicable;
        };
        if t1 != t2 {
            return Planned::Inapplicable;
        }
        let name = super::super::analysis::fresh_name(method, "temp");
        let stmt_start = method.byte_range_of(stmt.span).start;
        let decl = format!("{} {} = {}; ", t1, name, method.span_text(sub.span));
        Planned::Edits(vec![
            Edit::new(stmt_start..stmt_start, decl),
            Edit::new(method.byte_range_of(sub.span), name),
        ])
    }
}
