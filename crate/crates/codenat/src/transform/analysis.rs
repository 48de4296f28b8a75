//! Token-scan analyses used by operator guards.
//!
//! These run over token spans rather than the tree so they remain sound in
//! the presence of opaque statements: every guard here is conservative — it
//! may reject a transformable site, but it never certifies an untransformable
//! one based on structure the parser skipped.

use std::collections::BTreeSet;

use crate::source::{Span, SourceMethod, StmtKind, Token, TokenKind};

/// Non-comment tokens of a span, with their token indices.
pub fn span_tokens<'m>(
    method: &'m SourceMethod,
    span: Span,
) -> impl Iterator<Item = (usize, &'m Token)> {
    method.tokens[span.start..span.end]
        .iter()
        .enumerate()
        .map(move |(i, t)| (span.start + i, t))
        .filter(|(_, t)| t.kind != TokenKind::Comment)
}

fn next_code(method: &SourceMethod, idx: usize) -> Option<&Token> {
    method.tokens[idx + 1..].iter().find(|t| t.kind != TokenKind::Comment)
}

fn prev_code(method: &SourceMethod, idx: usize) -> Option<&Token> {
    method.tokens[..idx].iter().rev().find(|t| t.kind != TokenKind::Comment)
}

pub const ASSIGN_OPS: &[&str] =
    &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="];

/// Whether a span is free of side effects at the token level: no assignment
/// operators, no `++`/`--`, no `new`, and no call (identifier directly
/// followed by `(`).
pub fn is_pure_span(method: &SourceMethod, span: Span) -> bool {
    for (idx, tok) in span_tokens(method, span) {
        match tok.kind {
            TokenKind::Operator if ASSIGN_OPS.contains(&tok.text.as_str()) => return false,
            TokenKind::Operator if tok.text == "++" || tok.text == "--" => return false,
            TokenKind::Keyword if tok.text == "new" => return false,
            TokenKind::Identifier => {
                if next_code(method, idx).is_some_and(|t| t.text == "(") {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

/// Whether any non-comment token in the span has exactly this text.
pub fn span_contains_token(method: &SourceMethod, span: Span, text: &str) -> bool {
    span_tokens(method, span).any(|(_, t)| t.text == text)
}

/// Syntactic read/write sets of a span, plus the disqualifying features the
/// swap guard cares about.
#[derive(Debug, Default, Clone)]
pub struct ReadWrite {
    pub reads: BTreeSet<String>,
    pub writes: BTreeSet<String>,
    pub has_call: bool,
    pub has_field_write: bool,
    pub has_array_store: bool,
}

impl ReadWrite {
    /// Neither statement may write a name the other reads or writes.
    pub fn independent(&self, other: &ReadWrite) -> bool {
        self.writes.is_disjoint(&other.writes)
            && self.writes.is_disjoint(&other.reads)
            && other.writes.is_disjoint(&self.reads)
    }
}

/// Computes [`ReadWrite`] for a statement span. `decl_names` are identifier
/// token indices that declare variables (written even without an `=`).
pub fn read_write(method: &SourceMethod, span: Span, decl_names: &[usize]) -> ReadWrite {
    let mut rw = ReadWrite::default();
    for (idx, tok) in span_tokens(method, span) {
        match tok.kind {
            TokenKind::Keyword if tok.text == "new" => rw.has_call = true,
            TokenKind::Operator if ASSIGN_OPS.contains(&tok.text.as_str()) => {
                // Classify the assignment target from the token before `=`.
                match prev_code(method, idx) {
                    Some(p) if p.text == "]" => rw.has_array_store = true,
                    Some(p) if p.kind == TokenKind::Identifier => {
                        let before_target = method.tokens[..idx]
                            .iter()
                            .rev()
                            .filter(|t| t.kind != TokenKind::Comment)
                            .nth(1);
                        if before_target.is_some_and(|t| t.text == ".") {
                            rw.has_field_write = true;
                        }
                    }
                    _ => {}
                }
            }
            TokenKind::Identifier => {
                let next = next_code(method, idx);
                let prev = prev_code(method, idx);
                if next.is_some_and(|t| t.text == "(") {
                    rw.has_call = true;
                    continue;
                }
                if decl_names.contains(&idx) {
                    rw.writes.insert(tok.text.clone());
                    continue;
                }
                if prev.is_some_and(|t| t.text == ".") {
                    continue; // member name; the receiver was already counted
                }
                let next_incdec = next.is_some_and(|t| t.text == "++" || t.text == "--");
                let prev_incdec = prev.is_some_and(|t| t.text == "++" || t.text == "--");
                let next_assign =
                    next.is_some_and(|t| ASSIGN_OPS.contains(&t.text.as_str()));
                if next_assign {
                    rw.writes.insert(tok.text.clone());
                    if next.is_some_and(|t| t.text != "=") {
                        rw.reads.insert(tok.text.clone()); // compound op reads too
                    }
                } else if next_incdec || prev_incdec {
                    rw.writes.insert(tok.text.clone());
                    rw.reads.insert(tok.text.clone());
                } else {
                    rw.reads.insert(tok.text.clone());
                }
            }
            _ => {}
        }
    }
    rw
}

/// Declarator name token indices of a statement, when it declares variables.
pub fn stmt_decl_names(stmt: &crate::source::Stmt) -> Vec<usize> {
    match &stmt.kind {
        StmtKind::VarDecl(d) => d.declarators.iter().map(|dd| dd.name_tok).collect(),
        _ => Vec::new(),
    }
}

/// All identifier token texts in the method (the conservative "in scope"
/// approximation used for collision checks).
pub fn method_identifiers(method: &SourceMethod) -> BTreeSet<String> {
    method
        .tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Identifier)
        .map(|t| t.text.clone())
        .collect()
}

/// First available name in `base`, `base1`, `base2`, … that collides with no
/// identifier in the method.
pub fn fresh_name(method: &SourceMethod, base: &str) -> String {
    let used = method_identifiers(method);
    if !used.contains(base) {
        return base.to_string();
    }
    for k in 1.. {
        let cand = format!("{base}{k}");
        if !used.contains(&cand) {
            return cand;
        }
    }
    unreachable!()
}

/// Primitive types temporaries may take.
const NUMERIC: &[&str] = &["int", "long", "float", "double"];

/// Declared type of each simple numeric local/param: name → type keyword.
/// Only single-token primitive types with no array dimensions qualify.
pub fn numeric_locals(method: &SourceMethod) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut push = |name: &str, ty: &str| out.push((name.to_string(), ty.to_string()));
    for p in &method.ast.params {
        let ty_toks: Vec<&Token> = method.tokens[p.type_span.start..p.type_span.end]
            .iter()
            .filter(|t| t.kind != TokenKind::Comment)
            .collect();
        if p.extra_dims == 0
            && ty_toks.len() == 1
            && NUMERIC.contains(&ty_toks[0].text.as_str())
        {
            push(&p.name, &ty_toks[0].text);
        }
    }
    if let Some(body) = &method.ast.body {
        crate::source::ast::walk_statements(body, &mut |stmt| {
            if let StmtKind::VarDecl(d) = &stmt.kind {
                let ty_toks: Vec<&Token> = method.tokens
                    [d.prefix_span.start..d.prefix_span.end]
                    .iter()
                    .filter(|t| {
                        t.kind != TokenKind::Comment
                            && t.text != "final"
                            && t.text != "@"
                    })
                    .collect();
                if ty_toks.len() == 1 && NUMERIC.contains(&ty_toks[0].text.as_str()) {
                    for dd in &d.declarators {
                        if dd.extra_dims == 0 {
                            push(&dd.name, &ty_toks[0].text);
                        }
                    }
                }
            }
        });
    }
    out
}

/// Syntactic type of a numeric literal token: suffix and shape decide.
pub fn literal_numeric_type(text: &str) -> Option<&'static str> {
    let bytes = text.as_bytes();
    if bytes.is_empty() || !bytes[0].is_ascii_digit() && bytes[0] != b'.' {
        return None;
    }
    match bytes[bytes.len() - 1] {
        b'l' | b'L' => return Some("long"),
        b'f' | b'F' => return Some("float"),
        b'd' | b'D' => {
            // 0xFD is an int literal; hex digits may end in d.
            if !text.starts_with("0x") && !text.starts_with("0X") {
                return Some("double");
            }
        }
        _ => {}
    }
    if !text.starts_with("0x")
        && !text.starts_with("0X")
        && (text.contains('.') || text.contains('e') || text.contains('E'))
    {
        return Some("double");
    }
    Some("int")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{BuggyRegion, SourceMethod};

    fn method(src: &str) -> SourceMethod {
        SourceMethod::parse("t", src, BuggyRegion::new(1, 99)).unwrap()
    }

    fn stmt_span(m: &SourceMethod, i: usize) -> Span {
        m.ast.body.as_ref().unwrap().statements[i].span
    }

    #[test]
    fn purity_scan_flags_side_effects() {
        let m = method("void f(int a, int b) {\n    int x = a + b.c;\n    x = g();\n    x++;\n    int y = new int[2].length;\n}\n");
        // Field reads and arithmetic are pure (tested on the initializer
        // expression; a declaration's own `=` is not an assignment operator
        // in expression position).
        let body = m.ast.body.as_ref().unwrap();
        let StmtKind::VarDecl(d) = &body.statements[0].kind else { panic!("expected decl") };
        let init = d.declarators[0].init.as_ref().unwrap();
        assert!(is_pure_span(&m, init.span));
        assert!(!is_pure_span(&m, stmt_span(&m, 1))); // call + assignment
        assert!(!is_pure_span(&m, stmt_span(&m, 2))); // increment
        assert!(!is_pure_span(&m, stmt_span(&m, 3))); // new
    }

    #[test]
    fn read_write_sets() {
        let m = method("void f(int a, int b, int c, int d) {\n    a = b + 10;\n    c = d + 1;\n    c += a;\n    int q;\n}\n");
        let s0 = read_write(&m, stmt_span(&m, 0), &[]);
        assert_eq!(s0.writes.iter().collect::<Vec<_>>(), vec!["a"]);
        assert_eq!(s0.reads.iter().collect::<Vec<_>>(), vec!["b"]);
        let s1 = read_write(&m, stmt_span(&m, 1), &[]);
        assert!(s0.independent(&s1));
        let s2 = read_write(&m, stmt_span(&m, 2), &[]);
        assert!(s2.reads.contains("c") && s2.writes.contains("c") && s2.reads.contains("a"));
        assert!(!s0.independent(&s2)); // s0 writes a, s2 reads a
        let body = m.ast.body.as_ref().unwrap();
        let decls = stmt_decl_names(&body.statements[3]);
        let s3 = read_write(&m, stmt_span(&m, 3), &decls);
        assert!(s3.writes.contains("q"));
    }

    #[test]
    fn read_write_flags() {
        let m = method("void f(A p, int[] xs, int i) {\n    p.x = 1;\n    xs[i] = 2;\n    g(i);\n}\n");
        assert!(read_write(&m, stmt_span(&m, 0), &[]).has_field_write);
        assert!(read_write(&m, stmt_span(&m, 1), &[]).has_array_store);
        assert!(read_write(&m, stmt_span(&m, 2), &[]).has_call);
    }

    #[test]
    fn fresh_name_avoids_collisions() {
        let m = method("void f(int temp) {\n    int temp1 = temp;\n}\n");
        assert_eq!(fresh_name(&m, "temp"), "temp2");
        assert_eq!(fresh_name(&m, "aux"), "aux");
    }

    #[test]
    fn numeric_locals_and_literals() {
        let m = method("void f(int a, long b, int[] xs, String s) {\n    double d = 0.5;\n    final int k = 1;\n    int m1, m2[];\n}\n");
        let locals = numeric_locals(&m);
        let names: Vec<&str> = locals.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, vec!["a", "b", "d", "k", "m1"]);
        assert_eq!(literal_numeric_type("42"), Some("int"));
        assert_eq!(literal_numeric_type("42L"), Some("long"));
        assert_eq!(literal_numeric_type("4.2"), Some("double"));
        assert_eq!(literal_numeric_type("4.2f"), Some("float"));
        assert_eq!(literal_numeric_type("0xFD"), Some("int"));
        assert_eq!(literal_numeric_type("\"s\""), None);
        assert_eq!(literal_numeric_type("'c'"), None);
    }
}
