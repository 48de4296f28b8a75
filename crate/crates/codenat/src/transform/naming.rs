//! Naming-level operators: variable renaming with pluggable substitution
//! sources.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::process::{Command, Stdio};

use serde::{Deserialize, Serialize};

use crate::source::{
    ast::{walk_statements, ForInit},
    lexer::is_valid_identifier,
    Span, SourceMethod, StmtKind, TokenKind,
};

use super::analysis::method_identifiers;

/// A variable the rename operators may target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenameTarget {
    pub name: String,
    /// Token index of the declaring identifier.
    pub decl_tok: usize,
    /// Token indices of every identifier occurrence to rewrite, declaration
    /// included, in document order.
    pub occurrences: Vec<usize>,
}

/// Parameters and local variables declared in the method, in declaration
/// order. Duplicate names (separate scopes) are collapsed into the first
/// declaration, since a rename rewrites every occurrence of the name anyway.
pub fn rename_targets(method: &SourceMethod) -> Vec<RenameTarget> {
    let mut decls: Vec<(String, usize)> = Vec::new();
    for p in &method.ast.params {
        decls.push((p.name.clone(), p.name_tok));
    }
    if let Some(body) = &method.ast.body {
        walk_statements(body, &mut |stmt| match &stmt.kind {
            StmtKind::VarDecl(d) => {
                for dd in &d.declarators {
                    decls.push((dd.name.clone(), dd.name_tok));
                }
            }
            StmtKind::For(f) => {
                if let Some(ForInit::Decl(d)) = &f.init {
                    for dd in &d.declarators {
                        decls.push((dd.name.clone(), dd.name_tok));
                    }
                }
            }
            StmtKind::ForEach(f) => {
                let name_tok = (f.var_span.start..f.var_span.end)
                    .rev()
                    .find(|&i| method.tokens[i].kind == TokenKind::Identifier);
                if let Some(i) = name_tok {
                    decls.push((method.tokens[i].text.clone(), i));
                }
            }
            _ => {}
        });
    }
    decls.sort_by_key(|(_, tok)| *tok);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (name, decl_tok) in decls {
        if !seen.insert(name.clone()) {
            continue;
        }
        let occurrences = occurrences_of(method, &name);
        out.push(RenameTarget { name, decl_tok, occurrences });
    }
    out
}

/// Identifier tokens named `name` in variable position: member accesses
/// (after `.`) and method names (before `(`) do not count.
pub fn occurrences_of(method: &SourceMethod, name: &str) -> Vec<usize> {
    let code: Vec<usize> = method
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.kind != TokenKind::Comment)
        .map(|(i, _)| i)
        .collect();
    let mut out = Vec::new();
    for (k, &idx) in code.iter().enumerate() {
        let tok = &method.tokens[idx];
        if tok.kind != TokenKind::Identifier || tok.text != name {
            continue;
        }
        let prev_dot = k > 0 && method.tokens[code[k - 1]].text == ".";
        let next_paren = code.get(k + 1).is_some_and(|&n| method.tokens[n].text == "(");
        if !prev_dot && !next_paren {
            out.push(idx);
        }
    }
    out
}

/// Span from the first to the last renamed occurrence.
pub fn occurrences_span(occurrences: &[usize]) -> Span {
    Span::new(
        occurrences.first().copied().unwrap_or(0),
        occurrences.last().map(|&i| i + 1).unwrap_or(0),
    )
}

/// Whether renaming to `candidate` is safe: a lexically valid identifier,
/// distinct from the old name, and colliding with nothing in the method.
pub fn rename_is_safe(method: &SourceMethod, old: &str, candidate: &str) -> bool {
    candidate != old
        && is_valid_identifier(candidate)
        && !method_identifiers(method).contains(candidate)
}

/// Source of rename candidates for a variable.
pub trait SubstitutionProvider: Send + Sync {
    /// Ranked candidate names for `name` as used in `method`, best first.
    fn candidates(&self, name: &str, method: &SourceMethod) -> Vec<String>;
}

/// Truncates a name to its first character.
#[derive(Debug, Clone, Copy, Default)]
pub struct FirstCharProvider;

impl SubstitutionProvider for FirstCharProvider {
    fn candidates(&self, name: &str, _method: &SourceMethod) -> Vec<String> {
        let first: String = name.chars().take(1).collect();
        if first.is_empty() || first == name {
            Vec::new()
        } else {
            vec![first]
        }
    }
}

/// Curated synonym table with a configurable cut-off.
#[derive(Debug, Clone)]
pub struct DictionaryProvider {
    map: BTreeMap<String, Vec<String>>,
    top_k: usize,
}

impl DictionaryProvider {
    pub fn new(map: BTreeMap<String, Vec<String>>, top_k: usize) -> DictionaryProvider {
        DictionaryProvider { map, top_k }
    }

    /// A small built-in table of common identifier substitutions.
    pub fn builtin() -> DictionaryProvider {
        let pairs: &[(&str, &[&str])] = &[
            ("list", &["arr"]),
            ("arr", &["array"]),
            ("str", &["text"]),
            ("string", &["str"]),
            ("num", &["count"]),
            ("number", &["num"]),
            ("count", &["cnt"]),
            ("index", &["idx"]),
            ("idx", &["index"]),
            ("temp", &["tmp"]),
            ("tmp", &["temp"]),
            ("result", &["res"]),
            ("value", &["val"]),
            ("buffer", &["buf"]),
            ("length", &["len"]),
            ("message", &["msg"]),
            ("object", &["obj"]),
            ("item", &["element"]),
            ("size", &["sz"]),
        ];
        let map = pairs
            .iter()
            .map(|(k, vs)| (k.to_string(), vs.iter().map(|v| v.to_string()).collect()))
            .collect();
        DictionaryProvider { map, top_k: 1 }
    }

    pub fn with_top_k(mut self, top_k: usize) -> DictionaryProvider {
        self.top_k = top_k;
        self
    }

    /// Parses `name=cand1,cand2` lines; `#` starts a comment.
    pub fn parse(text: &str, top_k: usize) -> DictionaryProvider {
        let mut map = BTreeMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some((name, cands)) = line.split_once('=') {
                let list: Vec<String> = cands
                    .split(',')
                    .map(|c| c.trim().to_string())
                    .filter(|c| !c.is_empty())
                    .collect();
                if !list.is_empty() {
                    map.insert(name.trim().to_string(), list);
                }
            }
        }
        DictionaryProvider { map, top_k }
    }
}

impl SubstitutionProvider for DictionaryProvider {
    fn candidates(&self, name: &str, _method: &SourceMethod) -> Vec<String> {
        self.map
            .get(name)
            .map(|v| v.iter().take(self.top_k).cloned().collect())
            .unwrap_or_default()
    }
}

#[derive(Serialize)]
struct SubstRequest<'a> {
    id: u64,
    name: &'a str,
    method: &'a str,
}

#[derive(Deserialize)]
struct SubstResponse {
    id: u64,
    candidates: Vec<String>,
}

/// Asks an external command for candidates, one process per request:
/// a JSON line `{"id":0,"name":…,"method":…}` on stdin, a JSON line
/// `{"id":0,"candidates":[…]}` expected on stdout.
#[derive(Debug, Clone)]
pub struct ExternalProvider {
    command: String,
}

impl ExternalProvider {
    pub fn new(command: impl Into<String>) -> ExternalProvider {
        ExternalProvider { command: command.into() }
    }

    fn ask(&self, name: &str, method: &SourceMethod) -> std::io::Result<Vec<String>> {
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(&self.command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()?;
        let request =
            serde_json::to_string(&SubstRequest { id: 0, name, method: method.render() })
                .expect("request serializes");
        {
            let mut stdin = child.stdin.take().expect("piped stdin");
            writeln!(stdin, "{request}")?;
        }
        let stdout = child.stdout.take().expect("piped stdout");
        let mut line = String::new();
        BufReader::new(stdout).read_line(&mut line)?;
        let status = child.wait()?;
        if !status.success() {
            return Err(std::io::Error::other(format!(
                "substitution command exited with {status}"
            )));
        }
        let resp: SubstResponse = serde_json::from_str(line.trim())
            .map_err(|e| std::io::Error::other(format!("bad substitution response: {e}")))?;
        if resp.id != 0 {
            return Err(std::io::Error::other("substitution response id mismatch"));
        }
        Ok(resp.candidates)
    }
}

impl SubstitutionProvider for ExternalProvider {
    fn candidates(&self, name: &str, method: &SourceMethod) -> Vec<String> {
        self.ask(name, method).unwrap_or_default()
    }
}
