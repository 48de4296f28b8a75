//! Semantic-preserving transformations for buggy Java methods.
//!
//! The engine applies 18 rewrite operators, grouped in three levels:
//!
//! * **Naming** — rename a variable to its first character
//!   ([`OperatorId::RenameVariable1`]) or to a candidate from a
//!   [`SubstitutionProvider`] ([`OperatorId::RenameVariable2`]).
//! * **Expression** — operand swaps, unary/compound-assignment expansion,
//!   declaration merging, and subexpression extraction.
//! * **Statement** — loop conversions, if/switch restructuring, statement
//!   swaps, and conditional-expression conversions.
//!
//! Every operator is a pure function of `(method, site)`: [`applicable_sites`]
//! enumerates the positions where the operator's structural precondition holds
//! *and* the edit would touch the method's buggy region; [`apply`] produces a
//! [`TransformationRecord`] for one site. A record is
//! [`Valid`](TransformationStatus::Valid) only when the rewritten method
//! re-parses and differs from the original by at least one code token.
//! Rewrites that fail a guard are retained as discarded records
//! ([`DiscardedConflict`](TransformationStatus::DiscardedConflict),
//! [`DiscardedInapplicable`](TransformationStatus::DiscardedInapplicable),
//! [`DiscardedUnparseable`](TransformationStatus::DiscardedUnparseable)) so a
//! corpus run accounts for every attempt.
//!
//! The checks here are syntactic (parse validity, identifier conflicts,
//! conservative purity and data-dependence scans). Behavioral validation —
//! compiling and running a test suite against the transformed method — is
//! delegated to a caller-supplied shell hook via [`validate_external`].
//!
//! [`apply_all`] runs every operator over every site in a fixed order
//! (operator declaration order, then document order, then candidate rank), so
//! repeated runs over the same input produce byte-identical records.

use std::fmt;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::source::ast::{stmt_exprs, walk_blocks, walk_expr, walk_statements};
use crate::source::{splice, token_equal, Block, Edit, Expr, Span, SourceMethod, Stmt};

pub(crate) mod analysis;
mod expression;
pub mod naming;
mod statement;

pub use naming::{
    rename_targets, DictionaryProvider, ExternalProvider, FirstCharProvider, RenameTarget,
    SubstitutionProvider,
};

/// Transformation level a rewrite operator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    Naming,
    Expression,
    Statement,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Naming => "Naming",
            Level::Expression => "Expression",
            Level::Statement => "Statement",
        })
    }
}

/// The 18 rewrite operators.
///
/// Declaration order is the canonical application order used by
/// [`apply_all`] and by record ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorId {
    /// `int data; data = 1;` → `int d; d = 1;`
    RenameVariable1,
    /// `int list;` → `int arr;` (candidate from a provider)
    RenameVariable2,
    /// `a < b` → `b > a`
    SwitchRelation,
    /// `i++;` → `i = i + 1;`
    Unary2Add,
    /// `a += 9;` → `a = a + 9;`
    Add2Equal,
    /// `int a; int b;` → `int a, b;`
    MergeVarDecl,
    /// `x = a + b * c;` → `int temp = b * c; x = a + temp;`
    InfixDividing,
    /// `a == b` → `b == a`
    SwitchEqualExp,
    /// `a.equals(b)` → `b.equals(a)`
    SwitchStringEqual,
    /// `for (i = 0; i < 10; i++) { … }` → `i = 0; while (i < 10) { … i++; }`
    For2While,
    /// `i = 0; while (i < 10) { … i++; }` → `for (i = 0; i < 10; i++) { … }`
    While2For,
    /// `if (a) X else if (b) Y` → `if (a) X else { if (b) Y }`
    ElseIf2If,
    /// `switch (a) { case 60: … default: … }` → `if (a == 60) { … } else { … }`
    Switch2If,
    /// `a = b + 10; c = d + 1;` → `c = d + 1; a = b + 10;`
    SwapStatement,
    /// `if (c) A else B` → `if (!c) B else A`
    ReverseIf,
    /// `if (c) { return a; } else { return b; }` → `return c ? a : b;`
    If2CondExp,
    /// `return c ? a : b;` → `if (c) { return a; } else { return b; }`
    CondExp2If,
    /// `if (c1 && c2) { B }` → `if (c1) { if (c2) { B } }`
    DividingComposedIf,
}

impl OperatorId {
    /// All operators in canonical application order.
    pub const ALL: [OperatorId; 18] = [
        OperatorId::RenameVariable1,
        OperatorId::RenameVariable2,
        OperatorId::SwitchRelation,
        OperatorId::Unary2Add,
        OperatorId::Add2Equal,
        OperatorId::MergeVarDecl,
        OperatorId::InfixDividing,
        OperatorId::SwitchEqualExp,
        OperatorId::SwitchStringEqual,
        OperatorId::For2While,
        OperatorId::While2For,
        OperatorId::ElseIf2If,
        OperatorId::Switch2If,
        OperatorId::SwapStatement,
        OperatorId::ReverseIf,
        OperatorId::If2CondExp,
        OperatorId::CondExp2If,
        OperatorId::DividingComposedIf,
    ];

    /// Stable operator name, as used in record ids and serialized records.
    pub fn name(self) -> &'static str {
        match self {
            OperatorId::RenameVariable1 => "RenameVariable1",
            OperatorId::RenameVariable2 => "RenameVariable2",
            OperatorId::SwitchRelation => "SwitchRelation",
            OperatorId::Unary2Add => "Unary2Add",
            OperatorId::Add2Equal => "Add2Equal",
            OperatorId::MergeVarDecl => "MergeVarDecl",
            OperatorId::InfixDividing => "InfixDividing",
            OperatorId::SwitchEqualExp => "SwitchEqualExp",
            OperatorId::SwitchStringEqual => "SwitchStringEqual",
            OperatorId::For2While => "For2While",
            OperatorId::While2For => "While2For",
            OperatorId::ElseIf2If => "ElseIf2If",
            OperatorId::Switch2If => "Switch2If",
            OperatorId::SwapStatement => "SwapStatement",
            OperatorId::ReverseIf => "ReverseIf",
            OperatorId::If2CondExp => "If2CondExp",
            OperatorId::CondExp2If => "CondExp2If",
            OperatorId::DividingComposedIf => "DividingComposedIf",
        }
    }

    /// The level this operator belongs to (2 naming, 7 expression,
    /// 9 statement).
    pub fn level(self) -> Level {
        match self {
            OperatorId::RenameVariable1 | OperatorId::RenameVariable2 => Level::Naming,
            OperatorId::SwitchRelation
            | OperatorId::Unary2Add
            | OperatorId::Add2Equal
            | OperatorId::MergeVarDecl
            | OperatorId::InfixDividing
            | OperatorId::SwitchEqualExp
            | OperatorId::SwitchStringEqual => Level::Expression,
            OperatorId::For2While
            | OperatorId::While2For
            | OperatorId::ElseIf2If
            | OperatorId::Switch2If
            | OperatorId::SwapStatement
            | OperatorId::ReverseIf
            | OperatorId::If2CondExp
            | OperatorId::CondExp2If
            | OperatorId::DividingComposedIf => Level::Statement,
        }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OperatorId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OperatorId::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = OperatorId::ALL.iter().map(|op| op.name()).collect();
                format!("unknown operator `{s}` (expected one of: {})", names.join(", "))
            })
    }
}

/// Outcome of applying an operator at one site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransformationStatus {
    /// The rewrite re-parses and changed at least one code token.
    Valid,
    /// A new identifier would collide with an identifier already in scope.
    DiscardedConflict,
    /// A guard rejected the site, or the rewrite changed nothing.
    DiscardedInapplicable,
    /// The rewritten method failed to re-parse.
    DiscardedUnparseable,
}

impl fmt::Display for TransformationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformationStatus::Valid => "Valid",
            TransformationStatus::DiscardedConflict => "DiscardedConflict",
            TransformationStatus::DiscardedInapplicable => "DiscardedInapplicable",
            TransformationStatus::DiscardedUnparseable => "DiscardedUnparseable",
        })
    }
}

/// 1-based source line range of an edit site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteLines {
    pub start_line: u32,
    pub end_line: u32,
}

/// One transformation attempt: the operator, where it was applied, both
/// method texts, and how the attempt ended.
///
/// Serialized one-per-line as JSON (JSONL). The `id` is
/// `{bug_id}-{operator}-{ordinal}`, where the ordinal numbers the operator's
/// sites in document order starting at 1; rename candidates append `-c{k}`
/// for the k-th candidate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformationRecord {
    pub id: String,
    pub bug_id: String,
    pub operator: OperatorId,
    pub level: Level,
    pub site: SiteLines,
    pub original: String,
    pub transformed: String,
    pub status: TransformationStatus,
}

/// Rename details carried by naming-operator sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenameSite {
    /// The variable being renamed.
    pub target: String,
    /// The replacement identifier.
    pub candidate: String,
    /// 1-based candidate rank; present only for
    /// [`OperatorId::RenameVariable2`], whose record ids carry `-c{k}`.
    pub candidate_rank: Option<usize>,
}

/// One position an operator can be applied at.
///
/// Returned by [`applicable_sites`]; pass it unchanged to [`apply`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Site {
    /// Token span of the edit. For renames, the span from the first to the
    /// last rewritten occurrence.
    pub span: Span,
    /// 1-based position among this operator's sites, in document order.
    /// For renames, the position among renameable variables.
    pub ordinal: usize,
    /// Present on naming-operator sites.
    pub rename: Option<RenameSite>,
}

/// Behavior switches for operators whose output shape is configurable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TransformOptions {
    pub unary2add_style: Unary2AddStyle,
}

/// Output shape of [`OperatorId::Unary2Add`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Unary2AddStyle {
    /// `i++;` → `i = i + 1;`
    #[default]
    Expanded,
    /// `i++;` → `i += 1;`
    Compound,
}

/// An operator's planned outcome at a site, before splicing.
pub(crate) enum Planned {
    /// Apply these edits.
    Edits(Vec<Edit>),
    /// The edits would introduce an identifier collision; keep the attempted
    /// output for the record but discard it.
    Conflict(Vec<Edit>),
    /// A guard rejected the site.
    Inapplicable,
}

/// The statement with exactly this span, if any.
pub(crate) fn find_stmt<'m>(method: &'m SourceMethod, span: Span) -> Option<&'m Stmt> {
    let mut found = None;
    if let Some(body) = &method.ast.body {
        walk_statements(body, &mut |stmt| {
            if stmt.span == span && found.is_none() {
                found = Some(stmt);
            }
        });
    }
    found
}

/// The expression with exactly this span that satisfies `pred`. The
/// predicate disambiguates nested expressions sharing a span (such as a
/// parenthesized expression and its content).
pub(crate) fn find_expr<'m>(
    method: &'m SourceMethod,
    span: Span,
    pred: impl Fn(&Expr) -> bool,
) -> Option<&'m Expr> {
    let mut found = None;
    if let Some(body) = &method.ast.body {
        walk_statements(body, &mut |stmt| {
            for root in stmt_exprs(stmt) {
                walk_expr(root, &mut |e| {
                    if e.span == span && found.is_none() && pred(e) {
                        found = Some(e);
                    }
                });
            }
        });
    }
    found
}

/// The block and index of the adjacent statement pair covering this span
/// (pair sites span from the first statement's start to the second's end).
pub(crate) fn find_pair<'m>(method: &'m SourceMethod, span: Span) -> Option<(&'m Block, usize)> {
    let mut found = None;
    if let Some(body) = &method.ast.body {
        walk_blocks(body, &mut |block| {
            if found.is_some() {
                return;
            }
            for i in 0..block.statements.len().saturating_sub(1) {
                if block.statements[i].span.start == span.start
                    && block.statements[i + 1].span.end == span.end
                {
                    found = Some((block, i));
                    return;
                }
            }
        });
    }
    found
}

/// Rename sites: region-filtered targets, expanded per candidate for
/// [`OperatorId::RenameVariable2`].
fn rename_sites(
    op: OperatorId,
    method: &SourceMethod,
    provider: Option<&dyn SubstitutionProvider>,
) -> Vec<Site> {
    // A rename "affects" the buggy region when any rewritten occurrence is
    // on a buggy line.
    let targets: Vec<RenameTarget> = rename_targets(method)
        .into_iter()
        .filter(|t| {
            t.occurrences
                .iter()
                .any(|&i| method.buggy_region.contains_line(method.tokens[i].line))
        })
        .collect();
    let mut out = Vec::new();
    match op {
        OperatorId::RenameVariable1 => {
            for (idx, t) in targets.iter().enumerate() {
                let cands = FirstCharProvider.candidates(&t.name, method);
                if let Some(candidate) = cands.into_iter().next() {
                    out.push(Site {
                        span: naming::occurrences_span(&t.occurrences),
                        ordinal: idx + 1,
                        rename: Some(RenameSite {
                            target: t.name.clone(),
                            candidate,
                            candidate_rank: None,
                        }),
                    });
                }
            }
        }
        OperatorId::RenameVariable2 => {
            let builtin;
            let provider: &dyn SubstitutionProvider = match provider {
                Some(p) => p,
                None => {
                    builtin = DictionaryProvider::builtin();
                    &builtin
                }
            };
            for (idx, t) in targets.iter().enumerate() {
                for (k, candidate) in
                    provider.candidates(&t.name, method).into_iter().enumerate()
                {
                    out.push(Site {
                        span: naming::occurrences_span(&t.occurrences),
                        ordinal: idx + 1,
                        rename: Some(RenameSite {
                            target: t.name.clone(),
                            candidate,
                            candidate_rank: Some(k + 1),
                        }),
                    });
                }
            }
        }
        _ => unreachable!("rename_sites called for a non-rename operator"),
    }
    out
}

/// Sites where `op` can be attempted on this method: the operator's
/// structural precondition holds and the edit intersects the buggy region.
///
/// `provider` supplies [`OperatorId::RenameVariable2`] candidates; when
/// absent, the built-in dictionary ([`DictionaryProvider::builtin`]) is used.
/// Sites are in document order; renames expand to one site per
/// (variable, candidate).
pub fn applicable_sites(
    op: OperatorId,
    method: &SourceMethod,
    provider: Option<&dyn SubstitutionProvider>,
) -> Vec<Site> {
    if matches!(op, OperatorId::RenameVariable1 | OperatorId::RenameVariable2) {
        return rename_sites(op, method, provider);
    }
    let spans = match op {
        OperatorId::SwitchRelation => expression::switch_relation::sites(method),
        OperatorId::Unary2Add => expression::unary2add::sites(method),
        OperatorId::Add2Equal => expression::add2equal::sites(method),
        OperatorId::MergeVarDecl => expression::merge_var_decl::sites(method),
        OperatorId::InfixDividing => expression::infix_dividing::sites(method),
        OperatorId::SwitchEqualExp => expression::switch_equal_exp::sites(method),
        OperatorId::SwitchStringEqual => expression::switch_string_equal::sites(method),
        OperatorId::For2While => statement::for2while::sites(method),
        OperatorId::While2For => statement::while2for::sites(method),
        OperatorId::ElseIf2If => statement::else_if2if::sites(method),
        OperatorId::Switch2If => statement::switch2if::sites(method),
        OperatorId::SwapStatement => statement::swap_statement::sites(method),
        OperatorId::ReverseIf => statement::reverse_if::sites(method),
        OperatorId::If2CondExp => statement::if2cond_exp::sites(method),
        OperatorId::CondExp2If => statement::cond_exp2if::sites(method),
        OperatorId::DividingComposedIf => statement::dividing_composed_if::sites(method),
        OperatorId::RenameVariable1 | OperatorId::RenameVariable2 => unreachable!(),
    };
    spans
        .into_iter()
        .filter(|s| method.span_in_buggy_region(*s))
        .enumerate()
        .map(|(i, span)| Site { span, ordinal: i + 1, rename: None })
        .collect()
}

fn plan_rename(method: &SourceMethod, site: &Site) -> Planned {
    let Some(rename) = &site.rename else { return Planned::Inapplicable };
    let occurrences = naming::occurrences_of(method, &rename.target);
    if occurrences.is_empty() {
        return Planned::Inapplicable;
    }
    let edits: Vec<Edit> = occurrences
        .iter()
        .map(|&i| Edit::new(method.tokens[i].byte_range(), rename.candidate.clone()))
        .collect();
    if naming::rename_is_safe(method, &rename.target, &rename.candidate) {
        Planned::Edits(edits)
    } else {
        Planned::Conflict(edits)
    }
}

fn plan_site(
    op: OperatorId,
    method: &SourceMethod,
    site: &Site,
    opts: &TransformOptions,
) -> Planned {
    match op {
        OperatorId::RenameVariable1 | OperatorId::RenameVariable2 => plan_rename(method, site),
        OperatorId::SwitchRelation => expression::switch_relation::plan(method, site.span),
        OperatorId::Unary2Add => expression::unary2add::plan(method, site.span, opts),
        OperatorId::Add2Equal => expression::add2equal::plan(method, site.span),
        OperatorId::MergeVarDecl => expression::merge_var_decl::plan(method, site.span),
        OperatorId::InfixDividing => expression::infix_dividing::plan(method, site.span),
        OperatorId::SwitchEqualExp => expression::switch_equal_exp::plan(method, site.span),
        OperatorId::SwitchStringEqual => {
            expression::switch_string_equal::plan(method, site.span)
        }
        OperatorId::For2While => statement::for2while::plan(method, site.span),
        OperatorId::While2For => statement::while2for::plan(method, site.span),
        OperatorId::ElseIf2If => statement::else_if2if::plan(method, site.span),
        OperatorId::Switch2If => statement::switch2if::plan(method, site.span),
        OperatorId::SwapStatement => statement::swap_statement::plan(method, site.span),
        OperatorId::ReverseIf => statement::reverse_if::plan(method, site.span),
        OperatorId::If2CondExp => statement::if2cond_exp::plan(method, site.span),
        OperatorId::CondExp2If => statement::cond_exp2if::plan(method, site.span),
        OperatorId::DividingComposedIf => {
            statement::dividing_composed_if::plan(method, site.span)
        }
    }
}

/// Whether a rewritten method still lexes and parses as a method.
fn reparses(source: &str) -> bool {
    match crate::source::lex(source) {
        Ok(toks) => crate::source::Parser::new(&toks).parse_method().is_ok(),
        Err(_) => false,
    }
}

/// Applies `op` at one site, returning the record of the attempt.
///
/// `site` must come from [`applicable_sites`] for the same operator and
/// method. The attempt is never an error: guard failures and invalid outputs
/// are reported through [`TransformationRecord::status`]. Discarded records
/// keep the attempted output when one exists (conflicts, unparseable
/// results); inapplicable records carry the original text unchanged.
pub fn apply(
    op: OperatorId,
    method: &SourceMethod,
    site: &Site,
    _provider: Option<&dyn SubstitutionProvider>,
    opts: &TransformOptions,
) -> TransformationRecord {
    let mut id = format!("{}-{}-{}", method.id, op, site.ordinal);
    if let Some(rank) = site.rename.as_ref().and_then(|r| r.candidate_rank) {
        id.push_str(&format!("-c{rank}"));
    }
    let (start_line, end_line) = method.line_range(site.span);
    let original = method.source.clone();
    let (transformed, status) = match plan_site(op, method, site, opts) {
        Planned::Inapplicable => {
            (original.clone(), TransformationStatus::DiscardedInapplicable)
        }
        Planned::Conflict(edits) => (
            splice(&method.source, &edits),
            TransformationStatus::DiscardedConflict,
        ),
        Planned::Edits(edits) => {
            let out = splice(&method.source, &edits);
            if token_equal(&original, &out) {
                (original.clone(), TransformationStatus::DiscardedInapplicable)
            } else if !reparses(&out) {
                (out, TransformationStatus::DiscardedUnparseable)
            } else {
                (out, TransformationStatus::Valid)
            }
        }
    };
    TransformationRecord {
        id,
        bug_id: method.id.clone(),
        operator: op,
        level: op.level(),
        site: SiteLines { start_line, end_line },
        original,
        transformed,
        status,
    }
}

/// Applies every operator at every applicable site, in canonical order:
/// operator declaration order, then document order, then candidate rank.
/// Discarded attempts are retained with their status.
pub fn apply_all(
    method: &SourceMethod,
    provider: Option<&dyn SubstitutionProvider>,
    opts: &TransformOptions,
) -> Vec<TransformationRecord> {
    let mut out = Vec::new();
    for op in OperatorId::ALL {
        for site in applicable_sites(op, method, provider) {
            out.push(apply(op, method, &site, provider, opts));
        }
    }
    out
}

/// Writes records as JSONL: one JSON object per line.
pub fn write_records<W: Write>(mut w: W, records: &[TransformationRecord]) -> io::Result<()> {
    for rec in records {
        let line = serde_json::to_string(rec).map_err(io::Error::other)?;
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Reads JSONL records written by [`write_records`]. Blank lines are
/// skipped; anything else that fails to parse is an `InvalidData` error
/// naming the line number.
pub fn read_records<R: BufRead>(r: R) -> io::Result<Vec<TransformationRecord>> {
    let mut out = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line).map_err(|e| {
            io::Error::new(
                io::ErrorKind::InvalidData,
                format!("line {}: {e}", lineno + 1),
            )
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Outcome of the external validation hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validation {
    /// The hook exited 0.
    Pass,
    /// The hook exited nonzero.
    Fail,
    /// No hook is configured.
    Skipped,
}

/// Failure to run the validation hook at all (as opposed to the hook
/// running and failing, which is [`Validation::Fail`]).
#[derive(Debug, thiserror::Error)]
pub enum HookError {
    #[error("failed to stage transformed source for the validation hook: {0}")]
    Stage(#[source] io::Error),
    #[error("failed to spawn validation hook `{command}`: {source}")]
    Spawn {
        command: String,
        #[source]
        source: io::Error,
    },
}

/// Runs a caller-supplied shell hook against a record's transformed source.
///
/// The transformed method is written to a temporary `.java` file and the
/// hook command is run via `sh -c` with every `{file}` placeholder replaced
/// by that file's path. Exit 0 maps to [`Validation::Pass`], nonzero to
/// [`Validation::Fail`]; a `None` hook short-circuits to
/// [`Validation::Skipped`]. Intended for Valid records — the hook is what
/// checks behavior (compile, run tests) beyond this module's syntactic
/// guarantees.
pub fn validate_external(
    record: &TransformationRecord,
    hook: Option<&str>,
) -> Result<Validation, HookError> {
    let Some(hook) = hook else { return Ok(Validation::Skipped) };
    let dir = tempfile::tempdir().map_err(HookError::Stage)?;
    let path = dir.path().join("transformed.java");
    std::fs::write(&path, &record.transformed).map_err(HookError::Stage)?;
    let command = hook.replace("{file}", &path.to_string_lossy());
    let status = std::process::Command::new("sh")
        .arg("-c")
        .arg(&command)
        .status()
        .map_err(|source| HookError::Spawn { command: command.clone(), source })?;
    Ok(if status.success() { Validation::Pass } else { Validation::Fail })
}
