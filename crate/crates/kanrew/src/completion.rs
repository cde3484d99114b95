//! Overlap detection, critical pairs, and the completion procedure.
//!
//! Overlaps between the two rule families come in five kinds:
//!
//! | kind  | rules       | witness                                  | critical pair      |
//! |-------|-------------|------------------------------------------|--------------------|
//! | (i)   | term, term  | `s2 = s1.q`                              | `(u1.q, u2)`       |
//! | (ii)  | path, path  | `l1 = p l2 q`                            | `(r1, p r2 q)`     |
//! | (iii) | path, path  | `l1 q = p l2`, shared part proper        | `(r1 q, p r2)`     |
//! | (iv)  | term, path  | `s1.q = s.l1`, suffix of `s1` meets `l1` | `(u1.q, s.r1)`     |
//! | (v)   | term, path  | `s1 = s.(l1 q)`                          | `(u1, s.r1 q)`     |
//!
//! Kinds (ii) and (iii) partition the path/path cases — (iii) requires a
//! nonempty shared part with overhang on both sides — and likewise (iv)
//! and (v) partition the term/path cases. Completion repeatedly collects
//! overlaps against a frozen rule list, normalizes each critical pair, and
//! adds the oriented unresolved ones; additions take effect on the next
//! pass. The completed output is interreduced.

use crate::ordering::{orient_paths, orient_terms, OrderConfig, Oriented};
use crate::presentation::{Path, Term};
use crate::rewrite::{
    normal_form, path_normal_form, PathRule, RewriteError, RewriteSystem, TermRule,
};

/// The five overlap kinds, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OverlapKind {
    /// (i) one term-rule left side is a prefix of another.
    TermPrefix,
    /// (ii) one path-rule left side is a factor of another.
    PathFactor,
    /// (iii) a proper suffix of one path-rule left side is a proper prefix
    /// of another.
    PathChain,
    /// (iv) a suffix of a term-rule left side is a proper prefix of a
    /// path-rule left side.
    TermPathBoundary,
    /// (v) a path-rule left side is a factor of a term-rule left side.
    PathInTerm,
}

impl OverlapKind {
    /// Roman-numeral label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            OverlapKind::TermPrefix => "i",
            OverlapKind::PathFactor => "ii",
            OverlapKind::PathChain => "iii",
            OverlapKind::TermPathBoundary => "iv",
            OverlapKind::PathInTerm => "v",
        }
    }
}

/// Two rules meeting on a shared part of one term. `rule1`/`rule2` index
/// into the family the kind dictates. `position` is the prefix length
/// (kind i), factor start (ii, v), or shared-part length (iii, iv).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub rule1: usize,
    pub rule2: usize,
    pub position: usize,
}

/// The two one-step reducts of a critical term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalPair {
    Terms(Term, Term),
    Paths(Path, Path),
}

/// A common reduct witnessing that a critical pair resolves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    Term(Term),
    Path(Path),
}

/// Enumerates every overlap of the system, in canonical order: kind, then
/// first rule index, then second, then position.
pub fn find_overlaps(system: &RewriteSystem) -> Vec<Overlap> {
    let mut out = Vec::new();
    let term_rules = system.term_rules();
    let path_rules = system.path_rules();

    for (i, r1) in term_rules.iter().enumerate() {
        for (j, r2) in term_rules.iter().enumerate() {
            if r1.lhs().element() == r2.lhs().element()
                && r2.lhs().path().arrows().starts_with(r1.lhs().path().arrows())
            {
                out.push(Overlap {
                    kind: OverlapKind::TermPrefix,
                    rule1: i,
                    rule2: j,
                    position: r1.lhs().path().len(),
                });
            }
        }
    }

    for (i, r1) in path_rules.iter().enumerate() {
        for (j, r2) in path_rules.iter().enumerate() {
            let l1 = r1.lhs().arrows();
            let l2 = r2.lhs().arrows();
            if l2.len() <= l1.len() {
                for start in 0..=l1.len() - l2.len() {
                    if &l1[start..start + l2.len()] == l2 {
                        out.push(Overlap {
                            kind: OverlapKind::PathFactor,
                            rule1: i,
                            rule2: j,
                            position: start,
                        });
                    }
                }
            }
        }
    }

    for (i, r1) in path_rules.iter().enumerate() {
        for (j, r2) in path_rules.iter().enumerate() {
            let l1 = r1.lhs().arrows();
            let l2 = r2.lhs().arrows();
            for shared in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - shared..] == l2[..shared] {
                    out.push(Overlap {
                        kind: OverlapKind::PathChain,
                        rule1: i,
                        rule2: j,
                        position: shared,
                    });
                }
            }
        }
    }

    for (i, r1) in term_rules.iter().enumerate() {
        for (j, r2) in path_rules.iter().enumerate() {
            let w = r1.lhs().path().arrows();
            let l = r2.lhs().arrows();
            if l.len() < 2 {
                continue;
            }
            for shared in 1..=w.len().min(l.len() - 1) {
                if w[w.len() - shared..] == l[..shared] {
                    out.push(Overlap {
                        kind: OverlapKind::TermPathBoundary,
                        rule1: i,
                        rule2: j,
                        position: shared,
                    });
                }
            }
        }
    }

    for (i, r1) in term_rules.iter().enumerate() {
        for (j, r2) in path_rules.iter().enumerate() {
            let w = r1.lhs().path().arrows();
            let l = r2.lhs().arrows();
            if l.len() <= w.len() {
                for start in 0..=w.len() - l.len() {
                    if &w[start..start + l.len()] == l {
                        out.push(Overlap {
                            kind: OverlapKind::PathInTerm,
                            rule1: i,
                            rule2: j,
                            position: start,
                        });
                    }
                }
            }
        }
    }

    out
}

/// Reconstructs the critical pair an overlap witnesses.
pub fn critical_pair(overlap: &Overlap, system: &RewriteSystem) -> CriticalPair {
    let term_rules = system.term_rules();
    let path_rules = system.path_rules();
    match overlap.kind {
        OverlapKind::TermPrefix => {
            let r1 = &term_rules[overlap.rule1];
            let r2 = &term_rules[overlap.rule2];
            let q = &r2.lhs().path().arrows()[overlap.position..];
            let left = Term::pieces(
                r1.rhs().element(),
                r1.rhs().path().append(q, r2.lhs().target()),
            );
            CriticalPair::Terms(left, r2.rhs().clone())
        }
        OverlapKind::PathFactor => {
            let r1 = &path_rules[overlap.rule1];
            let r2 = &path_rules[overlap.rule2];
            let l1 = r1.lhs().arrows();
            let l2_len = r2.lhs().len();
            let mut arrows = Vec::with_capacity(l1.len() - l2_len + r2.rhs().len());
            arrows.extend_from_slice(&l1[..overlap.position]);
            arrows.extend_from_slice(r2.rhs().arrows());
            arrows.extend_from_slice(&l1[overlap.position + l2_len..]);
            let right = Path::pieces(r1.lhs().src(), r1.lhs().tgt(), arrows);
            CriticalPair::Paths(r1.rhs().clone(), right)
        }
        OverlapKind::PathChain => {
            let r1 = &path_rules[overlap.rule1];
            let r2 = &path_rules[overlap.rule2];
            let l1 = r1.lhs().arrows();
            let l2 = r2.lhs().arrows();
            let shared = overlap.position;
            let left = r1.rhs().append(&l2[shared..], r2.lhs().tgt());
            let mut arrows = Vec::with_capacity(l1.len() - shared + r2.rhs().len());
            arrows.extend_from_slice(&l1[..l1.len() - shared]);
            arrows.extend_from_slice(r2.rhs().arrows());
            let right = Path::pieces(r1.lhs().src(), r2.rhs().tgt(), arrows);
            CriticalPair::Paths(left, right)
        }
        OverlapKind::TermPathBoundary => {
            let r1 = &term_rules[overlap.rule1];
            let r2 = &path_rules[overlap.rule2];
            let w = r1.lhs().path().arrows();
            let l = r2.lhs().arrows();
            let shared = overlap.position;
            let left = Term::pieces(
                r1.rhs().element(),
                r1.rhs().path().append(&l[shared..], r2.lhs().tgt()),
            );
            let mut arrows = Vec::with_capacity(w.len() - shared + r2.rhs().len());
            arrows.extend_from_slice(&w[..w.len() - shared]);
            arrows.extend_from_slice(r2.rhs().arrows());
            let right = Term::pieces(
                r1.lhs().element(),
                Path::pieces(r1.lhs().path().src(), r2.rhs().tgt(), arrows),
            );
            CriticalPair::Terms(left, right)
        }
        OverlapKind::PathInTerm => {
            let r1 = &term_rules[overlap.rule1];
            let r2 = &path_rules[overlap.rule2];
            let w = r1.lhs().path().arrows();
            let l_len = r2.lhs().len();
            let mut arrows = Vec::with_capacity(w.len() - l_len + r2.rhs().len());
            arrows.extend_from_slice(&w[..overlap.position]);
            arrows.extend_from_slice(r2.rhs().arrows());
            arrows.extend_from_slice(&w[overlap.position + l_len..]);
            let right = Term::pieces(
                r1.lhs().element(),
                Path::pieces(r1.lhs().path().src(), r1.lhs().target(), arrows),
            );
            CriticalPair::Terms(r1.rhs().clone(), right)
        }
    }
}

/// Reduces both sides to normal form; the pair resolves when they meet.
pub fn resolves(
    pair: &CriticalPair,
    system: &RewriteSystem,
) -> Result<Option<Resolution>, RewriteError> {
    match pair {
        CriticalPair::Terms(a, b) => {
            let na = normal_form(a, system)?;
            let nb = normal_form(b, system)?;
            Ok((na == nb).then_some(Resolution::Term(na)))
        }
        CriticalPair::Paths(a, b) => {
            let na = path_normal_form(a, system.path_rules())?;
            let nb = path_normal_form(b, system.path_rules())?;
            Ok((na == nb).then_some(Resolution::Path(na)))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionLimits {
    pub max_rules: usize,
    pub max_passes: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_rules: 10_000,
            max_passes: 100,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Completed,
    LimitExceeded,
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub status: CompletionStatus,
    pub system: RewriteSystem,
    /// Passes run, including the final pass that added nothing.
    pub passes: usize,
    /// Rules added over all passes, before interreduction.
    pub added: usize,
}

/// Snapshot handed to the progress callback after each pass.
#[derive(Clone, Copy, Debug)]
pub struct PassReport {
    pub pass: usize,
    pub rule_count: usize,
    pub added: usize,
}

/// Runs completion to a fixed point or to the given limits.
pub fn complete(
    start: RewriteSystem,
    cfg: &OrderConfig,
    limits: &CompletionLimits,
) -> Result<CompletionResult, RewriteError> {
    complete_with_progress(start, cfg, limits, |_| {})
}

pub fn complete_with_progress(
    start: RewriteSystem,
    cfg: &OrderConfig,
    limits: &CompletionLimits,
    mut progress: impl FnMut(&PassReport),
) -> Result<CompletionResult, RewriteError> {
    let mut system = start;
    let mut passes = 0;
    let mut added_total = 0;

    if system.rule_count() > limits.max_rules {
        return Ok(CompletionResult {
            status: CompletionStatus::LimitExceeded,
            system,
            passes,
            added: added_total,
        });
    }

    while passes < limits.max_passes {
        passes += 1;
        let mut new_terms: Vec<TermRule> = Vec::new();
        let mut new_paths: Vec<PathRule> = Vec::new();
        let mut hit_rule_limit = false;

        for overlap in find_overlaps(&system) {
            let room = system.rule_count() + new_terms.len() + new_paths.len()
                < limits.max_rules;
            match critical_pair(&overlap, &system) {
                CriticalPair::Terms(a, b) => {
                    let na = normal_form(&a, &system)?;
                    let nb = normal_form(&b, &system)?;
                    if let Oriented::Rule { lhs, rhs } = orient_terms(na, nb, cfg) {
                        let rule = TermRule::new(lhs, rhs, cfg)
                            .expect("oriented pair is decreasing and parallel");
                        if !system.contains_term_rule(&rule) && !new_terms.contains(&rule) {
                            if !room {
                                hit_rule_limit = true;
                                break;
                            }
                            new_terms.push(rule);
                        }
                    }
                }
                CriticalPair::Paths(a, b) => {
                    let na = path_normal_form(&a, system.path_rules())?;
                    let nb = path_normal_form(&b, system.path_rules())?;
                    if let Oriented::Rule { lhs, rhs } = orient_paths(na, nb, cfg) {
                        let rule = PathRule::new(lhs, rhs, cfg)
                            .expect("oriented pair is decreasing and parallel");
                        if !system.contains_path_rule(&rule) && !new_paths.contains(&rule) {
                            if !room {
                                hit_rule_limit = true;
                                break;
                            }
                            new_paths.push(rule);
                        }
                    }
                }
            }
        }

        let added = new_terms.len() + new_paths.len();
        added_total += added;
        for rule in new_terms {
            system.push_term_rule(rule);
        }
        for rule in new_paths {
            system.push_path_rule(rule);
        }
        progress(&PassReport {
            pass: passes,
            rule_count: system.rule_count(),
            added,
        });

        if hit_rule_limit {
            return Ok(CompletionResult {
                status: CompletionStatus::LimitExceeded,
                system,
                passes,
                added: added_total,
            });
        }
        if added == 0 {
            let system = interreduce(system)?;
            return Ok(CompletionResult {
                status: CompletionStatus::Completed,
                system,
                passes,
                added: added_total,
            });
        }
    }

    Ok(CompletionResult {
        status: CompletionStatus::LimitExceeded,
        system,
        passes,
        added: added_total,
    })
}

/// Certificate check: every overlap of the system resolves.
pub fn all_overlaps_resolve(system: &RewriteSystem) -> Result<bool, RewriteError> {
    for overlap in find_overlaps(system) {
        let pair = critical_pair(&overlap, system);
        if resolves(&pair, system)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drops rules whose left side another surviving rule already reduces,
/// then fully reduces every surviving right side.
fn interreduce(system: RewriteSystem) -> Result<RewriteSystem, RewriteError> {
    let term_rules = system.term_rules();
    let path_rules = system.path_rules();
    let mut keep_paths = vec![true; path_rules.len()];
    for i in 0..path_rules.len() {
        let lhs = path_rules[i].lhs().arrows();
        let reducible = path_rules.iter().enumerate().any(|(j, other)| {
            j != i && keep_paths[j] && is_factor(other.lhs().arrows(), lhs)
        });
        if reducible {
            keep_paths[i] = false;
        }
    }
    let mut keep_terms = vec![true; term_rules.len()];
    for i in 0..term_rules.len() {
        let lhs = &term_rules[i].lhs();
        let by_term = term_rules.iter().enumerate().any(|(j, other)| {
            j != i
                && keep_terms[j]
                && other.lhs().element() == lhs.element()
                && lhs.path().arrows().starts_with(other.lhs().path().arrows())
        });
        let by_path = path_rules.iter().enumerate().any(|(j, other)| {
            keep_paths[j] && is_factor(other.lhs().arrows(), lhs.path().arrows())
        });
        if by_term || by_path {
            keep_terms[i] = false;
        }
    }

    let kept = RewriteSystem::new(
        term_rules
            .iter()
            .zip(&keep_terms)
            .filter(|(_, &keep)| keep)
            .map(|(r, _)| r.clone())
            .collect(),
        path_rules
            .iter()
            .zip(&keep_paths)
            .filter(|(_, &keep)| keep)
            .map(|(r, _)| r.clone())
            .collect(),
    );

    let term_rules = kept
        .term_rules()
        .iter()
        .map(|r| {
            Ok(TermRule::new_unchecked(
                r.lhs().clone(),
                normal_form(r.rhs(), &kept)?,
            ))
        })
        .collect::<Result<Vec<_>, RewriteError>>()?;
    let path_rules = kept
        .path_rules()
        .iter()
        .map(|r| {
            Ok(PathRule::new_unchecked(
                r.lhs().clone(),
                path_normal_form(r.rhs(), kept.path_rules())?,
            ))
        })
        .collect::<Result<Vec<_>, RewriteError>>()?;
    Ok(RewriteSystem::new(term_rules, path_rules))
}

fn is_factor(needle: &[crate::presentation::ArrId], haystack: &[crate::presentation::ArrId]) -> bool {
    needle.len() <= haystack.len()
        && (0..=haystack.len() - needle.len())
            .any(|start| &haystack[start..start + needle.len()] == needle)
}
