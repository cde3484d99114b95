//! Rules, initial rule generation, and reduction to normal form.
//!
//! Two kinds of rules act on terms. A term rule `(s, u)` applies to `t`
//! when `t` has the same element as `s` and `s`'s path is a prefix of
//! `t`'s; the matched prefix is replaced by `u`. A path rule `(l, r)`
//! applies wherever `l` occurs as a contiguous factor of the path part.
//! Reduction is deterministic: term rules before path rules, rules in
//! stored order, leftmost position first.

use thiserror::Error;

use crate::ordering::{orient_paths, orient_terms, OrderConfig, Oriented};
use crate::presentation::{KanPresentation, Path, Term};

/// Hard ceiling on reduction steps. With rules oriented against a
/// well-founded order the ceiling is unreachable; hitting it signals a
/// mis-oriented rule set.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("reduction exceeded {0} steps; the rule set is not compatible with the ordering")]
    StepLimit(usize),
    #[error("rule left-hand side does not exceed its right-hand side under the ordering")]
    NotDecreasing,
    #[error("rule sides are not parallel")]
    NotParallel,
    #[error("path rule has an empty left-hand side")]
    EmptyLhs,
}

/// A prefix-replacement rule on terms, strictly decreasing and
/// target-preserving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermRule {
    lhs: Term,
    rhs: Term,
}

impl TermRule {
    pub fn new(lhs: Term, rhs: Term, cfg: &OrderConfig) -> Result<Self, RewriteError> {
        if lhs.target() != rhs.target() {
            return Err(RewriteError::NotParallel);
        }
        if cfg.compare_terms(&lhs, &rhs) != std::cmp::Ordering::Greater {
            return Err(RewriteError::NotDecreasing);
        }
        Ok(TermRule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }
}

/// A factor-replacement rule on parallel paths, strictly decreasing, with
/// a nonempty left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRule {
    lhs: Path,
    rhs: Path,
}

impl PathRule {
    pub fn new(lhs: Path, rhs: Path, cfg: &OrderConfig) -> Result<Self, RewriteError> {
        if lhs.src() != rhs.src() || lhs.tgt() != rhs.tgt() {
            return Err(RewriteError::NotParallel);
        }
        if lhs.is_identity() {
            return Err(RewriteError::EmptyLhs);
        }
        if cfg.compare_paths(&lhs, &rhs) != std::cmp::Ordering::Greater {
            return Err(RewriteError::NotDecreasing);
        }
        Ok(PathRule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Path {
        &self.lhs
    }

    pub fn rhs(&self) -> &Path {
        &self.rhs
    }
}

/// The pair of rule families, in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RewriteSystem {
    term_rules: Vec<TermRule>,
    path_rules: Vec<PathRule>,
}

impl RewriteSystem {
    pub fn new(term_rules: Vec<TermRule>, path_rules: Vec<PathRule>) -> Self {
        RewriteSystem {
            term_rules,
            path_rules,
        }
    }

    pub fn term_rules(&self) -> &[TermRule] {
        &self.term_rules
    }

    pub fn path_rules(&self) -> &[PathRule] {
        &self.path_rules
    }

    pub fn rule_count(&self) -> usize {
        self.term_rules.len() + self.path_rules.len()
    }

    pub(crate) fn push_term_rule(&mut self, rule: TermRule) {
        self.term_rules.push(rule);
    }

    pub(crate) fn push_path_rule(&mut self, rule: PathRule) {
        self.path_rules.push(rule);
    }

    pub(crate) fn contains_term_rule(&self, rule: &TermRule) -> bool {
        self.term_rules.contains(rule)
    }

    pub(crate) fn contains_path_rule(&self, rule: &PathRule) -> bool {
        self.path_rules.contains(rule)
    }
}

/// Builds the starting system for a presentation: one action rule
/// `x|Fa -> (x.a)|id` per generator arrow and element of its domain, plus
/// one oriented rule per declared relation. Pairs whose sides are equal
/// are dropped, as are exact duplicates.
pub fn initial_rules(pres: &KanPresentation, cfg: &OrderConfig) -> RewriteSystem {
    let mut system = RewriteSystem::default();
    for a in pres.gamma().arrow_ids() {
        let image = pres.f_arr(a).clone();
        let target_base = pres.f_ob(pres.gamma().tgt(a));
        for &x in pres.x_ob(pres.gamma().src(a)) {
            let lhs = Term::pieces(x, image.clone());
            let rhs = Term::pieces(
                pres.apply_generator_action(x, a)
                    .expect("validated action is total"),
                Path::identity(target_base),
            );
            if let Oriented::Rule { lhs, rhs } = orient_terms(lhs, rhs, cfg) {
                let rule = TermRule { lhs, rhs };
                if !system.contains_term_rule(&rule) {
                    system.push_term_rule(rule);
                }
            }
        }
    }
    for (l, r) in pres.relations() {
        if let Oriented::Rule { lhs, rhs } = orient_paths(l.clone(), r.clone(), cfg) {
            let rule = PathRule { lhs, rhs };
            if !system.contains_path_rule(&rule) {
                system.push_path_rule(rule);
            }
        }
    }
    system
}

/// Applies the highest-priority matching rule once, or returns `None` when
/// the term is irreducible.
pub fn reduce_once(t: &Term, system: &RewriteSystem) -> Option<Term> {
    for rule in system.term_rules() {
        if rule.lhs.element == t.element
            && t.path.arrows.starts_with(&rule.lhs.path.arrows)
        {
            let suffix = &t.path.arrows[rule.lhs.path.len()..];
            return Some(Term::pieces(
                rule.rhs.element,
                rule.rhs.path.append(suffix, t.path.target),
            ));
        }
    }
    for rule in system.path_rules() {
        if let Some(path) = splice_leftmost(&t.path, rule) {
            return Some(Term::pieces(t.element, path));
        }
    }
    None
}

/// Applies the first path rule matching at the leftmost position, or
/// returns `None`.
pub fn path_reduce_once(path: &Path, rules: &[PathRule]) -> Option<Path> {
    rules.iter().find_map(|rule| splice_leftmost(path, rule))
}

fn splice_leftmost(path: &Path, rule: &PathRule) -> Option<Path> {
    let needle = &rule.lhs.arrows;
    let haystack = &path.arrows;
    if needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len())
        .find(|&start| &haystack[start..start + needle.len()] == needle.as_slice())
        .map(|start| {
            let mut arrows = Vec::with_capacity(haystack.len() - needle.len() + rule.rhs.len());
            arrows.extend_from_slice(&haystack[..start]);
            arrows.extend_from_slice(&rule.rhs.arrows);
            arrows.extend_from_slice(&haystack[start + needle.len()..]);
            Path::pieces(path.base, path.target, arrows)
        })
}

/// Reduces to a fixed point under the default step ceiling.
pub fn normal_form(t: &Term, system: &RewriteSystem) -> Result<Term, RewriteError> {
    normal_form_with_limit(t, system, DEFAULT_STEP_LIMIT)
}

pub fn normal_form_with_limit(
    t: &Term,
    system: &RewriteSystem,
    limit: usize,
) -> Result<Term, RewriteError> {
    let mut current = t.clone();
    for _ in 0..limit {
        match reduce_once(&current, system) {
            Some(next) => current = next,
            None => return Ok(current),
        }
    }
    Err(RewriteError::StepLimit(limit))
}

/// Factor-rewrites a bare path to a fixed point.
pub fn path_normal_form(path: &Path, rules: &[PathRule]) -> Result<Path, RewriteError> {
    let mut current = path.clone();
    for _ in 0..DEFAULT_STEP_LIMIT {
        match path_reduce_once(&current, rules) {
            Some(next) => current = next,
            None => return Ok(current),
        }
    }
    Err(RewriteError::StepLimit(DEFAULT_STEP_LIMIT))
}

/// Under a complete system, two terms are equivalent exactly when their
/// normal forms coincide.
pub fn equivalent(
    t1: &Term,
    t2: &Term,
    system: &RewriteSystem,
) -> Result<bool, RewriteError> {
    Ok(normal_form(t1, system)? == normal_form(t2, system)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_presentation, parse_path_literal, parse_term_literal};

    fn example4() -> KanPresentation {
        parse_presentation(include_str!("../tests/data/example4.kan")).unwrap()
    }

    fn rules_as_strings(pres: &KanPresentation, system: &RewriteSystem) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = system
            .term_rules()
            .iter()
            .map(|r| {
                (
                    pres.display_term(r.lhs()).to_string(),
                    pres.display_term(r.rhs()).to_string(),
                )
            })
            .chain(system.path_rules().iter().map(|r| {
                (
                    pres.display_path(r.lhs()).to_string(),
                    pres.display_path(r.rhs()).to_string(),
                )
            }))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn initial_rules_of_worked_example() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        let system = initial_rules(&p, &cfg);
        assert_eq!(system.term_rules().len(), 5);
        assert_eq!(system.path_rules().len(), 1);
        let mut expected = vec![
            ("x1|b1".to_string(), "y1|id_B2".to_string()),
            ("x2|b1".to_string(), "y2|id_B2".to_string()),
            ("x3|b1".to_string(), "y1|id_B2".to_string()),
            ("y1|b2.b3".to_string(), "x1|id_B1".to_string()),
            ("y2|b2.b3".to_string(), "x2|id_B1".to_string()),
            ("b1.b2.b3".to_string(), "b4".to_string()),
        ];
        expected.sort();
        assert_eq!(rules_as_strings(&p, &system), expected);
    }

    #[test]
    fn initial_rules_empty_presentation() {
        let p = parse_presentation(include_str!("../tests/data/empty.kan")).unwrap();
        let cfg = OrderConfig::declaration_order(&p);
        let system = initial_rules(&p, &cfg);
        assert_eq!(system.rule_count(), 0);
    }

    #[test]
    fn reversed_relation_orients_the_same() {
        let p = example4();
        let reversed = {
            let doc = include_str!("../tests/data/example4.kan")
                .replace(r#"[[["b1", "b2", "b3"], ["b4"]]]"#, r#"[[["b4"], ["b1", "b2", "b3"]]]"#);
            parse_presentation(&doc).unwrap()
        };
        let cfg = OrderConfig::declaration_order(&p);
        let a = initial_rules(&p, &cfg);
        let b = initial_rules(&reversed, &OrderConfig::declaration_order(&reversed));
        assert_eq!(rules_as_strings(&p, &a), rules_as_strings(&reversed, &b));
    }

    #[test]
    fn reduce_once_applies_prefix_rule() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        let system = initial_rules(&p, &cfg);
        let t = parse_term_literal(&p, "x3|b1.b2.b3").unwrap();
        let u = reduce_once(&t, &system).unwrap();
        assert_eq!(p.display_term(&u).to_string(), "y1|b2.b3");
    }

    #[test]
    fn reduce_once_none_when_irreducible() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        let system = initial_rules(&p, &cfg);
        let t = parse_term_literal(&p, "x1|b5.b3").unwrap();
        assert_eq!(reduce_once(&t, &system), None);
    }

    #[test]
    fn normal_form_two_step_trace() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        let system = initial_rules(&p, &cfg);
        let t = parse_term_literal(&p, "x1|b1.b2.b3").unwrap();
        let step1 = reduce_once(&t, &system).unwrap();
        assert_eq!(p.display_term(&step1).to_string(), "y1|b2.b3");
        let step2 = reduce_once(&step1, &system).unwrap();
        assert_eq!(p.display_term(&step2).to_string(), "x1|id_B1");
        assert_eq!(normal_form(&t, &system).unwrap(), step2);
    }

    #[test]
    fn path_normal_form_examples() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        let system = initial_rules(&p, &cfg);
        let rel = parse_path_literal(&p, "b1.b2.b3", None).unwrap();
        let b4 = parse_path_literal(&p, "b4", None).unwrap();
        assert_eq!(path_normal_form(&rel, system.path_rules()).unwrap(), b4);
        let id = Path::identity(p.delta().object_id("B1").unwrap());
        assert_eq!(path_normal_form(&id, system.path_rules()).unwrap(), id);
        let free = parse_path_literal(&p, "b5.b3", None).unwrap();
        assert_eq!(path_normal_form(&free, system.path_rules()).unwrap(), free);
    }

    #[test]
    fn step_limit_reports_bad_orientation() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        // A deliberately circular pair, bypassing the checked constructor.
        let ab = parse_term_literal(&p, "x1|b4").unwrap();
        let system = RewriteSystem::new(
            vec![
                TermRule {
                    lhs: ab.clone(),
                    rhs: parse_term_literal(&p, "x2|b4").unwrap(),
                },
                TermRule {
                    lhs: parse_term_literal(&p, "x2|b4").unwrap(),
                    rhs: ab.clone(),
                },
            ],
            vec![],
        );
        let _ = cfg;
        assert!(matches!(
            normal_form_with_limit(&ab, &system, 100),
            Err(RewriteError::StepLimit(100))
        ));
    }

    #[test]
    fn checked_constructors_enforce_invariants() {
        let p = example4();
        let cfg = OrderConfig::declaration_order(&p);
        let small = parse_term_literal(&p, "x1|id").unwrap();
        let big = parse_term_literal(&p, "x1|b4").unwrap();
        assert!(TermRule::new(small.clone(), big.clone(), &cfg).is_err());
        assert!(TermRule::new(big, small, &cfg).is_ok());

        let b1 = parse_path_literal(&p, "b1", None).unwrap();
        let b4 = parse_path_literal(&p, "b4", None).unwrap();
        // b1: B1 -> B2 and b4: B1 -> B1 are not parallel.
        assert!(PathRule::new(b1, b4, &cfg).is_err());
    }
}
