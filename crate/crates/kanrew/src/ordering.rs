//! Length-lexicographic well-orderings on paths and terms.
//!
//! Paths compare by length first, then lexicographically by a configured
//! arrow rank; terms compare by their path part first and break ties on a
//! configured element rank. Both orders are total and well-founded, and the
//! path order is compatible with concatenation on either side, so rules
//! oriented against them always terminate.

use std::cmp::Ordering;

use crate::presentation::{ArrId, ElemId, KanPresentation, Path, PresentationError, Term};

/// Rank tables for the arrow and element orders. Lower rank means smaller.
#[derive(Clone, Debug)]
pub struct OrderConfig {
    arrow_rank: Vec<u32>,
    element_rank: Vec<u32>,
}

impl OrderConfig {
    /// Declaration order: arrows and elements rank in the order the
    /// document declares them.
    pub fn declaration_order(pres: &KanPresentation) -> Self {
        OrderConfig {
            arrow_rank: (0..pres.delta().arrow_count() as u32).collect(),
            element_rank: (0..pres.element_count() as u32).collect(),
        }
    }

    /// Declaration order with optional overrides. Each override must list
    /// exactly the declared names, smallest first.
    pub fn with_overrides(
        pres: &KanPresentation,
        arrows: Option<&[String]>,
        elements: Option<&[String]>,
    ) -> Result<Self, PresentationError> {
        let mut cfg = Self::declaration_order(pres);
        if let Some(names) = arrows {
            cfg.arrow_rank = permutation_ranks(
                names,
                pres.delta().arrow_count(),
                "arrow-order",
                |n| pres.delta().arrow_id(n).map(|a| a.0 as usize),
            )?;
        }
        if let Some(names) = elements {
            cfg.element_rank = permutation_ranks(names, pres.element_count(), "element-order", |n| {
                pres.element_id(n).map(|e| e.0 as usize)
            })?;
        }
        Ok(cfg)
    }

    fn arrow_rank(&self, a: ArrId) -> u32 {
        self.arrow_rank[a.0 as usize]
    }

    fn element_rank(&self, e: ElemId) -> u32 {
        self.element_rank[e.0 as usize]
    }

    /// Length first, then lexicographic by arrow rank. Identity paths at
    /// different objects are ordered by object index so the order stays
    /// total.
    pub fn compare_paths(&self, p: &Path, q: &Path) -> Ordering {
        p.len()
            .cmp(&q.len())
            .then_with(|| {
                for (&a, &b) in p.arrows().iter().zip(q.arrows()) {
                    match self.arrow_rank(a).cmp(&self.arrow_rank(b)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| p.src().cmp(&q.src()))
    }

    /// Path part first, then element rank.
    pub fn compare_terms(&self, s: &Term, t: &Term) -> Ordering {
        self.compare_paths(s.path(), t.path())
            .then_with(|| self.element_rank(s.element()).cmp(&self.element_rank(t.element())))
    }
}

fn permutation_ranks(
    names: &[String],
    expected: usize,
    field: &str,
    lookup: impl Fn(&str) -> Option<usize>,
) -> Result<Vec<u32>, PresentationError> {
    if names.len() != expected {
        return Err(PresentationError::Document {
            field: field.into(),
            message: format!("expected {expected} names, got {}", names.len()),
        });
    }
    let mut ranks = vec![u32::MAX; expected];
    for (rank, name) in names.iter().enumerate() {
        let idx = lookup(name).ok_or_else(|| PresentationError::Document {
            field: field.into(),
            message: format!("`{name}` is not declared"),
        })?;
        if ranks[idx] != u32::MAX {
            return Err(PresentationError::Document {
                field: field.into(),
                message: format!("`{name}` listed twice"),
            });
        }
        ranks[idx] = rank as u32;
    }
    Ok(ranks)
}

/// Outcome of orienting a pair against the ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Oriented<T> {
    /// `lhs` is strictly greater than `rhs`.
    Rule { lhs: T, rhs: T },
    /// The two sides are equal; nothing to orient.
    Trivial,
}

pub fn orient_terms(a: Term, b: Term, cfg: &OrderConfig) -> Oriented<Term> {
    match cfg.compare_terms(&a, &b) {
        Ordering::Greater => Oriented::Rule { lhs: a, rhs: b },
        Ordering::Less => Oriented::Rule { lhs: b, rhs: a },
        Ordering::Equal => Oriented::Trivial,
    }
}

pub fn orient_paths(a: Path, b: Path, cfg: &OrderConfig) -> Oriented<Path> {
    match cfg.compare_paths(&a, &b) {
        Ordering::Greater => Oriented::Rule { lhs: a, rhs: b },
        Ordering::Less => Oriented::Rule { lhs: b, rhs: a },
        Ordering::Equal => Oriented::Trivial,
    }
}
