//! Graphs, free-category paths, terms, and presentations of induced actions.
//!
//! A presentation bundles two finite directed graphs `A` and `B`, a set of
//! parallel-path relations on the free category over `B`, an action of the
//! generating arrows of `A` on finite element sets, and the generator images
//! of a functor from `A` into the free category over `B`. Everything
//! downstream — rule generation, completion, tabulation, normal-form
//! languages — is computed from this data.
//!
//! All values here are immutable after construction and safe to share
//! across threads.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Object index within its owning graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub u32);

/// Arrow index within its owning graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrId(pub u32);

/// Element index in the disjoint union of all declared element sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

/// Errors from parsing or validating a presentation, and from composing
/// paths and terms.
#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid `{field}`: {message}")]
    Document { field: String, message: String },
    #[error("duplicate object `{0}`")]
    DuplicateObject(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("non-composable path: arrow `{arrow}` starts at `{found}`, expected `{expected}`")]
    NonComposablePath {
        arrow: String,
        expected: String,
        found: String,
    },
    #[error("a path with no arrows needs an explicit anchor object (write `id_<object>`)")]
    EmptyPath,
    #[error("relation {index}: sides are not parallel")]
    NotParallel { index: usize },
    #[error("image of arrow `{arrow}` does not connect the object images of its endpoints")]
    FunctorImageMismatch { arrow: String },
    #[error("arrow `{arrow}` has no image for element `{element}`")]
    MissingImage { arrow: String, element: String },
    #[error("arrow `{arrow}` maps element `{element}` twice")]
    DuplicateImage { arrow: String, element: String },
    #[error("arrow `{arrow}` maps `{element}` to `{image}`, which is outside its codomain set")]
    ImageOutsideCodomain {
        arrow: String,
        element: String,
        image: String,
    },
    #[error("element `{element}` is not in the domain set of arrow `{arrow}`")]
    ElementNotInDomain { element: String, arrow: String },
    #[error("non-composable endpoints: left part ends at `{left_end}`, right part starts at `{right_start}`")]
    NonComposable {
        left_end: String,
        right_start: String,
    },
}

/// A finite directed graph with named objects and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    object_index: HashMap<String, ObjId>,
    arrow_index: HashMap<String, ArrId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Arrow {
    name: String,
    src: ObjId,
    tgt: ObjId,
}

impl Graph {
    /// Builds a graph from named objects and `(name, src, tgt)` arrow
    /// declarations, rejecting duplicates and undeclared endpoints.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, PresentationError> {
        let mut graph = Graph::default();
        for name in objects {
            if graph.object_index.contains_key(&name) {
                return Err(PresentationError::DuplicateObject(name));
            }
            let id = ObjId(graph.objects.len() as u32);
            graph.object_index.insert(name.clone(), id);
            graph.objects.push(name);
        }
        for (name, src, tgt) in arrows {
            if graph.arrow_index.contains_key(&name) {
                return Err(PresentationError::DuplicateArrow(name));
            }
            let src = graph
                .object_id(&src)
                .ok_or(PresentationError::UnknownObject(src))?;
            let tgt = graph
                .object_id(&tgt)
                .ok_or(PresentationError::UnknownObject(tgt))?;
            let id = ArrId(graph.arrows.len() as u32);
            graph.arrow_index.insert(name.clone(), id);
            graph.arrows.push(Arrow { name, src, tgt });
        }
        Ok(graph)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrId> {
        self.arrow_index.get(name).copied()
    }

    pub fn object_name(&self, id: ObjId) -> &str {
        &self.objects[id.0 as usize]
    }

    pub fn arrow_name(&self, id: ArrId) -> &str {
        &self.arrows[id.0 as usize].name
    }

    pub fn src(&self, id: ArrId) -> ObjId {
        self.arrows[id.0 as usize].src
    }

    pub fn tgt(&self, id: ArrId) -> ObjId {
        self.arrows[id.0 as usize].tgt
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(|i| ObjId(i as u32))
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrId> + '_ {
        (0..self.arrows.len()).map(|i| ArrId(i as u32))
    }

    /// Arrows leaving `obj`, in declaration order.
    pub fn arrows_from(&self, obj: ObjId) -> impl Iterator<Item = ArrId> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.src == obj)
            .map(|(i, _)| ArrId(i as u32))
    }
}

/// A composable arrow sequence in the free category over a graph.
///
/// The anchor object is stored explicitly so that identity (empty) paths at
/// different objects are distinct values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub(crate) base: ObjId,
    pub(crate) target: ObjId,
    pub(crate) arrows: Vec<ArrId>,
}

impl Path {
    /// The identity path at an object.
    pub fn identity(at: ObjId) -> Self {
        Path {
            base: at,
            target: at,
            arrows: Vec::new(),
        }
    }

    /// Builds a path from a nonempty arrow sequence, checking that
    /// consecutive arrows compose in `graph`.
    pub fn from_arrows(graph: &Graph, arrows: &[ArrId]) -> Result<Self, PresentationError> {
        let first = *arrows.first().ok_or(PresentationError::EmptyPath)?;
        let base = graph.src(first);
        let mut at = base;
        for &a in arrows {
            if graph.src(a) != at {
                return Err(PresentationError::NonComposablePath {
                    arrow: graph.arrow_name(a).to_string(),
                    expected: graph.object_name(at).to_string(),
                    found: graph.object_name(graph.src(a)).to_string(),
                });
            }
            at = graph.tgt(a);
        }
        Ok(Path {
            base,
            target: at,
            arrows: arrows.to_vec(),
        })
    }

    pub(crate) fn pieces(base: ObjId, target: ObjId, arrows: Vec<ArrId>) -> Self {
        Path {
            base,
            target,
            arrows,
        }
    }

    pub fn src(&self) -> ObjId {
        self.base
    }

    pub fn tgt(&self) -> ObjId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_identity(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrId] {
        &self.arrows
    }

    pub(crate) fn append(&self, arrows: &[ArrId], target: ObjId) -> Path {
        let mut out = self.arrows.clone();
        out.extend_from_slice(arrows);
        Path::pieces(self.base, target, out)
    }
}

/// An element paired with a path out of its anchoring object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub(crate) element: ElemId,
    pub(crate) path: Path,
}

impl Term {
    pub(crate) fn pieces(element: ElemId, path: Path) -> Self {
        Term { element, path }
    }

    pub fn element(&self) -> ElemId {
        self.element
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The object the term currently sits over.
    pub fn target(&self) -> ObjId {
        self.path.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ElementDecl {
    name: String,
    owner: ObjId,
}

/// A finite presentation of an induced action: the two generating graphs,
/// relations between parallel paths, element sets with generator actions,
/// and the functor data on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct KanPresentation {
    gamma: Graph,
    delta: Graph,
    relations: Vec<(Path, Path)>,
    f_ob: Vec<ObjId>,
    f_arr: Vec<Path>,
    elements: Vec<ElementDecl>,
    element_index: HashMap<String, ElemId>,
    x_ob: Vec<Vec<ElemId>>,
    x_arr: Vec<HashMap<ElemId, ElemId>>,
}

impl KanPresentation {
    /// Assembles and validates a presentation.
    ///
    /// `f_ob` and `f_arr` are indexed by the objects and arrows of `gamma`;
    /// `x_ob` lists element names per `gamma`-object; `x_arr` gives, per
    /// `gamma`-arrow, the `(element, image)` pairs of its action.
    pub fn new(
        gamma: Graph,
        delta: Graph,
        relations: Vec<(Path, Path)>,
        f_ob: Vec<ObjId>,
        f_arr: Vec<Path>,
        x_ob: Vec<Vec<String>>,
        x_arr: Vec<Vec<(String, String)>>,
    ) -> Result<Self, PresentationError> {
        if f_ob.len() != gamma.object_count()
            || x_ob.len() != gamma.object_count()
            || f_arr.len() != gamma.arrow_count()
            || x_arr.len() != gamma.arrow_count()
        {
            return Err(PresentationError::Document {
                field: "presentation".into(),
                message: "object/arrow tables do not match the declared graph".into(),
            });
        }

        for (index, (l, r)) in relations.iter().enumerate() {
            if l.src() != r.src() || l.tgt() != r.tgt() {
                return Err(PresentationError::NotParallel { index });
            }
        }

        for a in gamma.arrow_ids() {
            let image = &f_arr[a.0 as usize];
            let want_src = f_ob[gamma.src(a).0 as usize];
            let want_tgt = f_ob[gamma.tgt(a).0 as usize];
            if image.src() != want_src || image.tgt() != want_tgt {
                return Err(PresentationError::FunctorImageMismatch {
                    arrow: gamma.arrow_name(a).to_string(),
                });
            }
        }

        let mut elements = Vec::new();
        let mut element_index = HashMap::new();
        let mut x_ob_ids = Vec::with_capacity(x_ob.len());
        for (ob, names) in x_ob.into_iter().enumerate() {
            let mut ids = Vec::with_capacity(names.len());
            for name in names {
                if element_index.contains_key(&name) {
                    return Err(PresentationError::DuplicateElement(name));
                }
                let id = ElemId(elements.len() as u32);
                element_index.insert(name.clone(), id);
                elements.push(ElementDecl {
                    name,
                    owner: ObjId(ob as u32),
                });
                ids.push(id);
            }
            x_ob_ids.push(ids);
        }

        let mut x_arr_maps = Vec::with_capacity(x_arr.len());
        for (i, pairs) in x_arr.into_iter().enumerate() {
            let a = ArrId(i as u32);
            let arrow = gamma.arrow_name(a).to_string();
            let domain = &x_ob_ids[gamma.src(a).0 as usize];
            let codomain = &x_ob_ids[gamma.tgt(a).0 as usize];
            let mut map = HashMap::new();
            for (elem, image) in pairs {
                let e = *element_index
                    .get(&elem)
                    .ok_or_else(|| PresentationError::UnknownElement(elem.clone()))?;
                if !domain.contains(&e) {
                    return Err(PresentationError::ElementNotInDomain {
                        element: elem,
                        arrow,
                    });
                }
                let img = *element_index
                    .get(&image)
                    .ok_or_else(|| PresentationError::UnknownElement(image.clone()))?;
                if !codomain.contains(&img) {
                    return Err(PresentationError::ImageOutsideCodomain {
                        arrow,
                        element: elem,
                        image,
                    });
                }
                if map.insert(e, img).is_some() {
                    return Err(PresentationError::DuplicateImage {
                        arrow,
                        element: elem,
                    });
                }
            }
            for &e in domain {
                if !map.contains_key(&e) {
                    return Err(PresentationError::MissingImage {
                        arrow,
                        element: elements[e.0 as usize].name.clone(),
                    });
                }
            }
            x_arr_maps.push(map);
        }

        Ok(KanPresentation {
            gamma,
            delta,
            relations,
            f_ob,
            f_arr,
            elements,
            element_index,
            x_ob: x_ob_ids,
            x_arr: x_arr_maps,
        })
    }

    pub fn gamma(&self) -> &Graph {
        &self.gamma
    }

    pub fn delta(&self) -> &Graph {
        &self.delta
    }

    pub fn relations(&self) -> &[(Path, Path)] {
        &self.relations
    }

    /// Object image under the functor.
    pub fn f_ob(&self, a_obj: ObjId) -> ObjId {
        self.f_ob[a_obj.0 as usize]
    }

    /// Arrow image under the functor: a path in the free category over `B`.
    pub fn f_arr(&self, a: ArrId) -> &Path {
        &self.f_arr[a.0 as usize]
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn element_ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.elements.len()).map(|i| ElemId(i as u32))
    }

    pub fn element_id(&self, name: &str) -> Option<ElemId> {
        self.element_index.get(name).copied()
    }

    pub fn element_name(&self, e: ElemId) -> &str {
        &self.elements[e.0 as usize].name
    }

    /// The `A`-object whose element set declares `e`.
    pub fn element_owner(&self, e: ElemId) -> ObjId {
        self.elements[e.0 as usize].owner
    }

    /// The `B`-object where terms on `e` anchor: the functor image of the
    /// owning object.
    pub fn element_base(&self, e: ElemId) -> ObjId {
        self.f_ob(self.element_owner(e))
    }

    /// Elements declared at an `A`-object, in declaration order.
    pub fn x_ob(&self, a_obj: ObjId) -> &[ElemId] {
        &self.x_ob[a_obj.0 as usize]
    }

    /// Builds the term `x|p`, checking the path anchors at the element's
    /// base object.
    pub fn term(&self, element: ElemId, path: Path) -> Result<Term, PresentationError> {
        let base = self.element_base(element);
        if path.src() != base {
            return Err(PresentationError::NonComposable {
                left_end: self.delta.object_name(base).to_string(),
                right_start: self.delta.object_name(path.src()).to_string(),
            });
        }
        Ok(Term::pieces(element, path))
    }

    /// Concatenates two paths, requiring the left target to meet the right
    /// source.
    pub fn compose_path(&self, p: &Path, q: &Path) -> Result<Path, PresentationError> {
        if p.tgt() != q.src() {
            return Err(PresentationError::NonComposable {
                left_end: self.delta.object_name(p.tgt()).to_string(),
                right_start: self.delta.object_name(q.src()).to_string(),
            });
        }
        Ok(p.append(q.arrows(), q.tgt()))
    }

    /// The right action of a path on a term: `x|p` acted on by `q` is
    /// `x|(p.q)`.
    pub fn act(&self, t: &Term, q: &Path) -> Result<Term, PresentationError> {
        let path = self.compose_path(&t.path, q)?;
        Ok(Term::pieces(t.element, path))
    }

    /// The generator action `x . a`.
    pub fn apply_generator_action(&self, x: ElemId, a: ArrId) -> Result<ElemId, PresentationError> {
        self.x_arr[a.0 as usize].get(&x).copied().ok_or_else(|| {
            PresentationError::ElementNotInDomain {
                element: self.element_name(x).to_string(),
                arrow: self.gamma.arrow_name(a).to_string(),
            }
        })
    }

    pub fn display_path<'a>(&'a self, path: &'a Path) -> PathDisplay<'a> {
        PathDisplay { path, pres: self }
    }

    pub fn display_term<'a>(&'a self, term: &'a Term) -> TermDisplay<'a> {
        TermDisplay { term, pres: self }
    }
}

/// Prints a path as `b1.b2` or `id_B` for identities.
pub struct PathDisplay<'a> {
    path: &'a Path,
    pres: &'a KanPresentation,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_identity() {
            return write!(
                f,
                "id_{}",
                self.pres.delta().object_name(self.path.src())
            );
        }
        for (i, &a) in self.path.arrows().iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", self.pres.delta().arrow_name(a))?;
        }
        Ok(())
    }
}

/// Prints a term as `x|b1.b2` or `x|id_B`.
pub struct TermDisplay<'a> {
    term: &'a Term,
    pres: &'a KanPresentation,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{}",
            self.pres.element_name(self.term.element()),
            self.pres.display_path(self.term.path())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_presentation;

    fn example4() -> KanPresentation {
        parse_presentation(include_str!("../tests/data/example4.kan")).unwrap()
    }

    #[test]
    fn parses_worked_example() {
        let p = example4();
        assert_eq!(p.gamma().object_count(), 2);
        assert_eq!(p.gamma().arrow_count(), 2);
        assert_eq!(p.delta().object_count(), 3);
        assert_eq!(p.delta().arrow_count(), 5);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.element_count(), 5);
    }

    #[test]
    fn parses_empty_presentation() {
        let p = parse_presentation(include_str!("../tests/data/empty.kan")).unwrap();
        assert_eq!(p.gamma().object_count(), 0);
        assert_eq!(p.delta().object_count(), 0);
        assert_eq!(p.element_count(), 0);
    }

    #[test]
    fn rejects_non_composable_relation() {
        let doc = r#"{
            "ObA": [], "ArrA": [],
            "ObB": ["1", "2", "3"],
            "ArrB": [["b1", "1", "2"], ["b2", "2", "3"]],
            "RelB": [[["b2", "b1"], ["b2"]]],
            "FObA": {}, "FArrA": {}, "XObA": {}, "XArrA": {}
        }"#;
        let err = parse_presentation(doc).unwrap_err();
        assert!(
            matches!(err, PresentationError::NonComposablePath { ref arrow, .. } if arrow == "b1"),
            "unexpected error: {err}"
        );
    }

    #[test]
    fn compose_identity_laws() {
        let p = example4();
        let b1 = p.delta().arrow_id("b1").unwrap();
        let lhs = Path::identity(p.delta().object_id("B1").unwrap());
        let b1_path = Path::from_arrows(p.delta(), &[b1]).unwrap();
        assert_eq!(p.compose_path(&lhs, &b1_path).unwrap(), b1_path);
        let rhs = Path::identity(p.delta().object_id("B2").unwrap());
        assert_eq!(p.compose_path(&b1_path, &rhs).unwrap(), b1_path);
    }

    #[test]
    fn compose_builds_relation_path() {
        let p = example4();
        let d = p.delta();
        let b1 = Path::from_arrows(d, &[d.arrow_id("b1").unwrap()]).unwrap();
        let b2b3 = Path::from_arrows(d, &[d.arrow_id("b2").unwrap(), d.arrow_id("b3").unwrap()])
            .unwrap();
        let whole = p.compose_path(&b1, &b2b3).unwrap();
        assert_eq!(whole.len(), 3);
        assert_eq!(whole.src(), d.object_id("B1").unwrap());
        assert_eq!(whole.tgt(), d.object_id("B1").unwrap());
    }

    #[test]
    fn compose_rejects_endpoint_mismatch() {
        let p = example4();
        let d = p.delta();
        let b1 = Path::from_arrows(d, &[d.arrow_id("b1").unwrap()]).unwrap();
        assert!(p.compose_path(&b1, &b1).is_err());
    }

    #[test]
    fn act_appends_and_retargets() {
        let p = example4();
        let d = p.delta();
        let ids: Vec<_> = ["b5", "b3", "b4", "b4", "b5"]
            .iter()
            .map(|n| d.arrow_id(n).unwrap())
            .collect();
        let t = p
            .term(
                p.element_id("x1").unwrap(),
                Path::from_arrows(d, &ids).unwrap(),
            )
            .unwrap();
        let b3 = Path::from_arrows(d, &[d.arrow_id("b3").unwrap()]).unwrap();
        let u = p.act(&t, &b3).unwrap();
        assert_eq!(u.path().len(), 6);
        assert_eq!(u.target(), d.object_id("B1").unwrap());
        assert_eq!(p.display_term(&u).to_string(), "x1|b5.b3.b4.b4.b5.b3");
    }

    #[test]
    fn act_identity_is_noop() {
        let p = example4();
        let b1_obj = p.delta().object_id("B1").unwrap();
        let t = p
            .term(p.element_id("x1").unwrap(), Path::identity(b1_obj))
            .unwrap();
        let u = p.act(&t, &Path::identity(b1_obj)).unwrap();
        assert_eq!(t, u);
    }

    #[test]
    fn act_rejects_endpoint_mismatch() {
        let p = example4();
        let d = p.delta();
        let t = p
            .term(
                p.element_id("y1").unwrap(),
                Path::identity(d.object_id("B2").unwrap()),
            )
            .unwrap();
        let b1 = Path::from_arrows(d, &[d.arrow_id("b1").unwrap()]).unwrap();
        assert!(p.act(&t, &b1).is_err());
    }

    #[test]
    fn generator_action_examples() {
        let p = example4();
        let a1 = p.gamma().arrow_id("a1").unwrap();
        let a2 = p.gamma().arrow_id("a2").unwrap();
        let x3 = p.element_id("x3").unwrap();
        let y1 = p.element_id("y1").unwrap();
        let y2 = p.element_id("y2").unwrap();
        assert_eq!(p.apply_generator_action(x3, a1).unwrap(), y1);
        assert_eq!(
            p.apply_generator_action(y2, a2).unwrap(),
            p.element_id("x2").unwrap()
        );
        assert!(p.apply_generator_action(y1, a1).is_err());
    }

    #[test]
    fn rejects_duplicate_element_across_sets() {
        let doc = r#"{
            "ObA": ["A1", "A2"], "ArrA": [],
            "ObB": ["B"], "ArrB": [],
            "RelB": [],
            "FObA": {"A1": "B", "A2": "B"}, "FArrA": {},
            "XObA": {"A1": ["x"], "A2": ["x"]}, "XArrA": {}
        }"#;
        let err = parse_presentation(doc).unwrap_err();
        assert!(matches!(err, PresentationError::DuplicateElement(ref n) if n == "x"));
    }

    #[test]
    fn rejects_partial_generator_action() {
        let doc = r#"{
            "ObA": ["A1", "A2"], "ArrA": [["a", "A1", "A2"]],
            "ObB": ["B"], "ArrB": [],
            "RelB": [],
            "FObA": {"A1": "B", "A2": "B"}, "FArrA": {"a": "id_B"},
            "XObA": {"A1": ["x1", "x2"], "A2": ["y"]},
            "XArrA": {"a": {"x1": "y"}}
        }"#;
        let err = parse_presentation(doc).unwrap_err();
        assert!(matches!(err, PresentationError::MissingImage { ref element, .. } if element == "x2"));
    }

    #[test]
    fn empty_element_set_is_allowed() {
        let doc = r#"{
            "ObA": ["A"], "ArrA": [],
            "ObB": ["B"], "ArrB": [],
            "RelB": [],
            "FObA": {"A": "B"}, "FArrA": {},
            "XObA": {"A": []}, "XArrA": {}
        }"#;
        let p = parse_presentation(doc).unwrap();
        assert_eq!(p.element_count(), 0);
    }
}
