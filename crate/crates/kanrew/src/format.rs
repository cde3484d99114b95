//! The interchange document format and command-line literal syntax.
//!
//! A presentation is one JSON object with exactly the nine fields `ObA`,
//! `ArrA`, `ObB`, `ArrB`, `RelB`, `FObA`, `FArrA`, `XObA`, `XArrA`. Paths
//! are written as arrays of arrow names, or as the string `id_<object>` for
//! identities. Rewrite systems round-trip through the same syntax with
//! terms and paths rendered as literals (`x|b1.b2`, `x|id_B`, `b1.b2.b3`).
//!
//! Identifiers are opaque, case-sensitive tokens; no structure is ever read
//! out of a name.

use serde_json::{json, Map, Value};

use crate::ordering::OrderConfig;
use crate::presentation::{Graph, KanPresentation, Path, PresentationError, Term};
use crate::rewrite::{PathRule, RewriteSystem, TermRule};

const FIELDS: [&str; 9] = [
    "ObA", "ArrA", "ObB", "ArrB", "RelB", "FObA", "FArrA", "XObA", "XArrA",
];

/// Parses and validates a presentation document.
pub fn parse_presentation(document: &str) -> Result<KanPresentation, PresentationError> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| PresentationError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    let root = as_object(&value, "document")?;
    for key in root.keys() {
        if !FIELDS.contains(&key.as_str()) {
            return Err(PresentationError::Document {
                field: key.clone(),
                message: "unknown field".into(),
            });
        }
    }

    let gamma = parse_graph(root, "ObA", "ArrA")?;
    let delta = parse_graph(root, "ObB", "ArrB")?;

    let relations = as_array(field(root, "RelB")?, "RelB")?
        .iter()
        .map(|pair| {
            let pair = as_array(pair, "RelB")?;
            if pair.len() != 2 {
                return Err(PresentationError::Document {
                    field: "RelB".into(),
                    message: "each relation is a pair of parallel paths".into(),
                });
            }
            Ok((
                parse_path_value(&delta, &pair[0], "RelB")?,
                parse_path_value(&delta, &pair[1], "RelB")?,
            ))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let f_ob_map = as_object(field(root, "FObA")?, "FObA")?;
    let mut f_ob = Vec::with_capacity(gamma.object_count());
    for ob in gamma.object_ids() {
        let name = gamma.object_name(ob);
        let image = f_ob_map.get(name).ok_or_else(|| PresentationError::Document {
            field: "FObA".into(),
            message: format!("missing image for object `{name}`"),
        })?;
        let image = as_str(image, "FObA")?;
        f_ob.push(
            delta
                .object_id(image)
                .ok_or_else(|| PresentationError::UnknownObject(image.to_string()))?,
        );
    }
    check_known_keys(f_ob_map, "FObA", |k| gamma.object_id(k).is_some())?;

    let f_arr_map = as_object(field(root, "FArrA")?, "FArrA")?;
    let mut f_arr = Vec::with_capacity(gamma.arrow_count());
    for a in gamma.arrow_ids() {
        let name = gamma.arrow_name(a);
        let image = f_arr_map.get(name).ok_or_else(|| PresentationError::Document {
            field: "FArrA".into(),
            message: format!("missing image for arrow `{name}`"),
        })?;
        f_arr.push(parse_path_value(&delta, image, "FArrA")?);
    }
    check_known_keys(f_arr_map, "FArrA", |k| gamma.arrow_id(k).is_some())?;

    let x_ob_map = as_object(field(root, "XObA")?, "XObA")?;
    let mut x_ob = Vec::with_capacity(gamma.object_count());
    for ob in gamma.object_ids() {
        let name = gamma.object_name(ob);
        let names = match x_ob_map.get(name) {
            Some(v) => as_array(v, "XObA")?
                .iter()
                .map(|e| Ok(as_str(e, "XObA")?.to_string()))
                .collect::<Result<Vec<_>, PresentationError>>()?,
            None => Vec::new(),
        };
        x_ob.push(names);
    }
    check_known_keys(x_ob_map, "XObA", |k| gamma.object_id(k).is_some())?;

    let x_arr_map = as_object(field(root, "XArrA")?, "XArrA")?;
    let mut x_arr = Vec::with_capacity(gamma.arrow_count());
    for a in gamma.arrow_ids() {
        let name = gamma.arrow_name(a);
        let pairs = match x_arr_map.get(name) {
            Some(v) => as_object(v, "XArrA")?
                .iter()
                .map(|(elem, image)| Ok((elem.clone(), as_str(image, "XArrA")?.to_string())))
                .collect::<Result<Vec<_>, PresentationError>>()?,
            None => Vec::new(),
        };
        x_arr.push(pairs);
    }
    check_known_keys(x_arr_map, "XArrA", |k| gamma.arrow_id(k).is_some())?;

    KanPresentation::new(gamma, delta, relations, f_ob, f_arr, x_ob, x_arr)
}

/// Serializes a presentation back into the interchange format.
pub fn serialize_presentation(pres: &KanPresentation) -> String {
    let gamma = pres.gamma();
    let delta = pres.delta();
    let mut root = Map::new();
    root.insert(
        "ObA".into(),
        Value::Array(
            gamma
                .object_ids()
                .map(|o| Value::String(gamma.object_name(o).into()))
                .collect(),
        ),
    );
    root.insert(
        "ArrA".into(),
        Value::Array(
            gamma
                .arrow_ids()
                .map(|a| {
                    json!([
                        gamma.arrow_name(a),
                        gamma.object_name(gamma.src(a)),
                        gamma.object_name(gamma.tgt(a))
                    ])
                })
                .collect(),
        ),
    );
    root.insert(
        "ObB".into(),
        Value::Array(
            delta
                .object_ids()
                .map(|o| Value::String(delta.object_name(o).into()))
                .collect(),
        ),
    );
    root.insert(
        "ArrB".into(),
        Value::Array(
            delta
                .arrow_ids()
                .map(|a| {
                    json!([
                        delta.arrow_name(a),
                        delta.object_name(delta.src(a)),
                        delta.object_name(delta.tgt(a))
                    ])
                })
                .collect(),
        ),
    );
    root.insert(
        "RelB".into(),
        Value::Array(
            pres.relations()
                .iter()
                .map(|(l, r)| Value::Array(vec![path_value(pres, l), path_value(pres, r)]))
                .collect(),
        ),
    );
    let mut f_ob = Map::new();
    for ob in gamma.object_ids() {
        f_ob.insert(
            gamma.object_name(ob).into(),
            Value::String(delta.object_name(pres.f_ob(ob)).into()),
        );
    }
    root.insert("FObA".into(), Value::Object(f_ob));
    let mut f_arr = Map::new();
    for a in gamma.arrow_ids() {
        f_arr.insert(gamma.arrow_name(a).into(), path_value(pres, pres.f_arr(a)));
    }
    root.insert("FArrA".into(), Value::Object(f_arr));
    let mut x_ob = Map::new();
    for ob in gamma.object_ids() {
        x_ob.insert(
            gamma.object_name(ob).into(),
            Value::Array(
                pres.x_ob(ob)
                    .iter()
                    .map(|&e| Value::String(pres.element_name(e).into()))
                    .collect(),
            ),
        );
    }
    root.insert("XObA".into(), Value::Object(x_ob));
    let mut x_arr = Map::new();
    for a in gamma.arrow_ids() {
        let mut map = Map::new();
        for &e in pres.x_ob(gamma.src(a)) {
            let image = pres
                .apply_generator_action(e, a)
                .expect("validated presentation has a total action");
            map.insert(
                pres.element_name(e).into(),
                Value::String(pres.element_name(image).into()),
            );
        }
        x_arr.insert(gamma.arrow_name(a).into(), Value::Object(map));
    }
    root.insert("XArrA".into(), Value::Object(x_arr));
    serde_json::to_string_pretty(&Value::Object(root)).expect("presentation serializes")
}

fn path_value(pres: &KanPresentation, path: &Path) -> Value {
    if path.is_identity() {
        Value::String(format!("id_{}", pres.delta().object_name(path.src())))
    } else {
        Value::Array(
            path.arrows()
                .iter()
                .map(|&a| Value::String(pres.delta().arrow_name(a).into()))
                .collect(),
        )
    }
}

fn parse_graph(root: &Map<String, Value>, ob: &str, arr: &str) -> Result<Graph, PresentationError> {
    let objects = as_array(field(root, ob)?, ob)?
        .iter()
        .map(|v| Ok(as_str(v, ob)?.to_string()))
        .collect::<Result<Vec<_>, PresentationError>>()?;
    let arrows = as_array(field(root, arr)?, arr)?
        .iter()
        .map(|v| {
            let triple = as_array(v, arr)?;
            if triple.len() != 3 {
                return Err(PresentationError::Document {
                    field: arr.into(),
                    message: "each arrow is a [name, src, tgt] triple".into(),
                });
            }
            Ok((
                as_str(&triple[0], arr)?.to_string(),
                as_str(&triple[1], arr)?.to_string(),
                as_str(&triple[2], arr)?.to_string(),
            ))
        })
        .collect::<Result<Vec<_>, PresentationError>>()?;
    Graph::new(objects, arrows)
}

/// A path in a document: an array of arrow names, or `id_<object>`.
fn parse_path_value(delta: &Graph, value: &Value, field: &str) -> Result<Path, PresentationError> {
    match value {
        Value::String(s) => parse_identity(delta, s).ok_or_else(|| PresentationError::Document {
            field: field.into(),
            message: format!("`{s}` is not an identity path; write `id_<object>` or an arrow array"),
        }),
        Value::Array(items) => {
            let arrows = items
                .iter()
                .map(|v| {
                    let name = as_str(v, field)?;
                    delta
                        .arrow_id(name)
                        .ok_or_else(|| PresentationError::UnknownArrow(name.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if arrows.is_empty() {
                return Err(PresentationError::EmptyPath);
            }
            Path::from_arrows(delta, &arrows)
        }
        _ => Err(PresentationError::Document {
            field: field.into(),
            message: "a path is an array of arrow names or `id_<object>`".into(),
        }),
    }
}

fn parse_identity(delta: &Graph, token: &str) -> Option<Path> {
    let name = token.strip_prefix("id_")?;
    delta.object_id(name).map(Path::identity)
}

/// Parses a path literal, `b1.b2` or `id_<object>`. A bare `id` resolves to
/// the identity at `base_hint` when one is supplied.
pub fn parse_path_literal(
    pres: &KanPresentation,
    literal: &str,
    base_hint: Option<crate::presentation::ObjId>,
) -> Result<Path, PresentationError> {
    let literal = literal.trim();
    if literal == "id" {
        return base_hint.map(Path::identity).ok_or(PresentationError::EmptyPath);
    }
    if let Some(path) = parse_identity(pres.delta(), literal) {
        return Ok(path);
    }
    let arrows = literal
        .split('.')
        .map(|part| {
            let part = part.trim();
            pres.delta()
                .arrow_id(part)
                .ok_or_else(|| PresentationError::UnknownArrow(part.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if arrows.is_empty() {
        return Err(PresentationError::EmptyPath);
    }
    Path::from_arrows(pres.delta(), &arrows)
}

/// Parses a term literal: `x|b1.b2`, `x|id`, or `x|id_<object>`.
pub fn parse_term_literal(
    pres: &KanPresentation,
    literal: &str,
) -> Result<Term, PresentationError> {
    let literal = literal.trim();
    let (elem, path) = literal.split_once('|').ok_or_else(|| {
        PresentationError::Document {
            field: "term".into(),
            message: format!("`{literal}` is not of the form `element|path`"),
        }
    })?;
    let elem = pres
        .element_id(elem.trim())
        .ok_or_else(|| PresentationError::UnknownElement(elem.trim().to_string()))?;
    let path = parse_path_literal(pres, path, Some(pres.element_base(elem)))?;
    pres.term(elem, path)
}

/// Renders a rewrite system as interchange JSON, with rules as pairs of
/// literals.
pub fn system_to_json(pres: &KanPresentation, system: &RewriteSystem) -> Value {
    let mut root = Map::new();
    root.insert(
        "termRules".into(),
        Value::Array(
            system
                .term_rules()
                .iter()
                .map(|r| {
                    json!([
                        pres.display_term(r.lhs()).to_string(),
                        pres.display_term(r.rhs()).to_string()
                    ])
                })
                .collect(),
        ),
    );
    root.insert(
        "pathRules".into(),
        Value::Array(
            system
                .path_rules()
                .iter()
                .map(|r| {
                    json!([
                        pres.display_path(r.lhs()).to_string(),
                        pres.display_path(r.rhs()).to_string()
                    ])
                })
                .collect(),
        ),
    );
    Value::Object(root)
}

/// Reads a rewrite system back from interchange JSON, revalidating each
/// rule against the active ordering. Unknown fields (such as a completion
/// status) are ignored.
pub fn system_from_json(
    pres: &KanPresentation,
    cfg: &OrderConfig,
    document: &str,
) -> Result<RewriteSystem, PresentationError> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| PresentationError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    let root = as_object(&value, "system")?;
    let mut term_rules = Vec::new();
    for pair in as_array(field(root, "termRules")?, "termRules")? {
        let pair = as_array(pair, "termRules")?;
        if pair.len() != 2 {
            return Err(PresentationError::Document {
                field: "termRules".into(),
                message: "each rule is a [lhs, rhs] pair".into(),
            });
        }
        let lhs = parse_term_literal(pres, as_str(&pair[0], "termRules")?)?;
        let rhs = parse_term_literal(pres, as_str(&pair[1], "termRules")?)?;
        let rule = TermRule::new(lhs, rhs, cfg).map_err(|e| PresentationError::Document {
            field: "termRules".into(),
            message: e.to_string(),
        })?;
        term_rules.push(rule);
    }
    let mut path_rules = Vec::new();
    for pair in as_array(field(root, "pathRules")?, "pathRules")? {
        let pair = as_array(pair, "pathRules")?;
        if pair.len() != 2 {
            return Err(PresentationError::Document {
                field: "pathRules".into(),
                message: "each rule is a [lhs, rhs] pair".into(),
            });
        }
        let lhs = parse_path_literal(pres, as_str(&pair[0], "pathRules")?, None)?;
        let rhs = parse_path_literal(pres, as_str(&pair[1], "pathRules")?, Some(lhs.tgt()))?;
        let rule = PathRule::new(lhs, rhs, cfg).map_err(|e| PresentationError::Document {
            field: "pathRules".into(),
            message: e.to_string(),
        })?;
        path_rules.push(rule);
    }
    Ok(RewriteSystem::new(term_rules, path_rules))
}

fn field<'a>(map: &'a Map<String, Value>, name: &str) -> Result<&'a Value, PresentationError> {
    map.get(name).ok_or_else(|| PresentationError::Document {
        field: name.into(),
        message: "missing field".into(),
    })
}

fn as_object<'a>(
    value: &'a Value,
    field: &str,
) -> Result<&'a Map<String, Value>, PresentationError> {
    value.as_object().ok_or_else(|| PresentationError::Document {
        field: field.into(),
        message: "expected an object".into(),
    })
}

fn as_array<'a>(value: &'a Value, field: &str) -> Result<&'a Vec<Value>, PresentationError> {
    value.as_array().ok_or_else(|| PresentationError::Document {
        field: field.into(),
        message: "expected an array".into(),
    })
}

fn as_str<'a>(value: &'a Value, field: &str) -> Result<&'a str, PresentationError> {
    value.as_str().ok_or_else(|| PresentationError::Document {
        field: field.into(),
        message: "expected a string".into(),
    })
}

fn check_known_keys(
    map: &Map<String, Value>,
    field: &str,
    known: impl Fn(&str) -> bool,
) -> Result<(), PresentationError> {
    for key in map.keys() {
        if !known(key) {
            return Err(PresentationError::Document {
                field: field.into(),
                message: format!("`{key}` is not declared"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example4() -> KanPresentation {
        parse_presentation(include_str!("../tests/data/example4.kan")).unwrap()
    }

    #[test]
    fn round_trips_fixtures() {
        for doc in [
            include_str!("../tests/data/example4.kan"),
            include_str!("../tests/data/swap.kan"),
            include_str!("../tests/data/comm_monoid.kan"),
            include_str!("../tests/data/cyclic3.kan"),
            include_str!("../tests/data/two_swap.kan"),
            include_str!("../tests/data/degenerate.kan"),
            include_str!("../tests/data/empty.kan"),
        ] {
            let p = parse_presentation(doc).unwrap();
            let again = parse_presentation(&serialize_presentation(&p)).unwrap();
            assert_eq!(p, again);
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_presentation("{ \"ObA\": [,] }").unwrap_err();
        match err {
            PresentationError::Syntax { line, column, .. } => {
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn term_literals_parse_and_print() {
        let p = example4();
        for lit in ["x1|id_B1", "y1|id_B2", "x1|b5.b3", "x3|b4"] {
            let t = parse_term_literal(&p, lit).unwrap();
            assert_eq!(p.display_term(&t).to_string(), lit);
        }
        let t = parse_term_literal(&p, "x1|id").unwrap();
        assert_eq!(p.display_term(&t).to_string(), "x1|id_B1");
        assert!(parse_term_literal(&p, "z|b1").is_err());
        assert!(parse_term_literal(&p, "x1|b2").is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let err = parse_presentation(r#"{"ObA": [], "Junk": 1}"#).unwrap_err();
        assert!(matches!(err, PresentationError::Document { ref field, .. } if field == "Junk"));
    }
}
