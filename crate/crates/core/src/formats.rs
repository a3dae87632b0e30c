//! JSON interchange formats.
//!
//! Scalars are written as JSON integers when integral and as `"p/q"`
//! strings otherwise; `−∞` is the string `"-inf"`. On input a scalar may
//! also be a JSON number, a decimal string such as `"0.25"`, or an integer
//! string. Element references inside matroid descriptors may be indices or
//! configuration labels.

use std::str::FromStr;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::euclidean::RationalConfiguration;
use crate::lp::{ColorfulLpInstance, Constraint, DualHornSystem, ThreeDmInstance, TropicalMatrix};
use crate::matroid::{GroundSet, Matroid, MatroidKind};
use crate::tropical::{SupportComplex, TropicalConfiguration, TropicalScalar};
use crate::Rational;

fn parse_error(message: impl Into<String>) -> Error {
    Error::Parse(message.into())
}

fn from_value<T: for<'de> Deserialize<'de>>(value: &Value, what: &str) -> Result<T> {
    T::deserialize(value).map_err(|e| parse_error(format!("{what}: {e}")))
}

/// Parses a JSON document.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_error(format!("malformed JSON: {e}")))
}

fn parse_rational_str(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || parse_error(format!("not a rational number: {text:?}"));
    if let Some((int_part, frac_part)) = text.split_once('.') {
        let negative = int_part.starts_with('-');
        let digits = int_part.trim_start_matches(['-', '+']);
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let joined = format!("{}{digits}{frac_part}", if negative { "-" } else { "" });
        let numer = Rational::from_str(&joined).map_err(|_| bad())?;
        let scale = Rational::from_str(&format!("1{}", "0".repeat(frac_part.len()))).map_err(|_| bad())?;
        return Ok(numer / scale);
    }
    let value = Rational::from_str(text).map_err(|_| bad())?;
    Ok(value)
}

/// Reads an exact rational from a JSON number or string.
pub fn parse_rational(value: &Value) -> Result<Rational> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                parse_rational_str(&n.to_string())
            }
        }
        Value::String(s) => parse_rational_str(s),
        other => Err(parse_error(format!("expected a rational, found {other}"))),
    }
}

/// Reads a tropical scalar: a rational or `"-inf"`.
pub fn parse_scalar(value: &Value) -> Result<TropicalScalar> {
    match value {
        Value::String(s) if matches!(s.trim(), "-inf" | "-Infinity" | "−∞") => Ok(TropicalScalar::NegInf),
        other => parse_rational(other).map(TropicalScalar::Finite),
    }
}

pub fn rational_to_json(q: &Rational) -> Value {
    if q.denom().is_one() {
        if let Some(i) = q.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(q.to_string())
}

pub fn scalar_to_json(x: &TropicalScalar) -> Value {
    match x {
        TropicalScalar::NegInf => Value::String("-inf".into()),
        TropicalScalar::Finite(q) => rational_to_json(q),
    }
}

pub fn scalars_to_json(xs: &[TropicalScalar]) -> Value {
    Value::Array(xs.iter().map(scalar_to_json).collect())
}

pub fn rationals_to_json(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational_to_json).collect())
}

/// A set as a sorted list of element labels (or indices when unlabeled).
pub fn set_to_json(set: ElementSet, ground: &GroundSet) -> Value {
    Value::Array(set.iter().map(|e| element_to_json(e, ground)).collect())
}

pub fn element_to_json(e: usize, ground: &GroundSet) -> Value {
    match ground.labels() {
        Some(_) => Value::String(ground.label(e)),
        None => Value::from(e),
    }
}

fn parse_vector<T>(value: &Value, parse: fn(&Value) -> Result<T>) -> Result<Vec<T>> {
    value
        .as_array()
        .ok_or_else(|| parse_error(format!("expected an array, found {value}")))?
        .iter()
        .map(parse)
        .collect()
}

/// Reads the `points` field: an object from labels to vectors, or an array
/// of vectors for unlabeled ground sets.
type LabeledPoints<T> = (Option<Vec<String>>, Vec<Vec<T>>);

fn parse_points<T>(value: &Value, parse: fn(&Value) -> Result<T>) -> Result<LabeledPoints<T>> {
    match value {
        Value::Object(map) => {
            let labels = map.keys().cloned().collect();
            let points = map.values().map(|v| parse_vector(v, parse)).collect::<Result<_>>()?;
            Ok((Some(labels), points))
        }
        Value::Array(items) => {
            let points = items.iter().map(|v| parse_vector(v, parse)).collect::<Result<_>>()?;
            Ok((None, points))
        }
        other => Err(parse_error(format!("points must be an object or array, found {other}"))),
    }
}

fn points_to_json(ground: &GroundSet, points: Vec<Value>) -> Value {
    match ground.labels() {
        Some(labels) => Value::Object(labels.iter().cloned().zip(points).collect::<Map<_, _>>()),
        None => Value::Array(points),
    }
}

fn dimension_field(object: &Value) -> Result<usize> {
    object
        .get("d")
        .and_then(Value::as_u64)
        .map(|d| d as usize)
        .ok_or_else(|| parse_error("missing integer field \"d\""))
}

fn field<'a>(object: &'a Value, name: &str) -> Result<&'a Value> {
    object.get(name).ok_or_else(|| parse_error(format!("missing field {name:?}")))
}

/// A tropical configuration with an optional target (`"target"`, default `0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalInput {
    pub configuration: TropicalConfiguration,
    pub target: Vec<TropicalScalar>,
}

impl TropicalInput {
    /// The configuration translated so that the target becomes the origin.
    pub fn centered(&self) -> Result<TropicalConfiguration> {
        self.configuration.translated(&self.target)
    }
}

pub fn parse_tropical_configuration(value: &Value) -> Result<TropicalInput> {
    let d = dimension_field(value)?;
    let (labels, points) = parse_points(field(value, "points")?, parse_scalar)?;
    let configuration = match labels {
        Some(labels) => TropicalConfiguration::labeled(d, labels, points)?,
        None => TropicalConfiguration::new(d, points)?,
    };
    let target = match value.get("target") {
        Some(t) => parse_vector(t, parse_scalar)?,
        None => vec![TropicalScalar::zero(); d],
    };
    if target.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: target.len() });
    }
    Ok(TropicalInput { configuration, target })
}

pub fn tropical_configuration_to_json(config: &TropicalConfiguration, target: Option<&[TropicalScalar]>) -> Value {
    let points = config.points().iter().map(|p| scalars_to_json(p)).collect();
    let mut out = json!({ "d": config.dimension(), "points": points_to_json(config.ground(), points) });
    if let Some(t) = target {
        out["target"] = scalars_to_json(t);
    }
    out
}

/// Reads `{"d", "points", "origin"?}` and translates by the origin.
pub fn parse_rational_configuration(value: &Value) -> Result<RationalConfiguration> {
    let d = dimension_field(value)?;
    let (labels, points) = parse_points(field(value, "points")?, parse_rational)?;
    let configuration = match labels {
        Some(labels) => RationalConfiguration::labeled(d, labels, points)?,
        None => RationalConfiguration::new(d, points)?,
    };
    match value.get("origin") {
        Some(origin) => configuration.translated(&parse_vector(origin, parse_rational)?),
        None => Ok(configuration),
    }
}

pub fn rational_configuration_to_json(config: &RationalConfiguration, origin: Option<&[Rational]>) -> Value {
    let points = config.points().iter().map(|p| rationals_to_json(p)).collect();
    let mut out = json!({ "d": config.dimension(), "points": points_to_json(config.ground(), points) });
    if let Some(o) = origin {
        out["origin"] = rationals_to_json(o);
    }
    out
}

/// An element given by index or by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

impl ElementRef {
    fn resolve(&self, ground: &GroundSet) -> Result<usize> {
        match self {
            Self::Index(i) => ground.check_element(*i).map(|()| *i),
            Self::Label(label) => ground.index_of(label),
        }
    }
}

/// A matroid descriptor, tagged by `"type"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidDescriptor {
    Partition {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        blocks: Vec<Vec<ElementRef>>,
    },
    Uniform {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        rank: usize,
    },
    Free {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    /// Element `i` is `edges[i]`.
    Graphic {
        edges: Vec<(usize, usize)>,
    },
    Explicit {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        bases: Vec<Vec<ElementRef>>,
    },
    Truncation {
        inner: Box<MatroidDescriptor>,
        k: usize,
    },
}

impl MatroidDescriptor {
    fn declared_size(&self) -> Option<usize> {
        match self {
            Self::Partition { n, .. } | Self::Uniform { n, .. } | Self::Free { n } | Self::Explicit { n, .. } => *n,
            Self::Graphic { edges } => Some(edges.len()),
            Self::Truncation { inner, .. } => inner.declared_size(),
        }
    }

    /// Builds the matroid on `ground` when given (resolving labels against
    /// it), otherwise on the declared size.
    pub fn build(&self, ground: Option<&GroundSet>) -> Result<Matroid> {
        let ground = match (ground, self.declared_size()) {
            (Some(g), Some(n)) if g.len() != n => return Err(Error::SizeMismatch { expected: g.len(), found: n }),
            (Some(g), _) => g.clone(),
            (None, Some(n)) => GroundSet::new(n)?,
            (None, None) => return Err(parse_error("matroid descriptor needs \"n\" without a configuration")),
        };
        let matroid = self.build_on(&ground)?;
        match ground.labels() {
            Some(labels) => matroid.with_labels(labels.to_vec()),
            None => Ok(matroid),
        }
    }

    fn build_on(&self, ground: &GroundSet) -> Result<Matroid> {
        let resolve = |sets: &[Vec<ElementRef>]| -> Result<Vec<Vec<usize>>> {
            sets.iter().map(|s| s.iter().map(|e| e.resolve(ground)).collect()).collect()
        };
        let n = ground.len();
        match self {
            Self::Partition { blocks, .. } => Matroid::partition(n, resolve(blocks)?),
            Self::Uniform { rank, .. } => Matroid::uniform(n, *rank),
            Self::Free { .. } => Matroid::free(n),
            Self::Graphic { edges } => Matroid::graphic(edges.clone()),
            Self::Explicit { bases, .. } => Matroid::explicit(n, resolve(bases)?),
            Self::Truncation { inner, k } => inner.build_on(ground)?.truncate(*k),
        }
    }

    /// The descriptor of an existing matroid, using element indices.
    pub fn of(matroid: &Matroid) -> Self {
        let n = Some(matroid.len());
        let refs = |sets: &[ElementSet]| sets.iter().map(|s| s.iter().map(ElementRef::Index).collect()).collect();
        match matroid.kind() {
            MatroidKind::Partition { blocks } => Self::Partition { n, blocks: refs(blocks) },
            MatroidKind::Uniform { rank } if *rank == matroid.len() => Self::Free { n },
            MatroidKind::Uniform { rank } => Self::Uniform { n, rank: *rank },
            MatroidKind::Graphic { edges } => Self::Graphic { edges: edges.clone() },
            MatroidKind::Explicit { bases } => Self::Explicit { n, bases: refs(bases) },
            MatroidKind::Truncation { inner, k } => Self::Truncation { inner: Box::new(Self::of(inner)), k: *k },
        }
    }
}

pub fn parse_matroid(value: &Value, ground: Option<&GroundSet>) -> Result<Matroid> {
    from_value::<MatroidDescriptor>(value, "matroid")?.build(ground)
}

pub fn matroid_to_json(matroid: &Matroid) -> Value {
    serde_json::to_value(MatroidDescriptor::of(matroid)).expect("descriptors serialize")
}

/// Reads `{"matroid", "configuration"}` with a tropical configuration.
pub fn parse_tropical_instance(value: &Value) -> Result<(Matroid, TropicalInput)> {
    let input = parse_tropical_configuration(field(value, "configuration")?)?;
    let matroid = parse_matroid(field(value, "matroid")?, Some(input.configuration.ground()))?;
    Ok((matroid, input))
}

/// Reads `{"matroid", "configuration"}` with a rational configuration.
pub fn parse_rational_instance(value: &Value) -> Result<(Matroid, RationalConfiguration)> {
    let configuration = parse_rational_configuration(field(value, "configuration")?)?;
    let matroid = parse_matroid(field(value, "matroid")?, Some(configuration.ground()))?;
    Ok((matroid, configuration))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

pub fn parse_complex(value: &Value) -> Result<SupportComplex> {
    let raw: ComplexJson = from_value(value, "complex")?;
    let ground = GroundSet::new(raw.n)?;
    let facets = raw
        .facets
        .iter()
        .map(|f| {
            f.iter().try_fold(ElementSet::empty(), |acc, &e| {
                ground.check_element(e)?;
                Ok(acc.with(e))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SupportComplex::new(raw.n, facets)
}

pub fn complex_to_json(complex: &SupportComplex) -> Value {
    let facets = complex.facets().iter().map(|f| f.to_vec()).collect();
    serde_json::to_value(ComplexJson { n: complex.ground_size(), facets }).expect("complexes serialize")
}

/// Reads `{"A", "classes", "n"?}`; `"n"` fixes the column count when `A`
/// has no rows. The instance is not validated.
pub fn parse_clp(value: &Value) -> Result<ColorfulLpInstance> {
    let rows = field(value, "A")?
        .as_array()
        .ok_or_else(|| parse_error("\"A\" must be an array of rows"))?
        .iter()
        .map(|row| parse_vector(row, parse_scalar))
        .collect::<Result<Vec<_>>>()?;
    let classes: Vec<Vec<usize>> = from_value(field(value, "classes")?, "classes")?;
    let cols = match value.get("n").and_then(Value::as_u64) {
        Some(n) => n as usize,
        None => rows.first().map_or_else(|| classes.iter().map(Vec::len).sum(), Vec::len),
    };
    Ok(ColorfulLpInstance { matrix: TropicalMatrix::new(cols, rows)?, classes })
}

pub fn clp_to_json(instance: &ColorfulLpInstance) -> Value {
    let rows: Vec<Value> = instance.matrix.entries().iter().map(|r| scalars_to_json(r)).collect();
    json!({ "n": instance.matrix.cols(), "A": rows, "classes": instance.classes })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ThreeDmJson {
    k: usize,
    edges: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parts: Option<[Vec<String>; 3]>,
}

pub fn parse_3dm(value: &Value) -> Result<ThreeDmInstance> {
    let raw: ThreeDmJson = from_value(value, "3-dimensional matching instance")?;
    ThreeDmInstance::from_labeled_edges(raw.k, &raw.edges, raw.parts)
}

pub fn three_dm_to_json(instance: &ThreeDmInstance) -> Value {
    let edges = (0..instance.edges().len()).map(|h| instance.edge_labels(h).map(str::to_owned)).collect();
    let raw = ThreeDmJson { k: instance.k(), edges, parts: Some(instance.parts().clone()) };
    serde_json::to_value(raw).expect("instances serialize")
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum ConstraintJson {
    Eq(Vec<usize>),
    Le { lhs: usize, rhs: Vec<usize> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HornJson {
    n: usize,
    constraints: Vec<ConstraintJson>,
}

pub fn parse_horn(value: &Value) -> Result<DualHornSystem> {
    let raw: HornJson = from_value(value, "dual-Horn system")?;
    let constraints = raw
        .constraints
        .into_iter()
        .map(|c| match c {
            ConstraintJson::Eq(terms) => Constraint::Equation(terms),
            ConstraintJson::Le { lhs, rhs } => Constraint::Inequality { lhs, rhs },
        })
        .collect();
    DualHornSystem::new(raw.n, constraints)
}

pub fn horn_to_json(system: &DualHornSystem) -> Value {
    let constraints = system
        .constraints()
        .iter()
        .map(|c| match c {
            Constraint::Equation(terms) => ConstraintJson::Eq(terms.clone()),
            Constraint::Inequality { lhs, rhs } => ConstraintJson::Le { lhs: *lhs, rhs: rhs.clone() },
        })
        .collect();
    serde_json::to_value(HornJson { n: system.variables(), constraints }).expect("systems serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    #[test]
    fn scalars_round_trip() {
        assert_eq!(parse_scalar(&json!("-inf")).unwrap(), TropicalScalar::NegInf);
        assert_eq!(parse_scalar(&json!(3)).unwrap(), TropicalScalar::int(3));
        assert_eq!(parse_rational(&json!("-3/6")).unwrap(), rational(-1, 2));
        assert_eq!(parse_rational(&json!("0.25")).unwrap(), rational(1, 4));
        assert_eq!(parse_rational(&json!("-1.5")).unwrap(), rational(-3, 2));
        assert_eq!(parse_rational(&json!(0.5)).unwrap(), rational(1, 2));
        assert!(parse_rational(&json!("abc")).is_err());
        assert!(parse_rational(&json!("1.")).is_err());
        assert!(parse_rational(&json!([1])).is_err());
        assert_eq!(rational_to_json(&rational(2, 1)), json!(2));
        assert_eq!(rational_to_json(&rational(1, 3)), json!("1/3"));
        assert_eq!(scalar_to_json(&TropicalScalar::NegInf), json!("-inf"));
    }

    #[test]
    fn tropical_configuration_keeps_label_order() {
        let value = json!({"d": 1, "points": {"z": [1], "a": ["-inf"]}, "target": [0]});
        let input = parse_tropical_configuration(&value).unwrap();
        assert_eq!(input.configuration.ground().labels().unwrap(), &["z".to_string(), "a".to_string()]);
        let back = tropical_configuration_to_json(&input.configuration, Some(&input.target));
        assert_eq!(back, value);
        assert!(parse_tropical_configuration(&json!({"d": 2, "points": [[1]]})).is_err());
    }

    #[test]
    fn matroid_descriptors_resolve_labels() {
        let value = json!({
            "matroid": {"type": "partition", "blocks": [["r", "s"], ["g"]]},
            "configuration": {"d": 1, "points": {"r": [1], "s": [2], "g": [-1]}}
        });
        let (matroid, _) = parse_tropical_instance(&value).unwrap();
        assert_eq!(matroid.full_rank(), 2);
        assert_eq!(matroid.ground().label(2), "g");
        let descriptor = json!({"type": "truncation", "inner": {"type": "free", "n": 3}, "k": 2});
        let truncated = parse_matroid(&descriptor, None).unwrap();
        assert_eq!(truncated.full_rank(), 2);
        assert_eq!(matroid_to_json(&truncated), descriptor);
        assert!(parse_matroid(&json!({"type": "uniform", "rank": 1}), None).is_err());
        assert!(parse_matroid(&json!({"type": "bogus", "n": 1}), None).is_err());
    }

    #[test]
    fn rational_configuration_translates_by_origin() {
        let value = json!({"d": 2, "points": [[0, 1]], "origin": [0, "1/2"]});
        let config = parse_rational_configuration(&value).unwrap();
        assert_eq!(config.point(0), &[rational(0, 1), rational(1, 2)]);
    }

    #[test]
    fn lp_formats_round_trip() {
        let clp = parse_clp(&json!({"A": [[0, "-inf"], ["-inf", 0]], "classes": [[0], [1]]})).unwrap();
        assert_eq!(parse_clp(&clp_to_json(&clp)).unwrap(), clp);

        let horn = json!({"n": 3, "constraints": [{"eq": [0, 1]}, {"le": {"lhs": 0, "rhs": [1, 2]}}]});
        let system = parse_horn(&horn).unwrap();
        assert_eq!(horn_to_json(&system), horn);

        let tdm = parse_3dm(&json!({"k": 1, "edges": [["a1", "b1", "c1"]]})).unwrap();
        assert_eq!(parse_3dm(&three_dm_to_json(&tdm)).unwrap(), tdm);

        let complex = parse_complex(&json!({"n": 3, "facets": [[0, 1], [2]]})).unwrap();
        assert_eq!(complex_to_json(&complex), json!({"n": 3, "facets": [[0, 1], [2]]}));
        assert!(parse_complex(&json!({"n": 2, "facets": [[5]]})).is_err());
    }
}
