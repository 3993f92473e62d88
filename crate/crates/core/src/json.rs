//! JSON encodings of the library's values. Matrices are row-major arrays of
//! rows whose entries are `[re, im]` pairs; a bare number is read as a real entry.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graded::{GradedDim, GradedOperator, GradedSpace, Grading, OmegaUnitary};
use crate::group::CyclicGroupElement;
use crate::norms::LinearMapSpec;
use crate::report::{PropertyCheck, Report};
use crate::scalar::{CMat, Cx};
use crate::tensor::{NormBracket, TensorElement, Term, UpperWitness};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| parse_err(format!("\"{what}\" must be a nonnegative integer")))
}

fn opt_usize(v: &Value, key: &str, default: usize) -> Result<usize> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(default),
        Some(x) => as_usize(x, key),
    }
}

fn f64_json(x: f64) -> Value {
    // Non-finite values have no JSON number form.
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

pub fn complex_from_json(v: &Value) -> Result<Cx<f64>> {
    let z = match v {
        Value::Number(n) => Cx::new(n.as_f64().unwrap_or(f64::NAN), 0.0),
        Value::Array(p) if p.len() == 2 => {
            let re = p[0].as_f64().ok_or_else(|| parse_err("entry parts must be numbers"))?;
            let im = p[1].as_f64().ok_or_else(|| parse_err("entry parts must be numbers"))?;
            Cx::new(re, im)
        }
        _ => return Err(parse_err("entry must be [re, im] or a number")),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(z)
}

pub fn complex_to_json(z: Cx<f64>) -> Value {
    Value::Array(vec![f64_json(z.re), f64_json(z.im)])
}

pub fn matrix_from_json(v: &Value) -> Result<CMat<f64>> {
    let rows = v.as_array().ok_or_else(|| parse_err("matrix must be an array of rows"))?;
    if rows.is_empty() {
        return Err(Error::EmptyDim);
    }
    let cols = rows[0].as_array().map(|r| r.len()).unwrap_or(0);
    if cols == 0 {
        return Err(parse_err("matrix rows must be nonempty arrays"));
    }
    let mut m = CMat::zeros(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| parse_err("matrix row must be an array"))?;
        if row.len() != cols {
            return Err(parse_err(format!("row {i} has {} entries, expected {cols}", row.len())));
        }
        for (j, e) in row.iter().enumerate() {
            m[(i, j)] = complex_from_json(e)?;
        }
    }
    Ok(m)
}

pub fn matrix_to_json(m: &CMat<f64>) -> Value {
    Value::Array(
        (0..m.nrows()).map(|i| Value::Array((0..m.ncols()).map(|j| complex_to_json(m[(i, j)])).collect())).collect(),
    )
}

/// `{"p", "q", "grading"}` with an optional `"level"`.
pub fn space_from_json(v: &Value) -> Result<GradedSpace> {
    let p = as_usize(field(v, "p")?, "p")?;
    let q = as_usize(field(v, "q")?, "q")?;
    let grading = match v.get("grading") {
        None | Some(Value::Null) => Grading::Diagonal,
        Some(g) => Grading::parse(g.as_str().ok_or_else(|| parse_err("\"grading\" must be a string"))?)?,
    };
    GradedSpace::new(GradedDim::new(p, q)?, grading, opt_usize(v, "level", 1)?)
}

pub fn space_to_json(s: &GradedSpace) -> Value {
    let mut m = Map::new();
    m.insert("p".into(), json!(s.dim.p));
    m.insert("q".into(), json!(s.dim.q));
    m.insert("grading".into(), json!(s.grading.name()));
    if s.level != 1 {
        m.insert("level".into(), json!(s.level));
    }
    Value::Object(m)
}

pub fn operator_from_json(v: &Value) -> Result<GradedOperator<f64>> {
    GradedOperator::new(space_from_json(v)?, matrix_from_json(field(v, "data")?)?)
}

pub fn operator_to_json(x: &GradedOperator<f64>) -> Value {
    let mut v = space_to_json(&x.space());
    v["data"] = matrix_to_json(x.data());
    v
}

/// The optional `"omega": [ω₀, ω₁]` field of an operator document.
pub fn omega_from_json(v: &Value, space: GradedSpace) -> Result<Option<OmegaUnitary<f64>>> {
    match v.get("omega") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Array(w)) if w.len() == 2 => {
            Ok(Some(OmegaUnitary::new(space, complex_from_json(&w[0])?, complex_from_json(&w[1])?)?))
        }
        Some(_) => Err(parse_err("\"omega\" must be a pair of entries")),
    }
}

pub fn map_from_json(v: &Value) -> Result<LinearMapSpec<f64>> {
    let list = |key: &str| -> Result<Vec<CMat<f64>>> {
        field(v, key)?
            .as_array()
            .ok_or_else(|| parse_err(format!("\"{key}\" must be an array of matrices")))?
            .iter()
            .map(matrix_from_json)
            .collect()
    };
    LinearMapSpec::new(
        list("domain_basis")?,
        list("images")?,
        space_from_json(field(v, "domain_dims")?)?,
        space_from_json(field(v, "codomain_dims")?)?,
    )
}

pub fn map_to_json(m: &LinearMapSpec<f64>) -> Value {
    json!({
        "domain_basis": m.domain_basis().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "images": m.images().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "domain_dims": space_to_json(&m.domain()),
        "codomain_dims": space_to_json(&m.codomain()),
    })
}

fn opt_space(v: &Value, key: &str) -> Result<Option<GradedSpace>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(s) => space_from_json(s).map(Some),
    }
}

pub fn tensor_from_json(v: &Value) -> Result<TensorElement<f64>> {
    let a_dim = as_usize(field(v, "a_dim")?, "a_dim")?;
    let b_dim = as_usize(field(v, "b_dim")?, "b_dim")?;
    let level = opt_usize(v, "level", 1)?;
    let factors = field(v, "factors")?.as_array().ok_or_else(|| parse_err("\"factors\" must be an array"))?;
    let terms = factors
        .iter()
        .map(|f| {
            Ok(Term {
                a: matrix_from_json(field(f, "a")?)?,
                b: matrix_from_json(field(f, "b")?)?,
                row: opt_usize(f, "row", 0)?,
                col: opt_usize(f, "col", 0)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TensorElement::with_terms(a_dim, b_dim, level, terms)?.with_gradings(opt_space(v, "a_grading")?, opt_space(v, "b_grading")?)
}

pub fn tensor_to_json(t: &TensorElement<f64>) -> Value {
    let grading = |g: Option<GradedSpace>| g.map(|s| space_to_json(&s)).unwrap_or(Value::Null);
    let factors: Vec<Value> = t
        .terms()
        .iter()
        .map(|term| {
            let mut f = json!({"a": matrix_to_json(&term.a), "b": matrix_to_json(&term.b)});
            if t.level() != 1 {
                f["row"] = json!(term.row);
                f["col"] = json!(term.col);
            }
            f
        })
        .collect();
    let mut v = json!({
        "a_dim": t.a_dim(),
        "b_dim": t.b_dim(),
        "a_grading": grading(t.a_grading()),
        "b_grading": grading(t.b_grading()),
        "factors": factors,
    });
    if t.level() != 1 {
        v["level"] = json!(t.level());
    }
    v
}

pub fn group_from_json(v: &Value) -> Result<CyclicGroupElement<f64>> {
    let n = as_usize(field(v, "n")?, "n")?;
    let coeffs = field(v, "coeffs")?
        .as_array()
        .ok_or_else(|| parse_err("\"coeffs\" must be an array"))?
        .iter()
        .map(complex_from_json)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != n {
        return Err(Error::DimMismatch(format!("n = {n} but {} coefficients", coeffs.len())));
    }
    CyclicGroupElement::new(coeffs)
}

pub fn group_to_json(c: &CyclicGroupElement<f64>) -> Value {
    json!({"n": c.order(), "coeffs": c.coeffs().iter().map(|z| complex_to_json(*z)).collect::<Vec<_>>()})
}

pub fn witness_to_json(w: &UpperWitness<f64>) -> Value {
    let mut v = json!({"kind": w.kind(), "value": f64_json(w.value())});
    match w {
        UpperWitness::Factorization { left, right } => {
            v["left"] = matrix_to_json(left);
            v["right"] = matrix_to_json(right);
        }
        UpperWitness::Terms(ts) => {
            v["terms"] = ts.iter().map(|(a, b)| json!({"a": matrix_to_json(a), "b": matrix_to_json(b)})).collect();
        }
        UpperWitness::Chain(ms) => v["factors"] = ms.iter().map(matrix_to_json).collect(),
        UpperWitness::WeightedSum(ws) => {
            v["terms"] = ws.iter().map(|(w, m)| json!({"weight": f64_json(*w), "m": matrix_to_json(m)})).collect();
        }
        UpperWitness::Zero => {}
    }
    v
}

pub fn bracket_to_json(b: &NormBracket<f64>) -> Value {
    json!({
        "lower": f64_json(b.lower),
        "upper": f64_json(b.upper),
        "gap": f64_json(b.gap()),
        "method": b.method.name(),
        "witness": witness_to_json(&b.upper_witness),
        "lower_witness": b.lower_witness,
    })
}

pub fn check_to_json(c: &PropertyCheck) -> Value {
    json!({
        "name": c.name,
        "passed": c.passed,
        "samples": c.samples,
        "worst_margin": f64_json(c.worst_margin),
        "witness": {"index": c.worst_index, "note": c.note},
    })
}

pub fn report_to_json(r: &Report) -> Value {
    let worst = r.checks.iter().map(|c| c.worst_margin).fold(f64::INFINITY, f64::min);
    let witness = r
        .checks
        .iter()
        .filter(|c| c.worst_margin == worst)
        .map(|c| json!({"check": c.name, "index": c.worst_index}))
        .next()
        .unwrap_or(Value::Null);
    json!({
        "passed": r.passed(),
        "worst_margin": f64_json(worst),
        "witness": witness,
        "checks": r.checks.iter().map(check_to_json).collect::<Vec<_>>(),
    })
}

/// Descriptions of every document format read or written.
pub fn schemas() -> Value {
    let matrix = json!({"type": "array", "items": {"type": "array", "items": {"description": "[re, im] or a real number"}}});
    let space = json!({
        "type": "object",
        "required": ["p", "q"],
        "properties": {
            "p": {"type": "integer", "minimum": 0},
            "q": {"type": "integer", "minimum": 0},
            "grading": {"enum": ["diag", "swap"], "default": "diag"},
            "level": {"type": "integer", "minimum": 1, "default": 1},
        }
    });
    json!({
        "matrix": matrix,
        "graded_space": space,
        "graded_operator": {
            "type": "object",
            "required": ["p", "q", "data"],
            "properties": {
                "p": {"type": "integer"}, "q": {"type": "integer"},
                "grading": {"enum": ["diag", "swap"]},
                "level": {"type": "integer", "minimum": 1, "default": 1},
                "data": matrix,
                "omega": {"description": "[omega0, omega1], unimodular; used by check omega-hermitian"},
            }
        },
        "linear_map": {
            "type": "object",
            "required": ["domain_basis", "images", "domain_dims", "codomain_dims"],
            "properties": {
                "domain_basis": {"type": "array", "items": matrix},
                "images": {"type": "array", "items": matrix},
                "domain_dims": space, "codomain_dims": space,
            }
        },
        "tensor_element": {
            "type": "object",
            "required": ["a_dim", "b_dim", "factors"],
            "properties": {
                "a_dim": {"type": "integer"}, "b_dim": {"type": "integer"},
                "a_grading": {"description": "graded_space or null"},
                "b_grading": {"description": "graded_space or null"},
                "level": {"type": "integer", "minimum": 1, "default": 1},
                "factors": {"type": "array", "items": {
                    "type": "object", "required": ["a", "b"],
                    "properties": {"a": matrix, "b": matrix, "row": {"type": "integer"}, "col": {"type": "integer"}}
                }},
            }
        },
        "cyclic_group_element": {
            "type": "object",
            "required": ["n", "coeffs"],
            "properties": {"n": {"type": "integer", "minimum": 1}, "coeffs": {"type": "array"}}
        },
        "norm_bracket": {
            "type": "object",
            "properties": {
                "lower": {"type": "number"}, "upper": {"type": "number"}, "gap": {"type": "number"},
                "method": {"enum": ["spatial", "convex-factorization", "factorization-search", "heuristic-dual-lower", "chain-factorization"]},
                "witness": {"type": "object", "properties": {"kind": {"enum": ["factorization", "terms", "chain", "weighted_sum", "zero"]}, "value": {"type": "number"}}},
                "lower_witness": {"type": "string"},
            }
        },
        "report": {
            "type": "object",
            "properties": {
                "passed": {"type": "boolean"},
                "worst_margin": {"description": "number, or null when nothing was sampled"},
                "witness": {"type": "object"},
                "checks": {"type": "array"},
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_round_trip() {
        let text = r#"{"p":1,"q":1,"grading":"diag","data":[[[1,0],[1,0]],[[-1,0],[-1,0]]]}"#;
        let x = operator_from_json(&parse(text).unwrap()).unwrap();
        let back = operator_from_json(&operator_to_json(&x)).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn tensor_round_trip() {
        let text = r#"{"a_dim":2,"b_dim":1,"a_grading":{"p":1,"q":1},"b_grading":null,
            "factors":[{"a":[[1,0],[0,1]],"b":[[[0,2]]]}]}"#;
        let t = tensor_from_json(&parse(text).unwrap()).unwrap();
        assert_eq!(t.terms()[0].b[(0, 0)], Cx::new(0.0, 2.0));
        let back = tensor_from_json(&tensor_to_json(&t)).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn rejects_ragged_and_truncated() {
        assert!(matches!(parse("{\"p\": 1,"), Err(Error::Parse(_))));
        let ragged = parse(r#"{"p":1,"q":1,"data":[[1,0],[1]]}"#).unwrap();
        assert!(operator_from_json(&ragged).is_err());
    }
}
