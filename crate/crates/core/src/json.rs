//! JSON descriptors for laws, orders, actions, cocycles and witnesses.
//!
//! Output goes through [`to_canonical_string`]: object keys are sorted,
//! integral numbers print without a fractional part, and other numbers use
//! the shortest representation that round-trips.

use serde_json::{json, Map, Value};

use crate::action::ExpAction;
use crate::classify::{Classification, CoordinateMap, IsoWitness, MapStep};
use crate::cohomology::{
    extension_from_cocycle, g3_cocycle_on, heis_cocycle_on, zero_cocycle, Cochain, CocycleTag, GModule,
};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupLaw;
use crate::linalg::Matrix;
use crate::order::LexOrder;
use crate::scalar::Scalar;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Json(format!("missing field {key:?}")))
}

fn number<S: Scalar>(v: &Value, key: &str) -> Result<S> {
    field(v, key)?
        .as_f64()
        .map(S::lit)
        .ok_or_else(|| Error::Json(format!("field {key:?} must be a number")))
}

fn numbers<S: Scalar>(v: &Value) -> Result<Vec<S>> {
    v.as_array()
        .ok_or_else(|| Error::Json("expected an array of numbers".into()))?
        .iter()
        .map(|x| x.as_f64().map(S::lit).ok_or_else(|| Error::Json("expected a number".into())))
        .collect()
}

fn num<S: Scalar>(v: S) -> Value {
    json!(v.to_f64_lossy())
}

pub fn parse(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

/// Group-law descriptor `{"family", "params", "dim"}`; `dim` is optional on input.
pub fn law_from_json<S: Scalar>(v: &Value) -> Result<GroupLaw<S>> {
    let family = field(v, "family")?.as_str().ok_or_else(|| Error::Json("family must be a string".into()))?;
    let empty = Value::Object(Map::new());
    let p = v.get("params").unwrap_or(&empty);
    let law = match family {
        "additive" => {
            let n = field(p, "n")?.as_u64().ok_or_else(|| Error::Json("n must be a positive integer".into()))?;
            GroupLaw::additive(n as usize)?
        }
        "semidirect_rr" => GroupLaw::SemidirectRR(number(p, "c")?),
        "e_c" => GroupLaw::Ec(number(p, "c")?),
        "sut3" => GroupLaw::Sut3,
        "g_cd" => GroupLaw::GCd(number(p, "c")?, number(p, "d")?),
        "k_cd" => GroupLaw::KCd(number(p, "c")?, number(p, "d")?),
        "t_k" => GroupLaw::Tk(number(p, "k")?),
        "product" => GroupLaw::product(law_from_json(field(p, "left")?)?, law_from_json(field(p, "right")?)?)?,
        "from_cocycle" => extension_from_cocycle(&cochain_from_json(p)?)?,
        other => return Err(Error::Json(format!("unknown family {other:?}"))),
    };
    law.validate()?;
    if let Some(d) = v.get("dim") {
        let d = d.as_u64().ok_or_else(|| Error::Json("dim must be an integer".into()))? as usize;
        if d != law.dim() {
            return Err(Error::DimensionMismatch { expected: law.dim(), found: d });
        }
    }
    Ok(law)
}

pub fn law_to_json<S: Scalar>(law: &GroupLaw<S>) -> Result<Value> {
    let params = match law {
        GroupLaw::Additive(n) => json!({ "n": n }),
        GroupLaw::SemidirectRR(c) | GroupLaw::Ec(c) => json!({ "c": num(*c) }),
        GroupLaw::Sut3 => json!({}),
        GroupLaw::GCd(c, d) | GroupLaw::KCd(c, d) => json!({ "c": num(*c), "d": num(*d) }),
        GroupLaw::Tk(k) => json!({ "k": num(*k) }),
        GroupLaw::Product(a, b) => json!({ "left": law_to_json(a)?, "right": law_to_json(b)? }),
        GroupLaw::FromCocycle(ext) => {
            let tag = ext.tag().ok_or_else(|| Error::input("untagged cochain has no JSON form"))?;
            json!({ "module": module_to_json(ext.module())?, "cocycle": tag_to_json(tag) })
        }
    };
    Ok(json!({ "family": law.family(), "params": params, "dim": law.dim() }))
}

pub fn order_from_json(v: &Value) -> Result<LexOrder> {
    let sig = field(v, "significance")?
        .as_array()
        .ok_or_else(|| Error::Json("significance must be an array".into()))?
        .iter()
        .map(|x| x.as_u64().map(|i| i as usize).ok_or_else(|| Error::Json("significance entries must be indices".into())))
        .collect::<Result<Vec<_>>>()?;
    LexOrder::new(sig)
}

pub fn order_to_json(order: &LexOrder) -> Value {
    json!({ "significance": order.significance() })
}

/// Descriptor plus its optional `"order"` field.
pub fn spec_from_json<S: Scalar>(v: &Value) -> Result<(GroupLaw<S>, Option<LexOrder>)> {
    let law = law_from_json(v)?;
    let order = v.get("order").map(order_from_json).transpose()?;
    if let Some(o) = &order {
        if o.dim() != law.dim() {
            return Err(Error::DimensionMismatch { expected: law.dim(), found: o.dim() });
        }
    }
    Ok((law, order))
}

pub fn action_from_json<S: Scalar>(v: &Value) -> Result<ExpAction<S>> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| Error::Json("kind must be a string".into()))?;
    ExpAction::from_kind(kind, &numbers(field(v, "coeffs")?)?)
}

pub fn action_to_json<S: Scalar>(a: &ExpAction<S>) -> Value {
    json!({ "kind": a.kind(), "coeffs": a.coeffs().into_iter().map(num).collect::<Vec<_>>() })
}

pub fn module_from_json<S: Scalar>(v: &Value) -> Result<GModule<S>> {
    GModule::new(law_from_json(field(v, "acting")?)?, action_from_json(field(v, "action")?)?)
}

pub fn module_to_json<S: Scalar>(m: &GModule<S>) -> Result<Value> {
    Ok(json!({ "acting": law_to_json(m.acting())?, "action": action_to_json(m.action()) }))
}

fn tag_to_json<S: Scalar>(tag: &CocycleTag<S>) -> Value {
    match tag {
        CocycleTag::Heis { c } => json!({ "cocycle": "heis", "c": num(*c) }),
        CocycleTag::G3 { k } => json!({ "cocycle": "g3", "k": num(*k) }),
        CocycleTag::Zero => json!({ "cocycle": "zero" }),
    }
}

/// `{"module"?: .., "cocycle": {"cocycle": "heis"|"g3"|"zero", ..}}`. Without a
/// module, `heis` uses the trivial plane module and `g3` the affine line.
pub fn cochain_from_json<S: Scalar>(v: &Value) -> Result<Cochain<S>> {
    let spec = field(v, "cocycle")?;
    let name = field(spec, "cocycle")?.as_str().ok_or_else(|| Error::Json("cocycle name must be a string".into()))?;
    let module = v.get("module").map(module_from_json).transpose()?;
    match name {
        "heis" => heis_cocycle_on(module.unwrap_or_else(GModule::trivial_plane), number(spec, "c")?),
        "g3" => g3_cocycle_on(module.unwrap_or_else(GModule::affine_line), number(spec, "k")?),
        "zero" => Ok(zero_cocycle(module.ok_or_else(|| Error::Json("zero cocycle needs a module".into()))?)),
        other => Err(Error::Json(format!("unknown cocycle {other:?}"))),
    }
}

pub fn element_to_json<S: Scalar>(e: &Element<S>) -> Value {
    json!(e.to_f64_vec())
}

fn matrix_to_json<S: Scalar>(m: &Matrix<S>) -> Value {
    json!(m.to_f64_rows())
}

fn matrix_from_json<S: Scalar>(v: &Value) -> Result<Matrix<S>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Json("matrix must be an array of rows".into()))?
        .iter()
        .map(numbers)
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(&rows)
}

pub fn witness_to_json<S: Scalar>(w: &IsoWitness<S>) -> Result<Value> {
    let steps: Vec<Value> = w
        .map
        .steps()
        .iter()
        .map(|s| match s {
            MapStep::Linear { matrix, .. } => json!({ "kind": "linear", "matrix": matrix_to_json(matrix) }),
            other => json!({ "kind": other.name() }),
        })
        .collect();
    let mut out = json!({
        "source": law_to_json(&w.source)?,
        "target": law_to_json(&w.target)?,
        "matrix": matrix_to_json(&w.matrix()),
        "inverse_matrix": matrix_to_json(&w.map.inverse().linear_part()),
        "steps": steps,
        "flags": {
            "group_verified": w.flags.group_verified,
            "order_verified": w.flags.order_verified,
        },
    });
    if let Some((a, b)) = &w.flags.order_pair {
        out["flags"]["order_pair"] = json!([order_to_json(a), order_to_json(b)]);
    }
    Ok(out)
}

/// Reads a witness; `steps` wins over `matrix` when both are present.
pub fn witness_from_json<S: Scalar>(v: &Value) -> Result<IsoWitness<S>> {
    let source = law_from_json(field(v, "source")?)?;
    let target = law_from_json(field(v, "target")?)?;
    let dim = source.dim();
    let map = match v.get("steps") {
        Some(steps) => {
            let steps = steps.as_array().ok_or_else(|| Error::Json("steps must be an array".into()))?;
            let mut map = CoordinateMap::identity(dim);
            for s in steps {
                let kind = field(s, "kind")?.as_str().unwrap_or_default();
                let next = match kind {
                    "linear" => CoordinateMap::linear(matrix_from_json(field(s, "matrix")?)?)?,
                    "sut3_to_heis" => CoordinateMap::sut3_to_heis(),
                    "heis_to_sut3" => CoordinateMap::sut3_to_heis().inverse(),
                    other => return Err(Error::Json(format!("unknown map step {other:?}"))),
                };
                if next.dim() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: next.dim() });
                }
                map = map.then(&next);
            }
            map
        }
        None => CoordinateMap::linear(matrix_from_json(field(v, "matrix")?)?)?,
    };
    let pair = v
        .get("flags")
        .and_then(|f| f.get("order_pair"))
        .or_else(|| v.get("order_pair"))
        .map(|p| -> Result<(LexOrder, LexOrder)> {
            let arr = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Json("order_pair needs two orders".into()))?;
            Ok((order_from_json(&arr[0])?, order_from_json(&arr[1])?))
        })
        .transpose()?;
    IsoWitness::new(source, target, map, pair)
}

pub fn classification_to_json<S: Scalar>(c: &Classification<S>) -> Result<Value> {
    let label = c.class.label;
    let mut out = json!({
        "label": label.name(),
        "params": label.params(),
        "canonical": { "law": law_to_json(&c.class.law)?, "order": order_to_json(&c.class.order) },
        "witness": witness_to_json(&c.witness)?,
        "verification": serde_json::to_value(&c.report)?,
    });
    if let Some(alias) = label.alias() {
        out["alias"] = json!(alias);
    }
    Ok(out)
}

/// Replaces integral floats by integers so that `5.0` prints as `5`.
pub fn normalize_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(f) if n.is_f64() && f.fract() == 0.0 && f.abs() < 9.007_199_254_740_992e15 => {
                if f == 0.0 {
                    json!(0)
                } else {
                    json!(f as i64)
                }
            }
            _ => Value::Number(n),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(normalize_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, normalize_numbers(v))).collect()),
        other => other,
    }
}

pub fn to_canonical_string(v: &Value) -> String {
    normalize_numbers(v.clone()).to_string()
}

pub fn to_canonical_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(&normalize_numbers(v.clone())).unwrap_or_default()
}

/// Comma-separated decimals, as used for elements and orders on the command line.
pub fn parse_csv<S: Scalar>(text: &str) -> Result<Element<S>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map(S::lit)
                .map_err(|_| Error::input(format!("cannot parse {t:?} as a number")))
        })
        .collect::<Result<Vec<S>>>()
        .map(Element::new)
}

pub fn parse_order_csv(text: &str) -> Result<LexOrder> {
    let sig = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::input(format!("cannot parse {t:?} as an index"))))
        .collect::<Result<Vec<_>>>()?;
    LexOrder::new(sig)
}

#[cfg(test)]
mod tests;
