//! Browser bindings: each function takes a shape string and returns JSON.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use demazure::dualeq;
use demazure::enumerate::{self, Family};
use demazure::fillings;
use demazure::shapes::{Diagram, WeakComposition};

fn shape(s: &str) -> Result<WeakComposition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Members of a key family (`SSKT`, `SKT`, `SSKD`, `SKD`) with their statistics.
pub fn tabloids_json(a: &str, family: &str) -> Result<Value, String> {
    let a = shape(a)?;
    let fam: Family = family.parse().map_err(|e| format!("{e}"))?;
    let all = enumerate::enumerate(fam, &Diagram::key(&a)).map_err(|e| format!("{e}"))?;
    let rows: Vec<Value> = all
        .iter()
        .map(|t| {
            let des = fam.is_standard().then(|| fillings::weak_descent_composition(t).map(|d| d.to_string()).ok());
            json!({
                "rows": t.rows(),
                "text": t.to_string(),
                "maj": fillings::maj(t),
                "des": des.flatten(),
            })
        })
        .collect();
    Ok(json!({"family": fam.to_string(), "shape": a.parts(), "count": all.len(), "fillings": rows}))
}

/// `E_a(X;q,0)` in the key basis, as `[{label, coefficient}]`.
pub fn key_expansion_json(a: &str) -> Result<Value, String> {
    let e = dualeq::key_expansion(&shape(a)?).map_err(|e| format!("{e}"))?;
    let terms: Vec<Value> = e
        .iter()
        .map(|(l, c)| json!({"label": demazure::bases::label_string(l), "coefficient": c.to_string()}))
        .collect();
    Ok(json!({"shape": a, "terms": terms}))
}

/// Weak dual equivalence classes of `SKD(a)`.
pub fn classes_json(a: &str) -> Result<Value, String> {
    let cls = dualeq::classes(&shape(a)?).map_err(|e| format!("{e}"))?;
    let out: Vec<Value> = cls
        .iter()
        .map(|c| {
            json!({
                "maj": c.maj,
                "key_label": c.key_label.as_ref().map(ToString::to_string),
                "stable_label": c.stable_label.to_string(),
                "yamanouchi": c.yamanouchi,
                "members": c.members.iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({"shape": a, "classes": out}))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tabloids(a: &str, family: &str) -> Result<String, JsError> {
    to_js(tabloids_json(a, family))
}

#[wasm_bindgen]
pub fn key_expansion(a: &str) -> Result<String, JsError> {
    to_js(key_expansion_json(a))
}

#[wasm_bindgen]
pub fn classes(a: &str) -> Result<String, JsError> {
    to_js(classes_json(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let v = tabloids_json("(0,2,1,2)", "SKD").unwrap();
        assert_eq!(v["count"], 10);
        let v = key_expansion_json("(0,2,1,2)").unwrap();
        assert_eq!(v["terms"][1]["coefficient"], "q");
        let v = classes_json("(0,2,1,2)").unwrap();
        assert_eq!(v["classes"].as_array().unwrap().len(), 3);
        assert!(tabloids_json("(0,2", "SKD").is_err());
    }
}
