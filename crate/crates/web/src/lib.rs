//! WebAssembly bindings for the length-vector explorer in `www/index.html`.
//!
//! Every exported function returns a JSON string; failures become a thrown
//! JS string. The `*_json` functions hold the logic and run natively too.

use polyzcl::canonical::{betti, build_canonical_ring};
use polyzcl::classify::classify;
use polyzcl::genetics::{genetic_code, GeneticCode, LengthVector};
use polyzcl::rational::format_rational_short;
use polyzcl::tensor::bar;
use polyzcl::zcl::{search_zcl, zcl_bounds_in};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Products longer than this are not attempted in the browser.
const MAX_SEARCH_LEN: usize = 12;

#[derive(Serialize)]
struct Summary {
    code: String,
    n: u32,
    m: usize,
    s: usize,
    lengths: Vec<String>,
    betti: Option<Vec<usize>>,
    k0: u32,
    zcl_lower: Option<usize>,
    zcl_upper: Option<usize>,
    zcl_exact: Option<usize>,
    tc_lower: Option<usize>,
    tc_upper: usize,
    certificate: Option<String>,
    model_exact: bool,
    connected: bool,
}

#[derive(Serialize)]
struct Search {
    code: String,
    length: usize,
    witness: Vec<String>,
}

fn summarize(code: &GeneticCode, lengths: &LengthVector) -> Result<Summary, String> {
    let record = classify(code);
    let (betti_numbers, certificate) = if record.connected {
        let cr = build_canonical_ring(code).map_err(|e| e.to_string())?;
        let bounds = zcl_bounds_in(&cr, code).map_err(|e| e.to_string())?;
        (Some(betti(code)), bounds.certificate.map(|c| c.describe()))
    } else {
        (None, None)
    };
    Ok(Summary {
        code: code.to_string(),
        n: record.n,
        m: record.m,
        s: record.s,
        lengths: lengths
            .lengths()
            .iter()
            .map(format_rational_short)
            .collect(),
        betti: betti_numbers,
        k0: record.k0,
        zcl_lower: record.zcl_lower,
        zcl_upper: record.zcl_upper,
        zcl_exact: record.zcl_exact,
        tc_lower: record.tc_lower,
        tc_upper: record.tc_upper,
        certificate,
        model_exact: record.model_exact,
        connected: record.connected,
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn analyze_lengths_json(text: &str) -> Result<String, String> {
    let lengths = LengthVector::parse(text).map_err(|e| e.to_string())?;
    let code = genetic_code(&lengths).map_err(|e| e.to_string())?;
    to_json(&summarize(&code, &lengths)?)
}

/// Analyzes a genetic code, reporting a realizing length vector.
pub fn analyze_code_json(text: &str, n: u32) -> Result<String, String> {
    let code = GeneticCode::parse(text, n).map_err(|e| e.to_string())?;
    let lengths = code.realize().map_err(|e| e.to_string())?;
    to_json(&summarize(&code, &lengths)?)
}

/// Longest nonzero product of barred basis classes in the canonical ring.
pub fn search_json(text: &str, n: u32, budget: usize) -> Result<String, String> {
    let code = GeneticCode::parse(text, n).map_err(|e| e.to_string())?;
    let cr = build_canonical_ring(&code).map_err(|e| e.to_string())?;
    let ring = &cr.ring;
    let gens: Vec<usize> = (0..ring.len()).filter(|&u| ring.degree(u) > 0).collect();
    let bars: Vec<_> = gens.iter().map(|&u| bar(ring, u)).collect();
    let max_len = (2 * ring.top_degree()).min(MAX_SEARCH_LEN);
    let found = search_zcl(ring, &bars, max_len, budget).map_err(|e| e.to_string())?;
    to_json(&Search {
        code: code.to_string(),
        length: found.length,
        witness: found
            .witness
            .iter()
            .map(|&i| ring.label(gens[i]).to_string())
            .collect(),
    })
}

#[wasm_bindgen]
pub fn analyze_lengths(text: &str) -> Result<String, JsValue> {
    analyze_lengths_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze_code(text: &str, n: u32) -> Result<String, JsValue> {
    analyze_code_json(text, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn search(text: &str, n: u32, budget: usize) -> Result<String, JsValue> {
    search_json(text, n, budget).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn lengths_to_summary() {
        let v = parse(analyze_lengths_json("1,1,1,3,3,4").unwrap());
        assert_eq!(v["code"], "632");
        assert_eq!(v["betti"], serde_json::json!([1, 6, 6, 1]));
        assert_eq!(
            (v["zcl_lower"].clone(), v["zcl_upper"].clone()),
            (5.into(), 6.into())
        );
        assert_eq!(
            v["lengths"],
            serde_json::json!(["1", "1", "1", "3", "3", "4"])
        );
    }

    #[test]
    fn code_to_summary() {
        let v = parse(analyze_code_json("9421,95", 9).unwrap());
        assert_eq!(v["zcl_exact"], 6);
        assert_eq!(v["tc_lower"], 7);
        let lengths: Vec<&str> = v["lengths"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_str().unwrap())
            .collect();
        let back = parse(analyze_lengths_json(&lengths.join(",")).unwrap());
        assert_eq!(back["code"], "9421,95");
    }

    #[test]
    fn errors_are_messages() {
        assert!(analyze_lengths_json("1,1,5").unwrap_err().contains("empty"));
        assert!(analyze_lengths_json("0.5,1,1")
            .unwrap_err()
            .contains("fraction"));
        assert!(analyze_code_json("7531", 8)
            .unwrap_err()
            .contains("not realized"));
        assert!(search_json("632", 6, 3).unwrap_err().contains("budget"));
    }

    #[test]
    fn search_matches_bounds() {
        let v = parse(search_json("765", 7, 1_000_000).unwrap());
        assert_eq!(v["length"], 6);
        assert_eq!(v["witness"].as_array().unwrap().len(), 6);
    }
}
