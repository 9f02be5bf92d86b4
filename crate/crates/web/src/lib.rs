//! WebAssembly bindings for the browser demo. Every entry point returns a
//! JSON string; errors come back as `{"error": "..."}`.

use num_complex::Complex64;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hardy_prony::bernoulli::{gb_recover_iterative, GbConfig};
use hardy_prony::experiments::condnum::{allpass_poles, clustered_poles, condnum_demo};
use hardy_prony::experiments::delay::{delay_demo, DelayConfig, DelayMethod, DelaySystemSpec};
use hardy_prony::hardy::{disk_points, GeneratingSequence, RationalAtomSet};
use hardy_prony::io::{complex_list_json, condition_json, parse_complex_list, recovery_result_json};
use hardy_prony::prony::{grop_recover, max_match_error, GropConfig};

fn respond(r: hardy_prony::Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn parse(text: &str) -> hardy_prony::Result<Vec<Complex64>> {
    parse_complex_list(&serde_json::from_str(text)?)
}

/// Condition numbers of the Vandermonde and TM triangular systems for a
/// generated pole set. `generator` is `"allpass"` or `"clustered"`.
#[wasm_bindgen]
pub fn condnum_compare(m: usize, seed: u64, generator: &str) -> String {
    respond((|| {
        let poles = match generator {
            "clustered" => clustered_poles(m, seed)?,
            _ => allpass_poles(m, seed)?,
        };
        let rep = condnum_demo(&poles, None)?;
        let values: Vec<Complex64> = poles.iter().map(|p| p.value()).collect();
        Ok(json!({
            "size": rep.size,
            "vandermonde_condition": condition_json(rep.vandermonde),
            "tm_condition": condition_json(rep.tm_triangular),
            "ratio": condition_json(rep.ratio()),
            "min_boundary_distance": rep.min_boundary_distance,
            "poles": complex_list_json(&values),
        }))
    })())
}

/// Sample `Σ c_k / (1 - conj(λ_k) z)` on `n_grid` points and recover the
/// poles with `method` (`"grop"` or `"gb"`). Poles and coefficients are JSON
/// lists of `{"re", "im"}`.
#[wasm_bindgen]
pub fn recover_poles(poles_json: &str, coeffs_json: &str, method: &str, n_grid: usize) -> String {
    respond((|| {
        let truth = parse(poles_json)?;
        let coeffs = parse(coeffs_json)?;
        let set = RationalAtomSet::new(disk_points(&truth)?, coeffs)?;
        let h = set.sampling(n_grid)?;
        let result = match method {
            "gb" => gb_recover_iterative(&h, &GeneratingSequence::zero(), truth.len(), &GbConfig::default())?.into_result(),
            _ => grop_recover(&h, &GropConfig::new(truth.len()))?,
        };
        let mut v = recovery_result_json(&result);
        v["truth"] = complex_list_json(&truth);
        v["max_pole_error"] = if result.poles.len() == truth.len() {
            json!(max_match_error(&result.poles, &truth))
        } else {
            Value::Null
        };
        Ok(v)
    })())
}

/// Delayed LTI demo on the reference system. `method` is `"grop"`, `"gb"` or
/// `"classical"`.
#[wasm_bindgen]
pub fn delay_identify(method: &str) -> String {
    respond((|| {
        let m = match method {
            "gb" => DelayMethod::Gb,
            "classical" => DelayMethod::Classical,
            _ => DelayMethod::Grop,
        };
        let spec = DelaySystemSpec::reference();
        let r = delay_demo(&spec, m, &DelayConfig::default())?;
        Ok(json!({
            "method": m.tag(),
            "m0": r.m0,
            "truth": complex_list_json(&spec.poles),
            "poles": complex_list_json(&r.poles),
            "errors": r.errors,
            "warnings": r.result.diagnostics.warnings,
        }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn condnum_shows_gap() {
        let v = value(condnum_compare(60, 1, "allpass"));
        assert!(v["tm_condition"].as_f64().unwrap() < 1e3);
        assert_eq!(v["poles"].as_array().unwrap().len(), 60);
    }

    #[test]
    fn recover_round_trip() {
        let poles = r#"[{"re":0.5,"im":0.1},{"re":-0.2,"im":0.6}]"#;
        let coeffs = r#"[{"re":1,"im":0},{"re":0.7,"im":-0.3}]"#;
        for method in ["grop", "gb"] {
            let v = value(recover_poles(poles, coeffs, method, 2048));
            assert!(v["max_pole_error"].as_f64().unwrap() < 1e-6, "{method}: {v}");
        }
    }

    #[test]
    fn errors_are_reported_as_json() {
        let v = value(recover_poles(r#"[{"re":1.5,"im":0}]"#, r#"[{"re":1,"im":0}]"#, "grop", 256));
        assert!(v["error"].as_str().is_some());
        let v = value(recover_poles("not json", "[]", "grop", 256));
        assert!(v["error"].as_str().is_some());
    }

    #[test]
    fn delay_all_methods() {
        for m in ["grop", "gb", "classical"] {
            let v = value(delay_identify(m));
            let worst = v["errors"].as_array().unwrap().iter().map(|e| e.as_f64().unwrap()).fold(0.0, f64::max);
            assert!(worst < 1e-3, "{m}");
        }
    }
}
