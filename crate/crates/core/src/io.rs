//! File formats: CSV for samplings, point lists and moment sequences,
//! JSON for recovery results and lift metadata.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hardy::CircleSampling;
use crate::lifting::{InverseMap, LiftedProblem};
use crate::prony::{MomentSequence, MomentSource, RecoveryResult};

#[derive(Debug, Serialize, Deserialize)]
struct ReIm {
    re: f64,
    im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct MomentRow {
    m: usize,
    re: f64,
    im: f64,
}

/// Rows of a `re,im` CSV.
pub fn read_complex_csv<R: Read>(reader: R) -> Result<Vec<Complex64>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    check_headers(rdr.headers()?, &["re", "im"])?;
    rdr.deserialize::<ReIm>()
        .map(|r| r.map(|v| Complex64::new(v.re, v.im)).map_err(Error::from))
        .collect()
}

pub fn write_complex_csv<W: Write>(writer: W, values: &[Complex64]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for v in values {
        w.serialize(ReIm { re: v.re, im: v.im })?;
    }
    if values.is_empty() {
        w.write_record(["re", "im"])?;
    }
    w.flush()?;
    Ok(())
}

fn check_headers(headers: &csv::StringRecord, want: &[&str]) -> Result<()> {
    let got: Vec<&str> = headers.iter().collect();
    if got != want {
        return Err(Error::InvalidParameter(format!(
            "expected CSV header {}, found {}",
            want.join(","),
            got.join(",")
        )));
    }
    Ok(())
}

pub fn read_circle_sampling<R: Read>(reader: R) -> Result<CircleSampling> {
    CircleSampling::new(read_complex_csv(reader)?)
}

pub fn write_circle_sampling<W: Write>(writer: W, s: &CircleSampling) -> Result<()> {
    write_complex_csv(writer, s.values())
}

/// Reads an `m,re,im` CSV. Rows may come in any order but must cover `0..K` once each.
pub fn read_moments<R: Read>(reader: R) -> Result<MomentSequence> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    check_headers(rdr.headers()?, &["m", "re", "im"])?;
    let mut rows: Vec<MomentRow> = rdr.deserialize().collect::<std::result::Result<_, _>>()?;
    rows.sort_by_key(|r| r.m);
    for (i, r) in rows.iter().enumerate() {
        if r.m != i {
            return Err(Error::InvalidParameter(format!(
                "moment indices must be 0..{} without gaps; found {} at position {i}",
                rows.len(),
                r.m
            )));
        }
    }
    MomentSequence::new(
        rows.into_iter().map(|r| Complex64::new(r.re, r.im)).collect(),
        MomentSource::File,
    )
}

pub fn write_moments<W: Write>(writer: W, g: &[Complex64]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for (m, v) in g.iter().enumerate() {
        w.serialize(MomentRow { m, re: v.re, im: v.im })?;
    }
    w.flush()?;
    Ok(())
}

pub fn complex_json(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

pub fn complex_list_json(values: &[Complex64]) -> Value {
    Value::Array(values.iter().map(|&z| complex_json(z)).collect())
}

/// A condition number; a numerically singular matrix is written as `"inf"`.
pub fn condition_json(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!("inf")
    }
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

pub fn recovery_result_json(r: &RecoveryResult) -> Value {
    json!({
        "poles": complex_list_json(&r.poles),
        "coefficients": r.coefficients.as_deref().map(complex_list_json).unwrap_or(Value::Null),
        "diagnostics": {
            "hankel_condition": r.diagnostics.hankel_condition.map(condition_json).unwrap_or(Value::Null),
            "residual": finite_or_null(r.diagnostics.residual),
            "method": r.diagnostics.method.tag(),
            "warnings": r.diagnostics.warnings,
        }
    })
}

/// Sidecar written next to a lifted sampling.
pub fn lift_sidecar_json(p: &LiftedProblem) -> Value {
    let mut v = json!({
        "w": p.weight,
        "K": p.truncation,
        "tail_bound": finite_or_null(p.tail_bound),
        "inverse_map": p.inverse_map.tag(),
    });
    match p.inverse_map {
        InverseMap::ExpLog { step } => v["step"] = json!(step),
        InverseMap::ScaleByC { c } => v["C"] = json!(c),
        _ => {}
    }
    v
}

/// Parses a list of `{"re": .., "im": ..}` objects.
pub fn parse_complex_list(v: &Value) -> Result<Vec<Complex64>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidParameter("expected a JSON array".into()))?;
    arr.iter()
        .map(|item| {
            let p: ReIm = serde_json::from_value(item.clone())?;
            Ok(Complex64::new(p.re, p.im))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prony::{Diagnostics, Method};

    #[test]
    fn complex_csv_round_trip() {
        let vals = vec![Complex64::new(0.5, -0.25), Complex64::new(-1e-17, 3.0)];
        let mut buf = Vec::new();
        write_complex_csv(&mut buf, &vals).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("re,im\n"));
        assert_eq!(read_complex_csv(buf.as_slice()).unwrap(), vals);
    }

    #[test]
    fn moments_csv_round_trip_and_order() {
        let csv = "m,re,im\n1,0.5,0\n0,1,0\n2,0.25,0.1\n";
        let g = read_moments(csv.as_bytes()).unwrap();
        assert_eq!(g.values[0], Complex64::new(1.0, 0.0));
        assert_eq!(g.values[2], Complex64::new(0.25, 0.1));
        let mut buf = Vec::new();
        write_moments(&mut buf, &g.values).unwrap();
        assert_eq!(read_moments(buf.as_slice()).unwrap().values, g.values);
    }

    #[test]
    fn malformed_inputs() {
        assert!(read_moments("m,re,im\n0,1,0\n2,1,0\n".as_bytes()).is_err());
        assert!(read_complex_csv("x,y\n1,2\n".as_bytes()).is_err());
        assert!(read_complex_csv("re,im\n1,abc\n".as_bytes()).is_err());
        assert!(read_circle_sampling("re,im\n1,0\n".as_bytes()).is_err());
    }

    #[test]
    fn result_json_shape() {
        let r = RecoveryResult {
            poles: vec![Complex64::new(0.5, 0.1)],
            coefficients: Some(vec![Complex64::new(2.0, 0.0)]),
            diagnostics: Diagnostics {
                hankel_condition: Some(12.5),
                residual: 1e-15,
                method: Method::Grop,
                warnings: vec![],
            },
        };
        let v = recovery_result_json(&r);
        assert_eq!(v["poles"][0]["re"], json!(0.5));
        assert_eq!(v["coefficients"][0]["re"], json!(2.0));
        assert_eq!(v["diagnostics"]["method"], json!("grop"));
        assert_eq!(v["diagnostics"]["hankel_condition"], json!(12.5));
        assert_eq!(parse_complex_list(&v["poles"]).unwrap(), r.poles);
    }
}
