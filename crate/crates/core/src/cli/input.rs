//! Matrix files.
//!
//! Text format: a header line `d N`, then `d` lines of `N` integers. Anything
//! after `#` on a line is ignored, as are blank lines. With `N = 0` the body
//! is empty.
//!
//! JSON is accepted too: a bare array of rows, or an object with a `matrix`
//! (or `entries`) array and optional `rows` / `cols`, which is what the JSON
//! output of `canonical` and `enumerate` contains. Entries may be numbers or
//! decimal strings of any size.

use std::io::Read;

use num_bigint::BigInt;
use serde_json::Value;

use crate::arimatroid::Representation;
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

fn parse_int(token: &str) -> Result<BigInt> {
    token
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {token:?}")))
}

fn parse_count(token: &str, what: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        Error::Parse(format!(
            "{what} must be a non-negative integer, got {token:?}"
        ))
    })
}

pub fn parse_text(text: &str) -> Result<IntMatrix> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .split_whitespace()
        .collect();
    let [d, n] = header[..] else {
        return Err(Error::Parse("header must be \"d N\"".into()));
    };
    let (d, n) = (parse_count(d, "d")?, parse_count(n, "N")?);
    if d == 0 {
        return Err(Error::Parse("d must be positive".into()));
    }
    let body: Vec<&str> = lines.collect();
    if n == 0 {
        if !body.is_empty() {
            return Err(Error::Parse("N = 0 but the body is not empty".into()));
        }
        return Ok(IntMatrix::zeros(d, 0));
    }
    if body.len() != d {
        return Err(Error::Parse(format!(
            "expected {d} rows, found {}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(d * n);
    for (i, line) in body.iter().enumerate() {
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(parse_int)
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        data.extend(row);
    }
    IntMatrix::new(d, n, data)
}

fn json_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => parse_int(&n.to_string()),
        Value::String(s) => parse_int(s.trim()),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

fn json_count(obj: &serde_json::Map<String, Value>, key: &str) -> Result<Option<usize>> {
    obj.get(key)
        .map(|v| {
            v.as_u64()
                .map(|k| k as usize)
                .ok_or_else(|| Error::Parse(format!("{key} must be a non-negative integer")))
        })
        .transpose()
}

pub fn parse_json(text: &str) -> Result<IntMatrix> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let (rows, d, n) = match &value {
        Value::Array(rows) => (rows, None, None),
        Value::Object(obj) => {
            let rows = obj
                .get("matrix")
                .or_else(|| obj.get("entries"))
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("expected a \"matrix\" array".into()))?;
            (rows, json_count(obj, "rows")?, json_count(obj, "cols")?)
        }
        _ => return Err(Error::Parse("expected an array or object".into())),
    };
    let parsed: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                .iter()
                .map(json_int)
                .collect()
        })
        .collect::<Result<_>>()?;

    let d = d.unwrap_or(parsed.len());
    let n = n.unwrap_or_else(|| parsed.first().map_or(0, Vec::len));
    if d == 0 {
        return Err(Error::Parse("d must be positive".into()));
    }
    if n == 0 && parsed.iter().all(Vec::is_empty) {
        return Ok(IntMatrix::zeros(d, 0));
    }
    if parsed.len() != d || parsed.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("matrix is not {d}x{n}")));
    }
    IntMatrix::new(d, n, parsed.into_iter().flatten().collect())
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    match text.trim_start().chars().next() {
        Some('{') | Some('[') => parse_json(text),
        _ => parse_text(text),
    }
}

/// Reads a matrix file (`-` for standard input).
pub fn load(path: &str) -> Result<Representation> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    };
    Representation::with_any_rank(parse_matrix(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_with_comments() {
        let m = parse_matrix("# X\n2 3  # header\n1 0 -4\n\n0 2 1 # row two\n").unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1, 0, -4], [0, 2, 1]]).unwrap());
    }

    #[test]
    fn big_entries() {
        let m = parse_matrix("1 1\n123456789012345678901234567890\n").unwrap();
        assert_eq!(m.get(0, 0).to_string(), "123456789012345678901234567890");
        let j = parse_matrix("[[123456789012345678901234567890, \"-7\"]]").unwrap();
        assert_eq!(j.get(0, 0).to_string(), "123456789012345678901234567890");
        assert_eq!(j.get(0, 1), &BigInt::from(-7));
    }

    #[test]
    fn empty_ground_set() {
        assert_eq!(parse_matrix("2 0\n").unwrap(), IntMatrix::zeros(2, 0));
        assert_eq!(
            parse_matrix(r#"{"rows": 2, "cols": 0, "matrix": []}"#).unwrap(),
            IntMatrix::zeros(2, 0)
        );
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "2\n1 2\n",
            "2 2\n1 2\n",
            "1 2\n1 x\n",
            "1 2\n1 2 3\n",
            "0 0\n",
            "1 0\n5\n",
            "[[1,2],[3]]",
            "[[1.5]]",
            "{}",
        ] {
            assert!(matches!(parse_matrix(bad), Err(Error::Parse(_))), "{bad:?}");
        }
    }

    #[test]
    fn json_object_forms() {
        let a = parse_matrix(r#"{"matrix": [[1, 2], [0, 5]]}"#).unwrap();
        let b = parse_matrix(r#"{"rows": 2, "cols": 2, "entries": [[1, 2], [0, 5]]}"#).unwrap();
        assert_eq!(a, b);
    }
}
