use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Number, Value};

use crate::canonical::TransformWitness;
use crate::exactla::IntMatrix;

/// Exact JSON number for an integer of any size.
pub fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(big).collect()))
            .collect(),
    )
}

pub fn subset_json(s: &[usize]) -> Value {
    json!(s.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn subset_text(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// `p/q` with `q ≥ 1`, also for integers.
pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A matrix in the text input format.
pub fn matrix_file(m: &IntMatrix) -> String {
    format!(
        "{} {}\n{}",
        m.rows(),
        m.cols(),
        if m.cols() == 0 {
            String::new()
        } else {
            m.to_string()
        }
    )
}

pub fn witness_json(w: &TransformWitness) -> Value {
    json!({"T": matrix_json(w.left.matrix()), "D": w.signs})
}

pub fn witness_text(w: &TransformWitness) -> String {
    let signs: Vec<String> = w.signs.iter().map(i8::to_string).collect();
    format!("T:\n{}D: diag({})\n", w.left.matrix(), signs.join(", "))
}
