//! Two matrices with the same arithmetic matroid that are not related by
//! any T·X·D, and why the canonical form does not apply to them.
//!
//!     cargo run --example non_unique_representations

use arimat::canonical::canonical_form;
use arimat::oracle::{equivalent_bruteforce, same_arithmetic_matroid};
use arimat::{IntMatrix, Representation};

fn x(a: i64, b: i64) -> Representation {
    Representation::new(IntMatrix::from_rows(&[[1, a], [0, b]]).unwrap()).unwrap()
}

fn main() -> arimat::Result<()> {
    let b = 5;
    let reps: Vec<_> = (1..b).map(|a| (a, x(a, b))).collect();
    for (a, r) in &reps {
        println!("X_{{{a},{b}}} table:");
        for p in r.full_table()?.iter() {
            println!("  {:?}  rank {}  m {}", p.subset, p.rank, p.multiplicity);
        }
        println!(
            "  canonical form: {:?}",
            canonical_form(r).err().map(|e| e.to_string())
        );
    }

    println!();
    for (i, (a1, r1)) in reps.iter().enumerate() {
        for (a2, r2) in &reps[i + 1..] {
            let same = same_arithmetic_matroid(r1, r2)?;
            let report = equivalent_bruteforce(r1, r2)?;
            println!(
                "X_{{{a1},{b}}} vs X_{{{a2},{b}}}: same matroid {same}, equivalent {}, D = {:?}",
                report.equivalent, report.witness_sign_pattern
            );
        }
    }
    Ok(())
}
