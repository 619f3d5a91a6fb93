//! Every representation in basic form with respect to a fixed basis: one per
//! sign pattern on the spanning forest, 2^(N - kappa) in total.
//!
//!     cargo run --example stratum_enumeration

use arimat::canonical::{enumerate_basic_reps, stratum_size};
use arimat::oracle::basic_reps_bruteforce;
use arimat::{IntMatrix, Representation};

fn main() -> arimat::Result<()> {
    let x = Representation::new(IntMatrix::from_rows(&[
        [1, 0, 0, 1, 0, 1],
        [0, 1, 0, 1, 1, 0],
        [0, 0, 1, 0, 1, -1],
    ])?)?;
    let basis = [0, 1, 2];
    let all = enumerate_basic_reps(&x, &basis)?;
    println!("stratum size: {}", stratum_size(&x)?);
    println!("enumerated: {}", all.len());
    for (k, m) in all.iter().take(4).enumerate() {
        println!("#{k}\n{m}");
    }

    let mut listed = all.clone();
    listed.sort_by_key(|m| m.to_rows());
    let brute = basic_reps_bruteforce(&x, &basis, 20)?;
    println!(
        "sign search over all nonzero entries finds {} matrices, same set: {}",
        brute.len(),
        brute == listed
    );
    Ok(())
}
