//! Hermite and Smith normal forms with their transforms, and an integer
//! linear system solved through the Smith form.
//!
//!     cargo run --example normal_forms

use arimat::exactla::{
    hnf_basis_form, hnf_left_canonical, snf, solve_diophantine, unimodular_random,
};
use arimat::IntMatrix;
use num_bigint::BigInt;

fn main() -> arimat::Result<()> {
    let m = IntMatrix::from_rows(&[[4, 6, 2, 8], [2, 5, 1, 3], [6, 1, 7, 0]])?;
    println!("M =\n{m}");

    let scrambled = unimodular_random(3, 42, 10).apply(&m);
    let (h1, _) = hnf_left_canonical(&m)?;
    let (h2, t2) = hnf_left_canonical(&scrambled)?;
    println!(
        "left Hermite form =\n{h1}same for a scrambled copy: {}",
        h1 == h2
    );
    println!("transform for the copy =\n{}", t2.matrix());

    let (hb, _) = hnf_basis_form(&m, &[1, 2, 3])?;
    println!("Hermite form with pivots in columns 2, 3, 4 =\n{hb}");

    let s = snf(&m);
    let factors: Vec<String> = s.diagonal.iter().map(ToString::to_string).collect();
    println!("invariant factors: {}", factors.join(", "));
    println!("U·M·W =\n{}", &(&s.left * &m) * &s.right);

    let b: Vec<BigInt> = [20, 11, 14].map(BigInt::from).to_vec();
    match solve_diophantine(&m, &b)? {
        Some(sol) => {
            let p: Vec<String> = sol.particular.iter().map(ToString::to_string).collect();
            println!(
                "M·x = (20, 11, 14): x = ({}) + kernel of rank {}",
                p.join(", "),
                sol.kernel_basis.len()
            );
        }
        None => println!("M·x = (20, 11, 14) has no integer solution"),
    }
    Ok(())
}
