//! Multiplicities three ways: Smith normal form, gcd of maximal minors, and
//! |det| on bases.
//!
//!     cargo run --example multiplicity_oracles

use arimat::arimatroid::mask_to_subset;
use arimat::exactla::{det, invariant_factors};
use arimat::oracle::multiplicity_gcd_minors;
use arimat::{IntMatrix, Representation};
use num_traits::Signed;

fn main() -> arimat::Result<()> {
    let x = Representation::new(IntMatrix::from_rows(&[[2, 0, 1, 4], [0, 3, 1, 6]])?)?;
    println!("X =\n{}", x.matrix());
    println!(
        "{:<12} {:>4} {:>10} {:>8} {:>6}  invariant factors",
        "S", "rank", "m (Smith)", "minors", "|det|"
    );
    for mask in 0u64..1 << x.n() {
        let s = mask_to_subset(mask, x.n());
        let sub = x.submatrix(&s)?;
        let det_col = if x.is_basis(&s)? {
            det(&sub)?.abs().to_string()
        } else {
            "-".into()
        };
        let factors: Vec<String> = invariant_factors(&sub)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "{:<12} {:>4} {:>10} {:>8} {:>6}  [{}]",
            format!("{s:?}"),
            x.rank_of(&s)?,
            x.multiplicity(&s)?,
            multiplicity_gcd_minors(&x, &s)?,
            det_col,
            factors.join(", ")
        );
    }
    println!("multiplicative bases: {:?}", x.multiplicative_bases());
    Ok(())
}
