//! Scramble a matrix by a random T·X·D, recover the canonical form and the
//! transform relating the two.
//!
//!     cargo run --example canonical_equivalence -- [seed]

use arimat::canonical::{canonical_form, equivalent};
use arimat::exactla::unimodular_random;
use arimat::{IntMatrix, Representation};

fn main() -> arimat::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(11);
    let x = Representation::new(IntMatrix::from_rows(&[
        [1, 0, 0, 1, 0, 1],
        [0, 1, 0, 1, 1, 0],
        [0, 0, 1, 0, 1, -1],
    ])?)?;

    let t = unimodular_random(x.d(), seed, 9);
    let signs = [1, -1, 1, 1, -1, -1];
    let y = Representation::new(t.apply(&x.matrix().scale_columns_by_signs(&signs)))?;
    println!("X =\n{}\nY = T·X·D =\n{}", x.matrix(), y.matrix());

    let cx = canonical_form(&x)?;
    let cy = canonical_form(&y)?;
    println!("canonical form of X =\n{}", cx.matrix);
    println!("canonical form of Y =\n{}", cy.matrix);
    assert_eq!(cx.matrix, cy.matrix);

    let w = equivalent(&x, &y)?.expect("same orbit");
    println!("recovered T =\n{}D = {:?}", w.left.matrix(), w.signs);
    println!("T·X·D = Y: {}", w.maps(x.matrix(), y.matrix()));
    Ok(())
}
