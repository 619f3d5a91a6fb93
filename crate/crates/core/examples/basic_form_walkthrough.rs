//! Basic form, support graph, spanning forest and sign normalization of a
//! 3x7 matrix, step by step.
//!
//!     cargo run --example basic_form_walkthrough

use arimat::canonical::{basic_form, sign_normalize_traced, LineFlip, SignVector};
use arimat::circuitgraph::{coordinatizing_circuit, coordinatizing_path, elimination_order, kappa};
use arimat::{IntMatrix, Representation};

fn main() -> arimat::Result<()> {
    let x = Representation::new(IntMatrix::from_rows(&[
        [1, 0, 0, -4, 0, 3, 0],
        [0, 2, 0, 1, 2, 0, -2],
        [0, 0, 3, 0, 1, -1, -1],
    ])?)?;
    println!("X =\n{}", x.matrix());

    let basis = x
        .first_multiplicative_basis()
        .expect("weakly multiplicative");
    println!("first multiplicative basis (0-based): {basis:?}");
    let form = basic_form(&x, &basis)?;
    println!(
        "diagonal: {:?}",
        form.diag()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("A =\n{}", form.a());

    let c = form.incidence();
    println!("support of A =\n{c}");
    println!("components: {}", kappa(&c));

    let forest = coordinatizing_path(&c);
    let names: Vec<_> = forest.edges().iter().map(|&e| c.edge_name(e)).collect();
    println!(
        "spanning forest ({} = N - kappa edges): {}",
        forest.len(),
        names.join(" ")
    );

    for e in c.edges().into_iter().filter(|&e| !forest.contains(e)) {
        let circuit: Vec<_> = coordinatizing_circuit(&forest, e)?
            .into_iter()
            .map(|e| c.edge_name(e))
            .collect();
        println!(
            "circuit closed by {}: {}",
            c.edge_name(e),
            circuit.join(" ")
        );
    }

    let order = elimination_order(&forest);
    let leaves: Vec<_> = order
        .vertices()
        .into_iter()
        .map(|v| c.vertex_name(v))
        .collect();
    println!("elimination order: {}", leaves.join(", "));

    let sigma = SignVector::making_positive(&form, &forest);
    let (out, flips) = sign_normalize_traced(&form, &forest, &order, &sigma)?;
    for flip in &flips {
        match flip {
            LineFlip::Row(i) => println!("negate row {}", i + 1),
            LineFlip::Column(j) => println!("negate column {}", j + 1),
        }
    }
    println!("X' =\n{}", out.assembled());
    let w = out.witness();
    println!("T =\n{}D = {:?}", w.left.matrix(), w.signs);
    assert!(w.maps(x.matrix(), &out.assembled()));
    Ok(())
}
