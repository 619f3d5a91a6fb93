//! Layers of the centred toric arrangement of a matrix: one per connected
//! component of an intersection of subtori, ordered by reverse inclusion.
//!
//!     cargo run --example layer_poset -- [a] [b]

use arimat::toric::{flats, geometric_weak_multiplicativity, layer_poset, layers_of_flat};
use arimat::{IntMatrix, Representation};

fn main() -> arimat::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (1, 5),
    };
    let x = Representation::new(IntMatrix::from_rows(&[[1, a], [0, b]])?)?;
    println!("X =\n{}", x.matrix());

    for f in flats(&x)? {
        let layers = layers_of_flat(&x, &f)?;
        println!(
            "flat {:?}: {} components, m = {}",
            f.elements(),
            layers.len(),
            x.multiplicity(f.elements())?
        );
    }

    let poset = layer_poset(&x)?;
    println!("{} layers, {} maximal", poset.len(), poset.maximal().len());
    for (i, l) in poset.layers().iter().enumerate() {
        let point: Vec<String> = l.point.iter().map(ToString::to_string).collect();
        println!(
            "  L{i}: flat {:?} through ({})",
            l.flat.elements(),
            point.join(", ")
        );
    }
    for (i, j) in poset.covers() {
        println!("  L{i} < L{j}");
    }
    println!(
        "basis whose intersection splits multiplicatively: {:?}",
        geometric_weak_multiplicativity(&x)?
    );
    Ok(())
}
