//! The knot 7_6 end to end: diagram, colorings, Goeritz matrix, signature.
//!
//! Run with `cargo run --example seven_six`.

use knotform::diagram::{checkerboard, classify_crossings};
use knotform::{gl_signature, goeritz, knot_determinant, KnotDiagram};

fn main() -> knotform::Result<()> {
    let d = KnotDiagram::parse_pd(
        "X(8,2,9,1) X(2,10,3,9) X(10,13,11,14) X(14,4,1,3) X(6,12,7,11) X(4,7,5,8) X(12,6,13,5)",
    )?;
    println!("{} crossings, writhe {}, alternating {}", d.crossing_count(), d.writhe(), d.is_alternating());

    let (canonical, dual) = checkerboard(&d)?;
    for (name, col) in [("canonical", &canonical), ("dual", &dual)] {
        let class = classify_crossings(&d, col);
        // Deleting region 1 of the canonical coloring gives the textbook matrix.
        let g = goeritz(&d, col, 1)?;
        println!("\n{name}: {} white regions", col.white_regions().len());
        println!("  eta   {:?}", class.eta);
        println!("  types {:?}", class.ctype);
        println!("  G = {}", g.reduced);
        println!("  inertia {:?}, mu {}, sigma = {}", g.reduced.inertia(), g.mu, g.signature());
    }

    println!("\nsignature {}, determinant {}", gl_signature(&d)?, knot_determinant(&d)?);
    Ok(())
}
