//! Signatures of the torus knots T(m,2) from two directions: the Goeritz
//! matrix of the closed braid and its Seifert matrix.

use knotform::{gl_signature, knot_determinant, seifert_matrix_from_braid, symmetrized_signature, Braid};

fn main() -> knotform::Result<()> {
    println!("{:>8} {:>8} {:>8} {:>6}", "knot", "goeritz", "seifert", "det");
    for m in (3..=21).step_by(2) {
        let b = Braid::from_word(vec![1; m])?;
        let d = b.to_diagram()?;
        let s = seifert_matrix_from_braid(&b)?;
        println!(
            "{:>8} {:>8} {:>8} {:>6}",
            format!("T({m},2)"),
            gl_signature(&d)?,
            symmetrized_signature(&s),
            knot_determinant(&d)?
        );
    }
    Ok(())
}
