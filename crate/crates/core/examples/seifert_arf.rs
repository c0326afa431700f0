//! Seifert matrices of closed braids and their Arf invariants.
//!
//! Pass braid words as arguments, e.g.
//! `cargo run --example seifert_arf -- "1 -2 1 -2" "1 2 1 2 1 2 1 2"`.

use knotform::{arf, seifert_matrix_from_braid, symmetrized_signature, Braid};

fn main() -> knotform::Result<()> {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = vec!["1 1 1".into(), "1 -2 1 -2".into(), "1 1 1 1 1".into(), "1 2 1 2 1 2 1 2".into()];
    }
    for w in &words {
        let b = Braid::parse(w, None)?;
        let s = seifert_matrix_from_braid(&b)?;
        let (discs, bands, betti) = s.genus_data();
        println!("braid {b}");
        println!("  {discs} discs, {bands} bands, genus {}", betti / 2);
        println!("  V = {}", s.matrix());
        println!("  sigma {}, Arf {}", symmetrized_signature(&s), arf(&s)?);
    }
    Ok(())
}
