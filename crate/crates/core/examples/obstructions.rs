//! Distance bounds and surface obstructions from classical invariants.

use knotform::obstructions::{
    crosscap2_report, gordian_lower_bound, klein_bottle_test, moebius_b4_test,
    sharp_gordian_lower_bound, Definiteness,
};
use knotform::{arf, gl_signature, seifert_matrix_from_braid, Braid};

fn main() -> knotform::Result<()> {
    let t92 = Braid::parse("1 1 1 1 1 1 1 1 1", None)?;
    let sigma = gl_signature(&t92.to_diagram()?)?;
    println!("T(9,2): sigma {sigma}");
    println!("  unknotting number >= {}", gordian_lower_bound(sigma, 0));
    println!("  sharp unknotting number >= {}", sharp_gordian_lower_bound(sigma, 0));

    let fig8 = Braid::parse("1 -2 1 -2", None)?;
    let sigma = gl_signature(&fig8.to_diagram()?)?;
    let a = arf(&seifert_matrix_from_braid(&fig8)?)?;
    println!("\n4_1: sigma {sigma}, Arf {a}");
    println!("  Moebius band in B4: {:?}", moebius_b4_test(sigma, a).verdict);
    for def in [Definiteness::Positive, Definiteness::Negative] {
        println!("  Klein bottle, {def:?} form: {:?}", klein_bottle_test(sigma, a, def).verdict);
    }

    let r = crosscap2_report(-2, 15, 20, false);
    println!("\nsigma -2, det 15: {:?}", r.verdict);
    for t in &r.witnesses {
        println!("  [[{}, {}], [{}, {}]]", t.l, t.m, t.m, t.n);
    }
    Ok(())
}
