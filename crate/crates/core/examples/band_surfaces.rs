//! Linking matrices of band surfaces, both hand-written and the black
//! checkerboard surface of a diagram.

use knotform::diagram::checkerboard;
use knotform::surfaces::{black_surface_bands, linking_matrix};
use knotform::{goeritz, BandSurface, Braid};

fn main() -> knotform::Result<()> {
    let s: BandSurface = "bands: 3 4 2; cross(1,2): -1; cross(2,3): -1".parse()?;
    let m = linking_matrix(&s);
    println!("{s}\n  -> {m}, det {}, Smith {:?}", m.determinant(), m.smith_invariants());

    let d = Braid::parse("1 -2 1 -2", None)?.to_diagram()?;
    let (canonical, _) = checkerboard(&d)?;
    let bands = black_surface_bands(&d, &canonical);
    let lm = linking_matrix(&bands);
    let g = goeritz(&d, &canonical, 0)?;
    println!("\nfigure eight, black surface:\n{bands}");
    println!("  linking matrix {lm}, inertia {:?}", lm.inertia());
    println!("  Goeritz matrix {}, inertia {:?}", g.reduced, g.reduced.inertia());
    Ok(())
}
