//! A seeded random walk of S*-moves. The quantity sigma + e/2 never moves.

use knotform::surfaces::random_sstar_walk_trace;
use knotform::{SurfaceState, SymIntMatrix};

fn main() -> knotform::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let g = SymIntMatrix::from_rows(vec![vec![3, -1, 0], vec![-1, 4, -1], vec![0, -1, 2]])?;
    let start = SurfaceState::new(g, -10)?;
    let trace = random_sstar_walk_trace(&start, 1000, seed);

    println!("start: dim {}, e {}, sigma + e/2 = {}", start.matrix().dim(), start.euler(), trace.start);
    for (i, (mv, c)) in trace.moves.iter().zip(&trace.conserved).enumerate().take(8) {
        println!("  {:>3} {mv:?} -> {c}", i + 1);
    }
    println!(
        "end after {} moves: dim {}, e {}, constant {}",
        trace.moves.len(),
        trace.end.matrix().dim(),
        trace.end.euler(),
        trace.is_constant()
    );
    Ok(())
}
