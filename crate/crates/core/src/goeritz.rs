//! Goeritz matrices, the correction term `μ`, and the signature formula
//! `σ = sign(G) − μ`.

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::diagram::{checkerboard, classify_crossings, Coloring, KnotDiagram, Shade};
use crate::error::{Error, Result};
use crate::forms::SymIntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzData {
    /// Form over all white regions `X_0..X_N`; rows sum to zero.
    pub full: SymIntMatrix,
    /// `full` with row and column `deleted_index` removed.
    pub reduced: SymIntMatrix,
    pub deleted_index: usize,
    pub mu: i64,
}

impl GoeritzData {
    /// `sign(G) − μ`.
    pub fn signature(&self) -> i64 {
        self.reduced.signature() - self.mu
    }
}

/// Goeritz data for `d` under `col`, deleting white region `deleted`
/// (indexed in the coloring's canonical order).
pub fn goeritz(d: &KnotDiagram, col: &Coloring, deleted: usize) -> Result<GoeritzData> {
    let white = col.white_regions();
    if deleted >= white.len() {
        return Err(Error::BadRegion {
            index: deleted,
            count: white.len(),
        });
    }
    let class = classify_crossings(d, col);
    let mut full = SymIntMatrix::zeros(white.len());
    for x in 0..d.crossing_count() {
        let q = col.faces().quadrants(x);
        let (a, b) = if col.shade(q[0]) == Shade::White {
            (q[0], q[2])
        } else {
            (q[1], q[3])
        };
        if a == b {
            // A nugatory crossing touches one white region twice.
            continue;
        }
        let i = col.white_index(a).expect("quadrant face is white");
        let j = col.white_index(b).expect("quadrant face is white");
        let eta = class.eta[x] as i64;
        full.add_sym(i, j, -eta);
        full.add_sym(i, i, eta);
        full.add_sym(j, j, eta);
    }
    if !full.has_zero_row_sums() {
        return Err(Error::InternalInvariantViolation(
            "Goeritz rows do not sum to zero".into(),
        ));
    }
    let reduced = full.without(deleted);
    Ok(GoeritzData {
        full,
        reduced,
        deleted_index: deleted,
        mu: class.mu(),
    })
}

/// Signature via `sign(G) − μ` on the canonical coloring, checked against
/// the dual coloring.
pub fn gl_signature(d: &KnotDiagram) -> Result<i64> {
    let (canonical, dual) = checkerboard(d)?;
    let s = goeritz(d, &canonical, 0)?.signature();
    let t = goeritz(d, &dual, 0)?.signature();
    if s != t {
        return Err(Error::InternalInvariantViolation(format!(
            "colorings disagree on the signature: {s} and {t}"
        )));
    }
    Ok(s)
}

/// `|det G|` of the reduced Goeritz matrix; 1 for the unknot.
pub fn knot_determinant(d: &KnotDiagram) -> Result<u64> {
    let (canonical, _) = checkerboard(d)?;
    let det = goeritz(d, &canonical, 0)?.reduced.determinant().abs();
    det.to_u64()
        .ok_or_else(|| Error::Overflow(format!("knot determinant {det}")))
}

/// `#black − #positive − 1` on a reduced alternating diagram, counted in the
/// coloring where every crossing has `η = −1`.
pub fn alternating_signature(d: &KnotDiagram) -> Result<i64> {
    if !d.is_alternating() {
        return Err(Error::NotAlternating("over and under passages do not alternate".into()));
    }
    let nugatory = d.nugatory_crossings();
    if let Some(&x) = nugatory.first() {
        return Err(Error::NotAlternating(format!("crossing {} is nugatory", x + 1)));
    }
    let (canonical, dual) = checkerboard(d)?;
    let col = if classify_crossings(d, &canonical).eta.iter().all(|&e| e == -1) {
        canonical
    } else {
        dual
    };
    if classify_crossings(d, &col).eta.iter().any(|&e| e != -1) {
        return Err(Error::InternalInvariantViolation(
            "alternating diagram without a coloring of constant incidence".into(),
        ));
    }
    Ok(col.black_regions().len() as i64 - d.positive_crossings() as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Braid;

    fn closure(word: &str) -> KnotDiagram {
        Braid::parse(word, None).unwrap().to_diagram().unwrap()
    }

    #[test]
    fn unknot() {
        let d = KnotDiagram::unknot();
        let (c, _) = checkerboard(&d).unwrap();
        let g = goeritz(&d, &c, 0).unwrap();
        assert_eq!(g.reduced.dim(), 0);
        assert_eq!(g.mu, 0);
        assert_eq!(gl_signature(&d).unwrap(), 0);
        assert_eq!(knot_determinant(&d).unwrap(), 1);
    }

    #[test]
    fn positive_trefoil() {
        let d = closure("1 1 1");
        assert_eq!(gl_signature(&d).unwrap(), -2);
        assert_eq!(knot_determinant(&d).unwrap(), 3);
        assert_eq!(alternating_signature(&d).unwrap(), -2);
        assert_eq!(gl_signature(&d.mirror()).unwrap(), 2);
        assert_eq!(alternating_signature(&d.mirror()).unwrap(), 2);
    }

    #[test]
    fn bad_region() {
        let d = closure("1 1 1");
        let (c, _) = checkerboard(&d).unwrap();
        let n = c.white_regions().len();
        assert_eq!(goeritz(&d, &c, n), Err(Error::BadRegion { index: n, count: n }));
    }

    #[test]
    fn every_deleted_region_gives_the_same_signature() {
        let d = closure("1 -2 1 -2");
        let (c, dual) = checkerboard(&d).unwrap();
        for col in [&c, &dual] {
            for k in 0..col.white_regions().len() {
                let g = goeritz(&d, col, k).unwrap();
                assert_eq!(g.signature(), 0);
                assert_eq!(g.reduced.determinant().abs(), 5.into());
            }
        }
    }

    #[test]
    fn kink_is_rejected_by_the_alternating_formula() {
        let d = closure("1");
        assert_eq!(gl_signature(&d).unwrap(), 0);
        assert!(matches!(alternating_signature(&d), Err(Error::NotAlternating(_))));
    }
}
