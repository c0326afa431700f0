use serde::{Deserialize, Serialize};

use super::{faces, EdgeSide, FaceSet, KnotDiagram, Side};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    White,
    Black,
}

impl Shade {
    pub fn flip(self) -> Shade {
        match self {
            Shade::White => Shade::Black,
            Shade::Black => Shade::White,
        }
    }
}

/// A checkerboard coloring of the faces of a diagram.
///
/// Carries its own copy of the face set so that region indices stay tied to
/// the diagram the coloring was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    faces: FaceSet,
    shades: Vec<Shade>,
    white: Vec<usize>,
    black: Vec<usize>,
}

impl Coloring {
    fn from_shades(faces: FaceSet, shades: Vec<Shade>) -> Self {
        let ordered = |want: Shade| {
            let mut v: Vec<usize> = (0..shades.len()).filter(|&f| shades[f] == want).collect();
            // Regions ordered by their smallest incident edge label; the two
            // edgeless faces of the unknot keep their index order.
            v.sort_by_key(|&f| (faces.faces()[f].min_edge().unwrap_or(0), f));
            v
        };
        let white = ordered(Shade::White);
        let black = ordered(Shade::Black);
        Coloring {
            faces,
            shades,
            white,
            black,
        }
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn shade(&self, face: usize) -> Shade {
        self.shades[face]
    }

    pub fn shades(&self) -> &[Shade] {
        &self.shades
    }

    /// White faces `X_0, X_1, ...` in canonical order.
    pub fn white_regions(&self) -> &[usize] {
        &self.white
    }

    pub fn black_regions(&self) -> &[usize] {
        &self.black
    }

    /// Position of `face` among the white regions.
    pub fn white_index(&self, face: usize) -> Option<usize> {
        self.white.iter().position(|&f| f == face)
    }

    pub fn black_index(&self, face: usize) -> Option<usize> {
        self.black.iter().position(|&f| f == face)
    }

    /// The shade-swapped coloring.
    pub fn dual(&self) -> Coloring {
        Coloring::from_shades(
            self.faces.clone(),
            self.shades.iter().map(|s| s.flip()).collect(),
        )
    }

    /// Shades of the four quadrants around a crossing.
    pub fn quadrant_shades(&self, crossing: usize) -> [Shade; 4] {
        self.faces.quadrants(crossing).map(|f| self.shades[f])
    }
}

/// The two checkerboard colorings: the canonical one, where the face on the
/// left of edge 1 is white, and its dual.
pub fn checkerboard(d: &KnotDiagram) -> Result<(Coloring, Coloring)> {
    let fs = faces(d);
    let n = fs.len();
    let mut shades: Vec<Option<Shade>> = vec![None; n];

    if d.crossing_count() == 0 {
        shades = vec![Some(Shade::White), Some(Shade::Black)];
    } else {
        let start = fs.face_of(EdgeSide {
            edge: 1,
            side: Side::Left,
        });
        // Faces sharing an edge get opposite shades.
        let mut neighbours = vec![Vec::new(); n];
        for label in 1..=d.edge_count() as u32 {
            let [l, r] = fs.edge_faces(label);
            neighbours[l].push(r);
            neighbours[r].push(l);
        }
        shades[start] = Some(Shade::White);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let here = shades[f].expect("visited faces are shaded");
            for &g in &neighbours[f] {
                match shades[g] {
                    None => {
                        shades[g] = Some(here.flip());
                        stack.push(g);
                    }
                    Some(s) if s == here => {
                        return Err(Error::InternalInvariantViolation(format!(
                            "faces {f} and {g} share an edge but cannot be shaded apart"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let shades: Vec<Shade> = shades
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InternalInvariantViolation("face graph is disconnected".into()))?;
    let canonical = Coloring::from_shades(fs, shades);
    let dual = canonical.dual();
    Ok((canonical, dual))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossingType {
    I,
    II,
}

/// Incidence number and type of every crossing under a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingClass {
    pub eta: Vec<i8>,
    pub ctype: Vec<CrossingType>,
}

impl CrossingClass {
    /// `μ = Σ η(C)` over type II crossings.
    pub fn mu(&self) -> i64 {
        self.eta
            .iter()
            .zip(&self.ctype)
            .filter(|(_, t)| **t == CrossingType::II)
            .map(|(&e, _)| e as i64)
            .sum()
    }

    pub fn type_two_count(&self) -> usize {
        self.ctype.iter().filter(|t| **t == CrossingType::II).count()
    }
}

// A crossing is determined locally by which quadrant pair is white and by
// the direction of the over-strand (the under-strand always runs 0 -> 2).
//
// Rotating the over-strand counterclockwise sweeps quadrants 1 and 3; the
// incidence number is +1 when the swept pair is black. The oriented
// smoothing merges quadrants 1 and 3 at a positive crossing (over-strand
// 3 -> 1) and quadrants 0 and 2 at a negative one; the crossing is type II
// when the merged pair is black.
//
// Indexed by [quadrants 1,3 are white][over-strand runs 1 -> 3].
const LOCAL_TABLE: [[(i8, CrossingType); 2]; 2] = [
    // quadrants 1,3 black
    [(1, CrossingType::II), (1, CrossingType::I)],
    // quadrants 1,3 white
    [(-1, CrossingType::I), (-1, CrossingType::II)],
];

/// Per-crossing `(η, type)` by lookup on the local configuration.
pub fn classify_crossings(d: &KnotDiagram, col: &Coloring) -> CrossingClass {
    let n = d.crossing_count();
    let mut eta = Vec::with_capacity(n);
    let mut ctype = Vec::with_capacity(n);
    for x in 0..n {
        let q = col.quadrant_shades(x);
        debug_assert!(q[0] == q[2] && q[1] == q[3] && q[0] != q[1]);
        let odd_white = (q[1] == Shade::White) as usize;
        let (e, t) = LOCAL_TABLE[odd_white][d.over_runs_b_to_d(x) as usize];
        eta.push(e);
        ctype.push(t);
    }
    CrossingClass { eta, ctype }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn colorings_are_dual() {
        let d = KnotDiagram::parse_pd(TREFOIL).unwrap();
        let (c, dual) = checkerboard(&d).unwrap();
        assert_eq!(c.white_regions().len() + c.black_regions().len(), 5);
        assert_eq!(c.white_regions(), dual.black_regions());
        assert_eq!(c.black_regions(), dual.white_regions());
        let left_of_one = c.faces().face_of(EdgeSide { edge: 1, side: Side::Left });
        assert_eq!(c.shade(left_of_one), Shade::White);
        for label in 1..=6 {
            let [l, r] = c.faces().edge_faces(label);
            assert_ne!(c.shade(l), c.shade(r));
        }
    }

    #[test]
    fn unknot_has_one_region_of_each_shade() {
        let (c, dual) = checkerboard(&KnotDiagram::unknot()).unwrap();
        assert_eq!((c.white_regions().len(), c.black_regions().len()), (1, 1));
        assert_eq!(dual.white_regions(), c.black_regions());
    }

    #[test]
    fn dual_flips_eta_but_keeps_smoothing() {
        let d = KnotDiagram::parse_pd(TREFOIL).unwrap();
        let (c, dual) = checkerboard(&d).unwrap();
        let a = classify_crossings(&d, &c);
        let b = classify_crossings(&d, &dual);
        for x in 0..3 {
            assert_eq!(a.eta[x], -b.eta[x]);
            assert_ne!(a.ctype[x], b.ctype[x]);
        }
    }
}
