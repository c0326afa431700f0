use serde::{Deserialize, Serialize};

use super::{KnotDiagram, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One side of an oriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSide {
    pub edge: u32,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    /// Boundary edge-sides in cyclic order, keeping the face on the left of
    /// the walk.
    pub boundary: Vec<EdgeSide>,
}

impl Face {
    /// Smallest edge label on the boundary.
    pub fn min_edge(&self) -> Option<u32> {
        self.boundary.iter().map(|s| s.edge).min()
    }
}

/// Faces of the planar map and, for each crossing, the face in each of its
/// four quadrants. Quadrant `q` lies between positions `q` and `q + 1`
/// (counterclockwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceSet {
    faces: Vec<Face>,
    quadrants: Vec<[usize; 4]>,
    /// Face on the left and on the right of each edge (index `label - 1`).
    edge_faces: Vec<[usize; 2]>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn quadrants(&self, crossing: usize) -> [usize; 4] {
        self.quadrants[crossing]
    }

    pub fn crossing_count(&self) -> usize {
        self.quadrants.len()
    }

    /// Face lying on the given side of an edge.
    pub fn face_of(&self, side: EdgeSide) -> usize {
        let [left, right] = self.edge_faces[side.edge as usize - 1];
        match side.side {
            Side::Left => left,
            Side::Right => right,
        }
    }

    pub fn edge_faces(&self, edge: u32) -> [usize; 2] {
        self.edge_faces[edge as usize - 1]
    }
}

/// Faces by edge-side traversal.
///
/// Leaving a crossing through a slot and following the edge, the face on the
/// left continues at the far end with the slot clockwise-next to the one we
/// arrived through. Each (crossing, slot) pair, read as an outgoing
/// half-edge, lies on exactly one such walk; the face it bounds is the
/// quadrant between that slot and the next one counterclockwise.
pub fn faces(d: &KnotDiagram) -> FaceSet {
    let n = d.crossing_count();
    if n == 0 {
        // The circle alone: one face on each side, no edges in the map.
        return FaceSet {
            faces: vec![Face { boundary: vec![] }, Face { boundary: vec![] }],
            quadrants: vec![],
            edge_faces: vec![],
        };
    }

    let mut face_of_slot = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::with_capacity(n + 2);
    for x in 0..n {
        for s in 0..4 {
            if face_of_slot[x][s] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut h: Slot = (x, s);
            loop {
                face_of_slot[h.0][h.1] = id;
                let side = if d.is_outgoing(h) { Side::Left } else { Side::Right };
                boundary.push(EdgeSide {
                    edge: d.label(h),
                    side,
                });
                let (tx, ts) = d.twin(h);
                h = (tx, (ts + 3) % 4);
                if h == (x, s) {
                    break;
                }
            }
            faces.push(Face { boundary });
        }
    }

    let edge_faces = (1..=d.edge_count() as u32)
        .map(|label| {
            let (tx, ts) = d.tail(label);
            let (hx, hs) = d.head(label);
            [face_of_slot[tx][ts], face_of_slot[hx][hs]]
        })
        .collect();

    FaceSet {
        faces,
        quadrants: face_of_slot,
        edge_faces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_formula() {
        let trefoil = KnotDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let f = faces(&trefoil);
        assert_eq!(f.len(), 5);
        let sides: usize = f.faces().iter().map(|face| face.boundary.len()).sum();
        assert_eq!(sides, 2 * trefoil.edge_count());

        assert_eq!(faces(&KnotDiagram::unknot()).len(), 2);
    }

    #[test]
    fn each_edge_side_in_one_face() {
        let d = KnotDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let f = faces(&d);
        let mut all: Vec<EdgeSide> = f.faces().iter().flat_map(|x| x.boundary.clone()).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 12);
        for label in 1..=6 {
            let [l, r] = f.edge_faces(label);
            assert_ne!(l, r);
            assert!(f.faces()[l].boundary.contains(&EdgeSide { edge: label, side: Side::Left }));
            assert!(f.faces()[r].boundary.contains(&EdgeSide { edge: label, side: Side::Right }));
        }
    }
}
