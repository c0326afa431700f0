//! Oriented knot diagrams on the sphere.
//!
//! A diagram is stored as a PD code: one 4-tuple of edge labels per crossing,
//! listed counterclockwise starting from the incoming under-edge. Labels are
//! normalized to `1..=2n` in traversal order, so edge `k` runs into the
//! crossing where edge `k + 1` leaves.

mod braid;
mod coloring;
mod faces;
mod pd;

use std::fmt;

use crate::error::{Error, Result};

pub use braid::Braid;
pub use coloring::{checkerboard, classify_crossings, Coloring, CrossingClass, CrossingType, Shade};
pub use faces::{faces, EdgeSide, Face, FaceSet, Side};

/// A slot at a crossing: `(crossing index, position 0..4)`, positions
/// counted counterclockwise from the incoming under-edge.
pub type Slot = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KnotDiagram {
    crossings: Vec<[u32; 4]>,
    /// `true` when the over-strand runs from position 1 to position 3.
    over_from_b: Vec<bool>,
    /// For label `k` (index `k - 1`): the slot it leaves from and the slot
    /// it runs into.
    ends: Vec<[Slot; 2]>,
}

impl KnotDiagram {
    /// The crossingless circle.
    pub fn unknot() -> Self {
        KnotDiagram {
            crossings: Vec::new(),
            over_from_b: Vec::new(),
            ends: Vec::new(),
        }
    }

    /// Parses PD text: whitespace-separated `X(a,b,c,d)` terms, or the
    /// literal `unknot`.
    pub fn parse_pd(text: &str) -> Result<Self> {
        pd::parse_pd(text)
    }

    /// Builds a diagram from raw PD tuples with arbitrary positive labels.
    ///
    /// Each label must occur exactly twice and the strands must close up
    /// into a single component. Labels are renumbered `1..=2n` along the
    /// orientation, starting from the smallest input label.
    pub fn from_pd(tuples: &[[u64; 4]]) -> Result<Self> {
        if tuples.is_empty() {
            return Err(Error::MalformedPd(
                "no crossings; use the literal `unknot` for the crossingless diagram".into(),
            ));
        }
        let n = tuples.len();

        let mut occurrences: std::collections::BTreeMap<u64, Vec<Slot>> = Default::default();
        for (x, t) in tuples.iter().enumerate() {
            for (s, &label) in t.iter().enumerate() {
                if label == 0 {
                    return Err(Error::MalformedPd("edge labels must be positive".into()));
                }
                occurrences.entry(label).or_default().push((x, s));
            }
        }
        if let Some((label, slots)) = occurrences.iter().find(|(_, v)| v.len() != 2) {
            return Err(Error::MalformedPd(format!(
                "edge {label} occurs {} times, expected exactly twice",
                slots.len()
            )));
        }
        if occurrences.len() != 2 * n {
            return Err(Error::MalformedPd(format!(
                "{n} crossings need {} distinct edges, found {}",
                2 * n,
                occurrences.len()
            )));
        }
        let twin = |(x, s): Slot| -> Slot {
            let slots = &occurrences[&tuples[x][s]];
            if slots[0] == (x, s) {
                slots[1]
            } else {
                slots[0]
            }
        };

        // Walk every strand: enter at a slot, leave through the opposite one.
        let mut seen = vec![[false; 4]; n];
        let mut components = 0;
        let mut walk: Vec<(Slot, Slot)> = Vec::with_capacity(2 * n);
        let mut starts = std::iter::once((0usize, 0usize))
            .chain((0..n).flat_map(|x| (0..4).map(move |s| (x, s))));
        while let Some(start) = starts.find(|&(x, s)| !seen[x][s]) {
            components += 1;
            let mut entry = start;
            loop {
                let exit = (entry.0, (entry.1 + 2) % 4);
                seen[entry.0][entry.1] = true;
                seen[exit.0][exit.1] = true;
                if components == 1 {
                    walk.push((entry, exit));
                }
                entry = twin(exit);
                if entry == start {
                    break;
                }
                if seen[entry.0][entry.1] {
                    return Err(Error::MalformedPd("strands do not close up consistently".into()));
                }
            }
        }
        if components > 1 {
            return Err(Error::NotAKnot { components });
        }

        let mut over_from_b = vec![false; n];
        for &((x, s), _) in &walk {
            match s {
                0 => {}
                2 => {
                    return Err(Error::MalformedPd(format!(
                        "under-strand of crossing {} runs against the orientation",
                        x + 1
                    )))
                }
                1 => over_from_b[x] = true,
                _ => over_from_b[x] = false,
            }
        }

        // Renumber along the walk, starting at the smallest input label.
        let exit_labels: Vec<u64> = walk.iter().map(|&(_, (x, s))| tuples[x][s]).collect();
        let first = (0..walk.len()).min_by_key(|&k| exit_labels[k]).unwrap_or(0);
        let mut relabel = std::collections::HashMap::with_capacity(2 * n);
        for t in 0..walk.len() {
            let k = (first + t) % walk.len();
            relabel.insert(exit_labels[k], (t + 1) as u32);
        }
        let crossings: Vec<[u32; 4]> = tuples
            .iter()
            .map(|t| [relabel[&t[0]], relabel[&t[1]], relabel[&t[2]], relabel[&t[3]]])
            .collect();

        let mut ends = vec![[(0, 0); 2]; 2 * n];
        for &((x_in, s_in), (x_out, s_out)) in &walk {
            let label_in = crossings[x_in][s_in] as usize;
            let label_out = crossings[x_out][s_out] as usize;
            ends[label_in - 1][1] = (x_in, s_in);
            ends[label_out - 1][0] = (x_out, s_out);
        }

        let d = KnotDiagram {
            crossings,
            over_from_b,
            ends,
        };
        let face_count = faces(&d).len();
        if face_count != n + 2 {
            return Err(Error::MalformedPd(format!(
                "not a planar diagram: {face_count} faces, a diagram with {n} crossings on the sphere has {}",
                n + 2
            )));
        }
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn is_unknot_literal(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    /// Label at a slot.
    pub fn label(&self, (x, s): Slot) -> u32 {
        self.crossings[x][s]
    }

    /// Whether the over-strand at crossing `x` runs from position 1 to 3.
    pub fn over_runs_b_to_d(&self, x: usize) -> bool {
        self.over_from_b[x]
    }

    /// Slot that edge `label` leaves from.
    pub fn tail(&self, label: u32) -> Slot {
        self.ends[label as usize - 1][0]
    }

    /// Slot that edge `label` runs into.
    pub fn head(&self, label: u32) -> Slot {
        self.ends[label as usize - 1][1]
    }

    /// The other end of the edge at `slot`.
    pub fn twin(&self, slot: Slot) -> Slot {
        let [tail, head] = self.ends[self.label(slot) as usize - 1];
        if tail == slot {
            head
        } else {
            tail
        }
    }

    /// Whether the edge at `slot` leaves its crossing there.
    pub fn is_outgoing(&self, slot: Slot) -> bool {
        self.tail(self.label(slot)) == slot
    }

    /// Crossing sign: `+1` for a right-handed crossing (over-strand runs
    /// from position 3 to position 1), `-1` otherwise.
    pub fn sign(&self, x: usize) -> i8 {
        if self.over_from_b[x] {
            -1
        } else {
            1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|x| self.sign(x) as i64).sum()
    }

    pub fn positive_crossings(&self) -> usize {
        (0..self.crossing_count()).filter(|&x| self.sign(x) > 0).count()
    }

    /// For each edge in traversal order, whether it runs into an
    /// over-passage.
    pub fn passages(&self) -> Vec<bool> {
        self.ends.iter().map(|[_, (_, s)]| s % 2 == 1).collect()
    }

    /// Over and under passages strictly alternate along the knot.
    pub fn is_alternating(&self) -> bool {
        let p = self.passages();
        (0..p.len()).all(|k| p[k] != p[(k + 1) % p.len()])
    }

    /// Crossings touched twice by the same face. A diagram without them is
    /// reduced.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let f = faces(self);
        (0..self.crossing_count())
            .filter(|&x| {
                let q = f.quadrants(x);
                q[0] == q[2] || q[1] == q[3]
            })
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    /// Mirror image: every crossing switched, planar map unchanged.
    pub fn mirror(&self) -> KnotDiagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let tuples: Vec<[u64; 4]> = self
            .crossings
            .iter()
            .zip(&self.over_from_b)
            .map(|(&[a, b, c, d], &from_b)| {
                let t = if from_b { [b, c, d, a] } else { [d, a, b, c] };
                t.map(u64::from)
            })
            .collect();
        Self::from_pd(&tuples).expect("mirror of a valid diagram is valid")
    }

    /// Same diagram with the orientation reversed. Crossing order is kept.
    pub fn reverse(&self) -> KnotDiagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let tuples: Vec<[u64; 4]> = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| [c, d, a, b].map(u64::from))
            .collect();
        Self::from_pd(&tuples).expect("reverse of a valid diagram is valid")
    }

    /// PD text, `unknot` for the crossingless diagram.
    pub fn to_pd_string(&self) -> String {
        pd::serialize(self)
    }
}

impl fmt::Debug for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KnotDiagram({})", self.to_pd_string())
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

impl std::str::FromStr for KnotDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_pd(s)
    }
}
