//! Band presentations of spanning surfaces, their linking matrices, and the
//! S*-moves acting on (form, Euler number) pairs.
//!
//! A band surface is one disc with bands attached. Doubling the surface and
//! pushing it into the 4-ball turns each band core into a framed knot; the
//! linking matrix of that framed link is the Gordon–Litherland form of the
//! surface in the band-core basis.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{classify_crossings, Coloring, KnotDiagram, Shade};
use crate::error::{Error, Result};
use crate::forms::SymIntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BandSurface {
    /// Signed half-twist count of each band, right-handed positive.
    pub half_twists: Vec<i64>,
    /// Signed crossings between bands `(i, j)` with `i <= j`; `(i, i)` lists
    /// a band crossing itself. Curls belong in `half_twists`, two per curl.
    pub crossings: BTreeMap<(usize, usize), Vec<i8>>,
}

impl BandSurface {
    pub fn new(half_twists: Vec<i64>) -> Self {
        BandSurface {
            half_twists,
            crossings: BTreeMap::new(),
        }
    }

    pub fn band_count(&self) -> usize {
        self.half_twists.len()
    }

    /// Records a crossing of sign `sign` between bands `i` and `j`.
    pub fn add_crossing(&mut self, i: usize, j: usize, sign: i8) {
        let key = (i.min(j), i.max(j));
        self.crossings.entry(key).or_default().push(sign);
    }

    /// Parses `bands: m1 m2 ...` followed by `cross(i,j): ±1 ±1 ...` entries
    /// (1-based bands), separated by newlines or `;`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut surface: Option<BandSurface> = None;
        let mut offset = 0;
        for raw in text.split(['\n', ';']) {
            let start = offset;
            offset += raw.len() + 1;
            let lead = raw.len() - raw.trim_start().len();
            let entry = raw.trim();
            if entry.is_empty() || entry.starts_with('#') {
                continue;
            }
            let at = start + lead;
            let Some((head, body)) = entry.split_once(':') else {
                return Err(Error::parse(text, at, "expected `bands:` or `cross(i,j):`"));
            };
            let body_at = at + head.len() + 1;
            let numbers = parse_integers(text, body, body_at)?;
            let head = head.trim();
            if head == "bands" {
                if surface.is_some() {
                    return Err(Error::parse(text, at, "`bands:` given twice"));
                }
                surface = Some(BandSurface::new(numbers));
                continue;
            }
            let Some(s) = surface.as_mut() else {
                return Err(Error::parse(text, at, "`bands:` must come first"));
            };
            let (i, j) = parse_pair(text, head, at)?;
            let count = s.band_count();
            if i == 0 || j == 0 || i > count || j > count {
                return Err(Error::parse(
                    text,
                    at,
                    format!("band index out of range 1..={count}"),
                ));
            }
            for n in numbers {
                if n != 1 && n != -1 {
                    return Err(Error::parse(text, body_at, "crossing signs must be +1 or -1"));
                }
                s.add_crossing(i - 1, j - 1, n as i8);
            }
        }
        surface.ok_or_else(|| Error::parse(text, text.len(), "missing `bands:` line"))
    }
}

fn parse_integers(text: &str, body: &str, at: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut cursor = 0;
    for token in body.split_whitespace() {
        let rel = body[cursor..].find(token).map_or(cursor, |i| cursor + i);
        cursor = rel + token.len();
        let value = token
            .trim_start_matches('+')
            .parse()
            .map_err(|_| Error::parse(text, at + rel, format!("`{token}` is not an integer")))?;
        out.push(value);
    }
    Ok(out)
}

fn parse_pair(text: &str, head: &str, at: usize) -> Result<(usize, usize)> {
    let bad = || Error::parse(text, at, "expected `cross(i,j)`");
    let inner = head
        .strip_prefix("cross(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (i, j) = inner.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

impl fmt::Display for BandSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bands:")?;
        for m in &self.half_twists {
            write!(f, " {m}")?;
        }
        for (&(i, j), signs) in &self.crossings {
            write!(f, "\ncross({},{}):", i + 1, j + 1)?;
            for s in signs {
                write!(f, " {s}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for BandSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Linking matrix of the doubled band cores: half-twists plus twice the
/// self-crossings on the diagonal, summed crossing signs off it.
pub fn linking_matrix(s: &BandSurface) -> SymIntMatrix {
    let n = s.band_count();
    let mut m = SymIntMatrix::zeros(n);
    for (i, &t) in s.half_twists.iter().enumerate() {
        m.add_sym(i, i, t);
    }
    for (&(i, j), signs) in &s.crossings {
        let total: i64 = signs.iter().map(|&x| x as i64).sum();
        if i == j {
            m.add_sym(i, i, 2 * total);
        } else {
            m.add_sym(i, j, total);
        }
    }
    m
}

/// Band presentation of the black surface of `col`.
///
/// Black regions are discs joined by a half-twisted band at each crossing. A
/// spanning tree of the black adjacency graph merges all discs into one; each
/// remaining crossing then carries a band whose core runs around the
/// fundamental cycle it closes. The core of band `e` passes every crossing on
/// its cycle, picking up that crossing's half-twist, and two cores cross
/// wherever their cycles share a crossing.
pub fn black_surface_bands(d: &KnotDiagram, col: &Coloring) -> BandSurface {
    let eta = classify_crossings(d, col).eta;
    let black = col.black_regions();
    let n = d.crossing_count();
    let index_of = |face: usize| col.black_index(face).expect("black quadrant");

    // Edge x joins the black faces in its two black quadrants.
    let ends: Vec<(usize, usize)> = (0..n)
        .map(|x| {
            let q = col.faces().quadrants(x);
            let (a, b) = if col.shade(q[0]) == Shade::Black {
                (q[0], q[2])
            } else {
                (q[1], q[3])
            };
            (index_of(a), index_of(b))
        })
        .collect();

    let mut adjacency = vec![Vec::new(); black.len()];
    for (x, &(a, b)) in ends.iter().enumerate() {
        adjacency[a].push(x);
        adjacency[b].push(x);
    }
    let mut parent: Vec<Option<usize>> = vec![None; black.len()];
    let mut depth = vec![usize::MAX; black.len()];
    let mut in_tree = vec![false; n];
    if !black.is_empty() {
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &x in &adjacency[v] {
                let (a, b) = ends[x];
                let w = if a == v { b } else { a };
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(x);
                    in_tree[x] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    // Signed passage of each fundamental cycle through every crossing.
    let step_up = |v: usize| -> (usize, usize, i64) {
        let x = parent[v].expect("non-root vertex has a parent");
        let (a, b) = ends[x];
        let up = if a == v { b } else { a };
        // Traversing a -> b counts positively.
        (x, up, if a == v { 1 } else { -1 })
    };
    let cycles: Vec<BTreeMap<usize, i64>> = (0..n)
        .filter(|&x| !in_tree[x])
        .map(|e| {
            let mut pass = BTreeMap::new();
            let (u, v) = ends[e];
            pass.insert(e, 1);
            // From v back to u through the tree.
            let (mut p, mut q) = (v, u);
            let mut tail = Vec::new();
            while p != q {
                if depth[p] >= depth[q] {
                    let (x, up, s) = step_up(p);
                    *pass.entry(x).or_insert(0) += s;
                    p = up;
                } else {
                    let (x, up, s) = step_up(q);
                    tail.push((x, -s));
                    q = up;
                }
            }
            for (x, s) in tail {
                *pass.entry(x).or_insert(0) += s;
            }
            pass.retain(|_, s| *s != 0);
            pass
        })
        .collect();

    let mut surface = BandSurface::new(
        cycles
            .iter()
            .map(|c| c.iter().map(|(&x, &p)| eta[x] as i64 * p * p).sum())
            .collect(),
    );
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            for (&x, &p) in &cycles[i] {
                if let Some(&r) = cycles[j].get(&x) {
                    surface.add_crossing(i, j, (eta[x] as i64 * p * r) as i8);
                }
            }
        }
    }
    surface
}

/// Euler number `−2μ` of the black surface of `col`.
pub fn euler_checkerboard(d: &KnotDiagram, col: &Coloring) -> i64 {
    -2 * classify_crossings(d, col).mu()
}

/// A spanning surface seen through its Gordon–Litherland form and Euler
/// number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawState", into = "RawState")]
pub struct SurfaceState {
    matrix: SymIntMatrix,
    euler: i64,
}

#[derive(Serialize, Deserialize)]
struct RawState {
    matrix: SymIntMatrix,
    euler: i64,
}

impl TryFrom<RawState> for SurfaceState {
    type Error = Error;

    fn try_from(raw: RawState) -> Result<Self> {
        SurfaceState::new(raw.matrix, raw.euler)
    }
}

impl From<SurfaceState> for RawState {
    fn from(s: SurfaceState) -> Self {
        RawState {
            matrix: s.matrix,
            euler: s.euler,
        }
    }
}

impl SurfaceState {
    pub fn new(matrix: SymIntMatrix, euler: i64) -> Result<Self> {
        if euler % 2 != 0 {
            return Err(Error::OddEuler(euler));
        }
        Ok(SurfaceState { matrix, euler })
    }

    pub fn empty() -> Self {
        SurfaceState {
            matrix: SymIntMatrix::zeros(0),
            euler: 0,
        }
    }

    /// Black surface of `col`: its band linking matrix and `e = −2μ`.
    pub fn checkerboard(d: &KnotDiagram, col: &Coloring) -> Self {
        SurfaceState {
            matrix: linking_matrix(&black_surface_bands(d, col)),
            euler: euler_checkerboard(d, col),
        }
    }

    pub fn matrix(&self) -> &SymIntMatrix {
        &self.matrix
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    /// `σ + e/2`, unchanged by S*-moves.
    pub fn conserved(&self) -> i64 {
        self.matrix.signature() + self.euler / 2
    }

    /// Adds a band with one half-twist of the given sign: `G ⊕ [±1]`.
    pub fn half_twist_move(&self, sign: i8) -> SurfaceState {
        let sign = sign.signum() as i64;
        SurfaceState {
            matrix: self.matrix.direct_sum(&SymIntMatrix::from_upper(1, |_, _| sign)),
            euler: self.euler - 2 * sign,
        }
    }

    /// Adds a tube: two new rows and columns `(b, a, ±1)` and `(0, ±1, 0)`.
    pub fn tube_move(&self, b: &[i64], a: i64, sign: i8) -> Result<SurfaceState> {
        let n = self.matrix.dim();
        if b.len() != n {
            return Err(Error::BadVector {
                expected: n,
                got: b.len(),
            });
        }
        let sign = sign.signum() as i64;
        let matrix = SymIntMatrix::from_upper(n + 2, |i, j| match (i, j) {
            _ if j < n => self.matrix.get(i, j),
            (i, j) if i < n && j == n => b[i],
            (_, j) if j == n + 1 && i < n => 0,
            (i, j) if i == n && j == n => a,
            (i, _) if i == n => sign,
            _ => 0,
        });
        Ok(SurfaceState {
            matrix,
            euler: self.euler,
        })
    }

    /// Undoes a trailing half-twist block, if there is one.
    pub fn remove_half_twist(&self) -> Option<SurfaceState> {
        let n = self.matrix.dim();
        let last = n.checked_sub(1)?;
        let s = self.matrix.get(last, last);
        if s.abs() != 1 || (0..last).any(|j| self.matrix.get(last, j) != 0) {
            return None;
        }
        Some(SurfaceState {
            matrix: self.matrix.leading(last),
            euler: self.euler + 2 * s,
        })
    }

    /// Undoes a trailing tube block, if there is one.
    pub fn remove_tube(&self) -> Option<SurfaceState> {
        let n = self.matrix.dim();
        if n < 2 {
            return None;
        }
        let last = n - 1;
        let row_ok = (0..last - 1).all(|j| self.matrix.get(last, j) == 0)
            && self.matrix.get(last, last) == 0
            && self.matrix.get(last, last - 1).abs() == 1;
        row_ok.then(|| SurfaceState {
            matrix: self.matrix.leading(n - 2),
            euler: self.euler,
        })
    }
}

/// One step of a random S*-walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum SStarMove {
    HalfTwist { sign: i8 },
    Tube { b: Vec<i64>, a: i64, sign: i8 },
    RemoveHalfTwist,
    RemoveTube,
}

/// Record of a walk: every move, and `σ + e/2` after each one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkTrace {
    pub start: i64,
    pub moves: Vec<SStarMove>,
    pub conserved: Vec<i64>,
    pub end: SurfaceState,
}

impl WalkTrace {
    /// Whether `σ + e/2` never left its starting value.
    pub fn is_constant(&self) -> bool {
        self.conserved.iter().all(|&c| c == self.start)
    }
}

/// Blocks the walk may add on top of the starting form before it starts
/// removing them again. Keeps every intermediate form small enough for an
/// exact signature at each step.
pub const WALK_EXTRA_DIM: usize = 16;

/// Applies `steps` random S*-moves drawn from a generator seeded by `seed`.
pub fn random_sstar_walk(st: &SurfaceState, steps: usize, seed: u64) -> SurfaceState {
    walk(st, steps, seed).end
}

/// Like [`random_sstar_walk`], recording each move and the conserved value
/// after it.
pub fn random_sstar_walk_trace(st: &SurfaceState, steps: usize, seed: u64) -> WalkTrace {
    walk(st, steps, seed)
}

fn walk(st: &SurfaceState, steps: usize, seed: u64) -> WalkTrace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = st.matrix.dim();
    let mut state = st.clone();
    let mut moves = Vec::with_capacity(steps);
    let mut conserved = Vec::with_capacity(steps);
    // Blocks added by this walk, innermost last.
    let mut added: Vec<SStarMove> = Vec::new();
    for _ in 0..steps {
        let grown = state.matrix.dim() - base;
        let remove = !added.is_empty()
            && (grown + 2 > WALK_EXTRA_DIM || rng.random_bool(0.5));
        let mv = if remove {
            match added.pop().expect("nonempty") {
                SStarMove::HalfTwist { .. } => {
                    state = state.remove_half_twist().expect("trailing half-twist block");
                    SStarMove::RemoveHalfTwist
                }
                _ => {
                    state = state.remove_tube().expect("trailing tube block");
                    SStarMove::RemoveTube
                }
            }
        } else if rng.random_bool(0.5) {
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            state = state.half_twist_move(sign);
            let mv = SStarMove::HalfTwist { sign };
            added.push(mv.clone());
            mv
        } else {
            let b: Vec<i64> = (0..state.matrix.dim()).map(|_| rng.random_range(-3..=3)).collect();
            let a = rng.random_range(-5..=5);
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            state = state.tube_move(&b, a, sign).expect("b matches the dimension");
            let mv = SStarMove::Tube { b, a, sign };
            added.push(mv.clone());
            mv
        };
        conserved.push(state.conserved());
        moves.push(mv);
    }
    WalkTrace {
        start: st.conserved(),
        moves,
        conserved,
        end: state,
    }
}
