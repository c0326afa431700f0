//! Seifert matrices of braid closures, their symmetrized signature and the
//! Arf invariant.
//!
//! Seifert's algorithm on a closed braid gives one disc per strand and one
//! twisted band per letter. Between two consecutive bands in the same column
//! sits a cycle running down one band and back up the next; these cycles
//! form a basis of `H_1`. Entry `(i, j)` is `lk(α_i, α_j⁺)`.

use serde::{Deserialize, Serialize};

use crate::diagram::Braid;
use crate::error::{Error, Result};
use crate::forms::{IntMatrix, SymIntMatrix};

/// Largest rank accepted by [`arf`], which enumerates all `2^rank` classes.
pub const ARF_RANK_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    a: IntMatrix,
    discs: usize,
    bands: usize,
}

impl SeifertMatrix {
    /// Wraps a square matrix. The disc-band data is set to a single disc with
    /// `dim` bands, which has the right first Betti number.
    pub fn from_matrix(a: IntMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Ragged);
        }
        let bands = a.rows();
        Ok(SeifertMatrix { a, discs: 1, bands })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    /// `(discs, bands, β₁ = bands − discs + 1)`.
    pub fn genus_data(&self) -> (usize, usize, usize) {
        (self.discs, self.bands, self.bands + 1 - self.discs)
    }

    /// `A + Aᵀ`.
    pub fn symmetrized(&self) -> SymIntMatrix {
        SymIntMatrix::try_from(self.a.add(&self.a.transpose())).expect("A + Aᵀ is symmetric")
    }

    /// `A − Aᵀ`.
    pub fn antisymmetrized(&self) -> IntMatrix {
        self.a.sub(&self.a.transpose())
    }
}

struct Cycle {
    column: usize,
    lower: usize,
    upper: usize,
}

/// Seifert matrix of the closure of `braid`.
pub fn seifert_matrix_from_braid(braid: &Braid) -> Result<SeifertMatrix> {
    let components = braid.components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let n = braid.strands();
    let word = braid.word();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n.saturating_sub(1)];
    for (pos, &letter) in word.iter().enumerate() {
        columns[letter.unsigned_abs() as usize - 1].push(pos);
    }
    if let Some(missing) = columns.iter().position(|c| c.is_empty()) {
        return Err(Error::DisconnectedSurface(missing + 1));
    }

    let mut cycles = Vec::new();
    for (column, positions) in columns.iter().enumerate() {
        for pair in positions.windows(2) {
            cycles.push(Cycle {
                column,
                lower: pair[0],
                upper: pair[1],
            });
        }
    }

    let sign = |pos: usize| word[pos].signum() as i64;
    let dim = cycles.len();
    let mut a = IntMatrix::zeros(dim, dim);
    for (k, c) in cycles.iter().enumerate() {
        a.set(k, k, -(sign(c.lower) + sign(c.upper)) / 2);
        // The next cycle in the same column shares this cycle's upper band.
        if k + 1 < dim && cycles[k + 1].column == c.column {
            if sign(c.upper) > 0 {
                a.set(k, k + 1, 1);
            } else {
                a.set(k + 1, k, -1);
            }
        }
    }
    // Cycles in neighbouring columns link when their band heights interleave.
    for (k, c) in cycles.iter().enumerate() {
        for (l, e) in cycles.iter().enumerate() {
            if e.column != c.column + 1 {
                continue;
            }
            if c.lower < e.lower && e.lower < c.upper && c.upper < e.upper {
                a.set(k, l, -1);
            } else if e.lower < c.lower && c.lower < e.upper && e.upper < c.upper {
                a.set(k, l, 1);
            }
        }
    }

    Ok(SeifertMatrix {
        a,
        discs: n,
        bands: word.len(),
    })
}

/// Signature of `A + Aᵀ`.
pub fn symmetrized_signature(s: &SeifertMatrix) -> i64 {
    s.symmetrized().signature()
}

/// Arf invariant of `q(x) = xᵀAx mod 2`: 0 when `q` vanishes on a strict
/// majority of `H_1(F; Z/2)`.
pub fn arf(s: &SeifertMatrix) -> Result<u8> {
    let rank = s.dim();
    if rank > ARF_RANK_LIMIT {
        return Err(Error::TooLarge {
            rank,
            limit: ARF_RANK_LIMIT,
        });
    }
    let a = s.matrix();
    let diag: Vec<u32> = (0..rank).map(|i| (a.get(i, i) & 1) as u32).collect();
    let cross: Vec<u32> = (0..rank)
        .map(|i| {
            (0..rank)
                .filter(|&j| j != i && (a.get(i, j) + a.get(j, i)) & 1 == 1)
                .fold(0u32, |m, j| m | (1 << j))
        })
        .collect();

    // Walk all vectors in Gray-code order, updating q one bit flip at a time.
    let mut x: u32 = 0;
    let mut q: u32 = 0;
    let mut zeros: u64 = 1;
    for step in 1..(1u64 << rank) {
        let k = step.trailing_zeros() as usize;
        q ^= diag[k] ^ ((cross[k] & x).count_ones() & 1);
        x ^= 1 << k;
        zeros += (q == 0) as u64;
    }
    let total = 1u64 << rank;
    Ok(if 2 * zeros > total { 0 } else { 1 })
}
