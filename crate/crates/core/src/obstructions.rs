//! Bounds and obstructions computed from signature, Arf invariant and
//! determinant.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::forms::SymIntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    NotObstructed,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReportInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arf: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub definiteness: Option<Definiteness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub require_cyclic: Option<bool>,
}

/// A binary form `[[l, m], [m, n]]` offered as a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub l: i64,
    pub m: i64,
    pub n: i64,
}

impl Triple {
    pub fn new(l: i64, m: i64, n: i64) -> Self {
        Triple { l, m, n }
    }

    pub fn form(&self) -> SymIntMatrix {
        SymIntMatrix::from_upper(2, |i, j| match (i, j) {
            (0, 0) => self.l,
            (1, 1) => self.n,
            _ => self.m,
        })
    }

    /// `ln − m²`.
    pub fn determinant(&self) -> i64 {
        self.l * self.n - self.m * self.m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub test_name: String,
    pub inputs: ReportInputs,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Triple>,
}

/// `⌈|σ₁ − σ₂| / 2⌉`, a lower bound on the Gordian distance.
pub fn gordian_lower_bound(sigma1: i64, sigma2: i64) -> u64 {
    sigma1.abs_diff(sigma2).div_ceil(2)
}

/// `⌈|σ₁ − σ₂| / 6⌉`, a lower bound on the ♯-Gordian distance.
pub fn sharp_gordian_lower_bound(sigma1: i64, sigma2: i64) -> u64 {
    sigma1.abs_diff(sigma2).div_ceil(6)
}

/// `(σ + 4·Arf) mod 8` in `0..8`.
pub fn residue(sigma: i64, arf: u8) -> i64 {
    (sigma + 4 * arf as i64).rem_euclid(8)
}

/// A knot bounding a Möbius band in the 4-ball has `σ + 4·Arf ≡ 0, ±2 (mod 8)`.
pub fn moebius_b4_test(sigma: i64, arf: u8) -> ObstructionReport {
    let r = residue(sigma, arf);
    ObstructionReport {
        test_name: "moebius_b4".into(),
        inputs: ReportInputs {
            signature: Some(sigma),
            arf: Some(arf),
            ..Default::default()
        },
        verdict: verdict([0, 2, 6].contains(&r)),
        witnesses: Vec::new(),
    }
}

/// Residues allowed for a knot bounding a Klein bottle in the 4-ball whose
/// double branched cover has the given definite intersection form.
pub fn klein_bottle_test(sigma: i64, arf: u8, definiteness: Definiteness) -> ObstructionReport {
    let r = residue(sigma, arf);
    let allowed = match definiteness {
        Definiteness::Positive => [0, 2, 4],
        Definiteness::Negative => [0, 4, 6],
    };
    ObstructionReport {
        test_name: "klein_bottle".into(),
        inputs: ReportInputs {
            signature: Some(sigma),
            arf: Some(arf),
            definiteness: Some(definiteness),
            ..Default::default()
        },
        verdict: verdict(allowed.contains(&r)),
        witnesses: Vec::new(),
    }
}

fn verdict(allowed: bool) -> Verdict {
    if allowed {
        Verdict::NotObstructed
    } else {
        Verdict::Obstructed
    }
}

/// Binary forms `[[l, m], [m, n]]` with `|l|, |m|, |n| ≤ bound`, `l` and `n`
/// odd, `m` even, `|ln − m²| = det` and `sign − (l + 2m + n) = σ`. Triples
/// equal up to swapping `l` and `n` are listed once, with `l ≤ n`.
pub fn crosscap2_candidates(sigma: i64, det: u64, bound: i64, require_cyclic: bool) -> Vec<Triple> {
    let mut out = Vec::new();
    let odd = |v: &i64| v.rem_euclid(2) == 1;
    for l in (-bound..=bound).filter(odd) {
        for n in (l..=bound).filter(odd) {
            for m in (-bound..=bound).filter(|v| v % 2 == 0) {
                let t = Triple::new(l, m, n);
                if t.determinant().unsigned_abs() != det {
                    continue;
                }
                if require_cyclic && l.gcd(&m).gcd(&n) != 1 {
                    continue;
                }
                if t.form().signature() - (l + 2 * m + n) == sigma {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// The crosscap-2 search as a report: witnesses mean the stated conditions
/// can be met; an empty search radius result is inconclusive.
pub fn crosscap2_report(sigma: i64, det: u64, bound: i64, require_cyclic: bool) -> ObstructionReport {
    let witnesses = crosscap2_candidates(sigma, det, bound, require_cyclic);
    ObstructionReport {
        test_name: "crosscap2".into(),
        inputs: ReportInputs {
            signature: Some(sigma),
            determinant: Some(det),
            bound: Some(bound),
            require_cyclic: Some(require_cyclic),
            ..Default::default()
        },
        verdict: if witnesses.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::NotObstructed
        },
        witnesses,
    }
}

/// Lower bound on the Turaev genus from `τ`, `s` and `σ`:
/// the largest of `|τ + σ/2|`, `|s + σ|/2`, `|τ − s/2|`, rounded up.
pub fn turaev_lower_bound(tau: i64, s: i64, sigma: i64) -> u64 {
    // Work with doubled values so that half-integers stay exact.
    [(2 * tau + sigma).abs(), (s + sigma).abs(), (2 * tau - s).abs()]
        .into_iter()
        .map(|twice| (twice as u64).div_ceil(2))
        .max()
        .unwrap_or(0)
}
