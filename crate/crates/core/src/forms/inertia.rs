use std::ops::Add;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SymIntMatrix;

/// Sylvester inertia of a symmetric form.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia {
            positive,
            negative,
            zero,
        }
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(
            self.positive + rhs.positive,
            self.negative + rhs.negative,
            self.zero + rhs.zero,
        )
    }
}

/// Exact inertia by rational congruence diagonalization.
///
/// Pivots on the first nonzero diagonal entry of the active block. When the
/// active diagonal vanishes but some off-diagonal entry `m` does not, the
/// pair spans a hyperbolic plane `[[0, m], [m, 0]]` which contributes one
/// positive and one negative direction and is split off as a 2x2 block.
///
/// Runs in `i128` rationals first and falls back to arbitrary precision if
/// any intermediate overflows.
pub fn inertia(m: &SymIntMatrix) -> Inertia {
    diagonalize::<Ratio<i128>>(m).unwrap_or_else(|| {
        diagonalize::<BigRational>(m).expect("arbitrary precision elimination cannot overflow")
    })
}

trait Exact: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    /// `a - b * c / d`
    fn sub_mul_div(&self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    /// `a - (b1 * c1 + b2 * c2) / d`
    fn sub_dot2_div(&self, b1: &Self, c1: &Self, b2: &Self, c2: &Self, d: &Self) -> Option<Self>;
}

impl Exact for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn sub_mul_div(&self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        self.checked_sub(&b.checked_mul(c)?.checked_div(d)?)
    }

    fn sub_dot2_div(&self, b1: &Self, c1: &Self, b2: &Self, c2: &Self, d: &Self) -> Option<Self> {
        let dot = b1.checked_mul(c1)?.checked_add(&b2.checked_mul(c2)?)?;
        self.checked_sub(&dot.checked_div(d)?)
    }
}

impl Exact for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }

    fn sub_mul_div(&self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(self - b * c / d)
    }

    fn sub_dot2_div(&self, b1: &Self, c1: &Self, b2: &Self, c2: &Self, d: &Self) -> Option<Self> {
        Some(self - (b1 * c1 + b2 * c2) / d)
    }
}

fn diagonalize<T: Exact>(m: &SymIntMatrix) -> Option<Inertia> {
    let n = m.dim();
    let mut a: Vec<T> = (0..n * n)
        .map(|k| T::from_i64(m.get(k / n, k % n)))
        .collect();
    let at = |i: usize, j: usize| i * n + j;

    let mut active: Vec<usize> = (0..n).collect();
    let (mut positive, mut negative) = (0, 0);

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&k| !a[at(k, k)].is_zero()) {
            let k = active.remove(pos);
            let p = a[at(k, k)].clone();
            if p.is_positive() {
                positive += 1;
            } else {
                negative += 1;
            }
            for &i in &active {
                let f = a[at(i, k)].clone();
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    let akj = &a[at(k, j)];
                    if akj.is_zero() {
                        continue;
                    }
                    a[at(i, j)] = a[at(i, j)].sub_mul_div(&f, akj, &p)?;
                }
            }
            continue;
        }

        // Active diagonal is zero: split off a hyperbolic pair if one exists.
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[at(i, j)].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else { break };
        active.retain(|&k| k != i && k != j);
        positive += 1;
        negative += 1;

        let mij = a[at(i, j)].clone();
        for &k in &active {
            for &l in &active {
                let (kj, il, ki, jl) = (&a[at(k, j)], &a[at(i, l)], &a[at(k, i)], &a[at(j, l)]);
                if (kj.is_zero() || il.is_zero()) && (ki.is_zero() || jl.is_zero()) {
                    continue;
                }
                a[at(k, l)] = a[at(k, l)].sub_dot2_div(kj, il, ki, jl, &mij)?;
            }
        }
    }

    Some(Inertia::new(positive, negative, n - positive - negative))
}
