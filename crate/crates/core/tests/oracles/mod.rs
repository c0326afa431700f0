//! Slow, independent reference computations used to check the library.
#![allow(dead_code)]

use knotform::diagram::Braid;
use knotform::{IntMatrix, KnotDiagram, SymIntMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut total = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let term = m[0][j] as i128 * cofactor_det(&minor);
        total += if j % 2 == 0 { term } else { -term };
    }
    total
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1)
        .into_iter()
        .map(|mut s| {
            s.push(n - 1);
            s
        })
        .collect();
    with.extend(subsets(n - 1, k));
    with
}

/// Smith invariants from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors and the invariants are `d_k / d_{k-1}`.
pub fn smith_by_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut divisors = vec![1i128];
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = gcd(g, cofactor_det(&minor));
            }
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| if divisors[k] == 0 { 0 } else { divisors[k] / divisors[k - 1] })
        .collect()
}

/// Characteristic polynomial `det(tI − M)` by Faddeev–LeVerrier; coefficient
/// `k` multiplies `t^k`.
pub fn charpoly(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for l in 0..n {
                    s += a[i][l] * mk[l][j];
                }
                next[i][j] = s + if i == j { coeffs[n - k + 1] } else { 0 };
            }
        }
        mk = next;
        let mut trace = 0;
        for i in 0..n {
            for l in 0..n {
                trace += a[i][l] * mk[l][i];
            }
        }
        coeffs[n - k] = -trace / k as i128;
    }
    coeffs
}

fn sign_changes(c: &[i128]) -> usize {
    let signs: Vec<i128> = c.iter().filter(|&&v| v != 0).map(|v| v.signum()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of a symmetric matrix by Descartes' rule on its characteristic
/// polynomial, exact because every root is real.
pub fn charpoly_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let p = charpoly(m);
    let zero = p.iter().take_while(|&&c| c == 0).count();
    let reflected: Vec<i128> = p.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { -c } else { c }).collect();
    (sign_changes(&p), sign_changes(&reflected), zero)
}

/// Arf invariant from the determinant: 0 exactly when `det ≡ ±1 (mod 8)`.
pub fn arf_from_det(det: u64) -> u8 {
    match det % 8 {
        1 | 7 => 0,
        _ => 1,
    }
}

/// Signature of `[[l, m], [m, n]]` from its determinant and trace.
pub fn binary_signature(l: i64, m: i64, n: i64) -> i64 {
    let det = l * n - m * m;
    let trace = l + n;
    match det.signum() {
        -1 => 0,
        1 => 2 * trace.signum(),
        _ => trace.signum(),
    }
}

/// Random unimodular matrix as a product of elementary operations.
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        match rng.random_range(0..3) {
            0 if n > 1 => {
                let mut j = rng.random_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let c = rng.random_range(-2..=2);
                for r in 0..n {
                    let v = u.get(r, i) + c * u.get(r, j);
                    u.set(r, i, v);
                }
            }
            1 => {
                for r in 0..n {
                    let v = -u.get(r, i);
                    u.set(r, i, v);
                }
            }
            _ if n > 1 => {
                let j = (i + 1) % n;
                for r in 0..n {
                    let (a, b) = (u.get(r, i), u.get(r, j));
                    u.set(r, i, b);
                    u.set(r, j, a);
                }
            }
            _ => {}
        }
    }
    u
}

pub fn rows(m: &SymIntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
}

pub const SEVEN_SIX_PD: &str =
    "X(8,2,9,1) X(2,10,3,9) X(10,13,11,14) X(14,4,1,3) X(6,12,7,11) X(4,7,5,8) X(12,6,13,5)";
pub const SEVEN_SIX_BRAID: &str = "1 1 -2 1 3 -2 3";
pub const LEFT_TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

/// Braid words whose closures are knots, used across the suites.
pub const BRAIDS: &[&str] = &[
    "1 1 1",
    "1 1 1 1 1",
    "1 1 1 1 1 1 1",
    "1 1 1 1 1 1 1 1 1",
    "1 -2 1 -2",
    "1 1 -2 1 3 -2 3",
    "1 2 1 2 1 2 1 2",
    "1 1 1 2 2 2",
    "1 -2 3 1 -2 3 -2",
    "1",
    "1 2",
    "1 -2 -2 -2 1 1",
];

/// Seeded random braid words with knotted closures.
pub fn random_knot_braids(count: usize, seed: u64) -> Vec<Braid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.random_range(2..6usize);
        let len = rng.random_range(1..13usize);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.random_range(1..n as i32);
                if rng.random_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let b = Braid::new(word, n).expect("letters in range");
        if b.components() == 1 {
            out.push(b);
        }
    }
    out
}

/// Named diagrams: the bundled table, fixed braids, a PD trefoil, mirrors,
/// and seeded random braid closures.
pub fn corpus() -> Vec<(String, KnotDiagram, Option<Braid>)> {
    let mut out = Vec::new();
    for e in knotform::table::bundled_table() {
        if let Some(pd) = &e.pd {
            out.push((format!("{} (pd)", e.name), KnotDiagram::parse_pd(pd).unwrap(), None));
        }
        if let Some(b) = e.braid().unwrap() {
            out.push((format!("{} (braid)", e.name), b.to_diagram().unwrap(), Some(b)));
        }
    }
    for w in BRAIDS {
        let b = Braid::parse(w, None).unwrap();
        out.push((format!("braid {w}"), b.to_diagram().unwrap(), Some(b)));
    }
    out.push(("left trefoil (pd)".into(), KnotDiagram::parse_pd(LEFT_TREFOIL_PD).unwrap(), None));
    for b in random_knot_braids(40, 11) {
        out.push((format!("random braid {b} on {}", b.strands()), b.to_diagram().unwrap(), Some(b)));
    }
    let mirrors: Vec<_> = out
        .iter()
        .map(|(name, d, _)| (format!("mirror of {name}"), d.mirror(), None))
        .collect();
    out.extend(mirrors);
    out
}
