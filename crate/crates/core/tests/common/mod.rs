//! Test-only ground truth and corpora, independent of the library's
//! elimination and Smith-form code paths.
#![allow(dead_code)]

use conejac::{IntMatrix, Multigraph};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * cofactor_det(&sub);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `δ_k`: gcd of all `k × k` minors, by brute force.
pub fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    let rows = m.to_rows();
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect())
                .collect();
            g = g.gcd(&cofactor_det(&sub));
        }
    }
    g
}

/// Invariant factors `d_k = δ_k / δ_{k-1}` (0 once the minors vanish).
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let r = m.rows().min(m.cols());
    let mut prev = BigInt::from(1);
    let mut out = Vec::with_capacity(r);
    for k in 1..=r {
        let delta = minor_gcd(m, k);
        if delta.is_zero() {
            out.resize(r, BigInt::zero());
            break;
        }
        let (q, rem) = delta.div_rem(&prev);
        assert!(rem.is_zero());
        out.push(q.abs());
        prev = delta;
    }
    out
}

/// Every connected simple graph on exactly `n` labeled vertices.
pub fn connected_graphs(n: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Multigraph::from_edge_list(n, &chosen).unwrap()
        })
        .filter(Multigraph::is_connected)
        .collect()
}

/// Random loopless multigraph on `n` vertices with `m` edges.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> Multigraph {
    let mut g = Multigraph::empty(n);
    if n < 2 {
        return g;
    }
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        g.add_edge(u, v).unwrap();
    }
    g
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::from_vec(rows, cols, data).unwrap()
}

/// Random unimodular matrix as a product of elementary integer operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n < 2 {
        if rng.gen_bool(0.5) {
            u = u.neg();
        }
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => {
                let c = BigInt::from(rng.gen_range(-3..=3));
                for col in 0..n {
                    let add = &u[(j, col)] * &c;
                    u[(i, col)] += add;
                }
            }
            1 => {
                for col in 0..n {
                    let (a, b) = (u[(i, col)].clone(), u[(j, col)].clone());
                    u[(i, col)] = b;
                    u[(j, col)] = a;
                }
            }
            _ => {
                for col in 0..n {
                    u[(i, col)] = -&u[(i, col)];
                }
            }
        }
    }
    u
}
