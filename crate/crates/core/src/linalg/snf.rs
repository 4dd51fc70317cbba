use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::IntMatrix;

/// Finitely generated abelian group `Z_{d1} + ... + Z_{dk} + Z^r` in
/// invariant-factor form: every `d_i >= 2`, `d_i | d_{i+1}`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Canonical group from an SNF diagonal: zeros become free summands,
    /// units are dropped.
    fn from_snf_diagonal(diagonal: &[BigInt], rows: usize) -> Self {
        let nonzero = diagonal.iter().filter(|d| !d.is_zero()).count();
        let torsion: Vec<BigInt> = diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        debug_assert!(torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        AbelianGroup {
            torsion,
            free_rank: rows - nonzero,
        }
    }

    /// `Z_{o1} + Z_{o2} + ...` for arbitrary cyclic orders, brought into
    /// invariant-factor form. An order of 0 contributes a free summand.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, o) in orders.iter().enumerate() {
            m[(i, i)] = o.clone();
        }
        smith_normal_form(&m).group
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Group order; `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion_order())
    }

    /// Product of the torsion factors.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn torsion_part(&self) -> Self {
        AbelianGroup {
            torsion: self.torsion.clone(),
            free_rank: 0,
        }
    }
}

impl fmt::Display for AbelianGroup {
    /// `Z_3 + Z_15`, `Z_3 + Z^1`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Smith normal form diagonal together with the cokernel it describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` nonnegative entries forming a divisibility chain.
    pub diagonal: Vec<BigInt>,
    /// Cokernel of the matrix as a map `Z^cols -> Z^rows`.
    pub group: AbelianGroup,
}

/// Smith normal form by unimodular row and column operations.
///
/// The pivot is always the nonzero entry of least absolute value in the
/// active block. Its row and column are cleared by Euclidean steps; when the
/// pivot fails to divide some remaining entry, that entry's row is added to
/// the pivot row and reduction resumes with a strictly smaller pivot.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut a = m.to_rows();
    let rank_bound = rows.min(cols);
    let mut diagonal = Vec::with_capacity(rank_bound);

    for t in 0..rank_bound {
        let Some((pi, pj)) =
            min_abs_entry(&a, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        move_to_pivot(&mut a, t, pi, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, p) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                        *x -= &q * p;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a[t..].iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                let line = (t..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_abs_entry(&a, line).expect("pivot line is nonzero");
                move_to_pivot(&mut a, t, pi, pj);
                continue;
            }
            let offender =
                (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (p, x) in head[t][t..].iter_mut().zip(&tail[0][t..]) {
                        *p += x;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal.resize(rank_bound, BigInt::zero());

    let group = AbelianGroup::from_snf_diagonal(&diagonal, rows);
    SmithForm { diagonal, group }
}

/// Cokernel `Z^rows / im(m)` in canonical invariant-factor form.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    smith_normal_form(m).group
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let x = &a[i][j];
        if x.is_zero() {
            continue;
        }
        let mag = x.abs();
        if best.as_ref().is_none_or(|(_, b)| mag < *b) {
            let unit = mag.is_one();
            best = Some(((i, j), mag));
            if unit {
                break;
            }
        }
    }
    best.map(|(ij, _)| ij)
}

fn move_to_pivot(a: &mut [Vec<BigInt>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}
