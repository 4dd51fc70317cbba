//! Graph invariants: spanning-tree count, rooted-spanning-forest count,
//! Jacobian and forest group, and their cone identities.
//!
//! The number of spanning trees of the cone over `G` equals the number of
//! rooted spanning forests of `G`, which is `det(I + L(G))` and also
//! `|χ_G(-1)|`. The Jacobian of the cone is the forest group
//! `coker(I + L(G))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::Result;
use crate::graph::Multigraph;
use crate::linalg::{cokernel, AbelianGroup, IntMatrix, IntPoly};

/// Spanning trees, as the determinant of the Laplacian with row and column
/// 0 removed. Zero exactly when `g` is disconnected.
pub fn tree_count(g: &Multigraph) -> BigInt {
    let n = g.n_vertices();
    if n == 0 {
        return BigInt::from(0);
    }
    g.laplacian()
        .minor(0, 0)
        .determinant()
        .expect("reduced Laplacian is square")
}

/// Spanning trees via `(-1)^(n-1)/n · χ'_G(0)`, where `χ'_G(0)` is the
/// linear coefficient of the Laplacian characteristic polynomial.
pub fn tree_count_via_charpoly(g: &Multigraph) -> BigInt {
    let n = g.n_vertices();
    if n == 0 {
        return BigInt::from(0);
    }
    let chi = laplacian_char_poly(g);
    let (q, r) = chi.coeff(1).div_rem(&BigInt::from(n));
    assert!(
        r == BigInt::from(0),
        "linear coefficient not divisible by n"
    );
    if n % 2 == 1 {
        q
    } else {
        -q
    }
}

/// `I + L(g)`.
pub fn forest_matrix(g: &Multigraph) -> IntMatrix {
    g.laplacian()
        .add_scalar_identity(&BigInt::one())
        .expect("Laplacian is square")
}

/// Rooted spanning forests, `det(I + L(g))`. Always at least 1.
pub fn forest_count(g: &Multigraph) -> BigInt {
    forest_matrix(g).determinant().expect("square")
}

/// Torsion part of `coker L(g)`. For a connected graph this is the
/// Jacobian (sandpile group) and its order is `tree_count(g)`.
pub fn jacobian(g: &Multigraph) -> AbelianGroup {
    laplacian_cokernel(g).torsion_part()
}

/// Full `coker L(g)`, including the free part (rank = number of components).
pub fn laplacian_cokernel(g: &Multigraph) -> AbelianGroup {
    cokernel(&g.laplacian())
}

/// Forest group `coker(I + L(g))`. Finite, of order `forest_count(g)`.
pub fn forest_group(g: &Multigraph) -> AbelianGroup {
    cokernel(&forest_matrix(g))
}

/// Spanning trees of `cone(g)`, computed without building the cone.
pub fn cone_tree_count(g: &Multigraph) -> BigInt {
    forest_count(g)
}

/// Spanning trees of `cone(g)` as `|χ_g(-1)|`.
pub fn cone_tree_count_via_charpoly(g: &Multigraph) -> BigInt {
    laplacian_char_poly(g).eval(&BigInt::from(-1)).abs()
}

/// Jacobian of `cone(g)`, computed as the forest group of `g`.
pub fn cone_jacobian(g: &Multigraph) -> AbelianGroup {
    forest_group(g)
}

pub fn laplacian_char_poly(g: &Multigraph) -> IntPoly {
    IntPoly::char_poly(&g.laplacian()).expect("Laplacian is square")
}

/// Laplacian characteristic polynomial of the join of a graph of order `m`
/// with Laplacian polynomial `chi1` and a graph of order `n` with `chi2`:
///
/// `x (x - n - m) χ₁(x - n) χ₂(x - m) / ((x - n)(x - m))`.
///
/// A nonzero remainder means the inputs were not Laplacian polynomials of
/// graphs of the stated orders.
pub fn joint_char_poly(chi1: &IntPoly, m: usize, chi2: &IntPoly, n: usize) -> Result<IntPoly> {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    let x = IntPoly::linear(&BigInt::from(0));
    let numerator = x
        .mul(&IntPoly::linear(&(&m + &n)))
        .mul(&chi1.shift(&n))
        .mul(&chi2.shift(&m));
    let denominator = IntPoly::linear(&n).mul(&IntPoly::linear(&m));
    numerator.div_exact(&denominator)
}
