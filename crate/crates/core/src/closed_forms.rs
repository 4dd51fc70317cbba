//! Closed-form spanning-tree counts for wheels and for cones over Möbius
//! ladders and prisms, and the wheel Jacobian.
//!
//! Chebyshev values at half-integers enter only through the integer
//! sequence `a_n = 2 T_n(x/2)`, so everything stays in `Z`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::AbelianGroup;

/// `2 T_n(x/2)`: `a_0 = 2`, `a_1 = x`, `a_n = x a_{n-1} - a_{n-2}`.
pub fn cheb2(x: i64, n: usize) -> BigInt {
    let x = BigInt::from(x);
    let (mut prev, mut cur) = (BigInt::from(2), x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: usize) -> BigInt {
    linear_two_term(BigInt::zero(), BigInt::one(), n)
}

/// `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: usize) -> BigInt {
    linear_two_term(BigInt::from(2), BigInt::one(), n)
}

fn linear_two_term(a0: BigInt, a1: BigInt, n: usize) -> BigInt {
    let (mut a, mut b) = (a0, a1);
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

fn require(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::Domain {
            what,
            n: n as u64,
            min: min as u64,
        })
    } else {
        Ok(())
    }
}

/// Spanning trees of the wheel `W(n)`: `2 T_n(3/2) - 2`.
pub fn wheel_tree_count(n: usize) -> Result<BigInt> {
    require("wheel", n, 3)?;
    Ok(cheb2(3, n) - 2)
}

/// `Z_{F_n} + Z_{5 F_n}` for even `n`, `Z_{L_n} + Z_{L_n}` for odd `n`.
pub fn wheel_jacobian(n: usize) -> Result<AbelianGroup> {
    require("wheel", n, 3)?;
    let orders = if n.is_multiple_of(2) {
        let f = fibonacci(n);
        vec![f.clone(), f * 5]
    } else {
        vec![lucas(n), lucas(n)]
    };
    Ok(AbelianGroup::from_cyclic_orders(&orders))
}

/// Spanning trees of the cone over the Möbius ladder `M(n)`:
/// `4 (T_n(3/2) - 1)(T_n(5/2) + 1) = (a_n - 2)(b_n + 2)`.
pub fn mobius_cone_tree_count(n: usize) -> Result<BigInt> {
    require("mobius-cone", n, 2)?;
    Ok((cheb2(3, n) - 2) * (cheb2(5, n) + 2))
}

/// Spanning trees of the cone over the prism `Pr(n)`:
/// `4 (T_n(3/2) - 1)(T_n(5/2) - 1) = (a_n - 2)(b_n - 2)`.
pub fn prism_cone_tree_count(n: usize) -> Result<BigInt> {
    require("prism-cone", n, 3)?;
    Ok((cheb2(3, n) - 2) * (cheb2(5, n) - 2))
}
