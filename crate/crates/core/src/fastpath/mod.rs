//! Jacobians of cones over circulant graphs and over cobordisms of
//! circulant graphs, computed from small companion matrices.
//!
//! If `P` is a bimonic Laurent polynomial with companion matrix `A`, the
//! circulant operator `P(T_n)` on `Z^n` has the same cokernel as
//! `A^n - I`, whose size depends only on the span of `P`, not on `n`.

mod laurent;

use std::fmt;

use num_bigint::BigInt;

pub use laurent::LaurentPoly;

use crate::error::{Error, Result};
use crate::graph::{CirculantSpec, CobordismSpec};
use crate::linalg::{cokernel, AbelianGroup, IntMatrix};
use crate::parse::GraphSource;

/// Which companion-matrix reduction produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FastPath {
    /// Circulant with every jump below `n/2` (even valency).
    EvenValency,
    /// `C_{2n}(s_1, ..., s_k, n)`, the half jump giving odd valency.
    OddValency,
    /// Two circulant layers joined by a perfect matching.
    Cobordism,
}

impl FastPath {
    pub fn name(self) -> &'static str {
        match self {
            FastPath::EvenValency => "companion-even",
            FastPath::OddValency => "companion-odd",
            FastPath::Cobordism => "companion-cobordism",
        }
    }
}

impl fmt::Display for FastPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastPathGroup {
    pub group: AbelianGroup,
    pub path: FastPath,
    /// Side length of the companion matrix that was powered.
    pub companion_size: usize,
}

/// `coker(A^n - I)` for the companion matrix `A` of `p`.
pub fn prop1_cokernel(p: &LaurentPoly, n: usize) -> Result<AbelianGroup> {
    let a = p.companion()?;
    Ok(cokernel(&power_minus_identity(&a, n)?))
}

fn power_minus_identity(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    a.pow(n as i64)?.add_scalar_identity(&BigInt::from(-1))
}

/// `c - Σ_s (z^s + z^-s)`.
fn constant_minus_pairs(c: usize, jumps: &[usize]) -> LaurentPoly {
    jumps
        .iter()
        .fold(LaurentPoly::constant(c as i64), |acc, &s| {
            acc.sub(&LaurentPoly::symmetric_pair(s as i64))
        })
}

/// `2k + 1 - Σ (z^s + z^-s)`, sign-normalized to be bimonic.
pub fn laurent_from_jumps_even(jumps: &[usize]) -> LaurentPoly {
    constant_minus_pairs(2 * jumps.len() + 1, jumps).normalized()
}

/// `(2k + 2 - Σ (z^s + z^-s))^2 - 1`.
pub fn laurent_for_odd_valency(jumps: &[usize]) -> LaurentPoly {
    let b = constant_minus_pairs(2 * jumps.len() + 2, jumps);
    b.mul(&b).sub(&LaurentPoly::constant(1))
}

/// `(2k + 2 - Σ_1)(2l + 2 - Σ_2) - 1`.
pub fn laurent_for_cobordism(jumps1: &[usize], jumps2: &[usize]) -> LaurentPoly {
    let b1 = constant_minus_pairs(2 * jumps1.len() + 2, jumps1);
    let b2 = constant_minus_pairs(2 * jumps2.len() + 2, jumps2);
    b1.mul(&b2).sub(&LaurentPoly::constant(1))
}

fn require_jumps(jumps: &[usize], what: &str) -> Result<()> {
    if jumps.is_empty() {
        return Err(Error::InvalidCirculant(format!(
            "{what} needs at least one jump below n/2"
        )));
    }
    Ok(())
}

/// Jacobian of the cone over `C_n(s_1, ..., s_k)` with every `s < n/2`.
pub fn even_cone_jacobian(spec: &CirculantSpec) -> Result<AbelianGroup> {
    if spec.has_half_jump() {
        return Err(Error::InvalidCirculant(format!(
            "{spec} has a half jump; use the odd-valency path"
        )));
    }
    require_jumps(spec.jumps(), "even-valency fast path")?;
    prop1_cokernel(&laurent_from_jumps_even(spec.jumps()), spec.n())
}

/// Jacobian of the cone over `C_{2n}(s_1, ..., s_k, n)`:
/// `coker(A^n - (2k+2) I + Σ (A^s + A^-s))`, `A` the companion matrix of
/// `(2k + 2 - Σ (z^s + z^-s))^2 - 1`.
pub fn odd_cone_jacobian(spec: &CirculantSpec) -> Result<AbelianGroup> {
    if !spec.has_half_jump() {
        return Err(Error::InvalidCirculant(format!(
            "{spec} has no half jump; use the even-valency path"
        )));
    }
    let (_, jumps) = spec.jumps().split_last().expect("half jump present");
    odd_cone_jacobian_from_jumps(jumps, spec.n() / 2)
}

/// As [`odd_cone_jacobian`], taking `1 <= s_1 < ... < s_k < n` and `n`.
pub fn odd_cone_jacobian_from_jumps(jumps: &[usize], n: usize) -> Result<AbelianGroup> {
    require_jumps(jumps, "odd-valency fast path")?;
    // Validates ordering and range s_k <= n - 1 < (2n)/2.
    let full: Vec<usize> = jumps.iter().copied().chain([n]).collect();
    CirculantSpec::new(2 * n, full)?;

    let a = laurent_for_odd_valency(jumps).companion()?;
    let a_inv = a.inverse_unimodular()?;
    let size = a.rows();
    let mut m = a
        .pow(n as i64)?
        .add_scalar_identity(&-BigInt::from(2 * jumps.len() + 2))?;
    for &s in jumps {
        m = m.add(&a.pow(s as i64)?)?.add(&a_inv.pow(s as i64)?)?;
    }
    debug_assert_eq!(m.rows(), size);
    Ok(cokernel(&m))
}

/// Jacobian of the cone over a cobordism of two circulant layers:
/// `coker(A^n - I)` for the companion of
/// `(2k + 2 - Σ_1)(2l + 2 - Σ_2) - 1`.
pub fn cobordism_cone_jacobian(spec: &CobordismSpec) -> Result<AbelianGroup> {
    require_jumps(spec.jumps1(), "cobordism fast path (first layer)")?;
    require_jumps(spec.jumps2(), "cobordism fast path (second layer)")?;
    prop1_cokernel(
        &laurent_for_cobordism(spec.jumps1(), spec.jumps2()),
        spec.n(),
    )
}

/// Chooses the reduction that applies to `source`. Edge-list inputs have
/// no fast path.
pub fn cone_jacobian_fast(source: &GraphSource) -> Result<FastPathGroup> {
    match source {
        GraphSource::Circulant(spec) if spec.has_half_jump() => {
            let (_, jumps) = spec.jumps().split_last().expect("half jump present");
            Ok(FastPathGroup {
                group: odd_cone_jacobian(spec)?,
                path: FastPath::OddValency,
                companion_size: laurent_for_odd_valency(jumps).span(),
            })
        }
        GraphSource::Circulant(spec) => Ok(FastPathGroup {
            group: even_cone_jacobian(spec)?,
            path: FastPath::EvenValency,
            companion_size: laurent_from_jumps_even(spec.jumps()).span(),
        }),
        GraphSource::Cobordism(spec) => Ok(FastPathGroup {
            group: cobordism_cone_jacobian(spec)?,
            path: FastPath::Cobordism,
            companion_size: laurent_for_cobordism(spec.jumps1(), spec.jumps2()).span(),
        }),
        GraphSource::EdgeList(_) => Err(Error::InvalidCirculant(
            "edge-list input has no companion-matrix fast path".into(),
        )),
    }
}
