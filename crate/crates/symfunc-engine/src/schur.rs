//! Schur functions indexed by arbitrary integer sequences, via the
//! h-determinant s_α = det(h_{α_i − i + j}) and its straightening: with
//! ρ = (ℓ−1, ..., 1, 0), the determinant vanishes when α+ρ has a repeated
//! or negative entry, and otherwise equals ε(w) s_λ where w sorts α+ρ into
//! λ+ρ.

use crate::{SymFn, SymFnError};
use partition_core::Partition;

/// s_α for an arbitrary integer sequence α (entries may be negative or out
/// of order). Returns 0 or ±s_λ.
pub fn schur_alpha(alpha: &[i64]) -> Result<SymFn, SymFnError> {
    let ell = alpha.len();
    let mut gamma: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| a + (ell - 1 - i) as i64)
        .collect();
    if gamma.iter().any(|&g| g < 0) {
        return Ok(SymFn::zero());
    }
    // Sort descending, tracking the permutation sign; equal entries mean a
    // repeated row in the determinant.
    let mut sign = 1i64;
    for i in 1..gamma.len() {
        let mut j = i;
        while j > 0 && gamma[j] > gamma[j - 1] {
            gamma.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && gamma[j] == gamma[j - 1] {
            return Ok(SymFn::zero());
        }
    }
    let parts: Vec<u32> = gamma
        .iter()
        .enumerate()
        .map(|(i, &g)| (g - (ell - 1 - i) as i64) as u32)
        .filter(|&p| p > 0)
        .collect();
    let lambda = Partition::new(parts).expect("straightened sequence is a partition");
    let s = SymFn::s(&lambda)?;
    Ok(if sign >= 0 { s } else { -&s })
}
