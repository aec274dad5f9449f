//! The Pieri rule: s_μ · h_r = Σ s_λ over horizontal strips λ/μ of size r.
//! The strip enumeration is combinatorial and independent of the p-basis
//! product, which makes the two implementations useful checks on each other.

use crate::{SymFn, SymFnError};
use partition_core::Partition;

/// All λ ⊇ μ with λ/μ a horizontal strip of exactly r cells, in the
/// workspace partition order.
pub fn horizontal_strips_over(mu: &Partition, r: u32) -> Vec<Partition> {
    let ell = mu.length();
    let mut rows: Vec<u32> = Vec::with_capacity(ell + 1);
    let mut out = Vec::new();
    place_row(mu.parts(), 0, r, ell, &mut rows, &mut out);
    out.sort();
    out
}

fn place_row(
    mu: &[u32],
    row: usize,
    remaining: u32,
    ell: usize,
    rows: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == ell + 1 {
        if remaining == 0 {
            let parts: Vec<u32> = rows.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition::new(parts).expect("rows are weakly decreasing"));
        }
        return;
    }
    let base = if row < ell { mu[row] } else { 0 };
    // Cells added in this row sit strictly right of the row below's old end,
    // capped by the row above's old length (strip condition λ_{k+1} ≤ μ_k).
    let max_add = if row == 0 {
        remaining
    } else {
        remaining.min(mu[row - 1].saturating_sub(base))
    };
    for add in 0..=max_add {
        rows.push(base + add);
        place_row(mu, row + 1, remaining - add, ell, rows, out);
        rows.pop();
    }
}

/// s_μ · h_r as a symmetric function (its Schur support is exactly the
/// horizontal strips, all with coefficient 1).
pub fn pieri_h(mu: &Partition, r: u32) -> Result<SymFn, SymFnError> {
    crate::ensure_degree(mu.size() + r)?;
    let mut acc = SymFn::zero();
    for lambda in horizontal_strips_over(mu, r) {
        acc = &acc + &SymFn::s(&lambda)?;
    }
    Ok(acc)
}
