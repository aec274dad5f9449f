//! The cochain complex structure: multiplication by Σ a(i,j), its
//! restriction to the full-support filtration piece, cohomology through
//! certified modular ranks with an exact rational fallback, and character
//! extraction through traces on the nbc basis.

use crate::{basis, filtration_basis, straighten, Monomial, OsError};
use num_traits::{ToPrimitive, Zero};
use partition_core::{partitions_of, Partition};
use sn_characters::ClassFunction;
use std::collections::{BTreeMap, HashMap};
use symfunc_engine::{q_int, Q, SymFn};

/// One permutation of each cycle type, as an image table, assembled from
/// consecutive cycles.
fn representative(mu: &Partition) -> Vec<u32> {
    let mut images = Vec::new();
    let mut start = 1u32;
    for &len in mu.parts() {
        for offset in 0..len {
            let x = start + offset;
            images.push(if offset + 1 == len { start } else { x + 1 });
        }
        start += len;
    }
    images
}

/// Row rank by exact Gaussian elimination with pivot normalization.
fn rank_of(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = {
            let p = &rows[rank][col];
            Q::from_integer(1.into()) / p
        };
        for v in rows[rank].iter_mut().skip(col) {
            *v *= &inv;
        }
        let (pivot_row, below) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        for row in below.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// The differential out of one monomial basis, stored as sparse rows of
/// coordinates over the target basis.
struct SparseMap {
    rows: Vec<Vec<(usize, Q)>>,
    cols: usize,
}

fn diff_images(n: u32, from: &[Monomial], to: &[Monomial]) -> Result<SparseMap, OsError> {
    let index: HashMap<&Monomial, usize> = to.iter().zip(0..).collect();
    let mut rows = Vec::with_capacity(from.len());
    for m in from {
        let image = straighten(n, m)?.differential()?;
        let entries = image
            .terms()
            .iter()
            .map(|(mono, c)| {
                let slot = index
                    .get(mono)
                    .expect("the differential stays inside the filtration piece");
                (*slot, c.clone())
            })
            .collect();
        rows.push(entries);
    }
    Ok(SparseMap { rows, cols: to.len() })
}

/// Fixed word-sized prime for modular rank bounds; products of two
/// residues stay below 2^62.
const RANK_PRIME: u64 = 2_147_483_647;

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn int_mod_p(c: &Q, p: u64) -> u64 {
    debug_assert!(c.is_integer(), "straightening coefficients are integers");
    let v = c
        .numer()
        .to_i64()
        .expect("straightening coefficients fit a machine word");
    v.rem_euclid(p as i64) as u64
}

/// Rank of the reduction mod p, a lower bound for the rational rank.
fn rank_mod_p(map: &SparseMap, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = map
        .rows
        .iter()
        .map(|entries| {
            let mut row = vec![0u64; map.cols];
            for (slot, c) in entries {
                row[*slot] = int_mod_p(c, p);
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..map.cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for v in &mut m[rank][col..] {
            *v = *v * inv % p;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank][col..];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let neg = p - row[col];
            for (v, pv) in row[col..].iter_mut().zip(pivot_row) {
                *v = (*v + neg * *pv) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn rank_exact(map: &SparseMap) -> usize {
    let dense = map
        .rows
        .iter()
        .map(|entries| {
            let mut row = vec![Q::zero(); map.cols];
            for (slot, c) in entries {
                row[*slot] = c.clone();
            }
            row
        })
        .collect();
    rank_of(dense)
}

/// Cohomology dimensions of a complex of monomial bases. Modular ranks
/// bound each cohomology group from above; when at most one bound is
/// positive the Euler characteristic pins the dimensions exactly, and
/// otherwise rational elimination settles them.
fn cohomology_dims(n: u32, bases: &[Vec<Monomial>]) -> Result<Vec<(u32, u64)>, OsError> {
    let maps: Vec<Option<SparseMap>> = (0..bases.len())
        .map(|i| {
            let to: &[Monomial] = if i + 1 < bases.len() { &bases[i + 1] } else { &[] };
            if bases[i].is_empty() || to.is_empty() {
                return Ok(None);
            }
            diff_images(n, &bases[i], to).map(Some)
        })
        .collect::<Result<_, OsError>>()?;
    let from_ranks = |ranks: &[usize]| -> Vec<(u32, u64)> {
        let mut out = Vec::new();
        for i in 0..bases.len() {
            let incoming = if i == 0 { 0 } else { ranks[i - 1] };
            let h = bases[i].len() - ranks[i] - incoming;
            if h > 0 {
                out.push((i as u32, h as u64));
            }
        }
        out
    };

    let modular: Vec<usize> = maps
        .iter()
        .map(|m| m.as_ref().map_or(0, |m| rank_mod_p(m, RANK_PRIME)))
        .collect();
    // modular ranks only ever undercount, so these bound the true
    // dimensions from above while the alternating sum is exact
    let bounds: Vec<i64> = (0..bases.len())
        .map(|i| {
            let incoming = if i == 0 { 0 } else { modular[i - 1] };
            bases[i].len() as i64 - modular[i] as i64 - incoming as i64
        })
        .collect();
    let euler: i64 = bases
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
        .sum();
    let positive: Vec<usize> = (0..bounds.len()).filter(|&i| bounds[i] > 0).collect();
    match positive.as_slice() {
        [] => return Ok(Vec::new()),
        [j] => {
            let h = if j % 2 == 0 { euler } else { -euler };
            debug_assert!(0 <= h && h <= bounds[*j], "certificate bounds violated");
            if h == 0 {
                return Ok(Vec::new());
            }
            return Ok(vec![(*j as u32, h as u64)]);
        }
        _ => {}
    }

    let exact: Vec<usize> = maps
        .iter()
        .map(|m| m.as_ref().map_or(0, rank_exact))
        .collect();
    Ok(from_ranks(&exact))
}

/// True when (A^•, d) has no cohomology at all, which holds because the
/// summed coefficients of the differential are invertible.
pub fn full_complex_is_exact(n: u32) -> Result<bool, OsError> {
    assert!(n >= 2, "the complex needs at least two strands");
    let bases: Vec<Vec<Monomial>> = (0..n).map(|i| basis(n, i)).collect();
    Ok(cohomology_dims(n, &bases)?.is_empty())
}

/// Cohomology of the full-support subcomplex (F_n(A^•), d) as a list of
/// (degree, dimension) pairs for the nonzero degrees.
pub fn hatw_cohomology(n: u32) -> Result<Vec<(u32, u64)>, OsError> {
    assert!(n >= 2, "the complex needs at least two strands");
    let bases: Vec<Vec<Monomial>> = (0..n).map(|i| filtration_basis(n, n, i)).collect();
    cohomology_dims(n, &bases)
}

/// The character of the single surviving cohomology group, read off from
/// the equivariant Euler characteristic once concentration in degree n−1
/// is confirmed numerically.
pub fn hatw_top_character(n: u32) -> Result<SymFn, OsError> {
    let survivors = hatw_cohomology(n)?;
    if survivors.len() != 1 || survivors[0].0 != n - 1 {
        return Err(OsError::CharacterNotIdentifiable);
    }
    let euler = lie_whitney::euler_hat_w(n)?;
    Ok(if n.is_multiple_of(2) { -&euler } else { euler })
}

/// Character identity h_n = Σ_{k=2}^{n} (−1)^k s_{(2,1^{k−2})} h_{n−k},
/// the Euler-characteristic shadow of the weight-space sequences.
pub fn verify_dprime_euler(n: u32) -> Result<bool, OsError> {
    assert!(n >= 2, "the identity starts at two strands");
    let mut acc = SymFn::h(n)?;
    for k in 2..=n {
        let mut hook = vec![2u32];
        hook.extend(std::iter::repeat_n(1, (k - 2) as usize));
        let term = SymFn::s(&Partition::new(hook).expect("a hook shape"))?
            .multiply(&SymFn::h(n - k)?)?;
        acc = if k % 2 == 0 { &acc - &term } else { &acc + &term };
    }
    Ok(acc.is_zero())
}

/// Coordinates of straightened elements over a shared sorted monomial
/// index.
fn coordinate_rows(
    elements: &[crate::OSElement],
) -> (Vec<Monomial>, Vec<Vec<Q>>) {
    let mut support: std::collections::BTreeSet<Monomial> = Default::default();
    for e in elements {
        support.extend(e.terms().keys().cloned());
    }
    let support: Vec<Monomial> = support.into_iter().collect();
    let rows = elements
        .iter()
        .map(|e| {
            let mut row = vec![Q::zero(); support.len()];
            for (m, c) in e.terms() {
                let at = support.binary_search(m).expect("support is complete");
                row[at] = c.clone();
            }
            row
        })
        .collect();
    (support, rows)
}

/// Gauss–Jordan inverse of a small square matrix.
fn invert(mat: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let k = mat.len();
    let mut work: Vec<Vec<Q>> = mat
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut extended = row.clone();
            extended.extend((0..k).map(|c| if c == r { q_int(1) } else { Q::zero() }));
            extended
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !work[r][col].is_zero())
            .expect("the basis matrix is invertible");
        work.swap(col, pivot);
        let inv = Q::from_integer(1.into()) / &work[col][col];
        for v in &mut work[col] {
            *v *= &inv;
        }
        for r in 0..k {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            let pivot_row = work[col].clone();
            for (v, p) in work[r].iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
    }
    work.into_iter().map(|row| row[k..].to_vec()).collect()
}

/// Straightens the n star monomials a(1,i)⋯a(i−1,i)a(i,i+1)⋯a(i,n),
/// checks their single alternating relation, and returns the dimension of
/// their span together with its character computed by traces.
pub fn star_tree_span(n: u32) -> Result<(u32, SymFn), OsError> {
    assert!(n >= 2, "stars need at least two strands");
    let star_factors = |center: u32| -> Vec<(u32, u32)> {
        (1..=n).filter(|&j| j != center).map(|j| (center, j)).collect()
    };
    let stars: Vec<crate::OSElement> = (1..=n)
        .map(|center| straighten(n, &star_factors(center)))
        .collect::<Result<_, _>>()?;

    let mut relation = crate::OSElement::zero(n);
    for (idx, star) in stars.iter().enumerate() {
        let sign = if (idx + 1) % 2 == 0 { 1 } else { -1 };
        relation = relation.add(&star.scaled(&q_int(sign)));
    }
    assert!(relation.is_zero(), "the alternating star relation must hold");

    let (support, rows) = coordinate_rows(&stars);
    // a row echelon pass picks out which stars form a basis of the span
    let mut echelon: Vec<Vec<Q>> = Vec::new();
    let mut basis_indices: Vec<usize> = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut candidate = row.clone();
        for prior in &echelon {
            let lead = prior
                .iter()
                .position(|v| !v.is_zero())
                .expect("echelon rows are nonzero");
            if candidate[lead].is_zero() {
                continue;
            }
            let factor = &candidate[lead] / &prior[lead];
            for (v, p) in candidate.iter_mut().zip(prior) {
                *v -= &factor * p;
            }
        }
        if candidate.iter().any(|v| !v.is_zero()) {
            echelon.push(candidate);
            basis_indices.push(idx);
        }
    }
    let dim = basis_indices.len();

    // invert the basis on its pivot columns once, then express each image
    // in basis coordinates to take traces class by class
    let pivot_cols = rank_probe_columns(&rows, &basis_indices);
    let square: Vec<Vec<Q>> = basis_indices
        .iter()
        .map(|&r| pivot_cols.iter().map(|&c| rows[r][c].clone()).collect())
        .collect();
    let inverse = invert(&square);

    let mut values = BTreeMap::new();
    for mu in partitions_of(n) {
        let images = representative(&mu);
        let mut trace = Q::zero();
        for (slot, &star_idx) in basis_indices.iter().enumerate() {
            let moved = stars[star_idx].apply_permutation(&images)?;
            let mut coords_in_support = vec![Q::zero(); support.len()];
            for (m, c) in moved.terms() {
                let at = support
                    .binary_search(m)
                    .expect("the span is closed under the action");
                coords_in_support[at] = c.clone();
            }
            // restrict to pivot columns and solve through the inverse
            let restricted: Vec<Q> = pivot_cols
                .iter()
                .map(|&c| coords_in_support[c].clone())
                .collect();
            let coeff: Q = (0..dim)
                .map(|r| &restricted[r] * &inverse[r][slot])
                .sum();
            trace += coeff;
        }
        if !trace.is_zero() {
            values.insert(mu, trace);
        }
    }
    let character = ClassFunction::new(n, values)?.frobenius_ch()?;
    Ok((dim as u32, character))
}

/// Columns on which the chosen rows form an invertible square block.
fn rank_probe_columns(rows: &[Vec<Q>], chosen: &[usize]) -> Vec<usize> {
    let mut work: Vec<Vec<Q>> = chosen.iter().map(|&r| rows[r].clone()).collect();
    let mut cols = Vec::new();
    let mut rank = 0;
    let width = work.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(pivot) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot);
        let inv = Q::from_integer(1.into()) / &work[rank][col];
        for v in &mut work[rank] {
            *v *= &inv;
        }
        let pivot_row = work[rank].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        cols.push(col);
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    cols
}

/// The character of A^i computed by straightening traces of one
/// representative per cycle type.
pub fn character_of_degree(n: u32, degree: u32) -> Result<SymFn, OsError> {
    let monomials = basis(n, degree);
    let mut values = BTreeMap::new();
    for mu in partitions_of(n) {
        let images = representative(&mu);
        let mut trace = Q::zero();
        for m in &monomials {
            let factors: Vec<(u32, u32)> = m
                .iter()
                .map(|&(i, j)| (images[(i - 1) as usize], images[(j - 1) as usize]))
                .collect();
            let moved = straighten(n, &factors)?;
            if let Some(c) = moved.terms().get(m) {
                trace += c;
            }
        }
        if !trace.is_zero() {
            values.insert(mu, trace);
        }
    }
    Ok(ClassFunction::new(n, values)?.frobenius_ch()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::pt;

    #[test]
    fn rank_and_inverse_agree_on_small_matrices() {
        let m = vec![
            vec![q_int(2), q_int(1)],
            vec![q_int(1), q_int(1)],
        ];
        assert_eq!(rank_of(m.clone()), 2);
        let inv = invert(&m);
        assert_eq!(inv[0][0], q_int(1));
        assert_eq!(inv[0][1], q_int(-1));
        assert_eq!(inv[1][0], q_int(-1));
        assert_eq!(inv[1][1], q_int(2));

        let singular = vec![
            vec![q_int(1), q_int(2), q_int(3)],
            vec![q_int(2), q_int(4), q_int(6)],
            vec![q_int(0), q_int(1), q_int(1)],
        ];
        assert_eq!(rank_of(singular), 2);
    }

    #[test]
    fn modular_and_rational_ranks_agree_on_integer_matrices() {
        let to_sparse = |rows: &[Vec<i64>]| SparseMap {
            rows: rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(_, &v)| v != 0)
                        .map(|(c, &v)| (c, q_int(v)))
                        .collect()
                })
                .collect(),
            cols: rows.first().map_or(0, Vec::len),
        };
        let samples: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![2, 1], vec![1, 1]],
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
            vec![vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]],
            vec![vec![3, 5, 7, 9], vec![2, -2, 2, -2], vec![5, 3, 9, 7]],
        ];
        for rows in &samples {
            let map = to_sparse(rows);
            assert_eq!(rank_mod_p(&map, RANK_PRIME), rank_exact(&map));
        }
    }

    #[test]
    fn full_complex_is_exact_at_small_sizes() {
        for n in 2..=6u32 {
            assert!(full_complex_is_exact(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn hatw_cohomology_is_concentrated() {
        assert_eq!(hatw_cohomology(3).unwrap(), vec![(2, 2)]);
        assert_eq!(hatw_cohomology(4).unwrap(), vec![(3, 3)]);
        assert_eq!(hatw_cohomology(5).unwrap(), vec![(4, 4)]);
        assert_eq!(hatw_cohomology(6).unwrap(), vec![(5, 5)]);
        assert_eq!(hatw_cohomology(7).unwrap(), vec![(6, 6)]);
    }

    #[test]
    fn top_characters_are_hooks_with_two_columns() {
        for n in 2..=7u32 {
            let top = hatw_top_character(n).unwrap();
            let mut hook = vec![2u32];
            hook.extend(std::iter::repeat_n(1, (n - 2) as usize));
            let expected = SymFn::s(&Partition::new(hook).unwrap()).unwrap();
            assert_eq!(top, expected, "n={n}");
        }
    }

    #[test]
    fn dprime_euler_identity_holds() {
        for n in 2..=8u32 {
            assert!(verify_dprime_euler(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn star_tree_span_carries_the_two_column_hook() {
        let (dim3, chi3) = star_tree_span(3).unwrap();
        assert_eq!(dim3, 2);
        assert_eq!(chi3, SymFn::s(&pt("2,1")).unwrap());

        let (dim4, chi4) = star_tree_span(4).unwrap();
        assert_eq!(dim4, 3);
        assert_eq!(chi4, SymFn::s(&pt("2,1,1")).unwrap());

        let (dim5, _) = star_tree_span(5).unwrap();
        assert_eq!(dim5, 4);
    }
}
