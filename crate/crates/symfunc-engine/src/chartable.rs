//! Symmetric group character tables via the Murnaghan–Nakayama recursion,
//! computed once per degree and shared behind an Arc.

use crate::{ensure_degree, SymFnError};
use partition_core::{partitions_of, Partition};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Character table of S_n. Rows are indexed by the irreducible's partition,
/// columns by cycle type, both in the workspace partition order.
pub struct CharTable {
    pub n: u32,
    /// partitions_of(n), shared row and column index.
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// chi[row][col] = χ^{parts[row]}(cycle type parts[col]).
    chi: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.chi[self.index[lambda]][self.index[mu]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.chi[self.index[lambda]]
    }

    pub fn row_by_index(&self, i: usize) -> &[i64] {
        &self.chi[i]
    }

    /// χ^λ(identity), the dimension of the irreducible.
    pub fn dimension(&self, lambda: &Partition) -> i64 {
        let ones = Partition::new(vec![1; self.n as usize]).expect("column shape");
        self.value(lambda, &ones)
    }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharTable>>>> = OnceLock::new();

/// The character table of S_n, memoized for the life of the process.
pub fn character_table(n: u32) -> Result<Arc<CharTable>, SymFnError> {
    ensure_degree(n)?;
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("character table lock");
    if let Some(t) = guard.get(&n) {
        return Ok(Arc::clone(t));
    }
    let t = Arc::new(build_table(n));
    guard.insert(n, Arc::clone(&t));
    Ok(t)
}

fn build_table(n: u32) -> CharTable {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut memo: HashMap<(Partition, Vec<u32>), i64> = HashMap::new();
    let chi = parts
        .iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| mn_value(lambda, mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    CharTable { n, parts, index, chi }
}

/// Murnaghan–Nakayama on beta-numbers: removing a border strip of length r
/// moves one bead from b to b−r; the strip height parity is the number of
/// beads strictly in between.
fn mn_value(lambda: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0] as i64;
    let ell = lambda.length();
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (ell - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        let t = b - r;
        if t < 0 || beta.contains(&t) {
            continue;
        }
        let crossings = beta.iter().filter(|&&x| t < x && x < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = t;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<u32> = Vec::with_capacity(ell);
        for (j, &x) in nb.iter().enumerate() {
            let part = x - (ell - 1 - j) as i64;
            debug_assert!(part >= 0);
            if part > 0 {
                parts.push(part as u32);
            }
        }
        let smaller = Partition::new(parts).expect("beta numbers give a partition");
        total += sign * mn_value(&smaller, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::pt;

    #[test]
    fn s3_table() {
        let t = character_table(3).unwrap();
        // Classes in order (3), (2,1), (1,1,1).
        assert_eq!(t.row(&pt("3")), &[1, 1, 1]);
        assert_eq!(t.row(&pt("2,1")), &[-1, 0, 2]);
        assert_eq!(t.row(&pt("1,1,1")), &[1, -1, 1]);
    }

    #[test]
    fn s5_spot_checks() {
        let t = character_table(5).unwrap();
        assert_eq!(t.dimension(&pt("3,2")), 5);
        assert_eq!(t.dimension(&pt("3,1,1")), 6);
        assert_eq!(t.value(&pt("3,1,1"), &pt("5")), 1);
        assert_eq!(t.value(&pt("4,1"), &pt("2,2,1")), 0);
        assert_eq!(t.value(&pt("2,2,1"), &pt("2,1,1,1")), -1);
    }

    #[test]
    fn orthogonality_of_rows() {
        for n in 1..=7u32 {
            let t = character_table(n).unwrap();
            let zs: Vec<u128> = t.parts.iter().map(Partition::z).collect();
            let group_order: u128 = (1..=n as u128).product();
            for i in 0..t.parts.len() {
                for j in i..t.parts.len() {
                    let dot: i128 = (0..t.parts.len())
                        .map(|k| {
                            let a = t.row_by_index(i)[k] as i128;
                            let b = t.row_by_index(j)[k] as i128;
                            a * b * (group_order / zs[k]) as i128
                        })
                        .sum();
                    let expected = if i == j { group_order as i128 } else { 0 };
                    assert_eq!(dot, expected, "n={n} rows {i},{j}");
                }
            }
        }
    }

    #[test]
    fn sign_character_row() {
        let t = character_table(6).unwrap();
        for mu in &t.parts {
            let sign = if mu.rank() % 2 == 0 { 1 } else { -1 };
            assert_eq!(t.value(&pt("1,1,1,1,1,1"), mu), sign, "at {mu:?}");
        }
    }

    #[test]
    fn dimensions_sum_of_squares() {
        for n in 1..=8u32 {
            let t = character_table(n).unwrap();
            let total: i64 = t.parts.iter().map(|l| t.dimension(l).pow(2)).sum();
            let order: i64 = (1..=n as i64).product();
            assert_eq!(total, order);
        }
    }
}
