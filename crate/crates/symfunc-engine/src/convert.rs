//! Basis conversions. The expansions of h_n and e_n in the p basis (and of
//! p_n in the h and e monomial bases) come from the Newton recurrences
//!   n h_n = Σ_{i=1..n} p_i h_{n−i},   n e_n = Σ_{i=1..n} (−1)^{i−1} p_i e_{n−i},
//! built iteratively and memoized per degree. Schur conversions go through
//! the character table.

use crate::basis::{Basis, Expansion};
use crate::chartable::character_table;
use crate::{merge_parts, q_int, SymFn, SymFnError, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use partition_core::Partition;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

type Table = BTreeMap<Partition, Q>;

/// Bilinear product of coefficient tables over a multiplicative basis
/// (monomials multiply by merging their index partitions). Valid for the
/// p, h and e monomial bases alike.
fn table_mul(a: &Table, b: &Table) -> Table {
    let mut out = Table::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            let key = merge_parts(la, lb);
            let c = ca * cb;
            let entry = out.entry(key).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&merge_parts(la, lb));
            }
        }
    }
    out
}

fn table_unit() -> Table {
    let mut t = Table::new();
    t.insert(Partition::empty(), Q::from_integer(BigInt::from(1)));
    t
}

/// Adjoins the single part k to every index of `t`.
fn table_shift(t: &Table, k: u32, scale: &Q) -> Table {
    t.iter()
        .map(|(l, c)| (merge_parts(l, &Partition::row(k)), c * scale))
        .collect()
}

struct GeneratorMemo {
    rows: Vec<Arc<Table>>,
}

impl GeneratorMemo {
    fn new() -> Self {
        GeneratorMemo { rows: vec![Arc::new(table_unit())] }
    }
}

fn grow<F>(cell: &OnceLock<Mutex<GeneratorMemo>>, n: u32, step: F) -> Arc<Table>
where
    F: Fn(&[Arc<Table>], u32) -> Table,
{
    let memo = cell.get_or_init(|| Mutex::new(GeneratorMemo::new()));
    let mut guard = memo.lock().expect("generator memo lock");
    while guard.rows.len() <= n as usize {
        let k = guard.rows.len() as u32;
        let next = step(&guard.rows, k);
        guard.rows.push(Arc::new(next));
    }
    Arc::clone(&guard.rows[n as usize])
}

/// h_n expanded in the p basis.
pub(crate) fn h_in_p(n: u32) -> Arc<Table> {
    static MEMO: OnceLock<Mutex<GeneratorMemo>> = OnceLock::new();
    grow(&MEMO, n, |rows, k| {
        let mut acc = Table::new();
        for i in 1..=k {
            let scale = q_int(1) / q_int(k as i64);
            for (l, c) in table_shift(&rows[(k - i) as usize], i, &scale) {
                let entry = acc.entry(l).or_insert_with(Q::zero);
                *entry += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    })
}

/// e_n expanded in the p basis.
pub(crate) fn e_in_p(n: u32) -> Arc<Table> {
    static MEMO: OnceLock<Mutex<GeneratorMemo>> = OnceLock::new();
    grow(&MEMO, n, |rows, k| {
        let mut acc = Table::new();
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let scale = q_int(sign) / q_int(k as i64);
            for (l, c) in table_shift(&rows[(k - i) as usize], i, &scale) {
                let entry = acc.entry(l).or_insert_with(Q::zero);
                *entry += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    })
}

/// p_n expanded in the h monomial basis: p_n = n h_n − Σ_{i<n} p_i h_{n−i}.
fn p_in_h(n: u32) -> Arc<Table> {
    static MEMO: OnceLock<Mutex<GeneratorMemo>> = OnceLock::new();
    grow(&MEMO, n, |rows, k| {
        // rows[i] is p_i in h for i ≥ 1; rows[0] is the unit placeholder.
        let mut acc = Table::new();
        acc.insert(Partition::row(k), q_int(k as i64));
        for i in 1..=k - 1 {
            for (l, c) in table_shift(&rows[i as usize], k - i, &q_int(-1)) {
                let entry = acc.entry(l).or_insert_with(Q::zero);
                *entry += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    })
}

/// p_n in the e monomial basis:
/// p_n = (−1)^{n−1} (n e_n − Σ_{i<n} (−1)^{i−1} p_i e_{n−i}).
fn p_in_e(n: u32) -> Arc<Table> {
    static MEMO: OnceLock<Mutex<GeneratorMemo>> = OnceLock::new();
    grow(&MEMO, n, |rows, k| {
        let outer = q_int(if k % 2 == 1 { 1 } else { -1 });
        let mut acc = Table::new();
        acc.insert(Partition::row(k), &outer * q_int(k as i64));
        for i in 1..=k - 1 {
            let inner = q_int(if i % 2 == 1 { -1 } else { 1 });
            for (l, c) in table_shift(&rows[i as usize], k - i, &(&outer * inner)) {
                let entry = acc.entry(l).or_insert_with(Q::zero);
                *entry += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    })
}

/// s_λ in the p basis: Σ_μ χ^λ(μ)/z_μ · p_μ.
pub(crate) fn schur_in_p(lambda: &Partition) -> SymFn {
    let n = lambda.size();
    if n == 0 {
        return SymFn::one();
    }
    let t = character_table(n).expect("degree already checked by caller");
    let row = t.row(lambda);
    let mut f = SymFn::zero();
    for (j, mu) in t.parts.iter().enumerate() {
        if row[j] != 0 {
            f.add_term(mu.clone(), q_int(row[j]) / q_int(mu.z() as i64));
        }
    }
    f
}

impl SymFn {
    /// Re-expresses the function in the requested basis. The view is exact;
    /// converting a view back with [`SymFn::from_expansion`] is the
    /// identity.
    pub fn convert(&self, basis: Basis) -> Expansion {
        let terms = match basis {
            Basis::P => self.terms().map(|(l, c)| (l.clone(), c.clone())).collect(),
            Basis::S => self.to_s_terms(),
            Basis::H => self.to_multiplicative(p_in_h),
            Basis::E => self.to_multiplicative(p_in_e),
        };
        Expansion { basis, terms }
    }

    fn to_s_terms(&self) -> Table {
        let mut out = Table::new();
        for n in self.degrees() {
            if n == 0 {
                let c = self.p_coeff(&Partition::empty());
                if !c.is_zero() {
                    out.insert(Partition::empty(), c);
                }
                continue;
            }
            let t = character_table(n).expect("terms are within the degree cap");
            let comp = self.component(n);
            for (i, lambda) in t.parts.iter().enumerate() {
                let row = t.row_by_index(i);
                let mut acc = Q::zero();
                for (j, mu) in t.parts.iter().enumerate() {
                    if row[j] == 0 {
                        continue;
                    }
                    let c = comp.p_coeff(mu);
                    if !c.is_zero() {
                        acc += c * q_int(row[j]);
                    }
                }
                if !acc.is_zero() {
                    out.insert(lambda.clone(), acc);
                }
            }
        }
        out
    }

    fn to_multiplicative(&self, gen: fn(u32) -> Arc<Table>) -> Table {
        let mut out = Table::new();
        for (lambda, coeff) in self.terms() {
            let mut prod = table_unit();
            for &part in lambda.parts() {
                prod = table_mul(&prod, &gen(part));
            }
            for (l, c) in prod {
                let entry = out.entry(l).or_insert_with(Q::zero);
                *entry += c * coeff;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Rebuilds the canonical p form from a basis view.
    pub fn from_expansion(exp: &Expansion) -> Result<SymFn, SymFnError> {
        let mut f = SymFn::zero();
        for (lambda, coeff) in &exp.terms {
            crate::ensure_degree(lambda.size())?;
            let base = match exp.basis {
                Basis::P => SymFn::p_lambda(lambda)?,
                Basis::H => SymFn::h_lambda(lambda)?,
                Basis::E => SymFn::e_lambda(lambda)?,
                Basis::S => SymFn::s(lambda)?,
            };
            f = &f + &base.scaled(coeff);
        }
        Ok(f)
    }
}
