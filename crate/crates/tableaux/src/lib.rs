//! Standard Young tableaux with the ascent and major-index statistics, the
//! hook-length count, and the two tableau classes (desarrangement and
//! Whitney-generating) whose shape sums appear in the stable-cohomology
//! recurrences.
//!
//! Ascent convention: i < n is an ascent of Q when i+1 lies in a weakly
//! higher row than i, and n itself always counts as an ascent (imagine the
//! first row extended by n+1). The empty tableau has no ascents.

use partition_core::{partitions_of, Partition, PartitionError};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use symfunc_engine::{SymFn, SymFnError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("rows do not form a standard tableau: {0}")]
    NotStandard(String),
    #[error("bad tableau literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },
    #[error(transparent)]
    Shape(#[from] PartitionError),
}

/// A standard Young tableau: rows increase rightward, columns increase
/// downward, entries are exactly 1..n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
    /// row index of each entry, entry k at position k-1.
    row_of: Vec<u32>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut row_of = vec![u32::MAX; n];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(TableauError::NotStandard("empty row".into()));
            }
            if r + 1 < rows.len() && rows[r + 1].len() > row.len() {
                return Err(TableauError::NotStandard("row lengths must weakly decrease".into()));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n {
                    return Err(TableauError::NotStandard(format!("entry {v} out of range")));
                }
                if row_of[v as usize - 1] != u32::MAX {
                    return Err(TableauError::NotStandard(format!("entry {v} repeated")));
                }
                row_of[v as usize - 1] = r as u32;
                if c > 0 && row[c - 1] >= v {
                    return Err(TableauError::NotStandard("rows must increase".into()));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(TableauError::NotStandard("columns must increase".into()));
                }
            }
        }
        Ok(StandardTableau { rows, row_of })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new(), row_of: Vec::new() }
    }

    pub fn size(&self) -> u32 {
        self.row_of.len() as u32
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths weakly decrease")
    }

    /// Row (0-based) containing the entry k.
    pub fn row_of_entry(&self, k: u32) -> u32 {
        self.row_of[k as usize - 1]
    }

    /// Q restricted to entries 1..=k, a standard tableau of a smaller shape.
    pub fn restrict(&self, k: u32) -> StandardTableau {
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&v| v <= k).collect::<Vec<u32>>())
            .filter(|row: &Vec<u32>| !row.is_empty())
            .collect();
        StandardTableau::new(rows).expect("restriction of a standard tableau is standard")
    }

    /// Ascent set: i < n with i+1 weakly higher than i, plus n itself.
    pub fn ascents(&self) -> BTreeSet<u32> {
        let n = self.size();
        let mut set = BTreeSet::new();
        for i in 1..n {
            if self.row_of_entry(i + 1) <= self.row_of_entry(i) {
                set.insert(i);
            }
        }
        if n > 0 {
            set.insert(n);
        }
        set
    }

    /// Major index: sum of the i < n with i+1 strictly lower than i.
    pub fn maj(&self) -> u32 {
        (1..self.size())
            .filter(|&i| self.row_of_entry(i + 1) > self.row_of_entry(i))
            .sum()
    }

    /// First ascent is even. The empty tableau counts as one (its class
    /// carries the empty shape for n = 0).
    pub fn is_desarrangement(&self) -> bool {
        match self.ascents().first() {
            Some(&a) => a % 2 == 0,
            None => true,
        }
    }

    /// Membership in the Whitney-generating class: the size ≤ 3 exceptional
    /// list, then the four permitted restrictions to {1,2,3,4} with parity
    /// conditions on the first ascent ≥ 4 after the two "tail" patterns.
    pub fn is_whitney_generating(&self) -> bool {
        let n = self.size();
        if n <= 3 {
            // Exactly ∅, (1 2), (1 2 / 3).
            return match n {
                0 => true,
                2 => self.rows.len() == 1,
                3 => self.rows == vec![vec![1, 2], vec![3]],
                _ => false,
            };
        }
        let head = self.restrict(4);
        let t1 = rows_of(&[&[1, 2], &[3], &[4]]);
        let t2 = rows_of(&[&[1, 2, 4], &[3]]);
        let t3 = rows_of(&[&[1, 2], &[3, 4]]);
        let t4 = rows_of(&[&[1, 2, 3], &[4]]);
        let first_high_ascent = || {
            *self
                .ascents()
                .range(4..)
                .next()
                .expect("n ≥ 4 is itself an ascent, so the set is nonempty")
        };
        if head == t1 || head == t2 {
            true
        } else if head == t3 {
            first_high_ascent() % 2 == 1
        } else if head == t4 {
            first_high_ascent() % 2 == 0
        } else {
            false
        }
    }
}

fn rows_of(rows: &[&[u32]]) -> StandardTableau {
    StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("fixed pattern")
}

impl fmt::Display for StandardTableau {
    /// Text form "1 2 4 / 3"; the empty tableau renders as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for StandardTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(StandardTableau::empty());
        }
        let mut rows = Vec::new();
        for row_text in t.split('/') {
            let mut row = Vec::new();
            for piece in row_text.split_whitespace() {
                let v: u32 = piece.parse().map_err(|e| TableauError::BadLiteral {
                    literal: s.to_string(),
                    reason: format!("entry {piece:?}: {e}"),
                })?;
                row.push(v);
            }
            rows.push(row);
        }
        StandardTableau::new(rows).map_err(|e| TableauError::BadLiteral {
            literal: s.to_string(),
            reason: e.to_string(),
        })
    }
}

/// All standard tableaux of the given shape. Entries are placed in
/// increasing order, trying rows top to bottom, so the output is ordered
/// lexicographically by each entry's row index.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let target: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let n = shape.size();
    let mut fill: Vec<usize> = vec![0; target.len()];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    place(1, n, &target, &mut fill, &mut rows, &mut out);
    out
}

fn place(
    entry: u32,
    n: u32,
    target: &[usize],
    fill: &mut Vec<usize>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<StandardTableau>,
) {
    if entry > n {
        let built: Vec<Vec<u32>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        out.push(StandardTableau::new(built).expect("construction preserves standardness"));
        return;
    }
    for r in 0..target.len() {
        let can_grow = fill[r] < target[r] && (r == 0 || fill[r - 1] > fill[r]);
        if can_grow {
            fill[r] += 1;
            rows[r].push(entry);
            place(entry + 1, n, target, fill, rows, out);
            rows[r].pop();
            fill[r] -= 1;
        }
    }
}

/// All standard tableaux with n cells, over every shape of n in the fixed
/// partition order.
pub fn enumerate_all_syt(n: u32) -> Vec<StandardTableau> {
    partitions_of(n).iter().flat_map(enumerate_syt).collect()
}

/// Number of standard tableaux of the shape, by the hook length formula.
/// Exact in u128 for |λ| ≤ 26, far past every use in this workspace.
pub fn count_syt(shape: &Partition) -> u128 {
    let n = shape.size();
    assert!(n <= 26, "hook-length count limited to |λ| ≤ 26");
    let conj = shape.conjugate();
    let mut hooks: u128 = 1;
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len {
            let arm = (len - 1 - j) as u128;
            let leg = (conj.parts()[j as usize] as u128) - 1 - i as u128;
            hooks *= arm + leg + 1;
        }
    }
    let fact: u128 = (1..=n as u128).product();
    fact / hooks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauClass {
    Desarrangement,
    WhitneyGenerating,
}

/// Σ s_{shape(Q)} over the chosen class of standard tableaux with n cells.
pub fn tableau_sum(n: u32, class: TableauClass) -> Result<SymFn, SymFnError> {
    let mut acc = SymFn::zero();
    for q in enumerate_all_syt(n) {
        let keep = match class {
            TableauClass::Desarrangement => q.is_desarrangement(),
            TableauClass::WhitneyGenerating => q.is_whitney_generating(),
        };
        if keep {
            acc = &acc + &SymFn::s(&q.shape())?;
        }
    }
    Ok(acc)
}
