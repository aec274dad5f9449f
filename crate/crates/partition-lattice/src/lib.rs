//! The lattice of set partitions of {1,…,n} under refinement, together
//! with the rank-selected chain characters α_S and β_S computed by direct
//! fixed-point counting, and their ties to graded Whitney characters.

use partition_core::Partition;
use sn_characters::CharError;
use std::fmt;
use symfunc_engine::SymFnError;
use thiserror::Error;

mod chars;

pub use chars::{
    alpha_s, beta_onset_experiment, beta_s, verify_whitney_beta, BetaOnsetReport,
};

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("blocks must partition the ground set exactly once")]
    InvalidBlocks,
    #[error("rank {rank} outside the selectable range 1..={max}")]
    RankOutOfRange { rank: u32, max: u32 },
    #[error("the rank set must be nonempty")]
    EmptyRankSet,
    #[error("n_max {n_max} is below the first admissible n {n_min}")]
    WindowTooShort { n_min: u32, n_max: u32 },
    #[error("β not effective")]
    BetaNotEffective,
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Sym(#[from] SymFnError),
    #[error(transparent)]
    Stability(#[from] stability_analysis::StabilityError),
}

/// A partition of {1,…,n} into disjoint nonempty blocks. Canonical form:
/// each block ascending, blocks ordered by least element, so `==` is
/// equality of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(n: u32, blocks: Vec<Vec<u32>>) -> Result<Self, LatticeError> {
        let mut seen = vec![false; n as usize];
        for block in &blocks {
            if block.is_empty() {
                return Err(LatticeError::InvalidBlocks);
            }
            for &x in block {
                if x < 1 || x > n {
                    return Err(LatticeError::InvalidBlocks);
                }
                let slot = &mut seen[(x - 1) as usize];
                if *slot {
                    return Err(LatticeError::InvalidBlocks);
                }
                *slot = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(LatticeError::InvalidBlocks);
        }
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// 0̂: every element its own block.
    pub fn bottom(n: u32) -> Self {
        Self { n, blocks: (1..=n).map(|x| vec![x]).collect() }
    }

    /// 1̂: a single block (n ≥ 1).
    pub fn top(n: u32) -> Self {
        assert!(n >= 1, "the top element needs a nonempty ground set");
        Self { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn rank(&self) -> u32 {
        self.n - self.blocks.len() as u32
    }

    /// Block sizes as a number partition of n.
    pub fn block_type(&self) -> Partition {
        let mut sizes: Vec<u32> = self.blocks.iter().map(|b| b.len() as u32).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(sizes).expect("sizes are sorted and positive")
    }

    /// |μ(0̂, π)| of the lattice interval below this partition:
    /// the product of (|B|−1)! over blocks.
    pub fn moebius_weight(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| (1..b.len() as u128).product::<u128>())
            .product()
    }

    /// True when every block of self sits inside a single block of other.
    pub fn refines(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut owner = vec![0usize; self.n as usize];
        for (j, block) in other.blocks.iter().enumerate() {
            for &x in block {
                owner[(x - 1) as usize] = j;
            }
        }
        self.blocks.iter().all(|block| {
            let j = owner[(block[0] - 1) as usize];
            block.iter().all(|&x| owner[(x - 1) as usize] == j)
        })
    }

    /// Image under a permutation given as an image table
    /// (images[x−1] = w(x)); blocks may be permuted among themselves.
    pub fn apply(&self, images: &[u32]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| images[(x - 1) as usize]).collect())
            .collect();
        Self::new(self.n, blocks).expect("a bijection maps blocks to blocks")
    }

    pub fn is_fixed_by(&self, images: &[u32]) -> bool {
        self.apply(images) == *self
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rendered.join("|"))
    }
}

/// All Bell(n) set partitions, enumerated through restricted growth
/// strings, which come out already in canonical form.
pub fn set_partitions(n: u32) -> Vec<SetPartition> {
    assert!(n >= 1, "the lattice needs at least one element");
    let len = n as usize;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; len];
    loop {
        let block_count = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); block_count];
        for (x, &b) in rgs.iter().enumerate() {
            blocks[b].push(x as u32 + 1);
        }
        out.push(SetPartition { n, blocks });

        let mut i = len - 1;
        loop {
            if i == 0 {
                return out;
            }
            let cap = rgs[..i].iter().copied().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for slot in rgs.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}
