//! The rational Orlik–Solomon algebra of the braid arrangement: an
//! exterior algebra on generators a(i,j) for 1 ≤ i < j ≤ n modulo the
//! triangle relations a(i,j)a(i,k) − a(i,j)a(j,k) + a(i,k)a(j,k).
//!
//! Elements are kept straightened over the no-broken-circuit basis for the
//! generator order a(i,j) < a(k,l) iff (j,i) < (l,k) lexicographically.
//! Under that order a monomial is nbc exactly when its edges have distinct
//! larger endpoints, which also makes the basis easy to enumerate.

use num_traits::Zero;
use sn_characters::CharError;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use symfunc_engine::{q_int, Q, SymFnError};
use thiserror::Error;

mod complex;

pub use complex::{
    character_of_degree, full_complex_is_exact, hatw_cohomology, hatw_top_character,
    star_tree_span, verify_dprime_euler,
};

#[derive(Debug, Error)]
pub enum OsError {
    #[error("generator endpoints must be distinct and within 1..={n}")]
    BadGenerator { n: u32 },
    #[error("bad monomial literal: {0}")]
    BadMonomial(String),
    #[error("cannot identify character from Euler characteristic")]
    CharacterNotIdentifiable,
    #[error(transparent)]
    Sym(#[from] SymFnError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// An edge {i, j} stored as (i, j) with i < j.
pub type Edge = (u32, u32);

/// A straightened basis monomial: edges sorted by generator order, with
/// pairwise distinct larger endpoints.
pub type Monomial = Vec<Edge>;

fn order_key(e: Edge) -> (u32, u32) {
    (e.1, e.0)
}

/// Sorts factors by generator order, tracking the wedge sign; None when a
/// generator repeats.
fn sort_with_sign(factors: &[Edge]) -> Option<(Vec<Edge>, i64)> {
    let mut sorted: Vec<Edge> = Vec::with_capacity(factors.len());
    let mut sign = 1i64;
    for &e in factors {
        let key = order_key(e);
        let mut at = sorted.len();
        while at > 0 && order_key(sorted[at - 1]) > key {
            at -= 1;
            sign = -sign;
        }
        if at > 0 && sorted[at - 1] == e {
            return None;
        }
        sorted.insert(at, e);
    }
    Some((sorted, sign))
}

fn is_nbc(mono: &[Edge]) -> bool {
    mono.windows(2).all(|w| w[0].1 != w[1].1)
}

type Straightened = Arc<BTreeMap<Monomial, i64>>;

fn straighten_cache() -> &'static Mutex<HashMap<Monomial, Straightened>> {
    static CACHE: OnceLock<Mutex<HashMap<Monomial, Straightened>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// nbc expansion of a sorted, repetition-free monomial. The rightmost
/// violating pair a(i,k)a(j,k) is rewritten through the triangle relation
/// as a(i,j)a(j,k) − a(i,j)a(i,k); each rewrite lowers a larger endpoint,
/// so the recursion terminates.
fn straighten_sorted(mono: &Monomial) -> Straightened {
    if is_nbc(mono) {
        let mut single = BTreeMap::new();
        single.insert(mono.clone(), 1);
        return Arc::new(single);
    }
    if let Some(hit) = straighten_cache().lock().unwrap().get(mono) {
        return hit.clone();
    }
    let at = (0..mono.len() - 1)
        .rev()
        .find(|&p| mono[p].1 == mono[p + 1].1)
        .expect("a non-nbc sorted monomial has a shared larger endpoint");
    let (i, k) = mono[at];
    let (j, _) = mono[at + 1];
    let mut rest: Vec<Edge> = mono.clone();
    rest.drain(at..at + 2);
    // moving the adjacent pair to the front is an even permutation, so
    // mono = a(i,k)∧a(j,k)∧rest = (a(i,j)∧a(j,k) − a(i,j)∧a(i,k))∧rest
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    for (kept, term_sign) in [((j, k), 1i64), ((i, k), -1i64)] {
        let mut factors = vec![(i, j), kept];
        factors.extend_from_slice(&rest);
        let Some((sorted, sort_sign)) = sort_with_sign(&factors) else {
            continue;
        };
        for (m, c) in straighten_sorted(&sorted).iter() {
            let entry = acc.entry(m.clone()).or_insert(0);
            *entry += term_sign * sort_sign * c;
            if *entry == 0 {
                acc.remove(m);
            }
        }
    }
    let out = Arc::new(acc);
    straighten_cache()
        .lock()
        .unwrap()
        .insert(mono.clone(), out.clone());
    out
}

fn validate_edge(n: u32, i: u32, j: u32) -> Result<Edge, OsError> {
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(OsError::BadGenerator { n });
    }
    Ok((i.min(j), i.max(j)))
}

/// nbc expansion of an arbitrary generator product.
pub fn straighten(n: u32, factors: &[(u32, u32)]) -> Result<OSElement, OsError> {
    let mut edges = Vec::with_capacity(factors.len());
    for &(i, j) in factors {
        edges.push(validate_edge(n, i, j)?);
    }
    let Some((sorted, sign)) = sort_with_sign(&edges) else {
        return Ok(OSElement::zero(n));
    };
    let mut terms = BTreeMap::new();
    for (m, c) in straighten_sorted(&sorted).iter() {
        terms.insert(m.clone(), q_int(sign * c));
    }
    Ok(OSElement { n, terms })
}

/// An element of the algebra for a fixed n, stored on the nbc basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OSElement {
    n: u32,
    terms: BTreeMap<Monomial, Q>,
}

impl OSElement {
    pub fn zero(n: u32) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), q_int(1));
        Self { n, terms }
    }

    pub fn generator(n: u32, i: u32, j: u32) -> Result<Self, OsError> {
        let e = validate_edge(n, i, j)?;
        let mut terms = BTreeMap::new();
        terms.insert(vec![e], q_int(1));
        Ok(Self { n, terms })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Homogeneous degree when there is one; None for zero or mixed.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.len() as u32);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, mono: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "elements live in different algebras");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, OsError> {
        assert_eq!(self.n, other.n, "elements live in different algebras");
        let mut out = Self::zero(self.n);
        for (ml, cl) in &self.terms {
            for (mr, cr) in &other.terms {
                let mut factors = ml.clone();
                factors.extend_from_slice(mr);
                let piece = straighten(self.n, &factors)?;
                for (m, c) in piece.terms {
                    out.add_term(m, c * cl * cr);
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication by the invariant element Σ a(i,j).
    pub fn differential(&self) -> Result<Self, OsError> {
        let mut out = Self::zero(self.n);
        for j in 2..=self.n {
            for i in 1..j {
                for (m, c) in &self.terms {
                    let mut factors = vec![(i, j)];
                    factors.extend_from_slice(m);
                    let piece = straighten(self.n, &factors)?;
                    for (mono, coeff) in piece.terms {
                        out.add_term(mono, coeff * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Relabels every edge through an image table (images[x−1] = w(x)) and
    /// re-straightens.
    pub fn apply_permutation(&self, images: &[u32]) -> Result<Self, OsError> {
        assert_eq!(images.len(), self.n as usize, "image table size mismatch");
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let factors: Vec<(u32, u32)> = m
                .iter()
                .map(|&(i, j)| (images[(i - 1) as usize], images[(j - 1) as usize]))
                .collect();
            let piece = straighten(self.n, &factors)?;
            for (mono, coeff) in piece.terms {
                out.add_term(mono, coeff * c);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for OSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &Q::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != q_int(1) {
                    write!(f, "{mag} ")?;
                }
                for (i, j) in m {
                    write!(f, "a({i},{j})")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses a product literal like "a(1,3)a(2,3)" into its factor list.
pub fn parse_monomial(s: &str) -> Result<Vec<(u32, u32)>, OsError> {
    let bad = |msg: &str| OsError::BadMonomial(msg.to_string());
    let mut chars = s.chars().peekable();
    let mut factors = Vec::new();
    loop {
        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
            chars.next();
        }
        if chars.peek().is_none() {
            break;
        }
        if chars.next() != Some('a') || chars.next() != Some('(') {
            return Err(bad("expected a factor of the form a(i,j)"));
        }
        let mut read_int = |stop: char| -> Result<u32, OsError> {
            let mut digits = String::new();
            for c in chars.by_ref() {
                if c == stop {
                    return digits
                        .parse()
                        .map_err(|_| bad("expected an integer endpoint"));
                }
                digits.push(c);
            }
            Err(bad("unterminated factor"))
        };
        let i = read_int(',')?;
        let j = read_int(')')?;
        factors.push((i, j));
    }
    if factors.is_empty() {
        return Err(bad("empty monomial"));
    }
    Ok(factors)
}

/// nbc basis of the degree-i component: one edge for each of i distinct
/// larger endpoints.
pub fn basis(n: u32, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Monomial = Vec::new();
    fn extend(out: &mut Vec<Monomial>, current: &mut Monomial, next_max: u32, n: u32, left: u32) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        if next_max > n || n - next_max + 1 < left {
            return;
        }
        extend(out, current, next_max + 1, n, left);
        for i in 1..next_max {
            current.push((i, next_max));
            extend(out, current, next_max + 1, n, left - 1);
            current.pop();
        }
    }
    extend(&mut out, &mut current, 2, n, degree);
    out
}

/// dim A^i for 0 ≤ i ≤ n−1: coefficients of Π_{k=1}^{n−1}(1 + k·t).
pub fn dims(n: u32) -> Vec<u64> {
    assert!(n >= 1, "the algebra needs at least one strand");
    let mut coeffs = vec![1u64];
    for k in 1..n as u64 {
        let mut next = vec![0u64; coeffs.len() + 1];
        for (d, &c) in coeffs.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * k;
        }
        coeffs = next;
    }
    coeffs
}

/// nbc monomials of degree i whose edges touch at least p of the n
/// elements.
pub fn filtration_basis(n: u32, p: u32, degree: u32) -> Vec<Monomial> {
    basis(n, degree)
        .into_iter()
        .filter(|m| {
            let mut touched = vec![false; n as usize];
            for &(i, j) in m {
                touched[(i - 1) as usize] = true;
                touched[(j - 1) as usize] = true;
            }
            touched.iter().filter(|&&t| t).count() as u32 >= p
        })
        .collect()
}
