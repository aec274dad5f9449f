//! Exact symmetric functions of bounded degree.
//!
//! Values are stored in the power-sum basis with arbitrary-precision
//! rational coefficients; the h, e and s forms are derived views
//! ([`SymFn::convert`]). Products and plethysm are cheap in p, while
//! integrality of the Schur view of a genuine character is itself a
//! checked property rather than a representation invariant.
//!
//! A process-global degree cap (default 16) bounds the homogeneous degree
//! any operation is allowed to produce; degree-raising operations return
//! [`SymFnError::DegreeCapExceeded`] past it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use partition_core::{Partition, PartitionError};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering};

mod basis;
mod chartable;
mod convert;
mod pieri;
mod plethysm;
mod schur;

pub use basis::{Basis, Expansion};
pub use chartable::{character_table, CharTable};
pub use pieri::{horizontal_strips_over, pieri_h};
pub use plethysm::{clear_plethysm_cache, plethysm, plethysm_cache_dir};
pub use schur::schur_alpha;

/// Exact rational scalar used throughout the workspace.
pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymFnError {
    #[error("operation would reach degree {degree}, above the cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("bound of the zero symmetric function is undefined")]
    UndefinedBound,
    #[error("bad coefficient literal {0:?}")]
    BadCoeff(String),
    #[error("bad symmetric function JSON: {0}")]
    BadJson(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

static DEGREE_CAP: AtomicU32 = AtomicU32::new(16);

/// Current homogeneous degree cap.
pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Raise or lower the cap. Process-global; intended to be set once at
/// startup from a budget flag, not toggled mid-computation.
pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn ensure_degree(degree: u32) -> Result<(), SymFnError> {
    let cap = degree_cap();
    if degree > cap {
        Err(SymFnError::DegreeCapExceeded { degree, cap })
    } else {
        Ok(())
    }
}

/// A symmetric function with exact rational coefficients, held in the
/// power-sum basis. Zero coefficients are never stored, so `==` is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFn {
    terms: BTreeMap<Partition, Q>,
}

impl SymFn {
    pub fn zero() -> Self {
        SymFn::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Partition::empty(), c);
        }
        SymFn { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// p_n for n ≥ 1; p_0 is taken as 1.
    pub fn p(n: u32) -> Result<Self, SymFnError> {
        ensure_degree(n)?;
        Ok(SymFn::monomial(Partition::row(n), Q::one()))
    }

    /// The monomial p_λ.
    pub fn p_lambda(lambda: &Partition) -> Result<Self, SymFnError> {
        ensure_degree(lambda.size())?;
        Ok(SymFn::monomial(lambda.clone(), Q::one()))
    }

    pub fn h(n: u32) -> Result<Self, SymFnError> {
        ensure_degree(n)?;
        Ok(SymFn { terms: convert::h_in_p(n).as_ref().clone() })
    }

    pub fn e(n: u32) -> Result<Self, SymFnError> {
        ensure_degree(n)?;
        Ok(SymFn { terms: convert::e_in_p(n).as_ref().clone() })
    }

    pub fn h_lambda(lambda: &Partition) -> Result<Self, SymFnError> {
        ensure_degree(lambda.size())?;
        let mut acc = SymFn::one();
        for &part in lambda.parts() {
            acc = acc.multiply(&SymFn::h(part)?)?;
        }
        Ok(acc)
    }

    pub fn e_lambda(lambda: &Partition) -> Result<Self, SymFnError> {
        ensure_degree(lambda.size())?;
        let mut acc = SymFn::one();
        for &part in lambda.parts() {
            acc = acc.multiply(&SymFn::e(part)?)?;
        }
        Ok(acc)
    }

    pub fn s(lambda: &Partition) -> Result<Self, SymFnError> {
        ensure_degree(lambda.size())?;
        Ok(convert::schur_in_p(lambda))
    }

    fn monomial(lambda: Partition, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        SymFn { terms }
    }

    /// Builds from explicit p-basis terms, merging duplicates.
    pub fn from_p_terms<I>(terms: I) -> Result<Self, SymFnError>
    where
        I: IntoIterator<Item = (Partition, Q)>,
    {
        let mut f = SymFn::zero();
        for (lambda, c) in terms {
            ensure_degree(lambda.size())?;
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    /// p-basis terms in the fixed partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of p_λ.
    pub fn p_coeff(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Largest homogeneous degree present, None for the zero function.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Partition::size)
    }

    /// Smallest homogeneous degree present, None for the zero function.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Partition::size)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// The degree-n homogeneous component.
    pub fn component(&self, n: u32) -> SymFn {
        SymFn {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        ds.dedup();
        ds
    }

    /// Drops all terms of degree above d.
    pub fn truncate_above(&self, d: u32) -> SymFn {
        SymFn {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() <= d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Q) -> SymFn {
        if c.is_zero() {
            return SymFn::zero();
        }
        SymFn {
            terms: self.terms.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
        }
    }

    /// Graded product. Errors if the result would exceed the degree cap.
    pub fn multiply(&self, other: &SymFn) -> Result<SymFn, SymFnError> {
        if let (Some(a), Some(b)) = (self.max_degree(), other.max_degree()) {
            ensure_degree(a + b)?;
        }
        Ok(self.multiply_raw(other, u32::MAX))
    }

    /// Product with all terms of degree above `max_deg` discarded. This is
    /// the workhorse for truncated generating-function arithmetic and never
    /// trips the degree cap.
    pub fn multiply_truncated(&self, other: &SymFn, max_deg: u32) -> SymFn {
        self.multiply_raw(other, max_deg)
    }

    fn multiply_raw(&self, other: &SymFn, max_deg: u32) -> SymFn {
        let mut out = SymFn::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                if la.size() + lb.size() > max_deg {
                    continue;
                }
                out.add_term(merge_parts(la, lb), ca * cb);
            }
        }
        out
    }

    /// ω, the involution with ω(p_n) = (−1)^{n−1} p_n.
    pub fn omega(&self) -> SymFn {
        SymFn {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| {
                    let c = if l.rank() % 2 == 0 { c.clone() } else { -c.clone() };
                    (l.clone(), c)
                })
                .collect(),
        }
    }

    /// Hall inner product, via ⟨p_λ, p_μ⟩ = z_λ [λ=μ].
    pub fn hall_inner(&self, other: &SymFn) -> Q {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Q::zero();
        for (l, a) in &small.terms {
            if let Some(b) = large.terms.get(l) {
                acc += a * b * Q::from_integer(BigInt::from(l.z()));
            }
        }
        acc
    }

    /// Formal ∂/∂p₁; under ch this is restriction to the next symmetric
    /// group down.
    pub fn d_dp1(&self) -> SymFn {
        let mut out = SymFn::zero();
        for (l, c) in &self.terms {
            let m1 = l.multiplicity(1);
            if m1 == 0 {
                continue;
            }
            let shorter: Vec<u32> = l.parts()[..l.length() - 1].to_vec();
            out.add_term(
                Partition::new(shorter).expect("removing a trailing part keeps validity"),
                c * q_int(m1 as i64),
            );
        }
        out
    }

    /// Multiplication by p₁; adjoint of [`SymFn::d_dp1`] under the Hall
    /// pairing, and the image of induction under ch.
    pub fn mul_p1(&self) -> Result<SymFn, SymFnError> {
        if let Some(d) = self.max_degree() {
            ensure_degree(d + 1)?;
        }
        let mut out = SymFn::zero();
        for (l, c) in &self.terms {
            let mut parts = l.parts().to_vec();
            parts.push(1);
            out.add_term(Partition::new(parts).expect("appending 1 keeps validity"), c.clone());
        }
        Ok(out)
    }

    /// Largest first part over the Schur support: the sharp N such that
    /// every constituent s_λ has λ₁ ≤ N. Errors on the zero function.
    pub fn bounded_by(&self) -> Result<u32, SymFnError> {
        if self.is_zero() {
            return Err(SymFnError::UndefinedBound);
        }
        let exp = self.convert(Basis::S);
        Ok(exp
            .terms
            .keys()
            .map(Partition::first_part)
            .max()
            .expect("nonzero function has a nonempty Schur support"))
    }
}

pub(crate) fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted positive parts")
}

impl Add for &SymFn {
    type Output = SymFn;
    fn add(self, rhs: &SymFn) -> SymFn {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFn {
    type Output = SymFn;
    fn sub(self, rhs: &SymFn) -> SymFn {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymFn {
    type Output = SymFn;
    fn neg(self) -> SymFn {
        SymFn {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect(),
        }
    }
}

impl std::fmt::Debug for SymFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.convert(Basis::P))
    }
}

pub(crate) fn coeff_to_string(q: &Q) -> String {
    // "a/b" in lowest terms, "/b" omitted for integers; BigRational's
    // Display already does exactly this.
    q.to_string()
}

pub(crate) fn coeff_from_str(s: &str) -> Result<Q, SymFnError> {
    let bad = || SymFnError::BadCoeff(s.to_string());
    let t = s.trim();
    let q = match t.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Q::new(n, d)
        }
        None => Q::from_integer(t.parse().map_err(|_| bad())?),
    };
    Ok(q)
}

pub(crate) fn q_is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::pt;

    #[test]
    fn power_sums_multiply_by_concatenation() {
        let f = SymFn::p(2).unwrap().multiply(&SymFn::p(3).unwrap()).unwrap();
        assert_eq!(f, SymFn::p_lambda(&pt("3,2")).unwrap());
    }

    #[test]
    fn unit_and_zero() {
        let f = SymFn::s(&pt("2,1")).unwrap();
        assert_eq!(f.multiply(&SymFn::one()).unwrap(), f);
        assert!(f.multiply(&SymFn::zero()).unwrap().is_zero());
        assert_eq!(&f - &f, SymFn::zero());
    }

    #[test]
    fn omega_sign_rule() {
        assert_eq!(SymFn::p(2).unwrap().omega(), -&SymFn::p(2).unwrap());
        let p3 = SymFn::p(3).unwrap();
        assert_eq!(p3.omega(), p3);
    }

    #[test]
    fn hall_on_power_sums() {
        let p3 = SymFn::p(3).unwrap();
        assert_eq!(p3.hall_inner(&p3), q_int(3));
        let p111 = SymFn::p_lambda(&pt("1,1,1")).unwrap();
        assert_eq!(p111.hall_inner(&p111), q_int(6));
        assert_eq!(p3.hall_inner(&p111), q_int(0));
    }

    #[test]
    fn d_dp1_basics() {
        let p1sq = SymFn::p_lambda(&pt("1,1")).unwrap();
        assert_eq!(p1sq.d_dp1(), SymFn::p(1).unwrap().scaled(&q_int(2)));
        let p2 = SymFn::p(2).unwrap();
        assert!(p2.d_dp1().is_zero());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let cap = degree_cap();
        let h = SymFn::h(cap).unwrap();
        let err = h.multiply(&SymFn::p(1).unwrap()).unwrap_err();
        assert!(matches!(err, SymFnError::DegreeCapExceeded { .. }));
        assert!(SymFn::h(cap + 1).is_err());
        // Truncated products stay usable at the cap boundary.
        assert!(h.multiply_truncated(&SymFn::p(1).unwrap(), cap).is_zero());
    }

    #[test]
    fn coeff_literals() {
        assert_eq!(coeff_to_string(&q_frac(-3, 6)), "-1/2");
        assert_eq!(coeff_to_string(&q_int(4)), "4");
        assert_eq!(coeff_from_str("7").unwrap(), q_int(7));
        assert_eq!(coeff_from_str("-2/4").unwrap(), q_frac(-1, 2));
        assert!(coeff_from_str("1/0").is_err());
        assert!(coeff_from_str("x").is_err());
    }

    #[test]
    fn component_split() {
        let f = &SymFn::h(3).unwrap() + &SymFn::p(1).unwrap();
        assert_eq!(f.degrees(), vec![1, 3]);
        assert_eq!(f.component(3), SymFn::h(3).unwrap());
        assert_eq!(f.component(2), SymFn::zero());
        assert!(!f.is_homogeneous());
    }
}
