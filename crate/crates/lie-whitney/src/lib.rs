//! Higher Lie characters, Whitney homology of the partition lattice, and
//! the identities tying them together.
//!
//! ℓ_n is built from the Möbius-function formula; everything else stacks
//! plethysms on top of it. The row and column recurrences, the Euler-sum
//! identity and the generating-function product formulas are *verified*
//! against these definitions rather than used to compute them, so the two
//! routes stay independent.

mod gf;

pub use gf::check_product_gf;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use partition_core::{partitions_filtered, Partition, PartitionFilter};
use symfunc_engine::{plethysm, q_frac, SymFn, SymFnError};
use tableaux::enumerate_all_syt;

/// Which of the two families a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HatKind {
    Lie,
    W,
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

pub(crate) fn moebius(n: u32) -> i64 {
    let mut m = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if m > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// ℓ_n = (1/n) Σ_{d|n} μ(d) p_d^{n/d}, the character of the degree-n piece
/// of the free Lie algebra.
pub fn ell(n: u32) -> Result<SymFn, SymFnError> {
    assert!(n >= 1, "ell is defined for n >= 1");
    let mut terms = Vec::new();
    for d in divisors(n) {
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let lam = Partition::new(vec![d; (n / d) as usize]).expect("rectangular shape");
        terms.push((lam, q_frac(mu, i64::from(n))));
    }
    SymFn::from_p_terms(terms)
}

/// π_n = ω(ℓ_n), the sign-twisted Lie character.
pub fn pi(n: u32) -> Result<SymFn, SymFnError> {
    Ok(ell(n)?.omega())
}

/// ch of the higher Lie character indexed by cycle type λ:
/// Π_j h_{m_j}[ℓ_j] over the distinct part sizes j.
pub fn lie_lambda(lambda: &Partition) -> Result<SymFn, SymFnError> {
    let mut acc = SymFn::one();
    for (j, m) in lambda.multiplicities() {
        let factor = plethysm(&SymFn::h(m)?, &ell(j)?)?;
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}

/// ch of the Whitney-homology summand for cycle type λ:
/// h_{m_j}[π_j] for odd j, e_{m_j}[π_j] for even j.
pub fn w_lambda(lambda: &Partition) -> Result<SymFn, SymFnError> {
    let mut acc = SymFn::one();
    for (j, m) in lambda.multiplicities() {
        let outer = if j % 2 == 1 { SymFn::h(m)? } else { SymFn::e(m)? };
        let factor = plethysm(&outer, &pi(j)?)?;
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}

/// On-demand table of one hatted family, keyed by (rank, size).
#[derive(Debug)]
pub struct HatFamily {
    kind: HatKind,
    entries: Mutex<HashMap<(u32, u32), SymFn>>,
}

impl HatFamily {
    pub fn new(kind: HatKind) -> Self {
        Self { kind, entries: Mutex::new(HashMap::new()) }
    }

    pub fn kind(&self) -> HatKind {
        self.kind
    }

    /// Entry at rank i and size m: the sum of the family's characters over
    /// cycle types of m with no fixed points and rank i. Zero outside
    /// i+1 ≤ m ≤ 2i, except for the empty partition at (0,0).
    pub fn entry(&self, i: u32, m: u32) -> Result<SymFn, SymFnError> {
        if i == 0 {
            return if m == 0 { Ok(SymFn::one()) } else { Ok(SymFn::zero()) };
        }
        if m < i + 1 || m > 2 * i {
            return Ok(SymFn::zero());
        }
        if let Some(hit) = self.entries.lock().unwrap().get(&(i, m)) {
            return Ok(hit.clone());
        }
        let filter = PartitionFilter { min_part: Some(2), exact_rank: Some(i) };
        let mut acc = SymFn::zero();
        for lam in partitions_filtered(m, &filter) {
            let term = match self.kind {
                HatKind::Lie => lie_lambda(&lam)?,
                HatKind::W => w_lambda(&lam)?,
            };
            acc = &acc + &term;
        }
        self.entries.lock().unwrap().insert((i, m), acc.clone());
        Ok(acc)
    }
}

fn hat_table(kind: HatKind) -> &'static HatFamily {
    static LIE: OnceLock<HatFamily> = OnceLock::new();
    static W: OnceLock<HatFamily> = OnceLock::new();
    match kind {
        HatKind::Lie => LIE.get_or_init(|| HatFamily::new(HatKind::Lie)),
        HatKind::W => W.get_or_init(|| HatFamily::new(HatKind::W)),
    }
}

/// L̂ie^i_m or Ŵ^i_m from the process-wide table.
pub fn hat_entry(kind: HatKind, i: u32, m: u32) -> Result<SymFn, SymFnError> {
    hat_table(kind).entry(i, m)
}

/// The full rank-i aggregate Σ_m X̂^i_m, supported on i+1 ≤ m ≤ 2i.
pub fn hat_aggregate(kind: HatKind, i: u32) -> Result<SymFn, SymFnError> {
    if i == 0 {
        return Ok(SymFn::one());
    }
    let mut acc = SymFn::zero();
    for m in i + 1..=2 * i {
        acc = &acc + &hat_entry(kind, i, m)?;
    }
    Ok(acc)
}

/// WH_i(Π_n): the rank-i Whitney homology, summed over all cycle types of
/// n with rank i.
pub fn whitney_homology(i: u32, n: u32) -> Result<SymFn, SymFnError> {
    rank_sum(HatKind::W, i, n)
}

/// Lie^i_n: the rank-i graded piece of the full higher Lie decomposition.
pub fn lie_graded(i: u32, n: u32) -> Result<SymFn, SymFnError> {
    rank_sum(HatKind::Lie, i, n)
}

fn rank_sum(kind: HatKind, i: u32, n: u32) -> Result<SymFn, SymFnError> {
    let filter = PartitionFilter { min_part: None, exact_rank: Some(i) };
    let mut acc = SymFn::zero();
    for lam in partitions_filtered(n, &filter) {
        let term = match kind {
            HatKind::Lie => lie_lambda(&lam)?,
            HatKind::W => w_lambda(&lam)?,
        };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// ch of the reduced cohomology H^i of the configuration space of n
/// labeled points in R^d. Vanishes unless (d−1) | i; otherwise it is the
/// graded Lie character (d odd) or Whitney homology (d even) at i/(d−1).
pub fn conf_cohomology(n: u32, d: u32, i: u32) -> Result<SymFn, SymFnError> {
    assert!(d >= 2, "configuration spaces need d >= 2");
    if !i.is_multiple_of(d - 1) {
        return Ok(SymFn::zero());
    }
    let j = i / (d - 1);
    if d % 2 == 1 {
        lie_graded(j, n)
    } else {
        whitney_homology(j, n)
    }
}

/// The degree-one virtual character τ_n: h_n for n ≤ 3, then
/// s_{(3,1^{n−3})} − s_{(2,2,1^{n−4})}.
pub fn tau(n: u32) -> Result<SymFn, SymFnError> {
    if n <= 3 {
        return SymFn::h(n);
    }
    let mut hook = vec![3u32];
    hook.extend(std::iter::repeat_n(1, (n - 3) as usize));
    let mut fat = vec![2u32, 2];
    fat.extend(std::iter::repeat_n(1, (n - 4) as usize));
    let a = SymFn::s(&Partition::new(hook).expect("hook shape"))?;
    let b = SymFn::s(&Partition::new(fat).expect("fat hook shape"))?;
    Ok(&a - &b)
}

/// κ_n = Σ_i L̂ie^i_n, the full fixed-point-free Lie character at size n.
pub fn kappa(n: u32) -> Result<SymFn, SymFnError> {
    row_sum(HatKind::Lie, n)
}

/// ν_n = Σ_i Ŵ^i_n.
pub fn nu(n: u32) -> Result<SymFn, SymFnError> {
    row_sum(HatKind::W, n)
}

fn row_sum(kind: HatKind, n: u32) -> Result<SymFn, SymFnError> {
    let mut acc = SymFn::zero();
    for i in 0..=n {
        acc = &acc + &hat_entry(kind, i, n)?;
    }
    Ok(acc)
}

/// Checks κ_n = p₁κ_{n−1} + (−1)ⁿ e_n and ν_n = p₁ν_{n−1} + (−1)ⁿ τ_n.
pub fn verify_row_recurrence(n: u32) -> Result<bool, SymFnError> {
    assert!(n >= 1);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let kap = kappa(n)?;
    let kap_rhs = &kappa(n - 1)?.mul_p1()? + &SymFn::e(n)?.scaled(&q_frac(sign, 1));
    let nu_n = nu(n)?;
    let nu_rhs = &nu(n - 1)?.mul_p1()? + &tau(n)?.scaled(&q_frac(sign, 1));
    Ok(kap == kap_rhs && nu_n == nu_rhs)
}

/// Checks the restriction recurrence
/// ∂/∂p₁ X^i_n = p₁ ∂/∂p₁ X^{i−1}_{n−1} + p₁ X^{i−1}_{n−2}
/// for both hatted families.
pub fn verify_wg_recurrence(n: u32, i: u32) -> Result<bool, SymFnError> {
    assert!(n >= 2 && i >= 1);
    for kind in [HatKind::Lie, HatKind::W] {
        let lhs = hat_entry(kind, i, n)?.d_dp1();
        let inner = hat_entry(kind, i - 1, n - 1)?.d_dp1().mul_p1()?;
        let shift = hat_entry(kind, i - 1, n - 2)?.mul_p1()?;
        if lhs != &inner + &shift {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Σ_i (−1)^i Ŵ^i_n, which collapses to (−1)^{n−1} s_{(2,1^{n−2})}.
pub fn euler_hat_w(n: u32) -> Result<SymFn, SymFnError> {
    assert!(n >= 2);
    let mut acc = SymFn::zero();
    for i in 0..=n {
        let term = hat_entry(HatKind::W, i, n)?;
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// ℓ_n recomputed from the major-index description: the sum of s_{shape(Q)}
/// over standard tableaux of size n with maj(Q) ≡ 1 mod n.
pub fn ell_via_maj(n: u32) -> Result<SymFn, SymFnError> {
    assert!(n >= 2);
    let mut acc = SymFn::zero();
    for q in enumerate_all_syt(n) {
        if q.maj() % n == 1 {
            acc = &acc + &SymFn::s(&q.shape())?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::pt;
    use symfunc_engine::q_int;

    #[test]
    fn moebius_small_values() {
        let want = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(moebius(k as u32 + 1), *w, "mu({})", k + 1);
        }
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn ell_base_cases() {
        assert_eq!(ell(1).unwrap(), SymFn::s(&pt("1")).unwrap());
        assert_eq!(ell(2).unwrap(), SymFn::s(&pt("1,1")).unwrap());
        assert_eq!(pi(2).unwrap(), SymFn::h(2).unwrap());
        assert_eq!(pi(3).unwrap(), SymFn::s(&pt("2,1")).unwrap());
        assert_eq!(pi(1).unwrap(), SymFn::s(&pt("1")).unwrap());
    }

    #[test]
    fn ell_six_expansion() {
        let got = ell(6).unwrap();
        let want: &[(&str, i64)] = &[
            ("5,1", 1),
            ("4,2", 1),
            ("4,1,1", 2),
            ("3,3", 1),
            ("3,2,1", 3),
            ("3,1,1,1", 1),
            ("2,2,1,1", 2),
            ("2,1,1,1,1", 1),
        ];
        let mut acc = SymFn::zero();
        for (lam, c) in want {
            acc = &acc + &SymFn::s(&pt(lam)).unwrap().scaled(&q_int(*c));
        }
        assert_eq!(got, acc);
    }

    #[test]
    fn small_family_members() {
        assert_eq!(
            lie_lambda(&pt("2,2")).unwrap(),
            &SymFn::s(&pt("2,2")).unwrap() + &SymFn::s(&pt("1,1,1,1")).unwrap()
        );
        assert_eq!(w_lambda(&pt("2,2")).unwrap(), SymFn::s(&pt("3,1")).unwrap());
        assert_eq!(lie_lambda(&pt("1,1,1")).unwrap(), SymFn::h(3).unwrap());
        assert_eq!(lie_lambda(&Partition::empty()).unwrap(), SymFn::one());
    }

    #[test]
    fn hat_entries_follow_support_window() {
        assert_eq!(
            hat_entry(HatKind::W, 3, 4).unwrap(),
            &SymFn::s(&pt("3,1")).unwrap() + &SymFn::s(&pt("2,1,1")).unwrap()
        );
        let lie45: SymFn = ["4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1"]
            .iter()
            .fold(SymFn::zero(), |acc, s| &acc + &SymFn::s(&pt(s)).unwrap());
        assert_eq!(hat_entry(HatKind::Lie, 4, 5).unwrap(), lie45);
        assert!(hat_entry(HatKind::W, 2, 6).unwrap().is_zero());
        assert_eq!(hat_entry(HatKind::Lie, 0, 0).unwrap(), SymFn::one());
        assert!(hat_entry(HatKind::Lie, 0, 3).unwrap().is_zero());
    }

    #[test]
    fn graded_pieces_and_configuration_spaces() {
        let wh24 = whitney_homology(2, 4).unwrap();
        let want = &(&SymFn::s(&pt("3,1")).unwrap().scaled(&q_int(2))
            + &SymFn::s(&pt("2,2")).unwrap())
            + &SymFn::s(&pt("2,1,1")).unwrap();
        assert_eq!(wh24, want);
        assert_eq!(whitney_homology(0, 5).unwrap(), SymFn::h(5).unwrap());
        for n in 1..=6u32 {
            assert_eq!(lie_graded(n - 1, n).unwrap(), ell(n).unwrap(), "n = {n}");
        }

        assert!(conf_cohomology(4, 3, 3).unwrap().is_zero());
        assert_eq!(conf_cohomology(4, 2, 2).unwrap(), wh24);
        let expected = SymFn::e(2)
            .unwrap()
            .multiply(&SymFn::h(2).unwrap())
            .unwrap();
        assert_eq!(conf_cohomology(4, 3, 2).unwrap(), expected);
    }

    #[test]
    fn tau_small_cases() {
        assert_eq!(tau(2).unwrap(), SymFn::h(2).unwrap());
        assert_eq!(
            tau(4).unwrap(),
            &SymFn::s(&pt("3,1")).unwrap() - &SymFn::s(&pt("2,2")).unwrap()
        );
        assert_eq!(tau(5).unwrap().d_dp1(), tau(4).unwrap());
    }

    #[test]
    fn row_sums_small_cases() {
        assert_eq!(kappa(0).unwrap(), SymFn::one());
        assert!(kappa(1).unwrap().is_zero());
        assert!(nu(1).unwrap().is_zero());
        assert_eq!(nu(0).unwrap(), SymFn::one());
        assert_eq!(kappa(2).unwrap(), SymFn::s(&pt("1,1")).unwrap());
        assert_eq!(
            nu(4).unwrap(),
            &SymFn::s(&pt("3,1")).unwrap().scaled(&q_int(2)) + &SymFn::s(&pt("2,1,1")).unwrap()
        );
    }

    #[test]
    fn recurrences_at_the_small_end() {
        assert!(verify_row_recurrence(2).unwrap());
        assert!(verify_row_recurrence(4).unwrap());
        assert!(verify_wg_recurrence(2, 1).unwrap());
        assert!(verify_wg_recurrence(4, 3).unwrap());
    }

    #[test]
    fn euler_sum_collapses() {
        assert_eq!(
            euler_hat_w(4).unwrap(),
            SymFn::s(&pt("2,1,1")).unwrap().scaled(&q_int(-1))
        );
        assert_eq!(
            euler_hat_w(2).unwrap(),
            SymFn::s(&pt("2")).unwrap().scaled(&q_int(-1))
        );
    }

    #[test]
    fn maj_route_agrees() {
        assert_eq!(ell_via_maj(2).unwrap(), SymFn::s(&pt("1,1")).unwrap());
        assert_eq!(ell_via_maj(3).unwrap(), SymFn::s(&pt("2,1")).unwrap());
        assert_eq!(ell_via_maj(6).unwrap(), ell(6).unwrap());
    }
}
