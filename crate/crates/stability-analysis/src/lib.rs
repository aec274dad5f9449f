//! Representation-stability machinery: padded character sequences, sharp
//! stabilization onsets, refined multiplicities and polynomial statistics.

mod poly;

pub use poly::{ch_binomial, PolynomialStatistic};

use lie_whitney::{hat_aggregate, HatKind};
use num_traits::{Signed, Zero};
use partition_core::{Partition, PartitionError};
use sn_characters::{CharError, ClassFunction};
use symfunc_engine::{Basis, Expansion, Q, SymFn, SymFnError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StabilityError {
    #[error("onset undefined for virtual characters")]
    VirtualCharacter,
    #[error("bad polynomial literal: {0}")]
    BadPolynomial(String),
    #[error(transparent)]
    Sym(#[from] SymFnError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Whether the ambient Euclidean dimension is odd or even; picks the Lie or
/// Whitney side of the configuration-space dictionary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    DOdd,
    DEven,
}

impl Parity {
    pub fn kind(self) -> HatKind {
        match self {
            Parity::DOdd => HatKind::Lie,
            Parity::DEven => HatKind::W,
        }
    }
}

/// M_n of a (possibly inhomogeneous) characteristic: each degree-m
/// component is padded by h_{n−m}; components above n vanish.
pub fn m_n(f: &SymFn, n: u32) -> Result<SymFn, SymFnError> {
    let mut acc = SymFn::zero();
    for m in f.degrees() {
        if m <= n {
            acc = &acc + &f.component(m).multiply(&SymFn::h(n - m)?)?;
        }
    }
    Ok(acc)
}

/// Adds m to the first row of every shape in the Schur support.
pub fn pad(f: &SymFn, m: u32) -> Result<SymFn, SymFnError> {
    let exp = f.convert(Basis::S);
    let terms = exp
        .terms
        .into_iter()
        .map(|(lam, c)| (lam.pad_first_row(m), c))
        .collect();
    SymFn::from_expansion(&Expansion { basis: Basis::S, terms })
}

/// [`pad`] on the class-function view.
pub fn pad_character(chi: &ClassFunction, m: u32) -> Result<ClassFunction, StabilityError> {
    let f = pad(&chi.frobenius_ch()?, m)?;
    Ok(ClassFunction::from_symfn(&f, chi.n() + m)?)
}

/// A character sequence n ↦ M_n(χ) determined by its generator.
#[derive(Debug, Clone)]
pub struct CharacterSequence {
    generator: SymFn,
}

impl CharacterSequence {
    pub fn new(generator: SymFn) -> Self {
        Self { generator }
    }

    pub fn generator(&self) -> &SymFn {
        &self.generator
    }

    pub fn at(&self, n: u32) -> Result<SymFn, SymFnError> {
        m_n(&self.generator, n)
    }
}

/// The sharp stabilization onset max{|μ|+μ₁ : c_μ ≠ 0} of n ↦ M_n(χ).
/// Zero input gives 0. Virtual input is rejected.
pub fn onset_of_m(chi: &SymFn) -> Result<u32, StabilityError> {
    let exp = chi.convert(Basis::S);
    let mut onset = 0;
    for (lam, c) in &exp.terms {
        if c.is_negative() {
            return Err(StabilityError::VirtualCharacter);
        }
        onset = onset.max(lam.size() + lam.first_part());
    }
    Ok(onset)
}

/// Independent onset search: the least n₀ ≤ n_max such that
/// M_{n+1}(χ) = M_n(χ)^{(+1)} for every n₀ ≤ n < n_max. Accepts virtual
/// input; the window must extend past the true onset to be meaningful.
pub fn onset_bruteforce(chi: &SymFn, n_max: u32) -> Result<u32, StabilityError> {
    let seq = CharacterSequence::new(chi.clone());
    let mut onset = 0;
    let mut current = seq.at(0)?;
    for n in 0..n_max {
        let next = seq.at(n + 1)?;
        if pad(&current, 1)? != next {
            onset = n + 1;
        }
        current = next;
    }
    Ok(onset)
}

/// ⟨χ^{(n−|ν|,ν)}, M_n(χ^μ)⟩ from the horizontal-strip criterion: it is 1
/// exactly when ν ⊆ μ, μ/ν is a horizontal strip and n ≥ |ν| + μ₁.
pub fn refined_pairing(nu: &Partition, mu: &Partition, n: u32) -> i64 {
    if n < nu.size() + nu.first_part() {
        // (n−|ν|, ν) is not a partition
        return 0;
    }
    let fits = mu.contains(nu) && mu.horizontal_strip_over(nu);
    if fits && n >= nu.size() + mu.first_part() {
        1
    } else {
        0
    }
}

/// f_{i,ν}(n): the multiplicity of χ^{(n−|ν|,ν)} in the degree-i(d−1)
/// cohomology of the configuration space of n points, for either parity of
/// d. Computed termwise from the hatted aggregate, so it is cheap even for
/// very large n.
pub fn refined_multiplicity(
    i: u32,
    nu: &Partition,
    n: u32,
    parity: Parity,
) -> Result<i64, StabilityError> {
    let aggregate = hat_aggregate(parity.kind(), i)?;
    let exp = aggregate.convert(Basis::S);
    let mut total = 0;
    for (mu, c) in &exp.terms {
        debug_assert!(c.is_integer());
        total += c.to_integer().try_into().unwrap_or(0i64) * refined_pairing(nu, mu, n);
    }
    Ok(total)
}

/// Outcome of a pairing sweep ⟨χ_P, M_n(χ)⟩ for n ≤ window_end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingReport {
    pub observed_onset: u32,
    pub predicted_bound: u32,
    pub stable_value: Q,
    pub window_end: u32,
    /// Window reached the theorem bound, so the observed onset is final.
    pub certified: bool,
}

/// Sweeps ⟨χ_P, M_n(χ)⟩ for 0 ≤ n ≤ n_max against the bound
/// max{2 deg P, deg P + b} with b the Schur first-row bound of χ.
pub fn pairing_stability(
    p: &PolynomialStatistic,
    chi: &SymFn,
    n_max: u32,
) -> Result<PairingReport, StabilityError> {
    let b = chi.bounded_by()?;
    let deg = p.degree().unwrap_or(0);
    let predicted = (2 * deg).max(deg + b);
    let seq = CharacterSequence::new(chi.clone());
    let mut observed = 0;
    let mut last: Option<Q> = None;
    for n in 0..=n_max {
        let value = p.ch(n)?.hall_inner(&seq.at(n)?);
        if last.as_ref() != Some(&value) {
            observed = n;
        }
        last = Some(value);
    }
    let stable_value = last.unwrap_or_else(Q::zero);
    let certified = n_max >= predicted && observed <= predicted;
    assert!(
        observed <= predicted || n_max < predicted,
        "pairing failed to stabilize by the predicted bound"
    );
    Ok(PairingReport {
        observed_onset: observed,
        predicted_bound: predicted,
        stable_value,
        window_end: n_max,
        certified,
    })
}

/// One line of the headline-onset verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnsetRow {
    pub i: u32,
    pub lie_onset: u32,
    pub w_onset: u32,
    pub bruteforce_agrees: bool,
}

impl OnsetRow {
    pub fn passes(&self) -> bool {
        self.lie_onset == 3 * self.i && self.w_onset == 3 * self.i + 1 && self.bruteforce_agrees
    }
}

/// For 1 ≤ i ≤ i_max, computes the sharp onsets of the two hatted
/// aggregates, which the stability theorem pins at 3i and 3i+1, and
/// cross-checks each against the direct padding comparison.
pub fn verify_theorem_1_1(i_max: u32) -> Result<Vec<OnsetRow>, StabilityError> {
    let mut rows = Vec::new();
    for i in 1..=i_max {
        let lie = hat_aggregate(HatKind::Lie, i)?;
        let w = hat_aggregate(HatKind::W, i)?;
        let lie_onset = onset_of_m(&lie)?;
        let w_onset = onset_of_m(&w)?;
        let window = (3 * i + 1) + 2;
        let bruteforce_agrees = onset_bruteforce(&lie, window)? == lie_onset
            && onset_bruteforce(&w, window)? == w_onset;
        rows.push(OnsetRow { i, lie_onset, w_onset, bruteforce_agrees });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::pt;
    use symfunc_engine::{plethysm, q_int};

    fn s(lit: &str) -> SymFn {
        SymFn::s(&pt(lit)).unwrap()
    }

    #[test]
    fn padding_shifts_first_rows() {
        assert_eq!(pad(&s("2,1"), 2).unwrap(), s("4,1"));
        assert_eq!(pad(&s("1,1"), 1).unwrap(), s("2,1"));
        let f = &s("2,1") + &s("1,1,1").scaled(&q_int(3));
        let twice = pad(&pad(&f, 1).unwrap(), 1).unwrap();
        assert_eq!(twice, pad(&f, 2).unwrap());
        let chi = ClassFunction::irreducible(&pt("2,1")).unwrap();
        let padded = pad_character(&chi, 2).unwrap();
        assert_eq!(padded, ClassFunction::irreducible(&pt("4,1")).unwrap());
    }

    #[test]
    fn onset_formula_examples() {
        assert_eq!(onset_of_m(&s("2")).unwrap(), 4);
        let w2 = &s("2,1") + &s("3,1");
        assert_eq!(onset_of_m(&w2).unwrap(), 7);
        let h3_of_ell2 =
            plethysm(&SymFn::h(3).unwrap(), &lie_whitney::ell(2).unwrap()).unwrap();
        assert_eq!(onset_of_m(&h3_of_ell2).unwrap(), 9);
        assert_eq!(onset_of_m(&SymFn::zero()).unwrap(), 0);
        let virt = &s("2") - &s("1,1");
        assert!(matches!(
            onset_of_m(&virt),
            Err(StabilityError::VirtualCharacter)
        ));
    }

    #[test]
    fn bruteforce_onsets_match() {
        assert_eq!(onset_bruteforce(&s("2"), 6).unwrap(), 4);
        assert_eq!(onset_bruteforce(&s("1"), 5).unwrap(), 2);
        assert_eq!(onset_bruteforce(&SymFn::one(), 4).unwrap(), 0);
    }

    #[test]
    fn refined_multiplicity_examples() {
        assert_eq!(
            refined_multiplicity(2, &pt("1"), 40, Parity::DEven).unwrap(),
            2
        );
        for n in [2u32, 5, 9, 30] {
            assert_eq!(
                refined_multiplicity(2, &Partition::empty(), n, Parity::DEven).unwrap(),
                0,
                "n = {n}"
            );
            assert_eq!(
                refined_multiplicity(3, &Partition::empty(), n, Parity::DEven).unwrap(),
                0,
                "n = {n}"
            );
        }
        // |ν| beyond 2i forces zero
        assert_eq!(
            refined_multiplicity(1, &pt("2,1"), 25, Parity::DOdd).unwrap(),
            0
        );
        assert_eq!(
            refined_multiplicity(2, &pt("3,1,1"), 25, Parity::DEven).unwrap(),
            0
        );
    }

    #[test]
    fn pairing_sweep_examples() {
        let x1: PolynomialStatistic = "b(1,1)".parse().unwrap();
        let report = pairing_stability(&x1, &s("2"), 8).unwrap();
        assert_eq!(report.observed_onset, 3);
        assert_eq!(report.predicted_bound, 3);
        assert_eq!(report.stable_value, q_int(2));
        assert!(report.certified);

        let one: PolynomialStatistic = "1".parse().unwrap();
        let report = pairing_stability(&one, &SymFn::one(), 4).unwrap();
        assert_eq!(report.observed_onset, 0);
        assert_eq!(report.predicted_bound, 0);
        assert_eq!(report.stable_value, q_int(1));

        let x2: PolynomialStatistic = "b(2,1)".parse().unwrap();
        let report = pairing_stability(&x2, &s("2"), 8).unwrap();
        assert_eq!(report.predicted_bound, 4);
        assert!(report.observed_onset <= 4);
    }

    #[test]
    fn headline_onsets_through_two() {
        let rows = verify_theorem_1_1(2).unwrap();
        assert_eq!(rows.len(), 2);
        for row in rows {
            assert!(row.passes(), "{row:?}");
            assert_eq!(row.lie_onset, 3 * row.i);
            assert_eq!(row.w_onset, 3 * row.i + 1);
        }
    }
}
