//! Class functions on symmetric groups, exact over the rationals.
//!
//! A [`ClassFunction`] stores values keyed by cycle type. All the real work
//! happens on the symmetric-function side: every operation converts through
//! the Frobenius characteristic immediately, acts there, and converts back.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use partition_core::{Partition, PartitionError};
use serde::{Deserialize, Serialize};
use symfunc_engine::{character_table, Basis, Q, SymFn, SymFnError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("cycle type ({0}) is not a partition of {1}")]
    WrongCycleType(Partition, u32),
    #[error("expected a homogeneous symmetric function of degree {expected}")]
    DegreeMismatch { expected: u32 },
    #[error("not a virtual character: coefficient of chi[{0}] is {1}")]
    NotVirtual(Partition, String),
    #[error("class functions live on different groups: n = {0} and n = {1}")]
    SizeMismatch(u32, u32),
    #[error("multiplicity of chi[{0}] does not fit in 64 bits")]
    MultOutOfRange(Partition),
    #[error("bad decomposition JSON: {0}")]
    BadJson(String),
    #[error(transparent)]
    Sym(#[from] SymFnError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn q_from_u128(v: u128) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn identity_type(n: u32) -> Partition {
    Partition::new(vec![1; n as usize]).expect("all-ones is a partition")
}

/// A rational-valued class function on S_n, stored sparsely by cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    /// Builds from explicit values; keys must be partitions of `n`, zero
    /// values are dropped.
    pub fn new(n: u32, values: BTreeMap<Partition, Q>) -> Result<Self, CharError> {
        if let Some(bad) = values.keys().find(|lam| lam.size() != n) {
            return Err(CharError::WrongCycleType(bad.clone(), n));
        }
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(Self { n, values })
    }

    pub fn zero(n: u32) -> Self {
        Self { n, values: BTreeMap::new() }
    }

    /// The irreducible character indexed by λ.
    pub fn irreducible(lambda: &Partition) -> Result<Self, CharError> {
        let n = lambda.size();
        let table = character_table(n)?;
        let row = table.row(lambda);
        let values = table
            .parts
            .iter()
            .zip(row)
            .filter(|(_, v)| **v != 0)
            .map(|(mu, v)| (mu.clone(), Q::from_integer(BigInt::from(*v))))
            .collect();
        Ok(Self { n, values })
    }

    pub fn trivial(n: u32) -> Self {
        let values = partition_core::partitions_of(n)
            .into_iter()
            .map(|mu| (mu, Q::one()))
            .collect();
        Self { n, values }
    }

    /// The regular character: n! on the identity class, 0 elsewhere.
    pub fn regular(n: u32) -> Self {
        let bang = (1..=u128::from(n)).product::<u128>().max(1);
        let mut values = BTreeMap::new();
        values.insert(identity_type(n), q_from_u128(bang));
        Self { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on the conjugacy class of the given cycle type.
    pub fn value(&self, cycle_type: &Partition) -> Q {
        self.values.get(cycle_type).cloned().unwrap_or_else(Q::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Q> {
        &self.values
    }

    /// Value at the identity, i.e. the (virtual) dimension.
    pub fn dimension(&self) -> Q {
        self.value(&identity_type(self.n))
    }

    /// ch(f) = Σ_λ f(λ) p_λ / z_λ.
    pub fn frobenius_ch(&self) -> Result<SymFn, CharError> {
        let terms: Vec<(Partition, Q)> = self
            .values
            .iter()
            .map(|(lam, v)| {
                let z = q_from_u128(lam.z());
                (lam.clone(), v / z)
            })
            .collect();
        Ok(SymFn::from_p_terms(terms)?)
    }

    /// Inverse Frobenius characteristic: requires `f` homogeneous of degree
    /// `n` (or zero).
    pub fn from_symfn(f: &SymFn, n: u32) -> Result<Self, CharError> {
        if !f.is_zero() && f.degrees() != vec![n] {
            return Err(CharError::DegreeMismatch { expected: n });
        }
        let values = f
            .terms()
            .map(|(lam, c)| (lam.clone(), c * q_from_u128(lam.z())))
            .collect();
        Ok(Self { n, values })
    }

    /// Induction product: the character of S_{m+n} induced from the outer
    /// tensor product, computed as a product of characteristics.
    pub fn induction_product(&self, other: &Self) -> Result<Self, CharError> {
        let prod = self.frobenius_ch()?.multiply(&other.frobenius_ch()?)?;
        Self::from_symfn(&prod, self.n + other.n)
    }

    /// M_n(χ) = χ · 1 induced from S_{n₀} × S_{n−n₀} up to S_n, and zero
    /// when n < n₀.
    pub fn m_character(&self, n: u32) -> Result<Self, CharError> {
        if n < self.n {
            return Ok(Self::zero(n));
        }
        let f = self.frobenius_ch()?.multiply(&SymFn::h(n - self.n)?)?;
        Self::from_symfn(&f, n)
    }

    /// ⟨f, g⟩ = Σ_λ f(λ) g(λ) / z_λ.
    pub fn inner(&self, other: &Self) -> Result<Q, CharError> {
        if self.n != other.n {
            return Err(CharError::SizeMismatch(self.n, other.n));
        }
        let mut acc = Q::zero();
        for (lam, v) in &self.values {
            let w = other.value(lam);
            if !w.is_zero() {
                acc += v * w / q_from_u128(lam.z());
            }
        }
        Ok(acc)
    }

    /// Exact decomposition into irreducibles; errors when any multiplicity
    /// is not an integer.
    pub fn decompose(&self) -> Result<Decomposition, CharError> {
        let exp = self.frobenius_ch()?.convert(Basis::S);
        let mut multiplicities = BTreeMap::new();
        for (lam, c) in exp.terms {
            if !c.is_integer() {
                return Err(CharError::NotVirtual(lam, c.to_string()));
            }
            let m = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| CharError::MultOutOfRange(lam.clone()))?;
            multiplicities.insert(lam, m);
        }
        Ok(Decomposition { n: self.n, multiplicities })
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self
            .values
            .iter()
            .map(|(lam, v)| format!("({lam}) -> {v}"))
            .collect();
        write!(f, "{}", body.join(", "))
    }
}

/// Integer multiplicities of irreducibles in a virtual character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: u32,
    multiplicities: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    partition: Partition,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct DecompositionRepr {
    n: u32,
    multiplicities: Vec<EntryRepr>,
}

impl Decomposition {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn multiplicity(&self, lambda: &Partition) -> i64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<Partition, i64> {
        &self.multiplicities
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.multiplicities.values().all(|m| *m >= 0)
    }

    /// Reassembles the class function Σ m_λ χ^λ.
    pub fn character(&self) -> Result<ClassFunction, CharError> {
        let mut acc = SymFn::zero();
        for (lam, m) in &self.multiplicities {
            acc = &acc + &SymFn::s(lam)?.scaled(&Q::from_integer(BigInt::from(*m)));
        }
        ClassFunction::from_symfn(&acc, self.n)
    }

    pub fn to_json(&self) -> String {
        let repr = DecompositionRepr {
            n: self.n,
            multiplicities: self
                .multiplicities
                .iter()
                .map(|(lam, m)| EntryRepr { partition: lam.clone(), mult: *m })
                .collect(),
        };
        serde_json::to_string(&repr).expect("decomposition serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CharError> {
        let repr: DecompositionRepr =
            serde_json::from_str(s).map_err(|e| CharError::BadJson(e.to_string()))?;
        let mut multiplicities = BTreeMap::new();
        for entry in repr.multiplicities {
            if entry.partition.size() != repr.n {
                return Err(CharError::BadJson(format!(
                    "partition ({}) is not a partition of {}",
                    entry.partition, repr.n
                )));
            }
            if entry.mult == 0 {
                continue;
            }
            if multiplicities.insert(entry.partition.clone(), entry.mult).is_some() {
                return Err(CharError::BadJson(format!(
                    "duplicate partition ({})",
                    entry.partition
                )));
            }
        }
        Ok(Self { n: repr.n, multiplicities })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, m) in &self.multiplicities {
            let mag = m.abs();
            if first {
                if *m < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *m < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag} ")?;
            }
            write!(f, "chi[{lam}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::pt;
    use symfunc_engine::{plethysm, q_frac};

    fn decomp_of(lams: &[(&str, i64)]) -> BTreeMap<Partition, i64> {
        lams.iter().map(|(s, m)| (pt(s), *m)).collect()
    }

    #[test]
    fn irreducible_characteristic_is_schur() {
        for n in 0..=6u32 {
            for lam in partition_core::partitions_of(n) {
                let chi = ClassFunction::irreducible(&lam).unwrap();
                assert_eq!(chi.frobenius_ch().unwrap(), SymFn::s(&lam).unwrap());
            }
        }
    }

    #[test]
    fn padded_character_of_standard_example() {
        let chi = ClassFunction::irreducible(&pt("2,1")).unwrap();
        let m5 = chi.m_character(5).unwrap().decompose().unwrap();
        assert_eq!(
            m5.multiplicities().clone(),
            decomp_of(&[("4,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1)])
        );
        assert_eq!(m5.to_string(), "chi[4,1] + chi[3,2] + chi[3,1,1] + chi[2,2,1]");

        assert!(chi.m_character(2).unwrap().is_zero());
        assert_eq!(chi.m_character(3).unwrap(), chi);
    }

    #[test]
    fn padding_at_own_size_is_identity() {
        for lam in partition_core::partitions_of(5) {
            let chi = ClassFunction::irreducible(&lam).unwrap();
            assert_eq!(chi.m_character(5).unwrap(), chi);
        }
    }

    #[test]
    fn regular_character_decomposition() {
        let reg = ClassFunction::regular(3);
        assert_eq!(reg.dimension(), q_from_u128(6));
        let dec = reg.decompose().unwrap();
        assert_eq!(
            dec.multiplicities().clone(),
            decomp_of(&[("3", 1), ("2,1", 2), ("1,1,1", 1)])
        );
        assert_eq!(
            dec.to_json(),
            r#"{"n":3,"multiplicities":[{"partition":[3],"mult":1},{"partition":[2,1],"mult":2},{"partition":[1,1,1],"mult":1}]}"#
        );
    }

    #[test]
    fn inverse_characteristic_of_plethysm() {
        let f = plethysm(&SymFn::h(2).unwrap(), &SymFn::e(2).unwrap()).unwrap();
        let chi = ClassFunction::from_symfn(&f, 4).unwrap();
        let dec = chi.decompose().unwrap();
        assert_eq!(
            dec.multiplicities().clone(),
            decomp_of(&[("2,2", 1), ("1,1,1,1", 1)])
        );
    }

    #[test]
    fn non_integral_multiplicity_is_rejected() {
        let f = SymFn::s(&pt("2")).unwrap().scaled(&q_frac(1, 2));
        let chi = ClassFunction::from_symfn(&f, 2).unwrap();
        let err = chi.decompose().unwrap_err();
        assert!(err.to_string().contains("not a virtual character"), "{err}");
    }

    #[test]
    fn from_symfn_rejects_mixed_degree() {
        let mixed = &SymFn::h(2).unwrap() + &SymFn::h(3).unwrap();
        assert!(ClassFunction::from_symfn(&mixed, 3).is_err());
        assert!(ClassFunction::from_symfn(&SymFn::zero(), 3).is_ok());
    }

    #[test]
    fn decomposition_json_round_trip() {
        let chi = ClassFunction::regular(4);
        let dec = chi.decompose().unwrap();
        let back = Decomposition::from_json(&dec.to_json()).unwrap();
        assert_eq!(back, dec);
        assert_eq!(back.character().unwrap(), chi);
        assert!(Decomposition::from_json(r#"{"n":3,"multiplicities":[{"partition":[2],"mult":1}]}"#).is_err());
    }

    #[test]
    fn trivial_and_sign_are_h_and_e() {
        for n in 0..=7u32 {
            let triv = ClassFunction::trivial(n);
            assert_eq!(triv.frobenius_ch().unwrap(), SymFn::h(n).unwrap());
        }
    }
}
