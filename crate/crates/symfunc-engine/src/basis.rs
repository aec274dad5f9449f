//! Tagged basis views of a symmetric function, their JSON wire form and a
//! human-readable rendering.
//!
//! Wire schema:
//! {"basis":"s","terms":[{"n":6,"partition":[5,1],"coeff":"1"}, ...]}
//! with coefficients as exact rational strings "a/b" in lowest terms (the
//! denominator omitted when it is 1) and terms listed in the workspace
//! partition order.

use crate::{coeff_from_str, coeff_to_string, SymFn, SymFnError, Q};
use num_traits::Zero;
use partition_core::Partition;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::P => 'p',
            Basis::H => 'h',
            Basis::E => 'e',
            Basis::S => 's',
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = SymFnError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p" => Ok(Basis::P),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "s" => Ok(Basis::S),
            other => Err(SymFnError::BadJson(format!("unknown basis {other:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A symmetric function expressed in one named basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    pub terms: BTreeMap<Partition, Q>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    n: u32,
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Expansion {
    /// Coefficient of the basis element indexed by λ.
    pub fn get(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is an integer (every genuine virtual
    /// character has an integral s view).
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(crate::q_is_integer)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        use num_traits::Signed;
        self.terms.values().all(|c| crate::q_is_integer(c) && !c.is_negative())
    }

    pub fn to_json(&self) -> String {
        let repr = ExpansionRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermRepr {
                    n: l.size(),
                    partition: l.parts().to_vec(),
                    coeff: coeff_to_string(c),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("expansion serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Expansion, SymFnError> {
        let repr: ExpansionRepr =
            serde_json::from_str(s).map_err(|e| SymFnError::BadJson(e.to_string()))?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            let lambda = Partition::new(t.partition)?;
            if lambda.size() != t.n {
                return Err(SymFnError::BadJson(format!(
                    "term for {lambda:?} claims degree {}, but |λ| = {}",
                    t.n,
                    lambda.size()
                )));
            }
            let c = coeff_from_str(&t.coeff)?;
            if c.is_zero() {
                continue;
            }
            if terms.insert(lambda.clone(), c).is_some() {
                return Err(SymFnError::BadJson(format!("duplicate term for {lambda:?}")));
            }
        }
        Ok(Expansion { basis: repr.basis, terms })
    }

    /// Convenience round trip: parse a wire-form expansion and rebuild the
    /// canonical symmetric function.
    pub fn parse_to_symfn(s: &str) -> Result<SymFn, SymFnError> {
        SymFn::from_expansion(&Expansion::from_json(s)?)
    }
}

impl fmt::Display for Expansion {
    /// Renders like "s[3,1] + 2 s[2,2] - 1/2 s[2,1,1]"; the zero function
    /// renders as "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed};
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, c) in &self.terms {
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{} ", coeff_to_string(&mag))?;
            }
            write!(f, "{}[{}]", self.basis.letter(), lambda)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q_frac, q_int};
    use partition_core::pt;

    #[test]
    fn wire_form_matches_schema() {
        let f = SymFn::s(&pt("5,1")).unwrap();
        let js = f.convert(Basis::S).to_json();
        assert_eq!(js, r#"{"basis":"s","terms":[{"n":6,"partition":[5,1],"coeff":"1"}]}"#);
    }

    #[test]
    fn json_round_trip_with_fractions() {
        let f = &SymFn::p(3).unwrap().scaled(&q_frac(2, 3)) - &SymFn::p_lambda(&pt("1,1")).unwrap();
        let exp = f.convert(Basis::P);
        let back = Expansion::from_json(&exp.to_json()).unwrap();
        assert_eq!(back, exp);
        assert_eq!(SymFn::from_expansion(&back).unwrap(), f);
    }

    #[test]
    fn bad_wire_forms_are_rejected() {
        assert!(Expansion::from_json("{").is_err());
        // degree mismatch
        let js = r#"{"basis":"s","terms":[{"n":5,"partition":[5,1],"coeff":"1"}]}"#;
        assert!(Expansion::from_json(js).is_err());
        // bad coefficient
        let js = r#"{"basis":"s","terms":[{"n":6,"partition":[5,1],"coeff":"q"}]}"#;
        assert!(Expansion::from_json(js).is_err());
        // duplicate term
        let js = r#"{"basis":"p","terms":[{"n":1,"partition":[1],"coeff":"1"},{"n":1,"partition":[1],"coeff":"2"}]}"#;
        assert!(Expansion::from_json(js).is_err());
    }

    #[test]
    fn display_form() {
        let f = &(&SymFn::s(&pt("3,1")).unwrap() - &SymFn::s(&pt("2,2")).unwrap().scaled(&q_int(2)))
            + &SymFn::s(&pt("4")).unwrap().scaled(&q_frac(1, 2));
        let shown = f.convert(Basis::S).to_string();
        assert_eq!(shown, "1/2 s[4] + s[3,1] - 2 s[2,2]");
        assert_eq!(SymFn::zero().convert(Basis::S).to_string(), "0");
    }

    #[test]
    fn integrality_probes() {
        assert!(SymFn::s(&pt("2,1")).unwrap().convert(Basis::S).is_integral());
        assert!(!SymFn::h(2).unwrap().convert(Basis::P).is_integral());
        let virt = &SymFn::s(&pt("2")).unwrap() - &SymFn::s(&pt("1,1")).unwrap();
        let sview = virt.convert(Basis::S);
        assert!(sview.is_integral());
        assert!(!sview.is_nonnegative_integral());
    }
}
