//! Polynomial statistics of cycle type, stored in the binomial basis
//! binom(X,λ) = Π_j binom(x_j, m_j) with deg x_j = j. Products and
//! monomial input are reduced to this basis by gridded evaluation followed
//! by iterated finite differences (the Newton forward-difference formula).

use crate::StabilityError;
use num_traits::Zero;
use partition_core::{partitions_of, Partition};
use sn_characters::ClassFunction;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use symfunc_engine::{q_int, Q, SymFn, SymFnError};

/// binom(m, k) over the rationals, for a rational argument.
fn q_binom(m: &Q, k: u32) -> Q {
    let mut acc = Q::from_integer(1.into());
    for t in 0..k {
        acc *= (m - q_int(i64::from(t))) / q_int(i64::from(t) + 1);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolynomialStatistic {
    terms: BTreeMap<Partition, Q>,
}

impl PolynomialStatistic {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(q_int(1))
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(Partition::empty(), c);
        p
    }

    /// The basis element binom(X,λ).
    pub fn binomial(lambda: &Partition) -> Self {
        let mut p = Self::zero();
        p.add_term(lambda.clone(), q_int(1));
        p
    }

    /// The monomial x_j^k, expanded into binomials of x_j.
    pub fn monomial(j: u32, k: u32) -> Self {
        assert!(j >= 1, "variables are indexed from 1");
        let mut p = Self::zero();
        for c in 0..=k {
            // iterated finite difference of t ↦ t^k at 0
            let mut coeff = Q::zero();
            for t in 0..=c {
                let mut v = q_int(1);
                for _ in 0..k {
                    v *= q_int(i64::from(t));
                }
                let w = q_binom(&q_int(i64::from(c)), t) * v;
                if (c - t) % 2 == 0 {
                    coeff += w;
                } else {
                    coeff -= w;
                }
            }
            p.add_term(Partition::new(vec![j; c as usize]).unwrap(), coeff);
        }
        p
    }

    fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// deg with deg(x_j) = j, i.e. max |λ| over the support; None when zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Evaluates at a multiplicity vector; mults[j−1] is the number of
    /// j-cycles.
    pub fn evaluate(&self, mults: &[u32]) -> Q {
        let mut acc = Q::zero();
        for (lam, c) in &self.terms {
            let mut term = c.clone();
            for (j, m) in lam.multiplicities() {
                let have = mults.get(j as usize - 1).copied().unwrap_or(0);
                term *= q_binom(&q_int(i64::from(have)), m);
                if term.is_zero() {
                    break;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), v * c);
        }
        out
    }

    /// Product, re-expanded in the binomial basis by evaluating on a grid
    /// just large enough and taking finite differences axis by axis.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let max_var = |p: &Self| {
            p.terms
                .keys()
                .map(Partition::first_part)
                .max()
                .unwrap_or(0)
        };
        let vars = max_var(self).max(max_var(other)) as usize;
        if vars == 0 {
            // both constants
            let a = self.terms.get(&Partition::empty()).cloned().unwrap_or_else(Q::zero);
            let b = other.terms.get(&Partition::empty()).cloned().unwrap_or_else(Q::zero);
            return Self::constant(a * b);
        }
        let order = |p: &Self, j: u32| {
            p.terms
                .keys()
                .map(|lam| lam.multiplicity(j))
                .max()
                .unwrap_or(0)
        };
        let bounds: Vec<u32> = (1..=vars as u32)
            .map(|j| order(self, j) + order(other, j))
            .collect();

        // flatten the grid with mixed-radix strides
        let sizes: Vec<usize> = bounds.iter().map(|b| *b as usize + 1).collect();
        let total: usize = sizes.iter().product();
        let mut values = vec![Q::zero(); total];
        let unrank = |mut r: usize| -> Vec<u32> {
            let mut point = vec![0u32; vars];
            for (axis, size) in sizes.iter().enumerate() {
                point[axis] = (r % size) as u32;
                r /= size;
            }
            point
        };
        for (r, slot) in values.iter_mut().enumerate() {
            let point = unrank(r);
            *slot = self.evaluate(&point) * other.evaluate(&point);
        }

        // finite differences along each axis in place
        let mut stride = 1;
        for size in &sizes {
            for base in 0..total {
                if (base / stride) % size != 0 {
                    continue;
                }
                let line: Vec<Q> =
                    (0..*size).map(|t| values[base + t * stride].clone()).collect();
                for k in 0..*size {
                    let mut c = Q::zero();
                    for (t, v) in line.iter().enumerate().take(k + 1) {
                        let w = q_binom(&q_int(k as i64), t as u32) * v;
                        if (k - t) % 2 == 0 {
                            c += w;
                        } else {
                            c -= w;
                        }
                    }
                    values[base + k * stride] = c;
                }
            }
            stride *= size;
        }

        let mut out = Self::zero();
        for (r, c) in values.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let point = unrank(r);
            let mut parts = Vec::new();
            for (axis, k) in point.iter().enumerate() {
                parts.extend(std::iter::repeat_n(axis as u32 + 1, *k as usize));
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            out.add_term(Partition::new(parts).unwrap(), c.clone());
        }
        out
    }

    /// ch of the associated class function at size n:
    /// Σ_λ c_λ (p_λ / z_λ) h_{n−|λ|}, with terms of |λ| > n dropped.
    pub fn ch(&self, n: u32) -> Result<SymFn, SymFnError> {
        let mut acc = SymFn::zero();
        for (lam, c) in &self.terms {
            if lam.size() > n {
                continue;
            }
            let z = Q::from_integer(lam.z().into());
            let base = SymFn::from_p_terms([(lam.clone(), c / z)])?;
            acc = &acc + &base.multiply(&SymFn::h(n - lam.size())?)?;
        }
        Ok(acc)
    }

    /// The class function w ↦ P(m₁(w), m₂(w), …) on S_n.
    pub fn class_function(&self, n: u32) -> Result<ClassFunction, StabilityError> {
        let mut values = BTreeMap::new();
        for mu in partitions_of(n) {
            let mut mults = vec![0u32; n as usize];
            for (j, m) in mu.multiplicities() {
                mults[j as usize - 1] = m;
            }
            let v = self.evaluate(&mults);
            if !v.is_zero() {
                values.insert(mu, v);
            }
        }
        Ok(ClassFunction::new(n, values)?)
    }
}

/// ch(χ_{binom(X,λ)}) at size n: (p_λ/z_λ) h_{n−|λ|}, zero for n < |λ|.
pub fn ch_binomial(lambda: &Partition, n: u32) -> Result<SymFn, SymFnError> {
    PolynomialStatistic::binomial(lambda).ch(n)
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self { chars: s.chars().peekable() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn expect(&mut self, want: char) -> Result<(), StabilityError> {
        match self.peek() {
            Some(c) if c == want => {
                self.chars.next();
                Ok(())
            }
            other => Err(StabilityError::BadPolynomial(format!(
                "expected {want:?}, found {other:?}"
            ))),
        }
    }

    fn integer(&mut self) -> Result<i64, StabilityError> {
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        digits
            .parse()
            .map_err(|_| StabilityError::BadPolynomial("expected an integer".into()))
    }

    fn factor(&mut self) -> Result<PolynomialStatistic, StabilityError> {
        self.expect('b')?;
        self.expect('(')?;
        self.skip_ws();
        let j = self.integer()?;
        self.expect(',')?;
        self.skip_ws();
        let k = self.integer()?;
        self.expect(')')?;
        if j < 1 {
            return Err(StabilityError::BadPolynomial(
                "variable index must be at least 1".into(),
            ));
        }
        if k < 0 {
            return Err(StabilityError::BadPolynomial(
                "binomial order must be nonnegative".into(),
            ));
        }
        let lam = Partition::new(vec![j as u32; k as usize])
            .expect("rectangular multiplicity shape");
        Ok(PolynomialStatistic::binomial(&lam))
    }

    fn term(&mut self) -> Result<PolynomialStatistic, StabilityError> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => PolynomialStatistic::constant(q_int(self.integer()?)),
            Some('b') => PolynomialStatistic::one(),
            other => {
                return Err(StabilityError::BadPolynomial(format!(
                    "expected a term, found {other:?}"
                )))
            }
        };
        while self.peek() == Some('b') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<PolynomialStatistic, StabilityError> {
        let mut negative = false;
        if self.peek() == Some('-') {
            self.chars.next();
            negative = true;
        } else if self.peek() == Some('+') {
            self.chars.next();
        }
        let mut acc = self.term()?;
        if negative {
            acc = acc.scaled(&q_int(-1));
        }
        loop {
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some('-') => {
                    self.chars.next();
                    let t = self.term()?;
                    acc = acc.add(&t.scaled(&q_int(-1)));
                }
                None => return Ok(acc),
                other => {
                    return Err(StabilityError::BadPolynomial(format!(
                        "unexpected {other:?}"
                    )))
                }
            }
        }
    }
}

impl FromStr for PolynomialStatistic {
    type Err = StabilityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).expr()
    }
}

// Terms print as coefficient-prefixed products of b(j,m), the same shape
// the parser accepts.
impl fmt::Display for PolynomialStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in &self.terms {
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
            let body: Vec<String> = lam
                .multiplicities()
                .iter()
                .map(|(j, m)| format!("b({j},{m})"))
                .collect();
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != q_int(1) {
                    write!(f, "{mag} ")?;
                }
                write!(f, "{}", body.join(""))?;
            }
        }
        Ok(())
    }
}
