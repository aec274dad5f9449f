//! Bivariate generating-function checks: truncated expansion of the
//! infinite products Π_ℓ (1−p_ℓ)^{−a_ℓ(u)} and Π_ℓ (1+(−1)^ℓ p_ℓ)^{a_ℓ(−u)}
//! against the term-by-term sums over cycle types.
//!
//! A series in u is a Vec<SymFn> indexed by the power of u; every product
//! is truncated to total x-degree ≤ n_max and u-degree ≤ n_max, which is
//! enough because each u power that survives is ℓ(λ) ≤ |λ|.

use crate::{divisors, lie_lambda, moebius, w_lambda, HatKind};
use num_traits::Zero;
use partition_core::{partitions_filtered, PartitionFilter};
use symfunc_engine::{q_frac, q_int, Q, SymFn, SymFnError};

type UPoly = Vec<Q>;
type USeries = Vec<SymFn>;

/// a_ℓ(u) = (1/ℓ) Σ_{d|ℓ} μ(d) u^{ℓ/d}, truncated to degree u_max.
fn a_poly(ell: u32, u_max: usize) -> UPoly {
    let mut c = vec![Q::zero(); u_max + 1];
    for d in divisors(ell) {
        let e = (ell / d) as usize;
        let mu = moebius(d);
        if mu != 0 && e <= u_max {
            c[e] += q_frac(mu, i64::from(ell));
        }
    }
    c
}

fn negate_u(p: &UPoly) -> UPoly {
    p.iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
        .collect()
}

/// p · (a + shift), truncated to the length of p.
fn poly_mul_affine(p: &UPoly, a: &UPoly, shift: &Q) -> UPoly {
    let u_max = p.len() - 1;
    let mut out: UPoly = p.iter().map(|c| c * shift).collect();
    for (i, pc) in p.iter().enumerate() {
        if pc.is_zero() {
            continue;
        }
        for (j, ac) in a.iter().enumerate() {
            if i + j <= u_max && !ac.is_zero() {
                out[i + j] += pc * ac;
            }
        }
    }
    out
}

fn useries_zero(u_max: usize) -> USeries {
    vec![SymFn::zero(); u_max + 1]
}

fn useries_one(u_max: usize) -> USeries {
    let mut s = useries_zero(u_max);
    s[0] = SymFn::one();
    s
}

fn useries_mul(a: &USeries, b: &USeries, x_max: u32) -> USeries {
    let u_max = a.len() - 1;
    let mut out = useries_zero(u_max);
    for (i, fa) in a.iter().enumerate() {
        if fa.is_zero() {
            continue;
        }
        for (j, fb) in b.iter().enumerate() {
            if i + j > u_max {
                break;
            }
            if fb.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &fa.multiply_truncated(fb, x_max);
        }
    }
    out
}

/// One factor of the product formula, expanded with the formal binomial
/// series: (1−p_ℓ)^{−a_ℓ(u)} for the Lie family, (1+(−1)^ℓ p_ℓ)^{a_ℓ(−u)}
/// for the Whitney family.
fn factor_series(ell: u32, kind: HatKind, x_max: u32, u_max: usize) -> Result<USeries, SymFnError> {
    let exponent = match kind {
        HatKind::Lie => a_poly(ell, u_max),
        HatKind::W => negate_u(&a_poly(ell, u_max)),
    };
    let mut series = useries_one(u_max);
    let mut coeff: UPoly = vec![Q::zero(); u_max + 1];
    coeff[0] = q_int(1);
    let k_max = x_max / ell;
    for k in 1..=k_max {
        // binom(a+k−1, k) for rising (Lie), binom(a, k) for falling (W)
        let shift = match kind {
            HatKind::Lie => q_int(i64::from(k) - 1),
            HatKind::W => q_int(-(i64::from(k) - 1)),
        };
        coeff = poly_mul_affine(&coeff, &exponent, &shift)
            .iter()
            .map(|c| c / q_int(i64::from(k)))
            .collect();
        let base_sign = match kind {
            HatKind::Lie => 1,
            HatKind::W => {
                if (ell * k) % 2 == 1 {
                    -1
                } else {
                    1
                }
            }
        };
        let pk = SymFn::p_lambda(&partition_core::Partition::new(vec![ell; k as usize]).unwrap())?;
        for (j, c) in coeff.iter().enumerate() {
            if !c.is_zero() {
                series[j] = &series[j] + &pk.scaled(&(c * q_int(base_sign)));
            }
        }
    }
    Ok(series)
}

/// exp(−Σ_m p_m u^m / m), the reciprocal of Σ_n h_n uⁿ.
fn inverse_h_series(x_max: u32, u_max: usize) -> Result<USeries, SymFnError> {
    let mut s = useries_zero(u_max);
    for m in 1..=x_max.min(u_max as u32) {
        s[m as usize] = SymFn::p(m)?.scaled(&q_frac(-1, i64::from(m)));
    }
    let mut acc = useries_one(u_max);
    let mut term = useries_one(u_max);
    for j in 1..=x_max {
        term = useries_mul(&term, &s, x_max)
            .into_iter()
            .map(|f| f.scaled(&q_frac(1, i64::from(j))))
            .collect();
        if term.iter().all(SymFn::is_zero) {
            break;
        }
        for (a, t) in acc.iter_mut().zip(&term) {
            *a = &*a + t;
        }
    }
    Ok(acc)
}

/// Σ ch(X_λ) u^{ℓ(λ)} over cycle types of size ≤ n_max, restricted to
/// fixed-point-free types when `no_ones` is set.
fn direct_series(kind: HatKind, n_max: u32, no_ones: bool) -> Result<USeries, SymFnError> {
    let u_max = n_max as usize;
    let filter = PartitionFilter {
        min_part: if no_ones { Some(2) } else { None },
        exact_rank: None,
    };
    let mut series = useries_zero(u_max);
    for n in 0..=n_max {
        for lam in partitions_filtered(n, &filter) {
            let term = match kind {
                HatKind::Lie => lie_lambda(&lam)?,
                HatKind::W => w_lambda(&lam)?,
            };
            let len = lam.length();
            series[len] = &series[len] + &term;
        }
    }
    Ok(series)
}

/// Expands the product formula for the requested family truncated to total
/// degree ≤ n_max, plus its hatted quotient by Σ h_n uⁿ, and compares both
/// against the sums over cycle types. True only when all coefficients agree.
pub fn check_product_gf(n_max: u32, kind: HatKind) -> Result<bool, SymFnError> {
    let u_max = n_max as usize;
    let mut product = useries_one(u_max);
    for ell in 1..=n_max {
        let factor = factor_series(ell, kind, n_max, u_max)?;
        product = useries_mul(&product, &factor, n_max);
    }
    if product != direct_series(kind, n_max, false)? {
        return Ok(false);
    }
    let hatted = useries_mul(&product, &inverse_h_series(n_max, u_max)?, n_max);
    Ok(hatted == direct_series(kind, n_max, true)?)
}
