use lie_whitney::{
    check_product_gf, ell, ell_via_maj, euler_hat_w, hat_entry, kappa, lie_lambda, nu, tau,
    verify_row_recurrence, verify_wg_recurrence, w_lambda, HatKind,
};
use num_bigint::BigInt;
use partition_core::{partitions_of, Partition, pt};
use symfunc_engine::{q_int, Basis, Q, SymFn};
use tableaux::{tableau_sum, TableauClass};

fn dim_of(f: &SymFn, n: u32) -> Q {
    let ones = Partition::new(vec![1; n as usize]).unwrap();
    f.hall_inner(&SymFn::p_lambda(&ones).unwrap())
}

fn for_each_permutation(m: usize, f: &mut impl FnMut(&[usize])) {
    fn go(perm: &mut Vec<usize>, used: &mut Vec<bool>, m: usize, f: &mut impl FnMut(&[usize])) {
        if perm.len() == m {
            f(perm);
            return;
        }
        for v in 0..m {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                go(perm, used, m, f);
                perm.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; m], m, f);
}

fn cycle_count(perm: &[usize]) -> (bool, u32) {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    let mut derangement = true;
    for start in 0..perm.len() {
        if perm[start] == start {
            derangement = false;
        }
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
        }
    }
    (derangement, cycles)
}

#[test]
fn hat_dimensions_match_bruteforced_derangement_counts() {
    for m in 0..=8u32 {
        let mut by_cycles = vec![0i64; m as usize + 1];
        for_each_permutation(m as usize, &mut |perm| {
            let (derangement, cycles) = cycle_count(perm);
            if derangement {
                by_cycles[cycles as usize] += 1;
            }
        });
        // the empty permutation is vacuously a derangement with 0 cycles
        if m == 0 {
            by_cycles[0] = 1;
        }
        for i in 0..=m {
            let cycles = (m - i) as usize;
            let want = q_int(by_cycles[cycles]);
            for kind in [HatKind::Lie, HatKind::W] {
                let f = hat_entry(kind, i, m).unwrap();
                assert_eq!(dim_of(&f, m), want, "{kind:?} at rank {i}, size {m}");
            }
        }
    }
}

#[test]
fn family_dimensions_count_permutations_of_that_cycle_type() {
    for n in 0..=7u32 {
        let bang: u128 = (1..=u128::from(n)).product::<u128>().max(1);
        for lam in partitions_of(n) {
            let want = Q::from_integer(BigInt::from(bang / lam.z()));
            assert_eq!(dim_of(&lie_lambda(&lam).unwrap(), n), want, "Lie ({lam})");
            assert_eq!(dim_of(&w_lambda(&lam).unwrap(), n), want, "W ({lam})");
        }
    }
}

#[test]
fn row_sum_dimensions_follow_derangement_recurrence() {
    let mut d: Vec<i64> = vec![1];
    for n in 1..=10i64 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        d.push(n * d[(n - 1) as usize] + sign);
    }
    for n in 0..=10u32 {
        let want = q_int(d[n as usize]);
        assert_eq!(dim_of(&kappa(n).unwrap(), n), want, "kappa({n})");
        assert_eq!(dim_of(&nu(n).unwrap(), n), want, "nu({n})");
    }
}

#[test]
fn row_recurrence_sweep() {
    for n in 1..=9u32 {
        assert!(verify_row_recurrence(n).unwrap(), "n = {n}");
    }
}

#[test]
fn restriction_recurrence_sweep() {
    for n in 2..=9u32 {
        for i in 1..=n {
            assert!(verify_wg_recurrence(n, i).unwrap(), "n = {n}, i = {i}");
        }
    }
}

#[test]
fn euler_sums_collapse_to_signed_hook() {
    for n in 2..=8u32 {
        let mut shape = vec![2u32];
        shape.extend(std::iter::repeat_n(1, (n - 2) as usize));
        let hook = SymFn::s(&Partition::new(shape).unwrap()).unwrap();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(euler_hat_w(n).unwrap(), hook.scaled(&q_int(sign)), "n = {n}");
    }
}

#[test]
fn top_rank_entries_are_omega_dual() {
    for n in 2..=9u32 {
        let lie_top = hat_entry(HatKind::Lie, n - 1, n).unwrap();
        let w_top = hat_entry(HatKind::W, n - 1, n).unwrap();
        assert_eq!(w_top, lie_top.omega(), "n = {n}");
        assert_eq!(lie_top, ell(n).unwrap(), "n = {n}");
    }
}

#[test]
fn column_sums_have_sharp_first_row_bounds() {
    for i in 1..=4u32 {
        let mut lie_col = SymFn::zero();
        let mut w_col = SymFn::zero();
        for m in i + 1..=2 * i {
            lie_col = &lie_col + &hat_entry(HatKind::Lie, i, m).unwrap();
            w_col = &w_col + &hat_entry(HatKind::W, i, m).unwrap();
        }
        assert_eq!(lie_col.bounded_by().unwrap(), i, "Lie column {i}");
        assert_eq!(w_col.bounded_by().unwrap(), i + 1, "W column {i}");
    }
}

#[test]
fn hook_multiplicity_appears_only_at_top_rank() {
    for n in 2..=9u32 {
        let mut shape = vec![2u32];
        shape.extend(std::iter::repeat_n(1, (n - 2) as usize));
        let hook = SymFn::s(&Partition::new(shape).unwrap()).unwrap();
        for i in 1..=n - 1 {
            let mult = hat_entry(HatKind::W, i, n).unwrap().hall_inner(&hook);
            let want = if i == n - 1 { 1 } else { 0 };
            assert_eq!(mult, q_int(want), "n = {n}, i = {i}");
        }
    }
}

#[test]
fn tau_equals_elementary_plus_power_twist() {
    for n in 2..=10u32 {
        let rhs = &SymFn::e(n).unwrap()
            + &SymFn::p(2).unwrap().multiply(&SymFn::e(n - 2).unwrap()).unwrap();
        assert_eq!(tau(n).unwrap(), rhs, "n = {n}");
    }
    for n in 1..=10u32 {
        assert_eq!(tau(n).unwrap().d_dp1(), tau(n - 1).unwrap(), "n = {n}");
    }
}

#[test]
fn row_sums_equal_tableau_class_sums() {
    for n in 0..=8u32 {
        assert_eq!(
            kappa(n).unwrap(),
            tableau_sum(n, TableauClass::Desarrangement).unwrap(),
            "kappa({n})"
        );
        assert_eq!(
            nu(n).unwrap(),
            tableau_sum(n, TableauClass::WhitneyGenerating).unwrap(),
            "nu({n})"
        );
    }
}

#[test]
fn product_formulas_hold_at_degree_six() {
    assert!(check_product_gf(6, HatKind::Lie).unwrap());
    assert!(check_product_gf(6, HatKind::W).unwrap());
}

#[test]
fn maj_description_agrees_through_seven() {
    for n in 2..=7u32 {
        assert_eq!(ell_via_maj(n).unwrap(), ell(n).unwrap(), "n = {n}");
    }
}

#[test]
fn graded_pieces_are_schur_positive() {
    for n in 0..=7u32 {
        for i in 0..=n {
            for f in [
                lie_whitney::lie_graded(i, n).unwrap(),
                lie_whitney::whitney_homology(i, n).unwrap(),
            ] {
                assert!(
                    f.convert(Basis::S).is_nonnegative_integral(),
                    "rank {i} of {n}"
                );
            }
        }
    }
}

#[test]
fn whitney_zero_is_trivial_and_top_is_omega_ell() {
    for n in 1..=7u32 {
        assert_eq!(
            lie_whitney::whitney_homology(0, n).unwrap(),
            SymFn::h(n).unwrap()
        );
        assert_eq!(
            lie_whitney::whitney_homology(n - 1, n).unwrap(),
            ell(n).unwrap().omega(),
            "top Whitney homology at n = {n}"
        );
    }
}

#[test]
fn configuration_cohomology_vanishes_off_multiples() {
    for d in 2..=5u32 {
        for i in 0..=6u32 {
            let f = lie_whitney::conf_cohomology(5, d, i).unwrap();
            if i % (d - 1) != 0 {
                assert!(f.is_zero(), "d = {d}, i = {i}");
            }
        }
    }
    // antipodal special case: R^2 is complex dimension one
    assert_eq!(
        lie_whitney::conf_cohomology(4, 2, 2).unwrap(),
        lie_whitney::whitney_homology(2, 4).unwrap()
    );
    assert_eq!(
        lie_whitney::conf_cohomology(4, 3, 2).unwrap(),
        lie_whitney::lie_graded(1, 4).unwrap()
    );
}

#[test]
fn small_kappa_values_match_expected() {
    assert_eq!(kappa(2).unwrap(), SymFn::s(&pt("1,1")).unwrap());
    assert_eq!(
        nu(4).unwrap(),
        &SymFn::s(&pt("3,1")).unwrap().scaled(&q_int(2)) + &SymFn::s(&pt("2,1,1")).unwrap()
    );
}
