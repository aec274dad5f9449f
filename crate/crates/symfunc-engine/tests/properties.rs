use num_traits::Zero;
use partition_core::{partitions_of, Partition};
use proptest::prelude::*;
use symfunc_engine::{plethysm, q_int, SymFn, Q};

/// Random nonzero Schur-positive function: a few shapes of total degree in
/// [1, max_deg] with small positive integer coefficients.
fn arb_schur_positive(max_deg: u32) -> impl Strategy<Value = SymFn> {
    (1..=max_deg)
        .prop_flat_map(|d| {
            let shapes = partitions_of(d);
            let count = shapes.len();
            proptest::collection::vec((0..count, 1u32..3), 1..3)
                .prop_map(move |picks| (shapes.clone(), picks))
        })
        .prop_map(|(shapes, picks)| {
            let mut f = SymFn::zero();
            for (i, c) in picks {
                f = &f + &SymFn::s(&shapes[i]).unwrap().scaled(&q_int(c as i64));
            }
            f
        })
}

/// Random homogeneous Schur-positive function of the exact degree.
fn arb_homogeneous(deg: u32) -> impl Strategy<Value = SymFn> {
    let shapes = partitions_of(deg);
    let count = shapes.len();
    proptest::collection::vec((0..count, 1u32..3), 1..3).prop_map(move |picks| {
        let mut f = SymFn::zero();
        for (i, c) in picks {
            f = &f + &SymFn::s(&shapes[i]).unwrap().scaled(&q_int(c as i64));
        }
        f
    })
}

/// Random virtual function: signed coefficients, possibly inhomogeneous.
fn arb_virtual(max_deg: u32) -> impl Strategy<Value = SymFn> {
    proptest::collection::vec((0..=max_deg, -2i64..=2), 1..4).prop_map(|picks| {
        let mut f = SymFn::zero();
        for (d, c) in picks {
            if c == 0 {
                continue;
            }
            for (k, lambda) in partitions_of(d).into_iter().enumerate() {
                if k % 2 == 0 {
                    f = &f + &SymFn::p_lambda(&lambda).unwrap().scaled(&q_int(c));
                }
            }
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn plethysm_is_ring_morphism_in_f(
        f1 in arb_schur_positive(3),
        f2 in arb_schur_positive(3),
        g in arb_schur_positive(2),
    ) {
        // (f1 f2)[g] = f1[g] f2[g], keeping total degree ≤ 10 by cap choice
        let product = f1.multiply(&f2).unwrap();
        let lhs = plethysm(&product, &g).unwrap();
        let rhs = plethysm(&f1, &g).unwrap().multiply(&plethysm(&f2, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_is_an_involution(f in arb_virtual(8)) {
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn omega_twists_plethysm(
        (n, g) in (1u32..=4).prop_flat_map(|n| arb_homogeneous(n).prop_map(move |g| (n, g))),
        f in arb_schur_positive(3),
    ) {
        // ω(f[g]) = ω^n(f)[ω(g)] for g homogeneous of degree n
        let lhs = plethysm(&f, &g).unwrap().omega();
        let twisted_f = if n % 2 == 1 { f.omega() } else { f.clone() };
        let rhs = plethysm(&twisted_f, &g.omega()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hall_adjointness_of_p1_operators(f in arb_virtual(8), g in arb_virtual(9)) {
        // ⟨p₁·f, g⟩ = ⟨f, ∂g/∂p₁⟩
        let lhs = f.mul_p1().unwrap().hall_inner(&g);
        let rhs = f.hall_inner(&g.d_dp1());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boundedness_is_inherited(f in arb_schur_positive(4), g in arb_schur_positive(4), m in 1u32..=2) {
        let bf = f.bounded_by().unwrap();
        let bg = g.bounded_by().unwrap();
        let prod = f.multiply(&g).unwrap();
        prop_assert!(prod.bounded_by().unwrap() <= bf + bg);

        let hm = SymFn::h(m).unwrap();
        let pl = plethysm(&hm, &g).unwrap();
        prop_assert!(pl.bounded_by().unwrap() <= m * bg);
    }
}

#[test]
fn h_sum_rule_over_split_arguments() {
    // h_n[g1+g2] = Σ_{i=0..n} h_i[g1] h_{n−i}[g2]
    let g1 = SymFn::s(&Partition::new(vec![2]).unwrap()).unwrap();
    let g2 = &SymFn::s(&Partition::new(vec![1, 1]).unwrap()).unwrap()
        + &SymFn::s(&Partition::new(vec![2, 1]).unwrap()).unwrap();
    for n in 0..=3u32 {
        let lhs = plethysm(&SymFn::h(n).unwrap(), &(&g1 + &g2)).unwrap();
        let mut rhs = SymFn::zero();
        for i in 0..=n {
            let a = plethysm(&SymFn::h(i).unwrap(), &g1).unwrap();
            let b = plethysm(&SymFn::h(n - i).unwrap(), &g2).unwrap();
            rhs = &rhs + &a.multiply(&b).unwrap();
        }
        assert_eq!(lhs, rhs, "h_{n}");
    }
}

#[test]
fn e_sum_rule_over_split_arguments() {
    let g1 = SymFn::s(&Partition::new(vec![1, 1]).unwrap()).unwrap();
    let g2 = SymFn::s(&Partition::new(vec![3]).unwrap()).unwrap();
    for n in 0..=3u32 {
        let lhs = plethysm(&SymFn::e(n).unwrap(), &(&g1 + &g2)).unwrap();
        let mut rhs = SymFn::zero();
        for i in 0..=n {
            let a = plethysm(&SymFn::e(i).unwrap(), &g1).unwrap();
            let b = plethysm(&SymFn::e(n - i).unwrap(), &g2).unwrap();
            rhs = &rhs + &a.multiply(&b).unwrap();
        }
        assert_eq!(lhs, rhs, "e_{n}");
    }
}

#[test]
fn hall_inner_is_bilinear_and_schur_orthonormal() {
    for n in 0..=6u32 {
        let shapes = partitions_of(n);
        for a in &shapes {
            for b in &shapes {
                let want = if a == b { q_int(1) } else { Q::zero() };
                let got = SymFn::s(a).unwrap().hall_inner(&SymFn::s(b).unwrap());
                assert_eq!(got, want, "⟨s_{a:?}, s_{b:?}⟩");
            }
        }
    }
}

#[test]
fn branching_examples_through_p1_operators() {
    let s21 = SymFn::s(&Partition::new(vec![2, 1]).unwrap()).unwrap();
    let down = s21.d_dp1();
    let expect = &SymFn::s(&Partition::new(vec![2]).unwrap()).unwrap()
        + &SymFn::s(&Partition::new(vec![1, 1]).unwrap()).unwrap();
    assert_eq!(down, expect);

    let s1 = SymFn::s(&Partition::new(vec![1]).unwrap()).unwrap();
    let up = s1.mul_p1().unwrap();
    assert_eq!(up, expect);
}
