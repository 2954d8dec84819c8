use biquotient::classifier::{ledger, PresentationSketch};
use biquotient::constructions::cp_sum_cp_ring;
use biquotient::freeness::{
    brute_force_free, is_free, sphere_factor, verify_witness, BruteVerdict, Factor, TwoSidedAction, Verdict,
};
use biquotient::groups_catalog::{instantiate_catalog, SimpleGroupId};
use biquotient::lattice::{hnf, LatticeSubgroup, Matrix};
use biquotient::weights_reps::{clebsch_gordan, dynkin_index, su2_rep_from_parts, sym_power, WeightRep};
use proptest::prelude::*;

fn lattice_gens() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4).prop_flat_map(|r| (Just(r), prop::collection::vec(prop::collection::vec(-8i64..=8, r), 0..=r + 1)))
}

/// Partitions of `n` into parts `k + 1`, as Sym exponents.
fn su2_parts(n: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..n, 1..=n as usize).prop_filter_map("does not sum to n", move |v| {
        let mut parts = Vec::new();
        let mut left = n;
        for k in v {
            if k + 1 <= left {
                parts.push(k);
                left -= k + 1;
            }
        }
        parts.extend(std::iter::repeat(0).take(left as usize));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().all(|k| *k == 0) {
            None
        } else {
            Some(parts)
        }
    })
}

fn su_pair() -> impl Strategy<Value = (u32, Vec<u32>, Vec<u32>)> {
    (3u32..=5).prop_flat_map(|n| (Just(n), su2_parts(n), su2_parts(n))).prop_filter("equal reps", |(_, a, b)| a != b)
}

fn su_action(n: u32, a: &[u32], b: &[u32]) -> TwoSidedAction {
    TwoSidedAction::from_reps(&su2_rep_from_parts(a), &su2_rep_from_parts(b))
        .unwrap()
        .with_group(SimpleGroupId::su(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn annihilator_double_duality((r, gens) in lattice_gens()) {
        let l = LatticeSubgroup::<i64>::from_i64(r, &gens).unwrap();
        let back = l.annihilator().character_lattice();
        prop_assert!(l.contains(&back).unwrap() && back.contains(&l).unwrap());
    }

    #[test]
    fn hnf_is_idempotent((r, gens) in lattice_gens()) {
        let m = Matrix::<i64>::from_i64_rows(r, &gens).unwrap();
        let h = hnf(&m);
        prop_assert_eq!(hnf(&h), h);
    }

    #[test]
    fn annihilator_reverses_inclusion((r, gens) in lattice_gens(), extra in prop::collection::vec(-5i64..=5, 4)) {
        let small = LatticeSubgroup::<i64>::from_i64(r, &gens).unwrap();
        let big = small.with_vector(&extra[..r]).unwrap();
        let ann_big = big.annihilator();
        let ann_small = small.annihilator();
        for t in ann_big.elements_of_order_dividing(&6) {
            prop_assert!(ann_small.contains(&t));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clebsch_gordan_weights(a in 0u32..=8, b in 0u32..=8) {
        let mut lhs: Vec<i64> = sym_power(a).tensor(&sym_power(b)).unwrap().weights.iter().map(|w| w[0]).collect();
        let mut rhs: Vec<i64> = clebsch_gordan(a, b).iter().flat_map(|c| sym_power(*c).weights).map(|w| w[0]).collect();
        lhs.sort();
        rhs.sort();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn index_is_additive(parts in prop::collection::vec(0u32..=6, 1..5)) {
        let total: i64 = parts.iter().map(|k| dynkin_index(&sym_power(*k), 1).unwrap()).sum();
        prop_assert_eq!(dynkin_index(&su2_rep_from_parts(&parts), 1).unwrap(), total);
    }

    #[test]
    fn sym_index(k in 0i64..=6) {
        prop_assert_eq!(dynkin_index(&sym_power(k as u32), 1).unwrap(), k * (k + 1) * (k + 2) / 6);
    }

    #[test]
    fn witnesses_are_sound((n, a, b) in su_pair()) {
        let act = su_action(n, &a, &b);
        if let Verdict::NotFree(c) = is_free(&act).unwrap() {
            prop_assert!(verify_witness(&act, &c.witness));
            prop_assert_eq!(c.witness.order(), c.order);
        }
    }

    #[test]
    fn lattice_method_matches_brute_force((n, a, b) in su_pair()) {
        let act = su_action(n, &a, &b);
        let v = is_free(&act).unwrap();
        match brute_force_free(&act, 40).unwrap() {
            BruteVerdict::NotFree { order, witness } => {
                prop_assert_eq!(v.witness_order(), Some(order));
                if let Verdict::NotFree(c) = v {
                    prop_assert_eq!(c.witness, witness);
                }
            }
            BruteVerdict::NoWitnessUpTo { .. } => prop_assert!(v.witness_order().map_or(true, |m| m > 40)),
        }
    }

    #[test]
    fn verdict_ignores_weight_order((n, a, b) in su_pair(), seed in any::<u64>()) {
        let act = su_action(n, &a, &b);
        let mut shuffled = act.clone();
        if let Factor::Group(g) = &mut shuffled.factors[0] {
            let len = g.left.len();
            g.left.rotate_left((seed as usize) % len);
            g.right.reverse();
        }
        let key = |v: Verdict| match v {
            Verdict::Free => None,
            Verdict::NotFree(c) => Some((c.order, c.witness)),
        };
        prop_assert_eq!(key(is_free(&act).unwrap()), key(is_free(&shuffled).unwrap()));
    }

    #[test]
    fn extra_factors_only_remove_witnesses((n, a, b) in su_pair(), w in prop::collection::vec(-3i64..=3, 1..4)) {
        let act = su_action(n, &a, &b);
        let before = is_free(&act).unwrap();
        let mut more = act.clone();
        more.factors.push(Factor::Sphere(sphere_factor(&WeightRep::circle(&w)).unwrap()));
        let after = match is_free(&more) {
            Ok(v) => v,
            // a sphere factor can change the kernel; only compare when it does not
            Err(_) => return Ok(()),
        };
        if biquotient::freeness::kernel_lattice(&more).unwrap() == biquotient::freeness::kernel_lattice(&act).unwrap() {
            match (before.witness_order(), after.witness_order()) {
                (None, Some(m)) => prop_assert!(false, "became non-free with order {}", m),
                (Some(x), Some(y)) => prop_assert!(y >= x),
                _ => {}
            }
        }
    }
}

#[test]
fn poincare_duality_of_connected_sums() {
    for n in 2..=6 {
        assert!(cp_sum_cp_ring(n).unwrap().is_poincare_symmetric());
    }
}

#[test]
fn homotopy_euler_characteristic_is_nonpositive() {
    for e in instantiate_catalog(8) {
        let l = ledger(&PresentationSketch::homogeneous(&e)).unwrap();
        assert!(l.chi_pi() <= 0, "{}: {}", e.label(), l.chi_pi());
    }
}
