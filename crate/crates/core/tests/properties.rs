use ordseq_core::group::{abelian, catalog};
use ordseq_core::partition::{
    abelian_order_sequence, box_move_chain, cyclic_subgroup_counts, defining_partition, majorizes, partitions_of,
    Partition,
};
use ordseq_core::sequence::{
    dominates, order_sequence, plausible, rho, seq_join, seq_product, strongly_dominates, OrderSequence,
};
use proptest::prelude::*;

fn partition(max_n: u64) -> impl Strategy<Value = Partition> {
    (1..=max_n, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = partitions_of(n).unwrap();
        all[i.index(all.len())].clone()
    })
}

fn partition_pair(max_n: u64) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_n, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(|(n, i, j)| {
        let all = partitions_of(n).unwrap();
        (all[i.index(all.len())].clone(), all[j.index(all.len())].clone())
    })
}

fn orders(len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=12, len)
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

/// Brute force over all bijections.
fn strong_oracle(a: &[u64], b: &[u64]) -> bool {
    fn go(b: &[u64], a: &[u64], used: &mut Vec<bool>) -> bool {
        let Some((&first, rest)) = b.split_first() else { return true };
        for j in 0..a.len() {
            if !used[j] && a[j] % first == 0 {
                used[j] = true;
                if go(rest, a, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(b, a, &mut vec![false; a.len()])
}

proptest! {
    #[test]
    fn domination_matches_sorted_comparison(a in orders(7), b in orders(7)) {
        let elementwise = sorted(a.clone()).iter().zip(&sorted(b.clone())).all(|(x, y)| x >= y);
        let (a, b) = (OrderSequence::from_orders(a).unwrap(), OrderSequence::from_orders(b).unwrap());
        prop_assert_eq!(dominates(&a, &b).unwrap(), elementwise);
    }

    #[test]
    fn strong_domination_matches_bijection_search(a in orders(6), b in orders(6)) {
        let expected = strong_oracle(&a, &b);
        let (sa, sb) = (OrderSequence::from_orders(a).unwrap(), OrderSequence::from_orders(b).unwrap());
        let strong = strongly_dominates(&sa, &sb).unwrap();
        prop_assert_eq!(strong, expected);
        if strong {
            prop_assert!(dominates(&sa, &sb).unwrap());
        }
    }

    #[test]
    fn text_round_trip(a in orders(8)) {
        let s = OrderSequence::from_orders(a).unwrap();
        prop_assert_eq!(s.to_string().parse::<OrderSequence>().unwrap(), s.clone());
        prop_assert_eq!(s.to_json().parse::<OrderSequence>().unwrap(), s);
    }

    #[test]
    fn join_and_product_laws(a in orders(3), b in orders(4), c in orders(2)) {
        let (x, y, z) = (
            OrderSequence::from_orders(a).unwrap(),
            OrderSequence::from_orders(b).unwrap(),
            OrderSequence::from_orders(c).unwrap(),
        );
        let one = OrderSequence::trivial();
        for op in [seq_join, seq_product] {
            prop_assert_eq!(op(&x, &y), op(&y, &x));
            prop_assert_eq!(op(&op(&x, &y), &z), op(&x, &op(&y, &z)));
            prop_assert_eq!(op(&x, &one), x.clone());
        }
        // Product entries are at least the join entries.
        prop_assert!(dominates(&seq_product(&x, &y), &seq_join(&x, &y)).unwrap());
        let expected = rho(&x).pow(y.len() as u32) * rho(&y).pow(x.len() as u32);
        prop_assert_eq!(rho(&seq_product(&x, &y)), expected);
    }

    #[test]
    fn conjugation_is_an_involution(a in partition(20)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.conjugate().n(), a.n());
        prop_assert_eq!(a.to_string().parse::<Partition>().unwrap(), a);
    }

    #[test]
    fn majorization_is_antisymmetric((a, c) in partition_pair(9)) {
        if majorizes(&a, &c).unwrap() && majorizes(&c, &a).unwrap() {
            prop_assert_eq!(a, c);
        }
    }

    #[test]
    fn box_moves_step_down_one_box((a, c) in partition_pair(12)) {
        let (a, c) = if majorizes(&a, &c).unwrap() { (a, c) } else { (c, a) };
        prop_assume!(majorizes(&a, &c).unwrap());
        let chain = box_move_chain(&a, &c).unwrap();
        prop_assert_eq!(chain.first(), Some(&a));
        prop_assert_eq!(chain.last(), Some(&c));
        for w in chain.windows(2) {
            prop_assert!(majorizes(&w[0], &w[1]).unwrap());
            let diff: u64 = (0..w[0].len().max(w[1].len()) + 1)
                .map(|i| w[0].part(i).abs_diff(w[1].part(i)))
                .sum();
            prop_assert_eq!(diff, 2);
            prop_assert!(w[0].divisor_product() < w[1].divisor_product());
        }
    }

    #[test]
    fn defining_partition_round_trip(a in partition(12), p in prop::sample::select(vec![2u64, 3, 5])) {
        prop_assume!((p as f64).powi(a.n() as i32) <= 1e9);
        let s = abelian_order_sequence(p, &a).unwrap();
        prop_assert_eq!(defining_partition(&s, p).unwrap(), a);
    }
}

#[test]
fn three_way_equivalence_exhaustive() {
    for p in [2u64, 3] {
        for n in 1..=10 {
            let parts = partitions_of(n).unwrap();
            let seqs: Vec<OrderSequence> = parts.iter().map(|a| abelian_order_sequence(p, a).unwrap()).collect();
            for (i, a) in parts.iter().enumerate() {
                for (j, c) in parts.iter().enumerate() {
                    let dom = dominates(&seqs[i], &seqs[j]).unwrap();
                    let conj = majorizes(&c.conjugate(), &a.conjugate()).unwrap();
                    let maj = majorizes(a, c).unwrap();
                    assert!(dom == conj && conj == maj, "p={p} {a} vs {c}");
                }
            }
        }
    }
}

#[test]
fn majorization_orders_cyclic_counts() {
    for p in [2u64, 3] {
        for n in 1..=10 {
            let parts = partitions_of(n).unwrap();
            let totals: Vec<u64> = parts.iter().map(|a| cyclic_subgroup_counts(p, a).unwrap().total).collect();
            for (i, a) in parts.iter().enumerate() {
                for (j, c) in parts.iter().enumerate() {
                    if majorizes(a, c).unwrap() {
                        assert!(totals[i] <= totals[j], "p={p} {a} vs {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn symbolic_sequences_match_enumeration() {
    for p in [2u64, 3, 5, 7] {
        for n in 1.. {
            if p.pow(n as u32) > 2048 {
                break;
            }
            for a in partitions_of(n).unwrap() {
                let factors: Vec<u64> = a.parts().iter().map(|&r| p.pow(r as u32)).collect();
                let g = abelian(&factors).unwrap();
                assert_eq!(order_sequence(&g), abelian_order_sequence(p, &a).unwrap(), "p={p} {a}");
            }
        }
    }
}

#[test]
fn distinct_partitions_give_distinct_sequences() {
    for n in 1..=12 {
        let seqs: Vec<OrderSequence> =
            partitions_of(n).unwrap().iter().map(|a| abelian_order_sequence(2, a).unwrap()).collect();
        for i in 0..seqs.len() {
            for j in i + 1..seqs.len() {
                assert_ne!(seqs[i], seqs[j]);
            }
        }
    }
}

#[test]
fn catalog_sequences_are_plausible() {
    for n in (1..=16).chain([20, 21, 60]) {
        for e in catalog(n).unwrap() {
            let s = order_sequence(&e.group);
            assert_eq!(plausible(&s, n), None, "{}", e.name);
        }
    }
}
