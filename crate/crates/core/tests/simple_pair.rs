use std::collections::BTreeMap;

use ordseq_core::field::{psl_3_4, psl_3_4_on_points};
use ordseq_core::group::{alternating, FiniteGroup};

fn histogram(g: &FiniteGroup) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &o in g.element_orders() {
        *h.entry(o).or_insert(0) += 1;
    }
    h
}

#[test]
fn psl34_orders_match_class_sizes() {
    let g = psl_3_4().unwrap();
    assert_eq!(g.size(), 20160);
    assert_eq!(g.element_order(g.identity()), 1);
    let expected = BTreeMap::from([(1, 1), (2, 315), (3, 2240), (4, 3780), (5, 8064), (7, 5760)]);
    assert_eq!(histogram(&g), expected);
}

#[test]
fn psl34_on_points_agrees() {
    let g = psl_3_4_on_points().unwrap();
    assert_eq!(g.size(), 20160);
    assert_eq!(histogram(&g), histogram(&psl_3_4().unwrap()));
}

#[test]
fn a8_orders() {
    let g = alternating(8).unwrap();
    assert_eq!(g.size(), 20160);
    let expected =
        BTreeMap::from([(1, 1), (2, 315), (3, 1232), (4, 3780), (5, 1344), (6, 5040), (7, 5760), (15, 2688)]);
    assert_eq!(histogram(&g), expected);
}
