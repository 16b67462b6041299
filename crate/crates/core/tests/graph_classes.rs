use ordseq_core::graphs::{canonical_form, directed_power_graph, gk_graph, graphs_isomorphic, power_graph};
use ordseq_core::group::catalog;
use ordseq_core::sequence::order_sequence;

fn classes<T: PartialEq>(keys: &[T]) -> usize {
    let mut seen: Vec<&T> = Vec::new();
    for k in keys {
        if !seen.contains(&k) {
            seen.push(k);
        }
    }
    seen.len()
}

#[test]
fn order_16_power_graphs_and_sequences() {
    let cat = catalog(16).unwrap();
    let forms: Vec<_> = cat.iter().map(|e| canonical_form(&power_graph(&e.group).unwrap(), false).unwrap()).collect();
    let seqs: Vec<_> = cat.iter().map(|e| order_sequence(&e.group)).collect();
    assert_eq!(classes(&forms), 12);
    assert_eq!(classes(&seqs), 9);
    // Isomorphic power graphs force equal sequences.
    for i in 0..cat.len() {
        for j in i + 1..cat.len() {
            if forms[i] == forms[j] {
                assert_eq!(seqs[i], seqs[j], "{} / {}", cat[i].name, cat[j].name);
            }
        }
    }
}

#[test]
fn equal_sequences_give_equal_prime_graphs() {
    for n in [12, 16, 20, 21, 60] {
        let cat = catalog(n).unwrap();
        for a in &cat {
            for b in &cat {
                if order_sequence(&a.group) == order_sequence(&b.group) {
                    assert!(graphs_isomorphic(&gk_graph(&a.group), &gk_graph(&b.group), true).unwrap());
                }
            }
        }
    }
}

#[test]
fn out_degree_law_on_catalogs() {
    for n in [8, 12, 16, 20, 21, 60] {
        for e in catalog(n).unwrap() {
            directed_power_graph(&e.group).unwrap();
        }
    }
}

#[test]
fn z4z4_and_z2q8_power_graphs() {
    let cat = catalog(16).unwrap();
    let find = |name: &str| cat.iter().find(|e| e.name == name).unwrap();
    let a = power_graph(&find("C4 x C4").group).unwrap();
    let b = power_graph(&find("C2 x Q8").group).unwrap();
    let iso = graphs_isomorphic(&a, &b, false).unwrap();
    println!("C4 x C4 and C2 x Q8 power graphs isomorphic: {iso}");
}
