//! One function per verification suite. Every suite is deterministic; random
//! choices come from a seeded generator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use ordseq_core::arith::{euler_phi, factorize, gcd, prime_divisors};
use ordseq_core::field::psl_3_4;
use ordseq_core::graphs::{canonical_form, power_graph};
use ordseq_core::group::catalog::abelian_groups_of_order;
use ordseq_core::group::{
    abelian, alternating, catalog, cyclic, cyclic_extension, dicyclic, direct_product, is_isomorphic, is_nilpotent,
    nilpotent_groups_of_order, CatalogEntry, FiniteGroup, GroupError, CATALOG_ORDERS,
};
use ordseq_core::partition::{
    abelian_order_sequence, box_move_chain, cyclic_subgroup_counts, majorizes, partitions_of, Partition,
};
use ordseq_core::poset::{build_poset, extremes};
use ordseq_core::sequence::{
    dominates, nilpotent_from_sequence, order_sequence, plausible, psi, rho, seq_join, seq_product,
    strong_domination_certificate, strongly_dominates, OrderSequence,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{Recorder, SuiteReport};
use crate::witness::{
    all_witnesses, brute_force_witness, minimal_nonnilpotent_group, nonnilpotent_order_witness, witness_group,
};
use crate::BenchError;

pub const DEFAULT_SEED: u64 = 0x0DE5;

fn os(g: &FiniteGroup) -> OrderSequence {
    order_sequence(g)
}

fn entries(n: u64, r: &mut Recorder) -> Vec<CatalogEntry> {
    match catalog(n) {
        Ok(c) => c,
        Err(e) => {
            r.fail(format!("catalog({n}): {e}"));
            Vec::new()
        }
    }
}

/// Indices grouped by equal keys, in first-seen order.
fn classes<T: PartialEq>(keys: &[T]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        match out.iter_mut().find(|c| keys[c[0]] == *k) {
            Some(c) => c.push(i),
            None => out.push(vec![i]),
        }
    }
    out
}

fn proper(a: &OrderSequence, b: &OrderSequence) -> bool {
    a != b && dominates(a, b).unwrap_or(false)
}

/// Named equality checks gathered into a report.
pub struct SpotCheck(Recorder);

impl SpotCheck {
    pub fn new(name: &str) -> SpotCheck {
        SpotCheck(Recorder::new(name))
    }

    pub fn eq<T: PartialEq + fmt::Debug>(&mut self, label: &str, got: T, want: T) -> bool {
        let ok = got == want;
        self.0.check(ok, || format!("{label}: got {got:?}, expected {want:?}"))
    }

    pub fn finish(self) -> SuiteReport {
        self.0.finish()
    }
}

/// Sequences printed for small groups.
pub fn suite_reference() -> SuiteReport {
    let mut r = Recorder::new("reference");
    let cases: Vec<(&str, Result<FiniteGroup, GroupError>, Vec<u64>)> = vec![
        ("C6", cyclic(6), vec![1, 2, 3, 3, 6, 6]),
        ("S3", cyclic_extension("S3", 3, 2, 2), vec![1, 2, 2, 2, 3, 3]),
        ("C3:C4", cyclic_extension("C3:C4", 3, 4, 2), vec![1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]),
        ("A4", alternating(4), vec![1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]),
    ];
    for (name, g, want) in cases {
        match g {
            Ok(g) => {
                let got = os(&g).expanded();
                r.check(got == want, || format!("os({name}) = {got:?}, expected {want:?}"));
            }
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    r.finish()
}

/// Dic12 dominates A4 without strongly dominating it; C12 strongly dominates both.
pub fn suite_strong_example() -> SuiteReport {
    let mut r = Recorder::new("strong-example");
    let (Ok(dic), Ok(a4), Ok(c12)) = (dicyclic(12), alternating(4), cyclic(12)) else {
        r.fail("could not build Dic12, A4 and C12");
        return r.finish();
    };
    let (dic, a4, c12) = (os(&dic), os(&a4), os(&c12));
    r.check(dominates(&dic, &a4).unwrap(), || "Dic12 should dominate A4".into());
    match strong_domination_certificate(&dic, &a4).unwrap() {
        Some(cert) => {
            r.check(true, String::new);
            r.note(format!("Dic12 vs A4 not strong: {cert}"));
        }
        None => r.fail("Dic12 strongly dominates A4"),
    }
    for (name, s) in [("Dic12", &dic), ("A4", &a4)] {
        r.check(strongly_dominates(&c12, s).unwrap(), || format!("C12 should strongly dominate {name}"));
    }
    r.finish()
}

fn product_pool() -> Result<Vec<CatalogEntry>, GroupError> {
    let mut pool = Vec::new();
    for n in CATALOG_ORDERS.iter().filter(|&&n| n > 1) {
        pool.extend(catalog(*n)?);
    }
    Ok(pool)
}

/// Direct products: `os(GxH)` is the join; it is the product sequence exactly
/// for coprime orders, where `rho` factors.
pub fn suite_product(seed: u64, random_pairs: usize, coprime_pairs: usize) -> SuiteReport {
    let mut r = Recorder::new("product");
    let pool = match product_pool() {
        Ok(p) => p,
        Err(e) => {
            r.fail(e.to_string());
            return r.finish();
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = || {
        let a = pool.choose(&mut rng).unwrap();
        let b = pool.choose(&mut rng).unwrap();
        (a, b)
    };
    for _ in 0..random_pairs {
        let (a, b) = pick();
        let label = format!("{} x {}", a.name, b.name);
        let gh = match direct_product(&a.group, &b.group) {
            Ok(g) => g,
            Err(e) => {
                r.fail(format!("{label}: {e}"));
                continue;
            }
        };
        let (sa, sb, sgh) = (os(&a.group), os(&b.group), os(&gh));
        r.check(sgh == seq_join(&sa, &sb), || format!("{label}: os differs from the join"));
        let coprime = gcd(a.group.size() as u64, b.group.size() as u64) == 1;
        let product = seq_product(&sa, &sb);
        r.check((sgh == product) == coprime, || format!("{label}: product sequence equality should be {coprime}"));
        if !coprime {
            let n = gh.size() as u64;
            let rule = plausible(&product, n).map(|v| v.rule());
            r.check(rule == Some("mod-p"), || format!("{label}: product sequence rejected by {rule:?}"));
        }
    }
    let mut found = 0;
    let mut attempts = 0;
    while found < coprime_pairs && attempts < 100 * coprime_pairs.max(1) {
        attempts += 1;
        let (a, b) = pick();
        let (m, n) = (a.group.size() as u64, b.group.size() as u64);
        if gcd(m, n) != 1 {
            continue;
        }
        found += 1;
        let gh = direct_product(&a.group, &b.group).expect("small coprime product");
        let (sa, sb) = (os(&a.group), os(&b.group));
        let lhs = rho(&os(&gh));
        let rhs = rho(&sa).pow(n as u32) * rho(&sb).pow(m as u32);
        r.check(lhs == rhs, || format!("{} x {}: rho does not factor", a.name, b.name));
    }
    r.check(found == coprime_pairs, || format!("only {found} coprime pairs sampled"));
    r.finish()
}

/// Nilpotency read off the sequence agrees with the group.
pub fn suite_nilpotency() -> SuiteReport {
    let mut r = Recorder::new("nilpotency");
    for &n in &CATALOG_ORDERS {
        let cat = entries(n, &mut r);
        let seqs: Vec<OrderSequence> = cat.iter().map(|e| os(&e.group)).collect();
        let flags: Vec<bool> = cat.iter().map(|e| is_nilpotent(&e.group)).collect();
        for (i, e) in cat.iter().enumerate() {
            let from_seq = nilpotent_from_sequence(&seqs[i], n);
            r.check(from_seq == flags[i], || format!("{}: sequence says {from_seq}, group says {}", e.name, flags[i]));
        }
        for class in classes(&seqs) {
            r.check(class.iter().all(|&i| flags[i] == flags[class[0]]), || {
                let names: Vec<&str> = class.iter().map(|&i| cat[i].name.as_str()).collect();
                format!("equal sequences with different nilpotency: {names:?}")
            });
        }
    }
    r.finish()
}

/// Witness search against brute force, against the catalogs, and the
/// construction of a non-nilpotent group below every nilpotent one.
pub fn suite_witness(max_n: u64, construct: &[u64]) -> SuiteReport {
    let mut r = Recorder::new("witness");
    for n in 1..=max_n {
        let (fast, slow) = (nonnilpotent_order_witness(n), brute_force_witness(n));
        r.check(fast == slow, || format!("n={n}: search {fast:?}, brute force {slow:?}"));
    }
    for &n in &CATALOG_ORDERS {
        let has_non = entries(n, &mut r).iter().any(|e| !is_nilpotent(&e.group));
        let w = nonnilpotent_order_witness(n);
        r.check(w.is_some() == has_non, || format!("n={n}: witness {w:?} but catalog non-nilpotent = {has_non}"));
    }
    for &n in construct {
        check_construction(n, &mut r);
    }
    r.finish()
}

fn check_construction(n: u64, r: &mut Recorder) {
    let h = match minimal_nonnilpotent_group(n) {
        Ok(h) => h,
        Err(e) => return r.fail(format!("n={n}: {e}")),
    };
    r.check(!is_nilpotent(&h), || format!("n={n}: {} is nilpotent", h.name()));
    let sh = os(&h);
    let nil = match nilpotent_groups_of_order(n) {
        Ok(v) => v,
        Err(e) => return r.fail(format!("n={n}: {e}")),
    };
    let mut strong = Vec::new();
    for g in &nil {
        let sg = os(g);
        r.check(proper(&sg, &sh), || format!("n={n}: {} does not properly dominate {}", g.name(), h.name()));
        if strongly_dominates(&sg, &sh).unwrap_or(false) {
            strong.push(g.name().to_string());
        }
    }
    // The abelian group of prime exponent must dominate strongly.
    let exps: Vec<u64> = factorize(n).into_iter().flat_map(|(p, a)| std::iter::repeat_n(p, a as usize)).collect();
    if let Ok(e) = abelian(&exps) {
        r.check(strongly_dominates(&os(&e), &sh).unwrap_or(false), || {
            format!("n={n}: {} is not strongly dominated by {}", h.name(), e.name())
        });
    }
    r.note(format!(
        "n={n}: {} below all {} nilpotent groups; strongly below {}",
        h.name(),
        nil.len(),
        strong.join(", ")
    ));
}

/// The cyclic group strongly dominates every other group of its order, with
/// strictly larger `psi` and `rho`.
pub fn suite_unique_max(n: u64) -> SuiteReport {
    let mut r = Recorder::new(&format!("unique-max({n})"));
    let cat = entries(n, &mut r);
    let Some(c) = cyclic(n).ok() else {
        r.fail(format!("cannot build C{n}"));
        return r.finish();
    };
    let sc = os(&c);
    for e in &cat {
        let s = os(&e.group);
        if e.group.is_cyclic() {
            r.check(s == sc, || format!("{}: cyclic but sequence differs", e.name));
            continue;
        }
        r.check(strongly_dominates(&sc, &s).unwrap_or(false) && s != sc, || {
            format!("C{n} does not strictly strongly dominate {}", e.name)
        });
        r.check(psi(&s) < psi(&sc) && rho(&s) < rho(&sc), || format!("{}: psi or rho not below C{n}", e.name));
    }
    r.finish()
}

pub fn suite_unique_max_all() -> SuiteReport {
    SuiteReport::merge("unique-max", CATALOG_ORDERS.iter().map(|&n| suite_unique_max(n)).collect())
}

/// Exact gap bounds against the cyclic group, with `q` the least prime of `n`.
pub fn suite_gap_bounds(n: u64) -> SuiteReport {
    let mut r = Recorder::new(&format!("gap-bounds({n})"));
    if n < 2 {
        r.note("no non-cyclic groups");
        return r.finish();
    }
    let q = prime_divisors(n)[0];
    let phi = euler_phi(n);
    let cat = entries(n, &mut r);
    let sc = os(&cyclic(n).expect("catalog order"));
    let (rho_c, psi_c) = (rho(&sc), psi(&sc));
    let subtrahend = BigUint::from(n) * phi * (q - 1) / q;
    let psi_bound = &psi_c - &subtrahend;
    let rho_scale = BigUint::from(q).pow(phi as u32);
    let qq = if n == q * q { abelian(&[q, q]).ok().map(|g| os(&g)) } else { None };
    let q8 = if n == 8 { dicyclic(8).ok().map(|g| os(&g)) } else { None };
    let mut equal = Vec::new();
    for e in cat.iter().filter(|e| !e.group.is_cyclic()) {
        let s = os(&e.group);
        let (rho_g, psi_g) = (rho(&s), psi(&s));
        let lhs = &rho_g * &rho_scale;
        r.check(lhs <= rho_c, || format!("{}: rho {rho_g} * {q}^{phi} exceeds rho(C{n}) = {rho_c}", e.name));
        r.check(psi_g <= psi_bound, || format!("{}: psi {psi_g} exceeds {psi_bound}", e.name));
        let rho_eq = lhs == rho_c;
        let psi_eq = psi_g == psi_bound;
        let expected = Some(&s) == qq.as_ref() || Some(&s) == q8.as_ref();
        r.check(rho_eq == expected && psi_eq == expected, || {
            format!("{}: equality (rho {rho_eq}, psi {psi_eq}) but expected {expected}", e.name)
        });
        if rho_eq || psi_eq {
            equal.push(e.name.clone());
        }
    }
    if !equal.is_empty() {
        r.note(format!("equality: {}", equal.join(", ")));
    }
    r.note(format!("psi(C{n}) = {psi_c}, psi bound {psi_bound}, rho(C{n}) = {rho_c}"));
    r.finish()
}

pub fn suite_gap_bounds_all() -> SuiteReport {
    let reports = CATALOG_ORDERS.iter().filter(|&&n| n > 1).map(|&n| suite_gap_bounds(n)).collect();
    SuiteReport::merge("gap-bounds", reports)
}

/// An extension `K` of an abelian `G` by `H`, with coprime orders.
pub struct ExtensionCase {
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    pub k: FiniteGroup,
}

pub fn default_extension_cases() -> Result<Vec<ExtensionCase>, GroupError> {
    Ok(vec![
        ExtensionCase { g: abelian(&[2, 2])?, h: cyclic(3)?, k: alternating(4)? },
        ExtensionCase { g: cyclic(3)?, h: cyclic(4)?, k: dicyclic(12)? },
        ExtensionCase { g: cyclic(5)?, h: cyclic(4)?, k: cyclic_extension("F20", 5, 4, 2)? },
        ExtensionCase { g: cyclic(7)?, h: cyclic(3)?, k: cyclic_extension("F21", 7, 3, 2)? },
    ])
}

pub fn suite_extension(cases: &[ExtensionCase]) -> SuiteReport {
    let mut r = Recorder::new("extension");
    for c in cases {
        let label = format!("({}, {}, {})", c.g.name(), c.h.name(), c.k.name());
        let (m, n) = (c.g.size() as u64, c.h.size() as u64);
        if !c.g.is_abelian() || gcd(m, n) != 1 || c.k.size() as u64 != m * n {
            r.fail(format!("{label}: malformed case"));
            continue;
        }
        let bound = seq_product(&os(&c.g), &os(&c.h));
        r.check(strongly_dominates(&bound, &os(&c.k)).unwrap_or(false), || {
            format!("{label}: os(G) * os(H) does not strongly dominate os(K)")
        });
    }
    r.finish()
}

fn prime_exponent(g: &FiniteGroup) -> bool {
    g.element_orders().iter().all(|&o| factorize(o as u64).iter().all(|&(_, a)| a == 1))
}

/// Minimal nilpotent groups have Sylows of prime exponent; the constructed
/// non-nilpotent group sits properly below all nilpotent groups.
pub fn suite_nilpotent_minimality(n: u64) -> SuiteReport {
    let mut r = Recorder::new(&format!("nilpotent-minimality({n})"));
    let nil = match nilpotent_groups_of_order(n) {
        Ok(v) => v,
        Err(e) => {
            r.fail(e.to_string());
            return r.finish();
        }
    };
    let seqs: Vec<OrderSequence> = nil.iter().map(os).collect();
    for (i, g) in nil.iter().enumerate() {
        let minimal = !seqs.iter().any(|t| proper(&seqs[i], t));
        if minimal {
            r.check(prime_exponent(g), || format!("{} is minimal without prime-exponent Sylows", g.name()));
            r.note(format!("minimal nilpotent: {}", g.name()));
        }
    }
    if nonnilpotent_order_witness(n).is_some() {
        check_construction(n, &mut r);
    }
    r.finish()
}

pub const MINIMALITY_ORDERS: [u64; 5] = [12, 16, 20, 24, 60];

pub fn suite_nilpotent_minimality_all() -> SuiteReport {
    let reports = MINIMALITY_ORDERS.iter().map(|&n| suite_nilpotent_minimality(n)).collect();
    SuiteReport::merge("nilpotent-minimality", reports)
}

/// `C_m x P_1 x ... x P_k` with non-cyclic `p`-groups `P_i` for distinct primes.
pub struct BoundCase {
    pub m: u64,
    pub parts: Vec<FiniteGroup>,
}

pub fn default_bound_cases() -> Result<Vec<BoundCase>, GroupError> {
    Ok(vec![
        BoundCase { m: 1, parts: vec![abelian(&[2, 2])?] },
        BoundCase { m: 3, parts: vec![abelian(&[2, 2])?] },
        BoundCase { m: 5, parts: vec![dicyclic(8)?] },
        BoundCase { m: 1, parts: vec![abelian(&[3, 3])?, abelian(&[2, 2])?] },
        BoundCase { m: 7, parts: vec![abelian(&[3, 3])?] },
    ])
}

/// Both sides of the improved nilpotent bound, scaled to integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSides {
    pub label: String,
    /// `rho(G) * prod p_i^(|G|(p_i - 1)/p_i)`.
    pub lhs: BigUint,
    /// `rho(C_|G|)`.
    pub rhs: BigUint,
    /// Every `P_i` is elementary abelian of rank 2.
    pub rank_two: bool,
}

impl BoundCase {
    pub fn label(&self) -> String {
        let names: Vec<&str> = self.parts.iter().map(|g| g.name()).collect();
        format!("C{} x {}", self.m, names.join(" x "))
    }

    pub fn sides(&self) -> Result<BoundSides, String> {
        let label = self.label();
        let mut primes = Vec::new();
        let mut ok = self.m >= 1;
        for g in &self.parts {
            let f = factorize(g.size() as u64);
            ok &= f.len() == 1 && !g.is_cyclic() && gcd(self.m, g.size() as u64) == 1;
            if let Some(&(p, _)) = f.first() {
                ok &= !primes.contains(&p);
                primes.push(p);
            }
        }
        if !ok {
            return Err(format!("{label}: malformed case"));
        }
        let mut s = os(&cyclic(self.m).map_err(|e| e.to_string())?);
        for g in &self.parts {
            s = seq_product(&s, &os(g));
        }
        let size = s.len();
        let scale: BigUint = primes.iter().map(|&p| BigUint::from(p).pow((size * (p - 1) / p) as u32)).product();
        let lhs = rho(&s) * scale;
        let rhs = rho(&os(&cyclic(size).map_err(|e| format!("{label}: {e}"))?));
        let rank_two = self.parts.iter().zip(&primes).all(|(g, &p)| abelian(&[p, p]).is_ok_and(|e| os(&e) == os(g)));
        Ok(BoundSides { label, lhs, rhs, rank_two })
    }
}

/// Exact check of `rho(G) * prod p_i^(|G|(p_i - 1)/p_i) <= rho(C_|G|)`, with
/// equality when every part is elementary abelian of rank 2.
pub fn suite_improved_bound(cases: &[BoundCase]) -> SuiteReport {
    let mut r = Recorder::new("improved-bound");
    for c in cases {
        let BoundSides { label, lhs, rhs, rank_two } = match c.sides() {
            Ok(x) => x,
            Err(e) => {
                r.fail(e);
                continue;
            }
        };
        r.check(lhs <= rhs, || format!("{label}: {lhs} > {rhs}"));
        if rank_two {
            r.check(lhs == rhs, || format!("{label}: every part is elementary of rank 2 but {lhs} < {rhs}"));
        }
        let rel = if lhs == rhs { "=" } else { "<" };
        r.note(format!("{label}: {lhs} {rel} {rhs}"));
    }
    r.finish()
}

/// Partition dictionary for abelian `p`-groups of order `p^n`.
pub fn suite_partition(n: u64, p: u64) -> SuiteReport {
    let mut r = Recorder::new(&format!("partition(n={n}, p={p})"));
    let parts = match partitions_of(n) {
        Ok(v) => v,
        Err(e) => {
            r.fail(e.to_string());
            return r.finish();
        }
    };
    let seqs: Vec<OrderSequence> = parts.iter().map(|a| abelian_order_sequence(p, a).unwrap()).collect();
    let cyc: Vec<u64> = parts.iter().map(|a| cyclic_subgroup_counts(p, a).unwrap().total).collect();
    for (i, a) in parts.iter().enumerate() {
        for (j, c) in parts.iter().enumerate() {
            let dom = dominates(&seqs[i], &seqs[j]).unwrap();
            let conj = majorizes(&c.conjugate(), &a.conjugate()).unwrap();
            let maj = majorizes(a, c).unwrap();
            r.check(dom == conj && conj == maj, || {
                format!("{a} vs {c}: domination {dom}, conjugates {conj}, majorization {maj}")
            });
            if maj {
                r.check(cyc[i] <= cyc[j], || format!("{a} majorizes {c} but cyc {} > {}", cyc[i], cyc[j]));
                let chain = box_move_chain(a, c).unwrap();
                let increasing = chain.windows(2).all(|w| w[0].divisor_product() < w[1].divisor_product());
                r.check(increasing, || format!("{a} -> {c}: a box move does not raise prod(r_i + 1)"));
            }
        }
    }
    if (n, p) == (6, 2) {
        converse_counterexample(&mut r);
    }
    r.finish()
}

/// `(4,1,1)` and `(3,3)` at `p = 2`: incomparable sequences, with the
/// cyclic-subgroup counts quoted as 20 and 16.
fn converse_counterexample(r: &mut Recorder) {
    let a: Partition = "4+1+1".parse().unwrap();
    let c: Partition = "3+3".parse().unwrap();
    let (sa, sc) = (abelian_order_sequence(2, &a).unwrap(), abelian_order_sequence(2, &c).unwrap());
    let incomparable = !dominates(&sa, &sc).unwrap() && !dominates(&sc, &sa).unwrap();
    r.check(incomparable, || format!("{a} and {c} have comparable sequences"));
    let (ca, cc) = (cyclic_subgroup_counts(2, &a).unwrap(), cyclic_subgroup_counts(2, &c).unwrap());
    r.check(ca.total == 20, || format!("cyc(C16 x C2 x C2) = {}, expected 20", ca.total));
    r.check(cc.total == 16, || {
        format!(
            "cyc(C8 x C8) = {}, expected 16 (16 is prod(r_i + 1) = {}, which is not the subgroup count)",
            cc.total, cc.divisor_product
        )
    });
    r.note(format!("cyc(C16 x C2 x C2) = {}, cyc(C8 x C8) = {}", ca.total, cc.total));
}

pub fn suite_partition_all() -> SuiteReport {
    let mut reports = Vec::new();
    for p in [2, 3] {
        for n in 1..=10 {
            reports.push(suite_partition(n, p));
        }
    }
    SuiteReport::merge("partition", reports)
}

pub fn suite_order16() -> SuiteReport {
    let mut r = Recorder::new("order16");
    let cat = entries(16, &mut r);
    r.check(cat.len() == 14, || format!("{} groups, expected 14", cat.len()));
    let seqs: Vec<OrderSequence> = cat.iter().map(|e| os(&e.group)).collect();
    let seq_classes = classes(&seqs).len();
    r.check(seq_classes == 9, || format!("{seq_classes} sequence classes, expected 9"));
    let forms: Result<Vec<_>, _> =
        cat.iter().map(|e| power_graph(&e.group).and_then(|g| canonical_form(&g, false))).collect();
    match forms {
        Ok(forms) => {
            let graph_classes = classes(&forms).len();
            r.check(graph_classes == 12, || format!("{graph_classes} power-graph classes, expected 12"));
            for i in 0..cat.len() {
                for j in i + 1..cat.len() {
                    if forms[i] == forms[j] {
                        r.check(seqs[i] == seqs[j], || {
                            format!("{} and {} share a power graph but not a sequence", cat[i].name, cat[j].name)
                        });
                    }
                }
            }
        }
        Err(e) => r.fail(e.to_string()),
    }
    let find = |name: &str| cat.iter().position(|e| e.name == name);
    match (find("C4 x C4"), find("C2 x Q8")) {
        (Some(i), Some(j)) => {
            r.check(seqs[i] == seqs[j], || "C4 x C4 and C2 x Q8 have different sequences".into());
        }
        _ => r.fail("C4 x C4 or C2 x Q8 missing from the catalog"),
    }
    r.finish()
}

fn leq_by_domination(x: &OrderSequence, y: &OrderSequence) -> bool {
    dominates(y, x).unwrap_or(false)
}

pub fn suite_order60() -> SuiteReport {
    let mut r = Recorder::new("order60");
    let cat = entries(60, &mut r);
    r.check(cat.len() == 13, || format!("{} groups, expected 13", cat.len()));
    let seqs: Vec<OrderSequence> = cat.iter().map(|e| os(&e.group)).collect();
    let distinct = classes(&seqs).len();
    r.check(distinct == 13, || format!("{distinct} distinct sequences, expected 13"));
    let items: Vec<(String, OrderSequence)> = cat.iter().map(|e| e.name.clone()).zip(seqs.clone()).collect();
    let poset = match build_poset(&items, leq_by_domination, true) {
        Ok(p) => p,
        Err(e) => {
            r.fail(e.to_string());
            return r.finish();
        }
    };
    let ext = extremes(&poset);
    let top = ext.maximal.first().map(|&i| poset.items()[i].name.clone());
    r.check(ext.unique_max && top.as_deref() == Some("C60"), || format!("maximal classes {:?}", ext.maximal));
    let minimal: Vec<String> = ext.minimal.iter().map(|&i| poset.items()[i].name.clone()).collect();
    r.check(minimal.len() == 4, || format!("minimal classes {minimal:?}, expected 4"));
    r.check(minimal.iter().any(|m| m == "A5"), || "A5 is not minimal".into());
    r.note(format!("minimal: {}", minimal.join(", ")));
    let nil: Vec<usize> = (0..cat.len()).filter(|&i| is_nilpotent(&cat[i].group)).collect();
    r.check(nil.len() == 2, || format!("{} nilpotent groups, expected 2", nil.len()));
    let below = (0..cat.len())
        .filter(|i| !nil.contains(i) && nil.iter().all(|&j| dominates(&seqs[j], &seqs[*i]).unwrap()))
        .count();
    r.note(format!("{below} non-nilpotent groups lie below both nilpotent groups"));
    // One group per witness (p,d,q) of 60.
    let mut built = Vec::new();
    for w in all_witnesses(60) {
        let h = match witness_group(60, w) {
            Ok(h) => h,
            Err(e) => {
                r.fail(format!("witness {w}: {e}"));
                continue;
            }
        };
        let sh = os(&h);
        r.check(!is_nilpotent(&h), || format!("witness {w}: {} is nilpotent", h.name()));
        r.check(nil.iter().all(|&j| dominates(&seqs[j], &sh).unwrap()), || {
            format!("witness {w}: {} is not below both nilpotent groups", h.name())
        });
        let hit = cat.iter().find(|e| is_isomorphic(&e.group, &h).unwrap_or(false));
        match hit {
            Some(e) => {
                built.push(format!("{w} -> {} ({})", e.name, e.gap_id.map_or("?".into(), |i| format!("60,{i}"))))
            }
            None => r.fail(format!("witness {w}: {} matches no catalog group", h.name())),
        }
    }
    r.check(built.len() == 3, || format!("{} witness groups, expected 3", built.len()));
    r.note(format!("witness groups: {}", built.join("; ")));
    r.finish()
}

fn first_incomparable(seqs: &[(String, OrderSequence)]) -> Option<(String, String)> {
    for (i, (a, sa)) in seqs.iter().enumerate() {
        for (b, sb) in &seqs[i + 1..] {
            if !dominates(sa, sb).unwrap() && !dominates(sb, sa).unwrap() {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Smallest orders with incomparable sequences, over all groups and over
/// abelian groups.
pub fn suite_antichain() -> SuiteReport {
    let mut r = Recorder::new("antichain");
    for n in 1..=12 {
        let seqs: Vec<(String, OrderSequence)> =
            entries(n, &mut r).iter().map(|e| (e.name.clone(), os(&e.group))).collect();
        let pair = first_incomparable(&seqs);
        if n < 12 {
            r.check(pair.is_none(), || format!("order {n}: {pair:?} incomparable"));
        } else {
            r.check(pair.is_some(), || "no incomparable pair at order 12".into());
            if let Some((a, b)) = pair {
                r.note(format!("order 12: {a} and {b} are incomparable"));
            }
        }
    }
    for n in 1..=36 {
        let seqs: Vec<(String, OrderSequence)> = match abelian_groups_of_order(n) {
            Ok(gs) => gs.iter().map(|g| (g.name().to_string(), os(g))).collect(),
            Err(e) => {
                r.fail(format!("abelian groups of order {n}: {e}"));
                continue;
            }
        };
        let pair = first_incomparable(&seqs);
        if n < 36 {
            r.check(pair.is_none(), || format!("abelian order {n}: {pair:?} incomparable"));
        } else {
            r.check(pair.is_some(), || "no incomparable abelian pair at order 36".into());
            if let Some((a, b)) = pair {
                r.note(format!("abelian order 36: {a} and {b} are incomparable"));
            }
        }
    }
    r.finish()
}

/// A8 against PSL(3,4), both of order 20160.
pub fn suite_simple_pair() -> SuiteReport {
    let mut r = Recorder::new("simple-pair");
    let (a8, psl) = match (alternating(8), psl_3_4()) {
        (Ok(a), Ok(p)) => (a, p),
        (Err(e), _) => return failed("simple-pair", e),
        (_, Err(e)) => return failed("simple-pair", e),
    };
    r.check(a8.size() == 20160 && psl.size() == 20160, || format!("orders {} and {}", a8.size(), psl.size()));
    let (sa, sp) = (os(&a8), os(&psl));
    r.check(sa.entries()[0] == (1, 1) && sp.entries()[0] == (1, 1), || "identity entry missing".into());
    r.check(dominates(&sa, &sp).unwrap_or(false), || format!("os(A8) = {sa} does not dominate os(PSL(3,4)) = {sp}"));
    let strong = strongly_dominates(&sa, &sp).unwrap_or(false);
    r.note(format!("os(A8) = {sa}"));
    r.note(format!("os(PSL(3,4)) = {sp}"));
    r.note(format!("domination is {}", if strong { "strong" } else { "not strong" }));
    r.finish()
}

/// Suites addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Reference,
    StrongExample,
    Product,
    Nilpotency,
    Witness,
    UniqueMax,
    GapBounds,
    Extension,
    NilpotentMinimality,
    ImprovedBound,
    Partition,
    Order16,
    Order60,
    Antichain,
    SimplePair,
}

/// Parameters a suite may use; `None` means the suite's full default range.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub order: Option<u64>,
    pub prime: Option<u64>,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { order: None, prime: None, seed: DEFAULT_SEED }
    }
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Reference,
        Suite::StrongExample,
        Suite::Product,
        Suite::Nilpotency,
        Suite::Witness,
        Suite::UniqueMax,
        Suite::GapBounds,
        Suite::Extension,
        Suite::NilpotentMinimality,
        Suite::ImprovedBound,
        Suite::Partition,
        Suite::Order16,
        Suite::Order60,
        Suite::Antichain,
        Suite::SimplePair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Reference => "reference",
            Suite::StrongExample => "strong-example",
            Suite::Product => "product",
            Suite::Nilpotency => "nilpotency",
            Suite::Witness => "witness",
            Suite::UniqueMax => "unique-max",
            Suite::GapBounds => "gap-bounds",
            Suite::Extension => "extension",
            Suite::NilpotentMinimality => "nilpotent-minimality",
            Suite::ImprovedBound => "improved-bound",
            Suite::Partition => "partition",
            Suite::Order16 => "order16",
            Suite::Order60 => "order60",
            Suite::Antichain => "antichain",
            Suite::SimplePair => "simple-pair",
        }
    }

    /// Left out of `--all` unless stretch suites are requested.
    pub fn is_stretch(self) -> bool {
        self == Suite::SimplePair
    }

    pub fn run(self, opts: &SuiteOptions) -> SuiteReport {
        match self {
            Suite::Reference => suite_reference(),
            Suite::StrongExample => suite_strong_example(),
            Suite::Product => suite_product(opts.seed, 50, 20),
            Suite::Nilpotency => suite_nilpotency(),
            Suite::Witness => suite_witness(200, &[12, 24, 60]),
            Suite::UniqueMax => opts.order.map_or_else(suite_unique_max_all, suite_unique_max),
            Suite::GapBounds => opts.order.map_or_else(suite_gap_bounds_all, suite_gap_bounds),
            Suite::Extension => match default_extension_cases() {
                Ok(c) => suite_extension(&c),
                Err(e) => failed("extension", e),
            },
            Suite::NilpotentMinimality => {
                opts.order.map_or_else(suite_nilpotent_minimality_all, suite_nilpotent_minimality)
            }
            Suite::ImprovedBound => match default_bound_cases() {
                Ok(c) => suite_improved_bound(&c),
                Err(e) => failed("improved-bound", e),
            },
            Suite::Partition => match (opts.order, opts.prime) {
                (None, None) => suite_partition_all(),
                (n, p) => suite_partition(n.unwrap_or(6), p.unwrap_or(2)),
            },
            Suite::Order16 => suite_order16(),
            Suite::Order60 => suite_order60(),
            Suite::Antichain => suite_antichain(),
            Suite::SimplePair => suite_simple_pair(),
        }
    }
}

fn failed(name: &str, e: impl fmt::Display) -> SuiteReport {
    let mut r = Recorder::new(name);
    r.fail(e.to_string());
    r.finish()
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| BenchError::UnknownSuite(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for rep in [suite_reference(), suite_strong_example(), suite_unique_max(12), suite_gap_bounds(8)] {
            assert!(rep.passed, "{rep}");
        }
    }

    #[test]
    fn gap_bounds_equality_names_q8() {
        let rep = suite_gap_bounds(8);
        assert!(rep.notes.iter().any(|n| n == "equality: Q8"), "{rep}");
        let rep = suite_gap_bounds(4);
        assert!(rep.notes.iter().any(|n| n == "equality: C2 x C2"), "{rep}");
        assert!(suite_gap_bounds(6).notes.iter().all(|n| !n.starts_with("equality")));
    }

    #[test]
    fn trivial_orders() {
        assert!(suite_unique_max(1).passed);
        assert!(suite_partition(1, 2).passed);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("unknown".parse::<Suite>().is_err());
    }

    #[test]
    fn malformed_cases_are_reported() {
        let bad = ExtensionCase { g: cyclic(2).unwrap(), h: cyclic(2).unwrap(), k: cyclic(4).unwrap() };
        assert!(!suite_extension(&[bad]).passed);
        let bad = BoundCase { m: 2, parts: vec![abelian(&[2, 2]).unwrap()] };
        assert!(!suite_improved_bound(&[bad]).passed);
    }
}
