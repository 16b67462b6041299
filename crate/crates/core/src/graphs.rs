//! Power graphs, directed power graphs and Gruenberg–Kegel graphs of finite
//! groups, plus a canonical form for small graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::prime_divisors;
use crate::group::FiniteGroup;
use crate::poset::escape_label;

/// Largest group whose power graphs are built.
pub const MAX_POWER_GRAPH_ORDER: usize = 2048;
/// Largest graph the canonical form handles.
pub const MAX_CANONICAL_VERTICES: usize = 64;
/// Search nodes allowed in one canonical-form computation.
pub const CANONICAL_NODE_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph on {requested} vertices exceeds the limit of {limit}")]
    SizeLimit { requested: usize, limit: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("canonical form search exceeded {0} nodes")]
    SearchLimit(usize),
    #[error("out-degree of element {element} is {degree} but its order is {order}")]
    OutDegree { element: usize, degree: usize, order: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph {
    labels: Vec<String>,
    directed: bool,
    /// Sorted out-neighbours (all neighbours when undirected).
    adj: Vec<Vec<u32>>,
}

impl LabeledGraph {
    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn new(labels: Vec<String>, directed: bool, edges: &[(usize, usize)]) -> Result<LabeledGraph, GraphError> {
        let n = labels.len();
        let mut sets = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(GraphError::InvalidEdge(a, b));
            }
            sets[a].insert(b as u32);
            if !directed {
                sets[b].insert(a as u32);
            }
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(LabeledGraph { labels, directed, adj })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges, or arcs when directed.
    pub fn edge_count(&self) -> usize {
        let total: usize = self.adj.iter().map(Vec::len).sum();
        if self.directed {
            total
        } else {
            total / 2
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)`; undirected edges are listed once with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adj.iter().enumerate() {
            for &b in ns {
                if self.directed || a < b as usize {
                    out.push((a, b as usize));
                }
            }
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let (kind, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = format!("{kind} {} {{\n", crate::poset::sanitize_id(name));
        for (v, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("  v{v} [label=\"{}\"];\n", escape_label(label)));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  v{a} {arrow} v{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "directed": self.directed,
            "labels": self.labels,
            "edges": self.edges(),
        })
        .to_string()
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> LabeledGraph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        LabeledGraph::new(labels, self.directed, &edges).expect("permuted edges stay valid")
    }
}

fn check_power_size(g: &FiniteGroup) -> Result<(), GraphError> {
    if g.size() > MAX_POWER_GRAPH_ORDER {
        return Err(GraphError::SizeLimit { requested: g.size(), limit: MAX_POWER_GRAPH_ORDER });
    }
    Ok(())
}

fn element_labels(g: &FiniteGroup) -> Vec<String> {
    g.elements().map(|x| x.to_string()).collect()
}

/// Edge `{g, h}` whenever one of them is a power of the other.
pub fn power_graph(g: &FiniteGroup) -> Result<LabeledGraph, GraphError> {
    check_power_size(g)?;
    let mut edges = Vec::new();
    for x in g.elements() {
        for y in g.cyclic_subgroup(x) {
            if y != x {
                edges.push((x.index(), y.index()));
            }
        }
    }
    LabeledGraph::new(element_labels(g), false, &edges)
}

/// Arc `g -> h` whenever `h` is a power of `g`; out-degree plus one is the
/// order of `g`.
pub fn directed_power_graph(g: &FiniteGroup) -> Result<LabeledGraph, GraphError> {
    check_power_size(g)?;
    let mut edges = Vec::new();
    for x in g.elements() {
        for y in g.cyclic_subgroup(x) {
            if y != x {
                edges.push((x.index(), y.index()));
            }
        }
    }
    let graph = LabeledGraph::new(element_labels(g), true, &edges)?;
    for x in g.elements() {
        let degree = graph.out_degree(x.index());
        let order = g.element_order(x);
        if degree as u64 + 1 != order {
            return Err(GraphError::OutDegree { element: x.index(), degree, order });
        }
    }
    Ok(graph)
}

/// Prime graph: vertices are the primes dividing `|G|`, edge `{p, q}` when
/// `G` has an element of order `pq`.
pub fn gk_graph(g: &FiniteGroup) -> LabeledGraph {
    let primes = prime_divisors(g.size() as u64);
    let orders: BTreeSet<u64> = g.element_orders().iter().map(|&o| o as u64).collect();
    let mut edges = Vec::new();
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let pq = primes[i] * primes[j];
            if orders.iter().any(|o| o % pq == 0) {
                edges.push((i, j));
            }
        }
    }
    let labels = primes.iter().map(u64::to_string).collect();
    LabeledGraph::new(labels, false, &edges).expect("prime indices are valid")
}

/// Isomorphism-invariant certificate of a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub directed: bool,
    pub labels: Option<Vec<String>>,
    pub adjacency: Vec<u64>,
}

struct Canon {
    n: usize,
    adj: Vec<u64>,
    radj: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    nodes: usize,
}

/// Canonical form: the least permuted adjacency matrix over the leaves of a
/// refine-and-individualize search, pruned with automorphisms found on the way.
pub fn canonical_form(g: &LabeledGraph, respect_labels: bool) -> Result<CanonicalForm, GraphError> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::SizeLimit { requested: n, limit: MAX_CANONICAL_VERTICES });
    }
    let mut adj = vec![0u64; n];
    let mut radj = vec![0u64; n];
    for (a, b) in g.edges() {
        adj[a] |= 1 << b;
        radj[b] |= 1 << a;
        if !g.directed {
            adj[b] |= 1 << a;
            radj[a] |= 1 << b;
        }
    }
    let initial: Vec<u32> = if respect_labels {
        let distinct: BTreeSet<&String> = g.labels.iter().collect();
        let distinct: Vec<&String> = distinct.into_iter().collect();
        g.labels.iter().map(|l| distinct.binary_search(&l).unwrap() as u32).collect()
    } else {
        vec![0; n]
    };
    let mut c = Canon { n, adj, radj, best: None, automorphisms: Vec::new(), nodes: 0 };
    c.automorphisms = c.twin_transpositions(&initial);
    let colours = c.refine(initial);
    c.search(colours, &mut Vec::new())?;
    let (adjacency, perm) = c.best.expect("search reaches a leaf");
    let labels = respect_labels.then(|| {
        let mut out = vec![String::new(); n];
        for v in 0..n {
            out[perm[v]] = g.labels[v].clone();
        }
        out
    });
    Ok(CanonicalForm { directed: g.directed, labels, adjacency })
}

impl Canon {
    /// Colour refinement: a vertex's new colour is its old colour plus the
    /// multiset of neighbour colours, renumbered in sorted order.
    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let mut count = distinct(&colours);
        loop {
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut out: Vec<u32> = bits(self.adj[v]).map(|u| colours[u]).collect();
                    let mut inn: Vec<u32> = bits(self.radj[v]).map(|u| colours[u]).collect();
                    out.sort_unstable();
                    inn.sort_unstable();
                    (colours[v], out, inn)
                })
                .collect();
            let mut sorted: Vec<&(u32, Vec<u32>, Vec<u32>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            colours = sigs.iter().map(|s| sorted.binary_search(&s).unwrap() as u32).collect();
            let next = sorted.len();
            if next == count {
                return colours;
            }
            count = next;
        }
    }

    fn twin_transpositions(&self, colours: &[u32]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let mask = !((1u64 << u) | (1u64 << v));
                let twins = colours[u] == colours[v]
                    && self.adj[u] & mask == self.adj[v] & mask
                    && self.radj[u] & mask == self.radj[v] & mask
                    && (self.adj[u] >> v & 1) == (self.adj[v] >> u & 1);
                if twins {
                    let mut p: Vec<usize> = (0..self.n).collect();
                    p.swap(u, v);
                    out.push(p);
                }
            }
        }
        out
    }

    fn search(&mut self, colours: Vec<u32>, prefix: &mut Vec<usize>) -> Result<(), GraphError> {
        self.nodes += 1;
        if self.nodes > CANONICAL_NODE_LIMIT {
            return Err(GraphError::SearchLimit(CANONICAL_NODE_LIMIT));
        }
        let k = distinct(&colours);
        if k == self.n {
            self.leaf(colours);
            return Ok(());
        }
        // First non-singleton cell, by colour.
        let mut sizes = vec![0usize; k];
        for &c in &colours {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let cell: Vec<usize> = (0..self.n).filter(|&v| colours[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit(prefix, v, &tried) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(u, &c)| if c > target || (c == target && u != v) { c + 1 } else { c })
                .collect();
            next[v] = target;
            let next = self.refine(next);
            prefix.push(v);
            self.search(next, prefix)?;
            prefix.pop();
        }
        Ok(())
    }

    /// Whether a known automorphism fixing `prefix` pointwise links `v` to a
    /// vertex already tried.
    fn same_orbit(&self, prefix: &[usize], v: usize, tried: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.automorphisms {
            if prefix.iter().all(|&x| a[x] == x) {
                for x in 0..self.n {
                    let (r1, r2) = (find(&mut parent, x), find(&mut parent, a[x]));
                    parent[r1] = r2;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, colours: Vec<u32>) {
        let perm: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
        let mut permuted = vec![0u64; self.n];
        for v in 0..self.n {
            for u in bits(self.adj[v]) {
                permuted[perm[v]] |= 1 << perm[u];
            }
        }
        match &self.best {
            None => self.best = Some((permuted, perm)),
            Some((best, best_perm)) => {
                if permuted == *best {
                    let mut inv = vec![0; self.n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        inv[p] = v;
                    }
                    let auto: Vec<usize> = (0..self.n).map(|v| inv[perm[v]]).collect();
                    self.automorphisms.push(auto);
                } else if permuted < *best {
                    self.best = Some((permuted, perm));
                }
            }
        }
    }
}

fn distinct(colours: &[u32]) -> usize {
    colours.iter().collect::<BTreeSet<_>>().len()
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// Isomorphism test through canonical forms. With `respect_labels`, the
/// isomorphism must also preserve vertex labels.
pub fn graphs_isomorphic(a: &LabeledGraph, b: &LabeledGraph, respect_labels: bool) -> Result<bool, GraphError> {
    if a.directed != b.directed || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let degrees = |g: &LabeledGraph| {
        let mut d: Vec<usize> = g.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return Ok(false);
    }
    if respect_labels {
        let mut la = a.labels.clone();
        let mut lb = b.labels.clone();
        la.sort();
        lb.sort();
        if la != lb {
            return Ok(false);
        }
    }
    Ok(canonical_form(a, respect_labels)? == canonical_form(b, respect_labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, alternating, cyclic, dicyclic, dihedral};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cyclic_power_graphs_are_complete() {
        for n in [4, 5, 7] {
            let g = power_graph(&cyclic(n).unwrap()).unwrap();
            assert_eq!(g.edge_count() as u64, n * (n - 1) / 2);
        }
    }

    #[test]
    fn klein_power_graph_is_star() {
        let g = power_graph(&abelian(&[2, 2]).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.out_degree(0), 3);
    }

    #[test]
    fn out_degrees() {
        let c6 = cyclic(6).unwrap();
        let d = directed_power_graph(&c6).unwrap();
        assert_eq!(d.out_degree(1), 5);
        assert_eq!(d.out_degree(0), 0);
        let q8 = dicyclic(8).unwrap();
        let d = directed_power_graph(&q8).unwrap();
        for x in q8.elements() {
            if q8.element_order(x) == 4 {
                assert_eq!(d.out_degree(x.index()), 3);
            }
        }
    }

    #[test]
    fn prime_graphs() {
        let g = gk_graph(&cyclic(6).unwrap());
        assert_eq!(g.edges(), vec![(0, 1)]);
        let a5 = gk_graph(&alternating(5).unwrap());
        assert_eq!(a5.labels(), ["2", "3", "5"]);
        assert_eq!(a5.edge_count(), 0);
        assert_eq!(gk_graph(&dihedral(6).unwrap()).edge_count(), 0);
    }

    #[test]
    fn c6_and_s3_differ() {
        let a = power_graph(&cyclic(6).unwrap()).unwrap();
        let b = power_graph(&dihedral(6).unwrap()).unwrap();
        assert!(!graphs_isomorphic(&a, &b, false).unwrap());
        assert!(graphs_isomorphic(&a, &a, false).unwrap());
    }

    #[test]
    fn canonical_form_ignores_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [abelian(&[2, 2, 2, 2]).unwrap(), dicyclic(16).unwrap(), abelian(&[4, 4]).unwrap()] {
            for graph in [power_graph(&g).unwrap(), directed_power_graph(&g).unwrap()] {
                let base = canonical_form(&graph, false).unwrap();
                let mut perm: Vec<usize> = (0..graph.vertex_count()).collect();
                for _ in 0..20 {
                    perm.shuffle(&mut rng);
                    assert_eq!(canonical_form(&graph.relabel(&perm), false).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn labels_matter_when_respected() {
        let a = LabeledGraph::new(vec!["2".into(), "3".into(), "5".into()], false, &[(0, 1)]).unwrap();
        let b = LabeledGraph::new(vec!["2".into(), "3".into(), "5".into()], false, &[(0, 2)]).unwrap();
        assert!(graphs_isomorphic(&a, &b, false).unwrap());
        assert!(!graphs_isomorphic(&a, &b, true).unwrap());
    }

    #[test]
    fn limits_and_validation() {
        assert!(matches!(LabeledGraph::new(vec!["a".into()], false, &[(0, 0)]), Err(GraphError::InvalidEdge(0, 0))));
        let big = power_graph(&cyclic(65).unwrap()).unwrap();
        assert!(matches!(canonical_form(&big, false), Err(GraphError::SizeLimit { .. })));
        assert!(matches!(power_graph(&cyclic(2049).unwrap()), Err(GraphError::SizeLimit { .. })));
    }

    #[test]
    fn dot_export() {
        let g = gk_graph(&cyclic(6).unwrap());
        let dot = g.to_dot("gk C6");
        assert!(dot.starts_with("graph gk_C6 {"));
        assert!(dot.contains("v0 -- v1"));
        assert!(dot.contains("label=\"3\""));
        let d = directed_power_graph(&cyclic(2).unwrap()).unwrap().to_dot("d");
        assert!(d.contains("v1 -> v0"));
    }
}
