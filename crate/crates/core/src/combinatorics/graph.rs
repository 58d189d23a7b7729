use std::collections::BTreeMap;

use serde::Serialize;

use super::Clutter;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph`]; adjacency is held in `u64`
/// bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`, with labels kept for
/// reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub connected: bool,
    pub bipartite: bool,
    pub unmixed: bool,
}

/// Verdict of the vertex-disjoint odd cycle test, with both readings of the
/// joining requirement recorded side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCycleCondition {
    pub holds: bool,
    /// Every disjoint pair induces a connected subgraph.
    pub induced_connected: bool,
    /// Every disjoint pair is joined by at least one edge.
    pub joined_by_edge: bool,
    /// First violating pair, as vertex sequences.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
    pub cycles: usize,
    pub disjoint_pairs: usize,
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_to_vec(m: u64) -> Vec<usize> {
    bits(m).collect()
}

impl Graph {
    /// Graph on `n` vertices labelled `1..=n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::MalformedInput(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("loop at vertex {}", labels[u])));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::MalformedInput(format!(
                    "repeated edge {{{}, {}}}",
                    labels[u], labels[v]
                )));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Graph {
            labels,
            edges: normalized,
            adj,
        })
    }

    /// Graph on `n` vertices from a bitmask over the pairs `(i, j)`, `i < j`,
    /// enumerated row by row.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).expect("pair mask yields a simple graph")
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn all(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in bits(!self.adj[u] & all & !((2u64 << u) - 1)) {
                edges.push((u, v));
            }
        }
        Graph::with_labels(self.labels.clone(), &edges).expect("complement is simple")
    }

    /// Edge clutter; fails when some vertex is isolated.
    pub fn to_clutter(&self) -> Result<Clutter> {
        Clutter::with_labels(
            self.labels.clone(),
            self.edges.iter().map(|&(u, v)| vec![u, v]).collect(),
        )
    }

    /// Whether the subgraph induced on `mask` is connected (the empty set
    /// counts as connected).
    pub fn induces_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let mut seen = 1u64 << mask.trailing_zeros();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.all())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![None::<bool>; self.n()];
        for s in 0..self.n() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let c = colour[u].unwrap();
                for v in bits(self.adj[u]) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!c);
                            stack.push(v);
                        }
                        Some(cv) if cv == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// All inclusion-maximal cliques, each as sorted vertex indices, in
    /// lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        bron_kerbosch(&self.adj, 0, self.all(), 0, &mut out);
        let mut sets: Vec<Vec<usize>> = out.into_iter().map(mask_to_vec).collect();
        sets.sort();
        sets
    }

    /// All inclusion-maximal independent sets, as maximal cliques of the
    /// complement.
    pub fn maximal_independent_sets(&self) -> Vec<Vec<usize>> {
        self.complement().maximal_cliques()
    }

    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    pub fn is_unmixed(&self) -> bool {
        let sets = self.maximal_independent_sets();
        sets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            unmixed: self.is_unmixed(),
        }
    }

    /// Clutter of maximal cliques.
    pub fn clique_clutter(&self) -> Clutter {
        Clutter::with_labels(self.labels.clone(), self.maximal_cliques())
            .expect("maximal cliques form a clutter covering every vertex")
    }

    /// An induced odd cycle of length at least five, if any.
    pub fn odd_hole(&self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        let mut meter = budget.meter("searching for odd holes");
        for s in 0..self.n() {
            let mut path = vec![s];
            if let Some(h) = self.extend_hole(&mut path, 1u64 << s, &mut meter)? {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }

    fn extend_hole(
        &self,
        path: &mut Vec<usize>,
        on_path: u64,
        meter: &mut crate::budget::Meter,
    ) -> Result<Option<Vec<usize>>> {
        meter.tick()?;
        let s = path[0];
        let last = *path.last().unwrap();
        let above = !((2u64 << s) - 1);
        // path vertices that a new vertex must not touch
        let inner = on_path & !(1u64 << last) & !(1u64 << s);
        for v in bits(self.adj[last] & !on_path & above) {
            if self.adj[v] & inner != 0 {
                continue;
            }
            let closes = path.len() >= 2 && self.has_edge(v, s);
            if closes {
                let len = path.len() + 1;
                if len >= 5 && len % 2 == 1 {
                    let mut hole = path.clone();
                    hole.push(v);
                    return Ok(Some(hole));
                }
                continue;
            }
            path.push(v);
            let found = self.extend_hole(path, on_path | 1u64 << v, meter)?;
            path.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Perfection via the strong perfect graph theorem: no odd hole in the
    /// graph or its complement.
    pub fn is_perfect(&self, budget: &Budget) -> Result<bool> {
        Ok(self.odd_hole(budget)?.is_none() && self.complement().odd_hole(budget)?.is_none())
    }

    /// All cycles of odd length at most `max_len`, each once. A cycle is
    /// listed from its smallest vertex, in the direction whose second vertex
    /// is smaller than its last. Output is ordered by length, then
    /// lexicographically.
    pub fn odd_cycles(&self, max_len: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
        let mut meter = budget.meter("enumerating odd cycles");
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(self.n());
        for s in 0..self.n() {
            path.clear();
            path.push(s);
            self.cycle_dfs(&mut path, 1u64 << s, max_len, &mut out, &mut meter)?;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        path: &mut Vec<usize>,
        on_path: u64,
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
        meter: &mut crate::budget::Meter,
    ) -> Result<()> {
        meter.tick()?;
        let s = path[0];
        let last = *path.last().unwrap();
        let len = path.len();
        if len >= 3 && len % 2 == 1 && self.has_edge(last, s) && path[1] < last {
            out.push(path.clone());
        }
        if len >= max_len {
            return Ok(());
        }
        let above = !((2u64 << s) - 1);
        for v in bits(self.adj[last] & !on_path & above) {
            path.push(v);
            self.cycle_dfs(path, on_path | 1u64 << v, max_len, out, meter)?;
            path.pop();
        }
        Ok(())
    }

    /// Tests whether any two vertex-disjoint odd cycles induce a connected
    /// subgraph. Requires a connected graph.
    pub fn disjoint_odd_cycle_condition(&self, budget: &Budget) -> Result<OddCycleCondition> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let cycles = self.odd_cycles(self.n(), budget)?;
        // The test only depends on vertex sets; keep the first cycle of each.
        let mut by_set: BTreeMap<u64, usize> = BTreeMap::new();
        let mut order = Vec::new();
        for (i, c) in cycles.iter().enumerate() {
            let m = c.iter().fold(0u64, |m, &v| m | 1 << v);
            by_set.entry(m).or_insert_with(|| {
                order.push(m);
                i
            });
        }
        let mut result = OddCycleCondition {
            holds: true,
            induced_connected: true,
            joined_by_edge: true,
            witness: None,
            cycles: cycles.len(),
            disjoint_pairs: 0,
        };
        let mut meter = budget.meter("pairing odd cycles");
        for (i, &m1) in order.iter().enumerate() {
            for &m2 in &order[i + 1..] {
                if m1 & m2 != 0 {
                    continue;
                }
                meter.tick()?;
                result.disjoint_pairs += 1;
                let induced = self.induces_connected(m1 | m2);
                let joined = bits(m1).any(|v| self.adj[v] & m2 != 0);
                result.induced_connected &= induced;
                result.joined_by_edge &= joined;
                if !induced && result.witness.is_none() {
                    result.witness = Some((
                        cycles[by_set[&m1]].clone(),
                        cycles[by_set[&m2]].clone(),
                    ));
                }
            }
        }
        result.holds = result.induced_connected;
        Ok(result)
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| ((p & adj[u]).count_ones(), std::cmp::Reverse(u)))
        .unwrap();
    for v in bits(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::families;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn independent_sets_and_cliques() {
        assert_eq!(
            families::complete(3).maximal_independent_sets(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            families::path(3).maximal_independent_sets(),
            vec![vec![0, 2], vec![1]]
        );
        assert_eq!(
            families::cycle(4).maximal_independent_sets(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert_eq!(families::complete(3).maximal_cliques(), vec![vec![0, 1, 2]]);
        assert_eq!(
            families::cycle(4).maximal_cliques(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(families::cycle(5).maximal_cliques().len(), 5);
    }

    #[test]
    fn predicates_on_small_graphs() {
        let p = |g: &Graph| {
            let r = g.predicates();
            (r.connected, r.bipartite, r.unmixed)
        };
        assert_eq!(p(&families::cycle(4)), (true, true, true));
        assert_eq!(p(&families::path(3)), (true, true, false));
        let matching = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(p(&matching), (false, true, true));
    }

    #[test]
    fn perfection() {
        assert!(!families::cycle(5).is_perfect(&b()).unwrap());
        assert!(!families::cycle(5).complement().is_perfect(&b()).unwrap());
        assert!(!families::cycle(7).complement().is_perfect(&b()).unwrap());
        assert!(families::complete(4).is_perfect(&b()).unwrap());
        assert!(families::cycle(6).is_perfect(&b()).unwrap());
        assert!(families::complete_bipartite(3, 3).is_perfect(&b()).unwrap());
    }

    #[test]
    fn odd_cycle_listing() {
        assert_eq!(
            families::cycle(5).odd_cycles(5, &b()).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert!(families::complete(2).odd_cycles(2, &b()).unwrap().is_empty());
        let g = families::two_triangles_with_path();
        assert_eq!(g.odd_cycles(3, &b()).unwrap().len(), 2);
        // K_5: ten triangles and twelve five-cycles
        assert_eq!(families::complete(5).odd_cycles(5, &b()).unwrap().len(), 22);
    }

    #[test]
    fn odd_cycle_condition_fixtures() {
        let c5 = families::cycle(5).disjoint_odd_cycle_condition(&b()).unwrap();
        assert!(c5.holds && c5.disjoint_pairs == 0);
        let bridged = families::two_triangles_bridged()
            .disjoint_odd_cycle_condition(&b())
            .unwrap();
        assert!(bridged.holds && bridged.disjoint_pairs == 1);
        let far = families::two_triangles_with_path()
            .disjoint_odd_cycle_condition(&b())
            .unwrap();
        assert!(!far.holds && !far.joined_by_edge);
        assert_eq!(far.witness, Some((vec![0, 1, 2], vec![3, 4, 5])));
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            split.disjoint_odd_cycle_condition(&b()),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn cycle_budget_is_enforced() {
        let r = families::complete(9).odd_cycles(9, &Budget::new(100));
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }
}
