#![allow(dead_code)]

use std::collections::BTreeSet;

use irp::combinatorics::{Clutter, Graph};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn degrees(n: usize, mask: u64) -> Vec<usize> {
    let mut d = vec![0; n];
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_index(n, i, j) & 1 == 1 {
                d[i] += 1;
                d[j] += 1;
            }
        }
    }
    d
}

fn relabel(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_index(n, i, j) & 1 == 1 {
                out |= 1 << pair_index(n, perm[i], perm[j]);
            }
        }
    }
    out
}

/// Smallest relabelled pair mask over the orderings that sort vertices by
/// degree.
fn canonical(n: usize, mask: u64) -> u64 {
    let deg = degrees(n, mask);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    for v in order {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = vec![0usize; n];
    fn go(classes: &mut [Vec<usize>], k: usize, pos: usize, perm: &mut [usize], n: usize, mask: u64, best: &mut u64) {
        if k == classes.len() {
            *best = (*best).min(relabel(n, mask, perm));
            return;
        }
        let len = classes[k].len();
        permute(classes, k, 0, len, pos, perm, n, mask, best);
    }
    #[allow(clippy::too_many_arguments)]
    fn permute(
        classes: &mut [Vec<usize>],
        k: usize,
        i: usize,
        len: usize,
        pos: usize,
        perm: &mut [usize],
        n: usize,
        mask: u64,
        best: &mut u64,
    ) {
        if i == len {
            for (t, &v) in classes[k].iter().enumerate() {
                perm[v] = pos + t;
            }
            go(classes, k + 1, pos + len, perm, n, mask, best);
            return;
        }
        for s in i..len {
            classes[k].swap(i, s);
            permute(classes, k, i + 1, len, pos, perm, n, mask, best);
            classes[k].swap(i, s);
        }
    }
    go(&mut classes, 0, 0, &mut perm, n, mask, &mut best);
    best
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, as pair masks.
pub fn all_graphs(n: usize) -> Vec<u64> {
    let pairs = n * (n.saturating_sub(1)) / 2;
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    let mut all: Vec<u64> = vec![0];
    for _ in 0..pairs {
        let mut next = BTreeSet::new();
        for &m in &level {
            for k in 0..pairs {
                if m >> k & 1 == 0 {
                    next.insert(canonical(n, m | 1 << k));
                }
            }
        }
        all.extend(next.iter().copied());
        level = next;
    }
    all
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .map(|m| Graph::from_pair_mask(n, m))
        .filter(|g| g.is_connected())
        .collect()
}

pub fn graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().map(|m| Graph::from_pair_mask(n, m)).collect()
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let pairs = n * (n - 1) / 2;
    loop {
        let p: f64 = rng.gen_range(0.2..0.9);
        let mut mask = 0u64;
        for k in 0..pairs {
            if rng.gen_bool(p) {
                mask |= 1 << k;
            }
        }
        let g = Graph::from_pair_mask(n, mask);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_connected_bipartite(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let p: f64 = rng.gen_range(0.3..0.9);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if side[i] != side[j] && rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// A random clutter on up to `max_n` vertices with up to `max_q` edges.
pub fn random_clutter(rng: &mut impl Rng, max_n: usize, max_q: usize) -> Clutter {
    loop {
        let n = rng.gen_range(2..=max_n);
        let q = rng.gen_range(1..=max_q);
        let mut edges: Vec<u64> = Vec::new();
        for _ in 0..q {
            let e: u64 = rng.gen_range(1..1u64 << n);
            if edges.iter().all(|&f| e & f != e && e & f != f) {
                edges.push(e);
            }
        }
        let edges: Vec<Vec<usize>> = edges
            .iter()
            .map(|&e| (0..n).filter(|&i| e >> i & 1 == 1).collect())
            .collect();
        if let Ok(c) = Clutter::new(n, edges) {
            return c;
        }
    }
}

/// A random `k`-uniform clutter on `n` vertices with up to `q` edges.
pub fn random_uniform_clutter(rng: &mut impl Rng, n: usize, k: usize, q: usize) -> Clutter {
    loop {
        let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
        for _ in 0..q {
            let mut e: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..n);
                e.swap(i, j);
            }
            let mut e = e[..k].to_vec();
            e.sort_unstable();
            edges.insert(e);
        }
        if let Ok(c) = Clutter::new(n, edges.into_iter().collect()) {
            return c;
        }
    }
}
