//! Independent brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use threshold_bppc::{BppcInstance, Graph};

/// Threshold graphs are exactly the graphs with no induced P4, C4 or 2K2.
/// Every one of those has four vertices and all degrees in {1, 2}, and no
/// other four-vertex graph has that degree profile.
pub fn has_forbidden_subgraph(g: &Graph) -> bool {
    let n = g.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let q = [a, b, c, d];
                    let ok = q.iter().all(|&x| {
                        let deg = q.iter().filter(|&&y| y != x && g.has_edge(x, y)).count();
                        deg == 1 || deg == 2
                    });
                    if ok {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (1..=n).filter(|&v| m >> (v - 1) & 1 == 1).collect())
}

pub fn brute_max_clique(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| g.is_clique(s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn brute_max_independent_set(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| g.is_independent(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Minimum bins ignoring conflicts, by dynamic programming over item subsets.
pub fn bin_packing_dp(weights: &[u64], capacity: u64) -> usize {
    let n = weights.len();
    let full = (1usize << n) - 1;
    let fits: Vec<bool> = (0..=full)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).map(|i| weights[i]).sum::<u64>() <= capacity)
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        // Bins containing the lowest item of m.
        let mut s = rest;
        loop {
            let bin = s | low;
            if fits[bin] && best[m ^ bin] != usize::MAX {
                best[m] = best[m].min(best[m ^ bin] + 1);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
    }
    best[full]
}

/// Chromatic number by trying each palette size with backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    fn color(g: &Graph, v: usize, k: usize, col: &mut Vec<usize>) -> bool {
        if v > g.n() {
            return true;
        }
        for c in 0..k {
            if (1..v).all(|u| col[u] != c || !g.has_edge(u, v)) {
                col[v] = c;
                if color(g, v + 1, k, col) {
                    return true;
                }
            }
        }
        false
    }
    (0..=n)
        .find(|&k| color(g, 1, k, &mut vec![usize::MAX; n + 1]))
        .expect("n colors always suffice")
}

/// Relabels vertex `v` as `perm[v - 1]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(
        g.n(),
        g.edges().into_iter().map(|(u, v)| (perm[u - 1], perm[v - 1])),
    )
    .unwrap()
}

pub fn universal_count(g: &Graph) -> usize {
    (1..=g.n()).filter(|&v| g.degree(v) + 1 == g.n()).count()
}

pub fn instance(g: Graph, weights: Vec<u64>, capacity: u64) -> BppcInstance {
    BppcInstance::new(g, weights, capacity).unwrap()
}
