//! Depth-first branch-and-bound.
//!
//! Universal vertices are split off first (see [`decompose_universal`]). A
//! greedy clique of pairwise incompatible items (conflicting, or too heavy
//! together) is placed into separate bins up front; every packing separates
//! them, so this only fixes bin labels. Of the candidate cliques, the one
//! with the best node bound is kept, and the first few also seed a greedy
//! descent. If a gap remains, a column generation LP raises the root bound
//! and an LP dive looks for a better incumbent.
//!
//! Branching picks the unplaced item that fits the fewest open bins, ties in
//! first-fit-decreasing order, and tries the fullest bins first, then one new
//! bin. Limited-discrepancy passes precede the exhaustive search. A node is
//! cut when its bound reaches the incumbent, which starts from
//! [`ffd_conflicts`]. The node bound is the largest of
//!
//! * the open bin count plus the bins needed for remaining weight that does
//!   not fit in the free space of open bins;
//! * the open bin count plus a greedy clique of pairwise incompatible items
//!   among the remaining items that fit no open bin;
//! * the open bin count plus the bins needed for remaining weight that cannot
//!   be absorbed by open bins, with items split fractionally over the open
//!   bins they fit (a max-flow).
//!
//! The search stops as soon as the incumbent meets the root bound. Node
//! order is fully deterministic, so `node_count` is reproducible for runs
//! that finish within the time limit.

use std::time::{Duration, Instant};

use crate::graph::BitSet;

use super::ffd::ffd_order;
use super::colgen::{dive, lp_bound};
use super::flow::absorbable;
use super::{
    bins_for_volume, decompose_universal, ffd_conflicts, lower_bound, BppcInstance, Packing,
};

/// Clique seeds tried with a greedy descent before the LP.
const GREEDY_SEEDS: usize = 4;
/// Column generation budget at the root, in pricing rounds per item.
const LP_ROUNDS_PER_ITEM: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub time_limit: Duration,
    /// Split off universal vertices before searching.
    pub decompose: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            time_limit: Duration::from_secs(600),
            decompose: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub packing: Packing,
    pub k: usize,
    /// The search completed (or met the lower bound) within the time limit.
    pub optimal: bool,
    pub lower_bound: usize,
    pub elapsed: Duration,
    pub node_count: u64,
}

pub fn solve_exact(inst: &BppcInstance, time_limit: Duration) -> SolveResult {
    solve_exact_with(
        inst,
        &SolverOptions {
            time_limit,
            ..SolverOptions::default()
        },
    )
}

pub fn solve_exact_with(inst: &BppcInstance, options: &SolverOptions) -> SolveResult {
    let start = Instant::now();
    let deadline = start.checked_add(options.time_limit);

    let root = lower_bound(inst, None).expect("no clique hint given");
    let (singletons, sub, index_map) = if options.decompose {
        let dec = decompose_universal(inst);
        (dec.singleton_bins, dec.subinstance, dec.index_map)
    } else {
        (Vec::new(), inst.clone(), (1..=inst.n()).collect())
    };
    let g = singletons.len();

    let mut search = Search::new(&sub, deadline);
    let sub_root = search.root_bound.max(root.saturating_sub(g));
    search.root_bound = sub_root;
    search.run();

    let mut bins: Vec<Vec<usize>> = singletons.iter().map(|&v| vec![v]).collect();
    bins.extend(
        search
            .best
            .iter()
            .map(|b| b.iter().map(|&k| index_map[k - 1]).collect()),
    );
    let k = bins.len();
    SolveResult {
        packing: Packing::new(bins),
        k,
        optimal: !search.timed_out,
        lower_bound: root.max(g + sub_root),
        elapsed: start.elapsed(),
        node_count: search.nodes,
    }
}

struct Search<'a> {
    inst: &'a BppcInstance,
    /// Unplaced items in first-fit-decreasing order.
    rest: Vec<usize>,
    rest_weight: u64,
    loads: Vec<u64>,
    members: Vec<BitSet>,
    bins: Vec<Vec<usize>>,
    best: Vec<Vec<usize>>,
    root_bound: usize,
    deadline: Option<Instant>,
    timed_out: bool,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a BppcInstance, deadline: Option<Instant>) -> Self {
        let ffd = ffd_order(inst);
        let best = ffd_conflicts(inst).into_bins();
        let mut search = Self {
            inst,
            rest: Vec::new(),
            rest_weight: 0,
            loads: Vec::new(),
            members: Vec::new(),
            bins: Vec::new(),
            best,
            root_bound: 0,
            deadline,
            timed_out: false,
            nodes: 0,
        };
        let incumbent = search.best.len();
        search.root_bound = lower_bound(inst, None).expect("no clique hint given");
        if incumbent <= search.root_bound {
            return search;
        }
        // Seed the bins with whichever greedy clique gives the best bound,
        // and descend greedily from the first few seeds.
        let mut seeded = (0, Vec::new());
        for (c, clique) in incompatible_cliques(inst, &ffd).into_iter().enumerate() {
            search.seed(&ffd, &clique);
            let b = search.bound(search.best.len());
            if b > seeded.0 || seeded.1.is_empty() {
                seeded = (b, clique);
            }
            search.root_bound = search.root_bound.max(seeded.0);
            if search.done() {
                break;
            }
            if c < GREEDY_SEEDS {
                search.dfs(0);
                if search.done() {
                    break;
                }
            }
        }
        search.seed(&ffd, &seeded.1);
        search
    }

    /// Raises the root bound by column generation and dives for a better
    /// incumbent.
    fn strengthen_root(&mut self) {
        let inst = self.inst;
        let incumbent = self.best.len();
        let columns: Vec<Vec<usize>> = self
            .best
            .iter()
            .map(|b| b.iter().map(|&v| v - 1).collect())
            .collect();
        let rounds = LP_ROUNDS_PER_ITEM * inst.n();
        let lp = lp_bound(inst, &columns, incumbent, rounds, self.deadline);
        self.root_bound = self.root_bound.max(lp.bound);
        if self.done() {
            return;
        }
        if let Some(bins) = dive(inst, lp.columns, incumbent, LP_ROUNDS_PER_ITEM, self.deadline) {
            if bins.len() < incumbent {
                self.best = bins
                    .into_iter()
                    .map(|b| b.into_iter().map(|i| i + 1).collect())
                    .collect();
            }
        }
    }

    /// Resets to the node where each item of `clique` sits alone in a bin.
    fn seed(&mut self, ffd: &[usize], clique: &[usize]) {
        self.loads.clear();
        self.members.clear();
        self.bins.clear();
        for &x in clique {
            self.open_bin();
            let b = self.bins.len() - 1;
            self.place(b, x, self.inst.weights()[x]);
        }
        self.rest = ffd.iter().copied().filter(|x| !clique.contains(x)).collect();
        self.rest_weight = self.rest.iter().map(|&x| self.inst.weights()[x]).sum();
    }

    /// The LP root bound and dive, then wider limited-discrepancy passes,
    /// then the exhaustive search.
    fn run(&mut self) {
        if self.done() {
            return;
        }
        self.strengthen_root();
        for budget in [1, 2, usize::MAX] {
            if self.done() {
                break;
            }
            self.dfs(budget);
        }
    }

    fn done(&self) -> bool {
        self.timed_out || self.best.len() <= self.root_bound
    }

    fn fits(&self, bin: usize, x: usize) -> bool {
        self.loads[bin] + self.inst.weights()[x] <= self.inst.capacity()
            && !self.members[bin].intersects(self.inst.graph().row(x))
    }

    fn compatible(&self, a: usize, b: usize) -> bool {
        let w = self.inst.weights();
        w[a] + w[b] <= self.inst.capacity() && !self.inst.graph().adjacent0(a, b)
    }

    /// Lower bound on the bins of any completion of the current node. Stops
    /// early once the bound reaches `cutoff`.
    fn bound(&self, cutoff: usize) -> usize {
        let open = self.bins.len();
        let cap = self.inst.capacity();
        let free: u64 = self.loads.iter().map(|&l| cap - l).sum();
        let overflow = self.rest_weight.saturating_sub(free);
        let mut bound = open + bins_for_volume(overflow, cap);
        if bound >= cutoff {
            return bound;
        }

        let rest = &self.rest;
        let mut clique: Vec<usize> = Vec::new();
        for &x in rest {
            let homeless = (0..open).all(|b| !self.fits(b, x));
            if homeless && clique.iter().all(|&c| !self.compatible(c, x)) {
                clique.push(x);
            }
        }
        bound = bound.max(open + clique.len());
        if bound >= cutoff || open == 0 {
            return bound;
        }

        let w = self.inst.weights();
        let weights: Vec<u64> = rest.iter().map(|&x| w[x]).collect();
        let room: Vec<u64> = self.loads.iter().map(|&l| cap - l).collect();
        let absorbed = absorbable(&weights, &room, |i, b| self.fits(b, rest[i]));
        bound.max(open + bins_for_volume(self.rest_weight - absorbed, cap))
    }

    /// Unplaced item with the fewest open bins that can take it; ties keep
    /// the first in first-fit-decreasing order. Returns its index in `rest`.
    fn select(&self) -> usize {
        let mut pick = (0, usize::MAX);
        for (i, &x) in self.rest.iter().enumerate() {
            let mut options = 0;
            for b in 0..self.bins.len() {
                if options >= pick.1 {
                    break;
                }
                if self.fits(b, x) {
                    options += 1;
                }
            }
            if options < pick.1 {
                pick = (i, options);
                if options == 0 {
                    break;
                }
            }
        }
        pick.0
    }

    /// Explores the subtree, leaving the preferred child at most `budget`
    /// times along any path.
    fn dfs(&mut self, budget: usize) {
        self.nodes += 1;
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out = true;
                return;
            }
        }
        if self.rest.is_empty() {
            if self.bins.len() < self.best.len() {
                self.best = self.bins.clone();
            }
            return;
        }
        let incumbent = self.best.len();
        if self.bound(incumbent) >= incumbent {
            return;
        }

        let i = self.select();
        let x = self.rest.remove(i);
        let w = self.inst.weights()[x];
        self.rest_weight -= w;
        let mut targets: Vec<usize> = (0..self.bins.len()).filter(|&b| self.fits(b, x)).collect();
        targets.sort_by(|&a, &b| self.loads[b].cmp(&self.loads[a]).then(a.cmp(&b)));
        let fresh = targets.len();
        for (c, b) in targets.into_iter().enumerate() {
            if c > 0 && budget == 0 {
                break;
            }
            self.place(b, x, w);
            self.dfs(if c == 0 { budget } else { budget.saturating_sub(1) });
            self.unplace(b, x, w);
            if self.done() {
                break;
            }
        }
        if !self.done()
            && (fresh == 0 || budget > 0)
            && self.bins.len() + 1 < self.best.len()
        {
            self.open_bin();
            let b = self.bins.len() - 1;
            self.place(b, x, w);
            self.dfs(if fresh == 0 { budget } else { budget.saturating_sub(1) });
            self.bins.pop();
            self.members.pop();
            self.loads.pop();
        }
        self.rest_weight += w;
        self.rest.insert(i, x);
    }

    fn open_bin(&mut self) {
        self.loads.push(0);
        self.members.push(BitSet::new(self.inst.n()));
        self.bins.push(Vec::new());
    }

    fn place(&mut self, b: usize, x: usize, w: u64) {
        self.loads[b] += w;
        self.members[b].insert(x);
        self.bins[b].push(x + 1);
    }

    fn unplace(&mut self, b: usize, x: usize, w: u64) {
        self.loads[b] -= w;
        self.members[b].remove(x);
        self.bins[b].pop();
    }
}

/// Distinct greedy cliques of pairwise incompatible items, one per seed item
/// (largest first, ties by seed order), each extended along `order`.
fn incompatible_cliques(inst: &BppcInstance, order: &[usize]) -> Vec<Vec<usize>> {
    let w = inst.weights();
    let cap = inst.capacity();
    let g = inst.graph();
    let clash = |a: usize, b: usize| w[a] + w[b] > cap || g.adjacent0(a, b);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &seed in order {
        let mut clique = vec![seed];
        for &x in order {
            if x != seed && clique.iter().all(|&c| clash(c, x)) {
                clique.push(x);
            }
        }
        clique.sort_unstable();
        if !out.contains(&clique) {
            out.push(clique);
        }
    }
    out.sort_by_key(|c| std::cmp::Reverse(c.len()));
    out
}
