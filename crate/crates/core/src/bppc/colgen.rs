//! Set-covering LP bound by column generation.
//!
//! The LP relaxation of "cover every item by feasible bins at minimum count"
//! is solved through its dual: maximize `sum(pi)` subject to
//! `sum(pi[i] for i in S) <= 1` for every generated feasible bin `S`. New bins
//! come from an exact pricing problem (a knapsack over pairwise compatible
//! items). With `v` the best pricing value, `pi / max(v, 1)` is dual feasible
//! for the full LP, so `sum(pi) / max(v, 1)` is a valid bound at every
//! iteration, not only at convergence.
//!
//! A primal dive reuses the machinery: fix the bin with the largest value in
//! the covering LP over the generated bins, then repeat on the items left.

use std::time::Instant;

use microlp::{
    ComparisonOp, LinearExpr, OptimizationDirection, Problem, SolveOutcome, Variable,
};

use super::{ffd_conflicts, BppcInstance};

/// Slack for floating point error in the LP and the pricing sums.
const EPS: f64 = 1e-6;

pub(crate) struct LpBound {
    /// Rounded-up LP bound; 0 when the LP could not be solved.
    pub bound: usize,
    /// Initial and generated bins, as 0-based item lists.
    pub columns: Vec<Vec<usize>>,
}

/// Column generation from the bins `initial`. Stops once the bound reaches
/// `target`, after `max_rounds` pricing rounds, or at `deadline`.
pub(crate) fn lp_bound(
    inst: &BppcInstance,
    initial: &[Vec<usize>],
    target: usize,
    max_rounds: usize,
    deadline: Option<Instant>,
) -> LpBound {
    let n = inst.n();
    let mut columns = initial.to_vec();
    if n == 0 {
        return LpBound { bound: 0, columns };
    }
    let mut problem = Problem::new(OptimizationDirection::Maximize);
    let vars: Vec<Variable> = (0..n).map(|_| problem.add_var(1.0, (0.0, 1.0))).collect();
    let row = |bin: &[usize]| -> LinearExpr { bin.iter().map(|&i| (vars[i], 1.0)).collect() };
    for bin in initial {
        problem.add_constraint(row(bin), ComparisonOp::Le, 1.0);
    }
    let Ok(SolveOutcome::Solution(mut sol)) = problem.solve() else {
        return LpBound { bound: 0, columns };
    };

    let round_up = |x: f64| (x - EPS).ceil().max(0.0) as usize;
    let mut best = 0usize;
    for _ in 0..max_rounds {
        let pi: Vec<f64> = vars.iter().map(|&v| sol.var_value(v).max(0.0)).collect();
        let total: f64 = pi.iter().sum();
        let (value, bin) = price(inst, &pi);
        best = best.max(round_up(total / value.max(1.0)));
        // The restricted objective only decreases, so its rounding caps the bound.
        if value <= 1.0 + EPS || best >= target || best >= round_up(total) {
            break;
        }
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        sol = match sol.add_constraint(row(&bin), ComparisonOp::Le, 1.0) {
            Ok(SolveOutcome::Solution(s)) => s,
            _ => break,
        };
        columns.push(bin);
    }
    LpBound {
        bound: best,
        columns,
    }
}

/// Packing built by repeatedly solving the LP over the items left and
/// fixing its largest bin. The first LP starts from `columns`, later ones
/// from first-fit decreasing. `None` when the dive cannot beat `incumbent`
/// bins.
pub(crate) fn dive(
    inst: &BppcInstance,
    columns: Vec<Vec<usize>>,
    incumbent: usize,
    rounds_per_item: usize,
    deadline: Option<Instant>,
) -> Option<Vec<Vec<usize>>> {
    // Original 1-based ids of the items left.
    let mut left: Vec<usize> = (1..=inst.n()).collect();
    let mut bins: Vec<Vec<usize>> = Vec::new();
    let mut first = Some(columns);
    while !left.is_empty() {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return None;
        }
        let sub = inst.induced(&left);
        if sub.total_weight() <= sub.capacity() && sub.graph().edge_count() == 0 {
            if bins.len() + 1 >= incumbent {
                return None;
            }
            bins.push(left);
            break;
        }
        let initial: Vec<Vec<usize>> = first.take().unwrap_or_else(|| {
            ffd_conflicts(&sub)
                .into_bins()
                .into_iter()
                .map(|b| b.into_iter().map(|v| v - 1).collect())
                .collect()
        });
        let lp = lp_bound(&sub, &initial, usize::MAX, rounds_per_item * sub.n(), deadline);
        if bins.len() + lp.bound.max(1) >= incumbent {
            return None;
        }
        let pick = largest_column(&sub, &lp.columns)?;
        let bin: Vec<usize> = lp.columns[pick].iter().map(|&v| left[v]).collect();
        left.retain(|v| !bin.contains(v));
        bins.push(bin);
    }
    Some(bins.into_iter().map(|b| b.into_iter().map(|v| v - 1).collect()).collect())
}

/// Index of the column with the largest value in the covering LP, ties to
/// the larger bin, then the first.
fn largest_column(inst: &BppcInstance, columns: &[Vec<usize>]) -> Option<usize> {
    let mut problem = Problem::new(OptimizationDirection::Minimize);
    let vars: Vec<Variable> = columns.iter().map(|_| problem.add_var(1.0, (0.0, 1.0))).collect();
    let mut cover: Vec<Vec<(Variable, f64)>> = vec![Vec::new(); inst.n()];
    for (c, col) in columns.iter().enumerate() {
        for &i in col {
            cover[i].push((vars[c], 1.0));
        }
    }
    for terms in cover {
        problem.add_constraint(terms, ComparisonOp::Ge, 1.0);
    }
    let Ok(SolveOutcome::Solution(sol)) = problem.solve() else {
        return None;
    };
    let key = |c: usize| (sol.var_value(vars[c]), columns[c].len());
    (0..columns.len()).reduce(|a, b| {
        let (ka, kb) = (key(a), key(b));
        if kb.0 > ka.0 + EPS || (kb.0 > ka.0 - EPS && kb.1 > ka.1) {
            b
        } else {
            a
        }
    })
}

/// Maximum of `sum(pi[i])` over feasible bins, and a bin attaining it.
/// Exact depth-first search over items by decreasing `pi/w`, bounded by the
/// fractional knapsack that ignores conflicts.
fn price(inst: &BppcInstance, pi: &[f64]) -> (f64, Vec<usize>) {
    let w = inst.weights();
    let mut items: Vec<usize> = (0..inst.n()).filter(|&i| pi[i] > 1e-12).collect();
    let ratio = |i: usize| if w[i] == 0 { f64::INFINITY } else { pi[i] / w[i] as f64 };
    items.sort_by(|&a, &b| ratio(b).total_cmp(&ratio(a)).then(a.cmp(&b)));

    let mut p = Pricing {
        inst,
        pi,
        items,
        blocked: vec![0; inst.n()],
        chosen: Vec::new(),
        best: (0.0, Vec::new()),
    };
    p.dfs(0, 0.0, inst.capacity());
    p.best
}

struct Pricing<'a> {
    inst: &'a BppcInstance,
    pi: &'a [f64],
    items: Vec<usize>,
    /// Number of chosen items adjacent to each item.
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    best: (f64, Vec<usize>),
}

impl Pricing<'_> {
    fn open(&self, x: usize, room: u64) -> bool {
        self.blocked[x] == 0 && self.inst.weights()[x] <= room
    }

    fn upper(&self, from: usize, value: f64, mut room: u64) -> f64 {
        let w = self.inst.weights();
        let mut ub = value;
        for &x in &self.items[from..] {
            if self.blocked[x] != 0 {
                continue;
            }
            if w[x] <= room {
                room -= w[x];
                ub += self.pi[x];
            } else {
                ub += self.pi[x] * room as f64 / w[x] as f64;
                break;
            }
        }
        ub
    }

    fn dfs(&mut self, from: usize, value: f64, room: u64) {
        if value > self.best.0 {
            self.best = (value, self.chosen.clone());
        }
        if from == self.items.len() || self.upper(from, value, room) <= self.best.0 + 1e-12 {
            return;
        }
        let x = self.items[from];
        if self.open(x, room) {
            let g = self.inst.graph();
            self.chosen.push(x);
            for y in g.row(x).iter() {
                self.blocked[y] += 1;
            }
            self.dfs(from + 1, value + self.pi[x], room - self.inst.weights()[x]);
            for y in g.row(x).iter() {
                self.blocked[y] -= 1;
            }
            self.chosen.pop();
        }
        self.dfs(from + 1, value, room);
    }
}
