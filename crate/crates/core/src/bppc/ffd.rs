use crate::graph::BitSet;

use super::{BppcInstance, Packing};

/// Items by nonincreasing weight, ties by ascending id (0-based).
pub(crate) fn ffd_order(inst: &BppcInstance) -> Vec<usize> {
    let w = inst.weights();
    let mut order: Vec<usize> = (0..inst.n()).collect();
    order.sort_by(|&a, &b| w[b].cmp(&w[a]).then(a.cmp(&b)));
    order
}

/// First-fit decreasing that also skips bins holding a conflicting item.
pub fn ffd_conflicts(inst: &BppcInstance) -> Packing {
    let n = inst.n();
    let cap = inst.capacity();
    let g = inst.graph();
    let mut loads: Vec<u64> = Vec::new();
    let mut members: Vec<BitSet> = Vec::new();
    let mut bins: Vec<Vec<usize>> = Vec::new();

    for x in ffd_order(inst) {
        let w = inst.weights()[x];
        let slot = (0..bins.len())
            .find(|&b| loads[b] + w <= cap && !members[b].intersects(g.row(x)));
        let b = slot.unwrap_or_else(|| {
            loads.push(0);
            members.push(BitSet::new(n));
            bins.push(Vec::new());
            bins.len() - 1
        });
        loads[b] += w;
        members[b].insert(x);
        bins[b].push(x + 1);
    }
    Packing::new(bins)
}
