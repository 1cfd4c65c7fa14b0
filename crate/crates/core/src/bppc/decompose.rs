use super::{BppcInstance, Packing};

/// Split of an instance into its universal vertices, each of which sits alone
/// in every feasible packing, and the instance `Q` on the remaining items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Universal vertices in ascending order; one bin each.
    pub singleton_bins: Vec<usize>,
    pub subinstance: BppcInstance,
    /// `index_map[k]` is the original id of item `k + 1` of the subinstance.
    pub index_map: Vec<usize>,
}

impl Decomposition {
    /// Packing of the original instance from a packing of the subinstance.
    pub fn lift(&self, sub: &Packing) -> Packing {
        let mut bins: Vec<Vec<usize>> = self.singleton_bins.iter().map(|&v| vec![v]).collect();
        bins.extend(
            sub.bins()
                .iter()
                .map(|b| b.iter().map(|&k| self.index_map[k - 1]).collect()),
        );
        Packing::new(bins)
    }
}

/// A vertex adjacent to all others conflicts with every item, so
/// `k(inst) = g + k(Q)` where `g` counts universal vertices.
pub fn decompose_universal(inst: &BppcInstance) -> Decomposition {
    let n = inst.n();
    let (singleton_bins, index_map): (Vec<usize>, Vec<usize>) =
        (1..=n).partition(|&v| inst.graph().degree(v) + 1 == n);
    Decomposition {
        subinstance: inst.induced(&index_map),
        singleton_bins,
        index_map,
    }
}
