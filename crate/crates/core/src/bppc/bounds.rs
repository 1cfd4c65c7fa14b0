use crate::threshold::recognize_threshold;

use super::{bins_for_volume, decompose_universal, BppcError, BppcInstance};

/// `ceil(sum w / B)`, and at least one bin for a nonempty instance.
pub fn weight_bound(inst: &BppcInstance) -> usize {
    let v = bins_for_volume(inst.total_weight(), inst.capacity());
    if inst.n() > 0 {
        v.max(1)
    } else {
        v
    }
}

/// Largest of the available valid bounds on the number of bins:
///
/// * the weight bound `ceil(sum w / B)`;
/// * the size of `clique_hint`, which must be a clique of the conflict graph;
/// * when the conflict graph is threshold, `g + max(ceil(w(Q) / B), omega(Q))`
///   where `g` counts universal vertices and `Q` is the rest.
pub fn lower_bound(inst: &BppcInstance, clique_hint: Option<&[usize]>) -> Result<usize, BppcError> {
    let mut best = weight_bound(inst);
    if let Some(clique) = clique_hint {
        if !inst.graph().is_clique(clique) {
            return Err(BppcError::NotAClique);
        }
        best = best.max(clique.len());
    }
    if recognize_threshold(inst.graph()).is_threshold() {
        let dec = decompose_universal(inst);
        let q = &dec.subinstance;
        let omega_q = recognize_threshold(q.graph())
            .certificate()
            .map_or(0, |c| c.clique_size());
        let g = dec.singleton_bins.len();
        best = best.max(g + bins_for_volume(q.total_weight(), q.capacity()).max(omega_q));
    }
    Ok(best)
}
