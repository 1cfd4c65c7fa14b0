//! Ground truth by exhaustive enumeration of set partitions.

use super::{verify_packing, BppcError, BppcInstance, Packing};

/// Largest instance the oracle accepts (Bell(12) = 4 213 597 partitions).
pub const ORACLE_MAX_ITEMS: usize = 12;

/// Calls `f` with every set partition of `0..n` as a restricted growth
/// string: `block[i]` is the block of element `i`, `block[0] = 0`, and
/// `block[i] <= 1 + max(block[..i])`.
pub fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut block = vec![0usize; n];
    // prefix_max[i] = max(block[..=i])
    let mut prefix_max = vec![0usize; n];
    loop {
        f(&block);
        // Rightmost position that can still be incremented.
        let Some(i) = (1..n).rev().find(|&i| block[i] <= prefix_max[i - 1]) else {
            return;
        };
        block[i] += 1;
        prefix_max[i] = prefix_max[i - 1].max(block[i]);
        for j in i + 1..n {
            block[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// Minimum number of bins over all feasible partitions of the items.
pub fn brute_force_oracle(inst: &BppcInstance) -> Result<usize, BppcError> {
    let n = inst.n();
    if n > ORACLE_MAX_ITEMS {
        return Err(BppcError::TooLarge {
            n,
            max: ORACLE_MAX_ITEMS,
        });
    }
    let mut best = usize::MAX;
    for_each_set_partition(n, |block| {
        let k = block.iter().max().map_or(0, |&m| m + 1);
        if k >= best {
            return;
        }
        let mut bins = vec![Vec::new(); k];
        for (item, &b) in block.iter().enumerate() {
            bins[b].push(item + 1);
        }
        if verify_packing(inst, &Packing::new(bins)).is_ok() {
            best = k;
        }
    });
    Ok(best)
}
