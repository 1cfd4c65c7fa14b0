//! Fractional transportation bound: how much item weight the free space of
//! the open bins can absorb when items may be split across compatible bins.

/// Dinic max-flow on a small dense network.
struct Network {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u64>,
    next: Vec<usize>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![NONE; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
            level: vec![0; nodes],
            cursor: vec![NONE; nodes],
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u64) {
        for (x, y, c) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(c);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(u32::MAX);
        self.level[s] = 0;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            let mut e = self.head[x];
            while e != NONE {
                let y = self.to[e];
                if self.cap[e] > 0 && self.level[y] == u32::MAX {
                    self.level[y] = self.level[x] + 1;
                    queue.push(y);
                }
                e = self.next[e];
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, x: usize, t: usize, limit: u64) -> u64 {
        if x == t {
            return limit;
        }
        while self.cursor[x] != NONE {
            let e = self.cursor[x];
            let y = self.to[e];
            if self.cap[e] > 0 && self.level[y] == self.level[x] + 1 {
                let pushed = self.dfs(y, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.cursor[x] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.cursor.copy_from_slice(&self.head);
            loop {
                let f = self.dfs(s, t, u64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }
}

/// Maximum total weight moved from items into bins, where item `i` supplies
/// `weights[i]`, bin `b` accepts at most `room[b]`, and item `i` may only use
/// the bins listed by `compatible(i, b)`.
pub(crate) fn absorbable(
    weights: &[u64],
    room: &[u64],
    compatible: impl Fn(usize, usize) -> bool,
) -> u64 {
    let (ni, nb) = (weights.len(), room.len());
    let s = ni + nb;
    let t = s + 1;
    let mut net = Network::new(ni + nb + 2);
    for (i, &w) in weights.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let mut any = false;
        for (b, &r) in room.iter().enumerate() {
            if r > 0 && compatible(i, b) {
                net.arc(i, ni + b, u64::MAX);
                any = true;
            }
        }
        if any {
            net.arc(s, i, w);
        }
    }
    for (b, &r) in room.iter().enumerate() {
        if r > 0 {
            net.arc(ni + b, t, r);
        }
    }
    net.max_flow(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unrestricted_is_min_of_supply_and_room() {
        assert_eq!(absorbable(&[5, 5, 5], &[4, 4], |_, _| true), 8);
        assert_eq!(absorbable(&[1, 2], &[10, 10], |_, _| true), 3);
        assert_eq!(absorbable(&[], &[10], |_, _| true), 0);
        assert_eq!(absorbable(&[10], &[], |_, _| true), 0);
    }

    #[test]
    fn respects_compatibility() {
        // Item 0 only fits bin 0, item 1 both bins.
        let f = absorbable(&[6, 6], &[5, 5], |i, b| i == 1 || b == 0);
        assert_eq!(f, 10);
        let f = absorbable(&[6, 6], &[5, 5], |_, b| b == 0);
        assert_eq!(f, 5);
    }

    #[test]
    fn needs_augmenting_paths() {
        // Greedy item 0 -> bin 0 blocks item 1; max flow reroutes.
        let f = absorbable(&[3, 3], &[3, 3], |i, b| i == 0 || b == 0);
        assert_eq!(f, 6);
    }
}
