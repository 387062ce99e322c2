//! Dinic max-flow on integer capacities.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i128,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128) {
        debug_assert!(cap >= 0);
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Undirected edge: capacity `cap` in both directions on one arc pair.
    pub fn add_edge(&mut self, a: usize, b: usize, cap: i128) {
        self.adj[a].push(self.arcs.len());
        self.arcs.push(Arc { to: b, cap });
        self.adj[b].push(self.arcs.len());
        self.arcs.push(Arc { to: a, cap });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    /// Finds one blocking-flow augmenting path from `s` and pushes its
    /// bottleneck. Iterative so long level graphs do not grow the call stack.
    fn augment(&mut self, s: usize, t: usize) -> i128 {
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let pushed = path.iter().map(|&a| self.arcs[a].cap).min().unwrap_or(0);
                for &a in &path {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                }
                return pushed;
            }
            let mut advanced = false;
            while self.iter[u] < self.adj[u].len() {
                let a = self.adj[u][self.iter[u]];
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && self.level[to] == self.level[u] + 1 {
                    path.push(a);
                    u = to;
                    advanced = true;
                    break;
                }
                self.iter[u] += 1;
            }
            if advanced {
                continue;
            }
            // dead end: retreat and skip the arc that led here
            match path.pop() {
                None => return 0,
                Some(a) => {
                    u = self.arcs[a ^ 1].to;
                    self.iter[u] += 1;
                }
            }
        }
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.augment(s, t);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// After [`max_flow`](Self::max_flow): membership in the largest source
    /// side among all minimum cuts, i.e. nodes that cannot reach `t` in the
    /// residual network.
    pub fn maximal_source_side(&self, t: usize) -> Vec<bool> {
        let n = self.adj.len();
        let mut reaches_t = vec![false; n];
        reaches_t[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            // u reaches v in the residual graph iff arc u->v has capacity;
            // the reverse of arc a out of v is a ^ 1, going u->v.
            for &a in &self.adj[v] {
                let u = self.arcs[a].to;
                if !reaches_t[u] && self.arcs[a ^ 1].cap > 0 {
                    reaches_t[u] = true;
                    queue.push_back(u);
                }
            }
        }
        reaches_t.into_iter().map(|r| !r).collect()
    }

    /// After [`max_flow`](Self::max_flow): nodes reachable from `s` in the
    /// residual network (the smallest min-cut source side).
    #[cfg(test)]
    pub fn minimal_source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }
}
