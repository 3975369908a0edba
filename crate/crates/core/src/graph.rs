//! Simple undirected graphs, maximum matching, and parity joins.

use crate::error::{Error, Result};

/// A simple undirected graph on dense vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index)
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = std::collections::HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop edge ({a}, {b})")));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::InvalidInput(format!("duplicate edge ({a}, {b})")));
            }
            list.push(key);
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b)) in list.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` with the connecting edge index, ascending.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

/// Maximum-cardinality matching in a general graph, by augmenting paths
/// with blossom contraction. Returns matched pairs `(u, v)` with `u < v`,
/// sorted. Deterministic: roots and neighbors are scanned in ascending
/// order.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // Greedy seed cuts down the number of augmentation phases.
    for &(a, b) in g.edges() {
        if mate[a].is_none() && mate[b].is_none() {
            mate[a] = Some(b);
            mate[b] = Some(a);
        }
    }

    for root in 0..n {
        if mate[root].is_none() {
            augment_from(g, &mut mate, root);
        }
    }

    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter_map(|v| mate[v].map(|m| (v, m)))
        .filter(|&(v, m)| v < m)
        .collect();
    pairs.sort_unstable();
    pairs
}

fn augment_from(g: &Graph, mate: &mut [Option<usize>], root: usize) -> bool {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);

    let lca = |mate: &[Option<usize>],
               parent: &[Option<usize>],
               base: &[usize],
               mut a: usize,
               mut b: usize| {
        let mut on_path = vec![false; n];
        loop {
            a = base[a];
            on_path[a] = true;
            match mate[a] {
                None => break,
                Some(m) => a = base[parent[m].expect("matched even vertex has a parent")],
            }
        }
        loop {
            b = base[b];
            if on_path[b] {
                return b;
            }
            b = base[parent[mate[b].expect("on alternating tree")].expect("has parent")];
        }
    };

    let mark_path = |mate: &[Option<usize>],
                     parent: &mut [Option<usize>],
                     base: &[usize],
                     blossom: &mut [bool],
                     mut v: usize,
                     b: usize,
                     mut child: usize| {
        while base[v] != b {
            let m = mate[v].expect("odd cycle vertices are matched");
            blossom[base[v]] = true;
            blossom[base[m]] = true;
            parent[v] = Some(child);
            child = m;
            v = parent[m].expect("tree parent exists");
        }
    };

    while let Some(v) = queue.pop_front() {
        for &(to, _) in g.adjacency(v) {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                // Odd cycle: contract the blossom up to the common base.
                let cur_base = lca(mate, &parent, &base, v, to);
                let mut blossom = vec![false; n];
                mark_path(mate, &mut parent, &base, &mut blossom, v, cur_base, to);
                mark_path(mate, &mut parent, &base, &mut blossom, to, cur_base, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // Augment along the alternating path back to root.
                        let mut u = to;
                        loop {
                            let pv = parent[u].expect("path to root");
                            let next = mate[pv];
                            mate[u] = Some(pv);
                            mate[pv] = Some(u);
                            match next {
                                None => return true,
                                Some(nu) => u = nu,
                            }
                        }
                    }
                    Some(m) => {
                        if !used[m] {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

/// A parity-join request: find a spanning subgraph whose odd-degree
/// vertices are exactly `odd_set`.
#[derive(Debug, Clone)]
pub struct SJoinRequest {
    pub graph: Graph,
    pub odd_set: Vec<usize>,
}

/// Finds an edge subset `H` of a connected graph with `deg_H(v)` odd
/// exactly for `v` in the odd set, which must have even size. Returns the
/// selected edge indices, sorted.
///
/// Walks a BFS spanning tree leaves-first, toggling the parent edge of
/// every vertex whose accumulated parity is wrong; the root comes out
/// right because parity sums are even.
pub fn s_join(req: &SJoinRequest) -> Result<Vec<usize>> {
    let g = &req.graph;
    if !req.odd_set.len().is_multiple_of(2) {
        return Err(Error::ContractViolation(format!(
            "odd-degree set has odd size {}",
            req.odd_set.len()
        )));
    }
    if !g.is_connected() {
        return Err(Error::ContractViolation(
            "parity join requires a connected graph".into(),
        ));
    }
    for &v in &req.odd_set {
        if v >= g.n() {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
    }
    let mut want_odd = vec![false; g.n()];
    for &v in &req.odd_set {
        want_odd[v] = true;
    }
    Ok(tree_parity_join(
        g.n(),
        |v| g.adjacency(v).iter().copied(),
        &want_odd,
        (0..g.n()).collect::<Vec<_>>().as_slice(),
    ))
}

/// Core of the parity join, shared with the partial-split coloring: works
/// on any connected vertex set given an adjacency oracle of
/// `(neighbor, edge id)` pairs. Returns selected edge ids, sorted.
pub(crate) fn tree_parity_join<F, I>(
    n: usize,
    adjacency: F,
    want_odd: &[bool],
    vertices: &[usize],
) -> Vec<usize>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = (usize, usize)>,
{
    if vertices.is_empty() {
        return Vec::new();
    }
    let root = *vertices.iter().min().expect("nonempty component");
    let mut visited = vec![false; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    visited[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for (w, e) in adjacency(v) {
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                parent_edge[w] = e;
                order.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), vertices.len(), "component must be connected");
    let mut odd_now = vec![false; n];
    let mut chosen = Vec::new();
    for &v in order.iter().rev() {
        if v == root {
            continue;
        }
        if odd_now[v] != want_odd[v] {
            chosen.push(parent_edge[v]);
            odd_now[v] = !odd_now[v];
            let p = parent[v];
            odd_now[p] = !odd_now[p];
        }
    }
    debug_assert_eq!(odd_now[root], want_odd[root], "parity sums to even");
    chosen.sort_unstable();
    chosen
}
