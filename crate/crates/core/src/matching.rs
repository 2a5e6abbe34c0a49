//! Capacitated bipartite assignment of attacked zero vertices to defenders.
//!
//! Left side: attacked vertices labeled 0 (demand 1 each). Right side:
//! their neighbors labeled `>= 2`, each with capacity `f(u) - 1`. Vertices
//! are added one at a time; each insertion runs one augmenting-path search,
//! so a set of `s` vertices costs `s` searches. Insertions can be undone in
//! LIFO order, which is what the subset enumeration in the verifier needs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;

/// Per-vertex defender lists and capacities for one `(graph, labeling)`.
#[derive(Clone, Debug)]
pub struct DefenseNetwork {
    /// For a zero vertex: its neighbors labeled `>= 2`, ascending.
    defenders: Vec<Vec<Vertex>>,
    /// `f(u) - 1` for defenders, 0 otherwise.
    capacity: Vec<u32>,
}

impl DefenseNetwork {
    pub fn new(graph: &Graph, labeling: &Labeling) -> Self {
        let n = graph.vertex_count();
        let mut defenders = vec![Vec::new(); n];
        for (v, slot) in defenders.iter_mut().enumerate() {
            if labeling.label(v) == 0 {
                slot.extend(graph.neighbors(v).iter().copied().filter(|&u| labeling.label(u) >= 2));
            }
        }
        let capacity = labeling.labels().iter().map(|&l| l.saturating_sub(1)).collect();
        DefenseNetwork { defenders, capacity }
    }

    pub fn defenders(&self, zero: Vertex) -> &[Vertex] {
        &self.defenders[zero]
    }

    pub fn capacity(&self, v: Vertex) -> u32 {
        self.capacity[v]
    }

    /// Total capacity of the defenders adjacent to `zero`.
    pub fn reach(&self, zero: Vertex) -> u64 {
        self.defenders[zero].iter().map(|&u| u64::from(self.capacity[u])).sum()
    }
}

#[derive(Debug)]
struct Undo {
    /// `(position, previous defender)` for every client moved along the path.
    moved: Vec<(usize, Vertex)>,
    endpoint: Vertex,
}

/// Incremental capacitated matching over a [`DefenseNetwork`].
#[derive(Debug)]
pub struct Matcher<'a> {
    net: &'a DefenseNetwork,
    clients: Vec<Vertex>,
    assigned: Vec<Vertex>,
    load: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    history: Vec<Option<Undo>>,
}

impl<'a> Matcher<'a> {
    pub fn new(net: &'a DefenseNetwork) -> Self {
        let n = net.capacity.len();
        Matcher {
            net,
            clients: Vec::new(),
            assigned: Vec::new(),
            load: vec![0; n],
            stamp: vec![0; n],
            epoch: 0,
            history: Vec::new(),
        }
    }

    /// Number of vertices pushed so far.
    pub fn len(&self) -> usize {
        self.clients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clients.is_empty()
    }

    /// Adds an attacked zero vertex. Returns `false` if no augmenting path
    /// exists; the vertex is then recorded as unassigned and the matching is
    /// left unchanged.
    pub fn push(&mut self, zero: Vertex) -> bool {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let pos = self.clients.len();
        self.clients.push(zero);
        self.assigned.push(usize::MAX);
        let mut moved = Vec::new();
        match self.augment(pos, &mut moved) {
            Some(endpoint) => {
                self.load[endpoint] += 1;
                self.history.push(Some(Undo { moved, endpoint }));
                true
            }
            None => {
                self.history.push(None);
                false
            }
        }
    }

    /// Removes the most recently pushed vertex, restoring the previous
    /// assignment exactly.
    pub fn pop(&mut self) {
        let undo = self.history.pop().expect("pop on empty matcher");
        self.clients.pop();
        self.assigned.pop();
        if let Some(undo) = undo {
            self.load[undo.endpoint] -= 1;
            for &(p, prev) in undo.moved.iter().rev() {
                if p < self.assigned.len() {
                    self.assigned[p] = prev;
                }
            }
        }
    }

    // Depth-first search for an augmenting path starting at client `pos`.
    // Defenders are scanned in ascending id order.
    fn augment(&mut self, pos: usize, moved: &mut Vec<(usize, Vertex)>) -> Option<Vertex> {
        let zero = self.clients[pos];
        for i in 0..self.net.defenders[zero].len() {
            let u = self.net.defenders[zero][i];
            if self.stamp[u] == self.epoch {
                continue;
            }
            self.stamp[u] = self.epoch;
            if self.load[u] < self.net.capacity[u] {
                moved.push((pos, self.assigned[pos]));
                self.assigned[pos] = u;
                return Some(u);
            }
            for other in 0..self.clients.len() {
                if other == pos || self.assigned[other] != u {
                    continue;
                }
                let mark = moved.len();
                if let Some(end) = self.augment(other, moved) {
                    moved.push((pos, self.assigned[pos]));
                    self.assigned[pos] = u;
                    return Some(end);
                }
                moved.truncate(mark);
            }
        }
        None
    }

    /// True iff every pushed vertex is assigned.
    pub fn is_saturating(&self) -> bool {
        self.history.iter().all(Option::is_some)
    }

    /// `(attacked, defender)` pairs for every assigned vertex.
    pub fn assignment(&self) -> Vec<(Vertex, Vertex)> {
        self.clients.iter().zip(&self.assigned).filter(|(_, &d)| d != usize::MAX).map(|(&z, &d)| (z, d)).collect()
    }

    /// For an unassigned client, the set of clients reachable from it by
    /// alternating paths. Their joint defender capacity is strictly smaller
    /// than their number (a Hall violator).
    pub fn hall_violator(&self, zero: Vertex) -> Vec<Vertex> {
        let n = self.load.len();
        let start = self.clients.iter().position(|&c| c == zero).expect("client present");
        let mut in_set = vec![false; self.clients.len()];
        let mut seen_def = vec![false; n];
        let mut stack = vec![start];
        in_set[start] = true;
        while let Some(p) = stack.pop() {
            for &u in &self.net.defenders[self.clients[p]] {
                if seen_def[u] {
                    continue;
                }
                seen_def[u] = true;
                for (q, &d) in self.assigned.iter().enumerate() {
                    if d == u && !in_set[q] {
                        in_set[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        let mut out: Vec<Vertex> = self.clients.iter().zip(in_set).filter(|(_, s)| *s).map(|(&c, _)| c).collect();
        out.sort_unstable();
        out
    }
}
