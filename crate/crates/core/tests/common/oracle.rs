//! Reference implementations that share no code with the library's
//! matching-based verifier.

use ksrd_core::{Graph, Labeling, Vertex};

/// Backtracking search for an assignment of every vertex in `attacked`
/// (all labeled 0) to a neighbor `u` with `f(u) >= 2`, at most `f(u) - 1`
/// each.
pub fn naive_defendable(graph: &Graph, f: &Labeling, attacked: &[Vertex]) -> bool {
    fn go(graph: &Graph, f: &Labeling, attacked: &[Vertex], load: &mut [u32]) -> bool {
        let Some((&z, rest)) = attacked.split_first() else { return true };
        for &u in graph.neighbors(z) {
            let l = f.label(u);
            if l >= 2 && load[u] < l - 1 {
                load[u] += 1;
                if go(graph, f, rest, load) {
                    return true;
                }
                load[u] -= 1;
            }
        }
        false
    }
    let zeros: Vec<Vertex> = attacked.iter().copied().filter(|&v| f.label(v) == 0).collect();
    go(graph, f, &zeros, &mut vec![0; graph.vertex_count()])
}

/// All nonempty subsets of the zero vertices of size at most `k`, each
/// checked with [`naive_defendable`].
pub fn naive_is_proper(graph: &Graph, f: &Labeling) -> bool {
    let zeros = f.level_set(0);
    let k = f.k();
    let mut chosen = Vec::new();
    fn subsets(graph: &Graph, f: &Labeling, zeros: &[Vertex], k: usize, chosen: &mut Vec<Vertex>) -> bool {
        if !chosen.is_empty() && !naive_defendable(graph, f, chosen) {
            return false;
        }
        if chosen.len() == k {
            return true;
        }
        for (i, &z) in zeros.iter().enumerate() {
            chosen.push(z);
            let ok = subsets(graph, f, &zeros[i + 1..], k, chosen);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    subsets(graph, f, &zeros, k, &mut chosen)
}

/// Minimum over nonempty zero sets `S`, `|S| <= k`, of the total capacity of
/// the defenders adjacent to `S` minus `|S|`.
pub fn naive_slack(graph: &Graph, f: &Labeling) -> Option<i64> {
    let zeros = f.level_set(0);
    if zeros.is_empty() {
        return None;
    }
    let mut best = i64::MAX;
    let limit = 1u64 << zeros.len();
    for mask in 1..limit {
        if mask.count_ones() as usize > f.k() {
            continue;
        }
        let mut nbrs = vec![false; graph.vertex_count()];
        for (i, &z) in zeros.iter().enumerate() {
            if mask >> i & 1 == 1 {
                graph.neighbors(z).iter().for_each(|&u| nbrs[u] = true);
            }
        }
        let cap: i64 =
            (0..graph.vertex_count()).filter(|&u| nbrs[u] && f.label(u) >= 2).map(|u| i64::from(f.label(u)) - 1).sum();
        best = best.min(cap - i64::from(mask.count_ones()));
    }
    Some(best)
}
