//! Slow, direct reference implementations used by the test suites as
//! independent oracles for the fast kernels. Nothing here shares code with
//! the paths it is meant to check.

use crate::boolfn::{dot, BooleanFunction};
use crate::cayley::CayleyGraph;

/// 0/1 Fourier numerators by the quadratic-time double sum.
pub fn naive_fourier_numerators(f: &BooleanFunction) -> Vec<i64> {
    let len = f.table_len();
    (0..len)
        .map(|w| {
            (0..len)
                .filter(|&x| f.value(x))
                .map(|x| if dot(w, x) { -1i64 } else { 1 })
                .sum()
        })
        .collect()
}

/// Signed Walsh values by the quadratic-time double sum.
pub fn naive_signed_walsh(f: &BooleanFunction) -> Vec<i64> {
    let len = f.table_len();
    (0..len)
        .map(|w| {
            (0..len)
                .map(|x| if f.value(x) ^ dot(w, x) { -1i64 } else { 1 })
                .sum()
        })
        .collect()
}

/// Connected components by explicit breadth-first traversal of the graph,
/// independent of the span-dimension shortcut.
pub fn flood_fill_component_count(g: &CayleyGraph) -> u64 {
    let v = g.vertex_count();
    let mut seen = vec![false; v];
    let mut components = 0u64;
    let mut queue = Vec::new();
    for start in 0..v {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push(start);
        while let Some(u) = queue.pop() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    components
}

/// Dense adjacency matrix including the loop diagonal. Intended for small
/// arities only; allocates 4^n entries.
pub fn adjacency_matrix(g: &CayleyGraph) -> Vec<Vec<i64>> {
    let v = g.vertex_count();
    (0..v)
        .map(|u| (0..v).map(|w| g.adjacent(u, w) as i64).collect())
        .collect()
}
