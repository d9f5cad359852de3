//! Induced subgraph containment by backtracking over injections.

use crate::graph::{Graph, VertexSet};

/// Searches for an injection `phi` from `pattern` into `host` that preserves
/// both edges and non-edges. Returns one witness as `phi[pattern_vertex] =
/// host_vertex`, or `None`. Patterns larger than the host trivially fail.
pub fn contains_induced(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let np = pattern.order();
    if np > host.order() {
        return None;
    }
    if np == 0 {
        return Some(Vec::new());
    }
    // Map high-degree pattern vertices first; their host candidates are scarcer.
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));

    let mut image = vec![usize::MAX; np];
    if extend(pattern, host, &order, 0, &mut image, VertexSet::EMPTY) {
        Some(image)
    } else {
        None
    }
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    'candidates: for c in 0..host.order() {
        if used.contains(c) || host.degree(c) < pattern.degree(p) {
            continue;
        }
        for &q in &order[..depth] {
            if pattern.has_edge(p, q) != host.has_edge(c, image[q]) {
                continue 'candidates;
            }
        }
        image[p] = c;
        if extend(pattern, host, order, depth + 1, image, used.with(c)) {
            return true;
        }
        image[p] = usize::MAX;
    }
    false
}

/// Checks that `phi` is an induced embedding of `pattern` into `host`.
pub fn is_induced_embedding(pattern: &Graph, host: &Graph, phi: &[usize]) -> bool {
    if phi.len() != pattern.order() {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &c in phi {
        if c >= host.order() || seen.contains(c) {
            return false;
        }
        seen.insert(c);
    }
    for u in 0..pattern.order() {
        for v in u + 1..pattern.order() {
            if pattern.has_edge(u, v) != host.has_edge(phi[u], phi[v]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_embeds_in_path() {
        let w = contains_induced(&Graph::complete(2), &Graph::path(3)).unwrap();
        assert!(is_induced_embedding(&Graph::complete(2), &Graph::path(3), &w));
    }

    #[test]
    fn matching_needs_a_long_enough_path() {
        // The two images of the K2s must be disjoint edges; P4's only disjoint
        // edge pair (v1v2, v3v4) has the chord v2-v3, so the embedding is not
        // induced. P5 has room.
        assert_eq!(contains_induced(&Graph::matching(2), &Graph::path(4)), None);
        let w = contains_induced(&Graph::matching(2), &Graph::path(5)).unwrap();
        assert!(is_induced_embedding(&Graph::matching(2), &Graph::path(5), &w));
    }

    #[test]
    fn triangle_not_in_square() {
        assert_eq!(contains_induced(&Graph::complete(3), &Graph::cycle(4)), None);
    }

    #[test]
    fn p4_inside_c5() {
        let w = contains_induced(&Graph::path(4), &Graph::cycle(5)).unwrap();
        assert!(is_induced_embedding(&Graph::path(4), &Graph::cycle(5), &w));
    }

    #[test]
    fn oversized_pattern_fails_fast() {
        assert_eq!(contains_induced(&Graph::path(4), &Graph::path(3)), None);
    }

    #[test]
    fn empty_pattern_always_embeds() {
        assert_eq!(
            contains_induced(&Graph::empty_graph(0), &Graph::path(3)),
            Some(vec![])
        );
    }
}
