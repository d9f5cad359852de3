//! Canonical forms for small graphs via degree-refined permutation search.
//!
//! Two graphs get equal keys iff they are isomorphic. The search assigns
//! canonical positions one at a time, restricted to vertices whose degree
//! matches the sorted degree sequence at that position, and prunes any branch
//! whose partial adjacency key already exceeds the best complete key found.
//! That is ample for the orders this crate solves exactly; it is not a
//! general-purpose canonical labelling algorithm.

use crate::graph::{Graph, GraphError};

/// Largest order accepted by the permutation search.
pub const CANON_MAX_ORDER: usize = 10;

/// Total-ordering key: `[n, packed canonical upper-triangle bits...]`.
/// Keys are equal iff the underlying graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

struct Search<'g> {
    g: &'g Graph,
    /// target_degree[p] = required degree of the vertex placed at position p
    target_degree: Vec<usize>,
    /// best complete bit string found so far (upper triangle, column order)
    best_bits: Option<Vec<u8>>,
    best_perm: Vec<usize>,
}

impl<'g> Search<'g> {
    /// Places position `pos` given `placed[p] = original vertex at position p`
    /// and the partial bit string for columns `1..pos`.
    fn descend(&mut self, placed: &mut Vec<usize>, bits: &mut Vec<u8>, used: &mut [bool]) {
        let n = self.g.order();
        let pos = placed.len();
        if pos == n {
            if self.best_bits.as_ref().is_none_or(|b| bits[..] < b[..]) {
                self.best_bits = Some(bits.clone());
                self.best_perm = placed.clone();
            }
            return;
        }
        for v in 0..n {
            if used[v] || self.g.degree(v) != self.target_degree[pos] {
                continue;
            }
            // Column `pos` of the upper triangle: adjacency to earlier positions.
            let base = bits.len();
            for &u in placed.iter() {
                bits.push(u8::from(self.g.has_edge(u, v)));
            }
            let keep = match &self.best_bits {
                Some(best) => bits[..] <= best[..bits.len()],
                None => true,
            };
            if keep {
                used[v] = true;
                placed.push(v);
                self.descend(placed, bits, used);
                placed.pop();
                used[v] = false;
            }
            bits.truncate(base);
        }
    }
}

fn canonical_search(g: &Graph) -> Result<(Vec<u8>, Vec<usize>), GraphError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(GraphError::TooLarge(n, CANON_MAX_ORDER));
    }
    let mut target_degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    target_degree.sort_unstable();
    let mut search = Search {
        g,
        target_degree,
        best_bits: None,
        best_perm: (0..n).collect(),
    };
    let mut placed = Vec::with_capacity(n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut used = vec![false; n];
    search.descend(&mut placed, &mut bits, &mut used);
    Ok((
        search.best_bits.unwrap_or_default(),
        search.best_perm,
    ))
}

/// Canonical key of `g`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let (bits, _) = canonical_search(g)?;
    let mut packed = vec![g.order() as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for bit in bits {
        acc = acc << 1 | bit;
        filled += 1;
        if filled == 8 {
            packed.push(acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        packed.push(acc << (8 - filled));
    }
    Ok(CanonicalForm(packed))
}

/// A canonically labelled copy of `g`: isomorphic to `g`, and identical for
/// every graph isomorphic to `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    let (_, placed) = canonical_search(g)?;
    // placed[pos] = original vertex; permuted() wants perm[old] = new.
    let mut perm = vec![0usize; g.order()];
    for (pos, &orig) in placed.iter().enumerate() {
        perm[orig] = pos;
    }
    Ok(g.permuted(&perm))
}

/// Isomorphism test via canonical keys.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_path_has_same_key() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn p3_and_k3_differ() {
        let p3 = Graph::path(3);
        let k3 = Graph::complete(3);
        assert_ne!(canonical_form(&p3).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic_fixed_point() {
        let g = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3)]).unwrap();
        let c = canonical_graph(&g).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&c).unwrap());
        assert_eq!(canonical_graph(&c).unwrap(), c, "canonical labelling is idempotent");
    }

    #[test]
    fn labelled_four_vertex_graphs_have_eleven_classes() {
        use std::collections::BTreeSet;
        let mut keys = BTreeSet::new();
        for mask in 0u32..64 {
            let mut g = Graph::new(4).unwrap();
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            keys.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(keys.len(), 11);
    }

    #[test]
    fn order_limit_is_enforced() {
        let g = Graph::empty_graph(11);
        assert!(canonical_form(&g).is_err());
    }
}
