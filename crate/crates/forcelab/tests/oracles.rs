//! Independent-oracle cross checks: each test re-derives a result with a
//! deliberately separate implementation (reference decoder, brute-force
//! permutation search, exhaustive injection enumeration) and compares it with
//! the engine.

use forcelab::census::{census_through, enumerate_graphs};
use forcelab::graph::{Graph, VertexSet};
use forcelab::rules::{valid_forces, Rule, RuleState};
use forcelab::{canonical_form, contains_induced, is_induced_embedding, parse_graph6, to_graph6};

/// Reference graph6 decoder written directly from the published byte layout:
/// returns (order, edge list).
fn reference_decode(code: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = code.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + bit_index / 6] - 63;
            if group >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    (n, edges)
}

#[test]
fn graph6_codec_matches_reference_decoder() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap().iter() {
            let code = to_graph6(g).unwrap();
            let (rn, mut redges) = reference_decode(&code);
            redges.sort_unstable();
            assert_eq!(rn, g.order());
            assert_eq!(redges, g.edges(), "decoder disagreement on {code}");
            assert_eq!(&parse_graph6(&code).unwrap(), g, "round trip on {code}");
        }
    }
}

#[test]
fn graph6_fixed_codes_decode_as_expected() {
    let (n, edges) = reference_decode("D?{");
    assert_eq!((n, edges.len()), (5, 4));
    let (n, edges) = reference_decode("C~");
    assert_eq!((n, edges.len()), (4, 6));
}

/// Brute-force isomorphism: try every bijection.
fn isomorphic_by_permutation(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if h.order() != n || g.size() != h.size() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v])));
        if ok {
            return true;
        }
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

#[test]
fn canonical_keys_agree_with_permutation_isomorphism() {
    let graphs = census_through(5).unwrap();
    let keys: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            let brute = isomorphic_by_permutation(&graphs[i], &graphs[j]);
            let by_key = keys[i] == keys[j];
            assert_eq!(
                brute,
                by_key,
                "mismatch between {:?} and {:?}",
                graphs[i],
                graphs[j]
            );
        }
    }
}

/// Labeled-graph enumeration with canonical dedup, as an independent census.
#[test]
fn census_counts_match_labeled_dedup() {
    use std::collections::BTreeSet;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut keys = BTreeSet::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let mut g = Graph::new(n).unwrap();
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            keys.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(keys.len(), enumerate_graphs(n).unwrap().len());
    }
}

/// Exhaustive injection check for induced containment.
fn contains_induced_by_enumeration(pattern: &Graph, host: &Graph) -> bool {
    let np = pattern.order();
    let nh = host.order();
    if np > nh {
        return false;
    }
    let mut image = vec![0usize; np];
    fn rec(pattern: &Graph, host: &Graph, image: &mut Vec<usize>, depth: usize) -> bool {
        if depth == pattern.order() {
            return true;
        }
        'next: for c in 0..host.order() {
            if image[..depth].contains(&c) {
                continue;
            }
            for (q, &iq) in image.iter().enumerate().take(depth) {
                if pattern.has_edge(depth, q) != host.has_edge(c, iq) {
                    continue 'next;
                }
            }
            image[depth] = c;
            if rec(pattern, host, image, depth + 1) {
                return true;
            }
        }
        false
    }
    rec(pattern, host, &mut image, 0)
}

#[test]
fn induced_containment_agrees_with_exhaustive_injection() {
    let patterns = census_through(4).unwrap();
    let hosts = census_through(6).unwrap();
    for p in &patterns {
        for h in &hosts {
            let by_oracle = contains_induced_by_enumeration(p, h);
            match contains_induced(p, h) {
                Some(phi) => {
                    assert!(by_oracle, "false positive for {p:?} in {h:?}");
                    assert!(is_induced_embedding(p, h, &phi));
                }
                None => assert!(!by_oracle, "missed embedding of {p:?} in {h:?}"),
            }
        }
    }
}

#[test]
fn force_validity_is_monotone_in_blue() {
    // For the saturating rules: a force valid at `blue` stays valid at any
    // superset as long as its target is still white.
    let rules = [
        Rule::Standard,
        Rule::Psd,
        Rule::Skew,
        Rule::KForcing(2),
        Rule::Bootstrap(2),
    ];
    for n in 1..=5usize {
        for g in enumerate_graphs(n).unwrap().iter() {
            for rule in rules {
                for bits in 0u128..(1u128 << n) {
                    let blue = VertexSet::from_bits(bits);
                    let forces = valid_forces(rule, g, RuleState::colored(blue));
                    if forces.is_empty() {
                        continue;
                    }
                    let extra: Vec<usize> = (g.vertices() - blue).iter().collect();
                    for sup_bits in 0u128..(1u128 << extra.len()) {
                        let mut sup = blue;
                        for (i, &v) in extra.iter().enumerate() {
                            if sup_bits >> i & 1 == 1 {
                                sup.insert(v);
                            }
                        }
                        let sup_forces = valid_forces(rule, g, RuleState::colored(sup));
                        for f in &forces {
                            if !sup.contains(f.target) {
                                assert!(
                                    sup_forces.contains(f),
                                    "{rule} force {f} lost going from {blue} to {sup} on {g:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn standard_forces_are_psd_forces() {
    // Checked on every census graph of order <= 5, connected or not.
    for n in 1..=5usize {
        for g in enumerate_graphs(n).unwrap().iter() {
            for bits in 0u128..(1u128 << n) {
                let state = RuleState::colored(VertexSet::from_bits(bits));
                let z = valid_forces(Rule::Standard, g, state);
                let psd = valid_forces(Rule::Psd, g, state);
                for f in &z {
                    assert!(psd.contains(f), "{f} valid for standard but not psd on {g:?}");
                }
            }
        }
    }
}
