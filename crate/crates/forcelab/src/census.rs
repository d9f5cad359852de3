//! Exhaustive censuses of small graphs, one representative per isomorphism
//! class, plus graph6 catalog files for orders beyond the internal limit.
//!
//! Internal generation extends each canonical (n-1)-vertex graph by one new
//! vertex attached to every possible neighborhood, then deduplicates by
//! canonical key. Every n-vertex graph arises this way from deleting a vertex,
//! so the sweep is complete; results are memoized per order and returned in
//! canonical-key order, which fixes the census ordering used everywhere else.

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::graph6::{parse_graph6, to_graph6, Graph6Error};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

/// Largest order generated internally.
pub const INTERNAL_ENUMERATION_MAX: usize = 8;

/// Known counts of isomorphism classes for orders 0..=8.
pub const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("internal enumeration supports order <= {INTERNAL_ENUMERATION_MAX}, got {0}")]
    OrderTooLarge(usize),
    #[error("catalog {path}: {source}")]
    CatalogIo {
        path: String,
        source: std::io::Error,
    },
    #[error("catalog {path} line {line}: {source}")]
    CatalogParse {
        path: String,
        line: usize,
        source: Graph6Error,
    },
    #[error("catalog {path} holds {found} graphs, expected {expected}")]
    CountMismatch {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn cache() -> &'static Mutex<BTreeMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// One canonically labelled representative per isomorphism class of order `n`,
/// sorted by canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Arc<Vec<Graph>>, CensusError> {
    if n > INTERNAL_ENUMERATION_MAX {
        return Err(CensusError::OrderTooLarge(n));
    }
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(hit));
    }
    let graphs = if n == 0 {
        vec![Graph::empty_graph(0)]
    } else {
        let parents = enumerate_graphs(n - 1)?;
        let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for parent in parents.iter() {
            for nbrs in 0..(1u128 << (n - 1)) {
                let mut g = Graph::new(n)?;
                for (u, v) in parent.edges() {
                    g.add_edge(u, v)?;
                }
                for v in VertexSet::from_bits(nbrs).iter() {
                    g.add_edge(v, n - 1)?;
                }
                let key = canonical_form(&g)?;
                classes.entry(key).or_insert_with(|| {
                    canonical_graph(&g).expect("order within canon limit")
                });
            }
        }
        classes.into_values().collect()
    };
    let arc = Arc::new(graphs);
    cache().lock().unwrap().insert(n, Arc::clone(&arc));
    Ok(arc)
}

/// All census graphs of orders `1..=max_order`, in (order, canonical key) order.
pub fn census_through(max_order: usize) -> Result<Vec<Graph>, CensusError> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_graphs(n)?.iter().cloned());
    }
    Ok(out)
}

/// Parses a graph6 catalog: one graph per line, `#` comments and blank lines
/// skipped. Returns `(line_number, graph)` pairs.
pub fn read_graph6_file(path: &Path) -> Result<Vec<(usize, Graph)>, CensusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CensusError::CatalogIo {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph6_lines(&text).map_err(|(line, source)| CensusError::CatalogParse {
        path: path.display().to_string(),
        line,
        source,
    })
}

/// Parses graph6 text; on failure reports the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<(usize, Graph)>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => out.push((idx + 1, g)),
            Err(e) => return Err((idx + 1, e)),
        }
    }
    Ok(out)
}

/// Loads the order-`n` census from a catalog directory (file `graph<n>.g6`)
/// when given, or from the internal generator. A `checksum` count, when
/// supplied, must match exactly.
pub fn load_census(
    n: usize,
    catalog_dir: Option<&Path>,
    checksum: Option<usize>,
) -> Result<Vec<Graph>, CensusError> {
    let graphs: Vec<Graph> = match catalog_dir {
        Some(dir) => {
            let path = dir.join(format!("graph{n}.g6"));
            if path.exists() {
                read_graph6_file(&path)?.into_iter().map(|(_, g)| g).collect()
            } else {
                enumerate_graphs(n)?.as_ref().clone()
            }
        }
        None => enumerate_graphs(n)?.as_ref().clone(),
    };
    if let Some(expected) = checksum {
        if graphs.len() != expected {
            return Err(CensusError::CountMismatch {
                path: format!("order-{n} census"),
                expected,
                found: graphs.len(),
            });
        }
    }
    Ok(graphs)
}

/// Writes a census to graph6 text, one canonical code per line.
pub fn census_to_graph6(graphs: &[Graph]) -> Result<String, Graph6Error> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&to_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}
