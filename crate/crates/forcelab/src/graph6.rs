//! graph6 text encoding: one graph per printable ASCII line.
//!
//! Layout (single-byte header form, order <= 62): byte 0 is `63 + n`; the
//! remaining bytes pack the upper triangle of the adjacency matrix in column
//! order — for each column `j = 1..n`, rows `i = 0..j` — six bits per byte,
//! most significant bit first, each 6-bit group offset by 63. Padding bits
//! after the last edge bit must be zero.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// Largest order representable with a single-byte size header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("multi-byte size header at offset 0 is not supported (order > 62)")]
    UnsupportedHeader,
    #[error("byte 0x{byte:02x} out of graph6 range 63..=126 at offset {offset}")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("expected {expected} bytes for order {order}, found {found}")]
    WrongLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    TrailingBits { offset: usize },
    #[error("order {0} exceeds the graph6 single-byte limit {GRAPH6_MAX_ORDER}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::UnsupportedHeader);
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::ByteOutOfRange {
            byte: first,
            offset: 0,
        });
    }
    let n = (first - 63) as usize;
    let expected = 1 + if n >= 2 { body_len(n) } else { 0 };
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength {
            order: n,
            expected,
            found: bytes.len(),
        });
    }
    let mut g = Graph::new(n)?;
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = 1 + bit_index / 6;
            let byte = bytes[offset];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::ByteOutOfRange { byte, offset });
            }
            let group = byte - 63;
            if group >> (5 - bit_index % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit_index += 1;
        }
    }
    // Verify padding and range of any remaining payload bits.
    if n >= 2 {
        let last_offset = expected - 1;
        let last = bytes[last_offset];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::ByteOutOfRange {
                byte: last,
                offset: last_offset,
            });
        }
        let used = bit_index % 6;
        if used != 0 {
            let pad_mask = (1u8 << (6 - used)) - 1;
            if (last - 63) & pad_mask != 0 {
                return Err(Graph6Error::TrailingBits {
                    offset: last_offset,
                });
            }
        }
    }
    Ok(g)
}

/// Encodes a graph as labelled; round-trips with [`parse_graph6`].
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    if n >= 2 {
        let mut group = 0u8;
        let mut filled = 0u8;
        for j in 1..n {
            for i in 0..j {
                group <<= 1;
                if g.has_edge(i, j) {
                    group |= 1;
                }
                filled += 1;
                if filled == 6 {
                    out.push(63 + group);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(63 + (group << (6 - filled)));
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn zero_and_one_vertex_codes() {
        assert_eq!(to_graph6(&Graph::empty_graph(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn k3_encodes_to_bw() {
        // Upper triangle 111 -> group 111000 -> 56 + 63 = 'w'.
        assert_eq!(to_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn c_tilde_is_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn star_code_round_trips() {
        // 'D' -> n=5; '?' -> 000000; '{' -> 111100: edges (0,4),(1,4),(2,4),(3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g.neighbors(4), VertexSet::from_iter([0, 1, 2, 3]));
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn p4_code_is_fixed_point() {
        // Bits 101001 -> 41 + 63 = 'h'.
        let code = to_graph6(&Graph::path(4)).unwrap();
        assert_eq!(code, "Ch");
        assert_eq!(to_graph6(&parse_graph6(&code).unwrap()).unwrap(), code);
    }

    #[test]
    fn malformed_inputs_name_the_offset() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedHeader));
        assert_eq!(
            parse_graph6("B!"),
            Err(Graph6Error::ByteOutOfRange {
                byte: b'!',
                offset: 1
            })
        );
        assert_eq!(
            parse_graph6("B"),
            Err(Graph6Error::WrongLength {
                order: 3,
                expected: 2,
                found: 1
            })
        );
        // 'o' - 63 = 0b110000: edge bit plus a nonzero padding bit.
        assert_eq!(
            parse_graph6("Ao"),
            Err(Graph6Error::TrailingBits { offset: 1 })
        );
        // '_' - 63 = 0b100000: K2 with clean padding.
        assert_eq!(parse_graph6("A_").unwrap().size(), 1);
        assert_eq!(parse_graph6("A?").unwrap().size(), 0);
    }

    #[test]
    fn orders_beyond_62_are_rejected_on_encode() {
        let g = Graph::empty_graph(63);
        assert_eq!(to_graph6(&g), Err(Graph6Error::TooLarge(63)));
    }
}
