//! graph6 encoding and decoding (single-byte header, n <= 62), plus the
//! sidecar record format `<graph6> : <hex mask>` that carries a loop set
//! next to the graph it belongs to.

use crate::error::{Error, Result};
use crate::graph::{Graph, LoopSet, SelfLoopGraph};

const OFFSET: u8 = 63;
const MAX_ORDER: usize = 62;

fn check_byte(byte: u8, position: usize) -> Result<u8> {
    if (OFFSET..=126).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(Error::Graph6InvalidByte { byte, position })
    }
}

/// Decodes one graph6 string. Trailing bytes beyond the payload are
/// rejected.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or(Error::Graph6Empty)?;
    if first == 126 {
        return Err(Error::Graph6ExtendedHeader);
    }
    let n = check_byte(first, 0)? as usize;
    let pair_bits = n * n.saturating_sub(1) / 2;
    let expected = pair_bits.div_ceil(6);
    if bytes.len() != 1 + expected {
        return Err(Error::Graph6PayloadLength {
            n,
            expected,
            actual: bytes.len().saturating_sub(1),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let word = check_byte(bytes[1 + bit / 6], 1 + bit / 6)?;
            if word >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
            if bit == pair_bits {
                break 'outer;
            }
        }
    }
    // remaining payload bytes still have to be printable
    for (k, &b) in bytes[1 + bit / 6..].iter().enumerate() {
        check_byte(b, 1 + bit / 6 + k)?;
    }
    Ok(g)
}

/// Encodes a graph with at most 62 vertices.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Graph6UnsupportedOrder { n });
    }
    let mut bytes = vec![OFFSET + n as u8];
    let mut word = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(OFFSET + word);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(OFFSET + (word << (6 - filled)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

/// Parses one corpus record: `graph6` alone means no loops, otherwise
/// `graph6 : hexmask` with the mask possibly empty.
pub fn parse_record(line: &str) -> Result<SelfLoopGraph> {
    let (g6, mask) = match line.split_once(':') {
        Some((g6, mask)) => (g6.trim(), mask.trim()),
        None => (line.trim(), ""),
    };
    let graph = decode_graph6(g6)?;
    let loops = LoopSet::from_hex(mask)?;
    SelfLoopGraph::new(graph, loops)
}

/// Writes one corpus record. Loop masks are padded to ceil(n/4) digits so
/// identical graphs always serialize identically.
pub fn format_record(gs: &SelfLoopGraph) -> Result<String> {
    let g6 = encode_graph6(gs.base())?;
    let mask = gs.loops().to_hex(gs.order());
    if mask.is_empty() {
        Ok(format!("{g6} :"))
    } else {
        Ok(format!("{g6} : {mask}"))
    }
}

/// Parses a whole corpus: one record per line, `#` comments and blank
/// lines skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<SelfLoopGraph>> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(parse_record)
        .collect()
}
