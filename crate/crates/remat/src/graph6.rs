//! graph6 encoding and decoding (McKay's format), restricted to the
//! single-byte order form (`n <= 62`).
//!
//! A word is `chr(n + 63)` followed by the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! six bits per byte, high bit first, each byte offset by 63. Streams are one
//! word per line with an optional `>>graph6<<` header.

use std::io::BufRead;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("malformed graph6 word: {reason}")]
    Malformed { reason: String },
    #[error("unsupported graph6 word: {reason}")]
    Unsupported { reason: String },
}

fn malformed(reason: impl Into<String>) -> Graph6Error {
    Graph6Error::Malformed {
        reason: reason.into(),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses a single graph6 word.
pub fn parse_graph6(word: &str) -> Result<Graph, Graph6Error> {
    let bytes = word.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty word"));
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::Unsupported {
            reason: "multi-byte order (n > 62) is not supported".into(),
        });
    }
    if bytes[0] < 63 || bytes[0] > 63 + MAX_VERTICES as u8 {
        return Err(malformed(format!("invalid order byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let body = &bytes[1..];
    if body.len() != body_len(n) {
        return Err(malformed(format!(
            "expected {} body bytes for n = {n}, found {}",
            body_len(n),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("invalid body byte {b}")));
    }

    let bit = |pos: usize| ((body[pos / 6] - 63) >> (5 - pos % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    // Padding bits must be zero, otherwise the word is not canonical and
    // write(parse(w)) would not round-trip.
    for pad in pos..body.len() * 6 {
        if bit(pad) {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges).map_err(|e| malformed(e.to_string()))
}

/// Writes a graph as a graph6 word. Total because `Graph` never exceeds 62
/// vertices.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut body = vec![0u8; body_len(n)];
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((63 + n as u8) as char);
    out.extend(body.iter().map(|&b| (b + 63) as char));
    out
}

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {source}")]
pub struct IngestError {
    pub line: usize,
    pub source: Graph6Error,
}

/// Line-oriented reader for graph6 streams. Blank lines and an optional
/// leading `>>graph6<<` header are skipped; each remaining line must be one
/// word.
pub struct Graph6Reader<R> {
    reader: R,
    line: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Graph6Reader<R> {
        Graph6Reader { reader, line: 0 }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let mut buf = String::new();
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    self.line += 1;
                    return Some(Err(IngestError {
                        line: self.line,
                        source: Graph6Error::Malformed {
                            reason: format!("I/O error: {e}"),
                        },
                    }));
                }
            }
            self.line += 1;
            let word = buf.trim();
            if word.is_empty() || (self.line == 1 && word.starts_with(">>graph6<<")) {
                // A header line may carry the first word immediately after
                // the marker.
                let rest = word.strip_prefix(">>graph6<<").unwrap_or("");
                if rest.is_empty() {
                    continue;
                }
                return Some(parse_graph6(rest).map_err(|source| IngestError {
                    line: self.line,
                    source,
                }));
            }
            return Some(parse_graph6(word).map_err(|source| IngestError {
                line: self.line,
                source,
            }));
        }
    }
}

/// Result of draining a graph6 stream in lenient mode.
#[derive(Debug)]
pub struct IngestOutcome {
    pub graphs: Vec<Graph>,
    /// Line numbers and errors of skipped malformed lines.
    pub skipped: Vec<IngestError>,
}

/// Reads a whole stream. With `strict` the first malformed line aborts;
/// otherwise malformed lines are collected in `skipped` and parsing goes on.
pub fn ingest_graph6_stream(
    reader: impl BufRead,
    strict: bool,
) -> Result<IngestOutcome, IngestError> {
    let mut out = IngestOutcome {
        graphs: Vec::new(),
        skipped: Vec::new(),
    };
    for item in Graph6Reader::new(reader) {
        match item {
            Ok(g) => out.graphs.push(g),
            Err(e) if strict => return Err(e),
            Err(e) => out.skipped.push(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, Graph};

    /// Independent re-encoding used as the oracle for the writer: build the
    /// bit string with plain string operations and pack it manually.
    fn encode_by_hand(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> String {
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(if has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut out = String::new();
        out.push((63 + n as u8) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let val = chunk.iter().fold(0u8, |acc, &b| acc << 1 | (b - b'0'));
            out.push((val + 63) as char);
        }
        out
    }

    #[test]
    fn k4_is_c_tilde() {
        let g = complete(4);
        assert_eq!(write_graph6(&g), "C~");
        assert_eq!(encode_by_hand(4, |i, j| g.has_edge(i, j)), "C~");
        let parsed = parse_graph6("C~").unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn single_vertex_and_empty_graph() {
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn writer_matches_hand_encoding_on_families() {
        for g in [cycle(5), cycle(9), petersen(), complete(7)] {
            assert_eq!(
                write_graph6(&g),
                encode_by_hand(g.n(), |i, j| g.has_edge(i, j))
            );
        }
    }

    #[test]
    fn malformed_words_are_rejected() {
        assert!(matches!(
            parse_graph6(""),
            Err(Graph6Error::Malformed { .. })
        ));
        // Body too short for n = 4.
        assert!(matches!(
            parse_graph6("C"),
            Err(Graph6Error::Malformed { .. })
        ));
        // Body byte out of range (space).
        assert!(matches!(
            parse_graph6("C "),
            Err(Graph6Error::Malformed { .. })
        ));
        // Multi-byte order marker.
        assert!(matches!(
            parse_graph6("~??"),
            Err(Graph6Error::Unsupported { .. })
        ));
    }

    #[test]
    fn nonzero_padding_is_rejected() {
        // n = 3 has three pair bits and three padding bits; set one of them.
        let word: String = [(63u8 + 3) as char, (63u8 + 0b000100) as char].iter().collect();
        assert!(matches!(
            parse_graph6(&word),
            Err(Graph6Error::Malformed { .. })
        ));
    }

    #[test]
    fn stream_reader_skips_header_and_blank_lines() {
        let input = ">>graph6<<\nC~\n\nBw\n";
        let out = ingest_graph6_stream(input.as_bytes(), true).unwrap();
        assert_eq!(out.graphs.len(), 2);
        assert_eq!(out.graphs[0], complete(4));
        assert_eq!(out.graphs[1], cycle(3));
    }

    #[test]
    fn strict_mode_reports_the_line_number() {
        let input = "C~\nnot graph6 at all...\nC~\n";
        let err = ingest_graph6_stream(input.as_bytes(), true).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn lenient_mode_collects_skipped_lines() {
        let input = "C~\n##\nBw\n";
        let out = ingest_graph6_stream(input.as_bytes(), false).unwrap();
        assert_eq!(out.graphs.len(), 2);
        assert_eq!(out.skipped.len(), 1);
        assert_eq!(out.skipped[0].line, 2);
    }
}
