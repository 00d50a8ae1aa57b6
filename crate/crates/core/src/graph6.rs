//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use std::io::{self, BufRead};

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";
/// Largest order representable with the 4-byte size header.
pub const MAX_ORDER: usize = 258_047;

#[derive(Debug, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("truncated record: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the edge data (offset {offset})")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("order {0} uses the 8-byte size header, which is not supported")]
    OrderTooLarge(usize),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Parsing options.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept nonzero padding bits in the final byte.
    pub lenient_padding: bool,
}

/// Strict parse of a single record.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    parse_graph6_with(line, ParseOptions::default())
}

pub fn parse_graph6_with(line: &[u8], opts: ParseOptions) -> Result<Graph, Graph6Error> {
    let line = trim_line(line);
    let line = line.strip_prefix(HEADER.as_bytes()).unwrap_or(line);
    if line.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in line.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { byte, offset });
        }
    }
    let (n, header_len) = decode_order(line)?;
    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let expected = header_len + data_len;
    if line.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: line.len(),
        });
    }
    if line.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: expected,
            extra: line.len() - expected,
        });
    }
    let data = &line[header_len..];
    let pad = data_len * 6 - bits;
    if pad > 0 && !opts.lenient_padding {
        let last = data[data_len - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: expected - 1,
            });
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = data[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("graph6 bit stream encodes a simple graph"))
}

fn decode_order(line: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = line[0] - 63;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    if line.len() < 4 {
        return Err(Graph6Error::Truncated {
            expected: 4,
            found: line.len(),
        });
    }
    if line[1] == 126 {
        // 8-byte header: order >= 258048
        let mut n = 0usize;
        for &b in line.get(2..8).unwrap_or(&[]) {
            n = (n << 6) | (b - 63) as usize;
        }
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let n = line[1..4]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    Ok((n, 4))
}

fn trim_line(line: &[u8]) -> &[u8] {
    let mut end = line.len();
    while end > 0 && matches!(line[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    &line[..end]
}

/// Canonical graph6 encoding (no `>>graph6<<` prologue).
///
/// # Panics
/// If the graph has more than [`MAX_ORDER`] vertices.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 writer supports n <= {MAX_ORDER}");
    let mut out = Vec::with_capacity(4 + (n * n / 12) + 1);
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Streams graphs from a reader, one record per line.
///
/// Blank lines are skipped; a `>>graph6<<` prologue is accepted on any
/// line. LF and CRLF line endings are both handled.
pub struct Graph6Reader<R> {
    inner: R,
    opts: ParseOptions,
    line_no: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Self::with_options(inner, ParseOptions::default())
    }

    pub fn with_options(inner: R, opts: ParseOptions) -> Self {
        Graph6Reader {
            inner,
            opts,
            line_no: 0,
            buf: Vec::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, Graph6Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line_no += 1;
            let rec = trim_line(&self.buf);
            let rec = rec.strip_prefix(HEADER.as_bytes()).unwrap_or(rec);
            if rec.is_empty() {
                continue;
            }
            return Some(
                parse_graph6_with(rec, self.opts).map_err(|e| Graph6Error::Line {
                    line: self.line_no,
                    source: Box::new(e),
                }),
            );
        }
    }
}
