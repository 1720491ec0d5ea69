//! The `planar_code` binary format.
//!
//! A stream is the 15-byte header `>>planar_code<<` followed by one record
//! per graph: a vertex-count byte `n`, then for each vertex `1..=n` its
//! neighbors in rotation order as 1-based bytes, terminated by `0`. The
//! single-byte flavour caps `n` at 255, which is far beyond what the
//! exhaustive analyses here can visit anyway.
//!
//! Errors split into two kinds. *Structural* problems (bad header, stream
//! ends mid-record) leave no way to find the next record boundary, so
//! reading stops. A record whose framing is intact but whose content is not
//! a valid triangulation (asymmetric lists, wrong face sizes, ...) is
//! *semantic*: it is reported as [`Error::InvalidStreamGraph`] and the
//! reader can keep going with the next record.
//!
//! There is also a whitespace text format for eyeballing and hand-editing:
//! one graph per blank-line-separated block, line `i` holding the rotation
//! of vertex `i` as 0-based space-separated labels.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::triangulation::Triangulation;

pub const HEADER: &[u8; 15] = b">>planar_code<<";

/// Encodes one graph record (no header).
pub fn encode_payload(g: &Triangulation) -> Vec<u8> {
    let n = g.n();
    debug_assert!(n <= 255);
    let mut out = Vec::with_capacity(1 + n + 2 * g.edge_count());
    out.push(n as u8);
    for v in 0..n {
        for &u in g.rotation(v) {
            out.push((u + 1) as u8);
        }
        out.push(0);
    }
    out
}

/// Decodes one graph record that must span the whole input.
pub fn decode_payload(bytes: &[u8]) -> Result<Triangulation> {
    let (rotation, used) = split_record(bytes, 0)?;
    if used != bytes.len() {
        return Err(Error::InvalidPlaneGraph(format!(
            "{} trailing bytes after graph record",
            bytes.len() - used
        )));
    }
    rotation_to_triangulation(rotation, 0)
}

/// Reads the raw rotation lists of one record starting at `bytes[0]`.
/// Returns the lists (0-based labels, unvalidated) and the bytes consumed.
fn split_record(bytes: &[u8], index: usize) -> Result<(Vec<Vec<usize>>, usize)> {
    let mut pos = 0usize;
    let n = *bytes.first().ok_or(Error::TruncatedStream { index })? as usize;
    pos += 1;
    if n == 0 {
        return Err(Error::BadVertexCount { index, n });
    }
    let mut rotation = Vec::with_capacity(n);
    for _ in 0..n {
        let mut nbrs = Vec::new();
        loop {
            let b = *bytes.get(pos).ok_or(Error::TruncatedStream { index })? as usize;
            pos += 1;
            if b == 0 {
                break;
            }
            nbrs.push(b - 1);
        }
        rotation.push(nbrs);
    }
    Ok((rotation, pos))
}

fn rotation_to_triangulation(rotation: Vec<Vec<usize>>, index: usize) -> Result<Triangulation> {
    Triangulation::from_rotation(rotation).map_err(|e| Error::InvalidStreamGraph {
        index,
        source: Box::new(e),
    })
}

/// Whether reading can continue past this error to the next record.
pub fn is_skippable(e: &Error) -> bool {
    matches!(e, Error::InvalidStreamGraph { .. })
}

/// Pull-based reader over a `planar_code` stream. Yields one `Result` per
/// record; after a structural error it yields nothing further.
pub struct PlanarCodeReader<R: Read> {
    inner: R,
    index: usize,
    header_done: bool,
    poisoned: bool,
}

impl<R: Read> PlanarCodeReader<R> {
    pub fn new(inner: R) -> Self {
        Self {
            inner,
            index: 0,
            header_done: false,
            poisoned: false,
        }
    }

    fn read_header(&mut self) -> Result<()> {
        let mut buf = [0u8; 15];
        self.inner.read_exact(&mut buf).map_err(|_| Error::BadHeader)?;
        if &buf != HEADER {
            return Err(Error::BadHeader);
        }
        Ok(())
    }

    fn read_record(&mut self) -> Result<Option<Triangulation>> {
        let index = self.index;
        let mut nbuf = [0u8; 1];
        match self.inner.read(&mut nbuf) {
            Ok(0) => return Ok(None),
            Ok(_) => {}
            Err(e) => return Err(e.into()),
        }
        let n = nbuf[0] as usize;
        if n == 0 {
            return Err(Error::BadVertexCount { index, n });
        }
        let mut rotation = Vec::with_capacity(n);
        for _ in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let mut b = [0u8; 1];
                self.inner
                    .read_exact(&mut b)
                    .map_err(|_| Error::TruncatedStream { index })?;
                if b[0] == 0 {
                    break;
                }
                nbrs.push((b[0] - 1) as usize);
            }
            rotation.push(nbrs);
        }
        rotation_to_triangulation(rotation, index).map(Some)
    }
}

impl<R: Read> Iterator for PlanarCodeReader<R> {
    type Item = Result<Triangulation>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.poisoned {
            return None;
        }
        if !self.header_done {
            if let Err(e) = self.read_header() {
                self.poisoned = true;
                return Some(Err(e));
            }
            self.header_done = true;
        }
        match self.read_record() {
            Ok(Some(g)) => {
                self.index += 1;
                Some(Ok(g))
            }
            Ok(None) => None,
            Err(e) => {
                if is_skippable(&e) {
                    self.index += 1;
                } else {
                    self.poisoned = true;
                }
                Some(Err(e))
            }
        }
    }
}

/// Push-based writer; emits the header before the first record.
pub struct PlanarCodeWriter<W: Write> {
    inner: W,
    header_done: bool,
}

impl<W: Write> PlanarCodeWriter<W> {
    pub fn new(inner: W) -> Self {
        Self {
            inner,
            header_done: false,
        }
    }

    pub fn write_graph(&mut self, g: &Triangulation) -> Result<()> {
        if !self.header_done {
            self.inner.write_all(HEADER)?;
            self.header_done = true;
        }
        self.inner.write_all(&encode_payload(g))?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<W> {
        if !self.header_done {
            self.inner.write_all(HEADER)?;
        }
        self.inner.flush()?;
        Ok(self.inner)
    }
}

/// Serializes a whole stream to bytes.
pub fn write_stream(graphs: &[Triangulation]) -> Vec<u8> {
    let mut w = PlanarCodeWriter::new(Vec::new());
    for g in graphs {
        w.write_graph(g).expect("writing to Vec cannot fail");
    }
    w.finish().expect("writing to Vec cannot fail")
}

/// Parses a whole stream, failing on the first error of any kind.
pub fn read_stream(bytes: &[u8]) -> Result<Vec<Triangulation>> {
    PlanarCodeReader::new(bytes).collect()
}

/// Renders one graph in the text format (no trailing blank line).
pub fn to_text(g: &Triangulation) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let line: Vec<String> = g.rotation(v).iter().map(|u| u.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Renders a list of graphs as blank-line-separated text blocks.
pub fn write_text(graphs: &[Triangulation]) -> String {
    graphs.iter().map(to_text).collect::<Vec<_>>().join("\n")
}

/// Parses blank-line-separated text blocks.
pub fn read_text(text: &str) -> Result<Vec<Triangulation>> {
    let mut graphs = Vec::new();
    for block in text.split("\n\n") {
        let lines: Vec<&str> = block.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.is_empty() {
            continue;
        }
        let mut rotation = Vec::with_capacity(lines.len());
        for line in lines {
            let mut nbrs = Vec::new();
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::BadTextGraph(format!("bad vertex label {tok:?}")))?;
                nbrs.push(v);
            }
            rotation.push(nbrs);
        }
        graphs.push(
            Triangulation::from_rotation(rotation)
                .map_err(|e| Error::BadTextGraph(e.to_string()))?,
        );
    }
    Ok(graphs)
}
