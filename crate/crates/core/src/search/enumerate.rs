use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, parse_graph6, CanonicalCode, Graph};

/// Largest order generated internally; larger orders come from graph6 files.
pub const ENUMERATE_MAX_ORDER: usize = 7;

/// One representative per isomorphism class on `n` vertices, in canonical
/// labeling, sorted by canonical code.
///
/// Classes on `n` vertices are grown from those on `n − 1` by attaching a new
/// vertex with every possible neighbourhood; every graph arises this way
/// from the class of any of its vertex-deleted subgraphs.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(crate::error::domain("enumeration needs n >= 1"));
    }
    if n > ENUMERATE_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "internal enumeration (supply a graph6 file for larger n)",
            size: n,
            max: ENUMERATE_MAX_ORDER,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for g in &level {
            for nb in 0u64..(1 << (k - 1)) {
                let mut rows: Vec<u64> = g.rows().iter().enumerate().map(|(v, &r)| r | ((nb >> v & 1) << (k - 1))).collect();
                rows.push(nb);
                let h = Graph::from_rows(rows)?;
                let (code, perm) = canonical_labeling(&h)?;
                if let std::collections::btree_map::Entry::Vacant(slot) = next.entry(code) {
                    slot.insert(h.relabel(&perm)?);
                }
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Line-by-line graph6 reader. Blank lines are skipped; each item carries
/// its 1-based line number.
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Graph6Lines {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = (usize, Result<Graph>);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {
                    self.line += 1;
                    let text = self.buf.trim();
                    if text.is_empty() {
                        continue;
                    }
                    return Some((self.line, parse_graph6(text)));
                }
                Err(e) => {
                    self.line += 1;
                    return Some((self.line, Err(e.into())));
                }
            }
        }
    }
}

/// Result of reading a graph6 file.
#[derive(Debug, Default)]
pub struct Ingested {
    pub graphs: Vec<Graph>,
    /// `(line, message)` for every skipped line.
    pub skipped: Vec<(usize, String)>,
}

/// Reads every graph of a graph6 file in file order. With `strict`, the
/// first malformed line is an error naming it; otherwise it is skipped and
/// reported.
pub fn ingest_graph6_stream(path: &Path, strict: bool) -> Result<Ingested> {
    let file = File::open(path)?;
    ingest_reader(BufReader::new(file), path.to_path_buf(), strict)
}

pub fn ingest_reader<R: BufRead>(reader: R, path: PathBuf, strict: bool) -> Result<Ingested> {
    let mut out = Ingested::default();
    for (line, item) in Graph6Lines::new(reader) {
        match item {
            Ok(g) => out.graphs.push(g),
            Err(Error::Io(e)) => return Err(Error::Io(e)),
            Err(e) if strict => {
                return Err(Error::Line {
                    path,
                    line,
                    source: Box::new(e),
                })
            }
            Err(e) => out.skipped.push((line, e.to_string())),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn too_large_for_internal_generation() {
        assert!(matches!(enumerate_graphs(8), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn reads_lines_in_order() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "Bw\nBg\n\nA?").unwrap();
        let got = ingest_graph6_stream(f.path(), true).unwrap();
        let sizes: Vec<_> = got.graphs.iter().map(|g| (g.order(), g.size())).collect();
        assert_eq!(sizes, vec![(3, 3), (3, 2), (2, 0)]);
    }

    #[test]
    fn empty_file() {
        let f = tempfile::NamedTempFile::new().unwrap();
        let got = ingest_graph6_stream(f.path(), true).unwrap();
        assert!(got.graphs.is_empty() && got.skipped.is_empty());
    }

    #[test]
    fn corrupt_line_strict_and_lenient() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "B!\nBw").unwrap();
        match ingest_graph6_stream(f.path(), true) {
            Err(Error::Line { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
        let got = ingest_graph6_stream(f.path(), false).unwrap();
        assert_eq!(got.graphs.len(), 1);
        assert_eq!(got.skipped[0].0, 1);
    }
}
