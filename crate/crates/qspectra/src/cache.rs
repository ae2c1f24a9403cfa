//! Line-oriented cache of enumeration output: one record per graph with its
//! exact Q- and L-polynomials and the counting digest, tab-separated.

use crate::graph::Graph;
use crate::graph6::{decode_graph6, encode_graph6};
use crate::lab::SpectralDigest;
use crate::spectra::{charpoly, CharPoly, MatrixKind};
use crate::{Error, Result};
use std::io::{BufRead, Write};

/// One cached graph with its polynomials and profile digest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheRecord {
    pub graph6: String,
    pub qpoly: String,
    pub lpoly: String,
    pub n: usize,
    pub m: usize,
    pub t2: u64,
    pub t3: u64,
    pub bipartite_components: usize,
}

impl CacheRecord {
    pub fn for_graph(g: &Graph) -> Result<CacheRecord> {
        let digest = SpectralDigest::of(g);
        Ok(CacheRecord {
            graph6: encode_graph6(g)?,
            qpoly: charpoly(g, MatrixKind::Q).to_coeff_text(),
            lpoly: charpoly(g, MatrixKind::L).to_coeff_text(),
            n: digest.n,
            m: digest.m,
            t2: digest.t2,
            t3: digest.t3_q,
            bipartite_components: digest.bipartite_components,
        })
    }

    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.graph6,
            self.qpoly,
            self.lpoly,
            self.n,
            self.m,
            self.t2,
            self.t3,
            self.bipartite_components
        )
    }

    pub fn parse_line(line: &str, lineno: usize) -> Result<CacheRecord> {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 8 {
            return Err(Error::Cache {
                line: lineno,
                reason: format!("expected 8 tab-separated fields, got {}", fields.len()),
            });
        }
        let num = |i: usize| -> Result<usize> {
            fields[i].parse().map_err(|_| Error::Cache {
                line: lineno,
                reason: format!("field {} is not a number", i + 1),
            })
        };
        Ok(CacheRecord {
            graph6: fields[0].to_string(),
            qpoly: fields[1].to_string(),
            lpoly: fields[2].to_string(),
            n: num(3)?,
            m: num(4)?,
            t2: num(5)? as u64,
            t3: num(6)? as u64,
            bipartite_components: num(7)?,
        })
    }

    /// Re-derive every field from the graph6 text and compare.
    pub fn validate(&self, lineno: usize) -> Result<()> {
        let g = decode_graph6(&self.graph6)?;
        let fresh = CacheRecord::for_graph(&g)?;
        if *self != fresh {
            return Err(Error::Cache {
                line: lineno,
                reason: format!("record does not match its graph: {}", self.graph6),
            });
        }
        // the polynomial text forms must also parse
        CharPoly::from_coeff_text(MatrixKind::Q, &self.qpoly).map_err(|e| Error::Cache {
            line: lineno,
            reason: e,
        })?;
        Ok(())
    }
}

pub fn write_records<'a>(
    mut sink: impl Write,
    records: impl IntoIterator<Item = &'a CacheRecord>,
) -> std::io::Result<()> {
    for r in records {
        writeln!(sink, "{}", r.to_line())?;
    }
    Ok(())
}

pub fn read_records(source: impl BufRead) -> Result<Vec<CacheRecord>> {
    let mut out = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line.map_err(|e| Error::Cache {
            line: i + 1,
            reason: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(CacheRecord::parse_line(&line, i + 1)?);
    }
    Ok(out)
}

/// Re-check every `stride`-th record (all of them for `stride = 1`).
pub fn validate_sample(records: &[CacheRecord], stride: usize) -> Result<()> {
    let stride = stride.max(1);
    for (i, r) in records.iter().enumerate().step_by(stride) {
        r.validate(i + 1)?;
    }
    Ok(())
}
