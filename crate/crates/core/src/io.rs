//! File formats: MatrixMarket coordinate files, the line-delimited sparse
//! column format used for stream replay, score/sample CSV exports, and the
//! binary Frequent Directions checkpoint.

use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::Error;
use crate::fd::FdSketch;
use crate::matrix::{ColumnMatrix, SparseColumn};
use crate::sample::{ColumnSample, SampleSlot, SamplingMode};
use crate::scores::RidgeScores;
use crate::Result;

const MM_HEADER: &str = "%%MatrixMarket matrix coordinate real general";

/// Reads a MatrixMarket `coordinate real general` file (1-based indices).
pub fn read_matrix_market<R: Read>(reader: R) -> Result<ColumnMatrix> {
    let mut lines = BufReader::new(reader).lines().enumerate();

    let (line_no, header) = loop {
        match lines.next() {
            Some((i, line)) => {
                let line = line?;
                if !line.trim().is_empty() {
                    break (i + 1, line);
                }
            }
            None => return Err(Error::Parse { line: 0, message: "empty file".into() }),
        }
    };
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() < 5
        || !h[0].starts_with("%%MatrixMarket")
        || h[1] != "matrix"
        || h[2] != "coordinate"
        || h[3] != "real"
        || h[4] != "general"
    {
        return Err(Error::Parse {
            line: line_no,
            message: format!("unsupported MatrixMarket header: {header}"),
        });
    }

    let mut dims: Option<(usize, usize, usize)> = None;
    let mut triples: Vec<(usize, usize, f64)> = Vec::new();
    for (i, line) in lines {
        let line = line?;
        let line_no = i + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = t.split_whitespace().collect();
        match dims {
            None => {
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "size line must be 'rows cols nnz'".into(),
                    });
                }
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|e| Error::Parse {
                        line: line_no,
                        message: format!("bad dimension '{s}': {e}"),
                    })
                };
                dims = Some((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
                triples.reserve(dims.unwrap().2);
            }
            Some((rows, cols, _)) => {
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "entry line must be 'row col value'".into(),
                    });
                }
                let r: usize = fields[0].parse().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad row index '{}': {e}", fields[0]),
                })?;
                let c: usize = fields[1].parse().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad col index '{}': {e}", fields[1]),
                })?;
                let v: f64 = fields[2].parse().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad value '{}': {e}", fields[2]),
                })?;
                if r == 0 || r > rows || c == 0 || c > cols {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("index ({r},{c}) outside {rows}x{cols} (1-based)"),
                    });
                }
                triples.push((r - 1, c - 1, v));
            }
        }
    }
    let (rows, cols, nnz) = dims.ok_or(Error::Parse { line: 0, message: "missing size line".into() })?;
    if triples.len() != nnz {
        return Err(Error::Parse {
            line: 0,
            message: format!("declared nnz {nnz} but found {} entries", triples.len()),
        });
    }
    triples.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
    let mut m = ColumnMatrix::new(rows);
    let mut col: SparseColumn = Vec::new();
    let mut current = 0usize;
    for (r, c, v) in triples {
        while current < c {
            m.push_column(std::mem::take(&mut col))?;
            current += 1;
        }
        col.push((r, v));
    }
    while current < cols {
        m.push_column(std::mem::take(&mut col))?;
        current += 1;
    }
    Ok(m)
}

/// Writes MatrixMarket coordinate format, entries sorted by (col, row),
/// values as shortest-roundtrip decimals.
pub fn write_matrix_market<W: Write>(writer: W, m: &ColumnMatrix) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{MM_HEADER}")?;
    writeln!(w, "{} {} {}", m.n_rows(), m.n_cols(), m.nnz())?;
    for j in 0..m.n_cols() {
        for &(i, v) in m.column(j) {
            writeln!(w, "{} {} {}", i + 1, j + 1, v)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_matrix_market_path(path: &Path) -> Result<ColumnMatrix> {
    read_matrix_market(std::fs::File::open(path)?)
}

pub fn write_matrix_market_path(path: &Path, m: &ColumnMatrix) -> Result<()> {
    write_matrix_market(std::fs::File::create(path)?, m)
}

/// Reads the line-delimited sparse column format `col_id nnz idx:val ...`
/// (0-based row indices). `n_rows` is fixed by the caller.
pub fn read_sparse_lines<R: Read>(reader: R, n_rows: usize) -> Result<ColumnMatrix> {
    let mut m = ColumnMatrix::new(n_rows);
    let mut expected = 0usize;
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (col_id, entries) = parse_sparse_line(t, line_no)?;
        if col_id != expected {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected column {expected}, got {col_id}"),
            });
        }
        expected += 1;
        m.push_column(entries)?;
    }
    Ok(m)
}

pub(crate) fn parse_sparse_line(t: &str, line_no: usize) -> Result<(usize, SparseColumn)> {
    let mut fields = t.split_whitespace();
    let col_id: usize = fields
        .next()
        .ok_or_else(|| Error::Parse { line: line_no, message: "missing col_id".into() })?
        .parse()
        .map_err(|e| Error::Parse { line: line_no, message: format!("bad col_id: {e}") })?;
    let nnz: usize = fields
        .next()
        .ok_or_else(|| Error::Parse { line: line_no, message: "missing nnz".into() })?
        .parse()
        .map_err(|e| Error::Parse { line: line_no, message: format!("bad nnz: {e}") })?;
    let mut entries: SparseColumn = Vec::with_capacity(nnz);
    for field in fields {
        let (idx, val) = field.split_once(':').ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected idx:val, got '{field}'"),
        })?;
        let i: usize = idx
            .parse()
            .map_err(|e| Error::Parse { line: line_no, message: format!("bad index '{idx}': {e}") })?;
        let v: f64 = val
            .parse()
            .map_err(|e| Error::Parse { line: line_no, message: format!("bad value '{val}': {e}") })?;
        entries.push((i, v));
    }
    if entries.len() != nnz {
        return Err(Error::Parse {
            line: line_no,
            message: format!("declared nnz {nnz} but found {}", entries.len()),
        });
    }
    Ok((col_id, entries))
}

pub fn write_sparse_lines<W: Write>(writer: W, m: &ColumnMatrix) -> Result<()> {
    let mut w = BufWriter::new(writer);
    for j in 0..m.n_cols() {
        let col = m.column(j);
        write!(w, "{} {}", j, col.len())?;
        for &(i, v) in col {
            write!(w, " {}:{}", i, v)?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

/// Scores CSV: `index,score,provenance`.
pub fn write_scores_csv<W: Write>(writer: W, scores: &RidgeScores) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "index,score,provenance")?;
    let tag = scores.provenance.tag();
    for (i, s) in scores.scores.iter().enumerate() {
        if s.is_infinite() {
            writeln!(w, "{i},inf,{tag}")?;
        } else {
            writeln!(w, "{i},{s},{tag}")?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Sample CSV: `slot,source_index,weight,probability` (empty source for
/// unoccupied slots).
pub fn write_sample_csv<W: Write>(writer: W, sample: &ColumnSample) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "slot,source_index,weight,probability")?;
    for (slot, s) in sample.slots.iter().enumerate() {
        match s.source_index {
            Some(idx) => writeln!(w, "{slot},{idx},{},{}", s.weight, s.probability)?,
            None => writeln!(w, "{slot},,{},{}", s.weight, s.probability)?,
        }
    }
    w.flush()?;
    Ok(())
}

/// Reads back a sample CSV written by [`write_sample_csv`]. The sampling mode
/// is not stored in the file; the caller supplies it.
pub fn read_sample_csv<R: Read>(reader: R, mode: SamplingMode, seed: u64) -> Result<ColumnSample> {
    let mut slots = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let t = line.trim();
        if t.is_empty() || (line_no == 1 && t.starts_with("slot")) {
            continue;
        }
        let fields: Vec<&str> = t.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Parse { line: line_no, message: "expected 4 fields".into() });
        }
        let source_index = if fields[1].is_empty() {
            None
        } else {
            Some(fields[1].parse().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad source_index: {e}"),
            })?)
        };
        let weight: f64 = fields[2]
            .parse()
            .map_err(|e| Error::Parse { line: line_no, message: format!("bad weight: {e}") })?;
        let probability: f64 = fields[3]
            .parse()
            .map_err(|e| Error::Parse { line: line_no, message: format!("bad probability: {e}") })?;
        slots.push(SampleSlot { source_index, weight, probability });
    }
    Ok(ColumnSample { slots, mode, seed })
}

/// Binary FD checkpoint: little-endian header
/// (n, k, ell, fill as u64; frob_a as f64) followed by the row-major buffer.
pub fn write_fd_checkpoint<W: Write>(writer: W, sketch: &FdSketch) -> Result<()> {
    let mut w = BufWriter::new(writer);
    for v in [sketch.n() as u64, sketch.k() as u64, sketch.ell() as u64, sketch.fill() as u64] {
        w.write_all(&v.to_le_bytes())?;
    }
    w.write_all(&sketch.frob_a().to_le_bytes())?;
    let buf = sketch.buffer();
    for i in 0..buf.nrows() {
        for j in 0..buf.ncols() {
            w.write_all(&buf[(i, j)].to_le_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_fd_checkpoint<R: Read>(reader: R) -> Result<FdSketch> {
    let mut r = BufReader::new(reader);
    let mut u64buf = [0u8; 8];
    let mut read_u64 = |r: &mut BufReader<R>| -> Result<u64> {
        r.read_exact(&mut u64buf)?;
        Ok(u64::from_le_bytes(u64buf))
    };
    let n = read_u64(&mut r)? as usize;
    let k = read_u64(&mut r)? as usize;
    let ell = read_u64(&mut r)? as usize;
    let fill = read_u64(&mut r)? as usize;
    let mut f64buf = [0u8; 8];
    r.read_exact(&mut f64buf)?;
    let frob_a = f64::from_le_bytes(f64buf);
    let width = (ell + 1) * k;
    let mut buffer = nalgebra::DMatrix::zeros(n, width);
    for i in 0..n {
        for j in 0..width {
            r.read_exact(&mut f64buf)?;
            buffer[(i, j)] = f64::from_le_bytes(f64buf);
        }
    }
    FdSketch::from_parts(n, k, ell, fill, frob_a, buffer)
}
