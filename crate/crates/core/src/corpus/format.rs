//! Block format: a header line `dim nverts`, then `nverts` rows of `dim`
//! rationals. `#` starts a comment; `# id: NAME` and `# tag: KEY=VALUE`
//! lines before a header attach to the next block.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::kernel::{rational, Point, VPolytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeRecord {
    pub id: String,
    pub dim: usize,
    /// Rows as written; not necessarily the vertex set.
    pub points: Vec<Point>,
    pub tags: Vec<(String, String)>,
}

impl PolytopeRecord {
    pub fn new(id: impl Into<String>, points: Vec<Point>) -> Self {
        PolytopeRecord {
            id: id.into(),
            dim: points.first().map_or(0, Point::dim),
            points,
            tags: Vec::new(),
        }
    }

    pub fn from_polytope(id: impl Into<String>, p: &VPolytope) -> Self {
        Self::new(id, p.vertices().to_vec())
    }

    pub fn polytope(&self) -> Result<VPolytope> {
        VPolytope::from_points(self.points.clone())
    }

    pub fn tag(&self, key: &str) -> Option<&str> {
        self.tags
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

fn parse_error(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_row(line: usize, text: &str, expected: usize) -> Result<Vec<rational::Rational>> {
    let row = text
        .split_whitespace()
        .map(|tok| {
            rational::parse(tok).ok_or_else(|| parse_error(line, format!("bad number `{tok}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if row.len() != expected {
        return Err(parse_error(
            line,
            format!("expected {expected} entries, found {}", row.len()),
        ));
    }
    Ok(row)
}

/// Parses every block of `input`. With `transpose`, each block instead holds
/// `dim` rows of `nverts` entries (columns are vertices).
///
/// Every block must describe a full-dimensional polytope; the error points at
/// its header line otherwise. Blocks without an `# id:` are named `p1`, `p2`, ...
/// by position.
pub fn parse_polytopes(input: &str, transpose: bool) -> Result<Vec<PolytopeRecord>> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .peekable();
    let mut records = Vec::new();
    let mut id: Option<String> = None;
    let mut tags = Vec::new();

    while let Some((line, text)) = lines.next() {
        if text.is_empty() {
            continue;
        }
        if let Some(comment) = text.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(v) = comment.strip_prefix("id:") {
                id = Some(v.trim().to_owned());
            } else if let Some(v) = comment.strip_prefix("tag:") {
                let (k, v) = v
                    .split_once('=')
                    .ok_or_else(|| parse_error(line, "tag must be KEY=VALUE"))?;
                tags.push((k.trim().to_owned(), v.trim().to_owned()));
            }
            continue;
        }

        let text = text.split('#').next().unwrap_or("").trim();
        let header: Vec<usize> = text
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_error(line, format!("bad header entry `{t}`")))
            })
            .collect::<Result<_>>()?;
        let [dim, count] = header[..] else {
            return Err(parse_error(line, "header must be `dim nverts`"));
        };
        if dim == 0 || count == 0 {
            return Err(parse_error(
                line,
                "dimension and vertex count must be positive",
            ));
        }
        let (rows, width) = if transpose {
            (dim, count)
        } else {
            (count, dim)
        };

        let mut matrix = Vec::with_capacity(rows);
        while matrix.len() < rows {
            let Some((row_line, row_text)) = lines.next() else {
                return Err(parse_error(
                    line,
                    format!("block ends after {} of {rows} rows", matrix.len()),
                ));
            };
            let row_text = row_text.split('#').next().unwrap_or("").trim();
            if row_text.is_empty() {
                return Err(parse_error(
                    row_line,
                    format!("expected {rows} rows, found {}", matrix.len()),
                ));
            }
            matrix.push(parse_row(row_line, row_text, width)?);
        }
        let points: Vec<Point> = if transpose {
            (0..count)
                .map(|j| Point::new(matrix.iter().map(|r| r[j].clone()).collect()))
                .collect()
        } else {
            matrix.into_iter().map(Point::new).collect()
        };
        VPolytope::from_points(points.clone()).map_err(|e| parse_error(line, e.to_string()))?;

        records.push(PolytopeRecord {
            id: id
                .take()
                .unwrap_or_else(|| format!("p{}", records.len() + 1)),
            dim,
            points,
            tags: std::mem::take(&mut tags),
        });
    }
    Ok(records)
}

/// Writes records so that [`parse_polytopes`] reads them back unchanged.
pub fn emit_polytopes(records: &[PolytopeRecord]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        writeln!(out, "# id: {}", r.id).unwrap();
        for (k, v) in &r.tags {
            writeln!(out, "# tag: {k}={v}").unwrap();
        }
        writeln!(out, "{} {}", r.dim, r.points.len()).unwrap();
        for p in &r.points {
            let row: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}
