//! Plain-text persistence for [`CountTable`].
//!
//! ```text
//! rectcount-table v1
//! 1 0 0 1
//! 2 0 0 1
//! ...
//! ```
//!
//! One `m r s t` record per entry, `t` in decimal. Every layer present in the
//! file must be complete, and layers must be contiguous from `m = 1`.

use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::recursion::CountTable;

pub const CACHE_HEADER: &str = "rectcount-table v1";

pub fn write_table<W: Write>(table: &CountTable, mut out: W) -> Result<()> {
    writeln!(out, "{CACHE_HEADER}")?;
    for (m, r, s, t) in table.entries() {
        writeln!(out, "{m} {r} {s} {t}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_table<R: Read>(input: R) -> Result<CountTable> {
    let reader = BufReader::new(input);
    let mut lines = reader.lines();
    let header = match lines.next() {
        Some(line) => line?,
        None => return Err(Error::CacheVersion(String::new())),
    };
    if header.trim_end() != CACHE_HEADER {
        return Err(Error::CacheVersion(header));
    }

    let mut layers: Vec<Vec<Option<BigUint>>> = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: &str| Error::CacheParse {
            line: lineno,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(parse_err("expected `m r s t`"));
        }
        let idx = |f: &str| f.parse::<usize>().map_err(|_| parse_err("bad index"));
        let (m, r, s) = (idx(fields[0])?, idx(fields[1])?, idx(fields[2])?);
        let t: BigUint = fields[3].parse().map_err(|_| parse_err("bad count"))?;
        if m == 0 || r >= m || s >= m {
            return Err(parse_err("index outside the table domain"));
        }
        if layers.len() < m {
            layers.resize_with(m, Vec::new);
        }
        let layer = &mut layers[m - 1];
        if layer.is_empty() {
            layer.resize(m * m, None);
        }
        if layer[r * m + s].replace(t).is_some() {
            return Err(parse_err("duplicate entry"));
        }
    }

    let layers = layers
        .into_iter()
        .enumerate()
        .map(|(i, layer)| {
            let m = i + 1;
            if layer.is_empty() {
                return Err(Error::CacheParse {
                    line: 0,
                    msg: format!("layer m={m} is missing"),
                });
            }
            layer
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::CacheParse {
                    line: 0,
                    msg: format!("layer m={m} is incomplete"),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    CountTable::from_layers(layers)
}

pub fn load(path: &Path) -> Result<CountTable> {
    read_table(fs::File::open(path)?)
}

pub fn save(table: &CountTable, path: &Path) -> Result<()> {
    let file = fs::File::create(path)?;
    write_table(table, std::io::BufWriter::new(file))
}

/// Loads `path` when it exists, extends the table through `max_m`, and
/// writes it back if new layers were added.
pub fn load_or_fill(
    path: Option<&Path>,
    max_m: usize,
    threads: Option<usize>,
) -> Result<CountTable> {
    let mut table = match path {
        Some(p) if p.exists() => load(p)?,
        _ => CountTable::empty(),
    };
    let before = table.max_m();
    table.extend_to(max_m, threads)?;
    if let Some(p) = path {
        if table.max_m() > before || !p.exists() {
            save(&table, p)?;
        }
    }
    Ok(table)
}
