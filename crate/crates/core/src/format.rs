//! Text formats for algebras and results.
//!
//! Algebras are read either as JSON (`{"size": 3, "binary": [...], "unary": [...]}`)
//! or as a GAP-style nested list such as
//! `[ [ 3, 1, 2 ], [ [ 1, 2, 3 ], [ 2, 3, 1 ], [ 3, 1, 2 ] ] ]`, where a flat
//! integer list is a unary operation and a list of lists is a binary one.
//! All entries are one-based.

use serde_json::Value;

use crate::algebra::{Algebra, AlgebraTables};
use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Gap,
}

/// Parses an algebra, detecting the format from the first token.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        Some('[') => parse_gap(text),
        _ => Err(Error::Parse("expected a JSON object or a GAP list".into())),
    }
}

pub fn parse_json(text: &str) -> Result<Algebra> {
    let t: AlgebraTables = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Algebra::from_tables(&t)
}

fn as_entry(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("expected a positive integer, found {v}")))
}

pub fn parse_gap(text: &str) -> Result<Algebra> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let ops = v
        .as_array()
        .ok_or_else(|| Error::Parse("top level must be a list".into()))?;
    let mut binary = Vec::new();
    let mut unary = Vec::new();
    for op in ops {
        let items = op
            .as_array()
            .ok_or_else(|| Error::Parse(format!("operation must be a list, found {op}")))?;
        if items.first().is_some_and(Value::is_array) {
            let rows = items
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| Error::Parse("mixed rows in binary table".into()))?
                        .iter()
                        .map(as_entry)
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            binary.push(rows);
        } else {
            unary.push(items.iter().map(as_entry).collect::<Result<Vec<_>>>()?);
        }
    }
    let size = binary
        .first()
        .map(Vec::len)
        .or_else(|| unary.first().map(Vec::len))
        .ok_or_else(|| Error::Parse("cannot infer the size of an algebra without operations".into()))?;
    Algebra::from_tables(&AlgebraTables::new(size, binary, unary))
}

/// Formats a list of integers: `[1,2,3]` for JSON, `[ 1, 2, 3 ]` for GAP.
pub fn list<T: std::fmt::Display>(items: &[T], format: Format) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    match format {
        Format::Json => format!("[{}]", parts.join(",")),
        Format::Gap if parts.is_empty() => "[ ]".into(),
        Format::Gap => format!("[ {} ]", parts.join(", ")),
    }
}

fn nested<T: std::fmt::Display>(rows: &[Vec<T>], format: Format) -> String {
    let parts: Vec<String> = rows.iter().map(|r| list(r, format)).collect();
    list(&parts, format)
}

/// Serializes an algebra. GAP output lists binary operations first.
pub fn emit_algebra(a: &Algebra, format: Format) -> Result<String> {
    let t = a.to_tables();
    match format {
        Format::Json => serde_json::to_string(&t).map_err(|e| Error::Parse(e.to_string())),
        Format::Gap => {
            if a.operation_count() == 0 {
                return Err(Error::NoOperations);
            }
            let mut ops: Vec<String> = t.binary.iter().map(|b| nested(b, format)).collect();
            ops.extend(t.unary.iter().map(|u| list(u, format)));
            Ok(list(&ops, format))
        }
    }
}

/// Array encoding followed by the block list, e.g.
/// `[-2,-1,-2,-1,3,1] [[1,6],[2],[3,5],[4]]`.
pub fn partition_line(p: &Partition, format: Format) -> String {
    format!(
        "{} {}",
        list(&p.encoding(), format),
        nested(&p.blocks_one_based(), format)
    )
}

pub fn mapping_line(m: &Mapping, format: Format) -> String {
    list(&m.to_one_based(), format)
}

pub fn elements_line(elems: &[usize], format: Format) -> String {
    let one: Vec<usize> = elems.iter().map(|x| x + 1).collect();
    list(&one, format)
}
