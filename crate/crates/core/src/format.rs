//! Line-oriented instance file format.
//!
//! ```text
//! # comment
//! aisles 2
//! aisle_length 10
//! top_cross 3          # n - 1 values, omitted when n = 1
//! bottom_cross 3
//! depot 1 bottom       # `top` is accepted and mirrored to a bottom depot
//! item 2 7             # aisle offset, one line per item
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{Distance, Instance, Item, ValidationErrors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationErrors),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, field: &str, token: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("{field}: expected a non-negative integer, found `{token}`"),
        )
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum DepotSide {
    Bottom,
    Top,
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut aisles: Option<usize> = None;
    let mut length: Option<Distance> = None;
    let mut top: Option<Vec<Distance>> = None;
    let mut bottom: Option<Vec<Distance>> = None;
    let mut depot: Option<(usize, DepotSide)> = None;
    let mut items = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let rest: Vec<&str> = tokens.collect();
        let arity = |n: usize| {
            if rest.len() == n {
                Ok(())
            } else {
                Err(syntax(
                    line,
                    format!("{keyword}: expected {n} field(s), found {}", rest.len()),
                ))
            }
        };
        let once = |seen: bool| {
            if seen {
                Err(syntax(line, format!("duplicate `{keyword}` line")))
            } else {
                Ok(())
            }
        };
        match keyword {
            "aisles" => {
                once(aisles.is_some())?;
                arity(1)?;
                aisles = Some(number(line, "aisles", rest[0])?);
            }
            "aisle_length" => {
                once(length.is_some())?;
                arity(1)?;
                length = Some(number(line, "aisle_length", rest[0])?);
            }
            "top_cross" | "bottom_cross" => {
                let slot = if keyword == "top_cross" { &mut top } else { &mut bottom };
                once(slot.is_some())?;
                let values = rest
                    .iter()
                    .map(|t| number(line, keyword, t))
                    .collect::<Result<Vec<Distance>, _>>()?;
                *slot = Some(values);
            }
            "depot" => {
                once(depot.is_some())?;
                arity(2)?;
                let aisle = number(line, "depot", rest[0])?;
                let side = match rest[1] {
                    "bottom" => DepotSide::Bottom,
                    "top" => DepotSide::Top,
                    other => {
                        return Err(syntax(
                            line,
                            format!("depot: side must be `bottom` or `top`, found `{other}`"),
                        ))
                    }
                };
                depot = Some((aisle, side));
            }
            "item" => {
                arity(2)?;
                items.push(Item::new(
                    number(line, "item aisle", rest[0])?,
                    number(line, "item offset", rest[1])?,
                ));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }

    let missing = |what: &str| syntax(text.lines().count().max(1), format!("missing `{what}` line"));
    let num_aisles = aisles.ok_or_else(|| missing("aisles"))?;
    let aisle_length = length.ok_or_else(|| missing("aisle_length"))?;
    let (depot_aisle, side) = depot.ok_or_else(|| missing("depot"))?;

    let mut inst = Instance {
        num_aisles,
        aisle_length,
        top_cross: top.unwrap_or_default(),
        bottom_cross: bottom.unwrap_or_default(),
        depot_aisle,
        items,
    };
    inst.validate()?;
    if side == DepotSide::Top {
        inst = inst.mirrored();
    }
    inst.canonicalize();
    Ok(inst)
}

/// Canonical text: fixed field order and items sorted by `(aisle, offset)`.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let join = |v: &[Distance]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "aisles {}", inst.num_aisles);
    let _ = writeln!(out, "aisle_length {}", inst.aisle_length);
    if inst.num_aisles > 1 {
        let _ = writeln!(out, "top_cross {}", join(&inst.top_cross));
        let _ = writeln!(out, "bottom_cross {}", join(&inst.bottom_cross));
    }
    let _ = writeln!(out, "depot {} bottom", inst.depot_aisle);
    let mut items = inst.items.clone();
    items.sort_unstable();
    for item in items {
        let _ = writeln!(out, "item {} {}", item.aisle, item.offset);
    }
    out
}
