//! Text and JSON forms of trees.
//!
//! The bracket grammar is `object := INT | '[' object (',' object)* ']'`
//! with decimal integers and insignificant whitespace. The JSON form uses
//! the same nesting as arrays, wrapped in `{"view": ..., "shape": ...}`.

use std::str::FromStr;

use serde_json::Value;

use super::nested::{NestedPartition, MAX_DEPTH};
use super::view::{TreeView, View};
use crate::error::{Error, Result};

/// Parses the bracket grammar. The result is validated and canonicalized.
pub fn parse_tree(input: &str) -> Result<NestedPartition> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    p.skip_ws();
    let tree = p.object(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    tree.canonicalize()
}

impl FromStr for NestedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn object(&mut self, level: usize) -> Result<NestedPartition> {
        if level >= MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    self.skip_ws();
                    children.push(self.object(level + 1)?);
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(NestedPartition::Inner(children));
                        }
                        _ => return Err(self.err("expected ',' or ']'")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                digits
                    .parse::<u64>()
                    .map(NestedPartition::Leaf)
                    .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
            }
            Some(_) => Err(self.err("expected '[' or an integer")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Converts a JSON array nest (`[[2],[1,1]]`) into a canonical shape.
pub fn shape_from_json(value: &Value) -> Result<NestedPartition> {
    fn conv(v: &Value, level: usize) -> Result<NestedPartition> {
        if level >= MAX_DEPTH {
            return Err(Error::Validation("nesting too deep".into()));
        }
        match v {
            Value::Number(n) => n
                .as_u64()
                .map(NestedPartition::Leaf)
                .ok_or_else(|| Error::Validation(format!("leaf {n} is not a non-negative integer"))),
            Value::Array(items) => {
                Ok(NestedPartition::Inner(items.iter().map(|x| conv(x, level + 1)).collect::<Result<_>>()?))
            }
            other => Err(Error::Validation(format!("unexpected JSON value {other}"))),
        }
    }
    conv(value, 0)?.canonicalize()
}

pub fn shape_to_json(shape: &NestedPartition) -> Value {
    match shape {
        NestedPartition::Leaf(w) => Value::from(*w),
        NestedPartition::Inner(c) => Value::Array(c.iter().map(shape_to_json).collect()),
    }
}

/// Parses `{"view":"leafcount"|"mult","shape":...}`.
pub fn tree_from_json(input: &str) -> Result<TreeView> {
    let v: Value = serde_json::from_str(input).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    let obj = v.as_object().ok_or_else(|| Error::Validation("expected a JSON object".into()))?;
    let view = match obj.get("view").and_then(Value::as_str) {
        Some("leafcount") => View::LeafCount,
        Some("mult") => View::Multiplicity,
        Some(other) => return Err(Error::Validation(format!("unknown view {other:?}"))),
        None => return Err(Error::Validation("missing \"view\"".into())),
    };
    let shape = obj.get("shape").ok_or_else(|| Error::Validation("missing \"shape\"".into()))?;
    TreeView::new(shape_from_json(shape)?, view)
}

pub fn tree_to_json(tree: &TreeView) -> String {
    let view = match tree.view() {
        View::LeafCount => "leafcount",
        View::Multiplicity => "mult",
    };
    // Key order is fixed by hand so output is byte-stable.
    format!("{{\"view\":\"{}\",\"shape\":{}}}", view, shape_to_json(tree.shape()))
}
