//! Canonical cell names.
//!
//! Every cell of an [`OmegaCat`](crate::OmegaCat) carries a [`Tag`], a small
//! ordered token tree. Constructions build tags out of the tags of the cells
//! they consume, so a tag records where a cell came from: a coslice cell is
//! `coslice(base, certificate, src, tgt)`, a collage cell is `left(..)`,
//! `module(..)` and so on. Set-valued content is always stored sorted.

use std::fmt;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Int(i64),
    Atom(String),
    List(Vec<Tag>),
    Node(String, Vec<Tag>),
}

impl Tag {
    pub fn atom(s: impl Into<String>) -> Tag {
        Tag::Atom(s.into())
    }

    pub fn node(label: impl Into<String>, children: Vec<Tag>) -> Tag {
        Tag::Node(label.into(), children)
    }

    /// A list whose order carries no meaning; children are sorted.
    pub fn set(mut children: Vec<Tag>) -> Tag {
        children.sort();
        children.dedup();
        Tag::List(children)
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            Tag::Node(l, _) => Some(l),
            _ => None,
        }
    }

    pub fn children(&self) -> &[Tag] {
        match self {
            Tag::List(c) | Tag::Node(_, c) => c,
            _ => &[],
        }
    }

    /// Re-sorts every `List` in the tree. Idempotent.
    pub fn canonicalize(&self) -> Tag {
        match self {
            Tag::Int(_) | Tag::Atom(_) => self.clone(),
            Tag::List(c) => Tag::set(c.iter().map(Tag::canonicalize).collect()),
            Tag::Node(l, c) => Tag::Node(l.clone(), c.iter().map(Tag::canonicalize).collect()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Tag::Int(i) => Value::from(*i),
            Tag::Atom(s) => Value::from(s.as_str()),
            Tag::List(c) => Value::Array(c.iter().map(Tag::to_json).collect()),
            Tag::Node(l, c) => {
                let mut m = Map::new();
                m.insert(l.clone(), Value::Array(c.iter().map(Tag::to_json).collect()));
                Value::Object(m)
            }
        }
    }

    pub fn from_json(v: &Value, pointer: &str) -> Result<Tag> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(Tag::Int)
                .ok_or_else(|| Error::schema(pointer, "tag integers must fit in i64")),
            Value::String(s) => Ok(Tag::Atom(s.clone())),
            Value::Array(items) => items
                .iter()
                .enumerate()
                .map(|(i, item)| Tag::from_json(item, &format!("{pointer}/{i}")))
                .collect::<Result<Vec<_>>>()
                .map(Tag::List),
            Value::Object(m) if m.len() == 1 => {
                let (label, body) = m.iter().next().expect("len checked");
                let p = format!("{pointer}/{}", escape_pointer(label));
                let Value::Array(items) = body else {
                    return Err(Error::schema(p, "node body must be an array"));
                };
                let children = items
                    .iter()
                    .enumerate()
                    .map(|(i, item)| Tag::from_json(item, &format!("{p}/{i}")))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Tag::Node(label.clone(), children))
            }
            _ => Err(Error::schema(
                pointer,
                "tag must be an integer, string, array or single-key object",
            )),
        }
    }
}

pub(crate) fn escape_pointer(s: &str) -> String {
    s.replace('~', "~0").replace('/', "~1")
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, c: &[Tag]) -> fmt::Result {
            for (i, t) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{t}")?;
            }
            Ok(())
        }
        match self {
            Tag::Int(i) => write!(f, "{i}"),
            Tag::Atom(s) => f.write_str(s),
            Tag::List(c) => {
                f.write_str("{")?;
                join(f, c)?;
                f.write_str("}")
            }
            Tag::Node(l, c) => {
                write!(f, "{l}(")?;
                join(f, c)?;
                f.write_str(")")
            }
        }
    }
}
