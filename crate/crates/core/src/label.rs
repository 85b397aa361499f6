//! Structured element labels and their canonical string form.

use std::fmt;

/// Label of a ground-set element produced by a generator.
///
/// Serialized forms are `x`, `(x,y)` and `{a,b,...}`; the mapping is
/// injective as long as atoms avoid the characters `(),{}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructuredLabel {
    Atom(String),
    Pair(String, String),
    /// A block of a set partition, stored ascending.
    Part(Vec<u64>),
}

impl StructuredLabel {
    pub fn atom(x: impl fmt::Display) -> Self {
        StructuredLabel::Atom(x.to_string())
    }

    pub fn pair(x: impl fmt::Display, y: impl fmt::Display) -> Self {
        StructuredLabel::Pair(x.to_string(), y.to_string())
    }

    pub fn part(mut elems: Vec<u64>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        StructuredLabel::Part(elems)
    }
}

impl fmt::Display for StructuredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuredLabel::Atom(x) => f.write_str(x),
            StructuredLabel::Pair(x, y) => write!(f, "({x},{y})"),
            StructuredLabel::Part(elems) => {
                f.write_str("{")?;
                for (i, e) in elems.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("}")
            }
        }
    }
}
