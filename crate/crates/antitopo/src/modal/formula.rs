//! Modal formula syntax trees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::modal::parser::{parse_formula, ParseError};

/// A modal formula over propositional variables. `Box` is the only
/// primitive modality; diamonds are an input abbreviation that the parser
/// expands to `!Box!`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Formula {
        Formula::Not(Box::new(inner))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn boxed(inner: Formula) -> Formula {
        Formula::Box(Box::new(inner))
    }

    /// The abbreviation `<>f`, expanded to `!Box!f`.
    pub fn diamond(inner: Formula) -> Formula {
        Formula::not(Formula::boxed(Formula::not(inner)))
    }

    /// Variable names, sorted and deduplicated.
    pub fn variables(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Var(name) => {
                out.insert(name);
            }
            Formula::Not(g) | Formula::Box(g) => g.collect_variables(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    // Binding strength: `->` 1 (right-associative), `|` 2, `&` 3, unary 4.
    // A child prints parentheses when its own level is below the level its
    // context demands, so printing and reparsing give the same tree.
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Not(g) => {
                f.write_str("!")?;
                g.fmt_at(f, 4)
            }
            Formula::Box(g) => {
                f.write_str("[]")?;
                g.fmt_at(f, 4)
            }
            Formula::And(a, b) => Self::fmt_binary(f, min, 3, a, " & ", b),
            Formula::Or(a, b) => Self::fmt_binary(f, min, 2, a, " | ", b),
            Formula::Implies(a, b) => {
                let wrap = min > 1;
                if wrap {
                    f.write_str("(")?;
                }
                a.fmt_at(f, 2)?;
                f.write_str(" -> ")?;
                b.fmt_at(f, 1)?;
                if wrap {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }

    fn fmt_binary(
        f: &mut fmt::Formatter<'_>,
        min: u8,
        level: u8,
        lhs: &Formula,
        op: &str,
        rhs: &Formula,
    ) -> fmt::Result {
        let wrap = min > level;
        if wrap {
            f.write_str("(")?;
        }
        lhs.fmt_at(f, level)?;
        f.write_str(op)?;
        rhs.fmt_at(f, level + 1)?;
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}
