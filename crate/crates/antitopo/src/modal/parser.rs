//! Recursive-descent parser for modal formulas.
//!
//! ```text
//! formula := disj ('->' formula)?        right-associative
//! disj    := conj ('|' conj)*            left-associative
//! conj    := unary ('&' unary)*          left-associative
//! unary   := '!' unary | '[]' unary | '<>' unary | '(' formula ')' | var
//! var     := [a-z][a-z0-9_]*
//! ```
//!
//! Whitespace is ignored everywhere. `<>f` is accepted as an abbreviation
//! for `![]!f` and never appears in the parsed tree.

use thiserror::Error;

use crate::modal::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

pub fn parse_formula(input: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let formula = parser.formula()?;
    parser.skip_whitespace();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(formula)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Consumes `token` if it comes next (after whitespace).
    fn eat(&mut self, token: &str) -> bool {
        self.skip_whitespace();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat("->") {
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat("|") {
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat("&") {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        self.skip_whitespace();
        match self.peek() {
            Some(b'!') => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(b'[') => {
                self.pos += 1;
                if self.peek() != Some(b']') {
                    return Err(self.error("expected ']' after '['"));
                }
                self.pos += 1;
                Ok(Formula::boxed(self.unary()?))
            }
            Some(b'<') => {
                self.pos += 1;
                if self.peek() != Some(b'>') {
                    return Err(self.error("expected '>' after '<'"));
                }
                self.pos += 1;
                Ok(Formula::diamond(self.unary()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.formula()?;
                self.skip_whitespace();
                self.expect(")")?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_lowercase() => self.variable(),
            Some(c) => Err(self.error(format!("expected a formula, found {:?}", char::from(c)))),
            None => Err(self.error("expected a formula, found end of input")),
        }
    }

    fn variable(&mut self) -> Result<Formula, ParseError> {
        let start = self.pos;
        self.pos += 1;
        while matches!(self.peek(), Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'_')
        {
            self.pos += 1;
        }
        let name =
            std::str::from_utf8(&self.src[start..self.pos]).expect("variable bytes are ASCII");
        Ok(Formula::var(name))
    }
}
