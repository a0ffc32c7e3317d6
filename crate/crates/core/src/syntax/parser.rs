//! Recursive-descent parser.
//!
//! Precedence from loosest to tightest: `<->`, `->` (right associative), `|`,
//! `&`, the prefix operators `~ box dia A E`, then atoms.

use super::{Formula, Lang, Node};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bot,
    Top,
    Not,
    BoxOp,
    Dia,
    Forall,
    Exists,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
}

fn describe(tok: Option<&Tok>) -> String {
    match tok {
        None => "end of input".into(),
        Some(Tok::Ident(s)) => format!("`{s}`"),
        Some(t) => format!("{t:?}"),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => {
                out.push((start, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((start, Tok::RParen));
                i += 1;
            }
            b'&' => {
                out.push((start, Tok::And));
                i += 1;
            }
            b'|' => {
                out.push((start, Tok::Or));
                i += 1;
            }
            b'~' => {
                out.push((start, Tok::Not));
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((start, Tok::Imp));
                i += 2;
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                out.push((start, Tok::Iff));
                i += 3;
            }
            b'A' | b'E' => {
                // A quantifier is a lone capital; `Ab` is not an identifier either.
                if bytes
                    .get(i + 1)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_' || *b == b'\'')
                {
                    return Err(Error::Syntax {
                        position: start,
                        message: "identifiers must start with a lowercase letter".into(),
                    });
                }
                out.push((start, if c == b'A' { Tok::Forall } else { Tok::Exists }));
                i += 1;
            }
            b'a'..=b'z' => {
                i += 1;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    "box" => Tok::BoxOp,
                    "dia" => Tok::Dia,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    lang: Lang,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error<T>(&self, message: String) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message,
        })
    }

    fn iff(&mut self) -> Result<Node> {
        let lhs = self.imp()?;
        if self.peek() == Some(&Tok::Iff) {
            self.bump();
            let rhs = self.iff()?;
            return Ok(Node::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Node> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Imp) {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Node::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Node> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            lhs = Node::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.bump();
            lhs = Node::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node> {
        let at = self.offset();
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(Node::negation(self.unary()?))
            }
            Some(Tok::Forall) => {
                self.bump();
                Ok(Node::forall(self.unary()?))
            }
            Some(Tok::Exists) => {
                self.bump();
                let sub = self.unary()?;
                Ok(match self.lang {
                    Lang::Int => Node::exists(sub),
                    Lang::Mod => Node::modal_exists(sub),
                })
            }
            Some(Tok::BoxOp) | Some(Tok::Dia) => {
                let is_box = self.peek() == Some(&Tok::BoxOp);
                if self.lang == Lang::Int {
                    return Err(Error::Language(format!(
                        "`{}` at byte {at} is not an intuitionistic connective",
                        if is_box { "box" } else { "dia" }
                    )));
                }
                self.bump();
                let sub = self.unary()?;
                Ok(if is_box { Node::boxed(sub) } else { Node::diamond(sub) })
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        match self.peek().cloned() {
            Some(Tok::Bot) => {
                self.bump();
                Ok(Node::Bot)
            }
            Some(Tok::Top) => {
                self.bump();
                Ok(Node::top())
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                Ok(Node::Var(name))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.iff()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error(format!("expected `)`, found {}", describe(self.peek())));
                }
                self.bump();
                Ok(inner)
            }
            other => self.error(format!("expected a formula, found {}", describe(other.as_ref()))),
        }
    }
}

/// Parses `text` as a formula of `lang`, expanding derived connectives.
pub fn parse_formula(text: &str, lang: Lang) -> Result<Formula> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
        lang,
    };
    let node = parser.iff()?;
    if parser.pos < parser.toks.len() {
        return parser.error(format!("unexpected {}", describe(parser.peek())));
    }
    Formula::new(lang, node)
}
