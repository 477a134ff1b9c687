//! A small regular-expression language for describing congruence classes.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! union   := concat ('|' concat)*
//! concat  := postfix*
//! postfix := atom ('*' | '+')*
//! atom    := letter | '(' union ')' | '{' letter (',' letter)* '}'
//! letter  := [a-z][0-9]*
//! ```
//!
//! `e+` is sugar for `e e*` and `{a,b}` for `(a|b)`. An empty concatenation
//! (for instance `()`) denotes the empty word.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("regex syntax error at position {pos}: {msg}")]
pub struct RegexError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Epsilon,
    Letter(Letter),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn parse(text: &str) -> Result<Regex, RegexError> {
        let tokens = lex(text)?;
        let mut p = Parser { tokens, pos: 0, end: text.len() };
        let r = p.union()?;
        if let Some((tok, at)) = p.peek() {
            return Err(RegexError { pos: at, msg: format!("unexpected `{tok}`") });
        }
        Ok(r)
    }

    pub fn plus(r: Regex) -> Regex {
        Regex::Concat(vec![r.clone(), Regex::Star(Box::new(r))])
    }

    /// Letters mentioned anywhere in the expression.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        match self {
            Regex::Epsilon => {}
            Regex::Letter(l) => {
                out.insert(*l);
            }
            Regex::Concat(v) | Regex::Union(v) => v.iter().for_each(|r| r.collect_letters(out)),
            Regex::Star(r) => r.collect_letters(out),
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regex::Epsilon => write!(f, "()"),
            Regex::Letter(l) => write!(f, "{l}"),
            Regex::Concat(v) => {
                for (i, r) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    match r {
                        Regex::Union(_) => write!(f, "({r})")?,
                        _ => write!(f, "{r}")?,
                    }
                }
                Ok(())
            }
            Regex::Union(v) => {
                for (i, r) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{r}")?;
                }
                Ok(())
            }
            Regex::Star(r) => match **r {
                Regex::Letter(_) => write!(f, "{r}*"),
                _ => write!(f, "({r})*"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Letter(Letter),
    Bar,
    Star,
    Plus,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Letter(l) => write!(f, "{l}"),
            Tok::Bar => write!(f, "|"),
            Tok::Star => write!(f, "*"),
            Tok::Plus => write!(f, "+"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBrace => write!(f, "{{"),
            Tok::RBrace => write!(f, "}}"),
            Tok::Comma => write!(f, ","),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, RegexError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'|' => Tok::Bar,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b',' => Tok::Comma,
            b'a'..=b'z' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let letter = Letter::parse(&text[start..i])
                    .map_err(|e| RegexError { pos: start, msg: e.to_string() })?;
                out.push((Tok::Letter(letter), start));
                continue;
            }
            _ => return Err(RegexError { pos: i, msg: format!("unexpected character {:?}", c as char) }),
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(Tok, usize)> {
        self.tokens.get(self.pos).cloned()
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn union(&mut self) -> Result<Regex, RegexError> {
        let mut alts = vec![self.concat()?];
        while matches!(self.peek(), Some((Tok::Bar, _))) {
            self.bump();
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 { alts.pop().unwrap() } else { Regex::Union(alts) })
    }

    fn concat(&mut self) -> Result<Regex, RegexError> {
        let mut parts = Vec::new();
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Letter(_) | Tok::LParen | Tok::LBrace => parts.push(self.postfix()?),
                _ => break,
            }
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn postfix(&mut self) -> Result<Regex, RegexError> {
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some((Tok::Star, _)) => {
                    self.bump();
                    r = Regex::Star(Box::new(r));
                }
                Some((Tok::Plus, _)) => {
                    self.bump();
                    r = Regex::plus(r);
                }
                _ => return Ok(r),
            }
        }
    }

    fn atom(&mut self) -> Result<Regex, RegexError> {
        let at = self.here();
        match self.bump() {
            Some((Tok::Letter(l), _)) => Ok(Regex::Letter(l)),
            Some((Tok::LParen, _)) => {
                let inner = self.union()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    _ => Err(RegexError { pos: self.tokens.get(self.pos - 1).map_or(self.end, |t| t.1), msg: "expected `)`".into() }),
                }
            }
            Some((Tok::LBrace, _)) => {
                let mut letters = Vec::new();
                loop {
                    let at = self.here();
                    match self.bump() {
                        Some((Tok::Letter(l), _)) => letters.push(Regex::Letter(l)),
                        _ => return Err(RegexError { pos: at, msg: "expected a letter in `{...}`".into() }),
                    }
                    let at = self.here();
                    match self.bump() {
                        Some((Tok::Comma, _)) => continue,
                        Some((Tok::RBrace, _)) => break,
                        _ => return Err(RegexError { pos: at, msg: "expected `,` or `}`".into() }),
                    }
                }
                Ok(if letters.len() == 1 { letters.pop().unwrap() } else { Regex::Union(letters) })
            }
            Some((tok, at)) => Err(RegexError { pos: at, msg: format!("unexpected `{tok}`") }),
            None => Err(RegexError { pos: at, msg: "unexpected end of input".into() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(c: char) -> Regex {
        Regex::Letter(Letter::new(c))
    }

    #[test]
    fn parses_class_and_plus() {
        let r = Regex::parse("a+ b {a,b}*").unwrap();
        let expected = Regex::Concat(vec![
            Regex::plus(l('a')),
            l('b'),
            Regex::Star(Box::new(Regex::Union(vec![l('a'), l('b')]))),
        ]);
        assert_eq!(r, expected);
    }

    #[test]
    fn parses_top_level_union() {
        let r = Regex::parse("a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*").unwrap();
        match r {
            Regex::Union(alts) => assert_eq!(alts.len(), 2),
            other => panic!("expected union, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = Regex::parse("a+(").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(Regex::parse("a)").is_err());
        assert!(Regex::parse("{a,}").is_err());
        assert!(Regex::parse("*a").is_err());
        assert!(Regex::parse("a#").is_err());
    }

    #[test]
    fn empty_forms() {
        assert_eq!(Regex::parse("()").unwrap(), Regex::Epsilon);
        assert_eq!(Regex::parse("").unwrap(), Regex::Epsilon);
    }

    #[test]
    fn subscripted_letters() {
        let r = Regex::parse("t1 t12").unwrap();
        assert_eq!(r.alphabet().len(), 2);
    }
}
