//! Regular expressions over the encoding alphabet.
//!
//! Literals are `a $ # 1 >`; metacharacters are `( ) | * + ?`. Whitespace is
//! ignored. Compilation is Thompson's construction followed by epsilon
//! elimination and trimming.

use std::collections::BTreeSet;

use super::nfa::Nfa;
use super::symbol::Symbol;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Ast {
    Empty,
    Lit(Symbol),
    Concat(Vec<Ast>),
    Alt(Vec<Ast>),
    Star(Box<Ast>),
    Plus(Box<Ast>),
    Opt(Box<Ast>),
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(pattern: &str) -> Self {
        let chars: Vec<(usize, char)> = pattern.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, pos: 0, end: pattern.chars().count() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn here(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::RegexParse { position: self.here(), message: message.into() })
    }

    fn parse(mut self) -> Result<Ast> {
        let ast = self.alt()?;
        match self.peek() {
            None => Ok(ast),
            Some(')') => self.error("unbalanced ')'"),
            Some(c) => self.error(format!("unexpected {c:?}")),
        }
    }

    fn alt(&mut self) -> Result<Ast> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 { branches.pop().expect("one") } else { Ast::Alt(branches) })
    }

    fn concat(&mut self) -> Result<Ast> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            items.push(self.repeat()?);
        }
        Ok(match items.len() {
            0 => Ast::Empty,
            1 => items.pop().expect("one"),
            _ => Ast::Concat(items),
        })
    }

    fn repeat(&mut self) -> Result<Ast> {
        let mut atom = self.atom()?;
        while let Some(c) = self.peek() {
            atom = match c {
                '*' => Ast::Star(Box::new(atom)),
                '+' => Ast::Plus(Box::new(atom)),
                '?' => Ast::Opt(Box::new(atom)),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.alt()?;
                if self.peek() != Some(')') {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c @ ('*' | '+' | '?')) => self.error(format!("nothing to repeat before {c:?}")),
            Some(c) => match Symbol::from_char(c) {
                Some(s) => {
                    self.pos += 1;
                    Ok(Ast::Lit(s))
                }
                None => self.error(format!("unexpected {c:?}")),
            },
            None => self.error("unexpected end of pattern"),
        }
    }
}

#[derive(Default)]
struct EpsNfa {
    eps: Vec<Vec<usize>>,
    sym: Vec<Vec<(Symbol, usize)>>,
}

impl EpsNfa {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.sym.push(Vec::new());
        self.eps.len() - 1
    }

    /// Returns the (entry, exit) pair of the fragment for `ast`.
    fn build(&mut self, ast: &Ast) -> (usize, usize) {
        match ast {
            Ast::Empty => {
                let s = self.state();
                (s, s)
            }
            Ast::Lit(c) => {
                let (s, t) = (self.state(), self.state());
                self.sym[s].push((*c, t));
                (s, t)
            }
            Ast::Concat(items) => {
                let mut frags = items.iter().map(|a| self.build(a)).collect::<Vec<_>>().into_iter();
                let (start, mut end) = frags.next().expect("nonempty concat");
                for (s, t) in frags {
                    self.eps[end].push(s);
                    end = t;
                }
                (start, end)
            }
            Ast::Alt(branches) => {
                let (s, t) = (self.state(), self.state());
                for b in branches {
                    let (bs, bt) = self.build(b);
                    self.eps[s].push(bs);
                    self.eps[bt].push(t);
                }
                (s, t)
            }
            Ast::Star(inner) => {
                let (s, t) = (self.state(), self.state());
                let (is, it) = self.build(inner);
                self.eps[s].extend([is, t]);
                self.eps[it].extend([is, t]);
                (s, t)
            }
            Ast::Plus(inner) => {
                let (s, t) = (self.state(), self.state());
                let (is, it) = self.build(inner);
                self.eps[s].push(is);
                self.eps[it].extend([is, t]);
                (s, t)
            }
            Ast::Opt(inner) => {
                let (s, t) = (self.state(), self.state());
                let (is, it) = self.build(inner);
                self.eps[s].extend([is, t]);
                self.eps[it].push(t);
                (s, t)
            }
        }
    }

    fn closure(&self, q: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([q]);
        let mut stack = vec![q];
        while let Some(p) = stack.pop() {
            for &r in &self.eps[p] {
                if seen.insert(r) {
                    stack.push(r);
                }
            }
        }
        seen
    }

    fn eliminate(&self, start: usize, accept: usize) -> Nfa {
        let n = self.eps.len();
        let mut transitions = Vec::new();
        let mut finals = Vec::new();
        for p in 0..n {
            let cl = self.closure(p);
            if cl.contains(&accept) {
                finals.push(p);
            }
            for q in cl {
                for &(s, r) in &self.sym[q] {
                    transitions.push((p, s, r));
                }
            }
        }
        Nfa::new(n, start, finals, transitions).expect("valid").trim()
    }
}

/// Compiles `pattern` into a trimmed, epsilon-free NFA.
pub fn compile_regex(pattern: &str) -> Result<Nfa> {
    let ast = Parser::new(pattern).parse()?;
    let mut eps = EpsNfa::default();
    let (start, accept) = eps.build(&ast);
    Ok(eps.eliminate(start, accept))
}
