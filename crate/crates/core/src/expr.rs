//! Group expressions such as `C3 x Dic12` or `Ab(2,2) x Cat(60, A5)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::field::{affine_frobenius_group, psl_3_4, FieldError};
use crate::group::catalog::catalog_lookup;
use crate::group::{
    abelian, alternating, cyclic, dicyclic, dihedral, direct_product, heisenberg, standard_family, symmetric,
    FiniteGroup, GroupError, MAX_GROUP_ORDER,
};

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse { position: usize, token: String, message: String },
    #[error("expression describes a group of order {predicted}, above the limit {limit}")]
    SizeLimit { predicted: u128, limit: usize },
    #[error("no group named `{name}` in the catalog of order {order}")]
    UnknownCatalogName { order: u64, name: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(u64),
    Abelian(Vec<u64>),
    Dihedral(u64),
    /// Always holds the group order.
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Heisenberg(u64),
    Modular16,
    Semidihedral16,
    F20,
    F21,
    Affine {
        p: u64,
        d: u32,
        q: u64,
    },
    Catalog {
        order: u64,
        name: String,
    },
    Psl34,
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

fn factorial(m: u64) -> u128 {
    (1..=m.min(40) as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

impl GroupExpr {
    /// Order of the described group, computed without building it.
    pub fn predicted_order(&self) -> u128 {
        match self {
            GroupExpr::Cyclic(n) | GroupExpr::Dihedral(n) | GroupExpr::Dicyclic(n) => *n as u128,
            GroupExpr::Abelian(ks) => ks.iter().fold(1u128, |acc, &k| acc.saturating_mul(k as u128)),
            GroupExpr::Symmetric(m) => factorial(*m),
            GroupExpr::Alternating(m) => (factorial(*m) / 2).max(1),
            GroupExpr::Heisenberg(p) => (*p as u128).saturating_pow(3),
            GroupExpr::Modular16 | GroupExpr::Semidihedral16 => 16,
            GroupExpr::F20 => 20,
            GroupExpr::F21 => 21,
            GroupExpr::Affine { p, d, q } => (*p as u128).saturating_pow(*d).saturating_mul(*q as u128),
            GroupExpr::Catalog { order, .. } => *order as u128,
            GroupExpr::Psl34 => 20160,
            GroupExpr::Product(a, b) => a.predicted_order().saturating_mul(b.predicted_order()),
        }
    }

    /// Builds the group, refusing anything predicted above `max_size`.
    pub fn build(&self, max_size: usize) -> Result<FiniteGroup, ExprError> {
        let limit = max_size.min(MAX_GROUP_ORDER);
        let predicted = self.predicted_order();
        if predicted > limit as u128 {
            return Err(ExprError::SizeLimit { predicted, limit });
        }
        self.build_unchecked()
    }

    fn build_unchecked(&self) -> Result<FiniteGroup, ExprError> {
        Ok(match self {
            GroupExpr::Cyclic(n) => cyclic(*n)?,
            GroupExpr::Abelian(ks) => abelian(ks)?,
            GroupExpr::Dihedral(n) => dihedral(*n)?,
            GroupExpr::Dicyclic(n) => dicyclic(*n)?,
            GroupExpr::Symmetric(m) => symmetric(*m)?,
            GroupExpr::Alternating(m) => alternating(*m)?,
            GroupExpr::Heisenberg(p) => heisenberg(*p)?,
            GroupExpr::Modular16 => standard_family("modular16", &[])?,
            GroupExpr::Semidihedral16 => standard_family("semidihedral16", &[])?,
            GroupExpr::F20 => standard_family("F20", &[])?,
            GroupExpr::F21 => standard_family("F21", &[])?,
            GroupExpr::Affine { p, d, q } => affine_frobenius_group(*p, *d, *q)?,
            GroupExpr::Catalog { order, name } => match catalog_lookup(*order, name)? {
                Some(entry) => entry.group,
                None => return Err(ExprError::UnknownCatalogName { order: *order, name: name.clone() }),
            },
            GroupExpr::Psl34 => psl_3_4()?,
            GroupExpr::Product(a, b) => direct_product(&a.build_unchecked()?, &b.build_unchecked()?)?,
        })
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Abelian(ks) => {
                let ks: Vec<String> = ks.iter().map(u64::to_string).collect();
                write!(f, "Ab({})", ks.join(","))
            }
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Dicyclic(8) => write!(f, "Q8"),
            GroupExpr::Dicyclic(16) => write!(f, "Q16"),
            GroupExpr::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupExpr::Symmetric(m) => write!(f, "S{m}"),
            GroupExpr::Alternating(m) => write!(f, "A{m}"),
            GroupExpr::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupExpr::Modular16 => write!(f, "M16"),
            GroupExpr::Semidihedral16 => write!(f, "SD16"),
            GroupExpr::F20 => write!(f, "F20"),
            GroupExpr::F21 => write!(f, "F21"),
            GroupExpr::Affine { p, d, q } => write!(f, "Aff({p},{d},{q})"),
            GroupExpr::Catalog { order, name } => write!(f, "Cat({order},{name})"),
            GroupExpr::Psl34 => write!(f, "PSL34"),
            GroupExpr::Product(a, b) => {
                let side = |e: &GroupExpr| match e {
                    GroupExpr::Product(..) => format!("({e})"),
                    _ => e.to_string(),
                };
                write!(f, "{} x {}", side(a), side(b))
            }
        }
    }
}

impl FromStr for GroupExpr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_expr(s)
    }
}

/// Parses then builds in one step.
pub fn build_group(text: &str, max_size: usize) -> Result<FiniteGroup, ExprError> {
    parse_group_expr(text)?.build(max_size)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Punct(char),
    Times,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Punct(c) => write!(f, "{c}"),
            Tok::Times => f.write_str("x"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    i: usize,
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ExprError> {
    let mut p = Parser { src: text, chars: text.char_indices().collect(), i: 0 };
    let e = p.product()?;
    match p.next()? {
        (_, Tok::End) => Ok(e),
        (pos, tok) => Err(p.error(pos, &tok, "unexpected trailing input")),
    }
}

impl Parser<'_> {
    fn error(&self, position: usize, tok: &Tok, message: &str) -> ExprError {
        ExprError::Parse { position, token: tok.to_string(), message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.i < self.chars.len() && self.chars[self.i].1.is_whitespace() {
            self.i += 1;
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.src.len(), |c| c.0)
    }

    fn next(&mut self) -> Result<(usize, Tok), ExprError> {
        self.skip_ws();
        let start = self.pos();
        let Some(&(_, c)) = self.chars.get(self.i) else {
            return Ok((start, Tok::End));
        };
        if c == 'x' {
            self.i += 1;
            return Ok((start, Tok::Times));
        }
        if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, c)) = self.chars.get(self.i) {
                if !c.is_ascii_alphabetic() {
                    break;
                }
                s.push(c);
                self.i += 1;
            }
            return Ok((start, Tok::Ident(s)));
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = self.chars.get(self.i) {
                if !c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                self.i += 1;
            }
            return s
                .parse()
                .map(|n| (start, Tok::Num(n)))
                .map_err(|_| self.error(start, &Tok::Ident(s.clone()), "number too large"));
        }
        self.i += 1;
        if matches!(c, '(' | ')' | ',') {
            Ok((start, Tok::Punct(c)))
        } else {
            Err(self.error(start, &Tok::Punct(c), "unexpected character"))
        }
    }

    fn peek(&mut self) -> Result<Tok, ExprError> {
        let save = self.i;
        let t = self.next().map(|(_, t)| t);
        self.i = save;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ExprError> {
        let (pos, tok) = self.next()?;
        if tok == want {
            Ok(())
        } else {
            Err(self.error(pos, &tok, &format!("expected `{want}`")))
        }
    }

    fn number(&mut self) -> Result<u64, ExprError> {
        match self.next()? {
            (_, Tok::Num(n)) => Ok(n),
            (pos, tok) => Err(self.error(pos, &tok, "expected a number")),
        }
    }

    fn args(&mut self) -> Result<Vec<u64>, ExprError> {
        self.expect(Tok::Punct('('))?;
        let mut out = vec![self.number()?];
        loop {
            match self.next()? {
                (_, Tok::Punct(',')) => out.push(self.number()?),
                (_, Tok::Punct(')')) => return Ok(out),
                (pos, tok) => return Err(self.error(pos, &tok, "expected `,` or `)`")),
            }
        }
    }

    fn product(&mut self) -> Result<GroupExpr, ExprError> {
        let mut left = self.atom()?;
        while self.peek()? == Tok::Times {
            self.next()?;
            let right = self.atom()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<GroupExpr, ExprError> {
        let (pos, tok) = self.next()?;
        let name = match tok {
            Tok::Punct('(') => {
                let e = self.product()?;
                self.expect(Tok::Punct(')'))?;
                return Ok(e);
            }
            Tok::Ident(name) => name,
            other => return Err(self.error(pos, &other, "expected a group")),
        };
        let bad = |p: &Self, msg: &str| p.error(pos, &Tok::Ident(name.clone()), msg);
        match name.as_str() {
            "Ab" => return Ok(GroupExpr::Abelian(self.args()?)),
            "Heis" => {
                let a = self.args()?;
                return match a[..] {
                    [p] => Ok(GroupExpr::Heisenberg(p)),
                    _ => Err(bad(self, "Heis takes one argument")),
                };
            }
            "Aff" => {
                let a = self.args()?;
                return match a[..] {
                    [p, d, q] if d <= u32::MAX as u64 => Ok(GroupExpr::Affine { p, d: d as u32, q }),
                    _ => Err(bad(self, "Aff takes three arguments")),
                };
            }
            "Cat" => return self.catalog(),
            "PSL" if self.peek()? == Tok::Punct('(') => {
                return match self.args()?[..] {
                    [3, 4] => Ok(GroupExpr::Psl34),
                    _ => Err(bad(self, "only PSL(3,4) is available")),
                };
            }
            _ => {}
        }
        let n = match self.next()? {
            (_, Tok::Num(n)) => n,
            (p, t) => return Err(self.error(p, &t, &format!("expected a number after `{name}`"))),
        };
        let fixed = |want: u64, e: GroupExpr| {
            if n == want {
                Ok(e)
            } else {
                Err(bad(self, &format!("only {name}{want} is available")))
            }
        };
        match name.as_str() {
            "C" => Ok(GroupExpr::Cyclic(n)),
            "D" => Ok(GroupExpr::Dihedral(n)),
            "Dic" => Ok(GroupExpr::Dicyclic(if n % 4 == 0 { n } else { n.saturating_mul(4) })),
            "Q" if n == 8 || n == 16 => Ok(GroupExpr::Dicyclic(n)),
            "S" => Ok(GroupExpr::Symmetric(n)),
            "A" => Ok(GroupExpr::Alternating(n)),
            "M" => fixed(16, GroupExpr::Modular16),
            "SD" => fixed(16, GroupExpr::Semidihedral16),
            "F" if n == 20 => Ok(GroupExpr::F20),
            "F" if n == 21 => Ok(GroupExpr::F21),
            "PSL" => fixed(34, GroupExpr::Psl34),
            _ => Err(bad(self, "unknown group")),
        }
    }

    /// `Cat(n, name)`: the name runs to the matching close parenthesis.
    fn catalog(&mut self) -> Result<GroupExpr, ExprError> {
        self.expect(Tok::Punct('('))?;
        let order = self.number()?;
        self.expect(Tok::Punct(','))?;
        let start = self.i;
        let mut depth = 0usize;
        while let Some(&(_, c)) = self.chars.get(self.i) {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                _ => {}
            }
            self.i += 1;
        }
        let name: String = self.chars[start..self.i].iter().map(|c| c.1).collect();
        let name = name.trim().to_string();
        if name.is_empty() {
            let pos = self.pos();
            return Err(self.error(pos, &Tok::Punct(')'), "expected a catalog name"));
        }
        self.expect(Tok::Punct(')'))?;
        Ok(GroupExpr::Catalog { order, name })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> usize {
        build_group(s, MAX_GROUP_ORDER).unwrap().size()
    }

    #[test]
    fn atoms() {
        assert_eq!(order("C6"), 6);
        assert_eq!(order("C1"), 1);
        assert_eq!(order("Ab(2, 2, 3)"), 12);
        assert_eq!(order("D12"), 12);
        assert_eq!(order("Dic3"), 12);
        assert_eq!(order("Dic12"), 12);
        assert_eq!(order("Q8"), 8);
        assert_eq!(order("S4"), 24);
        assert_eq!(order("A5"), 60);
        assert_eq!(order("Heis(3)"), 27);
        assert_eq!(order("M16") + order("SD16"), 32);
        assert_eq!(order("F20") + order("F21"), 41);
        assert_eq!(order("Aff(2,2,3)"), 12);
        assert_eq!(order("Cat(16, C2 x Q8)"), 16);
    }

    #[test]
    fn products_and_parentheses() {
        let e = parse_group_expr("C3 x (Ab(2,2) x C5)").unwrap();
        assert_eq!(e.predicted_order(), 60);
        assert_eq!(e.to_string(), "C3 x (Ab(2,2) x C5)");
        assert_eq!(order("C3xQ8"), 24);
        assert_eq!(parse_group_expr(" C 6 ").unwrap(), GroupExpr::Cyclic(6));
    }

    #[test]
    fn parse_errors_locate_the_token() {
        match parse_group_expr("C3 x Dic1?") {
            Err(ExprError::Parse { position, token, .. }) => assert_eq!((position, token.as_str()), (9, "?")),
            other => panic!("{other:?}"),
        }
        match parse_group_expr("C3 x Foo2") {
            Err(ExprError::Parse { position, token, .. }) => assert_eq!((position, token.as_str()), (5, "Foo")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group_expr("(C3"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_group_expr("C3 C4"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_group_expr("M8"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_group_expr(""), Err(ExprError::Parse { .. })));
    }

    #[test]
    fn size_checked_before_building() {
        let e = parse_group_expr("S7 x S7").unwrap();
        assert_eq!(e.predicted_order(), 5040 * 5040);
        assert!(matches!(e.build(MAX_GROUP_ORDER), Err(ExprError::SizeLimit { .. })));
        assert!(matches!(build_group("C100", 50), Err(ExprError::SizeLimit { predicted: 100, limit: 50 })));
        assert_eq!(parse_group_expr("PSL(3,4)").unwrap().predicted_order(), 20160);
    }

    #[test]
    fn catalog_errors() {
        assert!(matches!(build_group("Cat(16, nope)", 100), Err(ExprError::UnknownCatalogName { .. })));
        assert!(matches!(build_group("Cat(18, C18)", 100), Err(ExprError::Group(GroupError::UnsupportedOrder(18)))));
    }
}
