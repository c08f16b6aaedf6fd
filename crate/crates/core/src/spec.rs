//! The group-construction mini-language.
//!
//! ```text
//! expr := term ("x" term)*                      left-associative
//! term := atom ("wr" "C" INT)?
//! atom := ("S"|"A"|"C"|"D"|"Q") INT | "UT(" INT ",2)" | "corpus:" NAME
//!       | "perm:" "[" gen ("," gen)* "]" | "cayley:" PATH | "(" expr ")"
//! gen  := ("(" INT ("," INT)* ")")+
//! ```

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::corpus::corpus_group;
use crate::error::Result;
use crate::group::{read_cayley_file, Family, Group};
use crate::named::named_group;
use crate::perm::PermutationGenSet;
use crate::products::{direct_product, wreath_cyclic};
use crate::subgroup::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(Family, usize),
    Corpus(String),
    /// Generators, each a list of 1-based cycles.
    Perm(Vec<Vec<Vec<usize>>>),
    Cayley(String),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Wreath(Box<GroupSpec>, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl GroupSpec {
    pub fn parse(text: &str) -> std::result::Result<GroupSpec, ParseError> {
        let mut p = Parser { chars: text.chars().collect(), pos: 0 };
        let spec = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error(&["\"x\"", "end of input"]));
        }
        Ok(spec)
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }

    pub fn wreath(a: GroupSpec, n: usize) -> GroupSpec {
        GroupSpec::Wreath(Box::new(a), n)
    }

    /// Builds the group described by the spec.
    pub fn build(&self, limits: &Limits) -> Result<Group> {
        let cap = limits.order_cap;
        match self {
            GroupSpec::Named(f, n) => named_group(*f, *n, cap),
            GroupSpec::Corpus(name) => corpus_group(name, cap),
            GroupSpec::Perm(gens) => Group::from_permutations(&PermutationGenSet::from_cycle_lists(gens)?, cap),
            GroupSpec::Cayley(path) => read_cayley_file(Path::new(path)),
            GroupSpec::Product(a, b) => direct_product(&a.build(limits)?, &b.build(limits)?, cap),
            GroupSpec::Wreath(a, n) => wreath_cyclic(&a.build(limits)?, *n, cap),
        }
    }

    fn is_atom(&self) -> bool {
        !matches!(self, GroupSpec::Product(..) | GroupSpec::Wreath(..))
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named(Family::Unitriangular, n) => write!(f, "UT({n},2)"),
            GroupSpec::Named(fam, n) => write!(f, "{}{n}", fam.symbol()),
            GroupSpec::Corpus(name) => write!(f, "corpus:{name}"),
            GroupSpec::Perm(gens) => {
                f.write_str("perm:[")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    if g.is_empty() {
                        f.write_str("()")?;
                    }
                    for c in g {
                        let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                        write!(f, "({})", pts.join(","))?;
                    }
                }
                f.write_str("]")
            }
            GroupSpec::Cayley(p) => write!(f, "cayley:{p}"),
            GroupSpec::Product(a, b) => match **b {
                GroupSpec::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
            GroupSpec::Wreath(a, n) => {
                if a.is_atom() {
                    write!(f, "{a} wr C{n}")
                } else {
                    write!(f, "({a}) wr C{n}")
                }
            }
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, expected: &[&str]) -> ParseError {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError { position: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect_char(&mut self, c: char) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn int(&mut self) -> std::result::Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| ParseError { position: start, expected: vec!["integer".into()], found: text })
    }

    fn expr(&mut self) -> std::result::Result<GroupSpec, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('x') || self.peek() == Some('×') {
                self.pos += 1;
                let rhs = self.term()?;
                acc = GroupSpec::product(acc, rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> std::result::Result<GroupSpec, ParseError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.eat_str("wr") || self.eat_str("≀") {
            self.skip_ws();
            if !self.eat_str("C") {
                return Err(self.error(&["\"C\""]));
            }
            let n = self.int()?;
            return Ok(GroupSpec::wreath(atom, n));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> std::result::Result<GroupSpec, ParseError> {
        self.skip_ws();
        const EXPECTED: &[&str] = &["\"S\"", "\"A\"", "\"C\"", "\"D\"", "\"Q\"", "\"UT(\"", "\"corpus:\"", "\"perm:\"", "\"cayley:\"", "'('"];
        if self.eat_str("(") {
            let e = self.expr()?;
            self.expect_char(')')?;
            return Ok(e);
        }
        if self.eat_str("UT(") {
            self.skip_ws();
            let n = self.int()?;
            self.expect_char(',')?;
            self.skip_ws();
            if !self.eat_str("2") {
                return Err(self.error(&["\"2\""]));
            }
            self.expect_char(')')?;
            return Ok(GroupSpec::Named(Family::Unitriangular, n));
        }
        if self.eat_str("corpus:") {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error(&["fixture name"]));
            }
            return Ok(GroupSpec::Corpus(self.chars[start..self.pos].iter().collect()));
        }
        if self.eat_str("perm:") {
            return self.perm();
        }
        if self.eat_str("cayley:") {
            let start = self.pos;
            while self.peek().is_some_and(|c| !c.is_whitespace() && c != ')') {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error(&["path"]));
            }
            return Ok(GroupSpec::Cayley(self.chars[start..self.pos].iter().collect()));
        }
        let family = match self.peek() {
            Some('S') => Family::Symmetric,
            Some('A') => Family::Alternating,
            Some('C') => Family::Cyclic,
            Some('D') => Family::Dihedral,
            Some('Q') => Family::Quaternion,
            _ => return Err(self.error(EXPECTED)),
        };
        self.pos += 1;
        Ok(GroupSpec::Named(family, self.int()?))
    }

    fn perm(&mut self) -> std::result::Result<GroupSpec, ParseError> {
        self.expect_char('[')?;
        let mut gens = Vec::new();
        loop {
            let mut cycles = Vec::new();
            let mut saw_cycle = false;
            loop {
                self.skip_ws();
                if self.peek() != Some('(') {
                    break;
                }
                saw_cycle = true;
                self.pos += 1;
                let mut pts = Vec::new();
                self.skip_ws();
                if self.peek() != Some(')') {
                    loop {
                        self.skip_ws();
                        pts.push(self.int()?);
                        self.skip_ws();
                        if self.peek() == Some(',') {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                }
                self.expect_char(')')?;
                if !pts.is_empty() {
                    cycles.push(pts);
                }
            }
            if !saw_cycle {
                return Err(self.error(&["'('"]));
            }
            gens.push(cycles);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(GroupSpec::Perm(gens));
                }
                _ => return Err(self.error(&["','", "']'"])),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GroupSpec {
        GroupSpec::parse(s).unwrap()
    }

    #[test]
    fn atoms_products_and_wreaths() {
        assert_eq!(parse("D8"), GroupSpec::Named(Family::Dihedral, 8));
        assert_eq!(parse("S3 x D8"), GroupSpec::product(GroupSpec::Named(Family::Symmetric, 3), GroupSpec::Named(Family::Dihedral, 8)));
        assert_eq!(parse("D8 wr C2"), GroupSpec::wreath(GroupSpec::Named(Family::Dihedral, 8), 2));
        assert_eq!(parse("UT(5,2)"), GroupSpec::Named(Family::Unitriangular, 5));
        assert_eq!(parse("corpus:g32"), GroupSpec::Corpus("g32".into()));
        assert_eq!(parse("(C2 wr C2) wr C2").to_string(), "(C2 wr C2) wr C2");
    }

    #[test]
    fn products_are_left_associative() {
        let s = parse("C2 x C3 x C4");
        assert_eq!(
            s,
            GroupSpec::product(
                GroupSpec::product(GroupSpec::Named(Family::Cyclic, 2), GroupSpec::Named(Family::Cyclic, 3)),
                GroupSpec::Named(Family::Cyclic, 4)
            )
        );
        assert_eq!(parse("C2 x (C3 x C4)").to_string(), "C2 x (C3 x C4)");
        assert_eq!(parse("  S3x D8 ").to_string(), "S3 x D8");
    }

    #[test]
    fn permutation_atom() {
        let s = parse("perm:[(1,2),(1,2,3,4)]");
        assert_eq!(s, GroupSpec::Perm(vec![vec![vec![1, 2]], vec![vec![1, 2, 3, 4]]]));
        assert_eq!(s.build(&Limits::default()).unwrap().order(), 24);
        let v = parse("perm:[(1,2)(3,4), (1,3)(2,4)]");
        assert_eq!(v.to_string(), "perm:[(1,2)(3,4),(1,3)(2,4)]");
        assert_eq!(v.build(&Limits::default()).unwrap().order(), 4);
    }

    #[test]
    fn errors_carry_position() {
        let e = GroupSpec::parse("S3 x").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.expected.contains(&"\"S\"".to_string()));
        let e = GroupSpec::parse("D8 wr Q2").unwrap_err();
        assert_eq!(e.position, 6);
        assert!(GroupSpec::parse("UT(5,3)").is_err());
        assert!(GroupSpec::parse("S").is_err());
        assert!(GroupSpec::parse("S3 S4").is_err());
        assert!(GroupSpec::parse("perm:[(1,2]").is_err());
    }
}
