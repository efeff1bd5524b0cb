//! The `.lfw` text format for monodromy words.
//!
//! ```text
//! # genus-two pencil on a K3, blown up
//! genus: 2
//! word: (c1 c2 c3 c4 c5)^6
//! ```
//!
//! Grammar (whitespace and newlines separate tokens, `#` comments run to end
//! of line):
//!
//! ```text
//! document = "genus" ":" uint "word" ":" expr EOF
//! expr     = term { term }
//! term     = atom { "^" uint }
//! atom     = "(" expr ")" | chain | separating | vector | family
//! chain    = "c" uint                      (1 ≤ k ≤ 2g+1)
//! separating = "s" uint                    (1 ≤ h ≤ ⌊g/2⌋)
//! vector   = "v" "[" int { "," int } "]"   (2g entries, zero or primitive)
//! family   = "A" | "B" | "C" | "H" "(" uint ")" | "E" "(" uint ")"
//! ```
//!
//! Powers and groups are expanded while parsing; the expanded word may hold
//! at most [`MAX_TWISTS`] twists.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::families;
use crate::monodromy::{Twist, Word};
use crate::surface::{chain_curve_class, validate_cycle_class, CycleKind, Genus, HomologyClass};

pub const MAX_TWISTS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("integer literal out of range")]
    IntegerOverflow,
    #[error("genus must be at least 1")]
    InvalidGenus,
    #[error("chain index {k} out of range (max {max})")]
    ChainIndexOutOfRange { k: u64, max: u32 },
    #[error("separating type {h} out of range 1..={max}")]
    SeparatingTypeOutOfRange { h: u64, max: u32 },
    #[error("separating twists are not allowed at genus 1")]
    SeparatingAtGenusOne,
    #[error("vector has {actual} entries, expected {expected}")]
    VectorLength { expected: usize, actual: usize },
    #[error("vector {0} is not primitive")]
    ImprimitiveVector(String),
    #[error("zero vector is ambiguous at genus {0}; write s<h> for a separating twist")]
    AmbiguousZeroVector(u32),
    #[error("power must be at least 1, got {0}")]
    NonPositivePower(i64),
    #[error("expanded word has {0} twists, more than the maximum {MAX_TWISTS}")]
    WordTooLong(u64),
    #[error("family {family} needs genus {required}, document has genus {actual}")]
    FamilyGenus { family: String, required: String, actual: u32 },
    #[error("word is empty")]
    EmptyWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Colon,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Int(i) => write!(f, "{i}"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Colon => f.write_str("':'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);

    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '^' => Some(Tok::Caret),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(tok) = single {
            bump(&mut chars);
            out.push(Spanned { tok, line: tl, column: tc });
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() || c == '-' {
            let mut s = String::new();
            s.push(c);
            bump(&mut chars);
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            if s == "-" {
                return Err(err(tl, tc, ParseErrorKind::UnexpectedChar('-')));
            }
            let value = s.parse::<i64>().map_err(|_| err(tl, tc, ParseErrorKind::IntegerOverflow))?;
            out.push(Spanned { tok: Tok::Int(value), line: tl, column: tc });
        } else if c.is_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Spanned { tok: Tok::Ident(s), line: tl, column: tc });
        } else {
            return Err(err(tl, tc, ParseErrorKind::UnexpectedChar(c)));
        }
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

/// A parsed term with its expanded length known before expansion.
enum Node {
    Twist(Twist),
    Seq(Vec<Node>),
    Power(Box<Node>, u64),
    Family(Word),
}

impl Node {
    fn len(&self) -> u64 {
        match self {
            Node::Twist(_) => 1,
            Node::Seq(items) => items.iter().map(Node::len).fold(0, u64::saturating_add),
            Node::Power(inner, k) => inner.len().saturating_mul(*k),
            Node::Family(w) => w.len() as u64,
        }
    }

    fn expand_into(&self, out: &mut Vec<Twist>) {
        match self {
            Node::Twist(t) => out.push(t.clone()),
            Node::Seq(items) => items.iter().for_each(|n| n.expand_into(out)),
            Node::Power(inner, k) => {
                let start = out.len();
                inner.expand_into(out);
                let end = out.len();
                for _ in 1..*k {
                    out.extend_from_within(start..end);
                }
            }
            Node::Family(w) => out.extend_from_slice(w.twists()),
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    genus: Option<Genus>,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, at: &Spanned, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(err(at.line, at.column, kind))
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<Spanned, ParseError> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            self.fail(&t, ParseErrorKind::Unexpected { expected, found: t.tok.to_string() })
        }
    }

    fn expect_keyword(&mut self, word: &'static str) -> Result<(), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == word => {}
            other => {
                let found = other.to_string();
                return self.fail(&t, ParseErrorKind::Unexpected { expected: word, found });
            }
        }
        self.expect(Tok::Colon, "':'")?;
        Ok(())
    }

    fn expect_int(&mut self, expected: &'static str) -> Result<(i64, Spanned), ParseError> {
        let t = self.next();
        match t.tok {
            Tok::Int(v) => Ok((v, t)),
            ref other => self.fail(&t, ParseErrorKind::Unexpected { expected, found: other.to_string() }),
        }
    }

    fn genus(&self) -> Genus {
        self.genus.expect("header parsed before the word")
    }

    fn document(&mut self) -> Result<Word, ParseError> {
        self.expect_keyword("genus")?;
        let (g, at) = self.expect_int("genus value")?;
        let genus = u32::try_from(g).ok().and_then(|g| Genus::new(g).ok());
        let Some(genus) = genus else {
            return self.fail(&at, ParseErrorKind::InvalidGenus);
        };
        self.genus = Some(genus);
        self.expect_keyword("word")?;

        let start = self.peek().clone();
        if start.tok == Tok::Eof {
            return self.fail(&start, ParseErrorKind::EmptyWord);
        }
        let node = self.sequence(Tok::Eof)?;
        let len = node.len();
        if len > MAX_TWISTS {
            return self.fail(&start, ParseErrorKind::WordTooLong(len));
        }
        let mut twists = Vec::with_capacity(len as usize);
        node.expand_into(&mut twists);
        Ok(Word::new(genus, twists).expect("twists validated during parsing"))
    }

    fn sequence(&mut self, terminator: Tok) -> Result<Node, ParseError> {
        let mut items = Vec::new();
        while self.peek().tok != terminator {
            if self.peek().tok == Tok::Eof {
                let t = self.peek().clone();
                return self.fail(&t, ParseErrorKind::Unexpected { expected: "')'", found: t.tok.to_string() });
            }
            items.push(self.term()?);
        }
        Ok(Node::Seq(items))
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut node = self.atom()?;
        while self.peek().tok == Tok::Caret {
            self.next();
            let (k, at) = self.expect_int("power")?;
            if k < 1 {
                return self.fail(&at, ParseErrorKind::NonPositivePower(k));
            }
            node = Node::Power(Box::new(node), k as u64);
            if node.len() > MAX_TWISTS {
                return self.fail(&at, ParseErrorKind::WordTooLong(node.len()));
            }
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::LParen => {
                let inner = self.sequence(Tok::RParen)?;
                self.expect(Tok::RParen, "')'")?;
                if inner.len() == 0 {
                    return self.fail(&t, ParseErrorKind::EmptyWord);
                }
                Ok(inner)
            }
            Tok::Ident(name) => self.named(name.clone(), &t),
            other => self.fail(&t, ParseErrorKind::Unexpected { expected: "a twist, family or '('", found: other.to_string() }),
        }
    }

    fn named(&mut self, name: String, at: &Spanned) -> Result<Node, ParseError> {
        let genus = self.genus();
        let index = |prefix: char| -> Option<u64> {
            let rest = name.strip_prefix(prefix)?;
            (!rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())).then(|| rest.parse().unwrap_or(u64::MAX))
        };
        if let Some(k) = index('c') {
            let max = genus.chain_length();
            if k == 0 || k > max as u64 {
                return self.fail(at, ParseErrorKind::ChainIndexOutOfRange { k, max });
            }
            let class = chain_curve_class(genus, k as u32).expect("range checked");
            return Ok(Node::Twist(Twist::Nonseparating(class)));
        }
        if let Some(h) = index('s') {
            return self.separating(h, at).map(Node::Twist);
        }
        match name.as_str() {
            "v" => self.vector(at).map(Node::Twist),
            "A" | "B" | "C" => {
                if genus.get() != 2 {
                    return self.fail(
                        at,
                        ParseErrorKind::FamilyGenus { family: name, required: "2".into(), actual: genus.get() },
                    );
                }
                Ok(Node::Family(match name.as_str() {
                    "A" => families::word_a(),
                    "B" => families::word_b(),
                    _ => families::word_c(),
                }))
            }
            "H" | "E" => {
                self.expect(Tok::LParen, "'('")?;
                let (arg, arg_at) = self.expect_int("family parameter")?;
                self.expect(Tok::RParen, "')'")?;
                if name == "H" {
                    if arg < 2 || arg != genus.get() as i64 {
                        return self.fail(
                            &arg_at,
                            ParseErrorKind::FamilyGenus {
                                family: format!("H({arg})"),
                                required: "equal to its parameter, at least 2".into(),
                                actual: genus.get(),
                            },
                        );
                    }
                    Ok(Node::Family(families::hyperelliptic_word(genus).expect("genus >= 2")))
                } else {
                    if genus.get() != 1 {
                        return self.fail(
                            at,
                            ParseErrorKind::FamilyGenus { family: format!("E({arg})"), required: "1".into(), actual: genus.get() },
                        );
                    }
                    if arg < 1 {
                        return self.fail(&arg_at, ParseErrorKind::NonPositivePower(arg));
                    }
                    if (arg as u64).saturating_mul(12) > MAX_TWISTS {
                        return self.fail(&arg_at, ParseErrorKind::WordTooLong((arg as u64).saturating_mul(12)));
                    }
                    Ok(Node::Family(families::genus1_word(arg as usize).expect("k >= 1")))
                }
            }
            _ => self.fail(at, ParseErrorKind::UnknownToken(name)),
        }
    }

    fn separating(&self, h: u64, at: &Spanned) -> Result<Twist, ParseError> {
        let genus = self.genus();
        if genus.get() == 1 {
            return self.fail(at, ParseErrorKind::SeparatingAtGenusOne);
        }
        let max = genus.max_separating_type();
        if h == 0 || h > max as u64 {
            return self.fail(at, ParseErrorKind::SeparatingTypeOutOfRange { h, max });
        }
        Ok(Twist::Separating(h as u32))
    }

    fn vector(&mut self, at: &Spanned) -> Result<Twist, ParseError> {
        let genus = self.genus();
        self.expect(Tok::LBracket, "'['")?;
        let mut coords = vec![BigInt::from(self.expect_int("integer")?.0)];
        loop {
            let t = self.next();
            match t.tok {
                Tok::Comma => coords.push(BigInt::from(self.expect_int("integer")?.0)),
                Tok::RBracket => break,
                ref other => {
                    return self.fail(&t, ParseErrorKind::Unexpected { expected: "',' or ']'", found: other.to_string() })
                }
            }
        }
        if coords.len() != genus.rank() {
            return self.fail(at, ParseErrorKind::VectorLength { expected: genus.rank(), actual: coords.len() });
        }
        let class = HomologyClass::new(coords).expect("length checked");
        match validate_cycle_class(&class) {
            Ok(CycleKind::Nonseparating) => Ok(Twist::Nonseparating(class)),
            Ok(CycleKind::Separating) => match genus.max_separating_type() {
                0 => self.fail(at, ParseErrorKind::SeparatingAtGenusOne),
                1 => Ok(Twist::Separating(1)),
                _ => self.fail(at, ParseErrorKind::AmbiguousZeroVector(genus.get())),
            },
            Err(_) => self.fail(at, ParseErrorKind::ImprimitiveVector(class.to_string())),
        }
    }
}

/// Parses an `.lfw` document into a flat word.
pub fn parse(text: &str) -> Result<Word, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0, genus: None };
    parser.document()
}

const TOKENS_PER_LINE: usize = 20;

/// Canonical flat text: chain classes as `c<k>`, other nonseparating
/// classes as `v[...]`, separating twists as `s<h>`, no powers.
pub fn serialize(w: &Word) -> String {
    let genus = w.genus();
    let chain: Vec<HomologyClass> =
        (1..=genus.chain_length()).map(|k| chain_curve_class(genus, k).expect("in range")).collect();
    let mut out = format!("genus: {genus}\nword:");
    for (i, t) in w.twists().iter().enumerate() {
        out.push_str(if i > 0 && i % TOKENS_PER_LINE == 0 { "\n     " } else { " " });
        match t {
            Twist::Separating(h) => out.push_str(&format!("s{h}")),
            Twist::Nonseparating(c) => match chain.iter().position(|x| x == c) {
                Some(k) => out.push_str(&format!("c{}", k + 1)),
                None => {
                    out.push_str("v[");
                    for (j, x) in c.coords().iter().enumerate() {
                        if j > 0 {
                            out.push(',');
                        }
                        out.push_str(&x.to_string());
                    }
                    out.push(']');
                }
            },
        }
    }
    out.push('\n');
    out
}
