//! Tokens and the untyped document tree of a spec file.

use eqcohom_core::algebra::Rational;

use super::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    Eq,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Number(n) => format!("number {n}"),
            Tok::Eq => "'='".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: li + 1,
                column: i + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '=' => Some(Tok::Eq),
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, pos));
                i += 1;
                continue;
            }
            if c == '-' || c.is_ascii_digit() {
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse::<Rational>()
                    .map_err(|_| ParseError::at(pos, format!("malformed number '{text}'")))?;
                out.push((Tok::Number(n), pos));
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '-') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
                continue;
            }
            return Err(ParseError::at(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Ident(String),
    Number(Rational),
    Matrix(Vec<Vec<Rational>>),
    Call(String, Vec<Value>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Ident(_) => "a name",
            Value::Number(_) => "a number",
            Value::Matrix(_) => "a matrix",
            Value::Call(..) => "a call",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub key: String,
    pub key_pos: Pos,
    pub value: Value,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub kind: String,
    pub label: Option<String>,
    pub pos: Pos,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Document {
    pub entries: Vec<Entry>,
    pub blocks: Vec<Block>,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.i).map(|t| t.1).unwrap_or(self.end)
    }

    fn next(&mut self, what: &str) -> Result<(Tok, Pos), ParseError> {
        let t = self
            .toks
            .get(self.i)
            .cloned()
            .ok_or_else(|| ParseError::at(self.end, format!("unexpected end of file, expected {what}")))?;
        self.i += 1;
        Ok(t)
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, ParseError> {
        let (t, pos) = self.next(&tok.describe())?;
        if t != tok {
            return Err(ParseError::at(pos, format!("expected {}, found {}", tok.describe(), t.describe())));
        }
        Ok(pos)
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.next(what)? {
            (Tok::Ident(s), pos) => Ok((s, pos)),
            (t, pos) => Err(ParseError::at(pos, format!("expected {what}, found {}", t.describe()))),
        }
    }

    fn value(&mut self) -> Result<(Value, Pos), ParseError> {
        let pos = self.pos();
        match self.next("a value")? {
            (Tok::Number(n), _) => Ok((Value::Number(n), pos)),
            (Tok::Ident(s), _) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.i += 1;
                    let mut args = Vec::new();
                    if self.peek() != Some(&Tok::RParen) {
                        loop {
                            args.push(self.value()?.0);
                            if self.peek() == Some(&Tok::Comma) {
                                self.i += 1;
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen)?;
                    Ok((Value::Call(s, args), pos))
                } else {
                    Ok((Value::Ident(s), pos))
                }
            }
            (Tok::LBracket, _) => Ok((Value::Matrix(self.matrix_rows()?), pos)),
            (t, _) => Err(ParseError::at(pos, format!("expected a value, found {}", t.describe()))),
        }
    }

    /// After the opening '[': zero or more rows `[a, b, ...]`, then ']'.
    fn matrix_rows(&mut self) -> Result<Vec<Vec<Rational>>, ParseError> {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut width: Option<usize> = None;
        if self.peek() == Some(&Tok::RBracket) {
            self.i += 1;
            return Ok(rows);
        }
        loop {
            let row_pos = self.expect(Tok::LBracket)?;
            let mut row = Vec::new();
            if self.peek() != Some(&Tok::RBracket) {
                loop {
                    match self.next("a matrix entry")? {
                        (Tok::Number(n), _) => row.push(n),
                        (t, pos) => {
                            return Err(ParseError::at(pos, format!("expected a matrix entry, found {}", t.describe())))
                        }
                    }
                    if self.peek() == Some(&Tok::Comma) {
                        self.i += 1;
                    } else {
                        break;
                    }
                }
            }
            self.expect(Tok::RBracket)?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(ParseError::at(
                        row_pos,
                        format!("matrix row has {} entries, expected {w}", row.len()),
                    ))
                }
                _ => {}
            }
            rows.push(row);
            match self.next("',' or ']'")? {
                (Tok::Comma, _) => continue,
                (Tok::RBracket, _) => break,
                (t, pos) => return Err(ParseError::at(pos, format!("expected ',' or ']', found {}", t.describe()))),
            }
        }
        Ok(rows)
    }

    fn entry(&mut self, key: String, key_pos: Pos) -> Result<Entry, ParseError> {
        self.expect(Tok::Eq)?;
        let (value, pos) = self.value()?;
        Ok(Entry {
            key,
            key_pos,
            value,
            pos,
        })
    }
}

/// Parse the nested key/value structure without interpreting it.
pub fn parse_document(src: &str) -> Result<Document, ParseError> {
    let toks = lex(src)?;
    let end = Pos {
        line: src.lines().count().max(1),
        column: src.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1),
    };
    let mut p = Parser { toks, i: 0, end };
    let mut doc = Document::default();
    while p.peek().is_some() {
        let (word, pos) = p.ident("a key or block name")?;
        match p.peek() {
            Some(Tok::Eq) => doc.entries.push(p.entry(word, pos)?),
            Some(Tok::LBrace) | Some(Tok::Ident(_)) => {
                let label = match p.peek() {
                    Some(Tok::Ident(_)) => Some(p.ident("a block label")?.0),
                    _ => None,
                };
                p.expect(Tok::LBrace)?;
                let mut entries = Vec::new();
                loop {
                    if p.peek() == Some(&Tok::RBrace) {
                        p.i += 1;
                        break;
                    }
                    let (key, key_pos) = p.ident("a key or '}'")?;
                    entries.push(p.entry(key, key_pos)?);
                }
                doc.blocks.push(Block {
                    kind: word,
                    label,
                    pos,
                    entries,
                });
            }
            _ => {
                let pos = p.pos();
                let found = p.peek().map(|t| t.describe()).unwrap_or_else(|| "end of file".into());
                return Err(ParseError::at(pos, format!("expected '=' or '{{' after '{word}', found {found}")));
            }
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use eqcohom_core::algebra::{frac, rat};

    #[test]
    fn entries_and_blocks() {
        let doc = parse_document("name = x # comment\ngroup H {\n  rank = 2\n  generator = [[0, 1], [1, 0]]\n}\n").unwrap();
        assert_eq!(doc.entries[0].value, Value::Ident("x".into()));
        let b = &doc.blocks[0];
        assert_eq!((b.kind.as_str(), b.label.as_deref()), ("group", Some("H")));
        assert_eq!(b.entries[0].value, Value::Number(rat(2)));
        assert_eq!(
            b.entries[1].value,
            Value::Matrix(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]])
        );
        assert_eq!(b.entries[1].pos, Pos { line: 4, column: 15 });
    }

    #[test]
    fn rationals_and_calls() {
        let doc = parse_document("m = [[-1/2]]\nw = A(3)\ne = []").unwrap();
        assert_eq!(doc.entries[0].value, Value::Matrix(vec![vec![frac(-1, 2)]]));
        assert_eq!(doc.entries[1].value, Value::Call("A".into(), vec![Value::Number(rat(3))]));
        assert_eq!(doc.entries[2].value, Value::Matrix(vec![]));
    }

    #[test]
    fn positioned_errors() {
        let e = parse_document("a = [[1, 2],\n     [3]]").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = parse_document("a = 1/0").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_document("block {\n  k = 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_document("a = $").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
    }
}
