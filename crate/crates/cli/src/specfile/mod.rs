//! The plain-text action spec format.
//!
//! ```text
//! name = su3_s7
//! orbit = interval
//! principal = T2
//!
//! group T2 { rank = 2  weyl = trivial }
//! group U2a { rank = 2  generator = [[0, 1], [1, 0]] }
//!
//! leg minus { group = U2a  embedding = [[1, 0], [0, 1]]  sphere = 2  orientable = true }
//! ```
//!
//! See `docs/spec-format.md` for the full grammar.

mod syntax;

use std::collections::HashMap;
use std::fmt;

use eqcohom_core::algebra::{Matrix, Rational};
use eqcohom_core::cohomology::{ActionSpec, Ambient, CircleSpec, IntervalSpec, Leg, SubgroupDatum};
use eqcohom_core::groups::{close_group, weyl_standard, WeylType, DEFAULT_CAP};
use num_traits::ToPrimitive;

pub use syntax::{parse_document, Block, Document, Entry, Pos, Value};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn at(pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

/// Keyed view of a list of entries that reports unknown and repeated keys.
struct Fields<'a> {
    entries: &'a [Entry],
    owner: Pos,
    what: String,
}

impl<'a> Fields<'a> {
    fn new(entries: &'a [Entry], owner: Pos, what: impl Into<String>, allowed: &[&str], repeatable: &[&str]) -> Result<Self, ParseError> {
        let mut seen: HashMap<&str, Pos> = HashMap::new();
        for e in entries {
            if !allowed.contains(&e.key.as_str()) {
                return Err(ParseError::at(e.key_pos, format!("unknown key '{}'", e.key)));
            }
            if !repeatable.contains(&e.key.as_str()) && seen.insert(&e.key, e.key_pos).is_some() {
                return Err(ParseError::at(e.key_pos, format!("duplicate key '{}'", e.key)));
            }
        }
        Ok(Fields {
            entries,
            owner,
            what: what.into(),
        })
    }

    fn get(&self, key: &str) -> Option<&'a Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    fn all(&self, key: &str) -> impl Iterator<Item = &'a Entry> + '_ {
        let key = key.to_string();
        self.entries.iter().filter(move |e| e.key == key)
    }

    fn require(&self, key: &str) -> Result<&'a Entry, ParseError> {
        self.get(key)
            .ok_or_else(|| ParseError::at(self.owner, format!("{} is missing '{key}'", self.what)))
    }
}

fn ident(e: &Entry) -> Result<&str, ParseError> {
    match &e.value {
        Value::Ident(s) => Ok(s),
        v => Err(ParseError::at(e.pos, format!("'{}' expects a name, found {}", e.key, v.kind()))),
    }
}

fn natural(pos: Pos, key: &str, v: &Value) -> Result<usize, ParseError> {
    match v {
        Value::Number(n) if n.is_integer() && *n >= Rational::from_integer(0.into()) => n
            .to_integer()
            .to_usize()
            .ok_or_else(|| ParseError::at(pos, format!("'{key}' is too large"))),
        v => Err(ParseError::at(pos, format!("'{key}' expects a non-negative integer, found {}", v.kind()))),
    }
}

fn boolean(e: &Entry) -> Result<bool, ParseError> {
    match &e.value {
        Value::Ident(s) if s == "true" => Ok(true),
        Value::Ident(s) if s == "false" => Ok(false),
        v => Err(ParseError::at(e.pos, format!("'{}' expects true or false, found {}", e.key, v.kind()))),
    }
}

fn matrix(e: &Entry) -> Result<Vec<Vec<Rational>>, ParseError> {
    match &e.value {
        Value::Matrix(rows) => Ok(rows.clone()),
        v => Err(ParseError::at(e.pos, format!("'{}' expects a matrix, found {}", e.key, v.kind()))),
    }
}

fn square(e: &Entry, rank: usize) -> Result<Matrix, ParseError> {
    let rows = matrix(e)?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.len() != rank || (rank > 0 && cols != rank) {
        return Err(ParseError::at(
            e.pos,
            format!("'{}' must be a square {rank} x {rank} matrix, found {} x {cols}", e.key, rows.len()),
        ));
    }
    Ok(Matrix::from_vec(rank, rank, rows.into_iter().flatten().collect()))
}

/// `rows x cols`; an empty literal `[]` stands for the 0 x cols matrix.
fn rectangular(e: &Entry, rows: usize, cols: usize) -> Result<Matrix, ParseError> {
    let m = matrix(e)?;
    if m.is_empty() && rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    let found_cols = m.first().map_or(0, Vec::len);
    if m.len() != rows || found_cols != cols {
        return Err(ParseError::at(
            e.pos,
            format!("'{}' must be {rows} x {cols}, found {} x {found_cols}", e.key, m.len()),
        ));
    }
    Ok(Matrix::from_vec(rows, cols, m.into_iter().flatten().collect()))
}

fn weyl_value(e: &Entry) -> Result<(WeylType, Option<usize>), ParseError> {
    let parse_kind = |s: &str| {
        s.parse::<WeylType>()
            .map_err(|_| ParseError::at(e.pos, format!("unknown Weyl type '{s}'")))
    };
    match &e.value {
        Value::Ident(s) => Ok((parse_kind(s)?, None)),
        Value::Call(s, args) if args.len() == 1 => Ok((parse_kind(s)?, Some(natural(e.pos, "weyl", &args[0])?))),
        v => Err(ParseError::at(e.pos, format!("'weyl' expects a type such as A(3) or trivial, found {}", v.kind()))),
    }
}

fn build_group(block: &Block) -> Result<SubgroupDatum, ParseError> {
    let name = block
        .label
        .clone()
        .ok_or_else(|| ParseError::at(block.pos, "group block needs a name"))?;
    let f = Fields::new(
        &block.entries,
        block.pos,
        format!("group '{name}'"),
        &["rank", "weyl", "generator"],
        &["generator"],
    )?;
    let rank = f.get("rank").map(|e| natural(e.pos, "rank", &e.value)).transpose()?;
    let mut gens = Vec::new();
    let rank = match f.get("weyl") {
        Some(e) => {
            let (kind, n) = weyl_value(e)?;
            let n = match (kind, n, rank) {
                (_, Some(n), _) => n,
                (WeylType::Torus | WeylType::Trivial, None, Some(r)) => r,
                _ => return Err(ParseError::at(e.pos, format!("Weyl type {kind} needs a size, as in {kind}(2)"))),
            };
            let w = weyl_standard(kind, n).map_err(|err| ParseError::at(e.pos, err.to_string()))?;
            if let Some(r) = rank {
                if r != w.rank() {
                    return Err(ParseError::at(e.pos, format!("{kind}({n}) has rank {}, but rank = {r}", w.rank())));
                }
            }
            gens.extend(w.generators().iter().cloned());
            w.rank()
        }
        None => rank.ok_or_else(|| ParseError::at(block.pos, format!("group '{name}' needs 'rank' or 'weyl'")))?,
    };
    for e in f.all("generator") {
        gens.push(square(e, rank)?);
    }
    let group = close_group(rank, &gens, DEFAULT_CAP).map_err(|err| ParseError::at(block.pos, format!("group '{name}': {err}")))?;
    Ok(SubgroupDatum::new(name, group))
}

fn lookup<'a>(groups: &'a HashMap<String, SubgroupDatum>, e: &Entry) -> Result<&'a SubgroupDatum, ParseError> {
    let name = ident(e)?;
    groups
        .get(name)
        .ok_or_else(|| ParseError::at(e.pos, format!("undefined group '{name}'")))
}

/// H x K embedding; omitted means the identity when the ranks agree.
fn embedding(f: &Fields, h: &SubgroupDatum, k: &SubgroupDatum) -> Result<Matrix, ParseError> {
    match f.get("embedding") {
        Some(e) => rectangular(e, h.rank, k.rank),
        None if h.rank == k.rank => Ok(Matrix::identity(h.rank)),
        None => Err(ParseError::at(f.owner, format!("{} needs an 'embedding' ({} x {})", f.what, h.rank, k.rank))),
    }
}

fn build_leg(block: &Block, h: &SubgroupDatum, groups: &HashMap<String, SubgroupDatum>) -> Result<Leg, ParseError> {
    let f = Fields::new(
        &block.entries,
        block.pos,
        format!("leg {}", block.label.as_deref().unwrap_or("")),
        &["group", "embedding", "sphere", "orientable"],
        &[],
    )?;
    let group = lookup(groups, f.require("group")?)?.clone();
    let embedding = embedding(&f, h, &group)?;
    let sphere = f.require("sphere")?;
    let sphere_dim = natural(sphere.pos, "sphere", &sphere.value)?;
    let orientable = f.get("orientable").map(boolean).transpose()?.unwrap_or(true);
    Ok(Leg {
        group,
        embedding,
        sphere_dim,
        orientable,
    })
}

/// Parse and interpret a spec file.
pub fn parse_spec(src: &str) -> Result<ActionSpec, ParseError> {
    let doc = parse_document(src)?;
    let top = Fields::new(
        &doc.entries,
        Pos { line: 1, column: 1 },
        "the file",
        &["name", "orbit", "principal", "isotropy", "translation"],
        &[],
    )?;
    let mut groups: HashMap<String, SubgroupDatum> = HashMap::new();
    for b in doc.blocks.iter().filter(|b| b.kind == "group") {
        let g = build_group(b)?;
        if groups.insert(g.name.clone(), g).is_some() {
            return Err(ParseError::at(b.pos, "group defined twice"));
        }
    }
    let name = ident(top.require("name")?)?.to_string();
    let orbit = top.require("orbit")?;
    let allowed_blocks: &[&str] = match ident(orbit)? {
        "interval" => &["group", "leg", "ambient"],
        "circle" => &["group"],
        other => return Err(ParseError::at(orbit.pos, format!("orbit must be interval or circle, found '{other}'"))),
    };
    if let Some(b) = doc.blocks.iter().find(|b| !allowed_blocks.contains(&b.kind.as_str())) {
        return Err(ParseError::at(b.pos, format!("unexpected '{}' block", b.kind)));
    }

    if ident(orbit)? == "circle" {
        for key in ["principal"] {
            if let Some(e) = top.get(key) {
                return Err(ParseError::at(e.key_pos, format!("'{key}' is not used by circle specs")));
            }
        }
        let k = lookup(&groups, top.require("isotropy")?)?.clone();
        let translation = match top.get("translation") {
            Some(e) => square(e, k.rank)?,
            None => Matrix::identity(k.rank),
        };
        return Ok(ActionSpec::Circle(CircleSpec { name, k, translation }));
    }

    for key in ["isotropy", "translation"] {
        if let Some(e) = top.get(key) {
            return Err(ParseError::at(e.key_pos, format!("'{key}' is only used by circle specs")));
        }
    }
    let h = lookup(&groups, top.require("principal")?)?.clone();
    let mut minus = None;
    let mut plus = None;
    let mut ambient = None;
    for b in &doc.blocks {
        match b.kind.as_str() {
            "leg" => {
                let slot = match b.label.as_deref() {
                    Some("minus") => &mut minus,
                    Some("plus") => &mut plus,
                    _ => return Err(ParseError::at(b.pos, "leg must be labelled minus or plus")),
                };
                if slot.is_some() {
                    return Err(ParseError::at(b.pos, "leg defined twice"));
                }
                *slot = Some(build_leg(b, &h, &groups)?);
            }
            "ambient" => {
                if ambient.is_some() {
                    return Err(ParseError::at(b.pos, "ambient defined twice"));
                }
                let f = Fields::new(&b.entries, b.pos, "ambient", &["group", "embedding"], &[])?;
                let group = lookup(&groups, f.require("group")?)?.clone();
                let embedding = embedding(&f, &h, &group)?;
                ambient = Some(Ambient { group, embedding });
            }
            _ => {}
        }
    }
    let end = Pos { line: 1, column: 1 };
    Ok(ActionSpec::Interval(IntervalSpec {
        name,
        h,
        minus: minus.ok_or_else(|| ParseError::at(end, "missing 'leg minus' block"))?,
        plus: plus.ok_or_else(|| ParseError::at(end, "missing 'leg plus' block"))?,
        ambient,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SU3: &str = "\
name = su3_s7
orbit = interval
principal = T2
group T2 { rank = 2 }
group Km { rank = 2  generator = [[0, 1], [1, 0]] }
group Kp { rank = 2  generator = [[1, 0], [-1, -1]] }
group G { weyl = A(3) }
leg minus { group = Km  sphere = 2 }
leg plus { group = Kp  embedding = [[1, 0], [0, 1]]  sphere = 2  orientable = true }
ambient { group = G }
";

    #[test]
    fn builds_interval() {
        let ActionSpec::Interval(s) = parse_spec(SU3).unwrap() else {
            panic!("interval expected")
        };
        assert_eq!(s.name, "su3_s7");
        assert_eq!(s.minus.group.weyl.order(), 2);
        assert_eq!(s.plus.group.weyl.order(), 2);
        assert_eq!(s.ambient.unwrap().group.weyl.order(), 6);
        assert!(s.minus.orientable);
    }

    #[test]
    fn builds_circle() {
        let src = "name = t\norbit = circle\nisotropy = T\ntranslation = [[-1]]\ngroup T { weyl = torus  rank = 1 }\n";
        let ActionSpec::Circle(c) = parse_spec(src).unwrap() else {
            panic!("circle expected")
        };
        assert_eq!(c.translation, Matrix::from_ints(&[&[-1]]));
    }

    #[test]
    fn empty_embedding_for_rank_zero() {
        let src = "name = s\norbit = interval\nprincipal = H\ngroup H { rank = 0 }\ngroup K { weyl = A(2) }\n\
                   leg minus { group = K  embedding = []  sphere = 3 }\nleg plus { group = K  embedding = []  sphere = 3 }\n";
        let ActionSpec::Interval(s) = parse_spec(src).unwrap() else {
            panic!()
        };
        assert_eq!((s.minus.embedding.nrows(), s.minus.embedding.ncols()), (0, 1));
    }

    #[test]
    fn non_square_generator() {
        let src = "name = x\norbit = circle\nisotropy = K\ngroup K {\n  rank = 2\n  generator = [[1, 0, 0], [0, 1, 0]]\n}\n";
        let e = parse_spec(src).unwrap_err();
        assert_eq!((e.line, e.column), (6, 15));
        assert!(e.message.contains("square"), "{e}");
    }

    #[test]
    fn semantic_errors_are_positioned() {
        let e = parse_spec("name = x\norbit = interval\nprincipal = Q\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 13));
        let e = parse_spec("name = x\nname = y\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_spec("name = x\norbit = circle\nisotropy = K\ngroup K { rank = 1  colour = 3 }\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 21));
        let e = parse_spec("name = x\norbit = circle\nisotropy = K\ngroup K { rank = 1  generator = [[2]] }\n").unwrap_err();
        assert!(e.message.contains("cap"), "{e}");
    }
}
