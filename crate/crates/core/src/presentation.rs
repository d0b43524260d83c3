//! Quiver presentations `kQ/I` and their line-oriented text format.
//!
//! ```text
//! # Example: loops a, b at 1 and an arrow c out of it
//! field gf 7
//! quiver
//!   vertices 1 2
//!   arrow a : 1 -> 1
//!   arrow b : 1 -> 1
//!   arrow c : 1 -> 2
//! relations
//!   a*a
//!   a*b - b*a
//! ```
//!
//! Paths compose left to right: in `a*c` the arrow `a` is traversed first.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::field::{is_prime, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: terms of the relation are not parallel paths")]
    NonParallelRelation { line: usize },
    #[error("line {line}: term `{term}` has length < 2")]
    LengthOneTerm { line: usize, term: String },
    #[error("line {line}: unknown arrow `{name}`")]
    UnknownArrow { line: usize, name: String },
    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: duplicate name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: `{term}` is not a path (arrows do not compose)")]
    NotAPath { line: usize, term: String },
    #[error("line {line}: relation is zero")]
    ZeroRelation { line: usize },
    #[error("missing `field` declaration")]
    MissingField,
    #[error("missing `quiver` section")]
    MissingQuiver,
}

type PResult<T> = Result<T, PresentationError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> PResult<Self> {
        let mut q = Quiver::default();
        for v in vertices {
            q.add_vertex(v, 0)?;
        }
        for a in arrows {
            q.check_fresh(&a.name, 0)?;
            for v in [a.source, a.target] {
                if v >= q.vertices.len() {
                    return Err(PresentationError::UnknownVertex {
                        line: 0,
                        name: v.to_string(),
                    });
                }
            }
            q.arrows.push(a);
        }
        Ok(q)
    }

    fn check_fresh(&self, name: &str, line: usize) -> PResult<()> {
        if self.vertex_index(name).is_some() || self.arrow_index(name).is_some() {
            return Err(PresentationError::DuplicateName {
                line,
                name: name.into(),
            });
        }
        Ok(())
    }

    fn add_vertex(&mut self, name: String, line: usize) -> PResult<()> {
        self.check_fresh(&name, line)?;
        self.vertices.push(name);
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The path traversing `arrows` in order, if they compose.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut target = first.target;
        for &a in &arrows[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != target {
                return None;
            }
            target = arrow.target;
        }
        Some(Path {
            source: first.source,
            target,
            arrows: arrows.to_vec(),
        })
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    /// `a1*b` style rendering; trivial paths render as `e<vertex>`.
    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source]);
        }
        let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
        names.join("*")
    }
}

/// A path in a quiver; an empty arrow list is the trivial path at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    /// Checks the relation invariants on a presentation built in code.
    pub fn validate(&self) -> PResult<()> {
        for rel in &self.relations {
            check_relation(&self.quiver, rel, 0)?;
        }
        Ok(())
    }

    /// Same quiver and relations over another field.
    pub fn with_field(&self, field: FieldSpec) -> Self {
        let mut p = self.clone();
        p.field = field;
        p.relations = p
            .relations
            .into_iter()
            .filter_map(|r| normalize_terms(field, r.terms).map(|terms| Relation { terms }))
            .collect();
        p
    }
}

fn check_relation(q: &Quiver, rel: &Relation, line: usize) -> PResult<()> {
    let Some((_, first)) = rel.terms.first() else {
        return Err(PresentationError::ZeroRelation { line });
    };
    for (c, p) in &rel.terms {
        if *c == 0 {
            return Err(PresentationError::ZeroRelation { line });
        }
        if p.len() < 2 {
            return Err(PresentationError::LengthOneTerm {
                line,
                term: q.path_label(p),
            });
        }
        if q.path(&p.arrows).as_ref() != Some(p) {
            return Err(PresentationError::NotAPath {
                line,
                term: q.path_label(p),
            });
        }
        if (p.source, p.target) != (first.source, first.target) {
            return Err(PresentationError::NonParallelRelation { line });
        }
    }
    Ok(())
}

/// Merges repeated paths and reduces coefficients into the field's canonical
/// integer range; `None` if nothing survives.
fn normalize_terms(field: FieldSpec, terms: Vec<(i64, Path)>) -> Option<Vec<(i64, Path)>> {
    let mut out: Vec<(i64, Path)> = Vec::new();
    for (c, p) in terms {
        match out.iter_mut().find(|(_, q)| *q == p) {
            Some((d, _)) => *d += c,
            None => out.push((c, p)),
        }
    }
    if let FieldSpec::Prime { p } = field {
        let p = p as i64;
        for (c, _) in out.iter_mut() {
            let r = c.rem_euclid(p);
            *c = if r > p / 2 { r - p } else { r };
        }
    }
    out.retain(|(c, _)| *c != 0);
    (!out.is_empty()).then_some(out)
}

#[derive(PartialEq)]
enum Section {
    Preamble,
    Quiver,
    Relations,
}

fn syntax(line: usize, message: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        message: message.into(),
    }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

pub fn parse_presentation(text: &str) -> PResult<QuiverPresentation> {
    let mut field = None;
    let mut quiver: Option<Quiver> = None;
    let mut relations = Vec::new();
    let mut section = Section::Preamble;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let head = words.next().unwrap_or("");
        match head {
            "field" => {
                if section != Section::Preamble || field.is_some() {
                    return Err(syntax(line, "`field` must be declared once, first"));
                }
                field = Some(parse_field(line, words.collect())?);
            }
            "quiver" => {
                if section != Section::Preamble || words.next().is_some() {
                    return Err(syntax(line, "unexpected `quiver`"));
                }
                section = Section::Quiver;
                quiver = Some(Quiver::default());
            }
            "vertices" if section == Section::Quiver => {
                let q = quiver.as_mut().expect("quiver section open");
                if !q.vertices.is_empty() || !q.arrows.is_empty() {
                    return Err(syntax(line, "`vertices` must be declared once, before arrows"));
                }
                for name in words {
                    if !is_ident(name) {
                        return Err(syntax(line, format!("bad vertex name `{name}`")));
                    }
                    q.add_vertex(name.into(), line)?;
                }
            }
            "arrow" if section == Section::Quiver => {
                let q = quiver.as_mut().expect("quiver section open");
                let rest = content["arrow".len()..].trim();
                let arrow = parse_arrow(q, line, rest)?;
                q.arrows.push(arrow);
            }
            "relations" => {
                if section != Section::Quiver || words.next().is_some() {
                    return Err(syntax(line, "unexpected `relations`"));
                }
                section = Section::Relations;
            }
            _ if section == Section::Relations => {
                let f = field.ok_or(PresentationError::MissingField)?;
                let q = quiver.as_ref().expect("relations follow the quiver");
                let terms = parse_relation(q, line, content)?;
                let terms =
                    normalize_terms(f, terms).ok_or(PresentationError::ZeroRelation { line })?;
                let rel = Relation { terms };
                check_relation(q, &rel, line)?;
                relations.push(rel);
            }
            _ => return Err(syntax(line, format!("unexpected `{head}`"))),
        }
    }
    let field = field.ok_or(PresentationError::MissingField)?;
    let quiver = quiver.ok_or(PresentationError::MissingQuiver)?;
    Ok(QuiverPresentation {
        field,
        quiver,
        relations,
    })
}

fn parse_field(line: usize, args: Vec<&str>) -> PResult<FieldSpec> {
    match args.as_slice() {
        ["q"] | ["Q"] => Ok(FieldSpec::Rational),
        ["gf", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| syntax(line, format!("bad characteristic `{p}`")))?;
            if p >= 1 << 31 || !is_prime(p) {
                return Err(syntax(line, format!("{p} is not a prime below 2^31")));
            }
            Ok(FieldSpec::Prime { p: p as u32 })
        }
        _ => Err(syntax(line, "expected `field gf <p>` or `field q`")),
    }
}

fn parse_arrow(q: &Quiver, line: usize, rest: &str) -> PResult<Arrow> {
    let (name, ends) = rest
        .split_once(':')
        .ok_or_else(|| syntax(line, "expected `arrow <name> : <v> -> <w>`"))?;
    let (src, tgt) = ends
        .split_once("->")
        .ok_or_else(|| syntax(line, "expected `<v> -> <w>`"))?;
    let (name, src, tgt) = (name.trim(), src.trim(), tgt.trim());
    if !is_ident(name) {
        return Err(syntax(line, format!("bad arrow name `{name}`")));
    }
    q.check_fresh(name, line)?;
    let lookup = |v: &str| {
        q.vertex_index(v).ok_or_else(|| PresentationError::UnknownVertex {
            line,
            name: v.into(),
        })
    };
    Ok(Arrow {
        name: name.into(),
        source: lookup(src)?,
        target: lookup(tgt)?,
    })
}

fn parse_relation(q: &Quiver, line: usize, content: &str) -> PResult<Vec<(i64, Path)>> {
    let compact: String = content.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pieces: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut current = String::new();
    for ch in compact.chars() {
        match ch {
            '+' | '-' => {
                if !current.is_empty() {
                    pieces.push((sign, core::mem::take(&mut current)));
                    sign = 1;
                } else if !pieces.is_empty() && sign != 1 {
                    return Err(syntax(line, "repeated sign"));
                }
                if ch == '-' {
                    sign = -sign;
                }
            }
            _ => current.push(ch),
        }
    }
    if current.is_empty() {
        return Err(syntax(line, "relation ends with a sign"));
    }
    pieces.push((sign, current));

    let mut terms = Vec::new();
    for (sign, piece) in pieces {
        let mut factors: Vec<&str> = piece.split('*').collect();
        let mut coeff = 1i64;
        if let Ok(c) = factors[0].parse::<i64>() {
            coeff = c;
            factors.remove(0);
        }
        if factors.len() < 2 {
            return Err(PresentationError::LengthOneTerm { line, term: piece });
        }
        let mut arrows = Vec::with_capacity(factors.len());
        for f in factors {
            if f.is_empty() {
                return Err(syntax(line, format!("empty factor in `{piece}`")));
            }
            let a = q.arrow_index(f).ok_or_else(|| PresentationError::UnknownArrow {
                line,
                name: f.into(),
            })?;
            arrows.push(a);
        }
        let path = q
            .path(&arrows)
            .ok_or_else(|| PresentationError::NotAPath { line, term: piece.clone() })?;
        let coeff = coeff
            .checked_mul(sign)
            .ok_or_else(|| syntax(line, "coefficient overflow"))?;
        terms.push((coeff, path));
    }
    Ok(terms)
}

/// Canonical text form; `parse_presentation` inverts it exactly.
pub fn serialize_presentation(p: &QuiverPresentation) -> String {
    let mut out = String::new();
    match p.field {
        FieldSpec::Prime { p } => writeln!(out, "field gf {p}").unwrap(),
        FieldSpec::Rational => writeln!(out, "field q").unwrap(),
    }
    out.push_str("quiver\n");
    if !p.quiver.vertices.is_empty() {
        writeln!(out, "  vertices {}", p.quiver.vertices.join(" ")).unwrap();
    }
    for a in &p.quiver.arrows {
        writeln!(
            out,
            "  arrow {} : {} -> {}",
            a.name, p.quiver.vertices[a.source], p.quiver.vertices[a.target]
        )
        .unwrap();
    }
    out.push_str("relations\n");
    for rel in &p.relations {
        out.push_str("  ");
        out.push_str(&relation_text(&p.quiver, rel));
        out.push('\n');
    }
    out
}

pub fn relation_text(q: &Quiver, rel: &Relation) -> String {
    let mut s = String::new();
    for (i, (c, path)) in rel.terms.iter().enumerate() {
        let mag = c.unsigned_abs();
        match (i, *c < 0) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if mag != 1 {
            write!(s, "{mag}*").unwrap();
        }
        s.push_str(&q.path_label(path));
    }
    s
}
