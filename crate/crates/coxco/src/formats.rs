//! Text formats for Coxeter systems (`.cox`), presentations (`.pres`), and
//! angled 2-complexes (`.cx2`).
//!
//! All three formats share the same lexical conventions: one directive per
//! line, blank lines ignored, `#` starting a comment that runs to the end of
//! the line.
//!
//! `.cox`: a rank declaration followed by finite bond orders; unlisted pairs
//! are infinite:
//!
//! ```text
//! rank 3
//! 0 1 2      # m(0, 1) = 2
//! 0 2 4
//! 1 2 5      # pairs use 0-based indices i < j; m is an integer >= 2 or inf
//! ```
//!
//! `.pres`: a generator count and one `rel` line per relator, letters
//! `a..z` with inverses `A..Z`.  Relators are freely and cyclically reduced
//! on ingest; a reduction that changes the input produces a warning:
//!
//! ```text
//! gens 2
//! rel abAB
//! ```
//!
//! `.cx2`: vertex count, then edges, faces, and corner angles.  Edges and
//! faces must be numbered in order of appearance.  Face boundaries list
//! signed edge ids (`-e` traverses edge `e` backwards; `-0` is the reverse
//! of edge 0).  Angles are rational multiples of pi, written `p/q` or `p`,
//! with an optional trailing `pi`; `angle f * v` angles every corner of `f`:
//!
//! ```text
//! vertices 1
//! edge 0 0 0
//! edge 1 0 0
//! face 0 0 1 -0 -1
//! angle 0 * 1/2
//! ```

use crate::complex::{Angle, AngledTwoComplex, ComplexBuilder, ComplexError, DirectedEdge};
use crate::coxeter::{BondOrder, CoxeterSystem, SystemError};
use crate::rational::Rational;
use crate::smallcancel::{Presentation, Word, WordError};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

/// Errors raised by the text-format parsers, with 1-based line numbers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing 'rank' declaration")]
    RankMissing,
    #[error("line {line}: pair ({i}, {j}) declared twice")]
    DuplicatePair { line: usize, i: usize, j: usize },
    #[error("line {line}: bad order token '{token}'")]
    BadOrder { line: usize, token: String },
    #[error("line {line}: letter '{letter}' needs generator {generator} but only {generators} are declared")]
    GeneratorOutOfRange {
        line: usize,
        letter: char,
        generator: usize,
        generators: usize,
    },
    #[error("line {line}: relator reduces to the empty word")]
    EmptyRelator { line: usize },
    #[error("{0}")]
    System(#[from] SystemError),
    #[error("{0}")]
    Complex(#[from] ComplexError),
    #[error("{0}")]
    Word(#[from] WordError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Lines with comments stripped, paired with their 1-based line numbers,
/// blank lines dropped.
fn directive_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(index, raw)| {
        let stripped = match raw.find('#') {
            Some(at) => &raw[..at],
            None => raw,
        }
        .trim();
        (!stripped.is_empty()).then_some((index + 1, stripped))
    })
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| {
        syntax(
            line,
            format!("{what} '{token}' is not a non-negative integer"),
        )
    })
}

/// Parses a `.cox` file.
pub fn parse_coxeter_file(text: &str) -> Result<CoxeterSystem, ParseError> {
    let mut rank: Option<usize> = None;
    let mut pairs: Vec<(usize, usize, BondOrder)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();

    for (line, directive) in directive_lines(text) {
        let tokens: Vec<&str> = directive.split_whitespace().collect();
        match tokens.as_slice() {
            ["rank", value] => {
                if rank.is_some() {
                    return Err(syntax(line, "'rank' declared twice"));
                }
                rank = Some(parse_usize(line, value, "rank")?);
            }
            [i, j, m] => {
                let declared_rank = rank.ok_or(ParseError::RankMissing)?;
                let i = parse_usize(line, i, "generator index")?;
                let j = parse_usize(line, j, "generator index")?;
                if i >= j {
                    return Err(syntax(line, format!("pair ({i}, {j}) must satisfy i < j")));
                }
                if j >= declared_rank {
                    return Err(syntax(
                        line,
                        format!("generator {j} out of range for rank {declared_rank}"),
                    ));
                }
                if !seen.insert((i, j)) {
                    return Err(ParseError::DuplicatePair { line, i, j });
                }
                let order = match *m {
                    "inf" => BondOrder::Infinity,
                    token => match token.parse::<u32>() {
                        Ok(value) if value >= 2 => BondOrder::Finite(value),
                        _ => {
                            return Err(ParseError::BadOrder {
                                line,
                                token: token.to_owned(),
                            })
                        }
                    },
                };
                pairs.push((i, j, order));
            }
            _ => {
                return Err(syntax(
                    line,
                    format!("expected 'rank N' or 'i j m', got '{directive}'"),
                ))
            }
        }
    }

    let rank = rank.ok_or(ParseError::RankMissing)?;
    Ok(CoxeterSystem::from_pairs(rank, &pairs)?)
}

/// Renders a system in `.cox` form: the rank line, then every finite
/// off-diagonal order.  `parse_coxeter_file` inverts this exactly.
pub fn render_coxeter_file(sys: &CoxeterSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank {}", sys.rank());
    for i in 0..sys.rank() {
        for j in (i + 1)..sys.rank() {
            if let BondOrder::Finite(m) = sys.order(i, j) {
                let _ = writeln!(out, "{i} {j} {m}");
            }
        }
    }
    out
}

/// A parsed presentation plus any reduction warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedPresentation {
    pub presentation: Presentation,
    /// One entry per relator that was not already cyclically reduced.
    pub warnings: Vec<String>,
}

/// Parses a `.pres` file.
pub fn parse_presentation_file(text: &str) -> Result<ParsedPresentation, ParseError> {
    let mut generators: Option<usize> = None;
    let mut relators: Vec<Word> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();

    for (line, directive) in directive_lines(text) {
        let tokens: Vec<&str> = directive.split_whitespace().collect();
        match tokens.as_slice() {
            ["gens", value] => {
                if generators.is_some() {
                    return Err(syntax(line, "'gens' declared twice"));
                }
                let count = parse_usize(line, value, "generator count")?;
                if count == 0 {
                    return Err(syntax(line, "generator count must be at least 1"));
                }
                generators = Some(count);
            }
            ["rel", text] => {
                let declared = generators.ok_or_else(|| syntax(line, "'rel' before 'gens'"))?;
                let raw = Word::from_text(text).map_err(|e| syntax(line, e.to_string()))?;
                for (symbol, letter) in text.chars().zip(raw.letters()) {
                    let generator = letter.unsigned_abs() as usize;
                    if generator > declared {
                        return Err(ParseError::GeneratorOutOfRange {
                            line,
                            letter: symbol,
                            generator,
                            generators: declared,
                        });
                    }
                }
                let reduced = raw.cyclic_reduce();
                if reduced.is_empty() {
                    return Err(ParseError::EmptyRelator { line });
                }
                if reduced != raw {
                    warnings.push(format!(
                        "line {line}: relator '{raw}' reduced to '{reduced}'"
                    ));
                }
                relators.push(reduced);
            }
            _ => {
                return Err(syntax(
                    line,
                    format!("expected 'gens N' or 'rel word', got '{directive}'"),
                ))
            }
        }
    }

    let generators = generators.ok_or_else(|| syntax(0, "missing 'gens' declaration"))?;
    let presentation = Presentation::new(generators, relators)?;
    Ok(ParsedPresentation {
        presentation,
        warnings,
    })
}

/// Renders a presentation in `.pres` form; inverse of
/// [`parse_presentation_file`] on reduced input with at most 26 generators.
pub fn render_presentation_file(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gens {}", p.generators());
    for relator in p.relators() {
        let _ = writeln!(out, "rel {relator}");
    }
    out
}

fn parse_rational(line: usize, token: &str) -> Result<Rational, ParseError> {
    let trimmed = token.strip_suffix("pi").unwrap_or(token);
    crate::rational::parse_ratio(trimmed)
        .ok_or_else(|| syntax(line, format!("bad rational '{token}'")))
}

/// A face boundary token: `e` or `-e` for edge `e` forward or backward.
/// Parsed from the raw text so that `-0` stays distinguishable from `0`.
fn parse_boundary_token(line: usize, token: &str) -> Result<(bool, usize), ParseError> {
    let (forward, digits) = match token.strip_prefix('-') {
        Some(rest) => (false, rest),
        None => (true, token),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            line,
            format!("bad boundary token '{token}': expected an edge id or -id"),
        ));
    }
    Ok((forward, parse_usize(line, digits, "edge id")?))
}

/// Parses a `.cx2` file into a fully angled complex.
pub fn parse_complex_file(text: &str) -> Result<AngledTwoComplex, ParseError> {
    let mut builder: Option<ComplexBuilder> = None;
    let mut edge_count = 0usize;
    let mut face_count = 0usize;

    for (line, directive) in directive_lines(text) {
        let tokens: Vec<&str> = directive.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertices", value] => {
                if builder.is_some() {
                    return Err(syntax(line, "'vertices' declared twice"));
                }
                builder = Some(ComplexBuilder::new(parse_usize(
                    line,
                    value,
                    "vertex count",
                )?));
            }
            [keyword, rest @ ..] => {
                let builder = builder
                    .as_mut()
                    .ok_or_else(|| syntax(line, "'vertices' must come first"))?;
                match (*keyword, rest) {
                    ("edge", [id, u, v]) => {
                        let id = parse_usize(line, id, "edge id")?;
                        if id != edge_count {
                            return Err(syntax(
                                line,
                                format!("edge ids must appear in order; expected {edge_count}, got {id}"),
                            ));
                        }
                        let u = parse_usize(line, u, "vertex")?;
                        let v = parse_usize(line, v, "vertex")?;
                        builder.add_edge(u, v)?;
                        edge_count += 1;
                    }
                    ("face", [id, steps @ ..]) => {
                        let id = parse_usize(line, id, "face id")?;
                        if id != face_count {
                            return Err(syntax(
                                line,
                                format!("face ids must appear in order; expected {face_count}, got {id}"),
                            ));
                        }
                        if steps.is_empty() {
                            return Err(syntax(line, "face needs a boundary"));
                        }
                        let mut boundary = Vec::with_capacity(steps.len());
                        for token in steps {
                            let (forward, edge) = parse_boundary_token(line, token)?;
                            boundary.push(DirectedEdge { edge, forward });
                        }
                        builder.add_face(&boundary)?;
                        face_count += 1;
                    }
                    ("angle", [face, corner, value]) => {
                        let face = parse_usize(line, face, "face id")?;
                        let angle = Angle::of_pi(parse_rational(line, value)?);
                        if *corner == "*" {
                            builder.set_face_angles(face, angle)?;
                        } else {
                            let corner = parse_usize(line, corner, "corner index")?;
                            builder.set_corner_angle(face, corner, angle)?;
                        }
                    }
                    _ => {
                        return Err(syntax(
                            line,
                            format!(
                                "expected 'edge e u v', 'face f e1 ...', or 'angle f c p/q', got '{directive}'"
                            ),
                        ))
                    }
                }
            }
            [] => unreachable!("blank directives are filtered out"),
        }
    }

    let builder = builder.ok_or_else(|| syntax(0, "missing 'vertices' declaration"))?;
    Ok(builder.build()?)
}
