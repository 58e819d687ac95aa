//! Text formats for quivers and representations.
//!
//! Quiver files start with `vertices <r>` followed by one `edge <src> <tgt>`
//! line per edge, vertices numbered from 0. Representation files start with
//! `dims d0 d1 …` followed by one `map e<k>: a1 a2 …` line per edge, giving
//! the image of each source element (0 is the basepoint). Blank lines and
//! lines starting with `#` are ignored in both.

use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use f1hall::{PartialInjection, Quiver, Rep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    Io { path: String, message: String },
    Parse { line: usize, message: String },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Io { path, message } => write!(f, "{path}: {message}"),
            FormatError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(line: usize, token: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

pub fn parse_quiver(text: &str) -> Result<Quiver, FormatError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().unwrap_or((1, ""));
    let r = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vertices", r] => number(first, r)?,
        _ => return Err(parse_err(first, "expected `vertices <r>` header")),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        match l.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["edge", s, t] => {
                let (s, t) = (number(line, s)?, number(line, t)?);
                if s >= r || t >= r {
                    return Err(parse_err(
                        line,
                        format!("edge {s} -> {t} leaves vertices 0..{r}"),
                    ));
                }
                edges.push((s, t));
            }
            _ => return Err(parse_err(line, "expected `edge <src> <tgt>`")),
        }
    }
    Quiver::new(r, edges).map_err(|e| parse_err(first, e.to_string()))
}

pub fn parse_rep(quiver: &Arc<Quiver>, text: &str) -> Result<Rep, FormatError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().unwrap_or((1, ""));
    let dims: Vec<usize> = match header.split_whitespace().collect::<Vec<_>>().split_first() {
        Some((&"dims", rest)) => rest
            .iter()
            .map(|t| number(first, t))
            .collect::<Result<_, _>>()?,
        _ => return Err(parse_err(first, "expected `dims d0 d1 ...` header")),
    };
    if dims.len() != quiver.num_vertices() {
        return Err(parse_err(
            first,
            format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.num_vertices()
            ),
        ));
    }
    let mut maps: Vec<Option<PartialInjection>> = vec![None; quiver.num_edges()];
    let mut last = first;
    for (line, l) in lines {
        last = line;
        let Some(rest) = l.strip_prefix("map e") else {
            return Err(parse_err(line, "expected `map e<k>: images...`"));
        };
        let (k, images) = rest
            .split_once(':')
            .ok_or_else(|| parse_err(line, "missing `:` after the edge index"))?;
        let e = number(line, k.trim())?;
        let Some(&(s, t)) = quiver.edges().get(e) else {
            return Err(parse_err(line, format!("no edge e{e}")));
        };
        if maps[e].is_some() {
            return Err(parse_err(line, format!("edge e{e} given twice")));
        }
        let image: Vec<usize> = images
            .split_whitespace()
            .map(|t| number(line, t))
            .collect::<Result<_, _>>()?;
        let f = PartialInjection::new(dims[s], dims[t], image)
            .map_err(|err| parse_err(line, err.to_string()))?;
        maps[e] = Some(f);
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(e, m)| m.ok_or_else(|| parse_err(last, format!("missing map for edge e{e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Rep::new(quiver.clone(), dims, maps).map_err(|e| parse_err(first, e.to_string()))
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn read_quiver(path: &Path) -> Result<Quiver, FormatError> {
    parse_quiver(&read(path)?)
}

pub fn read_rep(quiver: &Arc<Quiver>, path: &Path) -> Result<Rep, FormatError> {
    parse_rep(quiver, &read(path)?)
}

pub fn write_quiver(q: &Quiver) -> String {
    let mut s = format!("vertices {}\n", q.num_vertices());
    for (a, b) in q.edges() {
        s.push_str(&format!("edge {a} {b}\n"));
    }
    s
}

pub fn write_rep(rep: &Rep) -> String {
    let dims: Vec<String> = rep
        .dimension_vector()
        .0
        .iter()
        .map(|d| d.to_string())
        .collect();
    let mut s = format!("dims {}\n", dims.join(" "));
    for (e, f) in rep.maps().iter().enumerate() {
        let images: Vec<String> = f.images().iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("map e{e}: {}\n", images.join(" ")).replace(": \n", ":\n"));
    }
    s
}
