//! Human-readable names for isomorphism classes.
//!
//! An indecomposable gets the first name that fits:
//!
//! * `N<m>` for the nilpotent block of size `m` on the Jordan quiver;
//! * `S<i>` for the simple at vertex `i`;
//! * `I[<k>,<r>]` for a chain on the cyclic quiver;
//! * `R<v…>` for a thin module (dimension at most one everywhere) whose
//!   every edge between support vertices is nonzero, listing its support.
//!   Only used when every vertex index is a single digit.
//!
//! Anything else falls back to the hex key. A class is written as its
//! summands joined by `+`, with `^m` for multiplicities; the zero class is
//! `O`. [`parse_class`] reads all of these back, plus hex keys.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::f1vect::PartialInjection;
use crate::families::cyclic::{cyclic_indec_rep, CyclicIndec};
use crate::families::jordan::nilpotent_block;
use crate::quiver::{Quiver, Rep};
use crate::structure::{canonical_key, indecomposable_summands, simple, CanonicalKey};

fn thin_rep(q: &Arc<Quiver>, support: &[usize]) -> Rep {
    let r = q.num_vertices();
    let dims: Vec<usize> = (0..r).map(|v| usize::from(support.contains(&v))).collect();
    let maps = q
        .edges()
        .iter()
        .map(|&(s, t)| {
            if dims[s] == 1 && dims[t] == 1 {
                PartialInjection::identity(1)
            } else {
                PartialInjection::zero(dims[s], dims[t])
            }
        })
        .collect();
    Rep::from_parts_unchecked(q.clone(), dims, maps)
}

fn indecomposable_name(q: &Arc<Quiver>, key: &CanonicalKey, rep: &Rep) -> String {
    let d = rep.dimension_vector();
    if q.is_jordan() && rep.is_nilpotent() {
        return format!("N{}", d.total());
    }
    if d.total() == 1 {
        let v = d.0.iter().position(|&x| x == 1).expect("one nonzero entry");
        return format!("S{v}");
    }
    if let Some(n) = q.cyclic_length() {
        if rep.is_nilpotent() {
            // The socle of a chain is its unique element killed by the map.
            let k = (0..n)
                .find(|&v| (1..=rep.dim(v)).any(|x| rep.map(v).apply(x) == 0))
                .expect("nilpotent chain has a socle");
            return format!("I[{k},{}]", d.total());
        }
    }
    if q.num_vertices() <= 10 && d.0.iter().all(|&x| x <= 1) {
        let support: Vec<usize> = (0..d.len()).filter(|&v| d[v] == 1).collect();
        if canonical_key(&thin_rep(q, &support)) == *key {
            let digits: String = support.iter().map(|v| v.to_string()).collect();
            return format!("R{digits}");
        }
    }
    key.to_hex()
}

/// Pretty name of a class, e.g. `S0^2+R01`.
pub fn class_name(q: &Arc<Quiver>, key: &CanonicalKey) -> String {
    let Ok(rep) = key.decode(q) else {
        return key.to_hex();
    };
    if rep.is_zero() {
        return "O".into();
    }
    let parts: Vec<String> = indecomposable_summands(&rep)
        .iter()
        .map(|(k, m)| {
            let summand = k.decode(q).expect("summand of a decodable class");
            let name = indecomposable_name(q, k, &summand);
            if m == 1 {
                name
            } else {
                format!("{name}^{m}")
            }
        })
        .collect();
    parts.join("+")
}

fn bad(s: &str, why: &str) -> Error {
    Error::BadKey(format!("{s:?}: {why}"))
}

fn parse_number(s: &str, whole: &str) -> Result<usize> {
    s.parse().map_err(|_| bad(whole, "expected a number"))
}

fn parse_indecomposable(q: &Arc<Quiver>, s: &str) -> Result<Rep> {
    if let Some(rest) = s.strip_prefix('S') {
        return simple(q.clone(), parse_number(rest, s)?);
    }
    if let Some(rest) = s.strip_prefix('N') {
        if !q.is_jordan() {
            return Err(bad(s, "N<m> names need the Jordan quiver"));
        }
        let m = parse_number(rest, s)?;
        if m == 0 {
            return Err(bad(s, "block size must be positive"));
        }
        return Ok(nilpotent_block(m));
    }
    if let Some(rest) = s.strip_prefix("I[").and_then(|r| r.strip_suffix(']')) {
        let n = q
            .cyclic_length()
            .ok_or_else(|| bad(s, "I[k,r] names need a cyclic quiver"))?;
        let (k, r) = rest
            .split_once(',')
            .ok_or_else(|| bad(s, "expected I[k,r]"))?;
        let x = CyclicIndec::new(n, parse_number(k.trim(), s)?, parse_number(r.trim(), s)?)?;
        // Rebuild on the caller's quiver handle.
        let chain = cyclic_indec_rep(x);
        return Rep::new(q.clone(), chain.dimension_vector().0, chain.maps().to_vec());
    }
    if let Some(rest) = s.strip_prefix('R') {
        let mut support = Vec::new();
        for c in rest.chars() {
            let v = c
                .to_digit(10)
                .ok_or_else(|| bad(s, "expected vertex digits"))? as usize;
            if v >= q.num_vertices() || support.contains(&v) {
                return Err(bad(s, "vertex out of range or repeated"));
            }
            support.push(v);
        }
        if support.is_empty() {
            return Err(bad(s, "empty support"));
        }
        support.sort_unstable();
        return Ok(thin_rep(q, &support));
    }
    if s.starts_with("f1k1:") {
        return CanonicalKey::from_hex(s)?.decode(q);
    }
    Err(bad(s, "unknown class name"))
}

/// Parse a class given by name (see the module docs) or hex key.
pub fn parse_class(q: &Arc<Quiver>, text: &str) -> Result<CanonicalKey> {
    let text = text.trim();
    if text == "O" {
        return Ok(canonical_key(&Rep::zero(q.clone())));
    }
    if text.starts_with("f1k1:") && !text.contains('+') {
        let key = CanonicalKey::from_hex(text)?;
        key.decode(q)?;
        return Ok(key);
    }
    let mut acc = Rep::zero(q.clone());
    for part in text.split('+') {
        let part = part.trim();
        let (name, mult) = match part.rsplit_once('^') {
            Some((name, m)) if !name.is_empty() => (name, parse_number(m, part)?),
            _ => (part, 1),
        };
        let rep = parse_indecomposable(q, name)?;
        acc = acc.direct_sum(&rep.power(mult))?;
    }
    Ok(canonical_key(&acc))
}

/// Names of all summands, for display of a whole list of classes.
pub fn class_names(q: &Arc<Quiver>, keys: &[CanonicalKey]) -> Vec<String> {
    keys.iter().map(|k| class_name(q, k)).collect()
}
