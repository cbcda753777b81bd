//! Line-oriented text format for algebras.
//!
//! ```text
//! # comment
//! efa 1
//! order 3
//! zero 0
//! one 2
//! name 1 a
//! sum 0 0 0
//! sum 0 1 1
//! sum 0 2 2
//! sum 1 1 2
//! ```
//!
//! `sum I J K` records `I + J = K`; absent pairs are undefined. The reader
//! closes the table under commutativity, accepts repeated identical facts
//! and rejects contradictory ones. The writer emits only `I <= J`, sorted.
//! Generalized effect algebras use the header `gea 1` and omit `one`.

use std::fmt::Write as _;

use crate::algebra::{FiniteEffectAlgebra, FiniteGeneralizedEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::error::{InputError, Result};
use crate::table::{ElementId, PartialOpTable};

/// A parsed but not yet validated document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlgebra {
    pub kind: Kind,
    pub table: PartialOpTable,
    pub zero: ElementId,
    pub one: Option<ElementId>,
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Effect,
    Generalized,
}

fn err(line: usize, reason: impl Into<String>) -> InputError {
    InputError::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_index(tok: &str, line: usize, order: usize) -> Result<usize, InputError> {
    let v: usize = tok
        .parse()
        .map_err(|_| err(line, format!("expected an element index, found {tok:?}")))?;
    if v >= order {
        return Err(err(
            line,
            format!("element {v} out of range for order {order}"),
        ));
    }
    Ok(v)
}

/// Parses a document of either kind without checking any axioms.
pub fn parse_raw(text: &str) -> Result<RawAlgebra, InputError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (n, header) = lines.next().ok_or_else(|| err(1, "empty document"))?;
    let kind = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["efa", "1"] => Kind::Effect,
        ["gea", "1"] => Kind::Generalized,
        _ => {
            return Err(err(
                n,
                format!("expected `efa 1` or `gea 1`, found {header:?}"),
            ))
        }
    };

    let mut order: Option<usize> = None;
    let mut zero = None;
    let mut one = None;
    let mut names: Vec<Option<String>> = Vec::new();
    let mut table = PartialOpTable::undefined(0);
    let mut last_line = n;

    for (n, line) in lines {
        last_line = n;
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let args: Vec<&str> = rest.split_whitespace().collect();
        let need_order = || order.ok_or_else(|| err(n, format!("`{keyword}` before `order`")));
        match keyword {
            "order" => {
                if order.is_some() {
                    return Err(err(n, "duplicate `order`"));
                }
                let [tok] = args[..] else {
                    return Err(err(n, "`order` takes one argument"));
                };
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(n, format!("invalid order {tok:?}")))?;
                if v == 0 {
                    return Err(err(n, "order must be positive"));
                }
                order = Some(v);
                table = PartialOpTable::undefined(v);
                names = vec![None; v];
            }
            "zero" | "one" => {
                let ord = need_order()?;
                let [tok] = args[..] else {
                    return Err(err(n, format!("`{keyword}` takes one argument")));
                };
                let v = ElementId::new(parse_index(tok, n, ord)?);
                let slot = if keyword == "zero" {
                    &mut zero
                } else {
                    &mut one
                };
                if kind == Kind::Generalized && keyword == "one" {
                    return Err(err(n, "`one` is not allowed in a `gea` document"));
                }
                if slot.replace(v).is_some() {
                    return Err(err(n, format!("duplicate `{keyword}`")));
                }
            }
            "name" => {
                let ord = need_order()?;
                let (idx, label) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err(n, "`name` takes an index and a label"))?;
                let i = parse_index(idx, n, ord)?;
                let label = label.trim();
                if names[i].is_some() {
                    return Err(err(n, format!("element {i} named twice")));
                }
                names[i] = Some(label.to_string());
            }
            "sum" => {
                let ord = need_order()?;
                let [a, b, c] = args[..] else {
                    return Err(err(n, "`sum` takes three arguments"));
                };
                let a = ElementId::new(parse_index(a, n, ord)?);
                let b = ElementId::new(parse_index(b, n, ord)?);
                let c = ElementId::new(parse_index(c, n, ord)?);
                match table.get(a, b) {
                    Some(prev) if prev != c => {
                        return Err(err(
                            n,
                            format!("{a} + {b} defined twice, as {prev} and as {c}"),
                        ))
                    }
                    _ => table.set_symmetric(a, b, Some(c)),
                }
            }
            _ => return Err(err(n, format!("unknown keyword {keyword:?}"))),
        }
    }

    if order.is_none() {
        return Err(err(last_line, "missing `order`"));
    }
    let zero = zero.ok_or_else(|| err(last_line, "missing `zero`"))?;
    if kind == Kind::Effect && one.is_none() {
        return Err(err(last_line, "missing `one`"));
    }
    let named = names.iter().filter(|x| x.is_some()).count();
    let names = match named {
        0 => None,
        k if k == names.len() => Some(names.into_iter().map(Option::unwrap).collect()),
        _ => {
            let missing = names.iter().position(Option::is_none).unwrap();
            return Err(err(
                last_line,
                format!("element {missing} has no name; name all or none"),
            ));
        }
    };
    Ok(RawAlgebra {
        kind,
        table,
        zero,
        one,
        names,
    })
}

/// Parses and validates an effect algebra document.
pub fn parse_effect_algebra(text: &str) -> Result<FiniteEffectAlgebra> {
    let raw = parse_raw(text)?;
    if raw.kind != Kind::Effect {
        return Err(err(1, "expected an `efa 1` document").into());
    }
    let e = FiniteEffectAlgebra::new(raw.table, raw.zero, raw.one.expect("checked"))?;
    match raw.names {
        Some(names) => e.with_names(names),
        None => Ok(e),
    }
}

pub fn parse_generalized(text: &str) -> Result<FiniteGeneralizedEffectAlgebra> {
    let raw = parse_raw(text)?;
    if raw.kind != Kind::Generalized {
        return Err(err(1, "expected a `gea 1` document").into());
    }
    FiniteGeneralizedEffectAlgebra::new(raw.table, raw.zero)
}

fn write_sums(out: &mut String, t: &PartialOpTable) {
    for a in t.ids() {
        for b in t.ids().skip(a.index()) {
            if let Some(c) = t.get(a, b) {
                let _ = writeln!(out, "sum {a} {b} {c}");
            }
        }
    }
}

pub fn serialize(e: &FiniteEffectAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "efa 1\norder {}\nzero {}\none {}",
        e.order(),
        e.zero(),
        e.one()
    );
    if let Some(names) = e.names() {
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(out, "name {i} {name}");
        }
    }
    write_sums(&mut out, e.table());
    out
}

pub fn serialize_generalized(g: &FiniteGeneralizedEffectAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gea 1\norder {}\nzero {}", g.order(), g.zero());
    write_sums(&mut out, g.table());
    out
}

/// Writes a map from sharp elements to sets of meager elements, one line
/// per sharp element: `h S M1 M2 ...`.
pub fn serialize_h(h: &[ElementSet]) -> String {
    let mut out = String::from("h 1\n");
    for (s, set) in h.iter().enumerate() {
        let _ = write!(out, "h {s}");
        for m in set {
            let _ = write!(out, " {m}");
        }
        out.push('\n');
    }
    out
}

/// Reads the output of [`serialize_h`] given the size of the meager carrier.
pub fn parse_h(text: &str, meager_order: usize) -> Result<Vec<ElementSet>, InputError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, "h 1")) => {}
        Some((n, other)) => return Err(err(n, format!("expected `h 1`, found {other:?}"))),
        None => return Err(err(1, "empty document")),
    }
    let mut out = Vec::new();
    for (n, line) in lines {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("h") {
            return Err(err(n, "expected `h S ...`"));
        }
        let s: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(n, "missing sharp index"))?;
        if s != out.len() {
            return Err(err(
                n,
                format!("expected sharp index {}, found {s}", out.len()),
            ));
        }
        let mut set = ElementSet::empty(meager_order);
        for t in toks {
            set.insert(ElementId::new(parse_index(t, n, meager_order)?));
        }
        out.push(set);
    }
    Ok(out)
}
