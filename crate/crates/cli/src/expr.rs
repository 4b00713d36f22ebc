//! The little input language: `C{n1,n2,...}` for unions of cycles,
//! `S{n1,n2,...}` for cyclic loop conditions.

use std::fmt;

use cyclat_core::CycleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExprKind {
    Union,
    Cond,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub set: CycleSet,
}

/// A syntax error with the byte position it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

/// Parse an expression; duplicates collapse and order is irrelevant, so the
/// result is already canonical.
pub fn parse_expr(s: &str) -> Result<Expr, ParseError> {
    let b = s.as_bytes();
    let kind = match b.first() {
        Some(b'C') => ExprKind::Union,
        Some(b'S') => ExprKind::Cond,
        _ => return err(0, "expected 'C{...}' or 'S{...}'"),
    };
    if b.get(1) != Some(&b'{') {
        return err(1, "expected '{'");
    }
    let mut lengths = Vec::new();
    let mut i = 2;
    loop {
        if b.get(i) == Some(&b'-') {
            return err(i, "negative integers are not allowed");
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == start {
            return if lengths.is_empty() && b.get(i) == Some(&b'}') {
                err(i, "empty set")
            } else {
                err(i, "expected a positive integer")
            };
        }
        let n: u64 = s[start..i]
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                msg: "integer too large".into(),
            })?;
        if n == 0 {
            return err(start, "zero is not a cycle length");
        }
        lengths.push(n);
        match b.get(i) {
            Some(b',') => {
                i += 1;
                while b.get(i) == Some(&b' ') {
                    i += 1;
                }
            }
            Some(b'}') => {
                i += 1;
                break;
            }
            _ => return err(i, "expected ',' or '}'"),
        }
    }
    if i != b.len() {
        return err(i, "trailing input");
    }
    let set = CycleSet::new(lengths).expect("nonempty, no zeros");
    Ok(Expr { kind, set })
}

/// Parse, insisting on a specific kind.
pub fn parse_kind(s: &str, kind: ExprKind) -> Result<Expr, ParseError> {
    let e = parse_expr(s)?;
    if e.kind != kind {
        let want = match kind {
            ExprKind::Union => "a union 'C{...}'",
            ExprKind::Cond => "a condition 'S{...}'",
        };
        return err(0, format!("expected {}", want));
    }
    Ok(e)
}

pub fn render(e: &Expr) -> String {
    match e.kind {
        ExprKind::Union => format!("C{}", e.set),
        ExprKind::Cond => format!("S{}", e.set),
    }
}
