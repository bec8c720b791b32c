//! Source-problem instances and their text formats.
//!
//! SAT: header `p wp2sat <variables> <clauses> <k>` then one clause `x y`
//! per line (0-based variables). MSS: a line `<l> <h> <J>` then a line with
//! the `l` positive integers. `#` comments and blank lines are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::io::content_lines;
use crate::graph::VertexSet;

/// All-positive 2-clauses over variables `0..variables`, at most `k` true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatInstance {
    variables: usize,
    clauses: Vec<(usize, usize)>,
    k: usize,
}

impl SatInstance {
    /// Clauses are normalised to `(min, max)` and deduplicated, keeping the
    /// first occurrence. At least one clause is required and `x ∨ x` is rejected.
    pub fn new(variables: usize, clauses: Vec<(usize, usize)>, k: usize) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::precondition(
                "a SAT instance needs at least one clause",
            ));
        }
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(clauses.len());
        for (x, y) in clauses {
            if x >= variables || y >= variables {
                return Err(Error::precondition(format!(
                    "clause ({x} ∨ {y}) uses a variable outside 0..{variables}"
                )));
            }
            if x == y {
                return Err(Error::precondition(format!(
                    "clause ({x} ∨ {x}) repeats its variable"
                )));
            }
            let c = (x.min(y), x.max(y));
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ok(SatInstance {
            variables,
            clauses: out,
            k,
        })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn clauses(&self) -> &[(usize, usize)] {
        &self.clauses
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn satisfied_by(&self, positives: &VertexSet) -> bool {
        self.clauses
            .iter()
            .all(|&(x, y)| positives.contains(x) || positives.contains(y))
    }

    /// Satisfying and within the budget.
    pub fn accepts(&self, positives: &VertexSet) -> bool {
        positives.len() <= self.k
            && positives.iter().all(|x| x < self.variables)
            && self.satisfied_by(positives)
    }
}

/// Split `a` into `h` groups with sum of squared group sums at most `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MssInstance {
    a: Vec<u64>,
    h: usize,
    j: u64,
}

impl MssInstance {
    pub fn new(a: Vec<u64>, h: usize, j: u64) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::precondition(
                "an MSS instance needs at least one integer",
            ));
        }
        if a.contains(&0) {
            return Err(Error::precondition("MSS integers must be positive"));
        }
        if h == 0 {
            return Err(Error::precondition("MSS needs at least one part"));
        }
        Ok(MssInstance { a, h, j })
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// Sum of squared part sums; `parts` must partition the indices into at most h groups.
    pub fn cost(&self, parts: &[Vec<usize>]) -> Result<u64> {
        if parts.len() > self.h {
            return Err(Error::precondition(format!(
                "{} parts, at most {} allowed",
                parts.len(),
                self.h
            )));
        }
        let mut seen = vec![false; self.a.len()];
        let mut total = 0;
        for p in parts {
            let mut s = 0;
            for &j in p {
                if j >= self.a.len() || std::mem::replace(&mut seen[j], true) {
                    return Err(Error::precondition(format!(
                        "index {j} is out of range or repeated"
                    )));
                }
                s += self.a[j];
            }
            total += s * s;
        }
        if seen.contains(&false) {
            return Err(Error::precondition("parts do not cover every index"));
        }
        Ok(total)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers<T: std::str::FromStr>(line_no: usize, line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(line_no, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

pub fn parse_sat(text: &str) -> Result<SatInstance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| {
        parse_err(
            1,
            "empty input, expected `p wp2sat <variables> <clauses> <k>`",
        )
    })?;
    let rest = header
        .strip_prefix("p wp2sat")
        .ok_or_else(|| parse_err(hl, "header must start with `p wp2sat`"))?;
    let head: Vec<usize> = numbers(hl, rest)?;
    let [variables, count, k] = head[..] else {
        return Err(parse_err(hl, "header needs exactly three numbers"));
    };
    let mut clauses = Vec::with_capacity(count);
    for (ln, line) in lines {
        let pair: Vec<usize> = numbers(ln, line)?;
        let [x, y] = pair[..] else {
            return Err(parse_err(ln, "a clause is exactly two variables"));
        };
        if clauses.len() == count {
            return Err(parse_err(
                ln,
                format!("more than the declared {count} clauses"),
            ));
        }
        clauses.push((x, y));
    }
    if clauses.len() != count {
        return Err(parse_err(
            hl,
            format!("declared {count} clauses but found {}", clauses.len()),
        ));
    }
    SatInstance::new(variables, clauses, k).map_err(|e| parse_err(hl, e.to_string()))
}

pub fn write_sat(s: &SatInstance) -> String {
    let mut out = format!("p wp2sat {} {} {}\n", s.variables, s.clauses.len(), s.k);
    for &(x, y) in &s.clauses {
        let _ = writeln!(out, "{x} {y}");
    }
    out
}

pub fn parse_mss(text: &str) -> Result<MssInstance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input, expected `l h J`"))?;
    let head: Vec<u64> = numbers(hl, header)?;
    let [l, h, j] = head[..] else {
        return Err(parse_err(hl, "header needs exactly three numbers `l h J`"));
    };
    let (al, aline) = lines
        .next()
        .ok_or_else(|| parse_err(hl, "missing the line of integers"))?;
    let a: Vec<u64> = numbers(al, aline)?;
    if a.len() as u64 != l {
        return Err(parse_err(
            al,
            format!("expected {l} integers, found {}", a.len()),
        ));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "unexpected extra line"));
    }
    MssInstance::new(a, h as usize, j).map_err(|e| parse_err(al, e.to_string()))
}

pub fn write_mss(m: &MssInstance) -> String {
    let a: Vec<String> = m.a.iter().map(u64::to_string).collect();
    format!("{} {} {}\n{}\n", m.a.len(), m.h, m.j, a.join(" "))
}
