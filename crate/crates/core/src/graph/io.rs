//! Plain-text graph format: a header line `n m`, then `m` lines `u v`
//! (0-based). Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse().map_err(|_| {
            parse_err(
                line_no,
                format!("{what} `{tok}` is not a non-negative integer"),
            )
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(
            line_no,
            format!("unexpected trailing token `{extra}`"),
        ));
    }
    Ok((a, b))
}

/// Numbered content lines with comments and blanks removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input, expected `n m`"))?;
    let (n, m) = parse_pair(hl, header)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (ln, line) in lines {
        let (u, v) = parse_pair(ln, line)?;
        seen += 1;
        if seen > m {
            return Err(parse_err(ln, format!("more than the declared {m} edges")));
        }
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(parse_err(ln, format!("duplicate edge {u} {v}"))),
            Err(e) => return Err(parse_err(ln, e.to_string())),
        }
    }
    if seen != m {
        return Err(parse_err(
            hl,
            format!("declared {m} edges but found {seen}"),
        ));
    }
    Ok(g)
}

/// Canonical text form: header plus edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u(), e.v());
    }
    s
}

pub fn read_graph_file(
    path: &std::path::Path,
) -> std::io::Result<std::result::Result<Graph, Error>> {
    std::fs::read_to_string(path).map(|t| parse_graph(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn round_trip() {
        let g = named::paw();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a path\n3 2\n\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g, named::path(3));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "3",
            "3 1\n0 0\n",
            "3 1\n0 5\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "2 1\n0 x\n",
            "3 2\n0 1\n1 0\n",
        ] {
            assert!(
                matches!(parse_graph(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }
}
