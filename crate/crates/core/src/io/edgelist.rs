//! Line-oriented edge lists: a header `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`. Everything after a `#` is a comment.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-comment content lines with their 1-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

/// Whitespace-separated values of type `T` with their 1-based columns.
pub(crate) fn tokens<T: std::str::FromStr>(line_no: usize, body: &str, expected: &str) -> Result<Vec<(T, usize)>> {
    let mut out = Vec::new();
    let mut rest = body;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let token_len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
        let token = &rest[start..start + token_len];
        let column = offset + start + 1;
        let value = token
            .parse::<T>()
            .map_err(|_| parse_err(line_no, column, format!("expected {expected}, found `{token}`")))?;
        out.push((value, column));
        offset += start + token_len;
        rest = &rest[start + token_len..];
    }
    Ok(out)
}

pub(crate) fn numbers(line_no: usize, body: &str) -> Result<Vec<(usize, usize)>> {
    tokens(line_no, body, "a non-negative integer")
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return Err(parse_err(1, 1, "missing header `n m`"));
    };
    let h = numbers(hl, header)?;
    if h.len() != 2 {
        return Err(parse_err(hl, 1, format!("header must be `n m`, found {} fields", h.len())));
    }
    let (n, m) = (h[0].0, h[1].0);
    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = hl;
    for (ln, body) in lines {
        last_line = ln;
        let f = numbers(ln, body)?;
        if f.len() != 2 {
            return Err(parse_err(ln, 1, format!("edge line must be `u v`, found {} fields", f.len())));
        }
        let ((u, _), (v, cv)) = (f[0], f[1]);
        if pairs.len() == m {
            return Err(parse_err(ln, 1, format!("more than the {m} edges declared in the header")));
        }
        if v >= n {
            return Err(parse_err(ln, cv, format!("vertex {v} out of range 0..{n}")));
        }
        if u >= v {
            return Err(parse_err(ln, f[0].1, format!("edge endpoints must satisfy u < v, found {u} {v}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(ln, 1, format!("duplicate edge {u} {v}")));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(parse_err(
            last_line,
            1,
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::from_edges(n, pairs)
}

/// Edge list text; each entry of `comments` becomes a leading `# ` line.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        s.push_str("# ");
        s.push_str(c);
        s.push('\n');
    }
    s.push_str(&format!("{} {}\n", g.n(), g.m()));
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn round_trip() {
        let g = complete_graph(5);
        let text = write_edge_list(&g, &["K5".into()]);
        assert!(text.starts_with("# K5\n5 10\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# hi\n\n3 2 # header\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    fn err_pos(text: &str) -> (usize, usize, String) {
        match parse_edge_list(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics() {
        let (l, c, _) = err_pos("3 1\n0 x\n");
        assert_eq!((l, c), (2, 3));
        let (l, c, _) = err_pos("3 1\n0   7\n");
        assert_eq!((l, c), (2, 5));
        let (l, _, m) = err_pos("3 2\n0 1\n");
        assert_eq!(l, 2);
        assert!(m.contains("declares 2"));
        let (l, _, m) = err_pos("3 2\n0 1\n0 1\n");
        assert_eq!(l, 3);
        assert!(m.contains("duplicate"));
        let (_, _, m) = err_pos("3 1\n2 1\n");
        assert!(m.contains("u < v"));
        let (l, _, _) = err_pos("");
        assert_eq!(l, 1);
        let (l, _, _) = err_pos("3 1 4\n");
        assert_eq!(l, 1);
        let (l, _, _) = err_pos("3 1\n0 1\n1 2\n");
        assert_eq!(l, 3);
    }
}
