//! Edge-list file formats.
//!
//! The native format is line-oriented: a header `n m`, then m lines `u v`
//! with 0-based vertex ids; `#` starts a comment anywhere on a line. Files
//! whose first significant line starts with `p` or `c` are read as
//! DIMACS-style instead: `c` comment lines, one `p edge <n> <m>` problem
//! line, then `e <u> <v>` lines with 1-based ids. Writing always produces
//! the native format with edges sorted, so written files are canonical and
//! diffable.

use std::fs;
use std::path::Path;

use crate::graph::Graph;
use crate::{Error, Result};

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with('p') || first.starts_with('c') {
        parse_dimacs(text)
    } else {
        parse_native(text)
    }
}

fn parse_native(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        line_count = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match header {
            None => {
                let (n, m) = two_numbers(content, line, "expected header `n m`")?;
                header = Some((n, m));
                edges.reserve(m);
            }
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("more than the {m} edges announced in the header"),
                    });
                }
                let (u, v) = two_numbers(content, line, "expected edge `u v`")?;
                edges.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: line_count.max(1),
        msg: "missing header `n m`".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: line_count.max(1),
            msg: format!("header announced {m} edges but the file has {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        line_count = line;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: "duplicate problem line".into(),
                    });
                }
                if tokens.next() != Some("edge") {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `p edge <n> <m>`".into(),
                    });
                }
                let rest = tokens.collect::<Vec<_>>().join(" ");
                let (n, m) = two_numbers(&rest, line, "expected `p edge <n> <m>`")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (_, m) = header.ok_or(Error::Parse {
                    line,
                    msg: "edge line before the problem line".into(),
                })?;
                if edges.len() == m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("more than the {m} edges announced in the problem line"),
                    });
                }
                let rest = tokens.collect::<Vec<_>>().join(" ");
                let (u, v) = two_numbers(&rest, line, "expected `e <u> <v>`")?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse {
                        line,
                        msg: "vertex ids are 1-based in this format".into(),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unrecognized line: {content}"),
                });
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: line_count.max(1),
        msg: "missing problem line `p edge <n> <m>`".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: line_count.max(1),
            msg: format!(
                "problem line announced {m} edges but the file has {}",
                edges.len()
            ),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn two_numbers(content: &str, line: usize, what: &str) -> Result<(usize, usize)> {
    let mut it = content.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or(())
            .and_then(|t| t.parse::<usize>().map_err(|_| ()))
            .map_err(|_| Error::Parse {
                line,
                msg: format!("{what}, got `{content}`"),
            })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: format!("{what}, got `{content}`"),
        });
    }
    Ok((a, b))
}

/// Canonical native serialisation: header, then edges in sorted order.
pub fn graph_to_string(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<()> {
    fs::write(path, graph_to_string(g))?;
    Ok(())
}

/// Vertex ids separated by commas and/or whitespace, e.g. "0, 2, 5".
pub fn parse_id_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("`{t}` is not a vertex id"),
            })
        })
        .collect()
}
