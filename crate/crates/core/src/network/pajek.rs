//! Reader and writer for the directed subset of the Pajek `.net` format, plus
//! `.vec` and `.clu` writers.
//!
//! Accepted input:
//!
//! ```text
//! % comment
//! *Vertices 3
//! 1 "first label"
//! 2 "second" 0.1 0.2 0.5
//! *Arcs
//! 1 2
//! 2 3 2.5
//! ```
//!
//! Vertex lines are optional (missing labels default to the id). Anything
//! after the label on a vertex line, or after the weight on an arc line, is
//! layout information and is ignored. `*Edges` sections are rejected because
//! citation networks are directed.

use std::fmt::{Display, Write as _};

use crate::error::{Error, Result};
use crate::network::{default_labels, Arc, Network};
use crate::weights::ArcWeights;

#[derive(PartialEq)]
enum Section {
    Preamble,
    Vertices,
    Arcs,
}

pub fn parse_pajek(text: &str) -> Result<Network> {
    let mut section = Section::Preamble;
    let mut labels: Vec<String> = Vec::new();
    let mut arcs: Vec<Arc> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(directive) = line.strip_prefix('*') {
            let mut parts = directive.split_whitespace();
            let keyword = parts.next().unwrap_or("").to_ascii_lowercase();
            match keyword.as_str() {
                "vertices" => {
                    if section != Section::Preamble {
                        return Err(Error::parse(line_no, "duplicate *Vertices header"));
                    }
                    let count = parts
                        .next()
                        .ok_or_else(|| Error::parse(line_no, "*Vertices needs a vertex count"))?;
                    let n: usize = count.parse().map_err(|_| {
                        Error::parse(line_no, format!("invalid vertex count {count:?}"))
                    })?;
                    labels = default_labels(n);
                    section = Section::Vertices;
                }
                "arcs" => {
                    if section == Section::Preamble {
                        return Err(Error::parse(line_no, "*Arcs before *Vertices header"));
                    }
                    section = Section::Arcs;
                }
                "edges" => {
                    return Err(Error::parse(
                        line_no,
                        "*Edges section found; citation networks must be directed (*Arcs)",
                    ))
                }
                other => {
                    return Err(Error::parse(
                        line_no,
                        format!("unsupported section *{other}"),
                    ))
                }
            }
            continue;
        }

        match section {
            Section::Preamble => {
                return Err(Error::parse(line_no, "expected *Vertices header"));
            }
            Section::Vertices => {
                let (id, rest) = split_first_token(line);
                let v = parse_id(id, labels.len(), line_no)?;
                if let Some(label) = parse_label(rest, line_no)? {
                    labels[v] = label;
                }
            }
            Section::Arcs => {
                let mut tokens = line.split_whitespace();
                let tail = parse_id(tokens.next().unwrap_or(""), labels.len(), line_no)?;
                let head = match tokens.next() {
                    Some(t) => parse_id(t, labels.len(), line_no)?,
                    None => return Err(Error::parse(line_no, "arc line needs tail and head")),
                };
                let weight = match tokens.next() {
                    None => 1.0,
                    Some(t) => {
                        let w: f64 = t.parse().map_err(|_| {
                            Error::parse(line_no, format!("non-numeric arc weight {t:?}"))
                        })?;
                        if !(w.is_finite() && w >= 0.0) {
                            return Err(Error::parse(
                                line_no,
                                format!("arc weight {t} must be finite and nonnegative"),
                            ));
                        }
                        w
                    }
                };
                arcs.push(Arc::weighted(tail, head, weight));
            }
        }
    }

    if section == Section::Preamble {
        return Err(Error::parse(0, "missing *Vertices header"));
    }
    Ok(Network::build(labels, arcs))
}

fn split_first_token(line: &str) -> (&str, &str) {
    match line.find(char::is_whitespace) {
        Some(pos) => (&line[..pos], line[pos..].trim_start()),
        None => (line, ""),
    }
}

fn parse_id(token: &str, n: usize, line_no: usize) -> Result<usize> {
    let id: usize = token
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid vertex id {token:?}")))?;
    if id == 0 || id > n {
        return Err(Error::parse(
            line_no,
            format!("vertex id {id} out of range 1..{n}"),
        ));
    }
    Ok(id - 1)
}

fn parse_label(rest: &str, line_no: usize) -> Result<Option<String>> {
    if rest.is_empty() {
        return Ok(None);
    }
    if let Some(quoted) = rest.strip_prefix('"') {
        let end = quoted
            .find('"')
            .ok_or_else(|| Error::parse(line_no, "unterminated vertex label"))?;
        return Ok(Some(quoted[..end].to_string()));
    }
    Ok(Some(split_first_token(rest).0.to_string()))
}

/// Writes `net` in Pajek format. Arc weights come from `weights` when given
/// (aligned with `net.arcs()`), otherwise from the arcs themselves.
pub fn write_pajek(net: &Network, weights: Option<&ArcWeights>) -> Result<String> {
    if let Some(w) = weights {
        if w.len() != net.m() {
            return Err(Error::Argument(format!(
                "{} weights given for {} arcs",
                w.len(),
                net.m()
            )));
        }
    }
    let mut out = String::with_capacity(16 * (net.n() + net.m()) + 32);
    writeln!(out, "*Vertices {}", net.n()).unwrap();
    for (v, label) in net.labels().iter().enumerate() {
        writeln!(out, "{} \"{}\"", v + 1, label.replace('"', "'")).unwrap();
    }
    out.push_str("*Arcs\n");
    for (i, a) in net.arcs().iter().enumerate() {
        match weights {
            Some(w) => writeln!(out, "{} {} {}", a.tail + 1, a.head + 1, w.display(i)),
            None => writeln!(out, "{} {} {}", a.tail + 1, a.head + 1, a.weight),
        }
        .unwrap();
    }
    Ok(out)
}

/// Pajek `.vec`: header then one value per line.
pub fn write_vec<T: Display>(values: impl IntoIterator<Item = T>) -> String {
    let values: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    let mut out = format!("*Vertices {}\n", values.len());
    for v in values {
        out.push_str(&v);
        out.push('\n');
    }
    out
}

/// Pajek `.clu`: header then one integer class per line.
pub fn write_clu(classes: &[usize]) -> String {
    write_vec(classes.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let net = parse_pajek("*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n1 2").unwrap();
        assert_eq!(net.n(), 2);
        assert_eq!(net.arcs(), &[Arc::weighted(0, 1, 1.0)]);
        assert_eq!(net.labels(), &["a", "b"]);
    }

    #[test]
    fn loop_is_preserved() {
        let net = parse_pajek("*Vertices 1\n1 \"a\"\n*Arcs\n1 1").unwrap();
        assert_eq!(net.loop_count(), 1);
    }

    #[test]
    fn out_of_range_id_reports_line() {
        let err = parse_pajek("*Vertices 2\n*Arcs\n1 3 2.5").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "vertex id 3 out of range 1..2".into()
            }
        );
    }

    #[test]
    fn rejects_edges_and_bad_weights() {
        let err = parse_pajek("*Vertices 2\n*Edges\n1 2").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_pajek("*Vertices 2\n*Arcs\n1 2 heavy").unwrap_err();
        assert!(err.to_string().contains("non-numeric"));
        assert!(parse_pajek("*Arcs\n1 2").is_err());
        assert!(parse_pajek("*Vertices x").is_err());
        assert!(parse_pajek("*Vertices 2\n1 \"open").is_err());
    }

    #[test]
    fn comments_coordinates_and_unquoted_labels() {
        let text = "% header comment\n*vertices 3\n1 \"a b\" 0.1 0.2 0.5\n2 beta\n\n*arcs\n% arcs\n1 2 0.5 c Blue\n2 3\n";
        let net = parse_pajek(text).unwrap();
        assert_eq!(net.labels(), &["a b", "beta", "3"]);
        assert_eq!(net.arc(0).weight, 0.5);
        assert_eq!(net.m(), 2);
    }

    #[test]
    fn writes_header_and_arc_lines() {
        let net = Network::from_pairs(2, &[(0, 1)]).unwrap();
        let text = write_pajek(&net, None).unwrap();
        assert!(text.starts_with("*Vertices 2\n"));
        assert!(text.contains("\n1 2 1\n"));
        assert_eq!(parse_pajek(&text).unwrap(), net);
    }

    #[test]
    fn vec_and_clu_layout() {
        assert_eq!(write_vec([1.5, 2.0]), "*Vertices 2\n1.5\n2\n");
        assert_eq!(write_clu(&[1, 1, 2]), "*Vertices 3\n1\n1\n2\n");
    }
}
