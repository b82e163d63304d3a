//! Plain-text diagram format:
//!
//! ```text
//! nodes: a:b b:w c:-
//! edges: a-b b-c
//! ```
//!
//! Colors are `b` (black), `w` (white) or `-` (none). Either every node is
//! colored or none is. Blank lines and `#` comments are ignored.

use super::{Color, CoxeterDiagram, DiagramError};

impl CoxeterDiagram {
    pub fn to_text(&self) -> String {
        let nodes: Vec<String> = (0..self.len())
            .map(|i| {
                let c = match self.color(i) {
                    Some(Color::Black) => "b",
                    Some(Color::White) => "w",
                    None => "-",
                };
                format!("{}:{c}", self.label(i))
            })
            .collect();
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", self.label(a), self.label(b)))
            .collect();
        format!("nodes: {}\nedges: {}\n", nodes.join(" "), edges.join(" "))
    }

    pub fn parse_text(s: &str) -> Result<CoxeterDiagram, DiagramError> {
        let mut nodes: Option<(usize, &str)> = None;
        let mut edges: Option<(usize, &str)> = None;
        for (k, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("nodes:") {
                nodes = Some((k + 1, rest));
            } else if let Some(rest) = line.strip_prefix("edges:") {
                edges = Some((k + 1, rest));
            } else {
                return Err(DiagramError::Parse {
                    line: k + 1,
                    msg: "expected `nodes:` or `edges:`".into(),
                });
            }
        }
        let (nline, ntext) = nodes.ok_or(DiagramError::Parse {
            line: 1,
            msg: "missing `nodes:` line".into(),
        })?;
        let mut labels = Vec::new();
        let mut colors = Vec::new();
        for tok in ntext.split_whitespace() {
            let (label, c) = tok.rsplit_once(':').ok_or_else(|| DiagramError::Parse {
                line: nline,
                msg: format!("node `{tok}` lacks a `:color` suffix"),
            })?;
            if label.is_empty() || label.contains('-') {
                return Err(DiagramError::Parse {
                    line: nline,
                    msg: format!("bad node label `{label}`"),
                });
            }
            let color = match c {
                "b" => Some(Color::Black),
                "w" => Some(Color::White),
                "-" => None,
                _ => {
                    return Err(DiagramError::Parse {
                        line: nline,
                        msg: format!("unknown color `{c}`"),
                    })
                }
            };
            labels.push(label.to_string());
            colors.push(color);
        }
        let colored = colors.iter().filter(|c| c.is_some()).count();
        let colors = if colored == 0 {
            None
        } else if colored == colors.len() {
            Some(colors.into_iter().map(Option::unwrap).collect())
        } else {
            return Err(DiagramError::Parse {
                line: nline,
                msg: "either all nodes or none must be colored".into(),
            });
        };
        let mut pairs = Vec::new();
        if let Some((eline, etext)) = edges {
            for tok in etext.split_whitespace() {
                let (a, b) = tok.split_once('-').ok_or_else(|| DiagramError::Parse {
                    line: eline,
                    msg: format!("edge `{tok}` is not of the form x-y"),
                })?;
                let ia = labels.iter().position(|l| l == a).ok_or_else(|| DiagramError::UnknownLabel(a.into()))?;
                let ib = labels.iter().position(|l| l == b).ok_or_else(|| DiagramError::UnknownLabel(b.into()))?;
                pairs.push((ia, ib));
            }
        }
        CoxeterDiagram::new(labels, &pairs, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::i26;

    #[test]
    fn round_trip() {
        let d = i26();
        let back = CoxeterDiagram::parse_text(&d.to_text()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn parse_small() {
        let d = CoxeterDiagram::parse_text("# A2\nnodes: p:b l:w\nedges: p-l\n").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.color(0), Some(Color::Black));
        assert!(d.adjacent(0, 1));
        let u = CoxeterDiagram::parse_text("nodes: x:- y:- z:-\nedges: x-y y-z z-x").unwrap();
        assert!(u.colors().is_none());
    }

    #[test]
    fn parse_errors() {
        assert!(CoxeterDiagram::parse_text("edges: a-b").is_err());
        assert!(matches!(
            CoxeterDiagram::parse_text("nodes: a:b b:-"),
            Err(DiagramError::Parse { .. })
        ));
        assert!(matches!(
            CoxeterDiagram::parse_text("nodes: a:b b:w\nedges: a-c"),
            Err(DiagramError::UnknownLabel(_))
        ));
        assert!(matches!(
            CoxeterDiagram::parse_text("nodes: a:b b:b\nedges: a-b"),
            Err(DiagramError::ColoringMismatch(_, _))
        ));
    }
}
