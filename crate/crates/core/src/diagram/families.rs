use super::{CoxeterDiagram, DiagramError};

/// Named families of simply laced diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramType {
    A(usize),
    TildeA(usize),
    D(usize),
    TildeD(usize),
    E(usize),
    TildeE(usize),
    Y(usize, usize, usize),
}

fn invalid(msg: impl Into<String>) -> DiagramError {
    DiagramError::InvalidParameter(msg.into())
}

impl DiagramType {
    /// Parses `A5`, `tildeA11`, `D4`, `tildeD5`, `E8`, `tildeE6`, `Y555`
    /// (single-digit arms) or `Y10,2,1`.
    pub fn parse(name: &str) -> Result<DiagramType, DiagramError> {
        let bad = || DiagramError::UnknownName(name.to_string());
        let (tilde, rest) = match name.strip_prefix("tilde") {
            Some(r) => (true, r),
            None => (false, name),
        };
        let mut chars = rest.chars();
        let fam = chars.next().ok_or_else(bad)?;
        let num = chars.as_str();
        if fam == 'Y' && !tilde {
            let arms: Vec<usize> = if num.contains(',') {
                num.split(',').map(|s| s.parse().map_err(|_| bad())).collect::<Result<_, _>>()?
            } else {
                num.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
            };
            if arms.len() != 3 {
                return Err(bad());
            }
            return Ok(DiagramType::Y(arms[0], arms[1], arms[2]));
        }
        let n: usize = num.parse().map_err(|_| bad())?;
        Ok(match (fam, tilde) {
            ('A', false) => DiagramType::A(n),
            ('A', true) => DiagramType::TildeA(n),
            ('D', false) => DiagramType::D(n),
            ('D', true) => DiagramType::TildeD(n),
            ('E', false) => DiagramType::E(n),
            ('E', true) => DiagramType::TildeE(n),
            _ => return Err(bad()),
        })
    }

    pub fn name(&self) -> String {
        match *self {
            DiagramType::A(n) => format!("A{n}"),
            DiagramType::TildeA(n) => format!("tildeA{n}"),
            DiagramType::D(n) => format!("D{n}"),
            DiagramType::TildeD(n) => format!("tildeD{n}"),
            DiagramType::E(n) => format!("E{n}"),
            DiagramType::TildeE(n) => format!("tildeE{n}"),
            DiagramType::Y(p, q, r) if p < 10 && q < 10 && r < 10 => format!("Y{p}{q}{r}"),
            DiagramType::Y(p, q, r) => format!("Y{p},{q},{r}"),
        }
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        match *self {
            DiagramType::A(n) | DiagramType::D(n) | DiagramType::E(n) => n,
            DiagramType::TildeA(n) | DiagramType::TildeD(n) | DiagramType::TildeE(n) => n + 1,
            DiagramType::Y(p, q, r) => p + q + r + 1,
        }
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        match *self {
            DiagramType::TildeA(n) if n >= 2 => n + 1,
            DiagramType::TildeA(_) => 1,
            _ => self.node_count() - 1,
        }
    }

    pub fn build(&self) -> Result<CoxeterDiagram, DiagramError> {
        let d = match *self {
            DiagramType::A(n) => {
                if n == 0 {
                    return Err(invalid("A_n needs n >= 1"));
                }
                let labels = (1..=n).map(|i| i.to_string()).collect();
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                CoxeterDiagram::new(labels, &edges, None)?
            }
            DiagramType::TildeA(n) => {
                if n < 2 {
                    return Err(invalid("tildeA_n needs n >= 2 for a simple graph"));
                }
                let labels = (0..=n).map(|i| i.to_string()).collect();
                let mut edges: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
                edges.push((0, n));
                CoxeterDiagram::new(labels, &edges, None)?
            }
            DiagramType::D(n) => {
                if n < 4 {
                    return Err(invalid("D_n needs n >= 4"));
                }
                return Ok(y_tree(n - 3, 1, 1)?.with_bipartition());
            }
            DiagramType::TildeD(n) => {
                if n < 4 {
                    return Err(invalid("tildeD_n needs n >= 4"));
                }
                // spine 1..n-1 with two extra leaves on each end
                let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
                let mut edges: Vec<_> = (2..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((0, 2));
                edges.push((1, 2));
                edges.push((n - 2, n - 1));
                edges.push((n - 2, n));
                CoxeterDiagram::new(labels, &edges, None)?
            }
            DiagramType::E(n) => {
                if !(6..=8).contains(&n) {
                    return Err(invalid("E_n needs 6 <= n <= 8"));
                }
                return Ok(y_tree(n - 4, 2, 1)?.with_bipartition());
            }
            DiagramType::TildeE(n) => {
                let (p, q, r) = match n {
                    6 => (2, 2, 2),
                    7 => (3, 3, 1),
                    8 => (5, 2, 1),
                    _ => return Err(invalid("tildeE_n needs 6 <= n <= 8")),
                };
                return Ok(y_tree(p, q, r)?.with_bipartition());
            }
            DiagramType::Y(p, q, r) => y_tree(p, q, r)?,
        };
        Ok(d.with_bipartition())
    }

    /// Finite-type test for `Y_pqr`.
    pub fn y_is_finite(p: usize, q: usize, r: usize) -> bool {
        // 1/(p+1) + 1/(q+1) + 1/(r+1) > 1, cleared of denominators
        let (a, b, c) = (p + 1, q + 1, r + 1);
        b * c + a * c + a * b > a * b * c
    }

    /// Affine-type test for `Y_pqr`.
    pub fn y_is_affine(p: usize, q: usize, r: usize) -> bool {
        let (a, b, c) = (p + 1, q + 1, r + 1);
        b * c + a * c + a * b == a * b * c
    }
}

/// Triple node `0` with arms `a1..ap`, `b1..bq`, `c1..cr`.
fn y_tree(p: usize, q: usize, r: usize) -> Result<CoxeterDiagram, DiagramError> {
    let mut labels = vec!["0".to_string()];
    let mut edges = Vec::new();
    for (arm, len) in [('a', p), ('b', q), ('c', r)] {
        let mut prev = 0;
        for k in 1..=len {
            labels.push(format!("{arm}{k}"));
            let cur = labels.len() - 1;
            edges.push((prev, cur));
            prev = cur;
        }
    }
    CoxeterDiagram::new(labels, &edges, None)
}
