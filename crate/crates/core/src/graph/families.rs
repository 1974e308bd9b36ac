use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, MAX_VERTICES};

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
    Icosahedron,
    Petersen,
    /// K̄₂ + K₂ₘ: two non-adjacent apices (vertices 0 and 1) joined to every
    /// vertex of a clique on `2..2m+2`.
    JoinCounterexample(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::Icosahedron => f.write_str("icosahedron"),
            Family::Petersen => f.write_str("petersen"),
            Family::JoinCounterexample(m) => write!(f, "join-counterexample:{m}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Accepts `name` or `name:p1,p2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = match s.split_once(':') {
            Some((name, rest)) => (name.trim(), rest.trim()),
            None => (s.trim(), ""),
        };
        let nums = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    let p = p.trim();
                    p.parse::<i64>()
                        .map_err(|_| GraphError::BadParameter(format!("`{p}` is not an integer")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        let positive = |i: usize| -> Result<usize, GraphError> {
            match nums.get(i) {
                Some(&x) if x > 0 => Ok(x as usize),
                Some(&x) => Err(GraphError::BadParameter(format!("{name}: parameter {x} must be positive"))),
                None => Err(GraphError::BadParameter(format!("{name}: missing parameter"))),
            }
        };
        let arity = |k: usize| -> Result<(), GraphError> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(GraphError::BadParameter(format!(
                    "{name} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let family = match name {
            "complete" | "K" => {
                arity(1)?;
                Family::Complete(positive(0)?)
            }
            "cycle" | "C" => {
                arity(1)?;
                Family::Cycle(positive(0)?)
            }
            "complete-bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(positive(0)?, positive(1)?)
            }
            "hypercube" | "Q" => {
                arity(1)?;
                Family::Hypercube(positive(0)?)
            }
            "icosahedron" => {
                arity(0)?;
                Family::Icosahedron
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "join-counterexample" => {
                arity(1)?;
                Family::JoinCounterexample(positive(0)?)
            }
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

fn check_size(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices(n))
    } else {
        Ok(())
    }
}

pub fn generate_family(family: &Family) -> Result<Graph, GraphError> {
    let bad = |msg: &str| Err(GraphError::BadParameter(msg.to_string()));
    match *family {
        Family::Complete(n) => {
            if n == 0 {
                return bad("complete graph needs at least one vertex");
            }
            check_size(n)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs at least 3 vertices");
            }
            check_size(n)?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("complete bipartite sides must be positive");
            }
            check_size(a + b)?;
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Hypercube(d) => {
            if d == 0 {
                return bad("hypercube dimension must be positive");
            }
            if d >= 6 {
                return Err(GraphError::TooManyVertices(1 << d.min(20)));
            }
            let n = 1usize << d;
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| (0..d).map(move |k| (u, u ^ 1 << k)).filter(|&(u, v)| u < v)),
            )
        }
        Family::Icosahedron => {
            let (n, edges) = icosahedron_edges();
            Graph::from_edges(n, edges)
        }
        Family::Petersen => Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
        ),
        Family::JoinCounterexample(m) => {
            if m == 0 {
                return bad("join counterexample needs m >= 1");
            }
            let n = 2 * m + 2;
            check_size(n)?;
            let clique = (2..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let apices = (0..2).flat_map(|a| (2..n).map(move |v| (a, v)));
            Graph::from_edges(n, clique.chain(apices))
        }
    }
}

/// Top vertex 0, upper ring 1..=5, lower ring 6..=10, bottom vertex 11. Lower
/// vertex `6+i` sits below the upper edge `(1+i, 1+(i+1)%5)`.
fn icosahedron_edges() -> (usize, Vec<(usize, usize)>) {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        edges.push((0, up(i)));
        edges.push((up(i), up(i + 1)));
        edges.push((up(i), lo(i)));
        edges.push((up(i + 1), lo(i)));
        edges.push((lo(i), lo(i + 1)));
        edges.push((lo(i), 11));
    }
    (12, edges)
}

/// Consistently oriented triangles of the icosahedron, matching the labels
/// of [`Family::Icosahedron`].
pub fn icosahedron_faces() -> Vec<Vec<usize>> {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), lo(i), up(i + 1)]);
        faces.push(vec![up(i + 1), lo(i), lo(i + 1)]);
        faces.push(vec![lo(i), 11, lo(i + 1)]);
    }
    faces
}
