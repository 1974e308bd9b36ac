use std::io::Read;
use std::path::Path;

use clap::Args;
use emn::embedding::parse_rot;
use emn::graph::{parse_graph6, parse_graph6_lines};
use emn::{CombinatorialMap, Edge, Graph};

use crate::Failure;

#[derive(Debug, Args)]
pub struct GraphInput {
    /// A graph in graph6 format.
    #[arg(long, value_name = "GRAPH6", conflicts_with = "input")]
    pub g6: Option<String>,
    /// A file with one graph6 graph per line; `-` reads standard input.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<String>,
}

impl GraphInput {
    pub fn is_given(&self) -> bool {
        self.g6.is_some() || self.input.is_some()
    }

    pub fn read(&self) -> Result<Vec<Graph>, Failure> {
        if let Some(text) = &self.g6 {
            return parse_graph6(text).map(|g| vec![g]).map_err(|e| Failure::Input(e.to_string()));
        }
        let Some(path) = &self.input else {
            return Err(Failure::Usage("give a graph with --g6 or --in".into()));
        };
        let text = read_text(path)?;
        parse_graph6_lines(&text).map_err(|(line, e)| Failure::Input(format!("{path}:{line}: {e}")))
    }
}

pub fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(Path::new(path)).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

pub fn read_rot(path: &str) -> Result<CombinatorialMap, Failure> {
    parse_rot(&read_text(path)?).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// `0-1,2-3` style edge lists.
pub fn parse_edges(text: &str) -> Result<Vec<Edge>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once('-').ok_or_else(|| format!("`{pair}` is not of the form u-v"))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("`{s}` is not a vertex"));
            Edge::new(parse(a)?, parse(b)?).ok_or_else(|| format!("`{pair}` is a loop"))
        })
        .collect()
}
