use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use localturan::graph::{parse_graph6, parse_weighted_edgelist};
use localturan::WeightedGraph;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Wel,
    Json,
}

impl Format {
    fn from_extension(path: &str) -> Option<Format> {
        match Path::new(path).extension()?.to_str()? {
            "g6" => Some(Format::G6),
            "wel" => Some(Format::Wel),
            "json" => Some(Format::Json),
            _ => None,
        }
    }

    /// JSON starts with `{`; an edge list starts with two integers; anything else is graph6.
    fn sniff(text: &str) -> Format {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
        if first.starts_with('{') {
            Format::Json
        } else if first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
            Format::Wel
        } else {
            Format::G6
        }
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

pub fn read_graph(path: &str, format: Option<Format>) -> Result<WeightedGraph, CliError> {
    let text = read_text(path)?;
    let format = format.or_else(|| Format::from_extension(path)).unwrap_or_else(|| Format::sniff(&text));
    let parsed = match format {
        Format::G6 => {
            let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            match lines.as_slice() {
                [one] => parse_graph6(one),
                [] => return Err(CliError::Usage(format!("{path}: no graph6 line"))),
                _ => return Err(CliError::Usage(format!("{path}: expected one graph6 line, found {}", lines.len()))),
            }
        }
        Format::Wel => parse_weighted_edgelist(&text),
        Format::Json => WeightedGraph::from_json_str(&text),
    };
    parsed.map_err(|e| CliError::Usage(format!("{path}: {e}")))
}
