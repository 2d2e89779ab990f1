use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ParseError;

use super::{Instance, PartialGraph};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    labels: BTreeMap<usize, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: usize,
    names: Vec<String>,
    graphs: Vec<GraphFile>,
}

/// `{"n": 7, "names": [...], "graphs": [{"edges": [[0,4], ...],
/// "labels": {"0": "1", ...}}]}`; labels map vertex ids to names.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    if file.names.len() != file.n {
        return Err(ParseError::new(
            0,
            format!("n is {} but {} names are listed", file.n, file.names.len()),
        ));
    }
    let mut graphs = Vec::with_capacity(file.graphs.len());
    for (i, g) in file.graphs.iter().enumerate() {
        let mut labels = vec![None; file.n];
        for (&v, name) in &g.labels {
            let a = file
                .names
                .iter()
                .position(|m| m == name)
                .ok_or_else(|| ParseError::new(0, format!("graph {i}: unknown name {name}")))?;
            if v >= file.n {
                return Err(ParseError::new(0, format!("graph {i}: vertex {v} out of range")));
            }
            labels[v] = Some(a);
        }
        let g = PartialGraph::new(file.n, &g.edges, labels)
            .map_err(|e| ParseError::new(0, format!("graph {i}: {e}")))?;
        graphs.push(g);
    }
    Instance::new(file.names, graphs).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn write_instance(inst: &Instance) -> String {
    let file = InstanceFile {
        n: inst.n(),
        names: inst.names.clone(),
        graphs: inst
            .graphs
            .iter()
            .map(|g| GraphFile {
                edges: g.edges.clone(),
                labels: g
                    .labels
                    .iter()
                    .enumerate()
                    .filter_map(|(v, l)| l.map(|a| (v, inst.names[a].clone())))
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}
