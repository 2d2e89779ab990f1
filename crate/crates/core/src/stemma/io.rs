use std::collections::{BTreeMap, HashMap};

use serde_json::Value;

use crate::ParseError;

use super::{Feature, Stemma};

fn unquote(tok: &str) -> Option<String> {
    let tok = tok.trim();
    if let Some(inner) = tok.strip_prefix('"') {
        let inner = inner.strip_suffix('"')?;
        return (!inner.contains('"')).then(|| inner.to_string());
    }
    let ok = !tok.is_empty() && tok.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '.');
    ok.then(|| tok.to_string())
}

/// Reads the dot subset `digraph [name] { A -> B; ... }`: one edge or one
/// bare node per line, `//` comments, quoted or plain identifiers.
pub fn parse_dot(text: &str) -> Result<Stemma, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut node = |name: String| -> usize {
        let next = names.len();
        *index.entry(name.clone()).or_insert_with(|| {
            names.push(name);
            next
        })
    };
    let mut edges = Vec::new();
    let mut state = 0; // 0: before header, 1: body, 2: closed
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let l = raw.split("//").next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        match state {
            0 => {
                let rest = l
                    .strip_prefix("digraph")
                    .ok_or_else(|| ParseError::new(line, "expected `digraph {`"))?;
                let rest = rest
                    .trim()
                    .strip_suffix('{')
                    .ok_or_else(|| ParseError::new(line, "expected `{` after digraph"))?;
                if !rest.trim().is_empty() && unquote(rest).is_none() {
                    return Err(ParseError::new(line, format!("bad graph name `{}`", rest.trim())));
                }
                state = 1;
            }
            1 if l == "}" => state = 2,
            1 => {
                let stmt = l.strip_suffix(';').unwrap_or(l);
                let parts: Vec<&str> = stmt.split("->").collect();
                let ids: Option<Vec<String>> = parts.iter().map(|p| unquote(p)).collect();
                let ids = ids.ok_or_else(|| ParseError::new(line, format!("cannot read `{l}`")))?;
                match ids.as_slice() {
                    [single] => {
                        node(single.clone());
                    }
                    [a, b] => {
                        let (p, c) = (node(a.clone()), node(b.clone()));
                        edges.push((p, c));
                    }
                    _ => return Err(ParseError::new(line, "one edge per line")),
                }
            }
            _ => return Err(ParseError::new(line, format!("text after closing brace: `{l}`"))),
        }
    }
    if state != 2 {
        return Err(ParseError::new(last_line, "missing closing `}`"));
    }
    Stemma::new(names, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

fn line_of(text: &str, needle: &str) -> usize {
    text.lines()
        .position(|l| l.contains(needle))
        .map_or(0, |i| i + 1)
}

/// Reads a JSON array of features, each an object mapping manuscript
/// names to readings (strings; numbers are read as their decimal text).
pub fn parse_features(text: &str, stemma: &Stemma) -> Result<Vec<Feature>, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    let items = value
        .as_array()
        .ok_or_else(|| ParseError::new(1, "expected an array of features"))?;
    let mut out = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let obj = item
            .as_object()
            .ok_or_else(|| ParseError::new(0, format!("feature {k} is not an object")))?;
        let mut map = BTreeMap::new();
        for (m, v) in obj {
            let reading = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => {
                    return Err(ParseError::new(
                        line_of(text, &format!("\"{m}\"")),
                        format!("feature {k}: reading of {m} must be a string, got {other}"),
                    ))
                }
            };
            map.insert(m.clone(), reading);
        }
        let feature = Feature::from_map(stemma, &map).map_err(|e| {
            let needle = match &e {
                super::StemmaError::UnknownManuscript(m) => format!("\"{m}\""),
                _ => String::new(),
            };
            ParseError::new(line_of(text, &needle), format!("feature {k}: {e}"))
        })?;
        out.push(feature);
    }
    Ok(out)
}
