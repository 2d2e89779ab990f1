use std::fmt::Write as _;

use crate::ParseError;

use super::{build_apta, Dfa, Sample};

/// A parsed sample plus color pins given as `(prefix, color)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleFile {
    pub sample: Sample,
    pub fixed: Vec<(Vec<usize>, usize)>,
    fixed_lines: Vec<usize>,
}

impl SampleFile {
    /// Pins resolved to APTA states.
    pub fn fixed_states(&self) -> Result<Vec<(usize, usize)>, ParseError> {
        let apta = build_apta(&self.sample);
        self.fixed
            .iter()
            .zip(&self.fixed_lines)
            .map(|((w, c), &line)| {
                apta.state_of(w)
                    .map(|x| (x, *c))
                    .ok_or_else(|| ParseError::new(line, "fixed prefix is not a prefix of any sample string"))
            })
            .collect()
    }
}

fn numbers(line: usize, l: &str) -> Result<Vec<i64>, ParseError> {
    l.split_whitespace()
        .map(|t| t.parse().map_err(|_| ParseError::new(line, format!("expected an integer, got `{t}`"))))
        .collect()
}

fn word(line: usize, toks: &[i64], symbols: usize) -> Result<Vec<usize>, ParseError> {
    let (&len, syms) = toks
        .split_first()
        .ok_or_else(|| ParseError::new(line, "missing string length"))?;
    if len < 0 || syms.len() != len as usize {
        return Err(ParseError::new(line, format!("length {len} but {} symbols", syms.len())));
    }
    syms.iter()
        .map(|&s| {
            if s < 0 || s as usize >= symbols {
                Err(ParseError::new(line, format!("symbol {s} outside 0..{symbols}")))
            } else {
                Ok(s as usize)
            }
        })
        .collect()
}

/// Abbadingo text: header `N S`, then `N` lines `label len sym...` with
/// label 1 (positive), 0 (negative) or -1 (unlabeled, skipped). Before the
/// header, lines `# fix COLOR LEN SYM...` pin the APTA state of a prefix to
/// a color; other `#` lines are comments.
pub fn parse_abbadingo(text: &str) -> Result<SampleFile, ParseError> {
    let mut pending_fixes = Vec::new();
    let mut header: Option<(usize, usize, usize)> = None;
    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    let mut seen = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if let Some(rest) = l.strip_prefix('#') {
            if let Some(fix) = rest.trim().strip_prefix("fix") {
                if header.is_some() {
                    return Err(ParseError::new(line, "`# fix` lines must precede the header"));
                }
                let toks = numbers(line, fix)?;
                let (&color, w) = toks
                    .split_first()
                    .ok_or_else(|| ParseError::new(line, "`# fix` needs a color and a string"))?;
                if color < 0 {
                    return Err(ParseError::new(line, "negative color"));
                }
                pending_fixes.push((line, color as usize, w.to_vec()));
            }
            continue;
        }
        if l.is_empty() {
            continue;
        }
        let toks = numbers(line, l)?;
        match header {
            None => match toks.as_slice() {
                &[n, s] if n >= 0 && s >= 1 => header = Some((n as usize, s as usize, line)),
                _ => return Err(ParseError::new(line, "header must be `N S` with S >= 1")),
            },
            Some((n, s, _)) => {
                if seen == n {
                    return Err(ParseError::new(line, format!("more than the {n} declared strings")));
                }
                seen += 1;
                let (&label, rest) = toks.split_first().expect("non-empty line");
                let w = word(line, rest, s)?;
                match label {
                    1 => positives.push(w),
                    0 => negatives.push(w),
                    -1 => {}
                    other => return Err(ParseError::new(line, format!("label must be 1, 0 or -1, got {other}"))),
                }
            }
        }
    }
    let (n, s, hline) = header.ok_or_else(|| ParseError::new(0, "missing `N S` header"))?;
    if seen != n {
        return Err(ParseError::new(hline, format!("header declares {n} strings, found {seen}")));
    }
    let mut fixed = Vec::new();
    let mut fixed_lines = Vec::new();
    for (line, color, toks) in pending_fixes {
        fixed.push((word(line, &toks, s)?, color));
        fixed_lines.push(line);
    }
    let sample = Sample::new((0..s).map(|i| i.to_string()).collect(), positives, negatives)
        .map_err(|e| ParseError::new(0, e.to_string()))?;
    Ok(SampleFile {
        sample,
        fixed,
        fixed_lines,
    })
}

/// Graphviz text; accepting states are double circles.
pub fn to_dot(d: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n");
    for (q, &acc) in d.accepting.iter().enumerate() {
        let shape = if acc { "doublecircle" } else { "circle" };
        writeln!(out, "  q{q} [shape={shape}];").unwrap();
    }
    writeln!(out, "  start -> q{};", d.start).unwrap();
    for (q, row) in d.trans.iter().enumerate() {
        for (l, t) in row.iter().enumerate() {
            if let Some(t) = t {
                writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", d.alphabet[l]).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abbadingo_with_fix() {
        let text = "# fix 1 1 0\n# a comment\n3 2\n1 1 0\n0 0\n1 4 0 1 0 0\n";
        let f = parse_abbadingo(text).unwrap();
        assert_eq!(f.sample.positives, vec![vec![0], vec![0, 1, 0, 0]]);
        assert_eq!(f.sample.negatives, vec![Vec::<usize>::new()]);
        assert_eq!(f.fixed, vec![(vec![0], 1)]);
        assert_eq!(f.fixed_states().unwrap(), vec![(1, 1)]);
    }

    #[test]
    fn abbadingo_errors() {
        assert_eq!(parse_abbadingo("2 2\n1 1 0\n").unwrap_err().line, 1);
        assert_eq!(parse_abbadingo("1 2\n1 2 0\n").unwrap_err().line, 2);
        assert_eq!(parse_abbadingo("1 2\n1 1 5\n").unwrap_err().line, 2);
        assert_eq!(parse_abbadingo("1 2\n3 1 0\n").unwrap_err().line, 2);
        assert_eq!(parse_abbadingo("1 2\n# fix 0 0\n1 0\n").unwrap_err().line, 2);
        let f = parse_abbadingo("# fix 0 2 1 1\n1 2\n1 1 0\n").unwrap();
        assert_eq!(f.fixed_states().unwrap_err().line, 1);
    }

    #[test]
    fn dot_lists_states_and_edges() {
        let d = Dfa {
            alphabet: vec!["a".into()],
            start: 0,
            trans: vec![vec![Some(1)], vec![None]],
            accepting: vec![false, true],
        };
        let dot = to_dot(&d);
        assert!(dot.contains("q1 [shape=doublecircle]"));
        assert!(dot.contains("q0 -> q1 [label=\"a\"]"));
        assert!(dot.contains("start -> q0"));
    }
}
