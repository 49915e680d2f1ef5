//! Text formats.
//!
//! Digraphs: a header line `n m`, then `m` lines `u v` for arcs `u -> v`
//! with 0-based ids. `#` starts a comment and blank lines are ignored. Vertex
//! labels ride along in comments of the form `#! label <id> <name>`, so
//! readers that do not know about them still see a plain digraph.
//!
//! CNF formulas use DIMACS (`p cnf <vars> <clauses>`, `c` comment lines,
//! zero-terminated clauses). Set-cover instances are a header
//! `ground_size num_sets` followed by one line of elements per set.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use safeset_core::reductions::{CnfFormula, SetCoverInstance};
use safeset_core::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments removed, and their 1-based numbers.
fn content_lines(text: &str, comment: impl Fn(&str) -> bool) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !comment(line)).then_some((i + 1, line))
    })
}

fn numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>, ParseError> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| err(line, format!("expected an integer, found `{tok}`"))))
        .collect()
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if let Some(rest) = raw.trim().strip_prefix("#!") {
            let mut parts = rest.split_whitespace();
            if parts.next() == Some("label") {
                let id = parts.next().and_then(|t| t.parse::<usize>().ok());
                match (id, parts.next()) {
                    (Some(id), Some(name)) => labels.push((i + 1, id, name.to_string())),
                    _ => return Err(err(i + 1, "label directive needs `#! label <id> <name>`")),
                }
            }
        }
    }
    let mut lines = content_lines(text, |l| l.starts_with('#')).map(|(i, l)| (i, l.split('#').next().unwrap_or("").trim()));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `n m`"))?;
    let header: Vec<usize> = numbers(hline, header)?;
    let [n, m] = header[..] else {
        return Err(err(hline, "header must be `n m`"));
    };
    let mut d = Digraph::new(n);
    let mut seen = 0;
    for (line, text) in lines {
        let pair: Vec<usize> = numbers(line, text)?;
        let [u, v] = pair[..] else {
            return Err(err(line, "arc line must be `u v`"));
        };
        match d.add_arc(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(err(line, format!("duplicate arc {u} {v}"))),
            Err(e) => return Err(err(line, e.to_string())),
        }
        seen += 1;
        if seen > m {
            return Err(err(line, format!("more arcs than the {m} declared in the header")));
        }
    }
    if seen < m {
        return Err(err(hline, format!("header declares {m} arcs, found {seen}")));
    }
    for (line, id, name) in labels {
        d.set_label(id, name).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(d)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", d.n(), d.arc_count());
    for (v, name) in d.labels() {
        let _ = writeln!(s, "#! label {v} {name}");
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// DIMACS CNF; clauses wider than `max_width` are rejected.
pub fn parse_dimacs(text: &str, max_width: usize) -> Result<CnfFormula, ParseError> {
    let mut header = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text, |l| l.starts_with('c')) {
        last_line = line;
        if l.starts_with('%') {
            break;
        }
        if let Some(rest) = l.strip_prefix('p') {
            if header.is_some() {
                return Err(err(line, "second `p` line"));
            }
            let mut parts = rest.split_whitespace();
            if parts.next() != Some("cnf") {
                return Err(err(line, "expected `p cnf <vars> <clauses>`"));
            }
            let nums: Vec<usize> = numbers(line, &parts.collect::<Vec<_>>().join(" "))?;
            let [n, m] = nums[..] else {
                return Err(err(line, "expected `p cnf <vars> <clauses>`"));
            };
            header = Some((line, n, m));
            continue;
        }
        let Some((_, n, _)) = header else {
            return Err(err(line, "clause before the `p cnf` line"));
        };
        for lit in numbers::<i64>(line, l)? {
            if lit == 0 {
                if current.is_empty() {
                    return Err(err(line, "empty clause"));
                }
                if current.len() > max_width {
                    return Err(err(line, format!("clause has {} literals, at most {max_width} allowed", current.len())));
                }
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > n {
                return Err(err(line, format!("literal {lit} outside x1..x{n}")));
            } else {
                current.push(lit as i32);
            }
        }
    }
    let (hline, n, m) = header.ok_or_else(|| err(1, "missing `p cnf` line"))?;
    if !current.is_empty() {
        return Err(err(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(err(hline, format!("header declares {m} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(n, clauses, max_width).map_err(|e| err(hline, e.to_string()))
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        for l in c {
            let _ = write!(s, "{l} ");
        }
        s.push_str("0\n");
    }
    s
}

pub fn parse_setcover(text: &str) -> Result<SetCoverInstance, ParseError> {
    let mut lines = content_lines(text, |l| l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `ground_size num_sets`"))?;
    let header: Vec<usize> = numbers(hline, header)?;
    let [ground, m] = header[..] else {
        return Err(err(hline, "header must be `ground_size num_sets`"));
    };
    let mut sets = Vec::with_capacity(m);
    for (line, l) in lines {
        if sets.len() == m {
            return Err(err(line, format!("more than the {m} sets declared")));
        }
        let set: Vec<usize> = numbers(line, l)?;
        if let Some(&e) = set.iter().find(|&&e| e == 0 || e > ground) {
            return Err(err(line, format!("element {e} outside 1..={ground}")));
        }
        sets.push(set);
    }
    if sets.len() < m {
        return Err(err(hline, format!("header declares {m} sets, found {}", sets.len())));
    }
    // an empty set cannot be written as a line, so only range errors remain
    SetCoverInstance::new(ground, sets).map_err(|e| err(hline, e.to_string()))
}

pub fn write_setcover(inst: &SetCoverInstance) -> String {
    let mut s = format!("{} {}\n", inst.ground_size, inst.sets.len());
    for set in &inst.sets {
        let line: Vec<String> = set.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Writes to standard output; a closed pipe ends the process quietly.
pub fn emit(text: &str) -> std::io::Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => r,
    }
}

/// Writes a file, or standard output for `-`.
pub fn write_output(path: &Path, text: &str) -> std::io::Result<()> {
    if path.as_os_str() == "-" {
        emit(text)
    } else {
        std::fs::write(path, text)
    }
}
