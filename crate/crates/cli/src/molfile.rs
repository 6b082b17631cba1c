//! Line-oriented molecule files.
//!
//! ```text
//! # comment
//! molecule meso
//! center c1: OH CO2H H @c2
//! center c2: OH @c1 H CO2H
//! end
//! ```
//!
//! Slot tokens are given left, top, right, bottom. A token `@id` links to
//! another centre; anything else is a ligand label.

use std::collections::HashMap;

use chirality_core::{ChainMolecule, CentreId, ChiralError, Slot, Tetrahedron};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MolfileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Structure {
        line: usize,
        #[source]
        source: ChiralError,
    },
    #[error("cannot serialise: {0}")]
    Unrepresentable(String),
}

impl MolfileError {
    pub fn line(&self) -> Option<usize> {
        match self {
            MolfileError::Syntax { line, .. } | MolfileError::Structure { line, .. } => Some(*line),
            MolfileError::Unrepresentable(_) => None,
        }
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> MolfileError {
    MolfileError::Syntax { line, msg: msg.into() }
}

fn valid_word(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || c == '#' || c == ':')
}

struct Record {
    line: usize,
    id: String,
    tokens: [String; 4],
}

pub fn parse(text: &str) -> Result<ChainMolecule, MolfileError> {
    let mut name: Option<String> = None;
    let mut records: Vec<Record> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut end_line = None;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if end_line.is_some() {
            return Err(syntax(line_no, "content after `end`"));
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match keyword {
            "molecule" => {
                if name.is_some() {
                    return Err(syntax(line_no, "second `molecule` line"));
                }
                if !valid_word(rest) {
                    return Err(syntax(line_no, "`molecule` needs a single-word name"));
                }
                name = Some(rest.to_string());
            }
            "center" => {
                if name.is_none() {
                    return Err(syntax(line_no, "`center` before `molecule`"));
                }
                let Some((id, slots)) = rest.split_once(':') else {
                    return Err(syntax(line_no, "expected `center <id>: <t1> <t2> <t3> <t4>`"));
                };
                let id = id.trim();
                if !valid_word(id) {
                    return Err(syntax(line_no, format!("bad centre id `{id}`")));
                }
                if let Some(first) = ids.insert(id.to_string(), line_no) {
                    return Err(syntax(line_no, format!("duplicate centre id `{id}` (first declared on line {first})")));
                }
                let tokens: Vec<&str> = slots.split_whitespace().collect();
                if tokens.len() != 4 {
                    return Err(syntax(line_no, format!("centre `{id}` has {} slot tokens, expected 4", tokens.len())));
                }
                for t in &tokens {
                    if *t == "@" {
                        return Err(syntax(line_no, "empty link target `@`"));
                    }
                    if t.contains(':') {
                        return Err(syntax(line_no, format!("bad slot token `{t}`")));
                    }
                }
                let tokens = [0, 1, 2, 3].map(|k| tokens[k].to_string());
                records.push(Record { line: line_no, id: id.to_string(), tokens });
            }
            "end" => {
                if !rest.is_empty() {
                    return Err(syntax(line_no, "`end` takes no arguments"));
                }
                if name.is_none() {
                    return Err(syntax(line_no, "`end` before `molecule`"));
                }
                end_line = Some(line_no);
            }
            other => return Err(syntax(line_no, format!("unknown keyword `{other}`"))),
        }
    }

    let Some(name) = name else {
        return Err(syntax(last_line.max(1), "missing `molecule` line"));
    };
    let Some(end_line) = end_line else {
        return Err(syntax(last_line.max(1), "missing `end`"));
    };
    if records.is_empty() {
        return Err(syntax(end_line, "molecule has no centres"));
    }

    let mut centres = Vec::with_capacity(records.len());
    for r in &records {
        for t in &r.tokens {
            if let Some(target) = t.strip_prefix('@') {
                if !ids.contains_key(target) {
                    return Err(syntax(r.line, format!("link `@{target}` names no declared centre")));
                }
            }
        }
        let tokens = [0, 1, 2, 3].map(|k| r.tokens[k].as_str());
        let t = Tetrahedron::from_tokens(&r.id, tokens).map_err(|source| MolfileError::Structure { line: r.line, source })?;
        centres.push(t);
    }
    ChainMolecule::new(name, centres, false).map_err(|source| MolfileError::Structure { line: end_line, source })
}

/// Writes a chain back out in the file format. Spacer flags are not part of
/// the format.
pub fn serialize(m: &ChainMolecule) -> Result<String, MolfileError> {
    if !valid_word(m.name()) {
        return Err(MolfileError::Unrepresentable(format!("molecule name `{}`", m.name())));
    }
    if m.spacers() {
        return Err(MolfileError::Unrepresentable("spacer atoms".into()));
    }
    let mut out = format!("molecule {}\n", m.name());
    for c in m.centres() {
        check_id(&c.centre)?;
        let mut tokens = Vec::with_capacity(4);
        for s in &c.slots {
            match s {
                Slot::Ligand(l) if !valid_word(l) || l.starts_with('@') => {
                    return Err(MolfileError::Unrepresentable(format!("ligand label `{l}`")));
                }
                Slot::Link(id) => check_id(id)?,
                Slot::Ligand(_) => {}
            }
            tokens.push(s.to_string());
        }
        out.push_str(&format!("center {}: {}\n", c.centre, tokens.join(" ")));
    }
    out.push_str("end\n");
    Ok(out)
}

fn check_id(id: &CentreId) -> Result<(), MolfileError> {
    if valid_word(id.as_str()) {
        Ok(())
    } else {
        Err(MolfileError::Unrepresentable(format!("centre id `{id}`")))
    }
}
