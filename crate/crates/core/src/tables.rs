//! ASCII and CSV renderings of the operator tables and the Cayley table.
//!
//! Matrix CSV: for each operator, one line holding its identifier followed by
//! four lines of four comma-separated 0/1 digits.
//! Cayley CSV: a header row `*,R1,...,I12`, then one row per left factor.

use std::fmt::Write;

use crate::algebra::{CayleyTable, Kind, Operator};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindFilter {
    Rotations,
    Inversions,
    All,
}

impl KindFilter {
    fn admits(self, kind: Kind) -> bool {
        match self {
            KindFilter::Rotations => kind == Kind::Rotation,
            KindFilter::Inversions => kind == Kind::Inversion,
            KindFilter::All => true,
        }
    }
}

fn selected(filter: KindFilter) -> impl Iterator<Item = Operator> {
    Operator::all().filter(move |op| filter.admits(op.kind()))
}

pub fn matrices_csv(filter: KindFilter) -> String {
    let mut out = String::new();
    for op in selected(filter) {
        writeln!(out, "{}", op.id()).unwrap();
        for row in op.matrix() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
    }
    out
}

pub fn matrices_ascii(filter: KindFilter) -> String {
    let mut out = String::new();
    for op in selected(filter) {
        writeln!(out, "{}  {}  det {:+}", op.id(), op.kind(), op.determinant()).unwrap();
        for row in op.matrix() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "  [{}]", cells.join(" ")).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn cayley_csv(table: &CayleyTable) -> String {
    let mut out = String::from("*");
    for op in Operator::all() {
        write!(out, ",{}", op.id()).unwrap();
    }
    out.push('\n');
    for (a, row) in Operator::all().zip(table.rows()) {
        write!(out, "{}", a.id()).unwrap();
        for cell in row {
            write!(out, ",{cell}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn cayley_ascii(table: &CayleyTable) -> String {
    let mut out = format!("{:>4}|", "*");
    for op in Operator::all() {
        write!(out, "{:>4}", op.id().to_string()).unwrap();
    }
    out.push('\n');
    out.push_str(&"-".repeat(5 + 4 * 24));
    out.push('\n');
    for (a, row) in Operator::all().zip(table.rows()) {
        write!(out, "{:>4}|", a.id().to_string()).unwrap();
        for cell in row {
            write!(out, "{:>4}", cell.to_string()).unwrap();
        }
        out.push('\n');
    }
    out
}
