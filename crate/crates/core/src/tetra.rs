//! Bonds, tetrahedral centres and linear chains of linked centres.
//!
//! Slot order follows the Fischer cross read from the left arm clockwise:
//! slot 1 = left, 2 = top, 3 = right, 4 = bottom.

use std::collections::{HashMap, HashSet};
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::algebra::Operator;
use crate::error::{ChiralError, Result};

/// Tolerance for comparing bond values.
pub const BOND_EPS: f64 = 1e-12;

/// One projected bond in polar form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bond {
    rho: f64,
    theta: f64,
}

impl Bond {
    /// `theta` is normalized into `[0, 2π)`.
    pub fn new(rho: f64, theta: f64) -> Result<Self> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(ChiralError::Argument(format!("bond modulus must be finite and >= 0, got {rho}")));
        }
        if !theta.is_finite() {
            return Err(ChiralError::Argument(format!("bond angle must be finite, got {theta}")));
        }
        let mut theta = theta.rem_euclid(TAU);
        if theta >= TAU - BOND_EPS {
            theta = 0.0;
        }
        Ok(Self { rho, theta })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `ρ·(cos θ + i sin θ)`.
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.rho, self.theta)
    }

    pub fn approx_eq(&self, other: &Bond) -> bool {
        (self.value() - other.value()).norm() <= BOND_EPS
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentreId(String);

impl CentreId {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(ChiralError::Argument("centre id must be nonempty".into()));
        }
        Ok(Self(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CentreId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Slot {
    Ligand(String),
    Link(CentreId),
}

impl Slot {
    pub fn ligand(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(ChiralError::Argument("ligand label must be nonempty".into()));
        }
        Ok(Slot::Ligand(label))
    }

    pub fn link(target: &str) -> Result<Self> {
        Ok(Slot::Link(CentreId::new(target)?))
    }

    pub fn is_link(&self) -> bool {
        matches!(self, Slot::Link(_))
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Ligand(l) => f.write_str(l),
            Slot::Link(id) => write!(f, "@{id}"),
        }
    }
}

/// One stereogenic centre: four slots and optional bond geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct Tetrahedron {
    pub centre: CentreId,
    pub slots: [Slot; 4],
    pub bonds: Option<[Bond; 4]>,
}

impl Tetrahedron {
    pub fn new(centre: CentreId, slots: [Slot; 4]) -> Self {
        Self { centre, slots, bonds: None }
    }

    /// Convenience constructor: tokens starting with `@` become links.
    pub fn from_tokens(centre: &str, tokens: [&str; 4]) -> Result<Self> {
        let mut slots = Vec::with_capacity(4);
        for t in tokens {
            slots.push(match t.strip_prefix('@') {
                Some(target) => Slot::link(target)?,
                None => Slot::ligand(t)?,
            });
        }
        let slots: [Slot; 4] = slots.try_into().expect("four tokens");
        Ok(Self::new(CentreId::new(centre)?, slots))
    }

    pub fn with_bonds(mut self, bonds: [Bond; 4]) -> Self {
        self.bonds = Some(bonds);
        self
    }

    pub fn links(&self) -> impl Iterator<Item = &CentreId> {
        self.slots.iter().filter_map(|s| match s {
            Slot::Link(t) => Some(t),
            Slot::Ligand(_) => None,
        })
    }

    pub fn link_count(&self) -> usize {
        self.links().count()
    }

    pub fn has_links(&self) -> bool {
        self.link_count() > 0
    }

    /// Sum vector `Σ ρ_j e^{iθ_j}` of the four bonds.
    pub fn sum_vector(&self) -> Result<Complex64> {
        let bonds = self
            .bonds
            .as_ref()
            .ok_or_else(|| ChiralError::State(format!("centre {} has no bond geometry", self.centre)))?;
        Ok(bonds.iter().map(Bond::value).sum())
    }

    /// Permutes slots (and bonds) exactly as the operator acts on the column vector.
    pub fn apply(&self, op: &Operator) -> Tetrahedron {
        Tetrahedron {
            centre: self.centre.clone(),
            slots: op.apply(&self.slots),
            bonds: self.bonds.as_ref().map(|b| op.apply(b)),
        }
    }
}

impl fmt::Display for Tetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.slots.iter().map(|s| s.to_string()).collect();
        write!(f, "{}: ({})", self.centre, s.join(", "))
    }
}

pub fn apply_operator(op: &Operator, t: &Tetrahedron) -> Tetrahedron {
    t.apply(op)
}

/// Number of bonds of a chain of `n` centres: `3n+1` when centres are
/// bonded directly, `4n` with spacer atoms between them.
pub fn bond_count(n: usize, spacers: bool) -> Result<usize> {
    if n < 1 {
        return Err(ChiralError::Argument("a chain needs at least one centre".into()));
    }
    Ok(if spacers { 4 * n } else { 3 * n + 1 })
}

/// A simply connected linear chain of stereogenic centres.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainMolecule {
    name: String,
    centres: Vec<Tetrahedron>,
    spacers: bool,
}

impl ChainMolecule {
    pub fn new(name: impl Into<String>, centres: Vec<Tetrahedron>, spacers: bool) -> Result<Self> {
        let chain = Self { name: name.into(), centres, spacers };
        chain.validate()?;
        Ok(chain)
    }

    fn validate(&self) -> Result<()> {
        if self.centres.is_empty() {
            return Err(ChiralError::Structure("a chain needs at least one centre".into()));
        }
        let mut index = HashMap::new();
        for (i, c) in self.centres.iter().enumerate() {
            if index.insert(&c.centre, i).is_some() {
                return Err(ChiralError::Structure(format!("duplicate centre id {}", c.centre)));
            }
        }
        let mut edges = HashSet::new();
        for c in &self.centres {
            if c.link_count() > 2 {
                return Err(ChiralError::Structure(format!(
                    "centre {} has {} links; only linear chains are supported",
                    c.centre,
                    c.link_count()
                )));
            }
            let mut seen = HashSet::new();
            for target in c.links() {
                if target == &c.centre {
                    return Err(ChiralError::Structure(format!("centre {} links to itself", c.centre)));
                }
                let Some(&j) = index.get(target) else {
                    return Err(ChiralError::Structure(format!("centre {} links to unknown centre {target}", c.centre)));
                };
                if !seen.insert(target) {
                    return Err(ChiralError::Structure(format!("centre {} links twice to {target}", c.centre)));
                }
                if !self.centres[j].links().any(|back| back == &c.centre) {
                    return Err(ChiralError::Structure(format!(
                        "link {} -> {target} has no matching link back",
                        c.centre
                    )));
                }
                let i = index[&c.centre];
                edges.insert((i.min(j), i.max(j)));
            }
        }
        if edges.len() != self.centres.len() - 1 {
            return Err(ChiralError::Structure(format!(
                "{} centres joined by {} links do not form a single linear chain",
                self.centres.len(),
                edges.len()
            )));
        }
        // n−1 edges plus connectivity rules out cycles
        let order = self.walk_from(self.endpoint());
        if order.len() != self.centres.len() {
            return Err(ChiralError::Structure("centres are not all connected".into()));
        }
        Ok(())
    }

    fn endpoint(&self) -> usize {
        self.centres.iter().position(|c| c.link_count() <= 1).unwrap_or(0)
    }

    fn walk_from(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev: Option<usize> = None;
        let mut cur = start;
        loop {
            let next = self.centres[cur]
                .links()
                .filter_map(|t| self.position(t))
                .find(|&j| Some(j) != prev);
            match next {
                Some(j) if !order.contains(&j) => {
                    order.push(j);
                    prev = Some(cur);
                    cur = j;
                }
                _ => break,
            }
        }
        order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn centres(&self) -> &[Tetrahedron] {
        &self.centres
    }

    pub fn spacers(&self) -> bool {
        self.spacers
    }

    /// Number of stereogenic centres.
    pub fn n(&self) -> usize {
        self.centres.len()
    }

    pub fn position(&self, id: &CentreId) -> Option<usize> {
        self.centres.iter().position(|c| &c.centre == id)
    }

    pub fn centre(&self, id: &CentreId) -> Option<&Tetrahedron> {
        self.position(id).map(|i| &self.centres[i])
    }

    /// Indices of the centres in chain order, from the first endpoint in
    /// declaration order to the other end.
    pub fn path_order(&self) -> Vec<usize> {
        self.walk_from(self.endpoint())
    }

    /// Bonds counted from the structure: ligand slots plus one bond per link
    /// (two when a spacer atom sits on the link).
    pub fn structural_bond_count(&self) -> usize {
        let ligands: usize = self.centres.iter().map(|c| 4 - c.link_count()).sum();
        let links = self.centres.len() - 1;
        ligands + if self.spacers { 2 * links } else { links }
    }

    /// Applies `op` to a single centre, leaving the others untouched.
    pub fn apply_at(&self, id: &CentreId, op: &Operator) -> Result<ChainMolecule> {
        let i = self
            .position(id)
            .ok_or_else(|| ChiralError::Argument(format!("no centre {id} in {}", self.name)))?;
        let mut centres = self.centres.clone();
        centres[i] = centres[i].apply(op);
        Ok(ChainMolecule { name: self.name.clone(), centres, spacers: self.spacers })
    }

    /// Applies `op` to every centre.
    pub fn apply_all(&self, op: &Operator) -> ChainMolecule {
        ChainMolecule {
            name: self.name.clone(),
            centres: self.centres.iter().map(|c| c.apply(op)).collect(),
            spacers: self.spacers,
        }
    }

    /// Replaces a ligand slot of `at` by a link to `new_centre` and appends it.
    pub fn attach(&self, at: &CentreId, slot: usize, new_centre: Tetrahedron) -> Result<ChainMolecule> {
        if !(1..=4).contains(&slot) {
            return Err(ChiralError::Argument(format!("slot {slot} not in 1..=4")));
        }
        let i = self
            .position(at)
            .ok_or_else(|| ChiralError::Argument(format!("no centre {at} in {}", self.name)))?;
        if self.centres[i].slots[slot - 1].is_link() {
            return Err(ChiralError::Structure(format!("slot {slot} of centre {at} is already a link")));
        }
        let mut centres = self.centres.clone();
        centres[i].slots[slot - 1] = Slot::Link(new_centre.centre.clone());
        if let Some(b) = centres[i].bonds.as_mut() {
            // shared bond geometry stays unassigned on link slots
            b[slot - 1] = Bond { rho: 0.0, theta: 0.0 };
        }
        centres.push(new_centre);
        ChainMolecule::new(self.name.clone(), centres, self.spacers)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}
