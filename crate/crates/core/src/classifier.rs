//! Superimposability under the rotation subgroup and the chirality index
//! `χ = {n, p}` of a chain measured against its mirror image.

use std::fmt;

use crate::algebra::{Kind, Operator, OperatorId};
use crate::error::{ChiralError, Result};
use crate::tetra::{ChainMolecule, Slot, Tetrahedron};

/// `{n, p}`: `n` stereogenic centres, `p` of them still inverted after the
/// best superimposition on the mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChiralityIndex {
    n: usize,
    p: usize,
}

impl ChiralityIndex {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        if n < 1 {
            return Err(ChiralError::Invariant("chirality index needs n >= 1".into()));
        }
        if p > n {
            return Err(ChiralError::Invariant(format!("chirality index needs 0 <= p <= n, got {{{n}, {p}}}")));
        }
        Ok(Self { n, p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn classification(&self) -> Classification {
        classify(*self)
    }
}

impl fmt::Display for ChiralityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.n, self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Achiral,
    Diastereoisomer,
    Enantiomer,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Achiral => "ACHIRAL",
            Classification::Diastereoisomer => "DIASTEREOISOMER",
            Classification::Enantiomer => "ENANTIOMER",
        })
    }
}

pub fn classify(idx: ChiralityIndex) -> Classification {
    if idx.p == 0 {
        Classification::Achiral
    } else if idx.p < idx.n {
        Classification::Diastereoisomer
    } else {
        Classification::Enantiomer
    }
}

/// Classifies a raw `(n, p)` pair, rejecting pairs outside `0 <= p <= n`.
pub fn classify_counts(n: i64, p: i64) -> Result<Classification> {
    if n < 1 || p < 0 || p > n {
        return Err(ChiralError::Invariant(format!("{{{n}, {p}}} violates 0 <= p <= n")));
    }
    Ok(classify(ChiralityIndex { n: n as usize, p: p as usize }))
}

/// Mirror image of one centre under the designated inversion χ̄1.
pub fn mirror_tetra(t: &Tetrahedron) -> Tetrahedron {
    t.apply(&Operator::mirror())
}

fn superimpose_by<F>(a: &Tetrahedron, b: &Tetrahedron, slot_eq: F) -> Option<Operator>
where
    F: Fn(&Slot, &Slot) -> bool,
{
    Operator::rotations().find(|r| {
        let moved = r.apply(&a.slots);
        moved.iter().zip(&b.slots).all(|(x, y)| slot_eq(x, y))
    })
}

/// First rotation (lowest index) carrying `a` onto `b`, comparing links by target.
pub fn rotationally_superimposable(a: &Tetrahedron, b: &Tetrahedron) -> Option<Operator> {
    superimpose_by(a, b, |x, y| x == y)
}

/// A centre is locally chiral when no rotation carries its mirror image back
/// onto it. Links count as groups of their own.
pub fn is_locally_chiral(t: &Tetrahedron) -> bool {
    rotationally_superimposable(&mirror_tetra(t), t).is_none()
}

/// Chain automorphisms tried when superimposing the mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Automorphism {
    Identity,
    Reversal,
}

/// Outcome of superimposing the mirror chain under one automorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct Superimposition {
    pub automorphism: Automorphism,
    /// Per centre (declaration order): the rotation that carries the matched
    /// mirror centre onto it, or `None` if that centre stays inverted.
    pub rotations: Vec<Option<OperatorId>>,
}

impl Superimposition {
    pub fn mismatches(&self) -> usize {
        self.rotations.iter().filter(|r| r.is_none()).count()
    }
}

fn ligand_multiset(t: &Tetrahedron) -> Vec<&str> {
    let mut labels: Vec<&str> = t
        .slots
        .iter()
        .filter_map(|s| match s {
            Slot::Ligand(l) => Some(l.as_str()),
            Slot::Link(_) => None,
        })
        .collect();
    labels.sort_unstable();
    labels
}

/// End-to-end reversal maps the constitution onto itself: centres at mirrored
/// chain positions carry the same ligand multisets.
pub fn is_palindromic(m: &ChainMolecule, order: &[usize]) -> bool {
    let n = order.len();
    (0..n / 2).all(|pos| {
        ligand_multiset(&m.centres()[order[pos]]) == ligand_multiset(&m.centres()[order[n - 1 - pos]])
    })
}

/// Every automorphism tried for `m` against its image under `mirror`.
pub fn superimpositions(m: &ChainMolecule, mirror: &Operator) -> Result<Vec<Superimposition>> {
    if mirror.kind() != Kind::Inversion {
        return Err(ChiralError::Argument(format!("mirror operator must be an inversion, got {}", mirror.id())));
    }
    let n = m.n();
    let order = m.path_order();
    let mut rank = vec![0usize; n];
    for (pos, &idx) in order.iter().enumerate() {
        rank[idx] = pos;
    }
    let mirrored = m.apply_all(mirror);

    let mut autos = vec![Automorphism::Identity];
    if n > 1 && is_palindromic(m, &order) {
        autos.push(Automorphism::Reversal);
    }
    let out = autos
        .into_iter()
        .map(|auto| {
            let phi = |pos: usize| match auto {
                Automorphism::Identity => pos,
                Automorphism::Reversal => n - 1 - pos,
            };
            let rank_of = |id: &crate::tetra::CentreId| m.position(id).map(|i| rank[i]);
            let rotations = (0..n)
                .map(|k| {
                    let image = &mirrored.centres()[order[phi(rank[k])]];
                    let slot_eq = |x: &Slot, y: &Slot| match (x, y) {
                        (Slot::Ligand(a), Slot::Ligand(b)) => a == b,
                        (Slot::Link(from_mirror), Slot::Link(in_original)) => {
                            match (rank_of(from_mirror), rank_of(in_original)) {
                                (Some(a), Some(b)) => a == phi(b),
                                _ => false,
                            }
                        }
                        _ => false,
                    };
                    superimpose_by(image, &m.centres()[k], slot_eq).map(|r| r.id())
                })
                .collect();
            Superimposition { automorphism: auto, rotations }
        })
        .collect();
    Ok(out)
}

/// `χ = {n, p}` using the designated mirror χ̄1.
pub fn chirality_index(m: &ChainMolecule) -> Result<ChiralityIndex> {
    chirality_index_with_mirror(m, &Operator::mirror())
}

/// `p` is the fewest centres left inverted over all automorphisms.
pub fn chirality_index_with_mirror(m: &ChainMolecule, mirror: &Operator) -> Result<ChiralityIndex> {
    let p = superimpositions(m, mirror)?
        .iter()
        .map(Superimposition::mismatches)
        .min()
        .expect("identity automorphism is always tried");
    ChiralityIndex::new(m.n(), p)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    pub operator: OperatorId,
    pub tetrahedron: Tetrahedron,
    /// Rotation orbit; orbit 0 contains the input projection.
    pub orbit: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionSet {
    /// One entry per operator, canonical order.
    pub projections: Vec<Projection>,
    /// Distinct slot arrangements per orbit, in order of first appearance.
    pub orbits: Vec<Vec<[Slot; 4]>>,
}

impl ProjectionSet {
    pub fn distinct_count(&self) -> usize {
        self.orbits.iter().map(Vec::len).sum()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// All 24 projections of a single centre, partitioned into rotation orbits.
pub fn enumerate_projections(t: &Tetrahedron) -> Result<ProjectionSet> {
    if t.has_links() {
        return Err(ChiralError::Unsupported(format!(
            "projection enumeration needs four ligands; centre {} has links",
            t.centre
        )));
    }
    let mut orbits: Vec<Vec<[Slot; 4]>> = Vec::new();
    let mut projections = Vec::with_capacity(24);
    for op in Operator::all() {
        let image = t.apply(&op);
        let orbit = match orbits.iter().position(|o| o.contains(&image.slots)) {
            Some(k) => k,
            None => {
                let mut members: Vec<[Slot; 4]> = Vec::new();
                for r in Operator::rotations() {
                    let s = r.apply(&image.slots);
                    if !members.contains(&s) {
                        members.push(s);
                    }
                }
                orbits.push(members);
                orbits.len() - 1
            }
        };
        projections.push(Projection { operator: op.id(), tetrahedron: image, orbit });
    }
    Ok(ProjectionSet { projections, orbits })
}
