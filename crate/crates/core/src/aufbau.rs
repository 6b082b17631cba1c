//! Building chains up one stereogenic centre at a time.
//!
//! In rule mode the change `Δp ∈ {0, 1}` is given for each added centre and
//! the index is pure bookkeeping. In verified mode the new chain is built and
//! the classifier decides, which exposes degenerate (meso) additions where the
//! bookkeeping overcounts.

use crate::classifier::{chirality_index, classify, is_locally_chiral, ChiralityIndex, Classification};
use crate::error::{ChiralError, Result};
use crate::tetra::{ChainMolecule, Tetrahedron};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AufbauStep(u8);

impl AufbauStep {
    pub const KEEP: AufbauStep = AufbauStep(0);
    pub const INVERT: AufbauStep = AufbauStep(1);

    pub fn new(delta_p: u8) -> Result<Self> {
        match delta_p {
            0 | 1 => Ok(Self(delta_p)),
            d => Err(ChiralError::Argument(format!("delta p must be 0 or 1, got {d}"))),
        }
    }

    pub fn delta_p(self) -> usize {
        self.0 as usize
    }
}

/// `{n, p} → {n+1, p+Δp}`.
pub fn add_centre(idx: ChiralityIndex, step: AufbauStep) -> ChiralityIndex {
    ChiralityIndex::new(idx.n() + 1, idx.p() + step.delta_p())
        .expect("p + dp <= n + 1 whenever p <= n")
}

#[derive(Debug, Clone, PartialEq)]
pub struct AufbauTrace {
    pub start: ChiralityIndex,
    pub steps: Vec<AufbauStep>,
    pub states: Vec<ChiralityIndex>,
    pub classifications: Vec<Classification>,
}

impl AufbauTrace {
    /// Last state, or the start for an empty sequence.
    pub fn last(&self) -> ChiralityIndex {
        self.states.last().copied().unwrap_or(self.start)
    }
}

pub fn aufbau_sequence(start: ChiralityIndex, steps: &[AufbauStep]) -> AufbauTrace {
    let states: Vec<ChiralityIndex> = steps
        .iter()
        .scan(start, |cur, &step| {
            *cur = add_centre(*cur, step);
            Some(*cur)
        })
        .collect();
    let classifications = states.iter().map(|s| classify(*s)).collect();
    AufbauTrace { start, steps: steps.to_vec(), states, classifications }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifiedAddition {
    pub molecule: ChainMolecule,
    /// Classifier result on the extended chain; authoritative.
    pub classified: ChiralityIndex,
    /// Bookkeeping result: the classifier index of the input chain advanced
    /// by `Δp = 1` when the new centre is locally chiral, else `0`.
    pub raw: ChiralityIndex,
    pub step: AufbauStep,
}

impl VerifiedAddition {
    pub fn is_degenerate(&self) -> bool {
        self.classified != self.raw
    }
}

/// Attaches `new_centre` to the last centre of the chain at `attach_slot`
/// (1-based) and classifies the result both ways.
pub fn verified_add_centre(
    m: &ChainMolecule,
    new_centre: Tetrahedron,
    attach_slot: usize,
) -> Result<VerifiedAddition> {
    let order = m.path_order();
    let last = &m.centres()[*order.last().expect("nonempty chain")];
    let back: Vec<_> = new_centre.links().collect();
    if back.len() != 1 || back[0] != &last.centre {
        return Err(ChiralError::Structure(format!(
            "new centre {} must carry exactly one link, back to {}",
            new_centre.centre, last.centre
        )));
    }
    let step = if is_locally_chiral(&new_centre) { AufbauStep::INVERT } else { AufbauStep::KEEP };
    let before = chirality_index(m)?;
    let molecule = m.attach(&last.centre, attach_slot, new_centre)?;
    let classified = chirality_index(&molecule)?;
    Ok(VerifiedAddition { molecule, classified, raw: add_centre(before, step), step })
}
