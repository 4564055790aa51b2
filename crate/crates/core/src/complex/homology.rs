//! Homology as a graded F2[U]-module, read off a stacked basis.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cancel::Canceller;
use super::GradedComplex;
use crate::algebra::{Basis, Chain, MonoMatrix};
use crate::error::{Error, Result};
use crate::grading::Grading;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SummandKind {
    /// A free summand `F2[U]`.
    Tower,
    /// `F2[U]/U^order`.
    Torsion { order: u32 },
}

/// One cyclic summand with its top grading and a representing cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub kind: SummandKind,
    pub grading: Grading,
    pub representative: Chain,
    /// Index of the generator of the stacked basis that carries the summand.
    pub(crate) slot: usize,
}

impl Summand {
    pub fn is_tower(&self) -> bool {
        self.kind == SummandKind::Tower
    }

    /// Truncates `U^exponent` times the generator to zero where appropriate.
    pub fn survives(&self, exponent: u32) -> bool {
        match self.kind {
            SummandKind::Tower => true,
            SummandKind::Torsion { order } => exponent < order,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SummandKind::Tower => write!(f, "F[U]_({})", self.grading),
            SummandKind::Torsion { order: 1 } => write!(f, "F_({})", self.grading),
            SummandKind::Torsion { order } => write!(f, "(F[U]/U^{})_({})", order, self.grading),
        }
    }
}

/// `H_*(C) ≅ ⊕ F2[U]_(t) ⊕ ⊕ (F2[U]/U^n)_(g)` with representatives.
#[derive(Clone, Debug)]
pub struct HomologyModule {
    basis: std::sync::Arc<Basis>,
    summands: Vec<Summand>,
    /// Original coordinates to stacked-basis coordinates.
    basis_inv: MonoMatrix,
    /// Stacked-basis generators that are sources of a cancelled pair.
    pair_sources: Vec<usize>,
}

impl HomologyModule {
    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn towers(&self) -> Vec<Grading> {
        self.summands.iter().filter(|s| s.is_tower()).map(|s| s.grading).collect()
    }

    pub fn torsion(&self) -> Vec<(Grading, u32)> {
        self.summands
            .iter()
            .filter_map(|s| match s.kind {
                SummandKind::Torsion { order } => Some((s.grading, order)),
                SummandKind::Tower => None,
            })
            .collect()
    }

    pub fn tower_count(&self) -> usize {
        self.summands.iter().filter(|s| s.is_tower()).count()
    }

    /// Sorted summand multiset, for comparisons up to isomorphism.
    pub fn signature(&self) -> (Vec<Grading>, Vec<(Grading, u32)>) {
        let mut t = self.towers();
        let mut q = self.torsion();
        t.sort();
        q.sort();
        (t, q)
    }

    /// `dim_F2 H_r`.
    pub fn dimension_at(&self, r: Grading) -> usize {
        self.summands
            .iter()
            .filter(|s| {
                let Some(k) = (s.grading - r).half_integer() else { return false };
                k >= 0 && s.survives(k as u32)
            })
            .count()
    }

    /// The unique tower, or a [`Error::TowerCount`].
    pub fn single_tower(&self) -> Result<&Summand> {
        let towers: Vec<&Summand> = self.summands.iter().filter(|s| s.is_tower()).collect();
        match towers.as_slice() {
            [t] => Ok(t),
            _ => Err(Error::TowerCount(towers.len())),
        }
    }

    /// Coordinates of a cycle: for each summand, the power `U^k` of its
    /// generator occurring in the class (`None` for zero).
    pub fn classify(&self, cycle: &Chain) -> Result<Vec<Option<u32>>> {
        let coords = self.basis_inv.apply(cycle);
        if let Some(&j) = self.pair_sources.iter().find(|&&j| coords.get(j).is_some()) {
            return Err(Error::Internal(format!(
                "{} is not a cycle (component along {})",
                cycle.display(&self.basis),
                self.basis.name(j)
            )));
        }
        Ok(self
            .summands
            .iter()
            .map(|s| coords.get(s.slot).filter(|&k| s.survives(k)))
            .collect())
    }

    pub fn basis(&self) -> &std::sync::Arc<Basis> {
        &self.basis
    }
}

impl fmt::Display for HomologyModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(Summand::to_string).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Classifies `H_*(C)` by repeatedly splitting off `x_j → U^e x_i` with
/// minimal `e` (ties by target name, then source name).
pub fn homology(c: &GradedComplex) -> Result<HomologyModule> {
    let basis = c.basis().clone();
    let mut work = Canceller::new(c.diff(), Vec::new());
    let mut pairs = Vec::new();
    loop {
        let pivot = work
            .active_entries()
            .min_by(|a, b| (a.2, basis.name(a.0), basis.name(a.1)).cmp(&(b.2, basis.name(b.0), basis.name(b.1))));
        let Some((i, j, _)) = pivot else { break };
        let e = work.cancel(j, i)?;
        pairs.push((j, i, e));
    }

    let mut summands = Vec::new();
    for (k, &alive) in work.active.iter().enumerate() {
        if alive {
            summands.push(Summand {
                kind: SummandKind::Tower,
                grading: basis.grading(k),
                representative: work.basis.column_chain(k),
                slot: k,
            });
        }
    }
    for &(_, i, e) in &pairs {
        if e > 0 {
            summands.push(Summand {
                kind: SummandKind::Torsion { order: e },
                grading: basis.grading(i),
                representative: work.basis.column_chain(i),
                slot: i,
            });
        }
    }
    summands.sort_by(|a, b| {
        (a.kind != SummandKind::Tower, std::cmp::Reverse(a.grading), a.kind, basis.name(a.slot)).cmp(&(
            b.kind != SummandKind::Tower,
            std::cmp::Reverse(b.grading),
            b.kind,
            basis.name(b.slot),
        ))
    });
    Ok(HomologyModule {
        basis,
        summands,
        basis_inv: work.basis_inv,
        pair_sources: pairs.iter().map(|p| p.0).collect(),
    })
}

/// `d = (tower top) + 2`; requires exactly one tower.
pub fn d_invariant(c: &GradedComplex) -> Result<Grading> {
    let h = homology(c)?;
    Ok(h.single_tower()?.grading + Grading::int(2))
}
