//! Staircase knot complexes and their large-surgery truncations.

use std::fmt;

use crate::algebra::{Basis, Generator, MonoMatrix};
use crate::complex::{homology, GradedComplex};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::iota::IotaComplex;

/// A staircase in the `(i, j)` plane. Generators alternate between corners
/// (even index) and the points between them (odd index); `steps` lists the
/// lengths of the horizontal and vertical moves in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseModel {
    steps: Vec<u32>,
    mirrored: bool,
    names: Vec<String>,
    positions: Vec<(i64, i64)>,
    gradings: Vec<Grading>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// `max(i, j) ≤ 0`: large positive surgery.
    MaxA0,
    /// `min(i, j) ≤ 0`: large negative surgery.
    MinQuadrant,
    /// `i ≤ 0`: the complex of `S³`.
    Vertical,
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truncation::MaxA0 => "max(i,j) <= 0",
            Truncation::MinQuadrant => "min(i,j) <= 0",
            Truncation::Vertical => "i <= 0",
        })
    }
}

/// A surgery model with where it came from.
#[derive(Clone, Debug)]
pub struct SurgeryModel {
    pub model: IotaComplex,
    pub knot: String,
    pub truncation: Truncation,
    pub pinned_d: Option<Grading>,
}

/// The torus knot `T(2, 2k+1)`, or its mirror.
pub fn staircase(k: u32, mirrored: bool) -> Result<StaircaseModel> {
    if k < 1 {
        return Err(Error::Argument(format!("staircase needs k >= 1, got {k}")));
    }
    StaircaseModel::from_steps(vec![1; 2 * k as usize], mirrored)
}

fn letter_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|l| char::from(b'a' + l as u8).to_string()).collect()
    } else {
        (0..n).map(|l| format!("s{l}")).collect()
    }
}

impl StaircaseModel {
    /// Steps alternate horizontal, vertical, ...; the list must be a
    /// palindrome of even length so the staircase is symmetric.
    pub fn from_steps(steps: Vec<u32>, mirrored: bool) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::Argument("staircase needs an even number of steps".into()));
        }
        if steps.contains(&0) {
            return Err(Error::Argument("staircase steps must be positive".into()));
        }
        if steps.iter().ne(steps.iter().rev()) {
            return Err(Error::Argument("staircase steps must read the same backwards".into()));
        }
        let height: i64 = steps.iter().skip(1).step_by(2).map(|&s| i64::from(s)).sum();
        let mut positions = vec![(0, height)];
        for (l, &s) in steps.iter().enumerate() {
            let (i, j) = *positions.last().expect("non-empty");
            positions.push(if l % 2 == 0 { (i + i64::from(s), j) } else { (i, j - i64::from(s)) });
        }
        let mut gradings: Vec<Grading> =
            (0..positions.len()).map(|l| Grading::int(if l % 2 == 1 { 1 } else { 0 })).collect();
        if mirrored {
            for p in &mut positions {
                *p = (-p.0, -p.1);
            }
            for g in &mut gradings {
                *g = -*g;
            }
        }
        let mut model = StaircaseModel { names: letter_names(positions.len()), steps, mirrored, positions, gradings };
        let raw = model.truncate(Truncation::Vertical)?;
        let top = homology(raw.complex())?.single_tower()?.grading;
        let shift = Grading::int(-2) - top;
        for g in &mut model.gradings {
            *g += shift;
        }
        Ok(model)
    }

    /// The trivial staircase: one generator at the origin.
    pub fn unknot() -> Self {
        StaircaseModel::from_steps(Vec::new(), false).expect("empty staircase is valid")
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn genus(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn positions(&self) -> &[(i64, i64)] {
        &self.positions
    }

    pub fn gradings(&self) -> &[Grading] {
        &self.gradings
    }

    /// `ι_K`: reflection across the diagonal, i.e. index `l ↦ 2k - l`.
    pub fn reflect(&self, l: usize) -> usize {
        self.len() - 1 - l
    }

    /// `(source, target)` index pairs of the differential.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let parity = usize::from(!self.mirrored);
        let mut out = Vec::new();
        for l in (0..n).filter(|l| l % 2 == parity) {
            if l > 0 {
                out.push((l, l - 1));
            }
            if l + 1 < n {
                out.push((l, l + 1));
            }
        }
        out
    }

    /// One `F2[U]` generator per staircase generator, placed at the largest
    /// `U`-translate inside the region.
    pub fn truncate(&self, region: Truncation) -> Result<IotaComplex> {
        let power: Vec<i64> = self
            .positions
            .iter()
            .map(|&(i, j)| match region {
                Truncation::MaxA0 => i.max(j),
                Truncation::MinQuadrant => i.min(j),
                Truncation::Vertical => i,
            })
            .collect();
        let gens: Vec<Generator> = (0..self.len())
            .map(|l| Generator::new(self.names[l].clone(), self.gradings[l] - Grading::int(2 * power[l])))
            .collect();
        let basis = Basis::new(gens)?;
        let mut diff = MonoMatrix::zero(basis.clone(), basis.clone(), Grading::int(1));
        for (s, t) in self.arrows() {
            let e = u32::try_from(power[s] - power[t])
                .map_err(|_| Error::Internal("truncation is not a subcomplex".into()))?;
            diff.add_entry(t, s, e)?;
        }
        let mut iota = MonoMatrix::zero(basis.clone(), basis.clone(), Grading::ZERO);
        if region != Truncation::Vertical {
            for l in 0..self.len() {
                iota.add_entry(self.reflect(l), l, 0)?;
            }
        } else {
            iota = MonoMatrix::identity(basis);
        }
        IotaComplex::from_parts(GradedComplex::from_parts(diff)?, iota)
    }

    fn label(&self) -> String {
        let k = self.genus();
        let sign = if self.mirrored { "-" } else { "" };
        format!("{sign}T(2,{})", 2 * k + 1)
    }
}

/// Positive large surgery: the `max(i, j) ≤ 0` subcomplex.
pub fn a0_max_model(s: &StaircaseModel) -> Result<SurgeryModel> {
    Ok(SurgeryModel { model: s.truncate(Truncation::MaxA0)?, knot: s.label(), truncation: Truncation::MaxA0, pinned_d: None })
}

/// Negative large surgery: the `min(i, j) ≤ 0` subcomplex.
pub fn quadrant_min_model(s: &StaircaseModel) -> Result<SurgeryModel> {
    Ok(SurgeryModel {
        model: s.truncate(Truncation::MinQuadrant)?,
        knot: s.label(),
        truncation: Truncation::MinQuadrant,
        pinned_d: None,
    })
}

/// Shifts gradings so the tower top sits at `d - 2`.
pub fn pin_grading(m: &SurgeryModel, d: Grading) -> Result<SurgeryModel> {
    let model = pin_iota(&m.model, d)?;
    Ok(SurgeryModel { model, knot: m.knot.clone(), truncation: m.truncation, pinned_d: Some(d) })
}

pub fn pin_iota(x: &IotaComplex, d: Grading) -> Result<IotaComplex> {
    let top = homology(x.complex())?.single_tower()?.grading;
    Ok(x.shifted(d - Grading::int(2) - top))
}
