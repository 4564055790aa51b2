//! Cancelling `U^0` arrows to shrink a complex up to homotopy equivalence.

use super::cancel::Canceller;
use super::{diff_shift, GradedComplex};
use crate::algebra::{Basis, MonoMatrix};
use crate::error::{Error, Result};

/// A reduced complex with its transported maps and the comparison maps
/// `inclusion: reduced -> original` and `projection: original -> reduced`.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub complex: GradedComplex,
    pub maps: Vec<MonoMatrix>,
    pub inclusion: MonoMatrix,
    pub projection: MonoMatrix,
}

/// Cancels `U^0` arrows, lowest source grading first (ties by source name,
/// then target name). Every map in `maps` must be an endomorphism of `c`;
/// each is conjugated by the base changes and restricted to what remains.
pub fn reduce(c: &GradedComplex, maps: &[MonoMatrix]) -> Result<Reduced> {
    let basis = c.basis().clone();
    for m in maps {
        if m.rows() != &basis || m.cols() != &basis {
            return Err(Error::IndexMismatch("maps transported by reduce must be endomorphisms".into()));
        }
    }
    let mut work = Canceller::new(c.diff(), maps.to_vec());
    loop {
        let next = work.active_entries().filter(|&(_, _, e)| e == 0).min_by(|a, b| {
            (basis.grading(a.1), basis.name(a.1), basis.name(a.0)).cmp(&(
                basis.grading(b.1),
                basis.name(b.1),
                basis.name(b.0),
            ))
        });
        let Some((i, j, _)) = next else { break };
        work.cancel(j, i)?;
    }

    let keep: Vec<usize> = (0..basis.len()).filter(|&k| work.active[k]).collect();
    let small = Basis::new(keep.iter().map(|&k| basis[k].clone()).collect())?;
    let all: Vec<usize> = (0..basis.len()).collect();
    let diff = work.diff.restrict(&keep, &keep, small.clone(), small.clone());
    debug_assert_eq!(diff.shift(), diff_shift());
    Ok(Reduced {
        complex: GradedComplex::from_parts(diff)?,
        maps: work.maps.iter().map(|m| m.restrict(&keep, &keep, small.clone(), small.clone())).collect(),
        inclusion: work.basis.restrict(&all, &keep, basis.clone(), small.clone()),
        projection: work.basis_inv.restrict(&keep, &all, small, basis),
    })
}
