//! Splitting off two-generator summands `x_j → U^e x_i` by change of basis.

use crate::algebra::MonoMatrix;
use crate::error::{Error, Result};

/// Working state of a sequence of cancellations.
///
/// `basis` has the current basis vectors as columns in original coordinates;
/// `basis_inv` converts original coordinates to current ones.
pub(crate) struct Canceller {
    pub diff: MonoMatrix,
    pub basis: MonoMatrix,
    pub basis_inv: MonoMatrix,
    pub maps: Vec<MonoMatrix>,
    pub active: Vec<bool>,
}

impl Canceller {
    pub fn new(diff: &MonoMatrix, maps: Vec<MonoMatrix>) -> Self {
        let n = diff.ncols();
        Canceller {
            diff: diff.clone(),
            basis: MonoMatrix::identity(diff.cols().clone()),
            basis_inv: MonoMatrix::identity(diff.cols().clone()),
            maps,
            active: vec![true; n],
        }
    }

    /// Replaces generator `target` by `target + U^s source`.
    fn change(&mut self, source: usize, target: usize, s: u32) {
        self.diff.conjugate_elementary(source, target, s);
        self.basis.add_col(source, target, s);
        self.basis_inv.add_row(target, source, s);
        for m in &mut self.maps {
            m.conjugate_elementary(source, target, s);
        }
    }

    /// Active entries `(target, source, exponent)` of the differential.
    pub fn active_entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.diff.entries().filter(|&(r, c, _)| self.active[r] && self.active[c])
    }

    /// Splits off the pair `∂x_j = U^e x_i`. Every other entry in row `i` and
    /// column `j` must have exponent at least `e`.
    pub fn cancel(&mut self, j: usize, i: usize) -> Result<u32> {
        let e = self
            .diff
            .get(i, j)
            .ok_or_else(|| Error::Internal(format!("no arrow from {j} to {i} to cancel")))?;
        for (k, f) in self.diff.row(i) {
            if k != j {
                let s = f.checked_sub(e).ok_or_else(|| Error::Internal("pivot exponent not minimal in its row".into()))?;
                self.change(j, k, s);
            }
        }
        let column: Vec<(usize, u32)> = self.diff.column(j).iter().map(|(&r, &g)| (r, g)).collect();
        for (l, g) in column {
            if l != i {
                let s = g.checked_sub(e).ok_or_else(|| Error::Internal("pivot exponent not minimal in its column".into()))?;
                self.change(l, i, s);
            }
        }
        let split = self.diff.column(j).len() == 1
            && self.diff.row(i).len() == 1
            && self.diff.column(i).is_empty()
            && self.diff.row(j).is_empty();
        if !split {
            return Err(Error::Internal("cancelled pair did not split off; ∂² ≠ 0?".into()));
        }
        self.active[i] = false;
        self.active[j] = false;
        Ok(e)
    }
}
