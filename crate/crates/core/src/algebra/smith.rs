//! Graded Smith normal form for monomial matrices.

use std::sync::Arc;

use super::mono::{Basis, MonoMatrix};
use crate::error::Result;

/// `P · M · Q = D` with `D` diagonal, exponents non-decreasing along the
/// diagonal. `D`'s bases are permutations of `M`'s bases.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub p: MonoMatrix,
    pub p_inv: MonoMatrix,
    pub q: MonoMatrix,
    pub q_inv: MonoMatrix,
    pub d: MonoMatrix,
    /// Diagonal exponents, one per pivot.
    pub diagonal: Vec<u32>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Recomputes `P M Q` and `P P⁻¹`, `Q Q⁻¹` and compares.
    pub fn verify(&self, m: &MonoMatrix) -> Result<bool> {
        let pmq = self.p.compose(m)?.compose(&self.q)?;
        let pp = self.p.compose(&self.p_inv)?;
        let qq = self.q_inv.compose(&self.q)?;
        Ok(pmq == self.d
            && pp == MonoMatrix::identity(self.p.rows().clone())
            && qq == MonoMatrix::identity(self.q.cols().clone()))
    }
}

/// Pivots on the minimal exponent (ties by row name, then column name),
/// clears its column with row operations and its row with column operations.
pub fn graded_smith(m: &MonoMatrix) -> SmithForm {
    let rows = m.rows().clone();
    let cols = m.cols().clone();
    let mut w = m.clone();
    let mut p = MonoMatrix::identity(rows.clone());
    let mut p_inv = MonoMatrix::identity(rows.clone());
    let mut q = MonoMatrix::identity(cols.clone());
    let mut q_inv = MonoMatrix::identity(cols.clone());

    let mut row_done = vec![false; rows.len()];
    let mut col_done = vec![false; cols.len()];
    let mut pivots: Vec<(usize, usize, u32)> = Vec::new();

    loop {
        let best = w
            .entries()
            .filter(|&(r, c, _)| !row_done[r] && !col_done[c])
            .min_by(|a, b| {
                (a.2, rows.name(a.0), cols.name(a.1)).cmp(&(b.2, rows.name(b.0), cols.name(b.1)))
            });
        let Some((pr, pc, e)) = best else { break };

        let column: Vec<(usize, u32)> = w.column(pc).iter().map(|(&r, &f)| (r, f)).collect();
        for (r, f) in column {
            if r != pr {
                // row_r += U^{f-e} row_pr; P ← E P, P⁻¹ ← P⁻¹ E
                w.add_row(pr, r, f - e);
                p.add_row(pr, r, f - e);
                p_inv.add_col(r, pr, f - e);
            }
        }
        let row = w.row(pr);
        for (c, f) in row {
            if c != pc {
                // col_c += U^{f-e} col_pc; Q ← Q E, Q⁻¹ ← E Q⁻¹
                w.add_col(pc, c, f - e);
                q.add_col(pc, c, f - e);
                q_inv.add_row(c, pc, f - e);
            }
        }
        row_done[pr] = true;
        col_done[pc] = true;
        pivots.push((pr, pc, e));
    }

    pivots.sort_by(|a, b| (a.2, rows.name(a.0), cols.name(a.1)).cmp(&(b.2, rows.name(b.0), cols.name(b.1))));
    let row_order: Vec<usize> = pivots
        .iter()
        .map(|p| p.0)
        .chain((0..rows.len()).filter(|&r| !row_done[r]))
        .collect();
    let col_order: Vec<usize> = pivots
        .iter()
        .map(|p| p.1)
        .chain((0..cols.len()).filter(|&c| !col_done[c]))
        .collect();
    let d_rows = permuted(&rows, &row_order);
    let d_cols = permuted(&cols, &col_order);
    let all_rows: Vec<usize> = (0..rows.len()).collect();
    let all_cols: Vec<usize> = (0..cols.len()).collect();

    SmithForm {
        p: p.restrict(&row_order, &all_rows, d_rows.clone(), rows.clone()),
        p_inv: p_inv.restrict(&all_rows, &row_order, rows, d_rows.clone()),
        q: q.restrict(&all_cols, &col_order, cols.clone(), d_cols.clone()),
        q_inv: q_inv.restrict(&col_order, &all_cols, d_cols.clone(), cols),
        d: w.restrict(&row_order, &col_order, d_rows, d_cols),
        diagonal: pivots.iter().map(|p| p.2).collect(),
    }
}

fn permuted(basis: &Basis, order: &[usize]) -> Arc<Basis> {
    Basis::new(order.iter().map(|&i| basis[i].clone()).collect()).expect("permutation keeps names unique")
}
