//! Sparse matrices over F2[U] whose entries are single monomials `U^n`.
//!
//! Rows and columns are indexed by graded generators. A matrix carries a
//! degree shift `δ` and every stored entry from source `x` to target `y`
//! satisfies `gr(x) - δ = gr(y) - 2n`; the exponent of an entry is therefore
//! determined by its position, and F2-sums of entries at one position stay
//! monomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Grading;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub grading: Grading,
}

impl Generator {
    pub fn new(name: impl Into<String>, grading: Grading) -> Self {
        Generator { name: name.into(), grading }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.grading)
    }
}

/// An ordered list of uniquely named generators.
#[derive(Clone, Debug)]
pub struct Basis {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Basis {}

impl Basis {
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Basis>> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(Basis { gens, index }))
    }

    pub fn empty() -> Arc<Basis> {
        Arc::new(Basis { gens: Vec::new(), index: HashMap::new() })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn grading(&self, i: usize) -> Grading {
        self.gens[i].grading
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.position(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Generator> {
        self.gens.iter()
    }

    pub fn max_grading(&self) -> Option<Grading> {
        self.gens.iter().map(|g| g.grading).max()
    }

    pub fn min_grading(&self) -> Option<Grading> {
        self.gens.iter().map(|g| g.grading).min()
    }
}

impl std::ops::Index<usize> for Basis {
    type Output = Generator;
    fn index(&self, i: usize) -> &Generator {
        &self.gens[i]
    }
}

/// The U-exponent forced on an entry `source -> target` by homogeneity, if
/// that entry is allowed at all.
pub fn forced_exponent(source: Grading, target: Grading, shift: Grading) -> Option<u32> {
    let twice = target - source + shift;
    let n = twice.half_integer()?;
    u32::try_from(n).ok()
}

/// A homogeneous element `Σ U^{n_i} x_i`, stored as generator index → exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Chain(BTreeMap<usize, u32>);

impl Chain {
    pub fn new() -> Self {
        Chain(BTreeMap::new())
    }

    pub fn single(index: usize, exponent: u32) -> Self {
        let mut c = Chain::new();
        c.toggle(index, exponent);
        c
    }

    /// Adds `U^exponent x_index` over F2.
    pub fn toggle(&mut self, index: usize, exponent: u32) {
        match self.0.get(&index) {
            Some(&e) => {
                debug_assert_eq!(e, exponent, "inhomogeneous chain");
                self.0.remove(&index);
            }
            None => {
                self.0.insert(index, exponent);
            }
        }
    }

    pub fn add(&mut self, other: &Chain) {
        for (&i, &e) in &other.0 {
            self.toggle(i, e);
        }
    }

    pub fn times_u(&self, n: u32) -> Chain {
        Chain(self.0.iter().map(|(&i, &e)| (i, e + n)).collect())
    }

    pub fn get(&self, index: usize) -> Option<u32> {
        self.0.get(&index).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&i, &e)| (i, e))
    }

    /// Grading of the element inside `basis`, `None` for zero.
    pub fn grading(&self, basis: &Basis) -> Option<Grading> {
        self.iter().next().map(|(i, e)| basis.grading(i).u_shift(e))
    }

    /// Renders as `U^2 a + b`.
    pub fn display(&self, basis: &Basis) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.iter()
            .map(|(i, e)| match e {
                0 => basis.name(i).to_string(),
                1 => format!("U {}", basis.name(i)),
                _ => format!("U^{} {}", e, basis.name(i)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<(usize, u32)> for Chain {
    fn from_iter<T: IntoIterator<Item = (usize, u32)>>(iter: T) -> Self {
        let mut c = Chain::new();
        for (i, e) in iter {
            c.toggle(i, e);
        }
        c
    }
}

/// A homogeneous F2[U]-linear map between free modules with named bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoMatrix {
    rows: Arc<Basis>,
    cols: Arc<Basis>,
    shift: Grading,
    columns: Vec<BTreeMap<usize, u32>>,
}

impl MonoMatrix {
    /// The zero map `cols -> rows` lowering gradings by `shift`.
    pub fn zero(rows: Arc<Basis>, cols: Arc<Basis>, shift: Grading) -> Self {
        let columns = vec![BTreeMap::new(); cols.len()];
        MonoMatrix { rows, cols, shift, columns }
    }

    pub fn identity(basis: Arc<Basis>) -> Self {
        let mut m = MonoMatrix::zero(basis.clone(), basis, Grading::ZERO);
        for i in 0..m.cols.len() {
            m.columns[i].insert(i, 0);
        }
        m
    }

    /// Builds a matrix from `(source, target, exponent)` triples given by
    /// generator name. Repeated entries add over F2.
    pub fn from_named_entries<'a>(
        rows: Arc<Basis>,
        cols: Arc<Basis>,
        shift: Grading,
        entries: impl IntoIterator<Item = (&'a str, &'a str, u32)>,
    ) -> Result<Self> {
        let mut m = MonoMatrix::zero(rows, cols, shift);
        for (src, tgt, e) in entries {
            let c = m.cols.lookup(src)?;
            let r = m.rows.lookup(tgt)?;
            m.add_entry(r, c, e)?;
        }
        Ok(m)
    }

    pub fn rows(&self) -> &Arc<Basis> {
        &self.rows
    }

    pub fn cols(&self) -> &Arc<Basis> {
        &self.cols
    }

    pub fn shift(&self) -> Grading {
        self.shift
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Exponent an entry at `(row, col)` must have, if one is allowed.
    pub fn allowed_exponent(&self, row: usize, col: usize) -> Option<u32> {
        forced_exponent(self.cols.grading(col), self.rows.grading(row), self.shift)
    }

    /// Adds `U^exponent` at `(row, col)`, rejecting inhomogeneous data.
    pub fn add_entry(&mut self, row: usize, col: usize, exponent: u32) -> Result<()> {
        if row >= self.nrows() || col >= self.ncols() {
            return Err(Error::IndexMismatch(format!("entry ({row}, {col}) out of range")));
        }
        if self.allowed_exponent(row, col) != Some(exponent) {
            let src = &self.cols[col];
            let tgt = &self.rows[row];
            return Err(Error::NotHomogeneous {
                source_name: src.name.clone(),
                target: tgt.name.clone(),
                source_grading: src.grading,
                target_grading: tgt.grading,
                shift: self.shift,
                needed: half(tgt.grading - src.grading + self.shift),
            });
        }
        self.toggle(row, col, exponent);
        Ok(())
    }

    /// F2-adds `U^exponent` at `(row, col)` without the homogeneity check.
    pub(crate) fn toggle(&mut self, row: usize, col: usize, exponent: u32) {
        let column = &mut self.columns[col];
        match column.get(&row) {
            Some(&e) => {
                debug_assert_eq!(e, exponent, "inhomogeneous update");
                column.remove(&row);
            }
            None => {
                column.insert(row, exponent);
            }
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.columns[col].get(&row).copied()
    }

    pub fn column(&self, col: usize) -> &BTreeMap<usize, u32> {
        &self.columns[col]
    }

    /// The image of the `col`-th source generator.
    pub fn column_chain(&self, col: usize) -> Chain {
        self.columns[col].iter().map(|(&r, &e)| (r, e)).collect()
    }

    pub fn row(&self, row: usize) -> Vec<(usize, u32)> {
        self.columns
            .iter()
            .enumerate()
            .filter_map(|(c, col)| col.get(&row).map(|&e| (c, e)))
            .collect()
    }

    /// For every row, the list of `(col, exponent)` entries.
    pub fn row_lists(&self) -> Vec<Vec<(usize, u32)>> {
        let mut rows = vec![Vec::new(); self.nrows()];
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, &e) in col {
                rows[r].push((c, e));
            }
        }
        rows
    }

    /// Entries as `(row, col, exponent)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, &e)| (r, c, e)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    pub fn max_exponent(&self) -> u32 {
        self.entries().map(|(_, _, e)| e).max().unwrap_or(0)
    }

    /// Applies the map to an element of the source module.
    pub fn apply(&self, v: &Chain) -> Chain {
        let mut out = Chain::new();
        for (c, e) in v.iter() {
            for (&r, &f) in &self.columns[c] {
                out.toggle(r, e + f);
            }
        }
        out
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &MonoMatrix) -> Result<MonoMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::IndexMismatch(
                "composition: source of the left map differs from target of the right map".into(),
            ));
        }
        let mut out = MonoMatrix::zero(self.rows.clone(), rhs.cols.clone(), self.shift + rhs.shift);
        for (c, col) in rhs.columns.iter().enumerate() {
            for (&mid, &e) in col {
                for (&r, &f) in &self.columns[mid] {
                    out.toggle(r, c, e + f);
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &MonoMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::IndexMismatch("maps have different bases".into()));
        }
        if self.shift != other.shift && !self.is_zero() && !other.is_zero() {
            return Err(Error::IndexMismatch(format!(
                "maps have different degree shifts {} and {}",
                self.shift, other.shift
            )));
        }
        Ok(())
    }

    /// F2-sum of two maps with the same bases and degree.
    pub fn sum(&self, other: &MonoMatrix) -> Result<MonoMatrix> {
        self.check_same_shape(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rest = if self.is_zero() { self } else { other };
        for (r, c, e) in rest.entries() {
            out.toggle(r, c, e);
        }
        Ok(out)
    }

    /// `U^n · self`.
    pub fn times_u(&self, n: u32) -> MonoMatrix {
        MonoMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            shift: self.shift + Grading::int(2 * i64::from(n)),
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|(&r, &e)| (r, e + n)).collect())
                .collect(),
        }
    }

    /// Transpose onto new bases; entry `U^n: x -> y` becomes `U^n: y' -> x'`
    /// where primes are the corresponding generators of `new_cols` / `new_rows`.
    pub fn transpose_onto(&self, new_rows: Arc<Basis>, new_cols: Arc<Basis>) -> Result<MonoMatrix> {
        if new_rows.len() != self.ncols() || new_cols.len() != self.nrows() {
            return Err(Error::IndexMismatch("transpose onto bases of the wrong size".into()));
        }
        let mut out = MonoMatrix::zero(new_rows, new_cols, self.shift);
        for (r, c, e) in self.entries() {
            out.add_entry(c, r, e)?;
        }
        Ok(out)
    }

    /// Same entries, relabelled onto bases of equal size.
    pub fn rebased(&self, rows: Arc<Basis>, cols: Arc<Basis>, shift: Grading) -> Result<MonoMatrix> {
        if rows.len() != self.nrows() || cols.len() != self.ncols() {
            return Err(Error::IndexMismatch("rebase onto bases of the wrong size".into()));
        }
        let mut out = MonoMatrix::zero(rows, cols, shift);
        for (r, c, e) in self.entries() {
            out.add_entry(r, c, e)?;
        }
        Ok(out)
    }

    /// Tensor product over F2[U]; `rows` and `cols` must enumerate pairs in
    /// the order `i * n_right + j`.
    pub fn kron(&self, other: &MonoMatrix, rows: Arc<Basis>, cols: Arc<Basis>) -> Result<MonoMatrix> {
        if rows.len() != self.nrows() * other.nrows() || cols.len() != self.ncols() * other.ncols() {
            return Err(Error::IndexMismatch("tensor product bases of the wrong size".into()));
        }
        let mut out = MonoMatrix::zero(rows, cols, self.shift + other.shift);
        for (r1, c1, e1) in self.entries() {
            for (r2, c2, e2) in other.entries() {
                let r = r1 * other.nrows() + r2;
                let c = c1 * other.ncols() + c2;
                out.toggle(r, c, e1 + e2);
            }
        }
        Ok(out)
    }

    /// Keeps the listed rows and columns (in the given order).
    pub fn restrict(&self, rows: &[usize], cols: &[usize], row_basis: Arc<Basis>, col_basis: Arc<Basis>) -> MonoMatrix {
        let mut row_pos = vec![None; self.nrows()];
        for (k, &r) in rows.iter().enumerate() {
            row_pos[r] = Some(k);
        }
        let mut out = MonoMatrix::zero(row_basis, col_basis, self.shift);
        for (k, &c) in cols.iter().enumerate() {
            for (&r, &e) in &self.columns[c] {
                if let Some(kr) = row_pos[r] {
                    out.toggle(kr, k, e);
                }
            }
        }
        out
    }

    /// Row operation `row[dst] += U^s row[src]`.
    pub(crate) fn add_row(&mut self, src: usize, dst: usize, s: u32) {
        for col in &mut self.columns {
            if let Some(&e) = col.get(&src) {
                match col.get(&dst) {
                    Some(&f) => {
                        debug_assert_eq!(f, e + s, "inhomogeneous row operation");
                        col.remove(&dst);
                    }
                    None => {
                        col.insert(dst, e + s);
                    }
                }
            }
        }
    }

    /// Column operation `col[dst] += U^s col[src]`.
    pub(crate) fn add_col(&mut self, src: usize, dst: usize, s: u32) {
        let source: Vec<(usize, u32)> = self.columns[src].iter().map(|(&r, &e)| (r, e)).collect();
        for (r, e) in source {
            self.toggle(r, dst, e + s);
        }
    }

    /// Change of basis on a square matrix with equal row/column bases: the
    /// generator `target` is replaced by `target + U^s source`. The matrix is
    /// conjugated accordingly (`T^{-1} M T` with `T = T^{-1}` over F2).
    pub(crate) fn conjugate_elementary(&mut self, source: usize, target: usize, s: u32) {
        self.add_col(source, target, s);
        self.add_row(target, source, s);
    }

    /// Human-readable list `x -> U^n y`.
    pub fn display_entries(&self) -> String {
        let mut lines = Vec::new();
        for (r, c, e) in self.entries() {
            let coeff = match e {
                0 => String::new(),
                1 => "U ".to_string(),
                _ => format!("U^{e} "),
            };
            lines.push(format!("{} -> {}{}", self.cols.name(c), coeff, self.rows.name(r)));
        }
        lines.join("\n")
    }
}

fn half(g: Grading) -> Grading {
    Grading::new(g.numer(), 2 * g.denom())
}
