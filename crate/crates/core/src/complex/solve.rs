//! Linear systems whose unknowns are homogeneous maps.
//!
//! Each unknown map has one F2 variable per homogeneity-allowed position.
//! A relation `Σ L_k ∘ X_k ∘ R_k = K` contributes one equation per matrix
//! position; homogeneity makes the exponent at a position irrelevant.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::GradedComplex;
use crate::algebra::{F2SolutionSpace, F2System, F2Vec, MonoMatrix};
use crate::algebra::Basis;
use crate::error::{Error, Result};
use crate::grading::Grading;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnknownId(usize);

#[derive(Clone, Debug)]
struct Unknown {
    rows: Arc<Basis>,
    cols: Arc<Basis>,
    shift: Grading,
    /// `(row, col, exponent)` per variable.
    slots: Vec<(usize, usize, u32)>,
    offset: usize,
}

/// `left ∘ X ∘ right`; a missing side is the identity.
#[derive(Clone, Copy, Debug)]
pub struct Term<'a> {
    pub left: Option<&'a MonoMatrix>,
    pub unknown: UnknownId,
    pub right: Option<&'a MonoMatrix>,
}

impl<'a> Term<'a> {
    pub fn new(left: Option<&'a MonoMatrix>, unknown: UnknownId, right: Option<&'a MonoMatrix>) -> Self {
        Term { left, unknown, right }
    }

    pub fn bare(unknown: UnknownId) -> Self {
        Term { left: None, unknown, right: None }
    }
}

#[derive(Clone, Debug, Default)]
pub struct MapSystem {
    unknowns: Vec<Unknown>,
    num_vars: usize,
    equations: Vec<(Vec<usize>, bool)>,
}

impl MapSystem {
    pub fn new() -> Self {
        MapSystem::default()
    }

    /// Declares an unknown map `cols -> rows` of degree shift `shift`.
    pub fn add_unknown(&mut self, rows: Arc<Basis>, cols: Arc<Basis>, shift: Grading) -> UnknownId {
        let probe = MonoMatrix::zero(rows.clone(), cols.clone(), shift);
        let mut slots = Vec::new();
        for c in 0..cols.len() {
            for r in 0..rows.len() {
                if let Some(e) = probe.allowed_exponent(r, c) {
                    slots.push((r, c, e));
                }
            }
        }
        let offset = self.num_vars;
        self.num_vars += slots.len();
        self.unknowns.push(Unknown { rows, cols, shift, slots, offset });
        UnknownId(self.unknowns.len() - 1)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_equations(&self) -> usize {
        self.equations.len()
    }

    /// The variable for position `(row, col)` of an unknown, if allowed.
    pub fn variable(&self, id: UnknownId, row: usize, col: usize) -> Option<usize> {
        let u = &self.unknowns[id.0];
        u.slots.iter().position(|&(r, c, _)| r == row && c == col).map(|k| u.offset + k)
    }

    /// Adds `Σ terms = constant` (zero when `constant` is `None`).
    pub fn add_relation(&mut self, terms: &[Term<'_>], constant: Option<&MonoMatrix>) -> Result<()> {
        let mut positions: BTreeMap<(usize, usize), (Vec<usize>, bool)> = BTreeMap::new();
        for term in terms {
            let u = &self.unknowns[term.unknown.0];
            if let Some(l) = term.left {
                if l.cols() != &u.rows {
                    return Err(Error::IndexMismatch("left factor does not match the unknown's target".into()));
                }
            }
            if let Some(r) = term.right {
                if r.rows() != &u.cols {
                    return Err(Error::IndexMismatch("right factor does not match the unknown's source".into()));
                }
            }
            let right_rows = term.right.map(MonoMatrix::row_lists);
            for (k, &(r0, c0, _)) in u.slots.iter().enumerate() {
                let var = u.offset + k;
                let targets: Vec<usize> = match term.left {
                    Some(l) => l.column(r0).keys().copied().collect(),
                    None => vec![r0],
                };
                let sources: Vec<usize> = match &right_rows {
                    Some(rows) => rows[c0].iter().map(|&(c, _)| c).collect(),
                    None => vec![c0],
                };
                for &r in &targets {
                    for &c in &sources {
                        positions.entry((r, c)).or_default().0.push(var);
                    }
                }
            }
        }
        if let Some(k) = constant {
            for (r, c, _) in k.entries() {
                let slot = positions.entry((r, c)).or_default();
                slot.1 = !slot.1;
            }
        }
        for (_, (vars, rhs)) in positions {
            self.equations.push((vars, rhs));
        }
        Ok(())
    }

    /// Adds `Σ vars = rhs` directly.
    pub fn add_linear(&mut self, vars: Vec<usize>, rhs: bool) {
        self.equations.push((vars, rhs));
    }

    pub fn solve(&self) -> F2SolutionSpace {
        let mut sys = F2System::with_unknowns(self.num_vars);
        for (vars, rhs) in &self.equations {
            sys.push(vars.iter().copied(), *rhs);
        }
        sys.solve()
    }

    /// Reads the unknown `id` off a solution vector.
    pub fn extract(&self, id: UnknownId, x: &F2Vec) -> MonoMatrix {
        let u = &self.unknowns[id.0];
        let mut m = MonoMatrix::zero(u.rows.clone(), u.cols.clone(), u.shift);
        for (k, &(r, c, e)) in u.slots.iter().enumerate() {
            if x.get(u.offset + k) {
                m.toggle(r, c, e);
            }
        }
        m
    }
}

/// A homotopy `H` with `∂_target H + H ∂_source = f`, if one exists.
pub fn null_homotopy(source: &GradedComplex, target: &GradedComplex, f: &MonoMatrix) -> Result<Option<MonoMatrix>> {
    let mut sys = MapSystem::new();
    let h = sys.add_unknown(target.basis().clone(), source.basis().clone(), f.shift() - Grading::int(1));
    sys.add_relation(
        &[Term::new(Some(target.diff()), h, None), Term::new(None, h, Some(source.diff()))],
        Some(f),
    )?;
    Ok(sys.solve().particular.map(|x| sys.extract(h, &x)))
}

/// All chain maps of a given degree shift, as an F2 vector space.
#[derive(Clone, Debug)]
pub struct ChainMapSpace {
    pub system: MapSystem,
    pub unknown: UnknownId,
    pub solutions: F2SolutionSpace,
}

impl ChainMapSpace {
    pub fn dimension(&self) -> usize {
        self.solutions.dimension()
    }

    pub fn basis(&self) -> Vec<MonoMatrix> {
        self.solutions.kernel.iter().map(|x| self.system.extract(self.unknown, x)).collect()
    }
}

pub fn chain_map_space(source: &GradedComplex, target: &GradedComplex, shift: Grading) -> Result<ChainMapSpace> {
    let mut system = MapSystem::new();
    let f = system.add_unknown(target.basis().clone(), source.basis().clone(), shift);
    system.add_relation(&[Term::new(Some(target.diff()), f, None), Term::new(None, f, Some(source.diff()))], None)?;
    let solutions = system.solve();
    Ok(ChainMapSpace { system, unknown: f, solutions })
}
