//! The complex one grading at a time.
//!
//! `C_r` has basis `{U^k x : gr(x) - 2k = r, k ≥ 0}`, so each generator
//! contributes at most one basis vector and a vector in `C_r` is a subset of
//! generators. Homogeneous maps act on these subsets through their `U = 1`
//! pattern.

use crate::algebra::{EchelonSpan, F2Vec, MonoMatrix};
use crate::complex::GradedComplex;
use crate::grading::Grading;

#[derive(Clone, Debug)]
pub struct Gradewise<'a> {
    complex: &'a GradedComplex,
    bound: u32,
}

impl<'a> Gradewise<'a> {
    pub fn new(complex: &'a GradedComplex) -> Self {
        let bound = match (complex.basis().max_grading(), complex.basis().min_grading()) {
            (Some(hi), Some(lo)) => {
                let span = hi - lo;
                (span.numer() / span.denom()).div_euclid(2) as u32 + 1
            }
            _ => 1,
        };
        Gradewise { complex, bound }
    }

    pub fn complex(&self) -> &GradedComplex {
        self.complex
    }

    /// A power `N` with `U^N` killing all torsion in homology.
    pub fn torsion_bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.complex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    /// `U`-power of generator `i` in `C_r`, if it contributes.
    pub fn power(&self, i: usize, r: Grading) -> Option<u32> {
        let k = (self.complex.basis().grading(i) - r).half_integer()?;
        u32::try_from(k).ok()
    }

    pub fn basis_at(&self, r: Grading) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.power(i, r).is_some()).collect()
    }

    pub fn dim(&self, r: Grading) -> usize {
        self.basis_at(r).len()
    }

    /// `m` applied to a vector of `C_r`.
    pub fn apply(&self, m: &MonoMatrix, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(m.nrows());
        for c in v.ones() {
            for &r in m.column(c).keys() {
                out.flip(r);
            }
        }
        out
    }

    /// Boundaries in `C_s`.
    pub fn boundaries(&self, s: Grading) -> EchelonSpan {
        let above = s + Grading::int(1);
        let images: Vec<F2Vec> = self
            .basis_at(above)
            .into_iter()
            .map(|j| self.apply(self.complex.diff(), &F2Vec::from_ones(self.len(), [j])))
            .collect();
        EchelonSpan::from_vectors(self.len(), &images)
    }

    /// For a cycle `v ∈ C_r`: whether its class survives multiplication by
    /// `U^N`, i.e. has a nonzero component along the tower.
    pub fn lambda(&self, r: Grading, v: &F2Vec) -> bool {
        let deep = r.u_shift(self.bound);
        !self.boundaries(deep).contains(v)
    }

    /// `dim H_r` by plain F2 ranks.
    pub fn homology_dim(&self, r: Grading) -> usize {
        let basis = self.basis_at(r);
        let images: Vec<F2Vec> = basis
            .iter()
            .map(|&j| self.apply(self.complex.diff(), &F2Vec::from_ones(self.len(), [j])))
            .collect();
        let rank_out = EchelonSpan::from_vectors(self.len(), &images).dimension();
        basis.len() - rank_out - self.boundaries(r).dimension()
    }
}
