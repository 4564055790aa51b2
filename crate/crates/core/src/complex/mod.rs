//! Free graded chain complexes over F2[U].

mod cancel;
pub mod gradewise;
pub mod homology;
pub mod maps;
pub mod reduce;
pub mod solve;

use std::sync::Arc;

use crate::algebra::{Basis, Generator, MonoMatrix};
use crate::error::{Error, Result};
use crate::grading::Grading;

pub use gradewise::Gradewise;
pub use homology::{d_invariant, homology, HomologyModule, Summand, SummandKind};
pub use maps::{induced_on_homology, is_chain_map, phi, InducedMap};
pub use reduce::{reduce, Reduced};
pub use solve::{chain_map_space, null_homotopy, ChainMapSpace, MapSystem, Term, UnknownId};

/// Degree shift of a differential.
pub fn diff_shift() -> Grading {
    Grading::int(1)
}

/// A finitely generated free complex; the differential lowers grading by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    basis: Arc<Basis>,
    diff: MonoMatrix,
}

impl GradedComplex {
    /// Wraps a differential without checking `∂² = 0`.
    pub fn from_parts(diff: MonoMatrix) -> Result<Self> {
        if diff.rows() != diff.cols() {
            return Err(Error::IndexMismatch("differential must be square on one basis".into()));
        }
        if diff.shift() != diff_shift() {
            return Err(Error::IndexMismatch(format!("differential has degree shift {}, expected 1", diff.shift())));
        }
        Ok(GradedComplex { basis: diff.cols().clone(), diff })
    }

    /// Builds and validates a complex from generators and `(source, target, exponent)` arrows.
    pub fn try_new<'a>(gens: Vec<Generator>, arrows: impl IntoIterator<Item = (&'a str, &'a str, u32)>) -> Result<Self> {
        let c = GradedComplex::unchecked(gens, arrows)?;
        c.check()?;
        Ok(c)
    }

    /// Like [`GradedComplex::try_new`] but only enforces homogeneity.
    pub fn unchecked<'a>(gens: Vec<Generator>, arrows: impl IntoIterator<Item = (&'a str, &'a str, u32)>) -> Result<Self> {
        let basis = Basis::new(gens)?;
        let diff = MonoMatrix::from_named_entries(basis.clone(), basis, diff_shift(), arrows)?;
        GradedComplex::from_parts(diff)
    }

    pub fn empty() -> Self {
        let b = Basis::empty();
        GradedComplex { basis: b.clone(), diff: MonoMatrix::zero(b.clone(), b, diff_shift()) }
    }

    pub fn basis(&self) -> &Arc<Basis> {
        &self.basis
    }

    pub fn diff(&self) -> &MonoMatrix {
        &self.diff
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        self.basis.gens()
    }

    /// Violated invariants, one line each.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if let Some(first) = self.basis.gens().first() {
            for g in self.basis.iter() {
                if !g.grading.same_coset(&first.grading) {
                    problems.push(format!(
                        "generator {} has grading {} outside the coset of {} ({})",
                        g.name, g.grading, first.name, first.grading
                    ));
                }
            }
        }
        let dd = self.diff.compose(&self.diff).expect("square differential");
        for (r, c, e) in dd.entries() {
            problems.push(format!(
                "∂² ≠ 0: ∂²({}) contains U^{} {}",
                self.basis.name(c),
                e,
                self.basis.name(r)
            ));
        }
        problems
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn check(&self) -> Result<()> {
        let problems = self.validate();
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(problems))
        }
    }

    /// Same complex with every grading moved by `by`.
    pub fn shifted(&self, by: Grading) -> GradedComplex {
        let basis = shifted_basis(&self.basis, by);
        let diff = self.diff.rebased(basis.clone(), basis.clone(), diff_shift()).expect("uniform shift keeps homogeneity");
        GradedComplex { basis, diff }
    }

    /// The ∂ arrows as `(source, target, exponent)` names.
    pub fn arrows(&self) -> Vec<(String, String, u32)> {
        named_entries(&self.diff)
    }
}

pub(crate) fn shifted_basis(basis: &Basis, by: Grading) -> Arc<Basis> {
    Basis::new(basis.iter().map(|g| Generator::new(g.name.clone(), g.grading + by)).collect())
        .expect("names unchanged")
}

/// Entries of a map as `(source, target, exponent)` names.
pub fn named_entries(m: &MonoMatrix) -> Vec<(String, String, u32)> {
    m.entries()
        .map(|(r, c, e)| (m.cols().name(c).to_string(), m.rows().name(r).to_string(), e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, gr: i64) -> Generator {
        Generator::new(name, Grading::int(gr))
    }

    #[test]
    fn empty_complex_is_valid() {
        assert!(GradedComplex::empty().is_valid());
    }

    #[test]
    fn sigma_model_is_valid() {
        let c = GradedComplex::try_new(vec![g("a", -2), g("b", -2), g("c", -3)], [("c", "a", 1), ("c", "b", 1)]).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn square_nonzero_is_reported() {
        // ∂a = b, ∂b = U a
        let c = GradedComplex::unchecked(vec![g("a", 0), g("b", -1)], [("a", "b", 0), ("b", "a", 1)]).unwrap();
        let problems = c.validate();
        assert_eq!(problems.len(), 2);
        assert!(problems[0].contains("∂²"));
        assert!(matches!(GradedComplex::try_new(vec![g("a", 0), g("b", -1)], [("a", "b", 0), ("b", "a", 1)]), Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn inhomogeneous_arrow_is_rejected() {
        let err = GradedComplex::unchecked(vec![g("a", 0), g("b", 0)], [("a", "b", 0)]).unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous { .. }));
    }

    #[test]
    fn mixed_cosets_are_reported() {
        let c = GradedComplex::unchecked(
            vec![g("a", 0), Generator::new("b", Grading::new(1, 2))],
            std::iter::empty(),
        )
        .unwrap();
        assert_eq!(c.validate().len(), 1);
    }
}
