//! Chain maps: the Φ map, chain-map checks, and induced maps on homology.

use std::fmt;

use super::homology::HomologyModule;
use super::GradedComplex;
use crate::algebra::MonoMatrix;
use crate::error::Result;
use crate::grading::Grading;

/// The formal derivative `d∂/dU`: an entry `U^n` contributes `n U^{n-1}`.
/// Raises grading by one.
pub fn phi(c: &GradedComplex) -> MonoMatrix {
    let mut out = MonoMatrix::zero(c.basis().clone(), c.basis().clone(), Grading::int(-1));
    for (r, col, e) in c.diff().entries() {
        if e % 2 == 1 {
            out.toggle(r, col, e - 1);
        }
    }
    out
}

/// `∂_target f + f ∂_source = 0`.
pub fn is_chain_map(source: &GradedComplex, target: &GradedComplex, f: &MonoMatrix) -> Result<bool> {
    let left = target.diff().compose(f)?;
    let right = f.compose(source.diff())?;
    Ok(left.sum(&right)?.is_zero())
}

/// A map on homology: for each source summand, the target summands hit and
/// the power of `U` on each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub columns: Vec<Vec<(usize, u32)>>,
}

impl InducedMap {
    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn image_of(&self, source: usize) -> &[(usize, u32)] {
        &self.columns[source]
    }

    pub fn display(&self, source: &HomologyModule, target: &HomologyModule) -> String {
        let mut lines = Vec::new();
        for (k, col) in self.columns.iter().enumerate() {
            let image: Vec<String> = col
                .iter()
                .map(|&(t, e)| {
                    let u = match e {
                        0 => String::new(),
                        1 => "U·".to_string(),
                        _ => format!("U^{e}·"),
                    };
                    format!("{u}[{}]", target.summands()[t])
                })
                .collect();
            let rhs = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
            lines.push(format!("[{}] -> {}", source.summands()[k], rhs));
        }
        lines.join("\n")
    }
}

impl fmt::Display for InducedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, col) in self.columns.iter().enumerate() {
            writeln!(f, "{k}: {col:?}")?;
        }
        Ok(())
    }
}

/// Expresses `f(representative)` in the target's summand basis.
pub fn induced_on_homology(f: &MonoMatrix, source: &HomologyModule, target: &HomologyModule) -> Result<InducedMap> {
    let mut columns = Vec::with_capacity(source.summands().len());
    for s in source.summands() {
        let image = f.apply(&s.representative);
        let coords = target.classify(&image)?;
        columns.push(coords.iter().enumerate().filter_map(|(t, c)| c.map(|e| (t, e))).collect());
    }
    Ok(InducedMap { columns })
}
