//! ι-complexes: a free complex with a grading-preserving chain map `ι`
//! satisfying `ι² ≃ id`, and exactly one tower in homology.

use std::sync::Arc;

use crate::algebra::{Basis, Generator, MonoMatrix};
use crate::complex::{homology, is_chain_map, named_entries, null_homotopy, phi, GradedComplex, HomologyModule};
use crate::error::{Error, Result};
use crate::grading::Grading;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaComplex {
    complex: GradedComplex,
    iota: MonoMatrix,
}

/// Outcome of [`IotaComplex::validate`].
#[derive(Clone, Debug)]
pub struct IotaReport {
    pub problems: Vec<String>,
    /// `H` with `∂H + H∂ = ι² + id` when one exists.
    pub square_homotopy: Option<MonoMatrix>,
}

impl IotaReport {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty()
    }
}

impl IotaComplex {
    /// Pairs a complex with `ι`; only shapes are checked.
    pub fn from_parts(complex: GradedComplex, iota: MonoMatrix) -> Result<Self> {
        if iota.rows() != complex.basis() || iota.cols() != complex.basis() {
            return Err(Error::IndexMismatch("ι must be an endomorphism of the complex".into()));
        }
        if iota.shift() != Grading::ZERO && !iota.is_zero() {
            return Err(Error::IndexMismatch(format!("ι must preserve grading, got shift {}", iota.shift())));
        }
        let iota = if iota.shift() == Grading::ZERO {
            iota
        } else {
            MonoMatrix::zero(complex.basis().clone(), complex.basis().clone(), Grading::ZERO)
        };
        Ok(IotaComplex { complex, iota })
    }

    /// Builds from named data without validating.
    pub fn unchecked<'a>(
        gens: Vec<Generator>,
        arrows: impl IntoIterator<Item = (&'a str, &'a str, u32)>,
        iota: impl IntoIterator<Item = (&'a str, &'a str, u32)>,
    ) -> Result<Self> {
        let complex = GradedComplex::unchecked(gens, arrows)?;
        let b = complex.basis().clone();
        let iota = MonoMatrix::from_named_entries(b.clone(), b, Grading::ZERO, iota)?;
        IotaComplex::from_parts(complex, iota)
    }

    /// Builds from named data and validates.
    pub fn try_new<'a>(
        gens: Vec<Generator>,
        arrows: impl IntoIterator<Item = (&'a str, &'a str, u32)>,
        iota: impl IntoIterator<Item = (&'a str, &'a str, u32)>,
    ) -> Result<Self> {
        let x = IotaComplex::unchecked(gens, arrows, iota)?;
        x.check()?;
        Ok(x)
    }

    /// The unit `e`: one generator at grading `-2` with `ι = id`.
    pub fn unit() -> Self {
        let basis = Basis::new(vec![Generator::new("1", Grading::int(-2))]).expect("one name");
        let complex = GradedComplex::from_parts(MonoMatrix::zero(basis.clone(), basis.clone(), Grading::int(1)))
            .expect("zero differential");
        IotaComplex { complex, iota: MonoMatrix::identity(basis) }
    }

    pub fn complex(&self) -> &GradedComplex {
        &self.complex
    }

    pub fn iota(&self) -> &MonoMatrix {
        &self.iota
    }

    pub fn basis(&self) -> &Arc<Basis> {
        self.complex.basis()
    }

    pub fn diff(&self) -> &MonoMatrix {
        self.complex.diff()
    }

    pub fn len(&self) -> usize {
        self.complex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    pub fn iota_entries(&self) -> Vec<(String, String, u32)> {
        named_entries(&self.iota)
    }

    /// Checks every defining property; the `ι² ≃ id` homotopy is returned
    /// in the report when found.
    pub fn validate(&self) -> IotaReport {
        let mut problems = self.complex.validate();
        if !problems.is_empty() {
            return IotaReport { problems, square_homotopy: None };
        }
        let c = &self.complex;
        let d_iota = c.diff().compose(&self.iota).expect("shapes checked");
        let iota_d = self.iota.compose(c.diff()).expect("shapes checked");
        let defect = d_iota.sum(&iota_d).expect("same shape");
        for (r, col, e) in defect.entries() {
            problems.push(format!(
                "ι is not a chain map: (∂ι + ι∂)({}) contains U^{} {}",
                c.basis().name(col),
                e,
                c.basis().name(r)
            ));
        }
        let mut square_homotopy = None;
        if problems.is_empty() {
            let sq = self.iota.compose(&self.iota).expect("square");
            let target = sq.sum(&MonoMatrix::identity(c.basis().clone())).expect("same shape");
            match null_homotopy(c, c, &target) {
                Ok(Some(h)) => square_homotopy = Some(h),
                Ok(None) => problems.push("ι² is not chain homotopic to the identity".into()),
                Err(e) => problems.push(format!("ι² homotopy search failed: {e}")),
            }
        }
        match homology(c) {
            Ok(h) if h.tower_count() == 1 => {}
            Ok(h) => problems.push(format!("homology has {} towers, expected exactly one", h.tower_count())),
            Err(e) => problems.push(format!("homology failed: {e}")),
        }
        IotaReport { problems, square_homotopy }
    }

    /// Validates, returning the `ι² ≃ id` witness.
    pub fn check(&self) -> Result<MonoMatrix> {
        let report = self.validate();
        if !report.is_ok() {
            return Err(Error::InvalidIota(report.problems));
        }
        report.square_homotopy.ok_or_else(|| Error::Internal("missing ι² witness".into()))
    }

    pub fn homology(&self) -> Result<HomologyModule> {
        homology(&self.complex)
    }

    /// `d = tower top + 2`.
    pub fn d(&self) -> Result<Grading> {
        Ok(self.homology()?.single_tower()?.grading + Grading::int(2))
    }

    pub fn shifted(&self, by: Grading) -> IotaComplex {
        let complex = self.complex.shifted(by);
        let b = complex.basis().clone();
        let iota = self.iota.rebased(b.clone(), b, Grading::ZERO).expect("uniform shift");
        IotaComplex { complex, iota }
    }

    /// Renames generators; `f` must be injective.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Result<IotaComplex> {
        let b = Basis::new(self.basis().iter().map(|g| Generator::new(f(&g.name), g.grading)).collect())?;
        let diff = self.diff().rebased(b.clone(), b.clone(), Grading::int(1))?;
        let iota = self.iota.rebased(b.clone(), b, Grading::ZERO)?;
        Ok(IotaComplex { complex: GradedComplex::from_parts(diff)?, iota })
    }
}

/// `gr(x ⊗ y) = gr(x) + gr(y) + 2`, so that the unit is neutral.
pub fn tensor_shift() -> Grading {
    Grading::int(2)
}

fn tensor_basis(a: &Basis, b: &Basis) -> Result<Arc<Basis>> {
    let mut gens = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            gens.push(Generator::new(format!("{}|{}", x.name, y.name), x.grading + y.grading + tensor_shift()));
        }
    }
    Basis::new(gens)
}

/// `∂ ⊗ 1 + 1 ⊗ ∂` on `x|y`, without any ι.
pub fn tensor_complexes(a: &GradedComplex, b: &GradedComplex) -> Result<GradedComplex> {
    let basis = tensor_basis(a.basis(), b.basis())?;
    let ia = MonoMatrix::identity(a.basis().clone());
    let ib = MonoMatrix::identity(b.basis().clone());
    let d1 = a.diff().kron(&ib, basis.clone(), basis.clone())?;
    let d2 = ia.kron(b.diff(), basis.clone(), basis.clone())?;
    GradedComplex::from_parts(d1.sum(&d2)?)
}

/// The product: tensor complex with `ι = ι₁ ⊗ ι₂`.
pub fn tensor(x: &IotaComplex, y: &IotaComplex) -> Result<IotaComplex> {
    let complex = tensor_complexes(x.complex(), y.complex())?;
    let b = complex.basis().clone();
    let iota = x.iota().kron(y.iota(), b.clone(), b)?;
    IotaComplex::from_parts(complex, iota)
}

/// Left-nested product of a non-empty list.
pub fn tensor_all(items: &[IotaComplex]) -> Result<IotaComplex> {
    let (first, rest) = items.split_first().ok_or_else(|| Error::Argument("empty product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, y| tensor(&acc, y))
}

/// `n`-fold product of `x` with itself; `n = 0` gives the unit.
pub fn power(x: &IotaComplex, n: usize) -> Result<IotaComplex> {
    if n == 0 {
        return Ok(IotaComplex::unit());
    }
    tensor_all(&vec![x.clone(); n])
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(stem) => stem.to_string(),
        None => format!("{name}*"),
    }
}

/// Grading of `x^∨` given that of `x`; the unit is self-dual.
pub fn dual_grading(g: Grading) -> Grading {
    -g - Grading::int(4)
}

/// `Hom(C, F2[U])`: arrows reversed, gradings reflected through the unit.
pub fn dual(x: &IotaComplex) -> Result<IotaComplex> {
    let b = Basis::new(x.basis().iter().map(|g| Generator::new(dual_name(&g.name), dual_grading(g.grading))).collect())?;
    let diff = x.diff().transpose_onto(b.clone(), b.clone())?;
    let iota = x.iota().transpose_onto(b.clone(), b)?;
    IotaComplex::from_parts(GradedComplex::from_parts(diff)?, iota)
}

/// Witness that `U(Φ₁ι₁ ⊗ Φ₂ι₂)` is null-homotopic on `X ⊗ Y`.
#[derive(Clone, Debug)]
pub struct PhiCorrection {
    pub product: IotaComplex,
    pub correction: MonoMatrix,
    pub homotopy: MonoMatrix,
}

impl PhiCorrection {
    pub fn verify(&self) -> Result<bool> {
        let d = self.product.diff();
        let lhs = d.compose(&self.homotopy)?.sum(&self.homotopy.compose(d)?)?;
        Ok(lhs == self.correction)
    }
}

pub fn check_phi_correction(x: &IotaComplex, y: &IotaComplex) -> Result<PhiCorrection> {
    let product = tensor(x, y)?;
    let b = product.basis().clone();
    let left = phi(x.complex()).compose(x.iota())?;
    let right = phi(y.complex()).compose(y.iota())?;
    let correction = left.kron(&right, b.clone(), b)?.times_u(1);
    if !is_chain_map(product.complex(), product.complex(), &correction)? {
        return Err(Error::Internal("U(Φι ⊗ Φι) is not a chain map".into()));
    }
    let homotopy = null_homotopy(product.complex(), product.complex(), &correction)?
        .ok_or_else(|| Error::Internal("no homotopy for U(Φι ⊗ Φι); UΦ should be null-homotopic".into()))?;
    let out = PhiCorrection { product, correction, homotopy };
    if !out.verify()? {
        return Err(Error::Internal("Φ-correction homotopy failed to re-verify".into()));
    }
    Ok(out)
}
