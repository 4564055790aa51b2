//! Local equivalence of ι-complexes and the group they form.

use crate::algebra::{Chain, MonoMatrix};
use crate::complex::{is_chain_map, null_homotopy, MapSystem, Term};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::iota::{dual, tensor, IotaComplex};

/// A grading-preserving chain map `F: X -> Y` with `Fι + ιF = ∂H + H∂`
/// that is an isomorphism after inverting `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMapWitness {
    pub f: MonoMatrix,
    pub h: MonoMatrix,
    /// `F(tower of X)` is `U^k` times the tower of `Y`.
    pub tower_exponent: u32,
}

impl LocalMapWitness {
    /// Re-checks all three conditions from scratch.
    pub fn verify(&self, x: &IotaComplex, y: &IotaComplex) -> Result<bool> {
        if !is_chain_map(x.complex(), y.complex(), &self.f)? {
            return Ok(false);
        }
        let lhs = self.f.compose(x.iota())?.sum(&y.iota().compose(&self.f)?)?;
        let rhs = y.diff().compose(&self.h)?.sum(&self.h.compose(x.diff())?)?;
        if lhs != rhs {
            return Ok(false);
        }
        Ok(tower_coefficient(&self.f, x, y)? == Some(self.tower_exponent))
    }
}

/// Coordinate of `F(tower of X)` along the tower of `Y`.
fn tower_coefficient(f: &MonoMatrix, x: &IotaComplex, y: &IotaComplex) -> Result<Option<u32>> {
    let hx = x.homology()?;
    let hy = y.homology()?;
    let tower_x = hx.single_tower()?;
    let slot_y = hy.summands().iter().position(|s| s.is_tower()).ok_or(Error::TowerCount(0))?;
    let image: Chain = f.apply(&tower_x.representative);
    Ok(hy.classify(&image)?[slot_y])
}

/// Searches the affine space of pairs `(F, H)` for one whose `F` is
/// nonzero on the localized tower.
pub fn find_local_map(x: &IotaComplex, y: &IotaComplex) -> Result<Option<LocalMapWitness>> {
    let mut sys = MapSystem::new();
    let f = sys.add_unknown(y.basis().clone(), x.basis().clone(), Grading::ZERO);
    let h = sys.add_unknown(y.basis().clone(), x.basis().clone(), Grading::int(-1));
    sys.add_relation(&[Term::new(Some(y.diff()), f, None), Term::new(None, f, Some(x.diff()))], None)?;
    sys.add_relation(
        &[
            Term::new(None, f, Some(x.iota())),
            Term::new(Some(y.iota()), f, None),
            Term::new(Some(y.diff()), h, None),
            Term::new(None, h, Some(x.diff())),
        ],
        None,
    )?;
    let space = sys.solve();
    for k in &space.kernel {
        let fk = sys.extract(f, k);
        if let Some(e) = tower_coefficient(&fk, x, y)? {
            let w = LocalMapWitness { f: fk, h: sys.extract(h, k), tower_exponent: e };
            if !w.verify(x, y)? {
                return Err(Error::Internal("local map witness failed to re-verify".into()));
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Witnesses in both directions.
#[derive(Clone, Debug)]
pub struct LocalEquivalence {
    pub forward: Option<LocalMapWitness>,
    pub backward: Option<LocalMapWitness>,
}

impl LocalEquivalence {
    pub fn holds(&self) -> bool {
        self.forward.is_some() && self.backward.is_some()
    }
}

pub fn local_equivalence(x: &IotaComplex, y: &IotaComplex) -> Result<LocalEquivalence> {
    Ok(LocalEquivalence { forward: find_local_map(x, y)?, backward: find_local_map(y, x)? })
}

pub fn group_unit() -> IotaComplex {
    IotaComplex::unit()
}

pub fn group_product(x: &IotaComplex, y: &IotaComplex) -> Result<IotaComplex> {
    tensor(x, y)
}

pub fn group_inverse(x: &IotaComplex) -> Result<IotaComplex> {
    dual(x)
}

/// `γ: e -> X ⊗ X^∨`, `1 ↦ Σ x ⊗ x^∨`, and the trace `ζ: X ⊗ X^∨ -> e`,
/// with homotopies `∂H + H∂ = ιγ + γι` and `∂K + K∂ = ιζ + ζι`.
#[derive(Clone, Debug)]
pub struct DualityWitness {
    pub product: IotaComplex,
    pub gamma: MonoMatrix,
    pub zeta: MonoMatrix,
    pub gamma_homotopy: MonoMatrix,
    pub zeta_homotopy: MonoMatrix,
}

impl DualityWitness {
    pub fn verify(&self) -> Result<bool> {
        let e = IotaComplex::unit();
        let p = &self.product;
        if !is_chain_map(e.complex(), p.complex(), &self.gamma)? || !is_chain_map(p.complex(), e.complex(), &self.zeta)? {
            return Ok(false);
        }
        if self.zeta.compose(&self.gamma)? != MonoMatrix::identity(e.basis().clone()) {
            return Ok(false);
        }
        let commutes = |map: &MonoMatrix, src: &IotaComplex, tgt: &IotaComplex, hom: &MonoMatrix| -> Result<bool> {
            let lhs = tgt.iota().compose(map)?.sum(&map.compose(src.iota())?)?;
            let rhs = tgt.diff().compose(hom)?.sum(&hom.compose(src.diff())?)?;
            Ok(lhs == rhs)
        };
        Ok(commutes(&self.gamma, &e, p, &self.gamma_homotopy)? && commutes(&self.zeta, p, &e, &self.zeta_homotopy)?)
    }
}

pub fn duality_witness(x: &IotaComplex) -> Result<DualityWitness> {
    let e = IotaComplex::unit();
    let xd = dual(x)?;
    let product = tensor(x, &xd)?;
    let unit = e.basis().name(0).to_string();
    let diagonal: Vec<String> =
        x.basis().iter().zip(xd.basis().iter()).map(|(a, b)| format!("{}|{}", a.name, b.name)).collect();
    let gamma = MonoMatrix::from_named_entries(
        product.basis().clone(),
        e.basis().clone(),
        Grading::ZERO,
        diagonal.iter().map(|n| (unit.as_str(), n.as_str(), 0)),
    )?;
    let zeta = MonoMatrix::from_named_entries(
        e.basis().clone(),
        product.basis().clone(),
        Grading::ZERO,
        diagonal.iter().map(|n| (n.as_str(), unit.as_str(), 0)),
    )?;
    let gamma_defect = product.iota().compose(&gamma)?.sum(&gamma.compose(e.iota())?)?;
    let zeta_defect = e.iota().compose(&zeta)?.sum(&zeta.compose(product.iota())?)?;
    let gamma_homotopy = null_homotopy(e.complex(), product.complex(), &gamma_defect)?
        .ok_or_else(|| Error::Internal("γ does not commute with ι up to homotopy".into()))?;
    let zeta_homotopy = null_homotopy(product.complex(), e.complex(), &zeta_defect)?
        .ok_or_else(|| Error::Internal("ζ does not commute with ι up to homotopy".into()))?;
    let w = DualityWitness { product, gamma, zeta, gamma_homotopy, zeta_homotopy };
    if !w.verify()? {
        return Err(Error::Internal("duality witness failed to re-verify".into()));
    }
    Ok(w)
}
