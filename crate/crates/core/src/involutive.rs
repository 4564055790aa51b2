//! The involutive mapping cone and the correction terms `d̲`, `d̄`.
//!
//! Two independent computations are provided: from the two towers in the
//! homology of the cone, and from the gradewise characterisation by
//! homogeneous elements `v, w` (lower) and `x, y, z` (upper).

use serde::{Deserialize, Serialize};

use crate::algebra::{Basis, Chain, F2System, F2Vec, Generator, MonoMatrix};
use crate::complex::{homology, induced_on_homology, Gradewise, GradedComplex, HomologyModule, InducedMap};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::iota::IotaComplex;

/// `C ⊕ Q·C` with `∂x = ∂x + Q(1+ι)x`, `∂(Qx) = Q∂x`; `x` sits one grading
/// above its copy in `C`, `Qx` at the original grading.
#[derive(Clone, Debug)]
pub struct ConeComplex {
    pub complex: GradedComplex,
    /// `x ↦ Qx`, `Qx ↦ 0`.
    pub q: MonoMatrix,
}

pub fn q_name(name: &str) -> String {
    format!("Q.{name}")
}

pub fn build_cone(x: &IotaComplex) -> Result<ConeComplex> {
    let n = x.len();
    let mut gens: Vec<Generator> = x.basis().iter().map(|g| Generator::new(g.name.clone(), g.grading + Grading::int(1))).collect();
    gens.extend(x.basis().iter().map(|g| Generator::new(q_name(&g.name), g.grading)));
    let basis = Basis::new(gens)?;
    let mut diff = MonoMatrix::zero(basis.clone(), basis.clone(), Grading::int(1));
    for (r, c, e) in x.diff().entries() {
        diff.add_entry(r, c, e)?;
        diff.add_entry(n + r, n + c, e)?;
    }
    let one_plus_iota = one_plus(x.iota());
    for (r, c, e) in one_plus_iota.entries() {
        diff.add_entry(n + r, c, e)?;
    }
    let mut q = MonoMatrix::zero(basis.clone(), basis, Grading::int(1));
    for k in 0..n {
        q.add_entry(n + k, k, 0)?;
    }
    Ok(ConeComplex { complex: GradedComplex::from_parts(diff)?, q })
}

/// `1 + m` on a square grading-preserving map.
pub fn one_plus(m: &MonoMatrix) -> MonoMatrix {
    m.sum(&MonoMatrix::identity(m.cols().clone())).expect("square map")
}

#[derive(Clone, Debug)]
pub struct InvolutiveSummary {
    pub d: Grading,
    pub d_lower: Grading,
    pub d_upper: Grading,
    pub hfi: HomologyModule,
    pub q_action: InducedMap,
    pub cone: ConeComplex,
}

impl InvolutiveSummary {
    pub fn triple(&self) -> (Grading, Grading, Grading) {
        (self.d_lower, self.d, self.d_upper)
    }
}

/// From the cone's towers: with `t₊ ≡ d` and `t₋ ≢ d (mod 2)` their top
/// gradings, `d̄ = t₊ + 2` and `d̲ = t₋ + 1`.
pub fn correction_terms_cone(x: &IotaComplex) -> Result<InvolutiveSummary> {
    let d = x.d()?;
    let cone = build_cone(x)?;
    let hfi = homology(&cone.complex)?;
    let towers = hfi.towers();
    if towers.len() != 2 {
        return Err(Error::Structure(format!("cone homology has {} towers, expected two", towers.len())));
    }
    let (even, odd): (Vec<Grading>, Vec<Grading>) = towers.iter().partition(|t| t.same_parity(&d));
    let (&[t_plus], &[t_minus]) = (even.as_slice(), odd.as_slice()) else {
        return Err(Error::Structure(format!("cone towers at {} and {} have equal parity", towers[0], towers[1])));
    };
    let q_action = induced_on_homology(&cone.q, &hfi, &hfi)?;
    Ok(InvolutiveSummary {
        d,
        d_lower: t_minus + Grading::int(1),
        d_upper: t_plus + Grading::int(2),
        hfi,
        q_action,
        cone,
    })
}

/// Correction terms of a large-surgery model; the same computation as the cone.
pub fn ai0_terms(model: &IotaComplex) -> Result<InvolutiveSummary> {
    correction_terms_cone(model)
}

/// Homogeneous element as a set of generators at one grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedElement {
    pub grading: Grading,
    pub generators: Vec<String>,
}

impl GradedElement {
    fn new(gw: &Gradewise<'_>, grading: Grading, v: &F2Vec) -> Self {
        let b = gw.complex().basis();
        let generators = v
            .ones()
            .map(|i| {
                let k = gw.power(i, grading).expect("vector supported at its grading");
                match k {
                    0 => b.name(i).to_string(),
                    1 => format!("U {}", b.name(i)),
                    _ => format!("U^{k} {}", b.name(i)),
                }
            })
            .collect();
        GradedElement { grading, generators }
    }

    /// Parses the `U^k name` terms back into a chain of `x`, checking that
    /// every term sits at the recorded grading.
    pub fn to_chain(&self, basis: &Basis) -> Result<Chain> {
        let mut c = Chain::new();
        for term in &self.generators {
            let (k, name) = match term.split_once(' ') {
                Some(("U", name)) => (1, name),
                Some((p, name)) => {
                    let k = p.strip_prefix("U^").and_then(|e| e.parse().ok());
                    (k.ok_or_else(|| Error::Parse(format!("bad monomial {term:?}")))?, name)
                }
                None => (0, term.as_str()),
            };
            let i = basis.lookup(name)?;
            if basis.grading(i).u_shift(k) != self.grading {
                return Err(Error::Parse(format!("{term:?} is not at grading {}", self.grading)));
            }
            c.toggle(i, k);
        }
        Ok(c)
    }
}

fn non_torsion(h: &HomologyModule, cycle: &Chain) -> Result<bool> {
    let coords = h.classify(cycle)?;
    Ok(h.summands().iter().zip(coords).any(|(s, k)| s.is_tower() && k.is_some()))
}

impl LowerWitness {
    pub fn verify(&self, x: &IotaComplex) -> Result<bool> {
        let b = x.basis();
        let (v, w) = (self.v.to_chain(b)?, self.w.to_chain(b)?);
        if self.w.grading != self.v.grading + Grading::int(1) || !x.diff().apply(&v).is_zero() {
            return Ok(false);
        }
        if one_plus(x.iota()).apply(&v) != x.diff().apply(&w) {
            return Ok(false);
        }
        non_torsion(&x.homology()?, &v)
    }
}

impl UpperWitness {
    pub fn verify(&self, x: &IotaComplex) -> Result<bool> {
        let b = x.basis();
        let (cx, cy, cz) = (self.x.to_chain(b)?, self.y.to_chain(b)?, self.z.to_chain(b)?);
        let one = Grading::int(1);
        if self.x.grading != self.y.grading - one || self.z.grading != self.y.grading.u_shift(self.m) {
            return Ok(false);
        }
        let opi = one_plus(x.iota());
        if x.diff().apply(&cy) != opi.apply(&cx) || x.diff().apply(&cz) != cx.times_u(self.m) {
            return Ok(false);
        }
        let mut target = cy.times_u(self.m);
        target.add(&opi.apply(&cz));
        non_torsion(&x.homology()?, &target)
    }
}

/// Lower witness: `∂v = 0`, `(1+ι)v = ∂w`, `v` non-torsion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerWitness {
    pub v: GradedElement,
    pub w: GradedElement,
}

/// Upper witness: `∂y = (1+ι)x`, `∂z = U^m x`, `U^m y + (1+ι)z` non-torsion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperWitness {
    pub x: GradedElement,
    pub y: GradedElement,
    pub z: GradedElement,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectTerms {
    pub d_lower: Grading,
    pub d_upper: Grading,
    pub lower: LowerWitness,
    pub upper: UpperWitness,
}

/// Unknown blocks of a gradewise system: each block is a set of generators
/// at one grading.
struct Blocks {
    n: usize,
    offsets: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Blocks {
    fn new(n: usize, members: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(members.len());
        let mut total = 0;
        for m in &members {
            offsets.push(total);
            total += m.len();
        }
        Blocks { n, offsets, members }
    }

    fn total(&self) -> usize {
        self.members.iter().map(Vec::len).sum()
    }

    /// Per target generator, the variables of `block` that `m` sends there.
    fn image_terms(&self, m: &MonoMatrix, block: usize, rows: &mut [Vec<usize>]) {
        for (k, &j) in self.members[block].iter().enumerate() {
            for &i in m.column(j).keys() {
                rows[i].push(self.offsets[block] + k);
            }
        }
    }

    /// The identity (`U^m` acts as the identity on generator sets).
    fn identity_terms(&self, block: usize, rows: &mut [Vec<usize>]) {
        for (k, &j) in self.members[block].iter().enumerate() {
            rows[j].push(self.offsets[block] + k);
        }
    }

    fn extract(&self, block: usize, x: &F2Vec) -> F2Vec {
        let mut v = F2Vec::zeros(self.n);
        for (k, &j) in self.members[block].iter().enumerate() {
            if x.get(self.offsets[block] + k) {
                v.flip(j);
            }
        }
        v
    }
}

fn push_rows(sys: &mut F2System, rows: Vec<Vec<usize>>) {
    for r in rows {
        if !r.is_empty() {
            sys.push(r, false);
        }
    }
}

/// Grading window `[lo, hi]` in the coset of the complex, top to bottom.
fn window(gw: &Gradewise<'_>) -> Vec<Grading> {
    let b = gw.complex().basis();
    let (Some(hi), Some(lo)) = (b.max_grading(), b.min_grading()) else {
        return Vec::new();
    };
    let hi = hi + Grading::int(1);
    let lo = lo.u_shift(gw.torsion_bound()) - Grading::int(2);
    let mut out = Vec::new();
    let mut r = hi;
    while r >= lo {
        out.push(r);
        r = r - Grading::int(1);
    }
    out
}

/// From homogeneous elements, one grading at a time.
pub fn correction_terms_direct(x: &IotaComplex) -> Result<DirectTerms> {
    let c = x.complex();
    let gw = Gradewise::new(c);
    let n = c.len();
    let opi = one_plus(x.iota());
    let one = Grading::int(1);

    let mut lower = None;
    for &r in &window(&gw) {
        let blocks = Blocks::new(n, vec![gw.basis_at(r), gw.basis_at(r + one)]);
        let mut sys = F2System::with_unknowns(blocks.total());
        let mut rows = vec![Vec::new(); n];
        blocks.image_terms(c.diff(), 0, &mut rows);
        push_rows(&mut sys, rows);
        let mut rows = vec![Vec::new(); n];
        blocks.image_terms(&opi, 0, &mut rows);
        blocks.image_terms(c.diff(), 1, &mut rows);
        push_rows(&mut sys, rows);
        let found = sys.solve().kernel.into_iter().find(|k| gw.lambda(r, &blocks.extract(0, k)));
        if let Some(k) = found {
            lower = Some((
                r + Grading::int(2),
                LowerWitness {
                    v: GradedElement::new(&gw, r, &blocks.extract(0, &k)),
                    w: GradedElement::new(&gw, r + one, &blocks.extract(1, &k)),
                },
            ));
            break;
        }
    }

    let mut upper = None;
    'search: for &r in &window(&gw) {
        for m in 0..=gw.torsion_bound() {
            let zr = r.u_shift(m);
            let blocks = Blocks::new(n, vec![gw.basis_at(r - one), gw.basis_at(r), gw.basis_at(zr)]);
            let mut sys = F2System::with_unknowns(blocks.total());
            let mut rows = vec![Vec::new(); n];
            blocks.image_terms(c.diff(), 1, &mut rows);
            blocks.image_terms(&opi, 0, &mut rows);
            push_rows(&mut sys, rows);
            let mut rows = vec![Vec::new(); n];
            blocks.image_terms(c.diff(), 2, &mut rows);
            blocks.identity_terms(0, &mut rows);
            push_rows(&mut sys, rows);
            for k in sys.solve().kernel {
                let z = blocks.extract(2, &k);
                let mut target = blocks.extract(1, &k);
                target.xor_assign(&gw.apply(&opi, &z));
                if gw.lambda(zr, &target) {
                    upper = Some((
                        r + Grading::int(2),
                        UpperWitness {
                            x: GradedElement::new(&gw, r - one, &blocks.extract(0, &k)),
                            y: GradedElement::new(&gw, r, &blocks.extract(1, &k)),
                            z: GradedElement::new(&gw, zr, &z),
                            m,
                        },
                    ));
                    break 'search;
                }
            }
        }
    }

    match (lower, upper) {
        (Some((d_lower, lower)), Some((d_upper, upper))) => Ok(DirectTerms { d_lower, d_upper, lower, upper }),
        _ => Err(Error::Structure("no feasible grading in the search window".into())),
    }
}
