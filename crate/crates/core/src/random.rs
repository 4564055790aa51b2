//! Random complexes for property tests and oracle comparisons.
//!
//! Everything is assembled from blocks whose homology is known, then
//! scrambled by homogeneous changes of basis, so the results are valid by
//! construction but do not look like the blocks they came from.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::algebra::{Basis, Generator, MonoMatrix};
use crate::complex::GradedComplex;
use crate::grading::Grading;
use crate::iota::{tensor, IotaComplex};

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Named generators and arrows under construction.
#[derive(Default)]
struct Draft {
    gens: Vec<Generator>,
    diff: Vec<(String, String, u32)>,
    iota: Vec<(String, String, u32)>,
}

impl Draft {
    fn add(&mut self, grading: Grading) -> String {
        let name = format!("x{}", self.gens.len());
        self.gens.push(Generator::new(name.clone(), grading));
        name
    }

    fn arrow(&mut self, src: &str, tgt: &str, e: u32) {
        self.diff.push((src.to_string(), tgt.to_string(), e));
    }

    fn fix(&mut self, names: &[&str]) {
        for n in names {
            self.iota.push((n.to_string(), n.to_string(), 0));
        }
    }

    fn swap(&mut self, a: &str, b: &str) {
        self.iota.push((a.to_string(), b.to_string(), 0));
        self.iota.push((b.to_string(), a.to_string(), 0));
    }

    /// `∂x = U^n y`.
    fn pair(&mut self, top: Grading, n: u32) -> (String, String) {
        let x = self.add(top);
        let y = self.add(top - Grading::int(1) + Grading::int(2 * i64::from(n)));
        self.arrow(&x, &y, n);
        (x, y)
    }

    fn build_complex(mut self, rng: &mut impl Rng) -> GradedComplex {
        self.gens.shuffle(rng);
        let arrows = self.diff.iter().map(|(s, t, e)| (s.as_str(), t.as_str(), *e));
        GradedComplex::try_new(self.gens, arrows).expect("blocks are valid complexes")
    }

    fn build_iota(mut self, rng: &mut impl Rng) -> IotaComplex {
        self.gens.shuffle(rng);
        let arrows = self.diff.iter().map(|(s, t, e)| (s.as_str(), t.as_str(), *e));
        let iota = self.iota.iter().map(|(s, t, e)| (s.as_str(), t.as_str(), *e));
        IotaComplex::unchecked(self.gens, arrows, iota).expect("blocks are homogeneous")
    }
}

fn base_grading(rng: &mut impl Rng) -> Grading {
    let g = Grading::int(rng.gen_range(-6..=2));
    if rng.gen_bool(0.25) {
        g + Grading::new(1, 2)
    } else {
        g
    }
}

fn near(rng: &mut impl Rng, g: Grading) -> Grading {
    g + Grading::int(rng.gen_range(-4..=4))
}

/// A random ι-complex with at most `max_gens` generators (at least 1).
pub fn random_iota(rng: &mut impl Rng, max_gens: usize) -> IotaComplex {
    let max_gens = max_gens.max(1);
    if max_gens >= 9 && rng.gen_bool(0.3) {
        let left = random_iota(rng, 3);
        let right = random_iota(rng, max_gens / left.len());
        return tensor(&left, &right).expect("product of valid complexes");
    }
    let g = base_grading(rng);
    let mut d = Draft::default();
    let tower_kind = if max_gens >= 3 { rng.gen_range(0..3) } else { 0 };
    match tower_kind {
        0 => {
            let t = d.add(g);
            d.fix(&[&t]);
        }
        1 => {
            let n = rng.gen_range(1..=3);
            let (a, b) = (d.add(g), d.add(g));
            let c = d.add(g + Grading::int(1 - 2 * i64::from(n)));
            d.arrow(&c, &a, n);
            d.arrow(&c, &b, n);
            d.swap(&a, &b);
            d.fix(&[&c]);
        }
        _ => {
            let n = rng.gen_range(1..=3);
            let (a, b) = (d.add(g), d.add(g));
            let t = d.add(g + Grading::int(2 * i64::from(n) - 1));
            d.arrow(&a, &t, n);
            d.arrow(&b, &t, n);
            d.swap(&a, &b);
            d.fix(&[&t]);
        }
    }
    while d.gens.len() + 2 <= max_gens && rng.gen_bool(0.6) {
        let top = near(rng, g);
        let n = rng.gen_range(0..=3);
        if d.gens.len() + 4 <= max_gens && rng.gen_bool(0.4) {
            let (x1, y1) = d.pair(top, n);
            let (x2, y2) = d.pair(top, n);
            d.swap(&x1, &x2);
            d.swap(&y1, &y2);
        } else {
            let (x, y) = d.pair(top, n);
            d.fix(&[&x, &y]);
        }
    }
    let x = d.build_iota(rng);
    let x = scramble_iota(rng, &x, 2 * x.len());
    perturb_iota(rng, &x)
}

/// A random complex with at most `max_gens` generators and any number of
/// towers.
pub fn random_complex(rng: &mut impl Rng, max_gens: usize) -> GradedComplex {
    let g = base_grading(rng);
    let mut d = Draft::default();
    while d.gens.len() < max_gens && (d.gens.is_empty() || rng.gen_bool(0.8)) {
        let room = max_gens - d.gens.len();
        let top = near(rng, g);
        match rng.gen_range(0..4) {
            0 | 1 if room >= 2 => {
                d.pair(top, rng.gen_range(0..=4));
            }
            2 if room >= 3 => {
                let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
                let b = d.add(top);
                let a = d.add(top - Grading::int(1) + Grading::int(2 * i64::from(p)));
                let c = d.add(top - Grading::int(1) + Grading::int(2 * i64::from(q)));
                d.arrow(&b, &a, p);
                d.arrow(&b, &c, q);
            }
            _ => {
                d.add(top);
            }
        }
    }
    let c = d.build_complex(rng);
    scramble_complex(rng, &c, 2 * c.len())
}

/// A homogeneous matrix with random gradings in one coset.
pub fn random_homogeneous(rng: &mut impl Rng, rows: usize, cols: usize, shift: Grading, density: f64) -> MonoMatrix {
    let gens = |prefix: &str, n: usize, rng: &mut dyn rand::RngCore| {
        (0..n).map(|i| Generator::new(format!("{prefix}{i}"), Grading::int(rng.gen_range(-8..=8)))).collect::<Vec<_>>()
    };
    let rb = Basis::new(gens("r", rows, rng)).expect("distinct names");
    let cb = Basis::new(gens("c", cols, rng)).expect("distinct names");
    let mut m = MonoMatrix::zero(rb, cb, shift);
    for r in 0..rows {
        for c in 0..cols {
            if let Some(e) = m.allowed_exponent(r, c) {
                if rng.gen_bool(density) {
                    m.add_entry(r, c, e).expect("allowed exponent");
                }
            }
        }
    }
    m
}

/// Pairs `(source, target, s)` for which `target ↦ target + U^s source` is a
/// homogeneous change of basis.
fn elementary_moves(basis: &Basis) -> Vec<(usize, usize, u32)> {
    let mut out = Vec::new();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j {
                let diff = basis.grading(i) - basis.grading(j);
                if let Some(k) = diff.to_integer().filter(|&k| k >= 0 && k % 2 == 0) {
                    out.push((i, j, (k / 2) as u32));
                }
            }
        }
    }
    out
}

fn scramble_matrices(rng: &mut impl Rng, basis: &Basis, mats: &mut [&mut MonoMatrix], steps: usize) {
    let moves = elementary_moves(basis);
    if moves.is_empty() {
        return;
    }
    for _ in 0..steps {
        let &(i, j, s) = moves.choose(rng).expect("non-empty");
        for m in mats.iter_mut() {
            m.conjugate_elementary(i, j, s);
        }
    }
}

fn scramble_complex(rng: &mut impl Rng, c: &GradedComplex, steps: usize) -> GradedComplex {
    let mut diff = c.diff().clone();
    scramble_matrices(rng, c.basis(), &mut [&mut diff], steps);
    GradedComplex::from_parts(diff).expect("conjugate of a differential")
}

fn scramble_iota(rng: &mut impl Rng, x: &IotaComplex, steps: usize) -> IotaComplex {
    let mut diff = x.diff().clone();
    let mut iota = x.iota().clone();
    scramble_matrices(rng, x.basis(), &mut [&mut diff, &mut iota], steps);
    IotaComplex::from_parts(GradedComplex::from_parts(diff).expect("conjugate"), iota).expect("same basis")
}

/// `ι + ∂K + K∂` for a random homogeneous `K` raising grading by one.
fn perturb_iota(rng: &mut impl Rng, x: &IotaComplex) -> IotaComplex {
    let b = x.basis().clone();
    let mut k = MonoMatrix::zero(b.clone(), b.clone(), Grading::int(-1));
    for r in 0..b.len() {
        for c in 0..b.len() {
            if let Some(e) = k.allowed_exponent(r, c) {
                if rng.gen_bool(0.3) {
                    k.add_entry(r, c, e).expect("allowed exponent");
                }
            }
        }
    }
    let d = x.diff();
    let bump = d.compose(&k).and_then(|dk| dk.sum(&k.compose(d)?)).expect("square maps");
    let iota = x.iota().sum(&bump).expect("same shape");
    IotaComplex::from_parts(x.complex().clone(), iota).expect("same basis")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_iota_complexes_are_valid() {
        let mut rng = seeded(7);
        for _ in 0..40 {
            let x = random_iota(&mut rng, 8);
            assert!(x.len() <= 8);
            x.check().unwrap();
        }
    }

    #[test]
    fn random_complexes_are_valid() {
        let mut rng = seeded(11);
        for _ in 0..40 {
            let c = random_complex(&mut rng, 12);
            assert!(c.len() <= 12 && !c.is_empty());
            assert!(c.is_valid(), "{:?}", c.validate());
        }
    }

    #[test]
    fn large_budget_can_tensor() {
        let mut rng = seeded(3);
        let sizes: Vec<usize> = (0..30).map(|_| random_iota(&mut rng, 12).len()).collect();
        assert!(sizes.iter().all(|&n| n <= 12));
    }
}
