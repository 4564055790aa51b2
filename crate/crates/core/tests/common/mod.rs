//! Brute-force gradewise linear algebra over F2, written independently of
//! the library's reduction code. Only generator gradings and the raw
//! `(target, source, exponent)` entries are taken from the library.

#![allow(dead_code)]

use ihf::complex::{GradedComplex, HomologyModule, SummandKind};
use ihf::Grading;

/// Dense F2 row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row(Vec<u64>);

impl Row {
    pub fn zeros(n: usize) -> Self {
        Row(vec![0; n.div_ceil(64)])
    }
    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
    fn xor(&mut self, other: &Row) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
    fn lead(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| 64 * k + w.trailing_zeros() as usize)
    }
}

/// Rank of a list of vectors.
pub fn rank(rows: &[Row]) -> usize {
    let mut basis: Vec<Row> = Vec::new();
    for r in rows {
        let mut r = r.clone();
        for b in &basis {
            if let Some(l) = b.lead() {
                if r.get(l) {
                    r.xor(b);
                }
            }
        }
        if r.lead().is_some() {
            let l = r.lead().unwrap();
            for b in basis.iter_mut() {
                if b.get(l) {
                    b.xor(&r);
                }
            }
            basis.push(r);
        }
    }
    basis.len()
}

/// Kernel of the linear map sending basis vector `k` to `images[k]`.
pub fn kernel(images: &[Row], dim: usize) -> Vec<Row> {
    // Augment each image with an identity tag and eliminate on the image part.
    let width = images.first().map(|r| r.0.len() * 64).unwrap_or(0);
    let mut rows: Vec<(Row, Row)> = images
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let mut tag = Row::zeros(dim);
            tag.flip(k);
            (r.clone(), tag)
        })
        .collect();
    let mut out = Vec::new();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for i in 0..rows.len() {
        for &(col, p) in &pivots {
            if rows[i].0.get(col) {
                let (img, tag) = rows[p].clone();
                rows[i].0.xor(&img);
                rows[i].1.xor(&tag);
            }
        }
        match rows[i].0.lead() {
            Some(col) if col < width => pivots.push((col, i)),
            _ => out.push(rows[i].1.clone()),
        }
    }
    out
}

/// The F2-vector space `C_r` of a complex truncated to one grading: pairs
/// `(generator, k)` standing for `U^k x` with `gr(x) - 2k = r`.
pub struct Slice {
    pub grading: Grading,
    pub elements: Vec<(usize, u32)>,
}

impl Slice {
    pub fn new(c: &GradedComplex, r: Grading) -> Self {
        let mut elements = Vec::new();
        for (i, g) in c.basis().iter().enumerate() {
            let diff = g.grading - r;
            if let Some(k) = diff.to_integer() {
                if k >= 0 && k % 2 == 0 {
                    elements.push((i, (k / 2) as u32));
                }
            }
        }
        Slice { grading: r, elements }
    }

    pub fn position(&self, i: usize, k: u32) -> Option<usize> {
        self.elements.iter().position(|&e| e == (i, k))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }
}

/// Images under a square matrix with the given `(target, source, exponent)`
/// entries, from slice `from` into slice `to`.
pub fn images(entries: &[(usize, usize, u32)], from: &Slice, to: &Slice) -> Vec<Row> {
    from.elements
        .iter()
        .map(|&(j, k)| {
            let mut row = Row::zeros(to.len().max(1));
            for &(t, s, e) in entries {
                if s == j {
                    let p = to.position(t, k + e).expect("homogeneous entry lands in the slice");
                    row.flip(p);
                }
            }
            row
        })
        .collect()
}

pub fn entries_of(c: &GradedComplex) -> Vec<(usize, usize, u32)> {
    c.diff().entries().collect()
}

/// `dim H_r` by rank counting.
pub fn brute_dim(c: &GradedComplex, r: Grading) -> usize {
    let one = Grading::int(1);
    let e = entries_of(c);
    let here = Slice::new(c, r);
    let below = Slice::new(c, r - one);
    let above = Slice::new(c, r + one);
    let out = rank(&images(&e, &here, &below));
    let inc = rank(&images(&e, &above, &here));
    here.len() - out - inc
}

/// Rank of the map induced on `H_r -> H_{r-shift}` by a chain map with the
/// given entries.
pub fn brute_induced_rank(c: &GradedComplex, f: &[(usize, usize, u32)], shift: Grading, r: Grading) -> usize {
    let one = Grading::int(1);
    let e = entries_of(c);
    let here = Slice::new(c, r);
    let there = Slice::new(c, r - shift);
    let cycles = kernel(&images(&e, &here, &Slice::new(c, r - one)), here.len());
    let bounds = images(&e, &Slice::new(c, r - shift + one), &there);
    let fz: Vec<Row> = cycles
        .iter()
        .map(|z| {
            let mut out = Row::zeros(there.len().max(1));
            for (k, &(j, u)) in here.elements.iter().enumerate() {
                if z.get(k) {
                    for &(t, s, x) in f {
                        if s == j {
                            out.flip(there.position(t, u + x).expect("homogeneous"));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut both = bounds.clone();
    both.extend(fz);
    rank(&both) - rank(&bounds)
}

/// `dim H_r` predicted by a classification.
pub fn predicted_dim(h: &HomologyModule, r: Grading) -> usize {
    h.summands()
        .iter()
        .filter(|s| {
            let Some(k) = (s.grading - r).to_integer() else { return false };
            if k < 0 || k % 2 != 0 {
                return false;
            }
            match s.kind {
                SummandKind::Tower => true,
                SummandKind::Torsion { order } => (k / 2) < i64::from(order),
            }
        })
        .count()
}

/// All gradings of the complex's coset from `hi` down to `lo`.
pub fn gradings_between(hi: Grading, lo: Grading) -> Vec<Grading> {
    let mut out = Vec::new();
    let mut r = hi;
    while r >= lo {
        out.push(r);
        r = r - Grading::int(1);
    }
    out
}

/// The truncation window: from one above the top generator down to
/// `min grading - 2 (count + max exponent)`.
pub fn window(c: &GradedComplex) -> Vec<Grading> {
    let (Some(hi), Some(lo)) = (c.basis().max_grading(), c.basis().min_grading()) else { return Vec::new() };
    let depth = c.len() as i64 + i64::from(c.diff().max_exponent());
    gradings_between(hi + Grading::int(1), lo - Grading::int(2 * depth))
}
