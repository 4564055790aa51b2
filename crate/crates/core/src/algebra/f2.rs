//! Dense linear algebra over F2 on packed bit vectors.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = F2Vec::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + t)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{bits}]")
    }
}

/// One constraint `Σ_{i ∈ unknowns} x_i = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Equation {
    pub unknowns: Vec<usize>,
    pub rhs: bool,
}

/// An affine system over F2 on `num_unknowns` named unknowns.
#[derive(Clone, Debug, Default)]
pub struct F2System {
    pub names: Vec<String>,
    pub equations: Vec<F2Equation>,
}

impl F2System {
    pub fn new(names: Vec<String>) -> Self {
        F2System { names, equations: Vec::new() }
    }

    pub fn with_unknowns(n: usize) -> Self {
        F2System::new((0..n).map(|i| format!("x{i}")).collect())
    }

    pub fn num_unknowns(&self) -> usize {
        self.names.len()
    }

    /// Adds an equation; repeated unknowns cancel.
    pub fn push(&mut self, unknowns: impl IntoIterator<Item = usize>, rhs: bool) {
        let mut v: Vec<usize> = unknowns.into_iter().collect();
        v.sort_unstable();
        let mut reduced = Vec::with_capacity(v.len());
        for u in v {
            if reduced.last() == Some(&u) {
                reduced.pop();
            } else {
                reduced.push(u);
            }
        }
        self.equations.push(F2Equation { unknowns: reduced, rhs });
    }

    pub fn is_satisfied_by(&self, x: &F2Vec) -> bool {
        self.equations
            .iter()
            .all(|eq| eq.unknowns.iter().filter(|&&u| x.get(u)).count() % 2 == usize::from(eq.rhs))
    }

    pub fn solve(&self) -> F2SolutionSpace {
        solve_affine_f2(self)
    }
}

/// Solutions of an affine F2 system: an optional particular solution and a
/// basis of the homogeneous kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2SolutionSpace {
    pub particular: Option<F2Vec>,
    pub kernel: Vec<F2Vec>,
}

impl F2SolutionSpace {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }
}

/// Gaussian elimination over F2.
pub fn solve_affine_f2(system: &F2System) -> F2SolutionSpace {
    let n = system.num_unknowns();
    let mut rows: Vec<F2Vec> = system
        .equations
        .iter()
        .map(|eq| {
            let mut v = F2Vec::from_ones(n + 1, eq.unknowns.iter().copied());
            if eq.rhs {
                v.flip(n);
            }
            v
        })
        .collect();

    // Reduced row echelon form.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for col in 0..n {
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    let consistent = rows[next..].iter().all(|r| !r.get(n));

    let mut is_pivot = vec![false; n];
    for &(_, c) in &pivots {
        is_pivot[c] = true;
    }
    let particular = consistent.then(|| {
        let mut x = F2Vec::zeros(n);
        for &(r, c) in &pivots {
            if rows[r].get(n) {
                x.flip(c);
            }
        }
        x
    });
    let kernel = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = F2Vec::zeros(n);
            x.flip(f);
            for &(r, c) in &pivots {
                if rows[r].get(f) {
                    x.flip(c);
                }
            }
            x
        })
        .collect();
    F2SolutionSpace { particular, kernel }
}

/// An F2 subspace kept in reduced echelon form, for membership tests and
/// coordinates.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    len: usize,
    rows: Vec<(usize, F2Vec)>,
}

impl EchelonSpan {
    pub fn new(len: usize) -> Self {
        EchelonSpan { len, rows: Vec::new() }
    }

    pub fn from_vectors<'a>(len: usize, vectors: impl IntoIterator<Item = &'a F2Vec>) -> Self {
        let mut s = EchelonSpan::new(len);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the span; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        let v = self.reduce(&v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for (_, row) in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[F2Vec]) -> usize {
    let len = vectors.first().map_or(0, F2Vec::len);
    EchelonSpan::from_vectors(len, vectors).dimension()
}
