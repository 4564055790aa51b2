mod common;

use ihf::algebra::{graded_smith, F2System, F2Vec, Generator, MonoMatrix};
use ihf::complex::{d_invariant, homology, reduce, GradedComplex};
use ihf::involutive::{correction_terms_cone, correction_terms_direct};
use ihf::iota::{dual, tensor, IotaComplex};
use ihf::presets::all_presets;
use ihf::random::{random_complex, random_homogeneous, random_iota, seeded};
use ihf::Grading;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

/// Same complex with its generators listed in another order.
fn permuted(c: &GradedComplex, seed: u64) -> GradedComplex {
    let mut gens: Vec<Generator> = c.generators().to_vec();
    gens.shuffle(&mut seeded(seed));
    let arrows = c.arrows();
    GradedComplex::try_new(gens, arrows.iter().map(|(s, t, e)| (s.as_str(), t.as_str(), *e))).unwrap()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn smith_form_verifies(seed in any::<u64>(), rows in 0usize..7, cols in 0usize..7) {
        let mut rng = seeded(seed);
        let shift = Grading::int(rng.gen_range(-3..=3));
        let m = random_homogeneous(&mut rng, rows, cols, shift, 0.5);
        let f = graded_smith(&m);
        prop_assert!(f.verify(&m).unwrap());
        prop_assert!(f.diagonal.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(f.d.nnz(), f.rank());
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let c = random_complex(&mut rng, 8);
        let b = c.basis().clone();
        let mk = |rng: &mut rand::rngs::StdRng, s: i64| {
            let mut m = MonoMatrix::zero(b.clone(), b.clone(), Grading::int(s));
            for r in 0..b.len() {
                for col in 0..b.len() {
                    if let Some(e) = m.allowed_exponent(r, col) {
                        if rng.gen_bool(0.4) {
                            m.add_entry(r, col, e).unwrap();
                        }
                    }
                }
            }
            m
        };
        let (x, y, z) = (mk(&mut rng, 0), mk(&mut rng, 1), mk(&mut rng, -1));
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let id = MonoMatrix::identity(b.clone());
        prop_assert_eq!(id.compose(&y).unwrap(), y.clone());
        prop_assert_eq!(y.compose(&id).unwrap(), y);
    }

    #[test]
    fn affine_solutions_substitute_back(seed in any::<u64>(), n in 1usize..12, eqs in 0usize..12) {
        let mut rng = seeded(seed);
        let mut sys = F2System::with_unknowns(n);
        for _ in 0..eqs {
            let vars: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let rhs = rng.gen_bool(0.5);
            sys.push(vars, rhs);
        }
        let sol = sys.solve();
        // Count solutions by enumeration.
        let mut count = 0usize;
        for mask in 0u32..(1 << n) {
            let x = F2Vec::from_ones(n, (0..n).filter(|i| mask >> i & 1 == 1));
            if sys.is_satisfied_by(&x) {
                count += 1;
            }
        }
        match &sol.particular {
            Some(p) => {
                prop_assert!(sys.is_satisfied_by(p));
                prop_assert_eq!(count, 1usize << sol.dimension());
                for k in &sol.kernel {
                    let mut q = p.clone();
                    q.xor_assign(k);
                    prop_assert!(sys.is_satisfied_by(&q));
                }
                let kernel: Vec<common::Row> = sol.kernel.iter().map(|k| {
                    let mut r = common::Row::zeros(n);
                    for i in k.ones() { r.flip(i); }
                    r
                }).collect();
                prop_assert_eq!(common::rank(&kernel), sol.dimension());
            }
            None => prop_assert_eq!(count, 0),
        }
    }

    #[test]
    fn reduction_preserves_homology(seed in any::<u64>()) {
        let c = random_complex(&mut seeded(seed), 10);
        let r = reduce(&c, &[]).unwrap();
        prop_assert!(r.complex.diff().entries().all(|(_, _, e)| e > 0));
        prop_assert_eq!(homology(&r.complex).unwrap().signature(), homology(&c).unwrap().signature());
    }

    #[test]
    fn homology_ignores_generator_order(seed in any::<u64>()) {
        let c = random_complex(&mut seeded(seed), 10);
        let p = permuted(&c, seed.wrapping_add(1));
        prop_assert_eq!(homology(&p).unwrap().signature(), homology(&c).unwrap().signature());
    }

    #[test]
    fn homology_matches_brute_force(seed in any::<u64>()) {
        let c = random_complex(&mut seeded(seed), 9);
        let h = homology(&c).unwrap();
        for r in common::window(&c) {
            prop_assert_eq!(common::brute_dim(&c, r), common::predicted_dim(&h, r), "grading {}", r);
        }
    }

    #[test]
    fn single_generator_d(numer in -40i64..40, half in any::<bool>()) {
        let t = if half { Grading::new(2 * numer + 1, 2) } else { Grading::int(numer) };
        let c = GradedComplex::try_new(vec![Generator::new("x", t)], []).unwrap();
        prop_assert_eq!(d_invariant(&c).unwrap(), t + Grading::int(2));
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn tensor_and_dual_stay_valid(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = random_iota(&mut rng, 5);
        let y = random_iota(&mut rng, 5);
        let xy = tensor(&x, &y).unwrap();
        prop_assert!(xy.check().is_ok());
        prop_assert!(dual(&x).unwrap().check().is_ok());
        prop_assert_eq!(dual(&dual(&x).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(xy.d().unwrap(), x.d().unwrap() + y.d().unwrap());
        prop_assert_eq!(dual(&x).unwrap().d().unwrap(), -x.d().unwrap());
    }

    #[test]
    fn correction_terms_are_ordered(seed in any::<u64>()) {
        let x = random_iota(&mut seeded(seed), 8);
        let s = correction_terms_cone(&x).unwrap();
        prop_assert!(s.d_lower <= s.d && s.d <= s.d_upper);
        let direct = correction_terms_direct(&x).unwrap();
        prop_assert_eq!((direct.d_lower, direct.d_upper), (s.d_lower, s.d_upper));
        prop_assert!(direct.lower.verify(&x).unwrap());
        prop_assert!(direct.upper.verify(&x).unwrap());
        let dx = correction_terms_cone(&dual(&x).unwrap()).unwrap();
        prop_assert_eq!((dx.d_lower, dx.d_upper), (-s.d_upper, -s.d_lower));
    }

    #[test]
    fn identity_involution_collapses(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let c = loop {
            let c = random_complex(&mut rng, 8);
            if homology(&c).unwrap().tower_count() == 1 {
                break c;
            }
        };
        let id = MonoMatrix::identity(c.basis().clone());
        let x = IotaComplex::from_parts(c, id).unwrap();
        let s = correction_terms_cone(&x).unwrap();
        prop_assert_eq!((s.d_lower, s.d_upper), (s.d, s.d));
    }
}

fn preset_triples() -> Vec<(IotaComplex, IotaComplex, IotaComplex)> {
    let list: Vec<IotaComplex> = all_presets().unwrap().into_iter().map(|(_, x)| x).collect();
    let small: Vec<&IotaComplex> = list.iter().filter(|x| x.len() <= 3).collect();
    let mut out = Vec::new();
    for a in &small {
        for b in &small {
            for c in &small {
                out.push(((*a).clone(), (*b).clone(), (*c).clone()));
            }
        }
    }
    out
}

#[test]
fn tensor_is_associative_and_commutative_on_presets() {
    for (a, b, c) in preset_triples() {
        let left = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let right = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        assert_eq!(left.homology().unwrap().signature(), right.homology().unwrap().signature());
        assert_eq!(correction_terms_cone(&left).unwrap().triple(), correction_terms_cone(&right).unwrap().triple());
        let ab = tensor(&a, &b).unwrap();
        let ba = tensor(&b, &a).unwrap();
        assert_eq!(ab.homology().unwrap().signature(), ba.homology().unwrap().signature());
        assert_eq!(correction_terms_cone(&ab).unwrap().triple(), correction_terms_cone(&ba).unwrap().triple());
    }
}
