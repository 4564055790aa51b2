//! Worked examples for each operation, checked exactly.

use ihf::algebra::{graded_smith, Basis, Chain, F2System, Generator, MonoMatrix};
use ihf::complex::{chain_map_space, d_invariant, homology, induced_on_homology, is_chain_map, phi, reduce, GradedComplex};
use ihf::involutive::{build_cone, correction_terms_cone, correction_terms_direct};
use ihf::iota::{check_phi_correction, dual, tensor, IotaComplex};
use ihf::knot::{a0_max_model, pin_grading, quadrant_min_model, staircase};
use ihf::local::{find_local_map, group_inverse, group_product, group_unit, local_equivalence};
use ihf::presets::{all_presets, preset};
use ihf::{Error, Grading};

fn g(n: i64) -> Grading {
    Grading::int(n)
}

fn gen(name: &str, gr: Grading) -> Generator {
    Generator::new(name, gr)
}

fn named_chain(basis: &Basis, terms: &[(&str, u32)]) -> Chain {
    let mut c = Chain::new();
    for &(n, e) in terms {
        c.toggle(basis.lookup(n).unwrap(), e);
    }
    c
}

#[test]
fn compose_identity_and_square_of_differential() {
    let s = preset("sigma_2_3_7").unwrap();
    let id = MonoMatrix::identity(s.basis().clone());
    assert_eq!(id.compose(s.diff()).unwrap(), *s.diff());
    assert!(s.diff().compose(s.diff()).unwrap().is_zero());
    let u = id.times_u(1);
    assert_eq!(u.compose(&u).unwrap(), id.times_u(2));
}

#[test]
fn smith_of_the_sigma_differential() {
    let s = preset("sigma_2_3_7").unwrap();
    let f = graded_smith(s.diff());
    assert_eq!(f.diagonal, vec![1]);
    assert!(f.verify(s.diff()).unwrap());
    assert_eq!(f.d.nnz(), 1);
}

#[test]
fn affine_f2_examples() {
    let mut sys = F2System::with_unknowns(2);
    sys.push([0, 1], true);
    sys.push([0], true);
    let sol = sys.solve();
    let x = sol.particular.unwrap();
    assert!(x.get(0) && !x.get(1));
    assert!(sol.kernel.is_empty());

    let mut bad = F2System::with_unknowns(1);
    bad.push([], true);
    assert!(bad.solve().particular.is_none());
}

#[test]
fn validation_examples() {
    assert!(GradedComplex::empty().is_valid());
    assert!(preset("sigma_2_3_7").unwrap().complex().is_valid());
    let bad = GradedComplex::unchecked(vec![gen("a", g(0)), gen("b", g(-1)), gen("c", g(-2))], [("a", "b", 0), ("b", "c", 0)])
        .unwrap();
    let problems = bad.validate();
    assert!(problems.iter().any(|p| p.contains('∂')), "{problems:?}");
    // `∂a = b, ∂b = a` cannot be written down homogeneously at all.
    let err = GradedComplex::unchecked(vec![gen("a", g(0)), gen("b", g(-1))], [("a", "b", 0), ("b", "a", 0)]).unwrap_err();
    assert!(matches!(err, Error::NotHomogeneous { .. }));
}

#[test]
fn homology_examples() {
    let one = GradedComplex::try_new(vec![gen("x", Grading::new(-7, 2))], []).unwrap();
    assert_eq!(homology(&one).unwrap().signature(), (vec![Grading::new(-7, 2)], vec![]));

    let s = preset("sigma_2_3_7").unwrap();
    assert_eq!(homology(s.complex()).unwrap().signature(), (vec![g(-2)], vec![(g(-2), 1)]));

    let ss = preset("sigma_2_3_7^2").unwrap();
    let (towers, torsion) = homology(ss.complex()).unwrap().signature();
    assert_eq!(towers, vec![g(-2)]);
    assert_eq!(torsion, vec![(g(-3), 1), (g(-2), 1), (g(-2), 1), (g(-2), 1)]);
}

#[test]
fn d_invariant_examples() {
    let e = GradedComplex::try_new(vec![gen("1", g(-2))], []).unwrap();
    assert_eq!(d_invariant(&e).unwrap(), g(0));
    assert_eq!(d_invariant(preset("sigma_2_3_7").unwrap().complex()).unwrap(), g(0));
    assert_eq!(d_invariant(preset("surg_m3_T27").unwrap().complex()).unwrap(), Grading::new(-1, 2));
    assert!(matches!(d_invariant(&GradedComplex::empty()), Err(Error::TowerCount(0))));
}

#[test]
fn phi_examples() {
    let s = preset("sigma_2_3_7").unwrap();
    let p = phi(s.complex());
    let b = s.basis();
    assert_eq!(p.apply(&named_chain(b, &[("c", 0)])), named_chain(b, &[("a", 0), ("b", 0)]));
    assert!(phi(IotaComplex::unit().complex()).is_zero());
    for n in 1..6u32 {
        let c = GradedComplex::try_new(vec![gen("a", g(0)), gen("b", g(2 * i64::from(n) - 1))], [("a", "b", n)]).unwrap();
        let pa = phi(&c).apply(&named_chain(c.basis(), &[("a", 0)]));
        let want = if n % 2 == 1 { named_chain(c.basis(), &[("b", n - 1)]) } else { Chain::new() };
        assert_eq!(pa, want, "n = {n}");
    }
}

/// Every homogeneity-allowed coefficient of a degree-0 map on Σ(2,3,7),
/// tried exhaustively.
#[test]
fn chain_map_space_matches_enumeration() {
    let s = preset("sigma_2_3_7").unwrap();
    let c = s.complex();
    let b = c.basis();
    let mut slots = Vec::new();
    let probe = MonoMatrix::zero(b.clone(), b.clone(), g(0));
    for r in 0..b.len() {
        for col in 0..b.len() {
            if let Some(e) = probe.allowed_exponent(r, col) {
                slots.push((r, col, e));
            }
        }
    }
    let mut count = 0usize;
    for mask in 0u32..(1 << slots.len()) {
        let mut f = probe.clone();
        for (k, &(r, col, e)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                f.add_entry(r, col, e).unwrap();
            }
        }
        if is_chain_map(c, c, &f).unwrap() {
            count += 1;
        }
    }
    let space = chain_map_space(c, c, g(0)).unwrap();
    assert_eq!(1usize << space.dimension(), count);
    let renamed = s.renamed(|n| format!("{n}_renamed")).unwrap();
    assert_eq!(chain_map_space(renamed.complex(), renamed.complex(), g(0)).unwrap().dimension(), space.dimension());

    let unit = IotaComplex::unit();
    assert_eq!(chain_map_space(unit.complex(), unit.complex(), g(0)).unwrap().dimension(), 1);
    assert_eq!(chain_map_space(unit.complex(), unit.complex(), g(1)).unwrap().dimension(), 0);
}

#[test]
fn induced_maps_of_identity_and_u() {
    let s = preset("sigma_2_3_7").unwrap();
    let h = s.homology().unwrap();
    let id = MonoMatrix::identity(s.basis().clone());
    let m = induced_on_homology(&id, &h, &h).unwrap();
    for k in 0..h.summands().len() {
        assert_eq!(m.image_of(k), &[(k, 0)]);
    }
    let unit = IotaComplex::unit();
    let hu = unit.homology().unwrap();
    let u = MonoMatrix::identity(unit.basis().clone()).times_u(1);
    assert_eq!(induced_on_homology(&u, &hu, &hu).unwrap().image_of(0), &[(0, 1)]);
}

#[test]
fn reduce_cancels_a_unit_arrow() {
    let c = GradedComplex::try_new(vec![gen("a", g(0)), gen("b", g(-1)), gen("c", g(3))], [("a", "b", 0)]).unwrap();
    let r = reduce(&c, &[]).unwrap();
    assert_eq!(r.complex.len(), 1);
    assert_eq!(r.complex.basis().name(0), "c");
}

#[test]
fn reduce_negative_surgery_on_t27() {
    let m = pin_grading(&quadrant_min_model(&staircase(3, false).unwrap()).unwrap(), Grading::new(-1, 2)).unwrap();
    let x = &m.model;
    let r = reduce(x.complex(), &[x.iota().clone()]).unwrap();
    let names: Vec<&str> = r.complex.basis().iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, vec!["a", "d", "g"]);
    let rb = r.complex.basis();
    let d = rb.lookup("d").unwrap();
    assert_eq!(r.complex.diff().apply(&Chain::single(d, 0)), named_chain(rb, &[("a", 2), ("g", 2)]));
    let iota = &r.maps[0];
    assert_eq!(iota.apply(&named_chain(rb, &[("a", 0)])), named_chain(rb, &[("g", 0)]));
    // The surviving `d` is `d + U b + U f` in the original complex.
    let image = r.inclusion.apply(&Chain::single(d, 0));
    assert_eq!(image, named_chain(x.basis(), &[("d", 0), ("b", 1), ("f", 1)]));
    assert!(is_chain_map(&r.complex, x.complex(), &r.inclusion).unwrap());
    assert!(is_chain_map(x.complex(), &r.complex, &r.projection).unwrap());
}

#[test]
fn reduce_positive_surgery_on_mirror_t211() {
    let x = preset("surg_5_mT211_staircase").unwrap();
    assert_eq!(x.len(), 11);
    let r = reduce(x.complex(), &[x.iota().clone()]).unwrap();
    let rb = r.complex.basis();
    let names: Vec<&str> = rb.iter().map(|g| g.name.as_str()).collect();
    assert_eq!(names, vec!["o", "t", "y"]);
    let o = rb.lookup("o").unwrap();
    assert_eq!(r.complex.diff().apply(&Chain::single(o, 0)), named_chain(rb, &[("t", 3)]));
    assert_eq!(r.inclusion.apply(&Chain::single(o, 0)), named_chain(x.basis(), &[("o", 0), ("q", 1), ("s", 2)]));
    assert_eq!(rb.grading(o), g(-1));
    assert_eq!(rb.grading(rb.lookup("t").unwrap()), g(4));
}

#[test]
fn staircase_and_hardcoded_presets_agree() {
    for (hard, stair) in [("surg_m3_T27", "surg_m3_T27_staircase"), ("surg_5_mT211", "surg_5_mT211_staircase")] {
        let a = preset(hard).unwrap();
        let b = preset(stair).unwrap();
        assert_eq!(a.homology().unwrap().signature(), b.homology().unwrap().signature());
        assert_eq!(correction_terms_cone(&a).unwrap().triple(), correction_terms_cone(&b).unwrap().triple());
        assert!(local_equivalence(&a, &b).unwrap().holds(), "{hard} ~ {stair}");
    }
}

#[test]
fn pin_grading_examples() {
    let m = a0_max_model(&staircase(5, true).unwrap()).unwrap();
    let pinned = pin_grading(&m, g(1)).unwrap();
    let t = pinned.model.basis().lookup("f").unwrap();
    assert_eq!(pinned.model.basis().grading(t), g(4));
    assert_eq!(pinned.pinned_d, Some(g(1)));

    let m = quadrant_min_model(&staircase(3, false).unwrap()).unwrap();
    let pinned = pin_grading(&m, Grading::new(-1, 2)).unwrap();
    let a = pinned.model.basis().lookup("a").unwrap();
    assert_eq!(pinned.model.basis().grading(a), Grading::new(-5, 2));

    let one = IotaComplex::try_new(vec![gen("x", g(5))], [], [("x", "x", 0)]).unwrap();
    let shifted = ihf::knot::pin_iota(&one, g(0)).unwrap();
    assert_eq!(shifted.basis().grading(0), g(-2));
}

#[test]
fn tensor_examples() {
    let s = preset("sigma_2_3_7").unwrap();
    let ss = tensor(&s, &s).unwrap();
    let b = ss.basis();
    assert_eq!(b.grading(b.lookup("a|a").unwrap()), g(-2));
    let ca = b.lookup("c|a").unwrap();
    assert_eq!(ss.diff().apply(&Chain::single(ca, 0)), named_chain(b, &[("a|a", 1), ("b|a", 1)]));
    assert_eq!(ss.iota().apply(&named_chain(b, &[("a|a", 0)])), named_chain(b, &[("b|b", 0)]));

    let t = preset("surg_m3_T27").unwrap();
    let tt = tensor(&t, &t).unwrap();
    for n in ["a|a", "a|g", "g|a", "g|g"] {
        assert_eq!(tt.basis().grading(tt.basis().lookup(n).unwrap()), g(-3));
    }

    let e = group_unit();
    for (_, x) in all_presets().unwrap() {
        let ex = tensor(&e, &x).unwrap();
        assert_eq!(ex.homology().unwrap().signature(), x.homology().unwrap().signature());
        assert_eq!(correction_terms_cone(&ex).unwrap().triple(), correction_terms_cone(&x).unwrap().triple());
    }
}

#[test]
fn dual_examples() {
    let e = group_unit();
    let de = dual(&e).unwrap();
    assert_eq!(de.basis().grading(0), e.basis().grading(0));
    assert_eq!(de.iota(), &MonoMatrix::identity(de.basis().clone()));
    for (_, x) in all_presets().unwrap() {
        assert_eq!(dual(&dual(&x).unwrap()).unwrap(), x);
    }
}

#[test]
fn cone_examples() {
    let cone = build_cone(&group_unit()).unwrap();
    let h = homology(&cone.complex).unwrap();
    let mut towers = h.towers();
    towers.sort();
    assert_eq!(towers, vec![g(-2), g(-1)]);
    let s = preset("sigma_2_3_7").unwrap();
    let cone = build_cone(&s).unwrap();
    let cb = cone.complex.basis();
    let c = cb.lookup("c").unwrap();
    let want = named_chain(cb, &[("a", 1), ("b", 1)]);
    assert_eq!(cone.complex.diff().apply(&Chain::single(c, 0)), want);
    let a = cb.lookup("a").unwrap();
    assert_eq!(cone.complex.diff().apply(&Chain::single(a, 0)), named_chain(cb, &[("Q.a", 0), ("Q.b", 0)]));
    let qc = cb.lookup("Q.c").unwrap();
    assert_eq!(cone.complex.diff().apply(&Chain::single(qc, 0)), named_chain(cb, &[("Q.a", 1), ("Q.b", 1)]));
    assert!(cone.q.compose(&cone.q).unwrap().is_zero());
}

#[test]
fn direct_witnesses_match_the_hand_computations() {
    let t = preset("surg_m3_T27").unwrap();
    let d = correction_terms_direct(&t).unwrap();
    assert_eq!(d.d_lower, Grading::new(-9, 2));
    assert_eq!(d.lower.v.grading, Grading::new(-13, 2));
    assert!(d.lower.verify(&t).unwrap() && d.upper.verify(&t).unwrap());

    let z = preset("surg_5_mT211").unwrap();
    let d = correction_terms_direct(&z).unwrap();
    assert_eq!(d.d_upper, g(7));
    assert_eq!(d.upper.x.generators, vec!["t".to_string()]);
    assert_eq!(d.upper.m, 3);
    assert!(d.upper.y.generators.is_empty());
    assert!(d.upper.verify(&z).unwrap());
}

#[test]
fn phi_correction_vanishes_up_to_homotopy() {
    let e = group_unit();
    let s = preset("sigma_2_3_7").unwrap();
    assert!(check_phi_correction(&e, &s).unwrap().homotopy.is_zero());
    for spec in ["sigma_2_3_7", "surg_5_mT211", "surg_m3_T27"] {
        let x = preset(spec).unwrap();
        let w = check_phi_correction(&x, &x).unwrap();
        assert!(w.verify().unwrap(), "{spec}");
    }
}

#[test]
fn local_maps_between_sigma_and_unit() {
    let s = preset("sigma_2_3_7").unwrap();
    let e = group_unit();
    let w = find_local_map(&s, &s).unwrap().unwrap();
    assert!(w.verify(&s, &s).unwrap());
    let down = find_local_map(&s, &e).unwrap().unwrap();
    let b = s.basis();
    assert_eq!(down.f.apply(&named_chain(b, &[("a", 0)])), Chain::single(0, 0));
    assert_eq!(down.f.apply(&named_chain(b, &[("b", 0)])), Chain::single(0, 0));
    assert!(down.f.apply(&named_chain(b, &[("c", 0)])).is_zero());
    assert!(find_local_map(&e, &s).unwrap().is_none());
}

#[test]
fn separated_by_d_lower() {
    let y1z = preset("surg_m3_T27^2#surg_5_mT211").unwrap();
    let y2z = preset("surg_m3_T27#minus_L31#surg_5_mT211").unwrap();
    let eq = local_equivalence(&y1z, &y2z).unwrap();
    assert!(!eq.holds());
    // Y2#Z has the larger d_lower, so no map goes from it to Y1#Z.
    assert!(eq.backward.is_none());
}

#[test]
fn group_laws() {
    let e = group_unit();
    for (name, x) in all_presets().unwrap() {
        let xe = group_product(&x, &e).unwrap();
        assert!(local_equivalence(&xe, &x).unwrap().holds(), "{name}");
        let xx = group_product(&x, &group_inverse(&x).unwrap()).unwrap();
        assert!(local_equivalence(&xx, &e).unwrap().holds(), "{name}");
    }
}

#[test]
fn local_equivalence_forces_equal_terms() {
    let list = all_presets().unwrap();
    for (na, a) in &list {
        for (nb, b) in &list {
            if local_equivalence(a, b).unwrap().holds() {
                let ta = correction_terms_cone(a).unwrap().triple();
                let tb = correction_terms_cone(b).unwrap().triple();
                assert_eq!(ta, tb, "{na} ~ {nb}");
            }
        }
    }
}

#[test]
fn d_is_additive_on_preset_pairs() {
    let list = all_presets().unwrap();
    for (_, a) in &list {
        for (_, b) in &list {
            assert_eq!(tensor(a, b).unwrap().d().unwrap(), a.d().unwrap() + b.d().unwrap());
        }
    }
}

#[test]
fn iota_identity_collapses_the_terms() {
    for x in [group_unit(), preset("minus_L31").unwrap()] {
        let s = correction_terms_cone(&x).unwrap();
        assert_eq!(s.d_lower, s.d);
        assert_eq!(s.d_upper, s.d);
    }
    let plain = GradedComplex::try_new(vec![gen("a", g(0)), gen("b", g(3)), gen("c", g(-2))], [("a", "b", 2)]).unwrap();
    let id = MonoMatrix::identity(plain.basis().clone());
    let x = IotaComplex::from_parts(plain, id).unwrap();
    let s = correction_terms_cone(&x).unwrap();
    assert_eq!((s.d_lower, s.d_upper), (s.d, s.d));
}
