use cubic27::permgrp::*;

fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

#[test]
fn small_closures() {
    let g = Group::closure(2, &[perm(2, &[&[0, 1]])], 10).unwrap();
    assert_eq!(g.order(), 2);
    let s5 = Group::closure(5, &[perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])], 1000).unwrap();
    assert_eq!(s5.order(), 120);
    assert_eq!(
        Group::closure(5, &[perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])], 100).unwrap_err(),
        PermError::Overflow(100)
    );
}

#[test]
fn closure_is_idempotent() {
    let s5 = Group::closure(5, &[perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])], 1000).unwrap();
    let again = Group::closure(5, s5.elements(), 1000).unwrap();
    assert_eq!(again.sorted_elements(), s5.sorted_elements());
}

#[test]
fn bad_permutations() {
    assert_eq!(Perm::from_images(&[0, 0]), Err(PermError::NotBijection));
    assert_eq!(Perm::from_images(&[]), Err(PermError::BadDegree(0)));
    assert_eq!(perm(4, &[&[0, 1], &[2, 3]]).order(), 2);
    assert_eq!(perm(5, &[&[0, 1], &[2, 3, 4]]).order(), 6);
}

#[test]
fn composition_convention() {
    let a = perm(3, &[&[0, 1]]);
    let b = perm(3, &[&[1, 2]]);
    // apply b first: 1 -> 2 -> 2
    assert_eq!(a.compose(&b).apply(1), 2);
    let h = perm(3, &[&[0, 1, 2]]);
    let c = a.conjugate_by(&h);
    assert_eq!(c, h.compose(&a).compose(&h.inverse()));
}

#[test]
fn s3_classes() {
    let s3 = Group::closure(3, &[perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])], 10).unwrap();
    let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 3]);
}

#[test]
fn centralizers_and_orbit_stabilizer() {
    let s5 = reference::s6();
    let id = Perm::identity(6);
    assert_eq!(s5.centralizer(&id).unwrap().order(), 720);
    for c in s5.conjugacy_classes() {
        assert_eq!(c.size * s5.centralizer(&c.rep).unwrap().order(), s5.order());
    }
    assert_eq!(
        s5.centralizer(&perm(6, &[&[0, 1]]).compose(&Perm::identity(6)))
            .unwrap()
            .order(),
        48
    );
    let outside = Perm::from_images(&[1, 0, 2, 3, 4, 5, 6]).unwrap();
    assert_eq!(s5.centralizer(&outside).unwrap_err(), PermError::NotMember);
}

#[test]
fn derived_subgroups() {
    assert_eq!(reference::cyclic_group(7).derived_subgroup().order(), 1);
    let s5 = Group::closure(5, &[perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])], 1000).unwrap();
    assert_eq!(s5.derived_subgroup().order(), 60);
    assert_eq!(s5.derived_series_orders(), vec![120, 60]);
    let s4 = Group::closure(4, &[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], 100).unwrap();
    assert_eq!(s4.derived_series_orders(), vec![24, 12, 4, 1]);
}

#[test]
fn reference_orders() {
    assert_eq!(reference::z2_x_s4().order(), 48);
    assert_eq!(reference::s6().order(), 720);
    assert_eq!(reference::a6().order(), 360);
    assert_eq!(reference::z2pow4_a5().order(), 960);
    assert_eq!(reference::z2pow4_a5().derived_series_orders(), vec![960]);
}

#[test]
fn identification_of_references() {
    assert_eq!(identify_group(&reference::s6()), GroupLabel::S6);
    assert_eq!(identify_group(&reference::a6()), GroupLabel::A6);
    assert_eq!(identify_group(&reference::z2_x_s4()), GroupLabel::Z2xS4);
    assert_eq!(identify_group(&reference::cyclic_group(10)), GroupLabel::Z10);
    assert_eq!(identify_group(&reference::trivial()), GroupLabel::Trivial);
    let s4_on_8 = {
        let gens = [perm(8, &[&[0, 1]]), perm(8, &[&[0, 1, 2, 3]]), perm(8, &[&[4, 5, 6, 7]])];
        Group::closure(8, &gens, 10_000).unwrap()
    };
    assert_eq!(s4_on_8.order(), 96);
    assert_eq!(identify_group(&s4_on_8), GroupLabel::Other(96));
    // Z/2 x S4 with the Z/2 acting on four points
    let z2s4_other = {
        let gens = [perm(8, &[&[0, 1]]), perm(8, &[&[0, 1, 2, 3]]), perm(8, &[&[4, 5], &[6, 7]])];
        Group::closure(8, &gens, 10_000).unwrap()
    };
    assert_eq!(identify_group(&z2s4_other), GroupLabel::Z2xS4);
    // Z/3 x Z/16 has order 48 and must not be named Z/2xS4
    let sl_like = {
        let gens = [perm(19, &[&[0, 1, 2]]), perm(19, &[&[3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18]])];
        Group::closure(19, &gens, 10_000).unwrap()
    };
    assert_eq!(identify_group(&sl_like), GroupLabel::Other(48));
}

#[test]
fn conjugacy_witnesses() {
    let s6 = reference::s6();
    let k = Group::closure(6, &[perm(6, &[&[0, 1, 2]])], 10).unwrap();
    let h = perm(6, &[&[0, 3], &[1, 4, 5]]);
    let conj: Vec<Perm> = k.generators().iter().map(|g| g.conjugate_by(&h)).collect();
    let k2 = Group::closure(6, &conj, 10).unwrap();
    let w = s6.all_conjugate(&[k.clone(), k2.clone()]).unwrap().unwrap();
    assert_eq!(w.len(), 2);
    assert!(k.generators().iter().all(|g| k2.contains(&g.conjugate_by(&w[1]))));
    assert!(s6.all_conjugate(&[k.clone()]).unwrap().is_some());
    let other = Group::closure(6, &[perm(6, &[&[0, 1], &[2, 3], &[4, 5]])], 10).unwrap();
    let other3 = Group::closure(6, &[perm(6, &[&[0, 1]])], 10).unwrap();
    assert!(s6.all_conjugate(&[other, other3]).unwrap().is_none());
}

#[test]
fn two_generated_search_finds_a5_in_s6() {
    let s6 = reference::s6();
    let a = perm(6, &[&[0, 1, 2, 3, 4]]);
    let found = s6.two_generated_subgroups(&a, 60, |h| h.derived_subgroup().order() == 60);
    // A5 subgroups containing a fixed 5-cycle: the point stabilizer and
    // the transitive copy
    assert_eq!(found.len(), 2);
    assert!(s6.all_conjugate(&found).unwrap().is_none());
}
