use cubic27::picweyl::*;
use cubic27::permgrp::Perm;

#[test]
fn class_examples() {
    let c = standard_classes();
    assert_eq!(c[l_index(0, 1)], PicVector([1, -1, -1, 0, 0, 0, 0]));
    assert_eq!(c[q_index(0)], PicVector([2, 0, -1, -1, -1, -1, -1]));
    for v in c {
        assert_eq!(v.pairing(v), -1);
        assert_eq!(v.pairing(&CANONICAL), -1);
    }
    assert_eq!(class_name(l_index(2, 4)), "L35");
    assert_eq!(class_name(q_index(5)), "Q6");
}

#[test]
fn pairing_examples() {
    let c = standard_classes();
    assert_eq!(c[0].pairing(&c[q_index(1)]), 1);
    assert_eq!(c[l_index(0, 1)].pairing(&c[l_index(2, 3)]), 1);
    assert_eq!(c[l_index(0, 1)].pairing(&c[l_index(1, 2)]), 0);
    assert_eq!(CANONICAL.pairing(&CANONICAL), 3);
}

#[test]
fn intersection_graph_is_schlafli() {
    let m = intersection_matrix();
    for i in 0..27 {
        assert_eq!((0..27).filter(|&j| m[i][j] == 1).count(), 10);
    }
    for a in 0..27 {
        for b in 0..27 {
            if a != b && m[a][b] == 0 {
                assert_eq!(common_neighbors(a, b).len(), 5);
            }
        }
    }
}

#[test]
fn root_system() {
    let r = roots();
    assert_eq!(r.len(), 72);
    assert!(r.contains(&PicVector([0, 1, -1, 0, 0, 0, 0])));
    assert!(r.contains(&PicVector([1, -1, -1, -1, 0, 0, 0])));
    for a in simple_roots() {
        assert!(r.contains(&a));
        let s = reflection_perm(&a);
        assert_eq!(s.order(), 2);
        assert!(preserves_pairing(&s));
    }
}

#[test]
fn lattice_round_trip_for_reflections() {
    for a in simple_roots() {
        let m = perm_to_lattice(&reflection_perm(&a)).unwrap();
        for i in 0..7 {
            let v = PicVector::e(i);
            let img = PicVector(m.mul_vec(&v.0).try_into().unwrap());
            assert_eq!(img, v.reflect(&a));
        }
    }
    assert!(perm_to_lattice(&Perm::identity(27)).unwrap().is_identity());
    let bad = Perm::from_cycles(27, &[&[0, 6]]).unwrap();
    assert_eq!(perm_to_lattice(&bad), Err(PicError::NotPairingPreserving));
}

#[test]
fn classify_small_cases() {
    assert_eq!(classify(&Perm::identity(27)), ClassLabel::Identity);
    let s = reflection_perm(&simple_roots()[0]);
    assert_eq!(classify(&s), ClassLabel::A1);
    assert_eq!(fixed_line_profile(&s).unwrap(), (15, 6, 0));
    assert_eq!(
        fixed_line_profile(&Perm::identity(27)),
        Err(PicError::NotInvolution)
    );
}

#[test]
fn weyl_order_and_census() {
    let w = weyl_group();
    assert_eq!(w.order(), 51840);
    assert_eq!(weyl_derived().order(), 25920);
    let census: Vec<(ClassLabel, usize, usize)> = class_census()
        .iter()
        .map(|r| (r.label, r.size, r.centralizer_order))
        .collect();
    assert_eq!(
        census,
        vec![
            (ClassLabel::A1, 36, 1440),
            (ClassLabel::A1x2, 270, 192),
            (ClassLabel::A1x3, 540, 96),
            (ClassLabel::A1x4, 45, 1152),
            (ClassLabel::A4, 5184, 10),
            (ClassLabel::A4xA1, 5184, 10),
        ]
    );
}
