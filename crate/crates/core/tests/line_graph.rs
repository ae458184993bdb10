use cubic27::cubic::graph::*;
use cubic27::picweyl;

fn schlafli() -> Adjacency {
    let m = picweyl::intersection_matrix();
    std::array::from_fn(|i| (0..27).filter(|&j| m[i][j] == 1).fold(0u32, |acc, j| acc | 1 << j))
}

#[test]
fn schlafli_automorphisms_are_the_weyl_group() {
    let g = schlafli();
    assert_eq!(edge_count(&g), 135);
    let auts = automorphisms(&g);
    assert_eq!(auts.len(), 51840);
    let w = picweyl::weyl_group();
    for f in &auts {
        let images: Vec<usize> = f.iter().map(|&x| x as usize).collect();
        let p = cubic27::permgrp::Perm::from_images(&images).unwrap();
        assert!(w.contains(&p));
        let m = picweyl::perm_to_lattice(&p).unwrap();
        let d = m.map(|&x| num_rational::Rational64::from_integer(x)).det();
        assert!(d == 1.into() || d == (-1).into());
    }
}

#[test]
fn cycle_graph() {
    // a 27-cycle has 54 automorphisms
    let mut a = [0u32; 27];
    for i in 0..27 {
        let j = (i + 1) % 27;
        a[i] |= 1 << j;
        a[j] |= 1 << i;
    }
    assert_eq!(automorphisms(&a).len(), 54);
}
