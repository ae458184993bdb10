use cubic27::mpoly::*;

#[test]
fn cubic_monomial_order() {
    let m = monomials(4, 3);
    assert_eq!(m.len(), 20);
    assert_eq!(m[0], vec![3, 0, 0, 0]);
    assert_eq!(m[1], vec![2, 1, 0, 0]);
    assert_eq!(m[4], vec![1, 2, 0, 0]);
    assert_eq!(m[19], vec![0, 0, 0, 3]);
    for (i, e) in m.iter().enumerate() {
        assert_eq!(rank(e), i);
    }
    for (n, d) in [(2, 6), (4, 5), (3, 4), (1, 3)] {
        let ms = monomials(n, d);
        assert_eq!(ms.len(), count(n, d));
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }
}

#[test]
fn integer_arithmetic() {
    // (x + y)^2 = x^2 + 2xy + y^2
    let s = HomPoly::<i64>::linear(vec![1, 1]);
    assert_eq!(s.pow(2).coeffs(), &[1, 2, 1]);
    let cube = HomPoly::<i64>::linear(vec![1, 1]).pow(3);
    assert_eq!(cube.partial(0).coeffs(), &[3, 6, 3]);
    assert_eq!(cube.eval(&[2, 1]), 27);
}

#[test]
fn substitution_matches_evaluation() {
    let f = HomPoly::<i64>::from_coeffs(2, 2, vec![1, -3, 2]);
    let forms = [HomPoly::linear(vec![1, 2]), HomPoly::linear(vec![-1, 1])];
    let g = f.substitute(&forms);
    for pt in [[1i64, 0], [0, 1], [2, -3], [5, 7]] {
        let inner = [forms[0].eval(&pt), forms[1].eval(&pt)];
        assert_eq!(g.eval(&pt), f.eval(&inner));
    }
}
