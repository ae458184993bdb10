use cubic27::linalg::*;
use num_traits::Zero;
use num_rational::Rational64;

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

#[test]
fn rational_inverse_round_trips() {
    let m = Matrix::from_rows(&[vec![q(2), q(1)], vec![q(7), q(4)]]);
    let inv = m.inverse().unwrap();
    assert!((&m * &inv).is_identity());
    assert_eq!(m.det(), q(1));
}

#[test]
fn singular_has_no_inverse_and_a_kernel() {
    let m = Matrix::from_rows(&[vec![q(1), q(2)], vec![q(2), q(4)]]);
    assert!(m.inverse().is_none());
    let k = m.kernel();
    assert_eq!(k.len(), 1);
    assert!(m.mul_vec(&k[0]).iter().all(|e| e.is_zero()));
}

#[test]
fn charpoly_small_cases() {
    let m: Matrix<i64> = Matrix::from_rows(&[vec![1, 2], vec![3, 4]]);
    // x^2 - 5x - 2
    assert_eq!(m.charpoly(), vec![-2, -5, 1]);
    let id: Matrix<i64> = Matrix::identity(3);
    assert_eq!(id.charpoly(), vec![-1, 3, -3, 1]);
    let perm: Matrix<i64> =
        Matrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
    assert_eq!(perm.charpoly(), vec![-1, 0, 0, 1]);
}

#[test]
fn charpoly_agrees_with_determinant_expansion() {
    // det(xI - A) at x = 0 is det(-A) = (-1)^n det(A)
    let m = Matrix::from_rows(&[
        vec![q(3), q(-1), q(2), q(0)],
        vec![q(1), q(5), q(-2), q(4)],
        vec![q(0), q(2), q(1), q(1)],
        vec![q(-3), q(0), q(2), q(2)],
    ]);
    let cp = m.charpoly();
    assert_eq!(cp[0], m.det());
    let trace = (0..4).fold(q(0), |acc, i| acc + m[(i, i)]);
    assert_eq!(cp[3], -trace);
}

#[test]
fn float_instantiation_solves() {
    let m = Matrix::from_rows(&[vec![2.0_f64, 0.0], vec![0.0, 4.0]]);
    assert_eq!(m.solve(&[2.0, 2.0]).unwrap(), vec![1.0, 0.5]);
}

#[test]
fn poly_division() {
    // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
    let p = vec![1i64, -1, -1, 1];
    let q1 = poly::div_linear(&p, &1).unwrap();
    assert_eq!(q1, vec![-1, 0, 1]);
    assert!(poly::div_linear(&[1i64, 0, 1], &1).is_none());
    assert_eq!(poly::pow(&[-1i64, 1], 2), vec![1, -2, 1]);
}
