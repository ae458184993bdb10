//! The Picard lattice of a split cubic surface and W(E6) acting on it.
//!
//! Lattice vectors are written in the basis H, E1..E6 with form
//! diag(1, -1, ..., -1). The 27 line classes are indexed as
//!
//! | index  | class                      |
//! |--------|----------------------------|
//! | 0..6   | E1..E6                     |
//! | 6..21  | L_ij = H-Ei-Ej, i<j in lex |
//! | 21..27 | Q_i = 2H+Ei-ΣEj            |
//!
//! W(E6) is generated by the reflections in the simple roots E1-E2, ...,
//! E5-E6, H-E1-E2-E3 and realized as permutations of these indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Rational64;
use thiserror::Error;

use crate::linalg::{poly, Matrix};
use crate::permgrp::{Group, Perm, MAX_ORDER};
use crate::ZMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicError {
    #[error("permutation does not preserve the intersection pairing")]
    NotPairingPreserving,
    #[error("element is not an involution")]
    NotInvolution,
    #[error("permutation must act on 27 points")]
    WrongDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicVector(pub [i64; 7]);

pub const CANONICAL: PicVector = PicVector([-3, 1, 1, 1, 1, 1, 1]);
pub const HYPERPLANE: PicVector = PicVector([1, 0, 0, 0, 0, 0, 0]);

impl PicVector {
    pub fn e(i: usize) -> PicVector {
        let mut v = [0; 7];
        v[i] = 1;
        PicVector(v)
    }

    pub fn pairing(&self, other: &PicVector) -> i64 {
        self.0[0] * other.0[0] - (1..7).map(|i| self.0[i] * other.0[i]).sum::<i64>()
    }

    pub fn add(&self, other: &PicVector) -> PicVector {
        PicVector(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn scale(&self, c: i64) -> PicVector {
        PicVector(self.0.map(|x| c * x))
    }

    /// `x + (x·α)α`, the reflection in a root of square -2.
    pub fn reflect(&self, alpha: &PicVector) -> PicVector {
        self.add(&alpha.scale(self.pairing(alpha)))
    }
}

pub fn pairing(a: &PicVector, b: &PicVector) -> i64 {
    a.pairing(b)
}

/// Pairs (i, j), i < j, in the order the L_ij are indexed (0-based).
pub fn l_pairs() -> [(usize, usize); 15] {
    let mut out = [(0, 0); 15];
    let mut n = 0;
    for i in 0..6 {
        for j in i + 1..6 {
            out[n] = (i, j);
            n += 1;
        }
    }
    out
}

pub fn l_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    6 + l_pairs().iter().position(|&p| p == (i, j)).expect("i != j, both < 6")
}

pub fn q_index(i: usize) -> usize {
    21 + i
}

pub fn class_name(idx: usize) -> String {
    match idx {
        0..=5 => format!("E{}", idx + 1),
        6..=20 => {
            let (i, j) = l_pairs()[idx - 6];
            format!("L{}{}", i + 1, j + 1)
        }
        21..=26 => format!("Q{}", idx - 20),
        _ => panic!("class index out of range"),
    }
}

pub fn standard_classes() -> &'static [PicVector; 27] {
    static CLASSES: OnceLock<[PicVector; 27]> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut out = [PicVector([0; 7]); 27];
        for i in 0..6 {
            out[i] = PicVector::e(i + 1);
        }
        for (n, &(i, j)) in l_pairs().iter().enumerate() {
            let mut v = [0; 7];
            v[0] = 1;
            v[i + 1] = -1;
            v[j + 1] = -1;
            out[6 + n] = PicVector(v);
        }
        for i in 0..6 {
            let mut v = [-1; 7];
            v[0] = 2;
            v[i + 1] = 0;
            out[21 + i] = PicVector(v);
        }
        out
    })
}

fn class_index() -> &'static HashMap<PicVector, usize> {
    static INDEX: OnceLock<HashMap<PicVector, usize>> = OnceLock::new();
    INDEX.get_or_init(|| {
        standard_classes()
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, i))
            .collect()
    })
}

pub fn class_of_vector(v: &PicVector) -> Option<usize> {
    class_index().get(v).copied()
}

/// Intersection numbers of the 27 classes.
pub fn intersection_matrix() -> &'static [[i64; 27]; 27] {
    static M: OnceLock<[[i64; 27]; 27]> = OnceLock::new();
    M.get_or_init(|| {
        let c = standard_classes();
        std::array::from_fn(|i| std::array::from_fn(|j| c[i].pairing(&c[j])))
    })
}

/// All α with K·α = 0 and α² = -2.
///
/// Bounded enumeration is complete: K·α = 0 gives 3h = Σe_i, and α² = -2
/// gives Σe_i² = h² + 2, so 9h² ≤ 6(h² + 2) by Cauchy-Schwarz, i.e.
/// |h| ≤ 2, and then each |e_i| ≤ 2.
pub fn roots() -> Vec<PicVector> {
    let mut out = Vec::new();
    let range = -2i64..=2;
    for h in range.clone() {
        let mut e = [-2i64; 6];
        loop {
            let v = PicVector([h, e[0], e[1], e[2], e[3], e[4], e[5]]);
            if v.pairing(&CANONICAL) == 0 && v.pairing(&v) == -2 {
                out.push(v);
            }
            let Some(pos) = e.iter().position(|&x| x < 2) else { break };
            e[pos] += 1;
            for x in e.iter_mut().take(pos) {
                *x = -2;
            }
        }
    }
    out.sort();
    out
}

pub fn simple_roots() -> [PicVector; 6] {
    let mut out = [PicVector([0; 7]); 6];
    for (i, slot) in out.iter_mut().take(5).enumerate() {
        let mut v = [0; 7];
        v[i + 1] = 1;
        v[i + 2] = -1;
        *slot = PicVector(v);
    }
    out[5] = PicVector([1, -1, -1, -1, 0, 0, 0]);
    out
}

/// Permutation of the 27 classes induced by the reflection in `alpha`.
pub fn reflection_perm(alpha: &PicVector) -> Perm {
    let images: Vec<usize> = standard_classes()
        .iter()
        .map(|c| class_of_vector(&c.reflect(alpha)).expect("reflections permute the lines"))
        .collect();
    Perm::from_images(&images).unwrap()
}

/// W(E6) on the 27 classes, built once.
pub fn weyl_group() -> &'static Group {
    static W: OnceLock<Group> = OnceLock::new();
    W.get_or_init(|| {
        let gens: Vec<Perm> = simple_roots().iter().map(reflection_perm).collect();
        Group::closure(27, &gens, MAX_ORDER).expect("W(E6) is finite")
    })
}

/// The index-2 simple subgroup of W(E6), built once.
pub fn weyl_derived() -> &'static Group {
    static D: OnceLock<Group> = OnceLock::new();
    D.get_or_init(|| weyl_group().derived_subgroup())
}

pub fn preserves_pairing(p: &Perm) -> bool {
    let m = intersection_matrix();
    p.degree() == 27
        && (0..27).all(|i| (0..27).all(|j| m[i][j] == m[p.apply(i)][p.apply(j)]))
}

/// Columns E1..E6, L12 form a Z-basis of the lattice.
const BASIS_CLASSES: [usize; 7] = [0, 1, 2, 3, 4, 5, 6];

fn basis_inverse() -> &'static Matrix<Rational64> {
    static INV: OnceLock<Matrix<Rational64>> = OnceLock::new();
    INV.get_or_init(|| {
        let c = standard_classes();
        let mut b = Matrix::zeros(7, 7);
        for (col, &idx) in BASIS_CLASSES.iter().enumerate() {
            for row in 0..7 {
                b[(row, col)] = Rational64::from_integer(c[idx].0[row]);
            }
        }
        b.inverse().expect("E1..E6, L12 are a basis")
    })
}

/// The lattice automorphism inducing `p` on the classes.
pub fn perm_to_lattice(p: &Perm) -> Result<ZMatrix, PicError> {
    if p.degree() != 27 {
        return Err(PicError::WrongDegree);
    }
    if !preserves_pairing(p) {
        return Err(PicError::NotPairingPreserving);
    }
    let c = standard_classes();
    let mut images = Matrix::zeros(7, 7);
    for (col, &idx) in BASIS_CLASSES.iter().enumerate() {
        for row in 0..7 {
            images[(row, col)] = Rational64::from_integer(c[p.apply(idx)].0[row]);
        }
    }
    let m = &images * basis_inverse();
    let mut out = ZMatrix::zeros(7, 7);
    for r in 0..7 {
        for col in 0..7 {
            let x = m[(r, col)];
            if !x.is_integer() {
                return Err(PicError::NotPairingPreserving);
            }
            out[(r, col)] = x.to_integer();
        }
    }
    let apply = |v: &PicVector| -> PicVector {
        let w = out.mul_vec(&v.0);
        PicVector(w.try_into().unwrap())
    };
    for (i, cls) in c.iter().enumerate() {
        if apply(cls) != c[p.apply(i)] {
            return Err(PicError::NotPairingPreserving);
        }
    }
    if apply(&CANONICAL) != CANONICAL {
        return Err(PicError::NotPairingPreserving);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Identity,
    A1,
    A1x2,
    A1x3,
    A1x4,
    A4,
    A4xA1,
    Other(u64),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Identity => f.write_str("identity"),
            ClassLabel::A1 => f.write_str("A1"),
            ClassLabel::A1x2 => f.write_str("A1^2"),
            ClassLabel::A1x3 => f.write_str("A1^3"),
            ClassLabel::A1x4 => f.write_str("A1^4"),
            ClassLabel::A4 => f.write_str("A4"),
            ClassLabel::A4xA1 => f.write_str("A4xA1"),
            ClassLabel::Other(n) => write!(f, "other({n})"),
        }
    }
}

/// Characteristic polynomial of the lattice action restricted to K⊥,
/// lowest degree first.
pub fn charpoly_on_k_perp(p: &Perm) -> Result<Vec<i64>, PicError> {
    let m = perm_to_lattice(p)?;
    let full = m.charpoly();
    Ok(poly::div_linear(&full, &1).expect("K is a fixed vector"))
}

fn expected_charpoly(label: ClassLabel) -> Vec<i64> {
    let xm1 = [-1i64, 1];
    let xp1 = [1i64, 1];
    let phi5 = [1i64, 1, 1, 1, 1];
    let f = |a: u32, b: u32, cyclo: bool| {
        let mut p = poly::mul(&poly::pow(&xm1, a), &poly::pow(&xp1, b));
        if cyclo {
            p = poly::mul(&p, &phi5);
        }
        p
    };
    match label {
        ClassLabel::Identity => f(6, 0, false),
        ClassLabel::A1 => f(5, 1, false),
        ClassLabel::A1x2 => f(4, 2, false),
        ClassLabel::A1x3 => f(3, 3, false),
        ClassLabel::A1x4 => f(2, 4, false),
        ClassLabel::A4 => f(2, 0, true),
        ClassLabel::A4xA1 => f(1, 1, true),
        ClassLabel::Other(_) => Vec::new(),
    }
}

/// Label from element order and the characteristic polynomial on K⊥.
pub fn classify(p: &Perm) -> ClassLabel {
    let order = p.order();
    let candidates: &[ClassLabel] = match order {
        1 => &[ClassLabel::Identity],
        2 => &[ClassLabel::A1, ClassLabel::A1x2, ClassLabel::A1x3, ClassLabel::A1x4],
        5 => &[ClassLabel::A4],
        10 => &[ClassLabel::A4xA1],
        _ => return ClassLabel::Other(order),
    };
    let Ok(cp) = charpoly_on_k_perp(p) else {
        return ClassLabel::Other(order);
    };
    candidates
        .iter()
        .copied()
        .find(|&l| expected_charpoly(l) == cp)
        .unwrap_or(ClassLabel::Other(order))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub label: ClassLabel,
    pub element_order: u64,
    pub size: usize,
    pub centralizer_order: usize,
    pub charpoly: Vec<i64>,
}

/// Conjugacy classes of W(E6) of element orders 2, 5 and 10. Panics if
/// the characteristic polynomial varies within a class.
pub fn class_census() -> Vec<CensusRow> {
    let w = weyl_group();
    let mut rows = Vec::new();
    for c in w.conjugacy_classes() {
        let order = c.rep.order();
        if ![2, 5, 10].contains(&order) {
            continue;
        }
        let cp = charpoly_on_k_perp(&c.rep).expect("Weyl elements preserve the pairing");
        for &i in &c.members {
            assert_eq!(
                charpoly_on_k_perp(&w.elements()[i]).unwrap(),
                cp,
                "characteristic polynomial not constant on a class"
            );
        }
        rows.push(CensusRow {
            label: classify(&c.rep),
            element_order: order,
            size: c.size,
            centralizer_order: w.centralizer(&c.rep).unwrap().order(),
            charpoly: cp,
        });
    }
    rows.sort_by_key(|r| (r.element_order, r.label));
    rows
}

/// (fixed classes, 2-cycles of skew classes, 2-cycles of meeting classes).
pub fn fixed_line_profile(p: &Perm) -> Result<(usize, usize, usize), PicError> {
    if p.degree() != 27 {
        return Err(PicError::WrongDegree);
    }
    if p.order() != 2 {
        return Err(PicError::NotInvolution);
    }
    let m = intersection_matrix();
    let fixed = p.fixed_points().len();
    let (mut skew, mut meet) = (0, 0);
    for c in p.cycles() {
        match m[c[0]][c[1]] {
            0 => skew += 1,
            1 => meet += 1,
            _ => unreachable!("distinct lines pair to 0 or 1"),
        }
    }
    Ok((fixed, skew, meet))
}

/// Classes pairing to 1 with both `a` and `b`.
pub fn common_neighbors(a: usize, b: usize) -> Vec<usize> {
    let m = intersection_matrix();
    (0..27).filter(|&c| m[a][c] == 1 && m[b][c] == 1).collect()
}
