//! Reference values checked by the acceptance tests and `cubic27 verify`.
//! Kept in one table so no expected number is written inline elsewhere.

/// |W(E6)|.
pub const WEYL_ORDER: usize = 51840;
/// |W(E6)'| = |PSU4(F2)|.
pub const WEYL_DERIVED_ORDER: usize = 25920;

/// Eigenvalues on the E6 root space: `minus_ones` copies of -1, `ones`
/// copies of 1, and the four primitive fifth roots of unity if `fifth_roots`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eigenvalues {
    pub minus_ones: usize,
    pub ones: usize,
    pub fifth_roots: bool,
}

impl Eigenvalues {
    /// Characteristic polynomial with integer coefficients, lowest degree
    /// first.
    pub fn charpoly(&self) -> Vec<i64> {
        let mut p = vec![1i64];
        let mul = |p: &[i64], q: &[i64]| {
            let mut out = vec![0i64; p.len() + q.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        };
        for _ in 0..self.minus_ones {
            p = mul(&p, &[1, 1]);
        }
        for _ in 0..self.ones {
            p = mul(&p, &[-1, 1]);
        }
        if self.fifth_roots {
            p = mul(&p, &[1, 1, 1, 1, 1]);
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassRow {
    pub label: &'static str,
    pub element_order: u64,
    pub size: usize,
    pub centralizer_order: usize,
    pub eigenvalues: Eigenvalues,
}

const fn ev(minus_ones: usize, ones: usize, fifth_roots: bool) -> Eigenvalues {
    Eigenvalues { minus_ones, ones, fifth_roots }
}

/// Conjugacy classes of W(E6) with element order 2, 5 or 10.
pub const CLASS_TABLE: [ClassRow; 6] = [
    ClassRow { label: "A1", element_order: 2, size: 36, centralizer_order: 1440, eigenvalues: ev(1, 5, false) },
    ClassRow { label: "A1^2", element_order: 2, size: 270, centralizer_order: 192, eigenvalues: ev(2, 4, false) },
    ClassRow { label: "A1^3", element_order: 2, size: 540, centralizer_order: 96, eigenvalues: ev(3, 3, false) },
    ClassRow { label: "A1^4", element_order: 2, size: 45, centralizer_order: 1152, eigenvalues: ev(4, 2, false) },
    ClassRow { label: "A4", element_order: 5, size: 5184, centralizer_order: 10, eigenvalues: ev(0, 2, true) },
    ClassRow { label: "A4xA1", element_order: 10, size: 5184, centralizer_order: 10, eigenvalues: ev(1, 1, true) },
];

/// (class, fixed lines, skew pairs swapped, meeting pairs swapped) for
/// involutions acting on the 27 lines.
pub const INVOLUTION_PROFILES: [(&str, usize, usize, usize); 4] =
    [("A1", 15, 6, 0), ("A1^2", 7, 8, 2), ("A1^3", 3, 6, 6), ("A1^4", 3, 0, 12)];

/// Centralizer of an order-5 element.
pub const ORDER5_CENTRALIZER: usize = 10;

/// Automorphism groups: (cubic, field degree k of GF(2^k), order, label).
pub const AUT_TABLE: [(&str, u32, usize, &str); 5] = [
    ("x^3+y^3+z^3+t^3", 2, 25920, "PSU4(F2)"),
    ("x^3+y^3+z^3+t^3", 1, 48, "Z/2xS4"),
    ("x^3+y^3+z^3+t^3", 3, 48, "Z/2xS4"),
    ("x^2*t+y^2*z+z^2*y+t^2*x", 1, 720, "S6"),
    ("x^2*t+y^2*z+z^2*y+t^2*x", 2, 25920, "PSU4(F2)"),
];

/// |GL4(GF(2))|.
pub const GL4_F2_ORDER: usize = 20160;

/// Frobenius image for the cyclic surface over GF(2): order, class, fixed lines.
pub const CYCLIC_GALOIS: (u64, &str, usize) = (2, "A1", 15);

/// Split degree of the cyclic surface over GF(2) and of Fermat over GF(4).
pub const CYCLIC_SPLIT_DEGREE: u32 = 2;
pub const FERMAT_GF4_SPLIT_DEGREE: u32 = 1;

/// Orbit classes of general-position order-5 orbits.
pub const ORBIT_CLASSES: usize = 1;

/// Stabilizer of a line in PSU4(F2) and the order of the S6 subgroup.
pub const LINE_STABILIZER_ORDER: usize = 960;
pub const S6_ORDER: usize = 720;

/// Order-5 subgroups of PGL2(GF(4)) and PGL2(GF(16)).
pub const PGL2_ORDER5_SUBGROUPS: [(u32, usize); 2] = [(2, 6), (4, 136)];

/// Lines meeting two skew lines.
pub const COMMON_NEIGHBOURS_OF_SKEW_PAIR: usize = 5;
/// Reducible fibres of the conic bundle through a line.
pub const DEGENERATE_FIBRES: usize = 5;

/// Entries of the stated collineation from the cyclic surface to Fermat over
/// GF(4): `Some(j)` is ω^j with ω the field generator, `None` is zero.
pub const STATED_COLLINEATION: [[Option<u8>; 4]; 4] = [
    [Some(0), Some(0), None, None],
    [Some(1), Some(2), None, None],
    [None, None, Some(0), Some(0)],
    [None, None, Some(1), Some(2)],
];

/// A collineation that does carry the cyclic surface onto Fermat:
/// X = x+ωt, Y = ωx+t, Z = y+ωz, W = ωy+z.
pub const WORKING_COLLINEATION: [[Option<u8>; 4]; 4] = [
    [Some(0), None, None, Some(1)],
    [Some(1), None, None, Some(0)],
    [None, Some(0), Some(1), None],
    [None, Some(1), Some(0), None],
];

/// Order of A6; all such subgroups of W(E6) form one conjugacy class.
pub const A6_ORDER: usize = 360;
