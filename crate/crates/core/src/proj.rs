//! Projective points, projectivities and Plücker lines.
//!
//! Points and projectivities are normalized so the first nonzero entry
//! (row-major for matrices) is 1; equality in projective space is then
//! plain equality. Plücker coordinates are ordered (01, 02, 03, 12, 13, 23)
//! and use the sign-correct formulas, which collapse to sums in
//! characteristic 2.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::gf2k::{FieldElem, FieldSpec, GfError};
use crate::linalg::{Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("a line needs two distinct points")]
    EqualPoints,
    #[error("matrix is singular")]
    Singular,
    #[error("points do not form a projective frame")]
    DegenerateFrame,
    #[error("PGL2 over GF(2^{0}) has no element of order 5")]
    NoOrderFive(u8),
    #[error("element does not have order 5")]
    NotOrderFive,
    #[error("enumeration of {0} elements exceeds the capacity limit")]
    Capacity(usize),
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Largest group enumerated element by element.
pub const ENUMERATION_CAP: usize = 10_000_000;

/// Index of the Plücker coordinate p_ij, i < j.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn normalize<F: Field>(v: &mut [F]) -> bool {
    let Some(pos) = v.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let inv = F::one() / v[pos].clone();
    for x in v.iter_mut().skip(pos) {
        *x = x.clone() * inv.clone();
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint<F> {
    coords: Vec<F>,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(mut coords: Vec<F>) -> Result<Self, ProjError> {
        if normalize(&mut coords) {
            Ok(ProjPoint { coords })
        } else {
            Err(ProjError::ZeroVector)
        }
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// Dimension of the ambient projective space.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn map(&self, f: impl FnMut(&F) -> F) -> Self {
        ProjPoint::new(self.coords.iter().map(f).collect()).expect("nonzero image")
    }
}

/// Element of PGL_n, stored as a normalized invertible matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Projectivity<F> {
    m: Matrix<F>,
}

impl<F: Field> Projectivity<F> {
    pub fn new(mut m: Matrix<F>) -> Result<Self, ProjError> {
        if !m.is_square() {
            return Err(ProjError::DimensionMismatch);
        }
        if m.det().is_zero() {
            return Err(ProjError::Singular);
        }
        normalize(m.entries_mut());
        Ok(Projectivity { m })
    }

    pub fn identity(n: usize) -> Self {
        Projectivity {
            m: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.m
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = &self.m * &other.m;
        normalize(m.entries_mut());
        Projectivity { m }
    }

    pub fn inverse(&self) -> Self {
        let mut m = self.m.inverse().expect("projectivities are invertible");
        normalize(m.entries_mut());
        Projectivity { m }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut m = self.m.pow(e);
        normalize(m.entries_mut());
        Projectivity { m }
    }

    /// Order in PGL, if at most `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for n in 1..=cap {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.compose(self);
        }
        None
    }

    pub fn apply_point(&self, p: &ProjPoint<F>) -> ProjPoint<F> {
        assert_eq!(p.coords.len(), self.size(), "dimension mismatch");
        ProjPoint::new(self.m.mul_vec(&p.coords)).expect("invertible image is nonzero")
    }

    /// Second exterior power, in Plücker order. Only for 4×4 matrices.
    pub fn exterior_square(&self) -> Matrix<F> {
        assert_eq!(self.size(), 4, "Plücker action needs PGL4");
        let t = &self.m;
        let mut out = Matrix::zeros(6, 6);
        for (r, &(i, j)) in PLUCKER_PAIRS.iter().enumerate() {
            for (c, &(k, l)) in PLUCKER_PAIRS.iter().enumerate() {
                out[(r, c)] = t[(i, k)].clone() * t[(j, l)].clone()
                    - t[(i, l)].clone() * t[(j, k)].clone();
            }
        }
        out
    }

    pub fn apply_line(&self, l: &PluckerLine<F>) -> PluckerLine<F> {
        let p = self.exterior_square().mul_vec(&l.p);
        PluckerLine::from_coords(p).expect("invertible image is nonzero")
    }

    pub fn map_entries(&self, f: impl FnMut(&F) -> F) -> Self {
        Projectivity::new(self.m.map(f)).expect("entry map preserves invertibility")
    }
}

/// The unique projectivity taking the frame `src` to `dst` (n+2 points in
/// P^n, no n+1 of them on a hyperplane).
pub fn projectivity_from_frames<F: Field>(
    src: &[ProjPoint<F>],
    dst: &[ProjPoint<F>],
) -> Result<Projectivity<F>, ProjError> {
    let a = frame_matrix(src)?;
    let b = frame_matrix(dst)?;
    if a.rows() != b.rows() {
        return Err(ProjError::DimensionMismatch);
    }
    let a_inv = a.inverse().ok_or(ProjError::DegenerateFrame)?;
    Projectivity::new(&b * &a_inv)
}

/// Matrix sending the standard frame to `pts`.
fn frame_matrix<F: Field>(pts: &[ProjPoint<F>]) -> Result<Matrix<F>, ProjError> {
    let n = pts.first().ok_or(ProjError::DegenerateFrame)?.coords.len();
    if pts.len() != n + 1 || pts.iter().any(|p| p.coords.len() != n) {
        return Err(ProjError::DimensionMismatch);
    }
    let mut basis = Matrix::zeros(n, n);
    for (c, p) in pts[..n].iter().enumerate() {
        for r in 0..n {
            basis[(r, c)] = p.coords[r].clone();
        }
    }
    if basis.det().is_zero() {
        return Err(ProjError::DegenerateFrame);
    }
    let lambda = basis
        .solve(&pts[n].coords)
        .ok_or(ProjError::DegenerateFrame)?;
    if lambda.iter().any(|x| x.is_zero()) {
        return Err(ProjError::DegenerateFrame);
    }
    for (c, l) in lambda.iter().enumerate() {
        for r in 0..n {
            let v = basis[(r, c)].clone() * l.clone();
            basis[(r, c)] = v;
        }
    }
    Ok(basis)
}

/// True iff no `n+1` of the `n+2` points lie on a hyperplane.
pub fn is_frame<F: Field>(pts: &[ProjPoint<F>]) -> bool {
    frame_matrix(pts).is_ok()
}

/// A line in P³.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerLine<F> {
    p: [F; 6],
}

fn plucker_pairing<F: Field>(p: &[F; 6], q: &[F; 6]) -> F {
    let t = |a: usize, b: usize| p[a].clone() * q[b].clone();
    t(0, 5) - t(1, 4) + t(2, 3) + t(3, 2) - t(4, 1) + t(5, 0)
}

impl<F: Field> PluckerLine<F> {
    /// Normalizes and checks the Plücker relation.
    pub fn from_coords(p: Vec<F>) -> Result<Self, ProjError> {
        let mut p: [F; 6] = p.try_into().map_err(|_| ProjError::DimensionMismatch)?;
        if !normalize(&mut p) {
            return Err(ProjError::ZeroVector);
        }
        let line = PluckerLine { p };
        debug_assert!(line.satisfies_relation());
        Ok(line)
    }

    pub fn through(a: &ProjPoint<F>, b: &ProjPoint<F>) -> Result<Self, ProjError> {
        if a.coords.len() != 4 || b.coords.len() != 4 {
            return Err(ProjError::DimensionMismatch);
        }
        let (a, b) = (&a.coords, &b.coords);
        let p: Vec<F> = PLUCKER_PAIRS
            .iter()
            .map(|&(i, j)| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone())
            .collect();
        Self::from_coords(p).map_err(|_| ProjError::EqualPoints)
    }

    pub fn coords(&self) -> &[F; 6] {
        &self.p
    }

    pub fn satisfies_relation(&self) -> bool {
        let p = &self.p;
        (p[0].clone() * p[5].clone() - p[1].clone() * p[4].clone()
            + p[2].clone() * p[3].clone())
        .is_zero()
    }

    /// Coplanarity test; a line meets itself.
    pub fn meets(&self, other: &Self) -> bool {
        plucker_pairing(&self.p, &other.p).is_zero()
    }

    /// Entry `(i, j)` of the antisymmetric Plücker matrix.
    fn entry(&self, i: usize, j: usize) -> F {
        if i == j {
            return F::zero();
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        let idx = PLUCKER_PAIRS.iter().position(|&x| x == (a, b)).unwrap();
        if sign {
            -self.p[idx].clone()
        } else {
            self.p[idx].clone()
        }
    }

    /// Two distinct points spanning the line: the first two independent
    /// rows of the Plücker matrix `p qᵀ - q pᵀ`.
    pub fn spanning_points(&self) -> (ProjPoint<F>, ProjPoint<F>) {
        let rows: Vec<Vec<F>> = (0..4)
            .map(|i| (0..4).map(|j| self.entry(i, j)).collect())
            .filter(|r: &Vec<F>| r.iter().any(|x| !x.is_zero()))
            .collect();
        let first = ProjPoint::new(rows[0].clone()).unwrap();
        let second = rows[1..]
            .iter()
            .map(|r| ProjPoint::new(r.clone()).unwrap())
            .find(|p| *p != first)
            .expect("a line has rank-2 Plücker matrix");
        (first, second)
    }

    pub fn contains(&self, x: &ProjPoint<F>) -> bool {
        let (a, b) = self.spanning_points();
        let m = Matrix::from_rows(&[a.coords, b.coords, x.coords.clone()]);
        m.rank() == 2
    }

    /// Common point of two distinct coplanar lines.
    pub fn intersection(&self, other: &Self) -> Option<ProjPoint<F>> {
        if self == other || !self.meets(other) {
            return None;
        }
        let (a1, a2) = self.spanning_points();
        let (b1, b2) = other.spanning_points();
        // λ1 a1 + λ2 a2 - μ1 b1 - μ2 b2 = 0
        let mut m = Matrix::zeros(4, 4);
        for r in 0..4 {
            m[(r, 0)] = a1.coords[r].clone();
            m[(r, 1)] = a2.coords[r].clone();
            m[(r, 2)] = -b1.coords[r].clone();
            m[(r, 3)] = -b2.coords[r].clone();
        }
        let k = m.kernel();
        let v = k.first()?;
        let pt: Vec<F> = (0..4)
            .map(|r| v[0].clone() * a1.coords[r].clone() + v[1].clone() * a2.coords[r].clone())
            .collect();
        ProjPoint::new(pt).ok()
    }

    pub fn map(&self, f: impl FnMut(&F) -> F) -> Self {
        Self::from_coords(self.p.iter().map(f).collect()).expect("nonzero image")
    }
}

impl ProjPoint<FieldElem> {
    pub fn frobenius(&self, j: u32) -> Self {
        self.map(|x| x.frobenius(j))
    }
}

impl PluckerLine<FieldElem> {
    pub fn frobenius(&self, j: u32) -> Self {
        self.map(|x| x.frobenius(j))
    }
}

impl Projectivity<FieldElem> {
    /// True iff every (normalized) entry lies in `sub`.
    pub fn defined_over(&self, sub: FieldSpec) -> bool {
        self.m.entries().iter().all(|&x| sub.contains(x))
    }

    pub fn frobenius(&self, j: u32) -> Self {
        self.map_entries(|x| x.frobenius(j))
    }
}

/// Every element of PGL2 over `spec`, normalized, in a fixed order.
pub fn pgl2_elements(spec: FieldSpec) -> Result<Vec<Projectivity<FieldElem>>, ProjError> {
    let q = spec.size();
    let order = q * (q * q - 1);
    if order > ENUMERATION_CAP {
        return Err(ProjError::Capacity(order));
    }
    let mut out = Vec::with_capacity(order);
    // first nonzero entry is 1: either a = 1, or a = 0 and b = 1
    for (a, b_range) in [(spec.one(), true), (spec.zero(), false)] {
        let bs: Vec<FieldElem> = if b_range {
            spec.elements().collect()
        } else {
            vec![spec.one()]
        };
        for &b in &bs {
            for c in spec.elements() {
                for d in spec.elements() {
                    if (a * d + b * c).is_zero() {
                        continue;
                    }
                    let m = Matrix::from_vec(2, 2, vec![a, b, c, d]);
                    out.push(Projectivity { m });
                }
            }
        }
    }
    debug_assert_eq!(out.len(), order);
    Ok(out)
}

fn diag2(a: FieldElem, b: FieldElem) -> Matrix<FieldElem> {
    Matrix::from_vec(2, 2, vec![a, FieldElem::zero(), FieldElem::zero(), b])
}

/// The companion-type matrix `[[c, 1], [1, 0]]`.
pub fn companion(c: FieldElem) -> Matrix<FieldElem> {
    Matrix::from_vec(2, 2, vec![c, FieldElem::one(), FieldElem::one(), FieldElem::zero()])
}

/// The constant `c` with `[[c,1],[1,0]]` of order 5, for fields without a
/// fifth root of unity. It is the first quadratic-pair component of the
/// degree-2 extension, pulled back into `spec`.
pub fn order5_companion_constant(spec: FieldSpec) -> Result<FieldElem, ProjError> {
    if spec.k() % 2 != 0 {
        return Err(ProjError::NoOrderFive(spec.k()));
    }
    let ext_k = 2 * spec.k() as u32;
    let (ext, sub) = if ext_k <= crate::gf2k::MAX_DEGREE as u32 {
        (FieldSpec::gf(ext_k), spec)
    } else {
        // GF(4) holds both pair components; go through GF(16) instead.
        (FieldSpec::gf(4), FieldSpec::gf(2))
    };
    let (c, _) = ext.quadratic_pair()?;
    let c = ext.restrict(sub, c)?;
    Ok(if sub == spec { c } else { spec.embed(sub, c)? })
}

/// A generator of an order-5 subgroup of PGL2(spec): `diag(1, ξ)` when the
/// field has a fifth root of unity, else `[[c,1],[1,0]]`.
pub fn pgl2_order5_rep(spec: FieldSpec) -> Result<Projectivity<FieldElem>, ProjError> {
    let m = match spec.fifth_root() {
        Ok(xi) => diag2(spec.one(), xi),
        Err(_) => companion(order5_companion_constant(spec)?),
    };
    Projectivity::new(m)
}

/// A matrix representative of `a` whose fifth power is the identity
/// matrix.
pub fn lift_to_order5(a: &Projectivity<FieldElem>) -> Result<Matrix<FieldElem>, ProjError> {
    if a.size() != 2 || a.is_identity() || !a.pow(5).is_identity() {
        return Err(ProjError::NotOrderFive);
    }
    let spec = a
        .matrix()
        .entries()
        .iter()
        .map(|x| x.spec())
        .max_by_key(|s| s.k())
        .unwrap();
    for c in spec.nonzero() {
        let m = a.matrix().scale(&c);
        if m.pow(5).is_identity() {
            return Ok(m);
        }
    }
    Err(ProjError::NotOrderFive)
}

/// The subgroups of order 5 of PGL2(spec), each as its sorted elements.
pub fn pgl2_order5_subgroups(
    spec: FieldSpec,
) -> Result<Vec<Vec<Projectivity<FieldElem>>>, ProjError> {
    let all = pgl2_elements(spec)?;
    let mut groups: Vec<Vec<Projectivity<FieldElem>>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for g in all.iter().filter(|g| g.order(5) == Some(5)) {
        if seen.contains(g) {
            continue;
        }
        let mut members: Vec<_> = (0..5).map(|i| g.pow(i)).collect();
        members.sort_by(|x, y| x.matrix().entries().cmp(y.matrix().entries()));
        seen.extend(members.iter().cloned());
        groups.push(members);
    }
    Ok(groups)
}
