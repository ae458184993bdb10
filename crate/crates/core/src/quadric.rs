//! Quadric surfaces with an order-5 action: the split model P¹×P¹ and the
//! Weil restriction of P¹ along a quadratic extension L/F.
//!
//! The Weil model is kept intrinsic: its rational points are P¹(L), and
//! an automorphism is a pair (A, twist) with A ∈ PGL2(L), acting by
//! p ↦ A·ψ(p) when twisted, ψ the generator of Gal(L/F). After base change
//! to L a point p becomes (p, ψp) on P¹×P¹.

use std::collections::BTreeSet;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::gf2k::{FieldElem, FieldSpec, GfError};
use crate::linalg::Matrix;
use crate::proj::{self, projectivity_from_frames, ProjError, ENUMERATION_CAP};
use crate::{GfPoint, GfProjectivity};

/// Largest point set handled.
pub const POINT_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadricError {
    #[error("GF(2^{ext}) is not a quadratic extension of GF(2^{base})")]
    NotQuadratic { base: u8, ext: u8 },
    #[error("{0} exceeds the enumeration cap")]
    Capacity(usize),
    #[error("repeated point")]
    DuplicatePoints,
    #[error("5 does not divide the order of the automorphism group over GF(2^{0})")]
    NoOrderFive(u8),
    #[error("element does not have order 5")]
    NotOrderFive,
    #[error("point is fixed, so its orbit is shorter than 5")]
    ShortOrbit,
    #[error("point or automorphism belongs to another model")]
    ModelMismatch,
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Field(#[from] GfError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadricModel {
    Split(FieldSpec),
    Weil { base: FieldSpec, ext: FieldSpec },
}

impl QuadricModel {
    pub fn split(spec: FieldSpec) -> Self {
        QuadricModel::Split(spec)
    }

    pub fn weil(base: FieldSpec, ext: FieldSpec) -> Result<Self, QuadricError> {
        if ext.k() != 2 * base.k() {
            return Err(QuadricError::NotQuadratic { base: base.k(), ext: ext.k() });
        }
        Ok(QuadricModel::Weil { base, ext })
    }

    /// Field of definition.
    pub fn base(&self) -> FieldSpec {
        match *self {
            QuadricModel::Split(s) => s,
            QuadricModel::Weil { base, .. } => base,
        }
    }

    /// Field over which the model is P¹×P¹ and the automorphism matrices live.
    pub fn matrix_field(&self) -> FieldSpec {
        match *self {
            QuadricModel::Split(s) => s,
            QuadricModel::Weil { ext, .. } => ext,
        }
    }

    /// `ψ(x) = x^|F|` on L.
    fn psi(&self, x: FieldElem) -> FieldElem {
        x.frobenius(self.base().k() as u32)
    }

    fn psi_point(&self, p: &GfPoint) -> GfPoint {
        p.map(|&x| self.psi(x))
    }

    fn psi_aut(&self, a: &GfProjectivity) -> GfProjectivity {
        a.map_entries(|&x| self.psi(x))
    }
}

impl std::fmt::Display for QuadricModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuadricModel::Split(s) => write!(f, "split over {s}"),
            QuadricModel::Weil { base, ext } => write!(f, "Weil restriction {ext}/{base}"),
        }
    }
}

/// A rational point; components are normalized points of P¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QPoint {
    Split(GfPoint, GfPoint),
    Weil(GfPoint),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QAut {
    /// `(p, q) ↦ (A p, B q)`, followed by exchanging the factors if `swap`.
    Split { a: GfProjectivity, b: GfProjectivity, swap: bool },
    /// `p ↦ A p`, or `A ψ(p)` if `twist`.
    Weil { a: GfProjectivity, twist: bool },
}

pub fn p1_point(x: FieldElem, y: FieldElem) -> GfPoint {
    GfPoint::new(vec![x, y]).expect("nonzero")
}

/// `[1:x]`.
pub fn affine(x: FieldElem) -> GfPoint {
    p1_point(x.spec().one(), x)
}

fn p1_points(spec: FieldSpec) -> Vec<GfPoint> {
    let mut out: Vec<GfPoint> = spec.elements().map(|x| p1_point(spec.one(), x)).collect();
    out.push(p1_point(spec.zero(), spec.one()));
    out.sort();
    out
}

fn p1_frame(spec: FieldSpec) -> [GfPoint; 3] {
    [
        p1_point(spec.one(), spec.zero()),
        p1_point(spec.zero(), spec.one()),
        p1_point(spec.one(), spec.one()),
    ]
}

fn diag(a: FieldElem, b: FieldElem) -> GfProjectivity {
    GfProjectivity::new(Matrix::from_vec(2, 2, vec![a, FieldElem::zero(), FieldElem::zero(), b])).unwrap()
}

fn companion(c: FieldElem) -> GfProjectivity {
    GfProjectivity::new(proj::companion(c)).unwrap()
}

/// All rational points, sorted.
pub fn points(model: &QuadricModel) -> Result<Vec<QPoint>, QuadricError> {
    match *model {
        QuadricModel::Split(s) => {
            let n = (s.size() + 1) * (s.size() + 1);
            if n > POINT_CAP {
                return Err(QuadricError::Capacity(n));
            }
            let line = p1_points(s);
            Ok(line
                .iter()
                .flat_map(|p| line.iter().map(move |q| QPoint::Split(p.clone(), q.clone())))
                .collect())
        }
        QuadricModel::Weil { ext, .. } => {
            if ext.size() + 1 > POINT_CAP {
                return Err(QuadricError::Capacity(ext.size() + 1));
            }
            Ok(p1_points(ext).into_iter().map(QPoint::Weil).collect())
        }
    }
}

pub fn identity(model: &QuadricModel) -> QAut {
    let id = GfProjectivity::identity(2);
    match model {
        QuadricModel::Split(_) => QAut::Split { a: id.clone(), b: id, swap: false },
        QuadricModel::Weil { .. } => QAut::Weil { a: id, twist: false },
    }
}

pub fn act(model: &QuadricModel, g: &QAut, p: &QPoint) -> Result<QPoint, QuadricError> {
    match (g, p) {
        (QAut::Split { a, b, swap }, QPoint::Split(x, y)) => {
            let (u, v) = (a.apply_point(x), b.apply_point(y));
            Ok(if *swap { QPoint::Split(v, u) } else { QPoint::Split(u, v) })
        }
        (QAut::Weil { a, twist }, QPoint::Weil(x)) => {
            let x = if *twist { model.psi_point(x) } else { x.clone() };
            Ok(QPoint::Weil(a.apply_point(&x)))
        }
        _ => Err(QuadricError::ModelMismatch),
    }
}

/// `g ∘ h`.
pub fn compose(model: &QuadricModel, g: &QAut, h: &QAut) -> Result<QAut, QuadricError> {
    match (g, h) {
        (QAut::Split { a: a1, b: b1, swap: s1 }, QAut::Split { a: a2, b: b2, swap: s2 }) => Ok(if *s2 {
            QAut::Split { a: b1.compose(a2), b: a1.compose(b2), swap: !s1 }
        } else {
            QAut::Split { a: a1.compose(a2), b: b1.compose(b2), swap: *s1 }
        }),
        (QAut::Weil { a: a1, twist: t1 }, QAut::Weil { a: a2, twist: t2 }) => {
            let a2 = if *t1 { model.psi_aut(a2) } else { a2.clone() };
            Ok(QAut::Weil { a: a1.compose(&a2), twist: t1 ^ t2 })
        }
        _ => Err(QuadricError::ModelMismatch),
    }
}

pub fn is_identity(g: &QAut) -> bool {
    match g {
        QAut::Split { a, b, swap } => !swap && a.is_identity() && b.is_identity(),
        QAut::Weil { a, twist } => !twist && a.is_identity(),
    }
}

pub fn order(model: &QuadricModel, g: &QAut, cap: u64) -> Option<u64> {
    let mut acc = g.clone();
    for n in 1..=cap {
        if is_identity(&acc) {
            return Some(n);
        }
        acc = compose(model, g, &acc).ok()?;
    }
    None
}

/// Every automorphism, for groups within the enumeration cap.
pub fn automorphisms(model: &QuadricModel) -> Result<Vec<QAut>, QuadricError> {
    let pgl = proj::pgl2_elements(model.matrix_field())?;
    match model {
        QuadricModel::Split(_) => {
            let n = 2 * pgl.len() * pgl.len();
            if n > ENUMERATION_CAP {
                return Err(QuadricError::Capacity(n));
            }
            let mut out = Vec::with_capacity(n);
            for swap in [false, true] {
                for a in &pgl {
                    for b in &pgl {
                        out.push(QAut::Split { a: a.clone(), b: b.clone(), swap });
                    }
                }
            }
            Ok(out)
        }
        QuadricModel::Weil { .. } => Ok([false, true]
            .into_iter()
            .flat_map(|twist| pgl.iter().map(move |a| QAut::Weil { a: a.clone(), twist }))
            .collect()),
    }
}

/// The split model over L of a Weil point: `(p, ψp)`.
pub fn base_change_point(model: &QuadricModel, p: &QPoint) -> QPoint {
    match p {
        QPoint::Weil(x) => QPoint::Split(x.clone(), model.psi_point(x)),
        QPoint::Split(..) => p.clone(),
    }
}

/// `(A, ψ(A), twist)` on the split model over L.
pub fn base_change_aut(model: &QuadricModel, g: &QAut) -> QAut {
    match g {
        QAut::Weil { a, twist } => QAut::Split { a: a.clone(), b: model.psi_aut(a), swap: *twist },
        QAut::Split { .. } => g.clone(),
    }
}

/// The four bidegree-(1,1) monomials x₀y₀, x₀y₁, x₁y₀, x₁y₁ at a point.
pub fn bilinear_monomials(x: &GfPoint, y: &GfPoint) -> [FieldElem; 4] {
    let (x, y) = (x.coords(), y.coords());
    [x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]]
}

/// No two points on a common ruling and no four on a (1,1)-divisor; Weil
/// points are tested after base change.
pub fn is_general_position(model: &QuadricModel, pts: &[QPoint]) -> Result<bool, QuadricError> {
    let split: Vec<(GfPoint, GfPoint)> = pts
        .iter()
        .map(|p| match base_change_point(model, p) {
            QPoint::Split(x, y) => (x, y),
            QPoint::Weil(_) => unreachable!(),
        })
        .collect();
    let distinct: BTreeSet<_> = split.iter().collect();
    if distinct.len() != split.len() {
        return Err(QuadricError::DuplicatePoints);
    }
    for i in 0..split.len() {
        for j in i + 1..split.len() {
            if split[i].0 == split[j].0 || split[i].1 == split[j].1 {
                return Ok(false);
            }
        }
    }
    let rows: Vec<[FieldElem; 4]> = split.iter().map(|(x, y)| bilinear_monomials(x, y)).collect();
    let n = rows.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let m = Matrix::from_rows(&[rows[a].to_vec(), rows[b].to_vec(), rows[c].to_vec(), rows[d].to_vec()]);
                    if m.det().is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Representatives of the order-5 subgroup embeddings up to conjugacy.
pub fn order5_reps(model: &QuadricModel) -> Result<Vec<QAut>, QuadricError> {
    match *model {
        QuadricModel::Split(s) => {
            if let Ok(xi) = s.fifth_root() {
                let one = s.one();
                Ok((2..5)
                    .map(|j| QAut::Split { a: diag(one, xi), b: diag(one, xi.pow(j)), swap: false })
                    .collect())
            } else if s.k() % 2 == 0 {
                let c = proj::order5_companion_constant(s)?;
                let c2 = c + s.one();
                Ok(vec![
                    QAut::Split { a: companion(c), b: companion(c2), swap: false },
                    QAut::Split { a: companion(c2), b: companion(c), swap: false },
                ])
            } else {
                Err(QuadricError::NoOrderFive(s.k()))
            }
        }
        QuadricModel::Weil { ext, .. } => {
            let a = match ext.fifth_root() {
                Ok(xi) => diag(ext.one(), xi),
                Err(_) if ext.k() % 2 == 0 => companion(proj::order5_companion_constant(ext)?),
                Err(_) => return Err(QuadricError::NoOrderFive(ext.k())),
            };
            Ok(vec![QAut::Weil { a, twist: false }])
        }
    }
}

/// `{p, gp, ..., g⁴p}` in orbit order.
pub fn orbit_of(model: &QuadricModel, g: &QAut, p: &QPoint) -> Result<Vec<QPoint>, QuadricError> {
    if order(model, g, 5) != Some(5) {
        return Err(QuadricError::NotOrderFive);
    }
    let mut out = vec![p.clone()];
    for _ in 1..5 {
        let next = act(model, g, out.last().unwrap())?;
        if next == *p {
            return Err(QuadricError::ShortOrbit);
        }
        out.push(next);
    }
    Ok(out)
}

type Encoding = Vec<(u16, u16, u16, u16)>;

fn encode_pair(x: &GfPoint, y: &GfPoint) -> (u16, u16, u16, u16) {
    (x.coords()[0].bits(), x.coords()[1].bits(), y.coords()[0].bits(), y.coords()[1].bits())
}

/// A complete invariant of a general-position 5-set under the automorphism
/// group: the least sorted encoding among the images that send an ordered
/// triple of the points to the standard frame (per factor, for each choice
/// of swap or twist). Two sets have equal forms iff they are equivalent.
pub fn canonical_form(model: &QuadricModel, pts: &[QPoint]) -> Result<Encoding, QuadricError> {
    let field = model.matrix_field();
    let frame = p1_frame(field);
    let mut best: Option<Encoding> = None;
    for flip in [false, true] {
        let pairs: Vec<(GfPoint, GfPoint)> = pts
            .iter()
            .map(|p| match p {
                QPoint::Split(x, y) => Ok(if flip { (y.clone(), x.clone()) } else { (x.clone(), y.clone()) }),
                QPoint::Weil(x) => {
                    let x = if flip { model.psi_point(x) } else { x.clone() };
                    Ok((x.clone(), x))
                }
            })
            .collect::<Result<_, QuadricError>>()?;
        let weil = matches!(model, QuadricModel::Weil { .. });
        let n = pairs.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let first = [pairs[i].0.clone(), pairs[j].0.clone(), pairs[k].0.clone()];
                    let a = projectivity_from_frames(&first, &frame).map_err(|_| QuadricError::DuplicatePoints)?;
                    let enc: Encoding = if weil {
                        let mut e: Encoding = pairs
                            .iter()
                            .map(|(x, _)| {
                                let u = a.apply_point(x);
                                encode_pair(&u, &u)
                            })
                            .collect();
                        e.sort();
                        e
                    } else {
                        let second = [pairs[i].1.clone(), pairs[j].1.clone(), pairs[k].1.clone()];
                        let b = projectivity_from_frames(&second, &frame).map_err(|_| QuadricError::DuplicatePoints)?;
                        let mut e: Encoding = pairs
                            .iter()
                            .map(|(x, y)| encode_pair(&a.apply_point(x), &b.apply_point(y)))
                            .collect();
                        e.sort();
                        e
                    };
                    if best.as_ref().is_none_or(|b| enc < *b) {
                        best = Some(enc);
                    }
                }
            }
        }
    }
    best.ok_or(QuadricError::DuplicatePoints)
}

/// Least sorted encoding of `g(pts)` over an explicit list of group
/// elements; used to cross-check [`canonical_form`] on small groups.
pub fn brute_canonical_form(model: &QuadricModel, group: &[QAut], pts: &[QPoint]) -> Result<Encoding, QuadricError> {
    let mut best: Option<Encoding> = None;
    for g in group {
        let mut enc: Encoding = pts
            .iter()
            .map(|p| {
                act(model, g, p).map(|q| match q {
                    QPoint::Split(x, y) => encode_pair(&x, &y),
                    QPoint::Weil(x) => encode_pair(&x, &x),
                })
            })
            .collect::<Result<_, _>>()?;
        enc.sort();
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    best.ok_or(QuadricError::ModelMismatch)
}

/// Order-5 elements used to generate orbits: all of them when the group
/// is enumerable, otherwise one generator per conjugacy class of order-5
/// subgroups. Over a field with a fifth root of unity every order-5
/// subgroup of PGL2 is conjugate to ⟨diag(1, ξ)⟩, so a subgroup of
/// PGL2 × PGL2 is conjugate to ⟨(diag(1,ξ), diag(1,ξ^j))⟩ or
/// ⟨(1, diag(1,ξ))⟩; elements with a swap have even order.
pub fn order5_generators(model: &QuadricModel) -> Result<Vec<QAut>, QuadricError> {
    match automorphisms(model) {
        Ok(all) => Ok(all.into_par_iter().filter(|g| order(model, g, 5) == Some(5)).collect()),
        Err(QuadricError::Capacity(_)) | Err(QuadricError::Proj(ProjError::Capacity(_))) => {
            let s = model.matrix_field();
            let QuadricModel::Split(_) = model else {
                return Err(QuadricError::Capacity(s.size()));
            };
            let xi = s.fifth_root().map_err(|_| QuadricError::Capacity(s.size()))?;
            let one = s.one();
            let mut out: Vec<QAut> = (0..5)
                .map(|j| QAut::Split { a: diag(one, xi), b: diag(one, xi.pow(j)), swap: false })
                .collect();
            out.push(QAut::Split { a: diag(one, one), b: diag(one, xi), swap: false });
            Ok(out)
        }
        Err(e) => Err(e),
    }
}

/// Summary of the orbit classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    pub generators: usize,
    /// Distinct 5-point orbits.
    pub orbits: usize,
    pub general_position: usize,
    /// One sorted representative per equivalence class.
    pub classes: Vec<Vec<QPoint>>,
}

pub fn orbit_census(model: &QuadricModel) -> Result<OrbitCensus, QuadricError> {
    let gens = order5_generators(model)?;
    let pts = points(model)?;
    let orbits: BTreeSet<Vec<QPoint>> = gens
        .par_iter()
        .flat_map_iter(|g| {
            pts.iter()
                .filter_map(|p| orbit_of(model, g, p).ok())
                .map(|mut o| {
                    o.sort();
                    o
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let good: Vec<&Vec<QPoint>> = orbits
        .iter()
        .filter(|o| is_general_position(model, o).unwrap_or(false))
        .collect();
    let forms: Vec<(Encoding, &Vec<QPoint>)> = good
        .par_iter()
        .map(|o| canonical_form(model, o).map(|f| (f, *o)))
        .collect::<Result<_, _>>()?;
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    let mut sorted = forms;
    sorted.sort();
    for (f, o) in sorted {
        if seen.insert(f) {
            classes.push(o.clone());
        }
    }
    Ok(OrbitCensus {
        generators: gens.len(),
        orbits: orbits.len(),
        general_position: good.len(),
        classes,
    })
}

/// Number of general-position order-5 orbits up to automorphisms.
pub fn count_orbit_classes(model: &QuadricModel) -> Result<usize, QuadricError> {
    Ok(orbit_census(model)?.classes.len())
}

/// The orbit of `([1:1],[1:1])` (or `[1:1]`) under the first
/// representative, for models where it is in general position.
pub fn standard_orbit(model: &QuadricModel) -> Result<(QAut, Vec<QPoint>), QuadricError> {
    let s = model.matrix_field();
    let p1 = match model {
        QuadricModel::Split(_) => QPoint::Split(affine(s.one()), affine(s.one())),
        QuadricModel::Weil { .. } => QPoint::Weil(affine(s.one())),
    };
    let g = order5_reps(model)?.remove(0);
    let orbit = orbit_of(model, &g, &p1)?;
    Ok((g, orbit))
}
