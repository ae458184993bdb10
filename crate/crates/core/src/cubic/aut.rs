//! Automorphisms, Frobenius action and isomorphism testing.
//!
//! An automorphism permutes the 27 lines, so it is determined by a graph
//! automorphism of the intersection graph together with the images of a
//! fixed frame of intersection points. Candidates come from the graph,
//! projectivities from frame transport, and each candidate is checked
//! exactly.

use num_traits::Zero;
use rayon::prelude::*;

use super::graph::{self, Adjacency};
use super::lines::{find_lines, find_lines_with_degree, SurfaceLines};
use super::{CubicError, CubicForm};
use crate::gf2k::{FieldElem, FieldSpec};
use crate::linalg::Matrix;
use crate::permgrp::{identify_group, Group, GroupLabel, Perm};
use crate::picweyl::{self, ClassLabel};
use crate::proj::{projectivity_from_frames, Projectivity};
use crate::{GfMatrix, GfPoint, GfProjectivity};

/// The automorphism group of a cubic surface over its base field.
#[derive(Debug, Clone)]
pub struct AutGroup {
    /// Over the base field, sorted by entries.
    pub elements: Vec<GfProjectivity>,
    /// `perms[i]` is the action of `elements[i]` on the standard classes.
    pub perms: Vec<Perm>,
    pub group: Group,
    pub label: GroupLabel,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn projectivity_of(&self, p: &Perm) -> Option<&GfProjectivity> {
        self.perms.iter().position(|q| q == p).map(|i| &self.elements[i])
    }
}

/// The Frobenius x ↦ x^q (q the base field size) acting on the classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisImage {
    pub perm: Perm,
    pub order: u64,
    pub class: ClassLabel,
    pub fixed_lines: usize,
}

pub fn galois_image(sl: &SurfaceLines) -> GaloisImage {
    let k = sl.base().k() as u32;
    let line_perm: Vec<usize> = sl
        .lines
        .iter()
        .map(|l| sl.index_of(&l.frobenius(k)).expect("Frobenius preserves the lines"))
        .collect();
    let perm = Perm::from_images(&sl.to_class_perm(&line_perm)).expect("bijection");
    GaloisImage {
        order: perm.order(),
        class: picweyl::classify(&perm),
        fixed_lines: perm.fixed_points().len(),
        perm,
    }
}

/// Frame points transported along a line permutation of `src` into `dst`.
fn transported_frame(src: &SurfaceLines, dst: &SurfaceLines, f: &[u8; 27]) -> Option<Vec<GfPoint>> {
    src.frame
        .pairs
        .iter()
        .map(|&(a, b)| dst.lines[f[a] as usize].intersection(&dst.lines[f[b] as usize]))
        .collect()
}

/// The projectivity realizing the line bijection `f: src → dst`, if it
/// maps the first surface onto the second and is defined over `base`.
fn realize(src: &SurfaceLines, dst: &SurfaceLines, f: &[u8; 27], base: FieldSpec) -> Option<GfProjectivity> {
    let target = transported_frame(src, dst, f)?;
    let t = projectivity_from_frames(&src.frame.points, &target).ok()?;
    if !t.defined_over(base) {
        return None;
    }
    if !src.form_ext.maps_onto(t.matrix(), &dst.form_ext) {
        return None;
    }
    let all_lines = src
        .lines
        .iter()
        .enumerate()
        .all(|(i, l)| t.apply_line(l) == dst.lines[f[i] as usize]);
    all_lines.then_some(t)
}

fn restrict(t: &GfProjectivity, ext: FieldSpec, base: FieldSpec) -> GfProjectivity {
    t.map_entries(|&x| ext.restrict(base, x.in_field(ext)).expect("entry in base field"))
}

/// Automorphisms of the surface over its own field of definition.
pub fn automorphisms(form: &CubicForm) -> Result<AutGroup, CubicError> {
    let sl = find_lines(form)?;
    automorphisms_of(&sl)
}

/// Automorphisms of the surface after base change to `field`.
pub fn automorphisms_over(form: &CubicForm, field: FieldSpec) -> Result<AutGroup, CubicError> {
    let form = if field == form.spec() {
        form.clone()
    } else {
        form.base_change(field)?
    };
    automorphisms(&form)
}

pub fn automorphisms_of(sl: &SurfaceLines) -> Result<AutGroup, CubicError> {
    let base = sl.base();
    let candidates = graph::automorphisms(&sl.adjacency);
    let mut found: Vec<(GfProjectivity, Perm)> = candidates
        .par_iter()
        .filter_map(|f| {
            let t = realize(sl, sl, f, base)?;
            let lp: Vec<usize> = f.iter().map(|&x| x as usize).collect();
            let perm = Perm::from_images(&sl.to_class_perm(&lp)).expect("bijection");
            Some((restrict(&t, sl.ext, base), perm))
        })
        .collect();
    found.sort_by(|a, b| a.0.matrix().entries().cmp(b.0.matrix().entries()));
    // Faithfulness: only the identity perm may give the identity matrix.
    for (t, p) in &found {
        assert_eq!(t.is_identity(), p.is_identity(), "line action must be faithful");
    }
    let (elements, perms): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    let group = Group::from_elements(27, &perms)?;
    let label = identify_group(&group);
    Ok(AutGroup {
        elements,
        perms,
        group,
        label,
    })
}

/// A projectivity `T` over the common field with `c2(T x)` proportional to
/// `c1`, i.e. `T` carries the first surface onto the second.
pub fn is_isomorphic(c1: &CubicForm, c2: &CubicForm) -> Result<Option<GfProjectivity>, CubicError> {
    if c1.spec() != c2.spec() {
        return Err(CubicError::FieldMismatch);
    }
    let (s1, s2) = (find_lines(c1)?, find_lines(c2)?);
    let m = lcm(s1.split_degree, s2.split_degree);
    let s1 = if s1.split_degree == m { s1 } else { find_lines_with_degree(c1, m)? };
    let s2 = if s2.split_degree == m { s2 } else { find_lines_with_degree(c2, m)? };
    Ok(isomorphism_between(&s1, &s2))
}

/// Exhausts the graph isomorphisms; the first one realized by a
/// projectivity over the base field wins.
pub fn isomorphism_between(s1: &SurfaceLines, s2: &SurfaceLines) -> Option<GfProjectivity> {
    let base = s1.base();
    let candidates = graph::isomorphisms(&s1.adjacency, &s2.adjacency);
    candidates
        .par_iter()
        .find_map_first(|f| realize(s1, s2, f, base))
        .map(|t| restrict(&t, s1.ext, base))
}

/// Number of graph isomorphisms between the two configurations.
pub fn graph_isomorphism_count(a: &Adjacency, b: &Adjacency) -> usize {
    graph::isomorphisms(a, b).len()
}

fn lcm(a: u32, b: u32) -> u32 {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Brute force over GL4(GF(2)): every invertible matrix `T` with `F(T x)`
/// proportional to `F`, sorted by entries. Independent of the line data.
pub fn gl4_f2_oracle(form: &CubicForm) -> Vec<GfProjectivity> {
    let spec = FieldSpec::gf(1);
    assert_eq!(form.spec(), spec, "oracle works over GF(2) only");
    let mut out: Vec<GfProjectivity> = (0u32..1 << 16)
        .into_par_iter()
        .filter_map(|bits| {
            let entries: Vec<FieldElem> = (0..16).map(|i| spec.elem_wrapping(bits >> i & 1)).collect();
            let m: GfMatrix = Matrix::from_vec(4, 4, entries);
            if m.det().is_zero() || !form.maps_onto(&m, form) {
                return None;
            }
            Projectivity::new(m).ok()
        })
        .collect();
    out.sort_by(|a, b| a.matrix().entries().cmp(b.matrix().entries()));
    out
}

/// Invertible 4×4 matrices over GF(2).
pub fn gl4_f2_count() -> usize {
    let spec = FieldSpec::gf(1);
    (0u32..1 << 16)
        .into_par_iter()
        .filter(|bits| {
            let entries: Vec<FieldElem> = (0..16).map(|i| spec.elem_wrapping(bits >> i & 1)).collect();
            !Matrix::from_vec(4, 4, entries).det().is_zero()
        })
        .count()
}
