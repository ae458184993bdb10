//! The 27 lines of a cubic surface over a splitting field.

use std::collections::HashMap;

use num_traits::Zero;

use super::graph::Adjacency;
use super::{CubicError, CubicForm};
use crate::gf2k::{FieldElem, FieldSpec};
use crate::linalg::Matrix;
use crate::picweyl;
use crate::proj::{is_frame, PluckerLine};
use crate::{GfLine, GfPoint};

/// Largest field searched for lines.
pub const MAX_SPLIT_FIELD_SIZE: usize = 64;

/// A frame of P³ made of intersection points of pairs of lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFrame {
    pub pairs: [(usize, usize); 5],
    pub points: [GfPoint; 5],
}

/// The 27 lines of a smooth cubic over the smallest splitting field in
/// the search range, with intersection graph and a labeling by the
/// standard classes.
#[derive(Debug, Clone)]
pub struct SurfaceLines {
    pub form: CubicForm,
    pub form_ext: CubicForm,
    pub ext: FieldSpec,
    pub split_degree: u32,
    /// Sorted by Plücker coordinates.
    pub lines: Vec<GfLine>,
    pub adjacency: Adjacency,
    /// `line_of_class[c]` is the line labeled by standard class `c`.
    pub line_of_class: [usize; 27],
    pub class_of_line: [usize; 27],
    pub frame: LineFrame,
    index: HashMap<GfLine, usize>,
}

/// All lines on the surface defined over `ext`, sorted.
///
/// Each line has a unique row-reduced 2×4 basis (P, Q) with pivots i < j.
/// Given F(P) = F(Q) = 0, the line lies on the surface iff the two mixed
/// Taylor coefficients ∇F(P)·Q and ∇F(Q)·P vanish.
pub fn lines_over(form: &CubicForm, ext: FieldSpec) -> Result<Vec<GfLine>, CubicError> {
    let f = form.base_change(ext)?;
    let grad = f.gradient();
    let elems: Vec<FieldElem> = ext.elements().collect();
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let p_free: Vec<usize> = (i + 1..4).filter(|&c| c != j).collect();
            let q_free: Vec<usize> = (j + 1..4).collect();
            let on_surface = |lead: usize, free: &[usize]| -> Vec<([FieldElem; 4], [FieldElem; 4])> {
                let mut pts = Vec::new();
                let n = elems.len().pow(free.len() as u32);
                for code in 0..n {
                    let mut v = [ext.zero(); 4];
                    v[lead] = ext.one();
                    let mut c = code;
                    for &pos in free {
                        v[pos] = elems[c % elems.len()];
                        c /= elems.len();
                    }
                    if f.eval(&v).is_zero() {
                        let g = std::array::from_fn(|r| grad[r].eval(&v));
                        pts.push((v, g));
                    }
                }
                pts
            };
            let ps = on_surface(i, &p_free);
            let qs = on_surface(j, &q_free);
            let dot = |a: &[FieldElem; 4], b: &[FieldElem; 4]| {
                a.iter().zip(b).fold(ext.zero(), |acc, (&x, &y)| acc + x * y)
            };
            for (p, gp) in &ps {
                for (q, gq) in &qs {
                    if dot(gp, q).is_zero() && dot(gq, p).is_zero() {
                        let a = GfPoint::new(p.to_vec()).unwrap();
                        let b = GfPoint::new(q.to_vec()).unwrap();
                        out.push(PluckerLine::through(&a, &b).expect("pivots differ"));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Lines over the smallest GF(q^m), m = 1, 2, ..., with q^m ≤ 64.
pub fn find_lines(form: &CubicForm) -> Result<SurfaceLines, CubicError> {
    let k = form.spec().k() as u32;
    let mut m = 1;
    while (1usize << (k * m)) <= MAX_SPLIT_FIELD_SIZE {
        let ext = FieldSpec::gf(k * m);
        let lines = lines_over(form, ext)?;
        match lines.len() {
            27 => return SurfaceLines::build(form, ext, m, lines),
            n if n > 27 => return Err(CubicError::TooManyLines(n)),
            _ => m += 1,
        }
    }
    Err(CubicError::SplitCap { field_size: MAX_SPLIT_FIELD_SIZE })
}

/// Lines over the fixed extension of degree `m`.
pub fn find_lines_with_degree(form: &CubicForm, m: u32) -> Result<SurfaceLines, CubicError> {
    let k = form.spec().k() as u32;
    let ext = FieldSpec::new(k * m).map_err(CubicError::Field)?;
    let lines = lines_over(form, ext)?;
    if lines.len() != 27 {
        return Err(CubicError::LineCount(lines.len()));
    }
    SurfaceLines::build(form, ext, m, lines)
}

impl SurfaceLines {
    fn build(form: &CubicForm, ext: FieldSpec, m: u32, lines: Vec<GfLine>) -> Result<Self, CubicError> {
        let mut adjacency = [0u32; 27];
        for a in 0..27 {
            for b in 0..27 {
                if a != b && lines[a].meets(&lines[b]) {
                    adjacency[a] |= 1 << b;
                }
            }
        }
        let line_of_class = label_lines(&adjacency)?;
        let mut class_of_line = [0usize; 27];
        for (c, &l) in line_of_class.iter().enumerate() {
            class_of_line[l] = c;
        }
        let frame = find_frame(&lines)?;
        let index = lines.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Ok(SurfaceLines {
            form: form.clone(),
            form_ext: form.base_change(ext)?,
            ext,
            split_degree: m,
            lines,
            adjacency,
            line_of_class,
            class_of_line,
            frame,
            index,
        })
    }

    pub fn base(&self) -> FieldSpec {
        self.form.spec()
    }

    pub fn index_of(&self, l: &GfLine) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn meets(&self, a: usize, b: usize) -> bool {
        self.adjacency[a] >> b & 1 == 1
    }

    /// 10-regular, every line on the surface, and the labeling carries
    /// adjacency to intersection number 1.
    pub fn is_schlafli(&self) -> bool {
        let m = picweyl::intersection_matrix();
        self.lines.len() == 27
            && self.adjacency.iter().all(|a| a.count_ones() == 10)
            && self.lines.iter().all(|l| line_on_surface(&self.form_ext, l))
            && (0..27).all(|a| {
                (0..27).all(|b| {
                    a == b || self.meets(self.line_of_class[a], self.line_of_class[b]) == (m[a][b] == 1)
                })
            })
    }

    /// Turns a permutation of line indices into one of class indices.
    pub fn to_class_perm(&self, line_perm: &[usize]) -> Vec<usize> {
        (0..27)
            .map(|c| self.class_of_line[line_perm[self.line_of_class[c]]])
            .collect()
    }

    pub fn to_line_perm(&self, class_perm: &[usize]) -> Vec<usize> {
        (0..27)
            .map(|l| self.line_of_class[class_perm[self.class_of_line[l]]])
            .collect()
    }
}

pub fn line_on_surface(form: &CubicForm, l: &GfLine) -> bool {
    let (a, b) = l.spanning_points();
    let grad = form.gradient();
    let dot = |g: &[crate::mpoly::HomPoly<FieldElem>; 4], at: &GfPoint, v: &GfPoint| {
        (0..4).fold(form.spec().zero(), |acc, r| acc + g[r].eval(at.coords()) * v.coords()[r])
    };
    form.eval(a.coords()).is_zero()
        && form.eval(b.coords()).is_zero()
        && dot(&grad, &a, &b).is_zero()
        && dot(&grad, &b, &a).is_zero()
}

/// Labels the lines by the standard classes: a sixer (6 pairwise skew
/// lines, first in index order) becomes E1..E6, then L_ij meets exactly
/// E_i and E_j and Q_i meets all but E_i. Backtracks if the transported
/// intersection table does not match.
pub fn label_lines(adj: &Adjacency) -> Result<[usize; 27], CubicError> {
    let meets = |a: usize, b: usize| adj[a] >> b & 1 == 1;
    let m = picweyl::intersection_matrix();
    let mut chosen = Vec::with_capacity(6);
    let mut result = None;
    search_sixer(adj, 0, &mut chosen, &mut |six: &[usize]| {
        let mut lab = [usize::MAX; 27];
        lab[..6].copy_from_slice(six);
        for l in 0..27 {
            if six.contains(&l) {
                continue;
            }
            let hits: Vec<usize> = (0..6).filter(|&i| meets(l, six[i])).collect();
            let idx = match hits.len() {
                2 => picweyl::l_index(hits[0], hits[1]),
                5 => picweyl::q_index((0..6).find(|i| !hits.contains(i)).unwrap()),
                _ => return false,
            };
            if lab[idx] != usize::MAX {
                return false;
            }
            lab[idx] = l;
        }
        let ok = (0..27).all(|a| (0..27).all(|b| a == b || meets(lab[a], lab[b]) == (m[a][b] == 1)));
        if ok {
            result = Some(lab);
        }
        ok
    });
    result.ok_or(CubicError::LabelingFailed)
}

fn search_sixer(adj: &Adjacency, start: usize, chosen: &mut Vec<usize>, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if chosen.len() == 6 {
        return accept(chosen);
    }
    for v in start..27 {
        if chosen.iter().all(|&u| adj[u] >> v & 1 == 0) {
            chosen.push(v);
            if search_sixer(adj, v + 1, chosen, accept) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// First five distinct intersection points (pairs of meeting lines in lex
/// order) forming a frame.
fn find_frame(lines: &[GfLine]) -> Result<LineFrame, CubicError> {
    let mut pts: Vec<(GfPoint, (usize, usize))> = Vec::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            if let Some(p) = lines[a].intersection(&lines[b]) {
                if !pts.iter().any(|(q, _)| *q == p) {
                    pts.push((p, (a, b)));
                }
            }
        }
    }
    let mut chosen = Vec::new();
    if pick_frame(&pts, 0, &mut chosen) {
        Ok(LineFrame {
            pairs: std::array::from_fn(|i| pts[chosen[i]].1),
            points: std::array::from_fn(|i| pts[chosen[i]].0.clone()),
        })
    } else {
        Err(CubicError::FrameNotFound)
    }
}

fn in_general_position(pts: &[&GfPoint]) -> bool {
    match pts.len() {
        0 | 1 => true,
        5 => is_frame(&pts.iter().map(|p| (*p).clone()).collect::<Vec<_>>()),
        n => {
            let rows: Vec<Vec<FieldElem>> = pts.iter().map(|p| p.coords().to_vec()).collect();
            Matrix::from_rows(&rows).rank() == n
        }
    }
}

fn pick_frame(pts: &[(GfPoint, (usize, usize))], start: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == 5 {
        return true;
    }
    for i in start..pts.len() {
        chosen.push(i);
        let sel: Vec<&GfPoint> = chosen.iter().map(|&c| &pts[c].0).collect();
        if in_general_position(&sel) && pick_frame(pts, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
