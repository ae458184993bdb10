//! Between quadrics with five marked points and cubic surfaces.
//!
//! Blowing up five points in general position on P¹×P¹ is realized by the
//! linear system of bidegree-(2,2) forms through them; its image in P³ is
//! a cubic. Conversely, an order-5 automorphism of a cubic fixes two skew
//! lines l₁, l₂, and the pencils of planes through them map the surface
//! onto P¹×P¹, contracting the five lines that meet both.

use num_traits::Zero;
use thiserror::Error;

use crate::cubic::{self, lines::line_on_surface, CubicError, CubicForm, SurfaceLines};
use crate::gf2k::{FieldElem, FieldSpec, GfError};
use crate::linalg::Matrix;
use crate::mpoly;
use crate::proj::ProjError;
use crate::quadric::{self, QAut, QPoint, QuadricError, QuadricModel};
use crate::{GfLine, GfPoint, GfProjectivity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the marked points are not in general position")]
    NotGeneralPosition,
    #[error("{what}: expected dimension {expected}, found {found}")]
    RankFailure { what: &'static str, expected: usize, found: usize },
    #[error("the element does not generate a group of order 5")]
    NoOrderFiveAction,
    #[error("the element does not preserve the surface")]
    NotAnAutomorphism,
    #[error("{0} invariant lines, expected 2 skew ones")]
    UnexpectedInvariantCount(usize),
    #[error("the contracted points are not rational over the base field")]
    NotRational,
    #[error("line does not lie on the surface")]
    LineNotOnSurface,
    #[error(transparent)]
    Cubic(#[from] CubicError),
    #[error(transparent)]
    Quadric(#[from] QuadricError),
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A bihomogeneous form in (x₀, x₁; y₀, y₁). Coefficient `(i, j)` belongs
/// to x₀^(dx-i) x₁^i y₀^(dy-j) y₁^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiForm {
    dx: usize,
    dy: usize,
    c: Vec<FieldElem>,
}

impl BiForm {
    pub fn from_coeffs(dx: usize, dy: usize, c: Vec<FieldElem>) -> Self {
        assert_eq!(c.len(), (dx + 1) * (dy + 1));
        BiForm { dx, dy, c }
    }

    fn constant(one: FieldElem) -> Self {
        BiForm { dx: 0, dy: 0, c: vec![one] }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.dx, self.dy)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.c
    }

    fn at(&self, i: usize, j: usize) -> FieldElem {
        self.c[i * (self.dy + 1) + j]
    }

    pub fn mul(&self, o: &BiForm) -> BiForm {
        let (dx, dy) = (self.dx + o.dx, self.dy + o.dy);
        let mut c = vec![FieldElem::zero(); (dx + 1) * (dy + 1)];
        for i in 0..=self.dx {
            for j in 0..=self.dy {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..=o.dx {
                    for l in 0..=o.dy {
                        c[(i + k) * (dy + 1) + j + l] += a * o.at(k, l);
                    }
                }
            }
        }
        BiForm { dx, dy, c }
    }

    pub fn eval(&self, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
        let mut acc = FieldElem::zero();
        for i in 0..=self.dx {
            for j in 0..=self.dy {
                let a = self.at(i, j);
                if !a.is_zero() {
                    acc += a
                        * x[0].pow((self.dx - i) as u64)
                        * x[1].pow(i as u64)
                        * y[0].pow((self.dy - j) as u64)
                        * y[1].pow(j as u64);
                }
            }
        }
        acc
    }

    /// First-order term of `f(x + εu, y + εv)`, from formal partials.
    pub fn differential(&self, x: &[FieldElem], y: &[FieldElem], u: &[FieldElem], v: &[FieldElem]) -> FieldElem {
        let mut acc = FieldElem::zero();
        let times = |n: usize, a: FieldElem| if n % 2 == 1 { a } else { FieldElem::zero() };
        for i in 0..=self.dx {
            for j in 0..=self.dy {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                let e = [self.dx - i, i, self.dy - j, j];
                let vars = [x[0], x[1], y[0], y[1]];
                let dirs = [u[0], u[1], v[0], v[1]];
                for var in 0..4 {
                    if e[var] == 0 {
                        continue;
                    }
                    let mut term = times(e[var], a) * dirs[var];
                    for w in 0..4 {
                        let p = if w == var { e[w] - 1 } else { e[w] };
                        term *= vars[w].pow(p as u64);
                    }
                    acc += term;
                }
            }
        }
        acc
    }
}

/// Five points on a quadric model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedQuadric {
    pub model: QuadricModel,
    pub pts: Vec<QPoint>,
}

impl MarkedQuadric {
    pub fn new(model: QuadricModel, pts: Vec<QPoint>) -> Result<Self, ConstructError> {
        if pts.len() != 5 || !quadric::is_general_position(&model, &pts)? {
            return Err(ConstructError::NotGeneralPosition);
        }
        Ok(MarkedQuadric { model, pts })
    }
}

/// The blowup as a map to P³: four (2,2)-forms through the points and the
/// cubic relation among them.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub sections: [BiForm; 4],
    /// The cubic over the field of definition of the model.
    pub cubic: CubicForm,
    /// The same cubic over the field of the sections.
    pub cubic_work: CubicForm,
}

fn split_coords(model: &QuadricModel, p: &QPoint) -> (GfPoint, GfPoint) {
    match quadric::base_change_point(model, p) {
        QPoint::Split(x, y) => (x, y),
        QPoint::Weil(_) => unreachable!("base change yields split points"),
    }
}

fn monomial_values(x: &[FieldElem], y: &[FieldElem]) -> Vec<FieldElem> {
    let one = x[0].spec().one();
    (0..9)
        .map(|r| {
            let mut c = vec![FieldElem::zero(); 9];
            c[r] = one;
            BiForm::from_coeffs(2, 2, c).eval(x, y)
        })
        .collect()
}

/// Conjugate-and-swap on (2,2) coefficients.
fn descent_involution(model: &QuadricModel, v: &[FieldElem]) -> Vec<FieldElem> {
    let k = model.base().k() as u32;
    (0..9).map(|r| v[(r % 3) * 3 + r / 3].frobenius(k)).collect()
}

fn descend_basis(model: &QuadricModel, kernel: &[Vec<FieldElem>]) -> Result<Vec<Vec<FieldElem>>, ConstructError> {
    let theta = model.matrix_field().generator();
    let mut chosen: Vec<Vec<FieldElem>> = Vec::new();
    for b in kernel {
        let tb: Vec<FieldElem> = b.iter().map(|&x| theta * x).collect();
        for cand in [b.clone(), tb] {
            let fixed: Vec<FieldElem> = cand
                .iter()
                .zip(descent_involution(model, &cand))
                .map(|(&a, b)| a + b)
                .collect();
            let mut trial = chosen.clone();
            trial.push(fixed.clone());
            if Matrix::from_rows(&trial).rank() == trial.len() {
                chosen = trial;
            }
        }
    }
    if chosen.len() != 4 {
        return Err(ConstructError::RankFailure { what: "descended sections", expected: 4, found: chosen.len() });
    }
    Ok(chosen)
}

pub fn blowup(mq: &MarkedQuadric) -> Result<Blowup, ConstructError> {
    let model = &mq.model;
    if !quadric::is_general_position(model, &mq.pts)? {
        return Err(ConstructError::NotGeneralPosition);
    }
    let work = model.matrix_field();
    let rows: Vec<Vec<FieldElem>> = mq
        .pts
        .iter()
        .map(|p| {
            let (x, y) = split_coords(model, p);
            monomial_values(x.coords(), y.coords())
        })
        .collect();
    let kernel = Matrix::from_rows(&rows).kernel();
    if kernel.len() != 4 {
        return Err(ConstructError::RankFailure { what: "sections through the points", expected: 4, found: kernel.len() });
    }
    let basis = match model {
        QuadricModel::Split(_) => kernel,
        QuadricModel::Weil { .. } => descend_basis(model, &kernel)?,
    };
    let sections: [BiForm; 4] =
        std::array::from_fn(|i| BiForm::from_coeffs(2, 2, basis[i].iter().map(|x| x.in_field(work)).collect()));
    let one = work.one();
    let powers: Vec<Vec<BiForm>> = sections
        .iter()
        .map(|s| {
            let mut ps = vec![BiForm::constant(one)];
            for _ in 0..3 {
                let next = ps.last().unwrap().mul(s);
                ps.push(next);
            }
            ps
        })
        .collect();
    let cubics = mpoly::monomials(4, 3);
    let columns: Vec<Vec<FieldElem>> = cubics
        .iter()
        .map(|e| {
            let mut acc = BiForm::constant(one);
            for v in 0..4 {
                acc = acc.mul(&powers[v][e[v] as usize]);
            }
            acc.c
        })
        .collect();
    let m = Matrix::from_rows(&columns).transpose();
    let rel = m.kernel();
    if rel.len() != 1 {
        return Err(ConstructError::RankFailure { what: "cubic relations", expected: 1, found: rel.len() });
    }
    let cubic_work = CubicForm::new(work, rel[0].clone())?;
    let base = model.base();
    let cubic = if base == work {
        cubic_work.clone()
    } else {
        let coeffs = cubic_work
            .coeffs()
            .iter()
            .map(|&c| work.restrict(base, c).map_err(|_| ConstructError::NotRational))
            .collect::<Result<Vec<_>, _>>()?;
        CubicForm::new(base, coeffs)?
    };
    Ok(Blowup { sections, cubic, cubic_work })
}

pub fn blowup_to_cubic(mq: &MarkedQuadric) -> Result<CubicForm, ConstructError> {
    Ok(blowup(mq)?.cubic)
}

fn complement_direction(p: &GfPoint) -> [FieldElem; 2] {
    let s = p.coords()[0].spec();
    if p.coords()[0].is_zero() {
        [s.one(), s.zero()]
    } else {
        [s.zero(), s.one()]
    }
}

/// Images of the exceptional curves: the line spanned by the derivatives
/// of the sections along the two rulings at each marked point.
pub fn exceptional_lines(mq: &MarkedQuadric, b: &Blowup) -> Result<Vec<GfLine>, ConstructError> {
    mq.pts
        .iter()
        .map(|p| {
            let (x, y) = split_coords(&mq.model, p);
            let zero = [FieldElem::zero(); 2];
            let (u, v) = (complement_direction(&x), complement_direction(&y));
            let d1: Vec<FieldElem> = b.sections.iter().map(|s| s.differential(x.coords(), y.coords(), &u, &zero)).collect();
            let d2: Vec<FieldElem> = b.sections.iter().map(|s| s.differential(x.coords(), y.coords(), &zero, &v)).collect();
            let (a, c) = (GfPoint::new(d1)?, GfPoint::new(d2)?);
            Ok(GfLine::through(&a, &c)?)
        })
        .collect()
}

/// The quadric, its five points and the induced order-5 action.
#[derive(Debug, Clone)]
pub struct Blowdown {
    pub marked: MarkedQuadric,
    pub action: QAut,
    /// Indices into the line list of the surface.
    pub invariant_lines: (usize, usize),
    pub quintuple: Vec<usize>,
}

fn line_perm(sl: &SurfaceLines, t: &GfProjectivity) -> Result<Vec<usize>, ConstructError> {
    sl.lines
        .iter()
        .map(|l| sl.index_of(&t.apply_line(l)).ok_or(ConstructError::NotAnAutomorphism))
        .collect()
}

fn embed_proj(t: &GfProjectivity, ext: FieldSpec) -> Result<GfProjectivity, ConstructError> {
    let src = t.matrix().entries().iter().map(|x| x.spec()).max_by_key(|s| s.k()).unwrap();
    Ok(GfProjectivity::new(t.matrix().map(|&x| ext.embed(src, x.in_field(src)).expect("subfield")))?)
}

/// Linear forms vanishing on `l`, as a basis (h₀, h₁).
fn pencil_basis(l: &GfLine) -> [Vec<FieldElem>; 2] {
    let (a, b) = l.spanning_points();
    let k = Matrix::from_rows(&[a.coords().to_vec(), b.coords().to_vec()]).kernel();
    [k[0].clone(), k[1].clone()]
}

fn dot(h: &[FieldElem], p: &[FieldElem]) -> FieldElem {
    h.iter().zip(p).fold(FieldElem::zero(), |acc, (&a, &b)| acc + a * b)
}

/// Pencil parameter [λ₀ : λ₁] of the plane λ₀h₀ + λ₁h₁ through `l`
/// containing `m` (which meets `l`).
fn pencil_parameter(h: &[Vec<FieldElem>; 2], l: &GfLine, m: &GfLine) -> GfPoint {
    let (a, b) = m.spanning_points();
    let e = if l.contains(&a) { b } else { a };
    let (v0, v1) = (dot(&h[0], e.coords()), dot(&h[1], e.coords()));
    GfPoint::new(vec![v1, v0]).expect("point off the line")
}

/// Matrix of `t` on the pencil through an invariant line: the plane
/// λ₀h₀ + λ₁h₁ goes to (λ₀h₀ + λ₁h₁)∘t⁻¹.
fn pencil_action(h: &[Vec<FieldElem>; 2], t: &GfProjectivity) -> Result<GfProjectivity, ConstructError> {
    let tinv = t.inverse();
    let pulled: Vec<Vec<FieldElem>> = h
        .iter()
        .map(|hi| (0..4).map(|c| dot(hi, &tinv.matrix().column(c))).collect())
        .collect();
    // express pulled[i] = α h₀ + β h₁
    let basis = Matrix::from_rows(&[h[0].clone(), h[1].clone()]).transpose();
    let mut m = Matrix::zeros(2, 2);
    for (i, p) in pulled.iter().enumerate() {
        let s = basis.solve(p).ok_or(ConstructError::NotAnAutomorphism)?;
        m[(0, i)] = s[0];
        m[(1, i)] = s[1];
    }
    Ok(GfProjectivity::new(m)?)
}

/// Blows down the five lines meeting both `t`-invariant lines.
pub fn blowdown_data(form: &CubicForm, t: &GfProjectivity) -> Result<Blowdown, ConstructError> {
    if t.order(5) != Some(5) {
        return Err(ConstructError::NoOrderFiveAction);
    }
    if !form.maps_onto(embed_proj(t, form.spec())?.matrix(), form) {
        return Err(ConstructError::NotAnAutomorphism);
    }
    let sl = cubic::find_lines(form)?;
    let te = embed_proj(t, sl.ext)?;
    let perm = line_perm(&sl, &te)?;
    let fixed: Vec<usize> = (0..27).filter(|&i| perm[i] == i).collect();
    if fixed.len() != 2 || sl.meets(fixed[0], fixed[1]) {
        return Err(ConstructError::UnexpectedInvariantCount(fixed.len()));
    }
    let (i1, i2) = (fixed[0], fixed[1]);
    let common: Vec<usize> = (0..27).filter(|&m| sl.meets(m, i1) && sl.meets(m, i2)).collect();
    if common.len() != 5 {
        return Err(ConstructError::UnexpectedInvariantCount(common.len()));
    }
    // walk the orbit so the points come in the order p, gp, ..., g⁴p
    let mut quintuple = vec![common[0]];
    for _ in 1..5 {
        quintuple.push(perm[*quintuple.last().unwrap()]);
    }
    let base = form.spec();
    let q = base.k() as u32;
    let (l1, l2) = (sl.lines[i1].clone(), sl.lines[i2].clone());
    let frob1 = l1.frobenius(q);
    let h1 = pencil_basis(&l1);
    let a1 = pencil_action(&h1, &te)?;
    let (model, pts, action) = if frob1 == l1 {
        let h2 = pencil_basis(&l2);
        let a2 = pencil_action(&h2, &te)?;
        let pts: Vec<(GfPoint, GfPoint)> = quintuple
            .iter()
            .map(|&m| (pencil_parameter(&h1, &l1, &sl.lines[m]), pencil_parameter(&h2, &l2, &sl.lines[m])))
            .collect();
        let down = |p: &GfPoint| -> Result<GfPoint, ConstructError> {
            Ok(GfPoint::new(
                p.coords()
                    .iter()
                    .map(|&x| sl.ext.restrict(base, x).map_err(|_| ConstructError::NotRational))
                    .collect::<Result<_, _>>()?,
            )?)
        };
        let down_aut = |a: &GfProjectivity| -> Result<GfProjectivity, ConstructError> {
            Ok(GfProjectivity::new(a.matrix().map(|&x| sl.ext.restrict(base, x).unwrap_or(x)))?)
        };
        let pts = pts
            .iter()
            .map(|(x, y)| Ok(QPoint::Split(down(x)?, down(y)?)))
            .collect::<Result<Vec<_>, ConstructError>>()?;
        let action = QAut::Split { a: down_aut(&a1)?, b: down_aut(&a2)?, swap: false };
        (QuadricModel::split(base), pts, action)
    } else if frob1 == l2 {
        let ext = FieldSpec::new(2 * base.k() as u32)?;
        if !ext.is_subfield_of(sl.ext) {
            return Err(ConstructError::NotRational);
        }
        let down = |x: FieldElem| sl.ext.restrict(ext, x).map_err(|_| ConstructError::NotRational);
        let pts = quintuple
            .iter()
            .map(|&m| {
                let p = pencil_parameter(&h1, &l1, &sl.lines[m]);
                Ok(QPoint::Weil(GfPoint::new(
                    p.coords().iter().map(|&x| down(x)).collect::<Result<_, _>>()?,
                )?))
            })
            .collect::<Result<Vec<_>, ConstructError>>()?;
        let a = GfProjectivity::new(a1.matrix().map(|&x| down(x).unwrap_or(x)))?;
        (QuadricModel::weil(base, ext)?, pts, QAut::Weil { a, twist: false })
    } else {
        return Err(ConstructError::NotRational);
    };
    let (pts, action) = normalize_torus(&model, pts, action)?;
    let marked = MarkedQuadric::new(model, pts)?;
    Ok(Blowdown { marked, action, invariant_lines: (i1, i2), quintuple })
}

/// Rescales each ruling by a diagonal matrix so the first point with all
/// coordinates nonzero becomes ([1:1],[1:1]).
fn normalize_torus(model: &QuadricModel, pts: Vec<QPoint>, action: QAut) -> Result<(Vec<QPoint>, QAut), ConstructError> {
    let scale_for = |p: &GfPoint| -> Option<GfProjectivity> {
        let c = p.coords();
        (!c[0].is_zero() && !c[1].is_zero()).then(|| {
            let m = Matrix::from_vec(2, 2, vec![c[0].inv(), FieldElem::zero(), FieldElem::zero(), c[1].inv()]);
            GfProjectivity::new(m).unwrap()
        })
    };
    let g = pts.iter().find_map(|p| match p {
        QPoint::Split(x, y) => Some(QAut::Split { a: scale_for(x)?, b: scale_for(y)?, swap: false }),
        QPoint::Weil(x) => Some(QAut::Weil { a: scale_for(x)?, twist: false }),
    });
    let Some(g) = g else {
        return Ok((pts, action));
    };
    let ginv = match &g {
        QAut::Split { a, b, .. } => QAut::Split { a: a.inverse(), b: b.inverse(), swap: false },
        QAut::Weil { a, .. } => QAut::Weil { a: a.inverse(), twist: false },
    };
    let pts = pts.iter().map(|p| quadric::act(model, &g, p)).collect::<Result<Vec<_>, _>>()?;
    let action = quadric::compose(model, &g, &quadric::compose(model, &action, &ginv)?)?;
    Ok((pts, action))
}

/// The five reducible conics cut by planes through `l`, as pairs of line
/// indices into `sl.lines`.
pub fn conic_fibers(sl: &SurfaceLines, l: &GfLine) -> Result<Vec<(usize, usize)>, ConstructError> {
    let idx = sl.index_of(l).filter(|_| line_on_surface(&sl.form_ext, l)).ok_or(ConstructError::LineNotOnSurface)?;
    let nbrs: Vec<usize> = (0..27).filter(|&m| sl.meets(idx, m)).collect();
    let mut pairs = Vec::new();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if sl.meets(a, b) {
                pairs.push((a, b));
            }
        }
    }
    Ok(pairs)
}

/// Blows down along `t` and back up; the witness maps the result onto `form`.
pub fn roundtrip(form: &CubicForm, t: &GfProjectivity) -> Result<Option<GfProjectivity>, ConstructError> {
    let bd = blowdown_data(form, t)?;
    let c = blowup_to_cubic(&bd.marked)?;
    Ok(cubic::is_isomorphic(&c, form)?)
}

/// An element of order 5 in the automorphism group, if any (least in the
/// sorted element list).
pub fn order5_automorphism(form: &CubicForm) -> Result<Option<GfProjectivity>, ConstructError> {
    let a = cubic::automorphisms(form)?;
    Ok(a.perms.iter().position(|p| p.order() == 5).map(|i| a.elements[i].clone()))
}
