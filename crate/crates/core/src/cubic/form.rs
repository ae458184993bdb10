use std::fmt;

use num_traits::{One, Zero};

use super::CubicError;
use crate::gf2k::{FieldElem, FieldSpec};
use crate::linalg::Matrix;
use crate::mpoly::{self, HomPoly};

pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 't'];

/// The Fermat cubic.
pub const FERMAT: &str = "x^3+y^3+z^3+t^3";
/// x²t + y²z + z²y + t²x, whose automorphism group over GF(2) is S6.
pub const CYCLIC: &str = "x^2*t+y^2*z+z^2*y+t^2*x";

/// A cubic form in x, y, z, t with coefficients in `spec`, scaled so the
/// first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicForm {
    spec: FieldSpec,
    poly: HomPoly<FieldElem>,
}

impl CubicForm {
    pub fn new(spec: FieldSpec, coeffs: Vec<FieldElem>) -> Result<Self, CubicError> {
        if coeffs.len() != 20 {
            return Err(CubicError::WrongDegree { term: String::new(), degree: 0 });
        }
        let coeffs: Vec<FieldElem> = coeffs.into_iter().map(|c| c.in_field(spec)).collect();
        let Some(lead) = coeffs.iter().find(|c| !c.is_zero()).copied() else {
            return Err(CubicError::ZeroForm);
        };
        let inv = lead.inv();
        let coeffs = coeffs.into_iter().map(|c| c * inv).collect();
        Ok(CubicForm {
            spec,
            poly: HomPoly::from_coeffs(4, 3, coeffs),
        })
    }

    pub fn from_poly(spec: FieldSpec, poly: &HomPoly<FieldElem>) -> Result<Self, CubicError> {
        if poly.nvars() != 4 || poly.deg() != 3 {
            return Err(CubicError::WrongDegree { term: String::new(), degree: poly.deg() });
        }
        Self::new(spec, poly.coeffs().to_vec())
    }

    pub fn fermat(spec: FieldSpec) -> Self {
        Self::parse(FERMAT, spec).expect("valid literal")
    }

    pub fn cyclic(spec: FieldSpec) -> Self {
        Self::parse(CYCLIC, spec).expect("valid literal")
    }

    /// Parses a sum of terms such as `g^3*x^2*y + z*t^2`. `-` is read as
    /// `+`. Coefficients are `0`, `1`, `g` or `g^j`.
    pub fn parse(text: &str, spec: FieldSpec) -> Result<Self, CubicError> {
        let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(CubicError::Syntax("empty input".into()));
        }
        let mut coeffs = vec![spec.zero(); 20];
        for term in src.split(['+', '-']) {
            if term.is_empty() {
                return Err(CubicError::Syntax(format!("empty term in {text:?}")));
            }
            let (c, exps) = parse_term(term, spec)?;
            let deg: u32 = exps.iter().map(|&e| e as u32).sum();
            if deg != 3 {
                return Err(CubicError::WrongDegree {
                    term: term.to_string(),
                    degree: deg as usize,
                });
            }
            let r = mpoly::rank(&exps);
            coeffs[r] += c;
        }
        Self::new(spec, coeffs)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn poly(&self) -> &HomPoly<FieldElem> {
        &self.poly
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        self.poly.coeffs()
    }

    /// The same form over a larger field.
    pub fn base_change(&self, ext: FieldSpec) -> Result<CubicForm, CubicError> {
        let coeffs = self
            .coeffs()
            .iter()
            .map(|&c| ext.embed(self.spec, c))
            .collect::<Result<Vec<_>, _>>()?;
        CubicForm::new(ext, coeffs)
    }

    pub fn eval(&self, pt: &[FieldElem]) -> FieldElem {
        self.poly.eval(pt)
    }

    pub fn gradient(&self) -> [HomPoly<FieldElem>; 4] {
        std::array::from_fn(|i| self.poly.partial(i))
    }

    /// `F(T x)`.
    pub fn substitute(&self, t: &Matrix<FieldElem>) -> HomPoly<FieldElem> {
        let forms: Vec<HomPoly<FieldElem>> =
            (0..4).map(|r| HomPoly::linear(t.row(r).to_vec())).collect();
        self.poly.substitute(&forms)
    }

    /// True iff `poly` is a nonzero scalar multiple of this form.
    pub fn is_proportional(&self, poly: &HomPoly<FieldElem>) -> bool {
        let Some(pos) = poly.coeffs().iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lam = poly.coeffs()[pos];
        self.coeffs()
            .iter()
            .zip(poly.coeffs())
            .all(|(&a, &b)| a * lam == b)
    }

    /// True iff `T` maps the zero set of `self` onto that of `target`,
    /// i.e. `target(T x)` is proportional to `self`.
    pub fn maps_onto(&self, t: &Matrix<FieldElem>, target: &CubicForm) -> bool {
        self.is_proportional(&target.substitute(t))
    }

    /// Whether the four partial derivatives have no common zero over the
    /// algebraic closure. They are quadrics; with no common zero they form
    /// a regular sequence, the quotient has Hilbert series (1+t)^4, and so
    /// their multiples span every quintic. With a common zero no degree is
    /// spanned. The test is the rank of the 80×56 multiplication matrix.
    pub fn gradient_has_no_common_zero(&self) -> bool {
        let grad = self.gradient();
        let cubics = mpoly::monomials(4, 3);
        let n = mpoly::count(4, 5);
        let mut rows = Vec::with_capacity(80);
        for m in cubics {
            let mut mono = HomPoly::zero(4, 3);
            mono.add_term(m, self.spec.one());
            for q in &grad {
                rows.push(mono.mul(q).coeffs().to_vec());
            }
        }
        let mat = Matrix::from_rows(&rows);
        mat.rank() == n
    }

    /// Smoothness: no common zero of the partials (which by the Euler
    /// relation x·∇F = 3F = F also covers F itself), and, whenever the
    /// lines split within the search range, exactly 27 lines forming a
    /// Schläfli configuration.
    pub fn is_smooth(&self) -> bool {
        if !self.gradient_has_no_common_zero() {
            return false;
        }
        match super::lines::find_lines(self) {
            Ok(sl) => sl.is_schlafli(),
            Err(CubicError::SplitCap { .. }) => true,
            Err(_) => false,
        }
    }
}

fn parse_term(term: &str, spec: FieldSpec) -> Result<(FieldElem, [u8; 4]), CubicError> {
    let mut coeff = FieldElem::one().in_field(spec);
    let mut exps = [0u8; 4];
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(CubicError::Syntax(format!("empty factor in {term:?}")));
        }
        let first = factor.chars().next().unwrap();
        if let Some(v) = VARIABLES.iter().position(|&c| c == first) {
            let rest = &factor[1..];
            let e = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|d| d.parse::<u8>().ok())
                    .ok_or_else(|| CubicError::Syntax(format!("bad factor {factor:?}")))?
            };
            exps[v] = exps[v]
                .checked_add(e)
                .ok_or_else(|| CubicError::Syntax(format!("exponent overflow in {term:?}")))?;
        } else {
            let c = spec
                .parse_elem(factor)
                .map_err(|_| CubicError::Syntax(format!("bad factor {factor:?}")))?;
            coeff *= c;
        }
    }
    Ok((coeff, exps))
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, m) in self.coeffs().iter().zip(mpoly::monomials(4, 3)) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let mut parts = Vec::new();
            if !c.is_one() {
                parts.push(c.literal());
            }
            for (v, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(VARIABLES[v].to_string()),
                    _ => parts.push(format!("{}^{}", VARIABLES[v], e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}
