//! Dense homogeneous polynomials.
//!
//! Monomials of a given degree are ordered graded-lex, descending, with
//! variable 0 largest: for four variables x > y > z > t of degree 3 that is
//! x³, x²y, x²z, x²t, xy², xyz, ..., zt², t³.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::linalg::Ring;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `deg` in `nvars` variables.
pub fn count(nvars: usize, deg: usize) -> usize {
    if nvars == 0 {
        return usize::from(deg == 0);
    }
    binomial(deg + nvars - 1, nvars - 1)
}

/// Position of an exponent vector in the descending graded-lex order.
pub fn rank(exps: &[u8]) -> usize {
    let n = exps.len();
    let mut rem: usize = exps.iter().map(|&e| e as usize).sum();
    let mut r = 0;
    for (i, &e) in exps.iter().enumerate() {
        for v in e as usize + 1..=rem {
            r += count(n - i - 1, rem - v);
        }
        rem -= e as usize;
    }
    r
}

/// All exponent vectors of degree `deg` in `nvars` variables, in order.
pub fn monomials(nvars: usize, deg: usize) -> &'static [Vec<u8>] {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), &'static [Vec<u8>]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry((nvars, deg)).or_insert_with(|| {
        let mut out = Vec::with_capacity(count(nvars, deg));
        let mut cur = vec![0u8; nvars];
        fill(&mut out, &mut cur, 0, deg);
        Box::leak(out.into_boxed_slice())
    })
}

fn fill(out: &mut Vec<Vec<u8>>, cur: &mut [u8], i: usize, rem: usize) {
    if i + 1 == cur.len() {
        cur[i] = rem as u8;
        out.push(cur.to_vec());
        return;
    }
    for e in (0..=rem).rev() {
        cur[i] = e as u8;
        fill(out, cur, i + 1, rem - e);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomPoly<F> {
    nvars: usize,
    deg: usize,
    coeffs: Vec<F>,
}

impl<F: Ring> HomPoly<F> {
    pub fn zero(nvars: usize, deg: usize) -> Self {
        HomPoly {
            nvars,
            deg,
            coeffs: vec![F::zero(); count(nvars, deg)],
        }
    }

    pub fn from_coeffs(nvars: usize, deg: usize, coeffs: Vec<F>) -> Self {
        assert_eq!(coeffs.len(), count(nvars, deg), "wrong coefficient count");
        HomPoly { nvars, deg, coeffs }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_coeffs(nvars, 0, vec![c])
    }

    /// `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars, 1);
        p.coeffs[i] = F::one();
        p
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: Vec<F>) -> Self {
        let n = coeffs.len();
        Self::from_coeffs(n, 1, coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, exps: &[u8]) -> &F {
        &self.coeffs[rank(exps)]
    }

    pub fn add_term(&mut self, exps: &[u8], c: F) {
        let r = rank(exps);
        self.coeffs[r] = self.coeffs[r].clone() + c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nvars, self.deg), (other.nvars, other.deg));
        HomPoly {
            nvars: self.nvars,
            deg: self.deg,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        HomPoly {
            nvars: self.nvars,
            deg: self.deg,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn map<G: Ring>(&self, f: impl FnMut(&F) -> G) -> HomPoly<G> {
        HomPoly {
            nvars: self.nvars,
            deg: self.deg,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars, self.deg + other.deg);
        let ma = monomials(self.nvars, self.deg);
        let mb = monomials(other.nvars, other.deg);
        let mut e = vec![0u8; self.nvars];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for v in 0..self.nvars {
                    e[v] = ma[i][v] + mb[j][v];
                }
                let r = rank(&e);
                out.coeffs[r] = out.coeffs[r].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(self.nvars, F::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, pt: &[F]) -> F {
        assert_eq!(pt.len(), self.nvars);
        let mons = monomials(self.nvars, self.deg);
        let mut acc = F::zero();
        for (c, m) in self.coeffs.iter().zip(mons) {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (x, &e) in pt.iter().zip(m) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(self.deg > 0);
        let mut out = Self::zero(self.nvars, self.deg - 1);
        let mons = monomials(self.nvars, self.deg);
        for (c, m) in self.coeffs.iter().zip(mons) {
            if m[i] == 0 || c.is_zero() {
                continue;
            }
            let mut e = m.clone();
            e[i] -= 1;
            let mut term = F::zero();
            for _ in 0..m[i] {
                term = term + c.clone();
            }
            out.add_term(&e, term);
        }
        out
    }

    /// `self(forms[0], ..., forms[n-1])`; all forms share one degree.
    pub fn substitute(&self, forms: &[HomPoly<F>]) -> HomPoly<F> {
        assert_eq!(forms.len(), self.nvars);
        let nv = forms[0].nvars;
        let fd = forms[0].deg;
        let powers: Vec<Vec<HomPoly<F>>> = forms
            .iter()
            .map(|f| {
                let mut ps = vec![HomPoly::constant(nv, F::one())];
                for _ in 0..self.deg {
                    let next = ps.last().unwrap().mul(f);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = HomPoly::zero(nv, fd * self.deg);
        for (c, m) in self.coeffs.iter().zip(monomials(self.nvars, self.deg)) {
            if c.is_zero() {
                continue;
            }
            let mut t = HomPoly::constant(nv, c.clone());
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[v][e as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }
}
