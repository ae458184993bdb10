//! Arithmetic in GF(2^k), 1 ≤ k ≤ 12.
//!
//! Each degree has one canonical model: the polynomial basis modulo the
//! irreducible polynomial of smallest bitmask. Elements carry only their
//! bits and the degree `k`; multiplication goes through log/exp tables
//! built once per degree.
//!
//! Elements of GF(2) (that is, `0` and `1` with `k = 1`) are universal: they
//! combine with elements of any field. This is what `num_traits::Zero` and
//! `One` return, so generic code can start from them without knowing the
//! field. Any other mismatch of degrees panics in operators and is reported
//! as [`GfError::MismatchedFields`] by the `try_` methods.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

pub const MAX_DEGREE: u8 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("extension degree {0} outside 1..=12")]
    InvalidDegree(u32),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("elements of GF(2^{left}) and GF(2^{right}) cannot be combined")]
    MismatchedFields { left: u8, right: u8 },
    #[error("GF(2^{sub}) is not a subfield of GF(2^{sup})")]
    NonDividingDegree { sub: u8, sup: u8 },
    #[error("GF(2^{0}) has no nontrivial fifth root of unity")]
    NoFifthRoot(u8),
    #[error("bad field spec {0:?}; expected GF(2^k)")]
    BadFieldSpec(String),
    #[error("bad element literal {0:?}; expected 0, 1, g or g^j")]
    BadLiteral(String),
    #[error("bit pattern {bits:#x} is not an element of GF(2^{k})")]
    BitsOutOfRange { bits: u32, k: u8 },
    #[error("element does not lie in GF(2^{0})")]
    NotInSubfield(u8),
}

/// A field GF(2^k) with its canonical modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    k: u8,
}

struct Tables {
    modulus: u32,
    generator: u16,
    /// `exp[i] = g^i`, stored twice over so sums of two logs need no reduction.
    exp: Vec<u16>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u16>,
}

static TABLES: [OnceLock<Tables>; MAX_DEGREE as usize + 1] =
    [const { OnceLock::new() }; MAX_DEGREE as usize + 1];

fn tables(k: u8) -> &'static Tables {
    TABLES[k as usize].get_or_init(|| build_tables(k))
}

fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

fn poly_mod(mut a: u32, m: u32) -> u32 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

/// Irreducibility over GF(2) by trial division by every polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(p: u32) -> bool {
    let d = poly_degree(p);
    if d < 1 {
        return false;
    }
    (2u32..(1 << (d / 2 + 1))).all(|q| poly_mod(p, q) != 0)
}

fn smallest_irreducible(k: u8) -> u32 {
    ((1u32 << k)..(1u32 << (k + 1)))
        .find(|&p| is_irreducible(p))
        .expect("irreducible polynomials exist in every degree")
}

/// Carry-less product reduced modulo `modulus`. Reference implementation
/// the table-driven multiply is checked against.
pub fn clmul_reduce(a: u32, b: u32, modulus: u32) -> u32 {
    let mut acc = 0u32;
    for i in 0..16 {
        if b >> i & 1 == 1 {
            acc ^= a << i;
        }
    }
    poly_mod(acc, modulus)
}

fn build_tables(k: u8) -> Tables {
    let modulus = smallest_irreducible(k);
    assert!(is_irreducible(modulus));
    let q = 1u32 << k;
    let order = q - 1;
    let mult_order = |x: u32| {
        let mut y = x;
        let mut n = 1;
        while y != 1 {
            y = clmul_reduce(y, x, modulus);
            n += 1;
        }
        n
    };
    let generator = (1..q)
        .find(|&x| mult_order(x) == order)
        .expect("the multiplicative group is cyclic") as u16;
    let mut exp = vec![0u16; 2 * order as usize];
    let mut log = vec![0u16; q as usize];
    let mut x = 1u32;
    for i in 0..order as usize {
        exp[i] = x as u16;
        exp[i + order as usize] = x as u16;
        log[x as usize] = i as u16;
        x = clmul_reduce(x, generator as u32, modulus);
    }
    Tables {
        modulus,
        generator,
        exp,
        log,
    }
}

impl FieldSpec {
    pub fn new(k: u32) -> Result<Self, GfError> {
        if (1..=MAX_DEGREE as u32).contains(&k) {
            Ok(FieldSpec { k: k as u8 })
        } else {
            Err(GfError::InvalidDegree(k))
        }
    }

    /// GF(2^k); panics outside `1..=12`.
    pub fn gf(k: u32) -> Self {
        Self::new(k).expect("valid extension degree")
    }

    pub fn k(self) -> u8 {
        self.k
    }

    pub fn modulus(self) -> u32 {
        tables(self.k).modulus
    }

    pub fn size(self) -> usize {
        1 << self.k
    }

    pub fn zero(self) -> FieldElem {
        FieldElem { bits: 0, k: self.k }
    }

    pub fn one(self) -> FieldElem {
        FieldElem { bits: 1, k: self.k }
    }

    pub fn elem(self, bits: u32) -> Result<FieldElem, GfError> {
        if bits < (1 << self.k) {
            Ok(FieldElem {
                bits: bits as u16,
                k: self.k,
            })
        } else {
            Err(GfError::BitsOutOfRange { bits, k: self.k })
        }
    }

    /// Element from bits, reduced into range. Convenient for generators.
    pub fn elem_wrapping(self, bits: u32) -> FieldElem {
        FieldElem {
            bits: (bits & ((1 << self.k) - 1)) as u16,
            k: self.k,
        }
    }

    /// The smallest-bitmask primitive element.
    pub fn generator(self) -> FieldElem {
        FieldElem {
            bits: tables(self.k).generator,
            k: self.k,
        }
    }

    pub fn gen_pow(self, j: i64) -> FieldElem {
        let order = (self.size() - 1) as i64;
        let e = j.rem_euclid(order) as usize;
        FieldElem {
            bits: tables(self.k).exp[e],
            k: self.k,
        }
    }

    /// All elements in bitmask order.
    pub fn elements(self) -> impl Iterator<Item = FieldElem> + Clone {
        let k = self.k;
        (0..1u16 << k).map(move |bits| FieldElem { bits, k })
    }

    pub fn nonzero(self) -> impl Iterator<Item = FieldElem> + Clone {
        self.elements().skip(1)
    }

    pub fn is_subfield_of(self, sup: FieldSpec) -> bool {
        sup.k % self.k == 0
    }

    /// True iff `a` lies in the subfield GF(2^d) of its field.
    pub fn contains(self, a: FieldElem) -> bool {
        if a.k % self.k != 0 && a.k != 1 {
            return false;
        }
        a.frobenius(self.k as u32) == a
    }

    /// All `x != 1` with `x^5 = 1`, sorted by bitmask. Empty unless `4 | k`.
    pub fn fifth_roots(self) -> Vec<FieldElem> {
        let order = self.size() - 1;
        if order % 5 != 0 {
            return Vec::new();
        }
        let step = (order / 5) as i64;
        let mut roots: Vec<_> = (1..5).map(|i| self.gen_pow(step * i)).collect();
        roots.sort();
        roots
    }

    /// The smallest-bitmask nontrivial fifth root of unity.
    pub fn fifth_root(self) -> Result<FieldElem, GfError> {
        self.fifth_roots()
            .first()
            .copied()
            .ok_or(GfError::NoFifthRoot(self.k))
    }

    /// `(ξ+ξ⁴, ξ²+ξ³)` for the canonical fifth root ξ. The two values are
    /// the roots of `x²+x+1`.
    pub fn quadratic_pair(self) -> Result<(FieldElem, FieldElem), GfError> {
        let xi = self.fifth_root()?;
        Ok((xi + xi.pow(4), xi.pow(2) + xi.pow(3)))
    }

    /// Smallest-bitmask root in `self` of the modulus of `sub`.
    fn embedding_root(self, sub: FieldSpec) -> Result<FieldElem, GfError> {
        if !sub.is_subfield_of(self) {
            return Err(GfError::NonDividingDegree {
                sub: sub.k,
                sup: self.k,
            });
        }
        let m = sub.modulus();
        let root = self
            .elements()
            .find(|&x| {
                let mut acc = self.zero();
                let mut power = self.one();
                for i in 0..=sub.k {
                    if m >> i & 1 == 1 {
                        acc += power;
                    }
                    power *= x;
                }
                acc.is_zero()
            })
            .expect("a subfield modulus splits in the larger field");
        Ok(root)
    }

    /// Canonical embedding of `a ∈ sub` into `self`.
    pub fn embed(self, sub: FieldSpec, a: FieldElem) -> Result<FieldElem, GfError> {
        check_pair(sub.k, a.k)?;
        if a.bits <= 1 {
            return Ok(FieldElem { bits: a.bits, k: self.k });
        }
        let root = self.embedding_root(sub)?;
        let mut acc = self.zero();
        let mut power = self.one();
        for i in 0..sub.k {
            if a.bits >> i & 1 == 1 {
                acc += power;
            }
            power *= root;
        }
        Ok(acc)
    }

    /// Inverse of [`embed`](Self::embed): the preimage of `a` in `sub`.
    pub fn restrict(self, sub: FieldSpec, a: FieldElem) -> Result<FieldElem, GfError> {
        check_pair(self.k, a.k)?;
        if !sub.contains(a.in_field(self)) {
            return Err(GfError::NotInSubfield(sub.k));
        }
        for x in sub.elements() {
            if self.embed(sub, x)? == a {
                return Ok(x);
            }
        }
        Err(GfError::NotInSubfield(sub.k))
    }

    /// Parses an element literal `0`, `1`, `g` or `g^j`.
    pub fn parse_elem(self, s: &str) -> Result<FieldElem, GfError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "0" => Ok(self.zero()),
            "1" => Ok(self.one()),
            "g" => Ok(self.generator()),
            _ => {
                let j = t
                    .strip_prefix("g^")
                    .and_then(|e| e.parse::<i64>().ok())
                    .ok_or_else(|| GfError::BadLiteral(s.to_string()))?;
                Ok(self.gen_pow(j))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.k)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FieldSpec {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, GfError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let k = t
            .strip_prefix("GF(2^")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| GfError::BadFieldSpec(s.to_string()))?;
        FieldSpec::new(k)
    }
}

/// An element of GF(2^k) in the polynomial basis.
///
/// Equality, ordering and hashing look at the bits only.
#[derive(Clone, Copy)]
pub struct FieldElem {
    bits: u16,
    k: u8,
}

fn check_pair(a: u8, b: u8) -> Result<u8, GfError> {
    if a == b || b == 1 {
        Ok(a)
    } else if a == 1 {
        Ok(b)
    } else {
        Err(GfError::MismatchedFields { left: a, right: b })
    }
}

fn combine(a: u8, b: u8) -> u8 {
    match check_pair(a, b) {
        Ok(k) => k,
        Err(e) => panic!("{e}"),
    }
}

impl FieldElem {
    pub fn bits(self) -> u16 {
        self.bits
    }

    /// Degree of the field this element was created in (1 for the
    /// universal constants).
    pub fn k(self) -> u8 {
        self.k
    }

    pub fn spec(self) -> FieldSpec {
        FieldSpec { k: self.k }
    }

    /// Reinterprets a universal constant as an element of `spec`.
    pub fn in_field(self, spec: FieldSpec) -> FieldElem {
        let k = combine(spec.k, self.k);
        FieldElem { bits: self.bits, k }
    }

    pub fn try_add(self, rhs: FieldElem) -> Result<FieldElem, GfError> {
        let k = check_pair(self.k, rhs.k)?;
        Ok(FieldElem {
            bits: self.bits ^ rhs.bits,
            k,
        })
    }

    pub fn try_mul(self, rhs: FieldElem) -> Result<FieldElem, GfError> {
        let k = check_pair(self.k, rhs.k)?;
        if self.bits == 0 || rhs.bits == 0 {
            return Ok(FieldElem { bits: 0, k });
        }
        let t = tables(k);
        let e = t.log[self.bits as usize] as usize + t.log[rhs.bits as usize] as usize;
        Ok(FieldElem { bits: t.exp[e], k })
    }

    pub fn try_inv(self) -> Result<FieldElem, GfError> {
        if self.bits == 0 {
            return Err(GfError::ZeroInverse);
        }
        let t = tables(self.k);
        let order = (1usize << self.k) - 1;
        let l = t.log[self.bits as usize] as usize;
        Ok(FieldElem {
            bits: t.exp[(order - l) % order],
            k: self.k,
        })
    }

    pub fn try_div(self, rhs: FieldElem) -> Result<FieldElem, GfError> {
        self.try_mul(rhs.try_inv()?)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> FieldElem {
        match self.try_inv() {
            Ok(x) => x,
            Err(e) => panic!("{e}"),
        }
    }

    /// Discrete log base the canonical generator.
    pub fn log(self) -> Option<u32> {
        (self.bits != 0).then(|| tables(self.k).log[self.bits as usize] as u32)
    }

    pub fn pow(self, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem { bits: 1, k: self.k };
        }
        if self.bits == 0 {
            return self;
        }
        let order = (1u64 << self.k) - 1;
        let l = tables(self.k).log[self.bits as usize] as u64;
        FieldElem {
            bits: tables(self.k).exp[((l * (e % order)) % order) as usize],
            k: self.k,
        }
    }

    /// `a^(2^j)`.
    pub fn frobenius(self, j: u32) -> FieldElem {
        if self.bits <= 1 {
            return self;
        }
        let order = (1u64 << self.k) - 1;
        let l = tables(self.k).log[self.bits as usize] as u64;
        let mut shift = 1u64;
        for _ in 0..j % self.k as u32 {
            shift = shift * 2 % order;
        }
        FieldElem {
            bits: tables(self.k).exp[(l * shift % order) as usize],
            k: self.k,
        }
    }

    /// Multiplicative order; panics on zero.
    pub fn order(self) -> u32 {
        let l = self.log().expect("zero has no multiplicative order");
        let n = (1u32 << self.k) - 1;
        n / gcd(n, l)
    }

    /// Report literal: `0`, `1` or `g^j`.
    pub fn literal(self) -> String {
        match self.bits {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => format!("g^{}", self.log().unwrap()),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl Add for FieldElem {
    type Output = FieldElem;

    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem {
            bits: self.bits ^ rhs.bits,
            k: combine(self.k, rhs.k),
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;

    fn sub(self, rhs: FieldElem) -> FieldElem {
        self + rhs
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        self
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;

    fn mul(self, rhs: FieldElem) -> FieldElem {
        match self.try_mul(rhs) {
            Ok(x) => x,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Div for FieldElem {
    type Output = FieldElem;

    fn div(self, rhs: FieldElem) -> FieldElem {
        match self.try_div(rhs) {
            Ok(x) => x,
            Err(e) => panic!("{e}"),
        }
    }
}

impl AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElem {
    fn sub_assign(&mut self, rhs: FieldElem) {
        *self = *self + rhs;
    }
}

impl MulAssign for FieldElem {
    fn mul_assign(&mut self, rhs: FieldElem) {
        *self = *self * rhs;
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem { bits: 0, k: 1 }
    }

    fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem { bits: 1, k: 1 }
    }

    fn is_one(&self) -> bool {
        self.bits == 1
    }
}

impl crate::linalg::Field for FieldElem {}
