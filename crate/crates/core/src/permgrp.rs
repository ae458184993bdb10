//! Permutation groups small enough to list element by element.
//!
//! Every [`Group`] holds its full element list. That keeps conjugacy,
//! centralizer and subgroup code direct and obviously correct, and the
//! largest group needed here has 51840 elements.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

pub const MAX_DEGREE: usize = 64;
pub const MAX_ORDER: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("group order exceeds the cap of {0}")]
    Overflow(usize),
    #[error("images do not form a permutation")]
    NotBijection,
    #[error("degree {0} outside 1..=64")]
    BadDegree(usize),
    #[error("permutations of different degrees")]
    DegreeMismatch,
    #[error("element is not in the group")]
    NotMember,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("element list is not closed under composition")]
    NotClosed,
}

/// A permutation of `0..n`, `n ≤ 64`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        for c in self.cycles() {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: &[usize]) -> Result<Perm, PermError> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(PermError::NotBijection);
            }
        }
        Ok(Perm(images.iter().map(|&i| i as u8).collect()))
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                let b = c[(i + 1) % c.len()];
                if a >= n || b >= n {
                    return Err(PermError::NotBijection);
                }
                images[a] = b;
            }
        }
        Perm::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for i in 0..self.0.len() {
            out[h.0[i] as usize] = h.0[self.0[i] as usize];
        }
        Perm(out)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        (0..self.0.len()).all(|i| self.0[other.0[i] as usize] == other.0[self.0[i] as usize])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A conjugacy class: its smallest element and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: Perm,
    pub size: usize,
    pub members: Vec<usize>,
}

/// A finite permutation group with all elements listed.
///
/// The element list is in breadth-first order from the generators, starting
/// with the identity.
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    classes: OnceLock<Vec<ConjClass>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            degree: self.degree,
            gens: self.gens.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            classes: OnceLock::new(),
        }
    }
}

impl Group {
    /// Closure of `gens` on `degree` points; fails once more than `cap`
    /// elements are found.
    pub fn closure(degree: usize, gens: &[Perm], cap: usize) -> Result<Group, PermError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::BadDegree(degree));
        }
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch);
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &gens {
                let x = s.compose(&elements[i]);
                if !index.contains_key(&x) {
                    if elements.len() >= cap {
                        return Err(PermError::Overflow(cap));
                    }
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        Ok(Group {
            degree,
            gens,
            elements,
            index,
            classes: OnceLock::new(),
        })
    }

    /// Group from a complete element list, with generators picked greedily
    /// in list order. Fails if the list is not closed.
    pub fn from_elements(degree: usize, elems: &[Perm]) -> Result<Group, PermError> {
        let set: HashSet<&Perm> = elems.iter().collect();
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = Group::closure(degree, &[], MAX_ORDER)?;
        for e in elems {
            if current.contains(e) {
                continue;
            }
            gens.push(e.clone());
            current = Group::closure(degree, &gens, elems.len())
                .map_err(|_| PermError::NotClosed)?;
        }
        if current.order() != set.len() || !current.elements.iter().all(|x| set.contains(x)) {
            return Err(PermError::NotClosed);
        }
        Ok(current)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Conjugacy classes, computed once and cached. Sorted by (element
    /// order, size, representative).
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.order()];
            let mut classes = Vec::new();
            for start in 0..self.order() {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                class_of[start] = id;
                let mut members = vec![start];
                let mut queue = VecDeque::from([start]);
                while let Some(i) = queue.pop_front() {
                    for s in &self.gens {
                        let y = self.elements[i].conjugate_by(s);
                        let j = self.index[&y];
                        if class_of[j] == usize::MAX {
                            class_of[j] = id;
                            members.push(j);
                            queue.push_back(j);
                        }
                    }
                }
                members.sort_unstable();
                let rep = members
                    .iter()
                    .map(|&i| &self.elements[i])
                    .min()
                    .unwrap()
                    .clone();
                classes.push(ConjClass {
                    rep,
                    size: members.len(),
                    members,
                });
            }
            classes.sort_by(|a, b| {
                (a.rep.order(), a.size, &a.rep).cmp(&(b.rep.order(), b.size, &b.rep))
            });
            classes
        })
    }

    /// Index into [`conjugacy_classes`](Self::conjugacy_classes) of `g`.
    pub fn class_of(&self, g: &Perm) -> Option<usize> {
        let i = self.index_of(g)?;
        self.conjugacy_classes()
            .iter()
            .position(|c| c.members.binary_search(&i).is_ok())
    }

    pub fn centralizer(&self, g: &Perm) -> Result<Group, PermError> {
        if !self.contains(g) {
            return Err(PermError::NotMember);
        }
        let elems: Vec<Perm> = self
            .elements
            .par_iter()
            .filter(|h| h.commutes_with(g))
            .cloned()
            .collect();
        Group::from_elements(self.degree, &elems)
    }

    /// Elements commuting with every element of `h`.
    pub fn centralizer_of(&self, h: &Group) -> Result<Group, PermError> {
        if !h.is_subgroup_of(self) {
            return Err(PermError::NotSubgroup);
        }
        let elems: Vec<Perm> = self
            .elements
            .par_iter()
            .filter(|x| h.gens.iter().all(|g| x.commutes_with(g)))
            .cloned()
            .collect();
        Group::from_elements(self.degree, &elems)
    }

    pub fn center(&self) -> Group {
        let elems: Vec<Perm> = self
            .elements
            .iter()
            .filter(|x| self.gens.iter().all(|g| x.commutes_with(g)))
            .cloned()
            .collect();
        Group::from_elements(self.degree, &elems).expect("the center is a subgroup")
    }

    /// Stabilizer of one point.
    pub fn stabilizer(&self, point: usize) -> Group {
        let elems: Vec<Perm> = self
            .elements
            .iter()
            .filter(|x| x.apply(point) == point)
            .cloned()
            .collect();
        Group::from_elements(self.degree, &elems).expect("stabilizers are subgroups")
    }

    /// Normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Group {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut h = Group::closure(self.degree, &gens, MAX_ORDER).expect("subgroup of a listed group");
        loop {
            let extra: Vec<Perm> = self
                .gens
                .iter()
                .flat_map(|s| h.gens.iter().map(move |x| x.conjugate_by(s)))
                .filter(|y| !h.contains(y))
                .collect();
            let Some(y) = extra.into_iter().next() else {
                return h;
            };
            gens.push(y);
            h = Group::closure(self.degree, &gens, MAX_ORDER).expect("subgroup of a listed group");
        }
    }

    /// Orders of G, G', G'', ... until the series stabilizes.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut out = vec![self.order()];
        let mut g = self.derived_subgroup();
        while g.order() != *out.last().unwrap() {
            out.push(g.order());
            g = g.derived_subgroup();
        }
        out
    }

    pub fn element_of_order(&self, n: u64) -> Option<&Perm> {
        self.elements.iter().find(|g| g.order() == n)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut class_sizes: Vec<usize> = self.conjugacy_classes().iter().map(|c| c.size).collect();
        class_sizes.sort_unstable();
        let mut orders: HashMap<u64, usize> = HashMap::new();
        for g in &self.elements {
            *orders.entry(g.order()).or_default() += 1;
        }
        let mut element_orders: Vec<(u64, usize)> = orders.into_iter().collect();
        element_orders.sort_unstable();
        Fingerprint {
            order: self.order(),
            center_order: self.center().order(),
            derived_orders: self.derived_series_orders(),
            class_sizes,
            element_orders,
        }
    }

    /// Sorted element list, used to compare subgroups as sets.
    pub fn sorted_elements(&self) -> Vec<Perm> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    /// For each listed subgroup, an element conjugating the first one onto
    /// it. `None` if some pair is not conjugate.
    pub fn all_conjugate(&self, subgroups: &[Group]) -> Result<Option<Vec<Perm>>, PermError> {
        if subgroups.iter().any(|h| !h.is_subgroup_of(self)) {
            return Err(PermError::NotSubgroup);
        }
        let Some(base) = subgroups.first() else {
            return Ok(Some(Vec::new()));
        };
        let mut witnesses = Vec::with_capacity(subgroups.len());
        for h in subgroups {
            if h.order() != base.order() {
                return Ok(None);
            }
            let w = self.elements.par_iter().find_first(|x| {
                base.gens.iter().all(|g| h.contains(&g.conjugate_by(x)))
            });
            match w {
                Some(x) => witnesses.push(x.clone()),
                None => return Ok(None),
            }
        }
        Ok(Some(witnesses))
    }

    /// Subgroups `⟨a, b⟩` of order `target` over all `b` in the group,
    /// deduplicated, that satisfy `keep`.
    pub fn two_generated_subgroups(
        &self,
        a: &Perm,
        target: usize,
        keep: impl Fn(&Group) -> bool + Sync,
    ) -> Vec<Group> {
        let found: Vec<Group> = self
            .elements
            .par_iter()
            .filter_map(|b| {
                let h = Group::closure(self.degree, &[a.clone(), b.clone()], target + 1).ok()?;
                (h.order() == target && keep(&h)).then_some(h)
            })
            .collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for h in found {
            if seen.insert(h.sorted_elements()) {
                out.push(h);
            }
        }
        out
    }
}

/// Isomorphism invariants compared against the reference catalog.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    pub derived_orders: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub element_orders: Vec<(u64, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    Trivial,
    Z2,
    Z5,
    Z10,
    Z2xS4,
    S6,
    A6,
    Psu4F2,
    WE6,
    Z2Pow4A5,
    Other(usize),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => f.write_str("trivial"),
            GroupLabel::Z2 => f.write_str("Z/2"),
            GroupLabel::Z5 => f.write_str("Z/5"),
            GroupLabel::Z10 => f.write_str("Z/10"),
            GroupLabel::Z2xS4 => f.write_str("Z/2xS4"),
            GroupLabel::S6 => f.write_str("S6"),
            GroupLabel::A6 => f.write_str("A6"),
            GroupLabel::Psu4F2 => f.write_str("PSU4(F2)"),
            GroupLabel::WE6 => f.write_str("W(E6)"),
            GroupLabel::Z2Pow4A5 => f.write_str("(Z/2)^4:A5"),
            GroupLabel::Other(n) => write!(f, "other({n})"),
        }
    }
}

fn cyclic(n: usize) -> Group {
    let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    Group::closure(n, &[Perm::from_images(&images).unwrap()], MAX_ORDER).unwrap()
}

fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

/// Reference constructions the catalog fingerprints come from.
pub mod reference {
    use super::*;

    pub fn trivial() -> Group {
        Group::closure(1, &[], 1).unwrap()
    }

    pub fn cyclic_group(n: usize) -> Group {
        cyclic(n)
    }

    /// S4 on {0,1,2,3} times the transposition (4 5).
    pub fn z2_x_s4() -> Group {
        let gens = [perm(6, &[&[0, 1]]), perm(6, &[&[0, 1, 2, 3]]), perm(6, &[&[4, 5]])];
        Group::closure(6, &gens, MAX_ORDER).unwrap()
    }

    pub fn s6() -> Group {
        let gens = [perm(6, &[&[0, 1]]), perm(6, &[&[0, 1, 2, 3, 4, 5]])];
        Group::closure(6, &gens, MAX_ORDER).unwrap()
    }

    pub fn a6() -> Group {
        let gens = [perm(6, &[&[0, 1, 2]]), perm(6, &[&[1, 2, 3, 4, 5]])];
        Group::closure(6, &gens, MAX_ORDER).unwrap()
    }

    /// Even sign changes on 5 coordinates, extended by A5 permuting the
    /// coordinates; acting on the 10 points ±e_i (point 2i is +e_i,
    /// 2i+1 is -e_i).
    pub fn z2pow4_a5() -> Group {
        let lift = |cycle: &[usize]| {
            let plus: Vec<usize> = cycle.iter().map(|&i| 2 * i).collect();
            let minus: Vec<usize> = cycle.iter().map(|&i| 2 * i + 1).collect();
            perm(10, &[&plus, &minus])
        };
        let gens = [
            lift(&[0, 1, 2]),
            lift(&[0, 1, 2, 3, 4]),
            perm(10, &[&[0, 1], &[2, 3]]),
        ];
        Group::closure(10, &gens, MAX_ORDER).unwrap()
    }
}

struct CatalogEntry {
    label: GroupLabel,
    order: usize,
    build: fn() -> Group,
    fingerprint: OnceLock<Fingerprint>,
}

fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let e = |label, order, build| CatalogEntry {
            label,
            order,
            build,
            fingerprint: OnceLock::new(),
        };
        vec![
            e(GroupLabel::Trivial, 1, reference::trivial as fn() -> Group),
            e(GroupLabel::Z2, 2, || reference::cyclic_group(2)),
            e(GroupLabel::Z5, 5, || reference::cyclic_group(5)),
            e(GroupLabel::Z10, 10, || reference::cyclic_group(10)),
            e(GroupLabel::Z2xS4, 48, reference::z2_x_s4),
            e(GroupLabel::S6, 720, reference::s6),
            e(GroupLabel::A6, 360, reference::a6),
            e(GroupLabel::Z2Pow4A5, 960, reference::z2pow4_a5),
            e(GroupLabel::Psu4F2, 25920, || {
                crate::picweyl::weyl_group().derived_subgroup()
            }),
            e(GroupLabel::WE6, 51840, || crate::picweyl::weyl_group().clone()),
        ]
    })
}

/// The catalog fingerprint for `label`, if it is a catalog label.
pub fn catalog_fingerprint(label: GroupLabel) -> Option<&'static Fingerprint> {
    catalog()
        .iter()
        .find(|e| e.label == label)
        .map(|e| e.fingerprint.get_or_init(|| (e.build)().fingerprint()))
}

/// Names a group by comparing its fingerprint with the reference
/// catalog; falls back to `Other(order)`.
pub fn identify_group(g: &Group) -> GroupLabel {
    let candidates: Vec<&CatalogEntry> = catalog().iter().filter(|e| e.order == g.order()).collect();
    if candidates.is_empty() {
        return GroupLabel::Other(g.order());
    }
    let fp = g.fingerprint();
    candidates
        .into_iter()
        .find(|e| *e.fingerprint.get_or_init(|| (e.build)().fingerprint()) == fp)
        .map_or(GroupLabel::Other(g.order()), |e| e.label)
}
