//! Named verification suites. Each one recomputes a known result from
//! scratch and compares it with [`crate::expected`].

use std::fmt::Display;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::construct::{self, MarkedQuadric};
use crate::cubic::{self, CubicForm};
use crate::expected as ex;
use crate::permgrp::{identify_group, GroupLabel, Perm};
use crate::picweyl::{self, ClassLabel};
use crate::quadric::{self, QuadricModel};
use crate::{FieldSpec, GfMatrix};

/// One comparison of a computed value with its reference value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub computed: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub id: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl SuiteReport {
    pub fn within_limit(&self) -> bool {
        self.elapsed < self.limit
    }

    pub fn passed(&self) -> bool {
        self.within_limit() && !self.checks.is_empty() && self.checks.iter().all(|c| c.ok)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Suite {
    pub id: &'static str,
    pub summary: &'static str,
    pub limit: Duration,
    /// Only run on request; too slow for the default pass.
    pub extended: bool,
    run: fn(&mut Checks),
}

impl Suite {
    pub fn run(&self) -> SuiteReport {
        let mut checks = Checks::default();
        let start = Instant::now();
        (self.run)(&mut checks);
        SuiteReport { id: self.id, checks: checks.0, elapsed: start.elapsed(), limit: self.limit }
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, computed: T, expected: T) {
        let ok = computed == expected;
        self.0.push(Check { name: name.into(), computed: computed.to_string(), expected: expected.to_string(), ok });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool) {
        self.eq(name, ok, true);
    }

    /// Records an error from the library as a failed check.
    fn fail(&mut self, name: impl Into<String>, err: impl Display) {
        self.0.push(Check { name: name.into(), computed: format!("error: {err}"), expected: "success".into(), ok: false });
    }
}

macro_rules! tryc {
    ($c:expr, $name:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => {
                $c.fail($name, err);
                return;
            }
        }
    };
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const SUITES: [Suite; 12] = [
    Suite { id: "weyl-order", summary: "orders of W(E6) and its derived subgroup", limit: secs(30), extended: false, run: weyl_order },
    Suite { id: "class-census", summary: "classes of order 2, 5, 10 in W(E6)", limit: secs(120), extended: false, run: class_census },
    Suite { id: "involution-profiles", summary: "line profiles of every involution", limit: secs(120), extended: false, run: involution_profiles },
    Suite { id: "order-five-centralizers", summary: "centralizers of order-5 elements", limit: secs(120), extended: false, run: order_five_centralizers },
    Suite { id: "automorphism-groups", summary: "automorphism groups of the Fermat and cyclic surfaces", limit: secs(600), extended: false, run: automorphism_groups },
    Suite { id: "galois-images", summary: "Frobenius action on the lines", limit: secs(60), extended: false, run: galois_images },
    Suite { id: "orbit-uniqueness", summary: "one class of general-position order-5 orbits", limit: secs(600), extended: false, run: orbit_uniqueness },
    Suite { id: "blowdown-blowup", summary: "blowdown to a marked quadric and back", limit: secs(300), extended: false, run: blowdown_blowup },
    Suite { id: "collineation", summary: "explicit map from the cyclic surface to Fermat over GF(4)", limit: secs(1), extended: false, run: collineation },
    Suite { id: "non-isomorphism", summary: "cyclic and Fermat surfaces over GF(2)", limit: secs(300), extended: false, run: non_isomorphism },
    Suite { id: "line-stabilizer", summary: "line stabilizer in PSU4(F2) and the S6 subgroup", limit: secs(120), extended: false, run: line_stabilizer },
    Suite { id: "a6-conjugacy", summary: "A6 subgroups of W(E6) are conjugate", limit: secs(1800), extended: true, run: a6_conjugacy },
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

fn gf(k: u32) -> FieldSpec {
    FieldSpec::gf(k)
}

fn weyl_order(c: &mut Checks) {
    c.eq("|W(E6)|", picweyl::weyl_group().order(), ex::WEYL_ORDER);
    c.eq("|W(E6)'|", picweyl::weyl_derived().order(), ex::WEYL_DERIVED_ORDER);
}

fn class_census(c: &mut Checks) {
    let rows = picweyl::class_census();
    c.eq("classes", rows.len(), ex::CLASS_TABLE.len());
    for want in &ex::CLASS_TABLE {
        let Some(got) = rows.iter().find(|r| r.label.to_string() == want.label) else {
            c.holds(format!("{} present", want.label), false);
            continue;
        };
        c.eq(format!("{} order", want.label), got.element_order, want.element_order);
        c.eq(format!("{} size", want.label), got.size, want.size);
        c.eq(format!("{} centralizer", want.label), got.centralizer_order, want.centralizer_order);
        c.eq(format!("{} charpoly", want.label), poly_string(&got.charpoly), poly_string(&want.eigenvalues.charpoly()));
    }
}

fn class_size(label: &str) -> usize {
    ex::CLASS_TABLE.iter().find(|r| r.label == label).map_or(0, |r| r.size)
}

fn poly_string(p: &[i64]) -> String {
    format!("{p:?}")
}

fn involution_profiles(c: &mut Checks) {
    let w = picweyl::weyl_group();
    let involutions: Vec<&Perm> = w.elements().iter().filter(|g| g.order() == 2).collect();
    let bad: Vec<String> = involutions
        .par_iter()
        .filter_map(|g| {
            let label = picweyl::classify(g).to_string();
            let profile = picweyl::fixed_line_profile(g).ok()?;
            let ok = ex::INVOLUTION_PROFILES
                .iter()
                .any(|&(l, f, s, m)| l == label && (f, s, m) == profile);
            (!ok).then(|| format!("{label} {profile:?}"))
        })
        .collect();
    c.eq("involutions", involutions.len(), ex::CLASS_TABLE.iter().filter(|r| r.element_order == 2).map(|r| r.size).sum());
    c.eq("involutions off profile", bad.len(), 0);
}

fn order_five_centralizers(c: &mut Checks) {
    let w = picweyl::weyl_group();
    let elems = w.elements();
    let fives: Vec<&Perm> = elems.iter().filter(|g| g.order() == 5).collect();
    // (centralizer order, has an element of order 10, involutions not A1)
    let stats: Vec<(usize, bool, usize)> = fives
        .par_iter()
        .map(|g| {
            let cent: Vec<&Perm> = elems.iter().filter(|h| h.commutes_with(g)).collect();
            let cyclic = cent.iter().any(|h| h.order() == ex::ORDER5_CENTRALIZER as u64);
            let off = cent.iter().filter(|h| h.order() == 2 && picweyl::classify(h) != ClassLabel::A1).count();
            (cent.len(), cyclic, off)
        })
        .collect();
    c.eq("order-5 elements", fives.len(), class_size("A4"));
    c.eq("centralizers of order != 10", stats.iter().filter(|s| s.0 != ex::ORDER5_CENTRALIZER).count(), 0);
    c.eq("non-cyclic centralizers", stats.iter().filter(|s| !s.1).count(), 0);
    c.eq("commuting involutions not A1", stats.iter().map(|s| s.2).sum::<usize>(), 0);
    let off_tens = elems
        .par_iter()
        .filter(|g| g.order() == 10 && picweyl::classify(&g.pow(5)) != ClassLabel::A1)
        .count();
    c.eq("order-10 elements with fifth power not A1", off_tens, 0);
}

fn automorphism_groups(c: &mut Checks) {
    for &(text, k, order, label) in &ex::AUT_TABLE {
        let name = format!("{text} over GF(2^{k})");
        let form = tryc!(c, &name, CubicForm::parse(text, gf(k)));
        let aut = tryc!(c, &name, cubic::automorphisms(&form));
        c.eq(format!("{name} order"), aut.order(), order);
        c.eq(format!("{name} label"), aut.label.to_string(), label.to_string());
    }
    let fermat = CubicForm::fermat(gf(1));
    let aut = tryc!(c, "Fermat over GF(2)", cubic::automorphisms(&fermat));
    let oracle = cubic::gl4_f2_oracle(&fermat);
    c.eq("GL4(GF(2)) matrices scanned", cubic::aut::gl4_f2_count(), ex::GL4_F2_ORDER);
    c.holds("oracle agrees element by element", oracle == aut.elements);
}

fn galois_images(c: &mut Checks) {
    let cyc = tryc!(c, "cyclic lines", cubic::find_lines(&CubicForm::cyclic(gf(1))));
    let g = cubic::galois_image(&cyc);
    let (order, class, fixed) = ex::CYCLIC_GALOIS;
    c.eq("cyclic split degree", cyc.split_degree, ex::CYCLIC_SPLIT_DEGREE);
    c.eq("cyclic Frobenius order", g.order, order);
    c.eq("cyclic Frobenius class", g.class.to_string(), class.to_string());
    c.eq("cyclic fixed lines", g.fixed_lines, fixed);
    let fer = tryc!(c, "Fermat lines", cubic::find_lines(&CubicForm::fermat(gf(2))));
    c.eq("Fermat/GF(4) split degree", fer.split_degree, ex::FERMAT_GF4_SPLIT_DEGREE);
    c.eq("Fermat/GF(4) Frobenius order", cubic::galois_image(&fer).order, 1);
}

fn orbit_uniqueness(c: &mut Checks) {
    let weil = tryc!(c, "Weil model", QuadricModel::weil(gf(1), gf(2)));
    for m in [QuadricModel::split(gf(2)), QuadricModel::split(gf(4)), weil] {
        let n = tryc!(c, m.to_string(), quadric::count_orbit_classes(&m));
        c.eq(format!("{m} orbit classes"), n, ex::ORBIT_CLASSES);
    }
}

fn blowdown_blowup(c: &mut Checks) {
    let cyc = CubicForm::cyclic(gf(1));
    let t = match construct::order5_automorphism(&cyc) {
        Ok(Some(t)) => t,
        Ok(None) => return c.holds("cyclic surface has an order-5 automorphism", false),
        Err(e) => return c.fail("order-5 automorphism", e),
    };
    let bd = tryc!(c, "blowdown", construct::blowdown_data(&cyc, &t));
    c.holds("blowdown model is Weil", matches!(bd.marked.model, QuadricModel::Weil { .. }));
    let gp = tryc!(c, "general position", quadric::is_general_position(&bd.marked.model, &bd.marked.pts));
    c.holds("points in general position", gp);
    let back = tryc!(c, "blowup", construct::blowup_to_cubic(&bd.marked));
    let iso = tryc!(c, "isomorphism", cubic::is_isomorphic(&back, &cyc));
    c.holds("blowup isomorphic to the cyclic surface", iso.is_some());

    let m = QuadricModel::split(gf(4));
    let (_, orbit) = tryc!(c, "GF(16) orbit", quadric::standard_orbit(&m));
    let mq = tryc!(c, "GF(16) marked quadric", MarkedQuadric::new(m, orbit));
    let s = tryc!(c, "GF(16) blowup", construct::blowup_to_cubic(&mq));
    let iso = tryc!(c, "GF(16) isomorphism", cubic::is_isomorphic(&s, &CubicForm::fermat(gf(4))));
    c.holds("GF(16) blowup isomorphic to Fermat", iso.is_some());
}

/// Matrix over `spec` from generator exponents.
pub fn omega_matrix(spec: FieldSpec, rows: &[[Option<u8>; 4]; 4]) -> GfMatrix {
    let data = rows
        .iter()
        .flatten()
        .map(|e| e.map_or(spec.zero(), |j| spec.gen_pow(j as i64)))
        .collect();
    GfMatrix::from_vec(4, 4, data)
}

fn collineation(c: &mut Checks) {
    let s = gf(2);
    let (cyc, fer) = (CubicForm::cyclic(s), CubicForm::fermat(s));
    let stated = omega_matrix(s, &ex::STATED_COLLINEATION);
    let stated_ok = cyc.maps_onto(&stated, &fer) || fer.maps_onto(&stated, &cyc);
    c.holds("stated matrix carries cyclic onto Fermat", stated_ok);
    let working = omega_matrix(s, &ex::WORKING_COLLINEATION);
    c.holds("Fermat(Tx) is the cyclic form for X=x+ωt, Y=ωx+t, Z=y+ωz, W=ωy+z", cyc.maps_onto(&working, &fer));
}

fn non_isomorphism(c: &mut Checks) {
    let cyc = tryc!(c, "cyclic lines", cubic::find_lines(&CubicForm::cyclic(gf(1))));
    let fer = tryc!(c, "Fermat lines", cubic::find_lines(&CubicForm::fermat(gf(1))));
    c.eq("graph isomorphisms tried", cubic::aut::graph_isomorphism_count(&cyc.adjacency, &fer.adjacency), ex::WEYL_ORDER);
    let iso = tryc!(c, "is_isomorphic", cubic::is_isomorphic(&cyc.form, &fer.form));
    c.holds("no isomorphism over GF(2)", iso.is_none());
}

fn line_stabilizer(c: &mut Checks) {
    let fer = tryc!(c, "Fermat/GF(4)", cubic::automorphisms(&CubicForm::fermat(gf(2))));
    c.eq("|Aut(Fermat/GF(4))|", fer.order(), ex::WEYL_DERIVED_ORDER);
    let stab = fer.group.stabilizer(0);
    c.eq("line stabilizer order", stab.order(), ex::LINE_STABILIZER_ORDER);
    c.eq("line stabilizer", identify_group(&stab).to_string(), GroupLabel::Z2Pow4A5.to_string());
    let s6 = tryc!(c, "cyclic/GF(2)", cubic::automorphisms(&CubicForm::cyclic(gf(1))));
    let big = tryc!(c, "cyclic/GF(4)", cubic::automorphisms_over(&CubicForm::cyclic(gf(1)), gf(2)));
    c.eq("|S6|", s6.order(), ex::S6_ORDER);
    c.eq("|Aut(cyclic/GF(4))|", big.order(), ex::WEYL_DERIVED_ORDER);
    c.holds("S6 inside the order-25920 group", s6.group.is_subgroup_of(&big.group));
    c.holds("both order-25920 groups are W(E6)'", {
        let d = picweyl::weyl_derived().sorted_elements();
        fer.group.sorted_elements() == d && big.group.sorted_elements() == d
    });
}

fn a6_conjugacy(c: &mut Checks) {
    let w = picweyl::weyl_group();
    let d = picweyl::weyl_derived();
    // every A6 contains a 5-element, and these form one W-class, so each
    // A6 is conjugate to one containing `a`; A6 is perfect so lies in W'
    let five_classes = picweyl::class_census().iter().filter(|r| r.element_order == 5).count();
    c.eq("classes of order-5 elements", five_classes, 1);
    let Some(a) = d.element_of_order(5).cloned() else {
        return c.holds("W' has an order-5 element", false);
    };
    let subs: Vec<_> = d
        .two_generated_subgroups(&a, ex::A6_ORDER, |_| true)
        .into_iter()
        .filter(|h| identify_group(h) == GroupLabel::A6)
        .collect();
    c.holds("A6 subgroups found", !subs.is_empty());
    let conj = tryc!(c, "conjugacy", w.all_conjugate(&subs));
    c.holds("all A6 subgroups conjugate in W(E6)", conj.is_some());
}
