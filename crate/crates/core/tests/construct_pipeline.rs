use cubic27::construct::{self, ConstructError, MarkedQuadric};
use cubic27::cubic::{self, lines::line_on_surface, CubicForm};
use cubic27::quadric::{self, QuadricModel};
use cubic27::{FieldSpec, GfLine, GfProjectivity};

fn gf(k: u32) -> FieldSpec {
    FieldSpec::gf(k)
}

fn check_exceptional_lines(mq: &MarkedQuadric) {
    let b = construct::blowup(mq).unwrap();
    let lines = construct::exceptional_lines(mq, &b).unwrap();
    assert_eq!(lines.len(), 5);
    for (i, l) in lines.iter().enumerate() {
        assert!(line_on_surface(&b.cubic_work, l));
        for m in &lines[i + 1..] {
            assert!(!l.meets(m), "exceptional lines are pairwise skew");
        }
    }
}

#[test]
fn blowup_of_split_orbit_over_gf16_is_fermat() {
    let m = QuadricModel::split(gf(4));
    let (_, orbit) = quadric::standard_orbit(&m).unwrap();
    let mq = MarkedQuadric::new(m, orbit).unwrap();
    let c = construct::blowup_to_cubic(&mq).unwrap();
    assert!(c.is_smooth());
    check_exceptional_lines(&mq);
    let fermat = CubicForm::fermat(gf(4));
    let w = cubic::is_isomorphic(&c, &fermat).unwrap().expect("isomorphic to Fermat");
    assert!(c.maps_onto(w.matrix(), &fermat));
}

#[test]
fn blowup_of_weil_orbit_is_the_cyclic_surface() {
    let m = QuadricModel::weil(gf(1), gf(2)).unwrap();
    let (_, orbit) = quadric::standard_orbit(&m).unwrap();
    let mq = MarkedQuadric::new(m, orbit).unwrap();
    let c = construct::blowup_to_cubic(&mq).unwrap();
    assert_eq!(c.spec(), gf(1));
    assert!(c.is_smooth());
    check_exceptional_lines(&mq);
    assert!(cubic::is_isomorphic(&c, &CubicForm::cyclic(gf(1))).unwrap().is_some());
}

#[test]
fn blowup_rejects_special_points() {
    let m = QuadricModel::split(gf(4));
    let g = quadric::order5_reps(&m).unwrap().remove(2);
    let pts = quadric::points(&m).unwrap();
    let o = pts.iter().find_map(|p| quadric::orbit_of(&m, &g, p).ok()).unwrap();
    assert_eq!(MarkedQuadric::new(m, o), Err(ConstructError::NotGeneralPosition));
}

#[test]
fn cyclic_blowdown_is_weil() {
    let c = CubicForm::cyclic(gf(1));
    let t = construct::order5_automorphism(&c).unwrap().unwrap();
    let bd = construct::blowdown_data(&c, &t).unwrap();
    assert!(matches!(bd.marked.model, QuadricModel::Weil { .. }));
    assert!(quadric::is_general_position(&bd.marked.model, &bd.marked.pts).unwrap());
    // the induced action permutes the points along the orbit
    let m = &bd.marked.model;
    for i in 0..5 {
        assert_eq!(quadric::act(m, &bd.action, &bd.marked.pts[i]).unwrap(), bd.marked.pts[(i + 1) % 5]);
    }
    let w = construct::roundtrip(&c, &t).unwrap().expect("round trip");
    let back = construct::blowup_to_cubic(&bd.marked).unwrap();
    assert!(back.maps_onto(w.matrix(), &c));
}

#[test]
fn fermat_blowdown_is_split() {
    let f = CubicForm::fermat(gf(2));
    let t = construct::order5_automorphism(&f).unwrap().unwrap();
    let bd = construct::blowdown_data(&f, &t).unwrap();
    assert_eq!(bd.marked.model, QuadricModel::split(gf(2)));
    let m = &bd.marked.model;
    for i in 0..5 {
        assert_eq!(quadric::act(m, &bd.action, &bd.marked.pts[i]).unwrap(), bd.marked.pts[(i + 1) % 5]);
    }
    assert!(construct::roundtrip(&f, &t).unwrap().is_some());
}

#[test]
fn fermat_over_gf16_round_trip() {
    let f = CubicForm::fermat(gf(4));
    let t = construct::order5_automorphism(&f).unwrap().unwrap();
    assert!(construct::roundtrip(&f, &t).unwrap().is_some());
}

#[test]
fn blowdown_needs_order_five() {
    let f = CubicForm::fermat(gf(2));
    let a = cubic::automorphisms(&f).unwrap();
    let i = a.perms.iter().position(|p| p.order() == 2).unwrap();
    assert_eq!(
        construct::blowdown_data(&f, &a.elements[i]).unwrap_err(),
        ConstructError::NoOrderFiveAction
    );
    assert_eq!(
        construct::blowdown_data(&f, &GfProjectivity::identity(4)).unwrap_err(),
        ConstructError::NoOrderFiveAction
    );
}

#[test]
fn conic_fibers_pair_up_neighbours() {
    let f = CubicForm::fermat(gf(2));
    let sl = cubic::find_lines(&f).unwrap();
    for (i, l) in sl.lines.iter().enumerate() {
        let pairs = construct::conic_fibers(&sl, l).unwrap();
        assert_eq!(pairs.len(), 5);
        let mut seen: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort();
        let nbrs: Vec<usize> = (0..27).filter(|&m| sl.meets(i, m)).collect();
        assert_eq!(seen, nbrs);
    }
    let s = gf(2);
    let off = GfLine::from_coords(vec![s.one(), s.zero(), s.zero(), s.zero(), s.zero(), s.zero()]).unwrap();
    assert_eq!(construct::conic_fibers(&sl, &off), Err(ConstructError::LineNotOnSurface));
}
