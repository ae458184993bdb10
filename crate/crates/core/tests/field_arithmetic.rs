use cubic27::gf2k::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn gf(k: u32) -> FieldSpec {
    FieldSpec::gf(k)
}

/// `v^j` in GF(16) computed by repeated reference multiplication by the
/// class of x, independent of the tables.
fn v_pow(j: u32) -> FieldElem {
    let mut x = 1u32;
    for _ in 0..j {
        x = clmul_reduce(x, 0b10, 0b10011);
    }
    gf(4).elem(x).unwrap()
}

#[test]
fn canonical_moduli() {
    let expected = [0b10, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011];
    for (i, &m) in expected.iter().enumerate() {
        assert_eq!(gf(i as u32 + 1).modulus(), m);
    }
    for k in 1..=12 {
        let m = gf(k).modulus();
        assert!(is_irreducible(m));
        assert!(((1 << k)..m).all(|p| !is_irreducible(p)));
    }
}

#[test]
fn invalid_degrees_rejected() {
    assert_eq!(FieldSpec::new(0), Err(GfError::InvalidDegree(0)));
    assert_eq!(FieldSpec::new(13), Err(GfError::InvalidDegree(13)));
}

#[test]
fn small_products() {
    let u = gf(2).elem(0b10).unwrap();
    assert_eq!(u * u, u + gf(2).one());
    assert_eq!(v_pow(3) * v_pow(12), gf(4).one());
    for a in gf(4).elements() {
        assert_eq!(gf(4).one() * a, a);
        assert_eq!(FieldElem::one() * a, a);
    }
}

#[test]
fn inverses() {
    let u = gf(2).elem(0b10).unwrap();
    assert_eq!(u.inv(), u + FieldElem::one());
    assert_eq!(gf(3).one().inv(), FieldElem::one());
    let v = gf(4).elem(0b10).unwrap();
    assert_eq!(v.inv(), gf(4).elem(0b1001).unwrap());
    assert_eq!(gf(4).zero().try_inv(), Err(GfError::ZeroInverse));
}

#[test]
fn table_multiply_matches_reference() {
    for k in [1, 2, 3, 4, 5, 6, 8] {
        let s = gf(k);
        for a in s.elements() {
            for b in s.elements() {
                let r = clmul_reduce(a.bits() as u32, b.bits() as u32, s.modulus());
                assert_eq!((a * b).bits() as u32, r);
            }
        }
    }
}

#[test]
fn generator_is_smallest_primitive() {
    for k in 1..=8 {
        let s = gf(k);
        let g = s.generator();
        assert_eq!(g.order() as usize, s.size() - 1);
        assert!(s
            .nonzero()
            .take_while(|x| x.bits() < g.bits())
            .all(|x| (x.order() as usize) < s.size() - 1));
    }
}

#[test]
fn frobenius_examples() {
    let u = gf(2).elem(0b10).unwrap();
    assert_eq!(u.frobenius(0), u);
    assert_eq!(u.frobenius(1), u + FieldElem::one());
    assert_eq!(v_pow(3).frobenius(2), v_pow(12));
}

#[test]
fn frobenius_full_cycle_is_identity() {
    for k in 1..=12 {
        let s = gf(k);
        for a in s.elements().step_by(7) {
            assert_eq!(a.frobenius(k), a);
        }
    }
}

#[test]
fn fifth_roots_exist_iff_four_divides_k() {
    for k in 1..=12 {
        assert_eq!(!gf(k).fifth_roots().is_empty(), k % 4 == 0, "k = {k}");
    }
    let expected: Vec<_> = {
        let mut v = vec![v_pow(3), v_pow(6), v_pow(9), v_pow(12)];
        v.sort();
        v
    };
    assert_eq!(gf(4).fifth_roots(), expected);
    assert_eq!(gf(4).fifth_root().unwrap(), v_pow(3));
    assert!(gf(1).fifth_roots().is_empty());
    assert!(gf(2).fifth_roots().is_empty());
}

#[test]
fn quadratic_pair_in_gf16() {
    let (a, b) = gf(4).quadratic_pair().unwrap();
    assert_eq!(a, v_pow(10));
    assert_eq!(b, v_pow(5));
    assert_eq!(a + b, FieldElem::one());
    assert_eq!(a * b, FieldElem::one());
    for c in [a, b] {
        assert!((c * c + c + FieldElem::one()).is_zero());
        assert!(gf(2).contains(c));
    }
    assert_eq!(gf(2).quadratic_pair(), Err(GfError::NoFifthRoot(2)));
}

#[test]
fn quadratic_pair_swapped_by_frobenius_over_odd_subfield() {
    // In GF(2^m) with m = 2·odd, x -> x^(2^(m/2)) restricts to the
    // nontrivial automorphism of GF(4).
    let (a, b) = gf(4).quadratic_pair().unwrap();
    assert_eq!(a.frobenius(1), b);
    assert_eq!(b.frobenius(1), a);
    // x^4 fixes GF(4) pointwise
    assert_eq!(a.frobenius(2), a);
    let s12 = gf(12);
    let (c, d) = s12.quadratic_pair().unwrap();
    assert_eq!(c.frobenius(1), d);
    assert_eq!(c.frobenius(3), d);
}

#[test]
fn embedding_examples() {
    assert_eq!(gf(2).embed(gf(1), FieldElem::one()).unwrap(), FieldElem::one());
    let u = gf(2).elem(0b10).unwrap();
    assert_eq!(gf(4).embed(gf(2), u).unwrap(), v_pow(5));
    assert_eq!(gf(4).embed(gf(2), gf(2).zero()).unwrap(), gf(4).zero());
    assert_eq!(
        gf(3).embed(gf(2), u),
        Err(GfError::NonDividingDegree { sub: 2, sup: 3 })
    );
}

#[test]
fn embeddings_are_homomorphisms() {
    for (sub, sup) in [(1, 4), (2, 4), (2, 6), (3, 6), (4, 8), (2, 12), (6, 12)] {
        let (s, t) = (gf(sub), gf(sup));
        let g = s.generator();
        let eg = t.embed(s, g).unwrap();
        for j in 0..s.size() as u64 {
            assert_eq!(t.embed(s, g.pow(j)).unwrap(), eg.pow(j));
        }
        for a in s.elements() {
            for b in s.elements().step_by(3) {
                let lhs = t.embed(s, a + b).unwrap();
                assert_eq!(lhs, t.embed(s, a).unwrap() + t.embed(s, b).unwrap());
            }
            assert_eq!(t.restrict(s, t.embed(s, a).unwrap()).unwrap(), a);
        }
    }
}

#[test]
fn literals_round_trip() {
    let s = gf(4);
    for a in s.elements() {
        assert_eq!(s.parse_elem(&a.literal()).unwrap(), a);
    }
    assert_eq!(s.parse_elem("g").unwrap(), s.generator());
    assert_eq!(s.parse_elem("g^15").unwrap(), s.one());
    assert!(s.parse_elem("h^2").is_err());
}

#[test]
fn field_spec_strings() {
    assert_eq!("GF(2^4)".parse::<FieldSpec>().unwrap(), gf(4));
    assert_eq!(" GF( 2^1 ) ".parse::<FieldSpec>().unwrap(), gf(1));
    assert!("GF(3^2)".parse::<FieldSpec>().is_err());
    assert_eq!(
        "GF(2^13)".parse::<FieldSpec>(),
        Err(GfError::InvalidDegree(13))
    );
    assert_eq!(gf(6).to_string(), "GF(2^6)");
}

#[test]
fn mismatched_fields() {
    let a = gf(2).generator();
    let b = gf(3).generator();
    assert_eq!(
        a.try_mul(b),
        Err(GfError::MismatchedFields { left: 2, right: 3 })
    );
    assert!(a.try_add(FieldElem::one()).is_ok());
}

#[test]
#[should_panic(expected = "cannot be combined")]
fn mismatched_operator_panics() {
    let _ = gf(2).generator() * gf(3).generator();
}

fn arb_triple() -> impl Strategy<Value = (FieldElem, FieldElem, FieldElem)> {
    (1u32..=12).prop_flat_map(|k| {
        let s = gf(k);
        let n = s.size() as u32;
        (0..n, 0..n, 0..n).prop_map(move |(a, b, c)| {
            (s.elem(a).unwrap(), s.elem(b).unwrap(), s.elem(c).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in arb_triple()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert!((a + a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv(), FieldElem::one());
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative((a, b, _c) in arb_triple(), j in 0u32..12) {
        prop_assert_eq!((a + b).frobenius(j), a.frobenius(j) + b.frobenius(j));
        prop_assert_eq!((a * b).frobenius(j), a.frobenius(j) * b.frobenius(j));
        prop_assert_eq!(a.frobenius(j), a.pow(1u64 << j));
    }
}
