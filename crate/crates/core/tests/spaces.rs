mod common;

use std::collections::BTreeSet;

use bjsym::linalg::{add, dot, neg, scale};
use bjsym::spaces::file::SpaceSpec;
use bjsym::spaces::{dual_norm_eval, norm_eval, support_set};
use bjsym::{NormedSpace, Polytope, Rational, Scalar};
use common::*;
use num_traits::{One, Signed};
use rand::Rng;
use proptest::prelude::*;

#[test]
fn facet_vertex_incidence_is_exact() {
    for name in EXACT_SPACES.iter().chain(["fig6-prism"].iter()) {
        let p = exact(name);
        for (fi, f) in p.facets().iter().enumerate() {
            for (vi, v) in p.vertices().iter().enumerate() {
                let val = dot(&f.functional, v);
                if f.vertices.contains(&vi) {
                    assert!(val.is_one(), "{name}: facet {fi} vertex {vi}");
                } else {
                    assert!(val < Rational::one(), "{name}: facet {fi} vertex {vi}");
                }
            }
        }
    }
}

#[test]
fn homogeneity_and_symmetry() {
    let mut r = rng(1);
    for name in EXACT_SPACES {
        let p = exact(name);
        for _ in 0..100 {
            let v = rational_vec(&mut r, p.dim());
            let a = q([-9, -4, -1, 1, 3, 8][r.gen_range(0..6)], 7);
            let n = norm_eval(p.as_ref(), &v).unwrap();
            assert_eq!(norm_eval(p.as_ref(), &scale(&v, &a)).unwrap(), a.abs() * &n);
            assert_eq!(norm_eval(p.as_ref(), &neg(&v)).unwrap(), n);
        }
    }
}

#[test]
fn triangle_inequality_on_random_pairs() {
    let mut r = rng(2);
    for name in EXACT_SPACES.iter().chain(["fig6-prism"].iter()) {
        let p = exact(name);
        for _ in 0..1000 {
            let u = rational_vec(&mut r, p.dim());
            let v = rational_vec(&mut r, p.dim());
            assert!(p.norm(&add(&u, &v)) <= p.norm(&u) + p.norm(&v), "{name}");
        }
    }
    for name in ["l2-2", "l2-3", "l2linf", "regular-polygon-6", "regular-polygon-16"] {
        let s = float(name);
        for _ in 0..1000 {
            let u = float_vec(&mut r, s.dim());
            let v = float_vec(&mut r, s.dim());
            assert!(s.norm(&add(&u, &v)) <= s.norm(&u) + s.norm(&v) + 1e-12, "{name}");
        }
    }
}

#[test]
fn support_generators_are_norming() {
    let mut r = rng(3);
    for name in EXACT_SPACES.iter().chain(["fig6-prism"].iter()) {
        let p = exact(name);
        let mut points: Vec<Vec<Rational>> = p.vertices().to_vec();
        points.extend(p.faces().iter().map(|f| p.face_centroid(f)));
        points.extend((0..50).map(|_| rational_vec(&mut r, p.dim())));
        for x in points {
            let nx = p.norm(&x);
            let gens = support_set(p.as_ref(), &x).unwrap();
            assert!(!gens.is_empty());
            for g in gens {
                assert!(dual_norm_eval(p.as_ref(), &g).unwrap().is_one(), "{name}");
                assert_eq!(dot(&g, &x), nx, "{name}");
            }
        }
    }
}

#[test]
fn float_support_generators_are_norming() {
    let mut r = rng(4);
    for name in ["l2-2", "l2-3", "l2linf", "regular-polygon-8"] {
        let s = float(name);
        for _ in 0..200 {
            let x = float_vec(&mut r, s.dim());
            for g in s.support_generators(&x) {
                assert!((s.dual_norm(&g) - 1.0).abs() < 1e-9, "{name}");
                assert!((dot(&g, &x) - s.norm(&x)).abs() < 1e-9, "{name}");
            }
        }
    }
}

#[test]
fn support_patterns_are_bounded_by_faces() {
    let mut r = rng(5);
    for name in EXACT_SPACES.iter().chain(["fig6-prism"].iter()) {
        let p = exact(name);
        let mut patterns = BTreeSet::new();
        for _ in 0..100 {
            let x = rational_vec(&mut r, p.dim());
            let mut g: Vec<String> = support_set(p.as_ref(), &x)
                .unwrap()
                .iter()
                .map(|f| format!("{f:?}"))
                .collect();
            g.sort();
            patterns.insert(g);
        }
        assert!(patterns.len() <= p.faces().len(), "{name}");
    }
}

#[test]
fn vertex_and_facet_descriptions_agree() {
    for name in EXACT_SPACES.iter().chain(["fig6-prism"].iter()) {
        let p = exact(name);
        let functionals: Vec<Vec<Rational>> = p.facets().iter().map(|f| f.functional.clone()).collect();
        let dual = Polytope::from_facets(functionals).unwrap();
        let mut a = p.vertices().to_vec();
        let mut b = dual.vertices().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn space_files_round_trip() {
    let spec = SpaceSpec::from_json(
        r#"{"kind":"polyhedral","vertices":[["2","1/2"],["0","2"],["-2","1/2"],["-2","-1/2"],["0","-2"],["2","-1/2"]]}"#,
    )
    .unwrap();
    let built = spec.build().unwrap();
    let p = built.exact().unwrap();
    assert_eq!(p.facets().len(), exact("fig9-hexagon").facets().len());
    assert!(SpaceSpec::from_json(r#"{"kind":"polyhedral","vertices":[["1","x"]]}"#)
        .and_then(|s| s.build())
        .is_err());
}

#[test]
fn errors_name_the_offending_field() {
    let p = exact("linf2");
    let e = norm_eval(p.as_ref(), &ints(&[1, 2, 3])).unwrap_err();
    assert_eq!(e.to_string(), "dimension mismatch in v: expected 2, got 3");
    assert!(Polytope::<Rational>::from_vertices(vec![ints(&[1, 0]), ints(&[0, 1])]).is_err());
    assert!(Rational::parse_scalar("1/0").is_err());
}

proptest! {
    #[test]
    fn decagon_norm_is_homogeneous(a in -20i64..20, b in 1i64..9, x in -30i64..30, y in -30i64..30) {
        prop_assume!(x != 0 || y != 0);
        let p = exact("decagon");
        let v = ints(&[x, y]);
        let k = q(a, b);
        prop_assert_eq!(p.norm(&scale(&v, &k)), k.abs() * p.norm(&v));
    }

    #[test]
    fn polygon_norm_is_subadditive(u in prop::array::uniform2(-5.0f64..5.0), v in prop::array::uniform2(-5.0f64..5.0)) {
        let s = float("regular-polygon-10");
        prop_assert!(s.norm(&add(&u, &v)) <= s.norm(&u) + s.norm(&v) + 1e-12);
    }
}
