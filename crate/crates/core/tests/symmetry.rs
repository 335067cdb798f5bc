mod common;

use bjsym::linalg::{add, scale};
use bjsym::orthogonality::{eps_b_star, is_bj_orthogonal};
use bjsym::sampling::SampleConfig;
use bjsym::symmetry::{
    check_rx_implication, global_c_symmetry, in_script_a, left_symmetry_constant,
    local_property_p, property_p, property_p1, r_constant, right_symmetry_constant,
    verify_p1_witness, Method,
};
use bjsym::{NormedSpace, Polytope, Rational};
use common::*;
use num_traits::{One, Zero};

const PLANAR_EXACT: [&str; 4] = ["linf2", "l1-2", "decagon", "fig9-hexagon"];

fn cfg() -> SampleConfig {
    SampleConfig::default()
}

fn normalized(p: &Polytope<Rational>, v: &[Rational]) -> Vec<Rational> {
    let n = p.norm(v);
    v.iter().map(|c| c / &n).collect()
}

/// Points of the planar orthogonal cone of `x`, on a rational grid between
/// the kernels of the extreme supporting functionals, both signs.
fn orthogonal_grid(p: &Polytope<Rational>, x: &[Rational]) -> Vec<Vec<Rational>> {
    let gens = p.support_generators(x);
    let kernels: Vec<Vec<Rational>> = gens.iter().map(|g| vec![-g[1].clone(), g[0].clone()]).collect();
    let (k1, k2) = (&kernels[0], &kernels[kernels.len() - 1]);
    let mut out = Vec::new();
    for k in 0..=64 {
        let t = q(k, 64);
        let d = add(&scale(k1, &t), &scale(k2, &(Rational::one() - &t)));
        if d.iter().all(|c| c.is_zero()) {
            continue;
        }
        let y = normalized(p, &d);
        out.push(scale(&y, &q(-1, 1)));
        out.push(y);
    }
    out
}

#[test]
fn failure_witnesses_re_verify() {
    for name in ["linf2", "linf3", "l1-2", "fig9-hexagon", "fig6-prism"] {
        let p = exact(name);
        let v = property_p(p.as_ref(), &cfg()).unwrap();
        if let Some(w) = &v.witness {
            assert!(!v.holds);
            assert!(is_bj_orthogonal(p.as_ref(), &w.x, &w.y).unwrap().holds, "{name}");
            assert!(in_script_a(p.as_ref(), &w.x, &w.y).unwrap(), "{name}");
            assert_eq!(p.norm(&w.y), Rational::one());
        }
        if p.dim() <= 3 {
            let v1 = property_p1(p.as_ref()).unwrap();
            if let Some(w) = &v1.witness {
                verify_p1_witness(p.as_ref(), w).unwrap();
                let mid = scale(&add(&w.x, &w.y), &q(1, 2));
                assert_eq!(p.norm(&mid), Rational::one(), "{name}");
                assert!(p.vertex_index(&w.x).is_none() || p.vertex_index(&w.y).is_none());
            }
        }
    }
}

#[test]
fn local_property_p_matches_left_defect_on_the_orthogonal_arc() {
    for name in PLANAR_EXACT {
        let p = exact(name);
        for x in p.vertices() {
            let local = local_property_p(p.as_ref(), x, &cfg()).unwrap().holds;
            let worst = orthogonal_grid(&p, x)
                .iter()
                .map(|y| eps_b_star(p.as_ref(), y, x).unwrap().value)
                .max()
                .unwrap();
            assert_eq!(local, worst < Rational::one(), "{name} at {x:?}");
            let left = left_symmetry_constant(p.as_ref(), x, &cfg()).unwrap();
            assert_eq!(left.value, worst, "{name} at {x:?}");
        }
    }
}

#[test]
fn vertex_property_propagates_to_faces() {
    let mut r = rng(21);
    for name in ["decagon"] {
        let p = exact(name);
        assert!(property_p(p.as_ref(), &cfg()).unwrap().holds);
        let mut checked = 0;
        for _ in 0..200 {
            let x = unit_rational(p.as_ref(), &mut r);
            assert!(local_property_p(p.as_ref(), &x, &cfg()).unwrap().holds, "{name} at {x:?}");
            checked += 1;
        }
        for face in p.faces().iter().filter(|f| f.dim >= 1) {
            let c = p.face_centroid(face);
            assert!(local_property_p(p.as_ref(), &c, &cfg()).unwrap().holds);
        }
        assert_eq!(checked, 200);
    }
    for name in ["regular-polygon-6", "regular-polygon-10", "regular-polygon-16"] {
        let s = float(name);
        let p = s.polytope().unwrap();
        assert!(property_p(s.as_ref(), &cfg()).unwrap().holds, "{name}");
        let n = p.vertices().len();
        for k in 0..200 {
            let (a, b) = (&p.vertices()[k % n], &p.vertices()[(k + 1) % n]);
            let t = (k as f64 + 0.5) / 201.0;
            let x = add(&scale(a, &t), &scale(b, &(1.0 - t)));
            assert!(local_property_p(s.as_ref(), &x, &cfg()).unwrap().holds, "{name}");
        }
    }
}

#[test]
fn planar_polygon_bits_agree() {
    for name in PLANAR_EXACT {
        let p = exact(name);
        let a = property_p1(p.as_ref()).unwrap().holds;
        let b = property_p(p.as_ref(), &cfg()).unwrap().holds;
        let c = global_c_symmetry(p.as_ref(), &cfg()).unwrap().symmetric;
        assert_eq!((a, b), (b, c), "{name}");
    }
    for name in POLYGONS {
        let s = float(name);
        let p = s.polytope().unwrap();
        let a = property_p1(p).unwrap().holds;
        let b = property_p(s.as_ref(), &cfg()).unwrap().holds;
        let c = global_c_symmetry(s.as_ref(), &cfg()).unwrap().symmetric;
        assert_eq!((a, b), (b, c), "{name}");
        assert_eq!(b, name != "regular-polygon-4", "{name}");
    }
}

#[test]
fn prism_reports_p1_failure() {
    let p = exact("fig6-prism");
    let v1 = property_p1(p.as_ref()).unwrap();
    assert!(!v1.holds);
    // (P1) implies (P). With (P1) failing the implication is vacuous and
    // the (P) bit is only reported.
    let vp = property_p(p.as_ref(), &cfg()).unwrap();
    assert!(!v1.holds || vp.holds);
    println!("fig6-prism: (P1) = {}, (P) = {}", v1.holds, vp.holds);
}

#[test]
fn small_r_forces_local_p_at_vertices() {
    for name in PLANAR_EXACT.iter().chain(["linf3", "fig6-prism"].iter()) {
        let p = exact(name);
        let r = r_constant(p.as_ref()).unwrap();
        if r.value <= Rational::one() {
            for x in p.vertices() {
                assert!(local_property_p(p.as_ref(), x, &cfg()).unwrap().holds, "{name}");
            }
        }
        let rep = check_rx_implication(p.as_ref(), &cfg()).unwrap();
        assert!(rep.implication_holds, "{name}");
    }
    for name in POLYGONS {
        let s = float(name);
        let rep = check_rx_implication(s.as_ref(), &cfg()).unwrap();
        assert!(rep.implication_holds, "{name}");
    }
}

#[test]
fn property_p_iff_right_constants_below_one() {
    let mut r = rng(22);
    for name in PLANAR_EXACT.iter().chain(["linf3"].iter()) {
        let p = exact(name);
        let mut ys: Vec<Vec<Rational>> = p.vertices().to_vec();
        ys.extend(p.faces().iter().filter(|f| f.dim >= 1).map(|f| p.face_centroid(f)));
        while ys.len() < 50 {
            ys.push(unit_rational(p.as_ref(), &mut r));
        }
        ys.truncate(50.max(p.vertices().len()));
        let all_below = ys
            .iter()
            .all(|y| right_symmetry_constant(p.as_ref(), y, &cfg()).unwrap().value < Rational::one());
        let holds = property_p(p.as_ref(), &cfg()).unwrap().holds;
        assert_eq!(holds, all_below, "{name}");
    }
}

#[test]
fn polygon_segments_shrink_with_more_sides() {
    let values: Vec<f64> = POLYGONS
        .iter()
        .map(|n| r_constant(float(n).as_ref()).unwrap().value)
        .collect();
    assert!((values[0] - 2.0).abs() < 1e-9);
    for w in values[1..].windows(2) {
        assert!(w[1] <= w[0] + 1e-9);
    }
    assert!(values[1..].iter().all(|v| *v <= 1.0 + 1e-9));
}

#[test]
fn point_constants_on_the_cube() {
    let p = exact("linf3");
    let x = qv(&[(1, 1), (1, 2), (3, 10)]);
    assert_eq!(left_symmetry_constant(p.as_ref(), &x, &cfg()).unwrap().value, q(1, 2));
    assert_eq!(right_symmetry_constant(p.as_ref(), &x, &cfg()).unwrap().value, q(1, 1));
    let c = ints(&[1, 1, 1]);
    assert_eq!(left_symmetry_constant(p.as_ref(), &c, &cfg()).unwrap().value, q(1, 1));
    assert_eq!(right_symmetry_constant(p.as_ref(), &c, &cfg()).unwrap().value, q(0, 1));
}

#[test]
fn smooth_spaces_are_symmetric_and_segment_free() {
    let s = float("l2-3");
    assert!(property_p(s.as_ref(), &cfg()).unwrap().holds);
    assert_eq!(r_constant(s.as_ref()).unwrap().method, Method::Smooth);
    let e = float("l2-2");
    let c = global_c_symmetry(e.as_ref(), &SampleConfig { samples: 256, ..cfg() }).unwrap();
    assert!(c.value < 1e-6, "{}", c.value);
    assert!(r_constant(float("l2linf").as_ref()).is_err());
}

#[test]
fn sampled_left_constants_match_exact_ones() {
    // Running the sampler on the float copy of an exact space must not
    // exceed the exact value and should come close to it.
    for name in PLANAR_EXACT {
        let p = exact(name);
        let fp = p.to_float();
        for x in p.vertices().iter().take(4) {
            let exact_v = left_symmetry_constant(p.as_ref(), x, &cfg()).unwrap().value;
            let xf = bjsym::linalg::to_f64(x);
            let (sampled, _) = bjsym::sampling::left_sup(fp.float_view().as_ref(), &xf, &cfg());
            let e = num_traits::ToPrimitive::to_f64(&exact_v).unwrap();
            assert!(sampled <= e + 1e-9 && sampled >= e - 1e-6, "{name}: {sampled} vs {e}");
        }
    }
}
