//! Polyhedral normed spaces: the unit ball is an origin-symmetric polytope.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::scalar::{Scalar, DEFAULT_TOL};

use super::{NormedSpace, PointClass, PointPosition};

/// A facet of the unit sphere. `functional` equals 1 exactly on the facet.
#[derive(Debug, Clone, PartialEq)]
pub struct Facet<S> {
    pub functional: Vec<S>,
    /// Sorted indices of the incident vertices.
    pub vertices: Vec<usize>,
}

/// A proper face of the unit ball, described combinatorially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Sorted indices of the facets containing this face.
    pub facets: Vec<usize>,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct Polytope<S> {
    dim: usize,
    vertices: Vec<Vec<S>>,
    facets: Vec<Facet<S>>,
    faces: Vec<Face>,
    tol: f64,
    facets_f64: Vec<Vec<f64>>,
}

fn fmt_point<S: Scalar>(p: &[S]) -> String {
    let mut s = String::from("(");
    for (i, x) in p.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{}", x.to_report());
    }
    s.push(')');
    s
}

fn check_dims<S>(points: &[Vec<S>], what: &str) -> Result<usize> {
    let d = points
        .first()
        .map(|p| p.len())
        .ok_or_else(|| Error::Degenerate(format!("no {what} given")))?;
    for p in points {
        if p.len() != d {
            return Err(Error::dim(what, d, p.len()));
        }
    }
    Ok(d)
}

fn dedupe<S: Scalar>(points: Vec<Vec<S>>, tol: f64) -> Vec<Vec<S>> {
    let mut out: Vec<Vec<S>> = Vec::new();
    for p in points {
        if !out.iter().any(|q| linalg::approx_eq(q, &p, tol)) {
            out.push(p);
        }
    }
    out
}

fn check_symmetric<S: Scalar>(points: &[Vec<S>], tol: f64) -> Result<()> {
    for p in points {
        let m = linalg::neg(p);
        if !points.iter().any(|q| linalg::approx_eq(q, &m, tol)) {
            return Err(Error::NotSymmetric(fmt_point(p)));
        }
    }
    Ok(())
}

/// Functionals `f` with `f·p <= 1` on all points whose equality set spans a
/// hyperplane. For a vertex list these are the facet functionals; applied to
/// facet functionals they are the vertices (polarity).
fn supporting_hyperplanes<S: Scalar>(points: &[Vec<S>], d: usize, tol: f64) -> Vec<Vec<S>> {
    let one = S::one();
    let rhs = vec![one.clone(); d];
    let mut found: Vec<Vec<S>> = Vec::new();
    for combo in (0..points.len()).combinations(d) {
        let a: Vec<Vec<S>> = combo.iter().map(|&i| points[i].clone()).collect();
        let Some(f) = linalg::solve(&a, &rhs, tol) else {
            continue;
        };
        if found.iter().any(|g| linalg::approx_eq(g, &f, tol)) {
            continue;
        }
        let mut incident = Vec::new();
        let mut valid = true;
        for p in points {
            match (dot(&f, p) - one.clone()).sign_tol(tol) {
                Ordering::Greater => {
                    valid = false;
                    break;
                }
                Ordering::Equal => incident.push(p.clone()),
                Ordering::Less => {}
            }
        }
        if valid && linalg::rank(&incident, tol) == d {
            found.push(f);
        }
    }
    found
}

/// Counter-clockwise order starting from angle 0.
fn angle_cmp<S: Scalar>(p: &[S], q: &[S]) -> Ordering {
    let half = |v: &[S]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(p).cmp(&half(q)).then_with(|| {
        let cross = p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone();
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

impl<S: Scalar> Polytope<S> {
    /// Builds the space whose unit ball is the convex hull of `points`
    /// (dimensions 2 and 3). Non-extreme input points are discarded.
    pub fn from_vertices(points: Vec<Vec<S>>) -> Result<Self> {
        Self::from_vertices_tol(points, if S::EXACT { 0.0 } else { DEFAULT_TOL })
    }

    pub fn from_vertices_tol(points: Vec<Vec<S>>, tol: f64) -> Result<Self> {
        let d = check_dims(&points, "vertices")?;
        if !(2..=3).contains(&d) {
            return Err(Error::UnsupportedDimension {
                dim: d,
                what: "hull construction from vertices (use facet input)".into(),
            });
        }
        let points = dedupe(points, tol);
        check_symmetric(&points, tol)?;
        if linalg::rank(&points, tol) < d {
            return Err(Error::Degenerate(
                "vertices lie in a proper subspace, so the origin is not interior".into(),
            ));
        }
        let functionals = supporting_hyperplanes(&points, d, tol);
        Self::assemble(d, points, functionals, tol)
    }

    /// Builds the space whose unit ball is `{x : f·x <= 1 for all f}` (dimensions 2–8).
    pub fn from_facets(functionals: Vec<Vec<S>>) -> Result<Self> {
        Self::from_facets_tol(functionals, if S::EXACT { 0.0 } else { DEFAULT_TOL })
    }

    pub fn from_facets_tol(functionals: Vec<Vec<S>>, tol: f64) -> Result<Self> {
        let d = check_dims(&functionals, "facet functionals")?;
        if !(2..=8).contains(&d) {
            return Err(Error::UnsupportedDimension {
                dim: d,
                what: "facet input".into(),
            });
        }
        let functionals = dedupe(functionals, tol);
        check_symmetric(&functionals, tol)?;
        if linalg::rank(&functionals, tol) < d {
            return Err(Error::Degenerate(
                "facet functionals do not span the dual space, so the ball is unbounded".into(),
            ));
        }
        let vertices = supporting_hyperplanes(&functionals, d, tol);
        Self::assemble(d, vertices, functionals, tol)
    }

    fn assemble(
        d: usize,
        points: Vec<Vec<S>>,
        functionals: Vec<Vec<S>>,
        tol: f64,
    ) -> Result<Self> {
        let one = S::one();
        let on = |f: &[S], p: &[S]| (dot(f, p) - one.clone()).sign_tol(tol) == Ordering::Equal;
        // Vertices are the points lying on `d` independent facet hyperplanes.
        let mut vertices: Vec<Vec<S>> = points
            .into_iter()
            .filter(|p| {
                let inc: Vec<Vec<S>> = functionals.iter().filter(|f| on(f, p)).cloned().collect();
                linalg::rank(&inc, tol) == d
            })
            .collect();
        // Keep only functionals that define facets of the final vertex set.
        let mut functionals: Vec<Vec<S>> = functionals
            .into_iter()
            .filter(|f| {
                let inc: Vec<Vec<S>> = vertices.iter().filter(|v| on(f, v)).cloned().collect();
                linalg::rank(&inc, tol) == d
            })
            .collect();
        if d == 2 {
            vertices.sort_by(|p, q| angle_cmp(p, q));
            let n = vertices.len();
            let mut ordered = Vec::with_capacity(n);
            for k in 0..n {
                let (a, b) = (&vertices[(k + n - 1) % n], &vertices[k]);
                let f = functionals
                    .iter()
                    .find(|f| on(f, a) && on(f, b))
                    .ok_or_else(|| Error::Degenerate("polygon edge without functional".into()))?;
                ordered.push(f.clone());
            }
            functionals = ordered;
        }
        let facets: Vec<Facet<S>> = functionals
            .into_iter()
            .map(|f| {
                let vs = (0..vertices.len()).filter(|&i| on(&f, &vertices[i])).collect();
                Facet {
                    functional: f,
                    vertices: vs,
                }
            })
            .collect();
        let faces = face_lattice(&vertices, &facets, tol);
        let facets_f64 = facets
            .iter()
            .map(|f| linalg::to_f64(&f.functional))
            .collect();
        Ok(Polytope {
            dim: d,
            vertices,
            facets,
            faces,
            tol,
            facets_f64,
        })
    }

    pub fn vertices(&self) -> &[Vec<S>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<S>] {
        &self.facets
    }

    /// All proper faces sorted by dimension, then by vertex list.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_points(&self, face: &Face) -> Vec<&[S]> {
        face.vertices
            .iter()
            .map(|&i| self.vertices[i].as_slice())
            .collect()
    }

    pub fn face_centroid(&self, face: &Face) -> Vec<S> {
        linalg::centroid(&self.face_points(face))
    }

    /// Generators of `J` on the relative interior of `face`.
    pub fn face_functionals(&self, face: &Face) -> Vec<Vec<S>> {
        face.facets
            .iter()
            .map(|&i| self.facets[i].functional.clone())
            .collect()
    }

    pub fn vertex_index(&self, v: &[S]) -> Option<usize> {
        self.vertices
            .iter()
            .position(|w| linalg::approx_eq(w, v, self.tol))
    }

    fn scaled_tol(&self, scale: &S) -> f64 {
        self.tol * scale.to_f64().abs().max(1.0)
    }

    /// Indices of the facets whose hyperplane through `x/‖x‖` supports the ball.
    pub fn supporting_facets(&self, x: &[S]) -> Vec<usize> {
        let n = self.norm(x);
        let tol = self.scaled_tol(&n);
        (0..self.facets.len())
            .filter(|&i| {
                (dot(&self.facets[i].functional, x) - n.clone()).sign_tol(tol) == Ordering::Equal
            })
            .collect()
    }

    /// Index into [`faces`](Self::faces) of the smallest face containing `x/‖x‖`.
    pub fn face_of(&self, x: &[S]) -> Option<usize> {
        let fs = self.supporting_facets(x);
        let mut verts: Option<BTreeSet<usize>> = None;
        for &i in &fs {
            let s: BTreeSet<usize> = self.facets[i].vertices.iter().copied().collect();
            verts = Some(match verts {
                None => s,
                Some(v) => v.intersection(&s).copied().collect(),
            });
        }
        let verts: Vec<usize> = verts?.into_iter().collect();
        self.faces.iter().position(|f| f.vertices == verts)
    }

    pub fn classify(&self, x: &[S]) -> Result<PointClass> {
        self.check_dim("x", x)?;
        let n = self.norm(x);
        if (n.clone() - S::one()).sign_tol(self.tol) != Ordering::Equal {
            return Err(Error::NotUnit {
                field: "x".into(),
                norm: n.to_report(),
            });
        }
        let generators = self.supporting_facets(x).len();
        let face = self
            .face_of(x)
            .ok_or_else(|| Error::Verification("point lies in no face".into()))?;
        let fdim = self.faces[face].dim;
        let position = if fdim == 0 {
            PointPosition::ExtremeVertex
        } else if fdim + 1 == self.dim {
            PointPosition::FacetInterior
        } else if fdim == 1 {
            PointPosition::EdgeInterior
        } else {
            PointPosition::FaceInterior(fdim)
        };
        Ok(PointClass {
            position,
            smooth: generators == 1,
            generators,
            face: Some(face),
        })
    }

    /// True iff the segment `[u, v]` lies in the unit sphere.
    pub fn adjacent_vertices(&self, u: &[S], v: &[S]) -> Result<bool> {
        self.check_dim("u", u)?;
        self.check_dim("v", v)?;
        let iu = self
            .vertex_index(u)
            .ok_or_else(|| Error::NotExtreme(fmt_point(u)))?;
        let iv = self
            .vertex_index(v)
            .ok_or_else(|| Error::NotExtreme(fmt_point(v)))?;
        Ok(self
            .facets
            .iter()
            .any(|f| f.vertices.contains(&iu) && f.vertices.contains(&iv)))
    }

    pub(crate) fn check_dim(&self, field: &str, v: &[S]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::dim(field, self.dim, v.len()));
        }
        Ok(())
    }

    /// Floating-point copy with the same combinatorics.
    pub fn to_float(&self) -> Polytope<f64> {
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| linalg::to_f64(v)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    functional: linalg::to_f64(&f.functional),
                    vertices: f.vertices.clone(),
                })
                .collect(),
            faces: self.faces.clone(),
            tol: if S::EXACT { DEFAULT_TOL } else { self.tol },
            facets_f64: self.facets_f64.clone(),
        }
    }

    pub(crate) fn facets_f64(&self) -> &[Vec<f64>] {
        &self.facets_f64
    }
}

fn face_lattice<S: Scalar>(vertices: &[Vec<S>], facets: &[Facet<S>], tol: f64) -> Vec<Face> {
    let facet_sets: Vec<BTreeSet<usize>> = facets
        .iter()
        .map(|f| f.vertices.iter().copied().collect())
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<BTreeSet<usize>> = Vec::new();
    for s in &facet_sets {
        if seen.insert(s.iter().copied().collect()) {
            queue.push(s.clone());
        }
    }
    while let Some(face) = queue.pop() {
        for s in &facet_sets {
            let inter: BTreeSet<usize> = face.intersection(s).copied().collect();
            if !inter.is_empty() && seen.insert(inter.iter().copied().collect()) {
                queue.push(inter);
            }
        }
    }
    let mut faces: Vec<Face> = seen
        .into_iter()
        .map(|vs| {
            let pts: Vec<Vec<S>> = vs.iter().map(|&i| vertices[i].clone()).collect();
            let dim = linalg::rank(&pts, tol) - 1;
            let fs = facet_sets
                .iter()
                .enumerate()
                .filter(|(_, s)| vs.iter().all(|v| s.contains(v)))
                .map(|(i, _)| i)
                .collect();
            Face {
                vertices: vs,
                facets: fs,
                dim,
            }
        })
        .collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    faces
}

impl<S: Scalar> NormedSpace<S> for Polytope<S> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn tolerance(&self) -> f64 {
        self.tol
    }

    fn kind(&self) -> &'static str {
        "polyhedral"
    }

    fn norm(&self, v: &[S]) -> S {
        self.facets
            .iter()
            .map(|f| dot(&f.functional, v))
            .fold(S::zero(), crate::scalar::max_of)
    }

    fn norm_f64(&self, v: &[f64]) -> f64 {
        self.facets_f64
            .iter()
            .map(|f| dot(f, v))
            .fold(0.0, f64::max)
    }

    fn dual_norm(&self, f: &[S]) -> S {
        self.vertices
            .iter()
            .map(|v| dot(f, v))
            .fold(S::zero(), crate::scalar::max_of)
    }

    fn support_generators(&self, x: &[S]) -> Vec<Vec<S>> {
        self.supporting_facets(x)
            .into_iter()
            .map(|i| self.facets[i].functional.clone())
            .collect()
    }

    fn polytope(&self) -> Option<&Polytope<S>> {
        Some(self)
    }

    fn float_view(&self) -> std::sync::Arc<dyn NormedSpace<f64>> {
        std::sync::Arc::new(self.to_float())
    }

    fn classify_point(&self, x: &[S]) -> Result<PointClass> {
        self.classify(x)
    }
}
