//! JSON space and operator definitions.
//!
//! ```json
//! {"kind":"polyhedral","vertices":[["2","2"],["1","3"]]}
//! {"kind":"lp","p":2,"dim":3}
//! {"kind":"operator","matrix":[["1","0"],["0","1/2"]],
//!  "domain":{"kind":"catalog","name":"linf2"},"codomain":{"kind":"catalog","name":"linf2"}}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

use super::{catalog, AnySpace, L2Linf, Lp, Polytope};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    Number(f64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Polyhedral {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<Vec<String>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        facets: Option<Vec<Vec<String>>>,
    },
    Lp {
        p: Exponent,
        dim: usize,
    },
    L2linf,
    /// `n` is the number of vertices.
    RegularPolygon {
        n: usize,
    },
    Catalog {
        name: String,
    },
    Operator {
        matrix: Vec<Vec<String>>,
        domain: Box<SpaceSpec>,
        codomain: Box<SpaceSpec>,
    },
}

/// A rational matrix with its domain and codomain.
#[derive(Debug, Clone)]
pub struct OperatorSpec {
    pub matrix: Vec<Vec<Rational>>,
    pub domain: AnySpace,
    pub codomain: AnySpace,
}

fn parse_rows(rows: &[Vec<String>], field: &str) -> Result<Vec<Vec<Rational>>> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, s)| {
                    Rational::parse_scalar(s)
                        .map_err(|e| Error::Parse(format!("{field}[{i}][{j}]: {e}")))
                })
                .collect()
        })
        .collect()
}

impl SpaceSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<AnySpace> {
        self.build_tol(None)
    }

    /// Builds the space; `tol` overrides the tolerance of floating-point spaces.
    pub fn build_tol(&self, tol: Option<f64>) -> Result<AnySpace> {
        let ftol = tol.unwrap_or(crate::scalar::DEFAULT_TOL);
        match self {
            SpaceSpec::Polyhedral { vertices, facets } => {
                let p = match (vertices, facets) {
                    (Some(v), None) => Polytope::from_vertices(parse_rows(v, "vertices")?)?,
                    (None, Some(f)) => Polytope::from_facets(parse_rows(f, "facets")?)?,
                    _ => {
                        return Err(Error::Parse(
                            "polyhedral space needs exactly one of \"vertices\" or \"facets\""
                                .into(),
                        ))
                    }
                };
                Ok(AnySpace::Exact(Arc::new(p)))
            }
            SpaceSpec::Lp { p, dim } => {
                let p = match p {
                    Exponent::Number(x) => *x,
                    Exponent::Text(s) if s == "inf" || s == "infinity" => f64::INFINITY,
                    Exponent::Text(s) => s
                        .parse()
                        .map_err(|_| Error::Parse(format!("p: malformed exponent {s:?}")))?,
                };
                if p == 1.0 {
                    Ok(AnySpace::Exact(Arc::new(catalog::l1(*dim)?)))
                } else if p.is_infinite() {
                    Ok(AnySpace::Exact(Arc::new(catalog::linf(*dim)?)))
                } else {
                    Ok(AnySpace::Float(Arc::new(Lp::new(*dim, p)?.with_tolerance(ftol))))
                }
            }
            SpaceSpec::L2linf => Ok(AnySpace::Float(Arc::new(L2Linf::new().with_tolerance(ftol)))),
            SpaceSpec::RegularPolygon { n } => {
                Ok(AnySpace::Float(Arc::new(catalog::regular_polygon_tol(*n, ftol)?)))
            }
            SpaceSpec::Catalog { name } => catalog::catalog_tol(name, tol),
            SpaceSpec::Operator { .. } => Err(Error::Parse(
                "expected a space definition, found an operator".into(),
            )),
        }
    }

    pub fn build_operator(&self) -> Result<OperatorSpec> {
        self.build_operator_tol(None)
    }

    pub fn build_operator_tol(&self, tol: Option<f64>) -> Result<OperatorSpec> {
        let SpaceSpec::Operator {
            matrix,
            domain,
            codomain,
        } = self
        else {
            return Err(Error::Parse("expected an operator definition".into()));
        };
        let matrix = parse_rows(matrix, "matrix")?;
        let domain = domain.build_tol(tol)?;
        let codomain = codomain.build_tol(tol)?;
        if matrix.len() != codomain.dim() {
            return Err(Error::dim("matrix rows", codomain.dim(), matrix.len()));
        }
        for r in &matrix {
            if r.len() != domain.dim() {
                return Err(Error::dim("matrix columns", domain.dim(), r.len()));
            }
        }
        Ok(OperatorSpec {
            matrix,
            domain,
            codomain,
        })
    }
}
