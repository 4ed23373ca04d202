//! JSON-lines records: matrices in, decompositions out.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;
use symdiag::oracle::{residuals, Decomposition, Residuals};
use symdiag::{diagonalize2, diagonalize3, euler_angles, SymMat2, SymMat3};
use thiserror::Error;

/// One input line. Keys beyond these are rejected.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixRecord {
    pub id: Option<String>,
    pub dim: Option<u8>,
    pub a11: f64,
    pub a22: f64,
    pub a33: Option<f64>,
    pub a12: f64,
    pub a13: Option<f64>,
    pub a23: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Matrix {
    Two(SymMat2),
    Three(SymMat3),
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ParseError {
    #[error("invalid JSON record: {0}")]
    Json(String),
    #[error("dim must be 2 or 3, got {0}")]
    BadDim(u8),
    #[error("dim 2 record must not carry a33, a13 or a23")]
    ExtraComponents,
    #[error("dim 3 record is missing `{0}`")]
    MissingComponent(&'static str),
    #[error(transparent)]
    Matrix(#[from] symdiag::Error),
}

impl MatrixRecord {
    pub fn parse(line: &str) -> Result<Self, ParseError> {
        serde_json::from_str(line).map_err(|e| ParseError::Json(e.to_string()))
    }

    /// The dimension is `dim` when given, otherwise 3 if any of the third-row
    /// components is present.
    pub fn to_matrix(&self) -> Result<Matrix, ParseError> {
        let third = [("a33", self.a33), ("a13", self.a13), ("a23", self.a23)];
        let any_third = third.iter().any(|(_, v)| v.is_some());
        let dim = match self.dim {
            Some(d @ (2 | 3)) => d,
            Some(d) => return Err(ParseError::BadDim(d)),
            None if any_third => 3,
            None => 2,
        };
        if dim == 2 {
            if any_third {
                return Err(ParseError::ExtraComponents);
            }
            return Ok(Matrix::Two(SymMat2::new(self.a11, self.a22, self.a12)?));
        }
        let mut vals = [0.0; 3];
        for (slot, (name, v)) in vals.iter_mut().zip(third) {
            *slot = v.ok_or(ParseError::MissingComponent(name))?;
        }
        let [a33, a13, a23] = vals;
        Ok(Matrix::Three(SymMat3::new(
            self.a11, self.a22, a33, self.a12, a13, a23,
        )?))
    }
}

impl From<&SymMat3> for MatrixRecord {
    fn from(a: &SymMat3) -> Self {
        MatrixRecord {
            id: None,
            dim: Some(3),
            a11: a.a11(),
            a22: a.a22(),
            a33: Some(a.a33()),
            a12: a.a12(),
            a13: Some(a.a13()),
            a23: Some(a.a23()),
        }
    }
}

/// A float written with 17 significant digits, so it reads back exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Exact(pub f64);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw =
            RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

fn exact<const N: usize>(v: [f64; N]) -> Vec<Exact> {
    v.into_iter().map(Exact).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EulerAngles {
    /// First turn, about the fixed `x` axis.
    pub x: Exact,
    /// About the once-rotated `y'` axis.
    #[serde(rename = "y'")]
    pub y1: Exact,
    /// About the twice-rotated `z''` axis.
    #[serde(rename = "z''")]
    pub z2: Exact,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualRecord {
    pub recon_rel: Exact,
    pub ortho: Exact,
    pub max_eigvec: Exact,
}

impl<const N: usize> From<&Residuals<N>> for ResidualRecord {
    fn from(r: &Residuals<N>) -> Self {
        ResidualRecord {
            recon_rel: Exact(r.recon_rel),
            ortho: Exact(r.ortho),
            max_eigvec: Exact(r.max_eigvec()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRecord {
    pub line: usize,
    pub id: Option<String>,
    pub dim: u8,
    /// In the order the angle equations use.
    pub eigenvalues: Vec<Exact>,
    pub eigenvalues_sorted: Vec<Exact>,
    /// `[φ]` in two dimensions, `[φ1, φ2, φ3]` in three.
    pub angles: Vec<Exact>,
    pub euler_angles: Option<EulerAngles>,
    /// Columns of `D`.
    pub eigenvectors: Vec<Vec<Exact>>,
    pub branch: &'static str,
    pub residuals: ResidualRecord,
    pub near_tie: bool,
}

/// An input line that could not be solved.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorRecord {
    pub line: usize,
    pub id: Option<String>,
    pub error: String,
}

impl ResultRecord {
    pub fn solve(line: usize, id: Option<String>, m: &Matrix) -> Self {
        match m {
            Matrix::Two(a) => {
                let dec = diagonalize2(a);
                ResultRecord {
                    line,
                    id,
                    dim: 2,
                    eigenvalues: exact(dec.eigenvalues()),
                    eigenvalues_sorted: exact(Decomposition::sorted_eigenvalues(&dec)),
                    angles: vec![Exact(dec.phi())],
                    euler_angles: None,
                    eigenvectors: dec.d().columns().into_iter().map(exact).collect(),
                    branch: "Planar",
                    residuals: (&residuals(a, &dec)).into(),
                    near_tie: false,
                }
            }
            Matrix::Three(a) => {
                let dec = diagonalize3(a);
                let [x, y1, z2] = euler_angles(&dec).as_array().map(Exact);
                ResultRecord {
                    line,
                    id,
                    dim: 3,
                    eigenvalues: exact(dec.eigenvalues()),
                    eigenvalues_sorted: exact(dec.sorted_eigenvalues()),
                    angles: exact(dec.angles().as_array()),
                    euler_angles: Some(EulerAngles { x, y1, z2 }),
                    eigenvectors: dec.d().columns().into_iter().map(exact).collect(),
                    branch: dec.branch().as_str(),
                    residuals: (&residuals(a, &dec)).into(),
                    near_tie: dec.report().near_tie(),
                }
            }
        }
    }
}
