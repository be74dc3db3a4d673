//! The on-disk JSON artifact for codes and their duals.
//!
//! An artifact records the full construction recipe — field, curve,
//! support, degree, variant — together with the generator matrix, so a
//! reader can both use the matrix directly and re-derive it from the
//! recipe. `resolve` does exactly that and refuses artifacts whose
//! stored matrix disagrees with their own metadata.
//!
//! All field elements are stored as integer indices in the canonical
//! base-p encoding; the modulus travels with the artifact so indices
//! mean the same thing everywhere.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::codes::{Code, Variant};
use crate::curves::{Curve, Family, Point, Support};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Field serialization; `modulus` lists coefficients constant-term first.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

/// Curve serialization. Coefficients are element indices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CurveJson {
    Line,
    Elliptic { a: u32, b: u32 },
    Hermitian { q0: u32 },
}

/// Extra metadata carried by dual artifacts.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DualMeta {
    /// "functional" or "nullspace".
    pub method: String,
    /// Correction constants as element indices: `[λ]` for extended
    /// duals, `[λ1, λ2, λ3]` for roth-lempel duals; absent for
    /// nullspace duals.
    pub lambda: Option<Vec<u32>>,
    /// Orthogonality against the primal generator, recomputed when the
    /// artifact was written.
    pub orthogonal: bool,
}

/// A code artifact. The construction fields always describe the primal
/// code; `generator` holds the primal generator, or the dual generator
/// when `dual` is present.
///
/// Support points are stored as `[x_idx, y_idx]` (just `[x_idx]` on the
/// projective line, which has no y coordinate).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Artifact {
    pub field: FieldJson,
    pub curve: CurveJson,
    pub support: Vec<Vec<u32>>,
    pub m: usize,
    pub variant: String,
    pub delta: Option<u32>,
    pub generator: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualMeta>,
}

/// An artifact rebuilt into live objects.
pub struct Resolved {
    /// The primal code, rebuilt from the construction fields.
    pub code: Code,
    /// The stored matrix (equal to `code.generator()` for primal
    /// artifacts; the dual generator otherwise).
    pub matrix: Matrix,
    pub dual: Option<DualMeta>,
}

fn field_json(field: &Field) -> FieldJson {
    FieldJson {
        p: field.p(),
        e: field.e(),
        modulus: field.modulus().to_vec(),
    }
}

fn curve_json(curve: &Curve) -> CurveJson {
    match *curve.family() {
        Family::Line => CurveJson::Line,
        Family::Elliptic { a, b } => CurveJson::Elliptic { a: a.0, b: b.0 },
        Family::Hermitian { q0 } => CurveJson::Hermitian { q0 },
    }
}

fn support_json(support: &Support) -> Vec<Vec<u32>> {
    support
        .points()
        .iter()
        .map(|p| match p.y {
            Some(y) => vec![p.x.0, y.0],
            None => vec![p.x.0],
        })
        .collect()
}

fn matrix_json(m: &Matrix) -> Vec<Vec<u32>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|e| e.0).collect())
        .collect()
}

impl Artifact {
    /// Serialize a code as a primal artifact.
    pub fn from_code(code: &Code) -> Artifact {
        let delta = match code.variant() {
            Variant::RothLempel { delta } => Some(delta.0),
            _ => None,
        };
        Artifact {
            field: field_json(code.curve().field()),
            curve: curve_json(code.curve()),
            support: support_json(code.support()),
            m: code.m(),
            variant: code.variant().name().to_string(),
            delta,
            generator: matrix_json(code.generator()),
            dual: None,
        }
    }

    /// Serialize a dual generator against the primal code it annihilates.
    pub fn from_dual(code: &Code, dual_generator: &Matrix, meta: DualMeta) -> Artifact {
        let mut art = Artifact::from_code(code);
        art.generator = matrix_json(dual_generator);
        art.dual = Some(meta);
        art
    }

    /// Rebuild the code from the construction fields and check the stored
    /// matrix against it: a primal generator must match bit for bit, a
    /// dual generator must have the right shape and be exactly orthogonal.
    pub fn resolve(&self) -> Result<Resolved> {
        let field = Field::with_modulus(self.field.p, self.field.e, &self.field.modulus)?;
        let curve = match self.curve {
            CurveJson::Line => Curve::line(field.clone()),
            CurveJson::Elliptic { a, b } => {
                Curve::elliptic(field.clone(), field.el(a as u64)?, field.el(b as u64)?)?
            }
            CurveJson::Hermitian { q0 } => Curve::hermitian(field.clone(), q0)?,
        };
        let expect_len = match curve.family() {
            Family::Line => 1,
            _ => 2,
        };
        let mut points = Vec::with_capacity(self.support.len());
        for entry in &self.support {
            if entry.len() != expect_len {
                return Err(Error::Artifact(format!(
                    "support entry {entry:?} has {} coordinates; the {} family takes {}",
                    entry.len(),
                    match curve.family() {
                        Family::Line => "line",
                        Family::Elliptic { .. } => "elliptic",
                        Family::Hermitian { .. } => "hermitian",
                    },
                    expect_len
                )));
            }
            let x = field.el(entry[0] as u64)?;
            points.push(match curve.family() {
                Family::Line => Point::on_line(x),
                _ => Point::affine(x, field.el(entry[1] as u64)?),
            });
        }
        let support = Support::new(&curve, &points)?;

        let code = match self.variant.as_str() {
            "plain" => {
                if self.delta.is_some() {
                    return Err(Error::Artifact(
                        "delta is only meaningful for the roth-lempel variant".into(),
                    ));
                }
                Code::plain(curve, support, self.m)?
            }
            "extended" => {
                if self.delta.is_some() {
                    return Err(Error::Artifact(
                        "delta is only meaningful for the roth-lempel variant".into(),
                    ));
                }
                Code::extended(curve, support, self.m)?
            }
            "roth-lempel" => {
                let delta = self.delta.ok_or_else(|| {
                    Error::Artifact("roth-lempel artifacts need a delta".into())
                })?;
                Code::roth_lempel(curve, support, self.m, field.el(delta as u64)?)?
            }
            other => {
                return Err(Error::Artifact(format!(
                    "unknown variant {other:?}; expected plain, extended, or roth-lempel"
                )))
            }
        };

        let mut rows = Vec::with_capacity(self.generator.len());
        for row in &self.generator {
            let mut out = Vec::with_capacity(row.len());
            for &v in row {
                out.push(field.el(v as u64)?);
            }
            rows.push(out);
        }
        let matrix = Matrix::from_rows(field, rows)?;

        match &self.dual {
            None => {
                if matrix.rows() != code.k()
                    || matrix.cols() != code.n()
                    || (0..matrix.rows())
                        .any(|i| matrix.row(i) != code.generator().row(i))
                {
                    return Err(Error::Artifact(
                        "stored generator disagrees with the construction metadata \
                         (artifact edited or produced by a different build?)"
                            .into(),
                    ));
                }
            }
            Some(meta) => {
                if matrix.rows() != code.n() - code.k() || matrix.cols() != code.n() {
                    return Err(Error::Artifact(format!(
                        "dual generator is {}x{}; expected {}x{}",
                        matrix.rows(),
                        matrix.cols(),
                        code.n() - code.k(),
                        code.n()
                    )));
                }
                let orthogonal = matrix.mul(&code.generator().transpose())?.is_zero();
                if orthogonal != meta.orthogonal {
                    return Err(Error::Artifact(format!(
                        "dual artifact records orthogonal={} but the product check says {}",
                        meta.orthogonal, orthogonal
                    )));
                }
            }
        }

        Ok(Resolved {
            code,
            matrix,
            dual: self.dual.clone(),
        })
    }
}

/// Read and parse an artifact file.
pub fn read_artifact(path: &Path) -> Result<Artifact> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Artifact(format!("cannot read {}: {e}", path.display())))?;
    let art = serde_json::from_str(&text)?;
    Ok(art)
}

/// Lambda constants as element indices, for `DualMeta`.
pub fn lambda_indices(lambdas: &[Fe]) -> Vec<u32> {
    lambdas.iter().map(|l| l.0).collect()
}
