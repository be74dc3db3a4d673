//! Evaluation codes C_L(D, m·P∞) and their two lengthenings, plus dual
//! generator matrices built directly from rational functions.
//!
//! With the graded basis f_1, …, f_k of L(m·P∞) (pole orders ascending),
//! the three variants evaluate at the support D = {P_1, …, P_n}:
//!
//! * plain:        rows f_j(P_i) — an [n, k] code;
//! * extended:     one extra tag column (0, …, 0, 1)ᵀ recording the
//!                 top coefficient a_k — an [n+1, k] code;
//! * Roth-Lempel:  two extra columns (0,…,0,1)ᵀ and (0,…,0,1,δ)ᵀ recording
//!                 a_k and a_{k-1} + δ·a_k — an [n+2, k] code.
//!
//! For fiber-complete supports the dual has an equally explicit shape: with
//! h = Π (x − α_j) over the support x-values and w the family's separating
//! denominator (h' on the line and the Hermitian curve, y·h' on an elliptic
//! curve), the functions g_j = u_j / w for the graded numerator basis
//! u_1, …, u_r give dual generator rows (g_j(P_1), …, g_j(P_n), tags),
//! where only the top one or two rows carry nonzero tag entries — the
//! correction constants λ computed here.

use crate::curves::{Curve, Family, Monomial, RrBasis, Support};
use crate::gf::Fe;
use crate::linalg::Matrix;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Extended,
    RothLempel { delta: Fe },
}

impl Variant {
    /// Number of tag columns appended to the n evaluation columns.
    pub fn tag_cols(&self) -> usize {
        match self {
            Variant::Plain => 0,
            Variant::Extended => 1,
            Variant::RothLempel { .. } => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Extended => "extended",
            Variant::RothLempel { .. } => "roth-lempel",
        }
    }
}

#[derive(Clone)]
pub struct Code {
    curve: Curve,
    support: Support,
    m: usize,
    variant: Variant,
    basis: RrBasis,
    generator: Matrix,
}

impl Code {
    /// C_L(D, m·P∞): the plain evaluation code. Needs 1 <= m <= n-1.
    pub fn plain(curve: Curve, support: Support, m: usize) -> Result<Code> {
        Code::build(curve, support, m, Variant::Plain)
    }

    /// The extended code with one tag column. Needs max(1, 2g) <= m <= n-1.
    pub fn extended(curve: Curve, support: Support, m: usize) -> Result<Code> {
        Code::build(curve, support, m, Variant::Extended)
    }

    /// The Roth-Lempel code with two tag columns. On top of the extended
    /// requirements, m-1 must also be a pole number so that the basis has
    /// elements of orders exactly m-1 and m.
    pub fn roth_lempel(curve: Curve, support: Support, m: usize, delta: Fe) -> Result<Code> {
        Code::build(curve, support, m, Variant::RothLempel { delta })
    }

    fn build(curve: Curve, support: Support, m: usize, variant: Variant) -> Result<Code> {
        let n = support.len();
        let g = curve.genus();
        let lo = match variant {
            Variant::Plain => 1,
            _ => (2 * g).max(1),
        };
        if m < lo || m + 1 > n {
            return Err(Error::MOutOfRange { m, lo, hi: n - 1 });
        }
        // The tag columns record coefficients of the basis functions of
        // pole orders exactly m (and m-1); those orders must be attained.
        // Plain codes are fine with gap orders (the basis is just smaller).
        if variant != Variant::Plain && !curve.is_pole_number(m) {
            return Err(Error::GapOrder(m));
        }
        if let Variant::RothLempel { .. } = variant {
            if !curve.is_pole_number(m - 1) {
                return Err(Error::GapOrder(m - 1));
            }
        }
        let basis = curve.rr_basis(m);
        let k = basis.dimension();
        if variant != Variant::Plain {
            debug_assert_eq!(basis.top().pole_order, m);
        }
        if let Variant::RothLempel { .. } = variant {
            let pen = basis.monomials[k - 2].pole_order;
            debug_assert_eq!(pen, m - 1);
        }

        let field = curve.field().clone();
        let tags = variant.tag_cols();
        let mut rows = Vec::with_capacity(k);
        for mono in &basis.monomials {
            let mut row: Vec<Fe> = support
                .points()
                .iter()
                .map(|p| curve.evaluate(mono, p))
                .collect();
            row.extend(std::iter::repeat(Fe::ZERO).take(tags));
            rows.push(row);
        }
        match variant {
            Variant::Plain => {}
            Variant::Extended => {
                rows[k - 1][n] = Fe::ONE;
            }
            Variant::RothLempel { delta } => {
                rows[k - 1][n] = Fe::ONE;
                rows[k - 2][n + 1] = Fe::ONE;
                rows[k - 1][n + 1] = delta;
            }
        }
        let generator = Matrix::from_rows(field, rows)?;
        debug_assert_eq!(generator.rank(), k, "evaluation map must be injective");
        Ok(Code {
            curve,
            support,
            m,
            variant,
            basis,
            generator,
        })
    }

    /// Code length including tag columns.
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Number of evaluation points (length without tag columns).
    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn basis(&self) -> &RrBasis {
        &self.basis
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }
}

/// A generator matrix of the exact dual, from the kernel of the generator.
/// Works for every variant and support.
pub fn nullspace_dual(code: &Code) -> Matrix {
    code.generator().nullspace()
}

/// Which separating denominator w the functional dual divides by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualDenominator {
    /// w = h'(x); used for the line and the Hermitian curve.
    HPrime,
    /// w = y·h'(x); used for elliptic curves.
    YTimesHPrime,
}

/// A dual generator built from functions rather than a kernel computation.
pub struct FunctionalDual {
    pub generator: Matrix,
    /// Correction constants: [λ] for extended codes,
    /// [λ1, λ2, λ3] for Roth-Lempel codes.
    pub lambdas: Vec<Fe>,
    pub numerator_basis: RrBasis,
    pub denominator: DualDenominator,
}

/// Build the function-based dual generator of an extended or Roth-Lempel
/// code over a fiber-complete support.
///
/// Rows are (u_j/w)(P_i) for the graded numerator basis u_j of
/// L(deg·P∞) with deg = n - m + 2g - 1 (extended) or n - m + 2g
/// (Roth-Lempel); all tag entries vanish except on the top rows, which
/// carry the λ constants. The result is verified orthogonal to the code.
pub fn functional_dual(code: &Code) -> Result<FunctionalDual> {
    let delta = match code.variant() {
        Variant::Plain => {
            return Err(Error::Unsupported(
                "the functional dual is defined for extended and roth-lempel codes; \
                 use the nullspace dual for plain codes"
                    .into(),
            ))
        }
        Variant::Extended => None,
        Variant::RothLempel { delta } => Some(delta),
    };
    let support = code.support();
    if !support.fiber_complete() {
        return Err(Error::FiberIncomplete(
            "the functional dual needs every x-fiber of the support complete".into(),
        ));
    }
    let curve = code.curve();
    let f = curve.field().clone();
    let (n, k, m, g) = (code.support_len(), code.k(), code.m(), curve.genus());

    let denominator = match curve.family() {
        Family::Line | Family::Hermitian { .. } => DualDenominator::HPrime,
        Family::Elliptic { .. } => DualDenominator::YTimesHPrime,
    };
    // 1/w at each support point.
    let mut w_inv = Vec::with_capacity(n);
    for p in support.points() {
        let hp = support.h_prime(p.x)?;
        let w = match denominator {
            DualDenominator::HPrime => hp,
            DualDenominator::YTimesHPrime => {
                let y = p.y.expect("elliptic points carry y");
                f.mul(y, hp)
            }
        };
        w_inv.push(f.inv(w)?);
    }

    let deg = n - m + 2 * g - 1 + usize::from(delta.is_some());
    let numerator_basis = curve.rr_basis(deg);
    let tags = code.variant().tag_cols();
    let rows_expected = n - k + tags;
    assert_eq!(
        numerator_basis.dimension(),
        rows_expected,
        "numerator space dimension must be n - k + tag columns"
    );

    let eval_row = |mono: &Monomial| -> Vec<Fe> {
        support
            .points()
            .iter()
            .zip(&w_inv)
            .map(|(p, &wi)| f.mul(curve.evaluate(mono, p), wi))
            .collect()
    };
    let mut rows: Vec<Vec<Fe>> = numerator_basis
        .monomials
        .iter()
        .map(|mono| {
            let mut r = eval_row(mono);
            r.extend(std::iter::repeat(Fe::ZERO).take(tags));
            r
        })
        .collect();

    // Tag entries on the top rows: each λ is the inner product of a primal
    // evaluation row with a dual evaluation row.
    let dot = |a: &[Fe], b: &[Fe]| -> Fe {
        a.iter()
            .zip(b)
            .fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    };
    let top_primal = &code.generator().row(k - 1)[..n]; // f_k values
    let lambdas = match delta {
        None => {
            let lambda = dot(top_primal, &rows[n - k][..n]);
            rows[n - k][n] = f.neg(lambda);
            vec![lambda]
        }
        Some(delta) => {
            let next_primal = &code.generator().row(k - 2)[..n]; // f_{k-1} values
            let lambda1 = dot(top_primal, &rows[n - k][..n]);
            let lambda2 = dot(next_primal, &rows[n - k + 1][..n]);
            let lambda3 = f.sub(
                dot(top_primal, &rows[n - k + 1][..n]),
                f.mul(delta, lambda2),
            );
            rows[n - k][n] = f.neg(lambda1);
            rows[n - k + 1][n] = f.neg(lambda3);
            rows[n - k + 1][n + 1] = f.neg(lambda2);
            vec![lambda1, lambda2, lambda3]
        }
    };

    let generator = Matrix::from_rows(f, rows)?;
    if !generator
        .mul(&code.generator().transpose())?
        .is_zero()
    {
        return Err(Error::NotOrthogonal);
    }
    debug_assert_eq!(generator.rank(), rows_expected);
    Ok(FunctionalDual {
        generator,
        lambdas,
        numerator_basis,
        denominator,
    })
}

/// Which basis to thin out in [`skip_penultimate_matrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipSide {
    /// Evaluation rows of f_1, …, f_{k-2}, f_k (drops the next-to-top
    /// primal basis function).
    Primal,
    /// Evaluation rows of g_1, …, g_{n-k}, g_{n-k+2} from the functional
    /// dual (drops the next-to-top numerator function); no tag columns.
    Dual,
}

/// The evaluation matrix obtained by removing the basis function of
/// next-to-highest pole order; its row space governs whether the
/// Roth-Lempel distances reach the upper ends of their two-value ranges.
pub fn skip_penultimate_matrix(code: &Code, side: SkipSide) -> Result<Matrix> {
    match side {
        SkipSide::Primal => {
            let k = code.k();
            if k < 2 {
                return Err(Error::Unsupported(
                    "need at least two basis functions to drop one".into(),
                ));
            }
            let rows: Vec<usize> = (0..k - 2).chain([k - 1]).collect();
            Ok(code
                .generator()
                .select_rows(&rows)
                .truncate_cols(code.support_len()))
        }
        SkipSide::Dual => {
            if !matches!(code.variant(), Variant::RothLempel { .. }) {
                return Err(Error::Unsupported(
                    "the dual-side thinned matrix is defined for roth-lempel codes".into(),
                ));
            }
            let dual = functional_dual(code)?;
            let r = dual.generator.rows();
            let rows: Vec<usize> = (0..r - 2).chain([r - 1]).collect();
            Ok(dual
                .generator
                .select_rows(&rows)
                .truncate_cols(code.support_len()))
        }
    }
}
