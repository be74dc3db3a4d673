//! Exact verification: weight distributions by message-space enumeration,
//! the MacWilliams transform over exact integers, Singleton-defect
//! classification, covering radii (see [`covering`]), and the named bound
//! checks that an analyzed code is expected to satisfy.

mod covering;

pub use covering::{covering_radius, Coverage, CoverageOptions};

use serde::{Deserialize, Serialize};

use crate::codes::{Code, Variant};
use crate::curves::Family;
use crate::gf::Fe;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Hard ceiling on q^k for direct enumeration.
pub const MAX_ENUMERATION: u128 = 100_000_000;

/// Weight distribution of an [n, k] code over GF(q):
/// `counts[w]` = number of codewords of Hamming weight w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    /// Smallest nonzero codeword weight.
    pub fn min_weight(&self) -> Result<usize> {
        (1..=self.n)
            .find(|&w| self.counts[w] > 0)
            .ok_or(Error::ZeroCode)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Enumerate the row space of `gen` and count codeword weights.
///
/// The matrix is first reduced to a row basis, so linearly dependent input
/// rows are harmless; the walk visits each codeword exactly once, updating
/// the running codeword incrementally per message digit.
pub fn weight_distribution(gen: &Matrix) -> Result<WeightDistribution> {
    let f = gen.field().clone();
    let q = f.q();
    let basis = gen.row_basis();
    let (k, n) = (basis.rows(), basis.cols());
    let count = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > MAX_ENUMERATION {
        return Err(Error::EnumerationTooLarge {
            count,
            limit: MAX_ENUMERATION,
        });
    }
    let mut counts = vec![0u64; n + 1];
    if k == 0 {
        counts[0] = 1;
        return Ok(WeightDistribution { n, k, q, counts });
    }

    // diff[j][v]: change of the codeword when message digit j moves from
    // element index v to the next index (wrapping q-1 -> 0).
    let mut diff = vec![Fe::ZERO; k * q as usize * n];
    for j in 0..k {
        for v in 0..q {
            let next = if v + 1 == q { Fe::ZERO } else { Fe(v + 1) };
            let step = f.sub(next, Fe(v));
            let slot = &mut diff[(j * q as usize + v as usize) * n..][..n];
            for (s, &g) in slot.iter_mut().zip(basis.row(j)) {
                *s = f.mul(step, g);
            }
        }
    }

    let mut digits = vec![0u32; k];
    let mut cw = vec![Fe::ZERO; n];
    let mut remaining = count;
    loop {
        let w = cw.iter().filter(|x| !x.is_zero()).count();
        counts[w] += 1;
        remaining -= 1;
        if remaining == 0 {
            break;
        }
        // Odometer increment, last digit fastest.
        let mut j = k;
        loop {
            j -= 1;
            let v = digits[j];
            let d = &diff[(j * q as usize + v as usize) * n..][..n];
            for (c, &dx) in cw.iter_mut().zip(d) {
                *c = f.add(*c, dx);
            }
            if v + 1 < q {
                digits[j] = v + 1;
                break;
            }
            digits[j] = 0;
        }
    }
    debug_assert_eq!(counts.iter().sum::<u64>() as u128, count);
    Ok(WeightDistribution { n, k, q, counts })
}

/// The dual weight distribution via the MacWilliams identity, computed in
/// exact integer arithmetic. Fails if the input is not a genuine
/// distribution (non-integer or negative dual counts).
pub fn macwilliams(w: &WeightDistribution) -> Result<WeightDistribution> {
    let n = w.n;
    let q = w.q as i128;
    let size: i128 = (q as u128).pow(w.k as u32) as i128;
    // Pascal's triangle up to n.
    let mut binom = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = binom[i - 1][j - 1] + if j <= i - 1 { binom[i - 1][j] } else { 0 };
        }
    }
    let mut qm1_pow = vec![1i128; n + 1];
    for t in 1..=n {
        qm1_pow[t] = qm1_pow[t - 1]
            .checked_mul(q - 1)
            .ok_or(Error::NonIntegerTransform)?;
    }
    let krawtchouk = |j: usize, i: usize| -> Result<i128> {
        let mut acc: i128 = 0;
        for s in 0..=j.min(i) {
            if j - s > n - i {
                continue;
            }
            let term = binom[i][s]
                .checked_mul(binom[n - i][j - s])
                .and_then(|t| t.checked_mul(qm1_pow[j - s]))
                .ok_or(Error::NonIntegerTransform)?;
            if s % 2 == 0 {
                acc = acc.checked_add(term).ok_or(Error::NonIntegerTransform)?;
            } else {
                acc = acc.checked_sub(term).ok_or(Error::NonIntegerTransform)?;
            }
        }
        Ok(acc)
    };
    let mut counts = vec![0u64; n + 1];
    for (j, slot) in counts.iter_mut().enumerate() {
        let mut acc: i128 = 0;
        for i in 0..=n {
            let a = w.counts[i] as i128;
            if a == 0 {
                continue;
            }
            acc = acc
                .checked_add(a.checked_mul(krawtchouk(j, i)?).ok_or(Error::NonIntegerTransform)?)
                .ok_or(Error::NonIntegerTransform)?;
        }
        if acc < 0 || acc % size != 0 {
            return Err(Error::NonIntegerTransform);
        }
        *slot = (acc / size) as u64;
    }
    Ok(WeightDistribution {
        n,
        k: n - w.k,
        q: w.q,
        counts,
    })
}

/// Weight distributions of the code and its dual, enumerating whichever
/// side is smaller and transforming across.
pub fn pair_distributions(gen: &Matrix) -> Result<(WeightDistribution, WeightDistribution)> {
    let k = gen.rank();
    let n = gen.cols();
    if k <= n - k {
        let w = weight_distribution(gen)?;
        let wd = macwilliams(&w)?;
        Ok((w, wd))
    } else {
        let wd = weight_distribution(&gen.nullspace())?;
        let w = macwilliams(&wd)?;
        Ok((w, wd))
    }
}

/// Minimum distance of the row space of `gen`, by exact enumeration of the
/// smaller of code/dual.
pub fn min_distance(gen: &Matrix) -> Result<usize> {
    pair_distributions(gen)?.0.min_weight()
}

/// Classification by Singleton defects s = n+1-k-d and s' = k+1-d'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// s = s' = 0.
    Mds,
    /// s = s' = 1.
    Nmds,
    /// s = s' = l >= 2.
    LMds(usize),
    /// s = 1 but s' != 1: almost-MDS without the dual property.
    AmdsOnly,
    Other,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Mds => write!(f, "MDS"),
            Classification::Nmds => write!(f, "NMDS"),
            Classification::LMds(l) => write!(f, "{l}-MDS"),
            Classification::AmdsOnly => write!(f, "AMDS-only"),
            Classification::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DefectProfile {
    pub defect: usize,
    pub defect_dual: usize,
    pub class: Classification,
}

/// Singleton defects of an [n, k, d] code with dual distance d_dual.
pub fn classify(n: usize, k: usize, d: usize, d_dual: usize) -> DefectProfile {
    let defect = n + 1 - k - d;
    let defect_dual = k + 1 - d_dual;
    let class = match (defect, defect_dual) {
        (0, 0) => Classification::Mds,
        (1, 1) => Classification::Nmds,
        (s, sd) if s == sd && s >= 2 => Classification::LMds(s),
        (1, _) => Classification::AmdsOnly,
        _ => Classification::Other,
    };
    DefectProfile {
        defect,
        defect_dual,
        class,
    }
}

/// One named pass/fail verdict in a report.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub pass: bool,
}

/// Full analysis of one code, in the shape the CLI serializes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub defect: usize,
    pub defect_dual: usize,
    pub class: String,
    pub rho: Option<usize>,
    pub rho_dual: Option<usize>,
    pub bounds: Vec<BoundCheck>,
}

/// Compute distances, defects, class, and every applicable bound check.
/// Covering radii are passed in if they were measured.
pub fn analyze_code(
    code: &Code,
    rho: Option<usize>,
    rho_dual: Option<usize>,
) -> Result<Report> {
    let (w, wd) = pair_distributions(code.generator())?;
    let d = w.min_weight()?;
    let d_dual = wd.min_weight()?;
    let profile = classify(code.n(), code.k(), d, d_dual);
    let bounds = check_bounds(code, d, d_dual, rho, rho_dual)?;
    Ok(Report {
        n: code.n(),
        k: code.k(),
        d,
        d_dual,
        defect: profile.defect,
        defect_dual: profile.defect_dual,
        class: profile.class.to_string(),
        rho,
        rho_dual,
        bounds,
    })
}

/// Is the plain code over the same support with degree m+1 MDS? Computed
/// only when the enumeration is desk-scale cheap; `None` means unknown.
fn next_degree_plain_mds(code: &Code) -> Option<bool> {
    let m = code.m() + 1;
    let n0 = code.support_len();
    if m > n0 - 1 || !code.curve().is_pole_number(m) {
        return None;
    }
    let next = Code::plain(code.curve().clone(), code.support().clone(), m).ok()?;
    let k = next.k();
    let q = next.curve().field().q() as u128;
    if q.checked_pow(k.min(n0 - k) as u32)? > 10_000_000 {
        return None;
    }
    let (w, wd) = pair_distributions(next.generator()).ok()?;
    let d = w.min_weight().ok()?;
    let dd = wd.min_weight().ok()?;
    Some(matches!(classify(n0, k, d, dd).class, Classification::Mds))
}

/// Every bound check applicable to this code, given its measured data.
///
/// Names and windows (n0 = number of evaluation points, g = genus,
/// k = dimension):
///
/// * `distance_floor` — d >= n0 - m (plain) or d >= n0 - m + 1
///   (extended / roth-lempel);
/// * `redundancy` / `redundancy_dual` — ρ(C) <= n - k, ρ(C⊥) <= k;
/// * `crag` / `crag_dual` — for extended codes,
///   n0 - m - 1 <= ρ <= n0 - m + g and m - 2g <= ρ⊥ <= m - g + 1;
/// * `elliptic_two_values` / `..._dual` — for extended elliptic codes with
///   #E >= q + 3, n0 >= q + 2, m <= n0 - 2: ρ ∈ [n0-k-1, n0-k] and
///   ρ⊥ ∈ [k-2, k-1];
/// * `elliptic_next_mds_window` — for extended elliptic codes whose plain
///   degree-(m+1) code is MDS: ρ ∈ [n0-k, n0-k+1];
/// * `elliptic_mds_length` — a plain MDS elliptic code with
///   2 <= k <= n0 - 2 forces 2·(n0 - 3) <= #E (dimensions outside that
///   range are MDS at any length — e.g. repetition codes — and are not
///   constrained).
pub fn check_bounds(
    code: &Code,
    d: usize,
    d_dual: usize,
    rho: Option<usize>,
    rho_dual: Option<usize>,
) -> Result<Vec<BoundCheck>> {
    let mut out = Vec::new();
    let mut push = |name: &str, pass: bool| {
        out.push(BoundCheck {
            name: name.into(),
            pass,
        })
    };
    let (n, k) = (code.n(), code.k());
    let n0 = code.support_len();
    let m = code.m();
    let g = code.curve().genus();
    let q = code.curve().field().q() as usize;
    let in_window = |v: usize, lo: isize, hi: isize| v as isize >= lo && v as isize <= hi;

    match code.variant() {
        Variant::Plain => push("distance_floor", d + m >= n0),
        _ => push("distance_floor", d + m >= n0 + 1),
    }

    if let Some(r) = rho {
        push("redundancy", r <= n - k);
    }
    if let Some(rd) = rho_dual {
        push("redundancy_dual", rd <= k);
    }

    let extended = matches!(code.variant(), Variant::Extended);
    if extended {
        if let Some(r) = rho {
            push(
                "crag",
                in_window(r, n0 as isize - m as isize - 1, (n0 - m + g) as isize),
            );
        }
        if let Some(rd) = rho_dual {
            push(
                "crag_dual",
                in_window(rd, m as isize - 2 * g as isize, (m - g + 1) as isize),
            );
        }
    }

    let elliptic = matches!(code.curve().family(), Family::Elliptic { .. });
    if elliptic && extended {
        let points = code.curve().point_count() as usize;
        if points >= q + 3 && n0 >= q + 2 && m <= n0 - 2 {
            if let Some(r) = rho {
                push(
                    "elliptic_two_values",
                    in_window(r, n0 as isize - k as isize - 1, (n0 - k) as isize),
                );
            }
            if let Some(rd) = rho_dual {
                push(
                    "elliptic_two_values_dual",
                    in_window(rd, k as isize - 2, k as isize - 1),
                );
            }
        }
        if rho.is_some() && next_degree_plain_mds(code) == Some(true) {
            push(
                "elliptic_next_mds_window",
                in_window(rho.unwrap(), (n0 - k) as isize, (n0 - k + 1) as isize),
            );
        }
    }

    if elliptic && matches!(code.variant(), Variant::Plain) && k >= 2 && k + 2 <= n0 {
        let profile = classify(n, k, d, d_dual);
        if matches!(profile.class, Classification::Mds) {
            let points = code.curve().point_count() as usize;
            push("elliptic_mds_length", 2 * (n0 - 3) <= points);
        }
    }

    Ok(out)
}
