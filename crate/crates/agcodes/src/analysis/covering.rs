//! Exact covering radius by increasing-weight coset enumeration.
//!
//! Every error vector of weight w (support positions in lexicographic
//! order, nonzero values walked as an odometer) is mapped to its syndrome
//! under a full-rank parity-check matrix; syndromes are ticked off in a
//! shared bitmap. The smallest weight at which all q^{n-k} syndromes are
//! covered is the covering radius, independent of worker scheduling. A
//! witness — a vector whose distance from the code equals the radius — is
//! recovered afterwards by rescanning the final weight level against the
//! bitmap as it stood before that level.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct CoverageOptions {
    /// Enumeration threads; counts are schedule-independent either way.
    pub workers: usize,
    /// Memory allowance in bytes for the syndrome bitmap and its one
    /// pre-level snapshot.
    pub budget_bytes: u64,
    /// Stop after this error weight even if syndromes remain uncovered
    /// (the run then fails with the coverage tally). Defaults to n - k,
    /// which always suffices.
    pub weight_cap: Option<usize>,
}

impl Default for CoverageOptions {
    fn default() -> Self {
        CoverageOptions {
            workers: 1,
            budget_bytes: 256 << 20,
            weight_cap: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Coverage {
    /// The covering radius.
    pub rho: usize,
    /// `newly_covered[w]` = syndromes first reached by an error of
    /// weight w; sums to `total_syndromes`.
    pub newly_covered: Vec<u64>,
    pub total_syndromes: u64,
    /// A vector at distance exactly `rho` from the code (a deepest hole).
    pub witness: Vec<Fe>,
}

/// Scaled parity columns and odometer step tables, flattened for the hot
/// loop: everything is indexed by (position, value) pairs.
struct Tables {
    r: usize,
    q: usize,
    /// col[(i*q + v)*r + j] = v · H[j][i].
    col: Vec<u32>,
    /// step[(i*q + v)*r + j] = (v+1 - v) · H[j][i] for v in 1..q-1;
    /// at v = q-1 the slot holds the wrap delta (1 - (q-1)) · H[j][i].
    step: Vec<u32>,
    /// add[a*q + b] = a + b in the field.
    add: Vec<u32>,
    pow_q: Vec<u64>,
}

impl Tables {
    fn build(f: &Field, h: &Matrix) -> Tables {
        let r = h.rows();
        let n = h.cols();
        let q = f.q() as usize;
        let mut col = vec![0u32; n * q * r];
        let mut step = vec![0u32; n * q * r];
        for i in 0..n {
            for v in 0..q {
                let delta = if v + 1 < q {
                    f.sub(Fe(v as u32 + 1), Fe(v as u32))
                } else {
                    f.sub(Fe(1), Fe(v as u32))
                };
                for j in 0..r {
                    let base = (i * q + v) * r + j;
                    col[base] = f.mul(Fe(v as u32), h.get(j, i)).0;
                    step[base] = f.mul(delta, h.get(j, i)).0;
                }
            }
        }
        let mut add = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = f.add(Fe(a as u32), Fe(b as u32)).0;
            }
        }
        let mut pow_q = vec![1u64; r];
        for j in 1..r {
            pow_q[j] = pow_q[j - 1] * q as u64;
        }
        Tables {
            r,
            q,
            col,
            step,
            add,
            pow_q,
        }
    }

    #[inline(always)]
    fn apply(&self, syn: &mut [u32], table: &[u32], pos: usize, v: usize) {
        let slice = &table[(pos * self.q + v) * self.r..][..self.r];
        for (s, &d) in syn.iter_mut().zip(slice) {
            *s = self.add[*s as usize * self.q + d as usize];
        }
    }

    #[inline(always)]
    fn pack(&self, syn: &[u32]) -> u64 {
        syn.iter()
            .zip(&self.pow_q)
            .map(|(&s, &p)| s as u64 * p)
            .sum()
    }
}

/// Visit combinations of w positions out of n in lexicographic order;
/// stop early when the callback returns false.
fn each_combination(n: usize, w: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    debug_assert!(w >= 1 && w <= n);
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != n - w + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..w {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Walk all weight-w error vectors whose support is `pos`, calling `mark`
/// with the syndrome for each; `vals` tracks the current nonzero values.
/// Returns false if `mark` asked to abort.
fn walk_values(
    t: &Tables,
    pos: &[usize],
    mark: &mut impl FnMut(u64, &[u32]) -> bool,
) -> bool {
    let w = pos.len();
    let qm1 = (t.q - 1) as u32;
    let mut vals = vec![1u32; w];
    let mut syn = vec![0u32; t.r];
    for &p in pos {
        t.apply(&mut syn, &t.col, p, 1);
    }
    loop {
        if !mark(t.pack(&syn), &vals) {
            return false;
        }
        let mut d = w;
        loop {
            if d == 0 {
                return true;
            }
            d -= 1;
            let v = vals[d];
            t.apply(&mut syn, &t.step, pos[d], v as usize);
            if v < qm1 {
                vals[d] = v + 1;
                break;
            }
            vals[d] = 1;
        }
    }
}

pub fn covering_radius(parity: &Matrix, opts: &CoverageOptions) -> Result<Coverage> {
    let f: &Arc<Field> = parity.field();
    let (r, n) = (parity.rows(), parity.cols());
    let q = f.q() as u128;
    if r == 0 {
        return Ok(Coverage {
            rho: 0,
            newly_covered: vec![1],
            total_syndromes: 1,
            witness: vec![Fe::ZERO; n],
        });
    }
    if parity.rank() != r {
        return Err(Error::DimensionMismatch(
            "parity-check matrix must have full row rank".into(),
        ));
    }
    if r > n {
        return Err(Error::DimensionMismatch(
            "parity-check matrix has more rows than columns".into(),
        ));
    }
    let total128 = q.checked_pow(r as u32).ok_or(Error::BitmapBudget {
        needed: u128::MAX,
        budget: opts.budget_bytes,
    })?;
    let bytes = total128.div_ceil(8);
    if 2 * bytes > opts.budget_bytes as u128 || total128 > u64::MAX as u128 {
        return Err(Error::BitmapBudget {
            needed: 2 * bytes,
            budget: opts.budget_bytes,
        });
    }
    let total = total128 as u64;
    let workers = opts.workers.max(1);
    let cap = opts.weight_cap.unwrap_or(r).min(n);

    let tables = Tables::build(f, parity);
    let words = (total as usize).div_ceil(64);
    let bitmap: Vec<AtomicU64> = (0..words).map(|_| AtomicU64::new(0)).collect();
    bitmap[0].fetch_or(1, Ordering::Relaxed); // zero syndrome, weight 0
    let mut newly: Vec<u64> = vec![1];
    let mut covered: u64 = 1;
    if covered == total {
        return Ok(Coverage {
            rho: 0,
            newly_covered: newly,
            total_syndromes: total,
            witness: vec![Fe::ZERO; n],
        });
    }

    let found = AtomicU64::new(0); // new syndromes in the current level
    let mut snapshot: Vec<u64> = vec![0; words];
    for w in 1..=cap {
        for (dst, src) in snapshot.iter_mut().zip(&bitmap) {
            *dst = src.load(Ordering::Relaxed);
        }
        found.store(0, Ordering::Relaxed);
        let done = AtomicBool::new(false);
        let missing = total - covered;
        std::thread::scope(|scope| {
            for t in 0..workers {
                let bitmap = &bitmap;
                let tables = &tables;
                let found = &found;
                let done = &done;
                scope.spawn(move || {
                    let mut combo = 0usize;
                    let mut local_new = 0u64;
                    let mut since_poll = 0u32;
                    each_combination(n, w, &mut |pos| {
                        combo += 1;
                        if (combo - 1) % workers != t {
                            return true;
                        }
                        if done.load(Ordering::Relaxed) {
                            return false;
                        }
                        walk_values(tables, pos, &mut |packed, _| {
                            let word = (packed >> 6) as usize;
                            let mask = 1u64 << (packed & 63);
                            if bitmap[word].load(Ordering::Relaxed) & mask == 0
                                && bitmap[word].fetch_or(mask, Ordering::Relaxed) & mask == 0
                            {
                                local_new += 1;
                                if found.fetch_add(1, Ordering::Relaxed) + 1 == missing {
                                    done.store(true, Ordering::Relaxed);
                                    return false;
                                }
                            }
                            since_poll += 1;
                            if since_poll == 1 << 16 {
                                since_poll = 0;
                                if done.load(Ordering::Relaxed) {
                                    return false;
                                }
                            }
                            true
                        })
                    });
                    let _ = local_new;
                });
            }
        });
        let new_here = found.load(Ordering::Relaxed);
        newly.push(new_here);
        covered += new_here;
        if covered == total {
            let witness = find_witness(&tables, n, w, &snapshot)?;
            return Ok(Coverage {
                rho: w,
                newly_covered: newly,
                total_syndromes: total,
                witness,
            });
        }
    }
    Err(Error::CoverageIncomplete {
        cap,
        covered,
        total,
    })
}

/// First weight-w vector (in enumeration order) whose syndrome was not yet
/// covered by weights < w: a deepest hole.
fn find_witness(t: &Tables, n: usize, w: usize, before: &[u64]) -> Result<Vec<Fe>> {
    let mut hole: Option<(Vec<usize>, Vec<u32>)> = None;
    each_combination(n, w, &mut |pos| {
        walk_values(t, pos, &mut |packed, vals| {
            if before[(packed >> 6) as usize] & (1 << (packed & 63)) == 0 {
                hole = Some((pos.to_vec(), vals.to_vec()));
                return false;
            }
            true
        })
    });
    let (pos, vals) = hole.ok_or(Error::CoverageIncomplete {
        cap: w,
        covered: 0,
        total: 0,
    })?;
    let mut witness = vec![Fe::ZERO; n];
    for (&p, &v) in pos.iter().zip(&vals) {
        witness[p] = Fe(v);
    }
    Ok(witness)
}
