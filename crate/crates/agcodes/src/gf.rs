//! Exact arithmetic in GF(p^e), p an odd prime, p^e <= 2^20.
//!
//! Elements are identified by a canonical index: the element
//! c_0 + c_1·x + … + c_{e-1}·x^{e-1} (x = the residue of the modulus root)
//! has index c_0 + c_1·p + … + c_{e-1}·p^{e-1}. Index 0 is zero, index 1 is
//! one. Multiplication runs on discrete-log tables built from a fixed
//! generator θ; for e >= 2 the modulus is chosen so that θ = x, and for
//! prime fields θ is the least primitive root.

use std::sync::Arc;

use crate::{Error, Result};

/// Hard ceiling on the field size; keeps every table desk-scale.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// A field element, stored as its canonical index in `0..q`.
///
/// `Fe` does not remember which field it came from; matrices and curves
/// carry the `Field` and all mixed-field operations are rejected at that
/// level.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// An explicit finite field with precomputed log/antilog tables.
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus, constant term first, length e+1. For e = 1 this is
    /// [0, 1], i.e. the polynomial x.
    modulus: Vec<u32>,
    theta: Fe,
    /// exp[i] = index of θ^i for i in 0..q-1.
    exp: Vec<u32>,
    /// log[idx] = i with θ^i = element idx, for idx in 1..q. log[0] unused.
    log: Vec<u32>,
}

/// Moduli pinned for interoperability: with these, the generator θ = x and
/// every stored artifact or θ-power coordinate means the same element
/// everywhere. (Each is irreducible with x primitive; the constructor
/// re-verifies rather than trusting the table.)
const PINNED_MODULI: &[(u32, u32, &[u32])] = &[
    (3, 2, &[2, 2, 1]), // x^2 + 2x + 2
    (5, 2, &[2, 4, 1]), // x^2 + 4x + 2
    (7, 2, &[3, 6, 1]), // x^2 + 6x + 3
];

/// Build GF(p^e) with the canonical modulus for (p, e).
pub fn make_field(p: u32, e: u32) -> Result<Arc<Field>> {
    Field::new(p, e).map(Arc::new)
}

impl Field {
    pub fn new(p: u32, e: u32) -> Result<Field> {
        check_shape(p, e)?;
        if e == 1 {
            return Field::prime_field(p);
        }
        if let Some((_, _, m)) = PINNED_MODULI
            .iter()
            .find(|(tp, te, _)| *tp == p && *te == e)
        {
            return Field::from_modulus(p, e, m);
        }
        // Untabled extension: scan moduli x^e + c in ascending index of the
        // low-coefficient vector c, and take the first irreducible one that
        // makes x primitive. Deterministic by construction.
        let q = (p as u64).pow(e);
        for low in 0..q {
            let mut modulus = digits(low, p, e as usize);
            modulus.push(1);
            if !is_irreducible(&modulus, p) {
                continue;
            }
            if let Ok(f) = Field::from_modulus(p, e, &modulus) {
                return Ok(f);
            }
        }
        Err(Error::NoPrimitiveModulus { p, e })
    }

    /// Build a field from an explicit modulus (constant term first, monic,
    /// length e+1). The modulus must be irreducible with x primitive; this
    /// is how artifacts reconstruct their field.
    pub fn with_modulus(p: u32, e: u32, modulus: &[u32]) -> Result<Arc<Field>> {
        check_shape(p, e)?;
        if e == 1 {
            if modulus != [0, 1] {
                return Err(Error::BadModulus(format!(
                    "prime field modulus must be [0, 1], got {modulus:?}"
                )));
            }
            return Ok(Arc::new(Field::prime_field(p)?));
        }
        Field::from_modulus(p, e, modulus).map(Arc::new)
    }

    fn prime_field(p: u32) -> Result<Field> {
        let theta = least_primitive_root(p);
        let mut exp = vec![0u32; (p - 1) as usize];
        let mut log = vec![0u32; p as usize];
        let mut t = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = t as u32;
            log[t as usize] = i as u32;
            t = t * theta as u64 % p as u64;
        }
        debug_assert_eq!(t, 1);
        Ok(Field {
            p,
            e: 1,
            q: p,
            modulus: vec![0, 1],
            theta: Fe(theta),
            exp,
            log,
        })
    }

    fn from_modulus(p: u32, e: u32, modulus: &[u32]) -> Result<Field> {
        if modulus.len() != e as usize + 1 {
            return Err(Error::BadModulus(format!(
                "expected {} coefficients for degree {e}, got {}",
                e + 1,
                modulus.len()
            )));
        }
        if modulus[e as usize] != 1 {
            return Err(Error::BadModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus(format!(
                "coefficients must be reduced mod {p}"
            )));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::BadModulus(format!(
                "polynomial {modulus:?} is reducible over GF({p})"
            )));
        }
        let q = (p as u64).pow(e) as u32;
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        // Walk powers of x; x is primitive iff the walk closes only after
        // q-1 steps.
        let mut cur = vec![0u32; e as usize];
        cur[0] = 1;
        for i in 0..(q - 1) as usize {
            let idx = undigits(&cur, p);
            if idx == 1 && i > 0 {
                return Err(Error::BadModulus(format!(
                    "x has order {i} < {} with modulus {modulus:?}, not primitive",
                    q - 1
                )));
            }
            exp[i] = idx;
            log[idx as usize] = i as u32;
            cur = poly_mul_x_mod(&cur, modulus, p);
        }
        if undigits(&cur, p) != 1 {
            return Err(Error::BadModulus(format!(
                "x is not invertible with modulus {modulus:?}"
            )));
        }
        Ok(Field {
            p,
            e,
            q,
            modulus: modulus.to_vec(),
            theta: Fe(p), // index of the bare x
            exp,
            log,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Number of elements, p^e.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// The fixed multiplicative generator.
    pub fn theta(&self) -> Fe {
        self.theta
    }

    /// Monic modulus, constant term first, length e+1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Validate an index and wrap it.
    pub fn el(&self, index: u64) -> Result<Fe> {
        if index < self.q as u64 {
            Ok(Fe(index as u32))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q })
        }
    }

    /// The element θ^n.
    pub fn theta_pow(&self, n: u64) -> Fe {
        Fe(self.exp[(n % (self.q as u64 - 1)) as usize])
    }

    /// The image of an integer under Z -> GF(p^e), i.e. n·1.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.p as i64;
        Fe((n.rem_euclid(p)) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    #[inline]
    fn check(&self, a: Fe) {
        debug_assert!(a.0 < self.q, "element index {} out of range", a.0);
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        if self.e == 1 {
            return Fe((a.0 + b.0) % self.p);
        }
        let (p, mut out, mut pw) = (self.p, 0u32, 1u32);
        let (mut x, mut y) = (a.0, b.0);
        while x != 0 || y != 0 {
            out += (x % p + y % p) % p * pw;
            x /= p;
            y /= p;
            pw *= p;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.check(a);
        if self.e == 1 {
            return Fe((self.p - a.0) % self.p);
        }
        let (p, mut out, mut pw) = (self.p, 0u32, 1u32);
        let mut x = a.0;
        while x != 0 {
            out += (p - x % p) % p * pw;
            x /= p;
            pw *= p;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let n = self.q as u64 - 1;
        let s = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % n;
        Fe(self.exp[s as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        self.check(a);
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        let s = (n - self.log[a.0 as usize]) % n;
        Ok(Fe(self.exp[s as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^n with a^0 = 1 (including 0^0 = 1).
    pub fn pow(&self, a: Fe, n: u64) -> Fe {
        self.check(a);
        if n == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let m = self.q as u64 - 1;
        let s = self.log[a.0 as usize] as u64 % m * (n % m) % m;
        Fe(self.exp[s as usize])
    }

    /// A square root if one exists. Nonzero squares are exactly the
    /// even-log elements (q is odd here).
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        self.check(a);
        if a.0 == 0 {
            return Some(Fe::ZERO);
        }
        let l = self.log[a.0 as usize];
        if l % 2 == 0 {
            Some(Fe(self.exp[(l / 2) as usize]))
        } else {
            None
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(n / gcd(n, self.log[a.0 as usize]))
    }

    /// Render an element for humans: prime-subfield elements print as the
    /// integers they are, everything else as a power of θ.
    pub fn fmt_el(&self, a: Fe) -> String {
        if a.0 < self.p {
            return a.0.to_string();
        }
        match self.log[a.0 as usize] {
            1 => "θ".into(),
            k => format!("θ^{k}"),
        }
    }

    /// Same (p, e, modulus)?
    pub fn same_as(&self, other: &Field) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

fn check_shape(p: u32, e: u32) -> Result<()> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p as u64));
    }
    if e == 0 {
        return Err(Error::BadModulus("extension degree must be positive".into()));
    }
    let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
    if q > MAX_FIELD_SIZE {
        return Err(Error::FieldTooLarge { q });
    }
    Ok(())
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least g generating (Z/p)^*.
fn least_primitive_root(p: u32) -> u32 {
    let factors = prime_factors(p - 1);
    'cand: for g in 2..p {
        for &r in &factors {
            if pow_mod(g, ((p - 1) / r) as u64, p) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("every prime field has a primitive root")
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(b: u32, mut n: u64, p: u32) -> u32 {
    let (mut b, mut acc) = (b as u64 % p as u64, 1u64);
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        n >>= 1;
    }
    acc as u32
}

/// Base-p digits of n, least significant first, padded to `len`.
fn digits(n: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    let mut n = n;
    for slot in out.iter_mut() {
        *slot = (n % p as u64) as u32;
        n /= p as u64;
    }
    out
}

fn undigits(c: &[u32], p: u32) -> u32 {
    let mut out = 0u64;
    for &d in c.iter().rev() {
        out = out * p as u64 + d as u64;
    }
    out as u32
}

/// Multiply a residue (length-e coefficient vector) by x, reducing by the
/// monic modulus.
fn poly_mul_x_mod(a: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = a.len();
    let carry = a[e - 1];
    let mut out = vec![0u32; e];
    for i in 1..e {
        out[i] = a[i - 1];
    }
    if carry != 0 {
        // x^e = -sum modulus[j] x^j
        for j in 0..e {
            let sub = carry as u64 * modulus[j] as u64 % p as u64;
            out[j] = ((out[j] as u64 + p as u64 - sub) % p as u64) as u32;
        }
    }
    out
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    if modulus[deg] != 1 || deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem_is_zero(modulus, &g, p) {
                return false;
            }
        }
    }
    true
}

/// Does g (monic) divide f exactly?
fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r: Vec<u32> = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for j in 0..=dg {
                let sub = lead as u64 * g[j] as u64 % p as u64;
                let slot = &mut r[shift + j];
                *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        debug_assert_eq!(*r.last().unwrap(), 0);
        r.pop();
    }
    r.iter().all(|&c| c == 0)
}
