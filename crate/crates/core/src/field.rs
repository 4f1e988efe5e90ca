//! Arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^s}.
//!
//! The big field is represented once, in the polynomial basis over F_p given
//! by a primitive modulus. An element is stored as its coefficient vector
//! packed into a base-p integer (coefficient of x^i is digit i). Subfields are
//! never represented separately: F_q is the fixed set of x ↦ x^q and, when
//! needed, F_{q^m} the fixed set of x ↦ x^{q^m}.
//!
//! Multiplication, inversion and Frobenius go through full exp/log tables, so
//! the field order is bounded by [`DEFAULT_ORDER_LIMIT`] unless a different
//! limit is configured.

use std::fmt;

use crate::arith::{is_prime, pow_mod, prime_divisors};
use crate::error::{Error, Result};
use crate::poly::Poly;

pub const DEFAULT_ORDER_LIMIT: u64 = 1 << 26;

/// A field element, packed as base-p digits of its polynomial-basis coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    /// The packed constant 1, the same in every field.
    pub const ONE: Elem = Elem(1);

    pub fn raw(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which relative trace to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceLevel {
    /// Tr_{q^s/q}
    QsToQ,
    /// Tr_{q^s/p}
    QsToP,
    /// Tr_{q^m/q}, odd m only
    QmToQ,
    /// Tr_{q/p}
    QToP,
}

/// Immutable description of F_p ⊂ F_q ⊂ F_{q^s} with a fixed primitive element π.
pub struct FieldCtx {
    p: u32,
    e: u32,
    s: u32,
    degree: u32,
    q: u64,
    order: u64,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    // p^k mod n for k = 0..=degree
    frob_exp: Vec<u64>,
    fq: Vec<Elem>,
    fq_index_by_log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("s", &self.s)
            .field("modulus", &self.modulus)
            .finish()
    }
}

fn validate_shape(p: u64, e: u32, s: u32, limit: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::InvalidParameter("extension degree e must be at least 1".into()));
    }
    if s < 2 || s % 2 != 0 {
        return Err(Error::InvalidParameter(format!("s = {s} must be even and at least 2")));
    }
    let degree = e
        .checked_mul(s)
        .ok_or_else(|| Error::InvalidParameter("degree overflow".into()))?;
    let order = (p as u128).checked_pow(degree).unwrap_or(u128::MAX);
    if order > limit as u128 {
        return Err(Error::FieldTooLarge { order, limit });
    }
    Ok(degree)
}

impl FieldCtx {
    /// F_{q^s} with q = p^e, modulus the lex-smallest primitive polynomial of degree e·s.
    pub fn new(p: u64, e: u32, s: u32) -> Result<FieldCtx> {
        Self::with_limit(p, e, s, DEFAULT_ORDER_LIMIT)
    }

    pub fn with_limit(p: u64, e: u32, s: u32, limit: u64) -> Result<FieldCtx> {
        let degree = validate_shape(p, e, s, limit)?;
        let modulus = primitive_polynomials(p as u32, degree)
            .next()
            .ok_or_else(|| Error::InternalConsistency("no primitive polynomial found".into()))?;
        Self::build(p as u32, e, s, degree, modulus)
    }

    /// Same tower, but with a caller-chosen modulus (low-to-high, monic, degree e·s).
    pub fn with_modulus(p: u64, e: u32, s: u32, modulus: Vec<u32>) -> Result<FieldCtx> {
        let degree = validate_shape(p, e, s, DEFAULT_ORDER_LIMIT)?;
        if modulus.len() != degree as usize + 1
            || modulus[degree as usize] != 1
            || modulus.iter().any(|&c| c >= p as u32)
        {
            return Err(Error::InvalidParameter(format!(
                "modulus must be monic of degree {degree} with coefficients below {p}"
            )));
        }
        if !is_primitive(p as u32, &modulus) {
            return Err(Error::InvalidParameter("modulus is not primitive".into()));
        }
        Self::build(p as u32, e, s, degree, modulus)
    }

    fn build(p: u32, e: u32, s: u32, degree: u32, modulus: Vec<u32>) -> Result<FieldCtx> {
        let order = (p as u64).pow(degree);
        let n = order - 1;
        let q = (p as u64).pow(e);

        // x^degree ≡ -(lower part): reduction offset for each possible overflow digit.
        let reduce: Vec<u32> = (0..p)
            .map(|c| {
                let mut acc = 0u64;
                let mut place = 1u64;
                for &m in &modulus[..degree as usize] {
                    let d = (p - (c as u64 * m as u64 % p as u64) as u32) % p;
                    acc += d as u64 * place;
                    place *= p as u64;
                }
                acc as u32
            })
            .collect();

        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![u32::MAX; order as usize];
        let mut v: u32 = 1;
        for k in 0..n {
            if log[v as usize] != u32::MAX {
                return Err(Error::InternalConsistency(format!(
                    "modulus {modulus:?} is not primitive (cycle of length {k})"
                )));
            }
            log[v as usize] = k as u32;
            exp.push(v);
            let shifted = v as u64 * p as u64;
            let top = (shifted / order) as u32;
            let low = (shifted % order) as u32;
            v = if top == 0 { low } else { add_packed(p, low, reduce[top as usize]) };
        }
        if v != 1 {
            return Err(Error::InternalConsistency("π does not have full order".into()));
        }

        let frob_exp = (0..=degree).map(|k| pow_mod(p as u64, k as u64, n)).collect();

        let mut ctx = FieldCtx {
            p,
            e,
            s,
            degree,
            q,
            order,
            modulus,
            exp,
            log,
            frob_exp,
            fq: Vec::new(),
            fq_index_by_log: Vec::new(),
        };

        // F_q in index order: coordinates over the basis g^0..g^{e-1}, g = π^{n/(q-1)}.
        let g = ctx.pi_pow((n / (q - 1)) as i64);
        let basis: Vec<Elem> = (0..e).map(|k| ctx.pow(g, k as u64)).collect();
        let fq: Vec<Elem> = (0..q).map(|idx| ctx.combine(&basis, idx)).collect();
        let step = n / (q - 1);
        let mut by_log = vec![u32::MAX; (q - 1) as usize];
        for (idx, x) in fq.iter().enumerate() {
            if !x.is_zero() {
                let l = ctx.log[x.0 as usize] as u64;
                debug_assert_eq!(l % step, 0);
                by_log[(l / step) as usize] = idx as u32;
            }
        }
        if by_log.contains(&u32::MAX) {
            return Err(Error::InternalConsistency("F_q basis does not span F_q".into()));
        }
        ctx.fq = fq;
        ctx.fq_index_by_log = by_log;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Half of s.
    pub fn m(&self) -> u32 {
        self.s / 2
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Extension degree of F_{q^s} over F_p.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// |F_{q^s}|
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Multiplicative group order q^s − 1.
    pub fn n(&self) -> u64 {
        self.order - 1
    }

    /// Modulus coefficients, low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elem(&self, raw: u32) -> Option<Elem> {
        ((raw as u64) < self.order).then_some(Elem(raw))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order as u32).map(Elem)
    }

    pub fn coefficients(&self, x: Elem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Elem {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = acc * self.p as u64 + (c % self.p) as u64;
        }
        Elem((acc % self.order) as u32)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The prime-field element c mod p.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p as i64) as u32)
    }

    /// π, the class of the indeterminate.
    pub fn pi(&self) -> Elem {
        Elem(self.exp[1])
    }

    /// π^k for any integer k.
    pub fn pi_pow(&self, k: i64) -> Elem {
        Elem(self.exp[k.rem_euclid(self.n() as i64) as usize])
    }

    /// Discrete log to base π; `None` for zero.
    pub fn log(&self, x: Elem) -> Option<u64> {
        (!x.is_zero()).then(|| self.log[x.0 as usize] as u64)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            Elem(add_packed(self.p, a.0, b.0))
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut v = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while v != 0 {
            let d = v % p;
            out += ((p - d) % p) * place;
            v /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem(0);
        }
        let n = self.n();
        let k = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        Elem(self.exp[(k % n) as usize])
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        let n = self.n();
        Some(Elem(self.exp[((n - self.log[a.0 as usize] as u64) % n) as usize]))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem(1);
        }
        if a.is_zero() {
            return Elem(0);
        }
        let n = self.n() as u128;
        let l = self.log[a.0 as usize] as u128 * (k as u128 % n) % n;
        Elem(self.exp[l as usize])
    }

    /// x ↦ x^{p^k}
    pub fn frobenius_p(&self, x: Elem, k: u32) -> Elem {
        if x.is_zero() {
            return x;
        }
        let n = self.n();
        let k = k % self.degree;
        let l = self.log[x.0 as usize] as u128 * self.frob_exp[k as usize] as u128 % n as u128;
        Elem(self.exp[l as usize])
    }

    /// x ↦ x^{q^k}
    pub fn frobenius_q(&self, x: Elem, k: u32) -> Elem {
        self.frobenius_p(x, (k % self.s) * self.e)
    }

    /// True if x lies in the subfield of F_p-degree `d` (d must divide e·s).
    pub fn in_subfield(&self, x: Elem, d: u32) -> bool {
        self.degree % d == 0 && self.frobenius_p(x, d) == x
    }

    pub fn in_fq(&self, x: Elem) -> bool {
        self.in_subfield(x, self.e)
    }

    /// Membership in F_{q^m}, by the fixed-point test x^{q^m} = x.
    pub fn in_fqm(&self, x: Elem) -> bool {
        self.in_subfield(x, self.e * self.m())
    }

    pub fn trace(&self, x: Elem, level: TraceLevel) -> Result<Elem> {
        let m = self.m();
        let (step, count) = match level {
            TraceLevel::QsToQ => (self.e, self.s),
            TraceLevel::QsToP => (1, self.degree),
            TraceLevel::QmToQ => {
                if m % 2 == 0 {
                    return Err(Error::BadTraceLevel(format!("Tr_(q^m/q) requested with even m = {m}")));
                }
                if !self.in_fqm(x) {
                    return Err(Error::NotInSubfield(format!("{x} is not in F_(q^{m})")));
                }
                (self.e, m)
            }
            TraceLevel::QToP => {
                if !self.in_fq(x) {
                    return Err(Error::NotInSubfield(format!("{x} is not in F_q")));
                }
                (1, self.e)
            }
        };
        Ok(self.trace_raw(x, step, count))
    }

    /// Σ_{i<count} x^{p^{step·i}}, no subfield checks.
    pub(crate) fn trace_raw(&self, x: Elem, step: u32, count: u32) -> Elem {
        if x.is_zero() {
            return x;
        }
        let mut acc = Elem(0);
        for i in 0..count {
            acc = self.add(acc, self.frobenius_p(x, step * i));
        }
        acc
    }

    /// Tr_{q^s/q}
    pub fn trace_q(&self, x: Elem) -> Elem {
        self.trace_raw(x, self.e, self.s)
    }

    /// Tr_{q/p} of an F_q element, as an integer in 0..p.
    pub fn trace_q_to_p_digit(&self, x: Elem) -> u32 {
        self.trace_raw(x, 1, self.e).0
    }

    /// Tr_{q^m/q} without the parity/membership checks of [`FieldCtx::trace`].
    pub(crate) fn trace_qm_raw(&self, x: Elem) -> Elem {
        self.trace_raw(x, self.e, self.m())
    }

    /// Monic minimal polynomial of x over F_q.
    pub fn minimal_polynomial(&self, x: Elem) -> Result<Poly> {
        let mut conjugates = vec![x];
        let mut c = self.frobenius_q(x, 1);
        while c != x {
            conjugates.push(c);
            c = self.frobenius_q(c, 1);
        }
        let mut acc = Poly::one();
        for c in conjugates {
            acc = acc.mul(&Poly::from_coeffs(vec![self.neg(c), self.one()]), self);
        }
        if acc.coeffs().iter().any(|&a| !self.in_fq(a)) {
            return Err(Error::InternalConsistency(
                "minimal polynomial has coefficients outside F_q".into(),
            ));
        }
        Ok(acc)
    }

    /// F_q in index order. Index i ↔ coordinates (base-p digits of i) over the
    /// basis g^0, …, g^{e−1} with g = π^{(q^s−1)/(q−1)}; for e = 1 this is just i.
    pub fn fq_elements(&self) -> &[Elem] {
        &self.fq
    }

    /// Inverse of [`FieldCtx::fq_elements`]. Index addition is digit-wise mod p.
    pub fn fq_index(&self, x: Elem) -> Option<usize> {
        if x.is_zero() {
            return Some(0);
        }
        let step = self.n() / (self.q - 1);
        let l = self.log[x.0 as usize] as u64;
        (l % step == 0).then(|| self.fq_index_by_log[(l / step) as usize] as usize)
    }

    /// Polynomial basis 1, π, …, π^{e·s−1} of F_{q^s} over F_p.
    pub fn prime_basis(&self) -> Vec<Elem> {
        (0..self.degree as u64).map(|k| Elem(self.exp[k as usize])).collect()
    }

    /// Basis γ^0, …, γ^{e·m−1} of F_{q^m} over F_p, γ = π^{q^m+1}.
    pub fn fqm_prime_basis(&self) -> Vec<Elem> {
        let m = self.m();
        let qm = self.q.pow(m);
        let gamma = self.pi_pow((self.n() / (qm - 1)) as i64);
        (0..(self.e * m) as u64).map(|k| self.pow(gamma, k)).collect()
    }

    /// Σ digit_k(index) · basis_k with base-p digits, digit 0 least significant.
    pub fn combine(&self, basis: &[Elem], mut index: u64) -> Elem {
        let mut acc = Elem(0);
        for &b in basis {
            let d = index % self.p as u64;
            index /= self.p as u64;
            for _ in 0..d {
                acc = self.add(acc, b);
            }
        }
        acc
    }
}

fn add_packed(p: u32, mut a: u32, mut b: u32) -> u32 {
    let mut out = 0u32;
    let mut place = 1u32;
    while a != 0 || b != 0 {
        let d = (a % p + b % p) % p;
        out += d * place;
        a /= p;
        b /= p;
        place = place.wrapping_mul(p);
    }
    out
}

/// Smallest ℓ ≥ 1 with q^ℓ·u ≡ u (mod n).
pub fn coset_size(u: i64, n: i64, q: i64) -> Result<u64> {
    if n <= 0 {
        return Err(Error::InvalidParameter(format!("modulus n = {n} must be positive")));
    }
    let n = n as i128;
    let u = (u as i128).rem_euclid(n);
    let q = (q as i128).rem_euclid(n);
    let mut x = u * q % n;
    let mut ell = 1u64;
    while x != u {
        x = x * q % n;
        ell += 1;
        if ell as i128 > n {
            return Err(Error::InvalidParameter("q is not invertible modulo n".into()));
        }
    }
    Ok(ell)
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], f: &[u32]) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..d {
            let sub = c * f[i] as u64 % p;
            prod[k - d + i] = (prod[k - d + i] + p - sub) % p;
        }
    }
    prod.truncate(d);
    prod
}

fn x_pow_mod(p: u64, mut k: u64, f: &[u32]) -> Vec<u64> {
    let d = f.len() - 1;
    let mut acc = vec![0u64; d];
    acc[0] = 1;
    let mut base = vec![0u64; d];
    if d == 1 {
        base[0] = (p - f[0] as u64 % p) % p;
    } else {
        base[1] = 1;
    }
    while k > 0 {
        if k & 1 == 1 {
            acc = poly_mulmod(p, &acc, &base, f);
        }
        base = poly_mulmod(p, &base, &base, f);
        k >>= 1;
    }
    acc
}

/// x has order exactly p^d − 1 modulo the monic `f` (which forces irreducibility).
fn is_primitive(p: u32, f: &[u32]) -> bool {
    let d = f.len() - 1;
    if d == 0 || f[0] == 0 {
        return false;
    }
    let p = p as u64;
    let n = p.pow(d as u32) - 1;
    let is_one = |v: &[u64]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
    if !is_one(&x_pow_mod(p, n, f)) {
        return false;
    }
    prime_divisors(n)
        .into_iter()
        .all(|r| !is_one(&x_pow_mod(p, n / r, f)))
}

/// All monic primitive polynomials of the given degree over F_p in lexicographic
/// order, where the lower coefficients c_0..c_{d−1} are read as base-p digits of
/// an integer with c_0 least significant. Coefficients are returned low-to-high.
pub fn primitive_polynomials(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).filter_map(move |idx| {
        let mut v = idx;
        let mut f: Vec<u32> = (0..degree)
            .map(|_| {
                let d = (v % p as u64) as u32;
                v /= p as u64;
                d
            })
            .collect();
        f.push(1);
        is_primitive(p, &f).then_some(f)
    })
}
