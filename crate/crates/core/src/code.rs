//! The cyclic codes C ⊂ D ⊂ E of length q^{2m} − 1 and their trace representation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{consistency, Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    C,
    D,
    E,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::C, Family::D, Family::E];

    /// k as a function of m.
    pub fn dimension(self, m: u32) -> u64 {
        let m = m as u64;
        match self {
            Family::C => m * m,
            Family::D => m * m + 2 * m,
            Family::E => m * m + 2 * m + 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// Γ, in the order 1, [q^m + 1 for odd m], q + 1, q^3 + 1, …, q^{2t−1} + 1.
pub fn build_gamma(q: u64, m: u32) -> Vec<u64> {
    let t = m / 2;
    let mut gamma = vec![1];
    if m % 2 == 1 {
        gamma.push(q.pow(m) + 1);
    }
    gamma.extend((1..=t).map(|i| q.pow(2 * i - 1) + 1));
    gamma
}

/// Shape of the parameter tuple (β, δ_0, δ_1, …, δ_t, b) for one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamLayout {
    pub has_beta: bool,
    pub has_delta0: bool,
    pub t: usize,
    pub has_b: bool,
}

impl ParamLayout {
    pub fn new(family: Family, m: u32) -> ParamLayout {
        ParamLayout {
            has_beta: family != Family::C,
            has_delta0: m % 2 == 1,
            t: (m / 2) as usize,
            has_b: family == Family::E,
        }
    }

    pub fn arity(&self) -> usize {
        self.has_beta as usize + self.has_delta0 as usize + self.t + self.has_b as usize
    }
}

/// One codeword index tuple. Absent entries are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub beta: Option<Elem>,
    pub delta0: Option<Elem>,
    pub deltas: Vec<Elem>,
    pub b: Option<Elem>,
}

impl Params {
    pub fn zero(layout: &ParamLayout) -> Params {
        Params {
            beta: layout.has_beta.then_some(Elem::ZERO),
            delta0: layout.has_delta0.then_some(Elem::ZERO),
            deltas: vec![Elem::ZERO; layout.t],
            b: layout.has_b.then_some(Elem::ZERO),
        }
    }

    /// Reads the canonical sequence (β, δ_0, δ_1, …, δ_t, b), absent entries omitted.
    pub fn from_sequence(layout: &ParamLayout, seq: &[Elem]) -> Result<Params> {
        if seq.len() != layout.arity() {
            return Err(Error::InvalidParameter(format!(
                "expected {} parameters, got {}",
                layout.arity(),
                seq.len()
            )));
        }
        let mut it = seq.iter().copied();
        let beta = layout.has_beta.then(|| it.next().unwrap());
        let delta0 = layout.has_delta0.then(|| it.next().unwrap());
        let deltas = it.by_ref().take(layout.t).collect();
        let b = layout.has_b.then(|| it.next().unwrap());
        Ok(Params { beta, delta0, deltas, b })
    }

    pub fn to_sequence(&self) -> Vec<Elem> {
        self.beta
            .iter()
            .chain(self.delta0.iter())
            .chain(self.deltas.iter())
            .chain(self.b.iter())
            .copied()
            .collect()
    }

    fn layout(&self) -> ParamLayout {
        ParamLayout {
            has_beta: self.beta.is_some(),
            has_delta0: self.delta0.is_some(),
            t: self.deltas.len(),
            has_b: self.b.is_some(),
        }
    }

    /// Coordinatewise sum of two tuples of the same shape.
    pub fn add(&self, other: &Params, ctx: &FieldCtx) -> Result<Params> {
        let a = self.to_sequence();
        let b = other.to_sequence();
        if self.layout() != other.layout() {
            return Err(Error::InvalidParameter("parameter shapes differ".into()));
        }
        let sum: Vec<Elem> = a.iter().zip(&b).map(|(&x, &y)| ctx.add(x, y)).collect();
        Params::from_sequence(&self.layout(), &sum)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    values: Vec<Elem>,
    params: Params,
}

impl Codeword {
    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn weight(&self) -> usize {
        weight(self)
    }
}

/// Hamming weight.
pub fn weight(w: &Codeword) -> usize {
    w.values.iter().filter(|v| !v.is_zero()).count()
}

/// One of C_(q,m), D_(q,m), E_(q,m) over a fixed field F_{q^{2m}}.
#[derive(Clone)]
pub struct CodeSpec {
    ctx: Arc<FieldCtx>,
    family: Family,
    m: u32,
    gamma: Vec<u64>,
    parity_check: Poly,
    layout: ParamLayout,
}

impl fmt::Debug for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_({},{}) [{}, {}]", self.family, self.q(), self.m, self.n(), self.k())
    }
}

impl CodeSpec {
    pub fn build(ctx: Arc<FieldCtx>, family: Family) -> Result<CodeSpec> {
        let m = ctx.m();
        let q = ctx.q();
        let n = ctx.n();
        let gamma = build_gamma(q, m);

        let mut factors = Vec::with_capacity(gamma.len());
        for &u in &gamma {
            let h_u = ctx.minimal_polynomial(ctx.pi_pow(-((u % n) as i64)))?;
            if factors.contains(&h_u) {
                return Err(Error::Degenerate(format!(
                    "h_{u} coincides with another factor of the parity-check polynomial"
                )));
            }
            factors.push(h_u);
        }

        let mut h = Poly::one();
        for (u, h_u) in gamma.iter().zip(&factors) {
            if family == Family::C && *u == 1 {
                continue;
            }
            h = h.mul(h_u, &ctx);
        }
        if family == Family::E {
            if h.eval(Elem::ONE, &ctx).is_zero() {
                return Err(Error::Degenerate(format!(
                    "X − 1 already divides h(X) for (q, m) = ({q}, {m})"
                )));
            }
            let x_minus_one = Poly::from_coeffs(vec![ctx.neg(Elem::ONE), Elem::ONE]);
            h = h.mul(&x_minus_one, &ctx);
        }

        let k = family.dimension(m);
        if h.degree() != Some(k as usize) {
            return Err(consistency(format!(
                "deg h = {:?} but {family}_({q},{m}) should have dimension {k}",
                h.degree()
            )));
        }
        if !h.divides_x_pow_minus_one(n, &ctx) {
            return Err(consistency("parity-check polynomial does not divide X^n − 1"));
        }

        Ok(CodeSpec {
            layout: ParamLayout::new(family, m),
            ctx,
            family,
            m,
            gamma,
            parity_check: h,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn q(&self) -> u64 {
        self.ctx.q()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.ctx.n()
    }

    pub fn k(&self) -> u64 {
        self.family.dimension(self.m)
    }

    pub fn gamma(&self) -> &[u64] {
        &self.gamma
    }

    pub fn parity_check(&self) -> &Poly {
        &self.parity_check
    }

    pub fn layout(&self) -> &ParamLayout {
        &self.layout
    }

    /// Number of codewords q^k.
    pub fn size(&self) -> u128 {
        (self.q() as u128).pow(self.k() as u32)
    }

    /// Exponents u with their trace target, matching the δ order of [`Params`].
    fn delta_exponents(&self) -> Vec<u64> {
        let q = self.q();
        (1..=self.layout.t as u32).map(|i| q.pow(2 * i - 1) + 1).collect()
    }

    fn check_params(&self, params: &Params) -> Result<()> {
        if params.layout() != self.layout {
            return Err(Error::InvalidParameter(format!(
                "parameter tuple shape {:?} does not match {:?}",
                params.layout(),
                self.layout
            )));
        }
        if let Some(d0) = params.delta0 {
            if !self.ctx.in_fqm(d0) {
                return Err(Error::NotInSubfield(format!("δ_0 = {d0} is not in F_(q^{})", self.m)));
            }
        }
        if let Some(b) = params.b {
            if !self.ctx.in_fq(b) {
                return Err(Error::NotInSubfield(format!("b = {b} is not in F_q")));
            }
        }
        Ok(())
    }

    /// Evaluates the trace expression at π^i for every coordinate i, plus b for E.
    pub fn codeword(&self, params: &Params) -> Result<Codeword> {
        self.check_params(params)?;
        let ctx = &*self.ctx;
        let n = ctx.n();
        let qm1 = self.q().pow(self.m) + 1;
        let deltas: Vec<(Elem, u64)> = params
            .deltas
            .iter()
            .copied()
            .zip(self.delta_exponents())
            .filter(|(d, _)| !d.is_zero())
            .collect();

        let term = |coef: Elem, u: u64, i: u64| -> Elem {
            ctx.mul(coef, ctx.pi_pow(((u as u128 * i as u128) % n as u128) as i64))
        };
        let values = (0..n)
            .map(|i| {
                let mut acc = Elem::ZERO;
                if let Some(beta) = params.beta.filter(|b| !b.is_zero()) {
                    acc = ctx.add(acc, ctx.trace_q(term(beta, 1, i)));
                }
                if let Some(d0) = params.delta0.filter(|d| !d.is_zero()) {
                    acc = ctx.add(acc, ctx.trace_qm_raw(term(d0, qm1, i)));
                }
                for &(d, u) in &deltas {
                    acc = ctx.add(acc, ctx.trace_q(term(d, u, i)));
                }
                if let Some(b) = params.b {
                    acc = ctx.add(acc, b);
                }
                acc
            })
            .collect();
        Ok(Codeword { values, params: params.clone() })
    }

    /// c(X)·h(X) ≡ 0 (mod X^n − 1), i.e. the word lies in this cyclic code.
    pub fn contains(&self, values: &[Elem]) -> bool {
        let ctx = &*self.ctx;
        let n = values.len();
        if n as u64 != self.n() {
            return false;
        }
        let h = self.parity_check.coeffs();
        (0..n).all(|j| {
            let mut acc = Elem::ZERO;
            for (k, &hk) in h.iter().enumerate() {
                if !hk.is_zero() {
                    let c = values[(j + n - k % n) % n];
                    acc = ctx.add(acc, ctx.mul(hk, c));
                }
            }
            acc.is_zero()
        })
    }

    /// Parameter tuple number `index` in lexicographic order over the F_p
    /// coordinates of (β, δ_0, …, δ_t, b), first coordinate least significant.
    pub fn params_at(&self, mut index: u128) -> Params {
        let ctx = &*self.ctx;
        let p = ctx.p() as u128;
        let full = ctx.prime_basis();
        let half = ctx.fqm_prime_basis();
        let fq = ctx.fq_elements();
        let mut take = |basis: &[Elem]| {
            let span = p.pow(basis.len() as u32);
            let digit = (index % span) as u64;
            index /= span;
            ctx.combine(basis, digit)
        };
        let beta = self.layout.has_beta.then(|| take(&full));
        let delta0 = self.layout.has_delta0.then(|| take(&half));
        let deltas = (0..self.layout.t).map(|_| take(&full)).collect();
        let b = self.layout.has_b.then(|| {
            let q = fq.len() as u128;
            let digit = (index % q) as usize;
            index /= q;
            fq[digit]
        });
        Params { beta, delta0, deltas, b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: u64, e: u32, m: u32, family: Family) -> CodeSpec {
        let ctx = Arc::new(FieldCtx::new(p, e, 2 * m).unwrap());
        CodeSpec::build(ctx, family).unwrap()
    }

    #[test]
    fn gamma_sets() {
        assert_eq!(build_gamma(2, 2), vec![1, 3]);
        assert_eq!(build_gamma(2, 3), vec![1, 9, 3]);
        assert_eq!(build_gamma(3, 4), vec![1, 4, 28]);
        assert_eq!(build_gamma(5, 1), vec![1, 6]);
    }

    #[test]
    fn dimensions() {
        let d = spec(2, 1, 2, Family::D);
        assert_eq!((d.n(), d.k()), (15, 8));
        assert_eq!(d.parity_check().degree(), Some(8));
        let c = spec(3, 1, 2, Family::C);
        assert_eq!((c.n(), c.k()), (80, 4));
        let e = spec(2, 1, 3, Family::E);
        assert_eq!((e.n(), e.k()), (63, 16));
    }

    #[test]
    fn e_is_degenerate_for_binary_m1() {
        let ctx = Arc::new(FieldCtx::new(2, 1, 2).unwrap());
        assert!(matches!(CodeSpec::build(ctx.clone(), Family::E), Err(Error::Degenerate(_))));
        assert!(CodeSpec::build(ctx, Family::D).is_ok());
    }

    #[test]
    fn zero_and_constant_words() {
        let e = spec(2, 1, 2, Family::E);
        let zero = e.codeword(&Params::zero(e.layout())).unwrap();
        assert_eq!(zero.weight(), 0);
        let mut constant = Params::zero(e.layout());
        constant.b = Some(Elem::ONE);
        assert_eq!(e.codeword(&constant).unwrap().weight(), 15);
    }

    #[test]
    fn d22_lambda_one_has_rank_two_or_four_weight() {
        let d = spec(2, 1, 2, Family::D);
        let params = Params::from_sequence(d.layout(), &[Elem::ZERO, Elem::ONE]).unwrap();
        let w = d.codeword(&params).unwrap().weight();
        assert!(w == 6 || w == 12, "weight {w}");
    }

    #[test]
    fn parameter_validation() {
        let d = spec(2, 1, 3, Family::D);
        let mut params = Params::zero(d.layout());
        params.delta0 = Some(d.ctx().pi());
        assert!(matches!(d.codeword(&params), Err(Error::NotInSubfield(_))));
        assert!(Params::from_sequence(d.layout(), &[Elem::ZERO]).is_err());
        let c = spec(2, 1, 2, Family::C);
        assert!(c.codeword(&Params::zero(d.layout())).is_err());
    }

    #[test]
    fn d32_codeword_weights_are_on_the_spectrum() {
        let d = spec(3, 1, 2, Family::D);
        for idx in (0..d.size()).step_by(97) {
            let w = d.codeword(&d.params_at(idx)).unwrap().weight();
            assert!([0, 45, 48, 54, 57, 72].contains(&w), "weight {w} at {idx}");
        }
    }

    #[test]
    fn generated_words_satisfy_parity_check() {
        for (p, e, m) in [(2, 1, 2), (3, 1, 2), (2, 1, 3), (2, 2, 2)] {
            for family in Family::ALL {
                let code = spec(p, e, m, family);
                for idx in [1u128, 7, 12345 % code.size(), code.size() - 1] {
                    let w = code.codeword(&code.params_at(idx)).unwrap();
                    assert!(code.contains(w.values()), "{code:?} idx {idx}");
                }
            }
        }
        // a word outside the code: a single nonzero coordinate
        let c = spec(2, 1, 2, Family::C);
        let mut bogus = vec![Elem::ZERO; 15];
        bogus[0] = Elem::ONE;
        assert!(!c.contains(&bogus));
    }
}
