//! The quadratic forms Q_Λ (even m) and P_Δ (odd m) over F_q, their rank via
//! the bilinear radical, and brute-force exponential sums.
//!
//! Every character sum here is a rational integer. Sums are accumulated as
//! counts of Tr_{q/p}(·) values in F_p and contracted against the p-th roots
//! of unity symbolically: Σ_c N_c ω^c is rational exactly when N_1 = … = N_{p−1},
//! and then equals N_0 − N_1.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{consistency, Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::linalg::matrix_rank;

/// Upper bound on brute-force evaluations for one sum or histogram.
pub const DEFAULT_SUM_BUDGET: u128 = 1 << 36;

/// Exact value → count map for integer-valued sums.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SumHistogram(BTreeMap<i64, BigUint>);

impl SumHistogram {
    pub fn new() -> SumHistogram {
        SumHistogram(BTreeMap::new())
    }

    pub fn add(&mut self, value: i64, count: impl Into<BigUint>) {
        let count = count.into();
        if count.is_zero() {
            return;
        }
        *self.0.entry(value).or_default() += count;
    }

    pub fn get(&self, value: i64) -> BigUint {
        self.0.get(&value).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.0.iter().map(|(&v, c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<C: Into<BigUint>> FromIterator<(i64, C)> for SumHistogram {
    fn from_iter<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut h = SumHistogram::new();
        for (v, c) in iter {
            h.add(v, c);
        }
        h
    }
}

/// Σ_{c ∈ F_p} counts[c]·ω_p^c as an exact integer.
pub fn contract_roots_of_unity(counts: &[u64]) -> Result<i64> {
    let first = counts.get(1).copied().unwrap_or(0);
    if counts.iter().skip(1).any(|&c| c != first) {
        return Err(consistency(format!("character sum with counts {counts:?} is not rational")));
    }
    Ok(counts[0] as i64 - first as i64)
}

/// ν(0) = q − 1, ν(ζ) = −1 otherwise.
pub fn nu(q: u64, zeta_is_zero: bool) -> i64 {
    if zeta_is_zero {
        q as i64 - 1
    } else {
        -1
    }
}

/// Quadratic character of F_q for odd q (0 at zero).
pub fn eta(ctx: &FieldCtx, x: Elem) -> Result<i32> {
    if ctx.p() == 2 {
        return Err(Error::InvalidParameter("η is only defined for odd q".into()));
    }
    if !ctx.in_fq(x) {
        return Err(Error::NotInSubfield(format!("{x} is not in F_q")));
    }
    if x.is_zero() {
        return Ok(0);
    }
    let step = ctx.n() / (ctx.q() - 1);
    let l = ctx.log(x).unwrap() / step;
    Ok(if l % 2 == 0 { 1 } else { -1 })
}

/// Coefficients Λ = (λ_1..λ_t) for even m, or Δ = (δ_0, δ_1..δ_t) for odd m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormCoeffs {
    pub delta0: Option<Elem>,
    pub deltas: Vec<Elem>,
}

/// One quadratic form with memoized rank and type sign.
#[derive(Debug)]
pub struct QuadForm {
    ctx: Arc<FieldCtx>,
    coeffs: FormCoeffs,
    // q^{2i−1} + 1 for i = 1..t
    exponents: Vec<u64>,
    budget: u128,
    rank: OnceLock<u32>,
    epsilon: OnceLock<i8>,
}

impl Clone for QuadForm {
    fn clone(&self) -> Self {
        QuadForm {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.clone(),
            exponents: self.exponents.clone(),
            budget: self.budget,
            rank: self.rank.clone(),
            epsilon: self.epsilon.clone(),
        }
    }
}

impl QuadForm {
    pub fn new(ctx: Arc<FieldCtx>, coeffs: FormCoeffs) -> Result<QuadForm> {
        let m = ctx.m();
        let t = (m / 2) as usize;
        if coeffs.deltas.len() != t {
            return Err(Error::InvalidParameter(format!("expected {t} coefficients in F_(q^s)")));
        }
        match (m % 2 == 1, coeffs.delta0) {
            (true, Some(d0)) if !ctx.in_fqm(d0) => {
                return Err(Error::NotInSubfield(format!("δ_0 = {d0} is not in F_(q^{m})")));
            }
            (true, None) => return Err(Error::InvalidParameter("odd m needs δ_0".into())),
            (false, Some(_)) => return Err(Error::InvalidParameter("even m has no δ_0".into())),
            _ => {}
        }
        let q = ctx.q();
        let exponents = (1..=t as u32).map(|i| q.pow(2 * i - 1) + 1).collect();
        Ok(QuadForm {
            ctx,
            coeffs,
            exponents,
            budget: DEFAULT_SUM_BUDGET,
            rank: OnceLock::new(),
            epsilon: OnceLock::new(),
        })
    }

    /// The zero form for this field.
    pub fn zero(ctx: Arc<FieldCtx>) -> QuadForm {
        let m = ctx.m();
        let coeffs = FormCoeffs {
            delta0: (m % 2 == 1).then_some(Elem::ZERO),
            deltas: vec![Elem::ZERO; (m / 2) as usize],
        };
        QuadForm::new(ctx, coeffs).expect("zero form is well formed")
    }

    pub fn with_budget(mut self, budget: u128) -> QuadForm {
        self.budget = budget;
        self
    }

    pub fn coeffs(&self) -> &FormCoeffs {
        &self.coeffs
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    fn check_budget(&self, estimate: u128) -> Result<()> {
        if estimate > self.budget {
            return Err(Error::BudgetExceeded { estimate, budget: self.budget });
        }
        Ok(())
    }

    /// Q(x) ∈ F_q.
    pub fn eval(&self, x: Elem) -> Elem {
        let ctx = &*self.ctx;
        if x.is_zero() {
            return Elem::ZERO;
        }
        let mut acc = Elem::ZERO;
        if let Some(d0) = self.coeffs.delta0.filter(|d| !d.is_zero()) {
            let qm1 = ctx.q().pow(ctx.m()) + 1;
            acc = ctx.add(acc, ctx.trace_qm_raw(ctx.mul(d0, ctx.pow(x, qm1))));
        }
        for (&d, &u) in self.coeffs.deltas.iter().zip(&self.exponents) {
            if !d.is_zero() {
                acc = ctx.add(acc, ctx.trace_q(ctx.mul(d, ctx.pow(x, u))));
            }
        }
        acc
    }

    /// B(x, y) = Q(x + y) − Q(x) − Q(y).
    pub fn bilinear(&self, x: Elem, y: Elem) -> Elem {
        let ctx = &*self.ctx;
        ctx.sub(ctx.sub(self.eval(ctx.add(x, y)), self.eval(x)), self.eval(y))
    }

    /// Codimension over F_q of the radical of B, with 1, π, …, π^{s−1} as F_q-basis.
    pub fn rank(&self) -> u32 {
        *self.rank.get_or_init(|| {
            let ctx = &*self.ctx;
            let s = ctx.s() as i64;
            let basis: Vec<Elem> = (0..s).map(|i| ctx.pi_pow(i)).collect();
            let gram = basis
                .iter()
                .map(|&x| basis.iter().map(|&y| self.bilinear(x, y)).collect())
                .collect();
            matrix_rank(ctx, gram) as u32
        })
    }

    /// T_Q = Σ_x ω_p^{Tr_{q/p}(Q(x))}.
    pub fn big_t(&self) -> Result<i64> {
        let ctx = &*self.ctx;
        self.check_budget(ctx.order() as u128)?;
        let mut counts = vec![0u64; ctx.p() as usize];
        for x in ctx.elements() {
            counts[ctx.trace_q_to_p_digit(self.eval(x)) as usize] += 1;
        }
        contract_roots_of_unity(&counts)
    }

    /// Sign of T_Q. Zero T_Q is reported as an inconsistency.
    pub fn epsilon(&self) -> Result<i8> {
        if let Some(&e) = self.epsilon.get() {
            return Ok(e);
        }
        let t = self.big_t()?;
        if t == 0 {
            return Err(consistency("T_Q = 0 for a form that should have nonzero T_Q"));
        }
        let e = if t > 0 { 1 } else { -1 };
        Ok(*self.epsilon.get_or_init(|| e))
    }

    /// |T_Q| = q^{s − r/2} and sign (−1)^{r/2}; returns the measured (r, ε).
    pub fn check_rank_against_t(&self) -> Result<(u32, i8)> {
        let r = self.rank();
        if r % 2 == 1 {
            return Err(consistency(format!("odd rank {r}")));
        }
        let t = self.big_t()?;
        let q = self.ctx.q() as i64;
        let expect = q.pow(self.ctx.s() - r / 2);
        let eps = self.epsilon()?;
        if t.abs() != expect {
            return Err(consistency(format!("|T_Q| = {} but rank {r} predicts {expect}", t.abs())));
        }
        if eps != if (r / 2) % 2 == 0 { 1 } else { -1 } {
            return Err(consistency(format!("ε = {eps} differs from (−1)^(r/2) at r = {r}")));
        }
        Ok((r, eps))
    }

    fn all_values(&self) -> Vec<Elem> {
        self.ctx.elements().map(|x| self.eval(x)).collect()
    }

    fn trace_table(&self) -> Vec<Elem> {
        let ctx = &*self.ctx;
        (0..ctx.n() as i64).map(|k| ctx.trace_q(ctx.pi_pow(k))).collect()
    }

    /// |{x : Q(x) + Tr_{q^s/q}(βx) = ζ}|.
    pub fn count_solutions(&self, beta: Elem, zeta: Elem) -> Result<u64> {
        let ctx = &*self.ctx;
        if !ctx.in_fq(zeta) {
            return Err(Error::NotInSubfield(format!("ζ = {zeta} is not in F_q")));
        }
        self.check_budget(ctx.order() as u128)?;
        Ok(ctx
            .elements()
            .filter(|&x| ctx.add(self.eval(x), ctx.trace_q(ctx.mul(beta, x))) == zeta)
            .count() as u64)
    }

    /// N_{Q,β}(ζ) for every β, one pass over x per β.
    fn solution_counts(&self, zeta: Elem) -> Result<Vec<u64>> {
        let ctx = &*self.ctx;
        let order = ctx.order();
        self.check_budget(order as u128 * order as u128)?;
        let values = self.all_values();
        let tr = self.trace_table();
        let n = ctx.n();
        let mut out = Vec::with_capacity(order as usize);
        for beta in ctx.elements() {
            let count = match ctx.log(beta) {
                None => values.iter().filter(|&&v| v == zeta).count(),
                Some(lb) => ctx
                    .elements()
                    .zip(&values)
                    .filter(|&(x, &v)| {
                        let lin = ctx.log(x).map_or(Elem::ZERO, |lx| tr[((lb + lx) % n) as usize]);
                        ctx.add(v, lin) == zeta
                    })
                    .count(),
            };
            out.push(count as u64);
        }
        Ok(out)
    }

    /// S_Q(β) = q·N_{Q,β}(0) − q^s over all β.
    pub fn s_histogram(&self) -> Result<SumHistogram> {
        let q = self.ctx.q() as i64;
        let qs = self.ctx.order() as i64;
        let counts = self.solution_counts(Elem::ZERO)?;
        Ok(counts.into_iter().map(|c| (q * c as i64 - qs, 1u32)).collect())
    }

    /// R_{Q,b}(β) = q·N_{Q,β}(−b) − q^s over all β, for b ∈ F_q^*.
    pub fn r_histogram(&self, b: Elem) -> Result<SumHistogram> {
        let ctx = &*self.ctx;
        if b.is_zero() {
            return Err(Error::InvalidParameter("b must be nonzero; use s_histogram".into()));
        }
        if !ctx.in_fq(b) {
            return Err(Error::NotInSubfield(format!("b = {b} is not in F_q")));
        }
        let q = ctx.q() as i64;
        let qs = ctx.order() as i64;
        let counts = self.solution_counts(ctx.neg(b))?;
        Ok(counts.into_iter().map(|c| (q * c as i64 - qs, 1u32)).collect())
    }

    /// Σ_{a ∈ F_q^*} Σ_x ω^{Tr_{q/p}(a(Q(x) + Tr(βx) + b))}, evaluated from its
    /// definition rather than through the solution-count identity.
    pub fn character_sum(&self, beta: Elem, b: Elem) -> Result<i64> {
        let ctx = &*self.ctx;
        self.check_budget(ctx.order() as u128)?;
        let fq = ctx.fq_elements();
        let mut by_value = vec![0u64; fq.len()];
        for x in ctx.elements() {
            let v = ctx.add(ctx.add(self.eval(x), ctx.trace_q(ctx.mul(beta, x))), b);
            by_value[ctx.fq_index(v).ok_or_else(|| consistency("Q(x) outside F_q"))?] += 1;
        }
        let mut counts = vec![0u64; ctx.p() as usize];
        for &a in fq.iter().filter(|a| !a.is_zero()) {
            for (idx, &c) in by_value.iter().enumerate() {
                counts[ctx.trace_q_to_p_digit(ctx.mul(a, fq[idx])) as usize] += c;
            }
        }
        contract_roots_of_unity(&counts)
    }
}

/// Parameter space F_q-dimension m²: F_{q^m} × F_{q^s}^t (odd m) or F_{q^s}^t (even m).
#[derive(Clone, Debug)]
pub struct FormSpace {
    ctx: Arc<FieldCtx>,
    basis: Vec<FormCoeffs>,
}

impl FormSpace {
    pub fn new(ctx: Arc<FieldCtx>) -> FormSpace {
        let m = ctx.m();
        let t = (m / 2) as usize;
        let zero = FormCoeffs {
            delta0: (m % 2 == 1).then_some(Elem::ZERO),
            deltas: vec![Elem::ZERO; t],
        };
        let mut basis = Vec::new();
        if m % 2 == 1 {
            for b in ctx.fqm_prime_basis() {
                basis.push(FormCoeffs { delta0: Some(b), ..zero.clone() });
            }
        }
        let full = ctx.prime_basis();
        for j in 0..t {
            for &b in &full {
                let mut c = zero.clone();
                c.deltas[j] = b;
                basis.push(c);
            }
        }
        FormSpace { ctx, basis }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// F_p basis in enumeration order (first vector is the least significant digit).
    pub fn prime_basis(&self) -> &[FormCoeffs] {
        &self.basis
    }

    /// q^{m²}
    pub fn len(&self) -> u128 {
        (self.ctx.p() as u128).pow(self.basis.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs_at(&self, mut index: u128) -> FormCoeffs {
        let ctx = &*self.ctx;
        let p = ctx.p() as u128;
        let m = ctx.m();
        let mut acc = FormCoeffs {
            delta0: (m % 2 == 1).then_some(Elem::ZERO),
            deltas: vec![Elem::ZERO; (m / 2) as usize],
        };
        for b in &self.basis {
            let d = (index % p) as u32;
            index /= p;
            for _ in 0..d {
                if let (Some(a), Some(x)) = (acc.delta0.as_mut(), b.delta0) {
                    *a = ctx.add(*a, x);
                }
                for (a, &x) in acc.deltas.iter_mut().zip(&b.deltas) {
                    *a = ctx.add(*a, x);
                }
            }
        }
        acc
    }

    pub fn form_at(&self, index: u128) -> QuadForm {
        QuadForm::new(self.ctx.clone(), self.coeffs_at(index)).expect("basis combination is valid")
    }

    pub fn iter(&self) -> impl Iterator<Item = QuadForm> + '_ {
        (0..self.len()).map(|i| self.form_at(i))
    }
}

fn qpow(q: u64, k: u32) -> i128 {
    (q as i128).pow(k)
}

fn exact_div(num: i128, den: i128) -> Result<u64> {
    if num % den != 0 || num < 0 {
        return Err(consistency(format!("{num}/{den} is not a nonnegative integer")));
    }
    Ok((num / den) as u64)
}

/// Value distribution of S_Q(β) over β for a form of even rank r and sign ε.
pub fn s_distribution(q: u64, s: u32, r: u32, eps: i8) -> Result<SumHistogram> {
    if r % 2 == 1 || r > s {
        return Err(Error::InvalidParameter(format!("rank {r} must be even and at most {s}")));
    }
    let e = eps as i128;
    let qi = q as i128;
    let half = r / 2;
    let big = qpow(q, s - half);
    let rows = [
        (0i128, qpow(q, s) - qpow(q, r)),
        (e * (qi - 1) * big, exact_div(qpow(q, r) + e * (qi - 1) * qpow(q, half), qi)? as i128),
        (-e * big, exact_div((qpow(q, r) - e * qpow(q, half)) * (qi - 1), qi)? as i128),
    ];
    to_histogram(&rows)
}

/// Value distribution of R_{Q,b}(β) over β for fixed b ≠ 0.
pub fn r_distribution(q: u64, s: u32, r: u32, eps: i8) -> Result<SumHistogram> {
    if r % 2 == 1 || r > s {
        return Err(Error::InvalidParameter(format!("rank {r} must be even and at most {s}")));
    }
    let e = eps as i128;
    let qi = q as i128;
    let half = r / 2;
    let big = qpow(q, s - half);
    let rows = [
        (0i128, qpow(q, s) - qpow(q, r)),
        (e * (qi - 1) * big, exact_div(qpow(q, r) - e * qpow(q, half), qi)? as i128),
        (-e * big, exact_div(qpow(q, r + 1) - qpow(q, r) + e * qpow(q, half), qi)? as i128),
    ];
    to_histogram(&rows)
}

fn to_histogram(rows: &[(i128, i128)]) -> Result<SumHistogram> {
    let mut h = SumHistogram::new();
    for &(v, c) in rows {
        let v = v.to_i64().ok_or_else(|| consistency("sum value overflow"))?;
        h.add(v, BigUint::from(c as u128));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(p: u64, e: u32, m: u32) -> FormSpace {
        FormSpace::new(Arc::new(FieldCtx::new(p, e, 2 * m).unwrap()))
    }

    fn rank_counts(fs: &FormSpace) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for f in fs.iter() {
            *out.entry(f.rank()).or_default() += 1;
        }
        out
    }

    #[test]
    fn zero_form() {
        let ctx = Arc::new(FieldCtx::new(3, 1, 4).unwrap());
        let z = QuadForm::zero(ctx.clone());
        assert_eq!(z.eval(ctx.pi()), Elem::ZERO);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.big_t().unwrap(), 81);
        assert_eq!(z.epsilon().unwrap(), 1);
        assert_eq!(z.count_solutions(Elem::ZERO, Elem::ZERO).unwrap(), 81);
        assert_eq!(z.count_solutions(ctx.pi(), ctx.from_int(2)).unwrap(), 27);
        let s = z.s_histogram().unwrap();
        assert_eq!(s, [(2 * 81, 1u32), (0, 80)].into_iter().collect());
        let r = z.r_histogram(Elem::ONE).unwrap();
        assert_eq!(r, [(-81, 1u32), (0, 80)].into_iter().collect());
    }

    #[test]
    fn eval_q22_at_pi() {
        let fs = space(2, 1, 2);
        let ctx = fs.ctx().clone();
        let f = QuadForm::new(ctx.clone(), FormCoeffs { delta0: None, deltas: vec![Elem::ONE] }).unwrap();
        assert_eq!(f.eval(ctx.pi()), Elem::ONE);
        assert_eq!(f.eval(Elem::ZERO), Elem::ZERO);
    }

    #[test]
    fn rank_counts_small() {
        assert_eq!(rank_counts(&space(2, 1, 2)), BTreeMap::from([(0, 1), (2, 5), (4, 10)]));
        assert_eq!(rank_counts(&space(3, 1, 2)), BTreeMap::from([(0, 1), (2, 20), (4, 60)]));
        assert_eq!(
            rank_counts(&space(2, 1, 3)),
            BTreeMap::from([(0, 1), (2, 21), (4, 210), (6, 280)])
        );
    }

    #[test]
    fn t_values_and_signs_q22() {
        let fs = space(2, 1, 2);
        for f in fs.iter() {
            let (r, eps) = f.check_rank_against_t().unwrap();
            match r {
                0 => assert_eq!(f.big_t().unwrap(), 16),
                2 => {
                    assert_eq!(f.big_t().unwrap(), -8);
                    assert_eq!(eps, -1);
                }
                4 => {
                    assert_eq!(f.big_t().unwrap(), 4);
                    assert_eq!(eps, 1);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn rank_four_over_f3_gives_t_nine() {
        let fs = space(3, 1, 2);
        let f = fs.iter().find(|f| f.rank() == 4).unwrap();
        assert_eq!(f.big_t().unwrap(), 9);
    }

    #[test]
    fn histograms_q22() {
        let fs = space(2, 1, 2);
        let r2 = fs.iter().find(|f| f.rank() == 2).unwrap();
        assert_eq!(r2.s_histogram().unwrap(), [(0, 12u32), (-8, 1), (8, 3)].into_iter().collect());
        assert_eq!(
            r2.r_histogram(Elem::ONE).unwrap(),
            [(0, 12u32), (-8, 3), (8, 1)].into_iter().collect()
        );
        let r4 = fs.iter().find(|f| f.rank() == 4).unwrap();
        assert_eq!(r4.s_histogram().unwrap(), [(4, 10u32), (-4, 6)].into_iter().collect());
    }

    #[test]
    fn r_histogram_q32_rank_two() {
        let fs = space(3, 1, 2);
        let f = fs.iter().find(|f| f.rank() == 2).unwrap();
        let h = f.r_histogram(Elem::ONE).unwrap();
        assert_eq!(h, [(0, 72u32), (-54, 4), (27, 5)].into_iter().collect());
        assert_eq!(h, r_distribution(3, 4, 2, -1).unwrap());
    }

    #[test]
    fn identity_route_matches_direct_character_sum() {
        let fs = space(3, 1, 2);
        let ctx = fs.ctx().clone();
        for idx in [0u128, 5, 40, 80] {
            let f = fs.form_at(idx);
            for beta in [Elem::ZERO, ctx.pi(), ctx.pi_pow(17)] {
                let n0 = f.count_solutions(beta, Elem::ZERO).unwrap() as i64;
                assert_eq!(f.character_sum(beta, Elem::ZERO).unwrap(), 3 * n0 - 81);
                let b = ctx.from_int(2);
                let nb = f.count_solutions(beta, ctx.neg(b)).unwrap() as i64;
                assert_eq!(f.character_sum(beta, b).unwrap(), 3 * nb - 81);
            }
        }
    }

    #[test]
    fn closed_form_rows_degenerate_to_zero_form() {
        assert_eq!(s_distribution(3, 4, 0, 1).unwrap(), [(162, 1u32), (0, 80)].into_iter().collect());
        assert_eq!(r_distribution(3, 4, 0, 1).unwrap(), [(-81, 1u32), (0, 80)].into_iter().collect());
        assert!(s_distribution(2, 4, 3, 1).is_err());
    }

    #[test]
    fn rejects_bad_forms() {
        let odd = Arc::new(FieldCtx::new(2, 1, 6).unwrap());
        let bad = FormCoeffs { delta0: Some(odd.pi()), deltas: vec![Elem::ZERO] };
        assert!(matches!(QuadForm::new(odd.clone(), bad), Err(Error::NotInSubfield(_))));
        let missing = FormCoeffs { delta0: None, deltas: vec![Elem::ZERO] };
        assert!(QuadForm::new(odd, missing).is_err());
        let f = QuadForm::zero(Arc::new(FieldCtx::new(2, 1, 4).unwrap())).with_budget(4);
        assert!(matches!(f.big_t(), Err(Error::BudgetExceeded { .. })));
        assert!(f.r_histogram(Elem::ZERO).is_err());
    }

    #[test]
    fn quadratic_character() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        assert_eq!(eta(&ctx, Elem::ZERO).unwrap(), 0);
        assert_eq!(eta(&ctx, ctx.from_int(1)).unwrap(), 1);
        assert_eq!(eta(&ctx, ctx.from_int(2)).unwrap(), -1);
        assert_eq!(nu(3, true), 2);
        assert_eq!(nu(3, false), -1);
    }
}
