//! Hermitian matrices over F_{q²} and the Hermitian forms graph, at sizes where
//! everything can be enumerated.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::linalg::matrix_rank;
use crate::quadform::contract_roots_of_unity;
use crate::spectra::{eigenvalues, frequencies};

/// Default cap on q^{m²}.
pub const DEFAULT_WITNESS_BUDGET: u128 = 1 << 20;

/// Pairs checked for additivity when |𝓗|² is above this.
const ADDITIVITY_PAIR_CAP: u128 = 1 << 20;

/// Row-major m×m matrix with entries embedded in F_{q^{2m}}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianMatrix {
    pub m: usize,
    pub entries: Vec<Elem>,
}

impl HermitianMatrix {
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.m + j]
    }

    fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.m).map(<[Elem]>::to_vec).collect()
    }
}

/// Enumerates 𝓗 for one (q, m) inside F_{q^{2m}}.
#[derive(Debug)]
pub struct HermitianSpace {
    ctx: Arc<FieldCtx>,
    m: usize,
    fq: Vec<Elem>,
    fq2: Vec<Elem>,
}

impl HermitianSpace {
    pub fn new(q: u64, m: u32, budget: u128) -> Result<HermitianSpace> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        let size = (q as u128).checked_pow(m * m).unwrap_or(u128::MAX);
        if size > budget {
            return Err(Error::BudgetExceeded { estimate: size, budget });
        }
        let ctx = Arc::new(FieldCtx::new(p, e, 2 * m)?);
        Ok(HermitianSpace::with_ctx(ctx))
    }

    pub fn with_ctx(ctx: Arc<FieldCtx>) -> HermitianSpace {
        let q = ctx.q();
        let g2 = ctx.pi_pow((ctx.n() / (q * q - 1)) as i64);
        let mut fq2 = vec![Elem::ZERO];
        let mut x = Elem::ONE;
        for _ in 0..q * q - 1 {
            fq2.push(x);
            x = ctx.mul(x, g2);
        }
        HermitianSpace { m: ctx.m() as usize, fq: ctx.fq_elements().to_vec(), fq2, ctx }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn len(&self) -> u128 {
        (self.ctx.q() as u128).pow((self.m * self.m) as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn conj(&self, x: Elem) -> Elem {
        self.ctx.frobenius_q(x, 1)
    }

    /// Diagonal digits (base q) first, then the strict upper triangle row by row (base q²).
    pub fn at(&self, mut index: u128) -> HermitianMatrix {
        let m = self.m;
        let q = self.fq.len() as u128;
        let q2 = self.fq2.len() as u128;
        let mut entries = vec![Elem::ZERO; m * m];
        for i in 0..m {
            entries[i * m + i] = self.fq[(index % q) as usize];
            index /= q;
        }
        for i in 0..m {
            for j in i + 1..m {
                let x = self.fq2[(index % q2) as usize];
                index /= q2;
                entries[i * m + j] = x;
                entries[j * m + i] = self.conj(x);
            }
        }
        HermitianMatrix { m, entries }
    }

    pub fn iter(&self) -> impl Iterator<Item = HermitianMatrix> + '_ {
        (0..self.len()).map(|i| self.at(i))
    }

    pub fn is_hermitian(&self, h: &HermitianMatrix) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| h.get(i, j) == self.conj(h.get(j, i))))
    }

    pub fn rank(&self, h: &HermitianMatrix) -> usize {
        matrix_rank(&self.ctx, h.rows())
    }

    pub fn add(&self, a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
        let entries = a.entries.iter().zip(&b.entries).map(|(&x, &y)| self.ctx.add(x, y)).collect();
        HermitianMatrix { m: self.m, entries }
    }

    pub fn rank_one(&self) -> Vec<HermitianMatrix> {
        self.iter().filter(|h| self.rank(h) == 1).collect()
    }

    /// trace(AB), an element of F_q for Hermitian A and B.
    pub fn trace_product(&self, a: &HermitianMatrix, b: &HermitianMatrix) -> Elem {
        let ctx = &*self.ctx;
        let mut acc = Elem::ZERO;
        for i in 0..self.m {
            for j in 0..self.m {
                acc = ctx.add(acc, ctx.mul(a.get(i, j), b.get(j, i)));
            }
        }
        acc
    }

    /// χ_A(S) = Σ_{H∈S} ω_p^{Tr_{q/p}(trace(AH))}.
    pub fn character_sum(&self, a: &HermitianMatrix, set: &[HermitianMatrix]) -> Result<i64> {
        let mut counts = vec![0u64; self.ctx.p() as usize];
        for h in set {
            counts[self.ctx.trace_q_to_p_digit(self.trace_product(a, h)) as usize] += 1;
        }
        contract_roots_of_unity(&counts)
    }

    /// Eigenvalue → multiplicity of Cay(𝓗, 𝓚).
    pub fn cayley_spectrum(&self) -> Result<BTreeMap<i64, u64>> {
        let k = self.rank_one();
        let mut out = BTreeMap::new();
        for a in self.iter() {
            *out.entry(self.character_sum(&a, &k)?).or_default() += 1;
        }
        Ok(out)
    }

    /// Every nonzero A pairs nontrivially with some H, so A ↦ χ_A is injective.
    pub fn pairing_is_nondegenerate(&self) -> bool {
        let all: Vec<HermitianMatrix> = self.iter().collect();
        all.iter().skip(1).all(|a| {
            all.iter().any(|h| self.ctx.trace_q_to_p_digit(self.trace_product(a, h)) != 0)
        })
    }

    /// Exponents k of the coordinates Σ α_i^k H_ij α_j, in output order.
    pub fn map_exponents(&self) -> Vec<u64> {
        let q = self.ctx.q();
        let m = self.m as u32;
        let mut out = Vec::new();
        if m % 2 == 1 {
            out.push(q.pow(m));
        }
        out.extend((1..=m / 2).map(|i| q.pow(2 * i - 1)));
        out
    }

    /// f(H), with α_i = π^i as basis of F_{q^{2m}} over F_{q²}.
    pub fn image(&self, h: &HermitianMatrix) -> Vec<Elem> {
        let ctx = &*self.ctx;
        self.map_exponents()
            .into_iter()
            .map(|k| {
                let mut acc = Elem::ZERO;
                for i in 0..self.m {
                    let left = ctx.pow(ctx.pi_pow(i as i64), k);
                    for j in 0..self.m {
                        let v = h.get(i, j);
                        if !v.is_zero() {
                            acc = ctx.add(acc, ctx.mul(ctx.mul(left, v), ctx.pi_pow(j as i64)));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// 𝓓 = {(x^{k+1})_k : x ∈ F_{q^{2m}}^*}.
    pub fn connection_set(&self) -> HashSet<Vec<Elem>> {
        let ctx = &*self.ctx;
        let exps = self.map_exponents();
        ctx.elements()
            .skip(1)
            .map(|x| exps.iter().map(|&k| ctx.pow(x, k + 1)).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub additive: bool,
    pub injective: bool,
    pub image_in_group: bool,
    pub maps_rank_one_onto_connection_set: bool,
    pub connection_set_size: u64,
    pub expected_connection_set_size: u64,
    pub mismatches: Vec<String>,
}

impl IsomorphismReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_isomorphism(space: &HermitianSpace) -> IsomorphismReport {
    let ctx = &*space.ctx;
    let q = ctx.q();
    let size = space.len();
    let mut mismatches = Vec::new();

    let all: Vec<HermitianMatrix> = space.iter().collect();
    let images: Vec<Vec<Elem>> = all.iter().map(|h| space.image(h)).collect();

    let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if size * size <= ADDITIVITY_PAIR_CAP {
        Box::new((0..all.len()).flat_map(|a| (0..all.len()).map(move |b| (a, b))))
    } else {
        // fixed stride walk through the pair space
        let len = all.len();
        Box::new((0..ADDITIVITY_PAIR_CAP as usize).map(move |i| {
            let x = i.wrapping_mul(2654435761) % len;
            let y = (i.wrapping_mul(40503) + 7) % len;
            (x, y)
        }))
    };
    let mut additive = true;
    for (a, b) in pairs {
        let sum = space.image(&space.add(&all[a], &all[b]));
        let expect: Vec<Elem> = images[a].iter().zip(&images[b]).map(|(&x, &y)| ctx.add(x, y)).collect();
        if sum != expect {
            additive = false;
            mismatches.push(format!("f(H_{a} + H_{b}) ≠ f(H_{a}) + f(H_{b})"));
            break;
        }
    }

    let distinct: HashSet<&Vec<Elem>> = images.iter().collect();
    let injective = distinct.len() as u128 == size;
    if !injective {
        mismatches.push(format!("f has {} distinct images on {size} matrices", distinct.len()));
    }

    let odd = ctx.m() % 2 == 1;
    let image_in_group = images.iter().all(|v| !odd || ctx.in_fqm(v[0]));
    if !image_in_group {
        mismatches.push("leading coordinate of f(H) is outside F_(q^m)".into());
    }

    let connection = space.connection_set();
    let rank_one: HashSet<Vec<Elem>> =
        all.iter().zip(&images).filter(|(h, _)| space.rank(h) == 1).map(|(_, v)| v.clone()).collect();
    let onto = rank_one == connection;
    if !onto {
        mismatches.push(format!(
            "f(𝓚) has {} elements, 𝓓 has {}, overlap {}",
            rank_one.len(),
            connection.len(),
            rank_one.intersection(&connection).count()
        ));
    }
    let expected = (q.pow(2 * ctx.m()) - 1) / (q + 1);
    if connection.len() as u64 != expected {
        mismatches.push(format!("|𝓓| = {} but expected {expected}", connection.len()));
    }

    IsomorphismReport {
        additive,
        injective,
        image_in_group,
        maps_rank_one_onto_connection_set: onto,
        connection_set_size: connection.len() as u64,
        expected_connection_set_size: expected,
        mismatches,
    }
}

/// Everything the `witness` command reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub q: u64,
    pub m: u32,
    pub hermitian_count: u64,
    pub rank1_count: u64,
    pub spectrum: Vec<(i64, u64)>,
    pub spectrum_matches_prediction: bool,
    pub isomorphism_ok: bool,
    pub isomorphism: IsomorphismReport,
}

pub fn witness(q: u64, m: u32, budget: u128) -> Result<WitnessReport> {
    let space = HermitianSpace::new(q, m, budget)?;
    let hermitian_count = space.iter().filter(|h| space.is_hermitian(h)).count() as u64;
    let rank1_count = space.rank_one().len() as u64;
    let spectrum = space.cayley_spectrum()?;
    let mut predicted: BTreeMap<i64, u64> = BTreeMap::new();
    for (x, f) in eigenvalues(q, m).iter().zip(frequencies(q, m)?.0) {
        let x: i64 = x.try_into().map_err(|_| Error::InvalidParameter("eigenvalue overflow".into()))?;
        let f: u64 = f.try_into().map_err(|_| Error::InvalidParameter("frequency overflow".into()))?;
        *predicted.entry(x).or_default() += f;
    }
    let isomorphism = verify_isomorphism(&space);
    Ok(WitnessReport {
        q,
        m,
        hermitian_count,
        rank1_count,
        spectrum_matches_prediction: spectrum == predicted,
        spectrum: spectrum.into_iter().rev().collect(),
        isomorphism_ok: isomorphism.ok(),
        isomorphism,
    })
}

/// |𝓚| = (q^{2m} − 1)/(q + 1).
pub fn expected_rank1_count(q: u64, m: u32) -> BigUint {
    (BigUint::from(q).pow(2 * m) - 1u32) / (q + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        let s = HermitianSpace::new(2, 1, DEFAULT_WITNESS_BUDGET).unwrap();
        let all: Vec<_> = s.iter().map(|h| h.entries).collect();
        assert_eq!(all, vec![vec![Elem::ZERO], vec![Elem::ONE]]);
        assert_eq!(HermitianSpace::new(2, 2, DEFAULT_WITNESS_BUDGET).unwrap().iter().count(), 16);
        let s32 = HermitianSpace::new(3, 2, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!(s32.iter().count(), 81);
        assert!(s32.iter().all(|h| s32.is_hermitian(&h)));
        assert_eq!(s32.rank_one().len(), 20);
        assert!(matches!(HermitianSpace::new(2, 5, 1 << 20), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn spectrum_small() {
        let s = HermitianSpace::new(2, 1, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!(s.cayley_spectrum().unwrap(), BTreeMap::from([(1, 1), (-1, 1)]));
        let s = HermitianSpace::new(2, 2, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!(s.cayley_spectrum().unwrap(), BTreeMap::from([(5, 1), (-3, 5), (1, 10)]));
        assert!(s.pairing_is_nondegenerate());
        let zero = s.at(0);
        assert_eq!(s.character_sum(&zero, &s.rank_one()).unwrap(), 5);
        assert!(s.image(&zero).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn witness_reports() {
        let r = witness(2, 2, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!((r.hermitian_count, r.rank1_count), (16, 5));
        assert_eq!(r.spectrum, vec![(5, 1), (1, 10), (-3, 5)]);
        assert!(r.spectrum_matches_prediction && r.isomorphism_ok, "{r:?}");
        let r = witness(2, 3, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!(r.isomorphism.connection_set_size, 21);
        assert!(r.isomorphism_ok, "{r:?}");
        assert_eq!(expected_rank1_count(3, 2), BigUint::from(20u32));
    }
}
