//! Closed forms: Gaussian binomials, the Hermitian forms graph spectrum, and the
//! predicted weight distributions of the three families.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::big_pow;
use crate::code::Family;
use crate::error::{consistency, Error, Result};

/// ∏_{i<j} (ℓ^m − ℓ^i)/(ℓ^j − ℓ^i), exact.
pub fn gaussian_binomial(m: u32, j: u32, basis: i64) -> Result<BigInt> {
    if basis == 1 {
        return Err(Error::InvalidParameter("Gaussian binomial basis must not be 1".into()));
    }
    if j > m {
        return Ok(BigInt::zero());
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= big_pow(basis, m) - big_pow(basis, i);
        den *= big_pow(basis, j) - big_pow(basis, i);
    }
    if den.is_zero() {
        return Err(Error::InvalidParameter(format!("basis {basis} gives a zero denominator")));
    }
    if !(&num % &den).is_zero() {
        return Err(consistency(format!("[{m} over {j}] at basis {basis} is not integral")));
    }
    Ok(num / den)
}

/// Counts f_0..f_m of forms (equivalently Hermitian matrices) of rank 2j (resp. j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDistribution(pub Vec<BigUint>);

impl RankDistribution {
    pub fn get(&self, j: usize) -> &BigUint {
        &self.0[j]
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.0.iter().enumerate()
    }
}

pub fn frequencies(q: u64, m: u32) -> Result<RankDistribution> {
    let qi = q as i64;
    let sign_m: i64 = if m % 2 == 1 { 1 } else { -1 };
    let mut out = vec![BigUint::one()];
    for j in 1..=m {
        let mut f = gaussian_binomial(m, j, -qi)?;
        for l in 0..j {
            let sign_l: i64 = if l % 2 == 1 { 1 } else { -1 };
            f *= BigInt::from(sign_m) * big_pow(qi, m) + BigInt::from(sign_l) * big_pow(qi, l);
        }
        if f.sign() != Sign::Plus {
            return Err(consistency(format!("f_{j} = {f} at (q, m) = ({q}, {m}) is not positive")));
        }
        out.push(f.to_biguint().unwrap());
    }
    let dist = RankDistribution(out);
    if dist.total() != BigUint::from(q).pow(m * m) {
        return Err(consistency(format!("Σ f_j ≠ q^(m²) at (q, m) = ({q}, {m})")));
    }
    Ok(dist)
}

/// ξ_0 = (q^{2m} − 1)/(q + 1), ξ_j = ((−q)^{2m−j} − 1)/(q + 1).
pub fn eigenvalues(q: u64, m: u32) -> Vec<BigInt> {
    let qi = q as i64;
    let den = BigInt::from(qi + 1);
    let mut out = vec![(big_pow(qi, 2 * m) - 1) / &den];
    for j in 1..=m {
        out.push((big_pow(-qi, 2 * m - j) - 1) / &den);
    }
    out
}

/// (Σ f_j ξ_j, Σ f_j ξ_j²).
pub fn spectrum_moments(q: u64, m: u32) -> Result<(BigInt, BigInt)> {
    let f = frequencies(q, m)?;
    let xi = eigenvalues(q, m);
    let mut first = BigInt::zero();
    let mut second = BigInt::zero();
    for (fj, x) in f.0.iter().zip(&xi) {
        let fj = BigInt::from(fj.clone());
        first += &fj * x;
        second += &fj * x * x;
    }
    Ok((first, second))
}

/// Exact weight → count map for one code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub q: u64,
    pub m: u32,
    pub family: Family,
    counts: BTreeMap<u64, BigUint>,
}

impl WeightDistribution {
    pub fn new(q: u64, m: u32, family: Family) -> WeightDistribution {
        WeightDistribution { q, m, family, counts: BTreeMap::new() }
    }

    pub fn from_counts(
        q: u64,
        m: u32,
        family: Family,
        counts: impl IntoIterator<Item = (u64, BigUint)>,
    ) -> WeightDistribution {
        let mut d = WeightDistribution::new(q, m, family);
        for (w, c) in counts {
            d.add(w, c);
        }
        d
    }

    pub fn add(&mut self, weight: u64, count: impl Into<BigUint>) {
        let count = count.into();
        if !count.is_zero() {
            *self.counts.entry(weight).or_default() += count;
        }
    }

    pub fn get(&self, weight: u64) -> BigUint {
        self.counts.get(&weight).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn counts(&self) -> &BTreeMap<u64, BigUint> {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn n(&self) -> u64 {
        self.q.pow(2 * self.m) - 1
    }

    pub fn k(&self) -> u64 {
        self.family.dimension(self.m)
    }

    pub fn min_weight(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Smallest weight whose counts differ, if any.
    pub fn first_difference(&self, other: &WeightDistribution) -> Option<u64> {
        let keys: std::collections::BTreeSet<u64> =
            self.counts.keys().chain(other.counts.keys()).copied().collect();
        keys.into_iter().find(|&w| self.get(w) != other.get(w))
    }

    /// Polynomial notation, e.g. `1+60x^48+20x^72`.
    pub fn enumerator(&self) -> String {
        self.iter()
            .map(|(w, c)| if w == 0 { c.to_string() } else { format!("{c}x^{w}") })
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in self.iter() {
            out.push_str(&format!("{w},{c}\n"));
        }
        out
    }
}

/// Serde adapter: `[[weight, "count"], …]`, sorted by weight.
pub mod distribution_serde {
    use super::*;

    pub fn serialize<S: Serializer>(
        counts: &BTreeMap<u64, BigUint>,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(u64, String)> = counts.iter().map(|(&w, c)| (w, c.to_string())).collect();
        rows.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<BTreeMap<u64, BigUint>, D::Error> {
        let rows: Vec<(u64, String)> = Vec::deserialize(de)?;
        let mut out = BTreeMap::new();
        for (w, c) in rows {
            let c: BigUint = c.parse().map_err(serde::de::Error::custom)?;
            *out.entry(w).or_insert_with(BigUint::zero) += c;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct WireDistribution {
    q: u64,
    m: u32,
    family: Family,
    n: u64,
    k: u64,
    d: Option<u64>,
    #[serde(with = "distribution_serde")]
    distribution: BTreeMap<u64, BigUint>,
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        WireDistribution {
            q: self.q,
            m: self.m,
            family: self.family,
            n: self.n(),
            k: self.k(),
            d: self.min_weight(),
            distribution: self.counts.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = WireDistribution::deserialize(de)?;
        Ok(WeightDistribution { q: w.q, m: w.m, family: w.family, counts: w.distribution })
    }
}

/// Minimum distance stated for each family; `None` when the formula is not an integer.
pub fn theorem_min_distance(q: u64, m: u32, family: Family) -> Option<u64> {
    let d = q.pow(2 * m - 2) * (q * q - q - 1);
    match family {
        Family::D => Some(d),
        Family::E => Some(d - 1),
        Family::C => {
            let num = (q.pow(2 * m) - q.pow(2 * m - 1)) * (q * q - 1);
            (num % (q * q) == 0).then(|| num / (q * q))
        }
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Closed-form weight distribution of one family at (q, m), equal weights merged.
pub fn predict(q: u64, m: u32, family: Family) -> Result<WeightDistribution> {
    if m == 0 || crate::arith::prime_power(q).is_none() {
        return Err(Error::InvalidParameter(format!("need a prime power q and m ≥ 1, got ({q}, {m})")));
    }
    if family == Family::E && q == 2 && m == 1 {
        return Err(Error::Degenerate("E at (q, m) = (2, 1): X − 1 already divides h".into()));
    }
    let f = frequencies(q, m)?;
    let qi = q as i64;
    let qp = |k: u32| big_pow(qi, k);
    let sign = |j: u32| if j % 2 == 0 { big(1) } else { big(-1) };
    let s = 2 * m;
    let base = qp(s) - qp(s - 1);

    let mut rows: Vec<(BigInt, BigInt)> = vec![(big(0), big(1))];
    let mut mid_d = qp(s) - 1;
    let mut mid_e = (qp(s) - 1) * (qi - 1);
    for j in 1..=m {
        let fj = BigInt::from(f.get(j as usize).clone());
        let eps = sign(j);
        let w1 = &base - &eps * qp(s - j - 1) * (qi - 1);
        let w2 = &base + &eps * qp(s - j - 1);
        let c1 = (qp(2 * j - 1) + &eps * qp(j - 1) * (qi - 1)) * &fj;
        let c2 = (qp(2 * j - 1) - &eps * qp(j - 1)) * (qi - 1) * &fj;
        match family {
            Family::C => rows.push((w1, fj)),
            Family::D => {
                rows.push((w1, c1));
                rows.push((w2, c2));
                mid_d += (qp(s) - qp(2 * j)) * &fj;
            }
            Family::E => {
                let c3 = c2.clone();
                let c4 = (qp(2 * j) - qp(2 * j - 1) + &eps * qp(j - 1)) * (qi - 1) * &fj;
                rows.push((&w1 - 1, c3));
                rows.push((&w2 - 1, c4));
                rows.push((w1, c1));
                rows.push((w2, c2));
                mid_d += (qp(s) - qp(2 * j)) * &fj;
                mid_e += (qp(s) - qp(2 * j)) * (qi - 1) * &fj;
            }
        }
    }
    match family {
        Family::C => {}
        Family::D => rows.push((base.clone(), mid_d)),
        Family::E => {
            rows.push((base.clone(), mid_d));
            rows.push((&base - 1, mid_e));
            rows.push((qp(s) - 1, big(qi - 1)));
        }
    }

    let mut dist = WeightDistribution::new(q, m, family);
    for (w, c) in rows {
        let w = w.to_u64().ok_or_else(|| consistency(format!("weight {w} out of range")))?;
        if c.is_negative() {
            return Err(consistency(format!("negative count {c} at weight {w}")));
        }
        dist.add(w, c.to_biguint().unwrap());
    }
    if dist.total() != BigUint::from(q).pow(family.dimension(m) as u32) {
        return Err(consistency(format!("{family}_({q},{m}) counts do not sum to q^k")));
    }
    if dist.get(0) != BigUint::one() {
        return Err(consistency("weight 0 must occur once"));
    }
    if let Some(d) = theorem_min_distance(q, m, family) {
        if dist.min_weight() != Some(d) {
            return Err(consistency(format!(
                "{family}_({q},{m}) minimum weight {:?} differs from d = {d}",
                dist.min_weight()
            )));
        }
    }
    if dist.iter().any(|(w, _)| w > dist.n()) {
        return Err(consistency("weight exceeds code length"));
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bu(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn dist(q: u64, m: u32, fam: Family, rows: &[(u64, u64)]) -> WeightDistribution {
        WeightDistribution::from_counts(q, m, fam, rows.iter().map(|&(w, c)| (w, BigUint::from(c))))
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(5, 0, -2).unwrap(), big(1));
        assert_eq!(gaussian_binomial(2, 1, -2).unwrap(), big(-1));
        assert_eq!(gaussian_binomial(2, 1, -3).unwrap(), big(-2));
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), big(35));
        assert!(gaussian_binomial(3, 1, 1).is_err());
    }

    #[test]
    fn small_frequencies() {
        assert_eq!(frequencies(2, 2).unwrap().0, bu(&[1, 5, 10]));
        assert_eq!(frequencies(3, 2).unwrap().0, bu(&[1, 20, 60]));
        assert_eq!(frequencies(2, 3).unwrap().0, bu(&[1, 21, 210, 280]));
        assert_eq!(frequencies(2, 1).unwrap().0, bu(&[1, 1]));
    }

    #[test]
    fn small_eigenvalues() {
        let ints = |v: &[i64]| v.iter().map(|&x| big(x)).collect::<Vec<_>>();
        assert_eq!(eigenvalues(2, 2), ints(&[5, -3, 1]));
        assert_eq!(eigenvalues(3, 2), ints(&[20, -7, 2]));
        assert_eq!(eigenvalues(2, 1), ints(&[1, -1]));
        let (s1, s2) = spectrum_moments(3, 2).unwrap();
        assert_eq!(s1, big(0));
        assert_eq!(s2, big(81 * 20));
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predict(3, 2, Family::C).unwrap(), dist(3, 2, Family::C, &[(0, 1), (48, 60), (72, 20)]));
        assert_eq!(
            predict(3, 2, Family::D).unwrap(),
            dist(3, 2, Family::D, &[(0, 1), (45, 160), (48, 1980), (54, 1520), (57, 2880), (72, 20)])
        );
        assert_eq!(
            predict(2, 2, Family::D).unwrap(),
            dist(2, 2, Family::D, &[(0, 1), (4, 15), (6, 100), (8, 75), (10, 60), (12, 5)])
        );
        let e42 = predict(4, 2, Family::E).unwrap();
        assert_eq!(e42.get(255), BigUint::from(3u32));
        assert_eq!(e42.get(175), BigUint::from(1683u32));
        assert_eq!(e42.counts().len(), 12);
    }

    #[test]
    fn c_at_m1_has_no_integral_theorem_distance() {
        assert_eq!(theorem_min_distance(2, 1, Family::C), None);
        assert_eq!(predict(3, 1, Family::C).unwrap().min_weight(), Some(8));
        assert!(matches!(predict(2, 1, Family::E), Err(Error::Degenerate(_))));
        assert!(predict(6, 2, Family::D).is_err());
    }

    #[test]
    fn json_shape() {
        let d = predict(3, 2, Family::C).unwrap();
        let v: serde_json::Value = serde_json::to_value(&d).unwrap();
        assert_eq!(v["distribution"], serde_json::json!([[0, "1"], [48, "60"], [72, "20"]]));
        assert_eq!(v["d"], 48);
        assert_eq!(v["family"], "C");
        let back: WeightDistribution = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
        assert_eq!(d.to_csv(), "weight,count\n0,1\n48,60\n72,20\n");
        assert_eq!(d.enumerator(), "1+60x^48+20x^72");
    }
}
