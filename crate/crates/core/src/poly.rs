use std::fmt;

use crate::field::{Elem, FieldCtx};

/// Polynomial with coefficients in F_{q^s} (low to high, trailing zeros trimmed).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![Elem::ONE] }
    }

    /// The indeterminate X.
    pub fn x() -> Poly {
        Poly { coeffs: vec![Elem::ZERO, Elem::ONE] }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &Poly, ctx: &FieldCtx) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Elem], i: usize| v.get(i).copied().unwrap_or(Elem::ZERO);
        Poly::from_coeffs(
            (0..len)
                .map(|i| ctx.add(get(&self.coeffs, i), get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly, ctx: &FieldCtx) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Poly, ctx: &FieldCtx) -> Poly {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = ctx.inv(divisor.coeffs[d]).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let c = r[top];
            if !c.is_zero() {
                let factor = ctx.mul(c, lead_inv);
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let idx = top - d + i;
                    r[idx] = ctx.sub(r[idx], ctx.mul(factor, dc));
                }
            }
            r.pop();
        }
        Poly::from_coeffs(r)
    }

    /// X^k mod `modulus`.
    pub fn x_pow_mod(mut k: u64, modulus: &Poly, ctx: &FieldCtx) -> Poly {
        let mut acc = Poly::one().rem(modulus, ctx);
        let mut base = Poly::x().rem(modulus, ctx);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, ctx).rem(modulus, ctx);
            }
            base = base.mul(&base, ctx).rem(modulus, ctx);
            k >>= 1;
        }
        acc
    }

    /// Whether this polynomial divides X^n − 1.
    pub fn divides_x_pow_minus_one(&self, n: u64, ctx: &FieldCtx) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => Poly::x_pow_mod(n, self, ctx) == Poly::one(),
        }
    }

    pub fn eval(&self, x: Elem, ctx: &FieldCtx) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c.raw() == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}X")?,
                _ => write!(f, "{coeff}X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_cyclotomic_divisibility() {
        let ctx = FieldCtx::new(2, 1, 4).unwrap();
        let h = ctx.minimal_polynomial(ctx.pi()).unwrap();
        assert_eq!(h.to_string(), "X^4 + X + 1");
        assert!(h.divides_x_pow_minus_one(15, &ctx));
        assert!(!h.divides_x_pow_minus_one(5, &ctx));
        let prod = h.mul(&Poly::x(), &ctx);
        assert!(prod.rem(&h, &ctx).is_zero());
        assert_eq!(h.eval(ctx.pi(), &ctx), Elem::ZERO);
    }
}
