use proptest::prelude::*;
use tracecodes::field::{coset_size, primitive_polynomials};
use tracecodes::{Elem, FieldCtx, Poly, TraceLevel};

fn fields() -> Vec<FieldCtx> {
    vec![
        FieldCtx::new(2, 1, 4).unwrap(),
        FieldCtx::new(3, 1, 4).unwrap(),
        FieldCtx::new(2, 2, 4).unwrap(),
        FieldCtx::new(2, 1, 6).unwrap(),
        FieldCtx::new(5, 1, 2).unwrap(),
    ]
}

/// Σ x^{p^i} by repeated p-th powers.
fn frobenius_sum(ctx: &FieldCtx, x: Elem, step: u32, count: u32) -> Elem {
    let mut acc = Elem::ZERO;
    let mut y = x;
    for _ in 0..count {
        acc = ctx.add(acc, y);
        for _ in 0..step {
            y = ctx.pow(y, ctx.p());
        }
    }
    acc
}

#[test]
fn lex_smallest_moduli() {
    let f16 = FieldCtx::new(2, 1, 4).unwrap();
    assert_eq!(f16.modulus(), &[1, 1, 0, 0, 1]);
    assert_eq!(primitive_polynomials(2, 4).next().unwrap(), vec![1, 1, 0, 0, 1]);
    let f81 = FieldCtx::new(3, 1, 4).unwrap();
    assert_eq!(f81.modulus(), primitive_polynomials(3, 4).next().unwrap().as_slice());
    assert!((1..80).all(|k| f81.pow(f81.pi(), k) != Elem::ONE));
    assert_eq!(f81.pow(f81.pi(), 80), Elem::ONE);
}

#[test]
fn f4_inside_f256_is_frobenius_fixed() {
    let ctx = FieldCtx::new(2, 2, 4).unwrap();
    let fixed: Vec<Elem> = ctx.elements().filter(|&x| ctx.pow(x, 4) == x).collect();
    assert_eq!(fixed.len(), 4);
    assert!(fixed.iter().all(|&x| ctx.in_fq(x)));
    assert_eq!(ctx.elements().filter(|&x| ctx.in_fq(x)).count(), 4);
}

#[test]
fn traces_in_f16() {
    let ctx = FieldCtx::new(2, 1, 4).unwrap();
    assert_eq!(ctx.trace(Elem::ZERO, TraceLevel::QsToQ).unwrap(), Elem::ZERO);
    assert_eq!(ctx.trace(ctx.pi(), TraceLevel::QsToQ).unwrap(), Elem::ZERO);
    assert_eq!(ctx.trace(ctx.pi_pow(3), TraceLevel::QsToQ).unwrap(), Elem::ONE);
    assert!(ctx.trace(ctx.pi(), TraceLevel::QmToQ).is_err());
}

#[test]
fn minimal_polynomials_in_f16() {
    let ctx = FieldCtx::new(2, 1, 4).unwrap();
    assert_eq!(ctx.minimal_polynomial(Elem::ZERO).unwrap(), Poly::x());
    assert_eq!(ctx.minimal_polynomial(ctx.pi_pow(-1)).unwrap().to_string(), "X^4 + X^3 + 1");
    assert_eq!(ctx.minimal_polynomial(ctx.pi_pow(-5)).unwrap().degree(), Some(2));
}

#[test]
fn coset_sizes_from_the_gamma_set() {
    for (q, m) in [(2i64, 2u32), (3, 2), (2, 3), (4, 2)] {
        let n = q.pow(2 * m) - 1;
        assert_eq!(coset_size(q.pow(m) + 1, n, q).unwrap(), m as u64);
        assert_eq!(coset_size(1, n, q).unwrap(), 2 * m as u64);
    }
    assert_eq!(coset_size(0, 15, 2).unwrap(), 1);
    assert!(coset_size(1, 0, 2).is_err());
}

#[test]
fn minimal_polynomial_degree_is_coset_size() {
    for ctx in fields() {
        let n = ctx.n() as i64;
        for k in 0..n.min(80) {
            let x = ctx.pi_pow(k);
            let mp = ctx.minimal_polynomial(x).unwrap();
            assert_eq!(mp.degree().unwrap() as u64, coset_size(k, n, ctx.q() as i64).unwrap());
            assert!(mp.coeffs().iter().all(|&c| ctx.in_fq(c)));
            assert!(mp.divides_x_pow_minus_one(ctx.n(), &ctx));
        }
    }
}

proptest! {
    #[test]
    fn trace_is_additive_and_frobenius_invariant(which in 0usize..5, a in any::<u32>(), b in any::<u32>()) {
        let ctx = &fields()[which];
        let x = ctx.elem(a % ctx.order() as u32).unwrap();
        let y = ctx.elem(b % ctx.order() as u32).unwrap();
        let tr = |z| ctx.trace(z, TraceLevel::QsToQ).unwrap();
        prop_assert_eq!(ctx.add(tr(x), tr(y)), tr(ctx.add(x, y)));
        prop_assert_eq!(tr(ctx.pow(x, ctx.q())), tr(x));
        prop_assert!(ctx.in_fq(tr(x)));
    }

    #[test]
    fn trace_is_transitive(which in 0usize..5, a in any::<u32>()) {
        let ctx = &fields()[which];
        let x = ctx.elem(a % ctx.order() as u32).unwrap();
        let down = ctx.trace(x, TraceLevel::QsToQ).unwrap();
        let full = ctx.trace(x, TraceLevel::QsToP).unwrap();
        prop_assert_eq!(ctx.trace(down, TraceLevel::QToP).unwrap(), full);
        prop_assert_eq!(full, frobenius_sum(ctx, x, 1, ctx.degree()));
        prop_assert_eq!(down, frobenius_sum(ctx, x, ctx.e(), ctx.s()));
    }

    #[test]
    fn field_axioms(which in 0usize..5, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let ctx = &fields()[which];
        let pick = |v: u32| ctx.elem(v % ctx.order() as u32).unwrap();
        let (x, y, z) = (pick(a), pick(b), pick(c));
        prop_assert_eq!(ctx.mul(x, ctx.add(y, z)), ctx.add(ctx.mul(x, y), ctx.mul(x, z)));
        prop_assert_eq!(ctx.sub(ctx.add(x, y), y), x);
        if !x.is_zero() {
            prop_assert_eq!(ctx.mul(x, ctx.inv(x).unwrap()), Elem::ONE);
        }
    }
}

#[test]
fn odd_degree_relative_trace() {
    let ctx = FieldCtx::new(2, 1, 6).unwrap();
    let g = ctx.pi_pow(9);
    for k in 0..7u64 {
        let x = ctx.pow(g, k);
        assert!(ctx.in_fqm(x));
        let t = ctx.trace(x, TraceLevel::QmToQ).unwrap();
        assert_eq!(t, frobenius_sum(&ctx, x, 1, 3));
    }
}
