//! Closed-form generators: Fibonacci and Lucas numbers, Lucas polynomials,
//! Lucasnomials, q-integers, Gaussian binomials, q-Fibonacci numbers and
//! q-Fibonomials.
//!
//! Index conventions: `F_0 = 0`, `F_1 = F_2 = 1`, `L_0 = 2`, `L_1 = 1`,
//! `{0} = 0`, `{1} = 1`, `<0> = 2`, `<1> = s`. Every binomial-type value is
//! computed by exact division of factorial products, so an inexact division
//! (a bug) surfaces as a panic rather than a wrong answer.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{IntPoly2, QPoly};

/// A binomial-type index pair was out of range (`k > n`).
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("index out of range: k = {k} exceeds n = {n}")]
pub struct IndexError {
    pub n: u64,
    pub k: u64,
}

/// `F_n` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(n: u64) -> BigInt {
    BigInt::from(fib_uint(n))
}

/// `F_n` as an unsigned value, for use in exponents.
pub fn fib_uint(n: u64) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// `L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: u64) -> BigInt {
    let mut a = BigInt::from(2);
    let mut b = BigInt::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Lucas polynomial `{n}`: `{0} = 0`, `{1} = 1`, `{n} = s{n-1} + t{n-2}`.
pub fn lucas_poly(n: u64) -> IntPoly2 {
    lucas_family(n, IntPoly2::zero(), IntPoly2::one())
}

/// Circular Lucas polynomial `<n>`: same recurrence with `<0> = 2`, `<1> = s`.
pub fn circ_lucas_poly(n: u64) -> IntPoly2 {
    lucas_family(n, IntPoly2::constant(2), IntPoly2::s())
}

fn lucas_family(n: u64, base0: IntPoly2, base1: IntPoly2) -> IntPoly2 {
    let s = IntPoly2::s();
    let t = IntPoly2::t();
    let mut a = base0;
    let mut b = base1;
    for _ in 0..n {
        let next = &(&s * &b) + &(&t * &a);
        a = b;
        b = next;
    }
    a
}

fn lucas_poly_factorial(n: u64) -> IntPoly2 {
    (1..=n).fold(IntPoly2::one(), |acc, i| &acc * &lucas_poly(i))
}

/// Lucasnomial `{n}! / ({k}! {n-k}!)` as an exact polynomial quotient.
pub fn lucasnomial(n: u64, k: u64) -> Result<IntPoly2, IndexError> {
    if k > n {
        return Err(IndexError { n, k });
    }
    let num = lucas_poly_factorial(n);
    let q1 = num
        .exact_div(&lucas_poly_factorial(k))
        .expect("Lucasnomial numerator must be divisible by {k}!");
    Ok(q1
        .exact_div(&lucas_poly_factorial(n - k))
        .expect("Lucasnomial quotient must be divisible by {n-k}!"))
}

/// q-integer `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_int(n: u64) -> QPoly {
    (0..n).map(|i| QPoly::monomial(BigUint::from(i), 1)).sum()
}

/// `[n]_{q^base}`, the q-integer rescaled by a positive base.
pub fn q_int_base(n: u64, base: &BigUint) -> QPoly {
    q_int(n).rescale(base)
}

fn q_factorial(n: u64) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial `[n]_q! / ([k]_q! [n-k]_q!)` as an exact quotient.
pub fn gauss_binom(n: u64, k: u64) -> Result<QPoly, IndexError> {
    if k > n {
        return Err(IndexError { n, k });
    }
    let num = q_factorial(n);
    let q1 = num
        .exact_div(&q_factorial(k))
        .expect("Gaussian binomial numerator must be divisible by [k]!");
    Ok(q1
        .exact_div(&q_factorial(n - k))
        .expect("Gaussian binomial quotient must be divisible by [n-k]!"))
}

/// q-Fibonacci number `[F_n]_q = 1 + q + ... + q^{F_n - 1}`.
pub fn q_fib(n: u64) -> QPoly {
    let count = fib_uint(n);
    let mut terms = Vec::new();
    let mut e = BigUint::zero();
    while e < count {
        terms.push((e.clone(), BigInt::one()));
        e += 1u32;
    }
    QPoly::from_terms(terms)
}

/// `[F_n]_{q^base}` for a positive base.
pub fn q_fib_base(n: u64, base: &BigUint) -> QPoly {
    q_fib(n).rescale(base)
}

/// `[F_n]! = [F_1]_q [F_2]_q ... [F_n]_q`; the empty product is 1.
pub fn q_fib_factorial(n: u64) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_fib(i))
}

/// q-Fibonomial `[F_n]! / ([F_k]! [F_{n-k}]!)` as an exact quotient.
pub fn q_fibonomial(n: u64, k: u64) -> Result<QPoly, IndexError> {
    if k > n {
        return Err(IndexError { n, k });
    }
    let num = q_fib_factorial(n);
    let q1 = num
        .exact_div(&q_fib_factorial(k))
        .expect("q-Fibonomial numerator must be divisible by [F_k]!");
    Ok(q1
        .exact_div(&q_fib_factorial(n - k))
        .expect("q-Fibonomial quotient must be divisible by [F_{n-k}]!"))
}
