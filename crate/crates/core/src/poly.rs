//! Exact sparse polynomial arithmetic over the integers.
//!
//! Two families live here: [`IntPoly2`], bivariate in `s` and `t`, and
//! [`QPoly`], univariate in `q` with unbounded exponents. Coefficients are
//! arbitrary-precision integers and every operation is exact. Values are
//! canonical: no zero coefficient is ever stored, so structural equality is
//! polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::{Value, json};
use thiserror::Error;

/// Exact division failed: the divisor does not divide the dividend.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("polynomial division left a nonzero remainder")]
pub struct NotDivisible;

/// Exponent pair for [`IntPoly2`], ordered graded-lexicographically
/// (total degree first, then the `s` exponent). Map iteration order is
/// therefore the canonical term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exp2 {
    pub s: u32,
    pub t: u32,
}

impl Exp2 {
    fn grade(&self) -> u64 {
        u64::from(self.s) + u64::from(self.t)
    }

    fn checked_sub(&self, other: &Exp2) -> Option<Exp2> {
        Some(Exp2 {
            s: self.s.checked_sub(other.s)?,
            t: self.t.checked_sub(other.t)?,
        })
    }
}

impl Ord for Exp2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.grade(), self.s).cmp(&(other.grade(), other.s))
    }
}

impl PartialOrd for Exp2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn insert_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, exp: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(exp) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Sparse bivariate polynomial in `s` and `t` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly2 {
    terms: BTreeMap<Exp2, BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(deg_s: u32, deg_t: u32, coeff: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, Exp2 { s: deg_s, t: deg_t }, coeff.into());
        IntPoly2 { terms }
    }

    /// Builds a polynomial from `(exponent pair, coefficient)` terms,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(iter: impl IntoIterator<Item = (Exp2, BigInt)>) -> Self {
        let mut terms = BTreeMap::new();
        for (exp, coeff) in iter {
            insert_term(&mut terms, exp, coeff);
        }
        IntPoly2 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp2, &BigInt)> {
        self.terms.iter()
    }

    fn leading(&self) -> Option<(&Exp2, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly2 {
            terms: self.terms.iter().map(|(e, v)| (*e, v * &c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact.
    ///
    /// Long division by the graded-lex leading term. Any step where the
    /// leading term of the remainder is not divisible (exponent-wise and
    /// coefficient-wise) proves inexactness, so the greedy strategy is
    /// complete.
    pub fn exact_div(&self, divisor: &IntPoly2) -> Result<IntPoly2, NotDivisible> {
        let (dexp, dcoeff) = divisor.leading().expect("division by the zero polynomial");
        let (dexp, dcoeff) = (*dexp, dcoeff.clone());
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rexp, rcoeff)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            let Some(qexp) = rexp.checked_sub(&dexp) else {
                return Err(NotDivisible);
            };
            if !(&rcoeff % &dcoeff).is_zero() {
                return Err(NotDivisible);
            }
            let qcoeff = &rcoeff / &dcoeff;
            for (e, c) in &divisor.terms {
                let exp = Exp2 {
                    s: qexp.s + e.s,
                    t: qexp.t + e.t,
                };
                insert_term(&mut rem.terms, exp, -(&qcoeff * c));
            }
            insert_term(&mut quot, qexp, qcoeff);
        }
        Ok(IntPoly2 { terms: quot })
    }

    /// Exact value at integer points `s = s_val`, `t = t_val`.
    pub fn evaluate(&self, s_val: &BigInt, t_val: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (exp, coeff) in &self.terms {
            acc += coeff * s_val.pow(exp.s) * t_val.pow(exp.t);
        }
        acc
    }

    /// Exact image under `s -> s_img`, `t -> t_img`; a ring homomorphism
    /// into the `q` family.
    pub fn substitute_st(&self, s_img: &QPoly, t_img: &QPoly) -> QPoly {
        let max_s = self.terms.keys().map(|e| e.s).max().unwrap_or(0) as usize;
        let max_t = self.terms.keys().map(|e| e.t).max().unwrap_or(0) as usize;
        let mut s_pows = Vec::with_capacity(max_s + 1);
        s_pows.push(QPoly::one());
        for i in 1..=max_s {
            let next = &s_pows[i - 1] * s_img;
            s_pows.push(next);
        }
        let mut t_pows = Vec::with_capacity(max_t + 1);
        t_pows.push(QPoly::one());
        for i in 1..=max_t {
            let next = &t_pows[i - 1] * t_img;
            t_pows.push(next);
        }
        let mut acc = QPoly::zero();
        for (exp, coeff) in &self.terms {
            let term = &s_pows[exp.s as usize] * &t_pows[exp.t as usize];
            acc = &acc + &term.scale(coeff.clone());
        }
        acc
    }

    /// JSON form: coefficients and exponents as decimal strings, terms in
    /// ascending graded-lex order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                json!({
                    "exp": [e.s.to_string(), e.t.to_string()],
                    "coeff": c.to_string(),
                })
            })
            .collect();
        json!({ "vars": ["s", "t"], "terms": terms })
    }
}

impl Add for &IntPoly2 {
    type Output = IntPoly2;
    fn add(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            insert_term(&mut terms, *e, c.clone());
        }
        IntPoly2 { terms }
    }
}

impl Sub for &IntPoly2 {
    type Output = IntPoly2;
    fn sub(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            insert_term(&mut terms, *e, -c);
        }
        IntPoly2 { terms }
    }
}

impl Neg for &IntPoly2 {
    type Output = IntPoly2;
    fn neg(self) -> IntPoly2 {
        IntPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &IntPoly2 {
    type Output = IntPoly2;
    fn mul(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp = Exp2 {
                    s: ea.s + eb.s,
                    t: ea.t + eb.t,
                };
                insert_term(&mut terms, exp, ca * cb);
            }
        }
        IntPoly2 { terms }
    }
}

impl Sum for IntPoly2 {
    fn sum<I: Iterator<Item = IntPoly2>>(iter: I) -> IntPoly2 {
        let mut terms = BTreeMap::new();
        for p in iter {
            for (e, c) in p.terms {
                insert_term(&mut terms, e, c);
            }
        }
        IntPoly2 { terms }
    }
}

impl fmt::Display for IntPoly2 {
    /// Human form in descending graded-lex order, e.g. `s^3 + 2*s*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms.iter().rev().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || (exp.s == 0 && exp.t == 0) {
                pieces.push(mag.to_string());
            }
            match exp.s {
                0 => {}
                1 => pieces.push("s".to_string()),
                d => pieces.push(format!("s^{d}")),
            }
            match exp.t {
                0 => {}
                1 => pieces.push("t".to_string()),
                d => pieces.push(format!("t^{d}")),
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Sparse univariate polynomial in `q` with unbounded non-negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<BigUint, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0u32, c)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1u32, 1)
    }

    pub fn monomial(exp: impl Into<BigUint>, coeff: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, exp.into(), coeff.into());
        QPoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(iter: impl IntoIterator<Item = (BigUint, BigInt)>) -> Self {
        let mut terms = BTreeMap::new();
        for (exp, coeff) in iter {
            insert_term(&mut terms, exp, coeff);
        }
        QPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<&BigUint> {
        self.terms.keys().next_back()
    }

    fn leading(&self) -> Option<(&BigUint, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * &c))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q -> q^factor`: every exponent is multiplied by `factor`.
    pub fn rescale(&self, factor: &BigUint) -> QPoly {
        assert!(!factor.is_zero(), "rescale factor must be positive");
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * factor, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly, NotDivisible> {
        let (dexp, dcoeff) = divisor.leading().expect("division by the zero polynomial");
        let (dexp, dcoeff) = (dexp.clone(), dcoeff.clone());
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rexp, rcoeff)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if rexp < dexp {
                return Err(NotDivisible);
            }
            if !(&rcoeff % &dcoeff).is_zero() {
                return Err(NotDivisible);
            }
            let qexp = &rexp - &dexp;
            let qcoeff = &rcoeff / &dcoeff;
            for (e, c) in &divisor.terms {
                insert_term(&mut rem.terms, &qexp + e, -(&qcoeff * c));
            }
            insert_term(&mut quot, qexp, qcoeff);
        }
        Ok(QPoly { terms: quot })
    }

    /// Exact value at an integer point `q = q_val`.
    pub fn evaluate(&self, q_val: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (exp, coeff) in &self.terms {
            acc += coeff * pow_bigint(q_val, exp);
        }
        acc
    }

    /// JSON form: coefficients and exponents as decimal strings, terms in
    /// ascending exponent order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                json!({
                    "exp": [e.to_string()],
                    "coeff": c.to_string(),
                })
            })
            .collect();
        json!({ "vars": ["q"], "terms": terms })
    }
}

/// `base^exp` by binary exponentiation over the bits of an unbounded exponent.
fn pow_bigint(base: &BigInt, exp: &BigUint) -> BigInt {
    if base.is_zero() {
        return if exp.is_zero() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if base.is_one() {
        return BigInt::one();
    }
    let mut acc = BigInt::one();
    let mut sq = base.clone();
    let bits = exp.bits();
    for i in 0..bits {
        if exp.bit(i) {
            acc *= &sq;
        }
        if i + 1 < bits {
            sq = &sq * &sq;
        }
    }
    acc
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            insert_term(&mut terms, e.clone(), c.clone());
        }
        QPoly { terms }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            insert_term(&mut terms, e.clone(), -c);
        }
        QPoly { terms }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                insert_term(&mut terms, ea + eb, ca * cb);
            }
        }
        QPoly { terms }
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut terms = BTreeMap::new();
        for p in iter {
            for (e, c) in p.terms {
                insert_term(&mut terms, e, c);
            }
        }
        QPoly { terms }
    }
}

impl fmt::Display for QPoly {
    /// Human form in ascending exponent order, e.g. `1 + q + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if exp.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if exp.is_one() {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(deg_s: u32, deg_t: u32, c: i64) -> IntPoly2 {
        IntPoly2::monomial(deg_s, deg_t, c)
    }

    #[test]
    fn add_merges_and_cancels() {
        let s = IntPoly2::s();
        let s_plus_t = &IntPoly2::s() + &IntPoly2::t();
        let sum = &s_plus_t + &s;
        assert_eq!(sum, &st(1, 0, 2) + &st(0, 1, 1));

        let one_plus_q = &QPoly::one() + &QPoly::q();
        let minus_q = QPoly::monomial(1u32, -1);
        assert_eq!(&one_plus_q + &minus_q, QPoly::one());

        let p = &st(2, 1, 3) + &st(0, 0, -4);
        assert_eq!(&IntPoly2::zero() + &p, p);
    }

    #[test]
    fn mul_examples() {
        let s = IntPoly2::s();
        let s2_plus_t = &st(2, 0, 1) + &IntPoly2::t();
        assert_eq!(&s * &s2_plus_t, &st(3, 0, 1) + &st(1, 1, 1));

        let a = &QPoly::one() + &QPoly::q();
        let b = &(&QPoly::one() + &QPoly::q()) + &QPoly::monomial(2u32, 1);
        let prod = &a * &b;
        let expected = [(0u32, 1i64), (1, 2), (2, 2), (3, 1)]
            .into_iter()
            .map(|(e, c)| QPoly::monomial(e, c))
            .sum::<QPoly>();
        assert_eq!(prod, expected);

        assert_eq!(&a * &QPoly::zero(), QPoly::zero());
    }

    #[test]
    fn exact_div_recovers_factor() {
        // (s^2 + t)(s^2 + 2t) = s^4 + 3 s^2 t + 2 t^2
        let p = &(&st(4, 0, 1) + &st(2, 1, 3)) + &st(0, 2, 2);
        let d = &st(2, 0, 1) + &st(0, 1, 1);
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, &st(2, 0, 1) + &st(0, 1, 2));
        assert_eq!(&q * &d, p);

        assert_eq!(p.exact_div(&IntPoly2::one()).unwrap(), p);
    }

    #[test]
    fn exact_div_detects_remainder() {
        let p = [(0u32, 1i64), (1, 1), (2, 1)]
            .into_iter()
            .map(|(e, c)| QPoly::monomial(e, c))
            .sum::<QPoly>();
        let d = &QPoly::one() + &QPoly::q();
        assert_eq!(p.exact_div(&d), Err(NotDivisible));
    }

    #[test]
    fn substitute_examples() {
        let q1 = &QPoly::one() + &QPoly::q();
        let mq = QPoly::monomial(1u32, -1);

        // {3} = s^2 + t  ->  1 + q + q^2
        let three = &st(2, 0, 1) + &IntPoly2::t();
        let img = three.substitute_st(&q1, &mq);
        let expected: QPoly = (0u32..3).map(|e| QPoly::monomial(e, 1)).sum();
        assert_eq!(img, expected);

        // {4} = s^3 + 2st  ->  1 + q + q^2 + q^3
        let four = &st(3, 0, 1) + &st(1, 1, 2);
        let expected: QPoly = (0u32..4).map(|e| QPoly::monomial(e, 1)).sum();
        assert_eq!(four.substitute_st(&q1, &mq), expected);

        assert_eq!(IntPoly2::zero().substitute_st(&q1, &mq), QPoly::zero());
    }

    #[test]
    fn rescale_examples() {
        let p = &QPoly::one() + &QPoly::q();
        let r = p.rescale(&BigUint::from(3u32));
        assert_eq!(r, &QPoly::one() + &QPoly::monomial(3u32, 1));
        assert_eq!(p.rescale(&BigUint::from(1u32)), p);

        // [2]_q * [3]_{q^2} = [6]_q
        let three: QPoly = (0u32..3).map(|e| QPoly::monomial(e, 1)).sum();
        let six: QPoly = (0u32..6).map(|e| QPoly::monomial(e, 1)).sum();
        assert_eq!(&p * &three.rescale(&BigUint::from(2u32)), six);
    }

    #[test]
    fn evaluate_examples() {
        let p = &(&st(4, 0, 1) + &st(2, 1, 3)) + &st(0, 2, 2);
        let one = BigInt::one();
        assert_eq!(p.evaluate(&one, &one), BigInt::from(6));
        assert_eq!(
            p.evaluate(&BigInt::from(3), &BigInt::from(-1)),
            BigInt::from(56)
        );

        let f5: QPoly = (0u32..5).map(|e| QPoly::monomial(e, 1)).sum();
        assert_eq!(f5.evaluate(&one), BigInt::from(5));
        assert_eq!(QPoly::zero().evaluate(&BigInt::from(7)), BigInt::zero());
        assert_eq!(f5.evaluate(&BigInt::from(2)), BigInt::from(31));
        assert_eq!(f5.evaluate(&BigInt::from(-2)), BigInt::from(11));
    }

    #[test]
    fn display_forms() {
        // descending graded-lex for (s,t); ascending exponents for q
        let four = &st(3, 0, 1) + &st(1, 1, 2);
        assert_eq!(four.to_string(), "s^3 + 2*s*t");
        let mixed = &(&st(2, 0, 1) + &st(1, 1, -3)) + &st(0, 0, 1);
        assert_eq!(mixed.to_string(), "s^2 - 3*s*t + 1");
        assert_eq!(IntPoly2::zero().to_string(), "0");

        let f4: QPoly = (0u32..3).map(|e| QPoly::monomial(e, 1)).sum();
        assert_eq!(f4.to_string(), "1 + q + q^2");
        let neg = &QPoly::one() - &QPoly::q();
        assert_eq!(neg.to_string(), "1 - q");
    }

    #[test]
    fn json_form_uses_decimal_strings() {
        let four = &st(3, 0, 1) + &st(1, 1, 2);
        let v = four.to_json();
        assert_eq!(
            v,
            json!({
                "vars": ["s", "t"],
                "terms": [
                    {"exp": ["1", "1"], "coeff": "2"},
                    {"exp": ["3", "0"], "coeff": "1"},
                ]
            })
        );
        let q = &QPoly::one() + &QPoly::monomial(2u32, -5);
        assert_eq!(
            q.to_json(),
            json!({
                "vars": ["q"],
                "terms": [
                    {"exp": ["0"], "coeff": "1"},
                    {"exp": ["2"], "coeff": "-5"},
                ]
            })
        );
    }
}
