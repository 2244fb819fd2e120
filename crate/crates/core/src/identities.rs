//! Machine-checkable identity registry.
//!
//! Every entry names its integer parameters, a validity predicate, and a
//! check that evaluates both sides independently (sharing only the exact
//! polynomial primitives) and compares them exactly. Verification reports
//! are deterministic; wall time is kept on the struct but never rendered.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{Value, json};
use thiserror::Error;

use crate::poly::QPoly;
use crate::sequences::{
    fib, fib_uint, gauss_binom, lucas, lucasnomial, q_fib, q_fib_base, q_fibonomial, q_int,
    q_int_base,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
    #[error("invalid parameters for {id}: {point:?} fails the validity predicate")]
    InvalidParams { id: String, point: Vec<u64> },
}

/// Outcome of checking one grid point.
pub enum PointCheck {
    Pass,
    Fail { lhs: String, rhs: String },
}

pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
    pub valid: fn(&[u64]) -> bool,
    check: fn(&[u64]) -> PointCheck,
}

impl IdentityDescriptor {
    /// All valid parameter tuples with every coordinate at most `max`.
    pub fn default_grid(&self, max: u64) -> Vec<Vec<u64>> {
        let arity = self.params.len();
        let mut grid = Vec::new();
        let mut point = vec![0u64; arity];
        loop {
            if (self.valid)(&point) {
                grid.push(point.clone());
            }
            let mut slot = arity;
            loop {
                if slot == 0 {
                    return grid;
                }
                slot -= 1;
                point[slot] += 1;
                if point[slot] <= max {
                    break;
                }
                point[slot] = 0;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub point: Vec<(String, u64)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: String,
    pub points_checked: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub wall: Duration,
}

impl VerificationReport {
    pub fn render_line(&self) -> String {
        match (&self.passed, &self.counterexample) {
            (true, _) => format!("{:<4} pass  ({} points)", self.id, self.points_checked),
            (false, Some(ce)) => {
                let params: Vec<String> =
                    ce.point.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!(
                    "{:<4} FAIL  at ({}): lhs = {}, rhs = {}",
                    self.id,
                    params.join(", "),
                    ce.lhs,
                    ce.rhs
                )
            }
            (false, None) => format!("{:<4} FAIL", self.id),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "id": self.id,
            "points": self.points_checked,
            "pass": self.passed,
        });
        if let Some(ce) = &self.counterexample {
            obj["counterexample"] = json!({
                "params": ce.point.iter().map(|(k, v)| json!({"name": k, "value": v})).collect::<Vec<_>>(),
                "lhs": ce.lhs,
                "rhs": ce.rhs,
            });
        }
        obj
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
    pub max_size: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn total_points(&self) -> usize {
        self.reports.iter().map(|r| r.points_checked).sum()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for report in &self.reports {
            out.push_str(&report.render_line());
            out.push('\n');
        }
        out.push_str(&format!(
            "suite: {} identities, {} points, {}\n",
            self.reports.len(),
            self.total_points(),
            if self.passed() {
                "all pass"
            } else {
                "FAILURES"
            }
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_size": self.max_size,
            "identities": self.reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "total_points": self.total_points(),
            "pass": self.passed(),
        })
    }
}

/// Looks up a registered identity.
pub fn find(id: &str) -> Option<&'static IdentityDescriptor> {
    catalog().iter().find(|d| d.id == id)
}

/// Checks one identity over an explicit parameter grid.
pub fn verify(id: &str, grid: &[Vec<u64>]) -> Result<VerificationReport, IdentityError> {
    let desc = find(id).ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))?;
    for point in grid {
        if point.len() != desc.params.len() || !(desc.valid)(point) {
            return Err(IdentityError::InvalidParams {
                id: id.to_string(),
                point: point.clone(),
            });
        }
    }
    Ok(run_on_grid(desc, grid))
}

/// Runs every catalog entry over its default grid bounded by `max_size`.
pub fn verify_suite(max_size: u64) -> SuiteReport {
    let reports = catalog()
        .iter()
        .map(|desc| run_on_grid(desc, &desc.default_grid(max_size)))
        .collect();
    SuiteReport { reports, max_size }
}

fn run_on_grid(desc: &IdentityDescriptor, grid: &[Vec<u64>]) -> VerificationReport {
    let start = Instant::now();
    let mut counterexample = None;
    for point in grid {
        if let PointCheck::Fail { lhs, rhs } = (desc.check)(point) {
            counterexample = Some(Counterexample {
                point: desc
                    .params
                    .iter()
                    .zip(point)
                    .map(|(name, v)| (name.to_string(), *v))
                    .collect(),
                lhs,
                rhs,
            });
            break;
        }
    }
    VerificationReport {
        id: desc.id.to_string(),
        points_checked: grid.len(),
        passed: counterexample.is_none(),
        counterexample,
        wall: start.elapsed(),
    }
}

fn check_eq(lhs: QPoly, rhs: QPoly) -> PointCheck {
    if lhs == rhs {
        PointCheck::Pass
    } else {
        PointCheck::Fail {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn check_eq_int(lhs: BigInt, rhs: BigInt) -> PointCheck {
    if lhs == rhs {
        PointCheck::Pass
    } else {
        PointCheck::Fail {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

// --- shared building blocks -------------------------------------------------

/// Gaussian binomial extended by `[n k] = 0` outside `0 <= k <= n`.
fn gb(n: i64, k: i64) -> QPoly {
    if n < 0 || k < 0 || k > n {
        QPoly::zero()
    } else {
        gauss_binom(n as u64, k as u64).expect("range checked")
    }
}

/// q-Fibonomial extended by zero outside `0 <= k <= n`.
fn qfnom(n: i64, k: i64) -> QPoly {
    if n < 0 || k < 0 || k > n {
        QPoly::zero()
    } else {
        q_fibonomial(n as u64, k as u64).expect("range checked")
    }
}

/// `[F_a]_{q^{F_b}}` with `b >= 1`.
fn qfib_scaled(a: u64, b: u64) -> QPoly {
    debug_assert!(b >= 1);
    q_fib_base(a, &fib_uint(b))
}

/// The monomial `q^e`.
fn qpow(e: BigUint) -> QPoly {
    QPoly::monomial(e, 1)
}

/// `1 + q^e`.
fn one_plus_qpow(e: u64) -> QPoly {
    &QPoly::one() + &qpow(BigUint::from(e))
}

fn int_binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

// --- the registered identities ----------------------------------------------

fn check_g0(p: &[u64]) -> PointCheck {
    let n = p[0];
    let q1 = &QPoly::one() + &QPoly::q();
    let rhs = &(&q1 * &q_int(n - 1)) - &(&QPoly::q() * &q_int(n - 2));
    check_eq(q_int(n), rhs)
}

fn check_g1(p: &[u64]) -> PointCheck {
    let (m, n) = (p[0], p[1]);
    check_eq(
        gauss_binom(m + n, m).expect("m <= m+n"),
        gauss_binom(m + n, n).expect("n <= m+n"),
    )
}

fn check_g2(p: &[u64]) -> PointCheck {
    let (m, n) = (p[0] as i64, p[1] as i64);
    let lhs = gb(m + n, m);
    let term1 = &q_int(p[1] + 1) * &gb(m + n - 1, n);
    let term2 = &(&QPoly::q() * &q_int(p[0] - 1)) * &gb(m + n - 1, m);
    check_eq(lhs, &term1 - &term2)
}

fn check_g3(p: &[u64]) -> PointCheck {
    let (m, n) = (p[0] as i64, p[1] as i64);
    let lhs = gb(m + n, m).scale(2);
    let term1 = &one_plus_qpow(p[1]) * &gb(m + n - 1, n);
    let term2 = &one_plus_qpow(p[0]) * &gb(m + n - 1, m);
    check_eq(lhs, &term1 + &term2)
}

fn check_g4(p: &[u64]) -> PointCheck {
    let (m, n) = (p[0], p[1]);
    let lhs = gb((m + n) as i64, m as i64);
    let row = q_int(n + 1);
    let mut rhs = row.pow(m as u32);
    if m >= 2 {
        let mut sum = QPoly::zero();
        for i in 0..=(m - 2) {
            let term = &(&row.pow(i as u32) * &q_int(m - i - 1))
                * &gb((m + n - i - 1) as i64, n as i64 - 1);
            sum = &sum + &term;
        }
        rhs = &rhs - &(&QPoly::q() * &sum);
    }
    check_eq(lhs, rhs)
}

fn check_g5(p: &[u64]) -> PointCheck {
    let (m, n) = (p[0], p[1]);
    let lhs = gb((m + n) as i64, m as i64);
    let mut rhs = QPoly::zero();
    for i in 0..=n {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let term = &(&(&qpow(BigUint::from(i)) * &q_int(m - 1).pow(i as u32)) * &q_int(n - i + 1))
            * &gb((m + n - i - 1) as i64, m as i64 - 1);
        rhs = &rhs + &term.scale(sign);
    }
    check_eq(lhs, rhs)
}

fn check_g6(p: &[u64]) -> PointCheck {
    let (m, n) = (p[0], p[1]);
    let lhs = gb((m + n) as i64, m as i64).scale(BigInt::from(2).pow((m + n) as u32));
    let mut rhs = QPoly::zero();
    for i in 0..=m {
        let pow2 = BigInt::from(2).pow((m + n - i - 1) as u32);
        let term = &(&one_plus_qpow(n).pow(i as u32) * &one_plus_qpow(m - i))
            * &gb((m + n - i - 1) as i64, n as i64 - 1);
        rhs = &rhs + &term.scale(pow2);
    }
    check_eq(lhs, rhs)
}

fn check_g7(p: &[u64]) -> PointCheck {
    let m = p[0];
    let lhs = q_int(m + 1);
    let q1 = &QPoly::one() + &QPoly::q();
    let mut rhs = QPoly::zero();
    for i in 0..=(m / 2) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let coeff = int_binom(m - i, i) * sign;
        let term = &qpow(BigUint::from(i)) * &q1.pow((m - 2 * i) as u32);
        rhs = &rhs + &term.scale(coeff);
    }
    check_eq(lhs, rhs)
}

fn check_l1(p: &[u64]) -> PointCheck {
    let (a, b) = (p[0], p[1]);
    let prod_rhs = &q_int(a) * &q_int_base(b, &BigUint::from(a));
    if q_int(a * b) != prod_rhs {
        return PointCheck::Fail {
            lhs: format!("product law: {}", q_int(a * b)),
            rhs: prod_rhs.to_string(),
        };
    }
    let sum_rhs = &q_int(a) + &(&qpow(BigUint::from(a)) * &q_int(b));
    if q_int(a + b) != sum_rhs {
        return PointCheck::Fail {
            lhs: format!("sum law: {}", q_int(a + b)),
            rhs: sum_rhs.to_string(),
        };
    }
    PointCheck::Pass
}

fn check_l2(p: &[u64]) -> PointCheck {
    let (n, k) = (p[0], p[1]);
    let int_lhs = fib(n + 1);
    let int_rhs = fib(n - k + 1) * fib(k + 1) + fib(n - k) * fib(k);
    if int_lhs != int_rhs {
        return PointCheck::Fail {
            lhs: format!("integer split: {int_lhs}"),
            rhs: int_rhs.to_string(),
        };
    }
    let term1 = &qfib_scaled(k + 1, n - k + 1) * &q_fib(n - k + 1);
    let term2 = if k == 0 {
        QPoly::zero()
    } else {
        let shift = qpow(fib_uint(n - k + 1) * fib_uint(k + 1));
        &(&shift * &qfib_scaled(n - k, k)) * &q_fib(k)
    };
    check_eq(q_fib(n + 1), &term1 + &term2)
}

fn check_b1(p: &[u64]) -> PointCheck {
    let (n, k) = (p[0], p[1]);
    let term1 = &qfib_scaled(k + 1, n - k) * &q_fib(n - k);
    let term2 = if k == 0 {
        QPoly::zero()
    } else {
        let shift = qpow(fib_uint(n - k) * fib_uint(k + 1));
        &(&shift * &qfib_scaled(n - k - 1, k)) * &q_fib(k)
    };
    check_eq(q_fib(n), &term1 + &term2)
}

fn check_b2(p: &[u64]) -> PointCheck {
    let n = p[0];
    let rhs = &q_fib(n - 1) + &(&qpow(fib_uint(n - 1)) * &q_fib(n - 2));
    check_eq(q_fib(n), rhs)
}

fn check_b3(p: &[u64]) -> PointCheck {
    let (n, a) = (p[0], p[1]);
    let steps = n / (a + 1);
    let term1 = &qfib_scaled(n - a + 1, a + 1) * &q_fib(a + 1);
    let mut middle = QPoly::zero();
    for i in 1..steps {
        let mut shift = BigUint::ZERO;
        let mut prod = QPoly::one();
        for j in 1..=i {
            shift += fib_uint(n - j * (a + 1) + 2);
            prod = &prod * &qfib_scaled(a, n - j * (a + 1) + 1);
        }
        shift *= fib_uint(a + 1);
        let tail = qfib_scaled(n - (i + 1) * (a + 1) + 2, a + 1);
        middle = &middle + &(&(&qpow(shift) * &prod) * &tail);
    }
    middle = &q_fib(a + 1) * &middle;
    let mut shift = BigUint::ZERO;
    let mut prod = QPoly::one();
    for j in 1..=steps {
        shift += fib_uint(n - j * (a + 1) + 2);
        prod = &prod * &qfib_scaled(a, n - j * (a + 1) + 1);
    }
    shift *= fib_uint(a + 1);
    let last = &(&qpow(shift) * &prod) * &q_fib(n - steps * (a + 1) + 1);
    check_eq(q_fib(n + 1), &(&term1 + &middle) + &last)
}

fn check_b4(p: &[u64]) -> PointCheck {
    let n = p[0];
    let steps = n / 2;
    let mut rhs = q_fib(n);
    let mut shift = BigUint::ZERO;
    for i in 1..steps {
        shift += fib_uint(n - 2 * i + 2);
        rhs = &rhs + &(&qpow(shift.clone()) * &q_fib(n - 2 * i));
    }
    shift += fib_uint(n - 2 * steps + 2);
    rhs = &rhs + &qpow(shift);
    check_eq(q_fib(n + 1), rhs)
}

fn check_b5(p: &[u64]) -> PointCheck {
    let n = p[0];
    let mut rhs = BigInt::one();
    for j in 1..=(n / 2) {
        rhs += fib(n - 2 * j + 2);
    }
    check_eq_int(fib(n + 1), rhs)
}

fn check_b6(p: &[u64]) -> PointCheck {
    let (n, a) = (p[0], p[1]);
    let dividend = q_fib(n);
    let divisor = q_fib(a);
    match dividend.exact_div(&divisor) {
        Ok(quotient) => check_eq(dividend, &quotient * &divisor),
        Err(_) => PointCheck::Fail {
            lhs: dividend.to_string(),
            rhs: format!("NotDivisible by {divisor}"),
        },
    }
}

fn check_b7(p: &[u64]) -> PointCheck {
    let (n, a) = (p[0], p[1]);
    let steps = n / a;
    let term1 =
        &(&qpow(fib_uint(a + 1) * fib_uint(n - a + 1)) * &qfib_scaled(n - a, a)) * &q_fib(a);
    let mut middle = QPoly::zero();
    for i in 1..steps {
        let mut prod = QPoly::one();
        for j in 1..=i {
            prod = &prod * &qfib_scaled(a + 1, n - j * a + 1);
        }
        let shift = qpow(fib_uint(a + 1) * fib_uint(n - (i + 1) * a + 1));
        let tail = qfib_scaled(n - (i + 1) * a, a);
        middle = &middle + &(&(&shift * &prod) * &tail);
    }
    middle = &q_fib(a) * &middle;
    let mut prod = QPoly::one();
    for j in 1..=steps {
        prod = &prod * &qfib_scaled(a + 1, n - j * a + 1);
    }
    let last = &prod * &q_fib(n - steps * a + 1);
    check_eq(q_fib(n + 1), &(&term1 + &middle) + &last)
}

fn check_q1(p: &[u64]) -> PointCheck {
    let (n, k) = (p[0], p[1]);
    let lhs = qfnom(n as i64, k as i64);
    let term1 = &qfib_scaled(k + 1, n - k) * &qfnom(n as i64 - 1, k as i64);
    let term2 = if k == 0 {
        QPoly::zero()
    } else {
        let shift = qpow(fib_uint(n - k) * fib_uint(k + 1));
        &(&shift * &qfib_scaled(n - 1 - k, k)) * &qfnom(n as i64 - 1, k as i64 - 1)
    };
    check_eq(lhs, &term1 + &term2)
}

fn check_q2(p: &[u64]) -> PointCheck {
    let (n, k) = (p[0], p[1]);
    let lhs = qfnom(n as i64, k as i64);
    let mut rhs = QPoly::zero();
    for i in 0..=k {
        let mut shift = BigUint::ZERO;
        let mut prod = QPoly::one();
        for j in 1..=i {
            shift += fib_uint(k - j + 2);
            prod = &prod * &qfib_scaled(n - k - 1, k - j + 1);
        }
        shift *= fib_uint(n - k);
        let term = &(&(&qpow(shift) * &prod) * &qfib_scaled(k - i + 1, n - k))
            * &qfnom((n - i) as i64 - 1, (k - i) as i64);
        rhs = &rhs + &term;
    }
    check_eq(lhs, rhs)
}

fn check_q3(p: &[u64]) -> PointCheck {
    let (n, k) = (p[0], p[1]);
    let lhs = qfnom(n as i64, k as i64);
    let mut rhs = QPoly::zero();
    if n - k >= 2 {
        for i in 0..=(n - k - 2) {
            let binom = qfnom((n - i) as i64 - 1, k as i64 - 1);
            if binom.is_zero() {
                continue;
            }
            let shift = qpow(fib_uint(k + 1) * fib_uint(n - k - i));
            let mut prod = QPoly::one();
            for j in 1..=i {
                prod = &prod * &qfib_scaled(k + 1, n - k - j + 1);
            }
            let term = &(&(&shift * &qfib_scaled(n - k - i - 1, k)) * &prod) * &binom;
            rhs = &rhs + &term;
        }
    }
    let mut prod = QPoly::one();
    for j in 1..=(n - k) {
        prod = &prod * &qfib_scaled(k + 1, n - k - j + 1);
    }
    check_eq(lhs, &rhs + &prod)
}

fn check_x1(p: &[u64]) -> PointCheck {
    let (n, l) = (p[0], p[1]);
    let lhs = lucasnomial(n, l)
        .expect("l <= n")
        .evaluate(&BigInt::from(3), &BigInt::from(-1));
    let lucas_prod = |hi: u64| (1..=hi).fold(BigInt::one(), |acc, i| acc * lucas(i));
    let fib_prod = |hi: u64| (1..=hi).fold(BigInt::one(), |acc, i| acc * fib(i));
    let num = lucas_prod(n) * fib_prod(n);
    let den = lucas_prod(l) * fib_prod(l) * lucas_prod(n - l) * fib_prod(n - l);
    // exact rational comparison by cross-multiplication; a non-integral
    // right-hand side cannot match the integer left-hand side
    if &lhs * &den == num {
        PointCheck::Pass
    } else {
        PointCheck::Fail {
            lhs: lhs.to_string(),
            rhs: format!("{num}/{den}"),
        }
    }
}

/// The registered identities, in catalog order.
pub fn catalog() -> &'static [IdentityDescriptor] {
    static CATALOG: &[IdentityDescriptor] = &[
        IdentityDescriptor {
            id: "G0",
            summary: "q-integer three-term recurrence",
            params: &["n"],
            valid: |p| p[0] >= 3,
            check: check_g0,
        },
        IdentityDescriptor {
            id: "G1",
            summary: "Gaussian binomial symmetry",
            params: &["m", "n"],
            valid: |_| true,
            check: check_g1,
        },
        IdentityDescriptor {
            id: "G2",
            summary: "Gaussian binomial row/column recurrence",
            params: &["m", "n"],
            valid: |p| p[0] >= 1,
            check: check_g2,
        },
        IdentityDescriptor {
            id: "G3",
            summary: "circular two-sided recurrence",
            params: &["m", "n"],
            valid: |p| p[0] + p[1] >= 1,
            check: check_g3,
        },
        IdentityDescriptor {
            id: "G4",
            summary: "expansion over complete rows",
            params: &["m", "n"],
            valid: |_| true,
            check: check_g4,
        },
        IdentityDescriptor {
            id: "G5",
            summary: "alternating expansion over complete columns",
            params: &["m", "n"],
            valid: |p| p[0] >= 1,
            check: check_g5,
        },
        IdentityDescriptor {
            id: "G6",
            summary: "circular expansion with power-of-two weights",
            params: &["m", "n"],
            valid: |p| p[1] >= 1,
            check: check_g6,
        },
        IdentityDescriptor {
            id: "G7",
            summary: "q-integer as alternating binomial sum",
            params: &["m"],
            valid: |_| true,
            check: check_g7,
        },
        IdentityDescriptor {
            id: "L1",
            summary: "q-integer product and sum laws",
            params: &["a", "b"],
            valid: |p| p[0] >= 1 && p[1] >= 1,
            check: check_l1,
        },
        IdentityDescriptor {
            id: "L2",
            summary: "Fibonacci and q-Fibonacci splitting laws",
            params: &["n", "k"],
            valid: |p| p[1] <= p[0],
            check: check_l2,
        },
        IdentityDescriptor {
            id: "B1",
            summary: "q-Fibonacci barrier split",
            params: &["n", "k"],
            valid: |p| p[0] >= 1 && p[1] < p[0],
            check: check_b1,
        },
        IdentityDescriptor {
            id: "B2",
            summary: "q-Fibonacci two-term recurrence",
            params: &["n"],
            valid: |p| p[0] >= 2,
            check: check_b2,
        },
        IdentityDescriptor {
            id: "B3",
            summary: "nested barrier expansion with step size a",
            params: &["n", "a"],
            valid: |p| p[1] >= 1 && p[1] < p[0],
            check: check_b3,
        },
        IdentityDescriptor {
            id: "B4",
            summary: "nested barrier expansion with unit steps",
            params: &["n"],
            valid: |p| p[0] >= 2,
            check: check_b4,
        },
        IdentityDescriptor {
            id: "B5",
            summary: "Fibonacci telescoping sum",
            params: &["n"],
            valid: |p| p[0] >= 1,
            check: check_b5,
        },
        IdentityDescriptor {
            id: "B6",
            summary: "q-Fibonacci divisibility along index divisors",
            params: &["n", "a"],
            valid: |p| p[1] >= 1 && p[0] >= 1 && p[0] % p[1] == 0,
            check: check_b6,
        },
        IdentityDescriptor {
            id: "B7",
            summary: "dual nested barrier expansion",
            params: &["n", "a"],
            valid: |p| p[0] >= 1 && p[1] >= 1 && p[1] <= p[0],
            check: check_b7,
        },
        IdentityDescriptor {
            id: "Q1",
            summary: "q-Fibonomial first-step recurrence",
            params: &["n", "k"],
            valid: |p| p[0] >= 1 && p[1] < p[0],
            check: check_q1,
        },
        IdentityDescriptor {
            id: "Q2",
            summary: "q-Fibonomial expansion by first vertical step",
            params: &["n", "k"],
            valid: |p| p[0] >= 1 && p[1] < p[0],
            check: check_q2,
        },
        IdentityDescriptor {
            id: "Q3",
            summary: "q-Fibonomial expansion by first left step",
            params: &["n", "k"],
            valid: |p| p[0] >= 1 && p[1] <= p[0],
            check: check_q3,
        },
        IdentityDescriptor {
            id: "X1",
            summary: "Lucasnomial factorization at s=3, t=-1",
            params: &["n", "l"],
            valid: |p| p[1] <= p[0],
            check: check_x1,
        },
    ];
    CATALOG
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.len(), 21);
        let mut ids: Vec<&str> = cat.iter().map(|d| d.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 21, "ids are unique");
        for desc in cat {
            assert!(
                !desc.default_grid(8).is_empty(),
                "{} has an empty default grid",
                desc.id
            );
        }
    }

    #[test]
    fn hand_checked_points() {
        // G7 at m=2: [3]_q = (q+1)^2 - q
        let report = verify("G7", &[vec![2]]).unwrap();
        assert!(report.passed);

        // B1 at n=4, k=2: (1+q) + q^{F_2 F_3} = [F_4]_q
        let report = verify("B1", &[vec![4, 2]]).unwrap();
        assert!(report.passed);

        // Q1 at n=3, k=1: both sides are 1 + q
        let report = verify("Q1", &[vec![3, 1]]).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn x1_covers_nonintegral_lucas_factor() {
        // at (n,l) = (4,2) the Lucas-product ratio alone is 28/3; the
        // identity still holds as an exact rational
        let report = verify("X1", &[vec![4, 2]]).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn unknown_and_invalid_params() {
        assert!(matches!(
            verify("ZZ", &[]),
            Err(IdentityError::UnknownIdentity(_))
        ));
        assert!(matches!(
            verify("B2", &[vec![1]]),
            Err(IdentityError::InvalidParams { .. })
        ));
    }

    #[test]
    fn suite_small() {
        let suite = verify_suite(6);
        assert!(suite.passed(), "{}", suite.render_text());
        let vacuous = verify_suite(0);
        assert!(vacuous.passed());
    }

    #[test]
    fn corrupted_identity_reports_counterexample() {
        // negative control: a deliberately wrong right-hand side must fail
        // and carry a counterexample
        fn wrong(p: &[u64]) -> PointCheck {
            check_eq(q_int(p[0]), q_int(p[0] + 1))
        }
        let desc = IdentityDescriptor {
            id: "XX",
            summary: "deliberately corrupted",
            params: &["n"],
            valid: |p| p[0] >= 1,
            check: wrong,
        };
        let report = run_on_grid(&desc, &desc.default_grid(4));
        assert!(!report.passed);
        let ce = report.counterexample.expect("counterexample present");
        assert_eq!(ce.point, vec![("n".to_string(), 1)]);
    }

    #[test]
    fn divisibility_negative_probe() {
        // 4 does not divide 6: [F_6]_q is not divisible by [F_4]_q
        assert!(q_fib(6).exact_div(&q_fib(4)).is_err());
        // but the registered grid points do divide
        let report = verify("B6", &[vec![6, 3], vec![20, 4]]).unwrap();
        assert!(report.passed);
    }
}
