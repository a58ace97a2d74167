//! Exact arithmetic for the scalars of a bicharacter and for the cyclotomic
//! integers of the Coxeter geometric representation.
//!
//! A [`CycScalar`] is `ζ_M^t · p_0^{e_0} ⋯ p_{P-1}^{e_{P-1}}` where `ζ_M` is a
//! fixed primitive `M`-th root of unity and the `p_k` are multiplicatively
//! independent parameters of infinite order. Nothing else of the base field is
//! ever materialized.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("workspace mismatch: order {0} with {1} parameters vs order {2} with {3} parameters")]
    WorkspaceMismatch(u32, usize, u32, usize),
    #[error("cannot re-embed torsion order {from} into order {to}")]
    BadRescale { from: u32, to: u32 },
    #[error("bad scalar literal at column {column}: {reason}")]
    BadLiteral { column: usize, reason: String },
}

/// Multiplicative order of a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

/// `ζ_M^torsion · ∏ p_k^{free[k]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    order: u32,
    torsion: u32,
    free: Vec<i32>,
}

impl CycScalar {
    pub fn new(order: u32, torsion: i64, free: Vec<i32>) -> Self {
        assert!(order >= 1, "torsion order must be positive");
        let m = order as i64;
        CycScalar {
            order,
            torsion: torsion.rem_euclid(m) as u32,
            free,
        }
    }

    pub fn one(order: u32, nparams: usize) -> Self {
        Self::new(order, 0, vec![0; nparams])
    }

    /// `ζ_M^t`.
    pub fn zeta(order: u32, nparams: usize, t: i64) -> Self {
        Self::new(order, t, vec![0; nparams])
    }

    /// The `k`-th free parameter.
    pub fn param(order: u32, nparams: usize, k: usize) -> Self {
        let mut free = vec![0; nparams];
        free[k] = 1;
        Self::new(order, 0, free)
    }

    /// `-1`, which requires an even torsion order.
    pub fn minus_one(order: u32, nparams: usize) -> Option<Self> {
        order.is_multiple_of(2).then(|| Self::zeta(order, nparams, (order / 2) as i64))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn torsion(&self) -> u32 {
        self.torsion
    }

    pub fn free(&self) -> &[i32] {
        &self.free
    }

    pub fn nparams(&self) -> usize {
        self.free.len()
    }

    pub fn is_one(&self) -> bool {
        self.torsion == 0 && self.free.iter().all(|&e| e == 0)
    }

    pub fn is_minus_one(&self) -> bool {
        self.order.is_multiple_of(2) && 2 * self.torsion == self.order && self.free.iter().all(|&e| e == 0)
    }

    fn same_workspace(&self, other: &Self) -> Result<(), ExactError> {
        if self.order != other.order || self.free.len() != other.free.len() {
            return Err(ExactError::WorkspaceMismatch(
                self.order,
                self.free.len(),
                other.order,
                other.free.len(),
            ));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_workspace(other)?;
        let free = self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect();
        Ok(Self::new(
            self.order,
            self.torsion as i64 + other.torsion as i64,
            free,
        ))
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        let m = self.order as i64;
        let t = ((self.torsion as i64 % m) * (k.rem_euclid(m))).rem_euclid(m);
        let free = self.free.iter().map(|&e| (e as i64 * k) as i32).collect();
        Self::new(self.order, t, free)
    }

    pub fn mult_order(&self) -> Order {
        if self.free.iter().any(|&e| e != 0) {
            return Order::Infinite;
        }
        let m = self.order as u64;
        Order::Finite(m / gcd(self.torsion as u64, m))
    }

    /// Re-embeds into a workspace of order `to`, which must be a multiple of
    /// the current order.
    pub fn rescale(&self, to: u32) -> Result<Self, ExactError> {
        if to == 0 || !to.is_multiple_of(self.order) {
            return Err(ExactError::BadRescale {
                from: self.order,
                to,
            });
        }
        let factor = (to / self.order) as i64;
        Ok(Self::new(to, self.torsion as i64 * factor, self.free.clone()))
    }

    /// Renders the scalar in the literal syntax accepted by [`parse_scalar`].
    pub fn to_literal(&self, names: &[String]) -> String {
        let mut factors = Vec::new();
        let mut negate = false;
        if self.torsion != 0 {
            if self.is_minus_one_torsion() {
                negate = true;
            } else if self.torsion == 1 {
                factors.push("z".to_string());
            } else {
                factors.push(format!("z^{}", self.torsion));
            }
        }
        for (k, &e) in self.free.iter().enumerate() {
            let name = names.get(k).cloned().unwrap_or_else(|| format!("p{k}"));
            match e {
                0 => {}
                1 => factors.push(name),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        let body = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        };
        if negate {
            if factors.is_empty() {
                "-1".to_string()
            } else {
                format!("-{body}")
            }
        } else {
            body
        }
    }

    fn is_minus_one_torsion(&self) -> bool {
        self.order.is_multiple_of(2) && 2 * self.torsion == self.order
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal(&[]))
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;

    /// Panics on workspace mismatch; use [`CycScalar::try_mul`] to recover.
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.try_mul(rhs).expect("scalar workspace mismatch")
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;

    fn mul(self, rhs: CycScalar) -> CycScalar {
        &self * &rhs
    }
}

/// True iff `(r)_q = 1 + q + ⋯ + q^{r-1}` vanishes in characteristic zero.
pub fn q_number_is_zero(r: u64, q: &CycScalar) -> bool {
    assert!(r >= 1);
    match q.mult_order() {
        Order::Finite(o) => o > 1 && r.is_multiple_of(o),
        Order::Infinite => false,
    }
}

/// Least `k` in `[0, k_max]` with `a^k · b = 1`.
pub fn solve_pow_eq(a: &CycScalar, b: &CycScalar, k_max: u64) -> Option<u64> {
    a.same_workspace(b).ok()?;
    let mut forced: Option<i64> = None;
    for (&x, &y) in a.free.iter().zip(&b.free) {
        let (x, y) = (x as i64, y as i64);
        if x == 0 {
            if y != 0 {
                return None;
            }
            continue;
        }
        if y % x != 0 {
            return None;
        }
        let k = -y / x;
        if k < 0 || forced.is_some_and(|f| f != k) {
            return None;
        }
        forced = Some(k);
    }
    let m = a.order as i64;
    let (ta, tb) = (a.torsion as i64, b.torsion as i64);
    let k = match forced {
        Some(k) => {
            if (k % m * ta + tb).rem_euclid(m) != 0 {
                return None;
            }
            k as u64
        }
        None => {
            // k·ta ≡ -tb (mod m)
            let rhs = (-tb).rem_euclid(m);
            let g = gcd(ta as u64, m as u64) as i64;
            if rhs % g != 0 {
                return None;
            }
            let m2 = m / g;
            if m2 == 1 {
                0
            } else {
                let inv = mod_inverse((ta / g).rem_euclid(m2), m2)?;
                ((rhs / g) * inv).rem_euclid(m2) as u64
            }
        }
    };
    (k <= k_max).then_some(k)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m))
}

/// Parses `z^t * p^e * …`; `-1` and a leading `-` stand for `z^(M/2)`.
/// Parameters may be referenced by name or as `p0`, `p1`, ….
pub fn parse_scalar(text: &str, order: u32, names: &[String]) -> Result<CycScalar, ExactError> {
    let err = |column: usize, reason: String| ExactError::BadLiteral { column, reason };
    let mut acc = CycScalar::one(order, names.len());
    let minus = || CycScalar::minus_one(order, names.len());
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    let (mut rest, mut offset) = (trimmed, lead);
    if let Some(r) = rest.strip_prefix('-') {
        if r.trim() != "1" {
            acc = minus().ok_or_else(|| err(offset + 1, "`-` needs an even torsion order".into()))?;
            rest = r;
            offset += 1;
        }
    }
    if rest.trim().is_empty() {
        return Err(err(offset + 1, "empty literal".into()));
    }
    for factor in rest.split('*') {
        let col = offset + (factor.len() - factor.trim_start().len()) + 1;
        offset += factor.len() + 1;
        let f = factor.trim();
        if f.is_empty() {
            return Err(err(col, "empty factor".into()));
        }
        let (base, exp) = match f.split_once('^') {
            Some((b, e)) => {
                let e = e.trim().trim_start_matches('(').trim_end_matches(')');
                let e: i64 = e
                    .parse()
                    .map_err(|_| err(col, format!("bad exponent in `{f}`")))?;
                (b.trim(), e)
            }
            None => (f, 1),
        };
        let value = match base {
            "1" => CycScalar::one(order, names.len()),
            "-1" => minus().ok_or_else(|| err(col, "`-1` needs an even torsion order".into()))?,
            "z" => CycScalar::zeta(order, names.len(), 1),
            _ => {
                let idx = names.iter().position(|n| n == base).or_else(|| {
                    base.strip_prefix('p')
                        .and_then(|d| d.parse::<usize>().ok())
                        .filter(|&k| k < names.len())
                });
                match idx {
                    Some(k) => CycScalar::param(order, names.len(), k),
                    None => return Err(err(col, format!("unknown symbol `{base}`"))),
                }
            }
        };
        acc = &acc * &value.pow(exp);
    }
    Ok(acc)
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    fn rec(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                let phi_d = rec(d, memo);
                num = div_monic(&num, &phi_d);
            }
        }
        memo.insert(n, num.clone());
        num
    }
    assert!(n >= 1);
    rec(n, &mut HashMap::new())
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Arithmetic tables for `ℤ[ζ_M] = ℤ[x]/Φ_M(x)`.
#[derive(Debug)]
pub struct CycRing {
    order: u32,
    degree: usize,
    /// `x^k mod Φ_M` for `k < max(M, 2·degree)`.
    powers: Vec<Vec<i64>>,
}

impl CycRing {
    /// Shared ring of order `m`; tables are built once per order.
    pub fn get(m: u32) -> Arc<CycRing> {
        static RINGS: OnceLock<Mutex<HashMap<u32, Arc<CycRing>>>> = OnceLock::new();
        let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = rings.lock().expect("ring cache poisoned");
        guard
            .entry(m)
            .or_insert_with(|| Arc::new(CycRing::build(m)))
            .clone()
    }

    fn build(m: u32) -> CycRing {
        let phi = cyclotomic_polynomial(m);
        let degree = phi.len() - 1;
        let count = (m as usize).max(2 * degree).max(1);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x and reduce with x^degree = -Σ phi[i] x^i
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..degree {
                cur[i] -= top * phi[i];
            }
        }
        CycRing {
            order: m,
            degree,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Element of `ℤ[ζ_M]` in the power basis `1, ζ, …, ζ^{φ(M)-1}`.
#[derive(Clone)]
pub struct CycInteger {
    ring: Arc<CycRing>,
    coeffs: Vec<i64>,
}

impl CycInteger {
    pub fn zero(ring: &Arc<CycRing>) -> Self {
        CycInteger {
            ring: ring.clone(),
            coeffs: vec![0; ring.degree],
        }
    }

    pub fn from_int(ring: &Arc<CycRing>, n: i64) -> Self {
        let mut z = Self::zero(ring);
        z.coeffs[0] = n;
        z
    }

    pub fn one(ring: &Arc<CycRing>) -> Self {
        Self::from_int(ring, 1)
    }

    /// `ζ_M^j`.
    pub fn zeta_pow(ring: &Arc<CycRing>, j: i64) -> Self {
        let k = j.rem_euclid(ring.order as i64) as usize;
        CycInteger {
            ring: ring.clone(),
            coeffs: ring.powers[k].clone(),
        }
    }

    /// Builds from an arbitrary-length polynomial in `ζ`, reducing it.
    pub fn from_poly(ring: &Arc<CycRing>, poly: &[i64]) -> Self {
        let mut out = Self::zero(ring);
        let m = ring.order as usize;
        for (k, &c) in poly.iter().enumerate() {
            if c != 0 {
                let row = &ring.powers[k % m];
                for (o, r) in out.coeffs.iter_mut().zip(row) {
                    *o += c * r;
                }
            }
        }
        out
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.ring.order, other.ring.order,
            "cyclotomic integers from different rings"
        );
    }

    /// Value at the primitive root `exp(2πi·k/M)`, as `(re, im)`.
    pub fn eval_at(&self, k: u32) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / self.ring.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, &c)| {
                let a = theta * j as f64;
                (re + c as f64 * a.cos(), im + c as f64 * a.sin())
            })
    }
}

impl PartialEq for CycInteger {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycInteger {}

impl Hash for CycInteger {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInteger(M={}, {:?})", self.ring.order, self.coeffs)
    }
}

impl Add for &CycInteger {
    type Output = CycInteger;

    fn add(self, rhs: &CycInteger) -> CycInteger {
        self.check(rhs);
        CycInteger {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycInteger {
    type Output = CycInteger;

    fn sub(self, rhs: &CycInteger) -> CycInteger {
        self.check(rhs);
        CycInteger {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycInteger {
    type Output = CycInteger;

    fn neg(self) -> CycInteger {
        CycInteger {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycInteger {
    type Output = CycInteger;

    fn mul(self, rhs: &CycInteger) -> CycInteger {
        self.check(rhs);
        let d = self.ring.degree;
        if self.is_zero() || rhs.is_zero() {
            return CycInteger::zero(&self.ring);
        }
        let mut full = vec![0i64; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    full[i + j] += a * b;
                }
            }
        }
        let mut out = full[..d].to_vec();
        for (k, &c) in full.iter().enumerate().skip(d) {
            if c != 0 {
                for (o, r) in out.iter_mut().zip(&self.ring.powers[k]) {
                    *o += c * r;
                }
            }
        }
        CycInteger {
            ring: self.ring.clone(),
            coeffs: out,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CycScalar {
        CycScalar::param(1, 1, 0)
    }

    #[test]
    fn mul_examples() {
        let m = 5;
        let a = CycScalar::new(m, 1, vec![0]);
        let b = CycScalar::new(m, (m - 1) as i64, vec![0]);
        assert_eq!(&a * &b, CycScalar::one(m, 1));
        let q1 = CycScalar::new(1, 0, vec![1]);
        let q2 = CycScalar::new(1, 0, vec![2]);
        assert_eq!(&q1 * &q2, CycScalar::new(1, 0, vec![3]));
        let z3 = CycScalar::zeta(3, 0, 1);
        let sq = &z3 * &z3;
        assert_eq!((sq.torsion(), sq.free().len()), (2, 0));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = CycScalar::one(2, 1);
        let b = CycScalar::one(3, 1);
        assert!(matches!(a.try_mul(&b), Err(ExactError::WorkspaceMismatch(..))));
    }

    #[test]
    fn pow_examples() {
        assert!(q().pow(0).is_one());
        let a = CycScalar::new(4, 2, vec![1]);
        assert_eq!(a.pow(3), CycScalar::new(4, 2, vec![3]));
        assert_eq!(q().pow(-1), CycScalar::new(1, 0, vec![-1]));
    }

    #[test]
    fn order_examples() {
        assert_eq!(CycScalar::one(7, 0).mult_order(), Order::Finite(1));
        assert_eq!(CycScalar::zeta(6, 0, 2).mult_order(), Order::Finite(3));
        assert_eq!(q().mult_order(), Order::Infinite);
    }

    #[test]
    fn q_number_examples() {
        assert!(q_number_is_zero(3, &CycScalar::zeta(3, 0, 1)));
        assert!(!q_number_is_zero(5, &CycScalar::one(3, 0)));
        assert!(!q_number_is_zero(2, &q()));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_pow_eq(&q(), &q().inv(), 10), Some(1));
        assert_eq!(solve_pow_eq(&q(), &q(), 1000), None);
        let z = CycScalar::zeta(3, 0, 1);
        assert_eq!(solve_pow_eq(&z, &z, 10), Some(2));
        assert_eq!(solve_pow_eq(&z, &z, 1), None);
    }

    #[test]
    fn literal_round_trip() {
        let names = vec!["q".to_string(), "r".to_string()];
        let s = parse_scalar("z^3 * q^-2 * r", 6, &names).unwrap();
        assert_eq!(s, CycScalar::new(6, 3, vec![-2, 1]));
        assert_eq!(s.to_literal(&names), "-q^-2*r");
        assert_eq!(parse_scalar(&s.to_literal(&names), 6, &names).unwrap(), s);
        assert_eq!(parse_scalar("-1", 2, &names).unwrap().torsion(), 1);
        assert_eq!(parse_scalar("p1^2", 1, &names).unwrap(), CycScalar::new(1, 0, vec![0, 2]));
    }

    #[test]
    fn malformed_literals() {
        let names = vec!["q".to_string()];
        for bad in ["", "w", "q^x", "q**2", "-1"] {
            let order = if bad == "-1" { 3 } else { 1 };
            assert!(parse_scalar(bad, order, &names).is_err(), "{bad}");
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn zeta_relations() {
        let ring = CycRing::get(10);
        let z = CycInteger::zeta_pow(&ring, 1);
        let mut p = CycInteger::one(&ring);
        for _ in 0..10 {
            p = &p * &z;
        }
        assert_eq!(p, CycInteger::one(&ring));
        assert_eq!(CycInteger::zeta_pow(&ring, 5), CycInteger::from_int(&ring, -1));
    }
}
