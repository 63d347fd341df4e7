//! Exact rational numbers and sparse bivariate polynomials over them.
//!
//! Every identity and inequality in this crate is decided with exact
//! arithmetic; there is no floating-point fallback anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision reduced fraction. `num_rational` keeps values
/// normalized (gcd 1, positive denominator), which is exactly the
/// invariant we need for hashing and memo keys.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p" (arbitrary precision).
pub fn parse_rational(s: &str) -> Result<Rational, crate::Error> {
    Rational::from_str(s.trim()).map_err(|_| crate::Error::Parse(format!("invalid rational `{s}`")))
}

/// Binomial coefficient C(n, k) as a `BigInt`; zero when `k > n` or `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Exact power with the `0^0 = 1` convention used by the closed forms.
pub fn rat_pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `r` rendered with exactly four decimal places, rounding half away from zero.
pub fn decimal_4dp_rounded(r: &Rational) -> String {
    decimal_4dp(r, true)
}

/// `r` rendered with exactly four decimal places, truncating toward zero.
pub fn decimal_4dp_truncated(r: &Rational) -> String {
    decimal_4dp(r, false)
}

fn decimal_4dp(r: &Rational, round: bool) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scaled = abs * Rational::from_integer(BigInt::from(10_000));
    let mut units = scaled.trunc().to_integer();
    if round {
        let frac = &scaled - Rational::from_integer(units.clone());
        if frac >= rat(1, 2) {
            units += 1;
        }
    }
    let (int, frac) = (units.clone() / 10_000, units % 10_000);
    format!("{sign}{int}.{frac:04}")
}

/// Sparse bivariate polynomial over [`Rational`], keyed by `(i, j)` degree
/// pairs in `x^i y^j`. No stored coefficient is zero, so derived equality
/// is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, Rational::one())
    }

    /// `c * x^i * y^j`.
    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Stored coefficient of `x^i y^j`, or zero.
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplication by `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + i, b + j), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut xpow: Vec<Rational> = vec![Rational::one()];
        let mut ypow: Vec<Rational> = vec![Rational::one()];
        let mut sum = Rational::zero();
        for (&(i, j), c) in &self.terms {
            while xpow.len() <= i as usize {
                let next = xpow.last().unwrap() * x;
                xpow.push(next);
            }
            while ypow.len() <= j as usize {
                let next = ypow.last().unwrap() * y;
                ypow.push(next);
            }
            sum += c * &xpow[i as usize] * &ypow[j as usize];
        }
        sum
    }

    /// Sum of all coefficients, i.e. the value at (1, 1).
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Swaps the roles of x and y.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Maximum x-degree and y-degree.
    pub fn degrees(&self) -> (u32, u32) {
        let dx = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let dy = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        (dx, dy)
    }

    /// Display/golden-file order: total degree descending, then x-degree
    /// descending. This matches the order used for the worked examples.
    fn ordered_keys(&self) -> Vec<(u32, u32)> {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| {
            let ta = a.0 + a.1;
            let tb = b.0 + b.1;
            tb.cmp(&ta).then(b.0.cmp(&a.0))
        });
        keys
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c);
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, &-c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl MulAssign<&BiPoly> for BiPoly {
    fn mul_assign(&mut self, rhs: &BiPoly) {
        *self = &*self * rhs;
    }
}

/// Textual format: terms joined by " + ", each term `p/q*x^i*y^j` with unit
/// exponents and unit coefficients elided, e.g.
/// `2/15*x^3 + 4/15*x^2 + 1/3*x*y + 2/15*y^2 + 1/15*x + 1/15*y`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j) in self.ordered_keys() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = &self.terms[&(i, j)];
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || (i, j) == (0, 0) {
                parts.push(c.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BiPoly {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| crate::Error::Parse(format!("invalid polynomial `{s}`: {msg}"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        if s == "0" {
            return Ok(BiPoly::zero());
        }
        let mut poly = BiPoly::zero();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = Rational::one();
            let mut i = 0u32;
            let mut j = 0u32;
            let mut saw_coeff = false;
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix('x') {
                    if i != 0 {
                        return Err(bad("repeated x factor"));
                    }
                    i = parse_exponent(rest).ok_or_else(|| bad("bad x exponent"))?;
                } else if let Some(rest) = factor.strip_prefix('y') {
                    if j != 0 {
                        return Err(bad("repeated y factor"));
                    }
                    j = parse_exponent(rest).ok_or_else(|| bad("bad y exponent"))?;
                } else {
                    if saw_coeff {
                        return Err(bad("two coefficients in one term"));
                    }
                    saw_coeff = true;
                    coeff = parse_rational(factor)?;
                }
            }
            poly.add_term(i, j, &coeff);
        }
        Ok(poly)
    }
}

fn parse_exponent(rest: &str) -> Option<u32> {
    if rest.is_empty() {
        Some(1)
    } else {
        rest.strip_prefix('^')?.parse().ok()
    }
}
