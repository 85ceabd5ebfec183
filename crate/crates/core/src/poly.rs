//! Sparse Laurent polynomials in `v` with integer coefficients.

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Element of `Z[v, v^-1]`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `v`
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c.into());
        }
        p
    }

    /// Adds `c * v^k` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_at(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Largest exponent, or `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent, or `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// True iff every exponent is congruent to `offset` mod 2.
    pub fn support_query(&self, offset: i64) -> bool {
        self.terms
            .keys()
            .all(|&k| (i64::from(k) - offset).rem_euclid(2) == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| self.terms.get(&-k) == Some(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Keeps the terms with exponent `<= k`.
    pub fn truncate_above(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .range(..=k)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, c) in &self.terms {
            let val = match c.to_i64() {
                Some(i) => Value::from(i),
                None => Value::String(c.to_string()),
            };
            m.insert(k.to_string(), val);
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("polynomial json must be an object, got {v}")))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let k: i32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
            let c: BigInt = match c {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?,
                Value::String(s) => s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            if c.is_zero() {
                return Err(Error::Parse(format!("zero coefficient at exponent {k}")));
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    /// Parses the text form produced by `Display`, e.g. `-v^-1 + 2 + 3*v^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad polynomial {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        if t == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        let bytes = t.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() {
                let b = bytes[i];
                if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                    break;
                }
                i += 1;
            }
            let term = &t[start..i];
            if term.is_empty() {
                return Err(bad());
            }
            let (c, k) = match term.find('v') {
                None => (term.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = match &term[..pos] {
                        "" => BigInt::one(),
                        pre => pre
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<BigInt>()
                            .map_err(|_| bad())?,
                    };
                    let k = match &term[pos + 1..] {
                        "" => 1,
                        post => post
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<i32>()
                            .map_err(|_| bad())?,
                    };
                    (c, k)
                }
            };
            p.add_term(k, sign * c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *k == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if *k == 1 {
                write!(f, "v")?;
            } else {
                write!(f, "v^{k}")?;
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}
