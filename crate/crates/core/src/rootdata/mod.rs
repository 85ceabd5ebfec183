//! Finite root systems, weights and dot actions; affine Weyl groups and the
//! quantum linkage data live in [`linkage`].

pub mod linkage;

use num::rational::Rational64;
use num::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

use crate::coxeter::{CoxeterElement, CoxeterSystem};
use crate::error::{Error, Result};

/// Finite Cartan type in Bourbaki labelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let ok = match family {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !ok {
            return Err(Error::UnknownType(format!("{family}{rank}")));
        }
        Ok(Self { family, rank })
    }

    /// Parses `"A3"`, `"G2"`, also `"affA2"` (returns the affine flag).
    pub fn parse(s: &str) -> Result<(Self, bool)> {
        let t = s.trim();
        let (body, affine) = match t.strip_prefix("aff") {
            Some(b) => (b, true),
            None => (t, false),
        };
        let mut chars = body.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        Ok((
            Self::new(family, rank).map_err(|_| Error::UnknownType(s.to_string()))?,
            affine,
        ))
    }

    /// `a[i][j] = <alpha_j, alpha_i^vee>` with 0-based indices.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            'A' | 'B' | 'C' | 'F' | 'G' => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            'D' => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            'E' => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            _ => unreachable!(),
        }
        match self.family {
            'B' => a[n - 1][n - 2] = -2,
            'C' => a[n - 2][n - 1] = -2,
            'F' => a[2][1] = -2,
            'G' => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        t.split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ctype: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = (alpha_i, alpha_i) / 2`, scaled so short roots have 1.
    pub sym: Vec<i64>,
    /// Positive roots in simple-root coordinates, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub highest_short_root: Vec<i64>,
    pub d_ratio: i64,
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Self {
        let cartan = ctype.cartan_matrix();
        let n = ctype.rank;
        let sym = symmetrizer(&cartan);
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        while let Some(r) = frontier.pop() {
            if !found.insert(r.clone()) {
                continue;
            }
            for i in 0..n {
                let p: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
                let mut s = r.clone();
                s[i] -= p;
                if s.iter().all(|&c| c >= 0) && s.iter().any(|&c| c > 0) && !found.contains(&s) {
                    frontier.push(s);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> = found.into_iter().collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let mut rs = RootSystem {
            ctype,
            cartan,
            sym,
            positive_roots,
            highest_root: vec![],
            highest_short_root: vec![],
            d_ratio: 1,
        };
        let min_d = *rs.sym.iter().min().unwrap();
        let max_d = *rs.sym.iter().max().unwrap();
        rs.d_ratio = max_d / min_d;
        rs.highest_root = rs.positive_roots.last().unwrap().clone();
        rs.highest_short_root = rs
            .positive_roots
            .iter()
            .filter(|r| rs.half_norm(r) == min_d)
            .max_by_key(|r| r.iter().sum::<i64>())
            .unwrap()
            .clone();
        rs
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (ct, affine) = CartanType::parse(s)?;
        if affine {
            return Err(Error::Validation(format!("{s} is not a finite type")));
        }
        Ok(Self::new(ct))
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    /// `(beta, beta) / 2` for a root in simple-root coordinates.
    pub fn half_norm(&self, r: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += r[i] * r[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s / 2
    }

    /// Coefficients of `beta^vee` in simple coroots.
    pub fn coroot_coeffs(&self, r: &[i64]) -> Vec<i64> {
        let d = self.half_norm(r);
        r.iter()
            .zip(&self.sym)
            .map(|(b, di)| {
                debug_assert_eq!((b * di) % d, 0);
                b * di / d
            })
            .collect()
    }

    /// `<lambda, beta^vee>` for `lambda` in weight coordinates.
    pub fn pair_coroot(&self, lambda: &Weight, beta: &[i64]) -> i64 {
        self.coroot_coeffs(beta)
            .iter()
            .zip(&lambda.0)
            .map(|(c, l)| c * l)
            .sum()
    }

    /// Weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, r: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|k| (0..n).map(|j| self.cartan[k][j] * r[j]).sum())
                .collect(),
        )
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn is_simply_laced(&self) -> bool {
        self.d_ratio == 1
    }

    pub fn is_long(&self, r: &[i64]) -> bool {
        self.half_norm(r) == *self.sym.iter().max().unwrap()
    }

    /// `s_i(lambda)` with 0-based `i`.
    pub fn reflect_weight(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.0[i];
        let n = self.rank();
        Weight(
            (0..n)
                .map(|k| lambda.0[k] - c * self.cartan[k][i])
                .collect(),
        )
    }

    /// `s_i(r)` on simple-root coordinates.
    pub fn reflect_root(&self, i: usize, r: &[i64]) -> Vec<i64> {
        let p: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * r[j]).sum();
        let mut s = r.to_vec();
        s[i] -= p;
        s
    }

    /// `w(lambda)` for a finite Weyl group element (words use labels `1..=n`).
    pub fn act_weight(&self, sys: &CoxeterSystem, w: &CoxeterElement, lambda: &Weight) -> Weight {
        let mut out = lambda.clone();
        for &g in w.word().iter().rev() {
            out = self.reflect_weight(sys.finite_index(g), &out);
        }
        out
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot(&self, sys: &CoxeterSystem, w: &CoxeterElement, lambda: &Weight) -> Weight {
        let rho = self.rho();
        let shifted = add(lambda, &rho);
        sub(&self.act_weight(sys, w, &shifted), &rho)
    }

    /// Stabilizer of an antidominant weight `lambda in -rho - X^+` under the dot action,
    /// as internal generator indices.
    pub fn antidominant_stabilizer(&self, lambda: &Weight) -> Result<Vec<u8>> {
        if lambda.0.len() != self.rank() {
            return Err(Error::Validation(format!(
                "weight {lambda} has {} coordinates, rank is {}",
                lambda.0.len(),
                self.rank()
            )));
        }
        let mut out = vec![];
        for (i, c) in lambda.0.iter().enumerate() {
            match c + 1 {
                0 => out.push(i as u8),
                k if k > 0 => {
                    return Err(Error::Validation(format!(
                        "weight {lambda} is not in -rho - X^+"
                    )))
                }
                _ => {}
            }
        }
        Ok(out)
    }
}

pub(crate) fn add(a: &Weight, b: &Weight) -> Weight {
    Weight(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
}

pub(crate) fn sub(a: &Weight, b: &Weight) -> Weight {
    Weight(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].unwrap();
                d[j] = Some(di * Rational64::from(a[i][j]) / Rational64::from(a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.unwrap()).collect();
    let min = d
        .iter()
        .copied()
        .fold(d[0], |m, x| if x < m { x } else { m });
    let out: Vec<i64> = d
        .iter()
        .map(|x| {
            let q = *x / min;
            debug_assert!(q.is_integer() && !q.is_zero());
            q.to_integer()
        })
        .collect();
    out
}
