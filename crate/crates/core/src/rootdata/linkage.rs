//! Affine Weyl groups as lattice-by-W semidirect products, the dilated dot
//! action, alcove normalization and the linkage data of quantum groups at a
//! root of unity.

use std::fmt;
use std::sync::Arc;

use super::{add, sub, CartanType, RootSystem, Weight};
use crate::coxeter::{CoxeterElement, CoxeterSystem, Enumeration, Side};
use crate::error::{Error, Result};

/// `t_gamma w`, with `gamma` in simple-root coordinates and `w` in the finite Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub translation: Vec<i64>,
    pub finite: CoxeterElement,
}

/// Affine Weyl group generated by the finite reflections and `s_0 = t_theta s_theta`.
pub struct AffineWeylGroup {
    rs: RootSystem,
    finite: Arc<CoxeterSystem>,
    affine: Arc<CoxeterSystem>,
    theta: Vec<i64>,
    s_theta: CoxeterElement,
}

impl fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineWeylGroup({})", self.affine.name())
    }
}

const MAX_STEPS: usize = 1_000_000;

impl AffineWeylGroup {
    pub fn new(rs: RootSystem, theta: Vec<i64>, name: String) -> Self {
        let finite = CoxeterSystem::finite(rs.clone());
        let affine = CoxeterSystem::affine(rs.clone(), &theta, name);
        let n = rs.rank();
        let c = rs.coroot_coeffs(&theta);
        // s_theta(gamma) = gamma - <gamma, theta^vee> theta on root coordinates
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            let pair: i64 = (0..n).map(|k| c[k] * rs.cartan[k][j]).sum();
            for r in 0..n {
                m[r * n + j] = i64::from(r == j) - pair * theta[r];
            }
        }
        let s_theta = matrix_to_element(&finite, &m);
        Self {
            rs,
            finite,
            affine,
            theta,
            s_theta,
        }
    }

    /// Untwisted affine group of a finite type (`theta` = highest root).
    pub fn untwisted(ct: CartanType) -> Self {
        let rs = RootSystem::new(ct);
        let theta = rs.highest_root.clone();
        Self::new(rs, theta, format!("aff{ct}"))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn finite_system(&self) -> &Arc<CoxeterSystem> {
        &self.finite
    }

    pub fn affine_system(&self) -> &Arc<CoxeterSystem> {
        &self.affine
    }

    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement {
            translation: vec![0; self.rs.rank()],
            finite: self.finite.identity(),
        }
    }

    /// Image of an affine generator (internal index, 0 = affine node).
    pub fn generator(&self, g: u8) -> AffineElement {
        if g == 0 {
            AffineElement {
                translation: self.theta.clone(),
                finite: self.s_theta.clone(),
            }
        } else {
            AffineElement {
                translation: vec![0; self.rs.rank()],
                finite: self.finite.generator(g - 1),
            }
        }
    }

    pub fn translation(&self, gamma: Vec<i64>) -> AffineElement {
        AffineElement {
            translation: gamma,
            finite: self.finite.identity(),
        }
    }

    fn act_root(&self, w: &CoxeterElement, gamma: &[i64]) -> Vec<i64> {
        let n = self.rs.rank();
        let m = w.matrix();
        (0..n)
            .map(|r| (0..n).map(|c| m[r * n + c] * gamma[c]).sum())
            .collect()
    }

    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let moved = self.act_root(&a.finite, &b.translation);
        AffineElement {
            translation: a
                .translation
                .iter()
                .zip(&moved)
                .map(|(x, y)| x + y)
                .collect(),
            finite: self.finite.mul(&a.finite, &b.finite),
        }
    }

    pub fn from_word(&self, x: &CoxeterElement) -> AffineElement {
        let mut acc = self.identity();
        for &g in x.word() {
            acc = self.mul(&acc, &self.generator(g));
        }
        acc
    }

    /// `t_gamma w ._e lambda = w(lambda + rho) - rho + e gamma`.
    pub fn dot(&self, a: &AffineElement, lambda: &Weight, e: i64) -> Weight {
        let rho = self.rs.rho();
        let moved = self
            .rs
            .act_weight(&self.finite, &a.finite, &add(lambda, &rho));
        let g = self.rs.root_to_weight(&a.translation);
        let shift = Weight(g.0.iter().map(|c| c * e).collect());
        add(&sub(&moved, &rho), &shift)
    }

    pub fn dot_word(&self, x: &CoxeterElement, lambda: &Weight, e: i64) -> Weight {
        self.dot(&self.from_word(x), lambda, e)
    }

    fn theta_pair(&self, mu: &Weight) -> i64 {
        self.rs.pair_coroot(mu, &self.theta)
    }

    /// Returns `(x, lambda0, I)` with `lambda0` in the closed fundamental `e`-alcove,
    /// `x ._e lambda0 = lambda`, `I` the simple reflections fixing `lambda0`, and
    /// `x` minimal in `x W_I`.
    pub fn normalize(&self, lambda: &Weight, e: i64) -> Result<(CoxeterElement, Weight, Vec<u8>)> {
        let n = self.rs.rank();
        if lambda.0.len() != n {
            return Err(Error::Validation(format!(
                "weight {lambda} has {} coordinates, rank is {n}",
                lambda.0.len()
            )));
        }
        if e < 1 {
            return Err(Error::Validation(format!("dilation {e} must be positive")));
        }
        let rho = self.rs.rho();
        let mut mu = add(lambda, &rho);
        let mut word: Vec<u8> = vec![];
        for _ in 0..MAX_STEPS {
            if let Some(i) = (0..n).find(|&i| mu.0[i] < 0) {
                mu = self.rs.reflect_weight(i, &mu);
                word.push(i as u8 + 1);
                continue;
            }
            let p = self.theta_pair(&mu);
            if p > e {
                let tw = self.rs.root_to_weight(&self.theta);
                mu = Weight(
                    mu.0.iter()
                        .zip(&tw.0)
                        .map(|(m, t)| m - (p - e) * t)
                        .collect(),
                );
                word.push(0);
                continue;
            }
            let lambda0 = sub(&mu, &rho);
            let mut stab: Vec<u8> = (0..n)
                .filter(|&i| mu.0[i] == 0)
                .map(|i| i as u8 + 1)
                .collect();
            if p == e {
                stab.insert(0, 0);
            }
            let x = self.affine.element(&word)?;
            let x = self.affine.project(&x, &stab, Side::Right);
            return Ok((x, lambda0, stab));
        }
        Err(Error::Internal(format!(
            "alcove walk for {lambda} did not terminate"
        )))
    }

    /// Canonical word of an affine element.
    pub fn to_word(&self, a: &AffineElement) -> Result<CoxeterElement> {
        let rho = self.rs.rho();
        let e = self.theta_pair(&rho) + 1;
        let mu = self.dot(a, &Weight::zero(self.rs.rank()), e);
        let (x, l0, stab) = self.normalize(&mu, e)?;
        if !stab.is_empty() || l0 != Weight::zero(self.rs.rank()) {
            return Err(Error::Internal(
                "regular base point has a stabilizer".into(),
            ));
        }
        Ok(x)
    }
}

/// Normal form of a finite element from its matrix, by descent peeling.
fn matrix_to_element(sys: &CoxeterSystem, m: &[i64]) -> CoxeterElement {
    let n = sys.rank();
    let mut cur = m.to_vec();
    let mut word = vec![];
    loop {
        // right descent s: column s negative; peel from the right
        let s = (0..n).find(|&s| {
            (0..n)
                .map(|r| cur[r * n + s])
                .find(|&v| v != 0)
                .is_some_and(|v| v < 0)
        });
        match s {
            None => break,
            Some(s) => {
                word.push(s as u8);
                let g = sys.generator_matrix(s as u8);
                let mut next = vec![0i64; n * n];
                for r in 0..n {
                    for k in 0..n {
                        let v = cur[r * n + k];
                        if v != 0 {
                            for c in 0..n {
                                next[r * n + c] += v * g[k * n + c];
                            }
                        }
                    }
                }
                cur = next;
            }
        }
    }
    word.reverse();
    sys.element(&word).expect("valid generators")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    Root,
    Coroot,
}

/// Linkage data of a quantum group at an `ell`-th root of unity.
#[derive(Debug)]
pub struct LinkageDatum {
    pub ctype: CartanType,
    pub ell: i64,
    pub ell_prime: i64,
    pub d: i64,
    pub r: i64,
    pub lattice: Lattice,
    pub group: AffineWeylGroup,
}

impl LinkageDatum {
    pub fn new(ctype: CartanType, ell: i64) -> Result<Self> {
        if ell < 1 {
            return Err(Error::Validation(format!("ell = {ell} must be at least 1")));
        }
        let rs = RootSystem::new(ctype);
        let ell_prime = if ell % 2 == 1 { ell } else { ell / 2 };
        let d = rs.d_ratio;
        let divides = ell_prime % d == 0;
        let (r, lattice, theta, name) = if divides {
            (
                ell_prime / d,
                Lattice::Coroot,
                rs.highest_root.clone(),
                format!("aff{ctype}"),
            )
        } else {
            (
                ell_prime,
                Lattice::Root,
                rs.highest_short_root.clone(),
                format!("aff{ctype}-hs"),
            )
        };
        Ok(Self {
            ctype,
            ell,
            ell_prime,
            d,
            r,
            lattice,
            group: AffineWeylGroup::new(rs, theta, name),
        })
    }

    pub fn from_str(s: &str, ell: i64) -> Result<Self> {
        let (ct, affine) = CartanType::parse(s)?;
        if affine {
            return Err(Error::Validation(format!(
                "quantum data take a finite type, got {s}"
            )));
        }
        Self::new(ct, ell)
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        self.group.affine_system()
    }

    /// `(lambda + rho)(alpha^vee) >= 0` for simple `alpha` and `(lambda + rho)(theta^vee) <= r`.
    pub fn alcove_walls(&self) -> Vec<(Vec<i64>, i64)> {
        let n = self.ctype.rank;
        let mut walls: Vec<(Vec<i64>, i64)> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                (c, 0)
            })
            .collect();
        walls.push((
            self.group.root_system().coroot_coeffs(self.group.theta()),
            self.r,
        ));
        walls
    }

    pub fn in_closed_alcove(&self, lambda: &Weight) -> bool {
        let rs = self.group.root_system();
        let mu = add(lambda, &rs.rho());
        mu.0.iter().all(|&c| c >= 0) && rs.pair_coroot(&mu, self.group.theta()) <= self.r
    }

    pub fn alcove_normalize(&self, lambda: &Weight) -> Result<(CoxeterElement, Weight, Vec<u8>)> {
        self.group.normalize(lambda, self.r)
    }

    pub fn dot(&self, x: &CoxeterElement, lambda: &Weight) -> Weight {
        self.group.dot_word(x, lambda, self.r)
    }

    /// Minimal representatives `x` with `x ._r lambda0` dominant, i.e. `^S W^I_reg`.
    pub fn dominant_reps(&self, lambda0: &Weight, i: &[u8], max_len: usize) -> Result<Enumeration> {
        let sys = self.system();
        let reps = sys.regular_double_coset_reps(&sys.finite_generators(), i, max_len);
        for x in &reps.elements {
            if !self.dot(x, lambda0).is_dominant() {
                return Err(Error::Internal(format!(
                    "{} ._r {lambda0} is not dominant",
                    sys.format_word(x)
                )));
            }
        }
        Ok(reps)
    }
}
