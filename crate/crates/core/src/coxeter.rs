//! Finite and affine Weyl groups via the geometric representation of a
//! generalized Cartan matrix.

use parking_lot::RwLock;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootdata::{CartanType, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Minimal in `W_I x` (written `^I W`).
    Left,
    /// Minimal in `x W_I` (written `W^I`).
    Right,
}

/// Group element: canonical ShortLex-least reduced word plus matrices of `x` and `x^-1`.
#[derive(Clone)]
pub struct CoxeterElement(Arc<Inner>);

struct Inner {
    word: Vec<u8>,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl CoxeterElement {
    /// Internal generator indices of the canonical word.
    pub fn word(&self) -> &[u8] {
        &self.0.word
    }

    pub fn is_empty(&self) -> bool {
        self.word().is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.word.is_empty()
    }

    pub fn matrix(&self) -> &[i64] {
        &self.0.mat
    }
}

impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.0.word == other.0.word
    }
}

impl Eq for CoxeterElement {}

impl Hash for CoxeterElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.word.hash(state)
    }
}

/// ShortLex order on canonical words.
impl Ord for CoxeterElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .word
            .len()
            .cmp(&other.0.word.len())
            .then_with(|| self.0.word.cmp(&other.0.word))
    }
}

impl PartialOrd for CoxeterElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.0.word)
    }
}

/// Result of a bounded enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub elements: Vec<CoxeterElement>,
    /// Elements longer than the bound exist.
    pub truncated: bool,
}

pub struct CoxeterSystem {
    name: String,
    finite_type: CartanType,
    affine: bool,
    root_system: RootSystem,
    cartan: Vec<Vec<i64>>,
    coxeter: Vec<Vec<u32>>,
    gens: Vec<Vec<i64>>,
    identity: CoxeterElement,
    bruhat: RwLock<HashMap<(CoxeterElement, CoxeterElement), bool>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem({})", self.name)
    }
}

impl CoxeterSystem {
    /// Builds from a type string such as `"A3"`, `"G2"` or `"affA2"`.
    pub fn from_type(s: &str) -> Result<Arc<Self>> {
        let (ct, affine) = CartanType::parse(s)?;
        let rs = RootSystem::new(ct);
        if affine {
            let theta = rs.highest_root.clone();
            Ok(Self::affine(rs, &theta, format!("aff{ct}")))
        } else {
            Ok(Self::finite(rs))
        }
    }

    pub fn finite(rs: RootSystem) -> Arc<Self> {
        let name = rs.ctype.to_string();
        let cartan = rs.cartan.clone();
        Arc::new(Self::build(name, rs.ctype, false, rs, cartan))
    }

    /// Affine extension with `alpha_0 = delta - theta`; generator 0 is the affine node.
    pub fn affine(rs: RootSystem, theta: &[i64], name: String) -> Arc<Self> {
        let n = rs.rank();
        let c = rs.coroot_coeffs(theta);
        let mut cartan = vec![vec![0i64; n + 1]; n + 1];
        cartan[0][0] = 2;
        for j in 0..n {
            cartan[0][j + 1] = -(0..n).map(|k| c[k] * rs.cartan[k][j]).sum::<i64>();
            cartan[j + 1][0] = -(0..n).map(|k| rs.cartan[j][k] * theta[k]).sum::<i64>();
            for k in 0..n {
                cartan[j + 1][k + 1] = rs.cartan[j][k];
            }
        }
        Arc::new(Self::build(name, rs.ctype, true, rs, cartan))
    }

    fn build(
        name: String,
        ct: CartanType,
        affine: bool,
        rs: RootSystem,
        cartan: Vec<Vec<i64>>,
    ) -> Self {
        let n = cartan.len();
        let mut coxeter = vec![vec![1u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coxeter[i][j] = match cartan[i][j] * cartan[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => 0,
                    };
                }
            }
        }
        let gens = (0..n)
            .map(|s| {
                let mut m = identity_mat(n);
                for j in 0..n {
                    m[s * n + j] -= cartan[s][j];
                }
                m
            })
            .collect();
        let id = identity_mat(n);
        let identity = CoxeterElement(Arc::new(Inner {
            word: vec![],
            mat: id.clone(),
            inv: id,
        }));
        Self {
            name,
            finite_type: ct,
            affine,
            root_system: rs,
            cartan,
            coxeter,
            gens,
            identity,
            bruhat: RwLock::new(HashMap::new()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    pub fn finite_type(&self) -> CartanType {
        self.finite_type
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Label of internal generator 0.
    pub fn first_label(&self) -> usize {
        if self.affine {
            0
        } else {
            1
        }
    }

    pub fn label(&self, g: u8) -> usize {
        g as usize + self.first_label()
    }

    pub fn index_of_label(&self, label: i64) -> Result<u8> {
        let g = label - self.first_label() as i64;
        if g < 0 || g >= self.rank() as i64 {
            return Err(Error::InvalidGenerator(label));
        }
        Ok(g as u8)
    }

    /// Root-system index of a finite generator.
    pub fn finite_index(&self, g: u8) -> usize {
        if self.affine {
            debug_assert!(g > 0);
            g as usize - 1
        } else {
            g as usize
        }
    }

    /// Internal indices of the finite generators.
    pub fn finite_generators(&self) -> Vec<u8> {
        let lo = u8::from(self.affine);
        (lo..self.rank() as u8).collect()
    }

    pub fn generators(&self) -> Vec<u8> {
        (0..self.rank() as u8).collect()
    }

    /// `m(s, t)`, with 0 meaning infinity.
    pub fn coxeter_entry(&self, s: u8, t: u8) -> u32 {
        self.coxeter[s as usize][t as usize]
    }

    pub fn generator_matrix(&self, s: u8) -> &[i64] {
        &self.gens[s as usize]
    }

    pub fn identity(&self) -> CoxeterElement {
        self.identity.clone()
    }

    pub fn generator(&self, s: u8) -> CoxeterElement {
        self.element(&[s]).expect("valid generator")
    }

    /// Normal form of a word of internal indices.
    pub fn element(&self, word: &[u8]) -> Result<CoxeterElement> {
        let n = self.rank();
        let mut mat = identity_mat(n);
        let mut inv = identity_mat(n);
        for &s in word {
            if s as usize >= n {
                return Err(Error::InvalidGenerator(self.label(s) as i64));
            }
            mat = self.right_gen(&mat, s);
            inv = self.left_gen(&inv, s);
        }
        Ok(self.element_of_matrices(mat, inv))
    }

    /// Normal form of a word of generator labels.
    pub fn element_from_labels(&self, labels: &[i64]) -> Result<CoxeterElement> {
        let word = labels
            .iter()
            .map(|&l| self.index_of_label(l))
            .collect::<Result<Vec<_>>>()?;
        self.element(&word)
    }

    /// Parses `"1 2 1"` or `"1,2,1"`; the empty string is the identity.
    pub fn parse_word(&self, s: &str) -> Result<CoxeterElement> {
        let labels = parse_labels(s)?;
        self.element_from_labels(&labels)
    }

    pub fn format_word(&self, x: &CoxeterElement) -> String {
        let parts: Vec<String> = x
            .word()
            .iter()
            .map(|&g| self.label(g).to_string())
            .collect();
        parts.join(" ")
    }

    /// Parses a generator subset given as labels.
    pub fn parse_subset(&self, s: &str) -> Result<Vec<u8>> {
        let mut out: Vec<u8> = parse_labels(s)?
            .into_iter()
            .map(|l| self.index_of_label(l))
            .collect::<Result<_>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn format_subset(&self, set: &[u8]) -> Vec<usize> {
        set.iter().map(|&g| self.label(g)).collect()
    }

    fn element_of_matrices(&self, mat: Vec<i64>, inv: Vec<i64>) -> CoxeterElement {
        let n = self.rank();
        let mut word = vec![];
        let mut cur = inv.clone();
        loop {
            let s = (0..n).find(|&s| column_negative(&cur, n, s));
            match s {
                None => break,
                Some(s) => {
                    word.push(s as u8);
                    cur = self.right_gen(&cur, s as u8);
                }
            }
        }
        CoxeterElement(Arc::new(Inner { word, mat, inv }))
    }

    /// `M * S_s`
    fn right_gen(&self, m: &[i64], s: u8) -> Vec<i64> {
        let n = self.rank();
        let s = s as usize;
        let mut out = m.to_vec();
        for r in 0..n {
            let ms = m[r * n + s];
            if ms != 0 {
                for c in 0..n {
                    out[r * n + c] -= ms * self.cartan[s][c];
                }
            }
        }
        out
    }

    /// `S_s * M`
    fn left_gen(&self, m: &[i64], s: u8) -> Vec<i64> {
        let n = self.rank();
        let s = s as usize;
        let mut out = m.to_vec();
        for c in 0..n {
            let mut acc = 0;
            for j in 0..n {
                acc += self.cartan[s][j] * m[j * n + c];
            }
            out[s * n + c] -= acc;
        }
        out
    }

    pub fn mul(&self, x: &CoxeterElement, y: &CoxeterElement) -> CoxeterElement {
        let n = self.rank();
        let mat = mat_mul(&x.0.mat, &y.0.mat, n);
        let inv = mat_mul(&y.0.inv, &x.0.inv, n);
        self.element_of_matrices(mat, inv)
    }

    /// `x s`
    pub fn mul_gen_right(&self, x: &CoxeterElement, s: u8) -> CoxeterElement {
        self.element_of_matrices(self.right_gen(&x.0.mat, s), self.left_gen(&x.0.inv, s))
    }

    /// `s x`
    pub fn mul_gen_left(&self, s: u8, x: &CoxeterElement) -> CoxeterElement {
        self.element_of_matrices(self.left_gen(&x.0.mat, s), self.right_gen(&x.0.inv, s))
    }

    pub fn inverse(&self, x: &CoxeterElement) -> CoxeterElement {
        self.element_of_matrices(x.0.inv.clone(), x.0.mat.clone())
    }

    pub fn length(&self, x: &CoxeterElement) -> usize {
        x.len()
    }

    pub fn is_right_descent(&self, x: &CoxeterElement, s: u8) -> bool {
        column_negative(&x.0.mat, self.rank(), s as usize)
    }

    pub fn is_left_descent(&self, x: &CoxeterElement, s: u8) -> bool {
        column_negative(&x.0.inv, self.rank(), s as usize)
    }

    pub fn descents(&self, x: &CoxeterElement, side: Side) -> Vec<u8> {
        self.generators()
            .into_iter()
            .filter(|&s| match side {
                Side::Left => self.is_left_descent(x, s),
                Side::Right => self.is_right_descent(x, s),
            })
            .collect()
    }

    /// True iff `x` is minimal in its coset for the given side.
    pub fn is_minimal(&self, x: &CoxeterElement, i: &[u8], side: Side) -> bool {
        i.iter().all(|&s| match side {
            Side::Left => !self.is_left_descent(x, s),
            Side::Right => !self.is_right_descent(x, s),
        })
    }

    /// `x(alpha_s)` in simple-root coordinates.
    pub fn act_on_simple_root(&self, x: &CoxeterElement, s: u8) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|r| x.0.mat[r * n + s as usize]).collect()
    }

    pub fn bruhat_leq(&self, x: &CoxeterElement, y: &CoxeterElement) -> bool {
        if x.len() > y.len() {
            return false;
        }
        if x.is_identity() {
            return true;
        }
        if x.len() == y.len() {
            return x == y;
        }
        let key = (x.clone(), y.clone());
        if let Some(&b) = self.bruhat.read().get(&key) {
            return b;
        }
        let s = (0..self.rank() as u8)
            .find(|&s| self.is_right_descent(y, s))
            .expect("non-identity element has a descent");
        let ys = self.mul_gen_right(y, s);
        let res = if self.is_right_descent(x, s) {
            self.bruhat_leq(&self.mul_gen_right(x, s), &ys)
        } else {
            self.bruhat_leq(x, &ys)
        };
        self.bruhat.write().insert(key, res);
        res
    }

    /// All `z <= y`, sorted ShortLex.
    pub fn enumerate_below(&self, y: &CoxeterElement) -> Vec<CoxeterElement> {
        let mut set: BTreeSet<CoxeterElement> = BTreeSet::new();
        set.insert(self.identity());
        for &s in y.word() {
            let extra: Vec<CoxeterElement> = set.iter().map(|z| self.mul_gen_right(z, s)).collect();
            set.extend(extra);
        }
        set.into_iter().collect()
    }

    /// All `z` with `x <= z <= y`, sorted ShortLex.
    pub fn interval(&self, x: &CoxeterElement, y: &CoxeterElement) -> Vec<CoxeterElement> {
        if !self.bruhat_leq(x, y) {
            return vec![];
        }
        self.enumerate_below(y)
            .into_iter()
            .filter(|z| self.bruhat_leq(x, z))
            .collect()
    }

    /// All elements of length at most `max_len`.
    pub fn elements_up_to(&self, max_len: usize) -> Enumeration {
        self.quotient_reps(&[], Side::Left, max_len)
    }

    /// Minimal coset representatives of length at most `max_len`.
    pub fn quotient_reps(&self, i: &[u8], side: Side, max_len: usize) -> Enumeration {
        let mut all = vec![self.identity()];
        let mut layer = vec![self.identity()];
        let mut truncated = false;
        let mut len = 0;
        while !layer.is_empty() {
            let mut next: BTreeSet<CoxeterElement> = BTreeSet::new();
            for x in &layer {
                for s in self.generators() {
                    let y = match side {
                        Side::Left => {
                            if self.is_right_descent(x, s) {
                                continue;
                            }
                            self.mul_gen_right(x, s)
                        }
                        Side::Right => {
                            if self.is_left_descent(x, s) {
                                continue;
                            }
                            self.mul_gen_left(s, x)
                        }
                    };
                    if self.is_minimal(&y, i, side) {
                        next.insert(y);
                    }
                }
            }
            if len == max_len {
                truncated = !next.is_empty();
                break;
            }
            len += 1;
            layer = next.into_iter().collect();
            all.extend(layer.iter().cloned());
        }
        all.sort();
        Enumeration {
            elements: all,
            truncated,
        }
    }

    /// Minimal representative of `W_I x` (left) or `x W_I` (right).
    pub fn project(&self, x: &CoxeterElement, i: &[u8], side: Side) -> CoxeterElement {
        let mut cur = x.clone();
        loop {
            let d = i.iter().copied().find(|&s| match side {
                Side::Left => self.is_left_descent(&cur, s),
                Side::Right => self.is_right_descent(&cur, s),
            });
            match d {
                None => return cur,
                Some(s) => {
                    cur = match side {
                        Side::Left => self.mul_gen_left(s, &cur),
                        Side::Right => self.mul_gen_right(&cur, s),
                    }
                }
            }
        }
    }

    /// Longest element of the parabolic subgroup `W_I`.
    pub fn longest_element(&self, i: &[u8]) -> Result<CoxeterElement> {
        if self.affine && i.len() == self.rank() {
            return Err(Error::Infinite(format!(
                "{} has no longest element",
                self.name
            )));
        }
        let mut cur = self.identity();
        loop {
            match i.iter().copied().find(|&s| !self.is_right_descent(&cur, s)) {
                None => return Ok(cur),
                Some(s) => cur = self.mul_gen_right(&cur, s),
            }
        }
    }

    pub fn longest(&self) -> Result<CoxeterElement> {
        self.longest_element(&self.generators())
    }

    /// True iff `J ∩ x I x^-1` is empty.
    pub fn is_regular(&self, x: &CoxeterElement, j: &[u8], i: &[u8]) -> bool {
        let n = self.rank();
        for &t in i {
            let r = self.act_on_simple_root(x, t);
            let nz: Vec<usize> = (0..n).filter(|&k| r[k] != 0).collect();
            if nz.len() == 1 && r[nz[0]].abs() == 1 && j.contains(&(nz[0] as u8)) {
                return false;
            }
        }
        true
    }

    /// `^J W^I_reg` up to length `max_len`.
    pub fn regular_double_coset_reps(&self, j: &[u8], i: &[u8], max_len: usize) -> Enumeration {
        let e = self.quotient_reps(j, Side::Left, max_len);
        let mut elements: Vec<CoxeterElement> = e
            .elements
            .into_iter()
            .filter(|x| self.is_minimal(x, i, Side::Right) && self.is_regular(x, j, i))
            .collect();
        elements.sort();
        Enumeration {
            elements,
            truncated: e.truncated,
        }
    }

    pub fn is_regular_double_coset_rep(&self, x: &CoxeterElement, j: &[u8], i: &[u8]) -> bool {
        self.is_minimal(x, j, Side::Left)
            && self.is_minimal(x, i, Side::Right)
            && self.is_regular(x, j, i)
    }
}

fn identity_mat(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let v = a[r * n + k];
            if v != 0 {
                for c in 0..n {
                    out[r * n + c] += v * b[k * n + c];
                }
            }
        }
    }
    out
}

/// A root's coordinates share one sign; test the first nonzero one.
fn column_negative(m: &[i64], n: usize, s: usize) -> bool {
    (0..n)
        .map(|r| m[r * n + s])
        .find(|&v| v != 0)
        .is_some_and(|v| v < 0)
}

pub fn parse_labels(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad generator list {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(t: &str) -> Arc<CoxeterSystem> {
        CoxeterSystem::from_type(t).unwrap()
    }

    fn w(s: &CoxeterSystem, word: &str) -> CoxeterElement {
        s.parse_word(word).unwrap()
    }

    fn labels(s: &CoxeterSystem, xs: &[CoxeterElement]) -> Vec<String> {
        xs.iter().map(|x| s.format_word(x)).collect()
    }

    fn subword_leq(s: &CoxeterSystem, x: &CoxeterElement, y: &CoxeterElement) -> bool {
        let word = y.word();
        (0u32..1 << word.len()).any(|mask| {
            let sub: Vec<u8> = (0..word.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| word[i])
                .collect();
            &s.element(&sub).unwrap() == x
        })
    }

    #[test]
    fn normal_forms() {
        let a2 = sys("A2");
        assert!(w(&a2, "1 1").is_identity());
        assert_eq!(a2.format_word(&w(&a2, "2 1 2")), "1 2 1");
        let aa1 = sys("affA1");
        let x = w(&aa1, "0 1 0");
        assert_eq!(aa1.format_word(&x), "0 1 0");
        assert_eq!(x.len(), 3);
        assert!(a2.parse_word("3").is_err());
        assert!(a2.parse_word("0").is_err());
    }

    #[test]
    fn coxeter_matrices() {
        let g2 = sys("G2");
        assert_eq!(g2.coxeter_entry(0, 1), 6);
        let b2 = sys("B2");
        assert_eq!(b2.coxeter_entry(0, 1), 4);
        let aa1 = sys("affA1");
        assert_eq!(aa1.coxeter_entry(0, 1), 0);
        assert_eq!(aa1.cartan(), &[vec![2, -2], vec![-2, 2]]);
        let ag2 = sys("affG2");
        assert_eq!(ag2.coxeter_entry(0, 2), 3);
        assert_eq!(ag2.coxeter_entry(0, 1), 2);
        for t in ["A3", "B3", "G2", "affA2", "affB2", "affG2", "F4"] {
            let s = sys(t);
            for a in s.generators() {
                assert!(s.element(&[a, a]).unwrap().is_identity());
                for b in s.generators() {
                    let m = s.coxeter_entry(a, b);
                    if a == b || m == 0 {
                        continue;
                    }
                    let mut word = vec![];
                    for _ in 0..m {
                        word.extend([a, b]);
                    }
                    assert!(s.element(&word).unwrap().is_identity(), "{t} {a} {b}");
                    let m = m as usize;
                    assert_eq!(s.element(&word[..m]).unwrap().len(), m);
                    assert_eq!(s.element(&word[..m + 1]).unwrap().len(), m - 1);
                }
            }
        }
    }

    #[test]
    fn descents_examples() {
        let a2 = sys("A2");
        assert!(a2.descents(&a2.identity(), Side::Left).is_empty());
        let w0 = w(&a2, "1 2 1");
        assert_eq!(a2.descents(&w0, Side::Left), vec![0, 1]);
        assert_eq!(a2.descents(&w0, Side::Right), vec![0, 1]);
        let x = w(&a2, "1 2");
        assert_eq!(a2.descents(&x, Side::Right), vec![1]);
        assert_eq!(a2.descents(&x, Side::Left), vec![0]);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = sys("A2");
        assert!(a2.bruhat_leq(&w(&a2, "1"), &w(&a2, "2 1")));
        assert!(!a2.bruhat_leq(&w(&a2, "1"), &w(&a2, "2")));
        let a3 = sys("A3");
        assert!(a3.bruhat_leq(&w(&a3, "2"), &w(&a3, "2 1 3 2")));
    }

    #[test]
    fn bruhat_matches_subwords() {
        for t in ["A2", "A3", "B2"] {
            let s = sys(t);
            let all = s.elements_up_to(20).elements;
            for x in &all {
                for y in &all {
                    assert_eq!(s.bruhat_leq(x, y), subword_leq(&s, x, y), "{t}");
                }
            }
        }
        let s = sys("affA2");
        let all = s.elements_up_to(4).elements;
        for x in &all {
            for y in &all {
                assert_eq!(s.bruhat_leq(x, y), subword_leq(&s, x, y));
            }
        }
    }

    #[test]
    fn quotients() {
        let a2 = sys("A2");
        let e = a2.quotient_reps(&[0], Side::Left, 3);
        assert_eq!(labels(&a2, &e.elements), vec!["", "2", "2 1"]);
        assert!(!e.truncated);
        assert_eq!(a2.format_word(&a2.longest().unwrap()), "1 2 1");
        assert_eq!(
            a2.format_word(&a2.project(&w(&a2, "1 2"), &[1], Side::Right)),
            "1"
        );
        assert!(sys("affA1").longest().is_err());
        let aa1 = sys("affA1");
        let e = aa1.quotient_reps(&[1], Side::Left, 3);
        assert_eq!(labels(&aa1, &e.elements), vec!["", "0", "0 1", "0 1 0"]);
        assert!(e.truncated);
    }

    #[test]
    fn regular_reps() {
        let a2 = sys("A2");
        let r = a2.regular_double_coset_reps(&[0], &[1], 3);
        assert_eq!(labels(&a2, &r.elements), vec![""]);
        let r = a2.regular_double_coset_reps(&[], &[0], 3);
        assert_eq!(labels(&a2, &r.elements), vec!["", "2", "1 2"]);
        let r = a2.regular_double_coset_reps(&[], &[], 3);
        assert_eq!(r.elements.len(), 6);
    }

    #[test]
    fn intervals() {
        let a2 = sys("A2");
        let s1 = w(&a2, "1");
        assert_eq!(a2.interval(&a2.identity(), &s1).len(), 2);
        assert_eq!(a2.enumerate_below(&a2.longest().unwrap()).len(), 6);
        let aa1 = sys("affA1");
        let i = aa1.interval(&aa1.identity(), &w(&aa1, "0 1"));
        assert_eq!(labels(&aa1, &i), vec!["", "0", "1", "0 1"]);
    }

    #[test]
    fn length_subadditivity() {
        let s = sys("affA2");
        let all = s.elements_up_to(3).elements;
        for x in &all {
            for y in &all {
                let xy = s.mul(x, y);
                assert!(xy.len() <= x.len() + y.len());
                let mut cat = x.word().to_vec();
                cat.extend_from_slice(y.word());
                let reduced = xy.len() == cat.len();
                assert_eq!(reduced, xy.len() == x.len() + y.len());
                assert_eq!(s.inverse(&xy), s.mul(&s.inverse(y), &s.inverse(x)));
            }
        }
    }

    #[test]
    fn matrix_equality_iff_word_equality() {
        for t in ["A3", "B2", "affA1", "affA2"] {
            let s = sys(t);
            let all = s.elements_up_to(6).elements;
            let mut mats: HashMap<Vec<i64>, usize> = HashMap::new();
            for x in &all {
                *mats.entry(x.matrix().to_vec()).or_default() += 1;
            }
            assert_eq!(mats.len(), all.len(), "{t}");
        }
    }

    #[test]
    fn w0_twist_bijection() {
        for t in ["A2", "B2", "A3"] {
            let s = sys(t);
            let w0 = s.longest().unwrap();
            let n = s.rank() as u8;
            for mask in 0u32..(1 << n) {
                let i: Vec<u8> = (0..n).filter(|g| mask & (1 << g) != 0).collect();
                let wi = s.longest_element(&i).unwrap();
                let reps = s.quotient_reps(&i, Side::Left, 100).elements;
                let mut img: Vec<CoxeterElement> =
                    reps.iter().map(|z| s.mul(&s.mul(&wi, z), &w0)).collect();
                img.sort();
                assert_eq!(img, reps, "{t} {i:?}");
                for x in &reps {
                    assert!(s.bruhat_leq(x, &w0));
                }
            }
        }
    }
}
