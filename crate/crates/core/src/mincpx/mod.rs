//! Minimal complexes over an explicitly presented Krull-Schmidt category and a
//! brute-force oracle realizing a small highest weight category.

pub mod block;
pub mod quiver;

use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Q;

/// Hom-spaces between indecomposables, with composition tensors and radical flags.
#[derive(Clone, Debug)]
pub struct CategoryPresentation {
    pub labels: Vec<String>,
    /// `hom_dim[a][b] = dim Hom(a, b)`
    pub hom_dim: Vec<Vec<usize>>,
    /// `comp[(a, b, c)][i][j]`: coordinates of `g_j . f_i` for `f_i in Hom(a,b)`, `g_j in Hom(b,c)`.
    pub comp: BTreeMap<(usize, usize, usize), Vec<Vec<Vec<Q>>>>,
    /// Coordinates of `id_a` in `Hom(a, a)`.
    pub identity: Vec<Vec<Q>>,
    /// `radical[a][b][k]`: basis vector `k` of `Hom(a, b)` lies in the radical.
    pub radical: Vec<Vec<Vec<bool>>>,
}

/// Element of `Hom(a, b)` in coordinates.
pub type Morph = Vec<Q>;

impl CategoryPresentation {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::Validation(format!("unknown label {name}")))
    }

    pub fn zero(&self, a: usize, b: usize) -> Morph {
        vec![Q::zero(); self.hom_dim[a][b]]
    }

    /// `g . f` for `f: a -> b`, `g: b -> c`.
    pub fn compose(&self, a: usize, b: usize, c: usize, g: &[Q], f: &[Q]) -> Morph {
        let mut out = self.zero(a, c);
        if f.iter().all(|x| x.is_zero()) || g.iter().all(|x| x.is_zero()) {
            return out;
        }
        let t = &self.comp[&(a, b, c)];
        for (i, fi) in f.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in g.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let k = fi * gj;
                for (o, x) in out.iter_mut().zip(&t[i][j]) {
                    if !x.is_zero() {
                        *o += &k * x;
                    }
                }
            }
        }
        out
    }

    /// A morphism is radical when all its non-radical coordinates vanish.
    pub fn is_radical(&self, a: usize, b: usize, f: &[Q]) -> bool {
        f.iter()
            .zip(&self.radical[a][b])
            .all(|(x, &r)| r || x.is_zero())
    }

    fn basis_vec(&self, a: usize, b: usize, k: usize) -> Morph {
        let mut v = self.zero(a, b);
        v[k] = Q::one();
        v
    }

    /// Inverse of an invertible endomorphism `c id + n` as `c^-1 sum (-n/c)^k`.
    pub fn invert(&self, a: usize, f: &[Q]) -> Result<Morph> {
        let id = &self.identity[a];
        let k = self.radical[a][a]
            .iter()
            .position(|&r| !r)
            .ok_or_else(|| Error::Internal("endomorphism space without a unit".into()))?;
        let c = f[k].clone() / id[k].clone();
        if c.is_zero() {
            return Err(Error::Internal(
                "attempt to invert a radical endomorphism".into(),
            ));
        }
        let cinv = c.recip();
        let n: Morph = f.iter().zip(id).map(|(x, i)| x - &c * i).collect();
        let m: Morph = n.iter().map(|x| -(x * &cinv)).collect();
        let mut term = id.clone();
        let mut acc = id.clone();
        for _ in 0..=self.hom_dim[a][a] {
            term = self.compose(a, a, a, &m, &term);
            if term.iter().all(|x| x.is_zero()) {
                return Ok(acc.iter().map(|x| x * &cinv).collect());
            }
            for (o, t) in acc.iter_mut().zip(&term) {
                *o += t;
            }
        }
        Err(Error::Internal(
            "radical endomorphism is not nilpotent".into(),
        ))
    }

    /// Associativity, units and the local endomorphism condition.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        let bad = |s: String| Err(Error::Validation(s));
        for a in 0..n {
            let units = self.radical[a][a].iter().filter(|&&r| !r).count();
            if units != 1 {
                return bad(format!(
                    "End({}) modulo its radical is not one-dimensional",
                    self.labels[a]
                ));
            }
            for b in 0..n {
                if a != b && self.radical[a][b].iter().any(|&r| !r) {
                    return bad(format!(
                        "non-radical basis vector in Hom({}, {})",
                        self.labels[a], self.labels[b]
                    ));
                }
                for k in 0..self.hom_dim[a][b] {
                    let f = self.basis_vec(a, b, k);
                    if self.compose(a, b, b, &self.identity[b], &f) != f
                        || self.compose(a, a, b, &f, &self.identity[a]) != f
                    {
                        return bad(format!(
                            "identity is not a unit on Hom({}, {})",
                            self.labels[a], self.labels[b]
                        ));
                    }
                }
            }
            for k in 0..self.hom_dim[a][a] {
                if !self.radical[a][a][k] {
                    continue;
                }
                let f = self.basis_vec(a, a, k);
                let mut p = f.clone();
                let mut nil = false;
                for _ in 0..=self.hom_dim[a][a] {
                    p = self.compose(a, a, a, &f, &p);
                    if p.iter().all(|x| x.is_zero()) {
                        nil = true;
                        break;
                    }
                }
                if !nil {
                    return bad(format!(
                        "radical endomorphism of {} is not nilpotent",
                        self.labels[a]
                    ));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for i in 0..self.hom_dim[a][b] {
                            for j in 0..self.hom_dim[b][c] {
                                for k in 0..self.hom_dim[c][d] {
                                    let (f, g, h) = (
                                        self.basis_vec(a, b, i),
                                        self.basis_vec(b, c, j),
                                        self.basis_vec(c, d, k),
                                    );
                                    let l =
                                        self.compose(a, c, d, &h, &self.compose(a, b, c, &g, &f));
                                    let r =
                                        self.compose(a, b, d, &self.compose(b, c, d, &h, &g), &f);
                                    if l != r {
                                        return bad("composition is not associative".into());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Block matrix of morphisms from `cols` summands to `rows` summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `blocks[r][c] in Hom(cols[c], rows[r])`
    pub blocks: Vec<Vec<Morph>>,
}

impl BlockMatrix {
    pub fn zero(pres: &CategoryPresentation, rows: &[usize], cols: &[usize]) -> Self {
        Self {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            blocks: rows
                .iter()
                .map(|&r| cols.iter().map(|&c| pres.zero(c, r)).collect())
                .collect(),
        }
    }

    pub fn identity(pres: &CategoryPresentation, labels: &[usize]) -> Self {
        let mut m = Self::zero(pres, labels, labels);
        for (i, &a) in labels.iter().enumerate() {
            m.blocks[i][i] = pres.identity[a].clone();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().flatten().all(|x| x.is_zero())
    }

    /// `self . other`
    pub fn compose(&self, pres: &CategoryPresentation, other: &BlockMatrix) -> Result<BlockMatrix> {
        if self.cols != other.rows {
            return Err(Error::Validation("block shapes do not compose".into()));
        }
        let mut out = Self::zero(pres, &self.rows, &other.cols);
        for (r, &rl) in self.rows.iter().enumerate() {
            for (c, &cl) in other.cols.iter().enumerate() {
                for (k, &kl) in self.cols.iter().enumerate() {
                    let p = pres.compose(cl, kl, rl, &self.blocks[r][k], &other.blocks[k][c]);
                    for (o, x) in out.blocks[r][c].iter_mut().zip(p) {
                        *o += x;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> BlockMatrix {
        let mut m = self.clone();
        for x in m.blocks.iter_mut().flatten().flatten() {
            *x = -x.clone();
        }
        m
    }

    pub fn sub(&self, other: &BlockMatrix) -> BlockMatrix {
        let mut m = self.clone();
        for (a, b) in m
            .blocks
            .iter_mut()
            .flatten()
            .zip(other.blocks.iter().flatten())
        {
            for (x, y) in a.iter_mut().zip(b) {
                *x -= y;
            }
        }
        m
    }

    fn check_shape(&self, pres: &CategoryPresentation) -> Result<()> {
        if self.blocks.len() != self.rows.len() {
            return Err(Error::Validation("malformed block matrix".into()));
        }
        for (r, row) in self.blocks.iter().enumerate() {
            if row.len() != self.cols.len() {
                return Err(Error::Validation("malformed block matrix".into()));
            }
            for (c, b) in row.iter().enumerate() {
                if b.len() != pres.hom_dim[self.cols[c]][self.rows[r]] {
                    return Err(Error::Validation(
                        "block has the wrong Hom dimension".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn drop_row(&mut self, r: usize) {
        self.rows.remove(r);
        self.blocks.remove(r);
    }

    fn drop_col(&mut self, c: usize) {
        self.cols.remove(c);
        for row in &mut self.blocks {
            row.remove(c);
        }
    }
}

/// Bounded complex with cohomological indexing: `d[k]: terms[k] -> terms[k+1]`,
/// where `terms[k]` sits in degree `lo + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalComplex {
    pub lo: i32,
    pub terms: Vec<Vec<usize>>,
    pub d: Vec<BlockMatrix>,
}

/// Search order for invertible blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// Lowest degree first, row-major within the block matrix.
    LowestFirst,
    /// Highest degree first, reverse row-major.
    HighestFirst,
}

impl FormalComplex {
    pub fn zero() -> Self {
        Self {
            lo: 0,
            terms: vec![],
            d: vec![],
        }
    }

    /// A single term in degree `deg`.
    pub fn single(labels: Vec<usize>, deg: i32) -> Self {
        Self {
            lo: deg,
            terms: vec![labels],
            d: vec![],
        }
    }

    pub fn from_parts(
        pres: &CategoryPresentation,
        lo: i32,
        terms: Vec<Vec<usize>>,
        d: Vec<BlockMatrix>,
    ) -> Result<Self> {
        let c = Self { lo, terms, d };
        c.check(pres)?;
        Ok(c.trimmed())
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, deg: i32) -> &[usize] {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[k as usize]
        }
    }

    /// `d^deg`, zero outside the stored range.
    pub fn diff(&self, pres: &CategoryPresentation, deg: i32) -> BlockMatrix {
        let k = deg - self.lo;
        if k >= 0 && (k as usize) < self.d.len() {
            self.d[k as usize].clone()
        } else {
            BlockMatrix::zero(pres, self.term(deg + 1), self.term(deg))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    /// Shapes and `d . d = 0`.
    pub fn check(&self, pres: &CategoryPresentation) -> Result<()> {
        if self.d.len() + 1 != self.terms.len() && !(self.terms.is_empty() && self.d.is_empty()) {
            return Err(Error::Validation(
                "complex needs one differential between consecutive terms".into(),
            ));
        }
        for (k, d) in self.d.iter().enumerate() {
            if d.cols != self.terms[k] || d.rows != self.terms[k + 1] {
                return Err(Error::Validation(format!(
                    "differential in degree {} has the wrong shape",
                    self.lo + k as i32
                )));
            }
            d.check_shape(pres)?;
        }
        for k in 1..self.d.len() {
            if !self.d[k].compose(pres, &self.d[k - 1])?.is_zero() {
                return Err(Error::Validation(format!(
                    "d^2 is nonzero in degree {}",
                    self.lo + k as i32 - 1
                )));
            }
        }
        Ok(())
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(mut self) -> Self {
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.d.is_empty() {
                self.d.remove(0);
            }
            self.lo += 1;
        }
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.d.pop();
        }
        if self.terms.is_empty() {
            return Self::zero();
        }
        self
    }

    /// `X[n]`: terms `X^{i+n}`, differential `(-1)^n d`.
    pub fn shift(&self, n: i32) -> Self {
        let mut c = self.clone();
        c.lo -= n;
        if n % 2 != 0 {
            c.d = c.d.iter().map(|d| d.neg()).collect();
        }
        c
    }

    /// Multiplicity of label `a` in degree `deg`.
    pub fn count(&self, deg: i32, a: usize) -> usize {
        self.term(deg).iter().filter(|&&x| x == a).count()
    }

    /// `a -> sum_i [X_i : a] v^i` as `(degree, count)` lists.
    pub fn label_counts(&self) -> BTreeMap<usize, BTreeMap<i32, usize>> {
        let mut out: BTreeMap<usize, BTreeMap<i32, usize>> = BTreeMap::new();
        for (k, t) in self.terms.iter().enumerate() {
            for &a in t {
                *out.entry(a)
                    .or_default()
                    .entry(self.lo + k as i32)
                    .or_default() += 1;
            }
        }
        out
    }

    pub fn is_minimal(&self, pres: &CategoryPresentation) -> bool {
        self.d.iter().all(|d| {
            d.rows.iter().enumerate().all(|(r, &rl)| {
                d.cols
                    .iter()
                    .enumerate()
                    .all(|(c, &cl)| pres.is_radical(cl, rl, &d.blocks[r][c]))
            })
        })
    }

    fn find_invertible(
        &self,
        pres: &CategoryPresentation,
        order: Order,
    ) -> Option<(usize, usize, usize)> {
        let mut cands = vec![];
        for (k, d) in self.d.iter().enumerate() {
            for (r, &rl) in d.rows.iter().enumerate() {
                for (c, &cl) in d.cols.iter().enumerate() {
                    if rl == cl && !pres.is_radical(cl, rl, &d.blocks[r][c]) {
                        cands.push((k, r, c));
                        if order == Order::LowestFirst {
                            return Some((k, r, c));
                        }
                    }
                }
            }
        }
        cands.pop()
    }

    /// One Gaussian elimination step at block `(r, c)` of `d[k]`.
    fn eliminate(
        &mut self,
        pres: &CategoryPresentation,
        k: usize,
        r: usize,
        c: usize,
    ) -> Result<()> {
        let a = self.d[k].cols[c];
        let phi_inv = pres.invert(a, &self.d[k].blocks[r][c])?;
        let d = &self.d[k];
        // psi = eps - gamma phi^-1 delta on the complementary block
        let mut new = d.clone();
        for (rr, &rl) in d.rows.iter().enumerate() {
            if rr == r {
                continue;
            }
            let gamma_phi = pres.compose(a, a, rl, &d.blocks[rr][c], &phi_inv);
            for (cc, &cl) in d.cols.iter().enumerate() {
                if cc == c {
                    continue;
                }
                let corr = pres.compose(cl, a, rl, &gamma_phi, &d.blocks[r][cc]);
                for (o, x) in new.blocks[rr][cc].iter_mut().zip(corr) {
                    *o -= x;
                }
            }
        }
        new.drop_row(r);
        new.drop_col(c);
        self.d[k] = new;
        self.terms[k].remove(c);
        self.terms[k + 1].remove(r);
        if k > 0 {
            self.d[k - 1].drop_row(c);
        }
        if k + 1 < self.d.len() {
            self.d[k + 1].drop_col(r);
        }
        Ok(())
    }

    /// Gaussian elimination until every block is radical.
    pub fn minimize(&self, pres: &CategoryPresentation) -> Result<Self> {
        self.minimize_with(pres, Order::LowestFirst)
    }

    pub fn minimize_with(&self, pres: &CategoryPresentation, order: Order) -> Result<Self> {
        self.check(pres)?;
        let mut c = self.clone();
        while let Some((k, r, col)) = c.find_invertible(pres, order) {
            c.eliminate(pres, k, r, col)?;
        }
        Ok(c.trimmed())
    }

    /// Identity on this complex.
    pub fn identity_map(&self, pres: &CategoryPresentation) -> ChainMap {
        ChainMap {
            lo: self.lo,
            maps: self
                .terms
                .iter()
                .map(|t| BlockMatrix::identity(pres, t))
                .collect(),
        }
    }

    pub fn render(&self, pres: &CategoryPresentation) -> String {
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let names: Vec<&str> = t.iter().map(|&a| pres.labels[a].as_str()).collect();
            out.push_str(&format!("deg {}: {}", self.lo + k as i32, names.join(",")));
            if let Some(d) = self.d.get(k) {
                let blocks: Vec<String> = d
                    .blocks
                    .iter()
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(|b| fmt_morph(b)).collect();
                        cells.join(" ")
                    })
                    .collect();
                out.push_str(&format!(
                    " | d_{} [{}]",
                    self.lo + k as i32,
                    blocks.join("; ")
                ));
            }
            out.push('\n');
        }
        if self.terms.is_empty() {
            out.push_str("0\n");
        }
        out
    }
}

fn fmt_morph(m: &[Q]) -> String {
    let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Chain map with components `maps[k]` in degree `lo + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub lo: i32,
    pub maps: Vec<BlockMatrix>,
}

impl ChainMap {
    pub fn at(
        &self,
        pres: &CategoryPresentation,
        deg: i32,
        from: &FormalComplex,
        to: &FormalComplex,
    ) -> BlockMatrix {
        let k = deg - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            BlockMatrix::zero(pres, to.term(deg), from.term(deg))
        }
    }

    /// Commuting squares and shapes.
    pub fn check(
        &self,
        pres: &CategoryPresentation,
        from: &FormalComplex,
        to: &FormalComplex,
    ) -> Result<()> {
        let lo = from.lo.min(to.lo).min(self.lo) - 1;
        let hi = from.hi().max(to.hi()).max(self.lo + self.maps.len() as i32) + 1;
        for deg in lo..=hi {
            let f = self.at(pres, deg, from, to);
            if f.cols != from.term(deg) || f.rows != to.term(deg) {
                return Err(Error::Validation(format!(
                    "chain map has the wrong shape in degree {deg}"
                )));
            }
            let left = to.diff(pres, deg).compose(pres, &f)?;
            let right = self
                .at(pres, deg + 1, from, to)
                .compose(pres, &from.diff(pres, deg))?;
            if left != right {
                return Err(Error::Validation(format!(
                    "not a chain map in degree {deg}"
                )));
            }
        }
        Ok(())
    }
}

fn stack(
    pres: &CategoryPresentation,
    tl: &BlockMatrix,
    tr: &BlockMatrix,
    bl: &BlockMatrix,
    br: &BlockMatrix,
) -> BlockMatrix {
    let rows: Vec<usize> = tl.rows.iter().chain(&bl.rows).copied().collect();
    let cols: Vec<usize> = tl.cols.iter().chain(&tr.cols).copied().collect();
    let mut m = BlockMatrix::zero(pres, &rows, &cols);
    for (r, row) in tl.blocks.iter().chain(&bl.blocks).enumerate() {
        let right = if r < tl.rows.len() {
            &tr.blocks[r]
        } else {
            &br.blocks[r - tl.rows.len()]
        };
        for (c, b) in row.iter().chain(right).enumerate() {
            m.blocks[r][c] = b.clone();
        }
    }
    m
}

/// `cone(f)` with terms `X^{i+1} + Y^i` and differential `[[-d_X, 0], [f, d_Y]]`.
pub fn cone(
    pres: &CategoryPresentation,
    f: &ChainMap,
    x: &FormalComplex,
    y: &FormalComplex,
) -> Result<FormalComplex> {
    f.check(pres, x, y)?;
    if x.is_zero() && y.is_zero() {
        return Ok(FormalComplex::zero());
    }
    let lo = if x.is_zero() {
        y.lo
    } else if y.is_zero() {
        x.lo - 1
    } else {
        (x.lo - 1).min(y.lo)
    };
    let hi = if x.is_zero() {
        y.hi()
    } else if y.is_zero() {
        x.hi() - 1
    } else {
        (x.hi() - 1).max(y.hi())
    };
    let mut terms = vec![];
    let mut d = vec![];
    for deg in lo..=hi {
        terms.push(x.term(deg + 1).iter().chain(y.term(deg)).copied().collect());
        if deg < hi {
            let dx = x.diff(pres, deg + 1).neg();
            let zero = BlockMatrix::zero(pres, x.term(deg + 2), y.term(deg));
            let fm = f.at(pres, deg + 1, x, y);
            let dy = y.diff(pres, deg);
            d.push(stack(pres, &dx, &zero, &fm, &dy));
        }
    }
    FormalComplex::from_parts(pres, lo, terms, d)
}

/// Per-degree multiplicity bounds `[A_i : M] >= [B_i : M] >= [A_i : M] - [A_{i-1} : M] - [A_{i+1} : M]`.
pub fn summand_bounds_hold(input: &FormalComplex, output: &FormalComplex, labels: usize) -> bool {
    let lo = input.lo.min(output.lo) - 1;
    let hi = input.hi().max(output.hi()) + 1;
    (lo..=hi).all(|i| {
        (0..labels).all(|a| {
            let b = output.count(i, a) as i64;
            let ai = input.count(i, a) as i64;
            ai >= b && b >= ai - input.count(i - 1, a) as i64 - input.count(i + 1, a) as i64
        })
    })
}

impl fmt::Display for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.blocks {
            let cells: Vec<String> = row.iter().map(|b| fmt_morph(b)).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    /// One object `M` with `End(M) = k[x]/x^2`, and a second object `N` with
    /// `Hom(M,N) = Hom(N,M) = k`.
    fn pres() -> CategoryPresentation {
        let mut comp = BTreeMap::new();
        // End(M): basis (id, x), x^2 = 0
        comp.insert(
            (0, 0, 0),
            vec![
                vec![vec![q(1), q(0)], vec![q(0), q(1)]],
                vec![vec![q(0), q(1)], vec![q(0), q(0)]],
            ],
        );
        comp.insert((1, 1, 1), vec![vec![vec![q(1)]]]);
        // f: M -> N, g: N -> M, g f = x, f g = 0, f x = 0, x g = 0
        comp.insert((0, 1, 0), vec![vec![vec![q(0), q(1)]]]);
        comp.insert((1, 0, 1), vec![vec![vec![q(0)]]]);
        comp.insert((0, 0, 1), vec![vec![vec![q(1)]], vec![vec![q(0)]]]);
        comp.insert((0, 1, 1), vec![vec![vec![q(1)]]]);
        comp.insert((1, 0, 0), vec![vec![vec![q(1)], vec![q(0)]]]);
        comp.insert((1, 1, 0), vec![vec![vec![q(1)]]]);
        CategoryPresentation {
            labels: vec!["M".into(), "N".into()],
            hom_dim: vec![vec![2, 1], vec![1, 1]],
            comp,
            identity: vec![vec![q(1), q(0)], vec![q(1)]],
            radical: vec![
                vec![vec![false, true], vec![true]],
                vec![vec![true], vec![false]],
            ],
        }
    }

    fn bm(rows: &[usize], cols: &[usize], blocks: Vec<Vec<Morph>>) -> BlockMatrix {
        BlockMatrix {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            blocks,
        }
    }

    #[test]
    fn presentation_is_valid() {
        let p = pres();
        p.validate().unwrap();
        let inv = p.invert(0, &[q(2), q(3)]).unwrap();
        assert_eq!(p.compose(0, 0, 0, &inv, &[q(2), q(3)]), p.identity[0]);
    }

    #[test]
    fn identity_cancels() {
        let p = pres();
        let c = FormalComplex::from_parts(
            &p,
            0,
            vec![vec![0], vec![0]],
            vec![bm(&[0], &[0], vec![vec![vec![q(1), q(0)]]])],
        )
        .unwrap();
        assert!(c.minimize(&p).unwrap().is_zero());
        let x = FormalComplex::from_parts(
            &p,
            0,
            vec![vec![0], vec![0]],
            vec![bm(&[0], &[0], vec![vec![vec![q(0), q(1)]]])],
        )
        .unwrap();
        assert!(x.is_minimal(&p));
        assert_eq!(x.minimize(&p).unwrap(), x);
    }

    #[test]
    fn direct_sum_with_contractible() {
        let p = pres();
        // (M --x--> M) + (N --id--> N), interleaved
        let d = bm(
            &[1, 0],
            &[0, 1],
            vec![
                vec![vec![q(0)], vec![q(1)]],
                vec![vec![q(0), q(1)], vec![q(0)]],
            ],
        );
        let c = FormalComplex::from_parts(&p, -1, vec![vec![0, 1], vec![1, 0]], vec![d]).unwrap();
        let m = c.minimize(&p).unwrap();
        assert_eq!(m.terms, vec![vec![0], vec![0]]);
        assert_eq!(m.lo, -1);
        assert_eq!(m.d[0].blocks[0][0], vec![q(0), q(1)]);
        assert!(summand_bounds_hold(&c, &m, 2));
        let h = c.minimize_with(&p, Order::HighestFirst).unwrap();
        assert_eq!(h.label_counts(), m.label_counts());
    }

    #[test]
    fn elimination_corrects_complement() {
        let p = pres();
        // N + M -> N + M with [[id, f], [g, 0]]: psi = 0 - g id^-1 f = -x
        let d = bm(
            &[1, 0],
            &[1, 0],
            vec![
                vec![vec![q(1)], vec![q(1)]],
                vec![vec![q(1)], vec![q(0), q(0)]],
            ],
        );
        let c = FormalComplex::from_parts(&p, 0, vec![vec![1, 0], vec![1, 0]], vec![d]).unwrap();
        let m = c.minimize(&p).unwrap();
        assert_eq!(m.terms, vec![vec![0], vec![0]]);
        assert_eq!(m.d[0].blocks[0][0], vec![q(0), q(-1)]);
    }

    #[test]
    fn bad_complexes_rejected() {
        let p = pres();
        let d = bm(&[0], &[0], vec![vec![vec![q(1), q(0)]]]);
        assert!(FormalComplex::from_parts(
            &p,
            0,
            vec![vec![0], vec![0], vec![0]],
            vec![d.clone(), d.clone()]
        )
        .is_err());
        let short = bm(&[0], &[0], vec![vec![vec![q(1)]]]);
        assert!(FormalComplex::from_parts(&p, 0, vec![vec![0], vec![0]], vec![short]).is_err());
    }

    #[test]
    fn cones() {
        let p = pres();
        let x = FormalComplex::single(vec![0], 0);
        let id = x.identity_map(&p);
        assert!(cone(&p, &id, &x, &x)
            .unwrap()
            .minimize(&p)
            .unwrap()
            .is_zero());
        let y = FormalComplex::single(vec![1], 0);
        let zero = ChainMap {
            lo: 0,
            maps: vec![BlockMatrix::zero(&p, &[1], &[0])],
        };
        let c = cone(&p, &zero, &x, &y).unwrap();
        assert_eq!((c.lo, c.terms.clone()), (-1, vec![vec![0], vec![1]]));
        assert!(c.d[0].is_zero());
        let not_chain = ChainMap {
            lo: 0,
            maps: vec![BlockMatrix::zero(&p, &[1], &[1])],
        };
        assert!(cone(&p, &not_chain, &x, &y).is_err());
    }
}
