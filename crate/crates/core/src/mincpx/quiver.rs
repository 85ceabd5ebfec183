//! Finite-dimensional quiver algebras with homogeneous relations, their
//! representations, homomorphisms and Ext groups.

use num::Zero;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{complement_columns, QMatrix, Q};

const MAX_PATH_LEN: usize = 32;
const MAX_RESOLUTION: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Linear combination of paths; a path lists arrows in composition order,
/// so `[a, b]` is `a . b` (apply `b` first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    projectives: Vec<ModuleRep>,
    /// Per vertex `v` and projective basis vector: the vertex it lives at and its path expansion.
    proj_basis: Vec<Vec<(usize, Vec<(Q, Vec<usize>)>)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub dims: Vec<usize>,
    /// One `dim(tgt) x dim(src)` matrix per arrow.
    pub maps: Vec<QMatrix>,
}

/// A homomorphism given by one `dim N_v x dim M_v` matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModHom {
    pub blocks: Vec<QMatrix>,
}

fn path_src(arrows: &[Arrow], p: &[usize], end: usize) -> usize {
    p.last().map(|&a| arrows[a].src).unwrap_or(end)
}

fn path_tgt(arrows: &[Arrow], p: &[usize], start: usize) -> usize {
    p.first().map(|&a| arrows[a].tgt).unwrap_or(start)
}

impl Algebra {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        for a in &arrows {
            if a.src >= vertices.len() || a.tgt >= vertices.len() {
                return Err(Error::Validation(format!(
                    "arrow {} has an unknown endpoint",
                    a.name
                )));
            }
        }
        let mut alg = Self {
            vertices,
            arrows,
            relations,
            projectives: vec![],
            proj_basis: vec![],
        };
        alg.check_relations()?;
        alg.build_projectives()?;
        Ok(alg)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Validation(format!("unknown vertex {name}")))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::Validation(format!("unknown arrow {name}")))
    }

    fn check_path(&self, p: &[usize]) -> Result<()> {
        for w in p.windows(2) {
            if self.arrows[w[1]].tgt != self.arrows[w[0]].src {
                return Err(Error::Validation(
                    "relation contains a non-composable path".into(),
                ));
            }
        }
        Ok(())
    }

    fn check_relations(&self) -> Result<()> {
        for r in &self.relations {
            let Some((_, p0)) = r.terms.first() else {
                return Err(Error::Validation("empty relation".into()));
            };
            if p0.is_empty() {
                return Err(Error::Validation(
                    "relations must lie in the arrow ideal".into(),
                ));
            }
            for (_, p) in &r.terms {
                self.check_path(p)?;
                if p.len() != p0.len()
                    || path_src(&self.arrows, p, 0) != path_src(&self.arrows, p0, 0)
                    || path_tgt(&self.arrows, p, 0) != path_tgt(&self.arrows, p0, 0)
                {
                    return Err(Error::Validation(
                        "relations must be homogeneous with fixed endpoints".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// All paths of length `n` from `s` to `t`, in lexicographic arrow order.
    fn paths(&self, n: usize, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut out = vec![];
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(vec![], s)];
        while let Some((p, at)) = stack.pop() {
            if p.len() == n {
                if at == t {
                    out.push(p);
                }
                continue;
            }
            for (i, a) in self.arrows.iter().enumerate() {
                if a.src == at {
                    let mut q = vec![i];
                    q.extend(&p);
                    stack.push((q, a.tgt));
                }
            }
        }
        out.sort();
        out
    }

    /// Spanning set of the ideal in paths of length `n` from `s` to `t`.
    fn ideal_span(
        &self,
        n: usize,
        s: usize,
        t: usize,
        index: &BTreeMap<Vec<usize>, usize>,
    ) -> Vec<Vec<Q>> {
        let mut out = vec![];
        for r in &self.relations {
            let (_, p0) = &r.terms[0];
            let len = p0.len();
            if len > n {
                continue;
            }
            let rs = path_src(&self.arrows, p0, 0);
            let rt = path_tgt(&self.arrows, p0, 0);
            for k in 0..=n - len {
                for pre in self.paths(n - len - k, rt, t) {
                    for post in self.paths(k, s, rs) {
                        let mut v = vec![Q::zero(); index.len()];
                        for (c, p) in &r.terms {
                            let mut full = pre.clone();
                            full.extend(p);
                            full.extend(&post);
                            v[index[&full]] += c;
                        }
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    fn build_projectives(&mut self) -> Result<()> {
        let nv = self.vertices.len();
        // quotient bases per (length, source, target): path-space vectors plus a reduction map
        type Quot = (Vec<Vec<Q>>, QMatrix, Vec<Vec<usize>>);
        let mut quot: BTreeMap<(usize, usize, usize), Quot> = BTreeMap::new();
        let mut finite = false;
        for n in 0..=MAX_PATH_LEN {
            let mut any = false;
            for s in 0..nv {
                for t in 0..nv {
                    let ps = self.paths(n, s, t);
                    if ps.is_empty() {
                        continue;
                    }
                    let index: BTreeMap<Vec<usize>, usize> = ps
                        .iter()
                        .cloned()
                        .enumerate()
                        .map(|(i, p)| (p, i))
                        .collect();
                    let span = self.ideal_span(n, s, t, &index);
                    let ideal = QMatrix::from_columns(ps.len(), &span).column_space_basis();
                    let comp = complement_columns(&QMatrix::identity(ps.len()), &ideal);
                    if comp.cols() == 0 {
                        continue;
                    }
                    any = true;
                    let full = ideal.hstack(&comp);
                    let inv = full
                        .inverse()
                        .ok_or_else(|| Error::Internal("singular path basis".into()))?;
                    let rows: Vec<usize> = (ideal.cols()..full.cols()).collect();
                    let cols: Vec<usize> = (0..ps.len()).collect();
                    let reduce = inv.submatrix(&rows, &cols);
                    let basis = (0..comp.cols()).map(|c| comp.column(c)).collect();
                    quot.insert((n, s, t), (basis, reduce, ps));
                }
            }
            if !any {
                finite = true;
                break;
            }
        }
        if !finite {
            return Err(Error::Validation(
                "algebra is not finite-dimensional within the path bound".into(),
            ));
        }
        for v in 0..nv {
            // basis vectors of P_v ordered by (target vertex, length, index)
            let mut basis: Vec<(usize, usize, usize)> = vec![];
            for t in 0..nv {
                for (&(n, s, tt), (b, _, _)) in &quot {
                    if s == v && tt == t {
                        basis.extend((0..b.len()).map(|i| (t, n, i)));
                    }
                }
            }
            let mut dims = vec![0; nv];
            let mut pos: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
            for &(t, n, i) in &basis {
                pos.insert((t, n, i), dims[t]);
                dims[t] += 1;
            }
            let mut maps: Vec<QMatrix> = self
                .arrows
                .iter()
                .map(|a| QMatrix::zeros(dims[a.tgt], dims[a.src]))
                .collect();
            for &(t, n, i) in &basis {
                let (b, _, ps) = &quot[&(n, v, t)];
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.src != t {
                        continue;
                    }
                    let Some((_, reduce, qps)) = quot.get(&(n + 1, v, a.tgt)) else {
                        continue;
                    };
                    let idx: BTreeMap<&Vec<usize>, usize> =
                        qps.iter().enumerate().map(|(k, p)| (p, k)).collect();
                    let mut vec = vec![Q::zero(); qps.len()];
                    for (c, p) in b[i].iter().zip(ps) {
                        if c.is_zero() {
                            continue;
                        }
                        let mut q = vec![ai];
                        q.extend(p);
                        vec[idx[&q]] += c;
                    }
                    let coords = reduce.mul_vec(&vec);
                    let col = pos[&(t, n, i)];
                    for (k, c) in coords.into_iter().enumerate() {
                        let row = pos[&(a.tgt, n + 1, k)];
                        maps[ai][(row, col)] = c;
                    }
                }
            }
            let expansions = basis
                .iter()
                .map(|&(t, n, i)| {
                    let (b, _, ps) = &quot[&(n, v, t)];
                    let terms = b[i]
                        .iter()
                        .zip(ps)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, p)| (c.clone(), p.clone()))
                        .collect();
                    (t, terms)
                })
                .collect();
            let p = ModuleRep { dims, maps };
            p.check(self)?;
            self.projectives.push(p);
            self.proj_basis.push(expansions);
        }
        Ok(())
    }

    /// The indecomposable projective `P_v = A e_v`.
    pub fn projective(&self, v: usize) -> &ModuleRep {
        &self.projectives[v]
    }

    /// The simple module at `v`.
    pub fn simple(&self, v: usize) -> ModuleRep {
        let mut dims = vec![0; self.vertices.len()];
        dims[v] = 1;
        ModuleRep::zero_maps(self, dims)
    }

    /// The homomorphism `P_v -> M` sending `e_v` to `m in M_v`.
    pub fn from_projective(&self, v: usize, m: &ModuleRep, elt: &[Q]) -> ModHom {
        let p = &self.projectives[v];
        let mut blocks: Vec<QMatrix> = (0..self.vertices.len())
            .map(|w| QMatrix::zeros(m.dims[w], p.dims[w]))
            .collect();
        let mut next = vec![0; self.vertices.len()];
        for (t, terms) in &self.proj_basis[v] {
            let col = next[*t];
            next[*t] += 1;
            let mut image = vec![Q::zero(); m.dims[*t]];
            for (c, path) in terms {
                let x = m.apply_path(self, path, v, elt);
                for (acc, xi) in image.iter_mut().zip(x) {
                    *acc += c * xi;
                }
            }
            for (row, x) in image.into_iter().enumerate() {
                blocks[*t][(row, col)] = x;
            }
        }
        ModHom { blocks }
    }
}

impl ModuleRep {
    pub fn zero_maps(alg: &Algebra, dims: Vec<usize>) -> Self {
        let maps = alg
            .arrows
            .iter()
            .map(|a| QMatrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        Self { dims, maps }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::zero_maps(alg, vec![0; alg.vertices.len()])
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn path_matrix(&self, alg: &Algebra, path: &[usize], start: usize) -> QMatrix {
        let mut m = QMatrix::identity(self.dims[start]);
        for &a in path.iter().rev() {
            m = self.maps[a].mul(&m);
        }
        let _ = alg;
        m
    }

    fn apply_path(&self, alg: &Algebra, path: &[usize], start: usize, v: &[Q]) -> Vec<Q> {
        self.path_matrix(alg, path, start).mul_vec(v)
    }

    /// Shapes and relations hold exactly.
    pub fn check(&self, alg: &Algebra) -> Result<()> {
        if self.dims.len() != alg.vertices.len() || self.maps.len() != alg.arrows.len() {
            return Err(Error::Validation("module does not match the quiver".into()));
        }
        for (m, a) in self.maps.iter().zip(&alg.arrows) {
            if m.rows() != self.dims[a.tgt] || m.cols() != self.dims[a.src] {
                return Err(Error::Validation(format!(
                    "matrix for arrow {} has the wrong shape",
                    a.name
                )));
            }
        }
        for r in &alg.relations {
            let s = path_src(&alg.arrows, &r.terms[0].1, 0);
            let t = path_tgt(&alg.arrows, &r.terms[0].1, 0);
            let mut acc = QMatrix::zeros(self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.path_matrix(alg, p, s).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::Validation("module violates a relation".into()));
            }
        }
        Ok(())
    }

    pub fn direct_sum(alg: &Algebra, parts: &[&ModuleRep]) -> Self {
        let nv = alg.vertices.len();
        let dims: Vec<usize> = (0..nv)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let mut out = Self::zero_maps(alg, dims);
        let mut off = vec![0; nv];
        for p in parts {
            for (ai, a) in alg.arrows.iter().enumerate() {
                out.maps[ai].set_block(off[a.tgt], off[a.src], &p.maps[ai]);
            }
            for v in 0..nv {
                off[v] += p.dims[v];
            }
        }
        out
    }

    /// Per-vertex span of the images of all arrows.
    pub fn radical(&self, alg: &Algebra) -> Vec<QMatrix> {
        (0..self.dims.len())
            .map(|v| {
                let mut m = QMatrix::zeros(self.dims[v], 0);
                for (ai, a) in alg.arrows.iter().enumerate() {
                    if a.tgt == v {
                        m = m.hstack(&self.maps[ai]);
                    }
                }
                m.column_space_basis()
            })
            .collect()
    }

    /// Dimension of the top `M / rad M` at each vertex.
    pub fn top_dims(&self, alg: &Algebra) -> Vec<usize> {
        self.radical(alg)
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.cols())
            .collect()
    }

    /// Radical submodule and its inclusion.
    pub fn radical_submodule(&self, alg: &Algebra) -> Result<(ModuleRep, ModHom)> {
        let rad = self.radical(alg);
        submodule(alg, self, &rad)
    }
}

/// Submodule spanned per vertex by the given columns, with its inclusion.
pub fn submodule(alg: &Algebra, m: &ModuleRep, basis: &[QMatrix]) -> Result<(ModuleRep, ModHom)> {
    let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
    let mut sub = ModuleRep::zero_maps(alg, dims);
    for (ai, a) in alg.arrows.iter().enumerate() {
        let img = m.maps[ai].mul(&basis[a.src]);
        for c in 0..img.cols() {
            let x = basis[a.tgt]
                .solve(&img.column(c))
                .ok_or_else(|| Error::Internal("subspace is not a submodule".into()))?;
            for (r, xi) in x.into_iter().enumerate() {
                sub.maps[ai][(r, c)] = xi;
            }
        }
    }
    Ok((
        sub,
        ModHom {
            blocks: basis.to_vec(),
        },
    ))
}

impl ModHom {
    pub fn zero(m: &ModuleRep, n: &ModuleRep) -> Self {
        Self {
            blocks: m
                .dims
                .iter()
                .zip(&n.dims)
                .map(|(&a, &b)| QMatrix::zeros(b, a))
                .collect(),
        }
    }

    pub fn identity(m: &ModuleRep) -> Self {
        Self {
            blocks: m.dims.iter().map(|&d| QMatrix::identity(d)).collect(),
        }
    }

    /// `self . other`
    pub fn compose(&self, other: &ModHom) -> ModHom {
        Self {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModHom) -> ModHom {
        Self {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> ModHom {
        Self {
            blocks: self.blocks.iter().map(|a| a.scale(k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn flatten(&self) -> Vec<Q> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().to_vec())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn is_hom(&self, alg: &Algebra, m: &ModuleRep, n: &ModuleRep) -> bool {
        alg.arrows.iter().enumerate().all(|(ai, a)| {
            n.maps[ai].mul(&self.blocks[a.src]) == self.blocks[a.tgt].mul(&m.maps[ai])
        })
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    /// Block from summand `c` of a direct sum to summand `r` of another.
    pub fn sub_block(
        &self,
        row_off: &[usize],
        row_dims: &[usize],
        col_off: &[usize],
        col_dims: &[usize],
    ) -> ModHom {
        Self {
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(v, b)| b.block(row_off[v], col_off[v], row_dims[v], col_dims[v]))
                .collect(),
        }
    }
}

/// Basis of `Hom(M, N)`.
pub fn hom_space(alg: &Algebra, m: &ModuleRep, n: &ModuleRep) -> Vec<ModHom> {
    let nv = alg.vertices.len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    }
    let nvars = off[nv];
    if nvars == 0 {
        return vec![];
    }
    let mut rows: Vec<Vec<Q>> = vec![];
    for (ai, a) in alg.arrows.iter().enumerate() {
        // N(a) phi_src - phi_tgt M(a) = 0, an (n_tgt x m_src) system
        let (s, t) = (a.src, a.tgt);
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![Q::zero(); nvars];
                for k in 0..n.dims[s] {
                    let c = &n.maps[ai][(i, k)];
                    if !c.is_zero() {
                        row[off[s] + k * m.dims[s] + j] += c;
                    }
                }
                for k in 0..m.dims[t] {
                    let c = &m.maps[ai][(k, j)];
                    if !c.is_zero() {
                        row[off[t] + i * m.dims[t] + k] -= c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = QMatrix::from_rows(rows.len(), nvars, rows.into_iter().flatten().collect());
    sys.kernel()
        .into_iter()
        .map(|x| ModHom {
            blocks: (0..nv)
                .map(|v| QMatrix::from_rows(n.dims[v], m.dims[v], x[off[v]..off[v + 1]].to_vec()))
                .collect(),
        })
        .collect()
}

/// Coordinates of `f` in the given basis.
pub fn hom_coords(basis: &[ModHom], f: &ModHom) -> Result<Vec<Q>> {
    let target = f.flatten();
    if basis.is_empty() {
        return if target.iter().all(|x| x.is_zero()) {
            Ok(vec![])
        } else {
            Err(Error::Internal("map outside the zero Hom space".into()))
        };
    }
    let cols: Vec<Vec<Q>> = basis.iter().map(|b| b.flatten()).collect();
    QMatrix::from_columns(target.len(), &cols)
        .solve(&target)
        .ok_or_else(|| Error::Internal("map is not in the span of the Hom basis".into()))
}

pub fn combine(basis: &[ModHom], coords: &[Q], zero: ModHom) -> ModHom {
    let mut acc = zero;
    for (b, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

/// Kernel module and its inclusion.
pub fn kernel(alg: &Algebra, m: &ModuleRep, f: &ModHom) -> Result<(ModuleRep, ModHom)> {
    let basis: Vec<QMatrix> = f
        .blocks
        .iter()
        .zip(&m.dims)
        .map(|(b, &d)| QMatrix::from_columns(d, &b.kernel()))
        .collect();
    submodule(alg, m, &basis)
}

/// Cokernel module and the projection onto it.
pub fn cokernel(alg: &Algebra, n: &ModuleRep, f: &ModHom) -> Result<(ModuleRep, ModHom)> {
    let nv = alg.vertices.len();
    let mut proj = vec![];
    let mut dims = vec![];
    let mut comps = vec![];
    for v in 0..nv {
        let img = f.blocks[v].column_space_basis();
        let comp = complement_columns(&QMatrix::identity(n.dims[v]), &img);
        let full = img.hstack(&comp);
        let inv = full
            .inverse()
            .ok_or_else(|| Error::Internal("singular cokernel basis".into()))?;
        let rows: Vec<usize> = (img.cols()..n.dims[v]).collect();
        let cols: Vec<usize> = (0..n.dims[v]).collect();
        proj.push(inv.submatrix(&rows, &cols));
        dims.push(comp.cols());
        comps.push(comp);
    }
    let mut c = ModuleRep::zero_maps(alg, dims);
    for (ai, a) in alg.arrows.iter().enumerate() {
        c.maps[ai] = proj[a.tgt].mul(&n.maps[ai]).mul(&comps[a.src]);
    }
    Ok((c, ModHom { blocks: proj }))
}

/// Projective cover `P -> M` with `P` a direct sum of `P_v`; returns the vertex list and the map.
pub fn projective_cover(alg: &Algebra, m: &ModuleRep) -> (Vec<usize>, ModuleRep, ModHom) {
    let rad = m.radical(alg);
    let mut verts = vec![];
    let mut maps = vec![];
    for v in 0..alg.vertices.len() {
        let comp = complement_columns(&QMatrix::identity(m.dims[v]), &rad[v]);
        for c in 0..comp.cols() {
            verts.push(v);
            maps.push(alg.from_projective(v, m, &comp.column(c)));
        }
    }
    let parts: Vec<&ModuleRep> = verts.iter().map(|&v| alg.projective(v)).collect();
    let p = ModuleRep::direct_sum(alg, &parts);
    let nv = alg.vertices.len();
    let mut blocks: Vec<QMatrix> = (0..nv).map(|v| QMatrix::zeros(m.dims[v], 0)).collect();
    for f in &maps {
        for v in 0..nv {
            blocks[v] = blocks[v].hstack(&f.blocks[v]);
        }
    }
    (verts, p, ModHom { blocks })
}

/// Minimal projective resolution `... -> P_1 -> P_0 -> M`.
pub struct Resolution {
    pub terms: Vec<ModuleRep>,
    pub summands: Vec<Vec<usize>>,
    /// `d[0]: P_0 -> M`, `d[i]: P_i -> P_{i-1}`.
    pub d: Vec<ModHom>,
}

pub fn projective_resolution(alg: &Algebra, m: &ModuleRep) -> Result<Resolution> {
    let mut res = Resolution {
        terms: vec![],
        summands: vec![],
        d: vec![],
    };
    let mut cur = m.clone();
    let mut into = ModHom::identity(m);
    while !cur.is_zero() {
        if res.terms.len() > MAX_RESOLUTION {
            return Err(Error::Validation(
                "projective resolution does not terminate".into(),
            ));
        }
        let (verts, p, eps) = projective_cover(alg, &cur);
        let (k, inc) = kernel(alg, &p, &eps)?;
        res.d.push(into.compose(&eps));
        res.terms.push(p);
        res.summands.push(verts);
        cur = k;
        into = inc;
    }
    Ok(res)
}

/// `dim Ext^i(M, N)` for `i = 0..=max_degree`.
pub fn hom_ext(
    alg: &Algebra,
    m: &ModuleRep,
    n: &ModuleRep,
    max_degree: usize,
) -> Result<Vec<usize>> {
    m.check(alg)?;
    n.check(alg)?;
    let res = projective_resolution(alg, m)?;
    let homs: Vec<Vec<ModHom>> = res.terms.iter().map(|p| hom_space(alg, p, n)).collect();
    // rank of d_i^*: Hom(P_{i-1}, N) -> Hom(P_i, N), i >= 1
    let mut ranks = vec![0usize; res.terms.len() + 1];
    for i in 1..res.terms.len() {
        if homs[i - 1].is_empty() || homs[i].is_empty() {
            continue;
        }
        let cols: Result<Vec<Vec<Q>>> = homs[i - 1]
            .iter()
            .map(|phi| hom_coords(&homs[i], &phi.compose(&res.d[i])))
            .collect();
        ranks[i] = QMatrix::from_columns(homs[i].len(), &cols?).rank();
    }
    Ok((0..=max_degree)
        .map(|i| {
            if i >= res.terms.len() {
                0
            } else {
                homs[i].len() - ranks[i + 1] - ranks[i]
            }
        })
        .collect())
}

/// `End(M)` is local: every basis element is a scalar plus a nilpotent, and the
/// nilpotent parts span a subalgebra.
pub fn is_local(alg: &Algebra, m: &ModuleRep) -> bool {
    let d = m.dim();
    if d == 0 {
        return false;
    }
    let ends = hom_space(alg, m, m);
    let id = ModHom::identity(m);
    let nil: Vec<ModHom> = ends
        .iter()
        .map(|f| {
            let tr: Q = f
                .blocks
                .iter()
                .map(|b| b.trace())
                .fold(Q::zero(), |a, b| a + b);
            f.add(&id.scale(&-(tr / Q::from_integer(d.into()))))
        })
        .collect();
    let is_nilpotent = |f: &ModHom| {
        let mut p = f.clone();
        for _ in 0..d {
            p = p.compose(f);
        }
        p.is_zero()
    };
    if !nil.iter().all(is_nilpotent) {
        return false;
    }
    let span: Vec<Vec<Q>> = nil.iter().map(|f| f.flatten()).collect();
    let base = QMatrix::from_columns(id.flatten().len(), &span);
    let r = base.rank();
    nil.iter().all(|a| {
        nil.iter().all(|b| {
            let prod = a.compose(b).flatten();
            base.hstack(&QMatrix::from_columns(prod.len(), &[prod]))
                .rank()
                == r
        })
    }) && r + 1 == ends.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn sl2() -> Algebra {
        Algebra::new(
            vec!["e".into(), "s".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    src: 0,
                    tgt: 1,
                },
                Arrow {
                    name: "b".into(),
                    src: 1,
                    tgt: 0,
                },
            ],
            vec![Relation {
                terms: vec![(q(1), vec![0, 1])],
            }],
        )
        .unwrap()
    }

    #[test]
    fn projectives() {
        let alg = sl2();
        assert_eq!(alg.projective(0).dims, vec![2, 1]);
        assert_eq!(alg.projective(1).dims, vec![1, 1]);
        assert!(is_local(&alg, alg.projective(0)));
        assert_eq!(alg.projective(0).top_dims(&alg), vec![1, 0]);
    }

    #[test]
    fn ext_of_simples() {
        let alg = sl2();
        let (le, ls) = (alg.simple(0), alg.simple(1));
        assert_eq!(hom_ext(&alg, &ls, &ls, 3).unwrap(), vec![1, 0, 1, 0]);
        assert_eq!(hom_ext(&alg, &ls, &le, 3).unwrap(), vec![0, 1, 0, 0]);
        assert_eq!(hom_ext(&alg, &le, &le, 3).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(hom_ext(&alg, &le, &ls, 3).unwrap(), vec![0, 1, 0, 0]);
        let res = projective_resolution(&alg, &ls).unwrap();
        assert_eq!(res.summands, vec![vec![1], vec![0], vec![1]]);
    }

    #[test]
    fn kernels_and_cokernels() {
        let alg = sl2();
        let p = alg.projective(0).clone();
        let (verts, _, eps) = projective_cover(&alg, &alg.simple(0));
        assert_eq!(verts, vec![0]);
        let (k, inc) = kernel(&alg, &p, &eps).unwrap();
        assert_eq!(k.dims, vec![1, 1]);
        assert!(inc.is_hom(&alg, &k, &p));
        let (c, pr) = cokernel(&alg, &p, &inc).unwrap();
        assert_eq!(c.dims, vec![1, 0]);
        assert!(pr.is_hom(&alg, &p, &c));
        assert!(pr.compose(&inc).is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Algebra::new(
            vec!["x".into()],
            vec![Arrow {
                name: "l".into(),
                src: 0,
                tgt: 0
            }],
            vec![],
        )
        .is_err());
        let alg = sl2();
        let mut m = ModuleRep::zero_maps(&alg, vec![1, 1]);
        m.maps[0][(0, 0)] = q(1);
        m.maps[1][(0, 0)] = q(1);
        assert!(m.check(&alg).is_err());
    }
}
