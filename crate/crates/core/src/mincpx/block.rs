//! Highest weight blocks given by a quiver presentation: block files, axiom
//! checks, tilting coresolutions and minimal tilting complexes of modules.

use num::{One, Zero};
use std::collections::BTreeMap;

use super::quiver::{
    cokernel, combine, hom_coords, hom_ext, hom_space, is_local, projective_resolution, Algebra,
    Arrow, ModHom, ModuleRep, Relation,
};
use super::{
    cone, summand_bounds_hold, BlockMatrix, CategoryPresentation, ChainMap, FormalComplex, Order,
};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::hecke::KlEngine;
use crate::linalg::{QMatrix, Q};
use crate::poly::LaurentPoly;
use crate::tilting::{cmin_simple_o, cmin_standard_o, ParityData};

pub const SL2: &str = include_str!("../../blocks/sl2.block");

const MAX_STEPS: usize = 32;
const EXT_DEGREE: usize = 4;

/// Looks up a shipped block by name.
pub fn builtin(name: &str) -> Option<&'static str> {
    match name {
        "sl2" => Some(SL2),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct WeylData {
    pub ctype: String,
    /// Word for each weight, in weight order.
    pub words: Vec<String>,
}

/// A highest weight block: algebra, poset, designated modules and the tilting category.
pub struct HwBlock {
    pub alg: Algebra,
    /// Weights, equal to the vertex names in vertex order.
    pub weights: Vec<String>,
    leq: Vec<Vec<bool>>,
    pub modules: BTreeMap<String, ModuleRep>,
    pub tilt: CategoryPresentation,
    tilt_homs: BTreeMap<(usize, usize), Vec<ModHom>>,
    pub weyl: Option<WeylData>,
}

fn perr(line: usize, msg: &str) -> Error {
    Error::Parse(format!("block file line {line}: {msg}"))
}

fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.parse::<i64>().ok()?, b.parse::<i64>().ok()?);
            (b != 0).then(|| Q::new(a.into(), b.into()))
        }
        None => s.parse::<i64>().ok().map(Q::from_integer_i64),
    }
}

trait FromI64 {
    fn from_integer_i64(n: i64) -> Self;
}

impl FromI64 for Q {
    fn from_integer_i64(n: i64) -> Self {
        Q::from_integer(n.into())
    }
}

fn parse_matrix(s: &str, rows: usize, cols: usize, line: usize) -> Result<QMatrix> {
    let body = s
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| perr(line, "matrix must be bracketed"))?;
    let mut entries = vec![];
    let mut nrows = 0;
    for row in body.split(';') {
        let vals: Vec<&str> = row.split_whitespace().collect();
        if vals.is_empty() && body.trim().is_empty() {
            continue;
        }
        if vals.len() != cols {
            return Err(perr(line, "matrix row has the wrong length"));
        }
        for v in vals {
            entries.push(parse_q(v).ok_or_else(|| perr(line, "bad matrix entry"))?);
        }
        nrows += 1;
    }
    if nrows != rows && !(rows == 0 || cols == 0) {
        return Err(perr(line, "matrix has the wrong number of rows"));
    }
    Ok(QMatrix::from_rows(
        rows,
        cols,
        if rows * cols == 0 { vec![] } else { entries },
    ))
}

/// Splits `k=v k=[..]` tokens, keeping bracketed values whole.
fn assignments(s: &str, line: usize) -> Result<Vec<(String, String)>> {
    let mut out = vec![];
    let mut rest = s.trim();
    while !rest.is_empty() {
        let (key, after) = rest
            .split_once('=')
            .ok_or_else(|| perr(line, "expected key=value"))?;
        let key = key.trim().to_string();
        let after = after.trim_start();
        let (val, tail) = if after.starts_with('[') {
            let end = after
                .find(']')
                .ok_or_else(|| perr(line, "unterminated matrix"))?;
            after.split_at(end + 1)
        } else {
            match after.find(char::is_whitespace) {
                Some(i) => after.split_at(i),
                None => (after, ""),
            }
        };
        out.push((key, val.to_string()));
        rest = tail.trim();
    }
    Ok(out)
}

impl HwBlock {
    pub fn builtin(name: &str) -> Result<Self> {
        let text =
            builtin(name).ok_or_else(|| Error::Validation(format!("unknown block {name}")))?;
        Self::parse(text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut section = String::new();
        let mut vertices: Vec<String> = vec![];
        let mut arrows: Vec<Arrow> = vec![];
        let mut rel_lines: Vec<(usize, String)> = vec![];
        let mut mod_lines: Vec<(usize, String)> = vec![];
        let mut poset_lines: Vec<(usize, String)> = vec![];
        let mut weyl_lines: Vec<(usize, String)> = vec![];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            if l.starts_with('[') && l.ends_with(']') && !l.contains('=') {
                section = l[1..l.len() - 1].to_string();
                continue;
            }
            match section.as_str() {
                "quiver" => {
                    let toks: Vec<&str> = l.split_whitespace().collect();
                    match toks.first() {
                        Some(&"vertices") => {
                            vertices.extend(toks[1..].iter().map(|s| s.to_string()))
                        }
                        Some(&"arrow") if toks.len() == 4 => {
                            let pos = |v: &str| {
                                vertices
                                    .iter()
                                    .position(|x| x == v)
                                    .ok_or_else(|| perr(line, "unknown vertex"))
                            };
                            arrows.push(Arrow {
                                name: toks[1].to_string(),
                                src: pos(toks[2])?,
                                tgt: pos(toks[3])?,
                            });
                        }
                        _ => {
                            return Err(perr(
                                line,
                                "expected 'vertices ...' or 'arrow NAME SRC TGT'",
                            ))
                        }
                    }
                }
                "relations" => rel_lines.push((line, l.to_string())),
                "modules" => mod_lines.push((line, l.to_string())),
                "poset" => poset_lines.push((line, l.to_string())),
                "weyl" => weyl_lines.push((line, l.to_string())),
                _ => return Err(perr(line, "content outside a known section")),
            }
        }
        let arrow_idx = |name: &str, line: usize| {
            arrows
                .iter()
                .position(|a| a.name == name)
                .ok_or_else(|| perr(line, &format!("unknown arrow {name}")))
        };
        let mut relations = vec![];
        for (line, l) in &rel_lines {
            let lhs = l
                .strip_suffix("= 0")
                .or_else(|| l.strip_suffix("=0"))
                .ok_or_else(|| perr(*line, "relation must end in '= 0'"))?;
            let mut terms: Vec<(Q, Vec<usize>)> = vec![];
            let mut sign = Q::one();
            let mut coeff: Option<Q> = None;
            let mut path: Vec<usize> = vec![];
            let flush = |terms: &mut Vec<(Q, Vec<usize>)>,
                         sign: &Q,
                         coeff: &mut Option<Q>,
                         path: &mut Vec<usize>| {
                if !path.is_empty() {
                    let c = coeff.take().unwrap_or_else(Q::one);
                    terms.push((sign * c, std::mem::take(path)));
                }
            };
            for tok in lhs.split_whitespace() {
                match tok {
                    "+" | "-" => {
                        flush(&mut terms, &sign, &mut coeff, &mut path);
                        sign = if tok == "-" { -Q::one() } else { Q::one() };
                    }
                    _ => {
                        if let Some(c) = parse_q(tok) {
                            if !path.is_empty() || coeff.is_some() {
                                return Err(perr(*line, "misplaced coefficient"));
                            }
                            coeff = Some(c);
                        } else {
                            path.push(arrow_idx(tok, *line)?);
                        }
                    }
                }
            }
            flush(&mut terms, &sign, &mut coeff, &mut path);
            if terms.is_empty() {
                return Err(perr(*line, "empty relation"));
            }
            relations.push(Relation { terms });
        }
        let alg = Algebra::new(vertices.clone(), arrows.clone(), relations)?;
        let mut modules = BTreeMap::new();
        for (line, l) in &mod_lines {
            let (name, rest) = l
                .split_once(':')
                .ok_or_else(|| perr(*line, "expected NAME: ..."))?;
            let assigns = assignments(rest, *line)?;
            let mut dims = vec![None; vertices.len()];
            for (k, v) in &assigns {
                if let Some(vi) = vertices.iter().position(|x| x == k) {
                    dims[vi] = Some(
                        v.parse::<usize>()
                            .map_err(|_| perr(*line, "bad dimension"))?,
                    );
                }
            }
            let dims: Vec<usize> = dims
                .into_iter()
                .map(|d| d.ok_or_else(|| perr(*line, "every vertex needs a dimension")))
                .collect::<Result<_>>()?;
            let mut m = ModuleRep::zero_maps(&alg, dims);
            for (k, v) in &assigns {
                if vertices.contains(k) {
                    continue;
                }
                let ai = arrow_idx(k, *line)?;
                let a = &arrows[ai];
                m.maps[ai] = parse_matrix(v, m.dims[a.tgt], m.dims[a.src], *line)?;
            }
            m.check(&alg).map_err(|e| perr(*line, &e.to_string()))?;
            if modules.insert(name.trim().to_string(), m).is_some() {
                return Err(perr(*line, "duplicate module"));
            }
        }
        let n = vertices.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (line, l) in &poset_lines {
            let parts: Vec<&str> = l.split('<').map(str::trim).collect();
            if parts.len() < 2 {
                return Err(perr(*line, "expected 'a < b'"));
            }
            for w in parts.windows(2) {
                let a = alg
                    .vertex(w[0])
                    .map_err(|_| perr(*line, "unknown weight"))?;
                let b = alg
                    .vertex(w[1])
                    .map_err(|_| perr(*line, "unknown weight"))?;
                leq[a][b] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::Parse("poset relation has a cycle".into()));
                }
            }
        }
        let weyl = if weyl_lines.is_empty() {
            None
        } else {
            let mut ctype = None;
            let mut words = vec![None; n];
            for (line, l) in &weyl_lines {
                if let Some(t) = l.strip_prefix("type ") {
                    ctype = Some(t.trim().to_string());
                } else if let Some((k, v)) = l.split_once('=') {
                    let vi = alg
                        .vertex(k.trim())
                        .map_err(|_| perr(*line, "unknown weight"))?;
                    let w = v.trim().trim_matches('"').to_string();
                    words[vi] = Some(w);
                } else {
                    return Err(perr(*line, "expected 'type X' or 'weight = \"word\"'"));
                }
            }
            Some(WeylData {
                ctype: ctype.ok_or_else(|| Error::Parse("weyl section needs a type".into()))?,
                words: words
                    .into_iter()
                    .map(|w| {
                        w.ok_or_else(|| Error::Parse("weyl section needs a word per weight".into()))
                    })
                    .collect::<Result<_>>()?,
            })
        };
        for w in &vertices {
            for p in ["L", "Delta", "Nabla", "T", "P", "I"] {
                if !modules.contains_key(&format!("{p}_{w}")) {
                    return Err(Error::Parse(format!("missing designated module {p}_{w}")));
                }
            }
        }
        let tilts: Vec<ModuleRep> = vertices
            .iter()
            .map(|w| modules[&format!("T_{w}")].clone())
            .collect();
        let (tilt, tilt_homs) = presentation(&alg, &tilts, &vertices)?;
        Ok(Self {
            alg,
            weights: vertices,
            leq,
            modules,
            tilt,
            tilt_homs,
            weyl,
        })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn weight(&self, name: &str) -> Result<usize> {
        self.alg.vertex(name)
    }

    pub fn module(&self, name: &str) -> Result<&ModuleRep> {
        self.modules
            .get(name)
            .ok_or_else(|| Error::Validation(format!("unknown module {name}")))
    }

    fn designated(&self, prefix: &str, l: usize) -> &ModuleRep {
        &self.modules[&format!("{prefix}_{}", self.weights[l])]
    }

    pub fn simple(&self, l: usize) -> &ModuleRep {
        self.designated("L", l)
    }

    pub fn standard(&self, l: usize) -> &ModuleRep {
        self.designated("Delta", l)
    }

    pub fn costandard(&self, l: usize) -> &ModuleRep {
        self.designated("Nabla", l)
    }

    pub fn tilting(&self, l: usize) -> &ModuleRep {
        self.designated("T", l)
    }

    pub fn ext(&self, m: &ModuleRep, n: &ModuleRep) -> Result<Vec<usize>> {
        hom_ext(&self.alg, m, n, EXT_DEGREE)
    }

    /// `Ext^1(M, Nabla_l) = 0` for all `l`.
    pub fn has_delta_filtration(&self, m: &ModuleRep) -> Result<bool> {
        for l in 0..self.n() {
            if hom_ext(&self.alg, m, self.costandard(l), 1)?[1] != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim_Delta(M) = max{d : Ext^d(M, Nabla) != 0}`.
    pub fn delta_dim(&self, m: &ModuleRep) -> Result<Option<usize>> {
        let mut best = None;
        for l in 0..self.n() {
            let e = self.ext(m, self.costandard(l))?;
            if let Some(d) = e.iter().rposition(|&x| x != 0) {
                best = best.max(Some(d));
            }
        }
        Ok(best)
    }

    /// `dim_Nabla(M) = max{d : Ext^d(Delta, M) != 0}`.
    pub fn nabla_dim(&self, m: &ModuleRep) -> Result<Option<usize>> {
        let mut best = None;
        for l in 0..self.n() {
            let e = self.ext(self.standard(l), m)?;
            if let Some(d) = e.iter().rposition(|&x| x != 0) {
                best = best.max(Some(d));
            }
        }
        Ok(best)
    }

    /// Direct sum of tiltings with the given labels.
    pub fn realize_term(&self, labels: &[usize]) -> ModuleRep {
        let parts: Vec<&ModuleRep> = labels.iter().map(|&a| self.tilting(a)).collect();
        ModuleRep::direct_sum(&self.alg, &parts)
    }

    fn offsets(&self, labels: &[usize]) -> Vec<Vec<usize>> {
        let nv = self.n();
        let mut out = vec![];
        let mut off = vec![0; nv];
        for &a in labels {
            out.push(off.clone());
            for (v, o) in off.iter_mut().enumerate() {
                *o += self.tilting(a).dims[v];
            }
        }
        out
    }

    /// Module homomorphism of a block matrix.
    pub fn realize_block(&self, m: &BlockMatrix) -> ModHom {
        let src = self.realize_term(&m.cols);
        let dst = self.realize_term(&m.rows);
        let mut out = ModHom::zero(&src, &dst);
        let ro = self.offsets(&m.rows);
        let co = self.offsets(&m.cols);
        for (r, &rl) in m.rows.iter().enumerate() {
            for (c, &cl) in m.cols.iter().enumerate() {
                let f = combine(
                    &self.tilt_homs[&(cl, rl)],
                    &m.blocks[r][c],
                    ModHom::zero(self.tilting(cl), self.tilting(rl)),
                );
                for v in 0..self.n() {
                    out.blocks[v].set_block(ro[r][v], co[c][v], &f.blocks[v]);
                }
            }
        }
        out
    }

    /// Block matrix of a module homomorphism between direct sums of tiltings.
    pub fn to_block(&self, f: &ModHom, rows: &[usize], cols: &[usize]) -> Result<BlockMatrix> {
        let mut m = BlockMatrix::zero(&self.tilt, rows, cols);
        let ro = self.offsets(rows);
        let co = self.offsets(cols);
        for (r, &rl) in rows.iter().enumerate() {
            for (c, &cl) in cols.iter().enumerate() {
                let part = f.sub_block(
                    &ro[r],
                    &self.tilting(rl).dims,
                    &co[c],
                    &self.tilting(cl).dims,
                );
                m.blocks[r][c] = hom_coords(&self.tilt_homs[&(cl, rl)], &part)?;
            }
        }
        Ok(m)
    }

    /// Cohomology dimensions per degree and vertex of the realized complex.
    pub fn cohomology(&self, x: &FormalComplex) -> BTreeMap<i32, Vec<usize>> {
        let mut out = BTreeMap::new();
        if x.is_zero() {
            return out;
        }
        for deg in x.lo..=x.hi() {
            let t = self.realize_term(x.term(deg));
            let din = self.realize_block(&x.diff(&self.tilt, deg - 1));
            let dout = self.realize_block(&x.diff(&self.tilt, deg));
            let h: Vec<usize> = (0..self.n())
                .map(|v| t.dims[v] - dout.blocks[v].rank() - din.blocks[v].rank())
                .collect();
            if h.iter().any(|&x| x != 0) {
                out.insert(deg, h);
            }
        }
        out
    }

    /// Left tilting approximation `M -> T` with Delta-filtered cokernel, smallest total dimension first.
    fn approximation(&self, m: &ModuleRep) -> Result<(Vec<usize>, ModHom, ModuleRep, ModHom)> {
        let n = self.n();
        let tdims: Vec<usize> = (0..n).map(|a| self.tilting(a).dim()).collect();
        let bound = m.dim() * tdims.iter().copied().max().unwrap_or(1);
        let mut cands: Vec<(usize, Vec<usize>)> = vec![];
        let mut counts = vec![0usize; n];
        loop {
            let total: usize = counts.iter().zip(&tdims).map(|(c, d)| c * d).sum();
            if total >= m.dim() && total <= bound {
                cands.push((total, counts.clone()));
            }
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                counts[i] += 1;
                let total: usize = counts.iter().zip(&tdims).map(|(c, d)| c * d).sum();
                if total <= bound {
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        cands.sort();
        for (_, counts) in cands {
            let labels: Vec<usize> = counts
                .iter()
                .enumerate()
                .flat_map(|(a, &c)| std::iter::repeat_n(a, c))
                .collect();
            let t = self.realize_term(&labels);
            let homs = hom_space(&self.alg, m, &t);
            if homs.is_empty() {
                continue;
            }
            for step in 1..=16i64 {
                let coords: Vec<Q> = (0..homs.len())
                    .map(|k| Q::from_integer(step.pow(k as u32).into()))
                    .collect();
                let f = combine(&homs, &coords, ModHom::zero(m, &t));
                if !f.is_injective() {
                    continue;
                }
                let (c, p) = cokernel(&self.alg, &t, &f)?;
                if self.has_delta_filtration(&c)? {
                    return Ok((labels, f, c, p));
                }
            }
        }
        Err(Error::Validation(
            "module has no tilting coresolution".into(),
        ))
    }

    /// Coresolution `0 -> M -> T^0 -> T^1 -> ...` before minimization, with the inclusion `M -> T^0`.
    pub fn coresolution_raw(&self, m: &ModuleRep) -> Result<(FormalComplex, ModHom)> {
        if !self.has_delta_filtration(m)? {
            return Err(Error::Validation("module lacks a Delta-filtration".into()));
        }
        let mut terms: Vec<Vec<usize>> = vec![];
        let mut d = vec![];
        let mut eta = ModHom::zero(m, &ModuleRep::zero(&self.alg));
        let mut cur = m.clone();
        let mut prev: Option<ModHom> = None;
        while !cur.is_zero() {
            if terms.len() > MAX_STEPS {
                return Err(Error::Internal(
                    "tilting coresolution does not terminate".into(),
                ));
            }
            let (labels, f, c, p) = self.approximation(&cur)?;
            match &prev {
                None => eta = f.clone(),
                Some(pr) => {
                    let hom = f.compose(pr);
                    d.push(self.to_block(&hom, &labels, terms.last().expect("previous term"))?);
                }
            }
            terms.push(labels);
            prev = Some(p);
            cur = c;
        }
        let x = FormalComplex::from_parts(&self.tilt, 0, terms, d)?;
        Ok((x, eta))
    }

    /// Minimal tilting coresolution of a Delta-filtered module.
    pub fn tilting_coresolution(&self, m: &ModuleRep) -> Result<FormalComplex> {
        self.coresolution_raw(m)?.0.minimize(&self.tilt)
    }

    /// Chain map `F: C -> X` with `F^deg . eta = u`, first solution in the coordinate order.
    fn lift(
        &self,
        c: &FormalComplex,
        x: &FormalComplex,
        deg: i32,
        eta: &ModHom,
        u: &ModHom,
    ) -> Result<ChainMap> {
        let pres = &self.tilt;
        // variables (degree, row, col, coordinate)
        let mut vars: Vec<(i32, usize, usize, usize)> = vec![];
        if !c.is_zero() {
            for n in c.lo..=c.hi() {
                for (r, &rl) in x.term(n).iter().enumerate() {
                    for (cc, &cl) in c.term(n).iter().enumerate() {
                        vars.extend((0..pres.hom_dim[cl][rl]).map(|k| (n, r, cc, k)));
                    }
                }
            }
        }
        let unit = |n: i32, r: usize, cc: usize, k: usize| {
            let mut m = BlockMatrix::zero(pres, x.term(n), c.term(n));
            m.blocks[r][cc][k] = Q::one();
            m
        };
        let lo = c.lo.min(x.lo) - 1;
        let hi = c.hi().max(x.hi()) + 1;
        let flat =
            |m: &BlockMatrix| -> Vec<Q> { m.blocks.iter().flatten().flatten().cloned().collect() };
        let eq_len: Vec<usize> = (lo..=hi)
            .map(|n| flat(&BlockMatrix::zero(pres, x.term(n + 1), c.term(n))).len())
            .collect();
        let ext_len = u.flatten().len();
        let total: usize = eq_len.iter().sum::<usize>() + ext_len;
        let mut cols: Vec<Vec<Q>> = vec![];
        for &(n, r, cc, k) in &vars {
            let e = unit(n, r, cc, k);
            let mut col = vec![];
            for (i, m) in (lo..=hi).enumerate() {
                let block = if m == n {
                    x.diff(pres, n).compose(pres, &e)?
                } else if m + 1 == n {
                    e.compose(pres, &c.diff(pres, m))?.neg()
                } else {
                    BlockMatrix::zero(pres, x.term(m + 1), c.term(m))
                };
                let v = flat(&block);
                debug_assert_eq!(v.len(), eq_len[i]);
                col.extend(v);
            }
            if n == deg {
                col.extend(self.realize_block(&e).compose(eta).flatten());
            } else {
                col.extend(vec![Q::zero(); ext_len]);
            }
            cols.push(col);
        }
        let mut rhs = vec![Q::zero(); total - ext_len];
        rhs.extend(u.flatten());
        let sol = if vars.is_empty() {
            if rhs.iter().all(|x| x.is_zero()) {
                Some(vec![])
            } else {
                None
            }
        } else {
            QMatrix::from_columns(total, &cols).solve(&rhs)
        };
        let sol = sol
            .ok_or_else(|| Error::Internal("no chain map realizes the required morphism".into()))?;
        let mut maps: Vec<BlockMatrix> = if c.is_zero() {
            vec![]
        } else {
            (c.lo..=c.hi())
                .map(|n| BlockMatrix::zero(pres, x.term(n), c.term(n)))
                .collect()
        };
        for (&(n, r, cc, k), val) in vars.iter().zip(sol) {
            maps[(n - c.lo) as usize].blocks[r][cc][k] = val;
        }
        Ok(ChainMap { lo: c.lo, maps })
    }

    /// Minimal tilting complex of a module, with the complex before the final minimization.
    pub fn cmin_module(&self, m: &ModuleRep) -> Result<CminResult> {
        m.check(&self.alg)?;
        let raw = if self.has_delta_filtration(m)? {
            self.coresolution_raw(m)?.0
        } else {
            self.glue_resolution(m)?
        };
        let coh = self.cohomology(&raw);
        let expected: BTreeMap<i32, Vec<usize>> = if m.is_zero() {
            BTreeMap::new()
        } else {
            BTreeMap::from([(0, m.dims.clone())])
        };
        if coh != expected {
            return Err(Error::Internal(
                "constructed complex is not quasi-isomorphic to the module".into(),
            ));
        }
        let complex = raw.minimize(&self.tilt)?;
        Ok(CminResult { complex, raw })
    }

    /// Glues tilting coresolutions of a projective resolution by iterated cones.
    fn glue_resolution(&self, m: &ModuleRep) -> Result<FormalComplex> {
        let res = projective_resolution(&self.alg, m)?;
        let (mut x, eta0) = self.coresolution_raw(&res.terms[0])?;
        // psi^n: Q^n -> realized X^n, with Q^{-k} = P_k
        let mut psi: BTreeMap<i32, ModHom> = BTreeMap::from([(0, eta0)]);
        for k in 1..res.terms.len() {
            if k > MAX_STEPS {
                return Err(Error::Internal(
                    "resolution counter did not decrease".into(),
                ));
            }
            let (c, eta) = self.coresolution_raw(&res.terms[k])?;
            let shift = k as i32 - 1;
            let cs = c.shift(shift);
            let u = psi[&-shift].compose(&res.d[k]);
            let f = self.lift(&cs, &x, -shift, &eta, &u)?;
            let y = cone(&self.tilt, &f, &cs, &x)?;
            let mut next = BTreeMap::new();
            if !y.is_zero() {
                for n in y.lo..=y.hi() {
                    let top = self.realize_term(cs.term(n + 1));
                    let bottom = self.realize_term(x.term(n));
                    let q = if n == -(k as i32) {
                        &res.terms[k]
                    } else if n <= 0 && n > -(k as i32) {
                        &res.terms[(-n) as usize]
                    } else {
                        continue;
                    };
                    let upper = if n == -(k as i32) {
                        eta.clone()
                    } else {
                        ModHom::zero(q, &top)
                    };
                    let lower = psi
                        .get(&n)
                        .cloned()
                        .unwrap_or_else(|| ModHom::zero(q, &bottom));
                    let blocks = upper
                        .blocks
                        .iter()
                        .zip(&lower.blocks)
                        .map(|(a, b)| a.vstack(b))
                        .collect();
                    next.insert(n, ModHom { blocks });
                }
            }
            x = y;
            psi = next;
            self.check_psi(&x, &psi, &res.terms, &res.d, k)?;
        }
        Ok(x)
    }

    fn check_psi(
        &self,
        x: &FormalComplex,
        psi: &BTreeMap<i32, ModHom>,
        terms: &[ModuleRep],
        d: &[ModHom],
        k: usize,
    ) -> Result<()> {
        for n in -(k as i32)..=0 {
            let q = &terms[(-n) as usize];
            let here = psi
                .get(&n)
                .cloned()
                .unwrap_or_else(|| ModHom::zero(q, &self.realize_term(x.term(n))));
            let left = self.realize_block(&x.diff(&self.tilt, n)).compose(&here);
            let right = if n == 0 {
                ModHom::zero(q, &self.realize_term(x.term(1)))
            } else {
                let nxt = psi.get(&(n + 1)).cloned().unwrap_or_else(|| {
                    ModHom::zero(&terms[(-n - 1) as usize], &self.realize_term(x.term(n + 1)))
                });
                nxt.compose(&d[(-n) as usize])
            };
            if left != right {
                return Err(Error::Internal(format!(
                    "comparison map is not a chain map in degree {n}"
                )));
            }
        }
        Ok(())
    }

    /// Label multiplicities of a complex as polynomials `sum_i [X_i : T_a] v^i`.
    pub fn readout(&self, x: &FormalComplex) -> BTreeMap<usize, LaurentPoly> {
        x.label_counts()
            .into_iter()
            .map(|(a, degs)| {
                let p = LaurentPoly::from_terms(degs.into_iter().map(|(d, c)| (d, c as i64)));
                (a, p)
            })
            .collect()
    }
}

/// Basis of Hom between tiltings with `id` first on endomorphisms, plus composition data.
fn presentation(
    alg: &Algebra,
    tilts: &[ModuleRep],
    names: &[String],
) -> Result<(CategoryPresentation, BTreeMap<(usize, usize), Vec<ModHom>>)> {
    let n = tilts.len();
    let mut homs = BTreeMap::new();
    let mut radical = vec![vec![vec![]; n]; n];
    for a in 0..n {
        for b in 0..n {
            let raw = hom_space(alg, &tilts[a], &tilts[b]);
            if a != b {
                radical[a][b] = vec![true; raw.len()];
                homs.insert((a, b), raw);
                continue;
            }
            let id = ModHom::identity(&tilts[a]);
            let d = Q::from_integer(tilts[a].dim().into());
            let nil: Vec<Vec<Q>> = raw
                .iter()
                .map(|f| {
                    let tr = f.blocks.iter().fold(Q::zero(), |acc, b| acc + b.trace());
                    f.add(&id.scale(&-(tr / d.clone()))).flatten()
                })
                .collect();
            let len = id.flatten().len();
            let span = QMatrix::from_columns(len, &nil).column_space_basis();
            let mut basis = vec![id.clone()];
            for c in 0..span.cols() {
                let flat = span.column(c);
                let mut off = 0;
                let blocks = id
                    .blocks
                    .iter()
                    .map(|b| {
                        let m = QMatrix::from_rows(
                            b.rows(),
                            b.cols(),
                            flat[off..off + b.rows() * b.cols()].to_vec(),
                        );
                        off += b.rows() * b.cols();
                        m
                    })
                    .collect();
                basis.push(ModHom { blocks });
            }
            if basis.len() != raw.len() {
                return Err(Error::Validation(format!(
                    "End(T_{}) is not local",
                    names[a]
                )));
            }
            radical[a][b] = (0..basis.len()).map(|k| k != 0).collect();
            homs.insert((a, b), basis);
        }
    }
    let mut comp = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut t = vec![];
                for f in &homs[&(a, b)] {
                    let mut row = vec![];
                    for g in &homs[&(b, c)] {
                        row.push(hom_coords(&homs[&(a, c)], &g.compose(f))?);
                    }
                    t.push(row);
                }
                comp.insert((a, b, c), t);
            }
        }
    }
    let hom_dim = (0..n)
        .map(|a| (0..n).map(|b| homs[&(a, b)].len()).collect())
        .collect();
    let identity = (0..n)
        .map(|a| {
            let mut v = vec![Q::zero(); homs[&(a, a)].len()];
            v[0] = Q::one();
            v
        })
        .collect();
    let pres = CategoryPresentation {
        labels: names.iter().map(|w| format!("T_{w}")).collect(),
        hom_dim,
        comp,
        identity,
        radical,
    };
    Ok((pres, homs))
}

pub struct CminResult {
    pub complex: FormalComplex,
    pub raw: FormalComplex,
}

/// Outcome of one axiom or invariant family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// (HW1)-(HW3) and the shape of projectives, injectives and tiltings.
pub fn check_hw_axioms(b: &HwBlock) -> Result<Report> {
    let mut r = Report::default();
    let n = b.n();
    let alg = &b.alg;
    for l in 0..n {
        let w = &b.weights[l];
        let (lm, dm, nm, tm) = (b.simple(l), b.standard(l), b.costandard(l), b.tilting(l));
        let pm = b.designated("P", l);
        let im = b.designated("I", l);
        r.check(lm.dims == unit_vec(n, l), || {
            format!("(HW1) L_{w} is not the simple at {w}")
        });
        for mu in 0..n {
            let wm = &b.weights[mu];
            let hom = hom_space(alg, lm, b.simple(mu)).len();
            r.check(hom == usize::from(l == mu), || {
                format!("(HW1) dim Hom(L_{w}, L_{wm}) = {hom}")
            });
            let top = hom_space(alg, dm, b.simple(mu)).len();
            r.check(top == usize::from(l == mu), || {
                format!("(HW2) Delta_{w} does not have top L_{w}")
            });
            let soc = hom_space(alg, b.simple(mu), nm).len();
            r.check(soc == usize::from(l == mu), || {
                format!("(HW2) Nabla_{w} does not have socle L_{w}")
            });
            for (name, m) in [("Delta", dm), ("Nabla", nm), ("T", tm)] {
                let ok = if mu == l {
                    m.dims[mu] == 1
                } else {
                    m.dims[mu] == 0 || b.leq(mu, l)
                };
                r.check(ok, || {
                    format!("(HW2) composition factors of {name}_{w} are not bounded by {w}")
                });
            }
            let e1 = hom_ext(alg, pm, b.simple(mu), 1)?[1];
            r.check(e1 == 0, || format!("(HW3) P_{w} is not projective"));
            let e1 = hom_ext(alg, b.simple(mu), im, 1)?[1];
            r.check(e1 == 0, || format!("(HW3) I_{w} is not injective"));
            // (P_l : Delta_mu) = dim Hom(P_l, Nabla_mu) = [Nabla_mu : L_l]
            let mult = hom_space(alg, pm, b.costandard(mu)).len();
            r.check(mult == b.costandard(mu).dims[l], || {
                format!("(HW3) BGG reciprocity fails for P_{w}")
            });
            let ok = if mu == l {
                mult == 1
            } else {
                mult == 0 || b.leq(l, mu)
            };
            r.check(ok, || {
                format!("(HW3) P_{w} has a Delta-factor not above {w}")
            });
            let e =
                hom_ext(alg, tm, b.costandard(mu), 1)?[1] + hom_ext(alg, b.standard(mu), tm, 1)?[1];
            r.check(e == 0, || format!("T_{w} is not tilting"));
        }
        let hom = hom_space(alg, dm, nm).len();
        r.check(hom == 1, || {
            format!("(HW2) dim Hom(Delta_{w}, Nabla_{w}) = {hom}")
        });
        r.check(pm.top_dims(alg) == unit_vec(n, l), || {
            format!("(HW3) P_{w} does not have top L_{w}")
        });
        let soc: Vec<usize> = (0..n)
            .map(|mu| hom_space(alg, b.simple(mu), im).len())
            .collect();
        r.check(soc == unit_vec(n, l), || {
            format!("(HW3) I_{w} does not have socle L_{w}")
        });
        r.check(pm == alg.projective(l), || {
            format!("(HW3) P_{w} differs from the path projective")
        });
        r.check(is_local(alg, tm), || format!("T_{w} is not indecomposable"));
        r.check(b.has_delta_filtration(pm)?, || {
            format!("(HW3) P_{w} lacks a Delta-filtration")
        });
    }
    Ok(r)
}

/// One named invariant family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suite {
    pub name: &'static str,
    pub report: Report,
}

/// Modules exercised by the invariant suites, in a fixed order.
fn test_modules(b: &HwBlock) -> Result<Vec<(String, ModuleRep)>> {
    let mut out: Vec<(String, ModuleRep)> = b
        .modules
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    for l in 0..b.n() {
        let (rad, _) = b.standard(l).radical_submodule(&b.alg)?;
        if !rad.is_zero() {
            out.push((format!("rad Delta_{}", b.weights[l]), rad));
        }
    }
    Ok(out)
}

fn counts_poly(x: &FormalComplex, a: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    if x.is_zero() {
        return p;
    }
    for deg in x.lo..=x.hi() {
        let c = x.count(deg, a);
        if c > 0 {
            p += &LaurentPoly::monomial(c as i64, deg);
        }
    }
    p
}

/// Runs every invariant suite on the block.
pub fn verify(b: &HwBlock) -> Result<Vec<Suite>> {
    let n = b.n();
    let pres = &b.tilt;
    let mods = test_modules(b)?;
    let mut cmin: BTreeMap<String, CminResult> = BTreeMap::new();
    for (name, m) in &mods {
        cmin.insert(name.clone(), b.cmin_module(m)?);
    }
    let mut suites = vec![];

    let mut r = Report::default();
    r.check(pres.validate().is_ok(), || {
        "tilting presentation fails validation".into()
    });
    for (name, m) in &b.modules {
        r.check(m.check(&b.alg).is_ok(), || {
            format!("{name} violates the relations")
        });
    }
    suites.push(Suite {
        name: "presentation",
        report: r,
    });

    suites.push(Suite {
        name: "highest-weight-axioms",
        report: check_hw_axioms(b)?,
    });

    let mut r = Report::default();
    for l in 0..n {
        for mu in 0..n {
            let e = b.ext(b.standard(l), b.costandard(mu))?;
            let mut want = vec![0; EXT_DEGREE + 1];
            want[0] = usize::from(l == mu);
            r.check(e == want, || {
                format!(
                    "Ext(Delta_{}, Nabla_{}) = {e:?}",
                    b.weights[l], b.weights[mu]
                )
            });
        }
    }
    suites.push(Suite {
        name: "ext-vanishing",
        report: r,
    });

    let mut r = Report::default();
    for (name, m) in &mods {
        let flt = b.has_delta_filtration(m)?;
        let all = (0..n).try_fold(true, |acc, l| -> Result<bool> {
            Ok(acc && b.ext(m, b.costandard(l))?[1..].iter().all(|&x| x == 0))
        })?;
        r.check(flt == all, || {
            format!("Ext^1 and Ext^>0 criteria disagree on {name}")
        });
        let c = &cmin[name].complex;
        let nonneg = c.is_zero() || c.lo >= 0;
        r.check(flt == nonneg, || {
            format!("Delta-filtration of {name} does not match C_min degrees")
        });
    }
    for l in 0..n {
        r.check(b.has_delta_filtration(b.tilting(l))?, || {
            "tilting without Delta-filtration".into()
        });
    }
    suites.push(Suite {
        name: "donkin-criterion",
        report: r,
    });

    let mut r = Report::default();
    for (name, _) in &mods {
        let res = &cmin[name];
        r.check(res.complex.is_minimal(pres), || {
            format!("C_min({name}) is not minimal")
        });
        r.check(b.cohomology(&res.raw) == b.cohomology(&res.complex), || {
            format!("minimization changed the cohomology of {name}")
        });
        let alt = res.raw.minimize_with(pres, Order::HighestFirst)?;
        r.check(alt.label_counts() == res.complex.label_counts(), || {
            format!("elimination orders disagree on {name}")
        });
        r.check(summand_bounds_hold(&res.raw, &res.complex, n), || {
            format!("direct-summand bounds fail for {name}")
        });
    }
    suites.push(Suite {
        name: "minimize",
        report: r,
    });

    let mut r = Report::default();
    for (name, m) in &mods {
        if m.is_zero() {
            continue;
        }
        let (rad, inc) = m.radical_submodule(&b.alg)?;
        if rad.is_zero() {
            continue;
        }
        let (top, _) = cokernel(&b.alg, m, &inc)?;
        let cx = b.cmin_module(&rad)?.complex;
        let cy = &cmin[name].complex;
        let cz = b.cmin_module(&top)?.complex;
        let lo = cx.lo.min(cy.lo).min(cz.lo) - 2;
        let hi = cx.hi().max(cy.hi()).max(cz.hi()) + 2;
        for i in lo..=hi {
            for a in 0..n {
                let c = |x: &FormalComplex, d: i32| x.count(d, a) as i64;
                let upper = c(&cx, i + 1) + c(cy, i);
                let lower = c(&cx, i + 1) - c(&cx, i) - c(&cx, i + 2) + c(cy, i)
                    - c(cy, i - 1)
                    - c(cy, i + 1);
                let z = c(&cz, i);
                r.check(upper >= z && z >= lower, || {
                    format!("triangle bounds fail for rad {name} -> {name} in degree {i}")
                });
            }
        }
    }
    suites.push(Suite {
        name: "triangle-bounds",
        report: r,
    });

    let mut r = Report::default();
    for (name, m) in &mods {
        let c = &cmin[name].complex;
        if m.is_zero() {
            continue;
        }
        let gfd = b.nabla_dim(m)?.map(|d| d as i32);
        let wfd = b.delta_dim(m)?.map(|d| d as i32);
        r.check(gfd == Some(c.hi()), || {
            format!(
                "dim_Nabla({name}) = {gfd:?} but C_min ends in degree {}",
                c.hi()
            )
        });
        r.check(wfd == Some(-c.lo), || {
            format!(
                "dim_Delta({name}) = {wfd:?} but C_min starts in degree {}",
                c.lo
            )
        });
        for k in 0..c.d.len() {
            let deg = c.lo + k as i32;
            if deg >= 0 && c.d[k].is_zero() {
                r.check(c.terms[k + 1..].iter().all(|t| t.is_empty()), || {
                    format!("gap in C_min({name}) after degree {deg}")
                });
            }
        }
        let ideal: Vec<bool> = (0..n)
            .map(|a| (0..n).any(|f| m.dims[f] > 0 && b.leq(a, f)))
            .collect();
        r.check(c.terms.iter().flatten().all(|&a| ideal[a]), || {
            format!("C_min({name}) leaves the order ideal of its composition factors")
        });
    }
    suites.push(Suite {
        name: "filtration-dimensions",
        report: r,
    });

    let mut r = Report::default();
    let std: Vec<&FormalComplex> = (0..n)
        .map(|l| &cmin[&format!("Delta_{}", b.weights[l])].complex)
        .collect();
    for (l, c) in std.iter().enumerate() {
        let ok = c.is_zero() || (c.lo >= 0 && c.terms.iter().flatten().all(|&a| b.leq(a, l)));
        r.check(ok, || {
            format!(
                "C_min(Delta_{}) has terms outside degrees >= 0 or weights <= it",
                b.weights[l]
            )
        });
    }
    let lengths: BTreeMap<usize, i64> = match &b.weyl {
        Some(w) => {
            let sys = CoxeterSystem::from_type(&w.ctype)?;
            w.words
                .iter()
                .enumerate()
                .map(|(a, s)| Ok((a, sys.parse_word(s)?.len() as i64)))
                .collect::<Result<_>>()?
        }
        None => BTreeMap::new(),
    };
    for l in 0..n {
        let mut p = BTreeMap::new();
        for nu in 0..n {
            let e = b.ext(b.simple(l), b.costandard(nu))?;
            let poly = LaurentPoly::from_terms(
                e.iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| (i as i32, x as i64)),
            );
            if !poly.is_zero() {
                p.insert(nu, poly);
            }
        }
        let mut p_prime = BTreeMap::new();
        for nu in 0..n {
            for mu in 0..n {
                let poly = counts_poly(std[nu], mu);
                if !poly.is_zero() {
                    p_prime.insert((nu, mu), poly);
                }
            }
        }
        let data = ParityData {
            lambda: l,
            p,
            p_prime,
            length: lengths.clone(),
        };
        let simple = &cmin[&format!("L_{}", b.weights[l])].complex;
        for mu in 0..n {
            let conv = data.convolution(&mu);
            let got = counts_poly(simple, mu);
            let ok = if conv.upper_bound {
                (got.clone() - conv.value.clone())
                    .terms()
                    .all(|(_, c)| c <= &0.into())
            } else {
                got == conv.value
            };
            r.check(ok, || {
                format!(
                    "C_min(L_{}) at T_{} is {got}, convolution gives {}",
                    b.weights[l], b.weights[mu], conv.value
                )
            });
        }
    }
    suites.push(Suite {
        name: "standard-simple-convolution",
        report: r,
    });

    let mut r = Report::default();
    if let Some(w) = &b.weyl {
        let sys = CoxeterSystem::from_type(&w.ctype)?;
        let eng = KlEngine::new(sys.clone());
        let els: Vec<_> = w
            .words
            .iter()
            .map(|s| sys.parse_word(s))
            .collect::<Result<_>>()?;
        for x in 0..n {
            let sc = &cmin[&format!("Delta_{}", b.weights[x])].complex;
            let lc = &cmin[&format!("L_{}", b.weights[x])].complex;
            for y in 0..n {
                let want = cmin_standard_o(&eng, &[], &[], &els[x], &els[y])?;
                let got = counts_poly(sc, y);
                r.check(got == want, || {
                    format!(
                        "standard ({}, {}): oracle {got}, formula {want}",
                        b.weights[x], b.weights[y]
                    )
                });
                let want = cmin_simple_o(&eng, &[], &[], &els[x], &els[y])?;
                let got = counts_poly(lc, y);
                r.check(got == want, || {
                    format!(
                        "simple ({}, {}): oracle {got}, formula {want}",
                        b.weights[x], b.weights[y]
                    )
                });
            }
        }
    } else {
        r.failures.push("block has no weyl section".into());
    }
    suites.push(Suite {
        name: "kl-equivalence",
        report: r,
    });
    Ok(suites)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> HwBlock {
        HwBlock::builtin("sl2").unwrap()
    }

    fn labels(b: &HwBlock, c: &FormalComplex) -> Vec<(i32, Vec<String>)> {
        c.terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                (
                    c.lo + k as i32,
                    t.iter().map(|&a| b.tilt.labels[a].clone()).collect(),
                )
            })
            .collect()
    }

    #[test]
    fn sl2_parses() {
        let b = sl2();
        assert_eq!(b.weights, vec!["e", "s"]);
        assert!(b.leq(0, 1) && !b.leq(1, 0));
        assert_eq!(b.tilt.hom_dim, vec![vec![1, 1], vec![1, 2]]);
        b.tilt.validate().unwrap();
    }

    #[test]
    fn hw_axioms_pass() {
        let r = check_hw_axioms(&sl2()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn ext_examples() {
        let b = sl2();
        let (e, s) = (0, 1);
        assert_eq!(b.ext(b.simple(s), b.costandard(e)).unwrap()[1], 1);
        assert_eq!(hom_space(&b.alg, b.simple(s), b.simple(s)).len(), 1);
        assert!(b.has_delta_filtration(b.tilting(s)).unwrap());
        assert!(!b.has_delta_filtration(b.simple(s)).unwrap());
    }

    #[test]
    fn coresolutions() {
        let b = sl2();
        let t = b.tilting_coresolution(b.tilting(1)).unwrap();
        assert_eq!(labels(&b, &t), vec![(0, vec!["T_s".to_string()])]);
        let d = b.tilting_coresolution(b.standard(1)).unwrap();
        assert_eq!(
            labels(&b, &d),
            vec![(0, vec!["T_s".into()]), (1, vec!["T_e".into()])]
        );
        let d = b.tilting_coresolution(b.standard(0)).unwrap();
        assert_eq!(labels(&b, &d), vec![(0, vec!["T_e".into()])]);
        assert!(b.tilting_coresolution(b.simple(1)).is_err());
    }

    #[test]
    fn cmin_examples() {
        let b = sl2();
        let c = b.cmin_module(b.simple(0)).unwrap().complex;
        assert_eq!(labels(&b, &c), vec![(0, vec!["T_e".into()])]);
        let c = b.cmin_module(b.simple(1)).unwrap().complex;
        assert_eq!(
            labels(&b, &c),
            vec![
                (-1, vec!["T_e".into()]),
                (0, vec!["T_s".into()]),
                (1, vec!["T_e".into()])
            ]
        );
        let r = b.readout(&c);
        assert_eq!(r[&0], LaurentPoly::parse("v^-1 + v").unwrap());
        assert_eq!(r[&1], LaurentPoly::one());
        let c = b.cmin_module(b.standard(1)).unwrap().complex;
        assert_eq!(
            labels(&b, &c),
            vec![(0, vec!["T_s".into()]), (1, vec!["T_e".into()])]
        );
    }

    #[test]
    fn all_suites_pass() {
        let suites = verify(&sl2()).unwrap();
        assert_eq!(suites.len(), 9);
        for s in suites {
            assert!(s.report.passed(), "{}: {:?}", s.name, s.report.failures);
            assert!(s.report.checks > 0, "{}", s.name);
        }
    }

    #[test]
    fn bad_block_files() {
        assert!(HwBlock::parse("[quiver]\nvertices x\narrow a x y\n").is_err());
        let missing = SL2.replace("I_s: e=1 s=1 a=[1]\n", "");
        assert!(HwBlock::parse(&missing).is_err());
        let broken = SL2.replace("Delta_s: e=1 s=1 b=[1]", "Delta_s: e=1 s=1 a=[1] b=[1]");
        assert!(HwBlock::parse(&broken).is_err());
        let cyclic = SL2.replace("e < s", "e < s < e");
        assert!(HwBlock::parse(&cyclic).is_err());
    }
}
