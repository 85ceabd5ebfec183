//! Graded tilting multiplicities in minimal tilting complexes of standard and
//! simple objects: category O, affine Kac-Moody categories at both level signs,
//! and quantum groups at roots of unity.

use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{CoxeterElement, CoxeterSystem, Side};
use crate::error::{Error, Result};
use crate::hecke::{Family, KlEngine};
use crate::par;
use crate::poly::LaurentPoly;
use crate::rootdata::linkage::LinkageDatum;
use crate::rootdata::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Setting {
    O,
    KmNeg,
    KmPos,
    Quantum,
    Generic,
}

impl Setting {
    pub fn name(&self) -> &'static str {
        match self {
            Setting::O => "O",
            Setting::KmNeg => "KM-",
            Setting::KmPos => "KM+",
            Setting::Quantum => "quantum",
            Setting::Generic => "generic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Standard,
    Simple,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Standard => "standard",
            Kind::Simple => "simple",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultEntry {
    pub y: String,
    pub y_len: usize,
    pub weight: Option<Weight>,
    pub poly: LaurentPoly,
}

/// `y -> sum_i [C_min(.)_i : T_y] v^i` for a fixed object indexed by `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityPoly {
    pub setting: Setting,
    pub kind: Kind,
    pub system: String,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub x: String,
    pub x_len: usize,
    pub x_weight: Option<Weight>,
    pub entries: Vec<MultEntry>,
    pub truncated_at: Option<usize>,
    pub upper_bound: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiltrationDims {
    pub nabla: i32,
    pub delta: i32,
    pub has_delta_filtration: bool,
}

impl MultiplicityPoly {
    pub fn get(&self, y: &str) -> Option<&LaurentPoly> {
        self.entries.iter().find(|e| e.y == y).map(|e| &e.poly)
    }

    pub fn filtration_dims(&self) -> Result<FiltrationDims> {
        let max = self
            .entries
            .iter()
            .filter_map(|e| e.poly.max_degree())
            .max();
        let min = self
            .entries
            .iter()
            .filter_map(|e| e.poly.min_degree())
            .min();
        match (max, min) {
            (Some(a), Some(b)) => Ok(FiltrationDims {
                nabla: a,
                delta: -b,
                has_delta_filtration: b >= 0,
            }),
            _ => Err(Error::Validation("empty multiplicity table".into())),
        }
    }

    /// Nonzero entries, parity, positivity and the diagonal.
    pub fn check_invariants(&self) -> Result<()> {
        for e in &self.entries {
            let bad = |what: &str| {
                Err(Error::Internal(format!(
                    "{} entry at y = {:?} ({}) violates {what}",
                    self.setting.name(),
                    e.y,
                    e.poly
                )))
            };
            if e.poly.is_zero() {
                return bad("nonzero storage");
            }
            if !e.poly.support_query((self.x_len + e.y_len) as i64) {
                return bad("parity");
            }
            if !e.poly.is_nonneg() {
                return bad("positivity");
            }
            if e.y == self.x && !e.poly.is_one() && !self.upper_bound {
                return bad("diagonal = 1");
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "y": e.y,
                    "weight": e.weight.as_ref().map(|w| w.to_string()),
                    "poly": e.poly.to_json(),
                })
            })
            .collect();
        let dims = match self.filtration_dims() {
            Ok(d) => json!({"nabla": d.nabla, "delta": d.delta}),
            Err(_) => Value::Null,
        };
        let mut v = json!({
            "setting": self.setting.name(),
            "kind": self.kind.name(),
            "system": self.system,
            "I": self.i,
            "J": self.j,
            "x": self.x,
            "entries": entries,
            "dims": dims,
        });
        if let Some(w) = &self.x_weight {
            v["x_weight"] = json!(w.to_string());
        }
        if let Some(n) = self.truncated_at {
            v["truncated_at"] = json!(n);
        }
        if self.upper_bound {
            v["upper_bound"] = json!(true);
        }
        v
    }

    /// One row per `(y, exponent, coefficient)`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("y\tweight\texponent\tcoefficient\n");
        for e in &self.entries {
            let w = e.weight.as_ref().map(|w| w.to_string()).unwrap_or_default();
            for (k, c) in e.poly.terms() {
                out.push_str(&format!("{}\t{}\t{}\t{}\n", e.y, w, k, c));
            }
        }
        out
    }
}

impl fmt::Display for MultiplicityPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} {} I={:?} J={:?} x=\"{}\"",
            self.setting.name(),
            self.kind.name(),
            self.system,
            self.i,
            self.j,
            self.x
        )?;
        for e in &self.entries {
            match &e.weight {
                Some(w) => writeln!(f, "  y=\"{}\" [{}]: {}", e.y, w, e.poly)?,
                None => writeln!(f, "  y=\"{}\": {}", e.y, e.poly)?,
            }
        }
        if let Ok(d) = self.filtration_dims() {
            writeln!(f, "  dims: nabla={} delta={}", d.nabla, d.delta)?;
        }
        if let Some(n) = self.truncated_at {
            writeln!(f, "  truncated at {n}")?;
        }
        if self.upper_bound {
            writeln!(f, "  upper bound")?;
        }
        Ok(())
    }
}

/// Parabolic data `(I, J)` with the twists used by all theorem formulas.
///
/// Elements are handled through their regular double coset representative
/// `x' in ^J W^I_reg`; the user-facing index is `w_J x'` (category O, negative
/// level, quantum with `J = S`) or `x' w_I` (positive level).
pub struct Formulas<'a> {
    eng: &'a KlEngine,
    i: Vec<u8>,
    j: Vec<u8>,
    wi: CoxeterElement,
    wj: CoxeterElement,
    m: Family,
    n: Family,
    /// Evaluate the positive-level simple formula with its printed z-free factor.
    pub literal_positive: bool,
}

impl<'a> Formulas<'a> {
    pub fn new(eng: &'a KlEngine, i: &[u8], j: &[u8]) -> Result<Self> {
        let sys = eng.sys();
        let mut i = i.to_vec();
        i.sort_unstable();
        i.dedup();
        let mut j = j.to_vec();
        j.sort_unstable();
        j.dedup();
        for &g in i.iter().chain(&j) {
            if g as usize >= sys.rank() {
                return Err(Error::InvalidGenerator(g as i64));
            }
        }
        if sys.is_affine() && (i.len() == sys.rank() || j.len() == sys.rank()) {
            return Err(Error::Validation("I and J must be proper subsets".into()));
        }
        let wi = sys.longest_element(&i)?;
        let wj = sys.longest_element(&j)?;
        Ok(Self {
            eng,
            m: Family::M(i.clone()),
            n: Family::N(i.clone()),
            i,
            j,
            wi,
            wj,
            literal_positive: false,
        })
    }

    pub fn sys(&self) -> &CoxeterSystem {
        self.eng.sys()
    }

    pub fn i(&self) -> &[u8] {
        &self.i
    }

    pub fn j(&self) -> &[u8] {
        &self.j
    }

    fn is_rep(&self, x: &CoxeterElement) -> bool {
        self.sys().is_regular_double_coset_rep(x, &self.j, &self.i)
    }

    /// `x' = w_J x` for `x in w_J ^J W^I_reg`.
    pub fn neg_rep(&self, x: &CoxeterElement) -> Result<CoxeterElement> {
        let r = self.sys().mul(&self.wj, x);
        if !self.is_rep(&r) {
            return Err(Error::Validation(format!(
                "\"{}\" is not in w_J ^J W^I_reg",
                self.sys().format_word(x)
            )));
        }
        Ok(r)
    }

    /// `x' = x w_I` for `x in ^J W^I_reg w_I`.
    pub fn pos_rep(&self, x: &CoxeterElement) -> Result<CoxeterElement> {
        let r = self.sys().mul(x, &self.wi);
        if !self.is_rep(&r) {
            return Err(Error::Validation(format!(
                "\"{}\" is not in ^J W^I_reg w_I",
                self.sys().format_word(x)
            )));
        }
        Ok(r)
    }

    pub fn plain_rep(&self, x: &CoxeterElement) -> Result<CoxeterElement> {
        if !self.is_rep(x) {
            return Err(Error::Validation(format!(
                "\"{}\" is not in ^J W^I_reg",
                self.sys().format_word(x)
            )));
        }
        Ok(x.clone())
    }

    fn inv(&self, x: &CoxeterElement) -> CoxeterElement {
        self.sys().inverse(x)
    }

    fn index(&self, x: &CoxeterElement) -> Result<CoxeterElement> {
        if !self.sys().is_minimal(x, &self.i, Side::Left) {
            return Err(Error::Internal(format!(
                "twisted index \"{}\" is not minimal in W_I x",
                self.sys().format_word(x)
            )));
        }
        Ok(x.clone())
    }

    fn m_inv(&self, a: &CoxeterElement, b: &CoxeterElement) -> Result<LaurentPoly> {
        let a = self.index(a)?;
        let b = self.index(b)?;
        self.eng.inverse_poly(&self.m, &a, &b, a.len())
    }

    fn n_dir(&self, a: &CoxeterElement, b: &CoxeterElement) -> Result<LaurentPoly> {
        let a = self.index(a)?;
        let b = self.index(b)?;
        self.eng.direct_poly(&self.n, &a, &b)
    }

    fn reps_below(&self, x: &CoxeterElement) -> Vec<CoxeterElement> {
        self.sys()
            .enumerate_below(x)
            .into_iter()
            .filter(|z| self.is_rep(z))
            .collect()
    }

    /// `m_I^{x'^-1, y'^-1}` on representatives.
    pub fn neg_standard_rep(&self, x: &CoxeterElement, y: &CoxeterElement) -> Result<LaurentPoly> {
        self.m_inv(&self.inv(x), &self.inv(y))
    }

    /// `sum_{z'} bar(n^I_{z'^-1 w_J, x'^-1 w_J}) m_I^{z'^-1, y'^-1}` on representatives.
    pub fn neg_simple_rep(&self, x: &CoxeterElement, y: &CoxeterElement) -> Result<LaurentPoly> {
        let sys = self.sys();
        let xa = sys.mul(&self.inv(x), &self.wj);
        let mut acc = LaurentPoly::zero();
        for z in self.reps_below(x) {
            let zi = self.inv(&z);
            let a = self.n_dir(&sys.mul(&zi, &self.wj), &xa)?;
            if a.is_zero() {
                continue;
            }
            let b = self.m_inv(&zi, &self.inv(y))?;
            acc += &(&a.bar() * &b);
        }
        Ok(acc)
    }

    /// The `n^I` form at `w_0`-twisted indices; finite systems only.
    pub fn neg_standard_rep_via_n(
        &self,
        x: &CoxeterElement,
        y: &CoxeterElement,
    ) -> Result<LaurentPoly> {
        let sys = self.sys();
        let w0 = sys.longest()?;
        let a = sys.mul(&sys.mul(&self.wi, &self.inv(x)), &w0);
        let b = sys.mul(&sys.mul(&self.wi, &self.inv(y)), &w0);
        self.n_dir(&a, &b)
    }

    /// `n^I_{x'^-1 w_J, y'^-1 w_J}` on representatives.
    pub fn pos_standard_rep(&self, x: &CoxeterElement, y: &CoxeterElement) -> Result<LaurentPoly> {
        let sys = self.sys();
        self.n_dir(
            &sys.mul(&self.inv(x), &self.wj),
            &sys.mul(&self.inv(y), &self.wj),
        )
    }

    /// Positive-level simple formula on representatives; `z'` runs over `x' <= z' <= y'`
    /// unless `literal_positive` is set, in which case it runs over all
    /// representatives of length at most `bound`.
    pub fn pos_simple_rep(
        &self,
        x: &CoxeterElement,
        y: &CoxeterElement,
        bound: usize,
    ) -> Result<LaurentPoly> {
        let sys = self.sys();
        let xi = self.inv(x);
        let mut acc = LaurentPoly::zero();
        if self.literal_positive {
            let fixed = self.pos_standard_rep(x, y)?;
            if fixed.is_zero() {
                return Ok(fixed);
            }
            let reps = sys
                .regular_double_coset_reps(&self.j, &self.i, bound)
                .elements;
            for z in reps {
                let a = self.m_inv(&self.inv(&z), &xi)?;
                acc += &(&a.bar() * &fixed);
            }
            return Ok(acc);
        }
        for z in self.reps_below(y) {
            if !sys.bruhat_leq(x, &z) {
                continue;
            }
            let a = self.m_inv(&self.inv(&z), &xi)?;
            if a.is_zero() {
                continue;
            }
            let b = self.pos_standard_rep(&z, y)?;
            acc += &(&a.bar() * &b);
        }
        Ok(acc)
    }
}

fn describe(sys: &CoxeterSystem, set: &[u8]) -> Vec<usize> {
    sys.format_subset(set)
}

/// Shared driver for single entries and whole tables.
pub struct Query<'a> {
    pub f: Formulas<'a>,
    pub setting: Setting,
    pub kind: Kind,
    /// Enumeration bound for infinite index sets.
    pub max_len: usize,
    /// Base weight and dilation for the weight column, if known.
    pub weights: Option<WeightData<'a>>,
}

pub enum WeightData<'a> {
    Finite(Weight),
    Quantum(&'a LinkageDatum, Weight),
}

impl<'a> Query<'a> {
    pub fn new(f: Formulas<'a>, setting: Setting, kind: Kind, max_len: usize) -> Self {
        Self {
            f,
            setting,
            kind,
            max_len,
            weights: None,
        }
    }

    fn sys(&self) -> &CoxeterSystem {
        self.f.sys()
    }

    /// Representative of a user-facing index.
    pub fn rep(&self, x: &CoxeterElement) -> Result<CoxeterElement> {
        match self.setting {
            Setting::O | Setting::KmNeg => self.f.neg_rep(x),
            Setting::KmPos => self.f.pos_rep(x),
            Setting::Quantum | Setting::Generic => self.f.plain_rep(x),
        }
    }

    /// User-facing index of a representative.
    pub fn unrep(&self, r: &CoxeterElement) -> CoxeterElement {
        let sys = self.sys();
        match self.setting {
            Setting::O | Setting::KmNeg => sys.mul(&self.f.wj, r),
            Setting::KmPos => sys.mul(r, &self.f.wi),
            Setting::Quantum | Setting::Generic => r.clone(),
        }
    }

    fn weight_of(&self, y: &CoxeterElement) -> Option<Weight> {
        match &self.weights {
            None => None,
            Some(WeightData::Finite(l)) => Some(self.sys().root_system().dot(self.sys(), y, l)),
            Some(WeightData::Quantum(d, l)) => Some(d.dot(y, l)),
        }
    }

    fn bound_for(&self, x: &CoxeterElement) -> Result<()> {
        if self.sys().is_affine() && self.max_len < x.len() {
            return Err(Error::Validation(format!(
                "max length {} is smaller than l(x) = {}",
                self.max_len,
                x.len()
            )));
        }
        Ok(())
    }

    /// One entry, on user-facing indices.
    pub fn entry(&self, x: &CoxeterElement, y: &CoxeterElement) -> Result<LaurentPoly> {
        self.bound_for(x)?;
        let xr = self.rep(x)?;
        let yr = self.rep(y)?;
        self.entry_rep(&xr, &yr)
    }

    fn entry_rep(&self, xr: &CoxeterElement, yr: &CoxeterElement) -> Result<LaurentPoly> {
        match (self.setting, self.kind) {
            (Setting::KmPos, Kind::Standard) => self.f.pos_standard_rep(xr, yr),
            (Setting::KmPos, Kind::Simple) => self.f.pos_simple_rep(xr, yr, self.max_len),
            (_, Kind::Standard) => {
                let a = self.f.neg_standard_rep(xr, yr)?;
                if self.setting == Setting::O && !self.sys().is_affine() {
                    let b = self.f.neg_standard_rep_via_n(xr, yr)?;
                    if a != b {
                        return Err(Error::Internal(format!(
                            "standard multiplicity forms disagree: {a} vs {b}"
                        )));
                    }
                }
                Ok(a)
            }
            (_, Kind::Simple) => self.f.neg_simple_rep(xr, yr),
        }
    }

    /// Representatives that can carry a nonzero entry for `x'`.
    fn candidate_reps(&self, xr: &CoxeterElement) -> (Vec<CoxeterElement>, Option<usize>) {
        let sys = self.sys();
        match self.setting {
            Setting::KmPos => {
                let e = sys.regular_double_coset_reps(&self.f.j, &self.f.i, self.max_len);
                let els = e
                    .elements
                    .into_iter()
                    .filter(|y| sys.bruhat_leq(xr, y))
                    .collect();
                (els, e.truncated.then_some(self.max_len))
            }
            _ => (self.f.reps_below(xr), None),
        }
    }

    /// Full table over `y` for a fixed `x`, computed in parallel over `y`.
    pub fn table(&self, x: &CoxeterElement) -> Result<MultiplicityPoly> {
        self.bound_for(x)?;
        let xr = self.rep(x)?;
        let (cands, truncated_at) = self.candidate_reps(&xr);
        let vals: Vec<Result<LaurentPoly>> = par::map(&cands, |yr| self.entry_rep(&xr, yr));
        let sys = self.sys();
        let mut entries = vec![];
        for (yr, val) in cands.iter().zip(vals) {
            let p = val?;
            if p.is_zero() {
                continue;
            }
            let y = self.unrep(yr);
            let ok = match self.setting {
                Setting::KmPos => sys.bruhat_leq(x, &y),
                _ => sys.bruhat_leq(&y, x),
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "support violated at y = \"{}\"",
                    sys.format_word(&y)
                )));
            }
            entries.push((y, p));
        }
        entries.sort();
        let lit =
            self.setting == Setting::KmPos && self.kind == Kind::Simple && self.f.literal_positive;
        let out = MultiplicityPoly {
            setting: self.setting,
            kind: self.kind,
            system: sys.name().to_string(),
            i: describe(sys, &self.f.i),
            j: describe(sys, &self.f.j),
            x: sys.format_word(x),
            x_len: x.len(),
            x_weight: self.weight_of(x),
            entries: entries
                .into_iter()
                .map(|(y, p)| MultEntry {
                    y: sys.format_word(&y),
                    y_len: y.len(),
                    weight: self.weight_of(&y),
                    poly: p,
                })
                .collect(),
            truncated_at: truncated_at.or(lit.then_some(self.max_len)),
            upper_bound: false,
        };
        if !lit {
            out.check_invariants()?;
        }
        Ok(out)
    }
}

pub fn cmin_standard_o(
    eng: &KlEngine,
    i: &[u8],
    j: &[u8],
    x: &CoxeterElement,
    y: &CoxeterElement,
) -> Result<LaurentPoly> {
    Query::new(
        Formulas::new(eng, i, j)?,
        Setting::O,
        Kind::Standard,
        usize::MAX,
    )
    .entry(x, y)
}

pub fn cmin_simple_o(
    eng: &KlEngine,
    i: &[u8],
    j: &[u8],
    x: &CoxeterElement,
    y: &CoxeterElement,
) -> Result<LaurentPoly> {
    Query::new(
        Formulas::new(eng, i, j)?,
        Setting::O,
        Kind::Simple,
        usize::MAX,
    )
    .entry(x, y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Negative,
    Positive,
}

pub fn cmin_standard_km(
    eng: &KlEngine,
    i: &[u8],
    j: &[u8],
    x: &CoxeterElement,
    y: &CoxeterElement,
    level: Level,
    max_len: usize,
) -> Result<LaurentPoly> {
    let setting = match level {
        Level::Negative => Setting::KmNeg,
        Level::Positive => Setting::KmPos,
    };
    Query::new(Formulas::new(eng, i, j)?, setting, Kind::Standard, max_len).entry(x, y)
}

pub fn cmin_simple_km(
    eng: &KlEngine,
    i: &[u8],
    j: &[u8],
    x: &CoxeterElement,
    y: &CoxeterElement,
    level: Level,
    max_len: usize,
) -> Result<LaurentPoly> {
    let setting = match level {
        Level::Negative => Setting::KmNeg,
        Level::Positive => Setting::KmPos,
    };
    Query::new(Formulas::new(eng, i, j)?, setting, Kind::Simple, max_len).entry(x, y)
}

/// A regular-or-singular quantum block: base weight in the closed alcove and its stabilizer.
pub struct QuantumBlock<'a> {
    pub datum: &'a LinkageDatum,
    pub lambda0: Weight,
    pub i: Vec<u8>,
}

impl<'a> QuantumBlock<'a> {
    /// Normalizes a weight; returns the block and the element `x` with `x ._r lambda0 = lambda`.
    pub fn from_weight(datum: &'a LinkageDatum, lambda: &Weight) -> Result<(Self, CoxeterElement)> {
        let (x, l0, i) = datum.alcove_normalize(lambda)?;
        Ok((
            Self {
                datum,
                lambda0: l0,
                i,
            },
            x,
        ))
    }

    pub fn query(&self, eng: &'a KlEngine, kind: Kind, max_len: usize) -> Result<Query<'a>> {
        if eng.sys().name() != self.datum.system().name() {
            return Err(Error::Validation(
                "engine does not match the linkage datum".into(),
            ));
        }
        let f = Formulas::new(eng, &self.i, &eng.sys().finite_generators())?;
        let mut q = Query::new(f, Setting::Quantum, kind, max_len);
        q.weights = Some(WeightData::Quantum(self.datum, self.lambda0.clone()));
        Ok(q)
    }
}

pub fn cmin_standard_quantum(
    eng: &KlEngine,
    block: &QuantumBlock<'_>,
    x: &CoxeterElement,
    max_len: usize,
) -> Result<MultiplicityPoly> {
    block.query(eng, Kind::Standard, max_len)?.table(x)
}

pub fn cmin_simple_quantum(
    eng: &KlEngine,
    block: &QuantumBlock<'_>,
    x: &CoxeterElement,
    max_len: usize,
) -> Result<MultiplicityPoly> {
    block.query(eng, Kind::Simple, max_len)?.table(x)
}

/// Ext-dimension data for the convolution formula, over labels `L`.
#[derive(Clone, Debug)]
pub struct ParityData<L: Ord + Clone> {
    pub lambda: L,
    /// `nu -> p_{nu, lambda}`
    pub p: BTreeMap<L, LaurentPoly>,
    /// `(nu, mu) -> p'_{nu, mu}`
    pub p_prime: BTreeMap<(L, L), LaurentPoly>,
    pub length: BTreeMap<L, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convolution {
    pub value: LaurentPoly,
    /// The parity hypothesis failed; the value only bounds the multiplicities.
    pub upper_bound: bool,
}

impl<L: Ord + Clone> ParityData<L> {
    fn len_of(&self, l: &L) -> i64 {
        self.length.get(l).copied().unwrap_or(0)
    }

    pub fn parity_holds(&self) -> bool {
        let ll = self.len_of(&self.lambda);
        let p_ok = self
            .p
            .iter()
            .all(|(nu, q)| q.support_query(ll - self.len_of(nu)));
        let pp_ok = self
            .p_prime
            .iter()
            .all(|((nu, mu), q)| q.support_query(self.len_of(mu) - self.len_of(nu)));
        p_ok && pp_ok
    }

    /// `sum_nu bar(p_{nu,lambda}) p'_{nu,mu}`.
    pub fn convolution(&self, mu: &L) -> Convolution {
        let mut acc = LaurentPoly::zero();
        for (nu, p) in &self.p {
            if let Some(pp) = self.p_prime.get(&(nu.clone(), mu.clone())) {
                acc += &(&p.bar() * pp);
            }
        }
        Convolution {
            value: acc,
            upper_bound: !self.parity_holds(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;
    use crate::rootdata::CartanType;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn category_o_examples() {
        let sys = CoxeterSystem::from_type("A1").unwrap();
        let eng = KlEngine::new(sys.clone());
        let s = sys.generator(0);
        let e = sys.identity();
        assert_eq!(cmin_standard_o(&eng, &[], &[], &s, &s).unwrap(), p("1"));
        assert_eq!(cmin_standard_o(&eng, &[], &[], &s, &e).unwrap(), p("v"));
        assert_eq!(
            cmin_simple_o(&eng, &[], &[], &s, &e).unwrap(),
            p("v^-1 + v")
        );
        assert_eq!(cmin_simple_o(&eng, &[], &[], &e, &e).unwrap(), p("1"));
        assert!(cmin_simple_o(&eng, &[], &[], &e, &s).unwrap().is_zero());
        let sys = CoxeterSystem::from_type("A2").unwrap();
        let eng = KlEngine::new(sys.clone());
        let w0 = sys.longest().unwrap();
        assert_eq!(
            cmin_standard_o(&eng, &[], &[], &w0, &sys.identity()).unwrap(),
            p("v^3")
        );
        let s1 = sys.generator(0);
        assert_eq!(cmin_simple_o(&eng, &[], &[], &s1, &s1).unwrap(), p("1"));
        // J = {1}: x must lie in w_J ^J W
        assert!(cmin_standard_o(&eng, &[], &[0], &sys.identity(), &sys.identity()).is_err());
    }

    #[test]
    fn simple_matches_intro_sum() {
        for t in ["A2", "A3", "B2"] {
            let sys = CoxeterSystem::from_type(t).unwrap();
            let eng = KlEngine::new(sys.clone());
            let all = sys.elements_up_to(20).elements;
            for x in &all {
                for y in &all {
                    let mut direct = LaurentPoly::zero();
                    for z in &all {
                        let a = eng.kl_poly(z, x);
                        let b = eng.inverse_poly(&Family::H, z, y, z.len()).unwrap();
                        direct += &(&a.bar() * &b);
                    }
                    assert_eq!(cmin_simple_o(&eng, &[], &[], x, y).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn km_examples() {
        let sys = CoxeterSystem::from_type("affA1").unwrap();
        let eng = KlEngine::new(sys.clone());
        let w = |s: &str| sys.parse_word(s).unwrap();
        let x = w("0 1");
        assert_eq!(
            cmin_standard_km(&eng, &[], &[], &x, &w("0"), Level::Negative, 6).unwrap(),
            p("v")
        );
        let s1 = w("1");
        assert_eq!(
            cmin_standard_km(&eng, &[], &[1], &s1, &s1, Level::Negative, 6).unwrap(),
            p("1")
        );
        for lvl in [Level::Negative, Level::Positive] {
            assert_eq!(
                cmin_simple_km(&eng, &[], &[], &x, &x, lvl, 6).unwrap(),
                p("1")
            );
        }
        assert!(cmin_standard_km(&eng, &[], &[], &w("0 1 0"), &w(""), Level::Negative, 2).is_err());
        // positive level support is reversed
        assert_eq!(
            cmin_standard_km(&eng, &[], &[], &w("0"), &w("0 1"), Level::Positive, 6).unwrap(),
            p("v")
        );
        assert!(
            cmin_standard_km(&eng, &[], &[], &w("0 1"), &w("0"), Level::Positive, 6)
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn positive_literal_flag_breaks_diagonal() {
        let sys = CoxeterSystem::from_type("affA1").unwrap();
        let eng = KlEngine::new(sys.clone());
        let mut f = Formulas::new(&eng, &[], &[]).unwrap();
        f.literal_positive = true;
        let x = sys.parse_word("0").unwrap();
        let q = Query::new(f, Setting::KmPos, Kind::Simple, 4);
        let d = q.entry(&x, &x).unwrap();
        assert!(!d.is_one());
    }

    #[test]
    fn quantum_examples() {
        let d = LinkageDatum::new(CartanType::new('A', 1).unwrap(), 5).unwrap();
        let eng = KlEngine::new(d.system().clone());
        let sys = d.system().clone();
        let (block, x) = QuantumBlock::from_weight(&d, &Weight(vec![7])).unwrap();
        assert_eq!(sys.format_word(&x), "0");
        let t = cmin_simple_quantum(&eng, &block, &x, 6).unwrap();
        assert_eq!(t.get("").unwrap(), &p("v^-1 + v"));
        assert_eq!(t.get("0").unwrap(), &p("1"));
        assert_eq!(t.entries[0].weight, Some(Weight(vec![1])));
        assert_eq!(t.x_weight, Some(Weight(vec![7])));
        let x = sys.parse_word("0 1 0").unwrap();
        let t = cmin_standard_quantum(&eng, &block, &x, 6).unwrap();
        let got: Vec<(String, String)> = t
            .entries
            .iter()
            .map(|e| (e.y.clone(), e.poly.to_string()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("".into(), "v^3".into()),
                ("0".into(), "v^2".into()),
                ("0 1".into(), "v".into()),
                ("0 1 0".into(), "1".into())
            ]
        );
        assert_eq!(t.filtration_dims().unwrap().nabla, 3);
    }

    #[test]
    fn filtration_dims_examples() {
        let sys = CoxeterSystem::from_type("A1").unwrap();
        let eng = KlEngine::new(sys.clone());
        let s = sys.generator(0);
        let std = Query::new(
            Formulas::new(&eng, &[], &[]).unwrap(),
            Setting::O,
            Kind::Standard,
            0,
        )
        .table(&s)
        .unwrap();
        let d = std.filtration_dims().unwrap();
        assert_eq!((d.nabla, d.delta, d.has_delta_filtration), (1, 0, true));
        let sim = Query::new(
            Formulas::new(&eng, &[], &[]).unwrap(),
            Setting::O,
            Kind::Simple,
            0,
        )
        .table(&s)
        .unwrap();
        let d = sim.filtration_dims().unwrap();
        assert_eq!((d.nabla, d.delta, d.has_delta_filtration), (1, 1, false));
        let mut tilt = std.clone();
        tilt.entries.retain(|e| e.y == tilt.x);
        let d = tilt.filtration_dims().unwrap();
        assert_eq!((d.nabla, d.delta), (0, 0));
        tilt.entries.clear();
        assert!(tilt.filtration_dims().is_err());
    }

    #[test]
    fn convolution_examples() {
        let mut data = ParityData {
            lambda: "s".to_string(),
            p: BTreeMap::from([("e".to_string(), p("v")), ("s".to_string(), p("1"))]),
            p_prime: BTreeMap::from([
                (("e".to_string(), "e".to_string()), p("1")),
                (("s".to_string(), "e".to_string()), p("v")),
                (("s".to_string(), "s".to_string()), p("1")),
            ]),
            length: BTreeMap::from([("e".to_string(), 0), ("s".to_string(), 1)]),
        };
        let c = data.convolution(&"e".to_string());
        assert_eq!(c.value, p("v^-1 + v"));
        assert!(!c.upper_bound);
        data.p.insert("e".to_string(), p("1"));
        let c = data.convolution(&"e".to_string());
        assert!(c.upper_bound);
        let diag = ParityData {
            lambda: 0,
            p: BTreeMap::from([(0, p("1"))]),
            p_prime: BTreeMap::from([((0, 0), p("1"))]),
            length: BTreeMap::new(),
        };
        assert_eq!(diag.convolution(&0).value, p("1"));
    }
}
