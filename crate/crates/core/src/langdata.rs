//! Weight combinatorics of the Langlands classification, temperedness,
//! level and orientation data at regular central character, and assembly of
//! hermitian Kazhdan–Lusztig polynomials from Jantzen data.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{dot, fmt_q_vec, q, QMatrix, Q};
use crate::jantzen::{dvr_diagonalize, JantzenReport};
use crate::modforms::{InducedDatum, InducedModule, Normalization};
use crate::rootsys::RootSystem;
use crate::weyl::{WeylElement, WeylGroup};

/// `v = Σ_{j∉F} c_j ω_j∨ − Σ_{i∈F} d_i α_i∨` with `c_j > 0`, `d_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LanglandsDatum {
    pub levi: Vec<usize>,
    #[serde(with = "crate::exactfield::qser::vec")]
    pub positive_part: Vec<Q>,
    /// `c_j` for `j ∉ F`, in increasing `j`.
    #[serde(with = "crate::exactfield::qser::vec")]
    pub c: Vec<Q>,
    /// `d_i` for `i ∈ F`, in increasing `i`.
    #[serde(with = "crate::exactfield::qser::vec")]
    pub d: Vec<Q>,
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |m| (0..n).filter(|i| m & (1 << i) != 0).collect())
}

/// Candidate decomposition for a fixed `F`, if the sign conditions hold.
fn try_decompose(rs: &RootSystem, v: &[Q], f: &[usize]) -> Result<Option<(Vec<Q>, Vec<Q>, Vec<Q>)>> {
    let n = rs.rank();
    let target = rs.coroot_coords(v)?;
    // basis columns in coroot coordinates: ω_j∨ for j ∉ F, −α_i∨ for i ∈ F
    let cols: Vec<Vec<Q>> = (0..n)
        .map(|k| {
            if f.contains(&k) {
                (0..n).map(|r| if r == k { q(-1) } else { q(0) }).collect()
            } else {
                rs.coroot_coords(&rs.fundamental_coweights()[k]).expect("coweight in span")
            }
        })
        .collect();
    let sol = QMatrix::from_columns(&cols).solve(&target)?;
    let ok = (0..n).all(|k| if f.contains(&k) { !sol[k].is_negative() } else { sol[k].is_positive() });
    if !ok {
        return Ok(None);
    }
    let mut pos = vec![q(0); rs.ambient_dim()];
    for k in (0..n).filter(|k| !f.contains(k)) {
        for (p, w) in pos.iter_mut().zip(&rs.fundamental_coweights()[k]) {
            *p += &sol[k] * w;
        }
    }
    let c = (0..n).filter(|k| !f.contains(k)).map(|k| sol[k].clone()).collect();
    let d = f.iter().map(|&k| sol[k].clone()).collect();
    Ok(Some((pos, c, d)))
}

/// All subsets `F` admitting a decomposition of `v` (exactly one for every `v`).
pub fn f_decompose_candidates(rs: &RootSystem, v: &[Q]) -> Result<Vec<LanglandsDatum>> {
    let mut out = vec![];
    for f in subsets(rs.rank()) {
        if let Some((pos, c, d)) = try_decompose(rs, v, &f)? {
            out.push(LanglandsDatum {
                c,
                d,
                levi: f,
                positive_part: pos,
            });
        }
    }
    Ok(out)
}

pub fn f_decompose(rs: &RootSystem, v: &[Q]) -> Result<LanglandsDatum> {
    let mut all = f_decompose_candidates(rs, v)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        n => Err(Error::Invalid(format!(
            "weight {} has {n} Langlands decompositions",
            fmt_q_vec(v)
        ))),
    }
}

/// `a ≥ b`: `a − b` is a nonnegative combination of simple coroots.
pub fn dominates(rs: &RootSystem, a: &[Q], b: &[Q]) -> Result<bool> {
    let diff: Vec<Q> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    Ok(rs.coroot_coords(&diff)?.iter().all(|c| !c.is_negative()))
}

/// `(ω_i, λ) ≤ 0` for every fundamental weight and every weight.
pub fn is_tempered(rs: &RootSystem, weights: &[Vec<Q>]) -> Result<bool> {
    for w in weights {
        if rs.coroot_coords(w)?.iter().any(|c| c.is_positive()) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_discrete_series(rs: &RootSystem, weights: &[Vec<Q>]) -> Result<bool> {
    for w in weights {
        if rs.coroot_coords(w)?.iter().any(|c| !c.is_negative()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `#{β > 0 : xβ < 0, (β, ν) = k_β}`.
pub fn tau(g: &WeylGroup, x: WeylElement, nu: &[Q]) -> usize {
    let rs = g.root_system();
    (0..rs.num_positive())
        .filter(|&b| !g.act_root(x, b).positive && rs.root_pairing(b, nu) == rs.positive_roots()[b].k)
        .count()
}

/// Number of simple roots sent to negative roots.
pub fn tau0(g: &WeylGroup, x: WeylElement) -> usize {
    let rs = g.root_system();
    (0..rs.rank())
        .filter(|&i| !g.act_root(x, rs.simple_root_index(i)).positive)
        .count()
}

/// `#{β > 0 : 0 < (β, s) < k_β, xβ < 0}`.
pub fn ell0(g: &WeylGroup, x: WeylElement, s: &[Q]) -> usize {
    let rs = g.root_system();
    (0..rs.num_positive())
        .filter(|&b| {
            let p = rs.root_pairing(b, s);
            p.is_positive() && p < rs.positive_roots()[b].k && !g.act_root(x, b).positive
        })
        .count()
}

pub fn orientation(g: &WeylGroup, x: WeylElement, s: &[Q]) -> i32 {
    if ell0(g, x, s) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Positive roots with `(β, s) = k_β`.
pub fn delta_s(rs: &RootSystem, s: &[Q]) -> Vec<usize> {
    (0..rs.num_positive())
        .filter(|&b| rs.root_pairing(b, s) == rs.positive_roots()[b].k)
        .collect()
}

fn check_regular(rs: &RootSystem, s: &[Q]) -> Result<()> {
    rs.coroot_coords(s)?;
    if !rs.is_dominant_regular(s) {
        return Err(Error::NotRegular(fmt_q_vec(s)));
    }
    Ok(())
}

/// Label of the constituent of `X(s)` containing the weight `x s`: the roots
/// of `Δ_s` made negative by `x`.
pub fn regular_cc_constituent(g: &WeylGroup, x: WeylElement, s: &[Q]) -> Result<Vec<usize>> {
    let rs = g.root_system();
    check_regular(rs, s)?;
    Ok(delta_s(rs, s)
        .into_iter()
        .filter(|&b| !g.act_root(x, b).positive)
        .collect())
}

/// Irreducible constituent at regular central character, located by its
/// leading weight `x s = −ρ_F + v⁰`.
#[derive(Clone, Debug, Serialize)]
pub struct RegularConstituent {
    /// Roots of `Δ_s` (positive root indices).
    pub subset: Vec<usize>,
    /// The same roots in simple-root coordinates.
    pub subset_labels: Vec<String>,
    pub leading: String,
    #[serde(with = "crate::exactfield::qser::vec")]
    pub weight: Vec<Q>,
    pub datum: LanglandsDatum,
    pub orientation: i32,
    /// Weights of the constituent, as Weyl group elements applied to `s`.
    pub members: Vec<String>,
}

/// Whether `μ = −ρ_F + v⁰` for its own Langlands datum.
fn is_leading(rs: &RootSystem, mu: &[Q], d: &LanglandsDatum) -> bool {
    let rho = rs.levi_k_rho(&d.levi);
    mu.iter().zip(&rho).zip(&d.positive_part).all(|((m, r), p)| &(m + r) == p)
}

pub fn regular_constituents(g: &WeylGroup, s: &[Q]) -> Result<Vec<RegularConstituent>> {
    let rs = g.root_system();
    check_regular(rs, s)?;
    let ds = delta_s(rs, s);
    let mut by_subset: BTreeMap<Vec<usize>, Vec<WeylElement>> = BTreeMap::new();
    for x in g.elements() {
        by_subset.entry(regular_cc_constituent(g, x, s)?).or_default().push(x);
    }
    let mut out = vec![];
    for (subset, members) in &by_subset {
        let mut leading = vec![];
        for &x in members {
            let mu = g.act_vector(x, s);
            let d = f_decompose(rs, &mu)?;
            if is_leading(rs, &mu, &d) {
                leading.push((x, mu, d));
            }
        }
        if leading.len() != 1 {
            return Err(Error::Invalid(format!(
                "constituent {:?} has {} leading weights",
                subset,
                leading.len()
            )));
        }
        let (x, mu, d) = leading.pop().unwrap();
        out.push(RegularConstituent {
            subset: subset.clone(),
            subset_labels: subset.iter().map(|&b| root_label(rs, b)).collect(),
            leading: g.format(x),
            weight: mu,
            datum: d,
            orientation: orientation(g, x, s),
            members: members.iter().map(|&m| g.format(m)).collect(),
        });
    }
    if out.len() != 1 << ds.len() {
        return Err(Error::Invalid(format!(
            "{} constituents found, expected 2^{}",
            out.len(),
            ds.len()
        )));
    }
    // rows ordered by size, then lexicographically
    out.sort_by(|a, b| (a.subset.len(), &a.subset).cmp(&(b.subset.len(), &b.subset)));
    Ok(out)
}

/// Weights `{x λ(t₀) : x ∈ 𝒥_M}` with multiplicities.
pub fn a_character(m: &InducedModule, t0: &Q) -> Vec<(Vec<Q>, usize)> {
    let lambda = m.weight_at(t0);
    let mut counts: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
    for &x in m.basis() {
        *counts.entry(m.group().act_vector(x, &lambda)).or_default() += 1;
    }
    counts.into_iter().collect()
}

/// Integer polynomial in `q`, coefficient `i` of `q^i`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct HklPoly {
    pub coeffs: Vec<i64>,
}

impl HklPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HklPoly { coeffs }
    }

    pub fn zero() -> Self {
        HklPoly::new(vec![])
    }

    pub fn constant(c: i64) -> Self {
        HklPoly::new(vec![c])
    }

    pub fn monomial(c: i64, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c;
        HklPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &HklPoly) -> HklPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        HklPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&0) + o.coeffs.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    pub fn scale(&self, c: i64) -> HklPoly {
        HklPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `P(−q)`.
    pub fn at_minus_q(&self) -> HklPoly {
        HklPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { *c })
                .collect(),
        )
    }

    pub fn parse(s: &str) -> Result<HklPoly> {
        let bad = || Error::Parse(format!("bad polynomial {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" {
            return Ok(HklPoly::zero());
        }
        let mut out = HklPoly::zero();
        let mut terms = vec![];
        let mut cur = String::new();
        for ch in t.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        for term in terms {
            let (sgn, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coef, exp) = match body.find('q') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(p) => {
                    let c = match &body[..p] {
                        "" => 1,
                        c => c.trim_end_matches('*').parse::<i64>().map_err(|_| bad())?,
                    };
                    let e = match body[p + 1..].strip_prefix('^') {
                        None if p + 1 == body.len() => 1,
                        None => return Err(bad()),
                        Some(e) => e.parse::<usize>().map_err(|_| bad())?,
                    };
                    (c, e)
                }
            };
            out = out.add(&HklPoly::monomial(sgn * coef, exp));
        }
        Ok(out)
    }
}

impl fmt::Display for HklPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (e, a) {
                (0, a) => a.to_string(),
                (1, 1) => "q".to_string(),
                (1, a) => format!("{a}q"),
                (e, 1) => format!("q^{e}"),
                (e, a) => format!("{a}q^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// One irreducible located at a Jantzen level, with its signed count `p_n − q_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelConstituent {
    pub level: usize,
    pub label: String,
    pub signed: i64,
}

/// `q^{(dim O′ − dim O − n)/2}` as a monomial; odd or negative exponents are
/// reported, not rounded.
pub fn level_monomial(row_dim: i64, col_dim: i64, level: usize, coeff: i64) -> Result<HklPoly> {
    let e = col_dim - row_dim - level as i64;
    if e < 0 || e % 2 != 0 {
        return Err(Error::Parity(format!(
            "dim difference {} at level {level} gives exponent {e}/2",
            col_dim - row_dim
        )));
    }
    Ok(HklPoly::monomial(coeff, (e / 2) as usize))
}

/// Sums the level contributions per label.
pub fn hkl_assemble(
    row_dim: i64,
    contributions: &[LevelConstituent],
    dims: &BTreeMap<String, i64>,
) -> Result<BTreeMap<String, HklPoly>> {
    let mut out: BTreeMap<String, HklPoly> = BTreeMap::new();
    for c in contributions {
        let d = *dims
            .get(&c.label)
            .ok_or_else(|| Error::Invalid(format!("no dimension for {}", c.label)))?;
        let m = level_monomial(row_dim, d, c.level, c.signed)?;
        let e = out.entry(c.label.clone()).or_default();
        *e = e.add(&m);
    }
    Ok(out)
}

/// `P^h` from a report whose levels are labelled whole: `labeling[i] = (n, L)`
/// attributes all of level `n` to `L`.
pub fn hkl_from_jantzen(
    report: &JantzenReport,
    labeling: &[(usize, String)],
    dims: &BTreeMap<String, i64>,
    row_dim: i64,
) -> Result<BTreeMap<String, HklPoly>> {
    let mut seen = vec![false; report.level_dims.len()];
    let mut contributions = vec![];
    for (n, label) in labeling {
        if *n >= report.level_dims.len() || report.level_dims[*n] == 0 {
            return Err(Error::Invalid(format!("level {n} is empty")));
        }
        if std::mem::replace(&mut seen[*n], true) {
            return Err(Error::Invalid(format!("level {n} labelled twice")));
        }
        let s = report.signature_of_level(*n);
        contributions.push(LevelConstituent {
            level: *n,
            label: label.clone(),
            signed: s.pos as i64 - s.neg as i64,
        });
    }
    if let Some(n) = (0..seen.len()).find(|&n| !seen[n] && report.level_dims[n] > 0) {
        return Err(Error::Invalid(format!("level {n} is not labelled")));
    }
    hkl_assemble(row_dim, &contributions, dims)
}

/// One entry of the regular-central-character table.
#[derive(Clone, Debug, Serialize)]
pub struct RegularEntry {
    pub row: usize,
    pub col: usize,
    pub kl: HklPoly,
    pub from_jantzen: HklPoly,
    pub from_orientation: HklPoly,
    pub level: Option<usize>,
    pub routes_agree: bool,
    pub identity_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularTable {
    pub group: String,
    #[serde(with = "crate::exactfield::qser::vec")]
    pub s: Vec<Q>,
    pub delta_s: Vec<String>,
    pub constituents: Vec<RegularConstituent>,
    pub entries: Vec<RegularEntry>,
    /// Level of every weight vector of the principal series equals `τ(x, s)`.
    pub levels_match_tau: bool,
    pub verdict: bool,
}

impl RegularTable {
    pub fn entry(&self, row: usize, col: usize) -> &RegularEntry {
        &self.entries[row * self.constituents.len() + col]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn to_tsv(&self) -> String {
        let name = |c: &RegularConstituent| format!("{{{}}}", c.subset_labels.join(","));
        let mut out = String::from("row\tcol\tP\tPh_jantzen\tPh_orientation\teps_row\teps_col\tholds\n");
        for e in &self.entries {
            let (r, c) = (&self.constituents[e.row], &self.constituents[e.col]);
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                name(r),
                name(c),
                e.kl,
                e.from_jantzen,
                e.from_orientation,
                r.orientation,
                c.orientation,
                e.identity_holds && e.routes_agree
            ));
        }
        out
    }
}

fn root_label(rs: &RootSystem, b: usize) -> String {
    let c = &rs.positive_roots()[b].coords;
    format!("[{}]", c.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

/// A linear form separating the weights of `W·s`.
fn separating_form(g: &WeylGroup, s: &[Q]) -> Result<Vec<Q>> {
    let rs = g.root_system();
    let orbit: Vec<Vec<Q>> = g.elements().map(|x| g.act_vector(x, s)).collect();
    for seed in 1..50i64 {
        let mut omega = vec![q(0); rs.ambient_dim()];
        for (i, a) in rs.simple_roots().iter().enumerate() {
            let c = q(seed.pow(i as u32 + 1) + 1);
            for (o, x) in omega.iter_mut().zip(a) {
                *o += &c * x;
            }
        }
        let mut vals: Vec<Q> = orbit.iter().map(|w| dot(&omega, w)).collect();
        vals.sort();
        if vals.windows(2).all(|w| w[0] != w[1]) {
            return Ok(omega);
        }
    }
    Err(Error::Invalid("no separating linear form found".into()))
}

/// Weight vector of weight `mu` in the fiber at `t0`, when `mu` occurs.
fn weight_vector(m: &InducedModule, omega: &[Q], t0: &Q, mu: &[Q]) -> Result<Option<Vec<Q>>> {
    let op = m
        .pi_omega(omega)
        .eval(t0)
        .ok_or_else(|| Error::PoleAtPoint(crate::exactfield::fmt_q(t0)))?;
    let shift = QMatrix::identity(m.dim()).scale(&dot(omega, mu));
    let ker = op.sub(&shift).nullspace();
    match ker.len() {
        0 => Ok(None),
        1 => Ok(ker.into_iter().next()),
        n => Err(Error::Invalid(format!("weight {} has multiplicity {n}", fmt_q_vec(mu)))),
    }
}

/// Standard module of a constituent, as a family through `t = 1`.
fn standard_module(g: &Arc<WeylGroup>, c: &RegularConstituent) -> Result<InducedModule> {
    let dim = g.root_system().ambient_dim();
    let datum = if c.datum.levi.is_empty() {
        InducedDatum::principal(vec![q(0); dim], c.datum.positive_part.clone())
    } else {
        InducedDatum::steinberg(c.datum.levi.clone(), vec![q(0); dim], c.datum.positive_part.clone())
    };
    InducedModule::new(g.clone(), &datum)
}

/// Hermitian KL table at a regular dominant `s` with `k ≡ 1`, computed by
/// Jantzen signatures and by orientation numbers.
pub fn hkl_regular(g: &Arc<WeylGroup>, s: &[Q]) -> Result<RegularTable> {
    let rs = g.root_system();
    check_regular(rs, s)?;
    if !rs.is_constant_k() {
        return Err(Error::Invalid("regular central character tables need k ≡ 1".into()));
    }
    let cs = regular_constituents(g, s)?;
    let omega = separating_form(g, s)?;
    let t0 = Q::one();
    let rows: Vec<(Vec<RegularEntry>, bool)> = cs
        .par_iter()
        .enumerate()
        .map(|(i, row)| -> Result<(Vec<RegularEntry>, bool)> {
            let m = standard_module(g, row)?;
            let gram = m.gram_family(&Normalization::IdentityVector)?;
            let report = dvr_diagonalize(&gram, &t0)?;
            let mut entries = vec![];
            for (j, col) in cs.iter().enumerate() {
                let contained = row.subset.iter().all(|b| col.subset.contains(b));
                let kl = HklPoly::constant(contained as i64);
                let from_orientation = kl.scale((row.orientation * col.orientation) as i64);
                let (level, from_jantzen) = match weight_vector(&m, &omega, &t0, &col.weight)? {
                    None => (None, HklPoly::zero()),
                    Some(v) => {
                        let (n, sign) = report.vector_level(&v)?;
                        let p = level_monomial(row.subset.len() as i64, col.subset.len() as i64, n, sign as i64)?;
                        (Some(n), p)
                    }
                };
                let routes_agree = from_jantzen == from_orientation;
                let identity_holds = from_jantzen
                    == kl.at_minus_q().scale((row.orientation * col.orientation) as i64);
                entries.push(RegularEntry {
                    row: i,
                    col: j,
                    kl,
                    from_jantzen,
                    from_orientation,
                    level,
                    routes_agree,
                    identity_holds,
                });
            }
            let levels_ok = if row.subset.is_empty() {
                levels_match_tau(g, &m, &report, &omega, s)?
            } else {
                true
            };
            Ok((entries, levels_ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let levels_match_tau = rows.iter().all(|r| r.1);
    let entries: Vec<RegularEntry> = rows.into_iter().flat_map(|r| r.0).collect();
    let verdict = levels_match_tau && entries.iter().all(|e| e.routes_agree && e.identity_holds);
    Ok(RegularTable {
        group: rs.label().to_string(),
        s: s.to_vec(),
        delta_s: delta_s(rs, s).into_iter().map(|b| root_label(rs, b)).collect(),
        constituents: cs,
        entries,
        levels_match_tau,
        verdict,
    })
}

/// Level of the weight vector of `x s` in the principal series through `s`
/// against `τ(x, s)`, for every `x`.
fn levels_match_tau(
    g: &WeylGroup,
    m: &InducedModule,
    report: &JantzenReport,
    omega: &[Q],
    s: &[Q],
) -> Result<bool> {
    let t0 = Q::one();
    for x in g.elements() {
        let mu = g.act_vector(x, s);
        let v = weight_vector(m, omega, &t0, &mu)?
            .ok_or_else(|| Error::Invalid(format!("weight {} missing", fmt_q_vec(&mu))))?;
        if report.vector_level(&v)?.0 != tau(g, x, s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Jantzen level of each weight vector `x s` of the principal series along `t·s`.
pub fn principal_levels(g: &Arc<WeylGroup>, s: &[Q]) -> Result<Vec<(WeylElement, usize, i32)>> {
    check_regular(g.root_system(), s)?;
    let dim = g.root_system().ambient_dim();
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0); dim], s.to_vec()))?;
    let report = dvr_diagonalize(&m.gram_family(&Normalization::IdentityVector)?, &Q::one())?;
    let omega = separating_form(g, s)?;
    g.elements()
        .map(|x| {
            let mu = g.act_vector(x, s);
            let v = weight_vector(&m, &omega, &Q::one(), &mu)?
                .ok_or_else(|| Error::Invalid(format!("weight {} missing", fmt_q_vec(&mu))))?;
            let (n, sign) = report.vector_level(&v)?;
            Ok((x, n, sign))
        })
        .collect()
}

#[cfg(test)]
mod tests;
