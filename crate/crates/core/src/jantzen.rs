//! Jantzen filtrations of hermitian families `t ↦ G(t)` at a point `t₀`.
//!
//! The family is brought to diagonal form by congruences whose matrices are
//! regular and invertible at `t₀`; the diagonal entries then have the shape
//! `u_i(t)(t - t₀)^{n_i}` with `u_i(t₀) ≠ 0`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{fmt_q, qf, qser, sign, QMatrix, RatFun, RatMatrix, UniPoly, Q};
use crate::modforms::GramFamily;

/// One diagonal entry after reduction.
#[derive(Clone, Debug, Serialize)]
pub struct DiagonalEntry {
    pub order: usize,
    pub sign: i32,
    /// Column of the reducing transformation, in the input basis.
    pub vector: Vec<RatFun>,
    pub pivot: RatFun,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
}

impl Signature {
    pub fn new(pos: usize, neg: usize) -> Self {
        Signature { pos, neg }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SideSignatures {
    #[serde(with = "qser")]
    pub delta: Q,
    pub minus: Signature,
    pub plus: Signature,
}

#[derive(Clone, Debug, Serialize)]
pub struct JantzenReport {
    #[serde(with = "qser")]
    pub t0: Q,
    pub basis: Vec<String>,
    pub diagonal: Vec<DiagonalEntry>,
    /// `dim E_n` for `n = 0, 1, …`.
    pub filtration_dims: Vec<usize>,
    /// `dim E_n / E_{n+1}`.
    pub level_dims: Vec<usize>,
    pub level_signatures: Vec<Signature>,
    pub side_signatures: SideSignatures,
    pub bookkeeping_holds: bool,
}

fn min_order(a: &RatMatrix, from: usize, t0: &Q) -> Result<Option<(i64, usize, usize)>> {
    let n = a.rows();
    let mut best: Option<(i64, usize, usize)> = None;
    for i in from..n {
        for j in i..n {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let o = v.order_at(t0);
            // diagonal entries win ties
            let better = match best {
                None => true,
                Some((bo, bi, bj)) => o < bo || (o == bo && i == j && bi != bj),
            };
            if better {
                best = Some((o, i, j));
            }
        }
    }
    Ok(best)
}

fn swap_cols(m: &mut RatMatrix, i: usize, j: usize) {
    for r in 0..m.rows() {
        let tmp = m[(r, i)].clone();
        m[(r, i)] = m[(r, j)].clone();
        m[(r, j)] = tmp;
    }
}

fn swap(a: &mut RatMatrix, b: &mut RatMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap_rows(i, j);
    swap_cols(a, i, j);
    swap_cols(b, i, j);
}

/// `col_i ← col_i + c·col_j` and the matching row operation.
fn add_multiple(a: &mut RatMatrix, b: &mut RatMatrix, i: usize, j: usize, c: &RatFun) {
    let n = a.rows();
    for r in 0..n {
        let v = &a[(r, i)] + &(&a[(r, j)] * c);
        a[(r, i)] = v;
    }
    for r in 0..n {
        let v = &a[(i, r)] + &(&a[(j, r)] * c);
        a[(i, r)] = v;
    }
    for r in 0..b.rows() {
        let v = &b[(r, i)] + &(&b[(r, j)] * c);
        b[(r, i)] = v;
    }
}

/// Reduces `g` by congruences invertible at `t0`; returns the pivots and the
/// transformation `B` with `Bᵀ g B` diagonal.
pub fn reduce(g: &RatMatrix, t0: &Q) -> Result<(Vec<RatFun>, RatMatrix)> {
    if !g.is_symmetric() {
        return Err(Error::Invalid("Gram family is not symmetric".into()));
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut b = RatMatrix::identity(n);
    for k in 0..n {
        let Some((order, i, j)) = min_order(&a, k, t0)? else {
            return Err(Error::DegenerateFamily);
        };
        if order < 0 {
            return Err(Error::PoleAtPoint(fmt_q(t0)));
        }
        let p = if i == j {
            i
        } else {
            add_multiple(&mut a, &mut b, i, j, &RatFun::one());
            i
        };
        swap(&mut a, &mut b, k, p);
        let piv = a[(k, k)].clone();
        let inv = piv.inv()?;
        for m in k + 1..n {
            if a[(k, m)].is_zero() {
                continue;
            }
            let c = -(&a[(k, m)] * &inv);
            add_multiple(&mut a, &mut b, m, k, &c);
        }
    }
    Ok((a.diagonal(), b))
}

/// Signature `(p, q)` of a rational symmetric matrix.
pub fn signature_at(g: &RatMatrix, t: &Q) -> Result<Signature> {
    let m = g
        .eval(t)
        .ok_or_else(|| Error::PoleAtPoint(fmt_q(t)))?;
    let (p, q, z) = m.inertia();
    if z != 0 {
        return Err(Error::Singular);
    }
    Ok(Signature::new(p, q))
}

fn has_root_near(p: &UniPoly, t0: &Q, d: &Q) -> bool {
    let (_, rest) = p.split_root(t0);
    rest.count_roots_closed(&(t0 - d), &(t0 + d)) > 0
}

/// Largest `δ = 10⁻¹·2⁻ᵏ` such that no pivot has a zero or pole in
/// `[t₀-2δ, t₀+2δ]` other than `t₀`.
pub fn default_delta(pivots: &[RatFun], g: &RatMatrix, t0: &Q) -> Q {
    let mut d = qf(1, 10);
    for _ in 0..200 {
        let wide = &d * Q::from_integer(2.into());
        let clear = pivots
            .iter()
            .all(|f| !has_root_near(f.num(), t0, &wide) && !has_root_near(f.den(), t0, &wide));
        let defined = g.eval(&(t0 - &d)).is_some() && g.eval(&(t0 + &d)).is_some();
        if clear && defined {
            return d;
        }
        d /= Q::from_integer(2.into());
    }
    d
}

fn bookkeeping(levels: &[Signature], side: &SideSignatures) -> bool {
    let (mut dp, mut dq) = (0i64, 0i64);
    for (n, s) in levels.iter().enumerate() {
        if n % 2 == 1 {
            dp += s.pos as i64 - s.neg as i64;
            dq += s.neg as i64 - s.pos as i64;
        }
    }
    side.plus.pos as i64 == side.minus.pos as i64 + dp && side.plus.neg as i64 == side.minus.neg as i64 + dq
}

/// Jantzen data of a Gram family at `t0`.
pub fn dvr_diagonalize(g: &GramFamily, t0: &Q) -> Result<JantzenReport> {
    diagonalize_with(g, t0, None)
}

pub fn diagonalize_with(g: &GramFamily, t0: &Q, delta: Option<Q>) -> Result<JantzenReport> {
    let (pivots, b) = reduce(&g.entries, t0)?;
    let mut diagonal = Vec::with_capacity(pivots.len());
    for (k, p) in pivots.iter().enumerate() {
        let v = p.valuation(t0);
        let order = v.order.expect("pivot is nonzero") as usize;
        diagonal.push(DiagonalEntry {
            order,
            sign: v.sign,
            vector: b.column(k),
            pivot: p.clone(),
        });
    }
    let top = diagonal.iter().map(|d| d.order).max().unwrap_or(0);
    let mut level_dims = vec![0; top + 1];
    let mut level_signatures = vec![Signature::new(0, 0); top + 1];
    for d in &diagonal {
        level_dims[d.order] += 1;
        if d.sign > 0 {
            level_signatures[d.order].pos += 1;
        } else {
            level_signatures[d.order].neg += 1;
        }
    }
    let filtration_dims = (0..=top).map(|n| level_dims[n..].iter().sum()).collect();
    let delta = delta.unwrap_or_else(|| default_delta(&pivots, &g.entries, t0));
    let side_signatures = SideSignatures {
        minus: signature_at(&g.entries, &(t0 - &delta))?,
        plus: signature_at(&g.entries, &(t0 + &delta))?,
        delta,
    };
    let bookkeeping_holds = bookkeeping(&level_signatures, &side_signatures);
    Ok(JantzenReport {
        t0: t0.clone(),
        basis: g.basis.clone(),
        diagonal,
        filtration_dims,
        level_dims,
        level_signatures,
        side_signatures,
        bookkeeping_holds,
    })
}

impl JantzenReport {
    pub fn orders(&self) -> Vec<usize> {
        self.diagonal.iter().map(|d| d.order).collect()
    }

    pub fn signs(&self) -> Vec<i32> {
        self.diagonal.iter().map(|d| d.sign).collect()
    }

    pub fn signature_of_level(&self, n: usize) -> Signature {
        self.level_signatures.get(n).cloned().unwrap_or(Signature::new(0, 0))
    }

    /// `Σ_{n odd} (p_n − q_n)`.
    pub fn odd_level_defect(&self) -> i64 {
        self.level_signatures
            .iter()
            .enumerate()
            .filter(|(n, _)| n % 2 == 1)
            .map(|(_, s)| s.pos as i64 - s.neg as i64)
            .sum()
    }

    /// Transformation at `t₀`; its columns span the fibers `E_n`.
    pub fn basis_at_t0(&self) -> Result<QMatrix> {
        let cols = self
            .diagonal
            .iter()
            .map(|d| {
                d.vector
                    .iter()
                    .map(|f| f.eval(&self.t0).ok_or_else(|| Error::PoleAtPoint("transformation has a pole".into())))
                    .collect::<Result<Vec<Q>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QMatrix::from_columns(&cols))
    }

    /// Fiber of `E_n` at `t₀` as column vectors.
    pub fn level_space(&self, n: usize) -> Result<Vec<Vec<Q>>> {
        let b = self.basis_at_t0()?;
        Ok(self
            .diagonal
            .iter()
            .enumerate()
            .filter(|(_, d)| d.order >= n)
            .map(|(i, _)| b.column(i))
            .collect())
    }

    /// Level of a vector of the fiber at `t₀` and the sign of its norm
    /// under the level form (0 when isotropic there).
    pub fn vector_level(&self, v: &[Q]) -> Result<(usize, i32)> {
        let b = self.basis_at_t0()?;
        let c = b.solve(v)?;
        let level = c
            .iter()
            .zip(&self.diagonal)
            .filter(|(x, _)| !x.is_zero())
            .map(|(_, d)| d.order)
            .min()
            .ok_or_else(|| Error::Invalid("zero vector has no level".into()))?;
        let mut norm = Q::zero();
        for (x, d) in c.iter().zip(&self.diagonal) {
            if d.order == level && !x.is_zero() {
                let lead = d.pivot.valuation(&self.t0).coeff;
                norm += x * x * lead;
            }
        }
        Ok((level, sign(&norm)))
    }

    /// Checks that every `E_n` at `t₀` is stable under the given operators.
    pub fn filtration_is_stable(&self, ops: &[QMatrix]) -> Result<bool> {
        for n in 1..self.level_dims.len() {
            let space = self.level_space(n)?;
            if space.is_empty() {
                continue;
            }
            let span = QMatrix::from_columns(&space);
            let r = span.rank();
            for op in ops {
                for v in &space {
                    let w = op.mul_vec(v);
                    let mut cols = space.clone();
                    cols.push(w);
                    if QMatrix::from_columns(&cols).rank() != r {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let diag: Vec<serde_json::Value> = self
            .diagonal
            .iter()
            .map(|d| {
                serde_json::json!({
                    "order": d.order,
                    "sign": d.sign,
                    "pivot": d.pivot.to_text(),
                    "vector": d.vector.iter().map(RatFun::to_text).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "t0": fmt_q(&self.t0),
            "basis": self.basis,
            "orders": self.orders(),
            "signs": self.signs(),
            "diagonal": diag,
            "filtration_dims": self.filtration_dims,
            "level_dims": self.level_dims,
            "level_signatures": self.level_signatures.iter().map(|s| [s.pos, s.neg]).collect::<Vec<_>>(),
            "side_signatures": {
                "delta": fmt_q(&self.side_signatures.delta),
                "minus": [self.side_signatures.minus.pos, self.side_signatures.minus.neg],
                "plus": [self.side_signatures.plus.pos, self.side_signatures.plus.neg],
            },
            "bookkeeping_holds": self.bookkeeping_holds,
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("index\tbasis\torder\tsign\n");
        for (i, d) in self.diagonal.iter().enumerate() {
            let label = self.basis.get(i).map(String::as_str).unwrap_or("");
            out.push_str(&format!("{i}\t{label}\t{}\t{}\n", d.order, if d.sign > 0 { "+" } else { "-" }));
        }
        out.push_str("level\tdim\tpos\tneg\n");
        for (n, s) in self.level_signatures.iter().enumerate() {
            out.push_str(&format!("{n}\t{}\t{}\t{}\n", self.level_dims[n], s.pos, s.neg));
        }
        out
    }
}

/// Checks `p⁺ = p⁻ + Σ_{n odd}(p_n − q_n)` against exact signatures at `t₀ ± δ`.
pub fn verify_bookkeeping(report: &JantzenReport, g: &GramFamily, delta: &Q) -> Result<bool> {
    if !delta.is_positive() {
        return Err(Error::Invalid("delta must be positive".into()));
    }
    let side = SideSignatures {
        delta: delta.clone(),
        minus: signature_at(&g.entries, &(&report.t0 - delta))?,
        plus: signature_at(&g.entries, &(&report.t0 + delta))?,
    };
    Ok(bookkeeping(&report.level_signatures, &side))
}

/// Sign of the leading coefficient at `t₀` (`u(t₀)` for `u·(t−t₀)^n`).
pub fn unit_sign(f: &RatFun, t0: &Q) -> i32 {
    f.valuation(t0).sign
}

/// `1` and `-1` mapped to `+`/`-` for display.
pub fn sign_char(s: i32) -> char {
    if s > 0 {
        '+'
    } else if s < 0 {
        '-'
    } else {
        '0'
    }
}
