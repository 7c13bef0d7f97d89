//! Modules induced from one-dimensional characters of parabolic
//! subalgebras, their explicit actions and the •-invariant hermitian form
//! as an exact one-parameter family.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{dot, fmt_q_vec, q, MPoly, QMatrix, RatFun, RatMatrix, UniPoly, Q};
use crate::heckealg::{HeckeAlgebra, HeckeElement, PolyRing};
use crate::weyl::{WeylElement, WeylGroup};

/// The one-dimensional tempered part of σ on `H_M`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SigmaKind {
    /// `t_m ↦ 1`, `(α, λ) = k_α` on `Π_M`.
    Trivial,
    /// `t_m ↦ (-1)^ℓ(m)`, `(α, λ) = -k_α` on `Π_M`.
    Steinberg,
}

impl SigmaKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "triv" | "trivial" => Ok(SigmaKind::Trivial),
            "st" | "steinberg" => Ok(SigmaKind::Steinberg),
            _ => Err(Error::Parse(format!("unknown sigma {s:?} (expected triv or st)"))),
        }
    }
}

/// Induction datum `X(M, σ ⊗ ν(t))` with `ν(t) = ν₀ + t·d` orthogonal to `Π_M`.
#[derive(Clone, Debug)]
pub struct InducedDatum {
    pub levi: Vec<usize>,
    pub sigma: SigmaKind,
    pub nu0: Vec<Q>,
    pub dir: Vec<Q>,
}

impl InducedDatum {
    /// Minimal principal series along `ν₀ + t·d`.
    pub fn principal(nu0: Vec<Q>, dir: Vec<Q>) -> Self {
        InducedDatum {
            levi: vec![],
            sigma: SigmaKind::Trivial,
            nu0,
            dir,
        }
    }

    /// `Ind(St_M ⊗ ν(t))`.
    pub fn steinberg(levi: Vec<usize>, nu0: Vec<Q>, dir: Vec<Q>) -> Self {
        InducedDatum {
            levi,
            sigma: SigmaKind::Steinberg,
            nu0,
            dir,
        }
    }
}

/// Which basis a Gram family is written in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisKind {
    T,
    R,
}

/// A symmetric matrix over ℚ(t) with basis labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GramFamily {
    pub basis: Vec<String>,
    pub kind: BasisKind,
    pub entries: RatMatrix,
}

#[derive(Serialize)]
struct GramJson<'a> {
    basis: &'a [String],
    kind: BasisKind,
    /// Coefficient lists, lowest degree first.
    entries: Vec<Vec<RatFun>>,
    text: Vec<Vec<String>>,
}

impl GramFamily {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GramJson {
            basis: &self.basis,
            kind: self.kind,
            entries: self.entries.to_rows(),
            text: self
                .entries
                .to_rows()
                .iter()
                .map(|r| r.iter().map(RatFun::to_text).collect())
                .collect(),
        })
        .expect("serializable")
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.is_symmetric()
    }
}

/// How a raw Gram family is rescaled.
#[derive(Clone, Debug, PartialEq)]
pub enum Normalization {
    Raw,
    /// Divide by the `(1,1)` entry, the value on `t_1 ⊗ v`.
    IdentityVector,
    /// Divide by the norm of the given vector (T-basis coordinates).
    Vector(Vec<Q>),
    /// `IdentityVector` unless that entry vanishes identically; then, for the
    /// principal series, the trivial-type vector `Σ_x t_x ⊗ 1`.
    Auto,
}

/// An algebra generator used for invariance checks.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    T(usize),
    Omega(Vec<Q>),
}

/// The induced module with basis `t_x ⊗ v`, `x ∈ 𝒥_M`.
pub struct InducedModule {
    group: Arc<WeylGroup>,
    levi: Vec<usize>,
    sigma: SigmaKind,
    lambda: Vec<UniPoly>,
    basis: Vec<WeylElement>,
    position: HashMap<WeylElement, usize>,
    decomp: Vec<(usize, i64)>,
}

fn apply_matrix(m: &QMatrix, v: &[UniPoly]) -> Vec<UniPoly> {
    (0..m.rows())
        .map(|i| {
            let mut acc = UniPoly::zero();
            for (j, p) in v.iter().enumerate() {
                if !m[(i, j)].is_zero() {
                    acc = &acc + &p.scale(&m[(i, j)]);
                }
            }
            acc
        })
        .collect()
}

fn pair_poly(omega: &[Q], v: &[UniPoly]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (c, p) in omega.iter().zip(v) {
        if !c.is_zero() {
            acc = &acc + &p.scale(c);
        }
    }
    acc
}

impl InducedModule {
    pub fn new(group: Arc<WeylGroup>, datum: &InducedDatum) -> Result<Self> {
        let rs = group.root_system();
        let dim = rs.ambient_dim();
        if datum.nu0.len() != dim || datum.dir.len() != dim {
            return Err(Error::Dimension(format!("weights must have {dim} coordinates")));
        }
        rs.coroot_coords(&datum.nu0)?;
        rs.coroot_coords(&datum.dir)?;
        for &i in &datum.levi {
            if i >= rs.rank() {
                return Err(Error::Invalid(format!("simple root index {} out of range", i + 1)));
            }
            let a = &rs.simple_roots()[i];
            if !dot(a, &datum.nu0).is_zero() || !dot(a, &datum.dir).is_zero() {
                return Err(Error::Invalid(format!(
                    "nu0 and dir must be orthogonal to the Levi roots; alpha_{} pairs nontrivially",
                    i + 1
                )));
            }
        }
        let lm = rs.levi_k_rho(&datum.levi);
        let sgn = match datum.sigma {
            SigmaKind::Trivial => q(1),
            SigmaKind::Steinberg => q(-1),
        };
        let lambda = (0..dim)
            .map(|d| UniPoly::linear(&lm[d] * &sgn + &datum.nu0[d], datum.dir[d].clone()))
            .collect();
        Self::with_weight(group, datum.levi.clone(), datum.sigma, lambda)
    }

    /// Builds the module from an explicit weight `λ(t)` of σ.
    pub fn with_weight(
        group: Arc<WeylGroup>,
        levi: Vec<usize>,
        sigma: SigmaKind,
        lambda: Vec<UniPoly>,
    ) -> Result<Self> {
        let rs = group.root_system();
        let mut levi = levi;
        levi.sort_unstable();
        levi.dedup();
        for &i in &levi {
            let p = pair_poly(&rs.simple_roots()[i], &lambda);
            let k = rs.k_simple()[i].clone();
            let want = match sigma {
                SigmaKind::Trivial => k,
                SigmaKind::Steinberg => -k,
            };
            if p != UniPoly::constant(want) {
                return Err(Error::Invalid(format!(
                    "weight does not restrict to the chosen character on alpha_{}",
                    i + 1
                )));
            }
        }
        let basis = group.min_coset_reps(&levi);
        let position: HashMap<WeylElement, usize> = basis.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let decomp = group
            .elements()
            .map(|z| {
                let (c, m) = group.coset_decompose(z, &levi);
                let s = match sigma {
                    SigmaKind::Trivial => 1,
                    SigmaKind::Steinberg => group.sign(m),
                };
                (position[&c], s)
            })
            .collect();
        Ok(InducedModule {
            group,
            levi,
            sigma,
            lambda,
            basis,
            position,
            decomp,
        })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn sigma(&self) -> SigmaKind {
        self.sigma
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WeylElement] {
        &self.basis
    }

    pub fn position(&self, x: WeylElement) -> Option<usize> {
        self.position.get(&x).copied()
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|&x| self.group.format(x)).collect()
    }

    /// The weight `λ_σ(t)` as polynomials in `t`.
    pub fn weight(&self) -> &[UniPoly] {
        &self.lambda
    }

    pub fn weight_at(&self, t: &Q) -> Vec<Q> {
        self.lambda.iter().map(|p| p.eval(t)).collect()
    }

    /// `t_z ⊗ v = t_{c(z)} ⊗ σ(m(z)) v` as (basis index, sign).
    pub fn reduce(&self, z: WeylElement) -> (usize, i64) {
        self.decomp[z.index()]
    }

    /// `π(t_z)` as a signed permutation matrix (columns are images).
    pub fn pi_t(&self, z: WeylElement) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (j, &x) in self.basis.iter().enumerate() {
            let (i, s) = self.reduce(self.group.mul(z, x));
            m[(i, j)] = q(s);
        }
        m
    }

    /// `π(ω)` from the explicit action formula.
    pub fn pi_omega(&self, omega: &[Q]) -> RatMatrix {
        let g = &self.group;
        let rs = g.root_system();
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (j, &x) in self.basis.iter().enumerate() {
            let xl = apply_matrix(g.matrix(x), &self.lambda);
            m[(j, j)] = &m[(j, j)] + &RatFun::from_poly(pair_poly(omega, &xl));
            for b in g.inversion_set(g.inv(x)) {
                let root = &rs.positive_roots()[b];
                let c = dot(omega, &root.coroot) * &root.k;
                if c.is_zero() {
                    continue;
                }
                let (i, s) = self.reduce(g.mul(g.reflection(b), x));
                m[(i, j)] = &m[(i, j)] + &RatFun::constant(c * q(s));
            }
        }
        m
    }

    pub fn pi(&self, h: &Generator) -> RatMatrix {
        match h {
            Generator::T(i) => RatMatrix::from_q(&self.pi_t(self.group.simple(*i))),
            Generator::Omega(w) => self.pi_omega(w),
        }
    }

    /// Simple reflections and simple roots.
    pub fn generators(&self) -> Vec<Generator> {
        let rs = self.group.root_system();
        let mut out: Vec<Generator> = (0..rs.rank()).map(Generator::T).collect();
        out.extend(rs.simple_roots().iter().map(|a| Generator::Omega(a.clone())));
        out
    }

    /// `π(h)` for an algebra element with polynomial coefficients, computed
    /// by expanding `h·t_x` in the algebra.
    pub fn pi_element(&self, alg: &HeckeAlgebra<PolyRing>, h: &HeckeElement<MPoly>) -> Result<RatMatrix> {
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (j, &x) in self.basis.iter().enumerate() {
            let hx = alg.mul(h, &alg.t(x))?;
            for (y, a) in hx.terms() {
                let (i, s) = self.reduce(y);
                let v = alg.ring().eval_at(a, &self.lambda).scale(&q(s));
                m[(i, j)] = &m[(i, j)] + &RatFun::from_poly(v);
            }
        }
        Ok(m)
    }

    fn sigma_sign(&self, m: WeylElement) -> i64 {
        match self.sigma {
            SigmaKind::Trivial => 1,
            SigmaKind::Steinberg => self.group.sign(m),
        }
    }

    /// The form in the T-basis, before any normalization.
    pub fn raw_gram(&self) -> Result<RatMatrix> {
        let g = &self.group;
        let alg = HeckeAlgebra::new(PolyRing::new(g.clone()));
        let w_rel = g.w0_relative(&self.levi);
        let w_rel_inv = g.inv(w_rel);
        let dual_levi = g.delta_subset(&self.levi);
        let r0 = alg.r_check(w_rel)?;
        let pt = apply_matrix(g.matrix(w_rel_inv), &self.lambda);
        let rs = g.root_system();
        let mut cfac = RatFun::one();
        for b in g.inversion_set(w_rel) {
            let root = &rs.positive_roots()[b];
            let den = &UniPoly::constant(root.k.clone()) - &pair_poly(&root.vector, &pt);
            cfac = &cfac * &RatFun::new(UniPoly::one(), den).map_err(|_| {
                Error::DegenerateLine("normalizing factor of the long intertwiner has a pole along the whole line".into())
            })?;
        }
        let coeffs: HashMap<WeylElement, RatFun> = r0
            .terms()
            .map(|(w, b)| (w, RatFun::from_poly(alg.ring().eval_at(b, &pt))))
            .collect();
        let levi_elems = g.parabolic_elements(&dual_levi);
        let w_pair = |x: WeylElement, y: WeylElement| -> RatFun {
            let z = g.mul(w_rel_inv, g.mul(g.inv(y), x));
            let zi = g.inv(z);
            let mut acc = RatFun::zero();
            for &m in &levi_elems {
                if let Some(b) = coeffs.get(&g.mul(zi, m)) {
                    let s = self.sigma_sign(g.mul(w_rel, g.mul(m, w_rel_inv)));
                    acc = &acc + &b.scale(&q(s));
                }
            }
            &acc * &cfac
        };
        let n = self.dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let vals: Vec<RatFun> = pairs
            .par_iter()
            .map(|&(i, j)| w_pair(self.basis[i], self.basis[j]))
            .collect();
        let mut m = RatMatrix::zeros(n, n);
        for ((i, j), v) in pairs.into_iter().zip(vals) {
            m[(j, i)] = v.clone();
            m[(i, j)] = v;
        }
        Ok(m)
    }

    /// Trivial-type vector `Σ_x t_x ⊗ 1` (principal series only).
    pub fn trivial_vector(&self) -> Vec<Q> {
        vec![q(1); self.dim()]
    }

    pub fn gram_family(&self, norm: &Normalization) -> Result<GramFamily> {
        let raw = self.raw_gram()?;
        let scale = match norm {
            Normalization::Raw => RatFun::one(),
            Normalization::IdentityVector => raw[(0, 0)].clone(),
            Normalization::Vector(v) => norm_of(&raw, v),
            Normalization::Auto => {
                if !raw[(0, 0)].is_zero() {
                    raw[(0, 0)].clone()
                } else if self.levi.is_empty() {
                    norm_of(&raw, &self.trivial_vector())
                } else {
                    return Err(Error::Invalid(
                        "the (1,1) entry vanishes identically; supply a normalizing vector".into(),
                    ));
                }
            }
        };
        let inv = scale
            .inv()
            .map_err(|_| Error::Invalid("normalizing value vanishes identically".into()))?;
        Ok(GramFamily {
            basis: self.labels(),
            kind: BasisKind::T,
            entries: raw.scale(&inv),
        })
    }

    /// Rows are the T-coordinates of `𝓡_x ⊗ v = Ř_x Π_{β>0,xβ<0}(k_β+β)⁻¹ ⊗ v`.
    pub fn r_basis_change(&self) -> Result<RatMatrix> {
        let g = &self.group;
        let rs = g.root_system();
        let alg = HeckeAlgebra::new(PolyRing::new(g.clone()));
        let n = self.dim();
        let rows: Vec<Result<Vec<RatFun>>> = self
            .basis
            .par_iter()
            .map(|&x| {
                let r = alg.r_check(x)?;
                let mut row = vec![RatFun::zero(); n];
                for (y, a) in r.terms() {
                    let (i, s) = self.reduce(y);
                    let v = RatFun::from_poly(alg.ring().eval_at(a, &self.lambda).scale(&q(s)));
                    row[i] = &row[i] + &v;
                }
                let mut den = RatFun::one();
                for b in g.inversion_set(x) {
                    let root = &rs.positive_roots()[b];
                    let p = &UniPoly::constant(root.k.clone()) + &pair_poly(&root.vector, &self.lambda);
                    den = &den * &RatFun::from_poly(p);
                }
                let inv = den.inv().map_err(|_| {
                    Error::DegenerateLine("k + beta vanishes identically on the line".into())
                })?;
                Ok(row.iter().map(|v| v * &inv).collect())
            })
            .collect();
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        let m = RatMatrix::from_rows(rows);
        if m.det().is_zero() {
            return Err(Error::DegenerateLine("R-basis change is singular on this line".into()));
        }
        Ok(m)
    }

    pub fn to_r_basis(&self, g: &GramFamily) -> Result<GramFamily> {
        if g.kind != BasisKind::T {
            return Err(Error::Invalid("expected a T-basis family".into()));
        }
        let c = self.r_basis_change()?;
        Ok(GramFamily {
            basis: self.labels().iter().map(|l| format!("R[{l}]")).collect(),
            kind: BasisKind::R,
            entries: c.mul(&g.entries).mul(&c.transpose()),
        })
    }

    /// `f(cc(σ)) = (-1)^{|R⁺∖R⁺_M|} Π_{α ∈ R⁺∖R⁺_M} (α,λ)/(k_α+(α,λ))`.
    pub fn f_cc(&self) -> Result<RatFun> {
        let rs = self.group.root_system();
        let mut acc = RatFun::one();
        for root in rs.positive_roots() {
            let in_levi = root.coords.iter().enumerate().all(|(i, &c)| c == 0 || self.levi.contains(&i));
            if in_levi {
                continue;
            }
            let p = pair_poly(&root.vector, &self.lambda);
            let den = &UniPoly::constant(root.k.clone()) + &p;
            acc = &acc * &RatFun::new(-p, den)?;
        }
        Ok(acc)
    }

    /// `Π_{α>0, xα<0} ((α,λ)-k_α)/((α,λ)+k_α)` for each basis element.
    pub fn r_diagonal_closed_form(&self) -> Result<Vec<RatFun>> {
        let g = &self.group;
        let rs = g.root_system();
        self.basis
            .iter()
            .map(|&x| {
                let mut acc = RatFun::one();
                for b in g.inversion_set(x) {
                    let root = &rs.positive_roots()[b];
                    let p = pair_poly(&root.vector, &self.lambda);
                    let k = UniPoly::constant(root.k.clone());
                    acc = &acc * &RatFun::new(&p - &k, &p + &k)?;
                }
                Ok(acc)
            })
            .collect()
    }

    /// `π(h)ᵀ G = G π(h•)` for a generator (both generators are •-fixed).
    pub fn invariance_check(&self, g: &GramFamily, h: &Generator) -> bool {
        let p = self.pi(h);
        p.transpose().mul(&g.entries) == g.entries.mul(&p)
    }

    /// The target of the hermitian-dual isomorphism: `X(δ(M), aσ)`.
    pub fn dual_target(&self) -> Result<InducedModule> {
        let g = &self.group;
        let w_rel = g.w0_relative(&self.levi);
        let pt = apply_matrix(g.matrix(g.inv(w_rel)), &self.lambda);
        InducedModule::with_weight(g.clone(), g.delta_subset(&self.levi), self.sigma, pt)
    }

    /// Matrix of `Φ(t^h_x ⊗ v^h) = t_{x w⁰} ⊗ v`.
    pub fn dual_map(&self, target: &InducedModule) -> QMatrix {
        let g = &self.group;
        let w_rel = g.w0_relative(&self.levi);
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (j, &x) in self.basis.iter().enumerate() {
            let i = target.position(g.mul(x, w_rel)).expect("x w0 is a minimal representative");
            m[(i, j)] = q(1);
        }
        m
    }

    /// Checks `Φ π•(h) = π'(h) Φ` for all generators, with `π•(h) = π(h•)ᵀ`.
    pub fn herm_dual_check(&self) -> Result<bool> {
        let target = self.dual_target()?;
        let phi = RatMatrix::from_q(&self.dual_map(&target));
        Ok(self.generators().iter().all(|h| {
            let dual = self.pi(h).transpose();
            phi.mul(&dual) == target.pi(h).mul(&phi)
        }))
    }

    /// The dual action written out from the closed formula: `t_z` acts by
    /// the same signed permutation, `ω` by the diagonal term minus the
    /// root-string terms with `x⁻¹β ∈ R⁺ ∖ R⁺_M`.
    pub fn dual_omega_formula(&self, omega: &[Q]) -> RatMatrix {
        let g = &self.group;
        let rs = g.root_system();
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (j, &x) in self.basis.iter().enumerate() {
            let xl = apply_matrix(g.matrix(x), &self.lambda);
            m[(j, j)] = &m[(j, j)] + &RatFun::from_poly(pair_poly(omega, &xl));
            let xi = g.inv(x);
            for (b, root) in rs.positive_roots().iter().enumerate() {
                let img = g.act_root(xi, b);
                let in_levi = rs.positive_roots()[img.index]
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || self.levi.contains(&i));
                if !img.positive || in_levi {
                    continue;
                }
                let c = dot(omega, &root.coroot) * &root.k;
                if c.is_zero() {
                    continue;
                }
                let (i, s) = self.reduce(g.mul(g.reflection(b), x));
                m[(i, j)] = &m[(i, j)] - &RatFun::constant(c * q(s));
            }
        }
        m
    }

    /// Matrix of `t_x ⊗ v ↦ t_{δ(x)} ⊗ v`, defined when the module is δ-stable.
    pub fn delta_twist(&self) -> Result<QMatrix> {
        let g = &self.group;
        if g.delta_subset(&self.levi) != self.levi {
            return Err(Error::NotDeltaStable("delta(M) differs from M".into()));
        }
        let dl: Vec<UniPoly> = apply_matrix(g.matrix(g.w0()), &self.lambda).into_iter().map(|p| -p).collect();
        if dl != self.lambda {
            return Err(Error::NotDeltaStable(format!(
                "line is not fixed by -w0 (weight at t=0: {})",
                fmt_q_vec(&self.weight_at(&q(0)))
            )));
        }
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (j, &x) in self.basis.iter().enumerate() {
            let i = self.position(g.delta(x)).expect("delta preserves minimal representatives");
            m[(i, j)] = q(1);
        }
        Ok(m)
    }

    /// `⟨u, v⟩⋆ = ⟨u, π(t_{w₀}) τ v⟩•`.
    pub fn star_form_from_bullet(&self, g: &GramFamily) -> Result<GramFamily> {
        let tau = self.delta_twist()?;
        let tw0 = self.pi_t(self.group.w0());
        let s = g.entries.mul(&RatMatrix::from_q(&tw0.mul(&tau)));
        Ok(GramFamily {
            basis: g.basis.clone(),
            kind: g.kind,
            entries: s,
        })
    }

    /// `π(h)ᵀ S = S π(h⋆)` with `t_s⋆ = t_s` and `ω⋆ = t_{w₀} δ(ω) t_{w₀}`.
    pub fn star_invariance_check(&self, s: &GramFamily, h: &Generator) -> bool {
        let p = self.pi(h);
        let star = match h {
            Generator::T(_) => p.clone(),
            Generator::Omega(w) => {
                let tw0 = RatMatrix::from_q(&self.pi_t(self.group.w0()));
                let dw = self.group.delta_weight(w);
                tw0.mul(&self.pi_omega(&dw)).mul(&tw0)
            }
        };
        p.transpose().mul(&s.entries) == s.entries.mul(&star)
    }
}

fn norm_of(g: &RatMatrix, v: &[Q]) -> RatFun {
    let vf: Vec<RatFun> = v.iter().map(|x| RatFun::constant(x.clone())).collect();
    let gv = g.mul_vec(&vf);
    let mut acc = RatFun::zero();
    for (a, b) in vf.iter().zip(&gv) {
        acc = &acc + &(a * b);
    }
    acc
}

/// `Bᵀ G B` for a set of column vectors.
pub fn restrict_to(g: &GramFamily, vectors: &[Vec<Q>], labels: Vec<String>) -> GramFamily {
    let b = RatMatrix::from_q(&QMatrix::from_columns(vectors));
    GramFamily {
        basis: labels,
        kind: g.kind,
        entries: g.entries.congruence(&b),
    }
}

#[cfg(test)]
mod tests;
