//! Graded affine Hecke algebra elements `Σ t_w a_w` with coefficients in a
//! (localized) symmetric algebra, multiplied through the cross relation
//! `a t_s = t_s s(a) + k_s Δ_s(a)`.

mod line;
mod polyring;

pub use line::{LineContext, LineRing, LineScalar};
pub use polyring::PolyRing;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::exactfield::{q, Q};
use crate::weyl::{WeylElement, WeylGroup};

/// Commutative coefficient ring carrying a W-action and divided differences.
pub trait CoeffRing: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn group(&self) -> &WeylGroup;
    fn zero(&self) -> Self::Elem;
    fn constant(&self, c: &Q) -> Self::Elem;
    /// The linear function `λ ↦ (ω, λ)` for `ω ∈ V` in ambient coordinates.
    fn linear(&self, omega: &[Q]) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Q) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `(w·a)(λ) = a(w⁻¹λ)`.
    fn act(&self, w: WeylElement, a: &Self::Elem) -> Self::Elem;
    /// `Δ_i(a) = (a - s_i(a)) / α_i`.
    fn divided_difference(&self, i: usize, a: &Self::Elem) -> Result<Self::Elem>;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// `λ ↦ a(-λ)`.
    fn negate_arg(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn one(&self) -> Self::Elem {
        self.constant(&q(1))
    }

    fn simple_root(&self, i: usize) -> Self::Elem {
        let v = self.group().root_system().simple_roots()[i].clone();
        self.linear(&v)
    }

    fn positive_root(&self, b: usize) -> Self::Elem {
        let v = self.group().root_system().positive_roots()[b].vector.clone();
        self.linear(&v)
    }

    /// `δ(a)(λ) = a(-w₀λ)`.
    fn delta(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let w0 = self.group().w0();
        self.negate_arg(&self.act(w0, a))
    }

    /// `λ ↦ a(-xλ)` for an involution `x`.
    fn twisted_negation(&self, x: WeylElement, a: &Self::Elem) -> Result<Self::Elem> {
        let xi = self.group().inv(x);
        self.negate_arg(&self.act(xi, a))
    }
}

/// `Σ_w t_w a_w`, coefficients on the right, zero terms pruned.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<E> {
    terms: BTreeMap<WeylElement, E>,
}

impl<E: Clone> HeckeElement<E> {
    pub fn terms(&self) -> impl Iterator<Item = (WeylElement, &E)> {
        self.terms.iter().map(|(w, a)| (*w, a))
    }

    pub fn coeff(&self, w: WeylElement) -> Option<&E> {
        self.terms.get(&w)
    }

    pub fn support(&self) -> Vec<WeylElement> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Algebra operations over a chosen coefficient ring.
pub struct HeckeAlgebra<R: CoeffRing> {
    ring: R,
}

impl<R: CoeffRing> HeckeAlgebra<R> {
    pub fn new(ring: R) -> Self {
        HeckeAlgebra { ring }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn group(&self) -> &WeylGroup {
        self.ring.group()
    }

    fn k_simple(&self, i: usize) -> Q {
        self.group().root_system().k_simple()[i].clone()
    }

    pub fn zero(&self) -> HeckeElement<R::Elem> {
        HeckeElement { terms: BTreeMap::new() }
    }

    pub fn one(&self) -> HeckeElement<R::Elem> {
        self.t(self.group().identity())
    }

    pub fn t(&self, w: WeylElement) -> HeckeElement<R::Elem> {
        self.term(w, self.ring.one())
    }

    /// `t_w a`.
    pub fn term(&self, w: WeylElement, a: R::Elem) -> HeckeElement<R::Elem> {
        let mut h = self.zero();
        self.add_term(&mut h, w, a);
        h
    }

    /// The coefficient-ring element `a = t_1 a`.
    pub fn scalar(&self, a: R::Elem) -> HeckeElement<R::Elem> {
        self.term(self.group().identity(), a)
    }

    pub fn omega(&self, v: &[Q]) -> HeckeElement<R::Elem> {
        self.scalar(self.ring.linear(v))
    }

    fn add_term(&self, h: &mut HeckeElement<R::Elem>, w: WeylElement, a: R::Elem) {
        if self.ring.is_zero(&a) {
            return;
        }
        use std::collections::btree_map::Entry;
        match h.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(a);
            }
            Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &a);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            self.add_term(&mut out, *w, c.clone());
        }
        out
    }

    pub fn neg(&self, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        HeckeElement {
            terms: a.terms.iter().map(|(w, c)| (*w, self.ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &HeckeElement<R::Elem>, c: &Q) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (w, x) in &a.terms {
            self.add_term(&mut out, *w, self.ring.scale(x, c));
        }
        out
    }

    /// `h · a` for a coefficient `a`.
    pub fn right_scalar(&self, h: &HeckeElement<R::Elem>, a: &R::Elem) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (w, c) in &h.terms {
            self.add_term(&mut out, *w, self.ring.mul(c, a));
        }
        out
    }

    /// `h · t_{s_i}`.
    pub fn right_mul_simple(&self, h: &HeckeElement<R::Elem>, i: usize) -> Result<HeckeElement<R::Elem>> {
        let g = self.group();
        let s = g.simple(i);
        let k = self.k_simple(i);
        let mut out = self.zero();
        for (w, c) in &h.terms {
            self.add_term(&mut out, g.mul(*w, s), self.ring.act(s, c));
            let d = self.ring.divided_difference(i, c)?;
            self.add_term(&mut out, *w, self.ring.scale(&d, &k));
        }
        Ok(out)
    }

    /// `h · t_v` for a whole word.
    pub fn right_mul_t(&self, h: &HeckeElement<R::Elem>, v: WeylElement) -> Result<HeckeElement<R::Elem>> {
        let mut acc = h.clone();
        for &i in self.group().reduced_word(v) {
            acc = self.right_mul_simple(&acc, i)?;
        }
        Ok(acc)
    }

    pub fn mul(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>> {
        let g = self.group();
        let mut cache: HashMap<WeylElement, HeckeElement<R::Elem>> = HashMap::new();
        cache.insert(g.identity(), a.clone());
        let mut support: Vec<WeylElement> = b.terms.keys().copied().collect();
        support.sort_by_key(|&v| g.length(v));
        let mut out = self.zero();
        for v in support {
            let av = self.cached_right_t(&mut cache, v)?;
            let part = self.right_scalar(&av, &b.terms[&v]);
            out = self.add(&out, &part);
        }
        Ok(out)
    }

    fn cached_right_t(
        &self,
        cache: &mut HashMap<WeylElement, HeckeElement<R::Elem>>,
        v: WeylElement,
    ) -> Result<HeckeElement<R::Elem>> {
        if let Some(h) = cache.get(&v) {
            return Ok(h.clone());
        }
        let g = self.group();
        let word = g.reduced_word(v);
        let last = *word.last().expect("non-identity element");
        let prefix = g.mul(v, g.simple(last));
        let base = self.cached_right_t(cache, prefix)?;
        let h = self.right_mul_simple(&base, last)?;
        cache.insert(v, h.clone());
        Ok(h)
    }

    pub fn mul_all(&self, xs: &[HeckeElement<R::Elem>]) -> Result<HeckeElement<R::Elem>> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `a · h` for a coefficient `a`.
    pub fn left_scalar(&self, a: &R::Elem, h: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>> {
        self.mul(&self.scalar(a.clone()), h)
    }

    /// `(Σ t_w a_w)• = Σ a_w t_{w⁻¹}` (coefficients are real).
    pub fn bullet(&self, h: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>> {
        let g = self.group();
        let mut out = self.zero();
        for (w, a) in &h.terms {
            let part = self.mul(&self.scalar(a.clone()), &self.t(g.inv(*w)))?;
            out = self.add(&out, &part);
        }
        Ok(out)
    }

    /// `δ(t_w a) = t_{w₀ww₀} δ(a)`.
    pub fn delta(&self, h: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>> {
        let g = self.group();
        let mut out = self.zero();
        for (w, a) in &h.terms {
            self.add_term(&mut out, g.delta(*w), self.ring.delta(a)?);
        }
        Ok(out)
    }

    /// Iwahori–Matsumoto involution: `t_s ↦ -t_s`, `ω ↦ -ω`.
    pub fn im_involution(&self, h: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>> {
        let g = self.group();
        let mut out = self.zero();
        for (w, a) in &h.terms {
            let b = self.ring.negate_arg(a)?;
            let b = if g.length(*w) % 2 == 0 { b } else { self.ring.neg(&b) };
            self.add_term(&mut out, *w, b);
        }
        Ok(out)
    }

    /// The ⋆ anti-involution from its values on generators:
    /// `t_w⋆ = t_{w⁻¹}` and `a⋆ = t_{w₀} δ(a) t_{w₀}`.
    pub fn star(&self, h: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>> {
        let w0 = self.group().w0();
        self.star_relative(h, w0, |a| self.ring.delta(a))
    }

    /// ⋆ for the parabolic subalgebra `H_M`, applied termwise.
    pub fn star_m(&self, h: &HeckeElement<R::Elem>, m: &[usize]) -> Result<HeckeElement<R::Elem>> {
        let w0m = self.group().longest_in(m);
        self.star_relative(h, w0m, |a| self.ring.twisted_negation(w0m, a))
    }

    fn star_relative(
        &self,
        h: &HeckeElement<R::Elem>,
        longest: WeylElement,
        twist: impl Fn(&R::Elem) -> Result<R::Elem>,
    ) -> Result<HeckeElement<R::Elem>> {
        let g = self.group();
        let tl = self.t(longest);
        let mut out = self.zero();
        for (w, a) in &h.terms {
            let conj = self.mul(&self.mul(&tl, &self.scalar(twist(a)?))?, &tl)?;
            let part = self.mul(&conj, &self.t(g.inv(*w)))?;
            out = self.add(&out, &part);
        }
        Ok(out)
    }

    /// `ε_M(h)`: the part of `h` supported on `W_M`.
    pub fn epsilon(&self, h: &HeckeElement<R::Elem>, m: &[usize]) -> HeckeElement<R::Elem> {
        let g = self.group();
        HeckeElement {
            terms: h
                .terms
                .iter()
                .filter(|(w, _)| g.in_parabolic(**w, m))
                .map(|(w, a)| (*w, a.clone()))
                .collect(),
        }
    }

    /// Unnormalized intertwiner `Ř_{s_i} = t_{s_i} α_i - k_i`.
    pub fn r_check_simple(&self, i: usize) -> HeckeElement<R::Elem> {
        let g = self.group();
        let mut h = self.term(g.simple(i), self.ring.simple_root(i));
        self.add_term(&mut h, g.identity(), self.ring.constant(&-self.k_simple(i)));
        h
    }

    /// `Ř_x` along the stored reduced word.
    pub fn r_check(&self, x: WeylElement) -> Result<HeckeElement<R::Elem>> {
        let mut acc = self.one();
        for &i in self.group().reduced_word(x) {
            acc = self.mul(&acc, &self.r_check_simple(i))?;
        }
        Ok(acc)
    }

    /// `R_{s_i} = t_{s_i} α_i/(k_i - α_i) - k_i/(k_i - α_i)`.
    pub fn r_simple(&self, i: usize) -> Result<HeckeElement<R::Elem>> {
        let k = self.ring.constant(&self.k_simple(i));
        let a = self.ring.simple_root(i);
        let den = self.ring.inv(&self.ring.sub(&k, &a)).map_err(|_| {
            Error::DegenerateLine(format!("k - alpha_{} vanishes identically", i + 1))
        })?;
        Ok(self.right_scalar(&self.r_check_simple(i), &den))
    }

    pub fn r_from_word(&self, word: &[usize]) -> Result<HeckeElement<R::Elem>> {
        let mut acc = self.one();
        for &i in word {
            acc = self.mul(&acc, &self.r_simple(i)?)?;
        }
        Ok(acc)
    }

    /// `R_x` along the stored reduced word.
    pub fn r_element(&self, x: WeylElement) -> Result<HeckeElement<R::Elem>> {
        let w = self.group().reduced_word(x).to_vec();
        self.r_from_word(&w)
    }

    /// `Π_{β>0, xβ<0} f(β)` with `f` applied to the root as a ring element.
    pub fn product_over_inversions(
        &self,
        x: WeylElement,
        f: impl Fn(&R::Elem, &Q) -> Result<R::Elem>,
    ) -> Result<R::Elem> {
        let rs = self.group().root_system();
        let mut acc = self.ring.one();
        for b in self.group().inversion_set(x) {
            let beta = self.ring.positive_root(b);
            acc = self.ring.mul(&acc, &f(&beta, &rs.positive_roots()[b].k)?);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests;
