use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use num_bigint::BigInt;
use num_integer::Integer;

use super::{fmt_q, q, Q};

/// Dense univariate polynomial in `t`, coefficients low degree first,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `a + b t`.
    pub fn linear(a: Q, b: Q) -> Self {
        Self::new(vec![a, b])
    }

    /// `t - t0`.
    pub fn root_factor(t0: &Q) -> Self {
        Self::linear(-t0.clone(), Q::one())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, t: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.leading().recip();
        self.scale(&l)
    }

    /// Euclidean division, `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lead_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut quo = vec![Q::zero(); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dj;
            }
            quo[i] = c;
        }
        r.truncate(dd);
        (UniPoly::new(quo), UniPoly::new(r))
    }

    /// Exact quotient; panics in debug builds when the division leaves a remainder.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero when both inputs vanish).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return UniPoly::one();
        }
        // primitive remainder sequence over ℤ avoids rational coefficient growth
        let (mut a, mut b) = (primitive_int(self), primitive_int(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = primitive_int_vec(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        if b.is_empty() {
            UniPoly::new(a.into_iter().map(Q::from_integer).collect()).monic()
        } else {
            UniPoly::one()
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Splits off the factor `(t - t0)^n`, returning `n` and the cofactor,
    /// which does not vanish at `t0`. The input must be nonzero.
    pub fn split_root(&self, t0: &Q) -> (usize, UniPoly) {
        assert!(!self.is_zero());
        let mut n = 0;
        let mut p = self.clone();
        loop {
            let (quo, rem) = p.synthetic_div(t0);
            if !rem.is_zero() {
                return (n, p);
            }
            p = quo;
            n += 1;
        }
    }

    /// Division by `t - t0`, returning quotient and remainder `p(t0)`.
    fn synthetic_div(&self, t0: &Q) -> (UniPoly, Q) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Q::zero());
        }
        let n = self.coeffs.len();
        let mut quo = vec![Q::zero(); n - 1];
        let mut acc = Q::zero();
        for i in (0..n).rev() {
            acc = acc * t0 + &self.coeffs[i];
            if i > 0 {
                quo[i - 1] = acc.clone();
            }
        }
        (UniPoly::new(quo), acc)
    }

    /// Sturm sequence of a squarefree-reduced copy of `self`.
    fn sturm_chain(&self) -> Vec<UniPoly> {
        let g = self.gcd(&self.derivative());
        let p = self.exact_div(&g);
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        chain
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &Q, b: &Q) -> usize {
        if self.is_zero() || self.degree() == Some(0) {
            return 0;
        }
        let chain = self.sturm_chain();
        let changes = |x: &Q| {
            let mut last = 0;
            let mut n = 0;
            for p in &chain {
                let s = super::sign(&p.eval(x));
                if s != 0 {
                    if last != 0 && s != last {
                        n += 1;
                    }
                    last = s;
                }
            }
            n
        };
        changes(a) - changes(b)
    }

    /// Number of distinct real roots in the closed interval `[a, b]`.
    pub fn count_roots_closed(&self, a: &Q, b: &Q) -> usize {
        let at_a = usize::from(!self.is_zero() && self.eval(a).is_zero());
        self.count_roots(a, b) + at_a
    }

    /// Human readable form in `t`, e.g. `t^2-3/2*t+1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", fmt_q(&a), mono));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -self.clone()
    }
}

fn primitive_int(p: &UniPoly) -> Vec<BigInt> {
    let l = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive_int_vec(p.coeffs.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect())
}

fn primitive_int_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

/// `lc(b)^(deg a - deg b + 1) a mod b` with integer coefficients.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::qf;
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (quo, r) = a.div_rem(&b);
        assert_eq!(quo, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[1, 1])), p(&[1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3])), UniPoly::one());
    }

    #[test]
    fn split_root_multiplicity() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 1]);
        let (n, rest) = f.split_root(&q(1));
        assert_eq!(n, 2);
        assert_eq!(rest, p(&[3, 1]));
    }

    #[test]
    fn sturm_counts() {
        let f = &(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[1, 0, 1]);
        assert_eq!(f.count_roots(&q(0), &q(3)), 2);
        assert_eq!(f.count_roots(&q(1), &q(3)), 1);
        assert_eq!(f.count_roots_closed(&q(1), &q(3)), 2);
        assert_eq!(f.count_roots(&qf(-1, 2), &qf(1, 2)), 0);
        let sq = &p(&[-1, 1]) * &p(&[-1, 1]);
        assert_eq!(sq.count_roots(&q(0), &q(2)), 1);
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[1, -3, 1]).to_text(), "t^2-3*t+1");
        assert_eq!(UniPoly::linear(qf(1, 2), q(-1)).to_text(), "-t+1/2");
    }
}
