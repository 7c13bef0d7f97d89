use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fmt_q, parse_q, sign, UniPoly, Q};
use crate::error::{Error, Result};

/// Element of ℚ(t) in canonical form: coprime numerator and monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

/// Leading behaviour `f(t) = coeff * (t - t0)^order * (1 + O(t - t0))`.
/// For the zero function `order` is `None` and `sign` is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    pub order: Option<i64>,
    pub sign: i32,
    pub coeff: Q,
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let l = den.leading();
        if !l.is_one() {
            let inv = l.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    /// Sums many terms, adding numerators over equal denominators first.
    pub fn sum(items: Vec<RatFun>) -> RatFun {
        let mut groups: Vec<(UniPoly, UniPoly)> = Vec::new();
        for f in items {
            if f.is_zero() {
                continue;
            }
            match groups.iter_mut().find(|(d, _)| *d == f.den) {
                Some((_, n)) => *n = &*n + &f.num,
                None => groups.push((f.den, f.num)),
            }
        }
        groups
            .into_iter()
            .map(|(d, n)| RatFun::reduce(n, d))
            .fold(RatFun::zero(), |acc, f| &acc + &f)
    }

    pub fn zero() -> Self {
        RatFun {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        RatFun {
            num: UniPoly::constant(c),
            den: UniPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::q(n))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// The identity function `t`.
    pub fn t() -> Self {
        Self::from_poly(UniPoly::linear(Q::zero(), Q::one()))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    /// Value at `t0`, or `None` at a pole.
    pub fn eval(&self, t0: &Q) -> Option<Q> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    pub fn valuation(&self, t0: &Q) -> Valuation {
        if self.is_zero() {
            return Valuation {
                order: None,
                sign: 0,
                coeff: Q::zero(),
            };
        }
        let (a, pn) = self.num.split_root(t0);
        let (b, pd) = self.den.split_root(t0);
        let coeff = pn.eval(t0) / pd.eval(t0);
        Valuation {
            order: Some(a as i64 - b as i64),
            sign: sign(&coeff),
            coeff,
        }
    }

    /// Vanishing order at `t0` (`i64::MAX` for zero).
    pub fn order_at(&self, t0: &Q) -> i64 {
        self.valuation(t0).order.unwrap_or(i64::MAX)
    }

    /// Behaviour as `t → +∞`: degree difference and leading coefficient ratio.
    pub fn at_infinity(&self) -> Option<(i64, Q)> {
        if self.is_zero() {
            return None;
        }
        let dn = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        Some((dn - dd, self.num.leading() / self.den.leading()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Human readable form such as `(t^2+2*t-3)/(t+1)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            return self.num.to_text();
        }
        format!("({})/({})", self.num.to_text(), self.den.to_text())
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<Q> for RatFun {
    fn from(c: Q) -> Self {
        RatFun::constant(c)
    }
}

impl From<UniPoly> for RatFun {
    fn from(p: UniPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::reduce(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFun {
                num: &(&self.num * &o.den) + &o.num,
                den: o.den.clone(),
            };
        }
        if o.den.is_one() {
            return RatFun {
                num: &self.num + &(&o.num * &self.den),
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd(&o.den);
        let a = self.den.exact_div(&g);
        let b = o.den.exact_div(&g);
        let num = &(&self.num * &b) + &(&o.num * &a);
        RatFun::reduce(num, &self.den * &b)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun {
                num: &self.num * &o.num,
                den: UniPoly::one(),
            };
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = o.den.exact_div(&g1);
        let n2 = o.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let l = den.leading();
        if l.is_one() {
            RatFun { num, den }
        } else {
            let inv = l.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Div for &RatFun {
    type Output = Result<RatFun>;
    fn div(self, o: &RatFun) -> Result<RatFun> {
        Ok(self * &o.inv()?)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct RatFunJson {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunJson {
            num: self.num.coeffs().iter().map(fmt_q).collect(),
            den: self.den.coeffs().iter().map(fmt_q).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RatFunJson::deserialize(d)?;
        let conv = |v: &[String]| -> std::result::Result<UniPoly, D::Error> {
            v.iter()
                .map(|s| parse_q(s))
                .collect::<Result<Vec<_>>>()
                .map(UniPoly::new)
                .map_err(serde::de::Error::custom)
        };
        RatFun::new(conv(&j.num)?, conv(&j.den)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q, qf};
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_reduction() {
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), RatFun::from_poly(p(&[1, 1])));
        let f = rf(&[-1, 1], &[1, 1]);
        assert!((&f + &(-&f)).is_zero());
        assert!((&f * &rf(&[1, 1], &[-1, 1])).is_one());
        let g = rf(&[2], &[4, 2]);
        assert_eq!(g.den(), &p(&[2, 1]));
        assert_eq!(g.num(), &p(&[1]));
    }

    #[test]
    fn valuation_examples() {
        let num = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 1]);
        let f = RatFun::new(num, p(&[1, 1])).unwrap();
        let v = f.valuation(&q(1));
        assert_eq!(v.order, Some(2));
        assert_eq!(v.sign, 1);
        assert_eq!(v.coeff, q(2));

        let g = rf(&[-1, 1], &[1, 1]);
        let v = g.valuation(&q(3));
        assert_eq!(v.order, Some(0));
        assert_eq!(v.coeff, qf(1, 2));
        assert_eq!(RatFun::one().valuation(&q(7)).sign, 1);
        assert_eq!(RatFun::zero().valuation(&q(0)).order, None);
        assert_eq!(rf(&[1], &[-2, 1]).valuation(&q(2)).order, Some(-1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(RatFun::zero().inv().is_err());
        assert!(RatFun::new(p(&[1]), UniPoly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = rf(&[-1, 1], &[1, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":["-1","1"],"den":["1","1"]}"#);
        let back: RatFun = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_text(), "(t-1)/(t+1)");
    }
}
