use std::sync::Arc;

use super::CoeffRing;
use crate::error::{Error, Result};
use crate::exactfield::{dot, q, MPoly, UniPoly, Q};
use crate::weyl::{WeylElement, WeylGroup};

/// Polynomial coefficients: `S(V)` in the variables `y_i = (α_i, ·)`.
#[derive(Clone, Debug)]
pub struct PolyRing {
    group: Arc<WeylGroup>,
    images: Arc<Vec<Vec<MPoly>>>,
}

impl PolyRing {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let rank = group.rank();
        let images = group
            .elements()
            .map(|w| {
                (0..rank)
                    .map(|i| {
                        let c = group.act_simple_coords(w, i);
                        MPoly::linear(&c.iter().map(|&x| q(x)).collect::<Vec<_>>())
                    })
                    .collect()
            })
            .collect();
        PolyRing {
            group,
            images: Arc::new(images),
        }
    }

    /// Evaluates at a point of V∨ depending polynomially on `t`.
    pub fn eval_at(&self, a: &MPoly, point: &[UniPoly]) -> UniPoly {
        let rs = self.group.root_system();
        let vals: Vec<UniPoly> = rs
            .simple_roots()
            .iter()
            .map(|alpha| {
                let mut acc = UniPoly::zero();
                for (c, p) in alpha.iter().zip(point) {
                    acc = &acc + &p.scale(c);
                }
                acc
            })
            .collect();
        a.eval_uni(&vals)
    }

    pub fn eval_rational(&self, a: &MPoly, point: &[Q]) -> Q {
        let rs = self.group.root_system();
        let vals: Vec<Q> = rs.simple_roots().iter().map(|alpha| dot(alpha, point)).collect();
        a.eval(&vals)
    }
}

impl CoeffRing for PolyRing {
    type Elem = MPoly;

    fn group(&self) -> &WeylGroup {
        &self.group
    }

    fn zero(&self) -> MPoly {
        MPoly::zero()
    }

    fn constant(&self, c: &Q) -> MPoly {
        MPoly::constant(c.clone())
    }

    fn linear(&self, omega: &[Q]) -> MPoly {
        let rs = self.group.root_system();
        let c: Vec<Q> = rs.fundamental_coweights().iter().map(|w| dot(omega, w)).collect();
        MPoly::linear(&c)
    }

    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a + b
    }

    fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a - b
    }

    fn neg(&self, a: &MPoly) -> MPoly {
        -a
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a * b
    }

    fn scale(&self, a: &MPoly, c: &Q) -> MPoly {
        a.scale(c)
    }

    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_zero()
    }

    fn act(&self, w: WeylElement, a: &MPoly) -> MPoly {
        if w == self.group.identity() || a.constant_value().is_some() {
            return a.clone();
        }
        a.substitute(&self.images[w.index()])
    }

    fn divided_difference(&self, i: usize, a: &MPoly) -> Result<MPoly> {
        let s = self.group.simple(i);
        let diff = a - &self.act(s, a);
        diff.div_var(i)
            .ok_or_else(|| Error::Invalid("divided difference is not a polynomial".into()))
    }

    fn inv(&self, a: &MPoly) -> Result<MPoly> {
        match a.constant_value() {
            Some(c) if c != q(0) => Ok(MPoly::constant(c.recip())),
            _ => Err(Error::Invalid("only nonzero constants are invertible in S(V)".into())),
        }
    }

    fn negate_arg(&self, a: &MPoly) -> Result<MPoly> {
        Ok(a.negate_vars())
    }
}
