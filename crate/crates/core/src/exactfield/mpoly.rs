use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{UniPoly, Q};

/// Maximum number of variables (the supported ranks are at most 4).
pub const MAX_VARS: usize = 4;

type Mono = [u16; MAX_VARS];

/// Sparse polynomial over ℚ in at most four variables `y_0..y_3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Q>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; MAX_VARS], c);
        }
        MPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; MAX_VARS];
        m[i] = 1;
        MPoly {
            terms: BTreeMap::from([(m, Q::one())]),
        }
    }

    /// `Σ c_i y_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut m = [0; MAX_VARS];
                m[i] = 1;
                terms.insert(m, c.clone());
            }
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self
                .terms
                .get(&[0; MAX_VARS])
                .cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    fn add_term(terms: &mut BTreeMap<Mono, Q>, m: Mono, c: Q) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Substitutes `y_i ↦ images[i]` for every variable that occurs.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(), p.clone()]).collect();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            out = &out + &term;
        }
        out
    }

    /// `y ↦ -y` in every variable.
    pub fn negate_vars(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let deg: u32 = m.iter().map(|&e| e as u32).sum();
                    (*m, if deg % 2 == 0 { c.clone() } else { -c.clone() })
                })
                .collect(),
        }
    }

    /// Exact division by the variable `y_j`; `None` if some monomial lacks it.
    pub fn div_var(&self, j: usize) -> Option<MPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m[j] == 0 {
                return None;
            }
            let mut m2 = *m;
            m2[j] -= 1;
            terms.insert(m2, c.clone());
        }
        Some(MPoly { terms })
    }

    pub fn eval(&self, vals: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut x = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    x *= &vals[i];
                }
            }
            acc += x;
        }
        acc
    }

    /// Evaluates with each variable replaced by a univariate polynomial.
    pub fn eval_uni(&self, vals: &[UniPoly]) -> UniPoly {
        let mut powers: Vec<Vec<UniPoly>> = vals.iter().map(|p| vec![UniPoly::one(), p.clone()]).collect();
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut x = UniPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &vals[i];
                    powers[i].push(next);
                }
                x = &x * &powers[i][e];
            }
            acc = &acc + &x;
        }
        acc
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            MPoly::add_term(&mut terms, *m, c.clone());
        }
        MPoly { terms }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            MPoly::add_term(&mut terms, *m, -c.clone());
        }
        MPoly { terms }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m = *m1;
                for i in 0..MAX_VARS {
                    m[i] += m2[i];
                }
                MPoly::add_term(&mut terms, m, c1 * c2);
            }
        }
        MPoly { terms }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::q;
    use super::*;

    #[test]
    fn substitution_and_division() {
        let y0 = MPoly::var(0);
        let y1 = MPoly::var(1);
        let p = &(&y0 * &y0) + &(&y0 * &y1);
        let swapped = p.substitute(&[y1.clone(), y0.clone()]);
        assert_eq!(swapped, &(&y1 * &y1) + &(&y0 * &y1));
        let d = p.div_var(0).unwrap();
        assert_eq!(d, &y0 + &y1);
        assert!(p.div_var(1).is_none());
        assert_eq!(p.eval(&[q(2), q(3)]), q(10));
        assert_eq!(p.negate_vars(), p);
        assert_eq!(y0.negate_vars(), -&y0);
    }

    #[test]
    fn univariate_evaluation() {
        let y0 = MPoly::var(0);
        let p = &(&y0 * &y0) - &MPoly::one();
        let t = UniPoly::linear(q(0), q(1));
        assert_eq!(p.eval_uni(&[t]), UniPoly::new(vec![q(-1), q(0), q(1)]));
    }
}
