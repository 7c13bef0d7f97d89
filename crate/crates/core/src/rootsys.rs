//! Reduced root systems in explicit coordinates with a conjugation-invariant
//! parameter function.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{dot, fmt_q_vec, q, qf, QMatrix, Q};

/// A root given by its simple-root coordinates and ambient vectors.
#[derive(Clone, Debug, Serialize)]
pub struct Root {
    pub coords: Vec<i64>,
    #[serde(with = "crate::exactfield::qser::vec")]
    pub vector: Vec<Q>,
    #[serde(with = "crate::exactfield::qser::vec")]
    pub coroot: Vec<Q>,
    pub height: i64,
    #[serde(with = "crate::exactfield::qser")]
    pub k: Q,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Vec<Q>>,
    simple_coroots: Vec<Vec<Q>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    k_simple: Vec<Q>,
    coweights: Vec<Vec<Q>>,
    coweight_matrix: QMatrix,
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()
}

fn diff(n: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = unit(n, i);
    v[j] = q(-1);
    v
}

fn coroot_of(v: &[Q]) -> Vec<Q> {
    let n2 = dot(v, v);
    v.iter().map(|x| x * q(2) / &n2).collect()
}

/// Simple roots for a supported label, in ambient coordinates.
fn simple_roots_for(label: &str) -> Result<Vec<Vec<Q>>> {
    let bad = || Error::UnsupportedType(label.to_string());
    if label == "A1xA1" {
        return Ok(vec![diff(4, 0, 1), diff(4, 2, 3)]);
    }
    if label == "G2" {
        return Ok(vec![
            vec![qf(2, 3), qf(-1, 3), qf(-1, 3)],
            vec![q(-1), q(1), q(0)],
        ]);
    }
    let mut chars = label.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    match (kind, n) {
        ('A', 1..=4) => Ok((0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        ('B', 2..=4) => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1));
            Ok(s)
        }
        ('C', 2..=4) => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1).into_iter().map(|x| x * q(2)).collect());
            Ok(s)
        }
        ('D', 4) => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![q(0); n];
            last[n - 2] = q(1);
            last[n - 1] = q(1);
            s.push(last);
            Ok(s)
        }
        _ => Err(bad()),
    }
}

impl RootSystem {
    /// Builds the root system for `label` with `k ≡ 1`.
    pub fn new(label: &str) -> Result<Self> {
        Self::with_parameters(label, None)
    }

    /// Builds the root system; `k` assigns a positive parameter to each simple root.
    pub fn with_parameters(label: &str, k: Option<&[Q]>) -> Result<Self> {
        let simple_roots = simple_roots_for(label)?;
        let rank = simple_roots.len();
        let ambient_dim = simple_roots[0].len();
        let simple_coroots: Vec<_> = simple_roots.iter().map(|a| coroot_of(a)).collect();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let c = dot(&simple_roots[i], &simple_coroots[j]);
                        assert!(c.is_integer(), "non-integral Cartan entry");
                        c.to_integer().try_into().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();

        let reflect = |b: &[i64], j: usize| -> Vec<i64> {
            let p: i64 = (0..rank).map(|i| b[i] * cartan[i][j]).sum();
            let mut out = b.to_vec();
            out[j] -= p;
            out
        };
        let orbit = |start: Vec<i64>| -> HashSet<Vec<i64>> {
            let mut seen = HashSet::from([start.clone()]);
            let mut stack = vec![start];
            while let Some(b) = stack.pop() {
                for j in 0..rank {
                    let c = reflect(&b, j);
                    if seen.insert(c.clone()) {
                        stack.push(c);
                    }
                }
            }
            seen
        };
        let simple_coords = |i: usize| -> Vec<i64> { (0..rank).map(|j| i64::from(i == j)).collect() };
        let orbits: Vec<HashSet<Vec<i64>>> = (0..rank).map(|i| orbit(simple_coords(i))).collect();

        let k_simple: Vec<Q> = match k {
            None => vec![q(1); rank],
            Some(k) => {
                if k.len() != rank {
                    return Err(Error::Dimension(format!("expected {rank} parameters, got {}", k.len())));
                }
                if k.iter().any(|x| x <= &Q::zero()) {
                    return Err(Error::Invalid("parameters must be positive".into()));
                }
                k.to_vec()
            }
        };
        for i in 0..rank {
            for j in 0..rank {
                if orbits[i].contains(&simple_coords(j)) && k_simple[i] != k_simple[j] {
                    return Err(Error::NonInvariantParameter(format!(
                        "simple roots {} and {} are conjugate",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let mut all: HashSet<Vec<i64>> = HashSet::new();
        for o in &orbits {
            all.extend(o.iter().cloned());
        }
        let mut pos: Vec<Vec<i64>> = all.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let positive: Vec<Root> = pos
            .iter()
            .map(|c| {
                let vector: Vec<Q> = (0..ambient_dim)
                    .map(|d| (0..rank).map(|i| q(c[i]) * &simple_roots[i][d]).sum())
                    .collect();
                let coroot = coroot_of(&vector);
                let cls = (0..rank).find(|&i| orbits[i].contains(c)).expect("root in some orbit");
                Root {
                    coords: c.clone(),
                    height: c.iter().sum(),
                    k: k_simple[cls].clone(),
                    vector,
                    coroot,
                }
            })
            .collect();
        let index = positive.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();

        let c_t = QMatrix::from_fn(rank, rank, |i, j| q(cartan[j][i]));
        let coweight_matrix = c_t.inverse().expect("Cartan matrix is invertible");
        let coweights = (0..rank)
            .map(|j| {
                (0..ambient_dim)
                    .map(|d| (0..rank).map(|m| &coweight_matrix[(j, m)] * &simple_coroots[m][d]).sum())
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            label: label.to_string(),
            rank,
            ambient_dim,
            simple_roots,
            simple_coroots,
            cartan,
            positive,
            index,
            k_simple,
            coweights,
            coweight_matrix,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Vec<Q>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<Q>] {
        &self.simple_coroots
    }

    /// `C[i][j] = (α_i, α_j∨)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn k_simple(&self) -> &[Q] {
        &self.k_simple
    }

    pub fn is_constant_k(&self) -> bool {
        self.k_simple.iter().all(|k| k.is_one())
    }

    /// Index of the positive root with the given simple coordinates, and
    /// whether the coordinates describe a positive (true) or negative root.
    pub fn root_index(&self, coords: &[i64]) -> Option<(usize, bool)> {
        if let Some(&i) = self.index.get(coords) {
            return Some((i, true));
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&i| (i, false))
    }

    /// Index of the positive root equal to the simple root `i`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        let c: Vec<i64> = (0..self.rank).map(|j| i64::from(i == j)).collect();
        self.index[&c]
    }

    /// Simple coordinates of `s_j(β)`.
    pub fn reflect_coords(&self, b: &[i64], j: usize) -> Vec<i64> {
        let p: i64 = (0..self.rank).map(|i| b[i] * self.cartan[i][j]).sum();
        let mut out = b.to_vec();
        out[j] -= p;
        out
    }

    pub fn pairing(&self, v: &[Q], u: &[Q]) -> Result<Q> {
        if v.len() != self.ambient_dim || u.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} in ambient dimension {}",
                v.len(),
                u.len(),
                self.ambient_dim
            )));
        }
        Ok(dot(v, u))
    }

    /// Fundamental coweights `ω_j∨`, with `(α_i, ω_j∨) = δ_ij`.
    pub fn fundamental_coweights(&self) -> &[Vec<Q>] {
        &self.coweights
    }

    /// Half-sum of the positive coroots of the sub-system spanned by `J`.
    pub fn rho_check(&self, j: &[usize]) -> Vec<Q> {
        let mut out = vec![q(0); self.ambient_dim];
        for r in &self.positive {
            let inside = r.coords.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(&i));
            if inside {
                for (o, c) in out.iter_mut().zip(&r.coroot) {
                    *o += c;
                }
            }
        }
        out.iter().map(|x| x / q(2)).collect()
    }

    /// `Σ_{i∈J} k_i ω_i∨` restricted to the span of the coroots of `J`:
    /// the unique `λ` in that span with `(α_i, λ) = k_i` for `i ∈ J`.
    pub fn levi_k_rho(&self, j: &[usize]) -> Vec<Q> {
        let n = j.len();
        if n == 0 {
            return vec![q(0); self.ambient_dim];
        }
        let m = QMatrix::from_fn(n, n, |a, b| q(self.cartan[j[a]][j[b]]));
        let rhs: Vec<Q> = j.iter().map(|&i| self.k_simple[i].clone()).collect();
        let c = m.solve(&rhs).expect("Cartan submatrix invertible");
        let mut out = vec![q(0); self.ambient_dim];
        for (a, &i) in j.iter().enumerate() {
            for d in 0..self.ambient_dim {
                out[d] += &c[a] * &self.simple_coroots[i][d];
            }
        }
        out
    }

    /// Coordinates of `λ ∈ V∨` in the basis of simple coroots.
    pub fn coroot_coords(&self, lambda: &[Q]) -> Result<Vec<Q>> {
        if lambda.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "weight {} has {} coordinates, expected {}",
                fmt_q_vec(lambda),
                lambda.len(),
                self.ambient_dim
            )));
        }
        let pairings: Vec<Q> = self.simple_roots.iter().map(|a| dot(a, lambda)).collect();
        let c: Vec<Q> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| &self.coweight_matrix[(j, i)] * &pairings[j]).sum())
            .collect();
        let back = self.from_coroot_coords(&c);
        if back != lambda {
            return Err(Error::Invalid(format!(
                "weight {} is not in the span of the coroots",
                fmt_q_vec(lambda)
            )));
        }
        Ok(c)
    }

    pub fn from_coroot_coords(&self, c: &[Q]) -> Vec<Q> {
        (0..self.ambient_dim)
            .map(|d| (0..self.rank).map(|i| &c[i] * &self.simple_coroots[i][d]).sum())
            .collect()
    }

    /// Simple-root pairings `(α_i, λ)`.
    pub fn simple_pairings(&self, lambda: &[Q]) -> Vec<Q> {
        self.simple_roots.iter().map(|a| dot(a, lambda)).collect()
    }

    /// `(β, λ)` for a positive root index.
    pub fn root_pairing(&self, beta: usize, lambda: &[Q]) -> Q {
        dot(&self.positive[beta].vector, lambda)
    }

    pub fn is_dominant_regular(&self, lambda: &[Q]) -> bool {
        self.simple_pairings(lambda).iter().all(|x| x > &Q::zero())
    }

    /// Parses a weight literal and checks that it lies in the coroot span.
    pub fn parse_weight(&self, s: &str) -> Result<Vec<Q>> {
        let v = crate::exactfield::parse_q_vec(s)?;
        self.coroot_coords(&v)?;
        Ok(v)
    }

    /// Simple-root labels such as "s1".
    pub fn reflection_label(&self, i: usize) -> String {
        format!("s{}", i + 1)
    }
}
