//! Weyl groups, enumerated eagerly with multiplication tables, reduced
//! words, root permutations and parabolic coset combinatorics.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::{q, QMatrix, Q};
use crate::rootsys::RootSystem;

/// A Weyl group element, stored as its index in the enumerated group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A root of the full system: positive root index plus sign.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub index: usize,
    pub positive: bool,
}

pub struct WeylGroup {
    rs: RootSystem,
    perms: Vec<Vec<u16>>,
    lookup: HashMap<Vec<u16>, u32>,
    mult: Vec<u32>,
    inverse: Vec<u32>,
    length: Vec<u32>,
    words: Vec<Vec<usize>>,
    matrices: Vec<QMatrix>,
    simple: Vec<u32>,
    reflections: Vec<u32>,
    w0: u32,
    delta_simple: Vec<usize>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({}, order {})", self.rs.label(), self.order())
    }
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.num_positive();
        let rank = rs.rank();
        let encode = |coords: &[i64]| -> u16 {
            let (i, pos) = rs.root_index(coords).expect("image of a root is a root");
            if pos {
                i as u16
            } else {
                (i + n) as u16
            }
        };
        let signed_coords = |k: usize| -> Vec<i64> {
            if k < n {
                rs.positive_roots()[k].coords.clone()
            } else {
                rs.positive_roots()[k - n].coords.iter().map(|c| -c).collect()
            }
        };
        let simple_perms: Vec<Vec<u16>> = (0..rank)
            .map(|j| (0..2 * n).map(|k| encode(&rs.reflect_coords(&signed_coords(k), j))).collect())
            .collect();
        let simple_mats: Vec<QMatrix> = (0..rank)
            .map(|j| {
                let a = &rs.simple_roots()[j];
                let ac = &rs.simple_coroots()[j];
                let d = rs.ambient_dim();
                QMatrix::from_fn(d, d, |r, c| {
                    let id = if r == c { q(1) } else { q(0) };
                    id - &ac[r] * &a[c]
                })
            })
            .collect();

        let id: Vec<u16> = (0..2 * n as u16).collect();
        let mut perms = vec![id.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut matrices = vec![QMatrix::identity(rs.ambient_dim())];
        let mut lookup = HashMap::from([(id, 0u32)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for j in 0..rank {
                let p: Vec<u16> = simple_perms[j].iter().map(|&k| perms[w][k as usize]).collect();
                if lookup.contains_key(&p) {
                    continue;
                }
                let idx = perms.len() as u32;
                lookup.insert(p.clone(), idx);
                perms.push(p);
                let mut word = words[w].clone();
                word.push(j);
                words.push(word);
                matrices.push(matrices[w].mul(&simple_mats[j]));
                queue.push_back(idx as usize);
            }
        }
        let order = perms.len();
        let length: Vec<u32> = perms
            .iter()
            .map(|p| p[..n].iter().filter(|&&k| k as usize >= n).count() as u32)
            .collect();
        let mut mult = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                let p: Vec<u16> = perms[y].iter().map(|&k| perms[x][k as usize]).collect();
                mult[x * order + y] = lookup[&p];
            }
        }
        let inverse: Vec<u32> = (0..order)
            .map(|x| (0..order).find(|&y| mult[x * order + y] == 0).unwrap() as u32)
            .collect();
        let simple: Vec<u32> = (0..rank).map(|j| lookup[&simple_perms[j]]).collect();
        let w0 = (0..order).max_by_key(|&w| length[w]).unwrap() as u32;
        let delta_simple = (0..rank)
            .map(|i| {
                let k = perms[w0 as usize][rs.simple_root_index(i)] as usize;
                let pos = k - n;
                let coords = &rs.positive_roots()[pos].coords;
                coords.iter().position(|&c| c == 1).unwrap()
            })
            .collect();
        let reflections = (0..n)
            .map(|b| {
                let beta = &rs.positive_roots()[b];
                let p: Vec<u16> = (0..2 * n)
                    .map(|k| {
                        let g = signed_coords(k);
                        let gv: Vec<Q> = {
                            let sign = if k < n { q(1) } else { q(-1) };
                            rs.positive_roots()[k % n].vector.iter().map(|x| x * &sign).collect()
                        };
                        let c = crate::exactfield::dot(&gv, &beta.coroot);
                        let c: i64 = c.to_integer().try_into().unwrap();
                        let img: Vec<i64> = g.iter().zip(&beta.coords).map(|(x, y)| x - c * y).collect();
                        encode(&img)
                    })
                    .collect();
                lookup[&p]
            })
            .collect();
        WeylGroup {
            rs,
            perms,
            lookup,
            mult,
            inverse,
            length,
            words,
            matrices,
            simple,
            reflections,
            w0,
            delta_simple,
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(RootSystem::new(label)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        WeylElement(self.simple[i])
    }

    pub fn w0(&self) -> WeylElement {
        WeylElement(self.w0)
    }

    pub fn mul(&self, x: WeylElement, y: WeylElement) -> WeylElement {
        WeylElement(self.mult[x.index() * self.order() + y.index()])
    }

    pub fn mul_all(&self, xs: &[WeylElement]) -> WeylElement {
        xs.iter().fold(self.identity(), |acc, &x| self.mul(acc, x))
    }

    pub fn inv(&self, x: WeylElement) -> WeylElement {
        WeylElement(self.inverse[x.index()])
    }

    pub fn length(&self, x: WeylElement) -> usize {
        self.length[x.index()] as usize
    }

    /// Sign character `(-1)^ℓ(x)`.
    pub fn sign(&self, x: WeylElement) -> i64 {
        if self.length(x) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn reduced_word(&self, x: WeylElement) -> &[usize] {
        &self.words[x.index()]
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.identity(), |acc, &i| self.mul(acc, self.simple(i)))
    }

    /// All reduced words of `x`.
    pub fn all_reduced_words(&self, x: WeylElement) -> Vec<Vec<usize>> {
        if self.length(x) == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in self.right_descents(x) {
            let y = self.mul(x, self.simple(i));
            for mut w in self.all_reduced_words(y) {
                w.push(i);
                out.push(w);
            }
        }
        out
    }

    /// Simple indices `i` with `ℓ(x s_i) < ℓ(x)`.
    pub fn right_descents(&self, x: WeylElement) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| !self.act_root(x, self.rs.simple_root_index(i)).positive)
            .collect()
    }

    /// Image of the positive root `beta` under `w`.
    pub fn act_root(&self, w: WeylElement, beta: usize) -> SignedRoot {
        let n = self.rs.num_positive();
        let k = self.perms[w.index()][beta] as usize;
        if k < n {
            SignedRoot { index: k, positive: true }
        } else {
            SignedRoot { index: k - n, positive: false }
        }
    }

    /// Image of an arbitrary root under `w`.
    pub fn act_signed_root(&self, w: WeylElement, r: SignedRoot) -> SignedRoot {
        let img = self.act_root(w, r.index);
        if r.positive {
            img
        } else {
            SignedRoot { index: img.index, positive: !img.positive }
        }
    }

    /// Positive roots `β` with `xβ < 0`.
    pub fn inversion_set(&self, x: WeylElement) -> Vec<usize> {
        (0..self.rs.num_positive())
            .filter(|&b| !self.act_root(x, b).positive)
            .collect()
    }

    /// The reflection `s_β` of a positive root.
    pub fn reflection(&self, beta: usize) -> WeylElement {
        WeylElement(self.reflections[beta])
    }

    /// Matrix of `w` on the ambient space (the same matrix on V and V∨).
    pub fn matrix(&self, w: WeylElement) -> &QMatrix {
        &self.matrices[w.index()]
    }

    pub fn act_vector(&self, w: WeylElement, v: &[Q]) -> Vec<Q> {
        self.matrix(w).mul_vec(v)
    }

    /// Simple coordinates of `wα_i`.
    pub fn act_simple_coords(&self, w: WeylElement, i: usize) -> Vec<i64> {
        let r = self.act_root(w, self.rs.simple_root_index(i));
        let c = &self.rs.positive_roots()[r.index].coords;
        if r.positive {
            c.clone()
        } else {
            c.iter().map(|x| -x).collect()
        }
    }

    /// `δ(w) = w₀ w w₀`.
    pub fn delta(&self, w: WeylElement) -> WeylElement {
        self.mul(self.w0(), self.mul(w, self.w0()))
    }

    /// Index `δ(i)` with `-w₀ α_i = α_{δ(i)}`.
    pub fn delta_simple(&self, i: usize) -> usize {
        self.delta_simple[i]
    }

    pub fn delta_subset(&self, m: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = m.iter().map(|&i| self.delta_simple(i)).collect();
        out.sort_unstable();
        out
    }

    /// `δ(ω) = -w₀ ω`.
    pub fn delta_weight(&self, v: &[Q]) -> Vec<Q> {
        self.act_vector(self.w0(), v).into_iter().map(|x| -x).collect()
    }

    /// Whether `w` lies in the parabolic subgroup generated by `M`.
    pub fn in_parabolic(&self, w: WeylElement, m: &[usize]) -> bool {
        self.inversion_set(w).into_iter().all(|b| {
            self.rs.positive_roots()[b]
                .coords
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || m.contains(&i))
        })
    }

    pub fn parabolic_elements(&self, m: &[usize]) -> Vec<WeylElement> {
        self.elements().filter(|&w| self.in_parabolic(w, m)).collect()
    }

    pub fn longest_in(&self, m: &[usize]) -> WeylElement {
        self.parabolic_elements(m)
            .into_iter()
            .max_by_key(|&w| self.length(w))
            .unwrap()
    }

    /// `w⁰_M = w_{0,M} w₀`.
    pub fn w0_relative(&self, m: &[usize]) -> WeylElement {
        self.mul(self.longest_in(m), self.w0())
    }

    pub fn is_min_coset_rep(&self, x: WeylElement, m: &[usize]) -> bool {
        m.iter()
            .all(|&i| self.act_root(x, self.rs.simple_root_index(i)).positive)
    }

    /// Minimal length representatives of `W / W_M`, ordered by length.
    pub fn min_coset_reps(&self, m: &[usize]) -> Vec<WeylElement> {
        let mut v: Vec<WeylElement> = self.elements().filter(|&x| self.is_min_coset_rep(x, m)).collect();
        v.sort_by_key(|&x| (self.length(x), x));
        v
    }

    /// `z = c·m` with `c` minimal in `zW_M` and `m ∈ W_M`.
    pub fn coset_decompose(&self, z: WeylElement, m: &[usize]) -> (WeylElement, WeylElement) {
        let mut c = z;
        loop {
            let next = m
                .iter()
                .find(|&&i| !self.act_root(c, self.rs.simple_root_index(i)).positive);
            match next {
                Some(&i) => c = self.mul(c, self.simple(i)),
                None => break,
            }
        }
        (c, self.mul(self.inv(c), z))
    }

    /// Dot-separated reduced word, "1" for the identity.
    pub fn format(&self, x: WeylElement) -> String {
        let w = self.reduced_word(x);
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(".")
    }

    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s.is_empty() || s == "1" || s == "e" {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for part in s.split('.') {
            let i: usize = part
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .filter(|&i| i >= 1 && i <= self.rank())
                .ok_or_else(|| Error::Parse(format!("bad Weyl word {s:?}")))?;
            word.push(i - 1);
        }
        Ok(self.from_word(&word))
    }

    /// Element with the given action on positive roots, if any.
    pub fn from_root_permutation(&self, p: &[u16]) -> Option<WeylElement> {
        self.lookup.get(p).map(|&i| WeylElement(i))
    }

    pub fn root_permutation(&self, w: WeylElement) -> &[u16] {
        &self.perms[w.index()]
    }

    /// The unique element sending `from` to `to`, if `from` has trivial stabilizer.
    pub fn element_mapping(&self, from: &[Q], to: &[Q]) -> Option<WeylElement> {
        self.elements().find(|&w| self.act_vector(w, from) == to)
    }
}

/// Serializes an element as its reduced word given a group.
pub struct WordRef<'a>(pub &'a WeylGroup, pub WeylElement);

impl Serialize for WordRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.format(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::from_label(label).unwrap()
    }

    #[test]
    fn orders() {
        for (l, n) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48), ("D4", 192), ("A1xA1", 4)] {
            assert_eq!(group(l).order(), n, "{l}");
        }
    }

    #[test]
    fn b2_braid_relation() {
        let w = group("B2");
        let a = w.from_word(&[0, 1, 0, 1]);
        let b = w.from_word(&[1, 0, 1, 0]);
        assert_eq!(a, b);
        assert_eq!(a, w.w0());
        assert_eq!(w.length(w.w0()), 4);
        for x in w.elements() {
            assert_eq!(w.mul(x, w.inv(x)), w.identity());
        }
    }

    #[test]
    fn lengths_and_words_agree() {
        for l in ["A2", "B2", "G2", "A3"] {
            let w = group(l);
            for x in w.elements() {
                assert_eq!(w.length(x), w.inversion_set(x).len());
                assert_eq!(w.reduced_word(x).len(), w.length(x));
                assert_eq!(w.from_word(w.reduced_word(x)), x);
                for y in w.elements() {
                    assert!(w.length(w.mul(x, y)) <= w.length(x) + w.length(y));
                }
            }
            assert_eq!(w.inversion_set(w.w0()).len(), w.root_system().num_positive());
        }
    }

    #[test]
    fn root_action_matches_matrices() {
        for l in ["B2", "G2", "A3"] {
            let w = group(l);
            let rs = w.root_system();
            for x in w.elements() {
                for (b, root) in rs.positive_roots().iter().enumerate() {
                    let img = w.act_root(x, b);
                    let v = w.act_vector(x, &root.vector);
                    let expect: Vec<Q> = rs.positive_roots()[img.index]
                        .vector
                        .iter()
                        .map(|c| if img.positive { c.clone() } else { -c.clone() })
                        .collect();
                    assert_eq!(v, expect);
                }
            }
        }
    }

    #[test]
    fn coset_combinatorics() {
        let w = group("B2");
        assert_eq!(w.min_coset_reps(&[]).len(), 8);
        assert_eq!(w.min_coset_reps(&[0, 1]), vec![w.identity()]);
        assert_eq!(w.min_coset_reps(&[0]).len(), 4);
        for z in w.elements() {
            let (c, m) = w.coset_decompose(z, &[0]);
            assert_eq!(w.mul(c, m), z);
            assert!(w.is_min_coset_rep(c, &[0]));
            assert!(w.in_parabolic(m, &[0]));
        }
    }

    #[test]
    fn delta_behaviour() {
        let b2 = group("B2");
        assert!(b2.elements().all(|x| b2.delta(x) == x));
        let a2 = group("A2");
        assert_eq!(a2.delta(a2.simple(0)), a2.simple(1));
        let g2 = group("G2");
        assert!(g2.elements().all(|x| g2.delta(g2.delta(x)) == x));
    }

    #[test]
    fn relative_longest_element() {
        for l in ["B2", "G2", "A2"] {
            let w = group(l);
            for m in [vec![], vec![0], vec![1], vec![0, 1]] {
                let lhs = w.mul(w.w0(), w.longest_in(&w.delta_subset(&m)));
                assert_eq!(lhs, w.w0_relative(&m));
            }
        }
    }

    #[test]
    fn word_format_round_trip() {
        let w = group("G2");
        for x in w.elements() {
            assert_eq!(w.parse(&w.format(x)).unwrap(), x);
        }
        assert!(w.parse("s3").is_err());
        assert_eq!(w.all_reduced_words(w.w0()).len(), 2);
    }
}
