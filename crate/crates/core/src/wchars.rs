//! Conjugacy classes, character tables of the small Weyl groups and
//! isotypic decompositions of induced modules.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{q, QMatrix, Q};
use crate::modforms::{GramFamily, InducedModule};
use crate::weyl::{WeylElement, WeylGroup};

/// Partition of `W` into conjugacy classes; the class of the identity comes first,
/// the rest ordered by their smallest element.
pub fn conj_classes(g: &WeylGroup) -> Vec<Vec<WeylElement>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in g.elements() {
        if seen[x.index()] {
            continue;
        }
        let mut class: Vec<WeylElement> = g.elements().map(|y| g.mul(g.mul(y, x), g.inv(y))).collect();
        class.sort();
        class.dedup();
        for c in &class {
            seen[c.index()] = true;
        }
        out.push(class);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Irrep {
    pub label: String,
    pub dim: i64,
    pub values: Vec<i64>,
}

/// A validated character table with classes matched to the group.
#[derive(Clone, Debug, Serialize)]
pub struct CharTable {
    pub group: String,
    pub classes: Vec<ClassInfo>,
    pub irreps: Vec<Irrep>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

struct Embedded {
    reps: &'static [&'static [usize]],
    rows: &'static [(&'static str, &'static [i64])],
}

// representatives are words in the simple reflections (0-based)
const A1: Embedded = Embedded {
    reps: &[&[], &[0]],
    rows: &[("triv", &[1, 1]), ("sgn", &[1, -1])],
};

const A1XA1: Embedded = Embedded {
    reps: &[&[], &[0], &[1], &[0, 1]],
    rows: &[
        ("triv.triv", &[1, 1, 1, 1]),
        ("sgn.triv", &[1, -1, 1, -1]),
        ("triv.sgn", &[1, 1, -1, -1]),
        ("sgn.sgn", &[1, -1, -1, 1]),
    ],
};

const A2: Embedded = Embedded {
    reps: &[&[], &[0], &[0, 1]],
    rows: &[("3", &[1, 1, 1]), ("21", &[2, 0, -1]), ("111", &[1, -1, 1])],
};

// simple roots: 0 long (e1-e2), 1 short (e2); bipartition labels
const B2: Embedded = Embedded {
    reps: &[&[], &[0], &[1], &[0, 1], &[0, 1, 0, 1]],
    rows: &[
        ("2x0", &[1, 1, 1, 1, 1]),
        ("11x0", &[1, -1, 1, -1, 1]),
        ("1x1", &[2, 0, 0, 0, -2]),
        ("0x2", &[1, 1, -1, -1, 1]),
        ("0x11", &[1, -1, -1, 1, 1]),
    ],
};

// simple roots: 0 short, 1 long
const G2: Embedded = Embedded {
    reps: &[&[], &[0], &[1], &[0, 1], &[0, 1, 0, 1], &[0, 1, 0, 1, 0, 1]],
    rows: &[
        ("1_1", &[1, 1, 1, 1, 1, 1]),
        ("1_2", &[1, -1, -1, 1, 1, 1]),
        ("1_3", &[1, 1, -1, -1, 1, -1]),
        ("1_4", &[1, -1, 1, -1, 1, -1]),
        ("2_1", &[2, 0, 0, 1, -1, -2]),
        ("2_2", &[2, 0, 0, -1, -1, 2]),
    ],
};

fn embedded(label: &str) -> Option<&'static Embedded> {
    match label {
        "A1" => Some(&A1),
        "A1xA1" => Some(&A1XA1),
        "A2" => Some(&A2),
        "B2" => Some(&B2),
        "G2" => Some(&G2),
        _ => None,
    }
}

impl CharTable {
    /// Loads the embedded table for the group and checks both orthogonality relations.
    pub fn for_group(g: &WeylGroup) -> Result<Self> {
        let label = g.root_system().label().to_string();
        let data = embedded(&label).ok_or_else(|| Error::NoCharTable(label.clone()))?;
        let classes = conj_classes(g);
        if classes.len() != data.reps.len() {
            return Err(Error::Invalid(format!("{label}: class count mismatch")));
        }
        let mut class_of = vec![usize::MAX; g.order()];
        let mut infos = Vec::new();
        for (ci, word) in data.reps.iter().enumerate() {
            let rep = g.from_word(word);
            let class = classes
                .iter()
                .find(|c| c.contains(&rep))
                .expect("every element lies in a class");
            for x in class {
                if class_of[x.index()] != usize::MAX {
                    return Err(Error::Invalid(format!("{label}: representatives share a class")));
                }
                class_of[x.index()] = ci;
            }
            infos.push(ClassInfo {
                representative: g.format(rep),
                size: class.len(),
            });
        }
        let irreps = data
            .rows
            .iter()
            .map(|(l, v)| Irrep {
                label: l.to_string(),
                dim: v[0],
                values: v.to_vec(),
            })
            .collect();
        let t = CharTable {
            group: label,
            classes: infos,
            irreps,
            class_of,
        };
        t.validate(g.order())?;
        Ok(t)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::for_group(&WeylGroup::from_label(label)?)
    }

    fn validate(&self, order: usize) -> Result<()> {
        let n = self.irreps.len();
        for i in 0..n {
            for j in 0..n {
                let s: i64 = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, info)| info.size as i64 * self.irreps[i].values[c] * self.irreps[j].values[c])
                    .sum();
                let want = if i == j { order as i64 } else { 0 };
                if s != want {
                    return Err(Error::Invalid(format!(
                        "{}: row orthogonality fails for {} and {}",
                        self.group, self.irreps[i].label, self.irreps[j].label
                    )));
                }
            }
        }
        for a in 0..self.classes.len() {
            for b in 0..self.classes.len() {
                let s: i64 = self.irreps.iter().map(|r| r.values[a] * r.values[b]).sum();
                let want = if a == b { (order / self.classes[a].size) as i64 } else { 0 };
                if s != want {
                    return Err(Error::Invalid(format!("{}: column orthogonality fails", self.group)));
                }
            }
        }
        Ok(())
    }

    pub fn class_of(&self, w: WeylElement) -> usize {
        self.class_of[w.index()]
    }

    pub fn order(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn irrep(&self, label: &str) -> Result<&Irrep> {
        self.irreps
            .iter()
            .find(|r| r.label == label)
            .ok_or_else(|| Error::Invalid(format!("no W-type {label:?} for {}", self.group)))
    }

    pub fn value(&self, label: &str, w: WeylElement) -> Result<i64> {
        Ok(self.irrep(label)?.values[self.class_of(w)])
    }

    /// Multiplicities `⟨χ, μ⟩` of a class function.
    pub fn multiplicities(&self, chi: &[Q]) -> Vec<(String, Q)> {
        let order = Q::from_integer((self.order() as i64).into());
        self.irreps
            .iter()
            .map(|r| {
                let s: Q = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, info)| &chi[c] * q(info.size as i64 * r.values[c]))
                    .fold(Q::zero(), |a, b| a + b);
                (r.label.clone(), s / &order)
            })
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("irrep");
        for c in &self.classes {
            out.push_str(&format!("\t{}({})", c.representative, c.size));
        }
        out.push('\n');
        for r in &self.irreps {
            out.push_str(&r.label);
            for v in &r.values {
                out.push_str(&format!("\t{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Character of `π|_W` on each class.
pub fn module_w_character(m: &InducedModule, table: &CharTable) -> Vec<Q> {
    let g = m.group();
    let mut chi = vec![None; table.classes.len()];
    for w in g.elements() {
        let c = table.class_of(w);
        if chi[c].is_none() {
            let p = m.pi_t(w);
            let tr = (0..p.rows()).map(|i| p[(i, i)].clone()).fold(Q::zero(), |a, b| a + b);
            chi[c] = Some(tr);
        }
    }
    chi.into_iter().map(|x| x.expect("every class is hit")).collect()
}

/// Integer multiplicities of the W-types in the module, as a map from label.
pub fn w_structure(m: &InducedModule, table: &CharTable) -> Result<BTreeMap<String, i64>> {
    let chi = module_w_character(m, table);
    table
        .multiplicities(&chi)
        .into_iter()
        .map(|(l, v)| {
            if !v.is_integer() {
                return Err(Error::Invalid(format!("non-integral multiplicity for {l}")));
            }
            Ok((l, v.to_integer().try_into().expect("small multiplicity")))
        })
        .collect()
}

/// `(dim μ/|W|) Σ_w χ_μ(w) π(t_w)`.
pub fn isotypic_projector(m: &InducedModule, table: &CharTable, label: &str) -> Result<QMatrix> {
    let g = m.group();
    let r = table.irrep(label)?;
    let n = m.dim();
    let mut acc = QMatrix::zeros(n, n);
    for w in g.elements() {
        let c = r.values[table.class_of(w)];
        if c != 0 {
            acc = acc.add(&m.pi_t(w).scale(&q(c)));
        }
    }
    Ok(acc.scale(&(q(r.dim) / q(g.order() as i64))))
}

/// One vector per copy of `μ`: the image of the projector intersected with
/// the `ε`-eigenspace of a simple reflection that is one-dimensional in `μ`.
/// Restricting a W-invariant form to these vectors gives the form on the
/// multiplicity space up to a positive factor.
pub fn copy_vectors(m: &InducedModule, table: &CharTable, label: &str) -> Result<Vec<Vec<Q>>> {
    let g = m.group();
    let r = table.irrep(label)?;
    let proj = isotypic_projector(m, table, label)?;
    let (image, _) = proj.column_basis();
    if image.is_empty() {
        return Err(Error::AbsentType(label.to_string()));
    }
    if r.dim == 1 {
        return Ok(image);
    }
    for i in 0..g.rank() {
        let s = g.simple(i);
        let chi_s = r.values[table.class_of(s)];
        // eigenvalue +1 has multiplicity (dim + χ(s))/2
        for eps in [1i64, -1] {
            if (r.dim + eps * chi_s) / 2 != 1 {
                continue;
            }
            let pis = m.pi_t(s);
            let shifted = pis.sub(&QMatrix::identity(m.dim()).scale(&q(eps)));
            let b = QMatrix::from_columns(&image);
            let kernel = shifted.mul(&b).nullspace();
            return Ok(kernel.into_iter().map(|c| b.mul_vec(&c)).collect());
        }
    }
    Err(Error::Invalid(format!("no simple reflection isolates a line in {label}")))
}

/// Gram family restricted to the copy vectors of `μ`.
pub fn isotypic_block(g: &GramFamily, m: &InducedModule, table: &CharTable, label: &str) -> Result<GramFamily> {
    let vs = copy_vectors(m, table, label)?;
    let labels = (0..vs.len()).map(|i| format!("{label}#{}", i + 1)).collect();
    Ok(crate::modforms::restrict_to(g, &vs, labels))
}

/// Embedded W-structure data for the subregular verifications:
/// irreducible label, orbit dimension, W-types with multiplicity, lowest W-type.
#[derive(Clone, Debug, Serialize)]
pub struct IrreducibleData {
    pub label: &'static str,
    pub orbit_dim: i64,
    pub w_types: &'static [(&'static str, i64)],
    pub lowest: &'static str,
}

pub const B2_SUBREGULAR: &[IrreducibleData] = &[
    IrreducibleData {
        label: "0",
        orbit_dim: 0,
        w_types: &[("2x0", 1), ("1x1", 1)],
        lowest: "2x0",
    },
    IrreducibleData {
        label: "A1",
        orbit_dim: 2,
        w_types: &[("11x0", 1)],
        lowest: "11x0",
    },
    IrreducibleData {
        label: "~A1,triv",
        orbit_dim: 3,
        w_types: &[("1x1", 1), ("0x11", 1)],
        lowest: "1x1",
    },
    IrreducibleData {
        label: "~A1,sgn",
        orbit_dim: 3,
        w_types: &[("0x2", 1)],
        lowest: "0x2",
    },
];

pub const G2_SUBREGULAR: &[IrreducibleData] = &[
    IrreducibleData {
        label: "0",
        orbit_dim: 0,
        w_types: &[("1_1", 1), ("2_1", 1)],
        lowest: "1_1",
    },
    IrreducibleData {
        label: "A1l",
        orbit_dim: 2,
        w_types: &[("1_3", 1)],
        lowest: "1_3",
    },
    IrreducibleData {
        label: "A1s",
        orbit_dim: 3,
        w_types: &[("2_2", 1)],
        lowest: "2_2",
    },
    IrreducibleData {
        label: "G2(a1),triv",
        orbit_dim: 4,
        w_types: &[("2_1", 1), ("1_2", 1)],
        lowest: "2_1",
    },
    IrreducibleData {
        label: "G2(a1),refl",
        orbit_dim: 4,
        w_types: &[("1_4", 1)],
        lowest: "1_4",
    },
];

/// Expected W-structure of the standard modules at the subregular parameter.
pub const B2_STANDARD: &[(&str, &[(&str, i64)])] = &[
    ("0", &[("2x0", 1), ("11x0", 1), ("1x1", 2), ("0x2", 1), ("0x11", 1)]),
    ("A1", &[("11x0", 1), ("1x1", 1), ("0x11", 1)]),
];

pub const G2_STANDARD: &[(&str, &[(&str, i64)])] = &[
    (
        "0",
        &[("1_1", 1), ("1_2", 1), ("1_3", 1), ("1_4", 1), ("2_1", 2), ("2_2", 2)],
    ),
    ("A1l", &[("1_3", 1), ("2_1", 1), ("2_2", 1), ("1_2", 1)]),
    ("A1s", &[("2_2", 1), ("2_1", 1), ("1_4", 1), ("1_2", 1)]),
];

pub fn subregular_data(label: &str) -> Result<&'static [IrreducibleData]> {
    match label {
        "B2" => Ok(B2_SUBREGULAR),
        "G2" => Ok(G2_SUBREGULAR),
        _ => Err(Error::NoCharTable(format!("no subregular data for {label}"))),
    }
}

#[cfg(test)]
mod tests;
