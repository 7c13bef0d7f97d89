//! Subregular central character in B2 and G2: Jantzen data per W-type,
//! attribution of levels to irreducibles by lowest W-types, and the
//! resulting hermitian KL table.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{poly, Report};
use crate::error::{Error, Result};
use crate::exactfield::{q, qf, RatFun, UniPoly, Q};
use crate::jantzen::{default_delta, dvr_diagonalize, sign_char, unit_sign, verify_bookkeeping, JantzenReport};
use crate::langdata::{hkl_assemble, HklPoly, LevelConstituent};
use crate::modforms::{InducedDatum, InducedModule, Normalization};
use crate::wchars::{isotypic_block, w_structure, CharTable, IrreducibleData};
use crate::weyl::WeylGroup;

/// Jantzen data of one family, whole and per isotypic component.
#[derive(Clone, Debug)]
pub struct FamilyRun {
    pub report: JantzenReport,
    pub gram: crate::modforms::GramFamily,
    pub w_structure: BTreeMap<String, i64>,
    /// Report on the copy vectors of each W-type occurring.
    pub per_type: BTreeMap<String, JantzenReport>,
    /// Determinant of each isotypic block.
    pub block_det: BTreeMap<String, RatFun>,
}

impl FamilyRun {
    /// `(order, sign)` of every copy of `mu`.
    pub fn copies(&self, mu: &str) -> Vec<(usize, i32)> {
        self.per_type
            .get(mu)
            .map(|r| r.diagonal.iter().map(|d| (d.order, d.sign)).collect())
            .unwrap_or_default()
    }

    fn copies_at(&self, mu: &str, level: usize) -> Vec<i32> {
        self.copies(mu).into_iter().filter(|c| c.0 == level).map(|c| c.1).collect()
    }

    fn max_level(&self) -> usize {
        self.per_type.values().flat_map(|r| r.orders()).max().unwrap_or(0)
    }
}

pub fn run_family(g: &Arc<WeylGroup>, table: &CharTable, datum: &InducedDatum, t0: &Q) -> Result<FamilyRun> {
    let m = InducedModule::new(g.clone(), datum)?;
    let gram = m.gram_family(&Normalization::Auto)?;
    let report = dvr_diagonalize(&gram, t0)?;
    let ws = w_structure(&m, table)?;
    let mut per_type = BTreeMap::new();
    let mut block_det = BTreeMap::new();
    for (mu, &mult) in &ws {
        if mult == 0 {
            continue;
        }
        let block = isotypic_block(&gram, &m, table, mu)?;
        block_det.insert(mu.clone(), block.entries.det());
        per_type.insert(mu.clone(), dvr_diagonalize(&block, t0)?);
    }
    Ok(FamilyRun {
        report,
        gram,
        w_structure: ws,
        per_type,
        block_det,
    })
}

/// An irreducible placed at a level, with the signs of its lowest W-type copies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attribution {
    pub level: usize,
    pub label: String,
    pub multiplicity: i64,
    pub lowest_signs: Vec<i32>,
}

impl Attribution {
    pub fn signed(&self) -> i64 {
        self.lowest_signs.iter().map(|&s| s as i64).sum()
    }
}

/// All nonnegative integer solutions of `Σ c_L · types(L) = counts`.
fn decompositions(counts: &BTreeMap<&str, i64>, irr: &[IrreducibleData]) -> Vec<Vec<i64>> {
    fn go(
        i: usize,
        rest: &mut BTreeMap<String, i64>,
        irr: &[IrreducibleData],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == irr.len() {
            if rest.values().all(|&v| v == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let bound = irr[i]
            .w_types
            .iter()
            .map(|(mu, m)| rest.get(*mu).copied().unwrap_or(0) / m)
            .min()
            .unwrap_or(0);
        for c in 0..=bound.max(0) {
            for (mu, m) in irr[i].w_types {
                *rest.entry(mu.to_string()).or_default() -= c * m;
            }
            cur.push(c);
            go(i + 1, rest, irr, cur, out);
            cur.pop();
            for (mu, m) in irr[i].w_types {
                *rest.entry(mu.to_string()).or_default() += c * m;
            }
        }
    }
    let mut rest: BTreeMap<String, i64> = counts.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let mut out = vec![];
    go(0, &mut rest, irr, &mut vec![], &mut out);
    out
}

/// Splits every level into irreducibles by W-type accounting and reads the
/// sign of each from its lowest W-type.
pub fn attribute_levels(run: &FamilyRun, irr: &[IrreducibleData]) -> Result<Vec<Attribution>> {
    let mut out = vec![];
    for n in 0..=run.max_level() {
        let counts: BTreeMap<&str, i64> = run
            .per_type
            .keys()
            .map(|mu| (mu.as_str(), run.copies_at(mu, n).len() as i64))
            .filter(|(_, c)| *c > 0)
            .collect();
        if counts.is_empty() {
            continue;
        }
        let sols = decompositions(&counts, irr);
        let sol = match sols.len() {
            1 => &sols[0],
            0 => return Err(Error::Invalid(format!("level {n} is not a sum of the listed irreducibles"))),
            k => return Err(Error::Invalid(format!("level {n} splits in {k} ways"))),
        };
        for (i, l) in irr.iter().enumerate() {
            if sol[i] == 0 {
                continue;
            }
            let shared = irr
                .iter()
                .enumerate()
                .any(|(j, o)| j != i && sol[j] > 0 && o.w_types.iter().any(|(mu, _)| *mu == l.lowest));
            if shared {
                return Err(Error::Invalid(format!(
                    "lowest W-type {} of {} is shared at level {n}",
                    l.lowest, l.label
                )));
            }
            out.push(Attribution {
                level: n,
                label: l.label.to_string(),
                multiplicity: sol[i],
                lowest_signs: run.copies_at(l.lowest, n),
            });
        }
    }
    Ok(out)
}

fn dims_of(irr: &[IrreducibleData]) -> BTreeMap<String, i64> {
    irr.iter().map(|l| (l.label.to_string(), l.orbit_dim)).collect()
}

fn assemble_row(row: &str, atts: &[Attribution], irr: &[IrreducibleData]) -> Result<BTreeMap<String, HklPoly>> {
    let row_dim = irr
        .iter()
        .find(|l| l.label == row)
        .ok_or_else(|| Error::Invalid(format!("unknown label {row}")))?
        .orbit_dim;
    let contributions: Vec<LevelConstituent> = atts
        .iter()
        .map(|a| LevelConstituent {
            level: a.level,
            label: a.label.clone(),
            signed: a.signed(),
        })
        .collect();
    hkl_assemble(row_dim, &contributions, &dims_of(irr))
}

fn fmt_levels(atts: &[Attribution]) -> String {
    let mut by_level: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for a in atts {
        let sign = match a.signed().signum() {
            1 => "+",
            -1 => "-",
            _ => "0",
        };
        by_level.entry(a.level).or_default().push(format!("{sign}{}", a.label));
    }
    by_level
        .iter()
        .map(|(n, ls)| format!("{n}:{}", ls.join("&")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_copies(c: &[(usize, i32)]) -> String {
    c.iter()
        .map(|(o, s)| format!("{o}{}", sign_char(*s)))
        .collect::<Vec<_>>()
        .join(",")
}

fn fmt_signature(r: &JantzenReport, n: usize) -> String {
    let s = r.signature_of_level(n);
    format!("({},{})", s.pos, s.neg)
}

fn fmt_dims(d: &[usize]) -> String {
    format!("({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn fmt_structure(ws: &BTreeMap<String, i64>) -> String {
    ws.iter()
        .filter(|(_, &m)| m > 0)
        .map(|(k, m)| if *m == 1 { k.clone() } else { format!("{m}*{k}") })
        .collect::<Vec<_>>()
        .join("+")
}

fn expected_structure(list: &[(&str, i64)]) -> String {
    let ws: BTreeMap<String, i64> = list.iter().map(|(k, m)| (k.to_string(), *m)).collect();
    fmt_structure(&ws)
}

/// Compares an assembled table with `P(−q)` (all orientation numbers `+1`),
/// filling rows whose standard module is irreducible with the identity row.
fn table_checks(
    r: &mut Report,
    irr: &[IrreducibleData],
    kl: &[(&str, &[&str])],
    rows: &BTreeMap<String, BTreeMap<String, HklPoly>>,
    source: &str,
) {
    for (row, cols) in kl {
        for (l, p) in irr.iter().zip(cols.iter()) {
            let expected = poly(p).at_minus_q();
            let got = match rows.get(*row) {
                Some(m) => m.get(l.label).cloned().unwrap_or_default(),
                // standard module equal to the irreducible
                None => HklPoly::constant((*row == l.label) as i64),
            };
            r.compare(format!("P^h[{row} -> {}]", l.label), expected, source, got);
        }
    }
}

fn family_report(r: &mut Report, name: &str, run: &FamilyRun, source: &str) {
    r.info(format!("{name} W-types (order,sign)"), source, {
        run.per_type
            .iter()
            .map(|(mu, rep)| format!("{mu}:[{}]", fmt_copies(&rep.diagonal.iter().map(|d| (d.order, d.sign)).collect::<Vec<_>>())))
            .collect::<Vec<_>>()
            .join(" ")
    });
}

fn bookkeeping(run: &FamilyRun) -> Result<bool> {
    let pivots: Vec<RatFun> = run.report.diagonal.iter().map(|d| d.pivot.clone()).collect();
    let delta = default_delta(&pivots, &run.gram.entries, &run.report.t0);
    verify_bookkeeping(&run.report, &run.gram, &delta)
}

const B2_KL: &[(&str, &[&str])] = &[
    ("0", &["1", "1", "1", "q"]),
    ("A1", &["0", "1", "1", "0"]),
    ("~A1,triv", &["0", "0", "1", "0"]),
    ("~A1,sgn", &["0", "0", "0", "1"]),
];

const G2_KL: &[(&str, &[&str])] = &[
    ("0", &["1", "1", "1+q", "1", "q"]),
    ("A1l", &["0", "1", "1", "1", "0"]),
    ("A1s", &["0", "0", "1", "1", "1"]),
    ("G2(a1),triv", &["0", "0", "0", "1", "0"]),
    ("G2(a1),refl", &["0", "0", "0", "0", "1"]),
];

pub fn verify_b2_subregular() -> Result<Report> {
    let g = Arc::new(WeylGroup::from_label("B2")?);
    let table = CharTable::for_group(&g)?;
    let irr = crate::wchars::B2_SUBREGULAR;
    let (ps, st) = rayon::join(
        || run_family(&g, &table, &InducedDatum::principal(vec![q(0), q(0)], vec![q(1), q(0)]), &q(1)),
        || run_family(&g, &table, &InducedDatum::steinberg(vec![0], vec![q(0), q(0)], vec![q(1), q(1)]), &qf(1, 2)),
    );
    let (ps, st) = (ps?, st?);
    let mut r = Report::new("b2-subregular");
    let src = "B2 subregular composition series and W-structure";

    r.compare("X(0) level dims", "(3,1,1,3)", src, fmt_dims(&ps.report.level_dims));
    r.compare("X(0) level 1 signature", "(0,1)", "level 1 is -L(~A1,sgn)", fmt_signature(&ps.report, 1));
    r.compare("X(0) level 2 signature", "(1,0)", "level 2 is +L(A1)", fmt_signature(&ps.report, 2));
    r.compare(
        "X(0) level 3 on 1x1",
        "+",
        "level 3 is +L(~A1,triv), positive on its lowest W-type",
        ps.copies_at("1x1", 3).iter().map(|&s| sign_char(s)).collect::<String>(),
    );
    r.info("X(0) level 3 signature", "sign on 0x11 is not stated", fmt_signature(&ps.report, 3));
    r.compare("X(0) bookkeeping", true, "signature change across t0", bookkeeping(&ps)?);
    for (name, run, key) in [("X(0)", &ps, "0"), ("X(A1)", &st, "A1")] {
        let std = crate::wchars::B2_STANDARD.iter().find(|s| s.0 == key).unwrap();
        r.compare(format!("{name} W-structure"), expected_structure(std.1), src, fmt_structure(&run.w_structure));
    }

    let a_ps = attribute_levels(&ps, irr)?;
    let a_st = attribute_levels(&st, irr)?;
    r.compare("X(0) levels", "0:+0 1:-~A1,sgn 2:+A1 3:+~A1,triv", src, fmt_levels(&a_ps));
    r.compare("X(A1) levels", "0:+A1 1:+~A1,triv", src, fmt_levels(&a_st));
    family_report(&mut r, "X(0)", &ps, src);
    family_report(&mut r, "X(A1)", &st, src);

    let mut rows = BTreeMap::new();
    rows.insert("0".to_string(), assemble_row("0", &a_ps, irr)?);
    rows.insert("A1".to_string(), assemble_row("A1", &a_st, irr)?);
    table_checks(&mut r, irr, B2_KL, &rows, "KL table for B2 at s=(1,0), evaluated at -q");
    Ok(r)
}

/// `(½ − t)(1 − t)⁴ / ((½ + t)(1 + t)⁴)`.
fn g2_reference_det() -> RatFun {
    let half = qf(1, 2);
    let lin = |a: Q, b: Q| UniPoly::linear(a, b);
    let num = &lin(half.clone(), q(-1)) * &lin(q(1), q(-1)).pow(4);
    let den = &lin(half, q(1)) * &lin(q(1), q(1)).pow(4);
    RatFun::new(num, den).expect("nonzero denominator")
}

pub fn verify_g2_subregular() -> Result<Report> {
    let g = Arc::new(WeylGroup::from_label("G2")?);
    let table = CharTable::for_group(&g)?;
    let irr = crate::wchars::G2_SUBREGULAR;
    let z = vec![q(0); 3];
    let ps_d = InducedDatum::principal(z.clone(), vec![q(0), q(1), q(-1)]);
    let s_d = InducedDatum::steinberg(vec![0], z.clone(), vec![q(0), q(1), q(-1)]);
    let l_d = InducedDatum::steinberg(vec![1], z, vec![q(1), q(1), q(-2)]);
    let (ps, (st_s, st_l)) = rayon::join(
        || run_family(&g, &table, &ps_d, &q(1)),
        || {
            rayon::join(
                || run_family(&g, &table, &s_d, &qf(1, 2)),
                || run_family(&g, &table, &l_d, &qf(1, 2)),
            )
        },
    );
    let (ps, st_s, st_l) = (ps?, st_s?, st_l?);
    let mut r = Report::new("g2-subregular");
    let src = "G2 subregular composition series and W-structure";

    r.compare("X(0) level dims", "(3,2,2,2,3)", src, fmt_dims(&ps.report.level_dims));
    r.compare("X(0) bookkeeping", true, "signature change across t0", bookkeeping(&ps)?);
    r.compare("2_2 block orders at 1", "1,3", "one copy of 2_2 in level 1, the other in level 3", {
        ps.copies("2_2").iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
    });
    let det = &ps.block_det["2_2"];
    let reference = g2_reference_det();
    for t0 in [qf(1, 2), q(1)] {
        let (a, b) = (det.valuation(&t0), reference.valuation(&t0));
        r.compare(
            format!("2_2 block det order at {}", crate::exactfield::fmt_q(&t0)),
            format!("{:?}", b.order),
            "determinant (1/2-t)(1-t)^4/((1/2+t)(1+t)^4) of the operator on 2_2",
            format!("{:?}", a.order),
        );
        r.compare(
            format!("2_2 block det unit sign at {}", crate::exactfield::fmt_q(&t0)),
            sign_char(b.sign),
            "same determinant, sign of the unit part",
            sign_char(unit_sign(det, &t0)),
        );
    }
    r.info("2_2 block det", "operator normalization differs by a square factor", det.to_text());

    for (name, run, key) in [("X(0)", &ps, "0"), ("X(A1s)", &st_s, "A1s"), ("X(A1l)", &st_l, "A1l")] {
        let std = crate::wchars::G2_STANDARD.iter().find(|s| s.0 == key).unwrap();
        r.compare(format!("{name} W-structure"), expected_structure(std.1), src, fmt_structure(&run.w_structure));
    }

    let a_ps = attribute_levels(&ps, irr)?;
    let a_s = attribute_levels(&st_s, irr)?;
    let a_l = attribute_levels(&st_l, irr)?;
    r.compare(
        "X(0) levels",
        "0:+0 1:-A1s 2:+A1l&-G2(a1),refl 3:+A1s 4:+G2(a1),triv",
        src,
        fmt_levels(&a_ps),
    );
    r.compare("X(A1s) levels", "0:+A1s 1:+G2(a1),triv&+G2(a1),refl", src, fmt_levels(&a_s));
    r.compare("X(A1l) levels", "0:+A1l 1:+A1s 2:+G2(a1),triv", src, fmt_levels(&a_l));
    family_report(&mut r, "X(0)", &ps, src);
    family_report(&mut r, "X(A1s)", &st_s, src);
    family_report(&mut r, "X(A1l)", &st_l, src);

    let mut rows = BTreeMap::new();
    rows.insert("0".to_string(), assemble_row("0", &a_ps, irr)?);
    rows.insert("A1s".to_string(), assemble_row("A1s", &a_s, irr)?);
    rows.insert("A1l".to_string(), assemble_row("A1l", &a_l, irr)?);
    table_checks(&mut r, irr, G2_KL, &rows, "KL table for subregular G2, evaluated at -q");
    Ok(r)
}
