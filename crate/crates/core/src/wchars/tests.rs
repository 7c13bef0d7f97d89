use std::sync::Arc;

use super::*;
use crate::exactfield::qf;
use crate::modforms::{InducedDatum, Normalization};

fn group(label: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::from_label(label).unwrap())
}

#[test]
fn class_counts() {
    for (label, n) in [("A1", 2), ("A1xA1", 4), ("A2", 3), ("B2", 5), ("G2", 6), ("A3", 5), ("B3", 10)] {
        let g = group(label);
        let cl = conj_classes(&g);
        assert_eq!(cl.len(), n, "{label}");
        assert_eq!(cl.iter().map(Vec::len).sum::<usize>(), g.order());
        assert_eq!(cl[0], vec![g.identity()]);
    }
}

#[test]
fn tables_load_and_have_expected_dims() {
    let dims = |l: &str| {
        let mut d: Vec<i64> = CharTable::from_label(l).unwrap().irreps.iter().map(|r| r.dim).collect();
        d.sort();
        d
    };
    assert_eq!(dims("B2"), vec![1, 1, 1, 1, 2]);
    assert_eq!(dims("G2"), vec![1, 1, 1, 1, 2, 2]);
    assert_eq!(dims("A2"), vec![1, 1, 2]);
    assert!(matches!(CharTable::from_label("B3"), Err(Error::NoCharTable(_))));
}

#[test]
fn sign_character_is_minus_one_on_reflections() {
    for (label, sgn) in [("B2", "0x11"), ("G2", "1_2"), ("A2", "111")] {
        let g = group(label);
        let t = CharTable::for_group(&g).unwrap();
        for b in 0..g.root_system().num_positive() {
            assert_eq!(t.value(sgn, g.reflection(b)).unwrap(), -1);
        }
    }
}

#[test]
fn principal_series_is_regular_representation() {
    for label in ["A1", "A2", "B2", "G2"] {
        let g = group(label);
        let t = CharTable::for_group(&g).unwrap();
        let dim = g.root_system().ambient_dim();
        let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0); dim], vec![q(0); dim])).unwrap();
        for (l, mult) in w_structure(&m, &t).unwrap() {
            assert_eq!(mult, t.irrep(&l).unwrap().dim, "{label} {l}");
        }
    }
}

fn steinberg(g: &Arc<WeylGroup>, levi: usize) -> InducedModule {
    let other = g.root_system().fundamental_coweights()[1 - levi].clone();
    InducedModule::new(g.clone(), &InducedDatum::steinberg(vec![levi], vec![q(0); other.len()], other)).unwrap()
}

#[test]
fn induced_w_structures() {
    let g = group("B2");
    let t = CharTable::for_group(&g).unwrap();
    let s = w_structure(&steinberg(&g, 0), &t).unwrap();
    let want: BTreeMap<String, i64> =
        [("2x0", 0), ("11x0", 1), ("1x1", 1), ("0x2", 0), ("0x11", 1)].iter().map(|(l, m)| (l.to_string(), *m)).collect();
    assert_eq!(s, want);

    let g = group("G2");
    let t = CharTable::for_group(&g).unwrap();
    let s = w_structure(&steinberg(&g, 0), &t).unwrap();
    for (l, m) in [("2_2", 1), ("2_1", 1), ("1_4", 1), ("1_2", 1), ("1_1", 0), ("1_3", 0)] {
        assert_eq!(s[l], m, "{l}");
    }
    let s = w_structure(&steinberg(&g, 1), &t).unwrap();
    for (l, m) in [("1_3", 1), ("2_1", 1), ("2_2", 1), ("1_2", 1), ("1_1", 0), ("1_4", 0)] {
        assert_eq!(s[l], m, "{l}");
    }
}

#[test]
fn projectors_are_complete_idempotents() {
    let g = group("G2");
    let t = CharTable::for_group(&g).unwrap();
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0); 3], vec![q(0); 3])).unwrap();
    let n = m.dim();
    let mut total = QMatrix::zeros(n, n);
    for r in &t.irreps {
        let p = isotypic_projector(&m, &t, &r.label).unwrap();
        assert_eq!(p.mul(&p), p);
        assert_eq!(p.rank() as i64, r.dim * r.dim);
        for i in 0..g.rank() {
            let s = m.pi_t(g.simple(i));
            assert_eq!(s.mul(&p), p.mul(&s));
        }
        total = total.add(&p);
    }
    assert_eq!(total, QMatrix::identity(n));
}

#[test]
fn copy_vectors_count_multiplicity() {
    let g = group("G2");
    let t = CharTable::for_group(&g).unwrap();
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0); 3], vec![q(0), q(1), q(-1)])).unwrap();
    assert_eq!(copy_vectors(&m, &t, "2_2").unwrap().len(), 2);
    assert_eq!(copy_vectors(&m, &t, "1_3").unwrap().len(), 1);
    let gram = m.gram_family(&Normalization::Auto).unwrap();
    // cross-isotypic blocks vanish
    let a = isotypic_projector(&m, &t, "2_2").unwrap();
    let b = isotypic_projector(&m, &t, "2_1").unwrap();
    let cross = crate::RatMatrix::from_q(&a.transpose()).mul(&gram.entries).mul(&crate::RatMatrix::from_q(&b));
    assert!(cross.to_rows().iter().flatten().all(|f| f.is_zero()));
    let _ = qf(1, 2);
}
