//! Exhaustive checks of structural invariants at small rank.

use std::collections::BTreeSet;

use loopreps::alcove::{self, extended_diagram};
use loopreps::classify::{self, CenterFormKind};
use loopreps::forms::{self, CommutatorMap};
use loopreps::lattices::{self, CentralElement};
use loopreps::levels;
use loopreps::linalg::{determinant, frac, q, to_q, Q};
use loopreps::{Family, Group, SimpleType};

fn groups(max_rank: usize) -> Vec<Group> {
    SimpleType::all_up_to(max_rank).into_iter().map(|t| Group::new(t).unwrap()).collect()
}

#[test]
fn cartan_determinant_is_center_order() {
    for g in groups(8) {
        let det = determinant(&to_q(g.root_system().cartan()));
        assert_eq!(det, q(g.center().order() as i64), "{}", g.simple_type());
    }
}

#[test]
fn marks_equal_comarks_when_simply_laced() {
    for g in groups(8) {
        let rs = g.root_system();
        if matches!(rs.simple_type().family, Family::A | Family::D | Family::E) {
            assert_eq!(rs.marks(), rs.comarks(), "{}", rs.simple_type());
        }
        for (i, w) in rs.fundamental_weights().iter().enumerate() {
            assert_eq!(rs.inner(w, rs.highest_root()).unwrap(), q(rs.comarks()[i]));
        }
    }
}

#[test]
fn coweight_gram_is_positive_definite() {
    for g in groups(8) {
        let m = g.root_system().gram();
        let n = m.len();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
        for k in 1..=n {
            let minor: Vec<Vec<Q>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            assert!(determinant(&minor) > q(0), "{} minor {k}", g.simple_type());
        }
    }
}

#[test]
fn minimal_representatives_follow_the_group_law() {
    for g in groups(8) {
        let (rs, c) = (g.root_system(), g.center());
        for &a in c.elements() {
            for &b in c.elements() {
                let sum = c.rep(a) + c.rep(b);
                let m = lattices::minimal_representative(rs, c, &sum).unwrap();
                assert_eq!(&m, c.rep(c.mul(a, b)), "{} {a} {b}", rs.simple_type());
            }
        }
    }
}

#[test]
fn double_dual_is_identity() {
    for g in groups(8) {
        let (rs, c) = (g.root_system(), g.center());
        for z in g.subgroups() {
            let l = lattices::lattice_for(rs, c, &z).unwrap();
            let dd = lattices::dual_lattice(rs, &lattices::dual_lattice(rs, &l).unwrap()).unwrap();
            assert!(dd.same_as(&l), "{}/{}", rs.simple_type(), z.name());
        }
    }
}

#[test]
fn element_order_returns_identity_and_permutations_are_distinct() {
    for g in groups(6) {
        let (rs, c) = (g.root_system(), g.center());
        let diagram = extended_diagram(rs);
        let mut perms = BTreeSet::new();
        for &z in c.elements() {
            let w = g.action().weyl(z).unwrap();
            assert!(diagram.is_automorphism(w.permutation()));
            perms.insert(w.permutation().to_vec());
            for level in 0..=3 {
                for lambda in alcove::alcove(rs, level) {
                    let mut x = lambda.clone();
                    for _ in 0..c.element_order(z) {
                        x = g.action().act(rs, z, &x).unwrap();
                    }
                    assert_eq!(x, lambda);
                }
            }
        }
        assert_eq!(perms.len(), c.order(), "{}", rs.simple_type());
    }
}

#[test]
fn klein_fixed_points_only_at_even_level() {
    for rank in [4, 6, 8] {
        let g = Group::new(SimpleType::new(Family::D, rank).unwrap()).unwrap();
        let z = g.subgroup("full").unwrap();
        for level in 0..=5 {
            let orbits = alcove::orbits(g.root_system(), g.center(), g.action(), &z, level).unwrap();
            let fixed = orbits.iter().any(|o| o.is_singleton());
            assert!(!fixed || level % 2 == 0, "D{rank} level {level}");
        }
    }
}

#[test]
fn level_relations_up_to_rank_nine() {
    for g in groups(9) {
        let (rs, c) = (g.root_system(), g.center());
        for z in g.subgroups() {
            let f = levels::fundamental_level(rs, c, &z).unwrap();
            let b = levels::basic_level(rs, c, &z).unwrap();
            assert!(f == 1 || f == 2);
            assert_eq!(b % f, 0, "{}/{}", rs.simple_type(), z.name());
            if let [t] = z.generators() {
                // Cyclic: forms exist at level 1 iff ord(t) <t,t> is even.
                let v = q(c.element_order(*t) as i64) * rs.inner(c.rep(*t), c.rep(*t)).unwrap();
                let closed = if v.is_integer() && v.to_integer() % 2 == 0 { 1 } else { 2 };
                assert_eq!(f, closed, "{}/{}", rs.simple_type(), z.name());
            }
            for level in 1..=4 {
                let n = forms::enumerate_admissible(rs, c, &z, level).unwrap().len();
                assert_eq!(n > 0, level % f == 0, "{}/{} level {level}", rs.simple_type(), z.name());
                if level % b == 0 {
                    let w = forms::canonical_form(rs, c, &z, level).unwrap();
                    assert!(forms::is_admissible(rs, c, &w).unwrap());
                }
            }
        }
    }
}

/// Alternating bimultiplicative forms on `Z` with values in `(1/4)ℤ/ℤ`.
fn alternating_forms(g: &Group, z: &lattices::CentralSubgroup) -> Vec<Vec<Vec<Q>>> {
    let c = g.center();
    let els = z.elements();
    let n = els.len();
    let idx = |e: CentralElement| els.iter().position(|&x| x == e).unwrap();
    let free: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut vals = vec![0i64; free.len()];
    loop {
        let mut t = vec![vec![q(0); n]; n];
        for (&(i, j), &v) in free.iter().zip(&vals) {
            t[i][j] = Q::new(v, 4);
            t[j][i] = frac(-Q::new(v, 4));
        }
        let bimult = els.iter().all(|&a| {
            els.iter().all(|&b| {
                els.iter().all(|&x| {
                    let ab = idx(c.mul(a, b));
                    frac(t[ab][idx(x)] - t[idx(a)][idx(x)] - t[idx(b)][idx(x)]) == q(0)
                })
            })
        });
        if bimult {
            out.push(t);
        }
        let mut i = 0;
        while i < vals.len() && vals[i] == 3 {
            vals[i] = 0;
            i += 1;
        }
        if i == vals.len() {
            break;
        }
        vals[i] += 1;
    }
    out
}

#[test]
fn admissible_maps_form_a_torsor() {
    for g in groups(6) {
        let (rs, c) = (g.root_system(), g.center());
        for z in g.subgroups() {
            if z.order() > 4 {
                continue;
            }
            let alt = alternating_forms(&g, &z);
            for level in 1..=4 {
                let all = forms::enumerate_admissible(rs, c, &z, level).unwrap();
                let tables: BTreeSet<Vec<Vec<Q>>> = all.iter().map(|w| w.table().to_vec()).collect();
                for a in &all {
                    for b in &all {
                        let d: Vec<Vec<Q>> = a
                            .table()
                            .iter()
                            .zip(b.table())
                            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| frac(*x - *y)).collect())
                            .collect();
                        assert!(alt.contains(&d), "{}/{}: ratio not alternating", rs.simple_type(), z.name());
                    }
                    for f in &alt {
                        let t: Vec<Vec<Q>> = a
                            .table()
                            .iter()
                            .zip(f)
                            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| frac(*x + *y)).collect())
                            .collect();
                        let w = CommutatorMap::new(c, &z, level, t.clone());
                        assert!(forms::is_admissible(rs, c, &w).unwrap());
                        assert!(tables.contains(&t));
                    }
                }
            }
        }
    }
}

#[test]
fn classification_counts() {
    for g in groups(6) {
        let rs = g.root_system();
        for z in g.subgroups() {
            for level in 0..=3 {
                let cl = classify::classify_lzg(&g, &z, level).unwrap();
                assert_eq!(cl.classes.len(), cl.forms.len() * cl.orbits.len());
                let forms_seen: BTreeSet<usize> = cl.classes.iter().map(|p| p.omega_index).collect();
                for i in forms_seen {
                    let covered: usize = cl.classes.iter().filter(|p| p.omega_index == i).map(|p| p.orbit.len()).sum();
                    assert_eq!(covered, alcove::alcove(rs, level).len());
                }
                if z.is_trivial() {
                    assert_eq!(cl.classes.len(), alcove::alcove(rs, level).len());
                    assert!(cl.classes.iter().all(|p| p.multiplicity == 1));
                }
            }
        }
    }
}

#[test]
fn doubled_classes_only_for_klein_center() {
    for g in groups(8) {
        let ty = g.simple_type();
        for z in g.subgroups() {
            for level in 0..=4 {
                let cl = classify::classify_lzg(&g, &z, level).unwrap();
                for p in cl.classes.iter().filter(|p| p.multiplicity == 2) {
                    assert!(ty.family == Family::D && ty.rank % 2 == 0 && z.name() == "full" && level % 2 == 0);
                    assert_eq!(p.center_form, CenterFormKind::Nontrivial);
                }
            }
        }
    }
}
