use diagcalc::catalog::{self, Family};
use diagcalc::ehresmann::{
    capped_range, check_action_pair, check_ehresmann, check_grrac, check_restriction,
    check_theta_join, check_theta_principal, domain_projection, parts, range_projection,
    restriction_law_holds,
};
use diagcalc::workbench::{action_pair, monoid_of, theta_laws, PairSelector};
use diagcalc::{
    EqFilter, Equivalence, Exec, FiniteMonoid, LeftCongruence, Partition, Side, DEFAULT_BUDGET,
};

fn monoid(f: Family, n: usize) -> FiniteMonoid {
    monoid_of(f, n, DEFAULT_BUDGET, Exec::Parallel).unwrap()
}

fn p(text: &str) -> Partition {
    Partition::parse(text).unwrap()
}

#[test]
fn unary_operation_examples() {
    let one = Partition::identity(3);
    assert_eq!(domain_projection(&one), one);
    assert_eq!(range_projection(&one), one);
    let u = p("[[1,-1],[2,3,-2,-3]]");
    let f = p("[[1,2,-1],[3,-3],[-2]]");
    let r = range_projection(&u.multiply(&f));
    assert_eq!(r, p("[[1,3,-1,-3],[2,-2]]"));
    assert!(!r.is_planar());
    for i in 1..=3 {
        for j in i + 1..=3 {
            let e = catalog::projection(3, i, j);
            assert_eq!(range_projection(&e), e);
            assert_eq!(domain_projection(&e), e);
        }
    }
    assert_eq!(capped_range(&one).unwrap(), one);
    let a = p("[[1,2,3,4,5,-1],[-2,-5],[-3,-4]]");
    assert_eq!(
        capped_range(&a).unwrap(),
        p("[[1,-1],[2,3,4,5,-2,-5],[-3,-4]]")
    );
    assert!(capped_range(&catalog::transposition(3, 1)).is_err());
    for n in 1..=5 {
        for eta in Equivalence::enumerate(n, EqFilter::Planar) {
            let d = eta.d_element().unwrap();
            assert_eq!(capped_range(&d).unwrap(), d);
        }
    }
}

#[test]
fn ehresmann_axioms() {
    for exec in [Exec::Sequential, Exec::Parallel] {
        assert!(check_ehresmann(&monoid(Family::Pn, 3), exec).holds);
        assert!(check_ehresmann(&monoid(Family::PnFd, 3), exec).holds);
        assert!(check_ehresmann(&monoid(Family::PnFd, 4), exec).holds);
        let pp = check_ehresmann(&monoid(Family::PPnFd, 3), exec);
        assert!(!pp.holds);
        let w = pp.witness.unwrap();
        assert!(w.label.contains('R'), "{}", w.label);
        assert!(!p(&w.elements[1]).is_planar());
    }
}

#[test]
fn restriction_laws() {
    for n in 2..=4 {
        let m = monoid(Family::PnFd, n);
        assert!(
            check_restriction(&m, Side::Right, Exec::Parallel).holds,
            "n = {n}"
        );
        let left = check_restriction(&m, Side::Left, Exec::Parallel);
        assert!(!left.holds, "n = {n}");
        let w = left.witness.unwrap();
        assert!(!restriction_law_holds(
            &p(&w.elements[0]),
            &p(&w.elements[1]),
            Side::Left
        ));
    }
    let p2 = monoid(Family::Pn, 2);
    let a = p("[[1],[2],[-1],[-2]]");
    let b = p("[[1,2,-1,-2]]");
    for side in [Side::Left, Side::Right] {
        assert!(!check_restriction(&p2, side, Exec::Parallel).holds);
    }
    // both pictures are self-dual, so the right law fails with the roles swapped
    assert!(!restriction_law_holds(&a, &b, Side::Left));
    assert!(!restriction_law_holds(&b, &a, Side::Right));
    assert!(restriction_law_holds(&a, &b, Side::Right));
}

#[test]
fn right_restriction_consequences() {
    let all = Family::Pn.concrete(3, Exec::Parallel);
    let projections: Vec<Partition> = Equivalence::enumerate(3, EqFilter::All)
        .map(|e| e.embed())
        .collect();
    for a in &all {
        let ra = range_projection(a);
        for b in &all {
            // R(a) >= D(b) means R(a) D(b) = D(b)
            if ra.multiply(&domain_projection(b)) == domain_projection(b) {
                assert_eq!(range_projection(&a.multiply(b)), range_projection(b));
            }
        }
        for e in &projections {
            if ra.multiply(e) == *e {
                assert_eq!(range_projection(&a.multiply(e)), *e);
            }
        }
    }
    for n in 2..=4 {
        let fd = Family::PnFd.concrete(n, Exec::Parallel);
        let proj: Vec<Partition> = Equivalence::enumerate(n, EqFilter::All)
            .map(|e| e.embed())
            .collect();
        for a in &fd {
            for e in &proj {
                assert_eq!(e.multiply(a), a.multiply(&range_projection(&e.multiply(a))));
            }
        }
    }
}

#[test]
fn parts_of_full_domain() {
    let m = monoid(Family::PnFd, 3);
    let parts = parts(&m);
    assert_eq!(parts.t.len(), 27);
    assert!(parts
        .t
        .iter()
        .all(|&x| m.element(x).classify().transformation));
    assert_eq!(parts.i.len(), 52 - 6);
    assert_eq!(parts.tf.len(), 21);
    assert!(parts.t_is_submonoid && parts.i_is_right_ideal && parts.tf_is_subsemigroup);
    let trivial = FiniteMonoid::closure(2, vec![], DEFAULT_BUDGET).unwrap();
    let tp = diagcalc::ehresmann::parts(&trivial);
    assert_eq!((tp.t.len(), tp.i.len()), (1, 0));
}

#[test]
fn action_pairs() {
    for n in 2..=4 {
        for sel in [PairSelector::EnTn, PairSelector::EnSingTn] {
            let r = action_pair(sel, n, DEFAULT_BUDGET, Exec::Parallel).unwrap();
            assert!(r.holds, "{sel:?} n={n}");
            assert_eq!(r.counts["action_equals_range"], r.counts["pairs"]);
        }
    }
    for n in 2..=5 {
        assert!(
            action_pair(PairSelector::DnOn, n, DEFAULT_BUDGET, Exec::Parallel)
                .unwrap()
                .holds
        );
    }
    let bad = action_pair(PairSelector::PenPtn, 3, DEFAULT_BUDGET, Exec::Parallel).unwrap();
    assert!(!bad.holds);
    assert_eq!(bad.witness.unwrap().label, "A1");
    // the known witness: uf has no factorisation f v with v in PE_3
    let m = monoid(Family::PPnFd, 3);
    let u = p("[[1,-1],[2,3,-2,-3]]");
    let f = p("[[1,2,-1],[3,-3],[-2]]");
    let uf = u.multiply(&f);
    let pe: Vec<&Partition> = m
        .elements()
        .iter()
        .filter(|a| Family::PEn.contains(a))
        .collect();
    assert!(pe.contains(&&u));
    assert!(pe.iter().all(|v| f.multiply(v) != uf));
}

#[test]
fn action_pair_intersection() {
    let m = monoid(Family::PnFd, 3);
    let en = m.select(|a| Family::En.contains(a));
    let tn = m.select(|a| Family::Tn.contains(a));
    let sing = m.select(|a| Family::SingTn.contains(a));
    let both: Vec<_> = en.iter().filter(|x| tn.contains(x)).collect();
    assert_eq!(both, vec![&m.identity()]);
    assert!(en.iter().all(|x| !sing.contains(x)));
    let r = check_action_pair(&en, &tn, &m, Exec::Sequential);
    assert!(r.holds);
}

#[test]
fn grrac_axioms() {
    for n in 2..=4 {
        let r = check_grrac(&monoid(Family::PPnFd, n), Exec::Parallel);
        assert!(r.holds, "n = {n}");
        if n == 2 {
            assert_eq!(r.counts["elements"], 4);
            assert_eq!(r.counts["pairs"], 16);
        }
    }
    // (G4) as a right regular band identity on the image of rho
    let m = monoid(Family::PPnFd, 4);
    let rho: Vec<Partition> = m
        .elements()
        .iter()
        .map(|a| capped_range(a).unwrap())
        .collect();
    for x in &rho {
        for y in &rho {
            assert_eq!(x.multiply(y).multiply(x), y.multiply(x));
        }
    }
}

#[test]
fn theta_examples() {
    let t2 = monoid(Family::Tn, 2);
    let one = Partition::identity(2);
    assert_eq!(
        LeftCongruence::theta(&one, &t2).unwrap(),
        LeftCongruence::equality(&t2)
    );
    let nabla = Equivalence::universal(2).embed();
    assert_eq!(LeftCongruence::theta(&nabla, &t2).unwrap().class_count(), 1);
    assert_eq!(
        LeftCongruence::generated(&t2, &[]),
        LeftCongruence::equality(&t2)
    );

    // (a, b) in theta_u  iff  (xa, xb) in eps for all points x
    let t3 = monoid(Family::Tn, 3);
    for eps in Equivalence::enumerate(3, EqFilter::All) {
        let theta = LeftCongruence::theta(&eps.embed(), &t3).unwrap();
        assert!(theta.is_left_compatible(&t3));
        for a in 0..t3.len() {
            for b in 0..t3.len() {
                let fa = t3.element(a).to_transformation().unwrap();
                let fb = t3.element(b).to_transformation().unwrap();
                let expect = (1..=3).all(|x| eps.related(fa.apply(x), fb.apply(x)));
                assert_eq!(theta.related(a, b), expect);
            }
        }
    }
    let theta = LeftCongruence::theta(&catalog::projection(3, 1, 2), &t3).unwrap();
    assert_eq!(
        LeftCongruence::join(&t3, &[theta.clone(), LeftCongruence::equality(&t3)]).unwrap(),
        theta
    );
    let other = monoid(Family::On, 3);
    assert!(LeftCongruence::join(&t3, &[LeftCongruence::equality(&other)]).is_err());
}

#[test]
fn theta_law_suites() {
    for n in 2..=4 {
        let en = Family::En.concrete(n, Exec::Parallel);
        assert!(check_theta_join(&monoid(Family::Tn, n), &en, Exec::Parallel).holds);
        assert!(check_theta_join(&monoid(Family::SingTn, n), &en, Exec::Parallel).holds);
        let cases: Vec<(Partition, Partition)> = (1..=n)
            .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| (catalog::projection(n, i, j), catalog::merge(n, i, j)))
            .collect();
        assert!(check_theta_principal(&monoid(Family::Tn, n), &cases, Exec::Parallel).holds);
    }
    for n in 2..=5 {
        let r = theta_laws(n, DEFAULT_BUDGET, Exec::Parallel).unwrap();
        assert!(r.holds, "n = {n}: {:?}", r.witness);
    }
}

#[test]
fn adjacent_caps_and_the_r_order() {
    for n in 2..=5 {
        let d = monoid(Family::Dn, n);
        for i in 1..n {
            let v = catalog::cap(n, i, i + 1);
            for u in d.elements() {
                let below = d.elements().iter().any(|w| v.multiply(w) == *u);
                assert_eq!(below, v.multiply(u) == *u);
            }
        }
    }
}

#[test]
fn product_decompositions() {
    use std::collections::BTreeSet;
    let product = |a: &[Partition], b: &[Partition]| -> BTreeSet<Partition> {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| x.multiply(y)))
            .collect()
    };
    for n in 1..=4 {
        let c = |f: Family| f.concrete(n, Exec::Parallel);
        let set = |f: Family| c(f).into_iter().collect::<BTreeSet<_>>();
        assert_eq!(product(&c(Family::Tn), &c(Family::En)), set(Family::PnFd));
        assert_eq!(
            product(&c(Family::SingTn), &c(Family::En)),
            set(Family::SingPnFd)
        );
        assert_eq!(product(&c(Family::En), &c(Family::Sn)), set(Family::Fn));
        assert_eq!(product(&c(Family::Sn), &c(Family::En)), set(Family::Fn));
        assert_eq!(product(&c(Family::On), &c(Family::Dn)), set(Family::PPnFd));
    }
}

#[test]
fn commutation_of_caps_with_shifts() {
    for n in 2..=5 {
        let cap = |i: usize, j: usize| {
            if i == j {
                Partition::identity(n)
            } else {
                catalog::cap(n, i, j)
            }
        };
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..n {
                    let f = catalog::shift_down(n, k);
                    let rhs = if k + 1 == i {
                        cap(i - 1, j)
                    } else if k + 1 == j {
                        cap(i, j - 1)
                    } else {
                        cap(i, j)
                    };
                    assert_eq!(catalog::cap(n, i, j).multiply(&f), f.multiply(&rhs));
                    let g = catalog::shift_up(n, k);
                    let rhs = if k == i {
                        cap(i + 1, j)
                    } else if k == j {
                        cap(i, j + 1)
                    } else {
                        cap(i, j)
                    };
                    assert_eq!(catalog::cap(n, i, j).multiply(&g), g.multiply(&rhs));
                }
            }
        }
    }
}
