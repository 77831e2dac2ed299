use diagcalc::catalog::{self, Family};
use diagcalc::{Equivalence, Exec, Partition, Transformation};
use proptest::prelude::*;

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..2 * n, 2 * n)
            .prop_map(|labels| Partition::from_labels(&labels))
    })
}

fn triple(max_n: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| {
        let one =
            || proptest::collection::vec(0..2 * n, 2 * n).prop_map(|l| Partition::from_labels(&l));
        (one(), one(), one())
    })
}

fn is_canonical(a: &Partition) -> bool {
    let mut next = 0u8;
    a.as_slice().iter().all(|&b| {
        if b == next {
            next += 1;
            true
        } else {
            b < next
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn text_round_trips(a in partition(6)) {
        let text = a.to_string();
        prop_assert_eq!(Partition::parse(&text).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), a);
    }

    #[test]
    fn associative_and_canonical((a, b, c) in triple(6)) {
        let ab = a.multiply(&b);
        prop_assert!(is_canonical(&ab));
        prop_assert_eq!(ab.degree(), a.degree());
        prop_assert_eq!(ab.multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn identity_is_neutral(a in partition(6)) {
        let one = Partition::identity(a.degree());
        prop_assert_eq!(a.multiply(&one), a.clone());
        prop_assert_eq!(one.multiply(&a), a);
    }

    #[test]
    fn planar_and_full_domain_are_closed((a, b, _c) in triple(6)) {
        let ab = a.multiply(&b);
        if a.is_planar() && b.is_planar() {
            prop_assert!(ab.is_planar());
        }
        if a.is_full_domain() && b.is_full_domain() {
            prop_assert!(ab.is_full_domain());
        }
    }

    #[test]
    fn structure_is_consistent(a in partition(6)) {
        let s = a.structure();
        prop_assert_eq!(s.rank, a.transversals().len());
        for x in &s.dom {
            for y in 1..=a.degree() {
                if s.ker.related(*x, y) {
                    prop_assert!(s.dom.contains(&y));
                }
            }
        }
    }
}

#[test]
fn exhaustive_associativity_in_degree_two() {
    let all = Family::Pn.brute_force(2, Exec::Parallel);
    for a in &all {
        for b in &all {
            let ab = a.multiply(b);
            for c in &all {
                assert_eq!(ab.multiply(c), a.multiply(&b.multiply(c)));
            }
        }
    }
}

#[test]
fn planar_and_full_domain_closure_exhaustive() {
    let all = Family::Pn.brute_force(3, Exec::Parallel);
    let planar: Vec<_> = all.iter().filter(|a| a.is_planar()).collect();
    for a in &planar {
        for b in &planar {
            assert!(a.multiply(b).is_planar());
        }
    }
    let fd: Vec<_> = all.iter().filter(|a| a.is_full_domain()).collect();
    for a in &fd {
        for b in &fd {
            assert!(a.multiply(b).is_full_domain());
        }
    }
}

#[test]
fn parse_examples() {
    assert_eq!(
        Partition::parse("[[1,-1],[2,-2]]").unwrap(),
        Partition::identity(2)
    );
    assert!(Partition::parse("[[1,2],[1,-1]]").is_err());
    assert!(Partition::parse("[[1,2],[-1]]").is_err());
    assert!(Partition::parse("[[1,2,-1,-2").is_err());
    assert_eq!(Partition::identity(2).to_string(), "[[1,-1],[2,-2]]");
    // block and vertex order in the input do not matter
    assert_eq!(
        Partition::parse("[[-2],[-1,2,1],[3,-3]]").unwrap(),
        Partition::parse("[[1,2,-1],[3,-3],[-2]]").unwrap()
    );
}

#[test]
fn structure_examples() {
    let n = 4;
    let one = Partition::identity(n);
    let s = one.structure();
    assert_eq!(s.dom, vec![1, 2, 3, 4]);
    assert_eq!(s.codom, vec![1, 2, 3, 4]);
    assert!(s.ker.is_trivial() && s.coker.is_trivial());
    assert_eq!(s.rank, 4);
    for i in 1..=n {
        for j in i + 1..=n {
            let e = catalog::projection(n, i, j);
            let s = e.structure();
            let atom = Equivalence::atom(i, j, n).unwrap();
            assert_eq!((s.ker, s.coker, s.rank), (atom.clone(), atom, 3));
        }
    }
    let e = catalog::projection(3, 1, 2);
    let t = catalog::merge(3, 1, 2);
    assert_eq!(e.multiply(&t), t);
    assert_eq!(t.to_string(), "[[1,2,-1],[3,-3],[-2]]");
    assert_eq!(e.to_string(), "[[1,2,-1,-2],[3,-3]]");
}

#[test]
fn membership_examples() {
    for n in 2..=5 {
        let one = Partition::identity(n);
        let m = one.classify();
        assert!(
            m.symmetric
                && m.transformation
                && m.order_preserving
                && m.projection
                && m.uniform
                && m.partial_bijection
                && m.block_bijection
                && m.full_domain
                && m.planar
                && m.planar_full_domain
                && m.capped
        );
        for i in 1..n {
            let s = catalog::transposition(n, i).classify();
            assert!(s.symmetric && !s.order_preserving);
            for x in [catalog::shift_down(n, i), catalog::shift_up(n, i)] {
                let c = x.classify();
                assert!(c.order_preserving && !c.symmetric && x.is_idempotent());
            }
            let h = catalog::cap(n, i, i + 1);
            let c = h.classify();
            assert!(c.capped && h.is_idempotent());
            // h_i is the projection of the adjacent atom
            assert!(c.projection);
            assert_eq!(h, catalog::projection(n, i, i + 1));
        }
    }
}

#[test]
fn transformations_round_trip() {
    for n in 1..=4 {
        for f in Transformation::all(n) {
            let a = Partition::from_transformation(&f);
            assert!(a.classify().transformation);
            assert_eq!(a.to_transformation().unwrap(), f);
            for g in Transformation::all(n).step_by(7) {
                let b = Partition::from_transformation(&g);
                assert_eq!(a.multiply(&b), Partition::from_transformation(&f.then(&g)));
            }
        }
    }
    let f = Transformation::new(vec![1, 1, 3]).unwrap();
    assert_eq!(
        Partition::from_transformation(&f).to_string(),
        "[[1,2,-1],[3,-3],[-2]]"
    );
    assert_eq!(
        catalog::merge(2, 1, 2).to_transformation().unwrap().image(),
        &[1, 1]
    );
    assert!(Partition::parse("[[1],[2,-2],[-1]]")
        .unwrap()
        .to_transformation()
        .is_err());
}
