use diagcalc::catalog;
use diagcalc::{EqFilter, Equivalence, Partition};

fn eta8() -> Equivalence {
    Equivalence::parse("[[1,5,6],[2,3],[4],[7,8]]").unwrap()
}

fn planar(n: usize) -> Vec<Equivalence> {
    Equivalence::enumerate(n, EqFilter::Planar).collect()
}

#[test]
fn worked_example() {
    let eta = eta8();
    assert!(eta.is_planar());
    assert!(!eta.is_convex());
    let d = eta.d_element().unwrap();
    assert_eq!(
        d.to_string(),
        "[[1,2,3,4,5,6,-1,-5,-6],[7,8,-7,-8],[-2,-3],[-4]]"
    );
    assert_eq!(
        eta.hull().unwrap(),
        Equivalence::parse("[[1,2,3,4,5,6],[7,8]]").unwrap()
    );
    let suc: Vec<usize> = (1..=8).map(|x| eta.successor(x).unwrap()).collect();
    assert_eq!(suc, vec![5, 3, 3, 4, 6, 6, 8, 8]);
    let w = eta.normal_word().unwrap();
    assert_eq!(w.to_string(), "h_1_5 h_2_3 h_5_6 h_7_8");
    assert_eq!(w.evaluate(8).unwrap(), d);
    let bricks: Vec<String> = eta
        .bricks()
        .unwrap()
        .iter()
        .map(|b| b.to_string())
        .collect();
    assert_eq!(bricks, vec!["h_1_5 h_2_3 h_5_6", "h_7_8"]);
}

#[test]
fn trivial_cases() {
    for n in 1..=5 {
        let delta = Equivalence::trivial(n);
        assert!(delta.is_planar() && delta.is_convex());
        assert_eq!(delta.embed(), Partition::identity(n));
        assert_eq!(delta.d_element().unwrap(), Partition::identity(n));
        assert!(delta.normal_word().unwrap().is_empty());
        assert!(delta.bricks().unwrap().is_empty());
        assert_eq!(delta.hull().unwrap(), delta);
        assert!((1..=n).all(|x| delta.successor(x).unwrap() == x));
        let f = delta.collapse_to_min().unwrap();
        assert_eq!(f.image(), (1..=n).collect::<Vec<_>>().as_slice());
    }
    assert_eq!(Equivalence::enumerate(1, EqFilter::All).count(), 1);
    assert_eq!(Equivalence::enumerate(3, EqFilter::All).count(), 5);
}

#[test]
fn joins_and_atoms() {
    let a = Equivalence::atom(1, 2, 3).unwrap();
    let b = Equivalence::atom(2, 3, 3).unwrap();
    assert_eq!(a.join(&b).unwrap(), Equivalence::universal(3));
    assert_eq!(a.classes(), vec![vec![1, 2], vec![3]]);
    assert_eq!(
        Equivalence::atom(2, 4, 5).unwrap().classes(),
        vec![vec![1], vec![2, 4], vec![3], vec![5]]
    );
    assert_eq!(a.embed().to_string(), "[[1,2,-1,-2],[3,-3]]");
    assert!(Equivalence::atom(3, 3, 3).is_err());
    assert!(Equivalence::atom(1, 4, 3).is_err());
    assert!(a.join(&Equivalence::trivial(4)).is_err());
    for n in 1..=4 {
        let all: Vec<Equivalence> = Equivalence::enumerate(n, EqFilter::All).collect();
        for e in &all {
            assert_eq!(e.join(&Equivalence::trivial(n)).unwrap(), *e);
            for f in &all {
                assert_eq!(e.embed().multiply(&f.embed()), e.join(f).unwrap().embed());
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                assert_eq!(
                    catalog::projection(n, i, j),
                    Equivalence::atom(i, j, n).unwrap().embed()
                );
            }
        }
    }
}

#[test]
fn planar_counts_and_join_failure() {
    let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
    for (n, &count) in catalan.iter().enumerate().skip(1) {
        let brute = Equivalence::enumerate(n, EqFilter::All)
            .filter(|e| e.is_planar())
            .count();
        assert_eq!(brute, count);
        assert_eq!(planar(n).len(), count);
    }
    // planar equivalences are not closed under join from n = 4
    let p4 = planar(4);
    let witness = p4
        .iter()
        .flat_map(|e| p4.iter().map(move |f| (e, f)))
        .find(|(e, f)| !e.join(f).unwrap().is_planar());
    assert!(witness.is_some());
    let p3 = planar(3);
    assert!(p3
        .iter()
        .all(|e| p3.iter().all(|f| e.join(f).unwrap().is_planar())));
}

#[test]
fn d_elements() {
    for n in 1..=6 {
        for eta in planar(n) {
            let d = eta.d_element().unwrap();
            assert_eq!(d.cokernel(), eta);
            assert_eq!(d.kernel(), eta.hull().unwrap());
            assert!(d.classify().capped);
            assert_eq!(eta.normal_word().unwrap().evaluate(n).unwrap(), d);
            // brick properties
            let bricks = eta.bricks().unwrap();
            let joined: Vec<_> = bricks.iter().flat_map(|b| b.letters.clone()).collect();
            assert_eq!(joined, eta.normal_word().unwrap().letters);
            let hull = eta.hull().unwrap();
            for b in &bricks {
                let (lo, hi) = (b.letters[0].0, b.letters.iter().map(|l| l.1).max().unwrap());
                let class = hull.class_of(lo);
                assert!(b
                    .letters
                    .iter()
                    .all(|&(s, t)| hull.class_of(s) == class && hull.class_of(t) == class));
                // the capped interval absorbs the brick
                let x = (1..=n).find(|&y| hull.class_of(y) == class).unwrap();
                let y = (1..=n).rev().find(|&y| hull.class_of(y) == class).unwrap();
                assert!(x <= lo && hi <= y);
                let u = b.evaluate(n).unwrap();
                assert_eq!(catalog::cap(n, x, y).multiply(&u), u);
            }
            for (a, b) in bricks.iter().zip(bricks.iter().skip(1)) {
                let (ua, ub) = (a.evaluate(n).unwrap(), b.evaluate(n).unwrap());
                assert_eq!(ua.multiply(&ub), ub.multiply(&ua));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                let atom = Equivalence::atom(i, j, n).unwrap();
                assert_eq!(atom.d_element().unwrap(), catalog::cap(n, i, j));
            }
        }
    }
    let crossing = Equivalence::parse("[[1,3],[2,4]]").unwrap();
    assert!(crossing.d_element().is_err());
    assert!(crossing.normal_word().is_err());
}

#[test]
fn successors_determine_the_equivalence() {
    for n in 1..=5 {
        let all: Vec<Equivalence> = Equivalence::enumerate(n, EqFilter::All).collect();
        let sucs: Vec<Vec<usize>> = all
            .iter()
            .map(|e| (1..=n).map(|x| e.successor(x).unwrap()).collect())
            .collect();
        for a in 0..all.len() {
            for b in 0..all.len() {
                assert_eq!(a == b, sucs[a] == sucs[b]);
            }
        }
    }
    assert!(eta8().successor(9).is_err());
    assert!(eta8().successor(0).is_err());
}

#[test]
fn cap_times_d_follows_successor_law() {
    for n in 2..=5 {
        for eta in planar(n) {
            let hull = eta.hull().unwrap();
            let d = eta.d_element().unwrap();
            for i in 1..=n {
                for j in i + 1..=n {
                    let p = (1..=n).filter(|&x| hull.related(x, i)).max().unwrap();
                    let q = (1..=n).filter(|&x| hull.related(x, j)).min().unwrap();
                    let mu = if p == q {
                        eta.clone()
                    } else {
                        eta.join(&Equivalence::atom(p.min(q), p.max(q), n).unwrap())
                            .unwrap()
                    };
                    assert!(mu.is_planar());
                    assert_eq!(catalog::cap(n, i, j).multiply(&d), mu.d_element().unwrap());
                    if mu != eta {
                        for x in 1..=n {
                            let expect = if x == p { q } else { eta.successor(x).unwrap() };
                            assert_eq!(mu.successor(x).unwrap(), expect);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn collapse_maps() {
    let f = Equivalence::parse("[[1,2],[3]]")
        .unwrap()
        .collapse_to_min()
        .unwrap();
    assert_eq!(f.image(), &[1, 1, 3]);
    assert!(eta8().collapse_to_min().is_err());
    for n in 1..=5 {
        for mu in planar(n) {
            let d = mu.d_element().unwrap();
            let f = Partition::from_transformation(&d.kernel().collapse_to_min().unwrap());
            assert!(f.classify().order_preserving && f.is_idempotent());
            assert_eq!(d.multiply(&f), f);
            assert_eq!(f.multiply(&d), d);
        }
    }
}

#[test]
fn d_is_a_right_regular_band() {
    for n in 1..=6 {
        let ds: Vec<Partition> = planar(n).iter().map(|e| e.d_element().unwrap()).collect();
        let set: std::collections::HashSet<&Partition> = ds.iter().collect();
        for x in &ds {
            for y in &ds {
                let xy = x.multiply(y);
                assert!(set.contains(&xy));
                assert_eq!(xy.multiply(x), y.multiply(x));
            }
        }
    }
}

#[test]
fn text_format() {
    let e = eta8();
    assert_eq!(e.to_string(), "[[1,5,6],[2,3],[4],[7,8]]");
    assert_eq!(e.to_string().parse::<Equivalence>().unwrap(), e);
    assert!(Equivalence::parse("[[1,-2]]").is_err());
    assert!(Equivalence::parse("[[1],[1,2]]").is_err());
}
