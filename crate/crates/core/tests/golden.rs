use diagcalc::render::{render_svg, LAYOUT_VERSION};
use diagcalc::{Equivalence, Partition};

fn check(text: &str, golden: &str) {
    let a = Partition::parse(text).unwrap();
    let svg = render_svg(&a);
    assert_eq!(svg, golden, "{text}");
    assert_eq!(render_svg(&a), svg);
}

#[test]
fn pinned_layouts() {
    assert_eq!(LAYOUT_VERSION, 1);
    check(
        "[[1,-1],[2,-2],[3,-3]]",
        include_str!("golden/identity3.svg"),
    );
    check(
        "[[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]",
        include_str!("golden/fig_a.svg"),
    );
    check(
        "[[1,2],[3,4,-1],[5,-5,-6],[6],[-2,-3],[-4]]",
        include_str!("golden/fig_b.svg"),
    );
    let d = Equivalence::parse("[[1,5,6],[2,3],[4],[7,8]]")
        .unwrap()
        .d_element()
        .unwrap();
    assert_eq!(render_svg(&d), include_str!("golden/d_eta8.svg"));
}

#[test]
fn identity_is_vertical_lines() {
    for n in 1..=5 {
        let svg = render_svg(&Partition::identity(n));
        assert_eq!(svg.matches("<line").count(), n);
        assert_eq!(svg.matches("<path").count(), 0);
        assert_eq!(svg.matches("<circle").count(), 2 * n);
        for line in svg.lines().filter(|l| l.contains("<line")) {
            let x1 = line
                .split("x1=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap();
            let x2 = line
                .split("x2=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap();
            assert_eq!(x1, x2);
        }
    }
}

#[test]
fn edge_counts_follow_blocks() {
    let a = Partition::parse("[[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]").unwrap();
    let svg = render_svg(&a);
    // arcs: one per consecutive same-row pair; lines: one per transversal
    assert_eq!(svg.matches("<path").count(), 6);
    assert_eq!(svg.matches("<line").count(), 1);
}
