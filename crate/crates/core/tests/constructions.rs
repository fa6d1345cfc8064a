use std::time::Instant;

use quiver_pi::constructions::{
    certify, ladder, product, product_projection_word, quiver_from_group, theorem_a_instance, theorem_b_instance,
    GroupExpr,
};
use quiver_pi::group::{GroupCertificate, GroupPresentation, OrderResult, DEFAULT_COSET_CAP};
use quiver_pi::pi1::fundamental_group;
use quiver_pi::quiver::{spanning_tree, BoundQuiver};
use quiver_pi::relations::algebra_basis;

fn dim(bq: &BoundQuiver) -> usize {
    algebra_basis(bq).unwrap().1
}

fn s3() -> GroupPresentation {
    GroupPresentation::from_spec(&["a", "b"], &[&["a", "a"], &["b", "b", "b"], &["a", "b", "a", "b"]])
}

#[test]
fn ladder_products() {
    for (n, m) in [(2, 3), (2, 2), (3, 4)] {
        let t = Instant::now();
        let (a, b) = (ladder(n).unwrap(), ladder(m).unwrap());
        let pq = product(&a, &b).unwrap();
        let pi1 = fundamental_group(&pq.bound).unwrap();
        let cert = GroupCertificate::new(&pi1.presentation, DEFAULT_COSET_CAP);
        assert_eq!(cert.order, OrderResult::Finite((n * m) as u64));
        assert_eq!(dim(&pq.bound), dim(&a) * dim(&b));
        for (factor, other, left) in [(&a, &b, true), (&b, &a, false)] {
            let tree = spanning_tree(&factor.quiver, factor.basepoint);
            for g in tree.cotree() {
                let w = tree.generator_walk(&factor.quiver, g);
                let (lifted, projected) = if left {
                    let l = pq.lift_left_walk(&w, other.basepoint);
                    let p = product_projection_word(&pq, &l);
                    (l, p)
                } else {
                    let l = pq.lift_right_walk(&w, other.basepoint);
                    let p = quiver_pi::constructions::product_projection_word_right(&pq, &l);
                    (l, p)
                };
                assert!(lifted.is_closed());
                assert_eq!(projected, w);
            }
        }
        eprintln!("ladder product ({n},{m}): {:?}", t.elapsed());
    }
}

#[test]
fn qg_groups() {
    let cases = [
        (GroupPresentation::trivial(), 1u64, "1"),
        (GroupPresentation::cyclic(2), 2, "Z_2"),
        (GroupPresentation::cyclic(6), 6, "Z_6"),
        (s3(), 6, "Z_2"),
    ];
    for (g, order, abelian) in cases {
        let t = Instant::now();
        let pi1 = fundamental_group(&quiver_from_group(&g)).unwrap();
        let cert = GroupCertificate::new(&pi1.presentation, DEFAULT_COSET_CAP);
        assert_eq!(cert.order, OrderResult::Finite(order));
        assert_eq!(cert.abelian.to_string(), abelian);
        eprintln!("Q_G order {order}: {:?}", t.elapsed());
    }
}

#[test]
fn theorem_a_end_to_end() {
    let t = Instant::now();
    let groups = [GroupPresentation::cyclic(2), GroupPresentation::from_spec(&["z"], &[]), s3()];
    let report = certify(&theorem_a_instance(&groups).unwrap(), DEFAULT_COSET_CAP).unwrap();
    assert!(report.passed(), "{report:?}");
    eprintln!("theorem A: {:?}", t.elapsed());
}

#[test]
fn theorem_b_end_to_end() {
    let t = Instant::now();
    let exprs: Vec<GroupExpr> = ["Z_2", "(Z_2 x Z_3)", "Z"].iter().map(|e| e.parse().unwrap()).collect();
    let report = certify(&theorem_b_instance(&exprs).unwrap(), DEFAULT_COSET_CAP).unwrap();
    assert!(report.passed(), "{report:?}");
    assert!(report.triangular);
    eprintln!("theorem B: {:?}", t.elapsed());
}
