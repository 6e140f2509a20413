use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coxeter::{canonical_form, enumerate_fc, Side};
use crate::tl::normalize_word;
use crate::verlinde::{DecoWord, Decoration};

fn caff(n: usize) -> CoxeterGraph {
    CoxeterGraph::affine(n).unwrap()
}

fn word_diagram(n: usize, w: &[usize]) -> DiagramResult {
    from_generator_word(&caff(n), w).unwrap()
}

#[test]
fn simple_diagrams_are_admissible() {
    for n in 2..=6 {
        let g = caff(n);
        for i in 1..=n + 1 {
            let d = simple_diagram(&g, i).unwrap();
            assert_eq!(a_value(&d), 1);
            assert!(validate_admissible(d.raw()).unwrap().is_empty());
        }
        assert!(simple_diagram(&g, n + 2).is_err());
        assert_eq!(a_value(&identity_diagram(&g).unwrap()), 0);
    }
}

#[test]
fn monomials_are_scalar_free_and_distinct() {
    for (n, len) in [(2, 9), (3, 9), (4, 8), (5, 7)] {
        let g = caff(n);
        let mut seen: HashMap<AdmissibleDiagram, Vec<usize>> = HashMap::new();
        for e in enumerate_fc(&g, len) {
            let r = from_generator_word(&g, &e.word()).unwrap();
            assert_eq!((r.two_exp, r.delta_exp), (0, 0), "n={n} w={:?}", e.word());
            if let Some(prev) = seen.insert(r.diagram.clone(), e.word()) {
                panic!("n={n}: {:?} and {:?} share\n{}", prev, e.word(), r.diagram);
            }
        }
    }
}

#[test]
fn scalars_agree_with_rewriting() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=20);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n + 1)).collect();
        let m = normalize_word(&caff(n), &w).unwrap();
        let r = word_diagram(n, &w);
        assert_eq!(
            (m.two_exp, m.delta_exp),
            (r.two_exp, r.delta_exp),
            "n={n} w={w:?}"
        );
        let image = word_diagram(n, &m.element.word());
        assert_eq!(image.diagram, r.diagram, "n={n} w={w:?}");
    }
}

#[test]
fn left_and_right_actions_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(1..=12);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n + 1)).collect();
        let right = word_diagram(n, &w);
        let mut left = DiagramResult::unscaled(identity_diagram(&caff(n)).unwrap());
        for &g in w.iter().rev() {
            left = act_simple(Side::Left, g, &left).unwrap();
        }
        assert_eq!(left, right, "n={n} w={w:?}");
    }
}

#[test]
fn factorization_round_trip() {
    for (n, len) in [(2, 9), (3, 8), (4, 7)] {
        let g = caff(n);
        for e in enumerate_fc(&g, len) {
            let d = from_generator_word(&g, &e.word()).unwrap().diagram;
            let f = factor_into_simples(&d)
                .unwrap_or_else(|err| panic!("n={n} w={:?}: {err}\n{d}", e.word()));
            let back = from_generator_word(&g, &f).unwrap();
            assert_eq!(
                back,
                DiagramResult::unscaled(d),
                "n={n} w={:?} f={f:?}",
                e.word()
            );
        }
    }
}

#[test]
fn file_format_round_trip() {
    for (n, len) in [(2, 8), (3, 7)] {
        let g = caff(n);
        for e in enumerate_fc(&g, len) {
            let d = from_generator_word(&g, &e.word()).unwrap().diagram;
            let text = print_diagram(d.raw());
            assert_eq!(&parse_diagram(&text).unwrap(), d.raw(), "{text}");
        }
    }
}

#[test]
fn loop_diagrams_come_from_alternating_products() {
    let g = caff(2);
    let d_odd = word_diagram(2, &[1, 3]);
    for k in 0..4u32 {
        let mut raw = d_odd.diagram.raw().clone();
        raw.loops = k;
        let d = AdmissibleDiagram::new(raw).unwrap();
        let word = factor_into_simples(&d).unwrap();
        assert_eq!(
            from_generator_word(&g, &word).unwrap(),
            DiagramResult::unscaled(d.clone())
        );
        let mut expected = Vec::new();
        for _ in 0..k {
            expected.extend([1, 3, 2]);
        }
        expected.extend([1, 3]);
        let e = crate::coxeter::canonical_form(&g, &word).unwrap();
        assert_eq!(
            e,
            crate::coxeter::canonical_form(&g, &expected).unwrap(),
            "k={k}"
        );
        assert_eq!(shape_and_stat(&d).1, 4 + 3 * k as usize);
    }
}

fn raw_edge(x: NodeRef, y: NodeRef, word: &[Decoration]) -> DiagramEdge {
    DiagramEdge::new(
        x,
        y,
        if word.is_empty() {
            Vec::new()
        } else {
            vec![word.to_vec()]
        },
    )
}

#[test]
fn acting_on_the_identity_gives_simple_diagrams() {
    for n in 2..=5 {
        let g = caff(n);
        let e = DiagramResult::unscaled(identity_diagram(&g).unwrap());
        for i in 1..=n + 1 {
            let s = simple_diagram(&g, i).unwrap();
            for side in [Side::Left, Side::Right] {
                assert_eq!(
                    act_simple(side, i, &e).unwrap(),
                    DiagramResult::unscaled(s.clone())
                );
            }
            let twice = act_simple(Side::Left, i, &DiagramResult::unscaled(s.clone())).unwrap();
            assert_eq!((twice.two_exp, twice.delta_exp, &twice.diagram), (0, 1, &s));
            assert_eq!(word_diagram(n, &[i, i]).delta_exp, 1);
        }
        assert!(act_simple(Side::Left, n + 2, &e).is_err());
    }
}

#[test]
fn simple_diagram_decorations() {
    let g = caff(4);
    let deco = |i: usize| -> Vec<DecoWord> {
        let d = simple_diagram(&g, i).unwrap();
        d.raw()
            .edges
            .iter()
            .filter(|e| !e.is_propagating())
            .map(|e| e.symbols())
            .collect()
    };
    assert_eq!(deco(1), vec![vec![Decoration::ClosedDot]; 2]);
    assert_eq!(deco(3), vec![Vec::<Decoration>::new(); 2]);
    assert_eq!(deco(5), vec![vec![Decoration::OpenDot]; 2]);
}

#[test]
fn four_term_relation_doubles() {
    for n in 2..=5 {
        let base = word_diagram(n, &[1, 2]);
        let r = word_diagram(n, &[1, 2, 1, 2]);
        assert_eq!((r.two_exp, r.delta_exp, &r.diagram), (1, 0, &base.diagram));
        let m = n + 1;
        let base = word_diagram(n, &[m, m - 1]);
        let r = word_diagram(n, &[m, m - 1, m, m - 1]);
        assert_eq!((r.two_exp, r.delta_exp, &r.diagram), (1, 0, &base.diagram));
    }
}

#[test]
fn defining_relations_hold_as_diagram_identities() {
    for n in 2..=6 {
        let g = caff(n);
        for i in g.generators() {
            let di = word_diagram(n, &[i]);
            let r = word_diagram(n, &[i, i]);
            assert_eq!((r.two_exp, r.delta_exp, &r.diagram), (0, 1, &di.diagram));
            for j in g.generators().filter(|&j| j != i) {
                match g.bond(i, j) {
                    2 => assert_eq!(word_diagram(n, &[i, j]), word_diagram(n, &[j, i])),
                    3 => assert_eq!(word_diagram(n, &[i, j, i]), di),
                    4 => {
                        let r = word_diagram(n, &[i, j, i, j]);
                        assert_eq!((r.two_exp, r.delta_exp), (1, 0));
                        assert_eq!(r.diagram, word_diagram(n, &[i, j]).diagram);
                    }
                    other => panic!("unexpected bond {other}"),
                }
            }
        }
    }
}

#[test]
fn fully_commutative_words_are_scalar_free() {
    for n in 2..=6 {
        let r = word_diagram(n, &[1, 2, 1]);
        assert_eq!((r.two_exp, r.delta_exp), (0, 0));
        assert_eq!(r.diagram.a_value(), 1);
    }
    let r = word_diagram(4, &[1, 2, 1, 3]);
    assert_eq!((r.two_exp, r.delta_exp), (0, 0));
    assert_eq!(r.diagram.a_value(), 2);
}

#[test]
fn multiply_examples() {
    let g = caff(4);
    let e = identity_diagram(&g).unwrap();
    let d = word_diagram(4, &[1, 2, 1, 3, 5]).diagram;
    assert_eq!(
        multiply(&e, &d).unwrap(),
        DiagramResult::unscaled(d.clone())
    );
    assert_eq!(
        multiply(&d, &e).unwrap(),
        DiagramResult::unscaled(d.clone())
    );
    let (d1, d3) = (
        simple_diagram(&g, 1).unwrap(),
        simple_diagram(&g, 3).unwrap(),
    );
    assert_eq!(multiply(&d1, &d3).unwrap(), multiply(&d3, &d1).unwrap());
    let sq = multiply(&d1, &d1).unwrap();
    assert_eq!((sq.two_exp, sq.delta_exp, &sq.diagram), (0, 1, &d1));
    assert!(multiply(&d1, &identity_diagram(&caff(3)).unwrap()).is_err());
}

#[test]
fn multiply_matches_concatenated_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let u: Vec<usize> = (0..rng.gen_range(0..=8))
            .map(|_| rng.gen_range(1..=n + 1))
            .collect();
        let v: Vec<usize> = (0..rng.gen_range(0..=8))
            .map(|_| rng.gen_range(1..=n + 1))
            .collect();
        let (du, dv) = (word_diagram(n, &u), word_diagram(n, &v));
        let p = multiply(&du.diagram, &dv.diagram).unwrap();
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let whole = word_diagram(n, &uv);
        assert_eq!(p.diagram, whole.diagram, "u={u:?} v={v:?}");
        assert_eq!(p.two_exp + du.two_exp + dv.two_exp, whole.two_exp);
        assert_eq!(p.delta_exp + du.delta_exp + dv.delta_exp, whole.delta_exp);
    }
}

#[test]
fn undecorated_loop_on_identity_is_rejected() {
    let mut raw = identity_diagram(&caff(3)).unwrap().raw().clone();
    raw.loops = 1;
    let v = validate_admissible(&raw).unwrap();
    assert!(v.iter().any(|x| x.rule == validate::Rule::Loops), "{v:?}");
    assert!(AdmissibleDiagram::new(raw).is_err());
}

#[test]
fn closed_triangle_off_the_west_edge_is_rejected() {
    use Decoration::*;
    let base = word_diagram(4, &[1, 3]).diagram.raw().clone();
    assert!(validate_admissible(&base).unwrap().is_empty());
    let mut raw = base.clone();
    let k = raw.edge_at(NodeRef::north(6)).unwrap();
    raw.edges[k] = raw_edge(NodeRef::north(6), NodeRef::south(6), &[ClosedTri]);
    assert!(!validate_admissible(&raw).unwrap().is_empty());
}

#[test]
fn structural_errors_are_distinct_from_violations() {
    let mut raw = identity_diagram(&caff(2)).unwrap().raw().clone();
    raw.edges.pop();
    assert!(validate_admissible(&raw).is_err());
    let crossing = RawDiagram {
        n: 2,
        edges: vec![
            raw_edge(NodeRef::north(1), NodeRef::south(2), &[]),
            raw_edge(NodeRef::north(2), NodeRef::south(1), &[]),
            raw_edge(NodeRef::north(3), NodeRef::south(3), &[]),
            raw_edge(NodeRef::north(4), NodeRef::south(4), &[]),
        ],
        loops: 0,
        block_order: None,
    };
    let v = validate_admissible(&crossing).unwrap();
    assert!(
        v.iter().any(|x| x.rule == validate::Rule::NonCrossing),
        "{v:?}"
    );
}

#[test]
fn shape_and_stat_examples() {
    let g = caff(2);
    let e = identity_diagram(&g).unwrap();
    assert_eq!(shape_and_stat(&e), (e.raw().clone(), 0));
    let d1 = simple_diagram(&g, 1).unwrap();
    let (shape, h) = shape_and_stat(&d1);
    assert_eq!(h, 2);
    assert!(shape.edges.iter().all(|x| !x.is_decorated()));
    assert_eq!(shape, shape_and_stat(&simple_diagram(&g, 1).unwrap()).0);
    let mut raw = word_diagram(2, &[1, 3]).diagram.raw().clone();
    let h0 = shape_and_stat(&AdmissibleDiagram::new(raw.clone()).unwrap()).1;
    raw.loops = 1;
    assert_eq!(
        shape_and_stat(&AdmissibleDiagram::new(raw).unwrap()).1,
        h0 + 3
    );
}

#[test]
fn a_value_examples() {
    for n in [2, 4, 6] {
        let odd: Vec<usize> = (1..=n + 1).step_by(2).collect();
        assert_eq!(word_diagram(n, &odd).diagram.a_value(), (n + 2) / 2);
    }
}

#[test]
fn factor_simple_diagrams() {
    for n in 2..=5 {
        let g = caff(n);
        for i in 1..=n + 1 {
            assert_eq!(
                factor_into_simples(&simple_diagram(&g, i).unwrap()).unwrap(),
                vec![i]
            );
        }
        assert_eq!(
            factor_into_simples(&identity_diagram(&g).unwrap()).unwrap(),
            Vec::<usize>::new()
        );
    }
}

#[test]
fn factor_zigzag_diagrams() {
    for n in 2..=4 {
        let g = caff(n);
        let z1: Vec<usize> = (1..=n).collect();
        let z2: Vec<usize> = (2..=n + 1).rev().collect();
        for k in 0..3 {
            let mut w = Vec::new();
            for _ in 0..k {
                w.extend(&z1);
                w.extend(&z2);
            }
            w.extend(&z1);
            w.push(n + 1);
            let r = from_generator_word(&g, &w).unwrap();
            assert_eq!((r.two_exp, r.delta_exp), (0, 0));
            assert_eq!(r.diagram.a_value(), 1);
            let tri = r
                .diagram
                .raw()
                .edges
                .iter()
                .flat_map(|e| e.symbols())
                .filter(|&c| c == Decoration::ClosedTri)
                .count();
            assert_eq!(tri, k, "n={n} k={k}");
            let f = factor_into_simples(&r.diagram).unwrap();
            assert_eq!(
                canonical_form(&g, &f).unwrap(),
                canonical_form(&g, &w).unwrap()
            );
        }
    }
}

#[test]
fn mirror_matches_reflected_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let w: Vec<usize> = (0..rng.gen_range(0..=12))
            .map(|_| rng.gen_range(1..=n + 1))
            .collect();
        let reflected: Vec<usize> = w.iter().map(|&i| n + 2 - i).collect();
        let (a, b) = (word_diagram(n, &w), word_diagram(n, &reflected));
        assert_eq!((a.two_exp, a.delta_exp), (b.two_exp, b.delta_exp));
        assert_eq!(
            validate::mirror_for_tests(a.diagram.raw()),
            *b.diagram.raw(),
            "n={n} w={w:?}"
        );
    }
}

#[test]
fn render_identity_and_simple() {
    let g = caff(4);
    let id = render_diagram(&identity_diagram(&g).unwrap());
    assert_eq!(id, " 1   2   3   4   5   6\n |   |   |   |   |   |\n |   |   |   |   |   |\n 1'  2'  3'  4'  5'  6'");
    let d2 = render_diagram(&simple_diagram(&g, 2).unwrap());
    assert_eq!(
        d2,
        " 1   2   3   4   5   6\n |   \\___/   |   |   |\n |           |   |   |\n |           |   |   |\n |   /---\\   |   |   |\n 1'  2'  3'  4'  5'  6'"
    );
}

#[test]
fn render_golden_for_a_two_arc_diagram() {
    let d = word_diagram(4, &[1, 2, 1, 3]).diagram;
    let expected = " 1   2   3   4   5   6\n \\_b_/   \\_B_/   |   |\n                 |   |\n                 |   |\n /-b-\\   /---\\   |   |\n 1'  2'  3'  4'  5'  6'";
    assert_eq!(render_diagram(&d), expected);
    assert_eq!(
        print_diagram(d.raw()),
        "n=4 loops=0\nedge N1-N2 deco=b\nedge N3-N4 deco=B\nedge N5-S5 deco=\nedge N6-S6 deco=\nedge S1-S2 deco=b\nedge S3-S4 deco=\n"
    );
}

mod properties {
    use proptest::prelude::*;

    use super::*;

    fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
        (2usize..=5).prop_flat_map(|n| (Just(n), proptest::collection::vec(1..=n + 1, 0..16)))
    }

    proptest! {
        #[test]
        fn each_action_scales_by_at_most_two_or_delta((n, w) in word_strategy(), i in 1usize..=6) {
            let i = (i - 1) % (n + 1) + 1;
            let r = word_diagram(n, &w);
            for side in [Side::Left, Side::Right] {
                let s = act_simple(side, i, &r).unwrap();
                prop_assert!(s.two_exp - r.two_exp <= 1);
                prop_assert!(s.delta_exp - r.delta_exp <= 1);
                prop_assert!(s.diagram.a_value() >= r.diagram.a_value());
                prop_assert!(validate_admissible(s.diagram.raw()).unwrap().is_empty());
            }
        }

        #[test]
        fn reached_diagrams_round_trip((n, w) in word_strategy()) {
            let r = word_diagram(n, &w);
            let f = factor_into_simples(&r.diagram).unwrap();
            prop_assert_eq!(word_diagram(n, &f), DiagramResult::unscaled(r.diagram.clone()));
            let text = print_diagram(r.diagram.raw());
            prop_assert_eq!(&parse_diagram(&text).unwrap(), r.diagram.raw());
        }
    }
}
