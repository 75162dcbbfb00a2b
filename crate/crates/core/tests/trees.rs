use brace_dend::operads::planar_embeddings;
use brace_dend::trees::*;
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn planar() -> impl Strategy<Value = PlanarTree> {
    (1usize..=5).prop_flat_map(|n| {
        let ts = labeled_planar_trees(&labels(n));
        (0..ts.len()).prop_map(move |i| ts[i].clone())
    })
}

proptest! {
    #[test]
    fn planar_roundtrip(t in planar()) {
        prop_assert_eq!(parse_planar(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(t.angles().len(), 2 * t.size() - 1);
    }

    #[test]
    fn rooted_form_forgets_order(t in planar()) {
        let r = RootedTree::from_planar(&t);
        prop_assert_eq!(parse_rooted(&t.to_string()).unwrap(), r.clone());
        let mirrored = RootedTree::from_planar(&t.mirror());
        prop_assert_eq!(&mirrored, &r);
        let embeddings = planar_embeddings(&r);
        prop_assert!(embeddings.contains(&t));
        prop_assert!(embeddings.iter().all(|e| RootedTree::from_planar(e) == r));
    }

    #[test]
    fn binary_roundtrip(i in 0usize..40) {
        let al = Alphabet::letters(2);
        let t = pbts(3, 2)[i].clone();
        prop_assert_eq!(parse_pbt(&t.to_bracket(&al), &al).unwrap(), t);
    }
}

#[test]
fn counts() {
    assert_eq!(labeled_planar_trees(&labels(3)).len(), 2 * 6);
    assert_eq!(labeled_rooted_trees(&labels(4)).len(), 64);
    assert_eq!(multilinear_pbts(3).len(), 30);
}

#[test]
fn bad_input() {
    assert!(parse_planar("1(2,2)").is_err());
    assert!(parse_planar("1(2").is_err());
    assert!(parse_pbt("(* q *)", &Alphabet::letters(2)).is_err());
}
