use brace_dend::bialgebra::*;
use brace_dend::dendriform::free::{self, Tilde};
use brace_dend::dendriform::parse_expr_tilde;
use brace_dend::tensorside::*;
use brace_dend::trees::{pbts, Alphabet, Gen, Pbt};
use brace_dend::verify::{coassociativity_defect, coprod_mont_defects, verify_suite};
use proptest::prelude::*;

fn ex(s: &str) -> Tilde {
    parse_expr_tilde(s, &Alphabet::letters(3)).unwrap()
}

#[test]
fn coproduct_of_products() {
    let al = Alphabet::letters(2);
    assert_eq!(format_tensor(&reduced_coproduct(&ex("a<b")), &al, true), "b (x) a");
    assert_eq!(format_tensor(&reduced_coproduct(&ex("a>b")), &al, true), "a (x) b");
    assert_eq!(counit(&free::unit()), brace_dend::exactlin::Rational::one());
}

#[test]
fn coassociative_to_degree_five() {
    for (g, top) in [(1, 5), (2, 4)] {
        for d in 0..=top {
            for t in pbts(d, g) {
                assert!(coassociativity_defect(&t).is_zero(), "{t:?}");
            }
        }
    }
}

#[test]
fn comb_coproducts_to_five() {
    for n in 0..=5 {
        let (up, down) = coprod_mont_defects(n).unwrap();
        assert!(up.is_zero() && down.is_zero(), "n={n}");
    }
}

#[test]
fn bialgebra_suite_at_four() {
    let r = verify_suite("bialgebra", 4).unwrap();
    assert!(r.passed(), "{:?}", r.defects);
}

#[test]
fn primitives_are_catalan() {
    let r = verify_suite("primitives-closed", 5).unwrap();
    assert!(r.passed(), "{:?}", r.defects);
    assert_eq!(r.facts[0].1, "1,1,2,5,14");
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..3, 0..=max_len).prop_map(|v| Word(v.into_iter().map(Gen).collect()))
}

fn small_tree() -> impl Strategy<Value = Pbt> {
    (1usize..=3).prop_flat_map(|d| {
        let ts = pbts(d, 2);
        (0..ts.len()).prop_map(move |i| ts[i].clone())
    })
}

proptest! {
    #[test]
    fn shuffle_is_commutative_and_splits(u in word(3), v in word(3)) {
        prop_assert_eq!(shuffle(&u, &v), shuffle(&v, &u));
        if !u.is_empty() && !v.is_empty() {
            let halves = halfshuffle(&u, &v).unwrap().add(&halfshuffle(&v, &u).unwrap());
            prop_assert_eq!(halves, shuffle(&u, &v));
        }
    }

    #[test]
    fn zinbiel_relation(u in word(2), v in word(2), w in word(2)) {
        prop_assume!(!u.is_empty() && !v.is_empty() && !w.is_empty());
        let b = |x: &Word| WordComb::basis(x.clone());
        let lhs = halfshuffle_lin(&halfshuffle(&u, &v).unwrap(), &b(&w)).unwrap();
        let rhs = halfshuffle_lin(&b(&u), &halfshuffle(&v, &w).unwrap())
            .unwrap()
            .add(&halfshuffle_lin(&b(&u), &halfshuffle(&w, &v).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zin_is_a_morphism(x in small_tree(), y in small_tree()) {
        let (x, y) = (Tilde::basis(x), Tilde::basis(y));
        let (zx, zy) = (zin_eval(&x), zin_eval(&y));
        prop_assert_eq!(zin_eval(&free::prec(&x, &y).unwrap()), halfshuffle_lin(&zx, &zy).unwrap());
        prop_assert_eq!(zin_eval(&free::succ(&x, &y).unwrap()), halfshuffle_lin(&zy, &zx).unwrap());
    }

    #[test]
    fn compatibility(x in small_tree(), y in small_tree()) {
        let (x, y) = (Tilde::basis(x), Tilde::basis(y));
        prop_assert!(compat_defect(&x, &y, Side::Prec).unwrap().is_zero());
        prop_assert!(compat_defect(&x, &y, Side::Succ).unwrap().is_zero());
    }
}
