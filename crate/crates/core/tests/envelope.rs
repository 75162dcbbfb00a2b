use brace_dend::bialgebra::Tensor2;
use brace_dend::dendriform::free::{self, Tilde};
use brace_dend::envelope::*;
use brace_dend::trees::{Gen, Pbt};

fn a() -> Tilde {
    free::generator(Gen(0))
}

#[test]
fn trivial_envelopes() {
    let q = build_envelope(&BraceStructure::trivial(1, 4), 4, 0).unwrap();
    assert_eq!(q.dims(), &[1, 1, 1, 1, 1]);
    let q2 = build_envelope(&BraceStructure::trivial(2, 4), 4, 0).unwrap();
    assert_eq!(q2.dims(), &[1, 2, 4, 8, 16]);
    for q in [&q, &q2] {
        assert!(check_word_identification(q).unwrap().ok(q.dims()));
        let p = envelope_primitives(q).unwrap();
        assert!(p.ok());
        assert_eq!(p.basis.len(), q.structure().dim());
        assert!(q.coproduct_defects().is_empty());
    }
}

#[test]
fn upcomb_coproduct_is_deconcatenation() {
    let q = build_envelope(&BraceStructure::trivial(1, 4), 4, 0).unwrap();
    assert_eq!(
        q.coproduct(&free::unit()).unwrap(),
        Tensor2::basis((Pbt::Leaf, Pbt::Leaf))
    );
    for n in 2..=3 {
        let up = q.reduce(&free::upcomb(&vec![a(); n]).unwrap()).unwrap();
        let mut expect = Tensor2::zero();
        for i in 0..=n {
            let left = q.reduce(&free::upcomb(&vec![a(); i]).unwrap()).unwrap();
            let right = q.reduce(&free::upcomb(&vec![a(); n - i]).unwrap()).unwrap();
            for (s, x) in &left {
                for (t, y) in &right {
                    expect.add_term((s.clone(), t.clone()), x * y);
                }
            }
        }
        assert_eq!(q.coproduct(&up).unwrap(), expect);
        assert_eq!(q.coproduct(&up).unwrap().len(), n + 1);
    }
}

#[test]
fn free_brace_envelope() {
    let h = harvest(1, 4).unwrap();
    assert_eq!(h.structure.weights(), &[1, 2, 3, 3, 4, 4, 4, 4, 4]);
    assert!(validate_brace(&h.structure, 4).unwrap().is_empty());
    let q = build_envelope(&h.structure, 4, 0).unwrap();
    assert_eq!(q.dims(), &[1, 1, 2, 5, 14]);
    assert!(q.stable());
    assert!(envelope_primitives(&q).unwrap().ok());
}

#[test]
fn theta_two_generators() {
    let r = theta_roundtrip(2, 3).unwrap();
    assert_eq!(r.quotient_dims, vec![1, 2, 8, 40]);
    assert!(r.ok(), "{r:?}");
}

#[test]
fn theta_one_generator_four() {
    let r = theta_roundtrip(1, 4).unwrap();
    assert_eq!(r.quotient_dims, vec![1, 1, 2, 5, 14]);
    assert!(r.ok(), "{r:?}");
}

#[test]
fn idempotent_brace_envelope() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/idempotent.json")).unwrap();
    let b = BraceStructure::from_json(&text).unwrap();
    let q = build_envelope(&b, 4, 1).unwrap();
    assert_eq!(q.dims(), &[1, 1, 1, 1, 1]);
    assert!(q.stable());
    assert!(envelope_primitives(&q).unwrap().ok());
    assert!(q.coproduct_defects().is_empty());
}

#[test]
fn invalid_brace_is_rejected() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/invalid.json")).unwrap();
    let b = BraceStructure::from_json(&text).unwrap();
    assert_eq!(validate_brace(&b, 3).unwrap().len(), 1);
    assert!(build_envelope(&b, 3, 0).is_err());
}
