use proptest::prelude::*;
use schubert::cohomology::{
    duality_pairing, is_dual_pair, pieri_product, product, schubert_basis, schubert_product,
    total_rank, CohomologyClass,
};
use schubert::{GrassContext, Partition};

fn contexts(max_n: usize) -> impl Iterator<Item = GrassContext> {
    (1..=max_n).flat_map(|n| (0..n).map(move |k| GrassContext::new(k, n).unwrap()))
}

fn full_basis(ctx: GrassContext) -> Vec<Partition> {
    (0..=ctx.dim())
        .flat_map(|d| schubert_basis(ctx, d).unwrap())
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn commutative_up_to_n7() {
    for ctx in contexts(7) {
        let basis = full_basis(ctx);
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                assert_eq!(
                    schubert_product(ctx, a, b),
                    schubert_product(ctx, b, a),
                    "{a} {b} in {ctx}"
                );
            }
        }
    }
}

#[test]
fn pieri_agrees_up_to_n7() {
    for ctx in contexts(7) {
        for a in full_basis(ctx) {
            let x = CohomologyClass::schubert(ctx, a).unwrap();
            for p in 1..=ctx.cols() {
                let row = CohomologyClass::schubert(ctx, Partition::row(p)).unwrap();
                assert_eq!(
                    product(&x, &row).unwrap(),
                    pieri_product(&x, p).unwrap(),
                    "{x:?} * s({p})"
                );
            }
        }
    }
}

#[test]
fn poincare_pairing_up_to_n7() {
    for ctx in contexts(7) {
        let basis = full_basis(ctx);
        for a in &basis {
            for b in basis
                .iter()
                .filter(|b| a.weight() + b.weight() == ctx.dim())
            {
                let expected = i64::from(is_dual_pair(a, b, ctx));
                assert_eq!(
                    duality_pairing(a, b, ctx).unwrap(),
                    expected,
                    "{a} {b} in {ctx}"
                );
            }
        }
    }
}

#[test]
fn ranks_are_binomial_up_to_n10() {
    for ctx in contexts(10) {
        assert_eq!(total_rank(ctx), binomial(ctx.n() + 1, ctx.k() + 1), "{ctx}");
    }
}

#[test]
fn products_are_graded() {
    for ctx in contexts(6) {
        let basis = full_basis(ctx);
        for a in &basis {
            for b in &basis {
                let p = schubert_product(ctx, a, b);
                assert!(p
                    .terms()
                    .all(|(c, _)| c.weight() == a.weight() + b.weight()));
            }
        }
    }
}

fn arb_triple() -> impl Strategy<Value = (GrassContext, Partition, Partition, Partition)> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, k)| {
            let ctx = GrassContext::new(k, n).unwrap();
            let basis = full_basis(ctx);
            let len = basis.len();
            (Just(ctx), Just(basis), 0..len, 0..len, 0..len)
        })
        .prop_map(|(ctx, basis, i, j, l)| {
            (ctx, basis[i].clone(), basis[j].clone(), basis[l].clone())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn associative_on_random_triples((ctx, a, b, c) in arb_triple()) {
        let s = |p: &Partition| CohomologyClass::schubert(ctx, p.clone()).unwrap();
        let left = product(&product(&s(&a), &s(&b)).unwrap(), &s(&c)).unwrap();
        let right = product(&s(&a), &product(&s(&b), &s(&c)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn class_json_round_trips((ctx, a, b, _c) in arb_triple()) {
        let x = schubert_product(ctx, &a, &b);
        let text = serde_json::to_string(&x).unwrap();
        let back: CohomologyClass = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }
}
