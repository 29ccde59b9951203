use kronecker_core::brauer::brauer_algebra_dim;
use kronecker_core::lr::{lr_coefficient, lr_tableaux};
use kronecker_core::{
    branch, brauer_dim, kronecker, lr_product, skew_expand, stable_kronecker, standardize, sym_dim,
    BratteliDiagram, BrauerLabel, CharacterOracle, Decomposition, GroupContext, Partition, SignedLabel,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of).collect()
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Partitions with at most `max_size` boxes, as sorted random row lists.
fn partition_strategy(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=10, 0..=10).prop_filter_map("too many boxes", move |mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(rows).ok()?;
        (p.size() <= max_size).then_some(p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conjugation_is_an_involution(lambda in partition_strategy(30)) {
        let c = lambda.conjugate();
        prop_assert_eq!(c.size(), lambda.size());
        prop_assert_eq!(c.len(), lambda.row(0));
        prop_assert_eq!(c.conjugate(), lambda);
    }

    #[test]
    fn strip_removal_leaves_a_partition(lambda in partition_strategy(30), h in 1usize..=12) {
        if let Ok(strip) = lambda.boundary_strip(h) {
            let rest = strip.remainder();
            prop_assert_eq!(strip.boxes.len(), h);
            prop_assert_eq!(rest.size() + h, lambda.size());
            prop_assert!(lambda.contains(rest));
            prop_assert_eq!(Partition::new(rest.rows().to_vec()).unwrap(), rest.clone());
            prop_assert_eq!(strip.boxes[0], (lambda.len(), 1));
            for &(r, c) in &strip.boxes {
                prop_assert!(c <= lambda.row(r - 1));
                prop_assert!(c > rest.row(r - 1));
            }
            prop_assert_eq!(
                strip.columns_spanned,
                strip.boxes.iter().map(|b| b.1).max().unwrap()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn standardize_is_idempotent(lambda in partition_strategy(12), n in 1usize..=9, symplectic: bool) {
        let ctx = if symplectic {
            GroupContext::symplectic(2 * n.div_ceil(2))
        } else {
            GroupContext::orthogonal(n)
        };
        let once = standardize(&lambda, &ctx);
        if !once.is_zero() {
            prop_assert!(ctx.is_standard(&once.shape));
            let twice = standardize(&once.shape, &ctx);
            prop_assert_eq!(twice, SignedLabel { shape: once.shape.clone(), sign: 1 });
        }
        if ctx.is_standard(&lambda) {
            prop_assert_eq!(once, SignedLabel { shape: lambda, sign: 1 });
        }
    }
}

#[test]
fn lr_symmetry_up_to_six_boxes() {
    for a in partitions_up_to(6) {
        for b in partitions_up_to(6 - a.size()) {
            assert_eq!(lr_product(&a, &b), lr_product(&b, &a), "{a} x {b}");
        }
    }
}

#[test]
fn lr_routes_agree() {
    for a in partitions_up_to(4) {
        for b in partitions_up_to(4) {
            for nu in Partition::all_of(a.size() + b.size()) {
                let direct = lr_product(&a, &b).get(&nu);
                let via_tableaux = lr_tableaux(&nu, &a, Some(&b)).get(&b);
                assert_eq!(direct, via_tableaux, "c({a},{b};{nu})");
                assert_eq!(direct as u64, lr_coefficient(&a, &b, &nu));
            }
        }
    }
}

#[test]
fn lr_dimension_identity_up_to_five_boxes() {
    let small = partitions_up_to(5);
    for a in &small {
        for b in &small {
            let lhs: BigUint = lr_product(a, b)
                .iter()
                .map(|(nu, m)| sym_dim(nu) * BigUint::from(m as u64))
                .sum();
            let rhs = binomial(a.size() + b.size(), a.size()) * sym_dim(a) * sym_dim(b);
            assert_eq!(lhs, rhs, "{a} x {b}");
        }
    }
}

#[test]
fn pieri_rule() {
    for lambda in partitions_up_to(6) {
        for k in 1..=3 {
            let product = lr_product(&lambda, &Partition::row_of(k));
            for (nu, m) in product.iter() {
                assert_eq!(m, 1);
                assert!(nu.contains(&lambda));
                // horizontal strip: at most one added box per column
                let (cn, cl) = (nu.conjugate(), lambda.conjugate());
                assert!((0..nu.row(0)).all(|j| cn.row(j) <= cl.row(j) + 1), "{lambda} x [{k}] -> {nu}");
            }
        }
    }
}

#[test]
fn skew_by_empty_is_identity() {
    for lambda in partitions_up_to(7) {
        let expected: Decomposition = [(lambda.clone(), 1)].into_iter().collect();
        assert_eq!(skew_expand(&lambda, &Partition::empty()), expected);
        assert_eq!(lr_product(&lambda, &Partition::empty()), expected);
    }
}

#[test]
fn brauer_sum_of_squares() {
    let diagram = BratteliDiagram::build(6);
    for f in 0..=6 {
        let sum: BigUint = diagram.dimensions(f).iter().map(|d| d * d).sum();
        assert_eq!(sum, brauer_algebra_dim(f), "level {f}");
    }
}

#[test]
fn brauer_dims_match_diagram_and_symmetric_group() {
    let diagram = BratteliDiagram::build(6);
    for f in 0..=6 {
        for (shape, dim) in diagram.level(f).iter().zip(diagram.dimensions(f)) {
            let label = BrauerLabel::new(shape.clone(), f).unwrap();
            assert_eq!(brauer_dim(&label), dim, "{shape} at level {f}");
            if shape.size() == f {
                assert_eq!(dim, sym_dim(shape));
            }
        }
    }
}

#[test]
fn branching_matches_diagram_edges() {
    let diagram = BratteliDiagram::build(6);
    for f in 1..=6 {
        let mut from_branch = Vec::new();
        for (hi, shape) in diagram.level(f).iter().enumerate() {
            let label = BrauerLabel::new(shape.clone(), f).unwrap();
            for down in branch(&label).unwrap() {
                let lo = diagram.level(f - 1).iter().position(|s| s == down.shape()).unwrap();
                from_branch.push((lo, hi));
            }
        }
        from_branch.sort_unstable();
        assert_eq!(from_branch, diagram.edges_above(f - 1));
    }
}

#[test]
fn stable_product_is_commutative() {
    for a in partitions_up_to(4) {
        for b in partitions_up_to(4) {
            assert_eq!(stable_kronecker(&a, &b), stable_kronecker(&b, &a), "{a} x {b}");
        }
    }
}

#[test]
fn group_products_are_nonnegative() {
    let contexts: Vec<GroupContext> = (4..=8)
        .map(GroupContext::orthogonal)
        .chain([4, 6, 8].map(GroupContext::symplectic))
        .collect();
    for ctx in contexts {
        let labels: Vec<Partition> = partitions_up_to(6).into_iter().filter(|l| ctx.is_standard(l)).collect();
        for a in &labels {
            for b in labels.iter().filter(|b| a.size() + b.size() <= 6) {
                let product = kronecker(a, b, &ctx).unwrap_or_else(|e| panic!("{a} x {b} over {ctx}: {e}"));
                assert!(product.is_nonnegative());
            }
        }
    }
}

fn permute_and_invert(e: &[i64], perm: &[usize], flips: &[bool]) -> Vec<i64> {
    perm.iter().zip(flips).map(|(&i, &f)| if f { -e[i] } else { e[i] }).collect()
}

#[test]
fn characters_are_weyl_invariant() {
    let oracle = CharacterOracle::default();
    let contexts = [
        GroupContext::orthogonal(4),
        GroupContext::orthogonal(5),
        GroupContext::special_orthogonal(6),
        GroupContext::orthogonal(7),
        GroupContext::symplectic(4),
        GroupContext::symplectic(6),
    ];
    for ctx in contexts {
        let l = ctx.rank();
        let reversed: Vec<usize> = (0..l).rev().collect();
        let rotated: Vec<usize> = (1..l).chain([0]).collect();
        let identity: Vec<usize> = (0..l).collect();
        let mut one_flip = vec![false; l];
        one_flip[0] = true;
        let mut two_flips = one_flip.clone();
        two_flips[l - 1] = true;
        for lambda in partitions_up_to(4).into_iter().filter(|x| ctx.is_standard(x)) {
            let chi = oracle.partition_character(&lambda, &ctx).unwrap();
            assert_eq!(chi.evaluate_at_one(), BigInt::from(oracle.partition_dim(&lambda, &ctx).unwrap()));
            let flips: &[bool] = if ctx.is_even_orthogonal() { &two_flips } else { &one_flip };
            for (perm, flip) in [(&reversed, &vec![false; l][..]), (&rotated, flips), (&identity, flips)] {
                let image = chi.map_exponents(|e| permute_and_invert(e, perm, flip));
                assert_eq!(image, chi, "{lambda} over {ctx}");
            }
        }
    }
}

#[test]
fn oracle_decomposition_is_symmetric_and_verifies() {
    let oracle = CharacterOracle::default();
    for ctx in [GroupContext::orthogonal(5), GroupContext::symplectic(6), GroupContext::orthogonal(6)] {
        let labels: Vec<Partition> = partitions_up_to(3).into_iter().filter(|l| ctx.is_standard(l)).collect();
        for a in &labels {
            for b in &labels {
                let ab = oracle.decompose_via_characters(a, b, &ctx).unwrap();
                assert_eq!(ab, oracle.decompose_via_characters(b, a, &ctx).unwrap());
                assert!(oracle.verify_product(a, b, &ctx, &ab).unwrap().holds);
            }
        }
    }
}

#[test]
fn golden_product_is_certified_over_so9() {
    let oracle = CharacterOracle::default();
    let so9 = GroupContext::special_orthogonal(9);
    let (a, b) = (p(&[2, 1]), p(&[1, 1]));
    let stable = stable_kronecker(&a, &b);
    assert!(oracle.verify_product(&a, &b, &so9, &stable).unwrap().holds);
    let mut perturbed = stable.clone();
    perturbed.add(p(&[2, 1]), -1);
    let report = oracle.verify_product(&a, &b, &so9, &perturbed).unwrap();
    assert!(!report.holds);
    assert!(!report.difference.is_zero());
}
