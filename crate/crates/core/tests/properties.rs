//! Property tests for the spec-level invariants: congruences of
//! characteristic norms, coset exhaustiveness and negation symmetry,
//! isometry invariance, table symmetry, and obstruction mode dominance.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use latsurg::knot::{KnotModel, VSequence};
use latsurg::lattice::{GramLattice, SplitVerdict};
use latsurg::lens::{linear_lattice, neg_continued_fraction};
use latsurg::rational::Rational;
use latsurg::surgery::{
    beta_bound_check, l_upper_bound, lattice_obstruction, sharpness_check, BetaBound,
    DInvariantTable, ObstructionMode, Verdict,
};

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Random positive definite lattice of rank ≤ 4 with small entries.
fn small_lattice() -> impl Strategy<Value = GramLattice> {
    (1usize..=4)
        .prop_flat_map(|r| {
            (
                proptest::collection::vec(1i64..=6, r),
                proptest::collection::vec(-2i64..=2, r * r),
            )
        })
        .prop_filter_map("positive definite", |(diag, off)| {
            let r = diag.len();
            let mut rows = vec![vec![0i64; r]; r];
            for i in 0..r {
                rows[i][i] = diag[i];
                for j in 0..i {
                    rows[i][j] = off[i * r + j];
                    rows[j][i] = off[i * r + j];
                }
            }
            GramLattice::from_rows(&rows).ok()
        })
}

/// Random small unimodular change of basis applied to a lattice.
fn conjugated(lattice: &GramLattice, ops: &[(usize, usize, i64)]) -> GramLattice {
    let r = lattice.rank();
    let mut u: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| (i == j) as i64).collect())
        .collect();
    for &(a, b, sign) in ops {
        let (i, j) = (a % r, b % r);
        if i == j {
            continue;
        }
        for row in u.iter_mut() {
            let t = sign * row[j];
            row[i] += t;
        }
    }
    let gram = lattice.gram();
    let big: Vec<Vec<BigInt>> = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| {
                    let mut acc = BigInt::from(0);
                    for i in 0..r {
                        for j in 0..r {
                            acc += &gram[i][j] * BigInt::from(u[i][a] * u[j][b]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    GramLattice::new(big).expect("conjugation preserves positive definiteness")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Any two characteristic covectors have norms congruent mod 4/det.
    #[test]
    fn char_norms_congruent_mod_4_over_det(
        lattice in small_lattice(),
        shifts in proptest::collection::vec(-3i64..=3, 8),
    ) {
        let r = lattice.rank();
        let diag = lattice.characteristic_center();
        let step = Rational::new(BigInt::from(4), lattice.determinant().clone());
        let base: Vec<BigInt> = diag.clone();
        let base_norm = lattice.dual_norm(&base, &base);
        for chunk in shifts.chunks(r) {
            let xi: Vec<BigInt> = diag
                .iter()
                .zip(chunk.iter().chain(std::iter::repeat(&0)))
                .map(|(d, s)| d + BigInt::from(2 * s))
                .collect();
            let norm = lattice.dual_norm(&xi, &xi);
            let gap = &norm - &base_norm;
            prop_assert!(
                latsurg::rational::divides(&step, &gap),
                "norms {} and {} differ by a non-multiple of {}",
                norm, base_norm, step,
            );
        }
    }

    /// The coset decomposition is exhaustive: the least coset minimum is
    /// the global characteristic minimum, and negation preserves minima.
    #[test]
    fn coset_minima_exhaustive_and_symmetric(lattice in small_lattice()) {
        let minima = lattice.char_coset_minima();
        prop_assert_eq!(
            BigInt::from(minima.len() as i64),
            lattice.determinant().clone()
        );
        let (global, _) = lattice.min_char_norm();
        let least = minima.min_entry().minimum.clone();
        prop_assert_eq!(global, least);
        for entry in minima.iter() {
            let partner = minima.get(&entry.negated).expect("closed under negation");
            prop_assert_eq!(&partner.minimum, &entry.minimum);
            prop_assert_eq!(&partner.negated, &entry.label);
        }
    }

    /// Witnesses really attain their minima and lie in the right coset.
    #[test]
    fn witnesses_attain_minima(lattice in small_lattice()) {
        let (value, witness) = lattice.min_char_norm();
        prop_assert_eq!(lattice.dual_norm(witness.coords(), witness.coords()), value);
        for entry in lattice.char_coset_minima().iter() {
            let w = entry.witness.coords();
            prop_assert_eq!(lattice.dual_norm(w, w), entry.minimum.clone());
            prop_assert_eq!(
                lattice.coset_label(&entry.witness),
                entry.label.clone()
            );
        }
    }

    /// Standardness survives any unimodular change of basis.
    #[test]
    fn split_standard_is_isometry_invariant(
        delta in 1i64..=9,
        extra in 0usize..=2,
        ops in proptest::collection::vec((0usize..4, 0usize..4, prop_oneof![Just(1i64), Just(-1i64)]), 0..6),
    ) {
        let mut diag = vec![delta];
        diag.extend(std::iter::repeat_n(1, extra));
        let standard = GramLattice::diagonal(&diag).unwrap();
        let twisted = conjugated(&standard, &ops);
        prop_assert_eq!(
            twisted.split_standard(),
            SplitVerdict::Standard(BigInt::from(delta))
        );
    }

    /// min_char_norm is an isometry invariant: the chain DP route on a
    /// linear lattice agrees with the branch-and-bound route on a dense
    /// conjugate of it.
    #[test]
    fn chain_and_dense_routes_agree(
        p in 5u64..=24,
        q_seed in 1u64..=23,
        ops in proptest::collection::vec((0usize..8, 0usize..8, prop_oneof![Just(1i64), Just(-1i64)]), 1..5),
    ) {
        use num_integer::Integer;
        let q = 1 + q_seed % (p - 1);
        prop_assume!(p.gcd(&q) == 1 && q >= 2);
        let chain = linear_lattice(p, q).unwrap();
        prop_assume!(chain.rank() <= 8);
        let dense = conjugated(&chain, &ops);
        let (chain_min, _) = chain.min_char_norm();
        let (dense_min, _) = dense.min_char_norm();
        prop_assert_eq!(&chain_min, &dense_min);
        let mut chain_values: Vec<Rational> =
            chain.char_coset_minima().iter().map(|e| e.minimum.clone()).collect();
        let mut dense_values: Vec<Rational> =
            dense.char_coset_minima().iter().map(|e| e.minimum.clone()).collect();
        chain_values.sort();
        dense_values.sort();
        prop_assert_eq!(chain_values, dense_values);
    }

    /// Negative continued fractions evaluate back to p/q.
    #[test]
    fn continued_fraction_round_trip(p in 1u64..300, q in 1u64..300) {
        use num_integer::Integer;
        prop_assume!(p.gcd(&q) == 1);
        let cf = neg_continued_fraction(p, q).unwrap();
        prop_assert_eq!(cf.evaluate(), rational(p as i64, q as i64));
        if p > q {
            prop_assert!(cf.coefficients().iter().all(|&a| a >= 2));
        }
    }

    /// Surgery tables are symmetric under i ↦ n−i and their denominators
    /// divide 4n.
    #[test]
    fn surgery_tables_symmetric(
        v0 in 0u64..=3,
        len in 0usize..=3,
        n in 1u64..=20,
    ) {
        let mut values = Vec::new();
        let mut current = v0;
        for _ in 0..len {
            values.push(current);
            current = current.saturating_sub(1);
        }
        let g4 = 2 * v0 + len as u64;
        prop_assume!(VSequence::new(values.clone(), g4).is_ok());
        let v = VSequence::new(values, g4).unwrap();
        let table = DInvariantTable::surgery(&v, n);
        let step = rational(1, 4 * n as i64);
        for i in 0..n {
            prop_assert_eq!(table.value(i), table.value((n - i) % n));
            prop_assert!(latsurg::rational::divides(&step, table.value(i)));
        }
    }

    /// Mode dominance: an affine pass implies a matching pass implies a
    /// global pass, for both the obstruction and the sharpness checks.
    #[test]
    fn obstruction_mode_dominance(
        lattice in small_lattice(),
        v0 in 0u64..=2,
        reversed in proptest::bool::ANY,
    ) {
        let det = lattice.determinant().to_u64().unwrap();
        prop_assume!(det <= 40);
        let g4 = 2 * v0;
        let v = VSequence::new(vec![v0; v0 as usize], g4).unwrap_or_else(|_| VSequence::zero());
        let mut table = DInvariantTable::surgery(&v, det);
        if reversed {
            table = table.reversed();
        }
        for check in [lattice_obstruction, sharpness_check] {
            let global = check(&lattice, &table, ObstructionMode::Global).unwrap();
            let matching = check(&lattice, &table, ObstructionMode::Matching).unwrap();
            let affine = if lattice.discriminant_group().is_cyclic() {
                Some(check(&lattice, &table, ObstructionMode::Affine).unwrap())
            } else {
                None
            };
            if let Some(affine) = &affine {
                if affine.verdict == Verdict::Pass {
                    prop_assert_eq!(matching.verdict, Verdict::Pass);
                }
            }
            if matching.verdict == Verdict::Pass {
                prop_assert_eq!(global.verdict, Verdict::Pass);
            }
        }
    }
}

#[test]
fn beta_bound_never_fails_above_threshold() {
    // spot checks complementing the exhaustive acceptance sweep
    for q in [3u64, 5, 7, 9, 11] {
        let v = KnotModel::torus_knot(2, q).unwrap().v_sequence().unwrap();
        let threshold = 4 * v.slice_genus() + 3;
        for n in threshold + 1..threshold + 20 {
            assert_eq!(beta_bound_check(&v, n), BetaBound::Holds);
        }
        assert!(l_upper_bound(&v) <= threshold);
    }
}
