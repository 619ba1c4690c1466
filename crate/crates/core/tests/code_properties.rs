use hadaut_core::codes::{count_words_of_weight, min_weight_bruteforce, min_weight_bz, weight_distribution_bruteforce};
use hadaut_core::gf::{FieldId, GFMatrix, LinearCode};
use proptest::prelude::*;

/// Random generator matrices with `q^k` inside the brute-force guard.
fn random_code(q: u8) -> impl Strategy<Value = LinearCode> {
    let max_k = match q {
        2 => 14,
        3 => 14,
        _ => 11,
    };
    (4usize..=28)
        .prop_flat_map(move |n| (Just(n), 1usize..=max_k.min(n)))
        .prop_flat_map(move |(n, k)| {
            proptest::collection::vec(0..q, n * k).prop_map(move |data| {
                let f = FieldId::new(q).unwrap();
                LinearCode::new(GFMatrix::new(f, k, n, data).unwrap())
            })
        })
        .prop_filter("nonzero code", |c| c.dimension() > 0)
}

/// Applies a column permutation and nonzero column scalings.
fn monomial_image(c: &LinearCode, perm: &[usize], scale: &[u8]) -> LinearCode {
    let f = c.field();
    let g = c.generator();
    let rows: Vec<Vec<u8>> =
        (0..g.rows()).map(|r| perm.iter().zip(scale).map(|(&j, &s)| f.mul(s, g.get(r, j))).collect()).collect();
    LinearCode::new(GFMatrix::from_rows(f, &rows).unwrap())
}

fn check_agreement(c: &LinearCode) -> Result<(), TestCaseError> {
    let (d, count) = min_weight_bruteforce(c).unwrap();
    prop_assert_eq!(min_weight_bz(c).unwrap(), d);
    prop_assert_eq!(count_words_of_weight(c, d).unwrap(), count);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn bz_matches_bruteforce_binary(c in random_code(2)) {
        check_agreement(&c)?;
    }

    #[test]
    fn bz_matches_bruteforce_ternary(c in random_code(3)) {
        check_agreement(&c)?;
    }

    #[test]
    fn bz_matches_bruteforce_quinary(c in random_code(5)) {
        check_agreement(&c)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_match_distribution(c in random_code(3), w in 0usize..=28) {
        let dist = weight_distribution_bruteforce(&c).unwrap();
        let expected = dist.get(w).copied().unwrap_or(0);
        prop_assert_eq!(count_words_of_weight(&c, w).unwrap(), expected);
    }

    #[test]
    fn monomial_invariance(
        c in random_code(5),
        seed in any::<u64>(),
    ) {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = c.length();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let scale: Vec<u8> = (0..n).map(|_| rng.gen_range(1..5)).collect();
        let image = monomial_image(&c, &perm, &scale);
        let d = min_weight_bz(&c).unwrap();
        prop_assert_eq!(min_weight_bz(&image).unwrap(), d);
        prop_assert_eq!(
            count_words_of_weight(&image, d).unwrap(),
            count_words_of_weight(&c, d).unwrap()
        );
    }
}
