use proptest::prelude::*;
use sylvester_core::identities::{
    glr_check, mulders_check, newgen_check, sylvester_check, yakovlev_check, GlrConfig,
};
use sylvester_core::index::count_inversions;
use sylvester_core::{
    det_bareiss, det_reference, enumerate_permutations, Error, IndexList, Matrix, PairClass,
    Scalar,
};

/// Cofactor expansion along the first row, with plain i128 arithmetic.
fn cofactor(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let sub: Vec<Vec<i128>> = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * a[0][c] * cofactor(&sub)
        })
        .sum()
}

fn square_of(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(lo..=hi, n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| Scalar::from(v[(i - 1) * n + j - 1])))
}

fn square(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(move |n| square_of(n, lo, hi))
}

fn as_i128(m: &Matrix) -> Vec<Vec<i128>> {
    (1..=m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|s| i128::try_from(s.numer().clone()).unwrap())
                .collect()
        })
        .collect()
}

fn bubble_swaps(v: &[usize]) -> usize {
    let mut v = v.to_vec();
    let mut swaps = 0;
    for pass in 0..v.len() {
        for k in 0..v.len().saturating_sub(pass + 1) {
            if v[k] > v[k + 1] {
                v.swap(k, k + 1);
                swaps += 1;
            }
        }
    }
    swaps
}

fn ordered_subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 0..=n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn determinant_engines_agree(m in square(6, -9, 9)) {
        let reference = det_reference(&m).unwrap();
        prop_assert_eq!(&reference, &Scalar::from(cofactor(&as_i128(&m)) as i64));
        match det_bareiss(&m) {
            Ok((d, _)) => prop_assert_eq!(d, reference),
            Err(Error::PivotFailure { .. }) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn sylvester_holds_everywhere(m in square(7, -9, 9), t in 0usize..7) {
        prop_assume!(t < m.rows());
        prop_assert!(sylvester_check(&m, t).unwrap().holds);
    }

    #[test]
    fn inversion_count_is_bubble_sort_distance(v in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle()) {
        prop_assert_eq!(count_inversions(&v), bubble_swaps(&v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn enumerated_signs_are_coherent(n in 1usize..=5) {
        let perms = enumerate_permutations(&IndexList::first(n)).unwrap();
        for p in perms {
            prop_assert_eq!(p.inversions, bubble_swaps(&p.arrangement));
        }
    }

    #[test]
    fn complement_partitions(n in 1usize..10, sub in ordered_subset(9)) {
        let sub: Vec<usize> = sub.into_iter().filter(|&x| x <= n).collect();
        let list = IndexList::ordered(sub).unwrap();
        let rest = list.complement(n);
        prop_assert!(list.intersection(&rest).is_empty());
        prop_assert_eq!(list.union(&rest), IndexList::first(n));
    }

    #[test]
    fn arrow_commutes_on_disjoint_rows(
        base in prop::collection::vec(1usize..=6, 0..=4),
        a in prop::collection::vec((7usize..=9, 1usize..=6), 1..=2),
        b in prop::collection::vec((10usize..=12, 1usize..=6), 1..=2),
    ) {
        let dedup = |v: Vec<(usize, usize)>| {
            let mut seen = Vec::new();
            v.into_iter().filter(|p| {
                let fresh = !seen.contains(&p.0);
                seen.push(p.0);
                fresh
            }).collect::<Vec<_>>()
        };
        let base: Vec<(usize, usize)> = dedup(base.into_iter().map(|r| (r, r)).collect());
        let pc = PairClass::new(base).unwrap();
        let ua = PairClass::new(dedup(a)).unwrap();
        let ub = PairClass::new(dedup(b)).unwrap();
        prop_assert_eq!(pc.arrow(&ua).arrow(&ub), pc.arrow(&ub).arrow(&ua));
    }

    #[test]
    fn determinant_is_linear_in_each_row(
        m in square(5, -9, 9),
        row in 1usize..=5,
        k in -5i64..=5,
        extra in prop::collection::vec(-9i64..=9, 5),
    ) {
        let n = m.rows();
        prop_assume!(row <= n);
        // det(.., k·r + x, ..) = k·det(.., r, ..) + det(.., x, ..)
        let mixed = Matrix::from_fn(n, n, |i, j| {
            if i == row { Scalar::from(k) * m.get(i, j) + Scalar::from(extra[j - 1]) } else { m.get(i, j).clone() }
        });
        let swapped = Matrix::from_fn(n, n, |i, j| {
            if i == row { Scalar::from(extra[j - 1]) } else { m.get(i, j).clone() }
        });
        prop_assert_eq!(
            det_reference(&mixed).unwrap(),
            Scalar::from(k) * det_reference(&m).unwrap() + det_reference(&swapped).unwrap()
        );
    }

    #[test]
    fn reductions_agree_with_sylvester(m in square(6, -9, 9), t in 1usize..6) {
        let n = m.rows();
        prop_assume!(t < n);
        let syl = sylvester_check(&m, t).unwrap();

        let y = yakovlev_check(&m, &IndexList::first(t), &IndexList::first(t)).unwrap();
        prop_assert_eq!((&y.lhs, &y.rhs), (&syl.lhs, &syl.rhs));

        let mu = mulders_check(&m, t, t, t, n - t).unwrap();
        prop_assert_eq!((&mu.lhs, &mu.rhs), (&syl.lhs, &syl.rhs));

        let ng = newgen_check(&m, t, n - t, 1).unwrap();
        prop_assert_eq!((&ng.lhs, &ng.rhs), (&syl.lhs, &syl.rhs));

        let lists = (1..=n - t).map(|k| IndexList::first(t).appended(t + k)).collect();
        let g = glr_check(&m, &GlrConfig::new(t, lists).unwrap()).unwrap();
        prop_assert_eq!((&g.lhs, &g.rhs), (&syl.rhs, &syl.lhs));
    }

    #[test]
    fn yakovlev_holds_for_any_lists(
        m in square(6, -9, 9),
        rows in ordered_subset(6),
        cols in ordered_subset(6),
    ) {
        let n = m.rows();
        let rows: Vec<usize> = rows.into_iter().filter(|&x| x <= n).collect();
        let cols: Vec<usize> = cols.into_iter().filter(|&x| x <= n).collect();
        let t = rows.len().min(cols.len());
        prop_assume!(t > 0 && t < n);
        let r = yakovlev_check(
            &m,
            &IndexList::ordered(rows[..t].to_vec()).unwrap(),
            &IndexList::ordered(cols[..t].to_vec()).unwrap(),
        ).unwrap();
        prop_assert!(r.holds, "{}", r);
    }

    #[test]
    fn singular_denominators_never_error(m in square_of(6, -3, 3)) {
        // zero the leading 2x2 block so det M_0 = 0
        let n = m.rows();
        let z = Matrix::from_fn(n, n, |i, j| if i <= 2 && j <= 2 { Scalar::zero() } else { m.get(i, j).clone() });
        for k in 0..=2 {
            prop_assert!(newgen_check(&z, 2, 2, k).unwrap().holds);
        }
    }
}
