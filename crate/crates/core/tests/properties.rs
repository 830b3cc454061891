use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use supercohom::koszul::{monomial_basis, monomial_count, normalize_wedge, Monomial};
use supercohom::linalg::{nullspace, rank, rank_dense_integer, rank_rational, SparseVec};
use supercohom::supercore::{rat, swap_sign, Parity, Rational, SymbolSystem, Weight};

fn parities(bits: &[bool]) -> Vec<Parity> {
    bits.iter().map(|&b| if b { Parity::Odd } else { Parity::Even }).collect()
}

/// Sign of sorting by the product over inverted pairs, rather than by performing swaps.
fn inversion_sign(f: &[usize], par: &[Parity]) -> i64 {
    let key = |x: usize| (par[x].bit(), x);
    let mut s = 1;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if key(f[i]) > key(f[j]) {
                s *= swap_sign(par[f[i]], par[f[j]]);
            }
        }
    }
    s
}

fn check_wedge(f: &[usize], par: &[Parity]) {
    let mut sorted = f.to_vec();
    sorted.sort_by_key(|&x| (par[x].bit(), x));
    let vanishes = sorted.windows(2).any(|w| w[0] == w[1] && par[w[0]] == Parity::Even);
    match normalize_wedge(f, par) {
        None => assert!(vanishes, "{f:?}"),
        Some((s, m)) => {
            assert!(!vanishes);
            assert_eq!(m, Monomial(sorted));
            assert_eq!(s, inversion_sign(f, par), "{f:?}");
        }
    }
}

#[test]
fn wedge_signs_exhaustive_up_to_four_factors() {
    // generators 0,1 even and 2,3 odd
    let par = parities(&[false, false, true, true]);
    for k in 0..=4u32 {
        for code in 0..4usize.pow(k) {
            let f: Vec<usize> = (0..k).map(|i| code / 4usize.pow(i) % 4).collect();
            check_wedge(&f, &par);
        }
    }
}

#[test]
fn odd_squares_survive_even_squares_vanish() {
    let par = parities(&[false, true]);
    assert!(normalize_wedge(&[0, 0], &par).is_none());
    assert_eq!(normalize_wedge(&[1, 1], &par), Some((1, Monomial(vec![1, 1]))));
    assert_eq!(normalize_wedge(&[1, 0], &par), Some((-1, Monomial(vec![0, 1]))));
}

fn small_int_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(c), prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)))
}

fn sparse(rows: &[Vec<i64>]) -> Vec<SparseVec> {
    rows.iter().map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, rat(x))).collect()).collect()
}

proptest! {
    #[test]
    fn wedge_signs_random(bits in prop::collection::vec(any::<bool>(), 1..7), raw in prop::collection::vec(0usize..100, 0..7)) {
        let par = parities(&bits);
        let f: Vec<usize> = raw.iter().map(|x| x % bits.len()).collect();
        check_wedge(&f, &par);
    }

    #[test]
    fn basis_size_matches_count(bits in prop::collection::vec(any::<bool>(), 0..7), k in 0usize..5) {
        let par = parities(&bits);
        let basis = monomial_basis(&par, k);
        let e = bits.iter().filter(|b| !**b).count();
        prop_assert_eq!(basis.len() as u128, monomial_count(e, bits.len() - e, k));
        for m in &basis {
            prop_assert_eq!(normalize_wedge(m.factors(), &par), Some((1, m.clone())));
        }
    }

    #[test]
    fn sparse_rank_matches_bareiss((c, rows) in small_int_matrix()) {
        let dense: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(rank(c, &sparse(&rows)), rank_dense_integer(dense));
    }

    #[test]
    fn rank_is_transpose_invariant((c, rows) in small_int_matrix()) {
        let t: Vec<Vec<i64>> = (0..c).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        prop_assert_eq!(rank(c, &sparse(&rows)), rank(rows.len(), &sparse(&t)));
    }

    #[test]
    fn nullspace_is_a_kernel_basis((c, rows) in small_int_matrix()) {
        let q: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let ns = nullspace(&q, c);
        prop_assert_eq!(ns.len(), c - rank_rational(&q, c));
        for v in &ns {
            for r in &q {
                let dot = r.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                prop_assert!(dot.is_zero());
            }
        }
        prop_assert_eq!(rank_rational(&ns, c), ns.len());
    }

    #[test]
    fn weight_arithmetic(a in prop::collection::vec(-5i64..=5, 3), b in prop::collection::vec(-5i64..=5, 3)) {
        let sys = SymbolSystem::standard(2, 1);
        let wa = Weight::from_ints(sys.clone(), &a);
        let wb = Weight::from_ints(sys.clone(), &b);
        prop_assert_eq!(&(&wa + &wb) - &wb, wa.clone());
        prop_assert!((&wa + &(-&wa)).is_zero());
        prop_assert_eq!(wa.scale(&Rational::one()), wa.clone());
        prop_assert_eq!(&wa + &wb, &wb + &wa);
    }
}
