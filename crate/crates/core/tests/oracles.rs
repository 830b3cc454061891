//! Independent oracles for the cohomology engine.
//!
//! The main one computes Lie superalgebra *homology* H_k(𝔫, ℂ) from the chain complex on
//! Λ_s(𝔫) with its own monomial order (plain ascending indices) and its own sign bookkeeping.
//! For finite-dimensional 𝔫, H^k(𝔫, ℂ) is dual to H_k(𝔫, ℂ), so each cohomology weight space
//! of weight −μ must have the dimension of the homology weight space of weight μ.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use supercohom::cohomology::cohomology_upto;
use supercohom::koszul::trivial_module;
use supercohom::linalg::{compress, rank, SparseVec};
use supercohom::realize::{build, build_exceptional, Family, NilpotentAlgebra, OspOptions};
use supercohom::supercore::{rat, Parity, Rational, Weight};

fn swap(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        1
    } else {
        -1
    }
}

/// Bubble sort into ascending order, tracking the super sign; `None` if an even factor repeats.
fn ascending(mut f: Vec<usize>, par: &[Parity]) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1;
    for end in (1..f.len()).rev() {
        for i in 0..end {
            if f[i] > f[i + 1] {
                sign *= swap(par[f[i]], par[f[i + 1]]);
                f.swap(i, i + 1);
            }
        }
    }
    if f.windows(2).any(|w| w[0] == w[1] && !par[w[0]].is_odd()) {
        return None;
    }
    Some((sign, f))
}

fn chains(par: &[Parity], k: usize) -> Vec<Vec<usize>> {
    (0..par.len())
        .combinations_with_replacement(k)
        .filter(|c| c.windows(2).all(|w| w[0] != w[1] || par[w[0]].is_odd()))
        .collect()
}

/// ∂(x_1 ⋯ x_k) = −Σ_{i<j} s_ij [x_i, x_j] x_1 ⋯ x̂_i ⋯ x̂_j ⋯ x_k, where s_ij moves x_i, x_j to the front.
fn boundary(alg: &NilpotentAlgebra, par: &[Parity], mono: &[usize], index: &BTreeMap<Vec<usize>, usize>) -> SparseVec {
    let mut out: Vec<(usize, Rational)> = Vec::new();
    for i in 0..mono.len() {
        for j in i + 1..mono.len() {
            let mut s = -1i64;
            for l in 0..i {
                s *= swap(par[mono[i]], par[mono[l]]);
            }
            for l in 0..j {
                if l != i {
                    s *= swap(par[mono[j]], par[mono[l]]);
                }
            }
            let rest: Vec<usize> = mono.iter().enumerate().filter(|(t, _)| *t != i && *t != j).map(|(_, &x)| x).collect();
            for (t, c) in alg.bracket(mono[i], mono[j]) {
                let mut f = vec![*t];
                f.extend(&rest);
                if let Some((sg, canon)) = ascending(f, par) {
                    out.push((index[&canon], c * rat(s * sg)));
                }
            }
        }
    }
    compress(out)
}

type Blocks = BTreeMap<(Weight, Parity), usize>;

fn weight_of(alg: &NilpotentAlgebra, mono: &[usize]) -> Weight {
    mono.iter().fold(Weight::zero(alg.symbols().clone()), |acc, &i| &acc + alg.weight(i))
}

fn parity_of(par: &[Parity], mono: &[usize]) -> Parity {
    mono.iter().map(|&i| par[i]).sum()
}

/// Homology dimensions per (−weight, parity) for degrees 0..=kmax, checking ∂∂ = 0 on the way.
fn homology(alg: &NilpotentAlgebra, kmax: usize) -> Vec<Blocks> {
    let par = alg.parities();
    let basis: Vec<Vec<Vec<usize>>> = (0..=kmax + 1).map(|k| chains(&par, k)).collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> =
        basis.iter().map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    // ∂_k as rows indexed by degree-k chains.
    let d: Vec<Vec<SparseVec>> = (0..=kmax + 1)
        .map(|k| {
            if k == 0 {
                vec![Vec::new(); basis[0].len()]
            } else {
                basis[k].iter().map(|m| boundary(alg, &par, m, &index[k - 1])).collect()
            }
        })
        .collect();
    for k in 2..=kmax + 1 {
        for row in &d[k] {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (c, v) in row {
                for (c2, v2) in &d[k - 1][*c] {
                    *acc.entry(*c2).or_insert_with(Rational::zero) += v * v2;
                }
            }
            assert!(acc.values().all(|v| v.is_zero()), "oracle ∂∂ ≠ 0 in degree {k}");
        }
    }
    let group = |k: usize| -> BTreeMap<(Weight, Parity), Vec<usize>> {
        let mut g: BTreeMap<(Weight, Parity), Vec<usize>> = BTreeMap::new();
        for (i, m) in basis[k].iter().enumerate() {
            g.entry((weight_of(alg, m), parity_of(&par, m))).or_default().push(i);
        }
        g
    };
    let block_rank = |k: usize, cells: &[usize]| -> usize {
        if k == 0 {
            return 0;
        }
        let rows: Vec<SparseVec> = cells.iter().map(|&i| d[k][i].clone()).collect();
        rank(basis[k - 1].len(), &rows)
    };
    (0..=kmax)
        .map(|k| {
            let here = group(k);
            let up = group(k + 1);
            here.iter()
                .filter_map(|(key, cells)| {
                    let out = block_rank(k, cells);
                    let inc = up.get(key).map(|c| block_rank(k + 1, c)).unwrap_or(0);
                    let dim = cells.len() - out - inc;
                    (dim > 0).then(|| ((-&key.0, key.1), dim))
                })
                .collect()
        })
        .collect()
}

fn engine(alg: &NilpotentAlgebra, kmax: usize) -> Vec<Blocks> {
    cohomology_upto(alg, &trivial_module(alg), kmax, false)
        .unwrap()
        .into_iter()
        .map(|h| {
            let mut b = Blocks::new();
            for blk in h.blocks {
                if blk.even > 0 {
                    b.insert((blk.weight.clone(), Parity::Even), blk.even);
                }
                if blk.odd > 0 {
                    b.insert((blk.weight, Parity::Odd), blk.odd);
                }
            }
            b
        })
        .collect()
}

fn matrix() -> Vec<(Family, usize, usize, usize)> {
    vec![
        (Family::Gl, 2, 1, 4),
        (Family::Gl, 2, 2, 3),
        (Family::Gl, 3, 1, 3),
        (Family::Gl, 3, 2, 3),
        (Family::Gl, 3, 3, 3),
        (Family::Sl, 3, 2, 2),
        (Family::Q, 0, 3, 4),
        (Family::Q, 0, 4, 3),
        (Family::OspEven, 1, 1, 4),
        (Family::OspEven, 1, 2, 3),
        (Family::OspEven, 2, 1, 3),
        (Family::OspEven, 2, 2, 3),
        (Family::OspEven, 1, 3, 3),
        (Family::OspOdd, 1, 1, 4),
        (Family::OspOdd, 1, 2, 3),
        (Family::OspOdd, 2, 1, 3),
        (Family::OspOdd, 2, 2, 2),
    ]
}

#[test]
fn cohomology_is_dual_to_independent_homology() {
    for (f, m, n, kmax) in matrix() {
        let (alg, _) = build(f, m, n, &OspOptions::default()).unwrap();
        let h = homology(&alg, kmax);
        let c = engine(&alg, kmax);
        for k in 0..=kmax {
            assert_eq!(c[k], h[k], "{} degree {k}", f.display(m, n));
        }
    }
}

fn binom(n: i64, k: i64) -> u128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// dim Λ_s^k of e even and o odd generators: Σ_i C(e, i)·C(o + k − i − 1, k − i).
fn lambda_s(e: i64, o: i64, k: i64) -> u128 {
    (0..=k).map(|i| binom(e, i) * if k - i == 0 { 1 } else { binom(o + k - i - 1, k - i) }).sum()
}

#[test]
fn abelian_cohomology_is_the_whole_cochain_space() {
    for f in [Family::D21a, Family::G3, Family::F4] {
        let alg = build_exceptional(f).unwrap();
        assert!(alg.is_abelian());
        let hs = cohomology_upto(&alg, &trivial_module(&alg), 3, false).unwrap();
        for h in hs {
            assert_eq!(h.total as u128, lambda_s(alg.even_dim() as i64, alg.odd_dim() as i64, h.degree as i64));
        }
    }
    let (gl22, _) = build(Family::Gl, 2, 2, &OspOptions::default()).unwrap();
    for h in cohomology_upto(&gl22, &trivial_module(&gl22), 5, false).unwrap() {
        assert_eq!(h.total as u128, lambda_s(2, 2, h.degree as i64));
    }
}

/// H¹ = 𝔫 / [𝔫, 𝔫]: dimension from the rank of all brackets, computed here directly.
#[test]
fn first_cohomology_is_abelianization() {
    for (f, m, n, _) in matrix() {
        let (alg, _) = build(f, m, n, &OspOptions::default()).unwrap();
        let rows: Vec<SparseVec> =
            (0..alg.dim()).flat_map(|i| (0..alg.dim()).map(move |j| (i, j))).map(|(i, j)| alg.bracket(i, j).clone()).collect();
        let derived = rank(alg.dim(), &rows);
        let h1 = cohomology_upto(&alg, &trivial_module(&alg), 1, false).unwrap();
        assert_eq!(h1[1].total, alg.dim() - derived, "{}", f.display(m, n));
    }
}

#[test]
fn lambda_s_closed_form_small_values() {
    // one even, one odd: 1, 2, 2, 2, …
    assert_eq!((0..5).map(|k| lambda_s(1, 1, k)).collect::<Vec<_>>(), vec![1, 2, 2, 2, 2]);
    // two even, two odd in degree 2: 1 + 4 + 3
    assert_eq!(lambda_s(2, 2, 2), 8);
}
