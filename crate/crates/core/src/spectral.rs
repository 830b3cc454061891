//! Hochschild–Serre E₂ terms H^i(𝔫/𝔦, H^j(𝔦, ℂ)), the collapse check, and the recursive H².

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::ResultCache;
use crate::cohomology::{cohomology_checked, cohomology_upto, CohomologyRepr, CohomologyResult, Route};
use crate::error::{Error, Result};
use crate::koszul::{
    check_representation, dual_module, ideal_cohomology_module, lambda_s_module, trivial_module, DualSign, GModule,
};
use crate::realize::{build, quotient_with_lifts, recursion_step, Family, FamilyParams, IdealDesignation, NilpotentAlgebra, OspOptions};
use crate::supercore::{Parity, SymbolSystem, Weight};

/// E₂^{i,j} for i + j ≤ K.
#[derive(Clone, Debug)]
pub struct E2Page {
    pub k_max: usize,
    pub terms: BTreeMap<(usize, usize), CohomologyResult>,
    /// The ideal was not abelian, so H^j(𝔦, ℂ) was computed from its own Koszul complex.
    pub fallback: bool,
}

impl E2Page {
    pub fn total(&self, i: usize, j: usize) -> usize {
        self.terms[&(i, j)].total
    }

    /// Σ_{i+j=k} E₂^{i,j}, per weight and parity.
    pub fn diagonal(&self, k: usize) -> BTreeMap<Weight, (usize, usize)> {
        let mut out: BTreeMap<Weight, (usize, usize)> = BTreeMap::new();
        for i in 0..=k {
            for b in &self.terms[&(i, k - i)].blocks {
                let e = out.entry(b.weight.clone()).or_default();
                e.0 += b.even;
                e.1 += b.odd;
            }
        }
        out
    }

    pub fn to_repr(&self) -> E2Repr {
        E2Repr {
            schema: "supercohom.e2/1".into(),
            k_max: self.k_max,
            fallback: self.fallback,
            grid: (0..=self.k_max).map(|j| (0..=self.k_max - j).map(|i| self.total(i, j)).collect()).collect(),
            terms: self.terms.iter().map(|(&(i, j), r)| E2TermRepr { i, j, result: r.to_repr() }).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2TermRepr {
    pub i: usize,
    pub j: usize,
    pub result: CohomologyRepr,
}

/// `grid[j][i]` is dim E₂^{i,j}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Repr {
    pub schema: String,
    pub k_max: usize,
    pub fallback: bool,
    pub grid: Vec<Vec<usize>>,
    pub terms: Vec<E2TermRepr>,
}

/// Coefficient module H^j(𝔦, ℂ) over 𝔫/𝔦: Λ_s^j(𝔦*) for abelian 𝔦, computed otherwise.
pub fn ideal_cohomology(
    alg: &NilpotentAlgebra,
    ideal: &IdealDesignation,
    quotient: &NilpotentAlgebra,
    lifts: &[usize],
    j: usize,
    sign: DualSign,
) -> Result<GModule> {
    let module = if ideal.is_abelian(alg) {
        lambda_s_module(&dual_module(alg, ideal, lifts, sign), quotient, j)
    } else {
        ideal_cohomology_module(alg, ideal, lifts, j)?
    };
    check_representation(quotient, &module)?;
    Ok(module)
}

pub fn e2_page(alg: &NilpotentAlgebra, ideal: &IdealDesignation, k_max: usize, sign: DualSign, allow_large: bool) -> Result<E2Page> {
    ideal.check(alg)?;
    let (q, lifts) = quotient_with_lifts(alg, ideal)?;
    let columns: Vec<Result<Vec<CohomologyResult>>> = (0..=k_max)
        .into_par_iter()
        .map(|j| {
            let module = ideal_cohomology(alg, ideal, &q, &lifts, j, sign)?;
            cohomology_upto(&q, &module, k_max - j, allow_large)
        })
        .collect();
    let mut terms = BTreeMap::new();
    for (j, col) in columns.into_iter().enumerate() {
        for (i, mut r) in col?.into_iter().enumerate() {
            r.params = alg.params.clone();
            r.coefficients = format!("E2[{i},{j}]");
            terms.insert((i, j), r);
        }
    }
    Ok(E2Page { k_max, terms, fallback: !ideal.is_abelian(alg) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDiff {
    pub weight: String,
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseRow {
    pub k: usize,
    /// dim H^k(𝔫, ℂ)
    pub lhs: usize,
    /// Σ_{i+j=k} dim E₂^{i,j}
    pub rhs: usize,
    pub split: Vec<usize>,
    pub weight_diffs: Vec<WeightDiff>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub schema: String,
    pub family: String,
    pub m: usize,
    pub n: usize,
    pub fallback: bool,
    pub rows: Vec<CollapseRow>,
    pub e2: E2Repr,
}

impl CollapseReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Compare H^k(𝔫) with the E₂ diagonal sums for every k ≤ K, in total and per weight.
pub fn collapse_check(alg: &NilpotentAlgebra, ideal: &IdealDesignation, k_max: usize, sign: DualSign, allow_large: bool) -> Result<CollapseReport> {
    let page = e2_page(alg, ideal, k_max, sign, allow_large)?;
    let direct = cohomology_upto(alg, &trivial_module(alg), k_max, allow_large)?;
    let rows = direct
        .iter()
        .map(|h| {
            let k = h.degree;
            let diag = page.diagonal(k);
            let lhs_map: BTreeMap<Weight, (usize, usize)> = h.blocks.iter().map(|b| (b.weight.clone(), (b.even, b.odd))).collect();
            let mut weights: Vec<&Weight> = lhs_map.keys().chain(diag.keys()).collect();
            weights.sort();
            weights.dedup();
            let weight_diffs: Vec<WeightDiff> = weights
                .into_iter()
                .filter_map(|w| {
                    let l = lhs_map.get(w).copied().unwrap_or_default();
                    let r = diag.get(w).copied().unwrap_or_default();
                    (l != r).then(|| WeightDiff { weight: w.label(), lhs: l, rhs: r })
                })
                .collect();
            let split: Vec<usize> = (0..=k).map(|i| page.total(i, k - i)).collect();
            let rhs = split.iter().sum();
            CollapseRow { k, lhs: h.total, rhs, split, holds: h.total == rhs && weight_diffs.is_empty(), weight_diffs }
        })
        .collect();
    Ok(CollapseReport {
        schema: "supercohom.collapse/1".into(),
        family: alg.params.family.clone(),
        m: alg.params.m,
        n: alg.params.n,
        fallback: page.fallback,
        rows,
        e2: page.to_repr(),
    })
}

/// One level of the recursion: H²(𝔫) = E₂^{0,2} + E₂^{1,1} + H²(smaller).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionStep {
    pub m: usize,
    pub n: usize,
    pub h0_h2_ideal: usize,
    pub h1_h1_ideal: usize,
    pub smaller: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct RecursiveH2 {
    pub result: CohomologyResult,
    pub steps: Vec<RecursionStep>,
    pub base: (usize, usize, usize),
}

fn sorted_restricted(ws: &[(Weight, Parity)], target: &Arc<SymbolSystem>) -> Option<Vec<(Weight, Parity)>> {
    let mut out = ws.iter().map(|(w, p)| w.restrict(target).map(|r| (r, *p))).collect::<Option<Vec<_>>>()?;
    out.sort();
    Some(out)
}

/// H² by the Hochschild–Serre recursion down to the family's base case, where it is computed
/// directly. Each level rebuilds the smaller algebra and insists that its weight multiset matches
/// 𝔫/𝔦; E₂^{2,0} = H²(𝔫/𝔦) is then taken from the smaller algebra.
pub fn h2_recursive(family: Family, m: usize, n: usize, sign: DualSign, cache: Option<&ResultCache>) -> Result<RecursiveH2> {
    let opts = OspOptions::default();
    let (alg, ideal) = build(family, m, n, &opts)?;
    let Some((sm, sn)) = recursion_step(family, m, n) else {
        let h = cached_h2(&alg, family, m, n, cache)?;
        return Ok(RecursiveH2 { base: (m, n, h.total), result: h, steps: vec![] });
    };
    let ideal = ideal.ok_or_else(|| Error::Recursion(format!("{} has no ideal", family.display(m, n))))?;
    let (q, lifts) = quotient_with_lifts(&alg, &ideal)?;
    let (smaller, _) = build(family, sm, sn, &opts)?;
    let qw = sorted_restricted(&q.weight_multiset(), smaller.symbols());
    if qw.as_ref() != Some(&smaller.weight_multiset()) {
        return Err(Error::Recursion(format!(
            "𝔫/𝔦 for {} does not match the weights of {}",
            family.display(m, n),
            family.display(sm, sn)
        )));
    }
    let m2 = ideal_cohomology(&alg, &ideal, &q, &lifts, 2, sign)?;
    let m1 = ideal_cohomology(&alg, &ideal, &q, &lifts, 1, sign)?;
    let e02 = cohomology_checked(&q, &m2, 0, false)?;
    let e11 = cohomology_checked(&q, &m1, 1, false)?;
    let inner = h2_recursive(family, sm, sn, sign, cache)?;
    let mut dims: Vec<(Weight, Parity, usize)> = Vec::new();
    for r in [&e02, &e11] {
        for b in &r.blocks {
            dims.push((b.weight.clone(), Parity::Even, b.even));
            dims.push((b.weight.clone(), Parity::Odd, b.odd));
        }
    }
    for b in &inner.result.blocks {
        let w = b.weight.embed(alg.symbols()).ok_or_else(|| Error::Recursion("cannot embed smaller weights".into()))?;
        dims.push((w.clone(), Parity::Even, b.even));
        dims.push((w, Parity::Odd, b.odd));
    }
    let result = CohomologyResult::from_dims(alg.params.clone(), 2, Route::SpectralSum, "trivial", alg.symbols().symbols.clone(), dims);
    let mut steps = vec![RecursionStep { m, n, h0_h2_ideal: e02.total, h1_h1_ideal: e11.total, smaller: (sm, sn) }];
    steps.extend(inner.steps);
    Ok(RecursiveH2 { result, steps, base: inner.base })
}

fn cached_h2(alg: &NilpotentAlgebra, family: Family, m: usize, n: usize, cache: Option<&ResultCache>) -> Result<CohomologyResult> {
    let key = format!("{}-{m}-{n}-h2-trivial", family.name());
    if let Some(c) = cache {
        if let Some(r) = c.load(&key, alg.symbols()) {
            return Ok(r);
        }
    }
    let r = cohomology_checked(alg, &trivial_module(alg), 2, false)?;
    if let Some(c) = cache {
        c.store(&key, alg.symbols(), &r);
    }
    Ok(r)
}

/// Parameters for which 𝔫/𝔦 should look like the smaller family member.
pub fn quotient_matches_smaller(family: Family, m: usize, n: usize) -> Result<bool> {
    let opts = OspOptions::default();
    let (alg, ideal) = build(family, m, n, &opts)?;
    let Some((sm, sn)) = recursion_step(family, m, n) else { return Ok(true) };
    let ideal = ideal.expect("infinite families carry an ideal");
    let q = crate::realize::quotient_algebra(&alg, &ideal)?;
    let (smaller, _) = build(family, sm, sn, &opts)?;
    Ok(sorted_restricted(&q.weight_multiset(), smaller.symbols()).as_ref() == Some(&smaller.weight_multiset()))
}

/// The params actually used by the recursion, from the top down to the base case.
pub fn recursion_chain(family: Family, m: usize, n: usize) -> Vec<FamilyParams> {
    let mut out = vec![FamilyParams::new(family, m, n)];
    let (mut a, mut b) = (m, n);
    while let Some((x, y)) = recursion_step(family, a, b) {
        out.push(FamilyParams::new(family, x, y));
        (a, b) = (x, y);
    }
    out
}
