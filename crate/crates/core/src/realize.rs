//! Matrix realizations of the nilpotent subalgebras 𝔫, their distinguished ideals, quotients and
//! derived subalgebras.
//!
//! Infinite families live inside an ambient 𝔤𝔩(M|N) whose rows and columns are labeled
//! 1̄,…,M̄ (even block) and 1,…,N (odd block); brackets are computed by the sparse
//! supercommutator and solved back into the basis. Exceptional families are abelian and carry
//! formal weights only.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, compress, SparseVec};
use crate::supercore::{format_rational, rat, Parity, Rational, SymbolSystem, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Index {
    Bar(usize),
    Unbar(usize),
}

impl Index {
    pub fn parity(self) -> Parity {
        match self {
            Index::Bar(_) => Parity::Even,
            Index::Unbar(_) => Parity::Odd,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Bar(i) => write!(f, "{i}\u{304}"),
            Index::Unbar(i) => write!(f, "{i}"),
        }
    }
}

/// Sparse element of 𝔤𝔩(M|N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    shape: (usize, usize),
    entries: BTreeMap<(Index, Index), Rational>,
}

impl SuperMatrix {
    pub fn zero(shape: (usize, usize)) -> Self {
        SuperMatrix { shape, entries: BTreeMap::new() }
    }

    /// Elementary matrix E(r, c).
    pub fn unit(shape: (usize, usize), r: Index, c: Index) -> Self {
        SuperMatrix::from_entries(shape, [((r, c), Rational::one())])
    }

    pub fn from_entries(shape: (usize, usize), entries: impl IntoIterator<Item = ((Index, Index), Rational)>) -> Self {
        let mut m = SuperMatrix::zero(shape);
        for (k, v) in entries {
            m.add_entry(k, v);
        }
        m
    }

    fn add_entry(&mut self, k: (Index, Index), v: Rational) {
        let slot = self.entries.entry(k).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&k);
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    pub fn entries(&self) -> &BTreeMap<(Index, Index), Rational> {
        &self.entries
    }

    pub fn get(&self, r: Index, c: Index) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parity of a homogeneous nonzero matrix.
    pub fn parity(&self) -> Option<Parity> {
        let ps: BTreeSet<Parity> = self.entries.keys().map(|(r, c)| r.parity() + c.parity()).collect();
        (ps.len() == 1).then(|| *ps.iter().next().unwrap())
    }

    pub fn mul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape, other.shape));
        }
        let mut by_row: BTreeMap<Index, Vec<(Index, &Rational)>> = BTreeMap::new();
        for ((r, c), v) in &other.entries {
            by_row.entry(*r).or_default().push((*c, v));
        }
        let mut out = SuperMatrix::zero(self.shape);
        for ((r, k), a) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (c, b) in row {
                    out.add_entry((*r, *c), a * *b);
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, s: &Rational) -> SuperMatrix {
        SuperMatrix::from_entries(self.shape, self.entries.iter().map(|(k, v)| (*k, v * s)))
    }

    pub fn plus(&self, other: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry(*k, v.clone());
        }
        out
    }

    pub fn label(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for ((r, c), v) in &self.entries {
            let neg = v < &Rational::zero();
            let a = if neg { -v.clone() } else { v.clone() };
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if !a.is_one() {
                s.push_str(&format_rational(&a));
            }
            s.push_str(&format!("E({r},{c})"));
        }
        s
    }
}

/// x·y − (−1)^{|x||y|} y·x for homogeneous x, y.
pub fn supercommutator(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    if x.shape != y.shape {
        return Err(Error::ShapeMismatch(x.shape, y.shape));
    }
    if x.is_zero() || y.is_zero() {
        return Ok(SuperMatrix::zero(x.shape));
    }
    let px = x.parity().ok_or(Error::Inhomogeneous)?;
    let py = y.parity().ok_or(Error::Inhomogeneous)?;
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    Ok(xy.plus(&yx.scaled(&rat(-px.sign_with(py)))))
}

/// The ambient 𝔤𝔩(M|N) together with the torus weight of each standard basis vector.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub shape: (usize, usize),
    pub coords: BTreeMap<Index, Weight>,
}

impl Ambient {
    pub fn indices(&self) -> impl Iterator<Item = Index> + '_ {
        self.coords.keys().copied()
    }

    pub fn unit_weight(&self, r: Index, c: Index) -> Weight {
        &self.coords[&r] - &self.coords[&c]
    }

    /// Diagonal torus element dual to symbol `s`.
    pub fn torus(&self, s: usize) -> SuperMatrix {
        SuperMatrix::from_entries(self.shape, self.coords.iter().map(|(i, w)| ((*i, *i), w.coeff(s).clone())))
    }
}

#[derive(Clone, Debug)]
pub enum Realization {
    Matrix(SuperMatrix),
    Formal,
}

#[derive(Clone, Debug)]
pub struct BasisVector {
    pub id: usize,
    pub parity: Parity,
    pub weight: Weight,
    pub realization: Realization,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Gl,
    Sl,
    OspOdd,
    OspEven,
    Q,
    D21a,
    G3,
    F4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::OspOdd => "osp-odd",
            Family::OspEven => "osp-even",
            Family::Q => "q",
            Family::D21a => "D21a",
            Family::G3 => "G3",
            Family::F4 => "F4",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "gl" => Family::Gl,
            "sl" => Family::Sl,
            "osp-odd" | "osp_odd" => Family::OspOdd,
            "osp-even" | "osp_even" => Family::OspEven,
            "q" => Family::Q,
            "D21a" | "d21a" => Family::D21a,
            "G3" | "g3" => Family::G3,
            "F4" | "f4" => Family::F4,
            _ => return None,
        })
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::D21a | Family::G3 | Family::F4)
    }

    /// Human name of the ambient superalgebra, e.g. `osp(5|4)`.
    pub fn display(self, m: usize, n: usize) -> String {
        match self {
            Family::Gl => format!("gl({m}|{n})"),
            Family::Sl => format!("sl({m}|{n})"),
            Family::OspOdd => format!("osp({}|{})", 2 * m + 1, 2 * n),
            Family::OspEven => format!("osp({}|{})", 2 * m, 2 * n),
            Family::Q => format!("q({n})"),
            Family::D21a => "D(2,1;α)".into(),
            Family::G3 => "G(3)".into(),
            Family::F4 => "F(4)".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: String,
    pub m: usize,
    pub n: usize,
}

impl FamilyParams {
    pub fn new(family: Family, m: usize, n: usize) -> Self {
        FamilyParams { family: family.name().into(), m, n }
    }
}

/// A finite-dimensional nilpotent Lie superalgebra with a weight-homogeneous basis.
#[derive(Clone, Debug)]
pub struct NilpotentAlgebra {
    pub params: FamilyParams,
    symbols: Arc<SymbolSystem>,
    basis: Vec<BasisVector>,
    table: Vec<SparseVec>,
    ambient: Option<Ambient>,
}

impl NilpotentAlgebra {
    /// Assemble from a full bracket table (`table[i * d + j] = [x_i, x_j]`).
    pub fn from_table(
        params: FamilyParams,
        symbols: Arc<SymbolSystem>,
        basis: Vec<BasisVector>,
        table: Vec<SparseVec>,
    ) -> Self {
        assert_eq!(table.len(), basis.len() * basis.len());
        NilpotentAlgebra { params, symbols, basis, table, ambient: None }
    }

    pub fn abelian(params: FamilyParams, symbols: Arc<SymbolSystem>, vectors: Vec<(String, Parity, Weight)>) -> Self {
        let basis: Vec<BasisVector> = vectors
            .into_iter()
            .enumerate()
            .map(|(id, (label, parity, weight))| BasisVector { id, parity, weight, realization: Realization::Formal, label })
            .collect();
        let d = basis.len();
        NilpotentAlgebra::from_table(params, symbols, basis, vec![Vec::new(); d * d])
    }

    /// Build from homogeneous matrices, computing every bracket by supercommutator and solving
    /// it back into the span of the basis.
    pub fn from_matrices(
        params: FamilyParams,
        ambient: Ambient,
        vectors: Vec<(String, SuperMatrix, Weight)>,
    ) -> Result<Self> {
        let symbols = ambient.coords.values().next().map(|w| w.tag().clone()).unwrap_or_else(|| Arc::new(SymbolSystem {
            name: "empty".into(),
            symbols: vec![],
        }));
        let mut basis = Vec::with_capacity(vectors.len());
        for (id, (label, mat, weight)) in vectors.into_iter().enumerate() {
            if mat.shape() != ambient.shape {
                return Err(Error::ShapeMismatch(mat.shape(), ambient.shape));
            }
            let parity = mat.parity().ok_or(Error::Inhomogeneous)?;
            basis.push(BasisVector { id, parity, weight, realization: Realization::Matrix(mat), label });
        }
        let mut groups: BTreeMap<(Weight, Parity), Vec<usize>> = BTreeMap::new();
        for b in &basis {
            groups.entry((b.weight.clone(), b.parity)).or_default().push(b.id);
        }
        let mat = |i: usize| match &basis[i].realization {
            Realization::Matrix(m) => m,
            Realization::Formal => unreachable!(),
        };
        let d = basis.len();
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                let c = supercommutator(mat(i), mat(j))?;
                if c.is_zero() {
                    continue;
                }
                let key = (&basis[i].weight + &basis[j].weight, basis[i].parity + basis[j].parity);
                let not_closed = || Error::NotClosed(basis[i].label.clone(), basis[j].label.clone());
                let cands = groups.get(&key).ok_or_else(not_closed)?;
                let cells: Vec<(Index, Index)> = c
                    .entries()
                    .keys()
                    .chain(cands.iter().flat_map(|&t| mat(t).entries().keys()))
                    .copied()
                    .sorted()
                    .dedup()
                    .collect();
                let columns: Vec<Vec<Rational>> =
                    cands.iter().map(|&t| cells.iter().map(|&(r, cc)| mat(t).get(r, cc)).collect()).collect();
                let target: Vec<Rational> = cells.iter().map(|&(r, cc)| c.get(r, cc)).collect();
                let x = linalg::solve_in_span(&columns, &target).ok_or_else(not_closed)?;
                table[i * d + j] = compress(cands.iter().copied().zip(x).collect());
            }
        }
        Ok(NilpotentAlgebra { params, symbols, basis, table, ambient: Some(ambient) })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.basis.iter().filter(|b| b.parity == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn symbols(&self) -> &Arc<SymbolSystem> {
        &self.symbols
    }

    pub fn ambient(&self) -> Option<&Ambient> {
        self.ambient.as_ref()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.basis[i].weight
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Bilinear extension of the bracket to sparse coordinate vectors.
    pub fn bracket_vectors(&self, u: &[(usize, Rational)], v: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in u {
            for (j, b) in v {
                for (k, c) in self.bracket(*i, *j) {
                    acc.push((*k, a * b * c));
                }
            }
        }
        compress(acc)
    }

    /// The stored half of the bracket table: (i, j, [x_i, x_j]) for i ≤ j with nonzero bracket.
    pub fn bracket_triples(&self) -> Vec<(usize, usize, &SparseVec)> {
        (0..self.dim())
            .flat_map(|i| (i..self.dim()).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let b = self.bracket(i, j);
                (!b.is_empty()).then_some((i, j, b))
            })
            .collect()
    }

    /// Sorted (weight, parity) multiset of the basis.
    pub fn weight_multiset(&self) -> Vec<(Weight, Parity)> {
        self.basis.iter().map(|b| (b.weight.clone(), b.parity)).sorted().collect()
    }

    /// First basis triple violating [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|}[b,[a,c]], if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let unit = |i: usize| vec![(i, Rational::one())];
        for a in 0..d {
            for b in 0..d {
                let ab = self.bracket(a, b);
                let s = rat(self.parity(a).sign_with(self.parity(b)));
                for c in 0..d {
                    let lhs = self.bracket_vectors(&unit(a), self.bracket(b, c));
                    let mut rhs = self.bracket_vectors(ab, &unit(c));
                    rhs.extend(self.bracket_vectors(&unit(b), self.bracket(a, c)).into_iter().map(|(k, x)| (k, x * &s)));
                    if lhs != compress(rhs) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Super-antisymmetry, weight and parity additivity, super Jacobi, and (for matrix
    /// realizations) agreement of the stored weights with the torus action.
    pub fn check_structure(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let s = rat(-self.parity(i).sign_with(self.parity(j)));
                let flipped: SparseVec = self.bracket(i, j).iter().map(|(k, c)| (*k, c * &s)).collect();
                if &flipped != self.bracket(j, i) {
                    return Err(Error::Invariant(format!(
                        "super-antisymmetry fails for {} and {}",
                        self.label(i),
                        self.label(j)
                    )));
                }
                let w = self.weight(i) + self.weight(j);
                let p = self.parity(i) + self.parity(j);
                for (k, _) in self.bracket(i, j) {
                    if self.weight(*k) != &w || self.parity(*k) != p {
                        return Err(Error::Invariant(format!(
                            "[{}, {}] has a term {} of the wrong weight or parity",
                            self.label(i),
                            self.label(j),
                            self.label(*k)
                        )));
                    }
                }
            }
        }
        if let Some((a, b, c)) = self.jacobi_violation() {
            return Err(Error::Invariant(format!(
                "super Jacobi fails for ({}, {}, {})",
                self.label(a),
                self.label(b),
                self.label(c)
            )));
        }
        if let Some(amb) = &self.ambient {
            for b in &self.basis {
                let Realization::Matrix(x) = &b.realization else { continue };
                for s in 0..self.symbols.len() {
                    let hx = supercommutator(&amb.torus(s), x)?;
                    if hx != x.scaled(b.weight.coeff(s)) {
                        return Err(Error::Invariant(format!(
                            "torus action on {} disagrees with its weight {}",
                            b.label, b.weight
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_catalog(&self, ideal: Option<&IdealDesignation>) -> AlgebraCatalog {
        AlgebraCatalog {
            schema: "supercohom.algebra/1".into(),
            family: self.params.family.clone(),
            m: self.params.m,
            n: self.params.n,
            symbols: self.symbols.symbols.clone(),
            basis: self
                .basis
                .iter()
                .map(|b| CatalogVector {
                    id: b.id,
                    label: b.label.clone(),
                    parity: b.parity,
                    weight: b.weight.coeffs().iter().map(format_rational).collect(),
                    weight_label: b.weight.label(),
                })
                .collect(),
            brackets: self
                .bracket_triples()
                .into_iter()
                .map(|(i, j, v)| CatalogBracket {
                    i,
                    j,
                    terms: v.iter().map(|(k, c)| (*k, format_rational(c))).collect(),
                })
                .collect(),
            ideal: ideal.map(|i| i.members().to_vec()),
            abelian: self.is_abelian(),
        }
    }
}

/// Serializable snapshot of an algebra: basis, weights and the stored half of the bracket table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraCatalog {
    pub schema: String,
    pub family: String,
    pub m: usize,
    pub n: usize,
    pub symbols: Vec<String>,
    pub basis: Vec<CatalogVector>,
    pub brackets: Vec<CatalogBracket>,
    pub ideal: Option<Vec<usize>>,
    pub abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogVector {
    pub id: usize,
    pub label: String,
    pub parity: Parity,
    pub weight: Vec<String>,
    pub weight_label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogBracket {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, String)>,
}

/// A set of basis vectors spanning an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDesignation {
    members: Vec<usize>,
}

impl IdealDesignation {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        IdealDesignation { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// [𝔫, 𝔦] ⊆ 𝔦, checked on every basis pair.
    pub fn check(&self, alg: &NilpotentAlgebra) -> Result<()> {
        for x in 0..alg.dim() {
            for &y in &self.members {
                for (z, _) in alg.bracket(x, y) {
                    if !self.contains(*z) {
                        return Err(Error::NotIdeal(alg.label(x).into(), alg.label(y).into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self, alg: &NilpotentAlgebra) -> bool {
        self.members.iter().all(|&a| self.members.iter().all(|&b| alg.bracket(a, b).is_empty()))
    }

    pub fn complement(&self, alg: &NilpotentAlgebra) -> Vec<usize> {
        (0..alg.dim()).filter(|&i| !self.contains(i)).collect()
    }
}

/// Restriction of the algebra to a bracket-closed subset of its basis.
pub fn subalgebra(alg: &NilpotentAlgebra, members: &[usize], family: &str) -> Result<NilpotentAlgebra> {
    let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(t, &z)| (z, t)).collect();
    let k = members.len();
    let mut table = vec![Vec::new(); k * k];
    for (a, &x) in members.iter().enumerate() {
        for (b, &y) in members.iter().enumerate() {
            let mut v = Vec::new();
            for (z, c) in alg.bracket(x, y) {
                let t = pos.get(z).ok_or_else(|| Error::NotClosed(alg.label(x).into(), alg.label(y).into()))?;
                v.push((*t, c.clone()));
            }
            table[a * k + b] = v;
        }
    }
    let basis = members
        .iter()
        .enumerate()
        .map(|(id, &z)| BasisVector { id, realization: Realization::Formal, ..alg.basis[z].clone() })
        .collect();
    let params = FamilyParams { family: family.into(), m: alg.params.m, n: alg.params.n };
    Ok(NilpotentAlgebra::from_table(params, alg.symbols.clone(), basis, table))
}

/// 𝔫/𝔦 together with the parent id of each surviving basis vector (its lift).
pub fn quotient_with_lifts(alg: &NilpotentAlgebra, ideal: &IdealDesignation) -> Result<(NilpotentAlgebra, Vec<usize>)> {
    ideal.check(alg)?;
    let keep = ideal.complement(alg);
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(t, &z)| (z, t)).collect();
    let k = keep.len();
    let mut table = vec![Vec::new(); k * k];
    for (a, &x) in keep.iter().enumerate() {
        for (b, &y) in keep.iter().enumerate() {
            table[a * k + b] =
                alg.bracket(x, y).iter().filter_map(|(z, c)| pos.get(z).map(|t| (*t, c.clone()))).collect();
        }
    }
    let basis = keep
        .iter()
        .enumerate()
        .map(|(id, &z)| BasisVector { id, realization: Realization::Formal, ..alg.basis[z].clone() })
        .collect();
    let params = FamilyParams { family: format!("{}/I", alg.params.family), m: alg.params.m, n: alg.params.n };
    Ok((NilpotentAlgebra::from_table(params, alg.symbols.clone(), basis, table), keep))
}

pub fn quotient_algebra(alg: &NilpotentAlgebra, ideal: &IdealDesignation) -> Result<NilpotentAlgebra> {
    quotient_with_lifts(alg, ideal).map(|(q, _)| q)
}

/// A weight-homogeneous basis of [𝔫, 𝔫], in coordinates of 𝔫's basis.
#[derive(Clone, Debug)]
pub struct DerivedSubalgebra {
    pub vectors: Vec<SparseVec>,
    pub weights: Vec<Weight>,
    pub parities: Vec<Parity>,
}

impl DerivedSubalgebra {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

pub fn derived_subalgebra(alg: &NilpotentAlgebra) -> DerivedSubalgebra {
    let mut groups: BTreeMap<(Weight, Parity), Vec<usize>> = BTreeMap::new();
    for b in alg.basis() {
        groups.entry((b.weight.clone(), b.parity)).or_default().push(b.id);
    }
    let mut spans: BTreeMap<(Weight, Parity), Vec<&SparseVec>> = BTreeMap::new();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let v = alg.bracket(i, j);
            if let Some((k, _)) = v.first() {
                spans.entry((alg.weight(*k).clone(), alg.parity(*k))).or_default().push(v);
            }
        }
    }
    let mut out = DerivedSubalgebra { vectors: vec![], weights: vec![], parities: vec![] };
    for (key, vs) in spans {
        let ids = &groups[&key];
        let local = |g: usize| ids.iter().position(|&t| t == g).expect("bracket outside its weight group");
        let mut rows: Vec<Vec<Rational>> = vs
            .iter()
            .map(|v| {
                let mut r = vec![Rational::zero(); ids.len()];
                for (k, c) in v.iter() {
                    r[local(*k)] = c.clone();
                }
                r
            })
            .collect();
        linalg::rref(&mut rows, ids.len());
        for r in rows {
            out.vectors.push(r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(t, c)| (ids[t], c.clone())).collect());
            out.weights.push(key.0.clone());
            out.parities.push(key.1);
        }
    }
    out
}

fn gl_ambient(m: usize, n: usize, symbols: &Arc<SymbolSystem>, q_type: bool) -> Ambient {
    let mut coords = BTreeMap::new();
    for i in 1..=m {
        coords.insert(Index::Bar(i), Weight::unit(symbols.clone(), i - 1));
    }
    for j in 1..=n {
        let s = if q_type { j - 1 } else { m + j - 1 };
        coords.insert(Index::Unbar(j), Weight::unit(symbols.clone(), s));
    }
    Ambient { shape: (m, n), coords }
}

/// 𝔫 for 𝔤𝔩(m|n), m ≥ n ≥ 1, and its ideal: the last column block(s).
pub fn build_gl(m: usize, n: usize) -> Result<(NilpotentAlgebra, IdealDesignation)> {
    build_gl_like(Family::Gl, m, n)
}

/// 𝔰𝔩(m|n) has the same 𝔫 as 𝔤𝔩(m|n).
pub fn build_sl(m: usize, n: usize) -> Result<(NilpotentAlgebra, IdealDesignation)> {
    build_gl_like(Family::Sl, m, n)
}

fn build_gl_like(family: Family, m: usize, n: usize) -> Result<(NilpotentAlgebra, IdealDesignation)> {
    if n < 1 || m < n {
        return Err(Error::InvalidParameters(format!("{} needs m ≥ n ≥ 1, got m={m}, n={n}", family.name())));
    }
    let symbols = SymbolSystem::standard(m, n);
    let amb = gl_ambient(m, n, &symbols, false);
    let shape = amb.shape;
    let mut cells = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            cells.push((Index::Bar(i), Index::Bar(j)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            cells.push((Index::Unbar(i), Index::Unbar(j)));
        }
    }
    for i in 1..=m {
        for j in (i + 1)..=n {
            cells.push((Index::Bar(i), Index::Unbar(j)));
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=m {
            cells.push((Index::Unbar(i), Index::Bar(j)));
        }
    }
    let vectors: Vec<(String, SuperMatrix, Weight)> = cells
        .iter()
        .map(|&(r, c)| (format!("E({r},{c})"), SuperMatrix::unit(shape, r, c), amb.unit_weight(r, c)))
        .collect();
    let ideal = IdealDesignation::new(
        cells
            .iter()
            .enumerate()
            .filter(|(_, (_, c))| if m == n { matches!(c, Index::Bar(j) | Index::Unbar(j) if *j == m) } else { *c == Index::Bar(m) })
            .map(|(t, _)| t)
            .collect(),
    );
    let alg = NilpotentAlgebra::from_matrices(FamilyParams::new(family, m, n), amb, vectors)?;
    ideal.check(&alg)?;
    Ok((alg, ideal))
}

/// 𝔫 for 𝔮(n), n ≥ 2: Ẽ(i,j) = E(ī,j̄)+E(i,j) and Ē(i,j) = E(ī,j)+E(i,j̄) for i < j, with the
/// ideal spanned by those with j = n.
pub fn build_q(n: usize) -> Result<(NilpotentAlgebra, IdealDesignation)> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("q needs n ≥ 2, got n={n}")));
    }
    let symbols = SymbolSystem::epsilon(n);
    let amb = gl_ambient(n, n, &symbols, true);
    let shape = amb.shape;
    let mut vectors = Vec::new();
    let mut ideal = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let w = amb.unit_weight(Index::Bar(i), Index::Bar(j));
            let even = SuperMatrix::unit(shape, Index::Bar(i), Index::Bar(j))
                .plus(&SuperMatrix::unit(shape, Index::Unbar(i), Index::Unbar(j)));
            let odd = SuperMatrix::unit(shape, Index::Bar(i), Index::Unbar(j))
                .plus(&SuperMatrix::unit(shape, Index::Unbar(i), Index::Bar(j)));
            if j == n {
                ideal.extend([vectors.len(), vectors.len() + 1]);
            }
            vectors.push((format!("Ẽ({i},{j})"), even, w.clone()));
            vectors.push((format!("Ē({i},{j})"), odd, w));
        }
    }
    let ideal = IdealDesignation::new(ideal);
    let alg = NilpotentAlgebra::from_matrices(FamilyParams::new(Family::Q, 0, n), amb, vectors)?;
    ideal.check(&alg)?;
    Ok((alg, ideal))
}

/// Which coordinate cuts out the distinguished ideal of an orthosymplectic 𝔫.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealReading {
    /// Root vectors involving the coordinate of largest |h|: ε_m when m ≥ n, otherwise δ_n.
    #[default]
    Leading,
    /// Root vectors involving ε_m or δ_n.
    EpsilonOrDelta,
    /// Root vectors involving ε_m.
    Epsilon,
}

impl IdealReading {
    pub fn name(self) -> &'static str {
        match self {
            IdealReading::Leading => "leading",
            IdealReading::EpsilonOrDelta => "epsilon-or-delta",
            IdealReading::Epsilon => "epsilon",
        }
    }
}

/// The grading element h deciding which roots are positive. Paired coordinates ε_i, δ_i
/// (i ≤ min(m, n)) must share a value so that ε_i − δ_i stays in the detecting subalgebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chamber {
    /// h(ε_i) = −i, h(δ_j) = −j.
    #[default]
    Standard,
    Values { eps: Vec<i64>, delta: Vec<i64> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OspOptions {
    pub chamber: Chamber,
    pub ideal: IdealReading,
}

fn osp_h(m: usize, n: usize, chamber: &Chamber) -> Result<(Vec<i64>, Vec<i64>)> {
    match chamber {
        Chamber::Standard => Ok(((1..=m as i64).map(|i| -i).collect(), (1..=n as i64).map(|j| -j).collect())),
        Chamber::Values { eps, delta } => {
            if eps.len() != m || delta.len() != n {
                return Err(Error::InvalidParameters("chamber needs one value per coordinate".into()));
            }
            for i in 0..m.min(n) {
                if eps[i] != delta[i] {
                    return Err(Error::InvalidParameters(format!("paired coordinates ε{0}, δ{0} must share a value", i + 1)));
                }
            }
            Ok((eps.clone(), delta.clone()))
        }
    }
}

/// 𝔫 of 𝔬𝔰𝔭(2m+1|2n) (`odd`) or 𝔬𝔰𝔭(2m|2n), realized in 𝔤𝔩(2m(+1)|2n) as the root vectors of
/// positive h preserving the form with B(ē_i, ē_{i+m}) = 1 (and B(ē_{2m+1}, ē_{2m+1}) = 1) on
/// the even block and ω(e_k, e_{k+n}) = 1 = −ω(e_{k+n}, e_k) on the odd block.
pub fn build_osp_algebra(m: usize, n: usize, odd: bool, chamber: &Chamber) -> Result<NilpotentAlgebra> {
    let family = if odd { Family::OspOdd } else { Family::OspEven };
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameters(format!("{} needs m, n ≥ 1, got m={m}, n={n}", family.name())));
    }
    let (h_eps, h_delta) = osp_h(m, n, chamber)?;
    let symbols = SymbolSystem::standard(m, n);
    let big_m = 2 * m + usize::from(odd);
    let big_n = 2 * n;
    let shape = (big_m, big_n);
    let mut coords = BTreeMap::new();
    for i in 1..=big_m {
        let w = if i <= m {
            Weight::unit(symbols.clone(), i - 1)
        } else if i <= 2 * m {
            -Weight::unit(symbols.clone(), i - m - 1)
        } else {
            Weight::zero(symbols.clone())
        };
        coords.insert(Index::Bar(i), w);
    }
    for k in 1..=big_n {
        let w = if k <= n { Weight::unit(symbols.clone(), m + k - 1) } else { -Weight::unit(symbols.clone(), m + k - n - 1) };
        coords.insert(Index::Unbar(k), w);
    }
    let amb = Ambient { shape, coords };
    let form = |a: Index, b: Index| -> i64 {
        match (a, b) {
            (Index::Bar(i), Index::Bar(j)) => {
                let partner = if i <= m { i + m } else if i <= 2 * m { i - m } else { i };
                i64::from(partner == j)
            }
            (Index::Unbar(k), Index::Unbar(l)) => {
                if k <= n && l == k + n {
                    1
                } else if k > n && l + n == k {
                    -1
                } else {
                    0
                }
            }
            _ => 0,
        }
    };
    let h = |w: &Weight| -> Rational {
        (0..m).map(|i| w.coeff(i) * rat(h_eps[i])).sum::<Rational>()
            + (0..n).map(|j| w.coeff(m + j) * rat(h_delta[j])).sum::<Rational>()
    };
    let indices: Vec<Index> = amb.indices().collect();
    let mut groups: BTreeMap<(Parity, Weight), Vec<(Index, Index)>> = BTreeMap::new();
    for &a in &indices {
        for &b in &indices {
            groups.entry((a.parity() + b.parity(), amb.unit_weight(a, b))).or_default().push((a, b));
        }
    }
    let r = m.min(n);
    let is_detecting = |w: &Weight| {
        (0..r).any(|i| {
            let mut e = Weight::unit(symbols.clone(), i);
            e = &e - &Weight::unit(symbols.clone(), m + i);
            w == &e || w == &-&e
        })
    };
    let mut vectors = Vec::new();
    for ((p, w), cells) in &groups {
        if w.is_zero() {
            continue;
        }
        let hw = h(w);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for &u in &indices {
            for &v in &indices {
                let row: Vec<Rational> = cells
                    .iter()
                    .map(|&(a, b)| {
                        let mut x = 0;
                        if b == u {
                            x += form(a, v);
                        }
                        if b == v {
                            x += p.sign_with(u.parity()) * form(u, a);
                        }
                        rat(x)
                    })
                    .collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let kernel = linalg::nullspace(&rows, cells.len());
        if kernel.is_empty() {
            continue;
        }
        if hw.is_zero() {
            if !is_detecting(w) {
                return Err(Error::InvalidParameters(format!("chamber leaves the root {w} with h = 0")));
            }
            continue;
        }
        if hw < Rational::zero() {
            continue;
        }
        for v in kernel {
            let v = linalg::primitive(&v);
            let mat = SuperMatrix::from_entries(shape, cells.iter().copied().zip(v));
            vectors.push((mat.label(), mat, w.clone()));
        }
    }
    NilpotentAlgebra::from_matrices(FamilyParams::new(family, m, n), amb, vectors)
}

/// Basis vectors whose weight involves the chosen coordinate(s).
pub fn osp_ideal(alg: &NilpotentAlgebra, m: usize, n: usize, chamber: &Chamber, reading: IdealReading) -> Result<IdealDesignation> {
    let (h_eps, h_delta) = osp_h(m, n, chamber)?;
    let coords: Vec<usize> = match reading {
        IdealReading::Leading => {
            let best_eps = (0..m).max_by_key(|&i| (h_eps[i].abs(), i)).unwrap();
            let best_delta = (0..n).max_by_key(|&j| (h_delta[j].abs(), j)).unwrap();
            if h_delta[best_delta].abs() > h_eps[best_eps].abs() {
                vec![m + best_delta]
            } else {
                vec![best_eps]
            }
        }
        IdealReading::EpsilonOrDelta => vec![m - 1, m + n - 1],
        IdealReading::Epsilon => vec![m - 1],
    };
    let ideal = IdealDesignation::new(
        (0..alg.dim()).filter(|&t| coords.iter().any(|&c| !alg.weight(t).coeff(c).is_zero())).collect(),
    );
    ideal.check(alg)?;
    Ok(ideal)
}

/// 𝔫 for 𝔬𝔰𝔭(2m+1|2n), m, n ≥ 1.
pub fn build_osp_odd(m: usize, n: usize, opts: &OspOptions) -> Result<(NilpotentAlgebra, IdealDesignation)> {
    let alg = build_osp_algebra(m, n, true, &opts.chamber)?;
    let ideal = osp_ideal(&alg, m, n, &opts.chamber, opts.ideal)?;
    Ok((alg, ideal))
}

/// 𝔫 for 𝔬𝔰𝔭(2m|2n), m, n ≥ 1.
pub fn build_osp_even(m: usize, n: usize, opts: &OspOptions) -> Result<(NilpotentAlgebra, IdealDesignation)> {
    let alg = build_osp_algebra(m, n, false, &opts.chamber)?;
    let ideal = osp_ideal(&alg, m, n, &opts.chamber, opts.ideal)?;
    Ok((alg, ideal))
}

/// Abelian 𝔫 of D(2,1;α), G(3), F(4). Weights are the negatives of the weights listed for
/// H¹(𝔫, ℂ), so that cohomology (reported with dual weights) reproduces that list; every symbol
/// is formal and independent.
pub fn build_exceptional(family: Family) -> Result<NilpotentAlgebra> {
    type Spec = (&'static str, &'static [&'static str], &'static [&'static [i64]], &'static [&'static [i64]]);
    let (name, syms, even, odd): Spec = match family {
        Family::D21a => (
            "D21a",
            &["μ1", "μ2", "μ3", "ε1", "ε2", "ε3"],
            &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]],
            &[&[0, 0, 0, 1, 1, 1], &[0, 0, 0, 1, 1, -1], &[0, 0, 0, -1, 1, 1]],
        ),
        Family::G3 => (
            "G3",
            &["μ1", "α", "β", "ω1", "ω2", "ε"],
            &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]],
            &[
                &[0, 0, 0, 1, -1, 1],
                &[0, 0, 0, -2, 1, 1],
                &[0, 0, 0, 0, 0, 1],
                &[0, 0, 0, -1, 1, 1],
                &[0, 0, 0, 2, -1, 1],
                &[0, 0, 0, 1, 0, 1],
            ],
        ),
        Family::F4 => (
            "F4",
            &["μ1", "ν1", "ν2", "ν3", "ω1", "ω2", "ω3", "ε"],
            &[
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0, 0, 0],
            ],
            &[
                &[0, 0, 0, 0, 0, -1, 1, 1],
                &[0, 0, 0, 0, -1, 1, -1, 1],
                &[0, 0, 0, 0, -1, 0, 1, 1],
                &[0, 0, 0, 0, 0, 1, -1, 1],
                &[0, 0, 0, 0, 1, -1, 1, 1],
                &[0, 0, 0, 0, 1, 0, -1, 1],
                &[0, 0, 0, 0, 0, 0, 1, 1],
            ],
        ),
        other => return Err(Error::UnknownName(other.name().into())),
    };
    let symbols = SymbolSystem::formal(name, syms);
    let mut vectors = Vec::new();
    for (t, c) in even.iter().enumerate() {
        vectors.push((format!("x{}", t + 1), Parity::Even, Weight::from_ints(symbols.clone(), c)));
    }
    for (t, c) in odd.iter().enumerate() {
        vectors.push((format!("y{}", t + 1), Parity::Odd, Weight::from_ints(symbols.clone(), c)));
    }
    Ok(NilpotentAlgebra::abelian(FamilyParams::new(family, 0, 0), symbols, vectors))
}

/// Build any family with default options; exceptional families have no ideal.
pub fn build(family: Family, m: usize, n: usize, opts: &OspOptions) -> Result<(NilpotentAlgebra, Option<IdealDesignation>)> {
    Ok(match family {
        Family::Gl => build_gl(m, n).map(|(a, i)| (a, Some(i)))?,
        Family::Sl => build_sl(m, n).map(|(a, i)| (a, Some(i)))?,
        Family::OspOdd => build_osp_odd(m, n, opts).map(|(a, i)| (a, Some(i)))?,
        Family::OspEven => build_osp_even(m, n, opts).map(|(a, i)| (a, Some(i)))?,
        Family::Q => build_q(n).map(|(a, i)| (a, Some(i)))?,
        _ => (build_exceptional(family)?, None),
    })
}

/// Parameters of the smaller algebra 𝔫/𝔦 is isomorphic to, or `None` at a base case.
/// Only meaningful for the standard chamber and the leading ideal.
pub fn recursion_step(family: Family, m: usize, n: usize) -> Option<(usize, usize)> {
    match family {
        Family::Gl | Family::Sl => match (m, n) {
            (1, 1) => None,
            _ if m == n => Some((m - 1, n - 1)),
            _ => Some((m - 1, n)),
        },
        Family::Q => (n > 2).then(|| (0, n - 1)),
        Family::OspOdd | Family::OspEven => match (m, n) {
            (1, 1) => None,
            _ if m >= n => Some((m - 1, n)),
            _ => Some((m, n - 1)),
        },
        _ => None,
    }
}

/// dim 𝔫 for 𝔤𝔩(m|n), m ≥ n: C(m,2) + n(m−n) + 3·C(n,2).
pub fn gl_dimension(m: usize, n: usize) -> usize {
    m * (m - 1) / 2 + n * (m - n) + 3 * (n * (n - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_anticommutator() {
        let s = (2, 2);
        let x = SuperMatrix::unit(s, Index::Bar(1), Index::Unbar(1));
        let y = SuperMatrix::unit(s, Index::Unbar(1), Index::Bar(1));
        let expect = SuperMatrix::unit(s, Index::Bar(1), Index::Bar(1)).plus(&SuperMatrix::unit(s, Index::Unbar(1), Index::Unbar(1)));
        assert_eq!(supercommutator(&x, &y).unwrap(), expect);
    }

    #[test]
    fn commutator_errors() {
        let a = SuperMatrix::unit((2, 2), Index::Bar(1), Index::Bar(2));
        let b = SuperMatrix::unit((3, 2), Index::Bar(1), Index::Bar(2));
        assert!(matches!(supercommutator(&a, &b), Err(Error::ShapeMismatch(..))));
        let mixed = a.plus(&SuperMatrix::unit((2, 2), Index::Bar(1), Index::Unbar(2)));
        assert!(matches!(supercommutator(&a, &mixed), Err(Error::Inhomogeneous)));
    }

    #[test]
    fn gl_rejects_m_below_n() {
        assert!(matches!(build_gl(2, 3), Err(Error::InvalidParameters(_))));
        assert!(matches!(build_q(1), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn gl22_is_abelian() {
        let (a, _) = build_gl(2, 2).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_abelian());
    }

    #[test]
    fn recursion_targets() {
        assert_eq!(recursion_step(Family::Gl, 3, 3), Some((2, 2)));
        assert_eq!(recursion_step(Family::Gl, 4, 2), Some((3, 2)));
        assert_eq!(recursion_step(Family::OspEven, 2, 3), Some((2, 2)));
        assert_eq!(recursion_step(Family::Q, 0, 2), None);
    }

    #[test]
    fn quotient_by_everything_is_zero() {
        let (a, _) = build_q(3).unwrap();
        let all = IdealDesignation::new((0..a.dim()).collect());
        assert_eq!(quotient_algebra(&a, &all).unwrap().dim(), 0);
    }
}
