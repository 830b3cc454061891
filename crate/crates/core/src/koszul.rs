//! Chevalley–Eilenberg cochains Λ_s(𝔫*) ⊗ M, coefficient modules, and the differential.
//!
//! A cochain basis element is a pair (monomial, module vector). Monomials are stored in canonical
//! order: even factors ascending (no repeats), then odd factors ascending (repeats allowed).

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, compress, SparseVec};
use crate::realize::{subalgebra, IdealDesignation, NilpotentAlgebra};
use crate::supercore::{format_rational, key_add, key_sub, rat, sign_pow, swap_sign, Keyer, Parity, Rational, Weight, WeightKey};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<usize>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn parity(&self, parities: &[Parity]) -> Parity {
        self.0.iter().map(|&x| parities[x]).sum()
    }
}

/// Reorder a wedge product into canonical order. Returns `None` when it vanishes (a repeated even
/// factor), otherwise the Koszul sign of the reordering and the canonical monomial.
pub fn normalize_wedge(factors: &[usize], parities: &[Parity]) -> Option<(i64, Monomial)> {
    let key = |x: usize| (parities[x].bit(), x);
    let mut f = factors.to_vec();
    let mut sign = 1;
    for i in 1..f.len() {
        let mut j = i;
        while j > 0 && key(f[j - 1]) > key(f[j]) {
            sign *= swap_sign(parities[f[j - 1]], parities[f[j]]);
            f.swap(j - 1, j);
            j -= 1;
        }
    }
    if f.windows(2).any(|w| w[0] == w[1] && parities[w[0]] == Parity::Even) {
        return None;
    }
    Some((sign, Monomial(f)))
}

/// All canonical monomials of degree `k`.
pub fn monomial_basis(parities: &[Parity], k: usize) -> Vec<Monomial> {
    let evens: Vec<usize> = (0..parities.len()).filter(|&i| parities[i] == Parity::Even).collect();
    let odds: Vec<usize> = (0..parities.len()).filter(|&i| parities[i] == Parity::Odd).collect();
    let mut out = Vec::new();
    for i in 0..=k.min(evens.len()) {
        for e in evens.iter().copied().combinations(i) {
            for o in odds.iter().copied().combinations_with_replacement(k - i) {
                out.push(Monomial(e.iter().chain(&o).copied().collect()));
            }
        }
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// dim Λ_s^k of a space with `even` even and `odd` odd basis vectors.
pub fn monomial_count(even: usize, odd: usize, k: usize) -> u128 {
    (0..=k.min(even))
        .map(|i| {
            let sym = if odd == 0 { u128::from(k == i) } else { binomial((odd + k - i - 1) as u128, (k - i) as u128) };
            binomial(even as u128, i as u128).saturating_mul(sym)
        })
        .fold(0u128, u128::saturating_add)
}

/// A finite-dimensional weight module: `action[x][v]` is x·e_v.
#[derive(Clone, Debug)]
pub struct GModule {
    pub name: String,
    pub parities: Vec<Parity>,
    pub weights: Vec<Weight>,
    pub labels: Vec<String>,
    action: Vec<Vec<SparseVec>>,
    rows: Vec<Vec<SparseVec>>,
}

impl GModule {
    pub fn new(
        name: impl Into<String>,
        parities: Vec<Parity>,
        weights: Vec<Weight>,
        labels: Vec<String>,
        action: Vec<Vec<SparseVec>>,
    ) -> Self {
        let d = parities.len();
        let rows = action
            .iter()
            .map(|cols| {
                let mut r: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
                for (v, col) in cols.iter().enumerate() {
                    for (w, c) in col {
                        r[*w].push((v, c.clone()));
                    }
                }
                r
            })
            .collect();
        GModule { name: name.into(), parities, weights, labels, action, rows }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn act(&self, x: usize, v: usize) -> &SparseVec {
        &self.action[x][v]
    }

    /// Row `w` of ρ(x): pairs (v, ρ(x)[w, v]).
    pub fn action_row(&self, x: usize, w: usize) -> &SparseVec {
        &self.rows[x][w]
    }

    pub fn is_trivial(&self) -> bool {
        self.action.iter().all(|cols| cols.iter().all(Vec::is_empty))
    }
}

pub fn trivial_module(alg: &NilpotentAlgebra) -> GModule {
    GModule::new(
        "trivial",
        vec![Parity::Even],
        vec![Weight::zero(alg.symbols().clone())],
        vec!["1".into()],
        vec![vec![Vec::new()]; alg.dim()],
    )
}

/// Sign convention for dual modules.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualSign {
    /// (x·f)(v) = −(−1)^{|x||f|} f(x·v).
    #[default]
    Koszul,
    /// The Koszul action twisted by (−1)^{|x|}.
    Twisted,
}

/// 𝔦* as a module over 𝔫/𝔦, the quotient basis acting through its lifts `lifts`.
pub fn dual_module(alg: &NilpotentAlgebra, ideal: &IdealDesignation, lifts: &[usize], sign: DualSign) -> GModule {
    let members = ideal.members();
    let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(t, &z)| (z, t)).collect();
    let parities: Vec<Parity> = members.iter().map(|&z| alg.parity(z)).collect();
    let weights: Vec<Weight> = members.iter().map(|&z| -alg.weight(z)).collect();
    let labels = members.iter().map(|&z| format!("{}*", alg.label(z))).collect();
    let action = lifts
        .iter()
        .map(|&x| {
            let px = alg.parity(x);
            let twist = if sign == DualSign::Twisted && px.is_odd() { -1 } else { 1 };
            // x·f_t = Σ_s −(−1)^{|x||f_t|} f_t([x, v_s]) f_s
            let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); members.len()];
            for (s, &v) in members.iter().enumerate() {
                for (z, c) in alg.bracket(x, v) {
                    let t = pos[z];
                    cols[t].push((s, c * rat(-twist * px.sign_with(parities[t]))));
                }
            }
            cols.into_iter().map(compress).collect()
        })
        .collect();
    GModule::new("ideal-dual", parities, weights, labels, action)
}

/// Λ_s^j of a module, the algebra acting by superderivations.
pub fn lambda_s_module(base: &GModule, alg: &NilpotentAlgebra, j: usize) -> GModule {
    let algebra_parities = alg.parities();
    let basis = monomial_basis(&base.parities, j);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(t, b)| (b, t)).collect();
    let parities: Vec<Parity> = basis.iter().map(|b| b.parity(&base.parities)).collect();
    let weights: Vec<Weight> = basis
        .iter()
        .map(|b| {
            b.factors().iter().fold(Weight::zero(alg.symbols().clone()), |acc, &f| &acc + &base.weights[f])
        })
        .collect();
    let labels = basis
        .iter()
        .map(|b| if b.degree() == 0 { "1".to_string() } else { b.factors().iter().map(|&f| base.labels[f].as_str()).join("∧") })
        .collect();
    let action = algebra_parities
        .iter()
        .enumerate()
        .map(|(x, &px)| {
            basis
                .iter()
                .map(|b| {
                    let mut acc = Vec::new();
                    let mut pre = Parity::Even;
                    for (k, &f) in b.factors().iter().enumerate() {
                        let s = px.sign_with(pre);
                        for (r, c) in base.act(x, f) {
                            let mut nf = b.factors().to_vec();
                            nf[k] = *r;
                            if let Some((sg, mono)) = normalize_wedge(&nf, &base.parities) {
                                acc.push((index[&mono], c * rat(sg * s)));
                            }
                        }
                        pre = pre + base.parities[f];
                    }
                    compress(acc)
                })
                .collect()
        })
        .collect();
    GModule::new(format!("lambda-s-{j}({})", base.name), parities, weights, labels, action)
}

/// ρ([x,y]) = ρ(x)ρ(y) − (−1)^{|x||y|} ρ(y)ρ(x) on every basis pair, plus weight and parity
/// compatibility of the action.
pub fn check_representation(alg: &NilpotentAlgebra, module: &GModule) -> Result<()> {
    let apply = |x: usize, v: &[(usize, Rational)]| -> SparseVec {
        compress(v.iter().flat_map(|(w, c)| module.act(x, *w).iter().map(move |(u, a)| (*u, a * c))).collect())
    };
    for x in 0..alg.dim() {
        for v in 0..module.dim() {
            let w = alg.weight(x) + &module.weights[v];
            let p = alg.parity(x) + module.parities[v];
            if module.act(x, v).iter().any(|(u, _)| module.weights[*u] != w || module.parities[*u] != p) {
                return Err(Error::Representation(format!(
                    "{} · {} has a component of the wrong weight or parity",
                    alg.label(x),
                    module.labels[v]
                )));
            }
        }
    }
    for x in 0..alg.dim() {
        for y in 0..alg.dim() {
            let s = rat(alg.parity(x).sign_with(alg.parity(y)));
            for v in 0..module.dim() {
                let unit = vec![(v, Rational::one())];
                let lhs = compress(
                    alg.bracket(x, y).iter().flat_map(|(z, c)| module.act(*z, v).iter().map(move |(u, a)| (*u, a * c))).collect(),
                );
                let mut rhs = apply(x, &apply(y, &unit));
                rhs.extend(apply(y, &apply(x, &unit)).into_iter().map(|(u, a)| (u, -a * &s)));
                if lhs != compress(rhs) {
                    return Err(Error::Representation(format!(
                        "[{}, {}] acts wrongly on {}",
                        alg.label(x),
                        alg.label(y),
                        module.labels[v]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Sparse matrix given by (row, column, value) triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrixRepr {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl SparseMatrix {
    pub fn to_repr(&self) -> SparseMatrixRepr {
        SparseMatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(r, c, v)| (*r, *c, format_rational(v))).collect(),
        }
    }

    /// self · other
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut by_row: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in &other.entries {
            by_row[*r].push((*c, v));
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (r, k, a) in &self.entries {
            for (c, b) in &by_row[*k] {
                *acc.entry((*r, *c)).or_insert_with(Rational::zero) += a * *b;
            }
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)).collect(),
        }
    }
}

/// Block label of a cochain: its weight key and parity.
pub type BlockKey = (WeightKey, Parity);

/// Cochains of `alg` with values in `module`, in degrees 0..=top.
///
/// Cells of degree k are numbered `monomial_index * dim M + v`.
pub struct CochainComplex<'a> {
    pub alg: &'a NilpotentAlgebra,
    pub module: &'a GModule,
    keyer: Keyer,
    parities: Vec<Parity>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    alg_keys: Vec<WeightKey>,
    module_keys: Vec<WeightKey>,
}

impl<'a> CochainComplex<'a> {
    pub fn new(alg: &'a NilpotentAlgebra, module: &'a GModule, top: usize) -> Self {
        let keyer = Keyer::new(alg.symbols().clone(), alg.basis().iter().map(|b| &b.weight).chain(&module.weights));
        let parities = alg.parities();
        let bases: Vec<Vec<Monomial>> = (0..=top).map(|k| monomial_basis(&parities, k)).collect();
        let index = bases.iter().map(|b| b.iter().enumerate().map(|(t, m)| (m.clone(), t)).collect()).collect();
        let alg_keys = alg.basis().iter().map(|b| keyer.key(&b.weight)).collect();
        let module_keys = module.weights.iter().map(|w| keyer.key(w)).collect();
        CochainComplex { alg, module, keyer, parities, bases, index, alg_keys, module_keys }
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn keyer(&self) -> &Keyer {
        &self.keyer
    }

    pub fn monomials(&self, k: usize) -> &[Monomial] {
        &self.bases[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.bases[k].len() * self.module.dim()
    }

    pub fn cell(&self, k: usize, cell: usize) -> (&Monomial, usize) {
        let d = self.module.dim();
        (&self.bases[k][cell / d], cell % d)
    }

    pub fn cell_index(&self, k: usize, mono: &Monomial, v: usize) -> usize {
        self.index[k][mono] * self.module.dim() + v
    }

    /// Weight wt(v) − Σ wt(m) and parity |m| + |v| of a cell.
    pub fn cell_key(&self, k: usize, cell: usize) -> BlockKey {
        let (m, v) = self.cell(k, cell);
        let mut key = self.module_keys[v].clone();
        for &f in m.factors() {
            key_sub(&mut key, &self.alg_keys[f]);
        }
        (key, m.parity(&self.parities) + self.module.parities[v])
    }

    pub fn blocks(&self, k: usize) -> BTreeMap<BlockKey, Vec<usize>> {
        let mut out: BTreeMap<BlockKey, Vec<usize>> = BTreeMap::new();
        if k > self.top() {
            return out;
        }
        for cell in 0..self.dim(k) {
            out.entry(self.cell_key(k, cell)).or_default().push(cell);
        }
        out
    }

    pub fn weight_of(&self, key: &[i64]) -> Weight {
        self.keyer.weight(key)
    }

    /// Row of d: C^k → C^{k+1} at the degree-(k+1) cell `target`, over degree-k cells.
    pub fn row(&self, k: usize, target: usize) -> SparseVec {
        let (om, vt) = self.cell(k + 1, target);
        let om = om.factors();
        let p = &self.parities;
        let d = self.module.dim();
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        let mut before = Parity::Even;
        for i in 0..om.len() {
            let rest: Vec<usize> = om.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &x)| x).collect();
            let rest = Monomial(rest);
            let ri = self.index[k][&rest];
            let rest_par = rest.parity(p);
            let pi = p[om[i]];
            for (v, c) in self.module.action_row(om[i], vt) {
                let fpar = rest_par + self.module.parities[*v];
                let tau = i + pi.bit() * (before + fpar).bit();
                acc.push((ri * d + v, c * rat(sign_pow(tau))));
            }
            before = before + pi;
        }
        let mut pre_i = Parity::Even;
        for i in 0..om.len() {
            let pi = p[om[i]];
            let mut pre_j = pre_i + pi;
            for j in i + 1..om.len() {
                let pj = p[om[j]];
                let bracket = self.alg.bracket(om[i], om[j]);
                if !bracket.is_empty() {
                    let sigma = i + j + (pi.bit() * pj.bit()) + pi.bit() * pre_i.bit() + pj.bit() * pre_j.bit();
                    let rest: Vec<usize> = om.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &x)| x).collect();
                    for (z, c) in bracket {
                        let mut f = Vec::with_capacity(rest.len() + 1);
                        f.push(*z);
                        f.extend_from_slice(&rest);
                        if let Some((sg, mono)) = normalize_wedge(&f, p) {
                            acc.push((self.index[k][&mono] * d + vt, c * rat(sign_pow(sigma) * sg)));
                        }
                    }
                }
                pre_j = pre_j + pj;
            }
            pre_i = pre_i + pi;
        }
        compress(acc)
    }

    /// The full matrix of d: C^k → C^{k+1}.
    pub fn differential(&self, k: usize) -> SparseMatrix {
        assert!(k < self.top(), "degree {k} needs cochains up to {}", k + 1);
        let entries =
            (0..self.dim(k + 1)).flat_map(|r| self.row(k, r).into_iter().map(move |(c, v)| (r, c, v))).collect();
        SparseMatrix { rows: self.dim(k + 1), cols: self.dim(k), entries }
    }

    /// Rows of d: C^k → C^{k+1} restricted to a block, as dense-indexed sparse rows.
    pub fn block_rows(&self, k: usize, sources: &[usize], targets: &[usize]) -> Vec<SparseVec> {
        let local: HashMap<usize, usize> = sources.iter().enumerate().map(|(t, &c)| (c, t)).collect();
        targets
            .iter()
            .map(|&r| {
                self.row(k, r)
                    .into_iter()
                    .map(|(c, v)| (*local.get(&c).expect("differential leaves its weight block"), v))
                    .collect()
            })
            .collect()
    }

    /// d∘d = 0 in degrees up to `kmax`.
    pub fn check_dd(&self, kmax: usize) -> Result<()> {
        for k in 0..kmax.min(self.top().saturating_sub(1)) {
            let dd = self.differential(k + 1).compose(&self.differential(k));
            if let Some((r, c, _)) = dd.entries.first() {
                return Err(Error::Invariant(format!("d∘d ≠ 0 from degree {k}: entry ({r}, {c})")));
            }
        }
        Ok(())
    }
}

/// H^j(𝔦, ℂ) as a module over 𝔫/𝔦, for an arbitrary (not necessarily abelian) ideal.
///
/// Each weight block of H^j is represented by a complement of the coboundaries inside the cocycles;
/// the action of a lift x is x·f = −(−1)^{|x||f|} f∘ad_x on cochains, re-expressed in that
/// complement.
pub fn ideal_cohomology_module(alg: &NilpotentAlgebra, ideal: &IdealDesignation, lifts: &[usize], j: usize) -> Result<GModule> {
    let sub = subalgebra(alg, ideal.members(), "ideal")?;
    let triv = trivial_module(&sub);
    let cx = CochainComplex::new(&sub, &triv, j + 1);
    let pos: BTreeMap<usize, usize> = ideal.members().iter().enumerate().map(|(t, &z)| (z, t)).collect();
    let sp = sub.parities();
    let blocks_j = cx.blocks(j);
    let blocks_up = cx.blocks(j + 1);
    let blocks_down = if j > 0 { cx.blocks(j - 1) } else { BTreeMap::new() };

    struct Block {
        cells: Vec<usize>,
        image: Vec<Vec<Rational>>,
        comp: Vec<Vec<Rational>>,
        first: usize,
    }
    let mut blocks: BTreeMap<BlockKey, Block> = BTreeMap::new();
    let mut parities = Vec::new();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for (key, cells) in &blocks_j {
        let n = cells.len();
        let to_dense = |rows: Vec<SparseVec>| -> Vec<Vec<Rational>> {
            rows.into_iter()
                .map(|r| {
                    let mut d = vec![Rational::zero(); n];
                    for (c, v) in r {
                        d[c] = v;
                    }
                    d
                })
                .collect()
        };
        let out_rows = blocks_up.get(key).map(|t| to_dense(cx.block_rows(j, cells, t))).unwrap_or_default();
        let kernel = linalg::nullspace(&out_rows, n);
        let mut image: Vec<Vec<Rational>> = match blocks_down.get(key) {
            Some(src) if j > 0 => {
                // columns of d_{j-1} on this block are the transposed rows
                let rows = to_dense_transpose(cx.block_rows(j - 1, src, cells), src.len(), n);
                let mut m = rows;
                linalg::rref(&mut m, n);
                m
            }
            _ => Vec::new(),
        };
        let mut comp = Vec::new();
        let mut span = image.clone();
        for v in kernel {
            span.push(v.clone());
            if linalg::rank_rational(&span, n) == span.len() {
                comp.push(v);
            } else {
                span.pop();
            }
        }
        image.retain(|v| v.iter().any(|x| !x.is_zero()));
        let first = parities.len();
        for (t, _) in comp.iter().enumerate() {
            parities.push(key.1);
            weights.push(cx.weight_of(&key.0));
            labels.push(format!("[{}]#{t}", cx.weight_of(&key.0)));
        }
        blocks.insert(key.clone(), Block { cells: cells.clone(), image, comp, first });
    }

    // Chain action of a lift on degree-j monomials of the ideal.
    let chain_action = |x: usize, mono: &Monomial| -> Vec<(Monomial, Rational)> {
        let px = alg.parity(x);
        let mut out = Vec::new();
        let mut pre = Parity::Even;
        for (k, &w) in mono.factors().iter().enumerate() {
            for (z, c) in alg.bracket(x, ideal.members()[w]) {
                let mut nf = mono.factors().to_vec();
                nf[k] = pos[z];
                if let Some((sg, m)) = normalize_wedge(&nf, &sp) {
                    out.push((m, c * rat(sg * px.sign_with(pre))));
                }
            }
            pre = pre + sp[w];
        }
        out
    };

    let x_keys: Vec<WeightKey> = lifts.iter().map(|&x| cx.keyer().key(alg.weight(x))).collect();
    let mut action = Vec::with_capacity(lifts.len());
    for (t, &x) in lifts.iter().enumerate() {
        let px = alg.parity(x);
        // C[r][c] = −(−1)^{|x||f_c|} A[c][r]; precompute A column by column (r fixed).
        let mut transposed: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for (r, m) in cx.monomials(j).iter().enumerate() {
            for (mc, a) in chain_action(x, m) {
                let c = cx.cell_index(j, &mc, 0);
                let fc = mc.parity(&sp);
                transposed.entry(c).or_default().push((r, -a * rat(px.sign_with(fc))));
            }
        }
        let mut cols: Vec<SparseVec> = vec![Vec::new(); parities.len()];
        for (key, b) in &blocks {
            if b.comp.is_empty() {
                continue;
            }
            let mut tkey = key.0.clone();
            key_add(&mut tkey, &x_keys[t]);
            let target_key = (tkey, key.1 + px);
            for (s, u) in b.comp.iter().enumerate() {
                let mut y: BTreeMap<usize, Rational> = BTreeMap::new();
                for (ci, uc) in b.cells.iter().zip(u) {
                    if uc.is_zero() {
                        continue;
                    }
                    for (r, v) in transposed.get(ci).map(Vec::as_slice).unwrap_or(&[]) {
                        *y.entry(*r).or_insert_with(Rational::zero) += v * uc;
                    }
                }
                y.retain(|_, v| !v.is_zero());
                if y.is_empty() {
                    continue;
                }
                let tb = blocks.get(&target_key).ok_or_else(|| {
                    Error::Representation("induced action leaves the cohomology weight blocks".into())
                })?;
                let local: HashMap<usize, usize> = tb.cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
                let mut target = vec![Rational::zero(); tb.cells.len()];
                for (r, v) in y {
                    let i = *local.get(&r).ok_or_else(|| Error::Representation("action is not weight-homogeneous".into()))?;
                    target[i] = v;
                }
                let columns: Vec<Vec<Rational>> = tb.image.iter().chain(&tb.comp).cloned().collect();
                let sol = linalg::solve_in_span(&columns, &target)
                    .ok_or_else(|| Error::Representation("action does not preserve cocycles".into()))?;
                let ni = tb.image.len();
                cols[b.first + s] =
                    sol[ni..].iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (tb.first + i, v.clone())).collect();
            }
        }
        action.push(cols);
    }
    Ok(GModule::new(format!("ideal-cohomology-{j}"), parities, weights, labels, action))
}

fn to_dense_transpose(rows: Vec<SparseVec>, ncols: usize, nrows: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); nrows]; ncols];
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            out[c][r] = v;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::{build_gl, build_q, quotient_with_lifts};
    use Parity::{Even, Odd};

    #[test]
    fn normalization_signs() {
        let p = [Even, Even, Odd, Odd];
        assert_eq!(normalize_wedge(&[1, 0], &p), Some((-1, Monomial(vec![0, 1]))));
        assert_eq!(normalize_wedge(&[3, 2], &p), Some((1, Monomial(vec![2, 3]))));
        assert_eq!(normalize_wedge(&[2, 0], &p), Some((-1, Monomial(vec![0, 2]))));
        assert_eq!(normalize_wedge(&[2, 2], &p), Some((1, Monomial(vec![2, 2]))));
        assert_eq!(normalize_wedge(&[1, 1], &p), None);
    }

    #[test]
    fn counts_match_enumeration() {
        let p = [Even, Even, Even, Odd, Odd];
        for k in 0..5 {
            assert_eq!(monomial_basis(&p, k).len() as u128, monomial_count(3, 2, k));
        }
    }

    #[test]
    fn dd_vanishes_for_q3() {
        let (a, _) = build_q(3).unwrap();
        let t = trivial_module(&a);
        CochainComplex::new(&a, &t, 4).check_dd(4).unwrap();
    }

    #[test]
    fn dual_and_lambda_modules_are_representations() {
        let (a, i) = build_gl(3, 2).unwrap();
        let (q, lifts) = quotient_with_lifts(&a, &i).unwrap();
        for sign in [DualSign::Koszul, DualSign::Twisted] {
            let d = dual_module(&a, &i, &lifts, sign);
            check_representation(&q, &d).unwrap();
            for j in 0..3 {
                check_representation(&q, &lambda_s_module(&d, &q, j)).unwrap();
            }
        }
    }
}
