//! Kostka functions `K±_{λ,μ}(t₁, …, t_r)`, defined by
//! `s_λ = Σ_μ K±_{λ,μ} P±_μ`.
//!
//! Three routes are provided:
//!
//! * [`kostka_by_solve`]: invert the unitriangular matrix of the `P±` in
//!   Schur coordinates produced by [`crate::hl::hl_table`];
//! * [`kostka_by_gram_schmidt`]: the same inversion applied to the
//!   Gram–Schmidt oracle;
//! * [`kostka_minus_pf`], [`kostka_plus_pf`]: alternating sums over
//!   `S_m^r` of restricted-root partition functions ([`lusztig_l`],
//!   [`lusztig_l_plus_mu`]).
//!
//! Stability under widely spaced shifts ([`stable_kostka`], [`theta_schedule`])
//! and the reduction to fewer components ([`reduce_r`]) complete the module.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{
    self, c_map, comp_of, cyc, delta_sets, gen_rpartitions, perm_sign, pos, row_of, Composition,
    RPartition,
};
use crate::error::{Error, Result};
use crate::hl::{gram_schmidt_pq, hl_table};
use crate::symfunc::{invert_unitriangular, Params, Sign, SymElem, SymEngine};
use crate::TPoly;

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// How a [`KostkaTable`] was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Inversion of the raising-operator `P±` table.
    Solve,
    /// Alternating sums of restricted-root partition functions.
    PartitionFunction,
    /// Inversion of the Gram–Schmidt `P±` table.
    GramSchmidt,
}

impl Method {
    /// Every method, in a fixed order.
    pub const ALL: [Method; 3] = [
        Method::Solve,
        Method::PartitionFunction,
        Method::GramSchmidt,
    ];

    /// Canonical tag: `solve`, `pf` or `gram-schmidt`.
    pub fn tag(self) -> &'static str {
        match self {
            Method::Solve => "solve",
            Method::PartitionFunction => "pf",
            Method::GramSchmidt => "gram-schmidt",
        }
    }

    /// Parses a tag; `raising` is accepted as a synonym of `solve` and
    /// `partition-function` of `pf`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "solve" | "raising" => Ok(Method::Solve),
            "pf" | "partition-function" => Ok(Method::PartitionFunction),
            "gram-schmidt" | "gs" => Ok(Method::GramSchmidt),
            _ => Err(Error::Parse(format!(
                "unknown method {s:?} (expected solve, pf, gram-schmidt or raising)"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The square matrix `K±_{λ,μ}` over every r-partition of `n`, rows and
/// columns in the descending index order.
#[derive(Clone, Debug, PartialEq)]
pub struct KostkaTable {
    pub n: usize,
    pub r: usize,
    pub sign: Sign,
    pub method: Method,
    /// Number of parameter variables the entries live in.
    pub nvars: usize,
    pub index: Vec<RPartition>,
    /// `entries[i][j] = K_{index[i], index[j]}`.
    pub entries: Vec<Vec<TPoly>>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    r: usize,
    sign: String,
    method: String,
    nvars: usize,
    order: Vec<String>,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    lambda: String,
    mu: String,
    poly: serde_json::Value,
}

impl KostkaTable {
    /// Position of `lambda` in the index.
    pub fn position(&self, lambda: &RPartition) -> Option<usize> {
        self.index.iter().position(|l| l == lambda)
    }

    /// `K_{λ,μ}`, zero when either is not indexed.
    pub fn get(&self, lambda: &RPartition, mu: &RPartition) -> TPoly {
        match (self.position(lambda), self.position(mu)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => TPoly::zero(self.nvars),
        }
    }

    /// Nonzero entries in canonical (row, column) order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&RPartition, &RPartition, &TPoly)> {
        self.index.iter().enumerate().flat_map(move |(i, l)| {
            self.index.iter().enumerate().filter_map(move |(j, mu)| {
                let k = &self.entries[i][j];
                (!k.is_zero()).then_some((l, mu, k))
            })
        })
    }

    /// Substitutes `t_k ↦ assignment[k]` in every entry.
    pub fn specialize(&self, assignment: &[TPoly]) -> Result<KostkaTable> {
        if assignment.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "assignment of {} values for {} variables",
                assignment.len(),
                self.nvars
            )));
        }
        let nvars = assignment.iter().map(TPoly::nvars).max().unwrap_or(0);
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|k| specialize(k, assignment).with_nvars(nvars))
                    .collect()
            })
            .collect();
        Ok(KostkaTable {
            nvars,
            entries,
            ..self.clone()
        })
    }

    /// Checks the structural invariants: unit diagonal and vanishing unless
    /// `μ ⪯ λ` in dominance.
    pub fn check_unitriangular(&self) -> Result<()> {
        for (i, l) in self.index.iter().enumerate() {
            for (j, mu) in self.index.iter().enumerate() {
                let k = &self.entries[i][j];
                if i == j && !k.is_one() {
                    return Err(Error::Invariant(format!("K_{l},{l} = {k}")));
                }
                if i != j && !k.is_zero() && !combinat::dominance_leq(mu, l)? {
                    return Err(Error::Invariant(format!(
                        "K_{l},{mu} = {k} although {mu} is not below {l}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The canonical JSON document (zero entries omitted).
    pub fn to_json(&self) -> serde_json::Value {
        let doc = TableJson {
            n: self.n,
            r: self.r,
            sign: self.sign.name().to_string(),
            method: self.method.tag().to_string(),
            nvars: self.nvars,
            order: self.index.iter().map(ToString::to_string).collect(),
            entries: self
                .nonzero()
                .map(|(l, mu, k)| EntryJson {
                    lambda: l.to_string(),
                    mu: mu.to_string(),
                    poly: k.to_json(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    /// Inverse of [`KostkaTable::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: TableJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let index = doc
            .order
            .iter()
            .map(|s| s.parse::<RPartition>())
            .collect::<Result<Vec<_>>>()?;
        let pos: HashMap<&RPartition, usize> =
            index.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut entries = vec![vec![TPoly::zero(doc.nvars); index.len()]; index.len()];
        for e in &doc.entries {
            let (l, mu) = (e.lambda.parse::<RPartition>()?, e.mu.parse::<RPartition>()?);
            let (i, j) = match (pos.get(&l), pos.get(&mu)) {
                (Some(&i), Some(&j)) => (i, j),
                _ => return Err(Error::Parse(format!("entry ({l}, {mu}) outside the order"))),
            };
            entries[i][j] = TPoly::from_json(&e.poly, doc.nvars)?;
        }
        Ok(KostkaTable {
            n: doc.n,
            r: doc.r,
            sign: Sign::parse(&doc.sign)?,
            method: Method::parse(&doc.method)?,
            nvars: doc.nvars,
            index,
            entries,
        })
    }

    /// Entry-wise comparison ignoring the method tag; returns the first
    /// differing `(λ, μ)` pair.
    pub fn first_difference(&self, other: &KostkaTable) -> Option<(RPartition, RPartition)> {
        if self.index != other.index {
            return Some((RPartition::empty(self.r), RPartition::empty(other.r)));
        }
        for (i, l) in self.index.iter().enumerate() {
            for (j, mu) in self.index.iter().enumerate() {
                if self.entries[i][j] != other.entries[i][j] {
                    return Some((l.clone(), mu.clone()));
                }
            }
        }
        None
    }
}

/// Substitutes `t_k ↦ assignment[k]` in a parameter polynomial.
pub fn specialize(p: &TPoly, assignment: &[TPoly]) -> TPoly {
    p.substitute(assignment)
}

/// Parses `"t1=t,t2=t1*t2"` into the images of `t₁, …, t_r`.  Unassigned
/// parameters map to themselves; the images live in the smallest universe
/// `t₁..t_v` containing every variable that occurs (so `t1=t,t2=t` yields
/// one-variable images).  An empty string is the identity.
pub fn parse_assignment(s: &str, r: usize) -> Result<Vec<TPoly>> {
    let mut rhs: Vec<Option<String>> = vec![None; r];
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (name, expr) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected t<k>=<polynomial>, got {item:?}")))?;
        let k: usize = name
            .trim()
            .strip_prefix('t')
            .and_then(|d| d.parse().ok())
            .filter(|&k| (1..=r).contains(&k))
            .ok_or_else(|| {
                Error::Parse(format!("unknown parameter {name:?} (expected t1..t{r})"))
            })?;
        if rhs[k - 1].replace(expr.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("t{k} assigned twice")));
        }
    }
    let images = |nv: usize| -> Result<Vec<TPoly>> {
        rhs.iter()
            .enumerate()
            .map(|(k, e)| match e {
                Some(e) => TPoly::parse(e, nv),
                None => Ok(TPoly::var(nv, k)),
            })
            .collect()
    };
    let wide = images(r)?;
    let used = wide
        .iter()
        .flat_map(|p| (0..r).filter(move |&v| p.degree_in(v) > 0))
        .max()
        .map_or(1, |v| v + 1);
    images(used)
}

/// Inverts the matrix of the `P_μ` in Schur coordinates (`P_μ = Σ_λ A_{μλ} s_λ`).
fn kostka_from_p(
    index: &[RPartition],
    p: &[SymElem<TPoly>],
    nvars: usize,
) -> Result<Vec<Vec<TPoly>>> {
    let a: Vec<Vec<TPoly>> = p
        .iter()
        .map(|e| {
            e.to_vec(index)
                .into_iter()
                .map(|c| c.with_nvars(nvars))
                .collect()
        })
        .collect();
    invert_unitriangular(&a)
}

/// `K±` by inverting the unitriangular Schur matrix of the raising-operator
/// `P±` table, computed with the engine's parameter values.
pub fn kostka_by_solve(n: usize, sign: Sign, engine: &SymEngine) -> Result<KostkaTable> {
    if n == 0 {
        return Err(Error::Bounds("n must be at least 1".into()));
    }
    let t = hl_table(n, sign, engine)?;
    let nvars = engine.params().nvars();
    let entries = kostka_from_p(&t.index, &t.p, nvars)?;
    Ok(KostkaTable {
        n,
        r: t.r,
        sign,
        method: Method::Solve,
        nvars,
        index: t.index,
        entries,
    })
}

/// `K±` by inverting the Gram–Schmidt `P±` table.
pub fn kostka_by_gram_schmidt(n: usize, sign: Sign, engine: &SymEngine) -> Result<KostkaTable> {
    if n == 0 {
        return Err(Error::Bounds("n must be at least 1".into()));
    }
    let gs = gram_schmidt_pq(n, engine)?;
    let p = (0..gs.index.len())
        .map(|i| gs.p_poly(i, sign))
        .collect::<Result<Vec<_>>>()?;
    let nvars = engine.params().nvars();
    let entries = kostka_from_p(&gs.index, &p, nvars)?;
    Ok(KostkaTable {
        n,
        r: engine.r(),
        sign,
        method: Method::GramSchmidt,
        nvars,
        index: gs.index,
        entries,
    })
}

/// `K±` entry by entry from the partition-function formulas.  Each pair is
/// padded to `m` rows, by default the larger of the two maximal component
/// lengths; an explicit `m` must be at least `n`.
pub fn kostka_by_pf(
    n: usize,
    sign: Sign,
    params: &Params,
    m: Option<usize>,
) -> Result<KostkaTable> {
    if n == 0 {
        return Err(Error::Bounds("n must be at least 1".into()));
    }
    if let Some(m) = m {
        if m < n {
            return Err(Error::Bounds(format!(
                "padding m = {m} is smaller than n = {n}"
            )));
        }
    }
    let r = params.r();
    let index = gen_rpartitions(n, r);
    let nvars = params.nvars();
    // one column per μ: the partition-function memo depends on μ for "+"
    let columns: Vec<Vec<TPoly>> = index
        .par_iter()
        .map(|mu| {
            index
                .iter()
                .map(|l| {
                    if !combinat::dominance_leq(mu, l)? {
                        return Ok(TPoly::zero(nvars));
                    }
                    let m = m.unwrap_or_else(|| l.max_len().max(mu.max_len()).max(1));
                    let k = match sign {
                        Sign::Minus => kostka_minus_pf(l, mu, m, params)?,
                        Sign::Plus => kostka_plus_pf(l, mu, m, params)?,
                    };
                    Ok(k.with_nvars(nvars))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let len = index.len();
    let entries = (0..len)
        .map(|i| (0..len).map(|j| columns[j][i].clone()).collect())
        .collect();
    Ok(KostkaTable {
        n,
        r,
        sign,
        method: Method::PartitionFunction,
        nvars,
        index,
        entries,
    })
}

/// Dispatches on the method tag; `m` only affects the partition-function route.
pub fn kostka_table(
    n: usize,
    sign: Sign,
    method: Method,
    params: &Params,
    m: Option<usize>,
) -> Result<KostkaTable> {
    match method {
        Method::Solve => kostka_by_solve(n, sign, &SymEngine::new(params.clone())),
        Method::GramSchmidt => kostka_by_gram_schmidt(n, sign, &SymEngine::new(params.clone())),
        Method::PartitionFunction => kostka_by_pf(n, sign, params, m),
    }
}

// ---------------------------------------------------------------------------
// Partition functions
// ---------------------------------------------------------------------------

/// A set of weighted positive roots `ε_a − ε_b` (`a < b`) over positions
/// `0..len`, grouped by source `a`.
#[derive(Clone, Debug)]
pub struct PfRoots {
    len: usize,
    nvars: usize,
    targets: Vec<Vec<(usize, TPoly)>>,
}

impl PfRoots {
    /// Roots `ε_ν − ε_ν′` with `b(ν′) = b(ν) ∓ 1` (components cyclic),
    /// weighted `t_{b(ν)}` for `−` and `t_{b(ν)−1}` for `+`, over `r·m`
    /// positions.
    pub fn plain(sign: Sign, m: usize, params: &Params) -> Self {
        let r = params.r();
        let len = r * m;
        let targets = (0..len)
            .map(|a| {
                let k = comp_of(r, a) as isize;
                let (target, weight) = match sign {
                    Sign::Minus => (cyc(r, k + 1), params.t(k)),
                    Sign::Plus => (cyc(r, k - 1), params.t(k - 1)),
                };
                (a + 1..len)
                    .filter(|&b| comp_of(r, b) == target)
                    .map(|b| (b, weight.clone()))
                    .collect()
            })
            .collect();
        PfRoots {
            len,
            nvars: params.nvars(),
            targets,
        }
    }

    /// The `μ`-dependent `+` roots: class `A₁` (`ν = (k,i)` and `(k−1,i)` in
    /// `Δ₁`, `ν′ = (k−1,j)`, weight `t_{k−1}`) and class `A₀` (`ν ∈ Δ₀`,
    /// `b(ν) = b(ν′) = r`, weight `t₀`), with `Δ = Δ(μ)`.
    pub fn plus_mu(mu: &RPartition, m: usize, params: &Params) -> Result<Self> {
        let r = params.r();
        let len = r * m;
        let (d0, d1) = delta_sets(mu, m)?;
        let t0 = params.t0();
        let mut targets = vec![Vec::new(); len];
        for (a, out) in targets.iter_mut().enumerate() {
            let (k, i) = (comp_of(r, a), row_of(r, a));
            let prev = cyc(r, k as isize - 1);
            if d1.contains(&a) && d1.contains(&pos(r, prev, i)) {
                for b in a + 1..len {
                    if comp_of(r, b) == prev {
                        out.push((b, params.t(k as isize - 1).clone()));
                    }
                }
            }
            if d0.contains(&a) {
                for b in a + 1..len {
                    if comp_of(r, b) == r {
                        out.push((b, t0.clone()));
                    }
                }
            }
        }
        Ok(PfRoots {
            len,
            nvars: params.nvars(),
            targets,
        })
    }

    /// Arbitrary roots `(a, b, weight)` with `a < b < len`.
    pub fn from_roots(
        len: usize,
        nvars: usize,
        roots: impl IntoIterator<Item = (usize, usize, TPoly)>,
    ) -> Result<Self> {
        let mut targets = vec![Vec::new(); len];
        for (a, b, w) in roots {
            if a >= b || b >= len {
                return Err(Error::Invariant(format!(
                    "({a}, {b}) is not a positive root over {len} positions"
                )));
            }
            targets[a].push((b, w.with_nvars(nvars)));
        }
        Ok(PfRoots {
            len,
            nvars,
            targets,
        })
    }

    /// Number of positions.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Whether there are no positions.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Every root as `(a, b, weight)`.
    pub fn roots(&self) -> impl Iterator<Item = (usize, usize, &TPoly)> {
        self.targets
            .iter()
            .enumerate()
            .flat_map(|(a, ts)| ts.iter().map(move |(b, w)| (a, *b, w)))
    }
}

/// Partition-function evaluator with a memo keyed by the residual vector.
///
/// Decompositions are peeled off position by position: the residual entry at
/// the current source must be distributed over that source's roots, which
/// adds to later entries.  A residual with a negative prefix sum admits no
/// decomposition.
#[derive(Debug)]
pub struct PartitionFunction {
    roots: PfRoots,
    memo: HashMap<(usize, Vec<i64>), TPoly>,
}

impl PartitionFunction {
    /// An evaluator over the given roots with an empty memo.
    pub fn new(roots: PfRoots) -> Self {
        PartitionFunction {
            roots,
            memo: HashMap::new(),
        }
    }

    /// `L(ξ) = Σ_{(m_γ)} ∏ w_γ^{m_γ}` over `ξ = Σ m_γ γ`, `m_γ ≥ 0`.
    pub fn eval(&mut self, xi: &[i64]) -> Result<TPoly> {
        self.check(xi)?;
        Ok(self.rec(0, xi.to_vec(), true))
    }

    /// The same value without memoization (exponential; for testing).
    pub fn eval_unmemoized(&mut self, xi: &[i64]) -> Result<TPoly> {
        self.check(xi)?;
        Ok(self.rec(0, xi.to_vec(), false))
    }

    /// Number of memoized residuals.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn check(&self, xi: &[i64]) -> Result<()> {
        if xi.len() != self.roots.len {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for {} positions",
                xi.len(),
                self.roots.len
            )));
        }
        if xi.iter().sum::<i64>() != 0 {
            return Err(Error::Invariant(format!(
                "partition function argument {xi:?} does not sum to zero"
            )));
        }
        Ok(())
    }

    fn rec(&mut self, a: usize, residual: Vec<i64>, memoize: bool) -> TPoly {
        let nvars = self.roots.nvars;
        if a == self.roots.len {
            return TPoly::one(nvars);
        }
        let mut prefix = 0;
        for &v in &residual[a..] {
            prefix += v;
            if prefix < 0 {
                return TPoly::zero(nvars);
            }
        }
        let key = (a, residual[a..].to_vec());
        if memoize {
            if let Some(v) = self.memo.get(&key) {
                return v.clone();
            }
        }
        let need = residual[a];
        let value = if need == 0 {
            self.rec(a + 1, residual.clone(), memoize)
        } else {
            let targets = self.roots.targets[a].clone();
            let mut acc = TPoly::zero(nvars);
            let mut work = residual.clone();
            work[a] = 0;
            self.distribute(
                &targets,
                0,
                need,
                TPoly::one(nvars),
                &mut work,
                a,
                memoize,
                &mut acc,
            );
            acc
        };
        if memoize {
            self.memo.insert(key, value.clone());
        }
        value
    }

    /// Splits `left` units over `targets[idx..]`, recursing at the next
    /// position once everything is placed.
    #[allow(clippy::too_many_arguments)]
    fn distribute(
        &mut self,
        targets: &[(usize, TPoly)],
        idx: usize,
        left: i64,
        weight: TPoly,
        work: &mut Vec<i64>,
        a: usize,
        memoize: bool,
        acc: &mut TPoly,
    ) {
        if left == 0 {
            let rest = self.rec(a + 1, work.clone(), memoize);
            if !rest.is_zero() {
                *acc += &(&weight * &rest);
            }
            return;
        }
        if idx == targets.len() {
            return;
        }
        let (b, w) = &targets[idx];
        let mut wt = weight;
        for take in 0..=left {
            work[*b] += take;
            self.distribute(
                targets,
                idx + 1,
                left - take,
                wt.clone(),
                work,
                a,
                memoize,
                acc,
            );
            work[*b] -= take;
            wt = &wt * w;
        }
    }
}

/// `L±(ξ; t)` over `len = r·m` positions with the plain roots of
/// [`PfRoots::plain`].
pub fn lusztig_l(xi: &[i64], sign: Sign, params: &Params) -> Result<TPoly> {
    let r = params.r();
    if !xi.len().is_multiple_of(r) {
        return Err(Error::ShapeMismatch(format!(
            "length {} is not a multiple of r = {r}",
            xi.len()
        )));
    }
    PartitionFunction::new(PfRoots::plain(sign, xi.len() / r, params)).eval(xi)
}

/// `L^μ₊(ξ; t)` with the `μ`-dependent roots of [`PfRoots::plus_mu`].
pub fn lusztig_l_plus_mu(xi: &[i64], mu: &RPartition, params: &Params) -> Result<TPoly> {
    let r = params.r();
    if !xi.len().is_multiple_of(r) {
        return Err(Error::ShapeMismatch(format!(
            "length {} is not a multiple of r = {r}",
            xi.len()
        )));
    }
    PartitionFunction::new(PfRoots::plus_mu(mu, xi.len() / r, params)?).eval(xi)
}

/// The shift vector used in the alternating sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Staircase {
    /// `δ₁`: entry `m − i` at every position `(k, i)`, the staircase of each
    /// component separately.  This is the shift under which the alternating
    /// sum straightens Schur functions of `r` independent variable groups.
    #[default]
    PerComponent,
    /// `δ = (M−1, …, 1, 0)` over all `M = r·m` interleaved positions.
    /// Restricted to one component this is `r·(m−1, …, 0)` plus a constant,
    /// which straightens with the wrong spacing once `r ≥ 2` and `m ≥ 2`.
    Global,
}

impl Staircase {
    /// The shift vector over `r·m` positions.
    pub fn vector(self, r: usize, m: usize) -> Composition {
        match self {
            Staircase::Global => combinat::delta(r * m),
            Staircase::PerComponent => (0..r * m).map(|p| (m - row_of(r, p)) as i64).collect(),
        }
    }
}

/// `Σ_{w ∈ S_m^r} ε(w) L(w⁻¹(c(λ)+δ₁) − (c(μ)+δ₁))` for the given evaluator
/// (see [`alternating_sum_with`]).
pub fn alternating_sum(
    lambda: &RPartition,
    mu: &RPartition,
    m: usize,
    pf: &mut PartitionFunction,
) -> Result<TPoly> {
    alternating_sum_with(lambda, mu, m, pf, Staircase::PerComponent)
}

/// The alternating sum with an explicit shift vector.
///
/// `w = (w₁, …, w_r)` permutes the rows of each component independently.
/// The vectors are built position by position and abandoned as soon as a
/// prefix sum turns negative, since positive roots cannot repair that.
pub fn alternating_sum_with(
    lambda: &RPartition,
    mu: &RPartition,
    m: usize,
    pf: &mut PartitionFunction,
    staircase: Staircase,
) -> Result<TPoly> {
    let r = lambda.r();
    if mu.r() != r || lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!("{lambda} vs {mu}")));
    }
    let len = r * m;
    let d = staircase.vector(r, m);
    let cl: Composition = c_map(lambda, m)?
        .iter()
        .zip(&d)
        .map(|(a, b)| a + b)
        .collect();
    let cm: Composition = c_map(mu, m)?.iter().zip(&d).map(|(a, b)| a + b).collect();
    // rows chosen so far in each component
    let mut chosen: Vec<Vec<usize>> = vec![Vec::with_capacity(m); r];
    let mut xi = vec![0i64; len];
    let mut leaves: Vec<(Composition, i32)> = Vec::new();
    fn walk(
        p: usize,
        prefix: i64,
        ctx: (&[i64], &[i64], usize, usize),
        chosen: &mut Vec<Vec<usize>>,
        xi: &mut Vec<i64>,
        out: &mut Vec<(Composition, i32)>,
    ) {
        let (cl, cm, r, m) = ctx;
        if p == cl.len() {
            if prefix == 0 {
                let sign = chosen.iter().map(|c| perm_sign(c)).product();
                out.push((xi.clone(), sign));
            }
            return;
        }
        let k = comp_of(r, p);
        for row in 0..m {
            if chosen[k - 1].contains(&row) {
                continue;
            }
            let v = cl[pos(r, k, row + 1)] - cm[p];
            if prefix + v < 0 {
                continue;
            }
            chosen[k - 1].push(row);
            xi[p] = v;
            walk(p + 1, prefix + v, ctx, chosen, xi, out);
            chosen[k - 1].pop();
        }
    }
    walk(0, 0, (&cl, &cm, r, m), &mut chosen, &mut xi, &mut leaves);
    let mut acc = TPoly::zero(pf.roots.nvars);
    for (xi, s) in leaves {
        let v = pf.eval(&xi)?;
        if s > 0 {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc)
}

/// `K⁻_{λ,μ}` from the alternating sum of `L₋`, padding every component to `m` rows.
pub fn kostka_minus_pf(
    lambda: &RPartition,
    mu: &RPartition,
    m: usize,
    params: &Params,
) -> Result<TPoly> {
    let mut pf = PartitionFunction::new(PfRoots::plain(Sign::Minus, m, params));
    alternating_sum(lambda, mu, m, &mut pf)
}

/// `K⁺_{λ,μ}` from the alternating sum of `L^μ₊`.
pub fn kostka_plus_pf(
    lambda: &RPartition,
    mu: &RPartition,
    m: usize,
    params: &Params,
) -> Result<TPoly> {
    let mut pf = PartitionFunction::new(PfRoots::plus_mu(mu, m, params)?);
    alternating_sum(lambda, mu, m, &mut pf)
}

/// The same alternating sum as [`kostka_plus_pf`] with the plain `L₊`.
pub fn kostka_plus_pf_plain(
    lambda: &RPartition,
    mu: &RPartition,
    m: usize,
    params: &Params,
) -> Result<TPoly> {
    let mut pf = PartitionFunction::new(PfRoots::plain(Sign::Plus, m, params));
    alternating_sum(lambda, mu, m, &mut pf)
}

// ---------------------------------------------------------------------------
// Stability and reduction
// ---------------------------------------------------------------------------

/// The stable value `L±(c(λ) − c(μ); t)` (plain roots for both signs), at
/// `m` = the larger maximal component length.
pub fn stable_kostka(
    lambda: &RPartition,
    mu: &RPartition,
    sign: Sign,
    params: &Params,
) -> Result<TPoly> {
    if lambda.size() != mu.size() || lambda.r() != mu.r() {
        return Err(Error::ShapeMismatch(format!("{lambda} vs {mu}")));
    }
    let m = lambda.max_len().max(mu.max_len()).max(1);
    let xi: Composition = c_map(lambda, m)?
        .iter()
        .zip(&c_map(mu, m)?)
        .map(|(a, b)| a - b)
        .collect();
    lusztig_l(&xi, sign, params)
}

/// The shift `θ_i = n·(M+1)·2^{m−i}`, `M = r·m`, `i = 1..m`: strictly
/// decreasing with consecutive ratios of two and every gap above `n·(M+1)`.
pub fn theta_schedule(n: usize, r: usize, m: usize) -> Vec<usize> {
    let base = n * (r * m + 1);
    (1..=m).map(|i| base << (m - i)).collect()
}

/// Rewrites a pair whose first `a` components are empty as an
/// `(r−a)`-component pair together with the images of the new parameters:
/// `K±_{λ,μ}(t₁..t_r) = K±_{λ′,μ′}(t_{a+1}, …, t_{r−1}, t_a⋯t₁t_r)`.
pub fn reduce_r(
    lambda: &RPartition,
    mu: &RPartition,
    a: usize,
) -> Result<(RPartition, RPartition, Vec<TPoly>)> {
    let r = lambda.r();
    if mu.r() != r || a >= r {
        return Err(Error::ShapeMismatch(format!(
            "cannot drop {a} components from {lambda}, {mu}"
        )));
    }
    if !lambda.leading_empty(a) || !mu.leading_empty(a) {
        return Err(Error::Invariant(format!(
            "the first {a} components of {lambda} or {mu} are not empty"
        )));
    }
    let l2 = RPartition::new(lambda.comps()[a..].to_vec())?;
    let m2 = RPartition::new(mu.comps()[a..].to_vec())?;
    let mut assignment: Vec<TPoly> = (a + 1..r).map(|k| TPoly::var(r, k - 1)).collect();
    let last = (0..a).fold(TPoly::var(r, r - 1), |acc, k| &acc * &TPoly::var(r, k));
    assignment.push(last);
    Ok((l2, m2, assignment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::classical_kostka_table;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    fn pr(s: &str, nvars: usize) -> TPoly {
        TPoly::parse(s, nvars).unwrap()
    }

    #[test]
    fn partition_function_examples() {
        let p = Params::generic(2);
        assert_eq!(
            lusztig_l(&[0, 0, 0, 0], Sign::Minus, &p).unwrap(),
            pr("1", 2)
        );
        assert_eq!(
            lusztig_l(&[1, -1, 0, 0], Sign::Minus, &p).unwrap(),
            pr("t1", 2)
        );
        assert_eq!(
            lusztig_l(&[1, 0, -1, 0], Sign::Minus, &p).unwrap(),
            pr("t1*t2", 2)
        );
        assert_eq!(
            lusztig_l(&[-1, 1, 0, 0], Sign::Minus, &p).unwrap(),
            TPoly::zero(2)
        );
        assert!(lusztig_l(&[1, 0, 0, 0], Sign::Minus, &p).is_err());
    }

    #[test]
    fn plain_minus_is_monic_of_height_degree() {
        let p = Params::generic(3);
        let mut pf = PartitionFunction::new(PfRoots::plain(Sign::Minus, 2, &p));
        for xi in [
            [2, -1, 0, 0, -1, 0],
            [1, 1, 0, -1, 0, -1],
            [0, 2, -1, 0, 0, -1],
        ] {
            let v = pf.eval(&xi).unwrap();
            let height: i64 = xi
                .iter()
                .scan(0, |s, &x| {
                    *s += x;
                    Some(*s)
                })
                .sum();
            assert!(v.is_monic(), "{xi:?}");
            assert_eq!(v.total_degree(), Some(height as u32), "{xi:?}");
        }
    }

    #[test]
    fn a0_root_example() {
        // μ = (∅,(1,1)): Δ₀ = both nonzero positions, ε_{(2,1)} − ε_{(2,2)} is an A₀ root
        let p = Params::generic(2);
        let mu = rp("([],[1,1])");
        assert_eq!(
            lusztig_l_plus_mu(&[0, 1, 0, -1], &mu, &p).unwrap(),
            pr("t1*t2", 2)
        );
    }

    #[test]
    fn condition_b_makes_plus_mu_plain() {
        let p = Params::generic(2);
        let mu = rp("([1,1],[2,1])");
        let mut a = PartitionFunction::new(PfRoots::plus_mu(&mu, 2, &p).unwrap());
        let mut b = PartitionFunction::new(PfRoots::plain(Sign::Plus, 2, &p));
        for xi in [[1, 0, 0, -1], [0, 1, -1, 0], [2, -1, 0, -1], [1, 1, -1, -1]] {
            assert_eq!(a.eval(&xi).unwrap(), b.eval(&xi).unwrap(), "{xi:?}");
        }
    }

    #[test]
    fn kostka_examples() {
        let p = Params::generic(2);
        let (a, b) = (rp("([1],[])"), rp("([],[1])"));
        assert_eq!(kostka_minus_pf(&a, &b, 1, &p).unwrap(), pr("t1", 2));
        assert_eq!(kostka_minus_pf(&a, &a, 1, &p).unwrap(), pr("1", 2));
        assert_eq!(stable_kostka(&a, &b, Sign::Minus, &p).unwrap(), pr("t1", 2));
        let engine = SymEngine::new(p.clone());
        let k = kostka_by_solve(1, Sign::Minus, &engine).unwrap();
        assert_eq!(k.get(&a, &b), pr("t1", 2));
        assert_eq!(k.get(&b, &a), TPoly::zero(2));
    }

    #[test]
    fn r1_is_classical() {
        let engine = SymEngine::new(Params::generic(1));
        for n in 1..=4 {
            let classical = classical_kostka_table(n).unwrap();
            for sign in Sign::BOTH {
                let k = kostka_by_solve(n, sign, &engine).unwrap();
                for (i, l) in k.index.iter().enumerate() {
                    for (j, mu) in k.index.iter().enumerate() {
                        let c = &classical[&(l.comp(0).clone(), mu.comp(0).clone())];
                        assert_eq!(&k.entries[i][j], c, "{l} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let engine = SymEngine::new(Params::generic(2));
        let k = kostka_by_solve(2, Sign::Minus, &engine).unwrap();
        assert_eq!(k.index.len(), 5);
        let back = KostkaTable::from_json(&k.to_json()).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn reduce_r_examples() {
        let (l, mu) = (rp("([],[2])"), rp("([],[1,1])"));
        let (l2, m2, asg) = reduce_r(&l, &mu, 1).unwrap();
        assert_eq!(
            (l2.to_string(), m2.to_string()),
            ("([2])".to_string(), "([1,1])".to_string())
        );
        assert_eq!(asg, vec![pr("t1*t2", 2)]);
        let k = kostka_by_solve(2, Sign::Minus, &SymEngine::new(Params::generic(2))).unwrap();
        let classical =
            classical_kostka_table(2).unwrap()[&(l2.comp(0).clone(), m2.comp(0).clone())].clone();
        assert_eq!(k.get(&l, &mu), specialize(&classical, &asg));
        let (l0, m0, id) = reduce_r(&l, &mu, 0).unwrap();
        assert_eq!((l0, m0), (l.clone(), mu.clone()));
        assert_eq!(id, vec![pr("t1", 2), pr("t2", 2)]);
        assert!(reduce_r(&rp("([1],[1])"), &rp("([],[2])"), 1).is_err());
    }

    #[test]
    fn theta_is_widely_spaced() {
        let th = theta_schedule(3, 2, 3);
        assert_eq!(th, vec![84, 42, 21]);
    }
}
