//! Multi-parameter Hall–Littlewood functions.
//!
//! Three independent constructions are provided:
//!
//! * raising-operator expansions of `Q±_λ` in products of row functions
//!   ([`raising_q`], [`hl_q`], [`hl_p`]) — the production path;
//! * closed symmetrized formulas `R±_λ` and `R♯_λ` ([`closed_r`], [`sharp_q`]);
//! * the Gram–Schmidt construction over the fraction field
//!   ([`gram_schmidt_pq`]), used as an oracle.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::combinat::{
    self, c_map, comp_of, cyc, delta_sets, gen_rpartitions, j0_exponent, pos, row_of, v_prime,
    Composition, RPartition,
};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::symfunc::{
    alternant_reading, to_schur, Basis, FormContext, Params, Row, Sign, SymElem, SymEngine,
};
use crate::{TPoly, XPoly};

// ---------------------------------------------------------------------------
// Raising operators
// ---------------------------------------------------------------------------

/// How a root enters an operator product.
#[derive(Clone, Debug, PartialEq)]
pub enum RootRole {
    /// A factor `1 − R_{ν,ν′}`.
    Numerator,
    /// A factor `(1 − w R_{ν,ν′})⁻¹` with the given weight.
    Denominator(TPoly),
}

/// A raising operator `R_{ν,ν′}` (add one at `gain`, remove one at `lose`,
/// `gain < lose`) together with its role.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub gain: usize,
    pub lose: usize,
    pub role: RootRole,
}

/// Which operator product is used for `Q⁻_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MinusRoots {
    /// Numerator roots: every same-component pair; denominator roots: every
    /// `ν < ν′` with `b(ν′) = b(ν) − 1` (cyclically), weight `t_{b(ν′)}`;
    /// every row is `q⁻`.  This mirrors the `+` product and agrees with the
    /// Gram–Schmidt construction on every case tested.
    #[default]
    Full,
    /// Roots restricted by the sets `Δ₀`, `Δ₁` of `λ`, with the classical
    /// `q_s(x^(r); t₀)` rows on `Δ₀`.  Agrees with [`MinusRoots::Full`] when
    /// no restricted root can contribute, but fails triangularity in general
    /// (smallest failure: `λ = ((1,1),∅)`).
    Restricted,
}

/// The operator product for `Q±_λ`, as a list of roots over positions `0..r·m`.
pub fn root_set(lambda: &RPartition, sign: Sign, m: usize, params: &Params) -> Result<Vec<Root>> {
    root_set_with(lambda, sign, m, params, MinusRoots::Full)
}

/// [`root_set`] with an explicit choice of the `−` operator product.
pub fn root_set_with(
    lambda: &RPartition,
    sign: Sign,
    m: usize,
    params: &Params,
    variant: MinusRoots,
) -> Result<Vec<Root>> {
    let r = lambda.r();
    let len = r * m;
    let mut roots = Vec::new();
    match (sign, variant) {
        (Sign::Plus, _) | (Sign::Minus, MinusRoots::Full) => {
            // "+" raises toward the next group, "−" toward the previous one
            let step: isize = if sign == Sign::Plus { 1 } else { -1 };
            for a in 0..len {
                for b in a + 1..len {
                    let (ka, kb) = (comp_of(r, a), comp_of(r, b));
                    if ka == kb {
                        roots.push(Root {
                            gain: a,
                            lose: b,
                            role: RootRole::Numerator,
                        });
                    }
                    if sign == Sign::Plus && kb == cyc(r, ka as isize + step) {
                        roots.push(Root {
                            gain: a,
                            lose: b,
                            role: RootRole::Denominator(params.t(ka as isize).clone()),
                        });
                    }
                    if sign == Sign::Minus && kb == cyc(r, ka as isize + step) {
                        roots.push(Root {
                            gain: a,
                            lose: b,
                            role: RootRole::Denominator(params.t(kb as isize).clone()),
                        });
                    }
                }
            }
        }
        (Sign::Minus, MinusRoots::Restricted) => {
            let (d0, d1) = delta_sets(lambda, m)?;
            for a in 0..len {
                let (k, i) = (comp_of(r, a), row_of(r, a));
                if d1.contains(&a) {
                    for b in a + 1..len {
                        if comp_of(r, b) == k {
                            roots.push(Root {
                                gain: a,
                                lose: b,
                                role: RootRole::Numerator,
                            });
                        }
                    }
                    let prev = cyc(r, k as isize - 1);
                    if d1.contains(&pos(r, prev, i)) {
                        for b in a + 1..len {
                            if comp_of(r, b) == prev {
                                roots.push(Root {
                                    gain: a,
                                    lose: b,
                                    role: RootRole::Denominator(params.t(k as isize - 1).clone()),
                                });
                            }
                        }
                    }
                } else if d0.contains(&a) {
                    for b in a + 1..len {
                        if comp_of(r, b) == r {
                            roots.push(Root {
                                gain: a,
                                lose: b,
                                role: RootRole::Numerator,
                            });
                            roots.push(Root {
                                gain: a,
                                lose: b,
                                role: RootRole::Denominator(params.t0()),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(roots)
}

/// Expands `∏(operator factors) x^λ` into `Σ c_β x^β` over compositions `β`
/// with nonnegative entries.  Only the total shift matters since the operators
/// commute; terms whose final composition has a negative entry vanish.
pub fn raising_terms(start: &[i64], roots: &[Root], nvars: usize) -> Vec<(Composition, TPoly)> {
    let bound = combinat::n_stat(start);
    let height = |v: &[i64]| -> i64 {
        v.iter()
            .zip(start)
            .enumerate()
            .map(|(p, (a, b))| p as i64 * (b - a))
            .sum()
    };
    // process roots by descending gaining position so that a position can be
    // declared final once all roots gaining there have been applied
    let mut order: Vec<&Root> = roots.iter().collect();
    order.sort_by(|a, b| b.gain.cmp(&a.gain).then(a.lose.cmp(&b.lose)));
    let mut states: HashMap<Composition, TPoly> = HashMap::new();
    states.insert(start.to_vec(), TPoly::one(nvars));
    for (idx, root) in order.iter().enumerate() {
        let mut next: HashMap<Composition, TPoly> = HashMap::new();
        let push = |v: Composition, c: TPoly, next: &mut HashMap<Composition, TPoly>| {
            let e = next.entry(v).or_insert_with(|| TPoly::zero(nvars));
            *e += &c;
        };
        let finished = |v: &[i64]| -> bool {
            // positions at or beyond the current gain can no longer increase
            let still = order[idx + 1..].first().map_or(0, |r| r.gain + 1);
            v.iter().enumerate().any(|(p, &x)| x < 0 && p >= still)
        };
        for (v, c) in states {
            match &root.role {
                RootRole::Numerator => {
                    push(v.clone(), c.clone(), &mut next);
                    let mut w = v;
                    w[root.gain] += 1;
                    w[root.lose] -= 1;
                    if height(&w) <= bound && !finished(&w) {
                        push(w, -c, &mut next);
                    }
                }
                RootRole::Denominator(weight) => {
                    let mut w = v;
                    let mut coef = c;
                    loop {
                        if !finished(&w) {
                            push(w.clone(), coef.clone(), &mut next);
                        }
                        w[root.gain] += 1;
                        w[root.lose] -= 1;
                        if height(&w) > bound {
                            break;
                        }
                        coef = &coef * weight;
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        states = next;
    }
    let mut out: Vec<(Composition, TPoly)> = states
        .into_iter()
        .filter(|(v, c)| v.iter().all(|&x| x >= 0) && !c.is_zero())
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// The raising-operator expansion of `Q±_λ`: terms `c_β · row-product(β)`.
#[derive(Clone, Debug)]
pub struct RaisingExpansion {
    pub lambda: RPartition,
    pub sign: Sign,
    pub m: usize,
    /// Row function used at each position.
    pub rows: Vec<Row>,
    /// Compositions with coefficients, in descending lexicographic order.
    pub terms: Vec<(Composition, TPoly)>,
}

impl RaisingExpansion {
    /// Schur coordinates of the expansion.
    pub fn to_schur(&self, engine: &SymEngine) -> SymElem<TPoly> {
        let n = self.lambda.size();
        let mut acc = SymElem::zero(n, self.lambda.r(), Basis::Monomial);
        for (beta, c) in &self.terms {
            let key: Vec<(Row, usize)> = beta
                .iter()
                .zip(&self.rows)
                .map(|(&v, &row)| (row, v as usize))
                .collect();
            acc.add_scaled(&engine.product_m(&key), c);
        }
        to_schur(&acc)
    }
}

/// Row function attached to each position for `Q±_λ`.  For the restricted
/// `−` product, the rows of `Δ₀` in the last component use the classical
/// `q_s(x^(r); t₀)`.
fn position_rows(
    lambda: &RPartition,
    sign: Sign,
    m: usize,
    variant: MinusRoots,
) -> Result<Vec<Row>> {
    let r = lambda.r();
    let (d0, _) = delta_sets(lambda, m)?;
    let d0_rows: Vec<usize> = d0.iter().map(|&p| row_of(r, p)).collect();
    Ok((0..r * m)
        .map(|p| {
            let k = comp_of(r, p);
            match sign {
                Sign::Plus => Row::Plus(k),
                Sign::Minus
                    if variant == MinusRoots::Restricted
                        && k == r
                        && d0_rows.contains(&row_of(r, p)) =>
                {
                    Row::Classical
                }
                Sign::Minus => Row::Minus(k),
            }
        })
        .collect())
}

/// Raising-operator expansion of `Q±_λ` with padding `m`.
pub fn raising_q(
    lambda: &RPartition,
    sign: Sign,
    m: usize,
    params: &Params,
) -> Result<RaisingExpansion> {
    raising_q_with(lambda, sign, m, params, MinusRoots::Full)
}

/// [`raising_q`] with an explicit choice of the `−` operator product.
pub fn raising_q_with(
    lambda: &RPartition,
    sign: Sign,
    m: usize,
    params: &Params,
    variant: MinusRoots,
) -> Result<RaisingExpansion> {
    if lambda.size() == 0 {
        return Err(Error::EmptyRPartition);
    }
    let roots = root_set_with(lambda, sign, m, params, variant)?;
    let start = c_map(lambda, m)?;
    let terms = raising_terms(&start, &roots, params.nvars());
    Ok(RaisingExpansion {
        lambda: lambda.clone(),
        sign,
        m,
        rows: position_rows(lambda, sign, m, variant)?,
        terms,
    })
}

/// `Q⁺_λ` in the `q⁺` basis: the raising expansion with each composition
/// sorted within its groups (the `q⁺` rows of one group are interchangeable).
pub fn q_plus_in_q(lambda: &RPartition, engine: &SymEngine) -> Result<SymElem<TPoly>> {
    let exp = raising_q(lambda, Sign::Plus, lambda.max_len(), engine.params())?;
    let mut out = SymElem::zero(lambda.size(), lambda.r(), Basis::QFun(Sign::Plus));
    for (beta, c) in &exp.terms {
        let key = combinat::sorted_rpartition(lambda.r(), beta).ok_or_else(|| {
            Error::Invariant(format!("raised composition {beta:?} has a negative entry"))
        })?;
        out.add_at(&key, c.clone());
    }
    Ok(out)
}

/// `Q⁺_λ` in Schur coordinates by raising operators (padding `m = ℓ`, the
/// largest component length).
fn hl_q_plus(lambda: &RPartition, engine: &SymEngine) -> Result<SymElem<TPoly>> {
    let exp = raising_q(lambda, Sign::Plus, lambda.max_len(), engine.params())?;
    Ok(exp.to_schur(engine).with_basis(Basis::Schur))
}

/// Hall–Littlewood functions of one sign for every r-partition of `n`, in
/// the descending index order, in Schur coordinates.
#[derive(Clone, Debug)]
pub struct HlTable {
    pub n: usize,
    pub r: usize,
    pub sign: Sign,
    pub index: Vec<RPartition>,
    pub q: Vec<SymElem<TPoly>>,
    pub p: Vec<SymElem<TPoly>>,
    /// `b_λ(t)` with `Q_λ = b_λ P_λ`; the same for both signs.
    pub b: Vec<TPoly>,
}

impl HlTable {
    /// Position of `lambda` in the index.
    pub fn position(&self, lambda: &RPartition) -> Option<usize> {
        self.index.iter().position(|l| l == lambda)
    }
}

/// Builds the table of `Q±`, `P±`, `b`.
///
/// `+`: each `Q⁺_λ` comes from its raising-operator expansion; `P⁺_λ` is
/// `Q⁺_λ` divided exactly by its diagonal Schur coefficient `b_λ`.
///
/// `−`: by the Cauchy identity `Ω = Σ Q⁺_λ(x) P⁻_λ(y)` and `⟨q⁺_λ, m_μ⟩ = δ`,
/// the monomial coordinates of the `P⁻_λ` are the columns of `A⁻¹`, where `A`
/// is the unitriangular matrix of the `Q⁺` in the `q⁺` basis.  `A` has
/// entries in `Z[t]`, so no fractions arise; `Q⁻_λ = b_λ P⁻_λ`.
pub fn hl_table(n: usize, sign: Sign, engine: &SymEngine) -> Result<HlTable> {
    use rayon::prelude::*;
    let r = engine.r();
    let index = gen_rpartitions(n, r);
    let q_plus: Vec<SymElem<TPoly>> = index
        .par_iter()
        .map(|l| hl_q_plus(l, engine))
        .collect::<Result<_>>()?;
    let b: Vec<TPoly> = index.iter().zip(&q_plus).map(|(l, q)| q.get(l)).collect();
    if let Some(i) = b.iter().position(TPoly::is_zero) {
        return Err(Error::Invariant(format!(
            "Q+_{} has zero diagonal coefficient",
            index[i]
        )));
    }
    let divide = |q: &SymElem<TPoly>, d: &TPoly| q.try_map(|c| c.try_div(d));
    match sign {
        Sign::Plus => {
            let p = q_plus
                .iter()
                .zip(&b)
                .map(|(q, d)| divide(q, d))
                .collect::<Result<Vec<_>>>()?;
            Ok(HlTable {
                n,
                r,
                sign,
                index,
                q: q_plus,
                p,
                b,
            })
        }
        Sign::Minus => {
            let in_q: Vec<SymElem<TPoly>> = index
                .par_iter()
                .map(|l| q_plus_in_q(l, engine))
                .collect::<Result<_>>()?;
            // U = Aᵀ: U[i][j] = coefficient of q⁺_{index i} in Q⁺_{index j}
            let upper: Vec<Vec<TPoly>> = index
                .iter()
                .map(|mu| in_q.iter().map(|row| row.get(mu).with_nvars(r)).collect())
                .collect();
            let inv = crate::symfunc::invert_unitriangular(&upper)?;
            let p: Vec<SymElem<TPoly>> = inv
                .into_par_iter()
                .map(|row| {
                    to_schur(&SymElem::from_vec(n, r, Basis::Monomial, &index, row))
                        .with_basis(Basis::Schur)
                })
                .collect();
            for (l, pl) in index.iter().zip(&p) {
                if !pl.get(l).is_one() {
                    return Err(Error::Invariant(format!(
                        "P-_{l} has diagonal {}",
                        pl.get(l)
                    )));
                }
            }
            let q = p.iter().zip(&b).map(|(pl, d)| pl.map(|c| c * d)).collect();
            Ok(HlTable {
                n,
                r,
                sign,
                index,
                q,
                p,
                b,
            })
        }
    }
}

/// `Q±_λ` in Schur coordinates (see [`hl_table`] for the construction; the
/// `−` sign builds the whole table of size `|λ|`).
pub fn hl_q(lambda: &RPartition, sign: Sign, engine: &SymEngine) -> Result<SymElem<TPoly>> {
    match sign {
        Sign::Plus => hl_q_plus(lambda, engine),
        Sign::Minus => {
            let t = hl_table(lambda.size(), sign, engine)?;
            Ok(t.q[t.position(lambda).expect("indexed")].clone())
        }
    }
}

/// `P±_λ` in Schur coordinates, diagonal coefficient one.
pub fn hl_p(lambda: &RPartition, sign: Sign, engine: &SymEngine) -> Result<SymElem<TPoly>> {
    match sign {
        Sign::Plus => {
            let q = hl_q_plus(lambda, engine)?;
            let b = q.get(lambda);
            if b.is_zero() {
                return Err(Error::Invariant(format!(
                    "Q+_{lambda} has zero diagonal coefficient"
                )));
            }
            q.try_map(|c| c.try_div(&b))
        }
        Sign::Minus => {
            let t = hl_table(lambda.size(), sign, engine)?;
            Ok(t.p[t.position(lambda).expect("indexed")].clone())
        }
    }
}

/// `Q±_λ / (1 − t₀)^{j₀}`; fails with [`Error::InexactDivision`] when the
/// division is inexact.  Compare with [`hl_p`] to test `Q = (1 − t₀)^{j₀} P`.
pub fn hl_p_via_j0(lambda: &RPartition, sign: Sign, engine: &SymEngine) -> Result<SymElem<TPoly>> {
    let q = hl_q(lambda, sign, engine)?;
    let params = engine.params();
    let d = (&params.one() - &params.t0()).pow(j0_exponent(lambda) as u32);
    q.try_map(|c| c.try_div(&d))
}

/// `b_λ(t)`, the diagonal Schur coefficient of `Q⁺_λ` (`Q± = b P±`).
pub fn b_lambda(lambda: &RPartition, engine: &SymEngine) -> Result<TPoly> {
    Ok(hl_q_plus(lambda, engine)?.get(lambda))
}

// ---------------------------------------------------------------------------
// Closed formulas
// ---------------------------------------------------------------------------

/// Drops the Schur coordinates whose shape has a component longer than `m`:
/// the image of a symmetric function in `m` variables per group.
pub fn truncate_schur(f: &SymElem<TPoly>, m: usize) -> SymElem<TPoly> {
    let mut out = SymElem::zero(f.n(), f.r(), f.basis());
    for (l, c) in f.coords() {
        if l.max_len() <= m {
            out.add_at(l, c.clone());
        }
    }
    out
}

fn linear(nx: usize, a: usize, b: usize, w: &TPoly, one: &TPoly) -> XPoly {
    &XPoly::var(nx, a).scale(one) - &XPoly::var(nx, b).scale(w)
}

/// The closed formula `R±_λ = Σ_{w ∈ S_m^r} w(x^{λ−ε} ∏_ν I±_ν / Δ)` in Schur
/// coordinates.
pub fn closed_r(
    lambda: &RPartition,
    sign: Sign,
    m: usize,
    params: &Params,
) -> Result<SymElem<TPoly>> {
    let r = lambda.r();
    let c = c_map(lambda, m)?;
    let n0 = combinat::nu0(lambda, m)?;
    let nx = r * m;
    let one = params.one();
    let mut num_exps = vec![0u32; nx];
    for (p, &v) in c.iter().enumerate() {
        let k = comp_of(r, p);
        let eps = match sign {
            Sign::Plus => v != 0 && k == 1,
            Sign::Minus => v != 0 && k != r,
        };
        num_exps[p] = (v - i64::from(eps)) as u32;
    }
    let mut num = XPoly::monomial(nx, num_exps, one.clone());
    for p in 0..nx {
        let (k, i) = (comp_of(r, p), row_of(r, p));
        let (other, w) = match sign {
            Sign::Plus => (cyc(r, k as isize - 1), params.t(k as isize - 1).clone()),
            Sign::Minus => (cyc(r, k as isize + 1), params.t(k as isize).clone()),
        };
        if p <= n0 && c[p] != 0 {
            for j in 1..=m {
                if pos(r, other, j) > p {
                    num = &num * &linear(nx, p, pos(r, other, j), &w, &one);
                }
            }
        } else if p <= n0 {
            for j in i + 1..=m {
                num = &num * &linear(nx, p, pos(r, other, j), &w, &one);
            }
        } else {
            for j in i + 1..=m {
                num = &num * &linear(nx, p, pos(r, k, j), params.t(k as isize), &one);
            }
        }
    }
    alternant_reading(&num, r, m, lambda.size())
}

/// `f_λ(t) = ∏_{i<r} t_i^{A_i}` with `A_i = Σ_{j = m − i₀}^{m − m_i − 1} j`.
pub fn f_lambda(lambda: &RPartition, m: usize, params: &Params) -> TPoly {
    let r = lambda.r();
    let ladder = sharp_ladder(lambda);
    let i0 = ladder[r - 1];
    let mut f = params.one();
    for i in 1..r {
        let mi = ladder[i - 1];
        let a: usize = ((m - i0)..(m - mi)).sum();
        f = &f * &params.t(i as isize).pow(a as u32);
    }
    f
}

/// `m₁ ≤ m₂ ≤ ⋯ ≤ m_r`: `m_k = max(m_{k−1}, ℓ(λ^(k)))`.
fn sharp_ladder(lambda: &RPartition) -> Vec<usize> {
    let mut out = Vec::with_capacity(lambda.r());
    let mut cur = 0;
    for c in lambda.comps() {
        cur = cur.max(c.len());
        out.push(cur);
    }
    out
}

/// The `+` closed construction `Q♯_λ = R♯_λ / (v′_λ f_λ)` in Schur coordinates.
pub fn sharp_q(lambda: &RPartition, m: usize, params: &Params) -> Result<SymElem<TPoly>> {
    let r = lambda.r();
    let c = c_map(lambda, m)?;
    let n0 = combinat::nu0(lambda, m)?;
    let nx = r * m;
    let one = params.one();
    let ladder = sharp_ladder(lambda);
    let lower = |k: usize| if k == 1 { 0 } else { ladder[k - 2] };
    let mut exps = vec![0u32; nx];
    for (p, &v) in c.iter().enumerate() {
        let (k, i) = (comp_of(r, p), row_of(r, p));
        let eps = lower(k) < i && i <= ladder[k - 1];
        if v < i64::from(eps) {
            return Err(Error::Invariant(format!(
                "negative exponent in R♯ for {lambda}"
            )));
        }
        exps[p] = (v - i64::from(eps)) as u32;
    }
    let mut num = XPoly::monomial(nx, exps, one.clone());
    // I^(k) for k ≥ 2
    for k in 2..=r {
        for i in 1..=m {
            if pos(r, k, i) > n0 {
                continue;
            }
            for j in i + 1..=m {
                num = &num
                    * &linear(
                        nx,
                        pos(r, k, i),
                        pos(r, k - 1, j),
                        params.t(k as isize - 1),
                        &one,
                    );
            }
        }
    }
    // I^(1) = J_1 ⋯ J_r, J_a over rows m_{a−1} < i ≤ m_a of component a
    for a in 1..=r {
        let w = (1..a).fold(params.t(r as isize).clone(), |acc, b| {
            &acc * params.t(b as isize)
        });
        for i in lower(a) + 1..=ladder[a - 1] {
            for j in i..=m {
                num = &num * &linear(nx, pos(r, a, i), pos(r, r, j), &w, &one);
            }
        }
    }
    // I₀^(k)
    for k in 1..=r {
        for i in 1..=m {
            if pos(r, k, i) <= n0 {
                continue;
            }
            for j in i + 1..=m {
                num = &num * &linear(nx, pos(r, k, i), pos(r, k, j), params.t(k as isize), &one);
            }
        }
    }
    let rs = alternant_reading(&num, r, m, lambda.size())?;
    let vp = v_prime(lambda, m)?.substitute(params.values());
    let d = &vp * &f_lambda(lambda, m, params);
    rs.try_map(|c| c.try_div(&d))
}

// ---------------------------------------------------------------------------
// Gram–Schmidt oracle
// ---------------------------------------------------------------------------

/// The dual families produced by the Gram–Schmidt construction, as dense
/// Schur-coordinate vectors along `index` (descending total order).
#[derive(Clone, Debug)]
pub struct GramSchmidt {
    pub index: Vec<RPartition>,
    pub p_plus: Vec<Vec<Frac>>,
    pub p_minus: Vec<Vec<Frac>>,
    /// `b_λ = ⟨P⁺_λ, P⁻_λ⟩⁻¹`.
    pub b: Vec<Frac>,
}

impl GramSchmidt {
    /// `Q±_λ = b_λ P±_λ` as a Schur-coordinate vector.
    pub fn q(&self, i: usize, sign: Sign) -> Vec<Frac> {
        let p = if sign == Sign::Plus {
            &self.p_plus[i]
        } else {
            &self.p_minus[i]
        };
        p.iter().map(|c| c * &self.b[i]).collect()
    }

    /// `P±_λ` as a polynomial Schur-coordinate element, failing if some
    /// coordinate is not a polynomial.
    pub fn p_poly(&self, i: usize, sign: Sign) -> Result<SymElem<TPoly>> {
        let p = if sign == Sign::Plus {
            &self.p_plus[i]
        } else {
            &self.p_minus[i]
        };
        frac_vec_to_elem(&self.index, p)
    }

    /// `Q±_λ` as a polynomial Schur-coordinate element.
    pub fn q_poly(&self, i: usize, sign: Sign) -> Result<SymElem<TPoly>> {
        frac_vec_to_elem(&self.index, &self.q(i, sign))
    }
}

fn frac_vec_to_elem(index: &[RPartition], v: &[Frac]) -> Result<SymElem<TPoly>> {
    let l = &index[0];
    let polys = v
        .iter()
        .map(|c| {
            c.to_poly()
                .ok_or_else(|| Error::Invariant(format!("coordinate {c} is not a polynomial")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymElem::from_vec(
        l.size(),
        l.r(),
        Basis::Schur,
        index,
        polys,
    ))
}

/// Gram–Schmidt construction of `P±`, `b_λ` for all r-partitions of `n`,
/// processing the index in increasing total order.  `order` may permute the
/// index as long as it refines dominance.
pub fn gram_schmidt_pq(n: usize, engine: &SymEngine) -> Result<GramSchmidt> {
    let form = FormContext::new(engine, n)?;
    let index = form.index().to_vec();
    let order: Vec<usize> = (0..index.len()).rev().collect();
    gram_schmidt_in_order(&form, &order)
}

/// Gram–Schmidt along an explicit processing order (positions in the index).
pub fn gram_schmidt_in_order(form: &FormContext, order: &[usize]) -> Result<GramSchmidt> {
    let index = form.index().to_vec();
    let len = index.len();
    let g = form.gram_s();
    let zero_vec = || vec![Frac::zero(); len];
    let mut p_plus = vec![zero_vec(); len];
    let mut p_minus = vec![zero_vec(); len];
    let mut norm = vec![Frac::zero(); len];
    // w_λ = G P⁻_λ (column), z_λ = P⁺_λᵀ G (row)
    let mut w = vec![zero_vec(); len];
    let mut z = vec![zero_vec(); len];
    let mut done: Vec<usize> = Vec::new();
    for &l in order {
        let mut pp = zero_vec();
        let mut pm = zero_vec();
        pp[l] = Frac::one();
        pm[l] = Frac::one();
        for &prev in &done {
            let dp = -&w[prev][l].div(&norm[prev])?;
            let dm = -&z[prev][l].div(&norm[prev])?;
            for j in 0..len {
                if !dp.is_zero() && !p_plus[prev][j].is_zero() {
                    pp[j] = &pp[j] + &(&dp * &p_plus[prev][j]);
                }
                if !dm.is_zero() && !p_minus[prev][j].is_zero() {
                    pm[j] = &pm[j] + &(&dm * &p_minus[prev][j]);
                }
            }
        }
        let wl: Vec<Frac> = (0..len)
            .map(|i| {
                (0..len)
                    .filter(|&j| !pm[j].is_zero() && !g[i][j].is_zero())
                    .fold(Frac::zero(), |a, j| &a + &(&g[i][j] * &pm[j]))
            })
            .collect();
        let zl: Vec<Frac> = (0..len)
            .map(|j| {
                (0..len)
                    .filter(|&i| !pp[i].is_zero() && !g[i][j].is_zero())
                    .fold(Frac::zero(), |a, i| &a + &(&pp[i] * &g[i][j]))
            })
            .collect();
        let nl = (0..len)
            .filter(|&i| !pp[i].is_zero())
            .fold(Frac::zero(), |a, i| &a + &(&pp[i] * &wl[i]));
        if nl.is_zero() {
            return Err(Error::Invariant(format!(
                "⟨P⁺, P⁻⟩ vanishes at {}",
                index[l]
            )));
        }
        p_plus[l] = pp;
        p_minus[l] = pm;
        w[l] = wl;
        z[l] = zl;
        norm[l] = nl;
        done.push(l);
    }
    let b = norm.iter().map(Frac::inv).collect::<Result<Vec<_>>>()?;
    Ok(GramSchmidt {
        index,
        p_plus,
        p_minus,
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::to_monomial;

    fn rp(s: &str) -> RPartition {
        s.parse().unwrap()
    }

    fn pr(s: &str, r: usize) -> TPoly {
        TPoly::parse(s, r).unwrap()
    }

    #[test]
    fn one_row_in_first_component_is_a_single_q() {
        let params = Params::generic(2);
        for sign in Sign::BOTH {
            let e = raising_q(&rp("([3],[])"), sign, 1, &params).unwrap();
            assert_eq!(e.terms, vec![(vec![3, 0], TPoly::one(2))]);
        }
    }

    #[test]
    fn raising_expansion_starts_with_identity() {
        let params = Params::generic(3);
        for n in 1..=3 {
            for l in gen_rpartitions(n, 3) {
                for sign in Sign::BOTH {
                    let m = l.max_len();
                    let e = raising_q(&l, sign, m, &params).unwrap();
                    let start = c_map(&l, m).unwrap();
                    let c = e
                        .terms
                        .iter()
                        .find(|(b, _)| *b == start)
                        .map(|x| x.1.clone());
                    assert_eq!(c, Some(TPoly::one(3)), "{l} {sign}");
                }
            }
        }
    }

    #[test]
    fn last_component_matches_classical() {
        // Q⁻_{(−,(2))} = Q_{(2)}(x^(2); t₁t₂) = (1 − t₀) s_2 + (t₀² − t₀) ... checked via P
        let engine = SymEngine::new(Params::generic(2));
        let q = hl_q(&rp("([],[2])"), Sign::Minus, &engine).unwrap();
        let p = hl_p(&rp("([],[2])"), Sign::Minus, &engine).unwrap();
        assert_eq!(q.get(&rp("([],[2])")), pr("1 - t1*t2", 2));
        // P_(2)(t₀) = s_2 − t₀ s_11 ... in the last group only
        assert_eq!(p.get(&rp("([],[1,1])")), pr("-t1*t2", 2));
    }

    #[test]
    fn single_box_families() {
        let engine = SymEngine::new(Params::generic(2));
        let l0 = rp("([],[1])");
        let q = hl_q(&l0, Sign::Minus, &engine).unwrap();
        assert_eq!(
            q,
            SymElem::<TPoly>::unit(&l0, Basis::Schur).map(|c| c * &pr("1 - t1*t2", 2))
        );
        let q = hl_q(&l0, Sign::Plus, &engine).unwrap();
        assert_eq!(
            q,
            SymElem::<TPoly>::unit(&l0, Basis::Schur).map(|c| c * &pr("1 - t1*t2", 2))
        );
    }

    #[test]
    fn closed_r_special_cases() {
        let params = Params::generic(2);
        // one row in the first component: R = v′ q
        for sign in Sign::BOTH {
            for m in 1..=2 {
                let l = rp("([2],[])");
                let r = closed_r(&l, sign, m, &params).unwrap();
                let engine = SymEngine::new(params.clone());
                let q = to_schur(&engine.q_basis_elem(&c_map(&l, 1).unwrap(), sign));
                let vp = v_prime(&l, m).unwrap();
                assert_eq!(r, truncate_schur(&q.map(|c| c * &vp), m), "{sign} m={m}");
            }
        }
    }

    #[test]
    fn closed_r_at_zero_is_schur() {
        let params = Params::generic(2);
        let zero = vec![TPoly::zero(2), TPoly::zero(2)];
        for n in 1..=3 {
            for l in gen_rpartitions(n, 2) {
                for sign in Sign::BOTH {
                    let r = closed_r(&l, sign, l.max_len().max(1), &params).unwrap();
                    let r0 = r.map(|c| c.substitute(&zero));
                    assert_eq!(
                        r0,
                        SymElem::<TPoly>::unit(&l, Basis::Schur)
                            .map(|c: &TPoly| c.clone().with_nvars(2)),
                        "{l} {sign}"
                    );
                }
            }
        }
    }

    #[test]
    fn sharp_f_example() {
        let params = Params::generic(2);
        assert_eq!(f_lambda(&rp("([],[1])"), 1, &params), TPoly::one(2));
    }

    #[test]
    fn gram_schmidt_minimal_and_t0() {
        let engine = SymEngine::new(Params::generic(2));
        let gs = gram_schmidt_pq(2, &engine).unwrap();
        let last = gs.index.len() - 1;
        for j in 0..gs.index.len() {
            let e = if j == last { Frac::one() } else { Frac::zero() };
            assert_eq!(gs.p_plus[last][j], e);
            assert_eq!(gs.p_minus[last][j], e);
        }
        for i in 0..gs.index.len() {
            for j in 0..gs.index.len() {
                let v = gs.p_minus[i][j].at_zero().unwrap();
                assert_eq!(v, num_rational::BigRational::from_integer((i == j).into()));
            }
        }
    }

    #[test]
    fn monomial_view_of_q_is_symmetric_polynomial() {
        let engine = SymEngine::new(Params::generic(2));
        let q = hl_q(&rp("([1],[1])"), Sign::Minus, &engine).unwrap();
        assert!(!to_monomial(&q).is_zero());
    }

    #[test]
    fn tables_agree_with_gram_schmidt() {
        for (nmax, r) in [(3, 2), (2, 3)] {
            let engine = SymEngine::new(Params::generic(r));
            for n in 1..=nmax {
                let gs = gram_schmidt_pq(n, &engine).unwrap();
                for sign in Sign::BOTH {
                    let t = hl_table(n, sign, &engine).unwrap();
                    assert_eq!(t.index, gs.index);
                    for i in 0..t.index.len() {
                        assert_eq!(
                            gs.p_poly(i, sign).unwrap(),
                            t.p[i],
                            "P{sign} {}",
                            t.index[i]
                        );
                        assert_eq!(
                            gs.q_poly(i, sign).unwrap(),
                            t.q[i],
                            "Q{sign} {}",
                            t.index[i]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn p_is_dominance_triangular_and_unit_at_zero() {
        let engine = SymEngine::new(Params::generic(2));
        let zero = vec![TPoly::zero(2), TPoly::zero(2)];
        for sign in Sign::BOTH {
            let t = hl_table(3, sign, &engine).unwrap();
            for (l, p) in t.index.iter().zip(&t.p) {
                assert!(
                    p.support()
                        .iter()
                        .all(|mu| combinat::dominance_leq(mu, l).unwrap()),
                    "{l}"
                );
                let p0 = p.map(|c| c.substitute(&zero));
                assert_eq!(
                    p0,
                    SymElem::<TPoly>::unit(l, Basis::Schur).map(|c| c.clone().with_nvars(2))
                );
            }
        }
    }

    #[test]
    fn restricted_minus_product_breaks_triangularity() {
        // the Δ-restricted operator product for ((1,1),∅) produces s_{((1),(1))},
        // which lies above λ in dominance
        let engine = SymEngine::new(Params::generic(2));
        let l = rp("([1,1],[])");
        let e =
            raising_q_with(&l, Sign::Minus, 2, engine.params(), MinusRoots::Restricted).unwrap();
        let q = e.to_schur(&engine);
        assert_eq!(q.get(&rp("([1],[1])")), pr("-t1", 2));
        assert_eq!(q.get(&rp("([],[2])")), pr("t1^2", 2));
        // the production Q⁻ has no such term
        assert!(hl_q(&l, Sign::Minus, &engine)
            .unwrap()
            .get(&rp("([1],[1])"))
            .is_zero());
    }

    #[test]
    fn restricted_minus_product_matches_when_only_last_component() {
        let engine = SymEngine::new(Params::generic(3));
        for l in ["([],[],[1])", "([],[],[2])", "([],[],[1,1])"] {
            let l = rp(l);
            let e = raising_q_with(
                &l,
                Sign::Minus,
                l.max_len(),
                engine.params(),
                MinusRoots::Restricted,
            )
            .unwrap();
            assert_eq!(
                e.to_schur(&engine),
                hl_q(&l, Sign::Minus, &engine).unwrap(),
                "{l}"
            );
        }
    }

    #[test]
    fn closed_r_two_paths_at_r2() {
        // (1 − t₀)^{j₀} v′⁻¹ R± = Q± for r = 2
        let engine = SymEngine::new(Params::generic(2));
        let params = engine.params();
        for n in 1..=3 {
            for sign in Sign::BOTH {
                let t = hl_table(n, sign, &engine).unwrap();
                for (i, l) in t.index.iter().enumerate() {
                    let m = l.max_len();
                    let vp = v_prime(l, m).unwrap();
                    let d = (&params.one() - &params.t0()).pow(j0_exponent(l) as u32);
                    let lhs = closed_r(l, sign, m, params).unwrap().map(|c| c * &d);
                    let rhs = truncate_schur(&t.q[i], m).map(|c| c * &vp);
                    assert_eq!(lhs, rhs, "{sign} {l}");
                }
            }
        }
    }

    #[test]
    fn closed_r_diagonal_differs_from_v_prime_on_repeated_parts() {
        let params = Params::generic(2);
        let r = closed_r(&rp("([],[1,1])"), Sign::Minus, 2, &params).unwrap();
        assert_eq!(r.get(&rp("([],[1,1])")), pr("1 + t1*t2", 2));
        assert_eq!(v_prime(&rp("([],[1,1])"), 2).unwrap(), TPoly::one(2));
    }

    #[test]
    fn sharp_q_equals_q_plus() {
        for (nmax, r) in [(3, 2), (2, 3)] {
            let engine = SymEngine::new(Params::generic(r));
            for n in 1..=nmax {
                for l in gen_rpartitions(n, r) {
                    let q = hl_q(&l, Sign::Plus, &engine).unwrap();
                    for m in [l.max_len(), n] {
                        assert_eq!(
                            sharp_q(&l, m, engine.params()).unwrap(),
                            truncate_schur(&q, m),
                            "{l} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn b_lambda_is_shared_by_both_signs() {
        let engine = SymEngine::new(Params::generic(2));
        let plus = hl_table(3, Sign::Plus, &engine).unwrap();
        let minus = hl_table(3, Sign::Minus, &engine).unwrap();
        assert_eq!(plus.b, minus.b);
        assert_eq!(
            b_lambda(&rp("([],[1,1])"), &engine).unwrap(),
            pr("1 - t1*t2 - t1^2*t2^2 + t1^3*t2^3", 2)
        );
    }

    #[test]
    fn j0_rule_fails_for_repeated_parts() {
        let engine = SymEngine::new(Params::generic(2));
        let l = rp("([1,1],[])");
        let via = hl_p_via_j0(&l, Sign::Plus, &engine).unwrap();
        assert_eq!(via.get(&l), pr("1 - t1*t2", 2));
        assert_eq!(
            hl_p(&l, Sign::Plus, &engine).unwrap().get(&l),
            TPoly::one(2)
        );
    }
}
