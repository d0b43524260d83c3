//! Bimodules as right modules over `A^env = A^op ⊗ A`, Hochschild cohomology, and the
//! comparison of `Λ^env` with `Γ^env` for an arrow removal.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::algebra::{enveloping_algebra, FiniteDimAlgebra};
use crate::cleft::CleftContext;
use crate::error::Error;
use crate::extension::AlgebraPair;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{Alg, Representation};
use crate::resolution::{ext_dims, ext_dims_from, is_projective, Resolution};

/// `A` as a right `A^env`-module, `m·(x ⊗ y) = x m y`. Component `(u, v)` is `e_u A e_v`.
pub fn regular_bimodule<K: Field>(a: &FiniteDimAlgebra<K>, env: &Alg<K>) -> Result<Representation<K>, Error> {
    let n = a.num_vertices();
    let (d, ng) = (a.dim(), a.num_generators());
    if env.num_vertices() != n * n || env.dim() != d * d || env.num_generators() != 2 * ng * n {
        return Err(Error::AlgebraMismatch);
    }
    let k = a.field();
    let comp: Vec<Vec<usize>> = (0..n * n).map(|uv| a.tagged(uv / n, uv % n)).collect();
    let mut local = vec![0; d];
    for c in &comp {
        for (i, &b) in c.iter().enumerate() {
            local[b] = i;
        }
    }
    let dims: Vec<usize> = comp.iter().map(|c| c.len()).collect();
    let mut maps = Vec::with_capacity(2 * ng * n);
    // Left generators g ⊗ e_v: m |-> g m on e_t A e_v.
    for &gb in a.generators() {
        let (s, t) = (a.basis()[gb].source, a.basis()[gb].target);
        for v in 0..n {
            let mut m = Matrix::zeros(k, dims[t * n + v], dims[s * n + v]);
            for (r, &x) in comp[t * n + v].iter().enumerate() {
                for (y, c) in a.mul_basis(gb, x) {
                    m.set(r, local[y], c);
                }
            }
            maps.push(m);
        }
    }
    // Right generators e_u ⊗ g: m |-> m g on e_u A e_s.
    for u in 0..n {
        for (g, &gb) in a.generators().iter().enumerate() {
            let (s, t) = (a.basis()[gb].source, a.basis()[gb].target);
            let mut m = Matrix::zeros(k, dims[u * n + s], dims[u * n + t]);
            for (r, &x) in comp[u * n + s].iter().enumerate() {
                for (y, c) in a.mul_generator(x, g) {
                    m.set(r, local[*y], c.clone());
                }
            }
            maps.push(m);
        }
    }
    Representation::from_parts(env.clone(), dims, maps)
}

/// Dimension of the center, by solving `zx = xz` for the generators and idempotents.
pub fn center_dim<K: Field>(a: &FiniteDimAlgebra<K>) -> usize {
    let k = a.field();
    let d = a.dim();
    let checks: Vec<usize> = a.generators().iter().chain(a.idempotents()).copied().collect();
    let mut m = Matrix::zeros(k, d, d * checks.len());
    for z in 0..d {
        for (c, &g) in checks.iter().enumerate() {
            for (t, x) in a.mul_basis(z, g) {
                let cur = k.add(m.get(z, c * d + t), &x);
                m.set(z, c * d + t, cur);
            }
            for (t, x) in a.mul_basis(g, z) {
                let cur = k.sub(m.get(z, c * d + t), &x);
                m.set(z, c * d + t, cur);
            }
        }
    }
    m.left_kernel().dim()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HhMethod {
    BimoduleResolution,
    RelativeBar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HhTable {
    pub method: HhMethod,
    /// `dims[i] = dim HH^i`.
    pub dims: Vec<usize>,
}

/// `HH^i(A) = Ext^i_{A^env}(A, A)` for `i ≤ max`.
pub fn hh_dims_resolution<K: Field>(a: &Arc<FiniteDimAlgebra<K>>, env_cap: usize, max: usize) -> Result<HhTable, Error> {
    let env = Arc::new(enveloping_algebra(a, env_cap)?);
    let r = regular_bimodule(a, &env)?;
    Ok(HhTable {
        method: HhMethod::BimoduleResolution,
        dims: ext_dims(&r, &r, max)?,
    })
}

/// Composable sequences of radical basis elements, grouped by length.
struct Chains {
    /// `seqs[n]`: sequences of length `n` with source and target vertex.
    seqs: Vec<Vec<(Vec<usize>, usize, usize)>>,
    index: Vec<BTreeMap<Vec<usize>, usize>>,
}

fn chains<K: Field>(a: &FiniteDimAlgebra<K>, max_len: usize) -> Chains {
    let rad: Vec<usize> = (0..a.dim()).filter(|&b| !a.is_idempotent(b)).collect();
    let mut seqs = vec![(0..a.num_vertices()).map(|v| (Vec::new(), v, v)).collect::<Vec<_>>()];
    for n in 1..=max_len {
        let mut next = Vec::new();
        for (s, src, tgt) in &seqs[n - 1] {
            for &x in &rad {
                let b = &a.basis()[x];
                if b.source == *tgt {
                    let mut t = s.clone();
                    t.push(x);
                    next.push((t, *src, b.target));
                }
            }
        }
        seqs.push(next);
    }
    let index = seqs
        .iter()
        .enumerate()
        .map(|(n, level)| {
            level
                .iter()
                .enumerate()
                // Length-0 chains are keyed by their vertex.
                .map(|(i, (s, v, _))| (if n == 0 { vec![*v] } else { s.clone() }, i))
                .collect()
        })
        .collect();
    Chains { seqs, index }
}

/// `HH^i(A)` for `i ≤ max` from the complex `Hom_{E-E}(J^{⊗_E n}, A)`, `E` spanned by the
/// vertices. Fails when some cochain space exceeds `cap` dimensions.
pub fn hh_dims_bar<K: Field>(a: &FiniteDimAlgebra<K>, max: usize, cap: usize) -> Result<HhTable, Error> {
    let k = a.field();
    let n = a.num_vertices();
    let ch = chains(a, max + 1);
    let comp: Vec<Vec<usize>> = (0..n * n).map(|uv| a.tagged(uv / n, uv % n)).collect();
    let mut local = vec![0; a.dim()];
    for c in &comp {
        for (i, &b) in c.iter().enumerate() {
            local[b] = i;
        }
    }
    // offsets[m][i]: first cochain coordinate of chain i in degree m.
    let mut offsets = Vec::new();
    let mut sizes = Vec::new();
    for level in &ch.seqs {
        let mut o = Vec::with_capacity(level.len());
        let mut total = 0;
        for (_, s, t) in level {
            o.push(total);
            total += comp[s * n + t].len();
        }
        if total > cap {
            return Err(Error::DimensionCapExceeded { required: total, cap });
        }
        offsets.push(o);
        sizes.push(total);
    }
    let key = |m: usize, s: &[usize], v: usize| -> usize {
        if m == 0 {
            ch.index[0][&vec![v]]
        } else {
            ch.index[m][s]
        }
    };
    let mut ranks = Vec::new();
    for m in 0..=max {
        let mut d = Matrix::zeros(k, sizes[m], sizes[m + 1]);
        let add = |d: &mut Matrix<K>, row: usize, col: usize, c: K::Elem| {
            let cur = k.add(d.get(row, col), &c);
            d.set(row, col, cur);
        };
        for (ti, (t, ts, tt)) in ch.seqs[m + 1].iter().enumerate() {
            let col0 = offsets[m + 1][ti];
            // x_1 f(x_2, ..)
            let tail = key(m, &t[1..], a.basis()[t[0]].target);
            let (_, fs, ft) = &ch.seqs[m][tail];
            for (yi, &y) in comp[fs * n + ft].iter().enumerate() {
                for (z, c) in a.mul_basis(t[0], y) {
                    add(&mut d, offsets[m][tail] + yi, col0 + local[z], c);
                }
            }
            // Σ (-1)^i f(.., x_i x_{i+1}, ..)
            for i in 1..=m {
                let sign = if i % 2 == 1 { k.neg(&k.one()) } else { k.one() };
                for (z, c) in a.mul_basis(t[i - 1], t[i]) {
                    let mut s = t[..i - 1].to_vec();
                    s.push(z);
                    s.extend_from_slice(&t[i + 1..]);
                    let si = ch.index[m][&s];
                    let c = k.mul(&sign, &c);
                    for (yi, &y) in comp[ts * n + tt].iter().enumerate() {
                        add(&mut d, offsets[m][si] + yi, col0 + local[y], c.clone());
                    }
                }
            }
            // (-1)^{m+1} f(x_1, .., x_m) x_{m+1}
            let sign = if (m + 1) % 2 == 1 { k.neg(&k.one()) } else { k.one() };
            let last = t[m];
            let head = key(m, &t[..m], a.basis()[last].source);
            let (_, hs, ht) = &ch.seqs[m][head];
            for (yi, &y) in comp[hs * n + ht].iter().enumerate() {
                for (z, c) in a.mul_basis(y, last) {
                    add(&mut d, offsets[m][head] + yi, col0 + local[z], k.mul(&sign, &c));
                }
            }
        }
        ranks.push(d.rank());
    }
    let dims = (0..=max)
        .map(|m| sizes[m] - ranks[m] - if m == 0 { 0 } else { ranks[m - 1] })
        .collect();
    Ok(HhTable {
        method: HhMethod::RelativeBar,
        dims,
    })
}

/// The enveloping pair `Γ^env ⊆ Λ^env` with `Λ`, `Γ` and `Ker π` as bimodules.
#[derive(Clone, Debug)]
pub struct EnvContext<K: Field> {
    pub pair: AlgebraPair<K>,
    /// `Λ` over `Λ^env`.
    pub lambda: Representation<K>,
    /// `Γ` over `Γ^env`.
    pub gamma: Representation<K>,
    /// `e^env(Λ) = Γ ⊕ Ker π` over `Γ^env`.
    pub restricted: Representation<K>,
    pub ker_pi: Representation<K>,
}

impl<K: Field> EnvContext<K> {
    pub fn new(ctx: &CleftContext<K>, env_cap: usize) -> Result<Self, Error> {
        let lam_env = Arc::new(enveloping_algebra(ctx.lambda(), env_cap)?);
        let gam_env = Arc::new(enveloping_algebra(ctx.gamma(), env_cap)?);
        let pair = ctx.pair().enveloping(gam_env.clone(), lam_env.clone())?;
        let lambda = regular_bimodule(ctx.lambda(), &lam_env)?;
        let gamma = regular_bimodule(ctx.gamma(), &gam_env)?;
        let restricted = pair.restrict(&lambda)?;
        let lam = ctx.lambda();
        let n = lam.num_vertices();
        let mut in_gamma = vec![false; lam.dim()];
        for &b in ctx.embedding() {
            in_gamma[b] = true;
        }
        let k = lam.field();
        let subs: Vec<Subspace<K>> = (0..n * n)
            .map(|uv| {
                let comp = lam.tagged(uv / n, uv % n);
                let vs = comp
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| !in_gamma[b])
                    .map(|(i, _)| {
                        let mut e = vec![k.zero(); comp.len()];
                        e[i] = k.one();
                        e
                    })
                    .collect();
                Subspace::from_vectors(k, comp.len(), vs)
            })
            .collect();
        if !restricted.is_submodule(&subs) {
            return Err(Error::CheckFailed("Ker π is not a sub-bimodule".into()));
        }
        let ker_pi = restricted.submodule(&subs).0;
        Ok(EnvContext {
            pair,
            lambda,
            gamma,
            restricted,
            ker_pi,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvDegree {
    pub degree: usize,
    pub lambda: usize,
    pub gamma: usize,
    pub equal: bool,
    /// Degrees 0 and 1 are reported only.
    pub asserted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvRemovalReport {
    pub degrees: Vec<EnvDegree>,
    pub pass: bool,
}

/// `dim Ext^i_{Λ^env}(Λ, Λ)` against `dim Ext^i_{Γ^env}(Γ, Γ ⊕ Ker π)` for `i ≤ max`.
pub fn env_removal_check<K: Field>(env: &EnvContext<K>, max: usize) -> Result<EnvRemovalReport, Error> {
    let left = ext_dims(&env.lambda, &env.lambda, max)?;
    let mut res = Resolution::new(&env.gamma);
    let right = ext_dims_from(&mut res, &env.restricted, max)?;
    let degrees: Vec<EnvDegree> = (0..=max)
        .map(|i| EnvDegree {
            degree: i,
            lambda: left[i],
            gamma: right[i],
            equal: left[i] == right[i],
            asserted: i >= 2,
        })
        .collect();
    let pass = degrees.iter().all(|d| d.equal || !d.asserted);
    Ok(EnvRemovalReport { degrees, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub bimodule: String,
    pub f_env: usize,
    pub formula: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvFunctorReport {
    pub dim_f_env: usize,
    pub f_env_squared_zero: bool,
    pub dim_g_env: usize,
    pub g_env_projective: bool,
    pub identity: Vec<IdentityRow>,
}

impl EnvFunctorReport {
    pub fn pass(&self) -> bool {
        self.f_env_squared_zero && self.g_env_projective && self.identity.iter().all(|r| r.equal)
    }
}

/// `dim (Λ ⊗_Γ F(B)) + dim F^op(B)` from the vertex components of a Γ-bimodule `B`.
pub fn f_env_formula<K: Field>(ctx: &CleftContext<K>, b: &Representation<K>) -> usize {
    let g = ctx.gamma();
    let n = g.num_vertices();
    let bd = |u: usize, v: usize| b.dims()[u * n + v];
    let row = |u: usize| (0..n).map(|v| bd(u, v)).sum::<usize>();
    let col = |v: usize| (0..n).map(|u| bd(u, v)).sum::<usize>();
    let right_proj = |v: usize| (0..n).map(|w| g.tagged(v, w).len()).sum::<usize>();
    let left_proj = |v: usize| (0..n).map(|u| g.tagged(u, v).len()).sum::<usize>();
    let ends = &ctx.certificate().end_indices;
    let f_b: usize = ends.iter().map(|&(e, f)| col(e) * right_proj(f)).sum();
    let p_f_b: usize = ends
        .iter()
        .map(|&(ej, fj)| left_proj(ej) * ends.iter().map(|&(ei, fi)| bd(fj, ei) * right_proj(fi)).sum::<usize>())
        .sum();
    let f_op: usize = ends.iter().map(|&(e, f)| left_proj(e) * row(f)).sum();
    f_b + p_f_b + f_op
}

/// `(F^env)^2(e^env Λ) = 0`, projectivity of `G^env(Λ)`, and the dimension identity
/// `F^env(B) ≅ (Λ ⊗_Γ F(B)) ⊕ F^op(B)` on `B ∈ {Γ, Ker π}`.
pub fn env_functor_checks<K: Field>(ctx: &CleftContext<K>, env: &EnvContext<K>) -> Result<EnvFunctorReport, Error> {
    let f1 = env.pair.functor_f(&env.restricted)?;
    let f2 = env.pair.functor_f(&f1)?;
    let g = env.pair.functor_g(&env.lambda)?;
    let mut identity = Vec::new();
    for (name, b) in [("gamma", &env.gamma), ("ker_pi", &env.ker_pi)] {
        let f_env = env.pair.functor_f(b)?.dim();
        let formula = f_env_formula(ctx, b);
        identity.push(IdentityRow {
            bimodule: name.into(),
            f_env,
            formula,
            equal: f_env == formula,
        });
    }
    Ok(EnvFunctorReport {
        dim_f_env: f1.dim(),
        f_env_squared_zero: f2.is_zero(),
        dim_g_env: g.dim(),
        g_env_projective: is_projective(&g),
        identity,
    })
}
