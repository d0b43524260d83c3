//! Right modules over a [`FiniteDimAlgebra`], stored as one matrix per generator.
//!
//! Vectors in a module are rows; a generator `g: u -> w` acts on `M_u` by
//! `m |-> m A_g` with `A_g` of shape `dim M_u x dim M_w`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::FiniteDimAlgebra;
use crate::error::Error;
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vec, Matrix, Subspace};

pub type Alg<K> = Arc<FiniteDimAlgebra<K>>;

/// Pointer equality, falling back to structural equality.
pub fn same_algebra<K: Field>(a: &Alg<K>, b: &Alg<K>) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}

#[derive(Clone, Debug)]
pub struct Representation<K: Field> {
    algebra: Alg<K>,
    dims: Vec<usize>,
    maps: Vec<Matrix<K>>,
}

/// A homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap<K: Field> {
    pub blocks: Vec<Matrix<K>>,
}

impl<K: Field> Representation<K> {
    /// Builds a module and checks both shapes and the defining relations.
    pub fn new(algebra: Alg<K>, dims: Vec<usize>, maps: Vec<Matrix<K>>) -> Result<Self, Error> {
        let m = Self::from_parts(algebra, dims, maps)?;
        if !m.validate() {
            return Err(Error::CheckFailed("generator matrices violate the relations".into()));
        }
        Ok(m)
    }

    /// Shape-checked constructor that trusts the relations.
    pub fn from_parts(algebra: Alg<K>, dims: Vec<usize>, maps: Vec<Matrix<K>>) -> Result<Self, Error> {
        if dims.len() != algebra.num_vertices() || maps.len() != algebra.num_generators() {
            return Err(Error::AlgebraMismatch);
        }
        for (g, m) in maps.iter().enumerate() {
            let b = &algebra.basis()[algebra.generators()[g]];
            if m.rows() != dims[b.source] || m.cols() != dims[b.target] {
                return Err(Error::CheckFailed(alloc::format!("generator {g} has the wrong shape")));
            }
        }
        Ok(Representation { algebra, dims, maps })
    }

    pub fn zero_module(algebra: &Alg<K>) -> Self {
        Self::with_dims(algebra, vec![0; algebra.num_vertices()])
    }

    /// All generators acting by zero.
    pub fn with_dims(algebra: &Alg<K>, dims: Vec<usize>) -> Self {
        let k = algebra.field();
        let maps = algebra
            .generators()
            .iter()
            .map(|&g| {
                let b = &algebra.basis()[g];
                Matrix::zeros(k, dims[b.source], dims[b.target])
            })
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims,
            maps,
        }
    }

    pub fn algebra(&self) -> &Alg<K> {
        &self.algebra
    }
    pub fn field(&self) -> &K {
        self.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }
    pub fn generator_matrix(&self, g: usize) -> &Matrix<K> {
        &self.maps[g]
    }
    pub fn generator_matrices(&self) -> &[Matrix<K>] {
        &self.maps
    }

    /// Action of basis element `b: u -> w` as a `dim M_u x dim M_w` matrix.
    pub fn act(&self, b: usize) -> Matrix<K> {
        let w = self.algebra.word(b);
        match w.split_first() {
            None => Matrix::identity(self.field(), self.dims[self.algebra.basis()[b].source]),
            Some((&g, rest)) => rest.iter().fold(self.maps[g].clone(), |acc, &h| acc.mul(&self.maps[h])),
        }
    }

    /// Actions of every basis element, computed by extending words one letter at a time.
    pub fn actions(&self) -> Vec<Matrix<K>> {
        (0..self.algebra.dim()).map(|b| self.act(b)).collect()
    }

    /// Checks `act(x) A_g = act(x g)` for every basis element `x` and generator `g`.
    pub fn validate(&self) -> bool {
        let a = &self.algebra;
        let k = self.field();
        let acts = self.actions();
        for x in 0..a.dim() {
            for (g, &gb) in a.generators().iter().enumerate() {
                let (bx, bg) = (&a.basis()[x], &a.basis()[gb]);
                if bx.target != bg.source {
                    continue;
                }
                let lhs = acts[x].mul(&self.maps[g]);
                let mut rhs = Matrix::zeros(k, self.dims[bx.source], self.dims[bg.target]);
                for (t, c) in a.mul_generator(x, g) {
                    rhs = rhs.add(&acts[*t].scale(c));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Splits a total vector into per-vertex components.
    pub fn split(&self, m: &[K::Elem]) -> Vec<Vec<K::Elem>> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut at = 0;
        for &d in &self.dims {
            out.push(m[at..at + d].to_vec());
            at += d;
        }
        out
    }

    pub fn zero_vector(&self) -> Vec<K::Elem> {
        vec![self.field().zero(); self.dim()]
    }

    /// `m · x` for a total vector `m` and an algebra element `x`.
    pub fn act_element(&self, m: &[K::Elem], x: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.field();
        let a = &self.algebra;
        let parts = self.split(m);
        let mut out = self.zero_vector();
        for (b, c) in x.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let be = &a.basis()[b];
            if is_zero_vec(k, &parts[be.source]) || self.dims[be.target] == 0 {
                continue;
            }
            let img = self.act(b).apply(&parts[be.source]);
            let off = self.offset(be.target);
            axpy(k, &mut out[off..off + self.dims[be.target]], c, &img);
        }
        out
    }

    /// Submodule generated by total vectors, as per-vertex subspaces.
    pub fn generated_submodule(&self, gens: &[Vec<K::Elem>]) -> Vec<Subspace<K>> {
        let k = self.field();
        let mut subs: Vec<Subspace<K>> = self.dims.iter().map(|&d| Subspace::zero(k, d)).collect();
        let acts = self.actions();
        for z in gens {
            let parts = self.split(z);
            for (b, be) in self.algebra.basis().iter().enumerate() {
                if self.dims[be.target] == 0 || is_zero_vec(k, &parts[be.source]) {
                    continue;
                }
                subs[be.target].insert(acts[b].apply(&parts[be.source]));
            }
        }
        subs
    }

    /// Whether per-vertex subspaces are closed under the generators.
    pub fn is_submodule(&self, subs: &[Subspace<K>]) -> bool {
        self.algebra.generators().iter().enumerate().all(|(g, &gb)| {
            let b = &self.algebra.basis()[gb];
            subs[b.source].basis().iter().all(|v| subs[b.target].contains_vec(&self.maps[g].apply(v)))
        })
    }

    /// The submodule with the given per-vertex subspaces and its inclusion.
    pub fn submodule(&self, subs: &[Subspace<K>]) -> (Representation<K>, ModuleMap<K>) {
        debug_assert!(self.is_submodule(subs));
        let k = self.field();
        let a = &self.algebra;
        let dims: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
        let maps = a
            .generators()
            .iter()
            .enumerate()
            .map(|(g, &gb)| {
                let b = &a.basis()[gb];
                let rows = subs[b.source]
                    .basis()
                    .iter()
                    .map(|v| {
                        subs[b.target]
                            .coordinates(&self.maps[g].apply(v))
                            .expect("subspace is closed under the action")
                    })
                    .collect();
                Matrix::from_rows(k, dims[b.target], rows)
            })
            .collect();
        let incl = ModuleMap {
            blocks: subs.iter().map(|s| s.basis_matrix()).collect(),
        };
        (
            Representation {
                algebra: a.clone(),
                dims,
                maps,
            },
            incl,
        )
    }

    /// `M / S` with basis the non-pivot coordinates of each `S_v`, and the projection.
    pub fn quotient(&self, subs: &[Subspace<K>]) -> (Representation<K>, ModuleMap<K>) {
        debug_assert!(self.is_submodule(subs));
        let k = self.field();
        let a = &self.algebra;
        let keep: Vec<Vec<usize>> = subs.iter().map(|s| s.non_pivots()).collect();
        let dims: Vec<usize> = keep.iter().map(|c| c.len()).collect();
        let project = |v: usize, x: &[K::Elem]| -> Vec<K::Elem> {
            let r = subs[v].reduce(x);
            keep[v].iter().map(|&c| r[c].clone()).collect()
        };
        let maps = a
            .generators()
            .iter()
            .enumerate()
            .map(|(g, &gb)| {
                let b = &a.basis()[gb];
                let rows = keep[b.source]
                    .iter()
                    .map(|&c| project(b.target, self.maps[g].row(c)))
                    .collect();
                Matrix::from_rows(k, dims[b.target], rows)
            })
            .collect();
        let proj = ModuleMap {
            blocks: (0..self.dims.len())
                .map(|v| {
                    let rows = (0..self.dims[v])
                        .map(|i| {
                            let mut e = vec![k.zero(); self.dims[v]];
                            e[i] = k.one();
                            project(v, &e)
                        })
                        .collect();
                    Matrix::from_rows(k, dims[v], rows)
                })
                .collect(),
        };
        (
            Representation {
                algebra: a.clone(),
                dims,
                maps,
            },
            proj,
        )
    }

    /// `(M J)_w = Σ_{g: u -> w} im A_g`.
    pub fn radical_subspaces(&self) -> Vec<Subspace<K>> {
        let k = self.field();
        let mut subs: Vec<Subspace<K>> = self.dims.iter().map(|&d| Subspace::zero(k, d)).collect();
        for (g, &gb) in self.algebra.generators().iter().enumerate() {
            let t = self.algebra.basis()[gb].target;
            for r in 0..self.maps[g].rows() {
                subs[t].insert(self.maps[g].row(r).to_vec());
            }
        }
        subs
    }

    /// Per-vertex dimensions of `M / MJ`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_subspaces()
            .iter()
            .zip(&self.dims)
            .map(|(s, d)| d - s.dim())
            .collect()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, Error> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let k = self.field();
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(x, y)| block_diag(k, x, y))
            .collect();
        Ok(Representation {
            algebra: self.algebra.clone(),
            dims,
            maps,
        })
    }

    /// Same data viewed over an algebra with identical structure.
    pub fn rebase(&self, algebra: &Alg<K>) -> Result<Self, Error> {
        if !same_algebra(&self.algebra, algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation {
            algebra: algebra.clone(),
            dims: self.dims.clone(),
            maps: self.maps.clone(),
        })
    }

    /// Equality of the underlying data (same algebra, dims and generator matrices).
    pub fn same_data(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

pub fn block_diag<K: Field>(k: &K, x: &Matrix<K>, y: &Matrix<K>) -> Matrix<K> {
    let mut m = Matrix::zeros(k, x.rows() + y.rows(), x.cols() + y.cols());
    for r in 0..x.rows() {
        for c in 0..x.cols() {
            m.set(r, c, x.get(r, c).clone());
        }
    }
    for r in 0..y.rows() {
        for c in 0..y.cols() {
            m.set(x.rows() + r, x.cols() + c, y.get(r, c).clone());
        }
    }
    m
}

impl<K: Field> ModuleMap<K> {
    pub fn zero(m: &Representation<K>, n: &Representation<K>) -> Self {
        let k = m.field();
        ModuleMap {
            blocks: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(k, a, b)).collect(),
        }
    }

    pub fn identity(m: &Representation<K>) -> Self {
        ModuleMap {
            blocks: m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&next.blocks).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_homomorphism(&self, m: &Representation<K>, n: &Representation<K>) -> bool {
        let a = m.algebra();
        let shapes = self
            .blocks
            .iter()
            .enumerate()
            .all(|(v, b)| b.rows() == m.dims[v] && b.cols() == n.dims[v]);
        shapes
            && a.generators().iter().enumerate().all(|(g, &gb)| {
                let be = &a.basis()[gb];
                m.maps[g].mul(&self.blocks[be.target]) == self.blocks[be.source].mul(&n.maps[g])
            })
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    /// Per-vertex kernels as subspaces of the domain.
    pub fn kernel_subspaces(&self) -> Vec<Subspace<K>> {
        self.blocks.iter().map(|b| b.left_kernel()).collect()
    }

    /// Per-vertex images as subspaces of the codomain.
    pub fn image_subspaces(&self) -> Vec<Subspace<K>> {
        self.blocks.iter().map(|b| b.row_space()).collect()
    }
}

/// Basis of `Hom_A(M, N)`, solving `A^M_g φ_w = φ_u A^N_g` for every generator `g: u -> w`.
pub fn hom_space<K: Field>(m: &Representation<K>, n: &Representation<K>) -> Result<Vec<ModuleMap<K>>, Error> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let k = m.field();
    let a = m.algebra();
    let nv = m.dims.len();
    let mut var_off = vec![0; nv + 1];
    for v in 0..nv {
        var_off[v + 1] = var_off[v] + m.dims[v] * n.dims[v];
    }
    let nvars = var_off[nv];
    let var = |v: usize, r: usize, c: usize| var_off[v] + r * n.dims[v] + c;
    let mut rows = Vec::new();
    for (g, &gb) in a.generators().iter().enumerate() {
        let (u, w) = (a.basis()[gb].source, a.basis()[gb].target);
        let (am, an) = (&m.maps[g], &n.maps[g]);
        for r in 0..m.dims[u] {
            for c in 0..n.dims[w] {
                let mut eq = vec![k.zero(); nvars];
                for s in 0..m.dims[w] {
                    let x = am.get(r, s);
                    if !k.is_zero(x) {
                        let i = var(w, s, c);
                        eq[i] = k.add(&eq[i], x);
                    }
                }
                for t in 0..n.dims[u] {
                    let x = an.get(t, c);
                    if !k.is_zero(x) {
                        let i = var(u, r, t);
                        eq[i] = k.sub(&eq[i], x);
                    }
                }
                if !is_zero_vec(k, &eq) {
                    rows.push(eq);
                }
            }
        }
    }
    let sol = Matrix::from_rows(k, nvars, rows).nullspace();
    Ok(sol
        .basis()
        .iter()
        .map(|x| ModuleMap {
            blocks: (0..nv)
                .map(|v| {
                    let rows = (0..m.dims[v])
                        .map(|r| (0..n.dims[v]).map(|c| x[var(v, r, c)].clone()).collect())
                        .collect();
                    Matrix::from_rows(k, n.dims[v], rows)
                })
                .collect(),
        })
        .collect())
}

/// Searches random combinations of a Hom basis for an isomorphism.
pub fn find_isomorphism<K: Field, R: Rng + ?Sized>(
    m: &Representation<K>,
    n: &Representation<K>,
    rng: &mut R,
    tries: usize,
) -> Result<Option<ModuleMap<K>>, Error> {
    if m.dims != n.dims {
        return Ok(None);
    }
    let basis = hom_space(m, n)?;
    if m.dim() == 0 {
        return Ok(Some(ModuleMap::zero(m, n)));
    }
    let k = m.field();
    for _ in 0..tries {
        let mut f = ModuleMap::zero(m, n);
        for b in &basis {
            f = f.add(&b.scale(&k.random(rng)));
        }
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// The module `e_v A`: block `w` has basis the basis elements tagged `(v, w)`.
pub fn projective_module<K: Field>(a: &Alg<K>, v: usize) -> Result<Representation<K>, Error> {
    if v >= a.num_vertices() {
        return Err(Error::UnknownVertex(alloc::format!("{v}")));
    }
    Ok(ProjectiveSum::new(a, vec![v]).module)
}

/// The simple module at `v`.
pub fn simple_module<K: Field>(a: &Alg<K>, v: usize) -> Result<Representation<K>, Error> {
    if v >= a.num_vertices() {
        return Err(Error::UnknownVertex(alloc::format!("{v}")));
    }
    let mut dims = vec![0; a.num_vertices()];
    dims[v] = 1;
    Ok(Representation::with_dims(a, dims))
}

/// `A_A = ⊕_v e_v A`.
pub fn regular_module<K: Field>(a: &Alg<K>) -> Representation<K> {
    ProjectiveSum::new(a, (0..a.num_vertices()).collect()).module
}

/// `⊕_j e_{v_j} A` with explicit bookkeeping of which basis element sits where.
#[derive(Clone, Debug)]
pub struct ProjectiveSum<K: Field> {
    pub summands: Vec<usize>,
    pub module: Representation<K>,
    /// Position in the total vector ↦ (summand, basis element).
    pub positions: Vec<(usize, usize)>,
    index: Vec<usize>,
}

impl<K: Field> ProjectiveSum<K> {
    pub fn new(a: &Alg<K>, summands: Vec<usize>) -> Self {
        let k = a.field();
        let nv = a.num_vertices();
        // blocks[w] = list of (summand, basis) in order.
        let mut blocks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        let mut local: Vec<usize> = vec![0; a.dim() * summands.len().max(1)];
        for (j, &v) in summands.iter().enumerate() {
            for w in 0..nv {
                for b in a.tagged(v, w) {
                    local[j * a.dim() + b] = blocks[w].len();
                    blocks[w].push((j, b));
                }
            }
        }
        let dims: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        let maps = a
            .generators()
            .iter()
            .enumerate()
            .map(|(g, &gb)| {
                let (u, w) = (a.basis()[gb].source, a.basis()[gb].target);
                let mut m = Matrix::zeros(k, dims[u], dims[w]);
                for (r, &(j, b)) in blocks[u].iter().enumerate() {
                    for (t, c) in a.mul_generator(b, g) {
                        m.set(r, local[j * a.dim() + t], c.clone());
                    }
                }
                m
            })
            .collect();
        let positions: Vec<(usize, usize)> = blocks.into_iter().flatten().collect();
        let mut index = vec![usize::MAX; a.dim() * summands.len()];
        for (p, &(j, b)) in positions.iter().enumerate() {
            index[j * a.dim() + b] = p;
        }
        ProjectiveSum {
            index,
            summands,
            module: Representation {
                algebra: a.clone(),
                dims,
                maps,
            },
            positions,
        }
    }

    /// Total position of `(summand, basis element)`.
    pub fn position(&self, j: usize, b: usize) -> Option<usize> {
        let d = self.module.algebra.dim();
        match self.index.get(j * d + b) {
            Some(&p) if b < d && p != usize::MAX => Some(p),
            _ => None,
        }
    }
}

/// `D M = Hom_k(M, k)` as a module over `op`, which must be the opposite of `M`'s algebra.
pub fn dual_module<K: Field>(m: &Representation<K>, op: &Alg<K>) -> Result<Representation<K>, Error> {
    let a = m.algebra();
    let compatible = op.dim() == a.dim()
        && op.generators() == a.generators()
        && op
            .basis()
            .iter()
            .zip(a.basis())
            .all(|(x, y)| x.source == y.target && x.target == y.source);
    if !compatible {
        return Err(Error::AlgebraMismatch);
    }
    Representation::from_parts(op.clone(), m.dims.clone(), m.maps.iter().map(|x| x.transpose()).collect())
}

/// A random quotient of a random sum of indecomposable projectives.
pub fn random_module<K: Field, R: Rng + ?Sized>(a: &Alg<K>, rng: &mut R, max_summands: usize) -> Representation<K> {
    let k = a.field();
    let nv = a.num_vertices();
    let s = rng.gen_range(1..=max_summands.max(1));
    let summands: Vec<usize> = (0..s).map(|_| rng.gen_range(0..nv)).collect();
    let p = ProjectiveSum::new(a, summands);
    let m = &p.module;
    let relations = rng.gen_range(0..=2);
    let mut gens = Vec::new();
    for _ in 0..relations {
        let w = rng.gen_range(0..nv);
        if m.dims[w] == 0 {
            continue;
        }
        let mut z = m.zero_vector();
        let off = m.offset(w);
        for x in &mut z[off..off + m.dims[w]] {
            *x = k.random(rng);
        }
        gens.push(z);
    }
    let subs = m.generated_submodule(&gens);
    m.quotient(&subs).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{assemble_algebra, opposite_algebra};
    use crate::field::PrimeField;
    use crate::fixtures;
    use crate::presentation::parse_presentation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(text: &str) -> Alg<PrimeField> {
        Arc::new(assemble_algebra(&parse_presentation(text).unwrap(), &PrimeField::new(7).unwrap(), 64).unwrap())
    }

    #[test]
    fn projective_dims() {
        let l1 = alg(fixtures::L1);
        assert_eq!(projective_module(&l1, 0).unwrap().dims(), [1, 1, 0]);
        let l2 = alg(fixtures::L2);
        let p1 = projective_module(&l2, 0).unwrap();
        // e1, a1, a2, a2*b
        assert_eq!(p1.dim(), 4);
        assert!(p1.validate());
        assert!(regular_module(&l2).validate());
        assert_eq!(regular_module(&l2).dim(), 10);
        assert!(projective_module(&l2, 3).is_err());
    }

    #[test]
    fn simple_modules() {
        let l1 = alg(fixtures::L1);
        let s = simple_module(&l1, 1).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.act(l1.idempotent(1)), Matrix::identity(l1.field(), 1));
        assert_eq!(hom_space(&s, &s).unwrap().len(), 1);
    }

    #[test]
    fn hom_from_projective_evaluates() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for text in [fixtures::L2, fixtures::XU, fixtures::C3] {
            let a = alg(text);
            for _ in 0..10 {
                let m = random_module(&a, &mut rng, 3);
                assert!(m.validate());
                for v in 0..a.num_vertices() {
                    let p = projective_module(&a, v).unwrap();
                    assert_eq!(hom_space(&p, &m).unwrap().len(), m.dims()[v]);
                }
            }
        }
    }

    #[test]
    fn hom_between_projectives() {
        let l2 = alg(fixtures::L2);
        let p = |v| projective_module(&l2, v).unwrap();
        // Hom(e_u A, e_v A) = e_v A e_u
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(hom_space(&p(u), &p(v)).unwrap().len(), l2.tagged(v, u).len());
            }
        }
        for f in hom_space(&p(0), &p(2)).unwrap() {
            assert!(f.is_homomorphism(&p(0), &p(2)));
        }
    }

    #[test]
    fn invalid_module_rejected() {
        let l1 = alg(fixtures::L1);
        let k = l1.field();
        // a1 and b both the identity on one-dimensional spaces violates a1*b = 0.
        let maps = vec![
            Matrix::identity(k, 1),
            Matrix::identity(k, 1),
            Matrix::zeros(k, 1, 1),
        ];
        assert!(Representation::new(l1.clone(), vec![1, 1, 1], maps).is_err());
    }

    #[test]
    fn double_dual_is_isomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let xu = alg(fixtures::XU);
        let op = Arc::new(opposite_algebra(&xu));
        for _ in 0..10 {
            let m = random_module(&xu, &mut rng, 3);
            let d = dual_module(&m, &op).unwrap();
            assert!(d.validate());
            let dd = dual_module(&d, &xu).unwrap();
            assert!(find_isomorphism(&m, &dd, &mut rng, 20).unwrap().is_some());
        }
        let s = simple_module(&xu, 0).unwrap();
        assert!(dual_module(&s, &op).unwrap().same_data(&simple_module(&op, 0).unwrap()));
    }

    #[test]
    fn quotient_and_submodule_dims() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l2 = alg(fixtures::L2);
        let p = regular_module(&l2);
        let z = {
            let mut z = p.zero_vector();
            z[p.offset(1)] = 1;
            z
        };
        let subs = p.generated_submodule(&[z]);
        let (sub, incl) = p.submodule(&subs);
        let (quo, proj) = p.quotient(&subs);
        assert!(sub.validate() && quo.validate());
        assert!(incl.is_homomorphism(&sub, &p) && proj.is_homomorphism(&p, &quo));
        assert_eq!(sub.dim() + quo.dim(), p.dim());
        assert!(incl.then(&proj).blocks.iter().all(|b| b.is_zero()));
        let m = random_module(&l2, &mut rng, 2);
        let s = m.direct_sum(&simple_module(&l2, 2).unwrap()).unwrap();
        assert!(s.validate());
    }
}
