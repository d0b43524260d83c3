//! Projective covers, minimal resolutions, Ext dimensions and homological dimensions.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{axpy, Matrix, Subspace};
use crate::module::{dual_module, regular_module, same_algebra, Alg, ModuleMap, ProjectiveSum, Representation};

pub const DEFAULT_PD_CAP: usize = 12;

/// A homological dimension, or the cap that was reached without deciding it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimBound {
    Finite(usize),
    Exceeds(usize),
}

impl DimBound {
    pub fn finite(&self) -> Option<usize> {
        match self {
            DimBound::Finite(n) => Some(*n),
            DimBound::Exceeds(_) => None,
        }
    }
}

/// A minimal projective cover `P -> M`; `generators[j]` is the image in `M_{v_j}`
/// of the top of the `j`-th summand.
#[derive(Clone, Debug)]
pub struct Cover<K: Field> {
    pub projective: ProjectiveSum<K>,
    pub map: ModuleMap<K>,
    pub generators: Vec<Vec<K::Elem>>,
}

/// Lifts a basis of `M / MJ` to generators.
pub fn projective_cover<K: Field>(m: &Representation<K>) -> Cover<K> {
    let k = m.field();
    let a = m.algebra();
    let rad = m.radical_subspaces();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for (v, s) in rad.iter().enumerate() {
        for c in s.non_pivots() {
            let mut x = vec![k.zero(); m.dims()[v]];
            x[c] = k.one();
            summands.push(v);
            generators.push(x);
        }
    }
    let p = ProjectiveSum::new(a, summands);
    let acts = m.actions();
    let blocks = (0..a.num_vertices())
        .map(|w| {
            let off = p.module.offset(w);
            let rows = (0..p.module.dims()[w])
                .map(|i| {
                    let (j, b) = p.positions[off + i];
                    acts[b].apply(&generators[j])
                })
                .collect();
            Matrix::from_rows(k, m.dims()[w], rows)
        })
        .collect();
    Cover {
        projective: p,
        map: ModuleMap { blocks },
        generators,
    }
}

/// `Ω M`, the kernel of the projective cover, with its inclusion into the cover.
pub fn syzygy<K: Field>(m: &Representation<K>) -> (Representation<K>, ModuleMap<K>, Cover<K>) {
    let cover = projective_cover(m);
    let subs = cover.map.kernel_subspaces();
    let (omega, incl) = cover.projective.module.submodule(&subs);
    (omega, incl, cover)
}

pub fn is_projective<K: Field>(m: &Representation<K>) -> bool {
    projective_cover(m).projective.module.dim() == m.dim()
}

/// A minimal projective resolution computed up to some length.
///
/// `projectives[i]` is `P_i`; for `i >= 1`, `images[i][j]` is the image in `P_{i-1}`
/// (as a total vector) of the top of the `j`-th summand of `P_i`.
#[derive(Clone, Debug)]
pub struct Resolution<K: Field> {
    module: Representation<K>,
    projectives: Vec<ProjectiveSum<K>>,
    images: Vec<Vec<Vec<K::Elem>>>,
    /// Last computed syzygy `Ω^len` and its inclusion into `P_{len-1}`.
    frontier: (Representation<K>, ModuleMap<K>),
    terminated_at: Option<usize>,
}

impl<K: Field> Resolution<K> {
    pub fn new(m: &Representation<K>) -> Self {
        let (omega, incl, cover) = syzygy(m);
        let mut r = Resolution {
            module: m.clone(),
            projectives: vec![cover.projective],
            images: vec![Vec::new()],
            frontier: (omega, incl),
            terminated_at: None,
        };
        if r.frontier.0.is_zero() {
            r.terminated_at = Some(0);
        }
        r
    }

    /// Computes `P_0 .. P_n` (fewer if the resolution terminates first).
    pub fn extend_to(&mut self, n: usize) {
        while self.terminated_at.is_none() && self.projectives.len() <= n {
            self.step();
        }
    }

    fn step(&mut self) {
        let (omega, incl) = &self.frontier;
        let prev = self.projectives.last().expect("P_0 exists");
        let (next_omega, next_incl, cover) = syzygy(omega);
        let images = cover
            .projective
            .summands
            .iter()
            .zip(&cover.generators)
            .map(|(&v, x)| {
                let mut z = prev.module.zero_vector();
                let off = prev.module.offset(v);
                let img = incl.blocks[v].apply(x);
                z[off..off + img.len()].clone_from_slice(&img);
                z
            })
            .collect();
        self.projectives.push(cover.projective);
        self.images.push(images);
        self.frontier = (next_omega, next_incl);
        if self.frontier.0.is_zero() {
            self.terminated_at = Some(self.projectives.len() - 1);
        }
    }

    pub fn module(&self) -> &Representation<K> {
        &self.module
    }
    /// Number of computed terms.
    pub fn len(&self) -> usize {
        self.projectives.len()
    }
    pub fn is_empty(&self) -> bool {
        self.projectives.is_empty()
    }
    pub fn terminated_at(&self) -> Option<usize> {
        self.terminated_at
    }

    /// `P_i`, zero beyond termination.
    pub fn projective(&self, i: usize) -> Option<&ProjectiveSum<K>> {
        self.projectives.get(i)
    }

    /// Vertices of the summands of `P_i`; empty beyond termination.
    pub fn summands(&self, i: usize) -> &[usize] {
        self.projectives.get(i).map_or(&[], |p| &p.summands)
    }

    pub fn images(&self, i: usize) -> &[Vec<K::Elem>] {
        self.images.get(i).map_or(&[], |v| v)
    }

    /// Multiplicity of `e_v A` in `P_i`.
    pub fn multiplicity(&self, i: usize, v: usize) -> usize {
        self.summands(i).iter().filter(|&&u| u == v).count()
    }

    /// `d_i: P_i -> P_{i-1}` as a module map, `i >= 1`.
    pub fn differential(&self, i: usize) -> Option<ModuleMap<K>> {
        let (p, q) = (self.projectives.get(i)?, self.projectives.get(i - 1)?);
        let k = self.module.field();
        let acts = q.module.actions();
        let blocks = (0..p.module.dims().len())
            .map(|w| {
                let off = p.module.offset(w);
                let rows = (0..p.module.dims()[w])
                    .map(|r| {
                        let (j, b) = p.positions[off + r];
                        let v = p.summands[j];
                        let z = &q.module.split(&self.images[i][j])[v];
                        acts[b].apply(z)
                    })
                    .collect();
                Matrix::from_rows(k, q.module.dims()[w], rows)
            })
            .collect();
        Some(ModuleMap { blocks })
    }

    /// Dimension of the `i`-th syzygy for `i <= len`.
    pub fn syzygy_dim(&self, i: usize) -> usize {
        if i == self.projectives.len() {
            return self.frontier.0.dim();
        }
        // dim Ω^i = dim P_i - dim Ω^{i+1}
        let mut d = self.frontier.0.dim();
        for j in (i..self.projectives.len()).rev() {
            d = self.projectives[j].module.dim() - d;
        }
        d
    }

    /// The last computed syzygy.
    pub fn frontier(&self) -> &Representation<K> {
        &self.frontier.0
    }
}

/// Matrix of `Hom(d_{i+1}, N): Hom(P_i, N) -> Hom(P_{i+1}, N)` in the coordinates
/// `Hom(⊕ e_{v_j} A, N) = ⊕ N_{v_j}`.
fn cochain_matrix<K: Field>(res: &Resolution<K>, i: usize, n: &Representation<K>, acts: &[Matrix<K>]) -> Matrix<K> {
    let k = n.field();
    let src = res.summands(i);
    let tgt = res.summands(i + 1);
    let row_off = offsets(src.iter().map(|&v| n.dims()[v]));
    let col_off = offsets(tgt.iter().map(|&v| n.dims()[v]));
    let mut m = Matrix::zeros(k, row_off[src.len()], col_off[tgt.len()]);
    let Some(p) = res.projective(i) else {
        return m;
    };
    for (c, z) in res.images(i + 1).iter().enumerate() {
        for (pos, coeff) in z.iter().enumerate() {
            if k.is_zero(coeff) {
                continue;
            }
            let (j, b) = p.positions[pos];
            let act = &acts[b];
            for r in 0..act.rows() {
                let row = m.row_mut(row_off[j] + r);
                axpy(k, &mut row[col_off[c]..col_off[c] + act.cols()], coeff, act.row(r));
            }
        }
    }
    m
}

fn offsets(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for d in it {
        out.push(out.last().unwrap() + d);
    }
    out
}

/// `dim Ext^i(M, N)` for `i = 0..=max` from an already-built resolution of `M`.
pub fn ext_dims_from<K: Field>(res: &mut Resolution<K>, n: &Representation<K>, max: usize) -> Result<Vec<usize>, Error> {
    if !same_algebra(res.module().algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    res.extend_to(max + 1);
    let acts = n.actions();
    let mut ranks = Vec::with_capacity(max + 1);
    for i in 0..=max {
        ranks.push(cochain_matrix(res, i, n, &acts).rank());
    }
    Ok((0..=max)
        .map(|i| {
            let hom: usize = res.summands(i).iter().map(|&v| n.dims()[v]).sum();
            hom - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 }
        })
        .collect())
}

/// `dim Ext^i_A(M, N)` for `i = 0..=max`.
pub fn ext_dims<K: Field>(m: &Representation<K>, n: &Representation<K>, max: usize) -> Result<Vec<usize>, Error> {
    ext_dims_from(&mut Resolution::new(m), n, max)
}

pub fn pd_up_to<K: Field>(m: &Representation<K>, cap: usize) -> DimBound {
    let mut r = Resolution::new(m);
    r.extend_to(cap);
    match r.terminated_at() {
        Some(n) => DimBound::Finite(n),
        None => DimBound::Exceeds(cap),
    }
}

/// `id_A M = pd_{A^op} D M`; `op` must be the opposite of `M`'s algebra.
pub fn id_up_to<K: Field>(m: &Representation<K>, op: &Alg<K>, cap: usize) -> Result<DimBound, Error> {
    Ok(pd_up_to(&dual_module(m, op)?, cap))
}

/// Injective dimensions of the regular module on the right (`A_A`) and on the left (`_A A`).
pub fn regular_injective_dims<K: Field>(a: &Alg<K>, op: &Alg<K>, cap: usize) -> Result<(DimBound, DimBound), Error> {
    let right = id_up_to(&regular_module(a), op, cap)?;
    let left = id_up_to(&regular_module(op), a, cap)?;
    Ok((right, left))
}

/// Whether `ker(P -> M) ⊆ P J` for the cover, i.e. the cover is minimal.
pub fn cover_is_minimal<K: Field>(cover: &Cover<K>) -> bool {
    let p = &cover.projective.module;
    let rad = p.radical_subspaces();
    cover
        .map
        .kernel_subspaces()
        .iter()
        .zip(&rad)
        .all(|(kv, rv): (&Subspace<K>, &Subspace<K>)| rv.contains(kv).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{assemble_algebra, opposite_algebra};
    use crate::field::PrimeField;
    use crate::fixtures;
    use crate::module::{find_isomorphism, hom_space, projective_module, random_module, simple_module};
    use crate::presentation::parse_presentation;
    use alloc::sync::Arc;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(text: &str) -> Alg<PrimeField> {
        Arc::new(assemble_algebra(&parse_presentation(text).unwrap(), &PrimeField::new(7).unwrap(), 64).unwrap())
    }

    #[test]
    fn l1_syzygies_rotate() {
        let l1 = alg(fixtures::L1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for v in 0..3 {
            let (omega, _, cover) = syzygy(&simple_module(&l1, v).unwrap());
            assert!(cover_is_minimal(&cover));
            let s = simple_module(&l1, (v + 1) % 3).unwrap();
            assert!(find_isomorphism(&omega, &s, &mut rng, 5).unwrap().is_some());
        }
    }

    #[test]
    fn l2_syzygy_has_projective_summand() {
        let l2 = alg(fixtures::L2);
        let (omega, _, _) = syzygy(&simple_module(&l2, 0).unwrap());
        let expected = simple_module(&l2, 1).unwrap().direct_sum(&projective_module(&l2, 1).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(find_isomorphism(&omega, &expected, &mut rng, 20).unwrap().is_some());
    }

    #[test]
    fn resolution_shapes() {
        let l1 = alg(fixtures::L1);
        let mut r = Resolution::new(&simple_module(&l1, 0).unwrap());
        r.extend_to(6);
        assert_eq!(r.terminated_at(), None);
        for i in 0..=6 {
            assert_eq!(r.summands(i), [i % 3]);
        }
        let a2 = alg(fixtures::A2);
        let mut r = Resolution::new(&simple_module(&a2, 0).unwrap());
        r.extend_to(5);
        assert_eq!(r.terminated_at(), Some(1));
        assert_eq!((r.summands(0), r.summands(1)), (&[0][..], &[1][..]));
        let p = Resolution::new(&projective_module(&l1, 2).unwrap());
        assert_eq!(p.terminated_at(), Some(0));
    }

    #[test]
    fn differentials_compose_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for text in [fixtures::L2, fixtures::XU, fixtures::C3] {
            let a = alg(text);
            for _ in 0..5 {
                let m = random_module(&a, &mut rng, 3);
                let mut r = Resolution::new(&m);
                r.extend_to(4);
                for i in 1..r.len() {
                    let d = r.differential(i).unwrap();
                    let (p, q) = (&r.projective(i).unwrap().module, &r.projective(i - 1).unwrap().module);
                    assert!(d.is_homomorphism(p, q));
                    if i >= 2 {
                        assert!(d.then(&r.differential(i - 1).unwrap()).blocks.iter().all(|b| b.is_zero()));
                    }
                    // exactness: rank d_i = dim Ω^i
                    assert_eq!(d.rank(), r.syzygy_dim(i));
                }
            }
        }
    }

    #[test]
    fn ext_matches_cover_multiplicities() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for text in [fixtures::L2, fixtures::XU, fixtures::C3, fixtures::H4] {
            let a = alg(text);
            for _ in 0..5 {
                let m = random_module(&a, &mut rng, 3);
                let mut r = Resolution::new(&m);
                for v in 0..a.num_vertices() {
                    let s = simple_module(&a, v).unwrap();
                    let e = ext_dims_from(&mut r, &s, 4).unwrap();
                    for (i, d) in e.iter().enumerate() {
                        assert_eq!(*d, r.multiplicity(i, v));
                    }
                    assert_eq!(e[0], hom_space(&m, &s).unwrap().len());
                }
            }
        }
    }

    #[test]
    fn ext_on_l1_and_l2() {
        let l1 = alg(fixtures::L1);
        let s1 = simple_module(&l1, 0).unwrap();
        for j in 0..3 {
            let e = ext_dims(&s1, &simple_module(&l1, j).unwrap(), 8).unwrap();
            for (i, d) in e.iter().enumerate() {
                assert_eq!(*d, usize::from(j == i % 3));
            }
        }
        let l2 = alg(fixtures::L2);
        let e = ext_dims(&simple_module(&l2, 0).unwrap(), &simple_module(&l2, 1).unwrap(), 1).unwrap();
        assert_eq!(e[1], 2);
    }

    #[test]
    fn homological_dimensions() {
        let a2 = alg(fixtures::A2);
        assert_eq!(pd_up_to(&simple_module(&a2, 0).unwrap(), 12), DimBound::Finite(1));
        let l1 = alg(fixtures::L1);
        assert_eq!(pd_up_to(&simple_module(&l1, 0).unwrap(), 8), DimBound::Exceeds(8));
        let op = Arc::new(opposite_algebra(&l1));
        assert_eq!(regular_injective_dims(&l1, &op, 12).unwrap(), (DimBound::Finite(0), DimBound::Finite(0)));
        let h4 = alg(fixtures::H4);
        let op = Arc::new(opposite_algebra(&h4));
        let (r, l) = regular_injective_dims(&h4, &op, 12).unwrap();
        assert_eq!((r, l), (DimBound::Finite(1), DimBound::Finite(1)));
    }
}
