//! Functors of the cleft extension `Γ ⊆ Λ` obtained by removing a certified arrow set `T`.
//!
//! `Λ = Γ ⊕ P` with `P = ⊕_i Γe_i ⊗ f_iΓ` for the arrows `a_i: e_i -> f_i` of `T`, so
//! `N ⊗_Γ Λ = N ⊕ ⊕_i N_{e_i} ⊗ f_iΓ` has an explicit basis. Modules built here use that
//! layout: at each vertex `w` first `N_w`, then for every `i`, every basis vector `r` of
//! `N_{e_i}` and every `v ∈ f_iΓe_w` (in basis order) the vector `r ⊗ v`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::assemble_algebra;
use crate::error::Error;
use crate::extension::AlgebraPair;
use crate::field::Field;
use crate::ideal::{gamma_embedding, remove_arrows, trivial_extension_check, RemovalCertificate, TrivialExtensionReport};
use crate::linalg::Matrix;
use crate::module::{same_algebra, Alg, ModuleMap, Representation};

#[derive(Clone, Debug)]
pub struct CleftContext<K: Field> {
    lambda: Alg<K>,
    gamma: Alg<K>,
    cert: RemovalCertificate,
    report: TrivialExtensionReport,
    embedding: Vec<usize>,
    /// Λ-generator of each Γ-generator.
    old: Vec<usize>,
    pair: AlgebraPair<K>,
}

struct Layout {
    dims: Vec<usize>,
    /// `pos[i][r * dim Γ + v]`: local position of `r ⊗ v` at the target of `v`.
    pos: Vec<Vec<usize>>,
}

/// A module with a map relating it to its input.
#[derive(Clone, Debug)]
pub struct WithMap<K: Field> {
    pub module: Representation<K>,
    pub map: ModuleMap<K>,
}

impl<K: Field> CleftContext<K> {
    /// Builds `Γ` from the certificate and checks the trivial-extension structure.
    pub fn new(lambda: Alg<K>, cert: RemovalCertificate, degree_cap: usize) -> Result<Self, Error> {
        let origin = lambda.origin().ok_or(Error::NoPresentation)?;
        let gp = remove_arrows(origin, &cert)?;
        let gamma = Arc::new(assemble_algebra(&gp, lambda.field(), degree_cap)?);
        Self::from_parts(lambda, gamma, cert)
    }

    pub fn from_parts(lambda: Alg<K>, gamma: Alg<K>, cert: RemovalCertificate) -> Result<Self, Error> {
        if lambda.origin() != Some(&cert.presentation) {
            return Err(Error::CertificateMismatch);
        }
        let report = trivial_extension_check(&lambda, &gamma, &cert)?;
        let embedding = gamma_embedding(&lambda, &gamma, &cert)?;
        let old: Vec<usize> = (0..lambda.num_generators())
            .filter(|a| !cert.arrow_indices.contains(a))
            .collect();
        let pair = AlgebraPair::new(gamma.clone(), lambda.clone(), old.clone())?;
        Ok(CleftContext {
            lambda,
            gamma,
            cert,
            report,
            embedding,
            old,
            pair,
        })
    }

    pub fn lambda(&self) -> &Alg<K> {
        &self.lambda
    }
    pub fn gamma(&self) -> &Alg<K> {
        &self.gamma
    }
    pub fn certificate(&self) -> &RemovalCertificate {
        &self.cert
    }
    pub fn report(&self) -> &TrivialExtensionReport {
        &self.report
    }
    /// Λ-basis index of each Γ-basis element.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }
    /// Generic induction along `Γ ⊆ Λ`, independent of the explicit layout.
    pub fn pair(&self) -> &AlgebraPair<K> {
        &self.pair
    }

    fn over(&self, m: &Representation<K>, alg: &Alg<K>) -> Result<(), Error> {
        if same_algebra(m.algebra(), alg) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn layout(&self, nd: &[usize], with_base: bool) -> Layout {
        let g = &self.gamma;
        let gd = g.dim();
        let mut dims = if with_base { nd.to_vec() } else { vec![0; nd.len()] };
        let mut pos = Vec::new();
        for &(e, f) in &self.cert.end_indices {
            let mut p = vec![usize::MAX; nd[e] * gd];
            for r in 0..nd[e] {
                for v in (0..gd).filter(|&v| g.basis()[v].source == f) {
                    let w = g.basis()[v].target;
                    p[r * gd + v] = dims[w];
                    dims[w] += 1;
                }
            }
            pos.push(p);
        }
        Layout { dims, pos }
    }

    /// Right action of Γ-generator `j` on the tensor part of `lay`, written into `m`.
    fn tensor_action(&self, lay: &Layout, nd: &[usize], j: usize, m: &mut Matrix<K>) {
        let g = &self.gamma;
        let gd = g.dim();
        let u = g.basis()[g.generators()[j]].source;
        for (i, &(e, f)) in self.cert.end_indices.iter().enumerate() {
            for r in 0..nd[e] {
                for v in g.tagged(f, u) {
                    for (t, c) in g.mul_generator(v, j) {
                        m.set(lay.pos[i][r * gd + v], lay.pos[i][r * gd + *t], c.clone());
                    }
                }
            }
        }
    }

    /// Restriction `e: mod Λ -> mod Γ`.
    pub fn e(&self, m: &Representation<K>) -> Result<Representation<K>, Error> {
        self.pair.restrict(m)
    }

    /// Inflation `i: mod Γ -> mod Λ` along `Λ -> Γ`, the arrows of `T` acting by zero.
    pub fn i(&self, n: &Representation<K>) -> Result<Representation<K>, Error> {
        self.pair.inflate(n)
    }

    /// `l(N) = N ⊗_Γ Λ` with the unit `ν_N: N -> e l(N)`.
    pub fn l(&self, n: &Representation<K>) -> Result<WithMap<K>, Error> {
        self.over(n, &self.gamma)?;
        let k = n.field();
        let nd = n.dims();
        let lay = self.layout(nd, true);
        let lam = &self.lambda;
        let mut maps: Vec<Matrix<K>> = lam
            .generators()
            .iter()
            .map(|&gb| Matrix::zeros(k, lay.dims[lam.basis()[gb].source], lay.dims[lam.basis()[gb].target]))
            .collect();
        for (j, &a) in self.old.iter().enumerate() {
            let src = n.generator_matrix(j);
            for r in 0..src.rows() {
                for c in 0..src.cols() {
                    maps[a].set(r, c, src.get(r, c).clone());
                }
            }
            self.tensor_action(&lay, nd, j, &mut maps[a]);
        }
        let gd = self.gamma.dim();
        for (i, (&a, &(e, f))) in self.cert.arrow_indices.iter().zip(&self.cert.end_indices).enumerate() {
            let top = self.gamma.idempotent(f);
            for r in 0..nd[e] {
                maps[a].set(r, lay.pos[i][r * gd + top], k.one());
            }
        }
        let module = Representation::from_parts(lam.clone(), lay.dims.clone(), maps)?;
        let unit = ModuleMap {
            blocks: nd
                .iter()
                .zip(&lay.dims)
                .map(|(&d, &dl)| {
                    let mut m = Matrix::zeros(k, d, dl);
                    for r in 0..d {
                        m.set(r, r, k.one());
                    }
                    m
                })
                .collect(),
        };
        Ok(WithMap { module, map: unit })
    }

    /// `F(N) = ⊕_i N_{e_i} ⊗ f_iΓ`, so that `e l(N) = N ⊕ F(N)`.
    pub fn f(&self, n: &Representation<K>) -> Result<Representation<K>, Error> {
        self.over(n, &self.gamma)?;
        let k = n.field();
        let nd = n.dims();
        let lay = self.layout(nd, false);
        let g = &self.gamma;
        let maps = (0..g.num_generators())
            .map(|j| {
                let gb = &g.basis()[g.generators()[j]];
                let mut m = Matrix::zeros(k, lay.dims[gb.source], lay.dims[gb.target]);
                self.tensor_action(&lay, nd, j, &mut m);
                m
            })
            .collect();
        Representation::from_parts(g.clone(), lay.dims, maps)
    }

    /// Counit `μ_M: l e(M) -> M`, `m ⊗ λ |-> mλ`, together with `l e(M)`.
    pub fn counit(&self, m: &Representation<K>) -> Result<WithMap<K>, Error> {
        self.over(m, &self.lambda)?;
        let k = m.field();
        let em = self.e(m)?;
        let lem = self.l(&em)?.module;
        let md = m.dims();
        let lay = self.layout(md, true);
        let gd = self.gamma.dim();
        let acts = m.actions();
        let mut blocks: Vec<Matrix<K>> = lay.dims.iter().zip(md).map(|(&dl, &d)| Matrix::zeros(k, dl, d)).collect();
        for (w, block) in blocks.iter_mut().enumerate() {
            for r in 0..md[w] {
                block.set(r, r, k.one());
            }
        }
        for (i, (&a, &(e, f))) in self.cert.arrow_indices.iter().zip(&self.cert.end_indices).enumerate() {
            let ta = m.generator_matrix(a);
            for v in (0..gd).filter(|&v| self.gamma.basis()[v].source == f) {
                let w = self.gamma.basis()[v].target;
                let img = ta.mul(&acts[self.embedding[v]]);
                for r in 0..md[e] {
                    let p = lay.pos[i][r * gd + v];
                    for c in 0..md[w] {
                        blocks[w].set(p, c, img.get(r, c).clone());
                    }
                }
            }
        }
        Ok(WithMap {
            module: lem,
            map: ModuleMap { blocks },
        })
    }

    /// `G(M) = ker μ_M` with its inclusion into `l e(M)`.
    pub fn g(&self, m: &Representation<K>) -> Result<WithMap<K>, Error> {
        let c = self.counit(m)?;
        let (module, map) = c.module.submodule(&c.map.kernel_subspaces());
        Ok(WithMap { module, map })
    }

    /// `H = G ∘ i`.
    pub fn h(&self, n: &Representation<K>) -> Result<WithMap<K>, Error> {
        self.g(&self.i(n)?)
    }

    /// `q(M) = M / M·⟨T⟩` as a Γ-module, with the projection `e(M) -> q(M)`.
    pub fn q(&self, m: &Representation<K>) -> Result<WithMap<K>, Error> {
        self.over(m, &self.lambda)?;
        let mut gens = Vec::new();
        for (&a, &(e, f)) in self.cert.arrow_indices.iter().zip(&self.cert.end_indices) {
            let off = m.offset(f);
            for r in 0..m.dims()[e] {
                let mut z = m.zero_vector();
                z[off..off + m.dims()[f]].clone_from_slice(m.generator_matrix(a).row(r));
                gens.push(z);
            }
        }
        let sub = m.generated_submodule(&gens);
        let (quot, proj) = m.quotient(&sub);
        Ok(WithMap {
            module: self.e(&quot)?,
            map: proj,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_DEGREE_CAP;
    use crate::field::PrimeField;
    use crate::fixtures;
    use crate::ideal::{arrow_set_removable, resolve_arrows};
    use crate::module::{find_isomorphism, hom_space, projective_module, random_module, regular_module, simple_module};
    use crate::presentation::parse_presentation;
    use crate::resolution::{ext_dims, is_projective};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn context(text: &str, names: &[&str]) -> CleftContext<PrimeField> {
        let lam = Arc::new(assemble_algebra(&parse_presentation(text).unwrap(), &PrimeField::new(7).unwrap(), DEFAULT_DEGREE_CAP).unwrap());
        let t = resolve_arrows(lam.origin().unwrap(), names).unwrap();
        let cert = arrow_set_removable(&lam, &t, DEFAULT_DEGREE_CAP).unwrap().certificate().unwrap().clone();
        CleftContext::new(lam, cert, DEFAULT_DEGREE_CAP).unwrap()
    }

    fn contexts() -> Vec<CleftContext<PrimeField>> {
        vec![
            context(fixtures::L2, &["a2"]),
            context(fixtures::L3, &["a2", "a3"]),
            context(fixtures::C3, &["a"]),
            context(fixtures::H4, &["a"]),
            context(fixtures::H4, &["x"]),
        ]
    }

    #[test]
    fn l2_examples() {
        let c = context(fixtures::L2, &["a2"]);
        let s1 = simple_module(c.gamma(), 0).unwrap();
        let l = c.l(&s1).unwrap().module;
        assert!(l.validate());
        assert_eq!(l.dim(), 3);
        let f = c.f(&s1).unwrap();
        let p2 = projective_module(c.gamma(), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(find_isomorphism(&f, &p2, &mut rng, 20).unwrap().is_some());
        let h = c.h(&regular_module(c.gamma())).unwrap().module;
        assert_eq!(h.dim(), 4);
        assert!(is_projective(&h));
    }

    #[test]
    fn formulas_match_generic_induction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for c in contexts() {
            for _ in 0..6 {
                let n = random_module(c.gamma(), &mut rng, 3);
                let l = c.l(&n).unwrap();
                assert!(l.module.validate());
                let generic = c.pair().induce(&n).unwrap().module;
                assert_eq!(generic.dims(), l.module.dims());
                assert!(find_isomorphism(&l.module, &generic, &mut rng, 30).unwrap().is_some());
                let f = c.f(&n).unwrap();
                assert_eq!(f.dims(), c.pair().functor_f(&n).unwrap().dims());
                // e l(N) = N ⊕ F(N) on the nose in this layout.
                assert!(c.e(&l.module).unwrap().same_data(&n.direct_sum(&f).unwrap()));
                assert!(l.map.is_homomorphism(&n, &c.e(&l.module).unwrap()));
                assert!(c.q(&l.module).unwrap().module.same_data(&n));
                assert_eq!(c.f(&f).unwrap().dim(), 0);
            }
        }
    }

    #[test]
    fn counit_and_g() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for c in contexts() {
            for _ in 0..6 {
                let m = random_module(c.lambda(), &mut rng, 3);
                let mu = c.counit(&m).unwrap();
                assert!(mu.map.is_homomorphism(&mu.module, &m));
                assert!(mu.map.is_surjective());
                let g = c.g(&m).unwrap().module;
                assert!(g.validate());
                assert_eq!(g.dim() + m.dim(), mu.module.dim());
                assert_eq!(g.dim(), c.pair().functor_g(&m).unwrap().dim());
                assert_eq!(c.g(&g).unwrap().module.dim(), 0);
                assert!(c.i(&c.e(&m).unwrap()).unwrap().validate());
                assert!(c.e(&c.i(&c.e(&m).unwrap()).unwrap()).unwrap().same_data(&c.e(&m).unwrap()));
            }
            for v in 0..c.lambda().num_vertices() {
                let p = projective_module(c.lambda(), v).unwrap();
                assert!(is_projective(&c.g(&p).unwrap().module));
            }
        }
    }

    #[test]
    fn adjunction_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for c in contexts() {
            for _ in 0..4 {
                let n = random_module(c.gamma(), &mut rng, 2);
                let m = random_module(c.lambda(), &mut rng, 2);
                let left = hom_space(&c.l(&n).unwrap().module, &m).unwrap().len();
                let right = hom_space(&n, &c.e(&m).unwrap()).unwrap().len();
                assert_eq!(left, right);
                let ql = hom_space(&c.q(&m).unwrap().module, &n).unwrap().len();
                let qr = hom_space(&m, &c.i(&n).unwrap()).unwrap().len();
                assert_eq!(ql, qr);
                let lhs = ext_dims(&c.l(&n).unwrap().module, &m, 3).unwrap();
                let rhs = ext_dims(&n, &c.e(&m).unwrap(), 3).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rejects_foreign_modules() {
        let c = context(fixtures::L2, &["a2"]);
        let s = simple_module(c.lambda(), 0).unwrap();
        assert!(matches!(c.l(&s), Err(Error::ContextMismatch)));
    }
}
