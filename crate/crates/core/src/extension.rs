//! Restriction, inflation and tensor induction along a subalgebra `B ⊆ A` that
//! shares `A`'s vertices and whose generators are generators of `A`.
//!
//! `N ⊗_B A` is built as `⊕_v (e_v A)^{dim N_v}` modulo `nh ⊗ 1 - n ⊗ h` for the
//! generators `h` of `B`. This is slow but assumes nothing about `A` beyond the
//! subalgebra, so it also serves as an oracle for faster formulas.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{same_algebra, Alg, ModuleMap, ProjectiveSum, Representation};

#[derive(Clone, Debug)]
pub struct AlgebraPair<K: Field> {
    sub: Alg<K>,
    sup: Alg<K>,
    /// Generator of `sup` equal to each generator of `sub`.
    gen_map: Vec<usize>,
}

/// `N ⊗_B A` together with the unit `N -> (N ⊗_B A)|_B`.
#[derive(Clone, Debug)]
pub struct Induced<K: Field> {
    pub module: Representation<K>,
    pub unit: ModuleMap<K>,
    /// The free module `⊕_v (e_v A)^{dim N_v}` and the projection onto the tensor product.
    pub free: ProjectiveSum<K>,
    pub projection: ModuleMap<K>,
    /// Relations inside the free module.
    pub relations: Vec<Subspace<K>>,
    /// `(vertex, basis vector of N_v)` of each free summand.
    summand_vertex: Vec<(usize, usize)>,
}

impl<K: Field> AlgebraPair<K> {
    pub fn new(sub: Alg<K>, sup: Alg<K>, gen_map: Vec<usize>) -> Result<Self, Error> {
        let ok = sub.num_vertices() == sup.num_vertices()
            && gen_map.len() == sub.num_generators()
            && gen_map.iter().zip(sub.generators()).all(|(&h, &b)| {
                h < sup.num_generators() && {
                    let (x, y) = (&sub.basis()[b], &sup.basis()[sup.generators()[h]]);
                    x.source == y.source && x.target == y.target
                }
            });
        if !ok {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraPair { sub, sup, gen_map })
    }

    pub fn sub(&self) -> &Alg<K> {
        &self.sub
    }
    pub fn sup(&self) -> &Alg<K> {
        &self.sup
    }

    /// The opposite pair `B^op ⊆ A^op`.
    pub fn opposite(&self, sub_op: Alg<K>, sup_op: Alg<K>) -> Result<Self, Error> {
        AlgebraPair::new(sub_op, sup_op, self.gen_map.clone())
    }

    /// Enveloping pair `B^env ⊆ A^env` for enveloping algebras built by
    /// [`crate::algebra::enveloping_algebra`].
    pub fn enveloping(&self, sub_env: Alg<K>, sup_env: Alg<K>) -> Result<Self, Error> {
        let n = self.sub.num_vertices();
        let (gs, ga) = (self.sub.num_generators(), self.sup.num_generators());
        let mut gen_map = vec![0; 2 * gs * n];
        for (g, &h) in self.gen_map.iter().enumerate() {
            for v in 0..n {
                gen_map[g * n + v] = h * n + v;
                gen_map[gs * n + v * gs + g] = ga * n + v * ga + h;
            }
        }
        AlgebraPair::new(sub_env, sup_env, gen_map)
    }

    fn check(&self, m: &Representation<K>, over_sup: bool) -> Result<(), Error> {
        let alg = if over_sup { &self.sup } else { &self.sub };
        if same_algebra(m.algebra(), alg) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `M|_B`: keep the actions of `B`'s generators.
    pub fn restrict(&self, m: &Representation<K>) -> Result<Representation<K>, Error> {
        self.check(m, true)?;
        let maps = self.gen_map.iter().map(|&h| m.generator_matrix(h).clone()).collect();
        Representation::from_parts(self.sub.clone(), m.dims().to_vec(), maps)
    }

    /// `N` over `A`, generators outside `B` acting by zero. Only meaningful when
    /// those generators span the kernel of a retraction `A -> B`.
    pub fn inflate(&self, n: &Representation<K>) -> Result<Representation<K>, Error> {
        self.check(n, false)?;
        let mut out = Representation::with_dims(&self.sup, n.dims().to_vec());
        let mut maps = out.generator_matrices().to_vec();
        for (g, &h) in self.gen_map.iter().enumerate() {
            maps[h] = n.generator_matrix(g).clone();
        }
        out = Representation::from_parts(self.sup.clone(), n.dims().to_vec(), maps)?;
        Ok(out)
    }

    /// `N ⊗_B A`.
    pub fn induce(&self, n: &Representation<K>) -> Result<Induced<K>, Error> {
        self.check(n, false)?;
        let k = n.field();
        let sup = &self.sup;
        let mut summands = Vec::new();
        let mut summand_of = Vec::new();
        let mut summand_vertex = Vec::new();
        for (v, &d) in n.dims().iter().enumerate() {
            summand_of.push((summands.len()..summands.len() + d).collect::<Vec<_>>());
            summands.extend(core::iter::repeat(v).take(d));
            summand_vertex.extend((0..d).map(|r| (v, r)));
        }
        let free = ProjectiveSum::new(sup, summands);
        let t = &free.module;
        let pos = |j: usize, b: usize| free.position(j, b).expect("basis element lies in the summand");
        let mut gens = Vec::new();
        for (g, &gb) in self.sub.generators().iter().enumerate() {
            let (s, tv) = (self.sub.basis()[gb].source, self.sub.basis()[gb].target);
            let hb = sup.generators()[self.gen_map[g]];
            let a = n.generator_matrix(g);
            for r in 0..n.dims()[s] {
                let mut z = t.zero_vector();
                for c in 0..n.dims()[tv] {
                    z[pos(summand_of[tv][c], sup.idempotent(tv))] = a.get(r, c).clone();
                }
                let p = pos(summand_of[s][r], hb);
                z[p] = k.sub(&z[p], &k.one());
                gens.push(z);
            }
        }
        let rel = t.generated_submodule(&gens);
        let (module, projection) = t.quotient(&rel);
        let unit = ModuleMap {
            blocks: (0..n.dims().len())
                .map(|v| {
                    let off = t.offset(v);
                    let rows = summand_of[v]
                        .iter()
                        .map(|&j| projection.blocks[v].row(pos(j, sup.idempotent(v)) - off).to_vec())
                        .collect();
                    Matrix::from_rows(k, module.dims()[v], rows)
                })
                .collect(),
        };
        Ok(Induced {
            module,
            unit,
            free,
            projection,
            relations: rel,
            summand_vertex,
        })
    }

    /// `μ_M: (M|_B) ⊗_B A -> M`, `m ⊗ a |-> m a`, with the induced module it starts from.
    pub fn counit(&self, m: &Representation<K>) -> Result<(Induced<K>, ModuleMap<K>), Error> {
        let ind = self.induce(&self.restrict(m)?)?;
        let k = m.field();
        let acts = m.actions();
        let free = &ind.free;
        // Quotient basis vectors are the classes of the non-pivot free positions.
        let blocks = (0..m.dims().len())
            .map(|w| {
                let off = free.module.offset(w);
                let rows = ind.relations[w]
                    .non_pivots()
                    .into_iter()
                    .map(|i| {
                        let (j, b) = free.positions[off + i];
                        let (_, r) = ind.summand_vertex[j];
                        acts[b].row(r).to_vec()
                    })
                    .collect();
                Matrix::from_rows(k, m.dims()[w], rows)
            })
            .collect();
        Ok((ind, ModuleMap { blocks }))
    }

    /// `F(N) = (N ⊗_B A)|_B / N`, the cokernel of the unit.
    pub fn functor_f(&self, n: &Representation<K>) -> Result<Representation<K>, Error> {
        let ind = self.induce(n)?;
        let el = self.restrict(&ind.module)?;
        el.quotient(&ind.unit.image_subspaces()).0.rebase(&self.sub)
    }

    /// `G(M) = ker μ_M` over `A`.
    pub fn functor_g(&self, m: &Representation<K>) -> Result<Representation<K>, Error> {
        let (ind, mu) = self.counit(m)?;
        Ok(ind.module.submodule(&mu.kernel_subspaces()).0)
    }
}

