//! Finite-dimensional elementary algebras with a basis of paths.
//!
//! Every algebra carries a set of *generators* (arrows, for path algebras) and
//! writes each basis element as a word in them. Modules only store generator
//! actions; everything else is recovered through these words.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::Subspace;
use crate::presentation::QuiverPresentation;
use crate::reduction::{complete_reduction_system, ReductionSystem};

pub const DEFAULT_DEGREE_CAP: usize = 64;
pub const DEFAULT_ENV_CAP: usize = 10_000;

/// Sparse vector over basis indices.
pub type Sparse<K> = Vec<(usize, <K as Field>::Elem)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Product<K: Field> {
    /// Dense `dim * dim` table of sparse products.
    Table(Vec<Sparse<K>>),
    /// `A^op ⊗ A`, multiplied through the factor.
    Enveloping(Arc<FiniteDimAlgebra<K>>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDimAlgebra<K: Field> {
    field: K,
    vertices: Vec<String>,
    basis: Vec<BasisElement>,
    words: Vec<Vec<usize>>,
    idempotents: Vec<usize>,
    generators: Vec<usize>,
    product: Product<K>,
    /// `right_gen[b * ngens + g]` = basis element `b` times generator `g`.
    right_gen: Vec<Sparse<K>>,
    nilpotency: usize,
    origin: Option<QuiverPresentation>,
    reduction: Option<ReductionSystem<K>>,
    word_index: BTreeMap<Vec<usize>, usize>,
}

/// Builds `kQ/I` over `field`; `field.spec()` should match the presentation.
pub fn assemble_algebra<K: Field>(
    p: &QuiverPresentation,
    field: &K,
    degree_cap: usize,
) -> Result<FiniteDimAlgebra<K>, Error> {
    let k = field.clone();
    let sys = complete_reduction_system(p, field, degree_cap)?;
    let q = &p.quiver;
    let n = q.vertices().len();
    let mut basis = Vec::new();
    let mut words = Vec::new();
    for v in 0..n {
        basis.push(BasisElement {
            label: q.path_label(&q.trivial_path(v)),
            source: v,
            target: v,
        });
        words.push(Vec::new());
    }
    let mut word_index = BTreeMap::new();
    for w in sys.normal_words() {
        let path = q.path(w).expect("normal words are paths");
        word_index.insert(w.clone(), basis.len());
        basis.push(BasisElement {
            label: q.path_label(&path),
            source: path.source,
            target: path.target,
        });
        words.push(w.clone());
    }
    let dim = basis.len();
    let generators: Vec<usize> = (0..q.arrows().len())
        .map(|a| {
            word_index
                .get(&vec![a])
                .copied()
                .ok_or(Error::CheckFailed(format!("arrow {} vanishes", q.arrows()[a].name)))
        })
        .collect::<Result<_, _>>()?;

    let to_sparse = |poly: Vec<(Vec<usize>, K::Elem)>| -> Sparse<K> {
        let mut s: Sparse<K> = poly.into_iter().map(|(w, c)| (word_index[&w], c)).collect();
        s.sort_by_key(|t| t.0);
        s
    };
    let mut table = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let entry = if basis[i].target != basis[j].source {
                Vec::new()
            } else if words[i].is_empty() {
                vec![(j, k.one())]
            } else if words[j].is_empty() {
                vec![(i, k.one())]
            } else {
                let mut w = words[i].clone();
                w.extend_from_slice(&words[j]);
                to_sparse(sys.normal_form_word(&w))
            };
            table.push(entry);
        }
    }
    let mut a = FiniteDimAlgebra {
        field: k,
        vertices: q.vertices().to_vec(),
        basis,
        words,
        idempotents: (0..n).collect(),
        generators,
        product: Product::Table(table),
        right_gen: Vec::new(),
        nilpotency: 0,
        origin: Some(p.clone()),
        reduction: Some(sys),
        word_index,
    };
    a.fill_right_gen();
    a.nilpotency = a.compute_nilpotency()?;
    Ok(a)
}

/// `A^op`: same labels, reversed tags, words and products.
pub fn opposite_algebra<K: Field>(a: &FiniteDimAlgebra<K>) -> FiniteDimAlgebra<K> {
    let dim = a.dim();
    let mut table = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            table.push(a.mul_basis(j, i));
        }
    }
    let words: Vec<Vec<usize>> = a
        .words
        .iter()
        .map(|w| w.iter().rev().copied().collect())
        .collect();
    let mut op = FiniteDimAlgebra {
        field: a.field.clone(),
        vertices: a.vertices.clone(),
        basis: a
            .basis
            .iter()
            .map(|b| BasisElement {
                label: b.label.clone(),
                source: b.target,
                target: b.source,
            })
            .collect(),
        word_index: words.iter().enumerate().filter(|(_, w)| !w.is_empty()).map(|(i, w)| (w.clone(), i)).collect(),
        words,
        idempotents: a.idempotents.clone(),
        generators: a.generators.clone(),
        product: Product::Table(table),
        right_gen: Vec::new(),
        nilpotency: a.nilpotency,
        origin: None,
        reduction: None,
    };
    op.fill_right_gen();
    op
}

/// `A^env = A^op ⊗ A` with basis `x_i ⊗ y_j` at index `i * dim A + j` and
/// product `(x1 ⊗ x2)(y1 ⊗ y2) = (y1 x1) ⊗ (x2 y2)`. Right modules over it are
/// `A`-bimodules.
pub fn enveloping_algebra<K: Field>(
    a: &Arc<FiniteDimAlgebra<K>>,
    cap: usize,
) -> Result<FiniteDimAlgebra<K>, Error> {
    let d = a.dim();
    if d * d > cap {
        return Err(Error::DimensionCapExceeded { required: d * d, cap });
    }
    let n = a.vertices.len();
    let ng = a.generators.len();
    let vertices = (0..n * n)
        .map(|uv| format!("{}|{}", a.vertices[uv / n], a.vertices[uv % n]))
        .collect();
    let mut basis = Vec::with_capacity(d * d);
    let mut words = Vec::with_capacity(d * d);
    for (i, x) in a.basis.iter().enumerate() {
        for (j, y) in a.basis.iter().enumerate() {
            basis.push(BasisElement {
                label: format!("{}|{}", x.label, y.label),
                source: x.target * n + y.source,
                target: x.source * n + y.target,
            });
            let mut w: Vec<usize> = a.words[i].iter().rev().map(|&g| g * n + y.source).collect();
            w.extend(a.words[j].iter().map(|&g| ng * n + x.source * ng + g));
            words.push(w);
        }
    }
    let mut generators = vec![0; 2 * ng * n];
    for (g, &gb) in a.generators.iter().enumerate() {
        for v in 0..n {
            generators[g * n + v] = gb * d + a.idempotents[v];
            generators[ng * n + v * ng + g] = a.idempotents[v] * d + gb;
        }
    }
    let idempotents = (0..n * n).map(|uv| a.idempotents[uv / n] * d + a.idempotents[uv % n]).collect();
    let mut env = FiniteDimAlgebra {
        field: a.field.clone(),
        vertices,
        basis,
        words,
        idempotents,
        generators,
        product: Product::Enveloping(a.clone()),
        right_gen: Vec::new(),
        nilpotency: 2 * a.nilpotency - 1,
        origin: None,
        reduction: None,
        word_index: BTreeMap::new(),
    };
    env.fill_right_gen();
    Ok(env)
}

impl<K: Field> FiniteDimAlgebra<K> {
    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn is_idempotent(&self, b: usize) -> bool {
        self.words[b].is_empty()
    }
    /// Basis index of each generator.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }
    /// Generator word of a basis element (empty for idempotents).
    pub fn word(&self, b: usize) -> &[usize] {
        &self.words[b]
    }
    /// Least `N` with `J^N = 0`.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }
    pub fn origin(&self) -> Option<&QuiverPresentation> {
        self.origin.as_ref()
    }
    pub fn reduction(&self) -> Option<&ReductionSystem<K>> {
        self.reduction.as_ref()
    }

    /// Basis index of a normal path word, for algebras assembled from a presentation.
    pub fn word_basis_index(&self, w: &[usize]) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    /// Basis indices tagged `(u, v)`, i.e. a basis of `e_u A e_v`.
    pub fn tagged(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].source == u && self.basis[b].target == v)
            .collect()
    }

    pub fn zero(&self) -> Vec<K::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit_vector(&self, b: usize) -> Vec<K::Elem> {
        let mut v = self.zero();
        v[b] = self.field.one();
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Sparse<K> {
        match &self.product {
            Product::Table(t) => t[i * self.dim() + j].clone(),
            Product::Enveloping(a) => {
                if self.basis[i].target != self.basis[j].source {
                    return Vec::new();
                }
                let d = a.dim();
                let (x1, x2, y1, y2) = (i / d, i % d, j / d, j % d);
                let left = a.mul_basis(y1, x1);
                let right = a.mul_basis(x2, y2);
                let k = &self.field;
                let mut out = Vec::with_capacity(left.len() * right.len());
                for (l, c) in &left {
                    for (r, e) in &right {
                        out.push((l * d + r, k.mul(c, e)));
                    }
                }
                out
            }
        }
    }

    /// Basis element `b` times generator `g`.
    pub fn mul_generator(&self, b: usize, g: usize) -> &Sparse<K> {
        &self.right_gen[b * self.generators.len() + g]
    }

    pub fn mul(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !k.is_zero(a)) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !k.is_zero(b)) {
                let ab = k.mul(a, b);
                for (t, c) in self.mul_basis(i, j) {
                    out[t] = k.add(&out[t], &k.mul(&ab, &c));
                }
            }
        }
        out
    }

    /// `x * g` for an element `x` and generator `g`.
    pub fn mul_by_generator(&self, x: &[K::Elem], g: usize) -> Vec<K::Elem> {
        let k = &self.field;
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !k.is_zero(a)) {
            for (t, c) in self.mul_generator(i, g) {
                out[*t] = k.add(&out[*t], &k.mul(a, c));
            }
        }
        out
    }

    /// Span of the non-idempotent basis elements.
    pub fn radical(&self) -> Subspace<K> {
        let vs = (0..self.dim())
            .filter(|&b| !self.is_idempotent(b))
            .map(|b| self.unit_vector(b))
            .collect();
        Subspace::from_vectors(&self.field, self.dim(), vs)
    }

    /// Coordinates of the normal form of a path word (nonempty).
    pub fn path_element(&self, w: &[usize]) -> Result<Vec<K::Elem>, Error> {
        let sys = self.reduction.as_ref().ok_or(Error::NoPresentation)?;
        let mut v = self.zero();
        for (nw, c) in sys.normal_form_word(w) {
            let b = self.word_index.get(&nw).ok_or(Error::CheckFailed(format!("word {nw:?} not in basis")))?;
            v[*b] = c;
        }
        Ok(v)
    }

    fn fill_right_gen(&mut self) {
        let mut rg = Vec::with_capacity(self.dim() * self.generators.len());
        for b in 0..self.dim() {
            for &g in &self.generators {
                rg.push(self.mul_basis(b, g));
            }
        }
        self.right_gen = rg;
    }

    /// Powers of the span of non-idempotents, `J^{k+1} = J^k · generators`.
    fn compute_nilpotency(&self) -> Result<usize, Error> {
        let k = &self.field;
        let mut power = self.radical();
        let mut n = 1;
        while power.dim() > 0 {
            let mut next = Subspace::zero(k, self.dim());
            for v in power.basis() {
                for g in 0..self.generators.len() {
                    next.insert(self.mul_by_generator(v, g));
                }
            }
            if next.dim() == power.dim() {
                return Err(Error::NotAdmissible);
            }
            power = next;
            n += 1;
        }
        Ok(n)
    }

    /// Exhaustive associativity test on basis triples.
    pub fn check_associativity(&self) -> bool {
        let k = &self.field;
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for l in 0..d {
                    let mut left = self.zero();
                    for (t, c) in &ij {
                        for (s, e) in self.mul_basis(*t, l) {
                            left[s] = k.add(&left[s], &k.mul(c, &e));
                        }
                    }
                    let mut right = self.zero();
                    for (t, c) in self.mul_basis(j, l) {
                        for (s, e) in self.mul_basis(i, t) {
                            right[s] = k.add(&right[s], &k.mul(&c, &e));
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Same basis, tags and multiplication, ignoring any originating presentation.
    pub fn same_structure(&self, other: &Self) -> bool {
        let d = self.dim();
        self.field == other.field
            && self.vertices == other.vertices
            && self.basis == other.basis
            && self.idempotents == other.idempotents
            && self.generators == other.generators
            && self.words == other.words
            && (0..d).all(|i| (0..d).all(|j| self.mul_basis(i, j) == other.mul_basis(i, j)))
    }

    /// Dense matrix of right multiplication by `x` on `A` (row `b` = `b x`).
    pub fn right_mult_rows(&self, x: &[K::Elem]) -> Vec<Vec<K::Elem>> {
        (0..self.dim()).map(|b| self.mul(&self.unit_vector(b), x)).collect()
    }

    /// Adds `c * (b * g)` into `acc`.
    pub fn axpy_generator(&self, acc: &mut [K::Elem], c: &K::Elem, b: usize, g: usize) {
        let k = &self.field;
        for (t, e) in self.mul_generator(b, g) {
            acc[*t] = k.add(&acc[*t], &k.mul(c, e));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::fixtures;
    use crate::presentation::parse_presentation;

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn alg(text: &str) -> FiniteDimAlgebra<PrimeField> {
        assemble_algebra(&parse_presentation(text).unwrap(), &gf7(), DEFAULT_DEGREE_CAP).unwrap()
    }

    fn labels<K: Field>(a: &FiniteDimAlgebra<K>) -> Vec<&str> {
        a.basis().iter().map(|b| b.label.as_str()).collect()
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg(fixtures::K1).dim(), 1);
        assert_eq!(alg(fixtures::L1).dim(), 6);
        assert_eq!(alg(fixtures::L2).dim(), 10);
        assert_eq!(alg(fixtures::L3).dim(), 14);
        assert_eq!(alg(fixtures::C3).dim(), 9);
        assert_eq!(labels(&alg(fixtures::XU)), ["e1", "e2", "a", "b", "c", "a*b", "b*c"]);
    }

    #[test]
    fn nilpotency_degrees() {
        assert_eq!(alg(fixtures::K1).nilpotency(), 1);
        assert_eq!(alg(fixtures::L1).nilpotency(), 2);
        assert_eq!(alg(fixtures::L2).nilpotency(), 4);
        assert_eq!(alg(fixtures::H4).nilpotency(), 4);
    }

    #[test]
    fn non_nilpotent_relations_rejected() {
        let text = "field gf 5\nquiver\n vertices 1\n arrow x : 1 -> 1\nrelations\n x*x - x*x*x\n";
        let p = parse_presentation(text).unwrap();
        let r = assemble_algebra(&p, &PrimeField::new(5).unwrap(), 64);
        assert_eq!(r.unwrap_err(), Error::NotAdmissible);
    }

    #[test]
    fn associativity_on_fixtures() {
        for (name, text) in fixtures::ALL.iter().filter(|(n, _)| !n.ends_with("_Q")) {
            assert!(alg(text).check_associativity(), "{name}");
        }
        let q = assemble_algebra(&parse_presentation(fixtures::XU_Q).unwrap(), &Rationals, 64).unwrap();
        assert!(q.check_associativity());
    }

    #[test]
    fn xu_commutes() {
        let a = alg(fixtures::XU);
        let (ea, eb) = (a.unit_vector(2), a.unit_vector(3));
        assert_eq!(a.mul(&ea, &eb), a.mul(&eb, &ea));
        assert_eq!(a.mul(&ea, &eb), a.unit_vector(5));
    }

    #[test]
    fn opposite_is_involutive() {
        let l1 = alg(fixtures::L1);
        let op = opposite_algebra(&l1);
        assert!(op.check_associativity());
        assert!(opposite_algebra(&op).same_structure(&l1));
        let a2 = opposite_algebra(&alg(fixtures::A2));
        let x = &a2.basis()[2];
        assert_eq!((x.label.as_str(), x.source, x.target), ("x", 1, 0));
    }

    #[test]
    fn opposite_product_is_reversed() {
        let xu = alg(fixtures::XU);
        let op = opposite_algebra(&xu);
        // b^op a^op = (ab)^op
        assert_eq!(op.mul_basis(3, 2), xu.mul_basis(2, 3));
        // c^op b^op = (bc)^op
        assert_eq!(op.mul_basis(4, 3), vec![(6, 1)]);
    }

    #[test]
    fn enveloping_l1() {
        let l1 = Arc::new(alg(fixtures::L1));
        let env = enveloping_algebra(&l1, DEFAULT_ENV_CAP).unwrap();
        assert_eq!(env.dim(), 36);
        assert_eq!(env.idempotents().len(), 9);
        assert!(env.check_associativity());
        let k = env.field().clone();
        let ids = env.idempotents();
        let mut sum = env.zero();
        for &e in ids {
            for &f in ids {
                let ef = env.mul_basis(e, f);
                if e == f {
                    assert_eq!(ef, vec![(e, 1)]);
                } else {
                    assert!(ef.is_empty());
                }
            }
            sum[e] = k.one();
        }
        // 1 acts as the identity.
        for b in 0..env.dim() {
            assert_eq!(env.mul(&sum, &env.unit_vector(b)), env.unit_vector(b));
        }
        // e_u A^env e_u is the field: the idempotents are primitive.
        for (uv, &e) in ids.iter().enumerate() {
            assert_eq!(env.tagged(uv, uv), vec![e]);
        }
    }

    #[test]
    fn enveloping_words_reproduce_basis() {
        let xu = Arc::new(alg(fixtures::XU));
        let env = enveloping_algebra(&xu, DEFAULT_ENV_CAP).unwrap();
        assert_eq!(env.nilpotency(), 2 * xu.nilpotency() - 1);
        for b in 0..env.dim() {
            let w = env.word(b);
            if w.is_empty() {
                assert!(env.idempotents().contains(&b));
                continue;
            }
            let mut x = env.unit_vector(env.generators()[w[0]]);
            for &g in &w[1..] {
                x = env.mul_by_generator(&x, g);
            }
            assert_eq!(x, env.unit_vector(b), "{}", env.basis()[b].label);
        }
    }

    #[test]
    fn enveloping_cap() {
        let l3 = Arc::new(alg(fixtures::L3));
        assert_eq!(
            enveloping_algebra(&l3, 100).unwrap_err(),
            Error::DimensionCapExceeded { required: 196, cap: 100 }
        );
        assert_eq!(enveloping_algebra(&Arc::new(alg(fixtures::K1)), 1).unwrap().dim(), 1);
    }
}
