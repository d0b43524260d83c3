//! Minimal generators of the relation ideal, and arrow removal.
//!
//! With `J^N ⊆ I` and `D = N + 1`, the space `I / (JI + IJ)` is computed inside
//! `kQ / J^D`, whose elements are combinations of paths of length `1..D`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::algebra::{assemble_algebra, FiniteDimAlgebra};
use crate::error::Error;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::presentation::{relation_text, Quiver, QuiverPresentation, Relation};

/// `I / (JI + IJ)` inside `kQ_{<D}`, over the basis of paths `words`.
#[derive(Clone, Debug)]
pub struct MinimalGeneratorSpace<K: Field> {
    pub degree: usize,
    /// Paths of length `1..degree` in deglex order; coordinates refer to these.
    pub words: Vec<Vec<usize>>,
    pub ideal: Subspace<K>,
    pub boundary: Subspace<K>,
    pub generator_count: usize,
    /// Ideal elements whose classes form a basis of the quotient.
    pub lifted: Vec<Vec<K::Elem>>,
}

/// All paths of length `1..max_len` in deglex order.
pub fn paths_up_to(q: &Quiver, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = (0..q.arrows().len()).map(|a| alloc::vec![a]).collect();
    while !level.is_empty() && level[0].len() < max_len {
        let mut next = Vec::new();
        for w in &level {
            let end = q.arrows()[*w.last().expect("nonempty")].target;
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == end {
                    let mut x = w.clone();
                    x.push(a);
                    next.push(x);
                }
            }
        }
        out.append(&mut level);
        next.sort();
        level = next;
    }
    out
}

impl<K: Field> MinimalGeneratorSpace<K> {
    /// Builds the space at `D = N + 1`.
    pub fn new(lambda: &FiniteDimAlgebra<K>) -> Result<Self, Error> {
        Self::at_degree(lambda, lambda.nilpotency() + 1)
    }

    /// Builds the space at a given truncation degree `D >= N + 1`.
    pub fn at_degree(lambda: &FiniteDimAlgebra<K>, degree: usize) -> Result<Self, Error> {
        let p = lambda.origin().ok_or(Error::NoPresentation)?;
        if degree <= lambda.nilpotency() {
            return Err(Error::CheckFailed(format!(
                "truncation degree {degree} must exceed the nilpotency degree {}",
                lambda.nilpotency()
            )));
        }
        let k = lambda.field();
        let words = paths_up_to(&p.quiver, degree);
        let index: BTreeMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let nf_rows = words
            .iter()
            .map(|w| lambda.path_element(w))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = Matrix::from_rows(k, lambda.dim(), nf_rows).left_kernel();

        let mut boundary = Subspace::zero(k, words.len());
        let arrows = p.quiver.arrows();
        for x in ideal.basis() {
            for (a, arrow) in arrows.iter().enumerate() {
                let mut left = alloc::vec![k.zero(); words.len()];
                let mut right = left.clone();
                for (i, c) in x.iter().enumerate().filter(|(_, c)| !k.is_zero(c)) {
                    let w = &words[i];
                    if arrows[w[0]].source == arrow.target {
                        let mut aw = alloc::vec![a];
                        aw.extend_from_slice(w);
                        if let Some(&j) = index.get(aw.as_slice()) {
                            left[j] = c.clone();
                        }
                    }
                    if arrows[*w.last().expect("nonempty")].target == arrow.source {
                        let mut wa = w.clone();
                        wa.push(a);
                        if let Some(&j) = index.get(wa.as_slice()) {
                            right[j] = c.clone();
                        }
                    }
                }
                boundary.insert(left);
                boundary.insert(right);
            }
        }
        let generator_count = ideal.dim() - boundary.dim();
        let lifted = greedy_lift(&ideal, &boundary);
        Ok(MinimalGeneratorSpace {
            degree,
            words,
            ideal,
            boundary,
            generator_count,
            lifted,
        })
    }

    /// Ideal elements avoiding every arrow in `arrows`.
    pub fn free_part(&self, arrows: &[usize]) -> Result<Subspace<K>, Error> {
        let k = self.ideal.field();
        let free: Vec<Vec<K::Elem>> = self
            .words
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.iter().any(|a| arrows.contains(a)))
            .map(|(i, _)| {
                let mut e = alloc::vec![k.zero(); self.words.len()];
                e[i] = k.one();
                e
            })
            .collect();
        let span = Subspace::from_vectors(k, self.words.len(), free);
        self.ideal.intersection(&span)
    }

    /// How many generator classes cannot be reached by elements avoiding `arrows`,
    /// together with a lifted basis drawn from the avoiding elements.
    pub fn occurrence(&self, arrows: &[usize]) -> Result<(usize, Vec<Vec<K::Elem>>), Error> {
        let free = self.free_part(arrows)?;
        let reach = free.sum(&self.boundary)?;
        let deficit = self.ideal.dim() - reach.dim();
        Ok((deficit, greedy_lift(&free, &self.boundary)))
    }

    /// Writes a vector over `words` as a relation with integer coefficients.
    pub fn to_relation(&self, q: &Quiver, v: &[K::Elem]) -> Result<Relation, Error> {
        let k = self.ideal.field();
        let mut ratios = Vec::new();
        for (i, c) in v.iter().enumerate().filter(|(_, c)| !k.is_zero(c)) {
            let (n, d) = k
                .to_ratio(c)
                .ok_or_else(|| Error::CheckFailed("relation coefficient overflows i64".into()))?;
            ratios.push((i, BigInt::from(n), BigInt::from(d)));
        }
        let lcm = ratios.iter().fold(BigInt::one(), |l, (_, _, d)| l.lcm(d));
        let mut terms = Vec::new();
        for (i, n, d) in ratios {
            let c = (n * &lcm / d)
                .to_i64()
                .ok_or_else(|| Error::CheckFailed("relation coefficient overflows i64".into()))?;
            let path = q.path(&self.words[i]).expect("words are paths");
            terms.push((c, path));
        }
        Ok(Relation { terms })
    }
}

/// Rows of `rref(space)` that are independent modulo `boundary`, taken greedily.
fn greedy_lift<K: Field>(space: &Subspace<K>, boundary: &Subspace<K>) -> Vec<Vec<K::Elem>> {
    let mut picked = boundary.clone();
    space
        .basis()
        .iter()
        .filter(|row| picked.insert((*row).clone()))
        .cloned()
        .collect()
}

pub fn resolve_arrows(p: &QuiverPresentation, names: &[&str]) -> Result<Vec<usize>, Error> {
    if names.is_empty() {
        return Err(Error::EmptyArrowSet);
    }
    let mut out = Vec::new();
    for name in names {
        let a = p
            .quiver
            .arrow_index(name)
            .ok_or_else(|| Error::UnknownArrow(String::from(*name)))?;
        if !out.contains(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Entry `(i, j)` counts basis elements tagged `(target a_j, source a_i)`, i.e.
/// `dim f_j Λ e_i = dim Hom(e_i Λ, f_j Λ)`.
pub fn hom_vanishing_table<K: Field>(lambda: &FiniteDimAlgebra<K>, arrows: &[usize]) -> Result<Vec<Vec<usize>>, Error> {
    let p = lambda.origin().ok_or(Error::NoPresentation)?;
    let qa = p.quiver.arrows();
    if let Some(&bad) = arrows.iter().find(|&&a| a >= qa.len()) {
        return Err(Error::UnknownArrow(format!("#{bad}")));
    }
    Ok(arrows
        .iter()
        .map(|&ai| {
            arrows
                .iter()
                .map(|&aj| lambda.tagged(qa[aj].target, qa[ai].source).len())
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RemovalCertificate {
    pub arrows: Vec<String>,
    #[serde(skip)]
    pub arrow_indices: Vec<usize>,
    /// `(e_i, f_i)`: source and target vertex names of each removed arrow.
    pub ends: Vec<(String, String)>,
    #[serde(skip)]
    pub end_indices: Vec<(usize, usize)>,
    /// Arrow-free relations generating the ideal, in text form.
    pub relations: Vec<String>,
    #[serde(skip)]
    pub relation_data: Vec<Relation>,
    pub generator_count: usize,
    pub hom_table: Vec<Vec<usize>>,
    pub dim_lambda: usize,
    pub dim_gamma: usize,
    pub dim_p: usize,
    #[serde(skip)]
    pub presentation: QuiverPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RefusalReason {
    /// Arrow-free ideal elements miss `deficit` of the `generator_count` generator classes.
    Occurrence { deficit: usize, generator_count: usize },
    /// A nonzero path from `f_j` to `e_i`.
    Hom { from_arrow: String, to_arrow: String, witness: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalRefusal {
    pub arrows: Vec<String>,
    pub reason: RefusalReason,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Removal {
    Certified(RemovalCertificate),
    Refused(RemovalRefusal),
}

impl Removal {
    pub fn certificate(&self) -> Option<&RemovalCertificate> {
        match self {
            Removal::Certified(c) => Some(c),
            Removal::Refused(_) => None,
        }
    }
}

/// Decides whether `arrows` can be removed jointly from `lambda`'s presentation.
pub fn arrow_set_removable<K: Field>(
    lambda: &FiniteDimAlgebra<K>,
    arrows: &[usize],
    degree_cap: usize,
) -> Result<Removal, Error> {
    let p = lambda.origin().ok_or(Error::NoPresentation)?;
    if arrows.is_empty() {
        return Err(Error::EmptyArrowSet);
    }
    let qa = p.quiver.arrows();
    let names: Vec<String> = arrows.iter().map(|&a| qa[a].name.clone()).collect();
    let table = hom_vanishing_table(lambda, arrows)?;
    let space = MinimalGeneratorSpace::new(lambda)?;
    let (deficit, lifted) = space.occurrence(arrows)?;
    if deficit > 0 {
        return Ok(Removal::Refused(RemovalRefusal {
            arrows: names,
            reason: RefusalReason::Occurrence {
                deficit,
                generator_count: space.generator_count,
            },
        }));
    }
    for (i, row) in table.iter().enumerate() {
        for (j, &n) in row.iter().enumerate() {
            if n > 0 {
                let (ai, aj) = (&qa[arrows[i]], &qa[arrows[j]]);
                let w = lambda.tagged(aj.target, ai.source)[0];
                return Ok(Removal::Refused(RemovalRefusal {
                    arrows: names,
                    reason: RefusalReason::Hom {
                        from_arrow: ai.name.clone(),
                        to_arrow: aj.name.clone(),
                        witness: lambda.basis()[w].label.clone(),
                    },
                }));
            }
        }
    }

    let relation_data = lifted
        .iter()
        .map(|v| space.to_relation(&p.quiver, v))
        .collect::<Result<Vec<_>, _>>()?;
    // The lifts must generate I, not just I modulo JI + IJ.
    let regen = QuiverPresentation {
        field: p.field,
        quiver: p.quiver.clone(),
        relations: relation_data.clone(),
    };
    let regen_dim = assemble_algebra(&regen, lambda.field(), degree_cap).map(|a| a.dim());
    if regen_dim != Ok(lambda.dim()) {
        return Err(Error::CheckFailed("arrow-free lifts do not generate the ideal".into()));
    }

    let mut cert = RemovalCertificate {
        arrows: names,
        arrow_indices: arrows.to_vec(),
        ends: arrows
            .iter()
            .map(|&a| {
                let v = p.quiver.vertices();
                (v[qa[a].source].clone(), v[qa[a].target].clone())
            })
            .collect(),
        end_indices: arrows.iter().map(|&a| (qa[a].source, qa[a].target)).collect(),
        relations: relation_data.iter().map(|r| relation_text(&p.quiver, r)).collect(),
        relation_data,
        generator_count: space.generator_count,
        hom_table: table,
        dim_lambda: lambda.dim(),
        dim_gamma: 0,
        dim_p: 0,
        presentation: p.clone(),
    };
    let gamma = assemble_algebra(&remove_arrows(p, &cert)?, lambda.field(), degree_cap)?;
    cert.dim_gamma = gamma.dim();
    cert.dim_p = cert
        .end_indices
        .iter()
        .map(|&(e, f)| {
            let ge: usize = (0..gamma.num_vertices()).map(|u| gamma.tagged(u, e).len()).sum();
            let fg: usize = (0..gamma.num_vertices()).map(|u| gamma.tagged(f, u).len()).sum();
            ge * fg
        })
        .sum();
    if cert.dim_lambda != cert.dim_gamma + cert.dim_p {
        return Err(Error::CheckFailed(format!(
            "dim Λ = {} but dim Γ + dim P = {} + {}",
            cert.dim_lambda, cert.dim_gamma, cert.dim_p
        )));
    }
    Ok(Removal::Certified(cert))
}

/// The presentation of `Γ = Λ / ⟨T⟩`: the quiver without `T` and the arrow-free relations.
pub fn remove_arrows(p: &QuiverPresentation, cert: &RemovalCertificate) -> Result<QuiverPresentation, Error> {
    if *p != cert.presentation {
        return Err(Error::CertificateMismatch);
    }
    let qa = p.quiver.arrows();
    let mut new_index = alloc::vec![None; qa.len()];
    let mut arrows = Vec::new();
    for (a, arrow) in qa.iter().enumerate() {
        if !cert.arrow_indices.contains(&a) {
            new_index[a] = Some(arrows.len());
            arrows.push(arrow.clone());
        }
    }
    let quiver = Quiver::new(p.quiver.vertices().to_vec(), arrows)?;
    let relations = cert
        .relation_data
        .iter()
        .map(|r| {
            let terms = r
                .terms
                .iter()
                .map(|(c, path)| {
                    let word: Option<Vec<usize>> = path.arrows.iter().map(|&a| new_index[a]).collect();
                    let word = word.ok_or(Error::CertificateMismatch)?;
                    Ok((*c, quiver.path(&word).ok_or(Error::CertificateMismatch)?))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Relation { terms })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(QuiverPresentation {
        field: p.field,
        quiver,
        relations,
    })
}

/// Basis index in `Λ` of each basis element of `Γ`, matching words through the arrow inclusion.
pub fn gamma_embedding<K: Field>(
    lambda: &FiniteDimAlgebra<K>,
    gamma: &FiniteDimAlgebra<K>,
    cert: &RemovalCertificate,
) -> Result<Vec<usize>, Error> {
    let old: Vec<usize> = (0..cert.presentation.quiver.arrows().len())
        .filter(|a| !cert.arrow_indices.contains(a))
        .collect();
    (0..gamma.dim())
        .map(|b| {
            if gamma.is_idempotent(b) {
                return Ok(lambda.idempotent(gamma.basis()[b].source));
            }
            let w: Vec<usize> = gamma.word(b).iter().map(|&a| old[a]).collect();
            lambda
                .word_basis_index(&w)
                .ok_or_else(|| Error::CheckFailed(format!("{} is not a basis word of Λ", gamma.basis()[b].label)))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialExtensionReport {
    pub dim_lambda: usize,
    pub dim_gamma: usize,
    pub dim_p: usize,
    pub p_basis: Vec<String>,
    pub dimension_identity: bool,
    pub factorization: bool,
    pub p_squared_zero: bool,
    pub gamma_closed: bool,
}

impl TrivialExtensionReport {
    pub fn pass(&self) -> bool {
        self.dimension_identity && self.factorization && self.p_squared_zero && self.gamma_closed
    }
}

/// Checks `Λ = Γ ⊕ P` with `P = ⊕ Γe_i ⊗ f_iΓ` spanned by words `u a_i v`, and `P² = 0`.
pub fn trivial_extension_check<K: Field>(
    lambda: &FiniteDimAlgebra<K>,
    gamma: &FiniteDimAlgebra<K>,
    cert: &RemovalCertificate,
) -> Result<TrivialExtensionReport, Error> {
    let k = lambda.field();
    let emb = gamma_embedding(lambda, gamma, cert)?;
    let in_gamma: Vec<bool> = {
        let mut v = alloc::vec![false; lambda.dim()];
        for &b in &emb {
            v[b] = true;
        }
        v
    };
    let p_idx: Vec<usize> = (0..lambda.dim()).filter(|&b| !in_gamma[b]).collect();

    // Γ-normal words, as Λ arrow words, by (source, target).
    let gamma_words: Vec<(Vec<usize>, usize, usize)> = emb
        .iter()
        .map(|&b| (lambda.word(b).to_vec(), lambda.basis()[b].source, lambda.basis()[b].target))
        .collect();
    let mut factored = alloc::vec![false; lambda.dim()];
    let mut count = 0;
    let mut factorization = true;
    for (&a, &(e, f)) in cert.arrow_indices.iter().zip(&cert.end_indices) {
        for (u, _, ut) in gamma_words.iter().filter(|w| w.2 == e) {
            for (v, vs, _) in gamma_words.iter().filter(|w| w.1 == f) {
                debug_assert!(*ut == e && *vs == f);
                let mut w = u.clone();
                w.push(a);
                w.extend_from_slice(v);
                match lambda.word_basis_index(&w) {
                    Some(b) if !in_gamma[b] && !factored[b] => {
                        factored[b] = true;
                        count += 1;
                    }
                    _ => factorization = false,
                }
            }
        }
    }
    factorization &= count == p_idx.len();
    let p_squared_zero = p_idx
        .iter()
        .all(|&x| p_idx.iter().all(|&y| lambda.mul_basis(x, y).is_empty()));
    let mut gamma_closed = true;
    for i in 0..gamma.dim() {
        for j in 0..gamma.dim() {
            let mut g: Vec<(usize, K::Elem)> = gamma.mul_basis(i, j).into_iter().map(|(t, c)| (emb[t], c)).collect();
            g.sort_by_key(|t| t.0);
            let mut l = lambda.mul_basis(emb[i], emb[j]);
            l.retain(|(_, c)| !k.is_zero(c));
            l.sort_by_key(|t| t.0);
            gamma_closed &= g == l;
        }
    }
    let report = TrivialExtensionReport {
        dim_lambda: lambda.dim(),
        dim_gamma: gamma.dim(),
        dim_p: p_idx.len(),
        p_basis: p_idx.iter().map(|&b| lambda.basis()[b].label.clone()).collect(),
        dimension_identity: lambda.dim() == gamma.dim() + cert.dim_p && cert.dim_p == p_idx.len(),
        factorization,
        p_squared_zero,
        gamma_closed,
    };
    if !report.pass() {
        return Err(Error::CheckFailed(format!("trivial extension check failed: {report:?}")));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub singletons: Vec<String>,
    pub greedy_maximal: Vec<String>,
}

/// Singleton-removable arrows and one greedy maximal removable set in declaration order.
pub fn scan_removable<K: Field>(lambda: &FiniteDimAlgebra<K>, degree_cap: usize) -> Result<ScanReport, Error> {
    let p = lambda.origin().ok_or(Error::NoPresentation)?;
    let qa = p.quiver.arrows();
    let mut singletons = Vec::new();
    let mut greedy: Vec<usize> = Vec::new();
    for a in 0..qa.len() {
        if matches!(arrow_set_removable(lambda, &[a], degree_cap)?, Removal::Certified(_)) {
            singletons.push(qa[a].name.clone());
            let mut trial = greedy.clone();
            trial.push(a);
            if greedy.is_empty() || matches!(arrow_set_removable(lambda, &trial, degree_cap)?, Removal::Certified(_)) {
                greedy = trial;
            }
        }
    }
    Ok(ScanReport {
        singletons,
        greedy_maximal: greedy.iter().map(|&a| qa[a].name.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_DEGREE_CAP;
    use crate::field::{PrimeField, Rationals};
    use crate::fixtures;
    use crate::presentation::{parse_presentation, serialize_presentation};

    fn alg(text: &str) -> FiniteDimAlgebra<PrimeField> {
        assemble_algebra(&parse_presentation(text).unwrap(), &PrimeField::new(7).unwrap(), DEFAULT_DEGREE_CAP).unwrap()
    }

    fn removal(a: &FiniteDimAlgebra<PrimeField>, names: &[&str]) -> Removal {
        let t = resolve_arrows(a.origin().unwrap(), names).unwrap();
        arrow_set_removable(a, &t, DEFAULT_DEGREE_CAP).unwrap()
    }

    #[test]
    fn generator_counts() {
        for (text, g) in [(fixtures::L1, 3), (fixtures::L2, 3), (fixtures::L3, 3), (fixtures::XU, 4), (fixtures::H4, 0), (fixtures::C3, 1)] {
            let a = alg(text);
            let s = MinimalGeneratorSpace::new(&a).unwrap();
            assert_eq!(s.generator_count, g);
            assert_eq!(s.lifted.len(), g);
            assert!(s.ideal.contains(&s.boundary).unwrap());
            let s2 = MinimalGeneratorSpace::at_degree(&a, a.nilpotency() + 2).unwrap();
            assert_eq!(s2.generator_count, g);
        }
    }

    #[test]
    fn hom_tables() {
        let h4 = alg(fixtures::H4);
        assert_eq!(hom_vanishing_table(&h4, &[0, 2]).unwrap(), [[0, 0], [1, 0]]);
        let l3 = alg(fixtures::L3);
        assert_eq!(hom_vanishing_table(&l3, &[1, 2]).unwrap(), [[0, 0], [0, 0]]);
        let xu = alg(fixtures::XU);
        assert!(hom_vanishing_table(&xu, &[0]).unwrap()[0][0] >= 1);
    }

    #[test]
    fn l2_removal_gives_l1() {
        let l2 = alg(fixtures::L2);
        let Removal::Certified(cert) = removal(&l2, &["a2"]) else {
            panic!("a2 should be removable")
        };
        assert_eq!((cert.dim_lambda, cert.dim_gamma, cert.dim_p), (10, 6, 4));
        let gamma = remove_arrows(l2.origin().unwrap(), &cert).unwrap();
        let l1 = parse_presentation(fixtures::L1).unwrap();
        assert_eq!(gamma, l1, "{}", serialize_presentation(&gamma));
        let g = assemble_algebra(&gamma, l2.field(), 64).unwrap();
        let report = trivial_extension_check(&l2, &g, &cert).unwrap();
        assert_eq!(report.p_basis, ["a2", "a2*b", "g*a2", "g*a2*b"]);
    }

    #[test]
    fn l3_removal_gives_l1() {
        let l3 = alg(fixtures::L3);
        let cert = removal(&l3, &["a2", "a3"]).certificate().cloned().unwrap();
        assert_eq!((cert.dim_lambda, cert.dim_gamma), (14, 6));
        let gamma = remove_arrows(l3.origin().unwrap(), &cert).unwrap();
        assert_eq!(gamma, parse_presentation(fixtures::L1).unwrap());
    }

    #[test]
    fn refusals() {
        let l2 = alg(fixtures::L2);
        assert!(matches!(
            removal(&l2, &["a1"]),
            Removal::Refused(RemovalRefusal { reason: RefusalReason::Occurrence { .. }, .. })
        ));
        let xu = alg(fixtures::XU);
        assert_eq!(
            removal(&xu, &["c"]),
            Removal::Refused(RemovalRefusal {
                arrows: alloc::vec!["c".into()],
                reason: RefusalReason::Occurrence { deficit: 1, generator_count: 4 },
            })
        );
        let h4 = alg(fixtures::H4);
        assert_eq!(
            removal(&h4, &["a", "b"]),
            Removal::Refused(RemovalRefusal {
                arrows: alloc::vec!["a".into(), "b".into()],
                reason: RefusalReason::Hom { from_arrow: "b".into(), to_arrow: "a".into(), witness: "x".into() },
            })
        );
        assert!(matches!(removal(&xu, &["a"]), Removal::Refused(_)));
    }

    #[test]
    fn c3_and_h4_certified() {
        let c3 = alg(fixtures::C3);
        let cert = removal(&c3, &["a"]).certificate().cloned().unwrap();
        let g = assemble_algebra(&remove_arrows(c3.origin().unwrap(), &cert).unwrap(), c3.field(), 64).unwrap();
        assert_eq!(g.dim(), 5);
        let r = trivial_extension_check(&c3, &g, &cert).unwrap();
        assert_eq!(r.p_basis, ["a", "a*b", "c*a", "c*a*b"]);
        let h4 = alg(fixtures::H4);
        let cert = removal(&h4, &["a"]).certificate().cloned().unwrap();
        assert_eq!((cert.dim_gamma, cert.dim_p), (7, 3));
    }

    #[test]
    fn rational_relations_written_back() {
        let xu = assemble_algebra(&parse_presentation(fixtures::XU_Q).unwrap(), &Rationals, 64).unwrap();
        let s = MinimalGeneratorSpace::new(&xu).unwrap();
        let p = xu.origin().unwrap();
        let texts: Vec<String> = s
            .lifted
            .iter()
            .map(|v| relation_text(&p.quiver, &s.to_relation(&p.quiver, v).unwrap()))
            .collect();
        assert_eq!(texts, ["a*a", "a*b - b*a", "a*c", "b*b"]);
    }

    #[test]
    fn scan_h4() {
        let h4 = alg(fixtures::H4);
        let s = scan_removable(&h4, 64).unwrap();
        // x: 2 -> 3 qualifies too: I = 0 and there is no path from 3 to 2.
        assert_eq!(s.singletons, ["a", "x", "b"]);
        assert_eq!(s.greedy_maximal, ["a"]);
        let xu = alg(fixtures::XU);
        assert!(scan_removable(&xu, 64).unwrap().singletons.is_empty());
    }

    #[test]
    fn certificate_mismatch() {
        let l2 = alg(fixtures::L2);
        let cert = removal(&l2, &["a2"]).certificate().cloned().unwrap();
        let l3 = parse_presentation(fixtures::L3).unwrap();
        assert_eq!(remove_arrows(&l3, &cert).unwrap_err(), Error::CertificateMismatch);
    }
}
