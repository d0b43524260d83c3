//! Values checked against computations that share no code with the library:
//! path counting for monomial relations and hand-derived tables.

use std::sync::Arc;

use arrowkernel_core::algebra::DEFAULT_DEGREE_CAP;
use arrowkernel_core::cleft::CleftContext;
use arrowkernel_core::fixtures;
use arrowkernel_core::ideal::{arrow_set_removable, resolve_arrows, Removal, RefusalReason};
use arrowkernel_core::module::simple_module;
use arrowkernel_core::resolution::{ext_dims, DimBound, regular_injective_dims};
use arrowkernel_core::{assemble_algebra, opposite_algebra, parse_presentation, FiniteDimAlgebra, PrimeField, QuiverPresentation};

/// The family with `n` parallel arrows `1 -> 2` closing a 3-cycle.
fn lambda_n(n: usize) -> String {
    let mut s = String::from("field gf 7\nquiver\n  vertices 1 2 3\n");
    for i in 1..=n {
        s.push_str(&format!("  arrow a{i} : 1 -> 2\n"));
    }
    s.push_str("  arrow b : 2 -> 3\n  arrow g : 3 -> 1\nrelations\n  a1*b\n  b*g\n  g*a1\n");
    s
}

fn assemble(text: &str) -> Arc<FiniteDimAlgebra<PrimeField>> {
    let p = parse_presentation(text).unwrap();
    let k = PrimeField::new(7).unwrap();
    Arc::new(assemble_algebra(&p, &k, DEFAULT_DEGREE_CAP).unwrap())
}

/// Number of paths avoiding every relation as a contiguous subword, for monomial relations.
fn monomial_path_count(p: &QuiverPresentation) -> usize {
    let arrows = p.quiver.arrows();
    let forbidden: Vec<Vec<usize>> = p
        .relations
        .iter()
        .map(|r| {
            assert_eq!(r.terms.len(), 1, "monomial relations only");
            r.terms[0].1.arrows.clone()
        })
        .collect();
    let alive = |w: &[usize]| !forbidden.iter().any(|f| w.windows(f.len()).any(|x| x == &f[..]));
    let mut count = p.quiver.vertices().len();
    let mut layer: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    while !layer.is_empty() {
        layer.retain(|w| alive(w));
        count += layer.len();
        layer = layer
            .iter()
            .flat_map(|w| {
                let end = arrows[*w.last().unwrap()].target;
                (0..arrows.len()).filter(move |&a| arrows[a].source == end).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
        assert!(count < 10_000, "path count does not terminate");
    }
    count
}

#[test]
fn family_dimensions() {
    for n in 1..=3 {
        let text = lambda_n(n);
        let p = parse_presentation(&text).unwrap();
        assert_eq!(monomial_path_count(&p), 4 * n + 2);
        assert_eq!(assemble(&text).dim(), 4 * n + 2);
    }
}

#[test]
fn monomial_fixtures_match_path_count() {
    for text in [fixtures::K1, fixtures::A2, fixtures::H4, fixtures::C3, fixtures::L1, fixtures::L2, fixtures::L3] {
        let p = parse_presentation(text).unwrap();
        assert_eq!(assemble(text).dim(), monomial_path_count(&p));
    }
}

#[test]
fn commuting_loops_dimension() {
    // e1, e2, a, b, c, ab = ba, bc: a² = b² = ac = 0 leave exactly these.
    let a = assemble(fixtures::XU);
    assert_eq!(a.dim(), 7);
    let labels: Vec<&str> = a.basis().iter().map(|b| b.label.as_str()).collect();
    assert_eq!(labels, ["e1", "e2", "a", "b", "c", "a*b", "b*c"]);
}

fn certify(a: &Arc<FiniteDimAlgebra<PrimeField>>, names: &[&str]) -> Removal {
    let t = resolve_arrows(a.origin().unwrap(), names).unwrap();
    arrow_set_removable(a, &t, DEFAULT_DEGREE_CAP).unwrap()
}

#[test]
fn removal_decisions() {
    for n in 2..=3 {
        let a = assemble(&lambda_n(n));
        let names: Vec<String> = (2..=n).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let cert = certify(&a, &refs);
        let c = cert.certificate().expect("certified");
        // Γe_1 = {e1, g}, e_2Γ = {e2, b}: each removed arrow contributes 2·2.
        assert_eq!(c.dim_p, 4 * (n - 1));
        assert!(matches!(
            certify(&a, &["a1"]),
            Removal::Refused(r) if matches!(r.reason, RefusalReason::Occurrence { .. })
        ));
    }
    let xu = assemble(fixtures::XU);
    assert!(matches!(certify(&xu, &["c"]), Removal::Refused(r) if matches!(r.reason, RefusalReason::Occurrence { .. })));
    let h4 = assemble(fixtures::H4);
    match certify(&h4, &["a", "b"]) {
        Removal::Refused(r) => match r.reason {
            RefusalReason::Hom { witness, .. } => assert_eq!(witness, "x"),
            other => panic!("unexpected reason {other:?}"),
        },
        Removal::Certified(_) => panic!("a and b cannot be removed together"),
    }
    assert!(certify(&h4, &["a"]).certificate().is_some());
    assert!(certify(&assemble(fixtures::C3), &["a"]).certificate().is_some());
}

#[test]
fn first_extension_sharpness() {
    // Ext^1(S_1, S_2) counts arrows 1 -> 2: n over Λ_n, one over Γ = Λ_1.
    for n in 2..=3 {
        let lam = assemble(&lambda_n(n));
        let names: Vec<String> = (2..=n).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let cert = certify(&lam, &refs).certificate().unwrap().clone();
        let ctx = CleftContext::new(lam.clone(), cert, DEFAULT_DEGREE_CAP).unwrap();
        let (s1, s2) = (simple_module(&lam, 0).unwrap(), simple_module(&lam, 1).unwrap());
        let over_lambda = ext_dims(&s1, &s2, 8).unwrap();
        let over_gamma = ext_dims(&ctx.e(&s1).unwrap(), &ctx.e(&s2).unwrap(), 8).unwrap();
        assert_eq!((over_lambda[1], over_gamma[1]), (n, 1));
        assert_eq!(over_lambda[2..], over_gamma[2..]);
    }
}

#[test]
fn self_injective_cycle() {
    let l1 = assemble(fixtures::L1);
    let op = Arc::new(opposite_algebra(&l1));
    assert_eq!(regular_injective_dims(&l1, &op, 12).unwrap(), (DimBound::Finite(0), DimBound::Finite(0)));
}
