use std::sync::Arc;

use arrowkernel_core::algebra::DEFAULT_DEGREE_CAP;
use arrowkernel_core::cleft::CleftContext;
use arrowkernel_core::fixtures;
use arrowkernel_core::ideal::{arrow_set_removable, resolve_arrows};
use arrowkernel_core::linalg::subspace_ops;
use arrowkernel_core::module::random_module;
use arrowkernel_core::resolution::is_projective;
use arrowkernel_core::{assemble_algebra, parse_presentation, serialize_presentation, Field, Matrix, PrimeField, Rationals, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gf7_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    proptest::collection::vec(0u32..7, rows * cols).prop_map(move |xs| {
        let k = PrimeField::new(7).unwrap();
        let rows = xs.chunks(cols).map(|c| c.to_vec()).collect();
        Matrix::from_rows(&k, cols, rows)
    })
}

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    proptest::collection::vec(-4i64..5, rows * cols).prop_map(move |xs| {
        let k = Rationals;
        let rows = xs.chunks(cols).map(|c| c.iter().map(|&x| k.from_i64(x)).collect()).collect();
        Matrix::from_rows(&k, cols, rows)
    })
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..7, 1usize..7)
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in dims().prop_flat_map(|(r, c)| gf7_matrix(r, c))) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r);
    }

    #[test]
    fn rank_nullity(m in dims().prop_flat_map(|(r, c)| gf7_matrix(r, c))) {
        prop_assert_eq!(m.rank() + m.nullspace().dim(), m.cols());
        prop_assert_eq!(m.rank() + m.left_kernel().dim(), m.rows());
    }

    #[test]
    fn rank_nullity_over_q(m in dims().prop_flat_map(|(r, c)| q_matrix(r, c))) {
        prop_assert_eq!(m.rank() + m.nullspace().dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn nullspace_is_annihilated(m in dims().prop_flat_map(|(r, c)| gf7_matrix(r, c))) {
        let k = PrimeField::new(7).unwrap();
        for v in m.nullspace().basis() {
            prop_assert!(m.transpose().apply(v).iter().all(|x| k.is_zero(x)));
        }
        for v in m.left_kernel().basis() {
            prop_assert!(m.apply(v).iter().all(|x| k.is_zero(x)));
        }
    }

    #[test]
    fn subspace_dimension_formula(
        (a, b) in (1usize..6).prop_flat_map(|n| (gf7_matrix(3, n), gf7_matrix(3, n)))
    ) {
        let k = PrimeField::new(7).unwrap();
        let u = Subspace::from_vectors(&k, a.cols(), a.row_vecs());
        let w = Subspace::from_vectors(&k, b.cols(), b.row_vecs());
        let ops = subspace_ops(&u, &w).unwrap();
        prop_assert_eq!(ops.sum.dim() + ops.intersection.dim(), u.dim() + w.dim());
        prop_assert!(ops.sum.contains(&u).unwrap() && u.contains(&ops.intersection).unwrap());
    }

    #[test]
    fn monomial_presentations_round_trip(
        arrows in proptest::collection::vec((0usize..3, 0usize..3), 1..5),
        rels in proptest::collection::vec(proptest::collection::vec(0usize..5, 2..4), 0..4),
    ) {
        let mut text = String::from("field gf 5\nquiver\n  vertices u v w\n");
        let names = ["u", "v", "w"];
        for (i, (s, t)) in arrows.iter().enumerate() {
            text.push_str(&format!("  arrow x{i} : {} -> {}\n", names[*s], names[*t]));
        }
        text.push_str("relations\n");
        for r in &rels {
            let w: Vec<usize> = r.iter().map(|&a| a % arrows.len()).collect();
            if w.windows(2).all(|p| arrows[p[0]].1 == arrows[p[1]].0) {
                let word: Vec<String> = w.iter().map(|a| format!("x{a}")).collect();
                text.push_str(&format!("  {}\n", word.join("*")));
            }
        }
        let p = parse_presentation(&text).unwrap();
        let again = parse_presentation(&serialize_presentation(&p)).unwrap();
        prop_assert_eq!(again, p);
    }
}

fn context(text: &str, names: &[&str]) -> CleftContext<PrimeField> {
    let k = PrimeField::new(7).unwrap();
    let lam = Arc::new(assemble_algebra(&parse_presentation(text).unwrap(), &k, DEFAULT_DEGREE_CAP).unwrap());
    let t = resolve_arrows(lam.origin().unwrap(), names).unwrap();
    let cert = arrow_set_removable(&lam, &t, DEFAULT_DEGREE_CAP).unwrap().certificate().unwrap().clone();
    CleftContext::new(lam, cert, DEFAULT_DEGREE_CAP).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cleft_invariants_on_random_modules(seed in any::<u64>(), which in 0usize..3) {
        let ctx = match which {
            0 => context(fixtures::L2, &["a2"]),
            1 => context(fixtures::C3, &["a"]),
            _ => context(fixtures::H4, &["a"]),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = random_module(ctx.gamma(), &mut rng, 3);
        let m = random_module(ctx.lambda(), &mut rng, 3);
        prop_assert!(ctx.e(&ctx.i(&n).unwrap()).unwrap().same_data(&n));
        let l = ctx.l(&n).unwrap().module;
        let f = ctx.f(&n).unwrap();
        prop_assert_eq!(ctx.e(&l).unwrap().dim(), n.dim() + f.dim());
        prop_assert!(ctx.f(&f).unwrap().is_zero());
        let g = ctx.g(&m).unwrap().module;
        prop_assert!(is_projective(&g));
        prop_assert!(ctx.g(&g).unwrap().module.is_zero());
        prop_assert_eq!(ctx.h(&n).unwrap().module.dim(), l.dim() - n.dim());
    }
}
