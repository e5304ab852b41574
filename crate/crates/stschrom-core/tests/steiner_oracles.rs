//! Oracles for Steiner triple systems, shifts, transversals and
//! Steiner surfaces.

use stschrom_core::complex::Classification;
use stschrom_core::gf2d::*;
use stschrom_core::perm::Permutation;
use stschrom_core::steiner::*;

fn pg_quasigroup(d: u32) -> (FieldGF2d, SteinerQuasigroup) {
    let f = FieldGF2d::new(d, None).unwrap();
    let mu = SteinerQuasigroup::from_sts(&projective_sts(&f));
    (f, mu)
}

fn p4_permutation(f: &FieldGF2d) -> Permutation {
    // a X^11 + X^6 + X
    let a = f.generator();
    let mut coeffs = vec![0u32; 11];
    coeffs[0] = 1;
    coeffs[5] = 1;
    coeffs[10] = a;
    eval_permutation_polynomial(f, &FieldPolynomial::new(coeffs)).unwrap()
}

#[test]
fn generators_satisfy_sts_axioms() {
    // construction itself validates pair coverage; also pin counts
    for s in 1..=6 {
        let b = bose(s);
        let n = 3 * (2 * s + 1);
        assert_eq!(b.n(), n);
        assert_eq!(b.triples().len() as u32, n * (n - 1) / 6);
    }
    for d in 2..=7 {
        let f = FieldGF2d::new(d, None).unwrap();
        let p = projective_sts(&f);
        let n = (1u32 << d) - 1;
        assert_eq!(p.n(), n);
        assert_eq!(p.triples().len() as u32, n * (n - 1) / 6);
    }
    for k in 1..=5 {
        let a = affine_sts(k);
        let n = 3u32.pow(k);
        assert_eq!(a.n(), n);
        assert_eq!(a.triples().len() as u32, n * (n - 1) / 6);
    }
}

#[test]
fn quasigroup_axioms() {
    for sts in [bose(2), affine_sts(2), sts7(), projective_sts(&FieldGF2d::new(4, None).unwrap())] {
        let mu = SteinerQuasigroup::from_sts(&sts);
        let n = mu.n();
        for x in 0..n {
            assert_eq!(mu.op(x, x), x);
            for y in 0..n {
                assert_eq!(mu.op(x, y), mu.op(y, x));
                assert_eq!(mu.op(x, mu.op(x, y)), y);
            }
        }
        // round trip through the triple view
        assert_eq!(mu.sts(), sts);
    }
}

#[test]
fn bad_orders_rejected() {
    assert_eq!(
        SteinerTripleSystem::from_labeled(6, &[[1, 2, 3], [4, 5, 6]]).err(),
        Some(SteinerError::BadOrder)
    );
    // 7 points but a pair covered twice
    assert!(matches!(
        SteinerTripleSystem::from_labeled(7, &[[1, 2, 3], [1, 2, 4]]).err(),
        Some(SteinerError::PairDoubleCovered(0, 1))
    ));
    assert!(matches!(
        SteinerTripleSystem::from_labeled(7, &[[1, 2, 3]]).err(),
        Some(SteinerError::PairUncovered(_, _))
    ));
}

#[test]
fn fano_quasigroup_value() {
    // mu(1,2) = 4 in the torus labeling
    let mu = SteinerQuasigroup::from_sts(&sts7());
    assert_eq!(mu.op(0, 1), 3);
}

#[test]
fn bose_two_shape() {
    let b = bose(2);
    assert_eq!(b.n(), 15);
    assert_eq!(b.triples().len(), 35);
    let vertical = b
        .triples()
        .iter()
        .filter(|t| t[0] % 5 == t[1] % 5 && t[1] % 5 == t[2] % 5)
        .count();
    assert_eq!(vertical, 5);
    // slanted triple through (1,0) and (2,0) has third point (4,1):
    // (1+2)/2 = 3*(s+1) = 9 = 4 mod 5
    let mu = SteinerQuasigroup::from_sts(&b);
    assert_eq!(mu.op(1, 2), 4 + 5);
}

#[test]
fn projective_d3_triples() {
    let f = FieldGF2d::new(3, None).unwrap();
    let p = projective_sts(&f);
    let labeled: Vec<[u32; 3]> = p.triples().iter().map(|t| [t[0] + 1, t[1] + 1, t[2] + 1]).collect();
    assert_eq!(
        labeled,
        vec![
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6]
        ]
    );
}

#[test]
fn shift_of_identity_is_identity() {
    for mu in [
        SteinerQuasigroup::from_sts(&bose(2)),
        pg_quasigroup(3).1,
        SteinerQuasigroup::from_sts(&sts7()),
    ] {
        let id = Permutation::identity(mu.n() as usize);
        for x in 0..mu.n() {
            assert!(shift_permutation(&mu, x, &id).unwrap().is_identity());
        }
    }
}

#[test]
fn shift_fixes_base_point() {
    let (f, mu) = pg_quasigroup(4);
    let t = p4_permutation(&f);
    let tv = restrict_zero_fixing(&t).unwrap();
    for x in 0..mu.n() {
        let sigma = shift_permutation(&mu, x, &tv).unwrap();
        assert_eq!(sigma.apply(x), x);
    }
}

#[test]
fn shift_equivariance_under_singer() {
    // sigma(x^a, T^a) = sigma(x, T)^a for a in the symmetry group
    let (f, mu) = pg_quasigroup(3);
    let a = singer_cycle(&f);
    let a_inv = a.inverse();
    let t = restrict_zero_fixing(&monomial_permutation(&f, 3).unwrap()).unwrap();
    let t_conj = a_inv.then(&t).unwrap().then(&a).unwrap();
    for x in 0..mu.n() {
        let lhs = shift_permutation(&mu, a.apply(x), &t_conj).unwrap();
        let rhs = {
            let s = shift_permutation(&mu, x, &t).unwrap();
            a_inv.then(&s).unwrap().then(&a).unwrap()
        };
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn shift_invariance_under_left_symmetry() {
    // sigma(x, aT) = sigma(x, T) for a in Sigma(mu)
    let (f, mu) = pg_quasigroup(3);
    let a = singer_cycle(&f);
    let t = restrict_zero_fixing(&monomial_permutation(&f, 3).unwrap()).unwrap();
    // aT acts as first a, then T
    let at = a.then(&t).unwrap();
    for x in 0..mu.n() {
        assert_eq!(
            shift_permutation(&mu, x, &at).unwrap(),
            shift_permutation(&mu, x, &t).unwrap()
        );
    }
}

#[test]
fn p3_is_orientable_transversal() {
    let (f, mu) = pg_quasigroup(3);
    let p3 = monomial_permutation(&f, 3).unwrap();
    let rep = is_transversal(&mu, &p3).unwrap();
    assert!(rep.is_transversal);
    assert_eq!(rep.m, 3);
    assert!(orientability_of_steiner_surface(&mu, &p3).unwrap().is_some());
    // the same verdict through the explicit shift orientation s+(x) = ax
    let mu_t = mu.conjugate(&restrict_zero_fixing(&p3).unwrap()).unwrap();
    let s_plus = singer_cycle(&f);
    assert!(orientation_from_shift(&mu, &mu_t, &s_plus).unwrap().is_some());
}

#[test]
fn frobenius_is_not_transversal() {
    let (f, mu) = pg_quasigroup(3);
    let x2 = monomial_permutation(&f, 2).unwrap();
    assert!(!is_transversal(&mu, &x2).unwrap().is_transversal);
}

#[test]
fn p4_is_orientable_transversal_with_order_five_symmetry() {
    let (f, mu) = pg_quasigroup(4);
    let p4 = p4_permutation(&f);
    assert!(is_transversal(&mu, &p4).unwrap().is_transversal);
    assert!(orientability_of_steiner_surface(&mu, &p4).unwrap().is_some());
    // multiplication by a^3 has order 5 and preserves both systems
    let a3 = {
        let images: Vec<u32> = (1..16u32).map(|x| f.mul(f.exp(3), x) - 1).collect();
        Permutation::from_images(images).unwrap()
    };
    let mut order = 1;
    let mut acc = a3.clone();
    while !acc.is_identity() {
        acc = acc.then(&a3).unwrap();
        order += 1;
    }
    assert_eq!(order, 5);
    let s = mu.sts();
    let s_t = s.apply(&restrict_zero_fixing(&p4).unwrap()).unwrap();
    assert_eq!(s.apply(&a3).unwrap(), s);
    assert_eq!(s_t.apply(&a3).unwrap(), s_t);
    // explicit orientation shift s+(x) = a^5 x
    let s_plus = {
        let images: Vec<u32> = (1..16u32).map(|x| f.mul(f.exp(5), x) - 1).collect();
        Permutation::from_images(images).unwrap()
    };
    let mu_t = mu.conjugate(&restrict_zero_fixing(&p4).unwrap()).unwrap();
    assert!(orientation_from_shift(&mu, &mu_t, &s_plus).unwrap().is_some());
}

#[test]
fn p5_is_nonorientable_transversal() {
    let (f, mu) = pg_quasigroup(5);
    let p5 = monomial_permutation(&f, 5).unwrap();
    assert!(is_transversal(&mu, &p5).unwrap().is_transversal);
    assert!(orientability_of_steiner_surface(&mu, &p5).unwrap().is_none());
}

#[test]
fn p7_is_nonorientable_transversal() {
    let (f, mu) = pg_quasigroup(7);
    let p7 = monomial_permutation(&f, 7).unwrap();
    assert!(is_transversal(&mu, &p7).unwrap().is_transversal);
    assert!(orientability_of_steiner_surface(&mu, &p7).unwrap().is_none());
}

#[test]
fn bose_transversals() {
    for s in [2, 4] {
        let mu = SteinerQuasigroup::from_sts(&bose(s));
        let t = bose_transversal(s, true).unwrap();
        assert!(is_transversal(&mu, &t).unwrap().is_transversal);
        assert!(orientability_of_steiner_surface(&mu, &t).unwrap().is_some());
        // explicit orientation by the vertical shift u -> u + (0,1)
        let mu_t = mu.conjugate(&t).unwrap();
        assert!(orientation_from_shift(&mu, &mu_t, &bose_vertical_shift(s))
            .unwrap()
            .is_some());
    }
    for s in [1, 2, 3] {
        let mu = SteinerQuasigroup::from_sts(&bose(s));
        let t = bose_transversal(s, false).unwrap();
        assert!(is_transversal(&mu, &t).unwrap().is_transversal);
        assert!(orientability_of_steiner_surface(&mu, &t).unwrap().is_none());
    }
    assert_eq!(bose_transversal(3, true).err(), Some(SteinerError::OddSOrientable));
}

#[test]
fn transversal_check_on_symmetry_orbit_representatives() {
    // the Bose proof checks only the three points (0, y)
    let s = 2;
    let mu = SteinerQuasigroup::from_sts(&bose(s));
    let t = bose_transversal(s, true).unwrap();
    let q = 2 * s + 1;
    let reps: Vec<u32> = (0..3).map(|y| y * q).collect();
    let rep = is_transversal_on(&mu, &t, &reps).unwrap();
    assert!(rep.is_transversal);
    assert_eq!(rep.cycle_structures.len(), 3);
    for (_, lens) in &rep.cycle_structures {
        assert_eq!(lens, &vec![(3 * s + 1) as usize, (3 * s + 1) as usize, 1]);
    }
}

fn surface_and_classification(
    mu: &SteinerQuasigroup,
    t: &Permutation,
) -> (stschrom_core::complex::SimplicialComplex, Classification) {
    let surf = steiner_surface(mu, t).unwrap();
    let class = surf.classify_closed_manifold().unwrap();
    // eq. (12): euler characteristic -n(n-7)/6 for every transversal
    let n = mu.n() as i64;
    assert_eq!(surf.euler_characteristic(), -n * (n - 7) / 6);
    // steiner-module orientability verdict must agree with the
    // facet-propagation verdict of the complex module
    let module_verdict = orientability_of_steiner_surface(mu, t).unwrap().is_some();
    assert_eq!(module_verdict, class.orientable());
    (surf, class)
}

#[test]
fn pg8_surface_is_the_torus() {
    let (f, mu) = pg_quasigroup(3);
    let p3 = monomial_permutation(&f, 3).unwrap();
    let (surf, class) = surface_and_classification(&mu, &p3);
    assert_eq!(surf.f_vector().0, vec![7, 21, 14]);
    match class {
        Classification::Surface(s) => {
            assert!(s.orientable);
            assert_eq!(s.genus, 1);
        }
        _ => panic!("expected surface"),
    }
}

#[test]
fn pg32_surface() {
    let (f, mu) = pg_quasigroup(5);
    let p5 = monomial_permutation(&f, 5).unwrap();
    let (surf, class) = surface_and_classification(&mu, &p5);
    assert_eq!(surf.f_vector().0, vec![31, 465, 310]);
    match class {
        Classification::Surface(s) => {
            assert!(!s.orientable);
            assert_eq!(s.genus, 126);
        }
        _ => panic!("expected surface"),
    }
}

#[test]
fn pg128_surface() {
    let (f, mu) = pg_quasigroup(7);
    let p7 = monomial_permutation(&f, 7).unwrap();
    let (surf, class) = surface_and_classification(&mu, &p7);
    assert_eq!(surf.f_vector().0, vec![127, 8001, 5334]);
    match class {
        Classification::Surface(s) => {
            assert!(!s.orientable);
            assert_eq!(s.genus, 2542);
        }
        _ => panic!("expected surface"),
    }
}

#[test]
fn bose_surfaces() {
    // orientable s=2: genus s(6s-1)/2 = 11
    let mu = SteinerQuasigroup::from_sts(&bose(2));
    let t = bose_transversal(2, true).unwrap();
    let (_, class) = surface_and_classification(&mu, &t);
    match class {
        Classification::Surface(s) => {
            assert!(s.orientable);
            assert_eq!(s.genus, 11);
        }
        _ => panic!("expected surface"),
    }
    // nonorientable s=1: genus s(6s-1) = 5
    let mu = SteinerQuasigroup::from_sts(&bose(1));
    let t = bose_transversal(1, false).unwrap();
    let (_, class) = surface_and_classification(&mu, &t);
    match class {
        Classification::Surface(s) => {
            assert!(!s.orientable);
            assert_eq!(s.genus, 5);
        }
        _ => panic!("expected surface"),
    }
}

#[test]
fn identity_is_not_transversal_and_surface_rejects_it() {
    let (_, mu) = pg_quasigroup(3);
    let id = Permutation::identity(7);
    assert!(!is_transversal(&mu, &id).unwrap().is_transversal);
    assert_eq!(steiner_surface(&mu, &id).err(), Some(SteinerError::NotTransversal));
}

#[test]
fn additive_permutations_never_transversal() {
    // exhaustive for d = 3 and d = 4: no invertible linear map is a
    // transversal (the identity's double coset)
    for d in [3, 4] {
        let (_, mu) = pg_quasigroup(d);
        for g in gl_permutations(d) {
            assert!(!is_transversal(&mu, &g).unwrap().is_transversal);
        }
    }
}

#[test]
fn subfield_stabilizing_permutations_never_transversal() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let (f, mu) = pg_quasigroup(4);
    // GF(4) inside GF(16): {0, 1, a^5, a^10}
    let sub = [1u32, f.exp(5), f.exp(10)];
    let rest: Vec<u32> = (1..16).filter(|x| !sub.contains(x)).collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(42);
    let sub_arrangements = [
        [sub[0], sub[1], sub[2]],
        [sub[0], sub[2], sub[1]],
        [sub[1], sub[0], sub[2]],
        [sub[1], sub[2], sub[0]],
        [sub[2], sub[0], sub[1]],
        [sub[2], sub[1], sub[0]],
    ];
    for arrangement in sub_arrangements {
        for _ in 0..40 {
            let mut rest_images = rest.clone();
            rest_images.shuffle(&mut rng);
            let mut images = vec![0u32; 16];
            for (i, &s) in sub.iter().enumerate() {
                images[s as usize] = arrangement[i];
            }
            for (i, &r) in rest.iter().enumerate() {
                images[r as usize] = rest_images[i];
            }
            let t = Permutation::from_images(images).unwrap();
            assert!(!is_transversal(&mu, &t).unwrap().is_transversal);
        }
    }
}

#[test]
fn pg8_double_coset_census() {
    let reports = enumerate_transversal_cosets_d3();
    assert_eq!(reports.len(), 4);
    let total: usize = reports.iter().map(|r| r.size).sum();
    assert_eq!(total, 5040);
    // identity lies in the first coset found and is not transversal
    assert!(reports[0].representative.is_identity());
    assert!(!reports[0].is_transversal);
    let transversal: Vec<_> = reports.iter().filter(|r| r.is_transversal).collect();
    assert_eq!(transversal.len(), 1);
    assert_eq!(transversal[0].orientable, Some(true));
}

#[test]
fn singer_search_d3_rediscovers_unique_transversal() {
    let f = FieldGF2d::new(3, None).unwrap();
    let classes = singer_normalizer_search(&f).unwrap();
    assert_eq!(classes.len(), 2);
    let total: usize = classes.iter().map(|c| c.class_size).sum();
    assert_eq!(total, 7 * 6);
    let transversal: Vec<_> = classes.iter().filter(|c| c.is_transversal).collect();
    assert_eq!(transversal.len(), 1);
    assert_eq!(transversal[0].orientable, Some(true));
}

#[test]
fn singer_search_d5_two_nonorientable_classes() {
    let f = FieldGF2d::new(5, None).unwrap();
    let classes = singer_normalizer_search(&f).unwrap();
    assert_eq!(classes.len(), 6);
    let total: usize = classes.iter().map(|c| c.class_size).sum();
    assert_eq!(total, 31 * 30);
    let transversal: Vec<_> = classes.iter().filter(|c| c.is_transversal).collect();
    assert_eq!(transversal.len(), 2);
    for c in transversal {
        assert_eq!(c.orientable, Some(false));
    }
}

#[test]
fn singer_search_rejects_composite_order() {
    let f = FieldGF2d::new(4, None).unwrap();
    assert_eq!(
        singer_normalizer_search(&f).err(),
        Some(SteinerError::NotPrimeOrder)
    );
}
