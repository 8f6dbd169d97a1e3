use proptest::prelude::*;

use parhiggs::components::{count_components, CountMode, GroupDescriptor};
use parhiggs::exact::{Rational, Z2Matrix};
use parhiggs::orbifold::{
    square_root_types, vline_degree, vline_tensor, z2_character_count, z2_character_enumerate, VLineBundle,
};
use parhiggs::parbun::{
    par_direct_sum, par_dual, par_tensor_line, pardeg, residue_class, ParabolicBundle, ParabolicFlag,
    ParabolicLineBundle, ResidueClass,
};
use parhiggs::stability::{
    alpha_stability_check_gl, relative_degree, stability_verdict, toledo, CoordinateFiltration, DecomposableHiggsModel,
    SpTripleModel,
};
use parhiggs::vcoh::{mv_ranks, v_cohomology_ranks, MVPieces, VCohMode};
use parhiggs::MarkedSurface;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn surface() -> impl Strategy<Value = MarkedSurface> {
    (0u32..=3, 0usize..=4).prop_map(|(g, s)| MarkedSurface::with_order_two(g, s))
}

fn hyperbolic_surface() -> impl Strategy<Value = MarkedSurface> {
    surface().prop_filter("hyperbolic", |s| s.is_hyperbolic())
}

/// Weights with denominator 4 so sums stay readable.
fn weight() -> impl Strategy<Value = Rational> {
    (0i64..4).prop_map(|k| Rational::new(k, 4))
}

fn line_on(surf: &MarkedSurface) -> impl Strategy<Value = ParabolicLineBundle> {
    let labels: Vec<String> = surf.labels().map(str::to_string).collect();
    (-8i64..=8, prop::collection::vec(weight(), labels.len())).prop_map(move |(d, ws)| {
        let weights = labels.iter().cloned().zip(ws).filter(|(_, w)| !w.is_zero()).collect();
        ParabolicLineBundle::new(d, weights).unwrap()
    })
}

fn bundle_on(surf: &MarkedSurface) -> impl Strategy<Value = ParabolicBundle> {
    let labels: Vec<String> = surf.labels().map(str::to_string).collect();
    (1u32..=4).prop_flat_map(move |rank| {
        let labels = labels.clone();
        (-8i64..=8, prop::collection::vec(prop::collection::vec(weight(), rank as usize), labels.len())).prop_map(
            move |(degree, dirs)| {
                let flags = labels
                    .iter()
                    .zip(dirs)
                    .map(|(x, ws)| (x.clone(), ParabolicFlag::from_directions(&ws).unwrap()))
                    .collect();
                ParabolicBundle { rank, degree, flags }
            },
        )
    })
}

fn z2_matrix() -> impl Strategy<Value = Z2Matrix> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(0u8..2, c), r).prop_map(move |rows| Z2Matrix::from_rows(rows, c).unwrap())
    })
}

fn rows_of(m: &Z2Matrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

/// Random decomposable model with up to `max` summands.
fn model(max: usize) -> impl Strategy<Value = DecomposableHiggsModel> {
    (hyperbolic_surface(), 1usize..=max).prop_flat_map(|(surf, n)| {
        let lines = prop::collection::vec(line_on(&surf), n);
        let arrows = prop::collection::vec((0..n, 0..n), 0..=n * 2);
        (Just(surf), lines, arrows).prop_map(|(surf, lines, arrows)| {
            let arrows: Vec<_> = arrows.into_iter().filter(|(i, j)| i != j).collect();
            DecomposableHiggsModel::new(surf, lines, arrows).unwrap()
        })
    })
}

fn coordinate_filtration(n: usize) -> impl Strategy<Value = CoordinateFiltration> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n - 1), 1i64..5).prop_map(
        move |(perm, cuts, step)| {
            let mut ends: Vec<usize> = (1..n).filter(|&k| cuts[k - 1]).collect();
            ends.push(n);
            let steps: Vec<Vec<usize>> = ends.iter().map(|&e| perm[..e].to_vec()).collect();
            let weights = (0..steps.len()).map(|i| Rational::new(i as i64 * step - 3, 2)).collect();
            CoordinateFiltration::new(steps, weights)
        },
    )
}

/// `λ` of the first step containing `k`.
fn coordinate_weight(f: &CoordinateFiltration, k: usize) -> Rational {
    let i = f.steps.iter().position(|s| s.contains(&k)).unwrap();
    f.weights[i].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_add_sub_roundtrip(a in rational(), b in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) - b, a);
    }

    #[test]
    fn z2_rank_bounded_and_row_invariant(m in z2_matrix(), i in 0usize..6, j in 0usize..6) {
        let r = m.rank();
        prop_assert!(r <= m.rows().min(m.cols()));
        let (i, j) = (i % m.rows(), j % m.rows());
        let mut rows = rows_of(&m);
        rows.swap(i, j);
        prop_assert_eq!(Z2Matrix::from_rows(rows.clone(), m.cols()).unwrap().rank(), r);
        if i != j {
            let src = rows[j].clone();
            for (a, b) in rows[i].iter_mut().zip(src) {
                *a ^= b;
            }
            prop_assert_eq!(Z2Matrix::from_rows(rows, m.cols()).unwrap().rank(), r);
        }
    }

    #[test]
    fn z2_solution_set_size(m in z2_matrix(), seed in any::<u64>()) {
        let b: Vec<u8> = (0..m.rows()).map(|k| ((seed >> k) & 1) as u8).collect();
        let sols = m.solution_set(&b).unwrap();
        prop_assert!(sols.is_empty() || sols.len() == 1 << (m.cols() - m.rank()));
        for x in &sols {
            prop_assert_eq!(&m.mul_vec(x).unwrap(), &b);
        }
    }

    #[test]
    fn h0_twisted_power_increasing(surf in hyperbolic_surface(), m in 1u32..8) {
        prop_assert!(surf.h0_twisted_power(m + 1).unwrap() > surf.h0_twisted_power(m).unwrap());
    }

    #[test]
    fn pardeg_dual_tensor_sum((surf, a, b, l) in surface().prop_flat_map(|s| {
        (Just(s.clone()), bundle_on(&s), bundle_on(&s), line_on(&s))
    })) {
        let pa = pardeg(&a, &surf).unwrap();
        prop_assert_eq!(pardeg(&par_dual(&a), &surf).unwrap(), -pa.clone());
        let t = par_tensor_line(&a, &l, &surf).unwrap();
        let expect = pa.clone() + Rational::integer(a.rank as i64) * l.pardeg(&surf).unwrap();
        prop_assert_eq!(pardeg(&t, &surf).unwrap(), expect);
        let sum = par_direct_sum(&a, &b, &surf).unwrap();
        prop_assert_eq!(pardeg(&sum, &surf).unwrap(), pa + pardeg(&b, &surf).unwrap());
    }

    #[test]
    fn strongly_parabolic_residues_are_nilpotent(
        (steps, pattern) in (1usize..5).prop_flat_map(|r| (Just(r), prop::collection::vec(prop::collection::vec(any::<bool>(), r), r)))
    ) {
        let flag = ParabolicFlag::new(vec![1; steps], (0..steps).map(|k| Rational::new(k as i64, steps as i64)).collect()).unwrap();
        if residue_class(&flag, &pattern).unwrap() == ResidueClass::StronglyParabolic {
            // boolean matrix power pattern^steps must vanish
            let mut power = pattern.clone();
            for _ in 1..steps {
                power = (0..steps)
                    .map(|i| (0..steps).map(|j| (0..steps).any(|k| power[i][k] && pattern[k][j])).collect())
                    .collect();
            }
            prop_assert!(power.iter().flatten().all(|&x| !x));
        }
    }

    #[test]
    fn alpha_check_matches_verdict(m in model(4)) {
        let semistable = stability_verdict(&m).verdict.is_semistable();
        prop_assert_eq!(alpha_stability_check_gl(&m, &m.parslope()).semistable, semistable);
    }

    #[test]
    fn relative_degree_is_trace_pairing((n, a, b) in (1usize..5).prop_flat_map(|n| (Just(n), coordinate_filtration(n), coordinate_filtration(n)))) {
        let (wa, wb) = (a.to_weighted(n).unwrap(), b.to_weighted(n).unwrap());
        let ab = relative_degree(&wa, &wb).unwrap();
        prop_assert_eq!(&ab, &relative_degree(&wb, &wa).unwrap());
        let trace: Rational = (0..n).map(|k| coordinate_weight(&a, k) * coordinate_weight(&b, k)).sum();
        prop_assert_eq!(ab, trace);
    }

    #[test]
    fn toledo_duality((surf, v, beta, gamma) in hyperbolic_surface().prop_flat_map(|s| {
        let lines = prop::collection::vec(line_on(&s), 1..4);
        (Just(s), lines).prop_flat_map(|(s, v)| {
            let n = v.len();
            (Just(s), Just(v), prop::collection::vec((0..n, 0..n), 0..3), prop::collection::vec((0..n, 0..n), 0..3))
        })
    })) {
        let n = v.len() as i64;
        let t = SpTripleModel::new(surf.clone(), v.clone(), beta.clone(), gamma.clone()).unwrap();
        let tau = toledo(&t);
        prop_assert_eq!(toledo(&t.dual_triple()), -tau.clone());
        // (V^∨ ⊗ ξ, γ, β) with ξ = O(D): each summand gains pardeg s
        let xi = ParabolicLineBundle::xi(&surf);
        let twisted: Vec<_> = v.iter().map(|l| l.dual().tensor(&xi)).collect();
        let tw = SpTripleModel::new(surf.clone(), twisted, gamma, beta).unwrap();
        prop_assert_eq!(toledo(&tw), -tau + Rational::integer(n * surf.s() as i64));
    }

    #[test]
    fn vline_degree_is_additive((surf, a, b) in (0u32..=3, prop::collection::vec(2u32..=5, 0..4)).prop_flat_map(|(g, orders)| {
        let surf = MarkedSurface::with_orders(g, &orders);
        let bundle = {
            let orders = orders.clone();
            (-10i64..=10, prop::collection::vec(0u32..5, orders.len())).prop_map(move |(d, rs)| {
                let iso = rs.iter().zip(&orders).enumerate().map(|(i, (r, k))| (format!("x{}", i + 1), r % k)).collect();
                VLineBundle::new(d, iso)
            })
        };
        (Just(surf), bundle.clone(), bundle)
    })) {
        let ab = vline_tensor(&a, &b, &surf).unwrap();
        prop_assert_eq!(
            vline_degree(&ab, &surf).unwrap(),
            vline_degree(&a, &surf).unwrap() + vline_degree(&b, &surf).unwrap()
        );
    }

    #[test]
    fn square_roots_square_back(surf in surface(), d in -12i64..12) {
        let l = VLineBundle::pullback(d);
        match square_root_types(&l, &surf) {
            Ok(roots) => {
                for r in &roots.types {
                    let sq = vline_tensor(r, r, &surf).unwrap();
                    prop_assert_eq!(sq.desing, l.desing);
                    prop_assert!(sq.isotropy.values().all(|&b| b == 0));
                }
            }
            Err(e) => prop_assert!(surf.s() == 0 && d % 2 != 0, "{e}"),
        }
    }

    #[test]
    fn characters_exist_iff_sigma_even(surf in surface(), mask in any::<u8>()) {
        let s = surf.s();
        let sigma: Vec<u8> = (0..s).map(|i| (mask >> i) & 1).collect();
        let found = z2_character_enumerate(&surf).unwrap().iter().any(|c| c.sigma == sigma);
        prop_assert_eq!(found, sigma.iter().map(|&x| x as u32).sum::<u32>() % 2 == 0);
    }

    #[test]
    fn mv_euler_characteristic(v1 in prop::array::uniform3(0usize..4), v2 in prop::array::uniform3(0usize..4),
                               v12 in prop::array::uniform2(0usize..4), picks in prop::array::uniform2(0usize..8)) {
        // degree-2 restriction is onto, so v12[2] <= v1[2] + v2[2]
        let v12 = [v12[0], v12[1], (v1[2] + v2[2]).min(2)];
        let r0 = picks[0] % ((v1[0] + v2[0]).min(v12[0]) + 1);
        let r1 = picks[1] % ((v1[1] + v2[1]).min(v12[1]) + 1);
        let p = MVPieces { v1, v2, v12, restriction_ranks: [r0, r1, v12[2]] };
        let h = mv_ranks(&p).unwrap();
        let chi = |x: [usize; 3]| x[0] as i64 - x[1] as i64 + x[2] as i64;
        prop_assert_eq!(chi(h), chi(v1) + chi(v2) - chi(v12));
    }
}

#[test]
fn character_count_matches_enumeration_and_h1() {
    for g in 0..=3 {
        for s in 0..=6 {
            let surf = MarkedSurface::with_order_two(g, s);
            let count = z2_character_count(&surf).unwrap();
            assert_eq!(count, z2_character_enumerate(&surf).unwrap().len() as u128);
            if surf.is_hyperbolic() {
                let h1 = v_cohomology_ranks(g, s, VCohMode::Order2).unwrap().h1;
                assert_eq!(count, 1u128 << h1, "({g},{s})");
            }
        }
    }
}

fn grid() -> impl Iterator<Item = (u32, usize)> {
    (0..=3u32).flat_map(|g| (1..=4usize).map(move |s| (g, s))).filter(|&(g, s)| 2 * g as i64 - 2 + s as i64 > 0)
}

#[test]
fn enumerated_totals_match_closed_forms() {
    let groups = [
        GroupDescriptor::Sp2nR { n: 1 },
        GroupDescriptor::Sp2nR { n: 2 },
        GroupDescriptor::Sp2nR { n: 3 },
        GroupDescriptor::SUnn { n: 1 },
        GroupDescriptor::SUnn { n: 3 },
        GroupDescriptor::SOStar2n { n: 4 },
        GroupDescriptor::SO02n { n: 3 },
        GroupDescriptor::SO02n { n: 5 },
        GroupDescriptor::E7Minus25,
    ];
    for (g, s) in grid() {
        for group in &groups {
            let r = count_components(group, g, s, &CountMode::MaxUnion).unwrap();
            assert!(r.matches, "{} ({g},{s}) max_union", r.group);
            // the Sp(4,R) case sum and the printed total agree symbolically
            let case_sum: u128 = r.cases.iter().map(|c| c.closed_form).sum();
            assert_eq!(case_sum, r.total_closed_form, "{} ({g},{s})", r.group);
        }
        let alphas = [vec![0u8; s], std::iter::once(1u8).chain(std::iter::repeat(0).take(s - 1)).collect()];
        for alpha in alphas {
            for group in &groups[..6] {
                let r = count_components(group, g, s, &CountMode::FixedAlpha { alpha: alpha.clone() }).unwrap();
                assert!(r.matches, "{} ({g},{s}) α={alpha:?}", r.group);
            }
            let so = count_components(&groups[6], g, s, &CountMode::FixedAlpha { alpha: alpha.clone() }).unwrap();
            assert!(!so.matches && so.discrepancy.is_some(), "({g},{s}) α={alpha:?}");
            assert_eq!(so.total_enumerated.unwrap() + 1, so.total_closed_form);
        }
    }
}

#[test]
fn punctured_count_independent_of_rank() {
    for (g, s) in grid() {
        let counts: Vec<u128> = (1..=4)
            .map(|n| count_components(&GroupDescriptor::Sp2nR { n }, g, s, &CountMode::Punctured).unwrap().total_closed_form)
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "({g},{s}): {counts:?}");
        assert_eq!(counts[0], 1u128 << (2 * g as usize + s - 1));
    }
}

#[test]
fn odd_alpha_emptiness_matches_root_parity() {
    // a square root of K(D)^2 with residues ρ exists iff |ρ| is even
    for (g, s) in grid() {
        let surf = MarkedSurface::with_order_two(g, s);
        let kd2 = VLineBundle::pullback(2 * surf.deg_kd());
        let roots = square_root_types(&kd2, &surf).unwrap();
        for mask in 0u32..1 << s {
            let alpha: Vec<u8> = (0..s).map(|i| ((mask >> i) & 1) as u8).collect();
            let has_root = roots.types.iter().any(|t| {
                surf.points.iter().zip(&alpha).all(|(p, &a)| t.residue(&p.label) == a as u32)
            });
            let r = count_components(&GroupDescriptor::Sp2nR { n: 1 }, g, s, &CountMode::FixedAlpha { alpha: alpha.clone() }).unwrap();
            assert_eq!(r.empty_moduli, !has_root, "({g},{s}) α={alpha:?}");
        }
    }
}

#[test]
fn full_flag_sparadim_identity() {
    use parhiggs::dimension::{dim_strongly_parabolic_gl, full_flags};
    for n in 1..=6u32 {
        for (g, s) in grid() {
            let d = dim_strongly_parabolic_gl(n, g, s, &full_flags(n, s)).unwrap();
            let (n, g, s) = (n as i64, g as i64, s as i64);
            assert_eq!(d, n * n * (2 * g - 2) + s * n * (n - 1) + 2);
        }
    }
}

#[test]
fn catalog_dimension_identity() {
    for e in parhiggs::dimension::catalog_entries(6) {
        let sum: i64 = e.exponents.iter().map(|&m| m as i64).sum();
        let expect = if e.is_complex { 2 * (e.rank as i64 + 2 * sum) } else { e.rank as i64 + 2 * sum };
        assert_eq!(e.real_dimension, expect, "{}", e.name);
        assert!(e.check_exponents());
    }
}

#[test]
fn s_zero_reduces_to_closed_surface_formulas() {
    use parhiggs::dimension::{dim_parabolic_gl, dim_strongly_parabolic_gl, lie_catalog, teichmuller_dimension};
    for g in 2..=4u32 {
        for n in 1..=4u32 {
            let gi = g as i64;
            let nn = (n * n) as i64;
            assert_eq!(dim_parabolic_gl(n, g, 0).unwrap(), (2 * gi - 2) * nn + 1);
            assert_eq!(dim_strongly_parabolic_gl(n, g, 0, &[]).unwrap(), 2 * (gi - 1) * nn + 2);
        }
        let sp6 = lie_catalog("Sp(6,R)").unwrap();
        assert_eq!(teichmuller_dimension(&sp6, g, 0, None).unwrap().real_dimension, Some(2 * (g as i64 - 1) * 21));
    }
}
