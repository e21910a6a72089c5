use plueckerlab::arith::{rat, Rational};
use plueckerlab::cli::files::WebFile;
use plueckerlab::congruence::{build_congruence, line_through_point, SkewWeb};
use plueckerlab::fixtures;
use plueckerlab::grassmann::{PluckerVector, QSkew};
use plueckerlab::pde::{is_temple, FluxSystem, TempleVerdict};
use proptest::prelude::*;

fn skew(size: usize) -> impl Strategy<Value = QSkew> {
    prop::collection::vec(-9i64..=9, size * (size - 1) / 2).prop_map(move |upper| {
        let mut rows = vec![vec![0i64; size]; size];
        let mut k = 0;
        for i in 0..size {
            for j in i + 1..size {
                rows[i][j] = upper[k];
                rows[j][i] = -upper[k];
                k += 1;
            }
        }
        QSkew::from_integer_rows(&rows).unwrap()
    })
}

fn point(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-9i64..=9, len).prop_map(|v| v.into_iter().map(rat).collect())
}

fn invertible2() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(-4i64..=4, 4)
        .prop_filter("invertible", |v| v[0] * v[3] != v[1] * v[2])
        .prop_map(|v| vec![vec![rat(v[0]), rat(v[1])], vec![rat(v[2]), rat(v[3])]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squares_to_determinant(a in prop_oneof![skew(4), skew(6), skew(8)]) {
        let pf = a.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, a.determinant());
        prop_assert_eq!(pf, a.pfaffian_by_matchings().unwrap());
    }

    #[test]
    fn joins_satisfy_plucker_relations(p in point(6), q in point(6)) {
        if let Ok(l) = PluckerVector::from_points(&p, &q) {
            prop_assert!(l.is_line());
            prop_assert!(l.relation_values().iter().all(|x| *x == rat(0)));
            prop_assert!(l.contains_point(&p) && l.contains_point(&q));
        }
    }

    #[test]
    fn lines_through_points_lie_in_the_congruence(p in point(5)) {
        let c = build_congruence(&fixtures::generic_p4()).unwrap();
        prop_assume!(p.iter().any(|x| *x != rat(0)) && !c.is_focal(&p));
        let l = line_through_point(&c, &p).unwrap();
        prop_assert!(l.contains_point(&p) && c.contains_line(&l));
    }

    #[test]
    fn web_files_round_trip(seed in 0u64..1000, n in 3usize..=5) {
        let w = SkewWeb::random(n, seed, 7);
        let f = WebFile::from_web(&w, None, None);
        prop_assert_eq!(WebFile::parse(&f.to_json()).unwrap().to_web().unwrap(), w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn temple_verdict_is_affine_invariant(p in invertible2(), q in point(2), samples in prop::collection::vec(point(2), 3)) {
        for (sys, temple) in [(fixtures::wave_flux(), true), (fixtures::curved_flux(), false)] {
            let moved = sys.affine_change(&p, &q).unwrap();
            let images: Vec<Vec<Rational>> = samples.iter().map(|u| FluxSystem::affine_point(&p, &q, u)).collect();
            let a = is_temple(&sys, &samples).unwrap();
            let b = is_temple(&moved, &images).unwrap();
            prop_assert_eq!(a.skipped, b.skipped);
            let kind = |v: &TempleVerdict| std::mem::discriminant(v);
            prop_assert_eq!(kind(&a.verdict), kind(&b.verdict));
            if temple {
                prop_assert_eq!(b.verdict, TempleVerdict::TempleAtSamples);
            }
        }
    }
}
