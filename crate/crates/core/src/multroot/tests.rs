use super::*;
use crate::poly::RatPoly;
use crate::ring::{int, Rat};

fn lin(r: i64) -> RatPoly {
    RatPoly::from_ints(&[-r, 1])
}

fn prod(factors: &[(i64, usize)]) -> RatPoly {
    factors.iter().fold(RatPoly::one(), |acc, &(r, m)| acc.mul_ref(&lin(r).pow(m)))
}

fn roots(ms: &MultiplicityStructure<Rat>) -> Vec<(usize, f64)> {
    ms.real_roots.iter().map(|r| (r.multiplicity, r.root.approx())).collect()
}

fn check(p: &RatPoly, ms: &MultiplicityStructure<Rat>) {
    assert_eq!(ms.reconstruct(), *p, "reconstruction for {}", ms.case_tag);
    assert_eq!(ms.degree(), p.degree().unwrap());
    assert!(ms.simple_part.is_squarefree());
    for r in &ms.real_roots {
        assert!(r.root.is_root_of_multiplicity(p, r.multiplicity), "{}", r.root);
        assert!(!r.root.is_root_of_multiplicity(p, r.multiplicity + 1), "{}", r.root);
    }
}

#[test]
fn deg4_cases() {
    let p = prod(&[(5, 4)]);
    let ms = extract_deg4(&p).unwrap();
    assert_eq!(ms.case_tag, "deg4-case1");
    assert_eq!(ms.real_roots[0].root.value(), Some(int(5)));
    check(&p, &ms);

    let p = RatPoly::from_ints(&[2, -7, 9, -5, 1]);
    let ms = extract_deg4(&p).unwrap();
    assert_eq!(ms.case_tag, "deg4-case2");
    assert_eq!(ms.real_roots[0].root.value(), Some(int(1)));
    assert_eq!(ms.simple_closed_forms[0].value(), Some(int(2)));
    check(&p, &ms);

    let p = RatPoly::from_ints(&[-1, 0, 1]).pow(2);
    let ms = extract_deg4(&p).unwrap();
    assert_eq!(ms.case_tag, "deg4-case3");
    assert_eq!(roots(&ms), vec![(2, -1.0), (2, 1.0)]);
    check(&p, &ms);

    let p = RatPoly::from_ints(&[1, 0, 1]).pow(2);
    let ms = extract_deg4(&p).unwrap();
    assert_eq!(ms.case_tag, "deg4-case4");
    assert_eq!(ms.complex_pair_multiplicities(), vec![2]);
    check(&p, &ms);

    let p = lin(3).pow(2).mul_ref(&RatPoly::from_ints(&[1, 0, 1]));
    let ms = extract_deg4(&p).unwrap();
    assert_eq!(ms.case_tag, "deg4-case5");
    assert_eq!(ms.real_roots[0].root.value(), Some(int(3)));
    assert_eq!(ms.simple_part, RatPoly::from_ints(&[1, 0, 1]));
    check(&p, &ms);
}

#[test]
fn deg4_case2_with_zero_triple_root() {
    // T^3 (T - 2): the β = 0 branch gives γ = -a3/a4
    let p = prod(&[(0, 3), (2, 1)]);
    let ms = extract_deg4(&p).unwrap();
    assert_eq!(ms.simple_closed_forms[0].value(), Some(int(2)));
    check(&p, &ms);
}

#[test]
fn deg4_errors() {
    assert_eq!(extract_deg4(&prod(&[(1, 1), (2, 1), (3, 1), (4, 1)])).unwrap_err(), Error::NoMultipleRoot);
    assert!(matches!(extract_deg4(&prod(&[(1, 2), (2, 1)])), Err(Error::DegreeMismatch { .. })));
}

#[test]
fn deg5_cases() {
    let cases: Vec<(RatPoly, &str, Vec<(usize, f64)>)> = vec![
        (prod(&[(2, 5)]), "deg5-1", vec![(5, 2.0)]),
        (prod(&[(1, 4), (3, 1)]), "deg5-2a", vec![(4, 1.0)]),
        (prod(&[(1, 3), (2, 2)]), "deg5-2b", vec![(3, 1.0), (2, 2.0)]),
        (prod(&[(1, 3), (2, 1), (4, 1)]), "deg5-3a", vec![(3, 1.0)]),
        (prod(&[(1, 3)]).mul_ref(&RatPoly::from_ints(&[1, 0, 1])), "deg5-3b", vec![(3, 1.0)]),
        (prod(&[(1, 2), (2, 2), (5, 1)]), "deg5-3c", vec![(2, 1.0), (2, 2.0)]),
        (RatPoly::from_ints(&[2, 0, 1]).pow(2).mul_ref(&lin(-1)), "deg5-3d", vec![]),
        (prod(&[(1, 2), (2, 1), (3, 1), (4, 1)]), "deg5-4a", vec![(2, 1.0)]),
        (prod(&[(1, 2), (2, 1)]).mul_ref(&RatPoly::from_ints(&[1, 0, 1])), "deg5-4b", vec![(2, 1.0)]),
    ];
    for (p, tag, expected) in cases {
        let ms = extract_deg5(&p).unwrap();
        assert_eq!(ms.case_tag, tag);
        assert_eq!(roots(&ms), expected, "{tag}");
        check(&p, &ms);
    }
    let ms = extract_deg5(&prod(&[(1, 4), (3, 1)])).unwrap();
    assert_eq!(ms.simple_closed_forms[0].value(), Some(int(3)));
    let c = |p: &RatPoly| deg5_c_count(p).unwrap();
    assert_eq!(c(&prod(&[(1, 3), (2, 1), (4, 1)])), Some(3));
    assert_eq!(c(&prod(&[(1, 3)]).mul_ref(&RatPoly::from_ints(&[1, 0, 1]))), Some(1));
    assert_eq!(c(&prod(&[(1, 2), (2, 1), (3, 1), (4, 1)])), Some(4));
    assert_eq!(c(&prod(&[(1, 2), (2, 1)]).mul_ref(&RatPoly::from_ints(&[1, 0, 1]))), Some(2));
    assert_eq!(c(&prod(&[(1, 4), (3, 1)])), None);
    let ms = extract_deg5(&prod(&[(1, 2), (2, 2), (5, 1)])).unwrap();
    assert_eq!(ms.simple_closed_forms[0].value(), Some(int(5)));
    let ms = extract_deg5(&RatPoly::from_ints(&[2, 0, 1]).pow(2).mul_ref(&lin(-1))).unwrap();
    assert_eq!(ms.simple_closed_forms[0].value(), Some(int(-1)));
}

#[test]
fn deg5_zero_denominators() {
    for p in [prod(&[(0, 4), (3, 1)]), prod(&[(0, 3), (2, 2)]), prod(&[(2, 3), (0, 2)]), prod(&[(0, 2), (2, 2), (5, 1)])] {
        let ms = extract_deg5(&p).unwrap();
        check(&p, &ms);
    }
}

#[test]
fn deg67_examples() {
    let p = prod(&[(1, 4), (2, 1), (3, 1)]);
    let ms = extract_deg67(&p).unwrap();
    assert_eq!(roots(&ms), vec![(4, 1.0)]);
    check(&p, &ms);
    let err = extract_deg67(&prod(&[(1, 2), (2, 2), (4, 2)])).unwrap_err();
    assert_eq!(err.kind(), "UnsupportedPattern");
    let p = prod(&[(1, 2), (3, 1)]).mul_ref(&RatPoly::from_ints(&[1, 0, 1]).pow(2));
    assert_eq!(extract_deg67(&p).unwrap_err().kind(), "UnsupportedPattern");
}

#[test]
fn tau_chain_examples() {
    let c = tau_chain(&prod(&[(1, 3)]));
    let degs: Vec<_> = c.iter().map(|t| t.degree().unwrap()).collect();
    assert_eq!(degs, vec![3, 2, 1, 0]);
    assert_eq!(c[1].monic(), prod(&[(1, 2)]));
    let c = tau_chain(&prod(&[(1, 1), (2, 1)]));
    assert_eq!(c.len(), 2);
    let c = tau_chain(&prod(&[(1, 2), (2, 2)]));
    assert_eq!(c[1].monic(), prod(&[(1, 1), (2, 1)]));
}

#[test]
fn general_examples() {
    let p = prod(&[(1, 5), (3, 3), (4, 1)]);
    let ms = extract_general(&p).unwrap();
    assert_eq!(roots(&ms), vec![(5, 1.0), (3, 3.0)]);
    assert_eq!(ms.simple_part, lin(4));
    check(&p, &ms);

    let p = RatPoly::from_ints(&[1, 0, 1]).pow(3).mul_ref(&lin(1));
    let ms = extract_general(&p).unwrap();
    assert!(ms.real_roots.is_empty());
    assert_eq!(ms.complex_pair_multiplicities(), vec![3]);
    assert_eq!(ms.simple_part, lin(1));
    check(&p, &ms);

    assert_eq!(
        extract_general(&prod(&[(1, 2), (2, 2), (3, 2)])).unwrap_err().kind(),
        "UnsupportedPattern"
    );
}

#[test]
fn general_complex_classes_only() {
    // (T^2+1)^2 (T^2+4)^2 (T-1): repeated complex multiplicity, no real one
    let p = RatPoly::from_ints(&[1, 0, 1])
        .pow(2)
        .mul_ref(&RatPoly::from_ints(&[4, 0, 1]).pow(2))
        .mul_ref(&lin(1));
    let ms = extract_general(&p).unwrap();
    assert_eq!(ms.complex_pair_multiplicities(), vec![2, 2]);
    check(&p, &ms);
}

mod planted {
    use super::*;
    use proptest::prelude::*;

    /// Planted structure: distinct integer real roots with multiplicities,
    /// and `T^2 + k` complex factors with multiplicities.
    #[derive(Debug, Clone)]
    struct Plant {
        real: Vec<(i64, usize)>,
        complex: Vec<(i64, usize)>,
        lead: i64,
    }

    impl Plant {
        fn poly(&self) -> RatPoly {
            let mut p = RatPoly::constant(int(self.lead));
            for &(r, m) in &self.real {
                p = p.mul_ref(&lin(r).pow(m));
            }
            for &(k, m) in &self.complex {
                p = p.mul_ref(&RatPoly::from_ints(&[k, 0, 1]).pow(m));
            }
            p
        }

        fn degree(&self) -> usize {
            self.real.iter().map(|r| r.1).sum::<usize>() + 2 * self.complex.iter().map(|c| c.1).sum::<usize>()
        }

        /// The conservative reading of the theorem's second hypothesis.
        fn supported(&self) -> bool {
            let real_m: Vec<usize> = self.real.iter().map(|r| r.1).filter(|&m| m > 1).collect();
            let cx_m: Vec<usize> = self.complex.iter().map(|c| c.1).filter(|&m| m > 1).collect();
            real_m.iter().all(|m| real_m.iter().filter(|x| *x == m).count() <= 2 && !cx_m.contains(m))
        }

        fn has_multiple(&self) -> bool {
            self.real.iter().chain(&self.complex).any(|r| r.1 > 1)
        }
    }

    fn plant() -> impl Strategy<Value = Plant> {
        (
            prop::sample::subsequence((-6i64..=6).collect::<Vec<_>>(), 0..=4),
            prop::collection::vec(1usize..=4, 4),
            prop::sample::subsequence(vec![1i64, 2, 3, 5], 0..=2),
            prop::collection::vec(1usize..=3, 2),
            prop::sample::select(vec![-3i64, -1, 1, 2]),
        )
            .prop_map(|(rr, rm, cc, cm, lead)| Plant {
                real: rr.iter().zip(rm).map(|(&r, m)| (r, m)).collect(),
                complex: cc.iter().zip(cm).map(|(&c, m)| (c, m)).collect(),
                lead,
            })
            .prop_filter("degree 4..=9 with a multiple root", |p| {
                (4..=9).contains(&p.degree()) && p.has_multiple()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn planted_structures_are_recovered(pl in plant()) {
            let p = pl.poly();
            match extract(&p) {
                Ok(ms) => {
                    prop_assert_eq!(ms.reconstruct(), p.clone());
                    let mut got: Vec<(i64, usize)> = ms
                        .real_roots
                        .iter()
                        .map(|r| (r.root.approx().round() as i64, r.multiplicity))
                        .collect();
                    got.sort();
                    let mut want: Vec<(i64, usize)> = pl.real.iter().copied().filter(|r| r.1 > 1).collect();
                    want.sort();
                    prop_assert_eq!(got, want);
                    let mut cx = ms.complex_pair_multiplicities();
                    cx.sort();
                    let mut want_cx: Vec<usize> = pl.complex.iter().map(|c| c.1).filter(|&m| m > 1).collect();
                    want_cx.sort();
                    prop_assert_eq!(cx, want_cx);
                    for r in &ms.real_roots {
                        prop_assert!(r.root.is_root_of_multiplicity(&p, r.multiplicity));
                    }
                }
                Err(e) => {
                    prop_assert_eq!(e.kind(), "UnsupportedPattern");
                    prop_assert!(!pl.supported(), "planted {:?} rejected", pl);
                }
            }
        }
    }
}
