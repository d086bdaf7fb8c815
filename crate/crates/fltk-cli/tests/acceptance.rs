//! Acceptance gate: one test per shipping criterion, each printing a
//! pass line with its runtime (visible under `--nocapture`) and
//! enforcing its time budget. Every numeric expectation here was
//! computed independently before being frozen.

use std::time::Instant;

use fltk_cli::cat::{check_laws, product_search};
use fltk_cli::eval::Session;
use fltk_cli::parser::parse;
use fltk_cli::printer::{print_fun, print_set};
use fltk_core::category::is_product;
use fltk_core::encodings::{apply_n, ord_decode, ord_encode, pair, unpair};
use fltk_core::hierarchy::{
    count_p, diagonal_exists, enumerate_stage, fevel_of, is_fevel, is_fevel_recursive,
    StageIndex,
};
use fltk_core::modelcheck::{
    chi_clauses_hold, chi_translate, enumerate_flt_models, hierarchy_as_fst,
    hierarchy_as_structure, membership_structure_of, AxiomId, Theory,
};
use fltk_core::translate::{
    is_hereditary_funset, is_hereditary_setfunction, to_fun, to_set,
};
use fltk_core::{BigUint, FunUniverse, HfFun, HfSet, SetUniverse};

/// Runs a criterion body, enforces its budget, prints its pass line.
fn criterion(label: &str, budget_ms: u128, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let ms = start.elapsed().as_millis();
    assert!(
        ms < budget_ms,
        "{label}: FAIL — exceeded the {budget_ms} ms budget ({ms} ms)"
    );
    println!("{label}: PASS ({ms} ms)");
}

fn stage(n: u32) -> StageIndex {
    StageIndex::new(n).expect("stages start at 1")
}

#[test]
fn criterion_01_counting() {
    criterion("criterion 01 counting", 1_000, || {
        let mut u = FunUniverse::new();
        let by_enumeration: Vec<usize> = (1..=3)
            .map(|k| enumerate_stage(&mut u, stage(k)).unwrap().len())
            .collect();
        assert_eq!(by_enumeration, vec![1, 2, 9]);
        for (k, &expected) in (1..=3).zip(&by_enumeration) {
            assert_eq!(count_p(stage(k)).unwrap(), BigUint::from(expected));
        }
        assert_eq!(
            count_p(stage(4)).unwrap(),
            BigUint::from(1_000_000_000u32)
        );
    });
}

#[test]
fn criterion_02_fevel_machinery() {
    criterion("criterion 02 fevel machinery", 10_000, || {
        let mut u = FunUniverse::new();
        let nine = enumerate_stage(&mut u, stage(3)).unwrap();
        assert_eq!(nine.len(), 9);

        // The three fevels as the iterative construction yields them.
        let constructed: Vec<HfFun> = (1..=3)
            .map(|k| {
                if k == 1 {
                    u.null()
                } else {
                    let below = enumerate_stage(&mut u, stage(k - 1)).unwrap();
                    u.funset_of(below)
                }
            })
            .collect();

        // All three characterizations agree on every element.
        let mut fevels = Vec::new();
        for &f in &nine {
            let direct = is_fevel(&mut u, f).unwrap();
            let recursive = is_fevel_recursive(&mut u, f).unwrap();
            let by_construction = constructed.contains(&f);
            assert_eq!(direct, recursive, "characterizations split");
            assert_eq!(direct, by_construction, "construction membership split");
            if direct {
                fevels.push(f);
            }
        }
        assert_eq!(fevels.len(), 3);

        // Linear order under field membership: strict, total, irreflexive.
        u.sort_canonical(&mut fevels);
        for i in 0..3 {
            assert!(!u.fun_in(fevels[i], fevels[i]));
            for j in 0..3 {
                assert_eq!(u.fun_in(fevels[i], fevels[j]), i < j);
            }
        }

        // Every nonempty subset of the fevels has a least element.
        for mask in 1u32..8 {
            let subset: Vec<HfFun> = (0..3)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| fevels[i])
                .collect();
            let least_count = subset
                .iter()
                .filter(|&&m| subset.iter().all(|&x| x == m || u.fun_in(m, x)))
                .count();
            assert_eq!(least_count, 1, "subset mask {mask} lacks a unique least");
        }

        // fevel_of is monotone over all 81 pairs, whichever of the two
        // orders relates them.
        for &f in &nine {
            for &g in &nine {
                let ff = fevel_of(&mut u, f).unwrap();
                let fg = fevel_of(&mut u, g).unwrap();
                if u.fun_subeq(f, g) {
                    assert!(u.fun_subeq(ff, fg), "subfunction monotonicity broke");
                }
                if u.fun_in(f, g) {
                    assert!(
                        ff == fg || u.fun_in(ff, fg),
                        "membership monotonicity broke"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_03_category_laws() {
    criterion("criterion 03 category laws", 1_000, || {
        let mut u = FunUniverse::new();
        let outcome = check_laws(&mut u, stage(3)).unwrap();
        assert_eq!(outcome.arrows, 9);
        assert!(outcome.identity_failures.is_empty(), "identity law failed");
        assert!(outcome.composable_triples > 0, "no composable triples found");
        assert_eq!(outcome.associativity_failures, 0, "associativity failed");
    });
}

#[test]
fn criterion_04_products() {
    criterion("criterion 04 products", 300_000, || {
        for card_a in 0..=2usize {
            for card_b in 0..=2usize {
                let mut u = FunUniverse::new();
                let outcome = product_search(&mut u, card_a, card_b, 5).unwrap();
                // Existence exactly matches max(|A|,|B|) = |A|·|B|:
                // the empty pairing, or either side a singleton. In
                // particular (2,2) admits no cone with apex size <= 5.
                let should_exist =
                    card_a.max(card_b) == card_a * card_b || (card_a, card_b) == (0, 0);
                assert_eq!(
                    !outcome.diagrams.is_empty(),
                    should_exist,
                    "existence wrong at ({card_a},{card_b})"
                );
                for d in &outcome.diagrams {
                    // Re-verify each witness against the bounded
                    // universal mapping property, and pin the apex size.
                    assert!(is_product(
                        &mut u, d.apex, d.to_a, d.to_b, outcome.a, outcome.b,
                        &outcome.universe
                    ));
                    assert_eq!(u.field(d.apex).len(), card_a * card_b);
                }
            }
        }
    });
}

#[test]
fn criterion_05_interpretations() {
    criterion("criterion 05 interpretations", 10_000, || {
        let mut fu = FunUniverse::new();
        let mut su = SetUniverse::new();
        let nine = enumerate_stage(&mut fu, stage(3)).unwrap();

        // I is injective on the nine functions and lands on
        // hereditary-setfunctions.
        let images: Vec<HfSet> =
            nine.iter().map(|&f| to_set(&fu, &mut su, f)).collect();
        let mut distinct: Vec<u32> = images.iter().map(|a| a.id()).collect();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct.len(), nine.len(), "images collide");
        for &a in &images {
            assert!(is_hereditary_setfunction(&su, a));
        }

        // Among all 65536 sets of rank at most 4, the
        // hereditary-setfunctions are exactly the images of the two
        // functions of the second stage.
        let two = enumerate_stage(&mut fu, stage(2)).unwrap();
        let low_images: Vec<HfSet> =
            two.iter().map(|&f| to_set(&fu, &mut su, f)).collect();
        let candidates = su.rank_at_most(4).unwrap();
        assert_eq!(candidates.len(), 65536);
        let hereditary: Vec<HfSet> = candidates
            .iter()
            .copied()
            .filter(|&a| is_hereditary_setfunction(&su, a))
            .collect();
        assert_eq!(hereditary, low_images);

        // Application is simulated through Kuratowski pairs on every
        // triple.
        for &f in &nine {
            let fa = to_set(&fu, &mut su, f);
            for &x in &nine {
                let xa = to_set(&fu, &mut su, x);
                for &y in &nine {
                    let ya = to_set(&fu, &mut su, y);
                    let p = su.kpair(xa, ya);
                    assert_eq!(
                        fu.apply(f, x) == Some(y),
                        su.member(p, fa),
                        "application simulation broke"
                    );
                }
            }
        }

        // J is injective on the sixteen sets of rank at most 3 and
        // lands on hereditary-funsets.
        let sixteen = su.rank_at_most(3).unwrap();
        assert_eq!(sixteen.len(), 16);
        let funs: Vec<HfFun> =
            sixteen.iter().map(|&a| to_fun(&su, &mut fu, a)).collect();
        let mut distinct: Vec<u32> = funs.iter().map(|f| f.id()).collect();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct.len(), sixteen.len(), "images collide");
        for &f in &funs {
            assert!(is_hereditary_funset(&fu, f));
        }

        // Within the nine third-stage functions, the hereditary-funsets
        // are exactly the images of the four sets of rank at most 2.
        let four = su.rank_at_most(2).unwrap();
        assert_eq!(four.len(), 4);
        let low_funs: Vec<HfFun> =
            four.iter().map(|&a| to_fun(&su, &mut fu, a)).collect();
        let hereditary: Vec<HfFun> = nine
            .iter()
            .copied()
            .filter(|&f| is_hereditary_funset(&fu, f))
            .collect();
        assert_eq!(hereditary, low_funs);

        // Membership is simulated through field membership on every
        // pair.
        for (&a, &fa) in sixteen.iter().zip(&funs) {
            for (&b, &fb) in sixteen.iter().zip(&funs) {
                assert_eq!(
                    su.member(a, b),
                    fu.fun_in(fa, fb),
                    "membership simulation broke"
                );
            }
        }
    });
}

#[test]
fn criterion_06_finite_quasi_categoricity() {
    criterion("criterion 06 finite quasi-categoricity", 60_000, || {
        let expected_candidates = [2u64, 81, 262_144];
        let expected_classes = [1usize, 1, 0];
        let expected_models = [1u64, 2, 0];
        for n in 1..=3usize {
            let report = enumerate_flt_models(n).unwrap();
            assert_eq!(report.candidates, expected_candidates[n - 1]);
            assert_eq!(report.classes.len(), expected_classes[n - 1]);
            assert_eq!(report.model_count(), expected_models[n - 1]);
            if n <= 2 {
                let mut u = FunUniverse::new();
                let standard =
                    hierarchy_as_structure(&mut u, stage(n as u32)).unwrap();
                assert!(
                    report.representatives()[0].isomorphic_to(&standard),
                    "size-{n} model class is not the standard stage"
                );
            }
        }
    });
}

#[test]
fn criterion_07_fst_soundness() {
    criterion("criterion 07 fst soundness", 10_000, || {
        let mut u = FunUniverse::new();
        let structure = hierarchy_as_fst(&mut u, stage(3)).unwrap();
        for axiom in Theory::Fst.axioms() {
            assert_eq!(
                structure.eval_axiom(*axiom),
                Ok(true),
                "axiom {} failed",
                axiom.name()
            );
        }
        assert_eq!(structure.satisfies(Theory::Fst), Ok(true));
    });
}

#[test]
fn criterion_08_paradox_block() {
    criterion("criterion 08 paradox block", 1_000, || {
        let mut u = FunUniverse::new();
        for k in 1..=3 {
            let universe = enumerate_stage(&mut u, stage(k)).unwrap();
            assert!(
                !diagonal_exists(&u, &universe),
                "a diagonal function appeared at stage {k}"
            );
        }
    });
}

#[test]
fn criterion_09_chi_translation() {
    criterion("criterion 09 chi translation", 1_000, || {
        let mut su = SetUniverse::new();
        let sets = su.rank_at_most(2).unwrap();
        assert_eq!(sets.len(), 4);
        let membership = membership_structure_of(&su, &sets);
        // Canonical order puts the empty set first and its singleton
        // second; those are the designated tokens.
        let empty = su.set_of([]);
        let one_set = su.set_of([empty]);
        let zero = sets.iter().position(|&a| a == empty).unwrap();
        let one = sets.iter().position(|&a| a == one_set).unwrap();

        let chi = chi_translate(&membership, zero, one).unwrap();
        assert_eq!(chi.eval_axiom(AxiomId::ChiRange), Ok(true));
        assert!(chi_clauses_hold(&chi, zero, one));
        for x in 0..sets.len() {
            for y in 0..sets.len() {
                assert_eq!(
                    membership.member(x, y),
                    chi.app(y, x) == Some(one),
                    "membership/application correspondence broke"
                );
            }
        }
        assert!(chi_translate(&membership, one, one).is_err());
    });
}

#[test]
fn criterion_10_encodings() {
    criterion("criterion 10 encodings", 10_000, || {
        let mut u = FunUniverse::new();
        let two = enumerate_stage(&mut u, stage(2)).unwrap();

        // Pair injectivity and projection round-trips over all four
        // combinations of second-stage functions.
        for &a in &two {
            for &b in &two {
                let p = pair(&mut u, a, b);
                assert_eq!(unpair(&u, p).unwrap(), (a, b));
                for &c in &two {
                    for &d in &two {
                        let q = pair(&mut u, c, d);
                        assert_eq!(p == q, a == c && b == d);
                    }
                }
            }
        }

        // Order embedding and decode round-trip for ordinals up to 8.
        let ords: Vec<HfFun> =
            (0..=8).map(|n| ord_encode(&mut u, n).unwrap()).collect();
        for (m, &om) in ords.iter().enumerate() {
            assert_eq!(ord_decode(&u, om), Some(m));
            for (n, &on) in ords.iter().enumerate() {
                assert_eq!(u.fun_in(om, on), m < n);
            }
        }
        let nine = enumerate_stage(&mut u, stage(3)).unwrap();
        for &f in &nine {
            let expected = ords.iter().position(|&o| o == f);
            assert_eq!(ord_decode(&u, f), expected);
        }

        // Currying agrees with nested application on every triple.
        for &f in &nine {
            for &x in &nine {
                for &y in &nine {
                    let nested = u.apply(f, x).and_then(|fx| u.apply(fx, y));
                    assert_eq!(apply_n(&u, f, &[x, y]), nested);
                }
            }
        }
    });
}

#[test]
fn criterion_11_surface_determinism() {
    criterion("criterion 11 surface determinism", 30_000, || {
        // Exhaustive round-trips: third-stage functions and all sets of
        // rank at most 3 print, re-parse, and re-evaluate to themselves.
        let mut session = Session::new();
        let nine = enumerate_stage(&mut session.funs, stage(3)).unwrap();
        for f in nine {
            let text = print_fun(&session.funs, f);
            let term = parse(&text).unwrap();
            let value = session.eval(&term).unwrap();
            assert_eq!(session.show(value), text);
            assert_eq!(value, fltk_cli::eval::Value::Fun(f));
        }
        let sixteen = session.sets.rank_at_most(3).unwrap();
        for a in sixteen {
            let text = print_set(&session.sets, a);
            let term = parse(&text).unwrap();
            let value = session.eval(&term).unwrap();
            assert_eq!(session.show(value), text);
            assert_eq!(value, fltk_cli::eval::Value::Set(a));
        }

        // 10,000 seeded fuzz inputs: the parser is total, and every
        // rejection carries a 1-based position within the input.
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x5EED_CAFE);
        let alphabet: Vec<char> =
            "[](){},->0123456789abcdefghijklmnopqrstuvwxyz \t\n\
             ABC_;:=\u{3bb}\u{2192}"
                .chars()
                .collect();
        let mut rejected = 0u32;
        for _ in 0..10_000 {
            let len = rng.gen_range(0..40);
            let input: String =
                (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
            match parse(&input) {
                Ok(_) => {}
                Err(e) => {
                    rejected += 1;
                    assert!(e.pos.line >= 1, "unpositioned error for {input:?}");
                    assert!(e.pos.column >= 1, "unpositioned error for {input:?}");
                    let line_count = input.split('\n').count() as u32;
                    assert!(
                        e.pos.line <= line_count,
                        "error line outside input for {input:?}"
                    );
                    assert!(!e.expected.is_empty());
                }
            }
        }
        assert!(rejected > 5_000, "fuzz alphabet too tame: {rejected} rejections");
    });
}
