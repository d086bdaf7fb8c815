//! Translations between the function universe and the set universe.
//!
//! [`to_set`] reads a function as its graph: a set of Kuratowski pairs, one
//! per entry. [`to_fun`] reads a set as a funset whose field carries the
//! translated elements. Both are value-level maps computed by structural
//! recursion; neither inverts the other — `to_set(to_fun(a))` wraps every
//! element in pair clothing rather than returning `a` — but each preserves
//! the structure it cares about: application on the function side turns
//! into membership of pairs, membership on the set side turns into field
//! membership. The image of `to_set` consists of hereditary setfunctions,
//! the image of `to_fun` of hereditary funsets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::kernel::{FunUniverse, HfFun};
use crate::sets::{HfSet, SetUniverse};

/// Interprets a function as a set: the set of Kuratowski pairs
/// `⟨to_set(x), to_set(y)⟩` for each graph entry `(x, y)`.
pub fn to_set(funs: &FunUniverse, sets: &mut SetUniverse, f: HfFun) -> HfSet {
    fn rec(
        funs: &FunUniverse,
        sets: &mut SetUniverse,
        f: HfFun,
        memo: &mut BTreeMap<u32, HfSet>,
    ) -> HfSet {
        if let Some(&done) = memo.get(&f.id()) {
            return done;
        }
        let mut pairs = Vec::new();
        for &(x, y) in Vec::from(funs.graph(f)).iter() {
            let sx = rec(funs, sets, x, memo);
            let sy = rec(funs, sets, y, memo);
            pairs.push(sets.kpair(sx, sy));
        }
        let out = sets.set_of(pairs);
        memo.insert(f.id(), out);
        out
    }
    rec(funs, sets, f, &mut BTreeMap::new())
}

/// Interprets a set as a function: the funset over the translated elements.
pub fn to_fun(sets: &SetUniverse, funs: &mut FunUniverse, a: HfSet) -> HfFun {
    fn rec(
        sets: &SetUniverse,
        funs: &mut FunUniverse,
        a: HfSet,
        memo: &mut BTreeMap<u32, HfFun>,
    ) -> HfFun {
        if let Some(&done) = memo.get(&a.id()) {
            return done;
        }
        let members: Vec<HfFun> =
            Vec::from(sets.elems(a)).iter().map(|&x| rec(sets, funs, x, memo)).collect();
        let out = funs.funset_of(members);
        memo.insert(a.id(), out);
        out
    }
    rec(sets, funs, a, &mut BTreeMap::new())
}

/// A setfunction whose field members are, hereditarily, setfunctions —
/// the shape of everything in the image of [`to_set`].
pub fn is_hereditary_setfunction(sets: &SetUniverse, a: HfSet) -> bool {
    fn rec(sets: &SetUniverse, a: HfSet, memo: &mut BTreeMap<u32, bool>) -> bool {
        if let Some(&done) = memo.get(&a.id()) {
            return done;
        }
        // Seed optimistically: harmless here because membership chains are
        // well-founded, so the recursion never actually revisits `a`.
        memo.insert(a.id(), true);
        let verdict = match sets.setfunction_graph(a) {
            None => false,
            Some(graph) => graph
                .iter()
                .all(|&(x, y)| rec(sets, x, memo) && rec(sets, y, memo)),
        };
        memo.insert(a.id(), verdict);
        verdict
    }
    rec(sets, a, &mut BTreeMap::new())
}

/// A funset whose field members are, hereditarily, funsets — the shape of
/// everything in the image of [`to_fun`].
pub fn is_hereditary_funset(funs: &FunUniverse, f: HfFun) -> bool {
    fn rec(funs: &FunUniverse, f: HfFun, memo: &mut BTreeMap<u32, bool>) -> bool {
        if let Some(&done) = memo.get(&f.id()) {
            return done;
        }
        memo.insert(f.id(), true);
        let verdict =
            funs.is_funset(f) && funs.field(f).into_iter().all(|x| rec(funs, x, memo));
        memo.insert(f.id(), verdict);
        verdict
    }
    rec(funs, f, &mut BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hierarchy::{enumerate_stage, idx, StageIndex};

    fn st(n: u32) -> StageIndex {
        StageIndex::new(n).unwrap()
    }

    #[test]
    fn the_empty_function_is_the_empty_set() {
        let funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        assert_eq!(to_set(&funs, &mut sets, funs.null()), sets.empty());
    }

    #[test]
    fn a_graph_becomes_its_pair_set() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let zero = funs.null();
        let one = funs.make([(zero, zero)]).unwrap();
        let image = to_set(&funs, &mut sets, one);
        let e = sets.empty();
        let expected_pair = sets.kpair(e, e);
        let expected = sets.set_of([expected_pair]);
        assert_eq!(image, expected);
    }

    #[test]
    fn sets_become_funsets_over_their_elements() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let e = sets.empty();
        let se = sets.set_of([e]);
        let v2 = sets.set_of([e, se]);
        let zero = funs.null();
        let one = funs.make([(zero, zero)]).unwrap();
        let expected = funs.funset_of([zero, one]);
        assert_eq!(to_fun(&sets, &mut funs, v2), expected);
    }

    #[test]
    fn to_set_is_injective_on_stage_three() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let f3 = enumerate_stage(&mut funs, st(3)).unwrap();
        let images: Vec<_> = f3.iter().map(|&f| to_set(&funs, &mut sets, f)).collect();
        for (i, &a) in images.iter().enumerate() {
            for &b in &images[..i] {
                assert_ne!(a, b);
            }
            assert!(is_hereditary_setfunction(&sets, a));
        }
    }

    #[test]
    fn to_fun_is_injective_below_rank_four() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let small = sets.rank_at_most(3).unwrap();
        assert_eq!(small.len(), 16);
        let images: Vec<_> = small.iter().map(|&a| to_fun(&sets, &mut funs, a)).collect();
        for (i, &f) in images.iter().enumerate() {
            for &g in &images[..i] {
                assert_ne!(f, g);
            }
            assert!(is_hereditary_funset(&funs, f));
        }
    }

    #[test]
    fn application_translates_to_pair_membership() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let f3 = enumerate_stage(&mut funs, st(3)).unwrap();
        for &f in &f3 {
            let sf = to_set(&funs, &mut sets, f);
            for &x in &f3 {
                for &y in &f3 {
                    let sx = to_set(&funs, &mut sets, x);
                    let sy = to_set(&funs, &mut sets, y);
                    let pair = sets.kpair(sx, sy);
                    assert_eq!(
                        funs.apply(f, x) == Some(y),
                        sets.member(pair, sf),
                        "application must match pair membership"
                    );
                }
            }
        }
    }

    #[test]
    fn membership_translates_to_field_membership() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let small = sets.rank_at_most(3).unwrap();
        for &a in &small {
            let fa = to_fun(&sets, &mut funs, a);
            for &x in &small {
                let fx = to_fun(&sets, &mut funs, x);
                assert_eq!(sets.member(x, a), funs.fun_in(fx, fa));
            }
        }
    }

    #[test]
    fn round_trip_is_injective_but_not_identity() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        let e = sets.empty();
        let se = sets.set_of([e]);
        // {∅} travels to the funset [0->0] and back to {⟨∅,∅⟩} ≠ {∅}:
        // each element returns wrapped in a pair, so the composite is not
        // the identity map.
        let back = {
            let f = to_fun(&sets, &mut funs, se);
            to_set(&funs, &mut sets, f)
        };
        assert_ne!(back, se);
        let pair_ee = sets.kpair(e, e);
        assert_eq!(back, sets.set_of([pair_ee]));
        // It is still injective, being a composite of injections.
        let small = sets.rank_at_most(3).unwrap();
        let mut images = alloc::collections::BTreeSet::new();
        for &a in &small {
            let f = to_fun(&sets, &mut funs, a);
            images.insert(to_set(&funs, &mut sets, f).id());
        }
        assert_eq!(images.len(), small.len());
    }

    #[test]
    fn translated_rank_tracks_set_rank() {
        let mut funs = FunUniverse::new();
        let mut sets = SetUniverse::new();
        // The function-side index of a translated set is its rank plus one,
        // exactly: both count the same construction stages, one of them
        // from a 1-based start.
        for a in sets.rank_at_most(3).unwrap() {
            let f = to_fun(&sets, &mut funs, a);
            assert_eq!(idx(&funs, f).get(), sets.set_rank(a) + 1);
        }
    }
}
