//! The category of hereditarily finite partial functions.
//!
//! Every function is an arrow; its domain is the funset of its
//! arguments and its codomain the funset of its values, so codomains
//! never outstrip ranges. Objects are the funsets, each serving as its
//! own identity arrow, and composition is ordinary functional
//! composition, defined only when codomain meets domain.
//!
//! The module also carries a bounded universal-mapping-property check
//! used to refute categorial products: `is_product` tests a candidate
//! cone against every test diagram drawn from a caller-supplied finite
//! universe, and `search_products` sweeps all bounded candidates.

use alloc::vec::Vec;

use crate::encodings::pair;
use crate::error::Error;
use crate::kernel::{FunUniverse, HfFun};

/// Most universe elements `is_product` and `search_products` accept;
/// test diagrams are enumerated through bitmasks over the universe.
pub const PRODUCT_UNIVERSE_CAP: usize = 16;

/// Largest graph a [`cartesian_funset`] result may have.
pub const CARTESIAN_CAP: usize = 4096;

/// An arrow presented with its two objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrowView {
    pub arrow: HfFun,
    /// Funset of the arrow's arguments.
    pub domain: HfFun,
    /// Funset of the arrow's values.
    pub codomain: HfFun,
}

/// A candidate or verified product cone over a pair of objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductDiagram {
    pub apex: HfFun,
    pub to_a: HfFun,
    pub to_b: HfFun,
}

/// The domain object of `f`: the funset of its arguments.
pub fn dom(u: &mut FunUniverse, f: HfFun) -> HfFun {
    let args = u.arguments(f);
    u.funset_of(args)
}

/// The codomain object of `f`: the funset of its values.
pub fn cod(u: &mut FunUniverse, f: HfFun) -> HfFun {
    let vals = u.values(f);
    u.funset_of(vals)
}

/// Packages an arrow with its domain and codomain objects.
pub fn arrow_view(u: &mut FunUniverse, f: HfFun) -> ArrowView {
    ArrowView {
        arrow: f,
        domain: dom(u, f),
        codomain: cod(u, f),
    }
}

/// The composite `g ∘ f`, defined exactly when `cod(f) = dom(g)`;
/// its graph is `{(x, g(f(x))) : x in dom f}`. Mismatched arrows are
/// [`Error::CompositionMismatch`].
pub fn compose(u: &mut FunUniverse, g: HfFun, f: HfFun) -> Result<HfFun, Error> {
    if cod(u, f) != dom(u, g) {
        return Err(Error::CompositionMismatch);
    }
    let graph: Vec<(HfFun, HfFun)> = u
        .graph(f)
        .iter()
        .map(|&(x, fx)| {
            let gfx = u
                .apply(g, fx)
                .expect("g is total on cod(f) when cod(f) = dom(g)");
            (x, gfx)
        })
        .collect();
    Ok(u.make(graph)
        .expect("composite arguments are the arguments of f"))
}

/// The funset of encoded pairs `⟨x, y⟩` with `x` in `f`'s field and
/// `y` in `g`'s field. Errors with [`Error::CapExceeded`] when the
/// pair count would pass [`CARTESIAN_CAP`].
pub fn cartesian_funset(u: &mut FunUniverse, f: HfFun, g: HfFun) -> Result<HfFun, Error> {
    let xs = u.field(f);
    let ys = u.field(g);
    if xs.len().saturating_mul(ys.len()) > CARTESIAN_CAP {
        return Err(Error::CapExceeded(
            "cartesian funsets are capped at 4096 pairs",
        ));
    }
    let mut pairs = Vec::with_capacity(xs.len() * ys.len());
    for &x in &xs {
        for &y in &ys {
            pairs.push(pair(u, x, y));
        }
    }
    Ok(u.funset_of(pairs))
}

/// The downward-closed span of `a`, `b`, and their cartesian funset:
/// those three functions together with everything reachable from them
/// through field membership, in canonical order. This is the test
/// universe the bounded product check quantifies over.
pub fn product_test_universe(
    u: &mut FunUniverse,
    a: HfFun,
    b: HfFun,
) -> Result<Vec<HfFun>, Error> {
    let ab = cartesian_funset(u, a, b)?;
    let mut seen: Vec<HfFun> = Vec::new();
    let mut stack = alloc::vec![a, b, ab];
    while let Some(f) = stack.pop() {
        if seen.contains(&f) {
            continue;
        }
        seen.push(f);
        stack.extend(u.field(f));
    }
    u.sort_canonical(&mut seen);
    Ok(seen)
}

/// All total surjections from `from` onto `onto`, as interned graphs.
/// These are exactly the arrows between the corresponding funsets,
/// since an arrow's codomain is its range.
fn arrows_between(u: &mut FunUniverse, from: &[HfFun], onto: &[HfFun]) -> Vec<HfFun> {
    if onto.len() > from.len() {
        return Vec::new();
    }
    if from.is_empty() {
        // The null function is the unique map out of the empty funset;
        // it is onto `onto` only when `onto` is empty too.
        return if onto.is_empty() {
            alloc::vec![u.null()]
        } else {
            Vec::new()
        };
    }
    if onto.is_empty() {
        return Vec::new();
    }
    let mut found = Vec::new();
    let mut choice = alloc::vec![0usize; from.len()];
    loop {
        let mut hit = alloc::vec![false; onto.len()];
        for &c in &choice {
            hit[c] = true;
        }
        if hit.iter().all(|&h| h) {
            let graph: Vec<(HfFun, HfFun)> = from
                .iter()
                .zip(&choice)
                .map(|(&x, &c)| (x, onto[c]))
                .collect();
            found.push(
                u.make(graph)
                    .expect("assignment arguments are pairwise distinct"),
            );
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return found;
            }
            choice[i] += 1;
            if choice[i] < onto.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Composes two concrete graphs without arrow-compatibility checks,
/// returning `None` when some intermediate application is undefined.
fn raw_composite(u: &mut FunUniverse, g: HfFun, f: HfFun) -> Option<HfFun> {
    let mut graph = Vec::with_capacity(u.graph(f).len());
    for idx in 0..u.graph(f).len() {
        let (x, fx) = u.graph(f)[idx];
        graph.push((x, u.apply(g, fx)?));
    }
    Some(
        u.make(graph)
            .expect("composite arguments are the arguments of f"),
    )
}

/// Bounded universal-mapping-property check: is `(p, p1, p2)` a
/// product cone over `(a, b)` with respect to every test diagram
/// `a ←q1— q —q2→ b` whose apex is a funset over `test_universe` of
/// size at most `|a|·|b|`?
///
/// True means every such diagram factors through the cone by exactly
/// one arrow `u: q → p`. The check is evaluation, not proof: it trusts
/// the caller to pass a meaningful cone and universe, and it accepts
/// vacuously when no test diagram exists. Universes larger than
/// [`PRODUCT_UNIVERSE_CAP`] are refused by assertion.
pub fn is_product(
    u: &mut FunUniverse,
    p: HfFun,
    p1: HfFun,
    p2: HfFun,
    a: HfFun,
    b: HfFun,
    test_universe: &[HfFun],
) -> bool {
    assert!(
        test_universe.len() <= PRODUCT_UNIVERSE_CAP,
        "product test universes are capped at {PRODUCT_UNIVERSE_CAP} elements"
    );
    let fa = u.field(a);
    let fb = u.field(b);
    let fp = u.field(p);
    let apex_cap = fa.len() * fb.len();
    // Subsets in ascending size, so cheap refutations come first.
    let mut masks: Vec<u32> = (0u32..1 << test_universe.len())
        .filter(|m| (m.count_ones() as usize) <= apex_cap)
        .collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let support: Vec<HfFun> = test_universe
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &f)| f)
            .collect();
        let q = u.funset_of(support.clone());
        let fq = u.field(q);
        let q1s = arrows_between(u, &fq, &fa);
        if q1s.is_empty() {
            continue;
        }
        let q2s = arrows_between(u, &fq, &fb);
        let mediators = arrows_between(u, &fq, &fp);
        for &q1 in &q1s {
            for &q2 in &q2s {
                let mut matches = 0usize;
                for &m in &mediators {
                    if raw_composite(u, p1, m) == Some(q1) && raw_composite(u, p2, m) == Some(q2) {
                        matches += 1;
                        if matches > 1 {
                            break;
                        }
                    }
                }
                if matches != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Sweeps every candidate cone with apex size at most `max_apex` over
/// the universe and returns those passing [`is_product`]. Projections
/// range over all arrows from the apex to `a` and `b` respectively.
pub fn search_products(
    u: &mut FunUniverse,
    a: HfFun,
    b: HfFun,
    max_apex: usize,
    test_universe: &[HfFun],
) -> Vec<ProductDiagram> {
    assert!(
        test_universe.len() <= PRODUCT_UNIVERSE_CAP,
        "product test universes are capped at {PRODUCT_UNIVERSE_CAP} elements"
    );
    let fa = u.field(a);
    let fb = u.field(b);
    let mut found = Vec::new();
    for mask in 0u32..1 << test_universe.len() {
        if (mask.count_ones() as usize) > max_apex {
            continue;
        }
        let support: Vec<HfFun> = test_universe
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &f)| f)
            .collect();
        let p = u.funset_of(support);
        let fp = u.field(p);
        for p1 in arrows_between(u, &fp, &fa) {
            for p2 in arrows_between(u, &fp, &fb) {
                if is_product(u, p, p1, p2, a, b, test_universe) {
                    found.push(ProductDiagram {
                        apex: p,
                        to_a: p1,
                        to_b: p2,
                    });
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hierarchy::{enumerate_stage, StageIndex};

    fn stage(u: &mut FunUniverse, s: u32) -> Vec<HfFun> {
        enumerate_stage(u, StageIndex::new(s).unwrap()).unwrap()
    }

    #[test]
    fn dom_and_cod_read_off_the_graph() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        assert_eq!(dom(&mut u, zero), zero);
        assert_eq!(cod(&mut u, zero), zero);
        let i = u.make([(zero, zero)]).unwrap();
        let f = u.make([(i, zero)]).unwrap();
        assert_eq!(dom(&mut u, f), u.funset_of([i]));
        assert_eq!(cod(&mut u, f), u.funset_of([zero]));
        let view = arrow_view(&mut u, f);
        assert_eq!(view.arrow, f);
        assert!(u.is_funset(view.domain) && u.is_funset(view.codomain));
    }

    #[test]
    fn funsets_are_their_own_objects() {
        let mut u = FunUniverse::new();
        for s in stage(&mut u, 3) {
            if u.is_funset(s) {
                assert_eq!(dom(&mut u, s), s);
                assert_eq!(cod(&mut u, s), s);
            }
        }
    }

    #[test]
    fn identity_laws_hold_on_the_third_stage() {
        let mut u = FunUniverse::new();
        for f in stage(&mut u, 3) {
            let d = dom(&mut u, f);
            let c = cod(&mut u, f);
            assert_eq!(compose(&mut u, f, d), Ok(f));
            assert_eq!(compose(&mut u, c, f), Ok(f));
        }
    }

    #[test]
    fn composition_is_associative_on_the_third_stage() {
        let mut u = FunUniverse::new();
        let f3 = stage(&mut u, 3);
        let mut triples = 0usize;
        for &f in &f3 {
            for &g in &f3 {
                let Ok(gf) = compose(&mut u, g, f) else {
                    continue;
                };
                for &h in &f3 {
                    let Ok(hg) = compose(&mut u, h, g) else {
                        continue;
                    };
                    triples += 1;
                    assert_eq!(compose(&mut u, h, gf), compose(&mut u, hg, f));
                }
            }
        }
        assert!(triples > 0);
    }

    #[test]
    fn composition_verdicts_follow_the_kernel_oracle() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        let i = u.make([(zero, zero)]).unwrap();
        let f = u.make([(i, zero)]).unwrap();
        // cod([[0->0]->0]) and dom([0->0]) are both the funset {0}, so
        // this pair composes, and the composite sends [0->0] through 0
        // back to 0.
        assert_eq!(cod(&mut u, f), dom(&mut u, i));
        assert_eq!(compose(&mut u, i, f), Ok(f));
        // The reversed pair genuinely mismatches: cod([0->0]) = {0}
        // but dom([[0->0]->0]) = {[0->0]}.
        assert_eq!(compose(&mut u, f, i), Err(Error::CompositionMismatch));
    }

    #[test]
    fn cartesian_funsets_count_pairs() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        let i = u.make([(zero, zero)]).unwrap();
        let g = u.funset_of([i]);
        assert_eq!(cartesian_funset(&mut u, zero, g), Ok(zero));
        let p00 = crate::encodings::pair(&mut u, zero, zero);
        let expected = u.funset_of([p00]);
        assert_eq!(cartesian_funset(&mut u, i, i), Ok(expected));
        let f2 = stage(&mut u, 2);
        let funsets: Vec<HfFun> = {
            let all: Vec<HfFun> = f2
                .iter()
                .copied()
                .filter(|&f| u.is_funset(f))
                .collect();
            all
        };
        for &x in &funsets {
            for &y in &funsets {
                let c = cartesian_funset(&mut u, x, y).unwrap();
                assert_eq!(u.field(c).len(), u.field(x).len() * u.field(y).len());
            }
        }
    }

    #[test]
    fn empty_pair_of_objects_has_the_null_product() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        let universe = product_test_universe(&mut u, zero, zero).unwrap();
        assert_eq!(universe, alloc::vec![zero]);
        let found = search_products(&mut u, zero, zero, 5, &universe);
        assert_eq!(
            found,
            alloc::vec![ProductDiagram {
                apex: zero,
                to_a: zero,
                to_b: zero
            }]
        );
    }

    #[test]
    fn empty_against_nonempty_is_vacuously_a_product_but_never_found() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        let i = u.make([(zero, zero)]).unwrap();
        let universe = product_test_universe(&mut u, zero, i).unwrap();
        // No funset maps onto the empty object except the null one, and
        // the null one cannot map onto a nonempty object, so no test
        // diagram exists and the all-null cone passes vacuously.
        assert!(is_product(&mut u, zero, zero, zero, zero, i, &universe));
        // The sweep still finds nothing: a genuine cone would need an
        // arrow from the apex onto each object, which cannot exist.
        assert!(search_products(&mut u, zero, i, 5, &universe).is_empty());
    }

    #[test]
    fn singleton_products_exist_with_constant_and_identity_projections() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        let a = u.funset_of([zero]);
        let universe = product_test_universe(&mut u, a, a).unwrap();
        let found = search_products(&mut u, a, a, 5, &universe);
        assert!(!found.is_empty());
        for d in &found {
            assert_eq!(u.field(d.apex).len(), 1);
        }
        // The canonical witness: apex = the second object, first
        // projection constant, second the identity.
        assert!(found.iter().any(|d| d.apex == a && d.to_a == a && d.to_b == a));
    }

    #[test]
    fn an_oversized_apex_fails_the_mapping_property() {
        let mut u = FunUniverse::new();
        let zero = u.null();
        let a = u.funset_of([zero]);
        let i = a; // funset {0} doubles as an element below
        let p = u.funset_of([zero, i]);
        let fp = u.field(p);
        let fa = u.field(a);
        let p1 = arrows_between(&mut u, &fp, &fa)[0];
        let universe = product_test_universe(&mut u, a, a).unwrap();
        assert!(!is_product(&mut u, p, p1, p1, a, a, &universe));
    }
}
