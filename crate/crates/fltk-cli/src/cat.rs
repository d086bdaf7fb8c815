//! Exhaustive category-law checks and bounded product searches, shared
//! by the `cat` subcommands and the test suites.

use fltk_core::category::{
    cod, compose, dom, product_test_universe, search_products, ProductDiagram,
};
use fltk_core::hierarchy::{enumerate_stage, StageIndex};
use fltk_core::{Error, FunUniverse, HfFun};

/// Outcome of checking the identity and associativity laws over one
/// stage's arrows.
#[derive(Clone, Debug)]
pub struct LawsOutcome {
    pub arrows: usize,
    /// Arrows `f` with `f ∘ dom(f) ≠ f` or `cod(f) ∘ f ≠ f`.
    pub identity_failures: Vec<HfFun>,
    pub composable_triples: usize,
    pub associativity_failures: usize,
}

impl LawsOutcome {
    pub fn all_hold(&self) -> bool {
        self.identity_failures.is_empty() && self.associativity_failures == 0
    }
}

/// Checks `f ∘ dom(f) = f = cod(f) ∘ f` for every arrow of the stage,
/// and associativity over every composable triple, exhaustively.
pub fn check_laws(u: &mut FunUniverse, stage: StageIndex) -> Result<LawsOutcome, Error> {
    let arrows = enumerate_stage(u, stage)?;
    let mut identity_failures = Vec::new();
    for &f in &arrows {
        let d = dom(u, f);
        let c = cod(u, f);
        let left_ok = compose(u, f, d) == Ok(f);
        let right_ok = compose(u, c, f) == Ok(f);
        if !(left_ok && right_ok) {
            identity_failures.push(f);
        }
    }
    // Composable pairs, precomputed: in this category `cod` is the
    // range, so when g ∘ f and h ∘ g exist, so do both triple
    // composites.
    let mut composites: Vec<(usize, usize, HfFun)> = Vec::new();
    for (i, &f) in arrows.iter().enumerate() {
        for (j, &g) in arrows.iter().enumerate() {
            if let Ok(gf) = compose(u, g, f) {
                composites.push((j, i, gf));
            }
        }
    }
    let mut composable_triples = 0;
    let mut associativity_failures = 0;
    for &(j, i, gf) in &composites {
        let f = arrows[i];
        for &(k, j2, hg) in &composites {
            if j2 != j {
                continue;
            }
            let h = arrows[k];
            composable_triples += 1;
            if compose(u, h, gf) != compose(u, hg, f) {
                associativity_failures += 1;
            }
        }
    }
    Ok(LawsOutcome {
        arrows: arrows.len(),
        identity_failures,
        composable_triples,
        associativity_failures,
    })
}

/// Outcome of a bounded product search between funsets drawn from the
/// second stage.
#[derive(Clone, Debug)]
pub struct ProductOutcome {
    pub a: HfFun,
    pub b: HfFun,
    pub universe: Vec<HfFun>,
    pub max_apex: usize,
    pub diagrams: Vec<ProductDiagram>,
}

/// Builds `A` and `B` as funsets of the first `card_a` / `card_b`
/// functions (in canonical order) and searches for product cones with
/// apex size at most `max_apex`.
pub fn product_search(
    u: &mut FunUniverse,
    card_a: usize,
    card_b: usize,
    max_apex: usize,
) -> Result<ProductOutcome, Error> {
    let pool = enumerate_stage(u, StageIndex::new(2).expect("2 >= 1"))?;
    if card_a > pool.len() || card_b > pool.len() {
        return Err(Error::CapExceeded(
            "product endpoints draw from the 2 functions of stage 2",
        ));
    }
    let a = u.funset_of(pool[..card_a].to_vec());
    let b = u.funset_of(pool[..card_b].to_vec());
    let universe = product_test_universe(u, a, b)?;
    let diagrams = search_products(u, a, b, max_apex, &universe);
    Ok(ProductOutcome { a, b, universe, max_apex, diagrams })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_three_laws_hold_exhaustively() {
        let mut u = FunUniverse::new();
        let out = check_laws(&mut u, StageIndex::new(3).unwrap()).unwrap();
        assert_eq!(out.arrows, 9);
        assert!(out.all_hold());
        assert!(out.composable_triples > 0);
    }

    #[test]
    fn singleton_product_exists_and_pairs_of_two_do_not() {
        let mut u = FunUniverse::new();
        let found = product_search(&mut u, 1, 1, 5).unwrap();
        assert!(!found.diagrams.is_empty());
        for d in &found.diagrams {
            assert_eq!(u.field(d.apex).len(), 1);
        }
        let missing = product_search(&mut u, 2, 2, 5).unwrap();
        assert!(missing.diagrams.is_empty());
    }

    #[test]
    fn oversized_endpoints_are_refused() {
        let mut u = FunUniverse::new();
        assert!(product_search(&mut u, 3, 1, 5).is_err());
    }
}
