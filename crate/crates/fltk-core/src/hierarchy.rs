//! The cumulative function hierarchy and its fevels.
//!
//! Stage 1 holds only the empty function; stage `s+1` holds every function
//! whose arguments and values were found by stage `s`. Stage sizes follow
//! the recurrence `p(1) = 1`, `p(α+1) = (p(α)+1)^p(α)`, which reaches a
//! billion at stage 4 — so enumeration stops at stage 3 and counting keeps
//! going with exact big integers.
//!
//! A *fevel* is the function-side analogue of a cumulative level: the
//! funset of everything found before some stage. Fevels are characterised
//! two independent ways here — via functional histories ([`is_fevel`]) and
//! via a recursion on the field ([`is_fevel_recursive`]) — and the tests
//! hold the two and the stage-by-stage construction to agreement.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::kernel::{FunUniverse, HfFun};
use crate::Error;

/// Largest stage that [`enumerate_stage`] will materialize. Stage 4 has
/// `p(4) = 10^9` members and must stay count-only.
pub const MAX_ENUMERATED_STAGE: u32 = 3;

/// Largest stage [`count_p`] will compute. `p(5)` has roughly `9.3 × 10^9`
/// decimal digits; the number itself is out of reach, not just the stage.
pub const MAX_COUNTED_STAGE: u32 = 4;

/// [`hfpot`] enumerates every function whose field sits inside the field of
/// a member `g`; that is `(k+1)^k` functions for `k = |field(g)|`. Capping
/// `k` at 5 bounds the haul per member at 7776.
pub const HFPOT_MEMBER_FIELD_CAP: usize = 5;

/// [`is_fevel`] searches histories drawn from the downward closure of the
/// candidate's field; the subset walk is exponential in the closure size.
pub const FEVEL_CLOSURE_CAP: usize = 16;

/// A 1-based stage number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StageIndex(u32);

impl StageIndex {
    /// Wraps a positive stage number; stages start at 1.
    pub fn new(n: u32) -> Option<Self> {
        (n >= 1).then_some(StageIndex(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl core::fmt::Display for StageIndex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One stage of the hierarchy: its members in canonical order and the fevel
/// object that collects everything found *before* the stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FevelReport {
    pub stage: StageIndex,
    pub members: Vec<HfFun>,
    pub fevel_object: HfFun,
}

/// Every partial map from `base` into `base`, as interned functions.
/// `(n+1)^n` results for `n = base.len()`: each argument is either left out
/// or sent to one of the `n` values.
fn partial_maps_over(u: &mut FunUniverse, base: &[HfFun]) -> Vec<HfFun> {
    let n = base.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n]; // 0 = undefined, v > 0 = base[v - 1]
    loop {
        let entries: Vec<_> = (0..n)
            .filter(|&i| choice[i] > 0)
            .map(|i| (base[i], base[choice[i] - 1]))
            .collect();
        out.push(u.make(entries).expect("arguments are distinct"));
        let mut i = 0;
        loop {
            if i == n {
                u.sort_canonical(&mut out);
                return out;
            }
            choice[i] += 1;
            if choice[i] <= n {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// The members of stage `s`, in canonical order.
///
/// Fails with [`Error::CapExceeded`] past stage [`MAX_ENUMERATED_STAGE`].
pub fn enumerate_stage(u: &mut FunUniverse, s: StageIndex) -> Result<Vec<HfFun>, Error> {
    if s.get() > MAX_ENUMERATED_STAGE {
        return Err(Error::CapExceeded("stages past 3 are count-only"));
    }
    let mut members = vec![u.null()];
    for _ in 2..=s.get() {
        members = partial_maps_over(u, &members);
    }
    Ok(members)
}

/// Exact stage cardinality: `p(1) = 1`, `p(α+1) = (p(α)+1)^p(α)`.
///
/// Fails with [`Error::CapExceeded`] past stage [`MAX_COUNTED_STAGE`]:
/// the value itself stops being representable, not merely the stage.
pub fn count_p(alpha: StageIndex) -> Result<BigUint, Error> {
    if alpha.get() > MAX_COUNTED_STAGE {
        return Err(Error::CapExceeded("p(5) already has billions of digits"));
    }
    let mut p = BigUint::from(1u32);
    for _ in 2..=alpha.get() {
        let exp = u32::try_from(&p).expect("exponent fits: guarded by the stage cap");
        p = (&p + 1u32).pow(exp);
    }
    Ok(p)
}

/// The stage at which `f` is found: 1 for the empty function, otherwise one
/// more than the largest index in its field. Memoized at construction, so
/// this is an `O(1)` read.
pub fn idx(u: &FunUniverse, f: HfFun) -> StageIndex {
    StageIndex(u.rank(f))
}

/// The funset of every function whose field is exhausted by the field of
/// some member of `f` — the function-side power operation.
///
/// Fails with [`Error::CapExceeded`] when a member's field has more than
/// [`HFPOT_MEMBER_FIELD_CAP`] elements.
pub fn hfpot(u: &mut FunUniverse, f: HfFun) -> Result<HfFun, Error> {
    let mut collected: Vec<HfFun> = Vec::new();
    for g in u.field(f) {
        let base = u.field(g);
        if base.len() > HFPOT_MEMBER_FIELD_CAP {
            return Err(Error::CapExceeded("hfpot over a member field larger than 5"));
        }
        collected.extend(partial_maps_over(u, &base));
    }
    collected.sort_by_key(|x| x.id());
    collected.dedup();
    u.sort_canonical(&mut collected);
    Ok(u.funset_of(collected))
}

/// Whether `h` is a functional history: every member `x` of its field is
/// exactly `hfpot` of the funset of those members of `h` that fall in `x`.
pub fn is_history(u: &mut FunUniverse, h: HfFun) -> Result<bool, Error> {
    for x in u.field(h) {
        let below: Vec<_> = u.field(h).into_iter().filter(|&z| u.fun_in(z, x)).collect();
        let w = u.funset_of(below);
        if hfpot(u, w)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The downward closure of `f`'s field under field membership.
fn field_closure(u: &FunUniverse, f: HfFun) -> Result<Vec<HfFun>, Error> {
    let mut closure = u.field(f);
    let mut i = 0;
    while i < closure.len() {
        for x in u.field(closure[i]) {
            if !closure.contains(&x) {
                closure.push(x);
            }
        }
        if closure.len() > FEVEL_CLOSURE_CAP {
            return Err(Error::CapExceeded("field closure larger than 16"));
        }
        i += 1;
    }
    u.sort_canonical(&mut closure);
    Ok(closure)
}

/// Whether `s` is a fevel: `hfpot` of some functional history.
///
/// The history search ranges over funsets whose field is drawn from the
/// downward closure of `s`'s field, with at most `|field(s)| + 1` members.
/// That bound cannot miss a witness: a history for `s` lists fevels that
/// are themselves included in `s`'s field. The tests keep this search in
/// agreement with [`is_fevel_recursive`], which needs no search at all.
pub fn is_fevel(u: &mut FunUniverse, s: HfFun) -> Result<bool, Error> {
    let closure = field_closure(u, s)?;
    let max_members = u.field(s).len() + 1;
    let n = closure.len();
    for mask in 0u32..(1u32 << n) {
        if (mask.count_ones() as usize) > max_members {
            continue;
        }
        let members: Vec<_> =
            (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| closure[i]).collect();
        let h = u.funset_of(members);
        if is_history(u, h)? && hfpot(u, h)? == s {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `s` is a fevel, by the recursion on its field: `s` must be
/// `hfpot` of the funset of its fevel members.
pub fn is_fevel_recursive(u: &mut FunUniverse, s: HfFun) -> Result<bool, Error> {
    fn rec(
        u: &mut FunUniverse,
        s: HfFun,
        memo: &mut alloc::collections::BTreeMap<u32, bool>,
    ) -> Result<bool, Error> {
        if let Some(&known) = memo.get(&s.id()) {
            return Ok(known);
        }
        let mut sub_fevels = Vec::new();
        for t in u.field(s) {
            if rec(u, t, memo)? {
                sub_fevels.push(t);
            }
        }
        let w = u.funset_of(sub_fevels);
        let verdict = hfpot(u, w)? == s;
        memo.insert(s.id(), verdict);
        Ok(verdict)
    }
    rec(u, s, &mut alloc::collections::BTreeMap::new())
}

/// The least fevel (under field membership) that includes `f`: the funset
/// of everything found before `f`'s stage.
///
/// Fails with [`Error::CapExceeded`] when that stage cannot be enumerated.
pub fn fevel_of(u: &mut FunUniverse, f: HfFun) -> Result<HfFun, Error> {
    let k = idx(u, f).get();
    if k == 1 {
        return Ok(u.null());
    }
    let below = enumerate_stage(u, StageIndex(k - 1))?;
    Ok(u.funset_of(below))
}

/// Stage members together with the fevel object they sit on top of.
pub fn stage_report(u: &mut FunUniverse, s: StageIndex) -> Result<FevelReport, Error> {
    let members = enumerate_stage(u, s)?;
    let fevel_object = if s.get() == 1 {
        u.null()
    } else {
        let below = enumerate_stage(u, StageIndex(s.get() - 1))?;
        u.funset_of(below)
    };
    Ok(FevelReport { stage: s, members, fevel_object })
}

/// Whether the universe slice contains a diagonal function `d` with, for
/// every `x` in the slice: `d(x) = x` exactly when `x(x) ≠ x`, and `d(x)`
/// undefined exactly when `x(x) = x`. No finite stage admits one.
pub fn diagonal_exists(u: &FunUniverse, universe: &[HfFun]) -> bool {
    universe.iter().any(|&d| {
        universe.iter().all(|&x| {
            if u.apply(x, x) == Some(x) {
                u.apply(d, x).is_none()
            } else {
                u.apply(d, x) == Some(x)
            }
        })
    })
}
