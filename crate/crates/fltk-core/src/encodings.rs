//! Encodings of familiar mathematical objects as hereditarily finite
//! partial functions.
//!
//! Everything here is built from the kernel alone: n-ary application by
//! currying, relations as funsets of functions, ordered pairs as
//! one-entry graphs, and finite ordinals as truncated-predecessor maps.
//! Encoders intern new functions; decoders are read-only and verify
//! structure rather than trusting it.

use alloc::vec::Vec;

use crate::error::Error;
use crate::kernel::{FunUniverse, HfFun};

/// Largest natural number accepted by [`ord_encode`]. The encoding of
/// `n` carries every smaller ordinal in its field, so graphs grow
/// quadratically in total entry count; twelve keeps the arena small.
pub const ORD_CAP: usize = 12;

/// Iterated left-nested application: `apply_n(f, [x, y])` is
/// `f(x)(y)`. An empty argument list returns `f` itself, and an
/// undefined intermediate makes the whole chain undefined.
pub fn apply_n(u: &FunUniverse, f: HfFun, args: &[HfFun]) -> Option<HfFun> {
    let mut cur = f;
    for &a in args {
        cur = u.apply(cur, a)?;
    }
    Some(cur)
}

/// Reads a funset `f` as a relation: the relation holds of
/// `(args, z)` exactly when some `g` in `f`'s field has
/// `apply_n(g, args) = z`.
pub fn rel_holds(u: &FunUniverse, f: HfFun, args: &[HfFun], z: HfFun) -> bool {
    u.field(f).into_iter().any(|g| apply_n(u, g, args) == Some(z))
}

/// The ordered pair `⟨a, b⟩`: the function mapping `a` to the funset
/// `{b}` and undefined elsewhere, so its one graph entry is
/// `(a, [b->b])`.
pub fn pair(u: &mut FunUniverse, a: HfFun, b: HfFun) -> HfFun {
    let vb = u.funset_of([b]);
    u.make([(a, vb)])
        .expect("a one-entry graph is functional")
}

/// Decodes a pair in one step, returning both components.
///
/// A value is a pair exactly when its graph has a single entry whose
/// value is a one-element funset; anything else is [`Error::NotAPair`].
pub fn unpair(u: &FunUniverse, p: HfFun) -> Result<(HfFun, HfFun), Error> {
    if let &[(a, v)] = u.graph(p) {
        if u.is_funset(v) {
            if let &[b] = u.field(v).as_slice() {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NotAPair)
}

/// First component of a pair; see [`unpair`].
pub fn fst(u: &FunUniverse, p: HfFun) -> Result<HfFun, Error> {
    unpair(u, p).map(|(a, _)| a)
}

/// Second component of a pair; see [`unpair`].
pub fn snd(u: &FunUniverse, p: HfFun) -> Result<HfFun, Error> {
    unpair(u, p).map(|(_, b)| b)
}

/// Encodes a natural number as a function-theoretic ordinal: `0` is
/// the null function, and `n` is the map sending each smaller ordinal
/// `k` to `k ∸ 1` (truncated, so `0 ↦ 0`). Errors with
/// [`Error::CapExceeded`] above [`ORD_CAP`].
pub fn ord_encode(u: &mut FunUniverse, n: usize) -> Result<HfFun, Error> {
    if n > ORD_CAP {
        return Err(Error::CapExceeded("ordinal encodings are capped at 12"));
    }
    let mut ords: Vec<HfFun> = Vec::with_capacity(n + 1);
    ords.push(u.null());
    for k in 1..=n {
        let graph: Vec<(HfFun, HfFun)> = (0..k)
            .map(|j| (ords[j], ords[j.saturating_sub(1)]))
            .collect();
        let ord_k = u
            .make(graph)
            .expect("ordinal graphs have pairwise distinct arguments");
        ords.push(ord_k);
    }
    Ok(ords[n])
}

/// Recognizes ordinal encodings without interning anything: returns
/// `Some(n)` when `f` is exactly the encoding of `n`, else `None`.
///
/// The check pins the whole structure bottom-up. Writing `aⱼ` for the
/// `j`-th argument of `f`'s canonically ordered graph, every `aⱼ` must
/// have graph `[(aᵢ, a_{i∸1}) : i < j]`, and `f` itself must have that
/// shape at length `n`; by extensionality this forces `aⱼ` to be the
/// ordinal `j` and `f` to be the ordinal `n`.
pub fn ord_decode(u: &FunUniverse, f: HfFun) -> Option<usize> {
    let top = u.graph(f);
    let n = top.len();
    let args: Vec<HfFun> = top.iter().map(|&(a, _)| a).collect();
    for j in 0..n {
        let gj = u.graph(args[j]);
        if gj.len() != j {
            return None;
        }
        for i in 0..j {
            if gj[i] != (args[i], args[i.saturating_sub(1)]) {
                return None;
            }
        }
    }
    for i in 0..n {
        if top[i] != (args[i], args[i.saturating_sub(1)]) {
            return None;
        }
    }
    Some(n)
}
