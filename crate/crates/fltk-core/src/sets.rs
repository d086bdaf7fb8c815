//! Hereditarily finite sets: the mirror universe.
//!
//! Everything here parallels the function side. [`SetUniverse`] interns
//! canonical element lists, so set equality is handle equality; the
//! canonical order compares by rank, then cardinality, then elements
//! lexicographically. On top of the raw sets sit the cumulative levels
//! (`pot` / [`is_level`] / [`lev_of`]), Kuratowski pairs for representing
//! functions as sets, and the two-valued application table [`chi_app`] that
//! reads membership off as `0`/`1` answers.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::kernel::DEFAULT_NODE_CAP;
use crate::Error;

/// [`pot`] materializes every subset of each member, `2^k` sets for a
/// member of cardinality `k`.
pub const POT_MEMBER_CAP: usize = 16;

/// Handle to an interned hereditarily finite set, scoped to its universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HfSet(u32);

impl HfSet {
    /// The stable interning identifier of this set.
    pub fn id(self) -> u32 {
        self.0
    }
}

struct Node {
    elems: Box<[HfSet]>,
    /// 1 for the empty set, otherwise one more than the largest element
    /// rank — the mirror of the function-side stage index.
    rank: u32,
}

/// The interning arena for hereditarily finite sets.
pub struct SetUniverse {
    nodes: Vec<Node>,
    table: BTreeMap<Box<[u32]>, u32>,
    node_cap: usize,
}

impl Default for SetUniverse {
    fn default() -> Self {
        Self::new()
    }
}

impl SetUniverse {
    /// Creates a universe containing only the empty set.
    pub fn new() -> Self {
        Self::with_node_cap(DEFAULT_NODE_CAP)
    }

    /// Creates a universe with an explicit ceiling on interned nodes.
    pub fn with_node_cap(node_cap: usize) -> Self {
        let mut u = SetUniverse { nodes: Vec::new(), table: BTreeMap::new(), node_cap };
        let empty = u.intern(Vec::new());
        debug_assert_eq!(empty.0, 0);
        u
    }

    /// The empty set.
    pub fn empty(&self) -> HfSet {
        HfSet(0)
    }

    /// Number of sets interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when only the empty set has been interned.
    pub fn is_empty(&self) -> bool {
        self.nodes.len() <= 1
    }

    fn intern(&mut self, elems: Vec<HfSet>) -> HfSet {
        let key: Box<[u32]> = elems.iter().map(|x| x.0).collect();
        if let Some(&id) = self.table.get(&key) {
            return HfSet(id);
        }
        if self.nodes.len() >= self.node_cap {
            panic!("interning table exceeded its node cap of {} nodes", self.node_cap);
        }
        let rank = 1 + elems.iter().map(|x| self.nodes[x.0 as usize].rank).max().unwrap_or(0);
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { elems: elems.into_boxed_slice(), rank });
        self.table.insert(key, id);
        HfSet(id)
    }

    /// Builds the set with the given elements; order and repeats are
    /// immaterial.
    pub fn set_of(&mut self, elems: impl IntoIterator<Item = HfSet>) -> HfSet {
        let mut elems: Vec<HfSet> = elems.into_iter().collect();
        let issued = self.nodes.len() as u32;
        assert!(elems.iter().all(|x| x.0 < issued), "handle from another universe");
        self.sort_canonical(&mut elems);
        elems.dedup();
        self.intern(elems)
    }

    /// The elements of `a`, in canonical order.
    pub fn elems(&self, a: HfSet) -> &[HfSet] {
        &self.nodes[a.0 as usize].elems
    }

    /// Membership: `x ∈ a`.
    pub fn member(&self, x: HfSet, a: HfSet) -> bool {
        self.elems(a).contains(&x)
    }

    /// Inclusion: every element of `a` is an element of `b`.
    pub fn subset(&self, a: HfSet, b: HfSet) -> bool {
        self.elems(a).iter().all(|&x| self.member(x, b))
    }

    /// Cardinality of `a`.
    pub fn card(&self, a: HfSet) -> usize {
        self.elems(a).len()
    }

    /// Standard 0-based rank: the empty set has rank 0, otherwise one more
    /// than the largest element rank.
    pub fn set_rank(&self, a: HfSet) -> u32 {
        self.nodes[a.0 as usize].rank - 1
    }

    /// The canonical strict total order: rank, then cardinality, then
    /// elements lexicographically. Structural, so independent of
    /// construction order.
    pub fn compare(&self, a: HfSet, b: HfSet) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let (na, nb) = (&self.nodes[a.0 as usize], &self.nodes[b.0 as usize]);
        na.rank
            .cmp(&nb.rank)
            .then_with(|| na.elems.len().cmp(&nb.elems.len()))
            .then_with(|| {
                for (&x, &y) in na.elems.iter().zip(nb.elems.iter()) {
                    let c = self.compare(x, y);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }

    /// Sorts a slice of sets into canonical order.
    pub fn sort_canonical(&self, xs: &mut [HfSet]) {
        xs.sort_by(|&a, &b| self.compare(a, b));
    }

    /// The Kuratowski pair `{{a}, {a, b}}`.
    pub fn kpair(&mut self, a: HfSet, b: HfSet) -> HfSet {
        let sa = self.set_of([a]);
        let sab = self.set_of([a, b]);
        self.set_of([sa, sab])
    }

    /// Decodes a Kuratowski pair, `None` when `e` has no pair shape.
    pub fn ksplit(&self, e: HfSet) -> Option<(HfSet, HfSet)> {
        match *self.elems(e) {
            [s] => match *self.elems(s) {
                [a] => Some((a, a)),
                _ => None,
            },
            [s, t] => {
                // One of the two must be the singleton {a}, the other {a, b}.
                let (sing, dbl) =
                    if self.elems(s).len() == 1 { (s, t) } else { (t, s) };
                match (self.elems(sing), self.elems(dbl)) {
                    (&[a], &[x, y]) if x == a => Some((a, y)),
                    (&[a], &[x, y]) if y == a => Some((a, x)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// True when every element of `f` is a Kuratowski pair and the decoded
    /// pairs are functional: no argument with two values.
    pub fn is_setfunction(&self, f: HfSet) -> bool {
        self.setfunction_graph(f).is_some()
    }

    /// The decoded graph of a setfunction, `None` when `f` is not one.
    pub fn setfunction_graph(&self, f: HfSet) -> Option<Vec<(HfSet, HfSet)>> {
        let mut graph = Vec::new();
        for &e in self.elems(f) {
            graph.push(self.ksplit(e)?);
        }
        for (i, &(a, v)) in graph.iter().enumerate() {
            if graph[..i].iter().any(|&(a2, v2)| a2 == a && v2 != v) {
                return None;
            }
        }
        Some(graph)
    }

    /// Every subset of `c`, capped at [`POT_MEMBER_CAP`] elements.
    fn subsets_of(&mut self, c: HfSet) -> Result<Vec<HfSet>, Error> {
        let elems: Vec<HfSet> = self.elems(c).into();
        if elems.len() > POT_MEMBER_CAP {
            return Err(Error::CapExceeded("powerset of a set larger than 16"));
        }
        let mut out = Vec::with_capacity(1 << elems.len());
        for mask in 0u32..(1u32 << elems.len()) {
            let sub: Vec<_> = elems
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            out.push(self.set_of(sub));
        }
        out.sort_by_key(|x| x.id());
        out.dedup();
        self.sort_canonical(&mut out);
        Ok(out)
    }

    /// The set of every subset of every member of `a` — the accumulation
    /// operation that levels are built from.
    pub fn pot(&mut self, a: HfSet) -> Result<HfSet, Error> {
        let mut collected = Vec::new();
        for c in Vec::from(self.elems(a)) {
            collected.extend(self.subsets_of(c)?);
        }
        collected.sort_by_key(|x| x.id());
        collected.dedup();
        Ok(self.set_of(collected))
    }

    /// Whether `h` is a history: every element `x` equals `pot(x ∩ h)`.
    fn is_history(&mut self, h: HfSet) -> Result<bool, Error> {
        for x in Vec::from(self.elems(h)) {
            let below: Vec<_> =
                self.elems(h).iter().copied().filter(|&z| self.member(z, x)).collect();
            let w = self.set_of(below);
            if self.pot(w)? != x {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `s` is a level: `pot` of some history. The search mirrors
    /// the fevel search on the function side — candidate histories draw
    /// their elements from the transitive closure of `s`'s elements, with
    /// at most `|s| + 1` of them.
    pub fn is_level(&mut self, s: HfSet) -> Result<bool, Error> {
        let mut closure: Vec<HfSet> = self.elems(s).into();
        let mut i = 0;
        while i < closure.len() {
            for x in Vec::from(self.elems(closure[i])) {
                if !closure.contains(&x) {
                    closure.push(x);
                }
            }
            if closure.len() > POT_MEMBER_CAP {
                return Err(Error::CapExceeded("element closure larger than 16"));
            }
            i += 1;
        }
        let max_members = self.card(s) + 1;
        for mask in 0u32..(1u32 << closure.len()) {
            if (mask.count_ones() as usize) > max_members {
                continue;
            }
            let members: Vec<_> = closure
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            let h = self.set_of(members);
            if self.is_history(h)? && self.pot(h)? == s {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The cumulative stage `V_k` as a set object: all sets of rank below
    /// `k`. `V_5` has 65536 elements and is the practical ceiling.
    pub fn cumulative_stage(&mut self, k: u32) -> Result<HfSet, Error> {
        let mut v = self.empty();
        for _ in 0..k {
            let next = self.subsets_of(v)?;
            v = self.set_of(next);
        }
        Ok(v)
    }

    /// All sets of rank at most `k`, in canonical order.
    pub fn rank_at_most(&mut self, k: u32) -> Result<Vec<HfSet>, Error> {
        let v = self.cumulative_stage(k + 1)?;
        Ok(self.elems(v).into())
    }

    /// The least level that includes `a` — the stage `V_rank(a)`.
    pub fn lev_of(&mut self, a: HfSet) -> Result<HfSet, Error> {
        self.cumulative_stage(self.set_rank(a))
    }

    /// The two-valued application table: `{∅}` when `x ∈ y`, `∅` otherwise.
    /// The empty set doubles as the token `0` and `{∅}` as the token `1`.
    pub fn chi_app(&mut self, y: HfSet, x: HfSet) -> HfSet {
        if self.member(x, y) {
            let zero = self.empty();
            self.set_of([zero])
        } else {
            self.empty()
        }
    }
}
