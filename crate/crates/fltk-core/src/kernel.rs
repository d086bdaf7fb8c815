//! The kernel: an interned universe of hereditarily finite partial functions.
//!
//! A hereditarily finite partial function is a finite graph of
//! argument/value pairs whose arguments and values are again such functions;
//! the base case is the empty function `0`, defined nowhere. The *field* of
//! a function collects its arguments and values together.
//!
//! [`FunUniverse`] owns every function ever constructed. Graphs are kept in
//! canonical order and hash-consed, so two functions with the same graph are
//! the same node and extensional equality is handle equality — an `O(1)`
//! comparison. Handles ([`HfFun`]) are issued in construction order and a
//! graph can only mention handles issued before it, which makes
//! well-foundedness a structural invariant rather than a runtime check.
//!
//! Construction takes `&mut FunUniverse` and reads take `&FunUniverse`, so
//! the borrow checker enforces the concurrency contract: share the universe
//! freely for reading, confine construction to one thread at a time.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::Error;

/// Handle to an interned hereditarily finite partial function.
///
/// Handles are scoped to the [`FunUniverse`] that issued them; equality of
/// handles from the same universe is extensional equality of the functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HfFun(u32);

impl HfFun {
    /// The stable interning identifier of this function.
    pub fn id(self) -> u32 {
        self.0
    }
}

struct Node {
    /// Graph entries, sorted by canonical order of the arguments.
    entries: Box<[(HfFun, HfFun)]>,
    /// Construction stage: 1 for the empty function, otherwise one more
    /// than the largest rank in the field.
    rank: u32,
}

/// Default ceiling on the number of interned nodes.
///
/// The CLI exposes this as the `FLTK_MAX_NODES` environment variable; going
/// past the ceiling is treated as an internal invariant breach and panics.
pub const DEFAULT_NODE_CAP: usize = 10_000_000;

/// The interning arena for hereditarily finite partial functions.
pub struct FunUniverse {
    nodes: Vec<Node>,
    table: BTreeMap<Box<[(u32, u32)]>, u32>,
    node_cap: usize,
}

impl Default for FunUniverse {
    fn default() -> Self {
        Self::new()
    }
}

impl FunUniverse {
    /// Creates a universe containing only the empty function.
    pub fn new() -> Self {
        Self::with_node_cap(DEFAULT_NODE_CAP)
    }

    /// Creates a universe with an explicit ceiling on interned nodes.
    pub fn with_node_cap(node_cap: usize) -> Self {
        let mut u = FunUniverse { nodes: Vec::new(), table: BTreeMap::new(), node_cap };
        let null = u.intern(Vec::new());
        debug_assert_eq!(null.0, 0);
        u
    }

    /// The empty function `0`, defined on no argument.
    pub fn null(&self) -> HfFun {
        HfFun(0)
    }

    /// Number of functions interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when only the empty function has been interned.
    pub fn is_empty(&self) -> bool {
        self.nodes.len() <= 1
    }

    /// Interns a canonical (sorted, deduplicated, functional) entry list.
    fn intern(&mut self, entries: Vec<(HfFun, HfFun)>) -> HfFun {
        let key: Box<[(u32, u32)]> = entries.iter().map(|&(a, v)| (a.0, v.0)).collect();
        if let Some(&id) = self.table.get(&key) {
            return HfFun(id);
        }
        if self.nodes.len() >= self.node_cap {
            panic!("interning table exceeded its node cap of {} nodes", self.node_cap);
        }
        let rank = 1 + entries
            .iter()
            .flat_map(|&(a, v)| [a, v])
            .map(|x| self.nodes[x.0 as usize].rank)
            .max()
            .unwrap_or(0);
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { entries: entries.into_boxed_slice(), rank });
        self.table.insert(key, id);
        HfFun(id)
    }

    /// Builds the function with the given argument/value entries.
    ///
    /// Entries may arrive in any order and may repeat; repeats of the same
    /// pair collapse. Two entries that give one argument different values
    /// are a [`Error::FunctionalityViolation`]. An entry mentioning a handle
    /// this universe never issued is a [`Error::CycleViolation`], since a
    /// forward reference is the only way a cycle could enter.
    pub fn make(
        &mut self,
        entries: impl IntoIterator<Item = (HfFun, HfFun)>,
    ) -> Result<HfFun, Error> {
        let mut entries: Vec<(HfFun, HfFun)> = entries.into_iter().collect();
        let issued = self.nodes.len() as u32;
        if entries.iter().any(|&(a, v)| a.0 >= issued || v.0 >= issued) {
            return Err(Error::CycleViolation);
        }
        entries.sort_by(|x, y| self.compare(x.0, y.0).then_with(|| self.compare(x.1, y.1)));
        entries.dedup();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::FunctionalityViolation);
        }
        Ok(self.intern(entries))
    }

    /// Builds the partial identity defined exactly on `xs` — the funset
    /// whose field is `xs`. Never fails: identity entries cannot conflict.
    pub fn funset_of(&mut self, xs: impl IntoIterator<Item = HfFun>) -> HfFun {
        let entries: Vec<_> = xs.into_iter().map(|x| (x, x)).collect();
        self.make(entries).expect("identity entries are functional")
    }

    /// Builds the function `x ↦ oracle(x)` over the support, dropping
    /// arguments where the oracle answers `None`.
    ///
    /// The oracle is consulted once per support occurrence; answering the
    /// same argument twice with different values is a
    /// [`Error::FunctionalityViolation`].
    pub fn comprehend(
        &mut self,
        support: impl IntoIterator<Item = HfFun>,
        mut oracle: impl FnMut(HfFun) -> Option<HfFun>,
    ) -> Result<HfFun, Error> {
        let entries: Vec<_> =
            support.into_iter().filter_map(|x| oracle(x).map(|y| (x, y))).collect();
        self.make(entries)
    }

    /// The graph of `f`: argument/value entries in canonical order.
    pub fn graph(&self, f: HfFun) -> &[(HfFun, HfFun)] {
        &self.nodes[f.0 as usize].entries
    }

    /// Applies `f` to `x`. An undefined application is a normal result,
    /// not an error.
    pub fn apply(&self, f: HfFun, x: HfFun) -> Option<HfFun> {
        self.graph(f).iter().find(|&&(a, _)| a == x).map(|&(_, v)| v)
    }

    /// The arguments of `f`, in canonical order.
    pub fn arguments(&self, f: HfFun) -> Vec<HfFun> {
        self.graph(f).iter().map(|&(a, _)| a).collect()
    }

    /// The values of `f`, in canonical order without repeats.
    pub fn values(&self, f: HfFun) -> Vec<HfFun> {
        let mut vals: Vec<_> = self.graph(f).iter().map(|&(_, v)| v).collect();
        self.sort_canonical(&mut vals);
        vals.dedup();
        vals
    }

    /// The field of `f`: arguments and values together, in canonical order.
    pub fn field(&self, f: HfFun) -> Vec<HfFun> {
        let mut xs: Vec<_> = self.graph(f).iter().flat_map(|&(a, v)| [a, v]).collect();
        self.sort_canonical(&mut xs);
        xs.dedup();
        xs
    }

    /// Field membership: `g` is an argument or a value of `f`.
    pub fn fun_in(&self, g: HfFun, f: HfFun) -> bool {
        self.graph(f).iter().any(|&(a, v)| a == g || v == g)
    }

    /// Field inclusion: every member of `g`'s field is in `f`'s field.
    pub fn fun_subeq(&self, g: HfFun, f: HfFun) -> bool {
        self.field(g).into_iter().all(|x| self.fun_in(x, f))
    }

    /// True when `f` is a funset: a partial identity, `f(x) = x` wherever
    /// defined. Funsets stand in for sets on the function side.
    pub fn is_funset(&self, f: HfFun) -> bool {
        self.graph(f).iter().all(|&(a, v)| a == v)
    }

    /// Construction stage of `f`: 1 for the empty function, otherwise one
    /// more than the largest rank in its field. Stored at interning time,
    /// so this is an `O(1)` read.
    pub(crate) fn rank(&self, f: HfFun) -> u32 {
        self.nodes[f.0 as usize].rank
    }

    /// The canonical strict total order.
    ///
    /// Functions compare by rank first, then graph length, then entry lists
    /// lexicographically with arguments taking precedence over values. The
    /// order depends only on graph structure — never on interning ids — so
    /// sorted output is identical across runs and construction orders.
    pub fn compare(&self, a: HfFun, b: HfFun) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let (na, nb) = (&self.nodes[a.0 as usize], &self.nodes[b.0 as usize]);
        na.rank
            .cmp(&nb.rank)
            .then_with(|| na.entries.len().cmp(&nb.entries.len()))
            .then_with(|| {
                for (&(xa, va), &(xb, vb)) in na.entries.iter().zip(nb.entries.iter()) {
                    let c = self.compare(xa, xb).then_with(|| self.compare(va, vb));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }

    /// Sorts a slice of functions into canonical order.
    pub fn sort_canonical(&self, xs: &mut [HfFun]) {
        xs.sort_by(|&a, &b| self.compare(a, b));
    }
}
