//! Finite model checking for the function-theoretic and set-theoretic
//! axiom systems.
//!
//! Three structure shapes are supported: one-sorted application
//! structures ([`FinStructure`]), two-sorted stage structures
//! ([`FstStructure`]), and membership structures
//! ([`MembershipStructure`]). Axioms are identified by [`AxiomId`] and
//! evaluated under standard second-order semantics: second-order
//! function variables range over all partial maps of the finite
//! domain, predicate variables over all subsets.
//!
//! Defined predicates — funset, history, fevel on the function side;
//! potentiality, history, level on the set side — are expanded
//! definitionally inside the structure. Term-forming operators such as
//! funset abstraction denote only when some element of the structure
//! has exactly the described behaviour; equations whose terms fail to
//! denote are false.
//!
//! The sweeps enumerate every structure of a given size, count models,
//! group them into isomorphism classes, and attribute each failure to
//! the first axiom refuted in the theory's listed order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hierarchy::{enumerate_stage, idx, StageIndex};
use crate::kernel::{FunUniverse, HfFun};
use crate::sets::{HfSet, SetUniverse};

/// Cap on the confining set of a second-order quantifier: the field of
/// the bounding function for FunComp and FunSupercomp, the
/// found-before set for FunSpec, and the whole domain for Sep and
/// Unbounded. Above this the map space is refused as [`Error::CapExceeded`].
pub const SECOND_ORDER_CAP: usize = 4;

/// Largest size accepted by [`enumerate_flt_models`] (table space
/// `(n+1)^(n²)` reaches 262,144 at three).
pub const FLT_SWEEP_CAP: usize = 3;

/// Largest size accepted by [`enumerate_fst_models`] (the stage sort
/// matches the function sort, so the space is
/// `(n+1)^(n²) · 2^(n²) · 2^(n²)`).
pub const FST_SWEEP_CAP: usize = 2;

/// Largest size accepted by [`enumerate_lt_models`] (relation space
/// `2^(n²)` reaches 65,536 at four).
pub const LT_SWEEP_CAP: usize = 4;

/// Identifies one evaluable axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomId {
    /// Functions with the same mapping behaviour are identical.
    FunExt,
    /// The before relation on stages is transitive.
    FunOrd,
    /// Every function is found at some stage.
    FunStage,
    /// Everything in a function's field is found strictly before it.
    FunPri,
    /// Every map confined below a stage is found at that stage.
    FunSpec,
    /// Every function's field is included in some fevel.
    FunStrat,
    /// Every map confined by a function's field exists as a function.
    FunComp,
    /// Everything is in some field.
    FunEndless,
    /// Some function witnesses an endless descent within its field.
    FunInfinity,
    /// Every map whose support is confined by a field exists.
    FunSupercomp,
    /// Sets with the same members are identical.
    Ext,
    /// Every definable subset of a set exists.
    Sep,
    /// Every set is included in some level.
    Strat,
    /// Every set is a member of something.
    Endless,
    /// Some nonempty set witnesses an endless descent within itself.
    Inf,
    /// Every total map is bounded on every set.
    Unbounded,
    /// Application takes only two distinct token values.
    ChiRange,
}

impl AxiomId {
    /// Stable display name, used by reports.
    pub fn name(self) -> &'static str {
        match self {
            AxiomId::FunExt => "FunExt",
            AxiomId::FunOrd => "FunOrd",
            AxiomId::FunStage => "FunStage",
            AxiomId::FunPri => "FunPri",
            AxiomId::FunSpec => "FunSpec",
            AxiomId::FunStrat => "FunStrat",
            AxiomId::FunComp => "FunComp",
            AxiomId::FunEndless => "FunEndless",
            AxiomId::FunInfinity => "FunInfinity",
            AxiomId::FunSupercomp => "FunSupercomp",
            AxiomId::Ext => "Ext",
            AxiomId::Sep => "Sep",
            AxiomId::Strat => "Strat",
            AxiomId::Endless => "Endless",
            AxiomId::Inf => "Inf",
            AxiomId::Unbounded => "Unbounded",
            AxiomId::ChiRange => "ChiRange",
        }
    }
}

/// A checkable axiom system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    /// Functional level theory: FunExt, FunStrat, FunComp.
    Flt,
    /// Functional stage theory: FunExt, FunOrd, FunStage, FunPri, FunSpec.
    Fst,
    /// Level theory: Ext, Sep, Strat.
    Lt,
}

impl Theory {
    /// The theory's axioms in evaluation (and failure-attribution) order.
    pub fn axioms(self) -> &'static [AxiomId] {
        match self {
            Theory::Flt => &[AxiomId::FunExt, AxiomId::FunStrat, AxiomId::FunComp],
            Theory::Fst => &[
                AxiomId::FunExt,
                AxiomId::FunOrd,
                AxiomId::FunStage,
                AxiomId::FunPri,
                AxiomId::FunSpec,
            ],
            Theory::Lt => &[AxiomId::Ext, AxiomId::Sep, AxiomId::Strat],
        }
    }
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask & (1 << i) != 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 8, "isomorphism search is capped at 8 elements");
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// A one-sorted application structure: a finite domain with a partial
/// binary application table, realizing functionality by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinStructure {
    size: usize,
    /// Row-major; `size` is the undefined sentinel.
    table: Vec<usize>,
}

impl FinStructure {
    /// Builds a structure of the given positive size from an
    /// application map.
    pub fn new(size: usize, app: impl Fn(usize, usize) -> Option<usize>) -> Self {
        assert!(size > 0, "structures have positive size");
        let mut table = vec![size; size * size];
        for f in 0..size {
            for x in 0..size {
                if let Some(y) = app(f, x) {
                    assert!(y < size, "application value out of range");
                    table[f * size + x] = y;
                }
            }
        }
        FinStructure { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `f` applied to `x`, if defined.
    pub fn app(&self, f: usize, x: usize) -> Option<usize> {
        let y = self.table[f * self.size + x];
        (y < self.size).then_some(y)
    }

    fn rows_equal(&self, f: usize, g: usize) -> bool {
        let n = self.size;
        self.table[f * n..(f + 1) * n] == self.table[g * n..(g + 1) * n]
    }

    fn row_is(&self, g: usize, p: &[Option<usize>]) -> bool {
        (0..self.size).all(|v| self.app(g, v) == p[v])
    }

    /// Field masks: bit `x` of entry `f` says `x` is an argument or a
    /// value of `f`.
    fn field_masks(&self) -> Vec<u32> {
        (0..self.size)
            .map(|f| {
                let mut m = 0u32;
                for x in 0..self.size {
                    if let Some(y) = self.app(f, x) {
                        m |= 1 << x;
                        m |= 1 << y;
                    }
                }
                m
            })
            .collect()
    }

    /// Does `t` behave as the funset over exactly the elements in
    /// `mask` — identity there, undefined elsewhere?
    fn behaves_as_funset(&self, t: usize, mask: u32) -> bool {
        (0..self.size).all(|v| {
            let expect = (mask & (1 << v) != 0).then_some(v);
            self.app(t, v) == expect
        })
    }

    /// Fevel flags under the definitional expansion: `s` is a fevel
    /// when some history `h` has `s` behaving as the accumulation of
    /// `h` — the funset of everything whose field is included in the
    /// field of some member of `h`.
    fn fevel_flags(&self) -> Vec<bool> {
        let n = self.size;
        let fm = self.field_masks();
        // subeq_to[g]: mask of y with field(y) ⊆ field(g).
        let subeq_to: Vec<u32> = (0..n)
            .map(|g| {
                let mut m = 0u32;
                for y in 0..n {
                    if fm[y] & !fm[g] == 0 {
                        m |= 1 << y;
                    }
                }
                m
            })
            .collect();
        let pot_from = |mask: u32| -> u32 {
            let mut m = 0u32;
            for g in bits(mask) {
                m |= subeq_to[g];
            }
            m
        };
        let is_history = |h: usize| -> bool {
            bits(fm[h]).all(|x| {
                let zh = fm[h] & fm[x];
                // The inner funset must denote in the structure, and x
                // itself must behave as its accumulation.
                (0..n).any(|w| self.behaves_as_funset(w, zh))
                    && self.behaves_as_funset(x, pot_from(zh))
            })
        };
        let mut fev = vec![false; n];
        for (h, &fmh) in fm.iter().enumerate() {
            if is_history(h) {
                let pm = pot_from(fmh);
                for (s, flag) in fev.iter_mut().enumerate() {
                    if self.behaves_as_funset(s, pm) {
                        *flag = true;
                    }
                }
            }
        }
        fev
    }

    /// Evaluates one axiom; non-function-sort axioms are
    /// [`Error::AxiomMismatch`], oversized second-order sweeps
    /// [`Error::CapExceeded`].
    pub fn eval_axiom(&self, a: AxiomId) -> Result<bool, Error> {
        let n = self.size;
        match a {
            AxiomId::FunExt => Ok((0..n)
                .all(|f| (f + 1..n).all(|g| !self.rows_equal(f, g)))),
            AxiomId::FunStrat => {
                let fm = self.field_masks();
                let fev = self.fevel_flags();
                Ok((0..n).all(|a| (0..n).any(|s| fev[s] && fm[a] & !fm[s] == 0)))
            }
            AxiomId::FunComp => self.comprehension_holds(false),
            AxiomId::FunEndless => {
                let fm = self.field_masks();
                Ok((0..n).all(|s| (0..n).any(|t| fm[t] & (1 << s) != 0)))
            }
            AxiomId::FunInfinity => {
                let fm = self.field_masks();
                Ok((0..n).any(|s| {
                    fm[s] != 0
                        && bits(fm[s])
                            .all(|q| bits(fm[s]).any(|r| fm[r] & (1 << q) != 0))
                }))
            }
            AxiomId::FunSupercomp => self.comprehension_holds(true),
            AxiomId::ChiRange => Ok((0..n).any(|z| {
                (0..n).any(|o| {
                    z != o
                        && (0..n).all(|f| {
                            (0..n).all(|x| {
                                let y = self.app(f, x);
                                y == Some(z) || y == Some(o)
                            })
                        })
                })
            })),
            _ => Err(Error::AxiomMismatch),
        }
    }

    /// Shared body of FunComp and FunSupercomp: every partial map
    /// whose support (and, unless `wide`, whose values too) is
    /// confined by some element's field must be realized by an
    /// element's whole row.
    fn comprehension_holds(&self, wide: bool) -> Result<bool, Error> {
        let n = self.size;
        let fm = self.field_masks();
        for &fmf in &fm {
            let support: Vec<usize> = bits(fmf).collect();
            if support.len() > SECOND_ORDER_CAP {
                return Err(Error::CapExceeded(
                    "second-order sweep over a field larger than 4",
                ));
            }
            let values: Vec<usize> = if wide {
                (0..n).collect()
            } else {
                support.clone()
            };
            let mut digits = vec![0usize; support.len()];
            loop {
                let mut p: Vec<Option<usize>> = vec![None; n];
                for (pos, &d) in digits.iter().enumerate() {
                    if d > 0 {
                        p[support[pos]] = Some(values[d - 1]);
                    }
                }
                if !(0..n).any(|g| self.row_is(g, &p)) {
                    return Ok(false);
                }
                if !advance(&mut digits, values.len() + 1) {
                    break;
                }
            }
        }
        Ok(true)
    }

    /// Conjunction of a theory's axioms; only the one-sorted theory
    /// applies to this shape.
    pub fn satisfies(&self, t: Theory) -> Result<bool, Error> {
        match t {
            Theory::Flt => {
                for &a in t.axioms() {
                    if !self.eval_axiom(a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(Error::AxiomMismatch),
        }
    }

    /// Brute-force isomorphism: some bijection carries one application
    /// table onto the other.
    pub fn isomorphic_to(&self, other: &FinStructure) -> bool {
        if self.size != other.size {
            return false;
        }
        permutations(self.size).into_iter().any(|p| {
            (0..self.size).all(|f| {
                (0..self.size).all(|x| self.app(f, x).map(|y| p[y]) == other.app(p[f], p[x]))
            })
        })
    }
}

/// A two-sorted stage structure: an application table over the
/// function sort, a before relation on the stage sort, and a found-at
/// relation between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FstStructure {
    fun_size: usize,
    stage_size: usize,
    table: Vec<usize>,
    before: Vec<bool>,
    found_at: Vec<bool>,
}

impl FstStructure {
    pub fn new(
        fun_size: usize,
        stage_size: usize,
        app: impl Fn(usize, usize) -> Option<usize>,
        before: impl Fn(usize, usize) -> bool,
        found_at: impl Fn(usize, usize) -> bool,
    ) -> Self {
        assert!(fun_size > 0 && stage_size > 0, "both sorts are nonempty");
        let mut table = vec![fun_size; fun_size * fun_size];
        for f in 0..fun_size {
            for x in 0..fun_size {
                if let Some(y) = app(f, x) {
                    assert!(y < fun_size, "application value out of range");
                    table[f * fun_size + x] = y;
                }
            }
        }
        let before: Vec<bool> = (0..stage_size * stage_size)
            .map(|i| before(i / stage_size, i % stage_size))
            .collect();
        let found_at: Vec<bool> = (0..fun_size * stage_size)
            .map(|i| found_at(i / stage_size, i % stage_size))
            .collect();
        FstStructure {
            fun_size,
            stage_size,
            table,
            before,
            found_at,
        }
    }

    pub fn fun_size(&self) -> usize {
        self.fun_size
    }

    pub fn stage_size(&self) -> usize {
        self.stage_size
    }

    pub fn app(&self, f: usize, x: usize) -> Option<usize> {
        let y = self.table[f * self.fun_size + x];
        (y < self.fun_size).then_some(y)
    }

    pub fn before(&self, r: usize, s: usize) -> bool {
        self.before[r * self.stage_size + s]
    }

    pub fn found_at(&self, f: usize, s: usize) -> bool {
        self.found_at[f * self.stage_size + s]
    }

    fn found_before(&self, x: usize, s: usize) -> bool {
        (0..self.stage_size).any(|r| self.found_at(x, r) && self.before(r, s))
    }

    fn field_masks(&self) -> Vec<u32> {
        (0..self.fun_size)
            .map(|f| {
                let mut m = 0u32;
                for x in 0..self.fun_size {
                    if let Some(y) = self.app(f, x) {
                        m |= 1 << x;
                        m |= 1 << y;
                    }
                }
                m
            })
            .collect()
    }

    fn row_is(&self, g: usize, p: &[Option<usize>]) -> bool {
        (0..self.fun_size).all(|v| self.app(g, v) == p[v])
    }

    /// Evaluates one axiom; anything outside the two-sorted theory is
    /// [`Error::AxiomMismatch`].
    pub fn eval_axiom(&self, a: AxiomId) -> Result<bool, Error> {
        let n = self.fun_size;
        let m = self.stage_size;
        match a {
            AxiomId::FunExt => {
                let eq = |f: usize, g: usize| {
                    self.table[f * n..(f + 1) * n] == self.table[g * n..(g + 1) * n]
                };
                Ok((0..n).all(|f| (f + 1..n).all(|g| !eq(f, g))))
            }
            AxiomId::FunOrd => Ok((0..m).all(|r| {
                (0..m).all(|s| {
                    (0..m).all(|t| !(self.before(r, s) && self.before(s, t)) || self.before(r, t))
                })
            })),
            AxiomId::FunStage => Ok((0..n).all(|f| (0..m).any(|s| self.found_at(f, s)))),
            AxiomId::FunPri => {
                let fm = self.field_masks();
                Ok((0..m).all(|s| {
                    (0..n).all(|f| {
                        !self.found_at(f, s) || bits(fm[f]).all(|x| self.found_before(x, s))
                    })
                }))
            }
            AxiomId::FunSpec => {
                for s in 0..m {
                    let below: Vec<usize> =
                        (0..n).filter(|&x| self.found_before(x, s)).collect();
                    if below.len() > SECOND_ORDER_CAP {
                        return Err(Error::CapExceeded(
                            "second-order sweep over a found-before set larger than 4",
                        ));
                    }
                    let mut digits = vec![0usize; below.len()];
                    loop {
                        let mut p: Vec<Option<usize>> = vec![None; n];
                        for (pos, &d) in digits.iter().enumerate() {
                            if d > 0 {
                                p[below[pos]] = Some(below[d - 1]);
                            }
                        }
                        if !(0..n).any(|g| self.row_is(g, &p) && self.found_at(g, s)) {
                            return Ok(false);
                        }
                        if !advance(&mut digits, below.len() + 1) {
                            break;
                        }
                    }
                }
                Ok(true)
            }
            _ => Err(Error::AxiomMismatch),
        }
    }

    /// Conjunction of a theory's axioms; only the two-sorted theory
    /// applies to this shape.
    pub fn satisfies(&self, t: Theory) -> Result<bool, Error> {
        match t {
            Theory::Fst => {
                for &a in t.axioms() {
                    if !self.eval_axiom(a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(Error::AxiomMismatch),
        }
    }

    /// Brute-force isomorphism with independent bijections per sort.
    pub fn isomorphic_to(&self, other: &FstStructure) -> bool {
        if self.fun_size != other.fun_size || self.stage_size != other.stage_size {
            return false;
        }
        for fp in permutations(self.fun_size) {
            for sp in permutations(self.stage_size) {
                let app_ok = (0..self.fun_size).all(|f| {
                    (0..self.fun_size)
                        .all(|x| self.app(f, x).map(|y| fp[y]) == other.app(fp[f], fp[x]))
                });
                let before_ok = (0..self.stage_size).all(|r| {
                    (0..self.stage_size).all(|s| self.before(r, s) == other.before(sp[r], sp[s]))
                });
                let found_ok = (0..self.fun_size).all(|f| {
                    (0..self.stage_size)
                        .all(|s| self.found_at(f, s) == other.found_at(fp[f], sp[s]))
                });
                if app_ok && before_ok && found_ok {
                    return true;
                }
            }
        }
        false
    }
}

/// A membership structure: a finite domain with a binary membership
/// relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipStructure {
    size: usize,
    /// Indexed `y * size + x`: `x` is a member of `y`.
    elem: Vec<bool>,
}

impl MembershipStructure {
    pub fn new(size: usize, member: impl Fn(usize, usize) -> bool) -> Self {
        assert!(size > 0, "structures have positive size");
        let elem = (0..size * size)
            .map(|i| member(i % size, i / size))
            .collect();
        MembershipStructure { size, elem }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Whether `x ∈ y`.
    pub fn member(&self, x: usize, y: usize) -> bool {
        self.elem[y * self.size + x]
    }

    fn member_mask(&self, y: usize) -> u32 {
        let mut m = 0u32;
        for x in 0..self.size {
            if self.member(x, y) {
                m |= 1 << x;
            }
        }
        m
    }

    fn behaves_as_set(&self, b: usize, mask: u32) -> bool {
        self.member_mask(b) == mask
    }

    /// Level flags under the definitional expansion: `s` is a level
    /// when it behaves as the accumulation of some history — the set
    /// of every subset of every member.
    fn level_flags(&self) -> Vec<bool> {
        let n = self.size;
        let mm: Vec<u32> = (0..n).map(|y| self.member_mask(y)).collect();
        let subeq_to: Vec<u32> = (0..n)
            .map(|c| {
                let mut m = 0u32;
                for x in 0..n {
                    if mm[x] & !mm[c] == 0 {
                        m |= 1 << x;
                    }
                }
                m
            })
            .collect();
        let pot_from = |mask: u32| -> u32 {
            let mut m = 0u32;
            for c in bits(mask) {
                m |= subeq_to[c];
            }
            m
        };
        let is_history = |h: usize| -> bool {
            bits(mm[h]).all(|x| {
                let xh = mm[x] & mm[h];
                (0..n).any(|w| self.behaves_as_set(w, xh))
                    && self.behaves_as_set(x, pot_from(xh))
            })
        };
        let mut lev = vec![false; n];
        for (h, &mmh) in mm.iter().enumerate() {
            if is_history(h) {
                let pm = pot_from(mmh);
                for (s, flag) in lev.iter_mut().enumerate() {
                    if self.behaves_as_set(s, pm) {
                        *flag = true;
                    }
                }
            }
        }
        lev
    }

    /// Evaluates one axiom; non-membership axioms are
    /// [`Error::AxiomMismatch`], and second-order sweeps over domains
    /// larger than [`SECOND_ORDER_CAP`] are [`Error::CapExceeded`].
    pub fn eval_axiom(&self, a: AxiomId) -> Result<bool, Error> {
        let n = self.size;
        match a {
            AxiomId::Ext => Ok((0..n).all(|a| {
                (a + 1..n).all(|b| self.member_mask(a) != self.member_mask(b))
            })),
            AxiomId::Sep => {
                if n > SECOND_ORDER_CAP {
                    return Err(Error::CapExceeded(
                        "second-order sweep over a domain larger than 4",
                    ));
                }
                for pred in 0u32..1 << n {
                    for a in 0..n {
                        let want = self.member_mask(a) & pred;
                        if !(0..n).any(|b| self.behaves_as_set(b, want)) {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            AxiomId::Strat => {
                let lev = self.level_flags();
                Ok((0..n).all(|a| {
                    (0..n).any(|s| lev[s] && self.member_mask(a) & !self.member_mask(s) == 0)
                }))
            }
            AxiomId::Endless => Ok((0..n).all(|s| (0..n).any(|t| self.member(s, t)))),
            AxiomId::Inf => Ok((0..n).any(|s| {
                let ms = self.member_mask(s);
                ms != 0
                    && bits(ms).all(|q| bits(ms).any(|r| self.member(q, r)))
            })),
            AxiomId::Unbounded => {
                if n > SECOND_ORDER_CAP {
                    return Err(Error::CapExceeded(
                        "second-order sweep over a domain larger than 4",
                    ));
                }
                let mut digits = vec![0usize; n];
                loop {
                    // digits is a total map x ↦ digits[x].
                    let bounded = (0..n).all(|a| {
                        (0..n).any(|s| {
                            bits(self.member_mask(a)).all(|x| self.member(digits[x], s))
                        })
                    });
                    if !bounded {
                        return Ok(false);
                    }
                    if !advance(&mut digits, n) {
                        break;
                    }
                }
                Ok(true)
            }
            _ => Err(Error::AxiomMismatch),
        }
    }

    /// Conjunction of a theory's axioms; only the membership theory
    /// applies to this shape.
    pub fn satisfies(&self, t: Theory) -> Result<bool, Error> {
        match t {
            Theory::Lt => {
                for &a in t.axioms() {
                    if !self.eval_axiom(a)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Err(Error::AxiomMismatch),
        }
    }

    /// Brute-force isomorphism of membership relations.
    pub fn isomorphic_to(&self, other: &MembershipStructure) -> bool {
        if self.size != other.size {
            return false;
        }
        permutations(self.size).into_iter().any(|p| {
            (0..self.size)
                .all(|x| (0..self.size).all(|y| self.member(x, y) == other.member(p[x], p[y])))
        })
    }
}

/// Outcome of an exhaustive sweep over all structures of one size:
/// every model grouped into isomorphism classes, plus a count of
/// failures attributed to the first refuted axiom.
#[derive(Clone, Debug)]
pub struct SweepReport<S> {
    pub size: usize,
    pub candidates: u64,
    /// Each inner vector is one isomorphism class of models, in
    /// enumeration order.
    pub classes: Vec<Vec<S>>,
    /// Pairs `(axiom, count)` in the theory's evaluation order; counts
    /// sum with the model count to `candidates`.
    pub per_axiom_failures: Vec<(AxiomId, u64)>,
}

impl<S> SweepReport<S> {
    /// Total number of model structures (not classes).
    pub fn model_count(&self) -> u64 {
        self.classes.iter().map(|c| c.len() as u64).sum()
    }

    /// One representative per isomorphism class.
    pub fn representatives(&self) -> Vec<&S> {
        self.classes.iter().map(|c| &c[0]).collect()
    }
}

fn classify<S>(classes: &mut Vec<Vec<S>>, s: S, iso: impl Fn(&S, &S) -> bool) {
    for class in classes.iter_mut() {
        if iso(&class[0], &s) {
            class.push(s);
            return;
        }
    }
    classes.push(vec![s]);
}

/// Enumerates every application table of the given size and checks the
/// one-sorted theory, grouping models by isomorphism. Sizes above
/// [`FLT_SWEEP_CAP`] are [`Error::CapExceeded`].
pub fn enumerate_flt_models(n: usize) -> Result<SweepReport<FinStructure>, Error> {
    assert!(n > 0, "structures have positive size");
    if n > FLT_SWEEP_CAP {
        return Err(Error::CapExceeded("application-table sweeps are capped at 3"));
    }
    let axioms = Theory::Flt.axioms();
    let mut failures: Vec<(AxiomId, u64)> = axioms.iter().map(|&a| (a, 0)).collect();
    let mut classes: Vec<Vec<FinStructure>> = Vec::new();
    let mut candidates = 0u64;
    let mut digits = vec![0usize; n * n];
    loop {
        candidates += 1;
        let s = FinStructure {
            size: n,
            table: digits.iter().map(|&d| if d == 0 { n } else { d - 1 }).collect(),
        };
        let mut failed = false;
        for (i, &a) in axioms.iter().enumerate() {
            if !s.eval_axiom(a)? {
                failures[i].1 += 1;
                failed = true;
                break;
            }
        }
        if !failed {
            classify(&mut classes, s, FinStructure::isomorphic_to);
        }
        if !advance(&mut digits, n + 1) {
            break;
        }
    }
    Ok(SweepReport {
        size: n,
        candidates,
        classes,
        per_axiom_failures: failures,
    })
}

/// Enumerates every two-sorted structure with `n` functions and `n`
/// stages and checks the stage theory. Sizes above [`FST_SWEEP_CAP`]
/// are [`Error::CapExceeded`].
pub fn enumerate_fst_models(n: usize) -> Result<SweepReport<FstStructure>, Error> {
    assert!(n > 0, "structures have positive size");
    if n > FST_SWEEP_CAP {
        return Err(Error::CapExceeded("stage-structure sweeps are capped at 2"));
    }
    let axioms = Theory::Fst.axioms();
    let mut failures: Vec<(AxiomId, u64)> = axioms.iter().map(|&a| (a, 0)).collect();
    let mut classes: Vec<Vec<FstStructure>> = Vec::new();
    let mut candidates = 0u64;
    let rel_bits = (n * n) as u32;
    let mut digits = vec![0usize; n * n];
    loop {
        for before_mask in 0u32..1 << rel_bits {
            for found_mask in 0u32..1 << rel_bits {
                candidates += 1;
                let s = FstStructure {
                    fun_size: n,
                    stage_size: n,
                    table: digits
                        .iter()
                        .map(|&d| if d == 0 { n } else { d - 1 })
                        .collect(),
                    before: (0..n * n).map(|i| before_mask & (1 << i) != 0).collect(),
                    found_at: (0..n * n).map(|i| found_mask & (1 << i) != 0).collect(),
                };
                let mut failed = false;
                for (i, &a) in axioms.iter().enumerate() {
                    if !s.eval_axiom(a)? {
                        failures[i].1 += 1;
                        failed = true;
                        break;
                    }
                }
                if !failed {
                    classify(&mut classes, s, FstStructure::isomorphic_to);
                }
            }
        }
        if !advance(&mut digits, n + 1) {
            break;
        }
    }
    Ok(SweepReport {
        size: n,
        candidates,
        classes,
        per_axiom_failures: failures,
    })
}

/// Enumerates every membership relation of the given size and checks
/// the level theory. Sizes above [`LT_SWEEP_CAP`] are
/// [`Error::CapExceeded`].
pub fn enumerate_lt_models(n: usize) -> Result<SweepReport<MembershipStructure>, Error> {
    assert!(n > 0, "structures have positive size");
    if n > LT_SWEEP_CAP {
        return Err(Error::CapExceeded("membership sweeps are capped at 4"));
    }
    let axioms = Theory::Lt.axioms();
    let mut failures: Vec<(AxiomId, u64)> = axioms.iter().map(|&a| (a, 0)).collect();
    let mut classes: Vec<Vec<MembershipStructure>> = Vec::new();
    let mut candidates = 0u64;
    let rel_bits = (n * n) as u32;
    for mask in 0u64..1 << rel_bits {
        candidates += 1;
        let s = MembershipStructure {
            size: n,
            elem: (0..n * n).map(|i| mask & (1 << i) != 0).collect(),
        };
        let mut failed = false;
        for (i, &a) in axioms.iter().enumerate() {
            if !s.eval_axiom(a)? {
                failures[i].1 += 1;
                failed = true;
                break;
            }
        }
        if !failed {
            classify(&mut classes, s, MembershipStructure::isomorphic_to);
        }
    }
    Ok(SweepReport {
        size: n,
        candidates,
        classes,
        per_axiom_failures: failures,
    })
}

/// The application structure of a whole hierarchy stage, elements in
/// canonical order. Stages are closed under application, so the table
/// never leaves the domain.
pub fn hierarchy_as_structure(
    u: &mut FunUniverse,
    s: StageIndex,
) -> Result<FinStructure, Error> {
    let elems = enumerate_stage(u, s)?;
    Ok(structure_of(u, &elems))
}

fn structure_of(u: &FunUniverse, elems: &[HfFun]) -> FinStructure {
    let n = elems.len();
    let mut table = vec![n; n * n];
    for f in 0..n {
        for x in 0..n {
            if let Some(y) = u.apply(elems[f], elems[x]) {
                if let Some(pos) = elems.iter().position(|&e| e == y) {
                    table[f * n + x] = pos;
                }
            }
        }
    }
    FinStructure { size: n, table }
}

/// The two-sorted structure of a hierarchy stage: stage elements
/// `0..s` stand for the construction stages in order, before is the
/// strict order, and a function is found at every stage from its
/// birth index onward — being found is cumulative.
pub fn hierarchy_as_fst(u: &mut FunUniverse, s: StageIndex) -> Result<FstStructure, Error> {
    let elems = enumerate_stage(u, s)?;
    let n = elems.len();
    let m = s.get() as usize;
    let base = structure_of(u, &elems);
    let birth: Vec<usize> = elems.iter().map(|&f| idx(u, f).get() as usize).collect();
    Ok(FstStructure::new(
        n,
        m,
        |f, x| base.app(f, x),
        |r, t| r < t,
        |f, k| birth[f] <= k + 1,
    ))
}

/// The membership structure over an explicit list of sets.
pub fn membership_structure_of(u: &SetUniverse, elems: &[HfSet]) -> MembershipStructure {
    MembershipStructure::new(elems.len(), |x, y| u.member(elems[x], elems[y]))
}

/// Rewrites a membership structure as an application structure over
/// two designated tokens: `app(y, x)` is `one` when `x ∈ y`, else
/// `zero`. Equal tokens are [`Error::DegenerateTokens`].
pub fn chi_translate(
    m: &MembershipStructure,
    zero: usize,
    one: usize,
) -> Result<FinStructure, Error> {
    if zero == one {
        return Err(Error::DegenerateTokens);
    }
    assert!(zero < m.size() && one < m.size(), "tokens must be elements");
    Ok(FinStructure::new(m.size(), |y, x| {
        Some(if m.member(x, y) { one } else { zero })
    }))
}

/// The two characteristic-token laws of a translated structure: the
/// zero token's row is constantly zero, and the one token's row is one
/// exactly at zero.
pub fn chi_clauses_hold(s: &FinStructure, zero: usize, one: usize) -> bool {
    (0..s.size()).all(|x| s.app(zero, x) == Some(zero))
        && (0..s.size()).all(|x| (s.app(one, x) == Some(one)) == (x == zero))
}
