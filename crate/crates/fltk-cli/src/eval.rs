//! Evaluation of surface expressions against a pair of universes.

use std::collections::BTreeMap;
use std::fmt;

use fltk_core::category::{cod, compose, dom};
use fltk_core::encodings::{apply_n, fst, ord_encode, pair, rel_holds, snd};
use fltk_core::hierarchy::{fevel_of, idx, is_fevel};
use fltk_core::translate::{to_fun, to_set};
use fltk_core::{FunUniverse, HfFun, HfSet, SetUniverse};

use crate::printer::{print_fun, print_set};
use crate::term::Term;

/// The result of evaluating an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Fun(HfFun),
    Set(HfSet),
    Bool(bool),
    Num(u64),
    /// The undefined-marker: an application outside the graph.
    Undef,
}

/// An evaluation failure. Parse errors are separate ([`crate::term::ParseError`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    Unbound(String),
    Arity { op: String, expected: &'static str, got: usize },
    Type { op: String, expected: &'static str },
    UnknownOp(String),
    Core(fltk_core::Error),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Unbound(name) => write!(f, "unbound name `{name}`"),
            EvalError::Arity { op, expected, got } => {
                write!(f, "`{op}` takes {expected}, got {got} argument(s)")
            }
            EvalError::Type { op, expected } => write!(f, "`{op}` expects {expected}"),
            EvalError::UnknownOp(name) => write!(f, "unknown operation `{name}`"),
            EvalError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<fltk_core::Error> for EvalError {
    fn from(e: fltk_core::Error) -> Self {
        EvalError::Core(e)
    }
}

/// Shared state for a sequence of evaluations: both universes plus the
/// REPL name bindings.
pub struct Session {
    pub funs: FunUniverse,
    pub sets: SetUniverse,
    env: BTreeMap<String, Value>,
}

impl Session {
    pub fn new() -> Self {
        Session {
            funs: FunUniverse::new(),
            sets: SetUniverse::new(),
            env: BTreeMap::new(),
        }
    }

    /// Both universes capped at `node_cap` interned nodes; breaching the
    /// cap is treated as an internal invariant breach (panic).
    pub fn with_node_cap(node_cap: usize) -> Self {
        Session {
            funs: FunUniverse::with_node_cap(node_cap),
            sets: SetUniverse::with_node_cap(node_cap),
            env: BTreeMap::new(),
        }
    }

    pub fn bind(&mut self, name: impl Into<String>, v: Value) {
        self.env.insert(name.into(), v);
    }

    /// Canonical text of a value.
    pub fn show(&self, v: Value) -> String {
        match v {
            Value::Fun(f) => print_fun(&self.funs, f),
            Value::Set(a) => print_set(&self.sets, a),
            Value::Bool(b) => b.to_string(),
            Value::Num(n) => n.to_string(),
            Value::Undef => "undef".into(),
        }
    }

    pub fn eval(&mut self, t: &Term) -> Result<Value, EvalError> {
        match t {
            Term::NullLit => Ok(Value::Fun(self.funs.null())),
            Term::Num(n) => Ok(Value::Num(*n)),
            Term::FunLit(entries) => {
                let mut graph = Vec::with_capacity(entries.len());
                for (a, v) in entries {
                    let (Some(ha), Some(hv)) = (
                        self.eval_fun(a, "graph entries", "functions on both sides of `->`")?,
                        self.eval_fun(v, "graph entries", "functions on both sides of `->`")?,
                    ) else {
                        return Ok(Value::Undef);
                    };
                    graph.push((ha, hv));
                }
                Ok(Value::Fun(self.funs.make(graph)?))
            }
            Term::FunsetLit(elems) => {
                let mut xs = Vec::with_capacity(elems.len());
                for e in elems {
                    match self.eval_fun(e, "funset braces", "function elements")? {
                        Some(h) => xs.push(h),
                        None => return Ok(Value::Undef),
                    }
                }
                Ok(Value::Fun(self.funs.funset_of(xs)))
            }
            Term::SetLit(elems) => {
                let mut xs = Vec::with_capacity(elems.len());
                for e in elems {
                    match self.eval(e)? {
                        Value::Set(a) => xs.push(a),
                        Value::Undef => return Ok(Value::Undef),
                        _ => {
                            return Err(EvalError::Type {
                                op: "set braces".into(),
                                expected: "set elements",
                            })
                        }
                    }
                }
                Ok(Value::Set(self.sets.set_of(xs)))
            }
            Term::Var(name) => self
                .env
                .get(name)
                .copied()
                .ok_or_else(|| EvalError::Unbound(name.clone())),
            Term::Call(op, args) => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    match self.eval(a)? {
                        Value::Undef => return Ok(Value::Undef),
                        v => vals.push(v),
                    }
                }
                self.call(op, &vals)
            }
        }
    }

    /// Evaluates a subterm that must denote a function; `None` means the
    /// undefined-marker, to be propagated.
    fn eval_fun(
        &mut self,
        t: &Term,
        op: &str,
        expected: &'static str,
    ) -> Result<Option<HfFun>, EvalError> {
        match self.eval(t)? {
            Value::Fun(h) => Ok(Some(h)),
            Value::Undef => Ok(None),
            _ => Err(EvalError::Type { op: op.into(), expected }),
        }
    }

    fn call(&mut self, op: &str, vals: &[Value]) -> Result<Value, EvalError> {
        let arity = |expected: &'static str| EvalError::Arity {
            op: op.into(),
            expected,
            got: vals.len(),
        };
        let want_fun = |v: Value, expected: &'static str| match v {
            Value::Fun(h) => Ok(h),
            _ => Err(EvalError::Type { op: op.into(), expected }),
        };
        let want_set = |v: Value, expected: &'static str| match v {
            Value::Set(a) => Ok(a),
            _ => Err(EvalError::Type { op: op.into(), expected }),
        };
        match op {
            "apply" => {
                if vals.len() < 2 {
                    return Err(arity("a function and at least one argument"));
                }
                let f = want_fun(vals[0], "function arguments")?;
                let args = vals[1..]
                    .iter()
                    .map(|&v| want_fun(v, "function arguments"))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(match apply_n(&self.funs, f, &args) {
                    Some(v) => Value::Fun(v),
                    None => Value::Undef,
                })
            }
            "dom" | "cod" | "fevel" | "rank" | "card" | "isfunset" | "isfevel" | "toset"
            | "levof" | "tofun" | "ord" | "fst" | "snd" => {
                let [v] = vals else {
                    return Err(arity("one argument"));
                };
                match op {
                    "dom" => {
                        let f = want_fun(*v, "a function")?;
                        Ok(Value::Fun(dom(&mut self.funs, f)))
                    }
                    "cod" => {
                        let f = want_fun(*v, "a function")?;
                        Ok(Value::Fun(cod(&mut self.funs, f)))
                    }
                    "fevel" => {
                        let f = want_fun(*v, "a function")?;
                        Ok(Value::Fun(fevel_of(&mut self.funs, f)?))
                    }
                    "rank" => match *v {
                        Value::Fun(f) => Ok(Value::Num(u64::from(idx(&self.funs, f).get()))),
                        Value::Set(a) => Ok(Value::Num(u64::from(self.sets.set_rank(a)))),
                        _ => Err(EvalError::Type { op: op.into(), expected: "a function or a set" }),
                    },
                    "card" => match *v {
                        Value::Fun(f) => Ok(Value::Num(self.funs.field(f).len() as u64)),
                        Value::Set(a) => Ok(Value::Num(self.sets.card(a) as u64)),
                        _ => Err(EvalError::Type { op: op.into(), expected: "a function or a set" }),
                    },
                    "isfunset" => {
                        let f = want_fun(*v, "a function")?;
                        Ok(Value::Bool(self.funs.is_funset(f)))
                    }
                    "isfevel" => {
                        let f = want_fun(*v, "a function")?;
                        Ok(Value::Bool(is_fevel(&mut self.funs, f)?))
                    }
                    "toset" => {
                        let f = want_fun(*v, "a function")?;
                        Ok(Value::Set(to_set(&self.funs, &mut self.sets, f)))
                    }
                    "levof" => {
                        let a = want_set(*v, "a set")?;
                        Ok(Value::Set(self.sets.lev_of(a)?))
                    }
                    "tofun" => {
                        let a = want_set(*v, "a set")?;
                        Ok(Value::Fun(to_fun(&self.sets, &mut self.funs, a)))
                    }
                    "ord" => {
                        let n = match *v {
                            Value::Num(n) => usize::try_from(n).unwrap_or(usize::MAX),
                            Value::Fun(f) if f == self.funs.null() => 0,
                            _ => {
                                return Err(EvalError::Type {
                                    op: op.into(),
                                    expected: "a number",
                                })
                            }
                        };
                        Ok(Value::Fun(ord_encode(&mut self.funs, n)?))
                    }
                    "fst" => {
                        let p = want_fun(*v, "a pair")?;
                        Ok(Value::Fun(fst(&self.funs, p)?))
                    }
                    "snd" => {
                        let p = want_fun(*v, "a pair")?;
                        Ok(Value::Fun(snd(&self.funs, p)?))
                    }
                    _ => unreachable!(),
                }
            }
            "comp" | "pair" => {
                let [a, b] = vals else {
                    return Err(arity("two arguments"));
                };
                let fa = want_fun(*a, "functions")?;
                let fb = want_fun(*b, "functions")?;
                match op {
                    "comp" => Ok(Value::Fun(compose(&mut self.funs, fa, fb)?)),
                    "pair" => Ok(Value::Fun(pair(&mut self.funs, fa, fb))),
                    _ => unreachable!(),
                }
            }
            "rel" => {
                if vals.len() < 2 {
                    return Err(arity("a function, intermediate arguments, and a value"));
                }
                let hs = vals
                    .iter()
                    .map(|&v| want_fun(v, "function arguments"))
                    .collect::<Result<Vec<_>, _>>()?;
                let (f, rest) = hs.split_first().unwrap();
                let (z, mid) = rest.split_last().unwrap();
                Ok(Value::Bool(rel_holds(&self.funs, *f, mid, *z)))
            }
            _ => Err(EvalError::UnknownOp(op.into())),
        }
    }
}

impl Default for Session {
    fn default() -> Self {
        Session::new()
    }
}
