//! Bit-exact canonical text for functions and sets.
//!
//! The canonical form is unique: the empty function prints as `0`,
//! every funset (partial identity) prints with the mandatory `{...}`
//! sugar, every other function as `[a->v,...]` with entries in
//! canonical argument order, and sets as `set{...}` with elements in
//! canonical order. No spaces, no newlines, pure 7-bit ASCII.

use fltk_core::{FunUniverse, HfFun, HfSet, SetUniverse};

/// Canonical text of a function.
pub fn print_fun(u: &FunUniverse, f: HfFun) -> String {
    let mut out = String::new();
    write_fun(u, f, &mut out);
    out
}

fn write_fun(u: &FunUniverse, f: HfFun, out: &mut String) {
    let graph = u.graph(f);
    if graph.is_empty() {
        out.push('0');
    } else if u.is_funset(f) {
        out.push('{');
        for (i, &(x, _)) in graph.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_fun(u, x, out);
        }
        out.push('}');
    } else {
        out.push('[');
        for (i, &(x, v)) in graph.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_fun(u, x, out);
            out.push_str("->");
            write_fun(u, v, out);
        }
        out.push(']');
    }
}

/// Canonical text of a set.
pub fn print_set(u: &SetUniverse, a: HfSet) -> String {
    let mut out = String::new();
    write_set(u, a, &mut out);
    out
}

fn write_set(u: &SetUniverse, a: HfSet, out: &mut String) {
    out.push_str("set{");
    let elems = u.elems(a).to_vec();
    for (i, e) in elems.into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_set(u, e, out);
    }
    out.push('}');
}
