//! Rendering of model-checking sweeps as text and JSON.

use fltk_core::modelcheck::{
    enumerate_flt_models, enumerate_fst_models, enumerate_lt_models, SweepReport, Theory,
    FLT_SWEEP_CAP, FST_SWEEP_CAP, LT_SWEEP_CAP,
};
use fltk_core::Error;

/// One size's sweep outcome, flattened for rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub size: usize,
    pub candidates: u64,
    pub models: u64,
    pub iso_classes: usize,
    /// `(axiom name, first-failure count)` in the theory's evaluation
    /// order.
    pub per_axiom_failures: Vec<(&'static str, u64)>,
}

impl CheckRow {
    fn from_report<S>(r: &SweepReport<S>) -> Self {
        CheckRow {
            size: r.size,
            candidates: r.candidates,
            models: r.model_count(),
            iso_classes: r.classes.len(),
            per_axiom_failures: r
                .per_axiom_failures
                .iter()
                .map(|&(a, n)| (a.name(), n))
                .collect(),
        }
    }
}

/// Parses a theory name as used on the command line.
pub fn theory_named(name: &str) -> Option<Theory> {
    match name {
        "flt" => Some(Theory::Flt),
        "fst" => Some(Theory::Fst),
        "lt" => Some(Theory::Lt),
        _ => None,
    }
}

/// The largest size the named theory can be swept at.
pub fn sweep_cap(theory: Theory) -> usize {
    match theory {
        Theory::Flt => FLT_SWEEP_CAP,
        Theory::Fst => FST_SWEEP_CAP,
        Theory::Lt => LT_SWEEP_CAP,
    }
}

/// Sweeps every size from 1 to `max_size` inclusive.
pub fn sweep_rows(theory: Theory, max_size: usize) -> Result<Vec<CheckRow>, Error> {
    let mut rows = Vec::with_capacity(max_size);
    for n in 1..=max_size {
        rows.push(match theory {
            Theory::Flt => CheckRow::from_report(&enumerate_flt_models(n)?),
            Theory::Fst => CheckRow::from_report(&enumerate_fst_models(n)?),
            Theory::Lt => CheckRow::from_report(&enumerate_lt_models(n)?),
        });
    }
    Ok(rows)
}

/// Plain-text report, one block per size.
pub fn render_text(rows: &[CheckRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&format!(
            "size {}: candidates {}, models {}, iso classes {}\n",
            row.size, row.candidates, row.models, row.iso_classes
        ));
        for (axiom, count) in &row.per_axiom_failures {
            out.push_str(&format!("  first failure at {axiom}: {count}\n"));
        }
    }
    out
}

/// JSON report: an array with one object per size, keys `size`,
/// `candidates`, `models`, `iso_classes`, `per_axiom_failures` (an
/// array of `[axiom, count]` pairs in evaluation order).
pub fn render_json(rows: &[CheckRow]) -> String {
    let array: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            serde_json::json!({
                "size": row.size,
                "candidates": row.candidates,
                "models": row.models,
                "iso_classes": row.iso_classes,
                "per_axiom_failures": row
                    .per_axiom_failures
                    .iter()
                    .map(|&(a, n)| serde_json::json!([a, n]))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&array).expect("report values are plain JSON");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theory_names_cover_the_three_systems() {
        assert_eq!(theory_named("flt"), Some(Theory::Flt));
        assert_eq!(theory_named("fst"), Some(Theory::Fst));
        assert_eq!(theory_named("lt"), Some(Theory::Lt));
        assert_eq!(theory_named("zf"), None);
    }

    #[test]
    fn single_size_sweep_renders_both_ways() {
        let rows = sweep_rows(Theory::Flt, 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].size, 1);
        assert_eq!(rows[0].candidates, 2);
        assert_eq!(rows[0].models, 1);
        let text = render_text(&rows);
        assert!(text.starts_with("size 1: candidates 2, models 1, iso classes 1\n"));
        let json: serde_json::Value = serde_json::from_str(&render_json(&rows)).unwrap();
        assert_eq!(json[0]["candidates"], 2);
        assert_eq!(json[0]["per_axiom_failures"][0][0], "FunExt");
    }

    #[test]
    fn failure_counts_and_models_sum_to_candidates(){
        for theory in [Theory::Flt, Theory::Fst, Theory::Lt] {
            for row in sweep_rows(theory, 2).unwrap() {
                let failures: u64 = row.per_axiom_failures.iter().map(|&(_, n)| n).sum();
                assert_eq!(row.models + failures, row.candidates);
            }
        }
    }

    #[test]
    fn sweeps_past_the_cap_are_refused() {
        assert!(sweep_rows(Theory::Flt, FLT_SWEEP_CAP + 1).is_err());
        assert!(sweep_rows(Theory::Fst, FST_SWEEP_CAP + 1).is_err());
        assert!(sweep_rows(Theory::Lt, LT_SWEEP_CAP + 1).is_err());
    }
}
