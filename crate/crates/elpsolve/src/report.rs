//! Worldview output.

use std::collections::BTreeSet;
use std::fmt::Write;

use elp_core::interp::sort_for_display;
use elp_core::solver::{SolveStats, WorldviewResult};
use elp_core::{AtomId, Interpretation, Origin, SymbolTable};

/// Belief sets with more members are summarized instead of listed.
pub const MAX_LISTED: usize = 64;

/// `K a` as the user wrote it: proxies print as the negated base atom.
fn k_name(symbols: &SymbolTable, k: AtomId) -> String {
    let base = symbols.origin(k).base().expect("k_ atoms have a base");
    match symbols.origin(base) {
        Origin::NotOnce(a) => format!("not {}", symbols.name(a)),
        Origin::NotTwice(a) => format!("not not {}", symbols.name(a)),
        _ => symbols.name(base).to_string(),
    }
}

fn interpretation(symbols: &SymbolTable, i: &Interpretation) -> String {
    let mut names: Vec<&str> = i.iter().map(|a| symbols.name(a)).collect();
    names.sort_unstable();
    format!("{{{}}}", names.join(","))
}

fn set(items: &[String]) -> String {
    if items.is_empty() {
        "{}".into()
    } else {
        format!("{{ {} }}", items.join(", "))
    }
}

/// One `Worldview i:` block. Members are projected onto `visible`.
pub fn worldview_block(
    index: usize,
    wv: &WorldviewResult,
    symbols: &SymbolTable,
    visible: &BTreeSet<AtomId>,
) -> String {
    let mut out = String::new();
    let signature: Vec<String> = wv.signature.iter().map(|k| k_name(symbols, k)).collect();
    let mut members: Vec<Interpretation> = wv.belief_set.restrict(visible).iter().cloned().collect();
    sort_for_display(&mut members, symbols);
    writeln!(out, "Worldview {index}:").unwrap();
    writeln!(out, "  K: {}", set(&signature)).unwrap();
    if members.len() > MAX_LISTED {
        writeln!(out, "  Belief set: {} interpretations (not listed)", members.len()).unwrap();
    } else {
        let listed: Vec<String> = members.iter().map(|i| interpretation(symbols, i)).collect();
        writeln!(out, "  Belief set: {}", set(&listed)).unwrap();
    }
    out
}

pub fn stats_line(stats: &SolveStats) -> String {
    format!(
        "candidates={} tests={} skipped={} worldviews={}",
        stats.candidates_generated, stats.tests_run, stats.tests_skipped, stats.worldviews_found
    )
}

pub fn result_line(found: usize) -> String {
    if found == 0 {
        "UNSATISFIABLE".into()
    } else {
        format!("SATISFIABLE ({found} worldviews)")
    }
}
