//! Large surgery models built from staircase knot complexes, reduced to a
//! small homotopy-equivalent model.

use ihf::complex::reduce;
use ihf::involutive::correction_terms_cone;
use ihf::knot::{a0_max_model, pin_grading, quadrant_min_model, staircase};
use ihf::Grading;

fn main() -> ihf::Result<()> {
    let t27 = staircase(3, false)?;
    let neg = pin_grading(&quadrant_min_model(&t27)?, Grading::new(-1, 2))?;
    let mt211 = staircase(5, true)?;
    let pos = pin_grading(&a0_max_model(&mt211)?, Grading::int(1))?;

    for m in [neg, pos] {
        let x = &m.model;
        println!("{} truncated to {}: {} generators", m.knot, m.truncation, x.len());
        let r = reduce(x.complex(), &[x.iota().clone()])?;
        println!("  reduced differential:\n{}", indent(&r.complex.diff().display_entries()));
        println!("  reduced iota:\n{}", indent(&r.maps[0].display_entries()));
        let (lo, d, hi) = correction_terms_cone(x)?.triple();
        println!("  d_lower = {lo}, d = {d}, d_upper = {hi}");
    }
    Ok(())
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}
