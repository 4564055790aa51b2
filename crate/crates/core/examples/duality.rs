//! Duals, and explicit local equivalences between X ⊗ X* and the unit.

use ihf::involutive::correction_terms_cone;
use ihf::iota::dual;
use ihf::local::duality_witness;
use ihf::presets::all_presets;

fn main() -> ihf::Result<()> {
    for (name, x) in all_presets()? {
        let (lo, _, hi) = correction_terms_cone(&x)?.triple();
        let (dlo, _, dhi) = correction_terms_cone(&dual(&x)?)?.triple();
        let w = duality_witness(&x)?;
        println!(
            "{name:24} (d_lower, d_upper) = ({lo}, {hi}), dual ({dlo}, {dhi}), X ⊗ X* ~ unit verified: {}",
            w.verify()?
        );
    }
    Ok(())
}
