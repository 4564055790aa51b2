//! Correction terms of connected sums, assembled by tensoring presets.

use ihf::involutive::correction_terms_cone;
use ihf::presets::preset;

fn main() -> ihf::Result<()> {
    for spec in [
        "surg_m3_T27",
        "surg_5_mT211",
        "surg_m3_T27^2#surg_5_mT211",
        "surg_m3_T27#minus_L31#surg_5_mT211",
        "surg_m3_T27#minus_L31",
    ] {
        let x = preset(spec)?;
        let (lo, d, hi) = correction_terms_cone(&x)?.triple();
        println!("{spec:40} {:>3} gens   d_lower = {lo:>5}  d = {d:>5}  d_upper = {hi:>5}", x.len());
    }
    Ok(())
}
