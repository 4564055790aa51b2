//! Searching for local maps and deciding local equivalence.

use ihf::local::{find_local_map, group_inverse, group_product, group_unit, local_equivalence};
use ihf::presets::preset;

fn main() -> ihf::Result<()> {
    let sigma = preset("sigma_2_3_7")?;
    let unit = group_unit();

    match find_local_map(&sigma, &unit)? {
        Some(w) => println!("Σ(2,3,7) -> S^3:\n{}", w.f.display_entries()),
        None => println!("Σ(2,3,7) -> S^3: none"),
    }
    println!("S^3 -> Σ(2,3,7): {}", if find_local_map(&unit, &sigma)?.is_some() { "found" } else { "none" });

    let inv = group_inverse(&sigma)?;
    let prod = group_product(&sigma, &inv)?;
    println!("Σ # -Σ ~ S^3: {}", local_equivalence(&prod, &unit)?.holds());

    let a = preset("surg_m3_T27^2#surg_5_mT211")?;
    let b = preset("surg_m3_T27#minus_L31#surg_5_mT211")?;
    let eq = local_equivalence(&a, &b)?;
    println!("Y1#Z vs Y2#Z: forward {}, backward {}", eq.forward.is_some(), eq.backward.is_some());
    Ok(())
}
