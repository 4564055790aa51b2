//! The formal derivative Φ of the differential, and the homotopies that
//! make the tensor-product involution well defined.

use ihf::complex::{null_homotopy, phi};
use ihf::iota::check_phi_correction;
use ihf::presets::preset;

fn main() -> ihf::Result<()> {
    let x = preset("surg_5_mT211")?;
    let p = phi(x.complex());
    println!("Φ on +5 surgery on -T(2,11):\n{}", p.display_entries());

    let sq = p.compose(&p)?;
    match null_homotopy(x.complex(), x.complex(), &sq)? {
        Some(h) if h.is_zero() => println!("Φ² = 0 on the nose"),
        Some(h) => println!("Φ² = ∂H + H∂ with H:\n{}", h.display_entries()),
        None => println!("Φ² is not null-homotopic"),
    }

    for spec in ["sigma_2_3_7", "surg_5_mT211"] {
        let y = preset(spec)?;
        let w = check_phi_correction(&y, &y)?;
        println!("{spec} ⊗ {spec}: correction term null-homotopic: {}", w.verify()?);
    }
    Ok(())
}
