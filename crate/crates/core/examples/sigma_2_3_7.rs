//! The Brieskorn sphere Σ(2,3,7): homology, HFI⁻ with its Q-action, and the
//! three correction terms, for the complex and its tensor powers.

use ihf::involutive::correction_terms_cone;
use ihf::iota::power;
use ihf::presets::preset;

fn main() -> ihf::Result<()> {
    let sigma = preset("sigma_2_3_7")?;
    println!("HF- = {}", sigma.homology()?);

    let s = correction_terms_cone(&sigma)?;
    println!("HFI- = {}", s.hfi);
    println!("Q-action:\n{}", s.q_action.display(&s.hfi, &s.hfi));

    for n in 1..=4 {
        let x = power(&sigma, n)?;
        let (lo, d, hi) = correction_terms_cone(&x)?.triple();
        println!("#^{n} ({:>2} generators): d_lower = {lo}, d = {d}, d_upper = {hi}", x.len());
    }
    Ok(())
}
