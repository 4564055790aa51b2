//! Random complexes, their homology decomposition and the resulting
//! dimension of each graded piece.

use ihf::complex::homology;
use ihf::random::{random_complex, seeded};
use ihf::Grading;

fn main() -> ihf::Result<()> {
    let mut rng = seeded(2024);
    for _ in 0..5 {
        let c = random_complex(&mut rng, 8);
        let h = homology(&c)?;
        println!("{} generators: H = {h}", c.len());
        let hi = c.basis().max_grading().unwrap_or(Grading::ZERO);
        let mut r = hi;
        let mut line = Vec::new();
        for _ in 0..8 {
            line.push(format!("{r}:{}", h.dimension_at(r)));
            r = r - Grading::int(1);
        }
        println!("  dims from the top: {}", line.join(" "));
    }
    Ok(())
}
