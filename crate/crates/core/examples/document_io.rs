//! Reading and writing complexes in the JSON exchange format, and checking
//! the witnesses recorded in a result document.

use ihf::document::{ComplexDocument, ResultDocument};
use ihf::involutive::{correction_terms_cone, correction_terms_direct};

const TEXT: &str = r#"{
  "format": "ihf/1",
  "label": "sigma_2_3_7 by hand",
  "generators": [
    {"name": "a", "grading": "-2"},
    {"name": "b", "grading": "-2"},
    {"name": "c", "grading": "-3"}
  ],
  "diff": [["c", "a", 1], ["c", "b", 1]],
  "iota": [["a", "b", 0], ["b", "a", 0], ["c", "c", 0]]
}"#;

fn main() -> ihf::Result<()> {
    let doc = ComplexDocument::parse(TEXT)?;
    let x = doc.to_iota()?;

    let s = correction_terms_cone(&x)?;
    let direct = correction_terms_direct(&x)?;
    let result = ResultDocument::new(doc.label.as_deref()).with_terms(&s, Some(&direct)).with_hfi(&s);
    let json = result.to_json();
    println!("{json}");

    let back = ResultDocument::parse(&json)?;
    println!("witnesses re-verified: {}", back.verify_witnesses(&x)?);

    let bad = TEXT.replace(r#"["c", "a", 1]"#, r#"["c", "a", 0]"#);
    match ComplexDocument::parse(&bad).and_then(|d| d.to_iota()) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
