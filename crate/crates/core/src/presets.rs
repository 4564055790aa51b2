//! Named ι-complexes, and `#`/`^n` composites of them.

use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::iota::{power, tensor_all, IotaComplex};
use crate::knot::{a0_max_model, pin_grading, quadrant_min_model, staircase};

/// Base preset names, in listing order.
pub const PRESET_NAMES: &[&str] = &[
    "unit",
    "sigma_2_3_7",
    "surg_m3_T27",
    "surg_5_mT211",
    "minus_L31",
    "surg_m3_T27_staircase",
    "surg_5_mT211_staircase",
];

/// One-line description of a base preset.
pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "unit" => "S^3: one generator at -2, iota = id",
        "sigma_2_3_7" => "Sigma(2,3,7): a, b at -2, c at -3, dc = U(a+b), iota swaps a and b",
        "surg_m3_T27" => "-3 surgery on T(2,7), reduced: a, g at -5/2, d at -11/2, dd = U^2(a+g)",
        "surg_5_mT211" => "+5 surgery on -T(2,11), reduced: o, y at -1, t at 4, do = dy = U^3 t",
        "minus_L31" => "-L(3,1): one generator at -5/2, iota = id",
        "surg_m3_T27_staircase" => "-3 surgery on T(2,7) from the min(i,j) <= 0 truncation, d pinned to -1/2",
        "surg_5_mT211_staircase" => "+5 surgery on -T(2,11) from the max(i,j) <= 0 truncation, d pinned to 1",
        _ => return None,
    })
}

fn gen(name: &str, grading: Grading) -> Generator {
    Generator::new(name, grading)
}

fn base(name: &str) -> Result<IotaComplex> {
    let half = |n: i64| Grading::new(n, 2);
    let int = Grading::int;
    match name {
        "unit" => Ok(IotaComplex::unit()),
        "sigma_2_3_7" => IotaComplex::try_new(
            vec![gen("a", int(-2)), gen("b", int(-2)), gen("c", int(-3))],
            [("c", "a", 1), ("c", "b", 1)],
            [("a", "b", 0), ("b", "a", 0), ("c", "c", 0)],
        ),
        "surg_m3_T27" => IotaComplex::try_new(
            vec![gen("a", half(-5)), gen("g", half(-5)), gen("d", half(-11))],
            [("d", "a", 2), ("d", "g", 2)],
            [("a", "g", 0), ("g", "a", 0), ("d", "d", 0)],
        ),
        "surg_5_mT211" => IotaComplex::try_new(
            vec![gen("o", int(-1)), gen("y", int(-1)), gen("t", int(4))],
            [("o", "t", 3), ("y", "t", 3)],
            [("o", "y", 0), ("y", "o", 0), ("t", "t", 0)],
        ),
        "minus_L31" => IotaComplex::try_new(vec![gen("l", half(-5))], std::iter::empty(), [("l", "l", 0)]),
        "surg_m3_T27_staircase" => {
            let m = quadrant_min_model(&staircase(3, false)?)?;
            Ok(pin_grading(&m, Grading::new(-1, 2))?.model)
        }
        "surg_5_mT211_staircase" => {
            let m = a0_max_model(&staircase(5, true)?)?;
            pin_grading(&m, Grading::int(1))?.model.renamed(shift_letter(b'o' - b'a'))
        }
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// Renames single-letter generators `a, b, ...` to start at another letter.
fn shift_letter(by: u8) -> impl Fn(&str) -> String {
    move |n: &str| match n.as_bytes() {
        [c] if c.is_ascii_lowercase() && c + by <= b'z' => char::from(c + by).to_string(),
        _ => n.to_string(),
    }
}

/// A base name, `name^n`, or a `#`-separated product of those.
pub fn preset(spec: &str) -> Result<IotaComplex> {
    let parts: Vec<&str> = spec.split('#').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::UnknownPreset(spec.to_string()));
    }
    let factors = parts
        .iter()
        .map(|part| match part.split_once('^') {
            Some((name, n)) => {
                let n: usize = n.trim().parse().map_err(|_| Error::UnknownPreset(part.to_string()))?;
                power(&base(name.trim())?, n)
            }
            None => base(part),
        })
        .collect::<Result<Vec<_>>>()?;
    tensor_all(&factors)
}

/// The base presets, by name.
pub fn all_presets() -> Result<Vec<(&'static str, IotaComplex)>> {
    PRESET_NAMES.iter().map(|&n| Ok((n, base(n)?))).collect()
}
