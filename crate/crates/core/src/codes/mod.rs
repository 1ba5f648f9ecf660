//! Binary and 𝔽_p linear codes: duality, canonical forms, enumeration of
//! self-dual codes, supercodes and subcodes, and shadows.

mod binary;
mod canonical;
mod enumerate;
mod prime;
mod shadow;

pub use binary::{format_word, hamming8, i2_power, mask, parse_word, weight, BinaryCode, MAX_CODEWORD_BITS, MAX_LENGTH};
pub use canonical::{canonical_form, canonical_form_prime, CodeClass, PrimeCodeClass, MAX_CANONICAL_LENGTH, MAX_TIED_STATES};
pub use enumerate::{
    enumerate_self_dual, enumerate_self_dual_prime, max_prime_length, self_dual_supercodes, self_dual_supercodes_prime,
    self_orthogonal_classes, subcodes_containing_one, supercodes_index2, PrimeSelfDualClass, MAX_ENUMERATION_LENGTH,
    MAX_SUPERCODE_STATES,
};
pub use prime::{dot, tetracode, PrimeFieldCode, MAX_CODEWORDS};
pub use shadow::{hamming_weight_enumerator, shadow_enumerator_formula, Shadow};

use crate::error::{Error, Result};

/// Either kind of code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyCode {
    Binary(BinaryCode),
    Prime(PrimeFieldCode),
}

/// Named codes: `i2`, `i2^k`, `h8` (alias `e8`), `rep<N>`, `rep<N>_p<P>` and `tetracode`.
pub fn named_code(name: &str) -> Result<AnyCode> {
    let lower = name.to_ascii_lowercase();
    let bin = |c: BinaryCode| Ok(AnyCode::Binary(c));
    match lower.as_str() {
        "i2" => return bin(i2_power(1)),
        "h8" | "e8" => return bin(hamming8()),
        "tetracode" => return Ok(AnyCode::Prime(tetracode())),
        _ => {}
    }
    if let Some(k) = lower.strip_prefix("i2^") {
        let k: usize = k.parse().map_err(|_| Error::invalid(format!("bad exponent in {name:?}")))?;
        if k == 0 || 2 * k > MAX_LENGTH {
            return Err(Error::invalid(format!("exponent out of range in {name:?}")));
        }
        return bin(i2_power(k));
    }
    if let Some(rest) = lower.strip_prefix("rep") {
        let (n, p) = match rest.split_once("_p") {
            Some((n, p)) => (n, Some(p)),
            None => (rest, None),
        };
        let n: usize = n.parse().map_err(|_| Error::invalid(format!("bad length in {name:?}")))?;
        if n == 0 || n > MAX_LENGTH {
            return Err(Error::invalid(format!("length out of range in {name:?}")));
        }
        return match p {
            None | Some("2") => bin(BinaryCode::repetition(n)),
            Some(p) => {
                let p: u8 = p.parse().map_err(|_| Error::invalid(format!("bad prime in {name:?}")))?;
                Ok(AnyCode::Prime(PrimeFieldCode::new(p, n, vec![vec![1; n]])?))
            }
        };
    }
    Err(Error::invalid(format!("unknown code {name:?}")))
}

/// Parses a code file: one generator row per line, blank lines and `#` comments ignored.
pub fn parse_code_file(text: &str, p: u8) -> Result<AnyCode> {
    let rows: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if rows.is_empty() {
        return Err(Error::invalid("code file has no rows"));
    }
    if p == 2 {
        Ok(AnyCode::Binary(BinaryCode::from_strings(&rows)?))
    } else {
        Ok(AnyCode::Prime(PrimeFieldCode::from_strings(p, &rows)?))
    }
}
