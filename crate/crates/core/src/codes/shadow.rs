//! The shadow `S(C) = {u : u·c ≡ wt(c)/2 (mod 2) for all c ∈ C}` of a
//! binary self-dual code, and its weight enumerator.

use super::binary::{format_word, weight, BinaryCode};
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Poly, RatPoly, Rational};

/// The shadow of a self-dual code: the coset `offset + C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shadow {
    pub code: BinaryCode,
    pub offset: u64,
}

impl Shadow {
    pub fn new(code: &BinaryCode) -> Result<Shadow> {
        if !code.is_self_dual() {
            return Err(Error::invalid("the shadow is defined here for self-dual codes"));
        }
        // With pivots at the lowest set bit, `u = Σ e_pivot` over rows whose
        // half-weight is odd meets every row in the required parity.
        let offset = code
            .rows()
            .iter()
            .filter(|&&r| (weight(r) / 2) % 2 == 1)
            .fold(0u64, |acc, &r| acc | 1 << r.trailing_zeros());
        Ok(Shadow { code: code.clone(), offset: code.reduce(offset) })
    }

    pub fn contains(&self, u: u64) -> bool {
        self.code.contains(u ^ self.offset)
    }

    /// Direct membership test against every codeword.
    pub fn contains_brute_force(&self, u: u64) -> Result<bool> {
        Ok(self
            .code
            .codewords()?
            .into_iter()
            .all(|c| weight(u & c) % 2 == (weight(c) / 2) % 2))
    }

    pub fn elements(&self) -> Result<Vec<u64>> {
        Ok(self.code.codewords()?.into_iter().map(|c| c ^ self.offset).collect())
    }

    /// `Σ_{u ∈ S} x^{n−wt(u)} y^{wt(u)}` by enumeration.
    pub fn enumerator(&self) -> Result<RatPoly> {
        let n = self.code.length();
        let mut out = RatPoly::zero(2, &());
        for u in self.elements()? {
            let w = weight(u) as u16;
            out.add_term(vec![n as u16 - w, w], Rational::one());
        }
        Ok(out)
    }

    pub fn offset_string(&self) -> String {
        format_word(self.offset, self.code.length())
    }
}

/// `hwe_C(x, y) = Σ_c x^{n−wt(c)} y^{wt(c)}`.
pub fn hamming_weight_enumerator(code: &BinaryCode) -> Result<RatPoly> {
    let n = code.length() as u16;
    let dist = code.weight_distribution()?;
    RatPoly::from_terms(
        2,
        &(),
        dist.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(w, &a)| (vec![n - w as u16, w as u16], Rational::from_int(a))),
    )
}

/// `2^{−n/2} hwe_C(x + y, i(x − y))`, evaluated in ℚ(ζ_8).
pub fn shadow_enumerator_formula(code: &BinaryCode) -> Result<RatPoly> {
    if !code.is_self_dual() {
        return Err(Error::invalid("the shadow is defined here for self-dual codes"));
    }
    let hwe = hamming_weight_enumerator(code)?.map_coeffs(&8u32, |q| Cyclotomic::from_rational(8, q.clone()).expect("conductor 8"));
    let x = Poly::var(2, 0, &8u32);
    let y = Poly::var(2, 1, &8u32);
    let i = Cyclotomic::i(8)?;
    let forms = [x.add(&y)?, x.sub(&y)?.scale(&i)];
    let scale = Rational::new(1, num_bigint::BigInt::from(2).pow(code.length() as u32 / 2))?;
    hwe.substitute(&forms)?
        .scale_rational(&scale)
        .to_rational()
        .ok_or_else(|| Error::NotRational("shadow enumerator".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{hamming8, i2_power};

    #[test]
    fn shadow_of_i2() {
        let c = i2_power(1);
        let s = Shadow::new(&c).unwrap();
        assert_eq!(s.enumerator().unwrap().render(), "2*x0*x1");
        assert_eq!(shadow_enumerator_formula(&c).unwrap(), s.enumerator().unwrap());
    }

    #[test]
    fn doubly_even_is_its_own_shadow() {
        let h = hamming8();
        let s = Shadow::new(&h).unwrap();
        assert!(s.contains(0));
        assert_eq!(shadow_enumerator_formula(&h).unwrap(), hamming_weight_enumerator(&h).unwrap());
    }

    #[test]
    fn offset_satisfies_definition() {
        for k in 1..5 {
            let s = Shadow::new(&i2_power(k)).unwrap();
            for u in s.elements().unwrap() {
                assert!(s.contains_brute_force(u).unwrap());
            }
        }
    }
}
