//! Vector-literal grammar.
//!
//! A vector is a comma-separated list of entries; each entry is a sum of
//! terms of the form `q`, `q*i`, `q*w^k`, `q*i*w^k` with `q` a rational
//! literal (optional sign, optional /denominator), `i` the imaginary unit,
//! and `w` the order-n root ω with 0 ≤ k < n. The rational factor may be
//! omitted when a symbol is present ("i", "-w^2"). Everything maps into
//! ℚ(ζ_N) with N = lcm(n, 4); `CycloNum::to_literal` emits this grammar, so
//! printed values re-parse to identical field elements.

use framelab::cyclotomic::{conductor_for, CycloNum};
use framelab::rational::Rational;
use num_bigint::BigInt;

pub fn parse_vector(text: &str, n: u32) -> Result<Vec<CycloNum>, String> {
    text.split(',').map(|entry| parse_entry(entry, n)).collect()
}

pub fn parse_entry(text: &str, n: u32) -> Result<CycloNum, String> {
    let conductor = conductor_for(n);
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty entry".to_string());
    }
    let mut acc = CycloNum::zero(conductor);
    let mut pos = 0usize;
    let mut first = true;
    while pos < s.len() {
        // Sign of this term.
        let mut negative = false;
        match s[pos] {
            '+' => {
                pos += 1;
            }
            '-' => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            other => {
                return Err(format!("expected + or - before {:?}", other));
            }
        }
        first = false;
        let (term, next) = parse_term(&s, pos, n, conductor)?;
        pos = next;
        acc = if negative { &acc - &term } else { &acc + &term };
    }
    Ok(acc)
}

/// One unsigned term: rational and/or symbol factors joined by '*'.
fn parse_term(
    s: &[char],
    mut pos: usize,
    n: u32,
    conductor: u32,
) -> Result<(CycloNum, usize), String> {
    let mut coeff: Option<Rational> = None;
    let mut i_power = 0u32;
    let mut w_power: Option<u32> = None;
    let mut want_factor = true;
    while pos < s.len() {
        match s[pos] {
            '+' | '-' if !want_factor => break,
            '*' if !want_factor => {
                want_factor = true;
                pos += 1;
            }
            'i' if want_factor => {
                if i_power > 0 {
                    return Err("repeated i factor in one term".to_string());
                }
                i_power = 1;
                pos += 1;
                want_factor = false;
            }
            'w' if want_factor => {
                if w_power.is_some() {
                    return Err("repeated w factor in one term".to_string());
                }
                pos += 1;
                let mut k = 1u32;
                if pos < s.len() && s[pos] == '^' {
                    pos += 1;
                    let (value, next) = parse_integer(s, pos)?;
                    pos = next;
                    k = u32::try_from(value).map_err(|_| "negative w exponent".to_string())?;
                }
                if k >= n {
                    return Err(format!("w exponent {} must satisfy 0 <= k < n = {}", k, n));
                }
                w_power = Some(k);
                want_factor = false;
            }
            c if c.is_ascii_digit() => {
                if coeff.is_some() || !want_factor {
                    return Err("unexpected rational factor".to_string());
                }
                let (num, next) = parse_integer(s, pos)?;
                pos = next;
                let mut den = 1i64;
                if pos < s.len() && s[pos] == '/' {
                    pos += 1;
                    let (d, next) = parse_integer(s, pos)?;
                    pos = next;
                    if d == 0 {
                        return Err("zero denominator".to_string());
                    }
                    den = d;
                }
                coeff = Some(Rational::new(BigInt::from(num), BigInt::from(den)));
                want_factor = false;
            }
            other => return Err(format!("unexpected character {:?}", other)),
        }
    }
    if want_factor {
        return Err("dangling '*'".to_string());
    }
    if coeff.is_none() && i_power == 0 && w_power.is_none() {
        return Err("empty term".to_string());
    }
    let q = coeff.unwrap_or_else(|| Rational::from_integer(BigInt::from(1)));
    let exponent = i_power as i64 * (conductor / 4) as i64
        + w_power.unwrap_or(0) as i64 * (conductor / n) as i64;
    let root = CycloNum::root_of_unity(conductor, exponent);
    Ok((root.scale(&q), pos))
}

fn parse_integer(s: &[char], mut pos: usize) -> Result<(i64, usize), String> {
    let start = pos;
    while pos < s.len() && s[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err("expected a number".to_string());
    }
    let text: String = s[start..pos].iter().collect();
    text.parse::<i64>()
        .map(|v| (v, pos))
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use framelab::rational::rat;

    #[test]
    fn parses_paper_vector() {
        let v = parse_vector("i,-i,1,1+i,2-i", 5).unwrap();
        let cond = conductor_for(5);
        let i = CycloNum::imaginary_unit(cond);
        assert_eq!(v[0], i);
        assert_eq!(v[1], -&i);
        assert!(v[2].is_one());
        assert_eq!(v[3], &CycloNum::one(cond) + &i);
        assert_eq!(v[4], &CycloNum::from_integer(cond, 2) - &i);
    }

    #[test]
    fn parses_rationals_and_roots() {
        let n = 7;
        let cond = conductor_for(n);
        let x = parse_entry("3/2*w^2 - 1/4*i*w + 5", n).unwrap();
        let expect = &(&CycloNum::omega_pow(n, 2).scale(&rat(3, 2))
            - &(&CycloNum::imaginary_unit(cond) * &CycloNum::omega_pow(n, 1)).scale(&rat(1, 4)))
            + &CycloNum::from_integer(cond, 5);
        assert_eq!(x, expect);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(parse_entry("", 5).is_err());
        assert!(parse_entry("1+", 5).is_err());
        assert!(parse_entry("q", 5).is_err());
        assert!(parse_entry("w^9", 5).is_err()); // k >= n
        assert!(parse_entry("1/0", 5).is_err());
        assert!(parse_entry("2**i", 5).is_err());
        assert!(parse_entry("i*i", 5).is_err());
    }

    #[test]
    fn literal_roundtrip_through_parser() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for n in [3u32, 4, 5, 7] {
            let cond = conductor_for(n);
            for _ in 0..25 {
                let x = framelab::sampling::random_gaussian_rational(cond, &mut rng);
                let text = x.to_literal(n);
                let back = parse_entry(&text, n).unwrap();
                assert_eq!(back, x, "n={} literal={}", n, text);
            }
            // Full-basis elements round-trip too.
            for k in 0..cond as i64 {
                let x = CycloNum::root_of_unity(cond, k);
                let back = parse_entry(&x.to_literal(n), n).unwrap();
                assert_eq!(back, x, "n={} zeta^{}", n, k);
            }
        }
    }
}
