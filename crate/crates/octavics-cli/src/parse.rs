//! Input parsing: univariate polynomials in `x` with exact rational
//! coefficients, rational lists, and projective root lists.

use num_traits::Zero;
use octavics::{BinaryForm, Int, ProjectivePoint, Rat, SplitOctic};

/// A parse failure with the byte position it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// A parsed univariate polynomial of degree at most 8 (dense, ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInput {
    coeffs: Vec<Rat>, // length 9, index = power of x
}

impl CurveInput {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Result<Self, ParseError> {
        if coeffs.len() > 9 {
            return err(0, format!("degree {} exceeds 8", coeffs.len() - 1));
        }
        let mut c = coeffs;
        c.resize(9, Rat::from_integer(0.into()));
        Ok(CurveInput { coeffs: c })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree of the underlying univariate polynomial (0 for the zero
    /// polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Homogenizes to a binary octic. Degree-7 polynomials pick up the
    /// projective root at infinity; `strict_octic` insists on degree
    /// exactly 8.
    pub fn to_octic(&self, strict_octic: bool) -> Result<BinaryForm, ParseError> {
        let d = self.degree();
        if strict_octic && d != 8 {
            return err(0, format!("strict octic mode requires degree 8, got {d}"));
        }
        if !(7..=8).contains(&d) {
            return err(0, format!("polynomial degree must be 7 or 8, got {d}"));
        }
        Ok(BinaryForm::octic_from_univariate(&self.coeffs).expect("length checked"))
    }

    /// Canonical text form; `parse_polynomial` inverts this exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for k in (0..=8usize).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rat::from_integer(0.into());
            let mag = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let one = mag == Rat::from_integer(1.into());
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !one {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push('x');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<Int, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return err(start, "expected a number");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    /// `a` or `a/b`.
    fn rational(&mut self) -> Result<Rat, ParseError> {
        let n = self.integer()?;
        if self.eat(b'/') {
            let pos = self.pos;
            let d = self.integer()?;
            if d == Int::from(0) {
                return err(pos, "zero denominator");
            }
            Ok(Rat::new(n, d))
        } else {
            Ok(Rat::from_integer(n))
        }
    }

    /// `x`, `x^k`.
    fn power_of_x(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos;
        if !self.eat(b'x') {
            return err(pos, "expected 'x'");
        }
        if self.eat(b'^') {
            let pos = self.pos;
            let e = self.integer()?;
            if e > Int::from(8) {
                return err(pos, format!("degree {e} exceeds 8"));
            }
            Ok(e.to_string().parse().expect("small exponent"))
        } else {
            Ok(1)
        }
    }
}

/// Parses a sum of terms `c`, `c*x^k`, `x^k` with exact rational
/// coefficients, `+`/`-` signs, optional `*`, and degree at most 8.
pub fn parse_polynomial(text: &str) -> Result<CurveInput, ParseError> {
    let mut sc = Scanner::new(text);
    let mut coeffs = vec![Rat::from_integer(0.into()); 9];
    let mut first = true;
    loop {
        sc.skip_ws();
        if sc.pos >= sc.bytes.len() {
            if first {
                return err(sc.pos, "empty polynomial");
            }
            break;
        }
        // sign
        let mut sign = 1i64;
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
            }
            Some(b'-') => {
                sign = -1;
                sc.bump();
            }
            _ if first => {}
            Some(other) => {
                return err(
                    sc.pos,
                    format!("expected '+' or '-', found {:?}", other as char),
                )
            }
            None => break,
        }
        first = false;

        // term: coefficient, variable, or both
        let (coeff, power) = match sc.peek() {
            Some(b'x') => (Rat::from_integer(1.into()), sc.power_of_x()?),
            Some(c) if c.is_ascii_digit() => {
                let q = sc.rational()?;
                // optional '*' then optional variable
                let had_star = sc.eat(b'*');
                match sc.peek() {
                    Some(b'x') => (q, sc.power_of_x()?),
                    _ if had_star => return err(sc.pos, "expected 'x' after '*'"),
                    _ => (q, 0),
                }
            }
            Some(other) => {
                return err(
                    sc.pos,
                    format!("expected a term, found {:?}", other as char),
                )
            }
            None => return err(sc.pos, "dangling sign"),
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        coeffs[power] += signed;
    }
    CurveInput::from_coeffs(coeffs)
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rat>, ParseError> {
    text.split(',')
        .map(|piece| {
            let trimmed = piece.trim();
            let offset = piece.as_ptr() as usize - text.as_ptr() as usize;
            if trimmed.is_empty() {
                return err(offset, "empty entry in list");
            }
            trimmed.parse::<Rat>().map_err(|e| ParseError {
                position: offset,
                message: format!("bad rational {trimmed:?}: {e}"),
            })
        })
        .collect()
}

/// Parses eight comma-separated roots; `inf` (or `oo`) is the point at
/// infinity.
pub fn parse_roots(text: &str) -> Result<SplitOctic, ParseError> {
    let mut points = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let offset = piece.as_ptr() as usize - text.as_ptr() as usize;
        if trimmed == "inf" || trimmed == "oo" {
            points.push(ProjectivePoint::infinity());
        } else {
            let value = trimmed.parse::<Rat>().map_err(|e| ParseError {
                position: offset,
                message: format!("bad root {trimmed:?}: {e}"),
            })?;
            points.push(ProjectivePoint::finite(value));
        }
    }
    if points.len() != 8 {
        return err(0, format!("expected 8 roots, got {}", points.len()));
    }
    Ok(SplitOctic::new(points))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(Int::from(n))
    }

    #[test]
    fn parses_the_example_curve() {
        let p = parse_polynomial("x^7+1786*x^5+44441*x^3+278179*x").unwrap();
        assert_eq!(p.degree(), 7);
        assert_eq!(p.coeffs()[7], rat(1));
        assert_eq!(p.coeffs()[5], rat(1786));
        assert_eq!(p.coeffs()[3], rat(44441));
        assert_eq!(p.coeffs()[1], rat(278179));
        assert_eq!(p.coeffs()[0], rat(0));
        let octic = p.to_octic(false).unwrap();
        assert_eq!(octic.degree(), 8);
        assert!(octic.coeff(8).is_zero());
    }

    #[test]
    fn optional_star_and_loose_whitespace() {
        let a = parse_polynomial("3x^2 - x + 1/2").unwrap();
        let b = parse_polynomial("3 * x^2-x+1/2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeffs()[2], rat(3));
        assert_eq!(a.coeffs()[1], rat(-1));
        assert_eq!(a.coeffs()[0], Rat::new(1.into(), 2.into()));
    }

    #[test]
    fn signs_and_fractions() {
        let p = parse_polynomial("-x^8 + 3/2*x").unwrap();
        assert_eq!(p.coeffs()[8], rat(-1));
        assert_eq!(p.coeffs()[1], Rat::new(3.into(), 2.into()));
        assert_eq!(p.degree(), 8);
    }

    #[test]
    fn x8_alone() {
        let p = parse_polynomial("x^8").unwrap();
        let mut expected = vec![rat(0); 9];
        expected[8] = rat(1);
        assert_eq!(p.coeffs(), &expected[..]);
    }

    #[test]
    fn repeated_terms_accumulate() {
        let p = parse_polynomial("x^7 + x^7 - x^7").unwrap();
        assert_eq!(p.coeffs()[7], rat(1));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_polynomial("x^9").unwrap_err();
        assert!(e.message.contains("exceeds 8"));
        assert_eq!(e.position, 2);

        let e = parse_polynomial("2*+x").unwrap_err();
        assert_eq!(e.position, 2);

        let e = parse_polynomial("x^2 $ 3").unwrap_err();
        assert_eq!(e.position, 4);

        let e = parse_polynomial("1/0").unwrap_err();
        assert!(e.message.contains("zero denominator"));
    }

    #[test]
    fn degree_window_enforced() {
        let p = parse_polynomial("x^3+1").unwrap();
        assert!(p.to_octic(false).is_err());
        let p8 = parse_polynomial("x^8+1").unwrap();
        assert!(p8.to_octic(true).is_ok());
        let p7 = parse_polynomial("x^7+1").unwrap();
        assert!(p7.to_octic(true).is_err());
        assert!(p7.to_octic(false).is_ok());
    }

    #[test]
    fn text_roundtrip_is_identity() {
        for src in [
            "x^7 + 1786*x^5 + 44441*x^3 + 278179*x",
            "-x^8 + 3/2*x",
            "x^8 - x^7 + 5",
            "2/3*x^8 + x^2 - 7/4",
        ] {
            let parsed = parse_polynomial(src).unwrap();
            let printed = parsed.to_text();
            assert_eq!(parse_polynomial(&printed).unwrap(), parsed, "{src}");
            assert_eq!(parsed.to_text(), printed);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_curve() -> impl Strategy<Value = CurveInput> {
            proptest::collection::vec((-999i64..1000, 1i64..60), 1..=9).prop_map(|pairs| {
                let coeffs: Vec<Rat> = pairs
                    .into_iter()
                    .map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
                    .collect();
                CurveInput::from_coeffs(coeffs).expect("at most degree 8")
            })
        }

        proptest! {
            #[test]
            fn print_then_parse_is_identity(curve in arb_curve()) {
                let text = curve.to_text();
                prop_assert_eq!(parse_polynomial(&text).unwrap(), curve);
            }
        }
    }

    #[test]
    fn roots_with_infinity() {
        let s = parse_roots("1, 2, 3/2, -5, inf, 0, 7, 9").unwrap();
        assert_eq!(s.roots().iter().filter(|r| !r.is_finite()).count(), 1);
        assert!(parse_roots("1,2,3").is_err());
        assert!(parse_roots("1,2,3,4,5,6,7,bogus").is_err());
    }
}
