//! Text grammar for polynomials.
//!
//! Term form: `c`, `x`, `c*x^k`, `x^k` joined by `+` or `-`, e.g.
//! `x^2+x+2` or `g^2*x^3-x+[1,1]`. A coefficient is a decimal residue
//! (reduced mod p), a power `g^k` of the field's primitive element, or a
//! residue vector `[a0,a1,...]` over GF(p).
//!
//! List form: ascending coefficients `[c0,c1,...,ck]`, with the same
//! coefficient tokens. A string is read in list form exactly when one
//! bracket pair encloses all of it.
//!
//! The printer emits term form with prime-subfield coefficients in decimal
//! and all others as `g^k`, so printed output always re-parses to the same
//! polynomial.

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn at_coefficient(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'g' || c == b'[')
    }

    fn coefficient(&mut self, field: &FieldSpec) -> Result<FieldElement> {
        match self.peek() {
            Some(b'g') => {
                self.bump();
                let k = if self.eat(b'^') { self.number()? } else { 1 };
                Ok(field.generator_power(k))
            }
            Some(b'[') => {
                self.bump();
                let mut residues = Vec::new();
                if !self.eat(b']') {
                    loop {
                        residues.push(self.number()?);
                        if self.eat(b']') {
                            break;
                        }
                        self.expect(b',')?;
                    }
                }
                let p = field.characteristic() as u64;
                if residues.len() > field.degree() as usize || residues.iter().any(|&r| r >= p) {
                    return Err(self.error("residue vector does not describe a field element"));
                }
                let residues: Vec<u32> = residues.iter().map(|&r| r as u32).collect();
                field
                    .from_residues(&residues)
                    .map_err(|e| Error::Parse(e.to_string()))
            }
            _ => {
                let k = self.number()?;
                Ok(field.from_int((k % field.characteristic() as u64) as i64))
            }
        }
    }
}

fn strip_ws(s: &str) -> Vec<u8> {
    s.bytes().filter(|c| !c.is_ascii_whitespace()).collect()
}

// Is the whole string a single bracketed group?
fn is_list_form(src: &[u8]) -> bool {
    if src.first() != Some(&b'[') || src.last() != Some(&b']') {
        return false;
    }
    let mut depth = 0i32;
    for (i, &c) in src.iter().enumerate() {
        match c {
            b'[' => depth += 1,
            b']' => {
                depth -= 1;
                if depth == 0 {
                    return i == src.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

/// Parses either grammar form.
pub fn parse_poly(field: &FieldSpec, s: &str) -> Result<Poly> {
    let src = strip_ws(s);
    if src.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut cur = Cursor { src: &src, pos: 0 };
    let poly = if is_list_form(&src) {
        cur.expect(b'[')?;
        let mut coeffs = Vec::new();
        if !cur.eat(b']') {
            loop {
                coeffs.push(cur.coefficient(field)?);
                if cur.eat(b']') {
                    break;
                }
                cur.expect(b',')?;
            }
        }
        Poly::new(field, coeffs)
    } else {
        let mut acc: Vec<FieldElement> = Vec::new();
        let mut first = true;
        loop {
            let negative = if cur.eat(b'-') {
                true
            } else {
                if !cur.eat(b'+') && !first {
                    return Err(cur.error("expected '+' or '-'"));
                }
                false
            };
            first = false;
            let mut coeff = FieldElement::ONE;
            let mut has_coeff = false;
            if cur.at_coefficient() {
                coeff = cur.coefficient(field)?;
                has_coeff = true;
                cur.eat(b'*');
            }
            let power = if cur.eat(b'x') {
                if cur.eat(b'^') {
                    cur.number()? as usize
                } else {
                    1
                }
            } else if has_coeff {
                0
            } else {
                return Err(cur.error("expected a term"));
            };
            if power > 1 << 20 {
                return Err(cur.error("exponent too large"));
            }
            if acc.len() <= power {
                acc.resize(power + 1, FieldElement::ZERO);
            }
            let term = if negative { field.neg(coeff) } else { coeff };
            acc[power] = field.add(acc[power], term);
            if cur.peek().is_none() {
                break;
            }
        }
        Poly::new(field, acc)
    };
    if cur.peek().is_some() {
        return Err(cur.error("trailing input"));
    }
    Ok(poly)
}

/// Parses a single coefficient token.
pub fn parse_element(field: &FieldSpec, s: &str) -> Result<FieldElement> {
    let src = strip_ws(s);
    let mut cur = Cursor { src: &src, pos: 0 };
    let el = cur.coefficient(field)?;
    if cur.peek().is_some() {
        return Err(cur.error("trailing input"));
    }
    Ok(el)
}

/// Decimal for prime-subfield elements, `g^k` otherwise.
pub fn format_element(field: &FieldSpec, a: FieldElement) -> String {
    if a.index() < field.characteristic() {
        return a.index().to_string();
    }
    let g = field.primitive_element();
    let mut acc = FieldElement::ONE;
    let mut k = 0u64;
    while acc != a {
        acc = field.mul(acc, g);
        k += 1;
    }
    if k == 1 {
        "g".into()
    } else {
        format!("g^{k}")
    }
}

pub(crate) fn format_poly(p: &Poly) -> String {
    let field = p.field();
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, &c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        let coeff = format_element(field, c);
        match (k, c == FieldElement::ONE) {
            (0, _) => out.push_str(&coeff),
            (_, true) => {}
            (_, false) => {
                out.push_str(&coeff);
                out.push('*');
            }
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{k}")),
        }
    }
    out
}

/// Ascending coefficient list; extension-field coefficients as residue vectors.
pub fn format_coeff_list(p: &Poly) -> String {
    let field = p.field();
    let items: Vec<String> = p
        .coeffs()
        .iter()
        .map(|&c| {
            if field.is_prime_field() {
                c.index().to_string()
            } else {
                let r: Vec<String> = field.residues(c).iter().map(u32::to_string).collect();
                format!("[{}]", r.join(","))
            }
        })
        .collect();
    format!("[{}]", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn term_form() {
        let f = gf(3);
        assert_eq!(
            parse_poly(&f, "x^2+x+2").unwrap(),
            Poly::from_ints(&f, &[2, 1, 1])
        );
        assert_eq!(
            parse_poly(&f, "x^2 - 1").unwrap(),
            Poly::from_ints(&f, &[2, 0, 1])
        );
        assert_eq!(
            parse_poly(&f, "-x + 2*x^3 + 4").unwrap(),
            Poly::from_ints(&f, &[1, 2, 0, 2])
        );
        assert_eq!(parse_poly(&f, "2x").unwrap(), Poly::from_ints(&f, &[0, 2]));
        assert!(parse_poly(&f, "0").unwrap().is_zero());
        assert_eq!(Poly::from_ints(&f, &[2, 1, 1]).to_string(), "x^2+x+2");
        assert_eq!(Poly::from_ints(&f, &[2, 0, 2]).to_string(), "2*x^2+2");
    }

    #[test]
    fn list_form_and_extension_coefficients() {
        let f = gf(4);
        let a = parse_poly(&f, "[1,[0,1],1]").unwrap();
        let b = parse_poly(&f, "x^2+[0,1]*x+1").unwrap();
        let c = parse_poly(&f, "x^2 + g*x + 1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "x^2+g*x+1");
        assert_eq!(format_coeff_list(&a), "[[1,0],[0,1],[1,0]]");
        assert_eq!(parse_poly(&f, &format_coeff_list(&a)).unwrap(), a);
        // a bare residue vector followed by more terms is term form
        assert_eq!(parse_poly(&f, "[0,1]*x+[1,1]").unwrap().degree(), Some(1));
        let constant = Poly::constant(&f, f.generator_power(2));
        assert_eq!(parse_poly(&f, &constant.to_string()).unwrap(), constant);
    }

    #[test]
    fn errors() {
        let f = gf(3);
        for bad in ["", "x^", "x++1", "[1,2", "y", "x^2 x", "[[0,3]]", "[[0,1]]"] {
            assert!(matches!(parse_poly(&f, bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
