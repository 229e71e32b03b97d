//! Text form of `F_{q^m}` elements.
//!
//! Accepted input:
//! - a polynomial expression in the generator `a` (aliases `α`, `w`, `y`),
//!   with integer coefficients, `+ - * ^` and parentheses, e.g. `a^2+a+1`,
//!   `2*a^3 - 1`, `(a+1)^5`. When `e > 1`, `x` denotes the generator of `F_q`.
//! - a coordinate list: `[c0, …, c_{m-1}]` with integer entries when `e = 1`,
//!   or nested `[[…], …]` lists of `e` residues otherwise.
//!
//! The canonical printer emits descending powers of `a`; coefficients outside
//! the prime subfield are written as parenthesised polynomials in `x`.

use super::{BaseElement, Field, FieldSpec, GfError};

const EXT_SYMBOLS: [char; 4] = ['a', 'α', 'w', 'y'];

struct Parser<'a> {
    spec: &'a FieldSpec,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(spec: &'a FieldSpec, text: &str) -> Self {
        let chars: Vec<_> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self { spec, chars, pos: 0, len: text.len() }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |(i, _)| *i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, GfError> {
        Err(GfError::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64, GfError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => return self.err("integer overflow"),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<super::ExtElement, GfError> {
        let f = self.spec;
        let mut acc = if self.eat('-') {
            f.neg(&self.term()?)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = f.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = f.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_digit() || c == '(' || c == 'x' || EXT_SYMBOLS.contains(&c),
            None => false,
        }
    }

    fn term(&mut self) -> Result<super::ExtElement, GfError> {
        let f = self.spec;
        let mut acc = self.power()?;
        loop {
            // juxtaposition multiplies too: "2a"
            if self.eat('*') || self.starts_atom() {
                acc = f.mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<super::ExtElement, GfError> {
        let base = self.atom()?;
        if self.eat('^') {
            let exp = self.uint()?;
            Ok(self.spec.pow(&base, exp))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<super::ExtElement, GfError> {
        let f = self.spec;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(f.int(n))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some('x') => {
                if f.e() == 1 {
                    return self.err("'x' names the generator of F_q, which needs e > 1");
                }
                self.bump();
                Ok(f.embed(&f.base().generator()))
            }
            Some(c) if EXT_SYMBOLS.contains(&c) => {
                self.bump();
                Ok(f.generator())
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }

    /// `[…]` of integers or nested lists.
    fn list(&mut self) -> Result<ListItem, GfError> {
        if self.eat('[') {
            let mut items = Vec::new();
            if self.eat(']') {
                return Ok(ListItem::List(items));
            }
            loop {
                items.push(self.list()?);
                if self.eat(']') {
                    return Ok(ListItem::List(items));
                }
                if !self.eat(',') {
                    return self.err("expected ',' or ']'");
                }
            }
        }
        Ok(ListItem::Int(self.uint()?))
    }
}

enum ListItem {
    Int(u64),
    List(Vec<ListItem>),
}

impl FieldSpec {
    /// Parse an element; see the module docs for the accepted syntax.
    pub fn parse_element(&self, text: &str) -> Result<super::ExtElement, GfError> {
        let mut parser = Parser::new(self, text);
        if parser.peek().is_none() {
            return parser.err("empty input");
        }
        let value = if parser.peek() == Some('[') {
            let ListItem::List(items) = parser.list()? else { unreachable!() };
            self.coords_from_list(items).map_err(|msg| GfError::Parse { pos: 0, msg })?
        } else {
            parser.expr()?
        };
        if parser.peek().is_some() {
            return parser.err("trailing input");
        }
        Ok(value)
    }

    fn coords_from_list(&self, items: Vec<ListItem>) -> Result<super::ExtElement, String> {
        if items.len() != self.m() {
            return Err(format!("expected {} coordinates, got {}", self.m(), items.len()));
        }
        let base = self.base();
        let coords = items
            .into_iter()
            .map(|item| {
                let raw: Vec<u64> = match item {
                    ListItem::Int(n) if self.e() == 1 => vec![n],
                    ListItem::List(inner) if inner.len() == self.e() => inner
                        .into_iter()
                        .map(|x| match x {
                            ListItem::Int(n) => Ok(n),
                            ListItem::List(_) => Err("nested too deeply".to_string()),
                        })
                        .collect::<Result<_, _>>()?,
                    _ => return Err(format!("each coordinate needs {} residue(s)", self.e())),
                };
                let raw: Vec<u32> = raw
                    .into_iter()
                    .map(|n| u32::try_from(n).map_err(|_| "coefficient too large".to_string()))
                    .collect::<Result<_, _>>()?;
                base.from_coeffs(raw).map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.from_coords(coords).map_err(|e| e.to_string())
    }

    /// Canonical text form; `parse_element` inverts it.
    pub fn format_element(&self, c: &super::ExtElement) -> String {
        let terms: Vec<String> = self
            .expand(c)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, coef)| !self.base().is_zero(coef))
            .map(|(deg, coef)| {
                let is_scalar = coef.coeffs()[1..].iter().all(|&x| x == 0);
                let coef_text =
                    if is_scalar { coef.coeffs()[0].to_string() } else { format!("({})", format_base(coef)) };
                monomial(&coef_text, "a", deg)
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn monomial(coef: &str, sym: &str, deg: usize) -> String {
    let var = match deg {
        0 => return coef.to_string(),
        1 => sym.to_string(),
        d => format!("{sym}^{d}"),
    };
    if coef == "1" {
        var
    } else {
        format!("{coef}*{var}")
    }
}

/// Polynomial form of an `F_q` element in `x`.
pub(crate) fn format_base(c: &BaseElement) -> String {
    let terms: Vec<String> = c
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &v)| v != 0)
        .map(|(deg, v)| monomial(&v.to_string(), "x", deg))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::BaseField;
    use proptest::prelude::*;

    fn f16() -> FieldSpec {
        FieldSpec::prime_extension(2, &[1, 1, 0, 0, 1]).unwrap()
    }

    fn coords(f: &FieldSpec, c: &super::super::ExtElement) -> Vec<u32> {
        f.expand(c).iter().map(|b| b.coeffs()[0]).collect()
    }

    #[test]
    fn parses_polynomial_expressions() {
        let f = f16();
        assert_eq!(f.parse_element("0").unwrap(), f.zero());
        assert_eq!(coords(&f, &f.parse_element("a^2+a").unwrap()), vec![0, 1, 1, 0]);
        assert_eq!(coords(&f, &f.parse_element("a^4").unwrap()), vec![1, 1, 0, 0]);
        assert_eq!(coords(&f, &f.parse_element(" α^2 + α + 1 ").unwrap()), vec![1, 1, 1, 0]);
        assert_eq!(f.parse_element("3a").unwrap(), f.generator());
        assert_eq!(f.parse_element("(a+1)^2").unwrap(), f.parse_element("a^2+1").unwrap());
        assert_eq!(f.parse_element("-a").unwrap(), f.generator());
    }

    #[test]
    fn parses_coordinate_lists() {
        let f = f16();
        assert_eq!(f.parse_element("[0,1,1,0]").unwrap(), f.parse_element("a^2+a").unwrap());
        assert!(f.parse_element("[0,1,1]").is_err());
        assert!(f.parse_element("[0,1,2,0]").is_err());
    }

    #[test]
    fn rejects_malformed_text() {
        let f = f16();
        for bad in ["", "a^", "a+", "(a+1", "a b c )", "z", "x+1", "[0,1"] {
            assert!(matches!(f.parse_element(bad), Err(GfError::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn tower_elements_use_x() {
        let f4 = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
        let spec = FieldSpec::new(f4.clone(), vec![f4.generator(), f4.one(), f4.one()]).unwrap();
        let c = spec.parse_element("(x+1)*a+x").unwrap();
        assert_eq!(spec.format_element(&c), "(x+1)*a+(x)");
        assert_eq!(spec.parse_element("[[0,1],[1,1]]").unwrap(), c);
    }

    #[test]
    fn printer_examples() {
        let f = FieldSpec::prime_extension(3, &[2, 0, 0, 2, 1]).unwrap();
        assert_eq!(f.format_element(&f.zero()), "0");
        assert_eq!(f.format_element(&f.parse_element("2a^3+a+2").unwrap()), "2*a^3+a+2");
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(idx in 0u64..81, tower_idx in 0u64..64) {
            let f = FieldSpec::prime_extension(3, &[2, 0, 0, 2, 1]).unwrap();
            let c = f.element(idx);
            prop_assert_eq!(f.parse_element(&f.format_element(&c)).unwrap(), c);

            let f4 = BaseField::new(2, Some(vec![1, 1, 1])).unwrap();
            let g = crate::gf::find_irreducible(&f4, 3, 0);
            let spec = FieldSpec::new(f4, g).unwrap();
            let c = spec.element(tower_idx);
            prop_assert_eq!(spec.parse_element(&spec.format_element(&c)).unwrap(), c);
        }
    }
}
