//! Flag value parsing: rationals, `1+k*p` sugar, and comma lists with ranges.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::padic_core::{parse_rational, Rational};

/// Integer expression over `+ - * ^`, parentheses, and the symbol `p`.
struct Expr<'a> {
    s: &'a [u8],
    pos: usize,
    p: i128,
}

impl Expr<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn fail(&self) -> Error {
        Error::InvalidParameter(format!(
            "cannot parse {:?} near position {}",
            String::from_utf8_lossy(self.s),
            self.pos
        ))
    }

    fn sum(&mut self) -> Result<i128> {
        let mut x = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let y = self.product()?;
            x = if op == b'+' { x.checked_add(y) } else { x.checked_sub(y) }.ok_or_else(|| self.fail())?;
        }
        Ok(x)
    }

    fn product(&mut self) -> Result<i128> {
        let mut x = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            x = x.checked_mul(self.power()?).ok_or_else(|| self.fail())?;
        }
        Ok(x)
    }

    fn power(&mut self) -> Result<i128> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.atom()?;
            let e = u32::try_from(e).map_err(|_| self.fail())?;
            return base.checked_pow(e).ok_or_else(|| self.fail());
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<i128> {
        match self.peek() {
            Some(b'p') => {
                self.pos += 1;
                Ok(self.p)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let x = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.fail());
                }
                self.pos += 1;
                Ok(x)
            }
            Some(b'0'..=b'9') => {
                let start = self.pos;
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
                std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.fail())
            }
            _ => Err(self.fail()),
        }
    }
}

/// A Frobenius constant: a rational, or an integer expression in `p`
/// such as `1+p`, `1-p` or `1+2*p`.
pub fn parse_c(text: &str, p: u64) -> Result<Rational> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if !compact.contains('p') {
        return parse_rational(&compact);
    }
    let mut e = Expr { s: compact.as_bytes(), pos: 0, p: p as i128 };
    let x = e.sum()?;
    if e.pos != compact.len() {
        return Err(e.fail());
    }
    Ok(Rational::from_integer(BigInt::from(x)))
}

fn split(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// `3,5,7` or `1..3` (inclusive) or a mix.
pub fn parse_int_list<T: TryFrom<u64>>(text: &str) -> Result<Vec<T>> {
    let bad = |s: &str| Error::InvalidParameter(format!("bad integer list entry {s:?}"));
    let mut out = Vec::new();
    for part in split(text) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = lo.parse().map_err(|_| bad(part))?;
            let hi: u64 = hi.parse().map_err(|_| bad(part))?;
            for x in lo..=hi {
                out.push(T::try_from(x).map_err(|_| bad(part))?);
            }
        } else {
            let x: u64 = part.parse().map_err(|_| bad(part))?;
            out.push(T::try_from(x).map_err(|_| bad(part))?);
        }
    }
    Ok(out)
}

pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    split(text).map(parse_rational).collect()
}

/// Raw `c` entries; each is resolved against `p` per grid point.
pub fn split_list(text: &str) -> Vec<String> {
    split(text).map(str::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic_core::rational::{int, rational};

    #[test]
    fn c_sugar() {
        assert_eq!(parse_c("1+p", 5).unwrap(), int(6));
        assert_eq!(parse_c("1-p", 7).unwrap(), int(-6));
        assert_eq!(parse_c("1 + 2*p", 3).unwrap(), int(7));
        assert_eq!(parse_c("1+p^2", 3).unwrap(), int(10));
        assert_eq!(parse_c("5/4", 3).unwrap(), rational(5, 4));
        assert!(parse_c("1+q", 3).is_err());
        assert!(parse_c("1+p)", 3).is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_int_list::<u64>("3, 5,7").unwrap(), vec![3, 5, 7]);
        assert_eq!(parse_int_list::<u32>("1..3").unwrap(), vec![1, 2, 3]);
        assert!(parse_int_list::<u32>("x").is_err());
        assert_eq!(parse_rational_list("1/3,22").unwrap(), vec![rational(1, 3), int(22)]);
        assert!(parse_int_list::<u64>("").unwrap().is_empty());
    }
}
