use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ternary::{Monomial, TernaryForm};
use super::QuarticError;

/// Parses a homogeneous form such as `x^3*y + y^3*z - 2/3*z^3*x`.
///
/// Terms are `c*x^i*y^j*z^k` joined by `+` or `-`. The coefficient may be
/// an integer or a fraction `a/b`; `*` and `^1` may be omitted and
/// whitespace is ignored. Errors carry a 1-based column.
pub fn parse_form(input: &str) -> Result<TernaryForm, QuarticError> {
    let mut p = Parser { chars: input.char_indices().collect(), pos: 0, input };
    let mut terms = Vec::new();
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty polynomial"));
    }
    let mut first = true;
    loop {
        p.skip_ws();
        let negative = match p.peek() {
            Some('+') => {
                p.bump();
                false
            }
            Some('-') => {
                p.bump();
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(p.error(&format!("expected '+' or '-', found '{c}'"))),
            None => break,
        };
        first = false;
        let (mono, mut coeff) = p.term()?;
        if negative {
            coeff = -coeff;
        }
        terms.push((mono, coeff));
    }
    TernaryForm::new(terms)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn column(&self) -> usize {
        let byte = self.chars.get(self.pos).map_or(self.input.len(), |&(b, _)| b);
        self.input[..byte].chars().count() + 1
    }

    fn error(&self, message: &str) -> QuarticError {
        QuarticError::Parse { column: self.column(), message: message.to_string() }
    }

    fn integer(&mut self) -> Result<BigInt, QuarticError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), QuarticError> {
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut saw_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            self.skip_ws();
            let den = if self.peek() == Some('/') {
                self.bump();
                let den = self.integer()?;
                if den.is_zero() {
                    self.pos -= 1;
                    return Err(self.error("zero denominator"));
                }
                den
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(num, den);
            saw_coeff = true;
        }
        let mut mono = [0u32; 3];
        let mut factors = 0;
        loop {
            self.skip_ws();
            if (saw_coeff || factors > 0) && self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                if !self.peek().is_some_and(is_var) {
                    return Err(self.error("expected x, y or z after '*'"));
                }
            }
            let Some(c) = self.peek().filter(|&c| is_var(c)) else { break };
            self.bump();
            let v = (c as u8 - b'x') as usize;
            self.skip_ws();
            let exp = if self.peek() == Some('^') {
                self.bump();
                let col = self.column();
                let e = self.integer()?;
                u32::try_from(e).map_err(|_| QuarticError::Parse { column: col, message: "exponent too large".into() })?
            } else {
                1
            };
            mono[v] += exp;
            factors += 1;
        }
        if !saw_coeff && factors == 0 {
            return Err(match self.peek() {
                Some(c) => self.error(&format!("unexpected character '{c}'")),
                None => self.error("expected a term"),
            });
        }
        Ok((mono, coeff))
    }
}

fn is_var(c: char) -> bool {
    matches!(c, 'x' | 'y' | 'z')
}
