//! Generator-list parsing and the canonical renderer.
//!
//! Two input syntaxes are accepted:
//! - monomial lists, e.g. `x^2, y^3` or `x1^14, x2^7, x1*x2^6, x3^4`
//!   (aliases `x, y, z, w` stand for `x1..x4`);
//! - JSON exponent lists, e.g. `[[14,0,0],[0,7,0],[1,6,0],[0,0,4]]`.
//!
//! `parse_ideal(render(I)) == I` for every ideal.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, Exponent, MonomialIdeal};

/// Parses a generator list in either syntax. The ambient dimension is the
/// largest variable index used unless `dim` is given (which must not be
/// smaller).
pub fn parse_ideal(text: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('[') {
        parse_json_ideal(text, dim)
    } else {
        parse_monomial_ideal(text, dim)
    }
}

/// Parses a single monomial, returning its exponent vector padded to the
/// inferred (or given) dimension.
pub fn parse_monomial(text: &str, dim: Option<usize>) -> Result<Exponent> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let term = p.parse_generator()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    let inferred = term.iter().map(|&(v, _)| v).max().unwrap_or(1);
    let n = resolve_dim(dim, inferred, text.len())?;
    Ok(assemble(term, n))
}

fn parse_json_ideal(text: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: e.column().saturating_sub(1),
        message: format!("invalid exponent-list JSON: {e}"),
    })?;
    if rows.is_empty() {
        return Err(Error::Parse { position: 0, message: "empty generator list".into() });
    }
    let n = rows[0].len();
    if n == 0 {
        return Err(Error::Parse { position: 0, message: "empty exponent vector".into() });
    }
    let mut gens = Vec::with_capacity(rows.len());
    for row in &rows {
        if row.len() != n {
            return Err(Error::Parse {
                position: 0,
                message: format!("exponent vectors of unequal length: {} vs {}", n, row.len()),
            });
        }
        let mut coords = Vec::with_capacity(n);
        for &v in row {
            if v < 0 {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("negative exponent {v}"),
                });
            }
            coords.push(v as u32);
        }
        gens.push(Exponent(coords));
    }
    let n = resolve_dim(dim, n, 0)?;
    let gens = gens
        .into_iter()
        .map(|g| {
            let mut c = g.0;
            c.resize(n, 0);
            Exponent(c)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

fn parse_monomial_ideal(text: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    let mut p = Parser::new(text);
    let mut terms: Vec<Vec<(usize, u32)>> = Vec::new();
    loop {
        p.skip_ws();
        terms.push(p.parse_generator()?);
        p.skip_ws();
        match p.peek() {
            Some(b',') => {
                p.pos += 1;
            }
            None => break,
            Some(c) => {
                return Err(p.error(&format!("expected ',' or end of input, found {:?}", c as char)))
            }
        }
    }
    if terms.is_empty() {
        return Err(Error::Parse { position: 0, message: "empty generator list".into() });
    }
    let inferred = terms
        .iter()
        .flat_map(|t| t.iter().map(|&(v, _)| v))
        .max()
        .unwrap_or(1);
    let n = resolve_dim(dim, inferred, text.len())?;
    let gens = terms.into_iter().map(|t| assemble(t, n)).collect();
    MonomialIdeal::new(n, gens)
}

fn resolve_dim(dim: Option<usize>, inferred: usize, pos: usize) -> Result<usize> {
    match dim {
        None => Ok(inferred.max(1)),
        Some(d) if d >= inferred && d >= 1 => Ok(d),
        Some(d) => Err(Error::Parse {
            position: pos,
            message: format!("declared dimension {d} smaller than largest variable index {inferred}"),
        }),
    }
}

fn assemble(term: Vec<(usize, u32)>, n: usize) -> Exponent {
    let mut coords = vec![0u32; n];
    for (var, exp) in term {
        coords[var - 1] += exp;
    }
    Exponent(coords)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    /// generator := "1" | term ('*' term)*
    fn parse_generator(&mut self) -> Result<Vec<(usize, u32)>> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut factors = vec![self.parse_term()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                factors.push(self.parse_term()?);
            } else {
                return Ok(factors);
            }
        }
    }

    /// term := var ('^' int)?
    fn parse_term(&mut self) -> Result<(usize, u32)> {
        let var = self.parse_var()?;
        self.skip_ws();
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            if self.peek() == Some(b'-') {
                return Err(self.error("negative exponent"));
            }
            self.parse_int()?
        } else {
            1
        };
        Ok((var, exp))
    }

    fn parse_var(&mut self) -> Result<usize> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                if matches!(self.peek(), Some(b'0'..=b'9')) {
                    let idx = self.parse_int()? as usize;
                    if idx == 0 {
                        return Err(self.error("variable index must be >= 1"));
                    }
                    Ok(idx)
                } else {
                    Ok(1)
                }
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(2)
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(3)
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(4)
            }
            Some(c) => Err(self.error(&format!(
                "expected a variable (x1..xn, or x/y/z/w), found {:?}",
                c as char
            ))),
            None => Err(self.error("expected a variable, found end of input")),
        }
    }

    fn parse_int(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a nonnegative integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| Error::Parse { position: start, message: "integer out of range".into() })
    }
}

/// Canonical renderer: generators in canonical order, aliases `x,y,z,w` for
/// dimension <= 4 and `x1..xn` above.
pub fn render(ideal: &MonomialIdeal) -> String {
    ideal
        .gens()
        .iter()
        .map(|g| render_exponent(g, ideal.dim()))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Renders one monomial `x^k`.
pub fn render_exponent(g: &Exponent, dim: usize) -> String {
    if g.is_zero() {
        return "1".into();
    }
    let var_name = |i: usize| -> String {
        if dim <= 4 {
            ["x", "y", "z", "w"][i].into()
        } else {
            format!("x{}", i + 1)
        }
    };
    g.coords()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { var_name(i) } else { format!("{}^{}", var_name(i), e) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Re-parses what `render` produced; used by round-trip checks.
pub fn parse_rendered(text: &str, dim: usize) -> Result<MonomialIdeal> {
    parse_ideal(text, Some(dim))
}
