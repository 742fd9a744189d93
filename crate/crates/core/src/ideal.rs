//! The ideal file format: a ring header, an order name, and one polynomial
//! per line in infix notation.
//!
//! ```text
//! ring: QQ[x1,x2,x3,x4]
//! order: grevlex
//! polys:
//! x1*x4
//! x1*x2 - x2^2
//! ```

use crate::field::{is_prime, FieldSpec};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub polys: Vec<Polynomial>,
}

impl IdealFile {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order_name(&self) -> &'static str {
        order_name(&self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

pub fn order_name(ord: &MonomialOrder) -> &'static str {
    match ord {
        MonomialOrder::Lex => "lex",
        MonomialOrder::GrLex => "grlex",
        MonomialOrder::GrevLex => "grevlex",
        MonomialOrder::Matrix(_) => "matrix",
    }
}

pub fn order_by_name(name: &str) -> Option<MonomialOrder> {
    match name {
        "lex" => Some(MonomialOrder::Lex),
        "grlex" => Some(MonomialOrder::GrLex),
        "grevlex" => Some(MonomialOrder::GrevLex),
        _ => None,
    }
}

/// Parses the whole file format.
pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut lines = text.lines().enumerate();

    let (ring_no, ring_line) = next_content_line(&mut lines).ok_or_else(|| ParseError {
        line: 1,
        col: 1,
        message: "missing ring header".into(),
    })?;
    let (field, vars) = parse_ring_header(ring_no, ring_line)?;

    let (ord_no, ord_line) = next_content_line(&mut lines).ok_or_else(|| ParseError {
        line: ring_no + 1,
        col: 1,
        message: "missing order line".into(),
    })?;
    let rest = strip_keyword(ord_no, ord_line, "order:")?;
    let name = rest.trim();
    let order = order_by_name(name).ok_or_else(|| ParseError {
        line: ord_no,
        col: ord_line.find(name).unwrap_or(0) + 1,
        message: format!("unknown order `{}` (expected lex, grlex or grevlex)", name),
    })?;

    let (polys_no, polys_line) = next_content_line(&mut lines).ok_or_else(|| ParseError {
        line: ord_no + 1,
        col: 1,
        message: "missing polys section".into(),
    })?;
    let rest = strip_keyword(polys_no, polys_line, "polys:")?;
    if !rest.trim().is_empty() {
        return err(
            polys_no,
            polys_line.find(rest.trim()).unwrap_or(0) + 1,
            "unexpected text after `polys:`",
        );
    }

    let mut polys = Vec::new();
    for (no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        polys.push(parse_polynomial(line, no + 1, &field, &vars, &order)?);
    }
    if polys.is_empty() {
        return err(polys_no, 1, "empty polys section");
    }
    Ok(IdealFile {
        field,
        vars,
        order,
        polys,
    })
}

fn next_content_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Option<(usize, &'a str)> {
    lines
        .find(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
}

fn strip_keyword<'a>(line_no: usize, line: &'a str, kw: &str) -> Result<&'a str, ParseError> {
    let trimmed = line.trim_start();
    if let Some(rest) = trimmed.strip_prefix(kw) {
        Ok(rest)
    } else {
        err(
            line_no,
            line.len() - trimmed.len() + 1,
            format!("expected `{}`", kw),
        )
    }
}

fn parse_ring_header(line_no: usize, line: &str) -> Result<(FieldSpec, Vec<String>), ParseError> {
    let rest = strip_keyword(line_no, line, "ring:")?;
    let rest = rest.trim();
    let open = rest.find('[').ok_or_else(|| ParseError {
        line: line_no,
        col: 1,
        message: "expected `[` after field".into(),
    })?;
    let field_text = rest[..open].trim();
    let field = if field_text == "QQ" {
        FieldSpec::Rational
    } else if let Some(modstr) = field_text.strip_prefix("Fp:") {
        let p: u64 = modstr.parse().map_err(|_| ParseError {
            line: line_no,
            col: 1,
            message: format!("bad modulus `{}`", modstr),
        })?;
        if p >= (1 << 31) {
            return err(line_no, 1, format!("modulus {} exceeds 2^31", p));
        }
        if !is_prime(p as u32) {
            return err(line_no, 1, format!("modulus {} is not prime", p));
        }
        FieldSpec::Prime(p as u32)
    } else {
        return err(
            line_no,
            1,
            format!("unknown field `{}` (expected QQ or Fp:<prime>)", field_text),
        );
    };
    if !rest.ends_with(']') {
        return err(
            line_no,
            line.len(),
            "expected `]` closing the variable list",
        );
    }
    let names: Vec<String> = rest[open + 1..rest.len() - 1]
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    if names.iter().any(|n| n.is_empty() || !is_identifier(n)) {
        return err(line_no, open + 1, "variable names must be identifiers");
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return err(line_no, open + 1, format!("duplicate variable `{}`", n));
        }
    }
    Ok((field, names))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(line: &str, line_no: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text.parse().map_err(|_| ParseError {
                line: line_no,
                col,
                message: format!("integer `{}` out of range", text),
            })?;
            toks.push((Tok::Num(n), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                _ => {
                    return err(line_no, col, format!("unexpected character `{}`", c));
                }
            };
            toks.push((tok, col));
            i += 1;
        }
    }
    Ok(toks)
}

/// Parses one polynomial line: signed terms of integer coefficients and
/// variable powers, `*` optional between factors.
pub fn parse_polynomial(
    line: &str,
    line_no: usize,
    field: &FieldSpec,
    vars: &[String],
    order: &MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let toks = tokenize(line, line_no)?;
    if toks.is_empty() {
        return err(line_no, 1, "empty polynomial");
    }
    let mut terms: Vec<Term> = Vec::new();
    let mut i = 0;
    loop {
        // sign prefix
        let mut sign = 1i64;
        while i < toks.len() {
            match toks[i].0 {
                Tok::Plus => i += 1,
                Tok::Minus => {
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
        }
        if i == toks.len() {
            return err(
                line_no,
                toks.last().map(|t| t.1).unwrap_or(1),
                "dangling sign",
            );
        }
        // one term: factors separated by optional `*`
        let mut coeff: i64 = sign;
        let mut exps = vec![0u32; vars.len()];
        loop {
            match &toks[i] {
                (Tok::Num(n), col) => {
                    coeff = coeff.checked_mul(*n).ok_or_else(|| ParseError {
                        line: line_no,
                        col: *col,
                        message: "coefficient overflow".into(),
                    })?;
                    i += 1;
                }
                (Tok::Ident(name), col) => {
                    let Some(vi) = vars.iter().position(|v| v == name) else {
                        return err(line_no, *col, format!("unknown variable `{}`", name));
                    };
                    let mut e: u32 = 1;
                    i += 1;
                    if i < toks.len() && toks[i].0 == Tok::Caret {
                        i += 1;
                        match toks.get(i) {
                            Some((Tok::Num(n), _)) if *n >= 0 => {
                                e = *n as u32;
                                i += 1;
                            }
                            Some((_, col)) => {
                                return err(line_no, *col, "expected nonnegative integer exponent");
                            }
                            None => {
                                return err(line_no, line.len(), "expected exponent after `^`");
                            }
                        }
                    }
                    exps[vi] += e;
                }
                (Tok::Caret, col) => return err(line_no, *col, "unexpected `^`"),
                (Tok::Star, col) => return err(line_no, *col, "unexpected `*`"),
                (Tok::Plus | Tok::Minus, _) => unreachable!(),
            }
            // factor separator: explicit star, or implicit before another factor
            if i < toks.len() && toks[i].0 == Tok::Star {
                i += 1;
                if i == toks.len() {
                    return err(line_no, line.len(), "dangling `*`");
                }
                continue;
            }
            match toks.get(i) {
                Some((Tok::Num(_) | Tok::Ident(_), _)) => continue,
                _ => break,
            }
        }
        terms.push(Term {
            coeff: field.from_i64(coeff),
            mono: Monomial::new(exps.clone()),
        });
        if i == toks.len() {
            break;
        }
        match toks[i].0 {
            Tok::Plus | Tok::Minus => continue,
            _ => return err(line_no, toks[i].1, "expected `+` or `-` between terms"),
        }
    }
    Ok(Polynomial::from_terms(terms, order))
}

/// Prints back in the file grammar; parsing the result reproduces the input
/// structurally.
pub fn print_ideal(ideal: &IdealFile) -> String {
    let field = match ideal.field {
        FieldSpec::Rational => "QQ".to_string(),
        FieldSpec::Prime(p) => format!("Fp:{}", p),
    };
    let mut out = format!(
        "ring: {}[{}]\norder: {}\npolys:\n",
        field,
        ideal.vars.join(","),
        ideal.order_name()
    );
    for p in &ideal.polys {
        out.push_str(&p.format(&ideal.vars));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    const EXAMPLE: &str =
        "ring: QQ[x1,x2,x3,x4]\norder: grevlex\npolys:\nx1*x4\nx1*x2 - x2^2\nx1*x3 - x3^2\n";

    #[test]
    fn parses_the_worked_example() {
        let ideal = parse_ideal(EXAMPLE).unwrap();
        assert_eq!(ideal.field, FieldSpec::Rational);
        assert_eq!(ideal.vars, vec!["x1", "x2", "x3", "x4"]);
        assert_eq!(ideal.order, MonomialOrder::GrevLex);
        let f = FieldSpec::Rational;
        assert_eq!(ideal.polys[0], poly(f, &ideal.order, &[(1, &[1, 0, 0, 1])]));
        assert_eq!(
            ideal.polys[1],
            poly(f, &ideal.order, &[(1, &[1, 1, 0, 0]), (-1, &[0, 2, 0, 0])])
        );
    }

    #[test]
    fn empty_polys_is_an_error() {
        let e = parse_ideal("ring: QQ[x]\norder: lex\npolys:\n").unwrap_err();
        assert!(e.message.contains("empty polys"));
    }

    #[test]
    fn negative_exponent_is_a_syntax_error() {
        let e = parse_ideal("ring: QQ[x1]\norder: lex\npolys:\nx1^-1\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("exponent"));
    }

    #[test]
    fn unknown_variable_reports_position() {
        let e = parse_ideal("ring: QQ[x1]\norder: lex\npolys:\nx1*y\n").unwrap_err();
        assert_eq!((e.line, e.col), (4, 4));
        assert!(e.message.contains("unknown variable"));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        let e = parse_ideal("ring: Fp:32001[x]\norder: lex\npolys:\nx\n").unwrap_err();
        assert!(e.message.contains("not prime"));
    }

    #[test]
    fn implicit_multiplication_and_coefficients() {
        let ideal =
            parse_ideal("ring: Fp:32003[x,y]\norder: grevlex\npolys:\n2x y^2 - 3*x^2\n").unwrap();
        let f = FieldSpec::Prime(32003);
        assert_eq!(
            ideal.polys[0],
            poly(f, &MonomialOrder::GrevLex, &[(2, &[1, 2]), (-3, &[2, 0])])
        );
    }

    #[test]
    fn round_trip_is_stable() {
        let inputs = [
            EXAMPLE,
            "ring: Fp:32003[x,y,z]\norder: grlex\npolys:\n- x + 2y\nz^3 - 1\n",
        ];
        for text in inputs {
            let once = parse_ideal(text).unwrap();
            let twice = parse_ideal(&print_ideal(&once)).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn round_trip_on_random_instances() {
        let ord = MonomialOrder::GrevLex;
        let params = crate::random::RandomIdealParams::default();
        for seed in 0..40 {
            let (nvars, gens) = crate::random::random_ideal(seed, &params, &ord);
            let ideal = IdealFile {
                field: FieldSpec::Prime(32003),
                vars: (1..=nvars).map(|i| format!("x{}", i)).collect(),
                order: ord.clone(),
                polys: gens,
            };
            let parsed = parse_ideal(&print_ideal(&ideal)).unwrap();
            assert_eq!(parsed, ideal);
        }
    }
}
