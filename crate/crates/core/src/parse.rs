//! Expression and field-spec parsing, and the matching printers.
//!
//! Grammar: integer literals, names `[A-Za-z][A-Za-z0-9]*`, binary
//! `+ - * /`, unary `-`, `^` with a nonnegative integer exponent, and
//! parentheses. Division is only by nonzero constants. Names resolve to ring
//! variables first, then to the field's generator or parameter.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fields::{Elem, Field};
use crate::poly::{MonomialOrder, MultiPoly};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Name(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    field: &'a Field,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let pos = self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end);
        Err(Error::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.field, self.vars)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                self.pos += 1;
                let at = self.pos;
                let d = self.unary()?;
                let Some(c) = d.constant_value() else {
                    self.pos = at;
                    return self.err("division is only allowed by constants");
                };
                let inv = self.field.inv(&c).or_else(|_| {
                    self.pos = at;
                    self.err("division by zero")
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let Ok(e) = u32::try_from(&n) else {
                        return self.err("exponent too large");
                    };
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(
                    self.field,
                    self.vars,
                    self.field.from_bigint(&n),
                ))
            }
            Some(Tok::Name(name)) => {
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    self.pos += 1;
                    return Ok(self.zero().var_at(i));
                }
                match symbol_value(self.field, &name) {
                    Some(c) => {
                        self.pos += 1;
                        Ok(MultiPoly::constant(self.field, self.vars, c))
                    }
                    None => self.err(format!("unknown variable {name}")),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Constant named by a field symbol: an extension generator or the
/// parameter of `F_p(s)`, possibly one level down.
fn symbol_value(k: &Field, name: &str) -> Option<Elem> {
    if k.symbol() == Some(name) {
        return k.generator();
    }
    if k.is_extension() {
        let b = k.base();
        if b.symbol() == Some(name) {
            return b.generator().map(|g| k.lift(g));
        }
    }
    None
}

/// Parses `text` as a polynomial over `field` in the ring with variables
/// `vars`.
pub fn parse_poly(text: &str, field: &Field, vars: &[&str]) -> Result<MultiPoly> {
    for v in vars {
        if symbol_value(field, v).is_some() {
            return Err(Error::Usage(format!(
                "variable {v} clashes with a field symbol"
            )));
        }
    }
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        field,
        vars,
    };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Names in `text` that are not field symbols, in order of first
/// appearance.
pub fn variable_names(text: &str, field: &Field) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in lex(text)? {
        if let Tok::Name(n) = t {
            if symbol_value(field, &n).is_none() && !out.contains(&n) {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// Parses `Q`, `F<p>`, `F<p>(<s>)`, or `<base>[<g>]/(<m(g)>)`.
pub fn parse_field(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    let bad = |msg: &str| Err(Error::InvalidField(format!("{spec}: {msg}")));
    if let Some(open) = spec.find('[') {
        let base = parse_field(&spec[..open])?;
        if base.is_extension() {
            return bad("only one extension level is supported");
        }
        let Some(close) = spec[open..].find(']').map(|c| c + open) else {
            return bad("missing ']'");
        };
        let generator = spec[open + 1..close].trim();
        if !is_name(generator) {
            return bad("generator must be a name");
        }
        let rest = spec[close + 1..].trim();
        let Some(inner) = rest
            .strip_prefix("/(")
            .or_else(|| rest.strip_prefix("/ ("))
            .and_then(|r| r.strip_suffix(')'))
        else {
            return bad("expected /(minimal polynomial)");
        };
        let m = parse_poly(inner, &base, &[generator])?;
        let dense = m.to_dense(0)?;
        return base.extend(&dense, generator);
    }
    if spec == "Q" {
        return Ok(Field::rationals());
    }
    let Some(rest) = spec.strip_prefix('F') else {
        return bad("unknown field");
    };
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    let Ok(p) = digits.parse::<u64>() else {
        return bad("expected a prime after F");
    };
    let tail = rest[digits.len()..].trim();
    if tail.is_empty() {
        return Field::prime(p);
    }
    match tail.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(param) if is_name(param.trim()) => Field::rational_functions(p, param.trim()),
        _ => bad("expected F<p> or F<p>(<parameter>)"),
    }
}

fn is_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic())
        && c.all(|ch| ch.is_ascii_alphanumeric())
}

/// A negative rational, or an element printed as a single negated term.
fn looks_negative(k: &Field, c: &Elem) -> bool {
    if let Elem::Rational(q) = c {
        return q < &num_rational::BigRational::from_integer(0.into());
    }
    let t = k.format(c);
    let inner = t
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(&t);
    inner.starts_with('-') && !inner[1..].contains(['+', '-', '('])
}

/// Joins `(coefficient, monomial)` pairs into a parseable sum. An empty
/// monomial string stands for 1.
pub(crate) fn render_terms<'a>(
    k: &Field,
    terms: impl Iterator<Item = (&'a Elem, String)>,
) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if k.is_zero(c) {
            continue;
        }
        let (neg, c) = if looks_negative(k, c) {
            (true, k.neg(c))
        } else {
            (false, c.clone())
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mono.is_empty() {
            out.push_str(&k.format(&c));
        } else if k.is_one(&c) {
            out.push_str(&mono);
        } else {
            out.push_str(&k.format(&c));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Prints a polynomial in the parser's grammar, terms in descending
/// graded reverse lexicographic order.
pub fn format_poly(p: &MultiPoly) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    let order = MonomialOrder::GrevLex;
    terms.sort_by(|a, b| order.cmp(b.0, a.0));
    let names = p.vars();
    render_terms(
        p.field(),
        terms.into_iter().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{k}", names[i])
                    }
                })
                .collect();
            (c, mono.join("*"))
        }),
    )
}
