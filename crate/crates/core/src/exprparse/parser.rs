use super::{BinaryOp, ExprAst, ExprKind, Func, NamedConst, ParseError};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number '{n}'"),
            Tok::Ident(name) => format!("identifier '{name}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn err(position: usize, expected: impl Into<String>, found: impl Into<String>) -> ParseError {
    ParseError {
        position,
        expected: expected.into(),
        found: found.into(),
    }
}

/// Splits the input into (token, 1-based column) pairs, ending with `End`.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, col));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            // exponent marker only when digits follow, so "2e" stays an error
            // at the identifier rather than a malformed number
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            out.push((Tok::Number(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        return Err(err(col, "expression", format!("character '{c}'")));
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn col(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(err(self.col(), want.describe(), self.peek().describe()))
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinaryOp::Add,
                Tok::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinaryOp::Mul,
                Tok::Slash => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if *self.peek() == Tok::Minus {
            let (_, pos) = self.bump();
            let arg = self.unary()?;
            return Ok(ExprAst {
                kind: ExprKind::Neg(Box::new(arg)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            let (_, pos) = self.bump();
            let exponent = self.unary()?;
            return Ok(binary(BinaryOp::Pow, base, exponent, pos));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<ExprAst, ParseError> {
        let (tok, pos) = self.bump();
        let kind = match tok {
            Tok::Number(text) => ExprKind::Number(text),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(inner);
            }
            Tok::Ident(name) => match name.as_str() {
                "s" => ExprKind::Var,
                "pi" => ExprKind::Const(NamedConst::Pi),
                "gamma" => ExprKind::Const(NamedConst::Gamma),
                other => match Func::from_name(other) {
                    Some(func) => {
                        self.expect(Tok::LParen)?;
                        let arg = self.expr()?;
                        self.expect(Tok::RParen)?;
                        ExprKind::Call(func, Box::new(arg))
                    }
                    None => {
                        return Err(err(
                            pos,
                            "variable 's', constant or function",
                            format!("unknown identifier '{other}'"),
                        ))
                    }
                },
            },
            other => {
                return Err(err(
                    pos,
                    "number, 's', constant, function or '('",
                    other.describe(),
                ))
            }
        };
        Ok(ExprAst { kind, pos })
    }
}

fn binary(op: BinaryOp, lhs: ExprAst, rhs: ExprAst, pos: usize) -> ExprAst {
    ExprAst {
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
        pos,
    }
}

/// Parses a transform expression.
pub fn parse(text: &str) -> Result<ExprAst, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let ast = p.expr()?;
    match p.peek() {
        Tok::End => Ok(ast),
        other => Err(err(p.col(), "operator or end of input", other.describe())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unbalanced_paren() {
        let e = parse("1/(s").unwrap_err();
        assert_eq!(e.position, 5);
        assert_eq!(e.expected, "')'");
        assert_eq!(e.found, "end of input");
    }

    #[test]
    fn grammar_coverage() {
        assert!(parse("erf(2/sqrt(s))").is_ok());
        assert!(parse("s/(s^2+1)^2").is_ok());
        assert!(parse("  ln( s ) / s ").is_ok());
        assert!(parse("1.5e-3*s + 2E+2 - 0.25").is_ok());
        assert!(parse("pi*gamma").is_ok());
    }

    #[test]
    fn unknown_identifier_named() {
        let e = parse("s + foo(s)").unwrap_err();
        assert_eq!(e.position, 5);
        assert!(e.found.contains("foo"));
    }

    #[test]
    fn function_needs_parenthesis() {
        let e = parse("sqrt s").unwrap_err();
        assert_eq!(e.position, 6);
        assert_eq!(e.expected, "'('");
    }

    #[test]
    fn trailing_garbage() {
        let e = parse("s s").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse("s)").unwrap_err();
        assert_eq!(e.position, 2);
    }

    #[test]
    fn bad_character() {
        let e = parse("s # 2").unwrap_err();
        assert_eq!(e.position, 3);
    }

    #[test]
    fn empty_input() {
        let e = parse("").unwrap_err();
        assert_eq!(e.position, 1);
        assert_eq!(e.found, "end of input");
    }

    #[test]
    fn minus_binds_looser_than_power() {
        let ast = parse("-s^2").unwrap();
        match ast.kind {
            ExprKind::Neg(inner) => {
                assert!(matches!(inner.kind, ExprKind::Binary(BinaryOp::Pow, _, _)))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn power_is_right_associative() {
        let ast = parse("s^2^3").unwrap();
        let ExprKind::Binary(BinaryOp::Pow, base, exp) = ast.kind else {
            panic!("not a power");
        };
        assert_eq!(base.kind, ExprKind::Var);
        assert!(matches!(exp.kind, ExprKind::Binary(BinaryOp::Pow, _, _)));
    }

    #[test]
    fn number_text_preserved() {
        let ast = parse("0.10").unwrap();
        assert_eq!(ast.kind, ExprKind::Number("0.10".into()));
        // 'e' without digits is not an exponent
        assert!(parse("2e").is_err());
    }

    proptest! {
        #[test]
        fn parse_is_total(text in "[ -~]{0,40}") {
            let len = text.chars().count();
            if let Err(e) = parse(&text) {
                prop_assert!(e.position >= 1 && e.position <= len + 1);
            }
        }

        #[test]
        fn parse_is_total_on_grammar_alphabet(text in "[s0-9.e+*/^()-]{0,30}") {
            let len = text.chars().count();
            if let Err(e) = parse(&text) {
                prop_assert!(e.position >= 1 && e.position <= len + 1);
            }
        }
    }
}
