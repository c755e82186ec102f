use super::ast::{BinOp, DeclKind, Expr, Ident, Opt, SceneAst, Stmt};
use super::error::{DslError, ErrorKind};
use super::lexer::{tokenize, Pos, Tok, Token};
use super::registry;

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

type PResult<T> = Result<T, DslError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        DslError::new(
            ErrorKind::Syntax,
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn expect(&mut self, t: Tok) -> PResult<Pos> {
        if *self.peek() == t {
            Ok(self.next().pos)
        } else {
            Err(self.unexpected(&t.describe()))
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let pos = self.next().pos;
                Ok(Ident { name, pos })
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn ident_list(&mut self) -> PResult<Vec<Ident>> {
        self.expect(Tok::LParen)?;
        let mut v = vec![self.ident()?];
        while *self.peek() == Tok::Comma {
            self.next();
            v.push(self.ident()?);
        }
        self.expect(Tok::RParen)?;
        Ok(v)
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.unexpected("a statement")),
        };
        let kw_pos = self.pos();
        let decl = match kw.as_str() {
            "scalar" => Some(DeclKind::Scalar),
            "form" => Some(DeclKind::Form),
            "vector" => Some(DeclKind::Vector),
            "bivector" => Some(DeclKind::Bivector),
            _ => None,
        };
        if let Some(kind) = decl {
            self.next();
            let name = self.ident()?;
            self.expect(Tok::Eq)?;
            let expr = self.expr()?;
            return Ok(Stmt::Decl { kind, name, expr });
        }
        match kw.as_str() {
            "chart" => {
                self.next();
                let name = self.ident()?;
                let coords = self.ident_list()?;
                Ok(Stmt::Chart { name, coords })
            }
            "tensor11" => {
                self.next();
                let name = self.ident()?;
                self.expect(Tok::LBrace)?;
                let mut images = Vec::new();
                while *self.peek() != Tok::RBrace {
                    let key = self.ident()?;
                    self.expect(Tok::Arrow)?;
                    let e = self.expr()?;
                    self.expect(Tok::Semi)?;
                    images.push((key, e));
                }
                self.expect(Tok::RBrace)?;
                Ok(Stmt::Tensor { name, images })
            }
            "structure" => {
                self.next();
                let kind = self.ident()?;
                let Some(sig) = registry::structure(&kind.name) else {
                    return Err(DslError::new(ErrorKind::Syntax, kind.pos, format!("unknown structure kind '{}'", kind.name)));
                };
                let name = self.ident()?;
                let args_pos = self.pos();
                let args = self.ident_list()?;
                if args.len() != sig.args.len() {
                    return Err(DslError::new(
                        ErrorKind::Arity,
                        args_pos,
                        format!("structure {} takes {} arguments, got {}", sig.kind, sig.args.len(), args.len()),
                    ));
                }
                Ok(Stmt::Structure { kind, name, args })
            }
            "check" => {
                self.next();
                let name = self.ident()?;
                let Some(sig) = registry::check(&name.name) else {
                    return Err(DslError::new(ErrorKind::Syntax, name.pos, format!("unknown check '{}'", name.name)));
                };
                let args_pos = self.pos();
                let args = self.ident_list()?;
                if args.len() != sig.args.len() {
                    return Err(DslError::new(
                        ErrorKind::Arity,
                        args_pos,
                        format!("check {} takes {} arguments, got {}", sig.name, sig.args.len(), args.len()),
                    ));
                }
                let mut opts = Vec::new();
                if *self.peek() == Tok::LBracket {
                    self.next();
                    loop {
                        let key = self.ident()?;
                        self.expect(Tok::Eq)?;
                        let value = self.ident()?;
                        let Some((_, values)) = sig.opts.iter().find(|(k, _)| *k == key.name) else {
                            return Err(DslError::new(
                                ErrorKind::Syntax,
                                key.pos,
                                format!("check {} has no option '{}'", sig.name, key.name),
                            ));
                        };
                        if !values.contains(&value.name.as_str()) {
                            return Err(DslError::new(
                                ErrorKind::Syntax,
                                value.pos,
                                format!("option {} expects one of {}", key.name, values.join(", ")),
                            ));
                        }
                        opts.push(Opt { key, value });
                        if *self.peek() == Tok::Comma {
                            self.next();
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::RBracket)?;
                }
                Ok(Stmt::Check { name, args, opts })
            }
            _ => Err(DslError::new(ErrorKind::Syntax, kw_pos, format!("unknown statement '{kw}'"))),
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let pos = self.next().pos;
            let rhs = self.product()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), pos);
        }
    }

    fn product(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let pos = self.next().pos;
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), pos);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            let pos = self.next().pos;
            let e = self.unary()?;
            return Ok(Expr::Neg(Box::new(e), pos));
        }
        self.caret()
    }

    fn caret(&mut self) -> PResult<Expr> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::Caret {
            let pos = self.next().pos;
            let rhs = self.atom()?;
            lhs = Expr::Bin(BinOp::Caret, Box::new(lhs), Box::new(rhs), pos);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(Expr::Int(n, pos))
            }
            Tok::Partial(s) => {
                self.next();
                Ok(Expr::Partial(s, pos))
            }
            Tok::Ident(s) if s == "i" => {
                self.next();
                Ok(Expr::I(pos))
            }
            Tok::Ident(s) if s == "d" => {
                self.next();
                self.expect(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::D(Box::new(e), pos))
            }
            Tok::Ident(s) => {
                self.next();
                Ok(Expr::Name(s, pos))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

/// Parses scene text into a syntax tree; check names and arities are
/// validated here.
pub fn parse(text: &str) -> Result<SceneAst, DslError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0 };
    let mut stmts = Vec::new();
    while *p.peek() != Tok::Eof {
        stmts.push(p.stmt()?);
    }
    Ok(SceneAst { stmts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_scene() {
        let s = parse("chart M(x,y,z)\nform eta = d(z) - y*d(x)\ncheck contact(eta)").unwrap();
        assert_eq!(s.stmts.len(), 3);
        assert!(matches!(&s.stmts[2], Stmt::Check { name, .. } if name.name == "contact"));
    }

    #[test]
    fn precedence() {
        let s = parse("scalar a = -x^2*y").unwrap();
        let Stmt::Decl { expr, .. } = &s.stmts[0] else { panic!() };
        // (-(x^2)) * y
        let Expr::Bin(BinOp::Mul, l, _, _) = expr else { panic!("{expr:?}") };
        assert!(matches!(**l, Expr::Neg(ref inner, _) if matches!(**inner, Expr::Bin(BinOp::Caret, ..))));
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse("chart M(x,y,z)\ncheck frobnicate(a)").unwrap_err();
        assert_eq!((e.kind, e.pos.line, e.pos.col), (ErrorKind::Syntax, 2, 7));
        let e = parse("check contact(a, b)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Arity);
        let e = parse("form a = (d(x)").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (1, 15));
    }
}
