use super::ast::{BinOp, Expr, SceneAst, Stmt};

fn wrap(e: &Expr, parens: bool) -> String {
    if parens {
        format!("({})", print_expr(e))
    } else {
        print_expr(e)
    }
}

pub fn print_expr(e: &Expr) -> String {
    match e {
        Expr::Int(n, _) => n.to_string(),
        Expr::Name(s, _) => s.clone(),
        Expr::I(_) => "i".into(),
        Expr::Partial(s, _) => format!("@{s}"),
        Expr::D(inner, _) => format!("d({})", print_expr(inner)),
        Expr::Neg(inner, _) => format!("-{}", wrap(inner, inner.precedence() < 3)),
        Expr::Bin(op, a, b, _) => {
            let p = op.precedence();
            // `^` operands are atoms; the other operators are left-associative
            let (la, rb) = if *op == BinOp::Caret {
                (a.precedence() < 4, b.precedence() < 5)
            } else {
                (a.precedence() < p, b.precedence() <= p)
            };
            let sep = if *op == BinOp::Caret || *op == BinOp::Mul || *op == BinOp::Div { "" } else { " " };
            format!("{}{sep}{}{sep}{}", wrap(a, la), op.symbol(), wrap(b, rb))
        }
    }
}

/// Canonical scene text; parsing it gives back the same tree.
pub fn print_scene(s: &SceneAst) -> String {
    let mut out = String::new();
    for st in &s.stmts {
        let line = match st {
            Stmt::Chart { name, coords } => {
                let c: Vec<&str> = coords.iter().map(|c| c.name.as_str()).collect();
                format!("chart {}({})", name.name, c.join(", "))
            }
            Stmt::Decl { kind, name, expr } => format!("{} {} = {}", kind.keyword(), name.name, print_expr(expr)),
            Stmt::Tensor { name, images } => {
                let mut t = format!("tensor11 {} {{", name.name);
                for (k, e) in images {
                    t.push_str(&format!(" {} -> {};", k.name, print_expr(e)));
                }
                t.push_str(" }");
                t
            }
            Stmt::Structure { kind, name, args } => {
                let a: Vec<&str> = args.iter().map(|c| c.name.as_str()).collect();
                format!("structure {} {}({})", kind.name, name.name, a.join(", "))
            }
            Stmt::Check { name, args, opts } => {
                let a: Vec<&str> = args.iter().map(|c| c.name.as_str()).collect();
                let mut t = format!("check {}({})", name.name, a.join(", "));
                if !opts.is_empty() {
                    let o: Vec<String> = opts.iter().map(|o| format!("{}={}", o.key.name, o.value.name)).collect();
                    t.push_str(&format!(" [{}]", o.join(", ")));
                }
                t
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
