use super::lexer::Pos;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Power when the left side is a scalar, wedge otherwise.
    Caret,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Caret => "^",
        }
    }

    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Caret => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64, Pos),
    /// Coordinate or bound name.
    Name(String, Pos),
    /// The imaginary unit.
    I(Pos),
    Partial(String, Pos),
    D(Box<Expr>, Pos),
    Neg(Box<Expr>, Pos),
    Bin(BinOp, Box<Expr>, Box<Expr>, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Int(_, p)
            | Expr::Name(_, p)
            | Expr::I(p)
            | Expr::Partial(_, p)
            | Expr::D(_, p)
            | Expr::Neg(_, p)
            | Expr::Bin(_, _, _, p) => *p,
        }
    }

    pub fn precedence(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.precedence(),
            Expr::Neg(..) => 3,
            _ => 5,
        }
    }

    fn strip(&self) -> Expr {
        let z = Pos::default();
        match self {
            Expr::Int(n, _) => Expr::Int(*n, z),
            Expr::Name(s, _) => Expr::Name(s.clone(), z),
            Expr::I(_) => Expr::I(z),
            Expr::Partial(s, _) => Expr::Partial(s.clone(), z),
            Expr::D(e, _) => Expr::D(Box::new(e.strip()), z),
            Expr::Neg(e, _) => Expr::Neg(Box::new(e.strip()), z),
            Expr::Bin(op, a, b, _) => Expr::Bin(*op, Box::new(a.strip()), Box::new(b.strip()), z),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Scalar,
    Form,
    Vector,
    Bivector,
}

impl DeclKind {
    pub fn keyword(self) -> &'static str {
        match self {
            DeclKind::Scalar => "scalar",
            DeclKind::Form => "form",
            DeclKind::Vector => "vector",
            DeclKind::Bivector => "bivector",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Opt {
    pub key: Ident,
    pub value: Ident,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Chart { name: Ident, coords: Vec<Ident> },
    Decl { kind: DeclKind, name: Ident, expr: Expr },
    /// Images of coordinate fields; missing coordinates map to 0.
    Tensor { name: Ident, images: Vec<(Ident, Expr)> },
    Structure { kind: Ident, name: Ident, args: Vec<Ident> },
    Check { name: Ident, args: Vec<Ident>, opts: Vec<Opt> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SceneAst {
    pub stmts: Vec<Stmt>,
}

fn strip_ident(i: &Ident) -> Ident {
    Ident { name: i.name.clone(), pos: Pos::default() }
}

impl SceneAst {
    /// The same tree with every position zeroed, for structural comparison.
    pub fn without_positions(&self) -> SceneAst {
        let ids = |v: &[Ident]| v.iter().map(strip_ident).collect::<Vec<_>>();
        let stmts = self
            .stmts
            .iter()
            .map(|s| match s {
                Stmt::Chart { name, coords } => Stmt::Chart { name: strip_ident(name), coords: ids(coords) },
                Stmt::Decl { kind, name, expr } => {
                    Stmt::Decl { kind: *kind, name: strip_ident(name), expr: expr.strip() }
                }
                Stmt::Tensor { name, images } => Stmt::Tensor {
                    name: strip_ident(name),
                    images: images.iter().map(|(k, e)| (strip_ident(k), e.strip())).collect(),
                },
                Stmt::Structure { kind, name, args } => {
                    Stmt::Structure { kind: strip_ident(kind), name: strip_ident(name), args: ids(args) }
                }
                Stmt::Check { name, args, opts } => Stmt::Check {
                    name: strip_ident(name),
                    args: ids(args),
                    opts: opts.iter().map(|o| Opt { key: strip_ident(&o.key), value: strip_ident(&o.value) }).collect(),
                },
            })
            .collect();
        SceneAst { stmts }
    }
}
