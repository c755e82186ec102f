use std::collections::HashMap;

use super::ast::{BinOp, DeclKind, Expr, Ident, SceneAst, Stmt};
use super::error::{DslError, ErrorKind};
use super::lexer::Pos;
use super::registry::{self, Ty};
use crate::e1::{EndoJ, Sign, SubBundle};
use crate::extcalc::{DiffForm, MultiVector, Tensor11};
use crate::structures::{
    gac_from_almost_contact, gac_from_cosymplectic, graph_eta, graph_jacobi, graph_omega_eta, jacobi_from_contact,
    sigma, AlmostContact, CosymplecticPair, JacobiPair,
};
use crate::symcore::{Chart, Scalar};

/// A typed scene binding.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Form(DiffForm),
    Vector(MultiVector),
    Tensor(Tensor11),
    Jacobi(JacobiPair),
    AlmostContact(AlmostContact),
    Cosymplectic(CosymplecticPair),
    Bundle(SubBundle),
    Endo(EndoJ),
    /// A structure whose construction raised an error; checks using it
    /// report that error.
    Failed(Ty, String),
}

impl Value {
    pub fn ty(&self) -> Ty {
        match self {
            Value::Scalar(_) => Ty::Scalar,
            Value::Form(f) => Ty::Form(f.degree()),
            Value::Vector(v) => Ty::Vector(v.degree()),
            Value::Tensor(_) => Ty::Tensor,
            Value::Jacobi(_) => Ty::Jacobi,
            Value::AlmostContact(_) => Ty::AlmostContact,
            Value::Cosymplectic(_) => Ty::Cosymplectic,
            Value::Bundle(_) => Ty::Bundle,
            Value::Endo(_) => Ty::Endo,
            Value::Failed(t, _) => *t,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckCall {
    pub name: String,
    pub args: Vec<String>,
    pub opts: Vec<(String, String)>,
}

impl CheckCall {
    /// `name(arg, ...)`, the record name in reports.
    pub fn label(&self) -> String {
        format!("{}({})", self.name, self.args.join(", "))
    }

    pub fn opt(&self, key: &str) -> Option<&str> {
        self.opts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// An elaborated scene: chart, typed bindings, and checks in order.
#[derive(Clone, Debug)]
pub struct Scene {
    pub chart: Chart,
    pub bindings: HashMap<String, Value>,
    pub order: Vec<String>,
    pub checks: Vec<CheckCall>,
}

impl Scene {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }
}

#[derive(Clone, Debug)]
enum EVal {
    S(Scalar),
    F(DiffForm),
    V(MultiVector),
}

fn mismatch(pos: Pos, msg: impl Into<String>) -> DslError {
    DslError::new(ErrorKind::TypeMismatch, pos, msg)
}

struct Elab {
    chart: Option<Chart>,
    bindings: HashMap<String, Value>,
    order: Vec<String>,
    checks: Vec<CheckCall>,
}

impl Elab {
    fn chart(&self, pos: Pos) -> Result<&Chart, DslError> {
        self.chart
            .as_ref()
            .ok_or_else(|| DslError::new(ErrorKind::Syntax, pos, "a chart must be declared first"))
    }

    fn dim(&self) -> usize {
        self.chart.as_ref().map_or(0, Chart::dim)
    }

    fn bind(&mut self, name: &Ident, v: Value) -> Result<(), DslError> {
        let chart = self.chart(name.pos)?;
        if chart.index_of(&name.name).is_ok() || name.name == "i" || name.name == "d" {
            return Err(DslError::new(ErrorKind::Syntax, name.pos, format!("'{}' is reserved", name.name)));
        }
        if self.bindings.contains_key(&name.name) {
            return Err(DslError::new(ErrorKind::Syntax, name.pos, format!("'{}' is already bound", name.name)));
        }
        self.bindings.insert(name.name.clone(), v);
        self.order.push(name.name.clone());
        Ok(())
    }

    fn lookup(&self, id: &Ident) -> Result<&Value, DslError> {
        self.bindings
            .get(&id.name)
            .ok_or_else(|| DslError::new(ErrorKind::UnboundName, id.pos, format!("'{}' is not bound", id.name)))
    }

    fn eval(&self, e: &Expr) -> Result<EVal, DslError> {
        let dim = self.dim();
        Ok(match e {
            Expr::Int(n, _) => EVal::S(Scalar::from_int(*n as i64)),
            Expr::I(_) => EVal::S(Scalar::i()),
            Expr::Name(s, pos) => {
                if let Ok(k) = self.chart(*pos)?.index_of(s) {
                    return Ok(EVal::S(Scalar::coord(k)));
                }
                match self.lookup(&Ident { name: s.clone(), pos: *pos })? {
                    Value::Scalar(v) => EVal::S(v.clone()),
                    Value::Form(v) => EVal::F(v.clone()),
                    Value::Vector(v) => EVal::V(v.clone()),
                    other => return Err(mismatch(*pos, format!("'{s}' is a {}, not usable in an expression", other.ty()))),
                }
            }
            Expr::Partial(s, pos) => {
                let k = self.chart(*pos)?.index_of(s).map_err(|_| {
                    DslError::new(ErrorKind::UnboundName, *pos, format!("'{s}' is not a coordinate"))
                })?;
                EVal::V(MultiVector::partial(dim, k))
            }
            Expr::D(inner, _) => match self.eval(inner)? {
                EVal::S(s) => EVal::F(DiffForm::function(dim, s).d()),
                EVal::F(f) => EVal::F(f.d()),
                EVal::V(_) => return Err(mismatch(inner.pos(), "d applies to scalars and forms")),
            },
            Expr::Neg(inner, _) => match self.eval(inner)? {
                EVal::S(s) => EVal::S(-s),
                EVal::F(f) => EVal::F(f.neg()),
                EVal::V(v) => EVal::V(v.neg()),
            },
            Expr::Bin(op, a, b, pos) => {
                if *op == BinOp::Caret {
                    if let Expr::Int(n, _) = **b {
                        if let EVal::S(s) = self.eval(a)? {
                            let n = u32::try_from(n).map_err(|_| mismatch(b.pos(), "exponent too large"))?;
                            return Ok(EVal::S(s.pow(n)));
                        }
                    }
                }
                let (l, r) = (self.eval(a)?, self.eval(b)?);
                binary(*op, l, r, *pos, dim)?
            }
        })
    }

    fn stmt(&mut self, st: &Stmt) -> Result<(), DslError> {
        match st {
            Stmt::Chart { name, coords } => {
                if self.chart.is_some() {
                    return Err(DslError::new(ErrorKind::Syntax, name.pos, "only one chart per scene"));
                }
                let names: Vec<&str> = coords.iter().map(|c| c.name.as_str()).collect();
                let chart = Chart::new(&names)
                    .map_err(|e| DslError::new(ErrorKind::Syntax, coords[0].pos, e.to_string()))?;
                self.chart = Some(chart);
            }
            Stmt::Decl { kind, name, expr } => {
                self.chart(name.pos)?;
                let v = self.eval(expr)?;
                let dim = self.dim();
                let pos = expr.pos();
                let value = match (kind, v) {
                    (DeclKind::Scalar, EVal::S(s)) => Value::Scalar(s),
                    (DeclKind::Form, EVal::F(f)) => Value::Form(f),
                    (DeclKind::Form, EVal::S(s)) => Value::Form(DiffForm::function(dim, s)),
                    (DeclKind::Vector, EVal::V(v)) if v.degree() == 1 => Value::Vector(v),
                    (DeclKind::Bivector, EVal::V(v)) if v.degree() == 2 => Value::Vector(v),
                    (DeclKind::Vector, EVal::S(s)) if s.is_zero() => Value::Vector(MultiVector::zero(dim, 1)),
                    (DeclKind::Bivector, EVal::S(s)) if s.is_zero() => Value::Vector(MultiVector::zero(dim, 2)),
                    (k, v) => {
                        let got = match v {
                            EVal::S(_) => Ty::Scalar,
                            EVal::F(f) => Ty::Form(f.degree()),
                            EVal::V(v) => Ty::Vector(v.degree()),
                        };
                        return Err(mismatch(pos, format!("{} declaration got a {got}", k.keyword())));
                    }
                };
                self.bind(name, value)?;
            }
            Stmt::Tensor { name, images } => {
                let chart = self.chart(name.pos)?.clone();
                let dim = chart.dim();
                let mut cols: Vec<Option<MultiVector>> = vec![None; dim];
                for (key, e) in images {
                    let k = chart.index_of(&key.name).map_err(|_| {
                        DslError::new(ErrorKind::UnboundName, key.pos, format!("'{}' is not a coordinate", key.name))
                    })?;
                    if cols[k].is_some() {
                        return Err(DslError::new(ErrorKind::Syntax, key.pos, format!("image of @{} given twice", key.name)));
                    }
                    cols[k] = Some(match self.eval(e)? {
                        EVal::V(v) if v.degree() == 1 => v,
                        EVal::S(s) if s.is_zero() => MultiVector::zero(dim, 1),
                        _ => return Err(mismatch(e.pos(), "tensor images must be vector fields")),
                    });
                }
                let images: Vec<MultiVector> =
                    cols.into_iter().map(|c| c.unwrap_or_else(|| MultiVector::zero(dim, 1))).collect();
                let t = Tensor11::from_images(&images).expect("images match the chart");
                self.bind(name, Value::Tensor(t))?;
            }
            Stmt::Structure { kind, name, args } => {
                self.chart(name.pos)?;
                let sig = registry::structure(&kind.name).expect("validated by the parser");
                let vals = self.typed_args(sig.args, args)?;
                let value = match build_structure(sig.kind, &vals) {
                    Ok(v) => v,
                    Err(msg) => Value::Failed(sig.result, msg),
                };
                self.bind(name, value)?;
            }
            Stmt::Check { name, args, opts } => {
                self.chart(name.pos)?;
                let sig = registry::check(&name.name).expect("validated by the parser");
                self.typed_args(sig.args, args)?;
                self.checks.push(CheckCall {
                    name: name.name.clone(),
                    args: args.iter().map(|a| a.name.clone()).collect(),
                    opts: opts.iter().map(|o| (o.key.name.clone(), o.value.name.clone())).collect(),
                });
            }
        }
        Ok(())
    }

    fn typed_args(&self, tys: &[Ty], args: &[Ident]) -> Result<Vec<Value>, DslError> {
        tys.iter()
            .zip(args)
            .map(|(t, a)| {
                let v = self.lookup(a)?;
                if v.ty() != *t {
                    return Err(mismatch(a.pos, format!("'{}' is a {}, expected a {t}", a.name, v.ty())));
                }
                Ok(v.clone())
            })
            .collect()
    }
}

fn binary(op: BinOp, l: EVal, r: EVal, pos: Pos, dim: usize) -> Result<EVal, DslError> {
    use EVal::*;
    let err = |m: &str| mismatch(pos, m.to_string());
    let geo = |e: crate::GeoError| mismatch(pos, e.to_string());
    Ok(match op {
        BinOp::Add | BinOp::Sub => {
            let sub = op == BinOp::Sub;
            match (l, r) {
                (S(a), S(b)) => S(if sub { &a - &b } else { &a + &b }),
                (F(a), F(b)) => F(if sub { a.sub(&b) } else { a.add(&b) }.map_err(geo)?),
                (V(a), V(b)) => V(if sub { a.sub(&b) } else { a.add(&b) }.map_err(geo)?),
                (S(a), F(b)) if b.degree() == 0 => {
                    let a = DiffForm::function(dim, a);
                    F(if sub { a.sub(&b) } else { a.add(&b) }.map_err(geo)?)
                }
                (F(a), S(b)) if a.degree() == 0 => {
                    let b = DiffForm::function(dim, b);
                    F(if sub { a.sub(&b) } else { a.add(&b) }.map_err(geo)?)
                }
                _ => return Err(err("cannot add values of different kinds")),
            }
        }
        BinOp::Mul => match (l, r) {
            (S(a), S(b)) => S(&a * &b),
            (S(s), F(f)) | (F(f), S(s)) => F(f.scale(&s)),
            (S(s), V(v)) | (V(v), S(s)) => V(v.scale(&s)),
            _ => return Err(err("'*' needs a scalar factor; use '^' for wedge products")),
        },
        BinOp::Div => {
            let S(s) = r else { return Err(err("only scalars can divide")) };
            let inv = s.inv().map_err(|_| err("division by zero"))?;
            match l {
                S(a) => S(&a * &inv),
                F(f) => F(f.scale(&inv)),
                V(v) => V(v.scale(&inv)),
            }
        }
        BinOp::Caret => match (l, r) {
            (F(a), F(b)) => F(a.wedge(&b).map_err(geo)?),
            (V(a), V(b)) => V(a.wedge(&b).map_err(geo)?),
            (S(s), F(f)) | (F(f), S(s)) => F(f.scale(&s)),
            (S(s), V(v)) | (V(v), S(s)) => V(v.scale(&s)),
            (S(_), S(_)) => return Err(err("exponent must be an integer literal")),
            _ => return Err(err("cannot wedge a form with a multivector")),
        },
    })
}

fn build_structure(kind: &str, v: &[Value]) -> Result<Value, String> {
    let s = |e: crate::GeoError| e.to_string();
    Ok(match (kind, v) {
        ("jacobi", [Value::Vector(pi), Value::Vector(e)]) => Value::Jacobi(JacobiPair::new(pi.clone(), e.clone()).map_err(s)?),
        ("almost_contact", [Value::Tensor(phi), Value::Vector(xi), Value::Form(eta)]) => {
            Value::AlmostContact(AlmostContact::new(phi.clone(), xi.clone(), eta.clone()).map_err(s)?)
        }
        ("cosymplectic", [Value::Form(w), Value::Form(eta)]) => {
            Value::Cosymplectic(CosymplecticPair::new(w.clone(), eta.clone()).map_err(s)?)
        }
        ("contact_jacobi", [Value::Form(eta)]) => Value::Jacobi(jacobi_from_contact(eta).map_err(s)?),
        ("graph_jacobi", [Value::Jacobi(j)]) => Value::Bundle(graph_jacobi(j)),
        ("graph_omega_eta", [Value::Form(w), Value::Form(eta)]) => Value::Bundle(graph_omega_eta(w, eta).map_err(s)?),
        ("graph_eta", [Value::Form(eta)]) => Value::Bundle(graph_eta(eta).map_err(s)?),
        ("gac_almost_contact", [Value::AlmostContact(a)]) => Value::Endo(gac_from_almost_contact(a).map_err(s)?.endo),
        ("bundle_almost_contact", [Value::AlmostContact(a)]) => Value::Bundle(gac_from_almost_contact(a).map_err(s)?.e),
        ("gac_cosymplectic", [Value::Cosymplectic(c)]) => Value::Endo(gac_from_cosymplectic(c).map_err(s)?.endo),
        ("bundle_cosymplectic", [Value::Cosymplectic(c)]) => Value::Bundle(gac_from_cosymplectic(c).map_err(s)?.e),
        ("eigenbundle", [Value::Endo(j)]) => Value::Bundle(j.eigenbundle(Sign::Plus).map_err(s)?),
        ("conjugate", [Value::Bundle(l)]) => Value::Bundle(l.conjugate().map_err(s)?),
        ("sigma", [Value::Bundle(l)]) => Value::Bundle(sigma(l)),
        (_, args) if args.iter().any(|a| matches!(a, Value::Failed(..))) => {
            let msg = args
                .iter()
                .find_map(|a| match a {
                    Value::Failed(_, m) => Some(m.clone()),
                    _ => None,
                })
                .unwrap_or_default();
            return Err(msg);
        }
        _ => unreachable!("argument types validated against the registry"),
    })
}

/// Type-checks a parsed scene and builds its bindings.
pub fn elaborate(ast: &SceneAst) -> Result<Scene, DslError> {
    let mut el = Elab { chart: None, bindings: HashMap::new(), order: Vec::new(), checks: Vec::new() };
    for st in &ast.stmts {
        el.stmt(st)?;
    }
    let chart = el
        .chart
        .ok_or_else(|| DslError::new(ErrorKind::Syntax, Pos { line: 1, col: 1 }, "scene declares no chart"))?;
    Ok(Scene { chart, bindings: el.bindings, order: el.order, checks: el.checks })
}
