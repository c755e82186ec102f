use std::fmt;

use super::lexer::Pos;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    UnboundName,
    TypeMismatch,
    Arity,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Syntax => "SyntaxError",
            ErrorKind::UnboundName => "UnboundName",
            ErrorKind::TypeMismatch => "TypeMismatch",
            ErrorKind::Arity => "ArityError",
        }
    }
}

/// A scene error anchored at a source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub msg: String,
}

impl DslError {
    pub fn new(kind: ErrorKind, pos: Pos, msg: impl Into<String>) -> Self {
        DslError { kind, pos, msg: msg.into() }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.pos.line, self.pos.col, self.kind.as_str(), self.msg)
    }
}

impl std::error::Error for DslError {}
