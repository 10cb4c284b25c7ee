//! Syntax tree. Identifiers are interned to `Name` ids by the parser.

use std::rc::Rc;

use crate::lexer::Punct;

pub type Name = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Let,
    Const,
    Var,
}

#[derive(Debug)]
pub struct Program {
    pub body: Vec<Stmt>,
    pub names: Vec<String>,
}

#[derive(Debug)]
pub struct FunctionDef {
    pub name: Option<Name>,
    pub params: Vec<Name>,
    pub body: Body,
    /// Slots the function scope needs: parameters plus distinct names
    /// declared at the top level of the body.
    pub declared_slots: usize,
}

#[derive(Debug)]
pub enum Body {
    Block(Vec<Stmt>),
    /// Arrow function with an expression body.
    Expr(Expr),
}

#[derive(Debug)]
pub struct ClassDef {
    pub name: Name,
    pub methods: Vec<(Name, Rc<FunctionDef>)>,
}

#[derive(Debug)]
pub enum Stmt {
    Decl {
        kind: DeclKind,
        name: Name,
        init: Option<Expr>,
    },
    Function(Rc<FunctionDef>),
    Class(Rc<ClassDef>),
    If {
        cond: Expr,
        then: Vec<Stmt>,
        otherwise: Option<Vec<Stmt>>,
    },
    While {
        cond: Expr,
        body: Vec<Stmt>,
    },
    For {
        init: Option<Box<Stmt>>,
        cond: Option<Expr>,
        update: Option<Expr>,
        body: Vec<Stmt>,
    },
    Return(Option<Expr>),
    Expr(Expr),
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    StrictEq,
    StrictNe,
}

impl BinOp {
    pub fn from_punct(p: Punct) -> Option<Self> {
        Some(match p {
            Punct::Plus => BinOp::Add,
            Punct::Minus => BinOp::Sub,
            Punct::Star => BinOp::Mul,
            Punct::Slash => BinOp::Div,
            Punct::Percent => BinOp::Rem,
            Punct::Lt => BinOp::Lt,
            Punct::Gt => BinOp::Gt,
            Punct::Le => BinOp::Le,
            Punct::Ge => BinOp::Ge,
            Punct::Eq => BinOp::Eq,
            Punct::Ne => BinOp::Ne,
            Punct::StrictEq => BinOp::StrictEq,
            Punct::StrictNe => BinOp::StrictNe,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnOp {
    Not,
    Neg,
    Plus,
    Typeof,
    Delete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogicOp {
    And,
    Or,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PropKey {
    Name(Name),
    Str(Rc<str>),
}

#[derive(Debug)]
pub struct Prop {
    pub key: PropKey,
    pub value: Expr,
    /// Written `key = value` instead of `key : value`.
    pub assign_form: bool,
}

#[derive(Debug)]
pub enum Expr {
    Num(f64),
    Str(Rc<str>),
    Bool(bool),
    Null,
    Ident(Name),
    Array(Vec<Expr>),
    Object(Vec<Prop>),
    Function(Rc<FunctionDef>),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Logic(LogicOp, Box<Expr>, Box<Expr>),
    Assign(Box<Expr>, Box<Expr>),
    /// `++x` / `x--`; `delta` is ±1.
    Update {
        target: Box<Expr>,
        delta: f64,
        prefix: bool,
    },
    Member(Box<Expr>, Name),
    Index(Box<Expr>, Box<Expr>),
    Call {
        callee: Box<Expr>,
        args: Vec<Expr>,
        /// A number literal that directly followed the argument list.
        trailing: Option<f64>,
    },
    New {
        callee: Box<Expr>,
        args: Vec<Expr>,
    },
}

impl Expr {
    pub fn is_assignable(&self) -> bool {
        matches!(self, Expr::Ident(_) | Expr::Member(..) | Expr::Index(..))
    }
}
